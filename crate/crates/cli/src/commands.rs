use std::fmt::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use extend_engine::ValueGroup;
use group_core::exec::Strategy;
use group_core::{catalog, Group};
use relations::{generate_relations, Options, RelationKind, Witness};
use tame_arith::{root_number, Realization};

use crate::campaign::{self, Campaign, LoadedDelta};
use crate::checks::{self, element_inline, Settings};
use crate::error::CliError;
use crate::report::Report;
use crate::target::{elements_text, model_name, parse_model, resolve_group, NormalSelector};

#[derive(Debug, Parser)]
#[command(name = "monomial", version, about = "Monomial pairs, Brauer relations and tame root numbers")]
pub struct Cli {
    /// Run every batch on one thread.
    #[arg(long, global = true)]
    pub sequential: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The built-in groups.
    #[command(subcommand)]
    Catalog(CatalogCommand),
    #[command(subcommand)]
    Group(GroupCommand),
    #[command(subcommand)]
    Relations(RelationsCommand),
    #[command(subcommand)]
    Verify(VerifyCommand),
    #[command(subcommand)]
    Type3(Type3Command),
    #[command(subcommand)]
    Extend(ExtendCommand),
    #[command(subcommand)]
    Tame(TameCommand),
    #[command(subcommand)]
    Campaign(CampaignCommand),
}

#[derive(Debug, Args)]
pub struct Output {
    /// Write the result here (atomically) instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum CatalogCommand {
    List {
        #[arg(long)]
        max_order: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Debug, Subcommand)]
pub enum GroupCommand {
    /// Order, classes, subgroups and normal subgroups (with their #index selectors).
    Info {
        group: String,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Debug, Subcommand)]
pub enum RelationsCommand {
    /// The basic relations of the chosen kinds.
    Gens {
        group: String,
        #[arg(long, default_value = "e")]
        normal: String,
        #[arg(long, value_delimiter = ',', default_value = "I,II,III")]
        kinds: Vec<RelationKind>,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// Kernel of the Brauer map against the span of the basic relations.
    /// Without a group, every catalog group up to --max-order.
    Thm27 {
        group: Option<String>,
        #[arg(long, default_value = "all")]
        normal: String,
        #[arg(long, value_delimiter = ',', default_value = "I,II,III")]
        kinds: Vec<RelationKind>,
        #[arg(long, default_value_t = 27)]
        max_order: usize,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Debug, Subcommand)]
pub enum Type3Command {
    /// Classify every maximal subgroup.  Without a group, the whole catalog
    /// up to --max-order.
    Scan {
        group: Option<String>,
        #[arg(long)]
        max_order: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Debug, Subcommand)]
pub enum ExtendCommand {
    /// Conditions I-III, the extension and its uniqueness, for a Galois
    /// model or a delta file.
    Run {
        #[arg(long, conflicts_with_all = ["group", "delta"])]
        model: Option<String>,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        level: i64,
        #[arg(long, requires = "delta")]
        group: Option<String>,
        #[arg(long, requires = "group")]
        delta: Option<PathBuf>,
        #[arg(long, default_value = "e")]
        normal: String,
        #[arg(long)]
        full_kernel: bool,
        /// Also check the λ properties and tower identities.
        #[arg(long)]
        towers: bool,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Debug, Subcommand)]
pub enum TameCommand {
    /// Δ(K, χ∘N)·∏Δ(F, μ) = ∏Δ(F, χμ) for every tame χ of F.
    Dh1 {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        ell: u64,
        /// Only the totally ramified extension (needs ℓ | q − 1).
        #[arg(long)]
        ramified: bool,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        level: i64,
        #[command(flatten)]
        output: Output,
    },
    /// The type-III identity for ℓ ∤ q − 1.
    Dh3 {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        ell: u64,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        level: i64,
        #[command(flatten)]
        output: Output,
    },
    /// The Galois group, fixed fields, local characters and Δ of a model.
    GaloisModel {
        #[arg(long)]
        model: String,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        level: i64,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Debug, Subcommand)]
pub enum CampaignCommand {
    Run {
        file: PathBuf,
        /// Overrides the campaign's own `output` line.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// What a command produced: text, where it goes, and whether every check
/// passed.
#[derive(Debug)]
pub struct Outcome {
    pub text: String,
    pub out: Option<PathBuf>,
    pub passed: bool,
}

impl Outcome {
    fn info(text: String, output: Output) -> Outcome {
        Outcome { text, out: output.out, passed: true }
    }

    fn report(report: Report, out: Option<PathBuf>) -> Outcome {
        Outcome { passed: report.passed(), text: report.render(), out }
    }
}

fn catalog_groups(max_order: Option<usize>) -> Vec<Group> {
    catalog::entries().iter().map(|e| e.build()).filter(|g| max_order.is_none_or(|m| g.order() <= m)).collect()
}

fn label(g: &Group) -> String {
    g.name().unwrap_or("unnamed").to_string()
}

fn witness_text(w: &Witness) -> String {
    match w {
        Witness::TypeI { k, chi } => format!("K={} chi={}", elements_text(k), chi.to_literal()),
        Witness::TypeII { z, eta, first, second } => format!(
            "Z={} eta={} first={} second={}",
            elements_text(z),
            eta.to_literal(),
            first.to_literal(),
            second.to_literal()
        ),
        Witness::TypeIII { h, core, complement, chi } => format!(
            "H={} K={} C={} chi={}",
            elements_text(h),
            elements_text(core),
            elements_text(complement),
            chi.to_literal()
        ),
    }
}

fn group_info(g: &Group) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "name {}", label(g));
    let _ = writeln!(out, "order {}", g.order());
    let _ = writeln!(out, "abelian {} solvable {} exponent {}", g.is_abelian(), g.is_solvable(), g.exponent());
    let _ = writeln!(out, "conjugacy classes {}", g.classes().len());
    let _ = writeln!(out, "subgroups {} in {} classes", g.subgroups().len(), g.lattice().classes().len());
    let _ = writeln!(out, "center {}", elements_text(&g.center()));
    let _ = writeln!(out, "derived {}", elements_text(&g.derived_subgroup(&g.whole())));
    for (i, n) in g.normal_subgroups().iter().enumerate() {
        let _ = writeln!(out, "normal #{i} order {} {}", n.order(), elements_text(n));
    }
    out
}

fn galois_model_text(r: &Realization) -> Result<String, CliError> {
    let g = r.group();
    let name = model_name(r.model());
    let mut out = String::new();
    let _ = writeln!(out, "model {name} level {} group {} order {}", r.base().level(), label(g), g.order());
    let delta = r.delta().map_err(|e| CliError::module(&name, e))?;
    for class in delta.classes() {
        let chi = class.character();
        let local = r.local_character(chi).map_err(|e| CliError::module(&name, e))?;
        let k = local.field();
        let (num, den) = local.uniformizer_value().fraction();
        let value = root_number(&local);
        let _ = writeln!(
            out,
            "H={} chi={} field e={} f={} unit={} residue s={} z={num}/{den} delta {}",
            elements_text(chi.domain()),
            chi.to_literal(),
            k.ramification(),
            k.inertia_degree(),
            k.unit_log(),
            local.residue_exponent(),
            value.to_text()
        );
    }
    Ok(out)
}

pub fn execute(cli: Cli) -> Result<Outcome, CliError> {
    let strategy = if cli.sequential { Strategy::Sequential } else { Strategy::Parallel };
    let settings = Settings { strategy, ..Settings::default() };
    Ok(match cli.command {
        Command::Catalog(CatalogCommand::List { max_order, output }) => {
            let mut text = String::new();
            for e in catalog::entries() {
                let g = e.build();
                if max_order.is_none_or(|m| g.order() <= m) {
                    let _ = writeln!(text, "{} {} {}", e.name, g.order(), e.description);
                }
            }
            Outcome::info(text, output)
        }
        Command::Group(GroupCommand::Info { group, output }) => Outcome::info(group_info(&resolve_group(&group)?), output),
        Command::Relations(RelationsCommand::Gens { group, normal, kinds, output }) => {
            let g = resolve_group(&group)?;
            let mut text = String::new();
            for n in normal.parse::<NormalSelector>()?.resolve(&g)? {
                let options = Options { strategy, ..Options::default() };
                let rels = generate_relations(&g, &n, &kinds, options).map_err(|e| CliError::module(&group, e))?;
                let _ = writeln!(text, "N={} relations {}", elements_text(&n), rels.len());
                for r in rels {
                    let _ = writeln!(
                        text,
                        "{} B={} {} :: {}",
                        r.kind,
                        elements_text(&r.b),
                        witness_text(&r.witness),
                        element_inline(&r.element)
                    );
                }
            }
            Outcome::info(text, output)
        }
        Command::Verify(VerifyCommand::Thm27 { group, normal, kinds, max_order, output }) => {
            let settings = Settings { kinds, ..settings };
            let selector: NormalSelector = normal.parse()?;
            let groups = match group {
                Some(name) => vec![resolve_group(&name)?],
                None => catalog_groups(Some(max_order)),
            };
            let mut lines = Vec::new();
            for g in &groups {
                lines.extend(checks::thm27(&label(g), g, &selector.resolve(g)?, &settings));
            }
            Outcome::report(Report::new(lines), output.out)
        }
        Command::Type3(Type3Command::Scan { group, max_order, output }) => {
            let groups = match group {
                Some(name) => vec![resolve_group(&name)?],
                None => catalog_groups(max_order),
            };
            let lines = groups.iter().flat_map(|g| checks::type3_scan(&label(g), g)).collect();
            Outcome::report(Report::new(lines), output.out)
        }
        Command::Extend(ExtendCommand::Run { model, level, group, delta, normal, full_kernel, towers, output }) => {
            let settings = Settings { full_kernel, ..settings };
            let mut lines = Vec::new();
            if let Some(spec) = model {
                let m = parse_model(&spec)?;
                let target = format!("model={} level={level}", model_name(m));
                let d = Realization::new(m, level).and_then(|r| r.delta()).map_err(|e| CliError::module(&target, e))?;
                lines.extend(checks::extend_lines(&target, &d, &settings));
                if towers {
                    lines.extend(checks::tower_lines(&target, &d));
                }
            } else if let (Some(name), Some(path)) = (group, delta) {
                let g = resolve_group(&name)?;
                let normals = normal.parse::<NormalSelector>()?.resolve(&g)?;
                let [n] = normals.as_slice() else { return Err(CliError::module(&name, "a delta file needs a single N")) };
                let text = std::fs::read_to_string(&path).map_err(|e| CliError::io(&path, e))?;
                let d = LoadedDelta::parse(&text, &g, n)?;
                lines.extend(d.extend_lines(&name, &settings));
                if towers {
                    lines.extend(d.tower_lines(&name));
                }
            } else {
                return Err(CliError::module("extend run", "give --model, or --group with --delta"));
            }
            Outcome::report(Report::new(lines), output.out)
        }
        Command::Tame(TameCommand::Dh1 { q, ell, ramified, level, output }) => {
            let target = format!("q={q} ell={ell} level={level}");
            Outcome::report(Report::new(checks::dh1(&target, q, ell, level, ramified, &settings)), output.out)
        }
        Command::Tame(TameCommand::Dh3 { q, ell, level, output }) => {
            let target = format!("q={q} ell={ell} level={level}");
            Outcome::report(Report::new(checks::dh3(&target, q, ell, level, &settings)), output.out)
        }
        Command::Tame(TameCommand::GaloisModel { model, level, output }) => {
            let m = parse_model(&model)?;
            let r = Realization::new(m, level).map_err(|e| CliError::module(&model, e))?;
            Outcome::info(galois_model_text(&r)?, output)
        }
        Command::Campaign(CampaignCommand::Run { file, out }) => {
            let c = Campaign::load(&file)?;
            let base = file.parent().unwrap_or(Path::new("."));
            let targets = c.resolve(base)?;
            let report = campaign::run(&targets, &c.checks, &settings);
            let out = out.or_else(|| c.output.map(|p| if p.is_absolute() { p } else { base.join(p) }));
            Outcome::report(report, out)
        }
    })
}
