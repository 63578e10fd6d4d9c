//! Line-oriented campaign files:
//!
//! ```text
//! # comment
//! target S3 N=e
//! target C3:C4 N=all
//! target D4 N=e delta=d4.delta
//! target model=s3 level=1
//! target q=2 ell=3
//! check thm2.7 type3
//! check dh3
//! output report.txt
//! ```

use std::path::{Path, PathBuf};
use std::str::FromStr;

use extend_engine::{DeltaFunction, FreeAbelian};
use group_core::exec;
use group_core::{Group, Subgroup};
use tame_arith::{GaloisModel, Realization, RootValue};

use crate::checks::{dh1, dh3, extend_lines, thm27, tower_lines, type3_scan, Settings};
use crate::error::CliError;
use crate::report::{Line, Report, Verdict};
use crate::target::{model_name, parse_model, resolve_group, NormalSelector};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    Thm27,
    Type3,
    Extend,
    Dh1,
    Dh3,
    Towers,
}

impl Check {
    pub fn name(self) -> &'static str {
        match self {
            Check::Thm27 => "thm2.7",
            Check::Type3 => "type3",
            Check::Extend => "extend",
            Check::Dh1 => "dh1",
            Check::Dh3 => "dh3",
            Check::Towers => "towers",
        }
    }
}

impl FromStr for Check {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "thm2.7" | "thm27" => Check::Thm27,
            "type3" => Check::Type3,
            "extend" => Check::Extend,
            "dh1" => Check::Dh1,
            "dh3" => Check::Dh3,
            "towers" => Check::Towers,
            other => return Err(format!("unknown check {other:?}")),
        })
    }
}

/// A target as written in the campaign file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TargetSpec {
    Group { name: String, normal: NormalSelector, delta: Option<PathBuf> },
    Model { model: GaloisModel, level: i64 },
    Tame { q: u64, ell: u64, level: i64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Campaign {
    /// Targets with the line they came from.
    pub targets: Vec<(usize, TargetSpec)>,
    pub checks: Vec<Check>,
    pub output: Option<PathBuf>,
}

fn parse_target(words: &[&str]) -> Result<TargetSpec, String> {
    let mut fields = std::collections::BTreeMap::new();
    let mut bare = Vec::new();
    for w in words {
        match w.split_once('=') {
            Some((k, v)) => {
                if fields.insert(k.to_string(), v.to_string()).is_some() {
                    return Err(format!("repeated field {k}"));
                }
            }
            None => bare.push(w.to_string()),
        }
    }
    let level = fields.remove("level").map(|v| v.parse::<i64>().map_err(|_| "bad level".to_string())).transpose()?.unwrap_or(0);
    let number = |fields: &mut std::collections::BTreeMap<String, String>, k: &str| -> Result<u64, String> {
        fields.remove(k).ok_or(format!("missing {k}="))?.parse().map_err(|_| format!("bad {k}"))
    };
    let spec = if let Some(m) = fields.remove("model") {
        TargetSpec::Model { model: parse_model(&m).map_err(|e| e.to_string())?, level }
    } else if fields.contains_key("q") {
        TargetSpec::Tame { q: number(&mut fields, "q")?, ell: number(&mut fields, "ell")?, level }
    } else {
        let name = match bare.as_slice() {
            [name] => name.clone(),
            _ => return Err("expected one group name or file".into()),
        };
        let normal = match fields.remove("N") {
            Some(s) => s.parse().map_err(|e: CliError| e.to_string())?,
            None => NormalSelector::Trivial,
        };
        let delta = fields.remove("delta").map(PathBuf::from);
        bare.clear();
        TargetSpec::Group { name, normal, delta }
    };
    if let Some(k) = fields.keys().next() {
        return Err(format!("unexpected field {k}"));
    }
    if !bare.is_empty() && !matches!(spec, TargetSpec::Group { .. }) {
        return Err(format!("unexpected word {}", bare[0]));
    }
    Ok(spec)
}

impl Campaign {
    pub fn parse(text: &str) -> Result<Campaign, CliError> {
        let mut campaign = Campaign { targets: Vec::new(), checks: Vec::new(), output: None };
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let err = |message: String| CliError::Campaign { line, message };
            // `#` opens a comment at the start of a word; `N=#1` is a selector
            let cut = raw.char_indices().find(|&(i, c)| c == '#' && (i == 0 || raw[..i].ends_with(char::is_whitespace)));
            let content = cut.map_or(raw, |(i, _)| &raw[..i]).trim();
            let words: Vec<&str> = content.split_whitespace().collect();
            match words.split_first() {
                None => {}
                Some((&"target", rest)) => campaign.targets.push((line, parse_target(rest).map_err(err)?)),
                Some((&"check", rest)) if !rest.is_empty() => {
                    for w in rest {
                        let c: Check = w.parse().map_err(err)?;
                        if !campaign.checks.contains(&c) {
                            campaign.checks.push(c);
                        }
                    }
                }
                Some((&"output", [path])) => campaign.output = Some(PathBuf::from(path)),
                Some((word, _)) => return Err(err(format!("unexpected {word:?}"))),
            }
        }
        Ok(campaign)
    }

    pub fn load(path: &Path) -> Result<Campaign, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        Campaign::parse(&text)
    }

    /// Resolve every target, reading group and delta files; nothing runs
    /// before this succeeds.  Relative paths are taken from `base`.
    pub fn resolve(&self, base: &Path) -> Result<Vec<Target>, CliError> {
        self.targets
            .iter()
            .map(|(line, spec)| {
                Target::resolve(spec, base).map_err(|e| CliError::Campaign { line: *line, message: e.to_string() })
            })
            .collect()
    }
}

#[derive(Clone)]
pub enum LoadedDelta {
    Root(DeltaFunction<RootValue>),
    Free(DeltaFunction<FreeAbelian>),
}

impl LoadedDelta {
    /// Values are read as exact root numbers, or failing that as words in
    /// free symbols.
    pub fn parse(text: &str, g: &Group, n: &Subgroup) -> Result<LoadedDelta, CliError> {
        match DeltaFunction::<RootValue>::parse(text, g, n) {
            Ok(d) => Ok(LoadedDelta::Root(d)),
            Err(root_err) => DeltaFunction::<FreeAbelian>::parse(text, g, n)
                .map(LoadedDelta::Free)
                .map_err(|free_err| CliError::module("delta", format!("{root_err}; as free symbols: {free_err}"))),
        }
    }

    pub fn extend_lines(&self, target: &str, settings: &Settings) -> Vec<Line> {
        match self {
            LoadedDelta::Root(d) => extend_lines(target, d, settings),
            LoadedDelta::Free(d) => extend_lines(target, d, settings),
        }
    }

    pub fn tower_lines(&self, target: &str) -> Vec<Line> {
        match self {
            LoadedDelta::Root(d) => tower_lines(target, d),
            LoadedDelta::Free(d) => tower_lines(target, d),
        }
    }
}

#[derive(Clone)]
pub enum TargetKind {
    Group { group: Group, normals: Vec<Subgroup>, delta: Option<LoadedDelta> },
    Model { realization: Box<Realization>, delta: DeltaFunction<RootValue> },
    Tame { q: u64, ell: u64, level: i64 },
}

#[derive(Clone)]
pub struct Target {
    pub label: String,
    pub kind: TargetKind,
}

fn relative(base: &Path, p: &Path) -> PathBuf {
    if p.is_absolute() { p.to_path_buf() } else { base.join(p) }
}

impl Target {
    pub fn resolve(spec: &TargetSpec, base: &Path) -> Result<Target, CliError> {
        Ok(match spec {
            TargetSpec::Group { name, normal, delta } => {
                let group = match resolve_group(name) {
                    Err(CliError::UnknownGroup(_)) => resolve_group(&relative(base, Path::new(name)).to_string_lossy())
                        .map_err(|_| CliError::UnknownGroup(name.clone()))?,
                    other => other?,
                };
                let normals = normal.resolve(&group)?;
                let delta = match delta {
                    None => None,
                    Some(p) => {
                        let [n] = normals.as_slice() else {
                            return Err(CliError::module(name, "a delta file needs a single N"));
                        };
                        let path = relative(base, p);
                        let text = std::fs::read_to_string(&path).map_err(|e| CliError::io(&path, e))?;
                        Some(LoadedDelta::parse(&text, &group, n)?)
                    }
                };
                Target { label: name.clone(), kind: TargetKind::Group { group, normals, delta } }
            }
            TargetSpec::Model { model, level } => {
                let label = format!("model={} level={level}", model_name(*model));
                let realization = Realization::new(*model, *level).map_err(|e| CliError::module(&label, e))?;
                let delta = realization.delta().map_err(|e| CliError::module(&label, e))?;
                Target { label, kind: TargetKind::Model { realization: Box::new(realization), delta } }
            }
            TargetSpec::Tame { q, ell, level } => {
                Target { label: format!("q={q} ell={ell} level={level}"), kind: TargetKind::Tame { q: *q, ell: *ell, level: *level } }
            }
        })
    }

    pub fn run(&self, check: Check, settings: &Settings) -> Vec<Line> {
        let t = self.label.as_str();
        let skip = |why: &str| vec![Line::new(t, check.name(), "-", Verdict::Skip, why)];
        match (&self.kind, check) {
            (TargetKind::Group { group, normals, .. }, Check::Thm27) => thm27(t, group, normals, settings),
            (TargetKind::Group { group, .. }, Check::Type3) => type3_scan(t, group),
            (TargetKind::Group { delta: Some(d), .. }, Check::Extend) => d.extend_lines(t, settings),
            (TargetKind::Group { delta: Some(d), .. }, Check::Towers) => d.tower_lines(t),
            (TargetKind::Group { delta: None, .. }, Check::Extend | Check::Towers) => skip("no delta file"),
            (TargetKind::Model { realization, .. }, Check::Thm27) => {
                let g = realization.group();
                thm27(t, g, &[g.trivial()], settings)
            }
            (TargetKind::Model { realization, .. }, Check::Type3) => type3_scan(t, realization.group()),
            (TargetKind::Model { delta, .. }, Check::Extend) => extend_lines(t, delta, settings),
            (TargetKind::Model { delta, .. }, Check::Towers) => tower_lines(t, delta),
            (TargetKind::Tame { q, ell, level }, Check::Dh1) => dh1(t, *q, *ell, *level, false, settings),
            (TargetKind::Tame { q, ell, level }, Check::Dh3) => dh3(t, *q, *ell, *level, settings),
            (TargetKind::Tame { .. }, _) => skip("not a group target"),
            (_, Check::Dh1 | Check::Dh3) => skip("not a tame target"),
        }
    }
}

/// Every (target, check) item, in parallel; lines are ordered by target,
/// then by check.
pub fn run(targets: &[Target], checks: &[Check], settings: &Settings) -> Report {
    let items: Vec<(&Target, Check)> = targets.iter().flat_map(|t| checks.iter().map(move |&c| (t, c))).collect();
    Report::new(exec::flat_map(settings.strategy, &items, |(t, c)| t.run(*c, settings)))
}
