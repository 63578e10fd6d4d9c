use std::path::Path;
use std::str::FromStr;

use group_core::{catalog, load_group, Elem, Group, Subgroup};
use tame_arith::GaloisModel;

use crate::error::CliError;

/// A catalog name, or a path to a group file.
pub fn resolve_group(name: &str) -> Result<Group, CliError> {
    if let Ok(g) = catalog::by_name(name) {
        return Ok(g);
    }
    let path = Path::new(name);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        let g = load_group(&text).map_err(|e| CliError::module(name, e))?;
        return Ok(if g.name().is_some() { g } else { g.with_name(name) });
    }
    Err(CliError::UnknownGroup(name.to_string()))
}

/// Which normal subgroups N a check runs over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NormalSelector {
    Trivial,
    Whole,
    Center,
    Derived,
    All,
    /// Position in `Group::normal_subgroups`.
    Index(usize),
    Elements(Vec<Elem>),
}

impl FromStr for NormalSelector {
    type Err = CliError;

    fn from_str(text: &str) -> Result<Self, CliError> {
        let bad = |reason: &str| CliError::Selector { selector: text.to_string(), reason: reason.to_string() };
        let inner = text.trim().trim_start_matches('{').trim_end_matches('}').trim();
        Ok(match inner {
            "e" | "1" | "trivial" => NormalSelector::Trivial,
            "G" | "whole" => NormalSelector::Whole,
            "Z" | "center" => NormalSelector::Center,
            "D" | "derived" => NormalSelector::Derived,
            "all" => NormalSelector::All,
            s if s.starts_with('#') => NormalSelector::Index(s[1..].parse().map_err(|_| bad("expected #<index>"))?),
            s => NormalSelector::Elements(
                s.split(',').map(|x| x.trim().parse()).collect::<Result<_, _>>().map_err(|_| bad("expected element list"))?,
            ),
        })
    }
}

impl NormalSelector {
    pub fn resolve(&self, g: &Group) -> Result<Vec<Subgroup>, CliError> {
        let bad = |reason: &str| CliError::Selector { selector: format!("{self:?}"), reason: reason.to_string() };
        Ok(match self {
            NormalSelector::Trivial => vec![g.trivial()],
            NormalSelector::Whole => vec![g.whole()],
            NormalSelector::Center => vec![g.center()],
            NormalSelector::Derived => vec![g.derived_subgroup(&g.whole())],
            NormalSelector::All => g.normal_subgroups(),
            NormalSelector::Index(i) => {
                vec![g.normal_subgroups().get(*i).cloned().ok_or_else(|| bad("index out of range"))?]
            }
            NormalSelector::Elements(elems) => {
                let n = g.subgroup(elems).map_err(|e| bad(&e.to_string()))?;
                if !g.is_normal(&n) {
                    return Err(bad("not a normal subgroup"));
                }
                vec![n]
            }
        })
    }
}

/// `s3`, `unramified:Q:N`, `kummer:Q:M`, `bicyclic:Q:L` or `metacyclic:Q:L`.
pub fn parse_model(text: &str) -> Result<GaloisModel, CliError> {
    let bad = || CliError::Model(text.to_string());
    if text == "s3" {
        return Ok(GaloisModel::Metacyclic { q: 2, ell: 3 });
    }
    let parts: Vec<&str> = text.split(':').collect();
    let [kind, q, n] = parts.as_slice() else { return Err(bad()) };
    let q: u64 = q.parse().map_err(|_| bad())?;
    let n: u64 = n.parse().map_err(|_| bad())?;
    Ok(match *kind {
        "unramified" => GaloisModel::Unramified { q, degree: n },
        "kummer" => GaloisModel::Kummer { q, degree: n },
        "bicyclic" => GaloisModel::Bicyclic { q, ell: n },
        "metacyclic" => GaloisModel::Metacyclic { q, ell: n },
        _ => return Err(bad()),
    })
}

pub fn model_name(model: GaloisModel) -> String {
    match model {
        GaloisModel::Unramified { q, degree } => format!("unramified:{q}:{degree}"),
        GaloisModel::Kummer { q, degree } => format!("kummer:{q}:{degree}"),
        GaloisModel::Bicyclic { q, ell } => format!("bicyclic:{q}:{ell}"),
        GaloisModel::Metacyclic { q, ell } => format!("metacyclic:{q}:{ell}"),
    }
}

pub fn elements_text(h: &Subgroup) -> String {
    let e: Vec<String> = h.elements().iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", e.join(","))
}
