use group_core::Group;

use crate::character::characters_of;
use crate::class_function::{induce, inner_product, ClassFunction};
use crate::cyclotomic::Cyclotomic;
use crate::error::CharError;

/// The irreducible characters of a group.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    group: Group,
    irreducibles: Vec<ClassFunction>,
}

impl CharacterTable {
    pub fn group(&self) -> &Group {
        &self.group
    }

    /// Sorted by degree, trivial character first.
    pub fn irreducibles(&self) -> &[ClassFunction] {
        &self.irreducibles
    }

    /// Integer coordinates of a virtual character, if it is one.
    pub fn decompose(&self, cf: &ClassFunction) -> Option<Vec<i64>> {
        let coords: Option<Vec<i64>> =
            self.irreducibles.iter().map(|rho| cf.inner_int(rho).map(|c| c as i64)).collect();
        let coords = coords?;
        (ClassFunction::combination(&self.group, &self.irreducibles, &coords) == *cf).then_some(coords)
    }
}

fn norm(cf: &ClassFunction) -> Option<i128> {
    cf.inner_int(cf)
}

/// Irreducibles by saturating the induced linear characters: every norm-one
/// induced character is irreducible, and remainders after removing known
/// constituents are searched for further norm-one combinations.
pub fn character_table(g: &Group) -> Result<CharacterTable, CharError> {
    let classes = g.classes().len();
    let mut induced: Vec<ClassFunction> = Vec::new();
    for h in g.lattice().class_reps() {
        for chi in characters_of(g, h) {
            let cf = induce(&chi, g)?;
            if !induced.contains(&cf) {
                induced.push(cf);
            }
        }
    }
    let mut irr: Vec<ClassFunction> = Vec::new();
    for cf in &induced {
        if norm(cf) == Some(1) && !irr.contains(cf) {
            irr.push(cf.clone());
        }
    }
    let complete = |irr: &[ClassFunction]| {
        let sum: i128 = irr.iter().map(|r| r.degree_int().unwrap_or(0).pow(2)).sum();
        irr.len() == classes && sum == g.order() as i128
    };
    let mut rounds = 0;
    while !complete(&irr) && rounds < 4 {
        rounds += 1;
        let remainders: Vec<ClassFunction> = induced
            .iter()
            .map(|cf| {
                irr.iter().fold(cf.clone(), |acc, rho| {
                    let c = inner_product(cf, rho).as_integer().unwrap_or(0) as i64;
                    acc.sub(&rho.scale(c))
                })
            })
            .filter(|r| !r.is_zero())
            .collect();
        let mut found = false;
        // single remainders, then differences of pairs
        for r in &remainders {
            if norm(r) == Some(1) && positive_degree(r) && !irr.contains(r) {
                irr.push(r.clone());
                found = true;
            }
        }
        if !found {
            'pairs: for a in &remainders {
                for b in &remainders {
                    let d = a.sub(b);
                    if norm(&d) == Some(1) && positive_degree(&d) && !irr.contains(&d) {
                        irr.push(d);
                        break 'pairs;
                    }
                }
            }
        }
    }
    if !complete(&irr) {
        return Err(CharError::IncompleteTable { found: irr.len(), classes });
    }
    irr.sort_by(|a, b| {
        let key = |cf: &ClassFunction| {
            (
                cf.degree_int().unwrap_or(0),
                !cf.values().iter().all(Cyclotomic::is_one),
                cf.values().iter().map(Cyclotomic::to_literal).collect::<Vec<_>>(),
            )
        };
        key(a).cmp(&key(b))
    });
    Ok(CharacterTable { group: g.clone(), irreducibles: irr })
}

fn positive_degree(cf: &ClassFunction) -> bool {
    cf.degree_int().is_some_and(|d| d > 0)
}
