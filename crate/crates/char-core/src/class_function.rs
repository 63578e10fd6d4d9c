use std::fmt;

use group_core::{Group, Section, Subgroup};

use crate::character::Character;
use crate::cyclotomic::{Cyclotomic, Rational};
use crate::error::CharError;

/// A class function on a group: one value per conjugacy class, all written
/// over the common modulus exp(G).
#[derive(Clone)]
pub struct ClassFunction {
    group: Group,
    values: Vec<Cyclotomic>,
}

impl ClassFunction {
    pub fn new(group: &Group, values: Vec<Cyclotomic>) -> ClassFunction {
        assert_eq!(values.len(), group.classes().len(), "one value per class");
        let m = group.exponent() as u32;
        let values = values.into_iter().map(|v| v.embed(lcm(m, v.modulus()))).collect();
        ClassFunction { group: group.clone(), values }
    }

    pub fn zero(group: &Group) -> ClassFunction {
        ClassFunction { group: group.clone(), values: vec![Cyclotomic::zero(); group.classes().len()] }
    }

    pub fn trivial(group: &Group) -> ClassFunction {
        ClassFunction { group: group.clone(), values: vec![Cyclotomic::one(); group.classes().len()] }
    }

    /// A linear character of the whole group as a class function.
    pub fn from_character(group: &Group, chi: &Character) -> ClassFunction {
        assert_eq!(chi.domain().order(), group.order(), "character must be defined on the whole group");
        let values = group.classes().iter().map(|c| chi.value_cyclotomic(c[0])).collect();
        ClassFunction::new(group, values)
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn value_at(&self, x: usize) -> &Cyclotomic {
        &self.values[self.group.class_of(x)]
    }

    pub fn degree(&self) -> &Cyclotomic {
        &self.values[0]
    }

    pub fn degree_int(&self) -> Option<i128> {
        self.values[0].as_integer()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Cyclotomic::is_zero)
    }

    fn zip(&self, other: &ClassFunction, f: impl Fn(&Cyclotomic, &Cyclotomic) -> Cyclotomic) -> ClassFunction {
        assert_eq!(self.group, other.group, "class functions on different groups");
        ClassFunction {
            group: self.group.clone(),
            values: self.values.iter().zip(&other.values).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn add(&self, other: &ClassFunction) -> ClassFunction {
        self.zip(other, Cyclotomic::add)
    }

    pub fn sub(&self, other: &ClassFunction) -> ClassFunction {
        self.zip(other, Cyclotomic::sub)
    }

    /// Pointwise product (tensor product of representations).
    pub fn mul(&self, other: &ClassFunction) -> ClassFunction {
        self.zip(other, Cyclotomic::mul)
    }

    pub fn scale(&self, n: i64) -> ClassFunction {
        ClassFunction { group: self.group.clone(), values: self.values.iter().map(|v| v.scale_int(n as i128)).collect() }
    }

    pub fn conj(&self) -> ClassFunction {
        ClassFunction { group: self.group.clone(), values: self.values.iter().map(Cyclotomic::conj).collect() }
    }

    /// Whether the class function is constant (= degree) on `sub`.
    pub fn is_trivial_on(&self, sub: &Subgroup) -> bool {
        sub.elements().iter().all(|&x| self.value_at(x) == self.degree())
    }

    /// ⟨self, other⟩ as an integer, if it is one.
    pub fn inner_int(&self, other: &ClassFunction) -> Option<i128> {
        inner_product(self, other).as_integer()
    }

    /// Σ coeffs[i]·basis[i]
    pub fn combination(group: &Group, basis: &[ClassFunction], coeffs: &[i64]) -> ClassFunction {
        basis.iter().zip(coeffs).filter(|(_, &c)| c != 0).fold(ClassFunction::zero(group), |acc, (b, &c)| acc.add(&b.scale(c)))
    }
}

impl PartialEq for ClassFunction {
    fn eq(&self, other: &Self) -> bool {
        self.group == other.group && self.values == other.values
    }
}

impl fmt::Debug for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.values).finish()
    }
}

fn lcm(a: u32, b: u32) -> u32 {
    num_integer::lcm(a, b)
}

/// (1/|G|) Σ_g a(g)·conj(b(g))
pub fn inner_product(a: &ClassFunction, b: &ClassFunction) -> Cyclotomic {
    assert_eq!(a.group, b.group, "class functions on different groups");
    let g = &a.group;
    let mut acc = Cyclotomic::zero();
    for (i, class) in g.classes().iter().enumerate() {
        if a.values[i].is_zero() || b.values[i].is_zero() {
            continue;
        }
        acc = acc.add(&a.values[i].mul(&b.values[i].conj()).scale_int(class.len() as i128));
    }
    acc.scale(Rational::new(1, g.order() as i128))
}

/// Ind_H^G χ for a linear character χ of a subgroup H of `g`.
pub fn induce(chi: &Character, g: &Group) -> Result<ClassFunction, CharError> {
    let h = chi.domain();
    if h.elements().last().is_some_and(|&x| x >= g.order()) {
        return Err(CharError::NotASubgroup);
    }
    let m = chi.modulus() as usize;
    let e = g.exponent() as u32;
    let mut counts = vec![vec![0i128; m]; g.classes().len()];
    for &x in h.elements() {
        counts[g.class_of(x)][chi.exponent_at(x) as usize] += 1;
    }
    let values = g
        .classes()
        .iter()
        .enumerate()
        .map(|(c, class)| {
            if counts[c].iter().all(|&n| n == 0) {
                return Cyclotomic::zero();
            }
            let centralizer = (g.order() / class.len()) as i128;
            Cyclotomic::from_counts(m as u32, &counts[c])
                .embed(e)
                .scale(Rational::new(centralizer, h.order() as i128))
        })
        .collect();
    Ok(ClassFunction::new(g, values))
}

/// Ind from the group of an embedding (top = H, trivial kernel) to its parent.
pub fn induce_class_function(cf: &ClassFunction, emb: &Section) -> ClassFunction {
    let g = emb.parent();
    let h = emb.top();
    let values = g
        .classes()
        .iter()
        .map(|class| {
            let mut acc = Cyclotomic::zero();
            for &x in class {
                if h.contains(x) {
                    acc = acc.add(cf.value_at(emb.project(x)));
                }
            }
            if acc.is_zero() {
                return acc;
            }
            let centralizer = (g.order() / class.len()) as i128;
            acc.scale(Rational::new(centralizer, h.order() as i128))
        })
        .collect();
    ClassFunction::new(g, values)
}

/// Restriction of a class function on the parent to the embedded subgroup.
pub fn restrict(cf: &ClassFunction, emb: &Section) -> ClassFunction {
    assert!(emb.kernel().is_trivial(), "restriction needs an embedding");
    let h = emb.group();
    let values = h.classes().iter().map(|c| cf.value_at(emb.lift(c[0])).clone()).collect();
    ClassFunction::new(h, values)
}
