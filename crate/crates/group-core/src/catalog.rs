//! Built-in groups, addressed by name.

use std::collections::HashMap;
use std::hash::Hash;

use crate::error::GroupError;
use crate::group::Group;

/// One catalog entry.
#[derive(Clone, Copy, Debug)]
pub struct Entry {
    pub name: &'static str,
    pub description: &'static str,
    build: fn() -> Group,
}

impl Entry {
    pub fn build(&self) -> Group {
        (self.build)()
    }
}

macro_rules! cyclic_entries {
    ($($n:literal),*) => {
        [$(Entry { name: concat!("C", $n), description: concat!("cyclic group of order ", $n), build: || cyclic($n) }),*]
    };
}

/// The distinct catalog groups in a fixed order.
pub fn entries() -> Vec<Entry> {
    let mut out: Vec<Entry> = cyclic_entries!(1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16).to_vec();
    out.extend([
        Entry { name: "C2xC2", description: "Klein four-group", build: || direct_product(&cyclic(2), &cyclic(2), "C2xC2") },
        Entry { name: "C3xC3", description: "elementary abelian of order 9", build: || direct_product(&cyclic(3), &cyclic(3), "C3xC3") },
        Entry { name: "S3", description: "symmetric group on 3 points, C3:C2", build: || semidirect(3, 2, 2, "S3") },
        Entry { name: "D4", description: "dihedral group of order 8", build: || semidirect(4, 2, 3, "D4") },
        Entry { name: "Q8", description: "quaternion group", build: quaternion },
        Entry { name: "D6", description: "dihedral group of order 12", build: || semidirect(6, 2, 5, "D6") },
        Entry { name: "C3:C4", description: "dicyclic group of order 12", build: || semidirect(3, 4, 2, "C3:C4") },
        Entry { name: "A4", description: "alternating group on 4 points", build: alternating4 },
        Entry { name: "C5:C4", description: "Frobenius group of order 20", build: || frobenius(5, 4) },
        Entry { name: "C7:C3", description: "Frobenius group of order 21", build: || frobenius(7, 3) },
        Entry { name: "S4", description: "symmetric group on 4 points", build: symmetric4 },
        Entry { name: "Heis27", description: "Heisenberg group of order 27", build: heisenberg27 },
        Entry { name: "C7:C6", description: "Frobenius group of order 42", build: || frobenius(7, 6) },
        Entry { name: "C13:C3", description: "Frobenius group of order 39", build: || frobenius(13, 3) },
    ]);
    out
}

/// Look up a group by name.  `C3:C2` is accepted for `S3`.
pub fn by_name(name: &str) -> Result<Group, GroupError> {
    let canonical = match name {
        "C3:C2" => "S3",
        "V4" => "C2xC2",
        other => other,
    };
    entries()
        .into_iter()
        .find(|e| e.name == canonical)
        .map(|e| e.build())
        .ok_or_else(|| GroupError::UnknownGroup(name.to_string()))
}

/// Build a group from an element list (identity first) and a multiplication.
pub fn from_elements<T, F>(elements: Vec<T>, mul: F, name: &str) -> Group
where
    T: Clone + Eq + Hash,
    F: Fn(&T, &T) -> T,
{
    let index: HashMap<T, usize> = elements.iter().cloned().enumerate().map(|(i, x)| (x, i)).collect();
    let rows = elements
        .iter()
        .map(|a| elements.iter().map(|b| index[&mul(a, b)]).collect())
        .collect();
    Group::from_table(rows, Some(name.to_string())).expect("catalog multiplication is a group law")
}

pub fn cyclic(n: usize) -> Group {
    from_elements((0..n).collect(), |a, b| (a + b) % n, &format!("C{n}"))
}

/// `C_l ⋊ C_m` where the generator of `C_m` acts by `a ↦ r·a`.
/// Element `(a, b)` has index `b·l + a`.
pub fn semidirect(l: usize, m: usize, r: usize, name: &str) -> Group {
    assert_eq!(mod_pow(r, m, l), 1 % l, "r^m must be 1 mod l");
    let elements: Vec<(usize, usize)> = (0..m).flat_map(|b| (0..l).map(move |a| (a, b))).collect();
    from_elements(elements, |&(a1, b1), &(a2, b2)| ((a1 + mod_pow(r, b1, l) * a2) % l, (b1 + b2) % m), name)
}

/// The Frobenius group `C_l ⋊ C_m` with the least faithful action.
pub fn frobenius(l: usize, m: usize) -> Group {
    let r = (2..l).find(|&r| multiplicative_order(r, l) == m).expect("m divides l-1");
    semidirect(l, m, r, &format!("C{l}:C{m}"))
}

pub fn direct_product(a: &Group, b: &Group, name: &str) -> Group {
    let elements: Vec<(usize, usize)> =
        a.elements().flat_map(|x| b.elements().map(move |y| (x, y))).collect();
    from_elements(elements, |&(x1, y1), &(x2, y2)| (a.mul(x1, x2), b.mul(y1, y2)), name)
}

pub fn quaternion() -> Group {
    // (sign, unit) with units 1, i, j, k
    const UNIT: [[(bool, usize); 4]; 4] = [
        [(false, 0), (false, 1), (false, 2), (false, 3)],
        [(false, 1), (true, 0), (false, 3), (true, 2)],
        [(false, 2), (true, 3), (true, 0), (false, 1)],
        [(false, 3), (false, 2), (true, 1), (true, 0)],
    ];
    let elements: Vec<(bool, usize)> = [false, true].iter().flat_map(|&s| (0..4).map(move |u| (s, u))).collect();
    from_elements(
        elements,
        |&(s1, u1), &(s2, u2)| {
            let (s, u) = UNIT[u1][u2];
            (s ^ s1 ^ s2, u)
        },
        "Q8",
    )
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p: Vec<usize>| {
                (0..n)
                    .filter(|x| !p.contains(x))
                    .map(|x| {
                        let mut q = p.clone();
                        q.push(x);
                        q
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
    }
    out
}

fn is_even(p: &[usize]) -> bool {
    let inversions = (0..p.len()).flat_map(|i| (i + 1..p.len()).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
    inversions % 2 == 0
}

fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    q.iter().map(|&i| p[i]).collect()
}

pub fn symmetric4() -> Group {
    from_elements(permutations(4), |p, q| compose(p, q), "S4")
}

pub fn alternating4() -> Group {
    from_elements(permutations(4).into_iter().filter(|p| is_even(p)).collect(), |p, q| compose(p, q), "A4")
}

/// Upper unitriangular 3×3 matrices over F_3: `(a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab')`.
pub fn heisenberg27() -> Group {
    let elements: Vec<(usize, usize, usize)> =
        (0..27).map(|i| (i % 3, (i / 3) % 3, i / 9)).collect();
    from_elements(
        elements,
        |&(a, b, c), &(x, y, z)| ((a + x) % 3, (b + y) % 3, (c + z + a * y) % 3),
        "Heis27",
    )
}

fn mod_pow(base: usize, exp: usize, m: usize) -> usize {
    (0..exp).fold(1 % m, |acc, _| acc * base % m)
}

fn multiplicative_order(r: usize, m: usize) -> usize {
    (1..m).find(|&k| mod_pow(r, k, m) == 1).unwrap_or(0)
}
