use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use char_core::{character_table, characters_of, induce, Character, CharacterTable, ClassFunction};
use group_core::{Group, Subgroup};

use crate::element::{brauer_map, RPlusElement};
use crate::error::BrauerError;
use crate::linalg::{smith, IntMatrix, Lattice, PivotRule, Smith};
use crate::pair::{pair_class, PairClass};

/// All pair classes [H, χ] with H ⊇ N, and the matrix of φ against the
/// irreducible characters of Ω.
pub struct BrauerContext {
    group: Group,
    lower: Subgroup,
    classes: Vec<PairClass>,
    lookup: HashMap<Character, usize>,
    table: CharacterTable,
    /// rows: irreducibles, columns: classes
    matrix: IntMatrix,
    induced: Vec<ClassFunction>,
}

type CacheEntry = (Group, Subgroup, Arc<BrauerContext>);

fn cache() -> &'static Mutex<Vec<CacheEntry>> {
    static CACHE: OnceLock<Mutex<Vec<CacheEntry>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(Vec::new()))
}

impl BrauerContext {
    pub fn new(group: &Group, lower: &Subgroup) -> Result<BrauerContext, BrauerError> {
        if !group.is_normal(lower) {
            return Err(BrauerError::NotNormal);
        }
        let mut canonical = BTreeSet::new();
        for h in group.subgroups().iter().filter(|h| lower.is_subgroup_of(h)) {
            for chi in characters_of(group, h) {
                canonical.insert(pair_class(group, &chi));
            }
        }
        let classes: Vec<PairClass> = canonical.into_iter().collect();
        let mut lookup = HashMap::new();
        for (i, class) in classes.iter().enumerate() {
            for member in class.members(group) {
                lookup.insert(member, i);
            }
        }
        let table = character_table(group)?;
        let induced: Vec<ClassFunction> =
            classes.iter().map(|c| induce(c.character(), group)).collect::<Result<_, _>>()?;
        let mut matrix = vec![vec![0i128; classes.len()]; table.irreducibles().len()];
        for (j, cf) in induced.iter().enumerate() {
            let coords = table.decompose(cf).expect("induced characters are characters");
            for (i, &c) in coords.iter().enumerate() {
                matrix[i][j] = c as i128;
            }
        }
        Ok(BrauerContext { group: group.clone(), lower: lower.clone(), classes, lookup, table, matrix, induced })
    }

    /// A shared context, built once per (group, N).
    pub fn shared(group: &Group, lower: &Subgroup) -> Result<Arc<BrauerContext>, BrauerError> {
        let find = |entries: &[CacheEntry]| {
            entries.iter().find(|(g, n, _)| g == group && n == lower).map(|(_, _, c)| c.clone())
        };
        if let Some(ctx) = find(&cache().lock().expect("cache lock")) {
            return Ok(ctx);
        }
        let ctx = Arc::new(BrauerContext::new(group, lower)?);
        let mut entries = cache().lock().expect("cache lock");
        if let Some(existing) = find(&entries) {
            return Ok(existing);
        }
        entries.push((group.clone(), lower.clone(), ctx.clone()));
        Ok(ctx)
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn lower(&self) -> &Subgroup {
        &self.lower
    }

    /// Pair classes in canonical basis order.
    pub fn classes(&self) -> &[PairClass] {
        &self.classes
    }

    pub fn table(&self) -> &CharacterTable {
        &self.table
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// φ of the j-th basis class.
    pub fn induced(&self, j: usize) -> &ClassFunction {
        &self.induced[j]
    }

    /// Index of the class of (H, χ), for any member of the class.
    pub fn index_of(&self, chi: &Character) -> Option<usize> {
        self.lookup.get(chi).copied()
    }

    pub fn canonical(&self, chi: &Character) -> Option<&PairClass> {
        self.index_of(chi).map(|i| &self.classes[i])
    }

    pub fn coords(&self, x: &RPlusElement) -> Result<Vec<i128>, BrauerError> {
        if x.group() != &self.group {
            return Err(BrauerError::GroupMismatch);
        }
        let mut v = vec![0i128; self.classes.len()];
        for (class, n) in x.terms() {
            let i = self.index_of(class.character()).ok_or(BrauerError::BelowLowerBound)?;
            v[i] += n as i128;
        }
        Ok(v)
    }

    pub fn element(&self, coords: &[i128]) -> Result<RPlusElement, BrauerError> {
        let terms = self
            .classes
            .iter()
            .zip(coords)
            .filter(|(_, &n)| n != 0)
            .map(|(c, &n)| i64::try_from(n).map(|n| (c.clone(), n)).map_err(|_| BrauerError::Overflow))
            .collect::<Result<Vec<_>, _>>()?;
        RPlusElement::from_terms(&self.group, &self.lower, terms)
    }

    /// φ(x), computed from the cached inductions.
    pub fn brauer_map(&self, x: &RPlusElement) -> Result<ClassFunction, BrauerError> {
        let v = self.coords(x)?;
        Ok(v.iter().enumerate().filter(|(_, &n)| n != 0).fold(ClassFunction::zero(&self.group), |acc, (j, &n)| {
            acc.add(&self.induced[j].scale(n as i64))
        }))
    }

    /// Coordinates of a virtual character in the irreducible basis.
    pub fn character_coords(&self, rho: &ClassFunction) -> Result<Vec<i128>, BrauerError> {
        if rho.group() != &self.group {
            return Err(BrauerError::GroupMismatch);
        }
        let coords = self.table.decompose(rho).ok_or(BrauerError::NoSolution)?;
        Ok(coords.into_iter().map(i128::from).collect())
    }

    pub fn smith(&self, rule: PivotRule) -> Result<Smith, BrauerError> {
        smith(&self.matrix, self.classes.len(), rule)
    }

    /// Ker(φ_{N≤Ω}) as a lattice in class coordinates.
    pub fn kernel_lattice(&self) -> Result<Lattice, BrauerError> {
        let s = self.smith(PivotRule::SmallestRowMajor)?;
        Lattice::from_generators(self.classes.len(), &s.kernel())
    }

    /// The Hermite basis of the kernel.
    pub fn kernel_basis(&self) -> Result<Vec<RPlusElement>, BrauerError> {
        self.kernel_lattice()?.basis().iter().map(|v| self.element(v)).collect()
    }

    /// x with φ(x) = ρ, preferring solutions of small support.
    pub fn presentation(&self, rho: &ClassFunction, rule: PivotRule) -> Result<RPlusElement, BrauerError> {
        let b = self.character_coords(rho)?;
        let x = solve_sparse(&self.matrix, self.classes.len(), &b, rule)?;
        let out = self.element(&x)?;
        debug_assert!(brauer_map(&out) == *rho);
        Ok(out)
    }

    /// ρ = Σ n_i Ind(χ_i − 1) over classes with non-trivial χ_i, for ρ of
    /// dimension 0.
    pub fn dim0_presentation(&self, rho: &ClassFunction, rule: PivotRule) -> Result<Vec<(PairClass, i64)>, BrauerError> {
        let b = self.character_coords(rho)?;
        let mut columns = Vec::new();
        for (j, class) in self.classes.iter().enumerate() {
            let chi = class.character();
            if chi.is_trivial() {
                continue;
            }
            let one = Character::trivial(&self.group, chi.domain());
            let k = self.index_of(&one).expect("trivial pairs are basis classes");
            columns.push((j, k));
        }
        let m: IntMatrix =
            (0..self.matrix.len()).map(|i| columns.iter().map(|&(j, k)| self.matrix[i][j] - self.matrix[i][k]).collect()).collect();
        let y = solve_sparse(&m, columns.len(), &b, rule)?;
        columns
            .iter()
            .zip(&y)
            .filter(|(_, &n)| n != 0)
            .map(|(&(j, _), &n)| i64::try_from(n).map(|n| (self.classes[j].clone(), n)).map_err(|_| BrauerError::Overflow))
            .collect()
    }
}

/// A solution of `M x = b` preferring small support: single columns, then
/// pairs of columns, largest basis classes first; otherwise the Smith solution shrunk along
/// the kernel.
fn solve_sparse(m: &IntMatrix, cols: usize, b: &[i128], rule: PivotRule) -> Result<Vec<i128>, BrauerError> {
    let mut x = vec![0i128; cols];
    if b.iter().all(|&v| v == 0) {
        return Ok(x);
    }
    let column = |j: usize| -> Vec<i128> { m.iter().map(|r| r[j]).collect() };
    for j in (0..cols).rev() {
        if let Some(k) = multiple_of(&column(j), b) {
            x[j] = k;
            return Ok(x);
        }
    }
    for i in (0..cols).rev() {
        for j in (0..i).rev() {
            let sub: IntMatrix = m.iter().map(|r| vec![r[i], r[j]]).collect();
            if let Some(y) = smith(&sub, 2, rule)?.solve(b)? {
                x[i] = y[0];
                x[j] = y[1];
                return Ok(x);
            }
        }
    }
    let s = smith(m, cols, rule)?;
    let x = s.solve(b)?.ok_or(BrauerError::NoSolution)?;
    let kernel = Lattice::from_generators(cols, &s.kernel())?;
    Ok(shrink(x, kernel.basis()))
}

/// k with k·v = b, if any.
fn multiple_of(v: &[i128], b: &[i128]) -> Option<i128> {
    let (i, &vi) = v.iter().enumerate().find(|(_, &x)| x != 0)?;
    if b[i] % vi != 0 {
        return None;
    }
    let k = b[i] / vi;
    v.iter().zip(b).all(|(&a, &c)| a * k == c).then_some(k)
}

/// Greedy descent on (support size, ℓ¹ norm) by adding ± kernel vectors.
fn shrink(mut x: Vec<i128>, kernel: &[Vec<i128>]) -> Vec<i128> {
    let key = |v: &[i128]| (v.iter().filter(|&&a| a != 0).count(), v.iter().map(|a| a.unsigned_abs()).sum::<u128>());
    for _ in 0..64 {
        let mut improved = false;
        for k in kernel {
            for sign in [1i128, -1] {
                let cand: Vec<i128> = x.iter().zip(k).map(|(a, b)| a + sign * b).collect();
                if key(&cand) < key(&x) {
                    x = cand;
                    improved = true;
                }
            }
        }
        if !improved {
            break;
        }
    }
    x
}

/// Expand a Brauer-4 certificate into Σ n ([H, χ] − [H, 1]).
pub fn dim0_element(group: &Group, lower: &Subgroup, terms: &[(PairClass, i64)]) -> Result<RPlusElement, BrauerError> {
    let mut x = RPlusElement::zero_over(group, lower)?;
    for (class, n) in terms {
        x.add_term(class.clone(), *n)?;
        x.add_pair(&Character::trivial(group, class.subgroup()), -n)?;
    }
    Ok(x)
}

pub fn presentation(rho: &ClassFunction, lower: &Subgroup) -> Result<RPlusElement, BrauerError> {
    BrauerContext::shared(rho.group(), lower)?.presentation(rho, PivotRule::default())
}

pub fn dim0_presentation(rho: &ClassFunction, lower: &Subgroup) -> Result<Vec<(PairClass, i64)>, BrauerError> {
    BrauerContext::shared(rho.group(), lower)?.dim0_presentation(rho, PivotRule::default())
}

pub fn kernel_basis(group: &Group, lower: &Subgroup) -> Result<Vec<RPlusElement>, BrauerError> {
    BrauerContext::shared(group, lower)?.kernel_basis()
}
