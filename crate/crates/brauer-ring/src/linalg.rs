//! Integer linear algebra: Smith normal form with tracked transforms and
//! Hermite normal form for lattice comparison.  All arithmetic is checked.

use crate::error::BrauerError;

pub type IntMatrix = Vec<Vec<i128>>;

/// Pivot order for Smith reduction.  Both choose a nonzero entry of least
/// absolute value; ties go to the first (row-major) or last such entry.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum PivotRule {
    #[default]
    SmallestRowMajor,
    SmallestReverse,
}

/// `left · M · right = diag(diagonal, 0, …)` with unimodular `left`, `right`.
#[derive(Clone, Debug)]
pub struct Smith {
    pub diagonal: Vec<i128>,
    pub left: IntMatrix,
    pub right: IntMatrix,
    pub rows: usize,
    pub cols: usize,
}

impl Smith {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }
}

fn overflow() -> BrauerError {
    BrauerError::Overflow
}

fn mul_sub(a: i128, q: i128, b: i128) -> Result<i128, BrauerError> {
    q.checked_mul(b).and_then(|p| a.checked_sub(p)).ok_or_else(overflow)
}

fn identity(n: usize) -> IntMatrix {
    (0..n).map(|i| (0..n).map(|j| (i == j) as i128).collect()).collect()
}

/// rows[i] -= q · rows[j]
fn row_sub(m: &mut IntMatrix, i: usize, j: usize, q: i128) -> Result<(), BrauerError> {
    if q == 0 {
        return Ok(());
    }
    for c in 0..m[i].len() {
        m[i][c] = mul_sub(m[i][c], q, m[j][c])?;
    }
    Ok(())
}

/// cols[i] -= q · cols[j]
fn col_sub(m: &mut IntMatrix, i: usize, j: usize, q: i128) -> Result<(), BrauerError> {
    if q == 0 {
        return Ok(());
    }
    for row in m.iter_mut() {
        row[i] = mul_sub(row[i], q, row[j])?;
    }
    Ok(())
}

fn swap_cols(m: &mut IntMatrix, i: usize, j: usize) {
    for row in m.iter_mut() {
        row.swap(i, j);
    }
}

fn pick(a: &IntMatrix, t: usize, rule: PivotRule) -> Option<(usize, usize)> {
    let mut best: Option<(i128, usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, &x) in row.iter().enumerate().skip(t) {
            if x == 0 {
                continue;
            }
            let better = match best {
                None => true,
                Some((b, _, _)) => match rule {
                    PivotRule::SmallestRowMajor => x.abs() < b,
                    PivotRule::SmallestReverse => x.abs() <= b,
                },
            };
            if better {
                best = Some((x.abs(), i, j));
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

/// Smith normal form of an `rows × cols` matrix.
pub fn smith(m: &IntMatrix, cols: usize, rule: PivotRule) -> Result<Smith, BrauerError> {
    let rows = m.len();
    let mut a = m.clone();
    let mut left = identity(rows);
    let mut right = identity(cols);
    let mut diagonal = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = pick(&a, t, rule) else { break };
        a.swap(t, pi);
        left.swap(t, pi);
        swap_cols(&mut a, t, pj);
        swap_cols(&mut right, t, pj);
        loop {
            let p = a[t][t];
            let mut clean = true;
            for i in t + 1..rows {
                if a[i][t] != 0 {
                    let q = a[i][t] / p;
                    row_sub(&mut a, i, t, q)?;
                    row_sub(&mut left, i, t, q)?;
                    clean &= a[i][t] == 0;
                }
            }
            for j in t + 1..cols {
                if a[t][j] != 0 {
                    let q = a[t][j] / p;
                    col_sub(&mut a, j, t, q)?;
                    col_sub(&mut right, j, t, q)?;
                    clean &= a[t][j] == 0;
                }
            }
            if clean {
                // divisibility of the remaining block
                let bad = (t + 1..rows).find(|&i| a[i].iter().skip(t + 1).any(|&x| x % p != 0));
                match bad {
                    None => break,
                    Some(i) => {
                        row_sub(&mut a, t, i, -1)?;
                        row_sub(&mut left, t, i, -1)?;
                        continue;
                    }
                }
            }
            // move the smallest remaining entry of row/column t into the pivot
            let mut best = (a[t][t].abs(), t, t);
            for i in t + 1..rows {
                if a[i][t] != 0 && a[i][t].abs() < best.0 {
                    best = (a[i][t].abs(), i, t);
                }
            }
            for j in t + 1..cols {
                if a[t][j] != 0 && a[t][j].abs() < best.0 {
                    best = (a[t][j].abs(), t, j);
                }
            }
            let (_, i, j) = best;
            if i != t {
                a.swap(t, i);
                left.swap(t, i);
            }
            if j != t {
                swap_cols(&mut a, t, j);
                swap_cols(&mut right, t, j);
            }
        }
        if a[t][t] < 0 {
            for x in a[t].iter_mut().chain(left[t].iter_mut()) {
                *x = -*x;
            }
        }
        diagonal.push(a[t][t]);
        t += 1;
    }
    Ok(Smith { diagonal, left, right, rows, cols })
}

fn mat_vec(m: &IntMatrix, v: &[i128]) -> Result<Vec<i128>, BrauerError> {
    m.iter()
        .map(|row| row.iter().zip(v).try_fold(0i128, |acc, (&a, &b)| mul_sub(acc, -a, b)))
        .collect()
}

impl Smith {
    /// An integer solution of `M x = b`, if one exists.
    pub fn solve(&self, b: &[i128]) -> Result<Option<Vec<i128>>, BrauerError> {
        assert_eq!(b.len(), self.rows);
        let ub = mat_vec(&self.left, b)?;
        let mut y = vec![0i128; self.cols];
        for (i, &d) in self.diagonal.iter().enumerate() {
            if ub[i] % d != 0 {
                return Ok(None);
            }
            y[i] = ub[i] / d;
        }
        if ub[self.rank()..].iter().any(|&x| x != 0) {
            return Ok(None);
        }
        mat_vec(&self.right, &y).map(Some)
    }

    /// Basis of the integer kernel `{x : M x = 0}`.
    pub fn kernel(&self) -> Vec<Vec<i128>> {
        (self.rank()..self.cols).map(|j| self.right.iter().map(|row| row[j]).collect()).collect()
    }
}

/// A sublattice of Z^n in row Hermite normal form (positive pivots, entries
/// above each pivot reduced into [0, pivot)).  Equal lattices have equal forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    dim: usize,
    basis: IntMatrix,
    pivots: Vec<usize>,
}

impl Lattice {
    pub fn from_generators(dim: usize, generators: &[Vec<i128>]) -> Result<Lattice, BrauerError> {
        let mut a: IntMatrix = generators.iter().filter(|v| v.iter().any(|&x| x != 0)).cloned().collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..dim {
            loop {
                let best = (r..a.len()).filter(|&i| a[i][col] != 0).min_by_key(|&i| (a[i][col].abs(), i));
                let Some(i) = best else { break };
                a.swap(r, i);
                let mut clean = true;
                for k in r + 1..a.len() {
                    if a[k][col] != 0 {
                        let q = a[k][col] / a[r][col];
                        row_sub(&mut a, k, r, q)?;
                        clean &= a[k][col] == 0;
                    }
                }
                if clean {
                    break;
                }
            }
            if r >= a.len() || a[r][col] == 0 {
                continue;
            }
            if a[r][col] < 0 {
                a[r].iter_mut().for_each(|x| *x = -*x);
            }
            for k in 0..r {
                let q = a[k][col].div_euclid(a[r][col]);
                row_sub(&mut a, k, r, q)?;
            }
            pivots.push(col);
            r += 1;
        }
        a.truncate(r);
        Ok(Lattice { dim, basis: a, pivots })
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis(&self) -> &[Vec<i128>] {
        &self.basis
    }

    pub fn contains(&self, v: &[i128]) -> Result<bool, BrauerError> {
        let mut w = v.to_vec();
        for (row, &col) in self.basis.iter().zip(&self.pivots) {
            if w[col] % row[col] != 0 {
                return Ok(false);
            }
            let q = w[col] / row[col];
            for (x, &y) in w.iter_mut().zip(row) {
                *x = mul_sub(*x, q, y)?;
            }
        }
        Ok(w.iter().all(|&x| x == 0))
    }

    /// Whether every basis vector of `other` lies in `self`.
    pub fn contains_lattice(&self, other: &Lattice) -> Result<bool, BrauerError> {
        for v in other.basis() {
            if !self.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
