mod common;

use brauer_ring::linalg::{smith, Lattice, PivotRule};
use rand::Rng;

fn mat_vec(m: &[Vec<i128>], v: &[i128]) -> Vec<i128> {
    m.iter().map(|r| r.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
}

fn mat_mul(a: &[Vec<i128>], b: &[Vec<i128>]) -> Vec<Vec<i128>> {
    a.iter().map(|r| (0..b[0].len()).map(|j| r.iter().zip(b).map(|(x, row)| x * row[j]).sum()).collect()).collect()
}

#[test]
fn smith_form_is_a_diagonalisation() {
    let mut rng = common::rng(40);
    for _ in 0..300 {
        let rows = rng.random_range(1..6);
        let cols = rng.random_range(1..7);
        let m: Vec<Vec<i128>> = (0..rows).map(|_| (0..cols).map(|_| rng.random_range(-4..=4)).collect()).collect();
        for rule in [PivotRule::SmallestRowMajor, PivotRule::SmallestReverse] {
            let s = smith(&m, cols, rule).unwrap();
            let d = mat_mul(&mat_mul(&s.left, &m), &s.right);
            for (i, row) in d.iter().enumerate() {
                for (j, &x) in row.iter().enumerate() {
                    let want = if i == j && i < s.rank() { s.diagonal[i] } else { 0 };
                    assert_eq!(x, want);
                }
            }
            for w in s.diagonal.windows(2) {
                assert_eq!(w[1] % w[0], 0, "divisibility chain");
            }
            assert!(s.diagonal.iter().all(|&x| x > 0));
            for k in s.kernel() {
                assert!(mat_vec(&m, &k).iter().all(|&x| x == 0));
            }
            let x: Vec<i128> = (0..cols).map(|_| rng.random_range(-3..=3)).collect();
            let b = mat_vec(&m, &x);
            let y = s.solve(&b).unwrap().expect("b is in the image");
            assert_eq!(mat_vec(&m, &y), b);
        }
    }
}

#[test]
fn solve_rejects_non_integral_targets() {
    let m = vec![vec![2, 0], vec![0, 3]];
    let s = smith(&m, 2, PivotRule::default()).unwrap();
    assert!(s.solve(&[1, 0]).unwrap().is_none());
    assert_eq!(s.solve(&[4, 3]).unwrap(), Some(vec![2, 1]));
    let s = smith(&vec![vec![1, 1]], 2, PivotRule::default()).unwrap();
    assert_eq!(s.kernel().len(), 1);
}

#[test]
fn lattices_are_invariant_under_unimodular_changes() {
    let mut rng = common::rng(41);
    for _ in 0..200 {
        let dim = rng.random_range(1..6);
        let gens: Vec<Vec<i128>> = (0..rng.random_range(1..5)).map(|_| (0..dim).map(|_| rng.random_range(-5..=5)).collect()).collect();
        let a = Lattice::from_generators(dim, &gens).unwrap();
        // add random multiples of one generator to another and append a combination
        let mut other = gens.clone();
        if other.len() > 1 {
            let k = rng.random_range(-3..=3);
            for c in 0..dim {
                other[0][c] += k * gens[1][c];
            }
        }
        let combo: Vec<i128> = (0..dim).map(|c| gens.iter().map(|g| g[c]).sum()).collect();
        other.push(combo.clone());
        other.reverse();
        let b = Lattice::from_generators(dim, &other).unwrap();
        assert_eq!(a, b);
        assert!(a.contains(&combo).unwrap());
        for g in &gens {
            assert!(a.contains(g).unwrap());
        }
        assert!(a.contains_lattice(&b).unwrap());
    }
    let l = Lattice::from_generators(2, &[vec![2, 0], vec![0, 2]]).unwrap();
    assert!(!l.contains(&[1, 0]).unwrap());
    assert_ne!(l, Lattice::from_generators(2, &[vec![1, 0], vec![0, 2]]).unwrap());
}
