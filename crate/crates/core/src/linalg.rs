//! Dense linear algebra over a coefficient field, and minors of
//! polynomial matrices.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::Polynomial;

/// Solution set of `A t = b` over the field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AffineSolutions<E> {
    Empty,
    Affine { particular: Vec<E>, directions: Vec<Vec<E>> },
}

/// Row echelon form in place; returns the pivot columns.
fn echelon<F: Field>(field: &F, m: &mut [Vec<F::Elem>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..m.len()).find(|&r| !field.is_zero(&m[r][col])) else {
            continue;
        };
        m.swap(row, p);
        let inv = field.inv(&m[row][col]).unwrap();
        for x in m[row].iter_mut() {
            *x = field.mul(x, &inv);
        }
        for r in 0..m.len() {
            if r != row && !field.is_zero(&m[r][col]) {
                let factor = m[r][col].clone();
                for c in 0..m[r].len() {
                    let delta = field.mul(&factor, &m[row][c]);
                    m[r][c] = field.sub(&m[r][c], &delta);
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    pivots
}

pub fn rank<F: Field>(field: &F, matrix: &[Vec<F::Elem>]) -> usize {
    let cols = matrix.first().map_or(0, Vec::len);
    let mut m = matrix.to_vec();
    echelon(field, &mut m, cols).len()
}

/// Classifies `{t : A t = b}`: empty, or a particular solution plus a basis
/// of the kernel of `A`.
pub fn solve_affine<F: Field>(
    field: &F,
    a: &[Vec<F::Elem>],
    b: &[F::Elem],
    cols: usize,
) -> Result<AffineSolutions<F::Elem>> {
    if a.len() != b.len() || a.iter().any(|r| r.len() != cols) {
        return Err(Error::DimensionMismatch("linear system shape".into()));
    }
    let mut aug: Vec<Vec<F::Elem>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| row.iter().cloned().chain(std::iter::once(bi.clone())).collect())
        .collect();
    let pivots = echelon(field, &mut aug, cols + 1);
    if pivots.last() == Some(&cols) {
        return Ok(AffineSolutions::Empty);
    }
    let mut particular = vec![field.zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        particular[c] = aug[r][cols].clone();
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let directions = free
        .iter()
        .map(|&f| {
            let mut v = vec![field.zero(); cols];
            v[f] = field.one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = field.neg(&aug[r][f]);
            }
            v
        })
        .collect();
    Ok(AffineSolutions::Affine { particular, directions })
}

pub fn evaluate_matrix<F: Field>(
    matrix: &[Vec<Polynomial<F>>],
    point: &[F::Elem],
) -> Result<Vec<Vec<F::Elem>>> {
    matrix.iter().map(|row| row.iter().map(|p| p.evaluate(point)).collect()).collect()
}

/// Determinant of a square polynomial matrix by Laplace expansion along
/// rows, memoized on the set of remaining columns.
pub fn determinant<F: Field>(matrix: &[Vec<Polynomial<F>>], ring: &crate::poly::RingRef<F>) -> Polynomial<F> {
    let n = matrix.len();
    assert!(n <= 63, "determinant size");
    let mut memo: HashMap<u64, Polynomial<F>> = HashMap::new();
    det_rec(matrix, 0, (1u64 << n) - 1, ring, &mut memo)
}

fn det_rec<F: Field>(
    m: &[Vec<Polynomial<F>>],
    row: usize,
    cols: u64,
    ring: &crate::poly::RingRef<F>,
    memo: &mut HashMap<u64, Polynomial<F>>,
) -> Polynomial<F> {
    if row == m.len() {
        return Polynomial::one(ring);
    }
    if let Some(d) = memo.get(&cols) {
        return d.clone();
    }
    let mut acc = Polynomial::zero(ring);
    let mut sign_positive = true;
    for c in 0..m.len() {
        if cols & (1 << c) == 0 {
            continue;
        }
        let entry = &m[row][c];
        if !entry.is_zero() {
            let sub = det_rec(m, row + 1, cols & !(1 << c), ring, memo);
            let term = entry * &sub;
            acc = if sign_positive { &acc + &term } else { &acc - &term };
        }
        sign_positive = !sign_positive;
    }
    memo.insert(cols, acc.clone());
    acc
}

/// All `k x k` minors, rows and columns chosen in lexicographic order.
pub fn minors<F: Field>(
    matrix: &[Vec<Polynomial<F>>],
    k: usize,
    ring: &crate::poly::RingRef<F>,
) -> Vec<Polynomial<F>> {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, Vec::len);
    if k == 0 {
        return vec![Polynomial::one(ring)];
    }
    let mut out = Vec::new();
    for rs in combinations(rows, k) {
        for cs in combinations(cols, k) {
            let sub: Vec<Vec<Polynomial<F>>> =
                rs.iter().map(|&r| cs.iter().map(|&c| matrix[r][c].clone()).collect()).collect();
            out.push(determinant(&sub, ring));
        }
    }
    out
}

pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}
