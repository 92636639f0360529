use num_traits::Zero;

use super::{RatFuncA, Rational, Ring};

/// A [`Ring`] in which every nonzero element is invertible.
pub trait Field: Ring {
    fn inverse(&self) -> Option<Self>;
}

impl Field for Rational {
    fn inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
}

impl Field for RatFuncA {
    fn inverse(&self) -> Option<Self> {
        self.inv()
    }
}

/// Outcome of exact Gauss–Jordan elimination on `M x = b`.
#[derive(Debug, Clone)]
pub struct LinearSolution<F> {
    pub unknowns: usize,
    pub rank: usize,
    pub consistent: bool,
    /// A particular solution (free variables set to zero), when consistent.
    pub particular: Option<Vec<F>>,
}

impl<F> LinearSolution<F> {
    pub fn is_unique(&self) -> bool {
        self.consistent && self.rank == self.unknowns
    }

    pub fn rank_defect(&self) -> usize {
        self.unknowns - self.rank
    }
}

/// Solves the system whose rows are `(coefficients, right-hand side)`.
pub fn solve_linear<F: Field>(rows: Vec<(Vec<F>, F)>, unknowns: usize) -> LinearSolution<F> {
    let mut m: Vec<Vec<F>> = rows
        .into_iter()
        .map(|(mut r, b)| {
            assert_eq!(r.len(), unknowns, "row length mismatch");
            r.push(b);
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..unknowns {
        let Some(p) = (row..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].inverse().expect("nonzero pivot");
        for x in m[row].iter_mut().skip(col) {
            *x = x.clone() * inv.clone();
        }
        let pivot_row = m[row].clone();
        for (i, r) in m.iter_mut().enumerate() {
            if i == row || r[col].is_zero() {
                continue;
            }
            let factor = r[col].clone();
            for (x, p) in r.iter_mut().zip(&pivot_row).skip(col) {
                if !p.is_zero() {
                    *x = x.clone() - factor.clone() * p.clone();
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    let rank = pivots.len();
    let consistent = m[rank..].iter().all(|r| r[unknowns].is_zero());
    let particular = consistent.then(|| {
        let mut x = vec![F::zero(); unknowns];
        for (i, &c) in pivots.iter().enumerate() {
            x[c] = m[i][unknowns].clone();
        }
        x
    });
    LinearSolution { unknowns, rank, consistent, particular }
}
