//! Exact linear algebra over the rationals.
//!
//! Rows are cleared of denominators and reduced with integer
//! cross-multiplication (fraction-free), dividing each updated row by its
//! content to keep entries small. Pivots are taken at the first row with a
//! nonzero entry in each column, so results are reproducible.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::rational::Rational;

/// Reduced row-echelon form with integer rows.
#[derive(Debug, Clone)]
pub struct Echelon {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
    ncols: usize,
}

impl Echelon {
    pub fn new(matrix: &[Vec<Rational>], ncols: usize) -> Self {
        let mut rows: Vec<Vec<BigInt>> = matrix
            .iter()
            .filter(|r| r.iter().any(|c| !c.is_zero()))
            .map(|r| {
                debug_assert_eq!(r.len(), ncols);
                integer_row(r)
            })
            .collect();

        let mut pivots = Vec::new();
        let mut next = 0;
        for col in 0..ncols {
            if next == rows.len() {
                break;
            }
            let Some(p) = (next..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
                continue;
            };
            rows.swap(next, p);
            let (before, rest) = rows.split_at_mut(next);
            let (pivot_slice, after) = rest.split_at_mut(1);
            let pivot_row = &pivot_slice[0];
            let pivot = pivot_row[col].clone();
            let eliminate = |row: &mut Vec<BigInt>| {
                if row[col].is_zero() {
                    return;
                }
                let g = pivot.gcd(&row[col]);
                let a = &pivot / &g;
                let b = &row[col] / &g;
                for (x, y) in row.iter_mut().zip(pivot_row.iter()) {
                    if y.is_zero() {
                        *x = &*x * &a;
                    } else {
                        *x = &*x * &a - y * &b;
                    }
                }
                normalize(row);
            };
            for row in before.iter_mut() {
                eliminate(row);
            }
            for row in after.iter_mut() {
                eliminate(row);
            }
            pivots.push(col);
            next += 1;
        }
        rows.truncate(next);
        Echelon { rows, pivots, ncols }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis of the right kernel, one vector per free column (in column
    /// order), normalized so the free coordinate is 1.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let mut is_pivot = vec![None; self.ncols];
        for (r, &c) in self.pivots.iter().enumerate() {
            is_pivot[c] = Some(r);
        }
        let mut basis = Vec::new();
        for free in 0..self.ncols {
            if is_pivot[free].is_some() {
                continue;
            }
            let mut v = vec![Rational::zero(); self.ncols];
            v[free] = Rational::one();
            for (r, &c) in self.pivots.iter().enumerate() {
                let num = &self.rows[r][free];
                if !num.is_zero() {
                    v[c] = -Rational::new(num.clone(), self.rows[r][c].clone());
                }
            }
            basis.push(v);
        }
        basis
    }
}

fn integer_row(r: &[Rational]) -> Vec<BigInt> {
    let lcm = r
        .iter()
        .filter(|c| !c.is_zero())
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut row: Vec<BigInt> = r
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    normalize(&mut row);
    row
}

fn normalize(row: &mut [BigInt]) {
    let g = row
        .iter()
        .filter(|x| !x.is_zero())
        .fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in row.iter_mut() {
        if !x.is_zero() {
            *x = &*x / &g;
        }
    }
}

pub fn rank(matrix: &[Vec<Rational>], ncols: usize) -> usize {
    Echelon::new(matrix, ncols).rank()
}

pub fn nullspace(matrix: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    Echelon::new(matrix, ncols).nullspace()
}

/// Solves A x = b. Returns `None` exactly when rank [A | b] > rank A;
/// free variables are set to zero.
pub fn solve(matrix: &[Vec<Rational>], rhs: &[Rational], ncols: usize) -> Option<Vec<Rational>> {
    let augmented: Vec<Vec<Rational>> = matrix
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let ech = Echelon::new(&augmented, ncols + 1);
    if ech.pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![Rational::zero(); ncols];
    for (r, &c) in ech.pivots.iter().enumerate() {
        let b = &ech.rows[r][ncols];
        if !b.is_zero() {
            x[c] = Rational::new(b.clone(), ech.rows[r][c].clone());
        }
    }
    Some(x)
}

/// True when every entry of a vector is zero.
pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}
