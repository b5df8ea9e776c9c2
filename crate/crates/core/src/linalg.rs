//! Small exact integer and rational matrices.

use std::fmt;
use std::ops::Mul;

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

/// Dense row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        IntMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Outer product `u v^T`.
    pub fn outer(u: &[i64], v: &[i64]) -> Self {
        IntMatrix {
            rows: u.len(),
            cols: v.len(),
            data: u.iter().flat_map(|&a| v.iter().map(move |&b| a * b)).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[i64] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Self::identity(self.rows)
    }

    pub fn add(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &IntMatrix) -> IntMatrix {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, k: i64) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * k).collect(),
        }
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn pow(&self, mut e: u32) -> IntMatrix {
        let mut base = self.clone();
        let mut acc = IntMatrix::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn commutes_with(&self, other: &IntMatrix) -> bool {
        self * other == other * self
    }

    /// `AB - BA`, the witness reported for non-commuting pairs.
    pub fn commutator_difference(&self, other: &IntMatrix) -> IntMatrix {
        (self * other).sub(&(other * self))
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    out.data[i * rhs.cols + j] += a * rhs.get(k, j);
                }
            }
        }
        out
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(i64::to_string).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

pub type Rational = Ratio<i128>;

/// Reduced row echelon form over the rationals; returns the pivot columns.
fn rref(m: &mut [Vec<Rational>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c];
                let pivot_row = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(pivot_row) {
                    *x -= factor * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank of a set of integer vectors over `Q`.
pub fn rank(vectors: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<Rational>> = vectors
        .iter()
        .map(|v| v.iter().map(|&x| Rational::from_integer(x.into())).collect())
        .collect();
    rref(&mut m).len()
}

/// Whether `v` lies in the rational span of `vectors`.
pub fn in_span(vectors: &[Vec<i64>], v: &[i64]) -> bool {
    let mut with = vectors.to_vec();
    with.push(v.to_vec());
    rank(&with) == rank(vectors)
}

/// Least-squares solution of `A x = b` over `Q` through the normal equations
/// `A^T A x = A^T b`; free variables are set to zero. `columns` holds the
/// columns of `A`.
pub fn least_squares(columns: &[Vec<i64>], b: &[i64]) -> Vec<Rational> {
    let k = columns.len();
    let dot = |u: &[i64], v: &[i64]| -> i128 {
        u.iter()
            .zip(v)
            .map(|(&x, &y)| i128::from(x) * i128::from(y))
            .sum()
    };
    let mut aug: Vec<Vec<Rational>> = (0..k)
        .map(|i| {
            let mut row: Vec<Rational> = (0..k)
                .map(|j| Rational::from_integer(dot(&columns[i], &columns[j])))
                .collect();
            row.push(Rational::from_integer(dot(&columns[i], b)));
            row
        })
        .collect();
    let pivots = rref(&mut aug);
    let mut x = vec![Rational::zero(); k];
    for (r, &c) in pivots.iter().enumerate() {
        if c < k {
            x[c] = aug[r][k];
        }
    }
    x
}

/// Rounds a rational vector to integers when every entry is integral.
pub fn integral(x: &[Rational]) -> Option<Vec<i64>> {
    x.iter()
        .map(|q| {
            if q.denom().is_one() {
                i64::try_from(*q.numer()).ok()
            } else {
                None
            }
        })
        .collect()
}

/// Nearest-integer rounding (ties away from zero).
pub fn round(x: &[Rational]) -> Vec<i64> {
    x.iter()
        .map(|q| {
            let r = q.round();
            let n = *r.numer();
            debug_assert!(n.abs() < i128::from(i64::MAX));
            n as i64
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products_and_powers() {
        let t = IntMatrix::from_rows(vec![vec![0, -1], vec![1, 1]]);
        assert!(t.pow(6).is_identity());
        assert!(!t.pow(3).is_identity());
        assert_eq!(t.pow(3), IntMatrix::identity(2).scale(-1));
        assert_eq!(t.transpose().transpose(), t);
    }

    #[test]
    fn span_and_rank() {
        let vs = vec![vec![1, 0, 1], vec![0, 1, 1]];
        assert_eq!(rank(&vs), 2);
        assert!(in_span(&vs, &[2, 3, 5]));
        assert!(!in_span(&vs, &[0, 0, 1]));
        assert!(in_span(&[], &[0, 0]));
    }

    #[test]
    fn least_squares_exact_solution() {
        let cols = vec![vec![1, 0, 1], vec![0, 1, 1], vec![1, 1, 2]];
        let x = least_squares(&cols, &[2, 3, 5]);
        let xi = integral(&x).unwrap();
        let recon: Vec<i64> = (0..3)
            .map(|r| cols.iter().zip(&xi).map(|(c, k)| c[r] * k).sum())
            .collect();
        assert_eq!(recon, vec![2, 3, 5]);
    }
}
