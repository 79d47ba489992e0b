//! Exact linear algebra over the rationals.

use num_traits::Zero;

use super::rat::Rat;

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    rows: Vec<Vec<Rat>>,
    ncols: usize,
}

/// Solution set of `A x = b`: `particular + span(directions)`.
#[derive(Clone, Debug, PartialEq)]
pub struct AffineSolution {
    pub particular: Vec<Rat>,
    pub directions: Vec<Vec<Rat>>,
}

impl Matrix {
    pub fn new(rows: Vec<Vec<Rat>>, ncols: usize) -> Self {
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged matrix");
        Matrix { rows, ncols }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[Vec<Rat>] {
        &self.rows
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.rows.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.ncols {
            if row == m.len() {
                break;
            }
            let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(row, p);
            let inv = m[row][col].recip();
            for v in m[row].iter_mut() {
                *v = &*v * &inv;
            }
            let pivot = m[row].clone();
            for (r, line) in m.iter_mut().enumerate() {
                if r != row && !line[col].is_zero() {
                    let f = line[col].clone();
                    for (x, p) in line.iter_mut().zip(&pivot) {
                        *x = &*x - &f * p;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (
            Matrix {
                rows: m,
                ncols: self.ncols,
            },
            pivots,
        )
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Solves `self * x = rhs`. Free variables are the non-pivot columns; the
    /// particular solution sets them to zero and each direction sets one of
    /// them to one. Returns `None` for an inconsistent system.
    pub fn solve_affine(&self, rhs: &[Rat]) -> Option<AffineSolution> {
        assert_eq!(rhs.len(), self.nrows());
        let aug: Vec<Vec<Rat>> = self
            .rows
            .iter()
            .zip(rhs)
            .map(|(r, b)| {
                let mut r = r.clone();
                r.push(b.clone());
                r
            })
            .collect();
        let (red, pivots) = Matrix::new(aug, self.ncols + 1).rref();
        if pivots.last() == Some(&self.ncols) {
            return None;
        }
        let n = self.ncols;
        let mut particular = vec![Rat::zero(); n];
        for (i, &pc) in pivots.iter().enumerate() {
            particular[pc] = red.rows[i][n].clone();
        }
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let directions = free
            .iter()
            .map(|&fc| {
                let mut d = vec![Rat::zero(); n];
                d[fc] = Rat::from_integer(1.into());
                for (i, &pc) in pivots.iter().enumerate() {
                    d[pc] = -red.rows[i][fc].clone();
                }
                d
            })
            .collect();
        Some(AffineSolution {
            particular,
            directions,
        })
    }

    /// Linear system `A x = b` equivalent to `residual(x) = 0` for an affine
    /// `residual` in `n` unknowns, sampled at the origin and the unit vectors.
    pub fn from_affine(n: usize, residual: impl Fn(&[Rat]) -> Vec<Rat>) -> (Matrix, Vec<Rat>) {
        let mut x = vec![Rat::zero(); n];
        let r0 = residual(&x);
        let mut rows = vec![Vec::with_capacity(n); r0.len()];
        for j in 0..n {
            x[j] = Rat::from_integer(1.into());
            let rj = residual(&x);
            assert_eq!(rj.len(), r0.len(), "residual length changed");
            for (row, (a, b)) in rows.iter_mut().zip(rj.iter().zip(&r0)) {
                row.push(a - b);
            }
            x[j] = Rat::zero();
        }
        let rhs = r0.into_iter().map(|v| -v).collect();
        (Matrix::new(rows, n), rhs)
    }

    pub fn mul_vec(&self, x: &[Rat]) -> Vec<Rat> {
        self.rows
            .iter()
            .map(|r| r.iter().zip(x).fold(Rat::zero(), |acc, (a, b)| acc + a * b))
            .collect()
    }
}
