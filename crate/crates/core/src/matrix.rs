//! Dense matrices over the Gaussian rationals with exact elimination.
//!
//! Dimensions are fixed at construction and every binary operation checks
//! conformability.  Sizes stay small (ambient Lie algebras are at most
//! 12×12, coordinate systems at most ~70×150), so dense storage with
//! exact arithmetic is the right trade-off.

use crate::scalar::Scalar;
use crate::Error;

#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl std::fmt::Debug for Mat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self[(r, c)].render()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for k in 0..n {
            m[(k, k)] = Scalar::one();
        }
        m
    }

    /// Elementary matrix `E_{ij}` (1-based indices are the caller's business;
    /// here everything is 0-based).
    pub fn unit(rows: usize, cols: usize, i: usize, j: usize) -> Self {
        let mut m = Mat::zeros(rows, cols);
        m[(i, j)] = Scalar::one();
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].conj();
            }
        }
        t
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> Mat {
        self.map(Scalar::conj)
    }

    pub fn map(&self, f: impl Fn(&Scalar) -> Scalar) -> Mat {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn trace(&self) -> Scalar {
        assert!(self.is_square());
        let mut t = Scalar::zero();
        for k in 0..self.rows {
            t += self[(k, k)].clone();
        }
        t
    }

    pub fn scale(&self, s: &Scalar) -> Mat {
        self.map(|x| x * s)
    }

    pub fn checked_add(&self, rhs: &Mat) -> Result<Mat, Error> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch(format!(
                "add {}x{} vs {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let data = self
            .data
            .iter()
            .zip(rhs.data.iter())
            .map(|(a, b)| a.clone() + b)
            .collect();
        Ok(Mat { rows: self.rows, cols: self.cols, data })
    }

    pub fn checked_mul(&self, rhs: &Mat) -> Result<Mat, Error> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "mul {}x{} vs {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Mat::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = &rhs[(k, c)];
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a * b;
                    out[(r, c)] += prod;
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &Mat) -> Mat {
        self.checked_add(rhs).expect("dimension mismatch")
    }

    pub fn sub(&self, rhs: &Mat) -> Mat {
        self.add(&rhs.scale(&Scalar::from_int(-1)))
    }

    pub fn mul(&self, rhs: &Mat) -> Mat {
        self.checked_mul(rhs).expect("dimension mismatch")
    }

    /// Lie bracket `[A,B] = AB − BA`.
    pub fn bracket(&self, rhs: &Mat) -> Mat {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    /// Column-stack of matrices flattened row-major into vectors.
    pub fn from_flattened_columns(cols: &[Vec<Scalar>]) -> Mat {
        let rows = cols.first().map_or(0, Vec::len);
        let mut m = Mat::zeros(rows, cols.len());
        for (c, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (r, v) in col.iter().enumerate() {
                m[(r, c)] = v.clone();
            }
        }
        m
    }

    pub fn flatten(&self) -> Vec<Scalar> {
        self.data.clone()
    }

    /// Reduced row echelon form; returns (rref, pivot column indices).
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m[(row, col)].checked_inv().unwrap();
            for c in col..m.cols {
                m[(row, c)] = &m[(row, c)] * &inv;
            }
            for r in 0..m.rows {
                if r != row && !m[(r, col)].is_zero() {
                    let f = m[(r, col)].clone();
                    for c in col..m.cols {
                        let t = &f * &m[(row, c)];
                        m[(r, c)] -= t;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space, as columns.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let mut free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.sort_unstable();
        let mut basis = Vec::new();
        for &f in &free {
            let mut v = vec![Scalar::zero(); self.cols];
            v[f] = Scalar::one();
            for (prow, &pcol) in pivots.iter().enumerate() {
                v[pcol] = -r[(prow, f)].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Solve `self · x = b`; `None` when inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Mat::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug[(r, c)] = self[(r, c)].clone();
            }
            aug[(r, self.cols)] = b[r].clone();
        }
        let (rr, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // inconsistent
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (prow, &pcol) in pivots.iter().enumerate() {
            x[pcol] = rr[(prow, self.cols)].clone();
        }
        Some(x)
    }

    /// Exact inverse of a square matrix; `None` when singular.
    pub fn inverse(&self) -> Option<Mat> {
        assert!(self.is_square());
        let n = self.rows;
        let mut aug = Mat::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug[(r, c)] = self[(r, c)].clone();
            }
            aug[(r, n + r)] = Scalar::one();
        }
        let (rr, pivots) = aug.rref();
        if pivots.len() < n || pivots.iter().take(n).ne((0..n).by_ref()) {
            return None;
        }
        let mut inv = Mat::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv[(r, c)] = rr[(r, n + c)].clone();
            }
        }
        Some(inv)
    }

    pub fn determinant(&self) -> Scalar {
        assert!(self.is_square());
        // fraction-free would be faster; elimination at these sizes is fine
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Scalar::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m[(r, col)].is_zero()) else {
                return Scalar::zero();
            };
            if p != col {
                m.swap_rows(col, p);
                det = -det;
            }
            det = (&det).mul(&m[(col, col)]);
            let inv = m[(col, col)].checked_inv().unwrap();
            for r in col + 1..n {
                if m[(r, col)].is_zero() {
                    continue;
                }
                let f = (&m[(r, col)]).mul(&inv);
                for c in col..n {
                    let t = (&f).mul(&m[(col, c)]);
                    m[(r, c)] -= t;
                }
            }
        }
        det
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl std::ops::Index<(usize, usize)> for Mat {
    type Output = Scalar;
    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Scalar {
        &mut self.data[r * self.cols + c]
    }
}
