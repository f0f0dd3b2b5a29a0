use crate::error::{Error, Result};
use crate::numeric::complex::ComplexValue;
use crate::numeric::precision::Precision;

/// Dense row-major matrix of [`ComplexValue`]s.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<ComplexValue>,
}

impl ComplexMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<ComplexValue>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Dimension(format!(
                "matrix must be non-empty, got {rows}x{cols}"
            )));
        }
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(ComplexMatrix {
            rows,
            cols,
            entries,
        })
    }

    /// Builds the matrix entry by entry; `f` receives 0-based `(row, col)`.
    pub fn from_fn<F>(rows: usize, cols: usize, mut f: F) -> Result<Self>
    where
        F: FnMut(usize, usize) -> ComplexValue,
    {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self::new(rows, cols, entries)
    }

    pub fn try_from_fn<F>(rows: usize, cols: usize, mut f: F) -> Result<Self>
    where
        F: FnMut(usize, usize) -> Result<ComplexValue>,
    {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j)?);
            }
        }
        Self::new(rows, cols, entries)
    }

    pub fn identity(n: usize, prec: Precision) -> Result<Self> {
        Self::from_fn(n, n, |i, j| ComplexValue::from_i64(prec, i64::from(i == j)))
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

    pub fn get(&self, i: usize, j: usize) -> &ComplexValue {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: ComplexValue) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn entries(&self) -> &[ComplexValue] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[ComplexValue] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
            .expect("transpose keeps a valid shape")
    }

    pub fn precision(&self) -> Precision {
        self.entries
            .iter()
            .map(ComplexValue::precision)
            .min()
            .expect("matrix is non-empty")
    }

    /// Determinant by LU factorisation with partial pivoting on the
    /// largest-modulus entry of each column.
    pub fn det(&self) -> Result<ComplexValue> {
        det(self)
    }
}

pub fn det(m: &ComplexMatrix) -> Result<ComplexValue> {
    if !m.is_square() {
        return Err(Error::Dimension(format!(
            "determinant needs a square matrix, got {}x{}",
            m.rows, m.cols
        )));
    }
    let n = m.rows;
    let prec = m.precision();
    let mut a = m.entries.clone();
    let mut det = ComplexValue::one(prec);
    for k in 0..n {
        let mut pivot = k;
        let mut best = a[k * n + k].norm_sqr();
        for i in k + 1..n {
            let mag = a[i * n + k].norm_sqr();
            if mag > best {
                best = mag;
                pivot = i;
            }
        }
        if best.is_zero() {
            return Ok(ComplexValue::zero(prec));
        }
        if pivot != k {
            for j in 0..n {
                a.swap(k * n + j, pivot * n + j);
            }
            det = -det;
        }
        let p = a[k * n + k].clone();
        det *= &p;
        for i in k + 1..n {
            let factor = &a[i * n + k] / &p;
            if factor.is_zero() {
                continue;
            }
            for j in k + 1..n {
                let update = &factor * &a[k * n + j];
                a[i * n + j] -= &update;
            }
        }
    }
    Ok(det)
}
