//! Dense matrices over a [`Ring`] and the circulant families built from a
//! single first row.

use std::fmt;
use std::ops::{Index, IndexMut};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rings::Ring;

/// Row-major dense matrix over `R`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RingMatrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: Ring> RingMatrix<R> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![R::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = R::one();
        }
        m
    }

    /// The anti-identity permutation matrix.
    pub fn back_diagonal(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, n - 1 - i)] = R::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::BadShape("ragged rows".into()));
        }
        let n = rows.len();
        Ok(Self {
            rows: n,
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
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

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[R]> {
        self.data.chunks(self.cols.max(1)).take(self.rows)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::BadShape(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| a + b)
            .collect();
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::BadShape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self[(i, l)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i * other.cols + j] += a * other[(l, j)];
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, s: R) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| s * x).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| self[(i, j)] == if i == j { R::one() } else { R::zero() })
            })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    /// `AB == BA`, i.e. `AB + BA == 0` in characteristic 2.
    pub fn commutes(&self, other: &Self) -> Result<bool> {
        if !self.is_square() || !other.is_square() || self.rows != other.rows {
            return Err(Error::BadShape(
                "commutator needs square matrices of one order".into(),
            ));
        }
        Ok(self.try_mul(other)? == other.try_mul(self)?)
    }

    /// `[[a, b], [c, d]]` as one matrix.
    pub fn block(a: &Self, b: &Self, c: &Self, d: &Self) -> Result<Self> {
        if a.rows != b.rows || c.rows != d.rows || a.cols != c.cols || b.cols != d.cols {
            return Err(Error::BadShape("blocks do not tile".into()));
        }
        let (rows, cols) = (a.rows + c.rows, a.cols + b.cols);
        Ok(Self::from_fn(rows, cols, |i, j| {
            match (i < a.rows, j < a.cols) {
                (true, true) => a[(i, j)],
                (true, false) => b[(i, j - a.cols)],
                (false, true) => c[(i - a.rows, j)],
                (false, false) => d[(i - a.rows, j - a.cols)],
            }
        }))
    }

    /// `[self | other]`.
    pub fn hconcat(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::BadShape("row counts differ".into()));
        }
        Ok(Self::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self[(i, j)]
            } else {
                other[(i, j - self.cols)]
            }
        }))
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| {
            self[(rows.start + i, cols.start + j)]
        })
    }
}

impl<R> Index<(usize, usize)> for RingMatrix<R> {
    type Output = R;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &R {
        &self.data[i * self.cols + j]
    }
}

impl<R> IndexMut<(usize, usize)> for RingMatrix<R> {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut R {
        &mut self.data[i * self.cols + j]
    }
}

impl<R: Ring> fmt::Debug for RingMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RingMatrix<{}> {}x{}", R::ID, self.rows, self.cols)?;
        for r in self.row_iter() {
            writeln!(f, "  {}", R::format_vector(r))?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CirculantKind {
    /// Each row is the right shift of the previous one.
    Circulant,
    /// Each row is the left shift of the previous one.
    ReverseCirculant,
    /// Circulant whose first row satisfies `a_i = a_{n+2-i}`.
    SymmetricCirculant,
}

/// Everything needed to expand an `n × n` circulant-family matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CirculantSpec<R> {
    pub n: usize,
    pub kind: CirculantKind,
    pub lambda: R,
    /// Full first row `(a_1, …, a_n)`. For the reverse kind this is the
    /// first row of the circulant factor `C` in `C·R`.
    pub first_row: Vec<R>,
}

/// Number of free entries of a symmetric first row of order `n`.
pub const fn symmetric_free_len(n: usize) -> usize {
    n / 2 + 1
}

/// Unique symmetric completion `a_i = a_{n+2-i}` of the free entries
/// `(a_1, …, a_{⌊n/2⌋+1})`.
pub fn expand_symmetric<R: Ring>(n: usize, free: &[R]) -> Result<Vec<R>> {
    if free.len() != symmetric_free_len(n) {
        return Err(Error::BadShape(format!(
            "symmetric first row of order {n} needs {} free entries, got {}",
            symmetric_free_len(n),
            free.len()
        )));
    }
    // 0-based: a[i] = a[n - i] for 1 <= i < n
    Ok((0..n)
        .map(|i| if i < free.len() { free[i] } else { free[n - i] })
        .collect())
}

/// Leading free entries of a full symmetric row.
pub fn compress_symmetric<R: Ring>(row: &[R]) -> Result<Vec<R>> {
    if !is_symmetric_row(row) {
        return Err(Error::BadShape("first row violates a_i = a_(n+2-i)".into()));
    }
    Ok(row[..symmetric_free_len(row.len()).min(row.len())].to_vec())
}

pub fn is_symmetric_row<R: Ring>(row: &[R]) -> bool {
    let n = row.len();
    (1..n).all(|i| row[i] == row[n - i])
}

impl<R: Ring> CirculantSpec<R> {
    pub fn circulant(first_row: Vec<R>) -> Self {
        Self {
            n: first_row.len(),
            kind: CirculantKind::Circulant,
            lambda: R::one(),
            first_row,
        }
    }

    pub fn reverse(first_row: Vec<R>) -> Self {
        Self {
            n: first_row.len(),
            kind: CirculantKind::ReverseCirculant,
            lambda: R::one(),
            first_row,
        }
    }

    pub fn with_lambda(mut self, lambda: R) -> Self {
        self.lambda = lambda;
        self
    }

    /// Symmetric circulant from either the free entries or a full row.
    pub fn symmetric(n: usize, row: Vec<R>) -> Result<Self> {
        let first_row = if row.len() == n && n != symmetric_free_len(n) {
            if !is_symmetric_row(&row) {
                return Err(Error::BadShape("first row violates a_i = a_(n+2-i)".into()));
            }
            row
        } else {
            expand_symmetric(n, &row)?
        };
        Ok(Self {
            n,
            kind: CirculantKind::SymmetricCirculant,
            lambda: R::one(),
            first_row,
        })
    }

    pub fn build(&self) -> Result<RingMatrix<R>> {
        if !self.lambda.is_unit() {
            return Err(Error::BadLambda(self.lambda.to_string()));
        }
        if self.first_row.len() != self.n || self.n == 0 {
            return Err(Error::BadShape(format!(
                "first row has {} entries for order {}",
                self.first_row.len(),
                self.n
            )));
        }
        match self.kind {
            CirculantKind::Circulant => Ok(lambda_circulant(&self.first_row, self.lambda)),
            CirculantKind::SymmetricCirculant => {
                if !is_symmetric_row(&self.first_row) {
                    return Err(Error::BadShape("first row violates a_i = a_(n+2-i)".into()));
                }
                Ok(lambda_circulant(&self.first_row, self.lambda))
            }
            CirculantKind::ReverseCirculant => lambda_circulant(&self.first_row, self.lambda)
                .try_mul(&RingMatrix::back_diagonal(self.n)),
        }
    }
}

/// Row `i` is the `i`-fold right shift with wrapped entries scaled by `lambda`.
pub fn lambda_circulant<R: Ring>(row: &[R], lambda: R) -> RingMatrix<R> {
    let n = row.len();
    RingMatrix::from_fn(n, n, |i, j| {
        if j >= i {
            row[j - i]
        } else {
            lambda * row[n + j - i]
        }
    })
}

pub fn circulant<R: Ring>(row: &[R]) -> RingMatrix<R> {
    lambda_circulant(row, R::one())
}

/// `circulant(row)·R`: the first row is `row` reversed and each further row
/// is the left shift of the previous one.
pub fn reverse_circulant<R: Ring>(row: &[R]) -> RingMatrix<R> {
    let n = row.len();
    RingMatrix::from_fn(n, n, |i, j| row[(2 * n - 1 - i - j) % n])
}
