//! Generator matrices `[I_2n | M]` from four circulant-family blocks.
//!
//! Every construction checks its algebraic precondition by explicit matrix
//! arithmetic and then confirms `G·Gᵀ = 0` on the finished generator, so a
//! returned [`RingGenerator`] is always self-dual.

use serde::{Deserialize, Serialize};
use std::str::FromStr;

use crate::circulant::{
    circulant, expand_symmetric, is_symmetric_row, lambda_circulant, reverse_circulant,
    symmetric_free_len, RingMatrix,
};
use crate::error::{Error, Result};
use crate::rings::Ring;

/// A `k × m` generator matrix over `R`.
#[derive(Clone, PartialEq, Eq)]
pub struct RingGenerator<R> {
    matrix: RingMatrix<R>,
}

impl<R: Ring> std::fmt::Debug for RingGenerator<R> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.matrix.fmt(f)
    }
}

impl<R: Ring> RingGenerator<R> {
    pub fn new(matrix: RingMatrix<R>) -> Self {
        Self { matrix }
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        RingMatrix::from_rows(rows).map(Self::new)
    }

    /// `[I_k | m]`.
    pub fn systematic(m: &RingMatrix<R>) -> Result<Self> {
        RingMatrix::identity(m.rows()).hconcat(m).map(Self::new)
    }

    pub fn k(&self) -> usize {
        self.matrix.rows()
    }

    /// Code length.
    pub fn len(&self) -> usize {
        self.matrix.cols()
    }

    pub fn is_empty(&self) -> bool {
        self.matrix.cols() == 0
    }

    pub fn matrix(&self) -> &RingMatrix<R> {
        &self.matrix
    }

    pub fn rows(&self) -> impl Iterator<Item = &[R]> {
        self.matrix.row_iter()
    }

    /// `G·Gᵀ`.
    pub fn gram(&self) -> RingMatrix<R> {
        self.matrix
            .try_mul(&self.matrix.transpose())
            .expect("G and its transpose are conformable")
    }

    /// `G·Gᵀ = 0` and `m = 2k`.
    pub fn is_self_dual(&self) -> bool {
        self.len() == 2 * self.k() && self.gram().is_zero()
    }

    /// The right block `M` of a generator `[I_k | M]`.
    pub fn redundancy(&self) -> Result<RingMatrix<R>> {
        let k = self.k();
        if self.len() < k || !self.matrix.submatrix(0..k, 0..k).is_identity() {
            return Err(Error::BadShape(
                "generator is not of the form [I | M]".into(),
            ));
        }
        Ok(self.matrix.submatrix(0..k, k..self.len()))
    }
}

/// Construction method names as they appear in configs and on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// `[A, B; Bᵀ, Aᵀ]`, A and B circulant.
    #[serde(alias = "four")]
    FourCirculant,
    /// `[A, B; B, A]`, A λ-circulant and B λ-reverse-circulant.
    #[serde(alias = "lambda")]
    Modified,
    /// `[A, B+C; Bᵀ+C, Aᵀ]`, C reverse-circulant.
    General,
    /// `[A, B+C; Bᵀ+C, A]`, A symmetric circulant.
    Symmetric,
    /// `general` on top of a fixed four-circulant base with `C² = 0`.
    #[serde(alias = "czero_perturb")]
    Czero,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::FourCirculant => "four_circulant",
            Method::Modified => "modified",
            Method::General => "general",
            Method::Symmetric => "symmetric",
            Method::Czero => "czero",
        }
    }

    pub fn uses_c(self) -> bool {
        matches!(self, Method::General | Method::Symmetric | Method::Czero)
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "four" | "four_circulant" | "fourcirculant" => Ok(Method::FourCirculant),
            "modified" | "lambda" | "modified_four_circulant" => Ok(Method::Modified),
            "general" | "generalized" | "generalized_four_circulant" => Ok(Method::General),
            "symmetric" | "symmetric_variant" => Ok(Method::Symmetric),
            "czero" | "czero_perturb" => Ok(Method::Czero),
            other => Err(Error::BadConfig(format!(
                "unknown construction method '{other}'"
            ))),
        }
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

fn same_order<R: Ring>(ms: &[&RingMatrix<R>]) -> Result<usize> {
    let n = ms[0].rows();
    if ms.iter().any(|m| !m.is_square() || m.rows() != n) {
        return Err(Error::BadShape(
            "blocks must be square matrices of one order".into(),
        ));
    }
    Ok(n)
}

fn mul<R: Ring>(a: &RingMatrix<R>, b: &RingMatrix<R>) -> RingMatrix<R> {
    a.try_mul(b).expect("orders already checked")
}

fn add<R: Ring>(a: &RingMatrix<R>, b: &RingMatrix<R>) -> RingMatrix<R> {
    a.try_add(b).expect("orders already checked")
}

/// `A·Aᵀ + B·Bᵀ` (or `A² + B·Bᵀ` when `a_sq` is true).
fn gram_sum<R: Ring>(a: &RingMatrix<R>, b: &RingMatrix<R>, a_sq: bool) -> RingMatrix<R> {
    let aa = if a_sq {
        mul(a, a)
    } else {
        mul(a, &a.transpose())
    };
    add(&aa, &mul(b, &b.transpose()))
}

fn finish<R: Ring>(m: RingMatrix<R>) -> Result<RingGenerator<R>> {
    let g = RingGenerator::systematic(&m)?;
    if !g.is_self_dual() {
        return Err(Error::NotSelfDualCondition(
            "G·Gᵀ != 0 for the assembled generator".into(),
        ));
    }
    Ok(g)
}

/// `( I_2n | A  B ; Bᵀ  Aᵀ )` when `A·Aᵀ + B·Bᵀ = I_n`.
pub fn four_circulant<R: Ring>(a: &RingMatrix<R>, b: &RingMatrix<R>) -> Result<RingGenerator<R>> {
    same_order(&[a, b])?;
    if !gram_sum(a, b, false).is_identity() {
        return Err(Error::NotSelfDualCondition("A·Aᵀ + B·Bᵀ != I".into()));
    }
    finish(four_circulant_block(a, b, None))
}

/// `( I_2n | A  B ; B  A )` for a λ-circulant `A` and λ-reverse-circulant `B`.
pub fn modified_four_circulant<R: Ring>(
    lambda: R,
    a: &RingMatrix<R>,
    b: &RingMatrix<R>,
) -> Result<RingGenerator<R>> {
    if !lambda.is_unit() {
        return Err(Error::BadLambda(lambda.to_string()));
    }
    same_order(&[a, b])?;
    if !gram_sum(a, b, false).is_identity() {
        return Err(Error::NotSelfDualCondition("A·Aᵀ + B·Bᵀ != I".into()));
    }
    let m = RingMatrix::block(a, b, b, a)?;
    finish(m)
}

/// `( I_2n | A  B+C ; Bᵀ+C  Aᵀ )` when `A·Aᵀ + B·Bᵀ + C² = I_n` and `AC = CA`.
pub fn generalized_four_circulant<R: Ring>(
    a: &RingMatrix<R>,
    b: &RingMatrix<R>,
    c: &RingMatrix<R>,
) -> Result<RingGenerator<R>> {
    same_order(&[a, b, c])?;
    if !add(&gram_sum(a, b, false), &mul(c, c)).is_identity() {
        return Err(Error::NotSelfDualCondition("A·Aᵀ + B·Bᵀ + C² != I".into()));
    }
    if !a.commutes(c)? {
        return Err(Error::NotSelfDualCondition("AC != CA".into()));
    }
    finish(four_circulant_block(a, b, Some(c)))
}

/// `( I_2n | A  B+C ; Bᵀ+C  A )` for symmetric `A` when `A² + B·Bᵀ + C² = I_n`.
pub fn symmetric_variant<R: Ring>(
    a: &RingMatrix<R>,
    b: &RingMatrix<R>,
    c: &RingMatrix<R>,
) -> Result<RingGenerator<R>> {
    same_order(&[a, b, c])?;
    if !a.is_symmetric() {
        return Err(Error::BadShape("A is not symmetric".into()));
    }
    if !add(&gram_sum(a, b, true), &mul(c, c)).is_identity() {
        return Err(Error::NotSelfDualCondition("A² + B·Bᵀ + C² != I".into()));
    }
    // A = Aᵀ, so this is the generalized block
    finish(four_circulant_block(a, b, Some(c)))
}

/// Add a reverse-circulant `C` with `C² = 0` and `AC = CA` to the off-diagonal
/// blocks of a four-circulant generator.
pub fn czero_perturb<R: Ring>(
    base: &RingGenerator<R>,
    c: &RingMatrix<R>,
) -> Result<RingGenerator<R>> {
    let (a, b) = four_circulant_parts(base)?;
    same_order(&[&a, &b, c])?;
    if !mul(c, c).is_zero() {
        return Err(Error::NotSelfDualCondition("C² != 0".into()));
    }
    if !a.commutes(c)? {
        return Err(Error::NotSelfDualCondition("AC != CA".into()));
    }
    finish(four_circulant_block(&a, &b, Some(c)))
}

/// Recover `(A, B)` from `( I_2n | A  B ; Bᵀ  Aᵀ )`.
pub fn four_circulant_parts<R: Ring>(
    g: &RingGenerator<R>,
) -> Result<(RingMatrix<R>, RingMatrix<R>)> {
    let m = g.redundancy()?;
    if m.rows() != m.cols() || m.rows() % 2 != 0 {
        return Err(Error::BadShape("not a four-circulant generator".into()));
    }
    let n = m.rows() / 2;
    let a = m.submatrix(0..n, 0..n);
    let b = m.submatrix(0..n, n..2 * n);
    if m.submatrix(n..2 * n, 0..n) != b.transpose()
        || m.submatrix(n..2 * n, n..2 * n) != a.transpose()
    {
        return Err(Error::BadShape("lower blocks are not (Bᵀ, Aᵀ)".into()));
    }
    Ok((a, b))
}

/// First rows of the blocks, the way tables and configs list them.
///
/// `ra` of a symmetric method may be compressed to its `⌊n/2⌋+1` leading
/// entries. `rc` is the first row of the circulant factor of `C = circ(rc)·R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FirstRows<R> {
    pub ra: Vec<R>,
    pub rb: Vec<R>,
    pub rc: Option<Vec<R>>,
    pub lambda: R,
}

impl<R: Ring> FirstRows<R> {
    pub fn new(ra: Vec<R>, rb: Vec<R>, rc: Option<Vec<R>>) -> Self {
        Self {
            ra,
            rb,
            rc,
            lambda: R::one(),
        }
    }

    /// Circulant order, taken from `rb` (never compressed).
    pub fn order(&self) -> usize {
        self.rb.len()
    }
}

/// Assemble the generator for `method` from first rows.
pub fn from_first_rows<R: Ring>(method: Method, rows: &FirstRows<R>) -> Result<RingGenerator<R>> {
    let n = rows.order();
    if n == 0 {
        return Err(Error::BadShape("empty first row".into()));
    }
    if method != Method::Modified && rows.lambda != R::one() {
        return Err(Error::BadConfig(format!(
            "lambda is only used by method 'modified', not '{method}'"
        )));
    }
    let rc = match (method.uses_c(), &rows.rc) {
        (true, Some(rc)) => Some(reverse_circulant(rc)),
        (true, None) => return Err(Error::BadConfig(format!("method '{method}' needs rc"))),
        (false, Some(_)) => return Err(Error::BadConfig(format!("method '{method}' takes no rc"))),
        (false, None) => None,
    };
    let b = circulant(&rows.rb);
    let ra = if method == Method::Symmetric
        && rows.ra.len() == symmetric_free_len(n)
        && n != rows.ra.len()
    {
        expand_symmetric(n, &rows.ra)?
    } else {
        rows.ra.clone()
    };
    if ra.len() != n {
        return Err(Error::BadShape(format!(
            "ra has {} entries, rb has {n}",
            ra.len()
        )));
    }
    if let Some(rc) = &rows.rc {
        if rc.len() != n {
            return Err(Error::BadShape(format!(
                "rc has {} entries, rb has {n}",
                rc.len()
            )));
        }
    }
    let a = circulant(&ra);
    match method {
        Method::FourCirculant => four_circulant(&a, &b),
        Method::Modified => {
            if !rows.lambda.is_unit() {
                return Err(Error::BadLambda(rows.lambda.to_string()));
            }
            let a = lambda_circulant(&ra, rows.lambda);
            let b =
                lambda_circulant(&rows.rb, rows.lambda).try_mul(&RingMatrix::back_diagonal(n))?;
            modified_four_circulant(rows.lambda, &a, &b)
        }
        Method::General => generalized_four_circulant(&a, &b, rc.as_ref().expect("checked above")),
        Method::Symmetric => {
            if !is_symmetric_row(&ra) {
                return Err(Error::BadShape("ra is not a symmetric first row".into()));
            }
            symmetric_variant(&a, &b, rc.as_ref().expect("checked above"))
        }
        Method::Czero => czero_perturb(
            &four_circulant(&a, &b)?,
            rc.as_ref().expect("checked above"),
        ),
    }
}

fn four_circulant_block<R: Ring>(
    a: &RingMatrix<R>,
    b: &RingMatrix<R>,
    c: Option<&RingMatrix<R>>,
) -> RingMatrix<R> {
    let bt = b.transpose();
    let (upper, lower) = match c {
        Some(c) => (add(b, c), add(&bt, c)),
        None => (b.clone(), bt),
    };
    RingMatrix::block(a, &upper, &lower, &a.transpose()).expect("square blocks of one order")
}
