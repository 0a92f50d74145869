//! Lengthening a self-dual ring code by two coordinates, and the binary
//! neighbor construction.

use crate::bincode::PackedBinaryCode;
use crate::bits::BitVector;
use crate::constructions::RingGenerator;
use crate::error::{Error, Result};
use crate::rings::Ring;

fn inner<R: Ring>(a: &[R], b: &[R]) -> R {
    a.iter().zip(b).fold(R::zero(), |acc, (&x, &y)| acc + x * y)
}

/// The data of a two-coordinate extension: a unit `c` with `c² = 1` and a
/// vector `X` with `⟨X, X⟩ = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionSpec<R> {
    pub c: R,
    pub x: Vec<R>,
}

impl<R: Ring> ExtensionSpec<R> {
    pub fn new(c: R, x: Vec<R>) -> Result<Self> {
        if c * c != R::one() {
            return Err(Error::BadUnit(c.to_string()));
        }
        let xx = inner(&x, &x);
        if xx != R::one() {
            return Err(Error::BadExtensionVector(xx.to_string()));
        }
        Ok(Self { c, x })
    }
}

/// Generator of the length `n + 2` code
///
/// ```text
/// [ 1    0     | X   ]
/// [ y_i  c·y_i | r_i ]    y_i = ⟨r_i, X⟩
/// ```
pub fn extend<R: Ring>(g: &RingGenerator<R>, spec: &ExtensionSpec<R>) -> Result<RingGenerator<R>> {
    let spec = ExtensionSpec::new(spec.c, spec.x.clone())?;
    if spec.x.len() != g.len() {
        return Err(Error::BadShape(format!(
            "X has length {} but the code has length {}",
            spec.x.len(),
            g.len()
        )));
    }
    if !g.gram().is_zero() {
        return Err(Error::NotSelfDualCondition(
            "base generator is not self-orthogonal".into(),
        ));
    }
    let mut rows = Vec::with_capacity(g.k() + 1);
    let mut head = vec![R::one(), R::zero()];
    head.extend_from_slice(&spec.x);
    rows.push(head);
    for r in g.rows() {
        let y = inner(r, &spec.x);
        let mut row = vec![y, spec.c * y];
        row.extend_from_slice(r);
        rows.push(row);
    }
    RingGenerator::from_rows(rows)
}

/// `⟨⟨x⟩^⊥ ∩ C, x⟩` for a binary self-dual `C` and an even-weight `x ∉ C`.
pub fn neighbor(code: &PackedBinaryCode, x: &BitVector) -> Result<PackedBinaryCode> {
    if x.len() != code.n() {
        return Err(Error::BadShape(format!(
            "x has length {} but n = {}",
            x.len(),
            code.n()
        )));
    }
    if !code.is_self_dual() {
        return Err(Error::NotSelfDualCondition(
            "neighbor base code is not self-dual".into(),
        ));
    }
    let w = x.weight();
    if w % 2 == 1 {
        return Err(Error::NotSelfOrthogonal(w));
    }
    if code.contains(x)? {
        return Err(Error::NotANeighborSeed);
    }
    let mut rows: Vec<BitVector> = code.rows().to_vec();
    // x ∉ C = C^⊥, so some row is not orthogonal to x
    let p = rows.iter().position(|r| r.dot(x)).ok_or_else(|| {
        Error::InternalError("x orthogonal to a self-dual code but not in it".into())
    })?;
    let pivot = rows.swap_remove(p);
    for r in rows.iter_mut() {
        if r.dot(x) {
            r.xor_assign(&pivot);
        }
    }
    rows.push(x.clone());
    PackedBinaryCode::new(code.n(), rows)
}

/// Neighbor of `code` seeded by `x = (0, …, 0 | suffix)` written in the
/// coordinates of `code`'s standard form. The result is returned in those
/// same standard-form coordinates.
pub fn neighbor_from_suffix(
    code: &PackedBinaryCode,
    suffix: &BitVector,
) -> Result<PackedBinaryCode> {
    let sf = code.standard_form();
    if suffix.len() > sf.n() {
        return Err(Error::BadShape("suffix longer than the code".into()));
    }
    let x = BitVector::zeros(sf.n() - suffix.len()).concat(suffix);
    neighbor(&sf, &x)
}

/// Dimension of `a ∩ b`.
pub fn intersection_dim(a: &PackedBinaryCode, b: &PackedBinaryCode) -> Result<usize> {
    let mut rows = a.rows().to_vec();
    rows.extend_from_slice(b.rows());
    let sum = PackedBinaryCode::span(a.n(), rows)?.k();
    Ok(a.k() + b.k() - sum)
}
