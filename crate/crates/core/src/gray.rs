//! Gray maps from the ring alphabets to binary.
//!
//! All maps act on whole vectors and emit `(first block | second block)`:
//!
//! ```text
//! ψ_F4      : aω + bω̄ ↦ (a, b),   a, b ∈ F2^n
//! φ_F2+uF2  : a + bu  ↦ (b, a+b), a, b ∈ F2^n
//! ψ_F4+uF4  : aω + bω̄ ↦ (a, b),   a, b ∈ (F2+uF2)^n
//! φ_F4+uF4  : a + bu  ↦ (b, a+b), a, b ∈ F4^n
//! ```
//!
//! The canonical binary image of an `F4 + uF4` vector is `φ_F2+uF2 ∘ ψ_F4+uF4`.

use crate::bits::BitVector;
use crate::constructions::RingGenerator;
use crate::error::{Error, Result};
use crate::rings::{F2u, F4u, Ring, RingId, BIT_ONE, BIT_U};

/// `ψ_F4`; every entry must lie in the subfield `F4`.
pub fn psi_f4(v: &[F4u]) -> Result<BitVector> {
    if let Some(x) = v.iter().find(|x| !x.in_f4()) {
        return Err(Error::BadRing(format!("{x} is not in F4")));
    }
    // c_1 + c_ω ω = (c_1 + c_ω) ω + c_1 ω̄
    let a = v.iter().map(|x| (x.bits() ^ (x.bits() >> 2)) & 1 == 1);
    let b = v.iter().map(|x| x.bits() & BIT_ONE != 0);
    Ok(BitVector::from_bits(a.chain(b)))
}

/// `φ_F2+uF2`.
pub fn phi_f2u(v: &[F2u]) -> BitVector {
    let b = v.iter().map(|x| x.bits() & BIT_U != 0);
    let ab = v.iter().map(|x| {
        let bits = x.bits();
        (bits ^ (bits >> 1)) & 1 == 1
    });
    BitVector::from_bits(b.chain(ab))
}

/// `ψ_F4+uF4`.
pub fn psi_f4u(v: &[F4u]) -> Vec<F2u> {
    let (a, b): (Vec<F2u>, Vec<F2u>) = v.iter().map(|x| x.omega_split()).unzip();
    a.into_iter().chain(b).collect()
}

/// Generator of the `F2 + uF2` code `ψ_F4+uF4(C)`: the map is only
/// `F2 + uF2`-linear, so each row `r` contributes `ψ(r)` and `ψ(ω·r)`.
pub fn psi_f4u_code(g: &RingGenerator<F4u>) -> Result<RingGenerator<F2u>> {
    let rows = g
        .rows()
        .flat_map(|r| {
            let w: Vec<F4u> = r.iter().map(|&x| x * F4u::OMEGA).collect();
            [psi_f4u(r), psi_f4u(&w)]
        })
        .collect();
    RingGenerator::from_rows(rows)
}

/// `φ_F4+uF4`; the result lies in `F4^{2n}` (held as `u`-free `F4u` values).
pub fn phi_f4u(v: &[F4u]) -> Vec<F4u> {
    let (a, b): (Vec<F4u>, Vec<F4u>) = v.iter().map(|x| x.u_adic()).unzip();
    let sum = a.iter().zip(&b).map(|(&x, &y)| x + y);
    b.iter().copied().chain(sum).collect()
}

/// Binary image by ring: identity, `φ_F2+uF2`, or `φ_F2+uF2 ∘ ψ_F4+uF4`.
pub fn to_binary<R: Ring>(v: &[R]) -> BitVector {
    match R::ID {
        RingId::F2 => BitVector::from_bits(v.iter().map(|x| !x.is_zero())),
        RingId::F2U => phi_f2u(&cast::<R, F2u>(v)),
        RingId::F4U => phi_f2u(&psi_f4u(&cast::<R, F4u>(v))),
    }
}

/// The other composition `ψ_F4 ∘ φ_F4+uF4` (an equivalent code, not the same one).
pub fn to_binary_via_f4(v: &[F4u]) -> BitVector {
    psi_f4(&phi_f4u(v)).expect("φ_F4+uF4 lands in F4")
}

fn cast<R: Ring, S: Ring>(v: &[R]) -> Vec<S> {
    v.iter()
        .map(|x| S::from_bits(x.bits()).expect("same ring tag"))
        .collect()
}
