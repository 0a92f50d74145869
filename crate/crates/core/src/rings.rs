//! The three characteristic-2 alphabets: `F2`, `F2 + uF2` and `F4 + uF4`.
//!
//! Every element is stored as a 4-bit coefficient vector over the ordered
//! basis `{uω, ω, u, 1}` (bit 3 down to bit 0), which is also its hex digit.
//! The subrings simply forbid some of the bits:
//!
//! | ring      | admissible bits | size |
//! |-----------|-----------------|------|
//! | `F2`      | `0b0001`        | 2    |
//! | `F2 + uF2`| `0b0011`        | 4    |
//! | `F4 + uF4`| `0b1111`        | 16   |
//!
//! One multiplication kernel ([`mul_bits`]) serves all three rings.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const BIT_ONE: u8 = 0b0001;
pub const BIT_U: u8 = 0b0010;
pub const BIT_OMEGA: u8 = 0b0100;
pub const BIT_U_OMEGA: u8 = 0b1000;

/// Tag identifying one of the supported alphabets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RingId {
    #[serde(rename = "f2")]
    F2,
    #[serde(rename = "f2u")]
    F2U,
    #[serde(rename = "f4u")]
    F4U,
}

impl RingId {
    pub const ALL: [RingId; 3] = [RingId::F2, RingId::F2U, RingId::F4U];

    /// Bits an element of this ring may carry.
    pub const fn mask(self) -> u8 {
        match self {
            RingId::F2 => BIT_ONE,
            RingId::F2U => BIT_ONE | BIT_U,
            RingId::F4U => 0b1111,
        }
    }

    pub const fn order(self) -> usize {
        match self {
            RingId::F2 => 2,
            RingId::F2U => 4,
            RingId::F4U => 16,
        }
    }

    /// Binary length of the Gray image of one symbol.
    pub const fn binary_width(self) -> usize {
        match self {
            RingId::F2 => 1,
            RingId::F2U => 2,
            RingId::F4U => 4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            RingId::F2 => "f2",
            RingId::F2U => "f2u",
            RingId::F4U => "f4u",
        }
    }

    /// Parse a single symbol in this ring's canonical encoding.
    pub fn decode_symbol(self, c: char) -> Result<RingElement> {
        match self {
            RingId::F2 => match c {
                '0' => Ok(RingElement::new_unchecked(self, 0)),
                '1' => Ok(RingElement::new_unchecked(self, 1)),
                _ => Err(Error::BadEncoding(format!("'{c}' is not an F2 symbol"))),
            },
            RingId::F2U => decode_short(c),
            RingId::F4U => decode_hex(c),
        }
    }

    /// Parse a vector written either as a bare digit string (`31u0`), a
    /// comma- or space-separated tuple (`(3,1,u,0)`, `1 3 0 0`), or a mix.
    pub fn parse_vector(self, s: &str) -> Result<Vec<RingElement>> {
        s.chars()
            .filter(|c| !matches!(c, '(' | ')' | '[' | ']' | ',' | ' ' | '\t'))
            .map(|c| self.decode_symbol(c))
            .collect()
    }

    pub fn format_vector(self, v: &[RingElement]) -> String {
        v.iter().map(|e| e.symbol()).collect()
    }
}

impl fmt::Display for RingId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RingId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "f2" => Ok(RingId::F2),
            "f2u" | "f2+uf2" => Ok(RingId::F2U),
            "f4u" | "f4+uf4" => Ok(RingId::F4U),
            other => Err(Error::BadEncoding(format!("unknown ring '{other}'"))),
        }
    }
}

/// Product in `F2[ω, u] / (u², ω² + ω + 1)` on the 4-bit coefficient form.
#[inline]
pub const fn mul_bits(a: u8, b: u8) -> u8 {
    // split x = p + u·q with p, q in F4 = {0, 1, ω, ω̄}
    let (p, q) = (a & 0b0101, (a >> 1) & 0b0101);
    let (r, s) = (b & 0b0101, (b >> 1) & 0b0101);
    let low = mul_f4(p, r);
    let high = mul_f4(p, s) ^ mul_f4(q, r);
    low | (high << 1)
}

/// F4 product where the element is `c_1 + c_ω·ω` held in bits 0 and 2.
#[inline]
const fn mul_f4(x: u8, y: u8) -> u8 {
    let (x0, x1) = (x & 1, (x >> 2) & 1);
    let (y0, y1) = (y & 1, (y >> 2) & 1);
    let c0 = (x0 & y0) ^ (x1 & y1);
    let c1 = (x0 & y1) ^ (x1 & y0) ^ (x1 & y1);
    c0 | (c1 << 2)
}

/// Units are exactly the elements that are nonzero modulo `⟨u⟩`.
#[inline]
pub const fn is_unit_bits(a: u8) -> bool {
    a & (BIT_ONE | BIT_OMEGA) != 0
}

/// Hamming weight of the binary image of one symbol of `ring`: itself for
/// `F2`, `φ_{F2+uF2}` for `F2 + uF2`, `φ_{F2+uF2} ∘ ψ_{F4+uF4}` for `F4 + uF4`.
pub const fn lee_weight_bits(ring: RingId, a: u8) -> u32 {
    match ring {
        RingId::F2 => (a & 1) as u32,
        RingId::F2U => lee_weight_f2u(a),
        RingId::F4U => lee_weight_f4u(a),
    }
}

const fn lee_weight_f4u(a: u8) -> u32 {
    // ψ: x = αω + βω̄ with α = (c_ω + c_1) + (c_uω + c_u)u and β = c_1 + c_u·u
    let alpha = ((a >> 2) ^ a) & 1 | ((((a >> 3) ^ (a >> 1)) & 1) << 1);
    let beta = (a & 1) | (a & BIT_U);
    lee_weight_f2u(alpha) + lee_weight_f2u(beta)
}

/// `a + bu ↦ (b, a + b)`.
const fn lee_weight_f2u(x: u8) -> u32 {
    let (a, b) = (x & 1, (x >> 1) & 1);
    (b + (a ^ b)) as u32
}

/// A symbol of one of the three alphabets, tagged with its ring at runtime.
///
/// Used at the text boundary; the arithmetic core works with the statically
/// typed [`F2`], [`F2u`] and [`F4u`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RingElement {
    ring: RingId,
    bits: u8,
}

impl RingElement {
    pub fn new(ring: RingId, bits: u8) -> Result<Self> {
        if bits & !ring.mask() != 0 {
            return Err(Error::BadEncoding(format!(
                "coefficient vector {bits:04b} is not an element of {ring}"
            )));
        }
        Ok(Self { ring, bits })
    }

    const fn new_unchecked(ring: RingId, bits: u8) -> Self {
        Self { ring, bits }
    }

    pub fn zero(ring: RingId) -> Self {
        Self::new_unchecked(ring, 0)
    }

    pub fn one(ring: RingId) -> Self {
        Self::new_unchecked(ring, BIT_ONE)
    }

    pub fn ring(self) -> RingId {
        self.ring
    }

    /// Coefficients over `{uω, ω, u, 1}`, most significant bit first.
    pub fn bits(self) -> u8 {
        self.bits
    }

    pub fn add(self, other: Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(Self::new_unchecked(self.ring, self.bits ^ other.bits))
    }

    pub fn mul(self, other: Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(Self::new_unchecked(
            self.ring,
            mul_bits(self.bits, other.bits),
        ))
    }

    pub fn is_unit(self) -> bool {
        is_unit_bits(self.bits)
    }

    pub fn lee_weight(self) -> u32 {
        lee_weight_bits(self.ring, self.bits)
    }

    /// Canonical one-character symbol for this element's ring.
    pub fn symbol(self) -> char {
        match self.ring {
            RingId::F2 => {
                if self.bits == 0 {
                    '0'
                } else {
                    '1'
                }
            }
            RingId::F2U => encode_short(self.bits),
            RingId::F4U => encode_hex(self.bits),
        }
    }

    pub fn elements(ring: RingId) -> impl Iterator<Item = RingElement> {
        (0u8..16)
            .filter(move |b| b & !ring.mask() == 0)
            .map(move |b| Self::new_unchecked(ring, b))
    }

    fn same_ring(self, other: Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch {
                left: self.ring,
                right: other.ring,
            });
        }
        Ok(())
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Hex digit over the ordered basis `{uω, ω, u, 1}`; always an `F4 + uF4` element.
pub fn decode_hex(c: char) -> Result<RingElement> {
    c.to_digit(16)
        .map(|d| RingElement::new_unchecked(RingId::F4U, d as u8))
        .ok_or_else(|| Error::BadEncoding(format!("'{c}' is not a hex digit")))
}

pub fn encode_hex(bits: u8) -> char {
    std::char::from_digit(u32::from(bits & 0xF), 16)
        .unwrap()
        .to_ascii_uppercase()
}

/// `0 → 0`, `1 → 1`, `u → u`, `3 → 1 + u`.
pub fn decode_short(c: char) -> Result<RingElement> {
    let bits = match c {
        '0' => 0,
        '1' => BIT_ONE,
        'u' | 'U' => BIT_U,
        '3' => BIT_ONE | BIT_U,
        _ => return Err(Error::BadEncoding(format!("'{c}' is not an F2+uF2 symbol"))),
    };
    Ok(RingElement::new_unchecked(RingId::F2U, bits))
}

pub fn encode_short(bits: u8) -> char {
    match bits & 0b11 {
        0 => '0',
        1 => '1',
        2 => 'u',
        _ => '3',
    }
}

/// Statically typed characteristic-2 ring used by the matrix and code layers.
pub trait Ring:
    Copy
    + Eq
    + Hash
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Neg<Output = Self>
    + Mul<Output = Self>
    + AddAssign
    + MulAssign
    + 'static
{
    const ID: RingId;

    fn from_bits(bits: u8) -> Option<Self>;

    fn bits(self) -> u8;

    /// Every element of the ring, in increasing coefficient order.
    fn elements() -> Vec<Self> {
        (0u8..16).filter_map(Self::from_bits).collect()
    }

    /// An F2-basis of the ring; multiplying a generator row by each of these
    /// spans the row's F2-image.
    fn f2_basis() -> Vec<Self>;

    fn is_unit(self) -> bool {
        is_unit_bits(self.bits())
    }

    fn lee_weight(self) -> u32 {
        lee_weight_bits(Self::ID, self.bits())
    }

    fn to_element(self) -> RingElement {
        RingElement::new_unchecked(Self::ID, self.bits())
    }

    fn from_element(e: RingElement) -> Result<Self> {
        if e.ring() != Self::ID {
            return Err(Error::RingMismatch {
                left: Self::ID,
                right: e.ring(),
            });
        }
        Ok(Self::from_bits(e.bits()).expect("ring tag guarantees admissible bits"))
    }

    fn symbol(self) -> char {
        self.to_element().symbol()
    }

    /// Parse a vector in this ring's text encoding.
    fn parse_vector(s: &str) -> Result<Vec<Self>> {
        Self::ID
            .parse_vector(s)?
            .into_iter()
            .map(Self::from_element)
            .collect()
    }

    fn format_vector(v: &[Self]) -> String {
        v.iter().map(|x| x.symbol()).collect()
    }
}

macro_rules! ring_type {
    ($(#[$meta:meta])* $name:ident, $id:expr, [$($basis:expr),+]) => {
        $(#[$meta])*
        #[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub struct $name(u8);

        impl $name {
            pub const ZERO: Self = Self(0);
            pub const ONE: Self = Self(BIT_ONE);
        }

        impl Ring for $name {
            const ID: RingId = $id;

            fn from_bits(bits: u8) -> Option<Self> {
                (bits & !$id.mask() == 0).then_some(Self(bits))
            }

            fn bits(self) -> u8 {
                self.0
            }

            fn f2_basis() -> Vec<Self> {
                vec![$(Self($basis)),+]
            }
        }

        impl Zero for $name {
            fn zero() -> Self {
                Self(0)
            }
            fn is_zero(&self) -> bool {
                self.0 == 0
            }
        }

        impl One for $name {
            fn one() -> Self {
                Self(BIT_ONE)
            }
        }

        impl Add for $name {
            type Output = Self;
            #[inline]
            fn add(self, rhs: Self) -> Self {
                Self(self.0 ^ rhs.0)
            }
        }

        // characteristic 2: subtraction and negation coincide with addition
        impl Sub for $name {
            type Output = Self;
            #[inline]
            fn sub(self, rhs: Self) -> Self {
                Self(self.0 ^ rhs.0)
            }
        }

        impl Neg for $name {
            type Output = Self;
            #[inline]
            fn neg(self) -> Self {
                self
            }
        }

        impl Mul for $name {
            type Output = Self;
            #[inline]
            fn mul(self, rhs: Self) -> Self {
                Self(mul_bits(self.0, rhs.0))
            }
        }

        impl AddAssign for $name {
            #[inline]
            fn add_assign(&mut self, rhs: Self) {
                self.0 ^= rhs.0;
            }
        }

        impl MulAssign for $name {
            #[inline]
            fn mul_assign(&mut self, rhs: Self) {
                self.0 = mul_bits(self.0, rhs.0);
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}", self.symbol())
            }
        }

        impl TryFrom<RingElement> for $name {
            type Error = Error;
            fn try_from(e: RingElement) -> Result<Self> {
                <Self as Ring>::from_element(e)
            }
        }

        impl From<$name> for RingElement {
            fn from(x: $name) -> RingElement {
                x.to_element()
            }
        }
    };
}

ring_type!(
    /// The binary field.
    F2, RingId::F2, [BIT_ONE]
);
ring_type!(
    /// `F2 + uF2` with `u² = 0`.
    F2u, RingId::F2U, [BIT_ONE, BIT_U]
);
ring_type!(
    /// `F4 + uF4` with `u² = 0` and `ω² = ω + 1`.
    F4u, RingId::F4U, [BIT_ONE, BIT_U, BIT_OMEGA, BIT_U_OMEGA]
);

impl F2u {
    pub const U: Self = Self(BIT_U);
    /// `1 + u`, written `3`.
    pub const THREE: Self = Self(BIT_ONE | BIT_U);
}

impl F4u {
    pub const U: Self = Self(BIT_U);
    pub const OMEGA: Self = Self(BIT_OMEGA);
    /// `ω̄ = ω + 1 = ω²`.
    pub const OMEGA_BAR: Self = Self(BIT_OMEGA | BIT_ONE);
    pub const U_OMEGA: Self = Self(BIT_U_OMEGA);

    /// True for the `u`-free subfield `F4`.
    pub fn in_f4(self) -> bool {
        self.0 & (BIT_U | BIT_U_OMEGA) == 0
    }

    /// `x = a + b·u` with `a, b ∈ F4`.
    pub fn u_adic(self) -> (F4u, F4u) {
        (Self(self.0 & 0b0101), Self((self.0 >> 1) & 0b0101))
    }

    /// `x = a·ω + b·ω̄` with `a, b ∈ F2 + uF2`.
    pub fn omega_split(self) -> (F2u, F2u) {
        let c = self.0;
        let (c1, cu, cw, cuw) = (c & 1, (c >> 1) & 1, (c >> 2) & 1, (c >> 3) & 1);
        let a = (cw ^ c1) | ((cuw ^ cu) << 1);
        let b = c1 | (cu << 1);
        (F2u(a), F2u(b))
    }

    /// Embed `F2 + uF2` into `F4 + uF4`.
    pub fn from_f2u(x: F2u) -> F4u {
        F4u(x.0)
    }
}

impl From<F2> for F2u {
    fn from(x: F2) -> F2u {
        F2u(x.0)
    }
}
