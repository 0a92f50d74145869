//! Binary self-dual codes from four-circulant-type constructions over
//! `F2`, `F2 + uF2` and `F4 + uF4`.
//!
//! The arithmetic layer is generic over the alphabet through the [`Ring`]
//! trait; [`F2`], [`F2u`] and [`F4u`] are its three instances, and the
//! aliases below name the concrete matrix and generator types.
//!
//! A typical pipeline: build circulant blocks ([`circulant`]), assemble a
//! self-dual ring generator ([`constructions`]), Gray-map it to a binary code
//! ([`PackedBinaryCode::from_ring_generator`]), enumerate its weights and read
//! off the extremal-enumerator parameters ([`enumerators::extract_params`]).

pub mod bincode;
pub mod bits;
pub mod circulant;
pub mod constructions;
pub mod enumerators;
pub mod error;
pub mod extend;
pub mod gray;
pub mod io;
pub mod rings;
pub mod search;

pub use bincode::{PackedBinaryCode, WeightDistribution, DEFAULT_BUDGET};
pub use bits::BitVector;
pub use circulant::{CirculantKind, CirculantSpec, RingMatrix};
pub use constructions::{Method, RingGenerator};
pub use enumerators::{EnumeratorParams, Family};
pub use error::{Error, Result};
pub use rings::{F2u, F4u, Ring, RingElement, RingId, F2};

pub type F2Matrix = RingMatrix<F2>;
pub type F2uMatrix = RingMatrix<F2u>;
pub type F4uMatrix = RingMatrix<F4u>;

pub type F2Generator = RingGenerator<F2>;
pub type F2uGenerator = RingGenerator<F2u>;
pub type F4uGenerator = RingGenerator<F4u>;

pub type F2Circulant = CirculantSpec<F2>;
pub type F2uCirculant = CirculantSpec<F2u>;
pub type F4uCirculant = CirculantSpec<F4u>;

/// Worker count: `SDCODES_THREADS` if set and positive, else the available
/// parallelism.
pub fn default_threads() -> usize {
    std::env::var("SDCODES_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .filter(|&t| t > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}
