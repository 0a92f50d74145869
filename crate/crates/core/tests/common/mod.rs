#![allow(dead_code)]

pub mod oracle;
pub mod props;
pub mod tables;

use sdcodes::circulant::{circulant, expand_symmetric, reverse_circulant};
use sdcodes::constructions::{
    czero_perturb, four_circulant, generalized_four_circulant, symmetric_variant,
};
use sdcodes::enumerators::{extract_params, EnumeratorParams};
use sdcodes::{PackedBinaryCode, Ring, RingGenerator, WeightDistribution, F2};

pub fn v<R: Ring>(s: &str) -> Vec<R> {
    R::parse_vector(s).unwrap()
}

pub fn four<R: Ring>(ra: &str, rb: &str) -> RingGenerator<R> {
    four_circulant(&circulant(&v::<R>(ra)), &circulant(&v::<R>(rb))).unwrap()
}

pub fn general<R: Ring>(ra: &str, rb: &str, rc: &str) -> RingGenerator<R> {
    generalized_four_circulant(
        &circulant(&v::<R>(ra)),
        &circulant(&v::<R>(rb)),
        &reverse_circulant(&v::<R>(rc)),
    )
    .unwrap()
}

/// Symmetric-circulant `A` given by its compressed first row.
pub fn symmetric<R: Ring>(ra: &str, rb: &str, rc: &str) -> RingGenerator<R> {
    let rb = v::<R>(rb);
    let a = circulant(&expand_symmetric(rb.len(), &v::<R>(ra)).unwrap());
    symmetric_variant(&a, &circulant(&rb), &reverse_circulant(&v::<R>(rc))).unwrap()
}

/// The length-40 czero family is built on the fourth four-circulant code.
pub fn czero40(rc: &str) -> RingGenerator<F2> {
    let (ra, rb, _) = tables::LEN40_FOUR[3];
    czero_perturb(&four::<F2>(ra, rb), &reverse_circulant(&v::<F2>(rc))).unwrap()
}

pub fn binary<R: Ring>(g: &RingGenerator<R>) -> PackedBinaryCode {
    PackedBinaryCode::from_ring_generator(g).unwrap()
}

pub fn threads() -> usize {
    sdcodes::default_threads()
}

pub fn measure(code: &PackedBinaryCode) -> (WeightDistribution, EnumeratorParams) {
    let wd = code.weight_distribution(code.k(), threads()).unwrap();
    let d = wd.min_distance().unwrap();
    let p = extract_params(code.n(), &wd, d).unwrap();
    (wd, p)
}

pub fn low_params(code: &PackedBinaryCode) -> sdcodes::Result<EnumeratorParams> {
    sdcodes::enumerators::extract_params_low(code.n(), &code.low_weight_counts(14)?)
}

pub fn reversed(s: &str) -> String {
    let mut parts: Vec<&str> = if s.contains(',') {
        s.split(',').collect()
    } else {
        s.split("").filter(|p| !p.is_empty()).collect()
    };
    parts.reverse();
    parts.join(if s.contains(',') { "," } else { "" })
}
