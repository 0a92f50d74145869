//! Extremal weight-enumerator families at lengths 40, 64 and 68 and the
//! extraction of their free parameters from a measured distribution.
//!
//! ```text
//! W40   = 1 + (125 + 16β) y^8  + (1664 − 64β) y^10 + …        0 ≤ β ≤ 10
//! W64,1 = 1 + (1312 + 16β) y^12 + (22016 − 64β) y^14 + …
//! W64,2 = 1 + (1312 + 16β) y^12 + (23040 − 64β) y^14 + …
//! W68,1 = 1 + (442 + 4β) y^12  + (10864 − 8β) y^14 + …         104 ≤ β ≤ 1358
//! W68,2 = 1 + (442 + 4β) y^12  + (14960 − 8β − 256γ) y^14 + …  0 ≤ γ ≤ 9
//! ```

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::bincode::WeightDistribution;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    W40,
    W64_1,
    W64_2,
    W68_1,
    W68_2,
}

impl Family {
    pub fn length(self) -> usize {
        match self {
            Family::W40 => 40,
            Family::W64_1 | Family::W64_2 => 64,
            Family::W68_1 | Family::W68_2 => 68,
        }
    }

    /// Extremal minimum distance at this length.
    pub fn min_distance(self) -> usize {
        match self {
            Family::W40 => 8,
            _ => 12,
        }
    }

    /// The low-order coefficients the family prescribes, as `(weight, A_w)`.
    pub fn coefficients(self, beta: i64, gamma: i64) -> [(usize, i64); 2] {
        match self {
            Family::W40 => [(8, 125 + 16 * beta), (10, 1664 - 64 * beta)],
            Family::W64_1 => [(12, 1312 + 16 * beta), (14, 22016 - 64 * beta)],
            Family::W64_2 => [(12, 1312 + 16 * beta), (14, 23040 - 64 * beta)],
            Family::W68_1 => [(12, 442 + 4 * beta), (14, 10864 - 8 * beta)],
            Family::W68_2 => [(12, 442 + 4 * beta), (14, 14960 - 8 * beta - 256 * gamma)],
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::W40 => "W40",
            Family::W64_1 => "W64_1",
            Family::W64_2 => "W64_2",
            Family::W68_1 => "W68_1",
            Family::W68_2 => "W68_2",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EnumeratorParams {
    pub length: usize,
    pub family: Family,
    pub beta: i64,
    pub gamma: Option<i64>,
    /// Set when the parameters fall outside the family's documented range.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub out_of_range: bool,
}

impl fmt::Display for EnumeratorParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} beta={}", self.family, self.beta)?;
        if let Some(g) = self.gamma {
            write!(f, " gamma={g}")?;
        }
        Ok(())
    }
}

fn exact_div(num: i64, den: i64, what: &str) -> Result<i64> {
    if num % den != 0 {
        return Err(Error::UnknownEnumerator(format!(
            "{what} = {num}/{den} is not an integer"
        )));
    }
    Ok(num / den)
}

/// Smallest weight a length-`n` code must reach to be extremal, for the
/// lengths with a known family.
pub fn extremal_distance(n: usize) -> Option<usize> {
    match n {
        40 => Some(8),
        64 | 68 => Some(12),
        _ => None,
    }
}

/// [`extract_params`] from the truncated counts `A_0..A_m` of
/// [`crate::PackedBinaryCode::low_weight_counts`]; `m` must reach `d + 2`.
pub fn extract_params_low(n: usize, low: &[u64]) -> Result<EnumeratorParams> {
    let extremal = extremal_distance(n)
        .ok_or_else(|| Error::UnknownEnumerator(format!("no enumerator family for length {n}")))?;
    if low.len() < extremal + 3 {
        return Err(Error::UnknownEnumerator(format!(
            "need counts up to weight {}, got {}",
            extremal + 2,
            low.len().saturating_sub(1)
        )));
    }
    let d = (1..low.len()).find(|&i| low[i] > 0).unwrap_or(low.len());
    let mut counts = low.to_vec();
    counts.resize(n + 1, 0);
    extract_params(n, &WeightDistribution::new(counts), d)
}

/// Identify the family and its parameters from `A_8`/`A_10` (length 40) or
/// `A_12`/`A_14` (lengths 64 and 68). All arithmetic is exact.
pub fn extract_params(n: usize, wd: &WeightDistribution, d: usize) -> Result<EnumeratorParams> {
    let a = |i: usize| wd.get(i) as i64;
    let extremal = extremal_distance(n)
        .ok_or_else(|| Error::UnknownEnumerator(format!("no enumerator family for length {n}")))?;
    if wd.len() != n {
        return Err(Error::UnknownEnumerator(format!(
            "distribution has length {} but n = {n}",
            wd.len()
        )));
    }
    if d != extremal {
        return Err(Error::UnknownEnumerator(format!(
            "minimum distance {d} is not the extremal {extremal} at length {n}"
        )));
    }
    let params = |family, beta, gamma, out_of_range| EnumeratorParams {
        length: n,
        family,
        beta,
        gamma,
        out_of_range,
    };
    match n {
        40 => {
            let beta = exact_div(a(8) - 125, 16, "beta")?;
            if a(10) != 1664 - 64 * beta {
                return Err(Error::UnknownEnumerator(format!(
                    "A_10 = {} does not fit W40 with beta={beta}",
                    a(10)
                )));
            }
            Ok(params(Family::W40, beta, None, !(0..=10).contains(&beta)))
        }
        64 => {
            let beta = exact_div(a(12) - 1312, 16, "beta")?;
            let first = a(14) == 22016 - 64 * beta;
            let second = a(14) == 23040 - 64 * beta;
            match (first, second) {
                (true, false) => Ok(params(Family::W64_1, beta, None, false)),
                (false, true) => Ok(params(Family::W64_2, beta, None, false)),
                (true, true) => Err(Error::UnknownEnumerator(
                    "both length-64 families match".into(),
                )),
                (false, false) => Err(Error::UnknownEnumerator(format!(
                    "A_14 = {} fits neither length-64 family with beta={beta}",
                    a(14)
                ))),
            }
        }
        _ => {
            let beta = exact_div(a(12) - 442, 4, "beta")?;
            if a(14) == 10864 - 8 * beta {
                return Ok(params(
                    Family::W68_1,
                    beta,
                    None,
                    !(104..=1358).contains(&beta),
                ));
            }
            let gamma = exact_div(14960 - 8 * beta - a(14), 256, "gamma")?;
            Ok(params(
                Family::W68_2,
                beta,
                Some(gamma),
                !(0..=9).contains(&gamma),
            ))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    /// Existence was established before the codes listed here.
    Known,
    /// First obtained by the constructions this crate implements.
    New,
    /// Inside a documented range whose individual members are not listed.
    UnresolvedRange,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegistryEntry {
    pub length: usize,
    pub family: Family,
    pub beta: i64,
    pub gamma: Option<i64>,
    pub status: Status,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegistryRange {
    pub length: usize,
    pub family: Family,
    pub gamma: Option<i64>,
    pub beta_from: i64,
    pub beta_to: i64,
    pub status: Status,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Registry {
    pub version: u32,
    pub entries: Vec<RegistryEntry>,
    pub ranges: Vec<RegistryRange>,
}

/// Novelty of a parameter set relative to the registry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Novelty {
    Known,
    New,
    UnresolvedRange,
    /// Not listed anywhere in the registry.
    Unlisted,
}

pub const REGISTRY_JSON: &str = include_str!("../data/registry.json");

/// Parameter sets reported at length 68 (new ones and the previously known
/// ones they are compared against).
pub fn known_params_registry() -> &'static Registry {
    static REGISTRY: OnceLock<Registry> = OnceLock::new();
    REGISTRY
        .get_or_init(|| serde_json::from_str(REGISTRY_JSON).expect("embedded registry is valid"))
}

impl Registry {
    pub fn status(&self, p: &EnumeratorParams) -> Novelty {
        let hit = self.entries.iter().find(|e| {
            e.length == p.length && e.family == p.family && e.beta == p.beta && e.gamma == p.gamma
        });
        if let Some(e) = hit {
            return match e.status {
                Status::Known => Novelty::Known,
                Status::New => Novelty::New,
                Status::UnresolvedRange => Novelty::UnresolvedRange,
            };
        }
        let in_range = self.ranges.iter().any(|r| {
            r.length == p.length
                && r.family == p.family
                && r.gamma == p.gamma
                && (r.beta_from..=r.beta_to).contains(&p.beta)
        });
        if in_range {
            Novelty::UnresolvedRange
        } else {
            Novelty::Unlisted
        }
    }

    pub fn new_entries(&self) -> impl Iterator<Item = &RegistryEntry> {
        self.entries.iter().filter(|e| e.status == Status::New)
    }
}
