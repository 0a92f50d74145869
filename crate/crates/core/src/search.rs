//! Seeded search over construction inputs.
//!
//! Trial `t` draws its free symbols from a ChaCha stream keyed by
//! `(seed, t)`, so any trial can be replayed on its own. Trials run in
//! batches on a worker pool; the batch results are then filtered, deduped
//! and emitted in trial order, which keeps the output independent of the
//! worker count.

use std::collections::HashSet;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bincode::{PackedBinaryCode, WeightDistribution, DEFAULT_BUDGET};
use crate::circulant::symmetric_free_len;
use crate::constructions::{from_first_rows, FirstRows, Method, RingGenerator};
use crate::enumerators::{extract_params, known_params_registry, Family, Novelty};
use crate::error::{Error, Result};
use crate::rings::{F2u, F4u, Ring, RingElement, RingId, F2};

/// Largest exhaustive input space accepted.
pub const EXHAUSTIVE_LIMIT: u64 = 1 << 28;

/// Current result-record schema.
pub const SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    #[default]
    Random,
    Exhaustive,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Dedupe {
    #[default]
    ByWeightDistribution,
    None,
}

/// Search parameters, read from TOML.
///
/// Rows given here are held fixed; the method's other rows are free. `czero`
/// needs `ra` and `rb` (its base code). For `symmetric` a free `ra` is drawn
/// in compressed form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SearchConfig {
    pub ring: RingId,
    pub n: usize,
    pub method: Method,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ra: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rb: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rc: Option<String>,
    #[serde(default)]
    pub mode: Mode,
    #[serde(default)]
    pub trials: u64,
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub min_d: usize,
    #[serde(default)]
    pub dedupe: Dedupe,
    #[serde(default = "default_budget")]
    pub budget: usize,
}

fn default_budget() -> usize {
    DEFAULT_BUDGET
}

impl SearchConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::BadConfig(e.to_string()))
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("config serializes")
    }

    /// Number of trials a run performs: `trials` in random mode, the size of
    /// the input space in exhaustive mode.
    pub fn trial_count(&self) -> Result<u64> {
        let plan = Plan::new(self)?;
        Ok(match self.mode {
            Mode::Random => self.trials,
            Mode::Exhaustive => plan.space_size()?,
        })
    }
}

/// One emitted discovery. Rows are full first rows except `ra` of the
/// symmetric method, which is compressed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub schema: u32,
    pub config: SearchConfig,
    pub seed: u64,
    pub trial: u64,
    pub ra: String,
    pub rb: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rc: Option<String>,
    /// Binary `[n, k, d]`.
    pub params: [usize; 3],
    pub family: Option<Family>,
    pub beta: Option<i64>,
    pub gamma: Option<i64>,
    pub novelty: Option<Novelty>,
    /// `[[i, A_i], ...]` over the nonzero entries.
    pub distribution: Vec<(usize, u64)>,
    pub timestamp: Option<u64>,
}

impl ResultRecord {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }
}

/// Opaque discovery-class key: `(n, k, d, distribution)`. Equal keys do not
/// imply equivalent codes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DedupeKey {
    n: usize,
    k: usize,
    d: usize,
    distribution: Vec<(usize, u64)>,
}

pub fn dedupe_key(r: &ResultRecord) -> DedupeKey {
    let [n, k, d] = r.params;
    DedupeKey {
        n,
        k,
        d,
        distribution: r.distribution.clone(),
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub trials: u64,
    pub skipped_precondition: u64,
    pub skipped_distance: u64,
    pub deduped: u64,
    pub emitted: u64,
}

impl SearchStats {
    /// `skipped + deduped + emitted == trials`.
    pub fn balanced(&self) -> bool {
        self.skipped_precondition + self.skipped_distance + self.deduped + self.emitted
            == self.trials
    }
}

/// Which rows are free and how many symbols each contributes.
struct Plan {
    ring: RingId,
    method: Method,
    fixed: [Option<Vec<u8>>; 3],
    lens: [usize; 3],
}

fn parse_row(ring: RingId, s: &str) -> Result<Vec<u8>> {
    Ok(ring
        .parse_vector(s)?
        .into_iter()
        .map(|e| e.bits())
        .collect())
}

impl Plan {
    fn new(cfg: &SearchConfig) -> Result<Self> {
        let n = cfg.n;
        if n == 0 {
            return Err(Error::BadConfig("n must be positive".into()));
        }
        if cfg.lambda.is_some() && cfg.method != Method::Modified {
            return Err(Error::BadConfig(
                "lambda is only used by method 'modified'".into(),
            ));
        }
        if cfg.rc.is_some() && !cfg.method.uses_c() {
            return Err(Error::BadConfig(format!(
                "method '{}' takes no rc",
                cfg.method
            )));
        }
        if cfg.method == Method::Czero && (cfg.ra.is_none() || cfg.rb.is_none()) {
            return Err(Error::BadConfig(
                "czero needs the base rows ra and rb".into(),
            ));
        }
        if let Some(l) = &cfg.lambda {
            let l = parse_row(cfg.ring, l)?;
            if l.len() != 1 || !crate::rings::is_unit_bits(l[0]) {
                return Err(Error::BadConfig(format!(
                    "lambda must be one unit of {}",
                    cfg.ring
                )));
            }
        }
        let a_len = if cfg.method == Method::Symmetric {
            symmetric_free_len(n)
        } else {
            n
        };
        let lens = [a_len, n, if cfg.method.uses_c() { n } else { 0 }];
        let mut fixed: [Option<Vec<u8>>; 3] = [None, None, None];
        for (i, (name, row)) in [("ra", &cfg.ra), ("rb", &cfg.rb), ("rc", &cfg.rc)]
            .into_iter()
            .enumerate()
        {
            if let Some(row) = row {
                let v = parse_row(cfg.ring, row)?;
                let ok = v.len() == lens[i] || (i == 0 && v.len() == n);
                if !ok {
                    return Err(Error::BadConfig(format!(
                        "{name} has {} symbols, expected {}",
                        v.len(),
                        lens[i]
                    )));
                }
                fixed[i] = Some(v);
            }
        }
        let plan = Self {
            ring: cfg.ring,
            method: cfg.method,
            fixed,
            lens,
        };
        if cfg.mode == Mode::Exhaustive {
            plan.space_size()?;
        }
        Ok(plan)
    }

    fn free_symbols(&self) -> usize {
        (0..3)
            .filter(|&i| self.fixed[i].is_none())
            .map(|i| self.lens[i])
            .sum()
    }

    fn space_size(&self) -> Result<u64> {
        let order = self.ring.order() as u64;
        let mut size: u64 = 1;
        for _ in 0..self.free_symbols() {
            size = size.saturating_mul(order);
            if size > EXHAUSTIVE_LIMIT {
                return Err(Error::BadConfig(format!(
                    "exhaustive space {}^{} exceeds 2^28",
                    order,
                    self.free_symbols()
                )));
            }
        }
        Ok(size)
    }

    /// Free symbols of trial `t`, as ring bit patterns.
    fn draw(&self, mode: Mode, seed: u64, t: u64) -> Vec<u8> {
        let elems: Vec<u8> = RingElement::elements(self.ring)
            .map(RingElement::bits)
            .collect();
        let count = self.free_symbols();
        match mode {
            Mode::Random => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                rng.set_stream(t);
                (0..count)
                    .map(|_| elems[rng.gen_range(0..elems.len())])
                    .collect()
            }
            Mode::Exhaustive => {
                let base = elems.len() as u64;
                let mut x = t;
                let mut out = vec![0u8; count];
                for s in out.iter_mut().rev() {
                    *s = elems[(x % base) as usize];
                    x /= base;
                }
                out
            }
        }
    }

    /// The three rows of a trial; the unused `rc` is empty.
    fn rows(&self, free: &[u8]) -> [Vec<u8>; 3] {
        let mut it = free.iter().copied();
        let mut take = |i: usize| match &self.fixed[i] {
            Some(v) => v.clone(),
            None => it.by_ref().take(self.lens[i]).collect(),
        };
        [take(0), take(1), take(2)]
    }
}

fn to_ring<R: Ring>(bits: &[u8]) -> Vec<R> {
    bits.iter()
        .map(|&b| R::from_bits(b).expect("bits parsed for this ring"))
        .collect()
}

fn build_typed<R: Ring>(cfg: &SearchConfig, rows: &[Vec<u8>; 3]) -> Result<PackedBinaryCode> {
    let mut fr = FirstRows::new(
        to_ring::<R>(&rows[0]),
        to_ring::<R>(&rows[1]),
        cfg.method.uses_c().then(|| to_ring::<R>(&rows[2])),
    );
    if let Some(l) = &cfg.lambda {
        fr.lambda = R::parse_vector(l)?[0];
    }
    let g: RingGenerator<R> = from_first_rows(cfg.method, &fr)?;
    PackedBinaryCode::from_ring_generator(&g)
}

/// Binary image of the construction named by `cfg` on explicit rows.
pub fn build_binary(
    cfg: &SearchConfig,
    ra: &str,
    rb: &str,
    rc: Option<&str>,
) -> Result<PackedBinaryCode> {
    let rc = match rc {
        Some(s) => parse_row(cfg.ring, s)?,
        None => Vec::new(),
    };
    let rows = [parse_row(cfg.ring, ra)?, parse_row(cfg.ring, rb)?, rc];
    build_for_ring(cfg, &rows)
}

fn build_for_ring(cfg: &SearchConfig, rows: &[Vec<u8>; 3]) -> Result<PackedBinaryCode> {
    match cfg.ring {
        RingId::F2 => build_typed::<F2>(cfg, rows),
        RingId::F2U => build_typed::<F2u>(cfg, rows),
        RingId::F4U => build_typed::<F4u>(cfg, rows),
    }
}

enum Outcome {
    Precondition,
    Distance,
    Measured(Box<ResultRecord>),
}

fn measure(code: &PackedBinaryCode, budget: usize) -> Result<(WeightDistribution, usize)> {
    let wd = code.weight_distribution(budget, 1)?;
    let d = wd.min_distance().unwrap_or(0);
    Ok((wd, d))
}

fn run_trial(cfg: &SearchConfig, plan: &Plan, t: u64) -> Result<Outcome> {
    let free = plan.draw(cfg.mode, cfg.seed, t);
    let rows = plan.rows(&free);
    let code = match build_for_ring(cfg, &rows) {
        Ok(c) => c,
        Err(Error::NotSelfDualCondition(_))
        | Err(Error::BadShape(_))
        | Err(Error::BadLambda(_)) => return Ok(Outcome::Precondition),
        Err(e) => return Err(e),
    };
    if code.k() > cfg.budget {
        return Err(Error::BudgetExceeded {
            k: code.k(),
            budget: cfg.budget,
        });
    }
    if cfg.min_d > 0 && code.has_word_below(cfg.min_d, cfg.budget, 1)? {
        return Ok(Outcome::Distance);
    }
    let (wd, d) = measure(&code, cfg.budget)?;
    let params = extract_params(code.n(), &wd, d).ok();
    let encode = |bits: &[u8]| {
        bits.iter()
            .map(|&b| {
                RingElement::new(plan.ring, b)
                    .expect("drawn from the ring")
                    .symbol()
            })
            .collect::<String>()
    };
    Ok(Outcome::Measured(Box::new(ResultRecord {
        schema: SCHEMA,
        config: cfg.clone(),
        seed: cfg.seed,
        trial: t,
        ra: encode(&rows[0]),
        rb: encode(&rows[1]),
        rc: plan.method.uses_c().then(|| encode(&rows[2])),
        params: [code.n(), code.k(), d],
        family: params.as_ref().map(|p| p.family),
        beta: params.as_ref().map(|p| p.beta),
        gamma: params.as_ref().and_then(|p| p.gamma),
        novelty: params.as_ref().map(|p| known_params_registry().status(p)),
        distribution: wd.nonzero(),
        timestamp: None,
    })))
}

/// Trials evaluated between two in-order merges.
const BATCH: u64 = 256;

/// Run the search, handing each emitted record to `emit` in trial order.
pub fn run_search(
    cfg: &SearchConfig,
    threads: usize,
    mut emit: impl FnMut(&ResultRecord) -> Result<()>,
) -> Result<SearchStats> {
    let plan = Plan::new(cfg)?;
    let total = match cfg.mode {
        Mode::Random => cfg.trials,
        Mode::Exhaustive => plan.space_size()?,
    };
    let mut stats = SearchStats {
        trials: total,
        ..SearchStats::default()
    };
    let mut seen: HashSet<DedupeKey> = HashSet::new();
    let threads = threads.max(1);
    let mut start = 0;
    while start < total {
        let end = (start + BATCH * threads as u64).min(total);
        for outcome in run_batch(cfg, &plan, start, end, threads)? {
            match outcome {
                Outcome::Precondition => stats.skipped_precondition += 1,
                Outcome::Distance => stats.skipped_distance += 1,
                Outcome::Measured(rec) => {
                    if cfg.dedupe == Dedupe::ByWeightDistribution && !seen.insert(dedupe_key(&rec))
                    {
                        stats.deduped += 1;
                    } else {
                        stats.emitted += 1;
                        emit(&rec)?;
                    }
                }
            }
        }
        start = end;
    }
    debug_assert!(stats.balanced());
    Ok(stats)
}

/// Outcomes of trials `start..end`, in trial order.
fn run_batch(
    cfg: &SearchConfig,
    plan: &Plan,
    start: u64,
    end: u64,
    threads: usize,
) -> Result<Vec<Outcome>> {
    let len = (end - start) as usize;
    if threads == 1 || len == 1 {
        return (start..end).map(|t| run_trial(cfg, plan, t)).collect();
    }
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<Result<Outcome>>>> = Mutex::new((0..len).map(|_| None).collect());
    std::thread::scope(|s| {
        for _ in 0..threads.min(len) {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= len {
                    break;
                }
                let r = run_trial(cfg, plan, start + i as u64);
                slots.lock().unwrap()[i] = Some(r);
            });
        }
    });
    slots
        .into_inner()
        .unwrap()
        .into_iter()
        .map(|r| r.expect("every slot filled"))
        .collect()
}

/// Convenience wrapper collecting the records.
pub fn collect_search(
    cfg: &SearchConfig,
    threads: usize,
) -> Result<(Vec<ResultRecord>, SearchStats)> {
    let mut out = Vec::new();
    let stats = run_search(cfg, threads, |r| {
        out.push(r.clone());
        Ok(())
    })?;
    Ok((out, stats))
}

/// Rebuild the code from a record and re-measure it. `Ok(true)` when the
/// parameters, family data and distribution all agree.
pub fn verify_record(r: &ResultRecord) -> Result<bool> {
    if r.schema != SCHEMA {
        return Err(Error::BadConfig(format!(
            "unsupported record schema {}",
            r.schema
        )));
    }
    let code = build_binary(&r.config, &r.ra, &r.rb, r.rc.as_deref())?;
    let (wd, d) = measure(&code, r.config.budget)?;
    let params = extract_params(code.n(), &wd, d).ok();
    Ok([code.n(), code.k(), d] == r.params
        && wd.nonzero() == r.distribution
        && params.as_ref().map(|p| p.family) == r.family
        && params.as_ref().map(|p| p.beta) == r.beta
        && params.as_ref().and_then(|p| p.gamma) == r.gamma)
}
