//! `sdcodes`: build, measure, extend and search self-dual codes.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 failed precondition,
//! 3 measurement anomaly.

use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand};
use sdcodes::constructions::{from_first_rows, FirstRows};
use sdcodes::enumerators::{
    extract_params, extract_params_low, known_params_registry, EnumeratorParams, REGISTRY_JSON,
};
use sdcodes::extend::{extend, neighbor, neighbor_from_suffix, ExtensionSpec};
use sdcodes::gray::psi_f4u_code;
use sdcodes::io::{binary_to_text, ring_to_text, GeneratorFile};
use sdcodes::search::{run_search, SearchConfig};
use sdcodes::{
    BitVector, Error, F2u, F4u, Method, PackedBinaryCode, Ring, RingGenerator, RingId,
    DEFAULT_BUDGET, F2,
};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "sdcodes",
    version,
    about = "Self-dual codes from four-circulant constructions"
)]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads for enumeration and search.
    #[arg(long, global = true, env = "SDCODES_THREADS")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a generator from first rows.
    Construct(ConstructArgs),
    /// Check a generator file for self-duality.
    Verify(InArgs),
    /// Minimum distance by exhaustive enumeration.
    Mindist(MindistArgs),
    /// Weight distribution and enumerator parameters.
    Wenum(WenumArgs),
    /// Lengthen a ring code by two coordinates.
    Extend(ExtendArgs),
    /// Binary neighbor of a self-dual code.
    Neighbor(NeighborArgs),
    /// Seeded search driven by a TOML config; writes JSON lines.
    Search(SearchArgs),
    /// Print the embedded parameter registry.
    Registry,
}

#[derive(Args)]
struct InArgs {
    /// Generator file.
    #[arg(long = "in")]
    input: PathBuf,
}

#[derive(Args)]
struct Measure {
    /// Also report the weight-enumerator family and parameters.
    #[arg(long)]
    params: bool,

    /// Count only codewords up to this weight (exact, self-dual codes only;
    /// avoids full enumeration).
    #[arg(long, value_name = "W")]
    up_to: Option<usize>,

    /// Enumerate even when the dimension exceeds the budget of 34.
    #[arg(long)]
    force: bool,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(long)]
    ring: RingId,
    /// Circulant order.
    #[arg(long)]
    n: usize,
    #[arg(long)]
    method: Method,
    #[arg(long)]
    ra: String,
    #[arg(long)]
    rb: String,
    #[arg(long)]
    rc: Option<String>,
    /// Unit for the λ-circulant method.
    #[arg(long)]
    lambda: Option<String>,
    /// Read `--rc` as the first row of `C` itself rather than of its
    /// circulant factor.
    #[arg(long)]
    rc_row_of_c: bool,
    /// Write the generator here.
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    measure: Measure,
}

#[derive(Args)]
struct MindistArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    force: bool,
}

#[derive(Args)]
struct WenumArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[command(flatten)]
    measure: Measure,
}

#[derive(Args)]
struct ExtendArgs {
    #[arg(long = "in")]
    input: PathBuf,
    /// Unit with c² = 1.
    #[arg(long)]
    c: String,
    /// Vector with ⟨X, X⟩ = 1.
    #[arg(long)]
    x: String,
    /// Extend the F2+uF2 image of an F4+uF4 input code.
    #[arg(long)]
    f2u_image: bool,
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    measure: Measure,
}

#[derive(Args)]
#[group(id = "seed", required = true, multiple = false)]
struct SeedArgs {
    /// Full-length seed vector in the code's own coordinates.
    #[arg(long, group = "seed")]
    x: Option<String>,
    /// Trailing bits of the seed; the leading coordinates are zero and the
    /// seed is read in the coordinates of the standard form.
    #[arg(long, group = "seed")]
    suffix: Option<String>,
}

#[derive(Args)]
struct NeighborArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[command(flatten)]
    seed: SeedArgs,
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    measure: Measure,
}

#[derive(Args)]
struct SearchArgs {
    /// TOML config.
    #[arg(long)]
    config: PathBuf,
    /// JSON-lines output (stdout if absent).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Override the config's seed.
    #[arg(long)]
    seed: Option<u64>,
    /// Override the config's trial count.
    #[arg(long)]
    trials: Option<u64>,
    /// Fill each record's timestamp field.
    #[arg(long)]
    timestamp: bool,
}

/// A failure with its exit code; `output` is printed to stdout first.
struct Failure {
    code: u8,
    message: String,
    output: Option<String>,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BadEncoding(_)
            | Error::BadShape(_)
            | Error::RingMismatch { .. }
            | Error::BadRing(_)
            | Error::BadConfig(_) => 1,
            Error::NotSelfDualCondition(_)
            | Error::BadLambda(_)
            | Error::BadExtensionVector(_)
            | Error::BadUnit(_)
            | Error::NotANeighborSeed
            | Error::NotSelfOrthogonal(_)
            | Error::BudgetExceeded { .. } => 2,
            Error::UnknownEnumerator(_) | Error::InternalError(_) => 3,
        };
        Failure {
            code,
            message: e.to_string(),
            output: None,
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 1,
        message: message.into(),
        output: None,
    }
}

type Outcome = Result<String, Failure>;

struct Ctx {
    json: bool,
    threads: usize,
}

impl Ctx {
    /// `json` under `--json`, `text` otherwise.
    fn render(&self, value: &Value, text: String) -> String {
        if self.json {
            value.to_string()
        } else {
            text
        }
    }
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

fn write(path: &PathBuf, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| usage(format!("cannot write {}: {e}", path.display())))
}

fn load(path: &PathBuf) -> Result<GeneratorFile, Failure> {
    Ok(GeneratorFile::parse(&read(path)?)?)
}

fn budget(force: bool) -> usize {
    if force {
        usize::MAX
    } else {
        DEFAULT_BUDGET
    }
}

/// Weight data of `code` per the measurement flags, as a JSON object and a
/// text block. Unknown enumerators fail with exit 3 after the distribution.
fn measure(ctx: &Ctx, code: &PackedBinaryCode, m: &Measure) -> Result<(Value, String), Failure> {
    let (dist, d, params, truncated) = match m.up_to {
        Some(w) => {
            let counts = code.low_weight_counts(w)?;
            let d = (1..counts.len()).find(|&i| counts[i] > 0);
            let params = m.params.then(|| extract_params_low(code.n(), &counts));
            let pairs: Vec<(usize, u64)> = counts
                .iter()
                .enumerate()
                .filter(|(_, &a)| a > 0)
                .map(|(i, &a)| (i, a))
                .collect();
            (pairs, d, params, Some(w))
        }
        None => {
            let wd = code.weight_distribution(budget(m.force), ctx.threads)?;
            let d = wd.min_distance();
            let params = m
                .params
                .then(|| extract_params(code.n(), &wd, d.unwrap_or(0)));
            (wd.nonzero(), d, params, None)
        }
    };
    let mut value = json!({
        "n": code.n(),
        "k": code.k(),
        "d": d,
        "distribution": dist,
    });
    if let Some(w) = truncated {
        value["up_to"] = json!(w);
    }
    let mut text = format!("[{},{},{}]\n", code.n(), code.k(), fmt_opt(d));
    if truncated.is_some() {
        text += &format!("weights up to {}:\n", truncated.unwrap());
    }
    for (i, a) in &dist {
        text += &format!("  {i:>3} {a}\n");
    }
    match params {
        None => {}
        Some(Ok(p)) => {
            value["params"] = params_json(&p);
            text += &format!("{p}\n");
        }
        Some(Err(e)) => {
            value["params"] = Value::Null;
            value["error"] = json!(e.to_string());
            let output = if ctx.json { value.to_string() } else { text };
            return Err(Failure {
                output: Some(output),
                ..Failure::from(e)
            });
        }
    }
    Ok((value, text.trim_end().to_string()))
}

fn params_json(p: &EnumeratorParams) -> Value {
    json!({
        "family": p.family.to_string(),
        "beta": p.beta,
        "gamma": p.gamma,
        "out_of_range": p.out_of_range,
        "novelty": known_params_registry().status(p),
    })
}

fn fmt_opt(d: Option<usize>) -> String {
    d.map_or("-".into(), |d| d.to_string())
}

fn wants_measure(m: &Measure) -> bool {
    m.params || m.up_to.is_some()
}

fn construct_typed<R: Ring>(a: &ConstructArgs) -> Result<RingGenerator<R>, Failure> {
    let parse = |s: &str| R::parse_vector(s).map_err(Failure::from);
    let rc = match &a.rc {
        Some(s) => {
            let mut v = parse(s)?;
            if a.rc_row_of_c {
                // C = circ(r)·R has first row r reversed
                v.reverse();
            }
            Some(v)
        }
        None => None,
    };
    if a.rc_row_of_c && rc.is_none() {
        return Err(usage("--rc-row-of-c needs --rc"));
    }
    let mut rows = FirstRows::new(parse(&a.ra)?, parse(&a.rb)?, rc);
    if rows.order() != a.n {
        return Err(usage(format!(
            "--n {} but --rb has {} entries",
            a.n,
            rows.order()
        )));
    }
    if let Some(l) = &a.lambda {
        let l = parse(l)?;
        if l.len() != 1 {
            return Err(usage("--lambda takes a single ring element"));
        }
        rows.lambda = l[0];
    }
    Ok(from_first_rows(a.method, &rows)?)
}

/// Generator text and binary image of a ring generator.
fn ring_outputs<R: Ring>(g: &RingGenerator<R>) -> Result<(String, PackedBinaryCode), Failure> {
    Ok((ring_to_text(g), PackedBinaryCode::from_ring_generator(g)?))
}

fn construct(ctx: &Ctx, a: &ConstructArgs) -> Outcome {
    if a.method.uses_c() && a.rc.is_none() {
        return Err(usage(format!("method '{}' needs --rc", a.method)));
    }
    if !a.method.uses_c() && a.rc.is_some() {
        return Err(usage(format!("method '{}' takes no --rc", a.method)));
    }
    let (text, code) = match a.ring {
        RingId::F2 => ring_outputs(&construct_typed::<F2>(a)?)?,
        RingId::F2U => ring_outputs(&construct_typed::<F2u>(a)?)?,
        RingId::F4U => ring_outputs(&construct_typed::<F4u>(a)?)?,
    };
    if let Some(out) = &a.out {
        write(out, &text)?;
    }
    summarize(ctx, &code, &a.measure)
}

/// `[n,k] self-dual` plus the requested measurements.
fn summarize(ctx: &Ctx, code: &PackedBinaryCode, m: &Measure) -> Outcome {
    let sd = code.is_self_dual();
    let mut value = json!({ "n": code.n(), "k": code.k(), "self_dual": sd });
    let mut text = format!(
        "[{},{}] {}",
        code.n(),
        code.k(),
        if sd { "self-dual" } else { "not self-dual" }
    );
    if wants_measure(m) {
        let (v, t) = measure(ctx, code, m)?;
        value["d"] = v["d"].clone();
        value["distribution"] = v["distribution"].clone();
        if let Some(p) = v.get("params") {
            value["params"] = p.clone();
        }
        if let Some(w) = v.get("up_to") {
            value["up_to"] = w.clone();
        }
        text = format!("{text}\n{t}");
    }
    Ok(ctx.render(&value, text))
}

fn verify(ctx: &Ctx, a: &InArgs) -> Outcome {
    let file = load(&a.input)?;
    let code = file.to_binary()?;
    let sd = code.is_self_dual();
    let so = code.is_self_orthogonal();
    let value = json!({
        "ring": file.ring(),
        "n": code.n(),
        "k": code.k(),
        "self_orthogonal": so,
        "self_dual": sd,
    });
    let text = format!(
        "[{},{}] self-orthogonal: {so}, self-dual: {sd}",
        code.n(),
        code.k()
    );
    let out = ctx.render(&value, text);
    if sd {
        Ok(out)
    } else {
        Err(Failure {
            code: 2,
            message: "code is not self-dual".into(),
            output: Some(out),
        })
    }
}

fn mindist(ctx: &Ctx, a: &MindistArgs) -> Outcome {
    let code = load(&a.input)?.to_binary()?;
    let d = code.min_distance(budget(a.force), ctx.threads)?;
    Ok(ctx.render(&json!({ "n": code.n(), "k": code.k(), "d": d }), fmt_opt(d)))
}

fn wenum(ctx: &Ctx, a: &WenumArgs) -> Outcome {
    let code = load(&a.input)?.to_binary()?;
    let (value, text) = measure(ctx, &code, &a.measure)?;
    Ok(ctx.render(&value, text))
}

fn extend_typed<R: Ring>(
    g: &RingGenerator<R>,
    a: &ExtendArgs,
) -> Result<RingGenerator<R>, Failure> {
    let c = R::parse_vector(&a.c)?;
    if c.len() != 1 {
        return Err(usage("--c takes a single ring element"));
    }
    let spec = ExtensionSpec::new(c[0], R::parse_vector(&a.x)?)?;
    Ok(extend(g, &spec)?)
}

fn binary_as_ring(code: &PackedBinaryCode) -> Result<RingGenerator<F2>, Failure> {
    let rows = code
        .rows()
        .iter()
        .map(|r| {
            r.iter()
                .map(|b| if b { F2::ONE } else { F2::ZERO })
                .collect()
        })
        .collect();
    Ok(RingGenerator::from_rows(rows)?)
}

fn extend_cmd(ctx: &Ctx, a: &ExtendArgs) -> Outcome {
    let (text, code) = match (load(&a.input)?, a.f2u_image) {
        (GeneratorFile::F4u(g), true) => ring_outputs(&extend_typed(&psi_f4u_code(&g)?, a)?)?,
        (_, true) => return Err(usage("--f2u-image needs an f4u input")),
        (GeneratorFile::Binary(c), false) => ring_outputs(&extend_typed(&binary_as_ring(&c)?, a)?)?,
        (GeneratorFile::F2u(g), false) => ring_outputs(&extend_typed(&g, a)?)?,
        (GeneratorFile::F4u(g), false) => ring_outputs(&extend_typed(&g, a)?)?,
    };
    if let Some(out) = &a.out {
        write(out, &text)?;
    }
    summarize(ctx, &code, &a.measure)
}

fn neighbor_cmd(ctx: &Ctx, a: &NeighborArgs) -> Outcome {
    let code = load(&a.input)?.to_binary()?;
    let bits = |s: &str| s.parse::<BitVector>().map_err(Failure::from);
    let d = match (&a.seed.x, &a.seed.suffix) {
        (Some(x), None) => neighbor(&code, &bits(x)?)?,
        (None, Some(s)) => neighbor_from_suffix(&code, &bits(s)?)?,
        _ => return Err(usage("give exactly one of --x and --suffix")),
    };
    if let Some(out) = &a.out {
        write(out, &binary_to_text(&d))?;
    }
    summarize(ctx, &d, &a.measure)
}

fn search(ctx: &Ctx, a: &SearchArgs) -> Outcome {
    let mut cfg = SearchConfig::from_toml(&read(&a.config)?)?;
    if let Some(s) = a.seed {
        cfg.seed = s;
    }
    if let Some(t) = a.trials {
        cfg.trials = t;
    }
    let stamp = a.timestamp.then(|| {
        SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map_or(0, |d| d.as_secs())
    });
    let sink: Box<dyn Write> = match &a.out {
        Some(p) => Box::new(
            fs::File::create(p).map_err(|e| usage(format!("cannot write {}: {e}", p.display())))?,
        ),
        None => Box::new(io::stdout().lock()),
    };
    let mut sink = BufWriter::new(sink);
    let stats = run_search(&cfg, ctx.threads, |r| {
        let mut r = r.clone();
        r.timestamp = stamp;
        writeln!(sink, "{}", r.to_json_line())
            .map_err(|e| Error::InternalError(format!("write failed: {e}")))
    })?;
    sink.flush()
        .map_err(|e| usage(format!("write failed: {e}")))?;
    let summary = serde_json::to_value(stats).expect("stats serialize");
    let text = format!(
        "trials {} emitted {} deduped {} skipped: precondition {} distance {}",
        stats.trials,
        stats.emitted,
        stats.deduped,
        stats.skipped_precondition,
        stats.skipped_distance
    );
    // with records on stdout the summary goes to stderr
    if a.out.is_none() {
        eprintln!("{}", ctx.render(&summary, text));
        return Ok(String::new());
    }
    Ok(ctx.render(&summary, text))
}

fn registry(ctx: &Ctx) -> Outcome {
    if ctx.json {
        let v: Value = serde_json::from_str(REGISTRY_JSON).expect("embedded registry is valid");
        return Ok(v.to_string());
    }
    let r = known_params_registry();
    let mut text = String::from("length family beta gamma status\n");
    for e in &r.entries {
        text += &format!(
            "{:>6} {:<6} {:>4} {:>5} {}\n",
            e.length,
            e.family.to_string(),
            e.beta,
            e.gamma.map_or("-".into(), |g| g.to_string()),
            serde_json::to_value(e.status)
                .expect("status serializes")
                .as_str()
                .unwrap_or("")
        );
    }
    for g in &r.ranges {
        text += &format!(
            "{:>6} {:<6} {:>4}-{} {:>5} unresolved range\n",
            g.length,
            g.family.to_string(),
            g.beta_from,
            g.beta_to,
            g.gamma.map_or("-".into(), |g| g.to_string()),
        );
    }
    Ok(text.trim_end().to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let ctx = Ctx {
        json: cli.json,
        threads: cli
            .threads
            .filter(|&t| t > 0)
            .unwrap_or_else(sdcodes::default_threads),
    };
    let result = match &cli.command {
        Command::Construct(a) => construct(&ctx, a),
        Command::Verify(a) => verify(&ctx, a),
        Command::Mindist(a) => mindist(&ctx, a),
        Command::Wenum(a) => wenum(&ctx, a),
        Command::Extend(a) => extend_cmd(&ctx, a),
        Command::Neighbor(a) => neighbor_cmd(&ctx, a),
        Command::Search(a) => search(&ctx, a),
        Command::Registry => registry(&ctx),
    };
    match result {
        Ok(out) => {
            if !out.is_empty() {
                // a closed pipe (`| head`) is not an error
                let _ = writeln!(io::stdout(), "{out}");
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            if let Some(out) = f.output {
                let _ = writeln!(io::stdout(), "{out}");
            }
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
