//! Property checks shared by the proptest suite and the acceptance runner.
//! Each returns `Err` with a description on the first violation.

use rand::Rng;
use sdcodes::circulant::{lambda_circulant, reverse_circulant, CirculantSpec};
use sdcodes::constructions::{four_circulant, from_first_rows, FirstRows};
use sdcodes::extend::{extend, intersection_dim, neighbor, ExtensionSpec};
use sdcodes::gray::to_binary;
use sdcodes::{BitVector, Error, Method, PackedBinaryCode, Ring, RingGenerator, RingMatrix};

use super::oracle::{self, Dense};

type Check = Result<(), String>;

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn dense<R: Ring>(m: &RingMatrix<R>) -> Dense<R> {
    m.row_iter().map(|r| r.to_vec()).collect()
}

pub fn pick<R: Ring>(rng: &mut impl Rng) -> R {
    let e = R::elements();
    e[rng.gen_range(0..e.len())]
}

pub fn random_row<R: Ring>(rng: &mut impl Rng, n: usize) -> Vec<R> {
    (0..n).map(|_| pick(rng)).collect()
}

pub fn random_unit<R: Ring>(rng: &mut impl Rng) -> R {
    let units: Vec<R> = R::elements().into_iter().filter(|x| x.is_unit()).collect();
    units[rng.gen_range(0..units.len())]
}

/// Exhaustive ring laws over all triples; returns the number of triples.
pub fn ring_axioms<R: Ring>() -> Result<usize, String> {
    let e = R::elements();
    let mut count = 0;
    for &a in &e {
        ensure(a + a == R::zero(), || format!("{a} + {a} != 0"))?;
        ensure(a * R::one() == a, || format!("{a}·1 != {a}"))?;
        let invertible = e.iter().any(|&b| a * b == R::one());
        ensure(a.is_unit() == invertible, || {
            format!("unit test wrong for {a}")
        })?;
        let image = to_binary(&[a]);
        ensure(image.weight() == a.lee_weight(), || {
            format!("Lee weight of {a} differs from its Gray image")
        })?;
        let s = R::format_vector(&[a]);
        ensure(R::parse_vector(&s).ok() == Some(vec![a]), || {
            format!("{s} does not round-trip")
        })?;
        for &b in &e {
            ensure(a + b == b + a, || format!("{a}+{b} not commutative"))?;
            ensure(a * b == b * a, || format!("{a}·{b} not commutative"))?;
            ensure(
                (a * b).bits() == oracle::mul_bits(a.bits(), b.bits()),
                || format!("{a}·{b} disagrees with the reference product"),
            )?;
            for &c in &e {
                count += 1;
                ensure((a + b) + c == a + (b + c), || {
                    format!("+ not associative at {a},{b},{c}")
                })?;
                ensure((a * b) * c == a * (b * c), || {
                    format!("· not associative at {a},{b},{c}")
                })?;
                ensure(a * (b + c) == a * b + a * c, || {
                    format!("not distributive at {a},{b},{c}")
                })?;
            }
        }
    }
    Ok(count)
}

/// λ-circulants of one order commute; `C·R` is symmetric and
/// `A·R·Cᵀ + C·R·Aᵀ = 0`.
pub fn lambda_circulants<R: Ring>(ra: &[R], rc: &[R], lambda: R) -> Check {
    let n = ra.len();
    let (a, c) = (lambda_circulant(ra, lambda), lambda_circulant(rc, lambda));
    let (oa, oc) = (
        oracle::lambda_circ(ra, lambda),
        oracle::lambda_circ(rc, lambda),
    );
    ensure(dense(&a) == oa && dense(&c) == oc, || {
        "λ-circulant entries differ".into()
    })?;
    ensure(a.commutes(&c).unwrap(), || {
        "λ-circulants do not commute".into()
    })?;
    let r = oracle::back_diag::<R>(n);
    let cr = oracle::mul(&oc, &r);
    ensure(cr == oracle::transpose(&cr), || {
        "C·R is not symmetric".into()
    })?;
    let lhs = oracle::add(
        &oracle::mul(&oracle::mul(&oa, &r), &oracle::transpose(&oc)),
        &oracle::mul(&cr, &oracle::transpose(&oa)),
    );
    ensure(oracle::is_zero(&lhs), || "A·R·Cᵀ + C·R·Aᵀ != 0".into())?;
    let lib_cr = CirculantSpec::reverse(rc.to_vec())
        .with_lambda(lambda)
        .build()
        .unwrap();
    ensure(dense(&lib_cr) == cr, || {
        "λ-reverse-circulant is not (λ-circulant)·R".into()
    })
}

/// A symmetric circulant commutes with a reverse circulant.
pub fn symmetric_commutes<R: Ring>(free: &[R], rc: &[R]) -> Check {
    let n = rc.len();
    let s = CirculantSpec::symmetric(n, free.to_vec())
        .unwrap()
        .build()
        .unwrap();
    let s = dense(&s);
    ensure(s == oracle::transpose(&s), || {
        "symmetric circulant is not symmetric".into()
    })?;
    ensure(s == oracle::circ(&s[0]), || {
        "symmetric circulant is not circulant".into()
    })?;
    let f = dense(&reverse_circulant(rc));
    ensure(
        f == oracle::mul(&oracle::circ(rc), &oracle::back_diag(n)),
        || "reverse circulant is not circ·R".into(),
    )?;
    ensure(oracle::mul(&s, &f) == oracle::mul(&f, &s), || {
        "S·F != F·S".into()
    })
}

/// For an orthogonal pair the binary images are orthogonal. `Ok(false)` when
/// the pair is not orthogonal and nothing was checked.
pub fn gray_orthogonal<R: Ring>(u: &[R], v: &[R]) -> Result<bool, String> {
    if !oracle::inner(u, v).is_zero() {
        return Ok(false);
    }
    let (bu, bv) = (to_binary(u), to_binary(v));
    ensure(bu.len() == u.len() * R::ID.binary_width(), || {
        "image length".into()
    })?;
    ensure(!bu.dot(&bv), || {
        format!("images of {u:?}, {v:?} are not orthogonal")
    })?;
    Ok(true)
}

/// Redundancy block `M` of `(I | M)` for `method`, built from first rows with
/// the reference matrices.
fn reference_block<R: Ring>(method: Method, fr: &FirstRows<R>) -> Option<Dense<R>> {
    let n = fr.order();
    let ra: Vec<R> = if fr.ra.len() == n {
        fr.ra.clone()
    } else {
        // compressed symmetric row: a_i = a_{n-i}
        (0..n).map(|i| fr.ra[i.min(n - i)]).collect()
    };
    let a = oracle::lambda_circ(&ra, fr.lambda);
    let at = oracle::transpose(&a);
    let r = oracle::back_diag::<R>(n);
    let c = fr.rc.as_ref().map(|rc| oracle::mul(&oracle::circ(rc), &r));
    Some(match method {
        Method::FourCirculant => {
            let b = oracle::circ(&fr.rb);
            oracle::block(&a, &b, &oracle::transpose(&b), &at)
        }
        Method::Modified => {
            let b = oracle::mul(&oracle::lambda_circ(&fr.rb, fr.lambda), &r);
            oracle::block(&a, &b, &b, &a)
        }
        Method::General | Method::Czero | Method::Symmetric => {
            let b = oracle::circ(&fr.rb);
            let c = c?;
            let lower = if method == Method::Symmetric {
                a.clone()
            } else {
                at
            };
            oracle::block(
                &a,
                &oracle::add(&b, &c),
                &oracle::add(&oracle::transpose(&b), &c),
                &lower,
            )
        }
    })
}

/// A successful construction is exactly `(I | M)` with `M·Mᵀ = I`; a
/// rejection is a precondition error. Returns whether it was accepted.
pub fn construction<R: Ring>(method: Method, fr: &FirstRows<R>) -> Result<bool, String> {
    let m = reference_block(method, fr).ok_or("missing rc")?;
    let k = m.len();
    let mmt = oracle::mul(&m, &oracle::transpose(&m));
    match from_first_rows(method, fr) {
        Ok(g) => {
            let expect: Dense<R> = oracle::identity::<R>(k)
                .into_iter()
                .zip(&m)
                .map(|(i, row)| [i, row.clone()].concat())
                .collect();
            ensure(dense(g.matrix()) == expect, || {
                format!("{method} generator layout")
            })?;
            ensure(mmt == oracle::identity(k), || {
                format!("{method} accepted M·Mᵀ != I")
            })?;
            ensure(g.gram().is_zero(), || {
                "library Gram matrix is not zero".into()
            })?;
            let b = PackedBinaryCode::from_ring_generator(&g).map_err(|e| e.to_string())?;
            ensure(b.is_self_dual(), || "binary image is not self-dual".into())?;
            Ok(true)
        }
        Err(Error::NotSelfDualCondition(_)) => {
            // the commuting conditions may reject a self-dual block
            let commute_checked = matches!(method, Method::General | Method::Czero);
            ensure(mmt != oracle::identity(k) || commute_checked, || {
                format!("{method} rejected a block with M·Mᵀ = I")
            })?;
            Ok(false)
        }
        Err(Error::BadShape(_)) if method == Method::Symmetric => Ok(false),
        Err(e) => Err(format!("{method}: unexpected error {e}")),
    }
}

/// A random self-dual generator from the four-circulant construction;
/// falls back to `A = I, B = 0` if sampling keeps failing.
pub fn random_self_dual<R: Ring>(rng: &mut impl Rng, n: usize) -> RingGenerator<R> {
    for _ in 0..4000 {
        let (ra, rb) = (random_row::<R>(rng, n), random_row::<R>(rng, n));
        let fr = FirstRows::new(ra, rb, None);
        if let Ok(g) = from_first_rows(Method::FourCirculant, &fr) {
            return g;
        }
    }
    four_circulant(&RingMatrix::identity(n), &RingMatrix::zeros(n, n)).unwrap()
}

pub fn square_roots_of_one<R: Ring>() -> Vec<R> {
    R::elements()
        .into_iter()
        .filter(|&c| c * c == R::one())
        .collect()
}

/// Random `X` with `⟨X, X⟩ = 1`.
pub fn random_unit_vector<R: Ring>(rng: &mut impl Rng, n: usize) -> Vec<R> {
    loop {
        let x = random_row::<R>(rng, n);
        if oracle::inner(&x, &x) == R::one() {
            return x;
        }
    }
}

/// The extension is `[1, 0 | X]` over `[y, c·y | r]` and self-dual.
pub fn extension<R: Ring>(g: &RingGenerator<R>, c: R, x: &[R]) -> Check {
    let spec = ExtensionSpec::new(c, x.to_vec()).map_err(|e| e.to_string())?;
    let d = extend(g, &spec).map_err(|e| e.to_string())?;
    let rows: Vec<Vec<R>> = d.rows().map(|r| r.to_vec()).collect();
    ensure(rows.len() == g.k() + 1 && d.len() == g.len() + 2, || {
        "extension shape".into()
    })?;
    ensure(
        rows[0][..2] == [R::one(), R::zero()] && rows[0][2..] == *x,
        || "first row".into(),
    )?;
    for (row, base) in rows[1..].iter().zip(g.rows()) {
        let y = oracle::inner(base, x);
        ensure(row[..2] == [y, c * y] && row[2..] == *base, || {
            "extended row".into()
        })?;
    }
    ensure(oracle::self_orthogonal(&rows), || {
        "extension is not self-orthogonal".into()
    })?;
    let b = PackedBinaryCode::from_ring_generator(&d).map_err(|e| e.to_string())?;
    ensure(b.is_self_dual(), || {
        "binary image of the extension is not self-dual".into()
    })
}

/// The neighbor by `x` is self-dual, contains `x` and meets `code` in
/// codimension 1, against a brute-force span; a second step with a row of
/// `code` outside the neighbor meets the neighbor in codimension 1 too.
/// `Ok(false)` when `x` is not a valid seed.
pub fn neighbor_step(code: &PackedBinaryCode, x: &BitVector) -> Result<bool, String> {
    let words = oracle::span(code.rows());
    if x.weight() % 2 == 1 || words.contains(&x.to_string()) {
        return Ok(false);
    }
    let d = neighbor(code, x).map_err(|e| e.to_string())?;
    let k = code.k();
    let dwords = oracle::span(d.rows());
    ensure(dwords.len() == 1 << k && d.n() == 2 * k, || {
        "neighbor has the wrong size".into()
    })?;
    ensure(dwords.contains(&x.to_string()), || {
        "x is not in the neighbor".into()
    })?;
    ensure(
        d.rows().iter().all(|a| d.rows().iter().all(|b| !a.dot(b))),
        || "neighbor is not self-orthogonal".into(),
    )?;
    let common = words
        .iter()
        .filter(|w| dwords.binary_search(w).is_ok())
        .count();
    ensure(common == 1 << (k - 1), || format!("|D ∩ C| = {common}"))?;
    ensure(intersection_dim(code, &d).unwrap() == k - 1, || {
        "intersection_dim".into()
    })?;
    let x2 = code
        .rows()
        .iter()
        .find(|r| dwords.binary_search(&r.to_string()).is_err())
        .expect("some row of C is outside D");
    let e = neighbor(&d, x2).map_err(|e| e.to_string())?;
    ensure(intersection_dim(&d, &e).unwrap() == k - 1, || {
        "second step".into()
    })?;
    Ok(true)
}

/// For a self-dual code the MacWilliams transform fixes the distribution:
/// `Σ_i A_i K_j(i) = |C|·A_j`.
pub fn macwilliams(code: &PackedBinaryCode) -> Check {
    let n = code.n();
    let wd = code.weight_distribution(32, 1).map_err(|e| e.to_string())?;
    let size = 1i128 << code.k();
    for j in 0..=n {
        let lhs: i128 = (0..=n)
            .map(|i| wd.get(i) as i128 * oracle::krawtchouk(n, j, i))
            .sum();
        ensure(lhs == size * wd.get(j) as i128, || {
            format!("MacWilliams fails at weight {j}")
        })?;
    }
    Ok(())
}

/// The low-weight counter agrees with full enumeration up to `max_w`, and the
/// enumerated minimum agrees with `min_distance`.
pub fn counts_agree(code: &PackedBinaryCode, max_w: usize, threads: usize) -> Check {
    let wd = code
        .weight_distribution(64, threads)
        .map_err(|e| e.to_string())?;
    let low = code.low_weight_counts(max_w).map_err(|e| e.to_string())?;
    ensure(low[..] == wd.counts()[..=max_w.min(code.n())], || {
        format!(
            "low-weight counts {low:?} vs {:?}",
            &wd.counts()[..low.len()]
        )
    })?;
    let md = code.min_distance(64, threads).map_err(|e| e.to_string())?;
    ensure(md == wd.min_distance(), || {
        format!("min_distance {md:?} vs {:?}", wd.min_distance())
    })
}
