//! Empirical validation of the elementary complex-number facts the
//! decision pipeline leans on:
//!
//! * the **pair lemma**: nonzero U, V, X, Y, A, B, C with
//!   `(U^n + V^n)(A^n + B^n + C^n) = (X^n + Y^n)(A^n + B^n + C^n)` for all
//!   n > 0 and `U^3 V^3 = X^3 Y^3` force `{U^3, V^3} = {X^3, Y^3}`;
//! * the **triple claim**: for nonzero a, b, c at least one of `a + b + c`
//!   and `a^3 + b^3 + c^3` is nonzero (if the first vanishes the second
//!   equals `3abc`);
//! * the **circle statement**: two points of common modulus R with sum Z,
//!   0 < |Z| < 2R, are uniquely `Z/2 +- i (Z/|Z|) sqrt(R^2 - |Z|^2/4)`.
//!
//! The root-of-unity sweep is exhaustive and exact: for septuples drawn
//! from the d-th roots of unity every power sequence is d-periodic, so
//! checking n = 1..=d decides the "all n" hypothesis. The sweep
//! factorizes through bitmasks: a quadruple contributes the set of n with
//! `U^n + V^n != X^n + Y^n`, a triple the set of n with
//! `A^n + B^n + C^n = 0`, and the hypothesis holds iff the former is
//! contained in the latter.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::report::RunReport;

/// Largest root-of-unity order the exhaustive sweep accepts.
pub const MAX_SWEEP_ORDER: u32 = 24;

/// A nonzero value carried exactly (cyclotomic) or as a float.
#[derive(Debug, Clone)]
pub enum LemmaValue {
    Exact(Cyclotomic),
    Approx(Complex64),
}

impl LemmaValue {
    pub fn exact_integer(k: i64) -> Self {
        LemmaValue::Exact(Cyclotomic::from_integer(1, k))
    }

    pub fn exact_root(order: u32, index: i64) -> Self {
        LemmaValue::Exact(Cyclotomic::root(order, index))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            LemmaValue::Exact(c) => c.is_zero(),
            LemmaValue::Approx(z) => z.re == 0.0 && z.im == 0.0,
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        match self {
            LemmaValue::Exact(c) => c.to_complex(),
            LemmaValue::Approx(z) => *z,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        match (self, other) {
            (LemmaValue::Exact(a), LemmaValue::Exact(b)) => LemmaValue::Exact(a.add(b)),
            _ => LemmaValue::Approx(self.to_complex() + other.to_complex()),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        match (self, other) {
            (LemmaValue::Exact(a), LemmaValue::Exact(b)) => LemmaValue::Exact(a.mul(b)),
            _ => LemmaValue::Approx(self.to_complex() * other.to_complex()),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        match self {
            LemmaValue::Exact(c) => LemmaValue::Exact(c.pow(n)),
            LemmaValue::Approx(z) => LemmaValue::Approx(z.powi(n as i32)),
        }
    }

    /// Exact values compare exactly; any float demotes both sides to a
    /// relative-tolerance comparison.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        match (self, other) {
            (LemmaValue::Exact(a), LemmaValue::Exact(b)) => a == b,
            _ => {
                let (x, y) = (self.to_complex(), other.to_complex());
                (x - y).norm() <= tol * (1.0 + x.norm().max(y.norm()))
            }
        }
    }

    /// Accepts a cyclotomic literal (e.g. `z12^5`, `3/2`, `1+z3`) or a
    /// complex float literal (e.g. `1.5-2e-3i`, `2i`, `-i`).
    pub fn parse(input: &str) -> Result<Self> {
        if let Ok(c) = Cyclotomic::parse(input) {
            return Ok(LemmaValue::Exact(c));
        }
        parse_complex(input).map(LemmaValue::Approx)
    }
}

impl fmt::Display for LemmaValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LemmaValue::Exact(c) => write!(f, "{c}"),
            LemmaValue::Approx(z) => write!(f, "{}{:+}i", z.re, z.im),
        }
    }
}

/// Parse `a`, `bi`, or `a+bi` with float components.
fn parse_complex(input: &str) -> Result<Complex64> {
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = |detail: String| Error::Parse {
        what: "complex literal",
        detail,
    };
    if s.is_empty() {
        return Err(bad("empty input".into()));
    }
    let parse_part = |t: &str, imag: bool| -> Result<f64> {
        let t = if imag {
            match t {
                "" | "+" => return Ok(1.0),
                "-" => return Ok(-1.0),
                _ => t,
            }
        } else {
            t
        };
        t.parse::<f64>().map_err(|_| bad(format!("bad number `{t}`")))
    };
    // locate a split sign that is not leading and not part of an exponent
    let bytes = s.as_bytes();
    let mut split = None;
    for k in (1..bytes.len()).rev() {
        let c = bytes[k] as char;
        if (c == '+' || c == '-') && !matches!(bytes[k - 1] as char, 'e' | 'E') {
            split = Some(k);
            break;
        }
    }
    if let Some(k) = split {
        let (re_s, im_s) = s.split_at(k);
        let im_s = im_s
            .strip_suffix('i')
            .ok_or_else(|| bad("second component must end in i".into()))?;
        return Ok(Complex64::new(
            parse_part(re_s, false)?,
            parse_part(im_s, true)?,
        ));
    }
    if let Some(im_s) = s.strip_suffix('i') {
        return Ok(Complex64::new(0.0, parse_part(im_s, true)?));
    }
    Ok(Complex64::new(parse_part(&s, false)?, 0.0))
}

/// The seven nonzero inputs of the pair lemma.
#[derive(Debug, Clone)]
pub struct SeptupleInstance {
    pub u: LemmaValue,
    pub v: LemmaValue,
    pub x: LemmaValue,
    pub y: LemmaValue,
    pub a: LemmaValue,
    pub b: LemmaValue,
    pub c: LemmaValue,
}

impl SeptupleInstance {
    pub fn new(values: [LemmaValue; 7]) -> Result<Self> {
        let names = ["U", "V", "X", "Y", "A", "B", "C"];
        for (val, name) in values.iter().zip(names) {
            if val.is_zero() {
                return Err(Error::ZeroValue(name.to_string()));
            }
        }
        let [u, v, x, y, a, b, c] = values;
        Ok(SeptupleInstance { u, v, x, y, a, b, c })
    }
}

impl fmt::Display for SeptupleInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "U={} V={} X={} Y={} A={} B={} C={}",
            self.u, self.v, self.x, self.y, self.a, self.b, self.c
        )
    }
}

/// Check the hypothesis `(U^n + V^n) S_n = (X^n + Y^n) S_n` for
/// n = 1..=nmax (the exponents 1, 2, 3, 6, 9 are always included) plus
/// the cube-product identity `U^3 V^3 = X^3 Y^3`.
///
/// The truncation is complete when the values are roots of unity and
/// `nmax` is at least their common order; for general floats it is a
/// heuristic cutoff.
pub fn power_sum_hypothesis(s: &SeptupleInstance, nmax: u32, tol: f64) -> bool {
    let cube_uv = s.u.pow(3).mul(&s.v.pow(3));
    let cube_xy = s.x.pow(3).mul(&s.y.pow(3));
    if !cube_uv.approx_eq(&cube_xy, tol) {
        return false;
    }
    let mut ns: Vec<u32> = (1..=nmax).collect();
    for extra in [1u32, 2, 3, 6, 9] {
        if !ns.contains(&extra) {
            ns.push(extra);
        }
    }
    for n in ns {
        let sn = s.a.pow(n).add(&s.b.pow(n)).add(&s.c.pow(n));
        let lhs = s.u.pow(n).add(&s.v.pow(n)).mul(&sn);
        let rhs = s.x.pow(n).add(&s.y.pow(n)).mul(&sn);
        if !lhs.approx_eq(&rhs, tol) {
            return false;
        }
    }
    true
}

/// Check the conclusion `{U^3, V^3} = {X^3, Y^3}` as multisets.
pub fn cube_pairing_conclusion(s: &SeptupleInstance, tol: f64) -> bool {
    let u3 = s.u.pow(3);
    let v3 = s.v.pow(3);
    let x3 = s.x.pow(3);
    let y3 = s.y.pow(3);
    (u3.approx_eq(&x3, tol) && v3.approx_eq(&y3, tol))
        || (u3.approx_eq(&y3, tol) && v3.approx_eq(&x3, tol))
}

/// For nonzero a, b, c: `a + b + c != 0` or `a^3 + b^3 + c^3 != 0`.
/// Backed by `a^3 + b^3 + c^3 - 3abc = (a + b + c)(...)`: when the linear
/// sum vanishes the cubic sum equals `3abc != 0`.
pub fn claim_check(a: &LemmaValue, b: &LemmaValue, c: &LemmaValue, tol: f64) -> Result<bool> {
    for (val, name) in [(a, "a"), (b, "b"), (c, "c")] {
        if val.is_zero() {
            return Err(Error::ZeroValue(name.to_string()));
        }
    }
    let nonzero = |w: &LemmaValue, scale: f64| -> bool {
        match w {
            LemmaValue::Exact(c) => !c.is_zero(),
            LemmaValue::Approx(z) => z.norm() > tol * scale,
        }
    };
    let scale1 = 1.0
        + a.to_complex().norm()
        + b.to_complex().norm()
        + c.to_complex().norm();
    let s1 = a.add(b).add(c);
    if nonzero(&s1, scale1) {
        return Ok(true);
    }
    let (a3, b3, c3) = (a.pow(3), b.pow(3), c.pow(3));
    let scale3 = 1.0
        + a3.to_complex().norm()
        + b3.to_complex().norm()
        + c3.to_complex().norm();
    let s3 = a3.add(&b3).add(&c3);
    Ok(nonzero(&s3, scale3))
}

/// Solve for the unique unordered pair {z1, z2} with |z1| = |z2| = R and
/// z1 + z2 = Z, valid for 0 < |Z| < 2R. The two circles |z| = R and
/// |Z - z| = R intersect in exactly the returned points.
pub fn statement_check(r: f64, z: Complex64) -> Result<(Complex64, Complex64)> {
    if !(r > 0.0) {
        return Err(Error::ShapeViolation(format!("need R > 0, got {r}")));
    }
    let zn = z.norm();
    if zn == 0.0 || zn >= 2.0 * r {
        return Err(Error::ShapeViolation(format!(
            "need 0 < |Z| < 2R; |Z| = {zn}, 2R = {}",
            2.0 * r
        )));
    }
    let h = (r * r - zn * zn / 4.0).sqrt();
    let dir = z / zn;
    let i = Complex64::new(0.0, 1.0);
    let z1 = z / 2.0 + i * dir * h;
    let z2 = z / 2.0 - i * dir * h;
    Ok((z1, z2))
}

/// A counterexample candidate found by the sweep, reported as exponents
/// into the d-th roots of unity.
#[derive(Debug, Clone, serde::Serialize)]
pub struct SweepCounterexample {
    pub order: u32,
    /// Exponents of U, V, X, Y, A, B, C.
    pub exponents: [u32; 7],
}

impl fmt::Display for SweepCounterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["U", "V", "X", "Y", "A", "B", "C"];
        let parts: Vec<String> = names
            .iter()
            .zip(self.exponents)
            .map(|(n, e)| format!("{n}=z{}^{e}", self.order))
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Statistics from one exhaustive root-of-unity sweep.
#[derive(Debug, Clone, serde::Serialize)]
pub struct SweepOutcome {
    pub order: u32,
    /// Unordered pair-against-pair quadruples enumerated.
    pub quadruples: u64,
    /// Quadruples passing the cube-product prefilter.
    pub cube_compatible: u64,
    /// Prefiltered quadruples that additionally fail the conclusion (the
    /// only candidates that could produce a counterexample).
    pub conclusion_failing: u64,
    /// Distinct vanishing-pattern masks among the triples.
    pub distinct_triple_masks: usize,
    pub triples_total: u64,
    /// Triples with A^9 + B^9 + C^9 != 0 (logged, not asserted).
    pub triples_nine_nonzero: u64,
    /// Triples with A^2 + B^2 + C^2 != 0 or A^6 + B^6 + C^6 != 0.
    pub triples_two_or_six_nonzero: u64,
    pub counterexample: Option<SweepCounterexample>,
}

/// Exhaustively test the pair lemma over septuples of d-th roots of
/// unity. Exact arithmetic throughout; returns the first counterexample
/// if one exists (none is expected).
pub fn counterexample_search_roots(d: u32) -> Result<SweepOutcome> {
    if d == 0 || d > MAX_SWEEP_ORDER {
        return Err(Error::ShapeViolation(format!(
            "sweep order must lie in 1..={MAX_SWEEP_ORDER}, got {d}"
        )));
    }
    let du = d as usize;
    // root_pow[e] = zeta_d^e
    let roots: Vec<Cyclotomic> = (0..du).map(|e| Cyclotomic::root(d, e as i64)).collect();

    // Triple phase: vanishing masks of S_n = A^n + B^n + C^n over
    // n = 1..=d, for unordered triples of exponents.
    let mut mask_reps: BTreeMap<u64, [u32; 3]> = BTreeMap::new();
    let mut triples_total = 0u64;
    let mut nine_nonzero = 0u64;
    let mut two_or_six_nonzero = 0u64;
    for ea in 0..du {
        for eb in ea..du {
            for ec in eb..du {
                triples_total += 1;
                let mut mask = 0u64;
                for n in 1..=du {
                    let sn = roots[(n * ea) % du]
                        .add(&roots[(n * eb) % du])
                        .add(&roots[(n * ec) % du]);
                    if sn.is_zero() {
                        mask |= 1 << (n - 1);
                    }
                }
                // log the auxiliary nonvanishing observations; power
                // sums are d-periodic, so reduce the exponent into 1..=d
                let zero_at = |n: usize| mask & (1 << (n - 1)) != 0;
                let red = |n: usize| {
                    let m = n % du;
                    if m == 0 {
                        du
                    } else {
                        m
                    }
                };
                if !zero_at(red(9)) {
                    nine_nonzero += 1;
                }
                if !zero_at(red(2)) || !zero_at(red(6)) {
                    two_or_six_nonzero += 1;
                }
                mask_reps
                    .entry(mask)
                    .or_insert([ea as u32, eb as u32, ec as u32]);
            }
        }
    }

    // Quadruple phase: for unordered pairs {U,V} vs {X,Y}, compute the
    // mask of n with U^n + V^n != X^n + Y^n and look for a triple whose
    // vanishing mask covers it.
    let mut quadruples = 0u64;
    let mut cube_compatible = 0u64;
    let mut conclusion_failing = 0u64;
    let mut counterexample = None;
    'outer: for eu in 0..du {
        for ev in eu..du {
            for ex in 0..du {
                for ey in ex..du {
                    quadruples += 1;
                    // prefilter: U^3 V^3 = X^3 Y^3
                    if (3 * (eu + ev)) % du != (3 * (ex + ey)) % du {
                        continue;
                    }
                    cube_compatible += 1;
                    // conclusion: {U^3, V^3} = {X^3, Y^3}
                    let mut lhs = [(3 * eu) % du, (3 * ev) % du];
                    let mut rhs = [(3 * ex) % du, (3 * ey) % du];
                    lhs.sort_unstable();
                    rhs.sort_unstable();
                    if lhs == rhs {
                        continue;
                    }
                    conclusion_failing += 1;
                    let mut need = 0u64;
                    for n in 1..=du {
                        let diff = roots[(n * eu) % du]
                            .add(&roots[(n * ev) % du])
                            .sub(&roots[(n * ex) % du])
                            .sub(&roots[(n * ey) % du]);
                        if !diff.is_zero() {
                            need |= 1 << (n - 1);
                        }
                    }
                    // hypothesis satisfiable iff some triple vanishes on
                    // every n where the pair sums differ
                    for (mask, rep) in &mask_reps {
                        if need & !mask == 0 {
                            counterexample = Some(SweepCounterexample {
                                order: d,
                                exponents: [
                                    eu as u32, ev as u32, ex as u32, ey as u32, rep[0],
                                    rep[1], rep[2],
                                ],
                            });
                            break 'outer;
                        }
                    }
                }
            }
        }
    }

    Ok(SweepOutcome {
        order: d,
        quadruples,
        cube_compatible,
        conclusion_failing,
        distinct_triple_masks: mask_reps.len(),
        triples_total,
        triples_nine_nonzero: nine_nonzero,
        triples_two_or_six_nonzero: two_or_six_nonzero,
        counterexample,
    })
}

/// Statistics from the randomized constructed-instance search.
#[derive(Debug, Clone, serde::Serialize)]
pub struct RandomOutcome {
    pub samples: u64,
    pub hypothesis_confirmed: u64,
    pub conclusion_confirmed: u64,
    pub counterexample: Option<String>,
}

/// Randomized plumbing validation: draw nonzero floats, force the
/// hypothesis by letting {X, Y} be a permutation of {U, V}, and confirm
/// both checkers accept. Any failure is reported verbatim.
pub fn counterexample_search_random(
    samples: u64,
    seed: u64,
    nmax: u32,
    tol: f64,
) -> RandomOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let random_value = |rng: &mut ChaCha8Rng| {
        let r = rng.random_range(0.5..2.0);
        let theta = rng.random_range(0.0..std::f64::consts::TAU);
        LemmaValue::Approx(Complex64::from_polar(r, theta))
    };
    let mut hypothesis_confirmed = 0;
    let mut conclusion_confirmed = 0;
    let mut counterexample = None;
    for _ in 0..samples {
        let u = random_value(&mut rng);
        let v = random_value(&mut rng);
        let (x, y) = if rng.random_range(0..2) == 0 {
            (u.clone(), v.clone())
        } else {
            (v.clone(), u.clone())
        };
        let a = random_value(&mut rng);
        let b = random_value(&mut rng);
        let c = random_value(&mut rng);
        let s = SeptupleInstance::new([u, v, x, y, a, b, c]).expect("nonzero by construction");
        let hyp = power_sum_hypothesis(&s, nmax, tol);
        let concl = cube_pairing_conclusion(&s, tol);
        if hyp {
            hypothesis_confirmed += 1;
        }
        if concl {
            conclusion_confirmed += 1;
        }
        if hyp && !concl && counterexample.is_none() {
            counterexample = Some(s.to_string());
        }
    }
    RandomOutcome {
        samples,
        hypothesis_confirmed,
        conclusion_confirmed,
        counterexample,
    }
}

/// Randomized sweep of the triple claim; returns the count of confirmed
/// triples and any violating triple rendered verbatim.
pub fn claim_sweep(samples: u64, seed: u64, tol: f64) -> (u64, Option<String>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut confirmed = 0;
    let mut violation = None;
    for _ in 0..samples {
        let draw = |rng: &mut ChaCha8Rng| {
            let r = rng.random_range(0.5..2.0);
            let theta = rng.random_range(0.0..std::f64::consts::TAU);
            LemmaValue::Approx(Complex64::from_polar(r, theta))
        };
        let a = draw(&mut rng);
        let b = draw(&mut rng);
        let c = draw(&mut rng);
        match claim_check(&a, &b, &c, tol) {
            Ok(true) => confirmed += 1,
            Ok(false) => {
                if violation.is_none() {
                    violation = Some(format!("a={a} b={b} c={c}"));
                }
            }
            Err(_) => unreachable!("draws are nonzero"),
        }
    }
    (confirmed, violation)
}

/// Run the full empirical suite: exhaustive sweeps for every order up to
/// `max_order`, the randomized constructed search, the triple-claim
/// sweep, and fixed circle-statement checks.
pub fn run_lemma_suite(
    max_order: u32,
    random_samples: u64,
    claim_samples: u64,
    seed: u64,
    nmax: u32,
    tol: f64,
) -> Result<RunReport> {
    let mut report = RunReport::new("pair lemma, triple claim, circle statement");
    for d in 1..=max_order {
        let outcome = counterexample_search_roots(d)?;
        report.record(
            format!("exhaustive sweep over order-{d} roots"),
            outcome.counterexample.is_none(),
            match &outcome.counterexample {
                Some(ce) => format!("counterexample: {ce}"),
                None => format!(
                    "{} quadruples, {} cube-compatible, {} conclusion-failing, \
                     {} triple masks; none satisfiable",
                    outcome.quadruples,
                    outcome.cube_compatible,
                    outcome.conclusion_failing,
                    outcome.distinct_triple_masks
                ),
            },
        );
    }
    let random = counterexample_search_random(random_samples, seed, nmax, tol);
    report.record(
        "randomized constructed instances",
        random.hypothesis_confirmed == random.samples
            && random.conclusion_confirmed == random.samples
            && random.counterexample.is_none(),
        format!(
            "{}/{} hypothesis confirmed, {}/{} conclusion confirmed",
            random.hypothesis_confirmed, random.samples, random.conclusion_confirmed,
            random.samples
        ),
    );
    let (confirmed, violation) = claim_sweep(claim_samples, seed.wrapping_add(1), tol);
    report.record(
        "triple claim randomized sweep",
        confirmed == claim_samples && violation.is_none(),
        match violation {
            Some(v) => format!("violated at {v}"),
            None => format!("{confirmed}/{claim_samples} confirmed"),
        },
    );
    // circle statement at fixed instances
    let mut circle_ok = true;
    let mut detail = String::new();
    for (r, z) in [
        (1.0, Complex64::new(1.0, 0.0)),
        (2.0, Complex64::new(1.0, 1.0)),
        (1.5, Complex64::new(-0.7, 2.0)),
    ] {
        let (z1, z2) = statement_check(r, z)?;
        let res = ((z1.norm() - r).abs())
            .max((z2.norm() - r).abs())
            .max((z1 + z2 - z).norm());
        if res > 1e-12 {
            circle_ok = false;
            detail = format!("residual {res} at R={r}, Z={z}");
        }
    }
    report.record(
        "circle statement fixed instances",
        circle_ok,
        if circle_ok {
            "residuals below 1e-12".to_string()
        } else {
            detail
        },
    );
    Ok(report)
}
