//! `cusp` — exact identity checking, cuspidality decisions, finite-group
//! oracles, root-of-unity sweeps, archimedean bookkeeping, and
//! eigenvalue-table tools, from one binary.
//!
//! Exit codes: 0 all checks passed, 1 at least one check failed,
//! 2 usage or input errors.

pub mod output;
pub mod suite;

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use cusp_core::charalg::{GeneratorBasis, NumericEmbedding};
use cusp_core::criterion::{
    cross_validate, cross_validation_report, decide_tensor_stability, parse_descriptor_pair,
};
use cusp_core::error::{Error, Result};
use cusp_core::galois::{catalog, classify_2dim, FiniteGroup};
use cusp_core::hecke::{
    conductor_product, constants, fetch_remote, nonselfdual_witness, tensor_ap, GroupTag,
    HeckeTable, RemoteConfig,
};
use cusp_core::isobaric::{ext_cube_identity_sides, LocalParameter};
use cusp_core::lfactor::{series_from_embeddings, EulerFactor, MAX_TRUNCATION};
use cusp_core::numlemma::{
    claim_check, claim_sweep, counterexample_search_random, counterexample_search_roots,
    cube_pairing_conclusion, power_sum_hypothesis, LemmaValue, SeptupleInstance, MAX_SWEEP_ORDER,
};
use cusp_core::arch;

use output::CliReport;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "cusp",
    version,
    about = "Exact symbolic identities and cuspidality decisions for rank-2 x rank-3 products"
)]
struct Cli {
    /// Seed for every randomized check
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,

    /// Emit one JSON document instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Relative tolerance for numeric comparisons
    #[arg(long, global = true, default_value_t = 1e-9)]
    tolerance: f64,

    /// Truncation bound: Dirichlet coefficients / power-sequence checks
    #[arg(long, global = true, default_value_t = 24)]
    nmax: u32,

    /// Maximal root-of-unity order for exhaustive sweeps
    #[arg(long, global = true, default_value_t = 6)]
    order: u32,

    /// File with a generator-basis declaration, e.g. `basis a, chi:3;`
    #[arg(long, global = true)]
    basis: Option<PathBuf>,

    /// Eigenvalue table file (repeat for several tables)
    #[arg(long, global = true)]
    table: Vec<PathBuf>,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Verify the symbolic decomposition identities
    Identities(IdentitiesArgs),
    /// Euler factors and coefficient streams for parameter literals
    Lfactor(LfactorArgs),
    /// Character-table oracles over finite groups
    Galois(GaloisArgs),
    /// Decide cuspidality of a rank-2 x rank-3 product
    Decide(DecideArgs),
    /// Root-of-unity sweeps for the power-sum lemma and triple claim
    Lemma(LemmaArgs),
    /// Archimedean parameter types, regularity, and degree windows
    Arch(ArchArgs),
    /// Eigenvalue tables: validation, tensor products, witness scans
    Hecke(HeckeArgs),
    /// Run the complete check suite with pinned sizes
    All,
}

#[derive(Args, Debug)]
struct IdentitiesArgs {
    /// Random parameter pairs for the convolution sweep
    #[arg(long, default_value_t = 500)]
    samples: u64,
    /// Random numeric embeddings for the degree-22 identity
    #[arg(long, default_value_t = 100)]
    embeddings: u64,
}

#[derive(Args, Debug)]
struct LfactorArgs {
    /// Rank-2 parameter literal over the basis
    #[arg(long, default_value = "[a1, a2]")]
    a2: String,
    /// Rank-3 parameter literal over the basis
    #[arg(long, default_value = "[b1, b2, b3]")]
    a3: String,
    /// Primes to instantiate, comma-separated
    #[arg(long, default_value = "2,3,5,7,11")]
    primes: String,
    /// Print the Euler factors of the product parameter
    #[arg(long)]
    factors: bool,
}

#[derive(Args, Debug)]
struct GaloisArgs {
    /// Catalog group name (repeatable): S3, S4, A4, F21, SL(2,3),
    /// GL(2,3), C<n>, D<order>, products like F21xSL(2,3)
    #[arg(long)]
    group: Vec<String>,
    /// Load a group from a file instead (multiplication-table grammar)
    #[arg(long)]
    file: Option<PathBuf>,
    /// Print the structure summary for each group
    #[arg(long)]
    describe: bool,
}

#[derive(Args, Debug)]
struct DecideArgs {
    /// Inline descriptor pair: `pi2 ...` and `pi3 ...` separated by `;`
    #[arg(long)]
    pair: Option<String>,
    /// File holding the descriptor pair (one descriptor per line)
    #[arg(long)]
    file: Option<PathBuf>,
    /// Cross-validate the tree on one group instead
    #[arg(long)]
    group: Option<String>,
}

#[derive(Args, Debug)]
struct LemmaArgs {
    /// sweep: exhaustive roots of unity; random: constructed instances;
    /// single: evaluate one septuple
    #[arg(long, default_value = "sweep")]
    mode: String,
    /// Sample count for random mode
    #[arg(long, default_value_t = 100_000)]
    samples: u64,
    /// Sample count for the triple-claim sweep in random mode
    #[arg(long, default_value_t = 1_000_000)]
    claim_samples: u64,
    /// Seven comma-separated values U,V,X,Y,A,B,C for single mode;
    /// roots of unity like z12^5 or complex literals like 1.5-0.25i
    #[arg(long)]
    values: Option<String>,
}

#[derive(Args, Debug)]
struct ArchArgs {
    /// Rank: print the cohomological type and degree window
    #[arg(long)]
    n: Option<u32>,
    /// Weight: print the holomorphic discrete-series type
    #[arg(long)]
    weight: Option<u32>,
    /// Print the infinity type induced from m circle characters
    #[arg(long)]
    m: Option<u32>,
}

#[derive(Args, Debug)]
struct HeckeArgs {
    /// Print the pinned constant tables
    #[arg(long)]
    constants: bool,
    /// Scan the loaded tables for a non-selfduality witness
    #[arg(long)]
    witness: bool,
    /// Primes where the auxiliary character ramifies, comma-separated
    #[arg(long)]
    nu_ramified: Option<String>,
    /// Conductor of a coprime (N, q) pair
    #[arg(long, num_args = 2, value_names = ["N", "Q"])]
    conductor: Option<Vec<u64>>,
    /// Fetch a table by label from the remote source
    #[arg(long)]
    fetch: Option<String>,
    /// Base URL of the remote source ({label} substituted if present)
    #[arg(long)]
    base_url: Option<String>,
    /// Cache directory (default: CUSP_HECKE_CACHE or the system temp dir)
    #[arg(long)]
    cache_dir: Option<PathBuf>,
    /// Never touch the network; read the cache only
    #[arg(long)]
    offline: bool,
}

/// Parse and dispatch; returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match dispatch(&cli) {
        Ok(report) => {
            let report = report.finalize();
            if cli.json {
                print!("{}", report.render_json());
            } else {
                print!("{}", report.render_text());
            }
            if report.passed {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cli: &Cli) -> Result<CliReport> {
    match &cli.cmd {
        Cmd::Identities(args) => cmd_identities(cli, args),
        Cmd::Lfactor(args) => cmd_lfactor(cli, args),
        Cmd::Galois(args) => cmd_galois(cli, args),
        Cmd::Decide(args) => cmd_decide(cli, args),
        Cmd::Lemma(args) => cmd_lemma(cli, args),
        Cmd::Arch(args) => cmd_arch(cli, args),
        Cmd::Hecke(args) => cmd_hecke(cli, args),
        Cmd::All => cmd_all(cli),
    }
}

fn load_basis(cli: &Cli, fallback: &str) -> Result<Arc<GeneratorBasis>> {
    match &cli.basis {
        Some(path) => {
            let text = std::fs::read_to_string(path)?;
            GeneratorBasis::parse(&text)
        }
        None => GeneratorBasis::parse(fallback),
    }
}

fn parse_primes(s: &str) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    for tok in s.split(',') {
        let tok = tok.trim();
        if tok.is_empty() {
            continue;
        }
        let p: u64 = tok.parse().map_err(|_| Error::Parse {
            what: "prime list",
            detail: format!("`{tok}` is not an integer"),
        })?;
        if seen.insert(p) {
            out.push(p);
        }
    }
    if out.is_empty() {
        return Err(Error::Parse {
            what: "prime list",
            detail: "no primes given".to_string(),
        });
    }
    Ok(out)
}

fn cmd_identities(cli: &Cli, args: &IdentitiesArgs) -> Result<CliReport> {
    let mut rep = CliReport::new("identities");
    rep.input("seed", cli.seed);
    rep.input("tolerance", format!("{:e}", cli.tolerance));
    rep.input("samples", args.samples);
    rep.input("embeddings", args.embeddings);
    let mut checks = Vec::new();
    suite::degree22_checks(&mut checks, cli.seed, cli.tolerance, args.embeddings)?;
    suite::convolution_checks(&mut checks, args.samples, cli.seed.wrapping_add(1))?;
    suite::symbolic_lemma_checks(&mut checks)?;
    rep.extend_checks(checks);
    Ok(rep)
}

fn cmd_lfactor(cli: &Cli, args: &LfactorArgs) -> Result<CliReport> {
    let mut rep = CliReport::new("lfactor");
    rep.input("seed", cli.seed);
    rep.input("a2", &args.a2);
    rep.input("a3", &args.a3);
    rep.input("primes", &args.primes);
    rep.input("nmax", cli.nmax);
    let basis = load_basis(cli, "basis a1, a2, b1, b2, b3;")?;
    let a2 = LocalParameter::parse(&basis, &args.a2)?;
    let a3 = LocalParameter::parse(&basis, &args.a3)?;
    let primes = parse_primes(&args.primes)?;
    let nmax = u64::from(cli.nmax).min(MAX_TRUNCATION).max(2);

    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    let embs: Vec<(u64, NumericEmbedding)> = primes
        .iter()
        .map(|&p| (p, NumericEmbedding::random(&basis, &mut rng)))
        .collect();

    if args.factors {
        let prod = a2.boxtimes(&a3)?;
        for (p, emb) in &embs {
            let f = EulerFactor::from_parameter(&prod, emb, *p)?;
            rep.info(format!("{f}"));
        }
    }

    let (lhs, rhs) = ext_cube_identity_sides(&a2, &a3)?;
    let sl = series_from_embeddings(&lhs, &embs)?;
    let sr = series_from_embeddings(&rhs, &embs)?;
    rep.check(
        "identity at the Euler-factor level",
        sl.approx_eq(&sr, cli.tolerance),
        format!("factor polynomials agree at primes {primes:?}"),
    );
    let cl = sl.dirichlet_coefficients(nmax)?;
    let cr = sr.dirichlet_coefficients(nmax)?;
    let worst = suite::max_deviation(&cl, &cr);
    rep.check(
        "identity at the coefficient level",
        worst <= cli.tolerance,
        format!("first {nmax} coefficients, max deviation {worst:.3e}"),
    );
    Ok(rep)
}

fn resolve_groups(args: &GaloisArgs) -> Result<Vec<Arc<FiniteGroup>>> {
    if let Some(path) = &args.file {
        let text = std::fs::read_to_string(path)?;
        return Ok(vec![FiniteGroup::parse(&text)?]);
    }
    let names: Vec<String> = if args.group.is_empty() {
        vec!["S4".into(), "SL(2,3)".into(), "GL(2,3)".into()]
    } else {
        args.group.clone()
    };
    names.iter().map(|n| catalog::by_name(n)).collect()
}

fn cmd_galois(cli: &Cli, args: &GaloisArgs) -> Result<CliReport> {
    let mut rep = CliReport::new("galois");
    let groups = resolve_groups(args)?;
    rep.input(
        "groups",
        groups
            .iter()
            .map(|g| g.name().to_string())
            .collect::<Vec<_>>()
            .join(", "),
    );
    let _ = cli;
    let mut checks = Vec::new();
    for group in &groups {
        if args.describe {
            for line in group.describe().lines() {
                rep.info(line.to_string());
            }
        }
        suite::group_structure_checks(&mut checks, group)?;
        // classification of the rank-2 characters
        let irr = group.irreducibles()?;
        for x in irr.iter().filter(|f| f.degree_int() == Some(2)) {
            rep.info(format!(
                "{}: {} classifies as {:?}",
                group.name(),
                x.name(),
                classify_2dim(x)?
            ));
        }
    }
    rep.extend_checks(checks);
    Ok(rep)
}

fn cmd_decide(cli: &Cli, args: &DecideArgs) -> Result<CliReport> {
    let mut rep = CliReport::new("decide");
    let picked = [
        args.pair.is_some(),
        args.file.is_some(),
        args.group.is_some(),
    ]
    .iter()
    .filter(|b| **b)
    .count();
    if picked > 1 {
        return Err(Error::Descriptor(
            "give at most one of --pair, --file, --group".to_string(),
        ));
    }
    let _ = cli;

    let text = match (&args.pair, &args.file) {
        (Some(p), _) => Some(p.replace(';', "\n")),
        (_, Some(f)) => Some(std::fs::read_to_string(f)?),
        _ => None,
    };
    if let Some(text) = text {
        let (p2, p3) = parse_descriptor_pair(&text)?;
        rep.input("pi2", p2.to_string());
        rep.input("pi3", p3.to_string());
        let stability = decide_tensor_stability(&p2, &p3, true)?;
        for line in stability.decision.to_string().lines() {
            rep.info(line.to_string());
        }
        rep.info(format!(
            "no self-twist: {}; not solvably induced: {}; stable under solvable base change: {}",
            stability.no_selftwist, stability.not_solvably_induced, stability.stable
        ));
        for n in &stability.notes {
            rep.info(format!("note: {n}"));
        }
        rep.check(
            "decision derived",
            true,
            format!(
                "verdict {} (rule {})",
                stability.decision.verdict, stability.decision.rule
            ),
        );
        return Ok(rep);
    }

    if let Some(name) = &args.group {
        let group = catalog::by_name(name)?;
        rep.input("group", group.name());
        let outcomes = suite::pair_outcomes_for(&group)?;
        for o in &outcomes {
            rep.info(format!(
                "{} (x) {}: tree {} / brute {}",
                o.x2, o.x3, o.tree.verdict, o.brute
            ));
        }
        let total = outcomes.len();
        let agreed = outcomes.iter().filter(|o| o.agree).count();
        rep.check(
            "tree matches brute-force decomposition",
            agreed == total,
            format!("{agreed}/{total} pairs"),
        );
        return Ok(rep);
    }

    // default: the full sweep
    rep.input("mode", "cross-validation sweep");
    let outcomes = cross_validate()?;
    rep.extend_checks(cross_validation_report(&outcomes).checks);
    Ok(rep)
}

fn cmd_lemma(cli: &Cli, args: &LemmaArgs) -> Result<CliReport> {
    let mut rep = CliReport::new("lemma");
    rep.input("mode", &args.mode);
    rep.input("seed", cli.seed);
    rep.input("tolerance", format!("{:e}", cli.tolerance));
    match args.mode.as_str() {
        "sweep" => {
            if cli.order > MAX_SWEEP_ORDER {
                return Err(Error::ShapeViolation(format!(
                    "--order {} exceeds the sweep bound {MAX_SWEEP_ORDER}",
                    cli.order
                )));
            }
            rep.input("order", cli.order);
            for d in 1..=cli.order {
                let out = counterexample_search_roots(d)?;
                rep.check(
                    format!("exhaustive sweep over order-{d} roots"),
                    out.counterexample.is_none(),
                    match &out.counterexample {
                        Some(ce) => format!("counterexample: {ce}"),
                        None => format!(
                            "{} quadruples, {} cube-compatible, none satisfiable",
                            out.quadruples, out.cube_compatible
                        ),
                    },
                );
            }
        }
        "random" => {
            rep.input("samples", args.samples);
            rep.input("claim_samples", args.claim_samples);
            rep.input("nmax", cli.nmax);
            let out =
                counterexample_search_random(args.samples, cli.seed, cli.nmax, cli.tolerance);
            rep.check(
                "randomized constructed instances",
                out.hypothesis_confirmed == out.samples
                    && out.conclusion_confirmed == out.samples
                    && out.counterexample.is_none(),
                format!(
                    "{}/{} hypothesis confirmed, {}/{} conclusion confirmed",
                    out.hypothesis_confirmed, out.samples, out.conclusion_confirmed, out.samples
                ),
            );
            let (confirmed, violation) =
                claim_sweep(args.claim_samples, cli.seed.wrapping_add(1), cli.tolerance);
            rep.check(
                "triple claim randomized sweep",
                confirmed == args.claim_samples && violation.is_none(),
                match violation {
                    Some(v) => format!("violated at {v}"),
                    None => format!("{confirmed}/{} confirmed", args.claim_samples),
                },
            );
        }
        "single" => {
            let text = args.values.as_ref().ok_or_else(|| Error::Parse {
                what: "septuple",
                detail: "single mode needs --values U,V,X,Y,A,B,C".to_string(),
            })?;
            let parts: Vec<&str> = text.split(',').map(str::trim).collect();
            if parts.len() != 7 {
                return Err(Error::Parse {
                    what: "septuple",
                    detail: format!("expected 7 values, got {}", parts.len()),
                });
            }
            let values: Vec<LemmaValue> = parts
                .iter()
                .map(|t| LemmaValue::parse(t))
                .collect::<Result<_>>()?;
            let inst = SeptupleInstance::new(values.try_into().expect("length checked"))?;
            rep.input("values", inst.to_string());
            let hyp = power_sum_hypothesis(&inst, cli.nmax, cli.tolerance);
            let concl = cube_pairing_conclusion(&inst, cli.tolerance);
            rep.info(format!("hypothesis satisfied (n <= {}): {hyp}", cli.nmax));
            rep.info(format!("conclusion holds: {concl}"));
            rep.info(format!(
                "triple claim on (A, B, C): {}",
                claim_check(&inst.a, &inst.b, &inst.c, cli.tolerance)?
            ));
            rep.check(
                "hypothesis implies conclusion",
                !hyp || concl,
                format!("hypothesis {hyp}, conclusion {concl}"),
            );
        }
        other => {
            return Err(Error::Parse {
                what: "lemma mode",
                detail: format!("`{other}` is not one of sweep, random, single"),
            })
        }
    }
    Ok(rep)
}

fn cmd_arch(cli: &Cli, args: &ArchArgs) -> Result<CliReport> {
    let mut rep = CliReport::new("arch");
    let _ = cli;
    let mut any = false;
    if let Some(n) = args.n {
        any = true;
        rep.input("n", n);
        let t = arch::cohomological_type(n)?;
        let (lo, hi) = arch::degree_window(n)?;
        rep.info(format!("cohomological type for rank {n}: {t}"));
        rep.info(format!("cohomology degree window for rank {n}: ({lo}, {hi})"));
        rep.check("cohomological type is regular", t.is_regular(), t.to_string());
    }
    if let Some(k) = args.weight {
        any = true;
        rep.input("weight", k);
        let t = arch::holomorphic_type(k)?;
        rep.info(format!("holomorphic type at weight {k}: {t}"));
        rep.check("holomorphic type is regular", t.is_regular(), t.to_string());
    }
    if let Some(m) = args.m {
        any = true;
        rep.input("m", m);
        let ind = arch::induced_cm_infinity(m)?;
        rep.info(format!(
            "induced infinity type from {m} circle characters: {}",
            ind.induced
        ));
        rep.check("induced type is regular", ind.regular, format!("exponents {:?}", ind.k));
        rep.check(
            "induced type is the rank-2m cohomological type",
            ind.induced == arch::cohomological_type(2 * m)?,
            format!("rank {}", 2 * m),
        );
    }
    if !any {
        let mut checks = Vec::new();
        suite::arch_checks(&mut checks)?;
        for n in 2..=7 {
            let (lo, hi) = arch::degree_window(n)?;
            rep.info(format!("rank {n}: degree window ({lo}, {hi})"));
        }
        rep.extend_checks(checks);
    }
    Ok(rep)
}

fn cmd_hecke(cli: &Cli, args: &HeckeArgs) -> Result<CliReport> {
    let mut rep = CliReport::new("hecke");
    let mut tables = Vec::new();
    for path in &cli.table {
        let t = HeckeTable::load(path)?;
        rep.info(format!(
            "table {}: group {}, level {}, weight {}, field {}, {} primes, ramified {:?}",
            t.label,
            t.group,
            t.level,
            t.weight,
            t.field,
            t.len(),
            t.ramified_primes()
        ));
        rep.check(
            format!("table {} valid", t.label),
            true,
            "parsed, primes distinct, values in the declared field",
        );
        tables.push(t);
    }

    if let Some(nq) = &args.conductor {
        let (n, q) = (nq[0], nq[1]);
        rep.input("conductor", format!("{n} {q}"));
        let c = conductor_product(n, q)?;
        rep.info(format!("conductor of the pair: {n}^3 * {q}^2 = {c}"));
        rep.check("conductor computed", true, c.to_string());
    }

    if args.witness {
        let t3 = tables
            .iter()
            .find(|t| t.group == GroupTag::Gl3)
            .ok_or_else(|| Error::TableData("witness scan needs a GL3 table".to_string()))?;
        let t2 = tables
            .iter()
            .find(|t| t.group == GroupTag::Gl2)
            .ok_or_else(|| Error::TableData("witness scan needs a GL2 table".to_string()))?;
        let nu: Vec<u64> = match &args.nu_ramified {
            Some(s) => parse_primes(s)?,
            None => Vec::new(),
        };
        rep.input("nu_ramified", format!("{nu:?}"));
        match nonselfdual_witness(t3, t2, &nu)? {
            Some(w) => {
                rep.info(format!("{w}"));
                rep.check("non-selfduality witness found", true, format!("prime {}", w.p));
            }
            None => {
                rep.check(
                    "non-selfduality witness found",
                    false,
                    "no qualifying prime in the table range",
                );
            }
        }
        // a tensor coefficient at the first common unramified prime
        if let Some(p) = t3.primes().find(|&p| {
            !t3.is_ramified(p) && !t2.is_ramified(p) && t2.a(p).is_some() && !nu.contains(&p)
        }) {
            let (v, field) = tensor_ap(t3, t2, p)?;
            rep.info(format!("tensor coefficient at {p}: {}", v.render(&field)));
        }
    }

    if let Some(label) = &args.fetch {
        rep.input("fetch", label);
        let cache_dir = args
            .cache_dir
            .clone()
            .or_else(|| std::env::var_os("CUSP_HECKE_CACHE").map(PathBuf::from))
            .unwrap_or_else(|| std::env::temp_dir().join("cusp-hecke-cache"));
        let base_url = match (&args.base_url, args.offline) {
            (Some(u), _) => u.clone(),
            (None, true) => String::new(),
            (None, false) => {
                return Err(Error::Unavailable(
                    "--fetch needs --base-url (or --offline with a warm cache)".to_string(),
                ))
            }
        };
        let cfg = RemoteConfig {
            base_url,
            cache_dir,
            offline: args.offline,
            timeout_secs: 15,
        };
        let t = fetch_remote(&cfg, label)?;
        rep.info(format!(
            "fetched {}: group {}, level {}, weight {}, field {}, {} primes",
            t.label,
            t.group,
            t.level,
            t.weight,
            t.field,
            t.len()
        ));
        rep.check(format!("table {} fetched and validated", t.label), true, "cached");
    }

    if args.constants
        || (!args.witness
            && args.conductor.is_none()
            && args.fetch.is_none()
            && tables.is_empty())
    {
        let c = constants();
        for line in c.to_string().lines() {
            rep.info(line.to_string());
        }
        let mut checks = Vec::new();
        suite::constants_checks(&mut checks)?;
        rep.extend_checks(checks);
    }
    Ok(rep)
}

fn cmd_all(cli: &Cli) -> Result<CliReport> {
    let mut rep = CliReport::new("all");
    rep.input("seed", cli.seed);
    rep.input("tolerance", format!("{:e}", cli.tolerance));
    rep.extend_checks(suite::run_all_checks(cli.seed, cli.tolerance)?);
    Ok(rep)
}
