//! Eigenvalue-table plumbing: parsing and validating coefficient tables,
//! tensor coefficients, the non-selfduality witness scan, the conductor
//! formula, the pinned constant tables, and an optional remote fetcher
//! with a disk cache.
//!
//! Table text format (`#` starts a comment):
//!
//! ```text
//! label=f53 group=GL3 level=53 weight=3 field=imaginary:-11
//! 2 1/2 3
//! 3 0 -1
//! ```
//!
//! The header declares the coefficient field: `rational`, or
//! `imaginary:<d>` with d < 0 for values `x + y*sqrt(d)` stored as exact
//! rational pairs. Rational tables write `p x` lines; imaginary tables
//! write `p x y`.
//!
//! Remote schema (JSON): an object with keys `label`, `group`, `level`,
//! `weight`, `field` (same grammar as the header) and `coefficients`, an
//! array of `[p, "x"]` or `[p, "x", "y"]` entries.

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Which standard group the table's form lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GroupTag {
    Gl2,
    Gl3,
}

impl fmt::Display for GroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupTag::Gl2 => write!(f, "GL2"),
            GroupTag::Gl3 => write!(f, "GL3"),
        }
    }
}

impl FromStr for GroupTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "GL2" => Ok(GroupTag::Gl2),
            "GL3" => Ok(GroupTag::Gl3),
            other => Err(Error::TableData(format!("unknown group tag `{other}`"))),
        }
    }
}

/// Coefficient field: the rationals, or an imaginary quadratic field of
/// discriminant-defining integer d < 0 (`d = -1` is the Gaussian field).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FieldTag {
    Rational,
    Imaginary { d: i64 },
}

impl FieldTag {
    /// Grammar form used in table headers: `rational` / `imaginary:-11`.
    pub fn serialize_tag(&self) -> String {
        match self {
            FieldTag::Rational => "rational".to_string(),
            FieldTag::Imaginary { d } => format!("imaginary:{d}"),
        }
    }
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldTag::Rational => write!(f, "Q"),
            FieldTag::Imaginary { d: -1 } => write!(f, "Q(i)"),
            FieldTag::Imaginary { d } => write!(f, "Q(sqrt({d}))"),
        }
    }
}

impl FromStr for FieldTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if s == "rational" {
            return Ok(FieldTag::Rational);
        }
        if let Some(ds) = s.strip_prefix("imaginary:") {
            let d: i64 = ds
                .parse()
                .map_err(|_| Error::TableData(format!("bad field integer `{ds}`")))?;
            if d >= 0 {
                return Err(Error::TableData(format!(
                    "imaginary field needs d < 0, got {d}"
                )));
            }
            return Ok(FieldTag::Imaginary { d });
        }
        Err(Error::TableData(format!("unknown field tag `{s}`")))
    }
}

/// An exact element `x + y*sqrt(d)` of the declared coefficient field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldValue {
    pub x: BigRational,
    pub y: BigRational,
}

impl FieldValue {
    pub fn rational(x: BigRational) -> Self {
        FieldValue {
            x,
            y: BigRational::zero(),
        }
    }

    pub fn from_integers(x: i64, y: i64) -> Self {
        FieldValue {
            x: BigRational::from_integer(BigInt::from(x)),
            y: BigRational::from_integer(BigInt::from(y)),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.y.is_zero()
    }

    /// Field conjugation: negate the sqrt(d) component.
    pub fn conj(&self) -> Self {
        FieldValue {
            x: self.x.clone(),
            y: -self.y.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        FieldValue {
            x: &self.x + &other.x,
            y: &self.y + &other.y,
        }
    }

    /// Multiply inside the field with `sqrt(d)^2 = d`.
    pub fn mul(&self, other: &Self, d: i64) -> Self {
        let dq = BigRational::from_integer(BigInt::from(d));
        FieldValue {
            x: &self.x * &other.x + &dq * &self.y * &other.y,
            y: &self.x * &other.y + &self.y * &other.x,
        }
    }

    pub fn to_complex(&self, field: &FieldTag) -> Complex64 {
        let x = self.x.to_f64().unwrap_or(f64::NAN);
        match field {
            FieldTag::Rational => Complex64::new(x, 0.0),
            FieldTag::Imaginary { d } => {
                let y = self.y.to_f64().unwrap_or(f64::NAN);
                Complex64::new(x, y * ((-d) as f64).sqrt())
            }
        }
    }

    /// Human rendering in the given field: `1/2`, `1/2+3i`, or
    /// `1/2+3*sqrt(-11)`.
    pub fn render(&self, field: &FieldTag) -> String {
        if self.y.is_zero() {
            return self.x.to_string();
        }
        let unit = match field {
            FieldTag::Rational => "*sqrt(?)".to_string(),
            FieldTag::Imaginary { d: -1 } => "i".to_string(),
            FieldTag::Imaginary { d } => format!("*sqrt({d})"),
        };
        let sign = if self.y.is_negative() { "-" } else { "+" };
        let mag = self.y.abs();
        if self.x.is_zero() {
            let lead = if self.y.is_negative() { "-" } else { "" };
            format!("{lead}{mag}{unit}")
        } else {
            format!("{}{sign}{mag}{unit}", self.x)
        }
    }
}

pub(crate) fn parse_rational(s: &str) -> Option<BigRational> {
    BigRational::from_str(s).ok().or_else(|| {
        // accept plain integers too
        BigInt::from_str(s).ok().map(BigRational::from_integer)
    })
}

/// A validated coefficient table.
#[derive(Debug, Clone)]
pub struct HeckeTable {
    pub label: String,
    pub group: GroupTag,
    pub level: u64,
    pub weight: u32,
    pub field: FieldTag,
    entries: BTreeMap<u64, FieldValue>,
}

impl HeckeTable {
    /// Parse the text format; errors carry line numbers.
    pub fn parse(input: &str) -> Result<Self> {
        let what = "eigenvalue table";
        let mut header: Option<(String, GroupTag, u64, u32, FieldTag)> = None;
        let mut entries = BTreeMap::new();
        for (idx, raw) in input.lines().enumerate() {
            let line_no = idx + 1;
            let bad = |detail: String| Error::ParseAt {
                what,
                line: line_no,
                detail,
            };
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            if header.is_none() {
                // header line of key=value pairs
                let mut map = BTreeMap::new();
                for tok in line.split_whitespace() {
                    let (k, v) = tok
                        .split_once('=')
                        .ok_or_else(|| bad(format!("expected key=value, got `{tok}`")))?;
                    map.insert(k.to_string(), v.to_string());
                }
                let get = |k: &str| -> Result<String> {
                    map.get(k)
                        .cloned()
                        .ok_or_else(|| bad(format!("header missing `{k}=`")))
                };
                let label = get("label")?;
                let group: GroupTag = get("group")?.parse().map_err(|e| bad(format!("{e}")))?;
                let level: u64 = get("level")?
                    .parse()
                    .map_err(|_| bad("bad level".to_string()))?;
                let weight: u32 = get("weight")?
                    .parse()
                    .map_err(|_| bad("bad weight".to_string()))?;
                let field: FieldTag = get("field")?.parse().map_err(|e| bad(format!("{e}")))?;
                if level == 0 {
                    return Err(bad("level must be positive".to_string()));
                }
                header = Some((label, group, level, weight, field));
                continue;
            }
            let (_, _, _, _, field) = header.as_ref().unwrap();
            let toks: Vec<&str> = line.split_whitespace().collect();
            let expect = match field {
                FieldTag::Rational => 2,
                FieldTag::Imaginary { .. } => 3,
            };
            if toks.len() != expect && !(expect == 2 && toks.len() == 3) {
                return Err(bad(format!(
                    "expected {expect} tokens (`p x{}`), got {}",
                    if expect == 3 { " y" } else { "" },
                    toks.len()
                )));
            }
            let p: u64 = toks[0]
                .parse()
                .map_err(|_| bad(format!("bad prime `{}`", toks[0])))?;
            if !crate::lfactor::is_prime(p) {
                return Err(bad(format!("{p} is not prime")));
            }
            let x = parse_rational(toks[1])
                .ok_or_else(|| bad(format!("bad rational `{}`", toks[1])))?;
            let y = if toks.len() == 3 {
                parse_rational(toks[2])
                    .ok_or_else(|| bad(format!("bad rational `{}`", toks[2])))?
            } else {
                BigRational::zero()
            };
            if matches!(field, FieldTag::Rational) && !y.is_zero() {
                return Err(bad(
                    "nonzero imaginary component in a rational table".to_string(),
                ));
            }
            if entries.insert(p, FieldValue { x, y }).is_some() {
                return Err(bad(format!("duplicate prime {p}")));
            }
        }
        let (label, group, level, weight, field) =
            header.ok_or_else(|| Error::TableData("missing header line".to_string()))?;
        if entries.is_empty() {
            return Err(Error::TableData("table has no coefficient lines".to_string()));
        }
        Ok(HeckeTable {
            label,
            group,
            level,
            weight,
            field,
            entries,
        })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::parse(&text)
    }

    /// Canonical text rendering; `parse` of the output reproduces the
    /// table.
    pub fn serialize(&self) -> String {
        let mut out = format!(
            "label={} group={} level={} weight={} field={}\n",
            self.label,
            self.group,
            self.level,
            self.weight,
            self.field.serialize_tag()
        );
        for (p, v) in &self.entries {
            match self.field {
                FieldTag::Rational => out.push_str(&format!("{p} {}\n", v.x)),
                FieldTag::Imaginary { .. } => {
                    out.push_str(&format!("{p} {} {}\n", v.x, v.y))
                }
            }
        }
        out
    }

    pub fn a(&self, p: u64) -> Option<&FieldValue> {
        self.entries.get(&p)
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.entries.keys().copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Primes in the table dividing the level.
    pub fn ramified_primes(&self) -> Vec<u64> {
        self.entries
            .keys()
            .copied()
            .filter(|p| self.level % p == 0)
            .collect()
    }

    pub fn is_ramified(&self, p: u64) -> bool {
        self.level % p == 0
    }
}

/// Combined coefficient field for a binary operation.
fn common_field(a: &FieldTag, b: &FieldTag) -> Result<FieldTag> {
    match (a, b) {
        (FieldTag::Rational, other) | (other, FieldTag::Rational) => Ok(*other),
        (FieldTag::Imaginary { d: d1 }, FieldTag::Imaginary { d: d2 }) => {
            if d1 == d2 {
                Ok(*a)
            } else {
                Err(Error::FieldMismatch(format!(
                    "cannot multiply values from Q(sqrt({d1})) and Q(sqrt({d2}))"
                )))
            }
        }
    }
}

/// The unramified tensor coefficient `a_p(pi) * a_p(pi')`.
pub fn tensor_ap(t3: &HeckeTable, t2: &HeckeTable, p: u64) -> Result<(FieldValue, FieldTag)> {
    if t3.is_ramified(p) || t2.is_ramified(p) {
        return Err(Error::TableData(format!(
            "prime {p} divides a level ({} or {})",
            t3.level, t2.level
        )));
    }
    let a3 = t3
        .a(p)
        .ok_or_else(|| Error::TableData(format!("prime {p} missing from `{}`", t3.label)))?;
    let a2 = t2
        .a(p)
        .ok_or_else(|| Error::TableData(format!("prime {p} missing from `{}`", t2.label)))?;
    let field = common_field(&t3.field, &t2.field)?;
    let d = match field {
        FieldTag::Rational => -1, // unused: both y components vanish
        FieldTag::Imaginary { d } => d,
    };
    Ok((a3.mul(a2, d), field))
}

/// Outcome of the non-selfduality scan at one prime.
#[derive(Debug, Clone, Serialize)]
pub struct WitnessReport {
    pub p: u64,
    /// a_p of the rank-2 table, rendered.
    pub ap_gl2: String,
    /// a_p of the rank-3 table, rendered.
    pub ap_gl3: String,
    /// Conjugate of the rank-3 value, rendered.
    pub ap_gl3_conj: String,
    /// The auxiliary quadratic character is nonzero at p because p avoids
    /// its declared ramification set.
    pub nu_nonzero: bool,
}

impl fmt::Display for WitnessReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "p={}: a_p(GL2)={} != 0, a_p(GL3)={} with conjugate {} (differs), nu(p) != 0: {}",
            self.p, self.ap_gl2, self.ap_gl3, self.ap_gl3_conj, self.nu_nonzero
        )
    }
}

/// Scan for a prime certifying that the rank-3 form is not self-dual:
/// the first p, coprime to both levels and to the declared ramification
/// set of the auxiliary character, with `a_p(GL2) != 0` and
/// `a_p(GL3)` different from its conjugate. Requires an imaginary
/// coefficient field on the rank-3 table (conjugation must be able to
/// act nontrivially).
pub fn nonselfdual_witness(
    t3: &HeckeTable,
    t2: &HeckeTable,
    nu_ramified: &[u64],
) -> Result<Option<WitnessReport>> {
    if matches!(t3.field, FieldTag::Rational) {
        return Err(Error::FieldMismatch(
            "rank-3 table has rational coefficients; conjugation is trivial".to_string(),
        ));
    }
    for p in t3.primes() {
        if t2.a(p).is_none() {
            continue;
        }
        if t3.is_ramified(p) || t2.is_ramified(p) || nu_ramified.contains(&p) {
            continue;
        }
        let a2 = t2.a(p).unwrap();
        let a3 = t3.a(p).unwrap();
        if a2.is_zero() || a3.is_real() {
            continue;
        }
        return Ok(Some(WitnessReport {
            p,
            ap_gl2: a2.render(&t2.field),
            ap_gl3: a3.render(&t3.field),
            ap_gl3_conj: a3.conj().render(&t3.field),
            nu_nonzero: true,
        }));
    }
    Ok(None)
}

/// Conductor of the product for coprime levels: `N^3 * q^2`.
pub fn conductor_product(n: u64, q: u64) -> Result<u64> {
    if n == 0 || q == 0 {
        return Err(Error::Conductor("levels must be positive".to_string()));
    }
    let g = gcd(n, q);
    if g != 1 {
        return Err(Error::Conductor(format!(
            "levels must be relatively prime; gcd({n}, {q}) = {g}"
        )));
    }
    (n as u128)
        .checked_pow(3)
        .and_then(|a| a.checked_mul((q as u128).pow(2)))
        .and_then(|big| u64::try_from(big).ok())
        .ok_or_else(|| Error::Conductor(format!("{n}^3 * {q}^2 overflows")))
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The pinned constant tables used by the worked numeric examples.
#[derive(Debug, Clone, Serialize)]
pub struct Constants {
    /// Levels with rank-3 forms catalogued from cohomology computations.
    pub t1: [u64; 4],
    /// Levels attached to the surface constructions.
    pub t2: [u64; 3],
    /// Coefficient field of the rank-3 form at each T1 level.
    pub t1_fields: [(u64, FieldTag); 4],
    /// Common coefficient field at every T2 level.
    pub t2_field: FieldTag,
    /// Levels with weight-4 rational newforms used for the pairing.
    pub weight4_rational_levels: [u64; 6],
}

/// The constant tables, rendered byte-stably by `Display`.
pub fn constants() -> Constants {
    Constants {
        t1: [53, 61, 79, 89],
        t2: [128, 160, 205],
        t1_fields: [
            (53, FieldTag::Imaginary { d: -11 }),
            (61, FieldTag::Imaginary { d: -3 }),
            (79, FieldTag::Imaginary { d: -15 }),
            (89, FieldTag::Imaginary { d: -1 }),
        ],
        t2_field: FieldTag::Imaginary { d: -1 },
        weight4_rational_levels: [5, 7, 13, 17, 19, 23],
    }
}

impl fmt::Display for Constants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[u64]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        };
        writeln!(f, "T1 = {{{}}}", list(&self.t1))?;
        writeln!(f, "T2 = {{{}}}", list(&self.t2))?;
        for (q, field) in &self.t1_fields {
            writeln!(f, "coefficient field at level {q}: {field}")?;
        }
        writeln!(f, "coefficient field at every T2 level: {}", self.t2_field)?;
        writeln!(
            f,
            "weight-4 rational levels: {}",
            list(&self.weight4_rational_levels)
        )
    }
}

/// Configuration for the optional remote table source.
#[derive(Debug, Clone)]
pub struct RemoteConfig {
    /// Base URL; `{label}` is substituted if present, otherwise
    /// `/{label}.json` is appended.
    pub base_url: String,
    pub cache_dir: PathBuf,
    /// Use only the disk cache; never touch the network.
    pub offline: bool,
    pub timeout_secs: u64,
}

impl RemoteConfig {
    fn url_for(&self, label: &str) -> String {
        if self.base_url.contains("{label}") {
            self.base_url.replace("{label}", label)
        } else {
            format!("{}/{label}.json", self.base_url.trim_end_matches('/'))
        }
    }

    fn cache_path(&self, label: &str) -> PathBuf {
        self.cache_dir.join(format!("{label}.tbl"))
    }
}

/// Interpret a JSON coefficient document (the remote schema).
pub fn table_from_json(text: &str) -> Result<HeckeTable> {
    let doc: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Error::Schema(format!("not JSON: {e}")))?;
    let obj = doc
        .as_object()
        .ok_or_else(|| Error::Schema("top level must be an object".to_string()))?;
    let get = |k: &str| -> Result<&serde_json::Value> {
        obj.get(k)
            .ok_or_else(|| Error::Schema(format!("missing key `{k}`")))
    };
    let s = |k: &str| -> Result<String> {
        get(k)?
            .as_str()
            .map(str::to_string)
            .ok_or_else(|| Error::Schema(format!("key `{k}` must be a string")))
    };
    let label = s("label")?;
    let group: GroupTag = s("group")?
        .parse()
        .map_err(|e| Error::Schema(format!("{e}")))?;
    let level = get("level")?
        .as_u64()
        .ok_or_else(|| Error::Schema("key `level` must be a positive integer".to_string()))?;
    let weight = get("weight")?
        .as_u64()
        .ok_or_else(|| Error::Schema("key `weight` must be a positive integer".to_string()))?
        as u32;
    let field: FieldTag = s("field")?
        .parse()
        .map_err(|e| Error::Schema(format!("{e}")))?;
    let coeffs = get("coefficients")?
        .as_array()
        .ok_or_else(|| Error::Schema("key `coefficients` must be an array".to_string()))?;
    // reuse the text parser for final validation by rendering lines
    let mut text = format!(
        "label={label} group={group} level={level} weight={weight} field={}\n",
        field.serialize_tag()
    );
    for (i, entry) in coeffs.iter().enumerate() {
        let arr = entry
            .as_array()
            .ok_or_else(|| Error::Schema(format!("coefficient {i} must be an array")))?;
        if arr.len() != 2 && arr.len() != 3 {
            return Err(Error::Schema(format!(
                "coefficient {i} must be [p, \"x\"] or [p, \"x\", \"y\"]"
            )));
        }
        let p = arr[0]
            .as_u64()
            .ok_or_else(|| Error::Schema(format!("coefficient {i}: p must be an integer")))?;
        let mut parts = vec![p.to_string()];
        for v in &arr[1..] {
            let sv = v
                .as_str()
                .ok_or_else(|| Error::Schema(format!(
                    "coefficient {i}: values must be rational strings"
                )))?;
            parts.push(sv.to_string());
        }
        text.push_str(&parts.join(" "));
        text.push('\n');
    }
    HeckeTable::parse(&text).map_err(|e| Error::Schema(format!("coefficients invalid: {e}")))
}

/// Fetch a table by label: offline mode reads the cache only; online
/// mode downloads, validates, writes the cache atomically, and returns
/// the table. Network and schema problems surface as distinct errors.
pub fn fetch_remote(cfg: &RemoteConfig, label: &str) -> Result<HeckeTable> {
    let cache = cfg.cache_path(label);
    if cfg.offline {
        if cache.exists() {
            return HeckeTable::load(&cache);
        }
        return Err(Error::Unavailable(format!(
            "offline and no cached table at {}",
            cache.display()
        )));
    }
    let url = cfg.url_for(label);
    let agent: ureq::Agent = ureq::Agent::config_builder()
        .timeout_global(Some(std::time::Duration::from_secs(cfg.timeout_secs)))
        .build()
        .into();
    let mut response = agent
        .get(&url)
        .call()
        .map_err(|e| Error::Network(format!("GET {url}: {e}")))?;
    let body = response
        .body_mut()
        .read_to_string()
        .map_err(|e| Error::Network(format!("reading body of {url}: {e}")))?;
    let table = table_from_json(&body)?;
    // atomic cache write: temp file then rename
    std::fs::create_dir_all(&cfg.cache_dir)?;
    let tmp = cfg.cache_dir.join(format!("{label}.tbl.tmp"));
    std::fs::write(&tmp, table.serialize())?;
    std::fs::rename(&tmp, &cache)?;
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charalg::{GeneratorBasis, NumericEmbedding};
    use crate::isobaric::LocalParameter;
    use crate::lfactor::series_from_embeddings;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn fixture(name: &str) -> PathBuf {
        Path::new(env!("CARGO_MANIFEST_DIR"))
            .join("../../fixtures")
            .join(name)
    }

    #[test]
    fn fixture_tables_load_and_round_trip() {
        let t3 = HeckeTable::load(&fixture("gl3_level53.tbl")).unwrap();
        assert_eq!(t3.group, GroupTag::Gl3);
        assert_eq!(t3.level, 53);
        assert_eq!(t3.field, FieldTag::Imaginary { d: -11 });
        assert_eq!(t3.len(), 25);
        assert_eq!(t3.ramified_primes(), vec![53]);
        let re = HeckeTable::parse(&t3.serialize()).unwrap();
        assert_eq!(re.serialize(), t3.serialize());

        let t2 = HeckeTable::load(&fixture("gl2_level5.tbl")).unwrap();
        assert_eq!(t2.group, GroupTag::Gl2);
        assert_eq!(t2.field, FieldTag::Rational);
        assert_eq!(t2.len(), 25);
        let re = HeckeTable::parse(&t2.serialize()).unwrap();
        assert_eq!(re.serialize(), t2.serialize());
    }

    #[test]
    fn parse_errors_name_lines() {
        let header = "label=t group=GL2 level=5 weight=4 field=rational\n";
        // malformed value on line 2
        let err = HeckeTable::parse(&format!("{header}2 x\n")).unwrap_err();
        assert!(matches!(err, Error::ParseAt { line: 2, .. }), "{err}");
        // duplicate prime on line 3
        let err = HeckeTable::parse(&format!("{header}2 1\n2 2\n")).unwrap_err();
        assert!(matches!(err, Error::ParseAt { line: 3, .. }), "{err}");
        // composite entry
        let err = HeckeTable::parse(&format!("{header}4 1\n")).unwrap_err();
        assert!(matches!(err, Error::ParseAt { line: 2, .. }), "{err}");
        // imaginary component in a rational table
        let err = HeckeTable::parse(&format!("{header}2 1 3\n")).unwrap_err();
        assert!(matches!(err, Error::ParseAt { line: 2, .. }), "{err}");
        // missing header
        assert!(matches!(
            HeckeTable::parse("2 1\n"),
            Err(Error::ParseAt { line: 1, .. })
        ));
        // header without field
        assert!(HeckeTable::parse("label=t group=GL2 level=5 weight=4\n2 1\n").is_err());
        // empty body
        assert!(matches!(
            HeckeTable::parse(header),
            Err(Error::TableData(_))
        ));
    }

    #[test]
    fn tensor_coefficients() {
        let t3 = HeckeTable::load(&fixture("gl3_level53.tbl")).unwrap();
        let t2 = HeckeTable::load(&fixture("gl2_level5.tbl")).unwrap();
        // a_7(GL3) = 1 + i*sqrt(-11)-coefficient pair (1,1); a_7(GL2) = 2
        let (v, field) = tensor_ap(&t3, &t2, 7).unwrap();
        assert_eq!(field, FieldTag::Imaginary { d: -11 });
        assert_eq!(v, FieldValue::from_integers(2, 2));
        // ramified primes rejected on both sides
        assert!(tensor_ap(&t3, &t2, 53).is_err());
        assert!(tensor_ap(&t3, &t2, 5).is_err());
        // missing prime
        assert!(tensor_ap(&t3, &t2, 101).is_err());
        // zero GL2 coefficient stays zero
        let (v, _) = tensor_ap(&t3, &t2, 19).unwrap();
        assert!(v.is_zero());
        // mismatched imaginary fields refuse to multiply
        let other = HeckeTable::parse(
            "label=o group=GL2 level=7 weight=2 field=imaginary:-3\n2 1 1\n",
        )
        .unwrap();
        assert!(tensor_ap(&t3, &other, 2).is_err());
    }

    #[test]
    fn tensor_matches_series_coefficient_bridge() {
        // Independent path: the p-th Dirichlet coefficient of the
        // tensor-parameter series equals the product of the p-th
        // coefficients of the factors.
        let b = GeneratorBasis::parse("basis g1:8, g2:8, h1:12, h2:12, h3:12;").unwrap();
        let p2 = LocalParameter::parse(&b, "[g1, g2]").unwrap();
        let p3 = LocalParameter::parse(&b, "[h1, h2, h3]").unwrap();
        let prod = p2.boxtimes(&p3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        for p in [2u64, 3, 5, 7, 11, 13] {
            let emb = NumericEmbedding::random(&b, &mut rng);
            let embs = vec![(p, emb)];
            let c2 = series_from_embeddings(&p2, &embs).unwrap();
            let c3 = series_from_embeddings(&p3, &embs).unwrap();
            let cp = series_from_embeddings(&prod, &embs).unwrap();
            let a2 = c2.dirichlet_coefficients(p).unwrap()[p as usize];
            let a3 = c3.dirichlet_coefficients(p).unwrap()[p as usize];
            let ap = cp.dirichlet_coefficients(p).unwrap()[p as usize];
            assert!(
                (ap - a2 * a3).norm() < 1e-9 * (1.0 + ap.norm()),
                "p = {p}"
            );
        }
    }

    #[test]
    fn witness_scan() {
        let t3 = HeckeTable::load(&fixture("gl3_level53.tbl")).unwrap();
        let t2 = HeckeTable::load(&fixture("gl2_level5.tbl")).unwrap();
        // the fixture has a_2 real and non-real values from p = 7 on;
        // a_3(GL2) = 0 skips p = 3
        let w = nonselfdual_witness(&t3, &t2, &[]).unwrap().unwrap();
        assert_eq!(w.p, 7);
        assert!(w.nu_nonzero);
        // excluding 7 from the allowed set moves the witness forward
        let w = nonselfdual_witness(&t3, &t2, &[7]).unwrap().unwrap();
        assert!(w.p > 7);
        // all-real rank-3 coefficients: method inapplicable
        let real3 = HeckeTable::parse(
            "label=r group=GL3 level=11 weight=3 field=rational\n2 1\n3 4\n",
        )
        .unwrap();
        assert!(nonselfdual_witness(&real3, &t2, &[]).is_err());
        // imaginary field but real values: absence, not error
        let real_vals = HeckeTable::parse(
            "label=rv group=GL3 level=11 weight=3 field=imaginary:-1\n2 1 0\n3 4 0\n7 1 0\n",
        )
        .unwrap();
        assert!(nonselfdual_witness(&real_vals, &t2, &[]).unwrap().is_none());
    }

    #[test]
    fn conductor_formula() {
        assert_eq!(conductor_product(5, 53).unwrap(), 351_125);
        assert_eq!(conductor_product(7, 128).unwrap(), 343 * 16_384);
        assert!(conductor_product(6, 128).is_err());
        assert!(conductor_product(0, 5).is_err());
        // strict multiplicativity spot checks
        assert_eq!(
            conductor_product(10, 53).unwrap(),
            conductor_product(5, 53).unwrap() * 8
        );
        assert_eq!(conductor_product(1, 1).unwrap(), 1);
        // overflow guard
        assert!(conductor_product(u64::MAX - 1, 3).is_err());
    }

    #[test]
    fn constant_tables_pinned() {
        let c = constants();
        assert_eq!(c.t1, [53, 61, 79, 89]);
        assert_eq!(c.t2, [128, 160, 205]);
        assert_eq!(c.t1_fields[0], (53, FieldTag::Imaginary { d: -11 }));
        assert_eq!(c.t1_fields[1], (61, FieldTag::Imaginary { d: -3 }));
        assert_eq!(c.t1_fields[2], (79, FieldTag::Imaginary { d: -15 }));
        assert_eq!(c.t1_fields[3], (89, FieldTag::Imaginary { d: -1 }));
        assert_eq!(c.t2_field, FieldTag::Imaginary { d: -1 });
        assert_eq!(c.weight4_rational_levels, [5, 7, 13, 17, 19, 23]);
        let rendered = c.to_string();
        assert_eq!(rendered, constants().to_string(), "byte-stable rendering");
        assert!(rendered.contains("T1 = {53, 61, 79, 89}"));
        assert!(rendered.contains("Q(sqrt(-15))"));
        assert!(rendered.contains("Q(i)"));
    }

    #[test]
    fn json_schema_and_cache_paths() {
        let json = std::fs::read_to_string(fixture("remote/f53.json")).unwrap();
        let table = table_from_json(&json).unwrap();
        assert_eq!(table.label, "f53");
        assert_eq!(table.level, 53);
        assert!(table.len() >= 3);

        // schema drift
        assert!(matches!(
            table_from_json("{}"),
            Err(Error::Schema(_))
        ));
        assert!(matches!(
            table_from_json("[1,2]"),
            Err(Error::Schema(_))
        ));
        assert!(matches!(
            table_from_json(
                r#"{"label":"x","group":"GL3","level":1,"weight":3,"field":"rational","coefficients":[[4,"1"]]}"#
            ),
            Err(Error::Schema(_))
        ));
        assert!(matches!(table_from_json("not json"), Err(Error::Schema(_))));

        // offline with cold cache
        let dir = std::env::temp_dir().join(format!("hecke-cache-{}", std::process::id()));
        let _ = std::fs::remove_dir_all(&dir);
        let cfg = RemoteConfig {
            base_url: "http://127.0.0.1:1/tables".to_string(),
            cache_dir: dir.clone(),
            offline: true,
            timeout_secs: 1,
        };
        assert!(matches!(
            fetch_remote(&cfg, "f53"),
            Err(Error::Unavailable(_))
        ));
        // warm the cache manually, then offline read succeeds
        std::fs::create_dir_all(&dir).unwrap();
        std::fs::write(dir.join("f53.tbl"), table.serialize()).unwrap();
        let cached = fetch_remote(&cfg, "f53").unwrap();
        assert_eq!(cached.serialize(), table.serialize());
        // online against an unreachable endpoint is a network error
        let cfg_online = RemoteConfig {
            offline: false,
            ..cfg.clone()
        };
        assert!(matches!(
            fetch_remote(&cfg_online, "f53"),
            Err(Error::Network(_))
        ));
        let _ = std::fs::remove_dir_all(&dir);
    }

    #[test]
    fn fetch_over_local_http() {
        use std::io::{Read, Write};
        // one-shot HTTP server serving the JSON fixture
        let json = std::fs::read_to_string(fixture("remote/f53.json")).unwrap();
        let listener = std::net::TcpListener::bind("127.0.0.1:0").unwrap();
        let addr = listener.local_addr().unwrap();
        let body = json.clone();
        let server = std::thread::spawn(move || {
            let (mut stream, _) = listener.accept().unwrap();
            let mut buf = [0u8; 4096];
            let _ = stream.read(&mut buf);
            let resp = format!(
                "HTTP/1.1 200 OK\r\ncontent-type: application/json\r\ncontent-length: {}\r\nconnection: close\r\n\r\n{}",
                body.len(),
                body
            );
            stream.write_all(resp.as_bytes()).unwrap();
        });
        let dir = std::env::temp_dir().join(format!("hecke-fetch-{}", std::process::id()));
        let _ = std::fs::remove_dir_all(&dir);
        let cfg = RemoteConfig {
            base_url: format!("http://{addr}/tables"),
            cache_dir: dir.clone(),
            offline: false,
            timeout_secs: 5,
        };
        let table = fetch_remote(&cfg, "f53").unwrap();
        assert_eq!(table.label, "f53");
        server.join().unwrap();
        // the cache was written atomically; offline replay works
        let cfg_off = RemoteConfig {
            offline: true,
            ..cfg
        };
        let replay = fetch_remote(&cfg_off, "f53").unwrap();
        assert_eq!(replay.serialize(), table.serialize());
        let _ = std::fs::remove_dir_all(&dir);
    }
}
