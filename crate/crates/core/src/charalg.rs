//! Abelian character algebra over a named generator basis.
//!
//! A basis declares finitely many generators, each free (infinite order)
//! or of finite order d; a character is an exponent vector over that
//! basis, stored reduced (finite-order exponents in [0, d)), so equality
//! is plain structural equality. Numeric embeddings assign a nonzero
//! complex value to each generator and evaluate characters exactly when
//! every value involved is a root of unity.
//!
//! Text forms:
//!   basis declaration   `basis chi:3, delta:2, alpha, beta;`
//!   character literal   `alpha^2*beta*chi^-1`   (trivial character: `1`)
//! Both are whitespace-insensitive and round-trip through the canonical
//! serialization bit-exactly.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use rand::Rng;

use crate::cyclotomic::lcm;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Generator {
    pub name: String,
    /// None for a free generator, Some(d) for order d >= 1.
    pub order: Option<u32>,
}

/// Ordered list of named generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorBasis {
    gens: Vec<Generator>,
}

fn valid_ident(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl GeneratorBasis {
    pub fn new(gens: Vec<(String, Option<u32>)>) -> Result<Arc<Self>> {
        if gens.is_empty() {
            return Err(Error::Parse {
                what: "generator basis",
                detail: "at least one generator required".into(),
            });
        }
        let mut seen = std::collections::HashSet::new();
        for (name, order) in &gens {
            if !valid_ident(name) {
                return Err(Error::Parse {
                    what: "generator basis",
                    detail: format!("invalid generator name `{name}`"),
                });
            }
            if !seen.insert(name.clone()) {
                return Err(Error::Parse {
                    what: "generator basis",
                    detail: format!("duplicate generator `{name}`"),
                });
            }
            if let Some(d) = order {
                if *d < 1 {
                    return Err(Error::Parse {
                        what: "generator basis",
                        detail: format!("generator `{name}` has order 0"),
                    });
                }
            }
        }
        Ok(Arc::new(GeneratorBasis {
            gens: gens
                .into_iter()
                .map(|(name, order)| Generator { name, order })
                .collect(),
        }))
    }

    /// Convenience constructor: order 0 means free.
    pub fn from_pairs(pairs: &[(&str, u32)]) -> Arc<Self> {
        GeneratorBasis::new(
            pairs
                .iter()
                .map(|(n, d)| (n.to_string(), if *d == 0 { None } else { Some(*d) }))
                .collect(),
        )
        .expect("static basis")
    }

    /// Parse `basis chi:3, delta:2, alpha, beta;`.
    pub fn parse(input: &str) -> Result<Arc<Self>> {
        let s = input.trim();
        let bad = |detail: String| Error::Parse {
            what: "basis declaration",
            detail,
        };
        let rest = s
            .strip_prefix("basis")
            .ok_or_else(|| bad("expected leading `basis` keyword".into()))?;
        let rest = rest.trim_end();
        let rest = rest
            .strip_suffix(';')
            .ok_or_else(|| bad("expected terminating `;`".into()))?;
        let mut gens = Vec::new();
        for item in rest.split(',') {
            let item: String = item.chars().filter(|c| !c.is_whitespace()).collect();
            if item.is_empty() {
                return Err(bad("empty generator entry".into()));
            }
            match item.split_once(':') {
                Some((name, ord)) => {
                    let d: u32 = ord
                        .parse()
                        .map_err(|_| bad(format!("bad order `{ord}` for `{name}`")))?;
                    if d == 0 {
                        return Err(bad(format!("generator `{name}` has order 0")));
                    }
                    gens.push((name.to_string(), Some(d)));
                }
                None => gens.push((item, None)),
            }
        }
        GeneratorBasis::new(gens)
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.gens.iter().position(|g| g.name == name)
    }
}

impl fmt::Display for GeneratorBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "basis ")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            match g.order {
                Some(d) => write!(f, "{}:{}", g.name, d)?,
                None => write!(f, "{}", g.name)?,
            }
        }
        write!(f, ";")
    }
}

/// A character: reduced exponent vector over a shared basis.
#[derive(Debug, Clone)]
pub struct Character {
    basis: Arc<GeneratorBasis>,
    exps: Vec<i64>,
}

fn reduce_exp(e: i64, order: Option<u32>) -> i64 {
    match order {
        Some(d) => e.rem_euclid(d as i64),
        None => e,
    }
}

impl Character {
    pub fn new(basis: &Arc<GeneratorBasis>, exps: Vec<i64>) -> Result<Self> {
        if exps.len() != basis.len() {
            return Err(Error::BasisMismatch(format!(
                "exponent vector has length {}, basis has {} generators",
                exps.len(),
                basis.len()
            )));
        }
        let exps = exps
            .into_iter()
            .zip(basis.gens.iter())
            .map(|(e, g)| reduce_exp(e, g.order))
            .collect();
        Ok(Character {
            basis: basis.clone(),
            exps,
        })
    }

    pub fn trivial(basis: &Arc<GeneratorBasis>) -> Self {
        Character {
            basis: basis.clone(),
            exps: vec![0; basis.len()],
        }
    }

    /// The character sending `name` to itself (exponent 1 there, 0 elsewhere).
    pub fn generator(basis: &Arc<GeneratorBasis>, name: &str) -> Result<Self> {
        let idx = basis
            .index_of(name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
        let mut exps = vec![0; basis.len()];
        exps[idx] = 1;
        Character::new(basis, exps)
    }

    pub fn basis(&self) -> &Arc<GeneratorBasis> {
        &self.basis
    }

    pub fn exponents(&self) -> &[i64] {
        &self.exps
    }

    pub fn is_trivial(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    fn same_basis(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.basis, &other.basis) || self.basis == other.basis {
            Ok(())
        } else {
            Err(Error::BasisMismatch(format!(
                "`{}` vs `{}`",
                self.basis, other.basis
            )))
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_basis(other)?;
        let exps = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .zip(self.basis.gens.iter())
            .map(|((a, b), g)| reduce_exp(a + b, g.order))
            .collect();
        Ok(Character {
            basis: self.basis.clone(),
            exps,
        })
    }

    pub fn inv(&self) -> Self {
        let exps = self
            .exps
            .iter()
            .zip(self.basis.gens.iter())
            .map(|(e, g)| reduce_exp(-e, g.order))
            .collect();
        Character {
            basis: self.basis.clone(),
            exps,
        }
    }

    pub fn pow(&self, k: i64) -> Self {
        let exps = self
            .exps
            .iter()
            .zip(self.basis.gens.iter())
            .map(|(e, g)| reduce_exp(e.saturating_mul(k), g.order))
            .collect();
        Character {
            basis: self.basis.clone(),
            exps,
        }
    }

    /// Multiplicative order: None when infinite.
    pub fn order(&self) -> Option<u64> {
        let mut acc = 1u64;
        for (e, g) in self.exps.iter().zip(self.basis.gens.iter()) {
            if *e == 0 {
                continue;
            }
            match g.order {
                None => return None,
                Some(d) => {
                    let d = d as u64;
                    let o = d / crate::cyclotomic::gcd(e.unsigned_abs(), d);
                    acc = lcm(acc, o);
                }
            }
        }
        Some(acc)
    }

    /// Evaluate under an embedding; exact when every generator involved
    /// carries an exact root-of-unity value.
    pub fn eval(&self, emb: &NumericEmbedding) -> Result<EvalValue> {
        let mut acc = EvalValue::Exact(RootOfUnity::one());
        for (e, g) in self.exps.iter().zip(self.basis.gens.iter()) {
            if *e == 0 {
                continue;
            }
            let v = emb
                .values
                .get(&g.name)
                .ok_or_else(|| Error::MissingAssignment(g.name.clone()))?;
            acc = acc.mul(&v.pow(*e));
        }
        Ok(acc)
    }

    /// Parse a character literal over `basis`: `1` or `name[^exp]` factors
    /// joined by `*`, e.g. `alpha^2*beta*chi^-1`.
    pub fn parse(basis: &Arc<GeneratorBasis>, input: &str) -> Result<Self> {
        let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = |detail: String| Error::Parse {
            what: "character literal",
            detail,
        };
        if s.is_empty() {
            return Err(bad("empty literal".into()));
        }
        if s == "1" {
            return Ok(Character::trivial(basis));
        }
        let mut exps = vec![0i64; basis.len()];
        for factor in s.split('*') {
            if factor.is_empty() {
                return Err(bad("empty factor (stray `*`?)".into()));
            }
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => {
                    let e: i64 = e
                        .parse()
                        .map_err(|_| bad(format!("bad exponent in `{factor}`")))?;
                    (n, e)
                }
                None => (factor, 1),
            };
            let idx = basis
                .index_of(name)
                .ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
            exps[idx] += exp;
        }
        Character::new(basis, exps)
    }
}

// Canonical serialization: factors in basis order, reduced exponents,
// `^1` omitted; trivial character prints as `1`.
impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "1");
        }
        let mut first = true;
        for (e, g) in self.exps.iter().zip(self.basis.gens.iter()) {
            if *e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "{}", g.name)?;
            } else {
                write!(f, "{}^{}", g.name, e)?;
            }
        }
        Ok(())
    }
}

impl PartialEq for Character {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.basis, &other.basis) || self.basis == other.basis)
            && self.exps == other.exps
    }
}

impl Eq for Character {}

impl PartialOrd for Character {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Character {
    fn cmp(&self, other: &Self) -> Ordering {
        self.exps.cmp(&other.exps)
    }
}

/// A root of unity in lowest terms: zeta_order^index with gcd(index, order) = 1
/// (the identity is order 1, index 0).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RootOfUnity {
    order: u32,
    index: u32,
}

impl RootOfUnity {
    pub fn one() -> Self {
        RootOfUnity { order: 1, index: 0 }
    }

    pub fn new(order: u32, index: i64) -> Self {
        assert!(order >= 1);
        let idx = index.rem_euclid(order as i64) as u32;
        if idx == 0 {
            return Self::one();
        }
        let g = crate::cyclotomic::gcd(idx as u64, order as u64) as u32;
        RootOfUnity {
            order: order / g,
            index: idx / g,
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn index(&self) -> u32 {
        self.index
    }

    pub fn mul(&self, other: &Self) -> Self {
        let common = lcm(self.order as u64, other.order as u64);
        let a = self.index as u128 * (common / self.order as u64) as u128;
        let b = other.index as u128 * (common / other.order as u64) as u128;
        Self::new(common as u32, ((a + b) % common as u128) as i64)
    }

    pub fn inv(&self) -> Self {
        Self::new(self.order, self.order as i64 - self.index as i64)
    }

    pub fn pow(&self, k: i64) -> Self {
        let idx = (self.index as i128 * k as i128).rem_euclid(self.order as i128);
        Self::new(self.order, idx as i64)
    }

    pub fn to_complex(&self) -> Complex64 {
        let theta = 2.0 * std::f64::consts::PI * self.index as f64 / self.order as f64;
        Complex64::new(theta.cos(), theta.sin())
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.order == 1 {
            write!(f, "1")
        } else {
            write!(f, "z{}^{}", self.order, self.index)
        }
    }
}

/// A complex value that remembers whether it is exact.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EvalValue {
    Exact(RootOfUnity),
    Approx(Complex64),
}

impl EvalValue {
    pub fn to_complex(&self) -> Complex64 {
        match self {
            EvalValue::Exact(r) => r.to_complex(),
            EvalValue::Approx(z) => *z,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, EvalValue::Exact(_))
    }

    pub fn mul(&self, other: &Self) -> Self {
        match (self, other) {
            (EvalValue::Exact(a), EvalValue::Exact(b)) => EvalValue::Exact(a.mul(b)),
            _ => EvalValue::Approx(self.to_complex() * other.to_complex()),
        }
    }

    pub fn inv(&self) -> Self {
        match self {
            EvalValue::Exact(r) => EvalValue::Exact(r.inv()),
            EvalValue::Approx(z) => EvalValue::Approx(1.0 / z),
        }
    }

    pub fn pow(&self, k: i64) -> Self {
        match self {
            EvalValue::Exact(r) => EvalValue::Exact(r.pow(k)),
            EvalValue::Approx(z) => EvalValue::Approx(z.powi(k as i32)),
        }
    }

    /// Equality up to relative tolerance; exact values compare exactly.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        match (self, other) {
            (EvalValue::Exact(a), EvalValue::Exact(b)) => a == b,
            _ => {
                let (x, y) = (self.to_complex(), other.to_complex());
                (x - y).norm() <= tol * (1.0 + x.norm().max(y.norm()))
            }
        }
    }
}

impl fmt::Display for EvalValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalValue::Exact(r) => write!(f, "{r}"),
            EvalValue::Approx(z) => write!(f, "{:+.12e}{:+.12e}i", z.re, z.im),
        }
    }
}

/// Assignment of nonzero complex values to basis generators.
#[derive(Debug, Clone)]
pub struct NumericEmbedding {
    values: BTreeMap<String, EvalValue>,
    pub tolerance: f64,
}

impl NumericEmbedding {
    /// Validates at construction: no zero values, and finite-order
    /// generators get values satisfying z^d = 1 (exactly for root-of-unity
    /// values, within `tolerance` otherwise).
    pub fn new(
        basis: &GeneratorBasis,
        values: BTreeMap<String, EvalValue>,
        tolerance: f64,
    ) -> Result<Self> {
        for (name, v) in &values {
            let gen = basis
                .generators()
                .iter()
                .find(|g| g.name == *name)
                .ok_or_else(|| Error::UnknownGenerator(name.clone()))?;
            let z = v.to_complex();
            if z.norm() == 0.0 {
                return Err(Error::ZeroValue(name.clone()));
            }
            if let Some(d) = gen.order {
                match v {
                    EvalValue::Exact(r) => {
                        if d % r.order() != 0 {
                            return Err(Error::OrderViolation {
                                gen: name.clone(),
                                order: d,
                                residual: (r.pow(d as i64).to_complex()
                                    - Complex64::new(1.0, 0.0))
                                .norm(),
                            });
                        }
                    }
                    EvalValue::Approx(z) => {
                        let residual = (z.powi(d as i32) - Complex64::new(1.0, 0.0)).norm();
                        if residual > tolerance {
                            return Err(Error::OrderViolation {
                                gen: name.clone(),
                                order: d,
                                residual,
                            });
                        }
                    }
                }
            }
        }
        Ok(NumericEmbedding { values, tolerance })
    }

    /// Random full assignment: finite-order generators get uniform exact
    /// roots zeta_d^k; free generators get values with modulus in [1/2, 2]
    /// and uniform angle.
    pub fn random<R: Rng + ?Sized>(basis: &GeneratorBasis, rng: &mut R) -> Self {
        let mut values = BTreeMap::new();
        for g in basis.generators() {
            let v = match g.order {
                Some(d) => EvalValue::Exact(RootOfUnity::new(d, rng.random_range(0..d) as i64)),
                None => {
                    let r = rng.random_range(0.5..2.0);
                    let theta = rng.random_range(0.0..std::f64::consts::TAU);
                    EvalValue::Approx(Complex64::from_polar(r, theta))
                }
            };
            values.insert(g.name.clone(), v);
        }
        NumericEmbedding {
            values,
            tolerance: crate::DEFAULT_TOLERANCE,
        }
    }

    pub fn get(&self, name: &str) -> Option<&EvalValue> {
        self.values.get(name)
    }

    /// True when every assigned value is an exact root of unity.
    pub fn is_exact(&self) -> bool {
        self.values.values().all(|v| v.is_exact())
    }
}
