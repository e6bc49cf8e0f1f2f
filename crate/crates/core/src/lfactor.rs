//! Local Euler factors and truncated Dirichlet series for evaluated
//! parameters.
//!
//! A [`LocalParameter`] evaluated under a [`NumericEmbedding`] yields the
//! inverse local factor `Q(T) = prod_i (1 - a_i T)` with `T = p^{-s}`.
//! When every evaluated value is an exact root of unity the polynomial is
//! carried with exact cyclotomic coefficients; otherwise coefficients are
//! complex and comparisons use a relative tolerance.
//!
//! [`PartialLSeries`] collects factors over a finite set of primes,
//! records explicitly omitted primes, and expands the truncated Dirichlet
//! series `sum a_n n^{-s}` supported on integers built from the included
//! primes.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_complex::Complex64;
use num_traits::Zero;

use crate::charalg::{EvalValue, NumericEmbedding};
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::isobaric::LocalParameter;

/// Largest truncation length `dirichlet_coefficients` accepts.
pub const MAX_TRUNCATION: u64 = 1_000_000;

/// Coefficients of a denominator polynomial, exact when possible.
#[derive(Debug, Clone)]
enum Coeffs {
    Exact(Vec<Cyclotomic>),
    Approx(Vec<Complex64>),
}

/// The polynomial `Q(T) = 1 + c_1 T + ... + c_d T^d` whose reciprocal is
/// the local factor.
#[derive(Debug, Clone)]
pub struct DenomPolynomial {
    coeffs: Coeffs,
}

impl DenomPolynomial {
    /// The constant polynomial 1 (empty product).
    pub fn one() -> Self {
        DenomPolynomial {
            coeffs: Coeffs::Exact(vec![Cyclotomic::one(1)]),
        }
    }

    /// Build `prod_i (1 - a_i T)` from inverse roots.
    pub fn from_inverse_roots(values: &[EvalValue]) -> Self {
        let all_exact = values.iter().all(|v| v.is_exact());
        if all_exact {
            let mut coeffs = vec![Cyclotomic::one(1)];
            for v in values {
                let a = match v {
                    EvalValue::Exact(r) => {
                        Cyclotomic::root(r.order(), r.index() as i64)
                    }
                    EvalValue::Approx(_) => unreachable!(),
                };
                // multiply by (1 - a T)
                let mut next = vec![Cyclotomic::zero(1); coeffs.len() + 1];
                for (k, c) in coeffs.iter().enumerate() {
                    next[k] = next[k].add(c);
                    next[k + 1] = next[k + 1].sub(&c.mul(&a));
                }
                coeffs = next;
            }
            DenomPolynomial {
                coeffs: Coeffs::Exact(coeffs),
            }
        } else {
            let mut coeffs = vec![Complex64::new(1.0, 0.0)];
            for v in values {
                let a = v.to_complex();
                let mut next = vec![Complex64::zero(); coeffs.len() + 1];
                for (k, c) in coeffs.iter().enumerate() {
                    next[k] += c;
                    next[k + 1] -= c * a;
                }
                coeffs = next;
            }
            DenomPolynomial {
                coeffs: Coeffs::Approx(coeffs),
            }
        }
    }

    pub fn degree(&self) -> usize {
        match &self.coeffs {
            Coeffs::Exact(c) => c.len() - 1,
            Coeffs::Approx(c) => c.len() - 1,
        }
    }

    /// True when coefficients are exact cyclotomic numbers.
    pub fn is_exact(&self) -> bool {
        matches!(self.coeffs, Coeffs::Exact(_))
    }

    pub fn coefficients_complex(&self) -> Vec<Complex64> {
        match &self.coeffs {
            Coeffs::Exact(c) => c.iter().map(|x| x.to_complex()).collect(),
            Coeffs::Approx(c) => c.clone(),
        }
    }

    /// Product of denominators (local factor of an isobaric sum).
    pub fn mul(&self, other: &Self) -> Self {
        match (&self.coeffs, &other.coeffs) {
            (Coeffs::Exact(a), Coeffs::Exact(b)) => {
                let mut out = vec![Cyclotomic::zero(1); a.len() + b.len() - 1];
                for (i, x) in a.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (j, y) in b.iter().enumerate() {
                        out[i + j] = out[i + j].add(&x.mul(y));
                    }
                }
                DenomPolynomial {
                    coeffs: Coeffs::Exact(out),
                }
            }
            _ => {
                let a = self.coefficients_complex();
                let b = other.coefficients_complex();
                let mut out = vec![Complex64::zero(); a.len() + b.len() - 1];
                for (i, x) in a.iter().enumerate() {
                    for (j, y) in b.iter().enumerate() {
                        out[i + j] += x * y;
                    }
                }
                DenomPolynomial {
                    coeffs: Coeffs::Approx(out),
                }
            }
        }
    }

    /// Coefficient-wise comparison: exact against exact is exact equality,
    /// anything else uses relative tolerance `tol`.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        if self.degree() != other.degree() {
            return false;
        }
        match (&self.coeffs, &other.coeffs) {
            (Coeffs::Exact(a), Coeffs::Exact(b)) => {
                a.iter().zip(b).all(|(x, y)| x == y)
            }
            _ => {
                let a = self.coefficients_complex();
                let b = other.coefficients_complex();
                a.iter().zip(&b).all(|(x, y)| {
                    (x - y).norm() <= tol * (1.0 + x.norm().max(y.norm()))
                })
            }
        }
    }

    /// First `nterms` power-series coefficients of `1/Q(T)`.
    pub fn series_inverse(&self, nterms: usize) -> Vec<Complex64> {
        let q = self.coefficients_complex();
        let d = q.len() - 1;
        let mut b = vec![Complex64::zero(); nterms];
        if nterms == 0 {
            return b;
        }
        b[0] = Complex64::new(1.0, 0.0);
        for n in 1..nterms {
            let mut acc = Complex64::zero();
            for k in 1..=d.min(n) {
                acc += q[k] * b[n - k];
            }
            b[n] = -acc;
        }
        b
    }

    /// Evaluate `Q(t)` at a complex point.
    pub fn eval(&self, t: Complex64) -> Complex64 {
        self.coefficients_complex()
            .iter()
            .rev()
            .fold(Complex64::zero(), |acc, c| acc * t + c)
    }
}

impl fmt::Display for DenomPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.coeffs {
            Coeffs::Exact(c) => {
                let mut first = true;
                for (k, x) in c.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    if !first {
                        write!(f, " + ")?;
                    }
                    first = false;
                    if k == 0 {
                        write!(f, "{x}")?;
                    } else {
                        write!(f, "({x})*T^{k}")?;
                    }
                }
                if first {
                    write!(f, "0")?;
                }
                Ok(())
            }
            Coeffs::Approx(c) => {
                for (k, x) in c.iter().enumerate() {
                    if k > 0 {
                        write!(f, " + ")?;
                    }
                    write!(f, "({:.6}{:+.6}i)*T^{k}", x.re, x.im)?;
                }
                Ok(())
            }
        }
    }
}

/// Local factor at a single prime: `L_p(s) = 1 / Q(p^{-s})`.
#[derive(Debug, Clone)]
pub struct EulerFactor {
    pub p: u64,
    pub denom: DenomPolynomial,
}

impl EulerFactor {
    /// Evaluate a parameter under an embedding at prime `p`.
    pub fn from_parameter(
        param: &LocalParameter,
        emb: &NumericEmbedding,
        p: u64,
    ) -> Result<Self> {
        let values = param.eval_values(emb)?;
        Ok(EulerFactor {
            p,
            denom: DenomPolynomial::from_inverse_roots(&values),
        })
    }

    pub fn degree(&self) -> usize {
        self.denom.degree()
    }
}

impl fmt::Display for EulerFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L_{}(s)^-1 = {}", self.p, self.denom)
    }
}

/// A Dirichlet series given by Euler factors at finitely many primes,
/// with an explicit record of omitted (e.g. ramified) primes.
#[derive(Debug, Clone, Default)]
pub struct PartialLSeries {
    factors: BTreeMap<u64, EulerFactor>,
    omitted: BTreeSet<u64>,
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl PartialLSeries {
    pub fn new() -> Self {
        Self::default()
    }

    /// Register the local factor at its prime. Rejects non-primes,
    /// duplicates, and primes already declared omitted.
    pub fn insert(&mut self, factor: EulerFactor) -> Result<()> {
        if !is_prime(factor.p) {
            return Err(Error::Conductor(format!("{} is not prime", factor.p)));
        }
        if self.omitted.contains(&factor.p) {
            return Err(Error::Conductor(format!(
                "prime {} was declared omitted",
                factor.p
            )));
        }
        if self.factors.insert(factor.p, factor.clone()).is_some() {
            return Err(Error::Conductor(format!(
                "duplicate factor at prime {}",
                factor.p
            )));
        }
        Ok(())
    }

    /// Declare a prime omitted from the product.
    pub fn omit(&mut self, p: u64) -> Result<()> {
        if !is_prime(p) {
            return Err(Error::Conductor(format!("{p} is not prime")));
        }
        if self.factors.contains_key(&p) {
            return Err(Error::Conductor(format!(
                "prime {p} already has a factor"
            )));
        }
        self.omitted.insert(p);
        Ok(())
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.keys().copied()
    }

    pub fn omitted(&self) -> impl Iterator<Item = u64> + '_ {
        self.omitted.iter().copied()
    }

    pub fn factor(&self, p: u64) -> Option<&EulerFactor> {
        self.factors.get(&p)
    }

    /// Multiply two partial series: denominators multiply prime-by-prime
    /// (a missing factor acts as 1) and omitted sets merge. A prime
    /// omitted on one side but carrying a factor on the other is an
    /// inconsistency.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        for p in &self.omitted {
            if other.factors.contains_key(p) {
                return Err(Error::Conductor(format!(
                    "prime {p} omitted on one side but present on the other"
                )));
            }
        }
        for p in &other.omitted {
            if self.factors.contains_key(p) {
                return Err(Error::Conductor(format!(
                    "prime {p} omitted on one side but present on the other"
                )));
            }
        }
        let mut factors = self.factors.clone();
        for (p, f) in &other.factors {
            factors
                .entry(*p)
                .and_modify(|g| g.denom = g.denom.mul(&f.denom))
                .or_insert_with(|| f.clone());
        }
        Ok(PartialLSeries {
            factors,
            omitted: self.omitted.union(&other.omitted).copied().collect(),
        })
    }

    /// Compare factor-by-factor over the union of primes; both sides must
    /// include the same primes and agree on every denominator.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        let ours: BTreeSet<u64> = self.factors.keys().copied().collect();
        let theirs: BTreeSet<u64> = other.factors.keys().copied().collect();
        if ours != theirs {
            return false;
        }
        self.factors
            .iter()
            .all(|(p, f)| f.denom.approx_eq(&other.factors[p].denom, tol))
    }

    /// Truncated Dirichlet coefficients `a_1 ... a_nmax`, supported on
    /// integers whose prime factors all carry a registered Euler factor.
    /// Index 0 of the returned vector is unused and set to zero.
    pub fn dirichlet_coefficients(&self, nmax: u64) -> Result<Vec<Complex64>> {
        if nmax == 0 || nmax > MAX_TRUNCATION {
            return Err(Error::TruncationOverflow {
                bound: nmax,
                max: MAX_TRUNCATION,
            });
        }
        let n = nmax as usize;
        let mut a = vec![Complex64::zero(); n + 1];
        a[1] = Complex64::new(1.0, 0.0);
        for (&p, factor) in &self.factors {
            if p > nmax {
                continue;
            }
            // number of local terms needed: largest k with p^k <= nmax
            let mut k_max = 0;
            let mut pk = 1u64;
            while pk <= nmax / p {
                pk *= p;
                k_max += 1;
            }
            let local = factor.denom.series_inverse(k_max + 1);
            let old = a.clone();
            for c in a.iter_mut() {
                *c = Complex64::zero();
            }
            for (m, &am) in old.iter().enumerate().skip(1) {
                if am == Complex64::zero() {
                    continue;
                }
                let mut mp = m as u64;
                for bk in local.iter() {
                    if mp > nmax {
                        break;
                    }
                    a[mp as usize] += am * bk;
                    mp = match mp.checked_mul(p) {
                        Some(v) => v,
                        None => break,
                    };
                }
            }
        }
        Ok(a)
    }
}

impl fmt::Display for PartialLSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for factor in self.factors.values() {
            writeln!(f, "{factor}")?;
        }
        if !self.omitted.is_empty() {
            let list: Vec<String> = self.omitted.iter().map(|p| p.to_string()).collect();
            writeln!(f, "omitted primes: {}", list.join(", "))?;
        }
        Ok(())
    }
}

/// Build the partial series for one parameter from per-prime embeddings.
pub fn series_from_embeddings(
    param: &LocalParameter,
    embeddings: &[(u64, NumericEmbedding)],
) -> Result<PartialLSeries> {
    let mut series = PartialLSeries::new();
    for (p, emb) in embeddings {
        series.insert(EulerFactor::from_parameter(param, emb, *p)?)?;
    }
    Ok(series)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charalg::GeneratorBasis;
    use crate::isobaric::LocalParameter;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn basis() -> std::sync::Arc<GeneratorBasis> {
        GeneratorBasis::parse("basis a:6, b:4, c;").unwrap()
    }

    fn params() -> (LocalParameter, LocalParameter) {
        let b = basis();
        let p2 = LocalParameter::parse(&b, "[a, b^3]").unwrap();
        let p3 = LocalParameter::parse(&b, "[1, a^2*b, c]").unwrap();
        (p2, p3)
    }

    #[test]
    fn exact_factor_of_riemann_type() {
        // Trivial character: Q(T) = 1 - T, series 1,1,1,...
        let b = basis();
        let one = LocalParameter::parse(&b, "[1]").unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let emb = NumericEmbedding::random(&b, &mut rng);
        let f = EulerFactor::from_parameter(&one, &emb, 2).unwrap();
        assert_eq!(f.degree(), 1);
        let inv = f.denom.series_inverse(6);
        for c in inv {
            assert!((c - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        }
        assert_eq!(f.denom.to_string(), "1 + (-1)*T^1");
    }

    #[test]
    fn degree_matches_parameter_and_products_add() {
        let (p2, p3) = params();
        let b = p2.basis().clone();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let emb = NumericEmbedding::random(&b, &mut rng);
        let f2 = EulerFactor::from_parameter(&p2, &emb, 5).unwrap();
        let f3 = EulerFactor::from_parameter(&p3, &emb, 5).unwrap();
        assert_eq!(f2.degree(), 2);
        assert_eq!(f3.degree(), 3);
        let prod = EulerFactor::from_parameter(&p2.boxtimes(&p3).unwrap(), &emb, 5).unwrap();
        assert_eq!(prod.degree(), 6);
        // isobaric sum <-> product of denominators
        let sum = EulerFactor::from_parameter(&p2.boxplus(&p3).unwrap(), &emb, 5).unwrap();
        assert!(sum.denom.approx_eq(&f2.denom.mul(&f3.denom), 1e-9));
    }

    #[test]
    fn exactness_follows_embedding() {
        let b = GeneratorBasis::parse("basis x:8, y:3;").unwrap();
        let p = LocalParameter::parse(&b, "[x, y^2, x*y]").unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let emb = NumericEmbedding::random(&b, &mut rng);
        assert!(emb.is_exact());
        let f = EulerFactor::from_parameter(&p, &emb, 7).unwrap();
        assert!(f.denom.is_exact());
        // A free generator forces the approximate path.
        let b2 = GeneratorBasis::parse("basis x:8, y;").unwrap();
        let p2 = LocalParameter::parse(&b2, "[x, y]").unwrap();
        let emb2 = NumericEmbedding::random(&b2, &mut rng);
        assert!(!emb2.is_exact());
        let f2 = EulerFactor::from_parameter(&p2, &emb2, 7).unwrap();
        assert!(!f2.denom.is_exact());
    }

    #[test]
    fn dirichlet_expansion_multiplicativity() {
        // chi trivial on a degree-1 parameter at primes 2, 3: zeta-like
        // partial series has a_n = 1 exactly on 3-smooth n.
        let b = basis();
        let one = LocalParameter::parse(&b, "[1]").unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let e2 = NumericEmbedding::random(&b, &mut rng);
        let e3 = NumericEmbedding::random(&b, &mut rng);
        let series = series_from_embeddings(&one, &[(2, e2), (3, e3)]).unwrap();
        let a = series.dirichlet_coefficients(24).unwrap();
        for n in 1..=24usize {
            let mut m = n;
            while m % 2 == 0 {
                m /= 2;
            }
            while m % 3 == 0 {
                m /= 3;
            }
            let expected = if m == 1 { 1.0 } else { 0.0 };
            assert!(
                (a[n] - Complex64::new(expected, 0.0)).norm() < 1e-12,
                "a_{n} = {:?}",
                a[n]
            );
        }
    }

    #[test]
    fn series_product_is_coefficient_convolution() {
        let (p2, p3) = params();
        let b = p2.basis().clone();
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let embs: Vec<(u64, NumericEmbedding)> = [2u64, 3, 5, 7]
            .iter()
            .map(|&p| (p, NumericEmbedding::random(&b, &mut rng)))
            .collect();
        let s2 = series_from_embeddings(&p2, &embs).unwrap();
        let s3 = series_from_embeddings(&p3, &embs).unwrap();
        let prod = s2.mul(&s3).unwrap();
        let a2 = s2.dirichlet_coefficients(200).unwrap();
        let a3 = s3.dirichlet_coefficients(200).unwrap();
        let ap = prod.dirichlet_coefficients(200).unwrap();
        // Dirichlet convolution check.
        for n in 1..=200usize {
            let mut acc = Complex64::zero();
            for d in 1..=n {
                if n % d == 0 {
                    acc += a2[d] * a3[n / d];
                }
            }
            assert!(
                (acc - ap[n]).norm() < 1e-9 * (1.0 + acc.norm()),
                "n = {n}: {acc} vs {}",
                ap[n]
            );
        }
    }

    #[test]
    fn omitted_primes_and_errors() {
        let b = basis();
        let one = LocalParameter::parse(&b, "[1]").unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let emb = NumericEmbedding::random(&b, &mut rng);
        let mut series = PartialLSeries::new();
        series.omit(5).unwrap();
        series
            .insert(EulerFactor::from_parameter(&one, &emb, 2).unwrap())
            .unwrap();
        // duplicate prime
        assert!(series
            .insert(EulerFactor::from_parameter(&one, &emb, 2).unwrap())
            .is_err());
        // omitted prime rejected
        assert!(series
            .insert(EulerFactor::from_parameter(&one, &emb, 5).unwrap())
            .is_err());
        // non-prime rejected
        assert!(series
            .insert(EulerFactor::from_parameter(&one, &emb, 6).unwrap())
            .is_err());
        assert!(series.omit(2).is_err());
        // truncation cap
        assert!(matches!(
            series.dirichlet_coefficients(MAX_TRUNCATION + 1),
            Err(Error::TruncationOverflow { .. })
        ));
        assert!(matches!(
            series.dirichlet_coefficients(0),
            Err(Error::TruncationOverflow { .. })
        ));
        assert_eq!(series.omitted().collect::<Vec<_>>(), vec![5]);
    }

    #[test]
    fn identity_holds_at_series_level() {
        // The degree-22 identity, lifted to partial L-series over several
        // primes with independent embeddings per prime.
        let b = GeneratorBasis::parse("basis a1:12, a2:12, b1:12, b2:12, b3:12;").unwrap();
        let a2 = LocalParameter::parse(&b, "[a1, a2]").unwrap();
        let a3 = LocalParameter::parse(&b, "[b1, b2, b3]").unwrap();
        let w2 = a2.central_char();
        let w3 = a3.central_char();

        let prod = a2.boxtimes(&a3).unwrap();
        let lhs1 = prod.ext_k(3).twist(&w3.inv()).unwrap();
        let lhs2 = a2.twist(&w2).unwrap();
        let rhs1 = a2.sym_k(3);
        let rhs2 = prod
            .boxtimes(&a3.dual())
            .unwrap()
            .twist(&w2)
            .unwrap();

        let mut rng = ChaCha8Rng::seed_from_u64(33);
        let embs: Vec<(u64, NumericEmbedding)> = [2u64, 3, 5, 7, 11]
            .iter()
            .map(|&p| (p, NumericEmbedding::random(&b, &mut rng)))
            .collect();

        let lhs = series_from_embeddings(&lhs1, &embs)
            .unwrap()
            .mul(&series_from_embeddings(&lhs2, &embs).unwrap())
            .unwrap();
        let rhs = series_from_embeddings(&rhs1, &embs)
            .unwrap()
            .mul(&series_from_embeddings(&rhs2, &embs).unwrap())
            .unwrap();
        assert!(lhs.approx_eq(&rhs, 1e-9));
        // exact embeddings -> exact factors, so the polynomial equality is
        // literal
        for p in lhs.primes() {
            assert!(lhs.factor(p).unwrap().denom.is_exact());
        }
        let ca = lhs.dirichlet_coefficients(500).unwrap();
        let cb = rhs.dirichlet_coefficients(500).unwrap();
        for n in 1..=500usize {
            assert!((ca[n] - cb[n]).norm() < 1e-9 * (1.0 + ca[n].norm()));
        }
    }
}
