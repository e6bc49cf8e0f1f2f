//! Unramified local parameters as multisets of characters, with the
//! isobaric calculus: direct sum, functorial product, duality, twisting,
//! symmetric and exterior powers, the adjoint, and the twisted fourth
//! symmetric power.
//!
//! Everything here is exact multiset algebra over [`Character`]s; the
//! verifiers return structured reports rather than booleans so mismatches
//! can be printed entry by entry.
//!
//! Text form: `[alpha1, alpha2]` — a bracketed, comma-separated list of
//! character literals over a shared basis.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use itertools::Itertools;
use num_complex::Complex64;

use crate::charalg::{Character, EvalValue, GeneratorBasis, NumericEmbedding};
use crate::error::{Error, Result};

/// A degree-n local parameter: an unordered multiset of n characters over
/// one basis, kept sorted for canonical form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalParameter {
    basis: Arc<GeneratorBasis>,
    entries: Vec<Character>,
}

impl LocalParameter {
    pub fn new(entries: Vec<Character>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyParameter);
        }
        let basis = entries[0].basis().clone();
        for e in &entries[1..] {
            if e.basis().as_ref() != basis.as_ref() {
                return Err(Error::BasisMismatch(
                    "parameter entries must share one basis".into(),
                ));
            }
        }
        let mut entries = entries;
        entries.sort();
        Ok(LocalParameter { basis, entries })
    }

    /// Degree-0 parameter; only produced by exterior powers past the
    /// degree, never by parsing.
    pub fn empty(basis: &Arc<GeneratorBasis>) -> Self {
        LocalParameter {
            basis: basis.clone(),
            entries: Vec::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn basis(&self) -> &Arc<GeneratorBasis> {
        &self.basis
    }

    pub fn entries(&self) -> &[Character] {
        &self.entries
    }

    /// Entry multiplicities, canonically ordered.
    pub fn multiplicities(&self) -> BTreeMap<Character, usize> {
        let mut m = BTreeMap::new();
        for e in &self.entries {
            *m.entry(e.clone()).or_insert(0) += 1;
        }
        m
    }

    fn check_basis(&self, other: &LocalParameter) -> Result<()> {
        if Arc::ptr_eq(&self.basis, &other.basis) || self.basis == other.basis {
            Ok(())
        } else {
            Err(Error::BasisMismatch(
                "parameters live over different bases".into(),
            ))
        }
    }

    /// Isobaric sum: multiset union.
    pub fn boxplus(&self, other: &LocalParameter) -> Result<LocalParameter> {
        self.check_basis(other)?;
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        entries.sort();
        Ok(LocalParameter {
            basis: self.basis.clone(),
            entries,
        })
    }

    /// Functorial product: all pairwise character products.
    pub fn boxtimes(&self, other: &LocalParameter) -> Result<LocalParameter> {
        self.check_basis(other)?;
        let mut entries = Vec::with_capacity(self.degree() * other.degree());
        for a in &self.entries {
            for b in &other.entries {
                entries.push(a.mul(b)?);
            }
        }
        entries.sort();
        Ok(LocalParameter {
            basis: self.basis.clone(),
            entries,
        })
    }

    /// Contragredient: entrywise inverse.
    pub fn dual(&self) -> LocalParameter {
        let mut entries: Vec<_> = self.entries.iter().map(Character::inv).collect();
        entries.sort();
        LocalParameter {
            basis: self.basis.clone(),
            entries,
        }
    }

    pub fn twist(&self, chi: &Character) -> Result<LocalParameter> {
        let mut entries = self
            .entries
            .iter()
            .map(|e| e.mul(chi))
            .collect::<Result<Vec<_>>>()?;
        entries.sort();
        Ok(LocalParameter {
            basis: self.basis.clone(),
            entries,
        })
    }

    /// Central character: product of all entries.
    pub fn central_char(&self) -> Character {
        self.entries
            .iter()
            .fold(Character::trivial(&self.basis), |acc, e| {
                acc.mul(e).expect("shared basis")
            })
    }

    /// k-th symmetric power: products over k-multisets of slots
    /// (degree C(n+k-1, k)).
    pub fn sym_k(&self, k: usize) -> LocalParameter {
        let n = self.degree();
        let mut entries = Vec::new();
        for combo in (0..n).combinations_with_replacement(k) {
            let c = combo
                .iter()
                .fold(Character::trivial(&self.basis), |acc, &i| {
                    acc.mul(&self.entries[i]).expect("shared basis")
                });
            entries.push(c);
        }
        entries.sort();
        LocalParameter {
            basis: self.basis.clone(),
            entries,
        }
    }

    /// k-th exterior power: products over k-subsets of slots
    /// (degree C(n, k); empty when k > n).
    pub fn ext_k(&self, k: usize) -> LocalParameter {
        let n = self.degree();
        let mut entries = Vec::new();
        for combo in (0..n).combinations(k) {
            let c = combo
                .iter()
                .fold(Character::trivial(&self.basis), |acc, &i| {
                    acc.mul(&self.entries[i]).expect("shared basis")
                });
            entries.push(c);
        }
        entries.sort();
        LocalParameter {
            basis: self.basis.clone(),
            entries,
        }
    }

    /// Adjoint of a degree-2 parameter: sym^2 twisted by the inverse of
    /// the central character (degree 3).
    pub fn adjoint(&self) -> Result<LocalParameter> {
        if self.degree() != 2 {
            return Err(Error::DegreeMismatch {
                expected: 2,
                got: self.degree(),
            });
        }
        self.sym_k(2).twist(&self.central_char().inv())
    }

    /// Twisted fourth symmetric power of a degree-2 parameter:
    /// sym^4 twisted by the inverse square of the central character
    /// (degree 5).
    pub fn a4(&self) -> Result<LocalParameter> {
        if self.degree() != 2 {
            return Err(Error::DegreeMismatch {
                expected: 2,
                got: self.degree(),
            });
        }
        self.sym_k(4).twist(&self.central_char().inv().pow(2))
    }

    /// Evaluate every entry, preserving per-entry exactness.
    pub fn eval_values(&self, emb: &NumericEmbedding) -> Result<Vec<EvalValue>> {
        self.entries.iter().map(|e| e.eval(emb)).collect()
    }

    /// Evaluate every entry; exactness is preserved per entry.
    pub fn eval_multiset(&self, emb: &NumericEmbedding) -> Result<Vec<Complex64>> {
        let mut vals = self
            .entries
            .iter()
            .map(|e| e.eval(emb).map(|v| v.to_complex()))
            .collect::<Result<Vec<_>>>()?;
        vals.sort_by(|a, b| {
            a.re.partial_cmp(&b.re)
                .unwrap()
                .then(a.im.partial_cmp(&b.im).unwrap())
        });
        Ok(vals)
    }

    /// Multiset equality of evaluations within `tol` (greedy matching, so
    /// it tolerates sort flips between nearly-equal values).
    pub fn approx_equal_under(
        &self,
        other: &LocalParameter,
        emb: &NumericEmbedding,
        tol: f64,
    ) -> Result<bool> {
        if self.degree() != other.degree() {
            return Ok(false);
        }
        let xs = self.eval_multiset(emb)?;
        let mut ys = other.eval_multiset(emb)?;
        'outer: for x in xs {
            for i in 0..ys.len() {
                if (x - ys[i]).norm() <= tol * (1.0 + x.norm()) {
                    ys.swap_remove(i);
                    continue 'outer;
                }
            }
            return Ok(false);
        }
        Ok(true)
    }

    /// Parse `[lit, lit, ...]` over `basis`.
    pub fn parse(basis: &Arc<GeneratorBasis>, input: &str) -> Result<Self> {
        let s = input.trim();
        let bad = |detail: String| Error::Parse {
            what: "parameter literal",
            detail,
        };
        let inner = s
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| bad("expected `[...]`".into()))?;
        if inner.trim().is_empty() {
            return Err(Error::EmptyParameter);
        }
        let entries = inner
            .split(',')
            .map(|lit| Character::parse(basis, lit))
            .collect::<Result<Vec<_>>>()?;
        LocalParameter::new(entries)
    }
}

impl fmt::Display for LocalParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "]")
    }
}

/// Outcome of one identity check, with entry-level diagnostics.
#[derive(Debug, Clone, serde::Serialize)]
pub struct IdentityReport {
    pub name: String,
    pub holds: bool,
    pub lhs: String,
    pub rhs: String,
    /// Entries present on the right but missing on the left, `lit (xk)`.
    pub missing_from_lhs: Vec<String>,
    pub missing_from_rhs: Vec<String>,
    pub notes: Vec<String>,
}

impl IdentityReport {
    pub fn compare(name: &str, lhs: &LocalParameter, rhs: &LocalParameter) -> IdentityReport {
        let lm = lhs.multiplicities();
        let rm = rhs.multiplicities();
        let mut missing_from_lhs = Vec::new();
        let mut missing_from_rhs = Vec::new();
        for (c, &rc) in &rm {
            let lc = lm.get(c).copied().unwrap_or(0);
            if rc > lc {
                missing_from_lhs.push(format!("{c} (x{})", rc - lc));
            }
        }
        for (c, &lc) in &lm {
            let rc = rm.get(c).copied().unwrap_or(0);
            if lc > rc {
                missing_from_rhs.push(format!("{c} (x{})", lc - rc));
            }
        }
        let holds = missing_from_lhs.is_empty() && missing_from_rhs.is_empty();
        IdentityReport {
            name: name.to_string(),
            holds,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            missing_from_lhs,
            missing_from_rhs,
            notes: vec![format!(
                "degrees: lhs {} rhs {}",
                lhs.degree(),
                rhs.degree()
            )],
        }
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.holds {
            write!(f, "ok {}: both sides {}", self.name, self.lhs)
        } else {
            write!(
                f,
                "MISMATCH {}: lhs {} rhs {}; missing from lhs: {:?}; missing from rhs: {:?}",
                self.name, self.lhs, self.rhs, self.missing_from_lhs, self.missing_from_rhs
            )
        }
    }
}

/// sym^2(a) x a  ==  sym^3(a) + a twisted by its central character
/// (the degree-2 Clebsch-Gordan expansion).
pub fn verify_clebsch_gordan(a: &LocalParameter) -> Result<IdentityReport> {
    if a.degree() != 2 {
        return Err(Error::DegreeMismatch {
            expected: 2,
            got: a.degree(),
        });
    }
    let lhs = a.sym_k(2).boxtimes(a)?;
    let rhs = a.sym_k(3).boxplus(&a.twist(&a.central_char())?)?;
    Ok(IdentityReport::compare("clebsch-gordan", &lhs, &rhs))
}

/// a x adjoint(a)  ==  sym^3(a) twisted by the inverse central character
/// + a. The decomposition behind the adjoint-twist branch of the decision
/// tree, in its exact untwisted form.
pub fn verify_adjoint_product(a: &LocalParameter) -> Result<IdentityReport> {
    let lhs = a.boxtimes(&a.adjoint()?)?;
    let rhs = a
        .sym_k(3)
        .twist(&a.central_char().inv())?
        .boxplus(a)?;
    Ok(IdentityReport::compare("adjoint-product", &lhs, &rhs))
}

/// The degree-22 exterior-cube bridge between the 6-dimensional product
/// and sym^3 of the degree-2 input:
///
///   ext^3(a2 x a3) . w3^-1  +  a2 . w2  ==  sym^3(a2)  +  (a2 x a3 x dual(a3)) . w2
///
/// where w2, w3 are the central characters of a2, a3.
pub fn verify_ext_cube_identity(
    a2: &LocalParameter,
    a3: &LocalParameter,
) -> Result<IdentityReport> {
    let (lhs, rhs) = ext_cube_identity_sides(a2, a3)?;
    Ok(IdentityReport::compare("ext-cube-identity", &lhs, &rhs))
}

/// Both sides of the degree-22 exterior-cube identity, for callers that
/// want to re-check them under numeric embeddings.
pub fn ext_cube_identity_sides(
    a2: &LocalParameter,
    a3: &LocalParameter,
) -> Result<(LocalParameter, LocalParameter)> {
    if a2.degree() != 2 {
        return Err(Error::DegreeMismatch {
            expected: 2,
            got: a2.degree(),
        });
    }
    if a3.degree() != 3 {
        return Err(Error::DegreeMismatch {
            expected: 3,
            got: a3.degree(),
        });
    }
    let w2 = a2.central_char();
    let w3 = a3.central_char();
    let lhs = a2
        .boxtimes(a3)?
        .ext_k(3)
        .twist(&w3.inv())?
        .boxplus(&a2.twist(&w2)?)?;
    let rhs = a2
        .sym_k(3)
        .boxplus(&a2.boxtimes(a3)?.boxtimes(&a3.dual())?.twist(&w2)?)?;
    Ok((lhs, rhs))
}

/// Exterior cube of a sum of two degree-3 parameters, twisted:
///
///   ext^3(s1 + s2) . chi  ==  eta1.chi  +  eta2.chi
///                              +  (s1 x dual(s2)) . eta2.chi
///                              +  (s2 x dual(s1)) . eta1.chi
///
/// with eta_i the central characters of the summands (degree 20 each side).
pub fn verify_ext_cube_of_sum(
    s1: &LocalParameter,
    s2: &LocalParameter,
    chi: &Character,
) -> Result<IdentityReport> {
    for s in [s1, s2] {
        if s.degree() != 3 {
            return Err(Error::DegreeMismatch {
                expected: 3,
                got: s.degree(),
            });
        }
    }
    let eta1 = s1.central_char();
    let eta2 = s2.central_char();
    let lhs = s1.boxplus(s2)?.ext_k(3).twist(chi)?;
    let single = |c: &Character| -> Result<LocalParameter> {
        LocalParameter::new(vec![c.clone()])
    };
    let rhs = single(&eta1.mul(chi)?)?
        .boxplus(&single(&eta2.mul(chi)?)?)?
        .boxplus(&s1.boxtimes(&s2.dual())?.twist(&eta2.mul(chi)?)?)?
        .boxplus(&s2.boxtimes(&s1.dual())?.twist(&eta1.mul(chi)?)?)?;
    Ok(IdentityReport::compare("ext-cube-of-sum", &lhs, &rhs))
}

/// Given the hypothesis  a2 x a3 == (a3 . chi1) + (a3 . chi2),  checks the
/// forced splitting  sym^3(a2) == a2 . w2  +  chi1^3  +  chi2^3.
/// A violated hypothesis is an error, not a failed report.
pub fn verify_twist_pair_split(
    a2: &LocalParameter,
    a3: &LocalParameter,
    chi1: &Character,
    chi2: &Character,
) -> Result<IdentityReport> {
    if a2.degree() != 2 {
        return Err(Error::DegreeMismatch {
            expected: 2,
            got: a2.degree(),
        });
    }
    if a3.degree() != 3 {
        return Err(Error::DegreeMismatch {
            expected: 3,
            got: a3.degree(),
        });
    }
    let hyp_lhs = a2.boxtimes(a3)?;
    let hyp_rhs = a3.twist(chi1)?.boxplus(&a3.twist(chi2)?)?;
    if hyp_lhs != hyp_rhs {
        return Err(Error::HypothesisFailed(format!(
            "a2 x a3 = {hyp_lhs} but the twisted pair is {hyp_rhs}"
        )));
    }
    let lhs = a2.sym_k(3);
    let rhs = a2
        .twist(&a2.central_char())?
        .boxplus(&LocalParameter::new(vec![chi1.pow(3), chi2.pow(3)])?)?;
    let mut report = IdentityReport::compare("twist-pair-split", &lhs, &rhs);
    report
        .notes
        .push(format!("hypothesis held: a2 x a3 = {hyp_lhs}"));
    Ok(report)
}

/// Step-by-step report for the cubic-self-twist chain.
#[derive(Debug, Clone, serde::Serialize)]
pub struct ChainReport {
    pub name: String,
    pub holds: bool,
    pub steps: Vec<IdentityReport>,
}

impl fmt::Display for ChainReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} {}",
            if self.holds { "ok" } else { "MISMATCH" },
            self.name
        )?;
        for s in &self.steps {
            writeln!(f, "  {s}")?;
        }
        Ok(())
    }
}

/// The chain forced when the degree-3 side has a cubic self-twist: with
/// a3 = [beta, beta.chi, beta.chi^2] (chi of exact order 3) and
/// a2 = [alpha1, alpha2], the entrywise cubes of a2 x a3 collapse onto
/// {alpha_i^3 . w3} with multiplicity 3, and sym^3(a2) splits off those
/// two cube characters (untwisted by w3) plus a2 . w2.
pub fn verify_cubic_selftwist_chain(
    a2: &LocalParameter,
    a3: &LocalParameter,
    chi: &Character,
) -> Result<ChainReport> {
    if a2.degree() != 2 {
        return Err(Error::DegreeMismatch {
            expected: 2,
            got: a2.degree(),
        });
    }
    if a3.degree() != 3 {
        return Err(Error::DegreeMismatch {
            expected: 3,
            got: a3.degree(),
        });
    }
    if chi.order() != Some(3) {
        return Err(Error::ShapeViolation(format!(
            "twisting character must have exact order 3, `{chi}` has order {:?}",
            chi.order()
        )));
    }
    // Locate beta with a3 = {beta, beta.chi, beta.chi^2}.
    let mut beta = None;
    for cand in a3.entries() {
        let shaped = LocalParameter::new(vec![
            cand.clone(),
            cand.mul(chi)?,
            cand.mul(&chi.pow(2))?,
        ])?;
        if &shaped == a3 {
            beta = Some(cand.clone());
            break;
        }
    }
    let Some(_beta) = beta else {
        return Err(Error::ShapeViolation(format!(
            "a3 = {a3} is not of the form [beta, beta.chi, beta.chi^2] for chi = {chi}"
        )));
    };

    let w2 = a2.central_char();
    let w3 = a3.central_char();
    let alphas = a2.entries();

    // Step 1: cube multiset of the 6-dimensional product.
    let product = a2.boxtimes(a3)?;
    let cubes = LocalParameter::new(product.entries().iter().map(|c| c.pow(3)).collect())?;
    let mut expected = Vec::new();
    for a in alphas {
        let eta = a.pow(3).mul(&w3)?;
        for _ in 0..3 {
            expected.push(eta.clone());
        }
    }
    let expected = LocalParameter::new(expected)?;
    let step1 = IdentityReport::compare("cube-multiset", &cubes, &expected);

    // Step 2: sym^3(a2) == eta1.w3^-1 + eta2.w3^-1 + a2 . w2.
    let eta = [
        alphas[0].pow(3).mul(&w3)?,
        alphas[1].pow(3).mul(&w3)?,
    ];
    let lhs = a2.sym_k(3);
    let rhs = LocalParameter::new(vec![
        eta[0].mul(&w3.inv())?,
        eta[1].mul(&w3.inv())?,
    ])?
    .boxplus(&a2.twist(&w2)?)?;
    let mut step2 = IdentityReport::compare("sym-cube-split", &lhs, &rhs);
    step2
        .notes
        .push(format!("derived cube characters: {} and {}", eta[0], eta[1]));

    let holds = step1.holds && step2.holds;
    Ok(ChainReport {
        name: "cubic-selftwist-chain".to_string(),
        holds,
        steps: vec![step1, step2],
    })
}

/// Result of a randomized exterior-power convolution sweep.
#[derive(Debug, Clone, serde::Serialize)]
pub struct ConvolutionSweep {
    /// Random parameter pairs drawn.
    pub pairs: u64,
    /// Individual `ext^k` identities checked across all pairs.
    pub identities: u64,
    /// First mismatch found, if any.
    pub failure: Option<String>,
}

impl ConvolutionSweep {
    pub fn holds(&self) -> bool {
        self.failure.is_none()
    }
}

/// Check `ext^k(p + q) == sum_i ext^i(p) x ext^{k-i}(q)` for every k on
/// `pairs` random parameter pairs whose combined degree is at most
/// `max_total_degree` (entries drawn over a mixed free/finite-order
/// basis). Deterministic for a fixed seed.
pub fn verify_lambda_convolution(
    pairs: u64,
    max_total_degree: usize,
    seed: u64,
) -> Result<ConvolutionSweep> {
    use rand::Rng;
    use rand::SeedableRng;
    if max_total_degree < 2 {
        return Err(Error::ShapeViolation(
            "need max_total_degree >= 2 to draw two nonempty parameters".to_string(),
        ));
    }
    let basis = GeneratorBasis::parse("basis x, y, z, w:6;")?;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut identities = 0u64;
    for _ in 0..pairs {
        let deg_p = rng.random_range(1..=max_total_degree - 1);
        let deg_q = rng.random_range(1..=max_total_degree - deg_p);
        let mut draw = |deg: usize| -> Result<LocalParameter> {
            let entries = (0..deg)
                .map(|_| {
                    Character::new(
                        &basis,
                        (0..4).map(|_| rng.random_range(-3..=3i64)).collect(),
                    )
                })
                .collect::<Result<Vec<_>>>()?;
            LocalParameter::new(entries)
        };
        let p = draw(deg_p)?;
        let q = draw(deg_q)?;
        let sum = p.boxplus(&q)?;
        for k in 0..=sum.degree() {
            let mut rhs: Option<LocalParameter> = None;
            for i in 0..=k {
                let piece_l = p.ext_k(i);
                let piece_r = q.ext_k(k - i);
                if piece_l.is_empty() || piece_r.is_empty() {
                    continue;
                }
                let piece = piece_l.boxtimes(&piece_r)?;
                rhs = Some(match rhs {
                    None => piece,
                    Some(acc) => acc.boxplus(&piece)?,
                });
            }
            let lhs = sum.ext_k(k);
            identities += 1;
            let ok = match &rhs {
                Some(rhs) => &lhs == rhs,
                None => lhs.is_empty(),
            };
            if !ok {
                return Ok(ConvolutionSweep {
                    pairs,
                    identities,
                    failure: Some(format!(
                        "ext^{k} of {p} + {q}: lhs {lhs} vs rhs {}",
                        rhs.map(|r| r.to_string()).unwrap_or_else(|| "[]".to_string())
                    )),
                });
            }
        }
    }
    Ok(ConvolutionSweep {
        pairs,
        identities,
        failure: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn free2() -> (Arc<GeneratorBasis>, LocalParameter) {
        let b = GeneratorBasis::parse("basis a1, a2;").unwrap();
        let p = LocalParameter::parse(&b, "[a1, a2]").unwrap();
        (b, p)
    }

    fn free23() -> (Arc<GeneratorBasis>, LocalParameter, LocalParameter) {
        let b = GeneratorBasis::parse("basis a1, a2, b1, b2, b3;").unwrap();
        let a2 = LocalParameter::parse(&b, "[a1, a2]").unwrap();
        let a3 = LocalParameter::parse(&b, "[b1, b2, b3]").unwrap();
        (b, a2, a3)
    }

    #[test]
    fn lambda_convolution_driver() {
        let sweep = verify_lambda_convolution(50, 8, 7).unwrap();
        assert!(sweep.holds(), "{:?}", sweep.failure);
        assert_eq!(sweep.pairs, 50);
        assert!(sweep.identities > 50);
        // same seed, same trace
        let again = verify_lambda_convolution(50, 8, 7).unwrap();
        assert_eq!(again.identities, sweep.identities);
        assert!(verify_lambda_convolution(5, 1, 0).is_err());
    }

    #[test]
    fn parse_display_round_trip() {
        let b = GeneratorBasis::parse("basis chi:3, beta;").unwrap();
        let p = LocalParameter::parse(&b, "[beta, beta*chi, beta*chi^2]").unwrap();
        assert_eq!(LocalParameter::parse(&b, &p.to_string()).unwrap(), p);
        assert!(LocalParameter::parse(&b, "[]").is_err());
        assert!(LocalParameter::parse(&b, "beta").is_err());
    }

    #[test]
    fn sum_and_product_shapes() {
        let (_, a2, a3) = free23();
        assert_eq!(a2.boxplus(&a3).unwrap().degree(), 5);
        let prod = a2.boxtimes(&a3).unwrap();
        assert_eq!(prod.degree(), 6);
        // commutative
        assert_eq!(prod, a3.boxtimes(&a2).unwrap());
        // distributes over boxplus
        let d = a2.boxtimes(&a2.boxplus(&a3).unwrap()).unwrap();
        let e = a2
            .boxtimes(&a2)
            .unwrap()
            .boxplus(&a2.boxtimes(&a3).unwrap())
            .unwrap();
        assert_eq!(d, e);
    }

    #[test]
    fn adjoint_expansion() {
        let (b, p) = free2();
        // adjoint([a1,a2]) = [a1/a2, 1, a2/a1], built here independently.
        let want = LocalParameter::new(vec![
            Character::parse(&b, "a1*a2^-1").unwrap(),
            Character::trivial(&b),
            Character::parse(&b, "a1^-1*a2").unwrap(),
        ])
        .unwrap();
        assert_eq!(p.adjoint().unwrap(), want);
        // self-dual
        let ad = p.adjoint().unwrap();
        assert_eq!(ad.dual(), ad);
    }

    #[test]
    fn a4_expansion() {
        let b = GeneratorBasis::parse("basis a;").unwrap();
        let p = LocalParameter::parse(&b, "[a, a^-1]").unwrap();
        let want = LocalParameter::parse(&b, "[a^4, a^2, 1, a^-2, a^-4]").unwrap();
        assert_eq!(p.a4().unwrap(), want);
        assert_eq!(p.a4().unwrap().degree(), 5);
    }

    #[test]
    fn sym_ext_degrees() {
        let (_, _, a3) = free23();
        let binom = |n: usize, k: usize| -> usize {
            if k > n {
                return 0;
            }
            (1..=k).fold(1usize, |acc, i| acc * (n - i + 1) / i)
        };
        for k in 0..=5 {
            let n = 3usize;
            assert_eq!(a3.sym_k(k).degree(), binom(n + k - 1, k));
            assert_eq!(a3.ext_k(k).degree(), binom(n, k));
        }
        // ext past the degree is empty and flagged as such
        assert!(a3.ext_k(4).is_empty());
        assert_eq!(a3.ext_k(0).degree(), 1);
        assert!(a3.ext_k(0).entries()[0].is_trivial());
    }

    #[test]
    fn gl3_duality_via_ext() {
        let (_, _, a3) = free23();
        let eta = a3.central_char();
        // ext^2(s) = dual(s) . eta, ext^3(s) = [eta]
        assert_eq!(a3.ext_k(2), a3.dual().twist(&eta).unwrap());
        assert_eq!(
            a3.ext_k(3),
            LocalParameter::new(vec![eta.clone()]).unwrap()
        );
    }

    #[test]
    fn clebsch_gordan_free_and_degenerate() {
        let (_, p) = free2();
        assert!(verify_clebsch_gordan(&p).unwrap().holds);
        // degenerate: both entries equal
        let b = GeneratorBasis::parse("basis a;").unwrap();
        let q = LocalParameter::parse(&b, "[a, a]").unwrap();
        assert!(verify_clebsch_gordan(&q).unwrap().holds);
        let (_, _, a3) = free23();
        assert!(verify_clebsch_gordan(&a3).is_err());
    }

    #[test]
    fn adjoint_product_identity() {
        let (_, p) = free2();
        assert!(verify_adjoint_product(&p).unwrap().holds);
    }

    #[test]
    fn ext_cube_identity_degree_22() {
        let (_, a2, a3) = free23();
        let rep = verify_ext_cube_identity(&a2, &a3).unwrap();
        assert!(rep.holds, "{rep}");
        // both sides have degree 20 + 2 = 22
        let lhs_deg = a2
            .boxtimes(&a3)
            .unwrap()
            .ext_k(3)
            .degree()
            + 2;
        assert_eq!(lhs_deg, 22);
    }

    #[test]
    fn ext_cube_identity_with_selftwist_shape() {
        let b = GeneratorBasis::parse("basis a1, a2, chi:3, beta;").unwrap();
        let a2 = LocalParameter::parse(&b, "[a1, a2]").unwrap();
        let a3 = LocalParameter::parse(&b, "[beta, beta*chi, beta*chi^2]").unwrap();
        assert!(verify_ext_cube_identity(&a2, &a3).unwrap().holds);
    }

    #[test]
    fn ext_cube_of_sum_free_and_equal() {
        let b = GeneratorBasis::parse("basis s1, s2, s3, t1, t2, t3, c;").unwrap();
        let p1 = LocalParameter::parse(&b, "[s1, s2, s3]").unwrap();
        let p2 = LocalParameter::parse(&b, "[t1, t2, t3]").unwrap();
        let chi = Character::parse(&b, "c").unwrap();
        let rep = verify_ext_cube_of_sum(&p1, &p2, &chi).unwrap();
        assert!(rep.holds, "{rep}");
        // degenerate: equal summands
        let rep = verify_ext_cube_of_sum(&p1, &p1, &chi).unwrap();
        assert!(rep.holds, "{rep}");
    }

    #[test]
    fn twist_pair_split_constructed() {
        // Taking a2 = [chi1, chi2] satisfies the hypothesis identically.
        let b = GeneratorBasis::parse("basis c1, c2, b1, b2, b3;").unwrap();
        let a2 = LocalParameter::parse(&b, "[c1, c2]").unwrap();
        let a3 = LocalParameter::parse(&b, "[b1, b2, b3]").unwrap();
        let chi1 = Character::parse(&b, "c1").unwrap();
        let chi2 = Character::parse(&b, "c2").unwrap();
        let rep = verify_twist_pair_split(&a2, &a3, &chi1, &chi2).unwrap();
        assert!(rep.holds, "{rep}");
        // violated hypothesis is an error naming both sides
        let err = verify_twist_pair_split(&a2, &a3, &chi2, &chi2);
        assert!(matches!(err, Err(Error::HypothesisFailed(_))));
    }

    #[test]
    fn cubic_selftwist_chain() {
        let b = GeneratorBasis::parse("basis a1, a2, chi:3, beta;").unwrap();
        let a2 = LocalParameter::parse(&b, "[a1, a2]").unwrap();
        let a3 = LocalParameter::parse(&b, "[beta, beta*chi, beta*chi^2]").unwrap();
        let chi = Character::parse(&b, "chi").unwrap();
        let rep = verify_cubic_selftwist_chain(&a2, &a3, &chi).unwrap();
        assert!(rep.holds, "{rep}");

        // trivial chi is a shape violation
        let trivial = Character::trivial(&b);
        assert!(matches!(
            verify_cubic_selftwist_chain(&a2, &a3, &trivial),
            Err(Error::ShapeViolation(_))
        ));
        // wrong-shape a3
        let bad = LocalParameter::parse(&b, "[beta, beta, beta*chi]").unwrap();
        assert!(matches!(
            verify_cubic_selftwist_chain(&a2, &bad, &chi),
            Err(Error::ShapeViolation(_))
        ));
    }

    #[test]
    fn lambda_convolution_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let b = GeneratorBasis::parse("basis x, y, z, w:6;").unwrap();
        for _ in 0..25 {
            let mk = |rng: &mut ChaCha8Rng| {
                let deg = rng.random_range(1..=4usize);
                let entries = (0..deg)
                    .map(|_| {
                        Character::new(
                            &b,
                            (0..4).map(|_| rng.random_range(-3..=3i64)).collect(),
                        )
                        .unwrap()
                    })
                    .collect();
                LocalParameter::new(entries).unwrap()
            };
            let p = mk(&mut rng);
            let q = mk(&mut rng);
            let sum = p.boxplus(&q).unwrap();
            for k in 0..=sum.degree() {
                let mut rhs: Option<LocalParameter> = None;
                for i in 0..=k {
                    let piece_l = p.ext_k(i);
                    let piece_r = q.ext_k(k - i);
                    if piece_l.is_empty() || piece_r.is_empty() {
                        continue;
                    }
                    let piece = piece_l.boxtimes(&piece_r).unwrap();
                    rhs = Some(match rhs {
                        None => piece,
                        Some(acc) => acc.boxplus(&piece).unwrap(),
                    });
                }
                let lhs = sum.ext_k(k);
                match rhs {
                    Some(rhs) => assert_eq!(lhs, rhs, "k = {k}"),
                    None => assert!(lhs.is_empty()),
                }
            }
        }
    }

    #[test]
    fn numeric_embedding_agreement() {
        let b = GeneratorBasis::parse("basis a1, a2, chi:3, beta;").unwrap();
        let a2 = LocalParameter::parse(&b, "[a1, a2]").unwrap();
        let a3 = LocalParameter::parse(&b, "[beta, beta*chi, beta*chi^2]").unwrap();
        let w2 = a2.central_char();
        let w3 = a3.central_char();
        let lhs = a2
            .boxtimes(&a3)
            .unwrap()
            .ext_k(3)
            .twist(&w3.inv())
            .unwrap()
            .boxplus(&a2.twist(&w2).unwrap())
            .unwrap();
        let rhs = a2
            .sym_k(3)
            .boxplus(
                &a2.boxtimes(&a3)
                    .unwrap()
                    .boxtimes(&a3.dual())
                    .unwrap()
                    .twist(&w2)
                    .unwrap(),
            )
            .unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            let emb = NumericEmbedding::random(&b, &mut rng);
            assert!(lhs.approx_equal_under(&rhs, &emb, 1e-9).unwrap());
        }
    }
}
