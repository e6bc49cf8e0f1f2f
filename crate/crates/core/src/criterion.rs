//! The cuspidality decision layer for rank-2 x rank-3 functorial
//! products.
//!
//! Two modes, one logic:
//!
//! * **Symbolic**: [`Gl2Descriptor`] / [`Gl3Descriptor`] assert known
//!   structure of the two inputs (dihedral/tetrahedral/octahedral/
//!   primitive on the rank-2 side; adjoint-twist, monomial, or generic on
//!   the rank-3 side). [`decide_cuspidality`] walks the decision tree and
//!   returns a [`Decision`] with the fired rule and, when non-cuspidal,
//!   the isobaric constituents.
//! * **Finite-group model**: for irreducible characters x2 (degree 2) and
//!   x3 (degree 3) of a common finite group, [`decide_pair_on_group`]
//!   runs the same tree on exact character data, and
//!   [`tensor_verdict_bruteforce`] decomposes x2 (x) x3 outright.
//!   [`cross_validate`] checks the two agree across the whole catalog.
//!
//! Descriptor text format (one per line, `#` comments):
//!
//! ```text
//! pi2 label=f shape=dihedral n=3 cubic=E
//! pi3 label=g shape=monomial cubic=E normal=false
//! ```
//!
//! Rank-2 shapes: `dihedral` (requires `n=<projective half-order>`,
//! optional `cubic=<id>` when n=3), `tetrahedral`, `octahedral`,
//! `primitive`. Rank-3 shapes: `adjoint` (requires `of=<pi2 label>`),
//! `monomial` (requires `cubic=<id>` and `normal=<bool>`), `generic`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::One;

use crate::error::{Error, Result};
use crate::galois::{
    catalog, classify_2dim, decompose, ClassFunction, FiniteGroup, Subgroup, TwoDimClass,
};
use crate::report::RunReport;

/// Outcome for the 6-dimensional product: cuspidal, or one of the three
/// isobaric splittings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, serde::Serialize)]
pub enum Verdict {
    Cuspidal,
    /// Splits as 2 + 4.
    Type24,
    /// Splits as 2 + 2 + 2.
    Type222,
    /// Splits as 3 + 3.
    Type33,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Cuspidal => write!(f, "cuspidal"),
            Verdict::Type24 => write!(f, "2+4"),
            Verdict::Type222 => write!(f, "2+2+2"),
            Verdict::Type33 => write!(f, "3+3"),
        }
    }
}

/// Structural shape of the rank-2 input.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub enum Gl2Shape {
    /// Projective image dihedral of order 2n; `cubic` labels the
    /// associated non-Galois cubic when n = 3.
    Dihedral { n: u32, cubic: Option<String> },
    Tetrahedral,
    Octahedral,
    Primitive,
}

/// Symbolic description of a cuspidal rank-2 input.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct Gl2Descriptor {
    pub label: String,
    pub shape: Gl2Shape,
}

/// Structural shape of the rank-3 input.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub enum Gl3Shape {
    /// A character twist of the adjoint square of the named rank-2 form.
    AdjointTwist { of: String },
    /// Induced from a cubic field labeled `cubic`; `normal` says whether
    /// that cubic is Galois.
    Monomial { cubic: String, normal: bool },
    /// No special structure asserted.
    Generic,
}

/// Symbolic description of a cuspidal rank-3 input.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct Gl3Descriptor {
    pub label: String,
    pub shape: Gl3Shape,
}

fn parse_kv(line: &str) -> Result<BTreeMap<String, String>> {
    let mut map = BTreeMap::new();
    for tok in line.split_whitespace() {
        let (k, v) = tok.split_once('=').ok_or_else(|| Error::Descriptor(format!(
            "expected key=value, got `{tok}`"
        )))?;
        if map.insert(k.to_string(), v.to_string()).is_some() {
            return Err(Error::Descriptor(format!("duplicate key `{k}`")));
        }
    }
    Ok(map)
}

fn take(map: &mut BTreeMap<String, String>, key: &str) -> Result<String> {
    map.remove(key)
        .ok_or_else(|| Error::Descriptor(format!("missing `{key}=`")))
}

fn expect_empty(map: &BTreeMap<String, String>) -> Result<()> {
    if let Some(k) = map.keys().next() {
        return Err(Error::Descriptor(format!("unexpected key `{k}`")));
    }
    Ok(())
}

impl Gl2Descriptor {
    /// Parse the `key=value` fields after the `pi2` tag.
    pub fn parse_fields(fields: &str) -> Result<Self> {
        let mut map = parse_kv(fields)?;
        let label = take(&mut map, "label")?;
        let shape = match take(&mut map, "shape")?.as_str() {
            "dihedral" => {
                let n: u32 = take(&mut map, "n")?.parse().map_err(|e| {
                    Error::Descriptor(format!("bad n: {e}"))
                })?;
                if n < 2 {
                    return Err(Error::Descriptor("dihedral needs n >= 2".into()));
                }
                let cubic = map.remove("cubic");
                Gl2Shape::Dihedral { n, cubic }
            }
            "tetrahedral" => Gl2Shape::Tetrahedral,
            "octahedral" => Gl2Shape::Octahedral,
            "primitive" => Gl2Shape::Primitive,
            other => {
                return Err(Error::Descriptor(format!("unknown rank-2 shape `{other}`")));
            }
        };
        expect_empty(&map)?;
        Ok(Gl2Descriptor { label, shape })
    }
}

impl fmt::Display for Gl2Descriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "pi2 label={}", self.label)?;
        match &self.shape {
            Gl2Shape::Dihedral { n, cubic } => {
                write!(f, " shape=dihedral n={n}")?;
                if let Some(c) = cubic {
                    write!(f, " cubic={c}")?;
                }
                Ok(())
            }
            Gl2Shape::Tetrahedral => write!(f, " shape=tetrahedral"),
            Gl2Shape::Octahedral => write!(f, " shape=octahedral"),
            Gl2Shape::Primitive => write!(f, " shape=primitive"),
        }
    }
}

impl Gl3Descriptor {
    pub fn parse_fields(fields: &str) -> Result<Self> {
        let mut map = parse_kv(fields)?;
        let label = take(&mut map, "label")?;
        let shape = match take(&mut map, "shape")?.as_str() {
            "adjoint" => Gl3Shape::AdjointTwist {
                of: take(&mut map, "of")?,
            },
            "monomial" => {
                let cubic = take(&mut map, "cubic")?;
                let normal: bool = take(&mut map, "normal")?.parse().map_err(|e| {
                    Error::Descriptor(format!("bad normal flag: {e}"))
                })?;
                Gl3Shape::Monomial { cubic, normal }
            }
            "generic" => Gl3Shape::Generic,
            other => {
                return Err(Error::Descriptor(format!("unknown rank-3 shape `{other}`")));
            }
        };
        expect_empty(&map)?;
        Ok(Gl3Descriptor { label, shape })
    }
}

impl fmt::Display for Gl3Descriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "pi3 label={}", self.label)?;
        match &self.shape {
            Gl3Shape::AdjointTwist { of } => write!(f, " shape=adjoint of={of}"),
            Gl3Shape::Monomial { cubic, normal } => {
                write!(f, " shape=monomial cubic={cubic} normal={normal}")
            }
            Gl3Shape::Generic => write!(f, " shape=generic"),
        }
    }
}

/// Parse a two-line descriptor file into the pair.
pub fn parse_descriptor_pair(input: &str) -> Result<(Gl2Descriptor, Gl3Descriptor)> {
    let mut p2 = None;
    let mut p3 = None;
    for raw in input.lines() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("pi2 ") {
            if p2.replace(Gl2Descriptor::parse_fields(rest)?).is_some() {
                return Err(Error::Descriptor("duplicate pi2 line".into()));
            }
        } else if let Some(rest) = line.strip_prefix("pi3 ") {
            if p3.replace(Gl3Descriptor::parse_fields(rest)?).is_some() {
                return Err(Error::Descriptor("duplicate pi3 line".into()));
            }
        } else {
            return Err(Error::Descriptor(format!(
                "expected `pi2 ...` or `pi3 ...`, got `{line}`"
            )));
        }
    }
    match (p2, p3) {
        (Some(a), Some(b)) => Ok((a, b)),
        _ => Err(Error::Descriptor("need one pi2 line and one pi3 line".into())),
    }
}

/// Result of the decision tree: the verdict, which rule fired, and the
/// isobaric constituents when the product splits.
#[derive(Debug, Clone, serde::Serialize)]
pub struct Decision {
    pub verdict: Verdict,
    /// Stable rule tag, e.g. `a-tetrahedral` or `b-dihedral-monomial`.
    pub rule: String,
    /// Human-readable description of the pieces (empty when cuspidal).
    pub constituents: Vec<String>,
    pub notes: Vec<String>,
}

impl Decision {
    fn new(verdict: Verdict, rule: &str) -> Self {
        Decision {
            verdict,
            rule: rule.to_string(),
            constituents: Vec::new(),
            notes: Vec::new(),
        }
    }
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "verdict: {} (rule {})", self.verdict, self.rule)?;
        for c in &self.constituents {
            writeln!(f, "  constituent: {c}")?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}

/// Decide cuspidality of the product from the symbolic descriptors.
pub fn decide_cuspidality(p2: &Gl2Descriptor, p3: &Gl3Descriptor) -> Result<Decision> {
    // Clause (a): the rank-3 input is a twist of the adjoint of the
    // rank-2 input.
    if let Gl3Shape::AdjointTwist { of } = &p3.shape {
        if of == &p2.label {
            return match &p2.shape {
                Gl2Shape::Dihedral { .. } => Err(Error::Descriptor(format!(
                    "`{}` is dihedral, so its adjoint is not cuspidal and `{}` cannot be a twist of it",
                    p2.label, p3.label
                ))),
                Gl2Shape::Tetrahedral => {
                    let mut d = Decision::new(Verdict::Type222, "a-tetrahedral");
                    d.constituents = (0..3)
                        .map(|i| format!("{} twisted by the cubic character power {i}", p2.label))
                        .collect();
                    Ok(d)
                }
                Gl2Shape::Octahedral | Gl2Shape::Primitive => {
                    let mut d = Decision::new(Verdict::Type24, "a-non-tetrahedral");
                    d.constituents = vec![
                        format!("{} twisted by the determinant of the adjoint twist", p2.label),
                        format!("4-dimensional complement of {} in the product", p2.label),
                    ];
                    Ok(d)
                }
            };
        }
    }
    // Clause (b): dihedral of projective order 6 against a monomial form
    // from the same non-Galois cubic.
    if let Gl2Shape::Dihedral { n, cubic } = &p2.shape {
        if let Gl3Shape::Monomial {
            cubic: cubic3,
            normal: false,
        } = &p3.shape
        {
            if *n == 3 {
                if let Some(c2) = cubic {
                    if c2 == cubic3 {
                        let mut d = Decision::new(Verdict::Type33, "b-dihedral-monomial");
                        d.constituents = vec![
                            format!("monomial 3-dimensional piece from {c2} (first embedding)"),
                            format!("monomial 3-dimensional piece from {c2} (twisted embedding)"),
                        ];
                        return Ok(d);
                    }
                }
            }
        }
    }
    let mut d = Decision::new(Verdict::Cuspidal, "cuspidal-default");
    match (&p2.shape, &p3.shape) {
        (Gl2Shape::Dihedral { n: 3, cubic: None }, Gl3Shape::Monomial { .. }) => {
            d.notes.push(
                "rank-2 input is dihedral of projective order 6 but carries no cubic label; \
                 no coincidence with the monomial input is asserted"
                    .to_string(),
            );
        }
        (_, Gl3Shape::AdjointTwist { of }) => {
            d.notes
                .push(format!("adjoint twist of a different form `{of}`"));
        }
        _ => {}
    }
    Ok(d)
}

/// Per-group data computed once and shared across pair decisions.
pub struct GroupContext {
    pub group: Arc<FiniteGroup>,
    pub linears: Vec<ClassFunction>,
    pub index3: Vec<(Subgroup, bool)>,
    index3_linears: Vec<Vec<ClassFunction>>,
}

impl GroupContext {
    pub fn new(group: &Arc<FiniteGroup>) -> Result<Self> {
        let linears = group.linear_characters()?;
        let index3 = group.index3_subgroup_classes()?;
        let index3_linears = index3
            .iter()
            .map(|(h, _)| h.group().linear_characters())
            .collect::<Result<Vec<_>>>()?;
        Ok(GroupContext {
            group: group.clone(),
            linears,
            index3,
            index3_linears,
        })
    }
}

/// Run the decision tree on exact character data.
pub fn decide_pair_on_group(
    ctx: &GroupContext,
    x2: &ClassFunction,
    x3: &ClassFunction,
) -> Result<Decision> {
    if x2.degree_int() != Some(2) || !x2.is_irreducible() {
        return Err(Error::ShapeViolation(format!(
            "`{}` is not an irreducible degree-2 character",
            x2.name()
        )));
    }
    if x3.degree_int() != Some(3) || !x3.is_irreducible() {
        return Err(Error::ShapeViolation(format!(
            "`{}` is not an irreducible degree-3 character",
            x3.name()
        )));
    }
    let class2 = classify_2dim(x2)?;
    // Clause (a): x3 is a character twist of the adjoint of x2.
    if !matches!(class2, TwoDimClass::Dihedral { .. }) {
        let ad = x2.adjoint2()?;
        for chi in &ctx.linears {
            if &ad.mul(chi) == x3 {
                return Ok(match class2 {
                    TwoDimClass::Tetrahedral => {
                        let mut d = Decision::new(Verdict::Type222, "a-tetrahedral");
                        d.constituents = vec![
                            format!("{} and its two cubic twists", x2.name()),
                        ];
                        d.notes.push(format!("x3 = Ad({}) * {}", x2.name(), chi.name()));
                        d
                    }
                    _ => {
                        let mut d = Decision::new(Verdict::Type24, "a-non-tetrahedral");
                        d.constituents = vec![
                            format!("a twist of {}", x2.name()),
                            "an irreducible 4-dimensional complement".to_string(),
                        ];
                        d.notes.push(format!("x3 = Ad({}) * {}", x2.name(), chi.name()));
                        d
                    }
                });
            }
        }
    }
    // Clause (b): dihedral of projective order 6 against a monomial
    // character induced from a matching non-normal index-3 subgroup.
    if class2 == (TwoDimClass::Dihedral { n: 3 }) {
        for ((h, normal), h_linears) in ctx.index3.iter().zip(&ctx.index3_linears) {
            if *normal {
                continue;
            }
            let res = h.restrict(x2)?;
            let reducible = res.norm_sq().map(|n| !n.is_one()).unwrap_or(false);
            if !reducible {
                continue;
            }
            for lam in h_linears {
                if &h.induce(lam)? == x3 {
                    let mut d = Decision::new(Verdict::Type33, "b-dihedral-monomial");
                    d.constituents = vec![
                        "two monomial 3-dimensional pieces from the shared cubic".to_string(),
                    ];
                    d.notes.push(format!(
                        "shared non-normal index-3 subgroup of order {}",
                        h.group().order()
                    ));
                    return Ok(d);
                }
            }
        }
    }
    Ok(Decision::new(Verdict::Cuspidal, "cuspidal-default"))
}

/// Decompose x2 (x) x3 outright and classify the constituent degrees.
pub fn tensor_verdict_bruteforce(
    x2: &ClassFunction,
    x3: &ClassFunction,
) -> Result<Verdict> {
    let parts = decompose(&x2.mul(x3))?;
    let mut degrees: Vec<i64> = parts
        .iter()
        .flat_map(|(f, m)| {
            std::iter::repeat(f.degree_int().unwrap_or(0)).take(*m as usize)
        })
        .collect();
    degrees.sort();
    if degrees.contains(&1) {
        // Impossible for irreducible inputs: a linear constituent would
        // pair x2 with a degree-3 irreducible under the inner product.
        return Err(Error::ShapeViolation(format!(
            "degree-1 constituent in {} (x) {}",
            x2.name(),
            x3.name()
        )));
    }
    Ok(match degrees.as_slice() {
        [6] => Verdict::Cuspidal,
        [2, 4] => Verdict::Type24,
        [2, 2, 2] => Verdict::Type222,
        [3, 3] => Verdict::Type33,
        other => {
            return Err(Error::ShapeViolation(format!(
                "unexpected constituent degrees {other:?}"
            )))
        }
    })
}

/// One cross-validated pair: the tree decision next to the brute-force
/// decomposition.
#[derive(Debug, Clone, serde::Serialize)]
pub struct PairOutcome {
    pub group: String,
    pub x2: String,
    pub x3: String,
    pub tree: Decision,
    pub brute: Verdict,
    pub agree: bool,
}

/// All groups the cross-validation sweep runs over: the catalog members
/// with both a degree-2 and a degree-3 irreducible character, plus
/// product groups that generate dihedral/monomial interactions.
pub fn cross_validation_groups() -> Result<Vec<Arc<FiniteGroup>>> {
    Ok(vec![
        catalog::symmetric4()?,
        catalog::sl23()?,
        catalog::gl23()?,
        FiniteGroup::direct_product(&catalog::frobenius21()?, &catalog::sl23()?)?,
        FiniteGroup::direct_product(&catalog::frobenius21()?, &catalog::symmetric4()?)?,
        FiniteGroup::direct_product(&catalog::alternating4()?, &catalog::dihedral(4)?)?,
        FiniteGroup::direct_product(&catalog::symmetric3()?, &catalog::alternating4()?)?,
    ])
}

/// Run the decision tree against brute-force decomposition on every
/// (degree-2, degree-3) pair of irreducible characters over the sweep
/// groups.
pub fn cross_validate() -> Result<Vec<PairOutcome>> {
    let mut out = Vec::new();
    for group in cross_validation_groups()? {
        let table = group.irreducibles()?;
        let ctx = GroupContext::new(&group)?;
        let twos: Vec<_> = table
            .iter()
            .filter(|f| f.degree_int() == Some(2))
            .collect();
        let threes: Vec<_> = table
            .iter()
            .filter(|f| f.degree_int() == Some(3))
            .collect();
        for x2 in &twos {
            for x3 in &threes {
                let tree = decide_pair_on_group(&ctx, x2, x3)?;
                let brute = tensor_verdict_bruteforce(x2, x3)?;
                let agree = tree.verdict == brute;
                out.push(PairOutcome {
                    group: group.name().to_string(),
                    x2: x2.name().to_string(),
                    x3: x3.name().to_string(),
                    tree,
                    brute,
                    agree,
                });
            }
        }
    }
    Ok(out)
}

/// Summarize pair outcomes as a check report (one line per group plus a
/// total).
pub fn cross_validation_report(outcomes: &[PairOutcome]) -> RunReport {
    let mut report = RunReport::new("decision tree vs brute-force decomposition");
    let mut by_group: BTreeMap<&str, (usize, usize, BTreeMap<String, usize>)> = BTreeMap::new();
    for o in outcomes {
        let entry = by_group.entry(&o.group).or_default();
        entry.0 += 1;
        if o.agree {
            entry.1 += 1;
        }
        *entry.2.entry(o.brute.to_string()).or_default() += 1;
    }
    for (group, (total, agreed, verdicts)) in &by_group {
        let tally: Vec<String> = verdicts.iter().map(|(v, c)| format!("{v}: {c}")).collect();
        report.record(
            format!("{group}"),
            agreed == total,
            format!("{agreed}/{total} pairs agree ({})", tally.join(", ")),
        );
    }
    let total = outcomes.len();
    let agreed = outcomes.iter().filter(|o| o.agree).count();
    report.record(
        "overall agreement",
        agreed == total,
        format!("{agreed}/{total}"),
    );
    report
}

/// Aggregate record for the stability question: the product must be
/// cuspidal, carry no self-twist, and not be solvably induced; the
/// archimedean flags gate the conclusion.
#[derive(Debug, Clone, serde::Serialize)]
pub struct StabilityDecision {
    pub cuspidal: bool,
    pub no_selftwist: bool,
    pub not_solvably_induced: bool,
    pub regular_algebraic: bool,
    pub stable: bool,
    pub decision: Decision,
    pub notes: Vec<String>,
}

/// Decide whether the product stays cuspidal under every solvable base
/// change: it must be cuspidal, admit no self-twist (ruled out by a
/// dihedral rank-2 or self-twisted monomial rank-3 input), and not be
/// induced (ruled out by dihedral or monomial structure); regular
/// algebraicity is carried as an explicit hypothesis flag.
pub fn decide_tensor_stability(
    p2: &Gl2Descriptor,
    p3: &Gl3Descriptor,
    regular_algebraic: bool,
) -> Result<StabilityDecision> {
    let decision = decide_cuspidality(p2, p3)?;
    let cuspidal = decision.verdict == Verdict::Cuspidal;
    let dihedral2 = matches!(p2.shape, Gl2Shape::Dihedral { .. });
    let monomial3 = matches!(p3.shape, Gl3Shape::Monomial { .. });
    let selftwisted_monomial3 = matches!(
        p3.shape,
        Gl3Shape::Monomial { normal: true, .. }
    );
    let no_selftwist = !dihedral2 && !selftwisted_monomial3;
    let not_solvably_induced = !dihedral2 && !monomial3;
    let stable = cuspidal && no_selftwist && not_solvably_induced && regular_algebraic;
    let mut notes = Vec::new();
    if dihedral2 {
        notes.push(format!(
            "`{}` is dihedral: the product is induced from a quadratic extension",
            p2.label
        ));
    }
    if monomial3 {
        notes.push(format!(
            "`{}` is monomial: the product is induced from a cubic extension",
            p3.label
        ));
    }
    if !regular_algebraic {
        notes.push("regular algebraicity not asserted; stability withheld".to_string());
    }
    Ok(StabilityDecision {
        cuspidal,
        no_selftwist,
        not_solvably_induced,
        regular_algebraic,
        stable,
        decision,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn oct() -> Gl2Descriptor {
        Gl2Descriptor {
            label: "f".into(),
            shape: Gl2Shape::Octahedral,
        }
    }

    #[test]
    fn descriptor_round_trip() {
        let texts = [
            "pi2 label=f shape=dihedral n=3 cubic=E",
            "pi2 label=f shape=tetrahedral",
            "pi2 label=f shape=octahedral",
        ];
        for t in texts {
            let d = Gl2Descriptor::parse_fields(t.strip_prefix("pi2 ").unwrap()).unwrap();
            assert_eq!(d.to_string(), t);
        }
        let texts3 = [
            "pi3 label=g shape=adjoint of=f",
            "pi3 label=g shape=monomial cubic=E normal=false",
            "pi3 label=g shape=generic",
        ];
        for t in texts3 {
            let d = Gl3Descriptor::parse_fields(t.strip_prefix("pi3 ").unwrap()).unwrap();
            assert_eq!(d.to_string(), t);
        }
        let (p2, p3) = parse_descriptor_pair(
            "# pair\npi2 label=f shape=octahedral\npi3 label=g shape=adjoint of=f\n",
        )
        .unwrap();
        assert_eq!(p2.label, "f");
        assert!(matches!(p3.shape, Gl3Shape::AdjointTwist { .. }));

        assert!(parse_descriptor_pair("pi2 label=f shape=octahedral").is_err());
        assert!(Gl2Descriptor::parse_fields("label=f shape=dihedral").is_err());
        assert!(Gl3Descriptor::parse_fields("label=g shape=monomial cubic=E").is_err());
        assert!(Gl2Descriptor::parse_fields("label=f shape=weird").is_err());
    }

    #[test]
    fn symbolic_decision_tree() {
        let p3_adjoint = Gl3Descriptor {
            label: "g".into(),
            shape: Gl3Shape::AdjointTwist { of: "f".into() },
        };
        // (a) octahedral -> 2+4
        let d = decide_cuspidality(&oct(), &p3_adjoint).unwrap();
        assert_eq!(d.verdict, Verdict::Type24);
        assert_eq!(d.rule, "a-non-tetrahedral");
        // (a) tetrahedral -> 2+2+2
        let tet = Gl2Descriptor {
            label: "f".into(),
            shape: Gl2Shape::Tetrahedral,
        };
        let d = decide_cuspidality(&tet, &p3_adjoint).unwrap();
        assert_eq!(d.verdict, Verdict::Type222);
        assert_eq!(d.constituents.len(), 3);
        // adjoint of a dihedral form is rejected as inconsistent
        let dih = Gl2Descriptor {
            label: "f".into(),
            shape: Gl2Shape::Dihedral {
                n: 3,
                cubic: Some("E".into()),
            },
        };
        assert!(decide_cuspidality(&dih, &p3_adjoint).is_err());
        // (b) matching non-normal cubic -> 3+3
        let mon = Gl3Descriptor {
            label: "g".into(),
            shape: Gl3Shape::Monomial {
                cubic: "E".into(),
                normal: false,
            },
        };
        let d = decide_cuspidality(&dih, &mon).unwrap();
        assert_eq!(d.verdict, Verdict::Type33);
        assert_eq!(d.rule, "b-dihedral-monomial");
        // mismatched cubic label -> cuspidal
        let mon2 = Gl3Descriptor {
            label: "g".into(),
            shape: Gl3Shape::Monomial {
                cubic: "E2".into(),
                normal: false,
            },
        };
        assert_eq!(
            decide_cuspidality(&dih, &mon2).unwrap().verdict,
            Verdict::Cuspidal
        );
        // normal cubic never matches clause (b)
        let mon_normal = Gl3Descriptor {
            label: "g".into(),
            shape: Gl3Shape::Monomial {
                cubic: "E".into(),
                normal: true,
            },
        };
        assert_eq!(
            decide_cuspidality(&dih, &mon_normal).unwrap().verdict,
            Verdict::Cuspidal
        );
        // adjoint of an unrelated form -> cuspidal with a note
        let other = Gl3Descriptor {
            label: "g".into(),
            shape: Gl3Shape::AdjointTwist { of: "h".into() },
        };
        let d = decide_cuspidality(&oct(), &other).unwrap();
        assert_eq!(d.verdict, Verdict::Cuspidal);
        assert!(!d.notes.is_empty());
    }

    #[test]
    fn pinned_group_instances() {
        // S4: the dihedral 2-dim against each 3-dim gives 3+3.
        let s4 = catalog::symmetric4().unwrap();
        let ctx = GroupContext::new(&s4).unwrap();
        let table = s4.irreducibles().unwrap();
        let two = table.iter().find(|f| f.degree_int() == Some(2)).unwrap();
        for x3 in table.iter().filter(|f| f.degree_int() == Some(3)) {
            let d = decide_pair_on_group(&ctx, two, x3).unwrap();
            assert_eq!(d.verdict, Verdict::Type33, "{}", x3.name());
            assert_eq!(d.rule, "b-dihedral-monomial");
            assert_eq!(tensor_verdict_bruteforce(two, x3).unwrap(), Verdict::Type33);
        }

        // SL(2,3): each faithful 2-dim against the adjoint gives 2+2+2.
        let sl = catalog::sl23().unwrap();
        let ctx = GroupContext::new(&sl).unwrap();
        let table = sl.irreducibles().unwrap();
        let three = table.iter().find(|f| f.degree_int() == Some(3)).unwrap();
        for x2 in table.iter().filter(|f| f.degree_int() == Some(2)) {
            let d = decide_pair_on_group(&ctx, x2, three).unwrap();
            assert_eq!(d.verdict, Verdict::Type222);
            assert_eq!(d.rule, "a-tetrahedral");
        }

        // GL(2,3): faithful 2-dims against the adjoints give 2+4; the
        // non-faithful 2-dim gives 3+3.
        let gl = catalog::gl23().unwrap();
        let ctx = GroupContext::new(&gl).unwrap();
        let table = gl.irreducibles().unwrap();
        let mut t24 = 0;
        let mut t33 = 0;
        for x2 in table.iter().filter(|f| f.degree_int() == Some(2)) {
            for x3 in table.iter().filter(|f| f.degree_int() == Some(3)) {
                match decide_pair_on_group(&ctx, x2, x3).unwrap().verdict {
                    Verdict::Type24 => t24 += 1,
                    Verdict::Type33 => t33 += 1,
                    other => panic!("unexpected verdict {other}"),
                }
            }
        }
        assert_eq!((t24, t33), (4, 2));
    }

    #[test]
    fn cross_validation_full_agreement() {
        let outcomes = cross_validate().unwrap();
        assert!(!outcomes.is_empty());
        for o in &outcomes {
            assert!(
                o.agree,
                "{}: ({}, {}) tree {} brute {}",
                o.group, o.x2, o.x3, o.tree.verdict, o.brute
            );
        }
        let report = cross_validation_report(&outcomes);
        assert!(report.all_passed());
        // All four verdict types occur across the sweep.
        use std::collections::BTreeSet;
        let seen: BTreeSet<String> =
            outcomes.iter().map(|o| o.brute.to_string()).collect();
        assert_eq!(seen.len(), 4, "verdicts seen: {seen:?}");
    }

    #[test]
    fn stability_record() {
        let p3 = Gl3Descriptor {
            label: "g".into(),
            shape: Gl3Shape::Generic,
        };
        let s = decide_tensor_stability(&oct(), &p3, true).unwrap();
        assert!(s.stable && s.cuspidal && s.no_selftwist && s.not_solvably_induced);
        // monomial rank-3: induced, not stable
        let mon = Gl3Descriptor {
            label: "g".into(),
            shape: Gl3Shape::Monomial {
                cubic: "E".into(),
                normal: true,
            },
        };
        let s = decide_tensor_stability(&oct(), &mon, true).unwrap();
        assert!(s.cuspidal && !s.no_selftwist && !s.not_solvably_induced && !s.stable);
        // missing regularity withholds stability
        let s = decide_tensor_stability(&oct(), &p3, false).unwrap();
        assert!(!s.stable && s.cuspidal);
    }
}
