//! Archimedean parameter arithmetic: restrictions of local parameters at
//! the infinite place to the circle-times-scaling coordinates, tensor
//! products, regularity, cohomological degree windows, and the induced
//! infinity-types used for CM constructions.
//!
//! A character of the nonzero complex numbers is stored as the exponent
//! pair `(k; w)` meaning `(z/|z|)^k (z zbar)^{w/2}`-normalized so that
//! both entries are integers; parameters are multisets of such pairs and
//! serialize as `(k;w)` lists.

use std::fmt;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};

/// One restricted character: `k` is the circle exponent, `w` the scaling
/// weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ArchChar {
    pub k: i64,
    pub w: i64,
}

impl fmt::Display for ArchChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};{})", self.k, self.w)
    }
}

/// A multiset of restricted characters, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArchParameter {
    entries: Vec<ArchChar>,
}

impl ArchParameter {
    pub fn new(mut entries: Vec<ArchChar>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyParameter);
        }
        entries.sort();
        Ok(ArchParameter { entries })
    }

    pub fn degree(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[ArchChar] {
        &self.entries
    }

    /// Pairwise exponent sums (the restriction of a tensor product).
    pub fn tensor(&self, other: &Self) -> Self {
        let mut entries = Vec::with_capacity(self.degree() * other.degree());
        for a in &self.entries {
            for b in &other.entries {
                entries.push(ArchChar {
                    k: a.k + b.k,
                    w: a.w + b.w,
                });
            }
        }
        ArchParameter::new(entries).expect("nonempty product")
    }

    /// Regular: all entries pairwise distinct.
    pub fn is_regular(&self) -> bool {
        self.entries.windows(2).all(|p| p[0] != p[1])
    }

    /// Negate every circle exponent (dual up to weight).
    pub fn circle_dual(&self) -> Self {
        ArchParameter::new(
            self.entries
                .iter()
                .map(|e| ArchChar { k: -e.k, w: e.w })
                .collect(),
        )
        .expect("same degree")
    }

    /// Parse a `(k;w)` list separated by whitespace or commas.
    pub fn parse(input: &str) -> Result<Self> {
        let bad = |detail: String| Error::Parse {
            what: "archimedean parameter",
            detail,
        };
        let mut entries = Vec::new();
        let cleaned = input.replace(',', " ");
        for tok in cleaned.split_whitespace() {
            let inner = tok
                .strip_prefix('(')
                .and_then(|t| t.strip_suffix(')'))
                .ok_or_else(|| bad(format!("expected (k;w), got `{tok}`")))?;
            let (ks, ws) = inner
                .split_once(';')
                .ok_or_else(|| bad(format!("missing `;` in `{tok}`")))?;
            let k = ks
                .parse::<i64>()
                .map_err(|_| bad(format!("bad integer `{ks}`")))?;
            let w = ws
                .parse::<i64>()
                .map_err(|_| bad(format!("bad integer `{ws}`")))?;
            entries.push(ArchChar { k, w });
        }
        ArchParameter::new(entries)
    }
}

impl fmt::Display for ArchParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// The infinity-type contributing to cohomology in rank `n`: circle
/// exponents `n-1, n-3, ..., -(n-1)` (including 0 when n is odd), all at
/// weight `n-1`.
pub fn cohomological_type(n: u32) -> Result<ArchParameter> {
    if n < 2 {
        return Err(Error::ShapeViolation(format!("rank must be >= 2, got {n}")));
    }
    let n = n as i64;
    let w = n - 1;
    let mut entries = Vec::new();
    let mut k = n - 1;
    while k > 0 {
        entries.push(ArchChar { k, w });
        entries.push(ArchChar { k: -k, w });
        k -= 2;
    }
    if n % 2 == 1 {
        entries.push(ArchChar { k: 0, w });
    }
    ArchParameter::new(entries)
}

/// The infinity-type of a holomorphic form of weight `k`: exponents
/// `+-(k-1)` at weight `k-1`.
pub fn holomorphic_type(weight: u32) -> Result<ArchParameter> {
    if weight < 2 {
        return Err(Error::ShapeViolation(format!(
            "weight must be >= 2, got {weight}"
        )));
    }
    let k = weight as i64 - 1;
    ArchParameter::new(vec![ArchChar { k, w: k }, ArchChar { k: -k, w: k }])
}

/// Cohomological degree window for rank `n`: the bottom degree `d`
/// (`m^2` for n = 2m, `m(m+1)` for n = 2m+1) and the top `d + (n-1)/2`.
pub fn degree_window(n: u32) -> Result<(u64, u64)> {
    if n < 2 {
        return Err(Error::ShapeViolation(format!("rank must be >= 2, got {n}")));
    }
    let m = (n / 2) as u64;
    let d = if n % 2 == 0 { m * m } else { m * (m + 1) };
    Ok((d, d + ((n as u64 - 1) / 2)))
}

/// The exact infinity computation behind the weight-4 corollary: the
/// tensor of the weight-4 holomorphic type with the rank-3 cohomological
/// type equals the rank-6 cohomological type (in particular it is
/// regular).
pub fn check_weight4_tensor_cohomology() -> Result<bool> {
    let gl2 = holomorphic_type(4)?;
    let gl3 = cohomological_type(3)?;
    let product = gl2.tensor(&gl3);
    Ok(product == cohomological_type(6)? && product.is_regular())
}

/// Infinity-type record for a parameter induced from `m` circle
/// characters with exponents `k_j = 2(m-j)+1`.
#[derive(Debug, Clone, Serialize)]
pub struct InducedInfinity {
    pub m: u32,
    /// Descending odd exponents 2m-1, 2m-3, ..., 1.
    pub k: Vec<i64>,
    pub induced: ArchParameter,
    pub regular: bool,
}

/// Build the induced infinity-type on rank 2m: characters `(±k_j; 2m-1)`
/// for `k_j = 2(m-j)+1`, j = 1..m.
pub fn induced_cm_infinity(m: u32) -> Result<InducedInfinity> {
    if m < 2 {
        return Err(Error::ShapeViolation(format!("need m >= 2, got {m}")));
    }
    let w = 2 * m as i64 - 1;
    let k: Vec<i64> = (1..=m as i64).map(|j| 2 * (m as i64 - j) + 1).collect();
    let mut entries = Vec::new();
    for &kj in &k {
        entries.push(ArchChar { k: kj, w });
        entries.push(ArchChar { k: -kj, w });
    }
    let induced = ArchParameter::new(entries)?;
    let regular = induced.is_regular();
    Ok(InducedInfinity {
        m,
        k,
        induced,
        regular,
    })
}

/// Smallest `1 <= M <= mmax` with `prod_j (u_j / conj(u_j))^(M k_j)`
/// within `tol` of 1, if any. Real embeddings contribute trivially.
pub fn unit_condition(
    u: &[Complex64],
    k: &[i64],
    mmax: u64,
    tol: f64,
) -> Result<Option<u64>> {
    if u.len() != k.len() {
        return Err(Error::ShapeViolation(format!(
            "{} embeddings against {} exponents",
            u.len(),
            k.len()
        )));
    }
    for (j, uj) in u.iter().enumerate() {
        if uj.norm() == 0.0 {
            return Err(Error::ZeroValue(format!("u_{}", j + 1)));
        }
    }
    // accumulate the phase sum_j k_j * 2 arg(u_j); the product is
    // e^{i M phase}
    let phase: f64 = u
        .iter()
        .zip(k)
        .map(|(uj, &kj)| 2.0 * uj.arg() * kj as f64)
        .sum();
    for m in 1..=mmax {
        let prod = Complex64::from_polar(1.0, phase * m as f64);
        if (prod - Complex64::new(1.0, 0.0)).norm() <= tol {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn param(pairs: &[(i64, i64)]) -> ArchParameter {
        ArchParameter::new(pairs.iter().map(|&(k, w)| ArchChar { k, w }).collect()).unwrap()
    }

    #[test]
    fn parse_and_render() {
        let p = ArchParameter::parse("(3;3) (-3;3)").unwrap();
        assert_eq!(p, param(&[(3, 3), (-3, 3)]));
        assert_eq!(p.to_string(), "(-3;3) (3;3)");
        let p = ArchParameter::parse("(2;2),(0;2),(-2;2)").unwrap();
        assert_eq!(p.degree(), 3);
        assert!(ArchParameter::parse("").is_err());
        assert!(ArchParameter::parse("(1,2)").is_err());
        assert!(ArchParameter::parse("3;3").is_err());
    }

    #[test]
    fn tensor_pairwise_sums() {
        // weight-4 type against the rank-3 cohomological type
        let a = param(&[(3, 3), (-3, 3)]);
        let b = param(&[(2, 2), (0, 2), (-2, 2)]);
        let t = a.tensor(&b);
        assert_eq!(
            t,
            param(&[(5, 5), (1, 5), (-1, 5), (-5, 5), (3, 5), (-3, 5)])
        );
        // identity element and degree multiplicativity
        let one = param(&[(0, 0)]);
        assert_eq!(one.tensor(&b), b);
        assert_eq!(a.tensor(&b).degree(), 6);
        // commutativity
        assert_eq!(a.tensor(&b), b.tensor(&a));
    }

    #[test]
    fn regularity() {
        assert!(param(&[(5, 5), (1, 5), (-1, 5), (-5, 5), (3, 5), (-3, 5)]).is_regular());
        assert!(!param(&[(1, 0), (1, 0)]).is_regular());
        for n in 2..=12 {
            assert!(cohomological_type(n).unwrap().is_regular());
        }
    }

    #[test]
    fn cohomological_types_pinned() {
        assert_eq!(cohomological_type(2).unwrap(), param(&[(1, 1), (-1, 1)]));
        assert_eq!(
            cohomological_type(3).unwrap(),
            param(&[(2, 2), (0, 2), (-2, 2)])
        );
        assert_eq!(
            cohomological_type(6).unwrap(),
            param(&[(5, 5), (3, 5), (1, 5), (-1, 5), (-3, 5), (-5, 5)])
        );
        assert!(cohomological_type(1).is_err());
        // self-dual up to weight
        for n in 2..=12 {
            let p = cohomological_type(n).unwrap();
            assert_eq!(p.circle_dual(), p);
            assert_eq!(p.degree(), n as usize);
        }
        assert_eq!(holomorphic_type(2).unwrap(), cohomological_type(2).unwrap());
    }

    #[test]
    fn degree_windows_pinned() {
        assert_eq!(degree_window(6).unwrap(), (9, 11));
        assert_eq!(degree_window(3).unwrap(), (2, 3));
        assert_eq!(degree_window(2).unwrap(), (1, 1));
        assert_eq!(degree_window(4).unwrap(), (4, 5));
        assert_eq!(degree_window(5).unwrap(), (6, 8));
        assert_eq!(degree_window(7).unwrap(), (12, 15));
        assert!(degree_window(1).is_err());
    }

    #[test]
    fn weight4_tensor_identity() {
        assert!(check_weight4_tensor_cohomology().unwrap());
        // the weight-2 substitute collides instead
        let bad = holomorphic_type(2)
            .unwrap()
            .tensor(&cohomological_type(3).unwrap());
        assert!(!bad.is_regular());
        assert_ne!(bad, cohomological_type(6).unwrap());
    }

    #[test]
    fn induced_infinity_matches_cohomological() {
        let r = induced_cm_infinity(2).unwrap();
        assert_eq!(r.k, vec![3, 1]);
        assert_eq!(r.induced, param(&[(3, 3), (1, 3), (-1, 3), (-3, 3)]));
        assert!(r.regular);
        let r = induced_cm_infinity(3).unwrap();
        assert_eq!(r.k, vec![5, 3, 1]);
        for m in 2..=12u32 {
            let r = induced_cm_infinity(m).unwrap();
            assert!(r.regular);
            assert_eq!(r.induced.degree(), 2 * m as usize);
            assert_eq!(r.induced, cohomological_type(2 * m).unwrap());
        }
        assert!(induced_cm_infinity(1).is_err());
    }

    #[test]
    fn unit_condition_search() {
        // all real embeddings: M = 1
        let u = [Complex64::new(2.0, 0.0), Complex64::new(-3.0, 0.0)];
        assert_eq!(unit_condition(&u, &[3, 1], 10, 1e-9).unwrap(), Some(1));
        // constructed: u_1 = e^{i pi / 6}, k = [1]; (u/ubar)^M = e^{i M pi/3},
        // first unit at M = 6
        let u = [Complex64::from_polar(1.0, std::f64::consts::PI / 6.0)];
        assert_eq!(unit_condition(&u, &[1], 12, 1e-9).unwrap(), Some(6));
        // irrational angle with too small a bound: absent
        let u = [Complex64::from_polar(1.0, 1.0)];
        assert_eq!(unit_condition(&u, &[1], 5, 1e-9).unwrap(), None);
        // errors
        assert!(unit_condition(&[Complex64::new(0.0, 0.0)], &[1], 5, 1e-9).is_err());
        assert!(unit_condition(&u, &[1, 2], 5, 1e-9).is_err());
    }
}
