//! Ready-made groups: cyclic and dihedral families, the small symmetric
//! and alternating groups, the binary tetrahedral group SL(2,3) and its
//! extension GL(2,3) (both as explicit 2x2 matrix groups over cyclotomic
//! fields, so the faithful 2-dimensional trace comes for free), the
//! Frobenius group of order 21, and direct products.
//!
//! Naming for [`by_name`]: `C<n>` cyclic of order n, `D<2n>` dihedral of
//! order 2n (so `D6` is the symmetry group of the triangle), `S3`, `S4`,
//! `A4`, `SL(2,3)` (alias `SL23`), `GL(2,3)` (alias `GL23`), `F21`, and
//! products like `F21xSL(2,3)` (left-associated splits on `x`).

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::FiniteGroup;
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};

fn half() -> BigRational {
    BigRational::new(BigInt::from(1), BigInt::from(2))
}

fn neg_half() -> BigRational {
    BigRational::new(BigInt::from(-1), BigInt::from(2))
}

/// Cyclic group of order n as the closure of an n-cycle.
pub fn cyclic(n: u32) -> Result<Arc<FiniteGroup>> {
    if n == 0 || n > 100 {
        return Err(Error::GroupInput(format!("cyclic order {n} out of range 1..=100")));
    }
    let n = n as usize;
    let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    FiniteGroup::from_permutations(&format!("C{n}"), n, &[cycle])
}

/// Dihedral group of order 2n (n >= 2).
pub fn dihedral(n: u32) -> Result<Arc<FiniteGroup>> {
    if !(2..=50).contains(&n) {
        return Err(Error::GroupInput(format!("dihedral parameter {n} out of range 2..=50")));
    }
    let name = format!("D{}", 2 * n);
    if n == 2 {
        // Two commuting transpositions on four points.
        return FiniteGroup::from_permutations(&name, 4, &[vec![1, 0, 2, 3], vec![0, 1, 3, 2]]);
    }
    let n = n as usize;
    let rot: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let refl: Vec<usize> = (0..n).map(|i| (n - 1 - i) % n).collect();
    FiniteGroup::from_permutations(&name, n, &[rot, refl])
}

/// Symmetric group on three letters.
pub fn symmetric3() -> Result<Arc<FiniteGroup>> {
    FiniteGroup::from_permutations("S3", 3, &[vec![1, 0, 2], vec![1, 2, 0]])
}

/// Symmetric group on four letters.
pub fn symmetric4() -> Result<Arc<FiniteGroup>> {
    FiniteGroup::from_permutations("S4", 4, &[vec![1, 0, 2, 3], vec![1, 2, 3, 0]])
}

/// Alternating group on four letters.
pub fn alternating4() -> Result<Arc<FiniteGroup>> {
    FiniteGroup::from_permutations("A4", 4, &[vec![1, 2, 0, 3], vec![1, 0, 3, 2]])
}

fn quaternion_i() -> Vec<Cyclotomic> {
    // [[i, 0], [0, -i]]
    vec![
        Cyclotomic::root(4, 1),
        Cyclotomic::zero(4),
        Cyclotomic::zero(4),
        Cyclotomic::root(4, 3),
    ]
}

fn hurwitz_w() -> Vec<Cyclotomic> {
    // (-1 + i + j + k) / 2 in the standard 2x2 complex model:
    // [[(-1+i)/2, (1+i)/2], [(-1+i)/2, (-1-i)/2]]
    let m = |a: BigRational, b: BigRational| {
        Cyclotomic::from_terms(4, &[(a, 0), (b, 1)])
    };
    vec![
        m(neg_half(), half()),
        m(half(), half()),
        m(neg_half(), half()),
        m(neg_half(), neg_half()),
    ]
}

/// The binary tetrahedral group SL(2,3) of order 24, generated by a
/// quaternion unit and the Hurwitz unit of order 3.
pub fn sl23() -> Result<Arc<FiniteGroup>> {
    FiniteGroup::from_matrices("SL(2,3)", 2, 4, &[quaternion_i(), hurwitz_w()])
}

/// GL(2,3) of order 48: SL(2,3) extended by an order-2 element of
/// determinant -1 (realized over the eighth cyclotomic field, so the
/// faithful 2-dimensional characters take the values +-sqrt(-2)).
pub fn gl23() -> Result<Arc<FiniteGroup>> {
    // tau = (1/sqrt 2) [[-1, i], [-i, 1]], with 1/sqrt2 = (z8 + z8^7)/2.
    let t = |s: i64, exps: [i64; 2]| {
        let c = BigRational::new(BigInt::from(s), BigInt::from(2));
        Cyclotomic::from_terms(8, &[(c.clone(), exps[0]), (c, exps[1])])
    };
    let tau = vec![
        t(-1, [1, 7]), // -(z8 + z8^7)/2
        t(1, [3, 1]),  // i (z8 + z8^7)/2 = (z8^3 + z8)/2
        t(-1, [3, 1]),
        t(1, [1, 7]),
    ];
    FiniteGroup::from_matrices("GL(2,3)", 2, 8, &[quaternion_i(), hurwitz_w(), tau])
}

/// The Frobenius group of order 21 (the nonabelian extension of a
/// 7-cycle by the squaring map).
pub fn frobenius21() -> Result<Arc<FiniteGroup>> {
    let x: Vec<usize> = (0..7).map(|i| (i + 1) % 7).collect();
    let y: Vec<usize> = (0..7).map(|i| (2 * i) % 7).collect();
    FiniteGroup::from_permutations("F21", 7, &[x, y])
}

/// All catalog groups used by the cross-validation sweep.
pub fn standard_catalog() -> Result<Vec<Arc<FiniteGroup>>> {
    let mut out = Vec::new();
    for n in 1..=12 {
        out.push(cyclic(n)?);
    }
    for n in 2..=12 {
        out.push(dihedral(n)?);
    }
    out.push(symmetric3()?);
    out.push(alternating4()?);
    out.push(symmetric4()?);
    out.push(sl23()?);
    out.push(gl23()?);
    out.push(frobenius21()?);
    Ok(out)
}

/// Look up a group by name; see the module docs for the grammar.
pub fn by_name(name: &str) -> Result<Arc<FiniteGroup>> {
    let s = name.trim();
    if let Some((a, b)) = split_product(s) {
        let left = by_name(a)?;
        let right = by_name(b)?;
        return FiniteGroup::direct_product(&left, &right);
    }
    match s {
        "S3" => return symmetric3(),
        "S4" => return symmetric4(),
        "A4" => return alternating4(),
        "F21" => return frobenius21(),
        "SL(2,3)" | "SL23" => return sl23(),
        "GL(2,3)" | "GL23" => return gl23(),
        _ => {}
    }
    if let Some(rest) = s.strip_prefix('C') {
        if let Ok(n) = rest.parse::<u32>() {
            return cyclic(n);
        }
    }
    if let Some(rest) = s.strip_prefix('D') {
        if let Ok(m) = rest.parse::<u32>() {
            if m % 2 == 0 && m >= 4 {
                return dihedral(m / 2);
            }
            return Err(Error::GroupInput(format!(
                "dihedral groups are named by their (even) order; `{s}` is not valid"
            )));
        }
    }
    Err(Error::GroupInput(format!("unknown group name `{s}`")))
}

/// Split `AxB` at a separator `x` that is not inside parentheses.
fn split_product(s: &str) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            'x' if depth == 0 && i > 0 => {
                return Some((&s[..i], &s[i + 1..]));
            }
            _ => {}
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::validate_orthogonality;

    #[test]
    fn orders_and_class_counts() {
        for (g, order, classes) in [
            (cyclic(12).unwrap(), 12, 12),
            (dihedral(2).unwrap(), 4, 4),
            (dihedral(4).unwrap(), 8, 5),
            (dihedral(6).unwrap(), 12, 6),
            (symmetric3().unwrap(), 6, 3),
            (alternating4().unwrap(), 12, 4),
            (symmetric4().unwrap(), 24, 5),
            (sl23().unwrap(), 24, 7),
            (gl23().unwrap(), 48, 8),
            (frobenius21().unwrap(), 21, 5),
        ] {
            assert_eq!(g.order(), order, "{}", g.name());
            assert_eq!(g.num_classes(), classes, "{}", g.name());
        }
    }

    #[test]
    fn character_degree_multisets() {
        for (g, degs) in [
            (symmetric4().unwrap(), vec![1, 1, 2, 3, 3]),
            (sl23().unwrap(), vec![1, 1, 1, 2, 2, 2, 3]),
            (gl23().unwrap(), vec![1, 1, 2, 2, 2, 3, 3, 4]),
            (frobenius21().unwrap(), vec![1, 1, 1, 3, 3]),
            (alternating4().unwrap(), vec![1, 1, 1, 3]),
            (dihedral(6).unwrap(), vec![1, 1, 1, 1, 2, 2]),
        ] {
            let table = g.irreducibles().unwrap();
            let mut got: Vec<i64> = table.iter().map(|f| f.degree_int().unwrap()).collect();
            got.sort();
            assert_eq!(got, degs, "{}", g.name());
            validate_orthogonality(&g, &table).unwrap();
        }
    }

    #[test]
    fn gl23_element_orders() {
        let g = gl23().unwrap();
        let mut orders: Vec<u32> = g
            .classes()
            .iter()
            .map(|c| g.element_order(c[0]))
            .collect();
        orders.sort();
        assert_eq!(orders, vec![1, 2, 2, 3, 4, 6, 8, 8]);
    }

    #[test]
    fn by_name_lookups() {
        assert_eq!(by_name("C7").unwrap().order(), 7);
        assert_eq!(by_name("D8").unwrap().order(), 8);
        assert_eq!(by_name("SL(2,3)").unwrap().order(), 24);
        assert_eq!(by_name("GL23").unwrap().order(), 48);
        assert!(by_name("D7").is_err());
        assert!(by_name("Q8").is_err());
        let prod = by_name("F21xSL(2,3)").unwrap();
        assert_eq!(prod.order(), 504);
        assert_eq!(prod.num_classes(), 35);
        let table = prod.irreducibles().unwrap();
        assert_eq!(table.len(), 35);
    }

    #[test]
    fn catalog_tables_build() {
        for g in standard_catalog().unwrap() {
            let table = g.irreducibles().unwrap();
            assert_eq!(table.len(), g.num_classes(), "{}", g.name());
        }
    }
}
