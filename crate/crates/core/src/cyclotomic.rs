//! Exact arithmetic in cyclotomic fields Q(zeta_n).
//!
//! A value is a rational-coefficient vector over the canonical power basis
//! 1, zeta, ..., zeta^{phi(n)-1}, reduced modulo the n-th cyclotomic
//! polynomial. Equality is therefore decidable, conjugation is exact, and
//! inner products of character values come out as honest rationals with no
//! tolerance anywhere.
//!
//! Orders stay small here (the group catalog needs lcm <= 24 per group and
//! products of catalog groups stay within a few hundred), so dense vectors
//! with `BigRational` entries are comfortably fast as long as
//! multiplication skips trailing zeros, which it does.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use once_cell::sync::Lazy;

use crate::error::{Error, Result};

pub fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// Euler totient, by trial division; orders here never exceed a few hundred.
pub fn phi(n: u32) -> u32 {
    let mut n = n as u64;
    let mut result = n;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result as u32
}

fn divisors(n: u32) -> Vec<u32> {
    let mut d: Vec<u32> = (1..=n).filter(|k| n % k == 0).collect();
    d.sort_unstable();
    d
}

/// Exact division of `num` by monic `den` over BigInt; panics on nonzero
/// remainder (only ever called on x^n - 1 by known cyclotomic factors).
fn poly_exact_div(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    assert!(den.last().map(|c| c.is_one()).unwrap_or(false));
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let nd = rem.len() - 1;
    assert!(nd >= dd);
    let mut quot = vec![BigInt::zero(); nd - dd + 1];
    for i in (dd..=nd).rev() {
        let c = rem[i].clone();
        if c.is_zero() {
            continue;
        }
        quot[i - dd] = c.clone();
        for (j, dj) in den.iter().enumerate() {
            rem[i - dd + j] -= &c * dj;
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "non-exact polynomial division");
    quot
}

/// Coefficients of the n-th cyclotomic polynomial, ascending degree, monic.
fn cyclotomic_poly(n: u32) -> Arc<Vec<BigInt>> {
    static CACHE: Lazy<Mutex<HashMap<u32, Arc<Vec<BigInt>>>>> =
        Lazy::new(|| Mutex::new(HashMap::new()));
    if let Some(p) = CACHE.lock().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by Phi_d for every proper divisor d of n.
    let mut p = vec![BigInt::zero(); n as usize + 1];
    p[0] = -BigInt::one();
    p[n as usize] = BigInt::one();
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let q = cyclotomic_poly(d);
        p = poly_exact_div(&p, &q);
    }
    let arc = Arc::new(p);
    CACHE.lock().unwrap().insert(n, arc.clone());
    arc
}

/// An element of Q(zeta_n), canonically reduced.
#[derive(Clone)]
pub struct Cyclotomic {
    order: u32,
    /// Exactly phi(order) entries: coefficients of zeta^0 .. zeta^{phi-1}.
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn zero(order: u32) -> Self {
        assert!(order >= 1);
        Cyclotomic {
            order,
            coeffs: vec![BigRational::zero(); phi(order) as usize],
        }
    }

    pub fn one(order: u32) -> Self {
        Self::from_rational(order, BigRational::one())
    }

    pub fn from_rational(order: u32, q: BigRational) -> Self {
        let mut c = Self::zero(order);
        c.coeffs[0] = q;
        c
    }

    pub fn from_integer(order: u32, k: i64) -> Self {
        Self::from_rational(order, BigRational::from_integer(BigInt::from(k)))
    }

    /// zeta_order^index.
    pub fn root(order: u32, index: i64) -> Self {
        assert!(order >= 1);
        let idx = index.rem_euclid(order as i64) as usize;
        let mut raw = vec![BigRational::zero(); idx + 1];
        raw[idx] = BigRational::one();
        Cyclotomic {
            order,
            coeffs: reduce(order, raw),
        }
    }

    /// Build sum_i q_i * zeta_order^{e_i}.
    pub fn from_terms(order: u32, terms: &[(BigRational, i64)]) -> Self {
        let n = order as usize;
        let mut raw = vec![BigRational::zero(); n];
        for (q, e) in terms {
            let idx = e.rem_euclid(order as i64) as usize;
            raw[idx] += q;
        }
        Cyclotomic {
            order,
            coeffs: reduce(order, raw),
        }
    }

    /// Reinterpret in Q(zeta_m) for any multiple m of the current order.
    pub fn promote(&self, m: u32) -> Result<Self> {
        if m % self.order != 0 {
            return Err(Error::BasisMismatch(format!(
                "cannot embed Q(zeta_{}) into Q(zeta_{})",
                self.order, m
            )));
        }
        if m == self.order {
            return Ok(self.clone());
        }
        let scale = (m / self.order) as usize;
        let mut raw = vec![BigRational::zero(); m as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                raw[i * scale] += c;
            }
        }
        Ok(Cyclotomic {
            order: m,
            coeffs: reduce(m, raw),
        })
    }

    fn lift_pair(&self, other: &Self) -> (Self, Self) {
        if self.order == other.order {
            return (self.clone(), other.clone());
        }
        let m = lcm(self.order as u64, other.order as u64) as u32;
        (self.promote(m).unwrap(), other.promote(m).unwrap())
    }

    fn effective_len(&self) -> usize {
        self.coeffs
            .iter()
            .rposition(|c| !c.is_zero())
            .map(|i| i + 1)
            .unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().map(|q| q.is_one()).unwrap_or(false)
    }

    /// Some(q) when the value lies in Q.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        let q = self.as_rational()?;
        if q.is_integer() {
            Some(q.to_integer())
        } else {
            None
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let (mut a, b) = self.lift_pair(other);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs.iter()) {
            *x += y;
        }
        a
    }

    pub fn sub(&self, other: &Self) -> Self {
        let (mut a, b) = self.lift_pair(other);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs.iter()) {
            *x -= y;
        }
        a
    }

    pub fn neg(&self) -> Self {
        let mut a = self.clone();
        for c in a.coeffs.iter_mut() {
            *c = -c.clone();
        }
        a
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = self.lift_pair(other);
        let da = a.effective_len();
        let db = b.effective_len();
        if da == 0 || db == 0 {
            return Self::zero(a.order);
        }
        // Scalar fast path: most character-table entries are rational.
        if da == 1 {
            let mut out = b.clone();
            for c in out.coeffs.iter_mut() {
                *c *= &a.coeffs[0];
            }
            return out;
        }
        if db == 1 {
            let mut out = a.clone();
            for c in out.coeffs.iter_mut() {
                *c *= &b.coeffs[0];
            }
            return out;
        }
        let mut raw = vec![BigRational::zero(); da + db - 1];
        for i in 0..da {
            if a.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..db {
                if b.coeffs[j].is_zero() {
                    continue;
                }
                raw[i + j] += &a.coeffs[i] * &b.coeffs[j];
            }
        }
        Cyclotomic {
            order: a.order,
            coeffs: reduce(a.order, raw),
        }
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        let mut out = self.clone();
        for c in out.coeffs.iter_mut() {
            *c *= q;
        }
        out
    }

    /// Exact division by a nonzero rational.
    pub fn div_rational(&self, q: &BigRational) -> Self {
        assert!(!q.is_zero());
        let inv = q.recip();
        self.scale(&inv)
    }

    /// Complex conjugate (zeta -> zeta^{-1}).
    pub fn conj(&self) -> Self {
        let n = self.order as usize;
        let mut raw = vec![BigRational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                raw[(n - i) % n] += c;
            }
        }
        Cyclotomic {
            order: self.order,
            coeffs: reduce(self.order, raw),
        }
    }

    /// |x|^2 = x * conj(x); real, but returned as a cyclotomic since it is
    /// only rational when x is an algebraic number of special shape.
    pub fn norm_sq(&self) -> Self {
        self.mul(&self.conj())
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.order);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    pub fn to_complex(&self) -> Complex64 {
        let n = self.order as f64;
        let mut z = Complex64::new(0.0, 0.0);
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let q = c.to_f64().unwrap_or(f64::NAN);
            let theta = 2.0 * std::f64::consts::PI * (i as f64) / n;
            z += Complex64::new(q * theta.cos(), q * theta.sin());
        }
        z
    }

    /// Parse a cyclotomic literal: a signed sum of terms, each a rational,
    /// a root `zN^e`, or a product `q*zN^e`. Example: `1/2-1/2*z12^2+z3^1`.
    pub fn parse(input: &str) -> Result<Self> {
        let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse {
                what: "cyclotomic literal",
                detail: "empty input".into(),
            });
        }
        let bad = |detail: String| Error::Parse {
            what: "cyclotomic literal",
            detail,
        };
        // Split into signed terms.
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        let mut first = true;
        for ch in s.chars() {
            if (ch == '+' || ch == '-') && !first && !cur.ends_with('^') && !cur.is_empty() {
                terms.push((neg, std::mem::take(&mut cur)));
                neg = ch == '-';
            } else if (ch == '+' || ch == '-') && cur.is_empty() {
                if ch == '-' {
                    neg = !neg;
                }
            } else {
                cur.push(ch);
            }
            first = false;
        }
        if cur.is_empty() {
            return Err(bad("dangling sign".into()));
        }
        terms.push((neg, cur));

        let parse_rat = |t: &str| -> Result<BigRational> {
            let mk = |v: &str| -> Result<BigInt> {
                v.parse::<BigInt>().map_err(|_| bad(format!("bad integer `{v}`")))
            };
            if let Some((a, b)) = t.split_once('/') {
                let den = mk(b)?;
                if den.is_zero() {
                    return Err(bad("zero denominator".into()));
                }
                Ok(BigRational::new(mk(a)?, den))
            } else {
                Ok(BigRational::from_integer(mk(t)?))
            }
        };
        let parse_root = |t: &str| -> Result<(u32, i64)> {
            let body = &t[1..];
            let (ord, exp) = match body.split_once('^') {
                Some((o, e)) => (o, Some(e)),
                None => (body, None),
            };
            let order: u32 = ord
                .parse()
                .map_err(|_| bad(format!("bad root order in `{t}`")))?;
            if order == 0 {
                return Err(bad("root order must be >= 1".into()));
            }
            let exp: i64 = match exp {
                Some(e) => e
                    .parse()
                    .map_err(|_| bad(format!("bad root exponent in `{t}`")))?,
                None => 1,
            };
            Ok((order, exp))
        };

        // (coefficient, order, exponent); rational terms get order 1.
        let mut parsed: Vec<(BigRational, u32, i64)> = Vec::new();
        for (neg, t) in terms {
            let (coeff, root) = if let Some((c, r)) = t.split_once('*') {
                if !r.starts_with('z') {
                    return Err(bad(format!("expected root after `*` in `{t}`")));
                }
                (parse_rat(c)?, Some(parse_root(r)?))
            } else if t.starts_with('z') {
                (BigRational::one(), Some(parse_root(&t)?))
            } else {
                (parse_rat(&t)?, None)
            };
            let coeff = if neg { -coeff } else { coeff };
            match root {
                Some((o, e)) => parsed.push((coeff, o, e)),
                None => parsed.push((coeff, 1, 0)),
            }
        }
        let order = parsed
            .iter()
            .fold(1u64, |acc, (_, o, _)| lcm(acc, *o as u64)) as u32;
        let mut acc = Self::zero(order);
        for (q, o, e) in parsed {
            let scaled_exp = (order / o) as i64 * e;
            acc = acc.add(&Self::from_terms(order, &[(q, scaled_exp)]));
        }
        Ok(acc)
    }
}

fn reduce(order: u32, mut raw: Vec<BigRational>) -> Vec<BigRational> {
    let n = order as usize;
    // Fold exponents mod n first.
    if raw.len() > n {
        for i in n..raw.len() {
            let c = raw[i].clone();
            if !c.is_zero() {
                raw[i % n] += c;
            }
        }
        raw.truncate(n);
    }
    let ph = phi(order) as usize;
    if raw.len() > ph {
        let poly = cyclotomic_poly(order);
        for i in (ph..raw.len()).rev() {
            let c = raw[i].clone();
            if c.is_zero() {
                continue;
            }
            // subtract c * x^{i-ph} * Phi_n (monic of degree ph)
            for (j, pj) in poly.iter().enumerate().take(ph) {
                if !pj.is_zero() {
                    raw[i - ph + j] -= &c * BigRational::from_integer(pj.clone());
                }
            }
            raw[i] = BigRational::zero();
        }
        raw.truncate(ph);
    }
    raw.resize(ph, BigRational::zero());
    raw
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.lift_pair(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if i == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "z{}^{}", self.order, i)?;
            } else {
                write!(f, "{mag}*z{}^{}", self.order, i)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyc({})", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(a: i64, b: i64) -> BigRational {
        BigRational::new(BigInt::from(a), BigInt::from(b))
    }

    #[test]
    fn phi_and_poly_basics() {
        assert_eq!(phi(1), 1);
        assert_eq!(phi(12), 4);
        assert_eq!(phi(24), 8);
        assert_eq!(phi(21), 12);
        // Phi_6 = x^2 - x + 1
        let p6 = cyclotomic_poly(6);
        let want: Vec<BigInt> = [1, -1, 1].iter().map(|&k| BigInt::from(k)).collect();
        assert_eq!(*p6, want);
        // Phi_12 = x^4 - x^2 + 1
        let p12 = cyclotomic_poly(12);
        let want: Vec<BigInt> = [1, 0, -1, 0, 1].iter().map(|&k| BigInt::from(k)).collect();
        assert_eq!(*p12, want);
    }

    #[test]
    fn root_arithmetic() {
        let z = Cyclotomic::root(6, 1);
        assert_eq!(z.mul(&z), Cyclotomic::root(6, 2));
        assert_eq!(z.pow(6), Cyclotomic::one(6));
        assert_eq!(Cyclotomic::root(6, 3), Cyclotomic::from_integer(6, -1));
        // zeta_6 = zeta_6^2 + 1 (from Phi_6)
        assert_eq!(z, Cyclotomic::root(6, 2).add(&Cyclotomic::one(6)));
    }

    #[test]
    fn all_roots_sum_to_zero() {
        for n in [2u32, 3, 4, 6, 7, 8, 12, 21, 24] {
            let mut s = Cyclotomic::zero(n);
            for k in 0..n {
                s = s.add(&Cyclotomic::root(n, k as i64));
            }
            assert!(s.is_zero(), "sum of mu_{n} not zero: {s}");
        }
    }

    #[test]
    fn cross_order_equality() {
        assert_eq!(Cyclotomic::root(6, 1), Cyclotomic::root(12, 2));
        assert_eq!(Cyclotomic::root(2, 1), Cyclotomic::root(8, 4));
        assert_ne!(Cyclotomic::root(8, 1), Cyclotomic::root(12, 1));
    }

    #[test]
    fn conjugation() {
        let z = Cyclotomic::root(24, 5);
        assert_eq!(z.conj(), Cyclotomic::root(24, 19));
        assert_eq!(z.mul(&z.conj()), Cyclotomic::one(24));
        // sqrt(-2) = z8 + z8^3, |sqrt(-2)|^2 = 2
        let s = Cyclotomic::root(8, 1).add(&Cyclotomic::root(8, 3));
        assert_eq!(s.norm_sq(), Cyclotomic::from_integer(8, 2));
        assert_eq!(s.mul(&s), Cyclotomic::from_integer(8, -2));
    }

    #[test]
    fn rational_detection() {
        let z = Cyclotomic::root(3, 1).add(&Cyclotomic::root(3, 2));
        assert_eq!(z.as_integer(), Some(BigInt::from(-1)));
        assert!(Cyclotomic::root(3, 1).as_rational().is_none());
    }

    #[test]
    fn parse_and_display_round_trip() {
        for text in [
            "1",
            "-2/3",
            "z24^7",
            "1/2 - 1/2*z12^2 + z12^3",
            "1+z3^1+z3^2",
            "-z8^1 - z8^3",
            "2*z7^3 + z7",
        ] {
            let v = Cyclotomic::parse(text).unwrap();
            let again = Cyclotomic::parse(&v.to_string()).unwrap();
            assert_eq!(v, again, "round trip failed for `{text}`");
        }
        assert!(Cyclotomic::parse("1+z3^1+z3^2").unwrap().is_zero());
        assert_eq!(
            Cyclotomic::parse("1/2-1/2").unwrap(),
            Cyclotomic::zero(1)
        );
        assert!(Cyclotomic::parse("z0^1").is_err());
        assert!(Cyclotomic::parse("1/0").is_err());
        assert!(Cyclotomic::parse("").is_err());
    }

    #[test]
    fn complex_embedding_matches() {
        let z = Cyclotomic::parse("1/2 + z12^2 - 2*z12^5").unwrap();
        let c = z.to_complex();
        let pi = std::f64::consts::PI;
        let want = Complex64::new(0.5, 0.0)
            + Complex64::from_polar(1.0, 2.0 * pi * 2.0 / 12.0)
            - Complex64::from_polar(2.0, 2.0 * pi * 5.0 / 12.0);
        assert!((c - want).norm() < 1e-12);
        assert_eq!(
            Cyclotomic::from_rational(4, rat(3, 2)).as_rational(),
            Some(rat(3, 2))
        );
    }
}
