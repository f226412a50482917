//! Exponent arithmetic for tame fundamental characters.
//!
//! A character of tame inertia of niveau `d` is a power `ω_d^v` of the
//! fundamental character, with `v` taken modulo `e = p^d - 1`. Raising to the
//! `p`-th power (Frobenius conjugation) multiplies the exponent by `p`, so the
//! isomorphism class of `ψ ⊕ ψ^p ⊕ … ⊕ ψ^{p^{d-1}}` is a Frobenius orbit of
//! exponents.

use std::fmt;

use crate::error::{Error, Result};

/// A prime `p >= 5`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(i64);

impl Prime {
    pub fn new(p: i64) -> Result<Self> {
        if p >= 5 && is_prime(p) {
            Ok(Prime(p))
        } else {
            Err(Error::InvalidPrime(p))
        }
    }

    #[inline]
    pub fn get(self) -> i64 {
        self.0
    }

    /// `p^k`.
    #[inline]
    pub fn pow(self, k: u32) -> i64 {
        self.0.pow(k)
    }

    /// `e = p^d - 1`, the order of the group of niveau-`d` exponents.
    #[inline]
    pub fn modulus(self, d: u32) -> i64 {
        self.0.pow(d) - 1
    }

    /// `p^2 + p + 1`.
    #[inline]
    pub fn norm3(self) -> i64 {
        self.0 * self.0 + self.0 + 1
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn is_prime(n: i64) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2;
    while k * k <= n {
        if n % k == 0 {
            return false;
        }
        k += 1;
    }
    true
}

fn check_niveau(d: u32) -> Result<()> {
    if (1..=3).contains(&d) {
        Ok(())
    } else {
        Err(Error::InvalidNiveau(d))
    }
}

/// Multiply `v` by `p^k` modulo `e`.
#[inline]
pub(crate) fn frob_pow(v: i64, p: i64, k: u32, e: i64) -> i64 {
    let mut v = v;
    for _ in 0..k {
        v = (v * p) % e;
    }
    v
}

/// The exponent of `ω_d^value`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExpClass {
    p: Prime,
    d: u32,
    value: i64,
}

impl ExpClass {
    /// Builds the class of `value` modulo `p^d - 1`; any integer is accepted.
    pub fn new(p: Prime, d: u32, value: i64) -> Result<Self> {
        check_niveau(d)?;
        Ok(Self::reduced(p, d, value))
    }

    pub(crate) fn reduced(p: Prime, d: u32, value: i64) -> Self {
        let e = p.modulus(d);
        ExpClass {
            p,
            d,
            value: value.rem_euclid(e),
        }
    }

    pub fn p(&self) -> Prime {
        self.p
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn value(&self) -> i64 {
        self.value
    }

    pub fn modulus(&self) -> i64 {
        self.p.modulus(self.d)
    }

    /// Rewrites the character with respect to `ω_{target}`, using
    /// `ω_d = ω_target^{(p^target - 1)/(p^d - 1)}`. Requires `d | target`.
    pub fn embed_niveau(self, target_d: u32) -> Result<ExpClass> {
        check_niveau(target_d)?;
        if !target_d.is_multiple_of(self.d) {
            return Err(Error::InvalidEmbedding {
                from: self.d,
                to: target_d,
            });
        }
        let factor = self.p.modulus(target_d) / self.modulus();
        Ok(ExpClass::reduced(self.p, target_d, self.value * factor))
    }

    /// Frobenius conjugate `ψ ↦ ψ^p`.
    pub fn frobenius(self) -> ExpClass {
        ExpClass::reduced(self.p, self.d, self.value * self.p.get())
    }

    pub fn orbit(self) -> FrobOrbit {
        FrobOrbit::of(self)
    }

    /// The true niveau of the character, i.e. the size of its Frobenius orbit.
    pub fn niveau(self) -> u32 {
        self.orbit().size()
    }

    /// Product of characters.
    pub fn times(self, other: ExpClass) -> Result<ExpClass> {
        if self.p != other.p {
            return Err(Error::PrimeMismatch(self.p.get(), other.p.get()));
        }
        let d = self.d.max(other.d);
        let a = self.embed_niveau(d)?;
        let b = other.embed_niveau(d)?;
        Ok(ExpClass::reduced(self.p, d, a.value + b.value))
    }

    /// Inverse character.
    pub fn inverse(self) -> ExpClass {
        ExpClass::reduced(self.p, self.d, -self.value)
    }

    /// `ψ^{1 + p + … + p^{d-1}}` as an exponent of `ω = ω_1`.
    pub fn norm(self) -> ExpClass {
        let e = self.modulus();
        let factor = e / (self.p.get() - 1);
        let v = (self.value * factor) % e;
        debug_assert_eq!(v % factor, 0);
        ExpClass::reduced(self.p, 1, v / factor)
    }
}

impl fmt::Display for ExpClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ω_{}^{}", self.d, self.value)
    }
}

/// A Frobenius orbit `{v·p^i mod (p^d - 1)}`, identified by its least member.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FrobOrbit {
    p: Prime,
    d: u32,
    rep: i64,
    size: u32,
}

impl FrobOrbit {
    pub fn of(c: ExpClass) -> FrobOrbit {
        let e = c.modulus();
        let p = c.p.get();
        let mut rep = c.value;
        let mut size = c.d;
        let mut v = c.value;
        for i in 1..c.d {
            v = (v * p) % e;
            if v == c.value {
                size = i;
                break;
            }
            rep = rep.min(v);
        }
        FrobOrbit {
            p: c.p,
            d: c.d,
            rep,
            size,
        }
    }

    pub fn from_rep(p: Prime, d: u32, value: i64) -> Result<FrobOrbit> {
        Ok(ExpClass::new(p, d, value)?.orbit())
    }

    pub fn p(&self) -> Prime {
        self.p
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn rep(&self) -> i64 {
        self.rep
    }

    pub fn size(&self) -> u32 {
        self.size
    }

    pub fn rep_class(&self) -> ExpClass {
        ExpClass {
            p: self.p,
            d: self.d,
            value: self.rep,
        }
    }

    /// Members in Frobenius order starting from the representative.
    pub fn members(&self) -> Vec<i64> {
        let e = self.p.modulus(self.d);
        (0..self.size)
            .map(|i| frob_pow(self.rep, self.p.get(), i, e))
            .collect()
    }

    pub fn contains(&self, value: i64) -> bool {
        let v = value.rem_euclid(self.p.modulus(self.d));
        self.members().contains(&v)
    }
}

impl fmt::Display for FrobOrbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let members = self
            .members()
            .iter()
            .map(|m| m.to_string())
            .collect::<Vec<_>>()
            .join(",");
        write!(f, "{{{}}} mod {}", members, self.p.modulus(self.d))
    }
}

/// The two digit shapes an integer not divisible by `p^2 + p + 1` can take.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Decomposition {
    /// `p^2 + p + 1` divides `n`.
    Divisible,
    /// `n = x + p·y + p^2·z` with `x > y >= z` and `x - z <= p`.
    CaseI(i64, i64, i64),
    /// `n = p^2·x + p·y + z` with `x >= y > z` and `x - z <= p`.
    CaseII(i64, i64, i64),
}

impl Decomposition {
    /// The integer the decomposition represents (zero for `Divisible`).
    pub fn value(&self, p: Prime) -> Option<i64> {
        let p = p.get();
        match *self {
            Decomposition::Divisible => None,
            Decomposition::CaseI(x, y, z) => Some(x + p * y + p * p * z),
            Decomposition::CaseII(x, y, z) => Some(p * p * x + p * y + z),
        }
    }
}

/// Writes `n` in one of the two digit shapes of [`Decomposition`].
///
/// The residue `r = n mod (p^2+p+1)` is handled by writing `r - 1` in base
/// `p + 1`; the quotient then shifts all three digits.
pub fn decompose(n: i64, p: Prime) -> Decomposition {
    let norm = p.norm3();
    let p = p.get();
    let q = n.div_euclid(norm);
    let r = n.rem_euclid(norm);
    if r == 0 {
        return Decomposition::Divisible;
    }
    let alpha = (r - 1) / (p + 1);
    let beta = (r - 1) % (p + 1);
    if alpha + beta < p {
        Decomposition::CaseI(alpha + beta + 1 + q, alpha + q, q)
    } else {
        Decomposition::CaseII(1 + q, alpha + 2 - p + q, alpha + beta + 1 - 2 * p + q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: i64) -> Prime {
        Prime::new(n).unwrap()
    }

    #[test]
    fn rejects_small_or_composite_primes() {
        assert!(Prime::new(3).is_err());
        assert!(Prime::new(9).is_err());
        assert!(Prime::new(25).is_err());
        assert!(Prime::new(29).is_ok());
    }

    #[test]
    fn character_products() {
        let c1 = ExpClass::new(p(7), 1, 2).unwrap();
        let c3 = ExpClass::new(p(7), 3, 5).unwrap();
        let prod = c1.times(c3).unwrap();
        assert_eq!((prod.d(), prod.value()), (3, 5 + 2 * 57));
        assert_eq!(c3.times(c3.inverse()).unwrap().value(), 0);
        let other = ExpClass::new(p(11), 1, 1).unwrap();
        assert!(c1.times(other).is_err());
    }

    #[test]
    fn embed_examples() {
        let c = |v| ExpClass::new(p(7), 1, v).unwrap();
        assert_eq!(c(0).embed_niveau(3).unwrap().value(), 0);
        assert_eq!(c(1).embed_niveau(3).unwrap().value(), 57);
        assert_eq!(c(6).embed_niveau(3).unwrap().value(), 0);
        assert!(c(1).embed_niveau(4).is_err());
        let two = ExpClass::new(p(7), 2, 3).unwrap();
        assert!(matches!(
            two.embed_niveau(3),
            Err(Error::InvalidEmbedding { from: 2, to: 3 })
        ));
    }

    #[test]
    fn omega_57_restricts_to_omega() {
        // ω_3^57 has norm ω^(57·57/57) and is Frobenius-fixed.
        let c = ExpClass::new(p(7), 3, 57).unwrap();
        assert_eq!(c.frobenius(), c);
        assert_eq!(c.norm().value(), 3);
    }

    #[test]
    fn orbit_examples() {
        let o = ExpClass::new(p(7), 3, 10).unwrap().orbit();
        assert_eq!(o.rep(), 10);
        assert_eq!(o.members(), vec![10, 70, 148]);
        let z = ExpClass::new(p(7), 3, 0).unwrap().orbit();
        assert_eq!((z.rep(), z.size()), (0, 1));
        assert_eq!(ExpClass::new(p(7), 3, 70).unwrap().orbit().rep(), 10);
        assert_eq!(ExpClass::new(p(7), 3, 148).unwrap().orbit(), o);
    }

    #[test]
    fn niveau_examples() {
        let n = |v| ExpClass::new(p(7), 3, v).unwrap().niveau();
        assert_eq!(n(57), 1);
        assert_eq!(n(10), 3);
        assert_eq!(n(0), 1);
    }

    #[test]
    fn niveau_two_orbits() {
        // p^2 - 1 = 48 at p = 7; 8 = 48/6 is ω itself.
        let c = ExpClass::new(p(7), 2, 8).unwrap();
        assert_eq!(c.niveau(), 1);
        assert_eq!(ExpClass::new(p(7), 2, 1).unwrap().niveau(), 2);
    }

    #[test]
    fn decompose_examples() {
        assert_eq!(decompose(0, p(7)), Decomposition::Divisible);
        assert_eq!(decompose(57, p(7)), Decomposition::Divisible);
        assert_eq!(decompose(10, p(7)), Decomposition::CaseI(3, 1, 0));
        assert_eq!(decompose(-57, p(7)), Decomposition::Divisible);
    }

    #[test]
    fn decompose_shift_by_norm() {
        let q = p(11);
        for n in -300..300 {
            let d = decompose(n, q);
            let shifted = decompose(n + q.norm3(), q);
            match (d, shifted) {
                (Decomposition::Divisible, Decomposition::Divisible) => {}
                (Decomposition::CaseI(x, y, z), Decomposition::CaseI(a, b, c))
                | (Decomposition::CaseII(x, y, z), Decomposition::CaseII(a, b, c)) => {
                    assert_eq!((a, b, c), (x + 1, y + 1, z + 1))
                }
                other => panic!("shape changed under shift: {other:?}"),
            }
            if let Some(v) = d.value(q) {
                assert_eq!(v, n);
            }
        }
    }
}
