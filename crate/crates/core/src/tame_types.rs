//! Tame inertial types of dimension three.
//!
//! A type is a Frobenius-stable multiset of three tame characters. It is
//! stored at the smallest niveau over which all three characters are defined,
//! with exponents sorted, so that isomorphism is plain equality.

use std::fmt;

use crate::arith::{ExpClass, FrobOrbit, Prime};
use crate::error::{Error, Result};

/// One of the two order-three permutations of `{1, 2, 3}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OrderThreePerm {
    /// `(1 2 3)`
    Xi123,
    /// `(1 3 2)`
    Xi132,
}

impl OrderThreePerm {
    pub const ALL: [OrderThreePerm; 2] = [OrderThreePerm::Xi123, OrderThreePerm::Xi132];

    pub fn inverse(self) -> OrderThreePerm {
        match self {
            OrderThreePerm::Xi123 => OrderThreePerm::Xi132,
            OrderThreePerm::Xi132 => OrderThreePerm::Xi123,
        }
    }

    /// `Σ_i μ_{ξ^i(1)} p^i`, not reduced.
    pub fn exponent(self, mu: (i64, i64, i64), p: Prime) -> i64 {
        let p = p.get();
        match self {
            OrderThreePerm::Xi123 => mu.0 + p * mu.1 + p * p * mu.2,
            OrderThreePerm::Xi132 => mu.0 + p * mu.2 + p * p * mu.1,
        }
    }
}

impl fmt::Display for OrderThreePerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderThreePerm::Xi123 => "(1 2 3)",
            OrderThreePerm::Xi132 => "(1 3 2)",
        })
    }
}

/// A three-dimensional tame inertial type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TameType {
    p: Prime,
    d: u32,
    exps: [i64; 3],
}

fn lcm_niveau(a: u32, b: u32) -> Result<u32> {
    let l = a * b / gcd(a, b);
    if l <= 3 {
        Ok(l)
    } else {
        Err(Error::InvalidEmbedding { from: a, to: b })
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl TameType {
    /// Builds a type from three exponents of `ω_d`.
    pub fn from_exponents(p: Prime, d: u32, exps: [i64; 3]) -> Result<TameType> {
        let classes = [
            ExpClass::new(p, d, exps[0])?,
            ExpClass::new(p, d, exps[1])?,
            ExpClass::new(p, d, exps[2])?,
        ];
        let mut vals = classes.map(|c| c.value());
        vals.sort_unstable();
        let mut frob = classes.map(|c| c.frobenius().value());
        frob.sort_unstable();
        if frob != vals {
            return Err(Error::NotFrobeniusStable(vals.to_vec()));
        }
        let mut true_d = 1;
        for c in &classes {
            true_d = lcm_niveau(true_d, c.niveau())?;
        }
        // Exponents whose niveau divides `true_d` are multiples of this factor.
        let factor = p.modulus(d) / p.modulus(true_d);
        let mut reduced = vals.map(|v| v / factor);
        reduced.sort_unstable();
        Ok(TameType {
            p,
            d: true_d,
            exps: reduced,
        })
    }

    /// Builds a type from three characters of possibly different niveaus.
    pub fn from_chars(chars: [ExpClass; 3]) -> Result<TameType> {
        let p = chars[0].p();
        if let Some(c) = chars.iter().find(|c| c.p() != p) {
            return Err(Error::PrimeMismatch(p.get(), c.p().get()));
        }
        let mut d = 1;
        for c in &chars {
            d = lcm_niveau(d, c.d())?;
        }
        let e0 = chars[0].embed_niveau(d)?.value();
        let e1 = chars[1].embed_niveau(d)?.value();
        let e2 = chars[2].embed_niveau(d)?.value();
        TameType::from_exponents(p, d, [e0, e1, e2])
    }

    /// `ψ ⊕ ψ^p ⊕ ψ^{p^2}` for a character `ψ` of niveau dividing 3.
    pub fn induced(psi: ExpClass) -> Result<TameType> {
        let psi = psi.embed_niveau(3)?;
        let a = psi.value();
        let b = psi.frobenius().value();
        let c = psi.frobenius().frobenius().value();
        TameType::from_exponents(psi.p(), 3, [a, b, c])
    }

    /// `τ(ξ, μ) = ψ ⊕ ψ^p ⊕ ψ^{p^2}` with `ψ = ω_3^{Σ μ_{ξ^i(1)} p^i}`.
    pub fn tau(xi: OrderThreePerm, mu: (i64, i64, i64), p: Prime) -> TameType {
        let psi = ExpClass::reduced(p, 3, xi.exponent(mu, p));
        TameType::induced(psi).expect("a niveau 3 character always induces a valid type")
    }

    /// The irreducible type attached to a niveau-3 orbit representative.
    pub fn irreducible(p: Prime, rep: i64) -> Result<TameType> {
        let t = TameType::induced(ExpClass::new(p, 3, rep)?)?;
        if t.is_irreducible() {
            Ok(t)
        } else {
            Err(Error::NotIrreducible)
        }
    }

    pub fn p(&self) -> Prime {
        self.p
    }

    /// The smallest niveau over which all three characters are defined.
    pub fn niveau(&self) -> u32 {
        self.d
    }

    /// Sorted exponents of `ω_{niveau}`.
    pub fn exponents(&self) -> [i64; 3] {
        self.exps
    }

    /// Sorted exponents rewritten with respect to `ω_d`; `niveau` must divide `d`.
    pub fn exponents_at(&self, d: u32) -> Result<[i64; 3]> {
        let mut out = [0; 3];
        for (o, &v) in out.iter_mut().zip(&self.exps) {
            *o = ExpClass::reduced(self.p, self.d, v).embed_niveau(d)?.value();
        }
        out.sort_unstable();
        Ok(out)
    }

    pub fn is_irreducible(&self) -> bool {
        self.d == 3
    }

    /// The Frobenius orbit of `ψ` for an irreducible type.
    pub fn psi_orbit(&self) -> Result<FrobOrbit> {
        if !self.is_irreducible() {
            return Err(Error::NotIrreducible);
        }
        Ok(ExpClass::reduced(self.p, 3, self.exps[0]).orbit())
    }

    /// Distinct Frobenius orbits occurring in the type.
    pub fn orbits(&self) -> Vec<FrobOrbit> {
        let mut out: Vec<FrobOrbit> = self
            .exps
            .iter()
            .map(|&v| ExpClass::reduced(self.p, self.d, v).orbit())
            .collect();
        out.sort();
        out.dedup();
        out
    }

    pub fn iso(&self, other: &TameType) -> bool {
        self == other
    }

    /// `t^∨ ⊗ ε^k`, with `ε` restricted to inertia equal to `ω`.
    pub fn dual_twist(&self, k: i64) -> TameType {
        let shift = k * (self.p.modulus(self.d) / (self.p.get() - 1));
        TameType::from_exponents(self.p, self.d, self.exps.map(|v| shift - v))
            .expect("dual twist of a stable multiset is stable")
    }
}

impl fmt::Display for TameType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.d;
        let body = self
            .exps
            .iter()
            .map(|v| format!("ω_{d}^{v}"))
            .collect::<Vec<_>>()
            .join(" ⊕ ");
        write!(f, "{body}")
    }
}

/// Outcome of comparing `τ(ξ, (a, b, c))` with `τ(ξ', (x, y, z))` over all
/// four choices of `(ξ, ξ')`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Distinction {
    /// Some pair is isomorphic, and every isomorphic pair has `ξ = ξ'` and
    /// equal parameters. Lists the `ξ` for which this happens.
    Forced(Vec<OrderThreePerm>),
    NotIsomorphic,
    /// An isomorphism that does not force equality; the listed pairs are
    /// the isomorphic ones.
    Counterexample(Vec<(OrderThreePerm, OrderThreePerm)>),
    HypothesisViolated,
}

/// Decides isomorphism of `τ(ξ, (a, b, c))` and `τ(ξ', (x, y, z))` for all
/// `ξ, ξ'` under the hypotheses `a > b > c`, `x > y > z`, `a - c <= p`,
/// `x - z <= p` and equal sums.
pub fn distinguish(abc: (i64, i64, i64), xyz: (i64, i64, i64), p: Prime) -> Distinction {
    let (a, b, c) = abc;
    let (x, y, z) = xyz;
    let q = p.get();
    let ok = a > b && b > c && a - c <= q && x > y && y > z && x - z <= q;
    if !ok || a + b + c != x + y + z {
        return Distinction::HypothesisViolated;
    }
    let mut pairs = Vec::new();
    for xi in OrderThreePerm::ALL {
        for xi2 in OrderThreePerm::ALL {
            if TameType::tau(xi, abc, p).iso(&TameType::tau(xi2, xyz, p)) {
                pairs.push((xi, xi2));
            }
        }
    }
    if pairs.is_empty() {
        Distinction::NotIsomorphic
    } else if pairs.iter().all(|&(u, v)| u == v) && abc == xyz {
        Distinction::Forced(pairs.into_iter().map(|(u, _)| u).collect())
    } else {
        Distinction::Counterexample(pairs)
    }
}

/// Checks that `(a_j - a_l)/p` is congruent modulo `e = p^d - 1` to an element
/// of the open interval `(er/(p-1), e(p-1-r)/(p-1))` for all `j != l`.
///
/// Division by `p` is taken in `Z/e`, where `p` is invertible with inverse
/// `p^{d-1}`, so no divisibility of the inputs is required.
pub fn irreducibility_interval_condition(a: &[i64], p: Prime, d: u32, r: i64) -> Result<bool> {
    if !(1..=3).contains(&d) {
        return Err(Error::InvalidNiveau(d));
    }
    let q = p.get();
    if r < 0 || 2 * r >= q - 1 {
        return Err(Error::Hypothesis(format!(
            "r = {r} must satisfy 0 <= r < (p-1)/2"
        )));
    }
    let e = p.modulus(d);
    let p_inv = p.pow(d - 1);
    for (j, &aj) in a.iter().enumerate() {
        for (l, &al) in a.iter().enumerate() {
            if j == l {
                continue;
            }
            let v = ((aj - al).rem_euclid(e) * p_inv).rem_euclid(e);
            // Compare v against the bounds after clearing the denominator p-1.
            let scaled = v * (q - 1);
            if !(e * r < scaled && scaled < e * (q - 1 - r)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use OrderThreePerm::*;

    fn p(n: i64) -> Prime {
        Prime::new(n).unwrap()
    }

    #[test]
    fn tau_examples() {
        let t = TameType::tau(Xi123, (3, 1, 0), p(7));
        assert_eq!(t.exponents(), [10, 70, 148]);
        assert_eq!(t.psi_orbit().unwrap().rep(), 10);
        let u = TameType::tau(Xi132, (3, 1, 0), p(7));
        assert_eq!(u.exponents(), [22, 52, 154]);
        assert!(!t.iso(&u));
        let triv = TameType::tau(Xi123, (0, 0, 0), p(7));
        assert_eq!(triv.niveau(), 1);
        assert!(!triv.is_irreducible());
        assert_eq!(triv.exponents_at(3).unwrap(), [0, 0, 0]);
    }

    #[test]
    fn niveau_one_characters_embed_consistently() {
        let w = ExpClass::new(p(7), 1, 1).unwrap();
        let w3 = ExpClass::new(p(7), 3, 57).unwrap();
        let a = TameType::from_chars([w, w, w]).unwrap();
        let b = TameType::from_chars([w3, w, w3]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.niveau(), 1);
        let ps = TameType::from_chars([
            ExpClass::new(p(7), 1, 3).unwrap(),
            ExpClass::new(p(7), 1, 1).unwrap(),
            ExpClass::new(p(7), 1, 0).unwrap(),
        ])
        .unwrap();
        assert_eq!(ps.exponents(), [0, 1, 3]);
        assert_eq!(ps.orbits().len(), 3);
    }

    #[test]
    fn niveau_two_plus_one() {
        let q = p(7);
        let psi = ExpClass::new(q, 2, 5).unwrap();
        let chi = ExpClass::new(q, 1, 2).unwrap();
        let t = TameType::from_chars([psi, psi.frobenius(), chi]).unwrap();
        assert_eq!(t.niveau(), 2);
        assert_eq!(t.orbits().len(), 2);
        assert!(TameType::from_chars([psi, chi, chi]).is_err());
    }

    #[test]
    fn rejects_unstable_multisets() {
        assert!(matches!(
            TameType::from_exponents(p(7), 3, [10, 70, 149]),
            Err(Error::NotFrobeniusStable(_))
        ));
    }

    #[test]
    fn dual_twist_examples() {
        let triv = TameType::tau(Xi123, (0, 0, 0), p(7));
        assert_eq!(triv.dual_twist(2).exponents_at(3).unwrap(), [114; 3]);
        let q = p(29);
        let t = TameType::tau(Xi123, (17, 9, 0), q);
        assert_eq!(t.dual_twist(0), TameType::tau(Xi132, (0, -9, -17), q));
        assert_eq!(t.dual_twist(3).dual_twist(3), t);
    }

    #[test]
    fn distinguish_examples() {
        let q = p(7);
        assert_eq!(
            distinguish((5, 3, 1), (5, 3, 1), q),
            Distinction::Forced(vec![Xi123, Xi132])
        );
        assert_eq!(distinguish((5, 3, 1), (6, 3, 0), q), Distinction::NotIsomorphic);
        assert_eq!(
            distinguish((5, 3, 1), (5, 4, 1), q),
            Distinction::HypothesisViolated
        );
    }

    #[test]
    fn distinguishing_lemma_holds_exhaustively_at_7() {
        let q = p(7);
        let mut triples = Vec::new();
        for c in -3..10 {
            for b in c + 1..c + 8 {
                for a in b + 1..=c + 7 {
                    triples.push((a, b, c));
                }
            }
        }
        for &s in &triples {
            for &t in &triples {
                if s.0 + s.1 + s.2 != t.0 + t.1 + t.2 {
                    continue;
                }
                match distinguish(s, t, q) {
                    Distinction::Forced(_) => assert_eq!(s, t),
                    Distinction::NotIsomorphic => assert_ne!(s, t),
                    other => panic!("{s:?} {t:?}: {other:?}"),
                }
            }
        }
    }

    #[test]
    fn interval_condition_examples() {
        let q = p(17);
        let (a, b, c) = (10, 5, 0);
        let k = [
            a + 17 * b + 289 * c,
            b + 17 * c + 289 * a,
            c + 17 * a + 289 * b,
        ];
        let scaled: Vec<i64> = k.iter().map(|v| 17 * v).collect();
        assert!(irreducibility_interval_condition(&scaled, q, 3, 2).unwrap());
        assert!(!irreducibility_interval_condition(&[5, 5, 9], q, 3, 2).unwrap());
        assert!(irreducibility_interval_condition(&k, q, 3, 8).is_err());
    }

    #[test]
    fn interval_condition_excludes_boundary() {
        // p = 7, d = 3, r = 2: the interval is (2N, 4N) with N = 57, and both
        // v and -v = e - v have to land in it.
        let q = p(7);
        let n = q.norm3();
        let at = |v: i64| irreducibility_interval_condition(&[0, 7 * v], q, 3, 2).unwrap();
        assert!(at(3 * n));
        assert!(at(2 * n + 1));
        assert!(!at(2 * n));
        assert!(!at(4 * n));
        assert!(!at(n));
    }

    proptest! {
        #[test]
        fn tau_is_invariant_under_cyclic_shift(a in -60i64..60, b in -60i64..60, c in -60i64..60) {
            let q = p(29);
            for xi in OrderThreePerm::ALL {
                let t = TameType::tau(xi, (a, b, c), q);
                let shifted = match xi {
                    Xi123 => (c, a, b),
                    Xi132 => (b, c, a),
                };
                prop_assert_eq!(TameType::tau(xi, shifted, q), t);
            }
        }

        #[test]
        fn dual_of_tau(a in -60i64..60, b in -60i64..60, c in -60i64..60, k in -4i64..4) {
            let q = p(29);
            for xi in OrderThreePerm::ALL {
                let t = TameType::tau(xi, (a, b, c), q);
                prop_assert_eq!(t.dual_twist(0), TameType::tau(xi.inverse(), (-c, -b, -a), q));
                prop_assert_eq!(t.dual_twist(k).dual_twist(k), t);
                prop_assert_eq!(t.dual_twist(k), TameType::tau(xi.inverse(), (k - c, k - b, k - a), q));
            }
        }

        #[test]
        fn distinguishing_lemma_samples_at_29(
            c in -20i64..20, d1 in 1i64..15, d2 in 1i64..14,
            e1 in 1i64..15, e2 in 1i64..14,
        ) {
            let q = p(29);
            let s = (c + d1 + d2, c + d2, c);
            let rest = s.0 + s.1 + s.2 - e1 - 2 * e2;
            prop_assume!(rest % 3 == 0);
            let z = rest / 3;
            let t = (z + e1 + e2, z + e2, z);
            match distinguish(s, t, q) {
                Distinction::Forced(_) => prop_assert_eq!(s, t),
                Distinction::NotIsomorphic => prop_assert_ne!(s, t),
                Distinction::HypothesisViolated => {}
                other => prop_assert!(false, "{:?} {:?}: {:?}", s, t, other),
            }
        }
    }
}
