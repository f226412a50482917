//! Rank-one Breuil modules with tame descent data, and the candidate
//! reductions of potentially semistable lifts with Hodge–Tate weights
//! `-2, -1, 0` and a tame inertial type.
//!
//! A rank-one module over `F ⊗ k[u]/u^{ep}` with descent data from
//! `K = K_0((-p)^{1/e})`, `e = p^d - 1`, is determined up to the unit `λ` by
//! integers `0 <= r_i <= e·r` and residues `k_i` modulo `e` subject to
//! `k_i ≡ p(k_{i-1} + r_{i-1})`. The unit does not affect the inertial
//! character, so it is not stored.

use std::collections::BTreeSet;

use crate::arith::{ExpClass, FrobOrbit, Prime};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BreuilRankOne {
    p: Prime,
    d: u32,
    r: i64,
    r_i: Vec<i64>,
    k_i: Vec<i64>,
}

impl BreuilRankOne {
    /// Checks the ranges and the cyclic congruence. The `k_i` may be given as
    /// arbitrary integers and are reduced modulo `e`.
    pub fn validate(p: Prime, d: u32, r: i64, r_i: &[i64], k_i: &[i64]) -> Result<Self> {
        if !(1..=3).contains(&d) {
            return Err(Error::InvalidNiveau(d));
        }
        let q = p.get();
        if r < 0 || r > q - 2 {
            return Err(Error::InvalidBreuil(format!("r = {r} is not in [0, p-2]")));
        }
        let n = d as usize;
        if r_i.len() != n || k_i.len() != n {
            return Err(Error::InvalidBreuil(format!(
                "expected {n} values of r_i and k_i, got {} and {}",
                r_i.len(),
                k_i.len()
            )));
        }
        let e = p.modulus(d);
        if let Some((i, v)) = r_i.iter().enumerate().find(|(_, &v)| v < 0 || v > e * r) {
            return Err(Error::InvalidBreuil(format!(
                "r_{i} = {v} is not in [0, er] = [0, {}]",
                e * r
            )));
        }
        let k: Vec<i64> = k_i.iter().map(|v| v.rem_euclid(e)).collect();
        for i in 0..n {
            let prev = (i + n - 1) % n;
            let want = (q * (k[prev] + r_i[prev])).rem_euclid(e);
            if k[i] != want {
                return Err(Error::InvalidBreuil(format!(
                    "k_{i} = {} but p(k_{prev} + r_{prev}) = {want} mod {e}",
                    k[i]
                )));
            }
        }
        let m = BreuilRankOne {
            p,
            d,
            r,
            r_i: r_i.to_vec(),
            k_i: k,
        };
        // The cyclic congruence forces e | p·Σ r_j p^{d-1-j}.
        m.s(0)?;
        Ok(m)
    }

    pub fn p(&self) -> Prime {
        self.p
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn r_i(&self) -> &[i64] {
        &self.r_i
    }

    pub fn k_i(&self) -> &[i64] {
        &self.k_i
    }

    fn e(&self) -> i64 {
        self.p.modulus(self.d)
    }

    /// `s_i = p(r_i p^{d-1} + r_{i+1} p^{d-2} + … + r_{i+d-1}) / e`, indices mod `d`.
    pub fn s(&self, i: usize) -> Result<i64> {
        let n = self.d as usize;
        let q = self.p.get();
        let mut acc = 0i64;
        for j in 0..n {
            acc = acc * q + self.r_i[(i + j) % n];
        }
        let num = q * acc;
        if num % self.e() != 0 {
            return Err(Error::InvalidBreuil(format!(
                "p·Σ r_j p^(d-1-j) = {num} is not divisible by e = {}",
                self.e()
            )));
        }
        Ok(num / self.e())
    }

    /// `κ_0 = k_0 + s_0` modulo `e`: the restriction to inertia of the
    /// associated character is `σ_0 ∘ ω_d^{κ_0}`.
    pub fn inertial_character(&self) -> ExpClass {
        let s0 = self.s(0).expect("validated modules have integral s_0");
        ExpClass::reduced(self.p, self.d, self.k_i[0] + s0)
    }

    /// The model with `r_i = er` for all `i` and the same inertial character.
    pub fn maximal_model(&self) -> BreuilRankOne {
        let e = self.e();
        let q = self.p.get();
        let s = (self.inertial_character().value() - e * self.r / (q - 1)).rem_euclid(e);
        let n = self.d as usize;
        let mut k = Vec::with_capacity(n);
        let mut cur = s;
        for _ in 0..n {
            k.push(cur);
            cur = (cur * q) % e;
        }
        BreuilRankOne::validate(self.p, self.d, self.r, &vec![e * self.r; n], &k)
            .expect("maximal model satisfies the cyclic congruence")
    }

    pub fn is_maximal(&self) -> bool {
        let er = self.e() * self.r;
        self.r_i.iter().all(|&v| v == er)
    }

    pub fn is_minimal(&self) -> bool {
        self.r_i.iter().all(|&v| v == 0)
    }
}

/// Tame inertial types of `WD(ρ)` for which candidate reductions are listed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InertialTypeC0 {
    /// `ω̃^a ⊕ ω̃^b ⊕ ω̃^c`; the integers are sorted before use.
    PrincipalSeries(i64, i64, i64),
    /// `ω̃_3^{a+pb+p^2c}` and its conjugates.
    CuspidalFwd(i64, i64, i64),
    /// `ω̃_3^{c+pb+p^2a}` and its conjugates.
    CuspidalBwd(i64, i64, i64),
}

impl InertialTypeC0 {
    fn params(&self) -> (i64, i64, i64) {
        match *self {
            InertialTypeC0::PrincipalSeries(a, b, c) => {
                let mut v = [a, b, c];
                v.sort_unstable_by(|x, y| y.cmp(x));
                (v[0], v[1], v[2])
            }
            InertialTypeC0::CuspidalFwd(a, b, c) | InertialTypeC0::CuspidalBwd(a, b, c) => {
                (a, b, c)
            }
        }
    }
}

/// Possible Frobenius orbits of `ψ` with `ρ̄|_I ≅ ψ ⊕ ψ^p ⊕ ψ^{p^2}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionCandidates {
    pub p: Prime,
    pub orbits: BTreeSet<FrobOrbit>,
}

impl ReductionCandidates {
    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    pub fn contains(&self, o: &FrobOrbit) -> bool {
        self.orbits.contains(o)
    }

    pub fn intersection(&self, other: &ReductionCandidates) -> ReductionCandidates {
        ReductionCandidates {
            p: self.p,
            orbits: self.orbits.intersection(&other.orbits).copied().collect(),
        }
    }
}

const S1: [(i64, i64, i64); 3] = [(1, 1, 1), (1, 2, 0), (2, 1, 0)];
const S2: [(i64, i64, i64); 3] = [(0, 2, 1), (1, 1, 1), (1, 2, 0)];

/// Triples in `[0, 2]^3` with sum 3.
pub fn sum_three_triples() -> Vec<(i64, i64, i64)> {
    let mut out = Vec::new();
    for a0 in 0..=2 {
        for a1 in 0..=2 {
            let a2 = 3 - a0 - a1;
            if (0..=2).contains(&a2) {
                out.push((a0, a1, a2));
            }
        }
    }
    out
}

/// Candidate reductions of a potentially semistable lift with Hodge–Tate
/// weights `-2, -1, 0` and the given tame type, assuming `a - b > 2`,
/// `b - c > 2` and `a - c < p - 3`.
pub fn reduction_candidates(t: InertialTypeC0, p: Prime) -> Result<ReductionCandidates> {
    let (a, b, c) = t.params();
    let q = p.get();
    if !(a - b > 2 && b - c > 2 && a - c < q - 3) {
        return Err(Error::Hypothesis(format!(
            "({a},{b},{c}) needs a-b > 2, b-c > 2, a-c < p-3"
        )));
    }
    let digits = |x: i64, y: i64, z: i64| x + q * y + q * q * z;
    let mut exps = Vec::new();
    match t {
        InertialTypeC0::PrincipalSeries(..) => {
            for (a0, a1, a2) in S1 {
                exps.push(digits(a + a0, c + a2, b + a1));
                exps.push(digits(a + 2 - a2, b + 2 - a1, c + 2 - a0));
            }
        }
        InertialTypeC0::CuspidalFwd(..) => {
            for (a0, a1, a2) in S2 {
                exps.push(digits(a + a0, c + a2, b + a1));
            }
            for (a0, a1, a2) in sum_three_triples() {
                exps.push(digits(a + a0, b + a2, c + a1));
            }
        }
        InertialTypeC0::CuspidalBwd(..) => {
            for (a0, a1, a2) in S2 {
                exps.push(digits(c + 2 - a0, a + 2 - a2, b + 2 - a1));
            }
            for (a0, a1, a2) in sum_three_triples() {
                exps.push(digits(c + 2 - a0, b + 2 - a2, a + 2 - a1));
            }
        }
    }
    let orbits = exps
        .into_iter()
        .map(|v| ExpClass::reduced(p, 3, v).orbit())
        .collect();
    Ok(ReductionCandidates { p, orbits })
}
