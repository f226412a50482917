//! Deciding whether a weight can be modular for a given irreducible tame
//! type, using the reductions of crystalline or potentially semistable lifts.
//!
//! Weights with `x - z < p - 3` have Fontaine–Laffaille lifts, and the
//! reduction of those is read off directly. Weights with `x - y < p - 5`,
//! `y - z < p - 5` and `x - z > p + 1` have three potentially semistable lifts
//! with Hodge–Tate weights `-2, -1, 0`, and `ρ̄|_I` must be a candidate
//! reduction of all three. Other weights are not handled.

use crate::arith::{FrobOrbit, Prime};
use crate::breuil::{reduction_candidates, InertialTypeC0, ReductionCandidates};
use crate::error::{Error, Result};
use crate::tame_types::{OrderThreePerm, TameType};
use crate::weights::WeightClass;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    FontaineLaffaille,
    Intersection,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Consistent,
    Eliminated,
}

/// Candidate sets for the three lifts in the intersection branch.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionSets {
    pub principal_series: ReductionCandidates,
    pub cuspidal_fwd: ReductionCandidates,
    pub cuspidal_bwd: ReductionCandidates,
    pub intersection: ReductionCandidates,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EliminationReport {
    pub weight: WeightClass,
    pub branch: Branch,
    /// Orbits of `ψ` compatible with modularity of the weight.
    pub allowed: ReductionCandidates,
    /// Present in the intersection branch only.
    pub lifts: Option<IntersectionSets>,
    pub verdict: Verdict,
    pub matched: Option<FrobOrbit>,
}

pub fn branch_for(w: &WeightClass) -> Result<Branch> {
    if w.rank() != 3 {
        return Err(Error::InvalidRank(w.rank()));
    }
    let (x, y, z) = w.xyz();
    let q = w.p().get();
    if x - z < q - 3 {
        Ok(Branch::FontaineLaffaille)
    } else if x - y < q - 5 && y - z < q - 5 && x - z > q + 1 {
        Ok(Branch::Intersection)
    } else {
        Err(Error::Unsupported(format!(
            "{w} satisfies neither x-z < p-3 nor (x-y, y-z < p-5 and x-z > p+1)"
        )))
    }
}

fn orbits_of(p: Prime, exps: impl IntoIterator<Item = i64>) -> ReductionCandidates {
    ReductionCandidates {
        p,
        orbits: exps
            .into_iter()
            .map(|v| crate::arith::ExpClass::reduced(p, 3, v).orbit())
            .collect(),
    }
}

/// The three lifts' candidate sets and their intersection.
pub fn intersection_sets(w: &WeightClass) -> Result<IntersectionSets> {
    if branch_for(w)? != Branch::Intersection {
        return Err(Error::Hypothesis(format!(
            "{w} needs x-y < p-5, y-z < p-5 and x-z > p+1"
        )));
    }
    let p = w.p();
    let q = p.get();
    let (x, y, z) = w.xyz();
    let ps = reduction_candidates(InertialTypeC0::PrincipalSeries(y, x - q + 1, z), p)?;
    let fwd = reduction_candidates(InertialTypeC0::CuspidalFwd(y + 1, x - q + 1, z - 1), p)?;
    let bwd = reduction_candidates(InertialTypeC0::CuspidalBwd(x + 1, z + q - 1, y - 1), p)?;
    let intersection = ps.intersection(&fwd).intersection(&bwd);
    Ok(IntersectionSets {
        principal_series: ps,
        cuspidal_fwd: fwd,
        cuspidal_bwd: bwd,
        intersection,
    })
}

/// The closed-form description of the intersection: `τ((1 3 2), μ + b)` for
/// `b ∈ {(1,2,0), (2,1,0)}` and `τ((1 2 3), μ + b)` for
/// `b ∈ {(1,1,1), (2,1,0)}`, where `μ = (y, x-p+1, z)`.
pub fn expected_intersection(w: &WeightClass) -> ReductionCandidates {
    let p = w.p();
    let q = p.get();
    let (x, y, z) = w.xyz();
    let mu = |b: (i64, i64, i64)| (y + b.0, x - q + 1 + b.1, z + b.2);
    let mut exps = Vec::new();
    for b in [(1, 2, 0), (2, 1, 0)] {
        exps.push(OrderThreePerm::Xi132.exponent(mu(b), p));
    }
    for b in [(1, 1, 1), (2, 1, 0)] {
        exps.push(OrderThreePerm::Xi123.exponent(mu(b), p));
    }
    orbits_of(p, exps)
}

pub fn eliminate(w: &WeightClass, t: &TameType) -> Result<EliminationReport> {
    let p = w.p();
    if t.p() != p {
        return Err(Error::PrimeMismatch(p.get(), t.p().get()));
    }
    let branch = branch_for(w)?;
    let psi = t.psi_orbit()?;
    let (allowed, lifts) = match branch {
        Branch::FontaineLaffaille => {
            let (x, y, z) = w.xyz();
            let exps = OrderThreePerm::ALL.map(|xi| xi.exponent((x + 2, y + 1, z), p));
            (orbits_of(p, exps), None)
        }
        Branch::Intersection => {
            let sets = intersection_sets(w)?;
            (sets.intersection.clone(), Some(sets))
        }
    };
    let hit = allowed.contains(&psi);
    Ok(EliminationReport {
        weight: *w,
        branch,
        allowed,
        lifts,
        verdict: if hit {
            Verdict::Consistent
        } else {
            Verdict::Eliminated
        },
        matched: hit.then_some(psi),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::predicted::{is_predicted, witness_types};
    use OrderThreePerm::*;

    fn p(n: i64) -> Prime {
        Prime::new(n).unwrap()
    }

    fn w(q: i64, x: i64, y: i64, z: i64) -> WeightClass {
        WeightClass::gl3(p(q), x, y, z).unwrap()
    }

    #[test]
    fn branch_selection() {
        assert_eq!(branch_for(&w(29, 5, 3, 1)).unwrap(), Branch::FontaineLaffaille);
        assert_eq!(branch_for(&w(29, 36, 16, 4)).unwrap(), Branch::Intersection);
        assert!(matches!(
            branch_for(&w(29, 27, 14, 0)),
            Err(Error::Unsupported(_))
        ));
        assert!(branch_for(&w(29, 50, 25, 20)).is_err());
    }

    #[test]
    fn fontaine_laffaille_examples() {
        let q = p(29);
        let v = w(29, 5, 3, 1);
        let r = eliminate(&v, &TameType::tau(Xi123, (7, 4, 1), q)).unwrap();
        assert_eq!(r.verdict, Verdict::Consistent);
        assert!(r.lifts.is_none());
        let r = eliminate(&v, &TameType::tau(Xi123, (8, 4, 1), q)).unwrap();
        assert_eq!(r.verdict, Verdict::Eliminated);
        assert!(r.matched.is_none());
    }

    #[test]
    fn intersection_examples() {
        let q = p(29);
        let (x, y, z) = (36, 16, 4);
        let v = w(29, x, y, z);
        let t = TameType::tau(Xi132, (y + 1, x - 28 + 2, z), q);
        assert_eq!(eliminate(&v, &t).unwrap().verdict, Verdict::Consistent);
        let t = TameType::tau(Xi123, (x + 2, y + 1, z), q);
        assert_eq!(eliminate(&v, &t).unwrap().verdict, Verdict::Consistent);
        let t = TameType::tau(Xi123, (x + 3, y + 1, z), q);
        assert!(!is_predicted(&v, &t).unwrap());
        assert_eq!(eliminate(&v, &t).unwrap().verdict, Verdict::Eliminated);
        let sets = intersection_sets(&v).unwrap();
        assert!(sets.principal_series.len() <= 6);
        for part in [&sets.principal_series, &sets.cuspidal_fwd, &sets.cuspidal_bwd] {
            assert!(sets.intersection.orbits.is_subset(&part.orbits));
        }
        assert_eq!(sets.intersection, expected_intersection(&v));
    }

    #[test]
    fn rejects_reducible_types() {
        let t = TameType::tau(Xi123, (1, 1, 1), p(29));
        assert_eq!(eliminate(&w(29, 5, 3, 1), &t), Err(Error::NotIrreducible));
    }

    #[test]
    fn agrees_with_prediction_at_17() {
        let q = p(17);
        let types: Vec<TameType> = (0..q.modulus(3))
            .filter_map(|r| TameType::irreducible(q, r).ok().filter(|t| t.exponents()[0] == r))
            .collect();
        for z in 0..16 {
            for u in 0..=14 {
                for v in 0..=14 {
                    let wt = WeightClass::gl3(q, z + u + v, z + v, z).unwrap();
                    let Ok(branch) = branch_for(&wt) else { continue };
                    if branch == Branch::Intersection {
                        assert_eq!(intersection_sets(&wt).unwrap().intersection, expected_intersection(&wt));
                    }
                    let witnesses: Vec<TameType> = witness_types(&wt)
                        .into_iter()
                        .filter(|t| t.is_irreducible())
                        .collect();
                    for t in types.iter().step_by(7).chain(&witnesses) {
                        let elim = eliminate(&wt, t).unwrap().verdict == Verdict::Consistent;
                        assert_eq!(elim, is_predicted(&wt, t).unwrap(), "{wt} {t}");
                    }
                }
            }
        }
    }
}
