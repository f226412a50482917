//! The predicted weight set `W^?` of an irreducible tame type.
//!
//! For weights with `0 <= x - y, y - z <= p - 3` membership is decided by
//! comparing the type with `τ(ξ, (x+2, y+1, z))` and, in the upper alcove,
//! with `τ(ξ, (z+p, y+1, x-p+2))`. Outside that strip no criterion is
//! available and the functions here refuse to answer.

use std::collections::BTreeSet;

use crate::arith::Prime;
use crate::error::{Error, Result};
use crate::tame_types::{OrderThreePerm, TameType};
use crate::weights::WeightClass;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PredictedSet {
    pub p: Prime,
    pub weights: BTreeSet<WeightClass>,
    pub source_type: TameType,
}

impl PredictedSet {
    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn contains(&self, w: &WeightClass) -> bool {
        self.weights.contains(w)
    }
}

/// Whether `w` lies in the strip where the membership test applies.
pub fn in_criterion_range(w: &WeightClass) -> bool {
    if w.rank() != 3 {
        return false;
    }
    let (x, y, z) = w.xyz();
    let q = w.p().get();
    (0..=q - 3).contains(&(x - y)) && (0..=q - 3).contains(&(y - z))
}

/// The two or four types whose presence makes `w` a predicted weight.
pub fn witness_types(w: &WeightClass) -> Vec<TameType> {
    let (x, y, z) = w.xyz();
    let p = w.p();
    let q = p.get();
    let mut out = Vec::with_capacity(4);
    for xi in OrderThreePerm::ALL {
        out.push(TameType::tau(xi, (x + 2, y + 1, z), p));
    }
    if x - z > q - 2 {
        for xi in OrderThreePerm::ALL {
            out.push(TameType::tau(xi, (z + q, y + 1, x - q + 2), p));
        }
    }
    out
}

fn check_type(t: &TameType, p: Prime) -> Result<()> {
    if t.p() != p {
        return Err(Error::PrimeMismatch(p.get(), t.p().get()));
    }
    if !t.is_irreducible() {
        return Err(Error::NotIrreducible);
    }
    Ok(())
}

pub fn is_predicted(w: &WeightClass, t: &TameType) -> Result<bool> {
    check_type(t, w.p())?;
    if !in_criterion_range(w) {
        return Err(Error::Hypothesis(format!(
            "{w} is outside 0 <= x-y, y-z <= p-3"
        )));
    }
    Ok(witness_types(w).iter().any(|u| u.iso(t)))
}

/// All predicted weights of `t` in the criterion strip.
///
/// Each of the four witness families has exponent `z·(p^2+p+1) + f(x-y, y-z)`,
/// so for every orbit member and every pair of differences the last
/// coordinate is recovered by one division.
pub fn enumerate_predicted(t: &TameType) -> Result<PredictedSet> {
    let p = t.p();
    check_type(t, p)?;
    let q = p.get();
    let n = p.norm3();
    let e = p.modulus(3);
    let members = t.psi_orbit()?.members();
    let mut weights = BTreeSet::new();
    for u in 0..=q - 3 {
        for v in 0..=q - 3 {
            let mut offsets = vec![
                (u + v + 2) + q * (v + 1),
                (u + v + 2) + q * q * (v + 1),
            ];
            if u + v > q - 2 {
                offsets.push(q + q * (v + 1) + q * q * (u + v - q + 2));
                offsets.push(q + q * (u + v - q + 2) + q * q * (v + 1));
            }
            for &m in &members {
                for &f in &offsets {
                    let rest = (m - f).rem_euclid(e);
                    if rest % n == 0 {
                        let z = rest / n;
                        weights.insert(WeightClass::gl3(p, z + u + v, z + v, z)?);
                    }
                }
            }
        }
    }
    Ok(PredictedSet {
        p,
        weights,
        source_type: *t,
    })
}

/// `θ(a, b, c) = (c + p - 2, a, b + 1)`.
pub fn theta(abc: (i64, i64, i64), p: Prime) -> (i64, i64, i64) {
    let (a, b, c) = abc;
    (c + p.get() - 2, a, b + 1)
}

/// The three families of three weights making up `W^?` of
/// `τ((1 2 3), (a+2, b+1, c))`: obvious lower, obvious upper, shadows.
pub fn nine_weight_families(abc: (i64, i64, i64), p: Prime) -> Result<[[WeightClass; 3]; 3]> {
    let (a, b, c) = abc;
    let q = p.get();
    if !(a - b > 5 && b - c > 4 && a - c < q - 7) {
        return Err(Error::Hypothesis(format!(
            "({a},{b},{c}) needs a-b > 5, b-c > 4, a-c < p-7"
        )));
    }
    let f = |x: i64, y: i64, z: i64| WeightClass::gl3(p, x, y, z);
    Ok([
        [f(a, b, c)?, f(c + q - 2, a, b + 1)?, f(b, c - 1, a - q + 2)?],
        [
            f(c + q - 2, b + 1, a - q + 1)?,
            f(b + q - 1, a + 1, c - 1)?,
            f(a, c, b - q + 1)?,
        ],
        [
            f(c + q - 2, b, a - q + 2)?,
            f(b + q - 1, a, c)?,
            f(a, c - 1, b - q + 2)?,
        ],
    ])
}

pub fn nine_weight_table(abc: (i64, i64, i64), p: Prime) -> Result<PredictedSet> {
    let families = nine_weight_families(abc, p)?;
    let (a, b, c) = abc;
    Ok(PredictedSet {
        p,
        weights: families.iter().flatten().copied().collect(),
        source_type: TameType::tau(OrderThreePerm::Xi123, (a + 2, b + 1, c), p),
    })
}

/// Parameter triples `(a, b, c)` with `a - b > 5`, `b - c > 4`, `a - c < p - 7`
/// and `c` in `[0, p - 2]`.
pub fn step_one_range(p: Prime) -> Vec<(i64, i64, i64)> {
    let q = p.get();
    let mut out = Vec::new();
    for c in 0..=q - 2 {
        for b in c + 5..q {
            for a in b + 6..c + q - 7 {
                out.push((a, b, c));
            }
        }
    }
    out
}
