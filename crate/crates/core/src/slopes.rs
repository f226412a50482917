//! Slope bookkeeping for the ordinary part of a `U_p`-type Hecke eigenvalue.
//!
//! Everything here is exact rational arithmetic on Hodge–Tate weights and
//! `p`-adic valuations of Hecke eigenvalues `t_1, …, t_n` at a place `w`.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::induction::AntidominantCochar;

pub type Q = Ratio<i64>;

/// Local data at `w`: `f = [F_w^0 : Q_p]` for the maximal unramified
/// subextension, `e' = [F_w : F_w^0]`, one dominant weight per embedding
/// `F_w → Q̄_p` (so `e'·f` of them), and the valuations of `t_1, …, t_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HodgeData {
    n: usize,
    f: u32,
    e_prime: u32,
    lambdas: Vec<Vec<i64>>,
    t_vals: Vec<Q>,
}

impl HodgeData {
    pub fn new(n: usize, f: u32, e_prime: u32, lambdas: Vec<Vec<i64>>, t_vals: Vec<Q>) -> Result<Self> {
        if n == 0 || f == 0 || e_prime == 0 {
            return Err(Error::InvalidSlopeData("n, f and e' must be positive".into()));
        }
        let embeddings = (f * e_prime) as usize;
        if lambdas.len() != embeddings {
            return Err(Error::InvalidSlopeData(format!(
                "expected {embeddings} weights, one per embedding, got {}",
                lambdas.len()
            )));
        }
        if let Some(l) = lambdas.iter().find(|l| l.len() != n || l.windows(2).any(|w| w[0] < w[1])) {
            return Err(Error::InvalidSlopeData(format!(
                "{l:?} is not a non-increasing {n}-tuple"
            )));
        }
        if t_vals.len() != n {
            return Err(Error::InvalidSlopeData(format!(
                "expected {n} valuations, got {}",
                t_vals.len()
            )));
        }
        Ok(HodgeData {
            n,
            f,
            e_prime,
            lambdas,
            t_vals,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn f(&self) -> u32 {
        self.f
    }

    pub fn e_prime(&self) -> u32 {
        self.e_prime
    }

    pub fn lambdas(&self) -> &[Vec<i64>] {
        &self.lambdas
    }

    pub fn t_vals(&self) -> &[Q] {
        &self.t_vals
    }

    fn check_j(&self, j: usize) -> Result<()> {
        if j == 0 || j >= self.n {
            Err(Error::IndexOutOfRange {
                index: j,
                max: self.n - 1,
            })
        } else {
            Ok(())
        }
    }

    /// `Σ_τ Σ_{i=1}^{j} λ_{τ, n+1-i}`.
    fn bottom_sum(&self, j: usize) -> i64 {
        self.lambdas
            .iter()
            .map(|l| l[self.n - j..].iter().sum::<i64>())
            .sum()
    }

    fn val(&self, j: usize) -> Q {
        self.t_vals[j - 1]
    }
}

/// `(1/e') Σ_τ Σ_{i=1}^{j} λ_{τ, n+1-i}`, the valuation of `t_j` at which
/// the Galois representation is forced to be reducible.
pub fn ordinarity_threshold(h: &HodgeData, j: usize) -> Result<Q> {
    h.check_j(j)?;
    Ok(Q::new(h.bottom_sum(j), h.e_prime as i64))
}

/// `Σ_τ ⟨μ, λ_τ⟩`.
pub fn hecke_normalization(mu: &AntidominantCochar, lambdas: &[Vec<i64>]) -> Result<i64> {
    let m = mu.entries();
    let mut total = 0;
    for l in lambdas {
        if l.len() != m.len() {
            return Err(Error::InvalidSlopeData(format!(
                "cocharacter of rank {} paired with weight {l:?}",
                m.len()
            )));
        }
        total += m.iter().zip(l).map(|(a, b)| a * b).sum::<i64>();
    }
    Ok(total)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Criticality {
    /// Below the threshold; not possible for data coming from an
    /// automorphic representation, so it signals bad input.
    BelowBound,
    /// Exactly at the threshold: the representation is reducible.
    Critical,
    /// Above the threshold; nothing can be concluded.
    Above,
}

pub fn slope_criticality(h: &HodgeData, j: usize) -> Result<Criticality> {
    let bound = ordinarity_threshold(h, j)?;
    let v = h.val(j);
    Ok(match v.cmp(&bound) {
        std::cmp::Ordering::Less => Criticality::BelowBound,
        std::cmp::Ordering::Equal => Criticality::Critical,
        std::cmp::Ordering::Greater => Criticality::Above,
    })
}

/// Upper bound for `t_N(D')` minus lower bound for `t_H(D')` for a
/// hypothetical rank-`j` sub-object `D'`:
/// `j(j-1)/2·f + val(t_j) - (1/e') Σ_τ Σ_{i=1}^{j} (λ_{τ,n+1-i} + i - 1)`.
///
/// Requires the valuations to be sorted in increasing order.
pub fn newton_hodge_gap(h: &HodgeData, j: usize) -> Result<Q> {
    h.check_j(j)?;
    if h.t_vals.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::InvalidSlopeData(
            "valuations must be sorted in increasing order".into(),
        ));
    }
    let jj = j as i64;
    let newton = Q::from(jj * (jj - 1) / 2 * h.f as i64) + h.val(j);
    let shifts: i64 = (0..jj).sum::<i64>() * h.lambdas.len() as i64;
    let hodge = Q::new(h.bottom_sum(j) + shifts, h.e_prime as i64);
    Ok(newton - hodge)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64) -> Q {
        Q::from(n)
    }

    fn single(l: Vec<i64>, vals: Vec<Q>) -> HodgeData {
        HodgeData::new(l.len(), 1, 1, vec![l], vals).unwrap()
    }

    #[test]
    fn threshold_examples() {
        let h = single(vec![5, 3, 1], vec![q(1), q(4), q(9)]);
        assert_eq!(ordinarity_threshold(&h, 1).unwrap(), q(1));
        assert_eq!(ordinarity_threshold(&h, 2).unwrap(), q(4));
        assert!(ordinarity_threshold(&h, 3).is_err());
        assert!(ordinarity_threshold(&h, 0).is_err());
        let zero = single(vec![0, 0, 0], vec![q(0); 3]);
        assert_eq!(ordinarity_threshold(&zero, 2).unwrap(), q(0));
        let two = HodgeData::new(3, 2, 1, vec![vec![5, 3, 1]; 2], vec![q(0); 3]).unwrap();
        assert_eq!(ordinarity_threshold(&two, 2).unwrap(), q(8));
        let ram = HodgeData::new(3, 1, 2, vec![vec![5, 3, 1]; 2], vec![q(0); 3]).unwrap();
        assert_eq!(ordinarity_threshold(&ram, 1).unwrap(), q(1));
    }

    #[test]
    fn bad_data() {
        assert!(HodgeData::new(3, 1, 1, vec![vec![1, 3, 5]], vec![q(0); 3]).is_err());
        assert!(HodgeData::new(3, 2, 1, vec![vec![5, 3, 1]], vec![q(0); 3]).is_err());
        assert!(HodgeData::new(3, 1, 1, vec![vec![5, 3, 1]], vec![q(0); 2]).is_err());
    }

    #[test]
    fn normalization_examples() {
        let l = vec![vec![5, 3, 1]];
        let mu1 = AntidominantCochar::mu(3, 1).unwrap();
        let mu2 = AntidominantCochar::mu(3, 2).unwrap();
        assert_eq!(hecke_normalization(&mu1, &l).unwrap(), 1);
        assert_eq!(hecke_normalization(&mu2, &l).unwrap(), 4);
        assert_eq!(hecke_normalization(&mu2, &[vec![0, 0, 0]]).unwrap(), 0);
    }

    #[test]
    fn criticality_examples() {
        let at = |v: Q| single(vec![5, 3, 1], vec![v, q(10), q(20)]);
        assert_eq!(slope_criticality(&at(q(1)), 1).unwrap(), Criticality::Critical);
        assert_eq!(slope_criticality(&at(q(2)), 1).unwrap(), Criticality::Above);
        assert_eq!(slope_criticality(&at(q(0)), 1).unwrap(), Criticality::BelowBound);
    }

    #[test]
    fn gap_examples() {
        let h = single(vec![5, 3, 1], vec![q(1), q(4), q(9)]);
        assert_eq!(newton_hodge_gap(&h, 1).unwrap(), q(0));
        assert_eq!(newton_hodge_gap(&h, 2).unwrap(), q(0));
        let zero = single(vec![0, 0, 0], vec![q(0); 3]);
        assert_eq!(newton_hodge_gap(&zero, 2).unwrap(), q(0));
        let above = single(vec![5, 3, 1], vec![q(1), Q::new(9, 2), q(9)]);
        assert_eq!(newton_hodge_gap(&above, 2).unwrap(), Q::new(1, 2));
        let unsorted = single(vec![5, 3, 1], vec![q(4), q(1), q(9)]);
        assert!(newton_hodge_gap(&unsorted, 1).is_err());
    }

    proptest! {
        #[test]
        fn threshold_is_normalized_pairing(
            raw in prop::collection::vec(prop::collection::vec(-20i64..20, 3), 4),
            f in 1u32..3, e in 1u32..3, j in 1usize..3,
        ) {
            let count = (f * e) as usize;
            let lambdas: Vec<Vec<i64>> = raw.into_iter().cycle().take(count).map(|mut l| {
                l.sort_unstable_by(|a, b| b.cmp(a));
                l
            }).collect();
            let h = HodgeData::new(3, f, e, lambdas.clone(), vec![q(0); 3]).unwrap();
            let mu = AntidominantCochar::mu(3, j).unwrap();
            prop_assert_eq!(
                ordinarity_threshold(&h, j).unwrap(),
                Q::new(hecke_normalization(&mu, &lambdas).unwrap(), e as i64)
            );
        }

        #[test]
        fn critical_iff_zero_gap(
            l in prop::collection::vec(-20i64..20, 3),
            nums in prop::collection::vec(-40i64..40, 3),
            den in 1i64..6, j in 1usize..3,
        ) {
            let mut l = l;
            l.sort_unstable_by(|a, b| b.cmp(a));
            let mut vals: Vec<Q> = nums.iter().map(|&v| Q::new(v, den)).collect();
            vals.sort();
            let h = single(l, vals);
            let crit = slope_criticality(&h, j).unwrap() == Criticality::Critical;
            prop_assert_eq!(crit, newton_hodge_gap(&h, j).unwrap() == q(0));
        }
    }
}
