//! Serre weights: irreducible representations `F(x, y, z)` of `GL_n(F_p)`.
//!
//! A restricted dominant tuple determines a weight, and two tuples give the
//! same weight exactly when their consecutive differences agree and their last
//! coordinates agree modulo `p - 1`. [`WeightClass`] stores the representative
//! whose last coordinate lies in `[0, p - 2]`.

use std::fmt;

use crate::arith::Prime;
use crate::error::{Error, Result};

/// Isomorphism class of an irreducible representation of `GL_n(F_p)`, `n <= 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightClass {
    p: Prime,
    rank: u8,
    coords: [i64; 3],
}

/// Position of a `GL_3` weight relative to the two restricted alcoves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AlcovePosition {
    /// `x - z < p - 2`.
    Lower,
    /// `x - z = p - 2`, the wall shared by both alcoves.
    LowerClosureWall,
    /// `x - z > p - 2`, `x - y < p - 1`, `y - z < p - 1`.
    Upper,
    /// `x - z > p - 2` with `x - y = p - 1` or `y - z = p - 1`.
    UpperWall,
}

impl AlcovePosition {
    pub fn in_lower_closure(self) -> bool {
        matches!(self, AlcovePosition::Lower | AlcovePosition::LowerClosureWall)
    }
}

fn weyl_dim3(x: i64, y: i64, z: i64) -> i64 {
    (x - y + 1) * (y - z + 1) * (x - z + 2) / 2
}

impl WeightClass {
    /// Canonicalizes a restricted dominant tuple of length 1, 2 or 3.
    pub fn new(p: Prime, raw: &[i64]) -> Result<Self> {
        let rank = raw.len();
        if !(1..=3).contains(&rank) {
            return Err(Error::InvalidRank(rank));
        }
        let restricted = raw
            .windows(2)
            .all(|w| w[0] >= w[1] && w[0] - w[1] < p.get());
        if !restricted {
            return Err(Error::NotRestricted {
                coords: raw.to_vec(),
                p: p.get(),
            });
        }
        let shift = raw[rank - 1].div_euclid(p.get() - 1) * (p.get() - 1);
        let mut coords = [0i64; 3];
        for (c, r) in coords.iter_mut().zip(raw) {
            *c = r - shift;
        }
        Ok(WeightClass {
            p,
            rank: rank as u8,
            coords,
        })
    }

    /// `F(x, y, z)` for `GL_3`.
    pub fn gl3(p: Prime, x: i64, y: i64, z: i64) -> Result<Self> {
        Self::new(p, &[x, y, z])
    }

    pub fn p(&self) -> Prime {
        self.p
    }

    pub fn rank(&self) -> usize {
        self.rank as usize
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords[..self.rank as usize]
    }

    /// `(x, y, z)`; meaningful for rank 3 only.
    pub fn xyz(&self) -> (i64, i64, i64) {
        (self.coords[0], self.coords[1], self.coords[2])
    }

    fn require_gl3(&self) -> Result<(i64, i64, i64)> {
        if self.rank == 3 {
            Ok(self.xyz())
        } else {
            Err(Error::InvalidRank(self.rank as usize))
        }
    }

    /// Contragredient: `F(x, y, z)^∨ = F(-z, -y, -x)`.
    pub fn dual(&self) -> WeightClass {
        let raw: Vec<i64> = self.coords().iter().rev().map(|c| -c).collect();
        WeightClass::new(self.p, &raw).expect("dual of a restricted weight is restricted")
    }

    pub fn alcove(&self) -> Result<AlcovePosition> {
        let (x, y, z) = self.require_gl3()?;
        let p = self.p.get();
        Ok(if x - z < p - 2 {
            AlcovePosition::Lower
        } else if x - z == p - 2 {
            AlcovePosition::LowerClosureWall
        } else if x - y < p - 1 && y - z < p - 1 {
            AlcovePosition::Upper
        } else {
            AlcovePosition::UpperWall
        })
    }

    /// `δ`-genericity: both differences lie in `(δ - 1, p - 1 - δ)` and
    /// `x - z` stays more than `δ` away from `p - 2`.
    pub fn is_delta_generic(&self, delta: i64) -> Result<bool> {
        let (x, y, z) = self.require_gl3()?;
        let p = self.p.get();
        let in_band = |d: i64| -1 + delta < d && d < p - 1 - delta;
        Ok(in_band(x - y) && in_band(y - z) && (x - z - (p - 2)).abs() > delta)
    }

    /// Generic means 4-generic.
    pub fn is_generic(&self) -> bool {
        self.is_delta_generic(4).unwrap_or(false)
    }

    /// Strongly generic means 6-generic.
    pub fn is_strongly_generic(&self) -> bool {
        self.is_delta_generic(6).unwrap_or(false)
    }

    /// Dimension of the weight.
    ///
    /// In the closed lower alcove this is the Weyl dimension; in the upper
    /// alcove the dual Weyl module has exactly two constituents, the weight
    /// and its lower-alcove reflection, so the dimension is the difference of
    /// the two Weyl dimensions.
    pub fn dim(&self) -> i64 {
        let c = &self.coords;
        match self.rank {
            1 => 1,
            2 => c[0] - c[1] + 1,
            _ => {
                let (x, y, z) = (c[0], c[1], c[2]);
                let p = self.p.get();
                let full = weyl_dim3(x, y, z);
                if x - z <= p - 2 {
                    full
                } else {
                    full - weyl_dim3(z + p - 2, y, x - p + 2)
                }
            }
        }
    }

    /// The lower-alcove weight `F(z + p - 2, y, x - p + 2)` that an
    /// upper-alcove weight `F(x, y, z)` is the shadow of.
    pub fn shadow(&self) -> Result<WeightClass> {
        if self.alcove()? != AlcovePosition::Upper {
            return Err(Error::WrongAlcove(format!("{self} is not in the upper alcove")));
        }
        Ok(self.reflect())
    }

    /// The upper-alcove shadow of a lower-alcove weight.
    pub fn shadow_inverse(&self) -> Result<WeightClass> {
        if self.alcove()? != AlcovePosition::Lower {
            return Err(Error::WrongAlcove(format!("{self} is not in the lower alcove")));
        }
        Ok(self.reflect())
    }

    fn reflect(&self) -> WeightClass {
        let (x, y, z) = self.xyz();
        let p = self.p.get();
        WeightClass::gl3(self.p, z + p - 2, y, x - p + 2)
            .expect("affine reflection of a strict alcove weight is restricted")
    }

    /// Splits a `GL_3` weight into its leading `GL_k` and trailing
    /// `GL_{3-k}` blocks.
    pub(crate) fn split(&self, k: usize) -> Result<(WeightClass, WeightClass)> {
        self.require_gl3()?;
        let head = WeightClass::new(self.p, &self.coords[..k])?;
        let tail = WeightClass::new(self.p, &self.coords[k..3])?;
        Ok((head, tail))
    }
}

impl fmt::Display for WeightClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = self
            .coords()
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",");
        write!(f, "F({body})")
    }
}
