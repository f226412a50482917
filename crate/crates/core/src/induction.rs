//! Parabolic induction from the two maximal Levi subgroups of `GL_3(F_p)`.
//!
//! For `Ind(F(a) ⊗ F(b, c))` from the parabolic with Levi `GL_1 × GL_2` the
//! constituents are listed explicitly; the other parabolic is reached by
//! dualising, which swaps the two block shapes.

use std::collections::BTreeSet;

use crate::arith::Prime;
use crate::error::{Error, Result};
use crate::weights::WeightClass;

/// A non-decreasing cocharacter of the diagonal torus.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AntidominantCochar(Vec<i64>);

impl AntidominantCochar {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Hypothesis(format!(
                "{entries:?} is not non-decreasing"
            )));
        }
        Ok(AntidominantCochar(entries))
    }

    /// `μ^{(j)} = (0, …, 0, 1, …, 1)` with `n - j` zeroes.
    pub fn mu(n: usize, j: usize) -> Result<Self> {
        if j == 0 || j >= n {
            return Err(Error::IndexOutOfRange {
                index: j,
                max: n.saturating_sub(1),
            });
        }
        let mut v = vec![0; n - j];
        v.extend(std::iter::repeat_n(1, j));
        Ok(AntidominantCochar(v))
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// `j` for `μ^{(j)}`, if the cocharacter has that form.
    pub fn level(&self) -> Option<usize> {
        let ones = self.0.iter().filter(|&&v| v == 1).count();
        let zeros = self.0.iter().filter(|&&v| v == 0).count();
        (ones + zeros == self.0.len() && ones > 0 && zeros > 0).then_some(ones)
    }
}

/// A weight of a block-diagonal Levi subgroup, one block per factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LeviWeight {
    pub blocks: Vec<WeightClass>,
}

impl LeviWeight {
    pub fn shape(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.rank()).collect()
    }

    fn p(&self) -> Prime {
        self.blocks[0].p()
    }
}

/// `F(x, y, z)` as a weight of the Levi of `P_{-μ}`: `F(x, y) ⊗ F(z)` for
/// `μ^{(1)}` and `F(x) ⊗ F(y, z)` for `μ^{(2)}`.
pub fn levi_restriction(w: &WeightClass, mu: &AntidominantCochar) -> Result<LeviWeight> {
    if w.rank() != 3 || mu.entries().len() != 3 {
        return Err(Error::Unsupported(format!("{mu:?} on {w}")));
    }
    let k = match mu.level() {
        Some(1) => 2,
        Some(2) => 1,
        _ => return Err(Error::Unsupported(format!("cocharacter {:?}", mu.entries()))),
    };
    let (head, tail) = w.split(k)?;
    Ok(LeviWeight {
        blocks: vec![head, tail],
    })
}

/// Constituents of the induced representation.
pub fn induction_constituents(levi: &LeviWeight) -> Result<Vec<WeightClass>> {
    match levi.shape().as_slice() {
        [1, 2] => constituents_1_2(levi.blocks[0].coords()[0], &levi.blocks[1]),
        [2, 1] => {
            // Ind(F(x,y) ⊗ F(z))^∨ is induced from F(-z) ⊗ F(-y,-x) on the
            // other parabolic after conjugating by the long Weyl element.
            let pair = &levi.blocks[0];
            let (x, y) = (pair.coords()[0], pair.coords()[1]);
            let z = levi.blocks[1].coords()[0];
            let dual_pair = WeightClass::new(levi.p(), &[-y, -x])?;
            let out = constituents_1_2(-z, &dual_pair)?;
            Ok(out.iter().map(|v| v.dual()).collect())
        }
        other => Err(Error::Unsupported(format!("Levi block shape {other:?}"))),
    }
}

fn constituents_1_2(a: i64, pair: &WeightClass) -> Result<Vec<WeightClass>> {
    let p = pair.p();
    let q = p.get();
    let (b0, c0) = (pair.coords()[0], pair.coords()[1]);
    let bad = |why: &str| Err(Error::Hypothesis(format!("F({a}) ⊗ F({b0},{c0}): {why}")));
    if b0 == c0 {
        return bad("the GL_2 weight has equal entries");
    }
    if b0 - c0 == q - 1 {
        return bad("the GL_2 weight has b - c = p - 1");
    }
    // Representative of a modulo p-1 in the open window (b, b+p-1).
    let a1 = b0 + 1 + (a - b0 - 1).rem_euclid(q - 1);
    if a1 == b0 + q - 1 {
        return bad("a ≡ b modulo p - 1");
    }
    let f = |x: i64, y: i64, z: i64| WeightClass::gl3(p, x, y, z);
    if a1 < c0 + q - 1 {
        let (a, b, c) = (a1, b0, c0);
        Ok(vec![f(b, c, a - q + 1)?, f(b + q - 1, a, c)?, f(a, b, c)?])
    } else if a1 > c0 + q - 1 {
        let (a, b, c) = (a1, c0 + q - 1, b0);
        Ok(vec![
            f(c + q - 1, b, a - q + 1)?,
            f(c + q - 1, a, b)?,
            f(c + q - 2, a, b + 1)?,
            f(a - 1, b, c + 1)?,
            f(b - 1, c, a - q + 2)?,
            f(a, c, b - q + 1)?,
        ])
    } else {
        bad("a ≡ c modulo p - 1")
    }
}

/// The weights one of which is modular if `T_j` fails to be injective on the
/// `F(x, y, z)`-isotypic part.
///
/// Two weights when `x > y > z` and `x - z < p - 1`; five when both
/// differences are below `p - 1` and `x - z > p - 1`. Exactly one weight in
/// each list lies in the upper alcove.
pub fn implied_weights(w: &WeightClass, j: usize) -> Result<BTreeSet<WeightClass>> {
    if !(1..=2).contains(&j) {
        return Err(Error::IndexOutOfRange { index: j, max: 2 });
    }
    if w.rank() != 3 {
        return Err(Error::InvalidRank(w.rank()));
    }
    let p = w.p();
    let q = p.get();
    let (x, y, z) = w.xyz();
    let f = |x: i64, y: i64, z: i64| WeightClass::gl3(p, x, y, z);
    let list = if x > y && y > z && x - z < q - 1 {
        if j == 1 {
            vec![f(z + q - 1, x, y)?, f(x, z, y - q + 1)?]
        } else {
            vec![f(y, z, x - q + 1)?, f(y + q - 1, x, z)?]
        }
    } else if x - y < q - 1 && y - z < q - 1 && x - z > q - 1 {
        if j == 1 {
            vec![
                f(x, z + q - 1, y)?,
                f(x - 1, z + q - 1, y + 1)?,
                f(y - 1, x - q + 1, z + 1)?,
                f(z + q - 2, y, x - q + 2)?,
                f(z + 2 * q - 2, x, y)?,
            ]
        } else {
            vec![
                f(y, x - q + 1, z)?,
                f(y - 1, x - q + 1, z + 1)?,
                f(x - 1, z + q - 1, y + 1)?,
                f(z + q - 2, y, x - q + 2)?,
                f(y, z, x - 2 * q + 2)?,
            ]
        }
    } else {
        return Err(Error::WrongAlcove(format!(
            "{w} is outside both ranges for the Hecke operator argument"
        )));
    };
    Ok(list.into_iter().collect())
}

/// Whether [`implied_weights`] accepts `w`.
pub fn in_hecke_range(w: &WeightClass) -> bool {
    if w.rank() != 3 {
        return false;
    }
    let (x, y, z) = w.xyz();
    let q = w.p().get();
    (x > y && y > z && x - z < q - 1) || (x - y < q - 1 && y - z < q - 1 && x - z > q - 1)
}
