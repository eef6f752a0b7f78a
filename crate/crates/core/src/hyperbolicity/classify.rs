//! Acceptable / valuable classification of dominators against a pair `(x, y)`.
//!
//! A dominator `u` is skippable for `(x, y)` when no quadruple `(u', v', x', y')`
//! with `u'`, `x'`, `y'` in the cells of `u`, `x`, `y` can have τ above the
//! current lower bound. Three independent upper bounds on τ are tested; a
//! vertex passing all three is acceptable. An acceptable vertex is valuable
//! when its share `f_c(u)` of the central-vertex bound `2τ <= f_c(u) + f_c(v)`
//! exceeds the bound, so at least one side of every improving pair is valuable.
//!
//! Everything is in doubled units. Since τ is half-integral, "τ > δ_L" is the
//! same as `2τ >= 2δ_L + 1`, and each threshold below is the weakest one this
//! implies.

/// Quantities describing the pair `(x, y)` and the bound `2δ_L`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairBounds {
    pub d_xy: u32,
    pub k_x: u32,
    pub k_y: u32,
    pub lower2: i64,
}

/// Per-candidate quantities for dominator `u`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Candidate {
    pub ecc: u32,
    pub k: u32,
    pub d_x: u32,
    pub d_y: u32,
    /// Distance to the central vertex.
    pub d_c: u32,
}

/// Which bound ruled a candidate out.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SkipRule {
    /// τ is at most the distance from `u'` to `x'` or `y'`.
    Near,
    /// Four times τ is at most `2 ecc(u') + d(x',y') - d(u',x') - d(u',y')`.
    Eccentric,
    /// Three times τ is at most `ecc(u') + d(x',y') - max(d(u',x'), d(u',y'))`.
    Far,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Skip(SkipRule),
    Acceptable,
    Valuable,
}

impl Verdict {
    pub fn is_acceptable(self) -> bool {
        !matches!(self, Verdict::Skip(_))
    }
}

#[inline]
pub fn classify(pair: &PairBounds, c: &Candidate) -> Verdict {
    let l2 = pair.lower2;
    let (dxy, kx, ky) = (pair.d_xy as i64, pair.k_x as i64, pair.k_y as i64);
    let (ecc, k, dx, dy) = (c.ecc as i64, c.k as i64, c.d_x as i64, c.d_y as i64);

    if 2 * (dx + k + kx) <= l2 || 2 * (dy + k + ky) <= l2 {
        return Verdict::Skip(SkipRule::Near);
    }
    if 2 * ecc + dxy - dx - dy + 4 * k + 2 * kx + 2 * ky <= 2 * l2 + 1 {
        return Verdict::Skip(SkipRule::Eccentric);
    }
    let e = ecc + dxy + 2 * k + kx + ky;
    let m = (dx - kx).max(dy - ky);
    if 2 * m + 3 * l2 + 2 >= 2 * e {
        return Verdict::Skip(SkipRule::Far);
    }
    if valuable_bound2(pair, c) > l2 {
        Verdict::Valuable
    } else {
        Verdict::Acceptable
    }
}

/// Twice `f_c(u) = ½(d(x,y) - d(x,u) - d(y,u)) + d(u,c) + 2k_u + k_x + k_y`.
#[inline]
pub fn valuable_bound2(pair: &PairBounds, c: &Candidate) -> i64 {
    pair.d_xy as i64 - c.d_x as i64 - c.d_y as i64
        + 2 * c.d_c as i64
        + 4 * c.k as i64
        + 2 * pair.k_x as i64
        + 2 * pair.k_y as i64
}

/// Acceptable and valuable positions of a candidate sequence.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AccVal {
    pub acceptable: Vec<usize>,
    pub valuable: Vec<usize>,
}

pub fn compute_acc_val<I>(pair: &PairBounds, candidates: I) -> AccVal
where
    I: IntoIterator<Item = Candidate>,
{
    let mut out = AccVal::default();
    for (i, c) in candidates.into_iter().enumerate() {
        match classify(pair, &c) {
            Verdict::Skip(_) => {}
            Verdict::Acceptable => out.acceptable.push(i),
            Verdict::Valuable => {
                out.acceptable.push(i);
                out.valuable.push(i);
            }
        }
    }
    out
}
