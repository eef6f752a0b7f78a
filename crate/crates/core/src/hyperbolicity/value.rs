//! Four-point values in doubled integer units.

use std::fmt;

use serde::{Serialize, Serializer};

/// Twice a half-integral δ or τ. Signed because τ may be negative.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Doubled(pub i64);

impl Doubled {
    pub const ZERO: Doubled = Doubled(0);

    pub fn twice(self) -> i64 {
        self.0
    }

    pub fn as_f64(self) -> f64 {
        self.0 as f64 / 2.0
    }

    pub fn from_half_units(v: f64) -> Option<Doubled> {
        let d = v * 2.0;
        (d.fract() == 0.0 && d.is_finite()).then_some(Doubled(d as i64))
    }
}

/// One fractional digit, always `.0` or `.5`.
impl fmt::Display for Doubled {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.0 < 0 { "-" } else { "" };
        let a = self.0.unsigned_abs();
        let frac = if a.is_multiple_of(2) { 0 } else { 5 };
        f.pad(&format!("{sign}{}.{frac}", a / 2))
    }
}

impl Serialize for Doubled {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Twice δ(u,v,x,y): the largest of the three pair sums minus the second largest.
#[inline]
pub fn delta4(d_uv: u32, d_xy: u32, d_ux: u32, d_vy: u32, d_uy: u32, d_vx: u32) -> Doubled {
    let s1 = d_uv as i64 + d_xy as i64;
    let s2 = d_ux as i64 + d_vy as i64;
    let s3 = d_uy as i64 + d_vx as i64;
    let mut s = [s1, s2, s3];
    s.sort_unstable();
    Doubled(s[2] - s[1])
}

/// Twice τ(u,v,x,y) = `d(u,v) + d(x,y) - max(d(u,x) + d(v,y), d(u,y) + d(v,x))`.
#[inline]
pub fn tau4(d_uv: u32, d_xy: u32, d_ux: u32, d_vy: u32, d_uy: u32, d_vx: u32) -> Doubled {
    let s1 = d_uv as i64 + d_xy as i64;
    let cross = (d_ux as i64 + d_vy as i64).max(d_uy as i64 + d_vx as i64);
    Doubled(s1 - cross)
}
