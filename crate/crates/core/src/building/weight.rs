use std::fmt;

use serde::{Deserialize, Serialize};

/// A dominant SL3 weight `(m1, m2, 0)` with `m1 >= m2 >= 0`, written
/// `a*w1 + b*w2` with `a = m1 - m2` and `b = m2`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DominantWeight {
    mu: [i32; 3],
}

impl DominantWeight {
    pub const ZERO: DominantWeight = DominantWeight { mu: [0, 0, 0] };
    pub const OMEGA1: DominantWeight = DominantWeight { mu: [1, 0, 0] };
    pub const OMEGA2: DominantWeight = DominantWeight { mu: [1, 1, 0] };

    /// Normalizes an arbitrary integer triple: sort descending, then subtract
    /// the last entry.
    pub fn normalize(triple: [i32; 3]) -> Self {
        let mut mu = triple;
        mu.sort_unstable_by(|a, b| b.cmp(a));
        let last = mu[2];
        DominantWeight { mu: [mu[0] - last, mu[1] - last, 0] }
    }

    /// `a*w1 + b*w2`.
    pub fn from_coefficients(a: u32, b: u32) -> Self {
        DominantWeight { mu: [(a + b) as i32, b as i32, 0] }
    }

    pub fn mu(&self) -> [i32; 3] {
        self.mu
    }

    /// Coefficient of `w1`.
    pub fn a(&self) -> u32 {
        (self.mu[0] - self.mu[1]) as u32
    }

    /// Coefficient of `w2`.
    pub fn b(&self) -> u32 {
        self.mu[1] as u32
    }

    /// Number of edges on a geodesic with this length.
    pub fn steps(&self) -> u32 {
        self.a() + self.b()
    }

    /// The weight of the reversed path: normalize `(-m3, -m2, -m1)`.
    pub fn dual(&self) -> Self {
        Self::normalize([-self.mu[2], -self.mu[1], -self.mu[0]])
    }

    pub fn is_zero(&self) -> bool {
        self.mu == [0, 0, 0]
    }

    /// True for `w1` and `w2`, the lengths of building edges.
    pub fn is_fundamental(&self) -> bool {
        *self == Self::OMEGA1 || *self == Self::OMEGA2
    }
}

impl fmt::Debug for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.mu[0], self.mu[1], self.mu[2])
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Dual of a dominant weight.
pub fn dual_weight(w: DominantWeight) -> DominantWeight {
    w.dual()
}

/// Number of steps of a dominant weight.
pub fn steps(w: DominantWeight) -> u32 {
    w.steps()
}
