use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::GrowthError;
use crate::building::DominantWeight;

/// A partition with at most three rows, kept literally (full columns are
/// not stripped) as it appears inside a growth diagram.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct PartitionRep {
    parts: [u32; 3],
}

impl PartitionRep {
    pub const EMPTY: PartitionRep = PartitionRep { parts: [0, 0, 0] };

    pub fn new(parts: [u32; 3]) -> Result<Self, GrowthError> {
        if parts[0] < parts[1] || parts[1] < parts[2] {
            return Err(GrowthError::NotAPartition(parts));
        }
        Ok(PartitionRep { parts })
    }

    /// The `k x 3` rectangle `(k, k, k)`.
    pub fn rectangle(k: u32) -> Self {
        PartitionRep { parts: [k, k, k] }
    }

    pub fn parts(&self) -> [u32; 3] {
        self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn is_rectangle(&self) -> bool {
        self.parts[0] == self.parts[2]
    }

    /// Whether `other` fits inside `self`.
    pub fn contains(&self, other: &PartitionRep) -> bool {
        (0..3).all(|i| other.parts[i] <= self.parts[i])
    }

    /// The SL3 weight this partition represents.
    pub fn weight(&self) -> DominantWeight {
        let p = self.parts;
        DominantWeight::normalize([p[0] as i32, p[1] as i32, p[2] as i32])
    }

    /// Complement inside the `k x 3` rectangle, rotated by 180 degrees.
    pub fn complement(&self, k: u32) -> Result<Self, GrowthError> {
        if self.parts[0] > k {
            return Err(GrowthError::NotAPartition(self.parts));
        }
        Ok(PartitionRep { parts: [k - self.parts[2], k - self.parts[1], k - self.parts[0]] })
    }

    /// Adds one box in each listed row (0-based), if the result is a partition.
    pub fn add_boxes(&self, rows: &[usize]) -> Option<Self> {
        let mut parts = self.parts;
        for &r in rows {
            parts[r] += 1;
        }
        Self::new(parts).ok()
    }
}

impl TryFrom<Vec<u32>> for PartitionRep {
    type Error = GrowthError;
    fn try_from(mut v: Vec<u32>) -> Result<Self, GrowthError> {
        while v.last() == Some(&0) {
            v.pop();
        }
        if v.len() > 3 {
            return Err(GrowthError::Parse(format!("partition {v:?} has more than three rows")));
        }
        let mut parts = [0; 3];
        parts[..v.len()].copy_from_slice(&v);
        Self::new(parts)
    }
}

impl From<PartitionRep> for Vec<u32> {
    fn from(p: PartitionRep) -> Vec<u32> {
        p.parts.iter().copied().filter(|&x| x > 0).collect()
    }
}

impl fmt::Display for PartitionRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nonzero: Vec<u32> = self.parts.iter().copied().filter(|&x| x > 0).collect();
        if nonzero.is_empty() {
            f.write_str("∅")
        } else if nonzero.iter().all(|&x| x < 10) {
            nonzero.iter().try_for_each(|x| write!(f, "{x}"))
        } else {
            let parts: Vec<String> = nonzero.iter().map(u32::to_string).collect();
            write!(f, "({})", parts.join("."))
        }
    }
}

impl fmt::Debug for PartitionRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for PartitionRep {
    type Err = GrowthError;

    /// Accepts `∅`, `0`, digit strings such as `321`, and `(10.9.3)`.
    fn from_str(s: &str) -> Result<Self, GrowthError> {
        let s = s.trim();
        let bad = || GrowthError::Parse(format!("bad partition `{s}`"));
        if s.is_empty() || s == "∅" || s == "0" {
            return Ok(Self::EMPTY);
        }
        let parts: Vec<u32> = if let Some(inner) = s.strip_prefix('(').and_then(|x| x.strip_suffix(')')) {
            inner.split('.').map(|x| x.trim().parse().map_err(|_| bad())).collect::<Result<_, _>>()?
        } else {
            s.chars().map(|c| c.to_digit(10).ok_or_else(bad)).collect::<Result<_, _>>()?
        };
        if parts.len() > 3 {
            return Err(bad());
        }
        Self::try_from(parts)
    }
}

/// A set of row indices, ordered so that `{1} < {2} < {3}` and
/// `{1,2} < {1,3} < {2,3}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct RowSet(Vec<u8>);

impl RowSet {
    /// Row indices, 1-based.
    pub fn rows(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Whether `big / small` is a vertical strip: containment with at most one
/// box added per row.
pub fn is_vertical_strip(big: &PartitionRep, small: &PartitionRep) -> bool {
    (0..3).all(|i| big.parts[i] >= small.parts[i] && big.parts[i] - small.parts[i] <= 1)
}

/// Rows (1-based) in which two partitions differ, one being a vertical strip
/// over the other.
pub fn dif(a: &PartitionRep, b: &PartitionRep) -> Result<RowSet, GrowthError> {
    if !is_vertical_strip(a, b) && !is_vertical_strip(b, a) {
        return Err(GrowthError::NotVerticalStrip(*a, *b));
    }
    Ok(RowSet((0..3).filter(|&i| a.parts[i] != b.parts[i]).map(|i| i as u8 + 1).collect()))
}

/// The growth rule for one unit square: given `g = γ(i,j)`,
/// `g_below = γ(i+1,j)` and `g_right = γ(i,j+1)`, returns `γ(i+1,j+1)`,
/// the sorted `g_below + g_right - g`.
pub fn local_rule(
    g: &PartitionRep,
    g_below: &PartitionRep,
    g_right: &PartitionRep,
) -> Result<PartitionRep, GrowthError> {
    if !is_vertical_strip(g, g_below) || !is_vertical_strip(g_right, g) {
        return Err(GrowthError::NotVerticalStrip(*g, *g_below));
    }
    let mut raw = [0i64; 3];
    for i in 0..3 {
        raw[i] = g_below.parts[i] as i64 + g_right.parts[i] as i64 - g.parts[i] as i64;
    }
    if raw.iter().any(|&x| x < 0) {
        return Err(GrowthError::NotAPartitionAfterSort);
    }
    raw.sort_unstable_by(|a, b| b.cmp(a));
    let result = PartitionRep { parts: [raw[0] as u32, raw[1] as u32, raw[2] as u32] };
    if !is_vertical_strip(&result, g_below) || !is_vertical_strip(g_right, &result) {
        return Err(GrowthError::NotAPartitionAfterSort);
    }
    Ok(result)
}
