use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::GrowthError;
use crate::building::DominantWeight;

/// A sequence of fundamental weights, written over `{1, 2}`.
///
/// Words whose box count `#1 + 2*#2` is not a multiple of three are allowed;
/// they simply have no invariants.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct TypeWord {
    letters: Vec<u8>,
}

impl TypeWord {
    pub fn new(letters: Vec<u8>) -> Result<Self, GrowthError> {
        if letters.is_empty() {
            return Err(GrowthError::Parse("empty type word".into()));
        }
        if let Some(bad) = letters.iter().find(|&&l| l != 1 && l != 2) {
            return Err(GrowthError::Parse(format!("type word letter {bad} is not 1 or 2")));
        }
        Ok(TypeWord { letters })
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Letter at a cyclic position.
    pub fn letter(&self, i: usize) -> u8 {
        self.letters[i % self.letters.len()]
    }

    /// The fundamental weight at a cyclic position.
    pub fn weight(&self, i: usize) -> DominantWeight {
        letter_weight(self.letter(i))
    }

    /// Total number of boxes added along a row: `#1 + 2*#2`.
    pub fn boxes(&self) -> u32 {
        self.letters.iter().map(|&l| l as u32).sum()
    }

    /// Whether the box count is a multiple of three.
    pub fn is_balanced(&self) -> bool {
        self.boxes().is_multiple_of(3)
    }

    /// Width `k` of the final rectangle `(k, k, k)`.
    pub fn rectangle_width(&self) -> u32 {
        self.boxes() / 3
    }

    /// Cyclic shift: position `r` becomes position 0.
    pub fn rotated(&self, r: usize) -> Self {
        let n = self.letters.len();
        TypeWord { letters: (0..n).map(|i| self.letters[(i + r) % n]).collect() }
    }

    /// All words over `{1, 2}` of the given length, in lexicographic order.
    pub fn all_of_length(n: usize) -> Vec<TypeWord> {
        (0..1u32 << n)
            .map(|mask| TypeWord {
                letters: (0..n).map(|i| if mask >> (n - 1 - i) & 1 == 1 { 2 } else { 1 }).collect(),
            })
            .collect()
    }
}

/// `1 -> w1`, `2 -> w2`.
pub fn letter_weight(letter: u8) -> DominantWeight {
    if letter == 1 {
        DominantWeight::OMEGA1
    } else {
        DominantWeight::OMEGA2
    }
}

impl FromStr for TypeWord {
    type Err = GrowthError;
    fn from_str(s: &str) -> Result<Self, GrowthError> {
        let letters = s
            .trim()
            .chars()
            .filter(|c| *c != ',' && !c.is_whitespace())
            .map(|c| match c {
                '1' => Ok(1),
                '2' => Ok(2),
                other => Err(GrowthError::Parse(format!("type word letter `{other}` is not 1 or 2"))),
            })
            .collect::<Result<Vec<u8>, _>>()?;
        TypeWord::new(letters)
    }
}

impl TryFrom<String> for TypeWord {
    type Error = GrowthError;
    fn try_from(s: String) -> Result<Self, GrowthError> {
        s.parse()
    }
}

impl From<TypeWord> for String {
    fn from(w: TypeWord) -> String {
        w.to_string()
    }
}

impl fmt::Display for TypeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.letters.iter().try_for_each(|l| write!(f, "{l}"))
    }
}

impl fmt::Debug for TypeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TypeWord({self})")
    }
}
