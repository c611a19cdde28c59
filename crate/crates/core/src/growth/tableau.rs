use std::fmt;

use serde::{Deserialize, Serialize};

use super::partition::{dif, PartitionRep};
use super::GrowthError;

/// A row-strict semistandard tableau with at most three rows, whose
/// entries are the step indices `1..=n` of a chain.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Tableau {
    rows: [Vec<usize>; 3],
}

impl Tableau {
    /// Builds a tableau, checking that rows strictly increase, that each
    /// entry sits in one or two rows and that `1..=n` all occur.
    pub fn new(rows: [Vec<usize>; 3]) -> Result<Self, GrowthError> {
        let bad = |why: &str| GrowthError::InvalidChain(format!("not a valid tableau: {why}"));
        if rows.iter().any(|r| r.windows(2).any(|w| w[0] >= w[1])) {
            return Err(bad("rows must strictly increase"));
        }
        if rows.iter().flatten().any(|&x| x == 0) {
            return Err(bad("entries start at 1"));
        }
        let n = rows.iter().flatten().copied().max().unwrap_or(0);
        for j in 1..=n {
            let hits = rows.iter().filter(|r| r.contains(&j)).count();
            if hits == 0 || hits > 2 {
                return Err(bad(&format!("entry {j} occurs in {hits} rows")));
            }
        }
        let tableau = Tableau { rows };
        tableau.to_row()?;
        Ok(tableau)
    }

    pub fn rows(&self) -> &[Vec<usize>; 3] {
        &self.rows
    }

    /// The largest entry, equal to the chain length.
    pub fn max_entry(&self) -> usize {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// The chain `∅ = γ(0) ⊂ γ(1) ⊂ ... ⊂ γ(n)` where `γ(j)` holds the
    /// entries up to `j`.
    pub fn to_row(&self) -> Result<Vec<PartitionRep>, GrowthError> {
        let n = self.max_entry();
        let mut row = vec![PartitionRep::EMPTY];
        for j in 1..=n {
            let lengths: Vec<u32> =
                self.rows.iter().map(|r| r.iter().filter(|&&x| x <= j).count() as u32).collect();
            row.push(PartitionRep::new([lengths[0], lengths[1], lengths[2]])?);
        }
        Ok(row)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lines: Vec<String> = self
            .rows
            .iter()
            .filter(|r| !r.is_empty())
            .map(|r| r.iter().map(usize::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        f.write_str(&lines.join(" / "))
    }
}

/// Entry `j` goes into the tableau rows where `γ(j)` and `γ(j-1)` differ.
pub fn row_to_tableau(row: &[PartitionRep]) -> Result<Tableau, GrowthError> {
    let mut rows: [Vec<usize>; 3] = Default::default();
    for (j, pair) in row.windows(2).enumerate() {
        let changed = dif(&pair[1], &pair[0])?;
        if changed.is_empty() || !pair[1].contains(&pair[0]) {
            return Err(GrowthError::InvalidChain(format!("step {} adds no boxes", j + 1)));
        }
        for &r in changed.rows() {
            rows[r as usize - 1].push(j + 1);
        }
    }
    Ok(Tableau { rows })
}

pub fn tableau_to_row(tableau: &Tableau) -> Result<Vec<PartitionRep>, GrowthError> {
    tableau.to_row()
}
