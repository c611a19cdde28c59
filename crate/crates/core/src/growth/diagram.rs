use std::fmt;

use serde::{Deserialize, Serialize};

use super::partition::{is_vertical_strip, local_rule, PartitionRep};
use super::word::TypeWord;
use super::GrowthError;
use crate::building::DominantWeight;

/// A cylindrical growth diagram.
///
/// Row `i` (0-based) lists `γ(i, i), γ(i, i+1), ..., γ(i, i+n)`, the
/// partitions recording the distances from polygon vertex `i` to the
/// vertices that follow it. Rows are stored for `i = 0..=n`; row `n`
/// repeats row 0, and every other index is read periodically.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "DiagramJson", into = "DiagramJson")]
pub struct GrowthDiagram {
    word: TypeWord,
    rows: Vec<Vec<PartitionRep>>,
}

impl GrowthDiagram {
    /// Fills the whole diagram from its first row and checks every
    /// defining property.
    pub fn complete_from_row(first_row: &[PartitionRep]) -> Result<Self, GrowthError> {
        let word = chain_word(first_row)?;
        let n = word.len();
        let pi = first_row[n];
        let mut rows = vec![first_row.to_vec()];
        for i in 0..n {
            let above = &rows[i];
            let mut next = Vec::with_capacity(n + 1);
            next.push(PartitionRep::EMPTY);
            for m in 1..n {
                let value = local_rule(&above[m], &next[m - 1], &above[m + 1])
                    .map_err(|_| GrowthError::LocalRuleViolation { row: i + 2, col: i + m + 2 })?;
                next.push(value);
            }
            next.push(pi);
            rows.push(next);
        }
        let diagram = GrowthDiagram { word, rows };
        diagram.validate()?;
        Ok(diagram)
    }

    fn validate(&self) -> Result<(), GrowthError> {
        let n = self.n();
        let k = self.rectangle_width();
        for i in 0..=n {
            let row = &self.rows[i];
            if row[0] != PartitionRep::EMPTY || row[n] != PartitionRep::rectangle(k) {
                return Err(GrowthError::InvalidChain(format!("row {} has wrong end points", i + 1)));
            }
            for m in 0..n {
                if !is_vertical_strip(&row[m + 1], &row[m]) || row[m + 1] == row[m] {
                    return Err(GrowthError::InvalidChain(format!(
                        "row {} step {} is not a vertical strip",
                        i + 1,
                        m + 1
                    )));
                }
            }
            if i < n {
                // Columns: γ(i+1, j) sits inside γ(i, j) as a vertical strip.
                let below = &self.rows[i + 1];
                for m in 1..=n {
                    if !is_vertical_strip(&row[m], &below[m - 1]) {
                        return Err(GrowthError::LocalRuleViolation { row: i + 2, col: i + m + 1 });
                    }
                }
            }
        }
        if self.rows[n] != self.rows[0] {
            return Err(GrowthError::PeriodicityViolation);
        }
        for i in 0..n {
            for j in i..=i + n {
                if j > n {
                    break;
                }
                let mirrored = self.rows[j][i + n - j];
                if mirrored != self.rows[i][j - i].complement(k)? {
                    return Err(GrowthError::ComplementViolation { row: i + 1, col: j + 1 });
                }
            }
        }
        Ok(())
    }

    pub fn word(&self) -> &TypeWord {
        &self.word
    }

    /// Number of polygon vertices.
    pub fn n(&self) -> usize {
        self.word.len()
    }

    /// Width of the rectangle `(k, k, k)` ending every row.
    pub fn rectangle_width(&self) -> u32 {
        self.word.rectangle_width()
    }

    pub fn first_row(&self) -> &[PartitionRep] {
        &self.rows[0]
    }

    /// Row `i` (read periodically).
    pub fn row(&self, i: usize) -> &[PartitionRep] {
        &self.rows[i % self.n()]
    }

    /// All `n + 1` stored rows.
    pub fn rows(&self) -> &[Vec<PartitionRep>] {
        &self.rows
    }

    /// `γ(i, j)` for `i <= j <= i + n`, with `i` read periodically.
    pub fn entry(&self, i: usize, j: usize) -> PartitionRep {
        assert!(j >= i && j - i <= self.n(), "entry outside the staircase");
        self.rows[i % self.n()][j - i]
    }

    /// The distance `d(L_i, L_j)` recorded by the diagram, any `i`, `j`.
    pub fn weight(&self, i: usize, j: usize) -> DominantWeight {
        let n = self.n();
        let (i, j) = (i % n, j % n);
        self.rows[i][(j + n - i) % n].weight()
    }

    /// The same diagram re-based so that vertex `r` comes first.
    pub fn rotated(&self, r: usize) -> Self {
        let n = self.n();
        let mut rows: Vec<Vec<PartitionRep>> = (0..n).map(|i| self.rows[(i + r) % n].clone()).collect();
        rows.push(rows[0].clone());
        GrowthDiagram { word: self.word.rotated(r % n), rows }
    }

    /// Promotion: the diagram re-based at the next vertex.
    pub fn promoted(&self) -> Self {
        self.rotated(1)
    }

    /// Text form: one row per line, partitions separated by commas.
    pub fn to_text(&self) -> String {
        self.rows
            .iter()
            .map(|row| row.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", "))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// Serialized shape: the type word and the first row; the rest is derived.
#[derive(Serialize, Deserialize)]
struct DiagramJson {
    word: TypeWord,
    first_row: Vec<PartitionRep>,
}

impl TryFrom<DiagramJson> for GrowthDiagram {
    type Error = GrowthError;
    fn try_from(json: DiagramJson) -> Result<Self, GrowthError> {
        let diagram = GrowthDiagram::complete_from_row(&json.first_row)?;
        if diagram.word != json.word {
            return Err(GrowthError::InvalidChain(format!(
                "first row has type {} but the word says {}",
                diagram.word, json.word
            )));
        }
        Ok(diagram)
    }
}

impl From<GrowthDiagram> for DiagramJson {
    fn from(d: GrowthDiagram) -> Self {
        DiagramJson { first_row: d.rows[0].clone(), word: d.word }
    }
}

impl fmt::Debug for GrowthDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "GrowthDiagram({})", self.word)?;
        f.write_str(&self.to_text())
    }
}

/// Reads the type word off a chain `∅ -> ... -> (k,k,k)` of vertical strips.
pub fn chain_word(row: &[PartitionRep]) -> Result<TypeWord, GrowthError> {
    if row.len() < 2 {
        return Err(GrowthError::InvalidChain("a row needs at least two entries".into()));
    }
    if row[0] != PartitionRep::EMPTY {
        return Err(GrowthError::InvalidChain("a row must start at the empty partition".into()));
    }
    if !row[row.len() - 1].is_rectangle() {
        return Err(GrowthError::InvalidChain("a row must end at a rectangle (k,k,k)".into()));
    }
    let mut letters = Vec::with_capacity(row.len() - 1);
    for (m, pair) in row.windows(2).enumerate() {
        let size = pair[1].size() as i64 - pair[0].size() as i64;
        if !is_vertical_strip(&pair[1], &pair[0]) || !(1..=2).contains(&size) {
            return Err(GrowthError::InvalidChain(format!(
                "step {} ({} -> {}) is not a vertical strip of size 1 or 2",
                m + 1,
                pair[0],
                pair[1]
            )));
        }
        letters.push(size as u8);
    }
    TypeWord::new(letters)
}

/// One promotion step on a row: the next row of the completed diagram.
pub fn promotion(row: &[PartitionRep]) -> Result<Vec<PartitionRep>, GrowthError> {
    Ok(GrowthDiagram::complete_from_row(row)?.row(1).to_vec())
}
