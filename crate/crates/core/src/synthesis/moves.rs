use crate::building::DominantWeight;
use crate::growth::{GrowthDiagram, PartitionRep};

use super::SynthesisError;

fn precondition<T>(msg: String) -> Result<T, SynthesisError> {
    Err(SynthesisError::PreconditionViolated(msg))
}

/// Smallest `i` (0-based, scanning from the basepoint) where vertices
/// `i` and `i + 2` coincide.
pub fn find_uturn(d: &GrowthDiagram) -> Option<usize> {
    let n = d.n();
    (n >= 3).then(|| (0..n).find(|&i| d.weight(i, i + 2).is_zero())).flatten()
}

/// Smallest `i` where vertices `i` and `i + 2` are adjacent.
pub fn find_sharp(d: &GrowthDiagram) -> Option<usize> {
    let n = d.n();
    (n >= 3).then(|| (0..n).find(|&i| d.weight(i, i + 2).is_fundamental())).flatten()
}

/// Removes vertex `i + 1` of a U-turn and merges vertices `i` and `i + 2`.
/// The result is based at the merged vertex, followed by `i + 3, ...`.
pub fn remove_uturn(d: &GrowthDiagram, i: usize) -> Result<GrowthDiagram, SynthesisError> {
    let n = d.n();
    if n < 3 || !d.weight(i, i + 2).is_zero() {
        return precondition(format!("no U-turn at position {i}"));
    }
    // Vertex i + 2 equals vertex i, so its row read up to vertex i + n is
    // the first row of the shorter polygon.
    let rotated = d.rotated(i % n);
    let first: Vec<PartitionRep> = rotated.row(2)[..=n - 2].to_vec();
    Ok(GrowthDiagram::complete_from_row(&first)?)
}

/// Removes vertex `i + 1` of a sharp corner, joining `i` to `i + 2`.
/// The result is based at vertex `i`, followed by `i + 2, i + 3, ...`.
pub fn remove_sharp(d: &GrowthDiagram, i: usize) -> Result<GrowthDiagram, SynthesisError> {
    let n = d.n();
    if n < 3 || !d.weight(i, i + 2).is_fundamental() {
        return precondition(format!("no sharp corner at position {i}"));
    }
    let rotated = d.rotated(i % n);
    let row = rotated.first_row();
    // Two w2 steps make a w1 step only after dropping a full column.
    let drop_column = row[2].parts()[2] > 0;
    let mut first = vec![PartitionRep::EMPTY];
    for p in &row[2..] {
        let [a, b, c] = p.parts();
        first.push(if drop_column { PartitionRep::new([a - 1, b - 1, c - 1])? } else { *p });
    }
    Ok(GrowthDiagram::complete_from_row(&first)?)
}

/// Whether `i, i + 1, i + 2` form an elbow: distinct vertices with two
/// different step weights.
pub fn is_elbow(d: &GrowthDiagram, i: usize) -> bool {
    d.word().letter(i) != d.word().letter(i + 1) && !d.weight(i, i + 2).is_zero()
}

/// A double elbow `(i, a)`: vertices `i, ..., i + a - 1` with elbows at
/// both ends of a straight run, where the last vertex is no farther (in
/// steps) from the first than the one before it.
pub fn find_double_elbow(d: &GrowthDiagram) -> Result<(usize, usize), SynthesisError> {
    let n = d.n();
    for i in 0..n {
        if !is_elbow(d, i) {
            continue;
        }
        let run_letter = d.word().letter(i + 1);
        let mut j = i + 2;
        while d.word().letter(j) == run_letter && j < i + n {
            j += 1;
        }
        // Vertices i ..= j + 1 with the closing elbow at j - 1, j, j + 1.
        let a = j - i + 2;
        if a > n || !is_elbow(d, j - 1) {
            continue;
        }
        if d.weight(i, j + 1).steps() == d.weight(i, j).steps() {
            return Ok((i % n, a));
        }
    }
    Err(SynthesisError::NoDoubleElbow)
}

/// Replaces vertex `i + 1` of the elbow at `i` by the common neighbour of
/// `i`, `i + 1` and `i + 2`. This swaps the two step weights; the rest of
/// the diagram is recomputed from the new first row. The result keeps the
/// rotation that puts vertex `i` first.
pub fn elbow_move(d: &GrowthDiagram, i: usize) -> Result<GrowthDiagram, SynthesisError> {
    if d.n() < 3 || !is_elbow(d, i) {
        return precondition(format!("no elbow at position {i}"));
    }
    let rotated = d.rotated(i % d.n());
    let mut first = rotated.first_row().to_vec();
    first[1] = if first[1].weight() == DominantWeight::OMEGA1 {
        PartitionRep::new([1, 1, 0])?
    } else {
        PartitionRep::new([1, 0, 0])?
    };
    Ok(GrowthDiagram::complete_from_row(&first)?)
}
