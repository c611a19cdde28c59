use std::collections::HashMap;

use super::diagram::GrowthDiagram;
use super::partition::PartitionRep;
use super::word::TypeWord;
use super::GrowthError;

/// Row choices for a strip of one or two boxes, smallest first.
const ONE_BOX: [&[usize]; 3] = [&[0], &[1], &[2]];
const TWO_BOXES: [&[usize]; 3] = [&[0, 1], &[0, 2], &[1, 2]];

/// Every growth diagram of the given type, ordered by first row with the
/// lexicographically smallest strip tried first at each step.
///
/// A chain that fails to complete would contradict the theory, so it is
/// reported as an error rather than skipped.
pub fn enumerate_diagrams(word: &TypeWord) -> Result<Vec<GrowthDiagram>, GrowthError> {
    let mut out = Vec::new();
    for_each_chain(word, |chain| {
        out.push(GrowthDiagram::complete_from_row(chain)?);
        Ok(())
    })?;
    Ok(out)
}

/// Calls `visit` on every first-row chain of the given type, in
/// enumeration order.
pub fn for_each_chain<E>(
    word: &TypeWord,
    mut visit: impl FnMut(&[PartitionRep]) -> Result<(), E>,
) -> Result<(), E> {
    if !word.is_balanced() {
        return Ok(());
    }
    let k = word.rectangle_width();
    let mut chain = vec![PartitionRep::EMPTY];
    extend_chain(word.letters(), k, &mut chain, &mut visit)
}

fn extend_chain<E>(
    letters: &[u8],
    k: u32,
    chain: &mut Vec<PartitionRep>,
    visit: &mut impl FnMut(&[PartitionRep]) -> Result<(), E>,
) -> Result<(), E> {
    let step = chain.len() - 1;
    let current = chain[step];
    if step == letters.len() {
        return if current.is_rectangle() { visit(chain) } else { Ok(()) };
    }
    let choices = if letters[step] == 1 { &ONE_BOX } else { &TWO_BOXES };
    for rows in choices {
        let Some(next) = current.add_boxes(rows) else { continue };
        if next.parts()[0] > k {
            continue;
        }
        chain.push(next);
        extend_chain(letters, k, chain, visit)?;
        chain.pop();
    }
    Ok(())
}

/// Number of chains from the empty partition to a `k x 3` rectangle whose
/// steps are vertical strips of the sizes in `word`.
///
/// This counts by dynamic programming over plain row-length triples and
/// shares no code with [`enumerate_diagrams`], so the two can check each
/// other.
pub fn dim_inv(word: &TypeWord) -> u64 {
    let letters = word.letters();
    let total: u32 = letters.iter().map(|&l| l as u32).sum();
    if !total.is_multiple_of(3) {
        return 0;
    }
    let k = total / 3;
    let mut layer: HashMap<[u32; 3], u64> = HashMap::from([([0, 0, 0], 1)]);
    for &size in letters {
        let mut next: HashMap<[u32; 3], u64> = HashMap::new();
        for (shape, count) in &layer {
            for mask in 1u8..8 {
                if mask.count_ones() != size as u32 {
                    continue;
                }
                let mut grown = *shape;
                for (row, len) in grown.iter_mut().enumerate() {
                    if mask >> row & 1 == 1 {
                        *len += 1;
                    }
                }
                if grown[0] >= grown[1] && grown[1] >= grown[2] && grown[0] <= k {
                    *next.entry(grown).or_default() += count;
                }
            }
        }
        layer = next;
    }
    layer.get(&[k, k, k]).copied().unwrap_or(0)
}
