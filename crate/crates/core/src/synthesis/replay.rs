use std::collections::BTreeSet;

use serde::Serialize;

use crate::growth::GrowthDiagram;
use crate::webs::Diskoid;

use super::moves::{elbow_move, find_double_elbow, find_sharp, find_uturn, is_elbow, remove_sharp, remove_uturn};
use super::SynthesisError;

/// One reduction step, at a 0-based position of the diagram it acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Move {
    UTurnRemoval(usize),
    SharpCornerRemoval(usize),
    ElbowMove(usize),
}

impl Move {
    pub fn position(&self) -> usize {
        match *self {
            Move::UTurnRemoval(i) | Move::SharpCornerRemoval(i) | Move::ElbowMove(i) => i,
        }
    }

    pub fn apply(&self, d: &GrowthDiagram) -> Result<GrowthDiagram, SynthesisError> {
        match *self {
            Move::UTurnRemoval(i) => remove_uturn(d, i),
            Move::SharpCornerRemoval(i) => remove_sharp(d, i),
            Move::ElbowMove(i) => elbow_move(d, i),
        }
    }
}

/// The reduction of a diagram down to a 2-gon. Move `k` takes state `k`
/// to state `k + 1`.
#[derive(Clone, Debug)]
pub struct MoveLog {
    states: Vec<GrowthDiagram>,
    moves: Vec<Move>,
}

impl MoveLog {
    pub fn initial(&self) -> &GrowthDiagram {
        &self.states[0]
    }

    pub fn final_diagram(&self) -> &GrowthDiagram {
        self.states.last().expect("at least the initial state")
    }

    pub fn moves(&self) -> &[Move] {
        &self.moves
    }

    /// All intermediate diagrams, starting with the initial one.
    pub fn states(&self) -> &[GrowthDiagram] {
        &self.states
    }

    /// Re-applies every move from the initial diagram and returns the end
    /// result, which matches [`MoveLog::final_diagram`] for a sound log.
    pub fn replay_forward(&self) -> Result<GrowthDiagram, SynthesisError> {
        self.moves.iter().try_fold(self.initial().clone(), |d, m| m.apply(&d))
    }
}

/// Shrinks `d` to a 2-gon: U-turns first, then sharp corners, otherwise a
/// chain of elbow moves starting at a double elbow, each one step further
/// along, until a corner appears.
pub fn reduce_diagram(d: &GrowthDiagram) -> Result<MoveLog, SynthesisError> {
    let budget = d.n() * d.n();
    let mut log = MoveLog { states: vec![d.clone()], moves: Vec::new() };
    let mut chain: Option<usize> = None;
    while log.final_diagram().n() > 2 {
        if log.moves.len() >= budget {
            return Err(SynthesisError::TooManyMoves(budget));
        }
        let cur = log.final_diagram();
        let step = if let Some(i) = find_uturn(cur) {
            chain = None;
            Move::UTurnRemoval(i)
        } else if let Some(i) = find_sharp(cur) {
            chain = None;
            Move::SharpCornerRemoval(i)
        } else {
            // Moves are applied to the diagram re-based at the move, so the
            // next elbow of a chain sits at position 1.
            let i = match chain {
                Some(p) if is_elbow(cur, p) => p,
                _ => find_double_elbow(cur)?.0,
            };
            chain = Some(1);
            Move::ElbowMove(i)
        };
        let next = step.apply(cur)?;
        log.states.push(next);
        log.moves.push(step);
    }
    Ok(log)
}

/// A diskoid under construction.
struct Builder {
    vertex_count: usize,
    walk: Vec<usize>,
    triangles: Vec<[usize; 3]>,
    arrows: BTreeSet<(usize, usize)>,
}

impl Builder {
    /// `w1` edge from `a` to `b` for letter 1, reversed for letter 2.
    fn add_edge(&mut self, a: usize, b: usize, letter: u8) -> Result<(), SynthesisError> {
        let (tail, head) = if letter == 1 { (a, b) } else { (b, a) };
        if self.arrows.contains(&(head, tail)) {
            return Err(SynthesisError::Replay(format!("edge {a}-{b} would get both directions")));
        }
        self.arrows.insert((tail, head));
        Ok(())
    }

    /// Undoes `m`, which took `pre` to the diagram whose walk is current.
    fn undo(&mut self, m: Move, pre: &GrowthDiagram) -> Result<(), SynthesisError> {
        let n = pre.n();
        let i = m.position() % n;
        let r = pre.rotated(i);
        let post = &self.walk;
        // The pre-move walk read from position i, with a hole at 1.
        let mut walk: Vec<Option<usize>> = match m {
            Move::UTurnRemoval(_) => [Some(post[0]), None, Some(post[0])].into_iter().chain(post[1..].iter().copied().map(Some)).collect(),
            Move::SharpCornerRemoval(_) => [Some(post[0]), None].into_iter().chain(post[1..].iter().copied().map(Some)).collect(),
            Move::ElbowMove(_) => [Some(post[0]), None].into_iter().chain(post[2..].iter().copied().map(Some)).collect(),
        };
        if walk.len() != n {
            return Err(SynthesisError::Replay(format!("walk of length {} does not fit a {n}-gon", walk.len())));
        }
        // The restored vertex may coincide with a later polygon vertex.
        let restored = match (2..n).find(|&j| r.weight(1, j).is_zero()) {
            Some(j) => walk[j].expect("only position 1 is open"),
            None => {
                self.vertex_count += 1;
                self.vertex_count - 1
            }
        };
        walk[1] = Some(restored);
        let w: Vec<usize> = walk.into_iter().map(|v| v.expect("filled")).collect();
        let letters = r.word();
        match m {
            Move::UTurnRemoval(_) => self.add_edge(w[0], w[1], letters.letter(0))?,
            Move::SharpCornerRemoval(_) => {
                self.add_edge(w[0], w[1], letters.letter(0))?;
                self.add_edge(w[1], w[2], letters.letter(1))?;
                self.triangles.push([w[0], w[1], w[2]]);
            }
            Move::ElbowMove(_) => {
                let replaced = self.walk[1];
                self.add_edge(w[0], w[1], letters.letter(0))?;
                self.add_edge(w[1], w[2], letters.letter(1))?;
                // Make the triangle (w0, w1, replaced) a directed 3-cycle.
                let letter = if self.arrows.contains(&(w[0], w[1])) { 1 } else { 2 };
                self.add_edge(w[1], replaced, letter)?;
                self.triangles.push([w[0], w[1], replaced]);
                self.triangles.push([w[1], w[2], replaced]);
            }
        }
        let mut unrotated = vec![0; n];
        for (m, v) in w.into_iter().enumerate() {
            unrotated[(m + i) % n] = v;
        }
        self.walk = unrotated;
        Ok(())
    }
}

/// Replays a reduction backwards from the 2-gon, gluing a pendant edge,
/// a triangle or a pair of triangles for each move undone.
pub fn diskoid_from_log(log: &MoveLog) -> Result<Diskoid, SynthesisError> {
    let base = log.final_diagram();
    if base.n() != 2 {
        return Err(SynthesisError::Replay(format!("log ends at a {}-gon, not a 2-gon", base.n())));
    }
    let mut b = Builder { vertex_count: 2, walk: vec![0, 1], triangles: Vec::new(), arrows: BTreeSet::new() };
    b.add_edge(0, 1, base.word().letter(0))?;
    for (k, m) in log.moves().iter().enumerate().rev() {
        b.undo(*m, &log.states()[k])?;
    }
    let diskoid = Diskoid::new(b.vertex_count, b.walk, b.triangles, b.arrows)?;
    if diskoid.type_word() != *log.initial().word() {
        return Err(SynthesisError::Replay(format!(
            "rebuilt diskoid has type {} instead of {}",
            diskoid.type_word(),
            log.initial().word()
        )));
    }
    Ok(diskoid)
}

/// The CAT(0) diskoid of a growth diagram.
pub fn diskoid_from_diagram(d: &GrowthDiagram) -> Result<Diskoid, SynthesisError> {
    diskoid_from_log(&reduce_diagram(d)?)
}
