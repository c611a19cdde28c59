use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::web::{Dart, VertexKind, Web};
use super::WebError;
use crate::growth::TypeWord;

/// A triangulated polygon whose boundary may touch itself.
///
/// Vertices are `0..vertex_count`. The boundary walk lists the polygon
/// vertices counterclockwise with the interior on the left; boundary arc
/// `p` runs from `walk[p]` to `walk[p + 1]` (cyclically). A vertex may
/// occur several times on the walk, and an arc with no triangle on its
/// left is a pendant edge, traversed once in each direction. Every edge
/// carries the direction in which it is a `w1` step.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "DiskoidJson", into = "DiskoidJson")]
pub struct Diskoid {
    vertex_count: usize,
    walk: Vec<usize>,
    triangles: Vec<[usize; 3]>,
    arrows: BTreeSet<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct DiskoidJson {
    vertex_count: usize,
    walk: Vec<usize>,
    /// Counterclockwise vertex triples.
    triangles: Vec<[usize; 3]>,
    /// `[tail, head]` for every edge, pointing along its `w1` direction.
    arrows: Vec<[usize; 2]>,
}

impl TryFrom<DiskoidJson> for Diskoid {
    type Error = WebError;
    fn try_from(j: DiskoidJson) -> Result<Self, WebError> {
        Diskoid::new(j.vertex_count, j.walk, j.triangles, j.arrows.into_iter().map(|[a, b]| (a, b)).collect())
    }
}

impl From<Diskoid> for DiskoidJson {
    fn from(d: Diskoid) -> Self {
        DiskoidJson {
            vertex_count: d.vertex_count,
            walk: d.walk,
            triangles: d.triangles,
            arrows: d.arrows.into_iter().map(|(a, b)| [a, b]).collect(),
        }
    }
}

fn malformed<T>(msg: impl Into<String>) -> Result<T, WebError> {
    Err(WebError::MalformedDiskoid(msg.into()))
}

impl Diskoid {
    /// Builds a diskoid, checking the combinatorial invariants. The full
    /// planarity check happens when it is dualized.
    pub fn new(
        vertex_count: usize,
        walk: Vec<usize>,
        triangles: Vec<[usize; 3]>,
        arrows: BTreeSet<(usize, usize)>,
    ) -> Result<Self, WebError> {
        let d = Diskoid { vertex_count, walk, triangles, arrows };
        d.validate()?;
        Ok(d)
    }

    fn validate(&self) -> Result<(), WebError> {
        if self.walk.len() < 2 {
            return malformed("the boundary walk needs at least two arcs");
        }
        let mut used = vec![false; self.vertex_count];
        for &(a, b) in &self.arrows {
            if a >= self.vertex_count || b >= self.vertex_count || a == b {
                return malformed(format!("edge ({a}, {b}) is not between two distinct vertices"));
            }
            if self.arrows.contains(&(b, a)) {
                return malformed(format!("edge {a}-{b} is directed both ways"));
            }
            used[a] = true;
            used[b] = true;
        }
        if used.iter().any(|u| !u) {
            return malformed("every vertex must lie on an edge");
        }
        for p in 0..self.walk.len() {
            let (a, b) = self.arc(p);
            if !self.has_edge(a, b) {
                return malformed(format!("boundary arc {p} ({a}, {b}) is not an edge"));
            }
        }
        let mut sides = BTreeSet::new();
        for t in &self.triangles {
            let [a, b, c] = *t;
            if a == b || b == c || a == c {
                return malformed(format!("triangle {t:?} repeats a vertex"));
            }
            let forward = [(a, b), (b, c), (c, a)];
            let ccw = forward.iter().all(|e| self.arrows.contains(e));
            let cw = forward.iter().all(|&(x, y)| self.arrows.contains(&(y, x)));
            if !ccw && !cw {
                return malformed(format!("triangle {t:?} is not a directed 3-cycle"));
            }
            for side in forward {
                if !sides.insert(side) {
                    return malformed(format!("side {side:?} is used by two triangles"));
                }
            }
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// The counterclockwise boundary walk.
    pub fn walk(&self) -> &[usize] {
        &self.walk
    }

    /// Counterclockwise triangles.
    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    /// Edges as `(tail, head)` along their `w1` direction.
    pub fn arrows(&self) -> &BTreeSet<(usize, usize)> {
        &self.arrows
    }

    /// Number of boundary arcs.
    pub fn n(&self) -> usize {
        self.walk.len()
    }

    /// Boundary arc `p` as `(from, to)`.
    pub fn arc(&self, p: usize) -> (usize, usize) {
        let n = self.walk.len();
        (self.walk[p % n], self.walk[(p + 1) % n])
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.arrows.contains(&(a, b)) || self.arrows.contains(&(b, a))
    }

    /// Letter 1 where the arc runs along its `w1` direction.
    pub fn type_word(&self) -> TypeWord {
        let letters = (0..self.n()).map(|p| if self.arrows.contains(&self.arc(p)) { 1 } else { 2 }).collect();
        TypeWord::new(letters).expect("letters are 1 or 2")
    }

    /// Vertices not on the boundary walk.
    pub fn interior_vertices(&self) -> Vec<usize> {
        let on_walk: BTreeSet<usize> = self.walk.iter().copied().collect();
        (0..self.vertex_count).filter(|v| !on_walk.contains(v)).collect()
    }

    /// Number of edges at `v`.
    pub fn degree(&self, v: usize) -> usize {
        self.arrows.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// CAT(0): every interior vertex has degree at least six.
    pub fn is_cat0(&self) -> bool {
        self.interior_vertices().into_iter().all(|v| self.degree(v) >= 6)
    }

    /// Unordered edges `(min, max)`.
    pub fn edges(&self) -> BTreeSet<(usize, usize)> {
        self.arrows.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect()
    }

    /// The same diskoid with the basepoint advanced one arc.
    pub fn rotated(&self) -> Self {
        let mut d = self.clone();
        d.walk.rotate_left(1);
        d
    }

    /// The dual web: one trivalent vertex per triangle, one boundary leg
    /// per boundary arc.
    ///
    /// A triangle whose `w1` cycle runs counterclockwise becomes a sink,
    /// otherwise a source. Each web edge crosses a diskoid edge; the leg at
    /// arc `p` points into the disk exactly when the arc has letter 1.
    pub fn dualize(&self) -> Result<Web, WebError> {
        let n = self.n();
        let tcount = self.triangles.len();
        let mut kinds = vec![VertexKind::Boundary; n];
        // Oriented side -> dart id. Triangle t owns darts n + 3t + s.
        let mut side_dart = BTreeMap::new();
        for (t, &[a, b, c]) in self.triangles.iter().enumerate() {
            kinds.push(if self.arrows.contains(&(a, b)) { VertexKind::Sink } else { VertexKind::Source });
            for (s, side) in [(a, b), (b, c), (c, a)].into_iter().enumerate() {
                side_dart.insert(side, n + 3 * t + s);
            }
        }
        let total = n + 3 * tcount;
        let mut twin = vec![usize::MAX; total];
        let mut arc_of_side = BTreeMap::new();
        for p in 0..n {
            if arc_of_side.insert(self.arc(p), p).is_some() {
                return malformed(format!("boundary arc {p} repeats an earlier arc"));
            }
        }
        for p in 0..n {
            let (a, b) = self.arc(p);
            let partner = match side_dart.get(&(a, b)) {
                Some(&d) => d,
                // A pendant edge: the walk comes back along it.
                None => match arc_of_side.get(&(b, a)) {
                    Some(&q) if !side_dart.contains_key(&(b, a)) => q,
                    _ => return malformed(format!("boundary arc {p} borders neither a triangle nor a pendant edge")),
                },
            };
            twin[p] = partner;
            twin[partner] = p;
        }
        for (&(a, b), &d) in &side_dart {
            if twin[d] != usize::MAX {
                continue;
            }
            match side_dart.get(&(b, a)) {
                Some(&e) => {
                    twin[d] = e;
                    twin[e] = d;
                }
                None => return malformed(format!("edge {a}-{b} has a triangle on one side only and is not on the boundary")),
            }
        }
        let mut darts = Vec::with_capacity(total);
        for p in 0..n {
            let outgoing = self.arrows.contains(&self.arc(p));
            darts.push(Dart { vertex: p, twin: twin[p], outgoing });
        }
        for t in 0..tcount {
            let outgoing = kinds[n + t] == VertexKind::Source;
            for s in 0..3 {
                darts.push(Dart { vertex: n + t, twin: twin[n + 3 * t + s], outgoing });
            }
        }
        let mut rotation: Vec<Vec<usize>> = (0..n).map(|p| vec![p]).collect();
        rotation.extend((0..tcount).map(|t| vec![n + 3 * t, n + 3 * t + 1, n + 3 * t + 2]));
        Web::from_parts(kinds, darts, rotation, (0..n).collect(), 0).map_err(|e| match e {
            WebError::Malformed(msg) => WebError::MalformedDiskoid(msg),
            other => other,
        })
    }
}
