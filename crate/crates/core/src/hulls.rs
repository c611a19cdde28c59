//! Min-convex, max-convex and two-sided convex hulls of finite sets of
//! vertices, and the flag complex they induce.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::building::{DominantWeight, Lattice, LatticeClass};
use crate::series::Field;

/// A finite set of vertices, ordered by canonical basis.
pub type VertexSet<F> = BTreeSet<LatticeClass<F>>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HullError {
    #[error("vertices {0} and {1} of the path are not adjacent")]
    NotAPath(usize, usize),
    #[error("cannot take the hull of an empty set")]
    Empty,
}

/// Which of the two lattice operations generates the hull.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HullKind {
    /// Closed under intersections of representatives.
    Min,
    /// Closed under sums of representatives.
    Max,
}

/// The geodesic between `x` and `y` traced by `[L_x ∩ t^a L_y]` (min) or
/// `[L_x + t^a L_y]` (max) as `a` runs over the window where the class
/// changes. Starts at `x` and ends at `y`.
pub fn pair_geodesic<F: Field>(kind: HullKind, x: &LatticeClass<F>, y: &LatticeClass<F>) -> Vec<LatticeClass<F>> {
    let (lx, ly) = (x.lattice(), y.lattice());
    // Below `lo`, t^a L_y contains L_x; from `hi` on, L_x contains t^a L_y.
    let lo = -lx.min_shift_into(ly);
    let hi = ly.min_shift_into(lx);
    let combine = |a: i32| -> LatticeClass<F> {
        let shifted = ly.scaled(a);
        match kind {
            HullKind::Min => lx.intersection(&shifted).class(),
            HullKind::Max => lx.sum(&shifted).class(),
        }
    };
    // Intersections start at x for small a; sums start at x for large a.
    let shifts: Vec<i32> = match kind {
        HullKind::Min => (lo..=hi).collect(),
        HullKind::Max => (lo..=hi).rev().collect(),
    };
    let mut path: Vec<LatticeClass<F>> = Vec::new();
    for a in shifts {
        let class = combine(a);
        if path.last() != Some(&class) {
            path.push(class);
        }
    }
    debug_assert_eq!(path.first(), Some(x));
    debug_assert_eq!(path.last(), Some(y));
    path
}

/// `minconv(x, y)`: the geodesic taking `w2` steps, then `w1` steps.
pub fn minconv_pair<F: Field>(x: &LatticeClass<F>, y: &LatticeClass<F>) -> VertexSet<F> {
    pair_geodesic(HullKind::Min, x, y).into_iter().collect()
}

/// `maxconv(x, y)`: the geodesic taking `w1` steps, then `w2` steps.
pub fn maxconv_pair<F: Field>(x: &LatticeClass<F>, y: &LatticeClass<F>) -> VertexSet<F> {
    pair_geodesic(HullKind::Max, x, y).into_iter().collect()
}

/// `conv(x, y)`, the intersection of the two pair hulls.
pub fn conv_pair<F: Field>(x: &LatticeClass<F>, y: &LatticeClass<F>) -> VertexSet<F> {
    let max = maxconv_pair(x, y);
    minconv_pair(x, y).into_iter().filter(|v| max.contains(v)).collect()
}

/// The vertex where the min geodesic from `x` to `y` turns from `w2` steps
/// to `w1` steps (the max geodesic: from `w1` to `w2`). `None` when the
/// distance is a multiple of a single fundamental weight.
pub fn elbow_vertex<F: Field>(kind: HullKind, x: &LatticeClass<F>, y: &LatticeClass<F>) -> Option<LatticeClass<F>> {
    let d = x.distance(y);
    if d.a() == 0 || d.b() == 0 {
        return None;
    }
    let first_leg = match kind {
        HullKind::Min => d.b(),
        HullKind::Max => d.a(),
    };
    Some(pair_geodesic(kind, x, y)[first_leg as usize].clone())
}

/// Least superset of `seed` closed under the pair hull of `kind`.
pub fn closure<F: Field>(kind: HullKind, seed: &VertexSet<F>) -> Result<VertexSet<F>, HullError> {
    if seed.is_empty() {
        return Err(HullError::Empty);
    }
    let mut members: Vec<LatticeClass<F>> = seed.iter().cloned().collect();
    let mut set = seed.clone();
    // Every pair (i, j) with j < i is handled once, when i is reached.
    let mut i = 1;
    while i < members.len() {
        for j in 0..i {
            for v in pair_geodesic(kind, &members[j], &members[i]) {
                if set.insert(v.clone()) {
                    members.push(v);
                }
            }
        }
        i += 1;
    }
    Ok(set)
}

pub fn minconv<F: Field>(seed: &VertexSet<F>) -> Result<VertexSet<F>, HullError> {
    closure(HullKind::Min, seed)
}

pub fn maxconv<F: Field>(seed: &VertexSet<F>) -> Result<VertexSet<F>, HullError> {
    closure(HullKind::Max, seed)
}

/// `conv(S) = minconv(S) ∩ maxconv(S)`.
pub fn conv<F: Field>(seed: &VertexSet<F>) -> Result<VertexSet<F>, HullError> {
    let max = maxconv(seed)?;
    Ok(minconv(seed)?.into_iter().filter(|v| max.contains(v)).collect())
}

/// `conv` of a path, as the union of the pairwise hulls. Valid only for
/// paths, so consecutive vertices must be adjacent.
pub fn path_hull_fastpath<F: Field>(path: &[LatticeClass<F>]) -> Result<VertexSet<F>, HullError> {
    if path.is_empty() {
        return Err(HullError::Empty);
    }
    if let Some(i) = (1..path.len()).find(|&i| !path[i - 1].adjacent(&path[i])) {
        return Err(HullError::NotAPath(i - 1, i));
    }
    let mut out: VertexSet<F> = path.iter().cloned().collect();
    for i in 0..path.len() {
        for j in i + 1..path.len() {
            out.extend(conv_pair(&path[i], &path[j]));
        }
    }
    Ok(out)
}

/// A 2-dimensional simplicial complex on lattice classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex2<F: Field> {
    pub vertices: Vec<LatticeClass<F>>,
    /// Pairs `(i, j)` with `i < j`.
    pub edges: BTreeSet<(usize, usize)>,
    /// Triples `(i, j, k)` with `i < j < k`.
    pub triangles: BTreeSet<(usize, usize, usize)>,
}

/// The flag complex induced on a vertex set: edges join adjacent classes,
/// triangles fill every 3-clique.
pub fn induced_complex<F: Field>(set: &VertexSet<F>) -> SimplicialComplex2<F> {
    let vertices: Vec<LatticeClass<F>> = set.iter().cloned().collect();
    let n = vertices.len();
    let mut edges = BTreeSet::new();
    for i in 0..n {
        for j in i + 1..n {
            if vertices[i].adjacent(&vertices[j]) {
                edges.insert((i, j));
            }
        }
    }
    let mut triangles = BTreeSet::new();
    for &(i, j) in &edges {
        for k in j + 1..n {
            if edges.contains(&(i, k)) && edges.contains(&(j, k)) {
                triangles.insert((i, j, k));
            }
        }
    }
    SimplicialComplex2 { vertices, edges, triangles }
}

#[derive(Serialize)]
struct ComplexJson {
    vertices: Vec<Vec<Vec<String>>>,
    edges: Vec<EdgeJson>,
    triangles: Vec<[usize; 3]>,
}

#[derive(Serialize)]
struct EdgeJson {
    from: usize,
    to: usize,
    weight: DominantWeight,
}

impl<F: Field> SimplicialComplex2<F> {
    /// Index of a vertex, if present.
    pub fn index_of(&self, v: &LatticeClass<F>) -> Option<usize> {
        self.vertices.iter().position(|w| w == v)
    }

    /// Neighbors of each vertex.
    pub fn adjacency(&self) -> BTreeMap<usize, BTreeSet<usize>> {
        let mut adj: BTreeMap<usize, BTreeSet<usize>> = (0..self.vertices.len()).map(|i| (i, BTreeSet::new())).collect();
        for &(i, j) in &self.edges {
            adj.entry(i).or_default().insert(j);
            adj.entry(j).or_default().insert(i);
        }
        adj
    }

    /// Euler characteristic `V - E + F`.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edges.len() as i64 + self.triangles.len() as i64
    }

    /// JSON with vertex bases as text columns and edge weights.
    pub fn to_json(&self) -> serde_json::Value {
        let vertices = self.vertices.iter().map(|v| class_columns_text(v.lattice())).collect();
        let edges = self
            .edges
            .iter()
            .map(|&(i, j)| EdgeJson { from: i, to: j, weight: self.vertices[i].distance(&self.vertices[j]) })
            .collect();
        let triangles = self.triangles.iter().map(|&(i, j, k)| [i, j, k]).collect();
        serde_json::to_value(ComplexJson { vertices, edges, triangles }).expect("plain data serializes")
    }

    /// Graphviz rendering; `w1` edges are solid, `w2` edges dashed, and
    /// edges point along the `w1` direction.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph complex {\n");
        for (i, v) in self.vertices.iter().enumerate() {
            let label = class_columns_text(v.lattice())
                .iter()
                .map(|c| format!("({})", c.join(", ")))
                .collect::<Vec<_>>()
                .join(" ");
            let _ = writeln!(out, "  v{i} [label=\"{label}\"];");
        }
        for &(i, j) in &self.edges {
            let style = if self.vertices[i].distance(&self.vertices[j]) == DominantWeight::OMEGA1 { "solid" } else { "dashed" };
            let _ = writeln!(out, "  v{i} -- v{j} [style={style}];");
        }
        out.push_str("}\n");
        out
    }
}

fn class_columns_text<F: Field>(lattice: &Lattice<F>) -> Vec<Vec<String>> {
    lattice.basis().columns().iter().map(|c| c.iter().map(|x| x.to_text()).collect()).collect()
}
