use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::WebError;
use crate::growth::TypeWord;

/// What a web vertex is.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VertexKind {
    /// A univalent vertex on the disk boundary.
    Boundary,
    /// Trivalent, all three edges pointing in.
    Sink,
    /// Trivalent, all three edges pointing out.
    Source,
}

impl VertexKind {
    fn code(self) -> u32 {
        match self {
            VertexKind::Boundary => 0,
            VertexKind::Sink => 1,
            VertexKind::Source => 2,
        }
    }
}

/// A half-edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Dart {
    pub vertex: usize,
    pub twin: usize,
    /// Whether the edge points away from `vertex`.
    pub outgoing: bool,
}

/// A face found by tracing the rotation system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    /// Darts in traversal order; each runs along the face boundary.
    pub darts: Vec<usize>,
    /// Whether the face runs along the disk boundary. Such faces are not
    /// internal and never rewritten.
    pub touches_boundary: bool,
}

impl Face {
    /// Number of edges on an internal face (boundary legs not counted).
    pub fn size(&self) -> usize {
        self.darts.len()
    }
}

/// A planar web with boundary, stored as a rotation system.
///
/// Each vertex lists its darts counterclockwise. Boundary vertices sit on
/// the disk boundary in the counterclockwise order given by `boundary`;
/// boundary vertex `p` carries the leg for letter `p` of the type word.
/// Components that do not reach the boundary are allowed (they float in
/// some face), as are vertex-free closed loops, counted in `loops`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "WebJson", into = "WebJson")]
pub struct Web {
    kinds: Vec<VertexKind>,
    rotation: Vec<Vec<usize>>,
    darts: Vec<Dart>,
    boundary: Vec<usize>,
    loops: u32,
}

#[derive(Serialize, Deserialize)]
struct VertexJson {
    kind: VertexKind,
    /// Dart ids in counterclockwise order.
    darts: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct WebJson {
    vertices: Vec<VertexJson>,
    darts: Vec<Dart>,
    boundary: Vec<usize>,
    #[serde(default)]
    loops: u32,
}

impl TryFrom<WebJson> for Web {
    type Error = WebError;
    fn try_from(j: WebJson) -> Result<Self, WebError> {
        let (kinds, rotation) = j.vertices.into_iter().map(|v| (v.kind, v.darts)).unzip();
        Web::from_parts(kinds, j.darts, rotation, j.boundary, j.loops)
    }
}

impl From<Web> for WebJson {
    fn from(w: Web) -> Self {
        let vertices = w.kinds.into_iter().zip(w.rotation).map(|(kind, darts)| VertexJson { kind, darts }).collect();
        WebJson { vertices, darts: w.darts, boundary: w.boundary, loops: w.loops }
    }
}

/// A complete isomorphism invariant of a web with marked boundary.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalKey {
    boundary_part: Vec<u32>,
    floating: Vec<Vec<u32>>,
    loops: u32,
}

impl Web {
    /// Assembles and validates a web.
    pub fn from_parts(
        kinds: Vec<VertexKind>,
        darts: Vec<Dart>,
        rotation: Vec<Vec<usize>>,
        boundary: Vec<usize>,
        loops: u32,
    ) -> Result<Self, WebError> {
        let web = Web { kinds, rotation, darts, boundary, loops };
        web.validate()?;
        Ok(web)
    }

    /// The web with no vertices and no loops.
    pub fn empty() -> Self {
        Web { kinds: vec![], rotation: vec![], darts: vec![], boundary: vec![], loops: 0 }
    }

    /// `count` vertex-free closed loops.
    pub fn circles(count: u32) -> Self {
        Web { loops: count, ..Web::empty() }
    }

    /// A single strand between two boundary points, of type `12`.
    pub fn strand() -> Self {
        let darts = vec![Dart { vertex: 0, twin: 1, outgoing: true }, Dart { vertex: 1, twin: 0, outgoing: false }];
        Web {
            kinds: vec![VertexKind::Boundary; 2],
            rotation: vec![vec![0], vec![1]],
            darts,
            boundary: vec![0, 1],
            loops: 0,
        }
    }

    fn validate(&self) -> Result<(), WebError> {
        let bad = |msg: String| Err(WebError::Malformed(msg));
        let nv = self.kinds.len();
        if self.rotation.len() != nv {
            return bad("rotation list length differs from vertex count".into());
        }
        for (id, d) in self.darts.iter().enumerate() {
            if d.vertex >= nv || d.twin >= self.darts.len() || d.twin == id {
                return bad(format!("dart {id} has bad endpoints"));
            }
            let t = &self.darts[d.twin];
            if t.twin != id {
                return bad(format!("dart {id} and its twin disagree"));
            }
            if t.outgoing == d.outgoing {
                return bad(format!("edge through dart {id} has inconsistent direction"));
            }
        }
        let mut seen = vec![false; self.darts.len()];
        for (v, rot) in self.rotation.iter().enumerate() {
            for &d in rot {
                if d >= self.darts.len() || self.darts[d].vertex != v || seen[d] {
                    return bad(format!("rotation at vertex {v} is inconsistent"));
                }
                seen[d] = true;
            }
            let expect_degree = if self.kinds[v] == VertexKind::Boundary { 1 } else { 3 };
            if rot.len() != expect_degree {
                return bad(format!("vertex {v} has degree {}", rot.len()));
            }
            match self.kinds[v] {
                VertexKind::Sink if rot.iter().any(|&d| self.darts[d].outgoing) => {
                    return bad(format!("sink {v} has an outgoing edge"))
                }
                VertexKind::Source if rot.iter().any(|&d| !self.darts[d].outgoing) => {
                    return bad(format!("source {v} has an incoming edge"))
                }
                _ => {}
            }
        }
        if seen.iter().any(|s| !s) {
            return bad("a dart is missing from the rotation lists".into());
        }
        let mut on_boundary = vec![false; nv];
        for &b in &self.boundary {
            if b >= nv || self.kinds[b] != VertexKind::Boundary || on_boundary[b] {
                return bad(format!("boundary entry {b} is not a fresh boundary vertex"));
            }
            on_boundary[b] = true;
        }
        if (0..nv).any(|v| self.kinds[v] == VertexKind::Boundary && !on_boundary[v]) {
            return bad("a boundary vertex is missing from the boundary order".into());
        }
        self.check_planar()
    }

    /// Euler characteristic check: every closed component must embed in
    /// the sphere, and the boundary-connected part together with the disk
    /// boundary circle must be planar with the stated boundary order.
    fn check_planar(&self) -> Result<(), WebError> {
        let comp = self.components();
        let count = comp.iter().copied().max().map_or(0, |m| m + 1);
        let mut v = vec![0i64; count];
        let mut e2 = vec![0i64; count];
        let mut f = vec![0i64; count];
        for (x, &c) in comp.iter().enumerate() {
            v[c] += 1;
            e2[c] += self.rotation[x].len() as i64;
        }
        let touching: Vec<bool> = {
            let mut t = vec![false; count];
            for &b in &self.boundary {
                t[comp[b]] = true;
            }
            t
        };
        let mut outer_faces = 0i64;
        for face in self.faces() {
            let c = comp[self.darts[face.darts[0]].vertex];
            if face.touches_boundary {
                outer_faces += 1;
            } else {
                f[c] += 1;
            }
        }
        let mut boundary_chi = 0i64;
        for c in 0..count {
            if touching[c] {
                boundary_chi += v[c] - e2[c] / 2 + f[c];
            } else if v[c] - e2[c] / 2 + f[c] != 2 {
                return Err(WebError::Malformed("a closed component is not planar".into()));
            }
        }
        if !self.boundary.is_empty() {
            // Add the n boundary arcs and the outside face.
            let n = self.boundary.len() as i64;
            let chi = boundary_chi - n + outer_faces + 1;
            if chi != 2 {
                return Err(WebError::Malformed("rotation system is not planar with this boundary order".into()));
            }
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.kinds.len()
    }

    pub fn kinds(&self) -> &[VertexKind] {
        &self.kinds
    }

    pub fn kind(&self, v: usize) -> VertexKind {
        self.kinds[v]
    }

    pub fn darts(&self) -> &[Dart] {
        &self.darts
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    /// Boundary vertices in counterclockwise order from the basepoint.
    pub fn boundary(&self) -> &[usize] {
        &self.boundary
    }

    pub fn loops(&self) -> u32 {
        self.loops
    }

    /// Trivalent vertices.
    pub fn interior_vertex_count(&self) -> usize {
        self.kinds.iter().filter(|k| **k != VertexKind::Boundary).count()
    }

    pub fn edge_count(&self) -> usize {
        self.darts.len() / 2
    }

    /// The boundary type: letter 1 where the leg points into the disk.
    pub fn type_word(&self) -> Option<TypeWord> {
        let letters = self
            .boundary
            .iter()
            .map(|&b| if self.darts[self.rotation[b][0]].outgoing { 1 } else { 2 })
            .collect();
        TypeWord::new(letters).ok()
    }

    /// Whether this is the empty web.
    pub fn is_empty(&self) -> bool {
        self.kinds.is_empty() && self.loops == 0
    }

    /// Connected component index of every vertex.
    pub fn components(&self) -> Vec<usize> {
        let nv = self.kinds.len();
        let mut comp = vec![usize::MAX; nv];
        let mut next = 0;
        for start in 0..nv {
            if comp[start] != usize::MAX {
                continue;
            }
            let mut queue = VecDeque::from([start]);
            comp[start] = next;
            while let Some(v) = queue.pop_front() {
                for &d in &self.rotation[v] {
                    let u = self.darts[self.darts[d].twin].vertex;
                    if comp[u] == usize::MAX {
                        comp[u] = next;
                        queue.push_back(u);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    /// Position of a dart in its vertex's rotation.
    fn slot(&self, d: usize) -> usize {
        let v = self.darts[d].vertex;
        self.rotation[v].iter().position(|&x| x == d).expect("dart listed at its vertex")
    }

    /// The dart following `d` along the face on its left.
    fn face_successor(&self, d: usize) -> (usize, bool) {
        let t = self.darts[d].twin;
        let v = self.darts[t].vertex;
        if self.kinds[v] == VertexKind::Boundary {
            let p = self.boundary.iter().position(|&b| b == v).expect("boundary vertex is listed");
            let next = self.boundary[(p + 1) % self.boundary.len()];
            (self.rotation[next][0], true)
        } else {
            let rot = &self.rotation[v];
            let i = self.slot(t);
            (rot[(i + rot.len() - 1) % rot.len()], false)
        }
    }

    /// All faces. Faces that run along the disk boundary are marked; the
    /// others are internal faces (for floating components this includes
    /// their outer face, which is fine since they evaluate on the sphere).
    pub fn faces(&self) -> Vec<Face> {
        let mut used = vec![false; self.darts.len()];
        let mut faces = Vec::new();
        for start in 0..self.darts.len() {
            if used[start] {
                continue;
            }
            let mut darts = Vec::new();
            let mut touches = false;
            let mut d = start;
            loop {
                used[d] = true;
                darts.push(d);
                let (next, jumped) = self.face_successor(d);
                touches |= jumped;
                if next == start {
                    break;
                }
                d = next;
            }
            faces.push(Face { darts, touches_boundary: touches });
        }
        faces
    }

    /// Internal faces (those not running along the boundary).
    pub fn internal_faces(&self) -> Vec<Face> {
        self.faces().into_iter().filter(|f| !f.touches_boundary).collect()
    }

    /// Non-elliptic: no closed loops and every internal face has at least
    /// six sides.
    pub fn is_nonelliptic(&self) -> bool {
        self.loops == 0 && self.internal_faces().iter().all(|f| f.size() >= 6)
    }

    /// Same web with the basepoint advanced by one boundary position.
    pub fn rotated(&self) -> Self {
        let mut w = self.clone();
        if !w.boundary.is_empty() {
            w.boundary.rotate_left(1);
        }
        w
    }

    /// Canonical encoding by breadth-first search from the boundary
    /// vertices in order; each vertex lists its darts counterclockwise
    /// starting from the dart it was reached through.
    pub fn canonical_key(&self) -> CanonicalKey {
        let comp = self.components();
        let mut boundary_comps: Vec<usize> = self.boundary.iter().map(|&b| comp[b]).collect();
        boundary_comps.sort_unstable();
        boundary_comps.dedup();
        let starts: Vec<(usize, usize)> = self.boundary.iter().map(|&b| (b, self.rotation[b][0])).collect();
        let mut boundary_part = vec![self.boundary.len() as u32];
        boundary_part.extend(self.encode(&starts));
        let ncomp = comp.iter().copied().max().map_or(0, |m| m + 1);
        let mut floating = Vec::new();
        for c in 0..ncomp {
            if boundary_comps.binary_search(&c).is_ok() {
                continue;
            }
            let best = (0..self.darts.len())
                .filter(|&d| comp[self.darts[d].vertex] == c)
                .map(|d| self.encode(&[(self.darts[d].vertex, d)]))
                .min()
                .expect("component has darts");
            floating.push(best);
        }
        floating.sort();
        CanonicalKey { boundary_part, floating, loops: self.loops }
    }

    fn encode(&self, starts: &[(usize, usize)]) -> Vec<u32> {
        let nv = self.kinds.len();
        let mut label = vec![u32::MAX; nv];
        let mut entry = vec![0usize; nv];
        let mut queue = VecDeque::new();
        let mut next = 0u32;
        for &(v, d) in starts {
            label[v] = next;
            entry[v] = self.slot(d);
            next += 1;
            queue.push_back(v);
        }
        let mut code = Vec::new();
        while let Some(v) = queue.pop_front() {
            code.push(self.kinds[v].code());
            let rot = &self.rotation[v];
            for k in 0..rot.len() {
                let d = rot[(entry[v] + k) % rot.len()];
                let t = self.darts[d].twin;
                let u = self.darts[t].vertex;
                if label[u] == u32::MAX {
                    label[u] = next;
                    entry[u] = self.slot(t);
                    next += 1;
                    queue.push_back(u);
                }
                let deg = self.rotation[u].len();
                let rel = (self.slot(t) + deg - entry[u]) % deg;
                code.extend([label[u], rel as u32, self.darts[d].outgoing as u32]);
            }
        }
        code
    }

    /// Boundary-preserving isomorphism.
    pub fn is_isomorphic(&self, other: &Web) -> bool {
        self.canonical_key() == other.canonical_key()
    }

    /// Removes the vertices in `removed` and joins the cut strands as
    /// prescribed by `pairs`, each a pair of darts at removed vertices.
    ///
    /// Following a paired dart out of the removed region either reaches a
    /// kept vertex or re-enters the region at another paired dart; chains
    /// of the second kind that never leave become closed loops.
    pub(crate) fn rewire(&self, removed: &[usize], pairs: &[(usize, usize)]) -> Result<Web, WebError> {
        let nv = self.kinds.len();
        let mut gone = vec![false; nv];
        for &v in removed {
            gone[v] = true;
        }
        let mut partner = vec![usize::MAX; self.darts.len()];
        for &(a, b) in pairs {
            if !gone[self.darts[a].vertex] || !gone[self.darts[b].vertex] {
                return Err(WebError::Malformed("paired darts must sit at removed vertices".into()));
            }
            partner[a] = b;
            partner[b] = a;
        }
        let mut new_twin: Vec<Option<usize>> = vec![None; self.darts.len()];
        let mut visited = vec![false; self.darts.len()];
        let mut loops = self.loops;
        let ports: Vec<usize> = pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
        for &p in &ports {
            if visited[p] || gone[self.darts[self.darts[p].twin].vertex] {
                continue;
            }
            let start = self.darts[p].twin;
            let mut cur = p;
            let end = loop {
                visited[cur] = true;
                let q = partner[cur];
                visited[q] = true;
                let t = self.darts[q].twin;
                if !gone[self.darts[t].vertex] {
                    break t;
                }
                if partner[t] == usize::MAX {
                    return Err(WebError::Malformed("a strand ends inside the removed region".into()));
                }
                cur = t;
            };
            if self.darts[start].outgoing == self.darts[end].outgoing {
                return Err(WebError::Malformed("reconnection joins two edges of the same direction".into()));
            }
            new_twin[start] = Some(end);
            new_twin[end] = Some(start);
        }
        // What is left among the ports forms closed cycles.
        for &p in &ports {
            if visited[p] {
                continue;
            }
            let mut cur = p;
            loop {
                visited[cur] = true;
                let q = partner[cur];
                visited[q] = true;
                let t = self.darts[q].twin;
                if visited[t] {
                    break;
                }
                cur = t;
            }
            loops += 1;
        }
        // Compact the surviving vertices and darts.
        let mut vmap = vec![usize::MAX; nv];
        let mut kinds = Vec::new();
        for v in 0..nv {
            if !gone[v] {
                vmap[v] = kinds.len();
                kinds.push(self.kinds[v]);
            }
        }
        let mut dmap = vec![usize::MAX; self.darts.len()];
        let mut count = 0;
        for (d, dart) in self.darts.iter().enumerate() {
            if !gone[dart.vertex] {
                dmap[d] = count;
                count += 1;
            }
        }
        let mut darts = Vec::with_capacity(count);
        for (d, dart) in self.darts.iter().enumerate() {
            if gone[dart.vertex] {
                continue;
            }
            let twin = new_twin[d].unwrap_or(dart.twin);
            darts.push(Dart { vertex: vmap[dart.vertex], twin: dmap[twin], outgoing: dart.outgoing });
        }
        let rotation =
            (0..nv).filter(|&v| !gone[v]).map(|v| self.rotation[v].iter().map(|&d| dmap[d]).collect()).collect();
        let boundary = self.boundary.iter().map(|&b| vmap[b]).collect();
        Web::from_parts(kinds, darts, rotation, boundary, loops)
    }

    /// Drops all closed loops, returning how many there were.
    pub(crate) fn without_loops(&self) -> (Web, u32) {
        let mut w = self.clone();
        let k = std::mem::take(&mut w.loops);
        (w, k)
    }

    /// Inserts a bigon on the edge through dart `d`: the edge `x -> y`
    /// becomes `x -> u <= v -> y` with a double edge between the new sink
    /// `u` and source `v`.
    pub fn insert_bigon(&self, d: usize) -> Result<Web, WebError> {
        if d >= self.darts.len() {
            return Err(WebError::Malformed(format!("no dart {d}")));
        }
        // Orient so that `a` is the outgoing end (at x) and `b` the incoming end (at y).
        let (a, b) = if self.darts[d].outgoing { (d, self.darts[d].twin) } else { (self.darts[d].twin, d) };
        let mut w = self.clone();
        let u = w.kinds.len();
        let v = u + 1;
        w.kinds.extend([VertexKind::Sink, VertexKind::Source]);
        let base = w.darts.len();
        // u: ux (to x), u1, u2 (to v); v: vy (to y), v1, v2 (to u).
        let (ux, u1, u2, vy, v1, v2) = (base, base + 1, base + 2, base + 3, base + 4, base + 5);
        w.darts.extend([
            Dart { vertex: u, twin: a, outgoing: false },
            Dart { vertex: u, twin: v1, outgoing: false },
            Dart { vertex: u, twin: v2, outgoing: false },
            Dart { vertex: v, twin: b, outgoing: true },
            Dart { vertex: v, twin: u1, outgoing: true },
            Dart { vertex: v, twin: u2, outgoing: true },
        ]);
        w.darts[a].twin = ux;
        w.darts[b].twin = vy;
        // With x on the left and y on the right, edge 1 runs above and
        // edge 2 below: counterclockwise u sees x, edge 2, edge 1 and
        // v sees y, edge 1, edge 2.
        w.rotation.push(vec![ux, u2, u1]);
        w.rotation.push(vec![vy, v1, v2]);
        w.validate()?;
        Ok(w)
    }
}
