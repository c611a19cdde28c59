use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;
use serde::ser::{Serialize, SerializeSeq, Serializer};

use super::web::{CanonicalKey, Face, Web};

/// An integer combination of webs, keyed by canonical form. Zero
/// coefficients are dropped.
#[derive(Clone, Default)]
pub struct WebCombination {
    terms: BTreeMap<CanonicalKey, (Web, i64)>,
}

impl WebCombination {
    pub fn new() -> Self {
        Self::default()
    }

    /// `1 * web`.
    pub fn single(web: Web) -> Self {
        let mut c = Self::new();
        c.add(web, 1);
        c
    }

    pub fn add(&mut self, web: Web, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let key = web.canonical_key();
        let entry = self.terms.entry(key.clone()).or_insert((web, 0));
        entry.1 += coeff;
        if entry.1 == 0 {
            self.terms.remove(&key);
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Web, i64)> {
        self.terms.values().map(|(w, c)| (w, *c))
    }

    /// Coefficient of the class of `web`.
    pub fn coefficient(&self, web: &Web) -> i64 {
        self.terms.get(&web.canonical_key()).map_or(0, |(_, c)| *c)
    }

    /// Coefficient of the empty web.
    pub fn scalar(&self) -> i64 {
        self.coefficient(&Web::empty())
    }
}

/// Serialized as a list of `{"coefficient": c, "web": ...}` in canonical
/// order.
impl Serialize for WebCombination {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(serde::Serialize)]
        struct Term<'a> {
            coefficient: i64,
            web: &'a Web,
        }
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for (web, coefficient) in self.iter() {
            seq.serialize_element(&Term { coefficient, web })?;
        }
        seq.end()
    }
}

impl PartialEq for WebCombination {
    fn eq(&self, other: &Self) -> bool {
        self.terms.len() == other.terms.len()
            && self.terms.iter().zip(&other.terms).all(|((k1, (_, c1)), (k2, (_, c2)))| k1 == k2 && c1 == c2)
    }
}

impl Eq for WebCombination {}

impl fmt::Debug for WebCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.iter().map(|(w, c)| format!("{c} * web({} vertices, {} loops)", w.vertex_count(), w.loops())))
            .finish()
    }
}

/// Rewrites `web` with the circle, bigon and square relations until only
/// non-elliptic webs remain. Always rewrites a smallest face, ties going
/// to the face holding the smallest dart id.
pub fn reduce(web: &Web) -> WebCombination {
    reduce_with(web, |faces| {
        (0..faces.len())
            .min_by_key(|&i| (faces[i].size(), faces[i].darts.iter().min().copied()))
            .expect("called with at least one face")
    })
}

/// Like [`reduce`], but picks the face to rewrite uniformly at random.
pub fn reduce_random<R: Rng + ?Sized>(web: &Web, rng: &mut R) -> WebCombination {
    reduce_with(web, |faces| rng.gen_range(0..faces.len()))
}

fn reduce_with(web: &Web, mut choose: impl FnMut(&[Face]) -> usize) -> WebCombination {
    let mut out = WebCombination::new();
    let mut stack = vec![(web.clone(), 1i64)];
    while let Some((w, coeff)) = stack.pop() {
        let (w, loops) = w.without_loops();
        let coeff = coeff * 3i64.pow(loops);
        let faces: Vec<Face> = w.internal_faces().into_iter().filter(|f| f.size() < 6).collect();
        if faces.is_empty() {
            out.add(w, coeff);
            continue;
        }
        let face = &faces[choose(&faces)];
        for (next, k) in rewrite(&w, face) {
            stack.push((next, coeff * k));
        }
    }
    out
}

/// The dart at `v` that is not one of the face's two darts there.
fn port(web: &Web, v: usize, face_darts: [usize; 2]) -> usize {
    let rot = web.rotation(v);
    let spare: Vec<usize> = rot.iter().copied().filter(|d| !face_darts.contains(d)).collect();
    assert_eq!(spare.len(), 1, "internal faces of a web are simple cycles");
    spare[0]
}

/// Applies the relation for a bigon or square face.
fn rewrite(web: &Web, face: &Face) -> Vec<(Web, i64)> {
    let d = &face.darts;
    let k = d.len();
    let darts = web.darts();
    let verts: Vec<usize> = d.iter().map(|&x| darts[x].vertex).collect();
    // At vertex i the face uses the dart leaving along it and the twin of
    // the dart arriving.
    let ports: Vec<usize> =
        (0..k).map(|i| port(web, verts[i], [d[i], darts[d[(i + k - 1) % k]].twin])).collect();
    let rewire = |pairs: &[(usize, usize)]| web.rewire(&verts, pairs).expect("relations preserve validity");
    match k {
        2 => vec![(rewire(&[(ports[0], ports[1])]), -2)],
        4 => vec![
            (rewire(&[(ports[0], ports[1]), (ports[2], ports[3])]), 1),
            (rewire(&[(ports[1], ports[2]), (ports[3], ports[0])]), 1),
        ],
        _ => unreachable!("bipartite webs have only even faces, and faces below six are 2 or 4"),
    }
}
