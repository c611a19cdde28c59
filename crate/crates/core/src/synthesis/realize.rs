use std::collections::{BTreeMap, BTreeSet, VecDeque};

use rand::seq::SliceRandom;
use rand::Rng;

use crate::building::{DominantWeight, Lattice, LatticeClass};
use crate::growth::GrowthDiagram;
use crate::hulls::{conv, induced_complex, pair_geodesic, HullKind, SimplicialComplex2};
use crate::series::{Field, LaurentScalar};
use crate::webs::Diskoid;

use super::replay::diskoid_from_diagram;
use super::SynthesisError;

/// A closed polygon of lattice classes whose pairwise distances are the
/// ones recorded by a growth diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealizedPolygon<F: Field> {
    classes: Vec<LatticeClass<F>>,
    diagram: GrowthDiagram,
}

impl<F: Field> RealizedPolygon<F> {
    /// Checks every pairwise distance against the diagram.
    pub fn new(classes: Vec<LatticeClass<F>>, diagram: GrowthDiagram) -> Result<Self, SynthesisError> {
        if classes.len() != diagram.n() {
            return Err(SynthesisError::PreconditionViolated(format!(
                "{} classes for a {}-gon",
                classes.len(),
                diagram.n()
            )));
        }
        if let Some((i, j)) = first_mismatch(&classes, &diagram) {
            return Err(SynthesisError::DistanceMismatch(i, j));
        }
        Ok(RealizedPolygon { classes, diagram })
    }

    pub fn classes(&self) -> &[LatticeClass<F>] {
        &self.classes
    }

    pub fn diagram(&self) -> &GrowthDiagram {
        &self.diagram
    }
}

fn first_mismatch<F: Field>(classes: &[LatticeClass<F>], d: &GrowthDiagram) -> Option<(usize, usize)> {
    let n = classes.len();
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| classes[i].distance(&classes[j]) != d.weight(i, j))
}

/// `sum_k c_k v_k` for random coefficients `c_k`.
fn random_combination<F: Field, R: Rng + ?Sized>(
    vectors: &[Vec<LaurentScalar<F>>],
    ctx: &F::Ctx,
    rng: &mut R,
) -> Vec<LaurentScalar<F>> {
    let coeffs: Vec<F> = vectors.iter().map(|_| F::random(ctx, rng)).collect();
    (0..3)
        .map(|i| vectors.iter().zip(&coeffs).fold(LaurentScalar::zero(), |acc, (v, c)| acc.add(&v[i].scale(c))))
        .collect()
}

/// Neighbours of `x` that new vertices are likely to need: first steps of
/// geodesics towards earlier vertices, their incidences, and one generic
/// neighbour, all of the requested step type.
fn candidates<F: Field, R: Rng + ?Sized>(
    x: &LatticeClass<F>,
    earlier: &[LatticeClass<F>],
    step: DominantWeight,
    rng: &mut R,
) -> Vec<LatticeClass<F>> {
    let ctx = x.ctx().clone();
    let mut lines = BTreeSet::new();
    let mut planes = BTreeSet::new();
    for y in earlier {
        if y == x {
            continue;
        }
        for kind in [HullKind::Min, HullKind::Max] {
            let first = pair_geodesic(kind, x, y)[1].clone();
            match x.distance(&first) {
                DominantWeight::OMEGA1 => lines.insert(first),
                _ => planes.insert(first),
            };
        }
    }
    let rep = |c: &LatticeClass<F>| c.representative_between(x).expect("neighbour");
    let base = x.lattice();
    let t_base: Vec<Vec<LaurentScalar<F>>> = base.basis().shift(1).columns();
    let mut out: Vec<LatticeClass<F>> = Vec::new();
    let (same, other) = if step == DominantWeight::OMEGA1 { (&lines, &planes) } else { (&planes, &lines) };
    out.extend(same.iter().cloned());
    let other: Vec<&LatticeClass<F>> = other.iter().collect();
    for (k, a) in other.iter().enumerate() {
        for b in &other[k + 1..] {
            // Two planes meet in a line; two lines span a plane.
            let joined = if step == DominantWeight::OMEGA1 { rep(a).intersection(&rep(b)) } else { rep(a).sum(&rep(b)) };
            out.push(joined.class());
        }
        // A random line inside a plane, or a random plane through a line.
        let mut gens = if step == DominantWeight::OMEGA1 { t_base.clone() } else { rep(a).basis().columns() };
        let pool = if step == DominantWeight::OMEGA1 { rep(a).basis().columns() } else { base.basis().columns() };
        gens.push(random_combination(&pool, &ctx, rng));
        if let Ok(l) = Lattice::from_columns(&gens, &ctx) {
            out.push(l.class());
        }
    }
    if let Ok(generic) = x.random_step(step, rng) {
        out.push(generic);
    }
    out.retain(|c| x.distance(c) == step);
    out
}

/// Builds a polygon for `d` one vertex at a time, starting from the
/// standard lattice. Each new vertex is drawn from neighbours of the
/// previous one that satisfy every distance to the vertices placed so
/// far; a dead end restarts the attempt, up to `retry_cap` attempts.
pub fn realize_polygon<F: Field, R: Rng + ?Sized>(
    d: &GrowthDiagram,
    ctx: &F::Ctx,
    rng: &mut R,
    retry_cap: usize,
) -> Result<RealizedPolygon<F>, SynthesisError> {
    if retry_cap == 0 {
        return Err(SynthesisError::PreconditionViolated("retry_cap must be at least 1".into()));
    }
    let n = d.n();
    'attempt: for _ in 0..retry_cap {
        let mut classes = vec![LatticeClass::standard(ctx)];
        for j in 1..n {
            let step = d.weight(j - 1, j);
            let fits = |c: &LatticeClass<F>, placed: &[LatticeClass<F>]| {
                placed.iter().enumerate().all(|(i, y)| y.distance(c) == d.weight(i, j))
            };
            let mut pick = None;
            for _ in 0..3 {
                let prev = &classes[j - 1];
                let mut found: Vec<LatticeClass<F>> =
                    candidates(prev, &classes[..j - 1], step, rng).into_iter().filter(|c| fits(c, &classes)).collect();
                found.sort();
                found.dedup();
                if let Some(c) = found.choose(rng) {
                    pick = Some(c.clone());
                    break;
                }
            }
            match pick {
                Some(c) => classes.push(c),
                None => continue 'attempt,
            }
        }
        if first_mismatch(&classes, d).is_none() {
            return RealizedPolygon::new(classes, d.clone());
        }
    }
    Err(SynthesisError::RealizationFailed(retry_cap))
}

/// Whether the diskoid and the flag complex on `conv(P)` agree, with
/// boundary vertex `walk[p]` sent to polygon vertex `p`, edges and
/// triangles matching and every arrow a `w1` step in the building.
pub fn complexes_match<F: Field>(
    diskoid: &Diskoid,
    polygon: &RealizedPolygon<F>,
    complex: &SimplicialComplex2<F>,
) -> bool {
    let nv = diskoid.vertex_count();
    if nv != complex.vertices.len()
        || diskoid.edges().len() != complex.edges.len()
        || diskoid.triangles().len() != complex.triangles.len()
    {
        return false;
    }
    let mut assign = vec![usize::MAX; nv];
    let mut used = vec![false; nv];
    for (p, &v) in diskoid.walk().iter().enumerate() {
        let Some(c) = complex.index_of(&polygon.classes()[p]) else { return false };
        if assign[v] == usize::MAX {
            if used[c] {
                return false;
            }
            assign[v] = c;
            used[c] = true;
        } else if assign[v] != c {
            return false;
        }
    }
    let mut neighbours: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); nv];
    for (a, b) in diskoid.edges() {
        neighbours[a].insert(b);
        neighbours[b].insert(a);
    }
    let cadj = complex.adjacency();
    // Interior vertices in breadth-first order from the boundary.
    let mut order = Vec::new();
    let mut seen: Vec<bool> = assign.iter().map(|&a| a != usize::MAX).collect();
    let mut queue: VecDeque<usize> = (0..nv).filter(|&v| seen[v]).collect();
    while let Some(v) = queue.pop_front() {
        for &u in &neighbours[v] {
            if !seen[u] {
                seen[u] = true;
                order.push(u);
                queue.push_back(u);
            }
        }
    }
    if seen.iter().any(|s| !s) {
        return false;
    }
    let check = |assign: &[usize]| {
        diskoid.edges().iter().all(|&(a, b)| cadj[&assign[a]].contains(&assign[b]))
            && diskoid.triangles().iter().all(|t| {
                let mut m = [assign[t[0]], assign[t[1]], assign[t[2]]];
                m.sort_unstable();
                complex.triangles.contains(&(m[0], m[1], m[2]))
            })
            && diskoid.arrows().iter().all(|&(a, b)| {
                complex.vertices[assign[a]].distance(&complex.vertices[assign[b]]) == DominantWeight::OMEGA1
            })
    };
    fn search(
        k: usize,
        order: &[usize],
        assign: &mut Vec<usize>,
        used: &mut Vec<bool>,
        neighbours: &[BTreeSet<usize>],
        cadj: &BTreeMap<usize, BTreeSet<usize>>,
        check: &dyn Fn(&[usize]) -> bool,
    ) -> bool {
        let Some(&v) = order.get(k) else { return check(assign) };
        let placed: Vec<usize> = neighbours[v].iter().filter(|&&u| assign[u] != usize::MAX).map(|&u| assign[u]).collect();
        for c in 0..used.len() {
            if used[c] || cadj[&c].len() != neighbours[v].len() || !placed.iter().all(|p| cadj[&c].contains(p)) {
                continue;
            }
            assign[v] = c;
            used[c] = true;
            if search(k + 1, order, assign, used, neighbours, cadj, check) {
                return true;
            }
            assign[v] = usize::MAX;
            used[c] = false;
        }
        false
    }
    search(0, &order, &mut assign, &mut used, &neighbours, &cadj, &check)
}

/// Realizes `d`, takes the convex hull of the polygon in the building and
/// compares its complex with the diskoid built from the diagram.
pub fn cross_validate<F: Field, R: Rng + ?Sized>(
    d: &GrowthDiagram,
    ctx: &F::Ctx,
    rng: &mut R,
    retry_cap: usize,
) -> Result<bool, SynthesisError> {
    let polygon = realize_polygon::<F, R>(d, ctx, rng, retry_cap)?;
    let diskoid = diskoid_from_diagram(d)?;
    validate_realization(&diskoid, &polygon)
}

/// The geometric half of [`cross_validate`] for a given polygon.
pub fn validate_realization<F: Field>(diskoid: &Diskoid, polygon: &RealizedPolygon<F>) -> Result<bool, SynthesisError> {
    let hull = conv(&polygon.classes().iter().cloned().collect())?;
    Ok(complexes_match(diskoid, polygon, &induced_complex(&hull)))
}
