//! Text renderings of webs and diskoids.

use std::f64::consts::TAU;
use std::fmt::Write as _;

use super::diskoid::Diskoid;
use super::web::{VertexKind, Web};

/// Barycentric layout: `fixed` vertices sit on the unit circle in the
/// given order, every other vertex repeatedly moves to the average of its
/// neighbours. Vertices with no path to a fixed one stay at the origin.
fn tutte_layout(count: usize, neighbours: &[Vec<usize>], fixed: &[usize]) -> Vec<(f64, f64)> {
    let mut pos = vec![(0.0, 0.0); count];
    let mut pinned = vec![false; count];
    let n = fixed.len().max(1) as f64;
    for (p, &v) in fixed.iter().enumerate() {
        if pinned[v] {
            continue;
        }
        let angle = TAU * p as f64 / n - TAU / 4.0;
        pos[v] = (angle.cos(), angle.sin());
        pinned[v] = true;
    }
    for _ in 0..500 {
        for v in 0..count {
            if pinned[v] || neighbours[v].is_empty() {
                continue;
            }
            let k = neighbours[v].len() as f64;
            let (sx, sy) = neighbours[v].iter().fold((0.0, 0.0), |(x, y), &u| (x + pos[u].0, y + pos[u].1));
            pos[v] = (sx / k, sy / k);
        }
    }
    pos
}

fn web_layout(web: &Web) -> Vec<(f64, f64)> {
    let darts = web.darts();
    let neighbours: Vec<Vec<usize>> = (0..web.vertex_count())
        .map(|v| web.rotation(v).iter().map(|&d| darts[darts[d].twin].vertex).collect())
        .collect();
    tutte_layout(web.vertex_count(), &neighbours, web.boundary())
}

/// Directed edges `(tail, head)` of a web, once each.
fn web_edges(web: &Web) -> Vec<(usize, usize)> {
    let darts = web.darts();
    darts.iter().filter(|d| d.outgoing).map(|d| (d.vertex, darts[d.twin].vertex)).collect()
}

/// Graphviz digraph of a web. Boundary vertices are labelled by position.
pub fn web_to_dot(web: &Web) -> String {
    let mut out = String::from("digraph web {\n");
    let pos_of: Vec<Option<usize>> = {
        let mut p = vec![None; web.vertex_count()];
        for (i, &b) in web.boundary().iter().enumerate() {
            p[b] = Some(i);
        }
        p
    };
    for v in 0..web.vertex_count() {
        let attrs = match (web.kind(v), pos_of[v]) {
            (VertexKind::Boundary, Some(p)) => format!("shape=box, label=\"{}\"", p + 1),
            (VertexKind::Sink, _) => "shape=point, color=black".to_string(),
            _ => "shape=circle, label=\"\", width=0.12".to_string(),
        };
        let _ = writeln!(out, "  v{v} [{attrs}];");
    }
    for (a, b) in web_edges(web) {
        let _ = writeln!(out, "  v{a} -> v{b};");
    }
    if web.loops() > 0 {
        let _ = writeln!(out, "  // plus {} closed loop(s)", web.loops());
    }
    out.push_str("}\n");
    out
}

/// TikZ picture of a web: a dashed boundary circle, boundary points on it
/// and arrows along every edge.
pub fn web_to_tikz(web: &Web) -> String {
    let pos = web_layout(web);
    let r = 2.0;
    let mut out = String::from("\\begin{tikzpicture}[>=stealth, every edge/.style={draw, ->}]\n");
    let _ = writeln!(out, "  \\draw[dashed] (0,0) circle ({r});");
    for v in 0..web.vertex_count() {
        let (x, y) = (pos[v].0 * r, pos[v].1 * r);
        let style = match web.kind(v) {
            VertexKind::Boundary => "inner sep=0pt",
            VertexKind::Sink => "circle, fill, inner sep=1.2pt",
            VertexKind::Source => "circle, draw, inner sep=1.2pt",
        };
        let _ = writeln!(out, "  \\node[{style}] (v{v}) at ({x:.3},{y:.3}) {{}};");
    }
    for (i, &b) in web.boundary().iter().enumerate() {
        let (x, y) = (pos[b].0 * r * 1.12, pos[b].1 * r * 1.12);
        let _ = writeln!(out, "  \\node at ({x:.3},{y:.3}) {{\\small {}}};", i + 1);
    }
    for (a, b) in web_edges(web) {
        let _ = writeln!(out, "  \\draw[->] (v{a}) -- (v{b});");
    }
    out.push_str("\\end{tikzpicture}\n");
    out
}

fn diskoid_layout(d: &Diskoid) -> Vec<(f64, f64)> {
    let mut neighbours = vec![Vec::new(); d.vertex_count()];
    for &(a, b) in d.arrows() {
        neighbours[a].push(b);
        neighbours[b].push(a);
    }
    tutte_layout(d.vertex_count(), &neighbours, d.walk())
}

/// Graphviz digraph of a diskoid; edges point along their `w1` direction.
pub fn diskoid_to_dot(d: &Diskoid) -> String {
    let mut out = String::from("digraph diskoid {\n");
    let on_walk: std::collections::BTreeSet<usize> = d.walk().iter().copied().collect();
    for v in 0..d.vertex_count() {
        let shape = if on_walk.contains(&v) { "circle" } else { "doublecircle" };
        let _ = writeln!(out, "  x{v} [shape={shape}, label=\"{v}\"];");
    }
    for &(a, b) in d.arrows() {
        let _ = writeln!(out, "  x{a} -> x{b};");
    }
    out.push_str("}\n");
    out
}

/// TikZ picture of a diskoid with shaded triangles and `w1` arrows.
pub fn diskoid_to_tikz(d: &Diskoid) -> String {
    let pos = diskoid_layout(d);
    let r = 2.0;
    let mut out = String::from("\\begin{tikzpicture}[>=stealth]\n");
    for t in d.triangles() {
        let pts: Vec<String> = t.iter().map(|&v| format!("({:.3},{:.3})", pos[v].0 * r, pos[v].1 * r)).collect();
        let _ = writeln!(out, "  \\fill[gray!20] {} -- cycle;", pts.join(" -- "));
    }
    for v in 0..d.vertex_count() {
        let _ = writeln!(out, "  \\node[circle, fill, inner sep=1pt] (x{v}) at ({:.3},{:.3}) {{}};", pos[v].0 * r, pos[v].1 * r);
    }
    for &(a, b) in d.arrows() {
        let _ = writeln!(out, "  \\draw[->] (x{a}) -- (x{b});");
    }
    out.push_str("\\end{tikzpicture}\n");
    out
}
