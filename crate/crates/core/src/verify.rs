//! Checkers that recompute everything they need from raw edge lists, so a
//! bug in the pipeline cannot vouch for itself.

use std::fmt;

use crate::coloring::{Color, Coloring};
use crate::embedding::{DualGraph, EmbeddedGraph, FaceId, VertexId};
use crate::error::{Error, Result};
use crate::hierarchy::TriangleHierarchy;
use crate::matching::Matching;

/// Largest graph the exhaustive search accepts.
pub const BRUTE_FORCE_CAP: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    MonochromaticTriangle,
    BoundViolation,
    StructureViolation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Triangle([VertexId; 3]),
    Bound {
        name: &'static str,
        measured: usize,
        bound: usize,
    },
    Detail(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub witness: Witness,
}

impl Violation {
    fn structure(msg: impl Into<String>) -> Self {
        Violation {
            kind: ViolationKind::StructureViolation,
            witness: Witness::Detail(msg.into()),
        }
    }

    fn bound(name: &'static str, measured: usize, bound: usize) -> Self {
        Violation {
            kind: ViolationKind::BoundViolation,
            witness: Witness::Bound { name, measured, bound },
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            Witness::Triangle([a, b, c]) => write!(f, "monochromatic triangle {a} {b} {c}"),
            Witness::Bound { name, measured, bound } => {
                write!(f, "bound violated: {name} = {measured} > {bound}")
            }
            Witness::Detail(s) => write!(f, "structure violated: {s}"),
        }
    }
}

/// Sorted adjacency lists built straight from an edge list.
struct Adjacency {
    start: Vec<usize>,
    adj: Vec<VertexId>,
}

impl Adjacency {
    fn new(n: usize, edges: &[[VertexId; 2]]) -> Result<Self> {
        let mut start = vec![0usize; n + 1];
        for &[u, v] in edges {
            if u >= n || v >= n {
                return Err(Error::precondition(format!("edge {u}-{v} leaves 0..{n}")));
            }
            start[u + 1] += 1;
            start[v + 1] += 1;
        }
        for i in 0..n {
            start[i + 1] += start[i];
        }
        let mut fill = start.clone();
        let mut adj = vec![0; 2 * edges.len()];
        for &[u, v] in edges {
            adj[fill[u]] = v;
            fill[u] += 1;
            adj[fill[v]] = u;
            fill[v] += 1;
        }
        for v in 0..n {
            adj[start[v]..start[v + 1]].sort_unstable();
        }
        Ok(Adjacency { start, adj })
    }

    fn of(&self, v: VertexId) -> &[VertexId] {
        &self.adj[self.start[v]..self.start[v + 1]]
    }

    fn n(&self) -> usize {
        self.start.len() - 1
    }

    /// Every triangle once, corners ascending, in ascending order.
    fn triangles(&self) -> Vec<[VertexId; 3]> {
        let n = self.n();
        let key = |v: VertexId| (self.of(v).len(), v);
        let mut mark = vec![usize::MAX; n];
        let mut out = Vec::new();
        for y in 0..n {
            for &x in self.of(y) {
                mark[x] = y;
            }
            for &x in self.of(y) {
                if key(x) >= key(y) {
                    continue;
                }
                for &w in self.of(x) {
                    if key(w) < key(x) && mark[w] == y {
                        let mut t = [w, x, y];
                        t.sort_unstable();
                        out.push(t);
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }
}

fn total_colors(c: &Coloring, n: usize) -> Result<Vec<Color>> {
    if c.len() != n {
        return Err(Error::precondition(format!(
            "coloring covers {} vertices, graph has {n}",
            c.len()
        )));
    }
    c.to_vec()
        .ok_or_else(|| Error::precondition("coloring is partial"))
}

/// A monochromatic triangle of `g` under `c`, if there is one.
pub fn find_monochromatic_triangle(g: &EmbeddedGraph, c: &Coloring) -> Result<Option<Violation>> {
    find_monochromatic_triangle_in(g.n(), g.edges(), c)
}

/// Same check on a bare edge list; the graph need not be planar.
pub fn find_monochromatic_triangle_in(
    n: usize,
    edges: &[[VertexId; 2]],
    c: &Coloring,
) -> Result<Option<Violation>> {
    let colors = total_colors(c, n)?;
    let adj = Adjacency::new(n, edges)?;
    Ok(adj
        .triangles()
        .into_iter()
        .find(|&[a, b, x]| colors[a] == colors[b] && colors[b] == colors[x])
        .map(|t| Violation {
            kind: ViolationKind::MonochromaticTriangle,
            witness: Witness::Triangle(t),
        }))
}

/// Exhaustive search for a 2-coloring without monochromatic triangles.
/// Vertex 0 is fixed to color 1.
pub fn brute_force_2coloring(g: &EmbeddedGraph) -> Result<Option<Coloring>> {
    brute_force_2coloring_in(g.n(), g.edges())
}

pub fn brute_force_2coloring_in(n: usize, edges: &[[VertexId; 2]]) -> Result<Option<Coloring>> {
    if n > BRUTE_FORCE_CAP {
        return Err(Error::OracleTooLarge { n, cap: BRUTE_FORCE_CAP });
    }
    if n == 0 {
        return Ok(Some(Coloring::unset(0)));
    }
    let adj = Adjacency::new(n, edges)?;
    // Triangles grouped by their largest corner, checked once that corner is set.
    let mut by_top: Vec<Vec<[VertexId; 2]>> = vec![Vec::new(); n];
    for [a, b, c] in adj.triangles() {
        by_top[c].push([a, b]);
    }
    let mut colors = vec![Color::One; n];
    let mut choice = vec![0u8; n];
    let ok = |colors: &[Color], v: VertexId| {
        by_top[v]
            .iter()
            .all(|&[a, b]| !(colors[a] == colors[v] && colors[b] == colors[v]))
    };
    // Iterative depth-first search over assignments of vertices 1..n.
    let mut v = 1;
    if n == 1 {
        return Ok(Some(Coloring::from_colors(colors)));
    }
    loop {
        if choice[v] == 2 {
            choice[v] = 0;
            if v == 1 {
                return Ok(None);
            }
            v -= 1;
            continue;
        }
        colors[v] = if choice[v] == 0 { Color::One } else { Color::Two };
        choice[v] += 1;
        if ok(&colors, v) {
            if v + 1 == n {
                return Ok(Some(Coloring::from_colors(colors)));
            }
            v += 1;
        }
    }
}

/// Cubic, simple and bridgeless, and every dual edge joins two faces
/// bordering its primal edge.
pub fn check_dual(g: &EmbeddedGraph, d: &DualGraph) -> Vec<Violation> {
    let mut out = Vec::new();
    let nodes = d.node_count();
    if nodes != g.face_count() {
        out.push(Violation::structure(format!(
            "dual has {nodes} nodes for {} faces",
            g.face_count()
        )));
    }
    if d.edge_count() != g.m() {
        out.push(Violation::structure(format!(
            "dual has {} edges for {} primal edges",
            d.edge_count(),
            g.m()
        )));
    }
    let mut seen_by = vec![usize::MAX; nodes];
    for v in 0..nodes {
        let nbrs = d.adjacency(v);
        if nbrs.len() != 3 {
            out.push(Violation::structure(format!("dual node {v} has degree {}", nbrs.len())));
        }
        for &(w, _) in nbrs {
            if w == v {
                out.push(Violation::structure(format!("dual loop at {v}")));
            } else if seen_by[w] == v {
                out.push(Violation::structure(format!("parallel dual edges {v}-{w}")));
            }
            seen_by[w] = v;
        }
    }
    if let Some(e) = find_bridge(d) {
        out.push(Violation::structure(format!("dual edge {e} is a bridge")));
    }
    if nodes == g.face_count() && d.edge_count() == g.m() {
        let faces: Vec<Vec<VertexId>> = (0..nodes).map(|f| g.face_vertices(f)).collect();
        for de in 0..d.edge_count() {
            let e = d.primal_edge(de);
            let [u, v] = g.endpoints(e);
            let [a, b] = d.endpoints(de);
            let borders = |f: FaceId| faces[f].contains(&u) && faces[f].contains(&v);
            if a == b || !borders(a) || !borders(b) {
                out.push(Violation::structure(format!(
                    "dual edge {de} joins faces {a}-{b}, which do not both border edge {u}-{v}"
                )));
                break;
            }
        }
    }
    out
}

/// Some bridge of `d`, by iterative low-link search.
fn find_bridge(d: &DualGraph) -> Option<usize> {
    let n = d.node_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    for s in 0..n {
        if disc[s] != usize::MAX {
            continue;
        }
        disc[s] = time;
        low[s] = time;
        time += 1;
        // (node, edge used to enter, next adjacency index)
        let mut stack = vec![(s, usize::MAX, 0usize)];
        while let Some(&(v, via, i)) = stack.last() {
            let nbrs = d.adjacency(v);
            if i < nbrs.len() {
                let (w, e) = nbrs[i];
                stack.last_mut().expect("frame").2 += 1;
                if e == via {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, e, 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] > disc[p] {
                        return Some(via);
                    }
                }
            }
        }
    }
    None
}

/// Perfectness of `m` and 2-regularity of the dual without it.
pub fn check_matching(d: &DualGraph, m: &Matching) -> Vec<Violation> {
    let mut out = Vec::new();
    if m.edge_count() != d.edge_count() || m.node_count() != d.node_count() {
        out.push(Violation::structure("matching is sized for a different dual"));
        return out;
    }
    let mut cover = vec![0usize; d.node_count()];
    for e in m.edges() {
        for v in d.endpoints(e) {
            cover[v] += 1;
        }
    }
    for (v, &k) in cover.iter().enumerate() {
        if k != 1 {
            out.push(Violation::structure(format!("dual node {v} is covered {k} times")));
        }
    }
    for v in 0..d.node_count() {
        let rest = d.adjacency(v).iter().filter(|&&(_, e)| !m.contains(e)).count();
        if rest != 2 {
            out.push(Violation::structure(format!(
                "dual node {v} keeps {rest} edges outside the matching"
            )));
        }
    }
    out
}

/// Tree shape, the σ partition, both size bounds, and agreement of the
/// node set with the separating triangles recomputed from `g`.
pub fn check_hierarchy(g: &EmbeddedGraph, h: &TriangleHierarchy) -> Vec<Violation> {
    let mut out = Vec::new();
    let n = g.n();
    let k = h.len();
    if k == 0 {
        out.push(Violation::structure("hierarchy is empty"));
        return out;
    }
    if k + 3 > n {
        out.push(Violation::bound("number of pivotal triangles", k, n.saturating_sub(3)));
    }
    let total = h.total_piece_size();
    if total + 12 > 4 * n {
        out.push(Violation::bound("total piece size", total, (4 * n).saturating_sub(12)));
    }

    let nodes = h.nodes();
    if nodes[0].parent.is_some() {
        out.push(Violation::structure("root has a parent"));
    }
    for (t, node) in nodes.iter().enumerate().skip(1) {
        match node.parent {
            Some(p) if p < k && nodes[p].children.contains(&t) => {}
            _ => out.push(Violation::structure(format!("node {t} has a bad parent link"))),
        }
        if node.sigma.is_empty() {
            out.push(Violation::structure(format!("node {t} owns no vertex")));
        }
    }
    let mut reached = vec![false; k];
    let mut stack = vec![0];
    reached[0] = true;
    while let Some(t) = stack.pop() {
        for &c in &nodes[t].children {
            if c >= k || reached[c] || nodes[c].parent != Some(t) {
                out.push(Violation::structure(format!("child link {t} -> {c} is not a tree edge")));
                continue;
            }
            reached[c] = true;
            stack.push(c);
        }
    }
    if let Some(t) = reached.iter().position(|&r| !r) {
        out.push(Violation::structure(format!("node {t} is unreachable from the root")));
    }

    let mut owner = vec![usize::MAX; n];
    for (t, node) in nodes.iter().enumerate() {
        for &v in &node.sigma {
            if v >= n {
                out.push(Violation::structure(format!("node {t} owns nonexistent vertex {v}")));
            } else if node.corners.contains(&v) {
                out.push(Violation::structure(format!("vertex {v} is both corner and owned at {t}")));
            } else if owner[v] != usize::MAX {
                out.push(Violation::structure(format!(
                    "vertex {v} owned by both {} and {t}",
                    owner[v]
                )));
            } else {
                owner[v] = t;
            }
        }
    }
    for v in 0..n {
        let is_root_corner = nodes[0].corners.contains(&v);
        if is_root_corner != (owner[v] == usize::MAX) {
            out.push(Violation::structure(format!("vertex {v} breaks the partition")));
        }
    }

    // Containment, checked locally: corners of a triangle lie in its
    // parent's piece, and every edge lies inside some piece.
    let piece_of = |v: VertexId| if owner[v] == usize::MAX { 0 } else { owner[v] };
    let in_piece = |v: VertexId, t: usize| nodes[t].corners.contains(&v) || piece_of(v) == t;
    for (t, node) in nodes.iter().enumerate().skip(1) {
        let Some(p) = node.parent.filter(|&p| p < k) else {
            continue;
        };
        if let Some(&c) = node.corners.iter().find(|&&c| c >= n || !in_piece(c, p)) {
            out.push(Violation::structure(format!(
                "corner {c} of node {t} lies outside the piece of its parent {p}"
            )));
        }
    }
    let mut sides: Vec<[VertexId; 2]> = nodes
        .iter()
        .flat_map(|t| {
            let [a, b, c] = t.corners;
            [[a, b], [b, c], [a, c]]
        })
        .map(|[x, y]| [x.min(y), x.max(y)])
        .collect();
    sides.sort_unstable();
    for &[u, v] in g.edges() {
        let key = [u.min(v), u.max(v)];
        if !in_piece(v, piece_of(u)) && !in_piece(u, piece_of(v)) && sides.binary_search(&key).is_err() {
            out.push(Violation::structure(format!("edge ({u},{v}) lies in no piece")));
        }
    }

    let adj = match Adjacency::new(n, g.edges()) {
        Ok(a) => a,
        Err(e) => {
            out.push(Violation::structure(e.to_string()));
            return out;
        }
    };
    let mut faces: Vec<[VertexId; 3]> = (0..g.face_count())
        .filter(|&f| g.face_len(f) == 3)
        .map(|f| {
            let v = g.face_vertices(f);
            let mut t = [v[0], v[1], v[2]];
            t.sort_unstable();
            t
        })
        .collect();
    faces.sort_unstable();
    let mut expected: Vec<[VertexId; 3]> = adj
        .triangles()
        .into_iter()
        .filter(|t| faces.binary_search(t).is_err())
        .collect();
    let mut outer = g.face_vertices(g.outer_face());
    outer.sort_unstable();
    if outer.len() == 3 {
        expected.push([outer[0], outer[1], outer[2]]);
    }
    expected.sort_unstable();
    let mut actual: Vec<[VertexId; 3]> = nodes.iter().map(|t| t.corners).collect();
    actual.sort_unstable();
    if actual != expected {
        out.push(Violation::structure(format!(
            "hierarchy has {} triangles, the graph has {} pivotal triangles",
            actual.len(),
            expected.len()
        )));
    }
    out
}

/// All structural checks on one run's artifacts; empty means pass.
pub fn check_structure(
    g: &EmbeddedGraph,
    d: &DualGraph,
    m: &Matching,
    h: &TriangleHierarchy,
) -> Vec<Violation> {
    let mut out = check_dual(g, d);
    out.extend(check_matching(d, m));
    out.extend(check_hierarchy(g, h));
    out
}
