//! Separating triangles and the containment tree they form.
//!
//! A triangle of a maximal planar graph either bounds a face or separates
//! the graph; the separating ones together with the outer face are the
//! pivotal triangles. Each pivotal triangle `t` owns its corners `λ(t)` and
//! the vertices `σ(t)` lying inside it but inside no smaller pivotal
//! triangle. The graph induced on `λ(t) ∪ σ(t)` has no separating triangles,
//! so the whole graph can be colored piece by piece from the root down.

mod pieces;
mod triangles;

use std::fmt::Write as _;

pub use pieces::{color_recursive, induced_piece, InducedPiece};
pub use triangles::{enumerate_triangles, Triangle};

use crate::embedding::{EdgeId, EmbeddedGraph, FaceId, VertexId};
use crate::error::{Error, Result};

/// The outer face plus every separating triangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PivotalSet {
    /// Outer face corners, ascending.
    pub outer: [VertexId; 3],
    /// Separating triangles sorted by corners.
    pub inner: Vec<Triangle>,
    /// Number of triangles that bound a face.
    pub facial: usize,
}

impl PivotalSet {
    pub fn len(&self) -> usize {
        self.inner.len() + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

fn require_maximal(g: &EmbeddedGraph) -> Result<()> {
    if g.n() < 4 || !g.is_maximal() {
        return Err(Error::precondition(
            "the hierarchy needs a maximal planar graph on at least 4 vertices",
        ));
    }
    Ok(())
}

pub fn find_pivotal(g: &EmbeddedGraph) -> Result<PivotalSet> {
    require_maximal(g)?;
    let (inner, facial) = triangles::separating_triangles(g);
    let outer = sorted3(g.face_vertices(g.outer_face()));
    Ok(PivotalSet { outer, inner, facial })
}

fn sorted3(v: Vec<VertexId>) -> [VertexId; 3] {
    let mut a = [v[0], v[1], v[2]];
    a.sort_unstable();
    a
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PivotalTriangle {
    /// `λ(t)`, ascending.
    pub corners: [VertexId; 3],
    /// `σ(t)`, ascending.
    pub sigma: Vec<VertexId>,
    pub parent: Option<usize>,
    pub children: Vec<usize>,
}

impl PivotalTriangle {
    pub fn is_root(&self) -> bool {
        self.parent.is_none()
    }
}

/// Node 0 is the outer face; nodes `1..` follow [`PivotalSet::inner`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleHierarchy {
    nodes: Vec<PivotalTriangle>,
    /// Corners of each triangle ordered counterclockwise as seen from inside.
    inside_order: Vec<[VertexId; 3]>,
    /// Innermost pivotal triangle containing each face.
    face_owner: Vec<usize>,
}

pub const ROOT: usize = 0;

impl TriangleHierarchy {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn root(&self) -> usize {
        ROOT
    }

    pub fn nodes(&self) -> &[PivotalTriangle] {
        &self.nodes
    }

    pub fn node(&self, t: usize) -> &PivotalTriangle {
        &self.nodes[t]
    }

    /// Direct access to the nodes, for building damaged hierarchies in tests
    /// of the structure checker.
    pub fn nodes_mut(&mut self) -> &mut Vec<PivotalTriangle> {
        &mut self.nodes
    }

    pub fn face_owner(&self, f: FaceId) -> usize {
        self.face_owner[f]
    }

    pub(crate) fn inside_order(&self, t: usize) -> [VertexId; 3] {
        self.inside_order[t]
    }

    /// Nodes with every parent before its children.
    pub fn preorder(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.nodes.len());
        let mut stack = vec![ROOT];
        while let Some(t) = stack.pop() {
            out.push(t);
            stack.extend(self.nodes[t].children.iter().rev());
        }
        out
    }

    pub fn depth(&self) -> usize {
        let mut depth = vec![0usize; self.nodes.len()];
        let mut best = 0;
        for t in self.preorder() {
            if let Some(p) = self.nodes[t].parent {
                depth[t] = depth[p] + 1;
                best = best.max(depth[t]);
            }
        }
        best
    }

    /// `Σ_t |λ(t) ∪ σ(t)|`.
    pub fn total_piece_size(&self) -> usize {
        self.nodes.iter().map(|t| 3 + t.sigma.len()).sum()
    }

    /// One line per node in preorder, indented two spaces per level:
    /// `t (a,b,c) sigma={x,y}`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut stack = vec![(ROOT, 0usize)];
        while let Some((t, depth)) = stack.pop() {
            let node = &self.nodes[t];
            let [a, b, c] = node.corners;
            let sigma: Vec<String> = node.sigma.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(
                out,
                "{:indent$}t ({a},{b},{c}) sigma={{{}}}",
                "",
                sigma.join(","),
                indent = 2 * depth
            );
            stack.extend(node.children.iter().rev().map(|&c| (c, depth + 1)));
        }
        out
    }
}

/// Per edge, the separating triangles through it and their third corner.
/// For every edge, the separating triangles through it: `(node, third
/// corner w, edge from the lower endpoint to w, edge from the higher one)`.
struct EdgeIndex {
    start: Vec<usize>,
    entries: Vec<(usize, VertexId, EdgeId, EdgeId)>,
}

impl EdgeIndex {
    fn new(m: usize, inner: &[Triangle]) -> Self {
        let mut start = vec![0usize; m + 1];
        for t in inner {
            for e in t.edges {
                start[e + 1] += 1;
            }
        }
        for i in 0..m {
            start[i + 1] += start[i];
        }
        let mut fill = start.clone();
        let mut entries = vec![(0, 0, 0, 0); 3 * inner.len()];
        for (i, t) in inner.iter().enumerate() {
            let [a, b, c] = t.corners;
            let [ab, bc, ac] = t.edges;
            for (e, entry) in [(ab, (c, ac, bc)), (bc, (a, ab, ac)), (ac, (b, ab, bc))] {
                entries[fill[e]] = (i + 1, entry.0, entry.1, entry.2);
                fill[e] += 1;
            }
        }
        EdgeIndex { start, entries }
    }

    fn of(&self, e: EdgeId) -> &[(usize, VertexId, EdgeId, EdgeId)] {
        &self.entries[self.start[e]..self.start[e + 1]]
    }
}

struct Frame {
    /// Next dart of the face to try.
    dart: usize,
    remaining: u8,
    undo_start: usize,
    entered: usize,
}

/// Builds the containment tree with one depth-first walk over the faces,
/// starting from the outer face. Crossing an edge toggles every separating
/// triangle through that edge; the triangles currently containing the walk
/// form a stack because their insides are nested.
pub fn build_hierarchy(g: &EmbeddedGraph, pivotal: &PivotalSet) -> Result<TriangleHierarchy> {
    require_maximal(g)?;
    let k = pivotal.len();
    let index = EdgeIndex::new(g.m(), &pivotal.inner);
    let outer = g.outer_face();

    let mut parent = vec![usize::MAX; k];
    let mut inside_order = vec![[0; 3]; k];
    inside_order[ROOT] = {
        let v = g.face_vertices(outer);
        [v[2], v[1], v[0]]
    };
    let mut seen_triangle = vec![false; k];
    seen_triangle[ROOT] = true;
    let mut active = vec![false; k];
    active[ROOT] = true;
    let mut stack = vec![ROOT];
    let mut undo: Vec<usize> = Vec::new();
    let mut face_owner = vec![usize::MAX; g.face_count()];
    let mut scratch: Vec<(usize, VertexId, usize)> = Vec::new();

    face_owner[outer] = ROOT;
    let first = g.face_darts(outer).next().expect("outer face has darts");
    let mut frames = vec![Frame {
        dart: first,
        remaining: 3,
        undo_start: 0,
        entered: 0,
    }];
    while let Some(top) = frames.last_mut() {
        if top.remaining == 0 {
            let fr = frames.pop().expect("frame");
            for _ in 0..fr.entered {
                let t = stack.pop().expect("entered triangle");
                active[t] = false;
            }
            for &t in undo[fr.undo_start..].iter().rev() {
                stack.push(t);
                active[t] = true;
            }
            undo.truncate(fr.undo_start);
            continue;
        }
        let d = top.dart;
        top.dart = g.next(d);
        top.remaining -= 1;
        let dg = g.twin(d);
        let next_face = g.face_of(dg);
        if face_owner[next_face] != usize::MAX {
            continue;
        }
        let e = g.edge_of(dg);
        let through = index.of(e);
        let undo_start = undo.len();
        let exits = through.iter().filter(|x| active[x.0]).count();
        for _ in 0..exits {
            let t = stack.pop().ok_or_else(|| Error::internal("containment stack underflow"))?;
            if !active[t] || !through.iter().any(|x| x.0 == t) {
                return Err(Error::internal("separating triangles are not nested"));
            }
            active[t] = false;
            undo.push(t);
        }
        let a = g.origin(dg);
        let b = g.head(dg);
        let deg = g.degree(a);
        let base = g.rot_pos(dg);
        scratch.clear();
        for &(t, w, lo_w, hi_w) in through {
            if active[t] || undo[undo_start..].contains(&t) {
                continue;
            }
            let e_aw = if a < b { lo_w } else { hi_w };
            let aw = 2 * e_aw + usize::from(g.origin(2 * e_aw) != a);
            if g.origin(aw) != a || g.head(aw) != w {
                return Err(Error::internal("triangle corner is not adjacent"));
            }
            let offset = (g.rot_pos(aw) + deg - base) % deg;
            scratch.push((t, w, offset));
        }
        scratch.sort_unstable_by(|x, y| y.2.cmp(&x.2));
        for &(t, w, _) in &scratch {
            if !seen_triangle[t] {
                seen_triangle[t] = true;
                parent[t] = *stack.last().expect("root stays on the stack");
                inside_order[t] = [a, b, w];
            }
            active[t] = true;
            stack.push(t);
        }
        face_owner[next_face] = *stack.last().expect("root stays on the stack");
        frames.push(Frame {
            dart: g.next(dg),
            remaining: 2,
            undo_start,
            entered: scratch.len(),
        });
    }
    if face_owner.contains(&usize::MAX) || seen_triangle.contains(&false) {
        return Err(Error::internal("face walk did not reach every face"));
    }

    let mut nodes: Vec<PivotalTriangle> = (0..k)
        .map(|t| PivotalTriangle {
            corners: if t == ROOT { pivotal.outer } else { pivotal.inner[t - 1].corners },
            sigma: Vec::new(),
            parent: (t != ROOT).then_some(parent[t]),
            children: Vec::new(),
        })
        .collect();
    for t in 1..k {
        let p = parent[t];
        nodes[p].children.push(t);
    }

    // σ: the innermost pivotal triangle around a face at v, climbing past
    // the triangles that have v as a corner.
    for v in 0..g.n() {
        if nodes[ROOT].corners.contains(&v) {
            continue;
        }
        let f = g.face_of(g.rotation(v)[0]);
        let mut t = face_owner[f];
        while nodes[t].corners.contains(&v) {
            t = nodes[t]
                .parent
                .ok_or_else(|| Error::internal(format!("vertex {v} escapes the outer face")))?;
        }
        nodes[t].sigma.push(v);
    }

    let h = TriangleHierarchy {
        nodes,
        inside_order,
        face_owner,
    };
    debug_assert!(h.len() + 3 <= g.n());
    debug_assert!(h.total_piece_size() <= 4 * g.n() - 12);
    debug_assert!(h.nodes.iter().skip(1).all(|t| !t.sigma.is_empty()));
    Ok(h)
}

/// [`find_pivotal`] followed by [`build_hierarchy`].
pub fn hierarchy(g: &EmbeddedGraph) -> Result<TriangleHierarchy> {
    let p = find_pivotal(g)?;
    build_hierarchy(g, &p)
}
