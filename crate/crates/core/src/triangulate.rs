//! Completion of a plane graph to a maximal planar graph.

use std::collections::HashSet;

use crate::embedding::{DartId, EdgeId, EmbeddedGraph, OuterChoice, VertexId};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct TriangulationResult {
    pub graph: EmbeddedGraph,
    /// Ids of the edges that were added, ascending.
    pub added: Vec<EdgeId>,
    /// Original edge id -> edge id in `graph`.
    pub edge_map: Vec<EdgeId>,
}

/// Mutable half-edge structure with linked rotations.
struct Builder {
    edges: Vec<[VertexId; 2]>,
    rot_next: Vec<DartId>,
    rot_prev: Vec<DartId>,
    adjacent: HashSet<(VertexId, VertexId)>,
}

impl Builder {
    fn origin(&self, d: DartId) -> VertexId {
        self.edges[d >> 1][d & 1]
    }

    fn head(&self, d: DartId) -> VertexId {
        self.edges[d >> 1][(d & 1) ^ 1]
    }

    fn next(&self, d: DartId) -> DartId {
        self.rot_prev[d ^ 1]
    }

    fn adjacent(&self, a: VertexId, b: VertexId) -> bool {
        self.adjacent.contains(&(a.min(b), a.max(b)))
    }

    fn insert_after(&mut self, at: DartId, d: DartId) {
        let after = self.rot_next[at];
        self.rot_next[at] = d;
        self.rot_prev[d] = at;
        self.rot_next[d] = after;
        self.rot_prev[after] = d;
    }

    /// Adds the chord `a -> c` closing the corner `d = a->b`, `next(d) = b->c`.
    /// Returns the new dart `a -> c`.
    fn cut_ear(&mut self, d: DartId) -> DartId {
        let d1 = self.next(d);
        let (a, c) = (self.origin(d), self.head(d1));
        let e = self.edges.len();
        self.edges.push([a, c]);
        self.rot_next.extend([0, 0]);
        self.rot_prev.extend([0, 0]);
        let (p, q) = (2 * e, 2 * e + 1);
        self.insert_after(d, p);
        let before = self.rot_prev[d1 ^ 1];
        self.insert_after(before, q);
        self.adjacent.insert((a.min(c), a.max(c)));
        p
    }

    /// Triangulates the face to the left of `start`, which has `len` darts.
    fn triangulate_face(&mut self, start: DartId, mut len: usize) -> Result<()> {
        let mut d = start;
        let mut misses = 0;
        while len > 3 {
            let d1 = self.next(d);
            let (a, c) = (self.origin(d), self.head(d1));
            if a != c && !self.adjacent(a, c) {
                let p = self.cut_ear(d);
                len -= 1;
                misses = 0;
                // Step back so the new chord can take part in the next corner.
                d = self.rot_next[p] ^ 1;
            } else {
                d = d1;
                misses += 1;
                if misses > len {
                    return Err(Error::internal(format!(
                        "no admissible chord in a face of length {len}"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Adds edges until every face, the outer one included, is a triangle.
/// Original edges keep their ids; added edges are appended.
pub fn make_maximal(g: &EmbeddedGraph) -> Result<TriangulationResult> {
    let n = g.n();
    if n < 3 {
        return Err(Error::precondition("triangulation needs at least 3 vertices"));
    }
    let m0 = g.m();
    if g.is_maximal() {
        return Ok(TriangulationResult {
            graph: g.clone().without_coordinates(),
            added: Vec::new(),
            edge_map: (0..m0).collect(),
        });
    }
    let darts = g.dart_count();
    let mut b = Builder {
        edges: g.edges().to_vec(),
        rot_next: (0..darts).map(|d| g.rot_next(d)).collect(),
        rot_prev: (0..darts).map(|d| g.rot_prev(d)).collect(),
        adjacent: g.edges().iter().map(|&[u, v]| (u.min(v), u.max(v))).collect(),
    };
    let outer_dart = g
        .face_darts(g.outer_face())
        .next()
        .ok_or_else(|| Error::internal("outer face has no darts"))?;
    for f in 0..g.face_count() {
        let len = g.face_len(f);
        if len > 3 {
            let start = g.face_darts(f).next().expect("nonempty face");
            b.triangulate_face(start, len)?;
        }
    }

    let mut rot_start = Vec::with_capacity(n + 1);
    let mut rot = Vec::with_capacity(b.edges.len() * 2);
    for v in 0..n {
        rot_start.push(rot.len());
        let first = g.rotation(v)[0];
        let mut d = first;
        loop {
            rot.push(d);
            d = b.rot_next[d];
            if d == first {
                break;
            }
        }
    }
    rot_start.push(rot.len());
    let m = b.edges.len();
    let graph = EmbeddedGraph::assemble(n, b.edges, rot_start, rot, OuterChoice::Dart(outer_dart), None)?;
    if !graph.is_maximal() {
        return Err(Error::internal("completion left a non-triangular face"));
    }
    Ok(TriangulationResult {
        graph,
        added: (m0..m).collect(),
        edge_map: (0..m0).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::tests::octahedron;
    use crate::embedding::Point;

    fn assert_maximal_simple(g: &EmbeddedGraph) {
        assert_eq!(g.m(), 3 * g.n() - 6);
        for f in 0..g.face_count() {
            assert_eq!(g.face_len(f), 3);
        }
        let mut pairs: Vec<_> = g.edges().iter().map(|&[u, v]| (u.min(v), u.max(v))).collect();
        pairs.sort_unstable();
        pairs.dedup();
        assert_eq!(pairs.len(), g.m());
        g.check_invariants().unwrap();
    }

    #[test]
    fn maximal_input_is_unchanged() {
        let g = octahedron();
        let t = make_maximal(&g).unwrap();
        assert!(t.added.is_empty());
        assert_eq!(t.graph, g);
    }

    #[test]
    fn four_cycle_gets_two_chords() {
        let g = EmbeddedGraph::from_coordinates(
            vec![Point::new(0, 0), Point::new(2, 0), Point::new(2, 2), Point::new(0, 2)],
            vec![[0, 1], [1, 2], [2, 3], [3, 0]],
        )
        .unwrap();
        let t = make_maximal(&g).unwrap();
        assert_eq!(t.added.len(), 2);
        assert_maximal_simple(&t.graph);
        assert!(t.graph.coords().is_none());
    }

    #[test]
    fn path_becomes_a_triangle() {
        let g = EmbeddedGraph::from_rotation(3, vec![[0, 1], [1, 2]], &[vec![1], vec![0, 2], vec![1]], None)
            .unwrap();
        let t = make_maximal(&g).unwrap();
        assert_eq!(t.added.len(), 1);
        assert_maximal_simple(&t.graph);
    }

    #[test]
    fn star_and_original_edges_survive() {
        // Star with centre 0 and six leaves.
        let pts: Vec<Point> = [(0, 0), (4, 0), (2, 3), (-2, 3), (-4, 0), (-2, -3), (2, -3)]
            .iter()
            .map(|&(x, y)| Point::new(x, y))
            .collect();
        let edges: Vec<[usize; 2]> = (1..7).map(|i| [0, i]).collect();
        let g = EmbeddedGraph::from_coordinates(pts, edges.clone()).unwrap();
        let t = make_maximal(&g).unwrap();
        assert_maximal_simple(&t.graph);
        for (e, &ends) in edges.iter().enumerate() {
            assert_eq!(t.graph.endpoints(t.edge_map[e]), ends);
        }
        let again = make_maximal(&t.graph).unwrap();
        assert!(again.added.is_empty());
    }

    #[test]
    fn small_inputs_are_refused() {
        let g = EmbeddedGraph::from_rotation(2, vec![[0, 1]], &[vec![1], vec![0]], None).unwrap();
        assert!(matches!(make_maximal(&g), Err(Error::PreconditionViolation(_))));
    }
}
