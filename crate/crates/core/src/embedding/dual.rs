use super::{EdgeId, EmbeddedGraph, FaceId};

/// Face adjacency graph. Dual edge `e` crosses primal edge `e`, so the
/// primal/dual correspondence is the identity on ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualGraph {
    edges: Vec<[FaceId; 2]>,
    adj_start: Vec<usize>,
    adj: Vec<(FaceId, EdgeId)>,
}

/// One node per face of `g`; the dual edge of primal edge `e` joins the
/// faces on the two sides of `e`.
pub fn build_dual(g: &EmbeddedGraph) -> DualGraph {
    let edges: Vec<[FaceId; 2]> = (0..g.m())
        .map(|e| [g.face_of(2 * e), g.face_of(2 * e + 1)])
        .collect();
    DualGraph::from_edges(g.face_count(), edges)
}

impl DualGraph {
    pub(crate) fn from_edges(nodes: usize, edges: Vec<[FaceId; 2]>) -> Self {
        let mut adj_start = vec![0usize; nodes + 1];
        for &[a, b] in &edges {
            adj_start[a + 1] += 1;
            adj_start[b + 1] += 1;
        }
        for i in 0..nodes {
            adj_start[i + 1] += adj_start[i];
        }
        let mut fill = adj_start.clone();
        let mut adj = vec![(0, 0); 2 * edges.len()];
        for (e, &[a, b]) in edges.iter().enumerate() {
            adj[fill[a]] = (b, e);
            fill[a] += 1;
            adj[fill[b]] = (a, e);
            fill[b] += 1;
        }
        for v in 0..nodes {
            adj[adj_start[v]..adj_start[v + 1]].sort_unstable();
        }
        DualGraph { edges, adj_start, adj }
    }

    pub fn node_count(&self) -> usize {
        self.adj_start.len() - 1
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn endpoints(&self, e: EdgeId) -> [FaceId; 2] {
        self.edges[e]
    }

    pub fn edges(&self) -> &[[FaceId; 2]] {
        &self.edges
    }

    /// `(neighbor, dual edge)` pairs in ascending order.
    pub fn adjacency(&self, v: FaceId) -> &[(FaceId, EdgeId)] {
        &self.adj[self.adj_start[v]..self.adj_start[v + 1]]
    }

    pub fn degree(&self, v: FaceId) -> usize {
        self.adj_start[v + 1] - self.adj_start[v]
    }

    pub fn primal_edge(&self, dual_edge: EdgeId) -> EdgeId {
        dual_edge
    }

    pub fn dual_edge(&self, primal_edge: EdgeId) -> EdgeId {
        primal_edge
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::tests::octahedron;

    fn is_cube(d: &DualGraph) -> bool {
        // Cube: 3-regular, bipartite, 8 nodes, every pair of adjacent nodes
        // shares no common neighbor, and each node has exactly 3 nodes at
        // distance 2.
        if d.node_count() != 8 || d.edge_count() != 12 {
            return false;
        }
        let mut color = vec![u8::MAX; 8];
        color[0] = 0;
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            for &(w, _) in d.adjacency(v) {
                if color[w] == u8::MAX {
                    color[w] = 1 - color[v];
                    stack.push(w);
                } else if color[w] == color[v] {
                    return false;
                }
            }
        }
        (0..8).all(|v| {
            let mut dist2 = std::collections::BTreeSet::new();
            for &(w, _) in d.adjacency(v) {
                for &(x, _) in d.adjacency(w) {
                    if x != v {
                        dist2.insert(x);
                    }
                }
            }
            d.degree(v) == 3 && dist2.len() == 3
        })
    }

    #[test]
    fn octahedron_dual_is_the_cube() {
        let g = octahedron();
        let d = build_dual(&g);
        assert!(is_cube(&d));
        for e in 0..g.m() {
            assert_eq!(d.primal_edge(d.dual_edge(e)), e);
        }
    }

    #[test]
    fn k4_dual_is_k4() {
        let g = EmbeddedGraph::from_triangles(4, &[[0, 1, 2], [0, 2, 3], [0, 3, 1], [1, 3, 2]], 3)
            .unwrap();
        let d = build_dual(&g);
        assert_eq!((d.node_count(), d.edge_count()), (4, 6));
        for v in 0..4 {
            let mut nb: Vec<_> = d.adjacency(v).iter().map(|&(w, _)| w).collect();
            nb.dedup();
            assert_eq!(nb.len(), 3);
            assert!(!nb.contains(&v));
        }
    }
}
