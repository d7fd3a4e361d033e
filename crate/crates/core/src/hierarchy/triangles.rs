use crate::embedding::{DartId, EdgeId, EmbeddedGraph, VertexId};

/// A 3-cycle of the graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangle {
    /// Ascending.
    pub corners: [VertexId; 3],
    /// Edges `c0c1`, `c1c2`, `c0c2`.
    pub edges: [EdgeId; 3],
    /// True when the three corners bound a face.
    pub facial: bool,
}

/// Smallest-last elimination order: every vertex has at most five
/// neighbors later in the order on a planar graph.
fn degeneracy_rank(g: &EmbeddedGraph) -> Vec<usize> {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let max = deg.iter().copied().max().unwrap_or(0);
    // Vertices sorted by current degree; `bin[k]` is where degree k starts.
    let mut bin = vec![0usize; max + 2];
    for &d in &deg {
        bin[d + 1] += 1;
    }
    for k in 0..=max {
        bin[k + 1] += bin[k];
    }
    let mut pos = vec![0usize; n];
    let mut vert = vec![0usize; n];
    {
        let mut fill = bin.clone();
        for v in 0..n {
            pos[v] = fill[deg[v]];
            vert[pos[v]] = v;
            fill[deg[v]] += 1;
        }
    }
    let mut rank = vec![0; n];
    for i in 0..n {
        let v = vert[i];
        rank[v] = i;
        for w in g.neighbors(v) {
            if pos[w] > i && deg[w] > deg[v] {
                // Swap w with the first vertex of its degree class, then
                // shrink the class by one.
                let dw = deg[w];
                let first = bin[dw].max(i + 1);
                let u = vert[first];
                if u != w {
                    vert.swap(first, pos[w]);
                    pos[u] = pos[w];
                    pos[w] = first;
                }
                bin[dw] = first + 1;
                deg[w] -= 1;
            }
        }
    }
    rank
}

fn third_vertex(g: &EmbeddedGraph, d: DartId) -> VertexId {
    g.head(g.next(d))
}

/// Every triangle of `g`, sorted by corners. Faces are recognised through
/// the two faces on either side of an edge, so `g` should be maximal.
pub fn enumerate_triangles(g: &EmbeddedGraph) -> Vec<Triangle> {
    collect_triangles(g, true).0
}

/// The non-facial triangles, sorted by corners, and the number of facial
/// ones.
pub(crate) fn separating_triangles(g: &EmbeddedGraph) -> (Vec<Triangle>, usize) {
    collect_triangles(g, false)
}

fn collect_triangles(g: &EmbeddedGraph, keep_facial: bool) -> (Vec<Triangle>, usize) {
    let n = g.n();
    let rank = degeneracy_rank(g);
    let mut out_start = vec![0usize; n + 1];
    // Arcs toward later vertices in the order, as (head, dart).
    let mut out: Vec<(VertexId, DartId)> = Vec::with_capacity(g.m());
    for v in 0..n {
        out.extend(
            g.rotation(v)
                .iter()
                .map(|&d| (g.head(d), d))
                .filter(|&(w, _)| rank[w] > rank[v]),
        );
        out_start[v + 1] = out.len();
    }
    let mut mark = vec![usize::MAX; n];
    let mut mark_dart = vec![0; n];
    let mut found = Vec::new();
    let mut facial_count = 0;
    for u in 0..n {
        let outs = &out[out_start[u]..out_start[u + 1]];
        for &(w, d) in outs {
            mark[w] = u;
            mark_dart[w] = d;
        }
        for &(v, duv) in outs {
            for &(w, dvw) in &out[out_start[v]..out_start[v + 1]] {
                if mark[w] != u {
                    continue;
                }
                let mut tagged = [
                    (u, v, g.edge_of(duv)),
                    (v, w, g.edge_of(dvw)),
                    (u, w, g.edge_of(mark_dart[w])),
                ];
                let mut corners = [u, v, w];
                corners.sort_unstable();
                for t in &mut tagged {
                    if t.0 > t.1 {
                        std::mem::swap(&mut t.0, &mut t.1);
                    }
                }
                let edge = |a: VertexId, b: VertexId| {
                    tagged.iter().find(|t| t.0 == a && t.1 == b).expect("triangle edge").2
                };
                let [a, b, c] = corners;
                let eab = edge(a, b);
                let facial = [2 * eab, 2 * eab + 1].into_iter().any(|x| third_vertex(g, x) == c);
                facial_count += usize::from(facial);
                if facial && !keep_facial {
                    continue;
                }
                found.push(Triangle {
                    corners,
                    edges: [eab, edge(b, c), edge(a, c)],
                    facial,
                });
            }
        }
    }
    found.sort_unstable_by_key(|t| t.corners);
    (found, facial_count)
}
