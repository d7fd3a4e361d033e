use super::{TriangleHierarchy, ROOT};
use crate::coloring::{classify_bicolor, color_consistent, color_with_outer, Color, Coloring};
use crate::embedding::{build_dual, EmbeddedGraph, VertexId};
use crate::error::{Error, Result};
use crate::matching::{perfect_matching_with, MatcherKind};

/// The subgraph induced by `λ(t) ∪ σ(t)` with its outer face on `t`.
#[derive(Clone, Debug)]
pub struct InducedPiece {
    pub graph: EmbeddedGraph,
    /// Local vertex id -> vertex id in the whole graph, ascending.
    pub to_global: Vec<VertexId>,
}

impl InducedPiece {
    pub fn local(&self, v: VertexId) -> Option<VertexId> {
        self.to_global.binary_search(&v).ok()
    }
}

/// Faces grouped by their innermost pivotal triangle, shared across pieces.
struct PieceBuilder<'a> {
    g: &'a EmbeddedGraph,
    h: &'a TriangleHierarchy,
    face_start: Vec<usize>,
    faces: Vec<usize>,
    local: Vec<usize>,
}

impl<'a> PieceBuilder<'a> {
    fn new(g: &'a EmbeddedGraph, h: &'a TriangleHierarchy) -> Self {
        let k = h.len();
        let mut face_start = vec![0usize; k + 1];
        for f in 0..g.face_count() {
            face_start[h.face_owner(f) + 1] += 1;
        }
        for i in 0..k {
            face_start[i + 1] += face_start[i];
        }
        let mut fill = face_start.clone();
        let mut faces = vec![0; g.face_count()];
        for f in 0..g.face_count() {
            let t = h.face_owner(f);
            faces[fill[t]] = f;
            fill[t] += 1;
        }
        PieceBuilder {
            g,
            h,
            face_start,
            faces,
            local: vec![usize::MAX; g.n()],
        }
    }

    fn piece(&mut self, t: usize) -> Result<InducedPiece> {
        if self.h.len() == 1 {
            return Ok(InducedPiece {
                graph: self.g.clone().without_coordinates(),
                to_global: (0..self.g.n()).collect(),
            });
        }
        let node = self.h.node(t);
        let mut to_global: Vec<VertexId> = node.corners.iter().chain(&node.sigma).copied().collect();
        to_global.sort_unstable();
        for (i, &v) in to_global.iter().enumerate() {
            self.local[v] = i;
        }
        let result = self.assemble(t, &to_global);
        for &v in &to_global {
            self.local[v] = usize::MAX;
        }
        Ok(InducedPiece {
            graph: result?,
            to_global,
        })
    }

    fn assemble(&self, t: usize, to_global: &[VertexId]) -> Result<EmbeddedGraph> {
        let node = self.h.node(t);
        let map = |v: VertexId| -> Result<VertexId> {
            match self.local[v] {
                usize::MAX => Err(Error::internal(format!(
                    "face corner {v} lies outside the piece of triangle {t}"
                ))),
                i => Ok(i),
            }
        };
        let own = &self.faces[self.face_start[t]..self.face_start[t + 1]];
        let mut faces = Vec::with_capacity(own.len() + node.children.len() + 1);
        let mut outer = usize::MAX;
        for &f in own {
            let vs = self.g.face_vertices(f);
            if f == self.g.outer_face() {
                outer = faces.len();
            }
            faces.push([map(vs[0])?, map(vs[1])?, map(vs[2])?]);
        }
        for &s in &node.children {
            let [a, b, w] = self.h.inside_order(s);
            faces.push([map(a)?, map(b)?, map(w)?]);
        }
        if t != ROOT {
            let [a, b, w] = self.h.inside_order(t);
            outer = faces.len();
            faces.push([map(b)?, map(a)?, map(w)?]);
        }
        if outer == usize::MAX {
            return Err(Error::internal("root piece lost the outer face"));
        }
        let piece = EmbeddedGraph::from_triangles(to_global.len(), &faces, outer)?;
        debug_assert_eq!(piece.m(), 3 * piece.n() - 6);
        Ok(piece)
    }
}

/// A piece with one vertex inside its outer triangle is K4, whose only
/// valid coloring gives that vertex the color missing from the outer
/// majority pair.
fn k4_inner_color(c: &Coloring, t: usize, h: &TriangleHierarchy) -> Result<Color> {
    let mut ones = 0;
    for &v in &h.node(t).corners {
        match c.get(v) {
            Some(Color::One) => ones += 1,
            Some(Color::Two) => {}
            None => return Err(Error::internal(format!("corner {v} of triangle {t} is uncolored"))),
        }
    }
    match ones {
        1 => Ok(Color::One),
        2 => Ok(Color::Two),
        _ => Err(Error::internal(format!("triangle {t} is monochromatic"))),
    }
}

/// The piece of pivotal triangle `t`, re-indexed to `0..|λ(t) ∪ σ(t)|`.
pub fn induced_piece(g: &EmbeddedGraph, h: &TriangleHierarchy, t: usize) -> Result<InducedPiece> {
    if t >= h.len() {
        return Err(Error::precondition(format!("triangle {t} is not in the hierarchy")));
    }
    PieceBuilder::new(g, h).piece(t)
}

/// Colors the root piece freely, then every other piece in preorder
/// so that its outer triangle keeps the colors its parent gave it.
pub fn color_recursive(g: &EmbeddedGraph, h: &TriangleHierarchy, matcher: MatcherKind) -> Result<Coloring> {
    let mut builder = PieceBuilder::new(g, h);
    let mut c = Coloring::unset(g.n());
    for t in h.preorder() {
        if t != ROOT && h.node(t).sigma.len() == 1 {
            c.set(h.node(t).sigma[0], k4_inner_color(&c, t, h)?);
            continue;
        }
        let piece = builder.piece(t)?;
        let pg = &piece.graph;
        let d = build_dual(pg);
        let local = if t == ROOT {
            let m = perfect_matching_with(&d, matcher)?;
            let b = classify_bicolor(pg, &d, &m)?;
            color_consistent(pg, &b, 0, Color::One)?
        } else {
            let mut outer = [(0, Color::One); 3];
            for (slot, &v) in outer.iter_mut().zip(&h.node(t).corners) {
                let col = c
                    .get(v)
                    .ok_or_else(|| Error::internal(format!("corner {v} of triangle {t} is uncolored")))?;
                *slot = (piece.local(v).expect("corner in piece"), col);
            }
            color_with_outer(pg, &d, outer, matcher)?
        };
        for (i, &v) in piece.to_global.iter().enumerate() {
            let col = local.get(i).expect("total piece coloring");
            match c.get(v) {
                None => c.set(v, col),
                Some(prev) if prev != col => {
                    return Err(Error::internal(format!("piece of triangle {t} recolors vertex {v}")));
                }
                Some(_) => {}
            }
        }
    }
    if !c.is_total() {
        return Err(Error::internal("some vertex belongs to no piece"));
    }
    Ok(c)
}
