//! Parity colorings driven by a perfect dual matching.
//!
//! An edge whose dual edge is *not* matched is *bicolor*: its endpoints get
//! different colors. Every face of a triangulation has exactly one matched
//! dual edge, so every face ends up with two colors among its corners.

use std::fmt;

use crate::embedding::{build_dual, DualGraph, EdgeId, EmbeddedGraph, VertexId};
use crate::error::{Error, Result};
use crate::matching::{forced_edge_matching, perfect_matching_with, MatcherKind, Matching};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    One,
    Two,
}

impl Color {
    pub fn as_u8(self) -> u8 {
        match self {
            Color::One => 1,
            Color::Two => 2,
        }
    }

    pub fn flip(self) -> Color {
        match self {
            Color::One => Color::Two,
            Color::Two => Color::One,
        }
    }

    fn toggled(self, toggle: bool) -> Color {
        if toggle {
            self.flip()
        } else {
            self
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_u8())
    }
}

/// A partial or total assignment of colors to vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<Option<Color>>,
}

impl Coloring {
    pub fn unset(n: usize) -> Self {
        Coloring { colors: vec![None; n] }
    }

    pub fn from_colors(colors: impl IntoIterator<Item = Color>) -> Self {
        Coloring {
            colors: colors.into_iter().map(Some).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn get(&self, v: VertexId) -> Option<Color> {
        self.colors[v]
    }

    pub fn set(&mut self, v: VertexId, c: Color) {
        self.colors[v] = Some(c);
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(Option::is_some)
    }

    pub fn iter(&self) -> impl Iterator<Item = Option<Color>> + '_ {
        self.colors.iter().copied()
    }

    /// Colors of a total coloring; `None` if some vertex is unset.
    pub fn to_vec(&self) -> Option<Vec<Color>> {
        self.colors.iter().copied().collect()
    }

    /// Swaps 1 and 2 everywhere; unset vertices stay unset.
    pub fn flip(&self) -> Coloring {
        Coloring {
            colors: self.colors.iter().map(|c| c.map(Color::flip)).collect(),
        }
    }
}

/// Per primal edge: `true` when the dual edge is outside the matching.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BicolorMap {
    bicolor: Vec<bool>,
}

impl BicolorMap {
    pub fn is_bicolor(&self, e: EdgeId) -> bool {
        self.bicolor[e]
    }

    pub fn len(&self) -> usize {
        self.bicolor.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bicolor.is_empty()
    }

    pub fn bicolor_count(&self) -> usize {
        self.bicolor.iter().filter(|&&b| b).count()
    }

    pub fn as_slice(&self) -> &[bool] {
        &self.bicolor
    }
}

pub fn classify_bicolor(g: &EmbeddedGraph, d: &DualGraph, m: &Matching) -> Result<BicolorMap> {
    if d.edge_count() != g.m() || m.edge_count() != d.edge_count() || m.node_count() != d.node_count() {
        return Err(Error::precondition("matching does not belong to this dual"));
    }
    if !m.is_perfect() {
        return Err(Error::precondition("the dual matching is not perfect"));
    }
    let bicolor = (0..g.m()).map(|e| !m.contains(d.dual_edge(e))).collect();
    Ok(BicolorMap { bicolor })
}

/// The unique coloring with `c(root) = root_color` in which
/// exactly the bicolor edges join differently colored vertices.
pub fn color_consistent(
    g: &EmbeddedGraph,
    b: &BicolorMap,
    root: VertexId,
    root_color: Color,
) -> Result<Coloring> {
    color_consistent_ordered(g, b, root, root_color, false)
}

/// Same as [`color_consistent`] but scans each rotation backwards, giving a
/// different visiting order. Used to exercise well-definedness.
pub fn color_consistent_reversed(
    g: &EmbeddedGraph,
    b: &BicolorMap,
    root: VertexId,
    root_color: Color,
) -> Result<Coloring> {
    color_consistent_ordered(g, b, root, root_color, true)
}

fn color_consistent_ordered(
    g: &EmbeddedGraph,
    b: &BicolorMap,
    root: VertexId,
    root_color: Color,
    reversed: bool,
) -> Result<Coloring> {
    if root >= g.n() {
        return Err(Error::precondition(format!("root {root} is not a vertex")));
    }
    if b.len() != g.m() {
        return Err(Error::precondition("bicolor map does not belong to this graph"));
    }
    let mut c = Coloring::unset(g.n());
    c.set(root, root_color);
    let mut stack = vec![root];
    while let Some(v) = stack.pop() {
        let cv = c.colors[v].expect("stacked vertices are colored");
        let rot = g.rotation(v);
        for i in 0..rot.len() {
            let d = if reversed { rot[rot.len() - 1 - i] } else { rot[i] };
            let w = g.head(d);
            let want = cv.toggled(b.bicolor[g.edge_of(d)]);
            match c.colors[w] {
                None => {
                    c.colors[w] = Some(want);
                    stack.push(w);
                }
                Some(cw) if cw != want => {
                    return Err(Error::internal(format!(
                        "parity contradiction on edge {v}-{w}"
                    )));
                }
                Some(_) => {}
            }
        }
    }
    if !c.is_total() {
        return Err(Error::internal("parity search did not reach every vertex"));
    }
    Ok(c)
}

/// [`color_consistent`] on a fresh matching, with root `0` and color 1.
pub fn color_plain(g: &EmbeddedGraph, matcher: MatcherKind) -> Result<Coloring> {
    let d = build_dual(g);
    let m = perfect_matching_with(&d, matcher)?;
    let b = classify_bicolor(g, &d, &m)?;
    color_consistent(g, &b, 0, Color::One)
}

/// A coloring that extends the requested colors of the three
/// outer vertices.
pub fn color_with_outer(
    g: &EmbeddedGraph,
    d: &DualGraph,
    outer: [(VertexId, Color); 3],
    matcher: MatcherKind,
) -> Result<Coloring> {
    let m = perfect_matching_with(d, matcher)?;
    color_with_outer_from(g, d, outer, &m)
}

/// [`color_with_outer`] starting from an existing perfect matching.
pub fn color_with_outer_from(
    g: &EmbeddedGraph,
    d: &DualGraph,
    outer: [(VertexId, Color); 3],
    m: &Matching,
) -> Result<Coloring> {
    let mut face = g.face_vertices(g.outer_face());
    let mut asked: Vec<VertexId> = outer.iter().map(|&(v, _)| v).collect();
    face.sort_unstable();
    asked.sort_unstable();
    if face != asked {
        return Err(Error::precondition(format!(
            "vertices {asked:?} are not the outer face {face:?}"
        )));
    }
    let (i, j) = match (outer[0].1 == outer[1].1, outer[0].1 == outer[2].1, outer[1].1 == outer[2].1) {
        (true, true, _) => return Err(Error::InvalidOuterColoring),
        (true, _, _) => (0, 1),
        (_, true, _) => (0, 2),
        (_, _, true) => (1, 2),
        _ => unreachable!("three values from a two-element set share a value"),
    };
    let (u, cu) = outer[i];
    let v = outer[j].0;
    let e = g
        .find_edge(u, v)
        .ok_or_else(|| Error::precondition(format!("outer vertices {u} and {v} are not adjacent")))?;
    let forced = forced_edge_matching(d, d.dual_edge(e), m)?;
    let b = classify_bicolor(g, d, &forced)?;
    let c = color_consistent(g, &b, u, cu)?;
    for &(x, cx) in &outer {
        if c.get(x) != Some(cx) {
            return Err(Error::internal(format!("outer vertex {x} did not receive its color")));
        }
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::tests::octahedron;
    use crate::matching::perfect_matching;

    fn monochromatic(g: &EmbeddedGraph, c: &Coloring) -> bool {
        (0..g.face_count()).any(|f| {
            let vs = g.face_vertices(f);
            vs.len() == 3 && c.get(vs[0]) == c.get(vs[1]) && c.get(vs[1]) == c.get(vs[2])
        })
    }

    #[test]
    fn flip_is_an_involution() {
        let c = Coloring::from_colors([Color::One, Color::One, Color::Two]);
        assert_eq!(c.flip().flip(), c);
        assert_eq!(
            Coloring::from_colors([Color::One; 4]).flip(),
            Coloring::from_colors([Color::Two; 4])
        );
        let mut partial = Coloring::unset(3);
        partial.set(1, Color::Two);
        assert_eq!(partial.flip().get(0), None);
        assert_eq!(partial.flip().get(1), Some(Color::One));
    }

    #[test]
    fn lone_triangle_follows_the_bicolor_pattern() {
        let g = EmbeddedGraph::from_triangles(3, &[[0, 1, 2], [0, 2, 1]], 1).unwrap();
        let d = build_dual(&g);
        let e01 = g.find_edge(0, 1).unwrap();
        let m = Matching::from_edges(&d, [d.dual_edge(e01)]).unwrap();
        let b = classify_bicolor(&g, &d, &m).unwrap();
        assert!(!b.is_bicolor(e01));
        assert_eq!(b.bicolor_count(), 2);
        let c = color_consistent(&g, &b, 0, Color::One).unwrap();
        assert_eq!(c.to_vec().unwrap(), vec![Color::One, Color::One, Color::Two]);
    }

    #[test]
    fn octahedron_counts_and_face_law() {
        let g = octahedron();
        let d = build_dual(&g);
        let m = perfect_matching(&d).unwrap();
        let b = classify_bicolor(&g, &d, &m).unwrap();
        assert_eq!(b.bicolor_count(), 8);
        for f in 0..g.face_count() {
            let n = g.face_darts(f).filter(|&x| b.is_bicolor(g.edge_of(x))).count();
            assert_eq!(n, 2);
        }
        let c = color_consistent(&g, &b, 0, Color::One).unwrap();
        assert!(!monochromatic(&g, &c));
        for (e, &[u, v]) in g.edges().iter().enumerate() {
            assert_eq!(c.get(u) != c.get(v), b.is_bicolor(e));
        }
        assert_eq!(color_consistent_reversed(&g, &b, 0, Color::One).unwrap(), c);
    }

    #[test]
    fn imperfect_matching_is_rejected() {
        let g = octahedron();
        let d = build_dual(&g);
        let m = Matching::empty(d.node_count(), d.edge_count());
        assert!(matches!(
            classify_bicolor(&g, &d, &m),
            Err(Error::PreconditionViolation(_))
        ));
    }

    #[test]
    fn corrupted_bicolor_map_raises_a_parity_error() {
        let g = octahedron();
        let d = build_dual(&g);
        let m = perfect_matching(&d).unwrap();
        let mut b = classify_bicolor(&g, &d, &m).unwrap();
        b.bicolor[0] = !b.bicolor[0];
        assert!(matches!(
            color_consistent(&g, &b, 0, Color::One),
            Err(Error::InternalInvariantViolation(_))
        ));
    }

    #[test]
    fn outer_request_is_honored() {
        let g = octahedron();
        let d = build_dual(&g);
        let face = g.face_vertices(g.outer_face());
        for pattern in [
            [Color::One, Color::One, Color::Two],
            [Color::Two, Color::One, Color::Two],
            [Color::Two, Color::One, Color::One],
            [Color::Two, Color::Two, Color::One],
        ] {
            let outer = [(face[0], pattern[0]), (face[1], pattern[1]), (face[2], pattern[2])];
            let c = color_with_outer(&g, &d, outer, MatcherKind::Fast).unwrap();
            for (v, col) in outer {
                assert_eq!(c.get(v), Some(col));
            }
            assert!(!monochromatic(&g, &c));
        }
    }

    #[test]
    fn monochromatic_outer_request_is_refused() {
        let g = octahedron();
        let d = build_dual(&g);
        let face = g.face_vertices(g.outer_face());
        let outer = [(face[0], Color::One), (face[1], Color::One), (face[2], Color::One)];
        assert_eq!(
            color_with_outer(&g, &d, outer, MatcherKind::Fast),
            Err(Error::InvalidOuterColoring)
        );
    }

    #[test]
    fn non_outer_vertices_are_refused() {
        let g = octahedron();
        let d = build_dual(&g);
        let face = g.face_vertices(g.outer_face());
        let other = (0..6).find(|v| !face.contains(v)).unwrap();
        let outer = [(face[0], Color::One), (face[1], Color::One), (other, Color::Two)];
        assert!(matches!(
            color_with_outer(&g, &d, outer, MatcherKind::Fast),
            Err(Error::PreconditionViolation(_))
        ));
    }
}
