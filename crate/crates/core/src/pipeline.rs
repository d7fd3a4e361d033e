//! The full coloring pipeline for arbitrary simple connected plane graphs.

use crate::coloring::{Color, Coloring};
use crate::embedding::{build_dual, DualGraph, EmbeddedGraph};
use crate::error::Result;
use crate::hierarchy::{build_hierarchy, color_recursive, find_pivotal, TriangleHierarchy};
use crate::matching::{perfect_matching_with, MatcherKind, Matching};
use crate::triangulate::make_maximal;

/// Coloring for graphs on at most four vertices: vertices 0 and 1 get
/// color 1, the rest color 2.
pub fn trivial_coloring(n: usize) -> Coloring {
    Coloring::from_colors((0..n).map(|v| if v < 2 { Color::One } else { Color::Two }))
}

/// A 2-coloring of `g` with no monochromatic triangle.
pub fn color_graph(g: &EmbeddedGraph, matcher: MatcherKind) -> Result<Coloring> {
    if g.n() <= 4 {
        return Ok(trivial_coloring(g.n()));
    }
    let triangulated;
    let maximal = if g.is_maximal() {
        g
    } else {
        triangulated = make_maximal(g)?.graph;
        &triangulated
    };
    let pivotal = find_pivotal(maximal)?;
    let h = build_hierarchy(maximal, &pivotal)?;
    color_recursive(maximal, &h, matcher)
}

/// Every intermediate artifact of one run, for the structure checker.
#[derive(Clone, Debug)]
pub struct PipelineRun {
    pub maximal: EmbeddedGraph,
    pub dual: DualGraph,
    pub matching: Matching,
    pub hierarchy: TriangleHierarchy,
    pub coloring: Coloring,
}

/// Like [`color_graph`] but keeps the artifacts; needs more than four
/// vertices.
pub fn run_pipeline(g: &EmbeddedGraph, matcher: MatcherKind) -> Result<PipelineRun> {
    let maximal = make_maximal(g)?.graph;
    let dual = build_dual(&maximal);
    let matching = perfect_matching_with(&dual, matcher)?;
    let pivotal = find_pivotal(&maximal)?;
    let hierarchy = build_hierarchy(&maximal, &pivotal)?;
    let coloring = color_recursive(&maximal, &hierarchy, matcher)?;
    Ok(PipelineRun {
        maximal,
        dual,
        matching,
        hierarchy,
        coloring,
    })
}
