//! Triangle-free 2-coloring of planar graphs.
//!
//! A maximal planar graph whose dual has a perfect matching `M` can be
//! colored so that exactly the edges crossed by `M` join equal colors. That
//! coloring has no monochromatic face, and it has no monochromatic triangle
//! at all once separating triangles are handled by coloring the pieces of
//! the triangle hierarchy one after another.
//!
//! ```
//! use trifree_core::{color_graph, find_monochromatic_triangle, generate, GeneratorKind, MatcherKind};
//!
//! let g = generate(GeneratorKind::Apollonian, 200, 7).unwrap();
//! let c = color_graph(&g, MatcherKind::Fast).unwrap();
//! assert!(find_monochromatic_triangle(&g, &c).unwrap().is_none());
//! ```

pub mod coloring;
pub mod embedding;
pub mod error;
pub mod generate;
pub mod hierarchy;
pub mod io;
pub mod matching;
pub mod pipeline;
pub mod render;
pub mod timing;
pub mod triangulate;
pub mod verify;

pub use coloring::{
    classify_bicolor, color_consistent, color_with_outer, BicolorMap, Color, Coloring,
};
pub use embedding::{
    build_dual, validate, DartId, DualGraph, EdgeId, EmbeddedGraph, FaceId, Point, VertexId,
};
pub use error::{Error, Result};
pub use generate::{generate, GeneratorKind};
pub use hierarchy::{
    build_hierarchy, color_recursive, find_pivotal, induced_piece, PivotalSet, PivotalTriangle,
    TriangleHierarchy,
};
pub use matching::{forced_edge_matching, perfect_matching, perfect_matching_with, MatcherKind, Matching};
pub use pipeline::{color_graph, run_pipeline, PipelineRun};
pub use render::render_svg;
pub use triangulate::{make_maximal, TriangulationResult};
pub use verify::{
    brute_force_2coloring, check_structure, find_monochromatic_triangle, Violation, ViolationKind,
};
