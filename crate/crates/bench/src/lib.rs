//! Shared fixtures for the criterion benches.

use trifree_core::{generate, EmbeddedGraph, GeneratorKind};

/// Sizes swept by the pipeline benches.
pub const SIZES: [usize; 4] = [1 << 10, 1 << 12, 1 << 14, 1 << 16];

/// One generated graph per size, seed 0.
pub fn fixtures(kind: GeneratorKind, sizes: &[usize]) -> Vec<EmbeddedGraph> {
    sizes
        .iter()
        .map(|&n| generate(kind, n, 0).expect("bench sizes are above the generator minimum"))
        .collect()
}
