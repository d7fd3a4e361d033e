//! Timing of the coloring pipeline over generated instances.

use std::time::Instant;

use crate::error::Result;
use crate::generate::{generate, GeneratorKind};
use crate::matching::MatcherKind;
use crate::pipeline::color_graph;

pub fn median(samples: &mut [f64]) -> Option<f64> {
    if samples.is_empty() {
        return None;
    }
    samples.sort_by(f64::total_cmp);
    let k = samples.len();
    Some(if k % 2 == 1 {
        samples[k / 2]
    } else {
        (samples[k / 2 - 1] + samples[k / 2]) / 2.0
    })
}

/// Least-squares slope of `ln t` against `ln n`. `None` with fewer than two
/// distinct sizes.
pub fn loglog_slope(points: &[(f64, f64)]) -> Option<f64> {
    let pts: Vec<(f64, f64)> = points.iter().map(|&(n, t)| (n.ln(), t.ln())).collect();
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    if pts.len() < 2 || sxx <= 0.0 {
        return None;
    }
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    Some(sxy / sxx)
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    /// Median seconds per coloring over all seeds.
    pub median: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
    pub slope: Option<f64>,
}

/// Times [`color_graph`] on one instance per `(size, seed)`; generation is
/// excluded and one warmup run per size is discarded.
pub fn bench(
    kind: GeneratorKind,
    sizes: &[usize],
    seeds: &[u64],
    matcher: MatcherKind,
) -> Result<BenchReport> {
    let mut rows = Vec::with_capacity(sizes.len());
    for &n in sizes {
        let mut samples = Vec::with_capacity(seeds.len());
        for (i, &seed) in seeds.iter().enumerate() {
            let g = generate(kind, n, seed)?;
            if i == 0 {
                color_graph(&g, matcher)?;
            }
            let start = Instant::now();
            let c = color_graph(&g, matcher)?;
            samples.push(start.elapsed().as_secs_f64());
            std::hint::black_box(c);
        }
        if let Some(median) = median(&mut samples) {
            rows.push(BenchRow { n, median });
        }
    }
    let points: Vec<(f64, f64)> = rows.iter().map(|r| (r.n as f64, r.median.max(1e-9))).collect();
    Ok(BenchReport {
        slope: loglog_slope(&points),
        rows,
    })
}
