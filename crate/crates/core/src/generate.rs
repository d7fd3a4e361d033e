//! Seeded generators of maximal planar graphs.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::embedding::{EmbeddedGraph, VertexId};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorKind {
    /// Repeated stacking of a vertex into a random inner face.
    Apollonian,
    /// Two apexes over a cycle; no separating triangles.
    Bipyramid,
    /// Apollonian followed by random edge flips.
    Flip,
}

impl GeneratorKind {
    pub const ALL: [GeneratorKind; 3] = [
        GeneratorKind::Apollonian,
        GeneratorKind::Bipyramid,
        GeneratorKind::Flip,
    ];

    pub fn min_size(self) -> usize {
        match self {
            GeneratorKind::Bipyramid => 6,
            _ => 4,
        }
    }
}

impl FromStr for GeneratorKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "apollonian" => Ok(GeneratorKind::Apollonian),
            "bipyramid" => Ok(GeneratorKind::Bipyramid),
            "flip" => Ok(GeneratorKind::Flip),
            other => Err(format!(
                "unknown generator `{other}` (expected apollonian, bipyramid or flip)"
            )),
        }
    }
}

impl fmt::Display for GeneratorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GeneratorKind::Apollonian => "apollonian",
            GeneratorKind::Bipyramid => "bipyramid",
            GeneratorKind::Flip => "flip",
        })
    }
}

/// A maximal planar graph on `n` vertices. `seed` is ignored by the
/// bipyramid generator.
pub fn generate(kind: GeneratorKind, n: usize, seed: u64) -> Result<EmbeddedGraph> {
    if n < kind.min_size() {
        return Err(Error::precondition(format!(
            "{kind} needs at least {} vertices, got {n}",
            kind.min_size()
        )));
    }
    let (faces, outer) = match kind {
        GeneratorKind::Apollonian => apollonian_faces(n, &mut ChaCha8Rng::seed_from_u64(seed)),
        GeneratorKind::Bipyramid => bipyramid_faces(n),
        GeneratorKind::Flip => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let (mut faces, outer) = apollonian_faces(n, &mut rng);
            random_flips(&mut faces, outer, n, &mut rng);
            (faces, outer)
        }
    };
    EmbeddedGraph::from_triangles(n, &faces, outer)
}

pub fn apollonian(n: usize, seed: u64) -> Result<EmbeddedGraph> {
    generate(GeneratorKind::Apollonian, n, seed)
}

pub fn bipyramid(n: usize) -> Result<EmbeddedGraph> {
    generate(GeneratorKind::Bipyramid, n, 0)
}

pub fn flipped(n: usize, seed: u64) -> Result<EmbeddedGraph> {
    generate(GeneratorKind::Flip, n, seed)
}

/// Oriented faces of a stacked triangulation; the outer face is index 1.
fn apollonian_faces(n: usize, rng: &mut ChaCha8Rng) -> (Vec<[VertexId; 3]>, usize) {
    let mut faces = Vec::with_capacity(2 * n - 4);
    faces.push([0, 1, 2]);
    faces.push([0, 2, 1]);
    for v in 3..n {
        let mut i = rng.gen_range(0..faces.len() - 1);
        if i >= 1 {
            i += 1;
        }
        let [a, b, c] = faces[i];
        faces[i] = [a, b, v];
        faces.push([b, c, v]);
        faces.push([c, a, v]);
    }
    (faces, 1)
}

fn bipyramid_faces(n: usize) -> (Vec<[VertexId; 3]>, usize) {
    let k = n - 2;
    let (top, bottom) = (k, k + 1);
    let mut faces = Vec::with_capacity(2 * k);
    for i in 0..k {
        let j = (i + 1) % k;
        faces.push([i, j, top]);
        faces.push([j, i, bottom]);
    }
    (faces, 1)
}

/// About `n` attempted flips of edges shared by two inner faces, skipping
/// any flip that would create a parallel edge.
fn random_flips(faces: &mut [[VertexId; 3]], outer: usize, n: usize, rng: &mut ChaCha8Rng) {
    let mut face_of: HashMap<(VertexId, VertexId), usize> = HashMap::with_capacity(3 * faces.len());
    let mut edges: HashSet<(VertexId, VertexId)> = HashSet::with_capacity(3 * n);
    for (f, t) in faces.iter().enumerate() {
        for k in 0..3 {
            let (a, b) = (t[k], t[(k + 1) % 3]);
            face_of.insert((a, b), f);
            edges.insert((a.min(b), a.max(b)));
        }
    }
    for _ in 0..n {
        let f1 = rng.gen_range(0..faces.len());
        let k = rng.gen_range(0..3);
        if f1 == outer {
            continue;
        }
        let t = faces[f1];
        let (a, b, c) = (t[k], t[(k + 1) % 3], t[(k + 2) % 3]);
        let f2 = face_of[&(b, a)];
        if f2 == outer {
            continue;
        }
        let s = faces[f2];
        let j = (0..3).find(|&j| s[j] == b).expect("shared edge");
        let d = s[(j + 2) % 3];
        if c == d || edges.contains(&(c.min(d), c.max(d))) {
            continue;
        }
        faces[f1] = [a, d, c];
        faces[f2] = [d, b, c];
        face_of.remove(&(a, b));
        face_of.remove(&(b, a));
        for (f, t) in [(f1, faces[f1]), (f2, faces[f2])] {
            for k in 0..3 {
                face_of.insert((t[k], t[(k + 1) % 3]), f);
            }
        }
        edges.remove(&(a.min(b), a.max(b)));
        edges.insert((c.min(d), c.max(d)));
    }
}
