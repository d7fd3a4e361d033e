//! Half-edge representation of plane graphs.
//!
//! Every edge `e` owns two darts: `2e` runs from `edges[e][0]` to
//! `edges[e][1]` and `2e + 1` runs back, so `twin(d) = d ^ 1`. Each vertex
//! stores its outgoing darts in counterclockwise order. The face to the left
//! of a dart `d` is continued by `next(d) = rot_prev(twin(d))`, which traces
//! bounded faces counterclockwise and the outer face clockwise.

mod dual;
mod validate;

pub use dual::{build_dual, DualGraph};
pub use validate::{validate, Property, ValidationReport};

use std::cmp::Ordering;

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;
pub type FaceId = usize;
pub type DartId = usize;

/// Exact integer point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }
}

/// How the outer face is picked once faces have been traced.
#[derive(Clone, Debug)]
pub(crate) enum OuterChoice<'a> {
    /// Only valid when the graph has a single face.
    Unique,
    /// A walk prefix `v1 v2 ... vk` along the outer boundary, either orientation.
    Walk(&'a [VertexId]),
    /// The face to the left of this dart.
    Dart(DartId),
    /// The face with negative signed area.
    NegativeArea(&'a [Point]),
}

/// A simple connected plane graph with a fixed combinatorial embedding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddedGraph {
    n: usize,
    edges: Vec<[VertexId; 2]>,
    next: Vec<DartId>,
    face: Vec<FaceId>,
    rot_pos: Vec<usize>,
    rot_start: Vec<usize>,
    rot: Vec<DartId>,
    face_start: Vec<DartId>,
    face_len: Vec<usize>,
    outer: FaceId,
    coords: Option<Vec<Point>>,
}

/// Incidence lists built while checking simplicity and connectivity.
struct Incidence {
    start: Vec<usize>,
    darts: Vec<DartId>,
}

impl Incidence {
    fn of(&self, v: VertexId) -> &[DartId] {
        &self.darts[self.start[v]..self.start[v + 1]]
    }
}

#[inline]
fn dart_origin(edges: &[[VertexId; 2]], d: DartId) -> VertexId {
    edges[d >> 1][d & 1]
}

#[inline]
fn dart_head(edges: &[[VertexId; 2]], d: DartId) -> VertexId {
    edges[d >> 1][(d & 1) ^ 1]
}

/// Checks ids, loops, parallel edges, connectivity and the planar edge bound.
fn check_simple_connected(n: usize, edges: &[[VertexId; 2]]) -> Result<Incidence> {
    for (e, &[u, v]) in edges.iter().enumerate() {
        if u >= n || v >= n {
            return Err(Error::malformed(format!(
                "edge {e} ({u},{v}) references a vertex outside 0..{n}"
            )));
        }
        if u == v {
            return Err(Error::malformed(format!("edge {e} is a loop at vertex {u}")));
        }
    }
    let mut start = vec![0usize; n + 1];
    for &[u, v] in edges {
        start[u + 1] += 1;
        start[v + 1] += 1;
    }
    for i in 0..n {
        start[i + 1] += start[i];
    }
    let mut fill = start.clone();
    let mut darts = vec![0; 2 * edges.len()];
    for d in 0..2 * edges.len() {
        let o = dart_origin(edges, d);
        darts[fill[o]] = d;
        fill[o] += 1;
    }
    let inc = Incidence { start, darts };

    let mut seen_by = vec![usize::MAX; n];
    for v in 0..n {
        for &d in inc.of(v) {
            let w = dart_head(edges, d);
            if seen_by[w] == v {
                return Err(Error::malformed(format!("parallel edges between {v} and {w}")));
            }
            seen_by[w] = v;
        }
    }

    if n >= 3 && edges.len() > 3 * n - 6 {
        return Err(Error::not_planar(format!(
            "{} edges exceed the planar bound 3n-6 = {}",
            edges.len(),
            3 * n - 6
        )));
    }

    if n > 0 {
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &d in inc.of(v) {
                let w = dart_head(edges, d);
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        if count != n {
            return Err(Error::Disconnected);
        }
    }
    Ok(inc)
}

/// Counterclockwise angular order of two nonzero direction vectors,
/// starting from the positive x axis. Exact.
pub(crate) fn angular_cmp(a: (i128, i128), b: (i128, i128)) -> Ordering {
    let half = |p: (i128, i128)| -> u8 {
        if p.1 > 0 || (p.1 == 0 && p.0 > 0) {
            0
        } else {
            1
        }
    };
    half(a).cmp(&half(b)).then_with(|| {
        let cross = a.0 * b.1 - a.1 * b.0;
        0.cmp(&cross)
    })
}

impl EmbeddedGraph {
    /// Builds a graph from an explicit rotation system: `rotation[v]` lists
    /// the neighbors of `v` in counterclockwise order.
    pub fn from_rotation(
        n: usize,
        edges: Vec<[VertexId; 2]>,
        rotation: &[Vec<VertexId>],
        outer: Option<&[VertexId]>,
    ) -> Result<Self> {
        if rotation.len() != n {
            return Err(Error::malformed(format!(
                "rotation lists {} vertices, expected {n}",
                rotation.len()
            )));
        }
        let inc = check_simple_connected(n, &edges)?;
        let mut slot = vec![usize::MAX; n];
        let mut owner = vec![usize::MAX; n];
        let mut rot_start = Vec::with_capacity(n + 1);
        let mut rot = Vec::with_capacity(2 * edges.len());
        rot_start.push(0);
        for v in 0..n {
            let incident = inc.of(v);
            if rotation[v].len() != incident.len() {
                return Err(Error::not_planar(format!(
                    "rotation of vertex {v} has {} entries but the vertex has degree {}",
                    rotation[v].len(),
                    incident.len()
                )));
            }
            for &d in incident {
                let w = dart_head(&edges, d);
                slot[w] = d;
                owner[w] = v;
            }
            for &w in &rotation[v] {
                if w >= n || owner[w] != v {
                    return Err(Error::not_planar(format!(
                        "rotation of vertex {v} lists {w}, which is not an unused neighbor"
                    )));
                }
                owner[w] = usize::MAX;
                rot.push(slot[w]);
            }
            rot_start.push(rot.len());
        }
        let choice = match outer {
            Some(walk) => OuterChoice::Walk(walk),
            None => OuterChoice::Unique,
        };
        Self::assemble(n, edges, rot_start, rot, choice, None)
    }

    /// Builds a straight-line embedding from exact coordinates. Neighbors
    /// are sorted by angle; the outer face is the one traced clockwise.
    pub fn from_coordinates(points: Vec<Point>, edges: Vec<[VertexId; 2]>) -> Result<Self> {
        let n = points.len();
        let mut sorted = points.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::malformed(format!(
                "two vertices share the point ({}, {})",
                w[0].x, w[0].y
            )));
        }
        let inc = check_simple_connected(n, &edges)?;
        let dir = |d: DartId| -> (i128, i128) {
            let p = points[dart_origin(&edges, d)];
            let q = points[dart_head(&edges, d)];
            ((q.x - p.x) as i128, (q.y - p.y) as i128)
        };
        let mut rot_start = Vec::with_capacity(n + 1);
        let mut rot = Vec::with_capacity(2 * edges.len());
        rot_start.push(0);
        for v in 0..n {
            let begin = rot.len();
            rot.extend_from_slice(inc.of(v));
            let around = &mut rot[begin..];
            around.sort_by(|&a, &b| angular_cmp(dir(a), dir(b)).then(a.cmp(&b)));
            for w in around.windows(2) {
                if angular_cmp(dir(w[0]), dir(w[1])) == Ordering::Equal {
                    return Err(Error::not_planar(format!(
                        "edges {} and {} leave vertex {v} in the same direction",
                        w[0] >> 1,
                        w[1] >> 1
                    )));
                }
            }
            rot_start.push(rot.len());
        }
        let mut g = Self::assemble(
            n,
            edges,
            rot_start,
            rot,
            OuterChoice::NegativeArea(&points),
            None,
        )?;
        g.coords = Some(points);
        Ok(g)
    }

    /// Builds a triangulated surface from oriented triangular faces. Each
    /// face `[a, b, c]` is traced `a -> b -> c`, and `outer` indexes the
    /// face that becomes the outer face. Edges are numbered in
    /// lexicographic order of their sorted endpoints.
    pub fn from_triangles(n: usize, faces: &[[VertexId; 3]], outer: usize) -> Result<Self> {
        if outer >= faces.len() {
            return Err(Error::malformed("outer face index out of range"));
        }
        let key = |a: VertexId, b: VertexId| -> u64 {
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            (lo as u64) * (n as u64) + hi as u64
        };
        for f in faces {
            if f.iter().any(|&v| v >= n) {
                return Err(Error::malformed("face references a vertex out of range"));
            }
            if f[0] == f[1] || f[1] == f[2] || f[0] == f[2] {
                return Err(Error::malformed("face with repeated corner"));
            }
        }
        let mut order: Vec<(u64, u32)> = Vec::with_capacity(3 * faces.len());
        for (i, f) in faces.iter().enumerate() {
            for j in 0..3 {
                order.push((key(f[j], f[(j + 1) % 3]), (3 * i + j) as u32));
            }
        }
        order.sort_unstable();
        let corner = |fd: usize| -> (VertexId, VertexId) {
            let f = &faces[fd / 3];
            (f[fd % 3], f[(fd % 3 + 1) % 3])
        };
        let mut edges = Vec::with_capacity(order.len() / 2);
        let mut dart_of = vec![0usize; order.len()];
        for pair in order.chunks(2) {
            if pair.len() != 2 || pair[0].0 != pair[1].0 {
                return Err(Error::not_planar("face list does not close up into a surface"));
            }
            let (fa, fb) = (pair[0].1 as usize, pair[1].1 as usize);
            let (a, b) = corner(fa);
            let (c, d) = corner(fb);
            if a != d || b != c {
                return Err(Error::not_planar(format!(
                    "edge ({a},{b}) is used twice in the same direction"
                )));
            }
            let e = edges.len();
            let lo = a.min(b);
            edges.push([lo, a.max(b)]);
            dart_of[fa] = if a == lo { 2 * e } else { 2 * e + 1 };
            dart_of[fb] = if c == lo { 2 * e } else { 2 * e + 1 };
        }
        // Keys across chunk boundaries must differ, or an edge is shared by
        // more than two faces.
        if (2..order.len()).step_by(2).any(|i| order[i].0 == order[i - 1].0) {
            return Err(Error::not_planar("edge bounds more than two faces"));
        }
        let m = edges.len();
        let mut rot_next = vec![usize::MAX; 2 * m];
        for i in 0..faces.len() {
            let d = [dart_of[3 * i], dart_of[3 * i + 1], dart_of[3 * i + 2]];
            for j in 0..3 {
                rot_next[d[(j + 1) % 3]] = d[j] ^ 1;
            }
        }
        let mut first = vec![usize::MAX; n];
        let mut degree = vec![0usize; n];
        for d in 0..2 * m {
            let o = dart_origin(&edges, d);
            degree[o] += 1;
            if first[o] == usize::MAX {
                first[o] = d;
            }
        }
        let mut rot_start = Vec::with_capacity(n + 1);
        let mut rot = Vec::with_capacity(2 * m);
        rot_start.push(0);
        for v in 0..n {
            if first[v] == usize::MAX {
                return Err(Error::Disconnected);
            }
            let mut d = first[v];
            loop {
                rot.push(d);
                d = rot_next[d];
                if d == first[v] || rot.len() - rot_start[v] > degree[v] {
                    break;
                }
            }
            if rot.len() - rot_start[v] != degree[v] {
                return Err(Error::not_planar(format!(
                    "faces around vertex {v} do not form a single disk"
                )));
            }
            rot_start.push(rot.len());
        }
        check_simple_connected(n, &edges)?;
        let outer_dart = dart_of[3 * outer];
        Self::assemble(n, edges, rot_start, rot, OuterChoice::Dart(outer_dart), None)
    }

    /// Shared tail of every constructor: derives face successors, traces
    /// faces, checks Euler's formula and selects the outer face.
    pub(crate) fn assemble(
        n: usize,
        edges: Vec<[VertexId; 2]>,
        rot_start: Vec<usize>,
        rot: Vec<DartId>,
        outer: OuterChoice<'_>,
        coords: Option<Vec<Point>>,
    ) -> Result<Self> {
        let darts = 2 * edges.len();
        if rot.len() != darts || rot_start.len() != n + 1 {
            return Err(Error::internal("rotation arrays have the wrong size"));
        }
        let mut rot_pos = vec![usize::MAX; darts];
        for v in 0..n {
            for (i, &d) in rot[rot_start[v]..rot_start[v + 1]].iter().enumerate() {
                if d >= darts || dart_origin(&edges, d) != v || rot_pos[d] != usize::MAX {
                    return Err(Error::not_planar(format!(
                        "rotation of vertex {v} is not a permutation of its darts"
                    )));
                }
                rot_pos[d] = i;
            }
        }
        let mut g = EmbeddedGraph {
            n,
            edges,
            next: vec![0; darts],
            face: vec![usize::MAX; darts],
            rot_pos,
            rot_start,
            rot,
            face_start: Vec::new(),
            face_len: Vec::new(),
            outer: 0,
            coords,
        };
        for d in 0..darts {
            g.next[d] = g.rot_prev(d ^ 1);
        }
        for d in 0..darts {
            if g.face[d] != usize::MAX {
                continue;
            }
            let f = g.face_start.len();
            let mut len = 0;
            let mut cur = d;
            loop {
                g.face[cur] = f;
                len += 1;
                cur = g.next[cur];
                if cur == d {
                    break;
                }
                if g.face[cur] != usize::MAX || len > darts {
                    return Err(Error::not_planar("face trace does not close"));
                }
            }
            g.face_start.push(d);
            g.face_len.push(len);
        }
        if darts == 0 {
            g.face_start.push(usize::MAX);
            g.face_len.push(0);
        }
        let f = g.face_start.len() as i64;
        if n as i64 - g.edges.len() as i64 + f != 2 {
            return Err(Error::not_planar(format!(
                "Euler's formula fails: n - m + f = {} - {} + {} != 2",
                n,
                g.edges.len(),
                f
            )));
        }
        g.outer = g.select_outer(outer)?;
        Ok(g)
    }

    fn select_outer(&self, choice: OuterChoice<'_>) -> Result<FaceId> {
        match choice {
            OuterChoice::Unique => {
                if self.face_count() == 1 {
                    Ok(0)
                } else {
                    Err(Error::malformed("the outer face must be designated"))
                }
            }
            OuterChoice::Dart(d) => Ok(self.face[d]),
            OuterChoice::Walk(walk) => {
                if self.face_count() == 1 {
                    return Ok(0);
                }
                let forward: Vec<VertexId> = walk.to_vec();
                let backward: Vec<VertexId> = walk.iter().rev().copied().collect();
                for w in [&forward, &backward] {
                    if let Some(f) = self.face_with_walk(w) {
                        return Ok(f);
                    }
                }
                Err(Error::malformed(format!(
                    "outer vertices {walk:?} are not consecutive on any face"
                )))
            }
            OuterChoice::NegativeArea(points) => {
                if self.face_count() == 1 {
                    return Ok(0);
                }
                let mut negative = Vec::new();
                for f in 0..self.face_count() {
                    let area: i128 = self
                        .face_darts(f)
                        .map(|d| {
                            let p = points[self.origin(d)];
                            let q = points[self.head(d)];
                            p.x as i128 * q.y as i128 - p.y as i128 * q.x as i128
                        })
                        .sum();
                    if area < 0 {
                        negative.push(f);
                    }
                }
                match negative.as_slice() {
                    [f] => Ok(*f),
                    _ => Err(Error::not_planar(format!(
                        "{} faces are traced clockwise; the drawing has crossings",
                        negative.len()
                    ))),
                }
            }
        }
    }

    fn face_with_walk(&self, walk: &[VertexId]) -> Option<FaceId> {
        if walk.len() < 2 || walk.iter().any(|&v| v >= self.n) {
            return None;
        }
        let mut d = self.find_dart(walk[0], walk[1])?;
        let f = self.face[d];
        for &v in &walk[2..] {
            d = self.next[d];
            if self.head(d) != v {
                return None;
            }
        }
        Some(f)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn dart_count(&self) -> usize {
        2 * self.edges.len()
    }

    pub fn face_count(&self) -> usize {
        self.face_start.len()
    }

    pub fn outer_face(&self) -> FaceId {
        self.outer
    }

    pub fn edges(&self) -> &[[VertexId; 2]] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> [VertexId; 2] {
        self.edges[e]
    }

    #[inline]
    pub fn origin(&self, d: DartId) -> VertexId {
        dart_origin(&self.edges, d)
    }

    #[inline]
    pub fn head(&self, d: DartId) -> VertexId {
        dart_head(&self.edges, d)
    }

    #[inline]
    pub fn twin(&self, d: DartId) -> DartId {
        d ^ 1
    }

    #[inline]
    pub fn edge_of(&self, d: DartId) -> EdgeId {
        d >> 1
    }

    /// Next dart along the face to the left of `d`.
    #[inline]
    pub fn next(&self, d: DartId) -> DartId {
        self.next[d]
    }

    /// Previous dart along the face to the left of `d`.
    #[inline]
    pub fn prev(&self, d: DartId) -> DartId {
        self.rot_next(d) ^ 1
    }

    #[inline]
    pub fn face_of(&self, d: DartId) -> FaceId {
        self.face[d]
    }

    /// Outgoing darts of `v` in counterclockwise order.
    #[inline]
    pub fn rotation(&self, v: VertexId) -> &[DartId] {
        &self.rot[self.rot_start[v]..self.rot_start[v + 1]]
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        self.rot_start[v + 1] - self.rot_start[v]
    }

    /// Index of `d` within the rotation of its origin.
    #[inline]
    pub fn rot_pos(&self, d: DartId) -> usize {
        self.rot_pos[d]
    }

    #[inline]
    pub fn rot_next(&self, d: DartId) -> DartId {
        let v = self.origin(d);
        let deg = self.degree(v);
        self.rot[self.rot_start[v] + (self.rot_pos[d] + 1) % deg]
    }

    #[inline]
    pub fn rot_prev(&self, d: DartId) -> DartId {
        let v = self.origin(d);
        let deg = self.degree(v);
        self.rot[self.rot_start[v] + (self.rot_pos[d] + deg - 1) % deg]
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.rotation(v).iter().map(move |&d| self.head(d))
    }

    pub fn face_len(&self, f: FaceId) -> usize {
        self.face_len[f]
    }

    pub fn face_darts(&self, f: FaceId) -> FaceWalk<'_> {
        FaceWalk {
            g: self,
            cur: self.face_start[f],
            left: self.face_len[f],
        }
    }

    /// Corner vertices of `f` in walk order.
    pub fn face_vertices(&self, f: FaceId) -> Vec<VertexId> {
        self.face_darts(f).map(|d| self.origin(d)).collect()
    }

    pub fn coords(&self) -> Option<&[Point]> {
        self.coords.as_deref()
    }

    /// Quadratic check that no two straight edges meet except at a shared
    /// endpoint and that no vertex lies inside an edge. Graphs without
    /// coordinates pass trivially.
    pub fn check_geometry(&self) -> Result<()> {
        let Some(pts) = self.coords.as_deref() else {
            return Ok(());
        };
        let orient = |a: Point, b: Point, c: Point| -> i128 {
            let v = (b.x - a.x) as i128 * (c.y - a.y) as i128 - (b.y - a.y) as i128 * (c.x - a.x) as i128;
            v.signum()
        };
        let within = |a: Point, b: Point, c: Point| {
            c.x >= a.x.min(b.x) && c.x <= a.x.max(b.x) && c.y >= a.y.min(b.y) && c.y <= a.y.max(b.y)
        };
        for (e, &[u, v]) in self.edges.iter().enumerate() {
            let (a, b) = (pts[u], pts[v]);
            for (w, &c) in pts.iter().enumerate() {
                if w != u && w != v && orient(a, b, c) == 0 && within(a, b, c) {
                    return Err(Error::not_planar(format!("vertex {w} lies on edge {e}")));
                }
            }
            for (f, &[x, y]) in self.edges.iter().enumerate().skip(e + 1) {
                if x == u || x == v || y == u || y == v {
                    continue;
                }
                let (c, d) = (pts[x], pts[y]);
                let (o1, o2) = (orient(a, b, c), orient(a, b, d));
                let (o3, o4) = (orient(c, d, a), orient(c, d, b));
                if o1 * o2 < 0 && o3 * o4 < 0 {
                    return Err(Error::not_planar(format!("edges {e} and {f} cross")));
                }
            }
        }
        Ok(())
    }

    pub fn without_coordinates(mut self) -> Self {
        self.coords = None;
        self
    }

    /// Dart from `u` to `v`, if the edge exists.
    pub fn find_dart(&self, u: VertexId, v: VertexId) -> Option<DartId> {
        if u >= self.n || v >= self.n {
            return None;
        }
        if self.degree(u) <= self.degree(v) {
            self.rotation(u).iter().copied().find(|&d| self.head(d) == v)
        } else {
            self.rotation(v)
                .iter()
                .copied()
                .find(|&d| self.head(d) == u)
                .map(|d| d ^ 1)
        }
    }

    pub fn find_edge(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        self.find_dart(u, v).map(|d| d >> 1)
    }

    /// Every face is a triangle (n >= 3).
    pub fn is_maximal(&self) -> bool {
        self.n >= 3 && self.edges.len() == 3 * self.n - 6 && self.face_len.iter().all(|&l| l == 3)
    }

    /// Re-checks the structural invariants from the raw arrays.
    pub fn check_invariants(&self) -> Result<()> {
        check_simple_connected(self.n, &self.edges)?;
        let darts = self.dart_count();
        for d in 0..darts {
            if self.twin(self.twin(d)) != d || self.origin(self.twin(d)) != self.head(d) {
                return Err(Error::internal(format!("twin of dart {d} is inconsistent")));
            }
            if self.rotation(self.origin(d))[self.rot_pos[d]] != d {
                return Err(Error::internal(format!("rotation index of dart {d} is stale")));
            }
        }
        let mut visits = vec![0u8; darts];
        for f in 0..self.face_count() {
            let mut walked = 0;
            for d in self.face_darts(f) {
                if self.face[d] != f {
                    return Err(Error::not_planar(format!("dart {d} is traced by face {f}")));
                }
                visits[d] += 1;
                walked += 1;
            }
            if walked > 0 && self.next[self.prev(self.face_start[f])] != self.face_start[f] {
                return Err(Error::not_planar(format!("face {f} does not close")));
            }
        }
        if visits.iter().any(|&c| c != 1) {
            return Err(Error::not_planar("some dart is not on exactly one face"));
        }
        let f = self.face_count() as i64;
        if self.n as i64 - self.m() as i64 + f != 2 {
            return Err(Error::not_planar("Euler's formula fails"));
        }
        Ok(())
    }
}

/// Iterator over the darts of one face.
pub struct FaceWalk<'a> {
    g: &'a EmbeddedGraph,
    cur: DartId,
    left: usize,
}

impl Iterator for FaceWalk<'_> {
    type Item = DartId;

    fn next(&mut self) -> Option<DartId> {
        if self.left == 0 {
            return None;
        }
        let d = self.cur;
        self.left -= 1;
        self.cur = self.g.next[d];
        Some(d)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        (self.left, Some(self.left))
    }
}

impl ExactSizeIterator for FaceWalk<'_> {}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    fn triangle() -> EmbeddedGraph {
        EmbeddedGraph::from_coordinates(
            vec![Point::new(0, 0), Point::new(4, 0), Point::new(0, 4)],
            vec![[0, 1], [1, 2], [2, 0]],
        )
        .unwrap()
    }

    pub(crate) fn octahedron() -> EmbeddedGraph {
        // Equator 0..4 counterclockwise, apex 4 above, apex 5 below.
        let rotation = vec![
            vec![1, 4, 3, 5],
            vec![2, 4, 0, 5],
            vec![3, 4, 1, 5],
            vec![0, 4, 2, 5],
            vec![0, 1, 2, 3],
            vec![0, 3, 2, 1],
        ];
        let edges = vec![
            [0, 1], [1, 2], [2, 3], [3, 0],
            [0, 4], [1, 4], [2, 4], [3, 4],
            [0, 5], [1, 5], [2, 5], [3, 5],
        ];
        EmbeddedGraph::from_rotation(6, edges, &rotation, Some(&[0, 5, 1])).unwrap()
    }

    #[test]
    fn triangle_has_two_faces_and_ccw_inner() {
        let g = triangle();
        assert_eq!(g.face_count(), 2);
        let outer = g.outer_face();
        let inner = 1 - outer;
        assert_eq!(g.face_len(inner), 3);
        // Inner face traced counterclockwise: 0 -> 1 -> 2.
        let walk = g.face_vertices(inner);
        let start = walk.iter().position(|&v| v == 0).unwrap();
        assert_eq!(walk[(start + 1) % 3], 1);
        g.check_invariants().unwrap();
    }

    #[test]
    fn octahedron_has_eight_triangular_faces() {
        let g = octahedron();
        assert_eq!(g.face_count(), 8);
        assert!(g.is_maximal());
        g.check_invariants().unwrap();
        let mut outer = g.face_vertices(g.outer_face());
        outer.sort();
        assert_eq!(outer, vec![0, 1, 5]);
    }

    #[test]
    fn k5_exceeds_the_edge_bound() {
        let pts = vec![
            Point::new(0, 0),
            Point::new(10, 0),
            Point::new(5, 8),
            Point::new(4, 3),
            Point::new(6, 2),
        ];
        let mut edges = Vec::new();
        for u in 0..5 {
            for v in u + 1..5 {
                edges.push([u, v]);
            }
        }
        let err = EmbeddedGraph::from_coordinates(pts, edges).unwrap_err();
        assert!(matches!(err, Error::NotPlanarEmbedding(_)), "{err:?}");
    }

    #[test]
    fn loops_parallel_and_disconnected_inputs_are_rejected() {
        let pts = vec![Point::new(0, 0), Point::new(1, 0), Point::new(0, 1), Point::new(5, 5)];
        let e = EmbeddedGraph::from_coordinates(pts.clone(), vec![[0, 0]]).unwrap_err();
        assert!(matches!(e, Error::MalformedGraph(_)));
        let e = EmbeddedGraph::from_coordinates(pts.clone(), vec![[0, 1], [1, 0]]).unwrap_err();
        assert!(matches!(e, Error::MalformedGraph(_)));
        let e = EmbeddedGraph::from_coordinates(pts, vec![[0, 1], [1, 2]]).unwrap_err();
        assert_eq!(e, Error::Disconnected);
    }

    #[test]
    fn duplicate_points_are_malformed() {
        let e = EmbeddedGraph::from_coordinates(
            vec![Point::new(1, 1), Point::new(1, 1)],
            vec![[0, 1]],
        )
        .unwrap_err();
        assert!(matches!(e, Error::MalformedGraph(_)));
    }

    #[test]
    fn geometry_check_finds_crossings() {
        let square = |edges| {
            EmbeddedGraph::from_coordinates(
                vec![Point::new(0, 0), Point::new(4, 0), Point::new(4, 4), Point::new(0, 4), Point::new(2, 0)],
                edges,
            )
        };
        let ok = square(vec![[0, 4], [4, 1], [1, 2], [2, 3], [3, 0], [4, 2]]).unwrap();
        ok.check_geometry().unwrap();
        let on_edge = square(vec![[0, 1], [1, 2], [2, 3], [3, 0], [4, 2]]);
        match on_edge {
            Ok(g) => assert!(g.check_geometry().is_err()),
            Err(e) => assert!(matches!(e, Error::NotPlanarEmbedding(_))),
        }
    }

    #[test]
    fn overlapping_collinear_edges_are_rejected() {
        let e = EmbeddedGraph::from_coordinates(
            vec![Point::new(0, 0), Point::new(1, 0), Point::new(2, 0)],
            vec![[0, 1], [0, 2]],
        )
        .unwrap_err();
        assert!(matches!(e, Error::NotPlanarEmbedding(_)));
    }

    #[test]
    fn single_vertex_and_single_edge() {
        let g = EmbeddedGraph::from_coordinates(vec![Point::new(0, 0)], vec![]).unwrap();
        assert_eq!((g.n(), g.m(), g.face_count()), (1, 0, 1));
        let g = EmbeddedGraph::from_coordinates(vec![Point::new(0, 0), Point::new(3, 1)], vec![[0, 1]])
            .unwrap();
        assert_eq!(g.face_count(), 1);
        assert_eq!(g.face_len(0), 2);
    }

    #[test]
    fn nonplanar_rotation_fails_euler() {
        // K4 with a rotation that is not planar (genus 1).
        let rotation = vec![vec![1, 2, 3], vec![0, 2, 3], vec![0, 1, 3], vec![0, 1, 2]];
        let edges = vec![[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]];
        let err = EmbeddedGraph::from_rotation(4, edges, &rotation, None).unwrap_err();
        assert!(matches!(err, Error::NotPlanarEmbedding(_)), "{err:?}");
    }

    #[test]
    fn from_triangles_matches_rotation_form() {
        let g = octahedron();
        let faces: Vec<[VertexId; 3]> = (0..g.face_count())
            .map(|f| {
                let v = g.face_vertices(f);
                [v[0], v[1], v[2]]
            })
            .collect();
        let h = EmbeddedGraph::from_triangles(6, &faces, g.outer_face()).unwrap();
        assert_eq!(h.face_count(), 8);
        h.check_invariants().unwrap();
        for v in 0..6 {
            let mut a: Vec<_> = g.neighbors(v).collect();
            let mut b: Vec<_> = h.neighbors(v).collect();
            // Same cyclic order: rotate both so the smallest neighbor leads.
            let ra = a.iter().position(|&x| x == *a.iter().min().unwrap()).unwrap();
            let rb = b.iter().position(|&x| x == *b.iter().min().unwrap()).unwrap();
            a.rotate_left(ra);
            b.rotate_left(rb);
            assert_eq!(a, b, "rotation at {v}");
        }
    }

    #[test]
    fn from_triangles_rejects_open_surfaces() {
        let err = EmbeddedGraph::from_triangles(3, &[[0, 1, 2]], 0).unwrap_err();
        assert!(matches!(err, Error::NotPlanarEmbedding(_)));
    }

    #[test]
    fn angular_order_is_counterclockwise() {
        let mut dirs = vec![(0, -1), (-1, 0), (1, 1), (1, 0), (0, 1), (-1, -1)];
        dirs.sort_by(|&a, &b| angular_cmp(a, b));
        assert_eq!(dirs, vec![(1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1)]);
    }
}
