//! Line-oriented text formats for graphs, colorings and matched duals.
//!
//! ```text
//! planar <n> <m> <coord|rot>
//! v <id> <x> <y>                 # coordinate form
//! v <id> : <neighbors, ccw>      # rotation form
//! e <u> <v>
//! outer <v1> <v2> <v3>           # rotation form only
//! ```
//!
//! `#` starts a comment; blank lines are ignored.

use std::fmt::Write as _;

use crate::coloring::{Color, Coloring};
use crate::embedding::{DualGraph, EmbeddedGraph, Point, VertexId};
use crate::error::{Error, Result};
use crate::matching::Matching;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Form {
    Coordinates(Vec<Point>),
    Rotation {
        rotation: Vec<Vec<VertexId>>,
        outer: Option<Vec<VertexId>>,
    },
}

/// A parsed but not yet validated graph file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphFile {
    pub n: usize,
    pub edges: Vec<[VertexId; 2]>,
    pub form: Form,
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let toks: Vec<&str> = body.split_whitespace().collect();
        (!toks.is_empty()).then_some((i + 1, toks))
    })
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn num<T: std::str::FromStr>(line: usize, tok: &str, what: &str) -> Result<T> {
    tok.parse()
        .map_err(|_| parse_err(line, format!("invalid {what} `{tok}`")))
}

pub fn parse_graph(text: &str) -> Result<GraphFile> {
    let mut lines = content_lines(text);
    let (l0, header) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    if header.len() != 4 || header[0] != "planar" {
        return Err(parse_err(l0, "expected `planar <n> <m> <coord|rot>`"));
    }
    let n: usize = num(l0, header[1], "vertex count")?;
    let m: usize = num(l0, header[2], "edge count")?;
    let coord = match header[3] {
        "coord" => true,
        "rot" => false,
        other => return Err(parse_err(l0, format!("unknown form `{other}`"))),
    };

    let mut points: Vec<Option<Point>> = vec![None; if coord { n } else { 0 }];
    let mut rotation: Vec<Option<Vec<VertexId>>> = vec![None; if coord { 0 } else { n }];
    let mut edges = Vec::with_capacity(m);
    let mut outer = None;
    let mut vertices_seen = 0;

    for (ln, toks) in lines {
        match toks[0] {
            "v" => {
                if !edges.is_empty() {
                    return Err(parse_err(ln, "vertex lines must precede edge lines"));
                }
                let id: usize = num(ln, toks.get(1).copied().unwrap_or(""), "vertex id")?;
                if id >= n {
                    return Err(parse_err(ln, format!("vertex id {id} out of range")));
                }
                if coord {
                    if toks.len() != 4 {
                        return Err(parse_err(ln, "expected `v <id> <x> <y>`"));
                    }
                    if points[id].is_some() {
                        return Err(parse_err(ln, format!("vertex {id} defined twice")));
                    }
                    let x = num(ln, toks[2], "coordinate")?;
                    let y = num(ln, toks[3], "coordinate")?;
                    points[id] = Some(Point::new(x, y));
                } else {
                    if toks.get(2) != Some(&":") {
                        return Err(parse_err(ln, "expected `v <id> : <neighbors>`"));
                    }
                    if rotation[id].is_some() {
                        return Err(parse_err(ln, format!("vertex {id} defined twice")));
                    }
                    let nbrs = toks[3..]
                        .iter()
                        .map(|t| num(ln, t, "neighbor id"))
                        .collect::<Result<Vec<usize>>>()?;
                    rotation[id] = Some(nbrs);
                }
                vertices_seen += 1;
            }
            "e" => {
                if toks.len() != 3 {
                    return Err(parse_err(ln, "expected `e <u> <v>`"));
                }
                if outer.is_some() {
                    return Err(parse_err(ln, "edge lines must precede the outer line"));
                }
                let u = num(ln, toks[1], "vertex id")?;
                let v = num(ln, toks[2], "vertex id")?;
                edges.push([u, v]);
            }
            "outer" if !coord => {
                if outer.is_some() {
                    return Err(parse_err(ln, "outer face given twice"));
                }
                let walk = toks[1..]
                    .iter()
                    .map(|t| num(ln, t, "vertex id"))
                    .collect::<Result<Vec<usize>>>()?;
                if walk.len() < 2 {
                    return Err(parse_err(ln, "outer needs at least two vertices"));
                }
                outer = Some(walk);
            }
            other => return Err(parse_err(ln, format!("unexpected record `{other}`"))),
        }
    }
    if vertices_seen != n {
        return Err(parse_err(l0, format!("header declares {n} vertices, found {vertices_seen}")));
    }
    if edges.len() != m {
        return Err(parse_err(l0, format!("header declares {m} edges, found {}", edges.len())));
    }
    let form = if coord {
        Form::Coordinates(points.into_iter().map(Option::unwrap).collect())
    } else {
        Form::Rotation {
            rotation: rotation.into_iter().map(Option::unwrap).collect(),
            outer,
        }
    };
    Ok(GraphFile { n, edges, form })
}

/// Validates a parsed file into an embedding.
pub fn load_embedding(file: &GraphFile) -> Result<EmbeddedGraph> {
    match &file.form {
        Form::Coordinates(points) => {
            EmbeddedGraph::from_coordinates(points.clone(), file.edges.clone())
        }
        Form::Rotation { rotation, outer } => {
            EmbeddedGraph::from_rotation(file.n, file.edges.clone(), rotation, outer.as_deref())
        }
    }
}

pub fn read_graph(text: &str) -> Result<EmbeddedGraph> {
    load_embedding(&parse_graph(text)?)
}

/// Rotation form of any embedded graph. The outer line lists the first
/// three corners of the outer walk.
pub fn write_rotation(g: &EmbeddedGraph) -> String {
    let mut out = String::with_capacity(16 * (g.n() + g.m()));
    let _ = writeln!(out, "planar {} {} rot", g.n(), g.m());
    for v in 0..g.n() {
        out.push_str("v ");
        let _ = write!(out, "{v} :");
        for w in g.neighbors(v) {
            let _ = write!(out, " {w}");
        }
        out.push('\n');
    }
    for &[u, v] in g.edges() {
        let _ = writeln!(out, "e {u} {v}");
    }
    let walk = g.face_vertices(g.outer_face());
    if !walk.is_empty() {
        out.push_str("outer");
        for v in walk.iter().take(3) {
            let _ = write!(out, " {v}");
        }
        out.push('\n');
    }
    out
}

/// Coordinate form; `None` when the graph carries no coordinates.
pub fn write_coordinates(g: &EmbeddedGraph) -> Option<String> {
    let pts = g.coords()?;
    let mut out = String::new();
    let _ = writeln!(out, "planar {} {} coord", g.n(), g.m());
    for (v, p) in pts.iter().enumerate() {
        let _ = writeln!(out, "v {v} {} {}", p.x, p.y);
    }
    for &[u, v] in g.edges() {
        let _ = writeln!(out, "e {u} {v}");
    }
    Some(out)
}

pub fn write_coloring(c: &Coloring) -> String {
    let mut out = String::with_capacity(12 * c.len() + 16);
    let _ = writeln!(out, "coloring {}", c.len());
    for (v, col) in c.iter().enumerate() {
        if let Some(col) = col {
            let _ = writeln!(out, "c {v} {}", col.as_u8());
        }
    }
    out
}

pub fn parse_coloring(text: &str) -> Result<Coloring> {
    let mut lines = content_lines(text);
    let (l0, header) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    if header.len() != 2 || header[0] != "coloring" {
        return Err(parse_err(l0, "expected `coloring <n>`"));
    }
    let n: usize = num(l0, header[1], "vertex count")?;
    let mut c = Coloring::unset(n);
    for (ln, toks) in lines {
        if toks.len() != 3 || toks[0] != "c" {
            return Err(parse_err(ln, "expected `c <vertex> <1|2>`"));
        }
        let v: usize = num(ln, toks[1], "vertex id")?;
        if v >= n {
            return Err(parse_err(ln, format!("vertex {v} out of range")));
        }
        let col = match toks[2] {
            "1" => Color::One,
            "2" => Color::Two,
            other => return Err(parse_err(ln, format!("invalid color `{other}`"))),
        };
        if c.get(v).is_some() {
            return Err(parse_err(ln, format!("vertex {v} colored twice")));
        }
        c.set(v, col);
    }
    Ok(c)
}

/// The dual as a rotation-form graph (faces become vertices, each listing
/// its neighbors in boundary order) followed by `m <dual-edge>` lines for
/// every matched edge. Fails when the dual is not simple.
pub fn write_dual(g: &EmbeddedGraph, dual: &DualGraph, matching: Option<&Matching>) -> Result<String> {
    let rotation: Vec<Vec<VertexId>> = (0..g.face_count())
        .map(|f| g.face_darts(f).map(|d| g.face_of(g.twin(d))).collect())
        .collect();
    let edges = dual.edges().to_vec();
    // The dual's faces correspond to primal vertices; vertex 0's dual face
    // is walked by the faces around it.
    let outer: Vec<VertexId> = g
        .rotation(0)
        .iter()
        .take(3)
        .map(|&d| g.face_of(d))
        .collect();
    let dual_embedded =
        EmbeddedGraph::from_rotation(dual.node_count(), edges, &rotation, Some(&outer))?;
    let mut out = write_rotation(&dual_embedded);
    if let Some(mm) = matching {
        for e in mm.edges() {
            let _ = writeln!(out, "m {e}");
        }
    }
    Ok(out)
}
