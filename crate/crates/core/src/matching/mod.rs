//! Perfect matchings in cubic bridgeless duals.
//!
//! Two matchers share one interface: [`MatcherKind::Fast`] runs a
//! Karp–Sipser greedy pass and repairs the few exposed nodes with
//! locally-reset blossom searches; [`MatcherKind::Reference`] is a plain
//! Edmonds implementation kept as a correctness baseline.

mod blossom;
mod fast;
mod gadget;
pub mod reference;

use std::fmt;
use std::str::FromStr;

pub use gadget::{augment_once, ForcedEdgeGadget};

use crate::embedding::{DualGraph, EdgeId};
use crate::error::{Error, Result};

/// Read access to an undirected graph for the matchers.
pub trait MatchGraph {
    fn node_count(&self) -> usize;
    fn edge_count(&self) -> usize;
    fn endpoints(&self, e: EdgeId) -> [usize; 2];
    /// `(neighbor, edge)` pairs, sorted ascending.
    fn adjacency(&self, v: usize) -> &[(usize, EdgeId)];
}

impl MatchGraph for DualGraph {
    fn node_count(&self) -> usize {
        DualGraph::node_count(self)
    }

    fn edge_count(&self) -> usize {
        DualGraph::edge_count(self)
    }

    fn endpoints(&self, e: EdgeId) -> [usize; 2] {
        DualGraph::endpoints(self, e)
    }

    fn adjacency(&self, v: usize) -> &[(usize, EdgeId)] {
        DualGraph::adjacency(self, v)
    }
}

/// A set of pairwise disjoint edges with per-node partner lookup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    member: Vec<bool>,
    partner: Vec<Option<(usize, EdgeId)>>,
    size: usize,
}

impl Matching {
    pub fn empty(nodes: usize, edges: usize) -> Self {
        Matching {
            member: vec![false; edges],
            partner: vec![None; nodes],
            size: 0,
        }
    }

    pub fn from_edges<G: MatchGraph>(g: &G, edges: impl IntoIterator<Item = EdgeId>) -> Result<Self> {
        let mut m = Matching::empty(g.node_count(), g.edge_count());
        for e in edges {
            m.insert(g, e)?;
        }
        Ok(m)
    }

    /// Builds a matching from a node-to-node mate array (`usize::MAX` for
    /// exposed). The lowest-id edge between two mates is used.
    pub(crate) fn from_mates<G: MatchGraph>(g: &G, mate: &[usize]) -> Result<Self> {
        let mut m = Matching::empty(g.node_count(), g.edge_count());
        for (v, &w) in mate.iter().enumerate() {
            if w == usize::MAX || w < v {
                continue;
            }
            if mate[w] != v {
                return Err(Error::internal(format!("mate array is not symmetric at {v}")));
            }
            let e = g
                .adjacency(v)
                .iter()
                .find(|&&(x, _)| x == w)
                .map(|&(_, e)| e)
                .ok_or_else(|| Error::internal(format!("mates {v} and {w} are not adjacent")))?;
            m.insert(g, e)?;
        }
        Ok(m)
    }

    pub fn insert<G: MatchGraph>(&mut self, g: &G, e: EdgeId) -> Result<()> {
        let [a, b] = g.endpoints(e);
        if self.member[e] {
            return Ok(());
        }
        if a == b || self.partner[a].is_some() || self.partner[b].is_some() {
            return Err(Error::precondition(format!(
                "edge {e} shares an endpoint with the matching"
            )));
        }
        self.member[e] = true;
        self.partner[a] = Some((b, e));
        self.partner[b] = Some((a, e));
        self.size += 1;
        Ok(())
    }

    pub fn remove<G: MatchGraph>(&mut self, g: &G, e: EdgeId) {
        if !self.member[e] {
            return;
        }
        let [a, b] = g.endpoints(e);
        self.member[e] = false;
        self.partner[a] = None;
        self.partner[b] = None;
        self.size -= 1;
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.member[e]
    }

    pub fn partner(&self, v: usize) -> Option<usize> {
        self.partner[v].map(|(w, _)| w)
    }

    pub fn partner_edge(&self, v: usize) -> Option<EdgeId> {
        self.partner[v].map(|(_, e)| e)
    }

    /// Number of matched edges.
    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn node_count(&self) -> usize {
        self.partner.len()
    }

    pub fn edge_count(&self) -> usize {
        self.member.len()
    }

    pub fn is_perfect(&self) -> bool {
        self.partner.iter().all(Option::is_some)
    }

    /// Matched edge ids in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.member
            .iter()
            .enumerate()
            .filter_map(|(e, &m)| m.then_some(e))
    }

    pub fn exposed(&self) -> impl Iterator<Item = usize> + '_ {
        self.partner
            .iter()
            .enumerate()
            .filter_map(|(v, p)| p.is_none().then_some(v))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum MatcherKind {
    #[default]
    Fast,
    Reference,
}

impl FromStr for MatcherKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "fast" => Ok(MatcherKind::Fast),
            "reference" => Ok(MatcherKind::Reference),
            other => Err(format!("unknown matcher `{other}` (expected fast or reference)")),
        }
    }
}

impl fmt::Display for MatcherKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MatcherKind::Fast => "fast",
            MatcherKind::Reference => "reference",
        })
    }
}

/// A perfect matching of `g`, found with the fast matcher.
pub fn perfect_matching<G: MatchGraph>(g: &G) -> Result<Matching> {
    perfect_matching_with(g, MatcherKind::Fast)
}

pub fn perfect_matching_with<G: MatchGraph>(g: &G, kind: MatcherKind) -> Result<Matching> {
    let m = match kind {
        MatcherKind::Fast => fast::perfect_matching(g)?,
        MatcherKind::Reference => reference::perfect_matching(g)?,
    };
    debug_assert!(m.is_perfect());
    Ok(m)
}

/// A perfect matching of `d` that contains `forced`. Returns `m` itself when
/// it already contains the edge; otherwise one augmentation in the pendant
/// gadget repairs `m`.
pub fn forced_edge_matching(d: &DualGraph, forced: EdgeId, m: &Matching) -> Result<Matching> {
    if forced >= d.edge_count() {
        return Err(Error::precondition(format!("dual edge {forced} does not exist")));
    }
    if m.node_count() != d.node_count() || m.edge_count() != d.edge_count() || !m.is_perfect() {
        return Err(Error::precondition("the starting matching must be a perfect matching of the dual"));
    }
    if m.contains(forced) {
        return Ok(m.clone());
    }
    let gadget = ForcedEdgeGadget::new(d, forced)?;
    let lifted = gadget.lift(m)?;
    let augmented = augment_once(&gadget, &lifted)?;
    let out = gadget.project(d, &augmented)?;
    if !out.is_perfect() || !out.contains(forced) {
        return Err(Error::internal("forced-edge repair did not produce a perfect matching"));
    }
    Ok(out)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    /// Every perfect matching of a small graph, by exhaustive search.
    pub(crate) fn all_perfect_matchings<G: MatchGraph>(g: &G) -> Vec<Vec<EdgeId>> {
        fn rec<G: MatchGraph>(
            g: &G,
            used: &mut Vec<bool>,
            chosen: &mut Vec<EdgeId>,
            out: &mut Vec<Vec<EdgeId>>,
        ) {
            let Some(v) = used.iter().position(|&u| !u) else {
                let mut c = chosen.clone();
                c.sort_unstable();
                out.push(c);
                return;
            };
            used[v] = true;
            for &(w, e) in g.adjacency(v) {
                if !used[w] {
                    used[w] = true;
                    chosen.push(e);
                    rec(g, used, chosen, out);
                    chosen.pop();
                    used[w] = false;
                }
            }
            used[v] = false;
        }
        let mut out = Vec::new();
        rec(g, &mut vec![false; g.node_count()], &mut Vec::new(), &mut out);
        out
    }

    pub(crate) fn k4() -> DualGraph {
        DualGraph::from_edges(4, vec![[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]])
    }

    /// Cube: bottom ring 0..4, top ring 4..8, verticals i -- i+4.
    pub(crate) fn cube() -> DualGraph {
        let mut e = Vec::new();
        for i in 0..4 {
            e.push([i, (i + 1) % 4]);
        }
        for i in 0..4 {
            e.push([4 + i, 4 + (i + 1) % 4]);
        }
        for i in 0..4 {
            e.push([i, i + 4]);
        }
        DualGraph::from_edges(8, e)
    }

    pub(crate) fn pentagonal_prism() -> DualGraph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push([i, (i + 1) % 5]);
            e.push([5 + i, 5 + (i + 1) % 5]);
            e.push([i, i + 5]);
        }
        DualGraph::from_edges(10, e)
    }

    #[test]
    fn brute_force_counts() {
        assert_eq!(all_perfect_matchings(&k4()).len(), 3);
        assert_eq!(all_perfect_matchings(&cube()).len(), 9);
    }

    #[test]
    fn both_matchers_find_perfect_matchings_on_small_cubic_graphs() {
        for g in [k4(), cube(), pentagonal_prism()] {
            let all = all_perfect_matchings(&g);
            for kind in [MatcherKind::Fast, MatcherKind::Reference] {
                let m = perfect_matching_with(&g, kind).unwrap();
                assert!(m.is_perfect());
                assert_eq!(m.len(), g.node_count() / 2);
                let edges: Vec<_> = m.edges().collect();
                assert!(all.contains(&edges), "{kind}: {edges:?} not a perfect matching");
                for v in 0..g.node_count() {
                    assert_eq!(m.partner(m.partner(v).unwrap()), Some(v));
                }
            }
        }
    }

    #[test]
    fn matcher_output_is_deterministic() {
        let g = pentagonal_prism();
        let a = perfect_matching(&g).unwrap();
        let b = perfect_matching(&g).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn forced_edge_already_matched_returns_input() {
        let g = cube();
        let m = perfect_matching(&g).unwrap();
        let e = m.edges().next().unwrap();
        assert_eq!(forced_edge_matching(&g, e, &m).unwrap(), m);
    }

    #[test]
    fn forced_ring_edge_on_cube_with_vertical_matching() {
        let g = cube();
        let verticals = Matching::from_edges(&g, 8..12).unwrap();
        assert!(verticals.is_perfect());
        let all = all_perfect_matchings(&g);
        for forced in 0..4 {
            let out = forced_edge_matching(&g, forced, &verticals).unwrap();
            assert!(out.contains(forced));
            let edges: Vec<_> = out.edges().collect();
            assert!(all.contains(&edges));
        }
    }

    #[test]
    fn every_k4_edge_can_be_forced() {
        let g = k4();
        let m = perfect_matching(&g).unwrap();
        for e in 0..6 {
            let out = forced_edge_matching(&g, e, &m).unwrap();
            assert!(out.is_perfect() && out.contains(e));
        }
    }

    #[test]
    fn forced_matching_rejects_imperfect_start() {
        let g = k4();
        let mut m = perfect_matching(&g).unwrap();
        let e = m.edges().next().unwrap();
        m.remove(&g, e);
        let other = (0..6).find(|&x| !m.contains(x) && x != e).unwrap();
        assert!(matches!(
            forced_edge_matching(&g, other, &m),
            Err(Error::PreconditionViolation(_))
        ));
    }

    #[test]
    fn graph_without_perfect_matching_is_an_internal_error() {
        // K1,3 has no perfect matching.
        let star = DualGraph::from_edges(4, vec![[0, 1], [0, 2], [0, 3]]);
        for kind in [MatcherKind::Fast, MatcherKind::Reference] {
            assert!(matches!(
                perfect_matching_with(&star, kind),
                Err(Error::InternalInvariantViolation(_))
            ));
        }
    }
}
