use super::blossom::{BlossomSearch, NONE};
use super::{MatchGraph, Matching};
use crate::embedding::{DualGraph, EdgeId};
use crate::error::{Error, Result};

/// The dual with the forced edge `(u', v')` removed and a pendant node
/// attached to each of its endpoints. Every perfect matching of the gadget
/// uses both pendant edges, and dropping them in favor of `(u', v')` gives a
/// perfect matching of the dual that contains the forced edge.
#[derive(Clone, Debug)]
pub struct ForcedEdgeGadget {
    graph: DualGraph,
    /// Gadget edge id -> dual edge id; `None` for the two pendant edges.
    to_dual: Vec<Option<EdgeId>>,
    forced: EdgeId,
    u_prime: usize,
    v_prime: usize,
    u_plus: usize,
    v_plus: usize,
}

impl ForcedEdgeGadget {
    pub fn new(d: &DualGraph, forced: EdgeId) -> Result<Self> {
        let [u_prime, v_prime] = d.endpoints(forced);
        if u_prime == v_prime {
            return Err(Error::precondition("the forced dual edge is a loop"));
        }
        let n = d.node_count();
        let (u_plus, v_plus) = (n, n + 1);
        let mut edges = Vec::with_capacity(d.edge_count() + 1);
        let mut to_dual = Vec::with_capacity(d.edge_count() + 1);
        for (e, &ends) in d.edges().iter().enumerate() {
            if e != forced {
                edges.push(ends);
                to_dual.push(Some(e));
            }
        }
        edges.push([u_prime, u_plus]);
        to_dual.push(None);
        edges.push([v_prime, v_plus]);
        to_dual.push(None);
        Ok(ForcedEdgeGadget {
            graph: DualGraph::from_edges(n + 2, edges),
            to_dual,
            forced,
            u_prime,
            v_prime,
            u_plus,
            v_plus,
        })
    }

    /// The pendant nodes `(u+, v+)`.
    pub fn pendants(&self) -> (usize, usize) {
        (self.u_plus, self.v_plus)
    }

    /// Endpoints `(u', v')` of the forced dual edge.
    pub fn forced_endpoints(&self) -> (usize, usize) {
        (self.u_prime, self.v_prime)
    }

    fn pendant_edges(&self) -> (EdgeId, EdgeId) {
        let m = self.graph.edge_count();
        (m - 2, m - 1)
    }

    /// Carries a dual matching that avoids the forced edge into the gadget.
    pub fn lift(&self, m: &Matching) -> Result<Matching> {
        if m.contains(self.forced) {
            return Err(Error::precondition("the matching already contains the forced edge"));
        }
        let mut out = Matching::empty(self.graph.node_count(), self.graph.edge_count());
        for (ge, de) in self.to_dual.iter().enumerate() {
            if let Some(de) = de {
                if m.contains(*de) {
                    out.insert(&self.graph, ge)?;
                }
            }
        }
        Ok(out)
    }

    /// Maps a perfect gadget matching back to the dual, swapping the two
    /// pendant edges for the forced edge.
    pub fn project(&self, d: &DualGraph, m_plus: &Matching) -> Result<Matching> {
        let (pu, pv) = self.pendant_edges();
        if !m_plus.contains(pu) || !m_plus.contains(pv) {
            return Err(Error::internal("gadget matching misses a pendant edge"));
        }
        let mut out = Matching::empty(d.node_count(), d.edge_count());
        for ge in m_plus.edges() {
            if let Some(de) = self.to_dual[ge] {
                out.insert(d, de)?;
            }
        }
        out.insert(d, self.forced)?;
        Ok(out)
    }
}

impl MatchGraph for ForcedEdgeGadget {
    fn node_count(&self) -> usize {
        self.graph.node_count()
    }

    fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    fn endpoints(&self, e: EdgeId) -> [usize; 2] {
        self.graph.endpoints(e)
    }

    fn adjacency(&self, v: usize) -> &[(usize, EdgeId)] {
        self.graph.adjacency(v)
    }
}

/// One alternating search from `u+`. `m` must leave exactly the two
/// pendant nodes exposed; the result is perfect and uses both pendant edges.
pub fn augment_once(gadget: &ForcedEdgeGadget, m: &Matching) -> Result<Matching> {
    let exposed: Vec<usize> = m.exposed().collect();
    if exposed != [gadget.u_plus, gadget.v_plus] {
        return Err(Error::precondition(format!(
            "augment_once needs exactly the pendants exposed, found {exposed:?}"
        )));
    }
    let mut mate = vec![NONE; gadget.graph.node_count()];
    for v in 0..mate.len() {
        if let Some(w) = m.partner(v) {
            mate[v] = w;
        }
    }
    let mut search = BlossomSearch::new(gadget, mate);
    let end = search.find_augmenting(gadget.u_plus).ok_or_else(|| {
        Error::internal("no augmenting path between the pendants; the dual has no matching through the forced edge")
    })?;
    if end != gadget.v_plus {
        return Err(Error::internal("augmenting path ended away from the second pendant"));
    }
    search.augment(end);
    let out = Matching::from_mates(gadget, &search.mate)?;
    let (pu, pv) = gadget.pendant_edges();
    if !out.is_perfect() || !out.contains(pu) || !out.contains(pv) {
        return Err(Error::internal("augmentation left the gadget imperfect"));
    }
    Ok(out)
}
