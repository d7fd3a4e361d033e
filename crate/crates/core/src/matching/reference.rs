//! Textbook Edmonds blossom algorithm, O(V^3). Every search starts from
//! scratch over the whole graph; no greedy warm start.

use std::collections::VecDeque;

use super::{MatchGraph, Matching};
use crate::error::{Error, Result};

const NIL: usize = usize::MAX;

struct Edmonds<'g, G> {
    g: &'g G,
    mate: Vec<usize>,
    p: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    blossom: Vec<bool>,
}

impl<G: MatchGraph> Edmonds<'_, G> {
    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut on_path = vec![false; self.mate.len()];
        loop {
            a = self.base[a];
            on_path[a] = true;
            if self.mate[a] == NIL {
                break;
            }
            a = self.p[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if on_path[b] {
                return b;
            }
            b = self.p[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.blossom[self.base[v]] = true;
            self.blossom[self.base[self.mate[v]]] = true;
            self.p[v] = child;
            child = self.mate[v];
            v = self.p[self.mate[v]];
        }
    }

    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.mate.len();
        self.used.iter_mut().for_each(|u| *u = false);
        self.p.iter_mut().for_each(|p| *p = NIL);
        for i in 0..n {
            self.base[i] = i;
        }
        self.used[root] = true;
        let mut q = VecDeque::from([root]);
        while let Some(v) = q.pop_front() {
            for &(to, _) in self.g.adjacency(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NIL && self.p[self.mate[to]] != NIL) {
                    let cur = self.lca(v, to);
                    self.blossom.iter_mut().for_each(|b| *b = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                q.push_back(i);
                            }
                        }
                    }
                } else if self.p[to] == NIL {
                    self.p[to] = v;
                    if self.mate[to] == NIL {
                        return Some(to);
                    }
                    let m = self.mate[to];
                    self.used[m] = true;
                    q.push_back(m);
                }
            }
        }
        None
    }
}

/// Maximum-cardinality matching of an arbitrary graph.
pub fn maximum_matching<G: MatchGraph>(g: &G) -> Result<Matching> {
    let n = g.node_count();
    let mut ed = Edmonds {
        g,
        mate: vec![NIL; n],
        p: vec![NIL; n],
        base: (0..n).collect(),
        used: vec![false; n],
        blossom: vec![false; n],
    };
    for v in 0..n {
        if ed.mate[v] != NIL {
            continue;
        }
        if let Some(mut u) = ed.find_path(v) {
            while u != NIL {
                let pv = ed.p[u];
                let ppv = ed.mate[pv];
                ed.mate[u] = pv;
                ed.mate[pv] = u;
                u = ppv;
            }
        }
    }
    Matching::from_mates(g, &ed.mate)
}

pub fn perfect_matching<G: MatchGraph>(g: &G) -> Result<Matching> {
    let m = maximum_matching(g)?;
    if !m.is_perfect() {
        return Err(Error::internal(format!(
            "maximum matching covers {} of {} nodes",
            2 * m.len(),
            g.node_count()
        )));
    }
    Ok(m)
}
