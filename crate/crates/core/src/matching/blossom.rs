use std::collections::VecDeque;

use super::MatchGraph;

pub(crate) const NONE: usize = usize::MAX;

/// Edmonds alternating-tree search from a single exposed root.
///
/// Only nodes reached by the current tree are reset between searches, so a
/// search that finds a short augmenting path costs time proportional to
/// the explored region rather than to the whole graph.
pub(crate) struct BlossomSearch<'g, G> {
    g: &'g G,
    pub(crate) mate: Vec<usize>,
    parent: Vec<usize>,
    /// Union-find over blossoms; `label` of a root is the blossom base.
    uf: Vec<usize>,
    label: Vec<usize>,
    even: Vec<bool>,
    in_touched: Vec<bool>,
    touched: Vec<usize>,
    lca_mark: Vec<u32>,
    lca_stamp: u32,
    queue: VecDeque<usize>,
    crossed: Vec<usize>,
}

impl<'g, G: MatchGraph> BlossomSearch<'g, G> {
    pub(crate) fn new(g: &'g G, mate: Vec<usize>) -> Self {
        let n = g.node_count();
        debug_assert_eq!(mate.len(), n);
        BlossomSearch {
            g,
            mate,
            parent: vec![NONE; n],
            uf: (0..n).collect(),
            label: (0..n).collect(),
            even: vec![false; n],
            in_touched: vec![false; n],
            touched: Vec::new(),
            lca_mark: vec![0; n],
            lca_stamp: 0,
            queue: VecDeque::new(),
            crossed: Vec::new(),
        }
    }

    #[inline]
    fn touch(&mut self, v: usize) {
        if !self.in_touched[v] {
            self.in_touched[v] = true;
            self.touched.push(v);
        }
    }

    fn reset(&mut self) {
        for &v in &self.touched {
            self.parent[v] = NONE;
            self.uf[v] = v;
            self.label[v] = v;
            self.even[v] = false;
            self.in_touched[v] = false;
        }
        self.touched.clear();
        self.queue.clear();
    }

    fn next_stamp(stamp: &mut u32, marks: &mut [u32]) -> u32 {
        if *stamp == u32::MAX {
            marks.fill(0);
            *stamp = 0;
        }
        *stamp += 1;
        *stamp
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.uf[v] != v {
            self.uf[v] = self.uf[self.uf[v]];
            v = self.uf[v];
        }
        v
    }

    #[inline]
    fn base(&mut self, v: usize) -> usize {
        let r = self.find(v);
        self.label[r]
    }

    fn merge(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.uf[ra] = rb;
        }
    }

    fn lca(&mut self, mut a: usize, mut b: usize) -> usize {
        let s = Self::next_stamp(&mut self.lca_stamp, &mut self.lca_mark);
        loop {
            a = self.base(a);
            self.lca_mark[a] = s;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base(b);
            if self.lca_mark[b] == s {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    /// Sets parents along the tree path from `v` down to base `b`, records
    /// the crossed nodes for merging, and queues the odd ones.
    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base(v) != b {
            let mv = self.mate[v];
            self.crossed.push(v);
            self.crossed.push(mv);
            if !self.even[mv] {
                self.even[mv] = true;
                self.queue.push_back(mv);
            }
            self.parent[v] = child;
            child = mv;
            v = self.parent[mv];
        }
    }

    /// Grows an alternating tree from the exposed node `root` and returns
    /// the exposed node at the far end of an augmenting path, if any.
    pub(crate) fn find_augmenting(&mut self, root: usize) -> Option<usize> {
        self.reset();
        debug_assert_eq!(self.mate[root], NONE);
        self.touch(root);
        self.even[root] = true;
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for &(to, _) in self.g.adjacency(v) {
                if self.base(v) == self.base(to) || self.mate[v] == to {
                    continue;
                }
                let to_is_even =
                    to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE);
                if to_is_even {
                    let cur_base = self.lca(v, to);
                    self.mark_path(v, cur_base, to);
                    self.mark_path(to, cur_base, v);
                    while let Some(x) = self.crossed.pop() {
                        self.merge(x, cur_base);
                    }
                    let r = self.find(cur_base);
                    self.label[r] = cur_base;
                } else if self.parent[to] == NONE {
                    self.touch(to);
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let m = self.mate[to];
                    self.touch(m);
                    self.even[m] = true;
                    self.queue.push_back(m);
                }
            }
        }
        None
    }

    /// Flips the augmenting path ending at `end` found by the last search.
    pub(crate) fn augment(&mut self, end: usize) {
        let mut v = end;
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }
}
