use super::blossom::{BlossomSearch, NONE};
use super::{MatchGraph, Matching};
use crate::error::{Error, Result};

/// Karp–Sipser greedy: match forced (residual degree one) nodes first,
/// otherwise pair the lowest unmatched node with its least-constrained
/// neighbor.
fn greedy<G: MatchGraph>(g: &G) -> Vec<usize> {
    let n = g.node_count();
    let mut mate = vec![NONE; n];
    let mut residual: Vec<usize> = (0..n).map(|v| g.adjacency(v).len()).collect();
    let mut forced: Vec<usize> = (0..n).filter(|&v| residual[v] == 1).collect();
    forced.reverse();
    let mut cursor = 0;

    loop {
        let v = if let Some(v) = forced.pop() {
            if mate[v] != NONE || residual[v] == 0 {
                continue;
            }
            v
        } else {
            while cursor < n && (mate[cursor] != NONE || residual[cursor] == 0) {
                cursor += 1;
            }
            if cursor == n {
                break;
            }
            cursor
        };
        let mut best = NONE;
        for &(w, _) in g.adjacency(v) {
            if w != v && mate[w] == NONE && (best == NONE || residual[w] < residual[best]) {
                best = w;
            }
        }
        if best == NONE {
            residual[v] = 0;
            continue;
        }
        mate[v] = best;
        mate[best] = v;
        for x in [v, best] {
            for &(y, _) in g.adjacency(x) {
                if mate[y] == NONE && residual[y] > 0 {
                    residual[y] -= 1;
                    if residual[y] == 1 {
                        forced.push(y);
                    }
                }
            }
        }
    }
    mate
}

pub(super) fn perfect_matching<G: MatchGraph>(g: &G) -> Result<Matching> {
    let mate = greedy(g);
    let mut search = BlossomSearch::new(g, mate);
    for v in 0..g.node_count() {
        if search.mate[v] != NONE {
            continue;
        }
        match search.find_augmenting(v) {
            Some(end) => search.augment(end),
            None => {
                return Err(Error::internal(format!(
                    "node {v} has no augmenting path; the graph has no perfect matching"
                )))
            }
        }
    }
    Matching::from_mates(g, &search.mate)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching::tests::{cube, pentagonal_prism};

    #[test]
    fn greedy_output_is_a_matching() {
        for g in [cube(), pentagonal_prism()] {
            let mate = greedy(&g);
            for (v, &w) in mate.iter().enumerate() {
                if w != NONE {
                    assert_eq!(mate[w], v);
                    assert!(g.adjacency(v).iter().any(|&(x, _)| x == w));
                }
            }
        }
    }
}
