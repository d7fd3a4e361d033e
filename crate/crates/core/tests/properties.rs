use proptest::prelude::*;

use trifree_core::coloring::color_consistent;
use trifree_core::hierarchy::hierarchy;
use trifree_core::io::{read_graph, write_rotation};
use trifree_core::matching::{reference, MatchGraph};
use trifree_core::verify::{check_dual, check_hierarchy, check_matching};
use trifree_core::*;

fn kind() -> impl Strategy<Value = GeneratorKind> {
    prop_oneof![
        Just(GeneratorKind::Apollonian),
        Just(GeneratorKind::Bipyramid),
        Just(GeneratorKind::Flip),
    ]
}

fn instance() -> impl Strategy<Value = (GeneratorKind, usize, u64)> {
    (kind(), 6usize..160, any::<u64>())
}

/// Small general graph for cross-checking the matchers.
struct Plain {
    n: usize,
    edges: Vec<[usize; 2]>,
    adj: Vec<Vec<(usize, EdgeId)>>,
}

impl Plain {
    fn new(n: usize, pairs: &[(usize, usize)]) -> Self {
        let mut edges: Vec<[usize; 2]> = pairs
            .iter()
            .filter(|(a, b)| a != b)
            .map(|&(a, b)| [a.min(b), a.max(b)])
            .collect();
        edges.sort_unstable();
        edges.dedup();
        let mut adj = vec![Vec::new(); n];
        for (e, &[a, b]) in edges.iter().enumerate() {
            adj[a].push((b, e));
            adj[b].push((a, e));
        }
        for l in &mut adj {
            l.sort_unstable();
        }
        Plain { n, edges, adj }
    }
}

impl MatchGraph for Plain {
    fn node_count(&self) -> usize {
        self.n
    }

    fn edge_count(&self) -> usize {
        self.edges.len()
    }

    fn endpoints(&self, e: EdgeId) -> [usize; 2] {
        self.edges[e]
    }

    fn adjacency(&self, v: usize) -> &[(usize, EdgeId)] {
        &self.adj[v]
    }
}

fn is_perfect<G: MatchGraph>(g: &G, m: &Matching) -> bool {
    let mut hit = vec![0; g.node_count()];
    for e in m.edges() {
        for v in g.endpoints(e) {
            hit[v] += 1;
        }
    }
    hit.iter().all(|&h| h == 1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn generated_graphs_are_maximal((k, n, seed) in instance()) {
        let g = generate(k, n, seed).unwrap();
        g.check_invariants().unwrap();
        prop_assert_eq!(g.m(), 3 * n - 6);
        prop_assert_eq!(g.n() as i64 - g.m() as i64 + g.face_count() as i64, 2);
        prop_assert!(g.is_maximal());
    }

    #[test]
    fn rotation_text_round_trips((k, n, seed) in instance()) {
        let g = generate(k, n, seed).unwrap();
        let back = read_graph(&write_rotation(&g)).unwrap();
        prop_assert_eq!(write_rotation(&back), write_rotation(&g));
        prop_assert_eq!(back.edges(), g.edges());
    }

    #[test]
    fn pipeline_coloring_is_triangle_free((k, n, seed) in instance()) {
        let g = generate(k, n, seed).unwrap();
        let c = color_graph(&g, MatcherKind::Fast).unwrap();
        prop_assert!(c.is_total());
        prop_assert_eq!(find_monochromatic_triangle(&g, &c).unwrap(), None);
    }

    #[test]
    fn matched_dual_edges_are_exactly_the_monochromatic_ones((k, n, seed) in instance()) {
        let g = generate(k, n, seed).unwrap();
        let d = build_dual(&g);
        prop_assert!(check_dual(&g, &d).is_empty());
        let m = perfect_matching(&d).unwrap();
        prop_assert!(check_matching(&d, &m).is_empty());
        let b = classify_bicolor(&g, &d, &m).unwrap();
        let c = color_consistent(&g, &b, 0, Color::One).unwrap();
        for e in 0..g.m() {
            let [u, v] = g.endpoints(e);
            prop_assert_eq!(c.get(u) != c.get(v), b.is_bicolor(e));
            prop_assert_eq!(m.contains(d.dual_edge(e)), !b.is_bicolor(e));
        }
        for f in 0..g.face_count() {
            let vs = g.face_vertices(f);
            prop_assert!(!(c.get(vs[0]) == c.get(vs[1]) && c.get(vs[1]) == c.get(vs[2])));
        }
    }

    #[test]
    fn forced_edges_are_kept((k, n, seed) in instance(), picks in proptest::collection::vec(any::<prop::sample::Index>(), 4)) {
        let g = generate(k, n, seed).unwrap();
        let d = build_dual(&g);
        let m = perfect_matching(&d).unwrap();
        for p in picks {
            let e = p.index(d.edge_count());
            let f = forced_edge_matching(&d, e, &m).unwrap();
            prop_assert!(f.contains(e));
            prop_assert!(check_matching(&d, &f).is_empty());
        }
    }

    #[test]
    fn hierarchy_respects_its_bounds((k, n, seed) in instance()) {
        let g = generate(k, n, seed).unwrap();
        let h = hierarchy(&g).unwrap();
        prop_assert!(check_hierarchy(&g, &h).is_empty());
        prop_assert!(h.len() + 3 <= n);
        prop_assert!(h.total_piece_size() <= 4 * n - 12);
        for t in 0..h.len() {
            let p = induced_piece(&g, &h, t).unwrap();
            prop_assert!(p.graph.is_maximal());
            prop_assert!(find_pivotal(&p.graph).unwrap().inner.is_empty());
        }
    }

    #[test]
    fn triangulating_a_thinned_graph_keeps_its_edges(n in 5usize..90, seed in any::<u64>(), drops in proptest::collection::vec(any::<prop::sample::Index>(), 0..60)) {
        let g = generate(GeneratorKind::Apollonian, n, seed).unwrap();
        let mut keep = vec![true; g.m()];
        for d in drops {
            keep[d.index(g.m())] = false;
        }
        let edges: Vec<[usize; 2]> = (0..g.m()).filter(|&e| keep[e]).map(|e| g.endpoints(e)).collect();
        let rotation: Vec<Vec<usize>> = (0..n)
            .map(|v| g.rotation(v).iter().filter(|&&d| keep[d >> 1]).map(|&d| g.head(d)).collect())
            .collect();
        let outer = g.face_vertices(g.outer_face());
        // Thinning may disconnect the graph or dissolve the outer face;
        // only connected results with the outer triangle intact are kept.
        let outer_kept = (0..3).all(|i| g.find_edge(outer[i], outer[(i + 1) % 3]).is_some_and(|e| keep[e]));
        prop_assume!(outer_kept);
        let Ok(thin) = EmbeddedGraph::from_rotation(n, edges.clone(), &rotation, Some(&outer)) else {
            return Err(TestCaseError::reject("disconnected"));
        };
        let t = make_maximal(&thin).unwrap();
        t.graph.check_invariants().unwrap();
        prop_assert!(t.graph.is_maximal());
        prop_assert_eq!(t.graph.m(), thin.m() + t.added.len());
        for (e, &[a, b]) in thin.edges().iter().enumerate() {
            prop_assert_eq!(t.graph.endpoints(t.edge_map[e]), [a, b]);
        }
        let c = color_graph(&thin, MatcherKind::Fast).unwrap();
        prop_assert_eq!(find_monochromatic_triangle(&thin, &c).unwrap(), None);
    }

    #[test]
    fn fast_matcher_agrees_with_reference(n in 1usize..16, pairs in proptest::collection::vec((0usize..16, 0usize..16), 0..50)) {
        let pairs: Vec<_> = pairs.into_iter().filter(|&(a, b)| a < n && b < n).collect();
        let g = Plain::new(n, &pairs);
        let fast = perfect_matching_with(&g, MatcherKind::Fast);
        let slow = reference::perfect_matching(&g);
        prop_assert_eq!(fast.is_ok(), slow.is_ok());
        if let (Ok(a), Ok(b)) = (fast, slow) {
            prop_assert!(is_perfect(&g, &a));
            prop_assert!(is_perfect(&g, &b));
        }
    }
}

#[test]
fn fast_matcher_handles_nested_blossoms_on_large_duals() {
    for seed in 0..3 {
        let g = generate(GeneratorKind::Apollonian, 20_000, seed).unwrap();
        let d = build_dual(&g);
        let m = perfect_matching(&d).unwrap();
        assert!(check_matching(&d, &m).is_empty());
    }
}

#[test]
fn brute_force_agrees_on_small_instances() {
    for k in GeneratorKind::ALL {
        for n in k.min_size()..=12 {
            for seed in 0..4 {
                let g = generate(k, n, seed).unwrap();
                let c = color_graph(&g, MatcherKind::Reference).unwrap();
                assert_eq!(find_monochromatic_triangle(&g, &c).unwrap(), None);
                let oracle = brute_force_2coloring(&g).unwrap().expect("a coloring exists");
                assert_eq!(find_monochromatic_triangle(&g, &oracle).unwrap(), None);
            }
        }
    }
}
