use dimatch::cycles::enumerate_cycles;
use dimatch::generators::{complete, cycle, petersen};
use dimatch::io::{parse_graph, serialize_graph, Format};
use dimatch::Graph;
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::new(n, edges).unwrap()
        })
    })
}

/// Counts simple cycles of length 3..=max_len by extending vertex sequences
/// that start at their minimum vertex, then halving for direction.
fn brute_cycle_count(g: &Graph, max_len: usize) -> usize {
    fn walk(g: &Graph, seq: &mut Vec<usize>, max_len: usize, count: &mut usize) {
        let last = *seq.last().unwrap();
        if seq.len() >= 3 && g.has_edge(last, seq[0]) {
            *count += 1;
        }
        if seq.len() == max_len {
            return;
        }
        for w in 0..g.n() {
            if w > seq[0] && !seq.contains(&w) && g.has_edge(last, w) {
                seq.push(w);
                walk(g, seq, max_len, count);
                seq.pop();
            }
        }
    }
    let mut count = 0;
    for s in 0..g.n() {
        walk(g, &mut vec![s], max_len, &mut count);
    }
    count / 2
}

/// Biregular iff some 2-coloring is proper with one degree per color class.
fn brute_biregular(g: &Graph) -> Option<(usize, usize)> {
    let n = g.n();
    for mask in 0u32..1 << n {
        let side = |v: usize| mask >> v & 1;
        if g.edges().iter().any(|&(u, v)| side(u) == side(v)) {
            continue;
        }
        let degs = |s: u32| -> Option<Option<usize>> {
            let ds: Vec<usize> = (0..n).filter(|&v| side(v) == s).map(|v| g.degree(v)).collect();
            match ds.first() {
                None => Some(None),
                Some(&d) => ds.iter().all(|&x| x == d).then_some(Some(d)),
            }
        };
        if let (Some(a), Some(b)) = (degs(0), degs(1)) {
            return Some((a.unwrap_or(0), b.unwrap_or(a.unwrap_or(0))));
        }
    }
    None
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut c = vec![vec![0; n]; n];
    for i in 0..n {
        for k in 0..n {
            for j in 0..n {
                c[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    c
}

#[test]
fn petersen_five_cycles_match_trace_count() {
    let g = petersen();
    let cycles = enumerate_cycles(&g, 5);
    assert_eq!(cycles.len(), 12);
    assert!(cycles.iter().all(|c| c.len() == 5));

    // Girth 5: every closed 5-walk traverses a 5-cycle, and each 5-cycle gives
    // 10 closed walks (5 starts, 2 directions).
    let a: Vec<Vec<i64>> = (0..g.n())
        .map(|u| (0..g.n()).map(|v| i64::from(g.has_edge(u, v))).collect())
        .collect();
    let a5 = (0..4).fold(a.clone(), |acc, _| mat_mul(&acc, &a));
    let trace: i64 = (0..g.n()).map(|i| a5[i][i]).sum();
    assert_eq!(trace, 120);
    assert_eq!(trace as usize / 10, cycles.len());
}

#[test]
fn petersen_cycle_spectrum() {
    let g = petersen();
    let cycles = enumerate_cycles(&g, 9);
    let count = |r| cycles.iter().filter(|c| c.len() == r).count();
    assert_eq!(
        (count(5), count(6), count(7), count(8), count(9)),
        (12, 10, 0, 15, 20)
    );
    assert_eq!(cycles.len(), brute_cycle_count(&g, 9));
}

#[test]
fn complete_graph_cycle_counts() {
    // K_n has C(n,r)·(r-1)!/2 cycles of length r.
    let g = complete(6).unwrap();
    let cycles = enumerate_cycles(&g, 6);
    let count = |r| cycles.iter().filter(|c| c.len() == r).count();
    assert_eq!((count(3), count(4), count(5), count(6)), (20, 45, 72, 60));
}

#[test]
fn cycles_are_canonical_and_closed() {
    let g = complete(5).unwrap();
    for c in enumerate_cycles(&g, 5) {
        let vs = c.vertices();
        assert_eq!(vs[0], *vs.iter().min().unwrap());
        assert!(vs[1] < vs[vs.len() - 1]);
        for i in 0..vs.len() {
            assert!(g.has_edge(vs[i], vs[(i + 1) % vs.len()]));
        }
    }
}

#[test]
fn long_cycle_only() {
    assert_eq!(enumerate_cycles(&cycle(8).unwrap(), 8).len(), 1);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn degree_sum_is_twice_edge_count(g in arb_graph(10)) {
        let total: usize = (0..g.n()).map(|v| g.degree(v)).sum();
        prop_assert_eq!(total, 2 * g.m());
    }

    #[test]
    fn cycle_count_matches_brute_force(g in arb_graph(8), max_len in 3usize..=8) {
        prop_assert_eq!(enumerate_cycles(&g, max_len).len(), brute_cycle_count(&g, max_len));
    }

    #[test]
    fn biregular_detection_matches_brute_force(g in arb_graph(10)) {
        let fast = g.degree_profile().biregular.map(|b| (b.x_degree, b.y_degree));
        let slow = brute_biregular(&g);
        match (fast, slow) {
            (None, None) => {}
            (Some((x, y)), Some((a, b))) => {
                prop_assert!((x, y) == (a, b) || (x, y) == (b, a));
            }
            other => prop_assert!(false, "disagreement {:?} on {:?}", other, g.edges()),
        }
    }

    #[test]
    fn biregular_sides_are_consistent(g in arb_graph(10)) {
        if let Some(b) = g.degree_profile().biregular {
            prop_assert_eq!(b.x.len() + b.y.len(), g.n());
            prop_assert!(b.x.iter().all(|&v| g.degree(v) == b.x_degree));
            prop_assert!(b.y.iter().all(|&v| g.degree(v) == b.y_degree));
            for &(u, v) in g.edges() {
                prop_assert!(b.x.contains(&u) != b.x.contains(&v));
            }
        }
    }

    #[test]
    fn serialization_round_trips(g in arb_graph(12)) {
        for format in [Format::EdgeList, Format::Dimacs] {
            let text = serialize_graph(&g, format);
            let back = parse_graph(&text, format).unwrap();
            prop_assert_eq!(&back, &g);
            prop_assert_eq!(serialize_graph(&back, format), text);
        }
    }

    #[test]
    fn parsing_canonicalizes_shuffled_input(g in arb_graph(9), seed in any::<u64>()) {
        // reverse some pairs and rotate the line order
        let mut lines: Vec<String> = g
            .edges()
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| if (seed >> (i % 64)) & 1 == 1 { format!("{v} {u}") } else { format!("{u} {v}") })
            .collect();
        if !lines.is_empty() {
            let k = (seed as usize) % lines.len();
            lines.rotate_left(k);
        }
        let text = format!("{} {}\n{}\n", g.n(), g.m(), lines.join("\n"));
        let parsed = parse_graph(&text, Format::EdgeList).unwrap();
        prop_assert_eq!(serialize_graph(&parsed, Format::EdgeList), serialize_graph(&g, Format::EdgeList));
    }
}
