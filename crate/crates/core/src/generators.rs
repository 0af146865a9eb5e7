//! Graph families: Kneser graphs, bipartite disjointness graphs and a few
//! standard graphs, plus the closed-form DIM partitions of the two subset
//! families.
//!
//! Subset-labelled vertices are numbered in colexicographic order of their
//! labels (compare largest elements first). In a bipartite disjointness graph
//! the `m`-subset part comes before the `n`-subset part.

use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::DimPartition;

/// A sorted subset of the ground set `{1..N}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubsetLabel(Vec<u32>);

impl SubsetLabel {
    pub fn new(mut elements: Vec<u32>) -> SubsetLabel {
        elements.sort_unstable();
        elements.dedup();
        SubsetLabel(elements)
    }

    pub fn elements(&self) -> &[u32] {
        &self.0
    }

    pub fn is_disjoint(&self, other: &SubsetLabel) -> bool {
        self.0.iter().all(|x| other.0.binary_search(x).is_err())
    }

    pub fn contains(&self, x: u32) -> bool {
        self.0.binary_search(&x).is_ok()
    }
}

impl fmt::Display for SubsetLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.0.iter().join(","))
    }
}

/// A graph whose vertices carry subset labels over `{1..ground_size}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labels: Vec<SubsetLabel>,
    pub ground_size: usize,
}

fn colex_subsets(ground: usize, k: usize) -> Vec<SubsetLabel> {
    let mut subsets: Vec<Vec<u32>> = (1..=ground as u32).combinations(k).collect();
    subsets.sort_unstable_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
    subsets.into_iter().map(SubsetLabel).collect()
}

fn disjointness_graph(labels: Vec<SubsetLabel>, ground_size: usize, parts: Option<usize>) -> LabeledGraph {
    let n = labels.len();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            // in the bipartite case only cross-part pairs are candidates
            if let Some(split) = parts {
                if (u < split) == (v < split) {
                    continue;
                }
            }
            if labels[u].is_disjoint(&labels[v]) {
                edges.push((u, v));
            }
        }
    }
    LabeledGraph {
        graph: Graph::from_canonical(n, edges),
        labels,
        ground_size,
    }
}

/// The Kneser graph `KG(n, k)`: `k`-subsets of `{1..n}`, adjacent when
/// disjoint. `n < 2k` gives an edgeless graph.
pub fn kneser(n: usize, k: usize) -> Result<LabeledGraph> {
    if k == 0 || n == 0 {
        return Err(Error::InvalidParameter(format!(
            "kneser graph needs n, k >= 1 (got n={n}, k={k})"
        )));
    }
    Ok(disjointness_graph(colex_subsets(n, k), n, None))
}

/// Bipartite disjointness graph with parts the `m`-subsets and the
/// `n`-subsets of `{1..m+n+1}`, adjacent across parts when disjoint.
///
/// The ground set has `m + n + 1` elements so that every disjoint pair leaves
/// exactly one element uncovered. Each `m`-subset has degree `n + 1` and each
/// `n`-subset has degree `m + 1`.
pub fn bipartite_kneser(m: usize, n: usize) -> Result<LabeledGraph> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidParameter(format!(
            "bipartite kneser graph needs m, n >= 1 (got m={m}, n={n})"
        )));
    }
    let ground = m + n + 1;
    let mut labels = colex_subsets(ground, m);
    let split = labels.len();
    labels.extend(colex_subsets(ground, n));
    Ok(disjointness_graph(labels, ground, Some(split)))
}

// Colors each edge XY by the one element outside X ∪ Y.
fn leftover_coloring(lg: &LabeledGraph) -> Result<DimPartition> {
    let colors = lg
        .graph
        .edges()
        .iter()
        .map(|&(u, v)| {
            let (x, y) = (&lg.labels[u], &lg.labels[v]);
            let missing: Vec<u32> = (1..=lg.ground_size as u32)
                .filter(|&i| !x.contains(i) && !y.contains(i))
                .collect();
            debug_assert_eq!(missing.len(), 1);
            missing[0]
        })
        .collect();
    DimPartition::new(lg.ground_size, colors)
}

/// `KG(2r-1, r-1)` with each edge `XY` colored by the element of
/// `{1..2r-1}` missing from `X ∪ Y`. The `2r-1` color classes are DIMs.
pub fn kneser_dim_partition(r: usize) -> Result<(LabeledGraph, DimPartition)> {
    if r < 2 {
        return Err(Error::InvalidParameter(format!("need r >= 2, got {r}")));
    }
    let lg = kneser(2 * r - 1, r - 1)?;
    let p = leftover_coloring(&lg)?;
    Ok((lg, p))
}

/// The bipartite disjointness graph of `(r-1)`-subsets and `(s-1)`-subsets of
/// `{1..r+s-1}`, with each edge colored by the element its endpoints miss.
/// The `r+s-1` color classes are DIMs.
pub fn bg_dim_partition(r: usize, s: usize) -> Result<(LabeledGraph, DimPartition)> {
    if r < 2 || s < 2 {
        return Err(Error::InvalidParameter(format!(
            "need r, s >= 2, got r={r}, s={s}"
        )));
    }
    let lg = bipartite_kneser(r - 1, s - 1)?;
    let p = leftover_coloring(&lg)?;
    Ok((lg, p))
}

/// The cycle `0-1-...-(n-1)-0`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParameter("path needs n >= 1".into()));
    }
    Graph::new(n, (1..n).map(|i| (i - 1, i)))
}

pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParameter("complete graph needs n >= 1".into()));
    }
    Graph::new(n, (0..n).tuple_combinations())
}

/// `K(a, b)` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a < 1 || b < 1 {
        return Err(Error::InvalidParameter(
            "complete bipartite graph needs both parts nonempty".into(),
        ));
    }
    Graph::new(a + b, (0..a).cartesian_product(a..a + b))
}

/// `K(1, k)` with center 0.
pub fn star(k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(Error::InvalidParameter("star needs k >= 1".into()));
    }
    Graph::new(k + 1, (1..=k).map(|i| (0, i)))
}

/// The Petersen graph, numbered as `KG(5, 2)`.
pub fn petersen() -> Graph {
    kneser(5, 2).expect("valid parameters").graph
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn colex_order() {
        let labels = colex_subsets(4, 2);
        let got: Vec<&[u32]> = labels.iter().map(|l| l.elements()).collect();
        assert_eq!(
            got,
            vec![&[1, 2][..], &[1, 3], &[2, 3], &[1, 4], &[2, 4], &[3, 4]]
        );
    }

    #[test]
    fn petersen_shape() {
        let lg = kneser(5, 2).unwrap();
        assert_eq!((lg.graph.n(), lg.graph.m()), (10, 15));
        let p = lg.graph.degree_profile();
        assert!(p.is_regular && p.max == 3);
    }

    #[test]
    fn kneser_3_1_is_triangle() {
        assert_eq!(kneser(3, 1).unwrap().graph, complete(3).unwrap());
    }

    #[test]
    fn kneser_7_3() {
        let g = kneser(7, 3).unwrap().graph;
        assert_eq!((g.n(), g.m()), (35, 70));
        assert!(g.degree_profile().is_regular);
        assert_eq!(g.max_degree(), 4);
    }

    #[test]
    fn small_ground_set_is_edgeless() {
        let g = kneser(3, 2).unwrap().graph;
        assert_eq!((g.n(), g.m()), (3, 0));
        assert!(kneser(3, 0).is_err());
    }

    #[test]
    fn bipartite_kneser_shapes() {
        let g = bipartite_kneser(1, 1).unwrap().graph;
        assert_eq!((g.n(), g.m()), (6, 6));
        assert!(g.degree_profile().is_regular && g.is_connected());

        let g = bipartite_kneser(2, 1).unwrap().graph;
        assert_eq!((g.n(), g.m()), (10, 12));
        let b = g.degree_profile().biregular.unwrap();
        assert_eq!((b.x_degree, b.y_degree), (2, 3));
        assert_eq!(b.x, (0..6).collect::<Vec<_>>());

        let mirror = bipartite_kneser(1, 2).unwrap().graph;
        let b = mirror.degree_profile().biregular.unwrap();
        assert_eq!((b.x_degree, b.y_degree), (3, 2));
        assert_eq!(mirror.m(), 12);
    }

    #[test]
    fn closed_form_partitions() {
        let (lg, p) = kneser_dim_partition(2).unwrap();
        assert_eq!(lg.graph, complete(3).unwrap());
        assert_eq!(p.num_classes(), 3);

        let (_, p) = kneser_dim_partition(3).unwrap();
        assert!(p.classes().iter().all(|c| c.len() == 3));

        let (_, p) = kneser_dim_partition(4).unwrap();
        assert_eq!(p.num_classes(), 7);
        assert!(p.classes().iter().all(|c| c.len() == 10));

        let (_, p) = bg_dim_partition(2, 2).unwrap();
        assert_eq!(p.num_classes(), 3);
        assert!(p.classes().iter().all(|c| c.len() == 2));

        let (_, p) = bg_dim_partition(3, 2).unwrap();
        assert_eq!(p.num_classes(), 4);
        assert!(p.classes().iter().all(|c| c.len() == 3));

        assert!(kneser_dim_partition(1).is_err());
        assert!(bg_dim_partition(1, 3).is_err());
    }

    #[test]
    fn standard_graph_parameters() {
        assert!(cycle(2).is_err());
        assert!(complete(0).is_err());
        assert!(star(0).is_err());
        assert_eq!(complete(3).unwrap(), cycle(3).unwrap());
        assert_eq!(star(3).unwrap().m(), 3);
        assert_eq!(complete_bipartite(3, 3).unwrap().m(), 9);
    }
}
