//! Immutable simple undirected graphs with a canonical edge numbering.
//!
//! Vertices are dense indices `0..n`. Edges are stored as pairs `(u, v)` with
//! `u < v`, sorted lexicographically, so two graphs on the same vertex set are
//! equal exactly when their edge lists are equal. Every set-valued operation in
//! the crate refers to edges through their position in this list ([`EdgeId`]).

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Position of an edge in the canonical edge list of its graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EdgeId(pub usize);

impl EdgeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    incident: Vec<Vec<EdgeId>>,
}

impl Graph {
    /// Builds a graph from an arbitrary list of vertex pairs.
    ///
    /// Pairs are normalized so that the smaller endpoint comes first, then
    /// sorted and deduplicated. Self-loops and endpoints `>= n` are rejected.
    pub fn new<I>(n: usize, pairs: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut edges = Vec::new();
        for (a, b) in pairs {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            edges.push((a.min(b), a.max(b)));
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(Graph::from_canonical(n, edges))
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Graph {
        Graph::from_canonical(n, Vec::new())
    }

    pub(crate) fn from_canonical(n: usize, edges: Vec<(usize, usize)>) -> Graph {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        let mut adj = vec![Vec::new(); n];
        let mut incident = vec![Vec::new(); n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            adj[u].push(v);
            adj[v].push(u);
            incident[u].push(EdgeId(i));
            incident[v].push(EdgeId(i));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph {
            n,
            edges,
            adj,
            incident,
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_ids(&self) -> impl ExactSizeIterator<Item = EdgeId> {
        (0..self.edges.len()).map(EdgeId)
    }

    #[inline]
    pub fn endpoints(&self, e: EdgeId) -> (usize, usize) {
        self.edges[e.0]
    }

    pub fn check_edge(&self, e: EdgeId) -> Result<()> {
        if e.0 < self.edges.len() {
            Ok(())
        } else {
            Err(Error::InvalidEdge(e))
        }
    }

    /// Looks up the id of edge `{u, v}`, in either orientation.
    pub fn edge_id(&self, u: usize, v: usize) -> Option<EdgeId> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok().map(EdgeId)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_id(u, v).is_some()
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Edges incident to `v`, in increasing id order.
    pub fn incident_edges(&self, v: usize) -> &[EdgeId] {
        &self.incident[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for root in 0..self.n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut comp = vec![root];
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// A graph with no vertices counts as connected.
    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.components().len() == 1
    }

    /// Subgraph induced by `vertices` (must be sorted and distinct), relabelled
    /// to `0..vertices.len()`, together with the parent id of each of its edges.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> (Graph, Vec<EdgeId>) {
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut pairs = Vec::new();
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if local[u] != usize::MAX && local[v] != usize::MAX {
                pairs.push(((local[u], local[v]), EdgeId(i)));
            }
        }
        // Relabelling is monotone, so the parent order is already canonical.
        let edges = pairs.iter().map(|&(p, _)| p).collect();
        let parents = pairs.into_iter().map(|(_, e)| e).collect();
        (Graph::from_canonical(vertices.len(), edges), parents)
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        DegreeProfile::of(self)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.m())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Regularity {
    Regular,
    Biregular,
    Neither,
}

impl fmt::Display for Regularity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Regularity::Regular => "regular",
            Regularity::Biregular => "biregular",
            Regularity::Neither => "neither",
        })
    }
}

/// A bipartition `(X, Y)` in which all of `X` has degree `x_degree` and all of
/// `Y` has degree `y_degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Biregular {
    pub x_degree: usize,
    pub y_degree: usize,
    pub x: Vec<usize>,
    pub y: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub min: usize,
    pub max: usize,
    pub is_regular: bool,
    pub biregular: Option<Biregular>,
}

impl DegreeProfile {
    fn of(g: &Graph) -> DegreeProfile {
        let degrees: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
        let min = g.min_degree();
        let max = g.max_degree();
        DegreeProfile {
            is_regular: min == max,
            biregular: biregular_classes(g, &degrees),
            degrees,
            min,
            max,
        }
    }

    /// Regularity takes precedence: a regular bipartite graph reports `Regular`.
    pub fn regularity(&self) -> Regularity {
        if self.is_regular {
            Regularity::Regular
        } else if self.biregular.is_some() {
            Regularity::Biregular
        } else {
            Regularity::Neither
        }
    }
}

// Two-colors each component by BFS layers from its smallest vertex (which lands
// in X), then flips whole components as needed so one (X, Y) degree pair fits
// every component.
fn biregular_classes(g: &Graph, degrees: &[usize]) -> Option<Biregular> {
    if g.n() == 0 {
        return None;
    }
    let mut side = vec![u8::MAX; g.n()];
    let mut comps: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    for root in 0..g.n() {
        if side[root] != u8::MAX {
            continue;
        }
        side[root] = 0;
        let (mut xs, mut ys) = (vec![root], Vec::new());
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[v];
                    if side[w] == 0 {
                        xs.push(w);
                    } else {
                        ys.push(w);
                    }
                    queue.push_back(w);
                } else if side[w] == side[v] {
                    return None;
                }
            }
        }
        comps.push((xs, ys));
    }

    let uniform = |vs: &[usize]| -> Option<Option<usize>> {
        match vs.first() {
            None => Some(None),
            Some(&v) => vs
                .iter()
                .all(|&w| degrees[w] == degrees[v])
                .then_some(Some(degrees[v])),
        }
    };

    let mut per_comp = Vec::with_capacity(comps.len());
    for (xs, ys) in &comps {
        per_comp.push((uniform(xs)?, uniform(ys)?));
    }

    // The first component with edges fixes the global pair; an edgeless graph
    // is trivially biregular with every vertex in X.
    let target = per_comp
        .iter()
        .find_map(|&(dx, dy)| Some((dx?, dy?)))
        .unwrap_or((0, 0));

    let (mut x, mut y) = (Vec::new(), Vec::new());
    for ((xs, ys), &(dx, dy)) in comps.iter().zip(&per_comp) {
        let fits = |a: Option<usize>, b: Option<usize>| {
            a.is_none_or(|d| d == target.0) && b.is_none_or(|d| d == target.1)
        };
        if fits(dx, dy) {
            x.extend_from_slice(xs);
            y.extend_from_slice(ys);
        } else if fits(dy, dx) {
            x.extend_from_slice(ys);
            y.extend_from_slice(xs);
        } else {
            return None;
        }
    }
    x.sort_unstable();
    y.sort_unstable();
    Some(Biregular {
        x_degree: target.0,
        y_degree: target.1,
        x,
        y,
    })
}
