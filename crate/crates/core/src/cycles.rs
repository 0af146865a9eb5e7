//! Bounded-length simple cycle enumeration.

use crate::graph::{EdgeId, Graph};

/// A simple cycle in canonical form: it starts at its smallest vertex and
/// runs in the direction whose second vertex is smaller than its last.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cycle {
    vertices: Vec<usize>,
    edges: Vec<EdgeId>,
}

impl Cycle {
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Edge ids of the cycle, sorted.
    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    fn from_path(g: &Graph, path: &[usize]) -> Cycle {
        let r = path.len();
        let mut edges: Vec<EdgeId> = (0..r)
            .map(|i| {
                g.edge_id(path[i], path[(i + 1) % r])
                    .expect("consecutive cycle vertices are adjacent")
            })
            .collect();
        edges.sort_unstable();
        Cycle {
            vertices: path.to_vec(),
            edges,
        }
    }
}

/// Every simple cycle of length `3..=max_len`, each exactly once, sorted by
/// length and then by vertex sequence.
///
/// Each cycle is found from its smallest vertex `s` by a depth-first search
/// restricted to vertices above `s`; requiring the second vertex to be below
/// the last one keeps only one of the two traversal directions.
pub fn enumerate_cycles(g: &Graph, max_len: usize) -> Vec<Cycle> {
    let mut out = Vec::new();
    if max_len < 3 {
        return out;
    }
    let mut on_path = vec![false; g.n()];
    let mut path = Vec::with_capacity(max_len);
    for root in 0..g.n() {
        path.push(root);
        on_path[root] = true;
        extend(g, root, max_len, &mut path, &mut on_path, &mut out);
        on_path[root] = false;
        path.pop();
    }
    out.sort_unstable_by(|a, b| {
        a.len()
            .cmp(&b.len())
            .then_with(|| a.vertices.cmp(&b.vertices))
    });
    out
}

fn extend(
    g: &Graph,
    root: usize,
    max_len: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    out: &mut Vec<Cycle>,
) {
    let last = *path.last().unwrap();
    for &w in g.neighbors(last) {
        if w == root {
            if path.len() >= 3 && path[1] < last {
                out.push(Cycle::from_path(g, path));
            }
        } else if w > root && !on_path[w] && path.len() < max_len {
            path.push(w);
            on_path[w] = true;
            extend(g, root, max_len, path, on_path, out);
            on_path[w] = false;
            path.pop();
        }
    }
}
