//! Partitions of the edge set into dominating induced matchings, and the
//! vertex list assignment they induce.
//!
//! In a connected graph whose edges split into DIMs, every DIM meets
//! `E(u) ∪ E(v)` in exactly one edge for each edge `uv`, so the number of
//! classes is `d(u) + d(v) - 1` for every edge and the graph is regular or
//! biregular. [`find_dim_partition`] fixes the class count from the first edge
//! of each component and searches colorings of the edges with that many
//! colors.
//!
//! Given a partition with colors `S = {1..k}`, the list of a vertex is
//! `S` minus the colors on its incident edges ([`list_assignment`]). For an
//! `r`-regular graph the lists are the `(r-1)`-subsets of `S`; adjacent
//! vertices get disjoint lists, every subset is hit, and all subsets are hit
//! equally often ([`verify_list_properties`]).

use std::collections::BTreeMap;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, Regularity};
use crate::solver::classify_dim;

/// A coloring of every edge with colors `1..=num_classes`, each color class
/// nonempty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DimPartition {
    num_classes: usize,
    colors: Vec<u32>,
}

impl DimPartition {
    /// Checks colors are in range and that every class is used. Whether each
    /// class is a DIM is left to [`verify_dim_partition`].
    pub fn new(num_classes: usize, colors: Vec<u32>) -> Result<DimPartition> {
        let mut used = vec![false; num_classes];
        for (i, &c) in colors.iter().enumerate() {
            if c == 0 || c as usize > num_classes {
                return Err(Error::InvalidPartition(format!(
                    "edge {i} has color {c}, expected 1..={num_classes}"
                )));
            }
            used[c as usize - 1] = true;
        }
        if let Some(c) = used.iter().position(|&u| !u) {
            return Err(Error::InvalidPartition(format!("class {} is empty", c + 1)));
        }
        Ok(DimPartition {
            num_classes,
            colors,
        })
    }

    pub fn num_classes(&self) -> usize {
        self.num_classes
    }

    pub fn color_of(&self, e: EdgeId) -> u32 {
        self.colors[e.0]
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    /// Edge ids of color `c` (1-based), sorted.
    pub fn class(&self, c: u32) -> Vec<EdgeId> {
        self.colors
            .iter()
            .enumerate()
            .filter(|&(_, &x)| x == c)
            .map(|(i, _)| EdgeId(i))
            .collect()
    }

    /// All classes, indexed by `color - 1`.
    pub fn classes(&self) -> Vec<Vec<EdgeId>> {
        let mut out = vec![Vec::new(); self.num_classes];
        for (i, &c) in self.colors.iter().enumerate() {
            out[c as usize - 1].push(EdgeId(i));
        }
        out
    }

    fn check_total(&self, g: &Graph) -> Result<()> {
        if self.colors.len() != g.m() {
            return Err(Error::InvalidPartition(format!(
                "partition colors {} edges, graph has {}",
                self.colors.len(),
                g.m()
            )));
        }
        Ok(())
    }
}

/// A partition of `E(G)` into DIMs, or `None` when none exists.
pub fn find_dim_partition(g: &Graph) -> Option<DimPartition> {
    find_dim_partition_with_budget(g, None).expect("unbounded search")
}

/// [`find_dim_partition`] with an optional cap on search nodes.
pub fn find_dim_partition_with_budget(
    g: &Graph,
    budget: Option<u64>,
) -> Result<Option<DimPartition>> {
    let mut colors = vec![0u32; g.m()];
    let mut target: Option<usize> = None;
    let mut nodes = 0u64;
    for comp in g.components() {
        let (sub, parents) = g.induced_subgraph(&comp);
        if sub.m() == 0 {
            continue;
        }
        if sub.degree_profile().regularity() == Regularity::Neither {
            return Ok(None);
        }
        let (u, v) = sub.endpoints(EdgeId(0));
        let k = sub.degree(u) + sub.degree(v) - 1;
        if target.is_some_and(|t| t != k) {
            return Ok(None);
        }
        target = Some(k);
        let Some(local) = color_component(&sub, k, budget, &mut nodes)? else {
            return Ok(None);
        };
        for (e, c) in parents.iter().zip(local) {
            colors[e.0] = c;
        }
    }
    let partition = DimPartition::new(target.unwrap_or(0), colors)?;
    debug_assert!(classes_are_dims(g, &partition));
    Ok(Some(partition))
}

fn classes_are_dims(g: &Graph, p: &DimPartition) -> bool {
    p.classes()
        .iter()
        .all(|class| classify_dim(g, class).is_ok_and(|w| w.is_valid()))
}

/// Edges that may not share a color with `e`: those sharing an endpoint with
/// it or joined to it by an edge. Equivalently, edges with an endpoint in the
/// closed neighborhood of `e`'s endpoints.
fn conflicts(g: &Graph) -> Vec<Vec<usize>> {
    g.edge_ids()
        .map(|e| {
            let (u, v) = g.endpoints(e);
            let mut out: Vec<usize> = [u, v]
                .into_iter()
                .chain(g.neighbors(u).iter().copied())
                .chain(g.neighbors(v).iter().copied())
                .flat_map(|x| g.incident_edges(x).iter().map(|f| f.0))
                .filter(|&f| f != e.0)
                .collect();
            out.sort_unstable();
            out.dedup();
            out
        })
        .collect()
}

// Colors edges in canonical order with forward checking. A fresh color is only
// opened after all lower colors are in use, which removes color permutations.
fn color_component(
    g: &Graph,
    k: usize,
    budget: Option<u64>,
    nodes: &mut u64,
) -> Result<Option<Vec<u32>>> {
    struct State<'a> {
        g: &'a Graph,
        conflicts: Vec<Vec<usize>>,
        // blocked[e * k + c] counts colored conflicting edges holding color c
        blocked: Vec<u32>,
        free: Vec<usize>,
        colors: Vec<u32>,
        k: usize,
        budget: Option<u64>,
        nodes: &'a mut u64,
    }

    impl State<'_> {
        fn assign(&mut self, e: usize, c: usize) -> bool {
            self.colors[e] = c as u32 + 1;
            let mut ok = true;
            for i in 0..self.conflicts[e].len() {
                let f = self.conflicts[e][i];
                let slot = f * self.k + c;
                self.blocked[slot] += 1;
                if self.blocked[slot] == 1 {
                    self.free[f] -= 1;
                    if self.free[f] == 0 && self.colors[f] == 0 {
                        ok = false;
                    }
                }
            }
            ok
        }

        fn unassign(&mut self, e: usize, c: usize) {
            self.colors[e] = 0;
            for i in 0..self.conflicts[e].len() {
                let f = self.conflicts[e][i];
                let slot = f * self.k + c;
                self.blocked[slot] -= 1;
                if self.blocked[slot] == 0 {
                    self.free[f] += 1;
                }
            }
        }

        fn descend(&mut self, e: usize, opened: usize) -> Result<bool> {
            *self.nodes += 1;
            if let Some(budget) = self.budget {
                if *self.nodes > budget {
                    return Err(Error::BudgetExhausted { budget });
                }
            }
            if e == self.colors.len() {
                // Matching and induced conditions hold by construction;
                // domination is checked at the leaf.
                return Ok(opened == self.k
                    && DimPartition::new(self.k, self.colors.clone())
                        .is_ok_and(|p| classes_are_dims(self.g, &p)));
            }
            // Colors still unopened must fit into the remaining edges.
            if self.k - opened > self.colors.len() - e {
                return Ok(false);
            }
            let limit = (opened + 1).min(self.k);
            for c in 0..limit {
                if self.blocked[e * self.k + c] != 0 {
                    continue;
                }
                let ok = self.assign(e, c);
                if ok && self.descend(e + 1, opened.max(c + 1))? {
                    return Ok(true);
                }
                self.unassign(e, c);
            }
            Ok(false)
        }
    }

    let m = g.m();
    let mut state = State {
        g,
        conflicts: conflicts(g),
        blocked: vec![0; m * k],
        free: vec![k; m],
        colors: vec![0; m],
        k,
        budget,
        nodes,
    };
    if !state.descend(0, 0)? {
        return Ok(None);
    }
    Ok(Some(state.colors))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionCheck {
    /// Every class is a DIM.
    pub valid: bool,
    /// `num_classes == d(u) + d(v) - 1` for every edge `uv`.
    pub class_count_ok: bool,
    pub regularity: Regularity,
}

pub fn verify_dim_partition(g: &Graph, p: &DimPartition) -> Result<PartitionCheck> {
    p.check_total(g)?;
    let valid = classes_are_dims(g, p);
    let class_count_ok = g
        .edges()
        .iter()
        .all(|&(u, v)| g.degree(u) + g.degree(v) == p.num_classes + 1);
    Ok(PartitionCheck {
        valid,
        class_count_ok,
        regularity: g.degree_profile().regularity(),
    })
}

/// Map from vertices to subsets of the label set `{1..universe}`; lists are
/// sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ListAssignment {
    universe: usize,
    lists: Vec<Vec<u32>>,
}

impl ListAssignment {
    pub fn new(universe: usize, lists: Vec<Vec<u32>>) -> Result<ListAssignment> {
        let mut lists = lists;
        for (v, list) in lists.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidListAssignment(format!(
                    "vertex {v} repeats a label"
                )));
            }
            if list.iter().any(|&a| a == 0 || a as usize > universe) {
                return Err(Error::InvalidListAssignment(format!(
                    "vertex {v} has a label outside 1..={universe}"
                )));
            }
        }
        Ok(ListAssignment { universe, lists })
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn list(&self, v: usize) -> &[u32] {
        &self.lists[v]
    }

    pub fn lists(&self) -> &[Vec<u32>] {
        &self.lists
    }
}

/// `L(v) = S \ {c(e) : e incident to v}` with `S = {1..num_classes}`.
pub fn list_assignment(g: &Graph, p: &DimPartition) -> Result<ListAssignment> {
    p.check_total(g)?;
    if !classes_are_dims(g, p) {
        return Err(Error::InvalidPartition(
            "some color class is not a dominating induced matching".into(),
        ));
    }
    let k = p.num_classes();
    let lists = (0..g.n())
        .map(|v| {
            let mut present = vec![false; k + 1];
            for &e in g.incident_edges(v) {
                present[p.color_of(e) as usize] = true;
            }
            (1..=k as u32).filter(|&c| !present[c as usize]).collect()
        })
        .collect();
    ListAssignment::new(k, lists)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ListCheck {
    /// Adjacent vertices have disjoint lists.
    pub disjointness: bool,
    /// Every admissible subset is some vertex's list.
    pub surjective: bool,
    /// Every admissible subset is the list of equally many vertices.
    pub equal_fibers: bool,
}

/// The admissible list subsets for `g`'s degree profile: all `(r-1)`-subsets
/// when `g` is `r`-regular; for a biregular graph with degrees `(x, y)` the
/// `(y-1)`-subsets (lists of the degree-`x` side) together with the
/// `(x-1)`-subsets (lists of the degree-`y` side).
fn admissible_targets(g: &Graph, l: &ListAssignment) -> Result<Vec<Vec<u32>>> {
    if g.m() == 0 {
        return Err(Error::InvalidListAssignment(
            "graph has no edges, so no list assignment is defined".into(),
        ));
    }
    if l.lists.len() != g.n() {
        return Err(Error::InvalidListAssignment(format!(
            "assignment covers {} vertices, graph has {}",
            l.lists.len(),
            g.n()
        )));
    }
    let profile = g.degree_profile();
    let k = l.universe;
    let sizes: Vec<usize> = match profile.regularity() {
        Regularity::Regular => vec![profile.max - 1],
        Regularity::Biregular => {
            let b = profile.biregular.as_ref().unwrap();
            vec![b.y_degree - 1, b.x_degree - 1]
        }
        Regularity::Neither => {
            return Err(Error::InvalidListAssignment(
                "graph is neither regular nor biregular".into(),
            ))
        }
    };
    for v in 0..g.n() {
        let want = k as isize - g.degree(v) as isize;
        if want < 0 || l.lists[v].len() != want as usize || !sizes.contains(&(want as usize)) {
            return Err(Error::InvalidListAssignment(format!(
                "vertex {v} of degree {} has a list of size {} over {k} labels",
                g.degree(v),
                l.lists[v].len()
            )));
        }
    }
    let mut targets: Vec<Vec<u32>> = sizes
        .iter()
        .flat_map(|&s| (1..=k as u32).combinations(s))
        .collect();
    targets.sort_unstable();
    targets.dedup();
    Ok(targets)
}

pub fn verify_list_properties(g: &Graph, l: &ListAssignment) -> Result<ListCheck> {
    let targets = admissible_targets(g, l)?;
    let disjointness = g
        .edges()
        .iter()
        .all(|&(u, v)| is_disjoint(&l.lists[u], &l.lists[v]));
    let mut fibers: BTreeMap<&[u32], usize> = targets.iter().map(|t| (t.as_slice(), 0)).collect();
    for list in &l.lists {
        if let Some(count) = fibers.get_mut(list.as_slice()) {
            *count += 1;
        }
    }
    let surjective = fibers.values().all(|&c| c > 0);
    let counts: Vec<usize> = fibers.values().copied().collect();
    let equal_fibers = counts
        .iter()
        .tuple_combinations()
        .all(|(a, b)| a == b);
    Ok(ListCheck {
        disjointness,
        surjective,
        equal_fibers,
    })
}

fn is_disjoint(a: &[u32], b: &[u32]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return false,
        }
    }
    true
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Whether `l` is an isomorphism from `g` onto the Kneser graph on the
/// `(r-1)`-subsets of `{1..2r-1}`: `|V| = C(2r-1, r-1)`, `l` is a bijection
/// onto those subsets, and adjacency coincides with list disjointness.
///
/// `g` must be connected and `r`-regular with `r >= 1`, and `l` must have
/// `2r-1` labels.
pub fn check_kneser_isomorphism(g: &Graph, l: &ListAssignment) -> Result<bool> {
    let profile = g.degree_profile();
    if !g.is_connected() || !profile.is_regular || profile.max == 0 {
        return Err(Error::Precondition(
            "expected a connected regular graph with at least one edge".into(),
        ));
    }
    let r = profile.max;
    if l.universe != 2 * r - 1 || l.lists.len() != g.n() {
        return Err(Error::Precondition(format!(
            "expected {} vertex lists over {} labels",
            g.n(),
            2 * r - 1
        )));
    }
    if g.n() as u64 != binomial(2 * r as u64 - 1, r as u64 - 1) {
        return Ok(false);
    }
    let distinct = l.lists.iter().all_unique();
    let right_size = l.lists.iter().all(|s| s.len() == r - 1);
    if !(distinct && right_size) {
        return Ok(false);
    }
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if g.has_edge(u, v) != is_disjoint(&l.lists[u], &l.lists[v]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
