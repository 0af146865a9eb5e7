//! Finding and enumerating dominating induced matchings.
//!
//! An edge set `D` is a dominating induced matching (DIM) exactly when the
//! domination sets `D_e` (the edge `e` together with every edge sharing an
//! endpoint with it) of its members partition the edge set: every edge is
//! dominated by exactly one member. That turns DIM search into exact cover
//! over the universe `E(G)` with candidate sets `{D_e}`, which is what
//! [`find_dim`] and [`enumerate_dims`] solve. [`brute_force_dims`] is an
//! independent oracle that only uses the textbook definition.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};

/// Largest edge count [`brute_force_dims`] accepts.
pub const BRUTE_FORCE_MAX_EDGES: usize = 20;

/// A set of pairwise vertex-disjoint edges, stored sorted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Matching(Vec<EdgeId>);

impl Matching {
    /// Validates edge ids and vertex-disjointness.
    pub fn new(g: &Graph, edges: impl IntoIterator<Item = EdgeId>) -> Result<Matching> {
        let edges = sorted_ids(g, edges)?;
        let mut used = vec![false; g.n()];
        for &e in &edges {
            let (u, v) = g.endpoints(e);
            if used[u] || used[v] {
                return Err(Error::InvalidParameter(format!(
                    "edges share a vertex at {e}"
                )));
            }
            used[u] = true;
            used[v] = true;
        }
        Ok(Matching(edges))
    }

    pub(crate) fn from_sorted(edges: Vec<EdgeId>) -> Matching {
        Matching(edges)
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.0.binary_search(&e).is_ok()
    }
}

fn sorted_ids(g: &Graph, edges: impl IntoIterator<Item = EdgeId>) -> Result<Vec<EdgeId>> {
    let mut ids: Vec<EdgeId> = edges.into_iter().collect();
    for &e in &ids {
        g.check_edge(e)?;
    }
    ids.sort_unstable();
    ids.dedup();
    Ok(ids)
}

/// `D_e`: the edge `e` and every edge sharing an endpoint with it, sorted.
pub fn dominated_set(g: &Graph, e: EdgeId) -> Vec<EdgeId> {
    let (u, v) = g.endpoints(e);
    let mut out: Vec<EdgeId> = g
        .incident_edges(u)
        .iter()
        .chain(g.incident_edges(v))
        .copied()
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Outcome of checking an edge set against the DIM definition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Verdict {
    ValidDim,
    /// Two members share `vertex`.
    NotMatching { first: EdgeId, second: EdgeId, vertex: usize },
    /// `joining` connects an endpoint of `first` to an endpoint of `second`.
    NotInduced { first: EdgeId, second: EdgeId, joining: EdgeId },
    /// `edge` touches no member.
    NotDominating { edge: EdgeId },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    ValidDim,
    NotMatching,
    NotInduced,
    NotDominating,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Classification::ValidDim => "valid-dim",
            Classification::NotMatching => "not-matching",
            Classification::NotInduced => "not-induced",
            Classification::NotDominating => "not-dominating",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimWitness {
    pub edges: Vec<EdgeId>,
    pub verdict: Verdict,
}

impl DimWitness {
    pub fn classification(&self) -> Classification {
        match self.verdict {
            Verdict::ValidDim => Classification::ValidDim,
            Verdict::NotMatching { .. } => Classification::NotMatching,
            Verdict::NotInduced { .. } => Classification::NotInduced,
            Verdict::NotDominating { .. } => Classification::NotDominating,
        }
    }

    pub fn is_valid(&self) -> bool {
        self.verdict == Verdict::ValidDim
    }
}

/// Checks the definition directly: matching, then induced, then dominating.
/// The first failure found (in edge-id order) is reported.
pub fn classify_dim(g: &Graph, edges: &[EdgeId]) -> Result<DimWitness> {
    let edges = sorted_ids(g, edges.iter().copied())?;
    let verdict = definitional_verdict(g, &edges);
    Ok(DimWitness { edges, verdict })
}

fn definitional_verdict(g: &Graph, edges: &[EdgeId]) -> Verdict {
    // owner[v] = member covering v
    let mut owner: Vec<Option<EdgeId>> = vec![None; g.n()];
    for &e in edges {
        let (u, v) = g.endpoints(e);
        for x in [u, v] {
            if let Some(first) = owner[x] {
                return Verdict::NotMatching {
                    first,
                    second: e,
                    vertex: x,
                };
            }
            owner[x] = Some(e);
        }
    }
    for f in g.edge_ids() {
        let (a, b) = g.endpoints(f);
        if let (Some(x), Some(y)) = (owner[a], owner[b]) {
            if x != y {
                return Verdict::NotInduced {
                    first: x.min(y),
                    second: x.max(y),
                    joining: f,
                };
            }
        }
    }
    for f in g.edge_ids() {
        let (a, b) = g.endpoints(f);
        if owner[a].is_none() && owner[b].is_none() {
            return Verdict::NotDominating { edge: f };
        }
    }
    Verdict::ValidDim
}

/// True when every edge lies in exactly one `D_e` with `e` in `edges`.
pub fn dominates_exactly_once(g: &Graph, edges: &[EdgeId]) -> Result<bool> {
    let edges = sorted_ids(g, edges.iter().copied())?;
    let mut hits = vec![0u32; g.m()];
    for &e in &edges {
        for f in dominated_set(g, e) {
            hits[f.0] += 1;
        }
    }
    Ok(hits.iter().all(|&h| h == 1))
}

/// Some DIM of `g`, or `None` if it has none. An edgeless graph yields the
/// empty matching.
pub fn find_dim(g: &Graph) -> Option<Matching> {
    let mut search = ExactCover::new(g, None);
    let mut found = None;
    search
        .run(&mut |sol| {
            found = Some(Matching::from_sorted(sol));
            false
        })
        .expect("unbounded search cannot exhaust its budget");
    found
}

/// Every DIM of `g`, sorted lexicographically by edge ids.
///
/// `budget` caps the number of search nodes; running out is an error rather
/// than a truncated answer.
pub fn enumerate_dims(g: &Graph, budget: u64) -> Result<Vec<Matching>> {
    let mut search = ExactCover::new(g, Some(budget));
    let mut all = Vec::new();
    search.run(&mut |sol| {
        all.push(Matching::from_sorted(sol));
        true
    })?;
    all.sort_unstable();
    Ok(all)
}

/// `dim(G)`: the size of any DIM. All DIMs of a graph share one size, so the
/// first one found is enough.
pub fn dim_size(g: &Graph) -> Option<usize> {
    find_dim(g).map(|d| d.len())
}

/// All DIMs by scanning every edge subset against the definition.
/// Limited to graphs with at most [`BRUTE_FORCE_MAX_EDGES`] edges.
pub fn brute_force_dims(g: &Graph) -> Result<Vec<Matching>> {
    let m = g.m();
    if m > BRUTE_FORCE_MAX_EDGES {
        return Err(Error::TooManyEdges(m));
    }
    let mut out = Vec::new();
    let mut members = Vec::with_capacity(m);
    for mask in 0u32..(1u32 << m) {
        members.clear();
        members.extend((0..m).filter(|&i| mask >> i & 1 == 1).map(EdgeId));
        if definitional_verdict(g, &members) == Verdict::ValidDim {
            out.push(Matching::from_sorted(members.clone()));
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Exact cover search over universe `E(G)` with candidate sets `D_e`.
///
/// A candidate `e` stays live while `D_e` is disjoint from the covered edges.
/// `options[f]` counts live candidates that would cover `f`; an uncovered edge
/// whose count drops to zero can no longer be covered, so the branch dies.
/// Branching always picks the lowest-indexed uncovered edge.
struct ExactCover<'g> {
    g: &'g Graph,
    dom: Vec<Vec<usize>>,
    covered: Vec<bool>,
    live: Vec<bool>,
    options: Vec<u32>,
    chosen: Vec<usize>,
    nodes: u64,
    budget: Option<u64>,
}

impl<'g> ExactCover<'g> {
    fn new(g: &'g Graph, budget: Option<u64>) -> Self {
        let dom: Vec<Vec<usize>> = g
            .edge_ids()
            .map(|e| dominated_set(g, e).into_iter().map(EdgeId::index).collect())
            .collect();
        // D_e is symmetric, so |{e : f in D_e}| = |D_f|.
        let options = dom.iter().map(|d| d.len() as u32).collect();
        ExactCover {
            g,
            covered: vec![false; g.m()],
            live: vec![true; g.m()],
            options,
            dom,
            chosen: Vec::new(),
            nodes: 0,
            budget,
        }
    }

    /// Calls `emit` with each solution (sorted); stops when it returns false.
    fn run(&mut self, emit: &mut dyn FnMut(Vec<EdgeId>) -> bool) -> Result<()> {
        self.descend(0, emit).map(|_| ())
    }

    // Returns Ok(false) once the caller asked to stop.
    fn descend(
        &mut self,
        start: usize,
        emit: &mut dyn FnMut(Vec<EdgeId>) -> bool,
    ) -> Result<bool> {
        self.nodes += 1;
        if let Some(budget) = self.budget {
            if self.nodes > budget {
                return Err(Error::BudgetExhausted { budget });
            }
        }
        let Some(target) = (start..self.g.m()).find(|&f| !self.covered[f]) else {
            let mut sol: Vec<EdgeId> = self.chosen.iter().copied().map(EdgeId).collect();
            sol.sort_unstable();
            return Ok(emit(sol));
        };
        let candidates: Vec<usize> = self.dom[target]
            .iter()
            .copied()
            .filter(|&e| self.live[e])
            .collect();
        for e in candidates {
            let (killed, newly_covered, feasible) = self.choose(e);
            let keep_going = if feasible {
                self.chosen.push(e);
                let r = self.descend(target + 1, emit);
                self.chosen.pop();
                r
            } else {
                Ok(true)
            };
            self.undo(&killed, &newly_covered);
            if !keep_going? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn choose(&mut self, e: usize) -> (Vec<usize>, Vec<usize>, bool) {
        let mut killed = Vec::new();
        let newly_covered = self.dom[e].clone();
        for &h in &newly_covered {
            debug_assert!(!self.covered[h]);
            self.covered[h] = true;
        }
        let mut feasible = true;
        for &h in &newly_covered {
            for i in 0..self.dom[h].len() {
                let cand = self.dom[h][i];
                if !self.live[cand] {
                    continue;
                }
                self.live[cand] = false;
                killed.push(cand);
                for &f in &self.dom[cand] {
                    self.options[f] -= 1;
                    if self.options[f] == 0 && !self.covered[f] {
                        feasible = false;
                    }
                }
            }
        }
        (killed, newly_covered, feasible)
    }

    fn undo(&mut self, killed: &[usize], newly_covered: &[usize]) {
        for &cand in killed.iter().rev() {
            self.live[cand] = true;
            for &f in &self.dom[cand] {
                self.options[f] += 1;
            }
        }
        for &h in newly_covered {
            self.covered[h] = false;
        }
    }
}
