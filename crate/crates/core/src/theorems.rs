//! Executable checks of the structural facts about dominating induced
//! matchings, and a per-graph report that runs all of them.
//!
//! Facts with hypotheses (a DIM exists, minimum degree at least 2, the graph
//! is regular or connected, a DIM partition exists) report "not applicable"
//! when the hypothesis fails instead of passing vacuously. All comparisons use
//! integer arithmetic.

use std::fmt::{self, Write as _};

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::cycles::{enumerate_cycles, Cycle};
use crate::error::{Error, Result};
use crate::graph::{Graph, Regularity};
use crate::partition::{
    binomial, check_kneser_isomorphism, find_dim_partition_with_budget, list_assignment,
    verify_dim_partition, verify_list_properties, DimPartition,
};
use crate::solver::{classify_dim, enumerate_dims, find_dim, Matching};

pub const DEFAULT_MAX_CYCLE_LEN: usize = 8;
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// A vertex coloring with colors 1, 2, 3.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring(Vec<u8>);

impl Coloring {
    pub fn color_of(&self, v: usize) -> u8 {
        self.0[v]
    }

    pub fn colors(&self) -> &[u8] {
        &self.0
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        g.edges().iter().all(|&(u, v)| self.0[u] != self.0[v])
    }
}

fn require_dim(g: &Graph, d: &Matching) -> Result<()> {
    let w = classify_dim(g, d.edges())?;
    if w.is_valid() {
        Ok(())
    } else {
        Err(Error::NotADim(w.classification().to_string()))
    }
}

/// Colors the lower endpoint of each DIM edge 1, the upper endpoint 2, and
/// every other vertex 3.
pub fn three_coloring_from_dim(g: &Graph, d: &Matching) -> Result<Coloring> {
    require_dim(g, d)?;
    let mut colors = vec![3u8; g.n()];
    for &e in d.edges() {
        let (u, v) = g.endpoints(e);
        colors[u] = 1;
        colors[v] = 2;
    }
    let coloring = Coloring(colors);
    assert!(coloring.is_proper(g), "coloring from a DIM must be proper");
    Ok(coloring)
}

/// Outcome of `m <= (n^2 + n) / 4`; `bound_numerator / 4` is the bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeBound {
    pub applicable: bool,
    pub bound_numerator: u64,
    pub holds: bool,
}

impl EdgeBound {
    pub fn bound_display(&self) -> String {
        fraction(self.bound_numerator, 4)
    }
}

fn fraction(num: u64, den: u64) -> String {
    let g = gcd(num, den).max(1);
    if den / g == 1 {
        format!("{}", num / g)
    } else {
        format!("{}/{}", num / g, den / g)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn check_edge_bound(g: &Graph) -> EdgeBound {
    edge_bound_given(g, find_dim(g).is_some())
}

fn edge_bound_given(g: &Graph, has_dim: bool) -> EdgeBound {
    let n = g.n() as u64;
    let numerator = n * n + n;
    EdgeBound {
        applicable: has_dim,
        bound_numerator: numerator,
        holds: 4 * g.m() as u64 <= numerator,
    }
}

/// Whether all DIMs of `g` have one size (vacuously true with fewer than two).
pub fn check_dim_size_invariance(g: &Graph, budget: u64) -> Result<bool> {
    let dims = enumerate_dims(g, budget)?;
    Ok(dims.iter().map(Matching::len).all_equal())
}

/// `nk / (4k - 2)` when it is an integer. `None` means no `k`-regular graph
/// on `n` vertices has a DIM.
pub fn regular_dim_formula(n: u64, k: u64) -> Option<u64> {
    if n == 0 || k == 0 {
        return None;
    }
    let (num, den) = (n * k, 4 * k - 2);
    (num % den == 0).then_some(num / den)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimBounds {
    pub applicable: bool,
    pub lower_ok: bool,
    pub upper_ok: bool,
}

/// `δ/(Δ-1) <= 2·dim/(n - 2·dim) <= Δ/(δ-1)`, compared after clearing the
/// (positive) denominators. Applicable when `δ >= 2` and a DIM exists.
pub fn check_dim_bounds(g: &Graph) -> DimBounds {
    dim_bounds_given(g, find_dim(g).map(|d| d.len()))
}

fn dim_bounds_given(g: &Graph, dim: Option<usize>) -> DimBounds {
    let (lo, hi) = (g.min_degree() as i64, g.max_degree() as i64);
    let Some(dim) = dim.filter(|_| lo >= 2) else {
        return DimBounds {
            applicable: false,
            lower_ok: false,
            upper_ok: false,
        };
    };
    let matched = 2 * dim as i64;
    let unmatched = g.n() as i64 - matched;
    DimBounds {
        applicable: true,
        lower_ok: unmatched > 0 && lo * unmatched <= matched * (hi - 1),
        upper_ok: unmatched > 0 && matched * (lo - 1) <= hi * unmatched,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleCheck {
    pub cycles_checked: usize,
    /// `|C ∩ D| <= floor(r/3)` for every cycle of length `r`.
    pub all_bound_ok: bool,
    /// `|C ∩ D| ≡ r (mod 2)`.
    pub all_parity_ok: bool,
    /// 3-, 5- and 7-cycles meet `D` once; 4-cycles miss it.
    pub short_cycle_ok: bool,
    /// Vertex sequence of the first cycle breaking any of the above.
    pub first_violation: Option<Vec<usize>>,
}

pub fn check_cycle_intersections(g: &Graph, d: &Matching, max_len: usize) -> Result<CycleCheck> {
    if max_len < 3 {
        return Err(Error::InvalidParameter(format!(
            "cycle length bound must be at least 3, got {max_len}"
        )));
    }
    require_dim(g, d)?;
    Ok(cycle_check_given(g, d, &enumerate_cycles(g, max_len)))
}

fn cycle_check_given(g: &Graph, d: &Matching, cycles: &[Cycle]) -> CycleCheck {
    let mut in_dim = vec![false; g.m()];
    for &e in d.edges() {
        in_dim[e.0] = true;
    }
    let mut check = CycleCheck {
        cycles_checked: cycles.len(),
        all_bound_ok: true,
        all_parity_ok: true,
        short_cycle_ok: true,
        first_violation: None,
    };
    for c in cycles {
        let r = c.len();
        let hits = c.edges().iter().filter(|e| in_dim[e.0]).count();
        let bound = hits <= r / 3;
        let parity = hits % 2 == r % 2;
        let short = match r {
            3 | 5 | 7 => hits == 1,
            4 => hits == 0,
            _ => true,
        };
        check.all_bound_ok &= bound;
        check.all_parity_ok &= parity;
        check.short_cycle_ok &= short;
        if !(bound && parity && short) && check.first_violation.is_none() {
            check.first_violation = Some(c.vertices().to_vec());
        }
    }
    check
}

/// Regular or biregular, and `num_classes = d(u) + d(v) - 1` on every edge.
pub fn check_partition_regularity(g: &Graph, p: &DimPartition) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::Precondition("graph is not connected".into()));
    }
    let check = verify_dim_partition(g, p)?;
    if !check.valid {
        return Err(Error::InvalidPartition(
            "some color class is not a dominating induced matching".into(),
        ));
    }
    Ok(check.regularity != Regularity::Neither && check.class_count_ok)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budgets {
    /// Search nodes for DIM enumeration.
    pub enumeration: u64,
    /// Search nodes for DIM partition search.
    pub partition: u64,
    pub max_cycle_len: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            enumeration: DEFAULT_BUDGET,
            partition: DEFAULT_BUDGET,
            max_cycle_len: DEFAULT_MAX_CYCLE_LEN,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub name: String,
    pub applicable: bool,
    pub passed: bool,
    pub budget_exhausted: bool,
    pub details: String,
}

impl Entry {
    fn skipped(name: &str, why: impl Into<String>) -> Entry {
        Entry {
            name: name.into(),
            applicable: false,
            passed: false,
            budget_exhausted: false,
            details: why.into(),
        }
    }

    fn checked(name: &str, passed: bool, details: impl Into<String>) -> Entry {
        Entry {
            name: name.into(),
            applicable: true,
            passed,
            budget_exhausted: false,
            details: details.into(),
        }
    }

    fn exhausted(name: &str, budget: u64) -> Entry {
        Entry {
            name: name.into(),
            applicable: true,
            passed: false,
            budget_exhausted: true,
            details: format!("search budget of {budget} nodes exhausted"),
        }
    }

    /// Applicable, ran to completion, and failed.
    pub fn is_violation(&self) -> bool {
        self.applicable && !self.passed && !self.budget_exhausted
    }
}

/// Report entry names, in report order.
pub const ENTRY_NAMES: [&str; 11] = [
    "three_coloring",
    "edge_bound",
    "dim_size_invariance",
    "dim_degree_bounds",
    "regular_dim_formula",
    "regular_divisibility",
    "cycle_intersections",
    "partition_regularity",
    "list_properties",
    "partition_vertex_divisibility",
    "kneser_extremal",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub n: usize,
    pub m: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub regularity: Regularity,
    pub connected: bool,
    pub max_cycle_len: usize,
    pub enumeration_budget: u64,
    pub partition_budget: u64,
    pub dim_exists: bool,
    pub dim_size: Option<usize>,
    /// The DIM found, as endpoint pairs.
    pub dim: Option<Vec<(usize, usize)>>,
    pub partition_classes: Option<usize>,
    pub partition_search_exhausted: bool,
    pub entries: Vec<Entry>,
}

impl VerificationReport {
    pub fn entry(&self, name: &str) -> Option<&Entry> {
        self.entries.iter().find(|e| e.name == name)
    }

    /// Every applicable entry passed.
    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(|e| !e.applicable || e.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}

fn opt<T: fmt::Display>(x: &Option<T>) -> String {
    x.as_ref().map_or_else(|| "none".to_string(), T::to_string)
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dim = self.dim.as_ref().map(|d| {
            d.iter().map(|(u, v)| format!("{u}-{v}")).join(" ")
        });
        writeln!(f, "[graph]")?;
        writeln!(f, "n = {}", self.n)?;
        writeln!(f, "m = {}", self.m)?;
        writeln!(f, "min_degree = {}", self.min_degree)?;
        writeln!(f, "max_degree = {}", self.max_degree)?;
        writeln!(f, "regularity = {}", self.regularity)?;
        writeln!(f, "connected = {}", self.connected)?;
        writeln!(f)?;
        writeln!(f, "[settings]")?;
        writeln!(f, "max_cycle_len = {}", self.max_cycle_len)?;
        writeln!(f, "enumeration_budget = {}", self.enumeration_budget)?;
        writeln!(f, "partition_budget = {}", self.partition_budget)?;
        writeln!(f)?;
        writeln!(f, "[dim]")?;
        writeln!(f, "exists = {}", self.dim_exists)?;
        writeln!(f, "size = {}", opt(&self.dim_size))?;
        writeln!(f, "witness = {}", opt(&dim))?;
        writeln!(f, "partition_classes = {}", opt(&self.partition_classes))?;
        writeln!(f, "partition_search_exhausted = {}", self.partition_search_exhausted)?;
        for e in &self.entries {
            writeln!(f)?;
            writeln!(f, "[check.{}]", e.name)?;
            writeln!(f, "applicable = {}", e.applicable)?;
            writeln!(f, "passed = {}", e.passed)?;
            writeln!(f, "budget_exhausted = {}", e.budget_exhausted)?;
            writeln!(f, "details = {}", e.details)?;
        }
        Ok(())
    }
}

/// Runs every check on `g`. Budget exhaustion is recorded on the affected
/// entry and never aborts the report.
pub fn full_report(g: &Graph, budgets: &Budgets) -> VerificationReport {
    let profile = g.degree_profile();
    let regularity = profile.regularity();
    let connected = g.is_connected();
    let dim = find_dim(g);
    let dim_size = dim.as_ref().map(Matching::len);

    let (partition, partition_exhausted) =
        match find_dim_partition_with_budget(g, Some(budgets.partition)) {
            Ok(p) => (p, false),
            Err(_) => (None, true),
        };

    let mut entries = Vec::with_capacity(ENTRY_NAMES.len());
    let no_dim = "graph has no dominating induced matching";

    // three_coloring
    entries.push(match &dim {
        None => Entry::skipped("three_coloring", no_dim),
        Some(d) => {
            let c = three_coloring_from_dim(g, d).expect("found DIM is valid");
            Entry::checked(
                "three_coloring",
                c.is_proper(g),
                format!("colors = {}", c.colors().iter().join("")),
            )
        }
    });

    // edge_bound
    let eb = edge_bound_given(g, dim.is_some());
    entries.push(if eb.applicable {
        Entry::checked(
            "edge_bound",
            eb.holds,
            format!("m = {} bound = {}", g.m(), eb.bound_display()),
        )
    } else {
        Entry::skipped("edge_bound", no_dim)
    });

    // dim_size_invariance
    entries.push(if dim.is_none() {
        Entry::skipped("dim_size_invariance", no_dim)
    } else {
        match enumerate_dims(g, budgets.enumeration) {
            Err(_) => Entry::exhausted("dim_size_invariance", budgets.enumeration),
            Ok(all) => {
                let sizes: Vec<usize> = all.iter().map(Matching::len).unique().collect();
                Entry::checked(
                    "dim_size_invariance",
                    sizes.len() == 1,
                    format!("dims = {} sizes = {}", all.len(), sizes.iter().join(",")),
                )
            }
        }
    });

    // dim_degree_bounds
    let b = dim_bounds_given(g, dim_size);
    entries.push(if b.applicable {
        let d = dim_size.unwrap() as u64;
        let (lo, hi, n) = (profile.min as u64, profile.max as u64, g.n() as u64);
        Entry::checked(
            "dim_degree_bounds",
            b.lower_ok && b.upper_ok,
            format!(
                "{} <= {} <= {}",
                fraction(lo, hi - 1),
                fraction(2 * d, n - 2 * d),
                fraction(hi, lo - 1)
            ),
        )
    } else if dim.is_none() {
        Entry::skipped("dim_degree_bounds", no_dim)
    } else {
        Entry::skipped("dim_degree_bounds", "minimum degree below 2")
    });

    // regular_dim_formula and regular_divisibility
    let k = profile.max as u64;
    let regular_with_dim = profile.is_regular && k >= 1 && dim.is_some();
    let not_regular = if dim.is_none() {
        no_dim
    } else {
        "graph is not regular with positive degree"
    };
    if regular_with_dim {
        let n = g.n() as u64;
        let formula = regular_dim_formula(n, k);
        entries.push(Entry::checked(
            "regular_dim_formula",
            formula == dim_size.map(|d| d as u64),
            format!("nk/(4k-2) = {} dim = {}", fraction(n * k, 4 * k - 2), opt(&dim_size)),
        ));
        entries.push(Entry::checked(
            "regular_divisibility",
            (n * k).is_multiple_of(4 * k - 2),
            format!("4k-2 = {} nk = {}", 4 * k - 2, n * k),
        ));
    } else {
        entries.push(Entry::skipped("regular_dim_formula", not_regular));
        entries.push(Entry::skipped("regular_divisibility", not_regular));
    }

    // cycle_intersections
    entries.push(match &dim {
        None => Entry::skipped("cycle_intersections", no_dim),
        Some(d) => {
            let cycles = enumerate_cycles(g, budgets.max_cycle_len);
            let c = cycle_check_given(g, d, &cycles);
            let mut details = format!(
                "cycles = {} bound_ok = {} parity_ok = {} short_ok = {}",
                c.cycles_checked, c.all_bound_ok, c.all_parity_ok, c.short_cycle_ok
            );
            if let Some(v) = &c.first_violation {
                write!(details, " violation = {}", v.iter().join("-")).unwrap();
            }
            Entry::checked(
                "cycle_intersections",
                c.all_bound_ok && c.all_parity_ok && c.short_cycle_ok,
                details,
            )
        }
    });

    // partition-based entries
    let partition_entries = [
        "partition_regularity",
        "list_properties",
        "partition_vertex_divisibility",
        "kneser_extremal",
    ];
    match &partition {
        _ if partition_exhausted => {
            for name in partition_entries {
                entries.push(Entry::exhausted(name, budgets.partition));
            }
        }
        None => {
            for name in partition_entries {
                entries.push(Entry::skipped(name, "no DIM partition"));
            }
        }
        Some(_) if g.m() == 0 => {
            for name in partition_entries {
                entries.push(Entry::skipped(name, "graph has no edges"));
            }
        }
        Some(p) => entries.extend(partition_checks(g, p, connected)),
    }

    VerificationReport {
        n: g.n(),
        m: g.m(),
        min_degree: profile.min,
        max_degree: profile.max,
        regularity,
        connected,
        max_cycle_len: budgets.max_cycle_len,
        enumeration_budget: budgets.enumeration,
        partition_budget: budgets.partition,
        dim_exists: dim.is_some(),
        dim_size,
        dim: dim
            .as_ref()
            .map(|d| d.edges().iter().map(|&e| g.endpoints(e)).collect()),
        partition_classes: partition.as_ref().map(DimPartition::num_classes),
        partition_search_exhausted: partition_exhausted,
        entries,
    }
}

fn partition_checks(g: &Graph, p: &DimPartition, connected: bool) -> Vec<Entry> {
    let mut out = Vec::with_capacity(4);
    let check = verify_dim_partition(g, p).expect("partition covers the graph");

    out.push(if connected {
        Entry::checked(
            "partition_regularity",
            check.valid && check.regularity != Regularity::Neither && check.class_count_ok,
            format!(
                "classes = {} regularity = {} class_count_ok = {}",
                p.num_classes(),
                check.regularity,
                check.class_count_ok
            ),
        )
    } else {
        Entry::skipped("partition_regularity", "graph is not connected")
    });

    out.push(match list_assignment(g, p).and_then(|l| verify_list_properties(g, &l)) {
        Ok(lc) => Entry::checked(
            "list_properties",
            lc.disjointness && lc.surjective && lc.equal_fibers,
            format!(
                "disjointness = {} surjective = {} equal_fibers = {}",
                lc.disjointness, lc.surjective, lc.equal_fibers
            ),
        ),
        Err(e) => Entry::skipped("list_properties", e.to_string()),
    });

    let profile = g.degree_profile();
    let r = profile.max as u64;
    if connected && profile.is_regular && r >= 1 {
        let c = binomial(2 * r - 1, r - 1);
        let n = g.n() as u64;
        out.push(Entry::checked(
            "partition_vertex_divisibility",
            n.is_multiple_of(c),
            format!("n = {n} C(2r-1,r-1) = {c}"),
        ));
        let l = list_assignment(g, p).expect("partition is valid");
        let iso = check_kneser_isomorphism(g, &l).expect("preconditions hold");
        out.push(Entry::checked(
            "kneser_extremal",
            (n == c) == iso,
            format!("n = C(2r-1,r-1): {} list map is kneser isomorphism: {}", n == c, iso),
        ));
    } else {
        let why = "graph is not connected and regular";
        out.push(Entry::skipped("partition_vertex_divisibility", why));
        out.push(Entry::skipped("kneser_extremal", why));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, petersen, star};

    fn k4_minus_edge() -> Graph {
        // a = 0, b = 1 have degree 3; the missing edge is 2-3
        Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap()
    }

    fn dim_of(g: &Graph, pairs: &[(usize, usize)]) -> Matching {
        Matching::new(g, pairs.iter().map(|&(u, v)| g.edge_id(u, v).unwrap())).unwrap()
    }

    #[test]
    fn coloring_examples() {
        let k2 = complete(2).unwrap();
        let c = three_coloring_from_dim(&k2, &dim_of(&k2, &[(0, 1)])).unwrap();
        assert_eq!(c.colors(), &[1, 2]);

        let c6 = cycle(6).unwrap();
        let c = three_coloring_from_dim(&c6, &dim_of(&c6, &[(0, 1), (3, 4)])).unwrap();
        assert_eq!(c.colors(), &[1, 2, 3, 1, 2, 3]);

        let bad = dim_of(&c6, &[(0, 1)]);
        assert!(matches!(three_coloring_from_dim(&c6, &bad), Err(Error::NotADim(_))));
    }

    #[test]
    fn edge_bound_examples() {
        let eb = check_edge_bound(&k4_minus_edge());
        assert!(eb.applicable && eb.holds);
        assert_eq!(eb.bound_display(), "5");
        let eb = check_edge_bound(&petersen());
        assert!(eb.applicable && eb.holds);
        assert_eq!(eb.bound_display(), "55/2");
        assert!(!check_edge_bound(&cycle(4).unwrap()).applicable);
    }

    #[test]
    fn size_invariance_examples() {
        assert!(check_dim_size_invariance(&cycle(6).unwrap(), 1000).unwrap());
        assert!(check_dim_size_invariance(&complete(3).unwrap(), 1000).unwrap());
        assert!(check_dim_size_invariance(&petersen(), 100_000).unwrap());
    }

    #[test]
    fn formula_examples() {
        assert_eq!(regular_dim_formula(10, 3), Some(3));
        assert_eq!(regular_dim_formula(6, 2), Some(2));
        assert_eq!(regular_dim_formula(6, 3), None);
        assert_eq!(regular_dim_formula(2, 1), Some(1));
    }

    #[test]
    fn bounds_examples() {
        let b = check_dim_bounds(&cycle(6).unwrap());
        assert!(b.applicable && b.lower_ok && b.upper_ok);
        let b = check_dim_bounds(&petersen());
        assert!(b.applicable && b.lower_ok && b.upper_ok);
        assert!(!check_dim_bounds(&star(3).unwrap()).applicable);
    }

    #[test]
    fn cycle_intersection_examples() {
        let c9 = cycle(9).unwrap();
        let d = dim_of(&c9, &[(0, 1), (3, 4), (6, 7)]);
        let c = check_cycle_intersections(&c9, &d, 9).unwrap();
        assert_eq!(c.cycles_checked, 1);
        assert!(c.all_bound_ok && c.all_parity_ok && c.short_cycle_ok);

        let g = k4_minus_edge();
        let d = dim_of(&g, &[(0, 1)]);
        let c = check_cycle_intersections(&g, &d, 4).unwrap();
        assert!(c.short_cycle_ok && c.first_violation.is_none());

        assert!(check_cycle_intersections(&g, &d, 2).is_err());
    }

    #[test]
    fn partition_regularity_examples() {
        let s = star(3).unwrap();
        let p = DimPartition::new(3, vec![1, 2, 3]).unwrap();
        assert!(check_partition_regularity(&s, &p).unwrap());

        let two = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        let p = DimPartition::new(1, vec![1, 1]).unwrap();
        assert!(check_partition_regularity(&two, &p).is_err());
    }

    #[test]
    fn c4_report_is_not_applicable() {
        let r = full_report(&cycle(4).unwrap(), &Budgets::default());
        assert!(!r.dim_exists);
        assert!(r.entries.iter().all(|e| !e.applicable));
        assert_eq!(
            r.entries.iter().map(|e| e.name.as_str()).collect::<Vec<_>>(),
            ENTRY_NAMES
        );
    }

    #[test]
    fn report_text_has_a_section_per_entry() {
        let r = full_report(&cycle(9).unwrap(), &Budgets::default());
        let text = r.to_string();
        for name in ENTRY_NAMES {
            assert!(text.contains(&format!("[check.{name}]")));
        }
        assert!(text.lines().all(|l| l == l.trim_end()));
        let back: VerificationReport = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn exhausted_budget_is_recorded() {
        let budgets = Budgets {
            enumeration: 1,
            partition: 1,
            ..Budgets::default()
        };
        let r = full_report(&cycle(9).unwrap(), &budgets);
        let e = r.entry("dim_size_invariance").unwrap();
        assert!(e.budget_exhausted && !e.is_violation());
        assert!(r.partition_search_exhausted);
    }
}
