//! Exact reference solvers.
//!
//! The centerpiece is a complete backtracking search for stable cutsets:
//! every vertex gets one of the labels `S` (in the cutset), `A`, or `B`
//! (the two sides of the split), under the constraints that `S` is stable
//! and no edge joins `A` to `B`. Unit propagation over per-vertex label
//! domains keeps the search small enough to handle the hardness-gadget
//! instances (dozens of vertices, heavily constrained), which plain `2ⁿ`
//! enumeration cannot reach.
//!
//! The search is the ground truth for every reduction-rule safeness test,
//! so it favors obvious correctness: labels are only ever removed by the
//! two binary constraints, and a leaf is accepted exactly when both sides
//! are nonempty.
//!
//! Also here: the component-simple cutset test used by Rules 8 and 9, and
//! deliberately naive exhaustive solvers for Hitting Set, Multicolored
//! Hitting Set, and Set Splitting (budget-capped; they abort rather than
//! guess).

use thiserror::Error;

use crate::graph::{classify_subset, Graph, SubsetClass};
use crate::set_system::SetSystem;
use crate::witness::CutsetCertificate;

/// Default cap on candidate subsets examined by the set-system solvers.
pub const DEFAULT_SUBSET_BUDGET: u64 = 1 << 24;

/// Errors from the exact solvers. A budget error means "gave up", never a
/// wrong answer.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    /// The search visited more nodes than allowed.
    #[error("search exceeded the node budget of {budget}")]
    BudgetExceeded { budget: u64 },
    /// `has_c_simple_cutset` requires its candidate set to be a clique.
    #[error("candidate component is not a clique")]
    CandidateNotClique,
    /// The hitting-set solvers need the budget `k`.
    #[error("set system has no budget k")]
    MissingBudget,
    /// The multicolored solver needs a coloring.
    #[error("set system has no coloring")]
    MissingColoring,
    /// Set Splitting enumerates all `2ⁿ` subsets and stores them in a word.
    #[error("ground set of size {n} too large for exhaustive enumeration")]
    GroundSetTooLarge { n: usize },
}

/// Knobs for the stable-cutset search.
#[derive(Debug, Clone, Default)]
pub struct SearchOptions {
    /// Abort with [`OracleError::BudgetExceeded`] after this many search
    /// nodes; `None` means unlimited.
    pub node_budget: Option<u64>,
}

/// Counters describing one search run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Search-tree nodes entered (≥ 1 on any nonempty graph).
    pub nodes: u64,
    /// Labels tried at branch points.
    pub decisions: u64,
    /// Maximum number of simultaneously assigned vertices.
    pub max_depth: usize,
}

/// Result of a (budgeted) search: the certificate, if one exists, plus
/// statistics.
#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub certificate: Option<CutsetCertificate>,
    pub stats: SearchStats,
}

const LAB_S: u8 = 1;
const LAB_A: u8 = 2;
const LAB_B: u8 = 4;

struct Searcher<'a> {
    g: &'a Graph,
    /// Allowed labels per vertex; for assigned vertices exactly the label.
    domain: Vec<u8>,
    /// 0 while unassigned, else the label bit.
    label: Vec<u8>,
    /// Static branch order: descending degree, ties by id.
    order: Vec<usize>,
    assigned: usize,
    count_s: usize,
    count_a: usize,
    count_b: usize,
    /// Vertices whose domain still contains A (resp. B) — assigned or not.
    allow_a: usize,
    allow_b: usize,
    /// `(vertex, previous domain, was an assignment)` for backtracking.
    trail: Vec<(usize, u8, bool)>,
    /// Optional cap on |S| for the minimization variant.
    max_s: Option<usize>,
    stats: SearchStats,
    budget: Option<u64>,
}

impl<'a> Searcher<'a> {
    fn new(g: &'a Graph, max_s: Option<usize>, budget: Option<u64>) -> Self {
        let n = g.n();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        Searcher {
            g,
            domain: vec![LAB_S | LAB_A | LAB_B; n],
            label: vec![0; n],
            order,
            assigned: 0,
            count_s: 0,
            count_a: 0,
            count_b: 0,
            allow_a: n,
            allow_b: n,
            trail: Vec::new(),
            max_s,
            stats: SearchStats::default(),
            budget,
        }
    }

    fn set_domain(&mut self, v: usize, new: u8, is_assignment: bool) {
        let old = self.domain[v];
        self.trail.push((v, old, is_assignment));
        if old & LAB_A != 0 && new & LAB_A == 0 {
            self.allow_a -= 1;
        }
        if old & LAB_B != 0 && new & LAB_B == 0 {
            self.allow_b -= 1;
        }
        self.domain[v] = new;
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let (v, old, was_assignment) = self.trail.pop().unwrap();
            if was_assignment {
                match self.label[v] {
                    LAB_S => self.count_s -= 1,
                    LAB_A => self.count_a -= 1,
                    LAB_B => self.count_b -= 1,
                    _ => unreachable!("undoing a non-assignment"),
                }
                self.label[v] = 0;
                self.assigned -= 1;
            }
            let new = self.domain[v];
            if old & LAB_A != 0 && new & LAB_A == 0 {
                self.allow_a += 1;
            }
            if old & LAB_B != 0 && new & LAB_B == 0 {
                self.allow_b += 1;
            }
            self.domain[v] = old;
        }
    }

    /// Assigns `v ← lab` and runs unit propagation. Returns false on
    /// conflict (caller rewinds the trail).
    fn assign(&mut self, v: usize, lab: u8) -> bool {
        let mut queue = vec![(v, lab)];
        while let Some((v, lab)) = queue.pop() {
            if self.label[v] != 0 {
                // Forced twice along different edges; consistent or dead.
                if self.label[v] == lab {
                    continue;
                }
                return false;
            }
            if self.domain[v] & lab == 0 {
                return false;
            }
            self.set_domain(v, lab, true);
            self.label[v] = lab;
            self.assigned += 1;
            match lab {
                LAB_S => self.count_s += 1,
                LAB_A => self.count_a += 1,
                LAB_B => self.count_b += 1,
                _ => unreachable!(),
            }
            if let Some(max_s) = self.max_s {
                if self.count_s > max_s {
                    return false;
                }
            }
            self.stats.max_depth = self.stats.max_depth.max(self.assigned);
            // S forbids S on neighbors; A forbids B; B forbids A.
            let forbidden = match lab {
                LAB_S => LAB_S,
                LAB_A => LAB_B,
                _ => LAB_A,
            };
            for &w in self.g.neighbors(v) {
                if self.label[w] != 0 {
                    if self.label[w] == lab && lab == LAB_S {
                        return false;
                    }
                    if (self.label[w] | lab) == (LAB_A | LAB_B) {
                        return false;
                    }
                    continue;
                }
                let old = self.domain[w];
                if old & forbidden == 0 {
                    continue;
                }
                let new = old & !forbidden;
                if new == 0 {
                    self.set_domain(w, new, false);
                    return false;
                }
                self.set_domain(w, new, false);
                if new.count_ones() == 1 {
                    queue.push((w, new));
                }
            }
            if self.allow_a == 0 || self.allow_b == 0 {
                return false;
            }
        }
        true
    }

    fn next_branch_vertex(&self, cursor: usize) -> Option<(usize, usize)> {
        self.order[cursor..]
            .iter()
            .position(|&v| self.label[v] == 0)
            .map(|off| (self.order[cursor + off], cursor + off + 1))
    }

    fn search(&mut self, cursor: usize) -> Result<bool, OracleError> {
        self.stats.nodes += 1;
        if let Some(budget) = self.budget {
            if self.stats.nodes > budget {
                return Err(OracleError::BudgetExceeded { budget });
            }
        }
        let Some((v, next_cursor)) = self.next_branch_vertex(cursor) else {
            return Ok(self.count_a > 0 && self.count_b > 0);
        };
        for lab in [LAB_S, LAB_A, LAB_B] {
            if self.domain[v] & lab == 0 {
                continue;
            }
            // A/B swap symmetry: while everything assigned so far is S, the
            // first vertex to leave S can be sent to A without loss.
            if lab == LAB_B && self.count_a == 0 && self.count_b == 0 {
                continue;
            }
            self.stats.decisions += 1;
            let mark = self.trail.len();
            if self.assign(v, lab) && self.search(next_cursor)? {
                return Ok(true);
            }
            self.undo_to(mark);
        }
        Ok(false)
    }

    fn certificate(&self) -> CutsetCertificate {
        let mut s = Vec::new();
        let mut a = Vec::new();
        let mut b = Vec::new();
        for v in self.g.vertices() {
            match self.label[v] {
                LAB_S => s.push(v),
                LAB_A => a.push(v),
                LAB_B => b.push(v),
                _ => unreachable!("vertex {v} unassigned at a solution"),
            }
        }
        CutsetCertificate::new(s, a, b)
    }
}

/// Certificate for a disconnected graph: `S = ∅`, `A` the first component,
/// `B` the rest.
fn disconnected_certificate(comps: &[Vec<usize>]) -> CutsetCertificate {
    let side_a = comps[0].clone();
    let side_b = comps[1..].iter().flatten().copied().collect();
    CutsetCertificate::new(Vec::new(), side_a, side_b)
}

fn run_search(
    g: &Graph,
    max_s: Option<usize>,
    opts: &SearchOptions,
    carry: SearchStats,
) -> Result<SearchOutcome, OracleError> {
    let mut searcher = Searcher::new(g, max_s, opts.node_budget);
    searcher.stats = carry;
    let found = searcher.search(0)?;
    Ok(SearchOutcome {
        certificate: found.then(|| searcher.certificate()),
        stats: searcher.stats,
    })
}

/// Exhaustive budgeted search for any stable cutset.
pub fn search_stable_cutset(
    g: &Graph,
    opts: &SearchOptions,
) -> Result<SearchOutcome, OracleError> {
    let comps = g.connected_components();
    if comps.len() >= 2 {
        return Ok(SearchOutcome {
            certificate: Some(disconnected_certificate(&comps)),
            stats: SearchStats {
                nodes: 1,
                decisions: 0,
                max_depth: 0,
            },
        });
    }
    if g.n() <= 1 {
        // A single vertex (or nothing) cannot split into two nonempty sides.
        return Ok(SearchOutcome {
            certificate: None,
            stats: SearchStats {
                nodes: 1,
                decisions: 0,
                max_depth: 0,
            },
        });
    }
    run_search(g, None, opts, SearchStats::default())
}

/// Whether `g` has a stable cutset; the certificate if so. Unbudgeted.
pub fn find_stable_cutset(g: &Graph) -> Option<CutsetCertificate> {
    search_stable_cutset(g, &SearchOptions::default())
        .expect("unbudgeted search cannot abort")
        .certificate
}

/// Budgeted search for a stable cutset of size ≤ `k`, of minimum
/// cardinality when one exists. Runs the search with |S| capped at
/// 0, 1, …, k in turn, so the first success is a minimum.
pub fn search_min_stable_cutset(
    g: &Graph,
    k: usize,
    opts: &SearchOptions,
) -> Result<SearchOutcome, OracleError> {
    let comps = g.connected_components();
    if comps.len() >= 2 {
        return Ok(SearchOutcome {
            certificate: Some(disconnected_certificate(&comps)),
            stats: SearchStats {
                nodes: 1,
                decisions: 0,
                max_depth: 0,
            },
        });
    }
    let mut stats = SearchStats::default();
    if g.n() <= 1 {
        stats.nodes = 1;
        return Ok(SearchOutcome {
            certificate: None,
            stats,
        });
    }
    for bound in 0..=k.min(g.n()) {
        let outcome = run_search(g, Some(bound), opts, stats)?;
        stats = outcome.stats;
        if outcome.certificate.is_some() {
            return Ok(outcome);
        }
    }
    Ok(SearchOutcome {
        certificate: None,
        stats,
    })
}

/// Minimum stable cutset of size ≤ `k`, unbudgeted.
pub fn min_stable_cutset(g: &Graph, k: usize) -> Option<CutsetCertificate> {
    search_min_stable_cutset(g, k, &SearchOptions::default())
        .expect("unbudgeted search cannot abort")
        .certificate
}

/// Tests the `|c| + 1` candidate cutsets that make a clique `c`
/// *component-simple*: `S = N(c)` and `S = N(c \ {v})` for each `v ∈ c`
/// in ascending order. Returns a certificate for the first candidate that
/// is stable and disconnects `g`.
pub fn has_c_simple_cutset(
    g: &Graph,
    c: &[usize],
) -> Result<Option<CutsetCertificate>, OracleError> {
    let mut c = c.to_vec();
    c.sort_unstable();
    c.dedup();
    if !matches!(classify_subset(g, &c), SubsetClass::Clique | SubsetClass::Both) {
        return Err(OracleError::CandidateNotClique);
    }
    let mut candidates = vec![g.set_neighborhood(&c)];
    for &v in &c {
        let rest: Vec<usize> = c.iter().copied().filter(|&u| u != v).collect();
        candidates.push(g.set_neighborhood(&rest));
    }
    for s in candidates {
        if !g.is_stable_set(&s) {
            continue;
        }
        let comps = g.components_avoiding(&s);
        if comps.len() >= 2 {
            let side_a = comps[0].clone();
            let side_b: Vec<usize> = comps[1..].iter().flatten().copied().collect();
            return Ok(Some(CutsetCertificate::new(s, side_a, side_b)));
        }
    }
    Ok(None)
}

/// Lexicographic combination stepper: advances `combo` to the next
/// `t`-subset of `0..n`, returning false when exhausted.
fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let t = combo.len();
    let mut i = t;
    while i > 0 {
        i -= 1;
        if combo[i] < n - (t - i) {
            combo[i] += 1;
            for j in (i + 1)..t {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn set_masks(sys: &SetSystem) -> Result<Vec<u64>, OracleError> {
    if sys.n > 63 {
        return Err(OracleError::GroundSetTooLarge { n: sys.n });
    }
    Ok(sys
        .sets
        .iter()
        .map(|set| set.iter().fold(0u64, |m, &e| m | (1 << e)))
        .collect())
}

/// Exhaustive Hitting Set: the first (sizes ascending, then lexicographic)
/// subset of size ≤ k meeting every member set, or `None`.
pub fn solve_hitting_set(sys: &SetSystem) -> Result<Option<Vec<usize>>, OracleError> {
    solve_hitting_set_budgeted(sys, DEFAULT_SUBSET_BUDGET)
}

/// [`solve_hitting_set`] with an explicit candidate budget.
pub fn solve_hitting_set_budgeted(
    sys: &SetSystem,
    budget: u64,
) -> Result<Option<Vec<usize>>, OracleError> {
    let k = sys.k.ok_or(OracleError::MissingBudget)?;
    let masks = set_masks(sys)?;
    let mut examined = 0u64;
    for t in 0..=k.min(sys.n) {
        let mut combo: Vec<usize> = (0..t).collect();
        loop {
            examined += 1;
            if examined > budget {
                return Err(OracleError::BudgetExceeded { budget });
            }
            let chosen = combo.iter().fold(0u64, |m, &e| m | (1 << e));
            if masks.iter().all(|&f| f & chosen != 0) {
                return Ok(Some(combo));
            }
            if !next_combination(&mut combo, sys.n) {
                break;
            }
        }
    }
    Ok(None)
}

/// Exhaustive Multicolored Hitting Set: one element per color class such
/// that every member set is hit, or `None`. An empty color class makes the
/// instance a NO immediately.
pub fn solve_multicolored_hitting_set(
    sys: &SetSystem,
) -> Result<Option<Vec<usize>>, OracleError> {
    solve_multicolored_hitting_set_budgeted(sys, DEFAULT_SUBSET_BUDGET)
}

/// [`solve_multicolored_hitting_set`] with an explicit candidate budget.
pub fn solve_multicolored_hitting_set_budgeted(
    sys: &SetSystem,
    budget: u64,
) -> Result<Option<Vec<usize>>, OracleError> {
    if sys.k.is_none() {
        return Err(OracleError::MissingBudget);
    }
    if sys.coloring.is_none() {
        return Err(OracleError::MissingColoring);
    }
    let masks = set_masks(sys)?;
    let classes = sys.color_classes();
    if classes.iter().any(|class| class.is_empty()) {
        return Ok(None);
    }
    // Odometer over the class product, last class fastest.
    let mut pick = vec![0usize; classes.len()];
    let mut examined = 0u64;
    loop {
        examined += 1;
        if examined > budget {
            return Err(OracleError::BudgetExceeded { budget });
        }
        let chosen = pick
            .iter()
            .zip(&classes)
            .fold(0u64, |m, (&i, class)| m | (1 << class[i]));
        if masks.iter().all(|&f| f & chosen != 0) {
            let mut out: Vec<usize> = pick
                .iter()
                .zip(&classes)
                .map(|(&i, class)| class[i])
                .collect();
            out.sort_unstable();
            return Ok(Some(out));
        }
        let mut pos = classes.len();
        loop {
            if pos == 0 {
                return Ok(None);
            }
            pos -= 1;
            pick[pos] += 1;
            if pick[pos] < classes[pos].len() {
                break;
            }
            pick[pos] = 0;
        }
    }
}

/// Exhaustive Set Splitting over all `2ⁿ` subsets (counting order): the
/// first `S` with every member set split — nonempty intersection with both
/// `S` and its complement — or `None`.
pub fn solve_set_splitting(sys: &SetSystem) -> Result<Option<Vec<usize>>, OracleError> {
    solve_set_splitting_budgeted(sys, DEFAULT_SUBSET_BUDGET)
}

/// [`solve_set_splitting`] with an explicit candidate budget.
pub fn solve_set_splitting_budgeted(
    sys: &SetSystem,
    budget: u64,
) -> Result<Option<Vec<usize>>, OracleError> {
    let masks = set_masks(sys)?;
    let total: u64 = 1u64 << sys.n;
    let mut examined = 0u64;
    let mut mask = 0u64;
    while mask < total {
        examined += 1;
        if examined > budget {
            return Err(OracleError::BudgetExceeded { budget });
        }
        if masks.iter().all(|&f| mask & f != 0 && (mask & f) != f) {
            let set: Vec<usize> = (0..sys.n).filter(|&e| mask & (1 << e) != 0).collect();
            return Ok(Some(set));
        }
        mask += 1;
    }
    Ok(None)
}
