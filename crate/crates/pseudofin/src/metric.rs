//! The generating-set metric on a finite right act.
//!
//! A set of pairs X induces, for each semigroup element s (or the formal
//! identity), undirected steps between `x s` and `y s` for `(x, y)` in X.
//! The distance between two points is the length of a shortest such chain,
//! and the X-diameter of the act is the supremum over all pairs — finite
//! exactly when the congruence generated by X is universal.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::acts::{self, FiniteRightAct};
use crate::semigroup::{ElementId, FiniteSemigroup};
use crate::structure::green::green;
use crate::structure::kernel::kernel;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MetricError {
    #[error("generator point {point} out of range for carrier {carrier}")]
    PointRange { point: usize, carrier: usize },
    #[error("step graph needs {needed} edge slots, budget is {budget}")]
    BudgetExceeded { needed: u64, budget: u64 },
    #[error("operation requires a monoid")]
    NotAMonoid,
    #[error(transparent)]
    Decomposition(#[from] crate::structure::kernel::DecompositionError),
}

/// A generating set for the universal congruence: either a set of points
/// used symmetrically (all pairs from X x X) or an explicit pair list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", content = "members", rename_all = "snake_case")]
pub enum GenSet {
    Symmetric(Vec<usize>),
    Pairs(Vec<(usize, usize)>),
}

impl GenSet {
    /// Distinct undirected pairs (x, y) with x != y.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        match self {
            GenSet::Symmetric(members) => {
                let m = crate::util::sorted_dedup(members);
                let mut out = Vec::new();
                for i in 0..m.len() {
                    for j in i + 1..m.len() {
                        out.push((m[i], m[j]));
                    }
                }
                out
            }
            GenSet::Pairs(pairs) => {
                let mut out: Vec<(usize, usize)> = pairs
                    .iter()
                    .filter(|(x, y)| x != y)
                    .map(|&(x, y)| if x <= y { (x, y) } else { (y, x) })
                    .collect();
                out.sort();
                out.dedup();
                out
            }
        }
    }

    /// Whether the unordered pair {x, y} belongs to the induced pair set.
    pub fn contains_pair(&self, x: usize, y: usize) -> bool {
        match self {
            GenSet::Symmetric(members) => members.contains(&x) && members.contains(&y),
            GenSet::Pairs(pairs) => pairs.contains(&(x, y)) || pairs.contains(&(y, x)),
        }
    }

    pub fn max_point(&self) -> Option<usize> {
        match self {
            GenSet::Symmetric(members) => members.iter().copied().max(),
            GenSet::Pairs(pairs) => pairs.iter().map(|&(x, y)| x.max(y)).max(),
        }
    }
}

/// Work limits for step-graph construction and subset searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MetricBudget {
    /// Maximum edge slots when building one step graph.
    pub max_edges: u64,
    /// Maximum accumulated edge slots across a subset search.
    pub max_search: u64,
}

impl Default for MetricBudget {
    fn default() -> Self {
        MetricBudget { max_edges: 10_000_000, max_search: 10_000_000 }
    }
}

/// One step of a chain: the point left behind is `x * s`, the point reached
/// is `y * s`; `s = None` is the formal identity (act trivially).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub x: usize,
    pub y: usize,
    pub s: Option<ElementId>,
}

/// Undirected labelled step graph of (act, genset).
struct StepGraph {
    carrier: usize,
    edges: Vec<Step>,
    /// adjacency: (neighbor, edge index)
    adj: Vec<Vec<(u32, u32)>>,
}

impl StepGraph {
    fn build(
        act: &FiniteRightAct,
        genset: &GenSet,
        budget: &MetricBudget,
    ) -> Result<Self, MetricError> {
        if let Some(p) = genset.max_point() {
            if p >= act.carrier() {
                return Err(MetricError::PointRange { point: p, carrier: act.carrier() });
            }
        }
        let pairs = genset.pairs();
        let slots = pairs.len() as u64 * (act.semigroup().order() as u64 + 1);
        if slots > budget.max_edges {
            return Err(MetricError::BudgetExceeded { needed: slots, budget: budget.max_edges });
        }
        let mut edges = Vec::new();
        let mut adj = vec![Vec::new(); act.carrier()];
        let push_edge = |edges: &mut Vec<Step>, adj: &mut Vec<Vec<(u32, u32)>>, u: usize, v: usize, step: Step| {
            if u == v {
                return;
            }
            let id = edges.len() as u32;
            edges.push(step);
            adj[u].push((v as u32, id));
            adj[v].push((u as u32, id));
        };
        for &(x, y) in &pairs {
            push_edge(&mut edges, &mut adj, x, y, Step { x, y, s: None });
            for s in act.semigroup().elements() {
                let (u, v) = (act.act(x, s), act.act(y, s));
                push_edge(&mut edges, &mut adj, u, v, Step { x, y, s: Some(s) });
            }
        }
        Ok(StepGraph { carrier: act.carrier(), edges, adj })
    }

    /// BFS distances from `src`; `u32::MAX` marks unreachable points.
    fn bfs(&self, src: usize) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.carrier];
        dist[src] = 0;
        let mut queue = std::collections::VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            for &(v, _) in &self.adj[u] {
                let v = v as usize;
                if dist[v] == u32::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// BFS with parent edges for path extraction.
    fn bfs_parents(&self, src: usize) -> (Vec<u32>, Vec<Option<(u32, u32)>>) {
        let mut dist = vec![u32::MAX; self.carrier];
        let mut parent: Vec<Option<(u32, u32)>> = vec![None; self.carrier]; // (prev node, edge)
        dist[src] = 0;
        let mut queue = std::collections::VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            for &(v, e) in &self.adj[u] {
                let v_us = v as usize;
                if dist[v_us] == u32::MAX {
                    dist[v_us] = dist[u] + 1;
                    parent[v_us] = Some((u as u32, e));
                    queue.push_back(v_us);
                }
            }
        }
        (dist, parent)
    }

    /// Shortest chain from `a` to `b` as oriented steps, if reachable.
    fn path(&self, act: &FiniteRightAct, a: usize, b: usize) -> Option<Vec<Step>> {
        let (dist, parent) = self.bfs_parents(a);
        if dist[b] == u32::MAX {
            return None;
        }
        let mut rev: Vec<Step> = Vec::with_capacity(dist[b] as usize);
        let mut cur = b;
        while cur != a {
            let (prev, e) = parent[cur].expect("reached node has a parent");
            let step = self.edges[e as usize];
            let from = prev as usize;
            // orient so that `from` = x * s and `cur` = y * s
            let apply = |p: usize| step.s.map_or(p, |s| act.act(p, s));
            let oriented = if apply(step.x) == from && apply(step.y) == cur {
                step
            } else {
                debug_assert_eq!(apply(step.y), from);
                debug_assert_eq!(apply(step.x), cur);
                Step { x: step.y, y: step.x, s: step.s }
            };
            rev.push(oriented);
            cur = from;
        }
        rev.reverse();
        Some(rev)
    }
}

/// Extremal pair and shortest chain realizing the diameter.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiameterWitness {
    pub pair: (usize, usize),
    pub sequence: Vec<Step>,
}

/// All-pairs distances for (act, genset).
#[derive(Debug, Clone)]
pub struct DiameterReport {
    carrier: usize,
    dist: Vec<u32>,
    /// None when the generating set does not generate (some pair is
    /// unreachable, so the diameter is infinite).
    pub diameter: Option<u32>,
    /// Present iff the diameter is finite and the carrier is nonempty:
    /// the lexicographically least extremal pair and one shortest chain.
    pub witness: Option<DiameterWitness>,
    /// A pair at infinite distance, when not generating.
    pub disconnected_pair: Option<(usize, usize)>,
    pub genset: GenSet,
}

impl DiameterReport {
    pub fn carrier(&self) -> usize {
        self.carrier
    }

    pub fn distance(&self, a: usize, b: usize) -> Option<u32> {
        let d = self.dist[a * self.carrier + b];
        (d != u32::MAX).then_some(d)
    }
}

pub fn distance_matrix(act: &FiniteRightAct, genset: &GenSet) -> Result<DiameterReport, MetricError> {
    distance_matrix_with_budget(act, genset, &MetricBudget::default())
}

pub fn distance_matrix_with_budget(
    act: &FiniteRightAct,
    genset: &GenSet,
    budget: &MetricBudget,
) -> Result<DiameterReport, MetricError> {
    let graph = StepGraph::build(act, genset, budget)?;
    let n = act.carrier();
    let mut dist = vec![u32::MAX; n * n];
    let mut diameter: u32 = 0;
    let mut extremal: Option<(usize, usize)> = None;
    let mut disconnected: Option<(usize, usize)> = None;
    for a in 0..n {
        let row = graph.bfs(a);
        for (b, &d) in row.iter().enumerate() {
            if d == u32::MAX {
                if disconnected.is_none() {
                    disconnected = Some((a, b));
                }
            } else if d > diameter || extremal.is_none() {
                diameter = d;
                extremal = Some((a, b));
            }
            dist[a * n + b] = d;
        }
    }
    let (diameter, witness) = if n == 0 {
        (Some(0), None)
    } else if let Some((a, b)) = disconnected {
        let _ = (a, b);
        (None, None)
    } else {
        let (a, b) = extremal.expect("nonempty carrier has an extremal pair");
        let sequence = graph.path(act, a, b).expect("connected pair has a path");
        (Some(diameter), Some(DiameterWitness { pair: (a, b), sequence }))
    };
    Ok(DiameterReport {
        carrier: n,
        dist,
        diameter,
        witness,
        disconnected_pair: disconnected,
        genset: genset.clone(),
    })
}

/// Shortest chains from `source` to every point (None = unreachable).
pub fn sequences_from(
    act: &FiniteRightAct,
    genset: &GenSet,
    source: usize,
) -> Result<Vec<Option<Vec<Step>>>, MetricError> {
    let graph = StepGraph::build(act, genset, &MetricBudget::default())?;
    Ok((0..act.carrier()).map(|b| graph.path(act, source, b)).collect())
}

/// One shortest chain between two points, if any.
pub fn sequence(
    act: &FiniteRightAct,
    genset: &GenSet,
    a: usize,
    b: usize,
) -> Result<Option<Vec<Step>>, MetricError> {
    let graph = StepGraph::build(act, genset, &MetricBudget::default())?;
    Ok(graph.path(act, a, b))
}

/// Whether the congruence generated by the pair set is universal. This goes
/// through the union-find congruence closure, independently of the BFS
/// route used for distances.
pub fn is_generating(act: &FiniteRightAct, genset: &GenSet) -> bool {
    let cong = acts::generated_congruence(act, &genset.pairs());
    cong.is_universal()
}

/// Re-validates a chain against the defining conditions: consecutive points
/// agree, every pair used lies in the generating set, endpoints match.
pub fn validate_sequence(
    act: &FiniteRightAct,
    genset: &GenSet,
    a: usize,
    b: usize,
    steps: &[Step],
) -> bool {
    if steps.is_empty() {
        return a == b;
    }
    let apply = |p: usize, s: Option<ElementId>| s.map_or(p, |s| act.act(p, s));
    let mut cur = a;
    for step in steps {
        if !genset.contains_pair(step.x, step.y) {
            return false;
        }
        if apply(step.x, step.s) != cur {
            return false;
        }
        cur = apply(step.y, step.s);
    }
    cur == b
}

/// Checks the metric axioms on a finished report: zero diagonal, symmetry,
/// triangle inequality (with infinities treated as absorbing).
pub fn metric_axioms_ok(report: &DiameterReport) -> bool {
    let n = report.carrier;
    for a in 0..n {
        if report.distance(a, a) != Some(0) {
            return false;
        }
        for b in 0..n {
            if report.distance(a, b) != report.distance(b, a) {
                return false;
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            let Some(dab) = report.distance(a, b) else { continue };
            for c in 0..n {
                let Some(dbc) = report.distance(b, c) else { continue };
                match report.distance(a, c) {
                    Some(dac) if dac <= dab + dbc => {}
                    _ => return false,
                }
            }
        }
    }
    true
}

/// Mode for [`min_diameter`] subset enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    /// Subsets of points used symmetrically (default convention).
    Symmetric,
    /// Subsets of ordered pairs.
    Pairs,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinDiameterResult {
    /// Best generating set found (None if no candidate generates).
    pub genset: Option<GenSet>,
    pub diameter: Option<u32>,
    /// True when the enumeration ran to completion within budget, so the
    /// result is the true minimum with lexicographically least members.
    pub exhausted: bool,
}

/// Minimum X-diameter over candidate sets of size at most `k`, breaking
/// diameter ties by lexicographic order on sorted members.
pub fn min_diameter(
    act: &FiniteRightAct,
    k: usize,
    mode: SearchMode,
) -> Result<MinDiameterResult, MetricError> {
    min_diameter_with_budget(act, k, mode, &MetricBudget::default())
}

pub fn min_diameter_with_budget(
    act: &FiniteRightAct,
    k: usize,
    mode: SearchMode,
    budget: &MetricBudget,
) -> Result<MinDiameterResult, MetricError> {
    let n = act.carrier();
    let universe: Vec<Vec<usize>> = match mode {
        SearchMode::Symmetric => (0..n).map(|x| vec![x]).collect(),
        SearchMode::Pairs => {
            let mut u = Vec::new();
            for x in 0..n {
                for y in 0..n {
                    if x != y {
                        u.push(vec![x, y]);
                    }
                }
            }
            u
        }
    };
    // comparison key: flattened member/pair indices in lexicographic order
    let mut best: Option<(u32, Vec<usize>, GenSet)> = None;
    let mut spent: u64 = 0;
    let mut exhausted = true;

    // enumerate index subsets of `universe` of size 1..=k in (size, lex) order
    let mut stack: Vec<usize> = Vec::new();
    'sizes: for size in 1..=k.min(universe.len()) {
        stack.clear();
        stack.push(0);
        while !stack.is_empty() {
            if stack.len() == size {
                let mut key: Vec<usize> = Vec::new();
                for &i in stack.iter() {
                    key.extend_from_slice(&universe[i]);
                }
                let genset = match mode {
                    SearchMode::Symmetric => GenSet::Symmetric(key.clone()),
                    SearchMode::Pairs => GenSet::Pairs(
                        stack.iter().map(|&i| (universe[i][0], universe[i][1])).collect(),
                    ),
                };
                let cost = genset.pairs().len() as u64 * (act.semigroup().order() as u64 + 1);
                if spent + cost > budget.max_search {
                    exhausted = false;
                    break 'sizes;
                }
                spent += cost;
                let report = distance_matrix_with_budget(act, &genset, budget)?;
                if let Some(d) = report.diameter {
                    let better = match &best {
                        None => true,
                        Some((bd, bk, _)) => d < *bd || (d == *bd && key < *bk),
                    };
                    if better {
                        best = Some((d, key, genset));
                    }
                }
            }
            // advance: descend or increment
            if stack.len() < size && stack.last().unwrap() + 1 < universe.len() {
                let next = stack.last().unwrap() + 1;
                stack.push(next);
                continue;
            }
            while let Some(top) = stack.pop() {
                if top + 1 < universe.len() {
                    stack.push(top + 1);
                    break;
                }
            }
        }
    }
    Ok(match best {
        Some((d, _, genset)) => MinDiameterResult {
            genset: Some(genset),
            diameter: Some(d),
            exhausted,
        },
        None => MinDiameterResult { genset: None, diameter: None, exhausted },
    })
}

/// Right X-diameter data of the semigroup acting on itself.
pub fn right_diameter_report(
    s: &FiniteSemigroup,
    genset: &GenSet,
) -> Result<DiameterReport, MetricError> {
    distance_matrix(&acts::act_of_semigroup(s), genset)
}

/// Left-sided analogue, computed on the opposite semigroup.
pub fn left_diameter_report(
    s: &FiniteSemigroup,
    genset: &GenSet,
) -> Result<DiameterReport, MetricError> {
    distance_matrix(&acts::act_of_semigroup(&s.opposite()), genset)
}

/// Smallest set V (up to `max_size`) such that every `a` satisfies
/// `u a = v` for some u, v in V; candidates are searched in size order then
/// lexicographically.
pub fn smallest_absorbing_set(s: &FiniteSemigroup, max_size: usize) -> Option<Vec<ElementId>> {
    let n = s.order();
    fn is_absorbing(s: &FiniteSemigroup, v: &[ElementId]) -> bool {
        s.elements().all(|a| {
            v.iter().any(|&u| v.binary_search(&s.mul(u, a)).is_ok())
        })
    }
    fn search(
        s: &FiniteSemigroup,
        size: usize,
        from: usize,
        current: &mut Vec<ElementId>,
    ) -> Option<Vec<ElementId>> {
        if current.len() == size {
            return is_absorbing(s, current).then(|| current.clone());
        }
        for x in from..s.order() {
            current.push(x);
            if let Some(found) = search(s, size, x + 1, current) {
                return Some(found);
            }
            current.pop();
        }
        None
    }
    for size in 1..=max_size.min(n) {
        let mut current = Vec::new();
        if let Some(found) = search(s, size, 0, &mut current) {
            return Some(found);
        }
    }
    None
}

/// Checks the absorbing condition for a specific set.
pub fn is_absorbing_set(s: &FiniteSemigroup, v: &[ElementId]) -> bool {
    let v = crate::util::sorted_dedup(v);
    s.elements()
        .all(|a| v.iter().any(|&u| v.binary_search(&s.mul(u, a)).is_ok()))
}

/// Radius-2 witness structure on a monoid: X = {1} u R_e for the
/// least-index kernel idempotent e. Every element reaches 1 in at most two
/// steps, the first one leaving from the identity (which is right
/// invertible): a = 1 a -> e a = (e a) 1 -> 1 1 = 1.
#[derive(Debug, Clone)]
pub struct SpecialRadius2 {
    pub x: Vec<ElementId>,
    pub idempotent: ElementId,
    /// Chain from each element to the identity (empty for the identity).
    pub sequences: Vec<Vec<Step>>,
}

pub fn special_right_radius_2(s: &FiniteSemigroup) -> Result<SpecialRadius2, MetricError> {
    let one = s.identity().ok_or(MetricError::NotAMonoid)?;
    let g = green(s);
    let k = kernel(s, &g)?;
    let e = k
        .rees
        .as_ref()
        .map(|r| r.idempotent)
        .expect("kernel decomposition provides an idempotent");
    let mut x: Vec<ElementId> = g.r_class(e).to_vec();
    if !x.contains(&one) {
        x.push(one);
    }
    x.sort();
    let sequences = s
        .elements()
        .map(|a| {
            if a == one {
                return Vec::new();
            }
            let ea = s.mul(e, a);
            vec![
                Step { x: one, y: e, s: Some(a) },
                Step { x: ea, y: one, s: Some(one) },
            ]
        })
        .collect();
    Ok(SpecialRadius2 { x, idempotent: e, sequences })
}

/// Validates a radius-2 witness: every chain has length at most 2, starts
/// at its element, ends at the identity, uses only pairs from X, and its
/// first left point is right invertible.
pub fn validate_radius_2(s: &FiniteSemigroup, w: &SpecialRadius2) -> bool {
    let Some(one) = s.identity() else { return false };
    let act = acts::act_of_semigroup(s);
    let genset = GenSet::Symmetric(w.x.clone());
    s.elements().all(|a| {
        let seq = &w.sequences[a];
        if seq.len() > 2 {
            return false;
        }
        if !validate_sequence(&act, &genset, a, one, seq) {
            return false;
        }
        match seq.first() {
            None => a == one,
            Some(first) => s.elements().any(|t| s.mul(first.x, t) == one),
        }
    })
}
