//! Finite right acts over a finite semigroup, their congruences, and
//! generating sets.
//!
//! An act is a carrier `{0,..,carrier-1}` with an action `a * s` satisfying
//! `(a s) t = a (s t)`. The universal right congruence of a semigroup is the
//! universal congruence of the semigroup acting on itself.

use thiserror::Error;

use crate::semigroup::{ElementId, FiniteSemigroup};
use crate::structure::green::GreenData;
use crate::util::{Partition, UnionFind};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ActError {
    #[error("action row {row} has length {len}, expected {expected}")]
    BadShape { row: usize, len: usize, expected: usize },
    #[error("action value {value} at ({row},{col}) out of range for carrier {carrier}")]
    Range { row: usize, col: usize, value: usize, carrier: usize },
    #[error("not an act: ({a} * {s}) * {t} = {left} but {a} * ({s}{t}) = {right}")]
    NotAnAct { a: usize, s: usize, t: usize, left: usize, right: usize },
    #[error("not a right ideal: {element} * {s} = {product} escapes the set")]
    NotARightIdeal { element: usize, s: usize, product: usize },
    #[error("partition is not a congruence: {a} ~ {b} but {a}*{s} and {b}*{s} are apart")]
    NotACongruence { a: usize, b: usize, s: usize },
    #[error("action is ill defined on H-classes: {x} H {y} but {x}{s} and {y}{s} are not H-related")]
    IllDefinedAction { x: usize, y: usize, s: usize },
    #[error("point {point} out of range for carrier {carrier}")]
    PointRange { point: usize, carrier: usize },
}

/// A finite right act: a carrier acted on by a semigroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteRightAct {
    carrier: usize,
    semigroup: FiniteSemigroup,
    /// carrier x order, row-major.
    action: Vec<u32>,
}

impl FiniteRightAct {
    /// Validates shape, range, and the act law `(a s) t = a (st)`.
    pub fn new(
        semigroup: FiniteSemigroup,
        carrier: usize,
        action_rows: Vec<Vec<usize>>,
    ) -> Result<Self, ActError> {
        let order = semigroup.order();
        if action_rows.len() != carrier {
            return Err(ActError::BadShape {
                row: action_rows.len(),
                len: action_rows.len(),
                expected: carrier,
            });
        }
        let mut action = Vec::with_capacity(carrier * order);
        for (r, row) in action_rows.iter().enumerate() {
            if row.len() != order {
                return Err(ActError::BadShape { row: r, len: row.len(), expected: order });
            }
            for (c, &v) in row.iter().enumerate() {
                if v >= carrier {
                    return Err(ActError::Range { row: r, col: c, value: v, carrier });
                }
                action.push(v as u32);
            }
        }
        let act = FiniteRightAct { carrier, semigroup, action };
        act.check_act_law()?;
        Ok(act)
    }

    fn from_parts_unchecked(semigroup: FiniteSemigroup, carrier: usize, action: Vec<u32>) -> Self {
        debug_assert_eq!(action.len(), carrier * semigroup.order());
        FiniteRightAct { carrier, semigroup, action }
    }

    pub fn check_act_law(&self) -> Result<(), ActError> {
        for a in 0..self.carrier {
            for s in self.semigroup.elements() {
                let a_s = self.act(a, s);
                for t in self.semigroup.elements() {
                    let left = self.act(a_s, t);
                    let right = self.act(a, self.semigroup.mul(s, t));
                    if left != right {
                        return Err(ActError::NotAnAct { a, s, t, left, right });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn carrier(&self) -> usize {
        self.carrier
    }

    pub fn semigroup(&self) -> &FiniteSemigroup {
        &self.semigroup
    }

    pub fn points(&self) -> std::ops::Range<usize> {
        0..self.carrier
    }

    #[inline]
    pub fn act(&self, a: usize, s: ElementId) -> usize {
        self.action[a * self.semigroup.order() + s] as usize
    }

    pub fn action_rows(&self) -> Vec<Vec<usize>> {
        (0..self.carrier)
            .map(|a| self.semigroup.elements().map(|s| self.act(a, s)).collect())
            .collect()
    }
}

/// The semigroup acting on itself by right multiplication.
pub fn act_of_semigroup(s: &FiniteSemigroup) -> FiniteRightAct {
    let n = s.order();
    let mut action = Vec::with_capacity(n * n);
    for a in 0..n {
        for x in 0..n {
            action.push(s.mul(a, x) as u32);
        }
    }
    FiniteRightAct::from_parts_unchecked(s.clone(), n, action)
}

/// A right ideal of `s` as a right act. The member list is deduplicated and
/// sorted; point `i` of the act is the `i`-th member.
pub fn act_of_right_ideal(
    s: &FiniteSemigroup,
    members: &[ElementId],
) -> Result<(FiniteRightAct, Vec<ElementId>), ActError> {
    let members = crate::util::sorted_dedup(members);
    let mut back = vec![usize::MAX; s.order()];
    for (i, &m) in members.iter().enumerate() {
        if m >= s.order() {
            return Err(ActError::PointRange { point: m, carrier: s.order() });
        }
        back[m] = i;
    }
    let mut action = Vec::with_capacity(members.len() * s.order());
    for &m in &members {
        for x in s.elements() {
            let p = s.mul(m, x);
            if back[p] == usize::MAX {
                return Err(ActError::NotARightIdeal { element: m, s: x, product: p });
            }
            action.push(back[p] as u32);
        }
    }
    Ok((
        FiniteRightAct::from_parts_unchecked(s.clone(), members.len(), action),
        members,
    ))
}

/// The diagonal act on S x S: `(a, b) * s = (as, bs)`. Pair `(a, b)` is
/// point `a * order + b` (row-major).
pub fn diagonal_act(s: &FiniteSemigroup) -> FiniteRightAct {
    let n = s.order();
    let mut action = Vec::with_capacity(n * n * n);
    for a in 0..n {
        for b in 0..n {
            for x in 0..n {
                action.push((s.mul(a, x) * n + s.mul(b, x)) as u32);
            }
        }
    }
    FiniteRightAct::from_parts_unchecked(s.clone(), n * n, action)
}

/// The act on the H-classes inside an R-class: `[x]_H * s = [xs]_H`.
/// Well-definedness is re-verified; points are H-classes ordered by least
/// member, returned alongside the act.
pub fn r_class_mod_h_act(
    s: &FiniteSemigroup,
    g: &GreenData,
    r_class: &[ElementId],
) -> Result<(FiniteRightAct, Vec<Vec<ElementId>>), ActError> {
    let r_class = crate::util::sorted_dedup(r_class);
    // H-classes inside the R-class, ordered by least member (which is the
    // order classes are discovered scanning the sorted member list).
    let mut h_ids: Vec<usize> = Vec::new();
    for &x in &r_class {
        let h = g.h.class_of(x);
        if !h_ids.contains(&h) {
            h_ids.push(h);
        }
    }
    let classes: Vec<Vec<ElementId>> = h_ids.iter().map(|&h| g.h.class(h).to_vec()).collect();
    let point_of = |x: ElementId| h_ids.iter().position(|&h| h == g.h.class_of(x));
    let mut action = Vec::with_capacity(classes.len() * s.order());
    for class in &classes {
        for t in s.elements() {
            // all members must land in one H-class, which must be in the R-class
            let first = s.mul(class[0], t);
            let target = point_of(first).ok_or(ActError::IllDefinedAction {
                x: class[0],
                y: class[0],
                s: t,
            })?;
            for &x in class.iter().skip(1) {
                let other = s.mul(x, t);
                if point_of(other) != Some(target) {
                    return Err(ActError::IllDefinedAction { x: class[0], y: x, s: t });
                }
            }
            action.push(target as u32);
        }
    }
    Ok((
        FiniteRightAct::from_parts_unchecked(s.clone(), classes.len(), action),
        classes,
    ))
}

/// A congruence on an act: a partition closed under the action.
pub type ActCongruence = Partition;

/// The congruence generated by a set of pairs: union-find closure that
/// re-merges `(a s, b s)` for every merged pair `(a, b)` and every `s`.
pub fn generated_congruence(act: &FiniteRightAct, pairs: &[(usize, usize)]) -> ActCongruence {
    let mut uf = UnionFind::new(act.carrier());
    let mut queue: Vec<(usize, usize)> = pairs.to_vec();
    while let Some((a, b)) = queue.pop() {
        if !uf.union(a, b) {
            continue;
        }
        for s in act.semigroup().elements() {
            let (x, y) = (act.act(a, s), act.act(b, s));
            if uf.find(x) != uf.find(y) {
                queue.push((x, y));
            }
        }
    }
    Partition::from_union_find(&mut uf, act.carrier())
}

/// Checks whether a partition is a congruence of the act; returns the first
/// violating (a, b, s) otherwise.
pub fn verify_congruence(
    act: &FiniteRightAct,
    partition: &Partition,
) -> Result<(), ActError> {
    for class in partition.classes() {
        for w in class.windows(2) {
            let (a, b) = (w[0], w[1]);
            for s in act.semigroup().elements() {
                if !partition.same(act.act(a, s), act.act(b, s)) {
                    return Err(ActError::NotACongruence { a, b, s });
                }
            }
        }
    }
    Ok(())
}

/// The quotient act by a congruence; point `i` of the quotient is class `i`.
pub fn quotient_act(
    act: &FiniteRightAct,
    congruence: &Partition,
) -> Result<FiniteRightAct, ActError> {
    verify_congruence(act, congruence)?;
    let k = congruence.len();
    let order = act.semigroup().order();
    let mut action = Vec::with_capacity(k * order);
    for c in 0..k {
        let rep = congruence.class(c)[0];
        for s in act.semigroup().elements() {
            action.push(congruence.class_of(act.act(rep, s)) as u32);
        }
    }
    Ok(FiniteRightAct::from_parts_unchecked(act.semigroup().clone(), k, action))
}

/// The set reached from `start` by acting with S^1 (i.e. start u start*S).
pub fn orbit_closure(act: &FiniteRightAct, start: &[usize]) -> Vec<usize> {
    let mut in_set = vec![false; act.carrier()];
    for &a in start {
        in_set[a] = true;
        for s in act.semigroup().elements() {
            in_set[act.act(a, s)] = true;
        }
    }
    (0..act.carrier()).filter(|&a| in_set[a]).collect()
}

/// Whether `u` generates the act: `U S^1` equals the whole carrier.
pub fn is_generating_set(act: &FiniteRightAct, u: &[usize]) -> bool {
    orbit_closure(act, u).len() == act.carrier()
}

/// Result of a minimum-generating-set computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinGenResult {
    pub members: Vec<usize>,
    /// True if found by exhaustive search (guaranteed minimum), false if by
    /// the greedy fallback (a generating set, not necessarily minimum).
    pub exact: bool,
}

/// Carrier size up to which the completion search is exhaustive.
const EXHAUSTIVE_CARRIER_LIMIT: usize = 64;

/// Cap on the number of candidate subsets the exhaustive completion may
/// test before handing over to the greedy cover.
const COMPLETION_SEARCH_BUDGET: isize = 50_000;

/// A minimum generating set of the act.
///
/// Elements outside `carrier * S` are in every generating set (necessary).
/// If the necessary elements do not already generate, the completion is
/// found exhaustively for carriers up to 64 (minimum size, lexicographically
/// least among minima) while the subset search stays within budget, and
/// greedily otherwise (`exact = false`).
pub fn min_generating_set(act: &FiniteRightAct) -> MinGenResult {
    let n = act.carrier();
    // a is necessary iff no *other* point maps onto it: a generating set U
    // not containing a would need a = u s with u != a.
    let mut reached_from_other = vec![false; n];
    for b in 0..n {
        for s in act.semigroup().elements() {
            let p = act.act(b, s);
            if p != b {
                reached_from_other[p] = true;
            }
        }
    }
    let necessary: Vec<usize> = (0..n).filter(|&a| !reached_from_other[a]).collect();
    if is_generating_set(act, &necessary) {
        return MinGenResult { members: necessary, exact: true };
    }
    let candidates: Vec<usize> = (0..n).filter(|&a| reached_from_other[a]).collect();
    if n <= EXHAUSTIVE_CARRIER_LIMIT {
        let mut budget = COMPLETION_SEARCH_BUDGET;
        for extra in 1..=candidates.len() {
            let mut choice = Vec::new();
            if let Some(members) =
                search_completion(act, &necessary, &candidates, extra, 0, &mut choice, &mut budget)
            {
                return MinGenResult { members, exact: true };
            }
            if budget < 0 {
                break;
            }
        }
    }
    // Greedy: repeatedly add the candidate covering the most new points,
    // ties to the least index.
    let mut members = necessary;
    let mut covered = vec![false; n];
    for &a in orbit_closure(act, &members).iter() {
        covered[a] = true;
    }
    while covered.iter().any(|&c| !c) {
        let mut best: Option<(usize, usize)> = None; // (gain, candidate)
        for &c in &candidates {
            if members.contains(&c) {
                continue;
            }
            let mut new_points = std::collections::HashSet::new();
            if !covered[c] {
                new_points.insert(c);
            }
            for s in act.semigroup().elements() {
                let p = act.act(c, s);
                if !covered[p] {
                    new_points.insert(p);
                }
            }
            let gain = new_points.len();
            if best.is_none_or(|(bg, _)| gain > bg) {
                best = Some((gain, c));
            }
        }
        let (_, c) = best.expect("uncovered points remain, so some candidate gains");
        members.push(c);
        covered[c] = true;
        for s in act.semigroup().elements() {
            covered[act.act(c, s)] = true;
        }
    }
    members.sort();
    MinGenResult { members, exact: false }
}

fn search_completion(
    act: &FiniteRightAct,
    necessary: &[usize],
    candidates: &[usize],
    extra: usize,
    from: usize,
    choice: &mut Vec<usize>,
    budget: &mut isize,
) -> Option<Vec<usize>> {
    if choice.len() == extra {
        *budget -= 1;
        if *budget < 0 {
            return None;
        }
        let mut members: Vec<usize> = necessary.iter().chain(choice.iter()).copied().collect();
        members.sort();
        members.dedup();
        if is_generating_set(act, &members) {
            return Some(members);
        }
        return None;
    }
    for idx in from..candidates.len() {
        choice.push(candidates[idx]);
        if let Some(found) =
            search_completion(act, necessary, candidates, extra, idx + 1, choice, budget)
        {
            return Some(found);
        }
        choice.pop();
        if *budget < 0 {
            return None;
        }
    }
    None
}
