//! Green's relations and preorders, computed as reachability in the
//! one-sided Cayley graphs (every element acts as a multiplier, so no
//! generating set is involved).

use crate::semigroup::{ElementId, FiniteSemigroup};
use crate::util::{BitMatrix, Partition, UnionFind};

/// Which Green preorder a query refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preorder {
    L,
    R,
    J,
}

/// Equivalences (L, R, H, D, J) and preorders (<=_L, <=_R, <=_J) of a
/// finite semigroup.
///
/// `a <=_L b` iff `S^1 a` is contained in `S^1 b`, i.e. `a` is reachable
/// from `b` by left multiplications; dually for R; J uses both sides.
/// On a finite semigroup D and J coincide; both are computed and compared
/// rather than assumed (`d_equals_j`).
#[derive(Debug, Clone)]
pub struct GreenData {
    order: usize,
    pub l: Partition,
    pub r: Partition,
    pub h: Partition,
    pub d: Partition,
    pub j: Partition,
    l_reach: BitMatrix,
    r_reach: BitMatrix,
    j_reach: BitMatrix,
    pub d_equals_j: bool,
}

impl GreenData {
    pub fn order(&self) -> usize {
        self.order
    }

    /// `a <=_L b` (i.e. `S^1 a` a subset of `S^1 b`).
    pub fn leq_l(&self, a: ElementId, b: ElementId) -> bool {
        self.l_reach.get(self.l.class_of(b), self.l.class_of(a))
    }

    pub fn leq_r(&self, a: ElementId, b: ElementId) -> bool {
        self.r_reach.get(self.r.class_of(b), self.r.class_of(a))
    }

    pub fn leq_j(&self, a: ElementId, b: ElementId) -> bool {
        self.j_reach.get(self.j.class_of(b), self.j.class_of(a))
    }

    pub fn leq(&self, which: Preorder, a: ElementId, b: ElementId) -> bool {
        match which {
            Preorder::L => self.leq_l(a, b),
            Preorder::R => self.leq_r(a, b),
            Preorder::J => self.leq_j(a, b),
        }
    }

    pub fn l_class(&self, a: ElementId) -> &[ElementId] {
        self.l.class(self.l.class_of(a))
    }

    pub fn r_class(&self, a: ElementId) -> &[ElementId] {
        self.r.class(self.r.class_of(a))
    }

    pub fn h_class(&self, a: ElementId) -> &[ElementId] {
        self.h.class(self.h.class_of(a))
    }

    pub fn j_class(&self, a: ElementId) -> &[ElementId] {
        self.j.class(self.j.class_of(a))
    }

    /// L-classes whose principal left ideal is minimal under inclusion.
    pub fn minimal_l_classes(&self) -> Vec<usize> {
        minimal_classes(&self.l_reach, self.l.len())
    }

    pub fn minimal_r_classes(&self) -> Vec<usize> {
        minimal_classes(&self.r_reach, self.r.len())
    }

    /// The unique minimal J-class id (every class reaches it).
    pub fn minimal_j_class(&self) -> usize {
        let mins = minimal_classes(&self.j_reach, self.j.len());
        debug_assert_eq!(mins.len(), 1, "finite semigroups have a unique minimal J-class");
        mins[0]
    }
}

fn minimal_classes(reach: &BitMatrix, n_classes: usize) -> Vec<usize> {
    (0..n_classes)
        .filter(|&c| reach.row_ones(c).all(|c2| c2 == c))
        .collect()
}

/// Strongly connected components of the graph on `0..n` whose out-neighbors
/// are given by `neighbor(x, k)` for `k < out_degree`, plus class-level
/// reachability (row `c` = classes reachable from `c`, including `c`).
fn scc_reach(
    n: usize,
    out_degree: usize,
    neighbor: impl Fn(usize, usize) -> usize,
) -> (Partition, BitMatrix) {
    // Iterative Tarjan; components are emitted sinks-first, which is exactly
    // the order needed to accumulate reachability below.
    const UNSEEN: usize = usize::MAX;
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<usize> = Vec::new();
    let mut comp = vec![UNSEEN; n];
    let mut n_comp = 0usize;
    let mut counter = 0usize;
    let mut call: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        call.push((root, 0));
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(&mut (v, ref mut k)) = call.last_mut() {
            if *k < out_degree {
                let w = neighbor(v, *k);
                *k += 1;
                if index[w] == UNSEEN {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                if low[v] == index[v] {
                    loop {
                        let w = stack.pop().expect("tarjan stack underflow");
                        on_stack[w] = false;
                        comp[w] = n_comp;
                        if w == v {
                            break;
                        }
                    }
                    n_comp += 1;
                }
                call.pop();
                if let Some(&(u, _)) = call.last() {
                    low[u] = low[u].min(low[v]);
                }
            }
        }
    }

    // Component ids are assigned sinks-first; accumulate reachability in
    // that same order so successors are always finished first.
    let mut adj = BitMatrix::new(n_comp);
    for v in 0..n {
        for k in 0..out_degree {
            let w = neighbor(v, k);
            if comp[v] != comp[w] {
                adj.set(comp[v], comp[w]);
            }
        }
    }
    let mut reach = BitMatrix::new(n_comp);
    for c in 0..n_comp {
        reach.set(c, c);
        let succs: Vec<usize> = adj.row_ones(c).collect();
        for c2 in succs {
            debug_assert!(c2 < c, "successor components finish first under tarjan");
            reach.or_row(c, c2);
        }
    }
    // The partition renumbers classes by first element occurrence, so remap
    // the reachability rows from Tarjan component ids to partition ids.
    let part = Partition::from_labels(&comp);
    let mut perm = vec![0usize; n_comp];
    for v in 0..n {
        perm[comp[v]] = part.class_of(v);
    }
    let mut remapped = BitMatrix::new(n_comp);
    for c in 0..n_comp {
        for c2 in reach.row_ones(c) {
            remapped.set(perm[c], perm[c2]);
        }
    }
    (part, remapped)
}

/// Computes all Green data for `s`.
pub fn green(s: &FiniteSemigroup) -> GreenData {
    let n = s.order();
    if n == 0 {
        let empty = Partition::from_labels(&[]);
        return GreenData {
            order: 0,
            l: empty.clone(),
            r: empty.clone(),
            h: empty.clone(),
            d: empty.clone(),
            j: empty,
            l_reach: BitMatrix::new(0),
            r_reach: BitMatrix::new(0),
            j_reach: BitMatrix::new(0),
            d_equals_j: true,
        };
    }
    // Right Cayley graph: x -> x*s.  Left: x -> s*x.  J: both.
    let (r, r_reach) = scc_reach(n, n, |x, k| s.mul(x, k));
    let (l, l_reach) = scc_reach(n, n, |x, k| s.mul(k, x));
    let (j, j_reach) = scc_reach(n, 2 * n, |x, k| {
        if k < n {
            s.mul(x, k)
        } else {
            s.mul(k - n, x)
        }
    });

    // H = L meet R, via paired class labels.
    let h_labels: Vec<usize> = (0..n)
        .map(|x| l.class_of(x) * r.len() + r.class_of(x))
        .collect();
    let h = Partition::from_labels(&h_labels);

    // D = L join R, via union-find over class memberships.
    let mut uf = UnionFind::new(n);
    for part in [&l, &r] {
        for class in part.classes() {
            for w in class.windows(2) {
                uf.union(w[0], w[1]);
            }
        }
    }
    let d = Partition::from_union_find(&mut uf, n);
    let d_equals_j = d == j;
    debug_assert!(d_equals_j, "D and J must coincide on finite semigroups");

    GreenData { order: n, l, r, h, d, j, l_reach, r_reach, j_reach, d_equals_j }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    /// Brute-force oracle: principal ideals by direct enumeration.
    fn principal_left(s: &FiniteSemigroup, a: ElementId) -> Vec<bool> {
        let mut in_set = vec![false; s.order()];
        in_set[a] = true;
        for x in s.elements() {
            in_set[s.mul(x, a)] = true;
        }
        in_set
    }

    fn principal_right(s: &FiniteSemigroup, a: ElementId) -> Vec<bool> {
        let mut in_set = vec![false; s.order()];
        in_set[a] = true;
        for x in s.elements() {
            in_set[s.mul(a, x)] = true;
        }
        in_set
    }

    fn principal_two_sided(s: &FiniteSemigroup, a: ElementId) -> Vec<bool> {
        // S^1 a S^1 = {a} u Sa u aS u SaS
        let mut in_set = principal_left(s, a);
        for (x, v) in principal_right(s, a).into_iter().enumerate() {
            in_set[x] |= v;
        }
        for x in s.elements() {
            for y in s.elements() {
                in_set[s.mul(s.mul(x, a), y)] = true;
            }
        }
        in_set
    }

    fn check_against_oracle(s: &FiniteSemigroup) {
        let g = green(s);
        assert!(g.d_equals_j);
        for a in s.elements() {
            let la = principal_left(s, a);
            let ra = principal_right(s, a);
            let ja = principal_two_sided(s, a);
            for b in s.elements() {
                assert_eq!(g.leq_l(b, a), la[b], "leq_l({b},{a})");
                assert_eq!(g.leq_r(b, a), ra[b], "leq_r({b},{a})");
                assert_eq!(g.leq_j(b, a), ja[b], "leq_j({b},{a})");
                let l_rel = g.leq_l(a, b) && g.leq_l(b, a);
                assert_eq!(g.l.same(a, b), l_rel);
                let r_rel = g.leq_r(a, b) && g.leq_r(b, a);
                assert_eq!(g.r.same(a, b), r_rel);
                assert_eq!(g.h.same(a, b), l_rel && r_rel);
            }
        }
    }

    #[test]
    fn oracle_agreement_on_fixtures() {
        for (_, s) in fixtures::suite_fixtures() {
            check_against_oracle(&s);
        }
    }

    #[test]
    fn oracle_agreement_on_random_monoids() {
        for seed in 0..20 {
            let (s, _) = crate::semigroup::random_transformation_monoid(4, 2, seed).unwrap();
            check_against_oracle(&s);
        }
    }

    #[test]
    fn t2_classes() {
        let t2 = fixtures::t2();
        let g = green(&t2);
        let c0 = t2.element_by_label("c0").unwrap();
        let c1 = t2.element_by_label("c1").unwrap();
        let id = t2.element_by_label("id").unwrap();
        let sw = t2.element_by_label("s").unwrap();
        // units {id, s} form one H-class; constants form one R-class split
        // into two L-classes
        assert!(g.h.same(id, sw));
        assert!(g.r.same(c0, c1));
        assert!(!g.l.same(c0, c1));
        assert!(g.j.same(c0, c1));
        assert!(!g.j.same(id, c0));
        assert_eq!(g.j.len(), 2);
    }

    #[test]
    fn group_is_a_single_h_class() {
        let g = green(&fixtures::z2());
        assert!(g.h.is_universal());
        assert!(g.j.is_universal());
    }

    #[test]
    fn n3_is_j_trivial() {
        let g = green(&fixtures::n3());
        assert!(g.j.is_trivial());
        assert!(g.l.is_trivial());
        assert!(g.h.is_trivial());
        // 0 <= a <= 1 in all preorders
        assert!(g.leq_l(2, 1) && !g.leq_l(1, 2));
        assert!(g.leq_j(2, 0) && g.leq_j(1, 0));
    }

    #[test]
    fn minimal_classes_of_rz2_1() {
        let g = green(&fixtures::rz2_1());
        // kernel {r1, r2}: two minimal L-classes, one minimal R-class
        assert_eq!(g.minimal_l_classes().len(), 2);
        assert_eq!(g.minimal_r_classes().len(), 1);
        assert_eq!(g.j.class(g.minimal_j_class()), &[0, 1]);
    }
}
