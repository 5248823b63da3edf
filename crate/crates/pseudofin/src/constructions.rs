//! Semigroup constructions: Rees matrix products, ideal extensions glued
//! from a sandwich matrix and a pair of actions, and the extension by
//! constants.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::semigroup::{ElementId, FiniteSemigroup};

/// Orders up to this bound get an exhaustive associativity check when a
/// construction cannot guarantee it by algebra alone; larger products are
/// spot-checked on a deterministic sample of triples.
pub const EXHAUSTIVE_ASSOC_LIMIT: usize = 256;
const SAMPLED_TRIPLES: usize = 100_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("index sets and the base semigroup must be nonempty")]
    EmptyDimensions,
    #[error("sandwich matrix must have {rows} rows of length {cols}")]
    SandwichShape { rows: usize, cols: usize },
    #[error("sandwich entry p[{j}][{i}] = {entry} is out of range")]
    SandwichRange { j: usize, i: usize, entry: usize },
    #[error("action table has the wrong shape")]
    ActionShape,
    #[error("action value out of range")]
    ActionRange,
    #[error("sandwich is incompatible with the actions at s={s}, j={j}, i={i}")]
    Compatibility { s: usize, j: usize, i: usize },
    #[error("product is not associative at ({a},{b},{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("element {element} is out of range")]
    ElementRange { element: usize },
    #[error("element {element} is not a product y s with y in Y")]
    NotRightGenerating { element: ElementId },
    #[error("element {element} is not a product s y with y in Y")]
    NotLeftGenerating { element: ElementId },
}

fn fresh_label(used: &mut std::collections::HashSet<String>, base: String) -> String {
    let mut name = base;
    while !used.insert(name.clone()) {
        name.push('\'');
    }
    name
}

/// A Rees matrix semigroup M[T; I, J; P] over a base semigroup T, with
/// elements the triples (i, t, j) and product
/// (i, t, j)(k, v, l) = (i, t p[j][k] v, l).
#[derive(Debug, Clone)]
pub struct ReesProduct {
    pub semigroup: FiniteSemigroup,
    /// coords[m] = (i, t, j) for element m.
    pub coords: Vec<(usize, ElementId, usize)>,
    pub i_size: usize,
    pub j_size: usize,
    pub t_order: usize,
}

impl ReesProduct {
    pub fn index_of(&self, i: usize, t: ElementId, j: usize) -> ElementId {
        (i * self.t_order + t) * self.j_size + j
    }
}

/// Builds M[T; I, J; P] from the sandwich matrix `p` (rows indexed by J,
/// columns by I, entries in T). Associativity holds for any base semigroup.
pub fn rees_matrix(
    t: &FiniteSemigroup,
    i_size: usize,
    j_size: usize,
    p: &[Vec<ElementId>],
) -> Result<ReesProduct, ConstructionError> {
    if i_size == 0 || j_size == 0 || t.order() == 0 {
        return Err(ConstructionError::EmptyDimensions);
    }
    if p.len() != j_size || p.iter().any(|row| row.len() != i_size) {
        return Err(ConstructionError::SandwichShape { rows: j_size, cols: i_size });
    }
    for (j, row) in p.iter().enumerate() {
        for (i, &entry) in row.iter().enumerate() {
            if entry >= t.order() {
                return Err(ConstructionError::SandwichRange { j, i, entry });
            }
        }
    }
    let nt = t.order();
    let order = i_size * nt * j_size;
    let index = |i: usize, g: usize, j: usize| (i * nt + g) * j_size + j;
    let mut coords = Vec::with_capacity(order);
    let mut used = std::collections::HashSet::new();
    let mut labels = Vec::with_capacity(order);
    for i in 0..i_size {
        for g in 0..nt {
            for j in 0..j_size {
                coords.push((i, g, j));
                labels.push(fresh_label(&mut used, format!("({i},{},{j})", t.label(g))));
            }
        }
    }
    let mut table = vec![0u32; order * order];
    for (a, &(i, u, j)) in coords.iter().enumerate() {
        for (b, &(k, v, l)) in coords.iter().enumerate() {
            let mid = t.mul(t.mul(u, p[j][k]), v);
            table[a * order + b] = index(i, mid, l) as u32;
        }
    }
    let semigroup = FiniteSemigroup::from_parts_unchecked(order, table, Some(labels));
    debug_assert!(semigroup.check_associative().is_ok());
    Ok(ReesProduct { semigroup, coords, i_size, j_size, t_order: nt })
}

/// Input data for [`extension`]: a semigroup S (possibly absent), a base
/// semigroup T, index sets I and J given by the shape of the sandwich
/// matrix, a left action of S on I, and a right action of S on J.
#[derive(Debug, Clone)]
pub struct ExtensionSpec {
    pub s: Option<FiniteSemigroup>,
    pub t: FiniteSemigroup,
    /// left_action[s][i] = s * i (an index in I).
    pub left_action: Vec<Vec<usize>>,
    /// right_action[s][j] = j * s (an index in J).
    pub right_action: Vec<Vec<usize>>,
    /// Sandwich entries p[j][i] in T.
    pub p: Vec<Vec<ElementId>>,
}

/// The glued semigroup on S u {1} u (I x T x J). Elements of S keep their
/// indices, the adjoined identity sits at index `s_size`, and the triple
/// (i, t, j) sits at `s_size + 1 + (i |T| + t) |J| + j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extension {
    pub semigroup: FiniteSemigroup,
    pub identity: ElementId,
    pub s_size: usize,
    pub i_size: usize,
    pub j_size: usize,
    pub t_order: usize,
    /// True when associativity was verified over every triple rather than
    /// a random sample.
    pub exhaustive_check: bool,
}

impl Extension {
    pub fn triple_index(&self, i: usize, t: ElementId, j: usize) -> ElementId {
        self.s_size + 1 + (i * self.t_order + t) * self.j_size + j
    }

    /// Inverse of [`Self::triple_index`] for elements in the triple block.
    pub fn triple_of(&self, m: ElementId) -> Option<(usize, ElementId, usize)> {
        let base = self.s_size + 1;
        if m < base {
            return None;
        }
        let r = m - base;
        let j = r % self.j_size;
        let t = (r / self.j_size) % self.t_order;
        let i = r / (self.j_size * self.t_order);
        Some((i, t, j))
    }
}

/// Glues S, a fresh identity, and the triple block I x T x J into one
/// semigroup:
///
/// * products inside S and inside the triples are unchanged (the triples
///   multiply Rees-style through the sandwich matrix),
/// * s (i, t, j) = (s i, t, j) and (i, t, j) s = (i, t, j s) through the
///   given actions.
///
/// Associativity of the mixed products reduces to the action laws plus the
/// compatibility condition p[j s][i] = p[j][s i], which is checked first so
/// a violation gets a pointed error; the assembled table is then verified.
pub fn extension(spec: &ExtensionSpec) -> Result<Extension, ConstructionError> {
    let s_size = spec.s.as_ref().map_or(0, |s| s.order());
    let t = &spec.t;
    if t.order() == 0 || spec.p.is_empty() || spec.p[0].is_empty() {
        return Err(ConstructionError::EmptyDimensions);
    }
    let j_size = spec.p.len();
    let i_size = spec.p[0].len();
    if spec.p.iter().any(|row| row.len() != i_size) {
        return Err(ConstructionError::SandwichShape { rows: j_size, cols: i_size });
    }
    for (j, row) in spec.p.iter().enumerate() {
        for (i, &entry) in row.iter().enumerate() {
            if entry >= t.order() {
                return Err(ConstructionError::SandwichRange { j, i, entry });
            }
        }
    }
    if spec.left_action.len() != s_size || spec.right_action.len() != s_size {
        return Err(ConstructionError::ActionShape);
    }
    for (la, ra) in spec.left_action.iter().zip(&spec.right_action) {
        if la.len() != i_size || ra.len() != j_size {
            return Err(ConstructionError::ActionShape);
        }
        if la.iter().any(|&i| i >= i_size) || ra.iter().any(|&j| j >= j_size) {
            return Err(ConstructionError::ActionRange);
        }
    }
    for sx in 0..s_size {
        for j in 0..j_size {
            for i in 0..i_size {
                if spec.p[spec.right_action[sx][j]][i] != spec.p[j][spec.left_action[sx][i]] {
                    return Err(ConstructionError::Compatibility { s: sx, j, i });
                }
            }
        }
    }

    let nt = t.order();
    let one = s_size;
    let base = s_size + 1;
    let order = base + i_size * nt * j_size;
    let tri = |i: usize, g: usize, j: usize| base + (i * nt + g) * j_size + j;

    let mut used = std::collections::HashSet::new();
    let mut labels = Vec::with_capacity(order);
    if let Some(s) = &spec.s {
        for k in s.elements() {
            labels.push(fresh_label(&mut used, s.label(k)));
        }
    }
    labels.push(fresh_label(&mut used, "1".to_string()));
    for i in 0..i_size {
        for g in 0..nt {
            for j in 0..j_size {
                labels.push(fresh_label(&mut used, format!("({i},{},{j})", t.label(g))));
            }
        }
    }

    let mut table = vec![0u32; order * order];
    let mut set = |a: usize, b: usize, v: usize| table[a * order + b] = v as u32;
    for a in 0..order {
        set(a, one, a);
        set(one, a, a);
    }
    if let Some(s) = &spec.s {
        for a in s.elements() {
            for b in s.elements() {
                set(a, b, s.mul(a, b));
            }
        }
        for sx in s.elements() {
            for i in 0..i_size {
                for g in 0..nt {
                    for j in 0..j_size {
                        let m = tri(i, g, j);
                        set(sx, m, tri(spec.left_action[sx][i], g, j));
                        set(m, sx, tri(i, g, spec.right_action[sx][j]));
                    }
                }
            }
        }
    }
    for i in 0..i_size {
        for g in 0..nt {
            for j in 0..j_size {
                let a = tri(i, g, j);
                for k in 0..i_size {
                    for h in 0..nt {
                        for l in 0..j_size {
                            let b = tri(k, h, l);
                            let mid = t.mul(t.mul(g, spec.p[j][k]), h);
                            set(a, b, tri(i, mid, l));
                        }
                    }
                }
            }
        }
    }

    let semigroup = FiniteSemigroup::from_parts_unchecked(order, table, Some(labels));
    let exhaustive_check = order <= EXHAUSTIVE_ASSOC_LIMIT;
    if exhaustive_check {
        semigroup.check_associative().map_err(|e| match e {
            crate::semigroup::SemigroupError::Associativity { a, b, c, .. } => {
                ConstructionError::NotAssociative { a, b, c }
            }
            _ => unreachable!("only associativity is checked"),
        })?;
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(0xA550C1A7);
        for _ in 0..SAMPLED_TRIPLES {
            let (a, b, c) = (
                rng.random_range(0..order),
                rng.random_range(0..order),
                rng.random_range(0..order),
            );
            if semigroup.mul(semigroup.mul(a, b), c) != semigroup.mul(a, semigroup.mul(b, c)) {
                return Err(ConstructionError::NotAssociative { a, b, c });
            }
        }
    }
    Ok(Extension {
        semigroup,
        identity: one,
        s_size,
        i_size,
        j_size,
        t_order: nt,
        exhaustive_check,
    })
}

/// The standard extension attached to an element x and a generating set Y:
/// T = S, I = J = S u {*}, with actions s * i_u = i_{s u}, i_u * s = i_{u s}
/// (fixing *), and sandwich p[i_u][i_v] = u v, p[*][.] = p[.][*] = x.
///
/// Y must satisfy S = Y S^1 = S^1 Y; the default Y is all of S.
pub fn e_of(
    s: &FiniteSemigroup,
    x: ElementId,
    y: Option<&[ElementId]>,
) -> Result<Extension, ConstructionError> {
    extension(&e_of_spec(s, x, y)?)
}

/// The raw [`ExtensionSpec`] behind [`e_of`], for callers that need the
/// index-set data (actions and sandwich) rather than the built semigroup.
/// Index `k < |S|` of I = J is the element k of S; index `|S|` is `*`.
pub fn e_of_spec(
    s: &FiniteSemigroup,
    x: ElementId,
    y: Option<&[ElementId]>,
) -> Result<ExtensionSpec, ConstructionError> {
    let n = s.order();
    if n == 0 {
        return Err(ConstructionError::EmptyDimensions);
    }
    if x >= n {
        return Err(ConstructionError::ElementRange { element: x });
    }
    let all: Vec<ElementId> = s.elements().collect();
    let y = y.unwrap_or(&all);
    if y.iter().any(|&v| v >= n) {
        return Err(ConstructionError::ElementRange {
            element: *y.iter().find(|&&v| v >= n).unwrap(),
        });
    }
    for a in s.elements() {
        let right = y.contains(&a)
            || y.iter().any(|&v| s.elements().any(|u| s.mul(v, u) == a));
        if !right {
            return Err(ConstructionError::NotRightGenerating { element: a });
        }
        let left = y.contains(&a)
            || y.iter().any(|&v| s.elements().any(|u| s.mul(u, v) == a));
        if !left {
            return Err(ConstructionError::NotLeftGenerating { element: a });
        }
    }

    let star = n; // distinguished index fixed by both actions
    let size = n + 1;
    let left_action: Vec<Vec<usize>> = (0..n)
        .map(|u| (0..size).map(|k| if k < n { s.mul(u, k) } else { star }).collect())
        .collect();
    let right_action: Vec<Vec<usize>> = (0..n)
        .map(|u| (0..size).map(|k| if k < n { s.mul(k, u) } else { star }).collect())
        .collect();
    let p: Vec<Vec<ElementId>> = (0..size)
        .map(|j| {
            (0..size)
                .map(|i| if i == star || j == star { x } else { s.mul(j, i) })
                .collect()
        })
        .collect();
    Ok(ExtensionSpec {
        s: Some(s.clone()),
        t: s.clone(),
        left_action,
        right_action,
        p,
    })
}

/// Adjoins an absorbing copy of S: on S u {c_a : a in S} the constants
/// multiply by c_a c_b = c_b, s c_a = c_a, and c_a s = c_{a s}. The result
/// has order 2|S| and its constants form the kernel.
pub fn extension_by_constants(s: &FiniteSemigroup) -> Result<FiniteSemigroup, ConstructionError> {
    let n = s.order();
    if n == 0 {
        return Err(ConstructionError::EmptyDimensions);
    }
    let order = 2 * n;
    let mut table = vec![0u32; order * order];
    let mut set = |a: usize, b: usize, v: usize| table[a * order + b] = v as u32;
    for a in 0..n {
        for b in 0..n {
            set(a, b, s.mul(a, b)); // s t
            set(a, n + b, n + b); // s c_b = c_b
            set(n + a, b, n + s.mul(a, b)); // c_a s = c_{a s}
            set(n + a, n + b, n + b); // c_a c_b = c_b
        }
    }
    let labels = {
        let mut used = std::collections::HashSet::new();
        let mut ls: Vec<String> = Vec::with_capacity(order);
        for a in s.elements() {
            ls.push(fresh_label(&mut used, s.label(a)));
        }
        for a in s.elements() {
            ls.push(fresh_label(&mut used, format!("c_{}", s.label(a))));
        }
        ls
    };
    let out = FiniteSemigroup::from_parts_unchecked(order, table, Some(labels));
    debug_assert!(out.check_associative().is_ok());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::structure::green::green;
    use crate::structure::kernel::{kernel, minimal_one_sided_ideals, Side};
    use crate::structure::predicates::predicates;

    #[test]
    fn rees_over_trivial_group_gives_zero_semigroups() {
        let t = fixtures::trivial();
        // one column, two rows: (0,0,j)(0,0,l) = (0,0,l), a right zero band
        let right = rees_matrix(&t, 1, 2, &[vec![0], vec![0]]).unwrap();
        assert_eq!(right.semigroup.rows(), fixtures::rz2().rows());
        // two columns, one row: left zero
        let left = rees_matrix(&t, 2, 1, &[vec![0, 0]]).unwrap();
        assert_eq!(left.semigroup.rows(), fixtures::lz2().rows());
    }

    #[test]
    fn rees_coordinates_round_trip() {
        let p = vec![vec![0, 0], vec![0, 1]];
        let r = rees_matrix(&fixtures::z2(), 2, 2, &p).unwrap();
        assert_eq!(r.semigroup.order(), 8);
        for (m, &(i, g, j)) in r.coords.iter().enumerate() {
            assert_eq!(r.index_of(i, g, j), m);
        }
        // product law spot check: (0,g,1)(1,1,0) = (0, g*p[1][1]*1, 0) = (0, 1, 0)
        let a = r.index_of(0, 1, 1);
        let b = r.index_of(1, 0, 0);
        assert_eq!(r.semigroup.mul(a, b), r.index_of(0, 0, 0));
    }

    #[test]
    fn rees_idempotents_follow_the_sandwich_inverse_rule() {
        let p = vec![vec![0usize, 0], vec![0, 1]];
        let r = rees_matrix(&fixtures::z2(), 2, 2, &p).unwrap();
        // (i, t, j) idempotent iff t = p[j][i]^-1; in Z2 every element is
        // its own inverse, so the idempotents are (i, p[j][i], j).
        let mut expected: Vec<usize> = (0..2)
            .flat_map(|i| (0..2).map(move |j| (i, j)))
            .map(|(i, j)| r.index_of(i, p[j][i], j))
            .collect();
        expected.sort();
        assert_eq!(r.semigroup.idempotents(), expected);
        // simple (one J-class) but not orthodox with this sandwich
        let s = &r.semigroup;
        let g = green(s);
        assert_eq!(g.j.len(), 1);
        let preds = predicates(s);
        assert!(preds.regular && preds.completely_regular);
        assert!(!preds.orthodox);
    }

    #[test]
    fn rees_rejects_bad_shapes() {
        let z2 = fixtures::z2();
        assert!(matches!(
            rees_matrix(&z2, 0, 1, &[]),
            Err(ConstructionError::EmptyDimensions)
        ));
        assert!(matches!(
            rees_matrix(&z2, 2, 2, &[vec![0, 0]]),
            Err(ConstructionError::SandwichShape { .. })
        ));
        assert!(matches!(
            rees_matrix(&z2, 2, 2, &[vec![0, 0], vec![0, 2]]),
            Err(ConstructionError::SandwichRange { j: 1, i: 1, entry: 2 })
        ));
    }

    #[test]
    fn extension_with_no_s_is_a_rees_product_with_identity() {
        let spec = ExtensionSpec {
            s: None,
            t: fixtures::z2(),
            left_action: vec![],
            right_action: vec![],
            p: vec![vec![0]],
        };
        let e = extension(&spec).unwrap();
        assert_eq!(e.semigroup.order(), 3);
        assert_eq!(e.semigroup.identity(), Some(0));
        assert_eq!(e.identity, 0);
        assert!(e.exhaustive_check);
        // the triple block is Z2 again: (0,g,0)(0,h,0) = (0, g h, 0)
        let a = e.triple_index(0, 1, 0);
        assert_eq!(e.semigroup.mul(a, a), e.triple_index(0, 0, 0));
        assert_eq!(e.triple_of(a), Some((0, 1, 0)));
    }

    #[test]
    fn extension_detects_incompatible_sandwich() {
        let z2 = fixtures::z2();
        // left action of Z2 on I = Z2 by multiplication, trivial right
        // action on a single j; p[0] = [1, g] cannot commute with that.
        let spec = ExtensionSpec {
            s: Some(z2.clone()),
            t: z2.clone(),
            left_action: vec![vec![0, 1], vec![1, 0]],
            right_action: vec![vec![0], vec![0]],
            p: vec![vec![0, 1]],
        };
        assert_eq!(
            extension(&spec),
            Err(ConstructionError::Compatibility { s: 1, j: 0, i: 0 })
        );
    }

    #[test]
    fn extension_rejects_misshapen_actions() {
        let z2 = fixtures::z2();
        let spec = ExtensionSpec {
            s: Some(z2.clone()),
            t: z2.clone(),
            left_action: vec![vec![0, 1]], // one row missing
            right_action: vec![vec![0], vec![0]],
            p: vec![vec![0, 0]],
        };
        assert!(matches!(extension(&spec), Err(ConstructionError::ActionShape)));
    }

    #[test]
    fn e_of_orders_match_the_closed_formula() {
        for (s, want) in [
            (fixtures::trivial(), 6),
            (fixtures::z2(), 21),
            (fixtures::n3(), 52),
        ] {
            let n = s.order();
            assert_eq!(want, n + 1 + (n + 1) * (n + 1) * n);
            let e = e_of(&s, 0, None).unwrap();
            assert_eq!(e.semigroup.order(), want);
            assert_eq!(e.semigroup.identity(), Some(n));
            assert!(e.exhaustive_check);
        }
    }

    #[test]
    fn e_of_accepts_small_generating_sets_and_rejects_bad_ones() {
        let z2 = fixtures::z2();
        assert!(e_of(&z2, 1, Some(&[1])).is_ok()); // Y = {g} generates
        let n3 = fixtures::n3();
        assert_eq!(
            e_of(&n3, 0, Some(&[2])), // Y = {0} only reaches 0
            Err(ConstructionError::NotRightGenerating { element: 0 })
        );
        assert!(matches!(
            e_of(&n3, 5, None),
            Err(ConstructionError::ElementRange { element: 5 })
        ));
    }

    #[test]
    fn extension_by_constants_structure() {
        let e = fixtures::ext_const_z2();
        assert_eq!(e.order(), 4);
        assert_eq!(e.identity(), Some(0));
        assert_eq!(e.label(2), "c_1");
        // constants absorb on the left and translate on the right
        assert_eq!(e.mul(1, 2), 2); // g c_1 = c_1
        assert_eq!(e.mul(2, 1), 3); // c_1 g = c_g
        assert_eq!(e.mul(3, 3), 3);
        let g = green(&e);
        let k = kernel(&e, &g).unwrap();
        assert_eq!(k.elements, vec![2, 3]);
        assert!(k.is_completely_simple);
        // the kernel is a right zero band: each constant is a minimal
        // left ideal, matching the order of the base
        assert_eq!(minimal_one_sided_ideals(&e, &g, Side::Left).len(), 2);
        assert_eq!(minimal_one_sided_ideals(&e, &g, Side::Right).len(), 1);
    }

    #[test]
    fn relabeling_avoids_collisions() {
        // S already uses the label "1": the adjoined identity gets primed
        let e = e_of(&fixtures::z2(), 0, None).unwrap();
        assert_eq!(e.semigroup.label(0), "1");
        assert_eq!(e.semigroup.label(e.identity), "1'");
    }
}
