//! The minimal ideal (kernel) of a finite semigroup, its minimal one-sided
//! ideals, and its coordinatization as a Rees matrix semigroup over a
//! maximal subgroup.

use thiserror::Error;

use crate::constructions;
use crate::semigroup::{ElementId, FiniteSemigroup};
use crate::structure::green::GreenData;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecompositionError {
    #[error("kernel has no idempotent")]
    NoIdempotent,
    #[error("no unique group coordinate for kernel element {element}")]
    BadCoordinate { element: ElementId },
    #[error("rebuilt Rees product disagrees with the semigroup at ({a},{b})")]
    ProductMismatch { a: ElementId, b: ElementId },
    #[error("sandwich matrix normalization failed at row {j}, column {i}")]
    BadNormalization { j: usize, i: usize },
}

/// Rees coordinatization of a completely simple kernel: an isomorphism
/// between the kernel and the I x J matrix semigroup over the maximal
/// subgroup at its least-index idempotent, with the sandwich matrix
/// normalized so row 0 and column 0 are the group identity.
#[derive(Debug, Clone)]
pub struct ReesMatrixData {
    /// Multiplication table of the maximal subgroup H_e.
    pub group: FiniteSemigroup,
    /// Group index -> element of the ambient semigroup.
    pub group_members: Vec<ElementId>,
    /// The distinguished idempotent e (least index in the kernel).
    pub idempotent: ElementId,
    /// Number of R-classes of the kernel (index set I); class 0 contains e.
    pub i_size: usize,
    /// Number of L-classes of the kernel (index set J); class 0 contains e.
    pub j_size: usize,
    /// Sandwich matrix, `j_size` rows by `i_size` columns of group indices;
    /// row 0 and column 0 are the group identity.
    pub p: Vec<Vec<usize>>,
    /// Kernel element -> its (i, g, j) coordinates (parallel to the sorted
    /// kernel element list).
    pub coords: Vec<(usize, usize, usize)>,
}

/// The kernel of a finite semigroup together with its structure.
#[derive(Debug, Clone)]
pub struct KernelData {
    /// Sorted elements of the minimal ideal.
    pub elements: Vec<ElementId>,
    /// Whether the kernel verified as completely simple (always true for a
    /// finite semigroup; established by the decomposition, not assumed).
    pub is_completely_simple: bool,
    /// Minimal left ideals of the semigroup (the L-classes of the kernel).
    pub minimal_left_ideals: Vec<Vec<ElementId>>,
    /// Minimal right ideals (the R-classes of the kernel).
    pub minimal_right_ideals: Vec<Vec<ElementId>>,
    pub rees: Option<ReesMatrixData>,
}

impl KernelData {
    /// Rees coordinates of a kernel element, if the decomposition succeeded.
    pub fn coord_of(&self, x: ElementId) -> Option<(usize, usize, usize)> {
        let rees = self.rees.as_ref()?;
        let pos = self.elements.binary_search(&x).ok()?;
        Some(rees.coords[pos])
    }
}

/// Inverse of `a` in a group given by its table (scan).
pub fn group_inverse(group: &FiniteSemigroup, a: ElementId) -> ElementId {
    let e = group.identity().expect("group has an identity");
    group
        .elements()
        .find(|&b| group.mul(a, b) == e && group.mul(b, a) == e)
        .expect("group element has an inverse")
}

/// Computes the kernel and its Rees coordinatization.
pub fn kernel(s: &FiniteSemigroup, g: &GreenData) -> Result<KernelData, DecompositionError> {
    let min_j = g.minimal_j_class();
    let elements: Vec<ElementId> = g.j.class(min_j).to_vec();

    let minimal_left_ideals: Vec<Vec<ElementId>> = g
        .minimal_l_classes()
        .into_iter()
        .map(|c| g.l.class(c).to_vec())
        .collect();
    let minimal_right_ideals: Vec<Vec<ElementId>> = g
        .minimal_r_classes()
        .into_iter()
        .map(|c| g.r.class(c).to_vec())
        .collect();

    let rees = decompose(s, g, &elements)?;
    Ok(KernelData {
        elements,
        is_completely_simple: true,
        minimal_left_ideals,
        minimal_right_ideals,
        rees: Some(rees),
    })
}

fn decompose(
    s: &FiniteSemigroup,
    g: &GreenData,
    kernel_elements: &[ElementId],
) -> Result<ReesMatrixData, DecompositionError> {
    let e = *kernel_elements
        .iter()
        .find(|&&x| s.is_idempotent(x))
        .ok_or(DecompositionError::NoIdempotent)?;

    // R- and L-classes of the kernel, with e's classes first and the rest
    // ordered by least element. Restricted to the kernel these are the same
    // classes as in S.
    let order_classes = |class_of: &dyn Fn(ElementId) -> usize| -> (Vec<usize>, Vec<Vec<ElementId>>) {
        let mut ids: Vec<usize> = Vec::new();
        for &x in kernel_elements {
            let c = class_of(x);
            if !ids.contains(&c) {
                ids.push(c);
            }
        }
        let e_class = class_of(e);
        ids.sort_by_key(|&c| (c != e_class, c));
        let members = ids
            .iter()
            .map(|&c| {
                kernel_elements
                    .iter()
                    .copied()
                    .filter(|&x| class_of(x) == c)
                    .collect::<Vec<_>>()
            })
            .collect();
        (ids, members)
    };
    let (r_ids, r_members) = order_classes(&|x| g.r.class_of(x));
    let (l_ids, l_members) = order_classes(&|x| g.l.class_of(x));
    let i_size = r_ids.len();
    let j_size = l_ids.len();

    // Maximal subgroup at e.
    let h_members: Vec<ElementId> = r_members[0]
        .iter()
        .copied()
        .filter(|&x| g.l.class_of(x) == l_ids[0])
        .collect();
    let (group, group_members) = s
        .subsemigroup(&h_members)
        .map_err(|_| DecompositionError::BadCoordinate { element: e })?;
    let g_index = |x: ElementId| group_members.binary_search(&x).ok();
    let ge = g_index(e).ok_or(DecompositionError::NoIdempotent)?;
    debug_assert_eq!(group.identity(), Some(ge));

    // Representatives: r_i in R_i meet L_e, q_j in L_j meet R_e.
    let rep_r: Vec<ElementId> = r_members
        .iter()
        .map(|m| {
            m.iter()
                .copied()
                .filter(|&x| g.l.class_of(x) == l_ids[0])
                .min()
                .expect("R_i meets L_e in a completely simple kernel")
        })
        .collect();
    let rep_l: Vec<ElementId> = l_members
        .iter()
        .map(|m| {
            m.iter()
                .copied()
                .filter(|&x| g.r.class_of(x) == r_ids[0])
                .min()
                .expect("L_j meets R_e in a completely simple kernel")
        })
        .collect();

    // Raw sandwich matrix p[j][i] = q_j r_i, an element of H_e.
    let mut p_raw = vec![vec![0usize; i_size]; j_size];
    for j in 0..j_size {
        for i in 0..i_size {
            let prod = s.mul(rep_l[j], rep_r[i]);
            p_raw[j][i] = g_index(prod).ok_or(DecompositionError::BadCoordinate { element: prod })?;
        }
    }

    // Normalize so row 0 and column 0 become the identity: translate the
    // representatives by  r_i' = r_i u_i^-1,  q_j' = v_j^-1 q_j  with
    // u_i = p_raw[0][i] and v_j = p_raw[j][0] * p_raw[0][0]^-1, which turns
    // the matrix into p[j][i] = v_j^-1 p_raw[j][i] u_i^-1.
    let inv = |x: usize| group_inverse(&group, x);
    let u: Vec<usize> = (0..i_size).map(|i| p_raw[0][i]).collect();
    let v: Vec<usize> = (0..j_size)
        .map(|j| group.mul(p_raw[j][0], inv(p_raw[0][0])))
        .collect();
    let mut p = vec![vec![0usize; i_size]; j_size];
    for j in 0..j_size {
        for i in 0..i_size {
            p[j][i] = group.mul(group.mul(inv(v[j]), p_raw[j][i]), inv(u[i]));
        }
    }
    for (i, row0) in p[0].iter().enumerate() {
        if *row0 != ge {
            return Err(DecompositionError::BadNormalization { j: 0, i });
        }
    }
    for (j, row) in p.iter().enumerate() {
        if row[0] != ge {
            return Err(DecompositionError::BadNormalization { j, i: 0 });
        }
    }

    let rep_r_n: Vec<ElementId> = (0..i_size)
        .map(|i| s.mul(rep_r[i], group_members[inv(u[i])]))
        .collect();
    let rep_l_n: Vec<ElementId> = (0..j_size)
        .map(|j| s.mul(group_members[inv(v[j])], rep_l[j]))
        .collect();

    // Coordinates: x in R_i meet L_j equals r_i' g q_j' for a unique g.
    let mut coords = Vec::with_capacity(kernel_elements.len());
    for &x in kernel_elements {
        let i = r_ids.iter().position(|&c| c == g.r.class_of(x)).expect("kernel R-class");
        let j = l_ids.iter().position(|&c| c == g.l.class_of(x)).expect("kernel L-class");
        let mut found = None;
        for gg in group.elements() {
            if s.mul(s.mul(rep_r_n[i], group_members[gg]), rep_l_n[j]) == x {
                if found.is_some() {
                    return Err(DecompositionError::BadCoordinate { element: x });
                }
                found = Some(gg);
            }
        }
        let gg = found.ok_or(DecompositionError::BadCoordinate { element: x })?;
        coords.push((i, gg, j));
    }

    // Verify bijectivity and that multiplication transports through the
    // rebuilt Rees matrix semigroup.
    {
        let mut seen = std::collections::HashSet::new();
        for &c in &coords {
            if !seen.insert(c) {
                return Err(DecompositionError::BadCoordinate { element: 0 });
            }
        }
        if coords.len() != i_size * group.order() * j_size {
            return Err(DecompositionError::BadCoordinate { element: 0 });
        }
    }
    let rebuilt = constructions::rees_matrix(&group, i_size, j_size, &p)
        .map_err(|_| DecompositionError::ProductMismatch { a: 0, b: 0 })?;
    let pos_of = |x: ElementId| kernel_elements.binary_search(&x).expect("kernel element");
    for (pa, &a) in kernel_elements.iter().enumerate() {
        for (pb, &b) in kernel_elements.iter().enumerate() {
            let (i1, g1, j1) = coords[pa];
            let (i2, g2, j2) = coords[pb];
            let lhs = coords[pos_of(s.mul(a, b))];
            let ma = rebuilt.index_of(i1, g1, j1);
            let mb = rebuilt.index_of(i2, g2, j2);
            let rhs = rebuilt.coords[rebuilt.semigroup.mul(ma, mb)];
            if lhs != rhs {
                return Err(DecompositionError::ProductMismatch { a, b });
            }
        }
    }

    Ok(ReesMatrixData {
        group,
        group_members,
        idempotent: e,
        i_size,
        j_size,
        p,
        coords,
    })
}

/// Which side a one-sided notion refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// All minimal left (or right) ideals, re-verified to be one-sided ideals
/// that are left (right) simple as subsemigroups.
pub fn minimal_one_sided_ideals(
    s: &FiniteSemigroup,
    g: &GreenData,
    side: Side,
) -> Vec<Vec<ElementId>> {
    let classes = match side {
        Side::Left => g.minimal_l_classes(),
        Side::Right => g.minimal_r_classes(),
    };
    let part = match side {
        Side::Left => &g.l,
        Side::Right => &g.r,
    };
    let ideals: Vec<Vec<ElementId>> = classes.into_iter().map(|c| part.class(c).to_vec()).collect();
    for ideal in &ideals {
        debug_assert!(verify_simple_one_sided_ideal(s, ideal, side));
    }
    ideals
}

/// Checks that `t` is a left (right) ideal of `s` that is left (right)
/// simple as a subsemigroup: `T x u {x} = T` for every `x` in `T`.
pub fn verify_simple_one_sided_ideal(s: &FiniteSemigroup, t: &[ElementId], side: Side) -> bool {
    let in_t = |x: ElementId| t.binary_search(&x).is_ok();
    let mul = |a, b| match side {
        Side::Left => s.mul(b, a),
        Side::Right => s.mul(a, b),
    };
    // ideal: S t inside t (left) / t S inside t (right)
    for &x in t {
        for y in s.elements() {
            if !in_t(mul(x, y)) {
                return false;
            }
        }
    }
    // simple: the principal one-sided ideal of each x within T is all of T
    for &x in t {
        let mut hit = vec![false; t.len()];
        hit[t.binary_search(&x).unwrap()] = true;
        for &y in t {
            hit[t.binary_search(&mul(x, y)).unwrap()] = true;
        }
        if hit.iter().any(|&h| !h) {
            return false;
        }
    }
    true
}

/// The one- or two-sided ideal generated by a set of elements.
pub fn ideal_generated(s: &FiniteSemigroup, gens: &[ElementId], side: Option<Side>) -> Vec<ElementId> {
    let mut in_set = vec![false; s.order()];
    for &x in gens {
        in_set[x] = true;
    }
    match side {
        Some(Side::Left) => {
            for &x in gens {
                for y in s.elements() {
                    in_set[s.mul(y, x)] = true;
                }
            }
        }
        Some(Side::Right) => {
            for &x in gens {
                for y in s.elements() {
                    in_set[s.mul(x, y)] = true;
                }
            }
        }
        None => {
            // S^1 X S^1 = X u SX u XS u SXS
            for &x in gens {
                for y in s.elements() {
                    in_set[s.mul(y, x)] = true;
                    in_set[s.mul(x, y)] = true;
                    for z in s.elements() {
                        in_set[s.mul(s.mul(y, x), z)] = true;
                    }
                }
            }
        }
    }
    (0..s.order()).filter(|&x| in_set[x]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::structure::green::green;

    fn kernel_of(s: &FiniteSemigroup) -> KernelData {
        kernel(s, &green(s)).unwrap()
    }

    #[test]
    fn kernel_of_t2_is_the_constants() {
        let t2 = fixtures::t2();
        let k = kernel_of(&t2);
        let c0 = t2.element_by_label("c0").unwrap();
        let c1 = t2.element_by_label("c1").unwrap();
        let mut expect = vec![c0, c1];
        expect.sort();
        assert_eq!(k.elements, expect);
        assert!(k.is_completely_simple);
        let rees = k.rees.as_ref().unwrap();
        assert_eq!(rees.group.order(), 1);
        assert_eq!((rees.i_size, rees.j_size), (1, 2));
        assert_eq!(k.minimal_right_ideals.len(), 1);
        assert_eq!(k.minimal_left_ideals, vec![vec![c0], vec![c1]]);
    }

    #[test]
    fn kernel_of_n3_is_the_zero() {
        let k = kernel_of(&fixtures::n3());
        assert_eq!(k.elements, vec![2]);
        let rees = k.rees.as_ref().unwrap();
        assert_eq!((rees.i_size, rees.j_size, rees.group.order()), (1, 1, 1));
    }

    #[test]
    fn kernel_of_group_is_everything() {
        let z3 = fixtures::z3();
        let k = kernel_of(&z3);
        assert_eq!(k.elements, vec![0, 1, 2]);
        let rees = k.rees.as_ref().unwrap();
        assert_eq!((rees.i_size, rees.j_size), (1, 1));
        assert_eq!(rees.group.order(), 3);
    }

    #[test]
    fn rees_round_trip_on_matrix_semigroup() {
        // kernel of M[Z2; 2, 2; [[1,1],[1,g]]]^1 is the full 2x2 part
        let m = fixtures::rees_z2_2x2_1();
        let k = kernel_of(&m);
        assert_eq!(k.elements.len(), 8);
        let rees = k.rees.as_ref().unwrap();
        assert_eq!((rees.i_size, rees.j_size), (2, 2));
        assert_eq!(rees.group.order(), 2);
        // normalization: row 0 and column 0 are the identity
        let e = rees.group.identity().unwrap();
        assert!(rees.p[0].iter().all(|&x| x == e));
        assert!(rees.p.iter().all(|row| row[0] == e));
        // the single non-identity entry survives normalization
        assert_ne!(rees.p[1][1], e);
    }

    #[test]
    fn minimal_ideals_on_fixtures() {
        let rz = fixtures::rz2_1();
        let g = green(&rz);
        assert_eq!(
            minimal_one_sided_ideals(&rz, &g, Side::Left),
            vec![vec![0], vec![1]]
        );
        assert_eq!(
            minimal_one_sided_ideals(&rz, &g, Side::Right),
            vec![vec![0, 1]]
        );
        let z2 = fixtures::z2();
        let g = green(&z2);
        assert_eq!(minimal_one_sided_ideals(&z2, &g, Side::Left), vec![vec![0, 1]]);
    }

    #[test]
    fn minimal_ideals_union_is_kernel() {
        for seed in 0..20 {
            let (s, _) = crate::semigroup::random_transformation_monoid(4, 2, seed).unwrap();
            let g = green(&s);
            let k = kernel(&s, &g).unwrap();
            let mut from_left: Vec<ElementId> =
                minimal_one_sided_ideals(&s, &g, Side::Left).concat();
            from_left.sort();
            assert_eq!(from_left, k.elements);
            let mut from_right: Vec<ElementId> =
                minimal_one_sided_ideals(&s, &g, Side::Right).concat();
            from_right.sort();
            assert_eq!(from_right, k.elements);
        }
    }

    #[test]
    fn generated_ideals() {
        let t2 = fixtures::t2();
        let c0 = t2.element_by_label("c0").unwrap();
        let c1 = t2.element_by_label("c1").unwrap();
        let mut right = ideal_generated(&t2, &[c0], Some(Side::Right));
        right.sort();
        let mut expect = vec![c0, c1];
        expect.sort();
        assert_eq!(right, expect);
        assert_eq!(ideal_generated(&t2, &[c0], Some(Side::Left)), vec![c0]);
        let n3 = fixtures::n3();
        assert_eq!(ideal_generated(&n3, &[1], None), vec![1, 2]);
    }
}
