//! Small named semigroups used by the test suites and the `verify` command.

use crate::constructions;
use crate::semigroup::{closure_from_transformations, FiniteSemigroup, Transformation};

/// One-element monoid.
pub fn trivial() -> FiniteSemigroup {
    FiniteSemigroup::from_table_labeled(vec![vec![0]], Some(vec!["1".into()])).unwrap()
}

/// Two-element monoid with zero: {1, 0}.
pub fn o2() -> FiniteSemigroup {
    FiniteSemigroup::from_table_labeled(
        vec![vec![0, 1], vec![1, 1]],
        Some(vec!["1".into(), "0".into()]),
    )
    .unwrap()
}

/// Cyclic group of order 2: {1, g}.
pub fn z2() -> FiniteSemigroup {
    FiniteSemigroup::from_table_labeled(
        vec![vec![0, 1], vec![1, 0]],
        Some(vec!["1".into(), "g".into()]),
    )
    .unwrap()
}

/// Cyclic group of order 3: {1, g, g^2}.
pub fn z3() -> FiniteSemigroup {
    FiniteSemigroup::from_table_labeled(
        vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]],
        Some(vec!["1".into(), "g".into(), "g2".into()]),
    )
    .unwrap()
}

/// Three-element monoid {1, a, 0} with a^2 = 0: a nilpotent with identity.
pub fn n3() -> FiniteSemigroup {
    FiniteSemigroup::from_table_labeled(
        vec![vec![0, 1, 2], vec![1, 2, 2], vec![2, 2, 2]],
        Some(vec!["1".into(), "a".into(), "0".into()]),
    )
    .unwrap()
}

/// Right zero semigroup on two elements: xy = y.
pub fn rz2() -> FiniteSemigroup {
    FiniteSemigroup::from_table_labeled(
        vec![vec![0, 1], vec![0, 1]],
        Some(vec!["r1".into(), "r2".into()]),
    )
    .unwrap()
}

/// Left zero semigroup on two elements: xy = x.
pub fn lz2() -> FiniteSemigroup {
    FiniteSemigroup::from_table_labeled(
        vec![vec![0, 0], vec![1, 1]],
        Some(vec!["l1".into(), "l2".into()]),
    )
    .unwrap()
}

/// Right zero semigroup with adjoined identity (identity at the last index).
pub fn rz2_1() -> FiniteSemigroup {
    rz2().adjoin_identity()
}

/// Left zero semigroup with adjoined identity.
pub fn lz2_1() -> FiniteSemigroup {
    lz2().adjoin_identity()
}

/// Full transformation monoid on two points, built by closing
/// {identity, swap, constant-0}. Element order is the closure order:
/// [c0, id, swap, c1].
pub fn t2() -> FiniteSemigroup {
    let id = Transformation::identity(2);
    let swap = Transformation::new(vec![1, 0]).unwrap();
    let c0 = Transformation::new(vec![0, 0]).unwrap();
    let (mut s, elems) = closure_from_transformations(&[id, swap, c0]).unwrap();
    let labels = elems
        .iter()
        .map(|t| match t.images() {
            [0, 0] => "c0".to_string(),
            [0, 1] => "id".to_string(),
            [1, 0] => "s".to_string(),
            [1, 1] => "c1".to_string(),
            _ => unreachable!(),
        })
        .collect();
    s = FiniteSemigroup::from_table_labeled(s.rows(), Some(labels)).unwrap();
    s
}

/// 2x2 Rees matrix semigroup over Z2 with sandwich matrix
/// [[1, 1], [1, g]]; completely simple but not orthodox.
pub fn rees_z2_2x2() -> FiniteSemigroup {
    let p = vec![vec![0, 0], vec![0, 1]];
    constructions::rees_matrix(&z2(), 2, 2, &p).unwrap().semigroup
}

/// The 2x2 Rees matrix semigroup over Z2 with an identity adjoined: a
/// nine-element monoid whose kernel is the eight-element completely simple
/// part.
pub fn rees_z2_2x2_1() -> FiniteSemigroup {
    rees_z2_2x2().adjoin_identity()
}

/// Z2 extended by a right zero copy of itself (order 4 monoid).
pub fn ext_const_z2() -> FiniteSemigroup {
    constructions::extension_by_constants(&z2()).unwrap()
}

/// All monoid fixtures exercised by the verification suites, with names.
pub fn suite_fixtures() -> Vec<(&'static str, FiniteSemigroup)> {
    vec![
        ("trivial", trivial()),
        ("o2", o2()),
        ("z2", z2()),
        ("z3", z3()),
        ("n3", n3()),
        ("rz2_1", rz2_1()),
        ("lz2_1", lz2_1()),
        ("t2", t2()),
        ("rees_z2_2x2_1", rees_z2_2x2_1()),
        ("ext_const_z2", ext_const_z2()),
    ]
}

/// Looks up a fixture by name.
pub fn by_name(name: &str) -> Option<FiniteSemigroup> {
    match name {
        "trivial" => Some(trivial()),
        "o2" => Some(o2()),
        "z2" => Some(z2()),
        "z3" => Some(z3()),
        "n3" => Some(n3()),
        "rz2" => Some(rz2()),
        "lz2" => Some(lz2()),
        "rz2_1" => Some(rz2_1()),
        "lz2_1" => Some(lz2_1()),
        "t2" => Some(t2()),
        "rees_z2_2x2" => Some(rees_z2_2x2()),
        "rees_z2_2x2_1" => Some(rees_z2_2x2_1()),
        "ext_const_z2" => Some(ext_const_z2()),
        _ => None,
    }
}
