//! Class membership predicates and related structure checks, computed by
//! their quantifier definitions over the full carrier.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::semigroup::{ElementId, FiniteSemigroup};
use crate::structure::green::{green, GreenData, Preorder};
use crate::util::Partition;

/// Membership in the standard semigroup classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Predicates {
    pub regular: bool,
    pub inverse: bool,
    pub orthodox: bool,
    pub completely_regular: bool,
    pub band: bool,
    pub semilattice: bool,
    pub commutative: bool,
    pub group: bool,
    pub j_trivial: bool,
    pub left_cancellative: bool,
    pub right_reversible: bool,
}

pub fn predicates(s: &FiniteSemigroup) -> Predicates {
    predicates_with_green(s, &green(s))
}

pub fn predicates_with_green(s: &FiniteSemigroup, g: &GreenData) -> Predicates {
    let n = s.order();
    let regular = s.elements().all(|a| s.elements().any(|b| s.mul(s.mul(a, b), a) == a));
    // inverse = every element has exactly one inverse
    let inverse = s.elements().all(|a| {
        s.elements()
            .filter(|&b| s.mul(s.mul(a, b), a) == a && s.mul(s.mul(b, a), b) == b)
            .count()
            == 1
    });
    let idempotents = s.idempotents();
    let idempotents_closed = idempotents
        .iter()
        .all(|&e| idempotents.iter().all(|&f| s.is_idempotent(s.mul(e, f))));
    let orthodox = regular && idempotents_closed;
    let completely_regular = s.elements().all(|a| g.h.same(a, s.mul(a, a)));
    let band = idempotents.len() == n;
    let commutative = (0..n).all(|a| (a..n).all(|b| s.mul(a, b) == s.mul(b, a)));
    let semilattice = band && commutative;
    let group = match s.identity() {
        Some(e) => s
            .elements()
            .all(|a| s.elements().any(|b| s.mul(a, b) == e && s.mul(b, a) == e)),
        None => false,
    };
    let j_trivial = g.j.is_trivial();
    // ab = ac implies b = c, i.e. every row is injective
    let left_cancellative = s.elements().all(|a| {
        let mut seen = vec![false; n];
        s.elements().all(|b| {
            let p = s.mul(a, b);
            !std::mem::replace(&mut seen[p], true)
        })
    });
    let right_reversible = is_right_reversible(s);
    Predicates {
        regular,
        inverse,
        orthodox,
        completely_regular,
        band,
        semilattice,
        commutative,
        group,
        j_trivial,
        left_cancellative,
        right_reversible,
    }
}

/// `Sa` meets `Sb` for all a, b (left multiples from S itself, not S^1).
pub fn is_right_reversible(s: &FiniteSemigroup) -> bool {
    let n = s.order();
    let words = n.div_ceil(64);
    let mut left_multiples = vec![0u64; n * words];
    for a in s.elements() {
        for x in s.elements() {
            let p = s.mul(x, a);
            left_multiples[a * words + p / 64] |= 1 << (p % 64);
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            let disjoint = (0..words)
                .all(|w| left_multiples[a * words + w] & left_multiples[b * words + w] == 0);
            if disjoint {
                return false;
            }
        }
    }
    true
}

/// Every finite semigroup is weakly right reversible: each element has a
/// local zero on the right side of the defining condition because some
/// power of it is idempotent. The quantifier involved ranges over finite
/// sets only, so on a finite carrier this is a constant, not a search.
pub fn is_weakly_right_reversible(_s: &FiniteSemigroup) -> bool {
    true
}

/// The zero element, if one exists.
pub fn has_zero(s: &FiniteSemigroup) -> Option<ElementId> {
    s.elements()
        .find(|&z| s.elements().all(|x| s.mul(z, x) == z && s.mul(x, z) == z))
}

/// Idempotents e with ae = ea = e (zeros local to `a`).
pub fn local_zeros(s: &FiniteSemigroup, a: ElementId) -> Vec<ElementId> {
    s.elements()
        .filter(|&e| s.is_idempotent(e) && s.mul(a, e) == e && s.mul(e, a) == e)
        .collect()
}

/// The starred left relation: a and b are related iff for all x, y in S^1,
/// ax = ay exactly when bx = by. Classes are computed by grouping elements
/// on the kernel (as a partition of S^1) of the map x -> ax, which makes
/// L a refinement of L*.
pub fn l_star(s: &FiniteSemigroup) -> Partition {
    let n = s.order();
    let mut signatures: Vec<Vec<usize>> = Vec::with_capacity(n);
    for a in s.elements() {
        // values of a*x for x in S^1: position 0 is the formal identity
        let mut values = Vec::with_capacity(n + 1);
        values.push(a);
        for x in s.elements() {
            values.push(s.mul(a, x));
        }
        // canonical kernel-partition signature
        let mut first = std::collections::HashMap::new();
        let mut sig = Vec::with_capacity(values.len());
        for v in values {
            let next = first.len();
            sig.push(*first.entry(v).or_insert(next));
        }
        signatures.push(sig);
    }
    let mut index: std::collections::HashMap<&[usize], usize> = std::collections::HashMap::new();
    let labels: Vec<usize> = signatures
        .iter()
        .map(|sig| {
            let next = index.len();
            *index.entry(sig.as_slice()).or_insert(next)
        })
        .collect();
    Partition::from_labels(&labels)
}

/// First (a, u, v) in lexicographic index order with `u <= v` but not
/// `au <= av` in the given preorder, or None if the preorder is compatible
/// with left multiplication.
pub fn left_compatibility_counterexample(
    s: &FiniteSemigroup,
    g: &GreenData,
    which: Preorder,
) -> Option<(ElementId, ElementId, ElementId)> {
    for a in s.elements() {
        for u in s.elements() {
            for v in s.elements() {
                if g.leq(which, u, v) && !g.leq(which, s.mul(a, u), s.mul(a, v)) {
                    return Some((a, u, v));
                }
            }
        }
    }
    None
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BandError {
    #[error("element {element} is not idempotent")]
    NotABand { element: ElementId },
    #[error("class of {x} and {y} is not rectangular: xyx = {product} differs from x")]
    NotRectangular { x: ElementId, y: ElementId, product: ElementId },
    #[error("quotient is not well defined: products of classes ({a_class},{b_class}) hit several classes")]
    IllDefinedQuotient { a_class: usize, b_class: usize },
}

/// Decomposition of a band into a semilattice of rectangular bands: the
/// D-classes are the components, verified rectangular (xyx = x within each
/// class), and the quotient table on classes is verified to be a
/// semilattice.
#[derive(Debug, Clone)]
pub struct BandDecomposition {
    /// The rectangular components (D-classes).
    pub partition: Partition,
    /// Multiplication of component indices; a commutative band.
    pub semilattice: FiniteSemigroup,
}

pub fn band_decomposition(s: &FiniteSemigroup) -> Result<BandDecomposition, BandError> {
    if let Some(element) = s.elements().find(|&a| !s.is_idempotent(a)) {
        return Err(BandError::NotABand { element });
    }
    let g = green(s);
    let partition = g.d.clone();
    for class in partition.classes() {
        for &x in class {
            for &y in class {
                let product = s.mul(s.mul(x, y), x);
                if product != x {
                    return Err(BandError::NotRectangular { x, y, product });
                }
            }
        }
    }
    let k = partition.len();
    let mut table = vec![vec![0usize; k]; k];
    for a_class in 0..k {
        for b_class in 0..k {
            let mut target = None;
            for &x in partition.class(a_class) {
                for &y in partition.class(b_class) {
                    let c = partition.class_of(s.mul(x, y));
                    match target {
                        None => target = Some(c),
                        Some(t) if t != c => {
                            return Err(BandError::IllDefinedQuotient { a_class, b_class })
                        }
                        _ => {}
                    }
                }
            }
            table[a_class][b_class] = target.expect("classes are nonempty");
        }
    }
    let semilattice = FiniteSemigroup::from_table(table).expect("quotient of a band is associative");
    debug_assert!({
        let p = predicates(&semilattice);
        p.semilattice
    });
    Ok(BandDecomposition { partition, semilattice })
}

/// Why a proposed semilattice-of-subsemigroups decomposition fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum SemilatticeViolation {
    /// The index semigroup is not a semilattice.
    IndexNotSemilattice,
    /// Partition size and index order disagree.
    SizeMismatch { classes: usize, index_order: usize },
    /// `a * b` lands outside the class prescribed by the index product.
    ProductEscapes { a: ElementId, b: ElementId, expected_class: usize, got_class: usize },
}

/// Checks that a partition of `s` indexed by a semilattice `y` satisfies
/// S_alpha S_beta inside S_(alpha beta). Returns the first violation in
/// index order, or None if the decomposition is valid.
pub fn verify_semilattice_of_subsemigroups(
    s: &FiniteSemigroup,
    partition: &Partition,
    y: &FiniteSemigroup,
) -> Option<SemilatticeViolation> {
    if partition.len() != y.order() {
        return Some(SemilatticeViolation::SizeMismatch {
            classes: partition.len(),
            index_order: y.order(),
        });
    }
    let py = predicates(y);
    if !py.semilattice {
        return Some(SemilatticeViolation::IndexNotSemilattice);
    }
    for a in s.elements() {
        for b in s.elements() {
            let expected_class = y.mul(partition.class_of(a), partition.class_of(b));
            let got_class = partition.class_of(s.mul(a, b));
            if got_class != expected_class {
                return Some(SemilatticeViolation::ProductEscapes { a, b, expected_class, got_class });
            }
        }
    }
    None
}
