//! Finite semigroups as explicit Cayley tables, plus transformation
//! semigroups given by generators.
//!
//! Elements are dense indices `0..order`. Multiplication tables are stored
//! row-major: `table[a][b]` is the product `a * b`. Transformations compose
//! left-to-right: `x (f g) = (x f) g`, so constant maps form a right zero
//! semigroup.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::util::fnv1a;

/// Index of an element in a [`FiniteSemigroup`] carrier.
pub type ElementId = usize;

/// Default cap on the order of a semigroup built by closing transformations.
pub const DEFAULT_CLOSURE_CAP: usize = 2000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SemigroupError {
    #[error("table row {row} has length {len}, expected {order}")]
    NotSquare { row: usize, len: usize, order: usize },
    #[error("table entry {value} at ({row},{col}) out of range for order {order}")]
    Range { row: usize, col: usize, value: usize, order: usize },
    #[error("associativity fails at ({a},{b},{c}): ({a}*{b})*{c} = {left}, {a}*({b}*{c}) = {right}")]
    Associativity { a: usize, b: usize, c: usize, left: usize, right: usize },
    #[error("label list has {found} entries, expected {order}")]
    LabelCount { found: usize, order: usize },
    #[error("declared identity {declared} is not an identity (detected {detected:?})")]
    BadIdentity { declared: usize, detected: Option<usize> },
    #[error("empty generator list")]
    EmptyGenerators,
    #[error("generator degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("transformation image {value} out of range for degree {degree}")]
    ImageRange { value: usize, degree: usize },
    #[error("closure exceeded order cap {cap} after {attempts} attempt(s)")]
    CapExceeded { cap: usize, attempts: usize },
}

/// A finite semigroup presented by its full multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSemigroup {
    order: usize,
    table: Vec<u32>,
    identity: Option<ElementId>,
    labels: Option<Vec<String>>,
}

impl FiniteSemigroup {
    /// Validates a multiplication table: square, in-range, associative.
    /// Associativity is checked exhaustively and reports the first violating
    /// triple in lexicographic order. The identity, if any, is detected.
    pub fn from_table(rows: Vec<Vec<usize>>) -> Result<Self, SemigroupError> {
        Self::from_table_labeled(rows, None)
    }

    pub fn from_table_labeled(
        rows: Vec<Vec<usize>>,
        labels: Option<Vec<String>>,
    ) -> Result<Self, SemigroupError> {
        let order = rows.len();
        if let Some(ref ls) = labels {
            if ls.len() != order {
                return Err(SemigroupError::LabelCount { found: ls.len(), order });
            }
        }
        let mut table = Vec::with_capacity(order * order);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(SemigroupError::NotSquare { row: r, len: row.len(), order });
            }
            for (c, &v) in row.iter().enumerate() {
                if v >= order {
                    return Err(SemigroupError::Range { row: r, col: c, value: v, order });
                }
                table.push(v as u32);
            }
        }
        let s = FiniteSemigroup { order, table, identity: None, labels };
        s.check_associative()?;
        Ok(Self { identity: s.detect_identity(), ..s })
    }

    /// Builds from a table known to be associative (e.g. composed from
    /// functions). The identity is still detected by scan.
    pub(crate) fn from_parts_unchecked(
        order: usize,
        table: Vec<u32>,
        labels: Option<Vec<String>>,
    ) -> Self {
        debug_assert_eq!(table.len(), order * order);
        let s = FiniteSemigroup { order, table, identity: None, labels };
        Self { identity: s.detect_identity(), ..s }
    }

    pub fn check_associative(&self) -> Result<(), SemigroupError> {
        let n = self.order;
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    let left = self.mul(ab, c);
                    let right = self.mul(a, self.mul(b, c));
                    if left != right {
                        return Err(SemigroupError::Associativity { a, b, c, left, right });
                    }
                }
            }
        }
        Ok(())
    }

    fn detect_identity(&self) -> Option<ElementId> {
        (0..self.order).find(|&e| {
            (0..self.order).all(|x| self.mul(e, x) == x && self.mul(x, e) == x)
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn elements(&self) -> std::ops::Range<ElementId> {
        0..self.order
    }

    #[inline]
    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        self.table[a * self.order + b] as usize
    }

    pub fn identity(&self) -> Option<ElementId> {
        self.identity
    }

    pub fn is_monoid(&self) -> bool {
        self.identity.is_some()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display label for an element: its stored label, else its index.
    pub fn label(&self, a: ElementId) -> String {
        match &self.labels {
            Some(ls) => ls[a].clone(),
            None => a.to_string(),
        }
    }

    /// Index of the element with the given label, if labels are present.
    pub fn element_by_label(&self, name: &str) -> Option<ElementId> {
        self.labels.as_ref()?.iter().position(|l| l == name)
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| (0..self.order).map(|b| self.mul(a, b)).collect())
            .collect()
    }

    /// Stable content hash of the multiplication table.
    pub fn table_hash(&self) -> u64 {
        fnv1a(std::iter::once(self.order).chain(self.table.iter().map(|&v| v as usize)))
    }

    pub fn is_idempotent(&self, a: ElementId) -> bool {
        self.mul(a, a) == a
    }

    pub fn idempotents(&self) -> Vec<ElementId> {
        self.elements().filter(|&a| self.is_idempotent(a)).collect()
    }

    /// Adjoins a new identity as the last element, even if the semigroup is
    /// already a monoid. The block `0..order` of the result equals `self`.
    pub fn adjoin_identity(&self) -> FiniteSemigroup {
        let n = self.order;
        let m = n + 1;
        let mut table = vec![0u32; m * m];
        for a in 0..n {
            for b in 0..n {
                table[a * m + b] = self.table[a * n + b];
            }
            table[a * m + n] = a as u32;
            table[n * m + a] = a as u32;
        }
        table[n * m + n] = n as u32;
        let labels = self.labels.as_ref().map(|ls| {
            let mut ls = ls.clone();
            let mut name = "1".to_string();
            while ls.contains(&name) {
                name.push('\'');
            }
            ls.push(name);
            ls
        });
        FiniteSemigroup { order: m, table, identity: Some(n), labels }
    }

    /// The opposite semigroup: `a *' b = b * a` (table transpose).
    pub fn opposite(&self) -> FiniteSemigroup {
        let n = self.order;
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = self.table[b * n + a];
            }
        }
        FiniteSemigroup {
            order: n,
            table,
            identity: self.identity,
            labels: self.labels.clone(),
        }
    }

    /// Index `q`, period `r` and the unique idempotent power of `a`:
    /// the minimal `q >= 1` and `r >= 1` with `a^(q+r) = a^q`, plus the
    /// single idempotent in the cyclic subsemigroup generated by `a`.
    pub fn idempotent_power(&self, a: ElementId) -> IdempotentPower {
        // Walk a, a^2, ... recording first-seen positions until a repeat.
        let mut seen = vec![usize::MAX; self.order];
        let mut powers = Vec::new();
        let mut cur = a;
        loop {
            if seen[cur] != usize::MAX {
                let q = seen[cur] + 1; // power index (1-based) of first repeat
                let r = powers.len() - seen[cur];
                // The idempotent is a^m with q <= m <= q+r-1 and r | m.
                let m = (q..q + r).find(|m| m % r == 0).expect("period divides some power");
                let e = powers[m - 1];
                debug_assert!(self.is_idempotent(e));
                return IdempotentPower { index: q, period: r, idempotent: e };
            }
            seen[cur] = powers.len();
            powers.push(cur);
            cur = self.mul(cur, a);
        }
    }

    /// The subsemigroup on a subset of elements, with the inherited table.
    /// `members` is deduplicated and sorted; fails with the first product
    /// that escapes the subset. Returns the subsemigroup together with the
    /// sorted member list (new index -> old element).
    pub fn subsemigroup(&self, members: &[ElementId]) -> Result<(FiniteSemigroup, Vec<ElementId>), SubsetError> {
        let members = crate::util::sorted_dedup(members);
        let mut back = vec![usize::MAX; self.order];
        for (i, &m) in members.iter().enumerate() {
            if m >= self.order {
                return Err(SubsetError::OutOfRange { value: m, order: self.order });
            }
            back[m] = i;
        }
        let k = members.len();
        let mut table = vec![0u32; k * k];
        for i in 0..k {
            for j in 0..k {
                let p = self.mul(members[i], members[j]);
                if back[p] == usize::MAX {
                    return Err(SubsetError::NotClosed { a: members[i], b: members[j], product: p });
                }
                table[i * k + j] = back[p] as u32;
            }
        }
        let labels = self.labels.as_ref().map(|ls| members.iter().map(|&m| ls[m].clone()).collect());
        Ok((FiniteSemigroup::from_parts_unchecked(k, table, labels), members))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SubsetError {
    #[error("element {value} out of range for order {order}")]
    OutOfRange { value: usize, order: usize },
    #[error("subset is not closed: {a} * {b} = {product} escapes it")]
    NotClosed { a: usize, b: usize, product: usize },
}

/// Result of [`FiniteSemigroup::idempotent_power`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdempotentPower {
    /// Minimal `q >= 1` with `a^(q+r) = a^q` for some `r >= 1`.
    pub index: usize,
    /// Minimal such `r >= 1`.
    pub period: usize,
    /// The unique idempotent among the powers of `a`.
    pub idempotent: ElementId,
}

/// A total map `{0,..,degree-1} -> {0,..,degree-1}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Transformation {
    images: Vec<usize>,
}

impl Transformation {
    pub fn new(images: Vec<usize>) -> Result<Self, SemigroupError> {
        let degree = images.len();
        for &v in &images {
            if v >= degree {
                return Err(SemigroupError::ImageRange { value: v, degree });
            }
        }
        Ok(Transformation { images })
    }

    pub fn identity(degree: usize) -> Self {
        Transformation { images: (0..degree).collect() }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// Left-to-right composition: `x (self * other) = (x self) other`.
    pub fn compose(&self, other: &Transformation) -> Transformation {
        debug_assert_eq!(self.degree(), other.degree());
        Transformation { images: self.images.iter().map(|&x| other.images[x]).collect() }
    }
}

/// Closes a generator list under left-to-right composition.
///
/// Element order is deterministic: the deduplicated generators sorted by
/// image tuple form level 0, and each later level appends the newly reached
/// compositions, again sorted by image tuple. Returns the semigroup table
/// and the transformation carried by each element index.
pub fn closure_from_transformations(
    gens: &[Transformation],
) -> Result<(FiniteSemigroup, Vec<Transformation>), SemigroupError> {
    closure_from_transformations_capped(gens, DEFAULT_CLOSURE_CAP)
}

pub fn closure_from_transformations_capped(
    gens: &[Transformation],
    cap: usize,
) -> Result<(FiniteSemigroup, Vec<Transformation>), SemigroupError> {
    if gens.is_empty() {
        return Err(SemigroupError::EmptyGenerators);
    }
    let degree = gens[0].degree();
    for g in gens {
        if g.degree() != degree {
            return Err(SemigroupError::DegreeMismatch { expected: degree, found: g.degree() });
        }
    }
    let base = crate::util::sorted_dedup(gens);
    let mut elements: Vec<Transformation> = Vec::new();
    let mut index: std::collections::HashMap<Transformation, usize> = std::collections::HashMap::new();
    for g in &base {
        index.insert(g.clone(), elements.len());
        elements.push(g.clone());
    }
    let mut frontier: Vec<usize> = (0..elements.len()).collect();
    while !frontier.is_empty() {
        let mut batch: Vec<Transformation> = Vec::new();
        for &i in &frontier {
            for g in &base {
                let p = elements[i].compose(g);
                if !index.contains_key(&p) && !batch.contains(&p) {
                    batch.push(p);
                }
            }
        }
        batch.sort();
        frontier = Vec::new();
        for t in batch {
            if elements.len() >= cap {
                return Err(SemigroupError::CapExceeded { cap, attempts: 1 });
            }
            index.insert(t.clone(), elements.len());
            frontier.push(elements.len());
            elements.push(t);
        }
    }
    let n = elements.len();
    let mut table = vec![0u32; n * n];
    for a in 0..n {
        for b in 0..n {
            let p = elements[a].compose(&elements[b]);
            table[a * n + b] = index[&p] as u32;
        }
    }
    Ok((FiniteSemigroup::from_parts_unchecked(n, table, None), elements))
}

/// Parameters for [`random_transformation_monoid_with`].
#[derive(Debug, Clone, Copy)]
pub struct RandomMonoidParams {
    pub degree: usize,
    pub n_gens: usize,
    pub seed: u64,
    /// Draws whose closure exceeds this order are rejected and re-drawn.
    pub cap: usize,
    /// Number of rejected draws tolerated before giving up.
    pub max_attempts: usize,
}

impl RandomMonoidParams {
    pub fn new(degree: usize, n_gens: usize, seed: u64) -> Self {
        RandomMonoidParams { degree, n_gens, seed, cap: 500, max_attempts: 64 }
    }
}

/// Closure of `n_gens` uniformly random transformations together with the
/// identity map: always a monoid, and a pure function of the seed.
pub fn random_transformation_monoid(
    degree: usize,
    n_gens: usize,
    seed: u64,
) -> Result<(FiniteSemigroup, Vec<Transformation>), SemigroupError> {
    random_transformation_monoid_with(RandomMonoidParams::new(degree, n_gens, seed))
}

pub fn random_transformation_monoid_with(
    params: RandomMonoidParams,
) -> Result<(FiniteSemigroup, Vec<Transformation>), SemigroupError> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(params.seed);
    for attempt in 1..=params.max_attempts {
        let mut gens = vec![Transformation::identity(params.degree)];
        for _ in 0..params.n_gens {
            let images = (0..params.degree)
                .map(|_| rng.random_range(0..params.degree))
                .collect();
            gens.push(Transformation { images });
        }
        match closure_from_transformations_capped(&gens, params.cap) {
            Ok(out) => return Ok(out),
            Err(SemigroupError::CapExceeded { .. }) if attempt < params.max_attempts => continue,
            Err(SemigroupError::CapExceeded { cap, .. }) => {
                return Err(SemigroupError::CapExceeded { cap, attempts: params.max_attempts })
            }
            Err(other) => return Err(other),
        }
    }
    unreachable!("loop returns on success or final attempt")
}
