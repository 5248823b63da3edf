//! Small shared utilities: bit matrices, union-find, set partitions.

/// Dense boolean matrix backed by `u64` blocks, used for reachability closures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitMatrix {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl BitMatrix {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64);
        BitMatrix { n, words, rows: vec![0u64; n * words] }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize) {
        self.rows[i * self.words + j / 64] |= 1 << (j % 64);
    }

    /// `rows[i] |= rows[j]`; returns true if row `i` changed.
    pub fn or_row(&mut self, i: usize, j: usize) -> bool {
        let (i0, j0) = (i * self.words, j * self.words);
        let mut changed = false;
        for k in 0..self.words {
            let old = self.rows[i0 + k];
            let new = old | self.rows[j0 + k];
            if new != old {
                self.rows[i0 + k] = new;
                changed = true;
            }
        }
        changed
    }

    pub fn row_ones(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        let i0 = i * self.words;
        (0..self.n).filter(move |&j| self.rows[i0 + j / 64] >> (j % 64) & 1 == 1)
    }
}

/// Union-find with path compression and union by size.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), size: vec![1; n] }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns true if the two classes were distinct and are now merged.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }
}

/// A partition of `{0, .., n-1}` into classes, numbered by first occurrence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
}

impl Partition {
    /// Builds a partition from an arbitrary class labelling, renumbering
    /// classes in order of first appearance so equal partitions compare equal.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut remap: Vec<Option<usize>> = vec![None; labels.len()];
        let mut class_of = vec![0usize; labels.len()];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for (x, &l) in labels.iter().enumerate() {
            let c = match remap.get(l).copied().flatten() {
                Some(c) => c,
                None => {
                    let c = classes.len();
                    if l >= remap.len() {
                        remap.resize(l + 1, None);
                    }
                    remap[l] = Some(c);
                    classes.push(Vec::new());
                    c
                }
            };
            class_of[x] = c;
            classes[c].push(x);
        }
        Partition { class_of, classes }
    }

    pub fn from_union_find(uf: &mut UnionFind, n: usize) -> Self {
        let labels: Vec<usize> = (0..n).map(|x| uf.find(x)).collect();
        Partition::from_labels(&labels)
    }

    pub fn singletons(n: usize) -> Self {
        Partition::from_labels(&(0..n).collect::<Vec<_>>())
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn size(&self) -> usize {
        self.class_of.len()
    }

    #[inline]
    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn class(&self, c: usize) -> &[usize] {
        &self.classes[c]
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn same(&self, x: usize, y: usize) -> bool {
        self.class_of[x] == self.class_of[y]
    }

    pub fn is_universal(&self) -> bool {
        self.classes.len() <= 1
    }

    pub fn is_trivial(&self) -> bool {
        self.classes.len() == self.class_of.len()
    }
}

/// Stable deduplicating sort used for canonical element orderings.
pub fn sorted_dedup<T: Ord + Clone>(items: &[T]) -> Vec<T> {
    let mut v = items.to_vec();
    v.sort();
    v.dedup();
    v
}

/// FNV-1a over little-endian words; stable across runs and platforms.
pub fn fnv1a(data: impl IntoIterator<Item = usize>) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for x in data {
        for b in (x as u64).to_le_bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x100000001b3);
        }
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bitmatrix_roundtrip() {
        let mut m = BitMatrix::new(70);
        m.set(3, 64);
        m.set(3, 0);
        assert!(m.get(3, 64));
        assert!(!m.get(3, 63));
        assert_eq!(m.row_ones(3).collect::<Vec<_>>(), vec![0, 64]);
        assert!(m.or_row(5, 3));
        assert!(!m.or_row(5, 3));
        assert!(m.get(5, 64));
    }

    #[test]
    fn partition_renumbers_by_first_occurrence() {
        let p = Partition::from_labels(&[7, 7, 2, 7, 2]);
        assert_eq!(p.len(), 2);
        assert_eq!(p.class_of(0), 0);
        assert_eq!(p.class_of(2), 1);
        assert_eq!(p.class(0), &[0, 1, 3]);
        let q = Partition::from_labels(&[0, 0, 1, 0, 1]);
        assert_eq!(p, q);
    }

    #[test]
    fn union_find_merges() {
        let mut uf = UnionFind::new(4);
        assert!(uf.union(0, 1));
        assert!(!uf.union(1, 0));
        assert!(uf.union(2, 3));
        assert!(uf.union(0, 3));
        let p = Partition::from_union_find(&mut uf, 4);
        assert!(p.is_universal());
    }
}
