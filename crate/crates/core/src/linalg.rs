//! Sparse row reduction over F_p.

use rustc_hash::FxHashMap;

use crate::field;

/// Sparse vector: strictly increasing column indices with nonzero entries.
pub type SparseVec = Vec<(usize, u32)>;

/// `a + c * b` on sparse vectors.
pub fn axpy(a: &[(usize, u32)], c: u32, b: &[(usize, u32)], p: u32) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i]);
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            let v = field::mul(b[j].1, c, p);
            if v != 0 {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let v = field::add(a[i].1, field::mul(b[j].1, c, p), p);
            if v != 0 {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Incremental echelon form that remembers how each stored row was built
/// from the inserted vectors, so that dependencies can be reported.
pub struct Reducer {
    p: u32,
    pivots: FxHashMap<usize, (SparseVec, SparseVec)>,
    inserted: usize,
}

impl Reducer {
    pub fn new(p: u32) -> Self {
        Reducer { p, pivots: FxHashMap::default(), inserted: 0 }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Insert the next vector. Returns `None` if it is independent of the
    /// earlier ones, otherwise the dependency `Σ c_k v_k = 0` (over the
    /// insertion indices, including the new one).
    pub fn insert(&mut self, v: SparseVec) -> Option<SparseVec> {
        let p = self.p;
        let idx = self.inserted;
        self.inserted += 1;
        let mut v = v;
        let mut tag: SparseVec = vec![(idx, 1)];
        loop {
            let Some(&(col, lead)) = v.first() else {
                return Some(tag);
            };
            match self.pivots.get(&col) {
                Some((row, rtag)) => {
                    let c = field::neg(lead, p);
                    v = axpy(&v, c, row, p);
                    tag = axpy(&tag, c, rtag, p);
                }
                None => {
                    let s = field::inv(lead, p);
                    let row: SparseVec = v.iter().map(|&(k, x)| (k, field::mul(x, s, p))).collect();
                    let rtag: SparseVec = tag.iter().map(|&(k, x)| (k, field::mul(x, s, p))).collect();
                    self.pivots.insert(col, (row, rtag));
                    return None;
                }
            }
        }
    }
}

/// Maps keys to dense column indices.
pub struct Indexer<K: std::hash::Hash + Eq + Clone> {
    map: FxHashMap<K, usize>,
}

impl<K: std::hash::Hash + Eq + Clone> Default for Indexer<K> {
    fn default() -> Self {
        Indexer { map: FxHashMap::default() }
    }
}

impl<K: std::hash::Hash + Eq + Clone> Indexer<K> {
    pub fn index(&mut self, k: &K) -> usize {
        if let Some(&i) = self.map.get(k) {
            return i;
        }
        let i = self.map.len();
        self.map.insert(k.clone(), i);
        i
    }
    pub fn len(&self) -> usize {
        self.map.len()
    }
    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}

/// Turn `(key, coeff)` pairs into a sorted sparse vector.
pub fn sparse_from<K: std::hash::Hash + Eq + Clone>(
    idx: &mut Indexer<K>,
    entries: impl IntoIterator<Item = (K, u32)>,
    p: u32,
) -> SparseVec {
    let mut acc: FxHashMap<usize, u32> = FxHashMap::default();
    for (k, c) in entries {
        let i = idx.index(&k);
        let e = acc.entry(i).or_insert(0);
        *e = field::add(*e, c, p);
    }
    let mut v: SparseVec = acc.into_iter().filter(|(_, c)| *c != 0).collect();
    v.sort_unstable();
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_dependency() {
        let mut r = Reducer::new(3);
        assert!(r.insert(vec![(0, 1), (1, 2)]).is_none());
        assert!(r.insert(vec![(1, 1)]).is_none());
        let dep = r.insert(vec![(0, 2), (1, 1)]).expect("dependent");
        // 2*v0 + 0*v1 = v2 up to sign: check the combination vanishes
        let vs = [vec![(0usize, 1u32), (1, 2)], vec![(1, 1)], vec![(0, 2), (1, 1)]];
        let mut sum: SparseVec = Vec::new();
        for (k, c) in dep {
            sum = axpy(&sum, c, &vs[k], 3);
        }
        assert!(sum.is_empty());
        assert_eq!(r.rank(), 2);
    }
}
