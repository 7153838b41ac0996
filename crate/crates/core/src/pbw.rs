//! Generic PBW straightening for algebras presented by a total order on
//! generators and a bracket rule `[x, y]` for `x >= y`.
//!
//! A product `A * y` with `A` a sorted monomial whose last letter `x` exceeds
//! `y` is rewritten as `(-1)^{|x||y|} (A' y) x + A' [x, y]` where `A = A' x`.
//! Odd squares become `[x, x] / 2` when the rules ask for it. Results of
//! `A * y` and of every bracket are memoised.

use std::sync::Arc;

use parking_lot::RwLock;
use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::field;

/// Packed generator label `(i, j, r)`; the packing preserves the
/// lexicographic order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Gen(u32);

impl Gen {
    pub const MAX_SUPERSCRIPT: u32 = u16::MAX as u32;

    pub fn new(i: usize, j: usize, r: u32) -> Gen {
        debug_assert!(i < 256 && j < 256 && r <= Self::MAX_SUPERSCRIPT);
        Gen(((i as u32) << 24) | ((j as u32) << 16) | r)
    }
    #[inline]
    pub fn i(self) -> usize {
        (self.0 >> 24) as usize
    }
    #[inline]
    pub fn j(self) -> usize {
        ((self.0 >> 16) & 0xff) as usize
    }
    #[inline]
    pub fn r(self) -> u32 {
        self.0 & 0xffff
    }
    pub fn with_r(self, r: u32) -> Gen {
        Gen::new(self.i(), self.j(), r)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Factor {
    pub gen: Gen,
    pub exp: u32,
}

/// Sorted product of generator powers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Monomial(pub SmallVec<[Factor; 4]>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(SmallVec::new())
    }
    pub fn gen(g: Gen) -> Self {
        let mut v = SmallVec::new();
        v.push(Factor { gen: g, exp: 1 });
        Monomial(v)
    }
    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }
    pub fn factors(&self) -> &[Factor] {
        &self.0
    }
    pub fn len(&self) -> u32 {
        self.0.iter().map(|f| f.exp).sum()
    }
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
    pub fn last_gen(&self) -> Option<Gen> {
        self.0.last().map(|f| f.gen)
    }
    /// Letters with multiplicity, in order.
    pub fn letters(&self) -> impl Iterator<Item = Gen> + '_ {
        self.0.iter().flat_map(|f| std::iter::repeat_n(f.gen, f.exp as usize))
    }
    /// Drop one copy of the last letter.
    fn pop_last(&self) -> Monomial {
        let mut v = self.0.clone();
        let last = v.last_mut().expect("non-empty monomial");
        if last.exp == 1 {
            v.pop();
        } else {
            last.exp -= 1;
        }
        Monomial(v)
    }
    /// Append `g`, which must be `>=` the last letter.
    fn push(&self, g: Gen) -> Monomial {
        let mut v = self.0.clone();
        match v.last_mut() {
            Some(f) if f.gen == g => f.exp += 1,
            _ => v.push(Factor { gen: g, exp: 1 }),
        }
        Monomial(v)
    }
    pub fn from_letters(letters: &[Gen]) -> Option<Monomial> {
        let mut m = Monomial::one();
        for &g in letters {
            if let Some(l) = m.last_gen() {
                if l > g {
                    return None;
                }
            }
            m = m.push(g);
        }
        Some(m)
    }
}

/// Canonical linear combination: sorted by monomial, no zero coefficients.
pub type Terms = Vec<(Monomial, u32)>;

/// Hash-map accumulator for building `Terms`.
pub struct Acc {
    p: u32,
    map: FxHashMap<Monomial, u32>,
}

impl Acc {
    pub fn new(p: u32) -> Self {
        Acc { p, map: FxHashMap::default() }
    }
    #[inline]
    pub fn add(&mut self, m: Monomial, c: u32) {
        if c == 0 {
            return;
        }
        let p = self.p;
        let e = self.map.entry(m).or_insert(0);
        *e = field::add(*e, c, p);
    }
    pub fn add_ref(&mut self, m: &Monomial, c: u32) {
        if c == 0 {
            return;
        }
        if let Some(e) = self.map.get_mut(m) {
            *e = field::add(*e, c, self.p);
        } else {
            self.map.insert(m.clone(), c);
        }
    }
    pub fn add_terms(&mut self, t: &[(Monomial, u32)], scale: u32) {
        if scale == 0 {
            return;
        }
        for (m, c) in t {
            self.add_ref(m, field::mul(*c, scale, self.p));
        }
    }
    pub fn finish(self) -> Terms {
        let mut v: Terms = self.map.into_iter().filter(|(_, c)| *c != 0).collect();
        v.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        v
    }
}

/// Add two canonical term lists with scalars.
pub fn lin_comb(a: &[(Monomial, u32)], ca: u32, b: &[(Monomial, u32)], cb: u32, p: u32) -> Terms {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ord = if i == a.len() {
            std::cmp::Ordering::Greater
        } else if j == b.len() {
            std::cmp::Ordering::Less
        } else {
            a[i].0.cmp(&b[j].0)
        };
        match ord {
            std::cmp::Ordering::Less => {
                let c = field::mul(a[i].1, ca, p);
                if c != 0 {
                    out.push((a[i].0.clone(), c));
                }
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                let c = field::mul(b[j].1, cb, p);
                if c != 0 {
                    out.push((b[j].0.clone(), c));
                }
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let c = field::add(field::mul(a[i].1, ca, p), field::mul(b[j].1, cb, p), p);
                if c != 0 {
                    out.push((a[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Presentation data consumed by [`Engine`].
pub trait Rules: Send + Sync + Sized {
    fn prime(&self) -> u32;
    fn parity(&self, g: Gen) -> u32;
    /// Whether an odd letter squares to `[x, x] / 2`.
    fn odd_cap(&self) -> bool;
    /// Normal form of `[x, y]` for `x >= y`. May multiply through `eng`.
    fn bracket(&self, eng: &Engine<Self>, x: Gen, y: Gen) -> Terms;
}

type Cache<K> = RwLock<FxHashMap<K, Arc<Terms>>>;

/// Memoising straightening engine.
pub struct Engine<R: Rules> {
    pub rules: R,
    brackets: Cache<(Gen, Gen)>,
    inserts: Cache<(Monomial, Gen)>,
}

impl<R: Rules> Engine<R> {
    pub fn new(rules: R) -> Self {
        Engine { rules, brackets: RwLock::new(FxHashMap::default()), inserts: RwLock::new(FxHashMap::default()) }
    }

    pub fn p(&self) -> u32 {
        self.rules.prime()
    }

    pub fn monomial_parity(&self, m: &Monomial) -> u32 {
        m.0.iter().map(|f| self.rules.parity(f.gen) * f.exp).sum::<u32>() % 2
    }

    /// Cached normal form of `[x, y]`, `x >= y`.
    pub fn bracket(&self, x: Gen, y: Gen) -> Arc<Terms> {
        if let Some(t) = self.brackets.read().get(&(x, y)) {
            return t.clone();
        }
        let t = Arc::new(self.rules.bracket(self, x, y));
        self.brackets.write().entry((x, y)).or_insert(t).clone()
    }

    /// Normal form of the two-letter word `x y`.
    pub fn mul_gens(&self, x: Gen, y: Gen) -> Terms {
        let mut acc = Acc::new(self.p());
        self.mul_mono_gen_into(&Monomial::gen(x), y, 1, &mut acc);
        acc.finish()
    }

    fn appendable(&self, a: &Monomial, y: Gen) -> bool {
        match a.last_gen() {
            None => true,
            Some(x) if x < y => true,
            Some(x) if x == y => !(self.rules.odd_cap() && self.rules.parity(y) == 1),
            _ => false,
        }
    }

    /// `acc += scale * (a * y)`.
    pub fn mul_mono_gen_into(&self, a: &Monomial, y: Gen, scale: u32, acc: &mut Acc) {
        if scale == 0 {
            return;
        }
        if self.appendable(a, y) {
            acc.add(a.push(y), scale);
            return;
        }
        let t = self.mul_mono_gen_slow(a, y);
        acc.add_terms(&t, scale);
    }

    fn mul_mono_gen_slow(&self, a: &Monomial, y: Gen) -> Arc<Terms> {
        let key = (a.clone(), y);
        if let Some(t) = self.inserts.read().get(&key) {
            return t.clone();
        }
        let p = self.p();
        let x = a.last_gen().expect("slow path needs a letter");
        let rest = a.pop_last();
        let mut acc = Acc::new(p);
        if x == y {
            // odd square
            let br = self.bracket(x, x);
            let half = field::inv(2, p);
            for (m, c) in br.iter() {
                self.mul_mono_mono_into(&rest, m, field::mul(*c, half, p), &mut acc);
            }
        } else {
            let s = field::sign(self.rules.parity(x) * self.rules.parity(y), p);
            let mut first = Acc::new(p);
            self.mul_mono_gen_into(&rest, y, 1, &mut first);
            for (m, c) in first.finish() {
                self.mul_mono_gen_into(&m, x, field::mul(c, s, p), &mut acc);
            }
            let br = self.bracket(x, y);
            for (m, c) in br.iter() {
                self.mul_mono_mono_into(&rest, m, *c, &mut acc);
            }
        }
        let t = Arc::new(acc.finish());
        self.inserts.write().entry(key).or_insert(t).clone()
    }

    /// `acc += scale * (a * b)`.
    pub fn mul_mono_mono_into(&self, a: &Monomial, b: &Monomial, scale: u32, acc: &mut Acc) {
        if scale == 0 {
            return;
        }
        if b.is_one() {
            acc.add_ref(a, scale);
            return;
        }
        let first = b.0[0].gen;
        let fast = match a.last_gen() {
            None => true,
            Some(x) if x < first => true,
            Some(x) if x == first => !(self.rules.odd_cap() && self.rules.parity(x) == 1),
            _ => false,
        };
        if fast {
            let mut v = a.0.clone();
            let mut it = b.0.iter();
            if let (Some(l), Some(f)) = (v.last_mut(), b.0.first()) {
                if l.gen == f.gen {
                    l.exp += f.exp;
                    it.next();
                }
            }
            v.extend(it.copied());
            acc.add(Monomial(v), scale);
            return;
        }
        let p = self.p();
        let mut cur: Terms = vec![(a.clone(), 1)];
        for y in b.letters() {
            let mut next = Acc::new(p);
            for (m, c) in &cur {
                self.mul_mono_gen_into(m, y, *c, &mut next);
            }
            cur = next.finish();
        }
        acc.add_terms(&cur, scale);
    }

    /// Product of two canonical term lists.
    pub fn mul_terms(&self, a: &[(Monomial, u32)], b: &[(Monomial, u32)]) -> Terms {
        let p = self.p();
        let mut acc = Acc::new(p);
        for (ma, ca) in a {
            for (mb, cb) in b {
                self.mul_mono_mono_into(ma, mb, field::mul(*ca, *cb, p), &mut acc);
            }
        }
        acc.finish()
    }

    /// Normal form of an arbitrary word of letters.
    pub fn word(&self, letters: &[Gen]) -> Terms {
        let p = self.p();
        let mut cur: Terms = vec![(Monomial::one(), 1 % p)];
        for &y in letters {
            let mut next = Acc::new(p);
            for (m, c) in &cur {
                self.mul_mono_gen_into(m, y, *c, &mut next);
            }
            cur = next.finish();
        }
        cur
    }

    /// Supercommutator of parity-split term lists.
    pub fn supercommutator(&self, a: &[(Monomial, u32)], b: &[(Monomial, u32)]) -> Terms {
        let p = self.p();
        let (a0, a1) = self.split_parity(a);
        let (b0, b1) = self.split_parity(b);
        let mut acc = Acc::new(p);
        for (x, px) in [(&a0, 0u32), (&a1, 1)] {
            for (y, py) in [(&b0, 0u32), (&b1, 1)] {
                if x.is_empty() || y.is_empty() {
                    continue;
                }
                acc.add_terms(&self.mul_terms(x, y), 1);
                let s = field::neg(field::sign(px * py, p), p);
                acc.add_terms(&self.mul_terms(y, x), s);
            }
        }
        acc.finish()
    }

    pub fn split_parity(&self, a: &[(Monomial, u32)]) -> (Terms, Terms) {
        let mut even = Vec::new();
        let mut odd = Vec::new();
        for (m, c) in a {
            if self.monomial_parity(m) == 0 {
                even.push((m.clone(), *c));
            } else {
                odd.push((m.clone(), *c));
            }
        }
        (even, odd)
    }

    /// Number of memoised entries (brackets, insertions).
    pub fn cache_sizes(&self) -> (usize, usize) {
        (self.brackets.read().len(), self.inserts.read().len())
    }
}
