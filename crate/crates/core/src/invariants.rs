//! Symmetric invariants `S(gl_{m|n}[x])^{gl_{m|n}[x]}` in bounded degree,
//! computed as the joint kernel of the adjoint operators.
//!
//! Elements of the symmetric superalgebra are stored as sorted monomials in
//! the letters `e_{ij} x^r`; odd letters anticommute and square to zero
//! when `p > 2`.

use rustc_hash::FxHashMap;

use crate::context::AlgebraContext;
use crate::current::CurrentRules;
use crate::element::CurrentElement;
use crate::field;
use crate::linalg::{sparse_from, Indexer, Reducer};
use crate::pbw::{Acc, Factor, Gen, Monomial, Terms};

fn letter_parity(ctx: &AlgebraContext, g: Gen) -> u32 {
    (ctx.parity(g.i()) + ctx.parity(g.j())) % 2
}

/// Supercommutative product `m * g`, as `(sign, monomial)`; `None` if zero.
pub fn sym_mul_letter(ctx: &AlgebraContext, m: &Monomial, g: Gen) -> Option<(u32, Monomial)> {
    let pg = letter_parity(ctx, g);
    let mut passed = 0u32;
    let mut v = m.0.clone();
    let mut pos = v.len();
    for (k, f) in m.factors().iter().enumerate().rev() {
        if f.gen > g {
            passed += letter_parity(ctx, f.gen) * f.exp;
            pos = k;
        } else {
            break;
        }
    }
    let sign = ctx.sign(pg * passed);
    if pos > 0 && v[pos - 1].gen == g {
        if pg == 1 && ctx.odd_cap() {
            return None;
        }
        v[pos - 1].exp += 1;
    } else {
        v.insert(pos, Factor { gen: g, exp: 1 });
    }
    Some((sign, Monomial(v)))
}

/// `ad(a)` applied to a symmetric monomial, as a derivation.
pub fn sym_ad(rules: &CurrentRules, ctx: &AlgebraContext, a: Gen, m: &Monomial) -> Terms {
    let p = ctx.p;
    let pa = letter_parity(ctx, a);
    let letters: Vec<Gen> = m.letters().collect();
    let mut acc = Acc::new(p);
    for k in 0..letters.len() {
        let before: u32 = letters[..k].iter().map(|&g| letter_parity(ctx, g)).sum();
        let after: u32 = letters[k + 1..].iter().map(|&g| letter_parity(ctx, g)).sum();
        let s0 = ctx.sign(pa * before);
        let mut rest = Monomial::one();
        for (t, &g) in letters.iter().enumerate() {
            if t != k {
                // letters stay sorted, so this is an append
                rest = sym_mul_letter(ctx, &rest, g).expect("sorted rebuild").1;
            }
        }
        let br = rules.lie_bracket(a, letters[k]);
        for (bm, c) in br {
            let b = bm.letters().next().expect("bracket is linear");
            let s1 = ctx.sign(letter_parity(ctx, b) * after);
            if let Some((s2, out)) = sym_mul_letter(ctx, &rest, b) {
                let coeff = field::mul(field::mul(c, s0, p), field::mul(s1, s2, p), p);
                acc.add(out, coeff);
            }
        }
    }
    acc.finish()
}

/// All symmetric monomials of polynomial degree `d` in letters with loop power `<= l`.
pub fn sym_monomials(ctx: &AlgebraContext, d: u32, l: u32) -> Vec<Monomial> {
    let k = ctx.size();
    let mut letters = Vec::new();
    for i in 1..=k {
        for j in 1..=k {
            for r in 0..=l {
                letters.push(Gen::new(i, j, r));
            }
        }
    }
    let mut out = Vec::new();
    fn rec(ctx: &AlgebraContext, letters: &[Gen], start: usize, left: u32, cur: &mut Vec<Factor>, out: &mut Vec<Monomial>) {
        if left == 0 {
            out.push(Monomial(cur.iter().copied().collect()));
            return;
        }
        for idx in start..letters.len() {
            let g = letters[idx];
            let cap = if letter_parity(ctx, g) == 1 && ctx.odd_cap() { 1 } else { left };
            for e in 1..=cap.min(left) {
                cur.push(Factor { gen: g, exp: e });
                rec(ctx, letters, idx + 1, left - e, cur, out);
                cur.pop();
            }
        }
    }
    rec(ctx, &letters, 0, d, &mut Vec::new(), &mut out);
    out
}

/// Weight in `Z^{m+n}` and total loop power of a monomial.
fn block_key(ctx: &AlgebraContext, m: &Monomial) -> (Vec<i64>, u32) {
    let mut w = vec![0i64; ctx.size()];
    let mut loops = 0;
    for f in m.factors() {
        w[f.gen.i() - 1] += f.exp as i64;
        w[f.gen.j() - 1] -= f.exp as i64;
        loops += f.exp * f.gen.r();
    }
    (w, loops)
}

/// Result of [`invariant_dimension`].
#[derive(Clone, Debug)]
pub struct InvariantSpace {
    pub degree: u32,
    pub loop_bound: u32,
    /// Dimension of the joint kernel.
    pub dimension: usize,
    /// Number of degree-`d` monomials in the free generators `z_r` and
    /// `(e_{ij} x^r)^p`, `(i,j) != (1,1)` even.
    pub expected: u128,
    /// A basis of the kernel.
    pub basis: Vec<CurrentElement>,
}

/// Joint kernel of `ad(e_{ij} x^s)`, `s <= op_bound`, on degree-`d`
/// symmetric tensors with loop powers `<= l`.
pub fn invariant_kernel(ctx: AlgebraContext, d: u32, l: u32, op_bound: u32) -> InvariantSpace {
    let p = ctx.p;
    let rules = CurrentRules::for_context(ctx);
    let k = ctx.size();
    let mut blocks: FxHashMap<(Vec<i64>, u32), Vec<Monomial>> = FxHashMap::default();
    for m in sym_monomials(&ctx, d, l) {
        blocks.entry(block_key(&ctx, &m)).or_default().push(m);
    }
    let mut keys: Vec<_> = blocks.keys().cloned().collect();
    keys.sort();
    let mut ops = Vec::new();
    for i in 1..=k {
        for j in 1..=k {
            for s in 0..=op_bound {
                ops.push(Gen::new(i, j, s));
            }
        }
    }
    let mut basis = Vec::new();
    for key in keys {
        // ad(e_ii) acts on a block by the weight, so only weights divisible by p survive
        if key.0.iter().any(|w| w.rem_euclid(p as i64) != 0) {
            continue;
        }
        let monos = &blocks[&key];
        let mut idx: Indexer<(usize, Monomial)> = Indexer::default();
        let mut red = Reducer::new(p);
        for m in monos {
            let entries = ops.iter().enumerate().flat_map(|(oi, &a)| {
                sym_ad(&rules, &ctx, a, m).into_iter().map(move |(mm, c)| ((oi, mm), c))
            });
            let v = sparse_from(&mut idx, entries, p);
            if let Some(dep) = red.insert(v) {
                let mut acc = Acc::new(p);
                for (t, c) in dep {
                    acc.add(monos[t].clone(), c);
                }
                basis.push(CurrentElement::from_terms(ctx, acc.finish()));
            }
        }
    }
    InvariantSpace { degree: d, loop_bound: l, dimension: basis.len(), expected: free_generator_count(&ctx, d, l), basis }
}

/// Invariants in degree `d` with loop powers `<= l`. The operators run up to
/// loop power `l + 1`: with operators capped at `l` the finite-dimensional
/// Casimir-type tensors of `gl_{m|n}` would also survive.
pub fn invariant_dimension(ctx: AlgebraContext, d: u32, l: u32) -> InvariantSpace {
    invariant_kernel(ctx, d, l, l + 1)
}

fn binom(n: u128, k: u128) -> u128 {
    let mut acc = 1u128;
    for t in 0..k {
        acc = acc * (n - t) / (t + 1);
    }
    acc
}

// monomials of degree `deg` in `vars` commuting variables
fn multisets(vars: u128, deg: u128) -> u128 {
    if deg == 0 {
        1
    } else if vars == 0 {
        0
    } else {
        binom(vars + deg - 1, deg)
    }
}

/// Count of degree-`d` monomials in `z_0..z_l` (degree 1) and the p-th
/// powers `(e_{ij} x^r)^p` (degree p) of even pairs other than `(1,1)`.
pub fn free_generator_count(ctx: &AlgebraContext, d: u32, l: u32) -> u128 {
    let k = ctx.size();
    let even_pairs = (1..=k)
        .flat_map(|i| (1..=k).map(move |j| (i, j)))
        .filter(|&(i, j)| (ctx.parity(i) + ctx.parity(j)).is_multiple_of(2) && (i, j) != (1, 1))
        .count() as u128;
    let zs = l as u128 + 1;
    let ps = even_pairs * (l as u128 + 1);
    let p = ctx.p as u128;
    let d = d as u128;
    let mut total = 0;
    let mut t = 0;
    while t * p <= d {
        total += multisets(zs, d - t * p) * multisets(ps, t);
        t += 1;
    }
    total
}
