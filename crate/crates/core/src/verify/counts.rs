//! Bounded PBW and freeness checks: ordered monomials in a generator list,
//! cut to a window of loop degree and word length, must have full rank in
//! `Y_{m|n}` and match the size of the same window in `U(gl_{m|n}[x])`.

use std::time::Instant;

use crate::central::{berezinian, CentralCatalog, CentralGenerator, GeneratorSet};
use crate::context::AlgebraContext;
use crate::element::{Canonical, Element};
use crate::error::Result;
use crate::gauss::GaussData;
use crate::linalg::{sparse_from, Indexer, Reducer};
use crate::pbw::Monomial;
use crate::yangian::Yangian;

use super::{working_gauss, CheckReport, SuiteOptions, Tally};

/// One generator of a monomial basis candidate.
#[derive(Clone, Debug)]
pub struct BasisGen {
    pub name: String,
    pub element: Element,
    /// Loop degree of the leading graded term.
    pub loop_deg: usize,
    /// Polynomial degree of the leading graded term.
    pub deg: usize,
    /// Largest allowed exponent.
    pub max_exp: usize,
}

/// Window of monomials: loop degree `<= loop_bound`, degree `<= deg_bound`.
#[derive(Clone, Copy, Debug)]
pub struct Window {
    pub loop_bound: usize,
    pub deg_bound: usize,
}

/// Outcome of [`monomial_rank`].
#[derive(Clone, Debug)]
pub struct RankResult {
    pub count: usize,
    pub rank: usize,
    /// The first monomial whose product lies in the span of the earlier
    /// ones, by name, with its product.
    pub first_dependent: Option<(String, Element)>,
}

/// Expand every ordered monomial in `gens` inside the window and reduce.
pub fn monomial_rank(y: &Yangian, gens: &[BasisGen], w: Window) -> RankResult {
    let p = y.p();
    let mut idx: Indexer<Monomial> = Indexer::default();
    let mut red = Reducer::new(p);
    let mut out = RankResult { count: 0, rank: 0, first_dependent: None };
    struct St<'a> {
        y: &'a Yangian,
        gens: &'a [BasisGen],
        w: Window,
        idx: &'a mut Indexer<Monomial>,
        red: &'a mut Reducer,
        out: &'a mut RankResult,
        exps: Vec<usize>,
    }
    fn name(gens: &[BasisGen], exps: &[usize]) -> String {
        let parts: Vec<String> = exps
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(k, &a)| if a == 1 { gens[k].name.clone() } else { format!("({})^{a}", gens[k].name) })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
    fn rec(st: &mut St, k: usize, prefix: &Element, lp: usize, dg: usize) {
        if k == st.gens.len() {
            st.out.count += 1;
            let p = st.y.p();
            let v = sparse_from(st.idx, prefix.terms().iter().map(|(m, c)| (m.clone(), *c)), p);
            if !v.is_empty() && st.red.insert(v).is_none() {
                st.out.rank += 1;
            } else if st.out.first_dependent.is_none() {
                st.out.first_dependent = Some((name(st.gens, &st.exps), prefix.clone()));
            }
            return;
        }
        let g = &st.gens[k];
        let mut cur = prefix.clone();
        let (mut l, mut d) = (lp, dg);
        let mut a = 0;
        loop {
            st.exps[k] = a;
            rec(st, k + 1, &cur, l, d);
            a += 1;
            l += g.loop_deg;
            d += g.deg;
            if a > g.max_exp || l > st.w.loop_bound || d > st.w.deg_bound {
                break;
            }
            cur = st.y.mul(&cur, &g.element);
        }
        st.exps[k] = 0;
    }
    let mut st = St { y, gens, w, idx: &mut idx, red: &mut red, out: &mut out, exps: vec![0; gens.len()] };
    rec(&mut st, 0, &y.one(), 0, 0);
    out
}

/// Number of PBW monomials of `U(gl_{m|n}[x])` in the window.
pub fn current_window_count(ctx: &AlgebraContext, w: Window) -> usize {
    let k = ctx.size();
    let odd_cap = ctx.p != 2;
    let mut gens = Vec::new();
    for i in 1..=k {
        for j in 1..=k {
            for r in 0..=w.loop_bound {
                let odd = (ctx.parity(i) + ctx.parity(j)) % 2 == 1;
                gens.push((r, if odd && odd_cap { 1 } else { usize::MAX }));
            }
        }
    }
    fn rec(gens: &[(usize, usize)], k: usize, lp: usize, dg: usize, w: Window) -> usize {
        if k == gens.len() {
            return 1;
        }
        let (l, cap) = gens[k];
        let mut total = 0;
        let mut a = 0;
        while a <= cap && lp + a * l <= w.loop_bound && dg + a <= w.deg_bound {
            total += rec(gens, k + 1, lp + a * l, dg + a, w);
            a += 1;
        }
        total
    }
    rec(&gens, 0, 0, 0, w)
}

fn cap(ctx: &AlgebraContext, i: usize, j: usize) -> usize {
    if (ctx.parity(i) + ctx.parity(j)) % 2 == 1 && ctx.p != 2 {
        1
    } else {
        usize::MAX
    }
}

fn gen(name: String, element: Element, r: usize, max_exp: usize) -> BasisGen {
    BasisGen { name, element, loop_deg: r - 1, deg: 1, max_exp }
}

/// `d_i^{(r)}` for `i` in `diag`, and `e_{ij}^{(r)}, f_{ji}^{(r)}`, `r <= D+1`.
/// With `reduced`, even generators get exponent `< p`.
fn drinfeld_gens(gd: &GaussData, diag: impl Iterator<Item = usize> + Clone, d: usize, reduced: bool) -> Vec<BasisGen> {
    let ctx = gd.ctx();
    let k = ctx.size();
    let p = ctx.p as usize;
    let red = |c: usize| if reduced { c.min(p - 1) } else { c };
    let mut out = Vec::new();
    for r in 1..=d + 1 {
        for i in diag.clone() {
            out.push(gen(format!("d_{i}^({r})"), gd.d(i).coeff(r).clone(), r, red(usize::MAX)));
        }
        for i in 1..=k {
            for j in i + 1..=k {
                let c = red(cap(&ctx, i, j));
                out.push(gen(format!("e_{{{i},{j}}}^({r})"), gd.e(i, j).coeff(r).clone(), r, c));
                out.push(gen(format!("f_{{{j},{i}}}^({r})"), gd.f(j, i).coeff(r).clone(), r, c));
            }
        }
    }
    out
}

/// `h_i^{(r)}`, `e_{ij}^{(r)}`, `f_{ji}^{(r)}`, `r <= D+1`.
fn sy_gens(gd: &GaussData, d: usize) -> Vec<BasisGen> {
    let ctx = gd.ctx();
    let mut out = Vec::new();
    for r in 1..=d + 1 {
        for i in 1..ctx.size() {
            out.push(gen(format!("h_{i}^({r})"), gd.h(i).coeff(r).clone(), r, usize::MAX));
        }
    }
    let mut rest = drinfeld_gens(gd, std::iter::empty(), d, false);
    out.append(&mut rest);
    out
}

fn rank_report(id: &str, ctx: &AlgebraContext, y: &Yangian, gens: &[BasisGen], w: Window, start: Instant) -> CheckReport {
    let RankResult { count, rank, first_dependent } = monomial_rank(y, gens, w);
    let expected = current_window_count(ctx, w);
    let mut t = Tally::new();
    let describe = |what: &str| {
        format!("{what}: {count} monomials, rank {rank}, U(g) window {expected} (loop <= {}, length <= {})", w.loop_bound, w.deg_bound)
    };
    if let Some((name, x)) = first_dependent {
        t.fail_with(|| format!("{} ({name} depends on earlier monomials)", describe("dependent monomials")), x.to_canonical());
    } else if count != expected {
        t.fail_with(|| describe("count mismatch"), Canonical(Vec::new()));
    } else {
        t.pass_one();
    }
    t.report(id, ctx, start).with_note(describe("window"))
}

/// Bounded PBW checks at loop degree `<= D = opts.bound`, word length `<= D+1`:
/// Drinfeld monomials; `SY ⊗ Y_1`; `SY ⊗ Z_HC` when `p ∤ m-n`; and reduced
/// monomials times the p-center. The mutated fixture repeats a generator.
pub fn verify_pbw_counts(ctx: &AlgebraContext, opts: SuiteOptions) -> Result<Vec<CheckReport>> {
    let d = opts.bound;
    let p = ctx.p as usize;
    let w = Window { loop_bound: d, deg_bound: d + 1 };
    let gd = working_gauss(ctx, d + p);
    let y = gd.yangian();
    let k = ctx.size();
    let mut out = Vec::new();
    let mutate = |mut g: Vec<BasisGen>| {
        if opts.mutate {
            let mut dup = g[0].clone();
            dup.name.push('\'');
            dup.element = dup.element.scale_i(2);
            g.insert(1, dup);
        }
        g
    };

    let start = Instant::now();
    let gens = mutate(drinfeld_gens(&gd, 1..=k, d, false));
    out.push(rank_report("pbw/drinfeld", ctx, y, &gens, w, start));

    let start = Instant::now();
    let mut gens = sy_gens(&gd, d);
    for r in 1..=d + 1 {
        gens.push(gen(format!("d_1^({r})"), gd.d(1).coeff(r).clone(), r, usize::MAX));
    }
    out.push(rank_report("pbw/sy-y1", ctx, y, &gens, w, start));

    let start = Instant::now();
    let diff = ctx.m as i64 - ctx.n as i64;
    if diff.rem_euclid(p as i64) != 0 {
        let c = berezinian(&gd);
        let mut gens = sy_gens(&gd, d);
        for r in 1..=d + 1 {
            gens.push(gen(format!("c^({r})"), c.coeff(r).clone(), r, usize::MAX));
        }
        out.push(rank_report("pbw/sy-hc", ctx, y, &gens, w, start));
    } else {
        out.push(Tally::new().report("pbw/sy-hc", ctx, start).with_note("p divides m-n; the tensor decomposition is not claimed"));
    }

    let start = Instant::now();
    let cat = CentralCatalog::build(gd.clone())?;
    let mut gens = Vec::new();
    for g in cat.enumerate_generators(GeneratorSet::PCenterY) {
        let loop_deg = g.weight - p;
        if loop_deg <= d {
            gens.push(BasisGen { name: g.name, element: g.element, loop_deg, deg: p, max_exp: usize::MAX });
        }
    }
    gens.extend(drinfeld_gens(&gd, 1..=k, d, true));
    out.push(rank_report("pbw/p-center-free", ctx, y, &gens, w, start));
    Ok(out)
}

/// Monomials in `gens` of total weight `<= d` are linearly independent.
pub fn verify_independence(y: &Yangian, gens: &[CentralGenerator], d: usize) -> CheckReport {
    let start = Instant::now();
    let basis: Vec<BasisGen> = gens
        .iter()
        .filter(|g| g.weight <= d)
        .map(|g| BasisGen { name: g.name.clone(), element: g.element.clone(), loop_deg: g.weight, deg: 0, max_exp: usize::MAX })
        .collect();
    let RankResult { count, rank, first_dependent } = monomial_rank(y, &basis, Window { loop_bound: d, deg_bound: usize::MAX });
    let mut t = Tally::new();
    match first_dependent {
        None => t.pass_one(),
        Some((name, x)) => {
            t.fail_with(|| format!("{count} monomials of weight <= {d}, rank {rank}; {name} is dependent"), x.to_canonical())
        }
    }
    t.report("independence", &y.ctx(), start)
}
