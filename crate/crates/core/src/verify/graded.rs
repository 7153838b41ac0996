//! Centrality, vanishing, series identities and graded images of the
//! central families.

use std::sync::Arc;
use std::time::Instant;

use crate::central::{self, CentralCatalog};
use crate::context::AlgebraContext;
use crate::current::CurrentAlgebra;
use crate::element::{CurrentElement, Element};
use crate::error::Result;
use crate::linalg::{sparse_from, Indexer, Reducer};
use crate::pbw::Monomial;
use crate::series::USeries;
use crate::yangian::{loop_degree, Yangian};

use super::{working_gauss, CheckReport, SuiteOptions, Tally};

/// Supercommutators of `z` with every `t_{k,l}^{(s)}`, `s <= s_max`, into `t`.
pub fn central_into(y: &Yangian, z: &Element, s_max: u32, label: &str, t: &mut Tally) {
    let k = y.ctx().size();
    for s in 1..=s_max {
        for a in 1..=k {
            for b in 1..=k {
                let br = y.supercommutator(z, &y.t(a, b, s));
                t.zero(|| format!("{label}[t_{{{a},{b}}}^({s})]"), &br);
            }
        }
    }
}

/// `z` supercommutes with all `t_{k,l}^{(s)}`, `s <= s_max`. The witness
/// names the first generator that fails and carries the supercommutator.
pub fn verify_central(y: &Yangian, z: &Element, s_max: u32) -> CheckReport {
    let start = Instant::now();
    let mut t = Tally::new();
    central_into(y, z, s_max, "", &mut t);
    t.report("central", &y.ctx(), start)
}

/// `top_graded(z, d) == expected`.
pub fn verify_graded(y: &Yangian, z: &Element, d: u32, expected: &CurrentElement) -> Result<CheckReport> {
    let start = Instant::now();
    let mut t = Tally::new();
    let got = y.top_graded(z, d)?;
    if got == *expected {
        t.pass_one();
    } else {
        t.fail_with(|| format!("gr_{d}"), got.sub(expected).to_canonical());
    }
    Ok(t.report("graded", &y.ctx(), start))
}

fn graded_eq(y: &Yangian, z: &Element, d: u32, expected: &CurrentElement, label: impl Fn() -> String, t: &mut Tally) -> Result<()> {
    if let Some(deg) = loop_degree(z) {
        if deg > d {
            t.fail_with(|| format!("{} has loop degree {deg} > {d}", label()), z.to_canonical());
            return Ok(());
        }
    }
    let got = y.top_graded(z, d)?;
    if got == *expected {
        t.pass_one();
    } else {
        t.fail_with(label, got.sub(expected).to_canonical());
    }
    Ok(())
}

fn series_eq(a: &USeries, b: &USeries, upto: usize, label: &str, t: &mut Tally) {
    for r in 0..=upto {
        t.eq(|| format!("{label} coeff {r}"), a.coeff(r), b.coeff(r));
    }
}

fn even_pairs(ctx: &AlgebraContext) -> Vec<(usize, usize)> {
    let k = ctx.size();
    let mut out = Vec::new();
    for i in 1..=k {
        for j in 1..=k {
            if (ctx.parity(i) + ctx.parity(j)).is_multiple_of(2) {
                out.push((i, j));
            }
        }
    }
    out
}

/// Whether `target` lies in the span of `basis`.
fn in_span(p: u32, basis: &[Element], target: &Element) -> bool {
    let mut idx: Indexer<Monomial> = Indexer::default();
    let mut red = Reducer::new(p);
    for b in basis {
        red.insert(sparse_from(&mut idx, b.terms().iter().map(|(m, c)| (m.clone(), *c)), p));
    }
    let v = sparse_from(&mut idx, target.terms().iter().map(|(m, c)| (m.clone(), *c)), p);
    v.is_empty() || red.insert(v).is_some()
}

/// Monomials `E_1^{a_1} E_2^{a_2} ...` with `Σ a_s s p <= weight`.
fn power_monomials(y: &Yangian, gens: &[Element], p: usize, weight: usize) -> Vec<Element> {
    let mut out = vec![y.one()];
    for (s, g) in gens.iter().enumerate() {
        let w = (s + 1) * p;
        let mut next = Vec::new();
        for base in &out {
            let mut cur = base.clone();
            let mut used = 0;
            next.push(cur.clone());
            while used + w <= weight {
                cur = y.mul(&cur, g);
                used += w;
                next.push(cur.clone());
            }
        }
        out = next;
    }
    out
}

/// The central-element suite: centrality, vanishing, the series identities
/// among the families, graded images, and the triangular relation between
/// `p_{ij}^{(r)}` and `(e_{ij}^{(s)})^p`.
///
/// `opts.bound` caps the `s` of the `t_{k,l}^{(s)}` tested against; the
/// mutated fixture adds `t_{1,1}^{(1)}` to `c^{(1)}`.
pub fn verify_center(ctx: &AlgebraContext, opts: SuiteOptions) -> Result<Vec<CheckReport>> {
    let gd = working_gauss(ctx, 0);
    let cat = CentralCatalog::build(gd.clone())?;
    let y: &Arc<Yangian> = cat.yangian();
    let (p, nn, k) = (ctx.p as usize, ctx.trunc, ctx.size());
    let s_max = (opts.bound.min(nn)) as u32;
    let coeff = |name: &str, r: usize| -> Result<Element> { Ok(cat.series(name)?.coeff(r).clone()) };
    let mut out = Vec::new();
    let mut run = |id: &str, f: &mut dyn FnMut(&mut Tally) -> Result<()>| -> Result<()> {
        let start = Instant::now();
        let mut t = Tally::new();
        f(&mut t)?;
        let mut rep = t.report(format!("center/{id}"), ctx, start);
        if rep.checked == 0 {
            rep = rep.with_note("nothing to check in this context");
        }
        out.push(rep);
        Ok(())
    };

    run("central-c", &mut |t| {
        for r in 1..=nn {
            let mut z = coeff("c", r)?;
            if opts.mutate && r == 1 {
                z = z.add(&y.t(1, 1, 1));
            }
            central_into(y, &z, s_max, &format!("c^({r})"), t);
        }
        Ok(())
    })?;
    run("central-b", &mut |t| {
        for i in 1..=k {
            for r in [p, 2 * p].into_iter().filter(|&r| r <= nn) {
                central_into(y, &coeff(&format!("b_{i}"), r)?, s_max, &format!("b_{i}^({r})"), t);
            }
        }
        Ok(())
    })?;
    run("central-root-powers", &mut |t| {
        for (i, j) in even_pairs(ctx).into_iter().filter(|(i, j)| i < j) {
            for r in 1..=2.min(nn) {
                central_into(y, &cat.e_power(i, j, r), s_max, &format!("(e_{{{i},{j}}}^({r}))^p"), t);
                central_into(y, &cat.f_power(j, i, r), s_max, &format!("(f_{{{j},{i}}}^({r}))^p"), t);
            }
        }
        Ok(())
    })?;
    run("central-pq", &mut |t| {
        for (i, j) in even_pairs(ctx).into_iter().filter(|(i, j)| i < j) {
            for r in (p..=nn).step_by(p) {
                central_into(y, &coeff(&format!("p_{{{i},{j}}}"), r)?, s_max, &format!("p_{{{i},{j}}}^({r})"), t);
                central_into(y, &coeff(&format!("q_{{{j},{i}}}"), r)?, s_max, &format!("q_{{{j},{i}}}^({r})"), t);
            }
        }
        Ok(())
    })?;
    run("central-a", &mut |t| {
        for i in 1..k {
            if p <= nn {
                central_into(y, &coeff(&format!("a_{i}"), p)?, s_max, &format!("a_{i}^({p})"), t);
            }
        }
        Ok(())
    })?;
    run("central-s", &mut |t| {
        for (i, j) in even_pairs(ctx) {
            if p <= nn {
                central_into(y, &coeff(&format!("s_{{{i},{j}}}"), p)?, s_max, &format!("s_{{{i},{j}}}^({p})"), t);
            }
        }
        Ok(())
    })?;
    run("vanishing", &mut |t| {
        for (name, e) in cat.entries() {
            for r in 1..(e.vanishing_below as usize).min(nn + 1) {
                t.zero(|| format!("{name}^({r})"), e.series.coeff(r));
            }
        }
        Ok(())
    })?;
    run("bc-double-product", &mut |t| {
        series_eq(&central::bc_series(&gd)?, &central::bc_from_berezinian(&gd), nn, "bc", t);
        Ok(())
    })?;
    run("a-vs-b", &mut |t| {
        for i in 1..k {
            series_eq(&central::a_series(&gd, i)?, &central::a_from_b(&gd, i)?, nn, &format!("a_{i}"), t);
        }
        Ok(())
    })?;
    run("s-vs-b", &mut |t| {
        series_eq(cat.series("s_{1,1}")?, cat.series("b_1")?, nn, "s_{1,1}", t);
        if k >= 2 && ctx.parity(2) == ctx.parity(1) {
            let rhs = y.series_mul(cat.series("b_1")?, cat.series("p_{1,2}")?);
            series_eq(cat.series("s_{1,2}")?, &rhs, nn, "s_{1,2}", t);
        }
        Ok(())
    })?;
    run("berezinian-rtt", &mut |t| {
        series_eq(&central::berezinian(&gd), &central::berezinian_rtt(&gd), nn, "c", t);
        Ok(())
    })?;

    let cur = CurrentAlgebra::new(*ctx);
    let e = |i: usize, j: usize, r: usize| cur.e(i, j, r as u32);
    let sg = |i: usize| if ctx.parity(i) == 1 { -1i64 } else { 1 };
    run("graded-c", &mut |t| {
        for r in 1..=nn {
            graded_eq(y, &coeff("c", r)?, (r - 1) as u32, &cur.z((r - 1) as u32), || format!("c^({r})"), t)?;
        }
        Ok(())
    })?;
    run("graded-h", &mut |t| {
        for i in 1..k {
            for r in 0..nn {
                let h = gd.h(i).coeff(r + 1);
                let exp = e(i, i, r).sub(&e(i + 1, i + 1, r).scale_i(sg(i) * sg(i + 1)));
                graded_eq(y, h, r as u32, &exp, || format!("h_{i}^({})", r + 1), t)?;
            }
        }
        Ok(())
    })?;
    let rps: Vec<usize> = (1..=nn / p).collect();
    run("graded-b", &mut |t| {
        for i in 1..=k {
            for &r in &rps {
                let exp = cur.pow(&e(i, i, r - 1), p as u32).sub(&e(i, i, r * p - p));
                graded_eq(y, &coeff(&format!("b_{i}"), r * p)?, (r * p - p) as u32, &exp, || format!("b_{i}^({})", r * p), t)?;
            }
        }
        Ok(())
    })?;
    run("graded-root-powers", &mut |t| {
        for (i, j) in even_pairs(ctx).into_iter().filter(|(i, j)| i < j) {
            for &r in &rps {
                let d = (r * p - p) as u32;
                let exp = cur.pow(&e(i, j, r - 1), p as u32).scale_i(sg(i));
                graded_eq(y, &cat.e_power(i, j, r), d, &exp, || format!("(e_{{{i},{j}}}^({r}))^p"), t)?;
                let exp = cur.pow(&e(j, i, r - 1), p as u32).scale_i(sg(j));
                graded_eq(y, &cat.f_power(j, i, r), d, &exp, || format!("(f_{{{j},{i}}}^({r}))^p"), t)?;
            }
        }
        Ok(())
    })?;
    run("graded-bc", &mut |t| {
        for &r in &rps {
            let exp = cur.pow(&cur.z((r - 1) as u32), p as u32).sub(&cur.z((r * p - p) as u32));
            graded_eq(y, &coeff("bc", r * p)?, (r * p - p) as u32, &exp, || format!("bc^({})", r * p), t)?;
        }
        Ok(())
    })?;
    run("graded-a", &mut |t| {
        for i in 1..k {
            for &r in &rps {
                let hx = |l: usize| e(i, i, l).sub(&e(i + 1, i + 1, l).scale_i(sg(i) * sg(i + 1)));
                let exp = cur.pow(&hx(r - 1), p as u32).sub(&hx(r * p - p));
                graded_eq(y, &coeff(&format!("a_{i}"), r * p)?, (r * p - p) as u32, &exp, || format!("a_{i}^({})", r * p), t)?;
            }
        }
        Ok(())
    })?;
    run("graded-s", &mut |t| {
        for (i, j) in even_pairs(ctx) {
            for &r in &rps {
                let mut exp = cur.pow(&e(i, j, r - 1), p as u32);
                if i == j {
                    exp = exp.sub(&e(i, j, r * p - p));
                }
                let name = format!("s_{{{i},{j}}}");
                graded_eq(y, &coeff(&name, r * p)?, (r * p - p) as u32, &exp, || format!("{name}^({})", r * p), t)?;
            }
        }
        Ok(())
    })?;
    // p_{ij}^{(r)} = [p | r] (e_{ij}^{(r/p)})^p + (*), with (*) of loop degree
    // <= r-p-1 and a polynomial in (e_{ij}^{(s)})^p, sp < r.
    run("root-power-triangular", &mut |t| {
        for (i, j) in even_pairs(ctx).into_iter().filter(|(i, j)| i < j) {
            for r in p..=nn {
                let mut rest = coeff(&format!("p_{{{i},{j}}}"), r)?;
                if r % p == 0 {
                    rest = rest.sub(&cat.e_power(i, j, r / p));
                }
                let label = || format!("p_{{{i},{j}}}^({r})");
                if loop_degree(&rest).is_some_and(|d| d as usize + p + 1 > r) {
                    t.fail_with(|| format!("{} remainder degree", label()), rest.to_canonical());
                    continue;
                }
                let gens: Vec<Element> = (1..=(r - 1) / p).map(|s| cat.e_power(i, j, s)).collect();
                let basis = power_monomials(y, &gens, p, r);
                if in_span(ctx.p, &basis, &rest) {
                    t.pass_one();
                } else {
                    t.fail_with(|| format!("{} remainder span", label()), rest.to_canonical());
                }
            }
        }
        Ok(())
    })?;
    Ok(out)
}
