//! Relations of the special super Yangian in the generators `h_i, e_i, f_i`
//! and, for odd `p`, in the shifted generators `κ_{i,s}, ξ^±_{i,s}`.

use std::time::Instant;

use crate::context::AlgebraContext;
use crate::element::Element;
use crate::error::Result;
use crate::gauss::{cartan, kappa_xi};
use crate::series::USeries;

use super::drinfeld::{check_relation, Gens, RELATIONS};
use super::{working_gauss, CheckReport, SuiteOptions, Tally};

pub const SY_RELATIONS: &[&str] = &[
    "SYmn-1", "SYmn-2", "SYmn-3", "SYmn-4", "SYmn-5", "SYmn-6", "SYmn-7", "SYmn-8", "SYmn-9", "SYmn-10",
];

pub const KAPPA_RELATIONS: &[&str] = &[
    "D-SYmn-1", "D-SYmn-2", "D-SYmn-3", "D-SYmn-4", "D-SYmn-5", "D-SYmn-6", "D-SYmn-7", "D-SYmn-8", "D-SYmn-9",
    "D-SYmn-10",
];

/// Pairs `(r, s)`, `r >= 0`, `s >= 1`, `r + s < bound`.
fn pairs_rs(bound: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for r in 0..bound {
        for s in 1..bound - r {
            out.push((r, s));
        }
    }
    out
}

/// Pairs `(r, s)` with `r, s >= 0`, `r + s < bound`.
fn pairs0(bound: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for r in 0..bound {
        for s in 0..bound - r {
            out.push((r, s));
        }
    }
    out
}

fn check_sy(g: &Gens, name: &str, bound: usize, flip: bool, t: &mut Tally) {
    let k = g.k();
    let m = g.ctx.m;
    let sc = |x: i64| if flip { -x } else { x };
    let (br, mul) = (|a: &Element, b: &Element| g.br(a, b), |a: &Element, b: &Element| g.mul(a, b));
    let sym = |a: &Element, b: &Element| mul(a, b).add(&mul(b, a));
    match name {
        "SYmn-1" => {
            for i in 1..k {
                for j in 1..k {
                    for (r, s) in pairs_rs(bound) {
                        t.zero(|| format!("i={i} j={j} r={r} s={s}"), &br(&g.h(i, r), &g.h(j, s)));
                    }
                }
            }
        }
        "SYmn-2" => {
            for i in 1..k {
                for j in 1..k {
                    for (r, s) in super::drinfeld::pairs(bound) {
                        let lhs = br(&g.e(i, r), &g.f(j, s));
                        let c = sc(g.sg(i) * g.sg(i + 1) * i64::from(i == j));
                        t.eq(|| format!("i={i} j={j} r={r} s={s}"), &lhs, &g.h(i, r + s - 1).scale_i(c));
                    }
                }
            }
        }
        "SYmn-3" | "SYmn-4" => {
            for i in 1..k {
                for j in 1..k {
                    if i.abs_diff(j) <= 1 {
                        continue;
                    }
                    for (r, s) in pairs_rs(bound) {
                        let x = if name == "SYmn-3" { g.e(j, s) } else { g.f(j, s) };
                        t.zero(|| format!("i={i} j={j} r={r} s={s}"), &br(&g.h(i, r), &x));
                    }
                }
            }
        }
        _ => {
            // SYmn-5..10: the h index is i-1, i or i+1 against e_i or f_i.
            let which: usize = name[5..].parse().expect("relation number");
            let is_e = which % 2 == 1;
            for i in 1..k {
                let hi = match which {
                    5 | 6 => i.checked_sub(1).filter(|&x| x >= 1),
                    7 | 8 => Some(i),
                    _ => Some(i + 1).filter(|&x| x < k),
                };
                let Some(hi) = hi else { continue };
                for (r, s) in pairs_rs(bound) {
                    let (h0, h1) = (g.h(hi, r), g.h(hi, r + 1));
                    let (lhs, rhs) = if is_e {
                        let (x0, x1) = (g.e(i, s), g.e(i, s + 1));
                        let lhs = br(&h1, &x0).sub(&br(&h0, &x1));
                        let rhs = match which {
                            5 => mul(&h0, &x0).scale_i(sc(g.sg(i))),
                            7 if i == m && g.ctx.p != 2 => g.zero(),
                            7 => sym(&h0, &x0).scale_i(sc(-g.sg(i + 1))),
                            _ => mul(&x0, &h0).scale_i(sc(g.sg(i + 1))),
                        };
                        (lhs, rhs)
                    } else {
                        let (x0, x1) = (g.f(i, s), g.f(i, s + 1));
                        let lhs = br(&h0, &x1).sub(&br(&h1, &x0));
                        let rhs = match which {
                            6 => mul(&x0, &h0).scale_i(sc(g.sg(i))),
                            8 if i == m && g.ctx.p != 2 => g.zero(),
                            8 => sym(&x0, &h0).scale_i(sc(-g.sg(i + 1))),
                            _ => mul(&h0, &x0).scale_i(sc(g.sg(i + 1))),
                        };
                        (lhs, rhs)
                    };
                    t.eq(|| format!("i={i} r={r} s={s}"), &lhs, &rhs);
                }
            }
        }
    }
}

struct Kx {
    kappa: Vec<USeries>,
    plus: Vec<USeries>,
    minus: Vec<USeries>,
}

impl Kx {
    fn k(&self, i: usize, s: usize) -> Element {
        self.kappa[i - 1].coeff(s + 1).clone()
    }
    fn xi(&self, sign: i64, i: usize, s: usize) -> Element {
        let v = if sign > 0 { &self.plus } else { &self.minus };
        v[i - 1].coeff(s + 1).clone()
    }
}

fn check_kappa(g: &Gens, kx: &Kx, name: &str, bound: usize, flip: bool, t: &mut Tally) -> Result<()> {
    let k = g.k();
    let m = g.ctx.m;
    let p = g.ctx.p;
    let half = crate::expr::half(p)?;
    let sc = |x: i64| if flip { -x } else { x };
    let br = |a: &Element, b: &Element| g.br(a, b);
    let sym = |a: &Element, b: &Element| g.mul(a, b).add(&g.mul(b, a));
    // ±a/2 in F_p
    let halfa = |sign: i64, a: i64| field_mul(g.ctx.scalar(sc(sign * a)), half, p);
    for i in 1..k {
        for j in 1..k {
            let a = cartan(&g.ctx, i, j);
            for sign in [1i64, -1] {
                let sl = if sign > 0 { "+" } else { "-" };
                match name {
                    "D-SYmn-1" if sign > 0 => {
                        for (r, s) in pairs0(bound) {
                            t.zero(|| format!("i={i} j={j} r={r} s={s}"), &br(&kx.k(i, r), &kx.k(j, s)));
                        }
                    }
                    "D-SYmn-2" if sign > 0 => {
                        for (r, s) in pairs0(bound) {
                            let lhs = br(&kx.xi(1, i, r), &kx.xi(-1, j, s));
                            let c = sc(g.sg(i) * g.sg(i + 1) * i64::from(i == j));
                            t.eq(|| format!("i={i} j={j} r={r} s={s}"), &lhs, &kx.k(i, r + s).scale_i(c));
                        }
                    }
                    "D-SYmn-3" => {
                        for s in 0..bound {
                            let x = kx.xi(sign, j, s);
                            let lhs = br(&kx.k(i, 0), &x);
                            t.eq(|| format!("{sl} i={i} j={j} s={s}"), &lhs, &x.scale_i(sc(sign * g.sg(i) * a)));
                        }
                    }
                    "D-SYmn-4" if !(i == m && j == m) => {
                        for (r, s) in pairs0(bound.saturating_sub(1)) {
                            let lhs = br(&kx.k(i, r), &kx.xi(sign, j, s + 1)).sub(&br(&kx.k(i, r + 1), &kx.xi(sign, j, s)));
                            let rhs = sym(&kx.k(i, r), &kx.xi(sign, j, s)).scale(halfa(sign, a));
                            t.eq(|| format!("{sl} i={i} j={j} r={r} s={s}"), &lhs, &rhs);
                        }
                    }
                    "D-SYmn-5" if i == m && j == m => {
                        for (r, s) in pairs0(bound.saturating_sub(1)) {
                            t.zero(|| format!("{sl} r={r} s={s}"), &br(&kx.k(m, r + 1), &kx.xi(sign, m, s)));
                        }
                    }
                    "D-SYmn-6" if !(i == m && j == m) => {
                        for (r, s) in pairs0(bound.saturating_sub(1)) {
                            let lhs = br(&kx.xi(sign, i, r), &kx.xi(sign, j, s + 1))
                                .sub(&br(&kx.xi(sign, i, r + 1), &kx.xi(sign, j, s)));
                            let rhs = sym(&kx.xi(sign, i, r), &kx.xi(sign, j, s)).scale(halfa(sign, a));
                            t.eq(|| format!("{sl} i={i} j={j} r={r} s={s}"), &lhs, &rhs);
                        }
                    }
                    "D-SYmn-7" if i == m && j == m => {
                        for (r, s) in pairs0(bound) {
                            t.zero(|| format!("{sl} r={r} s={s}"), &br(&kx.xi(sign, m, r), &kx.xi(sign, m, s)));
                        }
                    }
                    "D-SYmn-8" if i.abs_diff(j) > 1 => {
                        for (r, s) in pairs0(bound) {
                            t.zero(|| format!("{sl} i={i} j={j} r={r} s={s}"), &br(&kx.xi(sign, i, r), &kx.xi(sign, j, s)));
                        }
                    }
                    "D-SYmn-9" if i.abs_diff(j) == 1 => {
                        for (r, s) in pairs0(bound) {
                            for tt in 0..bound - r - s {
                                let (xr, xs, xt) = (kx.xi(sign, i, r), kx.xi(sign, i, s), kx.xi(sign, j, tt));
                                let lhs = br(&xr, &br(&xs, &xt)).add(&br(&xs, &br(&xr, &xt)));
                                t.zero(|| format!("{sl} i={i} j={j} r={r} s={s} t={tt}"), &lhs);
                            }
                        }
                    }
                    "D-SYmn-10" if i == m && j == m && m >= 2 && m + 1 < k => {
                        for (r, s) in pairs0(bound) {
                            let x0 = kx.xi(sign, m, 0);
                            let lhs = br(&br(&kx.xi(sign, m - 1, r), &x0), &br(&x0, &kx.xi(sign, m + 1, s)));
                            t.zero(|| format!("{sl} r={r} s={s}"), &lhs);
                        }
                    }
                    _ => {}
                }
            }
        }
    }
    Ok(())
}

fn field_mul(a: u32, b: u32, p: u32) -> u32 {
    crate::field::mul(a, b, p)
}

/// Check the `h, e, f` presentation and, when `p` is odd, the `κ, ξ`
/// presentation. The relations among `e_i, f_i` alone are shared with the
/// Drinfeld suite and reported under `sy/drinfeld/<name>`.
pub fn verify_sy_presentation(ctx: &AlgebraContext, opts: SuiteOptions) -> Result<Vec<CheckReport>> {
    let gd = working_gauss(ctx, opts.bound + 2);
    let g = Gens::new(&gd);
    let mut out = Vec::new();
    for &name in RELATIONS.iter().filter(|n| !n.starts_with('d') && **n != "ef") {
        let start = Instant::now();
        let mut t = Tally::new();
        check_relation(&g, name, opts.bound, false, &mut t);
        out.push(t.report(format!("sy/drinfeld/{name}"), ctx, start));
    }
    for &name in SY_RELATIONS {
        let start = Instant::now();
        let mut t = Tally::new();
        check_sy(&g, name, opts.bound, opts.mutate && name == "SYmn-2", &mut t);
        out.push(t.report(format!("sy/{name}"), ctx, start));
    }
    if ctx.p != 2 {
        let k = ctx.size();
        let mut kx = Kx { kappa: Vec::new(), plus: Vec::new(), minus: Vec::new() };
        for i in 1..k {
            let (a, b, c) = kappa_xi(&gd, i)?;
            kx.kappa.push(a);
            kx.plus.push(b);
            kx.minus.push(c);
        }
        for &name in KAPPA_RELATIONS {
            let start = Instant::now();
            let mut t = Tally::new();
            check_kappa(&g, &kx, name, opts.bound, opts.mutate && name == "D-SYmn-3", &mut t)?;
            let mut rep = t.report(format!("sy/{name}"), ctx, start);
            if rep.checked == 0 {
                rep = rep.with_note("no admissible index in this context");
            }
            out.push(rep);
        }
    }
    Ok(out)
}
