//! Registry of series identities among the Gauss generators, checked
//! coefficientwise in up to three variables.

use std::sync::Arc;

use rayon::prelude::*;
use std::time::Instant;

use crate::context::AlgebraContext;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::expr::{half, window, Ex, ExprArena, Index, Var};
use crate::field;
use crate::gauss::GaussData;
use crate::series::USeries;

use super::drinfeld::{pairs, Gens};
use super::{working_gauss, CheckReport, SuiteOptions, Tally};

const UV: &[Var] = &[Var::U, Var::V];
const UVW: &[Var] = &[Var::U, Var::V, Var::W];

enum Instance {
    Series { label: String, lhs: Ex, rhs: Ex, vars: &'static [Var] },
    Direct { label: String, lhs: Element, rhs: Element },
}

/// Builder handed to each record.
pub struct Builder {
    pub gd: Arc<GaussData>,
    pub ctx: AlgebraContext,
    pub a: ExprArena,
    pub bound: usize,
    out: Vec<Instance>,
}

impl Builder {
    fn new(gd: Arc<GaussData>, bound: usize) -> Self {
        let a = ExprArena::new(gd.yangian().clone());
        let ctx = gd.ctx();
        Builder { gd, ctx, a, bound, out: Vec::new() }
    }

    pub fn k(&self) -> usize {
        self.ctx.size()
    }
    pub fn m(&self) -> usize {
        self.ctx.m
    }
    /// `(-1)^{|i|}`.
    pub fn sg(&self, i: usize) -> i64 {
        if self.ctx.parity(i) == 1 {
            -1
        } else {
            1
        }
    }
    pub fn s(&mut self, var: Var, g: &USeries) -> Ex {
        self.a.series(var, g)
    }
    pub fn d(&mut self, var: Var, i: usize) -> Ex {
        let g = self.gd.d(i).clone();
        self.s(var, &g)
    }
    pub fn dinv(&mut self, var: Var, i: usize) -> Ex {
        let g = self.gd.d_inv(i).clone();
        self.s(var, &g)
    }
    pub fn e(&mut self, var: Var, i: usize) -> Ex {
        let g = self.gd.e_simple(i).clone();
        self.s(var, &g)
    }
    pub fn f(&mut self, var: Var, i: usize) -> Ex {
        let g = self.gd.f_simple(i).clone();
        self.s(var, &g)
    }
    pub fn h(&mut self, var: Var, i: usize) -> Ex {
        let g = self.gd.h(i).clone();
        self.s(var, &g)
    }
    pub fn eij(&mut self, var: Var, i: usize, j: usize) -> Ex {
        let g = self.gd.e(i, j).clone();
        self.s(var, &g)
    }
    pub fn fji(&mut self, var: Var, j: usize, i: usize) -> Ex {
        let g = self.gd.f(j, i).clone();
        self.s(var, &g)
    }
    /// `g(u - c)` as a series in `var`, `c` an integer.
    pub fn shifted(&mut self, var: Var, g: &USeries, c: i64) -> Ex {
        let g = g.shift_i(c);
        self.s(var, &g)
    }
    /// `g(u - c)` with `c` in F_p.
    pub fn shifted_fp(&mut self, var: Var, g: &USeries, c: u32) -> Ex {
        let g = g.shift(c);
        self.s(var, &g)
    }
    pub fn series_mul(&self, a: &USeries, b: &USeries) -> USeries {
        self.gd.yangian().series_mul(a, b)
    }
    pub fn zero(&mut self) -> Ex {
        self.a.scalar(0)
    }
    pub fn push(&mut self, label: String, lhs: Ex, rhs: Ex, vars: &'static [Var]) {
        self.out.push(Instance::Series { label, lhs, rhs, vars });
    }
    pub fn push_direct(&mut self, label: String, lhs: Element, rhs: Element) {
        self.out.push(Instance::Direct { label, lhs, rhs });
    }
}

/// Which contexts a record applies to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    Any,
    /// Only `Y_{2|1}`.
    Y21,
    /// Any shape, `p != 2`.
    OddPrime,
}

pub struct IdentityRecord {
    pub id: &'static str,
    /// The identity in formulas.
    pub statement: &'static str,
    pub scope: Scope,
    build: fn(&mut Builder),
}

impl IdentityRecord {
    pub fn admits(&self, ctx: &AlgebraContext) -> Result<()> {
        match self.scope {
            Scope::Any => Ok(()),
            Scope::Y21 if ctx.m == 2 && ctx.n == 1 => Ok(()),
            Scope::Y21 => Err(Error::Constraint(format!("{} is stated for Y(2|1) only", self.id))),
            Scope::OddPrime if ctx.p != 2 => Ok(()),
            Scope::OddPrime => Err(Error::RequiresOddPrime),
        }
    }
}

fn delta(a: usize, b: usize) -> i64 {
    i64::from(a == b)
}

// ---- d, e, f brackets --------------------------------------------------

fn d_e(b: &mut Builder, i: usize, j: usize, c: i64) {
    let (u, v) = (Var::U, Var::V);
    let (d, ev, eu) = (b.d(u, i), b.e(v, j), b.e(u, j));
    let br = b.a.bracket(d, ev);
    let lhs = b.a.u_minus_v(br);
    let diff = b.a.sub(ev, eu);
    let prod = b.a.mul(d, diff);
    let rhs = b.a.scale(c, prod);
    b.push(format!("i={i} j={j}"), lhs, rhs, UV);
}

fn d_f(b: &mut Builder, i: usize, j: usize, c: i64) {
    let (u, v) = (Var::U, Var::V);
    let (d, fv, fu) = (b.d(u, i), b.f(v, j), b.f(u, j));
    let br = b.a.bracket(d, fv);
    let lhs = b.a.u_minus_v(br);
    let diff = b.a.sub(fv, fu);
    let prod = b.a.mul(diff, d);
    let rhs = b.a.scale(c, prod);
    b.push(format!("i={i} j={j}"), lhs, rhs, UV);
}

fn e_f(b: &mut Builder, i: usize, j: usize) {
    let (u, v) = (Var::U, Var::V);
    let (eu, fv) = (b.e(u, i), b.f(v, j));
    let br = b.a.bracket(eu, fv);
    let lhs = b.a.u_minus_v(br);
    let rhs = if i == j {
        let g = b.series_mul(b.gd.d_inv(i), b.gd.d(i + 1));
        let (gu, gv) = (b.s(u, &g), b.s(v, &g));
        let diff = b.a.sub(gu, gv);
        let c = b.sg(i + 1);
        b.a.scale(c, diff)
    } else {
        b.zero()
    };
    b.push(format!("i={i} j={j}"), lhs, rhs, UV);
}

fn e_e_same(b: &mut Builder, j: usize, is_e: bool) {
    let (u, v) = (Var::U, Var::V);
    let (xu, xv) = if is_e { (b.e(u, j), b.e(v, j)) } else { (b.f(u, j), b.f(v, j)) };
    let br = b.a.bracket(xu, xv);
    let lhs = b.a.u_minus_v(br);
    let diff = b.a.sub(xu, xv);
    let sq = b.a.mul(diff, diff);
    let c = if is_e { b.sg(j + 1) } else { -b.sg(j + 1) };
    let rhs = b.a.scale(c, sq);
    b.push(format!("j={j}"), lhs, rhs, UV);
}

/// `(u-v)[e_j(u), e_{j+1}(v)]` against the composite root `e_{j,j+2}`.
fn e_e_adj(b: &mut Builder, j: usize, c: i64) {
    let (u, v) = (Var::U, Var::V);
    let (eu, ev) = (b.e(u, j), b.e(v, j));
    let e2v = b.e(v, j + 1);
    let (ru, rv) = (b.eij(u, j, j + 2), b.eij(v, j, j + 2));
    let br = b.a.bracket(eu, e2v);
    let lhs = b.a.u_minus_v(br);
    let p1 = b.a.mul(eu, e2v);
    let p2 = b.a.mul(ev, e2v);
    let inner = b.a.lin(&[(p1, 1), (p2, -1), (ru, -1), (rv, 1)]);
    let rhs = b.a.scale(c, inner);
    b.push(format!("j={j}"), lhs, rhs, UV);
}

fn f_f_adj(b: &mut Builder, j: usize, c: i64) {
    let (u, v) = (Var::U, Var::V);
    let (fu, fv) = (b.f(u, j), b.f(v, j));
    let f2v = b.f(v, j + 1);
    let (ru, rv) = (b.fji(u, j + 2, j), b.fji(v, j + 2, j));
    let br = b.a.bracket(fu, f2v);
    let lhs = b.a.u_minus_v(br);
    let p1 = b.a.mul(f2v, fu);
    let p2 = b.a.mul(f2v, fv);
    let inner = b.a.lin(&[(p1, 1), (p2, -1), (ru, -1), (rv, 1)]);
    let rhs = b.a.scale(c, inner);
    b.push(format!("j={j}"), lhs, rhs, UV);
}

fn adjacent(b: &Builder) -> Vec<(usize, usize)> {
    let k = b.k();
    let mut out = Vec::new();
    for i in 1..k {
        for j in 1..k {
            if i.abs_diff(j) == 1 {
                out.push((i, j));
            }
        }
    }
    out
}

fn serre_diag(b: &mut Builder, is_e: bool) {
    for (i, j) in adjacent(b) {
        let (u, v) = (Var::U, Var::V);
        let (xi, xj) = if is_e { (b.e(u, i), b.e(v, j)) } else { (b.f(u, i), b.f(v, j)) };
        let inner = b.a.bracket(xi, xj);
        let lhs = b.a.bracket(inner, xj);
        let rhs = b.zero();
        b.push(format!("i={i} j={j}"), lhs, rhs, UV);
    }
}

fn serre_sym(b: &mut Builder, is_e: bool) {
    for (i, j) in adjacent(b) {
        let (u, v, w) = (Var::U, Var::V, Var::W);
        let (xi, xv, xw) =
            if is_e { (b.e(u, i), b.e(v, j), b.e(w, j)) } else { (b.f(u, i), b.f(v, j), b.f(w, j)) };
        let a1 = b.a.bracket(xi, xv);
        let a2 = b.a.bracket(a1, xw);
        let b1 = b.a.bracket(xi, xw);
        let b2 = b.a.bracket(b1, xv);
        let lhs = b.a.add(a2, b2);
        let rhs = b.zero();
        b.push(format!("i={i} j={j}"), lhs, rhs, UVW);
    }
}

fn quartic(b: &mut Builder, is_e: bool) {
    let gd = b.gd.clone();
    let g = Gens::new(&gd);
    let x = |j: usize, r: usize| if is_e { g.e(j, r) } else { g.f(j, r) };
    let mut items = Vec::new();
    for i in 2..b.k().saturating_sub(1) {
        for (r, s) in pairs(b.bound) {
            let lhs = g.br(&g.br(&x(i - 1, r), &x(i, 1)), &g.br(&x(i, 1), &x(i + 1, s)));
            items.push((format!("i={i} r={r} s={s}"), lhs, g.zero()));
        }
    }
    for (l, lhs, rhs) in items {
        b.push_direct(l, lhs, rhs);
    }
}

// ---- Y(2|1) ------------------------------------------------------------

fn y21_1(b: &mut Builder) {
    for i in 1..=3 {
        for j in 1..=2 {
            let c = if j == 1 { delta(i, j) - delta(i, j + 1) } else { delta(i, j) + delta(i, j + 1) };
            d_e(b, i, j, c);
        }
    }
}

fn y21_2(b: &mut Builder) {
    for i in 1..=3 {
        for j in 1..=2 {
            let c = if j == 1 { delta(i, j) - delta(i, j + 1) } else { delta(i, j) + delta(i, j + 1) };
            d_f(b, i, j, -c);
        }
    }
}

fn y21_6(b: &mut Builder) {
    let (u, v) = (Var::U, Var::V);
    let (e1u, e1v, e2v) = (b.e(u, 1), b.e(v, 1), b.e(v, 2));
    let (e13u, e13v) = (b.eij(u, 1, 3), b.eij(v, 1, 3));
    let br = b.a.bracket(e1u, e2v);
    let lhs = b.a.u_minus_v(br);
    let p1 = b.a.mul(e1u, e2v);
    let p2 = b.a.mul(e1v, e2v);
    let rhs = b.a.lin(&[(p1, 1), (p2, -1), (e13u, -1), (e13v, 1)]);
    b.push(String::new(), lhs, rhs, UV);
}

fn y21_7(b: &mut Builder) {
    let (u, v) = (Var::U, Var::V);
    let (f1u, f1v, f2v) = (b.f(u, 1), b.f(v, 1), b.f(v, 2));
    let (f31u, f31v) = (b.fji(u, 3, 1), b.fji(v, 3, 1));
    let br = b.a.bracket(f1u, f2v);
    let lhs = b.a.u_minus_v(br);
    let p1 = b.a.mul(f2v, f1u);
    let p2 = b.a.mul(f2v, f1v);
    let rhs = b.a.lin(&[(p1, -1), (p2, 1), (f31u, 1), (f31v, -1)]);
    b.push(String::new(), lhs, rhs, UV);
}

fn y21_8(b: &mut Builder) {
    let (u, v) = (Var::U, Var::V);
    let (e13u, e2v, e1u) = (b.eij(u, 1, 3), b.e(v, 2), b.e(u, 1));
    let lhs = b.a.bracket(e13u, e2v);
    let br = b.a.bracket(e1u, e2v);
    let rhs = b.a.mul(e2v, br);
    b.push(String::new(), lhs, rhs, UV);
}

fn y21_9(b: &mut Builder) {
    let (u, v) = (Var::U, Var::V);
    let (e1u, e13v, e1v, e2v) = (b.e(u, 1), b.eij(v, 1, 3), b.e(v, 1), b.e(v, 2));
    let p = b.a.mul(e1v, e2v);
    let inner = b.a.sub(e13v, p);
    let lhs = b.a.bracket(e1u, inner);
    let br = b.a.bracket(e1u, e2v);
    let prod = b.a.mul(br, e1u);
    let rhs = b.a.scale(-1, prod);
    b.push(String::new(), lhs, rhs, UV);
}

// ---- Y(m|n) ------------------------------------------------------------

fn ymn_1(b: &mut Builder) {
    for i in 1..=b.k() {
        for j in 1..=b.k() {
            let (du, dv) = (b.d(Var::U, i), b.d(Var::V, j));
            let lhs = b.a.bracket(du, dv);
            let rhs = b.zero();
            b.push(format!("i={i} j={j}"), lhs, rhs, UV);
        }
    }
}

fn ymn_2(b: &mut Builder) {
    let k = b.k();
    for i in 1..k {
        for j in 1..k {
            if i.abs_diff(j) <= 1 {
                continue;
            }
            for is_e in [true, false] {
                let (xu, xv) = if is_e { (b.e(Var::U, i), b.e(Var::V, j)) } else { (b.f(Var::U, i), b.f(Var::V, j)) };
                let lhs = b.a.bracket(xu, xv);
                let rhs = b.zero();
                b.push(format!("{} i={i} j={j}", if is_e { "e" } else { "f" }), lhs, rhs, UV);
            }
        }
    }
}

fn ymn_3(b: &mut Builder) {
    for i in 1..=b.k() {
        for j in 1..b.k() {
            let c = b.sg(i) * (delta(i, j) - delta(i, j + 1));
            d_e(b, i, j, c);
        }
    }
}

fn ymn_4(b: &mut Builder) {
    for i in 1..=b.k() {
        for j in 1..b.k() {
            let c = b.sg(i) * (-delta(i, j) + delta(i, j + 1));
            d_f(b, i, j, c);
        }
    }
}

fn ymn_5(b: &mut Builder) {
    for i in 1..b.k() {
        for j in 1..b.k() {
            e_f(b, i, j);
        }
    }
}

fn ymn_6(b: &mut Builder) {
    for j in 1..b.k() {
        e_e_same(b, j, true);
    }
}

fn ymn_7(b: &mut Builder) {
    for j in 1..b.k() {
        e_e_same(b, j, false);
    }
}

fn ymn_8(b: &mut Builder) {
    for j in 1..b.k().saturating_sub(1) {
        let c = b.sg(j + 1);
        e_e_adj(b, j, c);
    }
}

fn ymn_9(b: &mut Builder) {
    for j in 1..b.k().saturating_sub(1) {
        let c = -b.sg(j + 1);
        f_f_adj(b, j, c);
    }
}

// ---- powers of e_i(v) - e_i(u) ------------------------------------------

fn max_l(b: &Builder) -> u32 {
    b.ctx.p + 1
}

/// `X = e_i(v) - e_i(u)`.
fn x_diff(b: &mut Builder, i: usize) -> Ex {
    let (ev, eu) = (b.e(Var::V, i), b.e(Var::U, i));
    b.a.sub(ev, eu)
}

/// `(u-v)[e_i(u), L X^l R] = c(l) L X^{l+1} R` with optional left and right
/// factors in `v`.
fn power_identity(b: &mut Builder, i: usize, left: Option<Ex>, right: Option<Ex>, coeff: impl Fn(i64) -> i64) {
    let x = x_diff(b, i);
    let eu = b.e(Var::U, i);
    for l in 0..=max_l(b) {
        let wrap = |b: &mut Builder, core: Ex| {
            let mut t = core;
            if let Some(lf) = left {
                t = b.a.mul(lf, t);
            }
            if let Some(rf) = right {
                t = b.a.mul(t, rf);
            }
            t
        };
        let xl = b.a.pow(x, l);
        let inner = wrap(b, xl);
        let br = b.a.bracket(eu, inner);
        let lhs = b.a.u_minus_v(br);
        let xl1 = b.a.pow(x, l + 1);
        let core = wrap(b, xl1);
        let rhs = b.a.scale(coeff(l as i64), core);
        b.push(format!("i={i} l={l}"), lhs, rhs, UV);
    }
}

fn new1(b: &mut Builder) {
    for i in 1..b.k() {
        let c = b.sg(i);
        power_identity(b, i, None, None, |l| c * l);
    }
}

fn new2(b: &mut Builder) {
    for i in 1..b.k() {
        let c = b.sg(i);
        let d = b.d(Var::V, i);
        power_identity(b, i, Some(d), None, |l| c * (l - 1));
    }
}

fn new3(b: &mut Builder) {
    for i in 1..b.k() {
        let c = b.sg(i + 1);
        let d = b.d(Var::V, i + 1);
        power_identity(b, i, Some(d), None, |l| c * (l + 1));
    }
}

fn new4(b: &mut Builder) {
    for i in 1..b.k() {
        let c = b.sg(i + 1);
        let d = b.d(Var::V, i + 1);
        let di = b.dinv(Var::V, i);
        let c0 = b.sg(i);
        power_identity(b, i, Some(d), Some(di), |l| c + c0 * (l + 1));
    }
}

/// `(u-v)[e_i(u), g(v)] = c * (left ? g(v) X : X g(v))` with `X = ±(e_i(u) - e_i(v))`.
fn e_with_diag(b: &mut Builder, which: u8) {
    for i in 1..b.k() {
        let (u, v) = (Var::U, Var::V);
        let eu = b.e(u, i);
        let (g, c, left, ue_first) = match which {
            5 => (b.d(v, i), b.sg(i), true, true),
            6 => (b.dinv(v, i), b.sg(i), false, false),
            7 => (b.d(v, i + 1), b.sg(i + 1), true, false),
            _ => (b.dinv(v, i + 1), b.sg(i + 1), false, true),
        };
        let ev = b.e(v, i);
        let diff = if ue_first { b.a.sub(eu, ev) } else { b.a.sub(ev, eu) };
        let br = b.a.bracket(eu, g);
        let lhs = b.a.u_minus_v(br);
        let prod = if left { b.a.mul(g, diff) } else { b.a.mul(diff, g) };
        let rhs = b.a.scale(c, prod);
        b.push(format!("i={i}"), lhs, rhs, UV);
    }
}

// ---- compositions ---------------------------------------------------------

/// Compositions of `total` into `parts` parts, each in `lo..=hi`.
fn compositions(total: usize, parts: usize, lo: usize, hi: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn rec(left: usize, parts: usize, lo: usize, hi: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 0 {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for x in lo..=hi.min(left) {
            cur.push(x);
            rec(left - x, parts - 1, lo, hi, cur, out);
            cur.pop();
        }
    }
    rec(total, parts, lo, hi, &mut Vec::new(), &mut out);
    out
}

#[derive(Clone, Copy)]
enum Frame {
    /// `e...e`, parts `>= r`.
    Upper,
    /// `e...e`, parts in `1..=r-1`.
    Lower,
    /// `d_i^{(t)} e...e`.
    DLeft,
    /// `d_{i+1}^{(t)} e...e`.
    DNextLeft,
    /// `d_{i+1}^{(t)} e...e d_i'^{(u)}`.
    DNextBoth,
}

/// `Σ` of framed products with `l` factors of `e_i` and total superscript `total`.
fn framed_sum(g: &Gens, i: usize, frame: Frame, l: usize, r: usize, total: usize) -> Element {
    let y = g.y;
    let (lo, hi) = match frame {
        Frame::Lower => (1, r - 1),
        _ => (r, total),
    };
    let word = |parts: &[usize]| parts.iter().fold(y.one(), |acc, &s| y.mul(&acc, &g.e(i, s)));
    let mut acc = y.zero();
    match frame {
        Frame::Upper | Frame::Lower => {
            if hi >= lo || l == 0 {
                for c in compositions(total, l, lo, hi) {
                    acc = acc.add(&word(&c));
                }
            }
        }
        Frame::DLeft | Frame::DNextLeft => {
            let di = if matches!(frame, Frame::DLeft) { i } else { i + 1 };
            for t in 0..=total {
                for c in compositions(total - t, l, lo, hi) {
                    acc = acc.add(&y.mul(&g.d(di, t), &word(&c)));
                }
            }
        }
        Frame::DNextBoth => {
            for t in 0..=total {
                for uu in 0..=total - t {
                    for c in compositions(total - t - uu, l, lo, hi) {
                        let x = y.mul(&y.mul(&g.d(i + 1, t), &word(&c)), &g.dp(i, uu));
                        acc = acc.add(&x);
                    }
                }
            }
        }
    }
    acc
}

/// `[e_i^{(r)}, Σ(l)] = c(l) Σ(l+1)` for one frame.
fn composition_identity(b: &mut Builder, frame: Frame, coeff: fn(&Builder, usize, i64) -> i64, shift: usize) {
    let gd = b.gd.clone();
    let g = Gens::new(&gd);
    let nmax = b.gd.ctx().trunc;
    let mut items = Vec::new();
    for i in 1..b.k() {
        for l in 0..=3usize {
            for (r, s) in pairs(b.bound + 1) {
                // total superscript before and after
                let before = (l + shift).saturating_sub(1) * (r - 1) + s;
                let after = (l + shift) * (r - 1) + s;
                if (l + shift) * (r - 1) + s < (r - 1) || after > nmax || r + s > b.bound {
                    continue;
                }
                if shift == 0 && l == 0 {
                    continue;
                }
                let lhs = g.br(&g.e(i, r), &framed_sum(&g, i, frame, l, r, before));
                let rhs = framed_sum(&g, i, frame, l + 1, r, after).scale_i(coeff(b, i, l as i64));
                items.push((format!("i={i} l={l} r={r} s={s}"), lhs, rhs));
            }
        }
    }
    for (lab, lhs, rhs) in items {
        b.push_direct(lab, lhs, rhs);
    }
}

fn c111(b: &mut Builder) {
    composition_identity(b, Frame::Upper, |b, i, l| b.sg(i) * l, 0);
}
fn c222(b: &mut Builder) {
    composition_identity(b, Frame::Lower, |b, i, l| -b.sg(i) * l, 0);
}
fn c333(b: &mut Builder) {
    composition_identity(b, Frame::DLeft, |b, i, l| b.sg(i) * (l - 1), 1);
}
fn c444(b: &mut Builder) {
    composition_identity(b, Frame::DNextLeft, |b, i, l| b.sg(i + 1) * (l + 1), 1);
}
fn c555(b: &mut Builder) {
    composition_identity(b, Frame::DNextBoth, |b, i, l| b.sg(i + 1) + b.sg(i) * (l + 1), 1);
}

// ---- cyclic products of d_i ----------------------------------------------

fn cyclic(b: &mut Builder, which: u8) {
    let (k, m, p) = (b.k(), b.m(), b.ctx.p as usize);
    let (range, down, e_index, sign, u_first): (Vec<usize>, bool, fn(usize) -> usize, i64, bool) = match which {
        1 => ((1..=m.min(k - 1)).collect(), true, |i| i, 1, false),
        2 => ((m + 1..k).collect(), false, |i| i, -1, false),
        3 => ((2..=m).collect(), false, |i| i - 1, 1, true),
        _ => ((m + 1..=k).collect(), true, |i| i - 1, -1, true),
    };
    for i in range {
        for kk in 1..=p {
            let y = b.gd.yangian().clone();
            let prod = if down {
                y.shifted_product_down(b.gd.d(i), kk as u32)
            } else {
                y.shifted_product_up(b.gd.d(i), kk as u32)
            };
            let (u, v) = (Var::U, Var::V);
            let du = b.s(u, &prod);
            let j = e_index(i);
            let (eu, ev) = (b.e(u, j), b.e(v, j));
            let br = b.a.bracket(du, ev);
            let lhs = b.a.u_minus_v(br);
            let diff = if u_first { b.a.sub(eu, ev) } else { b.a.sub(ev, eu) };
            let pr = b.a.mul(du, diff);
            let rhs = b.a.scale(sign * kk as i64, pr);
            b.push(format!("i={i} k={kk}"), lhs, rhs, UV);
        }
    }
}

// ---- univariate e/d/h commutations ----------------------------------------

fn ed(b: &mut Builder, which: u8) {
    for i in 1..b.k() {
        let u = Var::U;
        let (c, di) = if which <= 2 { (b.sg(i), i) } else { (-b.sg(i + 1), i + 1) };
        let es = b.gd.e_simple(i).clone();
        let eshift = b.shifted(u, &es, c);
        let eu = b.e(u, i);
        let (lhs, rhs) = if which % 2 == 1 {
            let d = b.d(u, di);
            (b.a.mul(eshift, d), b.a.mul(d, eu))
        } else {
            let d = b.dinv(u, di);
            (b.a.mul(d, eshift), b.a.mul(eu, d))
        };
        b.push(format!("i={i}"), lhs, rhs, &[Var::U]);
    }
}

fn he_comm(b: &mut Builder) {
    for i in 1..b.k() {
        let u = Var::U;
        let es = b.gd.e_simple(i).clone();
        let (c, c1) = (b.sg(i), b.sg(i + 1));
        let h = b.h(u, i);
        let e1 = b.shifted(u, &es, c);
        let e2 = b.shifted(u, &es, -c1);
        let lhs = b.a.mul(h, e1);
        let rhs = b.a.mul(e2, h);
        b.push(format!("i={i}"), lhs, rhs, &[Var::U]);
    }
}

fn he(b: &mut Builder, which: u8) {
    let k = b.k();
    let range: Vec<usize> = match which {
        1 | 2 => (1..k).collect(),
        3 | 4 => (2..k).collect(),
        _ => (1..k.saturating_sub(1)).collect(),
    };
    for i in range {
        let (u, v) = (Var::U, Var::V);
        let (c, c1) = (b.sg(i), b.sg(i + 1));
        let hi = match which {
            1 | 2 => i,
            3 | 4 => i - 1,
            _ => i + 1,
        };
        let es = b.gd.e_simple(i).clone();
        let h = b.h(u, hi);
        let ev = b.e(v, i);
        let eu = b.e(u, i);
        let br = b.a.bracket(h, ev);
        let (lhs, rhs) = match which {
            1 => {
                let lhs = b.a.linear([1, -1, 0], -c, br);
                let es_ = b.shifted(u, &es, c);
                let diff = b.a.sub(es_, ev);
                let pr = b.a.mul(h, diff);
                (lhs, b.a.scale(c + c1, pr))
            }
            2 => {
                let lhs = b.a.linear([1, -1, 0], c1, br);
                let es_ = b.shifted(u, &es, -c1);
                let diff = b.a.sub(es_, ev);
                let pr = b.a.mul(diff, h);
                (lhs, b.a.scale(c + c1, pr))
            }
            3 => {
                let lhs = b.a.u_minus_v(br);
                let diff = b.a.sub(ev, eu);
                let pr = b.a.mul(h, diff);
                (lhs, b.a.scale(c, pr))
            }
            4 => {
                let lhs = b.a.linear([1, -1, 0], -c, br);
                let es_ = b.shifted(u, &es, c);
                let diff = b.a.sub(ev, es_);
                let pr = b.a.mul(diff, h);
                (lhs, b.a.scale(c, pr))
            }
            5 => {
                let lhs = b.a.u_minus_v(br);
                let diff = b.a.sub(ev, eu);
                let pr = b.a.mul(diff, h);
                (lhs, b.a.scale(c1, pr))
            }
            _ => {
                let lhs = b.a.linear([1, -1, 0], c1, br);
                let es_ = b.shifted(u, &es, -c1);
                let diff = b.a.sub(ev, es_);
                let pr = b.a.mul(h, diff);
                (lhs, b.a.scale(c1, pr))
            }
        };
        b.push(format!("i={i}"), lhs, rhs, UV);
    }
}

fn coro1(b: &mut Builder) {
    for i in 1..b.k() {
        let (u, v) = (Var::U, Var::V);
        let h = b.h(u, i);
        let ev = b.e(v, i);
        let br = b.a.bracket(h, ev);
        let lhs = b.a.u_minus_v(br);
        let rhs = if i == b.m() && b.ctx.p != 2 {
            b.zero()
        } else {
            let es = b.gd.e_simple(i).clone();
            let c = b.sg(i);
            let e_sh = b.shifted(u, &es, c);
            let t1 = b.a.mul(h, e_sh);
            let t2 = b.a.mul(h, ev);
            let t3 = b.a.mul(ev, h);
            let inner = b.a.lin(&[(t1, 2), (t2, -1), (t3, -1)]);
            let c1 = b.sg(i + 1);
            b.a.scale(c1, inner)
        };
        b.push(format!("i={i}"), lhs, rhs, UV);
    }
}

/// Averaged forms: `(u-v)[h_j(u + σa), e_i(v)] = a(h e(v) + e(v) h) - a(h e_i(u+a) + e_i(u-a) h)`
/// with `h = h_j(u + σa)`, `j = i ∓ 1`.
fn coro_avg(b: &mut Builder, lower: bool) {
    let k = b.k();
    let p = b.ctx.p;
    let h2 = half(p).expect("odd prime");
    let range: Vec<usize> = if lower { (2..k).collect() } else { (1..k.saturating_sub(1)).collect() };
    for i in range {
        let (u, v) = (Var::U, Var::V);
        // a = (-1)^{|i|}/2 for h_{i-1}, (-1)^{|i+1|}/2 for h_{i+1}
        let sgn = if lower { b.sg(i) } else { b.sg(i + 1) };
        let a = field::mul(b.ctx.scalar(sgn), h2, p);
        let (hj, arg) = if lower { (i - 1, field::neg(a, p)) } else { (i + 1, a) };
        // h_j(u + a) = h_j(u - (-a)); h_j(u - a) for the upper case
        let hs = b.gd.h(hj).clone();
        let h = b.shifted_fp(u, &hs, arg);
        let es = b.gd.e_simple(i).clone();
        let e_plus = b.shifted_fp(u, &es, field::neg(a, p));
        let e_minus = b.shifted_fp(u, &es, a);
        let ev = b.e(v, i);
        let br = b.a.bracket(h, ev);
        let lhs = b.a.u_minus_v(br);
        let t1 = b.a.mul(h, ev);
        let t2 = b.a.mul(ev, h);
        let t3 = b.a.mul(h, e_plus);
        let t4 = b.a.mul(e_minus, h);
        let ai = a as i64;
        let rhs = b.a.lin(&[(t1, ai), (t2, ai), (t3, -ai), (t4, -ai)]);
        b.push(format!("i={i}"), lhs, rhs, UV);
    }
}

fn gv_gu(b: &mut Builder) {
    for i in 1..=b.k() {
        let g = b.gd.d(i).clone();
        let (u, v) = (Var::U, Var::V);
        let dd = b.a.div_diff(Var::U, Var::V, &g);
        let lhs = b.a.u_minus_v(dd);
        let (gu, gv) = (b.s(u, &g), b.s(v, &g));
        let rhs = b.a.sub(gv, gu);
        b.push(format!("g=d_{i}"), lhs, rhs, UV);
    }
}

macro_rules! rec {
    ($id:expr, $st:expr, $scope:ident, $f:expr) => {
        IdentityRecord { id: $id, statement: $st, scope: Scope::$scope, build: $f }
    };
}

/// The identity catalog.
pub static IDENTITIES: &[IdentityRecord] = &[
    rec!("Y21-1", "(u-v)[d_i(u),e_j(v)] = (δ_ij ∓ δ_{i,j+1}) d_i(u)(e_j(v)-e_j(u)), - for j=1, + for j=2", Y21, y21_1),
    rec!("Y21-2", "(u-v)[d_i(u),f_j(v)] = -(δ_ij ∓ δ_{i,j+1})(f_j(v)-f_j(u)) d_i(u)", Y21, y21_2),
    rec!("Y21-3", "(u-v)[e_j(u),f_k(v)] = (-1)^{|j+1|} δ_jk (d_j(u)^{-1}d_{j+1}(u) - d_j(v)^{-1}d_{j+1}(v))", Y21, ymn_5),
    rec!("Y21-4", "(u-v)[e_j(u),e_j(v)] = (-1)^{|j+1|}(e_j(u)-e_j(v))^2", Y21, ymn_6),
    rec!("Y21-5", "(u-v)[f_j(u),f_j(v)] = -(-1)^{|j+1|}(f_j(u)-f_j(v))^2", Y21, ymn_7),
    rec!("Y21-6", "(u-v)[e_1(u),e_2(v)] = e_1(u)e_2(v) - e_1(v)e_2(v) - e_13(u) + e_13(v)", Y21, y21_6),
    rec!("Y21-7", "(u-v)[f_1(u),f_2(v)] = -f_2(v)f_1(u) + f_2(v)f_1(v) + f_31(u) - f_31(v)", Y21, y21_7),
    rec!("Y21-8", "[e_13(u),e_2(v)] = e_2(v)[e_1(u),e_2(v)]", Y21, y21_8),
    rec!("Y21-9", "[e_1(u), e_13(v) - e_1(v)e_2(v)] = -[e_1(u),e_2(v)] e_1(u)", Y21, y21_9),
    rec!("Y21-10", "[[e_i(u),e_j(v)],e_j(v)] = 0, |i-j| = 1", Y21, |b| serre_diag(b, true)),
    rec!("Y21-11", "[[f_i(u),f_j(v)],f_j(v)] = 0, |i-j| = 1", Y21, |b| serre_diag(b, false)),
    rec!("Y21-12", "[[e_i(u),e_j(v)],e_j(w)] + [[e_i(u),e_j(w)],e_j(v)] = 0, |i-j| = 1", Y21, |b| serre_sym(b, true)),
    rec!("Y21-13", "[[f_i(u),f_j(v)],f_j(w)] + [[f_i(u),f_j(w)],f_j(v)] = 0, |i-j| = 1", Y21, |b| serre_sym(b, false)),
    rec!("Ymn-1", "[d_i(u),d_j(v)] = 0", Any, ymn_1),
    rec!("Ymn-2", "[e_i(u),e_j(v)] = 0 = [f_i(u),f_j(v)], |i-j| > 1", Any, ymn_2),
    rec!("Ymn-3", "(u-v)[d_i(u),e_j(v)] = (-1)^{|i|}(δ_ij - δ_{i,j+1}) d_i(u)(e_j(v)-e_j(u))", Any, ymn_3),
    rec!("Ymn-4", "(u-v)[d_i(u),f_j(v)] = (-1)^{|i|}(δ_{i,j+1} - δ_ij)(f_j(v)-f_j(u)) d_i(u)", Any, ymn_4),
    rec!("Ymn-5", "(u-v)[e_i(u),f_j(v)] = (-1)^{|j+1|} δ_ij (d_i(u)^{-1}d_{i+1}(u) - d_i(v)^{-1}d_{i+1}(v))", Any, ymn_5),
    rec!("Ymn-6", "(u-v)[e_j(u),e_j(v)] = (-1)^{|j+1|}(e_j(u)-e_j(v))^2", Any, ymn_6),
    rec!("Ymn-7", "(u-v)[f_j(u),f_j(v)] = -(-1)^{|j+1|}(f_j(u)-f_j(v))^2", Any, ymn_7),
    rec!("Ymn-8", "(u-v)[e_j(u),e_{j+1}(v)] = (-1)^{|j+1|}(e_j(u)e_{j+1}(v) - e_j(v)e_{j+1}(v) - e_{j,j+2}(u) + e_{j,j+2}(v))", Any, ymn_8),
    rec!("Ymn-9", "(u-v)[f_j(u),f_{j+1}(v)] = -(-1)^{|j+1|}(f_{j+1}(v)f_j(u) - f_{j+1}(v)f_j(v) - f_{j+2,j}(u) + f_{j+2,j}(v))", Any, ymn_9),
    rec!("Ymn-10", "[[e_i(u),e_j(v)],e_j(v)] = 0, |i-j| = 1", Any, |b| serre_diag(b, true)),
    rec!("Ymn-11", "[[f_i(u),f_j(v)],f_j(v)] = 0, |i-j| = 1", Any, |b| serre_diag(b, false)),
    rec!("Ymn-12", "[[e_i(u),e_j(v)],e_j(w)] + [[e_i(u),e_j(w)],e_j(v)] = 0, |i-j| = 1", Any, |b| serre_sym(b, true)),
    rec!("Ymn-13", "[[f_i(u),f_j(v)],f_j(w)] + [[f_i(u),f_j(w)],f_j(v)] = 0, |i-j| = 1", Any, |b| serre_sym(b, false)),
    rec!("Ymn-14", "[[e_{i-1}^{(r)},e_i^{(1)}],[e_i^{(1)},e_{i+1}^{(s)}]] = 0", Any, |b| quartic(b, true)),
    rec!("Ymn-15", "[[f_{i-1}^{(r)},f_i^{(1)}],[f_i^{(1)},f_{i+1}^{(s)}]] = 0", Any, |b| quartic(b, false)),
    rec!("new1", "(u-v)[e_i(u),X^l] = (-1)^{|i|} l X^{l+1}, X = e_i(v)-e_i(u)", Any, new1),
    rec!("new2", "(u-v)[e_i(u),d_i(v)X^l] = (-1)^{|i|}(l-1) d_i(v)X^{l+1}", Any, new2),
    rec!("new3", "(u-v)[e_i(u),d_{i+1}(v)X^l] = (-1)^{|i+1|}(l+1) d_{i+1}(v)X^{l+1}", Any, new3),
    rec!("new4", "(u-v)[e_i(u),d_{i+1}(v)X^l d_i(v)^{-1}] = ((-1)^{|i+1|} + (-1)^{|i|}(l+1)) d_{i+1}(v)X^{l+1}d_i(v)^{-1}", Any, new4),
    rec!("new5", "(u-v)[e_i(u),d_i(v)] = (-1)^{|i|} d_i(v)(e_i(u)-e_i(v))", Any, |b| e_with_diag(b, 5)),
    rec!("new6", "(u-v)[e_i(u),d_i(v)^{-1}] = (-1)^{|i|}(e_i(v)-e_i(u)) d_i(v)^{-1}", Any, |b| e_with_diag(b, 6)),
    rec!("new7", "(u-v)[e_i(u),d_{i+1}(v)] = (-1)^{|i+1|} d_{i+1}(v)(e_i(v)-e_i(u))", Any, |b| e_with_diag(b, 7)),
    rec!("new8", "(u-v)[e_i(u),d_{i+1}(v)^{-1}] = (-1)^{|i+1|}(e_i(u)-e_i(v)) d_{i+1}(v)^{-1}", Any, |b| e_with_diag(b, 8)),
    rec!("111", "[e_i^{(r)}, Σ_{s_k>=r} e^{(s_1)}..e^{(s_l)}] = (-1)^{|i|} l Σ_{s_k>=r} e^{(s_1)}..e^{(s_{l+1})}", Any, c111),
    rec!("222", "[e_i^{(r)}, Σ_{s_k<r} e^{(s_1)}..e^{(s_l)}] = -(-1)^{|i|} l Σ_{s_k<r} e^{(s_1)}..e^{(s_{l+1})}", Any, c222),
    rec!("333", "[e_i^{(r)}, Σ d_i^{(t)} e^{(s_1)}..e^{(s_l)}] = (-1)^{|i|}(l-1) Σ d_i^{(t)} e^{(s_1)}..e^{(s_{l+1})}", Any, c333),
    rec!("444", "[e_i^{(r)}, Σ d_{i+1}^{(t)} e^{(s_1)}..e^{(s_l)}] = (-1)^{|i+1|}(l+1) Σ d_{i+1}^{(t)} e..e", Any, c444),
    rec!("555", "[e_i^{(r)}, Σ d_{i+1}^{(t)} e..e d_i'^{(u)}] = ((-1)^{|i+1|} + (-1)^{|i|}(l+1)) Σ d_{i+1}^{(t)} e..e d_i'^{(u)}", Any, c555),
    rec!("cyclic-1", "(u-v)[d_{i↓k}(u),e_i(v)] = k d_{i↓k}(u)(e_i(v)-e_i(u)), i <= m", Any, |b| cyclic(b, 1)),
    rec!("cyclic-2", "(u-v)[d_{i↑k}(u),e_i(v)] = -k d_{i↑k}(u)(e_i(v)-e_i(u)), i > m", Any, |b| cyclic(b, 2)),
    rec!("cyclic-3", "(u-v)[d_{i↑k}(u),e_{i-1}(v)] = k d_{i↑k}(u)(e_{i-1}(u)-e_{i-1}(v)), 2 <= i <= m", Any, |b| cyclic(b, 3)),
    rec!("cyclic-4", "(u-v)[d_{i↓k}(u),e_{i-1}(v)] = -k d_{i↓k}(u)(e_{i-1}(u)-e_{i-1}(v)), i > m", Any, |b| cyclic(b, 4)),
    rec!("ed-1", "e_i(u-(-1)^{|i|}) d_i(u) = d_i(u) e_i(u)", Any, |b| ed(b, 1)),
    rec!("ed-2", "d_i(u)^{-1} e_i(u-(-1)^{|i|}) = e_i(u) d_i(u)^{-1}", Any, |b| ed(b, 2)),
    rec!("ed-3", "e_i(u+(-1)^{|i+1|}) d_{i+1}(u) = d_{i+1}(u) e_i(u)", Any, |b| ed(b, 3)),
    rec!("ed-4", "d_{i+1}(u)^{-1} e_i(u+(-1)^{|i+1|}) = e_i(u) d_{i+1}(u)^{-1}", Any, |b| ed(b, 4)),
    rec!("he-comm", "h_i(u) e_i(u-(-1)^{|i|}) = e_i(u+(-1)^{|i+1|}) h_i(u)", Any, he_comm),
    rec!("he-1", "(u-v-(-1)^{|i|})[h_i(u),e_i(v)] = ((-1)^{|i|} + (-1)^{|i+1|}) h_i(u)(e_i(u-(-1)^{|i|}) - e_i(v))", Any, |b| he(b, 1)),
    rec!("he-2", "(u-v+(-1)^{|i+1|})[h_i(u),e_i(v)] = ((-1)^{|i|} + (-1)^{|i+1|})(e_i(u+(-1)^{|i+1|}) - e_i(v)) h_i(u)", Any, |b| he(b, 2)),
    rec!("he-3", "(u-v)[h_{i-1}(u),e_i(v)] = (-1)^{|i|} h_{i-1}(u)(e_i(v)-e_i(u))", Any, |b| he(b, 3)),
    rec!("he-4", "(u-v-(-1)^{|i|})[h_{i-1}(u),e_i(v)] = (-1)^{|i|}(e_i(v) - e_i(u-(-1)^{|i|})) h_{i-1}(u)", Any, |b| he(b, 4)),
    rec!("he-5", "(u-v)[h_{i+1}(u),e_i(v)] = (-1)^{|i+1|}(e_i(v)-e_i(u)) h_{i+1}(u)", Any, |b| he(b, 5)),
    rec!("he-6", "(u-v+(-1)^{|i+1|})[h_{i+1}(u),e_i(v)] = (-1)^{|i+1|} h_{i+1}(u)(e_i(v) - e_i(u+(-1)^{|i+1|}))", Any, |b| he(b, 6)),
    rec!("coro1", "(u-v)[h_i(u),e_i(v)] = (-1)^{|i+1|}(2h_i(u)e_i(u-(-1)^{|i|}) - h_i(u)e_i(v) - e_i(v)h_i(u)), i != m; 0 for i = m", Any, coro1),
    rec!("coro2", "(u-v)[h_{i-1}(u+a),e_i(v)] = a(h e_i(v) + e_i(v) h) - a(h e_i(u+a) + e_i(u-a) h), a = (-1)^{|i|}/2", OddPrime, |b| coro_avg(b, true)),
    rec!("coro3", "(u-v)[h_{i+1}(u-b),e_i(v)] = b(h e_i(v) + e_i(v) h) - b(h e_i(u+b) + e_i(u-b) h), b = (-1)^{|i+1|}/2", OddPrime, |b| coro_avg(b, false)),
    rec!("gv-gu", "(u-v) Σ_{r,s>=1} g^{(r+s-1)} u^{-r} v^{-s} = g(v) - g(u)", Any, gv_gu),
];

pub fn identity_ids() -> Vec<&'static str> {
    IDENTITIES.iter().map(|r| r.id).collect()
}

pub fn find_identity(id: &str) -> Result<&'static IdentityRecord> {
    IDENTITIES.iter().find(|r| r.id == id).ok_or_else(|| Error::Unknown(id.to_string()))
}

fn min_idx(a: Index, b: Index) -> Index {
    [a[0].min(b[0]), a[1].min(b[1]), a[2].min(b[2])]
}

/// Evaluate one record on prepared Gauss data.
pub fn run_record(rec: &IdentityRecord, gd: Arc<GaussData>, ctx: &AlgebraContext, opts: SuiteOptions) -> Result<CheckReport> {
    rec.admits(ctx)?;
    let start = Instant::now();
    let mut b = Builder::new(gd, opts.bound);
    (rec.build)(&mut b);
    let mut t = Tally::new();
    let insts = std::mem::take(&mut b.out);
    for inst in insts {
        match inst {
            Instance::Series { label, lhs, rhs, vars } => {
                let low = min_idx(b.a.low(lhs), b.a.low(rhs));
                for idx in window(low, vars, opts.bound as i32) {
                    let l = b.a.coeff(lhs, idx)?;
                    let mut r = b.a.coeff(rhs, idx)?;
                    if opts.mutate {
                        r = r.neg();
                    }
                    let coords = &idx[..vars.len()];
                    t.eq(|| format!("{label} coeff {coords:?}"), &l, &r);
                }
            }
            Instance::Direct { label, lhs, mut rhs } => {
                if opts.mutate {
                    rhs = rhs.neg();
                }
                t.eq(|| label, &lhs, &rhs);
            }
        }
    }
    let mut rep = t.report(format!("identity/{}", rec.id), ctx, start);
    if rep.checked == 0 {
        rep = rep.with_note("no admissible index in this context");
    }
    Ok(rep)
}

/// Check one identity for all coefficients with total degree `<= bound`.
/// The mutated variant compares against `-rhs`.
/// Every record admissible on `ctx`, evaluated in parallel on shared Gauss
/// data. Reports come back in catalog order.
pub fn verify_identities(ctx: &AlgebraContext, opts: SuiteOptions) -> Result<Vec<CheckReport>> {
    let gd = working_gauss(ctx, opts.bound + 2);
    IDENTITIES
        .par_iter()
        .filter(|r| r.admits(ctx).is_ok())
        .map(|r| run_record(r, gd.clone(), ctx, opts))
        .collect()
}

pub fn verify_identity(id: &str, ctx: &AlgebraContext, opts: SuiteOptions) -> Result<CheckReport> {
    let rec = find_identity(id)?;
    rec.admits(ctx)?;
    let gd = working_gauss(ctx, opts.bound + 2);
    run_record(rec, gd, ctx, opts)
}
