//! The relations among `d_i^{(r)}, d_i'^{(r)}, e_j^{(r)}, f_j^{(r)}`
//! evaluated on Gauss data.

use crate::context::AlgebraContext;
use crate::element::Element;
use crate::error::Result;
use crate::gauss::GaussData;
use crate::yangian::Yangian;

use super::{run_suite, working_gauss, CheckReport, SuiteOptions, Tally};

/// Coefficient accessors for the Drinfeld generators.
pub(crate) struct Gens<'a> {
    pub gd: &'a GaussData,
    pub y: &'a Yangian,
    pub ctx: AlgebraContext,
}

impl<'a> Gens<'a> {
    pub fn new(gd: &'a GaussData) -> Self {
        Gens { gd, y: gd.yangian(), ctx: gd.ctx() }
    }
    pub fn k(&self) -> usize {
        self.ctx.size()
    }
    pub fn d(&self, i: usize, r: usize) -> Element {
        self.gd.d(i).coeff(r).clone()
    }
    pub fn dp(&self, i: usize, r: usize) -> Element {
        self.gd.d_inv(i).coeff(r).clone()
    }
    pub fn e(&self, j: usize, r: usize) -> Element {
        self.gd.e_simple(j).coeff(r).clone()
    }
    pub fn f(&self, j: usize, r: usize) -> Element {
        self.gd.f_simple(j).coeff(r).clone()
    }
    pub fn h(&self, i: usize, r: usize) -> Element {
        self.gd.h(i).coeff(r).clone()
    }
    pub fn br(&self, a: &Element, b: &Element) -> Element {
        self.y.supercommutator(a, b)
    }
    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        self.y.mul(a, b)
    }
    /// `(-1)^{|i|}` as an integer.
    pub fn sg(&self, i: usize) -> i64 {
        if self.ctx.parity(i) == 1 {
            -1
        } else {
            1
        }
    }
    pub fn zero(&self) -> Element {
        self.y.zero()
    }
}

/// Pairs `(r, s)` with `r, s >= 1`, `r + s <= bound`.
pub(crate) fn pairs(bound: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..bound).flat_map(move |r| (1..=bound - r).map(move |s| (r, s)))
}

/// Triples `(r, s, t)` with all entries `>= 1`, sum `<= bound`.
pub(crate) fn triples(bound: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    pairs(bound.saturating_sub(1)).flat_map(move |(r, s)| (1..=bound - r - s).map(move |t| (r, s, t)))
}

fn delta(a: usize, b: usize) -> i64 {
    i64::from(a == b)
}

/// Names of the relations, in the order they are checked.
pub const RELATIONS: &[&str] = &[
    "dd'", "dd", "de", "df", "ef", "ee", "ff", "ee-adj", "ff-adj", "ee-far", "cubic-e", "cubic-f", "cubic-e-diag",
    "cubic-f-diag", "quartic-e", "quartic-f",
];

/// Check one named relation for every admissible index within `bound`.
/// With `flip`, the right-hand side of the relation is negated.
pub(crate) fn check_relation(g: &Gens, name: &str, bound: usize, flip: bool, t: &mut Tally) {
    let k = g.k();
    let sgn = |x: i64| if flip { -x } else { x };
    match name {
        "dd'" => {
            for i in 1..=k {
                for r in 0..=bound {
                    let mut acc = g.zero();
                    for s in 0..=r {
                        acc = acc.add(&g.mul(&g.d(i, s), &g.dp(i, r - s)));
                    }
                    let rhs = g.y.scalar(sgn(delta(r, 0)));
                    t.eq(|| format!("i={i} r={r}"), &acc, &rhs);
                }
            }
        }
        "dd" => {
            for i in 1..=k {
                for j in 1..=k {
                    for (r, s) in pairs(bound) {
                        let lhs = g.br(&g.d(i, r), &g.d(j, s));
                        t.zero(|| format!("i={i} j={j} r={r} s={s}"), &lhs);
                    }
                }
            }
        }
        "de" | "df" => {
            let is_e = name == "de";
            for i in 1..=k {
                for j in 1..k {
                    let c = g.sg(i) * (delta(i, j) - delta(i, j + 1));
                    for (r, s) in pairs(bound) {
                        let lhs = if is_e { g.br(&g.d(i, r), &g.e(j, s)) } else { g.br(&g.d(i, r), &g.f(j, s)) };
                        let mut rhs = g.zero();
                        if c != 0 {
                            for tt in 0..r {
                                let x = if is_e {
                                    g.mul(&g.d(i, tt), &g.e(j, r + s - 1 - tt))
                                } else {
                                    g.mul(&g.f(j, r + s - 1 - tt), &g.d(i, tt))
                                };
                                rhs = rhs.add(&x);
                            }
                            rhs = rhs.scale_i(sgn(if is_e { c } else { -c }));
                        }
                        t.eq(|| format!("i={i} j={j} r={r} s={s}"), &lhs, &rhs);
                    }
                }
            }
        }
        "ef" => {
            for i in 1..k {
                for j in 1..k {
                    for (r, s) in pairs(bound) {
                        let lhs = g.br(&g.e(i, r), &g.f(j, s));
                        let mut rhs = g.zero();
                        if i == j {
                            for tt in 0..r + s {
                                rhs = rhs.add(&g.mul(&g.dp(i, tt), &g.d(i + 1, r + s - 1 - tt)));
                            }
                            rhs = rhs.scale_i(sgn(-g.sg(i + 1)));
                        }
                        t.eq(|| format!("i={i} j={j} r={r} s={s}"), &lhs, &rhs);
                    }
                }
            }
        }
        "ee" | "ff" => {
            let is_e = name == "ee";
            let x = |j: usize, r: usize| if is_e { g.e(j, r) } else { g.f(j, r) };
            for j in 1..k {
                for (r, s) in pairs(bound) {
                    let lhs = g.br(&x(j, r), &x(j, s));
                    let sum = |hi: usize| {
                        let mut acc = g.zero();
                        for tt in 1..hi {
                            acc = acc.add(&g.mul(&x(j, tt), &x(j, r + s - 1 - tt)));
                        }
                        acc
                    };
                    let (a, b) = if is_e { (sum(s), sum(r)) } else { (sum(r), sum(s)) };
                    let rhs = a.sub(&b).scale_i(sgn(g.sg(j + 1)));
                    t.eq(|| format!("j={j} r={r} s={s}"), &lhs, &rhs);
                }
            }
        }
        "ee-adj" | "ff-adj" => {
            let is_e = name == "ee-adj";
            for j in 1..k.saturating_sub(1) {
                for (r, s) in pairs(bound) {
                    let rhs;
                    let lhs;
                    if is_e {
                        lhs = g.br(&g.e(j, r + 1), &g.e(j + 1, s)).sub(&g.br(&g.e(j, r), &g.e(j + 1, s + 1)));
                        rhs = g.mul(&g.e(j, r), &g.e(j + 1, s)).scale_i(sgn(g.sg(j + 1)));
                    } else {
                        lhs = g.br(&g.f(j, r + 1), &g.f(j + 1, s)).sub(&g.br(&g.f(j, r), &g.f(j + 1, s + 1)));
                        rhs = g.mul(&g.f(j + 1, s), &g.f(j, r)).scale_i(sgn(-g.sg(j + 1)));
                    }
                    t.eq(|| format!("j={j} r={r} s={s}"), &lhs, &rhs);
                }
            }
        }
        "ee-far" => {
            for i in 1..k {
                for j in 1..k {
                    if i.abs_diff(j) <= 1 {
                        continue;
                    }
                    for (r, s) in pairs(bound) {
                        t.zero(|| format!("e i={i} j={j} r={r} s={s}"), &g.br(&g.e(i, r), &g.e(j, s)));
                        t.zero(|| format!("f i={i} j={j} r={r} s={s}"), &g.br(&g.f(i, r), &g.f(j, s)));
                    }
                }
            }
        }
        "cubic-e" | "cubic-f" => {
            let x = |j: usize, r: usize| if name == "cubic-e" { g.e(j, r) } else { g.f(j, r) };
            for i in 1..k {
                for j in 1..k {
                    if i.abs_diff(j) != 1 {
                        continue;
                    }
                    for (r, s, tt) in triples(bound) {
                        let a = g.br(&g.br(&x(i, r), &x(j, s)), &x(j, tt));
                        let b = g.br(&g.br(&x(i, r), &x(j, tt)), &x(j, s));
                        let lhs = a.add(&b);
                        let lhs = if flip { a.sub(&b) } else { lhs };
                        t.zero(|| format!("i={i} j={j} r={r} s={s} t={tt}"), &lhs);
                    }
                }
            }
        }
        "cubic-e-diag" | "cubic-f-diag" => {
            let x = |j: usize, r: usize| if name == "cubic-e-diag" { g.e(j, r) } else { g.f(j, r) };
            for i in 1..k {
                for j in 1..k {
                    if i.abs_diff(j) != 1 {
                        continue;
                    }
                    for (r, tt) in pairs(bound) {
                        if r + 2 * tt > bound {
                            continue;
                        }
                        let lhs = g.br(&g.br(&x(i, r), &x(j, tt)), &x(j, tt));
                        let lhs = if flip { g.br(&x(i, r), &x(j, tt)) } else { lhs };
                        t.zero(|| format!("i={i} j={j} r={r} t={tt}"), &lhs);
                    }
                }
            }
        }
        "quartic-e" | "quartic-f" => {
            let x = |j: usize, r: usize| if name == "quartic-e" { g.e(j, r) } else { g.f(j, r) };
            for i in 2..k.saturating_sub(1) {
                for (r, s) in pairs(bound) {
                    let a = g.br(&x(i - 1, r), &x(i, 1));
                    let b = g.br(&x(i, 1), &x(i + 1, s));
                    let lhs = if flip { g.mul(&a, &b) } else { g.br(&a, &b) };
                    t.zero(|| format!("i={i} r={r} s={s}"), &lhs);
                }
            }
        }
        _ => unreachable!("unknown relation {name}"),
    }
}

/// Every relation of the Drinfeld-type presentation for superscripts with
/// `r + s <= bound` (`r + s + t <= bound` for the cubic relations; the
/// quartic relations keep the inner superscripts at 1).
pub fn verify_drinfeld_presentation(ctx: &AlgebraContext, opts: SuiteOptions) -> Result<Vec<CheckReport>> {
    let gd = working_gauss(ctx, opts.bound + 1);
    let g = Gens::new(&gd);
    RELATIONS
        .iter()
        .map(|name| {
            let flip = opts.mutate && *name == "de";
            run_suite(&format!("drinfeld/{name}"), ctx, |t| {
                check_relation(&g, name, opts.bound, flip, t);
                Ok(())
            })
        })
        .collect()
}
