//! Consistency of the rewriting system: associativity on generator triples
//! and closure of the defining relation on generator pairs.

use std::sync::Arc;

use crate::context::AlgebraContext;
use crate::element::Element;
use crate::error::Result;
use crate::yangian::{Defect, Yangian};

use super::{run_suite, CheckReport, SuiteOptions, Tally};

/// All generators `t_{ij}^{(r)}` with `r <= max_r`.
fn generators(ctx: &AlgebraContext, max_r: u32) -> Vec<(usize, usize, u32)> {
    let k = ctx.size();
    let mut out = Vec::new();
    for r in 1..=max_r {
        for i in 1..=k {
            for j in 1..=k {
                out.push((i, j, r));
            }
        }
    }
    out
}

/// Right side of the defining relation for `[t_{ij}^{(r)}, t_{kl}^{(s)}]`,
/// assembled from products of generators.
pub fn rtt_rhs(y: &Yangian, (i, j, r): (usize, usize, u32), (k, l, s): (usize, usize, u32)) -> Element {
    let ctx = y.ctx();
    let (pi, pj, pk) = (ctx.parity(i), ctx.parity(j), ctx.parity(k));
    let sign = ctx.sign(pi * pj + pi * pk + pj * pk);
    let mut acc = y.zero();
    for t in 0..r.min(s) {
        let a = y.mul(&y.t(k, j, t), &y.t(i, l, r + s - 1 - t));
        let b = y.mul(&y.t(k, j, r + s - 1 - t), &y.t(i, l, t));
        acc = acc.add(&a.sub(&b));
    }
    acc.scale(sign)
}

fn closure(y: &Yangian, bound: usize, t: &mut Tally) {
    let ctx = y.ctx();
    let gens = generators(&ctx, bound as u32);
    for &a in &gens {
        for &b in &gens {
            if (a.2 + b.2) as usize > bound {
                continue;
            }
            let (x, z) = (y.t(a.0, a.1, a.2), y.t(b.0, b.1, b.2));
            let par = (ctx.parity(a.0) + ctx.parity(a.1)) * (ctx.parity(b.0) + ctx.parity(b.1));
            let lhs = y.mul(&x, &z).sub(&y.mul(&z, &x).scale(ctx.sign(par)));
            let rhs = rtt_rhs(y, a, b);
            t.eq(|| format!("t_{{{},{}}}^({}) t_{{{},{}}}^({})", a.0, a.1, a.2, b.0, b.1, b.2), &lhs, &rhs);
        }
    }
}

fn associativity(y: &Yangian, degree: usize, t: &mut Tally) {
    let ctx = y.ctx();
    let gens = generators(&ctx, degree as u32 + 1);
    let els: Vec<Element> = gens.iter().map(|g| y.t(g.0, g.1, g.2)).collect();
    for (ia, a) in gens.iter().enumerate() {
        for (ib, b) in gens.iter().enumerate() {
            if (a.2 + b.2 - 2) as usize > degree {
                continue;
            }
            let ab = y.mul(&els[ia], &els[ib]);
            for (ic, c) in gens.iter().enumerate() {
                if (a.2 + b.2 + c.2 - 3) as usize > degree {
                    continue;
                }
                let left = y.mul(&ab, &els[ic]);
                let right = y.mul(&els[ia], &y.mul(&els[ib], &els[ic]));
                t.eq(|| format!("{a:?} {b:?} {c:?}"), &left, &right);
            }
        }
    }
}

/// Associativity for all generator triples of total loop degree `<= bound`
/// and relation closure for all pairs with `r + s <= bound + 1`.
/// With `mutate`, the engine drops the super sign of the relation.
/// For `p = 2` the products are also compared with the non-super `Y_{m+n}`.
pub fn verify_rtt_consistency(ctx: &AlgebraContext, opts: SuiteOptions) -> Result<Vec<CheckReport>> {
    let y: Arc<Yangian> = if opts.mutate { Yangian::with_defect(*ctx, Defect::IgnoreSign) } else { Yangian::new(*ctx) };
    let mut out = vec![
        run_suite("rtt/closure", ctx, |t| {
            closure(&y, opts.bound + 1, t);
            Ok(())
        })?,
        run_suite("rtt/associativity", ctx, |t| {
            associativity(&y, opts.bound, t);
            Ok(())
        })?,
    ];
    if ctx.p == 2 {
        let plain = Yangian::new(AlgebraContext::ordinary(ctx.size(), ctx.p, ctx.trunc)?);
        out.push(run_suite("rtt/p2-collapse", ctx, |t| {
            let gens = generators(ctx, opts.bound as u32 + 1);
            for a in &gens {
                for b in &gens {
                    if (a.2 + b.2) as usize > opts.bound + 2 {
                        continue;
                    }
                    let sup = y.mul(&y.t(a.0, a.1, a.2), &y.t(b.0, b.1, b.2)).to_canonical();
                    let ord = plain.mul(&plain.t(a.0, a.1, a.2), &plain.t(b.0, b.1, b.2)).to_canonical();
                    if sup == ord {
                        t.pass_one();
                    } else {
                        let diff = Element::from_canonical(*ctx, &sup)?.sub(&Element::from_canonical(*ctx, &ord)?);
                        t.fail_with(|| format!("{a:?} {b:?}"), diff.to_canonical());
                    }
                }
            }
            Ok(())
        })?);
    }
    Ok(out)
}
