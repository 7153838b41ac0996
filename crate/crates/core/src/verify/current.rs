//! Checks on the truncated current superalgebra: super-Jacobi, central
//! elements, and invariant dimensions against the free-generator count.

use crate::context::AlgebraContext;
use crate::current::{CurrentAlgebra, CurrentGen};
use crate::element::CurrentElement;
use crate::error::Result;
use crate::invariants::invariant_dimension;

use super::{run_suite, CheckReport, SuiteOptions, Tally};

fn central_into(g: &CurrentAlgebra, label: &str, x: &CurrentElement, t: &mut Tally) {
    match g.central_witness(x) {
        None => t.pass_one(),
        Some((b, c)) => t.fail_with(|| format!("{label} vs e_{{{},{}}}x^{}", b.i, b.j, b.r), c.to_canonical()),
    }
}

fn jacobi(g: &CurrentAlgebra, t: &mut Tally) {
    let basis = g.basis();
    let top = g.max_loop();
    let el = |x: CurrentGen| g.e(x.i, x.j, x.r);
    let sign = |a: CurrentGen, b: CurrentGen| g.ctx().sign(g.gen_parity(a) * g.gen_parity(b));
    for &a in &basis {
        for &b in &basis {
            if a.r + b.r > top {
                continue;
            }
            let ab = g.supercommutator(&el(a), &el(b));
            let ba = g.supercommutator(&el(b), &el(a));
            let skew = ab.add(&ba.scale(sign(a, b)));
            if skew.is_zero() {
                t.pass_one();
            } else {
                t.fail_with(|| format!("skew {a:?} {b:?}"), skew.to_canonical());
            }
            for &c in &basis {
                if a.r + b.r + c.r > top {
                    continue;
                }
                let lhs = g.supercommutator(&el(a), &g.supercommutator(&el(b), &el(c)));
                let r1 = g.supercommutator(&ab, &el(c));
                let r2 = g.supercommutator(&el(b), &g.supercommutator(&el(a), &el(c))).scale(sign(a, b));
                let d = lhs.sub(&r1).sub(&r2);
                if d.is_zero() {
                    t.pass_one();
                } else {
                    t.fail_with(|| format!("jacobi {a:?} {b:?} {c:?}"), d.to_canonical());
                }
            }
        }
    }
}

/// Even basis generators whose p-th power stays within the truncation.
fn p_center_gens(g: &CurrentAlgebra) -> Vec<CurrentGen> {
    let ctx = g.ctx();
    g.basis()
        .into_iter()
        .filter(|x| g.gen_parity(*x) == 0 && x.r * ctx.p <= g.max_loop())
        .collect()
}

/// Centrality of `z_r` and of the p-center generators, super-Jacobi on
/// basis triples, and invariant dimensions in degree `<= bound` with loop
/// powers `<= 2`.
pub fn verify_current(ctx: &AlgebraContext, opts: SuiteOptions) -> Result<Vec<CheckReport>> {
    let g = CurrentAlgebra::new(*ctx);
    let mut out = Vec::new();
    out.push(run_suite("current/jacobi", ctx, |t| {
        jacobi(&g, t);
        Ok(())
    })?);
    out.push(run_suite("current/z-central", ctx, |t| {
        for r in 0..=g.max_loop() {
            let mut z = g.z(r);
            if opts.mutate && r == 0 {
                z = z.add(&g.e(1, 2, 0));
            }
            central_into(&g, &format!("z_{r}"), &z, t);
        }
        Ok(())
    })?);
    out.push(run_suite("current/p-center-central", ctx, |t| {
        for x in p_center_gens(&g) {
            let c = g.p_center_gen(x)?;
            central_into(&g, &format!("(e_{{{},{}}}x^{})^p", x.i, x.j, x.r), &c, t);
        }
        Ok(())
    })?);
    let wctx = ctx.with_trunc(ctx.trunc.max(4));
    out.push(run_suite("current/invariants", ctx, |t| {
        for d in 0..=opts.bound as u32 {
            for l in 0..=2 {
                let s = invariant_dimension(wctx, d, l);
                if s.dimension as u128 == s.expected {
                    t.pass_one();
                } else {
                    let diff = CurrentElement::scalar(wctx, 1).to_canonical();
                    t.fail_with(|| format!("d={d} L={l}: kernel {} vs count {}", s.dimension, s.expected), diff);
                }
            }
        }
        Ok(())
    })?);
    Ok(out)
}
