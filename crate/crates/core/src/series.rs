//! Truncated power series in `u^{-1}` with Yangian coefficients.

use crate::context::AlgebraContext;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::field;
use crate::yangian::Yangian;

/// `Σ_{r=0}^{N} c_r u^{-r}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct USeries {
    ctx: AlgebraContext,
    coeffs: Vec<Element>,
}

impl USeries {
    /// Build from coefficients, padding with zeros (or cutting) to order `N`.
    pub fn new(ctx: AlgebraContext, mut coeffs: Vec<Element>) -> Self {
        coeffs.truncate(ctx.trunc + 1);
        while coeffs.len() < ctx.trunc + 1 {
            coeffs.push(Element::zero(ctx));
        }
        for c in &coeffs {
            assert_eq!(c.ctx(), ctx, "context mismatch");
        }
        USeries { ctx, coeffs }
    }

    pub fn zero(ctx: AlgebraContext) -> Self {
        Self::new(ctx, Vec::new())
    }

    pub fn one(ctx: AlgebraContext) -> Self {
        Self::constant(Element::one(ctx))
    }

    pub fn constant(c: Element) -> Self {
        Self::new(c.ctx(), vec![c])
    }

    /// A series with scalar coefficients.
    pub fn scalars(ctx: AlgebraContext, cs: &[i64]) -> Self {
        Self::new(ctx, cs.iter().map(|&c| Element::scalar(ctx, ctx.scalar(c))).collect())
    }

    /// `u^{-1}`.
    pub fn u_inv(ctx: AlgebraContext) -> Self {
        Self::scalars(ctx, &[0, 1])
    }

    /// `t_{ij}(u) = δ_{ij} + Σ_r t_{ij}^{(r)} u^{-r}`.
    pub fn t(y: &Yangian, i: usize, j: usize) -> Self {
        let ctx = y.ctx();
        Self::new(ctx, (0..=ctx.trunc as u32).map(|r| y.t(i, j, r)).collect())
    }

    pub fn ctx(&self) -> AlgebraContext {
        self.ctx
    }

    pub fn trunc(&self) -> usize {
        self.ctx.trunc
    }

    pub fn coeffs(&self) -> &[Element] {
        &self.coeffs
    }

    /// Coefficient of `u^{-r}`; panics past the truncation.
    pub fn coeff(&self, r: usize) -> &Element {
        &self.coeffs[r]
    }

    pub fn try_coeff(&self, r: usize) -> Result<&Element> {
        self.coeffs.get(r).ok_or(Error::OutOfTruncation(r))
    }

    pub fn is_unital(&self) -> bool {
        self.coeffs[0] == Element::one(self.ctx)
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.ctx, o.ctx, "context mismatch");
        USeries { ctx: self.ctx, coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!(self.ctx, o.ctx, "context mismatch");
        USeries { ctx: self.ctx, coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn scale(&self, c: u32) -> Self {
        USeries { ctx: self.ctx, coeffs: self.coeffs.iter().map(|a| a.scale(c)).collect() }
    }

    pub fn scale_i(&self, c: i64) -> Self {
        self.scale(self.ctx.scalar(c))
    }

    pub fn neg(&self) -> Self {
        self.scale(self.ctx.p - 1)
    }

    /// `g(u - c)` via `(u-c)^{-r} = Σ_k C(r+k-1, k) c^k u^{-(r+k)}`.
    pub fn shift(&self, c: u32) -> Self {
        let p = self.ctx.p;
        let n = self.ctx.trunc;
        let c = c % p;
        if c == 0 {
            return self.clone();
        }
        let mut out: Vec<Element> = vec![Element::zero(self.ctx); n + 1];
        out[0] = self.coeffs[0].clone();
        for r in 1..=n {
            if self.coeffs[r].is_zero() {
                continue;
            }
            for k in 0..=(n - r) {
                let b = field::binomial_mod_p((r + k - 1) as u64, k as u64, p);
                let s = field::mul(b, field::pow(c, k as u64, p), p);
                if s != 0 {
                    out[r + k] = out[r + k].add(&self.coeffs[r].scale(s));
                }
            }
        }
        USeries { ctx: self.ctx, coeffs: out }
    }

    /// Shift by an integer amount reduced mod p.
    pub fn shift_i(&self, c: i64) -> Self {
        self.shift(self.ctx.scalar(c))
    }

    /// `g(-u)`: coefficient `r` picks up `(-1)^r`.
    pub fn negate_variable(&self) -> Self {
        let p = self.ctx.p;
        USeries {
            ctx: self.ctx,
            coeffs: self.coeffs.iter().enumerate().map(|(r, a)| a.scale(field::sign(r as u32, p))).collect(),
        }
    }

    /// Apply a coefficientwise map, keeping the context.
    pub fn map(&self, f: impl Fn(&Element) -> Element) -> Self {
        USeries { ctx: self.ctx, coeffs: self.coeffs.iter().map(f).collect() }
    }
}

impl Yangian {
    /// Cauchy product, noncommutative.
    pub fn series_mul(&self, a: &USeries, b: &USeries) -> USeries {
        let ctx = self.ctx();
        assert!(a.ctx == ctx && b.ctx == ctx, "context mismatch");
        let n = ctx.trunc;
        let mut out = Vec::with_capacity(n + 1);
        for r in 0..=n {
            let mut acc = Element::zero(ctx);
            for s in 0..=r {
                if a.coeffs[s].is_zero() || b.coeffs[r - s].is_zero() {
                    continue;
                }
                acc = acc.add(&self.mul(&a.coeffs[s], &b.coeffs[r - s]));
            }
            out.push(acc);
        }
        USeries { ctx, coeffs: out }
    }

    pub fn try_series_mul(&self, a: &USeries, b: &USeries) -> Result<USeries> {
        if a.ctx != self.ctx() || b.ctx != self.ctx() {
            return Err(Error::ContextMismatch);
        }
        Ok(self.series_mul(a, b))
    }

    /// Ordered product of several series.
    pub fn series_product(&self, xs: &[USeries]) -> USeries {
        let mut acc = USeries::one(self.ctx());
        for x in xs {
            acc = self.series_mul(&acc, x);
        }
        acc
    }

    /// Two-sided inverse of a unital series:
    /// `g'^{(r)} = -Σ_{t=1}^{r} g^{(t)} g'^{(r-t)}`.
    pub fn series_inverse(&self, g: &USeries) -> Result<USeries> {
        if g.ctx != self.ctx() {
            return Err(Error::ContextMismatch);
        }
        if !g.is_unital() {
            return Err(Error::NotUnital);
        }
        let ctx = self.ctx();
        let mut out = vec![Element::one(ctx)];
        for r in 1..=ctx.trunc {
            let mut acc = Element::zero(ctx);
            for t in 1..=r {
                if g.coeffs[t].is_zero() || out[r - t].is_zero() {
                    continue;
                }
                acc = acc.add(&self.mul(&g.coeffs[t], &out[r - t]));
            }
            out.push(acc.neg());
        }
        Ok(USeries { ctx, coeffs: out })
    }

    /// Inverse of a series whose constant term is a nonzero scalar.
    pub fn series_inverse_scalar_lead(&self, g: &USeries) -> Result<USeries> {
        let c0 = &g.coeffs[0];
        if !c0.is_scalar() || c0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let p = self.p();
        let s = field::inv(c0.constant(), p);
        Ok(self.series_inverse(&g.scale(s))?.scale(s))
    }

    /// `g^p`.
    pub fn series_pow_p(&self, g: &USeries) -> USeries {
        let mut acc = USeries::one(self.ctx());
        for _ in 0..self.p() {
            acc = self.series_mul(&acc, g);
        }
        acc
    }

    /// `g(u) g(u-1) ... g(u-k+1)`.
    pub fn shifted_product_down(&self, g: &USeries, k: u32) -> USeries {
        let xs: Vec<USeries> = (0..k).map(|s| g.shift_i(s as i64)).collect();
        self.series_product(&xs)
    }

    /// `g(u) g(u+1) ... g(u+k-1)`.
    pub fn shifted_product_up(&self, g: &USeries, k: u32) -> USeries {
        let xs: Vec<USeries> = (0..k).map(|s| g.shift_i(-(s as i64))).collect();
        self.series_product(&xs)
    }

    /// Coefficientwise supercommutator of `g(u)` with a fixed element.
    pub fn series_bracket_elem(&self, g: &USeries, x: &Element) -> USeries {
        g.map(|c| self.supercommutator(c, x))
    }
}

/// `C(n, k) mod p`.
pub fn binomial_mod_p(n: u64, k: u64, p: u32) -> u32 {
    field::binomial_mod_p(n, k, p)
}
