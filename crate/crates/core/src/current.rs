//! The enveloping algebra of the current superalgebra `gl_{m|n}[x]`.
//!
//! Basis letters `e_{ij} x^r` are packed as `Gen(i, j, r)` with `r` the
//! loop power. The truncation `x^{N-1}` bounds the user-facing constructors;
//! products are computed exactly.

use std::sync::Arc;

use crate::context::AlgebraContext;
use crate::element::CurrentElement;
use crate::error::{Error, Result};
use crate::field;
use crate::pbw::{Acc, Engine, Gen, Monomial, Rules, Terms};

/// A basis vector `e_{ij} x^r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CurrentGen {
    pub i: usize,
    pub j: usize,
    pub r: u32,
}

impl CurrentGen {
    pub fn new(i: usize, j: usize, r: u32) -> Self {
        CurrentGen { i, j, r }
    }
    pub fn packed(self) -> Gen {
        Gen::new(self.i, self.j, self.r)
    }
}

pub struct CurrentRules {
    ctx: AlgebraContext,
}

impl CurrentRules {
    pub fn for_context(ctx: AlgebraContext) -> Self {
        CurrentRules { ctx }
    }

    /// The Lie bracket of two basis vectors, with no truncation.
    pub fn lie_bracket(&self, x: Gen, y: Gen) -> Terms {
        let c = &self.ctx;
        let p = c.p;
        let (i, j, r) = (x.i(), x.j(), x.r());
        let (k, l, s) = (y.i(), y.j(), y.r());
        let mut acc = Acc::new(p);
        if k == j {
            acc.add(Monomial::gen(Gen::new(i, l, r + s)), 1);
        }
        if l == i {
            let e = ((c.parity(i) + c.parity(j)) * (c.parity(k) + c.parity(l))) % 2;
            acc.add(Monomial::gen(Gen::new(k, j, r + s)), field::neg(c.sign(e), p));
        }
        acc.finish()
    }
}

impl Rules for CurrentRules {
    fn prime(&self) -> u32 {
        self.ctx.p
    }
    fn parity(&self, g: Gen) -> u32 {
        (self.ctx.parity(g.i()) + self.ctx.parity(g.j())) % 2
    }
    fn odd_cap(&self) -> bool {
        self.ctx.odd_cap()
    }
    fn bracket(&self, _eng: &Engine<Self>, x: Gen, y: Gen) -> Terms {
        self.lie_bracket(x, y)
    }
}

/// `U(gl_{m|n}[x])` with loop powers up to `N - 1`.
pub struct CurrentAlgebra {
    ctx: AlgebraContext,
    engine: Engine<CurrentRules>,
}

impl CurrentAlgebra {
    pub fn new(ctx: AlgebraContext) -> Arc<CurrentAlgebra> {
        Arc::new(CurrentAlgebra { ctx, engine: Engine::new(CurrentRules { ctx }) })
    }

    pub fn ctx(&self) -> AlgebraContext {
        self.ctx
    }

    pub fn max_loop(&self) -> u32 {
        self.ctx.trunc as u32 - 1
    }

    pub fn engine(&self) -> &Engine<CurrentRules> {
        &self.engine
    }

    pub fn gen_parity(&self, g: CurrentGen) -> u32 {
        (self.ctx.parity(g.i) + self.ctx.parity(g.j)) % 2
    }

    fn check(&self, g: CurrentGen) -> Result<()> {
        self.ctx.check_index(g.i)?;
        self.ctx.check_index(g.j)?;
        if g.r > self.max_loop() {
            return Err(Error::OutOfTruncation(g.r as usize));
        }
        Ok(())
    }

    /// `e_{ij} x^r` as an element, bounds-checked.
    pub fn generator(&self, i: usize, j: usize, r: u32) -> Result<CurrentElement> {
        self.check(CurrentGen::new(i, j, r))?;
        Ok(self.e(i, j, r))
    }

    /// `e_{ij} x^r` without bounds checks.
    pub fn e(&self, i: usize, j: usize, r: u32) -> CurrentElement {
        CurrentElement::from_terms(self.ctx, vec![(Monomial::gen(Gen::new(i, j, r)), 1)])
    }

    pub fn one(&self) -> CurrentElement {
        CurrentElement::one(self.ctx)
    }

    /// `[a, b]` of two basis vectors; the loop powers must add up to at most `N - 1`.
    pub fn bracket_gens(&self, a: CurrentGen, b: CurrentGen) -> Result<CurrentElement> {
        self.check(a)?;
        self.check(b)?;
        if a.r + b.r > self.max_loop() {
            return Err(Error::OutOfTruncation((a.r + b.r) as usize));
        }
        Ok(CurrentElement::from_terms(self.ctx, self.engine.rules.lie_bracket(a.packed(), b.packed())))
    }

    pub fn mul(&self, a: &CurrentElement, b: &CurrentElement) -> CurrentElement {
        assert!(a.ctx() == self.ctx && b.ctx() == self.ctx, "context mismatch");
        CurrentElement::from_terms(self.ctx, self.engine.mul_terms(a.terms(), b.terms()))
    }

    pub fn try_mul(&self, a: &CurrentElement, b: &CurrentElement) -> Result<CurrentElement> {
        if a.ctx() != self.ctx || b.ctx() != self.ctx {
            return Err(Error::ContextMismatch);
        }
        Ok(self.mul(a, b))
    }

    pub fn pow(&self, a: &CurrentElement, k: u32) -> CurrentElement {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, a);
        }
        acc
    }

    pub fn supercommutator(&self, a: &CurrentElement, b: &CurrentElement) -> CurrentElement {
        CurrentElement::from_terms(self.ctx, self.engine.supercommutator(a.terms(), b.terms()))
    }

    /// `z_r = Σ_i e_{ii} x^r`.
    pub fn z(&self, r: u32) -> CurrentElement {
        let mut acc = CurrentElement::zero(self.ctx);
        for i in 1..=self.ctx.size() {
            acc = acc.add(&self.e(i, i, r));
        }
        acc
    }

    /// The restricted map `(e_{ij} x^r)^{[p]} = δ_{ij} e_{ii} x^{rp}`.
    pub fn p_map(&self, g: CurrentGen) -> Result<CurrentElement> {
        self.check(g)?;
        if self.gen_parity(g) == 1 {
            return Err(Error::Parity("p-map of an odd element".into()));
        }
        let rp = g.r * self.ctx.p;
        if rp > self.max_loop() {
            return Err(Error::OutOfTruncation(rp as usize));
        }
        if g.i == g.j {
            Ok(self.e(g.i, g.i, rp))
        } else {
            Ok(CurrentElement::zero(self.ctx))
        }
    }

    /// `(e_{ij} x^r)^p - δ_{ij} e_{ii} x^{rp}`.
    pub fn p_center_gen(&self, g: CurrentGen) -> Result<CurrentElement> {
        let pm = self.p_map(g)?;
        let e = self.e(g.i, g.j, g.r);
        Ok(self.pow(&e, self.ctx.p).sub(&pm))
    }

    /// Every basis vector `e_{ij} x^r` with `r <= N - 1`.
    pub fn basis(&self) -> Vec<CurrentGen> {
        let k = self.ctx.size();
        let mut out = Vec::new();
        for i in 1..=k {
            for j in 1..=k {
                for r in 0..=self.max_loop() {
                    out.push(CurrentGen::new(i, j, r));
                }
            }
        }
        out
    }

    /// First basis vector that does not supercommute with `a`, with the bracket.
    pub fn central_witness(&self, a: &CurrentElement) -> Option<(CurrentGen, CurrentElement)> {
        for g in self.basis() {
            let b = self.supercommutator(a, &self.e(g.i, g.j, g.r));
            if !b.is_zero() {
                return Some((g, b));
            }
        }
        None
    }
}

/// `Σ exp r` of a monomial in the current algebra.
pub fn current_loop_degree(m: &Monomial) -> u32 {
    m.factors().iter().map(|f| f.exp * f.gen.r()).sum()
}
