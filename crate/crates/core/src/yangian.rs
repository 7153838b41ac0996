//! The super Yangian `Y_{m|n}` over F_p in its RTT presentation.

use std::sync::Arc;

use crate::context::AlgebraContext;
use crate::element::{CurrentElement, Element};
use crate::error::{Error, Result};
use crate::field;
use crate::pbw::{Acc, Engine, Gen, Monomial, Rules, Terms};

/// The RTT relation as a bracket rule.
pub struct RttRules {
    ctx: AlgebraContext,
    defect: Option<Defect>,
}

/// Deliberate corruption of the bracket rule, for harness self-tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Defect {
    /// Drop the overall sign factor of the relation.
    IgnoreSign,
}

impl Rules for RttRules {
    fn prime(&self) -> u32 {
        self.ctx.p
    }

    fn parity(&self, g: Gen) -> u32 {
        (self.ctx.parity(g.i()) + self.ctx.parity(g.j())) % 2
    }

    fn odd_cap(&self) -> bool {
        self.ctx.odd_cap()
    }

    fn bracket(&self, eng: &Engine<Self>, x: Gen, y: Gen) -> Terms {
        let c = &self.ctx;
        let p = c.p;
        let (i, j, r) = (x.i(), x.j(), x.r());
        let (k, l, s) = (y.i(), y.j(), y.r());
        let (pi, pj, pk) = (c.parity(i), c.parity(j), c.parity(k));
        let sg = match self.defect {
            Some(Defect::IgnoreSign) => 1,
            None => c.sign(pi * pj + pi * pk + pj * pk),
        };
        let top = r + s - 1;
        let mut acc = Acc::new(p);
        if k == j {
            acc.add(Monomial::gen(Gen::new(i, l, top)), 1);
        }
        if i == l {
            acc.add(Monomial::gen(Gen::new(k, j, top)), p - 1);
        }
        for t in 1..r.min(s) {
            let a = eng.mul_gens(Gen::new(k, j, t), Gen::new(i, l, top - t));
            acc.add_terms(&a, 1);
            let b = eng.mul_gens(Gen::new(k, j, top - t), Gen::new(i, l, t));
            acc.add_terms(&b, p - 1);
        }
        let mut out = acc.finish();
        if sg != 1 {
            for (_, v) in out.iter_mut() {
                *v = field::mul(*v, sg, p);
            }
        }
        out
    }
}

/// `Y_{m|n}` with its straightening caches.
pub struct Yangian {
    ctx: AlgebraContext,
    engine: Engine<RttRules>,
}

impl Yangian {
    pub fn new(ctx: AlgebraContext) -> Arc<Yangian> {
        Arc::new(Yangian { ctx, engine: Engine::new(RttRules { ctx, defect: None }) })
    }

    /// A Yangian whose bracket rule is deliberately corrupted.
    pub fn with_defect(ctx: AlgebraContext, defect: Defect) -> Arc<Yangian> {
        Arc::new(Yangian { ctx, engine: Engine::new(RttRules { ctx, defect: Some(defect) }) })
    }

    pub fn ctx(&self) -> AlgebraContext {
        self.ctx
    }

    pub fn p(&self) -> u32 {
        self.ctx.p
    }

    pub fn engine(&self) -> &Engine<RttRules> {
        &self.engine
    }

    /// `t_{i,j}^{(r)}`, with bounds checks.
    pub fn generator(&self, i: usize, j: usize, r: u32) -> Result<Element> {
        self.ctx.check_index(i)?;
        self.ctx.check_index(j)?;
        if r == 0 || r > Gen::MAX_SUPERSCRIPT {
            return Err(Error::IndexOutOfRange(format!("superscript {r}")));
        }
        Ok(self.t(i, j, r))
    }

    /// `t_{i,j}^{(r)}` with `t^{(0)} = δ`. Indices are trusted.
    pub fn t(&self, i: usize, j: usize, r: u32) -> Element {
        if r == 0 {
            return Element::scalar(self.ctx, u32::from(i == j));
        }
        Element::from_terms(self.ctx, vec![(Monomial::gen(Gen::new(i, j, r)), 1)])
    }

    pub fn zero(&self) -> Element {
        Element::zero(self.ctx)
    }

    pub fn one(&self) -> Element {
        Element::one(self.ctx)
    }

    pub fn scalar(&self, c: i64) -> Element {
        Element::scalar(self.ctx, self.ctx.scalar(c))
    }

    pub fn gen_parity(&self, g: Gen) -> u32 {
        self.engine.rules.parity(g)
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        assert!(a.ctx() == self.ctx && b.ctx() == self.ctx, "context mismatch");
        Element::from_terms(self.ctx, self.engine.mul_terms(a.terms(), b.terms()))
    }

    pub fn try_mul(&self, a: &Element, b: &Element) -> Result<Element> {
        if a.ctx() != self.ctx || b.ctx() != self.ctx {
            return Err(Error::ContextMismatch);
        }
        Ok(self.mul(a, b))
    }

    pub fn product(&self, xs: &[Element]) -> Element {
        let mut acc = self.one();
        for x in xs {
            acc = self.mul(&acc, x);
        }
        acc
    }

    pub fn pow(&self, a: &Element, k: u32) -> Element {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// `[a, b] = ab - (-1)^{|a||b|} ba`, bilinear in parity parts.
    pub fn supercommutator(&self, a: &Element, b: &Element) -> Element {
        assert!(a.ctx() == self.ctx && b.ctx() == self.ctx, "context mismatch");
        Element::from_terms(self.ctx, self.engine.supercommutator(a.terms(), b.terms()))
    }

    pub fn try_supercommutator(&self, a: &Element, b: &Element) -> Result<Element> {
        if a.ctx() != self.ctx || b.ctx() != self.ctx {
            return Err(Error::ContextMismatch);
        }
        Ok(self.supercommutator(a, b))
    }

    /// Normal form of a word in generators.
    pub fn word(&self, letters: &[Gen]) -> Element {
        Element::from_terms(self.ctx, self.engine.word(letters))
    }

    /// Parity of a homogeneous element; `None` if mixed. Zero is even.
    pub fn parity(&self, a: &Element) -> Option<u32> {
        let mut seen = None;
        for (m, _) in a.terms() {
            let q = self.engine.monomial_parity(m);
            match seen {
                None => seen = Some(q),
                Some(s) if s != q => return None,
                _ => {}
            }
        }
        Some(seen.unwrap_or(0))
    }

    /// Image in `gr_d Y = U(g)_d` under `t_{ij}^{(r)} -> (-1)^{|i|} e_{ij} x^{r-1}`.
    pub fn top_graded(&self, a: &Element, d: u32) -> Result<CurrentElement> {
        if let Some(deg) = loop_degree(a) {
            if deg > d {
                return Err(Error::DegreeOverflow { found: deg as i64, requested: d as i64 });
            }
        }
        let p = self.ctx.p;
        let mut acc = Acc::new(p);
        for (m, c) in a.terms() {
            if monomial_loop_degree(m) != d {
                continue;
            }
            let mut sign_exp = 0;
            let mut img = Monomial::one();
            for f in m.factors() {
                sign_exp += self.ctx.parity(f.gen.i()) * f.exp;
                let mut f2 = *f;
                f2.gen = f.gen.with_r(f.gen.r() - 1);
                img.0.push(f2);
            }
            acc.add(img, field::mul(*c, self.ctx.sign(sign_exp), p));
        }
        Ok(CurrentElement::from_terms(self.ctx, acc.finish()))
    }
}

/// `Σ exp (r - 1)` of a monomial.
pub fn monomial_loop_degree(m: &Monomial) -> u32 {
    m.factors().iter().map(|f| f.exp * (f.gen.r() - 1)).sum()
}

/// Highest loop degree among the terms; `None` stands for minus infinity.
pub fn loop_degree(a: &Element) -> Option<u32> {
    a.terms().iter().map(|(m, _)| monomial_loop_degree(m)).max()
}

/// Largest superscript appearing in `a`.
pub fn max_superscript(a: &Element) -> u32 {
    a.terms().iter().flat_map(|(m, _)| m.factors().iter().map(|f| f.gen.r())).max().unwrap_or(0)
}
