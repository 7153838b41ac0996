//! Formal expressions in up to three series variables `u, v, w` and their
//! coefficient extraction.
//!
//! Multiplication by a linear form `(a u + b v + c w + k)` is handled on
//! coefficients: the coefficient of `u^{-r}` in `u F` is the coefficient of
//! `u^{-r-1}` in `F`. Exponent indices may be negative, standing for
//! positive powers.

use std::sync::Arc;

use rustc_hash::FxHashMap;

use crate::context::AlgebraContext;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::field;
use crate::series::USeries;
use crate::yangian::Yangian;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    U = 0,
    V = 1,
    W = 2,
}

/// Exponents of `(u^{-1}, v^{-1}, w^{-1})`.
pub type Index = [i32; 3];

#[derive(Clone, Debug)]
enum Node {
    Series(Var, Arc<USeries>),
    Scalar(u32),
    Sum(Vec<(Ex, u32)>),
    Mul(Ex, Ex),
    Bracket(Ex, Ex),
    Linear([u32; 3], u32, Ex),
    DivDiff(Var, Var, Arc<USeries>),
}

/// Handle to a node of an [`ExprArena`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Ex(usize);

/// Expression builder and memoising evaluator.
pub struct ExprArena {
    y: Arc<Yangian>,
    nodes: Vec<Node>,
    lows: Vec<Index>,
    memo: FxHashMap<(usize, Index), Element>,
}

impl ExprArena {
    pub fn new(y: Arc<Yangian>) -> Self {
        ExprArena { y, nodes: Vec::new(), lows: Vec::new(), memo: FxHashMap::default() }
    }

    pub fn ctx(&self) -> AlgebraContext {
        self.y.ctx()
    }

    fn push(&mut self, n: Node, low: Index) -> Ex {
        self.nodes.push(n);
        self.lows.push(low);
        Ex(self.nodes.len() - 1)
    }

    /// Lowest exponent index that can be nonzero, per variable.
    pub fn low(&self, e: Ex) -> Index {
        self.lows[e.0]
    }

    pub fn series(&mut self, var: Var, g: &USeries) -> Ex {
        self.push(Node::Series(var, Arc::new(g.clone())), [0; 3])
    }

    pub fn u(&mut self, g: &USeries) -> Ex {
        self.series(Var::U, g)
    }

    pub fn v(&mut self, g: &USeries) -> Ex {
        self.series(Var::V, g)
    }

    pub fn w(&mut self, g: &USeries) -> Ex {
        self.series(Var::W, g)
    }

    pub fn scalar(&mut self, c: i64) -> Ex {
        let c = self.ctx().scalar(c);
        self.push(Node::Scalar(c), [0; 3])
    }

    /// `Σ c_k e_k` with integer coefficients.
    pub fn lin(&mut self, parts: &[(Ex, i64)]) -> Ex {
        let ctx = self.ctx();
        let mut low = [0i32; 3];
        for (e, _) in parts {
            let l = self.low(*e);
            for v in 0..3 {
                low[v] = low[v].min(l[v]);
            }
        }
        let parts = parts.iter().map(|&(e, c)| (e, ctx.scalar(c))).collect();
        self.push(Node::Sum(parts), low)
    }

    pub fn add(&mut self, a: Ex, b: Ex) -> Ex {
        self.lin(&[(a, 1), (b, 1)])
    }

    pub fn sub(&mut self, a: Ex, b: Ex) -> Ex {
        self.lin(&[(a, 1), (b, -1)])
    }

    pub fn scale(&mut self, c: i64, a: Ex) -> Ex {
        self.lin(&[(a, c)])
    }

    pub fn mul(&mut self, a: Ex, b: Ex) -> Ex {
        let (la, lb) = (self.low(a), self.low(b));
        self.push(Node::Mul(a, b), [la[0] + lb[0], la[1] + lb[1], la[2] + lb[2]])
    }

    /// Ordered product of several factors.
    pub fn prod(&mut self, xs: &[Ex]) -> Ex {
        let mut acc = self.scalar(1);
        for &x in xs {
            acc = self.mul(acc, x);
        }
        acc
    }

    pub fn pow(&mut self, a: Ex, k: u32) -> Ex {
        let xs = vec![a; k as usize];
        self.prod(&xs)
    }

    /// Supercommutator.
    pub fn bracket(&mut self, a: Ex, b: Ex) -> Ex {
        let (la, lb) = (self.low(a), self.low(b));
        self.push(Node::Bracket(a, b), [la[0] + lb[0], la[1] + lb[1], la[2] + lb[2]])
    }

    /// `(a u + b v + c w + k) * e` with integer coefficients.
    pub fn linear(&mut self, coeffs: [i64; 3], k: i64, e: Ex) -> Ex {
        let ctx = self.ctx();
        let mut low = self.low(e);
        for v in 0..3 {
            if ctx.scalar(coeffs[v]) != 0 {
                low[v] -= 1;
            }
        }
        let cs = [ctx.scalar(coeffs[0]), ctx.scalar(coeffs[1]), ctx.scalar(coeffs[2])];
        self.push(Node::Linear(cs, ctx.scalar(k), e), low)
    }

    /// `(u - v) * e`.
    pub fn u_minus_v(&mut self, e: Ex) -> Ex {
        self.linear([1, -1, 0], 0, e)
    }

    /// `(g(b) - g(a)) / (a - b) = Σ_{r,s>=1} g^{(r+s-1)} a^{-r} b^{-s}`.
    pub fn div_diff(&mut self, a: Var, b: Var, g: &USeries) -> Ex {
        self.push(Node::DivDiff(a, b, Arc::new(g.clone())), [0; 3])
    }

    /// Coefficient of `u^{-idx[0]} v^{-idx[1]} w^{-idx[2]}`.
    pub fn coeff(&mut self, e: Ex, idx: Index) -> Result<Element> {
        let ctx = self.ctx();
        let low = self.low(e);
        if (0..3).any(|v| idx[v] < low[v]) {
            return Ok(Element::zero(ctx));
        }
        if let Some(x) = self.memo.get(&(e.0, idx)) {
            return Ok(x.clone());
        }
        let node = self.nodes[e.0].clone();
        let p = ctx.p;
        let out = match node {
            Node::Series(var, g) => {
                let k = var as usize;
                if (0..3).any(|v| v != k && idx[v] != 0) {
                    Element::zero(ctx)
                } else {
                    let r = idx[k] as usize;
                    g.try_coeff(r)?.clone()
                }
            }
            Node::Scalar(c) => {
                if idx == [0; 3] {
                    Element::scalar(ctx, c)
                } else {
                    Element::zero(ctx)
                }
            }
            Node::Sum(parts) => {
                let mut acc = Element::zero(ctx);
                for (x, c) in parts {
                    let v = self.coeff(x, idx)?;
                    acc = acc.add(&v.scale(c));
                }
                acc
            }
            Node::Mul(a, b) | Node::Bracket(a, b) => {
                let is_mul = matches!(self.nodes[e.0], Node::Mul(..));
                let (la, lb) = (self.low(a), self.low(b));
                let mut acc = Element::zero(ctx);
                for i0 in la[0]..=idx[0] - lb[0] {
                    for i1 in la[1]..=idx[1] - lb[1] {
                        for i2 in la[2]..=idx[2] - lb[2] {
                            let ia = [i0, i1, i2];
                            let ib = [idx[0] - i0, idx[1] - i1, idx[2] - i2];
                            let xa = self.coeff(a, ia)?;
                            if xa.is_zero() {
                                continue;
                            }
                            let xb = self.coeff(b, ib)?;
                            if xb.is_zero() {
                                continue;
                            }
                            let t = if is_mul { self.y.mul(&xa, &xb) } else { self.y.supercommutator(&xa, &xb) };
                            acc = acc.add(&t);
                        }
                    }
                }
                acc
            }
            Node::Linear(cs, k, inner) => {
                let mut acc = self.coeff(inner, idx)?.scale(k);
                for v in 0..3 {
                    if cs[v] != 0 {
                        let mut j = idx;
                        j[v] += 1;
                        acc = acc.add(&self.coeff(inner, j)?.scale(cs[v]));
                    }
                }
                acc
            }
            Node::DivDiff(a, b, g) => {
                let (ka, kb) = (a as usize, b as usize);
                let others = (0..3).any(|v| v != ka && v != kb && idx[v] != 0);
                if others || idx[ka] < 1 || idx[kb] < 1 {
                    Element::zero(ctx)
                } else {
                    g.try_coeff((idx[ka] + idx[kb] - 1) as usize)?.clone()
                }
            }
        };
        let _ = p;
        self.memo.insert((e.0, idx), out.clone());
        Ok(out)
    }

    /// Materialise the bivariate table `c_{r,s}`, `r + s <= N`, of an
    /// expression in `u` and `v`.
    pub fn materialize(&mut self, e: Ex) -> Result<UVSeries> {
        let n = self.ctx().trunc as i32;
        let mut table = FxHashMap::default();
        for r in 0..=n {
            for s in 0..=(n - r) {
                let c = self.coeff(e, [r, s, 0])?;
                if !c.is_zero() {
                    table.insert((r as usize, s as usize), c);
                }
            }
        }
        Ok(UVSeries { ctx: self.ctx(), table })
    }

    /// Drop memoised coefficients.
    pub fn clear_memo(&mut self) {
        self.memo.clear();
    }
}

/// Bivariate coefficients `c_{r,s}` for `r + s <= N`; absent entries are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UVSeries {
    ctx: AlgebraContext,
    table: FxHashMap<(usize, usize), Element>,
}

impl UVSeries {
    pub fn coeff(&self, r: usize, s: usize) -> Result<Element> {
        if r + s > self.ctx.trunc {
            return Err(Error::OutOfTruncation(r + s));
        }
        Ok(self.table.get(&(r, s)).cloned().unwrap_or_else(|| Element::zero(self.ctx)))
    }
}

/// All indices in the window `low <= idx`, positive parts summing to at most
/// `bound`, restricted to the listed variables.
pub fn window(low: Index, vars: &[Var], bound: i32) -> Vec<Index> {
    let mut out = Vec::new();
    let mut cur = [0i32; 3];
    fn rec(low: &Index, vars: &[Var], k: usize, bound: i32, used: i32, cur: &mut Index, out: &mut Vec<Index>) {
        if k == vars.len() {
            out.push(*cur);
            return;
        }
        let v = vars[k] as usize;
        for x in low[v].min(0)..=(bound - used) {
            cur[v] = x;
            rec(low, vars, k + 1, bound, used + x.max(0), cur, out);
        }
        cur[v] = 0;
    }
    rec(&low, vars, 0, bound, 0, &mut cur, &mut out);
    out
}

/// Scalar helper: `1/2` in F_p (p odd).
pub fn half(p: u32) -> Result<u32> {
    if p == 2 {
        Err(Error::RequiresOddPrime)
    } else {
        Ok(field::inv(2, p))
    }
}
