//! Linear combinations of PBW monomials, shared by the Yangian and the
//! current algebra.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::context::AlgebraContext;
use crate::error::{Error, Result};
use crate::field;
use crate::pbw::{lin_comb, Factor, Gen, Monomial, Terms};

/// One monomial in canonical form: `(i, j, r, exp)` per factor.
pub type CanonicalMonomial = Vec<[u32; 4]>;

/// Canonical serialisation: sorted `(monomial, coefficient)` pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Canonical(pub Vec<(CanonicalMonomial, u32)>);

macro_rules! linear_type {
    ($name:ident, $doc:literal) => {
        #[doc = $doc]
        #[derive(Clone, Debug, PartialEq, Eq, Hash)]
        pub struct $name {
            ctx: AlgebraContext,
            terms: Terms,
        }

        impl $name {
            pub fn from_terms(ctx: AlgebraContext, terms: Terms) -> Self {
                $name { ctx, terms }
            }
            pub fn zero(ctx: AlgebraContext) -> Self {
                $name { ctx, terms: Vec::new() }
            }
            pub fn scalar(ctx: AlgebraContext, c: u32) -> Self {
                let c = c % ctx.p;
                let terms = if c == 0 { Vec::new() } else { vec![(Monomial::one(), c)] };
                $name { ctx, terms }
            }
            pub fn one(ctx: AlgebraContext) -> Self {
                Self::scalar(ctx, 1)
            }
            pub fn ctx(&self) -> AlgebraContext {
                self.ctx
            }
            pub fn terms(&self) -> &Terms {
                &self.terms
            }
            pub fn into_terms(self) -> Terms {
                self.terms
            }
            pub fn is_zero(&self) -> bool {
                self.terms.is_empty()
            }
            pub fn len(&self) -> usize {
                self.terms.len()
            }
            pub fn is_empty(&self) -> bool {
                self.terms.is_empty()
            }
            /// The constant term.
            pub fn constant(&self) -> u32 {
                match self.terms.first() {
                    Some((m, c)) if m.is_one() => *c,
                    _ => 0,
                }
            }
            /// Whether this is a scalar multiple of 1.
            pub fn is_scalar(&self) -> bool {
                self.terms.iter().all(|(m, _)| m.is_one())
            }
            pub fn coefficient(&self, m: &Monomial) -> u32 {
                match self.terms.binary_search_by(|(x, _)| x.cmp(m)) {
                    Ok(k) => self.terms[k].1,
                    Err(_) => 0,
                }
            }
            fn same(&self, other: &Self) {
                assert_eq!(self.ctx, other.ctx, "context mismatch");
            }
            pub fn add(&self, other: &Self) -> Self {
                self.same(other);
                $name { ctx: self.ctx, terms: lin_comb(&self.terms, 1, &other.terms, 1, self.ctx.p) }
            }
            pub fn sub(&self, other: &Self) -> Self {
                self.same(other);
                let p = self.ctx.p;
                $name { ctx: self.ctx, terms: lin_comb(&self.terms, 1, &other.terms, p - 1, p) }
            }
            pub fn try_add(&self, other: &Self) -> Result<Self> {
                if self.ctx != other.ctx {
                    return Err(Error::ContextMismatch);
                }
                Ok(self.add(other))
            }
            pub fn scale(&self, c: u32) -> Self {
                let p = self.ctx.p;
                let c = c % p;
                if c == 0 {
                    return Self::zero(self.ctx);
                }
                let terms = self.terms.iter().map(|(m, x)| (m.clone(), field::mul(*x, c, p))).collect();
                $name { ctx: self.ctx, terms }
            }
            pub fn scale_i(&self, c: i64) -> Self {
                self.scale(self.ctx.scalar(c))
            }
            pub fn neg(&self) -> Self {
                self.scale(self.ctx.p - 1)
            }
            /// `self + c` for a scalar `c`.
            pub fn add_scalar(&self, c: u32) -> Self {
                self.add(&Self::scalar(self.ctx, c))
            }
            pub fn to_canonical(&self) -> Canonical {
                Canonical(
                    self.terms
                        .iter()
                        .map(|(m, c)| {
                            let mono = m
                                .factors()
                                .iter()
                                .map(|f| [f.gen.i() as u32, f.gen.j() as u32, f.gen.r(), f.exp])
                                .collect();
                            (mono, *c)
                        })
                        .collect(),
                )
            }
            /// Rebuild from the canonical form, validating normal form.
            pub fn from_canonical(ctx: AlgebraContext, c: &Canonical) -> Result<Self> {
                let mut terms: Terms = Vec::with_capacity(c.0.len());
                for (mono, coeff) in &c.0 {
                    if *coeff == 0 || *coeff >= ctx.p {
                        return Err(Error::Unknown(format!("bad coefficient {coeff}")));
                    }
                    let mut m = Monomial::one();
                    for f in mono {
                        let [i, j, r, e] = *f;
                        ctx.check_index(i as usize)?;
                        ctx.check_index(j as usize)?;
                        if e == 0 || r > Gen::MAX_SUPERSCRIPT {
                            return Err(Error::Unknown("bad factor".into()));
                        }
                        let g = Gen::new(i as usize, j as usize, r);
                        if let Some(l) = m.last_gen() {
                            if l >= g {
                                return Err(Error::Unknown("factors not increasing".into()));
                            }
                        }
                        let odd = (ctx.parity(i as usize) + ctx.parity(j as usize)) % 2 == 1;
                        if odd && ctx.odd_cap() && e > 1 {
                            return Err(Error::Unknown("odd exponent above 1".into()));
                        }
                        m.0.push(Factor { gen: g, exp: e });
                    }
                    if let Some((last, _)) = terms.last() {
                        if *last >= m {
                            return Err(Error::Unknown("monomials not sorted".into()));
                        }
                    }
                    terms.push((m, *coeff));
                }
                Ok($name { ctx, terms })
            }
        }
    };
}

linear_type!(Element, "An element of the super Yangian in PBW normal form.");
linear_type!(CurrentElement, "An element of U(gl_{m|n}[x]) in PBW normal form.");

fn write_terms(
    f: &mut fmt::Formatter<'_>,
    terms: &Terms,
    letter: impl Fn(&mut fmt::Formatter<'_>, Gen) -> fmt::Result,
) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (k, (m, c)) in terms.iter().enumerate() {
        if k > 0 {
            write!(f, " + ")?;
        }
        if m.is_one() {
            write!(f, "{c}")?;
            continue;
        }
        if *c != 1 {
            write!(f, "{c}*")?;
        }
        for (n, x) in m.factors().iter().enumerate() {
            if n > 0 {
                write!(f, "*")?;
            }
            if x.exp > 1 {
                write!(f, "(")?;
                letter(f, x.gen)?;
                write!(f, ")^{}", x.exp)?;
            } else {
                letter(f, x.gen)?;
            }
        }
    }
    Ok(())
}

/// `2*t_{1,2}^(1)*(t_{2,2}^(3))^2 + 1`.
impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.terms, |f, g| write!(f, "t_{{{},{}}}^({})", g.i(), g.j(), g.r()))
    }
}

/// `(e_{1,1}x^2)^3 + e_{1,2}x^0`.
impl fmt::Display for CurrentElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.terms, |f, g| write!(f, "e_{{{},{}}}x^{}", g.i(), g.j(), g.r()))
    }
}
