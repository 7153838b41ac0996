//! Algebra maps between super Yangians given by the images of the RTT
//! generators: μ_f, η_c, permutations, ρ, ω, φ_k, ψ_k and ζ.
//!
//! A map stores `t_{i,j}^{(r)} ↦ image` for `r <= N` and is extended
//! multiplicatively (or anti-multiplicatively) and linearly. Composite maps
//! are built by evaluating one map on the images of another.

use std::sync::Arc;

use crate::context::AlgebraContext;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::field;
use crate::gauss::gauss_decompose;
use crate::pbw::Gen;
use crate::series::USeries;
use crate::yangian::Yangian;

#[derive(Clone)]
pub struct AlgebraMap {
    pub name: String,
    source: Arc<Yangian>,
    target: Arc<Yangian>,
    /// `images[i-1][j-1][r-1]`.
    images: Vec<Vec<Vec<Element>>>,
    pub is_anti: bool,
    pub claimed_iso: bool,
}

impl std::fmt::Debug for AlgebraMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("AlgebraMap")
            .field("name", &self.name)
            .field("source", &self.source.ctx().label())
            .field("target", &self.target.ctx().label())
            .field("is_anti", &self.is_anti)
            .finish()
    }
}

impl AlgebraMap {
    /// Build a map from a rule giving the image of `t_{i,j}^{(r)}`, `r >= 1`.
    pub fn from_rule(
        name: impl Into<String>,
        source: &Arc<Yangian>,
        target: &Arc<Yangian>,
        mut rule: impl FnMut(usize, usize, u32) -> Result<Element>,
    ) -> Result<Self> {
        let sctx = source.ctx();
        if sctx.trunc > target.ctx().trunc {
            return Err(Error::ContextMismatch);
        }
        let k = sctx.size();
        let mut images = Vec::with_capacity(k);
        for i in 1..=k {
            let mut row = Vec::with_capacity(k);
            for j in 1..=k {
                let mut col = Vec::with_capacity(sctx.trunc);
                for r in 1..=sctx.trunc as u32 {
                    let x = rule(i, j, r)?;
                    if x.ctx() != target.ctx() {
                        return Err(Error::ContextMismatch);
                    }
                    col.push(x);
                }
                row.push(col);
            }
            images.push(row);
        }
        Ok(AlgebraMap {
            name: name.into(),
            source: source.clone(),
            target: target.clone(),
            images,
            is_anti: false,
            claimed_iso: true,
        })
    }

    pub fn source(&self) -> &Arc<Yangian> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Yangian> {
        &self.target
    }

    /// Image of `t_{i,j}^{(r)}`; `r = 0` gives `δ_{i,j}`.
    pub fn image(&self, i: usize, j: usize, r: u32) -> Result<Element> {
        let sctx = self.source.ctx();
        sctx.check_index(i)?;
        sctx.check_index(j)?;
        if r == 0 {
            return Ok(self.target.scalar(i64::from(i == j)));
        }
        self.images[i - 1][j - 1].get(r as usize - 1).cloned().ok_or(Error::OutOfTruncation(r as usize))
    }

    fn gen_image(&self, g: Gen) -> &Element {
        &self.images[g.i() - 1][g.j() - 1][g.r() as usize - 1]
    }

    /// Image of an arbitrary element.
    pub fn eval(&self, x: &Element) -> Result<Element> {
        if x.ctx() != self.source.ctx() {
            return Err(Error::ContextMismatch);
        }
        let y = &self.target;
        let p = y.p();
        let mut acc = y.zero();
        for (mono, c) in x.terms() {
            let mut letters: Vec<Gen> = mono.letters().collect();
            if let Some(g) = letters.iter().find(|g| g.r() as usize > self.source.ctx().trunc) {
                return Err(Error::OutOfTruncation(g.r() as usize));
            }
            let mut coef = *c;
            if self.is_anti {
                // φ(ab) = (-1)^{|a||b|} φ(b) φ(a), applied to every pair
                let par: Vec<u32> = letters.iter().map(|&g| self.source.gen_parity(g)).collect();
                let mut odd = 0u32;
                for a in 0..par.len() {
                    for b in a + 1..par.len() {
                        odd += par[a] * par[b];
                    }
                }
                coef = field::mul(coef, field::sign(odd, p), p);
                letters.reverse();
            }
            let mut term = y.scalar(1);
            for g in letters {
                term = y.mul(&term, self.gen_image(g));
                if term.is_zero() {
                    break;
                }
            }
            acc = acc.add(&term.scale(coef));
        }
        Ok(acc)
    }

    /// Apply the map coefficientwise to a series.
    pub fn eval_series(&self, g: &USeries) -> Result<USeries> {
        let coeffs = g.coeffs().iter().map(|x| self.eval(x)).collect::<Result<Vec<_>>>()?;
        Ok(USeries::new(self.target.ctx(), coeffs))
    }

    /// `second ∘ self`.
    pub fn then(&self, second: &AlgebraMap) -> Result<AlgebraMap> {
        if self.target.ctx() != second.source.ctx() {
            return Err(Error::ContextMismatch);
        }
        let mut out = AlgebraMap::from_rule(
            format!("{}∘{}", second.name, self.name),
            &self.source,
            &second.target,
            |i, j, r| second.eval(&self.images[i - 1][j - 1][r as usize - 1]),
        )?;
        out.is_anti = self.is_anti != second.is_anti;
        out.claimed_iso = self.claimed_iso && second.claimed_iso;
        Ok(out)
    }

    /// True when both maps agree on every generator.
    pub fn same_images(&self, other: &AlgebraMap) -> bool {
        self.source.ctx() == other.source.ctx() && self.target.ctx() == other.target.ctx() && self.images == other.images
    }

    /// First generator on which two maps differ, with the difference.
    pub fn first_difference(&self, other: &AlgebraMap) -> Option<((usize, usize, u32), Element)> {
        let k = self.source.ctx().size();
        for r in 1..=self.source.ctx().trunc as u32 {
            for i in 1..=k {
                for j in 1..=k {
                    let a = &self.images[i - 1][j - 1][r as usize - 1];
                    let b = &other.images[i - 1][j - 1][r as usize - 1];
                    if a != b {
                        return Some(((i, j, r), a.sub(b)));
                    }
                }
            }
        }
        None
    }
}

/// The identity map.
pub fn identity(y: &Arc<Yangian>) -> AlgebraMap {
    AlgebraMap::from_rule("id", y, y, |i, j, r| Ok(y.t(i, j, r))).expect("identity map")
}

/// `T(u) ↦ f(u) T(u)` for a unital series `f` with scalar coefficients.
pub fn mu_f(y: &Arc<Yangian>, f: &USeries) -> Result<AlgebraMap> {
    if f.ctx() != y.ctx() {
        return Err(Error::ContextMismatch);
    }
    if !f.is_unital() {
        return Err(Error::NotUnital);
    }
    if f.coeffs().iter().any(|c| !c.is_scalar() && !c.is_zero()) {
        return Err(Error::Constraint("μ_f needs scalar coefficients".into()));
    }
    let cs: Vec<u32> = f.coeffs().iter().map(|c| c.constant()).collect();
    AlgebraMap::from_rule("mu_f", y, y, |i, j, r| {
        let mut acc = y.zero();
        for s in 0..=r {
            acc = acc.add(&y.t(i, j, s).scale(cs[(r - s) as usize]));
        }
        Ok(acc)
    })
}

/// `T(u) ↦ T(u - c)`.
pub fn eta_c(y: &Arc<Yangian>, c: i64) -> AlgebraMap {
    let ctx = y.ctx();
    let p = ctx.p;
    let c = ctx.scalar(c);
    AlgebraMap::from_rule(format!("eta_{c}"), y, y, |i, j, r| {
        let mut acc = y.zero();
        for s in 1..=r {
            let b = field::binomial_mod_p(u64::from(r - 1), u64::from(r - s), p);
            let k = field::mul(b, field::pow(c, u64::from(r - s), p), p);
            acc = acc.add(&y.t(i, j, s).scale(k));
        }
        Ok(acc)
    })
    .expect("translation map")
}

fn check_perm(k: usize, w: &[usize]) -> Result<()> {
    let mut seen = vec![false; k + 1];
    if w.len() != k {
        return Err(Error::InvalidContext(format!("permutation of length {} on {k} indices", w.len())));
    }
    for &x in w {
        if x == 0 || x > k || seen[x] {
            return Err(Error::InvalidContext(format!("not a permutation: {w:?}")));
        }
        seen[x] = true;
    }
    Ok(())
}

/// `t_{i,j}^{(r)} ↦ t_{w(i),w(j)}^{(r)}`; `w[i-1] = w(i)`. For `p > 2` the
/// permutation must preserve the even and odd blocks.
pub fn permutation(y: &Arc<Yangian>, w: &[usize]) -> Result<AlgebraMap> {
    let ctx = y.ctx();
    check_perm(ctx.size(), w)?;
    if ctx.p != 2 && w.iter().enumerate().any(|(i, &x)| ctx.parity(i + 1) != ctx.parity(x)) {
        return Err(Error::WallCrossing);
    }
    permutation_unchecked(y, w)
}

/// [`permutation`] without the block condition, for negative checks.
pub fn permutation_unchecked(y: &Arc<Yangian>, w: &[usize]) -> Result<AlgebraMap> {
    check_perm(y.ctx().size(), w)?;
    let mut m = AlgebraMap::from_rule(format!("perm{w:?}"), y, y, |i, j, r| Ok(y.t(w[i - 1], w[j - 1], r)))?;
    m.claimed_iso = y.ctx().p == 2 || w.iter().enumerate().all(|(i, &x)| y.ctx().parity(i + 1) == y.ctx().parity(x));
    Ok(m)
}

/// The transposition `(a b)` as a list.
pub fn transposition(k: usize, a: usize, b: usize) -> Vec<usize> {
    (1..=k).map(|x| if x == a { b } else if x == b { a } else { x }).collect()
}

/// `ρ: Y_{m|n} → Y_{n|m}`, `t_{i,j}(u) ↦ t_{K+1-i,K+1-j}(-u)`.
pub fn rho(y: &Arc<Yangian>) -> Result<AlgebraMap> {
    let ctx = y.ctx();
    let target = Yangian::new(AlgebraContext::new(ctx.n, ctx.m, ctx.p, ctx.trunc)?);
    rho_into(y, &target)
}

fn rho_into(y: &Arc<Yangian>, target: &Arc<Yangian>) -> Result<AlgebraMap> {
    let (ctx, tctx) = (y.ctx(), target.ctx());
    if (tctx.m, tctx.n) != (ctx.n, ctx.m) {
        return Err(Error::ContextMismatch);
    }
    let k = ctx.size();
    let p = ctx.p;
    AlgebraMap::from_rule("rho", y, target, |i, j, r| Ok(target.t(k + 1 - i, k + 1 - j, r).scale(field::sign(r, p))))
}

/// `ω: T(u) ↦ T(-u)^{-1}`, i.e. `t_{i,j}^{(r)} ↦ (-1)^r t'^{(r)}_{i,j}`.
pub fn omega(y: &Arc<Yangian>) -> Result<AlgebraMap> {
    let gd = gauss_decompose(y);
    let p = y.p();
    AlgebraMap::from_rule("omega", y, y, |i, j, r| Ok(gd.t_prime(i, j).coeff(r as usize).scale(field::sign(r, p))))
}

/// `φ: Y_{m|n} → Y_{m+k|n}`, `t_{i,j}^{(r)} ↦ t_{k+i,k+j}^{(r)}`.
pub fn phi_k(y: &Arc<Yangian>, k: usize) -> Result<AlgebraMap> {
    let ctx = y.ctx();
    let target = Yangian::new(AlgebraContext::new(ctx.m + k, ctx.n, ctx.p, ctx.trunc)?);
    phi_into(y, &target, k)
}

fn phi_into(y: &Arc<Yangian>, target: &Arc<Yangian>, k: usize) -> Result<AlgebraMap> {
    let (ctx, tctx) = (y.ctx(), target.ctx());
    if (tctx.m, tctx.n) != (ctx.m + k, ctx.n) {
        return Err(Error::ContextMismatch);
    }
    AlgebraMap::from_rule(format!("phi_{k}"), y, target, |i, j, r| Ok(target.t(k + i, k + j, r)))
}

/// `ψ_k = ω_{m+k|n} ∘ φ ∘ ω_{m|n}`.
pub fn psi_k(y: &Arc<Yangian>, k: usize) -> Result<AlgebraMap> {
    let ctx = y.ctx();
    let target = Yangian::new(AlgebraContext::new(ctx.m + k, ctx.n, ctx.p, ctx.trunc)?);
    psi_into(y, &target, k)
}

/// [`psi_k`] into a given copy of `Y_{m+k|n}`.
pub fn psi_into(y: &Arc<Yangian>, target: &Arc<Yangian>, k: usize) -> Result<AlgebraMap> {
    let mut m = omega(y)?.then(&phi_into(y, target, k)?)?.then(&omega(target)?)?;
    m.name = format!("psi_{k}");
    Ok(m)
}

/// `ζ = ρ ∘ ω: Y_{m|n} → Y_{n|m}`.
pub fn zeta(y: &Arc<Yangian>) -> Result<AlgebraMap> {
    let ctx = y.ctx();
    let target = Yangian::new(AlgebraContext::new(ctx.n, ctx.m, ctx.p, ctx.trunc)?);
    zeta_into(y, &target)
}

/// [`zeta`] into a given copy of `Y_{n|m}`.
pub fn zeta_into(y: &Arc<Yangian>, target: &Arc<Yangian>) -> Result<AlgebraMap> {
    let mut m = omega(y)?.then(&rho_into(y, target)?)?;
    m.name = "zeta".into();
    Ok(m)
}

/// Look up a map by name on a source algebra: `id`, `mu`, `eta`, `rho`,
/// `omega`, `phi`, `psi`, `zeta`, or `perm:a,b,...`.
pub fn by_name(y: &Arc<Yangian>, name: &str) -> Result<AlgebraMap> {
    let ctx = y.ctx();
    match name {
        "id" => Ok(identity(y)),
        "mu" => mu_f(y, &sample_unital(ctx, 1)),
        "eta" => Ok(eta_c(y, 1)),
        "rho" => rho(y),
        "omega" => omega(y),
        "phi" => phi_k(y, 1),
        "psi" => psi_k(y, 1),
        "zeta" => zeta(y),
        _ => {
            if let Some(rest) = name.strip_prefix("perm:") {
                let w = rest
                    .split(',')
                    .map(|s| s.trim().parse::<usize>().map_err(|_| Error::Unknown(name.into())))
                    .collect::<Result<Vec<_>>>()?;
                permutation(y, &w)
            } else {
                Err(Error::Unknown(name.into()))
            }
        }
    }
}

/// Names accepted by [`by_name`] other than permutations.
pub const MAP_NAMES: &[&str] = &["id", "mu", "eta", "rho", "omega", "phi", "psi", "zeta"];

/// A fixed unital scalar series `1 + a u^{-1} + (a+1) u^{-2} + ...`.
pub fn sample_unital(ctx: AlgebraContext, a: i64) -> USeries {
    let cs: Vec<i64> = (0..=ctx.trunc as i64).map(|r| if r == 0 { 1 } else { a + r - 1 }).collect();
    USeries::scalars(ctx, &cs)
}
