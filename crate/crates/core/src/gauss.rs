//! Gauss decomposition `T(u) = F(u) D(u) E(u)` by iterated Schur
//! complements, with the inverse matrix `T(u)^{-1}` and a quasideterminant
//! oracle.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::context::AlgebraContext;
use crate::error::{Error, Result};
use crate::expr::half;
use crate::field;
use crate::series::USeries;
use crate::yangian::Yangian;

/// Square matrix of series, 0-based storage.
pub type SeriesMatrix = Vec<Vec<USeries>>;

/// The matrix `T(u)`.
pub fn t_matrix(y: &Yangian) -> SeriesMatrix {
    let k = y.ctx().size();
    (1..=k).map(|i| (1..=k).map(|j| USeries::t(y, i, j)).collect()).collect()
}

/// All Gauss data of `T(u)`; indices are 1-based in the accessors.
#[derive(Clone)]
pub struct GaussData {
    y: Arc<Yangian>,
    d: Vec<USeries>,
    d_inv: Vec<USeries>,
    e: BTreeMap<(usize, usize), USeries>,
    f: BTreeMap<(usize, usize), USeries>,
    h: Vec<USeries>,
    t_prime: SeriesMatrix,
}

impl GaussData {
    pub fn yangian(&self) -> &Arc<Yangian> {
        &self.y
    }
    pub fn ctx(&self) -> AlgebraContext {
        self.y.ctx()
    }
    pub fn size(&self) -> usize {
        self.d.len()
    }
    /// `d_i(u)`.
    pub fn d(&self, i: usize) -> &USeries {
        &self.d[i - 1]
    }
    /// `d_i'(u) = d_i(u)^{-1}`.
    pub fn d_inv(&self, i: usize) -> &USeries {
        &self.d_inv[i - 1]
    }
    /// `e_{ij}(u)`, `i < j`.
    pub fn e(&self, i: usize, j: usize) -> &USeries {
        &self.e[&(i, j)]
    }
    /// `f_{ji}(u)`, `i < j`.
    pub fn f(&self, j: usize, i: usize) -> &USeries {
        &self.f[&(j, i)]
    }
    /// `e_i(u) = e_{i,i+1}(u)`.
    pub fn e_simple(&self, i: usize) -> &USeries {
        self.e(i, i + 1)
    }
    /// `f_i(u) = f_{i+1,i}(u)`.
    pub fn f_simple(&self, i: usize) -> &USeries {
        self.f(i + 1, i)
    }
    /// `h_i(u) = -(-1)^{|i|} d_{i+1}(u) d_i(u)^{-1}`.
    pub fn h(&self, i: usize) -> &USeries {
        &self.h[i - 1]
    }
    /// Entry `t'_{ij}(u)` of `T(u)^{-1}`.
    pub fn t_prime(&self, i: usize, j: usize) -> &USeries {
        &self.t_prime[i - 1][j - 1]
    }
    pub fn t_prime_matrix(&self) -> &SeriesMatrix {
        &self.t_prime
    }

    /// Named series table: `d_i`, `d'_i`, `e_{i,j}`, `f_{j,i}`, `h_i`, `t'_{i,j}`.
    pub fn named(&self) -> Vec<(String, USeries)> {
        let k = self.size();
        let mut out = Vec::new();
        for i in 1..=k {
            out.push((format!("d_{i}"), self.d(i).clone()));
            out.push((format!("d'_{i}"), self.d_inv(i).clone()));
        }
        for ((i, j), s) in &self.e {
            out.push((format!("e_{{{i},{j}}}"), s.clone()));
        }
        for ((j, i), s) in &self.f {
            out.push((format!("f_{{{j},{i}}}"), s.clone()));
        }
        for i in 1..k {
            out.push((format!("h_{i}"), self.h(i).clone()));
        }
        for i in 1..=k {
            for j in 1..=k {
                out.push((format!("t'_{{{i},{j}}}"), self.t_prime(i, j).clone()));
            }
        }
        out
    }
}

/// Gauss decomposition of `T(u)` to order `N`.
pub fn gauss_decompose(y: &Arc<Yangian>) -> GaussData {
    let ctx = y.ctx();
    let k = ctx.size();
    let mut m = t_matrix(y);
    let mut d = Vec::with_capacity(k);
    let mut d_inv = Vec::with_capacity(k);
    let mut e = BTreeMap::new();
    let mut f = BTreeMap::new();
    for a in 0..k {
        let piv = m[a][a].clone();
        let inv = y.series_inverse(&piv).expect("Gauss pivots are unital");
        for b in a + 1..k {
            e.insert((a + 1, b + 1), y.series_mul(&inv, &m[a][b]));
            f.insert((b + 1, a + 1), y.series_mul(&m[b][a], &inv));
        }
        for b in a + 1..k {
            let fb = f[&(b + 1, a + 1)].clone();
            for c in a + 1..k {
                let upd = y.series_mul(&fb, &m[a][c]);
                m[b][c] = m[b][c].sub(&upd);
            }
        }
        d.push(piv);
        d_inv.push(inv);
    }
    let mut h = Vec::new();
    for i in 1..k {
        let s = field::neg(ctx.sign(ctx.parity(i)), ctx.p);
        h.push(y.series_mul(&d[i], &d_inv[i - 1]).scale(s));
    }
    let t_prime = inverse_from_factors(y, &d_inv, &e, &f);
    GaussData { y: y.clone(), d, d_inv, e, f, h, t_prime }
}

// T^{-1} = E^{-1} D^{-1} F^{-1}
fn inverse_from_factors(
    y: &Yangian,
    d_inv: &[USeries],
    e: &BTreeMap<(usize, usize), USeries>,
    f: &BTreeMap<(usize, usize), USeries>,
) -> SeriesMatrix {
    let ctx = y.ctx();
    let k = d_inv.len();
    let zero = USeries::zero(ctx);
    let one = USeries::one(ctx);
    let mut x = vec![vec![zero.clone(); k]; k];
    let mut z = vec![vec![zero.clone(); k]; k];
    for i in 0..k {
        x[i][i] = one.clone();
        z[i][i] = one.clone();
    }
    for gap in 1..k {
        for i in 0..k - gap {
            let j = i + gap;
            let mut acc = zero.clone();
            for c in i + 1..=j {
                acc = acc.add(&y.series_mul(&e[&(i + 1, c + 1)], &x[c][j]));
            }
            x[i][j] = acc.neg();
            let mut acc = zero.clone();
            for c in i..j {
                acc = acc.add(&y.series_mul(&f[&(j + 1, c + 1)], &z[c][i]));
            }
            z[j][i] = acc.neg();
        }
    }
    let mut out = vec![vec![zero.clone(); k]; k];
    for i in 0..k {
        for j in 0..k {
            let mut acc = zero.clone();
            for c in i.max(j)..k {
                let t = y.series_mul(&x[i][c], &d_inv[c]);
                acc = acc.add(&y.series_mul(&t, &z[c][j]));
            }
            out[i][j] = acc;
        }
    }
    out
}

/// `T(u)^{-1}` entries.
pub fn t_prime(y: &Arc<Yangian>) -> SeriesMatrix {
    gauss_decompose(y).t_prime
}

pub fn matrix_mul(y: &Yangian, a: &SeriesMatrix, b: &SeriesMatrix) -> SeriesMatrix {
    let ctx = y.ctx();
    let (r, k, c) = (a.len(), b.len(), b.first().map_or(0, |x| x.len()));
    let mut out = vec![vec![USeries::zero(ctx); c]; r];
    for i in 0..r {
        for j in 0..c {
            let mut acc = USeries::zero(ctx);
            for t in 0..k {
                acc = acc.add(&y.series_mul(&a[i][t], &b[t][j]));
            }
            out[i][j] = acc;
        }
    }
    out
}

/// Inverse of a series matrix whose constant-term matrix is invertible,
/// by Gauss-Jordan elimination with row operations only.
pub fn matrix_inverse(y: &Yangian, a: &SeriesMatrix) -> Result<SeriesMatrix> {
    let ctx = y.ctx();
    let p = ctx.p;
    let k = a.len();
    let mut l = a.clone();
    let mut r: SeriesMatrix = (0..k)
        .map(|i| (0..k).map(|j| if i == j { USeries::one(ctx) } else { USeries::zero(ctx) }).collect())
        .collect();
    for c in 0..k {
        let piv = (c..k)
            .find(|&i| {
                let c0 = l[i][c].coeff(0);
                c0.is_scalar() && !c0.is_zero()
            })
            .ok_or(Error::NotInvertible)?;
        l.swap(c, piv);
        r.swap(c, piv);
        let inv = y.series_inverse_scalar_lead(&l[c][c])?;
        l[c] = l[c].iter().map(|s| y.series_mul(&inv, s)).collect();
        r[c] = r[c].iter().map(|s| y.series_mul(&inv, s)).collect();
        for i in 0..k {
            if i == c {
                continue;
            }
            let fac = l[i][c].clone();
            if fac.coeffs().iter().all(|x| x.is_zero()) {
                continue;
            }
            for j in 0..k {
                let tl = y.series_mul(&fac, &l[c][j]);
                l[i][j] = l[i][j].sub(&tl);
                let tr = y.series_mul(&fac, &r[c][j]);
                r[i][j] = r[i][j].sub(&tr);
            }
        }
    }
    let _ = p;
    Ok(r)
}

/// `|M|_{ij} = m_{ij} - r_i^{j} (M^{ij})^{-1} c_j^{i}` (1-based `i`, `j`).
pub fn quasideterminant(y: &Yangian, m: &SeriesMatrix, i: usize, j: usize) -> Result<USeries> {
    let k = m.len();
    if i == 0 || j == 0 || i > k || j > k {
        return Err(Error::IndexOutOfRange(format!("({i},{j}) in a {k}x{k} matrix")));
    }
    let (i, j) = (i - 1, j - 1);
    if k == 1 {
        return Ok(m[0][0].clone());
    }
    let rows: Vec<usize> = (0..k).filter(|&x| x != i).collect();
    let cols: Vec<usize> = (0..k).filter(|&x| x != j).collect();
    let sub: SeriesMatrix = rows.iter().map(|&a| cols.iter().map(|&b| m[a][b].clone()).collect()).collect();
    let inv = matrix_inverse(y, &sub)?;
    let row: SeriesMatrix = vec![cols.iter().map(|&b| m[i][b].clone()).collect()];
    let col: SeriesMatrix = rows.iter().map(|&a| vec![m[a][j].clone()]).collect();
    let t = matrix_mul(y, &matrix_mul(y, &row, &inv), &col);
    Ok(m[i][j].sub(&t[0][0]))
}

/// Leading `k x k` block of a matrix.
pub fn leading_minor(m: &SeriesMatrix, k: usize) -> SeriesMatrix {
    m[..k].iter().map(|row| row[..k].to_vec()).collect()
}

/// `e_{ij}` and `f_{ji}` rebuilt from simple roots:
/// `e_{ij}^{(r)} = (-1)^{|j-1|} [e_{i,j-1}^{(r)}, e_{j-1}^{(1)}]`,
/// `f_{ji}^{(r)} = (-1)^{|j-1|} [f_{j-1}^{(1)}, f_{j-1,i}^{(r)}]`.
pub fn composite_root_series(gd: &GaussData, i: usize, j: usize) -> Result<(USeries, USeries)> {
    if i == 0 || j > gd.size() || j <= i + 1 {
        return Err(Error::IndexOutOfRange(format!("composite root ({i},{j}) needs j > i+1")));
    }
    let y = gd.yangian();
    let ctx = gd.ctx();
    let mut e = gd.e_simple(i).clone();
    let mut f = gd.f_simple(i).clone();
    for c in i + 2..=j {
        let s = ctx.sign(ctx.parity(c - 1));
        let e1 = gd.e_simple(c - 1).coeff(1).clone();
        let f1 = gd.f_simple(c - 1).coeff(1).clone();
        e = e.map(|x| y.supercommutator(x, &e1).scale(s));
        f = f.map(|x| y.supercommutator(&f1, x).scale(s));
    }
    Ok((e, f))
}

/// The shift `(-1)^{|i|} (i - m) / 2` used for `κ_i`, `ξ_i^±`.
pub fn kappa_shift(ctx: &AlgebraContext, i: usize) -> Result<u32> {
    let h = half(ctx.p)?;
    let num = ctx.scalar((i as i64 - ctx.m as i64) * if ctx.parity(i) == 1 { -1 } else { 1 });
    Ok(field::mul(num, h, ctx.p))
}

/// `(κ_i(u), ξ_i^+(u), ξ_i^-(u))`; `κ_{i,s}` is the coefficient of `u^{-s-1}`.
pub fn kappa_xi(gd: &GaussData, i: usize) -> Result<(USeries, USeries, USeries)> {
    let ctx = gd.ctx();
    if i == 0 || i >= gd.size() {
        return Err(Error::IndexOutOfRange(format!("kappa index {i}")));
    }
    let c = kappa_shift(&ctx, i)?;
    let y = gd.yangian();
    let kappa = gd.h(i).shift(c).add(&USeries::constant(y.scalar(if ctx.parity(i) == 1 { -1 } else { 1 })));
    Ok((kappa, gd.e_simple(i).shift(c), gd.f_simple(i).shift(c)))
}

/// `a_{ij} = (-1)^{|i|}(δ_{ij} - δ_{i,j+1}) - (-1)^{|i+1|}(δ_{i+1,j} - δ_{i+1,j+1})`.
pub fn cartan(ctx: &AlgebraContext, i: usize, j: usize) -> i64 {
    let d = |a: usize, b: usize| i64::from(a == b);
    let s = |k: usize| if ctx.parity(k) == 1 { -1 } else { 1 };
    s(i) * (d(i, j) - d(i, j + 1)) - s(i + 1) * (d(i + 1, j) - d(i + 1, j + 1))
}
