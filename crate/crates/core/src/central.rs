//! Central series: the Berezinian `c(u)`, the diagonal families `b_i(u)`,
//! `bc(u)`, `a_i(u)`, the root powers `p_{ij}(u)`, `q_{ji}(u)` and the
//! `s_{ij}(u)`, with the generator sets of the centres built from them.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::context::AlgebraContext;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::field;
use crate::gauss::GaussData;
use crate::series::USeries;
use crate::yangian::Yangian;

/// Shift applied to the `i`-th factor of `c(u)` and `bc(u)`:
/// `i - 1` for `i <= m`, `2m - i` for `i > m`.
pub fn berezinian_shift(ctx: &AlgebraContext, i: usize) -> i64 {
    if i <= ctx.m {
        i as i64 - 1
    } else {
        2 * ctx.m as i64 - i as i64
    }
}

/// `c(u) = d_1(u) d_2(u-1) ... d_m(u-m+1) d_{m+1}(u-m+1)^{-1} ... d_{m+n}(u-m+n)^{-1}`.
pub fn berezinian(gd: &GaussData) -> USeries {
    let ctx = gd.ctx();
    let xs: Vec<USeries> = (1..=ctx.size())
        .map(|i| {
            let s = berezinian_shift(&ctx, i);
            if i <= ctx.m {
                gd.d(i).shift_i(s)
            } else {
                gd.d_inv(i).shift_i(s)
            }
        })
        .collect();
    gd.yangian().series_product(&xs)
}

fn permutations(k: usize) -> Vec<(Vec<usize>, bool)> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        let k = used.len();
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in 0..k {
            if !used[x] {
                used[x] = true;
                cur.push(x);
                rec(cur, used, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; k], &mut out);
    out.into_iter()
        .map(|w| {
            let inv = (0..k).flat_map(|a| (a + 1..k).map(move |b| (a, b))).filter(|&(a, b)| w[a] > w[b]).count();
            (w, inv % 2 == 1)
        })
        .collect()
}

/// The Berezinian as a signed double sum over `S_m x S_n` in the entries of
/// `T(u)` and `T(u)^{-1}`.
pub fn berezinian_rtt(gd: &GaussData) -> USeries {
    let ctx = gd.ctx();
    let y = gd.yangian();
    let (m, n) = (ctx.m, ctx.n);
    let mut even = USeries::zero(ctx);
    for (w, odd) in permutations(m) {
        let xs: Vec<USeries> = (0..m).map(|a| USeries::t(y, w[a] + 1, a + 1).shift_i(a as i64)).collect();
        let t = y.series_product(&xs);
        even = if odd { even.sub(&t) } else { even.add(&t) };
    }
    let mut oddpart = USeries::zero(ctx);
    for (w, odd) in permutations(n) {
        let xs: Vec<USeries> = (1..=n)
            .map(|k| gd.t_prime(m + k, m + w[k - 1] + 1).shift_i(m as i64 - k as i64))
            .collect();
        let t = y.series_product(&xs);
        oddpart = if odd { oddpart.sub(&t) } else { oddpart.add(&t) };
    }
    y.series_mul(&even, &oddpart)
}

/// `b_i(u)`: `d_i(u) d_i(u-1) ... d_i(u-p+1)` for `|i| = 0`, the same
/// product of inverses for `|i| = 1`.
pub fn b_series(gd: &GaussData, i: usize) -> Result<USeries> {
    let ctx = gd.ctx();
    ctx.check_index(i)?;
    let g = if ctx.parity(i) == 0 { gd.d(i) } else { gd.d_inv(i) };
    Ok(gd.yangian().shifted_product_down(g, ctx.p))
}

fn check_even_pair(ctx: &AlgebraContext, i: usize, j: usize) -> Result<()> {
    ctx.check_index(i)?;
    ctx.check_index(j)?;
    if (ctx.parity(i) + ctx.parity(j)) % 2 == 1 {
        return Err(Error::Parity(format!("pair ({i},{j}) is odd")));
    }
    Ok(())
}

/// `p_{ij}(u) = e_{ij}(u)^p`, `i < j` even pair.
pub fn p_series(gd: &GaussData, i: usize, j: usize) -> Result<USeries> {
    check_even_pair(&gd.ctx(), i, j)?;
    if i >= j {
        return Err(Error::IndexOutOfRange(format!("p_{{{i},{j}}} needs i < j")));
    }
    Ok(gd.yangian().series_pow_p(gd.e(i, j)))
}

/// `q_{ji}(u) = f_{ji}(u)^p`, `i < j` even pair.
pub fn q_series(gd: &GaussData, j: usize, i: usize) -> Result<USeries> {
    check_even_pair(&gd.ctx(), i, j)?;
    if i >= j {
        return Err(Error::IndexOutOfRange(format!("q_{{{j},{i}}} needs i < j")));
    }
    Ok(gd.yangian().series_pow_p(gd.f(j, i)))
}

/// `bc(u) = b_1(u) b_2(u-1) ... b_{m+n}(u-m+n)` with the Berezinian shifts.
pub fn bc_series(gd: &GaussData) -> Result<USeries> {
    let ctx = gd.ctx();
    let mut xs = Vec::new();
    for i in 1..=ctx.size() {
        xs.push(b_series(gd, i)?.shift_i(berezinian_shift(&ctx, i)));
    }
    Ok(gd.yangian().series_product(&xs))
}

/// `c(u) c(u-1) ... c(u-p+1)`.
pub fn bc_from_berezinian(gd: &GaussData) -> USeries {
    gd.yangian().shifted_product_down(&berezinian(gd), gd.ctx().p)
}

/// `a_i(u) = h_i(u) h_i(u-1) ... h_i(u-p+1)`.
pub fn a_series(gd: &GaussData, i: usize) -> Result<USeries> {
    if i == 0 || i >= gd.size() {
        return Err(Error::IndexOutOfRange(format!("a_{i}")));
    }
    Ok(gd.yangian().shifted_product_down(gd.h(i), gd.ctx().p))
}

/// `a_i(u)` written through the `b`'s:
/// `(-(-1)^{|i|})^p · b_{i+1}(u)^{ε_{i+1}} · b_i(u)^{-ε_i}` with
/// `ε_k = 1` for `|k| = 0` and `-1` for `|k| = 1`.
/// For `i < m` this is `-b_{i+1} b_i^{-1}`, for `i = m` it is
/// `-b_{m+1}^{-1} b_m^{-1}`, and for `i > m` it is `b_{i+1}^{-1} b_i`.
pub fn a_from_b(gd: &GaussData, i: usize) -> Result<USeries> {
    let ctx = gd.ctx();
    if i == 0 || i >= gd.size() {
        return Err(Error::IndexOutOfRange(format!("a_{i}")));
    }
    let y = gd.yangian();
    let pow_b = |k: usize, positive: bool| -> Result<USeries> {
        let b = b_series(gd, k)?;
        if positive {
            Ok(b)
        } else {
            y.series_inverse(&b)
        }
    };
    let hi = pow_b(i + 1, ctx.parity(i + 1) == 0)?;
    let lo = pow_b(i, ctx.parity(i) == 1)?;
    let s = field::pow(field::neg(ctx.sign(ctx.parity(i)), ctx.p), ctx.p as u64, ctx.p);
    Ok(y.series_mul(&hi, &lo).scale(s))
}

/// `s_{ij}(u)`: shifted `p`-fold product of `t_{ij}(u)` (`|i| = 0`) or
/// `t'_{ij}(u)` (`|i| = 1`); even pairs only.
pub fn s_series(gd: &GaussData, i: usize, j: usize) -> Result<USeries> {
    let ctx = gd.ctx();
    check_even_pair(&ctx, i, j)?;
    let y = gd.yangian();
    let g = if ctx.parity(i) == 0 { USeries::t(y, i, j) } else { gd.t_prime(i, j).clone() };
    Ok(y.shifted_product_down(&g, ctx.p))
}

/// Which graded-image formula a catalog entry satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum GradedFormula {
    /// `gr_{r-1} c^{(r)} = z_{r-1}`.
    Berezinian,
    /// `gr_{rp-p} b_i^{(rp)} = (e_{ii}x^{r-1})^p - e_{ii}x^{rp-p}`.
    Diagonal,
    /// `gr_{rp-p} bc^{(rp)} = z_{r-1}^p - z_{rp-p}`.
    DiagonalProduct,
    /// `gr` of `a_i^{(rp)}`: `(h x^{r-1})^p - h x^{rp-p}` with `h = e_{ii} - (-1)^{|i|+|i+1|} e_{i+1,i+1}`.
    Ratio,
    /// `gr_{rp-p} s_{ij}^{(rp)} = (e_{ij}x^{r-1})^p - δ_{ij} e_{ij}x^{rp-p}`.
    Entry,
    /// Leading term of a root power series.
    RootPower,
}

/// A named central series with its claims.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub series: USeries,
    pub claimed_central: bool,
    /// Coefficients `0 < r < vanishing_below` are claimed to vanish.
    pub vanishing_below: u32,
    pub graded: GradedFormula,
}

/// All central families of one context.
pub struct CentralCatalog {
    gd: Arc<GaussData>,
    entries: BTreeMap<String, CatalogEntry>,
}

impl CentralCatalog {
    pub fn build(gd: Arc<GaussData>) -> Result<Self> {
        let ctx = gd.ctx();
        let p = ctx.p;
        let k = ctx.size();
        let mut entries = BTreeMap::new();
        let mut put = |name: String, series: USeries, vanishing_below: u32, graded: GradedFormula| {
            entries.insert(name, CatalogEntry { series, claimed_central: true, vanishing_below, graded });
        };
        put("c".into(), berezinian(&gd), 0, GradedFormula::Berezinian);
        put("bc".into(), bc_series(&gd)?, p, GradedFormula::DiagonalProduct);
        for i in 1..=k {
            put(format!("b_{i}"), b_series(&gd, i)?, p, GradedFormula::Diagonal);
        }
        for i in 1..k {
            put(format!("a_{i}"), a_series(&gd, i)?, p, GradedFormula::Ratio);
        }
        for i in 1..=k {
            for j in 1..=k {
                if (ctx.parity(i) + ctx.parity(j)) % 2 == 1 {
                    continue;
                }
                put(format!("s_{{{i},{j}}}"), s_series(&gd, i, j)?, p, GradedFormula::Entry);
                if i < j {
                    put(format!("p_{{{i},{j}}}"), p_series(&gd, i, j)?, p, GradedFormula::RootPower);
                    put(format!("q_{{{j},{i}}}"), q_series(&gd, j, i)?, p, GradedFormula::RootPower);
                }
            }
        }
        Ok(CentralCatalog { gd, entries })
    }

    pub fn gauss(&self) -> &Arc<GaussData> {
        &self.gd
    }

    pub fn yangian(&self) -> &Arc<Yangian> {
        self.gd.yangian()
    }

    pub fn get(&self, name: &str) -> Result<&CatalogEntry> {
        self.entries.get(name).ok_or_else(|| Error::Unknown(name.to_string()))
    }

    pub fn series(&self, name: &str) -> Result<&USeries> {
        Ok(&self.get(name)?.series)
    }

    pub fn names(&self) -> Vec<String> {
        self.entries.keys().cloned().collect()
    }

    pub fn entries(&self) -> &BTreeMap<String, CatalogEntry> {
        &self.entries
    }

    /// `(e_{ij}^{(r)})^p`.
    pub fn e_power(&self, i: usize, j: usize, r: usize) -> Element {
        let y = self.yangian();
        y.pow(self.gd.e(i, j).coeff(r), y.p())
    }

    /// `(f_{ji}^{(r)})^p`.
    pub fn f_power(&self, j: usize, i: usize, r: usize) -> Element {
        let y = self.yangian();
        y.pow(self.gd.f(j, i).coeff(r), y.p())
    }

    /// Generator list of the requested central subalgebra, truncated to
    /// coefficient index `<= N`.
    pub fn enumerate_generators(&self, which: GeneratorSet) -> Vec<CentralGenerator> {
        let ctx = self.gd.ctx();
        let (p, nn, k) = (ctx.p as usize, ctx.trunc, ctx.size());
        let mut out = Vec::new();
        let coeff = |name: &str, r: usize| self.entries[name].series.coeff(r).clone();
        if matches!(which, GeneratorSet::Hc | GeneratorSet::FullCenter) {
            for r in 1..=nn {
                out.push(CentralGenerator { name: format!("c^({r})"), element: coeff("c", r), weight: r });
            }
        }
        let diag: Vec<usize> = match which {
            GeneratorSet::PCenterY => (1..=k).collect(),
            GeneratorSet::FullCenter => (2..=k).collect(),
            _ => Vec::new(),
        };
        for i in diag {
            for r in 1..=nn / p {
                out.push(CentralGenerator {
                    name: format!("b_{i}^({})", r * p),
                    element: coeff(&format!("b_{i}"), r * p),
                    weight: r * p,
                });
            }
        }
        if which == GeneratorSet::PCenterSY {
            for i in 1..k {
                for r in 1..=nn / p {
                    out.push(CentralGenerator {
                        name: format!("a_{i}^({})", r * p),
                        element: coeff(&format!("a_{i}"), r * p),
                        weight: r * p,
                    });
                }
            }
        }
        if which != GeneratorSet::Hc {
            for i in 1..=k {
                for j in i + 1..=k {
                    if (ctx.parity(i) + ctx.parity(j)) % 2 == 1 {
                        continue;
                    }
                    for r in 1..=nn / p {
                        out.push(CentralGenerator {
                            name: format!("(e_{{{i},{j}}}^({r}))^p"),
                            element: self.e_power(i, j, r),
                            weight: r * p,
                        });
                        out.push(CentralGenerator {
                            name: format!("(f_{{{j},{i}}}^({r}))^p"),
                            element: self.f_power(j, i, r),
                            weight: r * p,
                        });
                    }
                }
            }
        }
        out
    }
}

/// Named generator sets of central subalgebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorSet {
    /// `c^{(r)}`.
    Hc,
    /// `b_i^{(rp)}` and p-th powers of even root vectors.
    PCenterY,
    /// `a_i^{(rp)}` and p-th powers of even root vectors.
    PCenterSY,
    /// `c^{(r)}`, `b_i^{(rp)}` for `i >= 2`, and the p-th powers.
    FullCenter,
}

impl std::str::FromStr for GeneratorSet {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hc" => Ok(GeneratorSet::Hc),
            "p_center_Y" | "p-center-y" => Ok(GeneratorSet::PCenterY),
            "p_center_SY" | "p-center-sy" => Ok(GeneratorSet::PCenterSY),
            "full_center" | "full-center" => Ok(GeneratorSet::FullCenter),
            _ => Err(Error::Unknown(s.to_string())),
        }
    }
}

/// One generator of a central subalgebra. `weight` is its coefficient
/// index (`r` for `c^{(r)}`, `rp` for the p-central ones).
#[derive(Clone, Debug)]
pub struct CentralGenerator {
    pub name: String,
    pub element: Element,
    pub weight: usize,
}
