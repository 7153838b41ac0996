//! Worked examples for the algebra, series, Gauss, central and current layers.

use std::sync::Arc;

use superyangian::central::{
    a_from_b, a_series, b_series, bc_from_berezinian, bc_series, berezinian, berezinian_rtt, p_series, s_series,
    CentralCatalog, GeneratorSet,
};
use superyangian::current::{CurrentAlgebra, CurrentGen};
use superyangian::gauss::{
    cartan, composite_root_series, gauss_decompose, kappa_xi, leading_minor, matrix_mul, quasideterminant, t_matrix,
};
use superyangian::invariants::invariant_dimension;
use superyangian::series::{binomial_mod_p, USeries};
use superyangian::{loop_degree, AlgebraContext, Element, Error, Yangian};

fn ctx(m: usize, n: usize, p: u32, trunc: usize) -> AlgebraContext {
    AlgebraContext::new(m, n, p, trunc).unwrap()
}

fn y11() -> Arc<Yangian> {
    Yangian::new(ctx(1, 1, 3, 4))
}

#[test]
fn generator_constructor() {
    let y = y11();
    let t = y.generator(1, 2, 1).unwrap();
    assert_eq!(y.parity(&t), Some(1));
    let y21 = Yangian::new(ctx(2, 1, 3, 4));
    assert_eq!(loop_degree(&y21.generator(2, 2, 3).unwrap()), Some(2));
    assert!(matches!(y.generator(3, 1, 1), Err(Error::IndexOutOfRange(_))));
}

#[test]
fn context_rejects_composite_p() {
    assert!(AlgebraContext::new(1, 1, 4, 4).is_err());
}

#[test]
fn straightening_one_step() {
    let y = y11();
    let (t11, t12) = (y.t(1, 1, 1), y.t(1, 2, 1));
    let expected = y.mul(&t11, &t12).sub(&t12);
    assert_eq!(y.mul(&t12, &t11), expected);
    assert_eq!(y.mul(&y.one(), &t12), t12);
    assert!(y.mul(&t12, &t12).is_zero());
}

#[test]
fn supercommutator_examples() {
    let y = y11();
    assert_eq!(y.supercommutator(&y.t(1, 1, 1), &y.t(1, 2, 1)), y.t(1, 2, 1));
    assert!(y.supercommutator(&y.t(1, 1, 1), &y.t(1, 1, 2)).is_zero());
    assert!(y.supercommutator(&y.t(1, 2, 1), &y.t(1, 2, 1)).is_zero());
}

#[test]
fn same_entry_generators_commute() {
    let y = Yangian::new(ctx(2, 1, 3, 4));
    let c = y.ctx();
    for i in 1..=3 {
        for j in (1..=3).filter(|&j| c.parity(i) == c.parity(j)) {
            for r in 1..=3 {
                for s in 1..=3 {
                    assert!(y.supercommutator(&y.t(i, j, r), &y.t(i, j, s)).is_zero(), "t_{i}{j} ({r},{s})");
                }
            }
        }
    }
    // odd entries do not: [t_{13}^(2), t_{13}^(2)] = 2 t_{13}^(1) t_{13}^(2)
    let x = y.t(1, 3, 2);
    let sq = y.supercommutator(&x, &x);
    let w = y.mul(&y.t(1, 3, 1), &x);
    assert_eq!(sq, w.scale(2));
}

#[test]
fn loop_degree_examples() {
    let y = y11();
    assert_eq!(loop_degree(&y.t(1, 2, 3)), Some(2));
    assert_eq!(loop_degree(&y.mul(&y.t(1, 1, 1), &y.t(1, 2, 1))), Some(0));
    assert_eq!(loop_degree(&y.zero()), None);
}

#[test]
fn top_graded_examples() {
    let y = y11();
    let g = CurrentAlgebra::new(y.ctx());
    assert_eq!(y.top_graded(&y.t(1, 1, 2), 1).unwrap(), g.e(1, 1, 1));
    // t_{11} t_{12} - t_{12} is t_{12} t_{11}; every term has loop degree 0
    let a = y.mul(&y.t(1, 1, 1), &y.t(1, 2, 1)).sub(&y.t(1, 2, 1));
    assert_eq!(y.top_graded(&a, 0).unwrap(), g.mul(&g.e(1, 2, 0), &g.e(1, 1, 0)));
    assert_eq!(y.top_graded(&y.mul(&y.t(1, 1, 1), &y.t(1, 2, 1)), 0).unwrap(), g.mul(&g.e(1, 1, 0), &g.e(1, 2, 0)));
    assert!(matches!(y.top_graded(&y.t(1, 1, 3), 1), Err(Error::DegreeOverflow { .. })));

    let gd = gauss_decompose(&y);
    let c = berezinian(&gd);
    assert_eq!(y.top_graded(c.coeff(2), 1).unwrap(), g.z(1));
}

#[test]
fn element_display_and_canonical() {
    let y = y11();
    let x = y.mul(&y.t(1, 1, 1), &y.t(1, 2, 1)).add(&y.scalar(2));
    let back = Element::from_canonical(y.ctx(), &x.to_canonical()).unwrap();
    assert_eq!(back, x);
    assert!(x.to_string().contains("t_{1,1}^(1)*t_{1,2}^(1)"));
}

#[test]
fn series_product_and_inverse() {
    let y = y11();
    let c = y.ctx();
    let a = USeries::new(c, vec![y.one(), y.t(1, 1, 1)]);
    let b = USeries::new(c, vec![y.one(), y.t(1, 2, 1)]);
    let ab = y.series_mul(&a, &b);
    assert_eq!(ab.coeff(1), &y.t(1, 1, 1).add(&y.t(1, 2, 1)));
    assert_eq!(ab.coeff(2), &y.mul(&y.t(1, 1, 1), &y.t(1, 2, 1)));
    assert!(ab.coeff(3).is_zero());

    let one = USeries::one(c);
    assert_eq!(y.series_mul(&one, &a), a);
    assert_eq!(y.series_inverse(&one).unwrap(), one);

    let t11 = USeries::t(&y, 1, 1);
    let inv = y.series_inverse(&t11).unwrap();
    assert_eq!(inv.coeff(1), &y.t(1, 1, 1).neg());
    assert_eq!(inv.coeff(2), &y.pow(&y.t(1, 1, 1), 2).sub(&y.t(1, 1, 2)));
    assert_eq!(y.series_mul(&t11, &inv), one);

    assert_eq!(y.series_inverse(&USeries::u_inv(c)), Err(Error::NotUnital));
}

#[test]
fn inverse_two_sided_in_y21() {
    let y = Yangian::new(ctx(2, 1, 3, 4));
    let g = USeries::t(&y, 2, 2);
    let inv = y.series_inverse(&g).unwrap();
    let one = USeries::one(y.ctx());
    assert_eq!(y.series_mul(&g, &inv), one);
    assert_eq!(y.series_mul(&inv, &g), one);
}

#[test]
fn shift_examples() {
    let y = y11();
    let c = y.ctx();
    let g = USeries::t(&y, 1, 2);
    assert_eq!(g.shift(0), g);
    let shifted = USeries::u_inv(c).shift(1);
    for r in 1..=c.trunc {
        assert_eq!(shifted.coeff(r), &y.one(), "order {r}");
    }
    assert!(shifted.coeff(0).is_zero());
}

#[test]
fn binomial_examples() {
    assert_eq!(binomial_mod_p(4, 2, 3), 0);
    assert_eq!(binomial_mod_p(6, 3, 3), 2);
    for p in [2, 3, 5, 7] {
        for k in 1..p {
            assert_eq!(binomial_mod_p(p as u64, k as u64, p), 0);
        }
    }
}

#[test]
fn pow_p_examples() {
    let y = Yangian::new(ctx(2, 1, 3, 5));
    let gd = gauss_decompose(&y);
    let one = USeries::one(y.ctx());
    assert_eq!(y.series_pow_p(&one), one);
    let e = gd.e(1, 2);
    let pw = y.series_pow_p(e);
    for r in 0..3 {
        assert!(pw.coeff(r).is_zero(), "order {r}");
    }
    assert_eq!(pw.coeff(3), &y.pow(e.coeff(1), 3));
}

#[test]
fn gauss_first_coefficients() {
    let y = Yangian::new(ctx(2, 1, 3, 4));
    let gd = gauss_decompose(&y);
    assert_eq!(gd.d(1), &USeries::t(&y, 1, 1));
    assert_eq!(gd.e_simple(1).coeff(1), &y.t(1, 2, 1));
    assert_eq!(gd.f_simple(1).coeff(1), &y.t(2, 1, 1));
    assert_eq!(gd.d(2).coeff(2), &y.t(2, 2, 2).sub(&y.mul(&y.t(2, 1, 1), &y.t(1, 2, 1))));
    for i in 1..=3 {
        assert_eq!(&y.series_inverse(gd.d(i)).unwrap(), gd.d_inv(i));
    }
}

#[test]
fn gauss_reassembles_t() {
    let y = Yangian::new(ctx(2, 1, 3, 4));
    let gd = gauss_decompose(&y);
    let k = 3;
    let c = y.ctx();
    let mut f = vec![vec![USeries::zero(c); k]; k];
    let mut d = vec![vec![USeries::zero(c); k]; k];
    let mut e = vec![vec![USeries::zero(c); k]; k];
    for i in 0..k {
        f[i][i] = USeries::one(c);
        e[i][i] = USeries::one(c);
        d[i][i] = gd.d(i + 1).clone();
        for j in i + 1..k {
            e[i][j] = gd.e(i + 1, j + 1).clone();
            f[j][i] = gd.f(j + 1, i + 1).clone();
        }
    }
    assert_eq!(matrix_mul(&y, &matrix_mul(&y, &f, &d), &e), t_matrix(&y));
}

#[test]
fn t_prime_examples() {
    let y = y11();
    let gd = gauss_decompose(&y);
    for i in 1..=2 {
        for j in 1..=2 {
            let tp = gd.t_prime(i, j);
            assert_eq!(tp.coeff(0), &if i == j { y.one() } else { y.zero() });
            assert_eq!(tp.coeff(1), &y.t(i, j, 1).neg());
        }
    }
    let id = matrix_mul(&y, &t_matrix(&y), gd.t_prime_matrix());
    for (i, row) in id.iter().enumerate() {
        for (j, s) in row.iter().enumerate() {
            let want = if i == j { USeries::one(y.ctx()) } else { USeries::zero(y.ctx()) };
            assert_eq!(s, &want);
        }
    }
}

#[test]
fn quasideterminants_match_pivots() {
    let y = Yangian::new(ctx(2, 1, 3, 3));
    let gd = gauss_decompose(&y);
    let t = t_matrix(&y);
    let one = leading_minor(&t, 1);
    assert_eq!(quasideterminant(&y, &one, 1, 1).unwrap(), t[0][0]);
    let two = leading_minor(&t, 2);
    let t11_inv = y.series_inverse(&t[0][0]).unwrap();
    let expected = t[1][1].sub(&y.series_product(&[t[1][0].clone(), t11_inv, t[0][1].clone()]));
    assert_eq!(quasideterminant(&y, &two, 2, 2).unwrap(), expected);
    for k in 1..=3 {
        assert_eq!(&quasideterminant(&y, &leading_minor(&t, k), k, k).unwrap(), gd.d(k), "k = {k}");
    }
}

#[test]
fn composite_roots() {
    let y = Yangian::new(ctx(2, 1, 3, 3));
    let gd = gauss_decompose(&y);
    let (e13, f31) = composite_root_series(&gd, 1, 3).unwrap();
    assert_eq!(e13.coeff(1), &y.supercommutator(&y.t(1, 2, 1), &y.t(2, 3, 1)));
    assert_eq!(&e13, gd.e(1, 3));
    assert_eq!(&f31, gd.f(3, 1));
    assert_eq!(y.parity(f31.coeff(1)), Some(1));
    assert!(composite_root_series(&gd, 1, 2).is_err());
}

#[test]
fn kappa_and_cartan() {
    let y = y11();
    let gd = gauss_decompose(&y);
    let (kappa, xi_plus, _) = kappa_xi(&gd, 1).unwrap();
    for s in 0..3 {
        assert_eq!(kappa.coeff(s + 1), gd.h(1).coeff(s + 1));
        assert_eq!(xi_plus.coeff(s + 1), gd.e_simple(1).coeff(s + 1));
    }
    assert_eq!(cartan(&y.ctx(), 1, 1), 0);
    let y2 = Yangian::new(ctx(1, 1, 2, 3));
    assert_eq!(kappa_xi(&gauss_decompose(&y2), 1).unwrap_err(), Error::RequiresOddPrime);
}

#[test]
fn berezinian_examples() {
    let y = y11();
    let gd = gauss_decompose(&y);
    let c = berezinian(&gd);
    assert_eq!(c.coeff(0), &y.one());
    assert_eq!(c.coeff(1), &y.t(1, 1, 1).sub(&y.t(2, 2, 1)));
    assert_eq!(berezinian_rtt(&gd), c);
    assert_eq!(c, y.series_mul(&USeries::t(&y, 1, 1), gd.t_prime(2, 2)));

    let y21 = Yangian::new(ctx(2, 1, 3, 3));
    let gd21 = gauss_decompose(&y21);
    assert_eq!(berezinian_rtt(&gd21), berezinian(&gd21));
}

#[test]
fn diagonal_and_root_series_vanish_below_p() {
    let y = Yangian::new(ctx(2, 1, 3, 6));
    let gd = gauss_decompose(&y);
    for i in 1..=3 {
        let b = b_series(&gd, i).unwrap();
        assert_eq!(b.coeff(0), &y.one());
        assert!(b.coeff(1).is_zero() && b.coeff(2).is_zero(), "b_{i}");
    }
    let p12 = p_series(&gd, 1, 2).unwrap();
    assert!((0..3).all(|r| p12.coeff(r).is_zero()));
    assert!(p_series(&gd, 1, 3).is_err());
    assert!(s_series(&gd, 2, 3).is_err());
    let bc = bc_series(&gd).unwrap();
    assert_eq!(bc, bc_from_berezinian(&gd));
    assert!(bc.coeff(1).is_zero() && bc.coeff(2).is_zero());
}

#[test]
fn ratio_and_entry_series() {
    let y = Yangian::new(ctx(2, 1, 3, 5));
    let gd = gauss_decompose(&y);
    let a1 = a_series(&gd, 1).unwrap();
    assert_eq!(a1, a_from_b(&gd, 1).unwrap());
    assert_eq!(a1.coeff(0), &y.scalar(-1));
    let b1 = b_series(&gd, 1).unwrap();
    assert_eq!(s_series(&gd, 1, 1).unwrap(), b1);
    let p12 = p_series(&gd, 1, 2).unwrap();
    assert_eq!(s_series(&gd, 1, 2).unwrap(), y.series_mul(&b1, &p12));
}

#[test]
fn generator_enumeration() {
    let y = Yangian::new(ctx(1, 1, 3, 3));
    let cat = CentralCatalog::build(Arc::new(gauss_decompose(&y))).unwrap();
    let hc: Vec<String> = cat.enumerate_generators(GeneratorSet::Hc).into_iter().map(|g| g.name).collect();
    assert_eq!(hc, ["c^(1)", "c^(2)", "c^(3)"]);

    let y21 = Yangian::new(ctx(2, 1, 3, 6));
    let cat = CentralCatalog::build(Arc::new(gauss_decompose(&y21))).unwrap();
    let pc = cat.enumerate_generators(GeneratorSet::PCenterY);
    assert!(pc.iter().any(|g| g.name.starts_with("b_1^")));
    // odd pairs never contribute p-th powers
    assert!(pc.iter().all(|g| !g.name.contains("1,3") && !g.name.contains("2,3") && !g.name.contains("3,1")));
    let full = cat.enumerate_generators(GeneratorSet::FullCenter);
    assert!(full.iter().all(|g| !g.name.starts_with("b_1^")));
    assert!(full.iter().any(|g| g.name == "c^(1)"));
}

#[test]
fn current_brackets() {
    let g = CurrentAlgebra::new(ctx(1, 1, 3, 4));
    assert_eq!(g.supercommutator(&g.e(1, 1, 1), &g.e(1, 2, 0)), g.e(1, 2, 1));
    for r in 0..3 {
        for x in g.basis() {
            assert!(g.supercommutator(&g.z(r), &g.e(x.i, x.j, x.r)).is_zero());
        }
    }
    assert_eq!(
        g.mul(&g.e(1, 2, 0), &g.e(1, 1, 1)),
        g.mul(&g.e(1, 1, 1), &g.e(1, 2, 0)).sub(&g.e(1, 2, 1))
    );
    let g21 = CurrentAlgebra::new(ctx(2, 1, 3, 4));
    assert!(g21.supercommutator(&g21.e(1, 2, 1), &g21.e(1, 2, 0)).is_zero());
    assert!(g21.pow(&g21.e(1, 3, 0), 2).is_zero());
}

#[test]
fn restricted_map() {
    let g = CurrentAlgebra::new(ctx(2, 1, 3, 4));
    assert_eq!(g.p_map(CurrentGen::new(1, 1, 1)).unwrap(), g.e(1, 1, 3));
    assert!(g.p_map(CurrentGen::new(1, 2, 1)).unwrap().is_zero());
    assert!(matches!(g.p_map(CurrentGen::new(1, 3, 0)), Err(Error::Parity(_))));
    assert_eq!(g.p_center_gen(CurrentGen::new(1, 2, 0)).unwrap(), g.pow(&g.e(1, 2, 0), 3));
    let z = g.p_center_gen(CurrentGen::new(1, 1, 1)).unwrap();
    assert!(g.central_witness(&z).is_none());
}

#[test]
fn invariant_dimensions() {
    let c = ctx(1, 1, 3, 4);
    assert_eq!(invariant_dimension(c, 0, 3).dimension, 1);
    assert_eq!(invariant_dimension(c, 1, 3).dimension, 4);
    let cubic = invariant_dimension(c, 3, 0);
    assert_eq!(cubic.dimension as u128, cubic.expected);
}
