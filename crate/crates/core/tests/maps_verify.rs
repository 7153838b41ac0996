//! Algebra maps and the verification harness on small contexts.

use std::sync::Arc;

use superyangian::central::{b_series, berezinian, CentralCatalog, GeneratorSet};
use superyangian::current::CurrentAlgebra;
use superyangian::gauss::gauss_decompose;
use superyangian::maps::{self, eta_c, identity, mu_f, omega, permutation, permutation_unchecked, psi_k, zeta};
use superyangian::series::USeries;
use superyangian::verify::{
    check_homomorphism, verify_central, verify_graded, verify_identity, verify_independence, verify_pbw_counts,
    verify_rtt_consistency, verify_sy_presentation, SuiteOptions,
};
use superyangian::{AlgebraContext, Error, Yangian};

fn ctx(m: usize, n: usize, p: u32, trunc: usize) -> AlgebraContext {
    AlgebraContext::new(m, n, p, trunc).unwrap()
}

#[test]
fn trivial_maps_are_identity() {
    let y = Yangian::new(ctx(2, 1, 3, 4));
    let id = identity(&y);
    assert!(mu_f(&y, &USeries::one(y.ctx())).unwrap().same_images(&id));
    assert!(eta_c(&y, 0).same_images(&id));
    assert!(permutation(&y, &[1, 2, 3]).unwrap().same_images(&id));
    assert!(check_homomorphism(&id, 3).unwrap().passed());
}

#[test]
fn eta_on_second_coefficient() {
    let y = Yangian::new(ctx(2, 1, 5, 4));
    let eta = eta_c(&y, 2);
    for (i, j) in [(1, 1), (1, 3), (3, 2)] {
        assert_eq!(eta.image(i, j, 2).unwrap(), y.t(i, j, 2).add(&y.t(i, j, 1).scale(2)));
    }
}

#[test]
fn eta_shifts_diagonal_series() {
    let y = Yangian::new(ctx(2, 1, 3, 4));
    let gd = gauss_decompose(&y);
    let eta = eta_c(&y, 1);
    for i in 1..=3 {
        assert_eq!(eta.eval_series(gd.d(i)).unwrap(), gd.d(i).shift(1));
    }
}

#[test]
fn mu_scales_diagonal_and_fixes_roots() {
    let y = Yangian::new(ctx(2, 1, 3, 4));
    let gd = gauss_decompose(&y);
    let f = maps::sample_unital(y.ctx(), 1);
    let mu = mu_f(&y, &f).unwrap();
    for i in 1..=3 {
        assert_eq!(mu.eval_series(gd.d(i)).unwrap(), y.series_mul(&f, gd.d(i)));
    }
    for j in 1..=2 {
        assert_eq!(&mu.eval_series(gd.e_simple(j)).unwrap(), gd.e_simple(j));
    }
    assert!(check_homomorphism(&mu, 4).unwrap().passed());
    assert_eq!(mu_f(&y, &USeries::u_inv(y.ctx())).unwrap_err(), Error::NotUnital);
}

#[test]
fn wall_crossing_is_rejected_and_fails_when_forced() {
    let y = Yangian::new(ctx(2, 1, 3, 4));
    assert_eq!(permutation(&y, &[3, 2, 1]).unwrap_err(), Error::WallCrossing);
    let forced = permutation_unchecked(&y, &[3, 2, 1]).unwrap();
    let rep = check_homomorphism(&forced, 3).unwrap();
    assert!(!rep.passed());
    assert!(!rep.witness.unwrap().difference.0.is_empty());
}

#[test]
fn transposition_moves_simple_roots() {
    // (i+1, j) = (2, 3) in Y(3|1) sends e_1 to e_{1,3}
    let y = Yangian::new(ctx(3, 1, 3, 3));
    let gd = gauss_decompose(&y);
    let w = maps::transposition(4, 2, 3);
    let sigma = permutation(&y, &w).unwrap();
    assert_eq!(&sigma.eval_series(gd.e_simple(1)).unwrap(), gd.e(1, 3));
    assert_eq!(&sigma.eval_series(gd.f_simple(1)).unwrap(), gd.f(3, 1));
}

#[test]
fn omega_is_an_involution() {
    let y = Yangian::new(ctx(1, 2, 3, 4));
    let w = omega(&y).unwrap();
    assert!(w.then(&w).unwrap().same_images(&identity(&y)));
}

#[test]
fn zeta_and_psi_images() {
    let y = Yangian::new(ctx(2, 1, 3, 4));
    let z = zeta(&y).unwrap();
    let zt = z.target().clone();
    let gdz = gauss_decompose(&zt);
    let gd = gauss_decompose(&y);
    let k = 3;
    for i in 1..=k {
        let want = zt.series_inverse(gdz.d(k + 1 - i)).unwrap();
        assert_eq!(z.eval_series(gd.d(i)).unwrap(), want, "zeta d_{i}");
    }
    for j in 1..k {
        assert_eq!(z.eval_series(gd.e_simple(j)).unwrap(), gdz.f_simple(k - j).neg(), "zeta e_{j}");
    }

    let psi = psi_k(&y, 1).unwrap();
    let gdp = gauss_decompose(psi.target());
    for l in 1..=k {
        assert_eq!(&psi.eval_series(gd.d(l)).unwrap(), gdp.d(l + 1), "psi d_{l}");
    }
}

#[test]
fn named_maps_are_homomorphisms() {
    let y = Yangian::new(ctx(1, 1, 3, 4));
    for name in ["id", "mu", "eta", "rho", "omega", "phi", "psi", "zeta"] {
        let m = maps::by_name(&y, name).unwrap();
        assert!(check_homomorphism(&m, 3).unwrap().passed(), "{name}");
    }
    assert!(matches!(maps::by_name(&y, "tau"), Err(Error::Unknown(_))));
}

#[test]
fn central_checks() {
    let y = Yangian::new(ctx(1, 1, 3, 4));
    let gd = gauss_decompose(&y);
    let c = berezinian(&gd);
    assert!(verify_central(&y, c.coeff(2), 4).passed());
    assert!(verify_central(&y, &y.one(), 4).passed());
    let r = verify_central(&y, &y.t(1, 1, 1), 1);
    assert!(!r.passed());
    let w = r.witness.unwrap();
    assert!(w.indices.contains("t_{1,2}^(1)"), "{}", w.indices);
    assert_eq!(w.difference, y.t(1, 2, 1).to_canonical());
}

#[test]
fn graded_images() {
    let y = Yangian::new(ctx(1, 1, 3, 4));
    let g = CurrentAlgebra::new(y.ctx());
    let c = berezinian(&gauss_decompose(&y));
    assert!(verify_graded(&y, c.coeff(3), 2, &g.z(2)).unwrap().passed());

    let y21 = Yangian::new(ctx(2, 1, 3, 4));
    let g21 = CurrentAlgebra::new(y21.ctx());
    let gd = gauss_decompose(&y21);
    let b2 = b_series(&gd, 2).unwrap();
    let e22 = g21.e(2, 2, 0);
    assert!(verify_graded(&y21, b2.coeff(3), 0, &g21.pow(&e22, 3).sub(&e22)).unwrap().passed());
    let cat = CentralCatalog::build(Arc::new(gd)).unwrap();
    let s12 = cat.series("s_{1,2}").unwrap();
    assert!(verify_graded(&y21, s12.coeff(3), 0, &g21.pow(&g21.e(1, 2, 0), 3)).unwrap().passed());
}

#[test]
fn rtt_and_its_mutation() {
    let c = ctx(1, 1, 3, 5);
    let ok = verify_rtt_consistency(&c, SuiteOptions::new(4)).unwrap();
    assert!(ok.iter().all(|r| r.passed()));
    let bad = verify_rtt_consistency(&c, SuiteOptions::mutated(3)).unwrap();
    assert!(bad.iter().any(|r| !r.passed() && r.witness.is_some()));
}

#[test]
fn identity_records() {
    let c = ctx(2, 1, 3, 5);
    assert!(verify_identity("Ymn-3", &c, SuiteOptions::new(5)).unwrap().passed());
    assert!(verify_identity("Y21-6", &c, SuiteOptions::new(5)).unwrap().passed());
    let p2 = ctx(2, 1, 2, 4);
    assert_eq!(verify_identity("coro2", &p2, SuiteOptions::new(3)).unwrap_err(), Error::RequiresOddPrime);
    assert!(matches!(verify_identity("nope", &c, SuiteOptions::new(3)), Err(Error::Unknown(_))));
}

#[test]
fn special_yangian_presentation() {
    let reps = verify_sy_presentation(&ctx(1, 1, 3, 5), SuiteOptions::new(4)).unwrap();
    assert!(reps.iter().all(|r| r.passed()), "{reps:?}");
}

#[test]
fn pbw_counts_and_skip() {
    let reps = verify_pbw_counts(&ctx(1, 1, 3, 4), SuiteOptions::new(2)).unwrap();
    assert!(reps.iter().all(|r| r.passed()));
    // p | m - n: the tensor count is skipped, not claimed
    let reps = verify_pbw_counts(&ctx(1, 1, 3, 4), SuiteOptions::new(1)).unwrap();
    let hc = reps.iter().find(|r| r.id == "pbw/sy-hc").unwrap();
    assert_eq!(hc.checked, 0);
    assert!(hc.note.is_some());
}

#[test]
fn independence() {
    let y = Yangian::new(ctx(1, 1, 3, 6));
    let cat = CentralCatalog::build(Arc::new(gauss_decompose(&y))).unwrap();
    let hc: Vec<_> = cat.enumerate_generators(GeneratorSet::Hc).into_iter().take(2).collect();
    assert!(verify_independence(&y, &hc, 2).passed());
    let mut dup = hc[..1].to_vec();
    let mut twice = dup[0].clone();
    twice.name = "2c^(1)".into();
    twice.element = twice.element.scale(2);
    dup.push(twice);
    assert!(!verify_independence(&y, &dup, 2).passed());
    let pc = cat.enumerate_generators(GeneratorSet::PCenterY);
    assert!(verify_independence(&y, &pc, 6).passed());
}
