//! Randomized invariants: ring axioms, filtration, series laws, binomials,
//! serialization and homomorphism properties.

use std::sync::{Arc, OnceLock};

use proptest::prelude::*;
use superyangian::element::Canonical;
use superyangian::maps::{eta_c, mu_f, rho, sample_unital};
use superyangian::series::{binomial_mod_p, USeries};
use superyangian::{loop_degree, AlgebraContext, Element, Yangian};

fn y21() -> &'static Arc<Yangian> {
    static Y: OnceLock<Arc<Yangian>> = OnceLock::new();
    Y.get_or_init(|| Yangian::new(AlgebraContext::new(2, 1, 3, 4).unwrap()))
}

fn y11() -> &'static Arc<Yangian> {
    static Y: OnceLock<Arc<Yangian>> = OnceLock::new();
    Y.get_or_init(|| Yangian::new(AlgebraContext::new(1, 1, 5, 4).unwrap()))
}

/// Wide enough that products of two sampled elements stay within the
/// tabulated map images.
fn y11_wide() -> &'static Arc<Yangian> {
    static Y: OnceLock<Arc<Yangian>> = OnceLock::new();
    Y.get_or_init(|| Yangian::new(AlgebraContext::new(1, 1, 5, 6).unwrap()))
}

/// `(i, j, r)` with `r <= 2`.
fn gen3() -> impl Strategy<Value = (usize, usize, u32)> {
    (1usize..=3, 1usize..=3, 1u32..=2)
}

/// Sums of up to three words of length up to two, with coefficients.
fn element(y: &'static Arc<Yangian>) -> impl Strategy<Value = Element> {
    let k = y.ctx().size();
    let p = y.ctx().p;
    let word = (1..p, prop::collection::vec((1..=k, 1..=k, 1u32..=2), 1..=2));
    prop::collection::vec(word, 1..=3).prop_map(move |ws| {
        let mut acc = y.zero();
        for (c, letters) in ws {
            let mut w = y.scalar(c as i64);
            for (i, j, r) in letters {
                w = y.mul(&w, &y.t(i, j, r));
            }
            acc = acc.add(&w);
        }
        acc
    })
}

/// A parity-homogeneous single word.
fn word(y: &'static Arc<Yangian>) -> impl Strategy<Value = Element> {
    let k = y.ctx().size();
    prop::collection::vec((1..=k, 1..=k, 1u32..=2), 1..=2).prop_map(move |letters| {
        let xs: Vec<Element> = letters.into_iter().map(|(i, j, r)| y.t(i, j, r)).collect();
        y.product(&xs)
    })
}

/// Unital series with random coefficients in low orders.
fn unital(y: &'static Arc<Yangian>) -> impl Strategy<Value = USeries> {
    prop::collection::vec(element(y), 2).prop_map(move |cs| {
        let mut all = vec![y.one()];
        all.extend(cs);
        USeries::new(y.ctx(), all)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn multiplication_is_associative(a in element(y21()), b in element(y21()), c in element(y21())) {
        let y = y21();
        prop_assert_eq!(y.mul(&y.mul(&a, &b), &c), y.mul(&a, &y.mul(&b, &c)));
    }

    #[test]
    fn multiplication_distributes(a in element(y21()), b in element(y21()), c in element(y21())) {
        let y = y21();
        prop_assert_eq!(y.mul(&a, &b.add(&c)), y.mul(&a, &b).add(&y.mul(&a, &c)));
        prop_assert_eq!(y.mul(&a.add(&b), &c), y.mul(&a, &c).add(&y.mul(&b, &c)));
    }

    #[test]
    fn loop_filtration_and_parity(a in word(y21()), b in word(y21())) {
        let y = y21();
        let ab = y.mul(&a, &b);
        if let (Some(d), Some(da), Some(db)) = (loop_degree(&ab), loop_degree(&a), loop_degree(&b)) {
            prop_assert!(d <= da + db);
        }
        if !ab.is_zero() {
            prop_assert_eq!(y.parity(&ab), Some((y.parity(&a).unwrap() + y.parity(&b).unwrap()) % 2));
        }
    }

    #[test]
    fn top_graded_is_multiplicative(a in word(y21()), b in word(y21())) {
        let y = y21();
        prop_assume!(!a.is_zero() && !b.is_zero());
        let (da, db) = (loop_degree(&a).unwrap(), loop_degree(&b).unwrap());
        let g = superyangian::current::CurrentAlgebra::new(y.ctx());
        let lhs = y.top_graded(&y.mul(&a, &b), da + db).unwrap();
        let rhs = g.mul(&y.top_graded(&a, da).unwrap(), &y.top_graded(&b, db).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn relation_closure((i, j, r) in gen3(), (k, l, s) in gen3()) {
        let y = y21();
        let lhs = y.supercommutator(&y.t(i, j, r), &y.t(k, l, s));
        let rhs = superyangian::verify::rtt::rtt_rhs(y, (i, j, r), (k, l, s));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn canonical_round_trip(a in element(y21())) {
        let y = y21();
        let c = a.to_canonical();
        prop_assert_eq!(&Element::from_canonical(y.ctx(), &c).unwrap(), &a);
        let text = serde_json::to_string(&c).unwrap();
        let back: Canonical = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(Element::from_canonical(y.ctx(), &back).unwrap(), a);
    }

    #[test]
    fn series_round_trip(g in unital(y21())) {
        let y = y21();
        let table: Vec<Canonical> = g.coeffs().iter().map(Element::to_canonical).collect();
        let back: Vec<Canonical> = serde_json::from_str(&serde_json::to_string(&table).unwrap()).unwrap();
        let cs = back.iter().map(|c| Element::from_canonical(y.ctx(), c).unwrap()).collect();
        prop_assert_eq!(USeries::new(y.ctx(), cs), g);
    }

    #[test]
    fn inverse_is_two_sided(g in unital(y21())) {
        let y = y21();
        let inv = y.series_inverse(&g).unwrap();
        let one = USeries::one(y.ctx());
        prop_assert_eq!(y.series_mul(&g, &inv), one.clone());
        prop_assert_eq!(y.series_mul(&inv, &g), one);
    }

    #[test]
    fn series_product_is_associative(f in unital(y11()), g in unital(y11()), h in unital(y11())) {
        let y = y11();
        prop_assert_eq!(y.series_mul(&y.series_mul(&f, &g), &h), y.series_mul(&f, &y.series_mul(&g, &h)));
    }

    #[test]
    fn shifts_compose(g in unital(y11()), a in 0u32..5, b in 0u32..5) {
        prop_assert_eq!(g.shift(a).shift(b), g.shift(a + b));
    }

    #[test]
    fn shift_is_multiplicative(f in unital(y11()), g in unital(y11()), c in 0u32..5) {
        let y = y11();
        prop_assert_eq!(y.series_mul(&f, &g).shift(c), y.series_mul(&f.shift(c), &g.shift(c)));
    }

    #[test]
    fn maps_preserve_products(a in element(y11_wide()), b in element(y11_wide()), c in 0i64..5, s in 0i64..5) {
        let y = y11_wide();
        let maps = [
            eta_c(y, c),
            mu_f(y, &sample_unital(y.ctx(), s)).unwrap(),
            rho(y).unwrap(),
        ];
        for m in &maps {
            let lhs = m.eval(&y.mul(&a, &b)).unwrap();
            let rhs = m.target().mul(&m.eval(&a).unwrap(), &m.eval(&b).unwrap());
            prop_assert_eq!(lhs, rhs);
        }
    }
}

/// Pascal's triangle mod p against the Lucas reduction, for all n <= 2p^2.
#[test]
fn lucas_matches_pascal() {
    for p in [2u32, 3, 5, 7] {
        let top = 2 * p * p;
        let mut row = vec![1u32];
        for n in 0..=top {
            for (k, &v) in row.iter().enumerate() {
                assert_eq!(binomial_mod_p(n as u64, k as u64, p), v, "C({n},{k}) mod {p}");
            }
            let mut next = vec![1u32; row.len() + 1];
            for k in 1..row.len() {
                next[k] = (row[k - 1] + row[k]) % p;
            }
            row = next;
        }
    }
}
