//! Seeded random spot checks: associativity, distributivity and canonical
//! round-trips on random elements.

use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use superyangian::verify::{CheckReport, Tally};
use superyangian::{AlgebraContext, Element, Yangian};

const SAMPLES: usize = 24;

fn random_element(y: &Yangian, rng: &mut StdRng, max_r: u32) -> Element {
    let ctx = y.ctx();
    let k = ctx.size();
    let mut acc = y.zero();
    for _ in 0..rng.gen_range(1..=3) {
        let mut w = y.scalar(rng.gen_range(1..ctx.p as i64));
        for _ in 0..rng.gen_range(1..=2) {
            let g = y.t(rng.gen_range(1..=k), rng.gen_range(1..=k), rng.gen_range(1..=max_r));
            w = y.mul(&w, &g);
        }
        acc = acc.add(&w);
    }
    acc
}

/// `SAMPLES` random triples with superscripts `<= max_r`.
pub fn spot_checks(ctx: &AlgebraContext, seed: u64, max_r: u32) -> CheckReport {
    let start = Instant::now();
    let y = Yangian::new(*ctx);
    let mut rng = StdRng::seed_from_u64(seed);
    let mut t = Tally::new();
    for n in 0..SAMPLES {
        let (a, b, c) =
            (random_element(&y, &mut rng, max_r), random_element(&y, &mut rng, max_r), random_element(&y, &mut rng, max_r));
        let ab = y.mul(&a, &b);
        t.eq(|| format!("associativity sample {n}"), &y.mul(&ab, &c), &y.mul(&a, &y.mul(&b, &c)));
        t.eq(|| format!("distributivity sample {n}"), &y.mul(&a, &b.add(&c)), &ab.add(&y.mul(&a, &c)));
        match Element::from_canonical(*ctx, &ab.to_canonical()) {
            Ok(back) => t.eq(|| format!("round-trip sample {n}"), &back, &ab),
            Err(_) => {
                t.fail_with(|| format!("round-trip sample {n}"), ab.to_canonical());
                false
            }
        };
    }
    t.report(format!("spot/seed-{seed}"), ctx, start)
}
