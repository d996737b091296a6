//! Randomized properties of the algebra, series and moduli layers.

use proptest::prelude::*;

use m0n_core::algebra::{parse_poly, Exponents, GeneratorSystem, Poly};
use m0n_core::fgl::{chow_generator_images, ktheory_generator_images};
use m0n_core::moduli::{
    chow_closed_form, ktheory_twisted_closed_form, ktheory_twisted_recursion, psi_intersection, IntersectionKey, Theory,
};
use m0n_core::series::TruncatedSeries;

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((prop::collection::vec(0u32..3, 5), -20i64..20), 0..6).prop_map(|terms| {
        Poly::from_terms(GeneratorSystem::lazard(), terms.into_iter().map(|(e, c)| (Exponents::new(e), c.into())))
    })
}

/// `x + (higher terms)` in one variable, to order 5.
fn unit_coefficient_series() -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec(poly(), 4).prop_map(|cs| {
        let lz = GeneratorSystem::lazard();
        let mut terms = vec![(vec![1], Poly::one(lz.clone()))];
        terms.extend(cs.into_iter().enumerate().map(|(k, c)| (vec![k as u32 + 2], c)));
        TruncatedSeries::from_terms(&["x"], lz, 5, terms)
    })
}

/// `(n, d)` with `n ≤ max_n` and `|d| ≤ n − 3`, `d` unsorted and padded.
fn key(max_n: u32) -> impl Strategy<Value = (u32, Vec<u32>)> {
    (3..=max_n).prop_flat_map(|n| {
        prop::collection::vec(0..=n - 3, n as usize)
            .prop_map(move |mut d| {
                // Trim to a valid total degree.
                let mut budget = n - 3;
                for e in &mut d {
                    *e = (*e).min(budget);
                    budget -= *e;
                }
                d
            })
            .prop_map(move |d| (n, d))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn text_and_json_round_trip(a in poly()) {
        prop_assert_eq!(parse_poly(&GeneratorSystem::lazard(), &a.to_string()).unwrap(), a.clone());
        prop_assert_eq!(Poly::from_json(&a.to_json()).unwrap(), a);
    }

    #[test]
    fn specializations_are_ring_maps(a in poly(), b in poly()) {
        for map in [chow_generator_images().unwrap(), ktheory_generator_images().unwrap()] {
            let ab = map.apply(&(&a * &b)).unwrap();
            prop_assert_eq!(ab, &map.apply(&a).unwrap() * &map.apply(&b).unwrap());
        }
    }

    #[test]
    fn series_inverses(s in unit_coefficient_series()) {
        let x = TruncatedSeries::var(&["x"], "x", GeneratorSystem::lazard(), 5).unwrap();
        let r = s.revert().unwrap();
        prop_assert_eq!(s.compose(&[("x", &r)]).unwrap(), x.clone());
        prop_assert_eq!(r.compose(&[("x", &s)]).unwrap(), x.clone());
        let unit = s.exact_divide(&x).unwrap();
        let one = TruncatedSeries::one(&["x"], GeneratorSystem::lazard(), 4);
        prop_assert_eq!((&unit.truncate(4) * &unit.truncate(4).invert_unit().unwrap()).truncate(4), one);
    }

    #[test]
    fn chow_engine_matches_closed_form((n, d) in key(11)) {
        let total: u32 = d.iter().sum();
        let got = psi_intersection(n, &d, Theory::Chow).unwrap();
        if total == n - 3 {
            prop_assert_eq!(got.constant_term(), chow_closed_form(n, &d).unwrap());
            prop_assert!(got.is_constant());
        } else {
            prop_assert!(got.is_zero());
        }
    }

    #[test]
    fn twisted_recursion_matches_closed_form((n, d) in key(10)) {
        prop_assert_eq!(ktheory_twisted_recursion(n, &d).unwrap(), ktheory_twisted_closed_form(n, &d).unwrap());
    }

    #[test]
    fn universal_values_specialize((n, d) in key(8)) {
        let u = psi_intersection(n, &d, Theory::Universal).unwrap();
        let chow = chow_generator_images().unwrap().apply(&u).unwrap();
        let k = ktheory_generator_images().unwrap().apply(&u).unwrap();
        prop_assert_eq!(chow, psi_intersection(n, &d, Theory::Chow).unwrap());
        prop_assert_eq!(k, psi_intersection(n, &d, Theory::KTheory).unwrap());
    }

    #[test]
    fn marking_order_is_irrelevant((n, d) in key(8), seed in any::<u64>()) {
        let mut shuffled = d.clone();
        // Deterministic Fisher–Yates driven by the seed.
        let mut s = seed;
        for i in (1..shuffled.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            shuffled.swap(i, (s >> 33) as usize % (i + 1));
        }
        prop_assert_eq!(
            IntersectionKey::new(n, &d, Theory::Universal).unwrap(),
            IntersectionKey::new(n, &shuffled, Theory::Universal).unwrap()
        );
        prop_assert_eq!(
            psi_intersection(n, &d, Theory::Universal).unwrap(),
            psi_intersection(n, &shuffled, Theory::Universal).unwrap()
        );
    }
}
