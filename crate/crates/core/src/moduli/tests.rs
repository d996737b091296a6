use super::*;
use crate::algebra::{parse_poly, GeneratorSystem, Poly};
use crate::error::Error;

fn u(s: &str) -> Poly {
    parse_poly(&GeneratorSystem::lazard(), s).unwrap()
}

fn universal(n: u32, d: &[u32]) -> Poly {
    psi_intersection(n, d, Theory::Universal).unwrap()
}

#[test]
fn spec_examples() {
    assert_eq!(universal(3, &[]), u("1"));
    assert_eq!(universal(4, &[]), u("u1"));
    assert_eq!(universal(5, &[]), u("4u1^2 - 3u2"));
    assert_eq!(universal(6, &[]), u("31u1^3 - 30u1u2 + 17u3"));
    assert_eq!(universal(7, &[2, 1]), u("-2u1"));
    assert_eq!(universal(8, &[1, 1, 1, 1, 1]), u("120"));
    assert!(universal(6, &[4]).is_zero());
    assert!(psi_intersection(8, &[], Theory::Chow).unwrap().is_zero());
}

#[test]
fn universal_gate() {
    let e = IntersectionEngine::new(Theory::Universal).unwrap();
    assert_eq!(e.max_n(), Some(8));
    assert!(matches!(e.m0n_class(9), Err(Error::UnknownCoefficients(_))));
    // Vanishing by dimension needs no coefficients at all.
    assert!(e.psi_intersection(9, &[7]).unwrap().is_zero());
}

#[test]
fn chow_and_k_grow_on_demand() {
    let chow = IntersectionEngine::new(Theory::Chow).unwrap();
    assert_eq!(
        chow.psi_intersection(12, &[3, 3, 3]).unwrap().constant_term(),
        chow_closed_form(12, &[3, 3, 3]).unwrap()
    );
    let k = IntersectionEngine::new(Theory::KTheory).unwrap();
    assert!(!k.psi_intersection(11, &[2]).unwrap().is_zero());
}

#[test]
fn grouping_and_memo_agree() {
    let plain = IntersectionEngine::new(Theory::Universal).unwrap();
    let grouped = IntersectionEngine::new(Theory::Universal).unwrap().grouped(true);
    let bare = IntersectionEngine::new(Theory::Universal).unwrap().memoized(false);
    for d in [vec![], vec![1], vec![2, 1]] {
        let a = plain.psi_intersection(7, &d).unwrap();
        assert_eq!(a, grouped.psi_intersection(7, &d).unwrap());
        assert_eq!(a, bare.psi_intersection(7, &d).unwrap());
    }
    assert_eq!(bare.cache_len(), 0);
    assert!(plain.cache_len() > 0);
}

#[test]
fn expand_with_checks_its_arguments() {
    let e = shared_engine(Theory::Universal);
    assert!(e.expand_with(5, &[1, 0, 0, 0, 0], 0, [1, 2, 3]).is_err());
    assert!(e.expand_with(5, &[1, 0, 0, 0, 0], 4, [1, 2, 4]).is_err());
    assert!(e.expand_with(5, &[1, 0, 0, 0], 3, [0, 1, 2]).is_err());
    assert_eq!(e.expand_with(5, &[0, 0, 1, 0, 0], 0, [4, 3, 1]).unwrap(), u("u1"));
}
