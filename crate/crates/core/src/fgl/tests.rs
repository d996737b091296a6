use super::*;
use crate::algebra::{parse_poly, GeneratorSystem, Poly};
use crate::error::Error;

fn u(s: &str) -> Poly {
    parse_poly(&GeneratorSystem::lazard(), s).unwrap()
}

fn k(s: &str) -> Poly {
    parse_poly(&GeneratorSystem::kbeta(), s).unwrap()
}

#[test]
fn order_gate() {
    assert!(universal_law(7).is_ok());
    assert!(matches!(universal_law(8), Err(Error::UnknownCoefficients(_))));
    let law = universal_law(7).unwrap();
    assert_eq!(law.order(), 6);
    assert!(law.coefficient(4, 3).is_err());
}

#[test]
fn validation_catches_perturbations() {
    assert!(validate_law(&universal_law(7).unwrap()).passed());
    assert!(validate_law(&additive_law(8)).passed());
    assert!(validate_law(&multiplicative_law(8)).passed());

    let law = universal_law(7).unwrap();
    let one = Poly::one(GeneratorSystem::lazard());
    let bad = validate_law(&law.perturbed(2, 2, &one));
    let first = bad.first_failure().unwrap();
    assert_eq!((first.axiom, first.degree), (Axiom::Associativity, 4));

    // Degree-3 associativity holds for any a_11, a_21, so the first visible
    // failure is a degree-4 coefficient (of Lazard weight 3).
    let bad = validate_law(&law.perturbed(1, 1, &one));
    let first = bad.first_failure().unwrap();
    assert_eq!((first.axiom, first.degree, first.weight()), (Axiom::Associativity, 4, 3));
}

#[test]
fn multiplicative_series() {
    let b = derive_bundle(&multiplicative_law(6)).unwrap();
    for j in 1..=6 {
        assert_eq!(b.chi.coeff(&[j]), -k("beta").pow(j - 1));
    }
    assert_eq!(b.c(0).unwrap(), k("-1"));
    assert_eq!(b.c(1).unwrap(), k("beta"));
    for j in 2..=5 {
        assert!(b.c(j).unwrap().is_zero());
    }
    assert!(b.b_series.is_zero());
    assert_eq!(b.p1(), k("beta"));
}

#[test]
fn additive_series() {
    let b = derive_bundle(&additive_law(6)).unwrap();
    assert_eq!(b.chi.to_string(), "-x + ...");
    assert!(b.p1().is_zero());
    assert!(b.b_series.is_zero());
    let l = log_series(&additive_law(6)).unwrap();
    assert_eq!(l.to_string(), "x + ...");
}

#[test]
fn k_images() {
    let m = ktheory_generator_images().unwrap();
    assert_eq!(m.image("u1").unwrap(), &k("beta"));
    assert_eq!(m.image("u2").unwrap(), &k("beta^2"));
    assert!(m.image("u3").unwrap().is_zero());
    assert_eq!(m.image("u4").unwrap(), &k("beta^4"));
    assert_eq!(m.image("u5").unwrap(), &k("-beta^5"));
    assert_eq!(m.apply(&u("u1u2")).unwrap(), k("beta^3"));
    assert!(m.preserves_weights());
}

#[test]
fn chow_images_vanish() {
    let m = chow_generator_images().unwrap();
    assert!(m.images().values().all(Poly::is_zero));
}

#[test]
fn inconsistent_target() {
    // a_31 pins u3 but then a_22 can no longer match
    let kb = GeneratorSystem::kbeta();
    let bad = multiplicative_law(7).perturbed(3, 1, &parse_poly(&kb, "beta^3").unwrap());
    assert!(matches!(solve_generator_images(&universal_law(7).unwrap(), &bad), Err(Error::InconsistentSystem(_))));
}
