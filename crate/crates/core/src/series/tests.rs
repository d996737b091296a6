use super::*;
use crate::algebra::parse_poly;

fn lz() -> Arc<GeneratorSystem> {
    GeneratorSystem::lazard()
}

fn p(s: &str) -> GradedPolynomial {
    parse_poly(&lz(), s).unwrap()
}

fn xy(order: u32, terms: &[(&[u32], &str)]) -> TruncatedSeries {
    TruncatedSeries::from_terms(&["x", "y"], lz(), order, terms.iter().map(|(e, c)| (e.to_vec(), p(c))))
}

fn x1(order: u32, terms: &[(u32, &str)]) -> TruncatedSeries {
    TruncatedSeries::from_terms(&["x"], lz(), order, terms.iter().map(|(e, c)| (vec![*e], p(c))))
}

#[test]
fn products_respect_truncation() {
    let s = xy(4, &[(&[1, 0], "1"), (&[0, 1], "1")]);
    let one = TruncatedSeries::one(&["x", "y"], lz(), 4);
    assert_eq!(&s * &one, s);

    let x = xy(1, &[(&[1, 0], "1")]);
    let y = xy(1, &[(&[0, 1], "1")]);
    assert!((&x * &y).is_zero());

    let f = xy(2, &[(&[1, 0], "1"), (&[0, 1], "1"), (&[1, 1], "-u1")]);
    let prod = &f * &s;
    assert_eq!(prod, xy(2, &[(&[2, 0], "1"), (&[1, 1], "2"), (&[0, 2], "1")]));
}

#[test]
fn variable_mismatch() {
    let a = xy(2, &[(&[1, 0], "1")]);
    let b = x1(2, &[(1, "1")]);
    assert!(matches!(a.try_add(&b), Err(Error::VariableMismatch(..))));
}

#[test]
fn geometric_series() {
    let a = x1(5, &[(0, "1"), (1, "-u1")]);
    let inv = a.invert_unit().unwrap();
    let mut expect = x1(5, &[]);
    for j in 0..=5u32 {
        expect.add_to(Exponents::new(vec![j]), &p("u1").pow(j));
    }
    assert_eq!(inv, expect);

    let neg = a.neg().invert_unit().unwrap();
    assert_eq!(neg, expect.neg());

    let one: TruncatedSeries = TruncatedSeries::one(&["x"], lz(), 5);
    assert_eq!(one.invert_unit().unwrap(), one);

    let bad = x1(3, &[(0, "2")]);
    assert_eq!(bad.invert_unit(), Err(Error::NonUnitConstantTerm));
    let bad = x1(3, &[(0, "u1")]);
    assert_eq!(bad.invert_unit(), Err(Error::NonUnitConstantTerm));
}

#[test]
fn division() {
    let a = xy(4, &[(&[2, 0], "1"), (&[1, 1], "1")]);
    let x = xy(4, &[(&[1, 0], "1")]);
    let q = a.exact_divide(&x).unwrap();
    assert_eq!(q.order(), 3);
    assert_eq!(q, xy(3, &[(&[1, 0], "1"), (&[0, 1], "1")]));

    let y = xy(4, &[(&[0, 1], "1")]);
    assert!(matches!(x.exact_divide(&y), Err(Error::DivisionNotExact(_))));

    // (x + y)(1 + u1 x) / (x + y)
    let s = xy(5, &[(&[1, 0], "1"), (&[0, 1], "1")]);
    let t = xy(5, &[(&[0, 0], "1"), (&[1, 0], "u1")]);
    let prod = &s * &t;
    assert_eq!(prod.exact_divide(&s).unwrap(), t.truncate(4));
}

#[test]
fn composition() {
    let chi = x1(4, &[(1, "-1"), (2, "-u1"), (3, "-u1^2")]);
    let zero = TruncatedSeries::zero(&["x"], lz(), 4);
    assert!(chi.compose(&[("x", &zero)]).unwrap().is_zero());

    let nonzero_const = x1(4, &[(0, "1")]);
    assert_eq!(chi.compose(&[("x", &nonzero_const)]), Err(Error::NonzeroConstantSubstitution));

    // q(x, y) with y -> x: keeps x, replaces y
    let f = xy(3, &[(&[1, 0], "1"), (&[0, 1], "1"), (&[1, 1], "-u1")]);
    let x = x1(3, &[(1, "1")]);
    let diag = f.compose(&[("x", &x), ("y", &x)]).unwrap();
    assert_eq!(diag, x1(3, &[(1, "2"), (2, "-u1")]));
}

#[test]
fn reversion() {
    let x = x1(6, &[(1, "1")]);
    assert_eq!(x.revert().unwrap(), x);

    let a = x1(6, &[(1, "1"), (2, "u1")]);
    let b = a.revert().unwrap();
    assert_eq!(b.coeff(&[2]), p("-u1"));
    assert_eq!(b.coeff(&[3]), p("2u1^2"));
    assert_eq!(b.coeff(&[4]), p("-5u1^3"));
    assert_eq!(a.compose(&[("x", &b)]).unwrap(), x);
    assert_eq!(b.compose(&[("x", &a)]).unwrap(), x);

    assert!(x1(4, &[(1, "2")]).revert().is_err());
}

#[test]
fn calculus_round_trip() {
    let a = x1(5, &[(0, "u1"), (2, "u1^3 - u1u2 + u3"), (3, "u2")]).to_rational();
    let back = a.integrate("x").unwrap().derivative("x").unwrap();
    assert_eq!(back, a);
}

#[test]
fn combined_degree() {
    let f = xy(3, &[(&[1, 0], "1"), (&[0, 1], "1"), (&[1, 1], "-u1"), (&[2, 1], "u1^2-u2")]);
    assert_eq!(f.combined_degree(), Some(1));
    let bad = xy(3, &[(&[1, 0], "1"), (&[1, 1], "1")]);
    assert_eq!(bad.combined_degree(), None);
}

#[test]
fn display_and_json() {
    let phi = x1(3, &[(0, "u1"), (2, "u1^3 - u1u2 + u3"), (3, "u1^4 - u1^2u2 + u1u3")]);
    assert_eq!(phi.to_string(), "u1 + (u1^3 - u1*u2 + u3)*x^2 + (u1^4 - u1^2*u2 + u1*u3)*x^3 + ...");
    let chi = x1(3, &[(1, "-1"), (2, "-u1"), (3, "-u1^2")]);
    assert_eq!(chi.to_string(), "-x - u1*x^2 - u1^2*x^3 + ...");
    let s = xy(2, &[(&[2, 0], "1"), (&[1, 1], "2"), (&[0, 2], "1")]);
    assert_eq!(s.to_string(), "x^2 + 2*x*y + y^2 + ...");
    assert_eq!(TruncatedSeries::<num_bigint::BigInt>::from_json(&phi.to_json()).unwrap(), phi);
}

#[test]
fn embedding() {
    let a = x1(3, &[(1, "1"), (2, "u1")]);
    let e = a.embed(&["y", "x"]).unwrap();
    assert_eq!(e.coeff(&[0, 2]), p("u1"));
    assert!(a.embed(&["y"]).is_err());
}
