use super::*;
use crate::algebra::{parse_poly, GeneratorSystem, Poly};

fn u(s: &str) -> Poly {
    parse_poly(&GeneratorSystem::lazard(), s).unwrap()
}

fn point_pushforward(r: usize) -> Poly {
    let pt = ProjectiveSpaceRing::new(0);
    let roots = vec![pt.zero(); r];
    pt.integrate(&quillen_pushforward(&roots, &[u("1")]).unwrap()).unwrap()
}

#[test]
fn projective_spaces() {
    assert_eq!(projective_space_class(1).unwrap(), u("u1"));
    assert_eq!(projective_space_class(2).unwrap(), u("u2"));
    assert_eq!(projective_space_class(3).unwrap(), u("u1^3 + 2u3"));
    assert!(projective_space_class(6).is_err());
}

#[test]
fn zero_roots_give_projective_spaces() {
    assert_eq!(point_pushforward(1), u("1"));
    for r in 2..=5 {
        assert_eq!(point_pushforward(r), projective_space_class(r as u32 - 1).unwrap(), "r = {r}");
    }
}

#[test]
fn bundles_and_blowups() {
    assert_eq!(projective_bundle_over_pm(2, &[1, 0]).unwrap(), u("u1^3 + u3"));
    assert_eq!(blowup_point_class(3).unwrap(), u("u1^3 + u3"));
    assert!(projective_bundle_over_pm(2, &[2, 0]).is_err());
    assert!(projective_bundle_over_pm(4, &[1, 0, 0]).is_err());
}

#[test]
fn root_order_does_not_matter() {
    let ring = ProjectiveSpaceRing::new(2);
    let h = ring.hyperplane();
    let a = quillen_pushforward(&[h.clone(), ring.zero(), ring.zero()], &[u("1")]).unwrap();
    let b = quillen_pushforward(&[ring.zero(), h.clone(), ring.zero()], &[u("1")]).unwrap();
    let c = quillen_pushforward(&[ring.zero(), ring.zero(), h], &[u("1")]).unwrap();
    assert_eq!(a, b);
    assert_eq!(a, c);
}

#[test]
fn non_nilpotent_root() {
    let ring = ProjectiveSpaceRing::new(1);
    let bad = ring.one();
    assert!(matches!(quillen_pushforward(&[bad, ring.zero()], &[u("1")]), Err(crate::Error::NonNilpotentRoot)));
}

#[test]
fn milnor() {
    assert_eq!(milnor_class(1, 1).unwrap(), u("u1"));
    // H_{2,1} is P^2 blown up at a point; the a_21 term must be included.
    assert_eq!(milnor_class(2, 1).unwrap(), u("u1^2"));
    assert_eq!(milnor_class(2, 1).unwrap(), blowup_point_class(2).unwrap());
    for m in 1..=5 {
        for n in 1..=5 {
            if m + n - 1 <= 5 {
                assert_eq!(milnor_class(m, n).unwrap(), milnor_class(n, m).unwrap());
            }
        }
    }
}

#[test]
fn u5_column() {
    let r = u5_column_check().unwrap();
    assert_eq!(r.u5_coefficient, 1.into());
    assert!(r.ktheory_image.is_zero());
    assert!(r.chow_image.is_zero());
}

#[test]
fn three_root_hypersurface_series() {
    let s = three_root_series().unwrap();
    assert!(s.order() >= 3);
    assert_eq!(s.coeff(&[0]), u("u2"));
    assert!(s.coeff(&[1]).is_zero());
    assert_eq!(s.coeff(&[2]), u("-3u1^4 + 3u1^2u2 - u2^2 - 4u1u3 + u4"));
    assert_eq!(s.coeff(&[3]), u("2u1u2^2 - 2u2u3 + 2u5"));
}
