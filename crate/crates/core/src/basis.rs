//! Exact change of basis between Lazard monomials in `u_i` and monomials
//! in the projective-space classes `p_m = [P^m]`.
//!
//! The `p`-monomials of weight `w` form a basis of the weight-`w` part of
//! `L ⊗ ℚ`, but not of `L` itself, so conversions go through ℚ.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::{parse_poly, Exponents, GeneratorSystem, GradedPolynomial, Poly, RationalPolynomial};
use crate::error::{Error, Result};
use crate::geom::{projective_space_class, MAX_WEIGHT};
use crate::moduli::partitions;

/// A homogeneous `ℚ`-combination of `p`-monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalCombination {
    weight: u32,
    value: RationalPolynomial,
}

impl RationalCombination {
    /// Wraps a homogeneous polynomial in `p1..p5`.
    pub fn new(value: RationalPolynomial) -> Result<Self> {
        let p = GeneratorSystem::projective();
        let value = value.with_system(p)?;
        let weight = value.weight_of().ok_or(Error::NotHomogeneous)?;
        Ok(RationalCombination { weight, value })
    }

    /// Parses `45/2*p1^3 - 30p1p2 + 17/2*p3`.
    pub fn parse(text: &str) -> Result<Self> {
        Self::new(parse_poly(&GeneratorSystem::projective(), text)?)
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn as_polynomial(&self) -> &RationalPolynomial {
        &self.value
    }

    /// `(partition, coefficient)` pairs, largest monomial first.
    pub fn terms(&self) -> Vec<(Vec<u32>, BigRational)> {
        self.value.terms().iter().rev().map(|(e, c)| (partition_of(e), c.clone())).collect()
    }

    pub fn coefficient(&self, partition: &[u32]) -> BigRational {
        self.value.coeff(&monomial_of(partition))
    }

    pub fn is_integral(&self) -> bool {
        self.value.terms().values().all(BigRational::is_integer)
    }

    pub fn to_json(&self) -> serde_json::Value {
        self.value.to_json()
    }
}

impl fmt::Display for RationalCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.value, f)
    }
}

/// `λ = (3, 1, 1)` ↦ exponent vector of `g3·g1²`.
fn monomial_of(partition: &[u32]) -> Exponents {
    let mut e = vec![0; MAX_WEIGHT as usize];
    for &part in partition {
        e[part as usize - 1] += 1;
    }
    Exponents::new(e)
}

fn partition_of(e: &Exponents) -> Vec<u32> {
    let mut out = Vec::new();
    for (k, &count) in e.as_slice().iter().enumerate().rev() {
        out.extend(std::iter::repeat_n(k as u32 + 1, count as usize));
    }
    out
}

fn check_weight(w: u32) -> Result<()> {
    if w > MAX_WEIGHT {
        return Err(Error::UnknownCoefficients(format!("weight {w} is above {MAX_WEIGHT}")));
    }
    Ok(())
}

/// The `p`-monomials of weight `w`, as partitions with largest parts first.
pub fn p_monomials(w: u32) -> Result<Vec<Vec<u32>>> {
    check_weight(w)?;
    Ok(partitions(w))
}

/// `Π [P^{λ_k}]` in the Lazard ring.
fn p_monomial_in_u(partition: &[u32]) -> Result<Poly> {
    let mut acc = Poly::one(GeneratorSystem::lazard());
    for &m in partition {
        acc = &acc * &projective_space_class(m)?;
    }
    Ok(acc)
}

/// Column `λ` holds the `u`-expansion of the `p`-monomial `λ`; row `μ`
/// is the coefficient of the `u`-monomial `μ`. Both are indexed by
/// [`p_monomials`].
pub fn basis_matrix(w: u32) -> Result<Vec<Vec<BigInt>>> {
    let parts = p_monomials(w)?;
    let columns: Vec<Poly> = parts.iter().map(|p| p_monomial_in_u(p)).collect::<Result<_>>()?;
    Ok(parts.iter().map(|row| columns.iter().map(|col| col.coeff(&monomial_of(row))).collect()).collect())
}

pub fn basis_determinant(w: u32) -> Result<BigInt> {
    let m = basis_matrix(w)?;
    let k = m.len();
    Ok(bareiss(m, vec![BigInt::zero(); k]).map(|(det, _, _)| det).unwrap_or_default())
}

/// Fraction-free elimination of `[a | b]`. Returns the determinant and the
/// upper-triangular system, or `None` when `a` is singular.
fn bareiss(mut a: Vec<Vec<BigInt>>, b: Vec<BigInt>) -> Option<(BigInt, Vec<Vec<BigInt>>, Vec<BigInt>)> {
    let n = a.len();
    for (row, rhs) in a.iter_mut().zip(b) {
        row.push(rhs);
    }
    let mut prev = BigInt::one();
    let mut sign = BigInt::one();
    for k in 0..n {
        let pivot = (k..n).find(|&i| !a[i][k].is_zero())?;
        if pivot != k {
            a.swap(pivot, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..=n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = if n == 0 { BigInt::one() } else { sign * &a[n - 1][n - 1] };
    let rhs = a.iter_mut().map(|row| row.pop().expect("augmented")).collect();
    Some((det, a, rhs))
}

/// Solves `m·x = b` exactly.
fn solve(m: Vec<Vec<BigInt>>, b: &[BigRational], w: u32) -> Result<Vec<BigRational>> {
    let denom = b.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let scaled: Vec<BigInt> = b.iter().map(|c| (c * BigRational::from_integer(denom.clone())).to_integer()).collect();
    let (_, u, y) = bareiss(m, scaled).ok_or(Error::SingularBasis(w))?;
    let n = u.len();
    let mut x = vec![BigRational::zero(); n];
    for i in (0..n).rev() {
        let mut acc = BigRational::from_integer(y[i].clone());
        for j in i + 1..n {
            acc -= BigRational::from_integer(u[i][j].clone()) * &x[j];
        }
        x[i] = acc / BigRational::from_integer(u[i][i].clone());
    }
    let d = BigRational::from_integer(denom);
    Ok(x.into_iter().map(|v| v / &d).collect())
}

/// Expresses a homogeneous Lazard element in `p`-monomials.
pub fn to_projective_basis(a: &Poly) -> Result<RationalCombination> {
    to_projective_basis_rational(&a.to_rational())
}

pub fn to_projective_basis_rational(a: &RationalPolynomial) -> Result<RationalCombination> {
    let a = a.with_system(GeneratorSystem::lazard())?;
    let w = a.weight_of().ok_or(Error::NotHomogeneous)?;
    check_weight(w)?;
    let parts = p_monomials(w)?;
    let rhs: Vec<BigRational> = parts.iter().map(|mu| a.coeff(&monomial_of(mu))).collect();
    let x = solve(basis_matrix(w)?, &rhs, w)?;
    let p = GeneratorSystem::projective();
    let value = GradedPolynomial::from_terms(p, parts.iter().map(|l| monomial_of(l)).zip(x));
    let out = RationalCombination { weight: w, value };
    if from_projective_basis(&out)? != a {
        return Err(Error::SingularBasis(w));
    }
    Ok(out)
}

/// Expands a `p`-combination back into Lazard monomials (over ℚ).
pub fn from_projective_basis(c: &RationalCombination) -> Result<RationalPolynomial> {
    let mut acc = RationalPolynomial::zero(GeneratorSystem::lazard());
    for (partition, coeff) in c.terms() {
        acc = acc + p_monomial_in_u(&partition)?.to_rational().scale(&coeff);
    }
    Ok(acc)
}

/// Lcm of the denominators, e.g. 6 for `[M̄0,8]`.
pub fn common_denominator(c: &RationalCombination) -> BigInt {
    c.terms().iter().fold(BigInt::one(), |l, (_, q)| l.lcm(q.denom())).abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(s: &str) -> Poly {
        parse_poly(&GeneratorSystem::lazard(), s).unwrap()
    }

    #[test]
    fn monomial_lists() {
        assert_eq!(p_monomials(3).unwrap(), vec![vec![3], vec![2, 1], vec![1, 1, 1]]);
        assert_eq!(p_monomials(0).unwrap(), vec![Vec::<u32>::new()]);
        assert_eq!(p_monomials(5).unwrap().len(), 7);
        assert!(p_monomials(6).is_err());
    }

    #[test]
    fn determinants_nonzero() {
        for w in 0..=5 {
            assert!(!basis_determinant(w).unwrap().is_zero(), "weight {w}");
        }
    }

    #[test]
    fn small_conversions() {
        assert_eq!(to_projective_basis(&u("u1")).unwrap().to_string(), "p1");
        let c = to_projective_basis(&u("31u1^3 - 30u1u2 + 17u3")).unwrap();
        assert_eq!(c, RationalCombination::parse("45/2*p1^3 - 30p1p2 + 17/2*p3").unwrap());
        assert_eq!(common_denominator(&c), 2.into());
        let p3 = RationalCombination::parse("p3").unwrap();
        assert_eq!(from_projective_basis(&p3).unwrap(), u("u1^3 + 2u3").to_rational());
        let p11 = RationalCombination::parse("p1^2").unwrap();
        assert_eq!(from_projective_basis(&p11).unwrap(), u("u1^2").to_rational());
        assert!(matches!(to_projective_basis(&u("u1 + u2")), Err(Error::NotHomogeneous)));
    }

    #[test]
    fn partition_round_trip() {
        for w in 0..=5 {
            for p in partitions(w) {
                assert_eq!(partition_of(&monomial_of(&p)), p);
            }
        }
    }
}
