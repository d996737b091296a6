use std::sync::{Arc, LazyLock};

use num_bigint::BigInt;

use crate::algebra::{GeneratorSystem, Poly, RationalPolynomial};
use crate::error::{Error, Result};
use crate::fgl::{log_series, universal_law};
use crate::series::TruncatedSeries;

/// Heaviest generator the embedded data can express.
pub const MAX_WEIGHT: u32 = 5;

static LOG_COEFFICIENTS: LazyLock<Result<Vec<RationalPolynomial>>> = LazyLock::new(|| {
    let log = log_series(&universal_law(7)?)?;
    Ok((0..=log.order()).map(|k| log.coeff(&[k])).collect())
});

/// `[P^m]` in the Lazard ring, from Mishchenko's formula: the logarithm is
/// `Σ [P^m] x^{m+1}/(m+1)`.
pub fn projective_space_class(m: u32) -> Result<Poly> {
    let lz = GeneratorSystem::lazard();
    if m == 0 {
        return Ok(Poly::one(lz));
    }
    if m > MAX_WEIGHT {
        return Err(Error::UnknownCoefficients(format!("[P^{m}] has weight above {MAX_WEIGHT}")));
    }
    let log = LOG_COEFFICIENTS.as_ref().map_err(Clone::clone)?;
    let coeff = log
        .get(m as usize + 1)
        .ok_or_else(|| Error::UnknownCoefficients(format!("logarithm known only through x^{}", log.len() - 1)))?;
    let scaled = coeff.scale(&BigInt::from(m + 1).into());
    scaled.to_integer().ok_or_else(|| Error::DenominatorNotCleared(format!("[P^{m}] came out as {scaled}")))
}

/// `Ω*(P^m)` as polynomials in the hyperplane class `h`, with `h^{m+1} = 0`.
///
/// Elements are one-variable series in `h` truncated at degree `m`.
/// Pushing forward to a point uses `∫ h^k = [P^{m−k}]`: `h^k` is the class of
/// a linear subspace `P^{m−k} ⊂ P^m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectiveSpaceRing {
    m: u32,
    system: Arc<GeneratorSystem>,
}

impl ProjectiveSpaceRing {
    pub const VAR: &'static str = "h";

    pub fn new(m: u32) -> Self {
        ProjectiveSpaceRing { m, system: GeneratorSystem::lazard() }
    }

    pub fn dimension(&self) -> u32 {
        self.m
    }

    pub fn zero(&self) -> TruncatedSeries {
        TruncatedSeries::zero(&[Self::VAR], self.system.clone(), self.m)
    }

    pub fn one(&self) -> TruncatedSeries {
        TruncatedSeries::one(&[Self::VAR], self.system.clone(), self.m)
    }

    /// The hyperplane class `h = c_1(O(1))`.
    pub fn hyperplane(&self) -> TruncatedSeries {
        TruncatedSeries::var(&[Self::VAR], Self::VAR, self.system.clone(), self.m).expect("h is the ring variable")
    }

    /// `Σ coeffs[k] h^k`.
    pub fn element(&self, coeffs: &[Poly]) -> TruncatedSeries {
        TruncatedSeries::from_terms(
            &[Self::VAR],
            self.system.clone(),
            self.m,
            coeffs.iter().enumerate().map(|(k, c)| (vec![k as u32], c.clone())),
        )
    }

    /// Pushforward to a point.
    pub fn integrate(&self, a: &TruncatedSeries) -> Result<Poly> {
        if a.vars() != [Self::VAR] {
            return Err(Error::VariableMismatch(a.vars().to_vec(), vec![Self::VAR.into()]));
        }
        if a.order() < self.m {
            return Err(Error::UnknownCoefficients(format!(
                "element of Ω*(P^{}) known only through h^{}",
                self.m,
                a.order()
            )));
        }
        let mut acc = Poly::zero(self.system.clone());
        for k in 0..=self.m {
            let c = a.coeff(&[k]);
            if !c.is_zero() {
                acc = acc + &c * &projective_space_class(self.m - k)?;
            }
        }
        Ok(acc)
    }
}
