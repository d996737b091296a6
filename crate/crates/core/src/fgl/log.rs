use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{Poly, RationalPolynomial};
use crate::error::Result;
use crate::series::{RationalSeries, TruncatedSeries};

use super::law::FormalGroupLaw;

/// The logarithm `l(x) = ∫ dx / (∂F/∂y)(x, 0)` over ℚ.
///
/// It satisfies `l(F(x,y)) = l(x) + l(y)`; only the `a_{i1}` column of the
/// law enters.
pub fn log_series(law: &FormalGroupLaw) -> Result<RationalSeries> {
    let f = law.series().to_rational();
    let sys = f.system().clone();
    let dy = f.derivative("y")?;
    let zero = TruncatedSeries::zero(&["x"], sys, dy.order());
    let at_zero = dy.compose(&[("y", &zero)])?;
    at_zero.invert_unit()?.integrate("x")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientMismatch {
    pub i: u32,
    pub j: u32,
    pub printed: Poly,
    pub reconstructed: RationalPolynomial,
}

impl fmt::Display for CoefficientMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a_{}{}: printed {} but the logarithm gives {}", self.i, self.j, self.printed, self.reconstructed)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReconstructionReport {
    /// Logarithm coefficients `m_k` of `x^{k+1}`.
    pub log_coefficients: BTreeMap<u32, RationalPolynomial>,
    pub checked_through: u32,
    pub mismatches: Vec<CoefficientMismatch>,
}

impl ReconstructionReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Rebuilds the whole law from its `a_{i1}` column via
/// `F = exp(l(x) + l(y))` and compares every coefficient with the input.
pub fn reconstruct_law(law: &FormalGroupLaw) -> Result<ReconstructionReport> {
    let l = log_series(law)?;
    let through = law.order();
    let l = l.truncate(through);
    let exp = l.revert()?;
    let xy = ["x", "y"];
    let lx = l.embed(&xy)?;
    let ly = l.rename(&["y"])?.embed(&xy)?;
    let sum = lx.try_add(&ly)?;
    let rebuilt = exp.compose(&[("x", &sum)])?;

    let mut mismatches = Vec::new();
    for d in 1..=through {
        for i in (0..=d).rev() {
            let j = d - i;
            let printed = law.series().coeff(&[i, j]);
            let reconstructed = rebuilt.coeff(&[i, j]);
            if printed.to_rational() != reconstructed {
                mismatches.push(CoefficientMismatch { i, j, printed, reconstructed });
            }
        }
    }
    let log_coefficients = (1..through).map(|k| (k, l.coeff(&[k + 1]))).collect();
    Ok(ReconstructionReport { log_coefficients, checked_through: through, mismatches })
}
