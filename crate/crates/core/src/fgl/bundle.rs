use std::collections::BTreeMap;

use crate::algebra::{Exponents, Poly, RingMap};
use crate::error::{Error, Result};
use crate::series::TruncatedSeries;

use super::law::FormalGroupLaw;

/// Everything the string recursion needs from a law: the inverse series
/// `chi`, `q` with `F = x + y − xy·q`, `phi(x) = q(x, chi(x))`, the
/// coefficients `c_j` of `x/chi(x)`, and the two-variable series `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesBundle {
    pub law: FormalGroupLaw,
    pub chi: TruncatedSeries,
    pub q: TruncatedSeries,
    pub phi: TruncatedSeries,
    /// `x/chi(x) = Σ c_j x^j`, as a series.
    pub c_series: TruncatedSeries,
    /// `Σ b_ij x^i y^j`.
    pub b_series: TruncatedSeries,
}

impl SeriesBundle {
    /// `c_j`, known for `j ≤ c_series.order()`.
    pub fn c(&self, j: u32) -> Result<Poly> {
        if j > self.c_series.order() {
            return Err(Error::UnknownCoefficients(format!(
                "c_{j} needs law coefficients beyond total degree {}",
                self.law.order()
            )));
        }
        Ok(self.c_series.coeff(&[j]))
    }

    /// `b_ij`, known for `i + j ≤ b_series.order()`.
    pub fn b(&self, i: u32, j: u32) -> Result<Poly> {
        if i + j > self.b_series.order() {
            return Err(Error::UnknownCoefficients(format!(
                "b_{i}{j} needs law coefficients beyond total degree {}",
                self.law.order()
            )));
        }
        Ok(self.b_series.coeff(&[i, j]))
    }

    pub fn c_list(&self) -> Vec<Poly> {
        (0..=self.c_series.order()).map(|j| self.c_series.coeff(&[j])).collect()
    }

    pub fn b_table(&self) -> BTreeMap<(u32, u32), Poly> {
        let n = self.b_series.order();
        let mut out = BTreeMap::new();
        for d in 0..=n {
            for i in 0..=d {
                out.insert((i, d - i), self.b_series.coeff(&[i, d - i]));
            }
        }
        out
    }

    /// `[P¹]`: the constant term of `q`.
    pub fn p1(&self) -> Poly {
        self.q.constant_term()
    }

    /// Checks `F(x, chi) = 0`, `x·chi·phi = x + chi` and `c_0 = −1`.
    pub fn check_invariants(&self) -> Result<()> {
        let f = self.law.series();
        let sys = f.system().clone();
        let fx = f.compose(&[("y", &self.chi)])?;
        if !fx.is_zero() {
            return Err(Error::InconsistentSystem(format!("F(x, chi(x)) = {fx}")));
        }
        let x = TruncatedSeries::var(&["x"], "x", sys.clone(), self.chi.order())?;
        let lhs = self.chi.mul_exact(&x)?.try_mul(&self.phi)?;
        let rhs = x.try_add(&self.chi)?;
        let n = lhs.order().min(rhs.order());
        if lhs.truncate(n) != rhs.truncate(n) {
            return Err(Error::InconsistentSystem("x·chi·phi differs from x + chi".into()));
        }
        if self.c_series.constant_term() != -Poly::one(sys) {
            return Err(Error::InconsistentSystem("c_0 is not -1".into()));
        }
        Ok(())
    }

    /// Total degree of every pipeline series minus coefficient weight, as
    /// `(name, expected, actual)`; all are homogeneous for a graded law.
    pub fn combined_degrees(&self) -> Vec<(&'static str, i64, Option<i64>)> {
        vec![
            ("fgl", 1, self.law.series().combined_degree()),
            ("inverse", 1, self.chi.combined_degree()),
            ("q", -1, self.q.combined_degree()),
            ("phi", -1, self.phi.combined_degree()),
            ("c", 0, self.c_series.combined_degree()),
            ("b", -2, self.b_series.combined_degree()),
        ]
    }
}

/// Solves `F(x, chi) = 0` one degree at a time: the degree-`k` coefficient
/// of `F(x, chi)` is linear in `chi_k` with slope 1.
pub fn inverse_series(law: &FormalGroupLaw) -> Result<TruncatedSeries> {
    let f = law.series();
    let sys = f.system().clone();
    let n = f.order();
    let mut chi = TruncatedSeries::var(&["x"], "x", sys, n)?.neg();
    for k in 2..=n {
        let residue = f.compose(&[("y", &chi)])?.coeff(&[k]);
        chi.add_to(Exponents::new(vec![k]), &-residue);
    }
    Ok(chi)
}

pub fn derive_bundle(law: &FormalGroupLaw) -> Result<SeriesBundle> {
    let f = law.series();
    let sys = f.system().clone();
    let n = f.order();
    let xy = ["x", "y"];
    let x = TruncatedSeries::var(&xy, "x", sys.clone(), n)?;
    let y = TruncatedSeries::var(&xy, "y", sys.clone(), n)?;

    let chi = inverse_series(law)?;
    let q = x.try_add(&y)?.try_sub(f)?.exact_divide(&x.try_mul(&y)?)?;
    let phi = q.compose(&[("y", &chi)])?;

    let x1 = TruncatedSeries::var(&["x"], "x", sys.clone(), n)?;
    let one = TruncatedSeries::one(&["x"], sys.clone(), n);
    let c_series = phi.mul_exact(&x1)?.try_sub(&one)?;

    let phi_f = phi.compose(&[("x", f)])?;
    let phi_x = phi.embed(&xy)?;
    let phi_y = phi.rename(&["y"])?.embed(&xy)?;
    let d_x = phi_f.try_sub(&phi_x)?;
    let t1 = phi_f.try_sub(&phi_y)?.exact_divide(&x)?;
    let t2 = d_x.exact_divide(&y)?;
    let t3 = phi_y.try_mul(&d_x)?;
    let t4 = phi_y.try_sub(&q)?.exact_divide(f)?;
    let b_series = t1.try_add(&t2)?.try_sub(&t3)?.try_add(&t4)?;

    let bundle = SeriesBundle { law: law.clone(), chi, q, phi, c_series, b_series };
    bundle.check_invariants()?;
    Ok(bundle)
}

/// Applies a ring map to every series of the bundle and re-checks the
/// invariants in the target ring.
pub fn specialize_bundle(bundle: &SeriesBundle, map: &RingMap) -> Result<SeriesBundle> {
    let out = SeriesBundle {
        law: bundle.law.specialize(map)?,
        chi: bundle.chi.map_coefficients(map)?,
        q: bundle.q.map_coefficients(map)?,
        phi: bundle.phi.map_coefficients(map)?,
        c_series: bundle.c_series.map_coefficients(map)?,
        b_series: bundle.b_series.map_coefficients(map)?,
    };
    out.check_invariants()?;
    Ok(out)
}
