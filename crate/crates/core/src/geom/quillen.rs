use crate::algebra::Poly;
use crate::error::{Error, Result};
use crate::fgl::{inverse_series, universal_law, FormalGroupLaw};
use crate::series::TruncatedSeries;

/// `π_* f(ξ)` for `π: P(V) → X` with `V` of rank `r = roots.len()`, by
/// Quillen's formula
///
/// ```text
/// π_* f(ξ) = Σ_i f(λ̄_i) / Π_{j≠i} (λ_j +F λ̄_i)
/// ```
///
/// `roots` are the Chern roots as nilpotent elements of a common base ring
/// (series with zero constant term); `f` lists the coefficients of a
/// polynomial with constant Lazard coefficients.
///
/// The sum is evaluated symbolically in independent variables `z_1..z_r`,
/// where it is a genuine power series, and only then are the roots
/// substituted.
pub fn quillen_pushforward(roots: &[TruncatedSeries], f: &[Poly]) -> Result<TruncatedSeries> {
    quillen_pushforward_with(&universal_law(7)?, roots, f)
}

pub fn quillen_pushforward_with(
    law: &FormalGroupLaw,
    roots: &[TruncatedSeries],
    f: &[Poly],
) -> Result<TruncatedSeries> {
    let Some(first) = roots.first() else {
        return Err(Error::InvalidInput("a projective bundle needs rank at least 1".into()));
    };
    for root in roots {
        first.check_compatible(root)?;
        if !root.constant_term().is_zero() {
            return Err(Error::NonNilpotentRoot);
        }
    }
    let kernel = symbolic_pushforward(law, roots.len(), f)?;
    let names = variables(roots.len());
    let args: Vec<(&str, &TruncatedSeries)> = names.iter().map(String::as_str).zip(roots).collect();
    kernel.compose(&args)
}

fn variables(r: usize) -> Vec<String> {
    (1..=r).map(|i| format!("z{i}")).collect()
}

/// Quillen's sum as a series in `z_1..z_r`.
///
/// Each denominator factor is `z_j +F z̄_i = (z_j − z_i)·U(z_j, z_i)` with `U`
/// a unit. Over the Vandermonde `V = Π_{a<b}(z_b − z_a)` the sum becomes
/// `Σ_i (−1)^i f(z̄_i) Π_{j≠i} U(z_j, z_i)^{-1} V_{−i} / V`, where `V_{−i}`
/// omits `z_i`; the numerator is divisible by `V` exactly.
pub fn symbolic_pushforward(law: &FormalGroupLaw, r: usize, f: &[Poly]) -> Result<TruncatedSeries> {
    let sys = law.system().clone();
    let n = law.order();
    let xy = ["x", "y"];
    let chi = inverse_series(law)?;
    let chi_y = chi.rename(&["y"])?.embed(&xy)?;
    let sum = law.series().compose(&[("y", &chi_y)])?;
    let x = TruncatedSeries::var(&xy, "x", sys.clone(), n)?;
    let y = TruncatedSeries::var(&xy, "y", sys.clone(), n)?;
    let unit = sum.exact_divide(&x.try_sub(&y)?)?;
    let unit_inv = unit.invert_unit()?;

    let names = variables(r);
    let zs: Vec<&str> = names.iter().map(String::as_str).collect();
    // Vandermonde factors are exact polynomials; give them room.
    let wide = n + (r * r) as u32;
    let vandermonde = |skip: Option<usize>| -> Result<TruncatedSeries> {
        let mut v = TruncatedSeries::one(&zs, sys.clone(), wide);
        for b in 0..r {
            for a in 0..b {
                if Some(a) == skip || Some(b) == skip {
                    continue;
                }
                let zb = TruncatedSeries::var(&zs, zs[b], sys.clone(), wide)?;
                let za = TruncatedSeries::var(&zs, zs[a], sys.clone(), wide)?;
                v = v.try_mul(&zb.try_sub(&za)?)?;
            }
        }
        Ok(v)
    };

    let mut numerator: Option<TruncatedSeries> = None;
    for i in 0..r {
        let chi_i = chi.rename(&[zs[i]])?.embed(&zs)?;
        let mut f_at = TruncatedSeries::zero(&zs, sys.clone(), n);
        let mut power = TruncatedSeries::one(&zs, sys.clone(), n);
        for c in f {
            f_at = f_at.try_add(&power.scale(c))?;
            power = power.try_mul(&chi_i)?;
        }
        let mut term = f_at;
        for j in (0..r).filter(|&j| j != i) {
            let u = unit_inv.rename(&[zs[j], zs[i]])?.embed(&zs)?;
            term = term.try_mul(&u)?;
        }
        let mut term = term.mul_exact(&vandermonde(Some(i))?)?;
        if i % 2 == 1 {
            term = term.neg();
        }
        numerator = Some(match numerator {
            None => term,
            Some(acc) => acc.try_add(&term)?,
        });
    }
    numerator.expect("r ≥ 1").exact_divide(&vandermonde(None)?)
}
