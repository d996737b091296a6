use std::fmt;

use num_bigint::BigInt;

use crate::algebra::{Exponents, GeneratorSystem, Poly, RingMap};
use crate::error::{Error, Result};
use crate::fgl::{chow_generator_images, derive_bundle, ktheory_generator_images, universal_law};
use crate::series::TruncatedSeries;

use super::quillen::quillen_pushforward;
use super::ring::{projective_space_class, ProjectiveSpaceRing, MAX_WEIGHT};

/// `[P_{P^m}(L_1 ⊕ ⋯ ⊕ L_r)]` where each `L_k` is `O(1)` (twist 1) or `O` (twist 0).
pub fn projective_bundle_over_pm(m: u32, twists: &[u32]) -> Result<Poly> {
    if twists.is_empty() {
        return Err(Error::InvalidInput("a projective bundle needs at least one summand".into()));
    }
    if let Some(t) = twists.iter().find(|&&t| t > 1) {
        // Twists beyond 1 need the n-series [t]_F(h); not implemented.
        return Err(Error::InvalidInput(format!("twist {t} is not supported; use 0 or 1")));
    }
    let weight = m + twists.len() as u32 - 1;
    if weight > MAX_WEIGHT {
        return Err(Error::UnknownCoefficients(format!(
            "a bundle of dimension {weight} is beyond weight {MAX_WEIGHT}"
        )));
    }
    let ring = ProjectiveSpaceRing::new(m);
    let roots: Vec<TruncatedSeries> =
        twists.iter().map(|&t| if t == 1 { ring.hyperplane() } else { ring.zero() }).collect();
    let one = Poly::one(GeneratorSystem::lazard());
    ring.integrate(&quillen_pushforward(&roots, &[one])?)
}

/// `[Bl_pt P^m]`. With a point as centre the blow-up relation collapses to
/// `[P_{P^{m−1}}(O(1) ⊕ O)]`.
pub fn blowup_point_class(m: u32) -> Result<Poly> {
    if !(2..=MAX_WEIGHT).contains(&m) {
        return Err(Error::InvalidInput(format!("blow-up of P^{m} is supported for 2 ≤ m ≤ {MAX_WEIGHT}")));
    }
    projective_bundle_over_pm(m - 1, &[1, 0])
}

/// The Milnor hypersurface `H_{m,n} ⊂ P^m × P^n` of bidegree (1,1):
/// `[P^m][P^{n−1}] + [P^{m−1}][P^n] + Σ_{i,j≥1} a_ij [P^{m−i}][P^{n−j}]`.
pub fn milnor_class(m: u32, n: u32) -> Result<Poly> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidInput("Milnor hypersurfaces need m, n ≥ 1".into()));
    }
    if m + n - 1 > MAX_WEIGHT {
        return Err(Error::UnknownCoefficients(format!("H_{m},{n} has dimension above {MAX_WEIGHT}")));
    }
    let law = universal_law(7)?;
    let p = projective_space_class;
    let mut acc = &p(m)? * &p(n - 1)? + &p(m - 1)? * &p(n)?;
    for i in 1..=m {
        for j in 1..=n {
            let a = law.coefficient(i, j)?;
            if !a.is_zero() {
                acc = acc + &(&a * &p(m - i)?) * &p(n - j)?;
            }
        }
    }
    Ok(acc)
}

/// The `a_33 − a_51 − a_42` combination that isolates `u5`, with its images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct U5Report {
    pub combination: Poly,
    pub u5_coefficient: BigInt,
    pub ktheory_image: Poly,
    pub chow_image: Poly,
}

impl fmt::Display for U5Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "a33 - a51 - a42 = {}", self.combination)?;
        writeln!(f, "coefficient of u5: {}", self.u5_coefficient)?;
        writeln!(f, "K-theory image: {}", self.ktheory_image)?;
        write!(f, "Chow image: {}", self.chow_image)
    }
}

pub fn u5_column_check() -> Result<U5Report> {
    let law = universal_law(7)?;
    let combination = law.coefficient(3, 3)? - law.coefficient(5, 1)? - law.coefficient(4, 2)?;
    let lz = GeneratorSystem::lazard();
    let u5 = Exponents::unit(lz.len(), lz.index_of("u5").expect("u5 is a Lazard generator"));
    Ok(U5Report {
        u5_coefficient: combination.coeff(&u5),
        ktheory_image: ktheory_generator_images()?.apply(&combination)?,
        chow_image: chow_generator_images()?.apply(&combination)?,
        combination,
    })
}

/// `φ(x)² − (2φ(x) − q(x, 0) − u1)/x`: the three-root Quillen sum with two
/// roots set to zero.
pub fn three_root_series() -> Result<TruncatedSeries> {
    let bundle = derive_bundle(&universal_law(7)?)?;
    let sys = bundle.phi.system().clone();
    let n = bundle.q.order();
    let x = TruncatedSeries::var(&["x"], "x", sys.clone(), n)?;
    let zero = TruncatedSeries::zero(&["x"], sys.clone(), n);
    let q_x0 = bundle.q.compose(&[("x", &x), ("y", &zero)])?;
    let u1 = TruncatedSeries::constant(&["x"], bundle.p1(), n);
    let inner = bundle.phi.scale(&Poly::from_i64(sys.clone(), 2)).try_sub(&q_x0)?.try_sub(&u1)?;
    let divided = inner.exact_divide(&x.assume_exact_to(n + 1))?;
    bundle.phi.try_mul(&bundle.phi)?.try_sub(&divided)
}

/// Images of a variety class under the Chow and K-theory orientations.
pub fn specializations(class: &Poly) -> Result<(Poly, Poly)> {
    let chow: RingMap = chow_generator_images()?;
    let k: RingMap = ktheory_generator_images()?;
    Ok((chow.apply(class)?, k.apply(class)?))
}
