use std::collections::BTreeMap;
use std::sync::Arc;

use super::coeff::Coefficient;
use super::poly::GradedPolynomial;
use super::system::{same_system, GeneratorSystem};
use crate::error::{Error, Result};

/// Ring homomorphism between polynomial rings, given by generator images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingMap<C: Coefficient = num_bigint::BigInt> {
    source: Arc<GeneratorSystem>,
    target: Arc<GeneratorSystem>,
    images: BTreeMap<String, GradedPolynomial<C>>,
}

impl<C: Coefficient> RingMap<C> {
    /// Fails with `MissingImage` unless every source generator is mapped.
    pub fn new(
        source: Arc<GeneratorSystem>,
        target: Arc<GeneratorSystem>,
        images: BTreeMap<String, GradedPolynomial<C>>,
    ) -> Result<Self> {
        for sym in source.symbols() {
            let img = images.get(sym).ok_or_else(|| Error::MissingImage(sym.to_string()))?;
            if !same_system(img.system(), &target) {
                return Err(Error::SystemMismatch(img.system().name().to_string(), target.name().to_string()));
            }
        }
        Ok(RingMap { source, target, images })
    }

    pub fn identity(system: Arc<GeneratorSystem>) -> Self {
        let images = system
            .symbols()
            .map(|s| (s.to_string(), GradedPolynomial::generator(system.clone(), s).unwrap()))
            .collect();
        RingMap { source: system.clone(), target: system, images }
    }

    /// Every generator to zero (the Chow orientation on the Lazard ring).
    pub fn zero_map(source: Arc<GeneratorSystem>, target: Arc<GeneratorSystem>) -> Self {
        let images = source.symbols().map(|s| (s.to_string(), GradedPolynomial::zero(target.clone()))).collect();
        RingMap { source, target, images }
    }

    pub fn source(&self) -> &Arc<GeneratorSystem> {
        &self.source
    }

    pub fn target(&self) -> &Arc<GeneratorSystem> {
        &self.target
    }

    pub fn image(&self, symbol: &str) -> Option<&GradedPolynomial<C>> {
        self.images.get(symbol)
    }

    pub fn images(&self) -> &BTreeMap<String, GradedPolynomial<C>> {
        &self.images
    }

    /// Whether each image is homogeneous of its generator's weight.
    pub fn preserves_weights(&self) -> bool {
        self.source.symbols().enumerate().all(|(i, s)| self.images[s].is_homogeneous_of(self.source.weight(i)))
    }

    pub fn apply(&self, a: &GradedPolynomial<C>) -> Result<GradedPolynomial<C>> {
        if !same_system(a.system(), &self.source) {
            return Err(Error::SystemMismatch(a.system().name().to_string(), self.source.name().to_string()));
        }
        let imgs: Vec<&GradedPolynomial<C>> = self.source.symbols().map(|s| &self.images[s]).collect();
        // Powers are cached per generator since table entries reuse them heavily.
        let mut powers: Vec<Vec<GradedPolynomial<C>>> =
            imgs.iter().map(|_| vec![GradedPolynomial::one(self.target.clone())]).collect();
        let mut out = GradedPolynomial::zero(self.target.clone());
        for (e, c) in a.terms() {
            let mut term = GradedPolynomial::constant(self.target.clone(), c.clone());
            for (i, &k) in e.as_slice().iter().enumerate() {
                if k == 0 {
                    continue;
                }
                while powers[i].len() <= k as usize {
                    let next = powers[i].last().unwrap() * imgs[i];
                    powers[i].push(next);
                }
                term = &term * &powers[i][k as usize];
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &RingMap<C>) -> Result<RingMap<C>> {
        let images = self.images.iter().map(|(s, p)| Ok((s.clone(), other.apply(p)?))).collect::<Result<_>>()?;
        RingMap::new(self.source.clone(), other.target.clone(), images)
    }
}

/// Free-function form of [`RingMap::apply`] taking a bare image map.
pub fn substitute<C: Coefficient>(
    a: &GradedPolynomial<C>,
    target: Arc<GeneratorSystem>,
    images: &BTreeMap<String, GradedPolynomial<C>>,
) -> Result<GradedPolynomial<C>> {
    RingMap::new(a.system().clone(), target, images.clone())?.apply(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn chow_map_kills_classes() {
        let lz = GeneratorSystem::lazard();
        let m06: GradedPolynomial = crate::algebra::parse_poly(&lz, "31u1^3 - 30u1u2 + 17u3").unwrap();
        let chow = RingMap::zero_map(lz, GeneratorSystem::empty());
        assert!(chow.apply(&m06).unwrap().is_zero());
    }

    #[test]
    fn missing_image() {
        let lz = GeneratorSystem::lazard();
        let r = RingMap::<BigInt>::new(lz, GeneratorSystem::empty(), BTreeMap::new());
        assert!(matches!(r, Err(Error::MissingImage(s)) if s == "u1"));
    }

    #[test]
    fn identity_is_identity() {
        let lz = GeneratorSystem::lazard();
        let a: GradedPolynomial = crate::algebra::parse_poly(&lz, "u1^2 - u2 + 7").unwrap();
        assert_eq!(RingMap::identity(lz).apply(&a).unwrap(), a);
    }
}
