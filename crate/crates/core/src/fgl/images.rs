use std::collections::BTreeMap;

use crate::algebra::{Exponents, GradedPolynomial, Poly, RingMap};
use crate::error::{Error, Result};

use super::law::{additive_law, multiplicative_law, universal_law, FormalGroupLaw};

/// Finds the ring map sending `source` to `target`, generator by generator.
///
/// A generator of weight `w` occurs linearly in the `x^w y` coefficient of
/// the source law with a nonzero integer slope; everything else in that
/// coefficient involves lighter generators, so the images can be solved in
/// order of weight. Every other coefficient is then checked.
pub fn solve_generator_images(source: &FormalGroupLaw, target: &FormalGroupLaw) -> Result<RingMap> {
    let src = source.system().clone();
    let tgt = target.system().clone();
    let mut order: Vec<usize> = (0..src.len()).collect();
    order.sort_by_key(|&g| src.weight(g));

    let mut images: BTreeMap<String, Poly> =
        src.symbols().map(|s| (s.to_string(), GradedPolynomial::zero(tgt.clone()))).collect();
    let mut solved = vec![false; src.len()];

    for g in order {
        let sym = src.symbols().nth(g).unwrap().to_string();
        let w = src.weight(g);
        let a = source.coefficient(w, 1)?;
        let unit = Exponents::unit(src.len(), g);
        let slope = a.coeff(&unit);
        if slope == 0.into() {
            return Err(Error::InconsistentSystem(format!("{sym} does not occur linearly in a_{w}1")));
        }
        let rest = &a - &Poly::monomial(src.clone(), unit, slope.clone());
        for e in rest.terms().keys() {
            if e.as_slice().iter().enumerate().any(|(h, &k)| k > 0 && !solved[h]) {
                return Err(Error::InconsistentSystem(format!(
                    "a_{w}1 involves generators not yet solved when solving {sym}"
                )));
            }
        }
        let partial = RingMap::new(src.clone(), tgt.clone(), images.clone())?;
        let goal = target.coefficient(w, 1)?;
        let rhs = &goal - &partial.apply(&rest)?;
        let img = rhs.div_scalar_exact(&slope).ok_or_else(|| {
            Error::InconsistentSystem(format!("image of {sym} would be ({rhs})/{slope}, not integral"))
        })?;
        images.insert(sym, img);
        solved[g] = true;
    }

    let map = RingMap::new(src, tgt, images)?;
    let through = source.order().min(target.order());
    for d in 2..=through {
        for i in 1..d {
            let lhs = map.apply(&source.coefficient(i, d - i)?)?;
            let rhs = target.coefficient(i, d - i)?;
            if lhs != rhs {
                return Err(Error::InconsistentSystem(format!("a_{i}{} maps to {lhs}, target law has {rhs}", d - i)));
            }
        }
    }
    Ok(map)
}

/// The K-theory orientation `u_i ↦ χ(P^i-type generator)·β^i`, computed by
/// matching the universal law with `x + y − βxy`.
pub fn ktheory_generator_images() -> Result<RingMap> {
    solve_generator_images(&universal_law(7)?, &multiplicative_law(7))
}

/// The Chow orientation; every generator maps to zero.
pub fn chow_generator_images() -> Result<RingMap> {
    solve_generator_images(&universal_law(7)?, &additive_law(7))
}
