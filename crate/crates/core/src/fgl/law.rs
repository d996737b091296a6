use std::fmt;
use std::sync::Arc;

use crate::algebra::{Exponents, GeneratorSystem, Poly, RingMap};
use crate::error::{Error, Result};
use crate::series::TruncatedSeries;

use super::data::{coefficients, UNIVERSAL_DATA_DEGREE};

/// A two-variable formal group law `F(x, y)` together with the total degree
/// through which its coefficients are actually known.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FormalGroupLaw {
    series: TruncatedSeries,
    max_reliable_degree: u32,
}

impl FormalGroupLaw {
    /// Wraps a series in `(x, y)`. The series order is clamped to
    /// `max_reliable_degree` so no unknown tail can leak out.
    pub fn new(series: TruncatedSeries, max_reliable_degree: u32) -> Result<Self> {
        if series.vars() != ["x", "y"] {
            return Err(Error::VariableMismatch(series.vars().to_vec(), vec!["x".into(), "y".into()]));
        }
        let series = series.truncate(max_reliable_degree);
        Ok(FormalGroupLaw { series, max_reliable_degree })
    }

    pub fn series(&self) -> &TruncatedSeries {
        &self.series
    }

    pub fn system(&self) -> &Arc<GeneratorSystem> {
        self.series.system()
    }

    /// Truncation order of the stored series.
    pub fn order(&self) -> u32 {
        self.series.order()
    }

    pub fn max_reliable_degree(&self) -> u32 {
        self.max_reliable_degree
    }

    /// Coefficient of `x^i y^j`.
    pub fn coefficient(&self, i: u32, j: u32) -> Result<Poly> {
        if i + j > self.order() {
            return Err(Error::UnknownCoefficients(format!("a_{i}{j} lies beyond total degree {}", self.order())));
        }
        Ok(self.series.coeff(&[i, j]))
    }

    /// The law with `delta` added to the coefficients of `x^i y^j` and
    /// `x^j y^i`. Only meaningful for exercising the validators.
    pub fn perturbed(&self, i: u32, j: u32, delta: &Poly) -> Self {
        let mut s = self.series.clone();
        s.add_to(Exponents::new(vec![i, j]), delta);
        if i != j {
            s.add_to(Exponents::new(vec![j, i]), delta);
        }
        FormalGroupLaw { series: s, max_reliable_degree: self.max_reliable_degree }
    }

    /// Pushes every coefficient through `map`.
    pub fn specialize(&self, map: &RingMap) -> Result<Self> {
        Ok(FormalGroupLaw { series: self.series.map_coefficients(map)?, max_reliable_degree: self.max_reliable_degree })
    }
}

/// The universal law over the Lazard generators `u1..u5`.
///
/// Coefficients through total degree 6 are embedded; asking for order 7 is
/// allowed (the degree-7 terms simply are not claimed), anything beyond
/// needs data that does not exist here.
pub fn universal_law(order: u32) -> Result<FormalGroupLaw> {
    if order > UNIVERSAL_DATA_DEGREE + 1 {
        return Err(Error::UnknownCoefficients(format!(
            "universal law requested to order {order}; coefficients are known through total degree {UNIVERSAL_DATA_DEGREE}"
        )));
    }
    let lz = GeneratorSystem::lazard();
    let table = coefficients()?;
    let order = order.min(UNIVERSAL_DATA_DEGREE);
    let mut terms = vec![(vec![1, 0], Poly::one(lz.clone())), (vec![0, 1], Poly::one(lz.clone()))];
    for ((i, j), c) in table {
        terms.push((vec![i, j], c.clone()));
        if i != j {
            terms.push((vec![j, i], c));
        }
    }
    FormalGroupLaw::new(TruncatedSeries::from_terms(&["x", "y"], lz, order, terms), UNIVERSAL_DATA_DEGREE)
}

/// `x + y` over ℤ.
pub fn additive_law(order: u32) -> FormalGroupLaw {
    let e = GeneratorSystem::empty();
    let one = Poly::one(e.clone());
    let s = TruncatedSeries::from_terms(&["x", "y"], e, order, [(vec![1, 0], one.clone()), (vec![0, 1], one)]);
    FormalGroupLaw::new(s, order).expect("well-formed")
}

/// `x + y − βxy` over ℤ[β].
pub fn multiplicative_law(order: u32) -> FormalGroupLaw {
    let k = GeneratorSystem::kbeta();
    let one = Poly::one(k.clone());
    let beta = Poly::generator(k.clone(), "beta").unwrap();
    let s = TruncatedSeries::from_terms(
        &["x", "y"],
        k,
        order,
        [(vec![1, 0], one.clone()), (vec![0, 1], one), (vec![1, 1], -beta)],
    );
    FormalGroupLaw::new(s, order).expect("well-formed")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axiom {
    Unit,
    Symmetry,
    Associativity,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::Unit => "unit",
            Axiom::Symmetry => "symmetry",
            Axiom::Associativity => "associativity",
        })
    }
}

/// The first coefficient at which an axiom fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawFailure {
    pub axiom: Axiom,
    /// Total variable degree of the offending coefficient.
    pub degree: u32,
    pub monomial: Vec<u32>,
    pub residue: Poly,
}

impl LawFailure {
    /// Lazard weight of the residue: `degree − 1`, since `F` has combined
    /// degree 1.
    pub fn weight(&self) -> u32 {
        self.degree.saturating_sub(1)
    }
}

impl fmt::Display for LawFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} fails at degree {} (weight {}): coefficient of {:?} is {} instead of 0",
            self.axiom,
            self.degree,
            self.weight(),
            self.monomial,
            self.residue
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawReport {
    pub checked_through: u32,
    pub failures: Vec<LawFailure>,
}

impl LawReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Lowest-degree failure across all axioms.
    pub fn first_failure(&self) -> Option<&LawFailure> {
        self.failures.iter().min_by_key(|f| f.degree)
    }
}

fn first_nonzero(axiom: Axiom, s: &TruncatedSeries, through: u32) -> Option<LawFailure> {
    s.terms().iter().find(|(e, _)| e.degree() <= through).map(|(e, c)| LawFailure {
        axiom,
        degree: e.degree(),
        monomial: e.as_slice().to_vec(),
        residue: c.clone(),
    })
}

/// Checks `F(x,0) = x`, `F(x,y) = F(y,x)` and `F(F(x,y),z) = F(x,F(y,z))`
/// through total degree `min(order, max_reliable_degree)`.
pub fn validate_law(law: &FormalGroupLaw) -> LawReport {
    let through = law.order().min(law.max_reliable_degree);
    let f = law.series.truncate(through);
    let sys = law.system().clone();
    let mut failures = Vec::new();

    let x = TruncatedSeries::var(&["x", "y"], "x", sys.clone(), through).unwrap();
    let unit = f.set_zero("y").unwrap().try_sub(&x).unwrap();
    failures.extend(first_nonzero(Axiom::Unit, &unit, through));

    let swapped = f.rename(&["y", "x"]).unwrap().embed(&["x", "y"]).unwrap();
    let sym = f.try_sub(&swapped).unwrap();
    failures.extend(first_nonzero(Axiom::Symmetry, &sym, through));

    let xyz = ["x", "y", "z"];
    let f_xy = f.embed(&xyz).unwrap();
    let f_yz = f.rename(&["y", "z"]).unwrap().embed(&xyz).unwrap();
    let z = TruncatedSeries::var(&xyz, "z", sys.clone(), through).unwrap();
    let xv = TruncatedSeries::var(&xyz, "x", sys, through).unwrap();
    let left = f.compose(&[("x", &f_xy), ("y", &z)]).unwrap();
    let right = f.compose(&[("x", &xv), ("y", &f_yz)]).unwrap();
    let assoc = left.try_sub(&right).unwrap();
    failures.extend(first_nonzero(Axiom::Associativity, &assoc, through));

    LawReport { checked_through: through, failures }
}

/// Whether every coefficient of `F` has weight `i + j − 1`.
pub fn is_graded(law: &FormalGroupLaw) -> bool {
    law.series.is_combined_homogeneous(1)
}
