use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::coeff::Coefficient;
use super::monomial::Exponents;
use super::system::{same_system, GeneratorSystem};
use crate::error::{Error, Result};

/// Sparse polynomial in the generators of a [`GeneratorSystem`].
///
/// Zero coefficients are never stored, so structural equality is
/// mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GradedPolynomial<C: Coefficient = BigInt> {
    system: Arc<GeneratorSystem>,
    terms: BTreeMap<Exponents, C>,
}

/// Polynomial over ℚ; only the logarithm, reconstruction and basis code
/// works in this ring.
pub type RationalPolynomial = GradedPolynomial<BigRational>;

impl<C: Coefficient> GradedPolynomial<C> {
    pub fn zero(system: Arc<GeneratorSystem>) -> Self {
        GradedPolynomial { system, terms: BTreeMap::new() }
    }

    pub fn one(system: Arc<GeneratorSystem>) -> Self {
        Self::constant(system, C::one())
    }

    pub fn constant(system: Arc<GeneratorSystem>, c: C) -> Self {
        let len = system.len();
        Self::monomial(system, Exponents::zero(len), c)
    }

    pub fn from_i64(system: Arc<GeneratorSystem>, c: i64) -> Self {
        Self::constant(system, C::from_i64(c))
    }

    pub fn monomial(system: Arc<GeneratorSystem>, exps: Exponents, c: C) -> Self {
        assert_eq!(exps.len(), system.len(), "exponent vector length");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        GradedPolynomial { system, terms }
    }

    pub fn generator(system: Arc<GeneratorSystem>, symbol: &str) -> Result<Self> {
        let idx = system.index_of(symbol).ok_or_else(|| Error::InvalidInput(format!("unknown generator {symbol}")))?;
        let len = system.len();
        Ok(Self::monomial(system, Exponents::unit(len, idx), C::one()))
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, merging
    /// repeats and dropping zeros.
    pub fn from_terms(system: Arc<GeneratorSystem>, terms: impl IntoIterator<Item = (Exponents, C)>) -> Self {
        let mut p = Self::zero(system);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn system(&self) -> &Arc<GeneratorSystem> {
        &self.system
    }

    pub fn terms(&self) -> &BTreeMap<Exponents, C> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Same as [`is_zero`](Self::is_zero): no stored terms.
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.constant_term().is_one()
    }

    pub fn coeff(&self, exps: &Exponents) -> C {
        self.terms.get(exps).cloned().unwrap_or_else(C::zero)
    }

    pub fn constant_term(&self) -> C {
        self.coeff(&Exponents::zero(self.system.len()))
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Exponents::is_constant)
    }

    pub(crate) fn add_term(&mut self, exps: Exponents, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn check_system(&self, other: &Self) -> Result<()> {
        if same_system(&self.system, &other.system) {
            Ok(())
        } else {
            Err(Error::SystemMismatch(self.system.name().to_string(), other.system.name().to_string()))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_system(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_system(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_system(other)?;
        let mut out = Self::zero(self.system.clone());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(ea.mul(eb), ca.clone() * cb.clone());
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.system.clone());
        }
        GradedPolynomial {
            system: self.system.clone(),
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a.clone() * c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.system.clone());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Common weight of all monomials; `Some(0)` for zero.
    pub fn weight_of(&self) -> Option<u32> {
        let weights = self.system.weights();
        let mut it = self.terms.keys().map(|e| e.weighted_degree(&weights));
        let first = it.next().unwrap_or(0);
        it.all(|w| w == first).then_some(first)
    }

    /// True when every monomial has weight `w` (vacuously for zero).
    pub fn is_homogeneous_of(&self, w: u32) -> bool {
        let weights = self.system.weights();
        self.terms.keys().all(|e| e.weighted_degree(&weights) == w)
    }

    pub fn max_weight(&self) -> Option<u32> {
        let weights = self.system.weights();
        self.terms.keys().map(|e| e.weighted_degree(&weights)).max()
    }

    pub fn homogeneous_part(&self, w: u32) -> Self {
        let weights = self.system.weights();
        GradedPolynomial {
            system: self.system.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.weighted_degree(&weights) == w)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Coefficient of a generator in a linear position, i.e. the coefficient
    /// of the monomial consisting of that generator alone.
    pub fn linear_coeff(&self, symbol: &str) -> Option<C> {
        let idx = self.system.index_of(symbol)?;
        Some(self.coeff(&Exponents::unit(self.system.len(), idx)))
    }

    pub fn map_coeffs<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> GradedPolynomial<D> {
        GradedPolynomial::from_terms(self.system.clone(), self.terms.iter().map(|(e, c)| (e.clone(), f(c))))
    }

    /// Divides every coefficient by `c`; `None` unless all divisions are exact.
    pub fn div_scalar_exact(&self, c: &C) -> Option<Self> {
        let terms = self
            .terms
            .iter()
            .map(|(e, a)| a.div_exact(c).map(|q| (e.clone(), q)))
            .collect::<Option<BTreeMap<_, _>>>()?;
        Some(GradedPolynomial { system: self.system.clone(), terms })
    }

    /// Exact polynomial quotient `self / d` by leading-term elimination in
    /// the canonical order; `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if self.check_system(d).is_err() || d.is_zero() {
            return None;
        }
        if d.terms.len() == 1 {
            let (de, dc) = d.terms.iter().next().unwrap();
            let terms = self
                .terms
                .iter()
                .map(|(e, c)| Some((e.checked_div(de)?, c.div_exact(dc)?)))
                .collect::<Option<BTreeMap<_, _>>>()?;
            return Some(GradedPolynomial { system: self.system.clone(), terms });
        }
        let (lead_e, lead_c) = d.terms.iter().next_back().unwrap();
        let mut rem = self.clone();
        let mut quot = Self::zero(self.system.clone());
        while let Some((e, c)) = rem.terms.iter().next_back() {
            let qe = e.checked_div(lead_e)?;
            let qc = c.div_exact(lead_c)?;
            let step = Self::monomial(self.system.clone(), qe, qc);
            rem = &rem - &(&step * d);
            quot = &quot + &step;
        }
        Some(quot)
    }

    /// Re-homes the polynomial in an equal system (same generators) so that
    /// `Arc` identity does not matter to callers.
    pub fn with_system(&self, system: Arc<GeneratorSystem>) -> Result<Self> {
        if *system != *self.system {
            return Err(Error::SystemMismatch(self.system.name().to_string(), system.name().to_string()));
        }
        Ok(GradedPolynomial { system, terms: self.terms.clone() })
    }
}

impl GradedPolynomial<BigInt> {
    pub fn to_rational(&self) -> RationalPolynomial {
        self.map_coeffs(|c| BigRational::from_integer(c.clone()))
    }
}

impl GradedPolynomial<BigRational> {
    /// The integer polynomial if every coefficient is integral.
    pub fn to_integer(&self) -> Option<GradedPolynomial<BigInt>> {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| c.is_integer().then(|| (e.clone(), c.to_integer())))
            .collect::<Option<BTreeMap<_, _>>>()?;
        Some(GradedPolynomial { system: self.system.clone(), terms })
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<C: Coefficient> $trait<&GradedPolynomial<C>> for &GradedPolynomial<C> {
            type Output = GradedPolynomial<C>;
            fn $method(self, rhs: &GradedPolynomial<C>) -> GradedPolynomial<C> {
                self.$checked(rhs).expect("polynomial operands from different systems")
            }
        }
        impl<C: Coefficient> $trait<GradedPolynomial<C>> for GradedPolynomial<C> {
            type Output = GradedPolynomial<C>;
            fn $method(self, rhs: GradedPolynomial<C>) -> GradedPolynomial<C> {
                (&self).$method(&rhs)
            }
        }
        impl<C: Coefficient> $trait<&GradedPolynomial<C>> for GradedPolynomial<C> {
            type Output = GradedPolynomial<C>;
            fn $method(self, rhs: &GradedPolynomial<C>) -> GradedPolynomial<C> {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl<C: Coefficient> Neg for &GradedPolynomial<C> {
    type Output = GradedPolynomial<C>;
    fn neg(self) -> GradedPolynomial<C> {
        GradedPolynomial {
            system: self.system.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }
}

impl<C: Coefficient> Neg for GradedPolynomial<C> {
    type Output = GradedPolynomial<C>;
    fn neg(self) -> GradedPolynomial<C> {
        -&self
    }
}
