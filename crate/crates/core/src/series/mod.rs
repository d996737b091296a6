//! Truncated multivariate power series with polynomial coefficients.
//!
//! A series of order `N` knows every coefficient of total variable degree
//! `≤ N` and nothing beyond. Binary operations keep the smaller order;
//! divisions by series with zero constant term lower it.

mod encode;
mod ops;

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::algebra::{same_system, Coefficient, Exponents, GeneratorSystem, GradedPolynomial, RingMap};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries<C: Coefficient = BigInt> {
    vars: Vec<String>,
    system: Arc<GeneratorSystem>,
    order: u32,
    coeffs: BTreeMap<Exponents, GradedPolynomial<C>>,
}

pub type RationalSeries = TruncatedSeries<BigRational>;

impl<C: Coefficient> TruncatedSeries<C> {
    pub fn zero(vars: &[&str], system: Arc<GeneratorSystem>, order: u32) -> Self {
        TruncatedSeries { vars: vars.iter().map(|s| s.to_string()).collect(), system, order, coeffs: BTreeMap::new() }
    }

    pub fn one(vars: &[&str], system: Arc<GeneratorSystem>, order: u32) -> Self {
        let p = GradedPolynomial::one(system.clone());
        Self::constant(vars, p, order)
    }

    pub fn constant(vars: &[&str], c: GradedPolynomial<C>, order: u32) -> Self {
        let mut s = Self::zero(vars, c.system().clone(), order);
        s.insert(Exponents::zero(vars.len()), c);
        s
    }

    /// The series consisting of one variable.
    pub fn var(vars: &[&str], name: &str, system: Arc<GeneratorSystem>, order: u32) -> Result<Self> {
        let idx = vars
            .iter()
            .position(|v| *v == name)
            .ok_or_else(|| Error::InvalidInput(format!("unknown variable {name}")))?;
        let mut s = Self::zero(vars, system.clone(), order);
        s.insert(Exponents::unit(vars.len(), idx), GradedPolynomial::one(system));
        Ok(s)
    }

    pub fn from_terms(
        vars: &[&str],
        system: Arc<GeneratorSystem>,
        order: u32,
        terms: impl IntoIterator<Item = (Vec<u32>, GradedPolynomial<C>)>,
    ) -> Self {
        let mut s = Self::zero(vars, system, order);
        for (e, c) in terms {
            s.add_to(Exponents::new(e), &c);
        }
        s
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_refs(&self) -> Vec<&str> {
        self.vars.iter().map(String::as_str).collect()
    }

    pub fn system(&self) -> &Arc<GeneratorSystem> {
        &self.system
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn terms(&self) -> &BTreeMap<Exponents, GradedPolynomial<C>> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> GradedPolynomial<C> {
        self.coeffs
            .get(&Exponents::new(exps.to_vec()))
            .cloned()
            .unwrap_or_else(|| GradedPolynomial::zero(self.system.clone()))
    }

    pub fn constant_term(&self) -> GradedPolynomial<C> {
        self.coeff(&vec![0; self.vars.len()])
    }

    /// Lowest total degree carrying a nonzero coefficient.
    pub fn valuation(&self) -> Option<u32> {
        self.coeffs.keys().next().map(Exponents::degree)
    }

    /// Terms of total degree exactly `k`.
    pub fn component(&self, k: u32) -> impl Iterator<Item = (&Exponents, &GradedPolynomial<C>)> {
        self.coeffs.iter().filter(move |(e, _)| e.degree() == k)
    }

    fn insert(&mut self, e: Exponents, c: GradedPolynomial<C>) {
        if e.degree() <= self.order && !c.is_zero() {
            self.coeffs.insert(e, c);
        }
    }

    pub(crate) fn add_to(&mut self, e: Exponents, c: &GradedPolynomial<C>) {
        if e.degree() > self.order || c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&e) {
            Some(old) => {
                let sum = &*old + c;
                if sum.is_zero() {
                    self.coeffs.remove(&e);
                } else {
                    *old = sum;
                }
            }
            None => {
                self.coeffs.insert(e, c.clone());
            }
        }
    }

    /// Drops everything above degree `order` (never raises the order).
    pub fn truncate(&self, order: u32) -> Self {
        let order = order.min(self.order);
        TruncatedSeries {
            vars: self.vars.clone(),
            system: self.system.clone(),
            order,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(e, _)| e.degree() <= order)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Same terms, higher claimed order: only valid when the caller knows
    /// the series is exact (e.g. a polynomial law).
    pub fn assume_exact_to(&self, order: u32) -> Self {
        let mut s = self.clone();
        s.order = order.max(self.order);
        s
    }

    pub(crate) fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::VariableMismatch(self.vars.clone(), other.vars.clone()));
        }
        if !same_system(&self.system, &other.system) {
            return Err(Error::SystemMismatch(self.system.name().to_string(), other.system.name().to_string()));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.truncate(other.order);
        for (e, c) in &other.coeffs {
            out.add_to(e.clone(), c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.truncate(other.order);
        for (e, c) in &other.coeffs {
            out.add_to(e.clone(), &-c);
        }
        Ok(out)
    }

    /// Product truncated to the smaller of the two orders.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let order = self.order.min(other.order);
        Ok(self.mul_to(other, order))
    }

    /// Product with `p` treated as exact (a polynomial with no unknown
    /// tail). The result is known through `order + valuation(p)`.
    pub fn mul_exact(&self, p: &Self) -> Result<Self> {
        self.check_compatible(p)?;
        let Some(v) = p.valuation() else {
            return Ok(Self::zero(&self.var_refs(), self.system.clone(), self.order));
        };
        Ok(self.mul_to(p, self.order + v))
    }

    fn mul_to(&self, other: &Self, order: u32) -> Self {
        let mut out = Self::zero(&self.var_refs(), self.system.clone(), order);
        for (ea, ca) in &self.coeffs {
            let da = ea.degree();
            if da > order {
                break;
            }
            for (eb, cb) in &other.coeffs {
                if da + eb.degree() > order {
                    break;
                }
                out.add_to(ea.mul(eb), &(ca * cb));
            }
        }
        out
    }

    pub fn scale(&self, c: &GradedPolynomial<C>) -> Self {
        let mut out = Self::zero(&self.var_refs(), self.system.clone(), self.order);
        for (e, a) in &self.coeffs {
            out.insert(e.clone(), a * c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.coeffs.values_mut() {
            *c = -&*c;
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.var_refs(), self.system.clone(), self.order);
        for _ in 0..k {
            acc = acc.try_mul(self).expect("same ring");
        }
        acc
    }

    /// Multiplies by the monomial `var^k` exactly (the order rises by `k`).
    pub fn shift(&self, var: &str, k: u32) -> Result<Self> {
        let idx = self.var_index(var)?;
        let mut out = Self::zero(&self.var_refs(), self.system.clone(), self.order + k);
        let step = Exponents::unit(self.vars.len(), idx);
        for (e, c) in &self.coeffs {
            let mut ee = e.clone();
            for _ in 0..k {
                ee = ee.mul(&step);
            }
            out.insert(ee, c.clone());
        }
        Ok(out)
    }

    pub(crate) fn var_index(&self, var: &str) -> Result<usize> {
        self.vars.iter().position(|v| v == var).ok_or_else(|| Error::InvalidInput(format!("unknown variable {var}")))
    }

    /// Sets one variable to zero, keeping the variable list.
    pub fn set_zero(&self, var: &str) -> Result<Self> {
        let idx = self.var_index(var)?;
        let mut out = self.clone();
        out.coeffs.retain(|e, _| e.get(idx) == 0);
        Ok(out)
    }

    /// Re-expresses the series over a variable list containing all of the
    /// current variables (by name).
    pub fn embed(&self, vars: &[&str]) -> Result<Self> {
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| {
                vars.iter()
                    .position(|w| w == v)
                    .ok_or_else(|| Error::VariableMismatch(self.vars.clone(), to_owned(vars)))
            })
            .collect::<Result<_>>()?;
        let mut out = Self::zero(vars, self.system.clone(), self.order);
        for (e, c) in &self.coeffs {
            let mut ne = vec![0; vars.len()];
            for (i, &k) in e.as_slice().iter().enumerate() {
                ne[map[i]] = k;
            }
            out.insert(Exponents::new(ne), c.clone());
        }
        Ok(out)
    }

    /// Renames variables positionally.
    pub fn rename(&self, vars: &[&str]) -> Result<Self> {
        if vars.len() != self.vars.len() {
            return Err(Error::VariableMismatch(self.vars.clone(), to_owned(vars)));
        }
        let mut out = self.clone();
        out.vars = to_owned(vars);
        Ok(out)
    }

    /// Applies a ring map to every coefficient.
    pub fn map_coefficients(&self, map: &RingMap<C>) -> Result<Self> {
        let mut out = Self::zero(&self.var_refs(), map.target().clone(), self.order);
        for (e, c) in &self.coeffs {
            out.insert(e.clone(), map.apply(c)?);
        }
        Ok(out)
    }

    pub fn map_coeffs<D: Coefficient>(
        &self,
        f: impl Fn(&GradedPolynomial<C>) -> GradedPolynomial<D>,
    ) -> TruncatedSeries<D> {
        let mut out = TruncatedSeries::zero(&self.var_refs(), self.system.clone(), self.order);
        for (e, c) in &self.coeffs {
            out.insert(e.clone(), f(c));
        }
        out
    }

    /// Common value of (variable degree) − (coefficient weight) over all
    /// terms; `None` for zero, inhomogeneous coefficients or mixed values.
    pub fn combined_degree(&self) -> Option<i64> {
        let mut found = None;
        for (e, c) in &self.coeffs {
            let w = c.weight_of()? as i64;
            let d = e.degree() as i64 - w;
            match found {
                None => found = Some(d),
                Some(prev) if prev != d => return None,
                _ => {}
            }
        }
        found
    }

    /// Homogeneity test that accepts the zero series.
    pub fn is_combined_homogeneous(&self, degree: i64) -> bool {
        self.is_zero() || self.combined_degree() == Some(degree)
    }

    /// Equality of the coefficients both series know.
    pub fn agrees_with(&self, other: &Self) -> bool {
        let n = self.order.min(other.order);
        self.vars == other.vars && self.truncate(n).coeffs == other.truncate(n).coeffs
    }
}

impl TruncatedSeries<BigInt> {
    pub fn to_rational(&self) -> RationalSeries {
        self.map_coeffs(|c| c.to_rational())
    }
}

impl TruncatedSeries<BigRational> {
    pub fn to_integer(&self) -> Option<TruncatedSeries<BigInt>> {
        let mut out = TruncatedSeries::zero(&self.var_refs(), self.system.clone(), self.order);
        for (e, c) in &self.coeffs {
            out.insert(e.clone(), c.to_integer()?);
        }
        Some(out)
    }
}

fn to_owned(vars: &[&str]) -> Vec<String> {
    vars.iter().map(|s| s.to_string()).collect()
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<C: Coefficient> std::ops::$trait<&TruncatedSeries<C>> for &TruncatedSeries<C> {
            type Output = TruncatedSeries<C>;
            fn $method(self, rhs: &TruncatedSeries<C>) -> TruncatedSeries<C> {
                self.$checked(rhs).expect("incompatible series operands")
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

#[cfg(test)]
mod tests;
