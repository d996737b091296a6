use num_rational::BigRational;

use super::TruncatedSeries;
use crate::algebra::{same_system, Coefficient, Exponents, GradedPolynomial};
use crate::error::{Error, Result};

impl<C: Coefficient> TruncatedSeries<C> {
    /// Multiplicative inverse of a series whose constant term is a unit of
    /// the scalar ring.
    pub fn invert_unit(&self) -> Result<Self> {
        let c0 = self.constant_term();
        if !c0.is_constant() {
            return Err(Error::NonUnitConstantTerm);
        }
        let inv = c0.constant_term().unit_inverse().ok_or(Error::NonUnitConstantTerm)?;
        let inv = GradedPolynomial::constant(self.system.clone(), inv);
        let vars = self.var_refs();
        let mut b = Self::constant(&vars, inv.clone(), self.order);
        for k in 1..=self.order {
            let prod = self.mul_to(&b, k);
            let fix: Vec<_> = prod.component(k).map(|(e, c)| (e.clone(), -&(c * &inv))).collect();
            for (e, c) in fix {
                b.add_to(e, &c);
            }
        }
        Ok(b)
    }

    /// Quotient `q` with `q·d = self`, known through
    /// `min(order self, order d) − valuation(d)`.
    ///
    /// Works upward in degree; inside a degree the largest remaining
    /// monomial is cancelled against the leading monomial of the lowest
    /// component of `d`. Anything that cannot be cancelled is an error.
    pub fn exact_divide(&self, d: &Self) -> Result<Self> {
        self.check_compatible(d)?;
        let v = d.valuation().ok_or_else(|| Error::DivisionNotExact("division by the zero series".into()))?;
        let n = self.order.min(d.order);
        if n < v {
            return Err(Error::DivisionNotExact(format!("divisor valuation {v} exceeds known order {n}")));
        }
        let (lead_e, lead_c) =
            d.component(v).last().map(|(e, c)| (e.clone(), c.clone())).expect("valuation component is nonempty");

        let vars = self.var_refs();
        let mut rem = self.truncate(n);
        let mut q = Self::zero(&vars, self.system.clone(), n - v);
        while let Some(k) = rem.valuation() {
            let (e, c) = rem.component(k).last().map(|(e, c)| (e.clone(), c.clone())).unwrap();
            let not_exact = || {
                Error::DivisionNotExact(format!(
                    "term ({c})*{e:?} is not a multiple of the divisor's leading term ({lead_c})*{lead_e:?}"
                ))
            };
            if k < v {
                return Err(not_exact());
            }
            let qe = e.checked_div(&lead_e).ok_or_else(not_exact)?;
            let qc = c.div_exact(&lead_c).ok_or_else(not_exact)?;
            for (de, dc) in &d.coeffs {
                if de.degree() + qe.degree() > n {
                    break;
                }
                rem.add_to(de.mul(&qe), &-&(dc * &qc));
            }
            q.add_to(qe, &qc);
        }
        Ok(q)
    }

    /// Substitutes series for variables.
    ///
    /// Every image must have zero constant term and all images must share
    /// one variable list, which becomes the result's. Variables of `self`
    /// without an image map to the target variable of the same name.
    pub fn compose(&self, args: &[(&str, &Self)]) -> Result<Self> {
        let (target_vars, target_system) = match args.first() {
            Some((_, s)) => (s.vars.clone(), s.system.clone()),
            None => (self.vars.clone(), self.system.clone()),
        };
        if !same_system(&target_system, &self.system) {
            return Err(Error::SystemMismatch(self.system.name().to_string(), target_system.name().to_string()));
        }
        for (name, s) in args {
            if s.vars != target_vars {
                return Err(Error::VariableMismatch(s.vars.clone(), target_vars.clone()));
            }
            if !same_system(&s.system, &self.system) {
                return Err(Error::SystemMismatch(self.system.name().to_string(), s.system.name().to_string()));
            }
            if !s.constant_term().is_zero() {
                return Err(Error::NonzeroConstantSubstitution);
            }
            self.var_index(name)?;
        }
        let tv: Vec<&str> = target_vars.iter().map(String::as_str).collect();
        let mut order = self.order;
        let mut images = Vec::with_capacity(self.vars.len());
        for v in &self.vars {
            match args.iter().find(|(name, _)| name == v) {
                Some((_, s)) => {
                    order = order.min(s.order);
                    images.push((*s).clone());
                }
                None => images.push(
                    Self::var(&tv, v, self.system.clone(), self.order)
                        .map_err(|_| Error::VariableMismatch(self.vars.clone(), target_vars.clone()))?,
                ),
            }
        }

        let mut powers: Vec<Vec<Self>> =
            images.iter().map(|_| vec![Self::one(&tv, self.system.clone(), order)]).collect();
        let mut out = Self::zero(&tv, self.system.clone(), order);
        for (e, c) in &self.coeffs {
            if e.degree() > order {
                break;
            }
            let mut term = Self::constant(&tv, c.clone(), order);
            for (i, &k) in e.as_slice().iter().enumerate() {
                if k == 0 {
                    continue;
                }
                while powers[i].len() <= k as usize {
                    let next = powers[i].last().unwrap().mul_to(&images[i], order);
                    powers[i].push(next);
                }
                term = term.mul_to(&powers[i][k as usize], order);
            }
            for (te, tc) in &term.coeffs {
                out.add_to(te.clone(), tc);
            }
        }
        Ok(out)
    }

    /// Compositional inverse of a one-variable series `x + O(x²)`.
    pub fn revert(&self) -> Result<Self> {
        if self.vars.len() != 1 {
            return Err(Error::NotReversible("only one-variable series revert".into()));
        }
        if !self.constant_term().is_zero() {
            return Err(Error::NotReversible("nonzero constant term".into()));
        }
        if !self.coeff(&[1]).is_one() {
            return Err(Error::NotReversible("coefficient of the variable is not 1".into()));
        }
        let v = self.vars[0].as_str();
        let mut b = Self::var(&[v], v, self.system.clone(), self.order)?;
        for k in 2..=self.order {
            let comp = self.compose(&[(v, &b)])?;
            let err = comp.coeff(&[k]);
            b.add_to(Exponents::new(vec![k]), &-&err);
        }
        Ok(b)
    }

    /// Partial derivative; the order drops by one.
    pub fn derivative(&self, var: &str) -> Result<Self> {
        let idx = self.var_index(var)?;
        let mut out = Self::zero(&self.var_refs(), self.system.clone(), self.order.saturating_sub(1));
        for (e, c) in &self.coeffs {
            let k = e.get(idx);
            if k == 0 {
                continue;
            }
            let mut ne = e.as_slice().to_vec();
            ne[idx] -= 1;
            out.add_to(Exponents::new(ne), &c.scale(&C::from_i64(k as i64)));
        }
        Ok(out)
    }
}

impl TruncatedSeries<BigRational> {
    /// Antiderivative with zero constant of integration; the order rises by one.
    pub fn integrate(&self, var: &str) -> Result<Self> {
        let idx = self.var_index(var)?;
        let mut out = Self::zero(&self.var_refs(), self.system.clone(), self.order + 1);
        for (e, c) in &self.coeffs {
            let mut ne = e.as_slice().to_vec();
            ne[idx] += 1;
            let k = BigRational::from_integer((ne[idx] as i64).into());
            out.add_to(Exponents::new(ne), &c.scale(&k.recip()));
        }
        Ok(out)
    }
}
