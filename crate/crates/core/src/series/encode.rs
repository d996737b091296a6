use std::fmt;

use serde::{Deserialize, Serialize};

use super::TruncatedSeries;
use crate::algebra::{render_terms, write_monomial, Coefficient, Exponents, GeneratorSystem, GradedPolynomial};
use crate::error::{Error, Result};

impl<C: Coefficient> fmt::Display for TruncatedSeries<C> {
    /// `u1 + (u1^3 - u1*u2 + u3)*x^2 + ...`: ascending degree, and within
    /// a degree the earlier variables' powers first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let symbols: Vec<&str> = self.system.symbols().collect();
        let mut degrees: Vec<u32> = self.coeffs.keys().map(Exponents::degree).collect();
        degrees.dedup();
        let mut out = String::new();
        for k in degrees {
            let comp: Vec<_> = self.component(k).collect();
            for (e, c) in comp.into_iter().rev() {
                let mut vm = String::new();
                write_monomial(&mut vm, e, self.vars.iter());
                let single = c.len() == 1;
                let body = if single {
                    let (ce, cc) = c.terms().iter().next().unwrap();
                    let mut t = render_terms(std::iter::once((ce, cc)), &symbols);
                    let neg = t.starts_with('-');
                    if neg {
                        t.remove(0);
                    }
                    if !vm.is_empty() {
                        if t == "1" {
                            t = vm;
                        } else {
                            t = format!("{t}*{vm}");
                        }
                    }
                    (neg, t)
                } else if vm.is_empty() && out.is_empty() {
                    (false, c.to_string())
                } else if vm.is_empty() {
                    (false, format!("({c})"))
                } else {
                    (false, format!("({c})*{vm}"))
                };
                match (out.is_empty(), body.0) {
                    (true, true) => out.push('-'),
                    (true, false) => {}
                    (false, true) => out.push_str(" - "),
                    (false, false) => out.push_str(" + "),
                }
                out.push_str(&body.1);
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out.push_str(" + ...");
        f.write_str(&out)
    }
}

impl<C: Coefficient> fmt::Debug for TruncatedSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [order {} in {:?}]", self, self.order, self.vars)
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesTermJson {
    exp: Vec<u32>,
    coeff: serde_json::Value,
}

#[derive(Serialize, Deserialize)]
struct SeriesJson {
    variables: Vec<String>,
    order: u32,
    system: String,
    terms: Vec<SeriesTermJson>,
}

impl<C: Coefficient> TruncatedSeries<C> {
    /// `{"variables":[…],"order":N,"system":…,"terms":[{"exp":[…],"coeff":<polynomial>}]}`
    /// with terms in ascending canonical order.
    pub fn to_json(&self) -> serde_json::Value {
        let doc = SeriesJson {
            variables: self.vars.clone(),
            order: self.order,
            system: self.system.name().to_string(),
            terms: self
                .coeffs
                .iter()
                .map(|(e, c)| SeriesTermJson { exp: e.as_slice().to_vec(), coeff: c.to_json() })
                .collect(),
        };
        serde_json::to_value(doc).expect("plain data serializes")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let doc: SeriesJson = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let system = GeneratorSystem::builtin(&doc.system)
            .ok_or_else(|| Error::Parse(format!("unknown system {}", doc.system)))?;
        let vars: Vec<&str> = doc.variables.iter().map(String::as_str).collect();
        let mut s = Self::zero(&vars, system.clone(), doc.order);
        for t in doc.terms {
            if t.exp.len() != vars.len() || t.exp.iter().sum::<u32>() > doc.order {
                return Err(Error::Parse(format!("bad exponent vector {:?}", t.exp)));
            }
            let c = GradedPolynomial::from_json_in(&system, &t.coeff)?;
            s.add_to(Exponents::new(t.exp), &c);
        }
        Ok(s)
    }
}
