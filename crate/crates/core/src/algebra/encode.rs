//! Text and JSON forms of [`GradedPolynomial`].

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::coeff::Coefficient;
use super::monomial::{write_monomial, Exponents};
use super::poly::GradedPolynomial;
use super::system::GeneratorSystem;
use crate::error::{Error, Result};

/// Renders `c * mono` terms as `2898*u1^5 - 4063*u1^3*u2 + 461*u5`, largest
/// monomial first. Shared with the series printer.
pub(crate) fn render_terms<'a, C: Coefficient>(
    terms: impl Iterator<Item = (&'a Exponents, &'a C)>,
    symbols: &[&str],
) -> String {
    let mut out = String::new();
    for (e, c) in terms {
        let neg = c.is_negative();
        let abs = if neg { -c.clone() } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mut mono = String::new();
        write_monomial(&mut mono, e, symbols.iter());
        if mono.is_empty() {
            out.push_str(&abs.encode());
        } else {
            if !abs.is_one() {
                out.push_str(&abs.encode());
                out.push('*');
            }
            out.push_str(&mono);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl<C: Coefficient> fmt::Display for GradedPolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let symbols: Vec<&str> = self.system().symbols().collect();
        f.write_str(&render_terms(self.terms().iter().rev(), &symbols))
    }
}

impl<C: Coefficient> fmt::Debug for GradedPolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.system().name(), self)
    }
}

/// Parses `4u1^2 - 3u2`, `4*u1^2 - 3*u2`, `45/2*u1^3` and similar.
///
/// Adjacent generator symbols may be juxtaposed (`u1u2`); the tokenizer
/// takes the longest matching symbol at each step.
pub fn parse_poly<C: Coefficient>(system: &Arc<GeneratorSystem>, text: &str) -> Result<GradedPolynomial<C>> {
    let mut symbols: Vec<(usize, &str)> = system.symbols().enumerate().collect();
    symbols.sort_by_key(|(_, s)| std::cmp::Reverse(s.len()));

    let s: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    let err = |msg: &str| Error::Parse(format!("{msg} in {text:?}"));
    let mut pos = 0;
    let mut out = GradedPolynomial::zero(system.clone());
    if s.is_empty() {
        return Err(err("empty polynomial"));
    }

    let read_int = |pos: &mut usize| -> Option<String> {
        let start = *pos;
        while *pos < s.len() && s[*pos].is_ascii_digit() {
            *pos += 1;
        }
        (*pos > start).then(|| s[start..*pos].iter().collect())
    };

    while pos < s.len() {
        let mut sign = C::one();
        let mut saw_sign = false;
        while pos < s.len() && (s[pos] == '+' || s[pos] == '-') {
            if s[pos] == '-' {
                sign = -sign;
            }
            saw_sign = true;
            pos += 1;
        }
        if pos > 0 && !saw_sign {
            return Err(err("expected + or -"));
        }

        let mut coeff = C::one();
        let mut have_coeff = false;
        if let Some(num) = read_int(&mut pos) {
            let mut lit = num;
            if pos < s.len() && s[pos] == '/' {
                pos += 1;
                let den = read_int(&mut pos).ok_or_else(|| err("bad fraction"))?;
                lit = format!("{lit}/{den}");
            }
            coeff = C::decode(&lit).ok_or_else(|| err("coefficient not in ring"))?;
            have_coeff = true;
        }

        let mut exps = vec![0u32; system.len()];
        let mut have_factor = false;
        loop {
            let mut p = pos;
            if (have_coeff || have_factor) && p < s.len() && s[p] == '*' {
                p += 1;
            }
            let rest: String = s[p..].iter().collect();
            let Some(&(idx, sym)) = symbols.iter().find(|(_, sym)| rest.starts_with(sym)) else {
                if p != pos {
                    return Err(err("dangling *"));
                }
                break;
            };
            p += sym.chars().count();
            let mut k = 1;
            if p < s.len() && s[p] == '^' {
                p += 1;
                k = read_int(&mut p).and_then(|d| d.parse().ok()).ok_or_else(|| err("bad exponent"))?;
            }
            exps[idx] += k;
            have_factor = true;
            pos = p;
        }
        if !have_coeff && !have_factor {
            return Err(err("expected a term"));
        }
        out.add_term(Exponents::new(exps), sign * coeff);
    }
    Ok(out)
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exp: Vec<u32>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    system: String,
    terms: Vec<TermJson>,
}

impl<C: Coefficient> GradedPolynomial<C> {
    /// `{"system":…, "terms":[{"exp":[…],"coeff":"…"}]}`, terms listed in
    /// the same order as the text rendering (largest monomial first).
    pub fn to_json(&self) -> serde_json::Value {
        let doc = PolyJson {
            system: self.system().name().to_string(),
            terms: self
                .terms()
                .iter()
                .rev()
                .map(|(e, c)| TermJson { exp: e.as_slice().to_vec(), coeff: c.encode() })
                .collect(),
        };
        serde_json::to_value(doc).expect("plain data serializes")
    }

    /// Decodes against a built-in system named in the document.
    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let name = v.get("system").and_then(|s| s.as_str()).ok_or_else(|| Error::Parse("missing system".into()))?;
        let system = GeneratorSystem::builtin(name).ok_or_else(|| Error::Parse(format!("unknown system {name}")))?;
        Self::from_json_in(&system, v)
    }

    pub fn from_json_in(system: &Arc<GeneratorSystem>, v: &serde_json::Value) -> Result<Self> {
        let doc: PolyJson = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        if doc.system != system.name() {
            return Err(Error::SystemMismatch(doc.system, system.name().to_string()));
        }
        let mut out = Self::zero(system.clone());
        for t in doc.terms {
            if t.exp.len() != system.len() {
                return Err(Error::Parse(format!("exponent vector {:?} has wrong length", t.exp)));
            }
            let c = C::decode(&t.coeff).ok_or_else(|| Error::Parse(format!("bad coefficient {:?}", t.coeff)))?;
            if c.is_zero() {
                return Err(Error::Parse("zero coefficient stored".into()));
            }
            out.add_term(Exponents::new(t.exp), c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn lz() -> Arc<GeneratorSystem> {
        GeneratorSystem::lazard()
    }

    #[test]
    fn renders_in_printed_order() {
        let p: GradedPolynomial =
            parse_poly(&lz(), "461u5 - 385u1u4 - 1204u2u3 + 2765u1^2u3 + 2012u1u2^2 - 4063u1^3u2 + 2898u1^5").unwrap();
        assert_eq!(
            p.to_string(),
            "2898*u1^5 - 4063*u1^3*u2 + 2012*u1*u2^2 + 2765*u1^2*u3 - 1204*u2*u3 - 385*u1*u4 + 461*u5"
        );
    }

    #[test]
    fn parse_variants() {
        let a: GradedPolynomial = parse_poly(&lz(), "4*u1^2 - 3*u2").unwrap();
        let b: GradedPolynomial = parse_poly(&lz(), "-3u2+4u1^2").unwrap();
        assert_eq!(a, b);
        assert_eq!(parse_poly::<BigInt>(&lz(), "-u1").unwrap().to_string(), "-u1");
        assert_eq!(parse_poly::<BigInt>(&lz(), "0").unwrap().to_string(), "0");
        assert!(parse_poly::<BigInt>(&lz(), "u9").is_err());
        assert!(parse_poly::<BigInt>(&lz(), "1/2u1").is_err());
        let half: GradedPolynomial<BigRational> = parse_poly(&lz(), "45/2*u1^3").unwrap();
        assert_eq!(half.to_string(), "45/2*u1^3");
    }

    #[test]
    fn json_round_trip() {
        let p: GradedPolynomial = parse_poly(&lz(), "31u1^3 - 30u1u2 + 17u3").unwrap();
        let v = p.to_json();
        assert_eq!(v["terms"][0]["coeff"], "31");
        assert_eq!(GradedPolynomial::<BigInt>::from_json(&v).unwrap(), p);
        let q: GradedPolynomial<BigRational> = parse_poly(&lz(), "-17/2*u3").unwrap();
        assert_eq!(q.to_json()["terms"][0]["coeff"], "-17/2");
        assert_eq!(GradedPolynomial::<BigRational>::from_json(&q.to_json()).unwrap(), q);
    }
}
