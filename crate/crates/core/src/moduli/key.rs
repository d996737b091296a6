use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde_json::{json, Value};

use crate::algebra::GeneratorSystem;
use crate::error::{Error, Result};

/// The cohomology theory an intersection number lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Theory {
    /// Algebraic cobordism, valued in the Lazard ring `ℤ[u1, …, u5]`.
    Universal,
    /// The Chow ring; values are integers.
    Chow,
    /// K-theory with the Bott element `β`.
    KTheory,
}

impl Theory {
    pub const ALL: [Theory; 3] = [Theory::Universal, Theory::Chow, Theory::KTheory];

    pub fn name(self) -> &'static str {
        match self {
            Theory::Universal => "universal",
            Theory::Chow => "chow",
            Theory::KTheory => "ktheory",
        }
    }

    /// The coefficient ring's generators.
    pub fn system(self) -> Arc<GeneratorSystem> {
        match self {
            Theory::Universal => GeneratorSystem::lazard(),
            Theory::Chow => GeneratorSystem::empty(),
            Theory::KTheory => GeneratorSystem::kbeta(),
        }
    }
}

impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theory {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "universal" | "cobordism" => Ok(Theory::Universal),
            "chow" => Ok(Theory::Chow),
            "ktheory" | "k" => Ok(Theory::KTheory),
            other => Err(Error::InvalidInput(format!("unknown theory {other:?}"))),
        }
    }
}

/// `∫_{M̄0,n} ψ^d` up to relabelling the markings.
///
/// The exponents are stored sorted in descending order with zeros dropped,
/// so keys that differ by a permutation of the markings compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntersectionKey {
    n: u32,
    d: Vec<u32>,
    theory: Theory,
}

impl IntersectionKey {
    pub fn new(n: u32, d: &[u32], theory: Theory) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidInput(format!("need at least 3 markings, got n = {n}")));
        }
        if let Some(i) = d.iter().rposition(|&e| e > 0).filter(|&i| i >= n as usize) {
            return Err(Error::InvalidInput(format!("psi{} does not exist on M0,{n}", i + 1)));
        }
        let d = canonical(d);
        Ok(IntersectionKey { n, d, theory })
    }

    /// Like [`new`](Self::new), but accepts signed input and rejects negative exponents.
    pub fn from_signed(n: i64, d: &[i64], theory: Theory) -> Result<Self> {
        let n = u32::try_from(n).map_err(|_| Error::InvalidInput(format!("bad marking count {n}")))?;
        let d = d
            .iter()
            .map(|&e| u32::try_from(e).map_err(|_| Error::InvalidInput(format!("bad exponent {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, &d, theory)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Nonzero exponents, largest first.
    pub fn d(&self) -> &[u32] {
        &self.d
    }

    pub fn theory(&self) -> Theory {
        self.theory
    }

    /// `|d|`.
    pub fn total_degree(&self) -> u32 {
        self.d.iter().sum()
    }

    pub fn dimension(&self) -> u32 {
        self.n - 3
    }

    /// True when `|d|` exceeds the dimension, so the integral is zero.
    pub fn vanishes(&self) -> bool {
        self.total_degree() > self.dimension()
    }

    /// The exponents padded with zeros to one per marking.
    pub fn exponents(&self) -> Vec<u32> {
        let mut e = self.d.clone();
        e.resize(self.n as usize, 0);
        e
    }

    pub fn to_json(&self) -> Value {
        json!({ "n": self.n, "d": self.d, "theory": self.theory.name() })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |what: &str| Error::Parse(format!("cache key: {what}"));
        let n = v.get("n").and_then(Value::as_u64).ok_or_else(|| bad("missing n"))?;
        let d = v
            .get("d")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing d"))?
            .iter()
            .map(|e| e.as_u64().and_then(|e| u32::try_from(e).ok()).ok_or_else(|| bad("bad exponent")))
            .collect::<Result<Vec<_>>>()?;
        let theory: Theory = v.get("theory").and_then(Value::as_str).ok_or_else(|| bad("missing theory"))?.parse()?;
        let n = u32::try_from(n).map_err(|_| bad("n out of range"))?;
        Self::new(n, &d, theory)
    }
}

impl fmt::Display for IntersectionKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on M0,{}", psi_label(&self.d), self.n)
    }
}

/// Sorts descending and drops zeros.
pub(crate) fn canonical(d: &[u32]) -> Vec<u32> {
    let mut d: Vec<u32> = d.iter().copied().filter(|&e| e > 0).collect();
    d.sort_unstable_by(|a, b| b.cmp(a));
    d
}

/// `psi1^2*psi2`, or `1` for the empty monomial.
pub fn psi_label(d: &[u32]) -> String {
    let parts: Vec<String> = d
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| match e {
            1 => format!("psi{}", i + 1),
            _ => format!("psi{}^{e}", i + 1),
        })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// Parses `2,1` or `2 1` into exponents; an empty string means no ψ classes.
pub fn parse_exponents(text: &str) -> Result<Vec<u32>> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<u32>().map_err(|_| Error::InvalidInput(format!("exponent {s:?} is not a nonnegative integer")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let a = IntersectionKey::new(7, &[0, 1, 2, 0], Theory::Universal).unwrap();
        let b = IntersectionKey::new(7, &[2, 1], Theory::Universal).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.exponents(), vec![2, 1, 0, 0, 0, 0, 0]);
        assert_eq!(a.to_string(), "psi1^2*psi2 on M0,7");
        assert_eq!(IntersectionKey::from_json(&a.to_json()).unwrap(), a);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(IntersectionKey::new(2, &[], Theory::Chow).is_err());
        assert!(IntersectionKey::new(3, &[1, 1, 1, 1], Theory::Chow).is_err());
        assert!(IntersectionKey::new(4, &[1, 0, 0, 0, 1], Theory::Chow).is_err());
        assert!(IntersectionKey::new(4, &[1, 0, 0, 1, 0, 0], Theory::Chow).is_ok());
        assert!(IntersectionKey::from_signed(5, &[-1], Theory::Chow).is_err());
        assert!(parse_exponents("1,-2").is_err());
        assert_eq!(parse_exponents("2, 1").unwrap(), vec![2, 1]);
        assert_eq!(parse_exponents("").unwrap(), Vec::<u32>::new());
    }
}
