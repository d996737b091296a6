//! Coefficients of the universal formal group law through total degree 6.
//!
//! One line per unordered pair `i ≥ j ≥ 1`: the coefficient of `x^i y^j`
//! (equal to that of `x^j y^i`). Transcribed by hand, so the text is pinned
//! by a SHA-256 digest and every consumer goes through [`coefficients`].

use std::collections::BTreeMap;

use sha2::{Digest, Sha256};

use crate::algebra::{parse_poly, GeneratorSystem, Poly};
use crate::error::{Error, Result};

pub(crate) const UNIVERSAL_COEFFICIENTS: &str = "\
1 1 -u1
2 1 u1^2 - u2
3 1 -2u1^3 + 2u1u2 - 2u3
2 2 -4u1^3 + 4u1u2 - 3u3
4 1 3u1^4 - 3u1^2u2 + u2^2 + 4u1u3 - u4
3 2 10u1^4 - 11u1^2u2 + 3u2^2 + 11u1u3 - 2u4
5 1 -4u1^5 + 2u1^3u2 - 6u1u2^2 - 6u1^2u3 + 4u2u3 + 2u1u4 - 6u5
4 2 -21u1^5 + 21u1^3u2 - 22u1u2^2 - 28u1^2u3 + 15u2u3 + 7u1u4 - 15u5
3 3 -34u1^5 + 37u1^3u2 - 33u1u2^2 - 43u1^2u3 + 22u2u3 + 10u1u4 - 20u5
";

pub(crate) const UNIVERSAL_SHA256: &str = "078bab5cc26819d44ee6e0366242f8380e3faf2667da8fbb0fb07819b2f812d8";

/// Highest total degree of the embedded data.
pub const UNIVERSAL_DATA_DEGREE: u32 = 6;

/// Parses `text` after checking it against `digest`.
pub(crate) fn parse_table(text: &str, digest: &str) -> Result<BTreeMap<(u32, u32), Poly>> {
    let actual = hex(&Sha256::digest(text.as_bytes()));
    if actual != digest {
        return Err(Error::DataCorruption(format!("coefficient table digest {actual} does not match {digest}")));
    }
    let lz = GeneratorSystem::lazard();
    let mut out = BTreeMap::new();
    for line in text.lines().filter(|l| !l.trim().is_empty()) {
        let mut parts = line.splitn(3, ' ');
        let (Some(i), Some(j), Some(c)) = (parts.next(), parts.next(), parts.next()) else {
            return Err(Error::DataCorruption(format!("malformed line {line:?}")));
        };
        let bad = |_| Error::DataCorruption(format!("malformed line {line:?}"));
        let i: u32 = i.parse().map_err(bad)?;
        let j: u32 = j.parse().map_err(bad)?;
        let c = parse_poly(&lz, c).map_err(|e| Error::DataCorruption(e.to_string()))?;
        if !c.is_homogeneous_of(i + j - 1) {
            return Err(Error::DataCorruption(format!("a_{i}{j} is not of weight {}", i + j - 1)));
        }
        out.insert((i, j), c);
    }
    Ok(out)
}

/// The embedded `a_ij` keyed by `(i, j)` with `i ≥ j`.
pub fn coefficients() -> Result<BTreeMap<(u32, u32), Poly>> {
    parse_table(UNIVERSAL_COEFFICIENTS, UNIVERSAL_SHA256)
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_loads() {
        let t = coefficients().unwrap();
        assert_eq!(t.len(), 9);
        assert_eq!(t[&(1, 1)].to_string(), "-u1");
    }

    #[test]
    fn tampering_is_detected() {
        let tampered = UNIVERSAL_COEFFICIENTS.replace("- 20u5", "- 21u5");
        assert!(matches!(parse_table(&tampered, UNIVERSAL_SHA256), Err(Error::DataCorruption(_))));
    }
}
