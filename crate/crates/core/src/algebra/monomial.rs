use std::cmp::Ordering;
use std::fmt;

/// Exponent vector of a monomial, one entry per variable.
///
/// Ordered graded reverse-lexicographically: higher total degree is larger;
/// on ties, the vector with the smaller exponent in the last differing slot
/// is larger. Iterating a `BTreeMap<Exponents, _>` backwards therefore
/// lists `u1^5, u1^3*u2, u1*u2^2, u1^2*u3, u2*u3, u1*u4, u5`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Exponents(Vec<u32>);

impl Exponents {
    pub fn new(exps: Vec<u32>) -> Self {
        Exponents(exps)
    }

    pub fn zero(len: usize) -> Self {
        Exponents(vec![0; len])
    }

    pub fn unit(len: usize, index: usize) -> Self {
        let mut e = vec![0; len];
        e[index] = 1;
        Exponents(e)
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Weighted degree against per-slot weights.
    pub fn weighted_degree(&self, weights: &[u32]) -> u32 {
        self.0.iter().zip(weights).map(|(e, w)| e * w).sum()
    }

    pub fn mul(&self, other: &Exponents) -> Exponents {
        debug_assert_eq!(self.0.len(), other.0.len());
        Exponents(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` if `other` divides `self`.
    pub fn checked_div(&self, other: &Exponents) -> Option<Exponents> {
        self.0.iter().zip(&other.0).map(|(a, b)| a.checked_sub(*b)).collect::<Option<Vec<_>>>().map(Exponents)
    }

    pub fn get(&self, index: usize) -> u32 {
        self.0[index]
    }
}

impl From<Vec<u32>> for Exponents {
    fn from(v: Vec<u32>) -> Self {
        Exponents(v)
    }
}

impl Ord for Exponents {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for (a, b) in self.0.iter().zip(&other.0).rev() {
                if a != b {
                    return b.cmp(a);
                }
            }
            self.0.len().cmp(&other.0.len())
        })
    }
}

impl PartialOrd for Exponents {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Exponents {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Writes `a^2*b` style monomials; empty string for the constant monomial.
pub(crate) fn write_monomial(out: &mut String, exps: &Exponents, symbols: impl Iterator<Item = impl AsRef<str>>) {
    let mut first = true;
    for (e, s) in exps.as_slice().iter().zip(symbols) {
        if *e == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        first = false;
        out.push_str(s.as_ref());
        if *e > 1 {
            out.push('^');
            out.push_str(&e.to_string());
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grevlex_matches_printed_order() {
        // u1^5, u1^3u2, u1u2^2, u1^2u3, u2u3, u1u4, u5 (descending)
        let printed = [
            vec![5, 0, 0, 0, 0],
            vec![3, 1, 0, 0, 0],
            vec![1, 2, 0, 0, 0],
            vec![2, 0, 1, 0, 0],
            vec![0, 1, 1, 0, 0],
            vec![1, 0, 0, 1, 0],
            vec![0, 0, 0, 0, 1],
        ];
        for w in printed.windows(2) {
            assert!(Exponents::new(w[0].clone()) > Exponents::new(w[1].clone()));
        }
    }

    #[test]
    fn division_of_exponents() {
        let a = Exponents::new(vec![2, 1]);
        assert_eq!(a.checked_div(&Exponents::new(vec![1, 1])), Some(Exponents::new(vec![1, 0])));
        assert_eq!(a.checked_div(&Exponents::new(vec![0, 2])), None);
    }
}
