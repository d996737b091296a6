use std::fmt;

use crate::error::{Error, Result};

/// A boundary divisor `D^T ≅ M̄0,|T|+1 × M̄0,|T^c|+1` of `M̄0,n`.
///
/// Markings are 0-based indices; the display is 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DivisorDatum {
    pub t: Vec<usize>,
    pub complement: Vec<usize>,
}

impl DivisorDatum {
    /// `d` restricted to `T` and to `T^c`.
    pub fn split_exponents(&self, d: &[u32]) -> (Vec<u32>, Vec<u32>) {
        (self.t.iter().map(|&i| d[i]).collect(), self.complement.iter().map(|&i| d[i]).collect())
    }

    /// Largest bullet exponents `(i, j)` for which both factors can be
    /// nonzero, or `None` if one side already exceeds its dimension.
    pub fn bullet_bounds(&self, d: &[u32]) -> Option<(u32, u32)> {
        let room = |idx: &[usize]| {
            let used: u32 = idx.iter().map(|&i| d[i]).sum();
            (idx.len() as u32 - 2).checked_sub(used)
        };
        Some((room(&self.t)?, room(&self.complement)?))
    }
}

impl fmt::Display for DivisorDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in &self.t {
            write!(f, "{}", i + 1)?;
        }
        Ok(())
    }
}

/// One representative `T` per unordered splitting `{T, T^c}` of `n`
/// markings with both sides of size at least 2; the representative is the
/// side meeting the three `anchors` at most once.
pub fn enumerate_divisors(n: usize, anchors: [usize; 3]) -> Result<Vec<DivisorDatum>> {
    if anchors.iter().any(|&a| a >= n.max(3))
        || anchors[0] == anchors[1]
        || anchors[0] == anchors[2]
        || anchors[1] == anchors[2]
    {
        return Err(Error::InvalidInput(format!("anchors {anchors:?} are not three distinct markings of {n}")));
    }
    if n > 24 {
        return Err(Error::InvalidInput(format!("{n} markings is too many to enumerate")));
    }
    let anchor_mask = anchors.iter().fold(0u32, |m, &a| m | 1 << a);
    let mut out = Vec::new();
    for mask in 0u32..1 << n {
        let size = mask.count_ones() as usize;
        if size < 2 || n - size < 2 || (mask & anchor_mask).count_ones() > 1 {
            continue;
        }
        let (t, complement) = (0..n).partition(|&i| mask & 1 << i != 0);
        out.push(DivisorDatum { t, complement });
    }
    Ok(out)
}

/// [`enumerate_divisors`] with the first three markings as anchors.
pub fn standard_divisors(n: usize) -> Vec<DivisorDatum> {
    enumerate_divisors(n, [0, 1, 2]).expect("standard anchors are valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Counts unordered splittings directly, without any representative rule.
    fn brute_force(n: usize) -> usize {
        let mut seen = std::collections::BTreeSet::new();
        for mask in 0u32..1 << n {
            let size = mask.count_ones() as usize;
            if size >= 2 && n - size >= 2 {
                let other = !mask & ((1 << n) - 1);
                seen.insert(mask.min(other));
            }
        }
        seen.len()
    }

    #[test]
    fn small_cases() {
        assert!(standard_divisors(3).is_empty());
        let four: Vec<String> = standard_divisors(4).iter().map(ToString::to_string).collect();
        assert_eq!(four, ["14", "24", "34"]);
        assert_eq!(standard_divisors(5).len(), 10);
    }

    #[test]
    fn one_per_splitting() {
        for n in 3..=10 {
            for anchors in [[0, 1, 2], [n - 1, 0, n / 2], [2, 1, 0]] {
                if anchors.iter().collect::<std::collections::BTreeSet<_>>().len() < 3 {
                    continue;
                }
                let divs = enumerate_divisors(n, anchors).unwrap();
                assert_eq!(divs.len(), brute_force(n), "n = {n}");
            }
        }
    }

    #[test]
    fn bounds() {
        let d = standard_divisors(5).into_iter().find(|d| d.t == [0, 3]).unwrap();
        assert_eq!(d.bullet_bounds(&[0, 0, 0, 0, 0]), Some((0, 1)));
        assert_eq!(d.bullet_bounds(&[1, 0, 0, 0, 0]), None);
        assert_eq!(d.split_exponents(&[1, 2, 3, 4, 5]), (vec![1, 4], vec![2, 3, 5]));
    }
}
