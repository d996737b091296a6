use rayon::prelude::*;

use crate::algebra::Poly;
use crate::error::Result;

use super::engine::IntersectionEngine;

/// All intersections of one total degree `|d|`: a row per `n`, a column per
/// exponent multiset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionTable {
    pub degree: u32,
    /// Exponent multisets, each sorted descending.
    pub columns: Vec<Vec<u32>>,
    /// `(n, values)` with one value per column.
    pub rows: Vec<(u32, Vec<Poly>)>,
}

/// Partitions of `k`, largest parts first: `[4], [3,1], [2,2], [2,1,1], [1,1,1,1]`.
pub fn partitions(k: u32) -> Vec<Vec<u32>> {
    fn go(left: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(prefix.clone());
            return;
        }
        for p in (1..=left.min(max)).rev() {
            prefix.push(p);
            go(left - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(k, k, &mut Vec::new(), &mut out);
    out
}

/// Every non-vanishing intersection with `n ≤ max_n`, one table per `|d|`.
///
/// Cells are evaluated in parallel through the engine's shared memo; the
/// assembled tables do not depend on scheduling.
pub fn build_tables(engine: &IntersectionEngine, max_n: u32) -> Result<Vec<IntersectionTable>> {
    if max_n < 3 {
        return Ok(Vec::new());
    }
    let mut cells = Vec::new();
    for k in 0..=max_n - 3 {
        for d in partitions(k) {
            for n in k + 3..=max_n {
                cells.push((n, d.clone()));
            }
        }
    }
    // Small n first so larger cells find their sub-problems memoized.
    cells.sort_by_key(|(n, _)| *n);
    let values: Vec<Poly> = cells.par_iter().map(|(n, d)| engine.psi_intersection(*n, d)).collect::<Result<_>>()?;

    let mut tables = Vec::new();
    for k in 0..=max_n - 3 {
        let columns = partitions(k);
        let rows = (k + 3..=max_n)
            .map(|n| {
                let row = columns
                    .iter()
                    .map(|d| {
                        let at = cells.iter().position(|c| c.0 == n && &c.1 == d).expect("cell computed");
                        values[at].clone()
                    })
                    .collect();
                (n, row)
            })
            .collect();
        tables.push(IntersectionTable { degree: k, columns, rows });
    }
    Ok(tables)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=7).map(|k| partitions(k).len()).collect();
        assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11, 15]);
        assert_eq!(partitions(3), vec![vec![3], vec![2, 1], vec![1, 1, 1]]);
        assert_eq!(partitions(0), vec![Vec::<u32>::new()]);
    }
}
