//! Published reference values, kept as text so they are checked against the
//! computations rather than derived from them.

use crate::algebra::{parse_poly, GeneratorSystem, Poly, RationalPolynomial};
use crate::error::Result;

/// `[M̄0,n]` for `n = 3..=8`.
pub const M0N_CLASSES: [(u32, &str); 6] = [
    (3, "1"),
    (4, "u1"),
    (5, "4u1^2 - 3u2"),
    (6, "31u1^3 - 30u1u2 + 17u3"),
    (7, "273u1^4 - 317u1^2u2 + 70u2^2 + 214u1u3 - 25u4"),
    (8, "2898u1^5 - 4063u1^3u2 + 2012u1u2^2 + 2765u1^2u3 - 1204u2u3 - 385u1u4 + 461u5"),
];

/// `[M̄0,n]` in the projective-space basis `p_m = [P^m]`.
pub const M0N_PROJECTIVE: [(u32, &str); 6] = [
    (3, "1"),
    (4, "p1"),
    (5, "4p1^2 - 3p2"),
    (6, "45/2*p1^3 - 30p1p2 + 17/2*p3"),
    (7, "166p1^4 - 317p1^2p2 + 70p2^2 + 107p1p3 - 25p4"),
    (8, "3031/2*p1^5 - 11305/3*p1^3p2 + 3563/2*p1p2^2 + 2765/2*p1^2p3 - 602p2p3 - 385p1p4 + 461/6*p5"),
];

/// Every `∫_{M̄0,n} ψ^d` with `n ≤ 8` and `|d| ≤ n − 3`, one cell per exponent
/// multiset: `(n, d, value)`.
pub const TABLE_CELLS: &[(u32, &[u32], &str)] = &[
    (3, &[], "1"),
    (4, &[], "u1"),
    (5, &[], "4u1^2 - 3u2"),
    (6, &[], "31u1^3 - 30u1u2 + 17u3"),
    (7, &[], "273u1^4 - 317u1^2u2 + 70u2^2 + 214u1u3 - 25u4"),
    (8, &[], "2898u1^5 - 4063u1^3u2 + 2012u1u2^2 + 2765u1^2u3 - 1204u2u3 - 385u1u4 + 461u5"),
    (4, &[1], "1"),
    (5, &[1], "u1"),
    (6, &[1], "10u1^2 - 9u2"),
    (7, &[1], "101u1^3 - 100u1u2 + 67u3"),
    (8, &[1], "1078u1^4 - 1302u1^2u2 + 350u2^2 + 889u1u3 - 125u4"),
    (5, &[2], "1"),
    (6, &[2], "u1"),
    (7, &[2], "20u1^2 - 19u2"),
    (8, &[2], "246u1^3 - 245u1u2 + 177u3"),
    (5, &[1, 1], "2"),
    (6, &[1, 1], "0"),
    (7, &[1, 1], "38u1^2 - 36u2"),
    (8, &[1, 1], "400u1^3 - 400u1u2 + 330u3"),
    (6, &[3], "1"),
    (7, &[3], "u1"),
    (8, &[3], "35u1^2 - 34u2"),
    (6, &[2, 1], "3"),
    (7, &[2, 1], "-2u1"),
    (8, &[2, 1], "100u1^2 - 95u2"),
    (6, &[1, 1, 1], "6"),
    (7, &[1, 1, 1], "-12u1"),
    (8, &[1, 1, 1], "210u1^2 - 180u2"),
    (7, &[4], "1"),
    (7, &[2, 1, 1], "12"),
    (7, &[2, 2], "6"),
    (7, &[3, 1], "4"),
    (7, &[1, 1, 1, 1], "24"),
    (8, &[4], "u1"),
    (8, &[2, 1, 1], "-40u1"),
    (8, &[2, 2], "-10u1"),
    (8, &[3, 1], "-5u1"),
    (8, &[1, 1, 1, 1], "-120u1"),
    (8, &[5], "1"),
    (8, &[3, 1, 1], "20"),
    (8, &[2, 2, 1], "30"),
    (8, &[2, 1, 1, 1], "60"),
    (8, &[3, 2], "10"),
    (8, &[4, 1], "5"),
    (8, &[1, 1, 1, 1, 1], "120"),
];

/// A printed power-series expansion: exponent vector and coefficient.
pub struct SeriesReference {
    pub name: &'static str,
    pub terms: &'static [(&'static [u32], &'static str)],
}

const A2: &str = "u1^2 - u2";
const A31: &str = "-2u1^3 + 2u1u2 - 2u3";
const A22: &str = "-4u1^3 + 4u1u2 - 3u3";
const A41: &str = "3u1^4 - 3u1^2u2 + u2^2 + 4u1u3 - u4";
const A32: &str = "10u1^4 - 11u1^2u2 + 3u2^2 + 11u1u3 - 2u4";
const A51: &str = "-4u1^5 + 2u1^3u2 - 6u1u2^2 - 6u1^2u3 + 4u2u3 + 2u1u4 - 6u5";
const A42: &str = "-21u1^5 + 21u1^3u2 - 22u1u2^2 - 28u1^2u3 + 15u2u3 + 7u1u4 - 15u5";
const A33: &str = "-34u1^5 + 37u1^3u2 - 33u1u2^2 - 43u1^2u3 + 22u2u3 + 10u1u4 - 20u5";

const PHI2: &str = "u1^3 - u1u2 + u3";
const PHI3: &str = "u1^4 - u1^2u2 + u1u3";
const PHI4: &str = "3u1^5 - 2u1^3u2 + 2u1u2^2 + 4u1^2u3 - u2u3 - u1u4 + 2u5";

/// The universal law `F(x, y)` through total degree 6.
pub const LAW: SeriesReference = SeriesReference {
    name: "F(x,y)",
    terms: &[
        (&[1, 0], "1"),
        (&[0, 1], "1"),
        (&[1, 1], "-u1"),
        (&[2, 1], A2),
        (&[1, 2], A2),
        (&[3, 1], A31),
        (&[1, 3], A31),
        (&[2, 2], A22),
        (&[4, 1], A41),
        (&[1, 4], A41),
        (&[3, 2], A32),
        (&[2, 3], A32),
        (&[5, 1], A51),
        (&[1, 5], A51),
        (&[4, 2], A42),
        (&[2, 4], A42),
        (&[3, 3], A33),
    ],
};

/// The inverse `x̄` through `x^4`.
pub const INVERSE: SeriesReference = SeriesReference {
    name: "inverse",
    terms: &[(&[1], "-1"), (&[2], "-u1"), (&[3], "-u1^2"), (&[4], "-2u1^3 + u1u2 - u3")],
};

/// `q(x, y)` with `F = x + y − xy·q`, through total degree 4.
pub const Q: SeriesReference = SeriesReference {
    name: "q(x,y)",
    terms: &[
        (&[0, 0], "u1"),
        (&[1, 0], "-u1^2 + u2"),
        (&[0, 1], "-u1^2 + u2"),
        (&[2, 0], "2u1^3 - 2u1u2 + 2u3"),
        (&[0, 2], "2u1^3 - 2u1u2 + 2u3"),
        (&[1, 1], "4u1^3 - 4u1u2 + 3u3"),
        (&[3, 0], "-3u1^4 + 3u1^2u2 - u2^2 - 4u1u3 + u4"),
        (&[0, 3], "-3u1^4 + 3u1^2u2 - u2^2 - 4u1u3 + u4"),
        (&[2, 1], "-10u1^4 + 11u1^2u2 - 3u2^2 - 11u1u3 + 2u4"),
        (&[1, 2], "-10u1^4 + 11u1^2u2 - 3u2^2 - 11u1u3 + 2u4"),
        (&[4, 0], "4u1^5 - 2u1^3u2 + 6u1u2^2 + 6u1^2u3 - 4u2u3 - 2u1u4 + 6u5"),
        (&[0, 4], "4u1^5 - 2u1^3u2 + 6u1u2^2 + 6u1^2u3 - 4u2u3 - 2u1u4 + 6u5"),
        (&[3, 1], "21u1^5 - 21u1^3u2 + 22u1u2^2 + 28u1^2u3 - 15u2u3 - 7u1u4 + 15u5"),
        (&[1, 3], "21u1^5 - 21u1^3u2 + 22u1u2^2 + 28u1^2u3 - 15u2u3 - 7u1u4 + 15u5"),
        (&[2, 2], "34u1^5 - 37u1^3u2 + 33u1u2^2 + 43u1^2u3 - 22u2u3 - 10u1u4 + 20u5"),
    ],
};

/// `φ(x) = q(x, x̄)` through `x^4`.
pub const PHI: SeriesReference =
    SeriesReference { name: "phi", terms: &[(&[0], "u1"), (&[1], "0"), (&[2], PHI2), (&[3], PHI3), (&[4], PHI4)] };

/// `x/x̄ = −1 + xφ(x)` through `x^5`.
pub const X_OVER_INVERSE: SeriesReference = SeriesReference {
    name: "x/inverse",
    terms: &[(&[0], "-1"), (&[1], "u1"), (&[2], "0"), (&[3], PHI2), (&[4], PHI3), (&[5], PHI4)],
};

/// `φ(F(x, y))` through total degree 4.
pub const PHI_OF_LAW: SeriesReference = SeriesReference {
    name: "phi(F(x,y))",
    terms: &[
        (&[0, 0], "u1"),
        (&[1, 0], "0"),
        (&[0, 1], "0"),
        (&[2, 0], PHI2),
        (&[1, 1], "2u1^3 - 2u1u2 + 2u3"),
        (&[0, 2], PHI2),
        (&[3, 0], PHI3),
        (&[2, 1], PHI3),
        (&[1, 2], PHI3),
        (&[0, 3], PHI3),
        (&[4, 0], PHI4),
        (&[0, 4], PHI4),
        (&[3, 1], "11u1^5 - 9u1^3u2 + 10u1u2^2 + 15u1^2u3 - 6u2u3 - 4u1u4 + 8u5"),
        (&[1, 3], "11u1^5 - 9u1^3u2 + 10u1u2^2 + 15u1^2u3 - 6u2u3 - 4u1u4 + 8u5"),
        (&[2, 2], "17u1^5 - 15u1^3u2 + 16u1u2^2 + 23u1^2u3 - 10u2u3 - 6u1u4 + 12u5"),
    ],
};

/// The two-variable series `Σ b_ij x^i y^j` through total degree 3.
pub const B_SERIES: SeriesReference = SeriesReference {
    name: "b(x,y)",
    terms: &[
        (&[0, 0], "u1^2 - u2"),
        (&[1, 0], PHI2),
        (&[0, 1], "2u1^3 - 2u1u2 + 2u3"),
        (&[2, 0], "5u1^4 - 5u1^2u2 + u2^2 + 6u1u3 - u4"),
        (&[0, 2], "5u1^4 - 5u1^2u2 + u2^2 + 6u1u3 - u4"),
        (&[1, 1], "4u1^4 - 4u1^2u2 + u2^2 + 5u1u3 - u4"),
        (&[3, 0], "10u1^5 - 9u1^3u2 + 6u1u2^2 + 13u1^2u3 - 3u2u3 - 3u1u4 + 4u5"),
        (&[2, 1], "17u1^5 - 15u1^3u2 + 15u1u2^2 + 23u1^2u3 - 9u2u3 - 6u1u4 + 11u5"),
        (&[1, 2], "14u1^5 - 12u1^3u2 + 12u1u2^2 + 19u1^2u3 - 7u2u3 - 5u1u4 + 9u5"),
        (&[0, 3], "12u1^5 - 10u1^3u2 + 8u1u2^2 + 16u1^2u3 - 4u2u3 - 4u1u4 + 6u5"),
    ],
};

/// `φ(x)² − (2φ(x) − q(x, 0) − u1)/x` through `x^3`.
pub const THREE_ROOT_SERIES: SeriesReference = SeriesReference {
    name: "three-root",
    terms: &[
        (&[0], "u2"),
        (&[1], "0"),
        (&[2], "-3u1^4 + 3u1^2u2 - u2^2 - 4u1u3 + u4"),
        (&[3], "2u1u2^2 - 2u2u3 + 2u5"),
    ],
};

/// Variety classes used to pin down the generators.
pub const P1: &str = "u1";
pub const P2: &str = "u2";
pub const P3: &str = "u1^3 + 2u3";
pub const BLOWUP_P3: &str = "u1^3 + u3";

pub fn lazard(text: &str) -> Poly {
    parse_poly(&GeneratorSystem::lazard(), text).expect("reference values parse")
}

pub fn lazard_rational(text: &str) -> RationalPolynomial {
    parse_poly(&GeneratorSystem::lazard(), text).expect("reference values parse")
}

/// The table cells as parsed polynomials.
pub fn table_cells() -> Result<Vec<(u32, Vec<u32>, Poly)>> {
    TABLE_CELLS.iter().map(|&(n, d, v)| Ok((n, d.to_vec(), parse_poly(&GeneratorSystem::lazard(), v)?))).collect()
}
