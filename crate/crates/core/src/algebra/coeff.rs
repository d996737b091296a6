use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact scalar ring underneath every polynomial: ℤ or ℚ.
pub trait Coefficient:
    Clone
    + Debug
    + Display
    + Eq
    + Hash
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn from_bigint(n: BigInt) -> Self;

    /// `self / rhs` when the quotient lies in the ring.
    fn div_exact(&self, rhs: &Self) -> Option<Self>;

    fn unit_inverse(&self) -> Option<Self>;

    fn is_negative(&self) -> bool;

    fn encode(&self) -> String;

    fn decode(s: &str) -> Option<Self>;

    fn from_i64(n: i64) -> Self {
        Self::from_bigint(BigInt::from(n))
    }
}

impl Coefficient for BigInt {
    fn from_bigint(n: BigInt) -> Self {
        n
    }

    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        let (q, r) = (self / rhs, self % rhs);
        r.is_zero().then_some(q)
    }

    fn unit_inverse(&self) -> Option<Self> {
        (self.is_one() || (-self).is_one()).then(|| self.clone())
    }

    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }

    fn encode(&self) -> String {
        self.to_string()
    }

    fn decode(s: &str) -> Option<Self> {
        s.parse().ok()
    }
}

impl Coefficient for BigRational {
    fn from_bigint(n: BigInt) -> Self {
        BigRational::from_integer(n)
    }

    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        (!rhs.is_zero()).then(|| self / rhs)
    }

    fn unit_inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }

    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }

    fn encode(&self) -> String {
        // Ratio keeps itself reduced with a positive denominator.
        self.to_string()
    }

    fn decode(s: &str) -> Option<Self> {
        match s.split_once('/') {
            Some((p, q)) => {
                let p: BigInt = p.trim().parse().ok()?;
                let q: BigInt = q.trim().parse().ok()?;
                (!q.is_zero()).then(|| BigRational::new(p, q))
            }
            None => s.trim().parse::<BigInt>().ok().map(BigRational::from_integer),
        }
    }
}
