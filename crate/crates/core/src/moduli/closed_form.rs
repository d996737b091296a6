use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{Exponents, GeneratorSystem, Poly};
use crate::error::{Error, Result};

use super::key::{canonical, IntersectionKey, Theory};

fn factorial(k: u32) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * i)
}

/// `k! / (d_1! ⋯ d_n! · (k − |d|)!)`, zero if `|d| > k`.
fn multinomial(k: u32, d: &[u32]) -> BigInt {
    let total: u32 = d.iter().sum();
    if total > k {
        return BigInt::zero();
    }
    let denom = d.iter().fold(factorial(k - total), |acc, &e| acc * factorial(e));
    factorial(k) / denom
}

fn checked(n: u32, d: &[u32]) -> Result<IntersectionKey> {
    IntersectionKey::new(n, d, Theory::Chow)
}

/// Chow-ring intersection `∫ ψ^d`: the multinomial `(n−3 choose d)` when
/// `|d| = n − 3` and zero otherwise.
pub fn chow_closed_form(n: u32, d: &[u32]) -> Result<BigInt> {
    let key = checked(n, d)?;
    if key.total_degree() != key.dimension() {
        return Ok(BigInt::zero());
    }
    Ok(multinomial(key.dimension(), key.d()))
}

fn beta_power(k: u32, c: BigInt) -> Poly {
    let sys = GeneratorSystem::kbeta();
    Poly::monomial(sys, Exponents::new(vec![k]), c)
}

/// Twisted K-theory intersection `∫ Ψ^d = β^{n−3−|d|} (n−3 choose n−3−|d|, d)`,
/// where `Ψ_i = [L_i]ψ_i`.
pub fn ktheory_twisted_closed_form(n: u32, d: &[u32]) -> Result<Poly> {
    let key = checked(n, d)?;
    if key.vanishes() {
        return Ok(Poly::zero(GeneratorSystem::kbeta()));
    }
    Ok(beta_power(key.dimension() - key.total_degree(), multinomial(key.dimension(), key.d())))
}

/// The same numbers from the twisted string equation
/// `I(n+1, d) = β I(n, d) + Σ_i I(n, d/Ψ_i)`, with `I(3, ∅) = 1`.
pub fn ktheory_twisted_recursion(n: u32, d: &[u32]) -> Result<Poly> {
    let key = checked(n, d)?;
    let mut memo = HashMap::new();
    Ok(twisted(n, key.d(), &mut memo))
}

fn twisted(n: u32, d: &[u32], memo: &mut HashMap<(u32, Vec<u32>), Poly>) -> Poly {
    let sys = GeneratorSystem::kbeta();
    let total: u32 = d.iter().sum();
    if total > n - 3 {
        return Poly::zero(sys);
    }
    if n == 3 {
        return Poly::one(sys);
    }
    if let Some(v) = memo.get(&(n, d.to_vec())) {
        return v.clone();
    }
    let beta = Poly::generator(sys, "beta").expect("kbeta has beta");
    let mut acc = &beta * &twisted(n - 1, d, memo);
    for i in 0..d.len() {
        let mut lower = d.to_vec();
        lower[i] -= 1;
        acc = acc + twisted(n - 1, &canonical(&lower), memo);
    }
    memo.insert((n, d.to_vec()), acc.clone());
    acc
}

/// Pretty-prints `(t_1 + ⋯ + t_n)^{n−3}` (Chow) or `(β + t_1 + ⋯ + t_n)^{n−3}`
/// (twisted K-theory) expanded, with coefficients read off the closed forms.
pub fn generating_function(n: u32, twisted: bool) -> Result<String> {
    if n < 3 {
        return Err(Error::InvalidInput(format!("need at least 3 markings, got n = {n}")));
    }
    if n > 12 {
        return Err(Error::InvalidInput(format!("n = {n} is too large to print")));
    }
    let k = n - 3;
    let mut terms = Vec::new();
    let mut d = vec![0u32; n as usize];
    collect(&mut d, k, &mut |d| {
        let total: u32 = d.iter().sum();
        if !twisted && total != k {
            return;
        }
        let coeff = multinomial(k, d);
        let mut factors = Vec::new();
        if twisted && total < k {
            factors.push(power("beta", k - total));
        }
        for (i, &e) in d.iter().enumerate() {
            if e > 0 {
                factors.push(power(&format!("t{}", i + 1), e));
            }
        }
        let body = factors.join("*");
        terms.push(match (coeff.is_one(), body.is_empty()) {
            (_, true) => coeff.to_string(),
            (true, false) => body,
            (false, false) => format!("{coeff}*{body}"),
        });
    });
    Ok(terms.join(" + "))
}

fn power(sym: &str, e: u32) -> String {
    if e == 1 {
        sym.to_string()
    } else {
        format!("{sym}^{e}")
    }
}

/// Visits every exponent vector with `|d| ≤ budget`, in order of
/// increasing total degree and then lexicographically decreasing `d`.
fn collect(d: &mut [u32], budget: u32, visit: &mut impl FnMut(&[u32])) {
    for total in 0..=budget {
        fill(d, 0, total, visit);
    }
}

fn fill(d: &mut [u32], slot: usize, left: u32, visit: &mut impl FnMut(&[u32])) {
    if slot == d.len() {
        if left == 0 {
            visit(d);
        }
        return;
    }
    for e in (0..=left).rev() {
        d[slot] = e;
        fill(d, slot + 1, left - e, visit);
    }
    d[slot] = 0;
}
