use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, LazyLock};

use parking_lot::RwLock;

use crate::algebra::Poly;
use crate::error::{Error, Result};
use crate::fgl::{additive_law, derive_bundle, multiplicative_law, universal_law, FormalGroupLaw, SeriesBundle};

use super::divisors::{enumerate_divisors, DivisorDatum};
use super::key::{canonical, IntersectionKey, Theory};

/// Exponents on `T` and on its complement.
type SplitExponents = (Vec<u32>, Vec<u32>);

/// The coefficients the string recursion consumes: `[P¹]`, `c_j` and `b_ij`.
#[derive(Clone, Debug)]
pub struct RecursionData {
    pub p1: Poly,
    pub c: Vec<Poly>,
    pub b: BTreeMap<(u32, u32), Poly>,
    /// `b_ij` is known for `i + j ≤ b_order`.
    pub b_order: u32,
}

impl RecursionData {
    pub fn from_bundle(bundle: &SeriesBundle) -> Self {
        RecursionData { p1: bundle.p1(), c: bundle.c_list(), b: bundle.b_table(), b_order: bundle.b_series.order() }
    }

    /// Largest `n` whose recursion only touches known coefficients: a step
    /// into `M̄0,n` uses `c_j` for `j ≤ n − 3` and `b_ij` for `i + j ≤ n − 5`.
    pub fn max_n(&self) -> u32 {
        (self.c.len() as u32 + 2).min(self.b_order + 5)
    }

    fn c(&self, j: u32) -> Result<&Poly> {
        self.c
            .get(j as usize)
            .ok_or_else(|| Error::UnknownCoefficients(format!("c_{j} lies beyond the known coefficients")))
    }

    fn b(&self, i: u32, j: u32) -> Result<&Poly> {
        self.b
            .get(&(i, j))
            .ok_or_else(|| Error::UnknownCoefficients(format!("b_{i}{j} lies beyond the known coefficients")))
    }
}

fn native_law(theory: Theory, order: u32) -> Result<FormalGroupLaw> {
    match theory {
        Theory::Universal => universal_law(order),
        Theory::Chow => Ok(additive_law(order)),
        Theory::KTheory => Ok(multiplicative_law(order)),
    }
}

fn native_data(theory: Theory, order: u32) -> Result<RecursionData> {
    Ok(RecursionData::from_bundle(&derive_bundle(&native_law(theory, order)?)?))
}

/// Evaluates `∫_{M̄0,n} ψ^d` by the string recursion, memoizing on
/// [`IntersectionKey`].
///
/// Each step forgets a marking with exponent zero and expands the result
/// over the `n − 1` remaining ones:
///
/// ```text
/// I(n, d) = [P¹]·I(n−1, d) − Σ_i Σ_j c_j I(n−1, ψ_i^j ψ^d/ψ_i)
///         + Σ_T Σ_{i,j} b_ij I(|T|+1, ψ•^i ψ^{d_T}) I(|T^c|+1, ψ•^j ψ^{d_Tc})
/// ```
///
/// The Chow and K-theory engines run on the additive and multiplicative
/// laws directly; their coefficient tables grow on demand. The universal
/// engine is limited by the embedded law data.
pub struct IntersectionEngine {
    theory: Theory,
    data: RwLock<Arc<RecursionData>>,
    extensible: bool,
    memo: RwLock<HashMap<(u32, Vec<u32>), Poly>>,
    memoize: bool,
    group_divisors: bool,
}

impl IntersectionEngine {
    pub fn new(theory: Theory) -> Result<Self> {
        let order = match theory {
            Theory::Universal => 7,
            _ => 10,
        };
        Ok(Self::from_data(theory, native_data(theory, order)?, theory != Theory::Universal))
    }

    /// An engine over arbitrary recursion data, which is never extended.
    pub fn with_data(theory: Theory, data: RecursionData) -> Self {
        Self::from_data(theory, data, false)
    }

    fn from_data(theory: Theory, data: RecursionData, extensible: bool) -> Self {
        IntersectionEngine {
            theory,
            data: RwLock::new(Arc::new(data)),
            extensible,
            memo: RwLock::new(HashMap::new()),
            memoize: true,
            group_divisors: false,
        }
    }

    /// Turns the memo table on or off (on by default).
    pub fn memoized(mut self, on: bool) -> Self {
        self.memoize = on;
        self
    }

    /// Sums over divisors grouped by their exponent multisets instead of
    /// one subset at a time. Results are identical; this is a speedup only.
    pub fn grouped(mut self, on: bool) -> Self {
        self.group_divisors = on;
        self
    }

    pub fn theory(&self) -> Theory {
        self.theory
    }

    /// Largest `n` computable right now (grows on demand unless universal).
    pub fn max_n(&self) -> Option<u32> {
        (!self.extensible).then(|| self.data.read().max_n())
    }

    pub fn psi_intersection(&self, n: u32, d: &[u32]) -> Result<Poly> {
        self.evaluate(&IntersectionKey::new(n, d, self.theory)?)
    }

    /// `[M̄0,n]`, the intersection with no ψ classes.
    pub fn m0n_class(&self, n: u32) -> Result<Poly> {
        self.psi_intersection(n, &[])
    }

    pub fn evaluate(&self, key: &IntersectionKey) -> Result<Poly> {
        if key.theory() != self.theory {
            return Err(Error::InvalidInput(format!("{} key given to the {} engine", key.theory(), self.theory)));
        }
        if key.vanishes() {
            return Ok(Poly::zero(self.theory.system()));
        }
        let data = self.data_for(key.n())?;
        self.eval(&data, key.n(), key.d())
    }

    /// One recursion step with explicit choices: `d` has one entry per
    /// marking in the given order, `forgotten` must have exponent zero and
    /// `anchors` are three other markings used to pick divisor
    /// representatives. Sub-problems go through the ordinary canonical path.
    pub fn expand_with(&self, n: u32, d: &[u32], forgotten: usize, anchors: [usize; 3]) -> Result<Poly> {
        let key = IntersectionKey::new(n, d, self.theory)?;
        if d.len() != n as usize {
            return Err(Error::InvalidInput(format!("expected {n} exponents, got {}", d.len())));
        }
        if forgotten >= d.len() || d[forgotten] != 0 {
            return Err(Error::InvalidInput(format!("marking {forgotten} cannot be forgotten")));
        }
        if anchors.contains(&forgotten) {
            return Err(Error::InvalidInput("the forgotten marking cannot be an anchor".into()));
        }
        if key.vanishes() {
            return Ok(Poly::zero(self.theory.system()));
        }
        if n == 3 {
            return Ok(Poly::one(self.theory.system()));
        }
        let data = self.data_for(n)?;
        let shift = |a: usize| if a > forgotten { a - 1 } else { a };
        let retained: Vec<u32> = d.iter().enumerate().filter(|&(i, _)| i != forgotten).map(|(_, &e)| e).collect();
        self.step(&data, &retained, anchors.map(shift))
    }

    /// Everything memoized so far, in key order.
    pub fn cached_entries(&self) -> Vec<(IntersectionKey, Poly)> {
        let memo = self.memo.read();
        let mut out: Vec<_> = memo
            .iter()
            .map(|((n, d), v)| (IntersectionKey::new(*n, d, self.theory).expect("stored keys are valid"), v.clone()))
            .collect();
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    }

    pub fn cache_len(&self) -> usize {
        self.memo.read().len()
    }

    pub fn clear_cache(&self) {
        self.memo.write().clear();
    }

    fn data_for(&self, n: u32) -> Result<Arc<RecursionData>> {
        {
            let data = self.data.read();
            if n <= data.max_n() {
                return Ok(data.clone());
            }
        }
        if !self.extensible {
            let max = self.data.read().max_n();
            return Err(Error::UnknownCoefficients(format!(
                "{} intersections are available for n ≤ {max}; n = {n} needs more of the formal group law",
                self.theory
            )));
        }
        let mut data = self.data.write();
        let mut order = n + 2;
        while data.max_n() < n {
            *data = Arc::new(native_data(self.theory, order)?);
            order += 2;
        }
        Ok(data.clone())
    }

    /// `d` canonical (sorted, no zeros).
    fn eval(&self, data: &RecursionData, n: u32, d: &[u32]) -> Result<Poly> {
        let total: u32 = d.iter().sum();
        if total > n - 3 {
            return Ok(Poly::zero(self.theory.system()));
        }
        if n == 3 {
            return Ok(Poly::one(self.theory.system()));
        }
        if self.memoize {
            if let Some(v) = self.memo.read().get(&(n, d.to_vec())) {
                return Ok(v.clone());
            }
        }
        // Forget the last marking; the sort guarantees its exponent is 0.
        let mut retained = d.to_vec();
        retained.resize(n as usize - 1, 0);
        let v = self.step(data, &retained, [0, 1, 2])?;
        if self.memoize {
            self.memo.write().insert((n, d.to_vec()), v.clone());
        }
        Ok(v)
    }

    fn eval_any(&self, data: &RecursionData, n: u32, d: &[u32]) -> Result<Poly> {
        self.eval(data, n, &canonical(d))
    }

    /// The right-hand side of the recursion for the retained exponents.
    fn step(&self, data: &RecursionData, d: &[u32], anchors: [usize; 3]) -> Result<Poly> {
        let n = d.len() as u32;
        let total: u32 = d.iter().sum();
        let mut acc = &data.p1 * &self.eval_any(data, n, d)?;

        for (i, &e) in d.iter().enumerate() {
            if e == 0 {
                continue;
            }
            for j in 0..=(n - 3 + 1 - total) {
                let c = data.c(j)?;
                if c.is_zero() {
                    continue;
                }
                let mut moved = d.to_vec();
                moved[i] = e - 1 + j;
                acc = acc - c * &self.eval_any(data, n, &moved)?;
            }
        }

        let divisors = enumerate_divisors(d.len(), anchors)?;
        if self.group_divisors {
            let mut groups: BTreeMap<SplitExponents, (u32, &DivisorDatum)> = BTreeMap::new();
            for div in &divisors {
                let (mut l, mut r) = div.split_exponents(d);
                l.sort_unstable();
                r.sort_unstable();
                groups.entry((l, r)).or_insert((0, div)).0 += 1;
            }
            for (count, div) in groups.into_values() {
                let term = self.divisor_term(data, div, d)?;
                acc = acc + term.scale(&count.into());
            }
        } else {
            for div in &divisors {
                acc = acc + self.divisor_term(data, div, d)?;
            }
        }
        Ok(acc)
    }

    fn divisor_term(&self, data: &RecursionData, div: &DivisorDatum, d: &[u32]) -> Result<Poly> {
        let mut acc = Poly::zero(self.theory.system());
        let Some((max_i, max_j)) = div.bullet_bounds(d) else {
            return Ok(acc);
        };
        let (mut left, mut right) = div.split_exponents(d);
        let (nl, nr) = (left.len() as u32 + 1, right.len() as u32 + 1);
        left.push(0);
        right.push(0);
        for i in 0..=max_i {
            for j in 0..=max_j {
                let b = data.b(i, j)?;
                if b.is_zero() {
                    continue;
                }
                *left.last_mut().unwrap() = i;
                *right.last_mut().unwrap() = j;
                let l = self.eval_any(data, nl, &left)?;
                if l.is_zero() {
                    continue;
                }
                let r = self.eval_any(data, nr, &right)?;
                acc = acc + &(b * &l) * &r;
            }
        }
        Ok(acc)
    }
}

static ENGINES: LazyLock<[IntersectionEngine; 3]> =
    LazyLock::new(|| Theory::ALL.map(|t| IntersectionEngine::new(t).expect("built-in laws derive cleanly")));

/// The process-wide memoizing engine for `theory`.
pub fn shared_engine(theory: Theory) -> &'static IntersectionEngine {
    &ENGINES[theory as usize]
}

/// `∫_{M̄0,n} ψ^d` in `theory`, using the shared engine.
pub fn psi_intersection(n: u32, d: &[u32], theory: Theory) -> Result<Poly> {
    shared_engine(theory).psi_intersection(n, d)
}

/// `[M̄0,n]` in `theory`, using the shared engine.
pub fn m0n_class(n: u32, theory: Theory) -> Result<Poly> {
    shared_engine(theory).m0n_class(n)
}
