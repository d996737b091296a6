//! The self-check suite: every oracle in the crate, grouped into ten
//! criteria. Each check collects localized failure messages instead of
//! stopping at the first one.

use std::fmt;
use std::time::Instant;

use num_bigint::BigInt;

use crate::algebra::{GeneratorSystem, Poly, RationalPolynomial};
use crate::basis::{
    from_projective_basis, p_monomials, to_projective_basis, to_projective_basis_rational, RationalCombination,
};
use crate::error::{Error, Result};
use crate::fgl::{
    chow_generator_images, derive_bundle, ktheory_generator_images, multiplicative_law, reconstruct_law, universal_law,
    validate_law, FormalGroupLaw, SeriesBundle,
};
use crate::geom::{
    blowup_point_class, milnor_class, projective_bundle_over_pm, projective_space_class, quillen_pushforward,
    specializations, three_root_series, u5_column_check, ProjectiveSpaceRing,
};
use crate::moduli::{
    build_tables, chow_closed_form, ktheory_twisted_closed_form, ktheory_twisted_recursion, load_cache, partitions,
    save_cache, shared_engine, IntersectionEngine, Theory,
};
use crate::reference::{self, SeriesReference};
use crate::series::TruncatedSeries;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub criterion: u8,
    pub name: &'static str,
    /// One line per individual comparison that failed.
    pub failures: Vec<String>,
    /// Number of individual comparisons made.
    pub compared: usize,
    pub millis: u128,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.compared > 0
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {:>2}. {} ({} checks)",
            if self.passed() { "PASS" } else { "FAIL" },
            self.criterion,
            self.name,
            self.compared
        )?;
        for line in &self.failures {
            write!(f, "\n       - {line}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        let ok = self.checks.iter().filter(|c| c.passed()).count();
        write!(f, "{ok}/{} criteria passed", self.checks.len())
    }
}

/// Collects comparisons for one criterion.
struct Tally {
    failures: Vec<String>,
    compared: usize,
}

impl Tally {
    fn new() -> Self {
        Tally { failures: Vec::new(), compared: 0 }
    }

    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.compared += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn equal<T: PartialEq + fmt::Display>(&mut self, what: &str, got: &T, want: &T) {
        self.expect(got == want, || format!("{what}: got {got}, expected {want}"));
    }

    /// Runs a fallible block; an error counts as one failed comparison.
    fn run(&mut self, what: &str, f: impl FnOnce(&mut Self) -> Result<()>) {
        if let Err(e) = f(self) {
            self.compared += 1;
            self.failures.push(format!("{what}: {e}"));
        }
    }
}

pub const CRITERIA: [&str; 10] = [
    "table reproduction",
    "classes of M0,n",
    "projective-space basis",
    "formal group law series",
    "law self-consistency",
    "specialization coherence",
    "top-degree agreement",
    "geometry oracles",
    "property suites",
    "boundary behaviour",
];

/// Runs one criterion (1-based).
pub fn run_criterion(k: u8) -> Check {
    let start = Instant::now();
    let mut t = Tally::new();
    match k {
        1 => table_reproduction(&mut t),
        2 => m0n_classes(&mut t),
        3 => projective_basis(&mut t),
        4 => law_series_check(&mut t),
        5 => t.run("universal law", |t| {
            law_consistency(t, &universal_law(7)?);
            Ok(())
        }),
        6 => specialization(&mut t),
        7 => top_degree(&mut t),
        8 => geometry(&mut t),
        9 => properties(&mut t),
        10 => boundary(&mut t),
        _ => t.expect(false, || format!("there is no criterion {k}")),
    }
    Check {
        criterion: k,
        name: CRITERIA.get((k as usize).wrapping_sub(1)).copied().unwrap_or("unknown"),
        failures: t.failures,
        compared: t.compared,
        millis: start.elapsed().as_millis(),
    }
}

pub fn run_suite() -> SuiteReport {
    SuiteReport { checks: (1..=10).map(run_criterion).collect() }
}

/// Criterion 5 against an arbitrary law, e.g. a deliberately corrupted one.
pub fn check_law(law: &FormalGroupLaw) -> Check {
    let start = Instant::now();
    let mut t = Tally::new();
    law_consistency(&mut t, law);
    Check {
        criterion: 5,
        name: CRITERIA[4],
        failures: t.failures,
        compared: t.compared,
        millis: start.elapsed().as_millis(),
    }
}

fn universal_bundle() -> Result<SeriesBundle> {
    derive_bundle(&universal_law(7)?)
}

fn table_reproduction(t: &mut Tally) {
    t.run("tables", |t| {
        let tables = build_tables(shared_engine(Theory::Universal), 8)?;
        let mut computed = Vec::new();
        for table in &tables {
            for (n, row) in &table.rows {
                for (d, v) in table.columns.iter().zip(row) {
                    computed.push((*n, d.clone(), v.clone()));
                }
            }
        }
        let printed = reference::table_cells()?;
        t.equal("number of cells", &computed.len(), &printed.len());
        for (n, d, want) in printed {
            match computed.iter().find(|c| c.0 == n && c.1 == d) {
                Some((_, _, got)) => t.equal(&format!("n = {n}, d = {d:?}"), got, &want),
                None => t.expect(false, || format!("n = {n}, d = {d:?} missing from the tables")),
            }
        }
        Ok(())
    });
}

fn m0n_classes(t: &mut Tally) {
    for (n, want) in reference::M0N_CLASSES {
        t.run(&format!("[M0,{n}]"), |t| {
            let got = shared_engine(Theory::Universal).m0n_class(n)?;
            t.equal(&format!("[M0,{n}]"), &got, &reference::lazard(want));
            Ok(())
        });
    }
}

fn projective_basis(t: &mut Tally) {
    for ((n, class), (_, p)) in reference::M0N_CLASSES.iter().zip(reference::M0N_PROJECTIVE) {
        t.run(&format!("[M0,{n}] in p-basis"), |t| {
            let want = RationalCombination::parse(p)?;
            let got = to_projective_basis(&shared_engine(Theory::Universal).m0n_class(*n)?)?;
            t.equal(&format!("[M0,{n}] in p-basis"), &got, &want);
            let back = from_projective_basis(&want)?;
            t.equal(&format!("[M0,{n}] from p-basis"), &back, &reference::lazard(class).to_rational());
            Ok(())
        });
    }
}

fn compare_series(t: &mut Tally, computed: &TruncatedSeries, r: &SeriesReference) {
    for (e, want) in r.terms {
        let degree: u32 = e.iter().sum();
        if degree > computed.order() {
            t.expect(false, || format!("{} {e:?}: only computed through degree {}", r.name, computed.order()));
            continue;
        }
        t.equal(&format!("{} coefficient {e:?}", r.name), &computed.coeff(e), &reference::lazard(want));
    }
}

fn law_series_check(t: &mut Tally) {
    t.run("series", |t| {
        let b = universal_bundle()?;
        compare_series(t, &b.chi, &reference::INVERSE);
        compare_series(t, &b.q, &reference::Q);
        compare_series(t, &b.phi, &reference::PHI);
        compare_series(t, &b.c_series, &reference::X_OVER_INVERSE);
        compare_series(t, &b.phi.compose(&[("x", b.law.series())])?, &reference::PHI_OF_LAW);
        compare_series(t, &b.b_series, &reference::B_SERIES);
        compare_series(t, &three_root_series()?, &reference::THREE_ROOT_SERIES);
        Ok(())
    });
}

fn law_consistency(t: &mut Tally, law: &FormalGroupLaw) {
    let report = validate_law(law);
    t.expect(report.checked_through >= 6, || format!("axioms checked only through degree {}", report.checked_through));
    for failure in &report.failures {
        t.expect(false, || failure.to_string());
    }
    if report.failures.is_empty() {
        t.compared += 1;
    }
    t.run("logarithm reconstruction", |t| {
        let rec = reconstruct_law(law)?;
        t.expect(rec.checked_through >= 6, || format!("reconstruction only through degree {}", rec.checked_through));
        for m in &rec.mismatches {
            t.expect(false, || m.to_string());
        }
        Ok(())
    });
    compare_series(t, law.series(), &reference::LAW);
}

/// `(n, d)` for every `n ≤ max_n` and every exponent multiset with `|d| ≤ n − 3`.
fn all_keys(max_n: u32) -> Vec<(u32, Vec<u32>)> {
    let mut out = Vec::new();
    for n in 3..=max_n {
        for k in 0..=n - 3 {
            for d in partitions(k) {
                out.push((n, d));
            }
        }
    }
    out
}

fn specialization(t: &mut Tally) {
    t.run("specialization", |t| {
        let chow = chow_generator_images()?;
        let k = ktheory_generator_images()?;
        let universal = shared_engine(Theory::Universal);
        let native_k = shared_engine(Theory::KTheory);
        let native_chow = shared_engine(Theory::Chow);
        for (n, d) in all_keys(8) {
            let v = universal.psi_intersection(n, &d)?;
            let closed = chow_closed_form(n, &d)?;
            let chow_v = chow.apply(&v)?;
            t.equal(&format!("Chow image at n = {n}, d = {d:?}"), &chow_v.constant_term(), &closed);
            t.expect(chow_v.is_constant(), || format!("Chow image at n = {n}, d = {d:?} is not a number"));
            t.equal(
                &format!("native Chow recursion at n = {n}, d = {d:?}"),
                &native_chow.psi_intersection(n, &d)?.constant_term(),
                &closed,
            );
            t.equal(&format!("K image at n = {n}, d = {d:?}"), &k.apply(&v)?, &native_k.psi_intersection(n, &d)?);
            t.equal(
                &format!("twisted K at n = {n}, d = {d:?}"),
                &ktheory_twisted_recursion(n, &d)?,
                &ktheory_twisted_closed_form(n, &d)?,
            );
        }
        let b = universal_bundle()?.b_series;
        t.expect(b.map_coefficients(&chow)?.is_zero(), || "b-series does not vanish in the Chow ring".into());
        t.expect(b.map_coefficients(&k)?.is_zero(), || "b-series does not vanish in K-theory".into());
        Ok(())
    });
}

fn top_degree(t: &mut Tally) {
    t.run("top degree", |t| {
        for (n, d) in all_keys(8) {
            if d.iter().sum::<u32>() != n - 3 {
                continue;
            }
            let v = shared_engine(Theory::Universal).psi_intersection(n, &d)?;
            let want = Poly::constant(GeneratorSystem::lazard(), chow_closed_form(n, &d)?);
            t.equal(&format!("n = {n}, d = {d:?}"), &v, &want);
        }
        Ok(())
    });
}

fn geometry(t: &mut Tally) {
    t.run("geometry", |t| {
        let p = projective_space_class;
        let l = reference::lazard;
        t.equal("[P1]", &p(1)?, &l(reference::P1));
        t.equal("[P2]", &p(2)?, &l(reference::P2));
        t.equal("[P3]", &p(3)?, &l(reference::P3));
        let bl = blowup_point_class(3)?;
        t.equal("[Bl_pt P3]", &bl, &l(reference::BLOWUP_P3));

        let (p1, p2) = (p(1)?, p(2)?);
        let bundle2 = projective_bundle_over_pm(2, &[1, 0, 0])?;
        let u4 = &(&bundle2 - &p1.pow(4)) - &(&(&p1 * &p1) * &p2).scale(&3.into()) + (&p1 * &bl).scale(&4.into());
        t.equal("u4 identity", &u4, &l("u4"));

        let bundle3 = projective_bundle_over_pm(3, &[1, 0, 0])?;
        let two_u5 = &(&(&bundle3 - &(&p1 * &bundle2)) - &(&p1.pow(3) * &p2)) - &(&p1 * &p2.pow(2));
        t.equal("2u5 identity", &two_u5, &l("2u5"));

        t.equal("[H1,1]", &milnor_class(1, 1)?, &p1);
        t.equal("u5 coefficient of a33 - a51 - a42", &u5_column_check()?.u5_coefficient, &BigInt::from(1));

        // Rational varieties have χ(O) = 1, so K-theory sees β^dim; Chow sees 0.
        let varieties = [
            ("P1", p1.clone()),
            ("P3", p(3)?),
            ("P5", p(5)?),
            ("Bl_pt P3", bl.clone()),
            ("Bl_pt P5", blowup_point_class(5)?),
            ("P_P2(O(1)+O+O)", bundle2),
            ("P_P3(O(1)+O+O)", bundle3),
            ("H2,3", milnor_class(2, 3)?),
        ];
        let kb = GeneratorSystem::kbeta();
        for (name, class) in varieties {
            let w = class.weight_of().ok_or(Error::NotHomogeneous)?;
            let (chow, k) = specializations(&class)?;
            t.expect(chow.is_zero(), || format!("Chow image of [{name}] is {chow}"));
            let beta = Poly::generator(kb.clone(), "beta")?;
            t.equal(&format!("K image of [{name}]"), &k, &beta.pow(w));
        }
        Ok(())
    });
}

fn properties(t: &mut Tally) {
    t.run("forgotten marking and permutations", |t| {
        let e = shared_engine(Theory::Universal);
        for (n, d) in all_keys(8) {
            if n == 3 {
                continue;
            }
            let want = e.psi_intersection(n, &d)?;
            let mut exps = d.clone();
            exps.resize(n as usize, 0);
            let zeros: Vec<usize> = (0..n as usize).filter(|&i| exps[i] == 0).collect();
            for &f in &zeros {
                let others: Vec<usize> = (0..n as usize).filter(|&i| i != f).collect();
                let m = others.len();
                for anchors in [[others[0], others[1], others[2]], [others[m - 1], others[m - 2], others[m - 3]]] {
                    let got = e.expand_with(n, &exps, f, anchors)?;
                    t.equal(&format!("n = {n}, d = {d:?}, forgetting {f}, anchors {anchors:?}"), &got, &want);
                }
            }
            // Unsorted exponents, bypassing canonicalization for the first step.
            let mut shuffled = exps.clone();
            shuffled.reverse();
            shuffled.rotate_left(n as usize / 2);
            let f = shuffled.iter().position(|&x| x == 0).expect("some exponent is zero");
            let others: Vec<usize> = (0..n as usize).filter(|&i| i != f).collect();
            let got = e.expand_with(n, &shuffled, f, [others[1], others[0], others[2]])?;
            t.equal(&format!("n = {n}, exponents {shuffled:?}"), &got, &want);
        }
        Ok(())
    });

    t.run("homogeneity", |t| {
        let e = shared_engine(Theory::Universal);
        for (n, d) in all_keys(8) {
            e.psi_intersection(n, &d)?;
        }
        for (key, v) in e.cached_entries() {
            let w = key.dimension() - key.total_degree();
            t.expect(v.is_homogeneous_of(w), || format!("{key} = {v} is not homogeneous of weight {w}"));
        }
        Ok(())
    });

    t.run("quillen pushforward", |t| {
        let pt = ProjectiveSpaceRing::new(0);
        let one = Poly::one(GeneratorSystem::lazard());
        for r in 2..=5usize {
            let v = pt.integrate(&quillen_pushforward(&vec![pt.zero(); r], std::slice::from_ref(&one))?)?;
            t.equal(&format!("zero roots, rank {r}"), &v, &projective_space_class(r as u32 - 1)?);
        }
        for (m, roots) in [(2u32, vec![1, 0, 0]), (1, vec![1, 1, 0]), (3, vec![1, 0]), (1, vec![1, 0, 0, 1])] {
            let ring = ProjectiveSpaceRing::new(m);
            let pick = |k: u32| if k == 1 { ring.hyperplane() } else { ring.zero() };
            let base: Vec<TruncatedSeries> = roots.iter().map(|&k| pick(k)).collect();
            let want = quillen_pushforward(&base, std::slice::from_ref(&one))?;
            for s in 1..roots.len() {
                let mut permuted = base.clone();
                permuted.rotate_left(s);
                let got = quillen_pushforward(&permuted, std::slice::from_ref(&one))?;
                t.expect(got == want, || format!("P^{m} roots {roots:?} rotated by {s}: {got} vs {want}"));
            }
        }
        Ok(())
    });

    t.run("basis round trips", |t| {
        let lz = GeneratorSystem::lazard();
        for w in 0..=5 {
            for mono in p_monomials(w)? {
                // `mono` read as a u-monomial…
                let mut u = Poly::one(lz.clone());
                for &i in &mono {
                    u = &u * &Poly::generator(lz.clone(), &format!("u{i}"))?;
                }
                let there = to_projective_basis(&u)?;
                t.equal(&format!("u-monomial {mono:?}"), &from_projective_basis(&there)?, &u.to_rational());
                // …and as a p-monomial.
                let text: Vec<String> = mono.iter().map(|i| format!("p{i}")).collect();
                let p = RationalCombination::parse(if text.is_empty() { "1".into() } else { text.join("*") }.as_str())?;
                let back: RationalPolynomial = from_projective_basis(&p)?;
                t.equal(&format!("p-monomial {mono:?}"), &to_projective_basis_rational(&back)?, &p);
            }
        }
        Ok(())
    });

    t.run("cache purity", |t| {
        let memo = IntersectionEngine::new(Theory::Universal)?;
        let bare = IntersectionEngine::new(Theory::Universal)?.memoized(false);
        let grouped = IntersectionEngine::new(Theory::Universal)?.grouped(true);
        for (n, d) in all_keys(7) {
            let a = memo.psi_intersection(n, &d)?;
            t.equal(&format!("memo vs none at n = {n}, d = {d:?}"), &a, &bare.psi_intersection(n, &d)?);
            t.equal(&format!("grouped at n = {n}, d = {d:?}"), &a, &grouped.psi_intersection(n, &d)?);
        }
        let path = std::env::temp_dir().join(format!("m0n-verify-{}.json", std::process::id()));
        let saved = save_cache(&path, &[&memo])?;
        let fresh = IntersectionEngine::new(Theory::Universal)?;
        let report = load_cache(&path, &[&fresh]);
        let _ = std::fs::remove_file(&path);
        t.equal("cache entries reloaded", &report.accepted, &saved);
        t.expect(report.warnings.is_empty(), || format!("cache reload warnings: {:?}", report.warnings));
        t.expect(fresh.cached_entries() == memo.cached_entries(), || "reloaded cache differs".into());
        Ok(())
    });

    t.run("combined degrees", |t| {
        let bundles = [("universal", universal_bundle()?), ("multiplicative", derive_bundle(&multiplicative_law(8))?)];
        for (label, b) in bundles {
            for (name, want, got) in b.combined_degrees() {
                if label == "multiplicative" && name == "b" {
                    // b vanishes identically for the multiplicative law.
                    t.expect(got.is_none() && b.b_series.is_zero(), || "multiplicative b is not zero".into());
                    continue;
                }
                t.expect(got == Some(want), || format!("{label} {name}: combined degree {got:?}, expected {want}"));
            }
        }
        Ok(())
    });
}

fn boundary(t: &mut Tally) {
    let e = shared_engine(Theory::Universal);
    let gated = e.m0n_class(9);
    t.expect(matches!(gated, Err(Error::UnknownCoefficients(_))), || format!("universal n = 9 gave {gated:?}"));
    let gated = e.psi_intersection(10, &[2, 1]);
    t.expect(matches!(gated, Err(Error::UnknownCoefficients(_))), || format!("universal n = 10 gave {gated:?}"));
    t.run("n = 12", |t| {
        for d in [vec![], vec![2, 1], vec![3, 3, 3], vec![9]] {
            t.equal(
                &format!("twisted K at n = 12, d = {d:?}"),
                &ktheory_twisted_recursion(12, &d)?,
                &ktheory_twisted_closed_form(12, &d)?,
            );
            let chow = shared_engine(Theory::Chow).psi_intersection(12, &d)?;
            t.equal(&format!("Chow at n = 12, d = {d:?}"), &chow.constant_term(), &chow_closed_form(12, &d)?);
            let k = shared_engine(Theory::KTheory).psi_intersection(12, &d)?;
            let w = 9 - d.iter().sum::<u32>();
            t.expect(k.is_homogeneous_of(w), || format!("K at n = 12, d = {d:?} = {k} is not of degree {w}"));
        }
        Ok(())
    });
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corrupted_law_is_reported() {
        let law = universal_law(7).unwrap();
        let one = Poly::one(GeneratorSystem::lazard());
        let check = check_law(&law.perturbed(2, 2, &one));
        assert!(!check.passed());
        assert!(check.failures.iter().any(|f| f.contains("degree 4")), "{check}");
        assert!(check_law(&law).passed());
    }
}
