//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Each criterion runs the library check and then exercises the same claim
//! through the `m0n` binary, so both the engine and the front end are held
//! to the printed values.

use std::process::{Command, Output};

use serde_json::Value;

use m0n_core::algebra::{Poly, RationalPolynomial};
use m0n_core::basis::RationalCombination;
use m0n_core::moduli::{chow_closed_form, ktheory_twisted_closed_form, partitions};
use m0n_core::reference::{self, lazard};
use m0n_core::series::TruncatedSeries;
use m0n_core::verify::{run_criterion, CRITERIA};

fn m0n(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_m0n")).args(args).env_remove("M0N_CACHE").output().expect("binary runs")
}

/// Runs the binary, requiring success, and returns stdout.
fn ok(args: &[&str], problems: &mut Vec<String>) -> Option<String> {
    let o = m0n(args);
    if o.status.code() != Some(0) {
        problems.push(format!(
            "`m0n {}` exited with {:?}: {}",
            args.join(" "),
            o.status.code(),
            String::from_utf8_lossy(&o.stderr).trim()
        ));
        return None;
    }
    Some(String::from_utf8(o.stdout).expect("utf-8 output"))
}

fn json(args: &[&str], problems: &mut Vec<String>) -> Option<Value> {
    let text = ok(args, problems)?;
    match serde_json::from_str(&text) {
        Ok(v) => Some(v),
        Err(e) => {
            problems.push(format!("`m0n {}` printed invalid JSON: {e}", args.join(" ")));
            None
        }
    }
}

fn same<T: PartialEq + std::fmt::Display>(what: String, got: &T, want: &T, problems: &mut Vec<String>) {
    if got != want {
        problems.push(format!("{what}: got {got}, expected {want}"));
    }
}

fn table_reproduction(p: &mut Vec<String>) {
    let Some(doc) = json(&["tables", "--max-n", "8", "--format", "json"], p) else { return };
    let mut cells = std::collections::BTreeMap::new();
    for table in doc["tables"].as_array().into_iter().flatten() {
        let columns: Vec<Vec<u32>> = serde_json::from_value(table["columns"].clone()).unwrap_or_default();
        for row in table["rows"].as_array().into_iter().flatten() {
            let n = row["n"].as_u64().unwrap_or(0) as u32;
            for (d, v) in columns.iter().zip(row["values"].as_array().into_iter().flatten()) {
                cells.insert((n, d.clone()), v.clone());
            }
        }
    }
    let reference = reference::table_cells().expect("reference cells parse");
    same("cells printed".into(), &cells.len(), &reference.len(), p);
    for (n, d, want) in reference {
        match cells.get(&(n, d.clone())).map(Poly::from_json) {
            Some(Ok(got)) => same(format!("n = {n}, d = {d:?}"), &got, &want, p),
            _ => p.push(format!("n = {n}, d = {d:?} missing or malformed")),
        }
    }
}

fn m0n_classes(p: &mut Vec<String>) {
    for (n, want) in reference::M0N_CLASSES {
        let n = n.to_string();
        if let Some(text) = ok(&["class", "--space", "m0n", "--n", &n], p) {
            same(format!("[M0,{n}]"), &text.trim().to_string(), &lazard(want).to_string(), p);
        }
    }
}

fn projective_basis(p: &mut Vec<String>) {
    for (n, want) in reference::M0N_PROJECTIVE {
        let n = n.to_string();
        let Some(doc) = json(&["class", "--space", "m0n", "--n", &n, "--basis", "p", "--format", "json"], p) else {
            continue;
        };
        let got = RationalPolynomial::from_json(&doc["value"]).and_then(RationalCombination::new);
        match got {
            Ok(got) => same(format!("[M0,{n}] in p"), &got, &RationalCombination::parse(want).unwrap(), p),
            Err(e) => p.push(format!("[M0,{n}] in p: {e}")),
        }
    }
}

fn law_series(p: &mut Vec<String>) {
    let cases = [
        ("law", &reference::LAW),
        ("inverse", &reference::INVERSE),
        ("q", &reference::Q),
        ("phi", &reference::PHI),
        ("x-over-inverse", &reference::X_OVER_INVERSE),
        ("phi-of-law", &reference::PHI_OF_LAW),
        ("b", &reference::B_SERIES),
        ("three-root", &reference::THREE_ROOT_SERIES),
    ];
    for (name, r) in cases {
        let Some(doc) = json(&["series", "--name", name, "--format", "json"], p) else { continue };
        match TruncatedSeries::from_json(&doc["value"]) {
            Ok(s) => {
                for (e, want) in r.terms {
                    same(format!("{name} coefficient {e:?}"), &s.coeff(e), &lazard(want), p);
                }
            }
            Err(e) => p.push(format!("{name}: {e}")),
        }
    }
}

fn law_consistency(p: &mut Vec<String>) {
    ok(&["verify", "--criterion", "5"], p);
}

fn specialization(p: &mut Vec<String>) {
    for n in 3..=8u32 {
        for d in partitions(n - 3) {
            let ds = d.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
            let n_s = n.to_string();
            if let Some(text) = ok(&["intersect", "--n", &n_s, "--d", &ds, "--theory", "chow"], p) {
                let want = chow_closed_form(n, &d).unwrap().to_string();
                same(format!("chow n = {n}, d = {d:?}"), &text.trim().to_string(), &want, p);
            }
        }
    }
    for (n, d) in [(6u32, vec![1u32]), (7, vec![2]), (8, vec![1, 1])] {
        let ds = d.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        if let Some(text) = ok(&["intersect", "--n", &n.to_string(), "--d", &ds, "--theory", "ktheory-twisted"], p) {
            let want = ktheory_twisted_closed_form(n, &d).unwrap().to_string();
            same(format!("twisted n = {n}, d = {d:?}"), &text.trim().to_string(), &want, p);
        }
    }
}

fn top_degree(p: &mut Vec<String>) {
    for n in 3..=8u32 {
        for d in partitions(n - 3) {
            let ds = d.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
            if let Some(text) = ok(&["intersect", "--n", &n.to_string(), "--d", &ds], p) {
                let want = chow_closed_form(n, &d).unwrap().to_string();
                same(format!("top degree n = {n}, d = {d:?}"), &text.trim().to_string(), &want, p);
            }
        }
    }
}

fn geometry(p: &mut Vec<String>) {
    let cases: [(&[&str], &str); 5] = [
        (&["--space", "proj", "--m", "3"], reference::P3),
        (&["--space", "blowup-point", "--m", "3"], reference::BLOWUP_P3),
        (&["--space", "proj-bundle", "--m", "2", "--twists", "1,0"], reference::BLOWUP_P3),
        (&["--space", "milnor", "--m", "1", "--n", "1"], reference::P1),
        (&["--space", "proj", "--m", "2"], reference::P2),
    ];
    for (args, want) in cases {
        let mut full = vec!["class"];
        full.extend_from_slice(args);
        if let Some(text) = ok(&full, p) {
            same(args.join(" "), &text.trim().to_string(), &lazard(want).to_string(), p);
        }
        full.extend_from_slice(&["--theory", "ktheory"]);
        if let Some(text) = ok(&full, p) {
            let dim = lazard(want).weight_of().unwrap_or(0);
            let want = if dim == 1 { "beta".to_string() } else { format!("beta^{dim}") };
            same(format!("{} in K-theory", args.join(" ")), &text.trim().to_string(), &want, p);
        }
    }
}

fn properties(p: &mut Vec<String>) {
    // Deterministic output and a cache that survives a round trip.
    let a = ok(&["tables", "--max-n", "7", "--format", "tsv"], p);
    let b = ok(&["tables", "--max-n", "7", "--format", "tsv"], p);
    if a != b {
        p.push("two identical tables runs printed different output".into());
    }
    let dir = tempfile::tempdir().expect("temp dir");
    let cache = dir.path().join("cache.json");
    let cache = cache.to_str().expect("utf-8 path");
    let first = ok(&["--cache", cache, "intersect", "--n", "8", "--d", "1,1"], p);
    let second = ok(&["--cache", cache, "intersect", "--n", "8", "--d", "1,1"], p);
    if first != second {
        p.push(format!("cached value changed: {first:?} then {second:?}"));
    }
    if let Some(info) = ok(&["--cache", cache, "cache-info"], p) {
        if !info.contains("universal") {
            p.push(format!("cache-info shows no universal entries: {info}"));
        }
    }
}

fn boundary(p: &mut Vec<String>) {
    let code = m0n(&["intersect", "--n", "9"]).status.code();
    same("universal n = 9 exit code".into(), &code.unwrap_or(-1), &3, p);
    let code = m0n(&["intersect", "--n", "6", "--d", "-1"]).status.code();
    same("negative exponent exit code".into(), &code.unwrap_or(-1), &2, p);
    if let Some(text) = ok(&["intersect", "--n", "12", "--d", "3,3,2,1", "--theory", "chow"], p) {
        let want = chow_closed_form(12, &[3, 3, 2, 1]).unwrap().to_string();
        same("chow n = 12".into(), &text.trim().to_string(), &want, p);
    }
    if let Some(text) = ok(&["intersect", "--n", "12", "--d", "2,1", "--theory", "ktheory-twisted"], p) {
        let want = ktheory_twisted_closed_form(12, &[2, 1]).unwrap().to_string();
        same("twisted n = 12".into(), &text.trim().to_string(), &want, p);
    }
}

fn main() {
    let binary_checks: [fn(&mut Vec<String>); 10] = [
        table_reproduction,
        m0n_classes,
        projective_basis,
        law_series,
        law_consistency,
        specialization,
        top_degree,
        geometry,
        properties,
        boundary,
    ];
    let mut passed = 0;
    for (k, check) in (1u8..).zip(binary_checks) {
        let lib = run_criterion(k);
        let mut problems = lib.failures.clone();
        if lib.compared == 0 {
            problems.push("library check made no comparisons".into());
        }
        check(&mut problems);
        let verdict = if problems.is_empty() { "PASS" } else { "FAIL" };
        println!("criterion {k:>2} [{verdict}] {}", CRITERIA[k as usize - 1]);
        for line in &problems {
            println!("    - {line}");
        }
        passed += problems.is_empty() as usize;
    }
    println!("{passed}/{} criteria passed", CRITERIA.len());
    if passed != CRITERIA.len() {
        std::process::exit(1);
    }
}
