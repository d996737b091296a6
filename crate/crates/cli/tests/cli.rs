use m0n_cli::run;
use m0n_core::algebra::{Poly, RationalPolynomial};
use m0n_core::moduli::IntersectionKey;
use m0n_core::reference::lazard;
use m0n_core::series::TruncatedSeries;

/// Runs in-process; returns (exit code, stdout, stderr).
fn m0n(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("m0n").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn stdout(args: &[&str]) -> String {
    let (code, out, err) = m0n(args);
    assert_eq!(code, 0, "m0n {args:?} failed: {err}");
    out
}

#[test]
fn intersect_text() {
    assert_eq!(stdout(&["intersect", "--n", "7", "--d", "2,1"]), "-2*u1\n");
    assert_eq!(stdout(&["intersect", "--n", "7", "--d", "0,1,2"]), "-2*u1\n");
    assert_eq!(stdout(&["intersect", "--n", "5", "--d", "1,1", "--theory", "chow"]), "2\n");
    assert_eq!(stdout(&["intersect", "--n", "5", "--theory", "ktheory"]), "beta^2\n");
    assert_eq!(stdout(&["intersect", "--n", "8", "--d", "1,1,1,1,1"]), "120\n");
    assert_eq!(stdout(&["intersect", "--n", "4", "--d", "2"]), "0\n");
}

#[test]
fn intersect_json_round_trips() {
    let out = stdout(&["intersect", "--n", "8", "--d", "1", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    let key = IntersectionKey::from_json(&doc).unwrap();
    assert_eq!((key.n(), key.d()), (8, &[1][..]));
    let value = Poly::from_json(&doc["value"]).unwrap();
    assert_eq!(value.to_string(), stdout(&["intersect", "--n", "8", "--d", "1"]).trim());

    let out = stdout(&["class", "--n", "6", "--basis", "p", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    let value = RationalPolynomial::from_json(&doc["value"]).unwrap();
    assert_eq!(value.to_string(), "45/2*p1^3 - 30*p1*p2 + 17/2*p3");
}

#[test]
fn intersect_tsv_and_latex() {
    assert_eq!(
        stdout(&["intersect", "--n", "6", "--d", "1", "--format", "tsv"]),
        "n\td\ttheory\tvalue\n6\t1\tuniversal\t10*u1^2 - 9*u2\n"
    );
    assert_eq!(stdout(&["intersect", "--n", "6", "--d", "1", "--format", "latex"]), "10u_{1}^{2}-9u_{2}\n");
    assert_eq!(
        stdout(&["class", "--n", "6", "--basis", "p", "--format", "latex"]),
        "\\frac{45}{2}p_{1}^{3}-30p_{1}p_{2}+\\frac{17}{2}p_{3}\n"
    );
}

#[test]
fn exit_codes() {
    assert_eq!(m0n(&["intersect", "--n", "9"]).0, 3);
    assert_eq!(m0n(&["intersect", "--n", "9", "--d", "1"]).0, 3);
    assert_eq!(m0n(&["intersect", "--n", "6", "--d", "-1"]).0, 2);
    assert_eq!(m0n(&["intersect", "--n", "6", "--d", "x"]).0, 2);
    assert_eq!(m0n(&["intersect", "--n", "2"]).0, 2);
    assert_eq!(m0n(&["intersect", "--n", "4", "--d", "1,0,0,0,1"]).0, 2);
    assert_eq!(m0n(&["intersect", "--n", "5", "--theory", "chow", "--basis", "p"]).0, 2);
    assert_eq!(m0n(&["intersect"]).0, 2);
    assert_eq!(m0n(&["nonsense"]).0, 2);
    assert_eq!(m0n(&["class", "--space", "proj"]).0, 2);
    assert_eq!(m0n(&["class", "--space", "proj", "--m", "6"]).0, 3);
    assert_eq!(m0n(&["class", "--space", "proj-bundle", "--m", "2", "--twists", "2,0"]).0, 2);
    assert_eq!(m0n(&["verify", "--criterion", "0"]).0, 2);
    assert_eq!(m0n(&["series", "--name", "law", "--order", "9"]).0, 3);
    let (code, out, err) = m0n(&["intersect", "--n", "9"]);
    assert!(out.is_empty());
    assert!(err.starts_with("error: "), "{err}");
    assert_eq!(code, 3);
}

#[test]
fn help_and_version_succeed() {
    let (code, out, _) = m0n(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("intersect"));
    assert_eq!(m0n(&["--version"]).0, 0);
}

#[test]
fn classes_of_varieties() {
    assert_eq!(stdout(&["class", "--space", "proj", "--m", "3"]), "u1^3 + 2*u3\n");
    assert_eq!(stdout(&["class", "--space", "blowup-point", "--m", "3"]), "u1^3 + u3\n");
    assert_eq!(stdout(&["class", "--space", "milnor", "--m", "2", "--n", "1"]), "u1^2\n");
    assert_eq!(stdout(&["class", "--space", "proj", "--m", "3", "--theory", "chow"]), "0\n");
    assert_eq!(stdout(&["class", "--space", "proj", "--m", "0"]), "1\n");
    assert_eq!(stdout(&["class", "--n", "5"]), format!("{}\n", lazard("4u1^2 - 3u2")));
    assert_eq!(stdout(&["class", "--n", "6", "--theory", "ktheory-twisted"]), "beta^3\n");
}

#[test]
fn tables_formats() {
    let tsv = stdout(&["tables", "--max-n", "5", "--format", "tsv"]);
    let lines: Vec<&str> = tsv.lines().collect();
    assert_eq!(lines[0], "theory\tn\tdegree\td\tvalue");
    assert!(lines.contains(&"universal\t5\t1\t1\tu1"));
    assert!(lines.contains(&"universal\t5\t2\t1,1\t2"));
    // One row per cell: |d| = 0 (3 rows), 1 (2 rows), 2 (1 row × 2 columns).
    assert_eq!(lines.len(), 1 + 3 + 2 + 2);

    let latex = stdout(&["tables", "--max-n", "6", "--format", "latex"]);
    assert_eq!(latex.matches("\\begin{table}").count(), 4);
    assert!(latex.contains("$n$ & $\\psi_1^2$ & $\\psi_1\\psi_2$ \\\\ \\hline"));
    assert!(latex.contains("6 & $31u_{1}^{3}-30u_{1}u_{2}+17u_{3}$ \\\\"));

    let twisted = stdout(&["tables", "--max-n", "6", "--theory", "ktheory-twisted", "--format", "tsv"]);
    assert!(twisted.contains("ktheory-twisted\t6\t1\t1\t3*beta^2"), "{twisted}");

    let p = stdout(&["tables", "--max-n", "6", "--basis", "p"]);
    assert!(p.contains("45/2*p1^3 - 30*p1*p2 + 17/2*p3"), "{p}");
}

#[test]
fn tables_are_deterministic() {
    let a = stdout(&["tables", "--max-n", "8", "--format", "json"]);
    let b = stdout(&["tables", "--max-n", "8", "--format", "json"]);
    assert_eq!(a, b);
}

#[test]
fn series_output() {
    assert_eq!(stdout(&["series", "--name", "inverse", "--order", "3"]), "-x - u1*x^2 - u1^2*x^3 + ...\n");
    assert_eq!(stdout(&["series", "--name", "inverse", "--theory", "chow", "--order", "3"]), "-x + ...\n");
    let out = stdout(&["series", "--name", "q", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    let q = TruncatedSeries::from_json(&doc["value"]).unwrap();
    assert_eq!(q.coeff(&[0, 0]), lazard("u1"));
    assert_eq!(
        stdout(&["series", "--name", "generating", "--n", "4", "--theory", "ktheory-twisted"]),
        "beta + t1 + t2 + t3 + t4\n"
    );
    assert_eq!(m0n(&["series", "--name", "generating", "--n", "4"]).0, 2);
    assert_eq!(m0n(&["series", "--name", "three-root", "--theory", "chow"]).0, 2);
    assert!(stdout(&["series", "--name", "log", "--order", "3"]).starts_with("x"));
}

#[test]
fn verify_single_criterion() {
    let out = stdout(&["verify", "--criterion", "2"]);
    assert!(out.starts_with("[PASS]  2. classes of M0,n"), "{out}");
    assert!(out.ends_with("1/1 criteria passed\n"));
    let out = stdout(&["verify", "--criterion", "7", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["checks"][0]["passed"], true);
}

#[test]
fn cache_round_trip_and_rejection() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cache.json");
    let p = path.to_str().unwrap();

    let (code, out, _) = m0n(&["--cache", p, "cache-info"]);
    assert_eq!(code, 0);
    assert!(out.contains("no cache file yet"));

    let first = stdout(&["--cache", p, "intersect", "--n", "7", "--d", "1"]);
    let info = stdout(&["--cache", p, "cache-info"]);
    assert!(info.contains("universal: "), "{info}");
    let (_, second, err) = m0n(&["--cache", p, "intersect", "--n", "7", "--d", "1"]);
    assert_eq!(first, second);
    assert!(err.is_empty(), "{err}");

    // A tampered entry is recomputed, rejected with a warning, and dropped.
    let bogus = r#"[{"key":{"n":5,"d":[],"theory":"universal"},
        "value":{"system":"lazard","terms":[{"exp":[0,1,0,0,0],"coeff":"7"}]}}]"#;
    std::fs::write(&path, bogus).unwrap();
    let (code, out, err) = m0n(&["--cache", p, "class", "--n", "5"]);
    assert_eq!(code, 0);
    assert_eq!(out, "4*u1^2 - 3*u2\n");
    assert!(err.contains("warning:") && err.contains("rejected"), "{err}");
    let saved = std::fs::read_to_string(&path).unwrap();
    assert!(!saved.contains("\"7\""));

    std::fs::write(&path, "not json").unwrap();
    let (code, _, err) = m0n(&["--cache", p, "intersect", "--n", "5", "--d", "1"]);
    assert_eq!(code, 0);
    assert!(err.contains("warning:"), "{err}");
}

#[test]
fn no_cache_configured() {
    if std::env::var_os("M0N_CACHE").is_none() {
        assert_eq!(m0n(&["cache-info"]).0, 2);
    }
}
