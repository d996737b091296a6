use m0n_core::verify::run_suite;

#[test]
fn full_suite_passes() {
    let report = run_suite();
    println!("{report}");
    assert!(report.passed(), "{report}");
}
