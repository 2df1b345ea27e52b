//! End-to-end runs of the full check registry at desk-scale points.

use mm_core::verify::{run_params, verify_params, RunOptions, Verdict};

fn assert_no_failures(n: u32, d: u32) {
    let params = verify_params(n, d, None).unwrap();
    let reports = run_params(&params, &RunOptions::default()).unwrap();
    assert!(!reports.is_empty());
    for r in &reports {
        assert_ne!(
            r.verdict,
            Verdict::Fail,
            "check {} failed at ({n}, {d}): {:#?}",
            r.check,
            r.details
        );
    }
}

#[test]
fn full_registry_passes_at_2_2() {
    assert_no_failures(2, 2);
}

#[test]
fn full_registry_passes_at_2_3() {
    assert_no_failures(2, 3);
}
