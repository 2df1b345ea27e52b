//! The slow-tier grid point: every check in the registry at (3, 2).

use mm_core::verify::{run_params, verify_params, RunOptions, Verdict};

#[test]
#[ignore = "slow tier; minutes of Groebner work"]
fn full_registry_passes_at_3_2() {
    let params = verify_params(3, 2, None).unwrap();
    let reports = run_params(&params, &RunOptions::default()).unwrap();
    assert!(!reports.is_empty());
    for r in &reports {
        assert_eq!(
            r.verdict,
            Verdict::Pass,
            "check {} did not pass at (3, 2): {:#?}",
            r.check,
            r.details
        );
    }
}
