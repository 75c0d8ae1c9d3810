//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.
//! Every comparison is exact (zero tolerance).

mod oracle;

use std::process::ExitCode;
use std::time::Instant;

use rho_core::par::Execution;
use rho_core::verify::{self, CheckResult};
use rho_core::RationalAngle;

fn report(index: usize, check: &CheckResult, secs: f64) {
    let status = if check.passed { "PASS" } else { "FAIL" };
    eprintln!(
        "[{status}] {index}. {} | cases {} | tolerance exact | {:.1}s | {}",
        check.name, check.cases, secs, check.detail
    );
}

fn main() -> ExitCode {
    let exec = Execution::default();
    let seed = 20_240_917;
    let mut all_passed = true;
    let mut run = |index: usize, f: &dyn Fn() -> CheckResult| {
        let start = Instant::now();
        let check = f();
        report(index, &check, start.elapsed().as_secs_f64());
        all_passed &= check.passed;
    };

    run(1, &|| verify::lens_agreement(50, exec));
    run(2, &|| verify::integer_lens_specialization(100, exec));
    run(3, &|| verify::maslov_algebra(1000, seed, exec));
    run(4, &|| verify::boundary_maslov_sign(500, seed + 1, exec));
    run(5, &|| verify::surgery_coherence(400, seed + 2, exec));
    run(6, &|| verify::cf_overlap(8, 3, seed + 3, exec));
    run(7, &|| {
        let (check, eps) = verify::torus_identity(5, exec);
        let expected = eps == Some(-1);
        CheckResult {
            detail: format!("{}; expected ε = −1: {}", check.detail, if expected { "yes" } else { "no" }),
            ..check
        }
    });
    run(8, &|| {
        let sturm = oracle::signature_vs_sturm(1000, 8, seed + 5, exec);
        let reduction = verify::multivariable_reduction(120, seed + 4, exec);
        CheckResult {
            name: "signature engine".into(),
            passed: sturm.passed && reduction.passed,
            cases: sturm.cases + reduction.cases,
            detail: format!("Sturm oracle: {}; n=1 reduction: {}", sturm.detail, reduction.detail),
        }
    });
    run(9, &|| {
        let check = verify::trefoil_anchors();
        let sigma = rho_core::signatures::levine_tristram(
            &rho_core::SeifertMatrix::trefoil(),
            &RationalAngle::frac(1, 2),
        )
        .map_or_else(|e| e.to_string(), |s| s.to_string());
        CheckResult { detail: format!("{}; σ(−1) = {sigma}", check.detail), ..check }
    });

    if all_passed {
        eprintln!("acceptance: all criteria passed");
        ExitCode::SUCCESS
    } else {
        eprintln!("acceptance: FAILED");
        ExitCode::FAILURE
    }
}
