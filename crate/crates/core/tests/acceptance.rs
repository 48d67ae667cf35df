//! Acceptance suite: one test per criterion, each printing its verdict line.
//!
//! Criterion 2 is expected to stay red until the two documented typo cells in
//! the published G2/P1 table are errata'd upstream: 170 of 172 printed cells
//! match bit-exactly, which is below the criterion's 99% bar by exactly one
//! cell. The two mismatches are confirmed typos (see the detail line); the
//! comparator logs and never auto-corrects them.

use eigencones::acceptance::{run_criterion, SuiteOptions};

fn check(id: usize) {
    let opts = SuiteOptions::default();
    let r = run_criterion(id, &opts);
    println!(
        "criterion {:2} ({}): {} [{:.2}s]\n    {}",
        r.id,
        r.name,
        if r.passed { "PASS" } else { "FAIL" },
        r.seconds,
        r.detail
    );
    assert!(r.passed, "criterion {} ({}) failed: {}", r.id, r.name, r.detail);
}

#[test]
fn criterion_01_facet_counts() {
    check(1);
}

#[test]
fn criterion_02_golden_tables() {
    check(2);
}

#[test]
fn criterion_03_golden_inequality_lists() {
    check(3);
}

#[test]
fn criterion_04_klm_vs_bk_counts() {
    check(4);
}

#[test]
fn criterion_05_irredundancy() {
    check(5);
}

#[test]
fn criterion_06_horn_cross_oracle() {
    check(6);
}

#[test]
fn criterion_07_sln_saturation_scan() {
    check(7);
}

#[test]
fn criterion_08_saturation_failure() {
    check(8);
}

#[test]
fn criterion_09_inversion_set_oracle() {
    check(9);
}

#[test]
fn criterion_10_cominuscule_collapse() {
    check(10);
}

#[test]
fn criterion_11_diagram_automorphism() {
    check(11);
}

#[test]
fn criterion_12_levi_factorization() {
    check(12);
}

#[test]
fn criterion_13_property_suites() {
    check(13);
}
