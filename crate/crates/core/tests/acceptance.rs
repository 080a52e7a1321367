//! The acceptance suite: runs every criterion at its stated scale and
//! prints one pass/fail line per criterion.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the
//! lines; the whole suite is exact, no tolerances.

use cuspidal::verify::{run_all, Status, TypeFilter, DEFAULT_SEED};

#[test]
fn acceptance_criteria() {
    let reports = run_all(TypeFilter::all(), DEFAULT_SEED);
    let mut failed = Vec::new();
    for r in &reports {
        println!("{}", r.line());
        if r.status == Status::Fail {
            failed.push(r.id);
        }
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
