//! The acceptance suite: one line per criterion, each run against the
//! default configuration and held to its time budget.
//!
//! Run with `cargo test -p omql-core --test acceptance -- --nocapture` to
//! see the per-criterion report.

use std::time::Instant;

use omql_core::suite::{run_criterion, RunConfig, Status, CRITERIA};

/// Wall-clock budget per criterion, in seconds.
fn budget_secs(key: &str) -> u64 {
    match key {
        "SATURATION_AXIOMS" => 5,
        "AXIOM_TAUTOLOGY" => 60,
        "PROOF_CORPUS" => 5,
        "REPRESENTATION" => 120,
        "RESIDUATED_ENUMERATION" => 30,
        "FORCING_TRUTH_IDEAL" => 120,
        "CONSEQUENCE_BRIDGE" => 120,
        "DEDUCTION_THEOREM" => 60,
        "FACTOR_DECOMPOSITION" => 10,
        "DISCRIMINATOR" => 5,
        "NONTHEOREM_REFUTED" => 1,
        other => panic!("no budget for `{other}`"),
    }
}

#[test]
fn acceptance_criteria() {
    let config = RunConfig::default();
    let mut failures = Vec::new();
    for key in CRITERIA {
        let budget = budget_secs(key);
        let start = Instant::now();
        let outcome = run_criterion(key, &config).expect("default configuration is valid");
        let elapsed = start.elapsed();
        println!(
            "{} {} [{:.2}s / {}s] {}",
            outcome.key,
            outcome.status,
            elapsed.as_secs_f64(),
            budget,
            outcome.detail
        );
        if outcome.status != Status::Pass {
            failures.push(format!("{key}: {}", outcome.detail));
        }
        if elapsed.as_secs() >= budget {
            failures.push(format!(
                "{key}: took {:.2}s, budget {budget}s",
                elapsed.as_secs_f64()
            ));
        }
    }
    assert!(failures.is_empty(), "\n{}", failures.join("\n"));
}

#[test]
fn suite_report_is_deterministic_for_a_seed() {
    let config = RunConfig {
        models: vec!["b2".into(), "b4".into(), "mo2".into()],
        ..RunConfig::default()
    };
    let a = omql_core::suite::run_suite(&config).unwrap().render();
    let b = omql_core::suite::run_suite(&config).unwrap().render();
    assert_eq!(a, b);
}
