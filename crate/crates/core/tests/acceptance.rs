mod common;

use std::process::ExitCode;
use std::time::Instant;

use common::criteria::*;

fn report(id: usize, name: &str, run: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let (checks, bad) = run();
    let pass = bad.is_empty() && checks > 0;
    println!(
        "criterion {id}: {} {name} ({checks} checks, {} failures, {:.2?})",
        if pass { "PASS" } else { "FAIL" },
        bad.len(),
        start.elapsed()
    );
    for b in bad.iter().take(5) {
        println!("    {b}");
    }
    pass
}

fn main() -> ExitCode {
    let corpus = audit_corpus();
    let values = corpus_values(&corpus);
    let identity = identity_corpus();
    let results = [
        report(1, "family oracles", family_oracles),
        report(2, "auxiliary values", auxiliary_values),
        report(3, "bound audit", || bound_audit(&corpus, &values)),
        report(4, "sharpness", sharpness),
        report(5, "transform soundness", || transform_soundness(6)),
        report(6, "identities", || identities(&identity)),
        report(7, "greedy ratio", || greedy_ratio(&corpus, &values)),
        report(8, "reductions", || reductions(5, 4, 5, 4)),
        report(9, "structure", structure),
    ];
    if results.iter().all(|&p| p) {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
