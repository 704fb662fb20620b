mod common;

use common::criteria::{audit_corpus, corpus_values, greedy_ratio};

#[test]
fn greedy_stays_within_proven_ratio() {
    let corpus = audit_corpus();
    let values = corpus_values(&corpus);
    let (checks, bad) = greedy_ratio(&corpus, &values);
    assert!(checks > 2000, "{checks}");
    assert!(bad.is_empty(), "{bad:?}");
}
