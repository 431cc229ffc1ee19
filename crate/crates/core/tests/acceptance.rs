//! One PASS/FAIL line per acceptance criterion, all in exact arithmetic.
//! Run with `--nocapture` to see the report.

use contact_verma::verify::{self, all_pass, Check};

fn criterion(n: usize, title: &str, checks: Vec<Check>) -> bool {
    let pass = all_pass(&checks);
    println!("criterion {n}: {} {title} ({} checks)", if pass { "PASS" } else { "FAIL" }, checks.len());
    for c in checks.iter().filter(|c| !c.pass) {
        println!("    {c}");
    }
    pass
}

#[test]
fn acceptance() {
    let axioms = [verify::contact_axioms(), verify::conformal_axioms(), verify::lie_action(0, 200)].concat();
    let results = [
        criterion(1, "bracket and conformal axioms, Lie action", axioms),
        criterion(2, "structure constants", verify::structure_constants()),
        criterion(3, "singular vectors and the empty degree-4 search", verify::singular_vectors(4, 2)),
        criterion(4, "consecutive maps compose to zero", verify::complex_identities(3, 5)),
        criterion(5, "homology window", verify::homology_window(3, 6)),
        criterion(6, "distinguished homology vectors", verify::distinguished_vectors()),
        criterion(7, "graded homology tables", verify::gr_tables()),
        criterion(8, "characters and sizes", verify::characters_and_sizes(12)),
    ];
    assert!(results.iter().all(|&p| p), "some acceptance criterion failed");
}
