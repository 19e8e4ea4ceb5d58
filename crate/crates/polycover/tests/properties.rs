//! Corpus-driven property suites, one test per suite. The same functions
//! back the final acceptance criterion, so each stays independently runnable
//! and reports what it covered.

mod suites;

#[test]
fn filtration_axioms_and_closure_sandwich() {
    println!("{}", suites::filtration_axioms_and_closure_sandwich());
}

#[test]
fn waldschmidt_equals_min_vertex_sum() {
    println!("{}", suites::waldschmidt_equals_min_vertex_sum());
}

#[test]
fn resurgence_dominates_membership_ratios() {
    println!("{}", suites::resurgence_dominates_membership_ratios());
}

#[test]
fn bipartite_graphs_have_resurgence_one() {
    println!("{}", suites::bipartite_graphs_have_resurgence_one());
}

#[test]
fn hilbert_bases_minimal_and_generating() {
    println!("{}", suites::hilbert_bases_minimal_and_generating());
}

#[test]
fn irreducible_normality_matches_closed_form() {
    println!("{}", suites::irreducible_normality_matches_closed_form());
}

#[test]
fn np_ip_three_way_equivalence() {
    println!("{}", suites::np_ip_three_way_equivalence());
}
