//! Acceptance suite: one test per criterion, each printing a pass line with
//! the criterion summary. Run with `cargo test --test acceptance -- --nocapture`
//! to see every line.

use weylcat::acceptance as acc;

const SEED: u64 = 0;

fn run(id: usize, name: &str, result: weylcat::Result<String>) {
    match result {
        Ok(detail) => println!("[PASS] {id:>2} {name}: {detail}"),
        Err(e) => {
            println!("[FAIL] {id:>2} {name}: {e}");
            panic!("criterion {id} ({name}) failed: {e}");
        }
    }
}

#[test]
fn criterion_01_window_relations() {
    run(1, "window relations", acc::c01_window_relations(SEED));
}

#[test]
fn criterion_02_projective_sequences() {
    run(2, "projective sequences", acc::c02_projective_sequences(SEED));
}

#[test]
fn criterion_03_v1_exhaustive() {
    run(3, "V_1 exhaustiveness", acc::c03_v1_exhaustive(SEED));
}

#[test]
fn criterion_04_krull_schmidt() {
    run(4, "Krull-Schmidt round trip", acc::c04_krull_schmidt(SEED));
}

#[test]
fn criterion_05_v2_dichotomy() {
    run(5, "V_2 dichotomy", acc::c05_v2_dichotomy(SEED));
}

#[test]
fn criterion_06_end_dimensions() {
    run(6, "End dimensions", acc::c06_end_dimensions(SEED));
}

#[test]
fn criterion_07_theta() {
    run(7, "theta consistency", acc::c07_theta(SEED));
}

#[test]
fn criterion_08_localize_vs_oracle() {
    run(8, "localization vs direct limit", acc::c08_localize_vs_oracle(SEED));
}

#[test]
fn criterion_09_twisted_support() {
    run(9, "twisted support law", acc::c09_twisted_support(SEED));
}

#[test]
fn criterion_10_omega() {
    run(10, "oscillator map", acc::c10_omega(SEED));
}

#[test]
fn criterion_11_sp4loc() {
    run(11, "north localizations", acc::c11_sp4loc(SEED));
}

#[test]
fn criterion_12_catalog() {
    run(12, "catalog integrity", acc::c12_catalog(SEED));
}

#[test]
fn criterion_13_figure() {
    run(13, "figure rendering", acc::c13_figure(acc::FIGURE_GOLDEN));
}

#[test]
fn criterion_14_rank_one() {
    run(14, "rank-one refusal", acc::c14_rank_one(SEED));
}
