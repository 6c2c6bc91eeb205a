//! Regenerates the committed rendering checked by the figure criterion:
//! `cargo run --example gen_golden > tests/data/figure1.txt`

use weylcat::sp4_catalog::{compass_simple, region_overlay, support_diagram, Compass};
use weylcat::sp_bridge::Coset;

fn main() {
    let mut got = String::new();
    got.push_str("overlay (odd coset):\n");
    got.push_str(&region_overlay(8, Some(Coset::Odd)));
    got.push('\n');
    for c in [Compass::N, Compass::W, Compass::E, Compass::S] {
        got.push_str(&format!("\n{}:\n", c.letter()));
        got.push_str(&support_diagram(&compass_simple(c), 8, Some(Coset::Odd)).unwrap());
        got.push('\n');
    }
    print!("{got}");
}
