//! Export the full isomorphism-defect equation systems `E[i,j]^k = 0` at a
//! chosen normal-form stage, including the dimensions (7 and 8) for which
//! no certified elimination script ships.
//!
//! Run with `cargo run --example isomorphism_equations [n] [stage]`.

use filiform::isokit::{export_equations, Stage};

fn main() {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(9);
    let stage = std::env::args()
        .nth(2)
        .and_then(|s| Stage::parse(&s))
        .unwrap_or(Stage::PropG);
    let export = export_equations(n, stage).expect("supported dimension");
    println!(
        "n = {}, stage = {}, deformation direction = {}",
        export.n, export.stage, export.derivation
    );
    if let Some(w) = &export.warning {
        println!("warning: {w}");
    }
    println!("{} equations:", export.equations.len());
    for eq in &export.equations {
        println!("  {} := {}", eq.label, eq.poly);
    }
}
