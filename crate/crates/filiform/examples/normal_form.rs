//! Replay the normal-form chain for the matrix of a candidate isomorphism:
//! vanishing of the above-diagonal entry, diagonal powers, unit diagonal,
//! and constant subdiagonal, ending in the triangular normal form.
//!
//! Run with `cargo run --example normal_form [n]` (default 9).

use filiform::isokit::{builtin_scripts, run_script};

fn main() {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(9);
    let order = [
        "lemma_m12",
        "lemma_mii",
        "lemma_m22",
        "remark_mnn",
        "lemma_m11",
        "lemma_m32",
        "prop_g",
    ];
    let scripts = builtin_scripts();
    for name in order {
        let Some(script) = scripts.iter().find(|s| s.name == name && s.context.n == n) else {
            eprintln!("no script `{name}` for dimension {n}");
            std::process::exit(1);
        };
        let report = run_script(script);
        println!(
            "{} (n = {}): {}",
            name,
            n,
            if report.passed { "PASS" } else { "FAIL" }
        );
        if name == "prop_g" || !report.passed {
            for step in &report.steps {
                println!("   [{}] {}: {}", step.index, step.desc, step.detail);
            }
        }
        if !report.passed {
            std::process::exit(2);
        }
    }
}
