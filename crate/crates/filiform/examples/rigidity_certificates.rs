//! Replay the five elimination scripts proving that the canonical linear
//! deformation is non-trivial: any isomorphism between `mu_t` and `mu` on
//! the declared open set forces `t = 0`.
//!
//! Run with `cargo run --example rigidity_certificates`.

use filiform::isokit::{builtin_scripts, run_script};

fn main() {
    let mut all_pass = true;
    for script in builtin_scripts()
        .iter()
        .filter(|s| s.name.starts_with("prop_dim"))
    {
        let report = run_script(script);
        println!(
            "{} (n = {}): {} — concluded [{}]",
            report.script,
            report.dim,
            if report.passed { "PASS" } else { "FAIL" },
            report.concluded.join(", ")
        );
        for note in &report.notes {
            println!("   note: {note}");
        }
        // show the closing steps: the corrected combination and the unit
        for step in report
            .steps
            .iter()
            .rev()
            .take(3)
            .collect::<Vec<_>>()
            .iter()
            .rev()
        {
            println!("   [{}] {}: {}", step.index, step.desc, step.detail);
        }
        all_pass &= report.passed;
    }
    std::process::exit(if all_pass { 0 } else { 2 });
}
