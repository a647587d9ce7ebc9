//! The Vergne parametrization: index sets, basis cocycles and their
//! identities, and the generic filiform bracket table.
//!
//! Run with `cargo run --example cocycle_basis`.

use filiform::liecore::{cocycle_defect, jacobiator};
use filiform::variety::jacobi_cross_terms;
use filiform::vergne::{delta_set, generic_filiform, mu0, psi};

fn main() {
    for n in [9usize, 10, 11] {
        let delta = delta_set(n);
        println!("Delta_{n} has {} indices: {:?}", delta.len(), delta);
    }

    // every basis cocycle is a 2-cocycle of the standard bracket
    for n in 6..=13usize {
        let base = mu0(n);
        assert!(jacobiator(&base).is_zero());
        for (r, s) in delta_set(n) {
            let c = psi(n, r, s).expect("index in Delta_n");
            assert!(
                cocycle_defect(&base, &c).expect("same dim").is_zero(),
                "psi[{r},{s}] fails for n = {n}"
            );
        }
        // and the jacobiator of the generic bracket is its cocycle part
        // composed with itself: the cross terms vanish identically
        assert!(jacobi_cross_terms(n).is_zero());
        println!("n = {n}: all basis cocycle identities hold");
    }

    // a few rows of the generic bracket table for dimension 9
    let model = generic_filiform(9);
    println!("\ngeneric bracket, dimension 9 (nonzero rows):");
    for i in 0..9u8 {
        for j in (i + 1)..9u8 {
            let value = model.mu.value(i, j);
            let terms: Vec<String> = value
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| format!("({c}) x_{k}"))
                .collect();
            if !terms.is_empty() {
                println!("   mu(x_{i}, x_{j}) = {}", terms.join(" + "));
            }
        }
    }
}
