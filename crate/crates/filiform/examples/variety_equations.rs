//! Derive the equations of the varieties of filiform brackets from the
//! Jacobi identity and compare them, by exact rational linear algebra, with
//! the published systems.
//!
//! Run with `cargo run --example variety_equations`.

use filiform::variety::{compare_relations, jacobi_relations, known_relations};

fn main() {
    for n in 7..=11usize {
        let derived = jacobi_relations(n);
        println!(
            "== dimension {n}: {} independent relation(s)",
            derived.len()
        );
        for (label, poly) in &derived.equations {
            println!("   {label}: {poly} = 0");
        }
        if derived.is_empty() {
            println!("   (the parameter space is the whole affine space)");
        }
        let published = known_relations(n).expect("supported dimension");
        if published.is_empty() {
            continue;
        }
        let comparison = compare_relations(n).expect("supported dimension");
        println!(
            "   published system has {} equation(s); two-way span match: {}",
            published.len(),
            comparison.exact_match()
        );
        for outcome in comparison
            .derived_in_published
            .iter()
            .chain(comparison.published_in_derived.iter())
        {
            if outcome.coefficients.is_none() {
                println!("   residue: {} is outside the other span", outcome.label);
            }
        }
    }
}
