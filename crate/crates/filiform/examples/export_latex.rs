//! Emit the generic bracket table and the variety equations as LaTeX.
//!
//! Run with `cargo run --example export_latex [n]` (default 9).

use filiform::cli::bracket_table_latex;
use filiform::variety::known_relations;

fn main() {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(9);
    println!("% bracket table, dimension {n}");
    print!("{}", bracket_table_latex(n));
    println!("% variety equations");
    println!("\\begin{{align*}}");
    for (_, poly) in known_relations(n).expect("supported dimension").equations {
        println!("  {} &= 0 \\\\", poly.latex());
    }
    println!("\\end{{align*}}");
}
