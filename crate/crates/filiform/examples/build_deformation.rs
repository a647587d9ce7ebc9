//! Construct the linear deformations: the shift derivations, the hypothesis
//! checks, the identity between deformation directions and basis cocycles,
//! and the codimension-1 variant.
//!
//! Run with `cargo run --example build_deformation`.

use filiform::deform::{
    canonical_deformation, canonical_spec, check_hypotheses, derivation,
    direction_is_vergne_cocycle, gh_deform, verify_linear_deformation, DerivationSpec,
};
use filiform::exactalg::Polynomial;
use filiform::liecore::{LinearOperator, SubspaceSplit};
use filiform::vergne::{generic_filiform, mu0};

fn main() {
    // hypotheses hold identically in the parameters for every dimension
    for n in 6..=13usize {
        let model = generic_filiform(n);
        let split = SubspaceSplit::standard(n);
        let d3 = derivation(&DerivationSpec::D3 { n }).unwrap();
        let report = check_hypotheses(&model.mu, &split, &d3);
        println!("n = {n}: D3 hypotheses pass = {}", report.all_pass());
        assert!(report.all_pass());
        assert!(direction_is_vergne_cocycle(n, &DerivationSpec::D3 { n }).unwrap());
        if n % 2 == 1 && n >= 7 {
            let d4 = derivation(&DerivationSpec::D4 { n }).unwrap();
            assert!(check_hypotheses(&model.mu, &split, &d4).all_pass());
            assert!(direction_is_vergne_cocycle(n, &DerivationSpec::D4 { n }).unwrap());
            println!("        D4 hypotheses pass = true");
        }
    }

    // the canonical deformation is a genuine linear deformation,
    // identically in the free parameters
    for n in [9usize, 10, 11] {
        let model = generic_filiform(n);
        let def = canonical_deformation(&model.mu).unwrap();
        let report = verify_linear_deformation(&def);
        println!(
            "n = {n}: canonical direction = psi[1,{}] via {}; linear deformation checks = {}",
            if canonical_spec(n).name() == "D3" {
                n - 3
            } else {
                n - 4
            },
            canonical_spec(n).name(),
            report.all_pass()
        );
        assert!(report.all_pass());
    }

    // codimension-1 construction on the standard bracket: the abelian ideal
    // <x_1 .. x_{n-1}> with the identity derivation
    let n = 7;
    let base = mu0(n);
    let ideal: Vec<u8> = (1..n as u8).collect();
    let mut d = LinearOperator::zero(n);
    for &h in &ideal {
        d.set(h as usize, h as usize, Polynomial::one());
    }
    let def = gh_deform(&base, &ideal, 0, &d).unwrap();
    assert!(verify_linear_deformation(&def).all_pass());
    println!("\ncodimension-1 deformation of the standard bracket (n = {n}):");
    for j in 1..(n - 1) as u8 {
        println!(
            "   mu_t(x_0, x_{j}) = x_{} + ({}) x_{j}",
            j + 1,
            def.deformed.coeff(0, j, j)
        );
    }
}
