// Derivation algebras by solving the Leibniz system exactly.

use okubic::derivations::{check_tau_grading, derivation_report, AlgebraPresentation};
use okubic::hurwitz::OctonionProduct;
use okubic::okubo::Flavor;

pub fn run_example() {
    for (name, alg) in [
        ("okubo", AlgebraPresentation::okubo(Flavor::Compact)),
        ("split-okubo", AlgebraPresentation::okubo(Flavor::Split)),
        ("split-octonion", AlgebraPresentation::octonion(OctonionProduct::Hurwitz)),
    ] {
        let r = derivation_report(&alg);
        println!("{name}: dim {} signature {:?}", r.dimension, r.killing_signature);
    }
    let g = check_tau_grading(Flavor::Compact);
    println!("tau grading: g0 {} + g1 {}, holds = {}", g.dim_g0, g.dim_g1, g.holds());
}

#[allow(dead_code)]
fn main() {
    run_example();
}
