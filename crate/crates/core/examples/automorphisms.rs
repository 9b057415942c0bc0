// Automorphisms from unitary 3x3 matrices, lifted to the Albert algebra.

use okubic::albert::{cyclic_shift, lift_okubo_automorphism, random_element, AlbertAlgebra};
use okubic::exactfield::Sampler;
use okubic::okubo::{automorphism_from_unitary, random_skew, Flavor};

pub fn run_example() {
    let mut s = Sampler::new(23);
    let phi = automorphism_from_unitary(&random_skew(&mut s, Flavor::Compact), Flavor::Compact).unwrap();
    assert!(phi.linear().is_multiplicative() && phi.linear().is_isometry());
    let lifted = lift_okubo_automorphism(phi);
    let alg = AlbertAlgebra::half();
    let (a, b) = (random_element(&mut s), random_element(&mut s));
    assert_eq!(lifted.apply(&alg.mul(&a, &b)), alg.mul(&lifted.apply(&a), &lifted.apply(&b)));
    assert_eq!(cyclic_shift(&alg.mul(&a, &b)), alg.mul(&cyclic_shift(&a), &cyclic_shift(&b)));
    println!("lifted automorphism and cyclic shift both respect the product");
}

#[allow(dead_code)]
fn main() {
    run_example();
}
