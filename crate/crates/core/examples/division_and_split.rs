// The compact Okubo algebra is a division algebra; the split one has zero divisors.

use okubic::exactfield::Sampler;
use okubic::okubo::{is_positive_definite, isotropic_witness, okubo_norm, zero_divisor_check, Flavor};

pub fn run_example() {
    for flavor in [Flavor::Compact, Flavor::Split] {
        let r = is_positive_definite(flavor);
        println!("{flavor}: positive definite = {}", r.positive_definite);
    }
    let d = isotropic_witness(Flavor::Split);
    println!("n(i1 + i6) = {}", okubo_norm(&d));
    let mut s = Sampler::new(3);
    assert!(zero_divisor_check(&d, &mut s, 10).unwrap());
    println!("(d*x)*d vanishes for every sampled x");
}

#[allow(dead_code)]
fn main() {
    run_example();
}
