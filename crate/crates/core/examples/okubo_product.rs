// The Okubo product on the basis and the composition law `n(x*y) = n(x)n(y)`.

use okubic::exactfield::Sampler;
use okubic::okubo::{okubo_mul, okubo_norm, structure_constants, Flavor, OkuboElement, LABELS};

pub fn run_example() {
    let c = structure_constants(Flavor::Compact);
    println!("{} nonzero structure constants", c.nonzero().len());
    let (i1, i2) = (OkuboElement::basis(Flavor::Compact, 1), OkuboElement::basis(Flavor::Compact, 2));
    let p = okubo_mul(&i1, &i2).unwrap();
    for (label, v) in LABELS.iter().zip(&p.coeffs) {
        if !v.is_zero() {
            println!("  {} * {} has {label}-coefficient {v}", LABELS[1], LABELS[2]);
        }
    }
    let mut s = Sampler::new(11);
    let (x, y) = (OkuboElement::random(&mut s, Flavor::Compact), OkuboElement::random(&mut s, Flavor::Compact));
    let lhs = okubo_norm(&okubo_mul(&x, &y).unwrap());
    assert_eq!(lhs, okubo_norm(&x) * okubo_norm(&y));
    println!("n(x*y) = {lhs}");
}

#[allow(dead_code)]
fn main() {
    run_example();
}
