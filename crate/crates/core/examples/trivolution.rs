// The order-three automorphism of the Okubo algebra and its fixed subalgebra.

use okubic::exactfield::Sampler;
use okubic::okubo::{fix_tau, recovered_oct_mul, trivolution, Flavor, OkuboElement};

pub fn run_example() {
    let i1 = OkuboElement::basis(Flavor::Compact, 1);
    println!("tau(i1) = {:?}", trivolution(&i1).coeffs);
    let mut s = Sampler::new(5);
    let x = OkuboElement::random(&mut s, Flavor::Compact);
    assert_eq!(trivolution(&trivolution(&trivolution(&x))), x);
    let (fixed, moving) = fix_tau(&x);
    assert_eq!(&fixed + &moving, x);
    let e = OkuboElement::e(Flavor::Compact);
    assert_eq!(recovered_oct_mul(&e, &x).unwrap(), x);
    println!("e is the unit of the recovered octonion product");
}

#[allow(dead_code)]
fn main() {
    run_example();
}
