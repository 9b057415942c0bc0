// Split octonions, their para-Hurwitz and Petersson twists, and triality.

use okubic::exactfield::Sampler;
use okubic::hurwitz::{oct_mul, oct_norm, petersson_mul, tau_triality, SplitOctonion};

pub fn run_example() {
    let mut s = Sampler::new(17);
    let (x, y) = (SplitOctonion::random(&mut s), SplitOctonion::random(&mut s));
    assert_eq!(oct_norm(&oct_mul(&x, &y)), oct_norm(&x) * oct_norm(&y));
    assert_eq!(oct_norm(&petersson_mul(&x, &y)), oct_norm(&x) * oct_norm(&y));
    assert_eq!(tau_triality(&tau_triality(&tau_triality(&x))), x);
    println!("n(xy) = {}", oct_norm(&oct_mul(&x, &y)));
}

#[allow(dead_code)]
fn main() {
    run_example();
}
