// The Okubic projective line as a quadric in nine dimensions.

use okubic::geometry::{line_chart, line_embed, quadric, LinePoint};
use okubic::okubo::{Flavor, OkuboElement};

pub fn run_example() {
    let x = OkuboElement::from_ints(Flavor::Compact, [1, 0, 2, 0, 0, -1, 0, 0]);
    let p = line_embed(&LinePoint::Finite(x.clone())).unwrap();
    println!("quadric at the embedded point: {}", quadric(&p.x, &p.xi1, &p.xi2));
    assert_eq!(line_chart(&p).unwrap(), LinePoint::Finite(x));
    let inf = line_embed(&LinePoint::Infinity).unwrap();
    assert_eq!(line_chart(&inf).unwrap(), LinePoint::Infinity);
}

#[allow(dead_code)]
fn main() {
    run_example();
}
