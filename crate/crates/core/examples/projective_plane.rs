// Veronese coordinates for the Okubic plane, incidence and the affine chart.

use okubic::geometry::{affine_join, affine_incident, plane_decode, plane_embed, veronese_violations, AffinePoint, PlanePoint, VeroneseVector};
use okubic::okubo::{Flavor, OkuboElement};

pub fn run_example() {
    let e = OkuboElement::e(Flavor::Compact);
    let i3 = OkuboElement::basis(Flavor::Compact, 3);
    let p = AffinePoint::new(e.clone(), i3.clone()).unwrap();
    let q = AffinePoint::origin();
    let line = affine_join(&p, &q).unwrap();
    assert!(affine_incident(&p, &line) && affine_incident(&q, &line));
    println!("join: {}", serde_json::to_string(&line).unwrap());

    let point = plane_embed(&PlanePoint::affine(&p)).unwrap();
    assert_eq!(plane_decode(&point), PlanePoint::affine(&p));
    let bad = VeroneseVector::from_ints([&e, &OkuboElement::zero(Flavor::Compact), &OkuboElement::zero(Flavor::Compact)], [1, 1, 1]);
    println!("violations of (e,0,0;1,1,1): {:?}", veronese_violations(&bad));
}

#[allow(dead_code)]
fn main() {
    run_example();
}
