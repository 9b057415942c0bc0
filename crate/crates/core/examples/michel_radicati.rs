// The deformed matrix product: a composition law exactly at theta = ±√3/6.

use okubic::exactfield::F3;
use okubic::okubo::{michel_radicati_composition_defect, okubo_theta, Flavor, OkuboElement, MR_COMPOSITION_WITNESS};

pub fn run_example() {
    let (a, b) = MR_COMPOSITION_WITNESS;
    let (x, y) = (OkuboElement::from_ints(Flavor::Compact, a), OkuboElement::from_ints(Flavor::Compact, b));
    for theta in [F3::zero(), okubo_theta(), -okubo_theta()] {
        let d = michel_radicati_composition_defect(&x, &y, &theta).unwrap();
        println!("theta = {theta}: composition defect {d}");
    }
}

#[allow(dead_code)]
fn main() {
    run_example();
}
