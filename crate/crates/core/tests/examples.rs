//! Every example runs to completion.

mod albert_algebra {
    include!("../examples/albert_algebra.rs");
}
mod automorphisms {
    include!("../examples/automorphisms.rs");
}
mod derivations {
    include!("../examples/derivations.rs");
}
mod division_and_split {
    include!("../examples/division_and_split.rs");
}
mod michel_radicati {
    include!("../examples/michel_radicati.rs");
}
mod okubo_product {
    include!("../examples/okubo_product.rs");
}
mod projective_line {
    include!("../examples/projective_line.rs");
}
mod projective_plane {
    include!("../examples/projective_plane.rs");
}
mod split_octonions {
    include!("../examples/split_octonions.rs");
}
mod trivolution {
    include!("../examples/trivolution.rs");
}
mod verification_suite {
    include!("../examples/verification_suite.rs");
}

#[test]
fn example_albert_algebra() {
    albert_algebra::run_example();
}

#[test]
fn example_automorphisms() {
    automorphisms::run_example();
}

#[test]
fn example_derivations() {
    derivations::run_example();
}

#[test]
fn example_division_and_split() {
    division_and_split::run_example();
}

#[test]
fn example_michel_radicati() {
    michel_radicati::run_example();
}

#[test]
fn example_okubo_product() {
    okubo_product::run_example();
}

#[test]
fn example_projective_line() {
    projective_line::run_example();
}

#[test]
fn example_projective_plane() {
    projective_plane::run_example();
}

#[test]
fn example_split_octonions() {
    split_octonions::run_example();
}

#[test]
fn example_trivolution() {
    trivolution::run_example();
}

#[test]
fn example_verification_suite() {
    verification_suite::run_example();
}
