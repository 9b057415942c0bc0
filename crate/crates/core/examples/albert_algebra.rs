// The deformed Albert algebra: idempotents, norms, kernels and the Jordan identity.

use okubic::albert::{cubic_norm, idempotent_from_point, quad_norm, search_jordan_witness, AlbertAlgebra};
use okubic::geometry::{plane_embed, PlanePoint, VeroneseVector};
use okubic::okubo::{Flavor, OkuboElement};

pub fn run_example() {
    let half = AlbertAlgebra::half();
    let e = OkuboElement::e(Flavor::Compact);
    let eps = idempotent_from_point(&plane_embed(&PlanePoint::Affine { x: e.clone(), y: e }).unwrap()).unwrap();
    assert!(half.is_idempotent(&eps) && half.is_rank1(&eps));
    println!("n(eps) = {}, N(eps) = {}", quad_norm(&eps), cubic_norm(&eps));
    let e0 = VeroneseVector::real_idempotent(0);
    println!("ker L_e0 = {}, ker L_eps = {}", half.kernel(&e0).kernel_dim, half.kernel(&eps).kernel_dim);
    for (n, d) in [(1, 2), (1, 1), (-1, 1)] {
        let alg = AlbertAlgebra::from_rational(n, d);
        let w = search_jordan_witness(&alg, 0, 50);
        println!("q = {n}/{d}: Jordan defect found = {}", w.is_some());
    }
}

#[allow(dead_code)]
fn main() {
    run_example();
}
