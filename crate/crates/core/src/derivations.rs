//! Derivation algebras of finite-dimensional algebras given by structure
//! constants, and the τ-grading of the Okubo algebra.

use serde::{Deserialize, Serialize};

use crate::exactfield::F3;
use crate::hurwitz::OctonionProduct;
use crate::linalg::{nullspace, signature, ExactMatrix, Signature};
use crate::okubo::{self, fix_tau, mul, structure_constants, Flavor, OkuboElement};

/// An algebra on `F3^dim` with `b_a b_b = Σ_k c[(a*dim + b)*dim + k] b_k`.
#[derive(Clone, Debug)]
pub struct AlgebraPresentation {
    pub dimension: usize,
    pub constants: Vec<F3>,
    pub labels: Vec<String>,
}

impl AlgebraPresentation {
    pub fn new(dimension: usize, constants: Vec<F3>, labels: Vec<String>) -> Self {
        assert_eq!(constants.len(), dimension.pow(3), "structure tensor has the wrong size");
        assert_eq!(labels.len(), dimension, "one label per basis vector");
        AlgebraPresentation { dimension, constants, labels }
    }

    pub fn okubo(flavor: Flavor) -> Self {
        let labels = okubo::LABELS.iter().map(|s| s.to_string()).collect();
        AlgebraPresentation::new(okubo::DIM, structure_constants(flavor).dense().to_vec(), labels)
    }

    pub fn octonion(product: OctonionProduct) -> Self {
        let labels = crate::hurwitz::LABELS.iter().map(|s| s.to_string()).collect();
        AlgebraPresentation::new(crate::hurwitz::DIM, product.structure_constants(), labels)
    }

    /// All products zero.
    pub fn trivial(dimension: usize) -> Self {
        let labels = (0..dimension).map(|i| format!("b{i}")).collect();
        AlgebraPresentation::new(dimension, vec![F3::zero(); dimension.pow(3)], labels)
    }

    pub fn c(&self, a: usize, b: usize, k: usize) -> &F3 {
        &self.constants[(a * self.dimension + b) * self.dimension + k]
    }

    pub fn mul(&self, x: &[F3], y: &[F3]) -> Vec<F3> {
        let n = self.dimension;
        let mut out = vec![F3::zero(); n];
        for a in 0..n {
            if x[a].is_zero() {
                continue;
            }
            for b in 0..n {
                if y[b].is_zero() {
                    continue;
                }
                let p = &x[a] * &y[b];
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.c(a, b, k);
                    if !c.is_zero() {
                        *o += c * &p;
                    }
                }
            }
        }
        out
    }
}

/// A basis of `𝔡𝔢𝔯(A)` as `dim × dim` matrices acting on coordinate columns.
#[derive(Clone, Debug)]
pub struct DerivationSpace {
    pub dimension: usize,
    pub basis: Vec<ExactMatrix>,
}

/// Matrix of the Leibniz system `D(bᵢbⱼ) = D(bᵢ)bⱼ + bᵢD(bⱼ)`; unknown
/// `D[r][c]` sits in column `r*dim + c`.
pub fn leibniz_system(alg: &AlgebraPresentation) -> ExactMatrix {
    let n = alg.dimension;
    let mut m = ExactMatrix::zeros(n * n * n, n * n);
    let var = |r: usize, c: usize| r * n + c;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let row = (i * n + j) * n + k;
                let mut add = |col: usize, v: &F3| {
                    if !v.is_zero() {
                        let cur = m.get(row, col) + v;
                        m.set(row, col, cur);
                    }
                };
                for l in 0..n {
                    add(var(k, l), alg.c(i, j, l));
                    add(var(l, i), &-alg.c(l, j, k));
                    add(var(l, j), &-alg.c(i, l, k));
                }
            }
        }
    }
    m
}

pub fn derivation_space(alg: &AlgebraPresentation) -> DerivationSpace {
    let n = alg.dimension;
    let basis: Vec<ExactMatrix> = nullspace(&leibniz_system(alg))
        .into_iter()
        .map(|v| ExactMatrix::from_rows(v.chunks(n).map(<[F3]>::to_vec).collect()).expect("square"))
        .collect();
    DerivationSpace { dimension: basis.len(), basis }
}

fn flatten(m: &ExactMatrix) -> Vec<F3> {
    (0..m.rows()).flat_map(|i| m.row(i).to_vec()).collect()
}

fn span_rank(vectors: &[Vec<F3>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    ExactMatrix::from_rows(vectors.to_vec()).expect("equal lengths").rank()
}

/// Whether every commutator `[Dᵢ, Dⱼ]` lies in the span of the basis.
pub fn check_lie_closure(basis: &[ExactMatrix]) -> bool {
    let flat: Vec<Vec<F3>> = basis.iter().map(flatten).collect();
    let r = span_rank(&flat);
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let comm = basis[i].mul(&basis[j]).sub(&basis[j].mul(&basis[i]));
            let mut with = flat.clone();
            with.push(flatten(&comm));
            if span_rank(&with) != r {
                return false;
            }
        }
    }
    true
}

/// Signature of `Tr(DᵢDⱼ)` on the basis.
pub fn trace_form_signature(basis: &[ExactMatrix]) -> Signature {
    let k = basis.len();
    let mut g = ExactMatrix::zeros(k, k);
    for i in 0..k {
        for j in i..k {
            let t = basis[i].mul(&basis[j]).trace();
            g.set(i, j, t.clone());
            g.set(j, i, t);
        }
    }
    signature(&g).expect("square")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivationReport {
    pub dimension: usize,
    pub lie_closed: bool,
    pub killing_signature: Signature,
}

pub fn derivation_report(alg: &AlgebraPresentation) -> DerivationReport {
    let space = derivation_space(alg);
    DerivationReport {
        dimension: space.dimension,
        lie_closed: check_lie_closure(&space.basis),
        killing_signature: trace_form_signature(&space.basis),
    }
}

/// `g₀ = Fix(τ)` and its complement `g₁`, with the containments
/// `g₀g₀, g₁g₁ ⊆ g₀` and `g₀g₁, g₁g₀ ⊆ g₁` for products and brackets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradingReport {
    pub flavor: Flavor,
    pub dim_g0: usize,
    pub dim_g1: usize,
    pub products_graded: bool,
    pub brackets_graded: bool,
}

impl GradingReport {
    pub fn holds(&self) -> bool {
        self.dim_g0 + self.dim_g1 == okubo::DIM && self.products_graded && self.brackets_graded
    }
}

fn graded_basis(flavor: Flavor) -> [Vec<OkuboElement>; 2] {
    let mut parts: [Vec<Vec<F3>>; 2] = [Vec::new(), Vec::new()];
    for k in 0..okubo::DIM {
        let (fixed, moving) = fix_tau(&OkuboElement::basis(flavor, k));
        for (part, v) in parts.iter_mut().zip([fixed, moving]) {
            let mut with = part.clone();
            with.push(v.coeffs.to_vec());
            if span_rank(&with) > part.len() {
                *part = with;
            }
        }
    }
    parts.map(|p| p.into_iter().map(|c| OkuboElement::new(flavor, c.try_into().expect("8"))).collect())
}

pub fn check_tau_grading(flavor: Flavor) -> GradingReport {
    let [g0, g1] = graded_basis(flavor);
    let in_part = |x: &OkuboElement, part: usize| {
        let (fixed, moving) = fix_tau(x);
        if part == 0 { moving.is_zero() } else { fixed.is_zero() }
    };
    let parts = [&g0, &g1];
    let mut products_graded = true;
    let mut brackets_graded = true;
    for p in 0..2 {
        for r in 0..2 {
            let target = (p + r) % 2;
            for x in parts[p] {
                for y in parts[r] {
                    products_graded &= in_part(&mul(x, y), target);
                    brackets_graded &= in_part(&(mul(x, y) - mul(y, x)), target);
                }
            }
        }
    }
    GradingReport { flavor, dim_g0: g0.len(), dim_g1: g1.len(), products_graded, brackets_graded }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::Sampler;
    use crate::okubo::polar;

    fn as_vec(x: &OkuboElement) -> Vec<F3> {
        x.coeffs.to_vec()
    }

    #[test]
    fn okubo_derivations() {
        let compact = derivation_report(&AlgebraPresentation::okubo(Flavor::Compact));
        assert_eq!(compact.dimension, 8);
        assert!(compact.lie_closed);
        assert_eq!(compact.killing_signature, Signature { pos: 0, neg: 8, zero: 0 });
        let split = derivation_report(&AlgebraPresentation::okubo(Flavor::Split));
        assert_eq!(split.dimension, 8);
        assert!(split.lie_closed);
        assert!(split.killing_signature.pos > 0 && split.killing_signature.neg > 0);
    }

    #[test]
    fn petersson_and_octonion_derivations() {
        let pet = derivation_report(&AlgebraPresentation::octonion(OctonionProduct::Petersson));
        assert_eq!(pet.dimension, 8);
        assert!(pet.lie_closed);
        assert_eq!(derivation_space(&AlgebraPresentation::octonion(OctonionProduct::Hurwitz)).dimension, 14);
    }

    #[test]
    fn degenerate_algebras() {
        let trivial = derivation_space(&AlgebraPresentation::trivial(3));
        assert_eq!(trivial.dimension, 9);
        assert!(check_lie_closure(&trivial.basis));
        let one = AlgebraPresentation::new(1, vec![F3::one()], vec!["b".into()]);
        let space = derivation_space(&one);
        assert_eq!(space.dimension, 0);
        assert!(check_lie_closure(&space.basis));
    }

    #[test]
    fn trivial_algebra_of_dimension_eight() {
        assert_eq!(derivation_space(&AlgebraPresentation::trivial(8)).dimension, 64);
    }

    #[test]
    fn derivations_obey_leibniz_and_preserve_the_form() {
        let alg = AlgebraPresentation::okubo(Flavor::Compact);
        let space = derivation_space(&alg);
        let mut s = Sampler::new(71);
        for d in &space.basis {
            let apply = |x: &OkuboElement| OkuboElement::new(Flavor::Compact, d.mul_vec(&x.coeffs).try_into().unwrap());
            for _ in 0..10 {
                let x = OkuboElement::random(&mut s, Flavor::Compact);
                let y = OkuboElement::random(&mut s, Flavor::Compact);
                assert_eq!(apply(&mul(&x, &y)), mul(&apply(&x), &y) + mul(&x, &apply(&y)));
                let form = polar(&apply(&x), &y).unwrap() + polar(&x, &apply(&y)).unwrap();
                assert!(form.is_zero());
            }
        }
    }

    #[test]
    fn presentation_product_matches_okubo() {
        let alg = AlgebraPresentation::okubo(Flavor::Split);
        let mut s = Sampler::new(72);
        let x = OkuboElement::random(&mut s, Flavor::Split);
        let y = OkuboElement::random(&mut s, Flavor::Split);
        assert_eq!(alg.mul(&as_vec(&x), &as_vec(&y)), as_vec(&mul(&x, &y)));
    }

    #[test]
    fn commutator_jacobi_on_basis_triples() {
        let br = |a: &OkuboElement, b: &OkuboElement| mul(a, b) - mul(b, a);
        let basis: Vec<_> = (0..8).map(|k| OkuboElement::basis(Flavor::Compact, k)).collect();
        for x in &basis {
            for y in &basis {
                for z in &basis {
                    let j = br(x, &br(y, z)) + br(y, &br(z, x)) + br(z, &br(x, y));
                    assert!(j.is_zero());
                }
            }
        }
    }

    #[test]
    fn tau_grading() {
        for flavor in [Flavor::Compact, Flavor::Split] {
            let r = check_tau_grading(flavor);
            assert_eq!((r.dim_g0, r.dim_g1), (4, 4));
            assert!(r.products_graded && r.brackets_graded);
            assert!(r.holds());
        }
    }
}
