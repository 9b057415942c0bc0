//! The deformed Okubic Albert algebra `𝔸_q(𝒪)` on `𝒪³ ⊕ ℝ³`.
//!
//! ```text
//! (x;λ)∘(y;μ) = ( ½(λ₁+λ₂)y₀ + ½(μ₁+μ₂)x₀ + q(x₁*y₂ + y₁*x₂),
//!                 ½(λ₀+λ₂)y₁ + ½(μ₀+μ₂)x₁ + q(x₂*y₀ + y₂*x₀),
//!                 ½(λ₀+λ₁)y₂ + ½(μ₀+μ₁)x₂ + q(x₀*y₁ + y₀*x₁);
//!                 λ₀μ₀ + ⟨x₁,y₁⟩ + ⟨x₂,y₂⟩, … )
//! ```
//!
//! The scalar slots use `⟨x,y⟩ = ½(n(x+y) − n(x) − n(y))`, so that
//! `⟨x,x⟩ = n(x)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactfield::{Rational, Sampler, F3};
use crate::geometry::{beta_norm, veronese_violations, ProjPoint, VeroneseVector, V_DIM};
use crate::linalg::ExactMatrix;
use crate::okubo::{mul, okubo_norm, polar_unchecked, Flavor, LinearOkuboMap, OkuboElement, OkuboMap};

/// Elements of `𝔸_q(𝒪)` share their coordinates with Veronese vectors.
pub type AlbertElement = VeroneseVector;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlbertAlgebra {
    pub q: F3,
}

fn half(x: &F3) -> F3 {
    x.scale(&Rational::new(1, 2))
}

/// `⟨x,y⟩` with `⟨x,x⟩ = n(x)`.
fn half_polar(x: &OkuboElement, y: &OkuboElement) -> F3 {
    half(&polar_unchecked(x, y))
}

impl AlbertAlgebra {
    pub fn new(q: F3) -> Self {
        AlbertAlgebra { q }
    }

    pub fn from_rational(n: i64, d: i64) -> Self {
        AlbertAlgebra { q: F3::frac(n, d) }
    }

    /// `𝔸_{1/2}(𝒪)`.
    pub fn half() -> Self {
        AlbertAlgebra::from_rational(1, 2)
    }

    pub fn mul(&self, a: &AlbertElement, b: &AlbertElement) -> AlbertElement {
        let (x, l) = (&a.x, &a.lambda);
        let (y, m) = (&b.x, &b.lambda);
        let okubo = |i: usize| {
            let (j, k) = ((i + 1) % 3, (i + 2) % 3);
            let cross = mul(&x[j], &y[k]) + mul(&y[j], &x[k]);
            y[i].scale(&half(&(&l[j] + &l[k]))) + x[i].scale(&half(&(&m[j] + &m[k]))) + cross.scale(&self.q)
        };
        let scalar = |i: usize| {
            let (j, k) = ((i + 1) % 3, (i + 2) % 3);
            &l[i] * &m[i] + half_polar(&x[j], &y[j]) + half_polar(&x[k], &y[k])
        };
        VeroneseVector::new(std::array::from_fn(okubo), std::array::from_fn(scalar))
    }

    pub fn is_idempotent(&self, a: &AlbertElement) -> bool {
        &self.mul(a, a) == a
    }

    /// Idempotent with trace 1 and cubic norm 0.
    pub fn is_rank1(&self, a: &AlbertElement) -> bool {
        rank1_violation(self, a).is_none()
    }

    /// `(a∘b)∘(a∘a) − a∘(b∘(a∘a))`.
    pub fn jordan_defect(&self, a: &AlbertElement, b: &AlbertElement) -> AlbertElement {
        let aa = self.mul(a, a);
        self.mul(&self.mul(a, b), &aa) - self.mul(a, &self.mul(b, &aa))
    }

    /// `(a∘b)∘a − a∘(b∘a)`.
    pub fn flexible_defect(&self, a: &AlbertElement, b: &AlbertElement) -> AlbertElement {
        self.mul(&self.mul(a, b), a) - self.mul(a, &self.mul(b, a))
    }

    /// Matrix of `L_a : b ↦ a∘b` in the 27 coordinates.
    pub fn left_mult_operator(&self, a: &AlbertElement) -> ExactMatrix {
        let cols: Vec<Vec<F3>> = (0..V_DIM).map(|k| self.mul(a, &VeroneseVector::basis(k)).coords()).collect();
        ExactMatrix::from_columns(V_DIM, &cols).expect("27 columns")
    }

    pub fn kernel(&self, a: &AlbertElement) -> KernelReport {
        let rank = self.left_mult_operator(a).rank();
        KernelReport { kernel_dim: V_DIM - rank, image_dim: rank }
    }

    /// `σ(a∘b) − σ(a)∘σ(b)` for the swap σ of slots 0 and 1.
    pub fn transposition_defect(&self, a: &AlbertElement, b: &AlbertElement) -> AlbertElement {
        self.mul(a, b).transpose01() - self.mul(&a.transpose01(), &b.transpose01())
    }

    /// First sampled pair on which `f` fails to be multiplicative.
    pub fn automorphism_witness(
        &self,
        f: &dyn Fn(&AlbertElement) -> AlbertElement,
        sampler: &mut Sampler,
        samples: usize,
    ) -> Option<(AlbertElement, AlbertElement)> {
        (0..samples).find_map(|_| {
            let a = random_element(sampler);
            let b = random_element(sampler);
            (f(&self.mul(&a, &b)) != self.mul(&f(&a), &f(&b))).then_some((a, b))
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelReport {
    pub kernel_dim: usize,
    pub image_dim: usize,
}

pub fn random_element(s: &mut Sampler) -> AlbertElement {
    VeroneseVector::new(std::array::from_fn(|_| OkuboElement::random(s, Flavor::Compact)), std::array::from_fn(|_| s.f3()))
}

/// `λ₀ + λ₁ + λ₂`.
pub fn trace(a: &AlbertElement) -> F3 {
    a.lambda.iter().fold(F3::zero(), |acc, l| acc + l)
}

/// `2n(x₀) + 2n(x₁) + 2n(x₂) + λ₀² + λ₁² + λ₂²`.
pub fn quad_norm(a: &AlbertElement) -> F3 {
    let two = F3::from_int(2);
    (0..3).fold(F3::zero(), |acc, i| acc + &two * &okubo_norm(&a.x[i]) + a.lambda[i].square())
}

/// Polarization `‖a+b‖ − ‖a‖ − ‖b‖`.
pub fn inner(a: &AlbertElement, b: &AlbertElement) -> F3 {
    quad_norm(&(a + b)) - quad_norm(a) - quad_norm(b)
}

/// `N = λ₀λ₁λ₂ − Σλᵢn(xᵢ) + 2⟨(x₀*e)*(x₁*x₂), e⟩` with `⟨e,e⟩ = n(e) = 1`.
pub fn cubic_norm(a: &AlbertElement) -> F3 {
    let (x, l) = (&a.x, &a.lambda);
    let e = OkuboElement::e(Flavor::Compact);
    let cubic = &(&l[0] * &l[1]) * &l[2];
    let linear = (0..3).fold(F3::zero(), |acc, i| acc + &l[i] * &okubo_norm(&x[i]));
    let triple = mul(&mul(&x[0], &e), &mul(&x[1], &x[2]));
    cubic - linear + F3::from_int(2) * half_polar(&triple, &e)
}

fn rank1_violation(alg: &AlbertAlgebra, a: &AlbertElement) -> Option<String> {
    let tr = trace(a);
    if tr != F3::one() {
        return Some(format!("trace={tr}"));
    }
    if !alg.is_idempotent(a) {
        return Some("not idempotent".to_string());
    }
    let n = cubic_norm(a);
    if !n.is_zero() {
        return Some(format!("cubic norm={n}"));
    }
    None
}

/// The trace-1 representative of a projective point.
pub fn idempotent_from_point(p: &ProjPoint) -> Result<AlbertElement> {
    let v = p.representative();
    let tr = trace(v);
    if !tr.is_positive() {
        return Err(Error::NonPositiveTrace(tr.to_string()));
    }
    Ok(v.scale(&tr.inverse()?))
}

/// The point of a rank-1 idempotent of `𝔸_{1/2}`.
pub fn point_from_idempotent(a: &AlbertElement) -> Result<ProjPoint> {
    a.check_compact()?;
    if let Some(why) = rank1_violation(&AlbertAlgebra::half(), a) {
        return Err(Error::NotRank1(why));
    }
    let bad = veronese_violations(a);
    if !bad.is_empty() {
        return Err(Error::NotVeronese(bad.join(", ")));
    }
    ProjPoint::new(a.clone())
}

/// `(x₀,x₁,x₂;λ₀,λ₁,λ₂) ↦ (x₂,x₀,x₁;λ₂,λ₀,λ₁)`.
pub fn cyclic_shift(a: &AlbertElement) -> AlbertElement {
    a.cyclic_shift()
}

/// `Φ(x_ν;λ_ν) = (φ(x₀),φ(x₁),φ(x₂);λ₀,λ₁,λ₂)`.
pub struct LiftedAutomorphism<M> {
    pub okubo: M,
}

impl<M: OkuboMap> LiftedAutomorphism<M> {
    pub fn apply(&self, a: &AlbertElement) -> AlbertElement {
        VeroneseVector::new(std::array::from_fn(|i| self.okubo.apply(&a.x[i])), a.lambda.clone())
    }
}

pub fn lift_okubo_automorphism<M: OkuboMap>(phi: M) -> LiftedAutomorphism<M> {
    LiftedAutomorphism { okubo: phi }
}

/// `wᵢ(x) ↦ wᵢ(φᵢ(x))` with the real slots fixed.
pub fn graded_map(maps: &[LinearOkuboMap; 3], a: &AlbertElement) -> AlbertElement {
    VeroneseVector::new(std::array::from_fn(|i| maps[i].apply(&a.x[i])), a.lambda.clone())
}

/// Result of testing `φᵢ(x)*φᵢ₊₁(y) = φᵢ₊₂(x*y)`.
#[derive(Clone, Debug)]
pub struct GradedTripleReport {
    pub holds: bool,
    /// `(i, x, y)` for the first failing condition.
    pub witness: Option<(usize, OkuboElement, OkuboElement)>,
    /// Whether the induced map passed the `𝔸_{1/2}` automorphism check;
    /// only evaluated when `holds`.
    pub induces_automorphism: Option<bool>,
}

/// Checks the three cyclic conditions on all basis pairs and `samples`
/// random pairs, then the induced map on `samples` random pairs of `𝔸_{1/2}`.
pub fn is_graded_triple(maps: &[LinearOkuboMap; 3], sampler: &mut Sampler, samples: usize) -> GradedTripleReport {
    let basis = (0..8).flat_map(|a| (0..8).map(move |b| (a, b))).map(|(a, b)| {
        (OkuboElement::basis(Flavor::Compact, a), OkuboElement::basis(Flavor::Compact, b))
    });
    let mut pairs: Vec<(OkuboElement, OkuboElement)> = basis.collect();
    for _ in 0..samples {
        pairs.push((OkuboElement::random(sampler, Flavor::Compact), OkuboElement::random(sampler, Flavor::Compact)));
    }
    for (x, y) in &pairs {
        for i in 0..3 {
            let lhs = mul(&maps[i].apply(x), &maps[(i + 1) % 3].apply(y));
            if lhs != maps[(i + 2) % 3].apply(&mul(x, y)) {
                return GradedTripleReport { holds: false, witness: Some((i, x.clone(), y.clone())), induces_automorphism: None };
            }
        }
    }
    let alg = AlbertAlgebra::half();
    let induced = alg.automorphism_witness(&|a| graded_map(maps, a), sampler, samples).is_none();
    GradedTripleReport { holds: true, witness: None, induces_automorphism: Some(induced) }
}

/// Seeded search over elements with coefficients in {−1, 0, 1} for a pair
/// with nonzero Jordan defect.
pub fn search_jordan_witness(alg: &AlbertAlgebra, seed: u64, attempts: usize) -> Option<(AlbertElement, AlbertElement)> {
    let mut s = Sampler::new(seed);
    let small = |s: &mut Sampler| {
        let c: Vec<F3> = (0..V_DIM).map(|_| F3::from_int(s.below(3) as i64 - 1)).collect();
        VeroneseVector::from_coords(&c).expect("27 coordinates")
    };
    (0..attempts).find_map(|_| {
        let a = small(&mut s);
        let b = small(&mut s);
        (!alg.jordan_defect(&a, &b).is_zero()).then_some((a, b))
    })
}

/// `‖a‖` agrees with `β(a,a)`.
pub fn quad_norm_is_beta(a: &AlbertElement) -> bool {
    quad_norm(a) == beta_norm(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{plane_embed, PlanePoint};
    use crate::okubo::automorphism_from_unitary;
    use crate::linalg::Mat3;

    fn e() -> OkuboElement {
        OkuboElement::e(Flavor::Compact)
    }

    fn b(k: usize) -> OkuboElement {
        OkuboElement::basis(Flavor::Compact, k)
    }

    fn zero() -> OkuboElement {
        OkuboElement::zero(Flavor::Compact)
    }

    fn eee() -> AlbertElement {
        VeroneseVector::from_ints([&e(), &e(), &e()], [1, 1, 1])
    }

    fn qs() -> Vec<AlbertAlgebra> {
        [(-1, 1), (1, 2), (1, 1), (2, 1)].iter().map(|&(n, d)| AlbertAlgebra::from_rational(n, d)).collect()
    }

    #[test]
    fn product_examples() {
        let alg = AlbertAlgebra::half();
        let mut s = Sampler::new(51);
        let a = random_element(&mut s);
        assert_eq!(alg.mul(&VeroneseVector::unit(), &a), a);
        let e0 = VeroneseVector::real_idempotent(0);
        let e1 = VeroneseVector::real_idempotent(1);
        assert!(alg.mul(&e0, &e1).is_zero());
        for alg in qs() {
            let (x, y) = (OkuboElement::random(&mut s, Flavor::Compact), OkuboElement::random(&mut s, Flavor::Compact));
            let p = alg.mul(&VeroneseVector::slot(0, &x), &VeroneseVector::slot(1, &y));
            assert_eq!(p, VeroneseVector::slot(2, &mul(&x, &y).scale(&alg.q)));
        }
    }

    #[test]
    fn left_action_of_e0() {
        let alg = AlbertAlgebra::half();
        let mut s = Sampler::new(52);
        let a = random_element(&mut s);
        let img = alg.mul(&VeroneseVector::real_idempotent(0), &a);
        let h = F3::frac(1, 2);
        let expected = VeroneseVector::new(
            [zero(), a.x[1].scale(&h), a.x[2].scale(&h)],
            [a.lambda[0].clone(), F3::zero(), F3::zero()],
        );
        assert_eq!(img, expected);
    }

    #[test]
    fn commutative_flexible_and_unital_for_every_q() {
        let mut s = Sampler::new(53);
        for alg in qs() {
            for _ in 0..20 {
                let a = random_element(&mut s);
                let c = random_element(&mut s);
                assert_eq!(alg.mul(&a, &c), alg.mul(&c, &a));
                assert!(alg.flexible_defect(&a, &c).is_zero());
                assert_eq!(alg.mul(&VeroneseVector::unit(), &a), a);
            }
        }
    }

    #[test]
    fn norms_examples() {
        let unit = VeroneseVector::unit();
        let e0 = VeroneseVector::real_idempotent(0);
        assert_eq!(trace(&unit), F3::from_int(3));
        assert_eq!(trace(&e0), F3::one());
        assert_eq!(trace(&eee()), F3::from_int(3));
        assert_eq!(quad_norm(&unit), F3::from_int(3));
        assert_eq!(quad_norm(&eee()), F3::from_int(9));
        assert_eq!(quad_norm(&eee().scale(&F3::frac(1, 3))), F3::one());
        assert!(inner(&e0, &VeroneseVector::real_idempotent(1)).is_zero());
        assert_eq!(inner(&e0, &e0), F3::from_int(2));
        assert_eq!(inner(&unit, &e0), F3::from_int(2));
        assert_eq!(cubic_norm(&unit), F3::one());
        assert!(cubic_norm(&e0).is_zero());
        assert!(cubic_norm(&eee().scale(&F3::frac(1, 3))).is_zero());
    }

    #[test]
    fn inner_is_twice_the_norm_on_the_diagonal() {
        let mut s = Sampler::new(54);
        for _ in 0..20 {
            let a = random_element(&mut s);
            assert_eq!(inner(&a, &a), F3::from_int(2) * quad_norm(&a));
            assert!(quad_norm_is_beta(&a));
        }
    }

    #[test]
    fn idempotent_examples() {
        let alg = AlbertAlgebra::half();
        for i in 0..3 {
            assert!(alg.is_idempotent(&VeroneseVector::real_idempotent(i)));
            assert!(alg.is_rank1(&VeroneseVector::real_idempotent(i)));
        }
        assert!(alg.is_idempotent(&VeroneseVector::unit()));
        assert!(!alg.is_rank1(&VeroneseVector::unit()));
        let third = eee().scale(&F3::frac(1, 3));
        assert!(alg.is_idempotent(&third));
        assert!(alg.is_rank1(&third));
    }

    #[test]
    fn idempotents_from_points() {
        let inf = ProjPoint::new(VeroneseVector::real_idempotent(0)).unwrap();
        assert_eq!(idempotent_from_point(&inf).unwrap(), VeroneseVector::real_idempotent(0));
        let ee = ProjPoint::new(eee()).unwrap();
        assert_eq!(idempotent_from_point(&ee).unwrap(), eee().scale(&F3::frac(1, 3)));
        let slope = plane_embed(&PlanePoint::Slope { s: e() }).unwrap();
        let h = F3::frac(1, 2);
        let expected = VeroneseVector::new([zero(), zero(), e().scale(&h)], [h.clone(), h, F3::zero()]);
        assert_eq!(idempotent_from_point(&slope).unwrap(), expected);
    }

    #[test]
    fn points_from_idempotents() {
        let p = point_from_idempotent(&VeroneseVector::real_idempotent(0)).unwrap();
        assert_eq!(crate::geometry::plane_decode(&p), PlanePoint::Infinity);
        let p = point_from_idempotent(&eee().scale(&F3::frac(1, 3))).unwrap();
        assert_eq!(crate::geometry::plane_decode(&p), PlanePoint::Affine { x: e(), y: e() });
        let err = point_from_idempotent(&VeroneseVector::unit()).unwrap_err();
        assert_eq!(err.to_string(), "trace=3, not rank-1");
    }

    #[test]
    fn bijection_on_all_patches() {
        let alg = AlbertAlgebra::half();
        let mut s = Sampler::new(55);
        for _ in 0..30 {
            let x = OkuboElement::random(&mut s, Flavor::Compact);
            let y = OkuboElement::random(&mut s, Flavor::Compact);
            for p in [PlanePoint::Affine { x: x.clone(), y }, PlanePoint::Slope { s: x }, PlanePoint::Infinity] {
                let q = plane_embed(&p).unwrap();
                let eps = idempotent_from_point(&q).unwrap();
                assert!(alg.is_rank1(&eps));
                assert_eq!(quad_norm(&eps), F3::one());
                assert!(cubic_norm(&eps).is_zero());
                let back = point_from_idempotent(&eps).unwrap();
                assert_eq!(back, q);
                assert_eq!(idempotent_from_point(&back).unwrap(), eps);
            }
        }
    }

    #[test]
    fn idempotents_satisfy_jordan_for_every_q() {
        let mut s = Sampler::new(56);
        for alg in qs() {
            let b_ = random_element(&mut s);
            assert!(alg.jordan_defect(&VeroneseVector::real_idempotent(0), &b_).is_zero());
        }
    }

    #[test]
    fn jordan_identity_depends_on_q() {
        // with ⟨x,x⟩ = n(x) the identity holds at q = ±1/2 and fails at q = ±1
        let mut s = Sampler::new(57);
        for (n, d, jordan) in [(1, 2, true), (-1, 2, true), (1, 1, false), (-1, 1, false)] {
            let alg = AlbertAlgebra::from_rational(n, d);
            let found = (0..20).any(|_| {
                let a = random_element(&mut s);
                let c = random_element(&mut s);
                !alg.jordan_defect(&a, &c).is_zero()
            });
            assert_eq!(found, !jordan, "q = {n}/{d}");
        }
        assert!(search_jordan_witness(&AlbertAlgebra::half(), 0, 200).is_none());
        assert!(search_jordan_witness(&AlbertAlgebra::from_rational(1, 1), 0, 200).is_some());
    }

    #[test]
    fn kernel_dimensions() {
        let alg = AlbertAlgebra::half();
        let e0 = alg.kernel(&VeroneseVector::real_idempotent(0));
        assert_eq!(e0, KernelReport { kernel_dim: 10, image_dim: 17 });
        assert_eq!(alg.kernel(&VeroneseVector::unit()).kernel_dim, 0);
        // every rank-1 idempotent has the same kernel dimension as e₀
        let eps = idempotent_from_point(&ProjPoint::new(eee()).unwrap()).unwrap();
        assert_eq!(alg.kernel(&eps).kernel_dim, 10);
        let mut s = Sampler::new(58);
        let p = PlanePoint::Affine { x: OkuboElement::random(&mut s, Flavor::Compact), y: OkuboElement::random(&mut s, Flavor::Compact) };
        let eps = idempotent_from_point(&plane_embed(&p).unwrap()).unwrap();
        assert_eq!(alg.kernel(&eps).kernel_dim, 10);
    }

    #[test]
    fn cyclic_shift_is_an_automorphism() {
        let mut s = Sampler::new(59);
        assert_eq!(cyclic_shift(&VeroneseVector::real_idempotent(0)), VeroneseVector::real_idempotent(1));
        for alg in qs() {
            assert!(alg.automorphism_witness(&cyclic_shift, &mut s, 20).is_none());
        }
        let a = random_element(&mut s);
        assert_eq!(cyclic_shift(&cyclic_shift(&cyclic_shift(&a))), a);
    }

    #[test]
    fn transposition_examples() {
        let alg = AlbertAlgebra::half();
        let d = alg.transposition_defect(&VeroneseVector::slot(0, &b(1)), &VeroneseVector::slot(1, &b(2)));
        let comm = mul(&b(1), &b(2)) - mul(&b(2), &b(1));
        assert!(!comm.is_zero());
        assert_eq!(d, VeroneseVector::slot(2, &comm.scale(&alg.q)));
        let u = VeroneseVector::unit();
        assert!(alg.transposition_defect(&u, &u).is_zero());
        assert!(alg.transposition_defect(&VeroneseVector::slot(0, &e()), &VeroneseVector::slot(1, &e())).is_zero());
    }

    #[test]
    fn lifted_automorphisms() {
        let mut s = Sampler::new(60);
        let id = lift_okubo_automorphism(LinearOkuboMap::identity(Flavor::Compact));
        let a = random_element(&mut s);
        assert_eq!(id.apply(&a), a);
        let rot = Mat3::from_ints([[0, 1, 0], [-1, 0, 0], [0, 0, 0]]);
        let phi = lift_okubo_automorphism(automorphism_from_unitary(&rot, Flavor::Compact).unwrap());
        for i in 0..3 {
            let ei = VeroneseVector::real_idempotent(i);
            assert_eq!(phi.apply(&ei), ei);
        }
        for alg in qs() {
            assert!(alg.automorphism_witness(&|a| phi.apply(a), &mut s, 20).is_none());
        }
    }

    #[test]
    fn graded_triples() {
        let mut s = Sampler::new(61);
        let id = LinearOkuboMap::identity(Flavor::Compact);
        let r = is_graded_triple(&[id.clone(), id.clone(), id.clone()], &mut s, 10);
        assert!(r.holds);
        assert_eq!(r.induces_automorphism, Some(true));
        let rot = Mat3::from_ints([[0, 1, 0], [-1, 0, 0], [0, 0, 0]]);
        let phi = automorphism_from_unitary(&rot, Flavor::Compact).unwrap().linear().clone();
        let r = is_graded_triple(&[phi.clone(), phi.clone(), phi.clone()], &mut s, 10);
        assert!(r.holds && r.induces_automorphism == Some(true));
        let r = is_graded_triple(&[phi, id.clone(), id.clone()], &mut s, 10);
        assert!(!r.holds && r.witness.is_some());
        let twice = LinearOkuboMap::scalar(Flavor::Compact, &F3::from_int(2));
        assert!(!is_graded_triple(&[twice, id.clone(), id], &mut s, 10).holds);
    }

    #[test]
    fn real_idempotents_decompose_the_unit() {
        let alg = AlbertAlgebra::half();
        let e: Vec<_> = (0..3).map(VeroneseVector::real_idempotent).collect();
        assert_eq!(&(&e[0] + &e[1]) + &e[2], VeroneseVector::unit());
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    assert!(alg.mul(&e[i], &e[j]).is_zero());
                }
            }
        }
        let two_slot = &e[0] + &e[1];
        assert!(alg.is_idempotent(&two_slot));
        assert!(!alg.is_rank1(&two_slot));
    }
}
