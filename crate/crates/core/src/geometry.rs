//! The Okubic projective line, the affine and projective Okubic planes, and
//! Veronese coordinates.
//!
//! Everything here is over the compact Okubo algebra; split inputs are
//! rejected with [`Error::CompactOnly`].

use std::ops::{Add, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactfield::{forward_binop, F3};
use crate::linalg::{nullspace, ExactMatrix};
use crate::okubo::{self, gram_matrix, mul, okubo_norm, polar_unchecked, Flavor, OkuboElement};

/// Coordinates of the 27-dimensional space `𝒪³ ⊕ ℝ³`.
pub const V_DIM: usize = 27;

fn compact(x: &OkuboElement) -> Result<()> {
    match x.flavor {
        Flavor::Compact => Ok(()),
        f => Err(Error::CompactOnly(f)),
    }
}

/// Whether `b` is a nonzero scalar multiple of the nonzero vector `a`.
pub fn same_ray(a: &[F3], b: &[F3]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let Some(k) = a.iter().position(|c| !c.is_zero()) else {
        return false;
    };
    if b[k].is_zero() {
        return false;
    }
    let r = &b[k] / &a[k];
    a.iter().zip(b).all(|(x, y)| &(x * &r) == y)
}

// ---------------------------------------------------------------------------
// Projective line

/// A point of `𝒪 ∪ {∞}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LinePoint {
    Finite(OkuboElement),
    Infinity,
}

/// A representative `(x, ξ₁, ξ₂)` of a point on the quadric
/// `b(x, ξ₁, ξ₂) = n(x) − ξ₁ξ₂ = 0`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ProjLinePoint {
    pub x: OkuboElement,
    pub xi1: F3,
    pub xi2: F3,
}

impl ProjLinePoint {
    pub fn new(x: OkuboElement, xi1: F3, xi2: F3) -> Result<Self> {
        compact(&x)?;
        if x.is_zero() && xi1.is_zero() && xi2.is_zero() {
            return Err(Error::ZeroInput);
        }
        let b = quadric(&x, &xi1, &xi2);
        if !b.is_zero() {
            return Err(Error::NotOnQuadric(b.to_string()));
        }
        Ok(ProjLinePoint { x, xi1, xi2 })
    }

    pub fn coords(&self) -> Vec<F3> {
        let mut v = self.x.coeffs.to_vec();
        v.push(self.xi1.clone());
        v.push(self.xi2.clone());
        v
    }

    pub fn scale(&self, c: &F3) -> Self {
        ProjLinePoint { x: self.x.scale(c), xi1: &self.xi1 * c, xi2: &self.xi2 * c }
    }
}

impl PartialEq for ProjLinePoint {
    fn eq(&self, other: &Self) -> bool {
        same_ray(&self.coords(), &other.coords())
    }
}

/// `b(x, ξ₁, ξ₂) = n(x) − ξ₁ξ₂`.
pub fn quadric(x: &OkuboElement, xi1: &F3, xi2: &F3) -> F3 {
    okubo_norm(x) - xi1 * xi2
}

/// `x ↦ ℝ(x, n(x), 1)`, `∞ ↦ ℝ(0, 1, 0)`.
pub fn line_embed(p: &LinePoint) -> Result<ProjLinePoint> {
    match p {
        LinePoint::Finite(x) => ProjLinePoint::new(x.clone(), okubo_norm(x), F3::one()),
        LinePoint::Infinity => ProjLinePoint::new(OkuboElement::zero(Flavor::Compact), F3::one(), F3::zero()),
    }
}

/// Inverse of [`line_embed`].
pub fn line_chart(p: &ProjLinePoint) -> Result<LinePoint> {
    let p = ProjLinePoint::new(p.x.clone(), p.xi1.clone(), p.xi2.clone())?;
    if p.xi2.is_zero() {
        // n(x) = ξ₁·0 = 0 and 𝒪 is a division algebra
        assert!(p.x.is_zero(), "quadric point with ξ₂ = 0 and x ≠ 0");
        return Ok(LinePoint::Infinity);
    }
    Ok(LinePoint::Finite(okubo::divide(&p.x, &p.xi2)?))
}

// ---------------------------------------------------------------------------
// Affine plane

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffinePoint {
    pub x: OkuboElement,
    pub y: OkuboElement,
}

impl AffinePoint {
    pub fn new(x: OkuboElement, y: OkuboElement) -> Result<Self> {
        compact(&x)?;
        compact(&y)?;
        Ok(AffinePoint { x, y })
    }

    pub fn origin() -> Self {
        let z = OkuboElement::zero(Flavor::Compact);
        AffinePoint { x: z.clone(), y: z }
    }
}

/// `[s, t] = {(x, s*x + t)}`, `[c] = {c} × 𝒪`, or the line at infinity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum AffineLine {
    Sloped { s: OkuboElement, t: OkuboElement },
    Vertical { c: OkuboElement },
    Infinity,
}

impl AffineLine {
    /// The point of a sloped line over `x`, or of a vertical line at height `x`.
    pub fn point_at(&self, x: &OkuboElement) -> Option<AffinePoint> {
        match self {
            AffineLine::Sloped { s, t } => Some(AffinePoint { x: x.clone(), y: mul(s, x) + t.clone() }),
            AffineLine::Vertical { c } => Some(AffinePoint { x: c.clone(), y: x.clone() }),
            AffineLine::Infinity => None,
        }
    }
}

/// No affine point lies on the line at infinity.
pub fn affine_incident(p: &AffinePoint, line: &AffineLine) -> bool {
    match line {
        AffineLine::Sloped { s, t } => p.y == mul(s, &p.x) + t.clone(),
        AffineLine::Vertical { c } => &p.x == c,
        AffineLine::Infinity => false,
    }
}

/// The line through two distinct affine points.
pub fn affine_join(p1: &AffinePoint, p2: &AffinePoint) -> Result<AffineLine> {
    for z in [&p1.x, &p1.y, &p2.x, &p2.y] {
        compact(z)?;
    }
    if p1 == p2 {
        return Err(Error::EqualPoints);
    }
    if p1.x == p2.x {
        return Ok(AffineLine::Vertical { c: p1.x.clone() });
    }
    let a = &p1.x - &p2.x;
    let b = &p1.y - &p2.y;
    let s = okubo::solve_left(&a, &b)?;
    let t = &p1.y - &mul(&s, &p1.x);
    Ok(AffineLine::Sloped { s, t })
}

// ---------------------------------------------------------------------------
// Veronese vectors and the projective plane

/// An element `(x₀, x₁, x₂; λ₀, λ₁, λ₂)` of `𝒪³ ⊕ ℝ³`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VeroneseVector {
    pub x: [OkuboElement; 3],
    pub lambda: [F3; 3],
}

impl VeroneseVector {
    pub fn new(x: [OkuboElement; 3], lambda: [F3; 3]) -> Self {
        VeroneseVector { x, lambda }
    }

    pub fn zero() -> Self {
        VeroneseVector::new(std::array::from_fn(|_| OkuboElement::zero(Flavor::Compact)), Default::default())
    }

    pub fn from_ints(x: [&OkuboElement; 3], lambda: [i64; 3]) -> Self {
        VeroneseVector::new(x.map(Clone::clone), lambda.map(F3::from_int))
    }

    /// `eᵢ`: `λᵢ = 1`, everything else zero.
    pub fn real_idempotent(i: usize) -> Self {
        let mut v = VeroneseVector::zero();
        v.lambda[i] = F3::one();
        v
    }

    /// `(0,0,0;1,1,1)`.
    pub fn unit() -> Self {
        VeroneseVector { lambda: std::array::from_fn(|_| F3::one()), ..VeroneseVector::zero() }
    }

    /// `wᵢ(x)`: `x` in Okubo slot `i`, everything else zero.
    pub fn slot(i: usize, x: &OkuboElement) -> Self {
        let mut v = VeroneseVector::zero();
        v.x[i] = x.clone();
        v
    }

    pub fn check_compact(&self) -> Result<()> {
        self.x.iter().try_for_each(compact)
    }

    pub fn is_zero(&self) -> bool {
        self.x.iter().all(OkuboElement::is_zero) && self.lambda.iter().all(F3::is_zero)
    }

    pub fn scale(&self, c: &F3) -> Self {
        VeroneseVector { x: std::array::from_fn(|i| self.x[i].scale(c)), lambda: std::array::from_fn(|i| &self.lambda[i] * c) }
    }

    /// Coordinates in the order `x₀ (8), x₁ (8), x₂ (8), λ₀, λ₁, λ₂`.
    pub fn coords(&self) -> Vec<F3> {
        let mut v: Vec<F3> = self.x.iter().flat_map(|x| x.coeffs.iter().cloned()).collect();
        v.extend(self.lambda.iter().cloned());
        v
    }

    pub fn from_coords(c: &[F3]) -> Result<Self> {
        if c.len() != V_DIM {
            return Err(Error::Dimension { expected: V_DIM, got: c.len() });
        }
        let x = std::array::from_fn(|i| {
            OkuboElement::new(Flavor::Compact, std::array::from_fn(|k| c[8 * i + k].clone()))
        });
        let lambda = std::array::from_fn(|i| c[24 + i].clone());
        Ok(VeroneseVector { x, lambda })
    }

    pub fn basis(k: usize) -> Self {
        let mut c = vec![F3::zero(); V_DIM];
        c[k] = F3::one();
        VeroneseVector::from_coords(&c).expect("27 coordinates")
    }

    /// `(x₂, x₀, x₁; λ₂, λ₀, λ₁)`.
    pub fn cyclic_shift(&self) -> Self {
        let p = |a: usize| (a + 2) % 3;
        VeroneseVector {
            x: std::array::from_fn(|i| self.x[p(i)].clone()),
            lambda: std::array::from_fn(|i| self.lambda[p(i)].clone()),
        }
    }

    /// Swaps slots 0 and 1.
    pub fn transpose01(&self) -> Self {
        let p = [1, 0, 2];
        VeroneseVector {
            x: std::array::from_fn(|i| self.x[p[i]].clone()),
            lambda: std::array::from_fn(|i| self.lambda[p[i]].clone()),
        }
    }

    pub fn same_ray(&self, other: &VeroneseVector) -> bool {
        same_ray(&self.coords(), &other.coords())
    }
}

impl<'a> Add<&'a VeroneseVector> for &'a VeroneseVector {
    type Output = VeroneseVector;
    fn add(self, rhs: &VeroneseVector) -> VeroneseVector {
        VeroneseVector {
            x: std::array::from_fn(|i| &self.x[i] + &rhs.x[i]),
            lambda: std::array::from_fn(|i| &self.lambda[i] + &rhs.lambda[i]),
        }
    }
}
impl<'a> Sub<&'a VeroneseVector> for &'a VeroneseVector {
    type Output = VeroneseVector;
    fn sub(self, rhs: &VeroneseVector) -> VeroneseVector {
        VeroneseVector {
            x: std::array::from_fn(|i| &self.x[i] - &rhs.x[i]),
            lambda: std::array::from_fn(|i| &self.lambda[i] - &rhs.lambda[i]),
        }
    }
}
forward_binop!(VeroneseVector, Add, add);
forward_binop!(VeroneseVector, Sub, sub);

/// The Veronese conditions that `v` violates, named as
/// `"lambda0*x0 = x1*x2"` or `"n(x0) = lambda1*lambda2"`.
pub fn veronese_violations(v: &VeroneseVector) -> Vec<String> {
    let mut out = Vec::new();
    for i in 0..3 {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        if v.x[i].scale(&v.lambda[i]) != mul(&v.x[j], &v.x[k]) {
            out.push(format!("lambda{i}*x{i} = x{j}*x{k}"));
        }
    }
    for i in 0..3 {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        if okubo_norm(&v.x[i]) != &v.lambda[j] * &v.lambda[k] {
            out.push(format!("n(x{i}) = lambda{j}*lambda{k}"));
        }
    }
    out
}

/// All six Veronese conditions hold.
pub fn veronese_check(v: &VeroneseVector) -> bool {
    v.check_compact().is_ok() && veronese_violations(v).is_empty()
}

/// A point `ℝv` of the Okubic projective plane; equality is equality of rays.
#[derive(Clone, Debug, Serialize)]
#[serde(transparent)]
pub struct ProjPoint {
    rep: VeroneseVector,
}

impl ProjPoint {
    pub fn new(rep: VeroneseVector) -> Result<Self> {
        rep.check_compact()?;
        if rep.is_zero() {
            return Err(Error::ZeroInput);
        }
        let bad = veronese_violations(&rep);
        if !bad.is_empty() {
            return Err(Error::NotVeronese(bad.join(", ")));
        }
        Ok(ProjPoint { rep })
    }

    pub fn representative(&self) -> &VeroneseVector {
        &self.rep
    }
}

impl PartialEq for ProjPoint {
    fn eq(&self, other: &Self) -> bool {
        self.rep.same_ray(&other.rep)
    }
}

/// A point of the affine plane or of its line at infinity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "patch", rename_all = "lowercase")]
pub enum PlanePoint {
    Affine { x: OkuboElement, y: OkuboElement },
    /// The direction `(s)` of lines with slope `s`.
    Slope { s: OkuboElement },
    Infinity,
}

impl PlanePoint {
    pub fn affine(p: &AffinePoint) -> Self {
        PlanePoint::Affine { x: p.x.clone(), y: p.y.clone() }
    }

    pub fn patch(&self) -> &'static str {
        match self {
            PlanePoint::Affine { .. } => "affine",
            PlanePoint::Slope { .. } => "slope",
            PlanePoint::Infinity => "infinity",
        }
    }
}

/// `(x,y) ↦ ℝ(x, y, x*y; n(y), n(x), 1)`, `(s) ↦ ℝ(0, 0, s; n(s), 1, 0)`,
/// `(∞) ↦ ℝ(0, 0, 0; 1, 0, 0)`.
pub fn plane_embed(p: &PlanePoint) -> Result<ProjPoint> {
    let zero = OkuboElement::zero(Flavor::Compact);
    let rep = match p {
        PlanePoint::Affine { x, y } => {
            compact(x)?;
            compact(y)?;
            VeroneseVector::new([x.clone(), y.clone(), mul(x, y)], [okubo_norm(y), okubo_norm(x), F3::one()])
        }
        PlanePoint::Slope { s } => {
            compact(s)?;
            VeroneseVector::new([zero.clone(), zero, s.clone()], [okubo_norm(s), F3::one(), F3::zero()])
        }
        PlanePoint::Infinity => VeroneseVector::real_idempotent(0),
    };
    ProjPoint::new(rep)
}

/// Inverse of [`plane_embed`], reading the chart `λ₂`, then `λ₁`, then `λ₀`.
pub fn plane_decode(p: &ProjPoint) -> PlanePoint {
    let v = &p.rep;
    if !v.lambda[2].is_zero() {
        let inv = v.lambda[2].inverse().expect("nonzero");
        PlanePoint::Affine { x: v.x[0].scale(&inv), y: v.x[1].scale(&inv) }
    } else if !v.lambda[1].is_zero() {
        let inv = v.lambda[1].inverse().expect("nonzero");
        PlanePoint::Slope { s: v.x[2].scale(&inv) }
    } else {
        PlanePoint::Infinity
    }
}

/// `β(v,w) = Σ ⟨x_ν, y_ν⟩ + λ_ν μ_ν`.
pub fn beta(v: &VeroneseVector, w: &VeroneseVector) -> F3 {
    let mut acc = F3::zero();
    for i in 0..3 {
        acc += polar_unchecked(&v.x[i], &w.x[i]);
        acc += &v.lambda[i] * &w.lambda[i];
    }
    acc
}

/// `‖v‖ = β(v,v) = 2n(x₀) + 2n(x₁) + 2n(x₂) + λ₀² + λ₁² + λ₂²`.
pub fn beta_norm(v: &VeroneseVector) -> F3 {
    beta(v, v)
}

/// The line `ℓ_w = w^⊥`.
#[derive(Clone, Debug, Serialize)]
pub struct ProjLine {
    pub w: VeroneseVector,
}

impl ProjLine {
    pub fn new(w: VeroneseVector) -> Result<Self> {
        w.check_compact()?;
        if w.is_zero() {
            return Err(Error::ZeroInput);
        }
        Ok(ProjLine { w })
    }
}

pub fn incident(p: &ProjPoint, line: &ProjLine) -> bool {
    beta(&p.rep, &line.w).is_zero()
}

/// Gram matrix of `β` in the 27 coordinates.
pub fn beta_gram() -> ExactMatrix {
    let g = gram_matrix(Flavor::Compact);
    let mut m = ExactMatrix::zeros(V_DIM, V_DIM);
    for s in 0..3 {
        for a in 0..8 {
            for b in 0..8 {
                m.set(8 * s + a, 8 * s + b, g.get(a, b).clone());
            }
        }
    }
    for i in 24..V_DIM {
        m.set(i, i, F3::one());
    }
    m
}

/// Basis of `{w : β(vᵢ, w) = 0 for all i}`.
#[derive(Clone, Debug, Serialize)]
pub struct Complement {
    pub dimension: usize,
    pub basis: Vec<VeroneseVector>,
}

pub fn beta_complement(points: &[VeroneseVector]) -> Result<Complement> {
    let g = beta_gram();
    let rows: Vec<Vec<F3>> = points
        .iter()
        .map(|v| {
            let c = v.coords();
            (0..V_DIM).map(|j| (0..V_DIM).fold(F3::zero(), |acc, i| acc + &c[i] * g.get(i, j))).collect()
        })
        .collect();
    let basis: Vec<VeroneseVector> = if rows.is_empty() {
        (0..V_DIM).map(VeroneseVector::basis).collect()
    } else {
        let m = ExactMatrix::from_rows(rows)?;
        nullspace(&m).iter().map(|c| VeroneseVector::from_coords(c)).collect::<Result<_>>()?
    };
    Ok(Complement { dimension: basis.len(), basis })
}
