//! The Okubo algebra 𝒪 and the split Okubo algebra 𝒪ₛ.
//!
//! Elements are stored as eight coefficients over Q(√3) in the basis
//! `(e, i₁, …, i₇)`, where `e = diag(2,−1,−1)` is the distinguished idempotent
//! and `i₁ … i₇` are the traceless η-hermitian matrices with `γ = ±1`. The
//! product
//!
//! ```text
//! x * y = μ·xy + μ̄·yx − ⅓·Tr(xy)·Id,    μ = (3 + i√3)/6
//! ```
//!
//! is evaluated from cached structure constants; [`okubo_mul_matrix`] keeps
//! the matrix route available as an independent check.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactfield::{clear_denominators, forward_binop, IntSqrt3, Rational, Sampler, C3, F3};
use crate::linalg::{eta_dagger, leading_minors, ExactMatrix, Mat3};

mod automorphism;
mod deform;

pub use automorphism::{automorphism_from_unitary, random_skew, LinearOkuboMap, OkuboAutomorphism, OkuboMap};
pub use deform::{
    michel_radicati_composition_defect, michel_radicati_mul, michel_radicati_okubo, okubo_theta,
    traceful_mul, MR_COMPOSITION_WITNESS,
};

pub const DIM: usize = 8;

pub const LABELS: [&str; DIM] = ["e", "i1", "i2", "i3", "i4", "i5", "i6", "i7"];

/// Compact (`γ = 1`, η = Id) or split (`γ = −1`, η = diag(−1,1,1)).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    Compact,
    Split,
}

impl Flavor {
    pub fn gamma(self) -> i64 {
        match self {
            Flavor::Compact => 1,
            Flavor::Split => -1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Flavor::Compact => "compact",
            Flavor::Split => "split",
        }
    }

    fn index(self) -> usize {
        match self {
            Flavor::Compact => 0,
            Flavor::Split => 1,
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Flavor {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "compact" => Ok(Flavor::Compact),
            "split" => Ok(Flavor::Split),
            other => Err(Error::Parse(format!("unknown flavor {other:?}"))),
        }
    }
}

/// An element of 𝒪 or 𝒪ₛ.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OkuboElement {
    pub flavor: Flavor,
    pub coeffs: [F3; DIM],
}

impl OkuboElement {
    pub fn new(flavor: Flavor, coeffs: [F3; DIM]) -> Self {
        OkuboElement { flavor, coeffs }
    }

    pub fn zero(flavor: Flavor) -> Self {
        OkuboElement { flavor, coeffs: Default::default() }
    }

    pub fn basis(flavor: Flavor, k: usize) -> Self {
        let mut x = OkuboElement::zero(flavor);
        x.coeffs[k] = F3::one();
        x
    }

    /// The idempotent `e = diag(2, −1, −1)`.
    pub fn e(flavor: Flavor) -> Self {
        OkuboElement::basis(flavor, 0)
    }

    pub fn from_ints(flavor: Flavor, c: [i64; DIM]) -> Self {
        OkuboElement { flavor, coeffs: c.map(F3::from_int) }
    }

    pub fn random(s: &mut Sampler, flavor: Flavor) -> Self {
        OkuboElement { flavor, coeffs: std::array::from_fn(|_| s.f3()) }
    }

    pub fn random_nonzero(s: &mut Sampler, flavor: Flavor) -> Self {
        loop {
            let x = OkuboElement::random(s, flavor);
            if !x.is_zero() {
                return x;
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(F3::is_zero)
    }

    pub fn scale(&self, c: &F3) -> Self {
        OkuboElement { flavor: self.flavor, coeffs: std::array::from_fn(|k| &self.coeffs[k] * c) }
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        OkuboElement { flavor: self.flavor, coeffs: std::array::from_fn(|k| self.coeffs[k].scale(r)) }
    }

    /// Matrix view.
    pub fn to_matrix(&self) -> Mat3 {
        let basis = basis_matrices(self.flavor);
        let mut m = Mat3::zero();
        for (c, b) in self.coeffs.iter().zip(basis) {
            if !c.is_zero() {
                m = m + b.scale_f3(c);
            }
        }
        m
    }

    /// Inverse of [`OkuboElement::to_matrix`]; fails unless `m` is traceless
    /// and η-hermitian for the flavor.
    pub fn from_matrix(m: &Mat3, flavor: Flavor) -> Result<Self> {
        if !m.trace().is_zero() {
            return Err(Error::NotHermitian("traceless"));
        }
        if &eta_dagger(m, flavor) != m {
            return Err(Error::NotHermitian("eta-hermitian"));
        }
        let g = F3::from_int(flavor.gamma());
        let a0 = -&m.0[2][2].re;
        let a3 = &m.0[0][0].re - &(&a0 * &F3::from_int(2));
        let coeffs = [
            a0,
            m.0[0][1].re.clone(),
            -(&g * &m.0[0][1].im),
            a3,
            m.0[0][2].re.clone(),
            -(&g * &m.0[0][2].im),
            m.0[1][2].re.clone(),
            -m.0[1][2].im.clone(),
        ];
        Ok(OkuboElement { flavor, coeffs })
    }

    fn check_flavor(&self, other: &OkuboElement) -> Result<()> {
        if self.flavor != other.flavor {
            return Err(Error::FlavorMismatch { left: self.flavor, right: other.flavor });
        }
        Ok(())
    }
}

impl<'a> Add<&'a OkuboElement> for &'a OkuboElement {
    type Output = OkuboElement;
    fn add(self, rhs: &OkuboElement) -> OkuboElement {
        assert_eq!(self.flavor, rhs.flavor, "adding Okubo elements of different flavors");
        OkuboElement { flavor: self.flavor, coeffs: std::array::from_fn(|k| &self.coeffs[k] + &rhs.coeffs[k]) }
    }
}
impl<'a> Sub<&'a OkuboElement> for &'a OkuboElement {
    type Output = OkuboElement;
    fn sub(self, rhs: &OkuboElement) -> OkuboElement {
        assert_eq!(self.flavor, rhs.flavor, "subtracting Okubo elements of different flavors");
        OkuboElement { flavor: self.flavor, coeffs: std::array::from_fn(|k| &self.coeffs[k] - &rhs.coeffs[k]) }
    }
}
impl Neg for &OkuboElement {
    type Output = OkuboElement;
    fn neg(self) -> OkuboElement {
        OkuboElement { flavor: self.flavor, coeffs: std::array::from_fn(|k| -&self.coeffs[k]) }
    }
}
impl Neg for OkuboElement {
    type Output = OkuboElement;
    fn neg(self) -> OkuboElement {
        -&self
    }
}
forward_binop!(OkuboElement, Add, add);
forward_binop!(OkuboElement, Sub, sub);

impl fmt::Debug for OkuboElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .zip(LABELS)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, l)| format!("({c})·{l}"))
            .collect();
        let body = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
        write!(f, "{body} [{}]", self.flavor)
    }
}

/// The basis matrices `e, i₁, …, i₇` for the flavor.
pub fn basis_matrices(flavor: Flavor) -> [Mat3; DIM] {
    let g = C3::from_int(flavor.gamma());
    let i = C3::i();
    let gi = &g * &i;
    let one = C3::one();
    let m = |entries: &[(usize, usize, C3)]| {
        let mut m = Mat3::zero();
        for (r, c, v) in entries {
            m.0[*r][*c] = v.clone();
        }
        m
    };
    [
        Mat3::from_ints([[2, 0, 0], [0, -1, 0], [0, 0, -1]]),
        m(&[(0, 1, one.clone()), (1, 0, g.clone())]),
        m(&[(0, 1, -gi.clone()), (1, 0, i.clone())]),
        Mat3::from_ints([[1, 0, 0], [0, -1, 0], [0, 0, 0]]),
        m(&[(0, 2, one.clone()), (2, 0, g.clone())]),
        m(&[(0, 2, -gi), (2, 0, i.clone())]),
        m(&[(1, 2, one.clone()), (2, 1, one)]),
        m(&[(1, 2, -i.clone()), (2, 1, i)]),
    ]
}

/// `μ = (3 + i√3)/6`.
pub fn mu() -> C3 {
    C3::new(F3::frac(1, 2), F3::sqrt3_frac(1, 6))
}

/// Matrix-route product, used as the oracle for the structure constants.
pub fn okubo_mul_matrix(x: &Mat3, y: &Mat3) -> Mat3 {
    let xy = x * y;
    let yx = y * x;
    let tr = xy.trace();
    let third = C3::real(F3::frac(1, 3));
    &(&xy.scale(&mu()) + &yx.scale(&mu().conj())) - &Mat3::identity().scale(&(&tr * &third))
}

// ---------------------------------------------------------------------------
// Cached structure constants

/// `c[a][b][k]` with `b_a * b_b = Σ_k c[a][b][k] b_k`, one table per flavor.
#[derive(Clone, Debug)]
pub struct StructureConstants {
    pub flavor: Flavor,
    dense: Vec<F3>,
    sparse: Vec<(usize, usize, usize, F3)>,
    /// `sparse` times the common denominator `integral_denom`.
    integral: Vec<(usize, usize, usize, IntSqrt3)>,
    integral_denom: i128,
}

impl StructureConstants {
    fn compute(flavor: Flavor) -> Self {
        let basis = basis_matrices(flavor);
        let mut dense = Vec::with_capacity(DIM * DIM * DIM);
        let mut sparse = Vec::new();
        for a in 0..DIM {
            for b in 0..DIM {
                let p = okubo_mul_matrix(&basis[a], &basis[b]);
                let c = OkuboElement::from_matrix(&p, flavor).expect("Okubo product is closed");
                for (k, v) in c.coeffs.into_iter().enumerate() {
                    if !v.is_zero() {
                        sparse.push((a, b, k, v.clone()));
                    }
                    dense.push(v);
                }
            }
        }
        let values: Vec<F3> = sparse.iter().map(|t| t.3.clone()).collect();
        let (w, integral_denom) = clear_denominators(&values).expect("structure constants have small denominators");
        let integral = sparse.iter().zip(w).map(|(&(a, b, k, _), c)| (a, b, k, c)).collect();
        StructureConstants { flavor, dense, sparse, integral, integral_denom }
    }

    fn apply_integral(&self, x: &[F3; DIM], y: &[F3; DIM]) -> Option<[F3; DIM]> {
        let (xw, lx) = clear_denominators(x)?;
        let (yw, ly) = clear_denominators(y)?;
        let mut acc = [IntSqrt3::default(); DIM];
        for &(a, b, k, c) in &self.integral {
            if xw[a].is_zero() || yw[b].is_zero() {
                continue;
            }
            acc[k] = acc[k].checked_add(c.checked_mul(xw[a].checked_mul(yw[b])?)?)?;
        }
        let denom = self.integral_denom.checked_mul(lx)?.checked_mul(ly)?;
        Some(acc.map(|v| v.over(denom)))
    }

    pub fn get(&self, a: usize, b: usize, k: usize) -> &F3 {
        &self.dense[(a * DIM + b) * DIM + k]
    }

    /// Flattened as `(a*8 + b)*8 + k`.
    pub fn dense(&self) -> &[F3] {
        &self.dense
    }

    pub fn nonzero(&self) -> &[(usize, usize, usize, F3)] {
        &self.sparse
    }

    pub fn apply(&self, x: &[F3; DIM], y: &[F3; DIM]) -> [F3; DIM] {
        if let Some(out) = self.apply_integral(x, y) {
            return out;
        }
        self.apply_rational(x, y)
    }

    fn apply_rational(&self, x: &[F3; DIM], y: &[F3; DIM]) -> [F3; DIM] {
        let mut pair: Vec<Option<F3>> = vec![None; DIM * DIM];
        for a in 0..DIM {
            if x[a].is_zero() {
                continue;
            }
            for b in 0..DIM {
                if !y[b].is_zero() {
                    pair[a * DIM + b] = Some(&x[a] * &y[b]);
                }
            }
        }
        let mut out: [F3; DIM] = Default::default();
        for (a, b, k, c) in &self.sparse {
            if let Some(p) = &pair[a * DIM + b] {
                out[*k] += c * p;
            }
        }
        out
    }
}

struct FlavorTables {
    constants: StructureConstants,
    gram: ExactMatrix,
    /// Nonzero Gram entries times `gram_denom`.
    gram_integral: Vec<(usize, usize, IntSqrt3)>,
    gram_denom: i128,
}

fn tables(flavor: Flavor) -> &'static FlavorTables {
    static CACHE: [OnceLock<FlavorTables>; 2] = [OnceLock::new(), OnceLock::new()];
    CACHE[flavor.index()].get_or_init(|| {
        let basis = basis_matrices(flavor);
        let mut gram = ExactMatrix::zeros(DIM, DIM);
        let third = F3::frac(1, 3);
        for a in 0..DIM {
            for b in 0..DIM {
                let t = (&basis[a] * &basis[b]).trace();
                debug_assert!(t.is_real());
                gram.set(a, b, &t.re * &third);
            }
        }
        let entries: Vec<(usize, usize)> =
            (0..DIM).flat_map(|a| (0..DIM).map(move |b| (a, b))).filter(|&(a, b)| !gram.get(a, b).is_zero()).collect();
        let values: Vec<F3> = entries.iter().map(|&(a, b)| gram.get(a, b).clone()).collect();
        let (w, gram_denom) = clear_denominators(&values).expect("Gram entries have small denominators");
        let gram_integral = entries.into_iter().zip(w).map(|((a, b), c)| (a, b, c)).collect();
        FlavorTables { constants: StructureConstants::compute(flavor), gram, gram_integral, gram_denom }
    })
}

pub fn structure_constants(flavor: Flavor) -> &'static StructureConstants {
    &tables(flavor).constants
}

/// Gram matrix of the polar form `⟨x,y⟩ = ⅓Tr(xy)` in the canonical basis.
pub fn gram_matrix(flavor: Flavor) -> &'static ExactMatrix {
    &tables(flavor).gram
}

// ---------------------------------------------------------------------------
// Product, norm, polar form

pub fn okubo_mul(x: &OkuboElement, y: &OkuboElement) -> Result<OkuboElement> {
    x.check_flavor(y)?;
    Ok(mul(x, y))
}

/// Unchecked product for callers that already guarantee matching flavors.
pub(crate) fn mul(x: &OkuboElement, y: &OkuboElement) -> OkuboElement {
    debug_assert_eq!(x.flavor, y.flavor);
    OkuboElement { flavor: x.flavor, coeffs: structure_constants(x.flavor).apply(&x.coeffs, &y.coeffs) }
}

/// `⟨x,y⟩ = n(x+y) − n(x) − n(y) = ⅓Tr(xy)`.
pub fn polar(x: &OkuboElement, y: &OkuboElement) -> Result<F3> {
    x.check_flavor(y)?;
    Ok(polar_unchecked(x, y))
}

pub(crate) fn polar_unchecked(x: &OkuboElement, y: &OkuboElement) -> F3 {
    polar_integral(x, y).unwrap_or_else(|| polar_rational(x, y))
}

fn polar_integral(x: &OkuboElement, y: &OkuboElement) -> Option<F3> {
    let t = tables(x.flavor);
    let (xw, lx) = clear_denominators(&x.coeffs)?;
    let (yw, ly) = clear_denominators(&y.coeffs)?;
    let mut acc = IntSqrt3::default();
    for &(a, b, g) in &t.gram_integral {
        acc = acc.checked_add(g.checked_mul(xw[a].checked_mul(yw[b])?)?)?;
    }
    Some(acc.over(t.gram_denom.checked_mul(lx)?.checked_mul(ly)?))
}

fn polar_rational(x: &OkuboElement, y: &OkuboElement) -> F3 {
    let g = gram_matrix(x.flavor);
    let mut acc = F3::zero();
    for a in 0..DIM {
        if x.coeffs[a].is_zero() {
            continue;
        }
        for b in 0..DIM {
            let gab = g.get(a, b);
            if gab.is_zero() || y.coeffs[b].is_zero() {
                continue;
            }
            acc += &(&x.coeffs[a] * gab) * &y.coeffs[b];
        }
    }
    acc
}

/// `n(x) = ⅙Tr(x²)`.
pub fn okubo_norm(x: &OkuboElement) -> F3 {
    polar_unchecked(x, x).scale(&Rational::new(1, 2))
}

/// `⅙Tr(x²)` evaluated on the matrix view.
pub fn okubo_norm_matrix(x: &OkuboElement) -> F3 {
    let m = x.to_matrix();
    let t = (&m * &m).trace();
    t.re.scale(&Rational::new(1, 6))
}

/// Norm from the matrix entries `ξ₁, ξ₂, x_k + iγy_k`:
/// `⅓(γx₁² + γx₂² + x₃² + γy₁² + γy₂² + y₃² + ξ₁² + ξ₂² + ξ₁ξ₂)`.
pub fn okubo_norm_coordinates(x: &OkuboElement) -> F3 {
    let m = x.to_matrix();
    let g = F3::from_int(x.flavor.gamma());
    let xi1 = &m.0[0][0].re;
    let xi2 = &m.0[1][1].re;
    let (x1, y1) = (&m.0[0][1].re, &g * &m.0[0][1].im);
    let (x2, y2) = (&m.0[0][2].re, &g * &m.0[0][2].im);
    let (x3, y3) = (&m.0[1][2].re, &m.0[1][2].im);
    let sum = &g * &(x1.square() + x2.square() + y1.square() + y2.square())
        + x3.square()
        + y3.square()
        + xi1.square()
        + xi2.square()
        + xi1 * xi2;
    sum.scale(&Rational::new(1, 3))
}

// ---------------------------------------------------------------------------
// Division vs zero divisors

/// Outcome of the positive-definiteness test on the polar form.
#[derive(Clone, Debug)]
pub struct DivisionReport {
    pub flavor: Flavor,
    pub positive_definite: bool,
    pub leading_minors: Vec<F3>,
    /// A nonzero isotropic element, present for the split flavor.
    pub witness: Option<OkuboElement>,
}

/// `d = i₁ + i₆`, isotropic when `γ = −1`.
pub fn isotropic_witness(flavor: Flavor) -> OkuboElement {
    OkuboElement::from_ints(flavor, [0, 1, 0, 0, 0, 0, 1, 0])
}

pub fn is_positive_definite(flavor: Flavor) -> DivisionReport {
    let minors = leading_minors(gram_matrix(flavor));
    let positive_definite = minors.iter().all(F3::is_positive);
    let witness = Some(isotropic_witness(flavor)).filter(|d| okubo_norm(d).is_zero());
    DivisionReport { flavor, positive_definite, leading_minors: minors, witness }
}

/// Whether `d` is a zero divisor: `n(d) = 0`. When it is, `(d*x)*d = 0` is
/// additionally confirmed on `samples` random `x`.
pub fn zero_divisor_check(d: &OkuboElement, sampler: &mut Sampler, samples: usize) -> Result<bool> {
    if d.is_zero() {
        return Err(Error::ZeroInput);
    }
    if !okubo_norm(d).is_zero() {
        return Ok(false);
    }
    let annihilates = (0..samples).all(|_| {
        let x = OkuboElement::random(sampler, d.flavor);
        mul(&mul(d, &x), d).is_zero() && mul(d, &mul(&x, d)).is_zero()
    });
    Ok(annihilates)
}

// ---------------------------------------------------------------------------
// Trivolution and its fixed part

/// `τ(x) = ⟨x,e⟩e − x*e`.
pub fn trivolution(x: &OkuboElement) -> OkuboElement {
    let e = OkuboElement::e(x.flavor);
    e.scale(&polar_unchecked(x, &e)) - mul(x, &e)
}

/// `τ(x) = e*(e*x)`.
pub fn trivolution_left(x: &OkuboElement) -> OkuboElement {
    let e = OkuboElement::e(x.flavor);
    mul(&e, &mul(&e, x))
}

/// `τ²(x) = (x*e)*e`.
pub fn trivolution_squared_right(x: &OkuboElement) -> OkuboElement {
    let e = OkuboElement::e(x.flavor);
    mul(&mul(x, &e), &e)
}

/// Splits `x` into its τ-fixed part `⅓(x + τx + τ²x)` and the remainder.
pub fn fix_tau(x: &OkuboElement) -> (OkuboElement, OkuboElement) {
    let t = trivolution(x);
    let tt = trivolution(&t);
    let fixed = (x + &t + tt).scale_rational(&Rational::new(1, 3));
    let moving = x - &fixed;
    (fixed, moving)
}

// ---------------------------------------------------------------------------
// Octonions recovered from 𝒪

fn require_compact(x: &OkuboElement) -> Result<()> {
    match x.flavor {
        Flavor::Compact => Ok(()),
        f => Err(Error::CompactOnly(f)),
    }
}

/// `x·y = (e*x)*(y*e)`, a unital composition product with unit `e`.
pub fn recovered_oct_mul(x: &OkuboElement, y: &OkuboElement) -> Result<OkuboElement> {
    require_compact(x)?;
    x.check_flavor(y)?;
    let e = OkuboElement::e(Flavor::Compact);
    Ok(mul(&mul(&e, x), &mul(y, &e)))
}

/// `x̄ = e*τ(x)`.
pub fn recovered_conj(x: &OkuboElement) -> Result<OkuboElement> {
    require_compact(x)?;
    Ok(mul(&OkuboElement::e(Flavor::Compact), &trivolution(x)))
}

// ---------------------------------------------------------------------------
// Commutator and division solver

/// `[x,y] = x*y − y*x`.
pub fn bracket(x: &OkuboElement, y: &OkuboElement) -> Result<OkuboElement> {
    x.check_flavor(y)?;
    Ok(mul(x, y) - mul(y, x))
}

/// The unique `s` with `s*a = b`, namely `(a*b)/n(a)`, for `a ≠ 0` in 𝒪.
pub fn solve_left(a: &OkuboElement, b: &OkuboElement) -> Result<OkuboElement> {
    require_compact(a)?;
    a.check_flavor(b)?;
    let na = okubo_norm(a);
    if na.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(mul(a, b).scale(&na.inverse()?))
}

/// Multiplication by a nonzero scalar inverse: `x / c`.
pub fn divide(x: &OkuboElement, c: &F3) -> Result<OkuboElement> {
    Ok(x.scale(&c.inverse()?))
}
