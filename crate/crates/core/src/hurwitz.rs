//! Split octonions, their para-Hurwitz product and the Petersson twist.
//!
//! Basis order is `e₁, e₂, u₁, u₂, u₃, v₁, v₂, v₃`. The norm is
//! `n(αe₁ + βe₂ + Σaᵢuᵢ + Σbᵢvᵢ) = αβ + Σaᵢbᵢ`, whose composition law against
//! the multiplication table is checked in the tests.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::exactfield::{forward_binop, Rational, Sampler, F3};

pub const DIM: usize = 8;

pub const LABELS: [&str; DIM] = ["e1", "e2", "u1", "u2", "u3", "v1", "v2", "v3"];

const E1: usize = 0;
const E2: usize = 1;

/// Multiplication table: entry `±(k+1)` means `±b_k`, `0` means zero.
#[rustfmt::skip]
const TABLE: [[i8; DIM]; DIM] = [
    //  e1  e2  u1  u2  u3  v1  v2  v3
    [   1,  0,  3,  4,  5,  0,  0,  0], // e1
    [   0,  2,  0,  0,  0,  6,  7,  8], // e2
    [   0,  3,  0,  8, -7, -1,  0,  0], // u1
    [   0,  4, -8,  0,  6,  0, -1,  0], // u2
    [   0,  5,  7, -6,  0,  0,  0, -1], // u3
    [   6,  0, -2,  0,  0,  0,  5, -4], // v1
    [   7,  0,  0, -2,  0, -5,  0,  3], // v2
    [   8,  0,  0,  0, -2,  4, -3,  0], // v3
];

/// Product of two basis vectors as `(sign, index)`, or `None` for zero.
pub fn basis_product(a: usize, b: usize) -> Option<(i8, usize)> {
    match TABLE[a][b] {
        0 => None,
        t => Some((t.signum(), t.unsigned_abs() as usize - 1)),
    }
}

/// An element of the split octonions over Q.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SplitOctonion(pub [Rational; DIM]);

impl SplitOctonion {
    pub fn zero() -> Self {
        SplitOctonion::default()
    }

    /// The unit `e₁ + e₂`.
    pub fn unit() -> Self {
        let mut x = SplitOctonion::zero();
        x.0[E1] = Rational::one();
        x.0[E2] = Rational::one();
        x
    }

    pub fn basis(k: usize) -> Self {
        let mut x = SplitOctonion::zero();
        x.0[k] = Rational::one();
        x
    }

    pub fn from_ints(c: [i64; DIM]) -> Self {
        SplitOctonion(c.map(Rational::from_integer))
    }

    pub fn random(s: &mut Sampler) -> Self {
        SplitOctonion(std::array::from_fn(|_| s.rational()))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rational::is_zero)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        SplitOctonion(std::array::from_fn(|k| &self.0[k] * r))
    }

    pub fn coeffs_f3(&self) -> [F3; DIM] {
        std::array::from_fn(|k| F3::rational(self.0[k].clone()))
    }
}

impl<'a> Add<&'a SplitOctonion> for &'a SplitOctonion {
    type Output = SplitOctonion;
    fn add(self, rhs: &SplitOctonion) -> SplitOctonion {
        SplitOctonion(std::array::from_fn(|k| &self.0[k] + &rhs.0[k]))
    }
}
impl<'a> Sub<&'a SplitOctonion> for &'a SplitOctonion {
    type Output = SplitOctonion;
    fn sub(self, rhs: &SplitOctonion) -> SplitOctonion {
        SplitOctonion(std::array::from_fn(|k| &self.0[k] - &rhs.0[k]))
    }
}
impl Neg for &SplitOctonion {
    type Output = SplitOctonion;
    fn neg(self) -> SplitOctonion {
        SplitOctonion(std::array::from_fn(|k| -&self.0[k]))
    }
}
impl Neg for SplitOctonion {
    type Output = SplitOctonion;
    fn neg(self) -> SplitOctonion {
        -&self
    }
}
forward_binop!(SplitOctonion, Add, add);
forward_binop!(SplitOctonion, Sub, sub);

impl fmt::Debug for SplitOctonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .0
            .iter()
            .zip(LABELS)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, l)| format!("{c}·{l}"))
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// Bilinear extension of the multiplication table.
pub fn oct_mul(x: &SplitOctonion, y: &SplitOctonion) -> SplitOctonion {
    let mut out = SplitOctonion::zero();
    for (a, xa) in x.0.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        for (b, yb) in y.0.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            if let Some((sign, k)) = basis_product(a, b) {
                let t = xa * yb;
                if sign > 0 {
                    out.0[k] += t;
                } else {
                    out.0[k] -= t;
                }
            }
        }
    }
    out
}

pub fn oct_norm(x: &SplitOctonion) -> Rational {
    let c = &x.0;
    &c[0] * &c[1] + &c[2] * &c[5] + &c[3] * &c[6] + &c[4] * &c[7]
}

/// Polar form `n(x+y) − n(x) − n(y)`.
pub fn oct_polar(x: &SplitOctonion, y: &SplitOctonion) -> Rational {
    oct_norm(&(x + y)) - oct_norm(x) - oct_norm(y)
}

/// `x̄ = ⟨x,1⟩1 − x`.
pub fn oct_conj(x: &SplitOctonion) -> SplitOctonion {
    let unit = SplitOctonion::unit();
    unit.scale(&oct_polar(x, &unit)) - x
}

/// Para-Hurwitz product `x̄·ȳ`.
pub fn para_mul(x: &SplitOctonion, y: &SplitOctonion) -> SplitOctonion {
    oct_mul(&oct_conj(x), &oct_conj(y))
}

/// Order-3 automorphism fixing `e₁, e₂` and cycling `u₁→u₂→u₃→u₁`,
/// `v₁→v₂→v₃→v₁`.
pub fn tau_triality(x: &SplitOctonion) -> SplitOctonion {
    let c = &x.0;
    SplitOctonion([
        c[0].clone(),
        c[1].clone(),
        c[4].clone(),
        c[2].clone(),
        c[3].clone(),
        c[7].clone(),
        c[5].clone(),
        c[6].clone(),
    ])
}

/// Petersson twist `τ(x̄)·τ²(ȳ)`.
pub fn petersson_mul(x: &SplitOctonion, y: &SplitOctonion) -> SplitOctonion {
    let tx = tau_triality(&oct_conj(x));
    let tty = tau_triality(&tau_triality(&oct_conj(y)));
    oct_mul(&tx, &tty)
}

/// An element with `1 * x ≠ x` under the Petersson product.
pub fn petersson_non_unital_witness() -> SplitOctonion {
    SplitOctonion::basis(2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OctonionProduct {
    Hurwitz,
    Para,
    Petersson,
}

impl OctonionProduct {
    pub fn apply(self, x: &SplitOctonion, y: &SplitOctonion) -> SplitOctonion {
        match self {
            OctonionProduct::Hurwitz => oct_mul(x, y),
            OctonionProduct::Para => para_mul(x, y),
            OctonionProduct::Petersson => petersson_mul(x, y),
        }
    }

    /// Structure constants `c[a][b][k]` flattened as `(a*8 + b)*8 + k`.
    pub fn structure_constants(self) -> Vec<F3> {
        let mut out = Vec::with_capacity(DIM * DIM * DIM);
        for a in 0..DIM {
            for b in 0..DIM {
                let p = self.apply(&SplitOctonion::basis(a), &SplitOctonion::basis(b));
                out.extend(p.coeffs_f3());
            }
        }
        out
    }
}
