//! Exact scalars: arbitrary-precision rationals and the tower Q ⊂ Q(√3) ⊂ Q(√3, i).
//!
//! Every quantity in the crate is built from these three types. There is no
//! floating point anywhere; equality is structural and exact.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Implements the four owned/borrowed combinations of a binary operator in
/// terms of the `&T op &T` implementation.
macro_rules! forward_binop {
    ($ty:ty, $tr:ident, $method:ident) => {
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: &$ty) -> $ty {
                (&self).$method(rhs)
            }
        }
        impl $tr<$ty> for &$ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                self.$method(&rhs)
            }
        }
    };
}

macro_rules! forward_assign {
    ($ty:ty) => {
        impl AddAssign<&$ty> for $ty {
            fn add_assign(&mut self, rhs: &$ty) {
                *self = &*self + rhs;
            }
        }
        impl AddAssign<$ty> for $ty {
            fn add_assign(&mut self, rhs: $ty) {
                *self = &*self + &rhs;
            }
        }
        impl SubAssign<&$ty> for $ty {
            fn sub_assign(&mut self, rhs: &$ty) {
                *self = &*self - rhs;
            }
        }
        impl SubAssign<$ty> for $ty {
            fn sub_assign(&mut self, rhs: $ty) {
                *self = &*self - &rhs;
            }
        }
        impl MulAssign<&$ty> for $ty {
            fn mul_assign(&mut self, rhs: &$ty) {
                *self = &*self * rhs;
            }
        }
        impl Neg for $ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                -&self
            }
        }
        impl Sum for $ty {
            fn sum<I: Iterator<Item = $ty>>(iter: I) -> $ty {
                iter.fold(<$ty>::zero(), |acc, x| acc + x)
            }
        }
        impl<'a> Sum<&'a $ty> for $ty {
            fn sum<I: Iterator<Item = &'a $ty>>(iter: I) -> $ty {
                iter.fold(<$ty>::zero(), |acc, x| acc + x)
            }
        }
    };
}

pub(crate) use forward_binop;

// ---------------------------------------------------------------------------
// Rational

/// An arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "rational with zero denominator");
        Rational(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub(crate) fn from_i128_ratio(numer: i128, denom: i128) -> Self {
        Rational(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn square(&self) -> Self {
        self * self
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl<'a> Add<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn add(self, rhs: &Rational) -> Rational {
        Rational(&self.0 + &rhs.0)
    }
}
impl<'a> Sub<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn sub(self, rhs: &Rational) -> Rational {
        Rational(&self.0 - &rhs.0)
    }
}
impl<'a> Mul<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        if self.0.is_zero() || rhs.0.is_zero() {
            return Rational::zero();
        }
        Rational(&self.0 * &rhs.0)
    }
}
/// Panics on division by zero; use [`Rational::inverse`] for a checked path.
impl<'a> Div<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "rational division by zero");
        Rational(&self.0 / &rhs.0)
    }
}
impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}
forward_binop!(Rational, Add, add);
forward_binop!(Rational, Sub, sub);
forward_binop!(Rational, Mul, mul);
forward_binop!(Rational, Div, div);
forward_assign!(Rational);

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse_int = |t: &str| {
            t.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::Parse(format!("invalid rational {s:?}")))
        };
        match s.split_once('/') {
            None => Ok(Rational(BigRational::from_integer(parse_int(s)?))),
            Some((n, d)) => {
                let d = parse_int(d)?;
                if d.is_zero() {
                    return Err(Error::Parse(format!("zero denominator in {s:?}")));
                }
                Ok(Rational(BigRational::new(parse_int(n)?, d)))
            }
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Str(String),
            Int(i64),
        }
        match Repr::deserialize(deserializer)? {
            Repr::Str(s) => s.parse().map_err(serde::de::Error::custom),
            Repr::Int(n) => Ok(Rational::from_integer(n)),
        }
    }
}

// ---------------------------------------------------------------------------
// Z[√3] with i128 parts, the fraction-free fast path for bulk products

/// `a + b√3` with integer parts; every operation is overflow-checked.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub(crate) struct IntSqrt3 {
    pub a: i128,
    pub b: i128,
}

impl IntSqrt3 {
    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn checked_add(self, o: IntSqrt3) -> Option<IntSqrt3> {
        Some(IntSqrt3 { a: self.a.checked_add(o.a)?, b: self.b.checked_add(o.b)? })
    }

    pub fn checked_mul(self, o: IntSqrt3) -> Option<IntSqrt3> {
        let bb = self.b.checked_mul(o.b)?.checked_mul(3)?;
        Some(IntSqrt3 {
            a: self.a.checked_mul(o.a)?.checked_add(bb)?,
            b: self.a.checked_mul(o.b)?.checked_add(self.b.checked_mul(o.a)?)?,
        })
    }
}

/// `v = w / l` with `w` integral, or `None` if the parts do not fit in i128.
pub(crate) fn clear_denominators(v: &[F3]) -> Option<(Vec<IntSqrt3>, i128)> {
    let mut l: i128 = 1;
    for r in v.iter().flat_map(|c| [&c.a, &c.b]) {
        let d = r.denom().to_i128()?;
        l = (l / l.gcd(&d)).checked_mul(d)?;
    }
    let part = |r: &Rational| r.numer().to_i128()?.checked_mul(l / r.denom().to_i128()?);
    let w = v.iter().map(|c| Some(IntSqrt3 { a: part(&c.a)?, b: part(&c.b)? })).collect::<Option<Vec<_>>>()?;
    Some((w, l))
}

impl IntSqrt3 {
    pub fn over(self, denom: i128) -> F3 {
        F3 { a: Rational::from_i128_ratio(self.a, denom), b: Rational::from_i128_ratio(self.b, denom) }
    }
}

// ---------------------------------------------------------------------------
// F3 = Q(√3)

/// An element `a + b√3` of the real quadratic field Q(√3).
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct F3 {
    pub a: Rational,
    pub b: Rational,
}

impl F3 {
    pub fn new(a: Rational, b: Rational) -> Self {
        F3 { a, b }
    }

    pub fn rational(a: Rational) -> Self {
        F3 { a, b: Rational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        F3::rational(Rational::from_integer(n))
    }

    pub fn frac(n: i64, d: i64) -> Self {
        F3::rational(Rational::new(n, d))
    }

    /// `√3`.
    pub fn sqrt3() -> Self {
        F3 { a: Rational::zero(), b: Rational::one() }
    }

    /// `(n/d)·√3`.
    pub fn sqrt3_frac(n: i64, d: i64) -> Self {
        F3 { a: Rational::zero(), b: Rational::new(n, d) }
    }

    pub fn zero() -> Self {
        F3::default()
    }

    pub fn one() -> Self {
        F3::from_int(1)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Galois conjugate `a − b√3`.
    pub fn galois(&self) -> Self {
        F3 { a: self.a.clone(), b: -&self.b }
    }

    /// Field norm `a² − 3b²`, nonzero for every nonzero element.
    pub fn field_norm(&self) -> Rational {
        self.a.square() - Rational::from_integer(3) * self.b.square()
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let inv = self.field_norm().inverse()?;
        Ok(F3 { a: &self.a * &inv, b: -(&self.b * &inv) })
    }

    pub fn scale(&self, r: &Rational) -> Self {
        F3 { a: &self.a * r, b: &self.b * r }
    }

    pub fn square(&self) -> Self {
        self * self
    }

    /// Strict positivity under the real embedding `√3 ↦ 1.732…`.
    pub fn is_positive(&self) -> bool {
        let (a, b) = (&self.a, &self.b);
        match (a.is_negative(), b.is_negative()) {
            (false, false) => !self.is_zero(),
            (true, true) => false,
            // a ≥ 0 > b: positive iff a² > 3b²
            (false, true) => self.field_norm().is_positive(),
            // b ≥ 0 > a: positive iff 3b² > a²
            (true, false) => self.field_norm().is_negative(),
        }
    }

    pub fn is_negative(&self) -> bool {
        (-self).is_positive()
    }

    pub fn signum(&self) -> i32 {
        if self.is_positive() {
            1
        } else if self.is_zero() {
            0
        } else {
            -1
        }
    }
}

impl From<Rational> for F3 {
    fn from(r: Rational) -> Self {
        F3::rational(r)
    }
}

impl From<i64> for F3 {
    fn from(n: i64) -> Self {
        F3::from_int(n)
    }
}

impl<'a> Add<&'a F3> for &'a F3 {
    type Output = F3;
    fn add(self, rhs: &F3) -> F3 {
        F3 { a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
}
impl<'a> Sub<&'a F3> for &'a F3 {
    type Output = F3;
    fn sub(self, rhs: &F3) -> F3 {
        F3 { a: &self.a - &rhs.a, b: &self.b - &rhs.b }
    }
}
impl<'a> Mul<&'a F3> for &'a F3 {
    type Output = F3;
    fn mul(self, rhs: &F3) -> F3 {
        if rhs.b.is_zero() {
            return self.scale(&rhs.a);
        }
        if self.b.is_zero() {
            return rhs.scale(&self.a);
        }
        let three = Rational::from_integer(3);
        F3 {
            a: &self.a * &rhs.a + three * (&self.b * &rhs.b),
            b: &self.a * &rhs.b + &self.b * &rhs.a,
        }
    }
}
/// Panics on division by zero; use [`F3::inverse`] for a checked path.
impl<'a> Div<&'a F3> for &'a F3 {
    type Output = F3;
    fn div(self, rhs: &F3) -> F3 {
        self * &rhs.inverse().expect("F3 division by zero")
    }
}
impl Neg for &F3 {
    type Output = F3;
    fn neg(self) -> F3 {
        F3 { a: -&self.a, b: -&self.b }
    }
}
forward_binop!(F3, Add, add);
forward_binop!(F3, Sub, sub);
forward_binop!(F3, Mul, mul);
forward_binop!(F3, Div, div);
forward_assign!(F3);

impl PartialOrd for F3 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for F3 {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self - other).signum() {
            1 => Ordering::Greater,
            0 => Ordering::Equal,
            _ => Ordering::Less,
        }
    }
}

impl fmt::Display for F3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}√3", self.b),
            (false, false) => {
                if self.b.is_negative() {
                    write!(f, "{} - {}√3", self.a, -&self.b)
                } else {
                    write!(f, "{} + {}√3", self.a, self.b)
                }
            }
        }
    }
}

impl fmt::Debug for F3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

// ---------------------------------------------------------------------------
// C3 = Q(√3, i)

/// An element `re + im·i` of Q(√3, i).
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct C3 {
    pub re: F3,
    pub im: F3,
}

impl C3 {
    pub fn new(re: F3, im: F3) -> Self {
        C3 { re, im }
    }

    pub fn real(re: F3) -> Self {
        C3 { re, im: F3::zero() }
    }

    pub fn imag(im: F3) -> Self {
        C3 { re: F3::zero(), im }
    }

    pub fn from_int(n: i64) -> Self {
        C3::real(F3::from_int(n))
    }

    pub fn i() -> Self {
        C3::imag(F3::one())
    }

    pub fn zero() -> Self {
        C3::default()
    }

    pub fn one() -> Self {
        C3::from_int(1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        C3 { re: self.re.clone(), im: -&self.im }
    }

    /// `re² + im²`, the squared modulus.
    pub fn abs_sq(&self) -> F3 {
        self.re.square() + self.im.square()
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // Q(√3) is formally real, so re² + im² vanishes only at zero.
        let inv = self.abs_sq().inverse()?;
        Ok(C3 { re: &self.re * &inv, im: -(&self.im * &inv) })
    }

    pub fn scale(&self, r: &F3) -> Self {
        C3 { re: &self.re * r, im: &self.im * r }
    }

    /// Multiplication by `i`.
    pub fn times_i(&self) -> Self {
        C3 { re: -&self.im, im: self.re.clone() }
    }
}

impl From<F3> for C3 {
    fn from(re: F3) -> Self {
        C3::real(re)
    }
}

impl<'a> Add<&'a C3> for &'a C3 {
    type Output = C3;
    fn add(self, rhs: &C3) -> C3 {
        C3 { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}
impl<'a> Sub<&'a C3> for &'a C3 {
    type Output = C3;
    fn sub(self, rhs: &C3) -> C3 {
        C3 { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}
impl<'a> Mul<&'a C3> for &'a C3 {
    type Output = C3;
    fn mul(self, rhs: &C3) -> C3 {
        if rhs.im.is_zero() {
            return self.scale(&rhs.re);
        }
        if self.im.is_zero() {
            return rhs.scale(&self.re);
        }
        C3 {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}
/// Panics on division by zero; use [`C3::inverse`] for a checked path.
impl<'a> Div<&'a C3> for &'a C3 {
    type Output = C3;
    fn div(self, rhs: &C3) -> C3 {
        self * &rhs.inverse().expect("C3 division by zero")
    }
}
impl Neg for &C3 {
    type Output = C3;
    fn neg(self) -> C3 {
        C3 { re: -&self.re, im: -&self.im }
    }
}
forward_binop!(C3, Add, add);
forward_binop!(C3, Sub, sub);
forward_binop!(C3, Mul, mul);
forward_binop!(C3, Div, div);
forward_assign!(C3);

impl fmt::Display for C3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "({})i", self.im),
            (false, false) => write!(f, "{} + ({})i", self.re, self.im),
        }
    }
}

impl fmt::Debug for C3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

// ---------------------------------------------------------------------------
// Seeded sampling

/// Seeded source of small-height exact scalars.
///
/// Numerators are uniform in `[-9, 9]` and denominators in `{1, 2, 3}`; the
/// `√3` part of an [`F3`] is drawn the same way. Substreams derived with
/// [`Sampler::substream`] are independent of how work is split across
/// threads.
#[derive(Clone, Debug)]
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// The `index`-th independent stream of `seed`.
    pub fn substream(seed: u64, index: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(index);
        Sampler { rng }
    }

    pub fn rational(&mut self) -> Rational {
        let n: i64 = self.rng.gen_range(-9..=9);
        let d: i64 = self.rng.gen_range(1..=3);
        Rational::new(n, d)
    }

    pub fn nonzero_rational(&mut self) -> Rational {
        loop {
            let r = self.rational();
            if !r.is_zero() {
                return r;
            }
        }
    }

    pub fn f3(&mut self) -> F3 {
        F3 { a: self.rational(), b: self.rational() }
    }

    pub fn rational_f3(&mut self) -> F3 {
        F3::rational(self.rational())
    }

    pub fn nonzero_f3(&mut self) -> F3 {
        loop {
            let x = self.f3();
            if !x.is_zero() {
                return x;
            }
        }
    }

    pub fn c3(&mut self) -> C3 {
        C3 { re: self.f3(), im: self.f3() }
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn coin(&mut self) -> bool {
        self.rng.gen_bool(0.5)
    }
}
