//! θ-deformed Michel–Radicati products on η-hermitian 3×3 matrices.

use crate::error::{Error, Result};
use crate::exactfield::{C3, F3};
use crate::linalg::{eta_dagger, Mat3};

use super::{okubo_norm, Flavor, OkuboElement};

/// `θ = √3/6 = 1/(2√3)`, where the traceless product is the Okubo product.
pub fn okubo_theta() -> F3 {
    F3::sqrt3_frac(1, 6)
}

/// Coefficients of `(e, i₁)`, a pair with nonzero composition defect at `θ = 0`.
pub const MR_COMPOSITION_WITNESS: ([i64; 8], [i64; 8]) = ([1, 0, 0, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0, 0, 0]);

fn check_hermitian(x: &Mat3, flavor: Flavor) -> Result<()> {
    if &eta_dagger(x, flavor) != x {
        return Err(Error::NotHermitian("eta-hermitian"));
    }
    Ok(())
}

fn check_traceless(x: &Mat3) -> Result<()> {
    if !x.trace().is_zero() {
        return Err(Error::NotHermitian("traceless"));
    }
    Ok(())
}

/// `x ∘_θ y = (½ + iθ)xy + (½ − iθ)yx` on η-hermitian matrices.
pub fn traceful_mul(x: &Mat3, y: &Mat3, theta: &F3, flavor: Flavor) -> Result<Mat3> {
    check_hermitian(x, flavor)?;
    check_hermitian(y, flavor)?;
    Ok(traceful_unchecked(x, y, theta))
}

fn traceful_unchecked(x: &Mat3, y: &Mat3, theta: &F3) -> Mat3 {
    let c = C3::new(F3::frac(1, 2), theta.clone());
    &(x * y).scale(&c) + &(y * x).scale(&c.conj())
}

/// `x ⋆_θ y = (½ + iθ)xy + (½ − iθ)yx − ⅓Tr(xy)Id` on traceless η-hermitian
/// matrices.
pub fn michel_radicati_mul(x: &Mat3, y: &Mat3, theta: &F3, flavor: Flavor) -> Result<Mat3> {
    for m in [x, y] {
        check_traceless(m)?;
        check_hermitian(m, flavor)?;
    }
    let tr = (x * y).trace();
    Ok(&traceful_unchecked(x, y, theta) - &Mat3::identity().scale(&tr.scale(&F3::frac(1, 3))))
}

/// [`michel_radicati_mul`] on Okubo elements.
pub fn michel_radicati_okubo(x: &OkuboElement, y: &OkuboElement, theta: &F3) -> Result<OkuboElement> {
    if x.flavor != y.flavor {
        return Err(Error::FlavorMismatch { left: x.flavor, right: y.flavor });
    }
    let m = michel_radicati_mul(&x.to_matrix(), &y.to_matrix(), theta, x.flavor)?;
    OkuboElement::from_matrix(&m, x.flavor)
}

/// `n(x ⋆_θ y) − n(x)n(y)`.
pub fn michel_radicati_composition_defect(x: &OkuboElement, y: &OkuboElement, theta: &F3) -> Result<F3> {
    let p = michel_radicati_okubo(x, y, theta)?;
    Ok(okubo_norm(&p) - okubo_norm(x) * okubo_norm(y))
}
