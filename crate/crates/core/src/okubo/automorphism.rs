//! Conjugation automorphisms of 𝒪 and 𝒪ₛ built from Cayley transforms.

use crate::error::{Error, Result};
use crate::exactfield::{Sampler, C3, F3};
use crate::linalg::{eta_dagger, ExactMatrix, Mat3};

use super::{basis_matrices, gram_matrix, mul, Flavor, OkuboElement, DIM};

/// A map `𝒪 → 𝒪`.
pub trait OkuboMap {
    fn apply(&self, x: &OkuboElement) -> OkuboElement;
}

impl<F> OkuboMap for F
where
    F: Fn(&OkuboElement) -> OkuboElement,
{
    fn apply(&self, x: &OkuboElement) -> OkuboElement {
        self(x)
    }
}

/// A linear map given by its 8×8 matrix on the canonical basis (columns are
/// images of basis vectors).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearOkuboMap {
    pub flavor: Flavor,
    pub matrix: ExactMatrix,
}

impl LinearOkuboMap {
    pub fn identity(flavor: Flavor) -> Self {
        LinearOkuboMap { flavor, matrix: ExactMatrix::identity(DIM) }
    }

    pub fn scalar(flavor: Flavor, c: &F3) -> Self {
        let mut matrix = ExactMatrix::zeros(DIM, DIM);
        for i in 0..DIM {
            matrix.set(i, i, c.clone());
        }
        LinearOkuboMap { flavor, matrix }
    }

    pub fn from_fn(flavor: Flavor, f: impl Fn(&OkuboElement) -> OkuboElement) -> Self {
        let cols: Vec<Vec<F3>> =
            (0..DIM).map(|k| f(&OkuboElement::basis(flavor, k)).coeffs.to_vec()).collect();
        LinearOkuboMap { flavor, matrix: ExactMatrix::from_columns(DIM, &cols).expect("8 columns of length 8") }
    }

    /// Whether `φ(b_a * b_b) = φ(b_a) * φ(b_b)` on all 64 basis pairs, which by
    /// bilinearity is multiplicativity on all of 𝒪.
    pub fn is_multiplicative(&self) -> bool {
        let images: Vec<OkuboElement> = (0..DIM).map(|k| self.apply(&OkuboElement::basis(self.flavor, k))).collect();
        (0..DIM).all(|a| {
            (0..DIM).all(|b| {
                let ab = mul(&OkuboElement::basis(self.flavor, a), &OkuboElement::basis(self.flavor, b));
                self.apply(&ab) == mul(&images[a], &images[b])
            })
        })
    }

    /// Whether `φᵀ G φ = G` for the polar Gram matrix `G`.
    pub fn is_isometry(&self) -> bool {
        let g = gram_matrix(self.flavor);
        self.matrix.transpose().mul(g).mul(&self.matrix) == *g
    }
}

impl OkuboMap for LinearOkuboMap {
    fn apply(&self, x: &OkuboElement) -> OkuboElement {
        assert_eq!(x.flavor, self.flavor, "map applied to an element of the wrong flavor");
        let v = self.matrix.mul_vec(&x.coeffs);
        OkuboElement { flavor: self.flavor, coeffs: v.try_into().expect("8 coefficients") }
    }
}

/// `φ(x) = u x u⁻¹` for the Cayley transform `u = (I − s)(I + s)⁻¹` of an
/// η-skew-hermitian `s`.
#[derive(Clone, Debug)]
pub struct OkuboAutomorphism {
    pub flavor: Flavor,
    pub u: Mat3,
    pub u_inv: Mat3,
    linear: LinearOkuboMap,
}

impl OkuboAutomorphism {
    pub fn identity(flavor: Flavor) -> Self {
        OkuboAutomorphism {
            flavor,
            u: Mat3::identity(),
            u_inv: Mat3::identity(),
            linear: LinearOkuboMap::identity(flavor),
        }
    }

    /// Conjugation on the matrix view, without the cached linear map.
    pub fn apply_matrix(&self, x: &OkuboElement) -> OkuboElement {
        let m = &(&self.u * &x.to_matrix()) * &self.u_inv;
        OkuboElement::from_matrix(&m, self.flavor).expect("conjugation by an η-unitary preserves 𝒪")
    }

    pub fn linear(&self) -> &LinearOkuboMap {
        &self.linear
    }

    /// `φ ∘ ψ`.
    pub fn compose(&self, other: &OkuboAutomorphism) -> OkuboAutomorphism {
        assert_eq!(self.flavor, other.flavor);
        OkuboAutomorphism {
            flavor: self.flavor,
            u: &self.u * &other.u,
            u_inv: &other.u_inv * &self.u_inv,
            linear: LinearOkuboMap { flavor: self.flavor, matrix: self.linear.matrix.mul(&other.linear.matrix) },
        }
    }
}

impl OkuboMap for OkuboAutomorphism {
    fn apply(&self, x: &OkuboElement) -> OkuboElement {
        self.linear.apply(x)
    }
}

/// A random η-skew-hermitian matrix `A − ηA†η` with small rational entries.
pub fn random_skew(sampler: &mut Sampler, flavor: Flavor) -> Mat3 {
    let mut a = Mat3::zero();
    for row in a.0.iter_mut() {
        for z in row.iter_mut() {
            *z = C3::new(sampler.rational_f3(), sampler.rational_f3());
        }
    }
    &a - &eta_dagger(&a, flavor)
}

/// Builds the conjugation automorphism attached to `s` and certifies it:
/// multiplicativity on all basis pairs and preservation of the polar form.
pub fn automorphism_from_unitary(s: &Mat3, flavor: Flavor) -> Result<OkuboAutomorphism> {
    if eta_dagger(s, flavor) != -s {
        return Err(Error::NotSkewHermitian(flavor));
    }
    let id = Mat3::identity();
    let plus_inv = (&id + s).inverse()?;
    let u = &(&id - s) * &plus_inv;
    let u_inv = u.inverse()?;
    let basis = basis_matrices(flavor);
    let cols: Vec<Vec<F3>> = basis
        .iter()
        .map(|b| {
            let m = &(&u * b) * &u_inv;
            OkuboElement::from_matrix(&m, flavor).map(|x| x.coeffs.to_vec())
        })
        .collect::<Result<_>>()?;
    let linear = LinearOkuboMap { flavor, matrix: ExactMatrix::from_columns(DIM, &cols)? };
    debug_assert!(linear.is_multiplicative() && linear.is_isometry());
    Ok(OkuboAutomorphism { flavor, u, u_inv, linear })
}
