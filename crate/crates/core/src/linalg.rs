//! 3×3 matrices over Q(√3, i) and dense exact linear algebra over Q(√3).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactfield::{forward_binop, C3, F3};
use crate::okubo::Flavor;

/// A 3×3 matrix over [`C3`], the representation space of Okubo elements.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Mat3(pub [[C3; 3]; 3]);

impl Mat3 {
    pub fn zero() -> Self {
        Mat3::default()
    }

    pub fn identity() -> Self {
        Mat3::diag([C3::one(), C3::one(), C3::one()])
    }

    pub fn diag(d: [C3; 3]) -> Self {
        let mut m = Mat3::zero();
        for (i, v) in d.into_iter().enumerate() {
            m.0[i][i] = v;
        }
        m
    }

    pub fn from_ints(rows: [[i64; 3]; 3]) -> Self {
        let mut m = Mat3::zero();
        for i in 0..3 {
            for j in 0..3 {
                m.0[i][j] = C3::from_int(rows[i][j]);
            }
        }
        m
    }

    /// `η` for the flavor: `diag(1,1,1)` or `diag(−1,1,1)`.
    pub fn eta(flavor: Flavor) -> Self {
        Mat3::diag([C3::from_int(flavor.gamma()), C3::one(), C3::one()])
    }

    pub fn get(&self, i: usize, j: usize) -> &C3 {
        &self.0[i][j]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().flatten().all(C3::is_zero)
    }

    pub fn trace(&self) -> C3 {
        &self.0[0][0] + &self.0[1][1] + &self.0[2][2]
    }

    pub fn transpose(&self) -> Self {
        let mut m = Mat3::zero();
        for i in 0..3 {
            for j in 0..3 {
                m.0[i][j] = self.0[j][i].clone();
            }
        }
        m
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        let mut m = Mat3::zero();
        for i in 0..3 {
            for j in 0..3 {
                m.0[i][j] = self.0[j][i].conj();
            }
        }
        m
    }

    pub fn scale(&self, c: &C3) -> Self {
        let mut m = self.clone();
        m.0.iter_mut().flatten().for_each(|v| *v = &*v * c);
        m
    }

    pub fn scale_f3(&self, c: &F3) -> Self {
        let mut m = self.clone();
        m.0.iter_mut().flatten().for_each(|v| *v = v.scale(c));
        m
    }

    pub fn det(&self) -> C3 {
        let m = &self.0;
        let minor = |a: usize, b: usize, c: usize, d: usize| &m[1][a] * &m[2][b] - &m[1][c] * &m[2][d];
        &m[0][0] * minor(1, 2, 2, 1) - &m[0][1] * minor(0, 2, 2, 0) + &m[0][2] * minor(0, 1, 1, 0)
    }

    /// Inverse via the adjugate.
    pub fn inverse(&self) -> Result<Self> {
        let inv_det = self.det().inverse()?;
        let m = &self.0;
        let mut adj = Mat3::zero();
        for i in 0..3 {
            for j in 0..3 {
                // cofactor of (j, i)
                let (r0, r1) = other_two(j);
                let (c0, c1) = other_two(i);
                let cof = &m[r0][c0] * &m[r1][c1] - &m[r0][c1] * &m[r1][c0];
                adj.0[i][j] = if (i + j) % 2 == 0 { cof } else { -cof };
            }
        }
        Ok(adj.scale(&inv_det))
    }
}

fn other_two(k: usize) -> (usize, usize) {
    match k {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    }
}

/// Standard exact matrix product.
pub fn mat_mul(a: &Mat3, b: &Mat3) -> Mat3 {
    let mut m = Mat3::zero();
    for i in 0..3 {
        for j in 0..3 {
            let mut acc = C3::zero();
            for k in 0..3 {
                if a.0[i][k].is_zero() || b.0[k][j].is_zero() {
                    continue;
                }
                acc += &a.0[i][k] * &b.0[k][j];
            }
            m.0[i][j] = acc;
        }
    }
    m
}

/// `η x† η` with the flavor's `η`; an involution whose fixed points are the
/// η-hermitian matrices.
pub fn eta_dagger(x: &Mat3, flavor: Flavor) -> Mat3 {
    let eta = Mat3::eta(flavor);
    mat_mul(&mat_mul(&eta, &x.dagger()), &eta)
}

impl<'a> Mul<&'a Mat3> for &'a Mat3 {
    type Output = Mat3;
    fn mul(self, rhs: &Mat3) -> Mat3 {
        mat_mul(self, rhs)
    }
}
impl<'a> Add<&'a Mat3> for &'a Mat3 {
    type Output = Mat3;
    fn add(self, rhs: &Mat3) -> Mat3 {
        let mut m = self.clone();
        for i in 0..3 {
            for j in 0..3 {
                m.0[i][j] += &rhs.0[i][j];
            }
        }
        m
    }
}
impl<'a> Sub<&'a Mat3> for &'a Mat3 {
    type Output = Mat3;
    fn sub(self, rhs: &Mat3) -> Mat3 {
        let mut m = self.clone();
        for i in 0..3 {
            for j in 0..3 {
                m.0[i][j] -= &rhs.0[i][j];
            }
        }
        m
    }
}
impl Neg for &Mat3 {
    type Output = Mat3;
    fn neg(self) -> Mat3 {
        self.scale(&C3::from_int(-1))
    }
}
impl Neg for Mat3 {
    type Output = Mat3;
    fn neg(self) -> Mat3 {
        -&self
    }
}
forward_binop!(Mat3, Add, add);
forward_binop!(Mat3, Sub, sub);
forward_binop!(Mat3, Mul, mul);

impl fmt::Debug for Mat3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for row in &self.0 {
            writeln!(f, "  [{}, {}, {}]", row[0], row[1], row[2])?;
        }
        write!(f, "]")
    }
}

// ---------------------------------------------------------------------------
// Dense matrices over Q(√3)

/// A dense row-major matrix over [`F3`].
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<F3>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, data: vec![F3::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ExactMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F3::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F3>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        let n = rows.len();
        for row in rows {
            if row.len() != cols {
                return Err(Error::Dimension { expected: cols, got: row.len() });
            }
            data.extend(row);
        }
        Ok(ExactMatrix { rows: n, cols, data })
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<F3>]) -> Result<Self> {
        let mut m = ExactMatrix::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::Dimension { expected: rows, got: col.len() });
            }
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F3 {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F3) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F3] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(F3::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut m = ExactMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(j, i, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &[F3]) -> Vec<F3> {
        assert_eq!(v.len(), self.cols, "dimension mismatch in mul_vec");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    pub fn mul(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in mul");
        let mut m = ExactMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = m.get(i, j) + &(a * b);
                        m.set(i, j, v);
                    }
                }
            }
        }
        m
    }

    pub fn sub(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "dimension mismatch in sub");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        ExactMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn trace(&self) -> F3 {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        rref(self).1.len()
    }
}

/// Reduced row echelon form and pivot columns.
///
/// Pivots are the first nonzero entry in column order.
pub fn rref(m: &ExactMatrix) -> (ExactMatrix, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..a.cols {
        if r == a.rows {
            break;
        }
        let Some(p) = (r..a.rows).find(|&i| !a.get(i, c).is_zero()) else {
            continue;
        };
        a.swap_rows(r, p);
        let inv = a.get(r, c).inverse().expect("pivot is nonzero");
        for j in c..a.cols {
            let v = a.get(r, j) * &inv;
            a.set(r, j, v);
        }
        let pivot_row: Vec<F3> = a.row(r).to_vec();
        for i in 0..a.rows {
            if i == r {
                continue;
            }
            let factor = a.get(i, c).clone();
            if factor.is_zero() {
                continue;
            }
            for j in c..a.cols {
                if pivot_row[j].is_zero() {
                    continue;
                }
                let v = a.get(i, j) - &(&factor * &pivot_row[j]);
                a.set(i, j, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

/// Basis of `{v : m v = 0}`, one vector per free column.
pub fn nullspace(m: &ExactMatrix) -> Vec<Vec<F3>> {
    let (r, pivots) = rref(m);
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![F3::zero(); m.cols];
            v[f] = F3::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(row, f);
            }
            v
        })
        .collect()
}

/// Inertia of a symmetric form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Signature {
    pub pos: usize,
    pub neg: usize,
    pub zero: usize,
}

/// Signature of a symmetric matrix by exact congruence diagonalization.
pub fn signature(m: &ExactMatrix) -> Result<Signature> {
    if m.rows != m.cols {
        return Err(Error::Dimension { expected: m.rows, got: m.cols });
    }
    let n = m.rows;
    let mut a = m.clone();
    let mut sig = Signature::default();
    for k in 0..n {
        if a.get(k, k).is_zero() {
            if let Some(p) = (k + 1..n).find(|&i| !a.get(i, i).is_zero()) {
                swap_sym(&mut a, k, p);
            } else if let Some((i, j)) = (k..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !a.get(i, j).is_zero())
            {
                // all remaining diagonals vanish: e_i ↦ e_i + e_j gives 2a_ij
                add_sym(&mut a, i, j);
                swap_sym(&mut a, k, i);
            }
        }
        let d = a.get(k, k).clone();
        if d.is_zero() {
            sig.zero += 1;
            continue;
        }
        if d.is_positive() {
            sig.pos += 1;
        } else {
            sig.neg += 1;
        }
        let inv = d.inverse()?;
        for i in k + 1..n {
            let f = a.get(i, k) * &inv;
            if f.is_zero() {
                continue;
            }
            for j in k..n {
                let v = a.get(i, j) - &(&f * a.get(k, j));
                a.set(i, j, v);
            }
            for j in k..n {
                let v = a.get(j, i) - &(&f * a.get(j, k));
                a.set(j, i, v);
            }
        }
    }
    Ok(sig)
}

fn swap_sym(a: &mut ExactMatrix, i: usize, j: usize) {
    if i == j {
        return;
    }
    a.swap_rows(i, j);
    for r in 0..a.rows {
        let (x, y) = (a.get(r, i).clone(), a.get(r, j).clone());
        a.set(r, i, y);
        a.set(r, j, x);
    }
}

/// Congruence `row_i += row_j; col_i += col_j`.
fn add_sym(a: &mut ExactMatrix, i: usize, j: usize) {
    for c in 0..a.cols {
        let v = a.get(i, c) + a.get(j, c);
        a.set(i, c, v);
    }
    for r in 0..a.rows {
        let v = a.get(r, i) + a.get(r, j);
        a.set(r, i, v);
    }
}

/// All leading principal minors of a square matrix.
pub fn leading_minors(m: &ExactMatrix) -> Vec<F3> {
    (1..=m.rows.min(m.cols)).map(|k| determinant(&leading_block(m, k))).collect()
}

fn leading_block(m: &ExactMatrix, k: usize) -> ExactMatrix {
    let mut b = ExactMatrix::zeros(k, k);
    for i in 0..k {
        for j in 0..k {
            b.set(i, j, m.get(i, j).clone());
        }
    }
    b
}

/// Determinant by Gaussian elimination over the field.
pub fn determinant(m: &ExactMatrix) -> F3 {
    assert_eq!(m.rows, m.cols, "determinant of a non-square matrix");
    let n = m.rows;
    let mut a = m.clone();
    let mut det = F3::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a.get(i, c).is_zero()) else {
            return F3::zero();
        };
        if p != c {
            a.swap_rows(p, c);
            det = -det;
        }
        let pivot = a.get(c, c).clone();
        det = &det * &pivot;
        let inv = pivot.inverse().expect("pivot is nonzero");
        for i in c + 1..n {
            let f = a.get(i, c) * &inv;
            if f.is_zero() {
                continue;
            }
            for j in c..n {
                let v = a.get(i, j) - &(&f * a.get(c, j));
                a.set(i, j, v);
            }
        }
    }
    det
}
