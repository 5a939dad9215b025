//! Dense matrix carriers sized by the deficiency index n.
//!
//! Nothing here knows about extensions or branches; these are the small
//! row-major containers the evaluation and verification layers exchange.
//! n <= 64 keeps every operation here O(n^3) worst case with tiny constants,
//! so no external linear-algebra backend is pulled in.

use num_complex::Complex64;
use std::ops::{Index, IndexMut};

/// Square complex matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Self {
        ComplexMatrix {
            dim,
            data: vec![Complex64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for j in 0..dim {
            m[(j, j)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for j in 0..dim {
            for k in 0..dim {
                data.push(f(j, k));
            }
        }
        ComplexMatrix { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |j, k| self[(k, j)])
    }

    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(self.dim, |j, k| self[(k, j)].conj())
    }

    /// (M - M^H) / 2i, the Hermitian matrix carrying Im M.
    pub fn imag_hermitian_part(&self) -> Self {
        let half_i = Complex64::new(0.0, -0.5);
        Self::from_fn(self.dim, |j, k| {
            half_i * (self[(j, k)] - self[(k, j)].conj())
        })
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "matrix product needs equal dimensions");
        let mut out = Self::zeros(self.dim);
        for j in 0..self.dim {
            for p in 0..self.dim {
                let a = self[(j, p)];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for k in 0..self.dim {
                    out[(j, k)] += a * rhs[(p, k)];
                }
            }
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(
            self.dim, rhs.dim,
            "matrix difference needs equal dimensions"
        );
        Self::from_fn(self.dim, |j, k| self[(j, k)] - rhs[(j, k)])
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "matrix sum needs equal dimensions");
        Self::from_fn(self.dim, |j, k| self[(j, k)] + rhs[(j, k)])
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self::from_fn(self.dim, |j, k| factor * self[(j, k)])
    }

    /// Max entry modulus; the norm used by every relative tolerance in this crate.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn frobenius(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.data
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Largest entry-wise modulus of (self - rhs).
    pub fn max_abs_diff(&self, rhs: &Self) -> f64 {
        assert_eq!(self.dim, rhs.dim);
        self.data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;
    fn index(&self, (j, k): (usize, usize)) -> &Complex64 {
        &self.data[j * self.dim + k]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (j, k): (usize, usize)) -> &mut Complex64 {
        &mut self.data[j * self.dim + k]
    }
}

/// Square real symmetric matrix, row-major. Carries spectral functions and
/// boundary imaginary parts, which are real symmetric by construction.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralMatrix {
    dim: usize,
    data: Vec<f64>,
}

impl SpectralMatrix {
    pub fn zeros(dim: usize) -> Self {
        SpectralMatrix {
            dim,
            data: vec![0.0; dim * dim],
        }
    }

    /// Build from an entry function. The function must be symmetric in
    /// (j, k) by the same arithmetic path; all n^2 entries are evaluated, so
    /// commutative products keep the stored matrix bit-symmetric.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for j in 0..dim {
            for k in 0..dim {
                data.push(f(j, k));
            }
        }
        SpectralMatrix { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn to_complex(&self) -> ComplexMatrix {
        ComplexMatrix::from_fn(self.dim, |j, k| Complex64::new(self[(j, k)], 0.0))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(
            self.dim, rhs.dim,
            "matrix difference needs equal dimensions"
        );
        Self::from_fn(self.dim, |j, k| self[(j, k)] - rhs[(j, k)])
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|x| x.abs()).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, rhs: &Self) -> f64 {
        assert_eq!(self.dim, rhs.dim);
        self.data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|x| x.is_finite())
    }
}

impl Index<(usize, usize)> for SpectralMatrix {
    type Output = f64;
    fn index(&self, (j, k): (usize, usize)) -> &f64 {
        &self.data[j * self.dim + k]
    }
}

impl IndexMut<(usize, usize)> for SpectralMatrix {
    fn index_mut(&mut self, (j, k): (usize, usize)) -> &mut f64 {
        &mut self.data[j * self.dim + k]
    }
}
