//! Branch-correct scalar building blocks.
//!
//! Everything downstream (Weyl matrices, fundamental solutions, spectral
//! densities) is a power of one of two scalars: the 2n-th root of -lambda
//! and rho = i * lambda^(1/2n). Both are fixed here once, with the branch
//! convention arg(-lambda) in (-pi, 0) for lambda in the open upper
//! half-plane, so every caller takes powers of the same numbers instead of
//! re-deciding branches locally.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Hard cap on the differential order n. With n <= 64 the cotangent
/// products stay well inside f64 range and dense linear algebra on n x n
/// blocks stays trivially cheap.
pub const MAX_ORDER: u32 = 64;

/// Differential order n of the operator (-1)^n d^2n/dx^2n, with 1 <= n <= [`MAX_ORDER`].
///
/// Also the dimension of the boundary-value spaces, hence of every matrix
/// in this crate.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Order(u32);

impl Order {
    pub fn new(n: u32) -> Result<Self> {
        if n == 0 || n > MAX_ORDER {
            return Err(Error::OrderOutOfRange { n, max: MAX_ORDER });
        }
        Ok(Order(n))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// Matrix dimension: the operator has deficiency indices (n, n).
    pub fn dim(self) -> usize {
        self.0 as usize
    }
}

impl std::fmt::Display for Order {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// A spectral parameter in the open upper half-plane, stored in polar form.
///
/// Polar storage keeps arguments of powers exact: lambda^(1/2n) is evaluated
/// as r^(1/2n) * exp(i*phi/2n) with no atan2 round trip. Construction
/// rejects the closed real axis (im <= 0), zero, and non-finite input, so a
/// value of this type is always a legal argument for branch-sensitive
/// evaluation.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct UpperHalfPoint {
    r: f64,
    phi: f64,
}

impl UpperHalfPoint {
    /// Point r * exp(i*phi). Requires r > 0 finite and 0 < phi < pi.
    pub fn from_polar(r: f64, phi: f64) -> Result<Self> {
        if !(r.is_finite() && r > 0.0) {
            return Err(Error::DegenerateModulus { r, phi });
        }
        if !(phi > 0.0 && phi < PI) {
            return Err(Error::NotUpperHalfPlane {
                re: r * phi.cos(),
                im: r * phi.sin(),
            });
        }
        Ok(UpperHalfPoint { r, phi })
    }

    /// Point re + i*im. Requires im > 0 and both parts finite.
    pub fn from_cartesian(re: f64, im: f64) -> Result<Self> {
        if !(re.is_finite() && im.is_finite() && im > 0.0) {
            return Err(Error::NotUpperHalfPlane { re, im });
        }
        let r = re.hypot(im);
        if !(r.is_finite() && r > 0.0) {
            return Err(Error::DegenerateModulus {
                r,
                phi: im.atan2(re),
            });
        }
        // im > 0 puts atan2 strictly inside (0, pi)
        Ok(UpperHalfPoint {
            r,
            phi: im.atan2(re),
        })
    }

    pub fn modulus(self) -> f64 {
        self.r
    }

    pub fn angle(self) -> f64 {
        self.phi
    }

    pub fn re(self) -> f64 {
        self.r * self.phi.cos()
    }

    pub fn im(self) -> f64 {
        self.r * self.phi.sin()
    }

    pub fn to_complex(self) -> Complex64 {
        Complex64::from_polar(self.r, self.phi)
    }

    /// Same angle, modulus multiplied by `factor` (> 0). Used by the
    /// scaling-covariance checks, where lambda -> s^2n * lambda.
    pub fn scale_modulus(self, factor: f64) -> Result<Self> {
        Self::from_polar(self.r * factor, self.phi)
    }
}

/// The branch-sensitive scalars attached to one (n, lambda) pair.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct BranchValues {
    /// (-lambda)^(1/2n) = r^(1/2n) * exp(i*(phi - pi)/2n), the branch with
    /// arg(-lambda) = phi - pi in (-pi, 0). Has positive real part.
    pub root_minus_lambda: Complex64,
    /// rho = i * lambda^(1/2n) = r^(1/2n) * exp(i*(pi*n + phi)/2n). The
    /// decaying fundamental solutions are exp(omega_k * rho * x), k < n.
    pub rho: Complex64,
    /// alpha = pi/2n, the angular spacing of the 2n-th roots of -1.
    pub alpha: f64,
    /// epsilon = exp(i*alpha), primitive rotation by alpha. Satisfies
    /// -epsilon^(n-1) * rho = root_minus_lambda.
    pub epsilon: Complex64,
}

/// alpha = pi / (2n).
pub fn sector_angle(n: Order) -> f64 {
    PI / (2.0 * n.get() as f64)
}

/// The cotangent products C_0..C_(n-1): C_0 = 1, C_k = prod_{p=1..k} cot(p*alpha).
///
/// All positive, since p*alpha < pi/2 for p <= n-1, and symmetric:
/// C_j = C_(n-1-j). They carry the entire n-dependence of the Weyl matrix
/// coefficients.
pub fn cotangent_products(n: Order) -> Vec<f64> {
    let alpha = sector_angle(n);
    let mut c = Vec::with_capacity(n.dim());
    let mut running = 1.0;
    c.push(running);
    for p in 1..n.get() {
        running /= (p as f64 * alpha).tan();
        c.push(running);
    }
    c
}

/// omega_k = exp(i*pi*k/n) for 0 <= k <= 2n-1.
///
/// The 2n-th roots of unity, ordered so that omega_k * rho for k in 0..n
/// exhausts the decaying exponents Re(omega_k * rho) < 0.
pub fn root_of_unity(n: Order, k: u32) -> Result<Complex64> {
    let max = 2 * n.get() - 1;
    if k > max {
        return Err(Error::RootIndexOutOfRange { k, max });
    }
    Ok(Complex64::cis(PI * k as f64 / n.get() as f64))
}

/// Evaluate every branch-sensitive scalar for (n, lambda) in one place.
pub fn branch_values(n: Order, lambda: UpperHalfPoint) -> BranchValues {
    let two_n = 2.0 * n.get() as f64;
    let root_modulus = lambda.modulus().powf(1.0 / two_n);
    let root_minus_lambda = Complex64::from_polar(root_modulus, (lambda.angle() - PI) / two_n);
    let rho = Complex64::from_polar(root_modulus, (PI * n.get() as f64 + lambda.angle()) / two_n);
    BranchValues {
        root_minus_lambda,
        rho,
        alpha: sector_angle(n),
        epsilon: Complex64::cis(sector_angle(n)),
    }
}
