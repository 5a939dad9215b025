//! Closed-form Weyl matrices of the two distinguished extensions.
//!
//! For the minimal operator (-1)^n d^2n/dx^2n on (0, inf) the Friedrichs
//! extension pins y(0) = ... = y^(n-1)(0) = 0 and the Krein extension pins
//! y^(n)(0) = ... = y^(2n-1)(0) = 0. Their Weyl matrices have entries
//!
//!   Friedrichs: -C_j C_k / sin((j+k+1) alpha) * w^(j+k+1),      w = (-lambda)^(1/2n)
//!   Krein:      -C_j C_k / sin((j+k+1) alpha) * (-1/w)^(j+k+1)
//!
//! evaluated here together with their boundary limits on the real axis, the
//! imaginary parts of those limits (the spectral densities), and the
//! diagonal values at lambda = -1 that give the sharp constants of the
//! related Markov-type inequalities.

use num_complex::Complex64;

use crate::branch::{branch_values, cotangent_products, sector_angle, Order, UpperHalfPoint};
use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix, SpectralMatrix};

/// Which self-adjoint extension a Weyl or spectral matrix belongs to.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExtensionKind {
    Friedrichs,
    Krein,
}

impl ExtensionKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ExtensionKind::Friedrichs => "friedrichs",
            ExtensionKind::Krein => "krein",
        }
    }
}

impl std::fmt::Display for ExtensionKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for ExtensionKind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "friedrichs" => Ok(ExtensionKind::Friedrichs),
            "krein" => Ok(ExtensionKind::Krein),
            other => Err(format!("unknown extension kind: {other}")),
        }
    }
}

/// Shared anti-diagonal factors -base^(s+1)/sin((s+1) alpha), s = 0..2n-2.
///
/// Every Weyl-matrix variant is C_j * C_k times one of these with s = j + k.
/// Powers advance by one complex multiplication per anti-diagonal, so all
/// entries on an anti-diagonal share one bit-identical factor.
fn antidiagonal_factors(dim: usize, base: Complex64, alpha: f64) -> Vec<Complex64> {
    let mut factors = Vec::with_capacity(2 * dim - 1);
    let mut pow = Complex64::new(1.0, 0.0);
    for s in 0..(2 * dim - 1) {
        pow *= base;
        factors.push(-pow / ((s + 1) as f64 * alpha).sin());
    }
    factors
}

fn assemble(dim: usize, c: &[f64], factors: &[Complex64]) -> ComplexMatrix {
    ComplexMatrix::from_fn(dim, |j, k| factors[j + k].scale(c[j] * c[k]))
}

/// Weyl matrix M(lambda) of the chosen extension, evaluated in closed form
/// for lambda in the open upper half-plane.
///
/// The result is complex-symmetric bit-exactly, Hankel up to the C_j * C_k
/// coefficient pattern, and has positive-semidefinite imaginary part
/// (Nevanlinna property).
pub fn weyl_closed_form(n: Order, kind: ExtensionKind, lambda: UpperHalfPoint) -> ComplexMatrix {
    let b = branch_values(n, lambda);
    let base = match kind {
        ExtensionKind::Friedrichs => b.root_minus_lambda,
        ExtensionKind::Krein => -b.root_minus_lambda.inv(),
    };
    let c = cotangent_products(n);
    assemble(n.dim(), &c, &antidiagonal_factors(n.dim(), base, b.alpha))
}

/// Boundary value M(x + i0) on the real axis, in exact piecewise form.
///
/// For x < 0 both extensions give real symmetric matrices (the resolvent set
/// of the Friedrichs extension; the Krein matrix is real there too). For
/// x > 0 the entries acquire the fixed phases exp(-i(j+k+1) alpha)
/// (Friedrichs) and exp(+i(j+k+1) alpha) (Krein). At x = 0 the Friedrichs
/// limit is the zero matrix; the Krein limit diverges and is rejected.
pub fn weyl_boundary(n: Order, kind: ExtensionKind, x: f64) -> Result<ComplexMatrix> {
    let dim = n.dim();
    let alpha = sector_angle(n);
    let c = cotangent_products(n);
    let two_n = 2.0 * n.get() as f64;
    let u = x.abs().powf(1.0 / two_n);
    let base = match kind {
        ExtensionKind::Friedrichs => {
            if x == 0.0 {
                return Ok(ComplexMatrix::zeros(dim));
            }
            if x > 0.0 {
                Complex64::from_polar(u, -alpha)
            } else {
                Complex64::new(u, 0.0)
            }
        }
        ExtensionKind::Krein => {
            if x == 0.0 {
                return Err(Error::KreinBoundaryPole);
            }
            // (-1/w)^(s+1) with |w| -> u and phase -> -alpha (x > 0) or 0 (x < 0)
            if x > 0.0 {
                -Complex64::from_polar(1.0 / u, alpha)
            } else {
                Complex64::new(-1.0 / u, 0.0)
            }
        }
    };
    Ok(assemble(dim, &c, &antidiagonal_factors(dim, base, alpha)))
}

/// Im M(x + i0): the density matrix of the spectral function.
///
/// Friedrichs: C_j C_k x^((j+k+1)/2n) for x >= 0, zero for x < 0.
/// Krein: (-1)^(j+k) C_j C_k x^(-(j+k+1)/2n) for x > 0, zero for x < 0,
/// pole at x = 0.
pub fn weyl_boundary_imag(n: Order, kind: ExtensionKind, x: f64) -> Result<SpectralMatrix> {
    let dim = n.dim();
    let c = cotangent_products(n);
    let two_n = 2.0 * n.get() as f64;
    match kind {
        ExtensionKind::Friedrichs => {
            if x < 0.0 {
                return Ok(SpectralMatrix::zeros(dim));
            }
            let u = x.powf(1.0 / two_n);
            let pw = power_ladder(dim, u);
            Ok(SpectralMatrix::from_fn(dim, |j, k| c[j] * c[k] * pw[j + k]))
        }
        ExtensionKind::Krein => {
            if x < 0.0 {
                return Ok(SpectralMatrix::zeros(dim));
            }
            if x == 0.0 {
                return Err(Error::KreinBoundaryPole);
            }
            let u = x.powf(1.0 / two_n);
            let pw = power_ladder(dim, 1.0 / u);
            Ok(SpectralMatrix::from_fn(dim, |j, k| {
                let sign = if (j + k) % 2 == 0 { 1.0 } else { -1.0 };
                sign * c[j] * c[k] * pw[j + k]
            }))
        }
    }
}

/// u^(s+1) for s = 0..2*dim-2, by repeated multiplication.
fn power_ladder(dim: usize, u: f64) -> Vec<f64> {
    let mut pw = Vec::with_capacity(2 * dim - 1);
    let mut p = 1.0;
    for _ in 0..(2 * dim - 1) {
        p *= u;
        pw.push(p);
    }
    pw
}

/// Sharp constants A_(n,j) = sqrt(C_j^2 / sin((2j+1) alpha)), j = 0..n-1.
///
/// A_(n,j)^2 is the (j, j) entry of the Krein boundary matrix at x = -1 and
/// the negative of the Friedrichs one; A_(1,0) = 1.
pub fn sharp_constants(n: Order) -> Vec<f64> {
    let alpha = sector_angle(n);
    cotangent_products(n)
        .iter()
        .enumerate()
        .map(|(j, &cj)| cj / ((2 * j + 1) as f64 * alpha).sin().sqrt())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::branch::MAX_ORDER;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    fn ord(n: u32) -> Order {
        Order::new(n).unwrap()
    }

    fn lam(re: f64, im: f64) -> UpperHalfPoint {
        UpperHalfPoint::from_cartesian(re, im).unwrap()
    }

    fn lambda_grid() -> Vec<UpperHalfPoint> {
        let mut pts = Vec::new();
        for &r in &[0.25, 1.0, 4.0] {
            for &phi in &[PI / 6.0, PI / 2.0, 0.75 * PI, 0.9 * PI] {
                pts.push(UpperHalfPoint::from_polar(r, phi).unwrap());
            }
        }
        pts
    }

    #[test]
    fn order_one_at_i() {
        let m = weyl_closed_form(ord(1), ExtensionKind::Friedrichs, lam(0.0, 1.0));
        // i * sqrt(i) = exp(3 i pi / 4)
        assert_abs_diff_eq!(m[(0, 0)].re, -(0.5f64.sqrt()), epsilon = 1e-15);
        assert_abs_diff_eq!(m[(0, 0)].im, 0.5f64.sqrt(), epsilon = 1e-15);

        let mk = weyl_closed_form(ord(1), ExtensionKind::Krein, lam(0.0, 1.0));
        assert_abs_diff_eq!(mk[(0, 0)].re, 0.5f64.sqrt(), epsilon = 1e-15);
        assert_abs_diff_eq!(mk[(0, 0)].im, 0.5f64.sqrt(), epsilon = 1e-15);
    }

    #[test]
    fn order_two_leading_entry_at_i() {
        let m = weyl_closed_form(ord(2), ExtensionKind::Friedrichs, lam(0.0, 1.0));
        // (i - 1) * i^(1/4)
        assert_abs_diff_eq!(m[(0, 0)].re, -1.3065629648763766, epsilon = 1e-14);
        assert_abs_diff_eq!(m[(0, 0)].im, 0.5411961001461969, epsilon = 1e-14);
    }

    #[test]
    fn complex_symmetry_is_bit_exact() {
        for &n in &[1u32, 2, 3, 5, 8, 17] {
            for lambda in lambda_grid() {
                for kind in [ExtensionKind::Friedrichs, ExtensionKind::Krein] {
                    let m = weyl_closed_form(ord(n), kind, lambda);
                    for j in 0..m.dim() {
                        for k in 0..m.dim() {
                            assert!(
                                m[(j, k)] == m[(k, j)],
                                "symmetry must hold bit-for-bit (n={n}, j={j}, k={k})"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn anti_diagonals_share_one_factor() {
        // entry(j,k) = C_j C_k * g(j+k): cross-multiplying removes the
        // coefficients, so entries on an anti-diagonal agree after swapping
        // coefficient pairs, up to a couple of roundings.
        for &n in &[2u32, 3, 4, 8] {
            let c = cotangent_products(ord(n));
            for lambda in lambda_grid() {
                for kind in [ExtensionKind::Friedrichs, ExtensionKind::Krein] {
                    let m = weyl_closed_form(ord(n), kind, lambda);
                    let dim = m.dim();
                    for s in 0..(2 * dim - 1) {
                        let j0 = s.saturating_sub(dim - 1);
                        let base = (j0, s - j0);
                        for j in j0..=(s.min(dim - 1)) {
                            let k = s - j;
                            let lhs = m[(j, k)].scale(c[base.0] * c[base.1]);
                            let rhs = m[base].scale(c[j] * c[k]);
                            let tol = 1e-14 * lhs.norm().max(rhs.norm());
                            assert!(
                                (lhs - rhs).norm() <= tol,
                                "anti-diagonal factor mismatch at n={n}, s={s}, j={j}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn entries_match_direct_formula() {
        // independent entrywise evaluation through polar powers
        for &n in &[1u32, 2, 3, 6, 11] {
            let n = ord(n);
            let alpha = sector_angle(n);
            let c = cotangent_products(n);
            for lambda in lambda_grid() {
                let w = branch_values(n, lambda).root_minus_lambda;
                let (wr, wphi) = (w.norm(), w.arg());
                let mf = weyl_closed_form(n, ExtensionKind::Friedrichs, lambda);
                let mk = weyl_closed_form(n, ExtensionKind::Krein, lambda);
                for j in 0..n.dim() {
                    for k in 0..n.dim() {
                        let p = (j + k + 1) as f64;
                        let sin = (p * alpha).sin();
                        let ef = Complex64::from_polar(wr.powf(p), p * wphi);
                        let expect_f = ef.scale(-c[j] * c[k] / sin);
                        let diff = (mf[(j, k)] - expect_f).norm();
                        assert!(diff <= 1e-13 * expect_f.norm(), "F n={n} j={j} k={k}");

                        let ek = Complex64::from_polar(wr.powf(-p), PI * p - p * wphi);
                        let expect_k = ek.scale(-c[j] * c[k] / sin);
                        let diff = (mk[(j, k)] - expect_k).norm();
                        assert!(diff <= 1e-13 * expect_k.norm(), "K n={n} j={j} k={k}");
                    }
                }
            }
        }
    }

    #[test]
    fn boundary_order_one_fixed_points() {
        let f = weyl_boundary(ord(1), ExtensionKind::Friedrichs, -1.0).unwrap();
        assert_abs_diff_eq!(f[(0, 0)].re, -1.0, epsilon = 1e-15);
        assert_eq!(f[(0, 0)].im, 0.0);

        let k = weyl_boundary(ord(1), ExtensionKind::Krein, -1.0).unwrap();
        assert_abs_diff_eq!(k[(0, 0)].re, 1.0, epsilon = 1e-15);
        assert_eq!(k[(0, 0)].im, 0.0);
    }

    #[test]
    fn boundary_order_two_positive_axis() {
        let m = weyl_boundary(ord(2), ExtensionKind::Friedrichs, 1.0).unwrap();
        // -sqrt(2) * exp(-i pi/4) = -1 + i
        assert_abs_diff_eq!(m[(0, 0)].re, -1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(m[(0, 0)].im, 1.0, epsilon = 1e-14);
    }

    #[test]
    fn boundary_at_zero() {
        let f = weyl_boundary(ord(3), ExtensionKind::Friedrichs, 0.0).unwrap();
        assert_eq!(f, ComplexMatrix::zeros(3));
        assert_eq!(
            weyl_boundary(ord(3), ExtensionKind::Krein, 0.0),
            Err(Error::KreinBoundaryPole)
        );
        assert_eq!(
            weyl_boundary_imag(ord(2), ExtensionKind::Krein, 0.0),
            Err(Error::KreinBoundaryPole)
        );
    }

    #[test]
    fn boundary_negative_axis_is_real_symmetric() {
        for &n in &[1u32, 2, 4, 7] {
            for kind in [ExtensionKind::Friedrichs, ExtensionKind::Krein] {
                let m = weyl_boundary(ord(n), kind, -1.7).unwrap();
                for j in 0..m.dim() {
                    for k in 0..m.dim() {
                        assert_eq!(m[(j, k)].im, 0.0, "n={n} {kind} j={j} k={k}");
                        assert!(m[(j, k)] == m[(k, j)]);
                    }
                }
            }
        }
    }

    #[test]
    fn imag_boundary_fixed_points() {
        let f = weyl_boundary_imag(ord(1), ExtensionKind::Friedrichs, 4.0).unwrap();
        assert_abs_diff_eq!(f[(0, 0)], 2.0, epsilon = 1e-15);

        let zero = weyl_boundary_imag(ord(1), ExtensionKind::Friedrichs, -3.0).unwrap();
        assert_eq!(zero[(0, 0)], 0.0);

        let k = weyl_boundary_imag(ord(2), ExtensionKind::Krein, 1.0).unwrap();
        for j in 0..2 {
            for kk in 0..2 {
                let expect = if (j + kk) % 2 == 0 { 1.0 } else { -1.0 };
                assert_abs_diff_eq!(k[(j, kk)], expect, epsilon = 1e-14);
            }
        }

        let kz = weyl_boundary_imag(ord(2), ExtensionKind::Krein, -0.5).unwrap();
        assert_eq!(kz, SpectralMatrix::zeros(2));
    }

    #[test]
    fn imag_boundary_matches_boundary_imag_part() {
        for &n in &[1u32, 2, 3, 5] {
            for kind in [ExtensionKind::Friedrichs, ExtensionKind::Krein] {
                for &x in &[0.3, 1.0, 2.5, 10.0, -0.4, -2.0] {
                    let full = weyl_boundary(ord(n), kind, x).unwrap();
                    let im = weyl_boundary_imag(ord(n), kind, x).unwrap();
                    for j in 0..im.dim() {
                        for k in 0..im.dim() {
                            let tol = 1e-13 * (1.0 + full[(j, k)].norm());
                            assert!(
                                (full[(j, k)].im - im[(j, k)]).abs() <= tol,
                                "n={n} {kind} x={x} j={j} k={k}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn boundary_is_the_limit_from_above() {
        // M(x + i 1e-8) within 1e-6 relative of M(x + i0) away from x = 0
        let y = 1e-8;
        for &n in &[1u32, 2, 3, 4] {
            for kind in [ExtensionKind::Friedrichs, ExtensionKind::Krein] {
                for &x in &[0.5, 1.0, 2.0, -0.5, -1.0, -2.0] {
                    let bnd = weyl_boundary(ord(n), kind, x).unwrap();
                    let near = weyl_closed_form(ord(n), kind, lam(x, y));
                    let rel = near.max_abs_diff(&bnd) / bnd.max_abs();
                    assert!(rel <= 1e-6, "n={n} {kind} x={x}: rel={rel:e}");
                }
            }
        }
    }

    #[test]
    fn sharp_constants_small_orders() {
        let a1 = sharp_constants(ord(1));
        assert_eq!(a1, vec![1.0]);

        let a2 = sharp_constants(ord(2));
        let expect = 2f64.powf(0.25);
        assert_abs_diff_eq!(a2[0], expect, epsilon = 1e-14);
        assert_abs_diff_eq!(a2[1], expect, epsilon = 1e-14);
    }

    #[test]
    fn sharp_constants_match_both_boundary_diagonals() {
        for n in 1..=16u32 {
            let n = ord(n);
            let a = sharp_constants(n);
            let mk = weyl_boundary(n, ExtensionKind::Krein, -1.0).unwrap();
            let mf = weyl_boundary(n, ExtensionKind::Friedrichs, -1.0).unwrap();
            for j in 0..n.dim() {
                let a2 = a[j] * a[j];
                let rk = (mk[(j, j)].re - a2).abs() / a2;
                let rf = (-mf[(j, j)].re - a2).abs() / a2;
                assert!(rk <= 1e-12, "Krein diagonal n={n} j={j}: rel={rk:e}");
                assert!(rf <= 1e-12, "Friedrichs diagonal n={n} j={j}: rel={rf:e}");
            }
        }
    }

    #[test]
    fn scaling_covariance() {
        // M(s^2n lambda) = D M(lambda) D with D = diag(s^(j+1/2)) for the
        // Friedrichs matrix and D = diag(s^-(j+1/2)) for the Krein one.
        for n in 1..=6u32 {
            let n = ord(n);
            let two_n = 2 * n.get();
            for kind in [ExtensionKind::Friedrichs, ExtensionKind::Krein] {
                for &s in &[0.5f64, 2.0, 10.0] {
                    for lambda in lambda_grid() {
                        let scaled = lambda.scale_modulus(s.powi(two_n as i32)).unwrap();
                        let lhs = weyl_closed_form(n, kind, scaled);
                        let m = weyl_closed_form(n, kind, lambda);
                        let d: Vec<f64> = (0..n.dim())
                            .map(|j| {
                                let e = j as f64 + 0.5;
                                match kind {
                                    ExtensionKind::Friedrichs => s.powf(e),
                                    ExtensionKind::Krein => s.powf(-e),
                                }
                            })
                            .collect();
                        let rhs =
                            ComplexMatrix::from_fn(n.dim(), |j, k| m[(j, k)].scale(d[j] * d[k]));
                        let rel = lhs.max_abs_diff(&rhs) / lhs.max_abs();
                        assert!(rel <= 1e-12, "n={n} {kind} s={s}: rel={rel:e}");
                    }
                }
            }
        }
    }

    #[test]
    fn largest_order_stays_finite() {
        let m = weyl_closed_form(ord(MAX_ORDER), ExtensionKind::Friedrichs, lam(1.0, 1.0));
        assert!(m.is_finite());
        let k = weyl_closed_form(ord(MAX_ORDER), ExtensionKind::Krein, lam(1.0, 1.0));
        assert!(k.is_finite());
    }
}
