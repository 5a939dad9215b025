//! Spectral functions and their recovery by Stieltjes inversion.
//!
//! Both extensions have absolutely continuous matrix spectral functions
//! supported on [0, inf) with power-law entries,
//!
//!   sigma_F(t)[j][k] = (2n/pi) C_j C_k / (2n+1+j+k) * t^((2n+1+j+k)/2n)
//!   sigma_K(t)[j][k] = (2n/pi) (-1)^(j+k) C_j C_k / (2n-1-j-k) * t^((2n-1-j-k)/2n)
//!
//! for t >= 0 and zero for t < 0. `stieltjes_invert` recovers the same
//! matrices from the Weyl function alone through
//!
//!   sigma(t) = lim_{y -> 0+} (1/pi) int_{-t}^{t} Im M(x + iy) dx
//!
//! (sigma vanishes on the negative axis, so widening the window to [-t, t]
//! changes nothing in the limit but kills the O(y^(1/2n)) edge error at
//! x = 0 that a [0, t] window would pick up; with the symmetric window the
//! finite-y error is O(y)). The default path takes the limit analytically:
//! on the positive axis Im M(x + i0) is an explicit power of x, and the
//! substitution x = u^(2n) turns every entry into a polynomial in u, which
//! Gauss-Legendre integrates exactly. The exponents are evaluated in u
//! rather than x so that no intermediate u^(2n) underflows for large n.

use crate::branch::{cotangent_products, Order, UpperHalfPoint};
use crate::error::{Error, Result};
use crate::matrix::SpectralMatrix;
use crate::quad::GaussLegendre;
use crate::weyl::{weyl_closed_form, ExtensionKind};
use std::f64::consts::PI;

/// Controls for the quadrature in [`stieltjes_invert`].
#[derive(Clone, Debug, PartialEq)]
pub struct QuadratureConfig {
    node_count: usize,
    finite_y: Option<f64>,
}

impl QuadratureConfig {
    /// Gauss-Legendre rule size. 64 nodes integrate the substituted
    /// integrand exactly for every order up to 32 and stay exact-for-purpose
    /// well beyond; fewer nodes are enough for small orders.
    pub fn new(node_count: usize) -> Result<Self> {
        if node_count < 2 {
            return Err(Error::TooFewNodes { nodes: node_count });
        }
        Ok(QuadratureConfig {
            node_count,
            finite_y: None,
        })
    }

    /// Switch to the finite-offset path: integrate Im M(x + iy) along the
    /// horizontal line at height y instead of taking the limit analytically.
    /// Slower and less accurate (error is O(y)); exists to demonstrate that
    /// the limit formula converges to the closed form.
    pub fn with_finite_y(mut self, y: f64) -> Result<Self> {
        if !(y > 0.0 && y.is_finite()) {
            return Err(Error::BadImaginaryOffset { y });
        }
        self.finite_y = Some(y);
        Ok(self)
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn finite_y(&self) -> Option<f64> {
        self.finite_y
    }
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            node_count: 64,
            finite_y: None,
        }
    }
}

/// Spectral function in closed form. Zero matrix for t <= 0.
pub fn sigma_closed_form(n: Order, kind: ExtensionKind, t: f64) -> SpectralMatrix {
    let dim = n.dim();
    if !(t > 0.0) {
        return SpectralMatrix::zeros(dim);
    }
    let c = cotangent_products(n);
    let two_n = 2.0 * n.get() as f64;
    let u = t.powf(1.0 / two_n);
    // u^1 .. u^(4n-1) covers both exponent families
    let max_pow = 4 * dim - 1;
    let mut upow = Vec::with_capacity(max_pow + 1);
    let mut p = 1.0;
    for _ in 0..=max_pow {
        upow.push(p);
        p *= u;
    }
    SpectralMatrix::from_fn(dim, |j, k| {
        let s = j + k;
        match kind {
            ExtensionKind::Friedrichs => {
                let e = 2 * dim + 1 + s;
                (two_n / PI) * c[j] * c[k] / e as f64 * upow[e]
            }
            ExtensionKind::Krein => {
                let e = 2 * dim - 1 - s;
                let sign = if s % 2 == 0 { 1.0 } else { -1.0 };
                sign * (two_n / PI) * c[j] * c[k] / e as f64 * upow[e]
            }
        }
    })
}

/// Increment sigma(t2) - sigma(t1). Increments over ordered intervals are
/// positive semidefinite; that is what makes sigma a spectral function.
pub fn sigma_increment(n: Order, kind: ExtensionKind, t1: f64, t2: f64) -> Result<SpectralMatrix> {
    if !(t1 <= t2) {
        return Err(Error::BackwardsInterval { t1, t2 });
    }
    Ok(sigma_closed_form(n, kind, t2).sub(&sigma_closed_form(n, kind, t1)))
}

/// Recover sigma(t) from the Weyl function by Stieltjes inversion.
///
/// Default path: analytic y -> 0 limit, substituted integrand, single
/// Gauss-Legendre rule on [0, t^(1/2n)]. With `finite_y` set: numerical
/// integration of Im M(x + iy) over [-t, t] on dyadic panels that refine
/// toward x = 0, where the integrand steepens on the scale of y.
pub fn stieltjes_invert(
    n: Order,
    kind: ExtensionKind,
    t: f64,
    cfg: &QuadratureConfig,
) -> SpectralMatrix {
    let dim = n.dim();
    if !(t > 0.0) {
        return SpectralMatrix::zeros(dim);
    }
    let rule = GaussLegendre::new(cfg.node_count()).expect("config enforces node count >= 2");
    match cfg.finite_y() {
        None => limit_path(n, kind, t, &rule),
        Some(y) => finite_y_path(n, kind, t, y, &rule),
    }
}

fn limit_path(n: Order, kind: ExtensionKind, t: f64, rule: &GaussLegendre) -> SpectralMatrix {
    let dim = n.dim();
    let c = cotangent_products(n);
    let two_n = 2.0 * dim as f64;
    let upper = t.powf(1.0 / two_n);
    // one accumulator per anti-diagonal s = j + k
    let mut sums = vec![0.0; 2 * dim - 1];
    rule.mapped(0.0, upper, |u, w| {
        // powers of u shared across anti-diagonals
        match kind {
            ExtensionKind::Friedrichs => {
                // integrand 2n u^(2n+s): start at u^2n
                let mut p = u.powi(2 * dim as i32);
                for sum in sums.iter_mut() {
                    *sum += w * two_n * p;
                    p *= u;
                }
            }
            ExtensionKind::Krein => {
                // integrand 2n (-1)^s u^(2n-2-s): start at u^(2n-2)
                let mut p = u.powi(2 * dim as i32 - 2);
                let mut sign = 1.0;
                for sum in sums.iter_mut() {
                    *sum += w * two_n * sign * p;
                    p /= u;
                    sign = -sign;
                }
            }
        }
    });
    SpectralMatrix::from_fn(dim, |j, k| c[j] * c[k] / PI * sums[j + k])
}

fn finite_y_path(
    n: Order,
    kind: ExtensionKind,
    t: f64,
    y: f64,
    rule: &GaussLegendre,
) -> SpectralMatrix {
    let dim = n.dim();
    // dyadic panels of [0, t], halving toward the origin until the panel
    // width drops under y; the stub [0, hi] is then resolved by y itself
    let mut panels: Vec<(f64, f64)> = Vec::new();
    let mut hi = t;
    while hi > y {
        panels.push((hi / 2.0, hi));
        hi /= 2.0;
    }
    panels.push((0.0, hi));
    let mut acc = SpectralMatrix::zeros(dim);
    for &(a, b) in &panels {
        // positive side and its mirror image
        for (lo, hi) in [(a, b), (-b, -a)] {
            rule.mapped(lo, hi, |x, w| {
                let lambda = UpperHalfPoint::from_cartesian(x, y)
                    .expect("y > 0 keeps the point in the upper half-plane");
                let m = weyl_closed_form(n, kind, lambda);
                for j in 0..dim {
                    for k in 0..dim {
                        acc[(j, k)] += w * m[(j, k)].im;
                    }
                }
            });
        }
    }
    SpectralMatrix::from_fn(dim, |j, k| acc[(j, k)] / PI)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn ord(n: u32) -> Order {
        Order::new(n).unwrap()
    }

    #[test]
    fn order_one_closed_forms() {
        // sigma_F(1) = 2/(3 pi), sigma_K(4) = 4/pi
        let f = sigma_closed_form(ord(1), ExtensionKind::Friedrichs, 1.0);
        assert_abs_diff_eq!(f[(0, 0)], 0.2122065907891938, epsilon = 1e-16);
        let k = sigma_closed_form(ord(1), ExtensionKind::Krein, 4.0);
        assert_abs_diff_eq!(k[(0, 0)], 4.0 / PI, epsilon = 1e-15);
    }

    #[test]
    fn order_two_closed_forms() {
        let f = sigma_closed_form(ord(2), ExtensionKind::Friedrichs, 1.0);
        let expect_f = [[4.0 / 5.0, 2.0 / 3.0], [2.0 / 3.0, 4.0 / 7.0]];
        for j in 0..2 {
            for k in 0..2 {
                assert_abs_diff_eq!(f[(j, k)], expect_f[j][k] / PI, epsilon = 1e-15);
            }
        }
        let kr = sigma_closed_form(ord(2), ExtensionKind::Krein, 1.0);
        let expect_k = [[1.0 / 3.0, -0.5], [-0.5, 1.0]];
        for j in 0..2 {
            for k in 0..2 {
                assert_abs_diff_eq!(kr[(j, k)], 4.0 * expect_k[j][k] / PI, epsilon = 1e-15);
            }
        }
    }

    #[test]
    fn vanishes_left_of_the_spectrum() {
        for kind in [ExtensionKind::Friedrichs, ExtensionKind::Krein] {
            for &t in &[-5.0, -1e-300, 0.0] {
                let m = sigma_closed_form(ord(3), kind, t);
                assert_eq!(m.max_abs(), 0.0);
                let q = stieltjes_invert(ord(3), kind, t, &QuadratureConfig::default());
                assert_eq!(q.max_abs(), 0.0);
            }
        }
    }

    #[test]
    fn entries_scale_as_pure_powers() {
        let scale = 16.0;
        for n in 1..=4u32 {
            let n = ord(n);
            let dim = n.dim();
            let two_n = 2.0 * dim as f64;
            for kind in [ExtensionKind::Friedrichs, ExtensionKind::Krein] {
                let base = sigma_closed_form(n, kind, 0.5);
                let scaled = sigma_closed_form(n, kind, 0.5 * scale);
                for j in 0..dim {
                    for k in 0..dim {
                        let q = match kind {
                            ExtensionKind::Friedrichs => (two_n + 1.0 + (j + k) as f64) / two_n,
                            ExtensionKind::Krein => (two_n - 1.0 - (j + k) as f64) / two_n,
                        };
                        let expect = base[(j, k)] * scale.powf(q);
                        let rel = (scaled[(j, k)] - expect).abs() / expect.abs();
                        assert!(rel <= 1e-13, "n={n} {kind} ({j},{k}): rel={rel:e}");
                    }
                }
            }
        }
    }

    #[test]
    fn inversion_reproduces_closed_form() {
        let cfg = QuadratureConfig::default();
        for n in 1..=4u32 {
            let n = ord(n);
            for kind in [ExtensionKind::Friedrichs, ExtensionKind::Krein] {
                for &t in &[0.1, 0.5, 1.0, 2.0, 10.0] {
                    let direct = sigma_closed_form(n, kind, t);
                    let inverted = stieltjes_invert(n, kind, t, &cfg);
                    let err = inverted.max_abs_diff(&direct) / (1.0 + direct.max_abs());
                    assert!(err <= 1e-8, "n={n} {kind} t={t}: err={err:e}");
                }
            }
        }
    }

    #[test]
    fn two_nodes_suffice_for_order_one() {
        // the substituted integrands have degree <= 2 at n = 1, within reach
        // of a 2-point rule
        let cfg = QuadratureConfig::new(2).unwrap();
        for kind in [ExtensionKind::Friedrichs, ExtensionKind::Krein] {
            let direct = sigma_closed_form(ord(1), kind, 3.0);
            let inverted = stieltjes_invert(ord(1), kind, 3.0, &cfg);
            assert!(inverted.max_abs_diff(&direct) <= 1e-14 * (1.0 + direct.max_abs()));
        }
    }

    #[test]
    fn finite_offset_converges_linearly() {
        for n in 1..=3u32 {
            let n = ord(n);
            for kind in [ExtensionKind::Friedrichs, ExtensionKind::Krein] {
                let direct = sigma_closed_form(n, kind, 1.0);
                let mut errs = Vec::new();
                for &y in &[1e-2, 1e-3, 1e-4] {
                    let cfg = QuadratureConfig::default().with_finite_y(y).unwrap();
                    let approx_sigma = stieltjes_invert(n, kind, 1.0, &cfg);
                    errs.push(approx_sigma.max_abs_diff(&direct) / direct.max_abs());
                }
                assert!(
                    errs[0] > errs[1] && errs[1] > errs[2],
                    "n={n} {kind}: errors {errs:?} not decreasing"
                );
                assert!(
                    errs[2] <= 1e-3,
                    "n={n} {kind}: err at y=1e-4 is {:e}",
                    errs[2]
                );
            }
        }
    }

    #[test]
    fn increments_are_positive_semidefinite() {
        use crate::oracle::hermitian_min_eig;
        for n in 1..=4u32 {
            for kind in [ExtensionKind::Friedrichs, ExtensionKind::Krein] {
                let inc = sigma_increment(ord(n), kind, 0.3, 1.7).unwrap();
                let min = hermitian_min_eig(&inc.to_complex()).unwrap();
                assert!(
                    min >= -1e-12 * inc.max_abs().max(f64::MIN_POSITIVE),
                    "n={n} {kind}: min eig {min:e}"
                );
            }
        }
    }

    #[test]
    fn backwards_intervals_are_rejected() {
        match sigma_increment(ord(2), ExtensionKind::Friedrichs, 2.0, 1.0) {
            Err(Error::BackwardsInterval { t1, t2 }) => {
                assert_eq!((t1, t2), (2.0, 1.0));
            }
            other => panic!("expected interval error, got {other:?}"),
        }
        assert!(sigma_increment(ord(2), ExtensionKind::Krein, 0.0, f64::NAN).is_err());
    }

    #[test]
    fn config_validation() {
        assert!(matches!(
            QuadratureConfig::new(1),
            Err(Error::TooFewNodes { nodes: 1 })
        ));
        assert!(QuadratureConfig::new(2).is_ok());
        assert!(QuadratureConfig::default().with_finite_y(0.0).is_err());
        assert!(QuadratureConfig::default().with_finite_y(f64::NAN).is_err());
        assert!(QuadratureConfig::default().with_finite_y(-1.0).is_err());
        let cfg = QuadratureConfig::default().with_finite_y(1e-3).unwrap();
        assert_eq!(cfg.finite_y(), Some(1e-3));
        assert_eq!(cfg.node_count(), 64);
    }
}
