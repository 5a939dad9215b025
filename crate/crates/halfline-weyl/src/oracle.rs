//! Independent boundary-triplet route to the Weyl matrices.
//!
//! The deficiency subspace at lambda is spanned by exp(omega_k * rho * x),
//! k = 0..n-1 (the decaying exponents). Collecting the two boundary maps of
//! the triplet columnwise over that basis gives
//!
//!   N0(lambda)[j][k] = (rho omega_k)^(n-1-j)          (derivatives 0..n-1, reversed)
//!   N1(lambda)[j][k] = (-1)^j (rho omega_k)^(n+j)     (derivatives n..2n-1, alternating)
//!
//! and the Weyl matrices are the solve results M_F = N1 N0^-1 and
//! M_K = -N0 N1^-1. Nothing here shares a code path with the closed-form
//! module beyond the scalar branch data, which is the point: agreement of
//! the two routes is the strongest internal check this crate has.
//!
//! The solves use complex LU with partial pivoting; the PSD test for
//! Nevanlinna imaginary parts uses a cyclic Jacobi eigenvalue iteration on
//! the Hermitian part. Both are written out here: the matrices are at most
//! 64 x 64, and exact control over pivoting and convergence thresholds
//! matters more than BLAS speed.

use num_complex::Complex64;

use crate::branch::{branch_values, root_of_unity, Order, UpperHalfPoint};
use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;

/// Orders above this make the Vandermonde-type solve increasingly
/// ill-conditioned in double precision; results carry a warning flag.
pub const ORACLE_RELIABLE_MAX_ORDER: u32 = 8;

/// Pivot moduli below this are treated as exact singularity.
const SINGULAR_PIVOT: f64 = 1e-300;

/// Jacobi sweeps stop when the off-diagonal Frobenius mass falls below this
/// multiple of the full Frobenius norm.
const JACOBI_TOL: f64 = 1e-13;

const JACOBI_MAX_SWEEPS: usize = 100;

/// Boundary values of the deficiency basis: first map rows over columns k.
#[derive(Clone, Debug, PartialEq)]
pub struct FundamentalMatrices {
    /// Row j holds the derivative of order n-1-j at zero of each basis solution.
    pub n0: ComplexMatrix,
    /// Row j holds (-1)^j times the derivative of order n+j at zero.
    pub n1: ComplexMatrix,
}

/// Evaluate both boundary matrices of the deficiency basis at lambda.
pub fn fundamental_matrices(n: Order, lambda: UpperHalfPoint) -> FundamentalMatrices {
    let dim = n.dim();
    let rho = branch_values(n, lambda).rho;
    let mut n0 = ComplexMatrix::zeros(dim);
    let mut n1 = ComplexMatrix::zeros(dim);
    for k in 0..dim {
        let z = rho * root_of_unity(n, k as u32).expect("k < n <= 2n-1");
        // powers z^0..z^(2n-1), one multiplication each
        let mut pow = Vec::with_capacity(2 * dim);
        let mut p = Complex64::new(1.0, 0.0);
        for _ in 0..(2 * dim) {
            pow.push(p);
            p *= z;
        }
        for j in 0..dim {
            n0[(j, k)] = pow[dim - 1 - j];
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            n1[(j, k)] = pow[dim + j].scale(sign);
        }
    }
    FundamentalMatrices { n0, n1 }
}

/// Weyl matrix evaluated through the boundary-triplet solve.
#[derive(Clone, Debug, PartialEq)]
pub struct OracleEval {
    pub matrix: ComplexMatrix,
    /// True when n exceeds [`ORACLE_RELIABLE_MAX_ORDER`]; the value is still
    /// returned but double precision may not support 1e-9 agreement.
    pub conditioning_warning: bool,
}

/// Solve for the Weyl matrix from the fundamental matrices alone.
///
/// Friedrichs: M N0 = N1 solved as N0^T M^T = N1^T.
/// Krein: M N1 = -N0 solved as N1^T M^T = -N0^T.
/// No inverse is ever formed.
pub fn oracle_weyl(
    n: Order,
    kind: crate::weyl::ExtensionKind,
    lambda: UpperHalfPoint,
) -> Result<OracleEval> {
    let fm = fundamental_matrices(n, lambda);
    let matrix = match kind {
        crate::weyl::ExtensionKind::Friedrichs => {
            let x = lu_solve(&fm.n0.transpose(), &fm.n1.transpose())?;
            x.transpose()
        }
        crate::weyl::ExtensionKind::Krein => {
            let x = lu_solve(&fm.n1.transpose(), &fm.n0.transpose())?;
            x.transpose().scale(Complex64::new(-1.0, 0.0))
        }
    };
    Ok(OracleEval {
        matrix,
        conditioning_warning: n.get() > ORACLE_RELIABLE_MAX_ORDER,
    })
}

/// LU factorization with partial pivoting: P A = L U with unit-diagonal L.
#[derive(Clone, Debug)]
pub struct LuFactorization {
    /// Packed factors: strict lower triangle of L, full upper triangle of U.
    lu: ComplexMatrix,
    /// row_origin[i] = row of A sitting at position i of P A.
    row_origin: Vec<usize>,
    /// Determinant sign of P: +1 or -1.
    parity: f64,
}

impl LuFactorization {
    /// Factor a square matrix. Pivots are chosen by maximum modulus; a pivot
    /// below 1e-300 in modulus reports the elimination step that failed.
    pub fn factor(a: &ComplexMatrix) -> Result<Self> {
        let dim = a.dim();
        let mut lu = a.clone();
        let mut row_origin: Vec<usize> = (0..dim).collect();
        let mut parity = 1.0;
        for step in 0..dim {
            let mut best = step;
            let mut best_mag = lu[(step, step)].norm();
            for i in (step + 1)..dim {
                let mag = lu[(i, step)].norm();
                if mag > best_mag {
                    best = i;
                    best_mag = mag;
                }
            }
            if !(best_mag >= SINGULAR_PIVOT) {
                return Err(Error::SingularMatrix {
                    step,
                    pivot: best_mag,
                });
            }
            if best != step {
                for col in 0..dim {
                    let tmp = lu[(step, col)];
                    lu[(step, col)] = lu[(best, col)];
                    lu[(best, col)] = tmp;
                }
                row_origin.swap(step, best);
                parity = -parity;
            }
            let pivot = lu[(step, step)];
            for i in (step + 1)..dim {
                let factor = lu[(i, step)] / pivot;
                lu[(i, step)] = factor;
                for col in (step + 1)..dim {
                    let sub = factor * lu[(step, col)];
                    lu[(i, col)] -= sub;
                }
            }
        }
        Ok(LuFactorization {
            lu,
            row_origin,
            parity,
        })
    }

    pub fn dim(&self) -> usize {
        self.lu.dim()
    }

    /// Unit-diagonal lower factor.
    pub fn lower(&self) -> ComplexMatrix {
        ComplexMatrix::from_fn(self.dim(), |j, k| {
            use std::cmp::Ordering::*;
            match j.cmp(&k) {
                Greater => self.lu[(j, k)],
                Equal => Complex64::new(1.0, 0.0),
                Less => Complex64::new(0.0, 0.0),
            }
        })
    }

    /// Upper factor.
    pub fn upper(&self) -> ComplexMatrix {
        ComplexMatrix::from_fn(self.dim(), |j, k| {
            if j <= k {
                self.lu[(j, k)]
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
    }

    /// Row permutation: entry i gives the source row of A placed at row i of P A.
    pub fn row_origin(&self) -> &[usize] {
        &self.row_origin
    }

    /// det A = parity * prod U_kk.
    pub fn determinant(&self) -> Complex64 {
        let mut det = Complex64::new(self.parity, 0.0);
        for k in 0..self.dim() {
            det *= self.lu[(k, k)];
        }
        det
    }

    /// Solve A X = B for a full right-hand-side matrix.
    pub fn solve(&self, b: &ComplexMatrix) -> Result<ComplexMatrix> {
        let dim = self.dim();
        if b.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                actual: b.dim(),
            });
        }
        // permuted RHS, then L y = P b, then U x = y
        let mut x = ComplexMatrix::from_fn(dim, |i, col| b[(self.row_origin[i], col)]);
        for col in 0..dim {
            for i in 0..dim {
                let mut acc = x[(i, col)];
                for k in 0..i {
                    acc -= self.lu[(i, k)] * x[(k, col)];
                }
                x[(i, col)] = acc;
            }
            for i in (0..dim).rev() {
                let mut acc = x[(i, col)];
                for k in (i + 1)..dim {
                    acc -= self.lu[(i, k)] * x[(k, col)];
                }
                x[(i, col)] = acc / self.lu[(i, i)];
            }
        }
        Ok(x)
    }
}

/// Factor and solve A X = B in one call.
pub fn lu_solve(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    LuFactorization::factor(a)?.solve(b)
}

/// Vandermonde determinant prod_{j<k} (x_j - x_k), the empty product for a
/// single node.
pub fn vandermonde_det(nodes: &[Complex64]) -> Complex64 {
    let mut det = Complex64::new(1.0, 0.0);
    for j in 0..nodes.len() {
        for k in (j + 1)..nodes.len() {
            det *= nodes[j] - nodes[k];
        }
    }
    det
}

/// Smallest eigenvalue of the Hermitian part (h + h^H)/2 by cyclic Jacobi.
///
/// Off-diagonal mass shrinks quadratically once rotations get small; the
/// sweep limit of 100 is far beyond what n <= 64 needs. The input is
/// symmetrized first, so slightly non-Hermitian matrices (roundoff-level
/// asymmetry) are handled without drama.
pub fn hermitian_min_eig(h: &ComplexMatrix) -> Result<f64> {
    let dim = h.dim();
    if dim == 0 {
        return Ok(0.0);
    }
    // Hermitian part; diagonal forced real
    let mut a = ComplexMatrix::from_fn(dim, |j, k| {
        if j == k {
            Complex64::new(h[(j, k)].re, 0.0)
        } else {
            (h[(j, k)] + h[(k, j)].conj()).scale(0.5)
        }
    });
    let full_norm = a.frobenius();
    if full_norm == 0.0 {
        return Ok(0.0);
    }
    for _sweep in 0..JACOBI_MAX_SWEEPS {
        let mut off_sq = 0.0;
        for p in 0..dim {
            for q in (p + 1)..dim {
                off_sq += 2.0 * a[(p, q)].norm_sqr();
            }
        }
        if off_sq.sqrt() <= JACOBI_TOL * full_norm {
            let min = (0..dim).map(|j| a[(j, j)].re).fold(f64::INFINITY, f64::min);
            return Ok(min);
        }
        for p in 0..dim {
            for q in (p + 1)..dim {
                let beta = a[(p, q)];
                let absb = beta.norm();
                if absb == 0.0 {
                    continue;
                }
                let phase = beta / absb;
                let tau = (a[(q, q)].re - a[(p, p)].re) / (2.0 * absb);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                // right-multiply by the rotation
                for r in 0..dim {
                    let hp = a[(r, p)];
                    let hq = a[(r, q)];
                    a[(r, p)] = hp.scale(c) - (phase.conj() * hq).scale(s);
                    a[(r, q)] = (phase * hp).scale(s) + hq.scale(c);
                }
                // left-multiply by its conjugate transpose
                for r in 0..dim {
                    let hp = a[(p, r)];
                    let hq = a[(q, r)];
                    a[(p, r)] = hp.scale(c) - (phase * hq).scale(s);
                    a[(q, r)] = (phase.conj() * hp).scale(s) + hq.scale(c);
                }
                // the rotation annihilates this pair by construction
                a[(p, q)] = Complex64::new(0.0, 0.0);
                a[(q, p)] = Complex64::new(0.0, 0.0);
                a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
                a[(q, q)] = Complex64::new(a[(q, q)].re, 0.0);
            }
        }
    }
    Err(Error::JacobiNoConvergence {
        sweeps: JACOBI_MAX_SWEEPS,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::branch::{cotangent_products, sector_angle};
    use crate::weyl::{weyl_closed_form, ExtensionKind};
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
    fn fundamental_matrices_order_two_at_i() {
        let fm = fundamental_matrices(ord(2), lam(0.0, 1.0));
        // rho = exp(5 i pi / 8); entry (0,1) of the first map is rho * omega_1
        let expect = Complex64::from_polar(1.0, 5.0 * PI / 8.0) * Complex64::cis(PI / 2.0);
        assert!((fm.n0[(0, 1)] - expect).norm() < 1e-14);
        assert!((fm.n0[(1, 0)] - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        assert!((fm.n0[(1, 1)] - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        // second map row 1 carries -(z^3)
        let z = Complex64::from_polar(1.0, 5.0 * PI / 8.0);
        assert!((fm.n1[(1, 0)] + z.powu(3)).norm() < 1e-14);
    }

    #[test]
    fn oracle_agrees_with_closed_form_through_order_eight() {
        for n in 1..=8u32 {
            for kind in [ExtensionKind::Friedrichs, ExtensionKind::Krein] {
                for lambda in lambda_grid() {
                    let closed = weyl_closed_form(ord(n), kind, lambda);
                    let oracle = oracle_weyl(ord(n), kind, lambda).unwrap();
                    assert!(!oracle.conditioning_warning);
                    let mismatch = oracle.matrix.max_abs_diff(&closed);
                    let tol = 1e-9 * (1.0 + closed.max_abs());
                    assert!(
                        mismatch <= tol,
                        "n={n} {kind} lambda={lambda:?}: mismatch={mismatch:e}"
                    );
                }
            }
        }
    }

    #[test]
    fn conditioning_warning_kicks_in_above_order_eight() {
        let ok = oracle_weyl(ord(8), ExtensionKind::Friedrichs, lam(1.0, 1.0)).unwrap();
        assert!(!ok.conditioning_warning);
        let warned = oracle_weyl(ord(9), ExtensionKind::Friedrichs, lam(1.0, 1.0)).unwrap();
        assert!(warned.conditioning_warning);
    }

    #[test]
    fn lu_solves_identity_and_scalar() {
        let id = ComplexMatrix::identity(4);
        let b = ComplexMatrix::from_fn(4, |j, k| Complex64::new(j as f64, k as f64));
        assert_eq!(lu_solve(&id, &b).unwrap(), b);

        let a = ComplexMatrix::from_fn(1, |_, _| Complex64::new(2.0, 0.0));
        let rhs = ComplexMatrix::from_fn(1, |_, _| Complex64::new(6.0, 2.0));
        let x = lu_solve(&a, &rhs).unwrap();
        assert!((x[(0, 0)] - Complex64::new(3.0, 1.0)).norm() < 1e-15);
    }

    #[test]
    fn lu_rejects_singular_input() {
        let zeros = ComplexMatrix::zeros(3);
        match LuFactorization::factor(&zeros) {
            Err(Error::SingularMatrix { step, .. }) => assert_eq!(step, 0),
            other => panic!("expected singularity, got {other:?}"),
        }

        // rank-1 matrix with power-of-two row ratios: elimination is exact,
        // so the second pivot is a true zero
        let rank1 =
            ComplexMatrix::from_fn(3, |j, k| Complex64::new(((1 << j) * (k + 1)) as f64, 0.0));
        match LuFactorization::factor(&rank1) {
            Err(Error::SingularMatrix { step, .. }) => assert_eq!(step, 1),
            other => panic!("expected singularity, got {other:?}"),
        }
    }

    #[test]
    fn lu_reconstructs_its_input() {
        // deterministic full matrix with non-trivial pivoting
        let a = ComplexMatrix::from_fn(6, |j, k| {
            Complex64::new(
                ((j * 7 + k * 3 + 1) % 11) as f64 - 5.0,
                ((j * 5 + k * 2 + 3) % 7) as f64 - 3.0,
            )
        });
        let f = LuFactorization::factor(&a).unwrap();
        let pa = ComplexMatrix::from_fn(6, |i, k| a[(f.row_origin()[i], k)]);
        let lu = f.lower().mul(&f.upper());
        assert!(pa.max_abs_diff(&lu) <= 1e-12 * a.max_abs());
    }

    #[test]
    fn lu_solve_recovers_known_solution() {
        // diagonally dominant 6x6: condition stays low by Gershgorin
        let dim = 6;
        let a = ComplexMatrix::from_fn(dim, |j, k| {
            let base = Complex64::new(
                0.3 * (((j * 13 + k * 5) % 9) as f64 - 4.0) / 4.0,
                0.3 * (((j * 3 + k * 11) % 7) as f64 - 3.0) / 3.0,
            );
            if j == k {
                base + Complex64::new(dim as f64, 0.0)
            } else {
                base
            }
        });
        let x_known = ComplexMatrix::from_fn(dim, |j, k| {
            Complex64::new((j + k) as f64 / 3.0 - 1.0, (j as f64 - k as f64) / 2.0)
        });
        let b = a.mul(&x_known);
        let x = lu_solve(&a, &b).unwrap();
        assert!(x.max_abs_diff(&x_known) <= 1e-11 * x_known.max_abs());
    }

    #[test]
    fn vandermonde_small_cases() {
        assert_eq!(
            vandermonde_det(&[Complex64::new(5.0, 2.0)]),
            Complex64::new(1.0, 0.0)
        );
        let d = vandermonde_det(&[Complex64::new(1.0, 0.0), Complex64::new(0.0, 1.0)]);
        assert!((d - Complex64::new(1.0, -1.0)).norm() < 1e-15);
    }

    #[test]
    fn vandermonde_on_unit_circle_node_sets() {
        // the three roots used by the deficiency basis at n = 3
        let n = ord(3);
        let half: Vec<Complex64> = (0..3).map(|k| root_of_unity(n, k).unwrap()).collect();
        assert_abs_diff_eq!(vandermonde_det(&half).norm(), 3f64.sqrt(), epsilon = 1e-14);

        // all three cube roots of unity give the classic 3^(3/2)
        let full: Vec<Complex64> = (0..3)
            .map(|k| Complex64::cis(2.0 * PI * k as f64 / 3.0))
            .collect();
        assert_abs_diff_eq!(
            vandermonde_det(&full).norm(),
            3.0 * 3f64.sqrt(),
            epsilon = 1e-14
        );
    }

    #[test]
    fn first_map_determinant_factors_through_vandermonde() {
        // |det N0| = (r^(1/2n))^(n(n-1)/2) * |vandermonde(omega_0..omega_(n-1))|
        for n in 1..=8u32 {
            let n = ord(n);
            for lambda in lambda_grid() {
                let fm = fundamental_matrices(n, lambda);
                let det = LuFactorization::factor(&fm.n0).unwrap().determinant();
                let omegas: Vec<Complex64> =
                    (0..n.get()).map(|k| root_of_unity(n, k).unwrap()).collect();
                let rho_mod = lambda.modulus().powf(1.0 / (2.0 * n.get() as f64));
                let count = (n.dim() * (n.dim() - 1) / 2) as i32;
                let expect = rho_mod.powi(count) * vandermonde_det(&omegas).norm();
                let rel = (det.norm() - expect).abs() / expect;
                assert!(rel <= 1e-10, "n={n} lambda={lambda:?}: rel={rel:e}");
            }
        }
    }

    #[test]
    fn min_eig_of_diagonal_and_exchange() {
        let d = ComplexMatrix::from_fn(3, |j, k| {
            if j == k {
                Complex64::new([3.0, 1.0, 2.0][j], 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        });
        assert_abs_diff_eq!(hermitian_min_eig(&d).unwrap(), 1.0, epsilon = 1e-14);

        let x = ComplexMatrix::from_fn(2, |j, k| {
            if j != k {
                Complex64::new(1.0, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        });
        assert_abs_diff_eq!(hermitian_min_eig(&x).unwrap(), -1.0, epsilon = 1e-14);
    }

    #[test]
    fn min_eig_of_complex_hermitian_pair() {
        // [[2, i], [-i, 2]] has eigenvalues 1 and 3
        let a = ComplexMatrix::from_fn(2, |j, k| match (j, k) {
            (0, 1) => Complex64::new(0.0, 1.0),
            (1, 0) => Complex64::new(0.0, -1.0),
            _ => Complex64::new(2.0, 0.0),
        });
        assert_abs_diff_eq!(hermitian_min_eig(&a).unwrap(), 1.0, epsilon = 1e-13);
    }

    #[test]
    fn min_eig_handles_larger_known_spectrum() {
        // unitary-conjugated diagonal: D = diag(1..8) under a product of
        // complex plane rotations stays exactly solvable
        let dim = 8;
        let mut a = ComplexMatrix::zeros(dim);
        for j in 0..dim {
            a[(j, j)] = Complex64::new((j + 1) as f64, 0.0);
        }
        // apply a few fixed unitary similarity transformations G a G^H
        for &(p, q, angle, phase) in &[
            (0usize, 3usize, 0.7f64, 0.3f64),
            (1, 5, 1.1, -0.8),
            (2, 7, 0.4, 2.0),
            (4, 6, 1.4, -1.2),
            (0, 7, 0.9, 0.5),
        ] {
            let c = angle.cos();
            let s = angle.sin();
            let ph = Complex64::cis(phase);
            for r in 0..dim {
                let hp = a[(r, p)];
                let hq = a[(r, q)];
                a[(r, p)] = hp.scale(c) - (ph.conj() * hq).scale(s);
                a[(r, q)] = (ph * hp).scale(s) + hq.scale(c);
            }
            for r in 0..dim {
                let hp = a[(p, r)];
                let hq = a[(q, r)];
                a[(p, r)] = hp.scale(c) - (ph * hq).scale(s);
                a[(q, r)] = (ph.conj() * hp).scale(s) + hq.scale(c);
            }
        }
        assert_abs_diff_eq!(hermitian_min_eig(&a).unwrap(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn weyl_imag_part_is_positive_semidefinite() {
        let m = weyl_closed_form(ord(3), ExtensionKind::Friedrichs, lam(0.0, 1.0));
        let min = hermitian_min_eig(&m.imag_hermitian_part()).unwrap();
        assert!(min >= -1e-10 * m.max_abs());
    }

    #[test]
    fn closed_form_inverse_relation_against_oracle_route() {
        // M_K = -M_F^{-1} must hold between the two routes as well
        for n in 1..=6u32 {
            for lambda in lambda_grid() {
                let mf = oracle_weyl(ord(n), ExtensionKind::Friedrichs, lambda).unwrap();
                let mk = weyl_closed_form(ord(n), ExtensionKind::Krein, lambda);
                let prod = mk.mul(&mf.matrix);
                let dev = prod.add(&ComplexMatrix::identity(n as usize)).max_abs();
                let tol = 1e-9 * (1.0 + mf.matrix.max_abs() * mk.max_abs());
                assert!(dev <= tol, "n={n} lambda={lambda:?}: dev={dev:e}");
            }
        }
    }

    #[test]
    fn cotangent_structure_shows_up_in_oracle_matrix() {
        // spot check: oracle diagonal at lambda = i, n = 2, matches
        // -C_j^2/sin((2j+1) alpha) * w^(2j+1) computed scalar-wise
        let n = ord(2);
        let lambda = lam(0.0, 1.0);
        let w = branch_values(n, lambda).root_minus_lambda;
        let c = cotangent_products(n);
        let alpha = sector_angle(n);
        let m = oracle_weyl(n, ExtensionKind::Friedrichs, lambda)
            .unwrap()
            .matrix;
        for j in 0..2 {
            let p = (2 * j + 1) as f64;
            let expect = w.powf(p).scale(-c[j] * c[j] / (p * alpha).sin());
            assert!((m[(j, j)] - expect).norm() <= 1e-12 * expect.norm());
        }
    }
}
