//! Named self-checks over deterministic grids.
//!
//! Every mathematical relation the crate relies on is packaged as a named
//! check that sweeps a fixed grid, tracks the worst residual it saw and
//! where, and reports pass or fail against a stated tolerance. The default
//! grids are deterministic, so two runs produce byte-identical reports; the
//! fuzzed variant extends the grids with seeded random points and reports
//! under a `[fuzz]` suffix so the deterministic results stay recognizable.
//!
//! Residual normalizations, named in each report:
//!   "absolute"  raw |error|
//!   "relative"  |error| / |expected|
//!   "mixed"     ||error||_max / (1 + scale of the operands)

use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::branch::{cotangent_products, sector_angle, Order, UpperHalfPoint};
use crate::dd::{sin_dd, Dd, DD_PI};
use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::oracle::{hermitian_min_eig, oracle_weyl};
use crate::spectral::{sigma_closed_form, stieltjes_invert, QuadratureConfig};
use crate::weyl::{sharp_constants, weyl_boundary, weyl_closed_form, ExtensionKind};

use num_complex::Complex64;

/// Location of the worst residual of a check. Fields that do not apply to a
/// given check are omitted from serialized output.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct Witness {
    pub n: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub extension: Option<String>,
    /// Cartesian (re, im) of the spectral parameter.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<(f64, f64)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub entry: Option<(usize, usize)>,
}

impl Witness {
    fn order(n: u32) -> Self {
        Witness {
            n,
            extension: None,
            lambda: None,
            t: None,
            entry: None,
        }
    }

    fn with_entry(mut self, j: usize, k: usize) -> Self {
        self.entry = Some((j, k));
        self
    }

    fn with_lambda(mut self, lambda: UpperHalfPoint) -> Self {
        self.lambda = Some((lambda.re(), lambda.im()));
        self
    }

    fn with_t(mut self, t: f64) -> Self {
        self.t = Some(t);
        self
    }

    fn with_extension(mut self, kind: ExtensionKind) -> Self {
        self.extension = Some(kind.to_string());
        self
    }
}

/// Outcome of one named check.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct VerificationReport {
    pub check: String,
    pub passed: bool,
    pub worst_residual: f64,
    pub tolerance: f64,
    pub normalization: String,
    /// Number of scalar or matrix comparisons folded into the residual.
    pub evaluations: u64,
    pub witness: Option<Witness>,
}

/// Running maximum with provenance.
struct Tally {
    worst: f64,
    witness: Option<Witness>,
    evaluations: u64,
}

impl Tally {
    fn new() -> Self {
        Tally {
            worst: f64::NEG_INFINITY,
            witness: None,
            evaluations: 0,
        }
    }

    fn record(&mut self, residual: f64, witness: Witness) {
        self.evaluations += 1;
        // NaN counts as a new worst so it can never hide behind a finite value
        if self.witness.is_none() || !(residual <= self.worst) {
            self.worst = residual;
            self.witness = Some(witness);
        }
    }

    fn report(self, check: &str, tolerance: f64, normalization: &str) -> VerificationReport {
        let worst = if self.evaluations == 0 {
            0.0
        } else {
            self.worst
        };
        VerificationReport {
            check: check.to_owned(),
            passed: worst <= tolerance,
            worst_residual: worst,
            tolerance,
            normalization: normalization.to_owned(),
            evaluations: self.evaluations,
            witness: self.witness,
        }
    }
}

/// All check names, in execution order of [`run_all`].
pub const CHECK_NAMES: [&str; 7] = [
    "constants_and_trig",
    "curious_identity",
    "golden_examples",
    "inverse_relation",
    "nevanlinna",
    "oracle_agreement",
    "stieltjes_roundtrip",
];

/// Twelve-point spectral grid: three moduli crossed with four angles.
pub fn default_lambda_grid() -> Vec<UpperHalfPoint> {
    let mut grid = Vec::with_capacity(12);
    for &r in &[0.25, 1.0, 4.0] {
        for &phi in &[PI / 6.0, PI / 2.0, 0.75 * PI, 0.9 * PI] {
            grid.push(UpperHalfPoint::from_polar(r, phi).expect("grid points are valid"));
        }
    }
    grid
}

pub fn default_t_grid() -> Vec<f64> {
    vec![0.1, 0.5, 1.0, 2.0, 10.0]
}

/// Seeded random spectral points: log-uniform modulus in [0.1, 10], angle
/// bounded away from the cut.
pub fn fuzz_lambda_grid(seed: u64, count: usize) -> Vec<UpperHalfPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let r = 10f64.powf(rng.gen_range(-1.0..1.0));
            let phi = rng.gen_range(0.05 * PI..0.95 * PI);
            UpperHalfPoint::from_polar(r, phi).expect("sampled in the open upper half-plane")
        })
        .collect()
}

/// Seeded random thresholds, log-uniform in about [0.05, 20].
pub fn fuzz_t_grid(seed: u64, count: usize) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| 10f64.powf(rng.gen_range(-1.3..1.3)))
        .collect()
}

/// Cotangent-product symmetry, the closed trigonometric product value, and
/// the sharp-constant diagonals of both Weyl matrices at the point -1.
pub fn check_constants_and_trig(n_max: u32, tol_scale: f64) -> VerificationReport {
    let mut tally = Tally::new();
    for nv in 1..=n_max {
        let n = Order::new(nv).expect("caller validated the range");
        let dim = n.dim();
        let c = cotangent_products(n);
        let alpha = sector_angle(n);

        // palindromic product list, last entry 1
        for j in 0..dim {
            let rel = (c[j] - c[dim - 1 - j]).abs() / c[j].abs();
            tally.record(rel, Witness::order(nv).with_entry(j, dim - 1 - j));
        }
        let rel = (c[dim - 1] - 1.0).abs();
        tally.record(rel, Witness::order(nv).with_entry(dim - 1, dim - 1));

        // prod cos(p alpha) over p <= j times prod sin(p alpha) over
        // p <= n-1-j is independent of j and equals sqrt(n) / 2^(n-1)
        let expect = (nv as f64).sqrt() / 2f64.powi(nv as i32 - 1);
        for j in 0..dim {
            let mut prod = 1.0;
            for p in 1..=j {
                prod *= (p as f64 * alpha).cos();
            }
            for p in 1..=(dim - 1 - j) {
                prod *= (p as f64 * alpha).sin();
            }
            let rel = (prod - expect).abs() / expect;
            tally.record(rel, Witness::order(nv).with_entry(j, j));
        }

        // squared sharp constants sit on the boundary-value diagonals
        let a = sharp_constants(n);
        let mk = weyl_boundary(n, ExtensionKind::Krein, -1.0).expect("x = -1 is regular");
        let mf = weyl_boundary(n, ExtensionKind::Friedrichs, -1.0).expect("x = -1 is regular");
        for j in 0..dim {
            let sq = a[j] * a[j];
            let rel_k = (mk[(j, j)].re - sq).abs() / sq;
            tally.record(
                rel_k,
                Witness::order(nv)
                    .with_extension(ExtensionKind::Krein)
                    .with_entry(j, j),
            );
            let rel_f = (mf[(j, j)].re + sq).abs() / sq;
            tally.record(
                rel_f,
                Witness::order(nv)
                    .with_extension(ExtensionKind::Friedrichs)
                    .with_entry(j, j),
            );
        }
    }
    tally.report("constants_and_trig", 1e-12 * tol_scale, "relative")
}

/// The alternating double-product sum collapses to the identity matrix:
/// sum_p (-1)^(p+k) C_j C_p^2 C_k / (sin((j+p+1)a) sin((p+k+1)a)) = delta_jk.
///
/// Individual terms reach about 1e12 at order 16 before cancelling to 0 or 1,
/// so the sines and cotangent products are built in double-double arithmetic;
/// ordinary f64 inputs would leave a residual near 1e-4 regardless of how the
/// summation is ordered. cos(q a) = sin((n-q) a) keeps sines the only
/// transcendental needed.
pub fn check_curious_identity(n_max: u32, tol_scale: f64) -> VerificationReport {
    let mut tally = Tally::new();
    for nv in 1..=n_max {
        let n = Order::new(nv).expect("caller validated the range");
        let dim = n.dim();
        let alpha = DD_PI.div(Dd::from_f64(2.0 * f64::from(nv)));
        let mut s = vec![Dd::from_f64(0.0); 2 * dim];
        for (m, slot) in s.iter_mut().enumerate().skip(1) {
            *slot = sin_dd(alpha.mul_f64(m as f64));
        }
        let mut c = vec![Dd::from_f64(1.0); dim];
        for p in 1..dim {
            c[p] = c[p - 1].mul(s[dim - p]).div(s[p]);
        }
        for j in 0..dim {
            for k in 0..dim {
                let mut sum = Dd::from_f64(0.0);
                for p in 0..dim {
                    let num = c[j].mul(c[p]).mul(c[p]).mul(c[k]);
                    let term = num.div(s[j + p + 1].mul(s[p + k + 1]));
                    sum = if (p + k) % 2 == 0 {
                        sum.add(term)
                    } else {
                        sum.sub(term)
                    };
                }
                if j == k {
                    sum = sum.sub(Dd::from_f64(1.0));
                }
                tally.record(sum.value().abs(), Witness::order(nv).with_entry(j, k));
            }
        }
    }
    tally.report("curious_identity", 1e-10 * tol_scale, "absolute")
}

struct GoldenWeyl {
    n: u32,
    kind: ExtensionKind,
    /// Entry (j, k) of the matrix is coeff[j][k] * lambda^(exponent(j + k)).
    coeff: Vec<Vec<Complex64>>,
}

struct GoldenSigma {
    n: u32,
    kind: ExtensionKind,
    coeff: Vec<Vec<f64>>,
}

fn golden_weyl_tables() -> Vec<GoldenWeyl> {
    let i = Complex64::new(0.0, 1.0);
    let one = Complex64::new(1.0, 0.0);
    let r3 = 3f64.sqrt();
    vec![
        GoldenWeyl {
            n: 1,
            kind: ExtensionKind::Friedrichs,
            coeff: vec![vec![i]],
        },
        GoldenWeyl {
            n: 1,
            kind: ExtensionKind::Krein,
            coeff: vec![vec![i]],
        },
        GoldenWeyl {
            n: 2,
            kind: ExtensionKind::Friedrichs,
            coeff: vec![vec![i - one, i], vec![i, i + one]],
        },
        GoldenWeyl {
            n: 3,
            kind: ExtensionKind::Friedrichs,
            coeff: vec![
                vec![i - one.scale(r3), -one + i.scale(r3), i],
                vec![-one + i.scale(r3), i.scale(3.0), one + i.scale(r3)],
                vec![i, one + i.scale(r3), i + one.scale(r3)],
            ],
        },
    ]
}

fn golden_sigma_tables() -> Vec<GoldenSigma> {
    let r3 = 3f64.sqrt();
    vec![
        GoldenSigma {
            n: 1,
            kind: ExtensionKind::Friedrichs,
            coeff: vec![vec![2.0 / 3.0]],
        },
        GoldenSigma {
            n: 1,
            kind: ExtensionKind::Krein,
            coeff: vec![vec![2.0]],
        },
        GoldenSigma {
            n: 2,
            kind: ExtensionKind::Friedrichs,
            coeff: vec![vec![4.0 / 5.0, 2.0 / 3.0], vec![2.0 / 3.0, 4.0 / 7.0]],
        },
        GoldenSigma {
            n: 2,
            kind: ExtensionKind::Krein,
            coeff: vec![vec![4.0 / 3.0, -2.0], vec![-2.0, 4.0]],
        },
        GoldenSigma {
            n: 3,
            kind: ExtensionKind::Friedrichs,
            coeff: vec![
                vec![6.0 / 7.0, 3.0 * r3 / 4.0, 2.0 / 3.0],
                vec![3.0 * r3 / 4.0, 2.0, 3.0 * r3 / 5.0],
                vec![2.0 / 3.0, 3.0 * r3 / 5.0, 6.0 / 11.0],
            ],
        },
    ]
}

/// Low orders written out entry by entry and compared against the general
/// formulas, for the Weyl matrices and the spectral functions.
pub fn check_golden_examples(n_max: u32, tol_scale: f64) -> VerificationReport {
    let mut tally = Tally::new();
    let lambdas = [
        UpperHalfPoint::from_cartesian(0.0, 1.0).expect("i is interior"),
        UpperHalfPoint::from_cartesian(1.0, 1.0).expect("1 + i is interior"),
    ];
    for table in golden_weyl_tables() {
        if table.n > n_max {
            continue;
        }
        let n = Order::new(table.n).expect("golden tables stay in range");
        let dim = n.dim();
        let two_n = 2.0 * dim as f64;
        for &lambda in &lambdas {
            let m = weyl_closed_form(n, table.kind, lambda);
            for j in 0..dim {
                for k in 0..dim {
                    let e = match table.kind {
                        ExtensionKind::Friedrichs => (j + k + 1) as f64 / two_n,
                        ExtensionKind::Krein => -((j + k + 1) as f64) / two_n,
                    };
                    let power = Complex64::from_polar(lambda.modulus().powf(e), e * lambda.angle());
                    let expect = table.coeff[j][k] * power;
                    let rel = (m[(j, k)] - expect).norm() / expect.norm();
                    tally.record(
                        rel,
                        Witness::order(table.n)
                            .with_extension(table.kind)
                            .with_lambda(lambda)
                            .with_entry(j, k),
                    );
                }
            }
        }
    }
    for table in golden_sigma_tables() {
        if table.n > n_max {
            continue;
        }
        let n = Order::new(table.n).expect("golden tables stay in range");
        let dim = n.dim();
        let two_n = 2.0 * dim as f64;
        for &t in &[1.0, 2.0] {
            let sigma = sigma_closed_form(n, table.kind, t);
            for j in 0..dim {
                for k in 0..dim {
                    let e = match table.kind {
                        ExtensionKind::Friedrichs => (two_n + 1.0 + (j + k) as f64) / two_n,
                        ExtensionKind::Krein => (two_n - 1.0 - (j + k) as f64) / two_n,
                    };
                    let expect = table.coeff[j][k] / PI * t.powf(e);
                    let rel = (sigma[(j, k)] - expect).abs() / expect.abs();
                    tally.record(
                        rel,
                        Witness::order(table.n)
                            .with_extension(table.kind)
                            .with_t(t)
                            .with_entry(j, k),
                    );
                }
            }
        }
    }
    tally.report("golden_examples", 1e-12 * tol_scale, "relative")
}

/// The two closed forms are negative inverses of each other.
pub fn check_inverse_relation(
    n_max: u32,
    lambdas: &[UpperHalfPoint],
    tol_scale: f64,
) -> VerificationReport {
    let mut tally = Tally::new();
    for nv in 1..=n_max {
        let n = Order::new(nv).expect("caller validated the range");
        for &lambda in lambdas {
            let mf = weyl_closed_form(n, ExtensionKind::Friedrichs, lambda);
            let mk = weyl_closed_form(n, ExtensionKind::Krein, lambda);
            let product = mk.mul(&mf);
            let deviation = product.add(&ComplexMatrix::identity(n.dim())).max_abs();
            let residual = deviation / (1.0 + mf.max_abs() * mk.max_abs());
            tally.record(residual, Witness::order(nv).with_lambda(lambda));
        }
    }
    tally.report("inverse_relation", 1e-9 * tol_scale, "mixed")
}

/// Herglotz property: the Hermitian imaginary part of each Weyl matrix is
/// positive semidefinite across the upper half-plane.
pub fn check_nevanlinna(
    n_max: u32,
    lambdas: &[UpperHalfPoint],
    tol_scale: f64,
) -> VerificationReport {
    let mut tally = Tally::new();
    for nv in 1..=n_max {
        let n = Order::new(nv).expect("caller validated the range");
        for kind in [ExtensionKind::Friedrichs, ExtensionKind::Krein] {
            for &lambda in lambdas {
                let m = weyl_closed_form(n, kind, lambda);
                let residual = match hermitian_min_eig(&m.imag_hermitian_part()) {
                    Ok(min) => (-min).max(0.0) / m.max_abs().max(f64::MIN_POSITIVE),
                    Err(_) => f64::INFINITY,
                };
                tally.record(
                    residual,
                    Witness::order(nv).with_extension(kind).with_lambda(lambda),
                );
            }
        }
    }
    tally.report("nevanlinna", 1e-10 * tol_scale, "relative")
}

/// Closed forms against the boundary-triplet solve.
pub fn check_oracle_agreement(
    n_max: u32,
    lambdas: &[UpperHalfPoint],
    tol_scale: f64,
) -> VerificationReport {
    let mut tally = Tally::new();
    for nv in 1..=n_max {
        let n = Order::new(nv).expect("caller validated the range");
        for kind in [ExtensionKind::Friedrichs, ExtensionKind::Krein] {
            for &lambda in lambdas {
                let closed = weyl_closed_form(n, kind, lambda);
                let residual = match oracle_weyl(n, kind, lambda) {
                    Ok(eval) => eval.matrix.max_abs_diff(&closed) / (1.0 + closed.max_abs()),
                    Err(_) => f64::INFINITY,
                };
                tally.record(
                    residual,
                    Witness::order(nv).with_extension(kind).with_lambda(lambda),
                );
            }
        }
    }
    tally.report("oracle_agreement", 1e-9 * tol_scale, "mixed")
}

/// Stieltjes inversion of the Weyl function lands back on the closed-form
/// spectral function.
pub fn check_stieltjes_roundtrip(n_max: u32, ts: &[f64], tol_scale: f64) -> VerificationReport {
    let cfg = QuadratureConfig::default();
    let mut tally = Tally::new();
    for nv in 1..=n_max {
        let n = Order::new(nv).expect("caller validated the range");
        for kind in [ExtensionKind::Friedrichs, ExtensionKind::Krein] {
            for &t in ts {
                let direct = sigma_closed_form(n, kind, t);
                let inverted = stieltjes_invert(n, kind, t, &cfg);
                let residual = inverted.max_abs_diff(&direct) / (1.0 + direct.max_abs());
                tally.record(residual, Witness::order(nv).with_extension(kind).with_t(t));
            }
        }
    }
    tally.report("stieltjes_roundtrip", 1e-8 * tol_scale, "mixed")
}

fn dispatch(
    name: &str,
    n_max: u32,
    lambdas: &[UpperHalfPoint],
    ts: &[f64],
    tol_scale: f64,
    suffix: &str,
) -> Result<VerificationReport> {
    let mut report = match name {
        "constants_and_trig" => check_constants_and_trig(n_max, tol_scale),
        "curious_identity" => check_curious_identity(n_max, tol_scale),
        "golden_examples" => check_golden_examples(n_max.min(3), tol_scale),
        "inverse_relation" => check_inverse_relation(n_max, lambdas, tol_scale),
        "nevanlinna" => check_nevanlinna(n_max, lambdas, tol_scale),
        "oracle_agreement" => check_oracle_agreement(n_max.min(8), lambdas, tol_scale),
        "stieltjes_roundtrip" => check_stieltjes_roundtrip(n_max.min(4), ts, tol_scale),
        other => {
            return Err(Error::UnknownCheck {
                name: other.to_owned(),
            })
        }
    };
    report.check.push_str(suffix);
    Ok(report)
}

/// Run the named checks over the default grids. Order caps that keep the
/// slower routes honest (oracle 8, inversion 4, golden tables 3) are applied
/// per check; `n_max` itself must be a valid order.
pub fn run_selected(names: &[&str], n_max: u32, tol_scale: f64) -> Result<Vec<VerificationReport>> {
    Order::new(n_max)?;
    let lambdas = default_lambda_grid();
    let ts = default_t_grid();
    names
        .iter()
        .map(|name| dispatch(name, n_max, &lambdas, &ts, tol_scale, ""))
        .collect()
}

/// One report per check name, in [`CHECK_NAMES`] order.
pub fn run_all(n_max: u32) -> Result<Vec<VerificationReport>> {
    run_selected(&CHECK_NAMES, n_max, 1.0)
}

/// Single check over the default grids.
pub fn run_check(name: &str, n_max: u32, tol_scale: f64) -> Result<VerificationReport> {
    Order::new(n_max)?;
    let lambdas = default_lambda_grid();
    let ts = default_t_grid();
    dispatch(name, n_max, &lambdas, &ts, tol_scale, "")
}

/// Every check again, over the default grids extended with seeded random
/// points. Reports carry a `[fuzz]` suffix.
pub fn run_all_fuzzed(n_max: u32, seed: u64) -> Result<Vec<VerificationReport>> {
    Order::new(n_max)?;
    let mut lambdas = default_lambda_grid();
    lambdas.extend(fuzz_lambda_grid(seed, 8));
    let mut ts = default_t_grid();
    ts.extend(fuzz_t_grid(seed.wrapping_add(1), 5));
    CHECK_NAMES
        .iter()
        .map(|name| dispatch(name, n_max, &lambdas, &ts, 1.0, "[fuzz]"))
        .collect()
}
