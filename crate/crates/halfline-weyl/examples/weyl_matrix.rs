//! Evaluate the Weyl matrices of both extreme extensions at a point of the
//! upper half-plane and show the structure of their entries: every entry is
//! a constant times a pure power of lambda, and the two matrices are exact
//! negative inverses of each other.

use halfline_weyl::{weyl_closed_form, ComplexMatrix, ExtensionKind, Order, UpperHalfPoint};
use num_complex::Complex64;

fn print_matrix(label: &str, m: &ComplexMatrix) {
    println!("{label}");
    for j in 0..m.dim() {
        let row: Vec<String> = (0..m.dim())
            .map(|k| format!("{:+.6} {:+.6}i", m[(j, k)].re, m[(j, k)].im))
            .collect();
        println!("  [ {} ]", row.join("   "));
    }
}

fn main() {
    let n = Order::new(3).unwrap();
    let lambda = UpperHalfPoint::from_cartesian(1.0, 2.0).unwrap();
    println!(
        "order n = {}, lambda = {:.4} + {:.4}i  (|lambda| = {:.6}, arg = {:.6})\n",
        n.get(),
        lambda.re(),
        lambda.im(),
        lambda.modulus(),
        lambda.angle()
    );

    let mf = weyl_closed_form(n, ExtensionKind::Friedrichs, lambda);
    let mk = weyl_closed_form(n, ExtensionKind::Krein, lambda);
    print_matrix("M_F(lambda), Friedrichs:", &mf);
    println!();
    print_matrix("M_K(lambda), Krein:", &mk);

    // entry (j, k) scales like lambda^((j+k+1)/2n): divide it out and the
    // remainder is a lambda-independent constant
    println!("\nentry (j, k) over lambda^((j+k+1)/2n), Friedrichs:");
    let two_n = 2.0 * n.dim() as f64;
    for j in 0..n.dim() {
        let row: Vec<String> = (0..n.dim())
            .map(|k| {
                let e = (j + k + 1) as f64 / two_n;
                let power = Complex64::from_polar(lambda.modulus().powf(e), e * lambda.angle());
                let c = mf[(j, k)] / power;
                format!("{:+.6} {:+.6}i", c.re, c.im)
            })
            .collect();
        println!("  [ {} ]", row.join("   "));
    }

    let id = ComplexMatrix::identity(n.dim());
    let defect = mk.mul(&mf).add(&id).max_abs();
    println!("\n|| M_K M_F + I ||_max = {defect:.3e}  (the two are negative inverses)");

    // order one collapses to scalars: M_F = i sqrt(lambda), M_K = i / sqrt(lambda)
    let n1 = Order::new(1).unwrap();
    let at_i = UpperHalfPoint::from_cartesian(0.0, 1.0).unwrap();
    let f = weyl_closed_form(n1, ExtensionKind::Friedrichs, at_i)[(0, 0)];
    let k = weyl_closed_form(n1, ExtensionKind::Krein, at_i)[(0, 0)];
    println!("\nn = 1 at lambda = i:  M_F = {f}  M_K = {k}");
}
