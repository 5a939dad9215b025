//! Walk the Weyl matrices down to the real axis. On the positive half-axis
//! (inside the essential spectrum) the limits are genuinely complex and
//! their imaginary parts are the spectral densities; on the negative
//! half-axis both matrices are real. The Krein matrix has a pole at the
//! origin, which is its single negative-axis eigenvalue pushed to zero.

use halfline_weyl::{
    weyl_boundary, weyl_boundary_imag, weyl_closed_form, ExtensionKind, Order, UpperHalfPoint,
};

fn main() {
    let n = Order::new(2).unwrap();

    println!("n = 2, Friedrichs, boundary values M_F(x + i0):\n");
    println!("{:>8}  {:>24}  {:>24}", "x", "entry (0,0)", "entry (1,1)");
    for &x in &[-4.0, -1.0, -0.25, 0.25, 1.0, 4.0] {
        let m = weyl_boundary(n, ExtensionKind::Friedrichs, x).unwrap();
        println!(
            "{x:>8}  {:>+11.6} {:>+10.6}i  {:>+11.6} {:>+10.6}i",
            m[(0, 0)].re,
            m[(0, 0)].im,
            m[(1, 1)].re,
            m[(1, 1)].im
        );
    }
    println!("\nnegative axis entries are real: the spectrum lives on [0, inf)");

    // the boundary value really is the limit from above
    let x = 1.0;
    let exact = weyl_boundary(n, ExtensionKind::Friedrichs, x).unwrap();
    println!("\napproach to M_F({x} + i0) as the offset shrinks:");
    for &y in &[1e-2, 1e-4, 1e-6, 1e-8] {
        let lambda = UpperHalfPoint::from_cartesian(x, y).unwrap();
        let m = weyl_closed_form(n, ExtensionKind::Friedrichs, lambda);
        println!("  y = {y:<8.0e}  distance {:.3e}", m.max_abs_diff(&exact));
    }

    // Im M(x + i0) / pi is the density of the spectral function
    let imag = weyl_boundary_imag(n, ExtensionKind::Friedrichs, x).unwrap();
    println!("\nIm M_F({x} + i0), the unnormalized spectral density:");
    for j in 0..n.dim() {
        let row: Vec<String> = (0..n.dim())
            .map(|k| format!("{:+.6}", imag[(j, k)]))
            .collect();
        println!("  [ {} ]", row.join("  "));
    }

    match weyl_boundary(n, ExtensionKind::Krein, 0.0) {
        Err(e) => println!("\nKrein limit at the origin: {e}"),
        Ok(_) => unreachable!("the Krein matrix has a pole at zero"),
    }
    for &x in &[-1e-2, -1e-4] {
        let m = weyl_boundary(n, ExtensionKind::Krein, x).unwrap();
        println!("  M_K({x:>6})(1,1) = {:+.4e}  (blowing up)", m[(1, 1)].re);
    }
}
