//! Recover the spectral function from the Weyl function by Stieltjes
//! inversion and compare against the closed form. The default path takes
//! the boundary limit analytically and integrates a substituted integrand
//! that Gauss-Legendre resolves essentially exactly; the finite-offset path
//! integrates Im M(x + iy) at small y > 0 and converges linearly in y.

use halfline_weyl::{sigma_closed_form, stieltjes_invert, ExtensionKind, Order, QuadratureConfig};

fn main() {
    let cfg = QuadratureConfig::default();
    println!(
        "limit path, {} Gauss-Legendre nodes, residual against the closed form:\n",
        cfg.node_count()
    );
    println!(
        "{:>4} {:>12} {:>14} {:>14}",
        "n", "t", "Friedrichs", "Krein"
    );
    for nv in [1u32, 2, 3, 4] {
        let n = Order::new(nv).unwrap();
        for &t in &[0.5, 2.0, 10.0] {
            let rf = stieltjes_invert(n, ExtensionKind::Friedrichs, t, &cfg)
                .max_abs_diff(&sigma_closed_form(n, ExtensionKind::Friedrichs, t));
            let rk = stieltjes_invert(n, ExtensionKind::Krein, t, &cfg)
                .max_abs_diff(&sigma_closed_form(n, ExtensionKind::Krein, t));
            println!("{nv:>4} {t:>12} {rf:>14.3e} {rk:>14.3e}");
        }
    }

    println!("\nfinite-offset path at n = 2, t = 1, error shrinking with y:");
    let n = Order::new(2).unwrap();
    let t = 1.0;
    let exact = sigma_closed_form(n, ExtensionKind::Friedrichs, t);
    let mut previous = f64::INFINITY;
    for &y in &[1e-1, 1e-2, 1e-3, 1e-4] {
        let cfg = QuadratureConfig::default().with_finite_y(y).unwrap();
        let err = stieltjes_invert(n, ExtensionKind::Friedrichs, t, &cfg).max_abs_diff(&exact);
        let ratio = if previous.is_finite() {
            format!("  x{:.1}", previous / err)
        } else {
            String::new()
        };
        println!("  y = {y:<8.0e}  error {err:.6e}{ratio}");
        previous = err;
    }
    println!("roughly one decade per decade: the window [-t, t] cancels the");
    println!("fractional-power edge effects, leaving an O(y) tail correction");
}
