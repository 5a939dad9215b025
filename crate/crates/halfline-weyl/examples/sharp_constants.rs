//! The sharp constants of the pointwise embedding inequalities
//! |y^(j)(0)|^2 <= A_(n,j)^2 (norm terms) for functions in the operator
//! domain. Print them per order, and confirm their squares sit on the
//! diagonals of both boundary Weyl matrices at lambda = -1.

use halfline_weyl::{sharp_constants, weyl_boundary, ExtensionKind, Order};

fn main() {
    println!("sharp constants A_(n,j) = C_j / sqrt(sin((2j+1) pi/2n)):\n");
    print!("{:>4}", "n");
    for j in 0..6 {
        print!("{:>14}", format!("j = {j}"));
    }
    println!();
    for nv in 1..=6u32 {
        let n = Order::new(nv).unwrap();
        print!("{nv:>4}");
        for a in sharp_constants(n) {
            print!("{a:>14.8}");
        }
        println!();
    }
    println!("\nsymmetric in j, growing with the order, and A_(1,0) = 1 is the");
    println!("classical constant of |y(0)|^2 <= ||y|| ||y'||");

    println!("\ntheir squares are diagonal boundary values at lambda = -1:");
    let mut worst = 0.0f64;
    for nv in 1..=6u32 {
        let n = Order::new(nv).unwrap();
        let mf = weyl_boundary(n, ExtensionKind::Friedrichs, -1.0).unwrap();
        let mk = weyl_boundary(n, ExtensionKind::Krein, -1.0).unwrap();
        for (j, a) in sharp_constants(n).iter().enumerate() {
            let a2 = a * a;
            worst = worst
                .max((mk[(j, j)].re - a2).abs() / a2)
                .max((-mf[(j, j)].re - a2).abs() / a2);
        }
    }
    println!("  A^2 = [M_K(-1)]_jj = -[M_F(-1)]_jj, worst relative gap {worst:.3e}");
}
