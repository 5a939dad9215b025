//! Run the whole check registry: every mathematical relation the crate
//! stands on, swept over deterministic grids, each reporting its worst
//! residual and where it happened. Then rerun with seeded random points
//! mixed in to show the deterministic grids are not hiding anything.

use halfline_weyl::{run_all, run_all_fuzzed, VerificationReport};

fn print_reports(reports: &[VerificationReport]) {
    println!(
        "{:<28} {:>6} {:>14} {:>10} {:>13} {:>7}",
        "check", "pass", "worst", "tol", "normalization", "points"
    );
    for r in reports {
        println!(
            "{:<28} {:>6} {:>14.3e} {:>10.0e} {:>13} {:>7}",
            r.check,
            if r.passed { "ok" } else { "FAIL" },
            r.worst_residual,
            r.tolerance,
            r.normalization,
            r.evaluations
        );
        if let Some(w) = &r.witness {
            let mut at = format!("n = {}", w.n);
            if let Some(e) = &w.extension {
                at += &format!(", {e}");
            }
            if let Some((re, im)) = w.lambda {
                at += &format!(", lambda = {re} + {im}i");
            }
            if let Some(t) = w.t {
                at += &format!(", t = {t}");
            }
            if let Some((j, k)) = w.entry {
                at += &format!(", entry ({j}, {k})");
            }
            println!("{:<28} worst at {at}", "");
        }
    }
}

fn main() {
    println!("deterministic grids, orders up to 6:\n");
    let reports = run_all(6).unwrap();
    print_reports(&reports);
    let all = reports.iter().all(|r| r.passed);
    println!("\noverall: {}", if all { "all passed" } else { "FAILURES" });

    println!("\nsame checks with seeded random spectral and threshold points appended (seed 7):\n");
    let fuzzed = run_all_fuzzed(6, 7).unwrap();
    print_reports(&fuzzed);
}
