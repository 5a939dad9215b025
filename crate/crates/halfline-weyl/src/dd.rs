//! Double-double scalars for the one verification whose terms cancel too
//! violently for plain f64: the alternating cotangent-product sums grow to
//! about 1e12 at order 16 while collapsing to 0 or 1, so the sines feeding
//! them must carry about thirty digits for the residual to mean anything.
//! A value is held as an unevaluated pair hi + lo with |lo| <= ulp(hi)/2.
//! Only what that check needs is implemented.

use std::f64::consts::{FRAC_PI_2, PI};

#[derive(Copy, Clone, Debug)]
pub(crate) struct Dd {
    hi: f64,
    lo: f64,
}

/// pi to roughly 32 decimal digits.
pub(crate) const DD_PI: Dd = Dd {
    hi: PI,
    lo: 1.2246467991473532e-16,
};

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

/// Requires |a| >= |b|.
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Dd {
    pub(crate) fn from_f64(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    pub(crate) fn value(self) -> f64 {
        self.hi + self.lo
    }

    pub(crate) fn neg(self) -> Self {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    pub(crate) fn add(self, other: Self) -> Self {
        let (s, e) = two_sum(self.hi, other.hi);
        let (t, f) = two_sum(self.lo, other.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s, e + f);
        Dd { hi, lo }
    }

    pub(crate) fn sub(self, other: Self) -> Self {
        self.add(other.neg())
    }

    pub(crate) fn mul(self, other: Self) -> Self {
        let (p, e) = two_prod(self.hi, other.hi);
        let e = e + (self.hi * other.lo + self.lo * other.hi);
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    pub(crate) fn mul_f64(self, x: f64) -> Self {
        let (p, e) = two_prod(self.hi, x);
        let (hi, lo) = quick_two_sum(p, e + self.lo * x);
        Dd { hi, lo }
    }

    /// Long division: one leading quotient digit, two refinements.
    pub(crate) fn div(self, other: Self) -> Self {
        let q1 = self.hi / other.hi;
        let r = self.sub(other.mul_f64(q1));
        let q2 = r.hi / other.hi;
        let r = r.sub(other.mul_f64(q2));
        let q3 = r.hi / other.hi;
        let (s, e) = quick_two_sum(q1, q2);
        let (hi, lo) = quick_two_sum(s, e + q3);
        Dd { hi, lo }
    }
}

/// sin(x) for 0 < x < pi, accurate to about 1e-31 relative.
///
/// Reduction uses sin(pi - x) = sin(x) so the Taylor argument stays at or
/// below pi/2, where twenty-odd terms reach the bottom of the pair.
pub(crate) fn sin_dd(x: Dd) -> Dd {
    let arg = if x.hi > FRAC_PI_2 { DD_PI.sub(x) } else { x };
    let xx = arg.mul(arg);
    let mut term = arg;
    let mut sum = arg;
    for k in 1..=24u32 {
        let divisor = (2 * k * (2 * k + 1)) as f64;
        term = term.mul(xx).div(Dd::from_f64(divisor)).neg();
        sum = sum.add(term);
        if term.hi.abs() < 1e-36 * sum.hi.abs() {
            break;
        }
    }
    sum
}
