//! Double-double arithmetic (~31 significant digits) for the Mittag-Leffler
//! cancellation band, plus a Gamma function built on it.
//!
//! The Gamma evaluation goes through a Stirling series after shifting the
//! argument above 25. Every step is cancellation-free, which matters here:
//! the band series divides terms of size e^30 down to results of size 1, so
//! per-term relative error must stay near the double-double roundoff floor.

/// Unevaluated sum hi + lo with |lo| <= ulp(hi)/2.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

/// Requires |a| >= |b|.
#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let e = b - (s - a);
    (s, e)
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let e = a.mul_add(b, -p);
    (p, e)
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    #[inline]
    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn add(self, o: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, o.hi);
        let (t1, t2) = two_sum(self.lo, o.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (hi, lo) = quick_two_sum(s1, s2 + t2);
        Dd { hi, lo }
    }

    #[inline]
    pub fn add_f64(self, o: f64) -> Dd {
        let (s, e) = two_sum(self.hi, o);
        let (hi, lo) = quick_two_sum(s, e + self.lo);
        Dd { hi, lo }
    }

    #[inline]
    pub fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }

    #[inline]
    pub fn sub(self, o: Dd) -> Dd {
        self.add(o.neg())
    }

    #[inline]
    pub fn mul(self, o: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, o.hi);
        let e = e + (self.hi * o.lo + self.lo * o.hi);
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    #[inline]
    pub fn mul_f64(self, o: f64) -> Dd {
        let (p, e) = two_prod(self.hi, o);
        let (hi, lo) = quick_two_sum(p, e + self.lo * o);
        Dd { hi, lo }
    }

    #[inline]
    pub fn div(self, o: Dd) -> Dd {
        let q1 = self.hi / o.hi;
        let r = self.sub(o.mul_f64(q1));
        let q2 = r.hi / o.hi;
        let r = r.sub(o.mul_f64(q2));
        let q3 = r.hi / o.hi;
        let (s, e) = two_sum(q1, q2);
        let (hi, lo) = quick_two_sum(s, e + q3);
        Dd { hi, lo }
    }

    #[inline]
    pub fn div_f64(self, o: f64) -> Dd {
        self.div(Dd::from_f64(o))
    }

    pub fn abs(self) -> Dd {
        if self.hi < 0.0 { self.neg() } else { self }
    }

    /// e^self. Finite double-double inputs only; overflow saturates to infinity.
    pub fn exp(self) -> Dd {
        if self.hi > 709.7 {
            return Dd::from_f64(f64::INFINITY);
        }
        if self.hi < -745.0 {
            return Dd::ZERO;
        }
        let k = (self.hi / LN2.hi).round();
        let r = self.sub(LN2.mul_f64(k));
        // |r| <= ln2/2 + slack; the Taylor tail clears 1e-35 within ~30 terms.
        let mut term = r;
        let mut sum = Dd::ONE.add(r);
        let mut n = 2.0;
        while term.hi.abs() > 1e-35 {
            term = term.mul(r).div_f64(n);
            sum = sum.add(term);
            n += 1.0;
        }
        let scale = 2.0_f64.powi(k as i32);
        Dd { hi: sum.hi * scale, lo: sum.lo * scale }
    }

    /// ln(self) for self > 0. One double-double Newton step from the f64 seed.
    pub fn ln(self) -> Dd {
        debug_assert!(self.hi > 0.0);
        let y0 = Dd::from_f64(self.hi.ln());
        let e = y0.neg().exp();
        y0.add(self.mul(e).add_f64(-1.0))
    }

    /// self^p for self > 0.
    pub fn pow(self, p: Dd) -> Dd {
        p.mul(self.ln()).exp()
    }
}

const LN2: Dd = Dd { hi: 0.6931471805599453, lo: 2.3190468138462996e-17 };
const HALF_LN_2PI: Dd = Dd { hi: 0.9189385332046728, lo: -3.8782941580672414e-17 };

/// B_{2n} / (2n (2n-1)) for n = 1..=14. With the argument shifted to 25 or
/// above, the omitted Stirling tail is below 2e-35.
const STIRLING_COEFFS: [Dd; 14] = [
    Dd { hi: 0.08333333333333333, lo: 4.625929269271485e-18 },
    Dd { hi: -0.002777777777777778, lo: 1.0601087908747154e-19 },
    Dd { hi: 0.0007936507936507937, lo: 6.883823317368282e-22 },
    Dd { hi: -0.0005952380952380953, lo: 5.36938218754726e-20 },
    Dd { hi: 0.0008417508417508417, lo: 3.6870174889237694e-20 },
    Dd { hi: -0.0019175269175269176, lo: 1.0675702776872475e-19 },
    Dd { hi: 0.00641025641025641, lo: 2.2240044563805217e-19 },
    Dd { hi: -0.029550653594771242, lo: 4.861760957508855e-19 },
    Dd { hi: 0.17964437236883057, lo: -6.401600482710946e-19 },
    Dd { hi: -1.3924322169059011, lo: 1.5837056989230303e-17 },
    Dd { hi: 13.402864044168393, lo: -6.154114101993966e-16 },
    Dd { hi: -156.84828462600203, lo: 9.391823141715389e-15 },
    Dd { hi: 2193.1033333333335, lo: -1.3339255626002948e-13 },
    Dd { hi: -36108.77125372499, lo: 5.897583353514365e-13 },
];

/// Gamma(x) for x > 0 in double-double precision.
pub fn gamma_dd(x: Dd) -> Dd {
    debug_assert!(x.hi > 0.0);
    // Shift into the Stirling range; the running product is cancellation-free.
    let mut shift = Dd::ONE;
    let mut xs = x;
    while xs.hi < 25.0 {
        shift = shift.mul(xs);
        xs = xs.add_f64(1.0);
    }
    let lx = xs.ln();
    let mut lg = xs.add_f64(-0.5).mul(lx).sub(xs).add(HALF_LN_2PI);
    let inv = Dd::ONE.div(xs);
    let inv2 = inv.mul(inv);
    let mut p = inv;
    for c in STIRLING_COEFFS {
        lg = lg.add(c.mul(p));
        p = p.mul(inv2);
    }
    lg.exp().div(shift)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel_err(a: Dd, want_hi: f64, want_lo: f64) -> f64 {
        let d = a.sub(Dd { hi: want_hi, lo: want_lo });
        (d.hi.abs() + d.lo.abs()) / want_hi.abs().max(1e-300)
    }

    #[test]
    fn two_prod_recovers_exact_error() {
        let (p, e) = two_prod(1.0 + 2f64.powi(-30), 1.0 + 2f64.powi(-30));
        assert_eq!(p + e, p); // e below ulp(p) after rounding
        assert_eq!(e, 2f64.powi(-60));
    }

    #[test]
    fn division_inverts_multiplication() {
        let third = Dd::ONE.div_f64(3.0);
        let back = third.mul_f64(3.0);
        assert!(rel_err(back, 1.0, 0.0) < 1e-31);
    }

    #[test]
    fn exp_of_one_matches_reference() {
        // e to double-double accuracy, words from a 60-digit computation
        let e = Dd::ONE.exp();
        assert!(rel_err(e, 2.718281828459045, 1.4456468917292502e-16) < 1e-30);
    }

    #[test]
    fn ln_exp_roundtrip() {
        for x in [0.3, 1.0, 2.5, 40.0, 300.0] {
            let d = Dd::from_f64(x);
            let r = d.ln().exp();
            assert!(rel_err(r, x, 0.0) < 1e-29, "x={x}");
        }
    }

    #[test]
    fn pow_matches_integer_powers() {
        let b = Dd::from_f64(1.5);
        let p = b.pow(Dd::from_f64(8.0));
        let want = 1.5f64.powi(8); // exact in binary
        assert!(rel_err(p, want, 0.0) < 1e-29);
    }

    #[test]
    fn gamma_dd_at_small_integers() {
        assert!(rel_err(gamma_dd(Dd::from_f64(1.0)), 1.0, 0.0) < 1e-28);
        assert!(rel_err(gamma_dd(Dd::from_f64(5.0)), 24.0, 0.0) < 1e-28);
        assert!(rel_err(gamma_dd(Dd::from_f64(30.0)), 8.841761993739702e30, 55923527647232.0) < 1e-28);
    }

    #[test]
    fn exp_extremes_saturate() {
        assert_eq!(Dd::from_f64(800.0).exp().hi, f64::INFINITY);
        assert_eq!(Dd::from_f64(-800.0).exp().hi, 0.0);
    }
}
