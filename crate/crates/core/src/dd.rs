//! Minimal double-double arithmetic for the reference quadrature.
//!
//! A value is an unevaluated sum hi + lo with |lo| <= ulp(hi)/2, giving
//! roughly 32 significant decimal digits. Only the operations the
//! quadrature needs are implemented. Error-free transforms follow the
//! usual Dekker/Knuth constructions and avoid FMA so the code runs at
//! full speed on targets compiled without it.

#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub(crate) struct Dd {
    pub hi: f64,
    pub lo: f64,
}

const SPLITTER: f64 = 134_217_729.0; // 2^27 + 1

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let err = b - (s - a);
    (s, err)
}

#[inline]
fn split(a: f64) -> (f64, f64) {
    let t = SPLITTER * a;
    let hi = t - (t - a);
    (hi, a - hi)
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let (ah, al) = split(a);
    let (bh, bl) = split(b);
    let err = ((ah * bh - p) + ah * bl + al * bh) + al * bl;
    (p, err)
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    #[inline]
    pub const fn new(hi: f64, lo: f64) -> Dd {
        Dd { hi, lo }
    }

    #[inline]
    pub fn from_f64(v: f64) -> Dd {
        Dd { hi: v, lo: 0.0 }
    }

    #[inline]
    pub fn from_prod(a: f64, b: f64) -> Dd {
        let (p, e) = two_prod(a, b);
        Dd { hi: p, lo: e }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    #[cfg_attr(not(test), allow(dead_code))]
    pub fn abs(self) -> Dd {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            self.neg()
        } else {
            self
        }
    }

    #[inline]
    pub fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    #[inline]
    pub fn add(self, o: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, o.hi);
        let (t1, t2) = two_sum(self.lo, o.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (s1, s2) = quick_two_sum(s1, s2 + t2);
        Dd { hi: s1, lo: s2 }
    }

    #[inline]
    pub fn sub(self, o: Dd) -> Dd {
        self.add(o.neg())
    }

    #[inline]
    pub fn add_f64(self, b: f64) -> Dd {
        let (s1, s2) = two_sum(self.hi, b);
        let (s1, s2) = quick_two_sum(s1, s2 + self.lo);
        Dd { hi: s1, lo: s2 }
    }

    #[inline]
    pub fn sub_f64(self, b: f64) -> Dd {
        self.add_f64(-b)
    }

    #[inline]
    pub fn mul(self, o: Dd) -> Dd {
        let (p1, p2) = two_prod(self.hi, o.hi);
        let p2 = p2 + self.hi * o.lo + self.lo * o.hi;
        let (s1, s2) = quick_two_sum(p1, p2);
        Dd { hi: s1, lo: s2 }
    }

    #[inline]
    pub fn mul_f64(self, b: f64) -> Dd {
        let (p1, p2) = two_prod(self.hi, b);
        let (s1, s2) = quick_two_sum(p1, p2 + self.lo * b);
        Dd { hi: s1, lo: s2 }
    }

    #[inline]
    pub fn sqr(self) -> Dd {
        let (p1, p2) = two_prod(self.hi, self.hi);
        let p2 = p2 + 2.0 * self.hi * self.lo;
        let (s1, s2) = quick_two_sum(p1, p2);
        Dd { hi: s1, lo: s2 }
    }

    pub fn div(self, o: Dd) -> Dd {
        let q1 = self.hi / o.hi;
        let mut r = self.sub(o.mul_f64(q1));
        let q2 = r.hi / o.hi;
        r = r.sub(o.mul_f64(q2));
        let q3 = r.hi / o.hi;
        let (s1, s2) = quick_two_sum(q1, q2);
        Dd { hi: s1, lo: s2 }.add_f64(q3)
    }

    #[inline]
    pub fn div_f64(self, b: f64) -> Dd {
        let q1 = self.hi / b;
        let (p1, p2) = two_prod(q1, b);
        let (d1, d2) = two_sum(self.hi, -p1);
        let q2 = (d1 + (d2 + (self.lo - p2))) / b;
        let (s1, s2) = quick_two_sum(q1, q2);
        Dd { hi: s1, lo: s2 }
    }

    #[inline]
    pub fn recip(self) -> Dd {
        Dd::ONE.div(self)
    }

    /// Multiply by 2^k exactly.
    #[inline]
    pub fn ldexp(self, k: i32) -> Dd {
        let f = libm_free_exp2(k);
        Dd {
            hi: self.hi * f,
            lo: self.lo * f,
        }
    }

    /// exp(self); underflows to zero below -745.
    pub fn exp(self) -> Dd {
        if self.hi <= -745.0 {
            return Dd::ZERO;
        }
        debug_assert!(self.hi < 709.0, "dd exp overflow: {}", self.hi);
        let k = (self.hi * FRAC_1_LN_2.hi).round();
        let r = self.sub(LN_2.mul_f64(k));
        // Taylor sum on |r| <= ln2/2
        let inv_fact = inv_factorials();
        let mut pow = r;
        let mut sum = Dd::ONE.add(r);
        for item in inv_fact.iter().take(27).skip(2) {
            pow = pow.mul(r);
            let term = pow.mul(*item);
            sum = sum.add(term);
            if term.hi.abs() < 1e-35 * sum.hi.abs() {
                break;
            }
        }
        sum.ldexp(k as i32)
    }

    /// (sin(self), cos(self)) with three-word pi/2 argument reduction;
    /// adequate for |self| up to a few thousand.
    pub fn sin_cos(self) -> (Dd, Dd) {
        let (p1, p2, p3) = FRAC_PI_2_TRIPLE;
        let k = (self.hi / p1).round();
        let mut r = self.sub(Dd::from_prod(k, p1));
        r = r.sub(Dd::from_prod(k, p2));
        r = r.sub_f64(k * p3);
        let (s, c) = sin_cos_reduced(r);
        match ((k as i64 % 4) + 4) % 4 {
            0 => (s, c),
            1 => (c, s.neg()),
            2 => (s.neg(), c.neg()),
            _ => (c.neg(), s),
        }
    }

    /// (sinh(self), cosh(self)) via the exponential; intended for |self| <= ~700.
    pub fn sinh_cosh(self) -> (Dd, Dd) {
        let e = self.exp();
        let ei = e.recip();
        (
            e.sub(ei).mul_f64(0.5),
            e.add(ei).mul_f64(0.5),
        )
    }
}

/// sin and cos on |r| <= pi/4 + small, by Taylor series in r².
fn sin_cos_reduced(r: Dd) -> (Dd, Dd) {
    let inv_fact = inv_factorials();
    let neg_r2 = r.sqr().neg();
    let mut q_pow = Dd::ONE; // (-r²)^m
    let mut s = Dd::ZERO;
    let mut c = Dd::ZERO;
    for m in 0..17 {
        c = c.add(q_pow.mul(inv_fact[2 * m]));
        s = s.add(q_pow.mul(inv_fact[2 * m + 1]));
        if q_pow.hi.abs() * inv_fact[2 * m].hi < 1e-35 {
            break;
        }
        q_pow = q_pow.mul(neg_r2);
    }
    (s.mul(r), c)
}

/// 1/k! for k = 0..=34, built once by exact dd division.
fn inv_factorials() -> &'static [Dd; 35] {
    static TABLE: std::sync::OnceLock<[Dd; 35]> = std::sync::OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = [Dd::ONE; 35];
        for k in 1..35 {
            t[k] = t[k - 1].div_f64(k as f64);
        }
        t
    })
}

/// 2^k as f64, exact down to the subnormal range.
#[inline]
fn libm_free_exp2(k: i32) -> f64 {
    if (-1022..=1023).contains(&k) {
        f64::from_bits(((k + 1023) as u64) << 52)
    } else if k > 1023 {
        f64::INFINITY
    } else if k >= -1074 {
        f64::from_bits(1u64 << (k + 1074) as u64)
    } else {
        0.0
    }
}

pub(crate) const PI: Dd = Dd::new(std::f64::consts::PI, 1.2246467991473532e-16);
pub(crate) const TWO_PI: Dd = Dd::new(std::f64::consts::TAU, 2.4492935982947064e-16);
pub(crate) const LN_2: Dd = Dd::new(std::f64::consts::LN_2, 2.319_046_813_846_299_6e-17);
pub(crate) const FRAC_1_LN_2: Dd = Dd::new(std::f64::consts::LOG2_E, 2.035_527_374_093_103_3e-17);
pub(crate) const SQRT_PI: Dd = Dd::new(1.772_453_850_905_516, -7.666_586_499_825_799e-17);
pub(crate) const FRAC_PI_2_TRIPLE: (f64, f64, f64) = (
    std::f64::consts::FRAC_PI_2,
    6.123_233_995_736_766e-17,
    -1.497_384_904_859_169_8e-33,
);
