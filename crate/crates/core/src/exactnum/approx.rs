//! Certified numerical enclosures.
//!
//! [`Interval`] is a fixed-point interval `[lo, hi] * 2^-prec` with outward
//! rounding on every operation, so the true value is always enclosed. The
//! principal `sqrt(D)` is enclosed through
//! `Re sqrt(D) = sqrt((|D| + m)/2)`, `Im sqrt(D) = n / (2 Re sqrt(D))`
//! (or the symmetric formulas when `m < 0`), each built from integer square
//! roots.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::element::FieldElement;
use super::field::QuadraticField;
use super::gaussian::GaussianRational;

fn floor_shift(a: &BigInt, bits: u32) -> BigInt {
    a.div_floor(&(BigInt::one() << bits))
}

fn ceil_shift(a: &BigInt, bits: u32) -> BigInt {
    -(-a).div_floor(&(BigInt::one() << bits))
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    -(-a).div_floor(b)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    lo: BigInt,
    hi: BigInt,
    prec: u32,
}

impl Interval {
    pub fn from_int(n: &BigInt, prec: u32) -> Self {
        let v = n << prec;
        Interval { lo: v.clone(), hi: v, prec }
    }

    pub fn from_rational(q: &BigRational, prec: u32) -> Self {
        let scaled = q.numer() << prec;
        Interval { lo: scaled.div_floor(q.denom()), hi: ceil_div(&scaled, q.denom()), prec }
    }

    pub fn zero(prec: u32) -> Self {
        Self::from_int(&BigInt::zero(), prec)
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn lo_scaled(&self) -> &BigInt {
        &self.lo
    }

    pub fn hi_scaled(&self) -> &BigInt {
        &self.hi
    }

    pub fn lo(&self) -> BigRational {
        BigRational::new(self.lo.clone(), BigInt::one() << self.prec)
    }

    pub fn hi(&self) -> BigRational {
        BigRational::new(self.hi.clone(), BigInt::one() << self.prec)
    }

    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.hi.is_negative()
    }

    pub fn contains_zero(&self) -> bool {
        !self.is_positive() && !self.is_negative()
    }

    /// Width in units of `2^-prec`.
    pub fn width_scaled(&self) -> BigInt {
        &self.hi - &self.lo
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.prec, other.prec);
        Interval { lo: &self.lo + &other.lo, hi: &self.hi + &other.hi, prec: self.prec }
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.prec, other.prec);
        Interval { lo: &self.lo - &other.hi, hi: &self.hi - &other.lo, prec: self.prec }
    }

    pub fn neg(&self) -> Self {
        Interval { lo: -&self.hi, hi: -&self.lo, prec: self.prec }
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.prec, other.prec);
        let products = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let min = products.iter().min().unwrap();
        let max = products.iter().max().unwrap();
        Interval { lo: floor_shift(min, self.prec), hi: ceil_shift(max, self.prec), prec: self.prec }
    }

    /// Halving is exact up to one unit of outward rounding.
    pub fn half(&self) -> Self {
        Interval { lo: floor_shift(&self.lo, 1), hi: ceil_shift(&self.hi, 1), prec: self.prec }
    }

    /// Square root of an interval; the lower end is clamped at zero.
    pub fn sqrt(&self) -> Self {
        let lo = if self.lo.is_negative() { BigInt::zero() } else { self.lo.clone() };
        assert!(!self.hi.is_negative(), "sqrt of a negative interval");
        let lo = (lo << self.prec).sqrt();
        let hi_arg = &self.hi << self.prec;
        let r = hi_arg.sqrt();
        let hi = if &r * &r == hi_arg { r } else { r + 1 };
        Interval { lo, hi, prec: self.prec }
    }

    /// `1 / self`; `None` when the interval contains zero.
    pub fn recip(&self) -> Option<Self> {
        if self.contains_zero() {
            return None;
        }
        let one = BigInt::one() << (2 * self.prec);
        if self.is_positive() {
            Some(Interval { lo: one.div_floor(&self.hi), hi: ceil_div(&one, &self.lo), prec: self.prec })
        } else {
            self.neg().recip().map(|r| r.neg())
        }
    }

    pub fn div(&self, other: &Self) -> Option<Self> {
        other.recip().map(|r| self.mul(&r))
    }

    pub fn midpoint_f64(&self) -> f64 {
        Dyadic::new(&self.lo + &self.hi, -(self.prec as i64) - 1).to_f64()
    }
}

/// A rectangle enclosing a complex number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexInterval {
    pub re: Interval,
    pub im: Interval,
}

impl ComplexInterval {
    pub fn from_rational(q: &GaussianRational, prec: u32) -> Self {
        ComplexInterval {
            re: Interval::from_rational(&q.re(), prec),
            im: Interval::from_rational(&q.im(), prec),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        ComplexInterval { re: self.re.add(&other.re), im: self.im.add(&other.im) }
    }

    pub fn mul(&self, other: &Self) -> Self {
        ComplexInterval {
            re: self.re.mul(&other.re).sub(&self.im.mul(&other.im)),
            im: self.re.mul(&other.im).add(&self.im.mul(&other.re)),
        }
    }

    pub fn mul_real(&self, r: &Interval) -> Self {
        ComplexInterval { re: self.re.mul(r), im: self.im.mul(r) }
    }

    pub fn conj(&self) -> Self {
        ComplexInterval { re: self.re.clone(), im: self.im.neg() }
    }
}

/// Enclosures of `alpha = sqrt(D)` (principal branch) and of
/// `alpha * conj(alpha) = sqrt(m^2 + n^2)`.
#[derive(Clone, Debug)]
pub struct RadicalEnclosure {
    pub alpha: ComplexInterval,
    pub modulus: Interval,
}

pub fn enclose_radical(field: &QuadraticField, prec: u32) -> RadicalEnclosure {
    let m = field.d_re();
    let n = field.d_im();
    let norm = field.norm();
    let k = norm.sqrt();
    let modulus = if &k * &k == norm {
        Interval::from_int(&k, prec)
    } else {
        Interval::from_int(&norm, prec).sqrt()
    };
    let m_iv = Interval::from_int(m, prec);
    let alpha = if n.is_zero() {
        let root = Interval::from_int(&m.abs(), prec).sqrt();
        if m.is_positive() {
            ComplexInterval { re: root, im: Interval::zero(prec) }
        } else {
            ComplexInterval { re: Interval::zero(prec), im: root }
        }
    } else {
        let n_half = Interval::from_int(n, prec).half();
        if !m.is_negative() {
            let re = modulus.add(&m_iv).half().sqrt();
            let im = n_half.div(&re).expect("Re sqrt(D) is bounded away from 0");
            ComplexInterval { re, im }
        } else {
            let abs_im = modulus.sub(&m_iv).half().sqrt();
            let im = if n.is_negative() { abs_im.neg() } else { abs_im };
            let re = n_half.div(&im).expect("Im sqrt(D) is bounded away from 0");
            ComplexInterval { re, im }
        }
    };
    RadicalEnclosure { alpha, modulus }
}

/// `mant * 2^exp`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dyadic {
    pub mant: BigInt,
    pub exp: i64,
}

impl Dyadic {
    pub fn new(mant: BigInt, exp: i64) -> Self {
        Dyadic { mant, exp }
    }

    pub fn to_rational(&self) -> BigRational {
        if self.exp >= 0 {
            BigRational::from_integer(&self.mant << self.exp as usize)
        } else {
            BigRational::new(self.mant.clone(), BigInt::one() << (-self.exp) as usize)
        }
    }

    pub fn to_f64(&self) -> f64 {
        let bits = self.mant.bits() as i64;
        let (mant, exp) = if bits > 62 {
            let shift = bits - 62;
            (&self.mant >> shift as usize, self.exp + shift)
        } else {
            (self.mant.clone(), self.exp)
        };
        mant.to_f64().unwrap_or(f64::NAN) * 2f64.powi(exp as i32)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_f64())
    }
}

/// A disk of the given radius around `mid_re + mid_im i` that contains the
/// exact value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertifiedApprox {
    pub mid_re: Dyadic,
    pub mid_im: Dyadic,
    pub radius: Dyadic,
}

impl CertifiedApprox {
    fn from_box(b: &ComplexInterval) -> Self {
        let exp = -(b.re.prec() as i64) - 1;
        CertifiedApprox {
            mid_re: Dyadic::new(&b.re.lo + &b.re.hi, exp),
            mid_im: Dyadic::new(&b.im.lo + &b.im.hi, exp),
            radius: Dyadic::new(b.re.width_scaled() + b.im.width_scaled(), exp),
        }
    }

    /// Whether `re + im i` lies inside the disk, up to floating-point slop.
    pub fn contains_approx(&self, re: f64, im: f64) -> bool {
        let dr = re - self.mid_re.to_f64();
        let di = im - self.mid_im.to_f64();
        (dr * dr + di * di).sqrt() <= self.radius.to_f64() + 1e-12
    }
}

/// Box enclosure of an element at fixed-point precision `prec`.
pub fn enclose(a: &FieldElement, prec: u32) -> ComplexInterval {
    let x = ComplexInterval::from_rational(a.x(), prec);
    match a.field() {
        None => x,
        Some(field) => {
            let alpha = enclose_radical(field, prec).alpha;
            let y = ComplexInterval::from_rational(&a.y(), prec);
            x.add(&y.mul(&alpha))
        }
    }
}

/// Certified approximation with radius at most `2^-p`.
pub fn embed(a: &FieldElement, p: u32) -> CertifiedApprox {
    let p = p.max(1);
    let target = BigRational::new(BigInt::one(), BigInt::one() << p);
    let mut prec = p + 8;
    loop {
        let approx = CertifiedApprox::from_box(&enclose(a, prec));
        if approx.radius.to_rational() <= target {
            return approx;
        }
        prec *= 2;
    }
}
