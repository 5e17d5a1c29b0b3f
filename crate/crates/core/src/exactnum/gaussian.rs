//! Gaussian integers `Z[i]` and Gaussian rationals `Q(i)` over arbitrary
//! precision integers.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussianInt {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        GaussianInt { re: re.into(), im: im.into() }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::new(1, 0)
    }

    pub fn i() -> Self {
        Self::new(0, 1)
    }

    /// `i^k` for any integer `k`.
    pub fn i_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => Self::new(1, 0),
            1 => Self::new(0, 1),
            2 => Self::new(-1, 0),
            _ => Self::new(0, -1),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn conj(&self) -> Self {
        GaussianInt { re: self.re.clone(), im: -&self.im }
    }

    /// Membership in `(1+i)Z[i]`, i.e. `re + im` even.
    pub fn is_even(&self) -> bool {
        (&self.re + &self.im).is_even()
    }

    /// Exact square root in `Z[i]`, if one exists. The root returned is the
    /// principal one (positive real part, or zero real part and nonnegative
    /// imaginary part).
    pub fn sqrt_exact(&self) -> Option<GaussianInt> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        let norm = self.norm();
        let k = norm.sqrt();
        if &k * &k != norm {
            return None;
        }
        let two = BigInt::from(2);
        let (a2, ra) = (&k + &self.re).div_rem(&two);
        let (b2, rb) = (&k - &self.re).div_rem(&two);
        if !ra.is_zero() || !rb.is_zero() {
            return None;
        }
        let a = a2.sqrt();
        let b = b2.sqrt();
        if &a * &a != a2 || &b * &b != b2 {
            return None;
        }
        // a >= 0, choose the sign of b so that 2ab = im
        let b = if self.im.is_negative() { -b } else { b };
        let root = GaussianInt { re: a, im: b };
        debug_assert!(&root * &root == *self);
        Some(root)
    }
}

impl fmt::Display for GaussianInt {
    /// Canonical `a+bi` form without spaces: `0`, `3`, `-i`, `2i`, `1-3i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn imag(b: &BigInt) -> String {
            if b.is_one() {
                "i".to_string()
            } else if *b == -BigInt::one() {
                "-i".to_string()
            } else {
                format!("{b}i")
            }
        }
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}", imag(&self.im)),
            (false, false) => {
                let im = imag(&self.im);
                if self.im.is_negative() {
                    write!(f, "{}{}", self.re, im)
                } else {
                    write!(f, "{}+{}", self.re, im)
                }
            }
        }
    }
}

impl fmt::Debug for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

macro_rules! forward_binop {
    ($ty:ident, $trait:ident, $method:ident) => {
        impl $trait<$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a $ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: &'a $ty) -> $ty {
                (&self).$method(rhs)
            }
        }
        impl<'a> $trait<$ty> for &'a $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                self.$method(&rhs)
            }
        }
    };
}

impl<'b> Add<&'b GaussianInt> for &GaussianInt {
    type Output = GaussianInt;
    fn add(self, rhs: &'b GaussianInt) -> GaussianInt {
        GaussianInt { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl<'b> Sub<&'b GaussianInt> for &GaussianInt {
    type Output = GaussianInt;
    fn sub(self, rhs: &'b GaussianInt) -> GaussianInt {
        GaussianInt { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl<'b> Mul<&'b GaussianInt> for &GaussianInt {
    type Output = GaussianInt;
    fn mul(self, rhs: &'b GaussianInt) -> GaussianInt {
        GaussianInt {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

forward_binop!(GaussianInt, Add, add);
forward_binop!(GaussianInt, Sub, sub);
forward_binop!(GaussianInt, Mul, mul);

impl Neg for GaussianInt {
    type Output = GaussianInt;
    fn neg(self) -> GaussianInt {
        GaussianInt { re: -self.re, im: -self.im }
    }
}

impl Neg for &GaussianInt {
    type Output = GaussianInt;
    fn neg(self) -> GaussianInt {
        GaussianInt { re: -&self.re, im: -&self.im }
    }
}

/// An element of `Q(i)` stored as `num / den` with `den > 0` and
/// `gcd(num.re, num.im, den) = 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    num: GaussianInt,
    den: BigInt,
}

impl GaussianRational {
    pub fn new(num: GaussianInt, den: impl Into<BigInt>) -> Result<Self> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(mut num: GaussianInt, mut den: BigInt) -> Self {
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        let g = num.re.gcd(&num.im).gcd(&den);
        if !g.is_one() {
            num.re /= &g;
            num.im /= &g;
            den /= &g;
        }
        GaussianRational { num, den }
    }

    /// `(re_num + im_num i) / den` from machine integers; panics on a zero
    /// denominator.
    pub fn from_parts(re_num: i64, im_num: i64, den: i64) -> Self {
        Self::new(GaussianInt::new(re_num, im_num), den).expect("nonzero denominator")
    }

    pub fn from_rationals(re: &BigRational, im: &BigRational) -> Self {
        let den = re.denom().lcm(im.denom());
        let re_num = re.numer() * (&den / re.denom());
        let im_num = im.numer() * (&den / im.denom());
        Self::reduce(GaussianInt { re: re_num, im: im_num }, den)
    }

    pub fn zero() -> Self {
        GaussianInt::zero().into()
    }

    pub fn one() -> Self {
        GaussianInt::one().into()
    }

    pub fn i() -> Self {
        GaussianInt::i().into()
    }

    pub fn numer(&self) -> &GaussianInt {
        &self.num
    }

    pub fn denom(&self) -> &BigInt {
        &self.den
    }

    pub fn re(&self) -> BigRational {
        BigRational::new(self.num.re.clone(), self.den.clone())
    }

    pub fn im(&self) -> BigRational {
        BigRational::new(self.num.im.clone(), self.den.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.re.is_one() && self.num.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.num.im.is_zero()
    }

    /// `Some(z)` when the value lies in `Z[i]`.
    pub fn to_gaussian_int(&self) -> Option<GaussianInt> {
        self.den.is_one().then(|| self.num.clone())
    }

    pub fn conj(&self) -> Self {
        GaussianRational { num: self.num.conj(), den: self.den.clone() }
    }

    pub fn norm(&self) -> BigRational {
        BigRational::new(self.num.norm(), &self.den * &self.den)
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // den / num = den * conj(num) / |num|^2
        let n = self.num.norm();
        let num = GaussianInt { re: &self.num.re * &self.den, im: -&self.num.im * &self.den };
        Ok(Self::reduce(num, n))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.recip()?)
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        let num = GaussianInt { re: &self.num.re * q.numer(), im: &self.num.im * q.numer() };
        Self::reduce(num, &self.den * q.denom())
    }

    pub fn mul_i_pow(&self, k: i64) -> Self {
        let num = &self.num * &GaussianInt::i_pow(k);
        GaussianRational { num, den: self.den.clone() }
    }
}

impl From<GaussianInt> for GaussianRational {
    fn from(num: GaussianInt) -> Self {
        GaussianRational { num, den: BigInt::one() }
    }
}

impl From<&GaussianInt> for GaussianRational {
    fn from(num: &GaussianInt) -> Self {
        num.clone().into()
    }
}

impl From<BigRational> for GaussianRational {
    fn from(q: BigRational) -> Self {
        Self::from_rationals(&q, &BigRational::zero())
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        GaussianInt::new(n, 0).into()
    }
}

impl<'b> Add<&'b GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &'b GaussianRational) -> GaussianRational {
        if self.den == rhs.den {
            return GaussianRational::reduce(&self.num + &rhs.num, self.den.clone());
        }
        let a = GaussianInt { re: &self.num.re * &rhs.den, im: &self.num.im * &rhs.den };
        let b = GaussianInt { re: &rhs.num.re * &self.den, im: &rhs.num.im * &self.den };
        GaussianRational::reduce(a + b, &self.den * &rhs.den)
    }
}

impl<'b> Sub<&'b GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &'b GaussianRational) -> GaussianRational {
        self + &(-rhs)
    }
}

impl<'b> Mul<&'b GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &'b GaussianRational) -> GaussianRational {
        GaussianRational::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

forward_binop!(GaussianRational, Add, add);
forward_binop!(GaussianRational, Sub, sub);
forward_binop!(GaussianRational, Mul, mul);

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { num: -self.num, den: self.den }
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { num: -&self.num, den: self.den.clone() }
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else if self.num.im.is_zero() || self.num.re.is_zero() {
            write!(f, "{}/{}", self.num, self.den)
        } else {
            write!(f, "({})/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gr(a: i64, b: i64, d: i64) -> GaussianRational {
        GaussianRational::from_parts(a, b, d)
    }

    #[test]
    fn canonical_form() {
        let q = gr(4, -6, -8);
        assert_eq!(q.numer(), &GaussianInt::new(-2, 3));
        assert_eq!(q.denom(), &BigInt::from(4));
        assert_eq!(gr(2, 4, 2), gr(1, 2, 1));
    }

    #[test]
    fn reciprocal_of_example_quotient() {
        // (9+8i)/(2+i) = (26+7i)/5
        let q = gr(9, 8, 1).checked_div(&gr(2, 1, 1)).unwrap();
        assert_eq!(q, gr(26, 7, 5));
        // (2+i)/(9+8i) * (26+7i)/5 = 1
        let p = gr(2, 1, 1).checked_div(&gr(9, 8, 1)).unwrap();
        assert!((&p * &q).is_one());
    }

    #[test]
    fn inverting_one_plus_two_i_over_five() {
        assert_eq!(gr(1, 2, 5).recip().unwrap(), gr(1, -2, 1));
    }

    #[test]
    fn identity_and_zero_division() {
        let q = gr(3, -7, 11);
        assert_eq!(&GaussianRational::one() * &q, q);
        assert_eq!(q.checked_div(&GaussianRational::zero()), Err(Error::DivisionByZero));
        assert!(GaussianRational::new(GaussianInt::one(), 0).is_err());
    }

    #[test]
    fn display_is_canonical() {
        let cases = [
            ((0, 0), "0"),
            ((3, 0), "3"),
            ((0, 1), "i"),
            ((0, -1), "-i"),
            ((0, 2), "2i"),
            ((1, 1), "1+i"),
            ((-1, -3), "-1-3i"),
            ((2, -1), "2-i"),
        ];
        for ((a, b), s) in cases {
            assert_eq!(GaussianInt::new(a, b).to_string(), s);
        }
        assert_eq!(gr(26, 7, 5).to_string(), "(26+7i)/5");
        assert_eq!(gr(1, 0, 2).to_string(), "1/2");
    }

    #[test]
    fn exact_square_roots() {
        assert_eq!(GaussianInt::new(3, 4).sqrt_exact(), Some(GaussianInt::new(2, 1)));
        assert_eq!(GaussianInt::new(0, 2).sqrt_exact(), Some(GaussianInt::new(1, 1)));
        assert_eq!(GaussianInt::new(-4, 0).sqrt_exact(), Some(GaussianInt::new(0, 2)));
        assert_eq!(GaussianInt::new(-3, -4).sqrt_exact(), Some(GaussianInt::new(1, -2)));
        assert_eq!(GaussianInt::new(2, 1).sqrt_exact(), None);
        assert_eq!(GaussianInt::new(-4, 3).sqrt_exact(), None);
        assert_eq!(GaussianInt::new(0, 3).sqrt_exact(), None);
    }

    #[test]
    fn parity() {
        assert!(GaussianInt::new(1, 1).is_even());
        assert!(GaussianInt::new(2, 0).is_even());
        assert!(!GaussianInt::new(1, 2).is_even());
    }
}
