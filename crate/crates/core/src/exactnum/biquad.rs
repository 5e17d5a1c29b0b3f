//! Real quantities derived from elements of `Q(i, sqrt(D))`.
//!
//! Taking real parts or moduli leaves `Q(i, alpha)` with `alpha = sqrt(D)`:
//! `Re z` and `|z|^2` live in `Q(i, alpha, beta)` where `beta = conj(alpha)`.
//! [`BiquadExpr`] stores such a value in the basis `{1, alpha, beta, alpha*beta}`
//! with `alpha*beta = |alpha|^2 = sqrt(m^2+n^2)`. For type A fields the basis is
//! linearly independent over `Q(i)`; for type B fields `alpha = u sqrt(l)`,
//! `beta = conj(u) sqrt(l)` and everything collapses onto `{1, sqrt(l)}`.

use std::cmp::Ordering;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::approx::{enclose_radical, ComplexInterval};
use super::element::FieldElement;
use super::field::{FieldType, QuadraticField};
use super::gaussian::GaussianRational;
use crate::error::{Error, Result};

/// Initial fixed-point precision of sign refinement, in bits.
pub const START_PRECISION: u32 = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiquadExpr {
    field: Option<Arc<QuadraticField>>,
    pub c0: GaussianRational,
    pub c_a: GaussianRational,
    pub c_b: GaussianRational,
    pub c_ab: GaussianRational,
}

fn half() -> GaussianRational {
    GaussianRational::from_parts(1, 0, 2)
}

fn half_over_i() -> GaussianRational {
    // 1/(2i) = -i/2
    GaussianRational::from_parts(0, -1, 2)
}

impl BiquadExpr {
    pub fn constant(q: GaussianRational) -> Self {
        let z = GaussianRational::zero();
        BiquadExpr { field: None, c0: q, c_a: z.clone(), c_b: z.clone(), c_ab: z }
    }

    pub fn new(
        field: Option<Arc<QuadraticField>>,
        c0: GaussianRational,
        c_a: GaussianRational,
        c_b: GaussianRational,
        c_ab: GaussianRational,
    ) -> Self {
        BiquadExpr { field, c0, c_a, c_b, c_ab }
    }

    pub fn field(&self) -> Option<&Arc<QuadraticField>> {
        self.field.as_ref()
    }

    /// `z` itself, i.e. `x + y alpha`.
    pub fn of(z: &FieldElement) -> Self {
        let zero = GaussianRational::zero();
        BiquadExpr {
            field: z.field().cloned(),
            c0: z.x().clone(),
            c_a: z.y(),
            c_b: zero.clone(),
            c_ab: zero,
        }
    }

    /// Complex conjugate of `z`: `conj(x) + conj(y) beta`.
    pub fn complex_conj_of(z: &FieldElement) -> Self {
        let zero = GaussianRational::zero();
        BiquadExpr {
            field: z.field().cloned(),
            c0: z.x().conj(),
            c_a: zero.clone(),
            c_b: z.y().conj(),
            c_ab: zero,
        }
    }

    /// `Re z = (z + conj z) / 2`.
    pub fn re_of(z: &FieldElement) -> Self {
        Self::of(z).add(&Self::complex_conj_of(z)).scale(&half())
    }

    /// `Im z = (z - conj z) / (2i)`.
    pub fn im_of(z: &FieldElement) -> Self {
        Self::of(z).sub(&Self::complex_conj_of(z)).scale(&half_over_i())
    }

    /// `|z|^2 = z conj(z)`.
    pub fn abs_sq_of(z: &FieldElement) -> Self {
        let x = z.x();
        let y = z.y();
        BiquadExpr {
            field: z.field().cloned(),
            c0: x * &x.conj(),
            c_a: &y * &x.conj(),
            c_b: x * &y.conj(),
            c_ab: &y * &y.conj(),
        }
    }

    fn join(&self, other: &Self) -> Option<Arc<QuadraticField>> {
        match (&self.field, &other.field) {
            (Some(f), Some(g)) => {
                assert!(f == g, "BiquadExpr over different fields");
                Some(f.clone())
            }
            (Some(f), None) | (None, Some(f)) => Some(f.clone()),
            (None, None) => None,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        BiquadExpr {
            field: self.join(other),
            c0: &self.c0 + &other.c0,
            c_a: &self.c_a + &other.c_a,
            c_b: &self.c_b + &other.c_b,
            c_ab: &self.c_ab + &other.c_ab,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&GaussianRational::from(-1)))
    }

    pub fn scale(&self, q: &GaussianRational) -> Self {
        BiquadExpr {
            field: self.field.clone(),
            c0: &self.c0 * q,
            c_a: &self.c_a * q,
            c_b: &self.c_b * q,
            c_ab: &self.c_ab * q,
        }
    }

    pub fn add_const(&self, q: &GaussianRational) -> Self {
        let mut out = self.clone();
        out.c0 = &out.c0 + q;
        out
    }

    /// Product using `alpha^2 = D`, `beta^2 = conj(D)`, `(alpha beta)^2 = m^2+n^2`.
    pub fn mul(&self, other: &Self) -> Self {
        let field = self.join(other);
        let Some(f) = field.clone() else {
            return Self::constant(&self.c0 * &other.c0);
        };
        let d = GaussianRational::from(f.radicand());
        let dc = d.conj();
        let n = GaussianRational::from(BigRational::from_integer(f.radicand().norm()));
        let (a, b) = (self, other);
        // 1*1, a*a = D, b*b = conj D, ab*ab = N
        let c0 = &(&(&a.c0 * &b.c0) + &(&(&a.c_a * &b.c_a) * &d))
            + &(&(&(&a.c_b * &b.c_b) * &dc) + &(&(&a.c_ab * &b.c_ab) * &n));
        // alpha: 1*a, a*1, b*ab (= conj D * alpha), ab*b
        let c_a = &(&(&a.c0 * &b.c_a) + &(&a.c_a * &b.c0))
            + &(&(&(&a.c_b * &b.c_ab) + &(&a.c_ab * &b.c_b)) * &dc);
        // beta: 1*b, b*1, a*ab (= D * beta), ab*a
        let c_b = &(&(&a.c0 * &b.c_b) + &(&a.c_b * &b.c0))
            + &(&(&(&a.c_a * &b.c_ab) + &(&a.c_ab * &b.c_a)) * &d);
        // alpha beta: 1*ab, ab*1, a*b, b*a
        let c_ab = &(&(&a.c0 * &b.c_ab) + &(&a.c_ab * &b.c0))
            + &(&(&a.c_a * &b.c_b) + &(&a.c_b * &b.c_a));
        BiquadExpr { field, c0, c_a, c_b, c_ab }
    }

    /// For type B fields: the pair `(p, q)` with value `p + q sqrt(l)`.
    pub fn type_b_pair(&self) -> Option<(GaussianRational, GaussianRational)> {
        let f = self.field.as_ref()?;
        let r = f.radical()?;
        let u = r.signed_unit();
        let l = GaussianRational::from(BigRational::from_integer(r.l.clone()));
        let abs_u = GaussianRational::from(u.norm());
        let p = &self.c0 + &(&(&self.c_ab * &l) * &abs_u);
        let q = &(&self.c_a * &u) + &(&self.c_b * &u.conj());
        Some((p, q))
    }

    /// Whether the value is exactly zero, decided coordinatewise in the basis
    /// that is independent for the field at hand.
    pub fn is_zero(&self) -> bool {
        match &self.field {
            None => self.c0.is_zero(),
            Some(f) => match f.field_type() {
                FieldType::A => {
                    self.c0.is_zero() && self.c_a.is_zero() && self.c_b.is_zero() && self.c_ab.is_zero()
                }
                FieldType::B => {
                    let (p, q) = self.type_b_pair().expect("type B");
                    p.is_zero() && q.is_zero()
                }
            },
        }
    }

    /// Exact check that the represented value is real.
    pub fn check_real(&self) -> Result<()> {
        let ok = match &self.field {
            None => self.c0.is_real(),
            Some(f) => match f.field_type() {
                FieldType::A => {
                    self.c0.is_real() && self.c_ab.is_real() && self.c_b == self.c_a.conj()
                }
                FieldType::B => {
                    let (p, q) = self.type_b_pair().expect("type B");
                    p.is_real() && q.is_real()
                }
            },
        };
        if ok {
            Ok(())
        } else {
            Err(Error::NotReal(format!("{self:?}")))
        }
    }

    /// The rational value when no irrational coordinate survives.
    fn rational_value(&self) -> Option<BigRational> {
        match &self.field {
            None => Some(self.c0.re()),
            Some(f) => match f.field_type() {
                FieldType::A => (self.c_a.is_zero() && self.c_b.is_zero() && self.c_ab.is_zero())
                    .then(|| self.c0.re()),
                FieldType::B => {
                    let (p, q) = self.type_b_pair().expect("type B");
                    q.is_zero().then(|| p.re())
                }
            },
        }
    }

    /// Enclosure of the (complex) value at precision `prec`.
    pub fn enclose(&self, prec: u32) -> ComplexInterval {
        let c0 = ComplexInterval::from_rational(&self.c0, prec);
        let Some(f) = &self.field else { return c0 };
        let rad = enclose_radical(f, prec);
        let alpha = &rad.alpha;
        let beta = alpha.conj();
        let ca = ComplexInterval::from_rational(&self.c_a, prec);
        let cb = ComplexInterval::from_rational(&self.c_b, prec);
        let cab = ComplexInterval::from_rational(&self.c_ab, prec);
        c0.add(&ca.mul(alpha)).add(&cb.mul(&beta)).add(&cab.mul_real(&rad.modulus))
    }

    /// Exact sign of a real value: refine enclosures from
    /// [`START_PRECISION`] bits, doubling, and run the exact zero test the
    /// first time the enclosure straddles zero.
    pub fn sign(&self) -> Result<i8> {
        self.check_real()?;
        if let Some(q) = self.rational_value() {
            return Ok(sign_of(&q));
        }
        let mut prec = START_PRECISION;
        let mut zero_tested = false;
        loop {
            let re = self.enclose(prec).re;
            if re.is_positive() {
                return Ok(1);
            }
            if re.is_negative() {
                return Ok(-1);
            }
            if !zero_tested {
                if self.is_zero() {
                    return Ok(0);
                }
                zero_tested = true;
            }
            prec *= 2;
        }
    }

    pub fn cmp_rational(&self, q: &BigRational) -> Result<Ordering> {
        let s = self.add_const(&GaussianRational::from(-q.clone())).sign()?;
        Ok(s.cmp(&0))
    }

    /// Exact `floor` of a real value.
    pub fn floor(&self) -> Result<BigInt> {
        self.check_real()?;
        if let Some(q) = self.rational_value() {
            return Ok(q.floor().to_integer());
        }
        let mut prec = START_PRECISION;
        loop {
            let re = self.enclose(prec).re;
            let lo = re.lo().floor().to_integer();
            let hi = re.hi().floor().to_integer();
            if lo == hi {
                return Ok(lo);
            }
            if re.hi() - re.lo() < BigRational::one() {
                // exactly one integer k in (lo, hi]
                let k = hi;
                let s = self.add_const(&GaussianRational::from(BigRational::from_integer(-k.clone()))).sign()?;
                return Ok(if s >= 0 { k } else { k - 1 });
            }
            prec *= 2;
        }
    }
}

fn sign_of(q: &BigRational) -> i8 {
    if q.is_positive() {
        1
    } else if q.is_negative() {
        -1
    } else {
        0
    }
}

/// Exact sign of `p + q sqrt(l)` for rationals `p, q` and `l > 0`, by
/// comparing squares. Independent of the interval machinery.
pub fn sign_with_sqrt(p: &BigRational, q: &BigRational, l: &BigInt) -> i8 {
    let sp = sign_of(p);
    let sq = sign_of(q);
    if sq == 0 {
        return sp;
    }
    if sp == 0 || sp == sq {
        return if sp == 0 { sq } else { sp };
    }
    // opposite signs: compare p^2 with q^2 l
    let lhs = p * p;
    let rhs = q * q * BigRational::from_integer(l.clone());
    match lhs.cmp(&rhs) {
        Ordering::Greater => sp,
        Ordering::Less => sq,
        Ordering::Equal => 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::field::make_field;
    use crate::exactnum::gaussian::GaussianInt;

    fn sqrt(m: i64, n: i64) -> FieldElement {
        FieldElement::sqrt_of(Arc::new(make_field(m, n).unwrap()))
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn modulus_of_sqrt2_minus_one_is_below_one() {
        let z = sqrt(2, 0).sub_int(&GaussianInt::one());
        let e = BiquadExpr::abs_sq_of(&z).add_const(&GaussianRational::from(-1));
        assert_eq!(e.sign().unwrap(), -1);
    }

    #[test]
    fn zero_is_zero() {
        let z = sqrt(2, 1);
        let e = BiquadExpr::re_of(&z).sub(&BiquadExpr::re_of(&z));
        assert_eq!(e.sign().unwrap(), 0);
        assert_eq!(BiquadExpr::constant(GaussianRational::zero()).sign().unwrap(), 0);
    }

    #[test]
    fn type_a_coordinates_never_hit_half_integers() {
        for (m, n) in [(2, 1), (1, 2), (5, 3), (-3, 1)] {
            let z = sqrt(m, n).add_rational(&GaussianRational::from_parts(1, -1, 3));
            let re = BiquadExpr::re_of(&z);
            let im = BiquadExpr::im_of(&z);
            let u = re.add(&im).scale(&GaussianRational::from_parts(1, 0, 2));
            assert_ne!(u.cmp_rational(&q(1, 2)).unwrap(), Ordering::Equal);
        }
    }

    #[test]
    fn non_real_input_is_a_contract_violation() {
        let e = BiquadExpr::of(&sqrt(2, 1));
        assert!(matches!(e.sign(), Err(Error::NotReal(_))));
        let e = BiquadExpr::constant(GaussianRational::i());
        assert!(matches!(e.sign(), Err(Error::NotReal(_))));
    }

    #[test]
    fn real_and_imaginary_parts_match_the_embedding() {
        let z = sqrt(2, 1).sub_int(&GaussianInt::new(2, 0));
        // Re = -0.54465..., Im = 0.34356...
        assert_eq!(BiquadExpr::re_of(&z).cmp_rational(&q(-54465, 100000)).unwrap(), Ordering::Less);
        assert_eq!(BiquadExpr::re_of(&z).cmp_rational(&q(-54466, 100000)).unwrap(), Ordering::Greater);
        assert_eq!(BiquadExpr::im_of(&z).cmp_rational(&q(34356, 100000)).unwrap(), Ordering::Greater);
        assert_eq!(BiquadExpr::im_of(&z).cmp_rational(&q(34357, 100000)).unwrap(), Ordering::Less);
    }

    #[test]
    fn floors() {
        let z = sqrt(3, 0); // 1.732
        assert_eq!(BiquadExpr::re_of(&z).floor().unwrap(), BigInt::from(1));
        let z = sqrt(-3, 0).sub_int(&GaussianInt::new(0, 2)); // -0.2679 i
        assert_eq!(BiquadExpr::im_of(&z).floor().unwrap(), BigInt::from(-1));
        assert_eq!(BiquadExpr::re_of(&z).floor().unwrap(), BigInt::from(0));
    }

    #[test]
    fn multiplication_respects_relations() {
        let z = sqrt(2, 1);
        let a = BiquadExpr::of(&z);
        let b = BiquadExpr::complex_conj_of(&z);
        // alpha * beta equals |alpha|^2
        assert_eq!(a.mul(&b), BiquadExpr::abs_sq_of(&z));
        // alpha^2 = D
        let d = a.mul(&a);
        assert_eq!(d.c0, GaussianRational::from_parts(2, 1, 1));
        assert!(d.c_a.is_zero() && d.c_b.is_zero() && d.c_ab.is_zero());
        // (alpha beta)^2 = m^2 + n^2
        let ab = a.mul(&b);
        assert_eq!(ab.mul(&ab).c0, GaussianRational::from(5));
    }

    #[test]
    fn squaring_oracle_agrees_on_simple_values() {
        let l = BigInt::from(2);
        assert_eq!(sign_with_sqrt(&q(2, 1), &q(-2, 1), &l), -1); // 2 - 2 sqrt2
        assert_eq!(sign_with_sqrt(&q(-1, 1), &q(1, 1), &l), 1);
        assert_eq!(sign_with_sqrt(&q(0, 1), &q(0, 1), &l), 0);
        assert_eq!(sign_with_sqrt(&q(3, 1), &q(-1, 1), &BigInt::from(9)), 0);
    }
}
