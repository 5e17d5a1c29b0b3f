use std::fmt;
use std::ops::Neg;
use std::sync::Arc;

use super::field::QuadraticField;
use super::gaussian::{GaussianInt, GaussianRational};
use crate::error::{Error, Result};

/// An exact number: a Gaussian rational, or `x + y*sqrt(D)` with `y != 0`
/// where `sqrt(D)` is the principal square root.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Rational(GaussianRational),
    Quadratic(QuadraticElement),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadraticElement {
    field: Arc<QuadraticField>,
    x: GaussianRational,
    y: GaussianRational,
}

impl QuadraticElement {
    pub fn field(&self) -> &Arc<QuadraticField> {
        &self.field
    }

    pub fn x(&self) -> &GaussianRational {
        &self.x
    }

    pub fn y(&self) -> &GaussianRational {
        &self.y
    }
}

impl FieldElement {
    pub fn rational(q: GaussianRational) -> Self {
        FieldElement::Rational(q)
    }

    /// `x + y*sqrt(D)`, demoted to a Gaussian rational when `y = 0`.
    pub fn quadratic(field: Arc<QuadraticField>, x: GaussianRational, y: GaussianRational) -> Self {
        if y.is_zero() {
            FieldElement::Rational(x)
        } else {
            FieldElement::Quadratic(QuadraticElement { field, x, y })
        }
    }

    /// The principal `sqrt(D)` of `field`.
    pub fn sqrt_of(field: Arc<QuadraticField>) -> Self {
        Self::quadratic(field, GaussianRational::zero(), GaussianRational::one())
    }

    pub fn zero() -> Self {
        FieldElement::Rational(GaussianRational::zero())
    }

    pub fn one() -> Self {
        FieldElement::Rational(GaussianRational::one())
    }

    pub fn field(&self) -> Option<&Arc<QuadraticField>> {
        match self {
            FieldElement::Rational(_) => None,
            FieldElement::Quadratic(q) => Some(&q.field),
        }
    }

    /// Rational part `x`.
    pub fn x(&self) -> &GaussianRational {
        match self {
            FieldElement::Rational(q) => q,
            FieldElement::Quadratic(q) => &q.x,
        }
    }

    /// Coefficient `y` of `sqrt(D)`; zero for Gaussian rationals.
    pub fn y(&self) -> GaussianRational {
        match self {
            FieldElement::Rational(_) => GaussianRational::zero(),
            FieldElement::Quadratic(q) => q.y.clone(),
        }
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, FieldElement::Rational(_))
    }

    pub fn as_rational(&self) -> Option<&GaussianRational> {
        match self {
            FieldElement::Rational(q) => Some(q),
            FieldElement::Quadratic(_) => None,
        }
    }

    pub fn to_gaussian_int(&self) -> Option<GaussianInt> {
        self.as_rational().and_then(GaussianRational::to_gaussian_int)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, FieldElement::Rational(q) if q.is_zero())
    }

    fn common_field(&self, other: &Self) -> Result<Option<Arc<QuadraticField>>> {
        match (self.field(), other.field()) {
            (None, None) => Ok(None),
            (Some(f), None) | (None, Some(f)) => Ok(Some(f.clone())),
            (Some(f), Some(g)) if f == g => Ok(Some(f.clone())),
            (Some(f), Some(g)) => {
                Err(Error::FieldMismatch(f.radicand().to_string(), g.radicand().to_string()))
            }
        }
    }

    fn build(field: Option<Arc<QuadraticField>>, x: GaussianRational, y: GaussianRational) -> Self {
        match field {
            Some(f) => Self::quadratic(f, x, y),
            None => {
                debug_assert!(y.is_zero());
                FieldElement::Rational(x)
            }
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let field = self.common_field(other)?;
        Ok(Self::build(field, self.x() + other.x(), self.y() + other.y()))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        let field = self.common_field(other)?;
        Ok(Self::build(field, self.x() - other.x(), self.y() - other.y()))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        let field = self.common_field(other)?;
        let Some(f) = field else {
            return Ok(FieldElement::Rational(self.x() * other.x()));
        };
        let d = GaussianRational::from(f.radicand());
        let (x1, y1, x2, y2) = (self.x(), self.y(), other.x(), other.y());
        let x = &(x1 * x2) + &(&(&y1 * &y2) * &d);
        let y = &(x1 * &y2) + &(x2 * &y1);
        Ok(Self::quadratic(f, x, y))
    }

    pub fn recip(&self) -> Result<Self> {
        match self {
            FieldElement::Rational(q) => Ok(FieldElement::Rational(q.recip()?)),
            FieldElement::Quadratic(q) => {
                // 1/(x + y a) = (x - y a) / (x^2 - y^2 D)
                let d = GaussianRational::from(q.field.radicand());
                let n = &(&q.x * &q.x) - &(&(&q.y * &q.y) * &d);
                let inv = n.recip().expect("x^2 - y^2 D vanishes only at 0");
                Ok(Self::quadratic(q.field.clone(), &q.x * &inv, -(&q.y * &inv)))
            }
        }
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.try_mul(&other.recip()?)
    }

    pub fn add_rational(&self, q: &GaussianRational) -> Self {
        match self {
            FieldElement::Rational(p) => FieldElement::Rational(p + q),
            FieldElement::Quadratic(e) => FieldElement::Quadratic(QuadraticElement {
                field: e.field.clone(),
                x: &e.x + q,
                y: e.y.clone(),
            }),
        }
    }

    pub fn sub_int(&self, a: &GaussianInt) -> Self {
        self.add_rational(&GaussianRational::from(-a))
    }

    pub fn mul_rational(&self, q: &GaussianRational) -> Self {
        match self {
            FieldElement::Rational(p) => FieldElement::Rational(p * q),
            FieldElement::Quadratic(e) => Self::quadratic(e.field.clone(), &e.x * q, &e.y * q),
        }
    }

    /// Galois conjugate over `Q(i)`: `x + y sqrt(D) -> x - y sqrt(D)`.
    pub fn conjugate(&self) -> Result<Self> {
        match self {
            FieldElement::Rational(_) => Err(Error::NoConjugate),
            FieldElement::Quadratic(e) => Ok(FieldElement::Quadratic(QuadraticElement {
                field: e.field.clone(),
                x: e.x.clone(),
                y: -&e.y,
            })),
        }
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.mul_rational(&GaussianRational::from(-1))
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

impl From<GaussianRational> for FieldElement {
    fn from(q: GaussianRational) -> Self {
        FieldElement::Rational(q)
    }
}

impl From<GaussianInt> for FieldElement {
    fn from(z: GaussianInt) -> Self {
        FieldElement::Rational(z.into())
    }
}

impl From<i64> for FieldElement {
    fn from(n: i64) -> Self {
        FieldElement::Rational(n.into())
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rational(q) => write!(f, "{q}"),
            FieldElement::Quadratic(e) => {
                let d = e.field.radicand();
                if e.x.is_zero() {
                    write!(f, "({})*sqrt({d})", e.y)
                } else {
                    write!(f, "{} + ({})*sqrt({d})", e.x, e.y)
                }
            }
        }
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::field::make_field;

    fn sqrt(m: i64, n: i64) -> FieldElement {
        FieldElement::sqrt_of(Arc::new(make_field(m, n).unwrap()))
    }

    #[test]
    fn rationalize_sqrt2_minus_one() {
        let s = sqrt(2, 0);
        let a = s.sub_int(&GaussianInt::one());
        let inv = a.recip().unwrap();
        assert_eq!(inv, s.add_rational(&GaussianRational::one()));
    }

    #[test]
    fn inverse_of_sqrt_two_plus_i_minus_two() {
        let a = sqrt(2, 1).sub_int(&GaussianInt::new(2, 0));
        let inv = a.recip().unwrap();
        assert_eq!(inv.try_mul(&a).unwrap(), FieldElement::one());
        // oracle: 1/(s - 2) = (s + 2)/(D - 4) with D = 2+i
        let expect = sqrt(2, 1)
            .add_rational(&GaussianRational::from_parts(2, 0, 1))
            .mul_rational(&GaussianRational::from_parts(-2, 1, 1).recip().unwrap());
        assert_eq!(inv, expect);
    }

    #[test]
    fn additive_identity_and_demotion() {
        let a = sqrt(5, 3).add_rational(&GaussianRational::from_parts(1, 2, 3));
        assert_eq!(a.try_add(&FieldElement::zero()).unwrap(), a);
        let diff = a.try_sub(&a).unwrap();
        assert_eq!(diff, FieldElement::zero());
        assert!(diff.is_rational());
        // sqrt(D)^2 = D demotes
        let s = sqrt(2, 1);
        assert_eq!(s.try_mul(&s).unwrap(), FieldElement::from(GaussianInt::new(2, 1)));
    }

    #[test]
    fn mismatched_fields_and_zero_division() {
        assert!(matches!(sqrt(2, 0).try_add(&sqrt(3, 0)), Err(Error::FieldMismatch(..))));
        assert_eq!(FieldElement::one().try_div(&FieldElement::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn conjugation() {
        let a = sqrt(2, 1).sub_int(&GaussianInt::new(2, 0));
        let c = a.conjugate().unwrap();
        assert_eq!(c, (-sqrt(2, 1)).sub_int(&GaussianInt::new(2, 0)));
        assert_eq!(c.conjugate().unwrap(), a);
        assert_eq!(FieldElement::one().conjugate(), Err(Error::NoConjugate));
    }
}
