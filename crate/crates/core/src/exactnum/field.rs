//! Quadratic extensions `Q(i, sqrt(m+ni))` and their type A / type B
//! classification.

use std::fmt;
use std::hash::{Hash, Hasher};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::gaussian::{GaussianInt, GaussianRational};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldType {
    /// `sqrt(m^2+n^2)` is irrational.
    A,
    /// `sqrt(m^2+n^2)` is a positive integer; the field equals `Q(i, sqrt(l))`.
    B,
}

/// Witness that a type B field is `Q(i, sqrt(l))`:
/// `sqrt(m+ni) = sign * sqrt(l) * unit` under the principal branch.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealRadical {
    pub l: BigInt,
    pub unit: GaussianRational,
    pub sign: i8,
}

impl RealRadical {
    /// `sign * unit`, the coefficient of `sqrt(l)` in `sqrt(m+ni)`.
    pub fn signed_unit(&self) -> GaussianRational {
        if self.sign < 0 {
            -&self.unit
        } else {
            self.unit.clone()
        }
    }
}

/// Descriptor of `Q(i, sqrt(D))` for a non-square Gaussian integer `D`.
/// Two descriptors are equal exactly when their radicands are equal.
#[derive(Clone, Debug)]
pub struct QuadraticField {
    radicand: GaussianInt,
    field_type: FieldType,
    radical: Option<RealRadical>,
}

impl PartialEq for QuadraticField {
    fn eq(&self, other: &Self) -> bool {
        self.radicand == other.radicand
    }
}

impl Eq for QuadraticField {}

impl Hash for QuadraticField {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.radicand.hash(state);
    }
}

impl fmt::Display for QuadraticField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(i,sqrt({}))", self.radicand)
    }
}

/// Builds the descriptor for `Q(i, sqrt(m+ni))`, rejecting squares of `Z[i]`.
pub fn make_field(m: i64, n: i64) -> Result<QuadraticField> {
    QuadraticField::new(GaussianInt::new(m, n))
}

impl QuadraticField {
    pub fn new(radicand: GaussianInt) -> Result<Self> {
        if radicand.sqrt_exact().is_some() {
            return Err(Error::SquareRadicand(radicand.to_string()));
        }
        let norm = radicand.norm();
        let k = norm.sqrt();
        if &k * &k != norm {
            return Ok(QuadraticField { radicand, field_type: FieldType::A, radical: None });
        }
        let radical = real_radical(&radicand);
        Ok(QuadraticField { radicand, field_type: FieldType::B, radical: Some(radical) })
    }

    pub fn radicand(&self) -> &GaussianInt {
        &self.radicand
    }

    pub fn d_re(&self) -> &BigInt {
        &self.radicand.re
    }

    pub fn d_im(&self) -> &BigInt {
        &self.radicand.im
    }

    pub fn field_type(&self) -> FieldType {
        self.field_type
    }

    /// `m^2 + n^2`.
    pub fn norm(&self) -> BigInt {
        self.radicand.norm()
    }

    /// Type B witness, `None` for type A.
    pub fn radical(&self) -> Option<&RealRadical> {
        self.radical.as_ref()
    }
}

fn is_principal(z: &GaussianRational) -> bool {
    let re = z.numer().re.clone();
    re.is_positive() || (re.is_zero() && z.numer().im.is_positive())
}

fn real_radical(d: &GaussianInt) -> RealRadical {
    let (m, n) = (&d.re, &d.im);
    let (l, unit) = if n.is_zero() {
        if m.is_positive() {
            (m.clone(), GaussianRational::one())
        } else {
            (-m, GaussianRational::i())
        }
    } else if m.is_zero() {
        let l = n.abs() * 2;
        let im = if n.is_positive() { 1 } else { -1 };
        (l, GaussianRational::from_parts(1, im, 2))
    } else {
        let g = m.gcd(n);
        let m1 = m / &g;
        let n1 = n / &g;
        // A primitive Gaussian integer of square norm is a square up to a unit;
        // the units -1 and i^2 fold into the root, leaving i as the only case.
        match (GaussianInt { re: m1.clone(), im: n1.clone() }).sqrt_exact() {
            Some(w) => (g, GaussianRational::from(w)),
            None => {
                let w = GaussianInt { re: n1, im: -m1 }
                    .sqrt_exact()
                    .expect("primitive Pythagorean pair is a square up to i");
                let unit = GaussianRational::from(&GaussianInt::new(1, 1) * &w)
                    .scale(&num_rational::BigRational::new(1.into(), 2.into()));
                (g * 2, unit)
            }
        }
    };
    let sign = if is_principal(&unit) { 1 } else { -1 };
    let check = (&unit * &unit).scale(&l.clone().into());
    assert_eq!(check, GaussianRational::from(d.clone()), "type B factorization must square back");
    let r = l.sqrt();
    assert!(&r * &r != l, "sqrt(l) must be irrational");
    RealRadical { l, unit, sign }
}
