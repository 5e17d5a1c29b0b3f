//! Natural extensions of the H and T maps: the pair map
//! `(z, w) -> (T(z), 1/w - a(z))` on the product domains `X-hat` (T map)
//! and `X-tilde` (H map).

use std::collections::HashMap;

use crate::cfengine::{step_h, step_t, Algorithm, PartialQuotient};
use crate::error::{Error, Result};
use crate::exactnum::{FieldElement, GaussianRational};
use crate::regions::{in_region, in_s_w, RegionId};

/// A pair `(z, w)`; `w = None` stands for the point at infinity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtPoint {
    pub z: FieldElement,
    pub w: Option<FieldElement>,
}

impl ExtPoint {
    pub fn new(z: FieldElement, w: Option<FieldElement>) -> Self {
        ExtPoint { z, w }
    }

    /// `(alpha, alpha')` for a quadratic irrational.
    pub fn with_conjugate(alpha: &FieldElement) -> Result<Self> {
        let c = alpha.conjugate().map_err(|_| Error::NotQuadratic(alpha.to_string()))?;
        Ok(ExtPoint { z: alpha.clone(), w: Some(c) })
    }
}

fn second_in(w: &Option<FieldElement>, r: RegionId) -> bool {
    w.as_ref().is_none_or(|w| in_region(w, r))
}

/// The sector `j` witnessing membership in `X-hat`, if any.
pub fn xhat_sector(p: &ExtPoint) -> Option<u8> {
    (1..=8).find(|&j| in_region(&p.z, RegionId::XClosure(j)) && second_in(&p.w, RegionId::WClosure(j)))
}

/// The sector `j` witnessing membership in `X-tilde`, if any.
pub fn xtilde_sector(p: &ExtPoint) -> Option<u8> {
    (1..=8).find(|&j| {
        let first = if j <= 4 { RegionId::XClosure(j) } else { RegionId::X(j) };
        in_region(&p.z, first) && second_in(&p.w, RegionId::W(j))
    })
}

pub fn in_xhat(p: &ExtPoint) -> bool {
    xhat_sector(p).is_some()
}

pub fn in_xtilde(p: &ExtPoint) -> bool {
    xtilde_sector(p).is_some()
}

/// One step of the pair map, returning the emitted quotient as well.
pub fn ext_step_with_quotient(p: &ExtPoint, algorithm: Algorithm) -> Result<(PartialQuotient, ExtPoint)> {
    let (a, z) = match algorithm {
        Algorithm::H => step_h(&p.z)?,
        Algorithm::T => step_t(&p.z)?,
        Algorithm::D => return Err(Error::Domain("the dual map has no pair extension here".into())),
    };
    let inv = match &p.w {
        None => FieldElement::zero(),
        Some(w) => w.recip()?,
    };
    let w = inv.sub_int(&a.value);
    let next = ExtPoint { z, w: Some(w) };
    let inside = match algorithm {
        Algorithm::T => in_xhat(&next),
        _ => in_xtilde(&next),
    };
    if !inside {
        return Err(Error::Domain(format!("pair map left its domain at ({}, {})", next.z, next.w.as_ref().unwrap())));
    }
    Ok((a, next))
}

pub fn ext_step(p: &ExtPoint, algorithm: Algorithm) -> Result<ExtPoint> {
    ext_step_with_quotient(p, algorithm).map(|(_, q)| q)
}

/// Whether the second coordinate produced by one step lands in `S_{-a}`.
pub fn lands_in_s(p: &ExtPoint, algorithm: Algorithm) -> Result<bool> {
    let (a, next) = ext_step_with_quotient(p, algorithm)?;
    if a.value.is_zero() || !a.value.is_even() {
        return Ok(false);
    }
    in_s_w(next.w.as_ref().expect("finite after a step"), &-&a.value)
}

/// Exact check of `|z' - w'|^4 |z|^4 |w|^4 = |z - w|^4` for one step of the
/// T pair map at a rational point of `X-hat`. The invariant density
/// `1/|z - w|^4` transforms with the Jacobian `1/(|z|^4 |w|^4)` exactly when
/// this holds; the normalizing constant cancels.
pub fn density_identity_check(z: &GaussianRational, w: &GaussianRational) -> Result<bool> {
    if z.is_zero() || w.is_zero() || z == w {
        return Err(Error::Domain("density check needs z, w nonzero and distinct".into()));
    }
    let p = ExtPoint::new(z.clone().into(), Some(w.clone().into()));
    if !in_xhat(&p) {
        return Err(Error::Domain(format!("({z}, {w}) is not in X-hat")));
    }
    let next = ext_step(&p, Algorithm::T)?;
    let z1 = next.z.as_rational().expect("rational orbit").clone();
    let w1 = next.w.as_ref().and_then(FieldElement::as_rational).expect("rational orbit").clone();
    let lhs = {
        let d = (&z1 - &w1).norm();
        &(&d * &d) * &(&(&z.norm() * &z.norm()) * &(&w.norm() * &w.norm()))
    };
    let d = (z - w).norm();
    Ok(lhs == &d * &d)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct InjectivityReport {
    pub checked: usize,
    /// Index pairs of distinct inputs with equal images.
    pub collisions: Vec<(usize, usize)>,
}

pub fn injectivity_sample(pairs: &[ExtPoint], algorithm: Algorithm) -> Result<InjectivityReport> {
    let mut seen: HashMap<ExtPoint, usize> = HashMap::new();
    let mut report = InjectivityReport::default();
    for (k, p) in pairs.iter().enumerate() {
        let image = ext_step(p, algorithm)?;
        report.checked += 1;
        match seen.get(&image) {
            Some(&j) if pairs[j] != *p => report.collisions.push((j, k)),
            Some(_) => {}
            None => {
                seen.insert(image, k);
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::GaussianInt;
    use crate::expr::parse_expr;

    fn v(s: &str) -> FieldElement {
        parse_expr(s).unwrap()
    }

    #[test]
    fn step_from_infinity() {
        let a = v("sqrt(2+i)-2");
        let p = ExtPoint::new(a.clone(), None);
        let next = ext_step(&p, Algorithm::H).unwrap();
        assert_eq!(next.w, Some(FieldElement::from(GaussianInt::new(1, 1))));
        assert_eq!(next.z, step_h(&a).unwrap().1);
    }

    #[test]
    fn periodic_pair_closes() {
        let a = v("sqrt(2+i)-2");
        let start = ExtPoint::with_conjugate(&a).unwrap();
        assert!(in_xtilde(&start));
        let mut p = start.clone();
        for _ in 0..4 {
            p = ext_step(&p, Algorithm::H).unwrap();
        }
        assert_eq!(p, start);
    }

    #[test]
    fn memberships() {
        let bad = ExtPoint::with_conjugate(&v("(sqrt(2)-1)/3")).unwrap();
        assert!(!in_xtilde(&bad));
        let z = v("3/4");
        assert!(in_region(&z, RegionId::X(5)));
        assert!(in_xtilde(&ExtPoint::new(z, None)));
    }

    #[test]
    fn rational_step_to_zero_is_an_error() {
        let p = ExtPoint::new(v("1/2"), None);
        let next = ext_step(&p, Algorithm::T).unwrap();
        assert!(next.z.is_zero());
        assert!(ext_step(&next, Algorithm::T).is_err());
    }

    #[test]
    fn density_identity() {
        let z = GaussianRational::from_parts(3, 1, 4);
        let w = GaussianRational::from_parts(-3, 0, 1);
        assert!(density_identity_check(&z, &w).unwrap());
        assert!(density_identity_check(&z, &z).is_err());
    }

    #[test]
    fn injectivity() {
        let ps: Vec<ExtPoint> = ["sqrt(2+i)-2", "sqrt(2+i)-2", "sqrt(3)-2"]
            .iter()
            .map(|s| ExtPoint::with_conjugate(&v(s)).unwrap())
            .collect();
        let r = injectivity_sample(&ps, Algorithm::H).unwrap();
        assert_eq!((r.checked, r.collisions.len()), (3, 0));
        // differing only in w
        let a = v("sqrt(2+i)-2");
        let p1 = ExtPoint::new(a.clone(), Some(v("-3")));
        let p2 = ExtPoint::new(a, Some(v("-4")));
        assert_ne!(ext_step(&p1, Algorithm::H).unwrap(), ext_step(&p2, Algorithm::H).unwrap());
    }
}
