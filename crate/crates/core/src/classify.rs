//! Pure periodicity of quadratic irrationals: the region criteria `N_1`
//! (H map) and `N_2` (T map), the orbit oracle they are checked against, and
//! the reversed conjugate orbit under the dual map.

use std::sync::Arc;

use crate::cfengine::{expand, orbit, Algorithm, State, Status, DEFAULT_MAX_STEPS};
use crate::error::{Error, Result};
use crate::exactnum::{FieldElement, GaussianInt, QuadraticField};
use crate::regions::{floor_h, floor_t, in_region, modulus_sign, RegionId};

/// Which product sets make up the criterion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Criterion {
    N1,
    N2,
}

impl Criterion {
    pub fn for_algorithm(algorithm: Algorithm) -> Self {
        match algorithm {
            Algorithm::T => Criterion::N2,
            _ => Criterion::N1,
        }
    }

    /// The pairs `(A, B)` with `N = union of A x B`.
    ///
    /// `N_1` also contains `Y_j x Y''_j` for the edges `Y_1`, `Y_2`, which lie
    /// outside the half-open square: a purely periodic point there can have
    /// its conjugate on either ray of the edge's line. On `Y_3`, `Y_4` that
    /// case is already covered by `X_j x W_j`.
    pub fn pieces(self) -> Vec<(RegionId, RegionId)> {
        let mut out: Vec<(RegionId, RegionId)> = (1..=8).map(|j| (RegionId::X(j), RegionId::W(j))).collect();
        let (ys, ks): (&[u8], &[u8]) = match self {
            Criterion::N1 => (&[1, 2, 3, 4], &[1, 2, 3, 4]),
            Criterion::N2 => (&[3, 4], &[1, 2]),
        };
        out.extend(ys.iter().map(|&j| (RegionId::Y(j), RegionId::YPrime(j))));
        out.extend(ks.iter().map(|&j| (RegionId::K(j), RegionId::KPrime(j))));
        if self == Criterion::N1 {
            out.extend([1, 2].map(|j| (RegionId::Y(j), RegionId::YBeyond(j))));
        }
        out
    }
}

fn conjugate_of(alpha: &FieldElement) -> Result<FieldElement> {
    alpha.conjugate().map_err(|_| Error::NotQuadratic(alpha.to_string()))
}

/// The piece of the criterion containing `(alpha, alpha')`, if any.
pub fn witness(alpha: &FieldElement, criterion: Criterion) -> Result<Option<(RegionId, RegionId)>> {
    let conj = conjugate_of(alpha)?;
    for (a, b) in criterion.pieces() {
        if in_region(alpha, a) && in_region(&conj, b) {
            return Ok(Some((a, b)));
        }
    }
    Ok(None)
}

pub fn in_n1(alpha: &FieldElement) -> Result<bool> {
    Ok(witness(alpha, Criterion::N1)?.is_some())
}

pub fn in_n2(alpha: &FieldElement) -> Result<bool> {
    Ok(witness(alpha, Criterion::N2)?.is_some())
}

/// Runs the orbit: `(true, Some(m))` when the first repeated state is the
/// initial one, with `m` the period length.
pub fn purely_periodic_oracle(alpha: &FieldElement, algorithm: Algorithm) -> Result<(bool, Option<usize>)> {
    if alpha.is_rational() {
        return Err(Error::NotQuadratic(alpha.to_string()));
    }
    let e = expand(alpha, algorithm, DEFAULT_MAX_STEPS)?;
    match e.status {
        Status::Periodic => Ok((e.preperiod.is_empty(), Some(e.period.len()))),
        Status::Truncated => Err(Error::Inconclusive(format!("orbit of {alpha} did not close"))),
        _ => Ok((false, None)),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PurePeriodicityReport {
    pub algorithm: Algorithm,
    pub predicate_result: bool,
    pub oracle_result: bool,
    pub period_length: Option<usize>,
    /// `(role, region, member)` for every region the criterion mentions
    /// that contains `alpha`, paired with its partner region for `alpha'`.
    pub witness: Vec<(&'static str, RegionId, bool)>,
}

impl PurePeriodicityReport {
    pub fn agrees(&self) -> bool {
        self.predicate_result == self.oracle_result
    }
}

pub fn classify(alpha: &FieldElement, algorithm: Algorithm) -> Result<PurePeriodicityReport> {
    if algorithm == Algorithm::D {
        return Err(Error::Domain("classification is defined for the H and T maps".into()));
    }
    let criterion = Criterion::for_algorithm(algorithm);
    let conj = conjugate_of(alpha)?;
    let mut trail = Vec::new();
    let mut predicate = false;
    for (a, b) in criterion.pieces() {
        if in_region(alpha, a) {
            let hit = in_region(&conj, b);
            trail.push(("alpha", a, true));
            trail.push(("conjugate", b, hit));
            predicate |= hit;
        }
    }
    let (oracle, period) = purely_periodic_oracle(alpha, algorithm)?;
    Ok(PurePeriodicityReport {
        algorithm,
        predicate_result: predicate,
        oracle_result: oracle,
        period_length: period,
        witness: trail,
    })
}

/// Checks that the dual map replays the conjugates of a purely periodic H
/// orbit backwards: starting from `(alpha_m)'` it visits
/// `(alpha_{m-1})', ..., (alpha_1)', (alpha_m)', ...` for two full periods.
pub fn verify_dual_reversal(alpha: &FieldElement) -> Result<bool> {
    let e = expand(alpha, Algorithm::H, DEFAULT_MAX_STEPS)?;
    if !e.is_purely_periodic() {
        return Err(Error::Domain(format!("{alpha} is not purely periodic under H")));
    }
    let m = e.period.len();
    let conj: Vec<FieldElement> = e.states[..m].iter().map(conjugate_of).collect::<Result<_>>()?;
    if modulus_sign(&conj[m - 1]) <= 0 {
        return Ok(false);
    }
    let dual = orbit(&conj[m - 1], Algorithm::D, 2 * m)?;
    if dual.len() != 2 * m {
        return Ok(false);
    }
    Ok(dual.iter().enumerate().all(|(k, s)| *s == State::Finite(conj[(2 * m - 1 - k) % m].clone())))
}

/// `sqrt(m+ni)` minus its floor for the given map.
pub fn sqrt_reduced(m: i64, n: i64, algorithm: Algorithm) -> Result<FieldElement> {
    let field = QuadraticField::new(GaussianInt::new(m, n))?;
    let s = FieldElement::sqrt_of(Arc::new(field));
    let a = match algorithm {
        Algorithm::T => floor_t(&s),
        _ => floor_h(&s)?,
    };
    Ok(s.sub_int(&a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_expr;

    fn v(s: &str) -> FieldElement {
        parse_expr(s).unwrap()
    }

    #[test]
    fn n1_examples() {
        assert!(in_n1(&v("sqrt(2+i)-2")).unwrap());
        assert!(!in_n1(&v("(sqrt(2)-1)/3")).unwrap());
        assert!(in_n1(&v("sqrt(2)-2")).unwrap());
        assert!(matches!(in_n1(&v("1/2")), Err(Error::NotQuadratic(_))));
        assert!(in_n2(&v("sqrt(2+i)-2")).unwrap());
        assert!(!in_n2(&v("(sqrt(2)-1)/3")).unwrap());
    }

    #[test]
    fn edge_point_with_conjugate_beyond_the_edge() {
        let a = v("i + ((1-i)/4)*sqrt(2)");
        assert!(in_region(&a, RegionId::Y(2)));
        assert_eq!(witness(&a, Criterion::N1).unwrap(), Some((RegionId::Y(2), RegionId::YBeyond(2))));
        assert_eq!(purely_periodic_oracle(&a, Algorithm::H).unwrap(), (true, Some(4)));
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(purely_periodic_oracle(&v("1-sqrt(2)+(-2+sqrt(2))*i"), Algorithm::H).unwrap(), (true, Some(4)));
        assert_eq!(purely_periodic_oracle(&v("sqrt(-3)-2i"), Algorithm::H).unwrap(), (true, Some(1)));
        assert!(!purely_periodic_oracle(&v("(sqrt(2)-1)/3"), Algorithm::H).unwrap().0);
    }

    #[test]
    fn dual_reversal_examples() {
        for s in ["sqrt(2+i)-2", "sqrt(2)-2", "sqrt(-3)-2i"] {
            assert!(verify_dual_reversal(&v(s)).unwrap(), "{s}");
        }
        assert!(verify_dual_reversal(&v("(sqrt(2)-1)/3")).is_err());
    }

    #[test]
    fn sqrt_reduced_examples() {
        assert_eq!(sqrt_reduced(2, 1, Algorithm::H).unwrap(), v("sqrt(2+i)-2"));
        assert_eq!(sqrt_reduced(3, 0, Algorithm::H).unwrap(), v("sqrt(3)-2"));
        assert_eq!(sqrt_reduced(-1, -3, Algorithm::H).unwrap(), v("sqrt(-1-3i)-(1-i)"));
        assert!(sqrt_reduced(3, 4, Algorithm::H).is_err());
    }

    #[test]
    fn report() {
        let r = classify(&v("sqrt(2+i)-2"), Algorithm::H).unwrap();
        assert!(r.predicate_result && r.oracle_result);
        assert_eq!(r.period_length, Some(4));
        assert!(r.witness.contains(&("alpha", RegionId::X(3), true)));
        assert!(r.witness.contains(&("conjugate", RegionId::W(3), true)));
    }
}
