//! The H, T and dual expansion maps as exact orbit generators.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exactnum::{FieldElement, GaussianInt};
use crate::regions::{self, LClass};

pub const DEFAULT_MAX_STEPS: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    H,
    T,
    D,
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Algorithm::H => "H",
            Algorithm::T => "T",
            Algorithm::D => "D",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QuotientClass {
    Zero,
    Even(LClass),
    OddFinal,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartialQuotient {
    pub value: GaussianInt,
    pub klass: QuotientClass,
}

impl PartialQuotient {
    pub fn new(value: GaussianInt) -> Self {
        let klass = if value.is_zero() {
            QuotientClass::Zero
        } else if value.is_even() {
            QuotientClass::Even(regions::l_class(&value).expect("nonzero even"))
        } else {
            QuotientClass::OddFinal
        };
        PartialQuotient { value, klass }
    }
}

impl fmt::Display for PartialQuotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Finite,
    Periodic,
    MinusOneTail,
    Truncated,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Finite => "finite",
            Status::Periodic => "periodic",
            Status::MinusOneTail => "minus-one-tail",
            Status::Truncated => "truncated",
        }
    }
}

/// An orbit point; the dual map can leave `C` for the point at infinity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum State {
    Finite(FieldElement),
    Infinity,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion {
    pub algorithm: Algorithm,
    pub initial: GaussianInt,
    pub preperiod: Vec<PartialQuotient>,
    pub period: Vec<PartialQuotient>,
    pub status: Status,
    /// Distinct orbit states `alpha_(1), alpha_(2), ...` in order of visit.
    pub states: Vec<FieldElement>,
}

impl Expansion {
    /// All emitted quotients, preperiod first.
    pub fn quotients(&self) -> impl Iterator<Item = &PartialQuotient> {
        self.preperiod.iter().chain(self.period.iter())
    }

    pub fn is_purely_periodic(&self) -> bool {
        self.status == Status::Periodic && self.preperiod.is_empty()
    }
}

fn domain_err(msg: String) -> Error {
    Error::Domain(msg)
}

/// One step of the H map: `a = floor_H(1/z)`, `z' = 1/z - a`.
pub fn step_h(z: &FieldElement) -> Result<(PartialQuotient, FieldElement)> {
    if z.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let inv = z.recip()?;
    let a = regions::floor_h(&inv)?;
    let next = inv.sub_int(&a);
    if !regions::in_x_closed(&next) {
        return Err(domain_err(format!("H state {next} left the closed square")));
    }
    Ok((PartialQuotient::new(a), next))
}

/// One step of the T map: `a = floor_T(1/z)`, `z' = 1/z - a`.
pub fn step_t(z: &FieldElement) -> Result<(PartialQuotient, FieldElement)> {
    if z.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let inv = z.recip()?;
    let a = regions::floor_t(&inv);
    let next = inv.sub_int(&a);
    if !regions::in_x(&next) {
        return Err(domain_err(format!("T state {next} left the half-open square")));
    }
    Ok((PartialQuotient::new(a), next))
}

/// One step of the dual map: `a = floor_d(z)`, `z' = 1/(z - a)`, or infinity
/// when `z` is a Gaussian integer.
pub fn step_d(z: &FieldElement) -> Result<(PartialQuotient, State)> {
    if regions::modulus_sign(z) < 0 {
        return Err(domain_err(format!("dual map needs |z| >= 1, got {z}")));
    }
    let a = regions::floor_dual(z)?;
    let diff = z.sub_int(&a);
    if diff.is_zero() {
        return Ok((PartialQuotient::new(a), State::Infinity));
    }
    let next = diff.recip()?;
    if regions::modulus_sign(&next) < 0 {
        return Err(domain_err(format!("dual state {next} fell inside the unit disk")));
    }
    Ok((PartialQuotient::new(a), State::Finite(next)))
}

pub fn step(z: &FieldElement, algorithm: Algorithm) -> Result<(PartialQuotient, State)> {
    match algorithm {
        Algorithm::H => step_h(z).map(|(a, n)| (a, State::Finite(n))),
        Algorithm::T => step_t(z).map(|(a, n)| (a, State::Finite(n))),
        Algorithm::D => step_d(z),
    }
}

fn check_domain(z: &FieldElement, algorithm: Algorithm) -> Result<()> {
    let ok = match algorithm {
        Algorithm::H => regions::in_x_closed(z),
        Algorithm::T => regions::in_x(z),
        Algorithm::D => regions::modulus_sign(z) >= 0,
    };
    if ok {
        Ok(())
    } else {
        Err(domain_err(format!("{z} is outside the domain of the {algorithm} map")))
    }
}

/// Splits `alpha` into `a0 + z` with `z` in the domain of `algorithm`.
/// The dual map takes its input unchanged, so `a0 = 0` there.
pub fn normalize_input(alpha: &FieldElement, algorithm: Algorithm) -> Result<(GaussianInt, FieldElement)> {
    let a0 = match algorithm {
        Algorithm::H => regions::floor_h(alpha)?,
        Algorithm::T => regions::floor_t(alpha),
        Algorithm::D => {
            check_domain(alpha, algorithm)?;
            GaussianInt::zero()
        }
    };
    let z = alpha.sub_int(&a0);
    Ok((a0, z))
}

fn is_terminal(z: &FieldElement, algorithm: Algorithm) -> bool {
    algorithm != Algorithm::D && z.is_zero()
}

fn is_minus_one(z: &FieldElement) -> bool {
    z.to_gaussian_int().is_some_and(|g| g == GaussianInt::new(-1, 0))
}

/// Runs `algorithm` from `alpha`, which must already lie in its domain.
pub fn expand(alpha: &FieldElement, algorithm: Algorithm, max_steps: usize) -> Result<Expansion> {
    check_domain(alpha, algorithm)?;
    let mut quotients: Vec<PartialQuotient> = Vec::new();
    let mut states: Vec<FieldElement> = Vec::new();
    let mut seen: HashMap<FieldElement, usize> = HashMap::new();
    let mut z = alpha.clone();
    let done = |quotients: Vec<PartialQuotient>, period, status, states| Expansion {
        algorithm,
        initial: GaussianInt::zero(),
        preperiod: quotients,
        period,
        status,
        states,
    };
    loop {
        if is_terminal(&z, algorithm) {
            return Ok(done(quotients, vec![], Status::Finite, states));
        }
        if algorithm == Algorithm::T && is_minus_one(&z) {
            states.push(z);
            let tail = vec![PartialQuotient::new(GaussianInt::zero())];
            return Ok(done(quotients, tail, Status::MinusOneTail, states));
        }
        if let Some(&j) = seen.get(&z) {
            let period = quotients.split_off(j);
            return Ok(done(quotients, period, Status::Periodic, states));
        }
        if quotients.len() >= max_steps {
            return Ok(done(quotients, vec![], Status::Truncated, states));
        }
        seen.insert(z.clone(), states.len());
        states.push(z.clone());
        let (a, next) = step(&z, algorithm)?;
        quotients.push(a);
        match next {
            State::Finite(n) => z = n,
            State::Infinity => return Ok(done(quotients, vec![], Status::Finite, states)),
        }
    }
}

/// Normalizes an arbitrary input and expands the remainder.
pub fn expand_value(alpha: &FieldElement, algorithm: Algorithm, max_steps: usize) -> Result<Expansion> {
    let (a0, z) = normalize_input(alpha, algorithm)?;
    let mut e = expand(&z, algorithm, max_steps)?;
    e.initial = a0;
    Ok(e)
}

/// The first `n` states of the orbit of `alpha` (fewer if it terminates).
pub fn orbit(alpha: &FieldElement, algorithm: Algorithm, n: usize) -> Result<Vec<State>> {
    let mut out = vec![State::Finite(alpha.clone())];
    let mut z = alpha.clone();
    while out.len() < n {
        if is_terminal(&z, algorithm) {
            break;
        }
        let (_, next) = step(&z, algorithm)?;
        out.push(next.clone());
        match next {
            State::Finite(w) => z = w,
            State::Infinity => break,
        }
    }
    Ok(out)
}

/// `tail` pulled back through `quotients`, last quotient first.
fn back_substitute(quotients: &[PartialQuotient], tail: State, algorithm: Algorithm) -> Result<State> {
    let mut z = tail;
    for a in quotients.iter().rev() {
        z = match algorithm {
            // alpha_n = 1 / (a_n + alpha_{n+1})
            Algorithm::H | Algorithm::T => match z {
                State::Finite(w) => State::Finite(w.add_rational(&a.value.clone().into()).recip()?),
                State::Infinity => State::Finite(FieldElement::zero()),
            },
            // alpha_n = a_n + 1 / alpha_{n+1}
            Algorithm::D => match z {
                State::Finite(w) => State::Finite(w.recip()?.add_rational(&a.value.clone().into())),
                State::Infinity => State::Finite(a.value.clone().into()),
            },
        };
    }
    Ok(z)
}

/// Value of a terminating expansion. A minus-one tail contributes the fixed
/// point `-1`.
pub fn evaluate_finite(e: &Expansion) -> Result<FieldElement> {
    let tail = match (e.status, e.algorithm) {
        (Status::Finite, Algorithm::D) => State::Infinity,
        (Status::Finite, _) => State::Finite(FieldElement::zero()),
        (Status::MinusOneTail, _) => State::Finite(FieldElement::from(-1)),
        _ => return Err(Error::Verification(format!("status {} is not terminating", e.status.as_str()))),
    };
    match back_substitute(&e.preperiod, tail, e.algorithm)? {
        State::Finite(z) => Ok(z.add_rational(&e.initial.clone().into())),
        State::Infinity => Err(Error::Verification("empty dual expansion".into())),
    }
}

/// Checks a periodic expansion of `alpha` without the floor functions: the
/// recorded post-preperiod state is fixed by the Möbius map of the period,
/// and pulling it back through the preperiod and initial quotient gives
/// `alpha`.
pub fn periodic_fixpoint_check(e: &Expansion, alpha: &FieldElement) -> Result<bool> {
    if e.status != Status::Periodic || e.period.is_empty() {
        return Err(Error::Verification("expansion is not periodic".into()));
    }
    let Some(s) = e.states.get(e.preperiod.len()) else {
        return Err(Error::Verification("expansion carries no orbit states".into()));
    };
    let s = State::Finite(s.clone());
    if back_substitute(&e.period, s.clone(), e.algorithm)? != s {
        return Ok(false);
    }
    let State::Finite(head) = back_substitute(&e.preperiod, s, e.algorithm)? else {
        return Ok(false);
    };
    Ok(head.add_rational(&e.initial.clone().into()) == *alpha)
}
