//! The even lattice `(1+i)Z[i]`, its L-classes, the Q_w and S_w tilings and
//! the three floor functions.
//!
//! Points are located in the coordinates `z = u(1+i) + v(1-i)`, i.e.
//! `u = (Re z + Im z)/2`, `v = (Re z - Im z)/2`. An even lattice point has
//! integer coordinates, so every boundary question reduces to comparing
//! `u + 1/2` and `v + 1/2` with integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{BiquadExpr, FieldElement, GaussianInt, GaussianRational};

/// Partial-quotient class: `Diag(k)` is `L(i^k(1+i))`, `Axis(k)` is `L(i^k 2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LClass {
    Diag(u8),
    Axis(u8),
}

impl LClass {
    pub fn k(self) -> u8 {
        match self {
            LClass::Diag(k) | LClass::Axis(k) => k,
        }
    }
}

/// Lattice coordinates `(u, v)` of an even Gaussian integer.
pub fn lattice_coords(w: &GaussianInt) -> Result<(BigInt, BigInt)> {
    if !w.is_even() {
        return Err(Error::NotEven(w.to_string()));
    }
    let two = BigInt::from(2);
    Ok(((&w.re + &w.im) / &two, (&w.re - &w.im) / &two))
}

/// `u(1+i) + v(1-i)`.
pub fn from_lattice_coords(u: &BigInt, v: &BigInt) -> GaussianInt {
    GaussianInt { re: u + v, im: u - v }
}

/// Coordinates of `w * (-i)^k` given those of `w`.
fn rotate_back<T: Clone + std::ops::Neg<Output = T>>(u: T, v: T, k: u8) -> (T, T) {
    match k % 4 {
        0 => (u, v),
        1 => (-v, u),
        2 => (-u, -v),
        _ => (v, -u),
    }
}

pub fn l_class(w: &GaussianInt) -> Result<LClass> {
    if w.is_zero() {
        return Err(Error::NotEven("0".into()));
    }
    let (u, v) = lattice_coords(w)?;
    for k in 0..4u8 {
        let (a, b) = rotate_back(u.clone(), v.clone(), k);
        if a.is_positive() && b.is_zero() {
            return Ok(LClass::Diag(k));
        }
        if a.is_positive() && b.is_positive() {
            return Ok(LClass::Axis(k));
        }
    }
    unreachable!("the eight classes cover (1+i)Z[i] minus 0")
}

/// Exact real coordinates of a point.
#[derive(Clone, Debug)]
pub struct Coord {
    pub u: BiquadExpr,
    pub v: BiquadExpr,
}

impl Coord {
    pub fn of(z: &FieldElement) -> Self {
        let re = BiquadExpr::re_of(z);
        let im = BiquadExpr::im_of(z);
        let half = GaussianRational::from_parts(1, 0, 2);
        Coord { u: re.add(&im).scale(&half), v: re.sub(&im).scale(&half) }
    }
}

/// Position of a coordinate relative to `[-1/2, 1/2]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pos {
    Below,
    AtLow,
    Inside,
    AtHigh,
    Above,
}

impl std::ops::Neg for Pos {
    type Output = Pos;
    fn neg(self) -> Pos {
        match self {
            Pos::Below => Pos::Above,
            Pos::AtLow => Pos::AtHigh,
            Pos::Inside => Pos::Inside,
            Pos::AtHigh => Pos::AtLow,
            Pos::Above => Pos::Below,
        }
    }
}

impl Pos {
    pub fn in_open(self) -> bool {
        self == Pos::Inside
    }

    /// `[-1/2, 1/2)`
    pub fn in_lower_closed(self) -> bool {
        matches!(self, Pos::AtLow | Pos::Inside)
    }

    /// `(-1/2, 1/2]`
    pub fn in_upper_closed(self) -> bool {
        matches!(self, Pos::Inside | Pos::AtHigh)
    }

    pub fn in_closed(self) -> bool {
        matches!(self, Pos::AtLow | Pos::Inside | Pos::AtHigh)
    }
}

/// `floor(u + 1/2)` and `floor(v + 1/2)` together with whether `u + 1/2`
/// (resp. `v + 1/2`) is an integer. Enough to place `z` against every
/// translate of the unit box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoxCoords {
    pub fu: BigInt,
    pub fv: BigInt,
    pub edge_u: bool,
    pub edge_v: bool,
}

fn floor_with_edge(c: &BiquadExpr) -> (BigInt, bool) {
    let shifted = c.add_const(&GaussianRational::from_parts(1, 0, 2));
    let f = shifted.floor().expect("coordinates are real");
    let frac = shifted.add_const(&GaussianRational::from(GaussianInt::new(-f.clone(), 0)));
    let edge = frac.is_zero();
    (f, edge)
}

impl BoxCoords {
    pub fn of(z: &FieldElement) -> Self {
        let c = Coord::of(z);
        let (fu, edge_u) = floor_with_edge(&c.u);
        let (fv, edge_v) = floor_with_edge(&c.v);
        BoxCoords { fu, fv, edge_u, edge_v }
    }

    fn pos(f: &BigInt, edge: bool, t: &BigInt) -> Pos {
        if f < t {
            Pos::Below
        } else if f == t {
            if edge {
                Pos::AtLow
            } else {
                Pos::Inside
            }
        } else if *f == t + BigInt::one() {
            if edge {
                Pos::AtHigh
            } else {
                Pos::Above
            }
        } else {
            Pos::Above
        }
    }

    /// Positions of the coordinates of `z - w` for `w` with lattice
    /// coordinates `(wu, wv)`.
    pub fn relative(&self, wu: &BigInt, wv: &BigInt) -> (Pos, Pos) {
        (Self::pos(&self.fu, self.edge_u, wu), Self::pos(&self.fv, self.edge_v, wv))
    }

    /// Lattice coordinates of `floor_T(z)`.
    pub fn floor_t_coords(&self) -> (BigInt, BigInt) {
        (self.fu.clone(), self.fv.clone())
    }
}

/// `floor(u+1/2)(1+i) + floor(v+1/2)(1-i)`.
pub fn floor_t(z: &FieldElement) -> GaussianInt {
    let b = BoxCoords::of(z);
    from_lattice_coords(&b.fu, &b.fv)
}

/// Membership of `z` in `Q_w`, given the box coordinates of `z`.
pub fn in_q_w_box(b: &BoxCoords, w: &GaussianInt) -> Result<bool> {
    let (wu, wv) = lattice_coords(w)?;
    let (pu, pv) = b.relative(&wu, &wv);
    if w.is_zero() {
        return Ok(pu.in_closed() && pv.in_closed());
    }
    Ok(match l_class(w)? {
        LClass::Diag(k) => {
            let (pu, pv) = rotate_back(pu, pv, k);
            pu.in_upper_closed() && pv.in_closed()
        }
        LClass::Axis(k) => {
            let (pu, pv) = rotate_back(pu, pv, k);
            pu.in_upper_closed() && pv.in_upper_closed()
        }
    })
}

pub fn in_q_w(z: &FieldElement, w: &GaussianInt) -> Result<bool> {
    in_q_w_box(&BoxCoords::of(z), w)
}

/// The nine even lattice points whose coordinates differ from `(u0, v0)`
/// by at most one.
fn neighborhood(u0: &BigInt, v0: &BigInt) -> Vec<GaussianInt> {
    let mut out = Vec::with_capacity(9);
    for du in -1..=1i32 {
        for dv in -1..=1i32 {
            out.push(from_lattice_coords(&(u0 + du), &(v0 + dv)));
        }
    }
    out
}

/// All even `w` near `z` with `z` in `Q_w`. The tiling makes this a
/// singleton; the list is exposed so callers can check it.
pub fn q_tiles_containing(z: &FieldElement) -> Vec<GaussianInt> {
    let b = BoxCoords::of(z);
    neighborhood(&b.fu, &b.fv)
        .into_iter()
        .filter(|w| in_q_w_box(&b, w).expect("even by construction"))
        .collect()
}

fn unique(hits: Vec<GaussianInt>, z: &FieldElement, what: &str) -> Result<GaussianInt> {
    match hits.len() {
        1 => Ok(hits.into_iter().next().unwrap()),
        n => Err(Error::Tiling(format!("{z} lies in {n} {what} cells"))),
    }
}

/// `floor_H`: the Gaussian integer itself on `Z[i]`, otherwise the unique even
/// `w` with `z` in `Q_w`.
pub fn floor_h(z: &FieldElement) -> Result<GaussianInt> {
    if let Some(g) = z.to_gaussian_int() {
        return Ok(g);
    }
    unique(q_tiles_containing(z), z, "Q_w")
}

/// `|z - c|^2 - r2` as a real expression.
pub fn dist_sq_minus(z: &FieldElement, c: &GaussianRational, r2: &GaussianRational) -> BiquadExpr {
    BiquadExpr::abs_sq_of(&z.add_rational(&-c)).add_const(&-r2)
}

/// Sign of a real expression built by the region predicates.
pub fn sign(e: &BiquadExpr) -> i8 {
    e.sign().expect("region quantities are real by construction")
}

pub fn in_s_w(z: &FieldElement, w: &GaussianInt) -> Result<bool> {
    let one = GaussianRational::one();
    let near = |c: &GaussianInt| sign(&dist_sq_minus(z, &c.into(), &one));
    if w.is_zero() {
        return Ok(near(w) < 0);
    }
    let class = l_class(w)?;
    if near(w) >= 0 {
        return Ok(false);
    }
    let rot = GaussianInt::i_pow(class.k() as i64);
    let diag = w - &(&rot * &GaussianInt::new(1, 1));
    if near(&diag) < 0 {
        return Ok(false);
    }
    if let LClass::Axis(_) = class {
        let anti = w - &(&rot * &GaussianInt::new(1, -1));
        if near(&anti) < 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All even `w` with `z` in `S_w`.
pub fn s_tiles_containing(z: &FieldElement) -> Vec<GaussianInt> {
    let b = BoxCoords::of(z);
    neighborhood(&b.fu, &b.fv)
        .into_iter()
        .filter(|w| in_s_w(z, w).expect("even by construction"))
        .collect()
}

/// `floor_d`: the Gaussian integer itself on `Z[i]`, otherwise the unique even
/// `w` with `z` in `S_w`.
pub fn floor_dual(z: &FieldElement) -> Result<GaussianInt> {
    if let Some(g) = z.to_gaussian_int() {
        return Ok(g);
    }
    unique(s_tiles_containing(z), z, "S_w")
}

/// Whether `g` lies in `1 + (1+i)Z[i]`.
pub fn is_odd(g: &GaussianInt) -> bool {
    (&g.re + &g.im).is_odd()
}
