//! Exact point location: the fundamental domain `X`, the tilings by `Q_w` and
//! `S_w`, and the atlas of regions `X_j`, `W_j`, `K_j`, `K'_j`, `Y_j`, `Y'_j`.

pub mod lattice;

use std::fmt;

pub use lattice::{
    floor_dual, floor_h, floor_t, in_q_w, in_s_w, l_class, q_tiles_containing, s_tiles_containing,
    BoxCoords, Coord, LClass, Pos,
};

use crate::exactnum::{BiquadExpr, FieldElement, GaussianInt, GaussianRational};
use lattice::{dist_sq_minus, sign};

/// Named regions. Indices are 1-based as in the usual numbering: `X(1..=8)`,
/// `W(1..=8)`, `K(1..=4)` and so on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RegionId {
    X(u8),
    XClosure(u8),
    W(u8),
    WClosure(u8),
    K(u8),
    KPrime(u8),
    Y(u8),
    YPrime(u8),
    /// The ray of the line through `Y_j` beyond its `s = 1` end.
    YBeyond(u8),
    /// `X = {u(1+i) + v(1-i) : -1/2 <= u, v < 1/2}`.
    XHalfOpen,
    XInterior,
    XClosed,
    /// `|z| >= 1`, the domain of the dual map.
    UnitDiskComplement,
}

impl fmt::Display for RegionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RegionId::X(j) => write!(f, "X{j}"),
            RegionId::XClosure(j) => write!(f, "cl(X{j})"),
            RegionId::W(j) => write!(f, "W{j}"),
            RegionId::WClosure(j) => write!(f, "cl(W{j})"),
            RegionId::K(j) => write!(f, "K{j}"),
            RegionId::KPrime(j) => write!(f, "K'{j}"),
            RegionId::Y(j) => write!(f, "Y{j}"),
            RegionId::YPrime(j) => write!(f, "Y'{j}"),
            RegionId::YBeyond(j) => write!(f, "Y''{j}"),
            RegionId::XHalfOpen => write!(f, "X"),
            RegionId::XInterior => write!(f, "int(X)"),
            RegionId::XClosed => write!(f, "cl(X)"),
            RegionId::UnitDiskComplement => write!(f, "D"),
        }
    }
}

fn ipow(k: i64) -> GaussianRational {
    GaussianInt::i_pow(k).into()
}

fn half() -> GaussianRational {
    GaussianRational::from_parts(1, 0, 2)
}

fn one() -> GaussianRational {
    GaussianRational::one()
}

/// Sign of `|z|^2 - 1`.
pub fn modulus_sign(z: &FieldElement) -> i8 {
    sign(&dist_sq_minus(z, &GaussianRational::zero(), &one()))
}

fn box_pos(z: &FieldElement) -> (Pos, Pos) {
    BoxCoords::of(z).relative(&0.into(), &0.into())
}

pub fn in_x(z: &FieldElement) -> bool {
    let (u, v) = box_pos(z);
    u.in_lower_closed() && v.in_lower_closed()
}

pub fn in_x_closed(z: &FieldElement) -> bool {
    let (u, v) = box_pos(z);
    u.in_closed() && v.in_closed()
}

pub fn in_x_interior(z: &FieldElement) -> bool {
    let (u, v) = box_pos(z);
    u.in_open() && v.in_open()
}

/// Signs of `|z - c|^2 - 1/2` for the circles bounding sector `j`.
fn sector_signs(z: &FieldElement, j: u8) -> Vec<i8> {
    let j = j as i64;
    if j <= 4 {
        let c0 = &GaussianRational::from_parts(1, 1, 1) * &half();
        (0..=2).map(|k| sign(&dist_sq_minus(z, &(&ipow(k + j - 1) * &c0), &half()))).collect()
    } else {
        let c0 = &GaussianRational::from_parts(1, -1, 1) * &half();
        (0..=1).map(|k| sign(&dist_sq_minus(z, &(&ipow(k + j - 5) * &c0), &half()))).collect()
    }
}

fn in_sector(z: &FieldElement, j: u8, closed: bool) -> bool {
    let base = if closed { in_x_closed(z) } else { in_x(z) };
    if !base {
        return false;
    }
    let signs = sector_signs(z, j);
    match (j <= 4, closed) {
        (true, false) => signs.iter().all(|&s| s > 0),
        (true, true) => signs.iter().all(|&s| s >= 0),
        (false, false) => signs.iter().all(|&s| s < 0),
        (false, true) => signs.iter().all(|&s| s <= 0),
    }
}

fn in_w(z: &FieldElement, j: u8, closed: bool) -> bool {
    let m = modulus_sign(z);
    if m < 0 || (m == 0 && !closed) {
        return false;
    }
    let j = j as i64;
    let c0 = GaussianRational::from_parts(1, -1, 1);
    let ks: &[i64] = if j <= 4 { &[0] } else { &[0, 1] };
    let shift = if j <= 4 { j - 1 } else { j - 5 };
    ks.iter().all(|&k| sign(&dist_sq_minus(z, &(&ipow(k + shift) * &c0), &one())) >= 0)
}

/// On the circle `|z - i^{j-1}(1-i)/2| = sqrt(2)/2`; returns the sign of
/// `|z|^2 - 1` when so.
fn on_k_circle(z: &FieldElement, j: u8) -> Option<i8> {
    let c = &ipow(j as i64 - 1) * &GaussianRational::from_parts(1, -1, 2);
    (sign(&dist_sq_minus(z, &c, &half())) == 0).then(|| modulus_sign(z))
}

/// For `zeta = z i^{-(j-1)} = s - it`: `None` off the line `s + t = 1`,
/// otherwise the sign of `s` and of `s - 1`.
fn on_y_line(z: &FieldElement, j: u8) -> Option<(i8, i8)> {
    let zeta = z.mul_rational(&ipow(-(j as i64 - 1)));
    let s = BiquadExpr::re_of(&zeta);
    let t = BiquadExpr::im_of(&zeta).scale(&GaussianRational::from(-1));
    if sign(&s.add(&t).add_const(&-one())) != 0 {
        return None;
    }
    Some((sign(&s), sign(&s.add_const(&-one()))))
}

pub fn in_region(z: &FieldElement, r: RegionId) -> bool {
    match r {
        RegionId::X(j) => in_sector(z, j, false),
        RegionId::XClosure(j) => in_sector(z, j, true),
        RegionId::W(j) => in_w(z, j, false),
        RegionId::WClosure(j) => in_w(z, j, true),
        RegionId::K(j) => on_k_circle(z, j).is_some_and(|m| m <= 0),
        RegionId::KPrime(j) => on_k_circle(z, j).is_some_and(|m| m > 0),
        RegionId::Y(j) => on_y_line(z, j).is_some_and(|(s, s1)| s >= 0 && s1 <= 0),
        RegionId::YPrime(j) => on_y_line(z, j).is_some_and(|(s, _)| s <= 0),
        RegionId::YBeyond(j) => on_y_line(z, j).is_some_and(|(_, s1)| s1 > 0),
        RegionId::XHalfOpen => in_x(z),
        RegionId::XInterior => in_x_interior(z),
        RegionId::XClosed => in_x_closed(z),
        RegionId::UnitDiskComplement => modulus_sign(z) >= 0,
    }
}

/// Whether `z` lies in any of `K_1..K_4` or `Y_1..Y_4`.
pub fn on_boundary_arcs(z: &FieldElement) -> bool {
    (1..=4).any(|j| in_region(z, RegionId::K(j)) || in_region(z, RegionId::Y(j)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::sqrt_gaussian;

    fn q(re: i64, im: i64, den: i64) -> FieldElement {
        GaussianRational::from_parts(re, im, den).into()
    }

    fn example() -> FieldElement {
        sqrt_gaussian(&GaussianInt::new(2, 1)).unwrap().sub_int(&GaussianInt::new(2, 0))
    }

    #[test]
    fn example_sits_in_x3_and_conjugate_in_w3() {
        let a = example();
        let hits: Vec<u8> = (1..=8).filter(|&j| in_region(&a, RegionId::X(j))).collect();
        assert_eq!(hits, vec![3]);
        let c = a.conjugate().unwrap();
        assert!(in_region(&c, RegionId::W(3)));
    }

    #[test]
    fn k_membership_of_half_plus_half_i() {
        let z = q(1, 1, 2);
        for j in 1..=4 {
            assert!(!in_region(&z, RegionId::K(j)));
        }
    }

    #[test]
    fn k_and_y_points() {
        // 0, 1 and -i lie on the K_1 circle
        assert!(in_region(&q(0, 0, 1), RegionId::K(1)));
        assert!(in_region(&q(1, 0, 1), RegionId::K(1)));
        assert!(in_region(&q(1, -1, 1), RegionId::KPrime(1)));
        // Y_1 runs from -i to 1, Y'_1 continues beyond -i
        assert!(in_region(&q(1, -1, 2), RegionId::Y(1)));
        assert!(in_region(&q(-1, -2, 1), RegionId::YPrime(1)));
        assert!(!in_region(&q(-1, -2, 1), RegionId::Y(1)));
        // Y_4 is the u = -1/2 edge from -1 to -i, inside X
        let z = q(-1, -1, 2);
        assert!(in_region(&z, RegionId::Y(4)));
        assert!(in_x(&z));
        assert!(!in_x(&q(1, 1, 2)));
        assert!(in_x_closed(&q(1, 1, 2)));
    }

    #[test]
    fn w_boundaries() {
        assert!(!in_region(&q(0, 1, 1), RegionId::W(1)));
        assert!(in_region(&q(0, 1, 1), RegionId::WClosure(1)));
        assert!(in_region(&q(-2, 0, 1), RegionId::W(5)));
        // |z - (1+i)| < 1 excludes 3/2 + i/2 from W_5 but not from W_1
        assert!(!in_region(&q(3, 1, 2), RegionId::W(5)));
        assert!(in_region(&q(3, 1, 2), RegionId::W(1)) == (sign(&dist_sq_minus(&q(3, 1, 2), &GaussianRational::from_parts(1, -1, 1), &one())) >= 0));
    }

    #[test]
    fn sectors_partition_generic_points() {
        for (a, b) in [(1, 7), (-3, 2), (5, -8), (-9, -1), (4, 4), (9, 1), (1, -9), (-2, 7)] {
            let z = q(a, b, 20);
            let n = (1..=8).filter(|&j| in_region(&z, RegionId::X(j))).count();
            assert_eq!(n, 1, "{z}");
        }
    }
}
