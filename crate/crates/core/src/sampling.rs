//! Seeded test populations: rational points for the tilings and the pair
//! maps, and quadratic irrationals including points placed exactly on the
//! arcs `K_j` and segments `Y_j`.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cfengine::{expand, normalize_input, Algorithm, Status};
use crate::exactnum::{sqrt_gaussian, BiquadExpr, FieldElement, GaussianInt, GaussianRational, QuadraticField};
use crate::regions::{in_region, RegionId};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Radicands of the quadratic population: type A and type B fields.
pub const FIELDS: [(i64, i64); 7] = [(2, 1), (1, 2), (-3, 0), (0, 5), (3, 3), (2, 0), (3, 0)];

/// Real radicands `l` used for points on `K_j` and `Y_j`.
pub const REAL_RADICANDS: [i64; 5] = [2, 3, 5, 6, 7];

pub fn gaussian_rational<R: Rng>(rng: &mut R, height: i64, max_den: i64) -> GaussianRational {
    let re = rng.gen_range(-height..=height);
    let im = rng.gen_range(-height..=height);
    let den = rng.gen_range(1..=max_den);
    GaussianRational::from_parts(re, im, den)
}

fn nonzero_gaussian_rational<R: Rng>(rng: &mut R, height: i64, max_den: i64) -> GaussianRational {
    loop {
        let q = gaussian_rational(rng, height, max_den);
        if !q.is_zero() {
            return q;
        }
    }
}

/// `x + y sqrt(D)` with `D` from [`FIELDS`], `x` of height at most `height`
/// and a small irrational part `y`. Keeping `y` small keeps the periods short
/// and mixes purely periodic points (conjugate far away) with points whose
/// conjugate stays near the unit disk.
pub fn quadratic<R: Rng>(rng: &mut R, height: i64) -> FieldElement {
    let (m, n) = FIELDS[rng.gen_range(0..FIELDS.len())];
    let s = sqrt_gaussian(&GaussianInt::new(m, n)).expect("nonsquare radicand");
    let x = gaussian_rational(rng, height, 4);
    let y = nonzero_gaussian_rational(rng, 2, 6);
    s.mul_rational(&y).add_rational(&x)
}

fn sqrt_l(l: i64) -> FieldElement {
    FieldElement::sqrt_of(Arc::new(QuadraticField::new(GaussianInt::new(l, 0)).expect("nonsquare")))
}

fn real_sign(e: &FieldElement) -> i8 {
    BiquadExpr::re_of(e).sign().expect("real")
}

/// A real irrational `p + q sqrt(l)` with `lo < value < hi`.
pub fn real_irrational_between<R: Rng>(rng: &mut R, l: i64, lo: i64, hi: i64) -> FieldElement {
    let root = sqrt_l(l);
    loop {
        let p = GaussianRational::from_parts(rng.gen_range(-24..=24), 0, rng.gen_range(1..=8));
        let q = GaussianRational::from_parts(rng.gen_range(-8..=8), 0, rng.gen_range(1..=8));
        if q.is_zero() {
            continue;
        }
        let s = root.mul_rational(&q).add_rational(&p);
        let above = real_sign(&s.sub_int(&GaussianInt::new(lo, 0))) > 0;
        let below = real_sign(&s.sub_int(&GaussianInt::new(hi, 0))) < 0;
        if above && below {
            return s;
        }
    }
}

/// `i^{j-1}(-i + s(1+i))`, the point of `Y_j` with parameter `s`.
pub fn y_point(j: u8, s: &FieldElement) -> FieldElement {
    let rot: GaussianRational = GaussianInt::i_pow(j as i64 - 1).into();
    s.mul_rational(&GaussianRational::from_parts(1, 1, 1))
        .add_rational(&GaussianRational::from_parts(0, -1, 1))
        .mul_rational(&rot)
}

/// `i^{j-1} / ((1-s) + is)` for real `s < 0`: inversion carries the ray
/// `Y'_2` onto the arc `K_1`, and rotation by `i^{j-1}` onto `K_j`.
pub fn k_point(j: u8, s: &FieldElement) -> FieldElement {
    let rot: GaussianRational = GaussianInt::i_pow(j as i64 - 1).into();
    let y = s
        .mul_rational(&GaussianRational::from_parts(-1, 1, 1))
        .add_rational(&GaussianRational::one());
    y.recip().expect("nonzero").mul_rational(&rot)
}

/// An irrational point of `Y_j` (strictly inside the segment).
pub fn random_y_point<R: Rng>(rng: &mut R, j: u8) -> FieldElement {
    let l = REAL_RADICANDS[rng.gen_range(0..REAL_RADICANDS.len())];
    let s = real_irrational_between(rng, l, 0, 1);
    let z = y_point(j, &s);
    assert!(in_region(&z, RegionId::Y(j)), "constructed point {z} is off Y{j}");
    z
}

/// An irrational point of `K_j` other than the lattice points on the arc.
pub fn random_k_point<R: Rng>(rng: &mut R, j: u8) -> FieldElement {
    let l = REAL_RADICANDS[rng.gen_range(0..REAL_RADICANDS.len())];
    let s = real_irrational_between(rng, l, -6, 0);
    let z = k_point(j, &s);
    assert!(in_region(&z, RegionId::K(j)), "constructed point {z} is off K{j}");
    z
}

/// Where a population member came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Origin {
    Random,
    /// A state on the cycle of a random orbit.
    Cycle,
    KArc(u8),
    YSegment(u8),
}

#[derive(Clone, Debug)]
pub struct Sample {
    pub alpha: FieldElement,
    pub origin: Origin,
}

/// Quadratic irrationals in the closed square: random elements folded in by
/// `floor_H`, states on the cycles of their H orbits, and constructed points
/// on every `K_j` and `Y_j`.
pub fn quadratic_population(seed: u64, count: usize) -> Vec<Sample> {
    let mut r = rng(seed);
    let mut out = Vec::with_capacity(count);
    let boundary = count / 5;
    for k in 0..boundary {
        let j = (k % 4) as u8 + 1;
        let (alpha, origin) = if k % 8 < 4 {
            (random_k_point(&mut r, j), Origin::KArc(j))
        } else {
            (random_y_point(&mut r, j), Origin::YSegment(j))
        };
        out.push(Sample { alpha, origin });
    }
    while out.len() < count {
        let (_, alpha) = normalize_input(&quadratic(&mut r, 12), Algorithm::H).expect("floor_H is total");
        let e = expand(&alpha, Algorithm::H, 2000).expect("H orbit");
        out.push(Sample { alpha: alpha.clone(), origin: Origin::Random });
        if e.status == Status::Periodic && out.len() < count {
            let k = e.preperiod.len() + r.gen_range(0..e.period.len());
            out.push(Sample { alpha: e.states[k].clone(), origin: Origin::Cycle });
        }
    }
    out
}

/// A rational point of the plane: generic points with small denominators
/// and points placed exactly on box edges and corners.
pub fn tiling_point<R: Rng>(rng: &mut R) -> FieldElement {
    let range = 6i64;
    match rng.gen_range(0..3) {
        0 => gaussian_rational(rng, range * 12, 12).into(),
        1 => {
            // one half-integer coordinate: on an edge
            let u = GaussianRational::from_parts(2 * rng.gen_range(-range..=range) + 1, 0, 2);
            let v = GaussianRational::from_parts(rng.gen_range(-range * 10..=range * 10), 0, 10);
            let (u, v) = if rng.gen_bool(0.5) { (u, v) } else { (v, u) };
            from_uv(&u, &v)
        }
        _ => {
            // both half-integers: a corner, which is a Gaussian integer
            let u = GaussianRational::from_parts(2 * rng.gen_range(-range..=range) + 1, 0, 2);
            let v = GaussianRational::from_parts(2 * rng.gen_range(-range..=range) + 1, 0, 2);
            from_uv(&u, &v)
        }
    }
}

fn from_uv(u: &GaussianRational, v: &GaussianRational) -> FieldElement {
    (&(u * &GaussianRational::from_parts(1, 1, 1)) + &(v * &GaussianRational::from_parts(1, -1, 1))).into()
}

/// A rational `z` in the open sector `X_j`.
pub fn rational_in_sector<R: Rng>(rng: &mut R, j: u8) -> GaussianRational {
    loop {
        let u = GaussianRational::from_parts(rng.gen_range(-500..500), 0, 1000);
        let v = GaussianRational::from_parts(rng.gen_range(-500..500), 0, 1000);
        let z = from_uv(&u, &v);
        if !z.is_zero() && in_region(&z, RegionId::X(j)) {
            return z.as_rational().expect("rational").clone();
        }
    }
}

/// A rational `w` in `W_j` with `|w| < 4`.
pub fn rational_in_w<R: Rng>(rng: &mut R, j: u8) -> GaussianRational {
    loop {
        let w = GaussianRational::from_parts(rng.gen_range(-400..=400), rng.gen_range(-400..=400), 100);
        let fw: FieldElement = w.clone().into();
        if in_region(&fw, RegionId::W(j)) {
            return w;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::regions::in_x_closed;

    #[test]
    fn constructions_land_on_their_sets() {
        let mut r = rng(1);
        for j in 1..=4 {
            let k = random_k_point(&mut r, j);
            assert!(!k.is_rational());
            let y = random_y_point(&mut r, j);
            assert!(!y.is_rational());
            assert!(in_x_closed(&k) && in_x_closed(&y));
        }
    }

    #[test]
    fn population_is_deterministic_and_in_domain() {
        let a = quadratic_population(5, 40);
        let b = quadratic_population(5, 40);
        assert_eq!(a.len(), 40);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.alpha, y.alpha);
            assert!(in_x_closed(&x.alpha));
            assert!(!x.alpha.is_rational());
        }
    }

    #[test]
    fn sector_samplers() {
        let mut r = rng(2);
        for j in 1..=8 {
            let z: FieldElement = rational_in_sector(&mut r, j).into();
            assert!(in_region(&z, RegionId::X(j)));
            let w: FieldElement = rational_in_w(&mut r, j).into();
            assert!(in_region(&w, RegionId::W(j)));
        }
    }
}
