//! Seeded verification suites. Every check runs on exact values and reports
//! pass/fail counts; the same seed always produces the same report.

use std::fmt;

use rand::Rng;

use crate::cfengine::{evaluate_finite, expand, step_h, step_t, Algorithm, Status, DEFAULT_MAX_STEPS};
use crate::classify::{classify, purely_periodic_oracle, sqrt_reduced, verify_dual_reversal};
use crate::error::Result;
use crate::exactnum::{sqrt_gaussian, FieldElement, GaussianInt, GaussianRational};
use crate::natext::{density_identity_check, ext_step, ext_step_with_quotient, in_xhat, in_xtilde, injectivity_sample, ExtPoint};
use crate::regions::lattice::{dist_sq_minus, sign};
use crate::regions::{
    floor_h, floor_t, in_region, in_s_w, in_x, in_x_closed, l_class, on_boundary_arcs, q_tiles_containing,
    s_tiles_containing, LClass, RegionId,
};
use crate::sampling::{
    gaussian_rational, quadratic_population, random_k_point, random_y_point, rational_in_sector, rational_in_w, rng,
    tiling_point, Sample,
};

const MAX_DETAILS: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Tilings,
    Lemmas,
    Periodicity,
    Dual,
    Natext,
    SqrtSweep,
}

impl Suite {
    pub const ALL: [Suite; 6] =
        [Suite::Tilings, Suite::Lemmas, Suite::Periodicity, Suite::Dual, Suite::Natext, Suite::SqrtSweep];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Tilings => "tilings",
            Suite::Lemmas => "lemmas",
            Suite::Periodicity => "periodicity",
            Suite::Dual => "dual",
            Suite::Natext => "natext",
            Suite::SqrtSweep => "sqrt-sweep",
        }
    }

    pub fn from_name(s: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|x| x.name() == s)
    }

    /// Sample size used when none is given.
    pub fn default_count(self) -> usize {
        match self {
            Suite::Tilings => 1000,
            Suite::Lemmas => 50,
            Suite::Periodicity | Suite::Dual => 300,
            Suite::Natext => 10_000,
            Suite::SqrtSweep => 0,
        }
    }
}

/// Outcome of one named property over a sample.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: usize,
    pub failed: usize,
    /// The first few failing instances.
    pub failures: Vec<String>,
    /// Observations that are not failures.
    pub notes: Vec<String>,
}

impl Check {
    pub fn new(name: impl Into<String>) -> Self {
        Check { name: name.into(), ..Check::default() }
    }

    pub fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.failures.len() < MAX_DETAILS {
                self.failures.push(detail());
            }
        }
    }

    /// Records `Ok(true)` as a pass; `Ok(false)` and errors as failures.
    pub fn record_result(&mut self, r: Result<bool>, detail: impl FnOnce() -> String) {
        match r {
            Ok(ok) => self.record(ok, detail),
            Err(e) => self.record(false, || format!("{}: {e}", detail())),
        }
    }

    pub fn note(&mut self, msg: String) {
        if self.notes.len() < MAX_DETAILS {
            self.notes.push(msg);
        }
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.ok() { "PASS" } else { "FAIL" };
        write!(f, "{tag} {}: {} passed, {} failed", self.name, self.passed, self.failed)?;
        for d in &self.failures {
            write!(f, "\n    failure: {d}")?;
        }
        for n in &self.notes {
            write!(f, "\n    note: {n}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(Check::ok)
    }

    pub fn passed(&self) -> usize {
        self.checks.iter().map(|c| c.passed).sum()
    }

    pub fn failed(&self) -> usize {
        self.checks.iter().map(|c| c.failed).sum()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {}: {} passed, {} failed", self.suite.name(), self.passed(), self.failed())?;
        for c in &self.checks {
            writeln!(f, "  {c}")?;
        }
        Ok(())
    }
}

pub fn run_suite(suite: Suite, seed: u64, count: Option<usize>) -> SuiteReport {
    let n = count.unwrap_or(suite.default_count());
    let checks = match suite {
        Suite::Tilings => {
            let mut c = tilings(seed, n);
            c.push(for1(seed, n));
            c.push(sector_partition(seed, n));
            c
        }
        Suite::Lemmas => {
            let mut c = arc_lemmas(seed, n);
            c.extend(rational_behaviour(seed, 4 * n));
            c
        }
        Suite::Periodicity => {
            let pop = quadratic_population(seed, n);
            let (mut c, _) = periodicity(&pop);
            c.push(negation_symmetry(&pop, 50));
            c
        }
        Suite::Dual => {
            let pop = quadratic_population(seed, n);
            vec![dual_reversal(&purely_periodic_h(&pop))]
        }
        Suite::Natext => {
            let mut c = pair_maps(seed, n);
            let pop = quadratic_population(seed, 300);
            c.push(injectivity(seed, &pop, (n / 20).max(1)));
            c.push(pair_closure(&purely_periodic_h(&pop)));
            c
        }
        Suite::SqrtSweep => sqrt_sweep(6, 3),
    };
    SuiteReport { suite, checks }
}

// Tilings

/// Q-tiling and S-tiling uniqueness and the floor_T box property.
pub fn tilings(seed: u64, count: usize) -> Vec<Check> {
    let mut r = rng(seed);
    let mut q = Check::new("Q_w tiling: exactly one tile");
    let mut s = Check::new("S_w tiling: one tile off odd points, none on them");
    let mut b = Check::new("z - floor_T(z) lies in X");
    for _ in 0..count {
        let z = tiling_point(&mut r);
        let tiles = q_tiles_containing(&z);
        q.record(tiles.len() == 1, || format!("{z} lies in Q_w for w in {tiles:?}"));
        let odd = z.to_gaussian_int().is_some_and(|g| crate::regions::lattice::is_odd(&g));
        let cells = s_tiles_containing(&z);
        let want = if odd { 0 } else { 1 };
        s.record(cells.len() == want, || format!("{z} lies in S_w for w in {cells:?}"));
        let rem = z.sub_int(&floor_t(&z));
        b.record(in_x(&rem), || format!("{z} - floor_T = {rem}"));
    }
    vec![q, s, b]
}

fn random_even<R: Rng>(r: &mut R) -> GaussianInt {
    loop {
        let g = GaussianInt::new(r.gen_range(-8..=8), r.gen_range(-8..=8));
        if g.is_even() && !g.is_zero() {
            return g;
        }
    }
}

/// `W` index paired with a quotient class. Inversion conjugates the circle
/// centres, so `L(i^k(1+i))` pairs with `W_j` and `L(i^k 2)` with `W_{j+4}`
/// where `j = 1 - k mod 4`.
pub fn w_index(c: LClass) -> u8 {
    let j = |k: u8| (4 - k) % 4 + 1;
    match c {
        LClass::Diag(k) => j(k),
        LClass::Axis(k) => j(k) + 4,
    }
}

/// `z -> 1/z - a` maps the paired `W_j` and infinity into `S_{-a}`.
pub fn for1(seed: u64, count: usize) -> Check {
    let mut r = rng(seed ^ 0xf01);
    let mut c = Check::new("1/w - a lands in S_{-a} for w in the paired W_j or infinity");
    for _ in 0..count {
        let a = random_even(&mut r);
        let j = w_index(l_class(&a).expect("nonzero even"));
        let w: FieldElement = rational_in_w(&mut r, j).into();
        let image = w.recip().expect("w is outside the unit disk").sub_int(&a);
        c.record_result(in_s_w(&image, &-&a), || format!("a = {a}, w = {w}"));
        let at_infinity: FieldElement = (-&a).into();
        c.record_result(in_s_w(&at_infinity, &-&a), || format!("a = {a}, w = infinity"));
    }
    c
}

/// Points of `X` off the arcs and diagonals lie in exactly one sector.
pub fn sector_partition(seed: u64, count: usize) -> Check {
    let mut r = rng(seed ^ 0x5ec);
    let mut c = Check::new("sectors X_1..X_8 partition X off the arcs");
    let mut done = 0;
    while done < count {
        let z: FieldElement = gaussian_rational(&mut r, 997, 997).into();
        if !in_x(&z) || on_sector_boundary(&z) {
            continue;
        }
        done += 1;
        let hits: Vec<u8> = (1..=8).filter(|&j| in_region(&z, RegionId::X(j))).collect();
        c.record(hits.len() == 1, || format!("{z} lies in sectors {hits:?}"));
    }
    c
}

/// On a diagonal `Re z = +-Im z` or on one of the circles bounding the sectors.
fn on_sector_boundary(z: &FieldElement) -> bool {
    let q = z.as_rational().expect("rational sample");
    if q.re() == q.im() || q.re() == -q.im() {
        return true;
    }
    (0..4).any(|k| {
        let h = GaussianRational::from_parts(1, 0, 2);
        let d = GaussianRational::from(GaussianInt::i_pow(k)) * GaussianRational::from_parts(1, 1, 2);
        let e = GaussianRational::from(GaussianInt::i_pow(k)) * GaussianRational::from_parts(1, -1, 2);
        sign(&dist_sq_minus(z, &d, &h)) == 0 || sign(&dist_sq_minus(z, &e, &h)) == 0
    })
}

// Lemmas

fn on_k12(z: &FieldElement) -> bool {
    in_region(z, RegionId::K(1)) || in_region(z, RegionId::K(2))
}

fn on_y(z: &FieldElement, js: &[u8]) -> bool {
    js.iter().any(|&j| in_region(z, RegionId::Y(j)))
}

/// `(agree_k, T_H^k(u), T_T^k(u))` for `k = 1..=4`.
fn paired_steps(u: &FieldElement) -> Result<Vec<(bool, FieldElement, FieldElement)>> {
    let (mut h, mut t) = (u.clone(), u.clone());
    let mut out = Vec::with_capacity(4);
    for _ in 0..4 {
        h = step_h(&h)?.1;
        t = step_t(&t)?.1;
        out.push((h == t, h.clone(), t.clone()));
    }
    Ok(out)
}

/// Agreement patterns of the H and T orbits started on `K_1, K_2` and on
/// `Y_3, Y_4`, the divergence rule, and the images of the segments and arcs
/// under one step.
pub fn arc_lemmas(seed: u64, count: usize) -> Vec<Check> {
    let mut r = rng(seed ^ 0xa5c);
    let mut k = Check::new("orbits from K_1, K_2: differ, differ, agree, agree on K_1 or K_2");
    let mut y = Check::new("orbits from Y_3, Y_4: agree, differ, differ, agree on Y_3 or Y_4");
    let mut split = Check::new("when T_H(u) != T_T(u): T_H(u) on Y_1, Y_2, T_T(u) on Y_3, Y_4, rejoined on K_1, K_2 at step 4");
    for n in 0..count {
        let u = random_k_point(&mut r, 1 + (n % 2) as u8);
        match paired_steps(&u) {
            Ok(s) => {
                let pattern: Vec<bool> = s.iter().map(|p| p.0).collect();
                k.record(pattern == [false, false, true, true] && on_k12(&s[3].1), || format!("u = {u}: {pattern:?}"));
            }
            Err(e) => k.record(false, || format!("u = {u}: {e}")),
        }
        let u = random_y_point(&mut r, 3 + (n % 2) as u8);
        match paired_steps(&u) {
            Ok(s) => {
                let pattern: Vec<bool> = s.iter().map(|p| p.0).collect();
                y.record(pattern == [true, false, false, true] && on_y(&s[3].1, &[3, 4]), || {
                    format!("u = {u}: {pattern:?}")
                });
            }
            Err(e) => y.record(false, || format!("u = {u}: {e}")),
        }
    }
    // the divergence rule on every split orbit met along the way
    for sample in quadratic_population(seed, 2 * count) {
        let u = &sample.alpha;
        if !in_x(u) {
            continue;
        }
        let Ok(s) = paired_steps(u) else { continue };
        if s[0].0 {
            continue;
        }
        let ok = on_y(&s[0].1, &[1, 2]) && on_y(&s[0].2, &[3, 4]) && s[3].0 && on_k12(&s[3].1);
        split.record(ok, || format!("u = {u}"));
    }
    for n in 0..count {
        let u = random_k_point(&mut r, 1 + (n % 2) as u8);
        if let Ok(s) = paired_steps(&u) {
            split.record(on_y(&s[0].1, &[1, 2]) && on_y(&s[0].2, &[3, 4]) && s[3].0 && on_k12(&s[3].1), || {
                format!("u = {u}")
            });
        }
    }
    vec![k, y, split, segment_maps(seed, count)]
}

/// One step carries `Y_j` onto `K` arcs and `K_j` onto `Y` segments:
/// H: `Y_j -> K_{5-j}`, `K_1 -> Y_2`, `K_2 -> Y_1`, `K_3 -> Y_4`, `K_4 -> Y_3`;
/// T: `Y_3 -> K_2`, `Y_4 -> K_1`, `K_1, K_3 -> Y_4`, `K_2, K_4 -> Y_3`.
pub fn segment_maps(seed: u64, count: usize) -> Check {
    const H_Y: [u8; 4] = [4, 3, 2, 1];
    const H_K: [u8; 4] = [2, 1, 4, 3];
    const T_K: [u8; 4] = [4, 3, 4, 3];
    let mut r = rng(seed ^ 0x5e9);
    let mut c = Check::new("segments Y_j and arcs K_j map onto the matching arcs and segments");
    for n in 0..count.max(8) {
        let j = (n % 4) as u8 + 1;
        let y = random_y_point(&mut r, j);
        let image = step_h(&y).map(|s| s.1);
        c.record_result(image.map(|z| in_region(&z, RegionId::K(H_Y[j as usize - 1]))), || format!("T_H on Y{j} at {y}"));
        if j >= 3 {
            let image = step_t(&y).map(|s| s.1);
            c.record_result(image.map(|z| in_region(&z, RegionId::K(5 - j))), || format!("T_T on Y{j} at {y}"));
        }
        let k = random_k_point(&mut r, j);
        let image = step_h(&k).map(|s| s.1);
        c.record_result(image.map(|z| in_region(&z, RegionId::Y(H_K[j as usize - 1]))), || format!("T_H on K{j} at {k}"));
        let image = step_t(&k).map(|s| s.1);
        c.record_result(image.map(|z| in_region(&z, RegionId::Y(T_K[j as usize - 1]))), || format!("T_T on K{j} at {k}"));
    }
    c
}

/// Rational inputs: H expansions are finite and evaluate back to the input;
/// T expansions are finite or end in the fixed point `-1`.
pub fn rational_behaviour(seed: u64, count: usize) -> Vec<Check> {
    let mut r = rng(seed ^ 0x7a7);
    let mut h = Check::new("rational H expansions are finite and reconstruct the input");
    let mut t = Check::new("rational T expansions are finite or end in -1");
    for _ in 0..count {
        let den = GaussianInt::new(r.gen_range(-10_000..=10_000), r.gen_range(-10_000..=10_000));
        if den.is_zero() {
            continue;
        }
        let num = GaussianInt::new(r.gen_range(-10_000..=10_000), r.gen_range(-10_000..=10_000));
        let q = GaussianRational::from(num).checked_div(&den.into()).expect("nonzero");
        let alpha: FieldElement = q.into();
        let e = crate::cfengine::expand_value(&alpha, Algorithm::H, DEFAULT_MAX_STEPS);
        h.record_result(
            e.and_then(|e| Ok(e.status == Status::Finite && evaluate_finite(&e)? == alpha)),
            || format!("{alpha}"),
        );
        let e = crate::cfengine::expand_value(&alpha, Algorithm::T, DEFAULT_MAX_STEPS);
        t.record_result(e.map(|e| matches!(e.status, Status::Finite | Status::MinusOneTail)), || format!("{alpha}"));
    }
    vec![h, t]
}

// Periodicity

/// Criterion versus orbit oracle for both maps, and the implications
/// towards the pair domain `X-tilde`.
pub fn periodicity(population: &[Sample]) -> (Vec<Check>, Vec<FieldElement>) {
    let mut h = Check::new("N_1 criterion agrees with the H orbit");
    let mut t = Check::new("N_2 criterion agrees with the T orbit");
    let mut tilde = Check::new("N_1 or pure H periodicity puts (alpha, alpha') in X-tilde");
    let mut periodic = Vec::new();
    let mut extra = 0usize;
    for s in population {
        let a = &s.alpha;
        match classify(a, Algorithm::H) {
            Ok(rep) => {
                h.record(rep.agrees(), || {
                    format!("{a} ({:?}): criterion {}, orbit {}", s.origin, rep.predicate_result, rep.oracle_result)
                });
                if rep.oracle_result {
                    periodic.push(a.clone());
                }
                match ExtPoint::with_conjugate(a) {
                    Ok(p) => {
                        let inside = in_xtilde(&p);
                        if rep.predicate_result || rep.oracle_result {
                            tilde.record(inside, || format!("{a}"));
                        } else if inside {
                            extra += 1;
                        }
                    }
                    Err(e) => tilde.record(false, || format!("{a}: {e}")),
                }
            }
            Err(e) => h.record(false, || format!("{a}: {e}")),
        }
        if in_x(a) {
            match classify(a, Algorithm::T) {
                Ok(rep) => t.record(rep.agrees(), || {
                    format!("{a} ({:?}): criterion {}, orbit {}", s.origin, rep.predicate_result, rep.oracle_result)
                }),
                Err(e) => t.record(false, || format!("{a}: {e}")),
            }
        }
    }
    if extra > 0 {
        tilde.note(format!("{extra} pairs lie in X-tilde but not in N_1"));
    }
    h.note(format!("{} of {} purely periodic under H", periodic.len(), population.len()));
    (vec![h, t, tilde], periodic)
}

/// The purely periodic members of a population under H.
pub fn purely_periodic_h(population: &[Sample]) -> Vec<FieldElement> {
    population
        .iter()
        .filter(|s| matches!(purely_periodic_oracle(&s.alpha, Algorithm::H), Ok((true, _))))
        .map(|s| s.alpha.clone())
        .collect()
}

/// The H quotients of `-alpha` are the negated quotients of `alpha`.
pub fn negation_symmetry(population: &[Sample], count: usize) -> Check {
    let mut c = Check::new("H quotients of -alpha are the negated quotients of alpha");
    for s in population.iter().take(count) {
        let a = &s.alpha;
        let both = expand(a, Algorithm::H, DEFAULT_MAX_STEPS)
            .and_then(|e| Ok((e, expand(&-a.clone(), Algorithm::H, DEFAULT_MAX_STEPS)?)));
        c.record_result(
            both.map(|(e, m)| {
                let negated: Vec<GaussianInt> = e.quotients().map(|q| -&q.value).collect();
                let direct: Vec<GaussianInt> = m.quotients().map(|q| q.value.clone()).collect();
                negated == direct && e.status == m.status && e.preperiod.len() == m.preperiod.len()
            }),
            || format!("{a}"),
        );
    }
    c
}

pub fn dual_reversal(periodic: &[FieldElement]) -> Check {
    let mut c = Check::new("dual map replays the reversed conjugate orbit");
    for a in periodic {
        c.record_result(verify_dual_reversal(a), || format!("{a}"));
    }
    c
}

// Pair maps

/// Density identity, domain preservation and landing in `S_{-a}` for the T
/// pair map on `X-hat`, and domain preservation for the H pair map on
/// `X-tilde`, on rational pairs.
pub fn pair_maps(seed: u64, count: usize) -> Vec<Check> {
    let mut r = rng(seed ^ 0xd3e);
    let mut density = Check::new("density identity |z'-w'|^4 |z|^4 |w|^4 = |z-w|^4");
    let mut hat = Check::new("T pair map stays in X-hat");
    let mut land = Check::new("second coordinate lands in S_{-a}");
    let mut tilde = Check::new("H pair map stays in X-tilde");
    for n in 0..count {
        let j = (n % 8) as u8 + 1;
        let z = rational_in_sector(&mut r, j);
        let w = rational_in_w(&mut r, j);
        let p = ExtPoint::new(z.clone().into(), Some(w.clone().into()));
        if !in_xhat(&p) || !in_xtilde(&p) {
            hat.record(false, || format!("sampled ({z}, {w}) is outside the domain"));
            continue;
        }
        density.record_result(density_identity_check(&z, &w), || format!("({z}, {w})"));
        match ext_step_with_quotient(&p, Algorithm::T) {
            Ok((a, next)) => {
                hat.record(true, String::new);
                let w1 = next.w.expect("finite");
                land.record_result(in_s_w(&w1, &-&a.value), || format!("({z}, {w}) with a = {}", a.value));
            }
            Err(e) => hat.record(false, || format!("({z}, {w}): {e}")),
        }
        tilde.record_result(ext_step(&p, Algorithm::H).map(|_| true), || format!("({z}, {w})"));
    }
    vec![density, hat, land, tilde]
}

/// No two distinct pairs share an image under the H pair map. Pairs combine
/// population points with points of the matching `W_j`.
pub fn injectivity(seed: u64, population: &[Sample], count: usize) -> Check {
    let mut r = rng(seed ^ 0x1d7);
    let mut pairs = Vec::with_capacity(count);
    let mut k = 0;
    while pairs.len() < count {
        let z = &population[k % population.len()].alpha;
        k += 1;
        let Some(j) = (1..=8).find(|&j| in_region(z, if j <= 4 { RegionId::XClosure(j) } else { RegionId::X(j) }))
        else {
            continue;
        };
        let w: FieldElement = rational_in_w(&mut r, j).into();
        pairs.push(ExtPoint::new(z.clone(), Some(w)));
        if k % 3 == 0 {
            // the same z with another w collides only if the map is not injective
            let w: FieldElement = rational_in_w(&mut r, j).into();
            pairs.push(ExtPoint::new(z.clone(), Some(w)));
        }
    }
    pairs.truncate(count);
    let mut c = Check::new("H pair map is injective on sampled quadratic pairs");
    match injectivity_sample(&pairs, Algorithm::H) {
        Ok(rep) => {
            c.passed = rep.checked - rep.collisions.len();
            for (a, b) in rep.collisions {
                c.record(false, || format!("{:?} and {:?}", pairs[a], pairs[b]));
            }
        }
        Err(e) => c.record(false, || e.to_string()),
    }
    c
}

/// The pair orbit of `(alpha, alpha')` closes with the period of `alpha`.
pub fn pair_closure(periodic: &[FieldElement]) -> Check {
    let mut c = Check::new("pair orbit of (alpha, alpha') closes with the H period");
    for a in periodic {
        let r = (|| -> Result<bool> {
            let m = expand(a, Algorithm::H, DEFAULT_MAX_STEPS)?.period.len();
            let start = ExtPoint::with_conjugate(a)?;
            let mut p = start.clone();
            for k in 1..=m {
                p = ext_step(&p, Algorithm::H)?;
                if (p == start) != (k == m) {
                    return Ok(false);
                }
            }
            Ok(true)
        })();
        c.record_result(r, || format!("{a}"));
    }
    c
}

// Square roots

/// `sqrt(m+ni)` reduced by its floor is purely periodic under H and T for
/// every nonsquare `m+ni` with `|m|, |n| <= bound`; its translates by
/// `a+bi`, `|a|, |b| <= shift`, avoid the arcs `K_j`; and the conjugate of
/// the H-reduced root has modulus above `2 sqrt 2` once `|m|` or `|n|`
/// reaches 4.
pub fn sqrt_sweep(bound: i64, shift: i64) -> Vec<Check> {
    let mut h = Check::new("sqrt(m+ni) - floor_H is purely periodic under H");
    let mut t = Check::new("sqrt(m+ni) - floor_T is purely periodic under T");
    let mut k = Check::new("sqrt(m+ni) + a + bi avoids K_1..K_4");
    let mut conj = Check::new("|conjugate of sqrt(m+ni) - floor_H| > 2 sqrt 2 for max(|m|,|n|) >= 4");
    for m in -bound..=bound {
        for n in -bound..=bound {
            let d = GaussianInt::new(m, n);
            if d.sqrt_exact().is_some() {
                continue;
            }
            for (algo, c) in [(Algorithm::H, &mut h), (Algorithm::T, &mut t)] {
                let r = sqrt_reduced(m, n, algo).and_then(|a| purely_periodic_oracle(&a, algo)).map(|(p, _)| p);
                c.record_result(r, || format!("m+ni = {d}"));
            }
            let root = sqrt_gaussian(&d).expect("nonsquare");
            for a in -shift..=shift {
                for b in -shift..=shift {
                    let z = root.add_rational(&GaussianInt::new(a, b).into());
                    let hit = (1..=4).find(|&j| in_region(&z, RegionId::K(j)));
                    k.record(hit.is_none(), || format!("sqrt({d}) + ({a}+{b}i) lies on K{}", hit.unwrap_or(0)));
                }
            }
            if m.abs() >= 4 || n.abs() >= 4 {
                let r = floor_h(&root).map(|f| {
                    let c = (-root.clone()).sub_int(&f);
                    sign(&dist_sq_minus(&c, &GaussianRational::zero(), &GaussianRational::from(8))) > 0
                });
                conj.record_result(r, || format!("m+ni = {d}"));
            }
        }
    }
    vec![h, t, k, conj]
}

/// Whether a sample lies in the closed square; used to validate populations.
pub fn population_in_domain(population: &[Sample]) -> Check {
    let mut c = Check::new("population lies in the closed square");
    for s in population {
        c.record(in_x_closed(&s.alpha) && !s.alpha.is_rational(), || format!("{}", s.alpha));
    }
    let boundary = population.iter().filter(|s| on_boundary_arcs(&s.alpha)).count();
    c.note(format!("{boundary} samples on K or Y"));
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_runs_pass() {
        for s in Suite::ALL {
            let count = match s {
                Suite::Natext => Some(200),
                Suite::Tilings => Some(100),
                Suite::SqrtSweep => None,
                _ => Some(20),
            };
            let rep = if s == Suite::SqrtSweep {
                SuiteReport { suite: s, checks: sqrt_sweep(2, 1) }
            } else {
                run_suite(s, 11, count)
            };
            assert!(rep.ok(), "{rep}");
        }
    }

    #[test]
    fn reports_are_deterministic() {
        assert_eq!(run_suite(Suite::Tilings, 3, Some(50)), run_suite(Suite::Tilings, 3, Some(50)));
    }

    #[test]
    fn failures_are_counted() {
        let mut c = Check::new("x");
        c.record(false, || "bad".into());
        c.record_result(Err(crate::Error::DivisionByZero), || "worse".into());
        c.record(true, String::new);
        assert_eq!((c.passed, c.failed, c.failures.len()), (1, 2, 2));
        assert!(c.to_string().starts_with("FAIL x"));
    }
}
