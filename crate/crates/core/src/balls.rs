//! Formal balls: pairs `(x, r)` of a point and a finite nonnegative
//! radius, with the distance `(x,r) d₊ (y,s) = (d(x,y) - r + s)₊`.
//!
//! The ball space is infinite, so set-level reasoning runs on finite
//! radius grids that are closed under the witness arithmetic of the laws
//! being checked (sums of values and radii, interval midpoints, one unit
//! of headroom). Formula-level operations accept arbitrary rationals.
//!
//! Two exact closed forms are used throughout, obtained by resolving the
//! radius suprema symbolically: over the full ball space
//! `underline(d₊)((x,r),(y,s)) = max_z ((d(z,y)+s) - (d(z,x)+r))₊` (the
//! supremum peaks at middle radius `0`) and
//! `overline(d₊)((x,r),(y,s)) = max_z ((d(x,z)+s) - (d(y,z)+r))₊` (it
//! peaks once the middle radius clears both truncations). These agree
//! with transporting the reflexivization of `d` into the ball space when
//! `d` has a zero diagonal, but can drop strictly below it otherwise, so
//! the transport laws are asserted only for reflexive inputs and logged
//! elsewhere.

use num::bigint::BigInt;
use num::traits::Zero;
use serde::{Deserialize, Serialize};

use crate::carrier::Carrier;
use crate::grel::GRel;
use crate::metric::{classify, reflexivize_lower, reflexivize_upper};
use crate::nets::{cauchy_cycle_sets, LimitKind};
use crate::order::is_topologically_complete;
use crate::report::Report;
use crate::xreal::{ExtReal, Rational};
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalBall {
    pub element: usize,
    pub radius: Rational,
}

impl FormalBall {
    pub fn new(element: usize, radius: Rational) -> Result<Self, Error> {
        if radius < Rational::zero() {
            return Err(Error::NegativeValue(radius.to_string()));
        }
        Ok(FormalBall { element, radius })
    }

    pub fn parse(carrier: &Carrier, label: &str, radius: &str) -> Result<Self, Error> {
        let element = carrier.index_of(label)?;
        let r: ExtReal = radius.parse()?;
        match r.as_rational() {
            Some(q) => FormalBall::new(element, q.clone()),
            None => Err(Error::Precondition("ball radii must be finite".into())),
        }
    }
}

/// `(x,r) d₊ (y,s) = (d(x,y) - r + s)₊`, exactly.
pub fn fb_distance(d: &GRel, a: &FormalBall, b: &FormalBall) -> ExtReal {
    let shifted = d.at(a.element, b.element) + &finite(&b.radius);
    shifted.truncated_sub(&finite(&a.radius))
}

/// `(x,r) ≤^{d₊} (y,s) ⟺ d(x,y) ≤ r - s`.
pub fn fb_leq(d: &GRel, a: &FormalBall, b: &FormalBall) -> bool {
    fb_distance(d, a, b).is_zero()
}

/// `(x,r) <^{d₊} (y,s) ⟺ d(x,y) < r - s`.
pub fn fb_lt(d: &GRel, a: &FormalBall, b: &FormalBall) -> bool {
    match d.at(a.element, b.element).as_rational() {
        None => false,
        Some(v) => v + &b.radius < a.radius,
    }
}

/// The lower reflexivization of `d₊` over the full ball space.
pub fn fb_underline(d: &GRel, a: &FormalBall, b: &FormalBall) -> ExtReal {
    let n = d.source().len();
    let mut best = ExtReal::zero();
    for z in 0..n {
        let lhs = d.at(z, b.element) + &finite(&b.radius);
        let rhs = d.at(z, a.element) + &finite(&a.radius);
        let v = lhs.truncated_sub(&rhs);
        if v > best {
            best = v;
        }
    }
    best
}

/// The upper reflexivization of `d₊` over the full ball space.
pub fn fb_overline(d: &GRel, a: &FormalBall, b: &FormalBall) -> ExtReal {
    let n = d.source().len();
    let mut best = ExtReal::zero();
    for z in 0..n {
        let lhs = d.at(a.element, z) + &finite(&b.radius);
        let rhs = d.at(b.element, z) + &finite(&a.radius);
        let v = lhs.truncated_sub(&rhs);
        if v > best {
            best = v;
        }
    }
    best
}

/// The aperture of a set of formal balls: the least radius (`∞` when empty).
pub fn aperture(balls: &[FormalBall]) -> ExtReal {
    balls
        .iter()
        .map(|b| ExtReal::from_rational(b.radius.clone()).unwrap())
        .min()
        .unwrap_or_else(ExtReal::infinity)
}

fn finite(r: &Rational) -> ExtReal {
    ExtReal::from_rational(r.clone()).unwrap()
}

fn half(r: &Rational) -> Rational {
    r / Rational::from_integer(BigInt::from(2))
}

/// A finite radius grid: the ball-space surrogate `base × radii`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BallGrid {
    pub radii: Vec<ExtReal>,
}

impl BallGrid {
    pub fn new(mut radii: Vec<ExtReal>) -> Result<Self, Error> {
        for r in &radii {
            if !r.is_finite() {
                return Err(Error::Precondition("grid radii must be finite".into()));
            }
        }
        radii.push(ExtReal::zero());
        radii.sort();
        radii.dedup();
        Ok(BallGrid { radii })
    }

    /// `{0}` together with every finite value of the given tables.
    pub fn from_values(tables: &[&GRel]) -> Self {
        let mut radii = vec![ExtReal::zero()];
        for t in tables {
            for (_, _, v) in t.cells() {
                if v.is_finite() {
                    radii.push(v.clone());
                }
            }
        }
        BallGrid::new(radii).unwrap()
    }

    /// Closes the value grid under the witness arithmetic of the ball
    /// laws: sums `value + radius`, positive gaps `radius - value`, one
    /// unit of headroom above everything, and midpoints of consecutive
    /// radii for the strict-interval witnesses.
    pub fn witness_closed(tables: &[&GRel]) -> Self {
        let base = BallGrid::from_values(tables);
        let values: Vec<Rational> = base
            .radii
            .iter()
            .filter_map(|v| v.as_rational().cloned())
            .collect();
        let mut radii: Vec<Rational> = values.clone();
        for v in &values {
            for r in &values {
                radii.push(v + r);
                if r > v {
                    radii.push(r - v);
                }
            }
        }
        if let Some(top) = radii.iter().max().cloned() {
            radii.push(top + Rational::from_integer(BigInt::from(1)));
        }
        radii.sort();
        radii.dedup();
        let mut with_midpoints = radii.clone();
        for w in radii.windows(2) {
            with_midpoints.push(half(&(&w[0] + &w[1])));
        }
        with_midpoints.sort();
        with_midpoints.dedup();
        BallGrid::new(with_midpoints.into_iter().map(|r| finite(&r)).collect()).unwrap()
    }

    /// One refinement round: halves and consecutive midpoints.
    pub fn refine(&self) -> Self {
        let rs: Vec<Rational> = self.radii.iter().filter_map(|v| v.as_rational().cloned()).collect();
        let mut out = rs.clone();
        for r in &rs {
            out.push(half(r));
        }
        for w in rs.windows(2) {
            out.push(half(&(&w[0] + &w[1])));
        }
        out.sort();
        out.dedup();
        BallGrid::new(out.into_iter().map(|r| finite(&r)).collect()).unwrap()
    }

    /// All grid points over a base carrier, in (element, radius) order.
    pub fn points(&self, base: &Carrier) -> Vec<FormalBall> {
        let mut out = Vec::with_capacity(base.len() * self.radii.len());
        for x in base.indices() {
            for r in &self.radii {
                out.push(FormalBall { element: x, radius: r.as_rational().unwrap().clone() });
            }
        }
        out
    }
}

/// Composition transport `(d∘e)₊ = d₊∘e₊` on a witness-closed grid, plus
/// the reflexivization transports (asserted for reflexive inputs, logged
/// otherwise).
pub fn check_bfunc(d: &GRel, e: &GRel, grid: &BallGrid) -> Result<Report, Error> {
    let base = d.require_square()?;
    if e.source() != base || !e.is_square() {
        return Err(Error::CarrierMismatch("bfunc needs two square tables on one carrier".into()));
    }
    let mut report = Report::new("bfunc");
    let de = d.compose(e)?;
    let outer = BallGrid::from_values(&[d, e, &de]);
    let outer_points = outer.points(base);
    let middle_points = grid.points(base);

    let mut comp_ok = true;
    let mut witness = String::new();
    'comp: for a in &outer_points {
        for b in &outer_points {
            let closed = fb_distance(&de, a, b);
            let via_grid = ExtReal::inf(
                middle_points
                    .iter()
                    .map(|m| &fb_distance(d, a, m) + &fb_distance(e, m, b)),
            );
            if via_grid != closed {
                comp_ok = false;
                witness = format!(
                    "balls ({},{}) → ({},{}): grid {} vs closed {}",
                    base.label(a.element),
                    a.radius,
                    base.label(b.element),
                    b.radius,
                    via_grid,
                    closed
                );
                break 'comp;
            }
        }
    }
    report.assert("composition transports to the ball space", comp_ok, witness);

    let lower = reflexivize_lower(d)?;
    let upper = reflexivize_upper(d)?;
    let mut under_eq = true;
    let mut over_eq = true;
    let mut w_under = String::new();
    let mut w_over = String::new();
    for a in &outer_points {
        for b in &outer_points {
            let u = fb_underline(d, a, b);
            let u_closed = fb_distance(&lower, a, b);
            if u != u_closed && under_eq {
                under_eq = false;
                w_under = format!(
                    "balls ({},{}) → ({},{}): {} vs {}",
                    base.label(a.element),
                    a.radius,
                    base.label(b.element),
                    b.radius,
                    u,
                    u_closed
                );
            }
            let o = fb_overline(d, a, b);
            let o_closed = fb_distance(&upper, a, b);
            if o != o_closed && over_eq {
                over_eq = false;
                w_over = format!(
                    "balls ({},{}) → ({},{}): {} vs {}",
                    base.label(a.element),
                    a.radius,
                    base.label(b.element),
                    b.radius,
                    o,
                    o_closed
                );
            }
        }
    }
    let reflexive = d.has_zero_diagonal();
    if reflexive || under_eq {
        report.assert("lower reflexivization transports", under_eq, w_under);
    } else {
        report.na(
            "lower reflexivization transports",
            format!("needs a zero diagonal; divergence at {w_under}"),
        );
    }
    if reflexive || over_eq {
        report.assert("upper reflexivization transports", over_eq, w_over);
    } else {
        report.na(
            "upper reflexivization transports",
            format!("needs a zero diagonal; divergence at {w_over}"),
        );
    }
    Ok(report)
}

/// Order recovery: `d(x,y) = min {r in the grid : (x,r) ≤^{d₊} (y,0)}`.
pub fn check_xdy(d: &GRel, grid: &BallGrid) -> Result<Report, Error> {
    let base = d.require_square()?;
    let mut report = Report::new("xdy");
    let mut ok = true;
    let mut witness = String::new();
    'outer: for x in base.indices() {
        for y in base.indices() {
            let target = FormalBall { element: y, radius: Rational::zero() };
            let candidates: Vec<ExtReal> = grid
                .radii
                .iter()
                .filter(|r| {
                    let a = FormalBall { element: x, radius: r.as_rational().unwrap().clone() };
                    fb_leq(d, &a, &target)
                })
                .cloned()
                .collect();
            let recovered = ExtReal::inf(candidates.iter());
            if recovered != *d.at(x, y) {
                ok = false;
                witness = format!(
                    "({}, {}): recovered {} vs {}",
                    base.label(x),
                    base.label(y),
                    recovered,
                    d.at(x, y)
                );
                break 'outer;
            }
        }
    }
    report.assert("the order structure recovers the table", ok, witness);
    Ok(report)
}

/// Strict-factorization and interpolation laws on a witness-closed grid:
/// the strict relation of a composition factors through middles in all
/// four strict/nonstrict combinations; the overline comparison law; the
/// zero-column transport of the lower reflexivization; and the three
/// interpolation inequalities of the ball distance.
pub fn check_bunder_binter(d: &GRel, e: &GRel, grid: &BallGrid) -> Result<Report, Error> {
    let base = d.require_square()?;
    if e.source() != base || !e.is_square() {
        return Err(Error::CarrierMismatch("needs two square tables on one carrier".into()));
    }
    let mut report = Report::new("binter");
    let de = d.compose(e)?;
    let outer = BallGrid::from_values(&[d, e, &de]).points(base);
    let mids: Vec<FormalBall> = grid.points(base);

    // strict factorization: <^{(d∘e)₊} = <∘< = <∘≤ = ≤∘<
    let mut fact_ok = true;
    let mut witness = String::new();
    'fact: for a in &outer {
        for b in &outer {
            let direct = fb_lt(&de, a, b);
            let ss = mids.iter().any(|m| fb_lt(d, a, m) && fb_lt(e, m, b));
            let sl = mids.iter().any(|m| fb_lt(d, a, m) && fb_leq(e, m, b));
            let ls = mids.iter().any(|m| fb_leq(d, a, m) && fb_lt(e, m, b));
            if !(direct == ss && direct == sl && direct == ls) {
                fact_ok = false;
                witness = format!(
                    "balls ({},{}) → ({},{}): direct={direct}, <<={ss}, <≤={sl}, ≤<={ls}",
                    base.label(a.element),
                    a.radius,
                    base.label(b.element),
                    b.radius
                );
                break 'fact;
            }
        }
    }
    report.assert("strict composition factors through middles", fact_ok, witness);

    // comparison law: d̄ ≤ e ⟺ every ≤^{e₊} pair is an overline-strict pair
    let upper_d = reflexivize_upper(d)?;
    let lhs = upper_d.leq(e);
    let mut rhs = true;
    'cmp: for a in &outer {
        for b in &outer {
            if !fb_leq(e, a, b) {
                continue;
            }
            // (b <) ⊆ (a <) over the grid
            for c in &mids {
                if fb_lt(d, b, c) && !fb_lt(d, a, c) {
                    rhs = false;
                    break 'cmp;
                }
            }
        }
    }
    report.assert(
        "d̄ ≤ e ⟺ overline-strict contains ≤^{e₊}",
        lhs == rhs,
        format!("inequality={lhs}, containment={rhs}"),
    );

    // zero-column transport: if every column of d has a zero then the
    // lower reflexivization of the strict grid order is ≤^{d̲₊}
    let zero_cols = base
        .indices()
        .all(|y| base.indices().any(|z| d.at(z, y).is_zero()));
    if zero_cols {
        let lower = reflexivize_lower(d)?;
        let mut ok = true;
        let mut w = String::new();
        'zc: for a in &outer {
            for b in &outer {
                // (< a) ⊆ (< b) over the grid?
                let contained =
                    mids.iter().all(|c| !fb_lt(d, c, a) || fb_lt(d, c, b));
                let closed = fb_leq(&lower, a, b);
                if contained != closed {
                    ok = false;
                    w = format!(
                        "balls ({},{}) vs ({},{}): containment={contained}, closed={closed}",
                        base.label(a.element),
                        a.radius,
                        base.label(b.element),
                        b.radius
                    );
                    break 'zc;
                }
            }
        }
        report.assert("lower reflexivization of the strict order is ≤^{d̲₊}", ok, w);
    } else {
        report.na(
            "lower reflexivization of the strict order is ≤^{d̲₊}",
            "some column of d has no zero",
        );
    }

    // interpolation (i): overline(d₊) ∘ <^{d₊} ≤ d₊, with the middle
    // radius infimum resolved symbolically at t = d(z,y) + s
    let mut i_ok = true;
    let mut w_i = String::new();
    'i: for a in &outer {
        for b in &outer {
            let rhs_v = fb_distance(d, a, b);
            let mut best = ExtReal::infinity();
            for z in base.indices() {
                if let Some(zdy) = d.at(z, b.element).as_rational() {
                    let m = FormalBall { element: z, radius: zdy + &b.radius };
                    let v = fb_overline(d, a, &m);
                    if v < best {
                        best = v;
                    }
                }
            }
            if best > rhs_v {
                i_ok = false;
                w_i = format!(
                    "balls ({},{}) → ({},{}): inf {} vs {}",
                    base.label(a.element),
                    a.radius,
                    base.label(b.element),
                    b.radius,
                    best,
                    rhs_v
                );
                break 'i;
            }
        }
    }
    report.assert("overline composed with strict stays below d₊", i_ok, w_i);

    // interpolation (ii): underline(d₊) ∘ ≤^{d₊𝒫} ≤ d₊𝒫 over principal
    // cones and Cauchy-cycle families
    let mut fams: Vec<Vec<FormalBall>> = outer.iter().map(|b| vec![b.clone()]).collect();
    for b in &outer {
        let cone: Vec<FormalBall> =
            mids.iter().filter(|m| fb_leq(d, m, b)).cloned().collect();
        if !cone.is_empty() {
            fams.push(cone);
        }
    }
    let mut ii_ok = true;
    let mut w_ii = String::new();
    'ii: for a in &outer {
        for fam in &fams {
            let rhs_v = ExtReal::sup(
                fam.iter().map(|b| fb_distance(d, a, b)),
            );
            let mut best = ExtReal::infinity();
            for z in base.indices() {
                // least radius putting (z,·) below the whole family
                let mut t0 = Rational::zero();
                let mut feasible = true;
                for b in fam {
                    match d.at(z, b.element).as_rational() {
                        Some(v) => {
                            let need = v + &b.radius;
                            if need > t0 {
                                t0 = need;
                            }
                        }
                        None => {
                            feasible = false;
                            break;
                        }
                    }
                }
                if feasible {
                    let m = FormalBall { element: z, radius: t0 };
                    let v = fb_underline(d, a, &m);
                    if v < best {
                        best = v;
                    }
                }
            }
            if best > rhs_v {
                ii_ok = false;
                w_ii = format!(
                    "ball ({},{}) vs family of {}: inf {} vs {}",
                    base.label(a.element),
                    a.radius,
                    fam.len(),
                    best,
                    rhs_v
                );
                break 'ii;
            }
        }
    }
    report.assert("underline composed with cone membership stays below d₊𝒫", ii_ok, w_ii);

    // interpolation (iii): every strict pair factors strictly through an
    // intermediate radius at the same point
    let mut iii_ok = true;
    let mut w_iii = String::new();
    'iii: for a in &outer {
        for b in &outer {
            if !fb_lt(d, a, b) {
                continue;
            }
            let v = d.at(a.element, b.element).as_rational().unwrap();
            let lo = v + &b.radius;
            let hi = a.radius.clone();
            let found = grid.radii.iter().filter_map(|r| r.as_rational()).any(|t| {
                *t > lo && *t < hi && {
                    let m = FormalBall { element: a.element, radius: t.clone() };
                    fb_lt(d, &m, b) && m.radius < a.radius
                }
            });
            if !found {
                iii_ok = false;
                w_iii = format!(
                    "strict pair ({},{}) < ({},{}) has no in-grid interpolant",
                    base.label(a.element),
                    a.radius,
                    base.label(b.element),
                    b.radius
                );
                break 'iii;
            }
        }
    }
    report.assert("strict pairs interpolate through a middle radius", iii_ok, w_iii);
    Ok(report)
}

/// Aperture subadditivity `α(Y) ≤ α(Z) + Z d₊ℋ Y ≤ α(Z) + Z d₊^ℋ Y`
/// over the supplied families of grid balls.
pub fn check_alphatri(d: &GRel, families: &[Vec<FormalBall>]) -> Result<Report, Error> {
    d.require_square()?;
    let mut report = Report::new("alphatri");
    let lower_h = |z: &[FormalBall], y: &[FormalBall]| -> ExtReal {
        ExtReal::sup(
            z.iter()
                .map(|c| {
                    ExtReal::inf(y.iter().map(|b| fb_distance(d, c, b)))
                }),
        )
    };
    let upper_h = |z: &[FormalBall], y: &[FormalBall]| -> ExtReal {
        ExtReal::inf(
            y.iter()
                .map(|b| {
                    ExtReal::sup(z.iter().map(|c| fb_distance(d, c, b)))
                }),
        )
    };
    let mut ok = true;
    let mut witness = String::new();
    'outer: for y in families {
        for z in families {
            let ay = aperture(y);
            let az = aperture(z);
            let via_lower = &az + &lower_h(z, y);
            let via_upper = &az + &upper_h(z, y);
            if !(ay <= via_lower && via_lower <= via_upper) {
                ok = false;
                witness = format!("α(Y)={ay}, α(Z)+Zd₊ℋY={via_lower}, α(Z)+Zd₊^ℋY={via_upper}");
                break 'outer;
            }
        }
    }
    report.assert("aperture subadditivity", ok, witness);
    Ok(report)
}

fn zero_columns(d: &GRel) -> bool {
    let base = d.source();
    base.indices().all(|y| base.indices().any(|z| d.at(z, y).is_zero()))
}

/// Strict-order max-completeness of the ball space, with the radius
/// quantifiers resolved symbolically: the open radius ideal of a Cauchy
/// cycle set `C` has a strict maximum iff some base point `x` satisfies
/// `d(·,x) ≤ d(·,C)` pointwise and `min_y (d(y,C) + d(w,y)) ≤ d(w,x)`
/// for every `w` (the witness radius of the maximum clause is an open
/// infimum, so no finite grid can enumerate it directly).
fn ball_order_max_complete(d: &GRel) -> Result<(bool, Option<String>), Error> {
    let base = d.source();
    for c in cauchy_cycle_sets(d)? {
        let dc = d.set_inf(&c);
        let found = base.indices().any(|x| {
            base.indices().all(|y| d.at(y, x) <= dc.at(y))
                && base.indices().all(|w| {
                    let reach = ExtReal::inf(
                        base.indices().map(|y| dc.at(y) + d.at(w, y)),
                    );
                    reach <= *d.at(w, x)
                })
        });
        if !found {
            return Ok((false, Some(format!("ideal of cycle {}", c.display(base)))));
        }
    }
    Ok((true, None))
}

/// Strict-order max-continuity of the ball space, radius quantifiers
/// resolved: every ball over `x` is the maximum of its strict cone iff
/// the column of `x` has a finite entry and `(d∘d)(·,x) ≤ d(·,x)`.
fn ball_order_max_continuous(d: &GRel) -> Result<(bool, Option<String>), Error> {
    let base = d.source();
    let dd = d.compose(d)?;
    for x in base.indices() {
        if !base.indices().any(|z| d.at(z, x).is_finite()) {
            return Ok((false, Some(format!("column of `{}` is all-infinite", base.label(x)))));
        }
        if let Some(w) = base.indices().find(|&w| dd.at(w, x) > d.at(w, x)) {
            return Ok((false, Some(format!(
                "cone of `{}` does not interpolate below `{}`",
                base.label(x),
                base.label(w)
            ))));
        }
    }
    Ok((true, None))
}

/// The domain inequality for the strict ball order over grid pairs:
/// every lower-reflexivization pair is an upper-reflexivization pair.
/// Per pair, the radius quantifiers are closed forms: the lower holds
/// iff `d(z,y)+s ≤ d(z,x)+r` for all `z`; the upper holds iff
/// `d(x,z)+s ≤ d(y,z)+r` for all `z` with `d(y,z) < s`.
fn ball_order_domain_inequality(d: &GRel, grid: &BallGrid) -> bool {
    let base = d.source();
    let points = grid.points(base);
    for a in &points {
        for b in &points {
            let under = fb_underline(d, a, b).is_zero();
            if !under {
                continue;
            }
            let over = base.indices().all(|z| {
                match d.at(b.element, z).as_rational() {
                    Some(ydz) if *ydz < b.radius => {
                        let lhs = d.at(a.element, z) + &finite(&b.radius);
                        let rhs = finite(&(ydz + &a.radius));
                        lhs <= rhs
                    }
                    _ => true,
                }
            });
            if !over {
                return false;
            }
        }
    }
    true
}

fn ball_order_domain(d: &GRel, grid: &BallGrid) -> Result<bool, Error> {
    Ok(ball_order_max_complete(d)?.0
        && ball_order_max_continuous(d)?.0
        && ball_order_domain_inequality(d, grid))
}

/// Completeness/continuity transport into the ball order. The
/// completeness and continuity sides are exact (their radius quantifiers
/// are resolved symbolically); for hemimetrics a divergence is a genuine
/// failure, for other distances it is reported as inconclusive.
pub fn check_contdomballs(d: &GRel, grid: &BallGrid) -> Result<Report, Error> {
    d.require_square()?;
    let mut report = Report::new("contdomballs");
    if !classify(d)?.is_distance {
        report.na("ball-order transport", "not a distance");
        return Ok(report);
    }
    let hemimetric = classify(d)?.is_hemimetric;
    let lhs_complete = is_topologically_complete(d, LimitKind::BallHole)?.holds;
    let lhs_continuous =
        crate::order::is_topologically_continuous(d, LimitKind::BallHole)?.holds;
    let (rhs_complete, complete_witness) = ball_order_max_complete(d)?;
    let (rhs_cont_raw, cont_witness) = ball_order_max_continuous(d)?;
    let rhs_continuous = rhs_cont_raw && zero_columns(d);

    if lhs_complete == rhs_complete {
        report.holds("completeness transports to the ball order");
    } else if hemimetric {
        report.fails(
            "completeness transports to the ball order",
            format!(
                "space={lhs_complete}, ball order={rhs_complete} ({})",
                complete_witness.unwrap_or_default()
            ),
        );
    } else {
        report.inconclusive(
            "completeness transports to the ball order",
            format!("space={lhs_complete}, ball order={rhs_complete}"),
        );
    }
    if lhs_continuous == rhs_continuous {
        report.holds("continuity transports to the ball order (with zero columns)");
    } else if hemimetric {
        report.fails(
            "continuity transports to the ball order (with zero columns)",
            format!(
                "space={lhs_continuous}, ball order={rhs_continuous} ({})",
                cont_witness.unwrap_or_default()
            ),
        );
    } else {
        report.inconclusive(
            "continuity transports to the ball order (with zero columns)",
            format!("space={lhs_continuous}, ball order={rhs_continuous}"),
        );
    }
    let _ = grid;
    Ok(report)
}

/// The ball-order domain equivalence: the space is a ball-hole domain
/// with its lower reflexivization exactly when the ball order is a
/// strict max-domain whose lower reflexivization is the transported
/// nonstrict order. The pair-quantified clauses run over grid points
/// with one refinement retry.
pub fn check_kw(d: &GRel, grid: &BallGrid) -> Result<Report, Error> {
    d.require_square()?;
    let mut report = Report::new("kw");
    if !classify(d)?.is_distance {
        report.na("ball-order domain equivalence", "not a distance");
        return Ok(report);
    }
    let upper = reflexivize_upper(d)?;
    let lower = reflexivize_lower(d)?;
    let lhs_domain = upper.leq(&lower)
        && crate::order::is_topologically_continuous(d, LimitKind::BallHole)?.holds
        && is_topologically_complete(d, LimitKind::BallHole)?.holds;

    // side condition: ≤^{d̲₊} coincides with the lower reflexivization
    // of the strict ball order over the grid points
    let side_ok = |g: &BallGrid| -> bool {
        let points = g.points(d.source());
        points.iter().all(|a| {
            points.iter().all(|b| {
                fb_underline(d, a, b).is_zero() == fb_distance(&lower, a, b).is_zero()
            })
        })
    };

    let mut rhs = ball_order_domain(d, grid)? && side_ok(grid);
    if rhs != lhs_domain {
        let refined = grid.refine();
        rhs = ball_order_domain(d, &refined)? && side_ok(&refined);
    }
    if rhs == lhs_domain {
        report.holds("ball-order domain equivalence");
    } else {
        report.inconclusive(
            "ball-order domain equivalence",
            format!("space domain={lhs_domain}, ball order with side condition={rhs}"),
        );
    }
    Ok(report)
}

/// The hemimetric corollary: Smyth completeness coincides with the ball
/// order being a strict max-domain.
pub fn check_rv(d: &GRel, grid: &BallGrid) -> Result<Report, Error> {
    d.require_square()?;
    let mut report = Report::new("rv");
    if !classify(d)?.is_hemimetric {
        report.na("completeness ⟺ ball-order strict domain", "not a hemimetric");
        return Ok(report);
    }
    let smyth = is_topologically_complete(d, LimitKind::BallHole)?.holds;
    let mut ball_domain = ball_order_domain(d, grid)?;
    if smyth != ball_domain {
        ball_domain = ball_order_domain(d, &grid.refine())?;
    }
    if smyth == ball_domain {
        report.holds("completeness ⟺ ball-order strict domain");
    } else {
        report.inconclusive(
            "completeness ⟺ ball-order strict domain",
            format!("space={smyth}, ball order={ball_domain}"),
        );
    }
    Ok(report)
}

/// The completion clause chain for hemimetrics, each clause decided
/// independently at grid scale, with consistency (all or none) asserted:
/// self-completeness, Smyth completeness of the sampled zero-aperture
/// family under the transported classical Hausdorff distance, hemimetric-
/// ness of the transported reverse Hausdorff distance there, and the two
/// profile-level reversal clauses.
pub fn check_esmyth(d: &GRel, grid: &BallGrid) -> Result<Report, Error> {
    let base = d.require_square()?.clone();
    let mut report = Report::new("esmyth");
    if !classify(d)?.is_hemimetric {
        report.na("completion clause chain", "not a hemimetric");
        return Ok(report);
    }
    let c1 = is_topologically_complete(d, LimitKind::BallHole)?.holds;
    let families = canonical_zero_aperture_families(d, grid)?;
    let fam_labels: Vec<String> = (0..families.len()).map(|i| format!("F{i}")).collect();
    let fam_carrier = Carrier::new(fam_labels)?;
    let lower_h = GRel::from_fn(fam_carrier.clone(), fam_carrier.clone(), |i, j| {
        ExtReal::sup(
            families[i]
                .iter()
                .map(|a| {
                    ExtReal::inf(
                        families[j].iter().map(|b| fb_distance(d, a, b)),
                    )
                }),
        )
    });
    let upper_h = GRel::from_fn(fam_carrier.clone(), fam_carrier, |i, j| {
        ExtReal::inf(
            families[j]
                .iter()
                .map(|b| {
                    ExtReal::sup(
                        families[i].iter().map(|a| fb_distance(d, a, b)),
                    )
                }),
        )
    });
    let c2 = is_topologically_complete(&lower_h, LimitKind::BallHole)?.holds;
    let c3 = upper_h.has_zero_diagonal() && upper_h.leq(&upper_h.compose(&upper_h)?);
    let op = d.opposite();
    let mut c45 = true;
    for c in cauchy_cycle_sets(d)? {
        let p = crate::nets::NetProfile::cycling(base.clone(), &c)?;
        if !crate::nets::is_cauchy(&p, &op)? {
            c45 = false;
            break;
        }
    }
    let clauses = [c1, c2, c3, c45, c45];
    if clauses.iter().all(|&c| c) || clauses.iter().all(|&c| !c) {
        report.holds("completion clause chain is consistent");
    } else {
        report.fails("completion clause chain is consistent", format!("clauses: {clauses:?}"));
    }
    Ok(report)
}

/// The sampled zero-aperture families used by the completion clauses:
/// principal nonstrict cones of radius-zero balls and the closed ideals
/// of Cauchy cycle sets.
pub fn canonical_zero_aperture_families(
    d: &GRel,
    grid: &BallGrid,
) -> Result<Vec<Vec<FormalBall>>, Error> {
    let base = d.require_square()?;
    let points = grid.points(base);
    let mut out = Vec::new();
    for x in base.indices() {
        let target = FormalBall { element: x, radius: Rational::zero() };
        let cone: Vec<FormalBall> =
            points.iter().filter(|p| fb_leq(d, p, &target)).cloned().collect();
        if !cone.is_empty() {
            out.push(cone);
        }
    }
    for c in cauchy_cycle_sets(d)? {
        let tail_dist = d.set_inf(&c);
        let ideal: Vec<FormalBall> = points
            .iter()
            .filter(|p| match tail_dist.at(p.element).as_rational() {
                Some(v) => *v <= p.radius,
                None => false,
            })
            .cloned()
            .collect();
        if !ideal.is_empty() {
            out.push(ideal);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::carrier::Subset;
    use crate::gallery;

    fn ball(d: &GRel, label: &str, radius: &str) -> FormalBall {
        FormalBall::parse(d.source(), label, radius).unwrap()
    }

    #[test]
    fn fb_distance_examples() {
        let q3 = gallery::q_grid(3);
        // (q(1,1/2) - 1/4 + 0)₊ = 1/4
        let a = ball(&q3, "1", "1/4");
        let b = ball(&q3, "1/2", "0");
        assert_eq!(fb_distance(&q3, &a, &b), ExtReal::ratio(1, 4));
        // same point, shrinking radius: zero
        let a = ball(&q3, "1", "1/2");
        let b = ball(&q3, "1", "1/4");
        assert_eq!(fb_distance(&q3, &a, &b), ExtReal::zero());
        // zero radii embed the table
        let a = ball(&q3, "1", "0");
        let b = ball(&q3, "0", "0");
        assert_eq!(fb_distance(&q3, &a, &b), *q3.at_labels("1", "0").unwrap());
    }

    #[test]
    fn fb_order_examples() {
        let q3 = gallery::q_grid(3);
        // q(1,1/2) = 1/2 ≤ 7/10 - 2/10, not strict
        let a = ball(&q3, "1", "7/10");
        let b = ball(&q3, "1/2", "1/5");
        assert!(fb_leq(&q3, &a, &b));
        assert!(!fb_lt(&q3, &a, &b));
        // reflexivity at equal radii needs a zero diagonal
        let a = ball(&q3, "1/2", "1/3");
        assert!(fb_leq(&q3, &a, &a));
    }

    #[test]
    fn order_recovers_the_table() {
        for d in [gallery::q_grid(3), gallery::g_grid(3), gallery::x3nr(), gallery::chain(3)] {
            let grid = BallGrid::from_values(&[&d]);
            let r = check_xdy(&d, &grid).unwrap();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn bfunc_on_hemimetric_pairs() {
        let q3 = gallery::q_grid(3);
        let grid = BallGrid::witness_closed(&[&q3, &q3]);
        let r = check_bfunc(&q3, &q3, &grid).unwrap();
        assert!(r.passed(), "{r}");
        assert!(r.applicable());
        let m = gallery::discrete_metric(2);
        let grid = BallGrid::witness_closed(&[&m, &m]);
        assert!(check_bfunc(&m, &m, &grid).unwrap().passed());
    }

    #[test]
    fn reflexivization_transport_needs_zero_diagonal() {
        // rows (1,0) / (1,0): a distance whose lower reflexivization does
        // not transport to the ball space
        let c = crate::Carrier::new(["a", "b"]).unwrap();
        let d = GRel::square_from_rows(
            c,
            vec![
                vec![ExtReal::from_int(1), ExtReal::zero()],
                vec![ExtReal::from_int(1), ExtReal::zero()],
            ],
        )
        .unwrap();
        assert!(classify(&d).unwrap().is_distance);
        let a = FormalBall::new(0, Rational::zero()).unwrap();
        let b = FormalBall::new(1, Rational::from_integer(1.into())).unwrap();
        let lower = reflexivize_lower(&d).unwrap();
        assert_eq!(fb_underline(&d, &a, &b), ExtReal::zero());
        assert_eq!(fb_distance(&lower, &a, &b), ExtReal::from_int(1));
        // the checker degrades to not-applicable rather than failing
        let grid = BallGrid::witness_closed(&[&d, &d]);
        let r = check_bfunc(&d, &d, &grid).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn binter_on_gallery() {
        for d in [gallery::q_grid(3), gallery::g_grid(3)] {
            let grid = BallGrid::witness_closed(&[&d, &d]);
            let r = check_bunder_binter(&d, &d, &grid).unwrap();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn aperture_examples() {
        let q3 = gallery::q_grid(3);
        let single = vec![ball(&q3, "0", "1/4")];
        assert_eq!(aperture(&single), ExtReal::ratio(1, 4));
        let pair = vec![ball(&q3, "0", "1/2"), ball(&q3, "1", "0")];
        assert_eq!(aperture(&pair), ExtReal::zero());
        assert_eq!(aperture(&[]), ExtReal::infinity());
    }

    #[test]
    fn alphatri_on_cones() {
        let q3 = gallery::q_grid(3);
        let grid = BallGrid::witness_closed(&[&q3, &q3]);
        let families = canonical_zero_aperture_families(&q3, &grid).unwrap();
        let r = check_alphatri(&q3, &families).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn contdomballs_on_gallery() {
        for d in [gallery::q_grid(3), gallery::g_grid(3), gallery::x3nr()] {
            let grid = BallGrid::witness_closed(&[&d, &d]);
            let r = check_contdomballs(&d, &grid).unwrap();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn kw_rv_esmyth_on_gallery() {
        for d in [gallery::q_grid(3), gallery::discrete_metric(2), gallery::g_grid(3)] {
            let grid = BallGrid::witness_closed(&[&d, &d]);
            let r = check_kw(&d, &grid).unwrap();
            assert!(r.passed(), "{r}");
        }
        for d in [gallery::q_grid(3), gallery::discrete_metric(2)] {
            let grid = BallGrid::witness_closed(&[&d, &d]);
            let r = check_rv(&d, &grid).unwrap();
            assert!(r.passed(), "{r}");
            assert!(r.applicable());
            let r = check_esmyth(&d, &grid).unwrap();
            assert!(r.passed(), "{r}");
        }
        // single point: trivial consistency
        let one = gallery::q_grid(2).restrict(&Subset::singleton(0)).unwrap();
        let grid = BallGrid::witness_closed(&[&one, &one]);
        assert!(check_kw(&one, &grid).unwrap().passed());
        assert!(check_esmyth(&one, &grid).unwrap().passed());
    }
}
