//! Eventually periodic net profiles and their limit machinery.
//!
//! A profile is a finite prefix followed by a nonempty cycle repeated
//! forever. Every `limsup`/`liminf` the theory needs then becomes an exact
//! max/min over the cycle: each cycle element occurs cofinally, the prefix
//! never matters in the tail, and nothing else occurs cofinally. In
//! particular a profile is Cauchy exactly when every ordered pair of cycle
//! elements (diagonal included) has value `0`, which also makes the
//! pre-Cauchy and Cauchy conditions coincide on profiles.

use serde::{Deserialize, Serialize};

use crate::carrier::{Carrier, Subset};
use crate::grel::{GRel, UnaryFn};
use crate::report::Report;
use crate::xreal::ExtReal;
use crate::Error;

/// An eventually periodic net over a carrier: `prefix` then `cycle` forever.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NetProfile {
    carrier: Carrier,
    prefix: Vec<usize>,
    cycle: Vec<usize>,
}

/// Label-level form used for JSON I/O; bind to a carrier with
/// [`NetProfile::from_labels`].
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ProfileSpec {
    #[serde(default)]
    pub prefix: Vec<String>,
    pub cycle: Vec<String>,
}

impl NetProfile {
    pub fn new(carrier: Carrier, prefix: Vec<usize>, cycle: Vec<usize>) -> Result<Self, Error> {
        if cycle.is_empty() {
            return Err(Error::Precondition("profile cycle must be nonempty".into()));
        }
        for &i in prefix.iter().chain(&cycle) {
            if i >= carrier.len() {
                return Err(Error::Shape(format!("profile index {i} out of range")));
            }
        }
        Ok(NetProfile { carrier, prefix, cycle })
    }

    pub fn from_labels(carrier: &Carrier, spec: &ProfileSpec) -> Result<Self, Error> {
        let resolve = |ls: &[String]| -> Result<Vec<usize>, Error> {
            ls.iter().map(|l| carrier.index_of(l)).collect()
        };
        NetProfile::new(carrier.clone(), resolve(&spec.prefix)?, resolve(&spec.cycle)?)
    }

    pub fn constant(carrier: Carrier, at: usize) -> Result<Self, Error> {
        NetProfile::new(carrier, vec![], vec![at])
    }

    /// A profile whose tail enumerates the given nonempty set forever.
    pub fn cycling(carrier: Carrier, set: &Subset) -> Result<Self, Error> {
        NetProfile::new(carrier, vec![], set.iter().collect())
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn prefix(&self) -> &[usize] {
        &self.prefix
    }

    pub fn cycle(&self) -> &[usize] {
        &self.cycle
    }

    pub fn spec(&self) -> ProfileSpec {
        ProfileSpec {
            prefix: self.prefix.iter().map(|&i| self.carrier.label(i).to_string()).collect(),
            cycle: self.cycle.iter().map(|&i| self.carrier.label(i).to_string()).collect(),
        }
    }

    /// The set of elements occurring cofinally (= the cycle as a set).
    pub fn tail_set(&self) -> Subset {
        Subset::from_indices(self.cycle.iter().copied())
    }

    /// `(x_λ)d`: `y ↦ limsup_λ d(x_λ, y)` — the max over the tail set.
    pub fn limsup_rows(&self, d: &GRel) -> Result<UnaryFn, Error> {
        self.check(d)?;
        let tail = self.tail_set();
        Ok(UnaryFn::from_fn(d.target().clone(), |y| {
            ExtReal::sup(tail.iter().map(|c| d.at(c, y)))
        }))
    }

    /// `y ↦ liminf_λ d(x_λ, y)` — the min over the tail set.
    pub fn liminf_rows(&self, d: &GRel) -> Result<UnaryFn, Error> {
        self.check(d)?;
        let tail = self.tail_set();
        Ok(UnaryFn::from_fn(d.target().clone(), |y| {
            ExtReal::inf(tail.iter().map(|c| d.at(c, y)))
        }))
    }

    /// `x ↦ limsup_λ d(x, x_λ)` — the max over the tail set.
    pub fn limsup_cols(&self, d: &GRel) -> Result<UnaryFn, Error> {
        self.check(d)?;
        let tail = self.tail_set();
        Ok(UnaryFn::from_fn(d.source().clone(), |x| {
            ExtReal::sup(tail.iter().map(|c| d.at(x, c)))
        }))
    }

    /// `d(x_λ)`: `x ↦ liminf_λ d(x, x_λ)` — the min over the tail set.
    pub fn liminf_cols(&self, d: &GRel) -> Result<UnaryFn, Error> {
        self.check(d)?;
        let tail = self.tail_set();
        Ok(UnaryFn::from_fn(d.source().clone(), |x| {
            ExtReal::inf(tail.iter().map(|c| d.at(x, c)))
        }))
    }

    fn check(&self, d: &GRel) -> Result<(), Error> {
        if *d.source() != self.carrier || *d.target() != self.carrier {
            return Err(Error::CarrierMismatch("profile carrier differs from relation".into()));
        }
        Ok(())
    }
}

/// `lim_γ limsup_δ d(x_γ, x_δ) = 0`. On profiles both tails reduce to the
/// cycle, so this asks every ordered pair of cycle elements to vanish.
pub fn is_precauchy(p: &NetProfile, d: &GRel) -> Result<bool, Error> {
    is_cauchy(p, d)
}

/// `lim_γ sup_{γ≺δ} d(x_γ, x_δ) = 0`, i.e. all intra-cycle values are `0`.
pub fn is_cauchy(p: &NetProfile, d: &GRel) -> Result<bool, Error> {
    d.require_square()?;
    if *d.source() != *p.carrier() {
        return Err(Error::CarrierMismatch("profile carrier differs from relation".into()));
    }
    let tail = p.tail_set();
    let all_zero = tail.iter().all(|u| tail.iter().all(|v| d.at(u, v).is_zero()));
    Ok(all_zero)
}

/// One of the four generated topologies `d^a_b` with `a` the upper symbol
/// (balls `•` / holes `◦`) and `b` the lower symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LimitKind {
    /// `d^•_•`: upper and lower balls.
    BallBall,
    /// `d^•_◦`: upper balls and lower holes — pointwise convergence of the
    /// columns `d(·, x_λ)` to `d(·, x)`.
    BallHole,
    /// `d^◦_•`: upper holes and lower balls — pointwise convergence of the
    /// rows `d(x_λ, ·)` to `d(x, ·)`.
    HoleBall,
    /// `d^◦_◦`: upper and lower holes.
    HoleHole,
}

impl LimitKind {
    pub const ALL: [LimitKind; 4] =
        [LimitKind::BallBall, LimitKind::BallHole, LimitKind::HoleBall, LimitKind::HoleHole];

    pub fn parse(s: &str) -> Result<Self, Error> {
        match s {
            "••" | "ball-ball" | "bb" => Ok(LimitKind::BallBall),
            "•◦" | "ball-hole" | "bh" => Ok(LimitKind::BallHole),
            "◦•" | "hole-ball" | "hb" => Ok(LimitKind::HoleBall),
            "◦◦" | "hole-hole" | "hh" => Ok(LimitKind::HoleHole),
            _ => Err(Error::Parse(format!("unknown limit kind `{s}`"))),
        }
    }
}

/// One of the four subbasic families generating the ball/hole topologies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Subbasic {
    /// Upper balls `{x : d(c,x) < r}`: `∀c: limsup d(c, x_λ) ≤ d(c, x)`.
    UpperBall,
    /// Upper holes `{x : d(x,c) > r}`: `∀c: liminf d(x_λ, c) ≥ d(x, c)`.
    UpperHole,
    /// Lower balls `{x : d(x,c) < r}`: `∀c: limsup d(x_λ, c) ≤ d(x, c)`.
    LowerBall,
    /// Lower holes `{x : d(c,x) > r}`: `∀c: liminf d(c, x_λ) ≥ d(c, x)`.
    LowerHole,
}

/// Limit points in the topology generated by one subbasic family.
pub fn subbasic_limits(p: &NetProfile, d: &GRel, which: Subbasic) -> Result<Subset, Error> {
    d.require_square()?;
    let n = d.source().len();
    let out = match which {
        Subbasic::UpperBall => {
            let sup = p.limsup_cols(d)?;
            Subset::from_indices(
                (0..n).filter(|&x| (0..n).all(|c| sup.at(c) <= d.at(c, x))),
            )
        }
        Subbasic::UpperHole => {
            let inf = p.liminf_rows(d)?;
            Subset::from_indices(
                (0..n).filter(|&x| (0..n).all(|c| inf.at(c) >= d.at(x, c))),
            )
        }
        Subbasic::LowerBall => {
            let sup = p.limsup_rows(d)?;
            Subset::from_indices(
                (0..n).filter(|&x| (0..n).all(|c| sup.at(c) <= d.at(x, c))),
            )
        }
        Subbasic::LowerHole => {
            let inf = p.liminf_cols(d)?;
            Subset::from_indices(
                (0..n).filter(|&x| (0..n).all(|c| inf.at(c) >= d.at(c, x))),
            )
        }
    };
    Ok(out)
}

/// All limit points of the profile in the chosen generated topology.
pub fn limit_points(p: &NetProfile, d: &GRel, kind: LimitKind) -> Result<Subset, Error> {
    let (upper, lower) = match kind {
        LimitKind::BallBall => (Subbasic::UpperBall, Subbasic::LowerBall),
        LimitKind::BallHole => (Subbasic::UpperBall, Subbasic::LowerHole),
        LimitKind::HoleBall => (Subbasic::UpperHole, Subbasic::LowerBall),
        LimitKind::HoleHole => (Subbasic::UpperHole, Subbasic::LowerHole),
    };
    Ok(subbasic_limits(p, d, upper)?.intersection(&subbasic_limits(p, d, lower)?))
}

/// For symmetric distances, pre-Cauchy and Cauchy coincide. On profiles
/// the two predicates agree definitionally, so this mainly reports
/// applicability of the hypothesis and re-asserts the equivalence.
pub fn check_sym_cauchy(p: &NetProfile, d: &GRel) -> Result<Report, Error> {
    let mut report = Report::new("symcauchy");
    let class = crate::metric::classify(d)?;
    if !(class.is_distance && d.is_symmetric()) {
        report.na("pre-Cauchy ⟺ Cauchy", "d is not a symmetric distance");
        return Ok(report);
    }
    let pre = is_precauchy(p, d)?;
    let cau = is_cauchy(p, d)?;
    report.assert(
        "pre-Cauchy ⟺ Cauchy",
        pre == cau,
        format!("pre-Cauchy={pre}, Cauchy={cau}"),
    );
    Ok(report)
}

/// The pre-Cauchy limit laws on one profile:
/// * if the profile is `d̄`-pre-Cauchy, the rows `d(x_λ, ·)` converge
///   pointwise (are constant along the cycle);
/// * if it is `d̲`-pre-Cauchy, the columns converge and
///   `(x_λ)d̲(y) = sup_z (d(z,y) - d(z, x_λ))₊` holds exactly;
/// * if it is `d`-pre-Cauchy and `d` is a distance, the tail evaluations
///   through `d` agree with those through the matching reflexivization.
pub fn check_clim(p: &NetProfile, d: &GRel) -> Result<Report, Error> {
    d.require_square()?;
    let mut report = Report::new("clim");
    let n = d.source().len();
    let upper = crate::metric::reflexivize_upper(d)?;
    let lower = crate::metric::reflexivize_lower(d)?;

    if is_precauchy(p, &upper)? {
        let sup = p.limsup_rows(d)?;
        let inf = p.liminf_rows(d)?;
        report.assert(
            "d̄-pre-Cauchy ⟹ rows converge pointwise",
            (0..n).all(|y| sup.at(y) == inf.at(y)),
            "limsup and liminf of a row differ",
        );
    } else {
        report.na("d̄-pre-Cauchy ⟹ rows converge pointwise", "profile is not d̄-pre-Cauchy");
    }

    if is_precauchy(p, &lower)? {
        let sup_cols = p.limsup_cols(d)?;
        let inf_cols = p.liminf_cols(d)?;
        report.assert(
            "d̲-pre-Cauchy ⟹ columns converge pointwise",
            (0..n).all(|x| sup_cols.at(x) == inf_cols.at(x)),
            "limsup and liminf of a column differ",
        );
        // tail value through d̲ computed two independent ways
        let lhs = p.limsup_rows(&lower)?;
        let cols = p.liminf_cols(d)?;
        let mut ok = true;
        let mut witness = String::new();
        for y in 0..n {
            let rhs = ExtReal::sup(
                (0..n)
                    .map(|z| d.at(z, y).truncated_sub(cols.at(z))),
            );
            if *lhs.at(y) != rhs {
                ok = false;
                witness = format!("at {}: {} vs {}", d.source().label(y), lhs.at(y), rhs);
                break;
            }
        }
        report.assert("tail of d̲ equals sup of truncated column differences", ok, witness);
    } else {
        report.na("d̲-pre-Cauchy clauses", "profile is not d̲-pre-Cauchy");
    }

    let class = crate::metric::classify(d)?;
    if class.is_distance && is_precauchy(p, d)? {
        let via_d = p.liminf_cols(d)?;
        let via_upper = p.liminf_cols(&upper)?;
        report.assert(
            "d-pre-Cauchy ⟹ column tails through d and d̄ agree",
            (0..n).all(|x| via_d.at(x) == via_upper.at(x)),
            "column tail mismatch",
        );
        let rows_d = p.limsup_rows(d)?;
        let rows_lower = p.limsup_rows(&lower)?;
        report.assert(
            "d-pre-Cauchy ⟹ row tails through d and d̲ agree",
            (0..n).all(|y| rows_d.at(y) == rows_lower.at(y)),
            "row tail mismatch",
        );
    } else {
        report.na(
            "d-pre-Cauchy tail agreement",
            "profile is not d-pre-Cauchy over a distance",
        );
    }
    Ok(report)
}

/// The convergence sufficient conditions on one profile, for every point:
/// vanishing tail distance through `d̲` forces lower-hole convergence,
/// vanishing tail distance through `d̄` forces lower-ball convergence,
/// and a lower-ball limit that is self-zero has vanishing tail distance.
pub fn check_convchar(p: &NetProfile, d: &GRel) -> Result<Report, Error> {
    d.require_square()?;
    let mut report = Report::new("convchar");
    let n = d.source().len();
    let lower = crate::metric::reflexivize_lower(d)?;
    let upper = crate::metric::reflexivize_upper(d)?;
    let tail_lower = p.limsup_rows(&lower)?;
    let tail_upper = p.limsup_rows(&upper)?;
    let tail_d = p.limsup_rows(d)?;
    let hole = subbasic_limits(p, d, Subbasic::LowerHole)?;
    let ball = subbasic_limits(p, d, Subbasic::LowerBall)?;

    let mut ac = true;
    let mut ab = true;
    let mut ab_le = true;
    let mut witness = String::new();
    for x in 0..n {
        if tail_lower.at(x).is_zero() && !hole.contains(x) {
            ac = false;
            witness = d.source().label(x).to_string();
        }
        if tail_upper.at(x).is_zero() && !ball.contains(x) {
            ab = false;
            witness = d.source().label(x).to_string();
        }
        if ball.contains(x) && d.at(x, x).is_zero() && !tail_d.at(x).is_zero() {
            ab_le = false;
            witness = d.source().label(x).to_string();
        }
    }
    report.assert("vanishing d̲-tail ⟹ lower-hole limit", ac, witness.clone());
    report.assert("vanishing d̄-tail ⟹ lower-ball limit", ab, witness.clone());
    report.assert("self-zero lower-ball limit ⟹ vanishing d-tail", ab_le, witness);
    Ok(report)
}

/// The limit characterizations for pre-Cauchy profiles: under a
/// `d̄`-pre-Cauchy hypothesis, hole-ball limits are exactly the points
/// whose row matches the tail row; dually for `d̲` and ball-hole limits;
/// a ball-hole limit determines the tail of `d̲`; and for pre-Cauchy
/// distances, lower-hole limits are exactly the vanishing-tail points.
pub fn check_dlimits(p: &NetProfile, d: &GRel) -> Result<Report, Error> {
    d.require_square()?;
    let mut report = Report::new("dlimits");
    let n = d.source().len();
    let lower = crate::metric::reflexivize_lower(d)?;
    let upper = crate::metric::reflexivize_upper(d)?;

    if is_precauchy(p, &upper)? {
        let tail = p.limsup_rows(d)?;
        let topological = limit_points(p, d, LimitKind::HoleBall)?;
        let row_match = Subset::from_indices(
            (0..n).filter(|&x| (0..n).all(|y| tail.at(y) == d.at(x, y))),
        );
        report.assert(
            "d̄-pre-Cauchy: hole-ball limits are the row-matching points",
            topological == row_match,
            format!(
                "topological {} vs rows {}",
                topological.display(d.source()),
                row_match.display(d.source())
            ),
        );
    } else {
        report.na("d̄-pre-Cauchy: hole-ball limits are the row-matching points", "not d̄-pre-Cauchy");
    }

    if is_precauchy(p, &lower)? {
        let tail_cols = p.liminf_cols(d)?;
        let topological = limit_points(p, d, LimitKind::BallHole)?;
        let col_match = Subset::from_indices(
            (0..n).filter(|&x| (0..n).all(|c| tail_cols.at(c) == d.at(c, x))),
        );
        report.assert(
            "d̲-pre-Cauchy: ball-hole limits are the column-matching points",
            topological == col_match,
            format!(
                "topological {} vs columns {}",
                topological.display(d.source()),
                col_match.display(d.source())
            ),
        );
        // a ball-hole limit pins the tail of the lower reflexivization
        let tail_low = p.limsup_rows(&lower)?;
        let mut ok = true;
        let mut witness = String::new();
        for x in topological.iter() {
            for y in 0..n {
                if tail_low.at(y) != lower.at(x, y) {
                    ok = false;
                    witness = format!("limit {}, at {}", d.source().label(x), d.source().label(y));
                }
            }
        }
        report.assert("ball-hole limits determine the d̲-tail", ok, witness);
    } else {
        report.na("d̲-pre-Cauchy clauses", "not d̲-pre-Cauchy");
    }

    if crate::metric::classify(d)?.is_distance && is_precauchy(p, d)? {
        let tail = p.limsup_rows(d)?;
        let hole = subbasic_limits(p, d, Subbasic::LowerHole)?;
        let vanishing = Subset::from_indices((0..n).filter(|&x| tail.at(x).is_zero()));
        report.assert(
            "pre-Cauchy distance: lower-hole limits are the vanishing-tail points",
            hole == vanishing,
            format!(
                "hole {} vs vanishing {}",
                hole.display(d.source()),
                vanishing.display(d.source())
            ),
        );
    } else {
        report.na(
            "pre-Cauchy distance: lower-hole limits are the vanishing-tail points",
            "not a pre-Cauchy profile over a distance",
        );
    }
    Ok(report)
}

/// All nonempty subsets whose elements pairwise (and reflexively) vanish —
/// exactly the tail sets of Cauchy profiles.
pub fn cauchy_cycle_sets(d: &GRel) -> Result<Vec<Subset>, Error> {
    let carrier = d.require_square()?;
    let mut out = Vec::new();
    for s in carrier.powerset() {
        if s.is_empty() {
            continue;
        }
        if s.iter().all(|u| s.iter().all(|v| d.at(u, v).is_zero())) {
            out.push(s);
        }
    }
    Ok(out)
}
