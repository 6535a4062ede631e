//! Directed subsets, ideals, quantitative suprema/maxima, completeness and
//! continuity predicates, bases, and the interpolation-condition report.
//!
//! Finite-carrier reductions used throughout (all exact):
//! * a subset is directed iff it is nonempty and contains a top `t` with
//!   `d(y,t) = 0` for every member `y` — the all-finite-subsets condition
//!   is monotone in the subset, so the full-set instance decides it;
//! * composition with the uniformity `Φᵈ` collapses to composition with
//!   the zero-relation `≤ᵈ`, because radii below the least positive table
//!   entry realize the same sublevel relation;
//! * Cauchy nets reduce to all-zero cycle sets (see [`crate::nets`]), so
//!   topological completeness/continuity are decided by profile sweeps.
//!
//! A corollary worth stating: since finite directed sets contain a top,
//! and a top is always a `d`-maximum and a `d`-supremum of its set, every
//! finite table is relationally max- and sup-complete. The relational
//! completeness predicates are still provided (they are cheap and keep
//! the duality checks honest), but counterexamples can only appear in the
//! topological predicates, and only for non-distances.

use serde::{Deserialize, Serialize};

use crate::carrier::{Carrier, Subset};
use crate::grel::{uniformly_below_rel, GRel};
use crate::metric::{classify, reflexivize_lower, reflexivize_upper};
use crate::nets::{cauchy_cycle_sets, limit_points, LimitKind, NetProfile};
use crate::report::Report;
use crate::xreal::ExtReal;
use crate::Error;

/// A decided predicate together with a human-readable witness on failure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decision {
    pub holds: bool,
    pub witness: Option<String>,
}

impl Decision {
    pub fn yes() -> Self {
        Decision { holds: true, witness: None }
    }

    pub fn no(witness: impl Into<String>) -> Self {
        Decision { holds: false, witness: Some(witness.into()) }
    }
}

/// `Y` is directed: every finite `F ⊆ Y` satisfies `(Fd)Y = 0`.
/// Checked by full enumeration of `F`; the empty set is never directed
/// (`inf ∅ = ∞`).
pub fn is_directed(y: &Subset, d: &GRel) -> Result<bool, Error> {
    d.require_square()?;
    if y.is_empty() {
        return Ok(false);
    }
    for f in y.subsets() {
        if !d.sup_inf(&f, y).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Directedness via the top criterion (equivalent on finite carriers,
/// linear in `|Y|²`): some `t ∈ Y` has `d(y,t) = 0` for all `y ∈ Y`.
pub fn is_directed_fast(y: &Subset, d: &GRel) -> bool {
    !y.is_empty() && y.iter().any(|t| y.iter().all(|f| d.at(f, t).is_zero()))
}

/// The tops of `Y`: elements `t ∈ Y` with `d(y,t) = 0` for all `y ∈ Y`.
pub fn tops(y: &Subset, d: &GRel) -> Subset {
    Subset::from_indices(y.iter().filter(|&t| y.iter().all(|f| d.at(f, t).is_zero())))
}

/// `Y` is final: `Y(dY) = 0`, i.e. every `y ∈ Y` has `z ∈ Y` with
/// `d(y,z) = 0`. The empty set is vacuously final (`sup ∅ = 0`).
pub fn is_final(y: &Subset, d: &GRel) -> Result<bool, Error> {
    d.require_square()?;
    Ok(y.iter().all(|a| y.iter().any(|b| d.at(a, b).is_zero())))
}

/// All directed subsets of the carrier.
pub fn directed_subsets(d: &GRel) -> Result<Vec<Subset>, Error> {
    let carrier = d.require_square()?;
    Ok(carrier.powerset().filter(|y| is_directed_fast(y, d)).collect())
}

/// `I` is an ideal: for every finite `F ⊆ X`, `F ⊆ I ⟺ (Fd)I = 0`.
pub fn is_ideal(i: &Subset, d: &GRel) -> Result<bool, Error> {
    let carrier = d.require_square()?;
    for f in carrier.powerset() {
        let inside = f.is_subset_of(i);
        let bounded = d.sup_inf(&f, i).is_zero();
        if inside != bounded {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The ball closure `{x : x d Y = 0}` of a final subset. For directed `Y`
/// this is the least ideal containing `Y`. Errors when `Y` is not final,
/// naming a failing element.
pub fn ideal_closure(y: &Subset, d: &GRel) -> Result<Subset, Error> {
    let carrier = d.require_square()?;
    if let Some(bad) = y.iter().find(|&a| !y.iter().any(|b| d.at(a, b).is_zero())) {
        return Err(Error::Precondition(format!(
            "subset is not final: `{}` has no zero-distance successor inside it",
            carrier.label(bad)
        )));
    }
    let dy = d.set_inf(y);
    Ok(Subset::from_indices(carrier.indices().filter(|&x| dy.at(x).is_zero())))
}

/// All ideals of the carrier.
pub fn ideals(d: &GRel) -> Result<Vec<Subset>, Error> {
    let carrier = d.require_square()?;
    let mut out = Vec::new();
    for s in carrier.powerset() {
        if is_ideal(&s, d)? {
            out.push(s);
        }
    }
    Ok(out)
}

/// `d`-suprema of `Y`: all `x` with `Y ≤ᵈ x` and `Yd ≥ xd` pointwise.
/// Possibly empty or multi-valued.
pub fn d_sup_set(y: &Subset, d: &GRel) -> Result<Subset, Error> {
    let carrier = d.require_square()?;
    let yd = d.set_sup(y);
    Ok(Subset::from_indices(carrier.indices().filter(|&x| {
        y.iter().all(|v| d.at(v, x).is_zero())
            && carrier.indices().all(|w| yd.at(w) >= d.at(x, w))
    })))
}

/// `d`-maxima of `Y`: all `x` with `Y ≤ᵈ x` and `dY ≤ dx` pointwise.
pub fn d_max_set(y: &Subset, d: &GRel) -> Result<Subset, Error> {
    let carrier = d.require_square()?;
    let dy = d.set_inf(y);
    Ok(Subset::from_indices(carrier.indices().filter(|&x| {
        y.iter().all(|v| d.at(v, x).is_zero())
            && carrier.indices().all(|w| dy.at(w) <= d.at(w, x))
    })))
}

/// The strict way-style relation under `d` as a characteristic table:
/// `x <ᵈ y` iff some lower-reflexivization ball of `y` sits inside
/// `{z : d(x,z) = 0}`; on finite carriers the ball stabilizes at the
/// zero-set of the row `d̲(y, ·)`.
pub fn strict_below(d: &GRel) -> Result<GRel, Error> {
    let carrier = d.require_square()?.clone();
    let lower = reflexivize_lower(d)?;
    let n = carrier.len();
    Ok(GRel::characteristic(carrier.clone(), carrier, |x, y| {
        (0..n).all(|z| !lower.at(y, z).is_zero() || d.at(x, z).is_zero())
    }))
}

/// Every `dir`-directed subset has a `d`-supremum.
pub fn is_sup_complete(d: &GRel) -> Result<Decision, Error> {
    let carrier = d.require_square()?;
    for y in directed_subsets(d)? {
        if d_sup_set(&y, d)?.is_empty() {
            return Ok(Decision::no(format!("directed {} has no supremum", y.display(carrier))));
        }
    }
    Ok(Decision::yes())
}

/// Every directed subset has a `d`-maximum. `dir` lets the directedness
/// side run over a different (e.g. strict or zero-) relation than `d`.
pub fn is_max_complete_rel(dir: &GRel, d: &GRel) -> Result<Decision, Error> {
    let carrier = d.require_square()?;
    if dir.source() != d.source() {
        return Err(Error::CarrierMismatch("direction relation on a different carrier".into()));
    }
    for y in directed_subsets(dir)? {
        if d_max_set(&y, d)?.is_empty() {
            return Ok(Decision::no(format!("directed {} has no maximum", y.display(carrier))));
        }
    }
    Ok(Decision::yes())
}

pub fn is_max_complete(d: &GRel) -> Result<Decision, Error> {
    is_max_complete_rel(d, d)
}

/// Topological completeness by exact profile sweep: every Cauchy cycle set
/// admits a limit of the given kind. Exact for arbitrary nets over finite
/// carriers, distances or not.
pub fn is_topologically_complete(d: &GRel, kind: LimitKind) -> Result<Decision, Error> {
    let carrier = d.require_square()?;
    for c in cauchy_cycle_sets(d)? {
        let p = NetProfile::cycling(carrier.clone(), &c)?;
        if limit_points(&p, d, kind)?.is_empty() {
            return Ok(Decision::no(format!(
                "Cauchy cycle {} has no limit",
                c.display(carrier)
            )));
        }
    }
    Ok(Decision::yes())
}

/// Interpolation criterion for max-continuity: `ℱd ∘ ≤ᵈ ≤ ℱd` over the
/// full powerset carrier. By the finite `Φᵈ` reduction this same
/// inequality also characterizes ball-hole continuity.
pub fn max_continuity_criterion(d: &GRel) -> Result<Decision, Error> {
    d.require_square()?;
    let fd = sup_application_table(d)?;
    let composed = fd.compose(&d.zero_relation())?;
    match composed.leq_witness(&fd) {
        None => Ok(Decision::yes()),
        Some((f, y)) => Ok(Decision::no(format!(
            "interpolation fails at ({}, {})",
            fd.source().label(f),
            d.source().label(y)
        ))),
    }
}

/// Direct max-continuity: every `x` is a `d`-maximum of some directed set.
pub fn is_max_continuous(d: &GRel) -> Result<Decision, Error> {
    let carrier = d.require_square()?;
    let directed = directed_subsets(d)?;
    'points: for x in carrier.indices() {
        for y in &directed {
            if d_max_set(y, d)?.contains(x) {
                continue 'points;
            }
        }
        return Ok(Decision::no(format!(
            "`{}` is a maximum of no directed subset",
            carrier.label(x)
        )));
    }
    Ok(Decision::yes())
}

/// Direct topological continuity: every `x` is a limit (of the given
/// kind) of some Cauchy profile.
pub fn is_topologically_continuous(d: &GRel, kind: LimitKind) -> Result<Decision, Error> {
    let carrier = d.require_square()?;
    let cycles = cauchy_cycle_sets(d)?;
    'points: for x in carrier.indices() {
        for c in &cycles {
            let p = NetProfile::cycling(carrier.clone(), c)?;
            if limit_points(&p, d, kind)?.contains(x) {
                continue 'points;
            }
        }
        return Ok(Decision::no(format!(
            "`{}` is a limit of no Cauchy profile",
            carrier.label(x)
        )));
    }
    Ok(Decision::yes())
}

/// The powerset of a carrier as a derived carrier, labels `{a,b,…}`,
/// together with the subset each label denotes.
pub fn powerset_carrier(base: &Carrier) -> Result<(Carrier, Vec<Subset>), Error> {
    if base.len() > 16 {
        return Err(Error::TooLarge { size: base.len(), cap: 16 });
    }
    let subsets: Vec<Subset> = base.powerset().collect();
    let labels: Vec<String> = subsets.iter().map(|s| s.display(base)).collect();
    Ok((Carrier::new(labels)?, subsets))
}

/// `𝒫d` (equivalently `ℱd` on a finite carrier): the table
/// `(Z, y) ↦ sup_{z∈Z} d(z,y)` over the powerset carrier.
pub fn sup_application_table(d: &GRel) -> Result<GRel, Error> {
    let carrier = d.require_square()?;
    let (pcarrier, subsets) = powerset_carrier(carrier)?;
    Ok(GRel::from_fn(pcarrier, carrier.clone(), |zi, y| {
        ExtReal::sup(subsets[zi].iter().map(|z| d.at(z, y)))
    }))
}

/// `d𝒫`: the table `(x, Z) ↦ sup_{z∈Z} d(x,z)` over the powerset carrier.
pub fn right_sup_application_table(d: &GRel) -> Result<GRel, Error> {
    let carrier = d.require_square()?;
    let (pcarrier, subsets) = powerset_carrier(carrier)?;
    Ok(GRel::from_fn(carrier.clone(), pcarrier, |x, zi| {
        ExtReal::sup(subsets[zi].iter().map(|z| d.at(x, z)))
    }))
}

/// Checks, for a distance `d` and every final `Y`, that
/// `[∀F: (Fd)Y = F(dY)] ⟺ Y directed`, both sides decided independently.
pub fn check_fdy(d: &GRel) -> Result<Report, Error> {
    let carrier = d.require_square()?;
    let mut report = Report::new("fdy");
    if !classify(d)?.is_distance {
        report.na("final-subset exchange law", "not a distance");
        return Ok(report);
    }
    for y in carrier.powerset() {
        if !is_final(&y, d)? {
            continue;
        }
        let exchange = carrier
            .powerset()
            .all(|f| d.sup_inf(&f, &y) == d.inf_sup(&f, &y));
        let directed = is_directed(&y, d)?;
        if exchange != directed {
            report.fails(
                "final-subset exchange law",
                format!("Y = {}: exchange={exchange}, directed={directed}", y.display(carrier)),
            );
            return Ok(report);
        }
    }
    report.holds("final-subset exchange law");
    Ok(report)
}

/// For a distance `d` and final `Y`: `d̄Y = dY` and `Yd̲ = Yd` pointwise.
pub fn check_ydyd(d: &GRel) -> Result<Report, Error> {
    let carrier = d.require_square()?;
    let mut report = Report::new("ydyd");
    if !classify(d)?.is_distance {
        report.na("reflexivization application laws", "not a distance");
        return Ok(report);
    }
    let upper = reflexivize_upper(d)?;
    let lower = reflexivize_lower(d)?;
    for y in carrier.powerset() {
        if !is_final(&y, d)? {
            continue;
        }
        if upper.set_inf(&y) != d.set_inf(&y) {
            report.fails("d̄Y = dY", format!("Y = {}", y.display(carrier)));
            return Ok(report);
        }
        if lower.set_sup(&y) != d.set_sup(&y) {
            report.fails("Yd̲ = Yd", format!("Y = {}", y.display(carrier)));
            return Ok(report);
        }
    }
    report.holds("d̄Y = dY");
    report.holds("Yd̲ = Yd");
    Ok(report)
}

/// The supremum/maximum comparison laws on one instance (distance-gated
/// where the statements require it).
pub fn check_supmax(d: &GRel) -> Result<Report, Error> {
    let carrier = d.require_square()?;
    let mut report = Report::new("supmax");
    if !classify(d)?.is_distance {
        report.na("supremum/maximum laws", "not a distance");
        return Ok(report);
    }
    let lower = reflexivize_lower(d)?;
    let mut supxx_ok = true;
    let mut max_sup_ok = true;
    let mut max1dir_ok = true;
    let mut emax_ok = true;
    let mut witness = String::new();
    'outer: for y in carrier.powerset() {
        let sups = d_sup_set(&y, d)?;
        let maxes = d_max_set(&y, d)?;
        let lower_sups = d_sup_set(&y, &lower)?;
        let yd = d.set_sup(&y);
        let dy = d.set_inf(&y);
        for x in carrier.indices() {
            // sup ⟺ row agreement + self-zero
            let row_eq = carrier.indices().all(|w| yd.at(w) == d.at(x, w));
            let alt = row_eq && d.at(x, x).is_zero();
            if sups.contains(x) != alt {
                supxx_ok = false;
                witness = format!("supxx at Y={}, x={}", y.display(carrier), carrier.label(x));
                break 'outer;
            }
            // every maximum is a supremum for the lower reflexivization
            if maxes.contains(x) && !lower_sups.contains(x) {
                max_sup_ok = false;
                witness = format!("max⟹sup at Y={}, x={}", y.display(carrier), carrier.label(x));
                break 'outer;
            }
        }
        if is_final(&y, d)? {
            for x in carrier.indices() {
                let col_eq = carrier.indices().all(|w| dy.at(w) == d.at(w, x));
                if maxes.contains(x) != col_eq {
                    max1dir_ok = false;
                    witness = format!("max1dir at Y={}, x={}", y.display(carrier), carrier.label(x));
                    break 'outer;
                }
            }
            if !maxes.is_empty() {
                for x in lower_sups.iter() {
                    if !maxes.contains(x) {
                        emax_ok = false;
                        witness =
                            format!("emax at Y={}, x={}", y.display(carrier), carrier.label(x));
                        break 'outer;
                    }
                }
            }
        }
    }
    report.assert("sup ⟺ row agreement with self-zero", supxx_ok, witness.clone());
    report.assert("maximum ⟹ lower-reflexivization supremum", max_sup_ok, witness.clone());
    report.assert("final Y: maximum ⟺ column agreement", max1dir_ok, witness.clone());
    report.assert("final Y with a maximum: lower-sup ⟹ maximum", emax_ok, witness);
    Ok(report)
}

/// The four transfer laws between value-level and relation-level
/// suprema/maxima, each gated on its interpolation hypothesis.
pub fn check_supmaxrelations(d: &GRel) -> Result<Report, Error> {
    let carrier = d.require_square()?;
    let mut report = Report::new("supmaxrel");
    let le = d.zero_relation();
    let strict = strict_below(d)?;
    let is_distance = classify(d)?.is_distance;

    // value-suprema are relation-suprema, unconditionally
    let mut ok = true;
    let mut witness = String::new();
    'a: for y in carrier.powerset() {
        let vs = d_sup_set(&y, d)?;
        let rs = d_sup_set(&y, &le)?;
        for x in vs.iter() {
            if !rs.contains(x) {
                ok = false;
                witness = format!("Y={}, x={}", y.display(carrier), carrier.label(x));
                break 'a;
            }
        }
    }
    report.assert("value-sup ⟹ relation-sup", ok, witness);

    // relation-suprema are value-suprema under the powerset interpolation
    // ≤^{𝒫d} ∘ d̲ ≤ 𝒫d
    let pd = sup_application_table(d)?;
    let lower = reflexivize_lower(d)?;
    let hyp = pd.zero_relation().compose(&lower)?.leq(&pd);
    if hyp {
        let mut ok = true;
        let mut witness = String::new();
        'b: for y in carrier.powerset() {
            let vs = d_sup_set(&y, d)?;
            let rs = d_sup_set(&y, &le)?;
            for x in rs.iter() {
                if !vs.contains(x) {
                    ok = false;
                    witness = format!("Y={}, x={}", y.display(carrier), carrier.label(x));
                    break 'b;
                }
            }
        }
        report.assert("relation-sup ⟹ value-sup", ok, witness);
    } else {
        report.na("relation-sup ⟹ value-sup", "powerset interpolation hypothesis fails");
    }

    if !is_distance {
        report.na("maximum transfer laws", "not a distance");
        return Ok(report);
    }

    // strict maxima are value maxima when d̄ ∘ <ᵈ ≤ d
    let upper = reflexivize_upper(d)?;
    if upper.compose(&strict)?.leq(d) {
        let mut ok = true;
        let mut witness = String::new();
        'c: for y in carrier.powerset() {
            let sm = d_max_set(&y, &strict)?;
            let vm = d_max_set(&y, d)?;
            for x in sm.iter() {
                if !vm.contains(x) {
                    ok = false;
                    witness = format!("Y={}, x={}", y.display(carrier), carrier.label(x));
                    break 'c;
                }
            }
        }
        report.assert("strict-max ⟹ value-max", ok, witness);
    } else {
        report.na("strict-max ⟹ value-max", "d̄∘<ᵈ ≤ d fails");
    }

    // value maxima of strictly-final sets are strict maxima when
    // <^{d̄} ∘ ≤ᵈ ⊇ <ᵈ
    let strict_upper = strict_below(&upper)?;
    if strict_upper.compose(&le)?.leq(&strict) {
        let mut ok = true;
        let mut witness = String::new();
        'd: for y in carrier.powerset() {
            if !is_final(&y, &strict)? {
                continue;
            }
            let sm = d_max_set(&y, &strict)?;
            let vm = d_max_set(&y, d)?;
            for x in vm.iter() {
                if !sm.contains(x) {
                    ok = false;
                    witness = format!("Y={}, x={}", y.display(carrier), carrier.label(x));
                    break 'd;
                }
            }
        }
        report.assert("value-max ⟹ strict-max on strictly-final sets", ok, witness);
    } else {
        report.na(
            "value-max ⟹ strict-max on strictly-final sets",
            "<^{d̄}∘≤ᵈ ⊇ <ᵈ fails",
        );
    }
    Ok(report)
}

/// Directedness ⟺ existence of an interleaving profile: some nonempty
/// tail set `T` with `d(y,t) = 0` for all `y ∈ Y, t ∈ T` and
/// `min_{y∈Y} d(t,y) = 0` for all `t ∈ T`.
pub fn check_directed_cauchy(d: &GRel) -> Result<Report, Error> {
    let carrier = d.require_square()?;
    let mut report = Report::new("dircauchy");
    for y in carrier.powerset() {
        let directed = is_directed(&y, d)?;
        let interleaved = carrier.powerset().any(|t| {
            !t.is_empty()
                && y.iter().all(|a| t.iter().all(|b| d.at(a, b).is_zero()))
                && t.iter()
                    .all(|b| ExtReal::inf(y.iter().map(|a| d.at(b, a))).is_zero())
        });
        if directed != interleaved {
            report.fails(
                "directed ⟺ interleaving tail set exists",
                format!("Y = {}: directed={directed}, interleaved={interleaved}", y.display(carrier)),
            );
            return Ok(report);
        }
    }
    report.holds("directed ⟺ interleaving tail set exists");
    Ok(report)
}

/// Cross-checks the finite reductions between topological and relational
/// completeness/continuity on a distance: ball-hole ⟺ max, hole-hole ⟺
/// sup, and the interpolation criterion ⟺ both direct continuity notions.
pub fn check_completeness_duality(d: &GRel) -> Result<Report, Error> {
    d.require_square()?;
    let mut report = Report::new("compdual");
    if !classify(d)?.is_distance {
        report.na("completeness/continuity dualities", "not a distance");
        return Ok(report);
    }
    let bh = is_topologically_complete(d, LimitKind::BallHole)?;
    let mx = is_max_complete(d)?;
    report.assert(
        "ball-hole complete ⟺ max-complete",
        bh.holds == mx.holds,
        format!("ball-hole={}, max={}", bh.holds, mx.holds),
    );
    let hh = is_topologically_complete(d, LimitKind::HoleHole)?;
    let sp = is_sup_complete(d)?;
    report.assert(
        "hole-hole complete ⟺ sup-complete",
        hh.holds == sp.holds,
        format!("hole-hole={}, sup={}", hh.holds, sp.holds),
    );
    Ok(report)
}

/// Cross-checks the continuity characterizations on a distance: the
/// interpolation criterion, direct max-continuity and direct ball-hole
/// continuity must all agree; hole-hole continuity must equal reflexivity.
pub fn check_continuity_duality(d: &GRel) -> Result<Report, Error> {
    d.require_square()?;
    let mut report = Report::new("ctsdual");
    if !classify(d)?.is_distance {
        report.na("continuity dualities", "not a distance");
        return Ok(report);
    }
    let criterion = max_continuity_criterion(d)?;
    let direct = is_max_continuous(d)?;
    report.assert(
        "interpolation criterion ⟺ direct max-continuity",
        criterion.holds == direct.holds,
        format!("criterion={}, direct={}", criterion.holds, direct.holds),
    );
    let bh = is_topologically_continuous(d, LimitKind::BallHole)?;
    report.assert(
        "ball-hole continuity ⟺ max-continuity",
        bh.holds == direct.holds,
        format!("ball-hole={}, max={}", bh.holds, direct.holds),
    );
    let hh = is_topologically_continuous(d, LimitKind::HoleHole)?;
    let reflexive = d.has_zero_diagonal();
    report.assert(
        "hole-hole continuity ⟺ reflexivity",
        hh.holds == reflexive,
        format!("hole-hole={}, reflexive={}", hh.holds, reflexive),
    );
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BasisKind {
    Max,
    BallHole,
}

/// `B` is a basis: every point is a maximum (resp. ball-hole limit) of a
/// directed subset (resp. Cauchy profile) drawn from `B`.
pub fn is_basis(b: &Subset, d: &GRel, kind: BasisKind) -> Result<Decision, Error> {
    let carrier = d.require_square()?;
    match kind {
        BasisKind::Max => {
            let directed: Vec<Subset> =
                directed_subsets(d)?.into_iter().filter(|y| y.is_subset_of(b)).collect();
            'pts: for x in carrier.indices() {
                for y in &directed {
                    if d_max_set(y, d)?.contains(x) {
                        continue 'pts;
                    }
                }
                return Ok(Decision::no(format!("`{}` unreachable from B", carrier.label(x))));
            }
            Ok(Decision::yes())
        }
        BasisKind::BallHole => {
            let cycles: Vec<Subset> =
                cauchy_cycle_sets(d)?.into_iter().filter(|c| c.is_subset_of(b)).collect();
            'pts: for x in carrier.indices() {
                for c in &cycles {
                    let p = NetProfile::cycling(carrier.clone(), c)?;
                    if limit_points(&p, d, LimitKind::BallHole)?.contains(x) {
                        continue 'pts;
                    }
                }
                return Ok(Decision::no(format!("`{}` unreachable from B", carrier.label(x))));
            }
            Ok(Decision::yes())
        }
    }
}

/// Decides the basis property and, when the space is continuous of the
/// matching kind, also the two characterizations (the through-composition
/// criterion and density in the matching topology), asserting agreement.
pub fn check_basis(b: &Subset, d: &GRel, kind: BasisKind) -> Result<Report, Error> {
    let carrier = d.require_square()?.clone();
    let mut report = Report::new("basis");
    let basis = is_basis(b, d, kind)?;
    report.holds(format!("basis by definition: {}", basis.holds));

    let continuous = match kind {
        BasisKind::Max => is_max_continuous(d)?,
        BasisKind::BallHole => is_topologically_continuous(d, LimitKind::BallHole)?,
    };
    if !continuous.holds {
        report.na("characterizations", "space is not continuous of this kind");
        return Ok(report);
    }

    let through = match kind {
        BasisKind::Max => d.compose_through(b, &d.zero_relation())?,
        BasisKind::BallHole => d.compose_through(b, d)?,
    };
    let criterion = uniformly_below_rel(&through, d)?;
    report.assert(
        "basis ⟺ through-composition criterion",
        basis.holds == criterion,
        format!("basis={}, criterion={criterion}", basis.holds),
    );

    let opens = match kind {
        BasisKind::Max => {
            let mut sub = crate::metric::subbasic_sets(d, &[crate::metric::SubbasisKind::UpperBall]);
            sub.extend(crate::metric::subbasic_sets(
                &d.zero_relation(),
                &[crate::metric::SubbasisKind::LowerBall],
            ));
            crate::metric::generate_from_subbasis(&carrier, sub)
        }
        BasisKind::BallHole => crate::metric::generated_topology(
            d,
            &[crate::metric::SubbasisKind::UpperBall, crate::metric::SubbasisKind::LowerBall],
        )?,
    };
    let dense = opens
        .members
        .iter()
        .all(|o| o.is_empty() || !o.intersection(b).is_empty());
    report.assert(
        "basis ⟺ density in the matching topology",
        basis.holds == dense,
        format!("basis={}, dense={dense}", basis.holds),
    );
    Ok(report)
}

/// Evaluates the interpolation hypotheses that transfer relational
/// completeness/continuity to the topological notions, together with
/// their conclusions. A clause whose hypothesis holds while its
/// conclusion fails is a genuine contradiction and is reported as a
/// failure; hypothesis failures are merely not-applicable.
///
/// When no auxiliary distance is supplied, `e` defaults to the
/// symmetrized lower reflexivization `d̲ ∨ d̲ᵒᵖ`.
pub fn interpolation_report(d: &GRel, e: Option<&GRel>) -> Result<Report, Error> {
    let carrier = d.require_square()?.clone();
    let mut report = Report::new("interp");
    if !classify(d)?.is_distance {
        report.na("interpolation conditions", "not a distance");
        return Ok(report);
    }
    let lower = reflexivize_lower(d)?;
    let upper = reflexivize_upper(d)?;
    let default_e = lower.symmetrize()?;
    let e = match e {
        Some(e) => {
            if e.source() != &carrier {
                return Err(Error::CarrierMismatch("auxiliary distance on a different carrier".into()));
            }
            e.clone()
        }
        None => default_e,
    };
    let e_is_distance = classify(&e)?.is_distance;

    let le = d.zero_relation();
    let strict = strict_below(d)?;
    let bh_complete = is_topologically_complete(d, LimitKind::BallHole)?;
    let bh_continuous = is_topologically_continuous(d, LimitKind::BallHole)?;

    // hole-topology completeness: every Cauchy cycle set has a lower-hole
    // limit
    let hole_complete = |f: &GRel| -> Result<bool, Error> {
        for c in cauchy_cycle_sets(f)? {
            let p = NetProfile::cycling(carrier.clone(), &c)?;
            let inf = p.liminf_cols(f)?;
            if !carrier.indices().any(|x| carrier.indices().all(|z| inf.at(z) >= f.at(z, x))) {
                return Ok(false);
            }
        }
        Ok(true)
    };

    // (1) powerset interpolation + strict-directed max-completeness
    let dp = right_sup_application_table(d)?;
    let le_dp = dp.zero_relation();
    let hyp1a = {
        let composed = lower.compose(&le_dp)?;
        uniformly_below_rel(&composed, &dp)?
    };
    let hyp1b = is_max_complete_rel(&strict, d)?.holds;
    if hyp1a && hyp1b {
        report.assert(
            "powerset interpolation + strict max-completeness ⟹ ball-hole complete",
            bh_complete.holds,
            bh_complete.witness.clone().unwrap_or_default(),
        );
    } else {
        report.na(
            "powerset interpolation + strict max-completeness ⟹ ball-hole complete",
            "hypothesis fails",
        );
    }

    // (2) finite-subset interpolation + d̄ ≤ d̲ + completeness of the
    // symmetrized lower reflexivization
    let fd = sup_application_table(d)?;
    let hyp2a = fd.zero_relation().compose(&upper)?.leq(&fd);
    let hyp2b = upper.leq(&lower);
    let hyp2c = is_max_complete_rel(&le, d)?.holds;
    let sym_lower = lower.symmetrize()?;
    let hyp2d = hole_complete(&sym_lower)?;
    if hyp2a && hyp2b && hyp2c && hyp2d {
        report.assert(
            "finite-subset interpolation ⟹ ball-hole complete",
            bh_complete.holds,
            bh_complete.witness.clone().unwrap_or_default(),
        );
    } else {
        report.na("finite-subset interpolation ⟹ ball-hole complete", "hypothesis fails");
    }

    // (3)/(4): transfer through the auxiliary distance e
    let e_below = |f: &GRel| -> Result<bool, Error> {
        // f ≾ e on X×X cells
        Ok(e.cells().all(|(i, j, v)| !v.is_zero() || f.at(i, j).is_zero()))
    };
    if e_is_distance {
        let hyp3a = {
            let composed = e.compose(&upper.zero_relation())?;
            uniformly_below_rel(&composed, d)?
        };
        let hyp3b = e_below(&lower)? && e_below(&upper.opposite())?;
        let hyp3c = is_max_complete(d)?.holds;
        let hyp3d = hole_complete(&e)?;
        if hyp3a && hyp3b && hyp3c && hyp3d {
            report.assert(
                "auxiliary-distance interpolation ⟹ ball-hole complete",
                bh_complete.holds,
                bh_complete.witness.clone().unwrap_or_default(),
            );
        } else {
            report.na(
                "auxiliary-distance interpolation ⟹ ball-hole complete",
                "hypothesis fails",
            );
        }
        let hyp4a = {
            let composed = e.compose(&le)?;
            uniformly_below_rel(&composed, d)?
        };
        let hyp4b = is_max_complete_rel(&le, d)?.holds;
        if hyp4a && hyp3b && hyp4b && hyp3d {
            report.assert(
                "sequential auxiliary interpolation ⟹ ball-hole complete",
                bh_complete.holds,
                bh_complete.witness.clone().unwrap_or_default(),
            );
        } else {
            report.na(
                "sequential auxiliary interpolation ⟹ ball-hole complete",
                "hypothesis fails",
            );
        }
    } else {
        report.na("auxiliary-distance clauses", "auxiliary e is not a distance");
    }

    // continuity transfers, all additionally gated on ball-hole continuity
    if bh_continuous.holds {
        if hyp1a {
            let concl = {
                let directed: Vec<Subset> = directed_subsets(&strict)?;
                let mut ok = true;
                'p: for x in carrier.indices() {
                    for y in &directed {
                        if d_max_set(y, d)?.contains(x) {
                            continue 'p;
                        }
                    }
                    ok = false;
                    break;
                }
                ok
            };
            report.assert(
                "ball-hole continuity + powerset interpolation ⟹ strict max-continuity",
                concl,
                "some point is a strict maximum of no strictly-directed set",
            );
        } else {
            report.na(
                "ball-hole continuity + powerset interpolation ⟹ strict max-continuity",
                "hypothesis fails",
            );
        }
        let hyp_cts2 = {
            let composed = d.compose(&le)?;
            uniformly_below_rel(&composed, d)?
        };
        if hyp_cts2 {
            let concl = is_max_continuous(d)?;
            report.assert(
                "ball-hole continuity + zero-set interpolation ⟹ max-continuity",
                concl.holds,
                concl.witness.unwrap_or_default(),
            );
        } else {
            report.na(
                "ball-hole continuity + zero-set interpolation ⟹ max-continuity",
                "hypothesis fails",
            );
        }
    } else {
        report.na("continuity transfer clauses", "not ball-hole continuous");
    }

    // domain transfer: under any of the three disjuncts, ball-hole domain
    // ⟺ (symmetrized-lower complete) max-domain
    let disj1 = hyp1a;
    let disj2 = {
        let composed = sym_lower.compose(&lower.zero_relation())?;
        uniformly_below_rel(&composed, d)?
    };
    let disj3 = {
        let composed = d.compose(&le)?;
        uniformly_below_rel(&composed, d)?
            && fd.zero_relation().compose(&lower)?.leq(&fd)
    };
    if disj1 || disj2 || disj3 {
        let pre = upper.leq(&lower);
        let bh_domain = pre && bh_continuous.holds && bh_complete.holds;
        let sym_complete = hole_complete(&sym_lower)?;
        let max_domain =
            pre && is_max_continuous(d)?.holds && is_max_complete(d)?.holds && sym_complete;
        report.assert(
            "domain transfer: ball-hole domain ⟺ complete max-domain",
            bh_domain == max_domain,
            format!("ball-hole domain={bh_domain}, max domain={max_domain}"),
        );
    } else {
        report.na(
            "domain transfer: ball-hole domain ⟺ complete max-domain",
            "no disjunct of the hypothesis holds",
        );
    }
    Ok(report)
}
