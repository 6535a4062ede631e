//! The check registry, reproducible instance generators, and randomized
//! counterexample search with greedy witness minimization.
//!
//! Every registered check is deterministic in its inputs and returns a
//! three-valued verdict: `holds`, `counterexample` (with a witness that
//! re-verifies), or `not-applicable` when the hypothesis of the law fails
//! on the instance — hypothesis-gated laws are never vacuously green, the
//! sweep counts how often they actually applied.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::balls::BallGrid;
use crate::carrier::{Carrier, Subset};
use crate::grel::GRel;
use crate::nets::NetProfile;
use crate::report::Report;
use crate::wbd::{DomainKind, WayBelowMode};
use crate::xreal::ExtReal;
use crate::Error;

/// One instance fed to a check: a square relation, an optional auxiliary
/// relation on the same carrier, optional profiles, and an optional grid.
#[derive(Clone, Debug)]
pub struct Instance {
    pub relation: GRel,
    pub aux: Option<GRel>,
    pub profiles: Vec<NetProfile>,
    pub grid: Option<BallGrid>,
}

impl Instance {
    pub fn new(relation: GRel) -> Self {
        Instance { relation, aux: None, profiles: Vec::new(), grid: None }
    }

    pub fn with_aux(mut self, aux: GRel) -> Self {
        self.aux = Some(aux);
        self
    }

    fn aux_or_self(&self) -> &GRel {
        self.aux.as_ref().unwrap_or(&self.relation)
    }

    fn grid_or_default(&self) -> BallGrid {
        match &self.grid {
            Some(g) => g.clone(),
            None => BallGrid::witness_closed(&[&self.relation, self.aux_or_self()]),
        }
    }

    /// All profiles to sweep: the supplied ones plus every constant and
    /// two-element cycling profile (exact and cheap on small carriers).
    fn profile_family(&self) -> Result<Vec<NetProfile>, Error> {
        let carrier = self.relation.require_square()?.clone();
        let mut out = self.profiles.clone();
        for x in carrier.indices() {
            out.push(NetProfile::constant(carrier.clone(), x)?);
            for y in carrier.indices() {
                if x < y {
                    out.push(NetProfile::new(carrier.clone(), vec![], vec![x, y])?);
                    out.push(NetProfile::new(carrier.clone(), vec![x], vec![y])?);
                }
            }
        }
        Ok(out)
    }

    /// A short stable digest of the instance for report lines.
    pub fn digest(&self) -> String {
        use std::collections::hash_map::DefaultHasher;
        use std::hash::{Hash, Hasher};
        let mut h = DefaultHasher::new();
        crate::json::grel_to_string(&self.relation).hash(&mut h);
        if let Some(aux) = &self.aux {
            crate::json::grel_to_string(aux).hash(&mut h);
        }
        format!("{:016x}", h.finish())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Holds,
    Counterexample,
    NotApplicable,
    Untested,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Verdict {
    pub check: String,
    pub statement: String,
    pub status: Status,
    pub instance_digest: String,
    pub witness: Option<String>,
    pub detail: Report,
}

fn verdict_from_report(id: &str, statement: &str, inst: &Instance, report: Report) -> Verdict {
    let status = if !report.passed() {
        Status::Counterexample
    } else if report.applicable() {
        Status::Holds
    } else {
        Status::NotApplicable
    };
    let witness = report
        .failures()
        .next()
        .map(|c| format!("{}: {:?}", c.label, c.status));
    Verdict {
        check: id.to_string(),
        statement: statement.to_string(),
        status,
        instance_digest: inst.digest(),
        witness,
        detail: report,
    }
}

type CheckFn = fn(&Instance) -> Result<Report, Error>;

pub struct CheckDef {
    pub id: &'static str,
    pub statement: &'static str,
    run: CheckFn,
}

fn merge_profile_reports(
    name: &str,
    inst: &Instance,
    f: impl Fn(&NetProfile, &GRel) -> Result<Report, Error>,
) -> Result<Report, Error> {
    let mut merged = Report::new(name);
    for (k, p) in inst.profile_family()?.iter().enumerate() {
        let mut r = f(p, &inst.relation)?;
        r.check = format!("profile {k}");
        merged.merge(r);
    }
    Ok(merged)
}

pub fn registry() -> &'static [CheckDef] {
    &[
        CheckDef {
            id: "hemiprop",
            statement: "both reflexivizations are hemimetrics; their order against d decides triangle and reflexivity; distances factor through them",
            run: |i| crate::metric::check_hemiprop(&i.relation),
        },
        CheckDef {
            id: "reflexrestrict",
            statement: "reflexivization commutes with restriction when composition through the subset stays below d",
            run: |i| {
                let carrier = i.relation.require_square()?.clone();
                let mut merged = Report::new("reflexrestrict");
                for y in carrier.powerset() {
                    if y.is_empty() {
                        continue;
                    }
                    let mut r = crate::metric::check_reflexrestrict(&i.relation, &y)?;
                    r.check = format!("Y = {}", y.display(&carrier));
                    merged.merge(r);
                }
                Ok(merged)
            },
        },
        CheckDef {
            id: "symcauchy",
            statement: "for symmetric distances, pre-Cauchy and Cauchy profiles coincide",
            run: |i| merge_profile_reports("symcauchy", i, crate::nets::check_sym_cauchy),
        },
        CheckDef {
            id: "clim",
            statement: "pre-Cauchy tails converge pointwise and evaluate equally through the matching reflexivizations",
            run: |i| merge_profile_reports("clim", i, crate::nets::check_clim),
        },
        CheckDef {
            id: "convchar",
            statement: "vanishing reflexivized tails force hole/ball convergence, and self-zero ball limits have vanishing tails",
            run: |i| merge_profile_reports("convchar", i, crate::nets::check_convchar),
        },
        CheckDef {
            id: "dlimits",
            statement: "pre-Cauchy limits are characterized by row/column agreement with the tail",
            run: |i| merge_profile_reports("dlimits", i, crate::nets::check_dlimits),
        },
        CheckDef {
            id: "fdy",
            statement: "for final subsets of a distance, the sup/inf exchange law holds exactly on directed subsets",
            run: |i| crate::order::check_fdy(&i.relation),
        },
        CheckDef {
            id: "ydyd",
            statement: "final subsets evaluate equally through d and its reflexivizations",
            run: |i| crate::order::check_ydyd(&i.relation),
        },
        CheckDef {
            id: "supmax",
            statement: "suprema are row-agreeing self-zero points; maxima of final sets are column-agreeing points and pass to lower-reflexivization suprema",
            run: |i| crate::order::check_supmax(&i.relation),
        },
        CheckDef {
            id: "supmaxrel",
            statement: "value-level and relation-level suprema/maxima transfer under the interpolation hypotheses",
            run: |i| crate::order::check_supmaxrelations(&i.relation),
        },
        CheckDef {
            id: "dircauchy",
            statement: "directedness is equivalent to the existence of an interleaving tail set",
            run: |i| crate::order::check_directed_cauchy(&i.relation),
        },
        CheckDef {
            id: "compdual",
            statement: "topological and relational completeness coincide on finite distances",
            run: |i| crate::order::check_completeness_duality(&i.relation),
        },
        CheckDef {
            id: "ctsdual",
            statement: "the interpolation criterion, max-continuity and ball-hole continuity coincide; hole-hole continuity is reflexivity",
            run: |i| crate::order::check_continuity_duality(&i.relation),
        },
        CheckDef {
            id: "interp",
            statement: "each interpolation hypothesis transfers relational completeness/continuity to the topological notions",
            run: |i| crate::order::interpolation_report(&i.relation, i.aux.as_ref()),
        },
        CheckDef {
            id: "basis",
            statement: "basis-hood matches the through-composition criterion and density when the space is continuous",
            run: |i| {
                let carrier = i.relation.require_square()?.clone();
                let mut merged = Report::new("basis");
                let mut r =
                    crate::order::check_basis(&carrier.full_subset(), &i.relation, crate::order::BasisKind::Max)?;
                r.check = "B = X".into();
                merged.merge(r);
                Ok(merged)
            },
        },
        CheckDef {
            id: "wayposet",
            statement: "on a finite partial order the relational way-below distance is the order itself",
            run: |i| {
                let mut report = Report::new("wayposet");
                let d = &i.relation;
                let class = crate::metric::classify(d)?;
                let characteristic = d.cells().all(|(_, _, v)| v.is_zero() || !v.is_finite());
                let antisym = d.require_square().map(|c| {
                    c.indices().all(|a| {
                        c.indices()
                            .all(|b| a == b || !(d.at(a, b).is_zero() && d.at(b, a).is_zero()))
                    })
                })?;
                if !(characteristic && class.is_hemimetric && antisym) {
                    report.na("way-below equals the order", "not a finite partial order");
                    return Ok(report);
                }
                let wb = crate::wbd::way_below_relational(d, WayBelowMode::Sup)?;
                report.assert("way-below equals the order", wb == *d, format!("{wb}"));
                Ok(report)
            },
        },
        CheckDef {
            id: "rdprops",
            statement: "the relational way-below distance obeys the order bounds and is a distance under the stated hypotheses",
            run: |i| {
                let mut merged = Report::new("rdprops");
                let mut r = crate::wbd::check_rdprops(&i.relation, WayBelowMode::Max)?;
                r.check = "mode max".into();
                merged.merge(r);
                let mut r = crate::wbd::check_rdprops(&i.relation, WayBelowMode::Sup)?;
                r.check = "mode sup".into();
                merged.merge(r);
                Ok(merged)
            },
        },
        CheckDef {
            id: "wbprops",
            statement: "the topological way-below distance obeys the order bounds and matches the relational one where provable",
            run: |i| {
                let mut merged = Report::new("wbprops");
                let mut r = crate::wbd::check_wbprops(
                    &i.relation,
                    &i.profiles,
                    crate::nets::LimitKind::BallHole,
                )?;
                r.check = "ball-hole".into();
                merged.merge(r);
                let mut r = crate::wbd::check_wbprops(
                    &i.relation,
                    &i.profiles,
                    crate::nets::LimitKind::HoleHole,
                )?;
                r.check = "hole-hole".into();
                merged.merge(r);
                Ok(merged)
            },
        },
        CheckDef {
            id: "rdomaineqs",
            statement: "relational domain-hood of d is equivalent to sup-completeness/continuity through its lower reflexivization with d recovered as the way-below distance",
            run: |i| crate::wbd::check_dual_characterization(&i.relation, DomainKind::Max),
        },
        CheckDef {
            id: "tdomaineqs",
            statement: "topological domain-hood of d is equivalent to the hole-hole side through its lower reflexivization",
            run: |i| crate::wbd::check_dual_characterization(&i.relation, DomainKind::BallHole),
        },
        CheckDef {
            id: "hausfunc",
            statement: "the two Hausdorff distances are functorial up to a factor of two, with exact upper absorption",
            run: |i| crate::hausdorff::check_hausfunc(&i.relation, i.aux_or_self()),
        },
        CheckDef {
            id: "hausprop",
            statement: "the powerset is max-complete for the reverse and sup-complete for the classical Hausdorff distance, with unions as witnesses",
            run: |i| crate::hausdorff::check_hausdorff_completeness(&i.relation),
        },
        CheckDef {
            id: "dhhemi",
            statement: "when pre-Cauchy profiles reverse, the reverse Hausdorff distance vanishes on the diagonal of directed subsets",
            run: |i| crate::hausdorff::check_dhhemi(&i.relation, &i.profiles),
        },
        CheckDef {
            id: "precompletion",
            statement: "the directed-subset completion of a max-continuous distance is a max-domain with the principal down-sets as basis",
            run: |i| match crate::hausdorff::complete_predomain(&i.relation) {
                Ok(c) => Ok(c.report),
                Err(Error::Precondition(reason)) => {
                    let mut r = Report::new("precompletion");
                    r.na("completion", reason);
                    Ok(r)
                }
                Err(e) => Err(e),
            },
        },
        CheckDef {
            id: "pdcomp",
            statement: "predomains are exactly the isometrically embedded max-bases of max-domains",
            run: |i| crate::hausdorff::check_pdcomp(&i.relation),
        },
        CheckDef {
            id: "universality",
            statement: "the ideal completion over a basis receives an isometry that is onto exactly for domains",
            run: |i| {
                let carrier = i.relation.require_square()?.clone();
                crate::hausdorff::check_universality(&carrier.full_subset(), &i.relation)
            },
        },
        CheckDef {
            id: "bfunc",
            statement: "composition transports to the ball space; reflexivizations transport for reflexive inputs",
            run: |i| crate::balls::check_bfunc(&i.relation, i.aux_or_self(), &i.grid_or_default()),
        },
        CheckDef {
            id: "xdy",
            statement: "the ball order recovers the distance table",
            run: |i| crate::balls::check_xdy(&i.relation, &i.grid_or_default()),
        },
        CheckDef {
            id: "binter",
            statement: "strict ball factorization, the comparison law, the zero-column transport and the three interpolation inequalities",
            run: |i| {
                crate::balls::check_bunder_binter(&i.relation, i.aux_or_self(), &i.grid_or_default())
            },
        },
        CheckDef {
            id: "alphatri",
            statement: "aperture is subadditive along both ball Hausdorff distances",
            run: |i| {
                let grid = i.grid_or_default();
                let fams =
                    crate::balls::canonical_zero_aperture_families(&i.relation, &grid)?;
                crate::balls::check_alphatri(&i.relation, &fams)
            },
        },
        CheckDef {
            id: "contdomballs",
            statement: "ball-hole completeness and continuity transport to the strict grid ball order",
            run: |i| crate::balls::check_contdomballs(&i.relation, &i.grid_or_default()),
        },
        CheckDef {
            id: "kw",
            statement: "ball-hole domain-hood is equivalent to the grid ball order being a strict max-domain with the transported nonstrict order",
            run: |i| crate::balls::check_kw(&i.relation, &i.grid_or_default()),
        },
        CheckDef {
            id: "rv",
            statement: "for hemimetrics, Smyth completeness is equivalent to the grid ball order being a strict max-domain",
            run: |i| crate::balls::check_rv(&i.relation, &i.grid_or_default()),
        },
        CheckDef {
            id: "esmyth",
            statement: "the five completion clauses hold or fail together for hemimetrics",
            run: |i| crate::balls::check_esmyth(&i.relation, &i.grid_or_default()),
        },
    ]
}

pub fn check_ids() -> Vec<&'static str> {
    registry().iter().map(|c| c.id).collect()
}

fn lookup(id: &str) -> Result<&'static CheckDef, Error> {
    registry()
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownCheck(id.to_string()))
}

/// Runs one registered check on one instance.
pub fn run_check(id: &str, inst: &Instance) -> Result<Verdict, Error> {
    let def = lookup(id)?;
    let report = (def.run)(inst)?;
    Ok(verdict_from_report(def.id, def.statement, inst, report))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GenKind {
    Hemimetric,
    Distance,
    PartialOrder,
    StrictOrder,
    Predomain,
    MaxContinuous,
}

impl GenKind {
    pub fn parse(s: &str) -> Result<Self, Error> {
        match s {
            "hemimetric" => Ok(GenKind::Hemimetric),
            "distance" => Ok(GenKind::Distance),
            "partial-order" => Ok(GenKind::PartialOrder),
            "strict-order" => Ok(GenKind::StrictOrder),
            "predomain" => Ok(GenKind::Predomain),
            "max-continuous" => Ok(GenKind::MaxContinuous),
            _ => Err(Error::Parse(format!("unknown generator kind `{s}`"))),
        }
    }
}

fn letters(n: usize) -> Carrier {
    Carrier::new((0..n).map(|i| ((b'a' + (i % 26) as u8) as char).to_string() + if i >= 26 { "x" } else { "" }))
        .unwrap()
}

/// A value from the small pool `{0, 1/4, 1/2, 3/4, 1, 2, ∞}` with zeros
/// boosted; small pools keep directedness interesting and ball grids
/// tractable.
fn random_value(rng: &mut ChaCha8Rng) -> ExtReal {
    let roll: f64 = rng.gen();
    if roll < 0.35 {
        ExtReal::zero()
    } else if roll < 0.45 {
        ExtReal::infinity()
    } else {
        let pool = [
            ExtReal::ratio(1, 4),
            ExtReal::ratio(1, 2),
            ExtReal::ratio(3, 4),
            ExtReal::from_int(1),
            ExtReal::from_int(2),
        ];
        pool[rng.gen_range(0..pool.len())].clone()
    }
}

fn random_table(rng: &mut ChaCha8Rng, n: usize) -> GRel {
    let carrier = letters(n);
    let values: Vec<ExtReal> = (0..n * n).map(|_| random_value(rng)).collect();
    GRel::from_fn(carrier.clone(), carrier, |i, j| values[i * n + j].clone())
}

/// A reproducible random square table with no law imposed.
pub fn random_square_table(size: usize, seed: u64) -> GRel {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_table(&mut rng, size)
}

/// A reproducible random rectangular table between the given carriers.
pub fn random_rel(source: &Carrier, target: &Carrier, seed: u64) -> GRel {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    GRel::from_fn(source.clone(), target.clone(), |_, _| random_value(&mut rng))
}

/// A carrier of `n` distinct labels, for building test instances.
pub fn named_carrier(prefix: &str, n: usize) -> Carrier {
    Carrier::new((0..n).map(|i| format!("{prefix}{i}"))).unwrap()
}

/// The largest distance below a table: min-plus closure over nonempty
/// paths (iterate `d ← d ∧ d∘d` to the fixpoint).
fn min_plus_closure(mut d: GRel) -> GRel {
    loop {
        let next = d.meet(&d.compose(&d).unwrap()).unwrap();
        if next == d {
            return d;
        }
        d = next;
    }
}

/// Reproducible instance generator. Rejection-sampled kinds validate
/// their postcondition before returning and report an exhausted budget
/// instead of silently degrading.
pub fn generate(kind: GenKind, size: usize, seed: u64) -> Result<GRel, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match kind {
        GenKind::Distance => Ok(min_plus_closure(random_table(&mut rng, size))),
        GenKind::Hemimetric => {
            let raw = random_table(&mut rng, size);
            let zeroed = GRel::from_fn(raw.source().clone(), raw.source().clone(), |i, j| {
                if i == j {
                    ExtReal::zero()
                } else {
                    raw.at(i, j).clone()
                }
            });
            let d = min_plus_closure(zeroed);
            debug_assert!(crate::metric::classify(&d)?.is_hemimetric);
            Ok(d)
        }
        GenKind::PartialOrder | GenKind::StrictOrder => {
            let carrier = letters(size);
            // random edges respecting the label order keep the relation
            // antisymmetric; the min-plus closure of a characteristic
            // table is its transitive closure
            let mut edges = vec![false; size * size];
            for i in 0..size {
                for j in (i + 1)..size {
                    edges[i * size + j] = rng.gen_bool(0.5);
                }
                if kind == GenKind::PartialOrder {
                    edges[i * size + i] = true;
                }
            }
            let table = GRel::characteristic(carrier.clone(), carrier, |i, j| edges[i * size + j]);
            Ok(min_plus_closure(table))
        }
        GenKind::MaxContinuous | GenKind::Predomain => {
            for attempt in 0..400u64 {
                let mut attempt_rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(attempt.wrapping_mul(0x9e37)));
                let candidate = if attempt_rng.gen_bool(0.4) {
                    // zero-block construction: a few all-zero rows make
                    // non-reflexive points reachable as maxima
                    let carrier = letters(size);
                    let zero_rows: Vec<bool> = (0..size).map(|_| attempt_rng.gen_bool(0.6)).collect();
                    let values: Vec<ExtReal> =
                        (0..size * size).map(|_| random_value(&mut attempt_rng)).collect();
                    let raw = GRel::from_fn(carrier.clone(), carrier, |i, j| {
                        if zero_rows[i] {
                            ExtReal::zero()
                        } else {
                            values[i * size + j].clone()
                        }
                    });
                    min_plus_closure(raw)
                } else {
                    min_plus_closure(random_table(&mut attempt_rng, size))
                };
                let continuous = crate::order::is_max_continuous(&candidate)?.holds;
                if !continuous {
                    continue;
                }
                if kind == GenKind::Predomain {
                    let v = crate::wbd::check_domain(&candidate, DomainKind::Max)?;
                    if !v.predomain {
                        continue;
                    }
                }
                return Ok(candidate);
            }
            Err(Error::GeneratorBudget(format!(
                "no {kind:?} instance of size {size} within 400 attempts (seed {seed})"
            )))
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub check: String,
    pub tested: usize,
    pub applicable: usize,
    pub verdict: Verdict,
}

/// Randomized sweep of one check over generated instances. The first
/// counterexample is minimized by greedy element deletion (re-verified
/// after every deletion) before being reported.
pub fn search_counterexample(
    id: &str,
    kinds: &[GenKind],
    sizes: &[usize],
    budget: usize,
    seed: u64,
) -> Result<SearchOutcome, Error> {
    let def = lookup(id)?;
    if budget == 0 || kinds.is_empty() || sizes.is_empty() {
        return Ok(SearchOutcome {
            check: id.to_string(),
            tested: 0,
            applicable: 0,
            verdict: Verdict {
                check: id.to_string(),
                statement: def.statement.to_string(),
                status: Status::Untested,
                instance_digest: "-".into(),
                witness: None,
                detail: Report::new(id),
            },
        });
    }
    let mut tested = 0;
    let mut applicable = 0;
    let mut last = None;
    for k in 0..budget {
        let kind = kinds[k % kinds.len()];
        let size = sizes[(k / kinds.len()) % sizes.len()];
        let relation = match generate(kind, size, seed.wrapping_add(k as u64)) {
            Ok(r) => r,
            Err(Error::GeneratorBudget(_)) => continue,
            Err(e) => return Err(e),
        };
        let mut inst = Instance::new(relation);
        // pair checks get an auxiliary of the same kind
        let needs_aux = matches!(id, "hausfunc" | "bfunc" | "binter" | "interp");
        if needs_aux {
            if let Ok(aux) = generate(kind, size, seed.wrapping_add(0x5bd1).wrapping_add(k as u64)) {
                inst = inst.with_aux(aux);
            }
        }
        tested += 1;
        let verdict = run_check(id, &inst)?;
        match verdict.status {
            Status::Counterexample => {
                let minimized = minimize(id, inst)?;
                let verdict = run_check(id, &minimized)?;
                return Ok(SearchOutcome { check: id.to_string(), tested, applicable, verdict });
            }
            Status::Holds => {
                applicable += 1;
                last = Some(verdict);
            }
            _ => {
                if last.is_none() {
                    last = Some(verdict);
                }
            }
        }
    }
    Ok(SearchOutcome {
        check: id.to_string(),
        tested,
        applicable,
        verdict: last.expect("at least one instance was tested"),
    })
}

/// Greedy witness minimization: repeatedly delete one carrier element as
/// long as the check keeps failing.
fn minimize(id: &str, mut inst: Instance) -> Result<Instance, Error> {
    inst.profiles.clear();
    inst.grid = None;
    loop {
        let n = inst.relation.source().len();
        if n <= 1 {
            return Ok(inst);
        }
        let mut shrunk = false;
        for drop in 0..n {
            let keep = Subset::from_indices((0..n).filter(|&i| i != drop));
            let relation = inst.relation.restrict(&keep)?;
            let aux = match &inst.aux {
                Some(a) => Some(a.restrict(&keep)?),
                None => None,
            };
            let candidate = Instance { relation, aux, profiles: Vec::new(), grid: None };
            if run_check(id, &candidate)?.status == Status::Counterexample {
                inst = candidate;
                shrunk = true;
                break;
            }
        }
        if !shrunk {
            return Ok(inst);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;

    #[test]
    fn run_registered_checks_on_gallery() {
        let g3 = Instance::new(gallery::g_grid(3));
        let v = run_check("hemiprop", &g3).unwrap();
        assert_eq!(v.status, Status::Holds);
        // G3 is asymmetric: the symmetric-Cauchy law gates out
        let v = run_check("symcauchy", &g3).unwrap();
        assert_eq!(v.status, Status::NotApplicable);
        let q3 = Instance::new(gallery::q_grid(3)).with_aux(gallery::q_grid(3));
        let v = run_check("hausfunc", &q3).unwrap();
        assert_eq!(v.status, Status::Holds);
        assert!(run_check("nope", &g3).is_err());
    }

    #[test]
    fn verdicts_are_deterministic() {
        let inst = Instance::new(gallery::x3nr());
        let a = run_check("rdomaineqs", &inst).unwrap();
        let b = run_check("rdomaineqs", &inst).unwrap();
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }

    #[test]
    fn generators_validate_postconditions() {
        for seed in 0..5 {
            let d = generate(GenKind::Hemimetric, 3, seed).unwrap();
            assert!(crate::metric::classify(&d).unwrap().is_hemimetric);
            let d = generate(GenKind::Distance, 4, seed).unwrap();
            assert!(crate::metric::classify(&d).unwrap().is_distance);
            let d = generate(GenKind::PartialOrder, 4, seed).unwrap();
            let c = crate::metric::classify(&d).unwrap();
            assert!(c.is_quasimetric); // reflexive, transitive, antisymmetric
            let d = generate(GenKind::MaxContinuous, 3, seed).unwrap();
            assert!(crate::order::is_max_continuous(&d).unwrap().holds);
            let d = generate(GenKind::Predomain, 3, seed).unwrap();
            assert!(crate::wbd::check_domain(&d, DomainKind::Max).unwrap().predomain);
        }
        // determinism
        let a = generate(GenKind::Distance, 4, 99).unwrap();
        let b = generate(GenKind::Distance, 4, 99).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn search_reports_untested_on_zero_budget() {
        let out = search_counterexample("hemiprop", &[GenKind::Distance], &[3], 0, 7).unwrap();
        assert_eq!(out.verdict.status, Status::Untested);
        assert_eq!(out.tested, 0);
    }

    #[test]
    fn search_passes_on_sound_checks() {
        let out =
            search_counterexample("hemiprop", &[GenKind::Distance, GenKind::Hemimetric], &[2, 3], 40, 11)
                .unwrap();
        assert_eq!(out.verdict.status, Status::Holds);
        assert_eq!(out.tested, 40);
        assert_eq!(out.applicable, 40);
    }
}
