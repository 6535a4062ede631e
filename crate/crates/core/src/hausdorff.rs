//! Hausdorff and reverse Hausdorff distances on the powerset, the
//! completion of a max-continuous space by its directed subsets, and the
//! universality of the ideal completion.
//!
//! The reverse Hausdorff distance `Y d^ℋ Z = inf_z sup_y d(y,z)` is the
//! non-reflexive dual of the classical `Y d_ℋ Z = sup_y inf_z d(y,z)`;
//! it is the one that completes predomains to domains.

use crate::carrier::{Carrier, Subset};
use crate::grel::GRel;
use crate::metric::{classify, reflexivize_lower, reflexivize_upper};
use crate::nets::{cauchy_cycle_sets, NetProfile};
use crate::order::{
    d_max_set, directed_subsets, ideal_closure, ideals, is_basis, is_directed_fast, BasisKind,
};
use crate::report::Report;
use crate::wbd::{check_domain, DomainKind};
use crate::Error;

/// A relation on a family of subsets of a base carrier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowersetRel {
    pub base: Carrier,
    pub family: Vec<Subset>,
    pub rel: GRel,
}

fn family_carrier(base: &Carrier, family: &[Subset]) -> Result<Carrier, Error> {
    Carrier::new(family.iter().map(|s| s.display(base)))
}

fn full_powerset(base: &Carrier) -> Result<Vec<Subset>, Error> {
    if base.len() > 10 {
        return Err(Error::TooLarge { size: base.len(), cap: 10 });
    }
    Ok(base.powerset().collect())
}

/// `Y d^ℋ Z = inf_{z∈Z} sup_{y∈Y} d(y,z)` over the given family
/// (default: the full powerset).
pub fn hausdorff_upper(d: &GRel, family: Option<Vec<Subset>>) -> Result<PowersetRel, Error> {
    let base = d.require_square()?.clone();
    let family = match family {
        Some(f) => f,
        None => full_powerset(&base)?,
    };
    let carrier = family_carrier(&base, &family)?;
    let rel = GRel::from_fn(carrier.clone(), carrier, |i, j| d.sup_inf(&family[i], &family[j]));
    Ok(PowersetRel { base, family, rel })
}

/// `Y d_ℋ Z = sup_{y∈Y} inf_{z∈Z} d(y,z)` over the given family.
pub fn hausdorff_lower(d: &GRel, family: Option<Vec<Subset>>) -> Result<PowersetRel, Error> {
    let base = d.require_square()?.clone();
    let family = match family {
        Some(f) => f,
        None => full_powerset(&base)?,
    };
    let carrier = family_carrier(&base, &family)?;
    let rel = GRel::from_fn(carrier.clone(), carrier, |i, j| d.inf_sup(&family[i], &family[j]));
    Ok(PowersetRel { base, family, rel })
}

/// The functorial laws of the two Hausdorff distances over the full
/// powerset: ordering, the two factor-2 composition bounds, and the exact
/// absorption `d^ℋ∘e^ℋ = d^ℋ∘e_ℋ`.
pub fn check_hausfunc(d: &GRel, e: &GRel) -> Result<Report, Error> {
    let base = d.require_square()?;
    if e.source() != base || !e.is_square() {
        return Err(Error::CarrierMismatch("hausfunc needs two square tables on one carrier".into()));
    }
    let mut report = Report::new("hausfunc");
    let d_up = hausdorff_upper(d, None)?.rel;
    let d_lo = hausdorff_lower(d, None)?.rel;
    let e_up = hausdorff_upper(e, None)?.rel;
    let e_lo = hausdorff_lower(e, None)?.rel;
    let de = d.compose(e)?;
    let de_up = hausdorff_upper(&de, None)?.rel;
    let de_lo = hausdorff_lower(&de, None)?.rel;

    report.assert("d_ℋ ≤ d^ℋ", d_lo.leq(&d_up), "pointwise order fails");

    let lo_comp = d_lo.compose(&e_lo)?;
    report.assert("(d∘e)_ℋ ≤ d_ℋ∘e_ℋ", de_lo.leq(&lo_comp), "left bound fails");
    let de_lo_doubled =
        GRel::from_fn(lo_comp.source().clone(), lo_comp.target().clone(), |i, j| {
            de_lo.at(i, j).double()
        });
    report.assert("d_ℋ∘e_ℋ ≤ 2(d∘e)_ℋ", lo_comp.leq(&de_lo_doubled), "factor-2 bound fails");

    let mixed = d_lo.compose(&e_up)?;
    report.assert("(d∘e)^ℋ ≤ d_ℋ∘e^ℋ", de_up.leq(&mixed), "left bound fails");
    let de_up_doubled =
        GRel::from_fn(mixed.source().clone(), mixed.target().clone(), |i, j| {
            de_up.at(i, j).double()
        });
    report.assert("d_ℋ∘e^ℋ ≤ 2(d∘e)^ℋ", mixed.leq(&de_up_doubled), "factor-2 bound fails");

    let up_up = d_up.compose(&e_up)?;
    let up_lo = d_up.compose(&e_lo)?;
    report.assert("d^ℋ∘e^ℋ = d^ℋ∘e_ℋ", up_up == up_lo, "absorption fails");
    Ok(report)
}

/// The powerset is max-complete for `d^ℋ` and sup-complete for `d_ℋ`,
/// with unions as constructive witnesses.
pub fn check_hausdorff_completeness(d: &GRel) -> Result<Report, Error> {
    let base = d.require_square()?;
    let mut report = Report::new("hausprop");
    if base.len() > 4 {
        return Err(Error::TooLarge { size: base.len(), cap: 4 });
    }
    let upper = hausdorff_upper(d, None)?;
    let lower = hausdorff_lower(d, None)?;
    let m = upper.family.len();

    let mut max_ok = true;
    let mut sup_ok = true;
    let mut witness = String::new();
    for bits in 0u64..(1u64 << m) {
        let fam_subset = Subset::from_bits(bits);
        if fam_subset.is_empty() {
            continue;
        }
        let union_index = |family: &PowersetRel| {
            let mut u = Subset::empty();
            for k in fam_subset.iter() {
                u = u.union(&family.family[k]);
            }
            family.family.iter().position(|s| *s == u).unwrap()
        };
        if is_directed_fast(&fam_subset, &upper.rel) {
            let u = union_index(&upper);
            if !d_max_set(&fam_subset, &upper.rel)?.contains(u) {
                max_ok = false;
                witness = format!("family bits {bits:#b}");
                break;
            }
        }
        if is_directed_fast(&fam_subset, &lower.rel) {
            let u = union_index(&lower);
            if !crate::order::d_sup_set(&fam_subset, &lower.rel)?.contains(u) {
                sup_ok = false;
                witness = format!("family bits {bits:#b}");
                break;
            }
        }
    }
    report.assert("unions are d^ℋ-maxima of directed families", max_ok, witness.clone());
    report.assert("unions are d_ℋ-suprema of directed families", sup_ok, witness);
    // reflexivity of ≤^{d_ℋ} holds exactly on final subsets
    let mut refl_ok = true;
    let mut refl_witness = String::new();
    for (k, s) in lower.family.iter().enumerate() {
        let final_s = crate::order::is_final(s, d)?;
        if lower.rel.at(k, k).is_zero() != final_s {
            refl_ok = false;
            refl_witness = s.display(base);
            break;
        }
    }
    report.assert("≤^{d_ℋ} reflexive exactly on final subsets", refl_ok, refl_witness);
    Ok(report)
}

/// The completion of a max-continuous distance by its directed subsets.
#[derive(Clone, Debug)]
pub struct Completion {
    /// The restricted reverse-Hausdorff relation over the directed family.
    pub completion: PowersetRel,
    /// For each base point `x`, the family index of `(≤ᵈ x)`.
    pub embedding: Vec<usize>,
    /// The verification transcript.
    pub report: Report,
}

/// Builds the directed-subset completion and verifies its laws:
/// the lower reflexivization of the restricted `d^ℋ` is the restricted
/// `d_ℋ`; the completion is a max-domain; the principal down-sets form a
/// basis; and the embedding contracts (isometrically, when the input is a
/// predomain).
pub fn complete_predomain(d: &GRel) -> Result<Completion, Error> {
    let base = d.require_square()?.clone();
    if !classify(d)?.is_distance {
        return Err(Error::Precondition("completion needs a distance".into()));
    }
    if let Some(w) = crate::order::is_max_continuous(d)?.witness {
        return Err(Error::Precondition(format!("completion needs max-continuity: {w}")));
    }
    let mut report = Report::new("precompletion");
    let family = directed_subsets(d)?;
    let fam_carrier = family_carrier(&base, &family)?;
    let rel =
        GRel::from_fn(fam_carrier.clone(), fam_carrier.clone(), |i, j| d.sup_inf(&family[i], &family[j]));
    let low_rel =
        GRel::from_fn(fam_carrier.clone(), fam_carrier, |i, j| d.inf_sup(&family[i], &family[j]));

    report.assert(
        "lower reflexivization of restricted d^ℋ equals restricted d_ℋ",
        reflexivize_lower(&rel)? == low_rel,
        "restriction law fails",
    );
    let predomain_ineq = reflexivize_upper(&rel)?.leq(&reflexivize_lower(&rel)?);
    report.assert("completion satisfies d̄ ≤ d̲", predomain_ineq, "reflexivization order fails");

    // embedding: x ↦ (≤ᵈ x), which must be directed hence in the family
    let mut embedding = Vec::with_capacity(base.len());
    for x in base.indices() {
        let down = d.col(x).zero_set();
        let pos = family.iter().position(|s| *s == down).ok_or_else(|| {
            Error::Precondition(format!("principal down-set of `{}` is not directed", base.label(x)))
        })?;
        embedding.push(pos);
    }

    // constructive max-continuity: each family member is the maximum of
    // its own principal down-sets
    let mut cont_ok = true;
    let mut cont_witness = String::new();
    for (k, member) in family.iter().enumerate() {
        let images = Subset::from_indices(member.iter().map(|y| embedding[y]));
        if !is_directed_fast(&images, &rel) || !d_max_set(&images, &rel)?.contains(k) {
            cont_ok = false;
            cont_witness = member.display(&base);
            break;
        }
    }
    report.assert(
        "every member is the maximum of its principal down-sets",
        cont_ok,
        cont_witness,
    );

    // max-completeness via unions, exhaustively when the family is small
    if family.len() <= 16 {
        let mut ok = true;
        let mut witness = String::new();
        for bits in 0u64..(1u64 << family.len()) {
            let fam_subset = Subset::from_bits(bits);
            if fam_subset.is_empty() || !is_directed_fast(&fam_subset, &rel) {
                continue;
            }
            let mut u = Subset::empty();
            for k in fam_subset.iter() {
                u = u.union(&family[k]);
            }
            match family.iter().position(|s| *s == u) {
                Some(ui) => {
                    if !d_max_set(&fam_subset, &rel)?.contains(ui) {
                        ok = false;
                        witness = format!("family bits {bits:#b}");
                        break;
                    }
                }
                None => {
                    ok = false;
                    witness = format!("union of bits {bits:#b} is not directed");
                    break;
                }
            }
        }
        report.assert("unions complete every directed family", ok, witness);
    } else {
        report.inconclusive(
            "unions complete every directed family",
            format!("family of {} members not swept exhaustively", family.len()),
        );
    }

    // the embedding contracts; equality on predomains
    let mut contract_ok = true;
    let mut eq_ok = true;
    let mut witness = String::new();
    for x in base.indices() {
        for y in base.indices() {
            let completed = rel.at(embedding[x], embedding[y]);
            if completed > d.at(x, y) {
                contract_ok = false;
                witness = format!("cell ({}, {})", base.label(x), base.label(y));
            }
            if completed != d.at(x, y) {
                eq_ok = false;
                if witness.is_empty() {
                    witness = format!("cell ({}, {})", base.label(x), base.label(y));
                }
            }
        }
    }
    report.assert("embedding never increases distances", contract_ok, witness.clone());
    let is_predomain = reflexivize_upper(d)?.leq(&reflexivize_lower(d)?);
    if is_predomain {
        report.assert("embedding is isometric on predomains", eq_ok, witness);
    } else {
        report.na("embedding is isometric on predomains", "input is not a predomain");
    }

    Ok(Completion {
        completion: PowersetRel { base, family, rel },
        embedding,
        report,
    })
}

/// Predomains are exactly the max-bases of max-domains: the forward
/// direction is witnessed by the directed-subset completion, the backward
/// one by restricting a domain to a basis.
pub fn check_pdcomp(d: &GRel) -> Result<Report, Error> {
    d.require_square()?;
    let mut report = Report::new("pdcomp");
    if !classify(d)?.is_distance {
        report.na("predomain completion equivalence", "not a distance");
        return Ok(report);
    }
    let verdict = check_domain(d, DomainKind::Max)?;
    if !crate::order::is_max_continuous(d)?.holds {
        report.na("predomain completion equivalence", "not max-continuous");
        return Ok(report);
    }
    let completion = complete_predomain(d)?;
    report.merge(completion.report.clone());
    // forward: a predomain embeds isometrically as a basis of a domain
    if verdict.predomain {
        let fam_rel = &completion.completion.rel;
        let domain = check_domain(fam_rel, DomainKind::Max)?;
        report.assert(
            "completion of a predomain is a max-domain",
            domain.domain,
            domain.witness.clone().unwrap_or_default(),
        );
        let basis = Subset::from_indices(completion.embedding.iter().copied());
        let basis_ok = is_basis(&basis, fam_rel, BasisKind::Max)?;
        report.assert(
            "embedded points form a max-basis of the completion",
            basis_ok.holds,
            basis_ok.witness.unwrap_or_default(),
        );
    } else {
        // backward: the embedding cannot be isometric, pinning the failure
        let strict = completion
            .embedding
            .iter()
            .enumerate()
            .any(|(x, &ix)| {
                completion.embedding.iter().enumerate().any(|(y, &iy)| {
                    completion.completion.rel.at(ix, iy) != d.at(x, y)
                })
            });
        report.assert(
            "non-predomains embed strictly contractively somewhere",
            strict,
            "embedding is isometric although d̄ ≰ d̲",
        );
    }
    Ok(report)
}

/// Universality of the ideal completion over a basis `B`: the map
/// `x ↦ (≤ᵈ x) ∩ B` is an isometry into the ideals of the restricted
/// relation, and it is onto exactly when the space is a max-domain.
pub fn check_universality(b: &Subset, d: &GRel) -> Result<Report, Error> {
    let base = d.require_square()?.clone();
    let mut report = Report::new("universality");
    if !classify(d)?.is_distance {
        report.na("universality", "not a distance");
        return Ok(report);
    }
    if !check_domain(d, DomainKind::Max)?.predomain {
        report.na("universality", "space is not a max-predomain");
        return Ok(report);
    }
    if !is_basis(b, d, BasisKind::Max)?.holds {
        report.na("universality", "B is not a max-basis");
        return Ok(report);
    }
    let restricted = d.restrict(b)?;
    let ideal_family = ideals(&restricted)?;
    let b_indices: Vec<usize> = b.iter().collect();

    // image of x: the trace of its principal down-set on B, in B-coordinates
    let image = |x: usize| -> Subset {
        Subset::from_indices(
            b_indices
                .iter()
                .enumerate()
                .filter(|(_, &orig)| d.at(orig, x).is_zero())
                .map(|(bi, _)| bi),
        )
    };

    let mut member_ok = true;
    let mut iso_ok = true;
    let mut witness = String::new();
    for x in base.indices() {
        let ix = image(x);
        if !ideal_family.contains(&ix) {
            member_ok = false;
            witness = format!("image of `{}` is not an ideal", base.label(x));
            break;
        }
        for y in base.indices() {
            let val = restricted.sup_inf(&image(x), &image(y));
            if val != *d.at(x, y) {
                iso_ok = false;
                witness = format!(
                    "cells ({}, {}): {} vs {}",
                    base.label(x),
                    base.label(y),
                    val,
                    d.at(x, y)
                );
                break;
            }
        }
        if !iso_ok {
            break;
        }
    }
    report.assert("images are ideals of the restricted relation", member_ok, witness.clone());
    report.assert("the embedding is an isometry", iso_ok, witness);

    // onto ⟺ max-domain; ontoness is decided up to d^ℋ-equivalence of
    // ideals (equal rows and columns in the ideal relation)
    let fam_carrier = family_carrier(&restricted.source().clone(), &ideal_family)?;
    let fam_rel = GRel::from_fn(fam_carrier.clone(), fam_carrier, |i, j| {
        restricted.sup_inf(&ideal_family[i], &ideal_family[j])
    });
    let images: Vec<usize> = base
        .indices()
        .map(|x| ideal_family.iter().position(|s| *s == image(x)).unwrap())
        .collect();
    let m = ideal_family.len();
    let onto = (0..m).all(|i| {
        images.iter().any(|&img| {
            (0..m).all(|k| fam_rel.at(i, k) == fam_rel.at(img, k) && fam_rel.at(k, i) == fam_rel.at(k, img))
        })
    });
    let is_domain = check_domain(d, DomainKind::Max)?.domain;
    report.assert(
        "onto (up to equivalence) ⟺ max-domain",
        onto == is_domain,
        format!("onto={onto}, domain={is_domain}"),
    );
    Ok(report)
}

/// The reflexivity transfer for the reverse Hausdorff distance: when
/// every pre-Cauchy profile is Cauchy for the opposite (true of every
/// profile family, since cycle sets are direction-symmetric), the
/// diagonal of `d^ℋ` vanishes on directed subsets. The consequence is
/// asserted directly as well.
pub fn check_dhhemi(d: &GRel, profiles: &[NetProfile]) -> Result<Report, Error> {
    d.require_square()?;
    let mut report = Report::new("dhhemi");
    let op = d.opposite();
    let mut hyp = true;
    let mut canonical: Vec<NetProfile> = Vec::new();
    for c in cauchy_cycle_sets(d)? {
        canonical.push(NetProfile::cycling(d.source().clone(), &c)?);
    }
    for p in canonical.iter().chain(profiles) {
        if crate::nets::is_precauchy(p, d)? && !crate::nets::is_cauchy(p, &op)? {
            hyp = false;
            break;
        }
    }
    report.assert(
        "every pre-Cauchy profile is Cauchy for the opposite",
        hyp,
        "profile family disagrees",
    );
    if hyp {
        let mut ok = true;
        let mut witness = String::new();
        for y in directed_subsets(d)? {
            if !d.sup_inf(&y, &y).is_zero() {
                ok = false;
                witness = y.display(d.source());
                break;
            }
        }
        report.assert("d^ℋ vanishes on the diagonal of directed subsets", ok, witness);
    } else {
        report.na(
            "d^ℋ vanishes on the diagonal of directed subsets",
            "hypothesis fails on the profile family",
        );
    }
    Ok(report)
}

/// Convenience: the ideal closure of every directed subset, used by the
/// exporting layer.
pub fn directed_closures(d: &GRel) -> Result<Vec<(Subset, Subset)>, Error> {
    let mut out = Vec::new();
    for y in directed_subsets(d)? {
        out.push((y, ideal_closure(&y, d)?));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;
    use crate::xreal::ExtReal;

    #[test]
    fn hausdorff_values_on_q3() {
        let q3 = gallery::q_grid(3);
        let up = hausdorff_upper(&q3, None).unwrap();
        let c = &up.base;
        let y = Subset::from_labels(c, &["0".into(), "1".into()]).unwrap();
        let z = Subset::from_labels(c, &["1/2".into()]).unwrap();
        assert_eq!(q3.sup_inf(&y, &z), ExtReal::ratio(1, 2));
        assert_eq!(q3.inf_sup(&y, &z), ExtReal::ratio(1, 2));
        // singletons embed
        let sx = Subset::from_labels(c, &["1".into()]).unwrap();
        let sy = Subset::from_labels(c, &["1/2".into()]).unwrap();
        assert_eq!(q3.sup_inf(&sx, &sy), *q3.at_labels("1", "1/2").unwrap());
        // the empty set is below everything for the lower distance
        assert_eq!(q3.inf_sup(&Subset::empty(), &z), ExtReal::zero());
    }

    #[test]
    fn metric_powerset_diagonal_is_not_reflexive() {
        let m = gallery::discrete_metric(2);
        let full = m.source().full_subset();
        assert_eq!(m.sup_inf(&full, &full), ExtReal::from_int(1));
    }

    #[test]
    fn hausfunc_on_gallery() {
        let q3 = gallery::q_grid(3);
        let g3 = gallery::g_grid(3);
        assert!(check_hausfunc(&q3, &q3).unwrap().passed());
        assert!(check_hausfunc(&g3, &q3).unwrap().passed());
        let id = GRel::identity(q3.source().clone());
        assert!(check_hausfunc(&q3, &id).unwrap().passed());
    }

    #[test]
    fn hausdorff_completeness_on_small_carriers() {
        for d in [gallery::q_grid(3), gallery::g_grid(3), gallery::x3nr()] {
            let r = check_hausdorff_completeness(&d).unwrap();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn completion_of_q3() {
        let q3 = gallery::q_grid(3);
        let completion = complete_predomain(&q3).unwrap();
        assert!(completion.report.passed(), "{}", completion.report);
        // the embedding sends 1 to its down-set {0,1/2,1} and the
        // completed distance of (≤1, ≤1/2) is 1/2
        let e1 = completion.embedding[q3.source().index_of("1").unwrap()];
        let e_half = completion.embedding[q3.source().index_of("1/2").unwrap()];
        assert_eq!(*completion.completion.rel.at(e1, e_half), ExtReal::ratio(1, 2));
        assert_eq!(completion.completion.family[e1].len(), 3);
    }

    #[test]
    fn completion_of_x3nr_contracts_strictly() {
        let x = gallery::x3nr();
        let completion = complete_predomain(&x).unwrap();
        // X3NR is not a predomain, so the isometry clause is not applicable
        // but every asserted clause passes
        assert!(completion.report.passed(), "{}", completion.report);
        let a = x.source().index_of("a").unwrap();
        let ea = completion.embedding[a];
        // (≤ᵈ a) = {b, c}: the points with zero distance into a
        assert_eq!(completion.completion.family[ea].labels(x.source()), vec!["b", "c"]);
        // the embedded self-distance of a drops from 1 to 0
        assert!(completion.completion.rel.at(ea, ea).is_zero());
    }

    #[test]
    fn completion_rejects_non_continuous_inputs() {
        let g3 = gallery::g_grid(3);
        assert!(matches!(complete_predomain(&g3), Err(Error::Precondition(_))));
    }

    #[test]
    fn pdcomp_on_gallery() {
        for d in [gallery::q_grid(3), gallery::x3nr()] {
            let r = check_pdcomp(&d).unwrap();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn universality_on_q3() {
        let q3 = gallery::q_grid(3);
        let full = q3.source().full_subset();
        let r = check_universality(&full, &q3).unwrap();
        assert!(r.passed(), "{r}");
        assert!(r.applicable());
        // {0,1} is not a basis: not-applicable
        let b = Subset::from_labels(q3.source(), &["0".into(), "1".into()]).unwrap();
        let r = check_universality(&b, &q3).unwrap();
        assert!(!r.applicable());
    }

    #[test]
    fn universality_on_x3nr_basis() {
        // X3NR is not a predomain, so universality gates out
        let x = gallery::x3nr();
        let b = Subset::from_labels(x.source(), &["b".into(), "c".into()]).unwrap();
        let r = check_universality(&b, &x).unwrap();
        assert!(!r.applicable());
    }

    #[test]
    fn dhhemi_on_gallery() {
        for d in [gallery::q_grid(3), gallery::g_grid(3), gallery::discrete_metric(2)] {
            let r = check_dhhemi(&d, &[]).unwrap();
            assert!(r.passed(), "{r}");
            assert!(r.applicable());
        }
    }
}
