//! Acceptance suite: one test per criterion, each printing a PASS line
//! with its budget. Everything is exact arithmetic; "zero violations"
//! means exactly that, not up to an epsilon. Run with
//! `cargo test -p qdt-core --test acceptance -- --nocapture` to see the
//! per-criterion lines.

use std::time::{Duration, Instant};

use qdt_core::gallery;
use qdt_core::grel::GRel;
use qdt_core::metric::{classify, reflexivize_lower, reflexivize_upper};
use qdt_core::oracle::{generate, named_carrier, random_rel, random_square_table, GenKind};
use qdt_core::order;
use qdt_core::wbd::{self, DomainKind, WayBelowMode};
use qdt_core::xreal::ExtReal;

fn finish(criterion: &str, what: &str, start: Instant, budget: Duration) {
    let elapsed = start.elapsed();
    println!(
        "ACCEPTANCE {criterion}: PASS — {what} ({:.2?} of {:.0?} budget)",
        elapsed, budget
    );
    assert!(
        elapsed <= budget,
        "criterion {criterion} exceeded its time budget: {elapsed:.2?} > {budget:.2?}"
    );
}

#[test]
fn criterion_01_category_laws() {
    let start = Instant::now();
    for seed in 0..500u64 {
        let sizes = [
            (seed % 5 + 1) as usize,
            (seed / 5 % 5 + 1) as usize,
            (seed / 25 % 5 + 1) as usize,
            (seed / 125 % 5 + 1) as usize,
        ];
        let cw = named_carrier("w", sizes[0]);
        let cx = named_carrier("x", sizes[1]);
        let cy = named_carrier("y", sizes[2]);
        let cz = named_carrier("z", sizes[3]);
        // associativity and involution
        let a = random_rel(&cw, &cx, seed);
        let b = random_rel(&cx, &cy, seed.wrapping_add(1_000));
        let c = random_rel(&cy, &cz, seed.wrapping_add(2_000));
        assert_eq!(
            a.compose(&b).unwrap().compose(&c).unwrap(),
            a.compose(&b.compose(&c).unwrap()).unwrap(),
            "associativity failed at seed {seed}"
        );
        assert_eq!(
            a.compose(&b).unwrap().opposite(),
            b.opposite().compose(&a.opposite()).unwrap(),
            "involution failed at seed {seed}"
        );
        // the Kan adjunction chain f/e ≤ d ⟺ f ≤ d∘e ⟺ d\f ≤ e
        let f = random_rel(&cw, &cy, seed.wrapping_add(3_000));
        let d = random_rel(&cw, &cx, seed.wrapping_add(4_000));
        let e = random_rel(&cx, &cy, seed.wrapping_add(5_000));
        let right = f.kan_right(&e).unwrap().leq(&d);
        let middle = f.leq(&d.compose(&e).unwrap());
        let left = d.kan_left(&f).unwrap().leq(&e);
        assert!(right == middle && middle == left, "adjunction failed at seed {seed}");
    }
    finish("1", "category laws on 500 random triples", start, Duration::from_secs(5));
}

#[test]
fn criterion_02_reflexivization_laws() {
    let start = Instant::now();
    for seed in 0..500u64 {
        let n = (seed % 4 + 1) as usize;
        let d = random_square_table(n, seed);
        let report = qdt_core::metric::check_hemiprop(&d).unwrap();
        assert!(report.passed(), "hemiprop failed at seed {seed}:\n{report}");
        let up = reflexivize_upper(&d).unwrap();
        let low = reflexivize_lower(&d).unwrap();
        assert!(classify(&up).unwrap().is_hemimetric);
        assert!(classify(&low).unwrap().is_hemimetric);
    }
    finish("2", "reflexivization laws on 500 random tables", start, Duration::from_secs(5));
}

#[test]
fn criterion_03_worked_example_grids() {
    let start = Instant::now();
    for n in [3, 5, 11] {
        let g = gallery::g_grid(n);
        let q = gallery::q_grid(n);
        assert_eq!(reflexivize_upper(&g).unwrap(), q, "upper reflexivization of the {n}-grid");
        assert_eq!(reflexivize_lower(&g).unwrap(), q, "lower reflexivization of the {n}-grid");
    }
    finish("3", "grid reflexivizations equal the truncated difference", start, Duration::from_secs(1));
}

#[test]
fn criterion_04_directed_sup_max_layer() {
    let start = Instant::now();
    for seed in 0..500u64 {
        let n = (seed % 4 + 1) as usize;
        let d = generate(GenKind::Distance, n, seed).unwrap();
        for report in [
            order::check_fdy(&d).unwrap(),
            order::check_ydyd(&d).unwrap(),
            order::check_supmax(&d).unwrap(),
            order::check_supmaxrelations(&d).unwrap(),
            order::check_directed_cauchy(&d).unwrap(),
        ] {
            assert!(report.passed(), "seed {seed}:\n{report}");
        }
    }
    finish("4", "directed/sup/max laws on 500 random distances", start, Duration::from_secs(30));
}

#[test]
fn criterion_05_completeness_continuity_dualities() {
    let start = Instant::now();
    let mut contradictions = 0usize;
    for seed in 0..500u64 {
        let n = (seed % 4 + 1) as usize;
        let kind = if seed % 3 == 0 { GenKind::Hemimetric } else { GenKind::Distance };
        let d = generate(kind, n, seed).unwrap();
        let r = order::check_completeness_duality(&d).unwrap();
        assert!(r.passed(), "seed {seed}:\n{r}");
        let r = order::check_continuity_duality(&d).unwrap();
        assert!(r.passed(), "seed {seed}:\n{r}");
        let r = order::interpolation_report(&d, None).unwrap();
        contradictions += r.failures().count();
    }
    assert_eq!(contradictions, 0, "interpolation contradictions observed");
    finish(
        "5",
        "completeness/continuity dualities and zero interpolation contradictions on 500 instances",
        start,
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_06_way_below() {
    let start = Instant::now();
    for seed in 0..100u64 {
        let n = (seed % 5 + 1) as usize;
        let order_rel = generate(GenKind::PartialOrder, n, seed).unwrap();
        let wb = wbd::way_below_relational(&order_rel, WayBelowMode::Sup).unwrap();
        assert_eq!(wb, order_rel, "way-below of a finite poset at seed {seed}");
    }
    for seed in 0..200u64 {
        let n = (seed % 4 + 1) as usize;
        let d = generate(GenKind::Hemimetric, n, seed).unwrap();
        let r = wbd::check_dual_characterization(&d, DomainKind::Max).unwrap();
        assert!(r.passed(), "seed {seed}:\n{r}");
    }
    finish(
        "6",
        "poset way-below identity (100 orders) and relational domain duality (200 hemimetrics)",
        start,
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_07_hausdorff_layer() {
    let start = Instant::now();
    for seed in 0..200u64 {
        let n = (seed % 3 + 2) as usize; // carriers 2..4
        let kind = if seed % 2 == 0 { GenKind::Distance } else { GenKind::Hemimetric };
        let d = generate(kind, n, seed).unwrap();
        let e = generate(kind, n, seed.wrapping_add(77)).unwrap();
        let r = qdt_core::hausdorff::check_hausfunc(&d, &e).unwrap();
        assert!(r.passed(), "hausfunc seed {seed}:\n{r}");
    }
    let mut isometric_checked = 0usize;
    for seed in 0..50u64 {
        let n = (seed % 2 + 3) as usize; // carriers 3..4
        let kind = if seed % 2 == 0 { GenKind::MaxContinuous } else { GenKind::Predomain };
        let d = match generate(kind, n, seed) {
            Ok(d) => d,
            Err(_) => continue,
        };
        let completion = qdt_core::hausdorff::complete_predomain(&d).unwrap();
        assert!(completion.report.passed(), "completion seed {seed}:\n{}", completion.report);
        let r = qdt_core::hausdorff::check_pdcomp(&d).unwrap();
        assert!(r.passed(), "pdcomp seed {seed}:\n{r}");
        if wbd::check_domain(&d, DomainKind::Max).unwrap().predomain {
            // the embedding must be isometric on predomains
            for x in d.source().indices() {
                for y in d.source().indices() {
                    assert_eq!(
                        completion.completion.rel.at(completion.embedding[x], completion.embedding[y]),
                        d.at(x, y),
                        "isometry failed at seed {seed}"
                    );
                }
            }
            isometric_checked += 1;
        }
    }
    assert!(isometric_checked >= 10, "too few predomain instances: {isometric_checked}");
    finish(
        "7",
        "Hausdorff functoriality (200 pairs) and predomain completion (50 instances)",
        start,
        Duration::from_secs(120),
    );
}

#[test]
fn criterion_08_formal_balls() {
    let start = Instant::now();
    use qdt_core::balls::{self, BallGrid};
    // transport laws on witness-closed grids, hemimetric pairs
    for seed in 0..200u64 {
        let n = (seed % 2 + 2) as usize; // carriers 2..3
        let d = generate(GenKind::Hemimetric, n, seed).unwrap();
        let e = generate(GenKind::Hemimetric, n, seed.wrapping_add(31)).unwrap();
        let grid = BallGrid::witness_closed(&[&d, &e]);
        let r = balls::check_bfunc(&d, &e, &grid).unwrap();
        assert!(r.passed() && r.applicable(), "bfunc seed {seed}:\n{r}");
        let r = balls::check_bunder_binter(&d, &e, &grid).unwrap();
        assert!(r.passed(), "binter seed {seed}:\n{r}");
        let r = balls::check_xdy(&d, &grid).unwrap();
        assert!(r.passed(), "xdy seed {seed}:\n{r}");
    }
    // the order recovery also holds for arbitrary tables
    for seed in 0..50u64 {
        let d = random_square_table((seed % 3 + 1) as usize, seed);
        let grid = BallGrid::from_values(&[&d]);
        assert!(balls::check_xdy(&d, &grid).unwrap().passed(), "xdy raw seed {seed}");
    }
    // domain-equivalence clause consistency across the gallery and 100
    // generated hemimetrics: no partial satisfaction anywhere
    let mut instances: Vec<GRel> = vec![
        gallery::g_grid(3),
        gallery::q_grid(3),
        gallery::chain(3),
        gallery::x3nr(),
        gallery::discrete_metric(2),
    ];
    for seed in 0..100u64 {
        instances.push(generate(GenKind::Hemimetric, (seed % 2 + 2) as usize, seed).unwrap());
    }
    for (k, d) in instances.iter().enumerate() {
        let grid = BallGrid::from_values(&[d]);
        let r = balls::check_contdomballs(d, &grid).unwrap();
        assert!(r.passed(), "contdomballs instance {k}:\n{r}");
        let r = balls::check_kw(d, &grid).unwrap();
        assert!(r.passed(), "kw instance {k}:\n{r}");
        let r = balls::check_rv(d, &grid).unwrap();
        assert!(r.passed(), "rv instance {k}:\n{r}");
        let r = balls::check_esmyth(d, &grid).unwrap();
        assert!(r.passed(), "esmyth instance {k}:\n{r}");
        let fams = balls::canonical_zero_aperture_families(d, &grid).unwrap();
        let r = balls::check_alphatri(d, &fams).unwrap();
        assert!(r.passed(), "alphatri instance {k}:\n{r}");
    }
    finish(
        "8",
        "formal-ball transport, recovery and clause consistency (200 pairs + gallery + 100 hemimetrics)",
        start,
        Duration::from_secs(120),
    );
}

#[test]
fn criterion_09_gallery_assertions() {
    let start = Instant::now();
    // G3 is a non-continuous max-complete distance
    let g3 = gallery::g_grid(3);
    let c = classify(&g3).unwrap();
    assert!(c.is_distance && !c.is_reflexive);
    assert!(order::is_max_complete(&g3).unwrap().holds);
    assert!(!order::is_max_continuous(&g3).unwrap().holds);
    // X3NR is max-continuous but not a predomain, witness cell (a,b)
    let x = gallery::x3nr();
    assert!(order::is_max_continuous(&x).unwrap().holds);
    let up = reflexivize_upper(&x).unwrap();
    let low = reflexivize_lower(&x).unwrap();
    assert_eq!(*up.at_labels("a", "b").unwrap(), ExtReal::from_int(1));
    assert_eq!(*low.at_labels("a", "b").unwrap(), ExtReal::zero());
    let v = wbd::check_domain(&x, DomainKind::Max).unwrap();
    assert!(!v.predomain);
    assert!(v.witness.unwrap().contains("(a, b)"));
    // Q3 is a max-domain
    let q3 = gallery::q_grid(3);
    let v = wbd::check_domain(&q3, DomainKind::Max).unwrap();
    assert!(v.predomain && v.domain);
    finish("9", "gallery classification facts", start, Duration::from_secs(5));
}
