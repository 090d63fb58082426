//! Acceptance criteria 1-10. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

use std::sync::{Arc, OnceLock};
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{RngExt, SeedableRng};

use hodist::circle::{basis_and_compactness, circle_ball, circle_distance, PlCircleMap, SymbolicSet};
use hodist::corpus::{check, run, Corpus, SweepReport};
use hodist::distance::{distance_matrix, projections};
use hodist::homotopy::are_homotopic_by_moves;
use hodist::{cat, oracle, tc, CatMethod, ContinuousMap, ExtendedNat, FiniteSpace, Limits, PseudometricSpace, Radius};

struct Outcome {
    ok: bool,
    detail: String,
}

fn verdict(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn sweep() -> &'static (SweepReport, Duration) {
    static SWEEP: OnceLock<(SweepReport, Duration)> = OnceLock::new();
    SWEEP.get_or_init(|| {
        let started = Instant::now();
        let report = run(&Corpus::standard(4), &Limits::default());
        (report, started.elapsed())
    })
}

fn tallies(report: &SweepReport, checks: &[&str]) -> (usize, usize) {
    checks.iter().map(|c| report.tally(c)).fold((0, 0), |(a, b), t| (a + t.checked, b + t.failed))
}

fn criterion_1() -> Outcome {
    let mut bad = Vec::new();
    for n in -25..=25 {
        let f = PlCircleMap::standard(4, n).unwrap();
        for m in -25..=25 {
            let g = PlCircleMap::standard(3, m).unwrap();
            let d = circle_distance(f.degree(), g.degree());
            let expected = if n == m { 0 } else { 1 };
            if d != expected {
                bad.push((n, m));
            }
        }
    }
    verdict(bad.is_empty(), format!("51×51 degree pairs, {} mismatches", bad.len()))
}

fn criterion_2() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut failures = 0;
    for _ in 0..100 {
        let size = rng.random_range(1..=50);
        let family: Vec<SymbolicSet> = (0..size)
            .map(|_| {
                if rng.random_range(0..10) == 0 {
                    SymbolicSet::ConstantsClass
                } else {
                    SymbolicSet::Singleton(rng.random_range(-30..=30))
                }
            })
            .collect();
        let report = basis_and_compactness(&family).unwrap();
        if family.iter().any(|s| s.contains(report.uncovered_witness)) {
            failures += 1;
        }
    }
    verdict(failures == 0, format!("100 seeded subfamilies, {failures} covered witnesses"))
}

fn criterion_3() -> Outcome {
    let report = basis_and_compactness(&[]).unwrap();
    let json = serde_json::to_value(&report.basis).unwrap();
    let half: Radius = "1/2".parse().unwrap();
    let schema = json["singletons"] == "SINGLETON(n) for every integer n"
        && json["constants_ball"]["kind"] == "CONSTANTS_CLASS"
        && json["constants_ball_radius"] == "1/2"
        && report.discrete_on_classes
        && report.second_countable;
    // Each basis member is itself a ball.
    let balls = (-25..=25).all(|n| circle_ball(n, half).set == SymbolicSet::Singleton(n))
        && circle_ball(0, half).note.is_some();
    verdict(schema && balls, format!("basis {json}"))
}

fn criterion_4() -> Outcome {
    let limits = Limits::default();
    let c4 = Arc::new(FiniteSpace::pseudocircle());
    let a = c4.index_of("a").unwrap();
    let expected_cert = vec![vec!["a", "b", "c"], vec!["a", "b", "d"]];

    let oracle_cover = oracle::distance_with(&c4, |u| {
        let (sub, idx) = c4.subspace(u);
        (0..c4.len()).any(|t| oracle::homotopic(&sub, &c4, &idx, &vec![t; idx.len()]))
    });
    let id: Vec<usize> = (0..4).collect();
    let oracle_dist = oracle::distance(&c4, &c4, &id, &[a; 4]);
    let square = Arc::new(c4.product(&c4).unwrap());
    let i1 = ContinuousMap::first_inclusion(c4.clone(), square.clone(), a);
    let i2 = ContinuousMap::second_inclusion(c4.clone(), square, a);
    let oracle_incl = oracle::distance_with(&c4, |u| are_homotopic_by_moves(&i1.restrict(u), &i2.restrict(u), &limits).unwrap());

    let mut lines = Vec::new();
    let mut ok = true;
    for (method, brute) in [(CatMethod::Cover, oracle_cover), (CatMethod::Dist, oracle_dist), (CatMethod::Incl, oracle_incl)] {
        let r = cat(&c4, method, Some(a), &limits).unwrap();
        let cert = r.distance.certificate_names(&c4).unwrap_or_default();
        ok &= r.distance.value == 1 && brute == 1 && cert == expected_cert;
        lines.push(format!("{method:?}={} oracle={brute}", r.distance.value));
    }
    verdict(ok, lines.join(", "))
}

fn criterion_5() -> Outcome {
    let limits = Limits::default();
    let oracle_tc = |space: &Arc<FiniteSpace>| {
        let (p1, p2) = projections(space).unwrap();
        let sq = p1.domain().clone();
        oracle::distance_with(&sq, |u| are_homotopic_by_moves(&p1.restrict(u), &p2.restrict(u), &limits).unwrap())
    };
    let c4 = Arc::new(FiniteSpace::pseudocircle());
    let engine = tc(&c4, &limits).unwrap().value;
    let brute = oracle_tc(&c4);
    let (p1, p2) = projections(&c4).unwrap();
    let not_homotopic = !are_homotopic_by_moves(&p1, &p2, &limits).unwrap();
    let mut small = 0;
    let mut small_bad = 0;
    for n in 1..=3 {
        for s in hodist::corpus::posets(n) {
            let s = Arc::new(s);
            small += 1;
            if tc(&s, &limits).unwrap().value != oracle_tc(&s) {
                small_bad += 1;
            }
        }
    }
    let ok = engine == brute && engine >= 1 && not_homotopic && small_bad == 0;
    verdict(ok, format!("tc(C4)={engine} oracle={brute}, pr1≄pr2: {not_homotopic}; {small} spaces ≤3 points, {small_bad} disagreements"))
}

fn criterion_6() -> Outcome {
    let limits = Limits::default();
    let mut ok = true;
    let mut parts = Vec::new();
    for n in 2..=5 {
        let d = Arc::new(FiniteSpace::discrete(n));
        let by_dist = cat(&d, CatMethod::Dist, Some(0), &limits).unwrap().distance.value;
        let by_cover = cat(&d, CatMethod::Cover, None, &limits).unwrap().distance.value;
        ok &= by_dist == ExtendedNat::Infinite && by_cover == (n as u64 - 1);
        parts.push(format!("n={n}: D={by_dist} cat={by_cover}"));
    }
    verdict(ok, parts.join(", "))
}

fn criterion_7() -> Outcome {
    let limits = Limits::default();
    let corpus = Corpus::standard(4);
    let (mut checked, mut failed, mut excluded, mut excluded_infinite) = (0, 0, 0, 0);
    for p in &corpus.pairs {
        let (x, y) = (&p.domain, &p.codomain);
        let in_scope = y.is_contractible() || (x.is_contractible() && y.is_connected());
        if !in_scope && !x.is_contractible() {
            continue;
        }
        let m = distance_matrix(x, y, &limits).unwrap();
        if !in_scope {
            excluded += 1;
            excluded_infinite += m.entries.iter().flatten().any(|d| !d.is_finite()) as usize;
            continue;
        }
        checked += 1;
        let labels = (0..m.len()).map(|i| i.to_string()).collect();
        let space = PseudometricSpace::from_matrix(labels, m.entries.clone(), false).unwrap();
        let all_zero = m.entries.iter().flatten().all(|&d| d == 0);
        if !all_zero || !space.generate_topology(None).unwrap().is_indiscrete() {
            failed += 1;
        }
    }
    verdict(
        checked > 0 && failed == 0,
        format!(
            "{checked} pairs with contractible Y, or contractible X and connected Y: {failed} violations; \
             {excluded} pairs with contractible X and disconnected Y excluded ({excluded_infinite} have D = inf)"
        ),
    )
}

fn criterion_8() -> Outcome {
    let (report, _) = sweep();
    let checks = [check::SMALL_BALLS, check::LARGE_BALLS, check::NOT_INDISCRETE_DISCONNECTED];
    let (checked, failed) = tallies(report, &checks);
    let ok = failed == 0 && report.skipped.is_empty() && report.pairs == 576;
    verdict(ok, format!("{} map spaces, {checked} checks, {failed} violations, {} skipped", report.pairs, report.skipped.len()))
}

fn criterion_9() -> Outcome {
    let (report, _) = sweep();
    let (m12, m12_failed) = tallies(report, &[check::ZERO_DIAGONAL, check::SYMMETRIC]);
    let m3 = report.tally(check::TRIANGLE_NORMAL);
    let archived = report.triangle_archive.len();
    let archived_failing = report.triangle_archive.iter().filter(|t| !t.holds).count();
    let ok = m12_failed == 0 && m3.failed == 0 && m3.checked > 0 && archived > 0;
    verdict(
        ok,
        format!(
            "M1/M2 {m12} checks {m12_failed} failed; M3 on {} map spaces with normal domain, {} failed; \
             {archived} non-normal triangle reports archived ({archived_failing} with a violation)",
            m3.checked, m3.failed
        ),
    )
}

fn criterion_10() -> Outcome {
    let (report, _) = sweep();
    let homotopy = report.tally(check::HOMOTOPY_ORACLE);
    let cover = report.tally(check::COVER_ORACLE);
    let ok = homotopy.failed == 0 && cover.failed == 0 && homotopy.checked > 0 && cover.checked > 0 && report.skipped.is_empty();
    verdict(
        ok,
        format!(
            "homotopy {} comparisons {} disagreements; cover {} comparisons {} disagreements",
            homotopy.checked, homotopy.failed, cover.checked, cover.failed
        ),
    )
}

type Criterion = (u32, &'static str, fn() -> Outcome, Duration);

fn main() {
    let criteria: [Criterion; 10] = [
        (1, "circle distance is 1 off the diagonal", criterion_1, Duration::from_secs(1)),
        (2, "non-compactness witnesses", criterion_2, Duration::from_secs(1)),
        (3, "countable basis schema", criterion_3, Duration::from_secs(1)),
        (4, "cat(C4) = 1 by three methods", criterion_4, Duration::from_secs(10)),
        (5, "tc(C4) against the exhaustive oracle", criterion_5, Duration::from_secs(600)),
        (6, "discrete spaces: D(Id, const) = inf, cat = n-1", criterion_6, Duration::from_secs(5)),
        (7, "contractible factor gives an indiscrete map space", criterion_7, Duration::from_secs(30)),
        (8, "ball topology suite", criterion_8, Duration::from_secs(300)),
        (9, "pseudometric axioms", criterion_9, Duration::from_secs(300)),
        (10, "oracle equivalence", criterion_10, Duration::from_secs(300)),
    ];
    let mut failures = 0;
    for (n, name, f, budget) in criteria {
        // Criteria 8-10 share one corpus sweep; its full time counts against each.
        let shared = if (8..=10).contains(&n) { sweep().1 } else { Duration::ZERO };
        let started = Instant::now();
        let outcome = f();
        let elapsed = started.elapsed() + shared;
        let ok = outcome.ok && elapsed <= budget;
        failures += !ok as usize;
        println!(
            "criterion {n:>2} {}: {name}: {} [{:.2?} of {:?}]",
            if ok { "PASS" } else { "FAIL" },
            outcome.detail,
            elapsed,
            budget
        );
    }
    if failures > 0 {
        println!("{failures} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all 10 acceptance criteria passed");
}
