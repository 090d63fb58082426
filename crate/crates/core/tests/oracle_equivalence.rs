//! Engine paths against the brute-force oracle on spaces beyond the standard corpus.

use std::sync::Arc;

use rand::rngs::StdRng;
use rand::{RngExt, SeedableRng};

use hodist::corpus::posets;
use hodist::cover::minimum_cover_size;
use hodist::homotopy::are_homotopic_by_moves;
use hodist::{are_homotopic, continuous_maps, homotopic_distance, oracle, FiniteSpace, Limits, PointSet};

#[test]
fn poset_counts_up_to_six_points() {
    let counts: Vec<usize> = (1..=6).map(|n| posets(n).len()).collect();
    assert_eq!(counts, vec![1, 2, 5, 16, 63, 318]);
}

#[test]
fn normality_fast_criterion_matches_definition() {
    let mut non_normal = 0;
    for n in 1..=6 {
        for space in posets(n) {
            let (fast, witness) = space.normality();
            let (slow, _) = oracle::normality(&space);
            assert_eq!(fast, slow, "{:?}", space.names());
            if let Some((a, b)) = witness {
                assert!(space.is_closed(a) && space.is_closed(b) && a.is_disjoint(b));
                non_normal += 1;
            }
        }
    }
    assert!(non_normal > 0);
}

#[test]
fn opens_and_components_match_oracle() {
    let limits = Limits::default();
    for n in 1..=6 {
        for space in posets(n) {
            let mut engine: Vec<PointSet> = space.open_family(&limits).unwrap().iter().map(|o| o.points()).collect();
            engine.sort();
            let mut brute = oracle::opens(&space);
            brute.sort();
            assert_eq!(engine, brute);
            assert_eq!(space.component_sets().len(), oracle::component_count(&space));
        }
    }
}

fn random_pairs(rng: &mut StdRng, n: usize, count: usize) -> Vec<(usize, usize)> {
    (0..count).map(|_| (rng.random_range(0..n), rng.random_range(0..n))).collect()
}

#[test]
fn homotopy_on_five_point_domains() {
    let limits = Limits::default();
    let mut rng = StdRng::seed_from_u64(11);
    let domains = posets(5);
    let codomains: Vec<Arc<FiniteSpace>> = posets(3).into_iter().chain([FiniteSpace::pseudocircle()]).map(Arc::new).collect();
    for _ in 0..40 {
        let x = Arc::new(domains[rng.random_range(0..domains.len())].clone());
        let y = &codomains[rng.random_range(0..codomains.len())];
        let maps = continuous_maps(&x, y, &limits).unwrap();
        let (brute_maps, labels) = oracle::comparability_classes(&x, y);
        assert_eq!(maps.len(), brute_maps.len());
        for (i, j) in random_pairs(&mut rng, maps.len(), 20) {
            let expected = labels[i] == labels[j];
            assert_eq!(are_homotopic(&maps[i], &maps[j], &limits).unwrap(), expected);
            assert_eq!(are_homotopic_by_moves(&maps[i], &maps[j], &limits).unwrap(), expected);
        }
    }
}

#[test]
fn distance_on_five_point_domains() {
    let limits = Limits::default();
    let mut rng = StdRng::seed_from_u64(12);
    let domains = posets(5);
    let codomains: Vec<Arc<FiniteSpace>> = posets(3).into_iter().map(Arc::new).collect();
    for _ in 0..25 {
        let x = Arc::new(domains[rng.random_range(0..domains.len())].clone());
        let y = &codomains[rng.random_range(0..codomains.len())];
        let maps = continuous_maps(&x, y, &limits).unwrap();
        for (i, j) in random_pairs(&mut rng, maps.len(), 6) {
            let d = homotopic_distance(&maps[i], &maps[j], &limits).unwrap();
            let brute = oracle::distance(&x, y, maps[i].images(), maps[j].images());
            assert_eq!(d.value, brute, "{:?} {:?}", maps[i], maps[j]);
        }
    }
}

#[test]
fn cover_search_matches_subset_search() {
    let mut rng = StdRng::seed_from_u64(13);
    for _ in 0..300 {
        let n = rng.random_range(1..=12);
        let universe = PointSet::full(n);
        let family: Vec<PointSet> = (0..rng.random_range(1..=12))
            .map(|_| PointSet::from_bits(rng.random_range(1..(1u64 << n))))
            .collect();
        assert_eq!(minimum_cover_size(universe, &family), oracle::min_cover_size(universe, &family));
    }
}
