//! Exact minimum set cover over point sets.

use crate::pointset::PointSet;

/// Size of a minimum cover of `universe` by members of `family`, or `None`
/// when the family does not cover it.
pub fn minimum_cover_size(universe: PointSet, family: &[PointSet]) -> Option<usize> {
    let reach = family.iter().fold(PointSet::EMPTY, |acc, s| acc.union(*s));
    if !universe.is_subset(reach) {
        return None;
    }
    let mut best = greedy_size(universe, family) + 1;
    branch(universe, family, 0, &mut best);
    Some(best)
}

/// The lexicographically least (by index list) cover of minimum size.
///
/// `family` is expected in canonical order; the returned indices are increasing.
pub fn minimum_cover(universe: PointSet, family: &[PointSet]) -> Option<Vec<usize>> {
    let size = minimum_cover_size(universe, family)?;
    let mut chosen = Vec::with_capacity(size);
    let found = least_cover(universe, family, 0, size, &mut chosen);
    debug_assert!(found);
    Some(chosen)
}

fn greedy_size(universe: PointSet, family: &[PointSet]) -> usize {
    let mut left = universe;
    let mut used = 0;
    while !left.is_empty() {
        let best = family
            .iter()
            .max_by_key(|s| s.intersection(left).len())
            .expect("family covers the universe");
        left = left.difference(*best);
        used += 1;
    }
    used
}

/// Branch on the uncovered point with the fewest covering sets; prune with
/// `depth + ⌈uncovered / largest useful set⌉`.
fn branch(uncovered: PointSet, family: &[PointSet], depth: usize, best: &mut usize) {
    if uncovered.is_empty() {
        *best = (*best).min(depth);
        return;
    }
    let largest = family.iter().map(|s| s.intersection(uncovered).len()).max().unwrap_or(0);
    if largest == 0 || depth + uncovered.len().div_ceil(largest) >= *best {
        return;
    }
    let pivot = uncovered
        .iter()
        .min_by_key(|&p| family.iter().filter(|s| s.contains(p)).count())
        .expect("non-empty");
    let mut candidates: Vec<PointSet> = family
        .iter()
        .filter(|s| s.contains(pivot))
        .map(|s| s.intersection(uncovered))
        .collect();
    candidates.sort_unstable_by_key(|s| std::cmp::Reverse(s.len()));
    candidates.dedup();
    // A candidate whose useful part sits inside another candidate's is dominated.
    let undominated: Vec<PointSet> = candidates
        .iter()
        .filter(|&&s| !candidates.iter().any(|&t| t != s && s.is_subset(t)))
        .copied()
        .collect();
    for s in undominated {
        branch(uncovered.difference(s), family, depth + 1, best);
    }
}

fn coverable_within(uncovered: PointSet, family: &[PointSet], slots: usize) -> bool {
    if uncovered.is_empty() {
        return true;
    }
    let reach = family.iter().fold(PointSet::EMPTY, |acc, s| acc.union(*s));
    if slots == 0 || !uncovered.is_subset(reach) {
        return false;
    }
    let mut best = slots + 1;
    branch(uncovered, family, 0, &mut best);
    best <= slots
}

fn least_cover(uncovered: PointSet, family: &[PointSet], start: usize, slots: usize, chosen: &mut Vec<usize>) -> bool {
    if uncovered.is_empty() {
        return true;
    }
    if slots == 0 {
        return false;
    }
    for j in start..family.len() {
        if family[j].is_disjoint(uncovered) {
            continue;
        }
        let rest = uncovered.difference(family[j]);
        if coverable_within(rest, &family[j + 1..], slots - 1) {
            chosen.push(j);
            if least_cover(rest, family, j + 1, slots - 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(v: &[usize]) -> PointSet {
        v.iter().copied().collect()
    }

    #[test]
    fn small_cases() {
        let u = s(&[0, 1, 2, 3]);
        assert_eq!(minimum_cover(u, &[s(&[0, 1, 2]), s(&[0, 1, 3])]), Some(vec![0, 1]));
        assert_eq!(minimum_cover(u, &[s(&[0]), s(&[1, 2])]), None);
        assert_eq!(minimum_cover(PointSet::EMPTY, &[]), Some(vec![]));
        assert_eq!(minimum_cover(u, &[s(&[0, 1]), s(&[2, 3]), s(&[0, 1, 2, 3])]), Some(vec![2]));
    }

    #[test]
    fn greedy_is_not_optimal_here() {
        // Greedy picks the 4-set first and needs 3; the optimum is 2.
        let u = s(&[0, 1, 2, 3, 4, 5]);
        let fam = [s(&[0, 1, 2]), s(&[3, 4, 5]), s(&[1, 2, 3, 4])];
        assert_eq!(greedy_size(u, &fam), 3);
        assert_eq!(minimum_cover(u, &fam), Some(vec![0, 1]));
    }

    #[test]
    fn lexicographic_tie_break() {
        let u = s(&[0, 1]);
        let fam = [s(&[0]), s(&[0, 1]), s(&[1]), s(&[0, 1])];
        assert_eq!(minimum_cover(u, &fam), Some(vec![1]));
        let fam = [s(&[1]), s(&[0]), s(&[0, 1, 2])];
        assert_eq!(minimum_cover(s(&[0, 1, 2]), &fam), Some(vec![2]));
    }

    fn plain_minimum(u: PointSet, fam: &[PointSet]) -> Option<Vec<usize>> {
        (0..=fam.len()).find_map(|k| {
            let mut covers: Vec<Vec<usize>> = (0u32..(1 << fam.len()))
                .filter(|m| m.count_ones() as usize == k)
                .map(|m| (0..fam.len()).filter(|i| m & (1 << i) != 0).collect::<Vec<_>>())
                .filter(|ix| u.is_subset(ix.iter().fold(PointSet::EMPTY, |a, &i| a.union(fam[i]))))
                .collect();
            covers.sort();
            covers.into_iter().next()
        })
    }

    proptest! {
        #[test]
        fn agrees_with_subset_enumeration(
            n in 1usize..9,
            fam in proptest::collection::vec(any::<u16>(), 0..11),
        ) {
            let u = PointSet::full(n);
            let fam: Vec<PointSet> = fam.into_iter().map(|b| PointSet::from_bits(b as u64).intersection(u)).collect();
            prop_assert_eq!(minimum_cover(u, &fam), plain_minimum(u, &fam));
        }
    }
}
