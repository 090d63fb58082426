//! Brute-force reference implementations.
//!
//! Nothing here shares code with the engine's search paths: opens come from
//! filtering all subsets, maps from filtering all assignments, homotopy from
//! components of the full comparability graph, and covers from plain subset
//! enumeration. They are exponential and meant for small cross-checks only.

use crate::extended::ExtendedNat;
use crate::pointset::PointSet;
use crate::space::FiniteSpace;

/// All down-closed subsets, found by testing every subset.
pub fn opens(space: &FiniteSpace) -> Vec<PointSet> {
    let n = space.len();
    assert!(n <= 20, "brute-force opens limited to 20 points");
    (0u64..(1u64 << n))
        .map(PointSet::from_bits)
        .filter(|&s| s.iter().all(|x| (0..n).all(|y| !space.leq(y, x) || s.contains(y))))
        .collect()
}

/// All up-closed subsets.
pub fn closed_sets(space: &FiniteSpace) -> Vec<PointSet> {
    let full = space.all_points();
    opens(space).into_iter().map(|o| full.difference(o)).collect()
}

/// Normality straight from the definition: every pair of disjoint closed
/// sets has disjoint open neighbourhoods. Returns the first failing pair.
pub fn normality(space: &FiniteSpace) -> (bool, Option<(PointSet, PointSet)>) {
    let opens = opens(space);
    let closed = closed_sets(space);
    for &a in &closed {
        for &b in &closed {
            if a.is_empty() || b.is_empty() || !a.is_disjoint(b) {
                continue;
            }
            let separated = opens.iter().any(|&u| {
                a.is_subset(u) && opens.iter().any(|&v| b.is_subset(v) && u.is_disjoint(v))
            });
            if !separated {
                return (false, Some((a, b)));
            }
        }
    }
    (true, None)
}

/// Number of connected components, by counting minimal non-empty clopen sets.
pub fn component_count(space: &FiniteSpace) -> usize {
    let opens = opens(space);
    let clopen: Vec<PointSet> = opens.iter().copied().filter(|&u| !u.is_empty() && space.is_closed(u)).collect();
    clopen.iter().filter(|&&u| !clopen.iter().any(|&v| v != u && v.is_subset(u))).count()
}

/// Every order-preserving assignment, by filtering all `|Y|^|X|` functions.
pub fn all_maps(domain: &FiniteSpace, codomain: &FiniteSpace) -> Vec<Vec<usize>> {
    let (n, m) = (domain.len(), codomain.len());
    let total = (m as u64).checked_pow(n as u32).expect("too many assignments");
    assert!(total <= 50_000_000, "brute-force map enumeration too large");
    let mut out = Vec::new();
    let mut f = vec![0usize; n];
    for mut code in 0..total {
        for slot in f.iter_mut() {
            *slot = (code % m as u64) as usize;
            code /= m as u64;
        }
        let continuous = (0..n).all(|x| (0..n).all(|y| !domain.leq(x, y) || codomain.leq(f[x], f[y])));
        if continuous {
            out.push(f.clone());
        }
    }
    out.sort();
    out
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Homotopy classes of all maps as components of the comparability graph
/// (edges between pointwise comparable maps). Returns the maps and a class
/// label per map.
pub fn comparability_classes(domain: &FiniteSpace, codomain: &FiniteSpace) -> (Vec<Vec<usize>>, Vec<usize>) {
    let maps = all_maps(domain, codomain);
    let le = |f: &[usize], g: &[usize]| f.iter().zip(g).all(|(&a, &b)| codomain.leq(a, b));
    let mut parent: Vec<usize> = (0..maps.len()).collect();
    for i in 0..maps.len() {
        for j in i + 1..maps.len() {
            if le(&maps[i], &maps[j]) || le(&maps[j], &maps[i]) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let labels = (0..maps.len()).map(|i| find(&mut parent, i)).collect();
    (maps, labels)
}

/// `f ≃ g` via the comparability graph.
pub fn homotopic(domain: &FiniteSpace, codomain: &FiniteSpace, f: &[usize], g: &[usize]) -> bool {
    let (maps, labels) = comparability_classes(domain, codomain);
    let at = |h: &[usize]| maps.binary_search_by(|m| m.as_slice().cmp(h)).expect("continuous map");
    labels[at(f)] == labels[at(g)]
}

/// Least number of family members covering `universe`, trying every subset
/// of each size in turn. `None` when no cover exists.
pub fn min_cover_size(universe: PointSet, family: &[PointSet]) -> Option<usize> {
    let reach = family.iter().fold(PointSet::EMPTY, |a, s| a.union(*s));
    if !universe.is_subset(reach) {
        return None;
    }
    if universe.is_empty() {
        return Some(0);
    }
    fn any_cover(universe: PointSet, family: &[PointSet], start: usize, left: usize, acc: PointSet) -> bool {
        if left == 0 {
            return universe.is_subset(acc);
        }
        (start..family.len()).any(|i| any_cover(universe, family, i + 1, left - 1, acc.union(family[i])))
    }
    (1..=family.len()).find(|&k| any_cover(universe, family, 0, k, PointSet::EMPTY))
}

/// `D(f, g)` over *all* good opens (not only maximal ones), with goodness
/// supplied by the caller.
pub fn distance_with(space: &FiniteSpace, mut good: impl FnMut(PointSet) -> bool) -> ExtendedNat {
    let family: Vec<PointSet> = opens(space).into_iter().filter(|&u| !u.is_empty() && good(u)).collect();
    if space.is_empty() {
        return ExtendedNat::ZERO;
    }
    match min_cover_size(space.all_points(), &family) {
        Some(k) => ExtendedNat::Finite(k as u64 - 1),
        None => ExtendedNat::Infinite,
    }
}

/// `D(f, g)` with goodness decided by the comparability graph on every open.
pub fn distance(domain: &FiniteSpace, codomain: &FiniteSpace, f: &[usize], g: &[usize]) -> ExtendedNat {
    distance_with(domain, |u| {
        let (sub, idx) = domain.subspace(u);
        let fu: Vec<usize> = idx.iter().map(|&x| f[x]).collect();
        let gu: Vec<usize> = idx.iter().map(|&x| g[x]).collect();
        homotopic(&sub, codomain, &fu, &gu)
    })
}

/// Every subset of `0..n` that is a union of finite intersections of `generators`.
pub fn generated_topology(n: usize, generators: &[Vec<usize>]) -> Vec<Vec<usize>> {
    assert!(n <= 16, "brute-force topology limited to 16 points");
    let to_bits = |v: &[usize]| v.iter().fold(0u32, |a, &i| a | (1 << i));
    let full = (1u32 << n) - 1;
    let mut basis: std::collections::BTreeSet<u32> = generators.iter().map(|g| to_bits(g)).collect();
    basis.insert(full);
    loop {
        let snapshot: Vec<u32> = basis.iter().copied().collect();
        let before = basis.len();
        for &a in &snapshot {
            for &b in &snapshot {
                basis.insert(a & b);
            }
        }
        if basis.len() == before {
            break;
        }
    }
    let mut opens: std::collections::BTreeSet<u32> = std::collections::BTreeSet::from([0]);
    loop {
        let snapshot: Vec<u32> = opens.iter().copied().collect();
        let before = opens.len();
        for &a in &snapshot {
            for &b in &basis {
                opens.insert(a | b);
            }
        }
        if opens.len() == before {
            break;
        }
    }
    let mut out: Vec<Vec<usize>> = opens.into_iter().map(|b| (0..n).filter(|i| b & (1 << i) != 0).collect()).collect();
    out.sort();
    out
}

/// Whether a finite topology (given by all its opens) is connected, by
/// looking for a proper non-empty clopen set.
pub fn topology_connected(n: usize, opens: &[Vec<usize>]) -> bool {
    let sets: std::collections::HashSet<Vec<usize>> = opens.iter().cloned().collect();
    !opens.iter().any(|u| {
        if u.is_empty() || u.len() == n {
            return false;
        }
        let complement: Vec<usize> = (0..n).filter(|i| !u.contains(i)).collect();
        sets.contains(&complement)
    })
}
