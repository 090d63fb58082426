//! The topology a distance matrix induces on a finite carrier.
//!
//! Balls `B_r(c) = {g : D(c, g) < r}` generate the topology. Distances are
//! integers or ∞, so only integer thresholds matter: every radius `r` gives
//! the same ball as the threshold `⌈r⌉`, and thresholds beyond the largest
//! finite distance add nothing. A finite topology is determined by the
//! minimal open neighbourhood of each point, which is what
//! [`FiniteTopology`] stores.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use fixedbitset::FixedBitSet;
use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::distance::distance_matrix;
use crate::error::{Error, Result};
use crate::extended::ExtendedNat;
use crate::homotopy::HomotopyClasses;
use crate::limits::Limits;
use crate::space::FiniteSpace;

/// A positive rational ball radius.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Radius(Ratio<u64>);

impl Radius {
    pub fn new(numer: u64, denom: u64) -> Result<Self> {
        if denom == 0 || numer == 0 {
            return Err(Error::NonPositiveRadius(format!("{numer}/{denom}")));
        }
        Ok(Radius(Ratio::new(numer, denom)))
    }

    pub fn integer(n: u64) -> Result<Self> {
        Self::new(n, 1)
    }

    /// `d < r`.
    pub fn admits(self, d: ExtendedNat) -> bool {
        match d {
            ExtendedNat::Finite(d) => Ratio::from_integer(d) < self.0,
            ExtendedNat::Infinite => false,
        }
    }

    /// The integer threshold `⌈r⌉` with the same ball.
    pub fn threshold(self) -> u64 {
        self.0.ceil().to_integer()
    }

    pub fn at_most_one(self) -> bool {
        self.0 <= Ratio::from_integer(1)
    }
}

impl FromStr for Radius {
    type Err = Error;

    /// Accepts `n`, `p/q` and decimals such as `1.5`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::Parse(s.to_string(), why.to_string());
        let t = s.trim();
        if t.starts_with('-') {
            return Err(Error::NonPositiveRadius(t.to_string()));
        }
        let ratio = if let Some((p, q)) = t.split_once('/') {
            let p: u64 = p.trim().parse().map_err(|_| bad("bad numerator"))?;
            let q: u64 = q.trim().parse().map_err(|_| bad("bad denominator"))?;
            (p, q)
        } else if let Some((int, frac)) = t.split_once('.') {
            if frac.is_empty() || frac.len() > 18 || !frac.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad("bad decimal"));
            }
            let scale = 10u64.pow(frac.len() as u32);
            let int: u64 = if int.is_empty() { 0 } else { int.parse().map_err(|_| bad("bad decimal"))? };
            let frac: u64 = frac.parse().map_err(|_| bad("bad decimal"))?;
            (int.checked_mul(scale).and_then(|v| v.checked_add(frac)).ok_or_else(|| bad("overflow"))?, scale)
        } else {
            (t.parse().map_err(|_| bad("not a number"))?, 1)
        };
        if ratio.1 == 0 {
            return Err(bad("zero denominator"));
        }
        Radius::new(ratio.0, ratio.1).map_err(|_| Error::NonPositiveRadius(t.to_string()))
    }
}

impl fmt::Display for Radius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for Radius {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A finite carrier with a symmetric, zero-diagonal ℕ∪{∞} distance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudometricSpace {
    labels: Vec<String>,
    dist: Vec<Vec<ExtendedNat>>,
    quotiented: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Ball {
    pub center: usize,
    pub radius: Radius,
    pub members: Vec<usize>,
}

impl PseudometricSpace {
    pub fn from_matrix(labels: Vec<String>, dist: Vec<Vec<ExtendedNat>>, quotiented: bool) -> Result<Self> {
        let n = labels.len();
        if dist.len() != n || dist.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidMatrix(format!("expected a {n}×{n} matrix")));
        }
        for i in 0..n {
            if dist[i][i] != 0 {
                return Err(Error::InvalidMatrix(format!("non-zero diagonal at {i}")));
            }
            for j in 0..n {
                if dist[i][j] != dist[j][i] {
                    return Err(Error::InvalidMatrix(format!("asymmetric at ({i}, {j})")));
                }
                if quotiented && i != j && dist[i][j] == 0 {
                    return Err(Error::InvalidMatrix(format!("quotient carrier has distinct points {i}, {j} at distance 0")));
                }
            }
        }
        Ok(PseudometricSpace { labels, dist, quotiented })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn dist(&self, i: usize, j: usize) -> ExtendedNat {
        self.dist[i][j]
    }

    pub fn matrix(&self) -> &[Vec<ExtendedNat>] {
        &self.dist
    }

    pub fn is_quotiented(&self) -> bool {
        self.quotiented
    }

    /// Largest finite distance.
    pub fn max_finite(&self) -> u64 {
        self.dist.iter().flatten().filter_map(|d| d.finite()).max().unwrap_or(0)
    }

    /// Integer radii `1 ..= max finite distance + 1`; every ball is a ball of one of these radii.
    pub fn thresholds(&self) -> std::ops::RangeInclusive<u64> {
        1..=self.max_finite() + 1
    }

    pub fn ball(&self, center: usize, radius: Radius) -> Result<Ball> {
        if center >= self.len() {
            return Err(Error::UnknownCarrierIndex(center));
        }
        let members = (0..self.len()).filter(|&g| radius.admits(self.dist[center][g])).collect();
        Ok(Ball { center, radius, members })
    }

    fn ball_bits(&self, center: usize, threshold: u64) -> FixedBitSet {
        let mut bits = FixedBitSet::with_capacity(self.len());
        for g in 0..self.len() {
            if self.dist[center][g] < threshold {
                bits.insert(g);
            }
        }
        bits
    }

    /// The topology generated by all balls, or its subspace topology on `subset`.
    pub fn generate_topology(&self, subset: Option<&[usize]>) -> Result<FiniteTopology> {
        let n = self.len();
        let balls: Vec<FixedBitSet> = (0..n)
            .flat_map(|c| self.thresholds().map(move |t| (c, t)))
            .map(|(c, t)| self.ball_bits(c, t))
            .collect();
        let mut minimal = Vec::with_capacity(n);
        for x in 0..n {
            let mut nbhd = FixedBitSet::with_capacity(n);
            nbhd.insert_range(..);
            for b in balls.iter().filter(|b| b.contains(x)) {
                nbhd.intersect_with(b);
            }
            minimal.push(nbhd);
        }
        let whole = FiniteTopology { carrier: (0..n).collect(), minimal };
        match subset {
            None => Ok(whole),
            Some(s) => {
                if let Some(&bad) = s.iter().find(|&&i| i >= n) {
                    return Err(Error::UnknownCarrierIndex(bad));
                }
                Ok(whole.subspace(s))
            }
        }
    }

    /// Verdicts for the ball and connectivity properties of the induced topology.
    pub fn property_report(&self) -> Result<PropertyReport> {
        let n = self.len();
        let topology = self.generate_topology(None)?;
        let one = Radius::integer(1)?;

        let mut small_ball_violations = Vec::new();
        for c in 0..n {
            let ball = self.ball(c, one)?;
            let sub = topology.subspace(&ball.members);
            if !sub.is_indiscrete() {
                small_ball_violations.push(BallWitness { center: c, radius: one, members: ball.members.clone() });
            }
        }

        let mut checked = 0;
        let mut large_ball_violations = Vec::new();
        let mut separations = Vec::new();
        for c in 0..n {
            let inner = self.ball(c, one)?.members;
            for t in self.thresholds().skip(1) {
                let radius = Radius::integer(t)?;
                let outer = self.ball(c, radius)?.members;
                if outer.len() == inner.len() {
                    continue;
                }
                checked += 1;
                let sub = topology.subspace(&outer);
                let local: Vec<usize> = inner.iter().map(|g| outer.binary_search(g).expect("nested balls")).collect();
                let set = sub.set(&local);
                let by_distance: Vec<usize> = outer
                    .iter()
                    .copied()
                    .filter(|&h| inner.iter().map(|&g| self.dist[g][h]).min() == Some(ExtendedNat::ZERO))
                    .collect();
                let separated = sub.is_open(&set) && sub.is_closed(&set) && !sub.is_connected();
                if !separated || by_distance != inner {
                    large_ball_violations.push(BallWitness { center: c, radius, members: outer.clone() });
                } else if separations.len() < 16 {
                    separations.push(Separation { center: c, radius, clopen: inner.clone(), complement: outer.iter().copied().filter(|h| !inner.contains(h)).collect() });
                }
            }
        }

        let indiscrete = topology.is_indiscrete();
        let components = topology.clopen_components();
        let connected = components.len() <= 1;
        let disconnection_witness = (!connected).then(|| components[0].clone());
        let infinite_pairs_separated = (0..n).all(|i| {
            (0..n).all(|j| self.dist[i][j] != ExtendedNat::Infinite || !components.iter().any(|c| c.contains(&i) && c.contains(&j)))
        });
        Ok(PropertyReport {
            carrier: n,
            quotiented: self.quotiented,
            small_balls_indiscrete: small_ball_violations.is_empty(),
            small_ball_violations,
            large_balls_checked: checked,
            large_balls_vacuous: checked == 0,
            large_balls_disconnected: large_ball_violations.is_empty(),
            large_ball_violations,
            separations,
            indiscrete,
            connected,
            path_connected: connected,
            not_indiscrete_implies_disconnected: indiscrete || !connected,
            disconnection_witness,
            infinite_pairs_separated,
            compact: true,
            compact_note: "finite carrier: every open cover has a finite subcover; non-compactness is a property of infinite map spaces",
            components,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BallWitness {
    pub center: usize,
    pub radius: Radius,
    pub members: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Separation {
    pub center: usize,
    pub radius: Radius,
    pub clopen: Vec<usize>,
    pub complement: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub carrier: usize,
    pub quotiented: bool,
    /// Every `B_r(f)` with `r ≤ 1` carries the indiscrete subspace topology.
    pub small_balls_indiscrete: bool,
    pub small_ball_violations: Vec<BallWitness>,
    /// Number of `(f, r)` with `r > 1` and `B_1(f) ⊊ B_r(f)`.
    pub large_balls_checked: usize,
    pub large_balls_vacuous: bool,
    /// Each such `B_r(f)` is disconnected with `B_1(f)` clopen in it.
    pub large_balls_disconnected: bool,
    pub large_ball_violations: Vec<BallWitness>,
    /// A sample of the separations found.
    pub separations: Vec<Separation>,
    pub indiscrete: bool,
    pub connected: bool,
    /// Equal to `connected` for finite spaces.
    pub path_connected: bool,
    pub not_indiscrete_implies_disconnected: bool,
    /// A proper non-empty clopen set when the topology is disconnected.
    pub disconnection_witness: Option<Vec<usize>>,
    pub infinite_pairs_separated: bool,
    pub compact: bool,
    pub compact_note: &'static str,
    pub components: Vec<Vec<usize>>,
}

impl PropertyReport {
    pub fn passed(&self) -> bool {
        self.small_balls_indiscrete
            && self.large_balls_disconnected
            && self.not_indiscrete_implies_disconnected
            && self.infinite_pairs_separated
    }
}

/// A topology on a finite carrier given by minimal open neighbourhoods.
///
/// `carrier[i]` is the index, in the ambient space, of local point `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteTopology {
    carrier: Vec<usize>,
    minimal: Vec<FixedBitSet>,
}

impl FiniteTopology {
    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn carrier(&self) -> &[usize] {
        &self.carrier
    }

    /// Local positions to a bitset.
    pub fn set(&self, local: &[usize]) -> FixedBitSet {
        let mut bits = FixedBitSet::with_capacity(self.len());
        for &i in local {
            bits.insert(i);
        }
        bits
    }

    /// Minimal open neighbourhood of local point `i`, as ambient indices.
    pub fn minimal_open(&self, i: usize) -> Vec<usize> {
        self.minimal[i].ones().map(|j| self.carrier[j]).collect()
    }

    pub fn is_open(&self, s: &FixedBitSet) -> bool {
        s.ones().all(|i| self.minimal[i].is_subset(s))
    }

    pub fn is_closed(&self, s: &FixedBitSet) -> bool {
        (0..self.len()).filter(|&i| !s.contains(i)).all(|i| self.minimal[i].is_disjoint(s))
    }

    pub fn is_indiscrete(&self) -> bool {
        self.minimal.iter().all(|m| m.count_ones(..) == self.len())
    }

    pub fn is_discrete(&self) -> bool {
        self.minimal.iter().enumerate().all(|(i, m)| m.count_ones(..) == 1 && m.contains(i))
    }

    /// Subspace topology on the given ambient indices (which must be in the carrier).
    pub fn subspace(&self, ambient: &[usize]) -> FiniteTopology {
        let local: Vec<usize> = ambient
            .iter()
            .map(|a| self.carrier.iter().position(|c| c == a).expect("index in carrier"))
            .collect();
        let mut keep = FixedBitSet::with_capacity(self.len());
        for &i in &local {
            keep.insert(i);
        }
        let minimal = local
            .iter()
            .map(|&i| {
                let mut bits = FixedBitSet::with_capacity(local.len());
                for (k, &j) in local.iter().enumerate() {
                    if self.minimal[i].contains(j) {
                        bits.insert(k);
                    }
                }
                bits
            })
            .collect();
        FiniteTopology { carrier: local.iter().map(|&i| self.carrier[i]).collect(), minimal }
    }

    /// The smallest clopen sets, found by growing each set until it is both
    /// open and closed. Returned as ambient indices, ordered by least member.
    pub fn clopen_components(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut assigned = FixedBitSet::with_capacity(n);
        let mut out = Vec::new();
        for start in 0..n {
            if assigned.contains(start) {
                continue;
            }
            let mut set = FixedBitSet::with_capacity(n);
            set.insert(start);
            loop {
                let mut grown = set.clone();
                for i in 0..n {
                    if set.contains(i) {
                        grown.union_with(&self.minimal[i]);
                    } else if !self.minimal[i].is_disjoint(&set) {
                        grown.insert(i);
                    }
                }
                if grown == set {
                    break;
                }
                set = grown;
            }
            assigned.union_with(&set);
            out.push(set.ones().map(|i| self.carrier[i]).collect());
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.clopen_components().len() <= 1
    }

    /// Every open set as sorted ambient indices, or `None` when there are more than `cap`.
    pub fn opens(&self, cap: usize) -> Option<Vec<Vec<usize>>> {
        let n = self.len();
        let mut seen: HashSet<FixedBitSet> = HashSet::new();
        let empty = FixedBitSet::with_capacity(n);
        let mut queue = vec![empty.clone()];
        seen.insert(empty);
        while let Some(s) = queue.pop() {
            for m in &self.minimal {
                if m.is_subset(&s) {
                    continue;
                }
                let mut t = s.clone();
                t.union_with(m);
                if seen.insert(t.clone()) {
                    if seen.len() > cap {
                        return None;
                    }
                    queue.push(t);
                }
            }
        }
        let mut out: Vec<Vec<usize>> = seen.into_iter().map(|s| s.ones().map(|i| self.carrier[i]).collect()).collect();
        out.sort();
        Some(out)
    }
}

/// The pseudometric space `(Map(X, Y), D)`, or its quotient by `D = 0`
/// (one representative per homotopy class) when `quotient` is set.
pub fn induced_space(
    domain: &Arc<FiniteSpace>,
    codomain: &Arc<FiniteSpace>,
    quotient: bool,
    limits: &Limits,
) -> Result<PseudometricSpace> {
    let matrix = distance_matrix(domain, codomain, limits)?;
    let labels: Vec<String> = matrix.maps.iter().map(|m| format!("{m:?}")).collect();
    if !quotient {
        return PseudometricSpace::from_matrix(labels, matrix.entries, false);
    }
    // D(f, g) = 0 iff f ≃ g, so the zero-distance clusters are the homotopy classes.
    let zero_labels: Vec<usize> = (0..matrix.len())
        .map(|i| (0..matrix.len()).find(|&j| matrix.get(i, j) == 0).expect("diagonal"))
        .collect();
    let classes = HomotopyClasses::from_labels(matrix.maps.clone(), &zero_labels);
    let reps = classes.representatives();
    let dist = reps.iter().map(|&i| reps.iter().map(|&j| matrix.get(i, j)).collect()).collect();
    PseudometricSpace::from_matrix(reps.iter().map(|&i| labels[i].clone()).collect(), dist, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;
    use ExtendedNat::{Finite, Infinite};

    fn space(dist: Vec<Vec<ExtendedNat>>) -> PseudometricSpace {
        let labels = (0..dist.len()).map(|i| i.to_string()).collect();
        PseudometricSpace::from_matrix(labels, dist, false).unwrap()
    }

    #[test]
    fn radius_parsing() {
        assert_eq!("1/2".parse::<Radius>().unwrap(), Radius::new(1, 2).unwrap());
        assert_eq!("1.5".parse::<Radius>().unwrap(), Radius::new(3, 2).unwrap());
        assert_eq!("2".parse::<Radius>().unwrap().threshold(), 2);
        assert_eq!("0.5".parse::<Radius>().unwrap().threshold(), 1);
        assert!(matches!("0".parse::<Radius>(), Err(Error::NonPositiveRadius(_))));
        assert!(matches!("-1".parse::<Radius>(), Err(Error::NonPositiveRadius(_))));
        assert!("x".parse::<Radius>().is_err());
        assert!(Radius::new(1, 1).unwrap().at_most_one());
        assert!(!Radius::new(3, 2).unwrap().at_most_one());
        assert!(Radius::new(3, 2).unwrap().admits(Finite(1)));
        assert!(!Radius::new(1, 1).unwrap().admits(Finite(1)));
        assert!(!Radius::new(1000, 1).unwrap().admits(Infinite));
    }

    #[test]
    fn rejects_bad_matrices() {
        let labels = vec!["a".to_string(), "b".to_string()];
        assert!(PseudometricSpace::from_matrix(labels.clone(), vec![vec![Finite(0), Finite(1)], vec![Finite(2), Finite(0)]], false).is_err());
        assert!(PseudometricSpace::from_matrix(labels.clone(), vec![vec![Finite(1), Finite(1)], vec![Finite(1), Finite(0)]], false).is_err());
        assert!(PseudometricSpace::from_matrix(labels, vec![vec![Finite(0), Finite(0)], vec![Finite(0), Finite(0)]], true).is_err());
    }

    #[test]
    fn indiscrete_and_discrete() {
        let zero = space(vec![vec![Finite(0); 3]; 3]);
        let t = zero.generate_topology(None).unwrap();
        assert!(t.is_indiscrete());
        assert_eq!(t.opens(100).unwrap(), vec![vec![], vec![0, 1, 2]]);
        let inf = space(vec![
            vec![Finite(0), Infinite, Infinite],
            vec![Infinite, Finite(0), Infinite],
            vec![Infinite, Infinite, Finite(0)],
        ]);
        let t = inf.generate_topology(None).unwrap();
        assert!(t.is_discrete());
        assert_eq!(t.opens(100).unwrap().len(), 8);
        assert_eq!(t.clopen_components().len(), 3);
        assert!(matches!(inf.ball(0, Radius::integer(1).unwrap()), Ok(Ball { members, .. }) if members == vec![0]));
        assert!(matches!(inf.ball(9, Radius::integer(1).unwrap()), Err(Error::UnknownCarrierIndex(9))));
    }

    #[test]
    fn triangle_violating_matrix() {
        // Violates the triangle inequality: D(0,2) = ∞ > 1 + 1.
        let m = space(vec![
            vec![Finite(0), Finite(1), Infinite],
            vec![Finite(1), Finite(0), Finite(1)],
            vec![Infinite, Finite(1), Finite(0)],
        ]);
        let t = m.generate_topology(None).unwrap();
        let generators: Vec<Vec<usize>> = (0..3)
            .flat_map(|c| m.thresholds().map(move |r| (c, r)))
            .map(|(c, r)| m.ball(c, Radius::integer(r).unwrap()).unwrap().members)
            .collect();
        assert_eq!(t.opens(1000).unwrap(), oracle::generated_topology(3, &generators));
        let report = m.property_report().unwrap();
        assert!(report.passed());
        assert_eq!(report.components.len(), 3);
    }

    #[test]
    fn ball_nesting_and_thresholds() {
        let m = space(vec![
            vec![Finite(0), Finite(1), Finite(2)],
            vec![Finite(1), Finite(0), Finite(1)],
            vec![Finite(2), Finite(1), Finite(0)],
        ]);
        assert_eq!(m.thresholds(), 1..=3);
        let b = |r: &str| m.ball(0, r.parse().unwrap()).unwrap().members;
        assert_eq!(b("1/2"), vec![0]);
        assert_eq!(b("1"), vec![0]);
        assert_eq!(b("1.01"), vec![0, 1]);
        assert_eq!(b("3"), vec![0, 1, 2]);
        let report = m.property_report().unwrap();
        assert!(report.passed());
        assert!(!report.large_balls_vacuous);
        assert!(report.separations.iter().all(|s| s.clopen.len() == 1));
    }

    #[test]
    fn single_class_is_vacuous() {
        let m = space(vec![vec![Finite(0); 2]; 2]);
        let r = m.property_report().unwrap();
        assert!(r.large_balls_vacuous && r.indiscrete && r.connected && r.passed());
    }

    #[test]
    fn subspace_topology() {
        let m = space(vec![
            vec![Finite(0), Finite(0), Finite(1)],
            vec![Finite(0), Finite(0), Finite(1)],
            vec![Finite(1), Finite(1), Finite(0)],
        ]);
        let t = m.generate_topology(Some(&[0, 1])).unwrap();
        assert!(t.is_indiscrete());
        assert_eq!(t.opens(10).unwrap(), vec![vec![], vec![0, 1]]);
        let t = m.generate_topology(Some(&[1, 2])).unwrap();
        assert!(t.is_discrete());
        assert_eq!(t.carrier(), &[1, 2]);
        assert!(matches!(m.generate_topology(Some(&[5])), Err(Error::UnknownCarrierIndex(5))));
    }
}
