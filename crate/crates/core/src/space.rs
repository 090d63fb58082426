//! Finite T0 spaces as posets.
//!
//! Convention used throughout the crate: `x ≤ y` iff `x` lies in the minimal
//! open set of `y`. Open sets are therefore exactly the down-sets of the
//! specialization order and closed sets are the up-sets.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::pointset::{PointSet, MAX_POINTS};

/// A finite T0 topological space, stored as its specialization order.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteSpace {
    names: Vec<String>,
    /// `down[x]` = minimal open set of `x` = `{y : y ≤ x}`.
    down: Vec<PointSet>,
    /// `up[x]` = closure of `{x}` = `{y : x ≤ y}`.
    up: Vec<PointSet>,
}

/// An open subset of some [`FiniteSpace`], i.e. a down-closed point set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OpenSet(PointSet);

impl OpenSet {
    pub fn points(self) -> PointSet {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.len()
    }

    pub fn is_empty(self) -> bool {
        self.0.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormalityWitness {
    pub first: Vec<String>,
    pub second: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpaceReport {
    pub points: usize,
    pub t0: bool,
    pub normal: bool,
    pub normality_witness: Option<NormalityWitness>,
    pub connected_components: Vec<Vec<String>>,
    pub opens: usize,
    pub contractible: bool,
}

/// Result of collapsing beat points: a core of the space and a retraction onto it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreRetraction {
    pub core: PointSet,
    /// `retraction[x]` is a point of `core`; it fixes every core point and is
    /// homotopic to the identity when composed with the inclusion.
    pub retraction: Vec<usize>,
}

impl FiniteSpace {
    /// Builds a space from point names and generating relation pairs `(x, y)`
    /// meaning `x ≤ y`. The reflexive-transitive closure is taken.
    pub fn build<S: AsRef<str>>(points: &[S], relations: &[(S, S)]) -> Result<Self> {
        if points.len() > MAX_POINTS {
            return Err(Error::TooManyPoints(points.len()));
        }
        let mut index = HashMap::with_capacity(points.len());
        for (i, p) in points.iter().enumerate() {
            if index.insert(p.as_ref(), i).is_some() {
                return Err(Error::DuplicatePoint(p.as_ref().to_string()));
            }
        }
        let lookup = |name: &str| index.get(name).copied().ok_or_else(|| Error::UnknownPoint(name.to_string()));
        let mut pairs = Vec::with_capacity(relations.len());
        for (a, b) in relations {
            pairs.push((lookup(a.as_ref())?, lookup(b.as_ref())?));
        }
        let names = points.iter().map(|p| p.as_ref().to_string()).collect();
        Self::from_pairs(names, &pairs)
    }

    /// Builds a space from names and index pairs `(x, y)` meaning `x ≤ y`.
    pub fn from_pairs(names: Vec<String>, pairs: &[(usize, usize)]) -> Result<Self> {
        let n = names.len();
        if n > MAX_POINTS {
            return Err(Error::TooManyPoints(n));
        }
        let mut down: Vec<PointSet> = (0..n).map(PointSet::singleton).collect();
        for &(a, b) in pairs {
            down[b].insert(a);
        }
        // Warshall closure on bitsets.
        for k in 0..n {
            let dk = down[k];
            for d in down.iter_mut() {
                if d.contains(k) {
                    *d = d.union(dk);
                }
            }
        }
        for x in 0..n {
            for y in down[x].iter() {
                if y != x && down[y].contains(x) {
                    let (a, b) = if y < x { (y, x) } else { (x, y) };
                    return Err(Error::NotT0(names[a].clone(), names[b].clone()));
                }
            }
        }
        Ok(Self::from_down_sets(names, down))
    }

    fn from_down_sets(names: Vec<String>, down: Vec<PointSet>) -> Self {
        let n = names.len();
        let mut up = vec![PointSet::EMPTY; n];
        for (x, d) in down.iter().enumerate() {
            for y in d.iter() {
                up[y].insert(x);
            }
        }
        FiniteSpace { names, down, up }
    }

    pub fn point() -> Self {
        Self::discrete(1).renamed(vec!["*".into()])
    }

    /// `n` pairwise incomparable points named `0..n`.
    pub fn discrete(n: usize) -> Self {
        Self::from_pairs((0..n).map(|i| i.to_string()).collect(), &[]).expect("discrete space")
    }

    /// The chain `0 ≤ 1 ≤ … ≤ n-1`.
    pub fn chain(n: usize) -> Self {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_pairs((0..n).map(|i| i.to_string()).collect(), &pairs).expect("chain")
    }

    /// Two points `s ≤ t`; `{s}` is the non-trivial open set.
    pub fn sierpinski() -> Self {
        Self::build(&["s", "t"], &[("s", "t")]).expect("sierpinski")
    }

    /// The four-point pseudocircle: open points `a, b` below closed points `c, d`.
    pub fn pseudocircle() -> Self {
        Self::build(&["a", "b", "c", "d"], &[("a", "c"), ("b", "c"), ("a", "d"), ("b", "d")])
            .expect("pseudocircle")
    }

    pub fn renamed(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.names.len());
        self.names = names;
        self
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownPoint(name.to_string()))
    }

    pub fn all_points(&self) -> PointSet {
        PointSet::full(self.len())
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.down[y].contains(x)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    /// Minimal open neighbourhood `{y : y ≤ x}`.
    pub fn down(&self, x: usize) -> PointSet {
        self.down[x]
    }

    /// Closure of a point, `{y : x ≤ y}`.
    pub fn up(&self, x: usize) -> PointSet {
        self.up[x]
    }

    pub fn down_closure(&self, s: PointSet) -> PointSet {
        s.iter().fold(PointSet::EMPTY, |acc, x| acc.union(self.down[x]))
    }

    pub fn up_closure(&self, s: PointSet) -> PointSet {
        s.iter().fold(PointSet::EMPTY, |acc, x| acc.union(self.up[x]))
    }

    pub fn is_open(&self, s: PointSet) -> bool {
        s.iter().all(|x| self.down[x].is_subset(s))
    }

    pub fn is_closed(&self, s: PointSet) -> bool {
        s.iter().all(|x| self.up[x].is_subset(s))
    }

    pub fn open_set(&self, s: PointSet) -> Option<OpenSet> {
        (s.is_subset(self.all_points()) && self.is_open(s)).then_some(OpenSet(s))
    }

    pub fn whole(&self) -> OpenSet {
        OpenSet(self.all_points())
    }

    /// Strict order relations `x < y` as index pairs, sorted.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for y in 0..self.len() {
            for x in self.down[y].without(y).iter() {
                out.push((x, y));
            }
        }
        out.sort_unstable();
        out
    }

    /// Points listed so that every point comes after everything below it.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&x| (self.down[x].len(), x));
        order
    }

    /// All open sets (down-sets) in canonical order.
    pub fn open_family(&self, limits: &Limits) -> Result<Vec<OpenSet>> {
        let order = self.linear_extension();
        let mut out = Vec::new();
        let mut stack = vec![(0usize, PointSet::EMPTY)];
        while let Some((depth, current)) = stack.pop() {
            if depth == order.len() {
                out.push(OpenSet(current));
                if out.len() > limits.max_opens {
                    return Err(Error::SizeGuard {
                        what: format!("open family of a {}-point space", self.len()),
                        limit: limits.max_opens,
                        knob: "Limits::max_opens",
                    });
                }
                continue;
            }
            let x = order[depth];
            stack.push((depth + 1, current));
            if self.down[x].without(x).is_subset(current) {
                stack.push((depth + 1, current.with(x)));
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    /// The product space with the product order; point `(x, y)` has index `x * |Y| + y`.
    pub fn product(&self, other: &FiniteSpace) -> Result<FiniteSpace> {
        let n = self.len() * other.len();
        if n > MAX_POINTS {
            return Err(Error::TooManyPoints(n));
        }
        let mut names = Vec::with_capacity(n);
        let mut down = Vec::with_capacity(n);
        for x in 0..self.len() {
            for y in 0..other.len() {
                names.push(format!("({},{})", self.names[x], other.names[y]));
                let mut d = PointSet::EMPTY;
                for x2 in self.down[x].iter() {
                    for y2 in other.down[y].iter() {
                        d.insert(x2 * other.len() + y2);
                    }
                }
                down.push(d);
            }
        }
        Ok(Self::from_down_sets(names, down))
    }

    /// The subspace on `s`, together with the original index of each of its points.
    pub fn subspace(&self, s: PointSet) -> (FiniteSpace, Vec<usize>) {
        let idx: Vec<usize> = s.iter().filter(|&x| x < self.len()).collect();
        let mut position = vec![usize::MAX; self.len()];
        for (i, &x) in idx.iter().enumerate() {
            position[x] = i;
        }
        let down = idx
            .iter()
            .map(|&x| self.down[x].intersection(s).iter().map(|y| position[y]).collect())
            .collect();
        let names = idx.iter().map(|&x| self.names[x].clone()).collect();
        (Self::from_down_sets(names, down), idx)
    }

    pub fn subspace_named<S: AsRef<str>>(&self, points: &[S]) -> Result<FiniteSpace> {
        let mut s = PointSet::EMPTY;
        for p in points {
            s.insert(self.index_of(p.as_ref())?);
        }
        Ok(self.subspace(s).0)
    }

    pub fn set_of<S: AsRef<str>>(&self, points: &[S]) -> Result<PointSet> {
        points.iter().map(|p| self.index_of(p.as_ref())).collect()
    }

    pub fn names_of(&self, s: PointSet) -> Vec<String> {
        s.iter().map(|x| self.names[x].clone()).collect()
    }

    /// Normality test. Closed sets are up-sets and the smallest open
    /// neighbourhood of a closed set `A` is its down-closure, so the space is
    /// normal iff the down-closures of every pair of disjoint point closures
    /// are disjoint. On failure the offending pair of closures is returned.
    pub fn normality(&self) -> (bool, Option<(PointSet, PointSet)>) {
        let nbhd: Vec<PointSet> = (0..self.len()).map(|x| self.down_closure(self.up[x])).collect();
        for a in 0..self.len() {
            for b in a + 1..self.len() {
                if self.up[a].is_disjoint(self.up[b]) && !nbhd[a].is_disjoint(nbhd[b]) {
                    return (false, Some((self.up[a], self.up[b])));
                }
            }
        }
        (true, None)
    }

    pub fn is_normal(&self) -> bool {
        self.normality().0
    }

    /// Components of the comparability graph, each as a point set, ordered by least element.
    pub fn component_sets(&self) -> Vec<PointSet> {
        self.components_within(self.all_points())
    }

    /// Components of the subspace on `s`.
    pub fn components_within(&self, s: PointSet) -> Vec<PointSet> {
        let mut left = s;
        let mut out = Vec::new();
        while let Some(start) = left.first() {
            let mut comp = PointSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let reach = frontier
                    .iter()
                    .fold(PointSet::EMPTY, |acc, x| acc.union(self.down[x]).union(self.up[x]))
                    .intersection(s);
                frontier = reach.difference(comp);
                comp = comp.union(reach);
            }
            left = left.difference(comp);
            out.push(comp);
        }
        out
    }

    pub fn connected_components(&self) -> Vec<Vec<String>> {
        self.component_sets().into_iter().map(|c| self.names_of(c)).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.component_sets().len() <= 1
    }

    /// Removes beat points one at a time, lowest index first, until none remain.
    ///
    /// A down beat point is one whose strict down-set has a maximum, an up
    /// beat point one whose strict up-set has a minimum; it is sent to that
    /// maximum or minimum.
    pub fn core_retraction(&self) -> CoreRetraction {
        let n = self.len();
        let mut alive = self.all_points();
        let mut target: Vec<usize> = (0..n).collect();
        'outer: loop {
            for x in alive.iter() {
                let below = self.down[x].without(x).intersection(alive);
                if let Some(m) = self.maximum_of(below) {
                    target[x] = m;
                    alive.remove(x);
                    continue 'outer;
                }
                let above = self.up[x].without(x).intersection(alive);
                if let Some(m) = self.minimum_of(above) {
                    target[x] = m;
                    alive.remove(x);
                    continue 'outer;
                }
            }
            break;
        }
        let retraction = (0..n)
            .map(|mut x| {
                while !alive.contains(x) {
                    x = target[x];
                }
                x
            })
            .collect();
        CoreRetraction { core: alive, retraction }
    }

    /// A finite space is contractible iff its core is a single point.
    pub fn is_contractible(&self) -> bool {
        self.core_retraction().core.len() == 1
    }

    pub fn maximum_of(&self, s: PointSet) -> Option<usize> {
        s.iter().find(|&m| s.is_subset(self.down[m]))
    }

    pub fn minimum_of(&self, s: PointSet) -> Option<usize> {
        s.iter().find(|&m| s.is_subset(self.up[m]))
    }

    pub fn report(&self, limits: &Limits) -> Result<SpaceReport> {
        let (normal, witness) = self.normality();
        Ok(SpaceReport {
            points: self.len(),
            t0: true,
            normal,
            normality_witness: witness.map(|(a, b)| NormalityWitness {
                first: self.names_of(a),
                second: self.names_of(b),
            }),
            connected_components: self.connected_components(),
            opens: self.open_family(limits)?.len(),
            contractible: self.is_contractible(),
        })
    }

    /// Whether `other` is this space with points relabelled.
    pub fn is_isomorphic(&self, other: &FiniteSpace) -> bool {
        if self.len() != other.len() {
            return false;
        }
        let mut perm = vec![usize::MAX; self.len()];
        let mut used = PointSet::EMPTY;
        self.extend_iso(other, 0, &mut perm, &mut used)
    }

    fn extend_iso(&self, other: &FiniteSpace, x: usize, perm: &mut [usize], used: &mut PointSet) -> bool {
        if x == self.len() {
            return true;
        }
        for y in 0..other.len() {
            if used.contains(y) || self.down[x].len() != other.down[y].len() || self.up[x].len() != other.up[y].len() {
                continue;
            }
            let consistent = (0..x).all(|x2| {
                self.leq(x2, x) == other.leq(perm[x2], y) && self.leq(x, x2) == other.leq(y, perm[x2])
            });
            if consistent {
                perm[x] = y;
                used.insert(y);
                if self.extend_iso(other, x + 1, perm, used) {
                    return true;
                }
                used.remove(y);
            }
        }
        false
    }
}

impl fmt::Debug for FiniteSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rel: Vec<String> = self
            .strict_pairs()
            .into_iter()
            .map(|(x, y)| format!("{}<{}", self.names[x], self.names[y]))
            .collect();
        write!(f, "FiniteSpace({:?}; {})", self.names, rel.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lim() -> Limits {
        Limits::default()
    }

    fn set(x: &FiniteSpace, names: &[&str]) -> PointSet {
        x.set_of(names).unwrap()
    }

    #[test]
    fn pseudocircle_minimal_opens() {
        let c4 = FiniteSpace::pseudocircle();
        assert_eq!(c4.len(), 4);
        let mins: Vec<_> = (0..4).map(|x| c4.names_of(c4.down(x))).collect();
        assert_eq!(mins, vec![vec!["a"], vec!["b"], vec!["a", "b", "c"], vec!["a", "b", "d"]]);
    }

    #[test]
    fn rejects_cycles_duplicates_unknowns() {
        assert!(matches!(FiniteSpace::build(&["a", "b"], &[("a", "b"), ("b", "a")]), Err(Error::NotT0(..))));
        assert!(matches!(
            FiniteSpace::build(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("c", "a")]),
            Err(Error::NotT0(..))
        ));
        assert!(matches!(FiniteSpace::build(&["a", "a"], &[]), Err(Error::DuplicatePoint(_))));
        assert!(matches!(FiniteSpace::build(&["a"], &[("a", "z")]), Err(Error::UnknownPoint(_))));
        let names: Vec<String> = (0..65).map(|i| i.to_string()).collect();
        assert!(matches!(FiniteSpace::build(&names, &[]), Err(Error::TooManyPoints(65))));
    }

    #[test]
    fn transitive_closure() {
        let x = FiniteSpace::build(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        assert!(x.leq(0, 2));
        assert_eq!(x.strict_pairs(), vec![(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn open_family_counts() {
        assert_eq!(FiniteSpace::point().open_family(&lim()).unwrap().len(), 2);
        let s = FiniteSpace::sierpinski();
        let opens = s.open_family(&lim()).unwrap();
        assert_eq!(opens.iter().map(|o| s.names_of(o.points())).collect::<Vec<_>>(), vec![
            Vec::<String>::new(),
            vec!["s".to_string()],
            vec!["s".to_string(), "t".to_string()]
        ]);
        assert_eq!(FiniteSpace::discrete(3).open_family(&lim()).unwrap().len(), 8);
        // Down-closed subsets of C4 counted by the brute-force oracle: 7.
        assert_eq!(FiniteSpace::pseudocircle().open_family(&lim()).unwrap().len(), 7);
    }

    #[test]
    fn open_family_guard() {
        let limits = Limits { max_opens: 100, ..Limits::default() };
        assert!(matches!(FiniteSpace::discrete(7).open_family(&limits), Err(Error::SizeGuard { .. })));
    }

    #[test]
    fn products() {
        let c4 = FiniteSpace::pseudocircle();
        assert!(FiniteSpace::point().product(&c4).unwrap().is_isomorphic(&c4));
        assert!(FiniteSpace::discrete(2).product(&FiniteSpace::discrete(2)).unwrap().is_isomorphic(&FiniteSpace::discrete(4)));
        let c4c4 = c4.product(&c4).unwrap();
        assert_eq!(c4c4.len(), 16);
        assert!(c4c4.leq(c4c4.index_of("(a,b)").unwrap(), c4c4.index_of("(c,d)").unwrap()));
        assert!(!c4c4.leq(c4c4.index_of("(c,b)").unwrap(), c4c4.index_of("(a,d)").unwrap()));
        let big = FiniteSpace::discrete(9);
        assert!(matches!(big.product(&big), Err(Error::TooManyPoints(81))));
    }

    #[test]
    fn subspaces() {
        let c4 = FiniteSpace::pseudocircle();
        let abc = c4.subspace_named(&["a", "b", "c"]).unwrap();
        assert_eq!(abc.strict_pairs(), vec![(0, 2), (1, 2)]);
        assert_eq!(c4.subspace(c4.all_points()).0, c4);
        assert!(c4.subspace_named(&["c", "d"]).unwrap().is_isomorphic(&FiniteSpace::discrete(2)));
        assert!(matches!(c4.subspace_named(&["q"]), Err(Error::UnknownPoint(_))));
    }

    #[test]
    fn normality() {
        for n in 0..5 {
            assert!(FiniteSpace::discrete(n).is_normal());
        }
        assert!(FiniteSpace::point().is_normal());
        let c4 = FiniteSpace::pseudocircle();
        let (normal, witness) = c4.normality();
        assert!(!normal);
        assert_eq!(witness, Some((set(&c4, &["c"]), set(&c4, &["d"]))));
        let report = c4.report(&lim()).unwrap();
        assert!(report.normality_witness.is_some() && !report.normal);
    }

    #[test]
    fn components() {
        assert_eq!(FiniteSpace::discrete(3).component_sets().len(), 3);
        assert_eq!(FiniteSpace::sierpinski().component_sets().len(), 1);
        assert_eq!(FiniteSpace::pseudocircle().component_sets().len(), 1);
        let x = FiniteSpace::build(&["a", "b", "c", "d"], &[("a", "b"), ("c", "d")]).unwrap();
        assert_eq!(x.connected_components(), vec![vec!["a", "b"], vec!["c", "d"]]);
    }

    #[test]
    fn cores() {
        assert!(FiniteSpace::chain(4).is_contractible());
        assert!(FiniteSpace::point().is_contractible());
        assert!(!FiniteSpace::discrete(2).is_contractible());
        let c4 = FiniteSpace::pseudocircle();
        assert_eq!(c4.core_retraction().core, c4.all_points());
        // Cone on C4 is contractible.
        let cone = FiniteSpace::build(
            &["a", "b", "c", "d", "t"],
            &[("a", "c"), ("b", "c"), ("a", "d"), ("b", "d"), ("c", "t"), ("d", "t")],
        )
        .unwrap();
        assert!(cone.is_contractible());
        // Retraction is order preserving and fixes the core.
        let r = cone.core_retraction();
        for x in 0..cone.len() {
            for y in 0..cone.len() {
                if cone.leq(x, y) {
                    assert!(cone.leq(r.retraction[x], r.retraction[y]));
                }
            }
        }
        for x in r.core.iter() {
            assert_eq!(r.retraction[x], x);
        }
    }
}
