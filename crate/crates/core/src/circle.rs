//! Degree classes of circle self-maps.
//!
//! `Map(S¹, S¹)` is modelled on its quotient by homotopy: classes are indexed
//! by degree, any two distinct classes are at distance 1 (they are not
//! homotopic, and every distance is bounded by `cat(S¹) = 1`), and the induced
//! topology on classes is discrete. Infinite families of classes are handled
//! symbolically through [`SymbolicSet`]. Piecewise-linear representatives
//! ([`PlCircleMap`]) feed the degree classification.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::extended::ExtendedNat;
use crate::topology::Radius;

/// LS-category of the circle. Bounds every distance in `Map(S¹, S¹)`.
pub const CAT_CIRCLE: u64 = 1;

/// A homotopy class of circle self-maps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct DegreeClass(pub i64);

/// A circle self-map given by vertex images: domain vertex `i` of a cycle of
/// `images.len()` vertices goes to vertex `images[i]` of a cycle of
/// `subdivision` vertices. Consecutive images (cyclically) are equal or adjacent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlCircleMap {
    subdivision: usize,
    images: Vec<usize>,
}

impl PlCircleMap {
    pub fn new(subdivision: usize, images: Vec<i64>) -> Result<Self> {
        if subdivision < 3 {
            return Err(Error::InvalidCircleMap(format!("subdivision {subdivision} < 3")));
        }
        if images.is_empty() {
            return Err(Error::InvalidCircleMap("no vertices".into()));
        }
        let n = subdivision as i64;
        let images: Vec<usize> = images.iter().map(|&v| v.rem_euclid(n) as usize).collect();
        let map = PlCircleMap { subdivision, images };
        for i in 0..map.images.len() {
            if map.step(i).is_none() {
                let j = (i + 1) % map.images.len();
                return Err(Error::InvalidCircleMap(format!(
                    "vertices {i} and {j} map to non-adjacent positions {} and {}",
                    map.images[i], map.images[j]
                )));
            }
        }
        Ok(map)
    }

    /// Winds `degree` times around a cycle of `subdivision` vertices, using
    /// `subdivision · max(|degree|, 1)` domain vertices.
    pub fn standard(subdivision: usize, degree: i64) -> Result<Self> {
        let steps = subdivision as i64 * degree.abs().max(1);
        let images = (0..steps).map(|i| if degree == 0 { 0 } else { i * degree.signum() }).collect();
        Self::new(subdivision, images)
    }

    pub fn subdivision(&self) -> usize {
        self.subdivision
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Signed step from vertex `i` to `i + 1`: −1, 0 or +1, or `None` if not adjacent.
    fn step(&self, i: usize) -> Option<i64> {
        let n = self.subdivision as i64;
        let a = self.images[i] as i64;
        let b = self.images[(i + 1) % self.images.len()] as i64;
        match (b - a).rem_euclid(n) {
            0 => Some(0),
            1 => Some(1),
            d if d == n - 1 => Some(-1),
            _ => None,
        }
    }

    /// Signed winding number of the traversal.
    pub fn degree(&self) -> i64 {
        let total: i64 = (0..self.images.len()).map(|i| self.step(i).expect("validated")).sum();
        total / self.subdivision as i64
    }

    /// `self ∘ inner`; needs `inner`'s target cycle to be `self`'s domain cycle.
    pub fn after(&self, inner: &PlCircleMap) -> Result<PlCircleMap> {
        if inner.subdivision != self.images.len() {
            return Err(Error::InvalidCircleMap(format!(
                "cannot compose: target has {} vertices, domain has {}",
                inner.subdivision,
                self.images.len()
            )));
        }
        let images = inner.images.iter().map(|&v| self.images[v] as i64).collect();
        PlCircleMap::new(self.subdivision, images)
    }
}

pub fn degree(map: &PlCircleMap) -> DegreeClass {
    DegreeClass(map.degree())
}

/// Distance between the classes of degree `n` and `m`.
pub fn circle_distance(n: i64, m: i64) -> ExtendedNat {
    if n == m {
        ExtendedNat::ZERO
    } else {
        // Non-homotopic, so at least 1; at most cat(S¹).
        ExtendedNat::Finite(CAT_CIRCLE)
    }
}

/// Finite descriptions of the infinite sets of classes that appear as balls.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(tag = "kind", content = "degree", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SymbolicSet {
    /// The single class of the given degree.
    Singleton(i64),
    /// Every class.
    All,
    /// The class of constant maps, written as the ball `B_{1/2}(c)`.
    ConstantsClass,
}

impl SymbolicSet {
    pub fn contains(self, degree: i64) -> bool {
        match self {
            SymbolicSet::Singleton(n) => n == degree,
            SymbolicSet::All => true,
            SymbolicSet::ConstantsClass => degree == 0,
        }
    }
}

impl fmt::Display for SymbolicSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymbolicSet::Singleton(n) => write!(f, "SINGLETON({n})"),
            SymbolicSet::All => f.write_str("ALL"),
            SymbolicSet::ConstantsClass => f.write_str("B_1/2(c)"),
        }
    }
}

/// Note attached to balls around the constant class: at the level of maps
/// the ball holds every null-homotopic map, not only the constant ones.
pub const CONSTANTS_NOTE: &str =
    "class-level ball: contains every null-homotopic map; read at the level of maps this is more than the constant maps";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CircleBall {
    pub center: i64,
    pub radius: Radius,
    pub set: SymbolicSet,
    pub note: Option<&'static str>,
}

/// `B_r(f_n)` on the class quotient: the class itself for `r ≤ 1`, everything for `r > 1`.
pub fn circle_ball(center: i64, radius: Radius) -> CircleBall {
    let set = if radius.admits(ExtendedNat::Finite(CAT_CIRCLE)) {
        SymbolicSet::All
    } else {
        SymbolicSet::Singleton(center)
    };
    let note = (center == 0 && set != SymbolicSet::All).then_some(CONSTANTS_NOTE);
    CircleBall { center, radius, set, note }
}

/// The countable basis of the class topology.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountableBasis {
    /// Always `"SINGLETON(n) for every integer n"`.
    pub singletons: &'static str,
    /// The radius-½ ball around a constant map.
    pub constants_ball: SymbolicSet,
    pub constants_ball_radius: Radius,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompactnessReport {
    pub basis: CountableBasis,
    /// Every class is open on its own, so the topology on classes is discrete.
    pub discrete_on_classes: bool,
    pub second_countable: bool,
    pub subfamily: Vec<SymbolicSet>,
    pub covered_degrees: Vec<i64>,
    /// A degree outside every member of the subfamily.
    pub uncovered_witness: i64,
}

/// Checks a finite subfamily of the canonical cover
/// `{SINGLETON(n) : n ∈ ℤ} ∪ {B_{1/2}(c)}` and returns a degree it misses.
///
/// The witness is the least non-negative degree not covered.
pub fn basis_and_compactness(subfamily: &[SymbolicSet]) -> Result<CompactnessReport> {
    let mut covered = BTreeSet::new();
    for member in subfamily {
        match *member {
            SymbolicSet::Singleton(n) => {
                covered.insert(n);
            }
            SymbolicSet::ConstantsClass => {
                covered.insert(0);
            }
            SymbolicSet::All => return Err(Error::NotInCanonicalCover(member.to_string())),
        }
    }
    let uncovered_witness = (0..).find(|d| !covered.contains(d)).expect("finitely many degrees covered");
    Ok(CompactnessReport {
        basis: CountableBasis {
            singletons: "SINGLETON(n) for every integer n",
            constants_ball: SymbolicSet::ConstantsClass,
            constants_ball_radius: Radius::new(1, 2)?,
        },
        discrete_on_classes: true,
        second_countable: true,
        subfamily: subfamily.to_vec(),
        covered_degrees: covered.into_iter().collect(),
        uncovered_witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn degrees() {
        assert_eq!(PlCircleMap::new(4, vec![0, 1, 2, 3]).unwrap().degree(), 1);
        assert_eq!(PlCircleMap::new(4, vec![2, 2, 2]).unwrap().degree(), 0);
        assert_eq!(PlCircleMap::new(3, vec![0, 1, 2, 0, 1, 2]).unwrap().degree(), 2);
        assert_eq!(PlCircleMap::new(4, vec![3, 2, 1, 0]).unwrap().degree(), -1);
        // Back-and-forth without a full turn.
        assert_eq!(PlCircleMap::new(5, vec![0, 1, 2, 1]).unwrap().degree(), 0);
    }

    #[test]
    fn rejects_jumps() {
        assert!(matches!(PlCircleMap::new(4, vec![0, 2]), Err(Error::InvalidCircleMap(_))));
        assert!(matches!(PlCircleMap::new(2, vec![0, 1]), Err(Error::InvalidCircleMap(_))));
        assert!(matches!(PlCircleMap::new(4, vec![]), Err(Error::InvalidCircleMap(_))));
        // 0 → 3 wraps around and is adjacent.
        assert!(PlCircleMap::new(4, vec![0, 3]).is_ok());
    }

    #[test]
    fn distances_and_balls() {
        assert_eq!(circle_distance(3, 5), 1);
        assert_eq!(circle_distance(2, 2), 0);
        assert_eq!(circle_distance(7, 0), 1);
        let r = |s: &str| s.parse::<Radius>().unwrap();
        assert_eq!(circle_ball(7, r("1")).set, SymbolicSet::Singleton(7));
        assert_eq!(circle_ball(7, r("1.5")).set, SymbolicSet::All);
        let b = circle_ball(0, r("0.5"));
        assert_eq!(b.set, SymbolicSet::Singleton(0));
        assert_eq!(b.note, Some(CONSTANTS_NOTE));
        assert_eq!(circle_ball(0, r("2")).note, None);
    }

    #[test]
    fn witnesses() {
        use SymbolicSet::*;
        let w = |f: &[SymbolicSet]| basis_and_compactness(f).unwrap().uncovered_witness;
        assert_eq!(w(&[Singleton(1), Singleton(2), ConstantsClass]), 3);
        assert_eq!(w(&[]), 0);
        let k = 6;
        let fam: Vec<_> = (-k..=k).map(Singleton).collect();
        assert_eq!(w(&fam), k + 1);
        assert!(matches!(basis_and_compactness(&[All]), Err(Error::NotInCanonicalCover(_))));
    }

    fn pl_map() -> impl Strategy<Value = PlCircleMap> {
        (3usize..7, proptest::collection::vec(-1i64..=1, 1..30), 0i64..10).prop_map(|(n, steps, start)| {
            let mut v = start;
            let mut images = vec![v];
            for s in &steps {
                v += s;
                images.push(v);
            }
            // Close the loop by walking back to a vertex adjacent to the start.
            let end = (images[0] - v).rem_euclid(n as i64);
            let back = if end <= n as i64 / 2 { end } else { end - n as i64 };
            for _ in 0..back.abs().saturating_sub(1) {
                v += back.signum();
                images.push(v);
            }
            PlCircleMap::new(n, images).unwrap()
        })
    }

    proptest! {
        #[test]
        fn degree_is_multiplicative(f in pl_map(), g in pl_map()) {
            // Re-embed g so its target cycle is f's domain cycle.
            let target = f.images().len();
            prop_assume!(target >= 3);
            let g = PlCircleMap::standard(target, g.degree()).unwrap();
            let fg = f.after(&g).unwrap();
            prop_assert_eq!(fg.degree(), f.degree() * g.degree());
        }

        #[test]
        fn metric_axioms(a in -50i64..50, b in -50i64..50, c in -50i64..50) {
            prop_assert_eq!(circle_distance(a, a), 0);
            prop_assert_eq!(circle_distance(a, b), circle_distance(b, a));
            prop_assert!(circle_distance(a, c) <= circle_distance(a, b) + circle_distance(b, c));
            prop_assert_eq!(circle_distance(a, b) == 0, a == b);
        }

        #[test]
        fn standard_maps_have_their_degree(n in 3usize..8, d in -6i64..6) {
            prop_assert_eq!(PlCircleMap::standard(n, d).unwrap().degree(), d);
        }
    }
}
