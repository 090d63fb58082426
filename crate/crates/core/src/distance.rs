//! Homotopic distance by exact minimum open-cover search, and the invariants
//! derived from it.
//!
//! An open `U` is *good* for `(f, g)` when `f|U ≃ g|U`. Goodness is inherited
//! by open subsets, so only the maximal good opens matter for covering. The
//! distance is one less than the size of a minimum cover of the domain by
//! good opens, or ∞ when the good opens do not cover it.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use crate::cover::minimum_cover;
use crate::error::{Error, Result};
use crate::extended::ExtendedNat;
use crate::homotopy::{homotopic_images, homotopy_classes, ClassLabeler};
use crate::limits::Limits;
use crate::maps::{continuous_maps, ContinuousMap};
use crate::pointset::PointSet;
use crate::space::{FiniteSpace, OpenSet};

/// The maximal opens on which two maps are homotopic, in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodOpenFamily {
    pub maximal: Vec<OpenSet>,
}

impl GoodOpenFamily {
    /// Whether `u` is good, i.e. contained in some maximal good open.
    pub fn contains(&self, u: PointSet) -> bool {
        self.maximal.iter().any(|m| u.is_subset(m.points()))
    }

    pub fn union(&self) -> PointSet {
        self.maximal.iter().fold(PointSet::EMPTY, |acc, m| acc.union(m.points()))
    }
}

/// A minimum cover by good opens; `D = opens.len() - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverCertificate {
    pub opens: Vec<OpenSet>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Distance {
    pub value: ExtendedNat,
    pub certificate: Option<CoverCertificate>,
}

impl Distance {
    pub fn certificate_names(&self, space: &FiniteSpace) -> Option<Vec<Vec<String>>> {
        self.certificate
            .as_ref()
            .map(|c| c.opens.iter().map(|o| space.names_of(o.points())).collect())
    }
}

/// Keeps the maximal members of a down-closed family given by `good`.
///
/// Opens are visited largest first; an open inside an already accepted one
/// is good without testing and never maximal.
pub fn maximal_good_opens(opens: &[OpenSet], mut good: impl FnMut(PointSet) -> Result<bool>) -> Result<Vec<OpenSet>> {
    let mut by_size: Vec<OpenSet> = opens.to_vec();
    by_size.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    let mut maximal: Vec<OpenSet> = Vec::new();
    for u in by_size {
        if maximal.iter().any(|m| u.points().is_subset(m.points())) {
            continue;
        }
        if good(u.points())? {
            maximal.push(u);
        }
    }
    maximal.sort_unstable();
    Ok(maximal)
}

/// Minimum cover of `space` by the given maximal good opens.
pub fn distance_from_maximal(space: &FiniteSpace, maximal: &[OpenSet]) -> Distance {
    let universe = space.all_points();
    let family: Vec<PointSet> = maximal.iter().map(|o| o.points()).collect();
    match minimum_cover(universe, &family) {
        None => Distance { value: ExtendedNat::Infinite, certificate: None },
        Some(idx) if idx.is_empty() => Distance {
            value: ExtendedNat::ZERO,
            certificate: Some(CoverCertificate { opens: vec![space.whole()] }),
        },
        Some(idx) => Distance {
            value: ExtendedNat::Finite(idx.len() as u64 - 1),
            certificate: Some(CoverCertificate { opens: idx.into_iter().map(|i| maximal[i]).collect() }),
        },
    }
}

fn check_pair(f: &ContinuousMap, g: &ContinuousMap) -> Result<()> {
    if f.same_spaces(g) {
        Ok(())
    } else {
        Err(Error::SpaceMismatch)
    }
}

/// `f|U ≃ g|U`.
pub fn is_good(f: &ContinuousMap, g: &ContinuousMap, u: PointSet, limits: &Limits) -> Result<bool> {
    let (sub, idx) = f.domain().subspace(u);
    let fu: Vec<usize> = idx.iter().map(|&x| f.image(x)).collect();
    let gu: Vec<usize> = idx.iter().map(|&x| g.image(x)).collect();
    homotopic_images(&sub, f.codomain(), &fu, &gu, limits)
}

pub fn good_open_family(f: &ContinuousMap, g: &ContinuousMap, limits: &Limits) -> Result<GoodOpenFamily> {
    check_pair(f, g)?;
    let opens = f.domain().open_family(limits)?;
    let maximal = maximal_good_opens(&opens, |u| is_good(f, g, u, limits))?;
    Ok(GoodOpenFamily { maximal })
}

/// `D(f, g)` with a minimum cover certificate (none when the value is ∞).
pub fn homotopic_distance(f: &ContinuousMap, g: &ContinuousMap, limits: &Limits) -> Result<Distance> {
    let family = good_open_family(f, g, limits)?;
    Ok(distance_from_maximal(f.domain(), &family.maximal))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CatMethod {
    /// Least cover by opens whose inclusion is homotopic to some constant.
    Cover,
    /// `D(Id, const_{x₀})`.
    Dist,
    /// `D(i₁, i₂)` with `i₁(x) = (x, x₀)` and `i₂(x) = (x₀, x)`.
    Incl,
}

impl std::str::FromStr for CatMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cover" => Ok(CatMethod::Cover),
            "dist" => Ok(CatMethod::Dist),
            "incl" => Ok(CatMethod::Incl),
            other => Err(Error::Parse(other.to_string(), "expected cover, dist or incl".into())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatResult {
    pub method: CatMethod,
    pub distance: Distance,
    pub warning: Option<String>,
}

/// Opens of `space` whose inclusion is null-homotopic.
pub fn null_homotopic_opens(space: &Arc<FiniteSpace>, limits: &Limits) -> Result<Vec<OpenSet>> {
    let opens = space.open_family(limits)?;
    let targets: Vec<usize> = space.component_sets().iter().filter_map(|c| c.first()).collect();
    maximal_good_opens(&opens, |u| {
        let (sub, idx) = space.subspace(u);
        for &t in &targets {
            if homotopic_images(&sub, space, &idx, &vec![t; idx.len()], limits)? {
                return Ok(true);
            }
        }
        Ok(u.is_empty())
    })
}

pub fn cat(space: &Arc<FiniteSpace>, method: CatMethod, basepoint: Option<usize>, limits: &Limits) -> Result<CatResult> {
    let warning = match method {
        CatMethod::Cover => None,
        _ if space.is_connected() => None,
        _ => Some(format!(
            "space has {} components; D(Id, c) and D(i1, i2) agree with cat only for path-connected spaces",
            space.component_sets().len()
        )),
    };
    let distance = match method {
        CatMethod::Cover => distance_from_maximal(space, &null_homotopic_opens(space, limits)?),
        CatMethod::Dist => {
            let x0 = basepoint.ok_or(Error::MissingBasepoint("dist"))?;
            let id = ContinuousMap::identity(space.clone());
            let c = ContinuousMap::constant(space.clone(), space.clone(), x0);
            homotopic_distance(&id, &c, limits)?
        }
        CatMethod::Incl => {
            let x0 = basepoint.ok_or(Error::MissingBasepoint("incl"))?;
            let square = Arc::new(space.product(space)?);
            let i1 = ContinuousMap::first_inclusion(space.clone(), square.clone(), x0);
            let i2 = ContinuousMap::second_inclusion(space.clone(), square, x0);
            homotopic_distance(&i1, &i2, limits)?
        }
    };
    Ok(CatResult { method, distance, warning })
}

/// The projections `pr₁, pr₂ : X × X → X`.
pub fn projections(space: &Arc<FiniteSpace>) -> Result<(ContinuousMap, ContinuousMap)> {
    let square = Arc::new(space.product(space)?);
    Ok((
        ContinuousMap::first_projection(square.clone(), space.clone(), space.len()),
        ContinuousMap::second_projection(square, space.clone()),
    ))
}

/// Topological complexity as `D(pr₁, pr₂)` on `X × X`.
pub fn tc(space: &Arc<FiniteSpace>, limits: &Limits) -> Result<Distance> {
    let (p1, p2) = projections(space)?;
    homotopic_distance(&p1, &p2, limits).map_err(|e| match e {
        Error::SizeGuard { what, limit, knob } => Error::SizeGuard {
            what: format!("good-open homotopy checks on the {}-point product X×X ({what})", p1.domain().len()),
            limit,
            knob,
        },
        other => other,
    })
}

/// Pairwise distances on an enumerated map space.
#[derive(Clone, Debug)]
pub struct DistanceMatrix {
    pub maps: Vec<ContinuousMap>,
    pub entries: Vec<Vec<ExtendedNat>>,
}

impl DistanceMatrix {
    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    pub fn get(&self, i: usize, j: usize) -> ExtendedNat {
        self.entries[i][j]
    }
}

/// All pairwise distances on `Map(X, Y)`.
///
/// Every open `U` gets one class labelling of the restricted maps, so a pair
/// is good on `U` iff its labels agree; pairs with the same good set share
/// one cover search.
pub fn distance_matrix(domain: &Arc<FiniteSpace>, codomain: &Arc<FiniteSpace>, limits: &Limits) -> Result<DistanceMatrix> {
    let maps = continuous_maps(domain, codomain, limits)?;
    distance_matrix_of(maps, limits)
}

pub fn distance_matrix_of(maps: Vec<ContinuousMap>, limits: &Limits) -> Result<DistanceMatrix> {
    let n = maps.len();
    let Some(first) = maps.first() else {
        return Ok(DistanceMatrix { maps, entries: Vec::new() });
    };
    if maps.iter().any(|m| !m.same_spaces(first)) {
        return Err(Error::SpaceMismatch);
    }
    let domain = first.domain().clone();
    let codomain = first.codomain().clone();
    let opens: Vec<OpenSet> = domain.open_family(limits)?.into_iter().filter(|o| !o.is_empty()).collect();
    let mut labels = Vec::with_capacity(opens.len());
    for u in &opens {
        let (sub, idx) = domain.subspace(u.points());
        let mut labeler = ClassLabeler::new(&sub, &codomain);
        let row = maps
            .iter()
            .map(|m| {
                let images: Vec<usize> = idx.iter().map(|&x| m.image(x)).collect();
                labeler.label(&images, limits)
            })
            .collect::<Result<Vec<_>>>()?;
        labels.push(row);
    }
    let mut memo: HashMap<Vec<bool>, ExtendedNat> = HashMap::new();
    let mut entries = vec![vec![ExtendedNat::ZERO; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let good: Vec<bool> = labels.iter().map(|row| row[i] == row[j]).collect();
            let value = *memo.entry(good).or_insert_with_key(|good| {
                let good_opens: Vec<OpenSet> = opens.iter().zip(good).filter(|(_, &g)| g).map(|(o, _)| *o).collect();
                let maximal: Vec<OpenSet> = good_opens
                    .iter()
                    .filter(|u| !good_opens.iter().any(|v| v != *u && u.points().is_subset(v.points())))
                    .copied()
                    .collect();
                distance_from_maximal(&domain, &maximal).value
            });
            entries[i][j] = value;
            entries[j][i] = value;
        }
    }
    Ok(DistanceMatrix { maps, entries })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    /// Map indices reproducing a failure.
    pub witness: Option<Vec<usize>>,
}

impl Verdict {
    fn from_witness(witness: Option<Vec<usize>>) -> Self {
        Verdict { holds: witness.is_none(), witness }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TriangleVerdict {
    pub holds: bool,
    pub witness: Option<Vec<usize>>,
    pub domain_normal: bool,
    /// The triangle inequality is only guaranteed for normal domains; for
    /// other domains the verdict is recorded but not asserted.
    pub asserted: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomReport {
    pub maps: Vec<String>,
    pub matrix: Vec<Vec<ExtendedNat>>,
    /// `D(f, f) = 0`.
    pub zero_diagonal: Verdict,
    /// `D(f, g) = D(g, f)`.
    pub symmetric: Verdict,
    /// `D(f, g) = 0` iff `f ≃ g`.
    pub zero_iff_homotopic: Verdict,
    pub triangle: TriangleVerdict,
}

impl AxiomReport {
    /// True unless an asserted axiom fails.
    pub fn passed(&self) -> bool {
        self.zero_diagonal.holds
            && self.symmetric.holds
            && self.zero_iff_homotopic.holds
            && (self.triangle.holds || !self.triangle.asserted)
    }
}

pub fn axiom_report(domain: &Arc<FiniteSpace>, codomain: &Arc<FiniteSpace>, limits: &Limits) -> Result<AxiomReport> {
    let matrix = distance_matrix(domain, codomain, limits)?;
    let classes = homotopy_classes(domain, codomain, limits)?;
    Ok(axiom_report_of(&matrix, &classes.class_of, domain.is_normal()))
}

/// Axiom verdicts for a computed matrix; `class_of` gives each map's homotopy class.
pub fn axiom_report_of(matrix: &DistanceMatrix, class_of: &[usize], domain_normal: bool) -> AxiomReport {
    let n = matrix.len();
    let d = &matrix.entries;
    let zero_diagonal = Verdict::from_witness((0..n).find(|&i| d[i][i] != 0).map(|i| vec![i]));
    let symmetric = Verdict::from_witness(
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .find(|&(i, j)| d[i][j] != d[j][i])
            .map(|(i, j)| vec![i, j]),
    );
    let zero_iff_homotopic = Verdict::from_witness(
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .find(|&(i, j)| (d[i][j] == 0) != (class_of[i] == class_of[j]))
            .map(|(i, j)| vec![i, j]),
    );
    let mut violation = None;
    'search: for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if d[i][k] > d[i][j] + d[j][k] {
                    violation = Some(vec![i, j, k]);
                    break 'search;
                }
            }
        }
    }
    AxiomReport {
        maps: matrix.maps.iter().map(|m| format!("{m:?}")).collect(),
        matrix: d.clone(),
        zero_diagonal,
        symmetric,
        zero_iff_homotopic,
        triangle: TriangleVerdict {
            holds: violation.is_none(),
            witness: violation,
            domain_normal,
            asserted: domain_normal,
        },
    }
}
