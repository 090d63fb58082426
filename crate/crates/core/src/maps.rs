//! Continuous maps between finite spaces.
//!
//! For finite spaces continuity is exactly order preservation, so a map is a
//! point assignment `f` with `x ≤ x' ⇒ f(x) ≤ f(x')`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::limits::{Limits, MAX_MAPS_ENV};
use crate::pointset::PointSet;
use crate::space::FiniteSpace;

#[derive(Clone, PartialEq, Eq)]
pub struct ContinuousMap {
    domain: Arc<FiniteSpace>,
    codomain: Arc<FiniteSpace>,
    images: Vec<usize>,
}

impl ContinuousMap {
    pub fn new(domain: Arc<FiniteSpace>, codomain: Arc<FiniteSpace>, images: Vec<usize>) -> Result<Self> {
        if images.len() != domain.len() {
            let missing = domain.names().get(images.len()).cloned().unwrap_or_default();
            return Err(Error::MissingImage(missing));
        }
        if let Some(&bad) = images.iter().find(|&&y| y >= codomain.len()) {
            return Err(Error::UnknownPoint(format!("codomain index {bad}")));
        }
        if let Some((x, y)) = first_discontinuity(&domain, &codomain, &images) {
            return Err(Error::NotContinuous(domain.name(x).to_string(), domain.name(y).to_string()));
        }
        Ok(ContinuousMap { domain, codomain, images })
    }

    /// Builds a map from `(domain point, codomain point)` name pairs covering every domain point.
    pub fn from_names<S: AsRef<str>>(
        domain: Arc<FiniteSpace>,
        codomain: Arc<FiniteSpace>,
        assignment: &[(S, S)],
    ) -> Result<Self> {
        let mut images = vec![None; domain.len()];
        for (x, y) in assignment {
            images[domain.index_of(x.as_ref())?] = Some(codomain.index_of(y.as_ref())?);
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(x, y)| y.ok_or_else(|| Error::MissingImage(domain.name(x).to_string())))
            .collect::<Result<Vec<_>>>()?;
        Self::new(domain, codomain, images)
    }

    pub(crate) fn new_unchecked(domain: Arc<FiniteSpace>, codomain: Arc<FiniteSpace>, images: Vec<usize>) -> Self {
        debug_assert!(first_discontinuity(&domain, &codomain, &images).is_none());
        ContinuousMap { domain, codomain, images }
    }

    pub fn identity(space: Arc<FiniteSpace>) -> Self {
        let images = (0..space.len()).collect();
        ContinuousMap { domain: space.clone(), codomain: space, images }
    }

    pub fn constant(domain: Arc<FiniteSpace>, codomain: Arc<FiniteSpace>, target: usize) -> Self {
        assert!(target < codomain.len());
        let images = vec![target; domain.len()];
        ContinuousMap { domain, codomain, images }
    }

    /// Projection of `product` = `left × right` onto the first factor.
    pub fn first_projection(product: Arc<FiniteSpace>, left: Arc<FiniteSpace>, right_len: usize) -> Self {
        let images = (0..product.len()).map(|p| p / right_len).collect();
        ContinuousMap::new_unchecked(product, left, images)
    }

    /// Projection of `product` = `left × right` onto the second factor.
    pub fn second_projection(product: Arc<FiniteSpace>, right: Arc<FiniteSpace>) -> Self {
        let n = right.len();
        let images = (0..product.len()).map(|p| p % n).collect();
        ContinuousMap::new_unchecked(product, right, images)
    }

    /// `x ↦ (x, x₀)` into `square` = `X × X`.
    pub fn first_inclusion(space: Arc<FiniteSpace>, square: Arc<FiniteSpace>, basepoint: usize) -> Self {
        let n = space.len();
        let images = (0..n).map(|x| x * n + basepoint).collect();
        ContinuousMap::new_unchecked(space, square, images)
    }

    /// `x ↦ (x₀, x)` into `square` = `X × X`.
    pub fn second_inclusion(space: Arc<FiniteSpace>, square: Arc<FiniteSpace>, basepoint: usize) -> Self {
        let n = space.len();
        let images = (0..n).map(|x| basepoint * n + x).collect();
        ContinuousMap::new_unchecked(space, square, images)
    }

    pub fn domain(&self) -> &Arc<FiniteSpace> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<FiniteSpace> {
        &self.codomain
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn image(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn same_spaces(&self, other: &ContinuousMap) -> bool {
        (Arc::ptr_eq(&self.domain, &other.domain) || self.domain == other.domain)
            && (Arc::ptr_eq(&self.codomain, &other.codomain) || self.codomain == other.codomain)
    }

    /// `self ∘ inner`.
    pub fn after(&self, inner: &ContinuousMap) -> Result<ContinuousMap> {
        if *inner.codomain != *self.domain {
            return Err(Error::SpaceMismatch);
        }
        let images = inner.images.iter().map(|&y| self.images[y]).collect();
        Ok(ContinuousMap::new_unchecked(inner.domain.clone(), self.codomain.clone(), images))
    }

    /// Restriction to the subspace on `points`.
    pub fn restrict(&self, points: PointSet) -> ContinuousMap {
        let (sub, idx) = self.domain.subspace(points);
        let images = idx.iter().map(|&x| self.images[x]).collect();
        ContinuousMap::new_unchecked(Arc::new(sub), self.codomain.clone(), images)
    }

    /// `self ≤ other` pointwise.
    pub fn pointwise_le(&self, other: &ContinuousMap) -> bool {
        self.images.iter().zip(&other.images).all(|(&a, &b)| self.codomain.leq(a, b))
    }

    pub fn is_constant(&self) -> bool {
        self.images.windows(2).all(|w| w[0] == w[1])
    }

    pub fn assignment(&self) -> Vec<(String, String)> {
        self.images
            .iter()
            .enumerate()
            .map(|(x, &y)| (self.domain.name(x).to_string(), self.codomain.name(y).to_string()))
            .collect()
    }
}

impl fmt::Debug for ContinuousMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.assignment().into_iter().map(|(x, y)| format!("{x}↦{y}")).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

fn first_discontinuity(domain: &FiniteSpace, codomain: &FiniteSpace, images: &[usize]) -> Option<(usize, usize)> {
    domain
        .strict_pairs()
        .into_iter()
        .find(|&(x, y)| !codomain.leq(images[x], images[y]))
}

/// All order-preserving assignments, sorted lexicographically by image vector.
pub(crate) fn enumerate_assignments(domain: &FiniteSpace, codomain: &FiniteSpace, limits: &Limits) -> Result<Vec<Vec<usize>>> {
    let order = domain.linear_extension();
    let n = domain.len();
    let mut out = Vec::new();
    let mut current = vec![usize::MAX; n];
    fn go(
        depth: usize,
        order: &[usize],
        domain: &FiniteSpace,
        codomain: &FiniteSpace,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        limits: &Limits,
    ) -> Result<()> {
        if depth == order.len() {
            if out.len() >= limits.max_maps {
                return Err(Error::SizeGuard {
                    what: format!("Map of a {}-point space into a {}-point space", domain.len(), codomain.len()),
                    limit: limits.max_maps,
                    knob: MAX_MAPS_ENV,
                });
            }
            out.push(current.clone());
            return Ok(());
        }
        let x = order[depth];
        let below = domain.down(x).without(x);
        for y in 0..codomain.len() {
            if below.iter().all(|b| codomain.leq(current[b], y)) {
                current[x] = y;
                go(depth + 1, order, domain, codomain, current, out, limits)?;
            }
        }
        current[x] = usize::MAX;
        Ok(())
    }
    go(0, &order, domain, codomain, &mut current, &mut out, limits)?;
    out.sort_unstable();
    Ok(out)
}

/// Every continuous map `domain → codomain`, in lexicographic order of image vectors.
pub fn continuous_maps(domain: &Arc<FiniteSpace>, codomain: &Arc<FiniteSpace>, limits: &Limits) -> Result<Vec<ContinuousMap>> {
    Ok(enumerate_assignments(domain, codomain, limits)?
        .into_iter()
        .map(|images| ContinuousMap::new_unchecked(domain.clone(), codomain.clone(), images))
        .collect())
}
