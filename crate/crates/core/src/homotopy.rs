//! Deciding homotopy between maps of finite spaces.
//!
//! Two maps are homotopic iff they are joined by a fence of pointwise
//! comparable maps. A fence step `f ≤ g` can always be refined into steps
//! that change the image of a single point to a comparable value, so the
//! search below only ever moves one point at a time.
//!
//! Before searching, the domain is replaced by its core (beat points
//! removed) and split into components, and the codomain is collapsed onto
//! its core through the beat-point retraction. Both reductions preserve and
//! reflect homotopy, and they shrink the state space by orders of magnitude
//! on product spaces.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::limits::{Limits, MAX_MAPS_ENV};
use crate::maps::{continuous_maps, ContinuousMap};
use crate::space::FiniteSpace;

type State = Vec<u8>;

/// Search problem after core reduction: one sub-problem per domain component.
struct Reduction {
    components: Vec<(FiniteSpace, Vec<usize>)>,
    codomain: FiniteSpace,
    /// Original codomain point ↦ index of its retraction in `codomain`.
    project: Vec<usize>,
}

impl Reduction {
    fn new(domain: &FiniteSpace, codomain: &FiniteSpace) -> Self {
        let dom_core = domain.core_retraction().core;
        let components = domain
            .components_within(dom_core)
            .into_iter()
            .map(|c| domain.subspace(c))
            .collect();
        let cod_core = codomain.core_retraction();
        let (core_space, idx) = codomain.subspace(cod_core.core);
        let mut position = vec![usize::MAX; codomain.len()];
        for (i, &y) in idx.iter().enumerate() {
            position[y] = i;
        }
        let project = cod_core.retraction.iter().map(|&y| position[y]).collect();
        Reduction { components, codomain: core_space, project }
    }

    fn reduce(&self, images: &[usize]) -> Vec<State> {
        self.components
            .iter()
            .map(|(_, idx)| idx.iter().map(|&x| self.project[images[x]] as u8).collect())
            .collect()
    }
}

/// Maps reachable from `state` by one single-point move to a comparable value.
fn neighbors<'a>(domain: &'a FiniteSpace, codomain: &'a FiniteSpace, state: &'a State) -> impl Iterator<Item = State> + 'a {
    (0..domain.len()).flat_map(move |x| {
        let current = state[x] as usize;
        let below = domain.down(x).without(x);
        let above = domain.up(x).without(x);
        (0..codomain.len())
            .filter(move |&y| {
                y != current
                    && codomain.comparable(y, current)
                    && below.iter().all(|b| codomain.leq(state[b] as usize, y))
                    && above.iter().all(|a| codomain.leq(y, state[a] as usize))
            })
            .map(move |y| {
                let mut next = state.clone();
                next[x] = y as u8;
                next
            })
    })
}

fn guard_error(domain: &FiniteSpace, codomain: &FiniteSpace, limits: &Limits) -> Error {
    Error::SizeGuard {
        what: format!(
            "homotopy search over maps from a {}-point space into a {}-point space",
            domain.len(),
            codomain.len()
        ),
        limit: limits.max_maps,
        knob: MAX_MAPS_ENV,
    }
}

/// Bidirectional breadth-first search between two states. Expands the side
/// with the smaller frontier, so disjoint components stop as soon as the
/// smaller one is exhausted.
fn connected(domain: &FiniteSpace, codomain: &FiniteSpace, a: State, b: State, limits: &Limits) -> Result<bool> {
    if a == b {
        return Ok(true);
    }
    let mut seen = [HashSet::from([a.clone()]), HashSet::from([b.clone()])];
    let mut frontier = [vec![a], vec![b]];
    loop {
        let side = if frontier[0].len() <= frontier[1].len() { 0 } else { 1 };
        if frontier[side].is_empty() {
            return Ok(false);
        }
        let mut next = Vec::new();
        for s in std::mem::take(&mut frontier[side]) {
            for t in neighbors(domain, codomain, &s) {
                if seen[1 - side].contains(&t) {
                    return Ok(true);
                }
                if seen[side].insert(t.clone()) {
                    next.push(t);
                }
            }
        }
        if seen[0].len() + seen[1].len() > limits.max_maps {
            return Err(guard_error(domain, codomain, limits));
        }
        frontier[side] = next;
    }
}

/// Homotopy test on raw image vectors over shared spaces.
pub(crate) fn homotopic_images(
    domain: &FiniteSpace,
    codomain: &FiniteSpace,
    f: &[usize],
    g: &[usize],
    limits: &Limits,
) -> Result<bool> {
    if f == g {
        return Ok(true);
    }
    let reduction = Reduction::new(domain, codomain);
    let (rf, rg) = (reduction.reduce(f), reduction.reduce(g));
    for (((space, _), a), b) in reduction.components.iter().zip(rf).zip(rg) {
        if !connected(space, &reduction.codomain, a, b, limits)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Decides `f ≃ g`.
pub fn are_homotopic(f: &ContinuousMap, g: &ContinuousMap, limits: &Limits) -> Result<bool> {
    if !f.same_spaces(g) {
        return Err(Error::SpaceMismatch);
    }
    homotopic_images(f.domain(), f.codomain(), f.images(), g.images(), limits)
}

/// Single-point-move search directly on `Map(X, Y)`, without core reduction.
pub fn are_homotopic_by_moves(f: &ContinuousMap, g: &ContinuousMap, limits: &Limits) -> Result<bool> {
    if !f.same_spaces(g) {
        return Err(Error::SpaceMismatch);
    }
    let to_state = |m: &ContinuousMap| m.images().iter().map(|&y| y as u8).collect();
    connected(f.domain(), f.codomain(), to_state(f), to_state(g), limits)
}

/// Assigns homotopy class labels to maps `domain → codomain`, flooding each
/// reduced component once and memoizing every state it reaches.
pub(crate) struct ClassLabeler {
    reduction: Reduction,
    memo: Vec<HashMap<State, usize>>,
    next_label: Vec<usize>,
    classes: HashMap<Vec<usize>, usize>,
}

impl ClassLabeler {
    pub(crate) fn new(domain: &FiniteSpace, codomain: &FiniteSpace) -> Self {
        let reduction = Reduction::new(domain, codomain);
        let memo = vec![HashMap::new(); reduction.components.len()];
        let next_label = vec![0; reduction.components.len()];
        ClassLabeler { reduction, memo, next_label, classes: HashMap::new() }
    }

    /// Label of the class of `images`; equal labels iff homotopic.
    pub(crate) fn label(&mut self, images: &[usize], limits: &Limits) -> Result<usize> {
        let states = self.reduction.reduce(images);
        let mut key = Vec::with_capacity(states.len());
        for (i, state) in states.into_iter().enumerate() {
            let (space, _) = &self.reduction.components[i];
            let memo = &mut self.memo[i];
            if let Some(&l) = memo.get(&state) {
                key.push(l);
                continue;
            }
            let label = self.next_label[i];
            self.next_label[i] += 1;
            memo.insert(state.clone(), label);
            let mut queue = vec![state];
            while let Some(s) = queue.pop() {
                for t in neighbors(space, &self.reduction.codomain, &s) {
                    if let std::collections::hash_map::Entry::Vacant(e) = memo.entry(t.clone()) {
                        e.insert(label);
                        queue.push(t);
                    }
                }
                if memo.len() > limits.max_maps {
                    return Err(guard_error(space, &self.reduction.codomain, limits));
                }
            }
            key.push(label);
        }
        let next = self.classes.len();
        Ok(*self.classes.entry(key).or_insert(next))
    }
}

/// `Map(X, Y)` partitioned into homotopy classes.
#[derive(Clone, Debug)]
pub struct HomotopyClasses {
    pub maps: Vec<ContinuousMap>,
    /// Index of the class representative (the least index in the class) for every map.
    pub class_of: Vec<usize>,
    /// Blocks of map indices, each sorted, ordered by representative.
    pub blocks: Vec<Vec<usize>>,
}

impl HomotopyClasses {
    pub fn representatives(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b[0]).collect()
    }

    pub(crate) fn from_labels(maps: Vec<ContinuousMap>, labels: &[usize]) -> Self {
        let mut first: HashMap<usize, usize> = HashMap::new();
        let class_of: Vec<usize> = labels.iter().enumerate().map(|(i, &l)| *first.entry(l).or_insert(i)).collect();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut block_of: HashMap<usize, usize> = HashMap::new();
        for (i, &rep) in class_of.iter().enumerate() {
            let b = *block_of.entry(rep).or_insert_with(|| {
                blocks.push(Vec::new());
                blocks.len() - 1
            });
            blocks[b].push(i);
        }
        HomotopyClasses { maps, class_of, blocks }
    }
}

pub fn homotopy_classes(domain: &Arc<FiniteSpace>, codomain: &Arc<FiniteSpace>, limits: &Limits) -> Result<HomotopyClasses> {
    let maps = continuous_maps(domain, codomain, limits)?;
    let mut labeler = ClassLabeler::new(domain, codomain);
    let labels = maps
        .iter()
        .map(|m| labeler.label(m.images(), limits))
        .collect::<Result<Vec<_>>>()?;
    Ok(HomotopyClasses::from_labels(maps, &labels))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arc(x: FiniteSpace) -> Arc<FiniteSpace> {
        Arc::new(x)
    }

    #[test]
    fn reflexive_and_max_point() {
        let lim = Limits::default();
        let c4 = arc(FiniteSpace::pseudocircle());
        let id = ContinuousMap::identity(c4.clone());
        assert!(are_homotopic(&id, &id, &lim).unwrap());
        // Codomain with a maximum: everything is homotopic.
        let chain = arc(FiniteSpace::chain(3));
        for f in continuous_maps(&c4, &chain, &lim).unwrap() {
            let top = ContinuousMap::constant(c4.clone(), chain.clone(), 2);
            assert!(are_homotopic(&f, &top, &lim).unwrap());
        }
    }

    #[test]
    fn identity_of_pseudocircle_is_essential() {
        let lim = Limits::default();
        let c4 = arc(FiniteSpace::pseudocircle());
        let id = ContinuousMap::identity(c4.clone());
        let ca = ContinuousMap::constant(c4.clone(), c4.clone(), 0);
        assert!(!are_homotopic(&id, &ca, &lim).unwrap());
        assert!(!are_homotopic_by_moves(&id, &ca, &lim).unwrap());
    }

    #[test]
    fn mismatch() {
        let lim = Limits::default();
        let c4 = arc(FiniteSpace::pseudocircle());
        let pt = arc(FiniteSpace::point());
        let f = ContinuousMap::identity(c4.clone());
        let g = ContinuousMap::constant(pt.clone(), c4, 0);
        assert!(matches!(are_homotopic(&f, &g, &lim), Err(Error::SpaceMismatch)));
    }

    #[test]
    fn class_counts() {
        let lim = Limits::default();
        let c4 = arc(FiniteSpace::pseudocircle());
        let pt = arc(FiniteSpace::point());
        let d2 = arc(FiniteSpace::discrete(2));
        assert_eq!(homotopy_classes(&pt, &c4, &lim).unwrap().blocks.len(), 1);
        assert_eq!(homotopy_classes(&d2, &d2, &lim).unwrap().blocks.len(), 4);
        assert_eq!(homotopy_classes(&c4, &arc(FiniteSpace::chain(2)), &lim).unwrap().blocks.len(), 1);
    }

    #[test]
    fn constants_homotopic_iff_same_component() {
        let lim = Limits::default();
        let x = arc(FiniteSpace::build(&["a", "b", "c", "d", "e"], &[("a", "b"), ("c", "d"), ("c", "e")]).unwrap());
        let dom = arc(FiniteSpace::sierpinski());
        let comps = x.component_sets();
        for y1 in 0..x.len() {
            for y2 in 0..x.len() {
                let same = comps.iter().any(|c| c.contains(y1) && c.contains(y2));
                let c1 = ContinuousMap::constant(dom.clone(), x.clone(), y1);
                let c2 = ContinuousMap::constant(dom.clone(), x.clone(), y2);
                assert_eq!(are_homotopic(&c1, &c2, &lim).unwrap(), same);
            }
        }
    }

    #[test]
    fn search_guard() {
        let lim = Limits { max_maps: 3, ..Limits::default() };
        let d3 = arc(FiniteSpace::discrete(3));
        let chain = arc(FiniteSpace::chain(5));
        let bottom = ContinuousMap::constant(d3.clone(), chain.clone(), 0);
        let top = ContinuousMap::constant(d3, chain, 4);
        assert!(matches!(are_homotopic_by_moves(&bottom, &top, &lim), Err(Error::SizeGuard { .. })));
        assert!(are_homotopic_by_moves(&bottom, &top, &Limits::default()).unwrap());
    }
}
