//! Enumerating Map(X, Y) and deciding homotopy.

use std::sync::Arc;

use hodist::{are_homotopic, continuous_maps, homotopy_classes, ContinuousMap, FiniteSpace, Limits};

fn main() -> hodist::Result<()> {
    let limits = Limits::default();
    let c4 = Arc::new(FiniteSpace::pseudocircle());

    let maps = continuous_maps(&c4, &c4, &limits)?;
    println!("Map(C4, C4) has {} maps", maps.len());

    let classes = homotopy_classes(&c4, &c4, &limits)?;
    println!("{} homotopy classes:", classes.blocks.len());
    for block in &classes.blocks {
        println!("  {:?} and {} more", classes.maps[block[0]], block.len() - 1);
    }

    let id = ContinuousMap::identity(c4.clone());
    let swap = ContinuousMap::from_names(c4.clone(), c4.clone(), &[("a", "b"), ("b", "a"), ("c", "c"), ("d", "d")])?;
    let k = ContinuousMap::constant(c4.clone(), c4.clone(), 0);
    println!("Id ~ swap: {}", are_homotopic(&id, &swap, &limits)?);
    println!("Id ~ const: {}", are_homotopic(&id, &k, &limits)?);

    // Constants are homotopic exactly when their targets share a component.
    let d2 = Arc::new(FiniteSpace::discrete(2));
    let pt = Arc::new(FiniteSpace::point());
    let to0 = ContinuousMap::constant(pt.clone(), d2.clone(), 0);
    let to1 = ContinuousMap::constant(pt, d2, 1);
    println!("constants into two components homotopic: {}", are_homotopic(&to0, &to1, &limits)?);
    Ok(())
}
