//! Topological complexity as D(pr1, pr2) on X x X.

use std::sync::Arc;

use hodist::{are_homotopic, tc, FiniteSpace, Limits};

fn main() -> hodist::Result<()> {
    let limits = Limits::default();
    for (name, space) in [
        ("point", FiniteSpace::point()),
        ("Sierpinski", FiniteSpace::sierpinski()),
        ("chain(3)", FiniteSpace::chain(3)),
        ("discrete(2)", FiniteSpace::discrete(2)),
        ("C4", FiniteSpace::pseudocircle()),
    ] {
        let space = Arc::new(space);
        let started = std::time::Instant::now();
        let d = tc(&space, &limits)?;
        println!("TC({name}) = {}  [{:.1?}]", d.value, started.elapsed());
    }

    let c4 = Arc::new(FiniteSpace::pseudocircle());
    let (p1, p2) = hodist::distance::projections(&c4)?;
    println!("pr1 ~ pr2 on C4 x C4: {}", are_homotopic(&p1, &p2, &limits)?);
    let square = p1.domain();
    let d = tc(&c4, &limits)?;
    for (i, u) in d.certificate_names(square).unwrap_or_default().iter().enumerate() {
        println!("  U{i}: {}", u.join(" "));
    }
    Ok(())
}
