//! Finite T0 spaces: opens, normality, components, cores and the file format.

use hodist::io::{space_from_str, space_to_string};
use hodist::{FiniteSpace, Limits};

fn main() -> hodist::Result<()> {
    let limits = Limits::default();
    let c4 = FiniteSpace::pseudocircle();

    let opens = c4.open_family(&limits)?;
    println!("C4 has {} opens:", opens.len());
    for u in &opens {
        println!("  {:?}", c4.names_of(u.points()));
    }

    let (normal, witness) = c4.normality();
    println!("C4 normal: {normal}");
    if let Some((a, b)) = witness {
        println!("  closed sets {:?} and {:?} cannot be separated", c4.names_of(a), c4.names_of(b));
    }

    for (name, space) in [
        ("point", FiniteSpace::point()),
        ("Sierpinski", FiniteSpace::sierpinski()),
        ("chain(3)", FiniteSpace::chain(3)),
        ("discrete(3)", FiniteSpace::discrete(3)),
        ("C4", c4.clone()),
    ] {
        let core = space.core_retraction().core;
        println!(
            "{name:<12} components {}  contractible {:<5}  core {:?}",
            space.connected_components().len(),
            space.is_contractible(),
            space.names_of(core)
        );
    }

    // A space given by a generating relation; saving writes the full closure.
    let v = space_from_str(r#"{"points": ["x", "y", "z"], "le": [["x", "y"], ["y", "z"]]}"#)?;
    print!("{}", space_to_string(&v));

    let square = c4.product(&c4)?;
    println!("C4 x C4 has {} points and {} opens", square.len(), square.open_family(&limits)?.len());
    Ok(())
}
