//! Homotopic distance with cover certificates, and LS-category three ways.

use std::sync::Arc;

use hodist::{cat, good_open_family, homotopic_distance, CatMethod, ContinuousMap, FiniteSpace, Limits};

fn main() -> hodist::Result<()> {
    let limits = Limits::default();
    let c4 = Arc::new(FiniteSpace::pseudocircle());
    let id = ContinuousMap::identity(c4.clone());
    let k = ContinuousMap::constant(c4.clone(), c4.clone(), c4.index_of("a")?);

    let family = good_open_family(&id, &k, &limits)?;
    let maximal: Vec<_> = family.maximal.iter().map(|u| c4.names_of(u.points())).collect();
    println!("maximal good opens for (Id, const_a): {maximal:?}");
    let d = homotopic_distance(&id, &k, &limits)?;
    println!("D(Id, const_a) = {}  certificate {:?}", d.value, d.certificate_names(&c4));

    for method in [CatMethod::Cover, CatMethod::Dist, CatMethod::Incl] {
        let r = cat(&c4, method, Some(0), &limits)?;
        println!("cat(C4) by {method:?} = {}", r.distance.value);
    }

    // On a discrete space no open through two points is categorical, so
    // D(Id, const) is infinite while the cover method counts components.
    for n in 2..=5 {
        let d = Arc::new(FiniteSpace::discrete(n));
        let by_cover = cat(&d, CatMethod::Cover, None, &limits)?;
        let by_dist = cat(&d, CatMethod::Dist, Some(0), &limits)?;
        println!(
            "discrete({n}): cover {}  D(Id, const) {}  ({})",
            by_cover.distance.value,
            by_dist.distance.value,
            by_dist.warning.unwrap_or_default()
        );
    }
    Ok(())
}
