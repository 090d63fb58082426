//! The topology the distance induces on a map space.

use std::sync::Arc;

use hodist::{induced_space, FiniteSpace, Limits, Radius};

fn main() -> hodist::Result<()> {
    let limits = Limits::default();
    let c4 = Arc::new(FiniteSpace::pseudocircle());
    let s = Arc::new(FiniteSpace::sierpinski());

    let maps = induced_space(&c4, &c4, false, &limits)?;
    println!("Map(C4, C4): {} maps, largest finite distance {}", maps.len(), maps.max_finite());
    let report = maps.property_report()?;
    println!("  indiscrete {}  connected {}  components {}", report.indiscrete, report.connected, report.components.len());
    println!("  balls of radius <= 1 indiscrete: {}", report.small_balls_indiscrete);
    println!("  {} larger balls checked, each splits off B_1: {}", report.large_balls_checked, report.large_balls_disconnected);
    if let Some(sep) = report.separations.first() {
        println!("  e.g. B_{}({}) = {:?} + {:?}", sep.radius, maps.labels()[sep.center], sep.clopen, sep.complement);
    }

    let ball = maps.ball(0, "1/2".parse::<Radius>()?)?;
    println!("  B_1/2({}) has {} members", maps.labels()[0], ball.members.len());

    let classes = induced_space(&c4, &c4, true, &limits)?;
    println!("quotient by D = 0: {} classes, discrete: {}", classes.len(), classes.generate_topology(None)?.is_discrete());

    // A contractible codomain collapses everything.
    let into_s = induced_space(&c4, &s, false, &limits)?;
    let r = into_s.property_report()?;
    println!("Map(C4, S): {} maps, indiscrete {}", into_s.len(), r.indiscrete);
    Ok(())
}
