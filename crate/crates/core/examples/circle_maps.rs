//! Degree classes of circle self-maps.

use hodist::circle::{basis_and_compactness, circle_ball, circle_distance, PlCircleMap, SymbolicSet};
use hodist::Radius;

fn main() -> hodist::Result<()> {
    println!("D(f_3, f_5) = {}", circle_distance(3, 5));
    println!("D(f_2, f_2) = {}", circle_distance(2, 2));

    for r in ["1/2", "1", "3/2"] {
        let ball = circle_ball(4, r.parse::<Radius>()?);
        println!("B_{r}(f_4) = {}", ball.set);
    }
    let around_constants = circle_ball(0, "1/2".parse()?);
    println!("B_1/2(c) = {}  note: {}", around_constants.set, around_constants.note.unwrap_or(""));

    let family = [SymbolicSet::Singleton(1), SymbolicSet::Singleton(2), SymbolicSet::ConstantsClass];
    let report = basis_and_compactness(&family)?;
    println!("subfamily {family:?} misses degree {}", report.uncovered_witness);

    let f = PlCircleMap::new(4, vec![0, 1, 2, 3, 0, 1, 2, 3])?;
    let g = PlCircleMap::standard(8, -3)?;
    let fg = f.after(&g)?;
    println!("deg f = {}, deg g = {}, deg f∘g = {}", f.degree(), g.degree(), fg.degree());
    Ok(())
}
