//! Cayley-Bacharach on the 3x3 grid: reduction by a complementary PPSN and
//! the vanishing-or-hypersurface conclusion.

use ppsn::construct::{cb_check, cb_reduce, CbMode, CbPartition};
use ppsn::fixtures::grid3;
use ppsn::{parse_polynomial, NodeSet};

fn main() -> ppsn::Result<()> {
    let (manifold, grid) = grid3();
    let corner = NodeSet::from_ints(&[&[2, 2], &[1, 2], &[2, 1]])?;
    let reduced = cb_reduce(&CbPartition::new(grid.clone(), corner)?, &manifold, 2)?;
    println!("remaining {} points, {:?}", reduced.nodes.len(), reduced.certificate.verdict);

    // Cubics through 8 grid points pick up the ninth.
    let one = CbPartition::new(grid.clone(), NodeSet::from_ints(&[&[2, 2]])?)?;
    for text in ["x1^3 - 3*x1^2 + 2*x1", "x1^3 - 3*x1^2 + 2*x1 - 2*x2^3 + 6*x2^2 - 4*x2"] {
        let f = parse_polynomial(text, 2)?;
        let report = cb_check(&f, &one, &manifold, 3, CbMode::VanishOnLarge)?;
        println!("m = 3, {text}: vanishes on removed {}", report.vanishes_on_removed);
    }

    // A conic through six points may miss the other three, but only when
    // those lie on a line.
    let column = CbPartition::new(grid, NodeSet::from_ints(&[&[2, 0], &[2, 1], &[2, 2]])?)?;
    let f = parse_polynomial("x1^2 - x1", 2)?;
    let report = cb_check(&f, &column, &manifold, 2, CbMode::VanishOnLarge)?;
    println!(
        "m = 2, {}: vanishes on removed {}, removed on a line {:?}, consistent {}",
        f, report.vanishes_on_removed, report.removed_on_hypersurface, report.consistent
    );
    Ok(())
}
