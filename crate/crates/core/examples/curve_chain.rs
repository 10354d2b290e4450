//! PPSNs of increasing degree along the curve left after dropping one
//! hypersurface of the cube.

use ppsn::construct::build_curve_chain;
use ppsn::fixtures::cube_system;
use ppsn::mpoly::Point;

fn main() -> ppsn::Result<()> {
    let system = cube_system();
    let start = Point::from_ints(&[0, 2, 0]);
    for level in build_curve_chain(&system, 2, 4, &start)? {
        println!("degree {}: {} points, {:?}", level.degree, level.nodes.len(), level.certificate.verdict);
    }
    Ok(())
}
