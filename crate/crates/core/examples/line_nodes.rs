//! m + 1 distinct points on a line are proper at degree m along it.

use ppsn::construct::{gen_line_nodes, Line, Parametrization};
use ppsn::mpoly::{int, Point};
use ppsn::{verify_ppsn, Manifold};

fn main() -> ppsn::Result<()> {
    let line = Line::new(Point::from_ints(&[1, -2]), vec![int(2), int(3)]);
    let manifold = Manifold::new(2, vec![line.polynomial()])?;
    println!("line: {} = 0", line.polynomial());
    for m in 0..=10 {
        let nodes = gen_line_nodes(&line, m, None)?;
        let cert = verify_ppsn(&nodes, &manifold, m)?;
        println!("m = {m:>2}: {} points, {:?}", nodes.len(), cert.verdict);
    }
    Ok(())
}
