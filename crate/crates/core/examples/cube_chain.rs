//! Degree-2 node sets on the unit cube, from the vertex intersection out to
//! all of 3-space.

use ppsn::fixtures::{cube_chain, cube_vertex};

fn main() -> ppsn::Result<()> {
    for label in 1..=8 {
        println!("vertex {label}: {}", cube_vertex(label));
    }
    let stages = ["points of p, q, r", "curve of p, q", "surface of p", "space"];
    for (name, level) in stages.iter().zip(cube_chain()?) {
        println!("{name}: {} points, {:?}", level.nodes.len(), level.certificate.verdict);
        for q in level.nodes.points() {
            println!("  {q}");
        }
    }
    Ok(())
}
