//! Straight-line superposition from a single point up to the triangular
//! lattice of degree 6.

use ppsn::fixtures::radon_lattice;

fn main() -> ppsn::Result<()> {
    for (m, level) in radon_lattice(6)?.iter().enumerate() {
        println!("degree {m}: {} points, {:?}", level.nodes.len(), level.certificate.verdict);
    }
    let top = radon_lattice(3)?.pop().expect("nonempty");
    print!("{}", top.nodes.to_text());
    Ok(())
}
