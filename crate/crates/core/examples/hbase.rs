//! Randomized H-base check and a single decomposition.

use ppsn::fixtures::{circle_manifold, cube_pq_manifold};
use ppsn::macaulay::{hbase_decompose, verify_hbase};
use ppsn::parse_polynomial;

fn main() -> ppsn::Result<()> {
    for (name, manifold) in [("circle", circle_manifold()), ("cube p, q", cube_pq_manifold())] {
        let report = verify_hbase(&manifold, 4, 10, 2024)?;
        let passed: Vec<String> = report
            .per_degree
            .iter()
            .map(|d| format!("{}: {}/{}", d.degree, d.passed, d.trials))
            .collect();
        println!("{name}: {}", passed.join(", "));
    }

    let manifold = circle_manifold();
    let g = parse_polynomial("x1^3 + x1*x2^2 - x1", 2)?;
    let dec = hbase_decompose(&g, &manifold, 3, None)?;
    assert_eq!(dec.reexpand(&manifold), g);
    for (i, c) in dec.cofactors.iter().enumerate() {
        println!("cofactor {i}: {c}");
    }
    Ok(())
}
