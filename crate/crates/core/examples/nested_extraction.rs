//! Nested PPSNs pulled out of the intersection points of a factorable
//! system.

use ppsn::nodes::{extract_nested_ppsn, intersect_factorable};
use ppsn::{verify_ppsn, FactorableSystem};

fn main() -> ppsn::Result<()> {
    let system = FactorableSystem::parse("(x1)*(x1 - 1)*(x1 - 3)*(x1 + 2)\n(x2 - x1)*(x2 - 2)*(x2 + 1)\n", 2)?;
    let manifold = system.manifold()?;
    let all = intersect_factorable(&system)?.nodes;
    println!("{} intersection points", all.len());
    for m in -1..=manifold.profile().excess() {
        let nodes = extract_nested_ppsn(&all, &manifold, m)?;
        let cert = verify_ppsn(&nodes, &manifold, m)?;
        let pts: Vec<String> = nodes.points().iter().map(|q| format!("({q})")).collect();
        println!("m = {m}: {:?} {}", cert.verdict, pts.join(" "));
    }
    Ok(())
}
