//! Canonical remainders modulo a manifold and monomial selection.

use ppsn::fixtures::reduction_manifolds;
use ppsn::macaulay::{is_reduced, unselected_basis};
use ppsn::{parse_polynomial, reduce_modulo, select_monomials};

fn main() -> ppsn::Result<()> {
    for (name, manifold) in reduction_manifolds() {
        let sel = select_monomials(&manifold, 3)?;
        let unselected: Vec<String> = sel.unselected_monomials().iter().map(|a| a.to_string()).collect();
        println!("{name}: degree-3 unselected [{}]", unselected.join(", "));
        let basis: Vec<String> = unselected_basis(&manifold, 3)?.iter().map(|a| a.to_string()).collect();
        println!("  remainder basis up to 3: [{}]", basis.join(", "));

        let text = if manifold.n() == 2 { "x1^4*x2 - 3*x2^3 + x1" } else { "x1^3*x3 + x2^2*x3 - x1*x2" };
        let f = parse_polynomial(text, manifold.n())?;
        let r = reduce_modulo(&f, &manifold)?;
        assert_eq!(r.reexpand(&manifold), f);
        assert!(is_reduced(&r.remainder, &manifold)?);
        println!("  {f}  ->  {}", r.remainder);
    }
    Ok(())
}
