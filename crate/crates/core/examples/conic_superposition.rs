//! Conic superposition: parabola nodes stacked on a lower-degree ambient set,
//! then two-stage interpolation on the result.

use ppsn::construct::{interpolate, superpose_interpolate, InterpolationProblem, Parabola, Parametrization, SuperpositionStep};
use ppsn::fixtures::conic_superposition;
use ppsn::mpoly::{int, parse_polynomial};
use ppsn::Manifold;

fn main() -> ppsn::Result<()> {
    let (six, fifteen) = conic_superposition()?;
    println!("degree 2: {} points, {:?}", six.nodes.len(), six.certificate.verdict);
    println!("degree 4: {} points, {:?}", fifteen.nodes.len(), fifteen.certificate.verdict);

    let target = parse_polynomial("x1^4 - 2*x1^2*x2 + x2^3 - 5*x1 + 1", 2)?;
    let outer = Parabola { shift: int(10) };
    let sub = fifteen.nodes.difference(&six.nodes);
    let step = SuperpositionStep {
        manifold: Manifold::new(2, vec![outer.polynomial()])?,
        degree: 4,
        sub_nodes: sub.clone(),
        super_nodes: six.nodes.clone(),
    };
    let values = sub
        .union(&six.nodes)?
        .points()
        .iter()
        .map(|q| target.evaluate(q))
        .collect::<ppsn::Result<Vec<_>>>()?;
    let two_stage = superpose_interpolate(&step, &values)?;
    let direct = interpolate(&InterpolationProblem {
        manifold: Manifold::ambient(2),
        degree: 4,
        nodes: sub.union(&six.nodes)?,
        values,
    })?;
    println!("two-stage: {two_stage}");
    println!("direct:    {direct}");
    assert_eq!(two_stage, target);
    assert_eq!(direct, target);
    Ok(())
}
