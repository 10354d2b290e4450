//! Standard configurations: the 3x3 grid, the unit cube, the Radon lattice,
//! conic superposition and the cube chain from surface curves to space.

use crate::construct::{
    cb_extend_curve, cb_reduce, gen_conic_nodes, gen_line_nodes, superpose_nodes, CbPartition,
    Certified, Line, Parabola, Parametrization, SuperpositionStep,
};
use crate::error::Result;
use crate::macaulay::Manifold;
use crate::mpoly::{int, parse_polynomial, Point, Polynomial};
use crate::nodes::{intersect_factorable, NodeSet};
use crate::nodes::FactorableSystem;

pub const GRID3_SYSTEM: &str = "(x1)*(x1 - 1)*(x1 - 2)\n(x2)*(x2 - 1)*(x2 - 2)\n";

/// `p = x3 (x3 - 1)`, `q = x1 (x1 - 1)`, `r = x2 (x2 - 1)`.
pub const CUBE_SYSTEM: &str = "(x3)*(x3 - 1)\n(x1)*(x1 - 1)\n(x2)*(x2 - 1)\n";

pub fn grid3_system() -> FactorableSystem {
    FactorableSystem::parse(GRID3_SYSTEM, 2).expect("fixture parses")
}

/// Manifold and the nine intersection points of the grid.
pub fn grid3() -> (Manifold, NodeSet) {
    let sys = grid3_system();
    let points = intersect_factorable(&sys).expect("grid is a sufficient intersection").nodes;
    (sys.manifold().expect("fixture manifold"), points)
}

pub fn cube_system() -> FactorableSystem {
    FactorableSystem::parse(CUBE_SYSTEM, 3).expect("fixture parses")
}

/// Cube vertex by its label 1..=8: the bottom face `x3 = 0` is 1..4
/// counterclockwise from the origin, the top face repeats it as 5..8.
pub fn cube_vertex(label: usize) -> Point {
    const V: [[i64; 3]; 8] = [
        [0, 0, 0],
        [1, 0, 0],
        [1, 1, 0],
        [0, 1, 0],
        [0, 0, 1],
        [1, 0, 1],
        [1, 1, 1],
        [0, 1, 1],
    ];
    Point::from_ints(&V[label - 1])
}

pub fn cube_vertices() -> NodeSet {
    NodeSet::new(3, (1..=8).map(cube_vertex).collect()).expect("distinct vertices")
}

pub fn cube_manifold() -> Manifold {
    cube_system().manifold().expect("fixture manifold")
}

/// The unit circle, completed by the witness `x1`.
pub fn circle_manifold() -> Manifold {
    Manifold::new(2, vec![parse_polynomial("x1^2 + x2^2 - 1", 2).expect("parses")])
        .and_then(|m| m.with_witnesses(vec![Polynomial::var(2, 0)]))
        .expect("fixture manifold")
}

/// The quadrics `p, q` of the cube, completed by `r`.
pub fn cube_pq_manifold() -> Manifold {
    let full = cube_manifold();
    full.prefix(2)
        .with_witnesses(vec![full.polynomials()[2].clone()])
        .expect("fixture manifold")
}

/// Radon's triangular lattice: level `m` adds `m + 1` points on the line
/// `x1 + x2 = m` to level `m - 1`. Each level is certified for the full
/// plane at degree `m`.
pub fn radon_lattice(mmax: i64) -> Result<Vec<Certified>> {
    let mut out: Vec<Certified> = Vec::new();
    let mut below = NodeSet::empty(2);
    for m in 0..=mmax {
        let line = Line::new(Point::from_ints(&[0, m]), vec![int(1), int(-1)]);
        let step = SuperpositionStep {
            manifold: Manifold::new(2, vec![line.polynomial()])?,
            degree: m,
            sub_nodes: gen_line_nodes(&line, m, None)?,
            super_nodes: below,
        };
        let level = superpose_nodes(&step)?;
        below = level.nodes.clone();
        out.push(level);
    }
    Ok(out)
}

/// The conic superposition pair: 5 points on `x2 = x1^2` plus `(0, 1)` for
/// degree 2, then 9 points on `x2 = x1^2 + 10` on top of those 6 for
/// degree 4.
pub fn conic_superposition() -> Result<(Certified, Certified)> {
    let inner = Parabola { shift: int(0) };
    let step = SuperpositionStep {
        manifold: Manifold::new(2, vec![inner.polynomial()])?,
        degree: 2,
        sub_nodes: gen_conic_nodes(&inner, 2, None)?,
        super_nodes: NodeSet::from_ints(&[&[0, 1]])?,
    };
    let six = superpose_nodes(&step)?;
    let outer = Parabola { shift: int(10) };
    let step = SuperpositionStep {
        manifold: Manifold::new(2, vec![outer.polynomial()])?,
        degree: 4,
        sub_nodes: gen_conic_nodes(&outer, 4, None)?,
        super_nodes: six.nodes.clone(),
    };
    let fifteen = superpose_nodes(&step)?;
    Ok((six, fifteen))
}

/// Extra points of the cube chain: `1'` on the curve `s(p, q)`, `9` on the
/// plane `x3 = 0` off that curve, `10` off both planes of `p`.
pub fn cube_chain_points() -> [Point; 3] {
    [
        Point::from_ints(&[0, 2, 0]),
        Point::from_ints(&[2, 3, 0]),
        Point::from_ints(&[0, 0, 2]),
    ]
}

/// Degree-2 PPSNs of sizes 7, 8, 9, 10 along `s(p, q, r)`, `s(p, q)`,
/// `s(p)` and the whole space.
pub fn cube_chain() -> Result<Vec<Certified>> {
    let full = cube_manifold();
    let vertices = cube_vertices();
    let one = NodeSet::new(3, vec![cube_vertex(1)])?;
    let [one_prime, nine, ten] = cube_chain_points();

    let on_points = cb_reduce(&CbPartition::new(vertices.clone(), one.clone())?, &full, 2)?;
    let on_curve = cb_extend_curve(
        &full,
        &vertices,
        &NodeSet::new(3, vec![one_prime])?,
        &one,
        2,
        0,
    )?;
    let on_surface = superpose_nodes(&SuperpositionStep {
        manifold: full.prefix(2),
        degree: 2,
        sub_nodes: on_curve.nodes.clone(),
        super_nodes: NodeSet::new(3, vec![nine])?,
    })?;
    let in_space = superpose_nodes(&SuperpositionStep {
        manifold: full.prefix(1),
        degree: 2,
        sub_nodes: on_surface.nodes.clone(),
        super_nodes: NodeSet::new(3, vec![ten])?,
    })?;
    Ok(vec![on_points, on_curve, on_surface, in_space])
}

/// Manifolds used for reduction sweeps.
pub fn reduction_manifolds() -> Vec<(&'static str, Manifold)> {
    let grid = grid3().0;
    let twisted = Manifold::new(
        3,
        vec![
            parse_polynomial("x1^2 - x2 + x3", 3).expect("parses"),
            parse_polynomial("x2^2 + x1*x3 - 1", 3).expect("parses"),
        ],
    )
    .expect("fixture manifold");
    vec![
        ("circle", circle_manifold()),
        ("grid", grid),
        ("cube", cube_manifold()),
        ("cube-pq", cube_pq_manifold()),
        ("twisted", twisted),
    ]
}
