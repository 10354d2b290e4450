//! Interpolation, the superposition process, curve chains, Cayley-Bacharach
//! reduction and extension, and node generators on rational curves.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::dimension::{binom_e, dim_along};
use crate::error::{Error, Result};
use crate::linalg::{exact_rank, greedy_rows, solve};
use crate::macaulay::{unselected_basis, Manifold};
use crate::mpoly::{int, monomial_basis, MonomialBasis, Point, Polynomial, Scalar};
use crate::nodes::{
    extract_nested_ppsn, intersect_factorable, require_ppsn, vandermonde_on, FactorableSystem,
    NodeSet, PpsnCertificate,
};

/// A node set together with the certificate that it is properly posed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certified {
    pub nodes: NodeSet,
    pub certificate: PpsnCertificate,
}

#[derive(Clone, Debug)]
pub struct InterpolationProblem {
    pub manifold: Manifold,
    pub degree: i64,
    pub nodes: NodeSet,
    pub values: Vec<Scalar>,
}

/// Solves `f(Q_i) = q_i` for `f` of degree at most `m`, returning the
/// representative supported on the unselected monomials.
pub fn interpolate(problem: &InterpolationProblem) -> Result<Polynomial> {
    let InterpolationProblem {
        manifold,
        degree,
        nodes,
        values,
    } = problem;
    if values.len() != nodes.len() {
        return Err(Error::DimensionMismatch {
            expected: nodes.len(),
            found: values.len(),
        });
    }
    require_ppsn(nodes, manifold, *degree)?;
    let n = manifold.n();
    if nodes.is_empty() {
        return Ok(Polynomial::zero(n));
    }
    let columns = unselected_basis(manifold, *degree)?;
    let v = vandermonde_on(nodes.points(), &columns);
    let x = solve(&v, values).expect("a proper node set is solvable on the remainder basis");
    Ok(MonomialBasis::from_monomials(n, *degree, columns).combine(&x))
}

/// One superposition step on `manifold = s(f_1..f_s)`: `sub_nodes` lie on
/// the manifold and are proper at degree `m`; `super_nodes` lie on
/// `s(f_1..f_{s-1})`, avoid `f_s` and are proper at degree `m - k_s`.
#[derive(Clone, Debug)]
pub struct SuperpositionStep {
    pub manifold: Manifold,
    pub degree: i64,
    pub sub_nodes: NodeSet,
    pub super_nodes: NodeSet,
}

impl SuperpositionStep {
    pub fn splitting_poly(&self) -> &Polynomial {
        self.manifold
            .polynomials()
            .last()
            .expect("superposition needs at least one polynomial")
    }

    pub fn super_manifold(&self) -> Manifold {
        self.manifold.prefix(self.manifold.s() - 1)
    }

    pub fn super_degree(&self) -> i64 {
        let s = self.manifold.s();
        self.degree - i64::from(self.manifold.degree_of(s - 1))
    }

    fn check(&self) -> Result<Manifold> {
        if self.manifold.s() == 0 {
            return Err(Error::Hypothesis(
                "superposition needs a splitting polynomial".into(),
            ));
        }
        require_ppsn(&self.sub_nodes, &self.manifold, self.degree)?;
        let upper = self.super_manifold();
        require_ppsn(&self.super_nodes, &upper, self.super_degree())?;
        let fs = self.splitting_poly();
        for (i, q) in self.super_nodes.points().iter().enumerate() {
            if fs.evaluate(q)?.is_zero() {
                return Err(Error::Hypothesis(format!(
                    "splitting polynomial vanishes at super node {i} ({q})"
                )));
            }
        }
        let expected = dim_along(self.degree, upper.profile())?;
        let found = self.sub_nodes.len() + self.super_nodes.len();
        if found as u64 != expected {
            return Err(Error::NodeCountMismatch { expected, found });
        }
        Ok(upper)
    }
}

/// The union of both node sets, certified proper at degree `m` along
/// `s(f_1..f_{s-1})`.
pub fn superpose_nodes(step: &SuperpositionStep) -> Result<Certified> {
    let upper = step.check()?;
    let nodes = step
        .sub_nodes
        .union(&step.super_nodes)
        .map_err(|e| Error::Hypothesis(format!("sub and super nodes overlap: {e}")))?;
    let certificate = require_ppsn(&nodes, &upper, step.degree)?;
    Ok(Certified { nodes, certificate })
}

/// Two-stage interpolation `g + alpha * f_s`, where `g` matches the values
/// on the sub nodes and `alpha` absorbs the scaled residual on the super
/// nodes. `values` follow the order sub nodes then super nodes.
pub fn superpose_interpolate(step: &SuperpositionStep, values: &[Scalar]) -> Result<Polynomial> {
    let upper = step.check()?;
    let k = step.sub_nodes.len();
    if values.len() != k + step.super_nodes.len() {
        return Err(Error::DimensionMismatch {
            expected: k + step.super_nodes.len(),
            found: values.len(),
        });
    }
    let g = interpolate(&InterpolationProblem {
        manifold: step.manifold.clone(),
        degree: step.degree,
        nodes: step.sub_nodes.clone(),
        values: values[..k].to_vec(),
    })?;
    let fs = step.splitting_poly();
    let mut residuals = Vec::with_capacity(step.super_nodes.len());
    for (q, v) in step.super_nodes.points().iter().zip(&values[k..]) {
        residuals.push((v - g.evaluate(q)?) / fs.evaluate(q)?);
    }
    let alpha = interpolate(&InterpolationProblem {
        manifold: upper,
        degree: step.super_degree(),
        nodes: step.super_nodes.clone(),
        values: residuals,
    })?;
    Ok(&g + &(&alpha * fs))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainLevel {
    pub degree: u32,
    pub nodes: NodeSet,
    pub certificate: PpsnCertificate,
}

const SHIFT_ATTEMPTS: i64 = 64;

struct CurveChain<'a> {
    curve: FactorableSystem,
    curve_manifold: Manifold,
    omitted: &'a [Polynomial],
    x0: &'a Point,
}

impl CurveChain<'_> {
    fn kt(&self) -> u32 {
        self.omitted.len() as u32
    }

    /// The omitted hypersurface with every factor's constant moved by `c`.
    fn shifted(&self, c: i64) -> Vec<Polynomial> {
        let n = self.curve.n();
        self.omitted
            .iter()
            .map(|l| l - &Polynomial::constant(n, int(c)))
            .collect()
    }

    fn omitted_poly(&self, c: i64) -> Polynomial {
        let n = self.curve.n();
        self.shifted(c)
            .iter()
            .fold(Polynomial::one(n), |acc, l| &acc * l)
    }

    fn completed(&self, c: i64) -> Result<(Manifold, NodeSet)> {
        let mut factors = self.curve.factors().to_vec();
        factors.push(self.shifted(c));
        let system = FactorableSystem::new(self.curve.n(), factors)?;
        let points = intersect_factorable(&system)?.nodes;
        Ok((system.manifold()?, points))
    }

    /// PPSN of degree `d` along the curve, built against the omitted
    /// hypersurface shifted by `c`. Every level contains `x0`.
    fn level(&self, d: u32, c: i64) -> Result<NodeSet> {
        let kt = self.kt();
        let (full, points) = self.completed(c)?;
        if d >= kt {
            let sub = extract_nested_ppsn(&points, &full, i64::from(d))?;
            let upper = if d == kt {
                NodeSet::new(self.curve.n(), vec![self.x0.clone()])?
            } else {
                self.avoiding(d - kt, c)?
            };
            return if d == kt {
                upper.union(&sub)
            } else {
                sub.union(&upper)
            };
        }
        let top = self.level(kt, c)?;
        let columns = unselected_basis(&self.curve_manifold, i64::from(kt))?;
        let width = dim_along(i64::from(d), self.curve_manifold.profile())? as usize;
        let v = vandermonde_on(top.points(), &columns[..width]);
        Ok(top.subset(&greedy_rows(&v)))
    }

    /// A degree-`d` level on which the `c`-shifted omitted hypersurface is
    /// nonzero, searched over later shifts.
    fn avoiding(&self, d: u32, c: i64) -> Result<NodeSet> {
        let guard = self.omitted_poly(c);
        for next in c + 1..=c + SHIFT_ATTEMPTS {
            if self.omitted_poly(next).evaluate(self.x0)?.is_zero() {
                continue;
            }
            let Ok(candidate) = self.level(d, next) else {
                continue;
            };
            let mut clear = true;
            for q in candidate.points() {
                if guard.evaluate(q)?.is_zero() {
                    clear = false;
                    break;
                }
            }
            if clear {
                return Ok(candidate);
            }
        }
        Err(Error::Configuration(format!(
            "no shift of the omitted hypersurface gave a degree-{d} level off it"
        )))
    }
}

/// PPSNs of degrees `0..=mmax` along the curve obtained by dropping
/// hypersurface `t` (0-based) from a factorable complete intersection.
///
/// `x0` must lie on the curve and off the dropped hypersurface; the level of
/// degree `k_t` is `x0` together with the nested extraction of degree `k_t`
/// from the intersection points. Higher levels superpose further nested
/// extractions on chains built against shifted copies of the dropped
/// hypersurface, lower levels are greedy subsets.
pub fn build_curve_chain(
    system: &FactorableSystem,
    t: usize,
    mmax: u32,
    x0: &Point,
) -> Result<Vec<ChainLevel>> {
    let n = system.n();
    if system.factors().len() != n || t >= n {
        return Err(Error::Hypothesis(format!(
            "curve chain needs {n} hypersurfaces and an index below {n}"
        )));
    }
    intersect_factorable(system)?;
    let curve = system.without(t);
    let curve_manifold = curve.manifold()?;
    curve_manifold.check_points(std::slice::from_ref(x0))?;
    let chain = CurveChain {
        curve,
        curve_manifold,
        omitted: &system.factors()[t],
        x0,
    };
    if chain.omitted_poly(0).evaluate(x0)?.is_zero() {
        return Err(Error::Hypothesis(format!(
            "starting point ({x0}) lies on the dropped hypersurface"
        )));
    }
    let mut out = Vec::with_capacity(mmax as usize + 1);
    for d in 0..=mmax {
        let nodes = chain.level(d, 0)?;
        let certificate = require_ppsn(&nodes, &chain.curve_manifold, i64::from(d))?;
        out.push(ChainLevel {
            degree: d,
            nodes,
            certificate,
        });
    }
    Ok(out)
}

/// A complete intersection split into removed and remaining points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CbPartition {
    pub full: NodeSet,
    pub removed: NodeSet,
}

impl CbPartition {
    pub fn new(full: NodeSet, removed: NodeSet) -> Result<Self> {
        for (i, q) in removed.points().iter().enumerate() {
            if !full.contains(q) {
                return Err(Error::Hypothesis(format!(
                    "removed point {i} ({q}) is not an intersection point"
                )));
            }
        }
        Ok(CbPartition { full, removed })
    }

    pub fn from_indices(full: NodeSet, indices: &[usize]) -> Result<Self> {
        let removed = full.subset(indices);
        let removed = NodeSet::new(full.n(), removed.points().to_vec())?;
        Ok(CbPartition { full, removed })
    }

    pub fn remaining(&self) -> NodeSet {
        self.full.difference(&self.removed)
    }
}

fn check_complete(manifold: &Manifold, full: &NodeSet) -> Result<u64> {
    let n = manifold.n();
    if manifold.s() != n {
        return Err(Error::Hypothesis(format!(
            "need {n} hypersurfaces meeting in points, found {}",
            manifold.s()
        )));
    }
    let total = manifold.profile().bezout_number().expect("s = n");
    if full.len() as u64 != total {
        return Err(Error::NodeCountMismatch {
            expected: total,
            found: full.len(),
        });
    }
    full.check_on(manifold)?;
    Ok(total)
}

/// Removes a PPSN of degree `M - m - 1` from the intersection and certifies
/// the rest at degree `m`.
pub fn cb_reduce(partition: &CbPartition, manifold: &Manifold, m: i64) -> Result<Certified> {
    check_complete(manifold, &partition.full)?;
    let big_m = manifold.profile().excess();
    if m < 0 || m > big_m - 1 {
        return Err(Error::Hypothesis(format!(
            "degree {m} outside 0..={}",
            big_m - 1
        )));
    }
    require_ppsn(&partition.removed, manifold, big_m - m - 1)?;
    let nodes = partition.remaining();
    let certificate = require_ppsn(&nodes, manifold, m)?;
    Ok(Certified { nodes, certificate })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CbMode {
    /// `M - L + 1 <= m <= M - 1` and `f` vanishes on the remaining points.
    VanishOnLarge,
    /// `0 <= m <= M - 1` and the removed points are a PPSN of degree
    /// `M - m - 1` along the intersection.
    PpsnRemoval,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CbCheckReport {
    pub mode: CbMode,
    pub degree: i64,
    pub vanishes_on_removed: bool,
    /// Whether the removed points lie on a hypersurface of degree
    /// `M - m - 1`; only examined when `f` misses some removed point.
    pub removed_on_hypersurface: Option<bool>,
    /// The outcome is one the theorem allows.
    pub consistent: bool,
}

/// Tests the Cayley-Bacharach conclusion for `f` of degree at most `m`
/// vanishing on the remaining points.
pub fn cb_check(
    f: &Polynomial,
    partition: &CbPartition,
    manifold: &Manifold,
    m: i64,
    mode: CbMode,
) -> Result<CbCheckReport> {
    check_complete(manifold, &partition.full)?;
    let n = manifold.n();
    let big_m = manifold.profile().excess();
    let low = manifold.profile().min_degree().map_or(0, i64::from);
    if f.degree_or_neg() > m {
        return Err(Error::Hypothesis(format!(
            "polynomial degree {} exceeds {m}",
            f.degree_or_neg()
        )));
    }
    let complementary = big_m - m - 1;
    match mode {
        CbMode::VanishOnLarge => {
            if m < big_m - low + 1 || m > big_m - 1 {
                return Err(Error::Hypothesis(format!(
                    "degree {m} outside {}..={}",
                    big_m - low + 1,
                    big_m - 1
                )));
            }
            let expected = binom_e(complementary, n as u32);
            if partition.removed.len() as u64 != expected {
                return Err(Error::NodeCountMismatch {
                    expected,
                    found: partition.removed.len(),
                });
            }
        }
        CbMode::PpsnRemoval => {
            if m < 0 || m > big_m - 1 {
                return Err(Error::Hypothesis(format!(
                    "degree {m} outside 0..={}",
                    big_m - 1
                )));
            }
            require_ppsn(&partition.removed, manifold, complementary)?;
        }
    }
    for (i, q) in partition.remaining().points().iter().enumerate() {
        if !f.evaluate(q)?.is_zero() {
            return Err(Error::Hypothesis(format!(
                "polynomial does not vanish at remaining point {i} ({q})"
            )));
        }
    }
    let mut vanishes_on_removed = true;
    for q in partition.removed.points() {
        if !f.evaluate(q)?.is_zero() {
            vanishes_on_removed = false;
            break;
        }
    }
    let removed_on_hypersurface = (!vanishes_on_removed).then(|| {
        lies_on_hypersurface(&partition.removed, complementary)
    });
    let consistent = match mode {
        CbMode::VanishOnLarge => vanishes_on_removed || removed_on_hypersurface == Some(true),
        CbMode::PpsnRemoval => vanishes_on_removed,
    };
    Ok(CbCheckReport {
        mode,
        degree: m,
        vanishes_on_removed,
        removed_on_hypersurface,
        consistent,
    })
}

/// Whether a nonzero polynomial of degree at most `d` vanishes on every
/// point, i.e. the Vandermonde against `P_d` has a nonzero right kernel.
pub fn lies_on_hypersurface(points: &NodeSet, d: i64) -> bool {
    let basis = monomial_basis(points.n(), d);
    if basis.is_empty() {
        return false;
    }
    let v = vandermonde_on(points.points(), basis.monomials());
    exact_rank(&v).rank < basis.len()
}

/// Extends a node set along the curve that drops hypersurface `t`: adjoins
/// the curve nodes `a_t` to the intersection `a` minus a PPSN `b` of the
/// full degree-`m` space, certified at degree `M - m - 1`. For `m < 0`, `b`
/// must be empty.
pub fn cb_extend_curve(
    manifold: &Manifold,
    a: &NodeSet,
    a_t: &NodeSet,
    b: &NodeSet,
    t: usize,
    m: i64,
) -> Result<Certified> {
    check_complete(manifold, a)?;
    let n = manifold.n();
    if t >= n {
        return Err(Error::Hypothesis(format!("hypersurface index {t} out of range")));
    }
    let big_m = manifold.profile().excess();
    let low = i64::from(manifold.profile().min_degree().expect("s = n >= 1"));
    if m > low - 1 {
        return Err(Error::Hypothesis(format!("degree {m} exceeds {}", low - 1)));
    }
    if m < 0 {
        if !b.is_empty() {
            return Err(Error::Hypothesis(
                "for negative degree the removed set must be empty".into(),
            ));
        }
    } else {
        for (i, q) in b.points().iter().enumerate() {
            if !a.contains(q) {
                return Err(Error::Hypothesis(format!(
                    "removed point {i} ({q}) is not an intersection point"
                )));
            }
        }
        require_ppsn(b, &Manifold::ambient(n), m)?;
    }
    for (i, q) in a_t.points().iter().enumerate() {
        if a.contains(q) {
            return Err(Error::Hypothesis(format!(
                "curve node {i} ({q}) is an intersection point"
            )));
        }
    }
    let curve = manifold.without(t);
    let kt = i64::from(manifold.degree_of(t));
    require_ppsn(a_t, &curve, big_m - m - kt - 1)?;
    let nodes = a_t.union(&a.difference(b))?;
    let certificate = require_ppsn(&nodes, &curve, big_m - m - 1)?;
    Ok(Certified { nodes, certificate })
}

/// A rational curve `t -> point`, injective on rationals.
pub trait Parametrization {
    fn n(&self) -> usize;
    fn point(&self, t: &Scalar) -> Point;
    /// Defining polynomial of the curve (plane curves only).
    fn polynomial(&self) -> Polynomial;
    /// Nodes a PPSN of degree `m` needs along the curve.
    fn count(&self, m: i64) -> usize;
}

/// `origin + t * direction` in the plane.
#[derive(Clone, Debug)]
pub struct Line {
    pub origin: Point,
    pub direction: Vec<Scalar>,
}

impl Line {
    pub fn new(origin: Point, direction: Vec<Scalar>) -> Self {
        Line { origin, direction }
    }

    /// The line `x2 = c`.
    pub fn horizontal(c: Scalar) -> Self {
        Line::new(Point::new(vec![Scalar::zero(), c]), vec![Scalar::one(), Scalar::zero()])
    }
}

impl Parametrization for Line {
    fn n(&self) -> usize {
        self.origin.dim()
    }

    fn point(&self, t: &Scalar) -> Point {
        Point::new(
            self.origin
                .coords()
                .iter()
                .zip(&self.direction)
                .map(|(o, d)| o + t * d)
                .collect(),
        )
    }

    fn polynomial(&self) -> Polynomial {
        // d2 * (x1 - o1) - d1 * (x2 - o2)
        let (o, d) = (self.origin.coords(), &self.direction);
        let constant = -(&d[1] * &o[0]) + &d[0] * &o[1];
        Polynomial::linear(constant, &[d[1].clone(), -d[0].clone()])
    }

    fn count(&self, m: i64) -> usize {
        (m + 1).max(0) as usize
    }
}

/// `x2 = x1^2 + shift`.
#[derive(Clone, Debug)]
pub struct Parabola {
    pub shift: Scalar,
}

impl Parametrization for Parabola {
    fn n(&self) -> usize {
        2
    }

    fn point(&self, t: &Scalar) -> Point {
        Point::new(vec![t.clone(), t * t + &self.shift])
    }

    fn polynomial(&self) -> Polynomial {
        let x1 = Polynomial::var(2, 0);
        &(&Polynomial::var(2, 1) - &(&x1 * &x1)) - &Polynomial::constant(2, self.shift.clone())
    }

    fn count(&self, m: i64) -> usize {
        (2 * m + 1).max(0) as usize
    }
}

/// The unit circle through `((1 - t^2) / (1 + t^2), 2t / (1 + t^2))`.
#[derive(Clone, Debug)]
pub struct Circle;

impl Parametrization for Circle {
    fn n(&self) -> usize {
        2
    }

    fn point(&self, t: &Scalar) -> Point {
        let one = Scalar::one();
        let d = &one + t * t;
        Point::new(vec![(&one - t * t) / &d, (t + t) / &d])
    }

    fn polynomial(&self) -> Polynomial {
        let x1 = Polynomial::var(2, 0);
        let x2 = Polynomial::var(2, 1);
        &(&(&x1 * &x1) + &(&x2 * &x2)) - &Polynomial::one(2)
    }

    fn count(&self, m: i64) -> usize {
        (2 * m + 1).max(0) as usize
    }
}

fn gen_nodes(curve: &dyn Parametrization, m: i64, params: Option<&[Scalar]>) -> Result<NodeSet> {
    let count = curve.count(m);
    let params: Vec<Scalar> = match params {
        Some(p) => {
            if p.len() != count {
                return Err(Error::NodeCountMismatch {
                    expected: count as u64,
                    found: p.len(),
                });
            }
            p.to_vec()
        }
        None => (0..count as i64).map(int).collect(),
    };
    for (i, a) in params.iter().enumerate() {
        if let Some(j) = params[..i].iter().position(|b| b == a) {
            return Err(Error::DuplicateNode { first: j, second: i });
        }
    }
    NodeSet::new(curve.n(), params.iter().map(|t| curve.point(t)).collect())
}

/// `m + 1` points on a line; parameters default to `0, 1, ..., m`.
pub fn gen_line_nodes(line: &Line, m: i64, params: Option<&[Scalar]>) -> Result<NodeSet> {
    gen_nodes(line, m, params)
}

/// `2m + 1` points on a conic; parameters default to `0, 1, ..., 2m`.
pub fn gen_conic_nodes(
    conic: &dyn Parametrization,
    m: i64,
    params: Option<&[Scalar]>,
) -> Result<NodeSet> {
    gen_nodes(conic, m, params)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::parse_polynomial;
    use crate::nodes::verify_ppsn;

    fn ints(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&c| int(c)).collect()
    }

    #[test]
    fn interpolate_examples() {
        let tri = NodeSet::from_ints(&[&[0, 0], &[1, 0], &[0, 1]]).unwrap();
        let problem = InterpolationProblem {
            manifold: Manifold::ambient(2),
            degree: 1,
            nodes: tri.clone(),
            values: ints(&[1, 2, 3]),
        };
        assert_eq!(
            interpolate(&problem).unwrap(),
            parse_polynomial("1 + x1 + 2*x2", 2).unwrap()
        );
        let zero = InterpolationProblem {
            values: ints(&[0, 0, 0]),
            ..problem
        };
        assert!(interpolate(&zero).unwrap().is_zero());
    }

    #[test]
    fn interpolate_on_circle() {
        let nodes = gen_conic_nodes(&Circle, 2, None).unwrap();
        let circle = Manifold::new(2, vec![Circle.polynomial()]).unwrap();
        let x1 = Polynomial::var(2, 0);
        let values: Vec<Scalar> = nodes.points().iter().map(|q| x1.evaluate(q).unwrap()).collect();
        let f = interpolate(&InterpolationProblem {
            manifold: circle,
            degree: 2,
            nodes: nodes.clone(),
            values: values.clone(),
        })
        .unwrap();
        for (q, v) in nodes.points().iter().zip(&values) {
            assert_eq!(&f.evaluate(q).unwrap(), v);
        }
    }

    #[test]
    fn interpolate_count_mismatch() {
        let tri = NodeSet::from_ints(&[&[0, 0], &[1, 0], &[0, 1]]).unwrap();
        let problem = InterpolationProblem {
            manifold: Manifold::ambient(2),
            degree: 1,
            nodes: tri,
            values: ints(&[1, 2]),
        };
        assert!(matches!(
            interpolate(&problem),
            Err(Error::DimensionMismatch { expected: 3, found: 2 })
        ));
    }

    #[test]
    fn generators() {
        let line = Line::horizontal(int(0));
        assert_eq!(
            gen_line_nodes(&line, 2, None).unwrap(),
            NodeSet::from_ints(&[&[0, 0], &[1, 0], &[2, 0]]).unwrap()
        );
        assert_eq!(gen_line_nodes(&line, 0, None).unwrap().len(), 1);
        let parabola = Parabola { shift: int(0) };
        let nodes = gen_conic_nodes(&parabola, 1, Some(&ints(&[0, 1, -1]))).unwrap();
        assert_eq!(
            nodes,
            NodeSet::from_ints(&[&[0, 0], &[1, 1], &[-1, 1]]).unwrap()
        );
        let manifold = Manifold::new(2, vec![parabola.polynomial()]).unwrap();
        assert!(verify_ppsn(&nodes, &manifold, 1).unwrap().is_proper());
        assert!(matches!(
            gen_conic_nodes(&parabola, 1, Some(&ints(&[0, 1, 0]))),
            Err(Error::DuplicateNode { first: 0, second: 2 })
        ));
        let circle = Manifold::new(2, vec![Circle.polynomial()]).unwrap();
        gen_conic_nodes(&Circle, 3, None).unwrap().check_on(&circle).unwrap();
        let slanted = Line::new(Point::from_ints(&[1, 2]), ints(&[3, -1]));
        let on = Manifold::new(2, vec![slanted.polynomial()]).unwrap();
        gen_line_nodes(&slanted, 4, None).unwrap().check_on(&on).unwrap();
    }

    fn line_step(m: i64, below: NodeSet) -> SuperpositionStep {
        // line x1 + x2 = m, super nodes on lower diagonals
        let line = Line::new(Point::from_ints(&[0, m]), ints(&[1, -1]));
        SuperpositionStep {
            manifold: Manifold::new(2, vec![line.polynomial()]).unwrap(),
            degree: m,
            sub_nodes: gen_line_nodes(&line, m, None).unwrap(),
            super_nodes: below,
        }
    }

    #[test]
    fn superposition_and_two_stage_interpolation() {
        let mut below = NodeSet::empty(2);
        for m in 0..=4 {
            let step = line_step(m, below.clone());
            let sup = superpose_nodes(&step).unwrap();
            assert_eq!(sup.nodes.len() as u64, binom_e(m, 2));
            let target = parse_polynomial("3 - x1 + 2*x1*x2 - x2^2", 2).unwrap();
            let target = if m >= 2 { target } else { Polynomial::var(2, 0) };
            let values: Vec<Scalar> = sup
                .nodes
                .points()
                .iter()
                .map(|q| target.evaluate(q).unwrap())
                .collect();
            let f = superpose_interpolate(&step, &values).unwrap();
            let direct = interpolate(&InterpolationProblem {
                manifold: Manifold::ambient(2),
                degree: m,
                nodes: sup.nodes.clone(),
                values: values.clone(),
            })
            .unwrap();
            for (q, v) in sup.nodes.points().iter().zip(&values) {
                assert_eq!(&f.evaluate(q).unwrap(), v);
                assert_eq!(&direct.evaluate(q).unwrap(), v);
            }
            let zeros = vec![Scalar::zero(); values.len()];
            assert!(superpose_interpolate(&step, &zeros).unwrap().is_zero());
            below = sup.nodes;
        }
    }

    #[test]
    fn superposition_rejects_super_node_on_splitting_poly() {
        let step = line_step(1, NodeSet::from_ints(&[&[1, 0]]).unwrap());
        assert!(superpose_nodes(&step).is_err());
    }

    fn grid() -> (Manifold, NodeSet) {
        let sys = FactorableSystem::parse("(x1)*(x1 - 1)*(x1 - 2)\n(x2)*(x2 - 1)*(x2 - 2)\n", 2)
            .unwrap();
        (sys.manifold().unwrap(), intersect_factorable(&sys).unwrap().nodes)
    }

    fn index_of(full: &NodeSet, q: &[i64]) -> usize {
        full.points().iter().position(|p| p == &Point::from_ints(q)).unwrap()
    }

    #[test]
    fn cb_reduce_examples() {
        let (m, full) = grid();
        let part = CbPartition::from_indices(full.clone(), &[4]).unwrap();
        let out = cb_reduce(&part, &m, 3).unwrap();
        assert_eq!(out.nodes.len(), 8);

        let idx: Vec<usize> = [[0, 0], [1, 0], [0, 1]].iter().map(|q| index_of(&full, q)).collect();
        let part = CbPartition::from_indices(full.clone(), &idx).unwrap();
        assert_eq!(cb_reduce(&part, &m, 2).unwrap().nodes.len(), 6);

        let idx: Vec<usize> = [[0, 0], [1, 0], [2, 0]].iter().map(|q| index_of(&full, q)).collect();
        let part = CbPartition::from_indices(full, &idx).unwrap();
        assert!(matches!(cb_reduce(&part, &m, 2), Err(Error::Improper(_))));
    }

    #[test]
    fn cb_check_examples() {
        let (m, full) = grid();
        // the rows x2 = 1 and x2 = 2 cover the six remaining points
        let f = parse_polynomial("x2^2 - 3*x2 + 2", 2).unwrap();
        let idx: Vec<usize> = [[0, 0], [1, 0], [2, 0]].iter().map(|q| index_of(&full, q)).collect();
        let part = CbPartition::from_indices(full.clone(), &idx).unwrap();
        let r = cb_check(&f, &part, &m, 2, CbMode::VanishOnLarge).unwrap();
        assert!(!r.vanishes_on_removed);
        assert_eq!(r.removed_on_hypersurface, Some(true));
        assert!(r.consistent);

        let zero = Polynomial::zero(2);
        let r = cb_check(&zero, &part, &m, 2, CbMode::VanishOnLarge).unwrap();
        assert!(r.vanishes_on_removed && r.consistent);
    }

    #[test]
    fn cor_extension_on_grid() {
        let (m, full) = grid();
        let a2 = NodeSet::from_ints(&[&[0, 5], &[1, 5], &[2, 7]]).unwrap();
        let out = cb_extend_curve(&m, &full, &a2, &NodeSet::empty(2), 1, -1).unwrap();
        assert_eq!(out.nodes.len(), 12);
        assert_eq!(out.certificate.degree, 4);
    }

    #[test]
    fn curve_chain_on_line_pair() {
        let sys = FactorableSystem::parse("x2\nx1\n", 2).unwrap();
        let x0 = Point::from_ints(&[1, 0]);
        let chain = build_curve_chain(&sys, 1, 6, &x0).unwrap();
        for level in &chain {
            assert_eq!(level.nodes.len(), level.degree as usize + 1);
        }
        assert_eq!(chain[0].nodes, NodeSet::new(2, vec![x0]).unwrap());
    }

    #[test]
    fn curve_chain_start_point_checks() {
        let sys = FactorableSystem::parse("x2\nx1\n", 2).unwrap();
        assert!(matches!(
            build_curve_chain(&sys, 1, 2, &Point::from_ints(&[0, 0])),
            Err(Error::Hypothesis(_))
        ));
        assert!(matches!(
            build_curve_chain(&sys, 1, 2, &Point::from_ints(&[1, 1])),
            Err(Error::OffManifold { .. })
        ));
    }
}
