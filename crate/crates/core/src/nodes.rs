//! Node sets, Vandermonde matrices, well-posedness certificates, nested
//! extraction from complete intersections and the intersection engine for
//! products of linear forms.

use std::collections::HashMap;

use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::dimension::{dim_along, hilbert_table, DegreeProfile};
use crate::error::{Error, Result};
use crate::linalg::{exact_rank, greedy_rows, is_nonsingular, left_kernel_vector, solve, Matrix};
use crate::macaulay::{unselected_basis, Manifold};
use crate::mpoly::{monomial_basis, MonomialBasis, MultiIndex, Point, Polynomial, Scalar};

/// Ordered list of pairwise distinct points of affine `n`-space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeSet {
    n: usize,
    points: Vec<Point>,
}

impl NodeSet {
    pub fn new(n: usize, points: Vec<Point>) -> Result<Self> {
        let mut seen: HashMap<&Point, usize> = HashMap::with_capacity(points.len());
        for (i, q) in points.iter().enumerate() {
            if q.dim() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: q.dim(),
                });
            }
            if let Some(&first) = seen.get(q) {
                return Err(Error::DuplicateNode { first, second: i });
            }
            seen.insert(q, i);
        }
        Ok(NodeSet { n, points })
    }

    pub fn empty(n: usize) -> Self {
        NodeSet {
            n,
            points: Vec::new(),
        }
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<Self> {
        let n = rows.first().map_or(0, |r| r.len());
        NodeSet::new(n, rows.iter().map(|r| Point::from_ints(r)).collect())
    }

    /// One point per line, comma-separated rationals, `#` comments. The
    /// dimension is taken from the first point unless given.
    pub fn parse(text: &str, n: Option<usize>) -> Result<Self> {
        let mut points = Vec::new();
        let mut offset = 0;
        for line in text.split_inclusive('\n') {
            let body = line.split('#').next().unwrap_or("");
            if !body.trim().is_empty() {
                let q = Point::parse(body).map_err(|e| match e {
                    Error::Syntax { position, message } => Error::Syntax {
                        position: position + offset,
                        message,
                    },
                    other => other,
                })?;
                points.push(q);
            }
            offset += line.len();
        }
        let n = n.or_else(|| points.first().map(Point::dim)).unwrap_or(0);
        NodeSet::new(n, points)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, q: &Point) -> bool {
        self.points.contains(q)
    }

    pub fn subset(&self, indices: &[usize]) -> NodeSet {
        NodeSet {
            n: self.n,
            points: indices.iter().map(|&i| self.points[i].clone()).collect(),
        }
    }

    /// Concatenation; fails if the two sets share a point.
    pub fn union(&self, other: &NodeSet) -> Result<NodeSet> {
        let mut points = self.points.clone();
        points.extend(other.points.iter().cloned());
        NodeSet::new(self.n, points)
    }

    /// Points of `self` that are not in `other`, order kept.
    pub fn difference(&self, other: &NodeSet) -> NodeSet {
        NodeSet {
            n: self.n,
            points: self
                .points
                .iter()
                .filter(|q| !other.contains(q))
                .cloned()
                .collect(),
        }
    }

    pub fn check_on(&self, manifold: &Manifold) -> Result<()> {
        if manifold.n() != self.n {
            return Err(Error::DimensionMismatch {
                expected: manifold.n(),
                found: self.n,
            });
        }
        manifold.check_points(&self.points)
    }

    pub fn to_text(&self) -> String {
        self.points.iter().map(|q| format!("{q}\n")).collect()
    }
}

#[derive(Clone, Debug)]
pub struct VandermondeMatrix {
    pub matrix: Matrix,
    pub basis: MonomialBasis,
}

/// Entry `(i, j)` is `phi_j(Q_i)`.
pub fn vandermonde_on(points: &[Point], monomials: &[MultiIndex]) -> Matrix {
    let rows = points
        .iter()
        .map(|q| monomials.iter().map(|a| a.evaluate(q.coords())).collect())
        .collect();
    Matrix::from_rows(monomials.len(), rows)
}

pub fn vandermonde(nodes: &NodeSet, basis: &MonomialBasis) -> Result<VandermondeMatrix> {
    if nodes.n() != basis.n() && !nodes.is_empty() {
        return Err(Error::DimensionMismatch {
            expected: basis.n(),
            found: nodes.n(),
        });
    }
    Ok(VandermondeMatrix {
        matrix: vandermonde_on(nodes.points(), basis.monomials()),
        basis: basis.clone(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Proper,
    Improper,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Witness {
    /// Columns of a nonsingular square block, in pivot order.
    Pivots { columns: Vec<usize> },
    /// `lambda` with `lambda^T V = 0`, one entry per node.
    Kernel {
        #[serde(serialize_with = "serialize_scalars")]
        functional: Vec<Scalar>,
    },
}

pub(crate) fn serialize_scalars<S: Serializer>(v: &[Scalar], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|c| c.to_string()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PpsnCertificate {
    pub degree: i64,
    pub profile: DegreeProfile,
    pub expected_count: u64,
    pub verdict: Verdict,
    pub witness: Witness,
}

impl PpsnCertificate {
    pub fn is_proper(&self) -> bool {
        self.verdict == Verdict::Proper
    }

    /// Re-derives the verdict from the witness alone.
    pub fn replay(&self, nodes: &NodeSet) -> bool {
        let v = vandermonde_on(
            nodes.points(),
            monomial_basis(nodes.n(), self.degree).monomials(),
        );
        match (&self.witness, self.verdict) {
            (Witness::Pivots { columns }, Verdict::Proper) => {
                columns.len() == nodes.len() && is_nonsingular(&v.select_columns(columns))
            }
            (Witness::Kernel { functional }, Verdict::Improper) => {
                functional.len() == nodes.len()
                    && functional.iter().any(|c| !c.is_zero())
                    && v.vec_mul(functional).iter().all(Zero::is_zero)
            }
            _ => false,
        }
    }
}

/// Decides whether `nodes` is properly posed for degree `m` along the
/// manifold: the evaluation map from `P_m` onto values at the nodes must be
/// surjective, i.e. the Vandermonde has full row rank.
pub fn verify_ppsn(nodes: &NodeSet, manifold: &Manifold, m: i64) -> Result<PpsnCertificate> {
    let expected = dim_along(m, manifold.profile())?;
    if nodes.len() as u64 != expected {
        return Err(Error::NodeCountMismatch {
            expected,
            found: nodes.len(),
        });
    }
    nodes.check_on(manifold)?;
    let v = vandermonde_on(
        nodes.points(),
        monomial_basis(manifold.n(), m).monomials(),
    );
    let rp = exact_rank(&v);
    let (verdict, witness) = if rp.rank == nodes.len() {
        (
            Verdict::Proper,
            Witness::Pivots {
                columns: rp.pivot_columns(),
            },
        )
    } else {
        let functional = left_kernel_vector(&v).expect("rank below row count");
        (Verdict::Improper, Witness::Kernel { functional })
    };
    Ok(PpsnCertificate {
        degree: m,
        profile: manifold.profile().clone(),
        expected_count: expected,
        verdict,
        witness,
    })
}

/// Like [`verify_ppsn`] but turns an improper verdict into an error.
pub fn require_ppsn(nodes: &NodeSet, manifold: &Manifold, m: i64) -> Result<PpsnCertificate> {
    let cert = verify_ppsn(nodes, manifold, m)?;
    if cert.is_proper() {
        Ok(cert)
    } else {
        Err(Error::Improper(Box::new(cert)))
    }
}

/// Hypersurfaces given as products of affine-linear forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorableSystem {
    n: usize,
    factors: Vec<Vec<Polynomial>>,
}

impl FactorableSystem {
    pub fn new(n: usize, factors: Vec<Vec<Polynomial>>) -> Result<Self> {
        if factors.len() > n {
            return Err(Error::InvalidProfile(format!(
                "{} hypersurfaces in dimension {n}",
                factors.len()
            )));
        }
        for (h, fs) in factors.iter().enumerate() {
            if fs.is_empty() {
                return Err(Error::InvalidProfile(format!("hypersurface {h} has no factors")));
            }
            for (k, l) in fs.iter().enumerate() {
                if l.n() != n {
                    return Err(Error::DimensionMismatch {
                        expected: n,
                        found: l.n(),
                    });
                }
                if l.degree() != Some(1) {
                    return Err(Error::NotLinear {
                        hypersurface: h,
                        factor: k,
                    });
                }
            }
        }
        Ok(FactorableSystem { n, factors })
    }

    /// One hypersurface per line, factors joined by `*` outside
    /// parentheses, e.g. `(x1)*(x1 - 1)*(x1 - 2)`.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let mut factors = Vec::new();
        let mut offset = 0;
        for line in text.split_inclusive('\n') {
            let body = line.split('#').next().unwrap_or("");
            if !body.trim().is_empty() {
                let mut fs = Vec::new();
                for (start, piece) in split_top_level(body) {
                    let p = Polynomial::parse(piece, n).map_err(|e| match e {
                        Error::Syntax { position, message } => Error::Syntax {
                            position: position + offset + start,
                            message,
                        },
                        other => other,
                    })?;
                    fs.push(p);
                }
                factors.push(fs);
            }
            offset += line.len();
        }
        FactorableSystem::new(n, factors)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn factors(&self) -> &[Vec<Polynomial>] {
        &self.factors
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.factors.iter().map(|fs| fs.len() as u32).collect()
    }

    pub fn polynomials(&self) -> Vec<Polynomial> {
        self.factors
            .iter()
            .map(|fs| fs.iter().fold(Polynomial::one(self.n), |acc, l| &acc * l))
            .collect()
    }

    pub fn manifold(&self) -> Result<Manifold> {
        Manifold::new(self.n, self.polynomials())
    }

    /// The system with hypersurface `t` dropped.
    pub fn without(&self, t: usize) -> FactorableSystem {
        let mut factors = self.factors.clone();
        factors.remove(t);
        FactorableSystem {
            n: self.n,
            factors,
        }
    }

    pub fn to_text(&self) -> String {
        self.factors
            .iter()
            .map(|fs| {
                let parts: Vec<String> = fs.iter().map(|l| format!("({l})")).collect();
                format!("{}\n", parts.join("*"))
            })
            .collect()
    }
}

/// Splits on `*` at parenthesis depth zero when every piece is
/// parenthesized, stripping that layer. A line like `x1^2*x2` stays whole.
/// Offsets index into `text`.
fn split_top_level(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let bytes = text.as_bytes();
    let mut pieces = Vec::new();
    for (i, &b) in bytes.iter().enumerate() {
        match b {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b'*' if depth == 0 => {
                pieces.push((start, i));
                start = i + 1;
            }
            _ => {}
        }
    }
    pieces.push((start, bytes.len()));
    let wrapped = pieces.iter().all(|&(a, b)| {
        let t = text[a..b].trim();
        t.starts_with('(') && t.ends_with(')')
    });
    if !wrapped {
        out.push((0, text));
        return out;
    }
    for (a, b) in pieces {
        let raw = &text[a..b];
        let lead = raw.len() - raw.trim_start().len();
        let t = raw.trim();
        out.push((a + lead + 1, &t[1..t.len() - 1]));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Intersection {
    pub nodes: NodeSet,
    /// The factor chosen on each hypersurface for each node.
    pub choices: Vec<Vec<usize>>,
}

/// All choice vectors, first hypersurface varying slowest.
pub fn choice_vectors(degrees: &[u32]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &k in degrees {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..k as usize).map(move |j| {
                    let mut c = prefix.clone();
                    c.push(j);
                    c
                })
            })
            .collect();
    }
    out
}

/// Intersection point of one affine-linear form from each hypersurface.
pub fn solve_linear_forms(n: usize, forms: &[&Polynomial]) -> Option<Point> {
    let mut a = Matrix::zeros(forms.len(), n);
    let mut b = Vec::with_capacity(forms.len());
    for (r, l) in forms.iter().enumerate() {
        for v in 0..n {
            a[(r, v)] = l.coefficient(&MultiIndex::unit(n, v));
        }
        b.push(-l.coefficient(&MultiIndex::zero(n)));
    }
    if forms.len() != n || !is_nonsingular(&a) {
        return None;
    }
    solve(&a, &b).map(Point::new)
}

/// Solves every choice of one linear form per hypersurface. Succeeds only
/// for a sufficient intersection: every choice uniquely solvable and all
/// `k_1...k_n` points distinct.
pub fn intersect_factorable(system: &FactorableSystem) -> Result<Intersection> {
    let n = system.n();
    if system.factors().len() != n {
        return Err(Error::InvalidProfile(format!(
            "need {n} hypersurfaces to meet in points, found {}",
            system.factors().len()
        )));
    }
    let choices = choice_vectors(&system.degrees());
    let mut points = Vec::with_capacity(choices.len());
    let mut seen: HashMap<Point, usize> = HashMap::new();
    for (idx, choice) in choices.iter().enumerate() {
        let forms: Vec<&Polynomial> = choice
            .iter()
            .enumerate()
            .map(|(h, &j)| &system.factors()[h][j])
            .collect();
        let q = solve_linear_forms(n, &forms).ok_or_else(|| Error::SingularSelection {
            choice: choice.clone(),
        })?;
        if let Some(&prev) = seen.get(&q) {
            return Err(Error::CoincidentPoints {
                first: choices[prev].clone(),
                second: choice.clone(),
            });
        }
        seen.insert(q.clone(), idx);
        points.push(q);
    }
    Ok(Intersection {
        nodes: NodeSet::new(n, points)?,
        choices,
    })
}

/// The nested PPSN of degree `m` inside the full intersection `points`:
/// rows picked greedily against the first `H_m` columns of the Vandermonde
/// on unselected monomials of degree at most `M_n`.
pub fn extract_nested_ppsn(points: &NodeSet, manifold: &Manifold, m: i64) -> Result<NodeSet> {
    let n = manifold.n();
    if manifold.s() != n {
        return Err(Error::Hypothesis(format!(
            "extraction needs {n} hypersurfaces, found {}",
            manifold.s()
        )));
    }
    let total = manifold.profile().bezout_number().expect("s = n");
    if points.len() as u64 != total {
        return Err(Error::NodeCountMismatch {
            expected: total,
            found: points.len(),
        });
    }
    points.check_on(manifold)?;
    let top = manifold.profile().excess();
    if m >= top {
        return Ok(points.clone());
    }
    if m < 0 {
        return Ok(NodeSet::empty(n));
    }
    let columns = unselected_basis(manifold, top)?;
    let v = vandermonde_on(points.points(), &columns);
    if columns.len() != points.len() || !is_nonsingular(&v) {
        return Err(Error::Configuration(
            "the Vandermonde on unselected monomials is singular; the points are not a sufficient intersection"
                .into(),
        ));
    }
    let width = hilbert_table(manifold.profile(), m as u32).H(m) as usize;
    let first: Vec<usize> = (0..width).collect();
    let rows = greedy_rows(&v.select_columns(&first));
    if rows.len() != width {
        return Err(Error::Configuration(format!(
            "greedy extraction found {} of {width} rows",
            rows.len()
        )));
    }
    Ok(points.subset(&rows))
}
