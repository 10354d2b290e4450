//! Elementary-item matrices of the leading-form ideal, the selected and
//! unselected monomial split, reduction modulo a manifold and H-base
//! decompositions.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::dimension::{hilbert_table, monomials_of_degree, DegreeProfile};
use crate::error::{Error, Result};
use crate::linalg::{exact_rank, row_reduce, solve, Echelon, Matrix};
use crate::mpoly::{int, monomial_basis, MultiIndex, Point, Polynomial, Scalar};
use crate::nodes::{verify_ppsn, NodeSet, Verdict};

/// Common zero set of `f_1..f_s` in affine `n`-space, together with the
/// leading forms `g_i` and optional witness hypersurfaces that complete the
/// system to `n` equations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Manifold {
    n: usize,
    polynomials: Vec<Polynomial>,
    leading_forms: Vec<Polynomial>,
    profile: DegreeProfile,
    witnesses: Vec<Polynomial>,
}

impl Manifold {
    pub fn new(n: usize, polynomials: Vec<Polynomial>) -> Result<Self> {
        let mut ks = Vec::with_capacity(polynomials.len());
        let mut leading_forms = Vec::with_capacity(polynomials.len());
        for p in &polynomials {
            if p.n() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: p.n(),
                });
            }
            let lf = p.leading_form()?;
            ks.push(p.degree().unwrap_or(0));
            leading_forms.push(lf);
        }
        let profile = DegreeProfile::new(n as u32, ks)?;
        Ok(Manifold {
            n,
            polynomials,
            leading_forms,
            profile,
            witnesses: Vec::new(),
        })
    }

    /// The whole space (`s = 0`).
    pub fn ambient(n: usize) -> Self {
        Manifold {
            n,
            polynomials: Vec::new(),
            leading_forms: Vec::new(),
            profile: DegreeProfile::ambient(n as u32),
            witnesses: Vec::new(),
        }
    }

    /// Parses one polynomial per nonblank line.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        Manifold::new(n, parse_polynomial_lines(text, n)?)
    }

    /// Attaches hypersurfaces completing a sufficient intersection; together
    /// with the defining polynomials they must number exactly `n`.
    pub fn with_witnesses(mut self, witnesses: Vec<Polynomial>) -> Result<Self> {
        if self.polynomials.len() + witnesses.len() != self.n {
            return Err(Error::InvalidProfile(format!(
                "{} polynomials and {} witnesses do not complete dimension {}",
                self.polynomials.len(),
                witnesses.len(),
                self.n
            )));
        }
        // validates degrees and dimensions
        Manifold::new(self.n, witnesses.clone())?;
        self.witnesses = witnesses;
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn s(&self) -> usize {
        self.polynomials.len()
    }

    pub fn polynomials(&self) -> &[Polynomial] {
        &self.polynomials
    }

    pub fn leading_forms(&self) -> &[Polynomial] {
        &self.leading_forms
    }

    pub fn profile(&self) -> &DegreeProfile {
        &self.profile
    }

    pub fn witnesses(&self) -> &[Polynomial] {
        &self.witnesses
    }

    pub fn degree_of(&self, i: usize) -> u32 {
        self.profile.degrees()[i]
    }

    /// The manifold cut out by the first `s` polynomials.
    pub fn prefix(&self, s: usize) -> Manifold {
        Manifold::new(self.n, self.polynomials[..s].to_vec()).expect("prefix of a valid manifold")
    }

    /// The manifold with polynomial `t` (0-based) dropped.
    pub fn without(&self, t: usize) -> Manifold {
        let mut ps = self.polynomials.clone();
        ps.remove(t);
        Manifold::new(self.n, ps).expect("sub-system of a valid manifold")
    }

    /// Defining polynomials plus witnesses as an `n`-equation system, if the
    /// system is complete.
    pub fn completed(&self) -> Option<Manifold> {
        if self.s() == self.n {
            return Some(self.clone());
        }
        if self.witnesses.is_empty() {
            return None;
        }
        let mut ps = self.polynomials.clone();
        ps.extend(self.witnesses.iter().cloned());
        Manifold::new(self.n, ps).ok()
    }

    pub fn contains(&self, q: &Point) -> Result<bool> {
        for f in &self.polynomials {
            if !f.evaluate(q)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Exact residual check of every point against every defining polynomial.
    pub fn check_points(&self, points: &[Point]) -> Result<()> {
        for (pi, q) in points.iter().enumerate() {
            for (fi, f) in self.polynomials.iter().enumerate() {
                let r = f.evaluate(q)?;
                if !r.is_zero() {
                    return Err(Error::OffManifold {
                        point: pi,
                        coords: q.to_string(),
                        polynomial: fi,
                        residual: r.to_string(),
                    });
                }
            }
        }
        Ok(())
    }
}

pub(crate) fn parse_polynomial_lines(text: &str, n: usize) -> Result<Vec<Polynomial>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let body = line.split('#').next().unwrap_or("");
        if !body.trim().is_empty() {
            let p = Polynomial::parse(body, n).map_err(|e| match e {
                Error::Syntax { position, message } => Error::Syntax {
                    position: position + offset,
                    message,
                },
                other => other,
            })?;
            out.push(p);
        }
        offset += line.len();
    }
    Ok(out)
}

/// The product `X^shift * g_generator`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ElementaryItem {
    pub shift: Vec<u32>,
    pub generator: usize,
}

/// Selected and unselected degree-`m` monomials from the elementary-item
/// matrix `G_m` of the leading forms.
#[derive(Clone, Debug)]
pub struct MonomialSelection {
    pub degree: u32,
    /// Degree-`m` monomials, the columns of `G_m`.
    pub columns: Vec<MultiIndex>,
    pub items: Vec<ElementaryItem>,
    pub matrix: Matrix,
    /// Column indices of the selected monomials (`T_m`).
    pub selected: Vec<usize>,
    /// Column indices of the unselected monomials (`T'_m`).
    pub unselected: Vec<usize>,
    echelon: Echelon,
}

impl MonomialSelection {
    pub fn selected_monomials(&self) -> Vec<MultiIndex> {
        self.selected.iter().map(|&j| self.columns[j].clone()).collect()
    }

    pub fn unselected_monomials(&self) -> Vec<MultiIndex> {
        self.unselected.iter().map(|&j| self.columns[j].clone()).collect()
    }

    /// Splits a homogeneous degree-`m` polynomial as a combination of
    /// elementary items (weights per item) plus a part supported on the
    /// unselected monomials.
    pub fn split(&self, h: &Polynomial) -> (Vec<(usize, Scalar)>, Polynomial) {
        let mut v = vec![Scalar::zero(); self.columns.len()];
        for (a, c) in h.terms() {
            let j = self
                .columns
                .binary_search(a)
                .expect("split expects a homogeneous polynomial of the selection degree");
            v[j] = c.clone();
        }
        let mut weights = vec![Scalar::zero(); self.items.len()];
        for (k, &p) in self.echelon.pivot_cols.iter().enumerate() {
            let factor = v[p].clone();
            if factor.is_zero() {
                continue;
            }
            for (vj, rj) in v.iter_mut().zip(&self.echelon.reduced[k]) {
                *vj -= &factor * rj;
            }
            for (w, t) in weights.iter_mut().zip(&self.echelon.transform[k]) {
                *w += &factor * t;
            }
        }
        let rest = Polynomial::from_terms(h.n(), self.columns.iter().cloned().zip(v));
        let weights = weights
            .into_iter()
            .enumerate()
            .filter(|(_, w)| !w.is_zero())
            .collect();
        (weights, rest)
    }
}

fn elementary_items(
    n: usize,
    forms: &[Polynomial],
    degrees: &[u32],
    m: u32,
    columns: &[MultiIndex],
) -> (Vec<ElementaryItem>, Matrix) {
    let mut items = Vec::new();
    let mut rows = Vec::new();
    for (i, (g, &k)) in forms.iter().zip(degrees).enumerate() {
        if k > m {
            continue;
        }
        for alpha in MultiIndex::of_degree(n, m - k) {
            let prod = g.mul_monomial(&alpha);
            let mut row = vec![Scalar::zero(); columns.len()];
            for (a, c) in prod.terms() {
                row[columns.binary_search(a).expect("homogeneous item")] = c.clone();
            }
            rows.push(row);
            items.push(ElementaryItem {
                shift: alpha.exponents().to_vec(),
                generator: i,
            });
        }
    }
    (items, Matrix::from_rows(columns.len(), rows))
}

/// Builds `G_m` and picks the leftmost maximal independent column set.
///
/// Fails when the rank falls short of `d_m(s)`, which means the leading
/// forms do not meet only at the origin.
pub fn select_monomials(manifold: &Manifold, m: u32) -> Result<MonomialSelection> {
    let n = manifold.n();
    let columns = MultiIndex::of_degree(n, m);
    let (items, matrix) = elementary_items(
        n,
        manifold.leading_forms(),
        manifold.profile().degrees(),
        m,
        &columns,
    );
    let profile = exact_rank(&matrix);
    let expected = hilbert_table(manifold.profile(), m).d[m as usize];
    if profile.rank as u64 != expected {
        return Err(Error::RankDeficient {
            degree: m,
            rank: profile.rank,
            expected,
        });
    }
    let selected = profile.pivot_columns();
    let unselected = (0..columns.len())
        .filter(|j| !selected.contains(j))
        .collect();
    let echelon = row_reduce(&matrix, true);
    debug_assert_eq!(echelon.pivot_cols, selected);
    Ok(MonomialSelection {
        degree: m,
        columns,
        items,
        matrix,
        selected,
        unselected,
        echelon,
    })
}

/// Unselected monomials of every degree `0..=m`, in basis order. Their
/// count is `H_m(s)`.
pub fn unselected_basis(manifold: &Manifold, m: i64) -> Result<Vec<MultiIndex>> {
    let mut out = Vec::new();
    for t in 0..=m.max(-1) {
        if t < 0 {
            break;
        }
        out.extend(select_monomials(manifold, t as u32)?.unselected_monomials());
    }
    Ok(out)
}

/// True iff the leading forms of the completed system have no common zero
/// besides the origin, checked as full rank of the degree-`(M_n + 1)`
/// elementary items. Systems with `s < n` and no witnesses are not
/// certified.
pub fn infinity_check(manifold: &Manifold) -> bool {
    let Some(full) = manifold.completed() else {
        return false;
    };
    let n = full.n();
    let degree = full.profile().excess() + 1;
    let degree = degree as u32;
    let columns = MultiIndex::of_degree(n, degree);
    let (_, g) = elementary_items(
        n,
        full.leading_forms(),
        full.profile().degrees(),
        degree,
        &columns,
    );
    exact_rank(&g).rank as u64 == monomials_of_degree(i64::from(degree), n as u32)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedForm {
    /// Supported on unselected monomials only.
    pub remainder: Polynomial,
    /// `c_j` with `original = remainder + sum c_j f_j`.
    pub cofactors: Vec<Polynomial>,
}

impl ReducedForm {
    pub fn reexpand(&self, manifold: &Manifold) -> Polynomial {
        self.cofactors
            .iter()
            .zip(manifold.polynomials())
            .fold(self.remainder.clone(), |acc, (c, f)| &acc + &(c * f))
    }
}

/// Rewrites `f` as a combination of unselected monomials plus an element of
/// the ideal, peeling one homogeneous degree at a time from the top.
pub fn reduce_modulo(f: &Polynomial, manifold: &Manifold) -> Result<ReducedForm> {
    let n = manifold.n();
    if f.n() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: f.n(),
        });
    }
    let mut current = f.clone();
    let mut remainder = Polynomial::zero(n);
    let mut cofactors = vec![Polynomial::zero(n); manifold.s()];
    let Some(top) = f.degree() else {
        return Ok(ReducedForm {
            remainder,
            cofactors,
        });
    };
    for t in (0..=top).rev() {
        let h = current.homogeneous_part(t);
        if h.is_zero() {
            continue;
        }
        let sel = select_monomials(manifold, t)?;
        let (weights, rest) = sel.split(&h);
        for (i, w) in weights {
            let item = &sel.items[i];
            let c = Polynomial::monomial(MultiIndex::new(item.shift.clone()), w);
            current = &current - &(&c * &manifold.polynomials()[item.generator]);
            cofactors[item.generator] = &cofactors[item.generator] + &c;
        }
        current = &current - &rest;
        debug_assert!(current.homogeneous_part(t).is_zero());
        remainder = &remainder + &rest;
    }
    debug_assert!(current.is_zero());
    Ok(ReducedForm {
        remainder,
        cofactors,
    })
}

/// True iff every term of `p` sits on an unselected monomial.
pub fn is_reduced(p: &Polynomial, manifold: &Manifold) -> Result<bool> {
    let Some(top) = p.degree() else {
        return Ok(true);
    };
    for t in 0..=top {
        let h = p.homogeneous_part(t);
        if h.is_zero() {
            continue;
        }
        let sel = select_monomials(manifold, t)?;
        let selected = sel.selected_monomials();
        if h.terms().any(|(a, _)| selected.contains(a)) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    /// `alpha_i` with `deg alpha_i <= degree - k_i`, zero when `degree < k_i`.
    pub cofactors: Vec<Polynomial>,
    pub degree: i64,
}

impl Decomposition {
    pub fn reexpand(&self, manifold: &Manifold) -> Polynomial {
        self.cofactors
            .iter()
            .zip(manifold.polynomials())
            .fold(Polynomial::zero(manifold.n()), |acc, (a, f)| &acc + &(a * f))
    }

    pub fn respects_bounds(&self, manifold: &Manifold) -> bool {
        self.cofactors.iter().enumerate().all(|(i, a)| {
            a.degree_or_neg() + i64::from(manifold.degree_of(i)) <= self.degree || a.is_zero()
        })
    }
}

/// Writes `g` as `sum alpha_i f_i` with `deg alpha_i + k_i <= degree` by one
/// exact linear solve in the cofactor coefficients.
///
/// When `ppsn` is given, `g` must vanish on it; a failed solve is then
/// answered with the node set's improperness certificate if it has one.
pub fn hbase_decompose(
    g: &Polynomial,
    manifold: &Manifold,
    degree: i64,
    ppsn: Option<&NodeSet>,
) -> Result<Decomposition> {
    let n = manifold.n();
    if g.degree_or_neg() > degree {
        return Err(Error::Hypothesis(format!(
            "polynomial of degree {} exceeds the bound {degree}",
            g.degree_or_neg()
        )));
    }
    if let Some(nodes) = ppsn {
        for (i, q) in nodes.points().iter().enumerate() {
            if !g.evaluate(q)?.is_zero() {
                return Err(Error::Hypothesis(format!(
                    "polynomial does not vanish at node {i} ({q})"
                )));
            }
        }
    }
    let rows = monomial_basis(n, degree);
    let mut unknowns: Vec<(usize, MultiIndex)> = Vec::new();
    for i in 0..manifold.s() {
        let b = monomial_basis(n, degree - i64::from(manifold.degree_of(i)));
        unknowns.extend(b.monomials().iter().map(|a| (i, a.clone())));
    }
    let mut a = Matrix::zeros(rows.len(), unknowns.len());
    for (col, (i, beta)) in unknowns.iter().enumerate() {
        for (alpha, c) in manifold.polynomials()[*i].mul_monomial(beta).terms() {
            let r = rows.index_of(alpha).expect("degree bound keeps products in range");
            a[(r, col)] = c.clone();
        }
    }
    let rhs = rows.coordinates(g).expect("degree checked above");
    let Some(x) = solve(&a, &rhs) else {
        if let Some(nodes) = ppsn {
            let cert = verify_ppsn(nodes, manifold, degree)?;
            if cert.verdict == Verdict::Improper {
                return Err(Error::Improper(Box::new(cert)));
            }
        }
        return Err(Error::NoDecomposition);
    };
    let mut cofactors = vec![Polynomial::zero(n); manifold.s()];
    for ((i, beta), v) in unknowns.into_iter().zip(x) {
        cofactors[i].add_term(beta, v);
    }
    Ok(Decomposition { cofactors, degree })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeTrials {
    pub degree: u32,
    pub trials: usize,
    pub passed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HbaseReport {
    pub seed: u64,
    pub per_degree: Vec<DegreeTrials>,
    /// Ideal members that could not be decomposed within the degree bounds.
    pub counterexamples: Vec<String>,
}

impl HbaseReport {
    pub fn all_passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Random polynomial of degree at most `d` with small integer coefficients,
/// about half of them zero.
pub fn random_polynomial(rng: &mut impl Rng, n: usize, d: i64) -> Polynomial {
    let basis = monomial_basis(n, d);
    Polynomial::from_terms(
        n,
        basis.monomials().iter().map(|a| {
            let c = if rng.random_bool(0.5) {
                0
            } else {
                rng.random_range(-3..=3)
            };
            (a.clone(), int(c))
        }),
    )
}

/// Random ideal member of degree at most `m`. With two or more generators
/// the sample also carries `u * (g_j f_i - g_i f_j)`, whose naive
/// expansion `u g_j * f_i - u g_i * f_j` overshoots the degree bound.
pub fn random_ideal_member(rng: &mut impl Rng, manifold: &Manifold, m: i64) -> Polynomial {
    let n = manifold.n();
    let mut g = Polynomial::zero(n);
    for (i, f) in manifold.polynomials().iter().enumerate() {
        let r = random_polynomial(rng, n, m - i64::from(manifold.degree_of(i)));
        g = &g + &(&r * f);
    }
    let s = manifold.s();
    if s >= 2 {
        let i = rng.random_range(0..s);
        let j = (i + 1 + rng.random_range(0..s - 1)) % s;
        let (ki, kj) = (manifold.degree_of(i), manifold.degree_of(j));
        let du = m + 1 - i64::from(ki) - i64::from(kj);
        if du >= 0 {
            let u = random_polynomial(rng, n, du);
            let fs = manifold.polynomials();
            let gs = manifold.leading_forms();
            let twisted = &(&gs[j] * &fs[i]) - &(&gs[i] * &fs[j]);
            g = &g + &(&u * &twisted);
        }
    }
    g
}

/// Samples ideal members of each degree up to `mmax` and decomposes each
/// with the H-base degree bound `deg alpha_i + k_i <= deg g`.
pub fn verify_hbase(
    manifold: &Manifold,
    mmax: u32,
    trials: usize,
    seed: u64,
) -> Result<HbaseReport> {
    if !infinity_check(manifold) {
        return Err(Error::NotSufficientAtInfinity);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut per_degree = Vec::new();
    let mut counterexamples = Vec::new();
    for m in 0..=mmax {
        let mut passed = 0;
        for _ in 0..trials {
            let g = random_ideal_member(&mut rng, manifold, i64::from(m));
            let bound = g.degree_or_neg();
            let ok = match hbase_decompose(&g, manifold, bound, None) {
                Ok(d) => d.respects_bounds(manifold) && d.reexpand(manifold) == g,
                Err(Error::NoDecomposition) => false,
                Err(e) => return Err(e),
            };
            if ok {
                passed += 1;
            } else {
                counterexamples.push(g.to_string());
            }
        }
        per_degree.push(DegreeTrials {
            degree: m,
            trials,
            passed,
        });
    }
    Ok(HbaseReport {
        seed,
        per_degree,
        counterexamples,
    })
}
