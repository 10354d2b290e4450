//! Dimension counts for polynomial spaces restricted to complete
//! intersections.
//!
//! Two independent routes are kept side by side: the coefficients of
//! `(1 - t^k1)...(1 - t^ks) (1 - t)^-n`, obtained by exact truncated series
//! multiplication, and the nested backward differences of the binomial
//! `e_m = C(m + n, n)`. [`dim_along`] insists they agree.

use serde::Serialize;

use crate::error::{Error, Result};

/// `C(m + n, n)`, zero for negative `m`.
pub fn binom_e(m: i64, n: u32) -> u64 {
    if m < 0 {
        return 0;
    }
    let m = m as u128;
    let mut acc: u128 = 1;
    for i in 1..=n as u128 {
        acc = acc * (m + i) / i;
    }
    u64::try_from(acc).expect("binomial overflows u64")
}

/// Number of monomials of degree exactly `m` in `n` variables.
pub fn monomials_of_degree(m: i64, n: u32) -> u64 {
    if n == 0 {
        return u64::from(m == 0);
    }
    binom_e(m, n - 1)
}

/// `e_m(k_1..k_s)` by the nested backward difference
/// `e_m(k_1..k_j) = e_m(k_1..k_{j-1}) - e_{m-k_j}(k_1..k_{j-1})`.
/// With no degrees this is `e_m` itself.
pub fn backward_diff_e(m: i64, n: u32, ks: &[u32]) -> i64 {
    match ks.split_last() {
        None => binom_e(m, n) as i64,
        Some((&k, rest)) => {
            backward_diff_e(m, n, rest) - backward_diff_e(m - i64::from(k), n, rest)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DegreeProfile {
    n: u32,
    ks: Vec<u32>,
}

impl DegreeProfile {
    pub fn new(n: u32, ks: Vec<u32>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidProfile("dimension must be at least 1".into()));
        }
        if ks.len() > n as usize {
            return Err(Error::InvalidProfile(format!(
                "{} hypersurfaces in dimension {n}",
                ks.len()
            )));
        }
        if ks.contains(&0) {
            return Err(Error::InvalidProfile("degrees must be at least 1".into()));
        }
        Ok(DegreeProfile { n, ks })
    }

    /// The whole space, no constraints.
    pub fn ambient(n: u32) -> Self {
        DegreeProfile { n, ks: Vec::new() }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn degrees(&self) -> &[u32] {
        &self.ks
    }

    pub fn s(&self) -> usize {
        self.ks.len()
    }

    /// `M_s = k_1 + ... + k_s - n`; may be negative.
    pub fn excess(&self) -> i64 {
        self.ks.iter().map(|&k| i64::from(k)).sum::<i64>() - i64::from(self.n)
    }

    /// `L_s = min k_i`.
    pub fn min_degree(&self) -> Option<u32> {
        self.ks.iter().copied().min()
    }

    /// `N = k_1 ... k_n`, only for complete intersections of points.
    pub fn bezout_number(&self) -> Option<u64> {
        (self.s() == self.n as usize).then(|| self.ks.iter().map(|&k| u64::from(k)).product())
    }

    /// Profile of the first `s` hypersurfaces.
    pub fn prefix(&self, s: usize) -> DegreeProfile {
        DegreeProfile {
            n: self.n,
            ks: self.ks[..s].to_vec(),
        }
    }

    /// Profile with hypersurface `t` (0-based) dropped.
    pub fn without(&self, t: usize) -> DegreeProfile {
        let mut ks = self.ks.clone();
        ks.remove(t);
        DegreeProfile { n: self.n, ks }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertTable {
    pub profile: DegreeProfile,
    pub mmax: u32,
    /// `h_j`, the coefficient of `t^j`.
    pub h: Vec<u64>,
    /// `H_j = h_0 + ... + h_j`.
    pub cumulative: Vec<u64>,
    /// `d_j`, dimension of the degree-`j` part of the leading-form ideal.
    pub d: Vec<u64>,
}

pub fn hilbert_table(profile: &DegreeProfile, mmax: u32) -> HilbertTable {
    let len = mmax as usize + 1;
    let mut numerator = vec![0i128; len];
    numerator[0] = 1;
    for &k in profile.degrees() {
        let k = k as usize;
        for j in (k..len).rev() {
            numerator[j] -= numerator[j - k];
        }
    }
    let n = profile.n();
    let denominator: Vec<i128> = (0..len)
        .map(|j| i128::from(monomials_of_degree(j as i64, n)))
        .collect();
    let mut h = Vec::with_capacity(len);
    for j in 0..len {
        let c: i128 = (0..=j).map(|i| numerator[i] * denominator[j - i]).sum();
        h.push(u64::try_from(c).expect("negative Hilbert coefficient"));
    }
    let mut cumulative = Vec::with_capacity(len);
    let mut acc = 0u64;
    for &v in &h {
        acc += v;
        cumulative.push(acc);
    }
    let d = h
        .iter()
        .enumerate()
        .map(|(j, &v)| monomials_of_degree(j as i64, n) - v)
        .collect();
    HilbertTable {
        profile: profile.clone(),
        mmax,
        h,
        cumulative,
        d,
    }
}

impl HilbertTable {
    pub fn h(&self, j: i64) -> u64 {
        if j < 0 {
            0
        } else {
            self.h[j as usize]
        }
    }

    #[allow(non_snake_case)]
    pub fn H(&self, j: i64) -> u64 {
        if j < 0 {
            0
        } else {
            self.cumulative[j as usize]
        }
    }
}

/// `dim P_m` restricted to the manifold with this profile, i.e. `H_m`.
/// Negative `m` is the zero space.
pub fn dim_along(m: i64, profile: &DegreeProfile) -> Result<u64> {
    if m < 0 {
        return Ok(0);
    }
    let series = hilbert_table(profile, m as u32).H(m);
    let difference = backward_diff_e(m, profile.n(), profile.degrees());
    if difference < 0 || difference as u64 != series {
        return Err(Error::CrossCheck {
            m,
            series,
            difference: difference.max(0) as u64,
        });
    }
    Ok(series)
}

/// Closed form `k_1...k_{n-1} (2m + n + 1 - sum k) / 2` for curves
/// (`s = n - 1`), valid once `m >= M_{n-1}`.
pub fn curve_count_closed_form(m: i64, profile: &DegreeProfile) -> Option<i64> {
    if profile.s() + 1 != profile.n() as usize || m < profile.excess() {
        return None;
    }
    let prod: i64 = profile.degrees().iter().map(|&k| i64::from(k)).product();
    let sum: i64 = profile.degrees().iter().map(|&k| i64::from(k)).sum();
    let twice = prod * (2 * m + i64::from(profile.n()) + 1 - sum);
    debug_assert_eq!(twice % 2, 0);
    Some(twice / 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn profile(n: u32, ks: &[u32]) -> DegreeProfile {
        DegreeProfile::new(n, ks.to_vec()).unwrap()
    }

    /// Series oracle written independently of `hilbert_table`: expand the
    /// rational function by repeated division by `(1 - t)`, i.e. prefix sums.
    fn series_oracle(n: u32, ks: &[u32], len: usize) -> Vec<i64> {
        let mut c = vec![0i64; len];
        c[0] = 1;
        for &k in ks {
            let mut next = c.clone();
            for j in k as usize..len {
                next[j] -= c[j - k as usize];
            }
            c = next;
        }
        for _ in 0..n {
            for j in 1..len {
                c[j] += c[j - 1];
            }
        }
        c
    }

    #[test]
    fn binom_examples() {
        assert_eq!(binom_e(2, 2), 6);
        assert_eq!(binom_e(-1, 2), 0);
        assert_eq!(binom_e(-1, 5), 0);
        assert_eq!(binom_e(2, 3), 10);
        assert_eq!(binom_e(0, 0), 1);
    }

    #[test]
    fn backward_difference_examples() {
        assert_eq!(backward_diff_e(3, 2, &[1]), 4);
        assert_eq!(backward_diff_e(2, 2, &[2]), 5);
        assert_eq!(backward_diff_e(2, 3, &[2, 2, 2]), 7);
        assert_eq!(backward_diff_e(2, 3, &[2, 2]), 8);
        assert_eq!(backward_diff_e(2, 3, &[2]), 9);
        assert_eq!(backward_diff_e(2, 3, &[]), 10);
    }

    #[test]
    fn table_examples() {
        let t = hilbert_table(&profile(3, &[2, 2, 2]), 3);
        assert_eq!(t.h, series_oracle(3, &[2, 2, 2], 4).iter().map(|&v| v as u64).collect::<Vec<_>>());
        assert_eq!(t.h, vec![1, 3, 3, 1]);
        assert_eq!(t.H(3), 8);

        let t = hilbert_table(&profile(2, &[1]), 4);
        assert_eq!(t.h, vec![1, 1, 1, 1, 1]);
        for m in 0..=4 {
            assert_eq!(t.H(m), m as u64 + 1);
        }

        let t = hilbert_table(&profile(2, &[3, 3]), 6);
        assert_eq!(t.h, vec![1, 2, 3, 2, 1, 0, 0]);
        assert_eq!(t.H(3), 8);
        assert_eq!(t.H(4), 9);
        assert_eq!(t.d[3], 2);
    }

    #[test]
    fn dim_along_examples() {
        let p = profile(3, &[2, 2, 2]);
        for m in 3..8 {
            assert_eq!(dim_along(m, &p).unwrap(), 8);
        }
        assert_eq!(dim_along(2, &profile(3, &[2, 2])).unwrap(), 8);
        let curve = profile(3, &[2, 2]);
        for m in 1..10 {
            assert_eq!(
                dim_along(m, &curve).unwrap() as i64,
                curve_count_closed_form(m, &curve).unwrap()
            );
            assert_eq!(dim_along(m, &curve).unwrap(), 4 * m as u64);
        }
        assert_eq!(dim_along(-1, &curve).unwrap(), 0);
        assert_eq!(dim_along(3, &DegreeProfile::ambient(2)).unwrap(), 10);
    }

    #[test]
    fn low_degree_and_saturation() {
        for n in 1..=4u32 {
            for k in 1..=3u32 {
                let ks = vec![k; n as usize];
                let p = profile(n, &ks);
                let t = hilbert_table(&p, 12);
                for j in 0..k as i64 {
                    assert_eq!(t.h(j), monomials_of_degree(j, n));
                }
                for j in p.excess() + 1..=12 {
                    assert_eq!(t.h(j), 0);
                }
            }
        }
    }

    #[test]
    fn negative_excess_line_in_space() {
        let p = profile(3, &[1]);
        assert_eq!(p.excess(), -2);
        assert_eq!(dim_along(2, &p).unwrap(), 6);
    }

    #[test]
    fn monotone_under_constraints() {
        let ks = [3, 2, 4, 1];
        for n in 1..=4u32 {
            for s in 0..n as usize {
                let a = hilbert_table(&profile(n, &ks[..s]), 10);
                let b = hilbert_table(&profile(n, &ks[..s + 1]), 10);
                for m in 0..=10 {
                    assert!(a.H(m) >= b.H(m));
                }
            }
        }
    }

    #[test]
    fn invalid_profiles() {
        assert!(DegreeProfile::new(2, vec![1, 1, 1]).is_err());
        assert!(DegreeProfile::new(2, vec![0]).is_err());
        assert!(DegreeProfile::new(0, vec![]).is_err());
    }
}
