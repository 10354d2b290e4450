//! The ten acceptance criteria. Runs without the libtest harness so every
//! criterion prints exactly one PASS or FAIL line; the process fails if any
//! criterion does.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use ppsn::construct::{
    cb_check, cb_reduce, gen_conic_nodes, gen_line_nodes, CbMode, CbPartition, Line, Parabola,
    Parametrization,
};
use ppsn::dimension::{backward_diff_e, hilbert_table, DegreeProfile};
use ppsn::fixtures;
use ppsn::linalg::{is_nonsingular, kernel_basis};
use ppsn::macaulay::{
    hbase_decompose, is_reduced, random_ideal_member, random_polynomial, reduce_modulo,
    verify_hbase,
};
use ppsn::mpoly::{frac, int, monomial_basis, Polynomial, Scalar};
use ppsn::nodes::{extract_nested_ppsn, intersect_factorable, vandermonde_on, verify_ppsn};
use ppsn::{Manifold, NodeSet};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit_s: f64, what: &str) -> Result<(), String> {
    ensure(elapsed.as_secs_f64() < limit_s, || {
        format!("{what} took {:.2} s, limit {limit_s} s", elapsed.as_secs_f64())
    })
}

/// Every ordered degree tuple with entries in `1..=4` for `1 <= s <= n <= 4`.
fn profile_sweep(full_only: bool) -> Vec<(u32, Vec<u32>)> {
    let mut out = Vec::new();
    for n in 1..=4u32 {
        let lo = if full_only { n } else { 1 };
        for s in lo..=n {
            let mut ks = vec![1u32; s as usize];
            loop {
                out.push((n, ks.clone()));
                let mut i = 0;
                while i < ks.len() && ks[i] == 4 {
                    ks[i] = 1;
                    i += 1;
                }
                if i == ks.len() {
                    break;
                }
                ks[i] += 1;
            }
        }
    }
    out
}

fn c1_dimension_cross_check() -> Outcome {
    let start = Instant::now();
    let mut cases = 0;
    for (n, ks) in profile_sweep(false) {
        let table = hilbert_table(&DegreeProfile::new(n, ks.clone()).unwrap(), 12);
        for m in 0..=12i64 {
            let series = table.H(m) as i64;
            let diff = backward_diff_e(m, n, &ks);
            ensure(series == diff, || {
                format!("n={n} ks={ks:?} m={m}: series {series} vs difference {diff}")
            })?;
            cases += 1;
        }
    }
    within(start.elapsed(), 5.0, "sweep")?;
    Ok(format!("{cases} (profile, m) cases agree"))
}

fn c2_saturation() -> Outcome {
    let mut cases = 0;
    for (n, ks) in profile_sweep(true) {
        let profile = DegreeProfile::new(n, ks.clone()).unwrap();
        let big_m = profile.excess();
        let top = big_m + 12;
        let table = hilbert_table(&profile, top as u32);
        let product: u64 = ks.iter().map(|&k| u64::from(k)).product();
        for m in big_m.max(0)..=top {
            ensure(table.H(m) == product, || {
                format!("n={n} ks={ks:?} m={m}: H = {} but N = {product}", table.H(m))
            })?;
            ensure(backward_diff_e(m, n, &ks) == product as i64, || {
                format!("n={n} ks={ks:?} m={m}: backward difference differs from N")
            })?;
            cases += 1;
        }
    }
    Ok(format!("{cases} saturated cases equal the Bezout number"))
}

fn c3_curve_closed_form() -> Outcome {
    let mut cases = 0;
    for n in 1..=4u32 {
        let s = (n - 1) as usize;
        let mut ks = vec![1u32; s];
        loop {
            let profile = DegreeProfile::new(n, ks.clone()).unwrap();
            let big_m = profile.excess();
            let top = big_m.max(0) + 12;
            let table = hilbert_table(&profile, top as u32);
            let prod: i64 = ks.iter().map(|&k| i64::from(k)).product();
            let sum: i64 = ks.iter().map(|&k| i64::from(k)).sum();
            for m in big_m.max(0)..=top {
                let twice = prod * (2 * m + i64::from(n) + 1 - sum);
                ensure(twice % 2 == 0 && table.H(m) as i64 == twice / 2, || {
                    format!("n={n} ks={ks:?} m={m}: H = {} vs closed form {twice}/2", table.H(m))
                })?;
                cases += 1;
            }
            let mut i = 0;
            while i < ks.len() && ks[i] == 4 {
                ks[i] = 1;
                i += 1;
            }
            if i == ks.len() {
                break;
            }
            ks[i] += 1;
        }
    }
    Ok(format!("{cases} curve cases match the closed form"))
}

fn c4_example_lines() -> Outcome {
    let start = Instant::now();
    let horizontal = Line::horizontal(int(0));
    let slanted = Line::new(ppsn::Point::new(vec![frac(1, 2), int(-3)]), vec![int(2), frac(5, 3)]);
    for line in [&horizontal, &slanted] {
        let manifold = Manifold::new(2, vec![line.polynomial()]).unwrap();
        for m in 0..=10i64 {
            let params: Vec<Scalar> = (0..=m).map(|t| frac(t * t * t + 3 * t, 7)).collect();
            for nodes in [
                gen_line_nodes(line, m, None).unwrap(),
                gen_line_nodes(line, m, Some(&params)).unwrap(),
            ] {
                ensure(nodes.len() as i64 == m + 1, || "wrong point count".into())?;
                let cert = verify_ppsn(&nodes, &manifold, m).map_err(|e| e.to_string())?;
                ensure(cert.is_proper() && cert.replay(&nodes), || {
                    format!("line nodes improper at m={m}")
                })?;
            }
        }
    }
    let lattice = fixtures::radon_lattice(6).map_err(|e| e.to_string())?;
    let plane = Manifold::ambient(2);
    for (m, level) in lattice.iter().enumerate() {
        let m = m as i64;
        let expected = ((m + 1) * (m + 2) / 2) as usize;
        ensure(level.nodes.len() == expected, || {
            format!("lattice level {m} has {} points", level.nodes.len())
        })?;
        let cert = verify_ppsn(&level.nodes, &plane, m).map_err(|e| e.to_string())?;
        ensure(cert.is_proper() && cert.replay(&level.nodes), || {
            format!("lattice level {m} improper")
        })?;
    }
    within(start.elapsed(), 10.0, "line checks")?;
    Ok("line nodes m<=10 proper; Radon lattice sizes 1,3,...,28 proper".into())
}

fn c5_example_conic() -> Outcome {
    let parabola = Parabola { shift: int(0) };
    let manifold = Manifold::new(2, vec![parabola.polynomial()]).unwrap();
    for m in 0..=6i64 {
        let nodes = gen_conic_nodes(&parabola, m, None).unwrap();
        ensure(nodes.len() as i64 == 2 * m + 1, || "wrong point count".into())?;
        let cert = verify_ppsn(&nodes, &manifold, m).map_err(|e| e.to_string())?;
        ensure(cert.is_proper() && cert.replay(&nodes), || {
            format!("parabola nodes improper at m={m}")
        })?;
    }
    let (six, fifteen) = fixtures::conic_superposition().map_err(|e| e.to_string())?;
    let plane = Manifold::ambient(2);
    for (set, m, count) in [(&six, 2, 6), (&fifteen, 4, 15)] {
        ensure(set.nodes.len() == count, || format!("expected {count} points"))?;
        let cert = verify_ppsn(&set.nodes, &plane, m).map_err(|e| e.to_string())?;
        ensure(cert.is_proper(), || format!("{count}-point set improper"))?;
        let v = vandermonde_on(set.nodes.points(), monomial_basis(2, m).monomials());
        ensure(is_nonsingular(&v), || format!("{count}-point Vandermonde singular"))?;
    }
    Ok("parabola nodes m<=6 proper; 6- and 15-point superpositions proper".into())
}

fn c6_example_cube() -> Outcome {
    let start = Instant::now();
    let chain = fixtures::cube_chain().map_err(|e| e.to_string())?;
    let full = fixtures::cube_manifold();
    let manifolds = [full.clone(), full.prefix(2), full.prefix(1), Manifold::ambient(3)];
    let ks: [&[u32]; 4] = [&[2, 2, 2], &[2, 2], &[2], &[]];
    let mut sizes = Vec::new();
    for ((step, manifold), ks) in chain.iter().zip(&manifolds).zip(ks) {
        let expected = backward_diff_e(2, 3, ks) as usize;
        ensure(step.nodes.len() == expected, || {
            format!("step along {ks:?} has {} points, expected {expected}", step.nodes.len())
        })?;
        let cert = verify_ppsn(&step.nodes, manifold, 2).map_err(|e| e.to_string())?;
        ensure(cert.is_proper() && cert.replay(&step.nodes), || {
            format!("step along {ks:?} improper")
        })?;
        sizes.push(step.nodes.len());
    }
    ensure(sizes == [7, 8, 9, 10], || format!("sizes {sizes:?}"))?;
    within(start.elapsed(), 5.0, "cube chain")?;
    Ok("cube chain 7 -> 8 -> 9 -> 10 certified at degree 2".into())
}

fn collinear(p: &ppsn::Point, q: &ppsn::Point, r: &ppsn::Point) -> bool {
    let (a, b, c) = (p.coords(), q.coords(), r.coords());
    ((&b[0] - &a[0]) * (&c[1] - &a[1]) - (&b[1] - &a[1]) * (&c[0] - &a[0])).is_zero()
}

fn c7_cayley_bacharach_grid() -> Outcome {
    let (manifold, full) = fixtures::grid3();
    let basis3 = monomial_basis(2, 3);
    for omit in 0..9 {
        let part = CbPartition::from_indices(full.clone(), &[omit]).unwrap();
        let rest = part.remaining();
        let cert = verify_ppsn(&rest, &manifold, 3).map_err(|e| e.to_string())?;
        ensure(cert.is_proper(), || format!("8-subset without {omit} improper"))?;
        let v = vandermonde_on(rest.points(), basis3.monomials());
        let kernel = kernel_basis(&v);
        ensure(!kernel.is_empty(), || "no cubic through 8 points".into())?;
        let mut combos = kernel.clone();
        combos.push(
            kernel
                .iter()
                .enumerate()
                .fold(vec![Scalar::zero(); basis3.len()], |acc, (i, k)| {
                    acc.iter()
                        .zip(k)
                        .map(|(a, b)| a + b * int(i as i64 + 2))
                        .collect()
                }),
        );
        for coeffs in combos {
            let f = basis3.combine(&coeffs);
            ensure(!f.is_zero(), || "kernel cubic is zero".into())?;
            ensure(rest.points().iter().all(|q| f.evaluate(q).unwrap().is_zero()), || {
                "kernel cubic misses a point".into()
            })?;
            ensure(f.evaluate(&full.points()[omit]).unwrap().is_zero(), || {
                format!("cubic through the other 8 misses point {omit}")
            })?;
            let report = cb_check(&f, &part, &manifold, 3, CbMode::VanishOnLarge)
                .map_err(|e| e.to_string())?;
            ensure(report.vanishes_on_removed && report.consistent, || {
                "cb_check disagrees".into()
            })?;
        }
    }
    let (mut proper, mut refused) = (0, 0);
    for a in 0..9 {
        for b in a + 1..9 {
            for c in b + 1..9 {
                let p = full.points();
                let part = CbPartition::from_indices(full.clone(), &[a, b, c]).unwrap();
                match (collinear(&p[a], &p[b], &p[c]), cb_reduce(&part, &manifold, 2)) {
                    (false, Ok(out)) => {
                        ensure(out.nodes.len() == 6 && out.certificate.is_proper(), || {
                            format!("triple {a},{b},{c} left a bad remainder")
                        })?;
                        let cert = verify_ppsn(&out.nodes, &manifold, 2).map_err(|e| e.to_string())?;
                        ensure(cert.is_proper(), || "remainder improper".into())?;
                        proper += 1;
                    }
                    (true, Err(ppsn::Error::Improper(_))) => refused += 1,
                    (col, other) => {
                        return Err(format!(
                            "triple {a},{b},{c} collinear={col} gave {:?}",
                            other.map(|o| o.nodes.len())
                        ))
                    }
                }
            }
        }
    }
    ensure(refused == 8 && proper == 76, || format!("{proper} proper, {refused} refused"))?;
    Ok("9 eight-subsets proper, cubics vanish at the ninth; 76 triples reduce, 8 collinear refused".into())
}

fn c8_hbase_round_trip() -> Outcome {
    let mut total = 0;
    for (name, manifold) in [
        ("circle", fixtures::circle_manifold()),
        ("cube-pq", fixtures::cube_pq_manifold()),
    ] {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        for m in 0..=5i64 {
            for trial in 0..20 {
                let g = random_ideal_member(&mut rng, &manifold, m);
                let bound = g.degree_or_neg();
                let d = hbase_decompose(&g, &manifold, bound, None)
                    .map_err(|e| format!("{name} m={m} trial {trial}: {e} for {g}"))?;
                ensure(d.reexpand(&manifold) == g, || {
                    format!("{name} m={m} trial {trial}: re-expansion differs")
                })?;
                for (i, a) in d.cofactors.iter().enumerate() {
                    let k = i64::from(manifold.degree_of(i));
                    ensure(a.is_zero() || a.degree_or_neg() + k <= bound, || {
                        format!("{name} m={m}: cofactor {i} breaks the degree bound")
                    })?;
                }
                total += 1;
            }
        }
        let report = verify_hbase(&manifold, 5, 20, 7).map_err(|e| e.to_string())?;
        ensure(report.all_passed(), || {
            format!("{name}: counterexamples {:?}", report.counterexamples)
        })?;
    }
    Ok(format!("{total} sampled ideal members decompose within bounds"))
}

fn c9_reduction() -> Outcome {
    let mut total = 0;
    for (name, manifold) in fixtures::reduction_manifolds() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        let top = if manifold.n() == 2 { 6 } else { 4 };
        for trial in 0..50 {
            let f = random_polynomial(&mut rng, manifold.n(), top);
            let r = reduce_modulo(&f, &manifold).map_err(|e| e.to_string())?;
            let back = manifold
                .polynomials()
                .iter()
                .zip(&r.cofactors)
                .fold(r.remainder.clone(), |acc, (fj, cj)| &acc + &(cj * fj));
            ensure(back == f, || format!("{name} trial {trial}: identity fails"))?;
            ensure(is_reduced(&r.remainder, &manifold).unwrap(), || {
                format!("{name} trial {trial}: remainder touches a selected monomial")
            })?;
            let again = reduce_modulo(&r.remainder, &manifold).map_err(|e| e.to_string())?;
            ensure(again.remainder == r.remainder, || {
                format!("{name} trial {trial}: reduction is not idempotent")
            })?;
            ensure(again.cofactors.iter().all(Polynomial::is_zero), || {
                format!("{name} trial {trial}: second pass found ideal terms")
            })?;
            total += 1;
        }
    }
    Ok(format!("{total} reductions sound and idempotent"))
}

fn c10_nested_extraction() -> Outcome {
    let (grid, grid_points) = fixtures::grid3();
    let cube_sys = fixtures::cube_system();
    let cube_points = intersect_factorable(&cube_sys).map_err(|e| e.to_string())?.nodes;
    let mut checked = 0;
    for (manifold, points) in [(grid, grid_points), (fixtures::cube_manifold(), cube_points)] {
        let table = hilbert_table(manifold.profile(), 12);
        let mut prev = NodeSet::empty(manifold.n());
        for m in 0..manifold.profile().excess() {
            let e = extract_nested_ppsn(&points, &manifold, m).map_err(|e| e.to_string())?;
            ensure(e.len() as u64 == table.H(m), || {
                format!("degree {m}: {} points, expected {}", e.len(), table.H(m))
            })?;
            ensure(prev.points().iter().all(|q| e.contains(q)), || {
                format!("degree {} set not inside degree {m}", m - 1)
            })?;
            let cert = verify_ppsn(&e, &manifold, m).map_err(|e| e.to_string())?;
            ensure(cert.is_proper() && cert.replay(&e), || format!("degree {m} improper"))?;
            prev = e;
            checked += 1;
        }
    }
    Ok(format!("{checked} nested extractions proper with sizes H_m"))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 10] = [
        ("dimension cross-check", c1_dimension_cross_check),
        ("complete-intersection saturation", c2_saturation),
        ("curve closed form", c3_curve_closed_form),
        ("line nodes and Radon lattice", c4_example_lines),
        ("conic nodes and conic superposition", c5_example_conic),
        ("unit cube chain", c6_example_cube),
        ("Cayley-Bacharach on the 3x3 grid", c7_cayley_bacharach_grid),
        ("H-base round trip", c8_hbase_round_trip),
        ("reduction soundness and idempotence", c9_reduction),
        ("nested extraction", c10_nested_extraction),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} ({secs:.2} s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} ({secs:.2} s)", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
