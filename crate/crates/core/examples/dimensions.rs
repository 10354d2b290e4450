//! Hilbert table along complete intersections, checked against backward
//! differences of the binomial counts.

use ppsn::dimension::{backward_diff_e, hilbert_table, DegreeProfile};

fn main() -> ppsn::Result<()> {
    for (n, ks) in [(2, vec![1]), (2, vec![2]), (2, vec![3, 3]), (3, vec![2, 2, 2]), (3, vec![1])] {
        let profile = DegreeProfile::new(n, ks.clone())?;
        let table = hilbert_table(&profile, 6);
        println!("n = {n}, degrees {ks:?}");
        println!("  j  h_j  H_j  d_j  e_j");
        for j in 0..=6i64 {
            let e = backward_diff_e(j, n, &ks);
            assert_eq!(table.H(j) as i64, e);
            println!("{j:>3} {:>4} {:>4} {:>4} {e:>4}", table.h(j), table.H(j), table.d[j as usize]);
        }
    }
    Ok(())
}
