//! The index sets behind the partition sums, and the numbers they produce.

use lahbell::exact::{lah, rlah};
use lahbell::partitions::{enumerate_lambda, enumerate_pi, lah_via_pi, rlah_via_lambda};

fn main() {
    println!("pi(6, 3): j_i counts with sum j_i = 3 and sum i*j_i = 6");
    for w in enumerate_pi(6, 3) {
        println!("  j = {:?}", w.j);
    }

    println!("lambda(3, 1, 2): k_i (i >= 1) and r_i (i >= 0) with sum i*(k_i + r_i) = 3");
    for w in enumerate_lambda(3, 1, 2) {
        println!("  k = {:?}  r = {:?}", w.k_part, w.r_part);
    }

    println!("counts: |pi(20, k)| for k = 1..=20");
    let counts: Vec<usize> = (1..=20).map(|k| enumerate_pi(20, k).count()).collect();
    println!("  {counts:?} (sum {})", counts.iter().sum::<usize>());

    for (n, k, r) in [(9, 4, 0), (8, 3, 2), (10, 5, 3)] {
        println!(
            "L_{r}({n},{k}): closed form {}, partition sum {}",
            rlah(n, k, r),
            if r == 0 {
                lah_via_pi(n, k)
            } else {
                rlah_via_lambda(n, k, r)
            }
        );
    }
    assert_eq!(lah(9, 4), lah_via_pi(9, 4));
}
