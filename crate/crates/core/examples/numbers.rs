//! Lah and r-Lah triangles, Lah-Bell sequences and a few large values.

use lahbell::exact::{binomial, lah, lah_bell_number, r_lah_bell_number, rlah};

fn print_triangle(label: &str, n_max: usize, entry: impl Fn(usize, usize) -> String) {
    println!("{label}");
    for n in 0..=n_max {
        let row: Vec<String> = (0..=n).map(|k| entry(n, k)).collect();
        println!("  n={n:<2} {}", row.join(" "));
    }
}

fn main() {
    print_triangle("L(n,k)", 6, |n, k| lah(n, k).to_string());
    print_triangle("L_1(n,k)", 5, |n, k| rlah(n, k, 1).to_string());

    let seq: Vec<String> = (0..=10).map(|n| lah_bell_number(n).to_string()).collect();
    println!("Lah-Bell numbers: {}", seq.join(", "));
    for r in 1..=3 {
        let seq: Vec<String> = (0..=7)
            .map(|n| r_lah_bell_number(n, r).to_string())
            .collect();
        println!("r={r} extended:     {}", seq.join(", "));
    }

    // Values outgrow machine words quickly; everything stays exact.
    println!("L(60, 7)        = {}", lah(60, 7));
    println!("Lah-Bell(50)    = {}", lah_bell_number(50));
    println!("C(100, 50)      = {}", binomial(100, 50));
}
