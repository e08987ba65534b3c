use std::path::Path;
use std::process::{Command, Output};

pub fn lahbell(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lahbell"))
        .args(args)
        .output()
        .expect("binary runs")
}

pub const GOLDEN: &[(&str, &str)] = &[
    ("table_lah.txt", "table lah --n-max 3"),
    ("table_lah_bell.txt", "table lah-bell --n-max 3"),
    ("table_rlah_r0.txt", "table rlah --r 0 --n-max 3"),
    (
        "table_rlah_r1.csv",
        "table rlah --r 1 --n-max 2 --format csv",
    ),
    ("poly_complete_bell.txt", "poly complete-bell --n 3"),
    (
        "poly_incomplete_lah_bell.txt",
        "poly incomplete-lah-bell --n 3 --k 2",
    ),
    ("poly_theorem7.txt", "poly theorem7 --n 1 --r 1"),
    (
        "poly_theorem7.json",
        "poly theorem7 --n 1 --r 1 --format json",
    ),
    ("value_lah.txt", "value lah --n 4 --k 2"),
    ("value_r_lah_bell.txt", "value r-lah-bell --n 0 --r 5"),
    (
        "value_lah_bell_poly.txt",
        "value lah-bell-poly --n 2 --r 0 --x 2",
    ),
    (
        "value_lah_bell_poly.json",
        "value lah-bell-poly --n 2 --r 0 --x 2 --format json",
    ),
    ("verify_theorem1.txt", "verify --suite theorem1 --n-max 20"),
    (
        "verify_all_degenerate.txt",
        "verify --suite all --n-max 0 --r-max 0",
    ),
    (
        "verify_corollary6.txt",
        "verify --suite corollary6 --n-max 12 --r-max 3",
    ),
];

pub fn golden_mismatches() -> Vec<(String, String)> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    GOLDEN
        .iter()
        .filter_map(|(file, args)| {
            let expected = std::fs::read(dir.join(file)).expect("golden file exists");
            let out = lahbell(&args.split_whitespace().collect::<Vec<_>>());
            (!out.status.success() || out.stdout != expected).then(|| {
                (
                    file.to_string(),
                    String::from_utf8_lossy(&out.stdout).into_owned(),
                )
            })
        })
        .collect()
}
