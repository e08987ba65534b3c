//! r-extended Lah-Bell and r-Bell polynomials.

use lahbell::bell::{
    complete_r_bell, complete_r_lah_bell, complete_r_lah_bell_expanded, incomplete_r_bell,
    incomplete_r_lah_bell, lah_bell_polynomial, Scalar, SequenceSpec,
};
use lahbell::poly::{Family, Polynomial, Variable};

fn main() -> lahbell::Result<()> {
    let a = SequenceSpec::Symbolic(Family::A);
    let b = SequenceSpec::Symbolic(Family::B);
    let ones = SequenceSpec::Ones;
    let x = Scalar::Indeterminate;

    println!(
        "incomplete, n=2 k=1 r=1:  {}",
        incomplete_r_lah_bell(2, 1, 1, &a, &b)?
    );
    println!(
        "complete,   n=2 r=1:      {}",
        complete_r_lah_bell(2, 1, &x, &a, &b)?
    );
    println!(
        "complete at ones, n=3 r=2: {}",
        complete_r_lah_bell(3, 2, &x, &ones, &ones)?
    );
    for r in 0..=2 {
        println!("sum_k x^k L_{r}(4,k) = {}", lah_bell_polynomial(4, r, &x));
    }

    // The same polynomial at x = 1 from the expanded closed form in x_i, y_j.
    let xs = SequenceSpec::Symbolic(Family::X);
    let ys = SequenceSpec::Symbolic(Family::Y);
    let expanded = complete_r_lah_bell_expanded(2, 1, &xs, &ys)?;
    assert_eq!(
        expanded,
        complete_r_lah_bell(2, 1, &Scalar::from(1), &xs, &ys)?
    );
    println!("expanded, n=2 r=1:        {expanded}");

    // r-Bell polynomials with exponent rho.
    println!(
        "r-Bell incomplete n=3 k=1 rho=1: {}",
        incomplete_r_bell(3, 1, 1, &a, &b)?
    );
    println!(
        "r-Bell complete   n=2 rho=2:     {}",
        complete_r_bell(2, 2, &a, &b)?
    );

    // x as an ordinary variable: x * ones.
    let x_ones = SequenceSpec::Uniform(Polynomial::var(Variable::scalar_x()));
    let row: Polynomial = (0..=3)
        .map(|k| incomplete_r_lah_bell(3, k, 1, &x_ones, &ones))
        .sum::<lahbell::Result<_>>()?;
    println!("sum_k at x*ones, n=3 r=1: {row}");
    Ok(())
}
