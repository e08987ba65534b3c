//! Moments of a distribution from its cumulants.

use lahbell::bell::moments_from_cumulants;
use lahbell::exact::ExactInteger;

fn main() -> lahbell::Result<()> {
    let n = 8;
    let table = |name: &str, kappas: Vec<ExactInteger>| -> lahbell::Result<()> {
        let moments = (0..=n)
            .map(|m| moments_from_cumulants(&kappas, m).map(|v| v.to_string()))
            .collect::<lahbell::Result<Vec<_>>>()?;
        println!("{name:<28} {}", moments.join(", "));
        Ok(())
    };
    // Standard normal: only the second cumulant is nonzero.
    table(
        "normal(0, 1)",
        (1..=n)
            .map(|i| ExactInteger::from(u8::from(i == 2)))
            .collect(),
    )?;
    // Poisson(1): every cumulant is 1, giving the Bell numbers.
    table("poisson(1)", vec![ExactInteger::from(1); n])?;
    // Poisson(3).
    table("poisson(3)", vec![ExactInteger::from(3); n])?;
    // Exponential(1): kappa_i = (i-1)!.
    table(
        "exponential(1)",
        (1..=n).map(|i| lahbell::exact::factorial(i - 1)).collect(),
    )?;
    Ok(())
}
