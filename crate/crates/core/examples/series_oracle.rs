//! Truncated power series as an independent source of the same numbers.

use lahbell::bell::{incomplete_r_lah_bell, Scalar, SequenceSpec};
use lahbell::exact::{lah_bell_number, rlah};
use lahbell::poly::Family;
use lahbell::series::{
    faa_di_bruno_check, gf_expand, GfFamily, GfParams, SeriesKind, SeriesStart, TruncatedSeries,
};

fn main() -> lahbell::Result<()> {
    let n = 10;
    let f = TruncatedSeries::from_sequence(
        &SequenceSpec::Ones,
        SeriesKind::Ordinary,
        SeriesStart::One,
        n,
    )?;
    let e = f.exp()?;
    for m in 0..=n {
        assert_eq!(
            e.egf_coefficient(m)?.as_constant(),
            Some(lah_bell_number(m))
        );
    }
    let coeffs: Vec<String> = e.egf_coefficients().iter().map(|c| c.to_string()).collect();
    println!("n! [t^n] exp(t/(1-t)): {}", coeffs.join(", "));

    let r_lah = gf_expand(
        GfFamily::RLah,
        &GfParams {
            k: Some(2),
            r: Some(1),
            ..Default::default()
        },
        8,
    )?;
    for (m, c) in r_lah.iter().enumerate() {
        assert_eq!(c.as_constant(), Some(rlah(m, 2, 1)));
    }
    println!(
        "L_1(n,2) from the series: {:?}",
        r_lah.iter().map(|c| c.to_string()).collect::<Vec<_>>()
    );

    // Symbolic coefficients: the generating function in a_i, b_i.
    let params = GfParams {
        k: Some(1),
        r: Some(1),
        a: Some(SequenceSpec::Symbolic(Family::A)),
        b: Some(SequenceSpec::Symbolic(Family::B)),
        x: Some(Scalar::Indeterminate),
        ..Default::default()
    };
    let generic = gf_expand(GfFamily::IncompleteGeneric, &params, 3)?;
    for (m, c) in generic.iter().enumerate().skip(1) {
        assert_eq!(
            *c,
            incomplete_r_lah_bell(
                m,
                1,
                1,
                params.a.as_ref().unwrap(),
                params.b.as_ref().unwrap()
            )?
        );
        println!("n={m}: {c}");
    }

    for m in [1, 4, 8] {
        let report = faa_di_bruno_check(m, m)?;
        println!(
            "m={m}: d^m/dt^m exp(t/(1-t)) at 0 = {}, B_m(1!,...,m!) = {}, passed {}",
            report.derivative_route, report.bell_route, report.passed
        );
    }
    Ok(())
}
