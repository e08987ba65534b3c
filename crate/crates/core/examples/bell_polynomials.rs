//! Bell and Lah-Bell polynomials, symbolic and numeric.

use std::collections::BTreeMap;

use lahbell::bell::{
    complete_bell, complete_lah_bell, incomplete_bell, incomplete_lah_bell, SequenceSpec,
};
use lahbell::poly::{Family, Polynomial, Variable};

fn main() -> lahbell::Result<()> {
    let xs = SequenceSpec::Symbolic(Family::X);
    for n in 0..=5 {
        println!("B_{n}(x)   = {}", complete_bell(n, &xs)?);
    }
    for k in 1..=4 {
        println!("B^L_(6,{k}) = {}", incomplete_lah_bell(6, k, &xs)?);
    }
    println!("B^L_4(x)  = {}", complete_lah_bell(4, &xs)?);

    // Numeric sequences go through the same constructors.
    println!(
        "B_6(1!,...,6!)  = {}",
        complete_bell(6, &SequenceSpec::Factorials)?
    );
    println!(
        "B^L_6(1,...,1)  = {}",
        complete_lah_bell(6, &SequenceSpec::Ones)?
    );
    println!(
        "B_(7,3)(1,..,1) = {}",
        incomplete_bell(7, 3, &SequenceSpec::Ones)?
    );

    // Polynomials parse, evaluate and substitute.
    let p: Polynomial = "x1^2 + 2*x2".parse()?;
    assert_eq!(p, complete_lah_bell(2, &xs)?);
    let at: BTreeMap<Variable, _> =
        [(Variable::x(1), 3.into()), (Variable::x(2), (-1).into())].into();
    println!("{p} at x1=3, x2=-1: {}", p.eval(&at)?);
    let q = p.substitute(Variable::x(2), &"y1*y2".parse()?);
    println!("{p} with x2 -> y1*y2: {q}");
    println!(
        "as JSON: {}",
        serde_json::to_string(&q).expect("serializable")
    );
    Ok(())
}
