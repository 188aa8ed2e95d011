//! Smith normal form of an integer matrix, with the unimodular transforms.

use pialg::matrix::IntMatrix;
use pialg::snf::{nullspace, snf, solve};
use pialg::Int;

fn main() {
    let m = IntMatrix::from_i64(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
    let r = snf(&m);
    println!("M =\n{m}");
    println!("D =\n{}", r.d);
    println!("invariant factors: {:?}", r.invariant_factors().iter().map(Int::to_string).collect::<Vec<_>>());
    assert_eq!(r.u.mul(&m).mul(&r.v), r.d);

    let b = [Int::from(2), Int::from(-6), Int::from(10)];
    match solve(&m, &b) {
        Some(x) => println!("M x = b has integer solution {:?}", x.iter().map(Int::to_string).collect::<Vec<_>>()),
        None => println!("M x = b has no integer solution"),
    }
    let wide = IntMatrix::from_i64(&[&[1, 2, 3], &[4, 5, 6]]);
    println!("integer kernel of\n{wide}\nis spanned by the columns of\n{}", nullspace(&wide));
}
