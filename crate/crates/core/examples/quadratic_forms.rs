//! Diagonalization, Witt invariants and isotropic vectors over finite fields.
//!
//! cargo run --example quadratic_forms

use albert_kit::linalg::Matrix;
use albert_kit::quadforms::{diagonalize, isotropic_vector, witt_invariants, QuadraticForm};
use albert_kit::scalars::{Fp, GroundField};

fn main() -> albert_kit::Result<()> {
    let q = GroundField::Rationals;
    let h = QuadraticForm::new(Matrix::from_rows(vec![vec![q.zero(), q.one()], vec![q.one(), q.zero()]]))?;
    let d = diagonalize(&h);
    println!("hyperbolic plane over Q diagonalizes to {:?}, congruence holds: {}",
        d.entries.iter().map(ToString::to_string).collect::<Vec<_>>(), d.verify(&h));

    let f = |v: i64, p: u64| Fp::from_i64(v, p);
    let sum_of_squares = QuadraticForm::diagonal(&[f(1, 7), f(1, 7)]);
    println!("<1,1> over F_7: {:?}, isotropic vector {:?}",
        witt_invariants(&sum_of_squares, 0), isotropic_vector(&sum_of_squares, 0));

    let form = QuadraticForm::diagonal(&[f(3, 1009), f(5, 1009), f(-7, 1009), f(11, 1009)]);
    let v = isotropic_vector(&form, 4).expect("rank >= 3 forms are isotropic");
    println!("<3,5,-7,11> over F_1009: {:?}, q({v:?}) = {}", witt_invariants(&form, 0), form.eval(&v));
    let plus_h = form.orthogonal_sum(&QuadraticForm::hyperbolic(1, &f(0, 1009)));
    println!("adding a hyperbolic plane: {:?}", witt_invariants(&plus_h, 0));
    Ok(())
}
