//! `U_{(0,0,1)} U_{(0,y,0)} (y,0,0) = N(y) 1`: the structure-group move that
//! carries an invertible `y` of the first slot to `1`.
//!
//! cargo run --example trans_lemma

use albert_kit::deg3::Deg3Algebra;
use albert_kit::scalars::GroundField;
use albert_kit::tits::TitsModel;

fn main() -> albert_kit::Result<()> {
    let q = GroundField::Rationals;
    let alg = Deg3Algebra::cubic(q, [q.from_i64(-2), q.zero(), q.zero()])?;
    let tits = TitsModel::new(alg.clone(), q.from_ratio(3, 4)?)?;
    let y = alg.element_from_ints(&[1, 1, 1])?;
    let mv = tits.lemma_trans_move(&y)?;
    println!("y = 1 + t + t^2 in Q[t]/(t^3 - 2), N(y) = {}", mv.norm);
    println!("image of (y,0,0): {}", mv.image);
    println!("equals N(y)·1: {}", mv.holds);
    println!("word sending y to 1: {}", mv.normalized.to_json());
    println!("lands on 1: {}", mv.lands_on_unit);
    Ok(())
}
