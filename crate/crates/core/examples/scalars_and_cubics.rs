//! Ground fields, square classes and the degree-3 algebras feeding the
//! Tits construction.
//!
//! cargo run --example scalars_and_cubics

use albert_kit::deg3::Deg3Algebra;
use albert_kit::scalars::{square_class, GroundField};

fn main() -> albert_kit::Result<()> {
    let q: GroundField = "Q".parse()?;
    let f7: GroundField = "Fp:7".parse()?;

    let s = q.from_ratio(1, 2)? + q.from_ratio(1, 3)?;
    println!("1/2 + 1/3 = {s} over {q}");
    println!("3 * 5 = {} over {f7}", f7.from_i64(3) * f7.from_i64(5));
    println!("class of -108 over Q: {}", square_class(&q.from_i64(-108))?);
    for a in 1..7 {
        println!("class of {a} over F_7: {}", square_class(&f7.from_i64(a))?);
    }

    let split = Deg3Algebra::split(q);
    let x = split.element_from_ints(&[2, 3, 5])?;
    let (n, t, sharp) = split.norm_trace_sharp(&x)?;
    println!("split k^3, x = (2,3,5): N = {n}, T = {t}, x^# = {sharp}");

    let cube_root_two = Deg3Algebra::cubic(q, [q.from_i64(-2), q.zero(), q.zero()])?;
    let t_elt = cube_root_two.basis(1);
    println!("Q[t]/(t^3 - 2): N(t) = {}, t^-1 = {}", cube_root_two.norm(&t_elt)?, cube_root_two.inverse(&t_elt)?);
    println!("discriminant of t^3 - 2: {}", cube_root_two.discriminant_algebra()?.d);

    let m3 = Deg3Algebra::matrix3(f7);
    let a = m3.element_from_ints(&[1, 2, 0, 0, 1, 3, 4, 0, 1])?;
    println!("det over F_7 = {}, trace = {}", m3.norm(&a)?, m3.trace(&a)?);
    Ok(())
}
