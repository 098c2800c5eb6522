//! Generic minimal polynomials and the étale test in the split Albert
//! algebra over `Q`.
//!
//! cargo run --example min_poly

use albert_kit::deg3::Deg3Algebra;
use albert_kit::scalars::GroundField;
use albert_kit::tits::TitsModel;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> albert_kit::Result<()> {
    let q = GroundField::Rationals;
    let tits = TitsModel::new(Deg3Algebra::matrix3(q), q.one())?;
    let model = tits.model();
    let m3 = tits.algebra();

    let one = model.unit().clone();
    let diag = tits.embed_first_slot(&m3.element_from_ints(&[2, 0, 0, 0, 3, 0, 0, 0, 5])?)?;
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let random = model.random(&mut rng);
    for (name, x) in [("1", one), ("diag(2,3,5)", diag), ("random", random)] {
        let m = model.generic_min_poly(&x)?;
        println!(
            "{name}: m(T) = T^3 - ({})T^2 + ({})T - ({}), disc = {}, étale = {}, m(x) = 0: {}",
            m.c2, m.c1, m.c0, m.disc, m.etale, model.min_poly_residual(&x)?.is_zero()
        );
    }
    Ok(())
}
