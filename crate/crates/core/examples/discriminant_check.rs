//! `q_E ≅ ⟨1, -d⟩ ⟂ 3h` over each residue field of `E ⊗ F_p`, for the
//! diagonal subalgebra and for companion subalgebras of two cubics.
//!
//! cargo run --release --example discriminant_check

use albert_kit::deg3::Deg3Algebra;
use albert_kit::quadforms::{irreducible_cubic, lemma_discr_check, linear_times_quadratic_cubic};
use albert_kit::scalars::GroundField;
use albert_kit::springer::{orthogonal_complement, EtaleEmbedding};
use albert_kit::tits::TitsModel;

fn main() -> albert_kit::Result<()> {
    for p in [7u64, 101, 1009] {
        let field = GroundField::prime(p)?;
        let tits = TitsModel::new(Deg3Algebra::matrix3(field), field.one())?;
        let lift = |c: [u64; 3]| c.map(|v| field.from_i64(v as i64));
        let cases = [
            ("diagonal", EtaleEmbedding::diagonal_mat3(&tits)?),
            ("irreducible", EtaleEmbedding::companion(&tits, lift(irreducible_cubic(p)))?),
            ("linear x quadratic", EtaleEmbedding::companion(&tits, lift(linear_times_quadratic_cubic(p)))?),
        ];
        for (name, emb) in cases {
            let data = orthogonal_complement(tits.model(), &emb)?;
            let out = lemma_discr_check(&tits, &data, 3)?;
            println!("p = {p}, {name}, d = {}: {}", out.d, if out.passed() { "PASS" } else { "FAIL" });
            for f in &out.factors {
                println!(
                    "    factor {:?}: q_E {} vs model {}",
                    f.modulus,
                    f.observed.to_json(),
                    f.expected.to_json()
                );
            }
        }
    }
    Ok(())
}
