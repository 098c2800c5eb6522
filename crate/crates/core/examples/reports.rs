//! Drive the command layer from a JSON configuration and print the report,
//! as the `albert-kit` binary does.
//!
//! cargo run --release --example reports

use albert_kit::cli::{exit_code, run, Command, Lemma};
use albert_kit::config::RunConfig;

fn main() -> albert_kit::Result<()> {
    let config = RunConfig::from_json(
        r#"{
            "field": "Fp:7",
            "jordan": { "construction": "tits1", "algebra": { "kind": "mat3" }, "lambda": "1" },
            "subalgebra": { "subalgebra": "diagonal-mat3" },
            "seed": 11
        }"#,
    )?;
    let outcome = run(Command::Lemma(Lemma::Discr), &config);
    let code = exit_code(&outcome);
    println!("{}", outcome?.to_json());
    println!("exit code {code}");
    Ok(())
}
