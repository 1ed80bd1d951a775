// Orthogonal-function regression: enter predictors in sequence, each
// residualized on those already entered. Every ordering reproduces the
// multiple-regression SS, while the credit each predictor receives depends
// on where it enters.
//
//     cargo run --example orthogonal_functions

use varpart::decomposition::{all_orderings, orthogonal_regression, sequential_ss};
use varpart::io::dwaine_fixture;
use varpart::ols::mean_center;

fn run() -> varpart::Result<()> {
    let data = dwaine_fixture();
    let c = mean_center(&data)?;
    for ord in all_orderings(data.predictor_names())? {
        let fit = orthogonal_regression(&c, &ord)?;
        println!("ordering {}  SS(reg) {:.3}  R² {:.5}", ord.label(), fit.ss_regression, fit.r2);
        for (j, term) in fit.predictor_subset.iter().enumerate() {
            println!(
                "  {term:<18} b {:>9.4}  z {:.4}  t {:>8.4}",
                fit.b[j], fit.z[j], fit.t[j]
            );
        }
        for (name, ss) in sequential_ss(&c, &ord)? {
            println!("  Type I {name:<10} {ss:>10.4}");
        }
        println!();
    }
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
