// Simple and multiple least-squares fits on the Dwaine Studios data:
// ANOVA table, coefficients, standardized coefficients and t ratios.
//
//     cargo run --example least_squares_fit

use varpart::io::{dwaine_fixture, DISPOSABLE_INCOME, TARGET_POPULATION};
use varpart::ols::{anova_table, fit_ols, mean_center};

fn run() -> varpart::Result<()> {
    let c = mean_center(&dwaine_fixture())?;
    let models: [&[&str]; 3] = [
        &[TARGET_POPULATION],
        &[DISPOSABLE_INCOME],
        &[TARGET_POPULATION, DISPOSABLE_INCOME],
    ];
    for model in models {
        let fit = fit_ols(&c, model)?;
        println!("{} ~ {}", c.response_name(), model.join(" + "));
        for row in &anova_table(&fit).rows {
            println!(
                "  {:<10} SS {:>10.3}  df {:>2}  F {}",
                row.source,
                row.ss,
                row.df,
                row.f.map(|f| format!("{f:.4}")).unwrap_or_default()
            );
        }
        println!("  R² {:.5}  intercept {:.4}", fit.r2, fit.intercept);
        for (j, name) in fit.predictor_subset.iter().enumerate() {
            println!(
                "  {name:<9} b {:>9.5}  se {:.5}  z {:.5}  t {:.4}",
                fit.b[j], fit.se[j], fit.z[j], fit.t[j]
            );
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
