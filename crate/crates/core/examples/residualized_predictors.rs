// Residualize each predictor on the others and regress the response on the
// residual alone. The slope equals the multiple-regression coefficient and
// the regression SS equals the Type III (partial) SS.
//
//     cargo run --example residualized_predictors

use varpart::decomposition::{partial_ss, residualize, residualized_simple_fits};
use varpart::io::dwaine_fixture;
use varpart::ols::{fit_ols, mean_center};

fn run() -> varpart::Result<()> {
    let data = dwaine_fixture();
    let c = mean_center(&data)?;
    let model = data.predictor_names().to_vec();
    let full = fit_ols(&c, &model)?;

    for name in &model {
        let others: Vec<&String> = model.iter().filter(|m| *m != name).collect();
        let r = residualize(&c, name, &others)?;
        println!("{}: sum of squares {:.4}", r.label(), r.sum_of_squares());
    }
    println!();
    for fit in residualized_simple_fits(&c, &model)? {
        let term = &fit.predictor_subset[0];
        let target = term.split('|').next().unwrap_or(term);
        println!(
            "{term:<18} SS(reg) {:>9.4}  SS(res) {:>10.3}  f {:.4}  R² {:.4}  z {:.4}  t {:.4}",
            fit.ss_regression, fit.ss_residual, fit.f, fit.r2, fit.z[0], fit.t[0]
        );
        println!(
            "{:<18} b {:.5} (full model {:.5})  Type III SS {:.4}",
            "",
            fit.b[0],
            full.coefficient(target).unwrap_or(f64::NAN),
            partial_ss(&c, target, &model)?
        );
    }
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
