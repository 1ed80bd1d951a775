// Traditional vs corrected statistics. The corrected R² and f credit only
// the variation each predictor explains uniquely, and each is computed two
// ways to show the routes agree.
//
//     cargo run --example corrected_statistics

use varpart::decomposition::{compare_report, OrderingRequest};
use varpart::io::dwaine_fixture;
use varpart::ols::mean_center;

fn run() -> varpart::Result<()> {
    let data = dwaine_fixture();
    let c = mean_center(&data)?;
    let r = compare_report(&c, data.predictor_names(), &OrderingRequest::Exhaustive)?;
    let t = &r.traditional;
    println!("                 traditional    corrected");
    println!("SS(model)        {:>11.4}  {:>11.4}", t.ss_regression, r.actual_model_ss);
    println!("R²               {:>11.5}  {:>11.5}", t.r2, r.corrected_r2);
    println!("F / f            {:>11.4}  {:>11.4}", t.f, r.corrected_f);
    println!();
    println!("corrected R² as Σz² of residualized predictors: {:.6}", r.corrected_r2_from_z);
    println!("corrected f as Σt²/p:                          {:.4}", r.corrected_f_from_t);
    println!();
    for p in &r.per_predictor {
        println!("{:<9} simple {:>10.3}  Type III {:>9.4}", p.name, p.simple_ss, p.type3_ss);
        for (ord, ss) in &p.type1_ss {
            println!("          Type I after ({ord}) {ss:>10.4}");
        }
    }
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
