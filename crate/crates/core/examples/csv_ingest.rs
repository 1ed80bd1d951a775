// Load a dataset from CSV, write it back out, and decompose it.
//
//     cargo run --example csv_ingest -- [PATH RESPONSE PREDICTOR...]

use varpart::decomposition::{compare_report, OrderingRequest};
use varpart::io::{load_csv, save_csv, CsvSpec, DISPOSABLE_INCOME, DWAINE_RESPONSE, TARGET_POPULATION};
use varpart::ols::mean_center;

fn run() -> varpart::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/dwaine.csv");
    ingest(&CsvSpec::new(path, DWAINE_RESPONSE, &[TARGET_POPULATION, DISPOSABLE_INCOME]))
}

fn ingest(spec: &CsvSpec) -> varpart::Result<()> {
    let data = load_csv(spec)?;
    println!("loaded {} rows: {} ~ {}", data.n(), data.response_name(), data.predictor_names().join(" + "));

    let copy = std::env::temp_dir().join("varpart_roundtrip.csv");
    save_csv(&data, &copy, b';')?;
    let again = load_csv(&CsvSpec::new(&copy, data.response_name(), &spec_names(&data)).with_delimiter(b';'))?;
    println!("round trip through {} identical: {}", copy.display(), again == data);

    let c = mean_center(&data)?;
    let r = compare_report(&c, data.predictor_names(), &OrderingRequest::Exhaustive)?;
    println!("R² {:.4}, corrected R² {:.4}", r.traditional.r2, r.corrected_r2);
    Ok(())
}

fn spec_names(d: &varpart::ols::Dataset) -> Vec<&str> {
    d.predictor_names().iter().map(String::as_str).collect()
}

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let result = match args.as_slice() {
        [path, response, predictors @ ..] if !predictors.is_empty() => {
            let p: Vec<&str> = predictors.iter().map(String::as_str).collect();
            ingest(&CsvSpec::new(path, response, &p))
        }
        _ => run(),
    };
    if let Err(e) = result {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
