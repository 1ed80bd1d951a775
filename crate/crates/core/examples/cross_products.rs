// Centered sums of squares and cross-products, the only inputs the normal
// equations need.
//
//     cargo run --example cross_products

use varpart::io::{dwaine_fixture, DISPOSABLE_INCOME, DWAINE_RESPONSE, TARGET_POPULATION};
use varpart::ols::{mean_center, sscp};

fn run() -> varpart::Result<()> {
    let data = dwaine_fixture();
    let c = mean_center(&data)?;
    println!("n = {}", c.n());
    for name in [DWAINE_RESPONSE, TARGET_POPULATION, DISPOSABLE_INCOME] {
        println!("mean {name:<9} {:>10.4}   sd {:>8.4}", c.mean(name)?, c.sd(name)?);
    }
    let m = sscp(&c, &[DWAINE_RESPONSE, TARGET_POPULATION, DISPOSABLE_INCOME])?;
    println!();
    print!("{:>10}", "");
    for l in &m.labels {
        print!("{l:>13}");
    }
    println!();
    for (l, row) in m.labels.iter().zip(&m.m) {
        print!("{l:>10}");
        for v in row {
            print!("{v:>13.4}");
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
