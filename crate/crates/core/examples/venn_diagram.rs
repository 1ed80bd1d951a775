// Venn region accounting and an area-proportional SVG of it.
//
//     cargo run --example venn_diagram -- [OUT.svg]

use std::path::{Path, PathBuf};

use varpart::io::dwaine_fixture;
use varpart::ols::mean_center;
use varpart::report::{venn_document, venn_svg};

fn run() -> varpart::Result<()> {
    render(&std::env::temp_dir().join("varpart_venn.svg"))
}

fn render(out: &Path) -> varpart::Result<()> {
    let data = dwaine_fixture();
    let c = mean_center(&data)?;
    let doc = venn_document(&c, data.predictor_names())?;
    let v = &doc.venn.regions;
    for u in &v.unique {
        println!("unique {:<9} {:>10.3}", u.predictor, u.ss);
    }
    println!("common           {:>10.3}", v.common_total);
    println!("residual         {:>10.3}", v.residual);
    println!("accounted        {:>10.3} of {:.3}", v.accounted_total, v.ss_total);
    println!("missing fraction {:>10.5}", v.missing_fraction);
    std::fs::write(out, venn_svg(&doc))?;
    println!("wrote {}", out.display());
    Ok(())
}

fn main() {
    let result = match std::env::args_os().nth(1) {
        Some(path) => render(&PathBuf::from(path)),
        None => run(),
    };
    if let Err(e) = result {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
