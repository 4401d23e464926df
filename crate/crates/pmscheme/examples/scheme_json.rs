//! Scheme descriptions as JSON, and their obstruction reports.
//!
//!     cargo run --example scheme_json            # print
//!     cargo run --example scheme_json -- DIR     # write x2.json, trivial.json, corrupted.json

use pmscheme::autgroup::GnElement;
use pmscheme::cech::{StandardCover, UnitCocycle};
use pmscheme::exactalg::{Chart, VectorField};
use pmscheme::pms::{obstruction_report, p2_x2, SchemeCocycle, SchemeJson};
use std::path::Path;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cover = StandardCover::new(2)?;
    let x2 = p2_x2()?.scheme()?;
    let trivial = SchemeCocycle::trivial(&UnitCocycle::line_bundle(cover, -3), 2)?;

    // drop D_02: the transitions no longer glue on U_012
    let mut tr = x2.transitions().clone();
    let a02 = UnitCocycle::line_bundle(cover, -3).get(0, 2)?;
    tr.insert((0, 2), GnElement::phi2(&VectorField::zero(Chart::on(2, &[0, 2]), 0), &a02)?);
    let corrupted = SchemeCocycle::new(cover, 2, tr)?;

    let files = [("x2", &x2), ("trivial", &trivial), ("corrupted", &corrupted)];
    match std::env::args().nth(1) {
        Some(dir) => {
            for (name, s) in files {
                let path = Path::new(&dir).join(format!("{name}.json"));
                std::fs::write(&path, serde_json::to_string_pretty(&SchemeJson::from_scheme(s, 1)?)?)?;
                println!("wrote {}", path.display());
            }
        }
        None => {
            for (name, s) in files {
                let desc = SchemeJson::from_scheme(s, 1)?;
                let report = obstruction_report(&desc)?;
                println!("{name}: is_zero = {}, witness = {:?}", report.is_zero, report.witness);
            }
            println!("{}", serde_json::to_string_pretty(&SchemeJson::from_scheme(&x2, 1)?)?);
        }
    }
    Ok(())
}
