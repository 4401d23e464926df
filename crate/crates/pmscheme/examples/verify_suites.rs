//! The verification suites behind `pms verify`, driven from library code.

use pmscheme::cli::{run_suite, Suite};

fn main() {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(7);
    let mut failed = 0;
    for report in run_suite(Suite::All, seed) {
        let ok = report.passed();
        println!("{:<14} {}", report.suite, if ok { "PASS" } else { "FAIL" });
        failed += usize::from(!ok);
    }
    std::process::exit(i32::from(failed > 0));
}
