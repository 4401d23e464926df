//! The double scheme X_2 over P^2 and X_4: no pulled-back O(p), p != 0, extends.

use pmscheme::pms::{delta_trivial, delta_via_upsilon, p2_x2, p2_x4, validate_scheme};

fn main() -> pmscheme::Result<()> {
    for (name, ext) in [("X_2", p2_x2()?), ("X_4", p2_x4()?)] {
        let r = validate_scheme(&ext.scheme()?)?;
        println!("{name}: glues = {}, L = O({})", r.cocycle_ok, r.l_degree.map_or("?".into(), |k| k.to_string()));
        for p in -3..=3 {
            let c = delta_trivial(&ext, p)?;
            println!("  p = {p:>2}: lambda_012 = {:<28} zero class: {}", c.cochain()?.get(&[0, 1, 2]).to_string(), c.is_zero()?);
        }
        let u = delta_via_upsilon(&ext, 1)?;
        println!("  through Upsilon_1, p = 1: {}", u.cochain()?.get(&[0, 1, 2]));
    }
    Ok(())
}
