//! h^q(P^m, O(k)) for m <= 3 and the top class of 1/(x0 x1 x2).

use pmscheme::cech::{class_is_zero, cohomology_dim, top_class_coordinates, LineCochain, StandardCover};
use pmscheme::exactalg::{q, Chart, LaurentElement};

fn main() -> pmscheme::Result<()> {
    for m in 1..=3usize {
        println!("P^{m}");
        for k in -6..=3i64 {
            let row: Vec<String> = (0..=m).map(|qq| cohomology_dim(m, k, qq).map(|h| h.to_string())).collect::<Result<_, _>>()?;
            println!("  O({k:>2}): {}", row.join(" "));
        }
    }
    let mut c = LineCochain::zero(StandardCover::new(2)?, 2, -3);
    c.set(&[0, 1, 2], LaurentElement::monomial(Chart::on(2, &[0, 1, 2]), &[-1, -1, -1], q(1))?)?;
    println!("1/(x0 x1 x2): zero class = {}, coordinates {:?}", class_is_zero(&c)?, top_class_coordinates(&c)?);
    Ok(())
}
