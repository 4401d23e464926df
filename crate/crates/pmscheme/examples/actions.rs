//! The C* and Aut_0 actions on extensions.

use pmscheme::cech::{StandardCover, UnitCocycle};
use pmscheme::exactalg::{q, Chart, LaurentElement, VectorField};
use pmscheme::pms::{act_aut0, act_cstar, ExtPair};
use pmscheme::sample::Sampler;
use std::collections::BTreeMap;

fn main() -> pmscheme::Result<()> {
    let cover = StandardCover::new(2)?;
    let mut s = Sampler::new(6);
    let mut g = ExtPair::zero();
    for t in cover.simplices(1) {
        g.eta.insert((t[0], t[1]), s.function(cover.chart(&t)));
        g.eps.insert((t[0], t[1]), s.field(cover.chart(&t)));
    }
    let h = act_cstar(&q(2), &g, 2)?;
    println!("lambda = 2, n = 2: eta scaled by 2: {}", h.eta[&(0, 1)] == g.eta[&(0, 1)].scale(&q(2)));
    println!("                   eps scaled by 4: {}", h.eps[&(0, 1)] == g.eps[&(0, 1)].scale(&q(4)));

    // the section d/dx0 of T(-1), read on U_i as D_i = x_i d/dx0; nu = O(-1)
    let nu = UnitCocycle::line_bundle(cover, -1);
    let chi: BTreeMap<usize, VectorField> = (0..3)
        .map(|i| {
            let c = Chart::on(2, &[i]);
            let comps = vec![LaurentElement::var(c, i), LaurentElement::zero(c, 1), LaurentElement::zero(c, 1)];
            Ok((i, VectorField::new(0, comps)?))
        })
        .collect::<pmscheme::Result<_>>()?;
    match act_aut0(&chi, &ExtPair::zero(), &nu) {
        Ok(moved) => println!("Aut_0 image of the trivial extension: {} eta and {} eps entries", moved.eta.len(), moved.eps.len()),
        Err(e) => println!("Aut_0: {e}"),
    }
    Ok(())
}
