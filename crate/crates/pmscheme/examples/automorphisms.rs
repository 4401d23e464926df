//! The groups G_n: substitution, closed forms in orders 2 and 3, exp and log.

use pmscheme::autgroup::{psi_canonical, DerivationRn, Phi3};
use pmscheme::exactalg::Chart;
use pmscheme::sample::Sampler;

fn main() -> pmscheme::Result<()> {
    let c = Chart::on(2, &[0, 1, 2]);
    let mut s = Sampler::new(19);

    let a = Phi3 { d: s.field(c), mu0: s.unit(c), mu1: s.function(c), d1: s.field(c) };
    let b = Phi3 { d: s.field(c), mu0: s.unit(c), mu1: s.function(c), d1: s.field(c) };
    let closed = a.compose(&b)?;
    let generic = a.to_gn()?.compose(&b.to_gn()?)?;
    println!("closed-form product = substitution: {}", closed.to_gn()? == generic);
    println!("mu'' = {} + ({}) t", closed.mu0, closed.mu1);

    let psi = psi_canonical(&s.field(c), &s.unit(c), &s.function(c))?;
    let inv = psi.invert()?;
    println!("Psi^-1 is canonical: {}", psi_canonical(&inv.d, &inv.mu0, &inv.mu1)? == inv);

    for n in 2..=4 {
        let d = s.der0(c, n)?;
        let chi = d.exp()?;
        println!("n = {n}: log(exp(D)) = D: {}", DerivationRn::log(&chi)? == d);
    }
    Ok(())
}
