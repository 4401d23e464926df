//! Obstruction to extending a double scheme: closed form against the Psi triple product.

use pmscheme::pms::{delta2_obstruction, psi_triple_product};
use pmscheme::sample::Sampler;

fn main() -> pmscheme::Result<()> {
    let mut s = Sampler::new(2024);
    let mut agree = 0;
    for round in 0..20 {
        let pair = s.h2_cocycle(round % 5 - 2)?;
        let closed = delta2_obstruction(&pair)?;
        if closed.raw() == psi_triple_product(&pair)?.raw() {
            agree += 1;
        }
        if round == 0 {
            println!("rho_012 = {:?}", closed.get(&[0, 1, 2]).components().iter().map(|c| c.to_string()).collect::<Vec<_>>());
        }
    }
    println!("{agree}/20 agree");
    Ok(())
}
