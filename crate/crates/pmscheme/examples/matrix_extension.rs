//! Inv_lambda, Gamma_lambda and canonical extensions of matrices over R_n.

use pmscheme::exactalg::Chart;
use pmscheme::sample::Sampler;
use pmscheme::truncated::{ext_lambda, inv_lambda, CoeffAutomorphism, RingAutomorphism, TruncMatrix};

fn main() -> pmscheme::Result<()> {
    let c = Chart::on(2, &[0, 1]);
    let mut s = Sampler::new(3);
    let n = 2;
    let a = s.trunc_matrix(c, 2, n);
    let lam: CoeffAutomorphism = s.coeff_automorphism(c, n + 1);
    println!("mu_lambda = {:?}", lam.mu().to_texts());

    let ext = ext_lambda(&a, &lam)?;
    println!("A_ext extends A: {}", ext.truncate(n)? == a);
    println!("top coefficient of A_ext:");
    for i in 0..2 {
        println!("  [{}, {}]", ext.coeff(n).get(i, 0), ext.coeff(n).get(i, 1));
    }

    let lhs = inv_lambda(&ext, &lam)?;
    let rhs = ext_lambda(&inv_lambda(&a, &lam)?.truncate(n)?, &lam.inverse()?)?;
    println!("Inv(A_ext) = ([Inv(A)]_n)_ext: {}", lhs == rhs);

    let id = CoeffAutomorphism::identity(c, n + 1);
    println!("I_ext = I: {}", ext_lambda(&TruncMatrix::identity(c, 2, n), &id)?.is_identity());
    Ok(())
}
