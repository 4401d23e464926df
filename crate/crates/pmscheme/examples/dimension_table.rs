//! Dimension formulas for multiple structures on ruled surfaces.

use pmscheme::projbundle::{family_dim, family_dim_p1xp1, h1_l, h1_tl, table, BundleParams, Grid};

fn main() -> pmscheme::Result<()> {
    let p = BundleParams::semistable(1, 0, 3, 2, 2)?;
    println!("g=1 degE=0 k=3 d=2 n=2: h1(T L^n) = {:?}, h1(L^n) = {:?}", h1_tl(&p)?, h1_l(&p)?);
    println!("  family dimension {:?}", family_dim(&p)?);
    for d in 0..4 {
        println!("P^1 x P^1, k=3 n=2 d={d}: {}", family_dim_p1xp1(3, d, 2));
    }
    let rows = table(&Grid::default())?;
    let both = rows.iter().filter(|r| r.lem10 && r.lem12).count();
    println!("{} rows, {both} with both vanishing lemmas", rows.len());
    Ok(())
}
