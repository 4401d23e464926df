//! Canonical classes: nabla_0 of O(p) on P^2 and the trace forms of matrices.

use pmscheme::cech::{form_class_coordinate, nabla0, trace_form, StandardCover, UnitCocycle};
use pmscheme::exactalg::{Chart, LMatrix};
use pmscheme::sample::Sampler;

fn main() -> pmscheme::Result<()> {
    let cover = StandardCover::new(2)?;
    for p in -2..=2 {
        let c = nabla0(&UnitCocycle::line_bundle(cover, p))?;
        println!("nabla_0(O({p})): coordinate {}", form_class_coordinate(&c)?);
    }
    let chart = Chart::on(2, &[0, 1, 2]);
    let mut s = Sampler::new(4);
    let (m, n) = (s.invertible_matrix(chart, 3), s.invertible_matrix(chart, 3));
    let tm = trace_form(&m)?;
    println!("T(MN) = T(M) + T(N): {}", trace_form(&m.try_mul(&n)?)? == tm.try_add(&trace_form(&n)?)?);
    println!("T(M) = T(det M): {}", tm == trace_form(&LMatrix::new(1, vec![m.det()])?)?);
    Ok(())
}
