//! Homogeneous Laurent elements, 1-forms and vector fields on charts of P^2.

use pmscheme::exactalg::{differential, q, Chart, LaurentElement, VectorField};

fn main() -> pmscheme::Result<()> {
    let u01 = Chart::on(2, &[0, 1]);
    let a = LaurentElement::ratio(u01, 0, 1)?;
    println!("(x0/x1)(x1/x0) = {}", a.try_mul(&a.invert()?)?);

    let u1 = Chart::on(2, &[1]);
    let s = LaurentElement::ratio(u1, 0, 1)?.try_add(&LaurentElement::ratio(u1, 2, 1)?)?;
    println!("x0/x1 + x2/x1 = {s}   (degree {})", s.degree());

    let w = differential(&LaurentElement::ratio(Chart::on(2, &[0]), 1, 0)?)?;
    println!("d(x1/x0): components {:?}", w.components().iter().map(|c| c.to_string()).collect::<Vec<_>>());
    println!("  Euler contraction = {}", w.euler_contraction());

    // D_01 = x0^2/x1 d/dx2 on U_01
    let mut comps = vec![LaurentElement::zero(u01, 1); 3];
    comps[2] = LaurentElement::monomial(u01, &[2, -1, 0], q(1))?;
    let d01 = VectorField::new(0, comps)?;
    let f = LaurentElement::ratio(u01, 2, 1)?;
    println!("D_01(x2/x1) = {}", d01.apply(&f)?);
    let shifted = d01.try_add(&VectorField::euler(u01).mul_function(&f)?)?;
    println!("same field after adding (x2/x1) E: {}", shifted == d01);
    Ok(())
}
