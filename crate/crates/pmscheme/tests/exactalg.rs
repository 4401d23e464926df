use pmscheme::exactalg::{differential, q, Chart, LaurentElement, OneForm, VectorField};
use pmscheme::sample::Sampler;
use pmscheme::Error;

fn mono(c: Chart, e: &[i64], k: i64) -> LaurentElement {
    LaurentElement::monomial(c, e, q(k)).unwrap()
}

#[test]
fn arithmetic_examples() {
    let c = Chart::on(2, &[0, 1]);
    let a = LaurentElement::ratio(c, 0, 1).unwrap();
    let b = LaurentElement::ratio(c, 1, 0).unwrap();
    assert_eq!(a.try_mul(&b).unwrap(), LaurentElement::one(c));

    let u1 = Chart::on(2, &[1]);
    let s = LaurentElement::ratio(u1, 0, 1).unwrap().try_add(&LaurentElement::ratio(u1, 2, 1).unwrap()).unwrap();
    assert_eq!(s.degree(), 0);
    assert_eq!(s, mono(u1, &[1, -1, 0], 1).try_add(&mono(u1, &[0, -1, 1], 1)).unwrap());

    let c = Chart::on(2, &[0, 1, 2]);
    let p = mono(c, &[3, -3, 0], 1).try_mul(&mono(c, &[-1, 2, -1], 1)).unwrap();
    assert_eq!(p, mono(c, &[2, -1, -1], 1));
    assert_eq!(p.degree(), 0);
}

#[test]
fn inversion_examples() {
    let c = Chart::on(2, &[0, 1]);
    let a = mono(c, &[3, -3, 0], 1);
    assert_eq!(a.invert().unwrap(), mono(c, &[-3, 3, 0], 1));
    assert_eq!(LaurentElement::one(c).invert().unwrap(), LaurentElement::one(c));
    let s = LaurentElement::var(c, 0).try_add(&LaurentElement::var(c, 1)).unwrap();
    assert!(matches!(s.invert(), Err(Error::NotAUnit(_))));
    let u0 = Chart::on(2, &[0]);
    assert_eq!(LaurentElement::ratio(u0, 1, 0).unwrap().invert().unwrap_err(), Error::ChartViolation { index: 1 });
}

#[test]
fn differential_examples() {
    let c = Chart::on(2, &[0]);
    let w = differential(&LaurentElement::ratio(c, 1, 0).unwrap()).unwrap();
    assert_eq!(w.component(0), &mono(c, &[-2, 1, 0], -1));
    assert_eq!(w.component(1), &mono(c, &[-1, 0, 0], 1));
    assert!(w.component(2).is_zero());
    assert!(w.euler_contraction().is_zero());
    assert!(differential(&LaurentElement::one(c)).unwrap().is_zero());
    assert!(differential(&LaurentElement::var(c, 1)).is_err());
}

// d((x1/x2)^-p) = -p (x2/x1) d(x1/x2) times (x1/x2)^-p.
#[test]
fn differential_of_power_has_factor_minus_p() {
    let c = Chart::on(2, &[1, 2]);
    let base = LaurentElement::ratio(c, 1, 2).unwrap();
    let dlog = differential(&base).unwrap().mul_function(&base.invert().unwrap()).unwrap();
    for p in -3..=3i64 {
        let f = base.pow(-p).unwrap();
        let want = dlog.mul_function(&f).unwrap().scale(&q(-p));
        assert_eq!(differential(&f).unwrap(), want);
    }
}

#[test]
fn field_examples() {
    let c = Chart::on(2, &[0, 1]);
    let d01 = VectorField::new(0, vec![
        LaurentElement::zero(c, 1),
        LaurentElement::zero(c, 1),
        mono(c, &[2, -1, 0], 1),
    ])
    .unwrap();
    assert!(d01.apply(&LaurentElement::one(c)).unwrap().is_zero());
    // D_01 (x2/x1) = x0^2/x1^2.
    assert_eq!(d01.apply(&LaurentElement::ratio(c, 2, 1).unwrap()).unwrap(), mono(c, &[2, -2, 0], 1));
    let w = differential(&LaurentElement::ratio(c, 2, 0).unwrap()).unwrap();
    assert!(VectorField::euler(c).contract(&w).unwrap().is_zero());
    assert!(VectorField::euler(c).is_zero());
}

#[test]
fn random_identities() {
    let mut s = Sampler::new(31);
    let charts = [Chart::on(2, &[0]), Chart::on(2, &[0, 1]), Chart::on(2, &[0, 1, 2]), Chart::on(3, &[1, 3])];
    for c in charts {
        for _ in 0..20 {
            let (f, g, h) = (s.function(c), s.function(c), s.function(c));
            let fg = f.try_mul(&g).unwrap();
            assert_eq!(fg, g.try_mul(&f).unwrap());
            assert_eq!(fg.try_mul(&h).unwrap(), f.try_mul(&g.try_mul(&h).unwrap()).unwrap());
            let lhs = f.try_mul(&g.try_add(&h).unwrap()).unwrap();
            assert_eq!(lhs, fg.try_add(&f.try_mul(&h).unwrap()).unwrap());

            let leibniz = differential(&g).unwrap().mul_function(&f).unwrap()
                .try_add(&differential(&f).unwrap().mul_function(&g).unwrap())
                .unwrap();
            let dfg = differential(&fg).unwrap();
            assert_eq!(dfg, leibniz);
            assert!(dfg.euler_contraction().is_zero());

            // Adding a multiple of the Euler field changes nothing.
            let v = s.field(c);
            let e = VectorField::euler(c).mul_function(&s.function(c)).unwrap();
            let v2 = v.try_add(&e).unwrap();
            assert_eq!(v, v2);
            let w: OneForm = differential(&h).unwrap();
            assert_eq!(v.apply(&f).unwrap(), v2.apply(&f).unwrap());
            assert_eq!(v.contract(&w).unwrap(), v2.contract(&w).unwrap());
            assert_eq!(v.apply(&f).unwrap(), v.contract(&differential(&f).unwrap()).unwrap());
        }
    }
}

#[test]
fn text_form_roundtrip() {
    let mut s = Sampler::new(8);
    let c = Chart::on(3, &[0, 2]);
    for _ in 0..20 {
        let f = s.function(c);
        assert_eq!(LaurentElement::parse(&f.to_string(), c, 0).unwrap(), f);
    }
}
