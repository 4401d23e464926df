use pmscheme::cech::*;
use pmscheme::exactalg::{differential, q, Chart, LMatrix, LaurentElement, OneForm, VectorField};
use pmscheme::sample::Sampler;
use pmscheme::Error;

fn p2() -> StandardCover {
    StandardCover::new(2).unwrap()
}

fn mono(m: usize, s: &[usize], e: &[i64], c: i64) -> LaurentElement {
    LaurentElement::monomial(Chart::on(m, s), e, q(c)).unwrap()
}

/// Counts exponent vectors by brute force.
fn enumerate(m: usize, k: i64, all_negative: bool) -> u64 {
    let (lo, hi) = if all_negative { (k - 1, -1) } else { (0, k.max(0)) };
    let mut count = 0;
    let mut v = vec![lo; m + 1];
    loop {
        if v.iter().sum::<i64>() == k {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i > m {
                return count;
            }
            if v[i] < hi {
                v[i] += 1;
                break;
            }
            v[i] = lo;
            i += 1;
        }
    }
}

#[test]
fn line_bundle_cohomology_examples() {
    assert_eq!(cohomology_dim(2, -3, 2).unwrap(), 1);
    assert_eq!(cohomology_dim(2, 1, 0).unwrap(), 3);
    assert_eq!(cohomology_dim(3, -5, 3).unwrap(), 4);
    assert!(cohomology_dim(2, 0, 3).is_err());
}

#[test]
fn cohomology_matches_enumeration_duality_and_euler() {
    for m in 1..=3usize {
        for k in -7..=4i64 {
            let h0 = cohomology_dim(m, k, 0).unwrap();
            let hm = cohomology_dim(m, k, m).unwrap();
            assert_eq!(h0, if k >= 0 { enumerate(m, k, false) } else { 0 });
            assert_eq!(hm, if k < 0 { enumerate(m, k, true) } else { 0 });
            for qq in 1..m {
                assert_eq!(cohomology_dim(m, k, qq).unwrap(), 0);
            }
            for qq in 0..=m {
                assert_eq!(cohomology_dim(m, k, qq).unwrap(), cohomology_dim(m, -k - m as i64 - 1, m - qq).unwrap());
            }
            // chi(O(k)) = binom(k+m, m) as a polynomial in k
            let mut chi: i64 = 0;
            for qq in 0..=m {
                let h = cohomology_dim(m, k, qq).unwrap() as i64;
                chi += if qq % 2 == 0 { h } else { -h };
            }
            let mut poly = 1i64;
            for i in 1..=m as i64 {
                poly *= k + i;
            }
            poly /= (1..=m as i64).product::<i64>();
            assert_eq!(chi, poly);
        }
    }
}

fn rho() -> FormCochain {
    let mut c = FormCochain::zero(p2(), 1, 0);
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        c.set(&[i, j], log_ratio_form(Chart::on(2, &[i, j]), i, j).unwrap()).unwrap();
    }
    c
}

#[test]
fn canonical_cochain_of_tautological_bundle() {
    let r = rho();
    assert!(r.is_cocycle().unwrap());
    assert_eq!(nabla0(&UnitCocycle::line_bundle(p2(), -1)).unwrap(), r);
    assert!(nabla0(&UnitCocycle::trivial(p2())).unwrap().is_zero());
    for p in [-2i64, 1, 3] {
        let expected = r.map(0, |_, w| Ok(w.scale(&q(-p)))).unwrap();
        assert_eq!(nabla0(&UnitCocycle::line_bundle(p2(), p)).unwrap(), expected);
    }
    assert!(FormCochain::zero(p2(), 1, 0).is_cocycle().unwrap());
}

#[test]
fn perturbed_cochain_fails_with_witness() {
    let mut r = rho();
    let c = Chart::on(2, &[0, 1]);
    let bump = differential(&LaurentElement::ratio(c, 2, 0).unwrap()).unwrap();
    r.set(&[0, 1], r.get(&[0, 1]).try_add(&bump).unwrap()).unwrap();
    assert_eq!(r.cocycle_witness().unwrap(), Some(vec![0, 1, 2]));
    assert!(matches!(form_class_is_zero(&r), Err(Error::NotACocycle { .. })));
}

#[test]
fn canonical_class_coordinates() {
    assert_eq!(form_class_coordinate(&rho()).unwrap(), q(-1));
    for p in [-3i64, 1, 2] {
        let c = nabla0(&UnitCocycle::line_bundle(p2(), p)).unwrap();
        assert_eq!(form_class_coordinate(&c).unwrap(), q(p));
        assert!(!form_class_is_zero(&c).unwrap());
    }
    let a = UnitCocycle::line_bundle(p2(), 2);
    let b = UnitCocycle::line_bundle(p2(), -5);
    assert_eq!(
        nabla0(&a.tensor(&b).unwrap()).unwrap(),
        nabla0(&a).unwrap().try_add(&nabla0(&b).unwrap()).unwrap()
    );
}

#[test]
fn top_class_of_inverse_monomial() {
    let mut c = LineCochain::zero(p2(), 2, -3);
    c.set(&[0, 1, 2], mono(2, &[0, 1, 2], &[-1, -1, -1], 1)).unwrap();
    assert!(!class_is_zero(&c).unwrap());
    assert!(solve_coboundary(&c).unwrap().is_none());
}

#[test]
fn top_class_with_positive_exponent_is_zero() {
    let mut c = LineCochain::zero(p2(), 2, -3);
    let v = mono(2, &[1, 2], &[1, -2, -2], 1);
    c.set(&[0, 1, 2], v.clone()).unwrap();
    assert!(class_is_zero(&c).unwrap());
    // explicit preimage: put the value on U_12; (delta tau)_012 = tau_12
    let mut tau = LineCochain::zero(p2(), 1, -3);
    tau.set(&[1, 2], v).unwrap();
    assert_eq!(tau.coboundary().unwrap(), c);
    let found = solve_coboundary(&c).unwrap().unwrap();
    assert_eq!(found.coboundary().unwrap(), c);
}

fn random_line_cochain(s: &mut Sampler, cover: StandardCover, qq: usize, k: i64) -> LineCochain {
    let mut c = LineCochain::zero(cover, qq, k);
    for simplex in cover.simplices(qq) {
        let chart = cover.chart(&simplex);
        let mut e = vec![0i64; cover.m() + 1];
        e[simplex[0]] = k;
        let f = s.function(chart).try_mul(&LaurentElement::monomial(chart, &e, q(1)).unwrap()).unwrap();
        c.set(&simplex, f).unwrap();
    }
    c
}

#[test]
fn coboundaries_have_zero_class() {
    let mut s = Sampler::new(5);
    for m in 2..=3 {
        let cover = StandardCover::new(m).unwrap();
        for qq in 0..m {
            for k in [-4i64, -1, 0, 2] {
                let x = random_line_cochain(&mut s, cover, qq, k);
                let dx = x.coboundary().unwrap();
                assert!(class_is_zero(&dx).unwrap());
                let tau = solve_coboundary(&dx).unwrap().unwrap();
                assert_eq!(tau.coboundary().unwrap(), dx);
            }
        }
        // adding a coboundary does not change the top class
        let mut top = LineCochain::zero(cover, m, -(m as i64) - 1);
        let all: Vec<usize> = (0..=m).collect();
        top.set(&all, LaurentElement::monomial(cover.chart(&all), &vec![-1; m + 1], q(2)).unwrap()).unwrap();
        let x = random_line_cochain(&mut s, cover, m - 1, -(m as i64) - 1);
        let shifted = top.try_add(&x.coboundary().unwrap()).unwrap();
        assert!(!class_is_zero(&shifted).unwrap());
        assert_eq!(top_class_coordinates(&shifted).unwrap(), top_class_coordinates(&top).unwrap());
    }
}

#[test]
fn twisted_and_homogeneous_cocycle_tests_agree() {
    let mut s = Sampler::new(8);
    for k in [-3i64, 1] {
        let alpha = UnitCocycle::line_bundle(p2(), k);
        let x = random_line_cochain(&mut s, p2(), 0, k);
        let dx = x.coboundary().unwrap();
        assert_eq!(twisted_cocycle_witness(p2(), 1, &dx.trivialized().unwrap(), &alpha).unwrap(), None);
        let mut bad = dx.clone();
        bad.set(&[0, 1], dx.get(&[0, 1]).try_add(&mono(2, &[0, 1], &[k + 1, -1, 0], 1)).unwrap()).unwrap();
        assert_eq!(twisted_cocycle_witness(p2(), 1, &bad.trivialized().unwrap(), &alpha).unwrap(), Some(vec![0, 1, 2]));
    }
}

fn rho_prime() -> FieldCochain {
    // rho'_{i,i+1} = (x_i/x_{i+1}) x_i d/dx_{i+2} / x_i^3, stored on increasing pairs
    let mut c = FieldCochain::zero(p2(), 1, -3);
    for i in 0..3usize {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        let s = if i < j { [i, j] } else { [j, i] };
        let chart = Chart::on(2, &s);
        let mut e = vec![0i64; 3];
        e[i] = -1;
        e[j] = -1;
        let f = LaurentElement::monomial(chart, &e, q(1)).unwrap();
        let v = VectorField::coordinate(chart, k).mul_function(&f).unwrap();
        c.set(&s, if i < j { v } else { v.neg() }).unwrap();
    }
    c
}

#[test]
fn tangent_class_generator_is_nonzero() {
    let r = rho_prime();
    assert!(r.is_cocycle().unwrap());
    let w = euler_connecting_class(&r).unwrap();
    let mut expected = LineCochain::zero(p2(), 2, -3);
    expected.set(&[0, 1, 2], mono(2, &[0, 1, 2], &[-1, -1, -1], 1)).unwrap();
    assert_eq!(w, expected);
    assert!(!field_class_is_zero(&r).unwrap());
}

#[test]
fn tangent_coboundaries_are_zero() {
    let mut s = Sampler::new(13);
    for k in [-3i64, -6, 0] {
        let mut x = FieldCochain::zero(p2(), 0, k);
        for i in 0..3 {
            let chart = Chart::on(2, &[i]);
            x.set(&[i], s.field_with_twist(chart, k)).unwrap();
        }
        let dx = x.coboundary().unwrap();
        assert!(field_class_is_zero(&dx).unwrap());
        let sum = rho_prime();
        if k == -3 {
            assert!(!field_class_is_zero(&sum.try_add(&dx).unwrap()).unwrap());
        }
    }
}

#[test]
fn top_tangent_classes() {
    let top = [0usize, 1, 2];
    let chart = Chart::on(2, &top);
    let field = |e: [i64; 3], qi: usize| {
        VectorField::coordinate(chart, qi).mul_function(&LaurentElement::monomial(chart, &e, q(1)).unwrap()).unwrap()
    };
    // x^b with b = (-2,-2,-2) reaches all three components: a single one is not in the image
    let mut c = FieldCochain::zero(p2(), 2, -6);
    c.set(&top, field([-2, -1, -2], 1)).unwrap();
    assert!(!field_class_is_zero(&c).unwrap());
    // b = (-4,-1,-1) only reaches component 0, so x^{b+e_0} d/dx_0 is in the image
    let mut z = FieldCochain::zero(p2(), 2, -6);
    z.set(&top, field([-3, -1, -1], 0)).unwrap();
    assert!(field_class_is_zero(&z).unwrap());
}

#[test]
fn trace_forms() {
    let c = Chart::on(2, &[0, 1]);
    assert!(trace_form(&LMatrix::identity(c, 2)).unwrap().is_zero());
    let l1 = LaurentElement::ratio(c, 1, 0).unwrap().scale(&q(3));
    let l2 = LaurentElement::ratio(c, 0, 1).unwrap().pow(2).unwrap();
    let d = LMatrix::diagonal(&[l1.clone(), l2.clone()]);
    let expected: OneForm = differential(&l1)
        .unwrap()
        .mul_function(&l1.invert().unwrap())
        .unwrap()
        .try_add(&differential(&l2).unwrap().mul_function(&l2.invert().unwrap()).unwrap())
        .unwrap();
    assert_eq!(trace_form(&d).unwrap(), expected);
}

#[test]
fn trace_of_product_and_determinant() {
    let mut s = Sampler::new(21);
    let c = Chart::on(2, &[0, 1, 2]);
    let z = LaurentElement::zero(c, 0);
    for _ in 0..5 {
        // triangular with unit diagonals, so the determinants are units
        let m = LMatrix::new(2, vec![s.unit(c), s.function(c), z.clone(), s.unit(c)]).unwrap();
        let n = LMatrix::new(2, vec![s.unit(c), z.clone(), s.function(c), s.unit(c)]).unwrap();
        let tm = trace_form(&m).unwrap();
        let det = LMatrix::new(1, vec![m.det()]).unwrap();
        assert_eq!(tm, trace_form(&det).unwrap());
        let mn = m.try_mul(&n).unwrap();
        assert_eq!(trace_form(&mn).unwrap(), tm.try_add(&trace_form(&n).unwrap()).unwrap());
        assert_eq!(trace_form(&mn).unwrap(), trace_form(&LMatrix::new(1, vec![mn.det()]).unwrap()).unwrap());
    }
}

#[test]
fn cochain_json_roundtrip() {
    let mut c = LineCochain::zero(p2(), 2, -3);
    c.set(&[0, 1, 2], mono(2, &[0, 1, 2], &[-1, -1, -1], 4)).unwrap();
    let j = CochainJson::from_cochain(&c);
    let text = serde_json::to_string(&j).unwrap();
    assert!(text.contains("\"0,1,2\""));
    let back: CochainJson = serde_json::from_str(&text).unwrap();
    assert_eq!(back.to_cochain().unwrap(), c);
}
