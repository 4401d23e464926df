use pmscheme::autgroup::{psi_canonical, triple_defect, DerivationRn, GnElement, GnJson, HnElement, Phi2, Phi3};
use pmscheme::exactalg::{q, qr, Chart, LaurentElement, VectorField};
use pmscheme::sample::Sampler;
use pmscheme::truncated::TruncSeries;

fn u01() -> Chart {
    Chart::on(2, &[0, 1])
}

fn u012() -> Chart {
    Chart::on(2, &[0, 1, 2])
}

fn series(v: Vec<LaurentElement>) -> TruncSeries {
    TruncSeries::new(v).unwrap()
}

fn r(c: Chart, a: usize, b: usize) -> LaurentElement {
    LaurentElement::ratio(c, a, b).unwrap()
}

#[test]
fn substitution_expands_square() {
    let c = u01();
    let z = LaurentElement::zero(c, 0);
    let images = vec![
        TruncSeries::one(c, 3),
        series(vec![r(c, 1, 0), z.clone(), z.clone()]),
        series(vec![r(c, 2, 0), r(c, 0, 1), z.clone()]),
    ];
    let phi = GnElement::new(c, 3, 0, images, TruncSeries::one(c, 2)).unwrap();
    let f = TruncSeries::constant(&r(c, 2, 0).pow(2).unwrap(), 3).unwrap();
    // (y + w t)^2 expanded by hand
    let y = r(c, 2, 0);
    let w = r(c, 0, 1);
    let expected = series(vec![&y * &y, (&y * &w).scale(&q(2)), &w * &w]);
    assert_eq!(phi.apply(&f).unwrap(), expected);
}

#[test]
fn apply_is_a_ring_homomorphism_and_scales_t() {
    let mut s = Sampler::new(11);
    for n in 2..=4 {
        let phi = s.gn(u012(), n).unwrap();
        let f = s.series(u012(), n);
        let g = s.series(u012(), n);
        assert_eq!(
            phi.apply(&f.try_mul(&g).unwrap()).unwrap(),
            phi.apply(&f).unwrap().try_mul(&phi.apply(&g).unwrap()).unwrap()
        );
        let t = TruncSeries::t(u012(), n);
        assert_eq!(phi.apply(&t).unwrap(), phi.mu().pad(n).mul_t());
    }
}

#[test]
fn group_axioms_on_random_elements() {
    let mut s = Sampler::new(7);
    for chart in [u01(), u012()] {
        for n in 2..=4 {
            for _ in 0..3 {
                let a = s.gn(chart, n).unwrap();
                let b = s.gn(chart, n).unwrap();
                let c = s.gn(chart, n).unwrap();
                let id = GnElement::identity(chart, n);
                assert_eq!(a.compose(&id).unwrap(), a);
                assert_eq!(id.compose(&a).unwrap(), a);
                assert!(a.compose(&a.invert().unwrap()).unwrap().is_identity());
                assert!(a.invert().unwrap().compose(&a).unwrap().is_identity());
                let left = a.compose(&b).unwrap().compose(&c).unwrap();
                let right = a.compose(&b.compose(&c).unwrap()).unwrap();
                assert_eq!(left, right);
                // composition is substitution: (a o b)(f) = a(b(f))
                let f = s.series(chart, n);
                assert_eq!(a.compose(&b).unwrap().apply(&f).unwrap(), a.apply(&b.apply(&f).unwrap()).unwrap());
            }
        }
    }
}

#[test]
fn reduce_is_a_homomorphism() {
    let mut s = Sampler::new(3);
    let a = s.gn(u012(), 4).unwrap();
    let b = s.gn(u012(), 4).unwrap();
    for k in 2..4 {
        assert_eq!(
            a.compose(&b).unwrap().reduce(k).unwrap(),
            a.reduce(k).unwrap().compose(&b.reduce(k).unwrap()).unwrap()
        );
    }
    assert!(GnElement::identity(u01(), 3).reduce(2).unwrap().is_identity());
    assert!(a.reduce(1).is_err());
}

#[test]
fn reduce_of_phi3_is_phi2() {
    let mut s = Sampler::new(5);
    let d = s.field(u012());
    let d1 = s.field(u012());
    let mu = s.unit_series(u012(), 2);
    let g = GnElement::phi3(&d, &mu, &d1).unwrap();
    assert_eq!(g.reduce(2).unwrap(), GnElement::phi2(&d, mu.coeff(0)).unwrap());
}

#[test]
fn order_two_closed_forms() {
    let mut s = Sampler::new(17);
    for _ in 0..5 {
        let a = Phi2 { d: s.field(u012()), mu: s.unit(u012()) };
        let b = Phi2 { d: s.field(u012()), mu: s.unit(u012()) };
        assert_eq!(a.compose(&b).unwrap().to_gn().unwrap(), a.to_gn().unwrap().compose(&b.to_gn().unwrap()).unwrap());
        assert_eq!(a.invert().unwrap().to_gn().unwrap(), a.to_gn().unwrap().invert().unwrap());
    }
}

fn random_phi3(s: &mut Sampler, c: Chart) -> Phi3 {
    Phi3 { d: s.field(c), mu0: s.unit(c), mu1: s.function(c), d1: s.field(c) }
}

#[test]
fn order_three_closed_forms() {
    let mut s = Sampler::new(19);
    for _ in 0..5 {
        let a = random_phi3(&mut s, u012());
        let b = random_phi3(&mut s, u012());
        let generic = a.to_gn().unwrap().compose(&b.to_gn().unwrap()).unwrap();
        assert_eq!(a.compose(&b).unwrap().to_gn().unwrap(), generic);
        assert_eq!(Phi3::from_gn(&generic).unwrap(), a.compose(&b).unwrap());
        assert_eq!(a.invert().unwrap().to_gn().unwrap(), a.to_gn().unwrap().invert().unwrap());
    }
}

#[test]
fn mu1_of_closed_product() {
    // mu''_1 = mu'_0 D'(mu_0) + mu'_0^2 mu_1 + mu_0 mu'_1, written out on U_012
    let c = u012();
    let outer = Phi3 {
        d: VectorField::from_affine(c, 0, &[LaurentElement::zero(c, 0), r(c, 2, 0), LaurentElement::zero(c, 0)]).unwrap(),
        mu0: LaurentElement::int(c, 2),
        mu1: LaurentElement::int(c, 1),
        d1: VectorField::zero(c, 0),
    };
    let inner = Phi3 { d: VectorField::zero(c, 0), mu0: r(c, 1, 0), mu1: LaurentElement::int(c, 3), d1: VectorField::zero(c, 0) };
    // D'(x1/x0) = x2/x0, so mu''_1 = 2 x2/x0 + 4*3 + (x1/x0)*1
    let expected = r(c, 2, 0).scale(&q(2)).try_add(&LaurentElement::int(c, 12)).unwrap().try_add(&r(c, 1, 0)).unwrap();
    assert_eq!(outer.compose(&inner).unwrap().mu1, expected);
}

#[test]
fn canonical_lift_inverse() {
    let mut s = Sampler::new(23);
    for _ in 0..5 {
        let (d, m0, m1) = (s.field(u012()), s.unit(u012()), s.function(u012()));
        let psi = psi_canonical(&d, &m0, &m1).unwrap();
        let inv = psi.invert().unwrap();
        let hat = psi_canonical(&inv.d, &inv.mu0, &inv.mu1).unwrap();
        assert_eq!(hat, inv);
        assert_eq!(hat.to_gn().unwrap(), psi.to_gn().unwrap().invert().unwrap());
    }
    let c = u01();
    let id = psi_canonical(&VectorField::zero(c, 0), &LaurentElement::one(c), &LaurentElement::zero(c, 0)).unwrap();
    assert!(id.to_gn().unwrap().is_identity());
}

#[test]
fn triple_defect_matches_generic_products() {
    let mut s = Sampler::new(29);
    for _ in 0..5 {
        let c = u012();
        let (dp, m0p, m1p) = (s.field(c), s.unit(c), s.function(c));
        let (d, m0, m1) = (s.field(c), s.unit(c), s.function(c));
        let outer = psi_canonical(&dp, &m0p, &m1p).unwrap().to_gn().unwrap();
        let inner = psi_canonical(&d, &m0, &m1).unwrap().to_gn().unwrap();
        let prod = Phi3::from_gn(&outer.compose(&inner).unwrap()).unwrap();
        let third = psi_canonical(&prod.d, &prod.mu0, &prod.mu1).unwrap().to_gn().unwrap();
        let defect = outer.compose(&inner).unwrap().compose(&third.invert().unwrap()).unwrap();
        let expected = triple_defect((&dp, &m0p, &m1p), (&d, &m0, &m1)).unwrap();
        let target = GnElement::phi3(&VectorField::zero(c, 0), &TruncSeries::one(c, 2), &expected).unwrap();
        assert_eq!(defect, target);
    }
}

#[test]
fn exp_and_log_are_inverse() {
    let mut s = Sampler::new(31);
    for n in 2..=4 {
        for _ in 0..3 {
            let d = s.der0(u012(), n).unwrap();
            let chi = d.exp().unwrap();
            assert!(chi.mu().coeff(0).as_constant().is_some_and(|c| c == q(1)));
            assert_eq!(DerivationRn::log(&chi).unwrap(), d);
            assert_eq!(DerivationRn::log(&chi).unwrap().exp().unwrap(), chi);
        }
    }
    assert!(DerivationRn::zero(u01(), 3).exp().unwrap().is_identity());
    assert_eq!(DerivationRn::log(&GnElement::identity(u01(), 3)).unwrap(), DerivationRn::zero(u01(), 3));
}

#[test]
fn order_two_exponential_is_one_plus_d() {
    let mut s = Sampler::new(37);
    let d = s.der0(u012(), 2).unwrap();
    let chi = d.exp().unwrap();
    let f = s.series(u012(), 2);
    assert_eq!(chi.apply(&f).unwrap(), f.try_add(&d.apply(&f).unwrap()).unwrap());
}

#[test]
fn exponential_product_in_order_three() {
    let mut s = Sampler::new(41);
    for _ in 0..3 {
        let d = s.der0(u012(), 3).unwrap();
        let e = s.der0(u012(), 3).unwrap();
        let lhs = d.exp().unwrap().compose(&e.exp().unwrap()).unwrap();
        // (I + D + D^2/2)(I + E + E^2/2) = I + (D + E) + (D + E)^2/2 + (DE - ED)/2 in order 3
        let rhs = d.try_add(&e).unwrap().try_add(&d.commutator(&e).unwrap().scale(&qr(1, 2))).unwrap();
        assert_eq!(lhs, rhs.exp().unwrap());
        // the opposite sign differs whenever the commutator is nonzero
        let flipped = d.try_add(&e).unwrap().try_add(&e.commutator(&d).unwrap().scale(&qr(1, 2))).unwrap();
        assert_eq!(lhs == flipped.exp().unwrap(), d.commutator(&e).unwrap() == DerivationRn::zero(u012(), 3));
    }
}

#[test]
fn commuting_exponentials() {
    let mut s = Sampler::new(43);
    for n in 3..=4 {
        // b = 0 so that f(t) D commutes with D when f has constant coefficients
        let mut d = s.der0(u012(), n).unwrap();
        d = DerivationRn::new((0..n).map(|r| d.field(r).clone()).collect(), TruncSeries::zero(u012(), n)).unwrap();
        let f = TruncSeries::new((0..n).map(|_| LaurentElement::constant(u012(), s.rational())).collect()).unwrap();
        let e = d.mul_series(&f).unwrap();
        assert!(d.commutator(&e).unwrap() == DerivationRn::zero(u012(), n));
        assert_eq!(d.try_add(&e).unwrap().exp().unwrap(), d.exp().unwrap().compose(&e.exp().unwrap()).unwrap());
    }
}

#[test]
fn hn_group_law() {
    let mut s = Sampler::new(47);
    for n in 2..=3 {
        let mk = |s: &mut Sampler| {
            let phi = s.gn(u012(), n).unwrap();
            let mut u = phi.mu().pad(n);
            u.set_coeff(n - 1, s.function(u012())).unwrap();
            HnElement::new(phi, u).unwrap()
        };
        let a = mk(&mut s);
        let b = mk(&mut s);
        let c = mk(&mut s);
        let id = HnElement::identity(u012(), n);
        assert!(a.compose(&id).unwrap().same_representative(&a));
        assert!(id.compose(&a).unwrap().same_representative(&a));
        assert!(a.compose(&a.invert().unwrap()).unwrap().same_representative(&id));
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        assert!(left.same_representative(&right));
    }
}

#[test]
fn json_roundtrip() {
    let mut s = Sampler::new(53);
    let g = s.gn(u01(), 3).unwrap();
    let j = GnJson::from_element(&g);
    let text = serde_json::to_string(&j).unwrap();
    let back: GnJson = serde_json::from_str(&text).unwrap();
    assert_eq!(back.to_element(2).unwrap(), g);
}

#[test]
fn rebasing_keeps_the_automorphism() {
    let mut s = Sampler::new(59);
    let g = s.gn(u012(), 3).unwrap();
    let h = g.rebase(2).unwrap();
    let f = s.series(u012(), 3);
    assert_eq!(g.apply(&f).unwrap(), h.apply(&f).unwrap());
    assert_eq!(h, g);
}
