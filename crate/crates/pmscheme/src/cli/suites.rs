//! Verification suites run by `pms verify`.

use crate::autgroup::{psi_canonical, DerivationRn, GnElement, Phi2, Phi3};
use crate::cech::{class_is_zero, cohomology_dim, top_class_coordinates, trace_form, LineCochain, StandardCover};
use crate::exactalg::{q, rational_text, Chart, LMatrix, LaurentElement, Rational};
use crate::pms::{act_cstar, delta2_obstruction, delta_trivial, p2_x2, p2_x4, psi_triple_product, validate_scheme, ExtPair};
use crate::projbundle::{
    family_dim_chi, family_dim_closed, family_dim_p1xp1, h1_l_chi, h1_l_closed, h1_tl_chi, h1_tl_closed, BundleParams,
    Grid,
};
use crate::sample::Sampler;
use crate::truncated::{ext_lambda, inv_lambda, RingAutomorphism, TruncMatrix};
use crate::Result;
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// A check body returns (passed, detail); an error counts as a failure.
fn check(name: &str, f: impl FnOnce() -> Result<(bool, String)>) -> Check {
    match f() {
        Ok((passed, detail)) => Check { name: name.into(), passed, detail },
        Err(e) => Check { name: name.into(), passed: false, detail: format!("error: {e}") },
    }
}

/// Runs `rounds` randomized cases; stops at the first failing round.
fn rounds(rounds: usize, mut f: impl FnMut(usize) -> Result<bool>) -> Result<(bool, String)> {
    for r in 0..rounds {
        if !f(r)? {
            return Ok((false, format!("fails at round {r}")));
        }
    }
    Ok((true, format!("{rounds} random cases")))
}

fn u012() -> Chart {
    Chart::on(2, &[0, 1, 2])
}

fn inv_x0x1x2(p: i64) -> Result<LaurentElement> {
    LaurentElement::monomial(u012(), &[-1, -1, -1], q(p))
}

pub fn p2_x2_suite() -> Vec<Check> {
    let mut out = vec![check("X_2 glues with L = O(-3)", || {
        let r = validate_scheme(&p2_x2()?.scheme()?)?;
        Ok((r.cocycle_ok && r.l_degree == Some(-3), format!("l_degree {:?}", r.l_degree)))
    })];
    for p in -3..=3 {
        out.push(check(&format!("p = {p}"), || {
            let c = delta_trivial(&p2_x2()?, p)?;
            let v = c.cochain()?.get(&[0, 1, 2]);
            let zero = c.is_zero()?;
            let ok = v == inv_x0x1x2(p)? && zero == (p == 0);
            Ok((ok, format!("lambda_012 = {v}, class zero: {zero}")))
        }));
    }
    out
}

pub fn p2_x4_suite() -> Vec<Check> {
    let mut out = vec![check("X_4 glues with L = O(-1)", || {
        let r = validate_scheme(&p2_x4()?.scheme()?)?;
        Ok((r.cocycle_ok && r.l_degree == Some(-1), format!("l_degree {:?}", r.l_degree)))
    })];
    for p in -3..=3 {
        out.push(check(&format!("p = {p}"), || {
            let c = delta_trivial(&p2_x4()?, p)?;
            let zero = c.is_zero()?;
            Ok((zero == (p == 0), format!("lambda_012 = {}, class zero: {zero}", c.cochain()?.get(&[0, 1, 2]))))
        }));
    }
    out
}

pub fn prop8_suite(seed: u64) -> Vec<Check> {
    vec![check("closed form = Psi triple product", || {
        let mut s = Sampler::new(seed);
        let mut nonzero = 0;
        let res = rounds(100, |r| {
            let pair = s.h2_cocycle((r % 5) as i64 - 2)?;
            let closed = delta2_obstruction(&pair)?;
            if !closed.is_zero_cochain() {
                nonzero += 1;
            }
            Ok(closed.raw() == psi_triple_product(&pair)?.raw())
        })?;
        Ok((res.0, format!("{}, {nonzero} nonzero cochains", res.1)))
    })]
}

fn lemma_one<L: RingAutomorphism>(a: &TruncMatrix, lam: &L) -> Result<bool> {
    let lhs = inv_lambda(&ext_lambda(a, lam)?, lam)?;
    Ok(lhs == ext_lambda(&inv_lambda(a, lam)?, &lam.inverse()?)?)
}

fn lemma_two<L: RingAutomorphism>(a: &TruncMatrix, lam: &L) -> Result<bool> {
    let lhs = inv_lambda(&ext_lambda(a, lam)?, lam)?;
    let cut = inv_lambda(a, lam)?.truncate(a.order())?;
    Ok(lhs == ext_lambda(&cut, &lam.inverse()?)?)
}

pub fn lemmas_suite(seed: u64) -> Vec<Check> {
    let mut out = Vec::new();
    for n in 2..=3usize {
        for r in 1..=2usize {
            out.push(check(&format!("Inv(A_ext) = Inv(A)_ext, n = {n}, r = {r}"), || {
                let mut s = Sampler::new(seed ^ (n * 10 + r) as u64);
                rounds(100, |i| {
                    let c = if i % 2 == 0 { Chart::on(2, &[0]) } else { Chart::on(2, &[0, 1]) };
                    let lam = s.coeff_automorphism(c, n + 1);
                    lemma_one(&s.trunc_matrix(c, r, n + 1), &lam)
                })
            }));
            out.push(check(&format!("Inv(A_ext) = ([Inv(A)]_n)_ext, n = {n}, r = {r}"), || {
                let mut s = Sampler::new(seed ^ (n * 100 + r) as u64);
                rounds(100, |i| {
                    let c = if i % 2 == 0 { Chart::on(2, &[0]) } else { Chart::on(2, &[0, 1]) };
                    let lam = s.coeff_automorphism(c, n + 1);
                    lemma_two(&s.trunc_matrix(c, r, n), &lam)
                })
            }));
        }
    }
    out.push(check("both lemmas for G_{n+1} automorphisms", || {
        let mut s = Sampler::new(seed.wrapping_add(1));
        rounds(12, |i| {
            let (n, r) = (2 + i % 2, 1 + (i / 2) % 2);
            let c = Chart::on(2, &[0, 1]);
            let lam = s.gn(c, n + 1)?;
            Ok(lemma_one(&s.trunc_matrix(c, r, n + 1), &lam)? && lemma_two(&s.trunc_matrix(c, r, n), &lam)?)
        })
    }));
    out
}

fn random_phi3(s: &mut Sampler, c: Chart) -> Phi3 {
    Phi3 { d: s.field(c), mu0: s.unit(c), mu1: s.function(c), d1: s.field(c) }
}

/// A family on the pairs of the P^2 cover with random entries.
fn random_ext_pair(s: &mut Sampler) -> ExtPair {
    let cover = StandardCover::new(2).expect("m = 2");
    let mut g = ExtPair::zero();
    for t in cover.simplices(1) {
        let c = cover.chart(&t);
        g.eta.insert((t[0], t[1]), s.function(c));
        g.eps.insert((t[0], t[1]), s.field(c));
    }
    g
}

pub fn group_laws_suite(seed: u64) -> Vec<Check> {
    let c = u012();
    let mut out = Vec::new();
    out.push(check("G_n group axioms, n = 2..4", || {
        let mut s = Sampler::new(seed);
        rounds(15, |r| {
            let n = 2 + r % 3;
            let (a, b, d) = (s.gn(c, n)?, s.gn(c, n)?, s.gn(c, n)?);
            let id = GnElement::identity(c, n);
            let assoc = a.compose(&b)?.compose(&d)? == a.compose(&b.compose(&d)?)?;
            let unit = a.compose(&id)? == a && id.compose(&a)? == a;
            Ok(assoc && unit && a.compose(&a.invert()?)?.is_identity())
        })
    }));
    out.push(check("order 2 and 3 closed forms = substitution", || {
        let mut s = Sampler::new(seed.wrapping_add(1));
        rounds(100, |_| {
            let a2 = Phi2 { d: s.field(c), mu: s.unit(c) };
            let b2 = Phi2 { d: s.field(c), mu: s.unit(c) };
            let ok2 = a2.compose(&b2)?.to_gn()? == a2.to_gn()?.compose(&b2.to_gn()?)?
                && a2.invert()?.to_gn()? == a2.to_gn()?.invert()?;
            let (a, b) = (random_phi3(&mut s, c), random_phi3(&mut s, c));
            let ok3 = a.compose(&b)?.to_gn()? == a.to_gn()?.compose(&b.to_gn()?)?
                && a.invert()?.to_gn()? == a.to_gn()?.invert()?;
            Ok(ok2 && ok3)
        })
    }));
    out.push(check("canonical lift: Psi(D, mu)^-1 = Psi(D^, mu^)", || {
        let mut s = Sampler::new(seed.wrapping_add(2));
        rounds(100, |_| {
            let psi = psi_canonical(&s.field(c), &s.unit(c), &s.function(c))?;
            let inv = psi.invert()?;
            let hat = psi_canonical(&inv.d, &inv.mu0, &inv.mu1)?;
            Ok(hat == inv && hat.to_gn()? == psi.to_gn()?.invert()?)
        })
    }));
    out.push(check("exp and log are inverse, n = 2..4", || {
        let mut s = Sampler::new(seed.wrapping_add(3));
        rounds(15, |r| {
            let d = s.der0(c, 2 + r % 3)?;
            let chi = d.exp()?;
            Ok(DerivationRn::log(&chi)? == d && DerivationRn::log(&chi)?.exp()? == chi)
        })
    }));
    for r in 1..=3usize {
        out.push(check(&format!("trace forms, r = {r}"), || {
            let mut s = Sampler::new(seed.wrapping_add(10 + r as u64));
            rounds(20, |_| {
                let (m, n) = (s.invertible_matrix(c, r), s.invertible_matrix(c, r));
                let tm = trace_form(&m)?;
                let add = trace_form(&m.try_mul(&n)?)? == tm.try_add(&trace_form(&n)?)?;
                Ok(add && tm == trace_form(&LMatrix::new(1, vec![m.det()])?)?)
            })
        }));
    }
    out.push(check("C* action: weights and group law", || {
        let mut s = Sampler::new(seed.wrapping_add(4));
        let scaled = |g: &ExtPair, a: &Rational, b: &Rational| ExtPair {
            eta: g.eta.iter().map(|(&k, v)| (k, v.scale(a))).collect(),
            eps: g.eps.iter().map(|(&k, v)| (k, v.scale(b))).collect(),
        };
        let res = rounds(20, |r| {
            let g = random_ext_pair(&mut s);
            let n = 2 + r % 4;
            let (l1, l2) = (s.nonzero_rational(), s.nonzero_rational());
            let law = act_cstar(&l1, &act_cstar(&l2, &g, n)?, n)? == act_cstar(&(l1.clone() * l2), &g, n)?;
            let unit = act_cstar(&q(1), &g, n)? == g;
            let w = act_cstar(&l1, &g, n)? == scaled(&g, &num::pow(l1.clone(), n - 1), &num::pow(l1, n));
            Ok(law && unit && w)
        })?;
        let g = random_ext_pair(&mut s);
        // extending X_3 -> X_4 uses weights (2, 3); X_2 -> X_3 uses (1, 2)
        let spot = act_cstar(&q(2), &g, 2)? == scaled(&g, &q(2), &q(4))
            && act_cstar(&q(-1), &g, 4)? == scaled(&g, &q(-1), &q(1));
        Ok((res.0 && spot, format!("{}, spot values {}", res.1, if spot { "ok" } else { "wrong" })))
    }));
    out
}

fn coords_text(c: &BTreeMap<Vec<i64>, Rational>) -> String {
    let parts: Vec<String> = c.iter().map(|(e, v)| format!("{e:?} -> {}", rational_text(v))).collect();
    format!("{{{}}}", parts.join(", "))
}

fn binomial_chi(m: i64, k: i64) -> i64 {
    (1..=m).fold(1i64, |acc, i| acc * (k + i)) / (1..=m).product::<i64>()
}

pub fn serre_duality_suite() -> Vec<Check> {
    let mut out = Vec::new();
    for m in 1..=3usize {
        out.push(check(&format!("P^{m}, |k| <= 8"), || {
            for k in -8..=8i64 {
                let mut chi = 0i64;
                for qq in 0..=m {
                    let h = cohomology_dim(m, k, qq)?;
                    let dual = cohomology_dim(m, -k - m as i64 - 1, m - qq)?;
                    if h != dual {
                        return Ok((false, format!("duality fails at k = {k}, q = {qq}")));
                    }
                    if qq != 0 && qq != m && h != 0 {
                        return Ok((false, format!("h^{qq}(O({k})) = {h}")));
                    }
                    chi += if qq % 2 == 0 { h as i64 } else { -(h as i64) };
                }
                if chi != binomial_chi(m as i64, k) {
                    return Ok((false, format!("Euler characteristic fails at k = {k}")));
                }
            }
            Ok((true, "duality and Euler characteristic".into()))
        }));
    }
    out.push(check("h^2(P^2, O(-3)) = 1, generator 1/(x0 x1 x2)", || {
        let h = cohomology_dim(2, -3, 2)?;
        let mut c = LineCochain::zero(StandardCover::new(2)?, 2, -3);
        c.set(&[0, 1, 2], inv_x0x1x2(1)?)?;
        let coords = top_class_coordinates(&c)?;
        let want: BTreeMap<Vec<i64>, Rational> = [(vec![-1, -1, -1], q(1))].into_iter().collect();
        Ok((h == 1 && coords == want && !class_is_zero(&c)?, format!("h = {h}, class coordinates {}", coords_text(&coords))))
    }));
    out
}

pub fn dim_formulas_suite() -> Vec<Check> {
    let grid = Grid::default();
    let mut out = vec![check("closed forms = Riemann-Roch on the grid", || {
        let mut count = 0;
        for g in grid.g.0..=grid.g.1 {
            for &e in &grid.deg_e {
                for k in grid.k.0..=grid.k.1 {
                    for d in grid.d.0..=grid.d.1 {
                        for n in grid.n.0..=grid.n.1 {
                            let p = BundleParams::semistable(g, e, k, d, n)?;
                            let mut ok = h1_tl_chi(&p)? == h1_tl_closed(&p)? && h1_l_chi(&p)? == h1_l_closed(&p)?;
                            if n >= 2 {
                                ok &= family_dim_chi(&p)? == family_dim_closed(&p)?;
                            }
                            if !ok {
                                return Ok((false, format!("mismatch at g={g} degE={e} k={k} d={d} n={n}")));
                            }
                            count += 1;
                        }
                    }
                }
            }
        }
        Ok((true, format!("{count} grid points")))
    })];
    out.push(check("P^1 x P^1 formula", || {
        for k in grid.k.0..=grid.k.1 {
            for d in grid.d.0..=grid.d.1 {
                for n in 2..=grid.n.1 {
                    let p = BundleParams::semistable(0, 0, k, d, n)?;
                    let want = d * (3 * k * n * n - 5 * n - 2 * k * n + k + 1) + 5 * k * n - 7 - k;
                    if family_dim_p1xp1(k, d, n) != want || family_dim_chi(&p)? != want {
                        return Ok((false, format!("mismatch at k={k} d={d} n={n}")));
                    }
                }
            }
        }
        Ok((true, "d(3kn^2-5n-2kn+k+1)+5kn-7-k".into()))
    }));
    out
}

