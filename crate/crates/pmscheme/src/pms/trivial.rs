use super::obstruction::ObstructionClass;
use super::scheme::{pair_raw, twisted_witness, PairFamily, SchemeCocycle};
use crate::autgroup::GnElement;
use crate::cech::{log_ratio_form, StandardCover, UnitCocycle};
use crate::exactalg::{LaurentElement, OneForm, VectorField};
use crate::truncated::TruncSeries;
use crate::{Error, Result};
use std::collections::BTreeMap;

/// An extension X_{n+1} of the trivial scheme X_n with line bundle L:
/// delta*_ij(a) = a + eta_ij(a) t^n and delta*_ij(t) = alpha_ij (1 + eps_ij t^{n-1}) t.
/// n = 1 describes a double scheme over X.
#[derive(Clone, Debug)]
pub struct TrivialExtension {
    n: usize,
    l: UnitCocycle,
    eta: PairFamily<VectorField>,
    eps: PairFamily<LaurentElement>,
}

impl TrivialExtension {
    /// eta_ik = eta_ij + alpha_ij^n eta_jk and eps_ik = eps_ij + alpha_ij^{n-1} eps_jk;
    /// eps must vanish when n = 1.
    pub fn new(n: usize, l: UnitCocycle, eta: PairFamily<VectorField>, eps: PairFamily<LaurentElement>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidOrder("n must be at least 1".into()));
        }
        if n == 1 && eps.values().any(|e| !e.is_zero()) {
            return Err(Error::InvalidInput("eps has no meaning for n = 1".into()));
        }
        let cover = l.cover();
        let pairs = |f: &dyn Fn(usize, usize) -> bool| -> Result<()> {
            for i in 0..=cover.m() {
                for j in i + 1..=cover.m() {
                    if !f(i, j) {
                        return Err(Error::InvalidInput(format!("value on ({i},{j}) is not regular on U_{i}{j}")));
                    }
                }
            }
            Ok(())
        };
        pairs(&|i, j| eta.get(&(i, j)).is_none_or(|v| cover.chart(&[i, j]).contains(&v.chart()) && v.twist() == 0))?;
        pairs(&|i, j| eps.get(&(i, j)).is_none_or(|v| cover.chart(&[i, j]).contains(&v.chart()) && v.degree() == 0))?;
        if let Some(w) = twisted_witness(cover, 1, &pair_raw(&eta), &l.power(n as i64)?)? {
            return Err(Error::NotACocycle { witness: w });
        }
        if n >= 2 {
            if let Some(w) = twisted_witness(cover, 1, &pair_raw(&eps), &l.power(n as i64 - 1)?)? {
                return Err(Error::NotACocycle { witness: w });
            }
        }
        Ok(TrivialExtension { n, l, eta, eps })
    }

    pub fn cover(&self) -> StandardCover {
        self.l.cover()
    }

    /// Multiplicity of the trivial scheme being extended.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn line_bundle(&self) -> &UnitCocycle {
        &self.l
    }

    pub fn eta(&self, i: usize, j: usize) -> VectorField {
        self.eta.get(&(i, j)).cloned().unwrap_or_else(|| VectorField::zero(self.cover().chart(&[i, j]), 0))
    }

    pub fn eps(&self, i: usize, j: usize) -> LaurentElement {
        self.eps.get(&(i, j)).cloned().unwrap_or_else(|| LaurentElement::zero(self.cover().chart(&[i, j]), 0))
    }

    /// The gluing cocycle of X_{n+1}, in G_{n+1}.
    pub fn scheme(&self) -> Result<SchemeCocycle> {
        let cover = self.cover();
        let n = self.n;
        let mut transitions = BTreeMap::new();
        for (&(i, j), a) in self.l.values() {
            let chart = cover.chart(&[i, j]);
            let eta = self.eta(i, j);
            let b = chart.pivot();
            let images = (0..chart.nvars())
                .map(|q| {
                    let y = LaurentElement::ratio(chart, q, b)?;
                    let mut s = TruncSeries::constant(&y, n + 1)?;
                    s.set_coeff(n, eta.apply(&y)?)?;
                    Ok(s)
                })
                .collect::<Result<Vec<_>>>()?;
            let mut mu = TruncSeries::constant(a, n)?;
            if n >= 2 {
                mu.set_coeff(n - 1, a.try_mul(&self.eps(i, j))?)?;
            }
            transitions.insert((i, j), GnElement::new(chart, n + 1, b, images, mu)?);
        }
        SchemeCocycle::new(cover, n + 1, transitions)
    }
}

/// A 1-form on U x Z_n: sum_k t^k b_k + (sum_p c_p t^p) dt, k < n, p < n-1.
#[derive(Clone, Debug)]
pub struct FormData {
    pub b: Vec<OneForm>,
    pub c: Vec<LaurentElement>,
}

/// Upsilon_1 = n (<mu, b_0> + c_0 alpha eps); for n = 1 this is <mu, omega>.
pub fn upsilon1(
    omega: &FormData,
    mu: &VectorField,
    alpha: &LaurentElement,
    eps: &LaurentElement,
    n: usize,
) -> Result<LaurentElement> {
    if n == 0 {
        return Err(Error::InvalidOrder("n must be at least 1".into()));
    }
    if omega.b.len() > n || omega.c.len() > n.saturating_sub(1) {
        return Err(Error::InvalidInput(format!("form data does not live on U x Z_{n}")));
    }
    let chart = mu.chart().union(&alpha.chart())?.union(&eps.chart())?;
    let mut acc = match omega.b.first() {
        Some(b0) => mu.contract(b0)?,
        None => LaurentElement::zero(chart, 0),
    };
    if let Some(c0) = omega.c.first() {
        acc = acc.try_add(&c0.try_mul(alpha)?.try_mul(eps)?)?;
    }
    Ok(acc.scale(&crate::exactalg::q(n as i64)))
}

fn pullback_degree_cocycle(cover: StandardCover, p: i64) -> UnitCocycle {
    UnitCocycle::line_bundle(cover, p)
}

/// The image of the canonical class of O(p) (pulled back to the trivial X_n)
/// in H^2(L^n): the cocycle eta_ij(alpha_jk)/alpha_jk with alpha the O(p)
/// cocycle, on U_ijk in the trivialization of U_i.
pub fn delta_trivial(ext: &TrivialExtension, p: i64) -> Result<ObstructionClass<LaurentElement>> {
    let cover = ext.cover();
    let alpha = pullback_degree_cocycle(cover, p);
    let mut raw = BTreeMap::new();
    for t in cover.simplices(2) {
        let (i, j, k) = (t[0], t[1], t[2]);
        let a = alpha.get(j, k)?;
        let v = ext.eta(i, j).apply(&a)?.try_mul(&a.invert()?)?;
        raw.insert(t.clone(), v.with_chart(cover.chart(&t))?);
    }
    ObstructionClass::new(raw, ext.l.power(ext.n as i64)?, "eta(alpha)/alpha")
}

/// The same class through Upsilon_1: delta(tau)_ijk = Upsilon_1^{ij}(rho_jk) with
/// rho_jk = d(alpha_jk)/alpha_jk, the canonical cocycle of O(p); b_0 = rho_jk, c_0 = 0.
pub fn delta_via_upsilon(ext: &TrivialExtension, p: i64) -> Result<ObstructionClass<LaurentElement>> {
    let cover = ext.cover();
    let mut raw = BTreeMap::new();
    for t in cover.simplices(2) {
        let (i, j, k) = (t[0], t[1], t[2]);
        let chart = cover.chart(&[j, k]);
        let rho = log_ratio_form(chart, j, k)?.scale(&crate::exactalg::q(-p));
        let omega = FormData { b: vec![rho], c: vec![] };
        let v = upsilon1(&omega, &ext.eta(i, j), &ext.l.get(i, j)?, &ext.eps(i, j), ext.n)?;
        raw.insert(t.clone(), v.with_chart(cover.chart(&t))?);
    }
    ObstructionClass::new(raw, ext.l.power(ext.n as i64)?, "Upsilon_1")
}

/// D_{i,i+1} = (x_i/x_{i+1}) d/d(x_{i+2}/x_i) = (x_i^2/x_{i+1}) d/dx_{i+2} on
/// U_{i,i+1} of P^2, indices mod 3.
pub fn p2_cyclic_field(i: usize) -> Result<VectorField> {
    let (a, b, c) = (i % 3, (i + 1) % 3, (i + 2) % 3);
    let chart = crate::exactalg::Chart::on(2, &[a, b]);
    let mut e = [0i64; 3];
    e[a] = 2;
    e[b] = -1;
    let coef = LaurentElement::monomial(chart, &e, crate::exactalg::q(1))?;
    let comps = (0..3).map(|q| if q == c { coef.clone() } else { LaurentElement::zero(chart, 1) }).collect();
    VectorField::new(0, comps)
}

/// The family D_ij (i < j) on P^2 generated by the cyclic fields D_01, D_12,
/// D_20, with D_02 = -w_02 D_20 for the weight w_ij = (x_i/x_j)^3.
pub fn p2_rho_prime_family() -> Result<PairFamily<VectorField>> {
    let cover = StandardCover::new(2)?;
    let w = UnitCocycle::line_bundle(cover, -3);
    let mut f = BTreeMap::new();
    f.insert((0, 1), p2_cyclic_field(0)?);
    f.insert((1, 2), p2_cyclic_field(1)?);
    f.insert((0, 2), p2_cyclic_field(2)?.mul_function(&w.get(0, 2)?)?.neg());
    Ok(f)
}

/// The double scheme X_2 over P^2: n = 1, L = O(-3), eta = D.
pub fn p2_x2() -> Result<TrivialExtension> {
    let cover = StandardCover::new(2)?;
    TrivialExtension::new(1, UnitCocycle::line_bundle(cover, -3), p2_rho_prime_family()?, BTreeMap::new())
}

/// X_4 over P^2: the extension of the trivial X_3 with L = O(-1) by the same
/// fields, which form a T(L^3) = T(-3) cocycle.
pub fn p2_x4() -> Result<TrivialExtension> {
    let cover = StandardCover::new(2)?;
    TrivialExtension::new(3, UnitCocycle::line_bundle(cover, -1), p2_rho_prime_family()?, BTreeMap::new())
}
