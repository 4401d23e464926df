use super::scheme::{homogenize, pair_raw, standard_degree, twisted_witness, PairFamily};
use crate::cech::{class_is_zero, field_class_is_zero, StandardCover, UnitCocycle};
use crate::exactalg::{half, LaurentElement, Rational, VectorField};
use crate::{Error, Result};
use num::Zero;
use std::collections::BTreeMap;

/// gamma = (eta, eps): eta_ik = eta_ij + w_ij eta_jk and eps_ik = eps_ij + w'_ij eps_jk,
/// where (w, w') = (nu, nu^2) for extensions of a double scheme and
/// (nu^{n-1}, nu^n) for extensions of the trivial X_n.
#[derive(Clone, Debug, PartialEq)]
pub struct ExtPair {
    pub eta: PairFamily<LaurentElement>,
    pub eps: PairFamily<VectorField>,
}

impl ExtPair {
    pub fn zero() -> Self {
        ExtPair { eta: BTreeMap::new(), eps: BTreeMap::new() }
    }

    /// First failing triple for the weights (nu^a, nu^b).
    pub fn cocycle_witness(&self, nu: &UnitCocycle, a: i64, b: i64) -> Result<Option<Vec<usize>>> {
        let cover = nu.cover();
        if let Some(w) = twisted_witness(cover, 1, &pair_raw(&self.eta), &nu.power(a)?)? {
            return Ok(Some(w));
        }
        twisted_witness(cover, 1, &pair_raw(&self.eps), &nu.power(b)?)
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self> {
        Ok(ExtPair { eta: sub_family(&self.eta, &o.eta)?, eps: sub_family(&self.eps, &o.eps)? })
    }

    /// Whether the two components vanish in H^1(L^a) and H^1(T (x) L^b).
    /// Needs nu to be the standard cocycle of some O(k).
    pub fn class_is_zero(&self, nu: &UnitCocycle, a: i64, b: i64) -> Result<bool> {
        if let Some(w) = self.cocycle_witness(nu, a, b)? {
            return Err(Error::NotACocycle { witness: w });
        }
        let k = standard_degree(nu).ok_or_else(|| Error::InvalidInput("nu is not a standard O(k) cocycle".into()))?;
        let cover = nu.cover();
        let eta = homogenize(cover, 1, a * k, &pair_raw(&self.eta))?;
        let eps = homogenize(cover, 1, b * k, &pair_raw(&self.eps))?;
        Ok(class_is_zero(&eta)? && field_class_is_zero(&eps)?)
    }
}

fn sub_family<V: super::scheme::Twistable>(a: &PairFamily<V>, b: &PairFamily<V>) -> Result<PairFamily<V>> {
    let mut out = a.clone();
    for (key, v) in b {
        let d = match a.get(key) {
            Some(x) => x.plus(&v.negated())?,
            None => v.negated(),
        };
        out.insert(*key, d);
    }
    Ok(out.into_iter().filter(|(_, v)| !v.vanishes()).collect())
}

/// A section of T_X (x) L given chartwise: D_i on U_i with D_i = nu_ij D_j.
fn chart_field(cover: StandardCover, chi: &BTreeMap<usize, VectorField>, i: usize) -> VectorField {
    chi.get(&i).cloned().unwrap_or_else(|| VectorField::zero(cover.chart(&[i]), 0))
}

/// Checks D_i = nu_ij D_j on every U_ij.
pub fn check_global(chi: &BTreeMap<usize, VectorField>, nu: &UnitCocycle) -> Result<()> {
    let cover = nu.cover();
    for (&(i, j), a) in nu.values() {
        let chart = cover.chart(&[i, j]);
        let di = chart_field(cover, chi, i).with_chart(chart)?;
        let dj = chart_field(cover, chi, j).mul_function(a)?.with_chart(chart)?;
        if di != dj {
            return Err(Error::NotGlobal((i, j)));
        }
    }
    Ok(())
}

/// The action of chi = (D_i) in Aut_0(X_2) on the extensions of X_2:
/// eta'_ij = eta_ij + D_j(nu_ij), eps'_ij = eps_ij - nu_ij (eta_ij + 1/2 D_j(nu_ij)) D_j.
/// The coboundary K_i - nu_ij^2 K_j is left out.
pub fn act_aut0(chi: &BTreeMap<usize, VectorField>, gamma: &ExtPair, nu: &UnitCocycle) -> Result<ExtPair> {
    check_global(chi, nu)?;
    let cover = nu.cover();
    let mut eta = BTreeMap::new();
    let mut eps = BTreeMap::new();
    for (&(i, j), a) in nu.values() {
        let chart = cover.chart(&[i, j]);
        let dj = chart_field(cover, chi, j).with_chart(chart)?;
        let dnu = dj.apply(a)?;
        let e = gamma.eta.get(&(i, j)).cloned().unwrap_or_else(|| LaurentElement::zero(chart, 0));
        let new_eta = e.try_add(&dnu)?.with_chart(chart)?;
        let coef = a.try_mul(&e.try_add(&dnu.scale(&half()))?)?;
        let base = gamma.eps.get(&(i, j)).cloned().unwrap_or_else(|| VectorField::zero(chart, 0));
        let new_eps = base.try_sub(&dj.mul_function(&coef)?)?.with_chart(chart)?;
        if !new_eta.is_zero() {
            eta.insert((i, j), new_eta);
        }
        if !new_eps.is_zero() {
            eps.insert((i, j), new_eps);
        }
    }
    Ok(ExtPair { eta, eps })
}

/// The defect of chi'(chi(gamma)) against (chi + chi')(gamma):
/// beta_ij = nu_ij/2 (D'_j(nu_ij) D_j - D_j(nu_ij) D'_j).
pub fn composition_defect(
    chi: &BTreeMap<usize, VectorField>,
    chi2: &BTreeMap<usize, VectorField>,
    nu: &UnitCocycle,
) -> Result<PairFamily<VectorField>> {
    let cover = nu.cover();
    let mut out = BTreeMap::new();
    for (&(i, j), a) in nu.values() {
        let chart = cover.chart(&[i, j]);
        let d = chart_field(cover, chi, j).with_chart(chart)?;
        let d2 = chart_field(cover, chi2, j).with_chart(chart)?;
        let v = d.mul_function(&d2.apply(a)?)?.try_sub(&d2.mul_function(&d.apply(a)?)?)?;
        let v = v.mul_function(a)?.scale(&half()).with_chart(chart)?;
        if !v.is_zero() {
            out.insert((i, j), v);
        }
    }
    Ok(out)
}

/// K_i = 1/2 (D'_i D_i - D_i D'_i) on U_i; beta_ij = K_i - nu_ij^2 K_j.
pub fn composition_potential(
    chi: &BTreeMap<usize, VectorField>,
    chi2: &BTreeMap<usize, VectorField>,
    cover: StandardCover,
) -> Result<BTreeMap<usize, VectorField>> {
    (0..=cover.m())
        .map(|i| {
            let d = chart_field(cover, chi, i);
            let d2 = chart_field(cover, chi2, i);
            Ok((i, d2.bracket(&d)?.scale(&half())))
        })
        .collect()
}

/// Sum of two sections of T_X (x) L, chartwise.
pub fn add_sections(a: &BTreeMap<usize, VectorField>, b: &BTreeMap<usize, VectorField>) -> Result<BTreeMap<usize, VectorField>> {
    let mut out = a.clone();
    for (&i, v) in b {
        let s = match a.get(&i) {
            Some(x) => x.try_add(v)?,
            None => v.clone(),
        };
        out.insert(i, s);
    }
    Ok(out)
}

/// lambda.(eta, eps) = (lambda^{n-1} eta, lambda^n eps) on the extensions of the
/// trivial X_n, n >= 2.
pub fn act_cstar(lambda: &Rational, gamma: &ExtPair, n: usize) -> Result<ExtPair> {
    if lambda.is_zero() {
        return Err(Error::InvalidInput("lambda must be nonzero".into()));
    }
    if n < 2 {
        return Err(Error::InvalidOrder(format!("n = {n}: need n >= 2")));
    }
    let (a, b) = (num::pow(lambda.clone(), n - 1), num::pow(lambda.clone(), n));
    Ok(ExtPair {
        eta: gamma.eta.iter().map(|(&k, v)| (k, v.scale(&a))).collect(),
        eps: gamma.eps.iter().map(|(&k, v)| (k, v.scale(&b))).collect(),
    })
}
