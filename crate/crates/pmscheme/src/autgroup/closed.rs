//! Closed-form group laws in orders 2 and 3.

use super::GnElement;
use crate::exactalg::{half, LaurentElement, VectorField};
use crate::truncated::TruncSeries;
use crate::Result;

/// phi_{D,mu} in G_2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Phi2 {
    pub d: VectorField,
    pub mu: LaurentElement,
}

impl Phi2 {
    pub fn to_gn(&self) -> Result<GnElement> {
        GnElement::phi2(&self.d, &self.mu)
    }

    /// self o inner: D'' = D' + mu' D, mu'' = mu mu'.
    pub fn compose(&self, inner: &Phi2) -> Result<Phi2> {
        Ok(Phi2 { d: self.d.try_add(&inner.d.mul_function(&self.mu)?)?, mu: inner.mu.try_mul(&self.mu)? })
    }

    pub fn invert(&self) -> Result<Phi2> {
        let inv = self.mu.invert()?;
        Ok(Phi2 { d: self.d.mul_function(&inv)?.neg(), mu: inv })
    }
}

/// Phi_{D,mu,D1} in G_3 with mu = mu0 + mu1 t.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Phi3 {
    pub d: VectorField,
    pub mu0: LaurentElement,
    pub mu1: LaurentElement,
    pub d1: VectorField,
}

impl Phi3 {
    pub fn mu(&self) -> Result<TruncSeries> {
        TruncSeries::new(vec![self.mu0.clone(), self.mu1.clone()])
    }

    pub fn to_gn(&self) -> Result<GnElement> {
        GnElement::phi3(&self.d, &self.mu()?, &self.d1)
    }

    /// Reads (D, mu, D1) back from an element of G_3.
    pub fn from_gn(g: &GnElement) -> Result<Phi3> {
        let d = g.image_field(1)?;
        let second = g.image_field(2)?;
        let chart = g.chart();
        let base = g.base();
        let dd: Vec<LaurentElement> = (0..chart.nvars())
            .map(|q| {
                if q == base {
                    Ok(LaurentElement::zero(chart, 0))
                } else {
                    let y = LaurentElement::ratio(chart, q, base)?;
                    Ok(d.apply(&d.apply(&y)?)?.scale(&half()))
                }
            })
            .collect::<Result<_>>()?;
        let d1 = second.try_sub(&VectorField::from_affine(chart, base, &dd)?)?;
        Ok(Phi3 { d, mu0: g.mu().coeff(0).clone(), mu1: g.mu().coeff(1).clone(), d1 })
    }

    /// self o inner in closed form:
    /// D'' = D' + mu'_0 D, mu''_0 = mu_0 mu'_0,
    /// mu''_1 = mu'_0 D'(mu_0) + mu'_0^2 mu_1 + mu_0 mu'_1,
    /// D''_1 = D'_1 + mu'_0^2 D_1 + mu'_1 D - 1/2 D''(mu'_0) D + 1/2 mu'_0 [D', D].
    pub fn compose(&self, inner: &Phi3) -> Result<Phi3> {
        let (dp, m0p, m1p, d1p) = (&self.d, &self.mu0, &self.mu1, &self.d1);
        let (d, m0, m1, d1) = (&inner.d, &inner.mu0, &inner.mu1, &inner.d1);
        let dpp = dp.try_add(&d.mul_function(m0p)?)?;
        let mu0 = m0.try_mul(m0p)?;
        let mu1 = m0p
            .try_mul(&dp.apply(m0)?)?
            .try_add(&m0p.try_mul(m0p)?.try_mul(m1)?)?
            .try_add(&m0.try_mul(m1p)?)?;
        let d1pp = d1p
            .try_add(&d1.mul_function(&m0p.try_mul(m0p)?)?)?
            .try_add(&d.mul_function(m1p)?)?
            .try_sub(&d.mul_function(&dpp.apply(m0p)?.scale(&half()))?)?
            .try_add(&dp.bracket(d)?.mul_function(&m0p.scale(&half()))?)?;
        Ok(Phi3 { d: dpp, mu0, mu1, d1: d1pp })
    }

    /// D^ = -D/mu_0, mu^_0 = 1/mu_0, mu^_1 = (D(mu_0) - mu_1)/mu_0^3,
    /// D^_1 = -D_1/mu_0^2 + (mu_1 - D(mu_0)/2)/mu_0^3 D.
    pub fn invert(&self) -> Result<Phi3> {
        let inv = self.mu0.invert()?;
        let inv2 = inv.try_mul(&inv)?;
        let inv3 = inv2.try_mul(&inv)?;
        let dm = self.d.apply(&self.mu0)?;
        let mu1 = dm.try_sub(&self.mu1)?.try_mul(&inv3)?;
        let c = self.mu1.try_sub(&dm.scale(&half()))?.try_mul(&inv3)?;
        let d1 = self.d1.mul_function(&inv2)?.neg().try_add(&self.d.mul_function(&c)?)?;
        Ok(Phi3 { d: self.d.mul_function(&inv)?.neg(), mu0: inv, mu1, d1 })
    }
}

/// Psi(D, mu) = Phi_{D, mu, (mu_1 - D(mu_0))/(2 mu_0) D}, the canonical lift of
/// phi_{D,mu_0} to G_3.
pub fn psi_canonical(d: &VectorField, mu0: &LaurentElement, mu1: &LaurentElement) -> Result<Phi3> {
    let c = mu1.try_sub(&d.apply(mu0)?)?.try_mul(&mu0.invert()?)?.scale(&half());
    Ok(Phi3 { d: d.clone(), mu0: mu0.clone(), mu1: mu1.clone(), d1: d.mul_function(&c)? })
}

/// The field D^(1) with Psi(D',mu') Psi(D,mu) Psi(D'',mu'')^{-1} = Phi_{0,1,D^(1)},
/// where (D'',mu'') is the closed-form product:
/// 1/2 (mu'_1 D + (D(mu'_0) + (mu'_0/mu_0) D(mu_0) - (mu'_0/mu_0) mu_1) D' + mu'_0 [D', D]).
pub fn triple_defect(outer: (&VectorField, &LaurentElement, &LaurentElement), inner: (&VectorField, &LaurentElement, &LaurentElement)) -> Result<VectorField> {
    let (dp, m0p, m1p) = outer;
    let (d, m0, m1) = inner;
    let r = m0p.try_mul(&m0.invert()?)?;
    let coef = d.apply(m0p)?.try_add(&r.try_mul(&d.apply(m0)?)?)?.try_sub(&r.try_mul(m1)?)?;
    let s = d
        .mul_function(m1p)?
        .try_add(&dp.mul_function(&coef)?)?
        .try_add(&dp.bracket(d)?.mul_function(m0p)?)?;
    Ok(s.scale(&half()))
}
