use super::GnElement;
use crate::exactalg::Chart;
use crate::truncated::TruncSeries;
use crate::{Error, Result};

/// Element (phi, u) of H_n: phi in G_n and u a unit of R_n with phi(t) = u t,
/// so [u]_{n-1} is the mu of phi. Product (phi', u')(phi, u) = (phi' phi, u' phi'(u)).
/// `==` compares u modulo t^{n-1}; `same_representative` also compares the top coefficient.
#[derive(Clone, Debug)]
pub struct HnElement {
    phi: GnElement,
    u: TruncSeries,
}

impl HnElement {
    pub fn new(phi: GnElement, u: TruncSeries) -> Result<Self> {
        let n = phi.order();
        if u.order() != n {
            return Err(Error::OrderMismatch { left: u.order(), right: n });
        }
        if u.truncate(n - 1)? != *phi.mu() {
            return Err(Error::InvalidInput("u does not reduce to mu".into()));
        }
        let chart = phi.chart().union(&u.chart())?;
        Ok(HnElement { phi: phi.restrict(chart)?, u: u.with_chart(chart)? })
    }

    pub fn identity(chart: Chart, n: usize) -> Self {
        HnElement { phi: GnElement::identity(chart, n), u: TruncSeries::one(chart, n) }
    }

    pub fn phi(&self) -> &GnElement {
        &self.phi
    }

    pub fn u(&self) -> &TruncSeries {
        &self.u
    }

    pub fn order(&self) -> usize {
        self.phi.order()
    }

    pub fn chart(&self) -> Chart {
        self.phi.chart()
    }

    /// self * inner.
    pub fn compose(&self, inner: &HnElement) -> Result<Self> {
        let phi = self.phi.compose(&inner.phi)?;
        let chart = phi.chart();
        let u = self.u.with_chart(chart)?.try_mul(&self.phi.restrict(chart)?.apply(&inner.u.with_chart(chart)?)?)?;
        Self::new(phi, u)
    }

    pub fn invert(&self) -> Result<Self> {
        let inv = self.phi.invert()?;
        let u = inv.apply(&self.u.inv()?)?;
        Self::new(inv, u)
    }

    pub fn same_representative(&self, other: &Self) -> bool {
        if self != other {
            return false;
        }
        let Ok(chart) = self.chart().union(&other.chart()) else { return false };
        matches!((self.u.with_chart(chart), other.u.with_chart(chart)), (Ok(a), Ok(b)) if a == b)
    }

    pub fn restrict(&self, chart: Chart) -> Result<Self> {
        let phi = self.phi.restrict(chart)?;
        let u = self.u.with_chart(phi.chart())?;
        Ok(HnElement { phi, u })
    }
}

impl PartialEq for HnElement {
    fn eq(&self, other: &Self) -> bool {
        let Ok(chart) = self.chart().union(&other.chart()) else { return false };
        let n = self.order();
        if n != other.order() {
            return false;
        }
        let low = |u: &TruncSeries| u.with_chart(chart).and_then(|v| v.truncate(n - 1));
        let (Ok(a), Ok(b)) = (low(&self.u), low(&other.u)) else { return false };
        self.phi == other.phi && a == b
    }
}
