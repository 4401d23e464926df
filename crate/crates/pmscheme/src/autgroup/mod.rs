//! The groups G_n(U) and H_n(U) of automorphisms of truncated rings,
//! derivations with their exponential and logarithm, and the closed forms in
//! orders 2 and 3.

mod closed;
mod derivation;
mod gn;
mod hn;

pub use closed::{psi_canonical, triple_defect, Phi2, Phi3};
pub use derivation::DerivationRn;
pub use gn::GnElement;
pub use hn::HnElement;

use crate::exactalg::Chart;
use crate::truncated::TruncSeries;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// JSON form of a G_n element: series are coefficient lists in text form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GnJson {
    pub n: usize,
    /// Allowed denominators of the chart.
    pub chart: Vec<usize>,
    pub base: usize,
    pub images: BTreeMap<usize, Vec<String>>,
    pub mu: Vec<String>,
}

impl GnJson {
    pub fn from_element(g: &GnElement) -> Self {
        let images = (0..g.chart().nvars())
            .filter(|&q| q != g.base())
            .map(|q| (q, g.image(q).to_texts()))
            .collect();
        GnJson { n: g.order(), chart: g.chart().indices(), base: g.base(), images, mu: g.mu().to_texts() }
    }

    pub fn to_element(&self, m: usize) -> Result<GnElement> {
        let chart = Chart::new(m, &self.chart)?;
        let mut images = Vec::with_capacity(m + 1);
        for q in 0..=m {
            if q == self.base {
                images.push(TruncSeries::one(chart, self.n));
                continue;
            }
            let texts = self
                .images
                .get(&q)
                .ok_or_else(|| Error::InvalidInput(format!("missing image of x{q}/x{}", self.base)))?;
            if texts.len() != self.n {
                return Err(Error::OrderMismatch { left: texts.len(), right: self.n });
            }
            images.push(TruncSeries::from_texts(texts, chart)?);
        }
        if self.mu.len() + 1 != self.n {
            return Err(Error::OrderMismatch { left: self.mu.len() + 1, right: self.n });
        }
        let mu = TruncSeries::from_texts(&self.mu, chart)?;
        GnElement::new(chart, self.n, self.base, images, mu)
    }
}
