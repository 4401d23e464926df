use crate::exactalg::{half, Chart, LaurentElement, VectorField};
use crate::truncated::{RingAutomorphism, TruncSeries};
use crate::{Error, Result};
use std::collections::HashMap;

/// Automorphism of A[t]/(t^n) inducing the identity mod t, where A is the
/// degree-0 ring of a chart. Stored by the images of the affine coordinates
/// y_q = x_q/x_b of the pivot b of the chart, and by mu with phi(t) = mu t.
#[derive(Clone, Debug)]
pub struct GnElement {
    n: usize,
    chart: Chart,
    base: usize,
    images: Vec<TruncSeries>,
    mu: TruncSeries,
}

impl GnElement {
    /// `images[q]` is the image of x_q/x_base (the entry at `base` is ignored);
    /// `mu` has order n-1. The element is stored rebased to the chart pivot.
    pub fn new(chart: Chart, n: usize, base: usize, images: Vec<TruncSeries>, mu: TruncSeries) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidOrder(format!("G_{n} is trivial; need n >= 2")));
        }
        if !chart.allows(base) {
            return Err(Error::ChartViolation { index: base });
        }
        if images.len() != chart.nvars() {
            return Err(Error::InvalidInput("one image per coordinate".into()));
        }
        if mu.order() != n - 1 {
            return Err(Error::OrderMismatch { left: mu.order(), right: n - 1 });
        }
        mu.coeff(0).invert().map_err(|_| Error::NotAUnit(mu.coeff(0).to_string()))?;
        let mut chart = chart.union(&mu.chart())?;
        for im in &images {
            chart = chart.union(&im.chart())?;
        }
        let mut imgs = Vec::with_capacity(images.len());
        for (q, im) in images.iter().enumerate() {
            if q == base {
                imgs.push(TruncSeries::one(chart, n));
                continue;
            }
            if im.order() != n {
                return Err(Error::OrderMismatch { left: im.order(), right: n });
            }
            if im.coeff(0).with_chart(chart)? != LaurentElement::ratio(chart, q, base)? {
                return Err(Error::InvalidInput(format!("image of x{q}/x{base} is not the identity mod t")));
            }
            imgs.push(im.with_chart(chart)?);
        }
        let g = GnElement { n, chart, base, images: imgs, mu: mu.with_chart(chart)? };
        g.rebase(chart.pivot())
    }

    pub fn identity(chart: Chart, n: usize) -> Self {
        Self::scaling(chart, n, TruncSeries::one(chart, n - 1)).expect("identity")
    }

    /// The element fixing A with phi(t) = mu t.
    pub fn scaling(chart: Chart, n: usize, mu: TruncSeries) -> Result<Self> {
        let b = chart.pivot();
        let images = (0..chart.nvars())
            .map(|q| TruncSeries::constant(&LaurentElement::ratio(chart, q, b)?, n))
            .collect::<Result<Vec<_>>>()?;
        Self::new(chart, n, b, images, mu)
    }

    /// phi_{D,mu} in G_2: alpha -> alpha + D(alpha) t, t -> mu t.
    pub fn phi2(d: &VectorField, mu: &LaurentElement) -> Result<Self> {
        let chart = d.chart().union(&mu.chart())?;
        let b = chart.pivot();
        let images = (0..chart.nvars())
            .map(|q| {
                let y = LaurentElement::ratio(chart, q, b)?;
                TruncSeries::new(vec![y.clone(), d.apply(&y)?])
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(chart, 2, b, images, TruncSeries::constant(mu, 1)?)
    }

    /// Phi_{D,mu,D1} in G_3: alpha -> alpha + D(alpha) t + (D^2/2 + D1)(alpha) t^2.
    pub fn phi3(d: &VectorField, mu: &TruncSeries, d1: &VectorField) -> Result<Self> {
        let chart = d.chart().union(&mu.chart())?.union(&d1.chart())?;
        let b = chart.pivot();
        let images = (0..chart.nvars())
            .map(|q| {
                let y = LaurentElement::ratio(chart, q, b)?;
                let dy = d.apply(&y)?;
                let e = d.apply(&dy)?.scale(&half()).try_add(&d1.apply(&y)?)?;
                TruncSeries::new(vec![y, dy, e])
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(chart, 3, b, images, mu.clone())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn chart(&self) -> Chart {
        self.chart
    }

    pub fn base(&self) -> usize {
        self.base
    }

    /// Image of x_q / x_base.
    pub fn image(&self, q: usize) -> &TruncSeries {
        &self.images[q]
    }

    pub fn images(&self) -> &[TruncSeries] {
        &self.images
    }

    pub fn mu(&self) -> &TruncSeries {
        &self.mu
    }

    pub fn is_identity(&self) -> bool {
        *self == GnElement::identity(self.chart, self.n)
    }

    /// The same automorphism on a smaller open set (larger allowed set).
    pub fn restrict(&self, chart: Chart) -> Result<Self> {
        let chart = self.chart.union(&chart)?;
        let g = GnElement {
            n: self.n,
            chart,
            base: self.base,
            images: self.images.iter().map(|s| s.with_chart(chart)).collect::<Result<_>>()?,
            mu: self.mu.with_chart(chart)?,
        };
        g.rebase(chart.pivot())
    }

    /// Re-expresses the images in the affine coordinates of another allowed index.
    pub fn rebase(&self, b: usize) -> Result<Self> {
        if b == self.base {
            return Ok(self.clone());
        }
        if !self.chart.allows(b) {
            return Err(Error::ChartViolation { index: b });
        }
        let inv_b = self.images[b].inv()?;
        let images = (0..self.chart.nvars())
            .map(|q| {
                if q == b {
                    Ok(TruncSeries::one(self.chart, self.n))
                } else {
                    self.images[q].try_mul(&inv_b)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GnElement { n: self.n, chart: self.chart, base: b, images, mu: self.mu.clone() })
    }

    /// phi(f) for a degree-0 Laurent element: substitute the images of the
    /// affine coordinates, inverting them for negative exponents.
    pub fn apply_laurent(&self, f: &LaurentElement) -> Result<TruncSeries> {
        if f.degree() != 0 {
            return Err(Error::DegreeMismatch { expected: 0, found: f.degree() });
        }
        let g = if f.chart().contains(&self.chart) && self.chart.contains(&f.chart()) {
            self.clone()
        } else {
            self.restrict(f.chart())?
        };
        let chart = g.chart;
        let mut cache: HashMap<(usize, i64), TruncSeries> = HashMap::new();
        let mut acc = TruncSeries::zero(chart, g.n);
        for (a, c) in f.terms() {
            let mut term = TruncSeries::constant(&LaurentElement::constant(chart, c.clone()), g.n)?;
            for (q, &e) in a.iter().enumerate() {
                if q == g.base || e == 0 {
                    continue;
                }
                let p = match cache.get(&(q, e)) {
                    Some(p) => p.clone(),
                    None => {
                        let p = g.images[q].pow(e)?;
                        cache.insert((q, e), p.clone());
                        p
                    }
                };
                term = term.try_mul(&p)?;
            }
            acc = acc.try_add(&term)?;
        }
        Ok(acc)
    }

    /// phi(f) for f in R_n: sum_p phi(f_p) (mu t)^p.
    pub fn apply(&self, f: &TruncSeries) -> Result<TruncSeries> {
        if f.order() != self.n {
            return Err(Error::OrderMismatch { left: f.order(), right: self.n });
        }
        let chart = self.chart.union(&f.chart())?;
        let mut mapped = Vec::with_capacity(self.n);
        for p in 0..self.n {
            mapped.push(self.apply_laurent(&f.coeff(p).with_chart(chart)?)?);
        }
        // sum_p phi(f_p) (mu t)^p: Horner in (mu t).
        let mt = self.mu.pad(self.n).with_chart(chart)?.mul_t();
        let mut acc = TruncSeries::zero(chart, self.n);
        for p in (0..self.n).rev() {
            acc = acc.try_mul(&mt)?.try_add(&mapped[p])?;
        }
        Ok(acc)
    }

    /// self o inner.
    pub fn compose(&self, inner: &GnElement) -> Result<GnElement> {
        if self.n != inner.n {
            return Err(Error::OrderMismatch { left: self.n, right: inner.n });
        }
        let chart = self.chart.union(&inner.chart)?;
        let outer = self.restrict(chart)?;
        let inner = inner.restrict(chart)?;
        let images = (0..chart.nvars())
            .map(|q| if q == inner.base { Ok(TruncSeries::one(chart, self.n)) } else { outer.apply(&inner.images[q]) })
            .collect::<Result<Vec<_>>>()?;
        // (outer o inner)(t) = outer(mu) mu' t, computed in R_{n-1}.
        let mu = if self.n == 2 {
            inner.mu.try_mul(&outer.mu)?
        } else {
            outer.reduce(self.n - 1)?.apply(&inner.mu)?.try_mul(&outer.mu)?
        };
        GnElement::new(chart, self.n, inner.base, images, mu)
    }

    /// Inverse by fixed-point iteration psi(y) = y - psi(phi(y) - y),
    /// mu_psi = 1/psi(mu); each pass fixes one more order in t.
    pub fn invert(&self) -> Result<GnElement> {
        let chart = self.chart;
        let n = self.n;
        let ys = (0..chart.nvars())
            .map(|q| TruncSeries::constant(&LaurentElement::ratio(chart, q, self.base)?, n))
            .collect::<Result<Vec<_>>>()?;
        let h = self
            .images
            .iter()
            .zip(&ys)
            .map(|(im, y)| im.try_sub(y))
            .collect::<Result<Vec<_>>>()?;
        let mut psi = GnElement::scaling(chart, n, TruncSeries::constant(&self.mu.coeff(0).invert()?, n - 1)?)?
            .rebase(self.base)?;
        for _ in 0..n {
            let images = (0..chart.nvars())
                .map(|q| if q == self.base { Ok(ys[q].clone()) } else { ys[q].try_sub(&psi.apply(&h[q])?) })
                .collect::<Result<Vec<_>>>()?;
            // mu is refreshed with the new images, so both gain one order per pass.
            psi = GnElement { n, chart, base: self.base, images, mu: psi.mu };
            if n == 2 {
                psi.mu = self.mu.inv()?;
            } else {
                psi.mu = psi.reduce(n - 1)?.apply(&self.mu)?.inv()?;
            }
        }
        GnElement::new(chart, n, self.base, psi.images, psi.mu)
    }

    /// Image in G_k under R_n -> R_k, for 2 <= k <= n.
    pub fn reduce(&self, k: usize) -> Result<GnElement> {
        if k < 2 || k > self.n {
            return Err(Error::InvalidOrder(format!("reduce G_{} to G_{k}", self.n)));
        }
        Ok(GnElement {
            n: k,
            chart: self.chart,
            base: self.base,
            images: self.images.iter().map(|s| s.truncate(k)).collect::<Result<_>>()?,
            mu: self.mu.truncate(k - 1)?,
        })
    }

    /// Same automorphism in higher order: images and mu zero-padded.
    pub fn promote(&self, k: usize) -> Result<GnElement> {
        if k < self.n {
            return Err(Error::InvalidOrder(format!("promote G_{} to G_{k}", self.n)));
        }
        GnElement::new(
            self.chart,
            k,
            self.base,
            self.images.iter().map(|s| s.pad(k)).collect(),
            self.mu.pad(k - 1),
        )
    }

    /// The coefficient of t^p in the images, as a vector field
    /// sum_{q != b} x_b c_q d/dx_q (twist 0), for p >= 1.
    pub fn image_field(&self, p: usize) -> Result<VectorField> {
        let vals: Vec<LaurentElement> = self.images.iter().map(|s| s.coeff(p).clone()).collect();
        VectorField::from_affine(self.chart, self.base, &vals)
    }
}

impl PartialEq for GnElement {
    fn eq(&self, other: &Self) -> bool {
        if self.n != other.n {
            return false;
        }
        let Ok(chart) = self.chart.union(&other.chart) else { return false };
        match (self.restrict(chart), other.restrict(chart)) {
            (Ok(a), Ok(b)) => a.images == b.images && a.mu == b.mu,
            _ => false,
        }
    }
}

impl RingAutomorphism for GnElement {
    fn ring_order(&self) -> usize {
        self.n
    }

    fn chart(&self) -> Chart {
        self.chart
    }

    fn apply_series(&self, f: &TruncSeries) -> Result<TruncSeries> {
        self.apply(f)
    }

    fn inverse(&self) -> Result<Self> {
        self.invert()
    }

    fn mu0(&self) -> LaurentElement {
        self.mu.coeff(0).clone()
    }
}
