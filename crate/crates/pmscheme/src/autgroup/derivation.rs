use super::GnElement;
use crate::exactalg::{q, Chart, LaurentElement, Rational, VectorField};
use crate::truncated::TruncSeries;
use crate::{Error, Result};

/// A derivation of R_n = A[t]/(t^n) over the base field:
/// f -> sum_r a_r(f) t^r + b t df/dt, with a_r twist-0 fields.
/// `b` has order n with its top coefficient zero, since b_{n-1} acts trivially.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationRn {
    n: usize,
    chart: Chart,
    a: Vec<VectorField>,
    b: TruncSeries,
}

impl DerivationRn {
    pub fn new(a: Vec<VectorField>, b: TruncSeries) -> Result<Self> {
        let n = a.len();
        if n < 2 || b.order() != n {
            return Err(Error::InvalidOrder(format!("derivation of R_{n} with b of order {}", b.order())));
        }
        let mut chart = b.chart();
        for f in &a {
            if f.twist() != 0 {
                return Err(Error::DegreeMismatch { expected: 0, found: f.twist() });
            }
            chart = chart.union(&f.chart())?;
        }
        let a = a.iter().map(|f| f.with_chart(chart)).collect::<Result<Vec<_>>>()?;
        let mut b = b.with_chart(chart)?;
        b.set_coeff(n - 1, LaurentElement::zero(chart, 0))?;
        Ok(DerivationRn { n, chart, a, b })
    }

    pub fn zero(chart: Chart, n: usize) -> Self {
        DerivationRn { n, chart, a: vec![VectorField::zero(chart, 0); n], b: TruncSeries::zero(chart, n) }
    }

    /// The derivation with D(x_q/x_base) = vals[q] and D(t) = on_t.
    pub fn from_values(chart: Chart, base: usize, vals: &[TruncSeries], on_t: &TruncSeries) -> Result<Self> {
        let n = on_t.order();
        let a = (0..n)
            .map(|r| {
                let v: Vec<LaurentElement> = (0..chart.nvars())
                    .map(|qi| {
                        if qi == base {
                            Ok(LaurentElement::zero(chart, 0))
                        } else if vals[qi].order() != n {
                            Err(Error::OrderMismatch { left: vals[qi].order(), right: n })
                        } else {
                            Ok(vals[qi].coeff(r).clone())
                        }
                    })
                    .collect::<Result<_>>()?;
                VectorField::from_affine(chart, base, &v)
            })
            .collect::<Result<Vec<_>>>()?;
        let b = on_t.divide_by_t()?.pad(n);
        Self::new(a, b)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn chart(&self) -> Chart {
        self.chart
    }

    pub fn field(&self, r: usize) -> &VectorField {
        &self.a[r]
    }

    pub fn b(&self) -> &TruncSeries {
        &self.b
    }

    /// Der_0: derivations preserving the ideal (t) with a_0 = 0, so that
    /// exp converges to an element of G_n.
    pub fn is_der0(&self) -> bool {
        self.a[0].is_zero() && self.b.coeff(0).is_zero()
    }

    pub fn apply(&self, f: &TruncSeries) -> Result<TruncSeries> {
        let n = self.n;
        if f.order() != n {
            return Err(Error::OrderMismatch { left: f.order(), right: n });
        }
        let chart = self.chart.union(&f.chart())?;
        let mut out = vec![LaurentElement::zero(chart, 0); n];
        for p in 0..n {
            let fp = f.coeff(p);
            if fp.is_zero() {
                continue;
            }
            for r in 0..n - p {
                if !self.a[r].is_zero() {
                    out[r + p] = out[r + p].try_add(&self.a[r].apply(fp)?)?;
                }
            }
        }
        // b t d/dt: t^p -> p b t^p
        let mut tdf = TruncSeries::zero(chart, n);
        for p in 1..n {
            tdf.set_coeff(p, f.coeff(p).scale(&q(p as i64)))?;
        }
        TruncSeries::new(out)?.try_add(&self.b.try_mul(&tdf)?)
    }

    fn values_on_generators(&self) -> Result<(usize, Vec<TruncSeries>, TruncSeries)> {
        let base = self.chart.pivot();
        let n = self.n;
        let vals = (0..self.chart.nvars())
            .map(|qi| {
                let y = TruncSeries::constant(&LaurentElement::ratio(self.chart, qi, base)?, n)?;
                self.apply(&y)
            })
            .collect::<Result<Vec<_>>>()?;
        let on_t = self.apply(&TruncSeries::t(self.chart, n))?;
        Ok((base, vals, on_t))
    }

    fn map_values<F>(&self, f: F) -> Result<Self>
    where
        F: Fn(&TruncSeries) -> Result<TruncSeries>,
    {
        let (base, vals, on_t) = self.values_on_generators()?;
        let vals = vals.iter().map(&f).collect::<Result<Vec<_>>>()?;
        Self::from_values(self.chart, base, &vals, &f(&on_t)?)
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        if self.n != o.n {
            return Err(Error::OrderMismatch { left: self.n, right: o.n });
        }
        let a = self.a.iter().zip(&o.a).map(|(x, y)| x.try_add(y)).collect::<Result<Vec<_>>>()?;
        Self::new(a, self.b.try_add(&o.b)?)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        DerivationRn { n: self.n, chart: self.chart, a: self.a.iter().map(|f| f.scale(c)).collect(), b: self.b.scale(c) }
    }

    /// f D for f in R_n.
    pub fn mul_series(&self, f: &TruncSeries) -> Result<Self> {
        self.map_values(|v| v.try_mul(f))
    }

    /// D E - E D.
    pub fn commutator(&self, o: &Self) -> Result<Self> {
        let chart = self.chart.union(&o.chart)?;
        let base = chart.pivot();
        let n = self.n;
        let mut vals = Vec::with_capacity(chart.nvars());
        for qi in 0..chart.nvars() {
            let y = TruncSeries::constant(&LaurentElement::ratio(chart, qi, base)?, n)?;
            vals.push(self.apply(&o.apply(&y)?)?.try_sub(&o.apply(&self.apply(&y)?)?)?);
        }
        let t = TruncSeries::t(chart, n);
        let on_t = self.apply(&o.apply(&t)?)?.try_sub(&o.apply(&self.apply(&t)?)?)?;
        Self::from_values(chart, base, &vals, &on_t)
    }

    /// exp(D) = sum D^k / k!, an element of G_n for D in Der_0.
    pub fn exp(&self) -> Result<GnElement> {
        if !self.is_der0() {
            return Err(Error::NotInDer0);
        }
        let chart = self.chart;
        let base = chart.pivot();
        let n = self.n;
        let series_exp = |f: &TruncSeries| -> Result<TruncSeries> {
            let mut acc = f.clone();
            let mut term = f.clone();
            for k in 1..n {
                term = self.apply(&term)?.scale(&Rational::new(1.into(), (k as i64).into()));
                acc = acc.try_add(&term)?;
            }
            Ok(acc)
        };
        let images = (0..chart.nvars())
            .map(|qi| series_exp(&TruncSeries::constant(&LaurentElement::ratio(chart, qi, base)?, n)?))
            .collect::<Result<Vec<_>>>()?;
        let mu = series_exp(&TruncSeries::t(chart, n))?.divide_by_t()?;
        GnElement::new(chart, n, base, images, mu)
    }

    /// log(chi) = sum_{k >= 1} (-1)^{k-1} (chi - I)^k / k for chi in G^0_n
    /// (mu_0 = 1).
    pub fn log(chi: &GnElement) -> Result<Self> {
        if !chi.mu().coeff(0).as_constant().is_some_and(|c| c == q(1)) {
            return Err(Error::NotInG0);
        }
        let chart = chi.chart();
        let base = chi.base();
        let n = chi.order();
        let series_log = |f: &TruncSeries| -> Result<TruncSeries> {
            let mut acc = TruncSeries::zero(chart, n);
            let mut term = f.clone();
            for k in 1..n {
                term = chi.apply(&term)?.try_sub(&term)?;
                let c = Rational::new(if k % 2 == 1 { 1.into() } else { (-1).into() }, (k as i64).into());
                acc = acc.try_add(&term.scale(&c))?;
            }
            Ok(acc)
        };
        let vals = (0..chart.nvars())
            .map(|qi| series_log(&TruncSeries::constant(&LaurentElement::ratio(chart, qi, base)?, n)?))
            .collect::<Result<Vec<_>>>()?;
        let on_t = series_log(&TruncSeries::t(chart, n))?;
        Self::from_values(chart, base, &vals, &on_t)
    }
}
