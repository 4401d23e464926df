use crate::exactalg::{Chart, LaurentElement, Rational};
use crate::{Error, Result};
use std::fmt;

/// Element of R_n = A[t]/(t^n) with A the degree-0 ring of a chart.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncSeries {
    chart: Chart,
    coeffs: Vec<LaurentElement>,
}

impl TruncSeries {
    pub fn new(coeffs: Vec<LaurentElement>) -> Result<Self> {
        let first = coeffs.first().ok_or_else(|| Error::InvalidOrder("series of order 0".into()))?;
        let mut chart = first.chart();
        for c in &coeffs {
            if c.degree() != 0 {
                return Err(Error::DegreeMismatch { expected: 0, found: c.degree() });
            }
            chart = chart.union(&c.chart())?;
        }
        let coeffs = coeffs.iter().map(|c| c.with_chart(chart)).collect::<Result<_>>()?;
        Ok(TruncSeries { chart, coeffs })
    }

    pub fn zero(chart: Chart, n: usize) -> Self {
        assert!(n >= 1, "series order must be positive");
        TruncSeries { chart, coeffs: vec![LaurentElement::zero(chart, 0); n] }
    }

    pub fn constant(f: &LaurentElement, n: usize) -> Result<Self> {
        let mut s = Self::zero(f.chart(), n);
        if f.degree() != 0 {
            return Err(Error::DegreeMismatch { expected: 0, found: f.degree() });
        }
        s.coeffs[0] = f.clone();
        Ok(s)
    }

    pub fn one(chart: Chart, n: usize) -> Self {
        Self::constant(&LaurentElement::one(chart), n).expect("degree 0")
    }

    /// The element t (zero when n = 1).
    pub fn t(chart: Chart, n: usize) -> Self {
        let mut s = Self::zero(chart, n);
        if n > 1 {
            s.coeffs[1] = LaurentElement::one(chart);
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn chart(&self) -> Chart {
        self.chart
    }

    pub fn coeff(&self, p: usize) -> &LaurentElement {
        &self.coeffs[p]
    }

    pub fn coeffs(&self) -> &[LaurentElement] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one(self.chart, self.order())
    }

    pub fn with_chart(&self, chart: Chart) -> Result<Self> {
        Ok(TruncSeries { chart, coeffs: self.coeffs.iter().map(|c| c.with_chart(chart)).collect::<Result<_>>()? })
    }

    fn aligned(&self, o: &Self) -> Result<(Chart, usize)> {
        if self.order() != o.order() {
            return Err(Error::OrderMismatch { left: self.order(), right: o.order() });
        }
        Ok((self.chart.union(&o.chart)?, self.order()))
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        let (chart, _) = self.aligned(o)?;
        let coeffs = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.try_add(b)).collect::<Result<_>>()?;
        Ok(TruncSeries { chart, coeffs })
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self> {
        self.try_add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        TruncSeries { chart: self.chart, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TruncSeries { chart: self.chart, coeffs: self.coeffs.iter().map(|a| a.scale(c)).collect() }
    }

    pub fn mul_laurent(&self, f: &LaurentElement) -> Result<Self> {
        if f.degree() != 0 {
            return Err(Error::DegreeMismatch { expected: 0, found: f.degree() });
        }
        let chart = self.chart.union(&f.chart())?;
        let coeffs = self.coeffs.iter().map(|a| a.try_mul(f)).collect::<Result<_>>()?;
        Ok(TruncSeries { chart, coeffs })
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        let (chart, n) = self.aligned(o)?;
        let mut coeffs = vec![LaurentElement::zero(chart, 0); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().take(n - i).enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].try_add(&a.try_mul(b)?)?;
            }
        }
        Ok(TruncSeries { chart, coeffs })
    }

    /// Inverse in R_n; the constant coefficient must be a unit monomial.
    pub fn inv(&self) -> Result<Self> {
        let a0inv = self.coeffs[0].invert().map_err(|_| Error::NotAUnit(self.coeffs[0].to_string()))?;
        let n = self.order();
        let chart = self.chart.union(&a0inv.chart())?;
        let mut b: Vec<LaurentElement> = Vec::with_capacity(n);
        b.push(a0inv.clone());
        for p in 1..n {
            let mut s = LaurentElement::zero(chart, 0);
            for j in 1..=p {
                s = s.try_add(&self.coeffs[j].try_mul(&b[p - j])?)?;
            }
            b.push(-(s.try_mul(&a0inv)?));
        }
        TruncSeries::new(b)
    }

    /// Integer power; negative exponents go through `inv`.
    pub fn pow(&self, e: i64) -> Result<Self> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        let mut r = Self::one(self.chart, self.order());
        let mut base = self.clone();
        let mut k = e as u64;
        while k > 0 {
            if k & 1 == 1 {
                r = r.try_mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.try_mul(&base)?;
            }
        }
        Ok(r)
    }

    /// Division by t: (t) in R_n maps to R_{n-1}.
    pub fn divide_by_t(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NotDivisible);
        }
        if self.order() < 2 {
            return Err(Error::InvalidOrder("cannot divide an order-1 series".into()));
        }
        Ok(TruncSeries { chart: self.chart, coeffs: self.coeffs[1..].to_vec() })
    }

    /// t * f, staying in R_n.
    pub fn mul_t(&self) -> Self {
        let mut coeffs = vec![LaurentElement::zero(self.chart, 0)];
        coeffs.extend(self.coeffs[..self.order() - 1].iter().cloned());
        TruncSeries { chart: self.chart, coeffs }
    }

    /// [f]_k, the image in R_k for k <= n.
    pub fn truncate(&self, k: usize) -> Result<Self> {
        if k == 0 || k > self.order() {
            return Err(Error::InvalidOrder(format!("truncate order {} to {k}", self.order())));
        }
        Ok(TruncSeries { chart: self.chart, coeffs: self.coeffs[..k].to_vec() })
    }

    /// The same polynomial viewed in R_k for k >= n (zero padding).
    pub fn pad(&self, k: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        while coeffs.len() < k {
            coeffs.push(LaurentElement::zero(self.chart, 0));
        }
        TruncSeries { chart: self.chart, coeffs }
    }

    /// Truncates or pads to order k.
    pub fn resize(&self, k: usize) -> Self {
        if k <= self.order() {
            self.truncate(k).expect("k >= 1")
        } else {
            self.pad(k)
        }
    }

    pub fn set_coeff(&mut self, p: usize, c: LaurentElement) -> Result<()> {
        if c.degree() != 0 {
            return Err(Error::DegreeMismatch { expected: 0, found: c.degree() });
        }
        self.chart = self.chart.union(&c.chart())?;
        self.coeffs[p] = c;
        let chart = self.chart;
        for a in &mut self.coeffs {
            *a = a.with_chart(chart)?;
        }
        Ok(())
    }

    /// Coefficient texts, the serialization used by the JSON schemas.
    pub fn to_texts(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    pub fn from_texts(texts: &[String], chart: Chart) -> Result<Self> {
        let coeffs = texts.iter().map(|s| LaurentElement::parse(s, chart, 0)).collect::<Result<Vec<_>>>()?;
        let s = TruncSeries::new(coeffs)?;
        s.with_chart(chart)
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (p, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c}) t^{p}")?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
