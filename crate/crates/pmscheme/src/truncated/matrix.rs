use super::TruncSeries;
use crate::exactalg::{Chart, LMatrix, LaurentElement};
use crate::{Error, Result};

/// r x r matrix over R_n, stored by its coefficient matrices A_0..A_{n-1}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncMatrix {
    coeffs: Vec<LMatrix>,
}

impl TruncMatrix {
    pub fn from_coefficients(coeffs: Vec<LMatrix>) -> Result<Self> {
        let first = coeffs.first().ok_or_else(|| Error::InvalidOrder("matrix of order 0".into()))?;
        let r = first.size();
        let mut chart = first.chart();
        for c in &coeffs {
            if c.size() != r {
                return Err(Error::InvalidInput("coefficient sizes differ".into()));
            }
            chart = chart.union(&c.chart())?;
        }
        let coeffs = coeffs.iter().map(|c| c.with_chart(chart)).collect::<Result<_>>()?;
        Ok(TruncMatrix { coeffs })
    }

    pub fn from_entries(r: usize, entries: &[TruncSeries]) -> Result<Self> {
        if entries.len() != r * r || r == 0 {
            return Err(Error::InvalidInput("entry count".into()));
        }
        let n = entries[0].order();
        let mut coeffs = Vec::with_capacity(n);
        for p in 0..n {
            let e = entries
                .iter()
                .map(|s| {
                    if s.order() != n {
                        Err(Error::OrderMismatch { left: n, right: s.order() })
                    } else {
                        Ok(s.coeff(p).clone())
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            coeffs.push(LMatrix::new(r, e)?);
        }
        Self::from_coefficients(coeffs)
    }

    pub fn scalar(s: &TruncSeries) -> Self {
        Self::from_entries(1, std::slice::from_ref(s)).expect("1x1")
    }

    pub fn identity(chart: Chart, r: usize, n: usize) -> Self {
        let mut coeffs = vec![LMatrix::zero(chart, r); n];
        coeffs[0] = LMatrix::identity(chart, r);
        TruncMatrix { coeffs }
    }

    pub fn size(&self) -> usize {
        self.coeffs[0].size()
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn chart(&self) -> Chart {
        self.coeffs[0].chart()
    }

    /// A_p.
    pub fn coeff(&self, p: usize) -> &LMatrix {
        &self.coeffs[p]
    }

    pub fn entry(&self, i: usize, j: usize) -> TruncSeries {
        TruncSeries::new(self.coeffs.iter().map(|c| c.get(i, j).clone()).collect()).expect("degree 0")
    }

    pub fn entries(&self) -> Vec<TruncSeries> {
        let r = self.size();
        (0..r * r).map(|k| self.entry(k / r, k % r)).collect()
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Self::from_coefficients(self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.try_add(b)).collect::<Result<_>>()?)
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Self::from_coefficients(self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.try_sub(b)).collect::<Result<_>>()?)
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let n = self.order();
        let chart = self.chart().union(&o.chart())?;
        let r = self.size();
        let mut out = vec![LMatrix::zero(chart, r); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().take(n - i).enumerate() {
                out[i + j] = out[i + j].try_add(&a.try_mul(b)?)?;
            }
        }
        Self::from_coefficients(out)
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.order() != o.order() {
            return Err(Error::OrderMismatch { left: self.order(), right: o.order() });
        }
        if self.size() != o.size() {
            return Err(Error::InvalidInput("matrix sizes differ".into()));
        }
        Ok(())
    }

    /// Inverse over R_n; A_0 must be invertible over the chart ring.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.order();
        let r = self.size();
        let a0inv = self.coeffs[0].inverse()?;
        let chart = self.chart().union(&a0inv.chart())?;
        let mut b = vec![a0inv.clone()];
        for p in 1..n {
            let mut s = LMatrix::zero(chart, r);
            for j in 1..=p {
                s = s.try_add(&self.coeffs[j].try_mul(&b[p - j])?)?;
            }
            b.push(a0inv.try_mul(&s)?.neg());
        }
        Self::from_coefficients(b)
    }

    pub fn truncate(&self, k: usize) -> Result<Self> {
        if k == 0 || k > self.order() {
            return Err(Error::InvalidOrder(format!("truncate {} to {k}", self.order())));
        }
        Ok(TruncMatrix { coeffs: self.coeffs[..k].to_vec() })
    }

    pub fn pad(&self, k: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        while coeffs.len() < k {
            coeffs.push(LMatrix::zero(self.chart(), self.size()));
        }
        TruncMatrix { coeffs }
    }

    pub fn with_chart(&self, chart: Chart) -> Result<Self> {
        Ok(TruncMatrix { coeffs: self.coeffs.iter().map(|c| c.with_chart(chart)).collect::<Result<_>>()? })
    }

    /// Adds M t^p.
    pub fn add_term(&self, p: usize, m: &LMatrix) -> Result<Self> {
        let mut coeffs = self.coeffs.clone();
        coeffs[p] = coeffs[p].try_add(m)?;
        Self::from_coefficients(coeffs)
    }

    /// Applies a series map entrywise.
    pub fn map_entries<F>(&self, f: F) -> Result<Self>
    where
        F: Fn(&TruncSeries) -> Result<TruncSeries>,
    {
        let r = self.size();
        let entries = self.entries().iter().map(f).collect::<Result<Vec<_>>>()?;
        Self::from_entries(r, &entries)
    }

    pub fn is_identity(&self) -> bool {
        *self == TruncMatrix::identity(self.chart(), self.size(), self.order())
    }

    pub fn constant_unit(&self) -> Option<LaurentElement> {
        (self.size() == 1).then(|| self.coeffs[0].get(0, 0).clone())
    }
}
