use super::{Chart, LaurentElement};
use crate::{Error, Result};

/// Dense square matrix of degree-0 Laurent elements on one chart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LMatrix {
    r: usize,
    chart: Chart,
    entries: Vec<LaurentElement>,
}

impl LMatrix {
    pub fn new(r: usize, entries: Vec<LaurentElement>) -> Result<Self> {
        if r == 0 || entries.len() != r * r {
            return Err(Error::InvalidInput(format!("need {} entries", r * r)));
        }
        let mut chart = entries[0].chart();
        for e in &entries {
            if e.degree() != 0 {
                return Err(Error::DegreeMismatch { expected: 0, found: e.degree() });
            }
            chart = chart.union(&e.chart())?;
        }
        let entries = entries.iter().map(|e| e.with_chart(chart)).collect::<Result<_>>()?;
        Ok(LMatrix { r, chart, entries })
    }

    pub fn identity(chart: Chart, r: usize) -> Self {
        Self::diagonal(&vec![LaurentElement::one(chart); r])
    }

    pub fn zero(chart: Chart, r: usize) -> Self {
        LMatrix { r, chart, entries: vec![LaurentElement::zero(chart, 0); r * r] }
    }

    pub fn diagonal(d: &[LaurentElement]) -> Self {
        let r = d.len();
        let chart = d.iter().skip(1).fold(d[0].chart(), |c, e| c.union(&e.chart()).expect("same ambient"));
        let mut m = Self::zero(chart, r);
        for (i, e) in d.iter().enumerate() {
            m.entries[i * r + i] = e.with_chart(chart).expect("union chart");
        }
        m
    }

    pub fn size(&self) -> usize {
        self.r
    }

    pub fn chart(&self) -> Chart {
        self.chart
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentElement {
        &self.entries[i * self.r + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: LaurentElement) -> Result<()> {
        self.chart = self.chart.union(&v.chart())?;
        self.entries[i * self.r + j] = v;
        let chart = self.chart;
        for e in &mut self.entries {
            *e = e.with_chart(chart)?;
        }
        Ok(())
    }

    pub fn entries(&self) -> &[LaurentElement] {
        &self.entries
    }

    pub fn with_chart(&self, chart: Chart) -> Result<Self> {
        Ok(LMatrix {
            r: self.r,
            chart,
            entries: self.entries.iter().map(|e| e.with_chart(chart)).collect::<Result<_>>()?,
        })
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let chart = self.chart.union(&o.chart)?;
        let entries = self.entries.iter().zip(&o.entries).map(|(a, b)| a.try_add(b)).collect::<Result<_>>()?;
        Ok(LMatrix { r: self.r, chart, entries })
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self> {
        self.try_add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        LMatrix { r: self.r, chart: self.chart, entries: self.entries.iter().map(|e| -e).collect() }
    }

    pub fn scale(&self, f: &LaurentElement) -> Result<Self> {
        let chart = self.chart.union(&f.chart())?;
        let entries = self.entries.iter().map(|e| e.try_mul(f)).collect::<Result<_>>()?;
        Ok(LMatrix { r: self.r, chart, entries })
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let r = self.r;
        let chart = self.chart.union(&o.chart)?;
        let mut entries = Vec::with_capacity(r * r);
        for i in 0..r {
            for j in 0..r {
                let mut s = LaurentElement::zero(chart, 0);
                for k in 0..r {
                    s = s.try_add(&self.get(i, k).try_mul(o.get(k, j))?)?;
                }
                entries.push(s);
            }
        }
        Ok(LMatrix { r, chart, entries })
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.r != o.r {
            return Err(Error::InvalidInput(format!("size {} vs {}", self.r, o.r)));
        }
        Ok(())
    }

    pub fn trace(&self) -> LaurentElement {
        (0..self.r).fold(LaurentElement::zero(self.chart, 0), |s, i| s + self.get(i, i))
    }

    fn minor(&self, row: usize, col: usize) -> LMatrix {
        let r = self.r - 1;
        let mut entries = Vec::with_capacity(r * r);
        for i in 0..self.r {
            for j in 0..self.r {
                if i != row && j != col {
                    entries.push(self.get(i, j).clone());
                }
            }
        }
        LMatrix { r, chart: self.chart, entries }
    }

    /// Determinant by cofactor expansion along the first row.
    pub fn det(&self) -> LaurentElement {
        if self.r == 1 {
            return self.entries[0].clone();
        }
        let mut s = LaurentElement::zero(self.chart, 0);
        for j in 0..self.r {
            let t = self.get(0, j) * &self.minor(0, j).det();
            s = if j % 2 == 0 { s + t } else { s - t };
        }
        s
    }

    pub fn adjugate(&self) -> Self {
        let r = self.r;
        if r == 1 {
            return LMatrix::identity(self.chart, 1);
        }
        let mut entries = vec![LaurentElement::zero(self.chart, 0); r * r];
        for i in 0..r {
            for j in 0..r {
                let c = self.minor(i, j).det();
                entries[j * r + i] = if (i + j) % 2 == 0 { c } else { -c };
            }
        }
        LMatrix { r, chart: self.chart, entries }
    }

    /// Inverse over the chart ring; requires a unit-monomial determinant.
    pub fn inverse(&self) -> Result<Self> {
        let det = self.det();
        if det.is_zero() {
            return Err(Error::Singular);
        }
        let inv = det.invert().map_err(|_| Error::Singular)?;
        self.adjugate().scale(&inv)
    }

    pub fn is_identity(&self) -> bool {
        *self == LMatrix::identity(self.chart, self.r)
    }
}
