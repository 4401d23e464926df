use super::{Chart, LaurentElement, Rational};
use crate::{Error, Result};
use std::fmt;

/// Section of Omega(k) on a chart: sum f_q dx_q with deg f_q = k-1 and
/// sum x_q f_q = 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OneForm {
    chart: Chart,
    twist: i64,
    comps: Vec<LaurentElement>,
}

/// Section of T(k) on a chart: sum g_q d/dx_q with deg g_q = k+1, modulo the
/// Euler field. Stored with the component at `chart.pivot()` equal to zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VectorField {
    chart: Chart,
    twist: i64,
    comps: Vec<LaurentElement>,
}

fn lift_all(comps: &[LaurentElement], degree: i64) -> Result<Chart> {
    let first = comps.first().ok_or_else(|| Error::InvalidInput("no components".into()))?;
    let mut chart = first.chart();
    for c in comps {
        if c.degree() != degree {
            return Err(Error::DegreeMismatch { expected: degree, found: c.degree() });
        }
        chart = chart.union(&c.chart())?;
    }
    if comps.len() != chart.nvars() {
        return Err(Error::InvalidInput("wrong number of components".into()));
    }
    Ok(chart)
}

fn recharted(comps: &[LaurentElement], chart: Chart) -> Result<Vec<LaurentElement>> {
    comps.iter().map(|c| c.with_chart(chart)).collect()
}

/// d f for a degree-0 function: d(x^a) = sum_q a_q x^a / x_q dx_q.
pub fn differential(f: &LaurentElement) -> Result<OneForm> {
    if f.degree() != 0 {
        return Err(Error::DegreeMismatch { expected: 0, found: f.degree() });
    }
    let comps: Vec<_> = (0..f.chart().nvars()).map(|qi| f.partial(qi)).collect();
    Ok(OneForm { chart: f.chart(), twist: 0, comps })
}

impl OneForm {
    /// Checked constructor; rejects families violating the Euler relation.
    pub fn new(twist: i64, comps: Vec<LaurentElement>) -> Result<Self> {
        let chart = lift_all(&comps, twist - 1)?;
        let comps = recharted(&comps, chart)?;
        let w = OneForm { chart, twist, comps };
        if !w.euler_contraction().is_zero() {
            return Err(Error::EulerRelation);
        }
        Ok(w)
    }

    pub fn zero(chart: Chart, twist: i64) -> Self {
        OneForm { chart, twist, comps: vec![LaurentElement::zero(chart, twist - 1); chart.nvars()] }
    }

    pub fn chart(&self) -> Chart {
        self.chart
    }

    pub fn twist(&self) -> i64 {
        self.twist
    }

    pub fn components(&self) -> &[LaurentElement] {
        &self.comps
    }

    pub fn component(&self, qi: usize) -> &LaurentElement {
        &self.comps[qi]
    }

    /// sum_q x_q f_q; identically zero for every valid form.
    pub fn euler_contraction(&self) -> LaurentElement {
        let mut s = LaurentElement::zero(self.chart, self.twist);
        for (qi, f) in self.comps.iter().enumerate() {
            s = s + LaurentElement::var(self.chart, qi) * f;
        }
        s
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|c| c.is_zero())
    }

    pub fn with_chart(&self, chart: Chart) -> Result<Self> {
        Ok(OneForm { chart, twist: self.twist, comps: recharted(&self.comps, chart)? })
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if self.twist != other.twist {
            return Err(Error::DegreeMismatch { expected: self.twist, found: other.twist });
        }
        let chart = self.chart.union(&other.chart)?;
        let comps = self.comps.iter().zip(&other.comps).map(|(a, b)| a.try_add(b)).collect::<Result<_>>()?;
        Ok(OneForm { chart, twist: self.twist, comps })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        OneForm { chart: self.chart, twist: self.twist, comps: self.comps.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        OneForm { chart: self.chart, twist: self.twist, comps: self.comps.iter().map(|f| f.scale(c)).collect() }
    }

    /// Multiplication by a Laurent element of degree e shifts the twist by e.
    pub fn mul_function(&self, f: &LaurentElement) -> Result<Self> {
        let chart = self.chart.union(&f.chart())?;
        let comps = self.comps.iter().map(|g| g.try_mul(f)).collect::<Result<_>>()?;
        Ok(OneForm { chart, twist: self.twist + f.degree(), comps })
    }
}

impl VectorField {
    /// Builds a field from raw components and reduces it to normal form.
    pub fn new(twist: i64, comps: Vec<LaurentElement>) -> Result<Self> {
        let chart = lift_all(&comps, twist + 1)?;
        let comps = recharted(&comps, chart)?;
        Ok(VectorField::normalized(chart, twist, comps))
    }

    fn normalized(chart: Chart, twist: i64, mut comps: Vec<LaurentElement>) -> Self {
        let p = chart.pivot();
        if !comps[p].is_zero() {
            let xp = LaurentElement::var(chart, p);
            let h = comps[p].try_div(&xp).expect("pivot is allowed");
            for (qi, c) in comps.iter_mut().enumerate() {
                *c = &*c - &(LaurentElement::var(chart, qi) * &h);
            }
        }
        VectorField { chart, twist, comps }
    }

    pub fn zero(chart: Chart, twist: i64) -> Self {
        VectorField { chart, twist, comps: vec![LaurentElement::zero(chart, twist + 1); chart.nvars()] }
    }

    /// d/dx_q, a field of twist -1.
    pub fn coordinate(chart: Chart, qi: usize) -> Self {
        let comps = (0..chart.nvars())
            .map(|p| if p == qi { LaurentElement::one(chart) } else { LaurentElement::zero(chart, 0) })
            .collect();
        VectorField::normalized(chart, -1, comps)
    }

    /// The homogeneous field V = sum_{q != i} x_i v_q d/dx_q, which acts on
    /// the affine coordinates of U_i by V(x_q/x_i) = v_q.
    pub fn from_affine(chart: Chart, base: usize, values: &[LaurentElement]) -> Result<Self> {
        if values.len() != chart.nvars() {
            return Err(Error::InvalidInput("need one value per coordinate".into()));
        }
        let twist = values
            .iter()
            .enumerate()
            .find(|(qi, _)| *qi != base)
            .map(|(_, v)| v.degree())
            .unwrap_or(0);
        let xb = LaurentElement::var(chart, base);
        let comps = values
            .iter()
            .enumerate()
            .map(|(qi, v)| {
                if qi == base {
                    Ok(LaurentElement::zero(chart, twist + 1))
                } else {
                    xb.try_mul(v)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        VectorField::new(twist, comps)
    }

    pub fn euler(chart: Chart) -> Self {
        VectorField::normalized(chart, 0, (0..chart.nvars()).map(|qi| LaurentElement::var(chart, qi)).collect())
    }

    pub fn chart(&self) -> Chart {
        self.chart
    }

    pub fn twist(&self) -> i64 {
        self.twist
    }

    pub fn components(&self) -> &[LaurentElement] {
        &self.comps
    }

    pub fn component(&self, qi: usize) -> &LaurentElement {
        &self.comps[qi]
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|c| c.is_zero())
    }

    /// Moves to a larger chart, renormalizing for the new pivot.
    pub fn with_chart(&self, chart: Chart) -> Result<Self> {
        Ok(VectorField::normalized(chart, self.twist, recharted(&self.comps, chart)?))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if self.twist != other.twist {
            return Err(Error::DegreeMismatch { expected: self.twist, found: other.twist });
        }
        let chart = self.chart.union(&other.chart)?;
        let a = self.with_chart(chart)?;
        let b = other.with_chart(chart)?;
        let comps = a.comps.iter().zip(&b.comps).map(|(x, y)| x.try_add(y)).collect::<Result<_>>()?;
        Ok(VectorField { chart, twist: self.twist, comps })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        VectorField { chart: self.chart, twist: self.twist, comps: self.comps.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        VectorField { chart: self.chart, twist: self.twist, comps: self.comps.iter().map(|f| f.scale(c)).collect() }
    }

    /// f * V; the twist grows by deg f.
    pub fn mul_function(&self, f: &LaurentElement) -> Result<Self> {
        let chart = self.chart.union(&f.chart())?;
        let comps = self.comps.iter().map(|g| g.try_mul(f)).collect::<Result<Vec<_>>>()?;
        Ok(VectorField::normalized(chart, self.twist + f.degree(), recharted(&comps, chart)?))
    }

    /// sum_q g_q df/dx_q for an element of any degree. Only meaningful modulo
    /// the Euler field when f has degree 0.
    pub fn derive(&self, f: &LaurentElement) -> Result<LaurentElement> {
        let mut s = LaurentElement::zero(self.chart.union(&f.chart())?, f.degree() + self.twist);
        for (qi, g) in self.comps.iter().enumerate() {
            if g.is_zero() {
                continue;
            }
            s = s.try_add(&g.try_mul(&f.partial(qi))?)?;
        }
        Ok(s)
    }

    /// V(f) for a degree-0 function f.
    pub fn apply(&self, f: &LaurentElement) -> Result<LaurentElement> {
        if f.degree() != 0 {
            return Err(Error::DegreeMismatch { expected: 0, found: f.degree() });
        }
        self.derive(f)
    }

    /// The pairing sum_q g_q f_q with a 1-form.
    pub fn contract(&self, w: &OneForm) -> Result<LaurentElement> {
        let mut s = LaurentElement::zero(self.chart.union(&w.chart())?, self.twist + w.twist());
        for (g, f) in self.comps.iter().zip(w.components()) {
            s = s.try_add(&g.try_mul(f)?)?;
        }
        Ok(s)
    }

    /// Commutator V W - W V of two twist-0 fields as derivations of the chart ring.
    pub fn bracket(&self, other: &Self) -> Result<Self> {
        if self.twist != 0 || other.twist != 0 {
            return Err(Error::InvalidInput("bracket is defined for twist-0 fields".into()));
        }
        let comps = (0..self.chart.nvars())
            .map(|qi| self.derive(&other.comps[qi])?.try_sub(&other.derive(&self.comps[qi])?))
            .collect::<Result<Vec<_>>>()?;
        VectorField::new(0, comps)
    }

    /// Values on the affine coordinates x_q/x_base of a chart.
    pub fn affine_values(&self, base: usize) -> Result<Vec<LaurentElement>> {
        let chart = self.chart;
        (0..chart.nvars())
            .map(|qi| {
                if qi == base {
                    Ok(LaurentElement::zero(chart, self.twist))
                } else {
                    self.derive(&LaurentElement::ratio(chart, qi, base)?)
                }
            })
            .collect()
    }
}

fn fmt_comps(f: &mut fmt::Formatter<'_>, comps: &[LaurentElement], sym: &str) -> fmt::Result {
    let mut first = true;
    for (qi, c) in comps.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if !first {
            write!(f, " + ")?;
        }
        first = false;
        write!(f, "({c}) {sym}{qi}")?;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for OneForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_comps(f, &self.comps, "dx")
    }
}

impl fmt::Display for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_comps(f, &self.comps, "d/dx")
    }
}
