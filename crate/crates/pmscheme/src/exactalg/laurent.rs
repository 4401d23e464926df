use super::{is_zero, parse_rational, q, rational_text, Chart, Rational};
use crate::{Error, Result};
use num::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Homogeneous Laurent polynomial in x_0..x_m over Q with a declared degree.
/// Degree 0 elements are functions on the chart, degree k elements are
/// sections of O(k) there.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentElement {
    chart: Chart,
    degree: i64,
    terms: BTreeMap<Vec<i64>, Rational>,
}

impl LaurentElement {
    pub fn zero(chart: Chart, degree: i64) -> Self {
        LaurentElement { chart, degree, terms: BTreeMap::new() }
    }

    pub fn constant(chart: Chart, c: Rational) -> Self {
        let mut e = Self::zero(chart, 0);
        if !is_zero(&c) {
            e.terms.insert(vec![0; chart.nvars()], c);
        }
        e
    }

    pub fn one(chart: Chart) -> Self {
        Self::constant(chart, Rational::one())
    }

    pub fn int(chart: Chart, n: i64) -> Self {
        Self::constant(chart, q(n))
    }

    /// `c * x^exps`, checked against the chart.
    pub fn monomial(chart: Chart, exps: &[i64], c: Rational) -> Result<Self> {
        if exps.len() != chart.nvars() {
            return Err(Error::InvalidInput(format!(
                "exponent vector of length {} on P^{}",
                exps.len(),
                chart.m()
            )));
        }
        check_chart(&chart, exps)?;
        let degree = exps.iter().sum();
        let mut e = Self::zero(chart, degree);
        if !is_zero(&c) {
            e.terms.insert(exps.to_vec(), c);
        }
        Ok(e)
    }

    /// The coordinate x_q (degree 1).
    pub fn var(chart: Chart, q: usize) -> Self {
        let mut a = vec![0; chart.nvars()];
        a[q] = 1;
        Self::monomial(chart, &a, Rational::one()).expect("nonnegative exponents")
    }

    /// x_p / x_q, requires q allowed.
    pub fn ratio(chart: Chart, p: usize, q: usize) -> Result<Self> {
        let mut a = vec![0; chart.nvars()];
        a[p] += 1;
        a[q] -= 1;
        Self::monomial(chart, &a, Rational::one())
    }

    /// Builds an element from raw terms; zero coefficients are dropped.
    pub fn from_terms<I>(chart: Chart, degree: i64, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<i64>, Rational)>,
    {
        let mut e = Self::zero(chart, degree);
        for (a, c) in terms {
            if a.len() != chart.nvars() {
                return Err(Error::InvalidInput("exponent vector length".into()));
            }
            let s: i64 = a.iter().sum();
            if s != degree {
                return Err(Error::DegreeMismatch { expected: degree, found: s });
            }
            check_chart(&chart, &a)?;
            e.add_term(a, c);
        }
        Ok(e)
    }

    fn add_term(&mut self, a: Vec<i64>, c: Rational) {
        if is_zero(&c) {
            return;
        }
        let entry = self.terms.entry(a);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + c;
                if is_zero(&s) {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn chart(&self) -> Chart {
        self.chart
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn m(&self) -> usize {
        self.chart.m()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exps: &[i64]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    /// Some(c) when the element is the constant c (degree 0 only).
    pub fn as_constant(&self) -> Option<Rational> {
        if self.degree != 0 {
            return None;
        }
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (a, c) = self.terms.iter().next().unwrap();
                a.iter().all(|&e| e == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Smallest chart on which the element is defined.
    pub fn support_chart(&self) -> Option<Chart> {
        let mut mask = 0u32;
        for a in self.terms.keys() {
            for (i, &e) in a.iter().enumerate() {
                if e < 0 {
                    mask |= 1 << i;
                }
            }
        }
        Chart::from_mask(self.m(), mask).ok()
    }

    /// The same element on a larger chart.
    pub fn with_chart(&self, chart: Chart) -> Result<Self> {
        if chart.m() != self.m() {
            return Err(Error::AmbientMismatch { left: self.m(), right: chart.m() });
        }
        for a in self.terms.keys() {
            check_chart(&chart, a)?;
        }
        Ok(LaurentElement { chart, degree: self.degree, terms: self.terms.clone() })
    }

    fn common_chart(&self, other: &Self) -> Result<Chart> {
        self.chart.union(&other.chart)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let chart = self.common_chart(other)?;
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, found: other.degree });
        }
        let mut r = LaurentElement { chart, degree: self.degree, terms: self.terms.clone() };
        for (a, c) in &other.terms {
            r.add_term(a.clone(), c.clone());
        }
        Ok(r)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        let chart = self.common_chart(other)?;
        let mut r = Self::zero(chart, self.degree + other.degree);
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                let e: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                r.add_term(e, c * d);
            }
        }
        Ok(r)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut r = Self::zero(self.chart, self.degree);
        if is_zero(c) {
            return r;
        }
        for (a, d) in &self.terms {
            r.terms.insert(a.clone(), d * c);
        }
        r
    }

    /// Multiplies by the monomial x^exps (no coefficient); the chart is
    /// enlarged to admit the new denominators.
    pub fn mul_monomial(&self, exps: &[i64]) -> Self {
        let mut mask = self.chart.mask();
        let mut terms = BTreeMap::new();
        for (a, c) in &self.terms {
            let e: Vec<i64> = a.iter().zip(exps).map(|(x, y)| x + y).collect();
            for (i, &v) in e.iter().enumerate() {
                if v < 0 {
                    mask |= 1 << i;
                }
            }
            terms.insert(e, c.clone());
        }
        for (i, &v) in exps.iter().enumerate() {
            if v < 0 {
                mask |= 1 << i;
            }
        }
        let chart = Chart::from_mask(self.m(), mask).expect("nonempty mask");
        LaurentElement { chart, degree: self.degree + exps.iter().sum::<i64>(), terms }
    }

    /// Inverse of a unit monomial c*x^a.
    pub fn invert(&self) -> Result<Self> {
        if self.terms.len() != 1 {
            return Err(Error::NotAUnit(self.to_string()));
        }
        let (a, c) = self.terms.iter().next().unwrap();
        let inv: Vec<i64> = a.iter().map(|e| -e).collect();
        check_chart(&self.chart, &inv)?;
        Self::monomial(self.chart, &inv, c.recip())
    }

    pub fn is_unit(&self) -> bool {
        self.invert().is_ok()
    }

    pub fn try_div(&self, unit: &Self) -> Result<Self> {
        self.try_mul(&unit.invert()?)
    }

    /// Integer power; negative exponents require a unit.
    pub fn pow(&self, e: i64) -> Result<Self> {
        if e < 0 {
            return self.invert()?.pow(-e);
        }
        let mut r = LaurentElement::one(self.chart);
        r.degree = 0;
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

    /// Partial derivative with respect to x_q.
    pub fn partial(&self, qi: usize) -> Self {
        let mut r = Self::zero(self.chart, self.degree - 1);
        for (a, c) in &self.terms {
            if a[qi] != 0 {
                let mut b = a.clone();
                b[qi] -= 1;
                r.add_term(b, c * q(a[qi]));
            }
        }
        r
    }

    /// Parses the canonical text form. The degree is taken from the terms,
    /// or from `degree_hint` for the zero element.
    pub fn parse(text: &str, chart: Chart, degree_hint: i64) -> Result<Self> {
        let text = text.trim();
        if text == "0" || text.is_empty() {
            return Ok(Self::zero(chart, degree_hint));
        }
        let mut terms = Vec::new();
        for part in text.split(" + ") {
            let part = part.trim();
            let (cs, ms) = match part.split_once('*') {
                Some((c, m)) => (c.trim(), m.trim()),
                None => (part, ""),
            };
            let c = parse_rational(cs)?;
            let mut a = vec![0i64; chart.nvars()];
            for tok in ms.split_whitespace() {
                let body = tok
                    .strip_prefix('x')
                    .ok_or_else(|| Error::Parse(format!("bad factor '{tok}'")))?;
                let (idx, ex) = match body.split_once('^') {
                    Some((i, e)) => (i, e),
                    None => (body, "1"),
                };
                let idx: usize = idx.parse().map_err(|_| Error::Parse(format!("bad index in '{tok}'")))?;
                let ex: i64 = ex.parse().map_err(|_| Error::Parse(format!("bad exponent in '{tok}'")))?;
                if idx >= a.len() {
                    return Err(Error::Parse(format!("index {idx} out of range")));
                }
                a[idx] += ex;
            }
            terms.push((a, c));
        }
        let degree = terms[0].0.iter().sum();
        Self::from_terms(chart, degree, terms)
    }

    /// Substitutes rational values for all coordinates (used for spot checks).
    pub fn evaluate(&self, point: &[Rational]) -> Option<Rational> {
        let mut s = Rational::zero();
        for (a, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(a) {
                if e < 0 && x.is_zero() {
                    return None;
                }
                let p = num::pow::pow(x.clone(), e.unsigned_abs() as usize);
                t *= if e < 0 { p.recip() } else { p };
            }
            s += t;
        }
        Some(s)
    }

    /// Largest absolute exponent, a size measure for generated data.
    pub fn height(&self) -> i64 {
        self.terms.keys().flat_map(|a| a.iter().map(|e| e.abs())).max().unwrap_or(0)
    }

    pub fn max_coefficient_bits(&self) -> u64 {
        self.terms
            .values()
            .map(|c| c.numer().abs().bits().max(c.denom().bits()))
            .max()
            .unwrap_or(0)
    }
}

fn check_chart(chart: &Chart, a: &[i64]) -> Result<()> {
    for (i, &e) in a.iter().enumerate() {
        if e < 0 && !chart.allows(i) {
            return Err(Error::ChartViolation { index: i });
        }
    }
    Ok(())
}

impl fmt::Display for LaurentElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (a, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{} *", rational_text(c))?;
            for (i, e) in a.iter().enumerate() {
                write!(f, " x{i}^{e}")?;
            }
        }
        Ok(())
    }
}

impl Neg for &LaurentElement {
    type Output = LaurentElement;
    fn neg(self) -> LaurentElement {
        let mut r = self.clone();
        for c in r.terms.values_mut() {
            *c = -c.clone();
        }
        r
    }
}

impl Neg for LaurentElement {
    type Output = LaurentElement;
    fn neg(self) -> LaurentElement {
        -&self
    }
}

impl LaurentElement {
    pub fn neg(&self) -> LaurentElement {
        -self
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl $tr<&LaurentElement> for &LaurentElement {
            type Output = LaurentElement;
            fn $m(self, rhs: &LaurentElement) -> LaurentElement {
                self.$f(rhs).unwrap_or_else(|e| panic!("{}: {e}", stringify!($m)))
            }
        }
        impl $tr<LaurentElement> for LaurentElement {
            type Output = LaurentElement;
            fn $m(self, rhs: LaurentElement) -> LaurentElement {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentElement> for LaurentElement {
            type Output = LaurentElement;
            fn $m(self, rhs: &LaurentElement) -> LaurentElement {
                (&self).$m(rhs)
            }
        }
        impl $tr<LaurentElement> for &LaurentElement {
            type Output = LaurentElement;
            fn $m(self, rhs: LaurentElement) -> LaurentElement {
                self.$m(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::qr;

    fn u(ix: &[usize]) -> Chart {
        Chart::on(2, ix)
    }

    #[test]
    fn unit_cancellation() {
        let c = u(&[0, 1]);
        let a = LaurentElement::ratio(c, 0, 1).unwrap();
        let b = LaurentElement::ratio(c, 1, 0).unwrap();
        assert_eq!(&a * &b, LaurentElement::one(c));
    }

    #[test]
    fn sum_on_u1() {
        let c = u(&[1]);
        let s = LaurentElement::ratio(c, 0, 1).unwrap() + LaurentElement::ratio(c, 2, 1).unwrap();
        assert_eq!(s.degree(), 0);
        assert_eq!(s.num_terms(), 2);
        assert_eq!(s.to_string(), "1 * x0^0 x1^-1 x2^1 + 1 * x0^1 x1^-1 x2^0");
    }

    #[test]
    fn product_of_sections() {
        let c = u(&[0, 1, 2]);
        let a = LaurentElement::ratio(c, 0, 1).unwrap().pow(3).unwrap();
        let b = LaurentElement::monomial(c, &[-1, 2, -1], q(1)).unwrap();
        let p = &a * &b;
        assert_eq!(p, LaurentElement::monomial(c, &[2, -1, -1], q(1)).unwrap());
        assert_eq!(p.degree(), 0);
    }

    #[test]
    fn degree_mismatch_on_add() {
        let c = u(&[0]);
        let a = LaurentElement::var(c, 1);
        let b = LaurentElement::one(c);
        assert!(matches!(a.try_add(&b), Err(Error::DegreeMismatch { .. })));
    }

    #[test]
    fn chart_violation() {
        assert_eq!(
            LaurentElement::ratio(u(&[0]), 0, 1).unwrap_err(),
            Error::ChartViolation { index: 1 }
        );
    }

    #[test]
    fn inversion() {
        let c = u(&[0, 1]);
        let a = LaurentElement::ratio(c, 0, 1).unwrap().pow(3).unwrap();
        assert_eq!(a.invert().unwrap(), LaurentElement::ratio(c, 1, 0).unwrap().pow(3).unwrap());
        assert_eq!(LaurentElement::one(c).invert().unwrap(), LaurentElement::one(c));
        let s = LaurentElement::var(c, 0) + LaurentElement::var(c, 1);
        assert!(matches!(s.invert(), Err(Error::NotAUnit(_))));
        let x0 = LaurentElement::ratio(u(&[0]), 1, 0).unwrap();
        assert_eq!(x0.invert().unwrap_err(), Error::ChartViolation { index: 1 });
    }

    #[test]
    fn text_round_trip() {
        let c = u(&[0, 2]);
        let a = LaurentElement::from_terms(
            c,
            -1,
            vec![(vec![1, 0, -2], qr(-3, 4)), (vec![0, 1, -2], q(5)), (vec![-1, 0, 0], q(1))],
        )
        .unwrap();
        let t = a.to_string();
        assert_eq!(LaurentElement::parse(&t, c, 0).unwrap(), a);
        assert_eq!(LaurentElement::parse("0", c, 4).unwrap(), LaurentElement::zero(c, 4));
    }
}
