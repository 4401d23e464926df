use crate::exactalg::{Chart, LaurentElement, OneForm, VectorField};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt::Debug;

/// The standard cover U_0, ..., U_m of P^m.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StandardCover {
    m: usize,
}

impl StandardCover {
    pub fn new(m: usize) -> Result<Self> {
        if m == 0 || m > 30 {
            return Err(Error::InvalidInput(format!("unsupported ambient dimension {m}")));
        }
        Ok(StandardCover { m })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Increasing tuples (i_0 < ... < i_q).
    pub fn simplices(&self, q: usize) -> Vec<Vec<usize>> {
        fn rec(start: usize, m: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if left == 0 {
                out.push(cur.clone());
                return;
            }
            for i in start..=m {
                cur.push(i);
                rec(i + 1, m, left - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if q <= self.m {
            rec(0, self.m, q + 1, &mut Vec::new(), &mut out);
        }
        out
    }

    /// U_{i_0 ... i_q}.
    pub fn chart(&self, simplex: &[usize]) -> Chart {
        Chart::on(self.m, simplex)
    }
}

/// Values a Cech cochain can take: sections of O(k), Omega(k) or T(k).
pub trait CochainValue: Clone + PartialEq + Debug {
    fn zero_on(chart: Chart, twist: i64) -> Self;
    fn value_twist(&self) -> i64;
    fn value_chart(&self) -> Chart;
    fn rechart(&self, chart: Chart) -> Result<Self>;
    fn plus(&self, o: &Self) -> Result<Self>;
    fn negated(&self) -> Self;
    fn vanishes(&self) -> bool;
}

impl CochainValue for LaurentElement {
    fn zero_on(chart: Chart, twist: i64) -> Self {
        LaurentElement::zero(chart, twist)
    }
    fn value_twist(&self) -> i64 {
        self.degree()
    }
    fn value_chart(&self) -> Chart {
        self.chart()
    }
    fn rechart(&self, chart: Chart) -> Result<Self> {
        self.with_chart(chart)
    }
    fn plus(&self, o: &Self) -> Result<Self> {
        self.try_add(o)
    }
    fn negated(&self) -> Self {
        self.neg()
    }
    fn vanishes(&self) -> bool {
        self.is_zero()
    }
}

impl CochainValue for OneForm {
    fn zero_on(chart: Chart, twist: i64) -> Self {
        OneForm::zero(chart, twist)
    }
    fn value_twist(&self) -> i64 {
        self.twist()
    }
    fn value_chart(&self) -> Chart {
        self.chart()
    }
    fn rechart(&self, chart: Chart) -> Result<Self> {
        self.with_chart(chart)
    }
    fn plus(&self, o: &Self) -> Result<Self> {
        self.try_add(o)
    }
    fn negated(&self) -> Self {
        self.neg()
    }
    fn vanishes(&self) -> bool {
        self.is_zero()
    }
}

impl CochainValue for VectorField {
    fn zero_on(chart: Chart, twist: i64) -> Self {
        VectorField::zero(chart, twist)
    }
    fn value_twist(&self) -> i64 {
        self.twist()
    }
    fn value_chart(&self) -> Chart {
        self.chart()
    }
    fn rechart(&self, chart: Chart) -> Result<Self> {
        self.with_chart(chart)
    }
    fn plus(&self, o: &Self) -> Result<Self> {
        self.try_add(o)
    }
    fn negated(&self) -> Self {
        self.neg()
    }
    fn vanishes(&self) -> bool {
        self.is_zero()
    }
}

/// A q-cochain on the standard cover with values in a twisted bundle, given
/// on increasing tuples. Missing tuples are zero. Sections are homogeneous,
/// so the twist is carried by the degree and the cocycle test is the plain
/// alternating sum.
#[derive(Clone, Debug, PartialEq)]
pub struct Cochain<V: CochainValue> {
    cover: StandardCover,
    q: usize,
    twist: i64,
    values: BTreeMap<Vec<usize>, V>,
}

pub type LineCochain = Cochain<LaurentElement>;
pub type FormCochain = Cochain<OneForm>;
pub type FieldCochain = Cochain<VectorField>;

impl<V: CochainValue> Cochain<V> {
    pub fn zero(cover: StandardCover, q: usize, twist: i64) -> Self {
        Cochain { cover, q, twist, values: BTreeMap::new() }
    }

    pub fn new(cover: StandardCover, q: usize, twist: i64, values: BTreeMap<Vec<usize>, V>) -> Result<Self> {
        let mut c = Self::zero(cover, q, twist);
        for (s, v) in values {
            c.set(&s, v)?;
        }
        Ok(c)
    }

    /// Sets the value on an increasing tuple; the value must be regular on
    /// the corresponding intersection.
    pub fn set(&mut self, simplex: &[usize], v: V) -> Result<()> {
        if simplex.len() != self.q + 1 || simplex.windows(2).any(|w| w[0] >= w[1]) || simplex.iter().any(|&i| i > self.cover.m()) {
            return Err(Error::InvalidInput(format!("bad simplex {simplex:?} for a {}-cochain", self.q)));
        }
        if v.value_twist() != self.twist {
            return Err(Error::DegreeMismatch { expected: self.twist, found: v.value_twist() });
        }
        let chart = self.cover.chart(simplex);
        if !chart.contains(&v.value_chart()) {
            let bad = v.value_chart().indices().into_iter().find(|i| !chart.allows(*i)).unwrap_or(0);
            return Err(Error::ChartViolation { index: bad });
        }
        let v = v.rechart(chart)?;
        if v.vanishes() {
            self.values.remove(simplex);
        } else {
            self.values.insert(simplex.to_vec(), v);
        }
        Ok(())
    }

    pub fn cover(&self) -> StandardCover {
        self.cover
    }

    pub fn degree(&self) -> usize {
        self.q
    }

    pub fn twist(&self) -> i64 {
        self.twist
    }

    pub fn get(&self, simplex: &[usize]) -> V {
        self.values.get(simplex).cloned().unwrap_or_else(|| V::zero_on(self.cover.chart(simplex), self.twist))
    }

    /// Nonzero values.
    pub fn values(&self) -> &BTreeMap<Vec<usize>, V> {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        if self.q != o.q || self.twist != o.twist || self.cover != o.cover {
            return Err(Error::InvalidInput("cochains of different shapes".into()));
        }
        let mut c = self.clone();
        for (s, v) in &o.values {
            let sum = c.get(s).plus(v)?;
            c.set(s, sum)?;
        }
        Ok(c)
    }

    pub fn neg(&self) -> Self {
        Cochain { values: self.values.iter().map(|(s, v)| (s.clone(), v.negated())).collect(), ..self.clone() }
    }

    /// (delta c)_{i_0 .. i_{q+1}} = sum_k (-1)^k c_{i_0 .. ^i_k .. i_{q+1}}.
    pub fn coboundary(&self) -> Result<Self> {
        let mut out = Self::zero(self.cover, self.q + 1, self.twist);
        for t in self.cover.simplices(self.q + 1) {
            let chart = self.cover.chart(&t);
            let mut acc = V::zero_on(chart, self.twist);
            for k in 0..t.len() {
                let mut face = t.clone();
                face.remove(k);
                if let Some(v) = self.values.get(&face) {
                    let v = v.rechart(chart)?;
                    acc = acc.plus(&if k % 2 == 0 { v } else { v.negated() })?;
                }
            }
            out.set(&t, acc)?;
        }
        Ok(out)
    }

    /// First tuple on which the coboundary does not vanish.
    pub fn cocycle_witness(&self) -> Result<Option<Vec<usize>>> {
        Ok(self.coboundary()?.values.keys().next().cloned())
    }

    pub fn is_cocycle(&self) -> Result<bool> {
        Ok(self.cocycle_witness()?.is_none())
    }

    pub fn ensure_cocycle(&self) -> Result<()> {
        match self.cocycle_witness()? {
            None => Ok(()),
            Some(witness) => Err(Error::NotACocycle { witness }),
        }
    }

    pub fn map<W: CochainValue, F>(&self, twist: i64, f: F) -> Result<Cochain<W>>
    where
        F: Fn(&[usize], &V) -> Result<W>,
    {
        let mut out = Cochain::zero(self.cover, self.q, twist);
        for (s, v) in &self.values {
            out.set(s, f(s, v)?)?;
        }
        Ok(out)
    }
}

impl LineCochain {
    /// The chart-trivialized family sigma_{i_0..i_q} = c_{i_0..i_q} / x_{i_0}^k,
    /// which satisfies the twisted cocycle relation with alpha_{ij} = (x_i/x_j)^{-k}.
    pub fn trivialized(&self) -> Result<BTreeMap<Vec<usize>, LaurentElement>> {
        let m = self.cover.m();
        self.values
            .iter()
            .map(|(s, v)| {
                let xi = LaurentElement::var(self.cover.chart(s), s[0]).pow(self.twist)?;
                Ok((s.clone(), v.try_mul(&xi.invert()?)?.with_chart(Chart::on(m, s))?))
            })
            .collect()
    }
}

/// alpha_{i_0 i_1} sigma_{i_1..i_{q+1}} + sum_{k >= 1} (-1)^k sigma_{..^i_k..} = 0
/// on every tuple, for a degree-0 family; returns the first failing tuple.
pub fn twisted_cocycle_witness(
    cover: StandardCover,
    q: usize,
    sigma: &BTreeMap<Vec<usize>, LaurentElement>,
    alpha: &super::UnitCocycle,
) -> Result<Option<Vec<usize>>> {
    for t in cover.simplices(q + 1) {
        let chart = cover.chart(&t);
        let mut acc = LaurentElement::zero(chart, 0);
        for k in 0..t.len() {
            let mut face = t.clone();
            face.remove(k);
            let Some(v) = sigma.get(&face) else { continue };
            let mut v = v.with_chart(chart)?;
            if k == 0 {
                v = alpha.get(t[0], t[1])?.try_mul(&v)?;
            }
            acc = if k % 2 == 0 { acc.try_add(&v)? } else { acc.try_sub(&v)? };
        }
        if !acc.is_zero() {
            return Ok(Some(t));
        }
    }
    Ok(None)
}

/// JSON form of an O(k)-valued cochain: {m, k, q, values: {"i,j,...": text}}.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CochainJson {
    pub m: usize,
    pub k: i64,
    pub q: usize,
    pub values: BTreeMap<String, String>,
}

pub fn simplex_key(s: &[usize]) -> String {
    s.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
}

pub fn parse_simplex_key(key: &str) -> Result<Vec<usize>> {
    key.split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad index tuple '{key}'"))))
        .collect()
}

impl CochainJson {
    pub fn from_cochain(c: &LineCochain) -> Self {
        CochainJson {
            m: c.cover().m(),
            k: c.twist(),
            q: c.degree(),
            values: c.values().iter().map(|(s, v)| (simplex_key(s), v.to_string())).collect(),
        }
    }

    pub fn to_cochain(&self) -> Result<LineCochain> {
        let cover = StandardCover::new(self.m)?;
        let mut c = LineCochain::zero(cover, self.q, self.k);
        for (key, text) in &self.values {
            let s = parse_simplex_key(key)?;
            let chart = Chart::new(self.m, &s)?;
            c.set(&s, LaurentElement::parse(text, chart, self.k)?)?;
        }
        Ok(c)
    }
}
