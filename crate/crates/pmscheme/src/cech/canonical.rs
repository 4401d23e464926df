use super::cochain::{FormCochain, StandardCover};
use crate::exactalg::{differential, Chart, LMatrix, LaurentElement, OneForm};
use crate::{Error, Result};
use std::collections::BTreeMap;

/// Transition functions alpha_ij (i < j) of a line bundle on the standard
/// cover, as degree-0 unit monomials on U_ij.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitCocycle {
    cover: StandardCover,
    values: BTreeMap<(usize, usize), LaurentElement>,
}

impl UnitCocycle {
    pub fn new(cover: StandardCover, values: BTreeMap<(usize, usize), LaurentElement>) -> Result<Self> {
        let m = cover.m();
        let mut out = BTreeMap::new();
        for i in 0..=m {
            for j in i + 1..=m {
                let v = values.get(&(i, j)).ok_or_else(|| Error::InvalidInput(format!("missing alpha_{i}{j}")))?;
                let chart = cover.chart(&[i, j]);
                if v.degree() != 0 {
                    return Err(Error::DegreeMismatch { expected: 0, found: v.degree() });
                }
                let v = v.with_chart(chart.union(&v.chart())?)?;
                if !chart.contains(&v.chart()) || !v.is_unit() {
                    return Err(Error::NotAUnit(v.to_string()));
                }
                out.insert((i, j), v.with_chart(chart)?);
            }
        }
        let c = UnitCocycle { cover, values: out };
        if let Some(w) = c.cocycle_witness()? {
            return Err(Error::NotACocycle { witness: w });
        }
        Ok(c)
    }

    /// O(k): alpha_ij = (x_i/x_j)^{-k}.
    pub fn line_bundle(cover: StandardCover, k: i64) -> Self {
        let m = cover.m();
        let mut values = BTreeMap::new();
        for i in 0..=m {
            for j in i + 1..=m {
                let chart = cover.chart(&[i, j]);
                values.insert((i, j), LaurentElement::ratio(chart, i, j).and_then(|r| r.pow(-k)).expect("unit"));
            }
        }
        UnitCocycle { cover, values }
    }

    pub fn trivial(cover: StandardCover) -> Self {
        Self::line_bundle(cover, 0)
    }

    pub fn cover(&self) -> StandardCover {
        self.cover
    }

    /// alpha_ij for any ordered pair, with alpha_ji = alpha_ij^{-1}, alpha_ii = 1.
    pub fn get(&self, i: usize, j: usize) -> Result<LaurentElement> {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => Ok(self.values[&(i, j)].clone()),
            std::cmp::Ordering::Greater => self.values[&(j, i)].invert(),
            std::cmp::Ordering::Equal => Ok(LaurentElement::one(self.cover.chart(&[i]))),
        }
    }

    pub fn values(&self) -> &BTreeMap<(usize, usize), LaurentElement> {
        &self.values
    }

    /// First (i, j, k) with alpha_ij alpha_jk != alpha_ik.
    pub fn cocycle_witness(&self) -> Result<Option<Vec<usize>>> {
        for t in self.cover.simplices(2) {
            let (i, j, k) = (t[0], t[1], t[2]);
            let chart = self.cover.chart(&t);
            let lhs = self.get(i, j)?.try_mul(&self.get(j, k)?)?.with_chart(chart)?;
            if lhs != self.get(i, k)?.with_chart(chart)? {
                return Ok(Some(t));
            }
        }
        Ok(None)
    }

    /// Tensor product: alpha_ij alpha'_ij.
    pub fn tensor(&self, o: &Self) -> Result<Self> {
        let values = self
            .values
            .iter()
            .map(|(&(i, j), v)| Ok(((i, j), v.try_mul(&o.values[&(i, j)])?)))
            .collect::<Result<_>>()?;
        Ok(UnitCocycle { cover: self.cover, values })
    }

    pub fn power(&self, n: i64) -> Result<Self> {
        let values = self.values.iter().map(|(&(i, j), v)| Ok(((i, j), v.pow(n)?))).collect::<Result<_>>()?;
        Ok(UnitCocycle { cover: self.cover, values })
    }
}

/// The canonical class cochain: B_ij = (d alpha_ij) alpha_ij^{-1}.
pub fn nabla0(theta: &UnitCocycle) -> Result<FormCochain> {
    let cover = theta.cover();
    let mut c = FormCochain::zero(cover, 1, 0);
    for (&(i, j), a) in theta.values() {
        c.set(&[i, j], differential(a)?.mul_function(&a.invert()?)?)?;
    }
    Ok(c)
}

/// d(x_i/x_j) (x_j/x_i), the canonical cochain of O(-1).
pub fn log_ratio_form(chart: Chart, i: usize, j: usize) -> Result<OneForm> {
    let r = LaurentElement::ratio(chart, i, j)?;
    differential(&r)?.mul_function(&r.invert()?)
}

/// T_r(M) = tr(M^{-1} dM) for a matrix of degree-0 functions.
pub fn trace_form(m: &LMatrix) -> Result<OneForm> {
    let inv = m.inverse()?;
    let r = m.size();
    let mut acc = OneForm::zero(m.chart().union(&inv.chart())?, 0);
    for i in 0..r {
        for j in 0..r {
            let dm = differential(m.get(j, i))?;
            acc = acc.try_add(&dm.mul_function(inv.get(i, j))?)?;
        }
    }
    Ok(acc)
}
