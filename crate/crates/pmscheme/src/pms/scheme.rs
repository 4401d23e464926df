use crate::autgroup::{GnElement, HnElement};
use crate::cech::{Cochain, CochainValue, StandardCover, UnitCocycle};
use crate::exactalg::{LaurentElement, VectorField};
use crate::truncated::TruncSeries;
use crate::{Error, Result};
use num::One;
use std::collections::BTreeMap;

/// Families indexed by increasing pairs (i, j).
pub type PairFamily<V> = BTreeMap<(usize, usize), V>;

/// Cochain values that can be multiplied by a function; used to move
/// between chart-trivialized families and homogeneous cochains.
pub trait Twistable: CochainValue {
    fn times(&self, f: &LaurentElement) -> Result<Self>;
}

impl Twistable for LaurentElement {
    fn times(&self, f: &LaurentElement) -> Result<Self> {
        self.try_mul(f)
    }
}

impl Twistable for VectorField {
    fn times(&self, f: &LaurentElement) -> Result<Self> {
        self.mul_function(f)
    }
}

/// The k with alpha_ij = (x_i/x_j)^{-k} for all i < j, if the cocycle is the
/// standard one of O(k).
pub fn standard_degree(c: &UnitCocycle) -> Option<i64> {
    let a01 = &c.values()[&(0, 1)];
    let (exps, coef) = a01.terms().next()?;
    if a01.num_terms() != 1 || !coef.is_one() {
        return None;
    }
    let k = exps[1];
    (UnitCocycle::line_bundle(c.cover(), k) == *c).then_some(k)
}

/// c_{i_0..i_q} = sigma_{i_0..i_q} x_{i_0}^w: an untwisted family trivialized on
/// the first chart, with twisted relation given by O(w), becomes a homogeneous
/// cochain of twist w.
pub fn homogenize<V: Twistable>(
    cover: StandardCover,
    q: usize,
    w: i64,
    raw: &BTreeMap<Vec<usize>, V>,
) -> Result<Cochain<V>> {
    let mut c = Cochain::zero(cover, q, w);
    for (s, v) in raw {
        let x = LaurentElement::var(cover.chart(s), s[0]).pow(w)?;
        c.set(s, v.times(&x)?)?;
    }
    Ok(c)
}

/// Inverse of `homogenize`.
pub fn dehomogenize<V: Twistable>(c: &Cochain<V>, w: i64) -> Result<BTreeMap<Vec<usize>, V>> {
    let cover = c.cover();
    c.values()
        .iter()
        .map(|(s, v)| {
            let x = LaurentElement::var(cover.chart(s), s[0]).pow(-w)?;
            Ok((s.clone(), v.times(&x)?.rechart(cover.chart(s))?))
        })
        .collect()
}

/// First (q+1)-tuple where w_{i0 i1} s_{i1..} + sum_{k>=1} (-1)^k s_{..^ik..} != 0.
pub fn twisted_witness<V: Twistable>(
    cover: StandardCover,
    q: usize,
    raw: &BTreeMap<Vec<usize>, V>,
    weight: &UnitCocycle,
) -> Result<Option<Vec<usize>>> {
    for t in cover.simplices(q + 1) {
        let chart = cover.chart(&t);
        let mut acc = V::zero_on(chart, 0);
        for k in 0..t.len() {
            let mut face = t.clone();
            face.remove(k);
            let Some(v) = raw.get(&face) else { continue };
            let mut v = v.rechart(chart)?;
            if k == 0 {
                v = v.times(&weight.get(t[0], t[1])?)?.rechart(chart)?;
            }
            acc = acc.plus(&if k % 2 == 0 { v } else { v.negated() })?;
        }
        if !acc.vanishes() {
            return Ok(Some(t));
        }
    }
    Ok(None)
}

/// Gluing data of a primitive multiple scheme of multiplicity n on the
/// standard cover: delta*_ij in G_n(U_ij) for i < j, delta*_ji = inverse.
#[derive(Clone, Debug)]
pub struct SchemeCocycle {
    cover: StandardCover,
    n: usize,
    transitions: PairFamily<GnElement>,
}

/// Outcome of `validate_scheme`.
#[derive(Clone, Debug)]
pub struct SchemeReport {
    pub cocycle_ok: bool,
    /// First triple (i, j, k) with delta*_ij delta*_jk != delta*_ik.
    pub witness: Option<Vec<usize>>,
    /// alpha_ij, the constant coefficient of mu_ij.
    pub l_cocycle: Option<UnitCocycle>,
    /// k when the L cocycle is the standard cocycle of O(k).
    pub l_degree: Option<i64>,
}

impl SchemeCocycle {
    pub fn new(cover: StandardCover, n: usize, transitions: PairFamily<GnElement>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidOrder(format!("multiplicity {n}: need n >= 2")));
        }
        let m = cover.m();
        for i in 0..=m {
            for j in i + 1..=m {
                let g = transitions.get(&(i, j)).ok_or_else(|| Error::InvalidInput(format!("missing delta_{i}{j}")))?;
                if g.order() != n {
                    return Err(Error::OrderMismatch { left: g.order(), right: n });
                }
                let chart = cover.chart(&[i, j]);
                if !chart.contains(&g.chart()) {
                    let bad = g.chart().indices().into_iter().find(|q| !chart.allows(*q)).unwrap_or(0);
                    return Err(Error::ChartViolation { index: bad });
                }
            }
        }
        if transitions.keys().any(|&(i, j)| i >= j || j > m) {
            return Err(Error::InvalidInput("transitions are keyed by pairs i < j <= m".into()));
        }
        Ok(SchemeCocycle { cover, n, transitions })
    }

    /// The trivial scheme of multiplicity n with associated line bundle L:
    /// delta*_ij fixes functions and sends t to alpha_ij t.
    pub fn trivial(l: &UnitCocycle, n: usize) -> Result<Self> {
        let cover = l.cover();
        let transitions = l
            .values()
            .iter()
            .map(|(&(i, j), a)| Ok(((i, j), GnElement::scaling(cover.chart(&[i, j]), n, TruncSeries::constant(a, n - 1)?)?)))
            .collect::<Result<_>>()?;
        Self::new(cover, n, transitions)
    }

    pub fn cover(&self) -> StandardCover {
        self.cover
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn transitions(&self) -> &PairFamily<GnElement> {
        &self.transitions
    }

    /// delta*_ij for any ordered pair.
    pub fn get(&self, i: usize, j: usize) -> Result<GnElement> {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => Ok(self.transitions[&(i, j)].clone()),
            std::cmp::Ordering::Greater => self.transitions[&(j, i)].invert(),
            std::cmp::Ordering::Equal => Ok(GnElement::identity(self.cover.chart(&[i]), self.n)),
        }
    }

    pub fn cocycle_witness(&self) -> Result<Option<Vec<usize>>> {
        for t in self.cover.simplices(2) {
            let (i, j, k) = (t[0], t[1], t[2]);
            let lhs = self.transitions[&(i, j)].compose(&self.transitions[&(j, k)])?;
            if lhs != self.transitions[&(i, k)] {
                return Ok(Some(t));
            }
        }
        Ok(None)
    }

    /// alpha_ij = mu_ij mod t, as a unit cocycle.
    pub fn line_bundle(&self) -> Result<UnitCocycle> {
        let values = self.transitions.iter().map(|(&k, g)| (k, g.mu().coeff(0).clone())).collect();
        UnitCocycle::new(self.cover, values)
    }

    /// The underlying scheme of multiplicity k, 2 <= k <= n.
    pub fn reduce(&self, k: usize) -> Result<Self> {
        let transitions = self.transitions.iter().map(|(&p, g)| Ok((p, g.reduce(k)?))).collect::<Result<_>>()?;
        Self::new(self.cover, k, transitions)
    }

    /// The cohomologous cocycle tau_i delta*_ij tau_j^{-1}.
    pub fn conjugate(&self, tau: &[GnElement]) -> Result<Self> {
        if tau.len() != self.cover.m() + 1 {
            return Err(Error::InvalidInput("one automorphism per chart".into()));
        }
        let transitions = self
            .transitions
            .iter()
            .map(|(&(i, j), g)| Ok(((i, j), tau[i].compose(g)?.compose(&tau[j].invert()?)?)))
            .collect::<Result<_>>()?;
        Self::new(self.cover, self.n, transitions)
    }
}

/// Cocycle condition and associated line bundle of a scheme.
pub fn validate_scheme(s: &SchemeCocycle) -> Result<SchemeReport> {
    let witness = s.cocycle_witness()?;
    let l_cocycle = match s.line_bundle() {
        Ok(l) => Some(l),
        Err(Error::NotACocycle { .. }) => None,
        Err(e) => return Err(e),
    };
    let l_degree = l_cocycle.as_ref().and_then(standard_degree);
    Ok(SchemeReport { cocycle_ok: witness.is_none(), witness, l_cocycle, l_degree })
}

/// A scheme together with an extension of its ideal sheaf to a line bundle:
/// (delta*_ij, u_ij) in H_n with delta*_ij(t) = u_ij t.
#[derive(Clone, Debug)]
pub struct PairCocycle {
    scheme: SchemeCocycle,
    u: PairFamily<TruncSeries>,
}

impl PairCocycle {
    pub fn new(scheme: SchemeCocycle, u: PairFamily<TruncSeries>) -> Result<Self> {
        for (&(i, j), g) in scheme.transitions() {
            let v = u.get(&(i, j)).ok_or_else(|| Error::InvalidInput(format!("missing u_{i}{j}")))?;
            HnElement::new(g.clone(), v.clone())?;
        }
        let p = PairCocycle { scheme, u };
        if let Some(w) = p.cocycle_witness()? {
            return Err(Error::NotACocycle { witness: w });
        }
        Ok(p)
    }

    /// (phi_{D_ij, alpha_ij}, alpha_ij + beta_ij t) in H_2.
    pub fn from_h2_data(
        cover: StandardCover,
        d: &PairFamily<VectorField>,
        alpha: &UnitCocycle,
        beta: &PairFamily<LaurentElement>,
    ) -> Result<Self> {
        let mut transitions = BTreeMap::new();
        let mut u = BTreeMap::new();
        for (&(i, j), a) in alpha.values() {
            let chart = cover.chart(&[i, j]);
            let dij = d.get(&(i, j)).cloned().unwrap_or_else(|| VectorField::zero(chart, 0));
            let bij = beta.get(&(i, j)).cloned().unwrap_or_else(|| LaurentElement::zero(chart, 0));
            let g = GnElement::phi2(&dij.with_chart(chart.union(&dij.chart())?)?, a)?;
            transitions.insert((i, j), g);
            u.insert((i, j), TruncSeries::new(vec![a.clone(), bij])?);
        }
        Self::new(SchemeCocycle::new(cover, 2, transitions)?, u)
    }

    pub fn scheme(&self) -> &SchemeCocycle {
        &self.scheme
    }

    pub fn order(&self) -> usize {
        self.scheme.order()
    }

    pub fn u(&self) -> &PairFamily<TruncSeries> {
        &self.u
    }

    /// (delta*_ij, u_ij) for i < j.
    pub fn element(&self, i: usize, j: usize) -> Result<HnElement> {
        HnElement::new(self.scheme.transitions()[&(i, j)].clone(), self.u[&(i, j)].clone())
    }

    /// First triple where h_ij h_jk and h_ik differ, comparing full u.
    pub fn cocycle_witness(&self) -> Result<Option<Vec<usize>>> {
        for t in self.scheme.cover().simplices(2) {
            let (i, j, k) = (t[0], t[1], t[2]);
            let lhs = self.element(i, j)?.compose(&self.element(j, k)?)?;
            if !lhs.same_representative(&self.element(i, k)?) {
                return Ok(Some(t));
            }
        }
        Ok(None)
    }

    /// The cohomologous cocycle tau_i h_ij tau_j^{-1}.
    pub fn conjugate(&self, tau: &[HnElement]) -> Result<Self> {
        let cover = self.scheme.cover();
        if tau.len() != cover.m() + 1 {
            return Err(Error::InvalidInput("one element per chart".into()));
        }
        let mut transitions = BTreeMap::new();
        let mut u = BTreeMap::new();
        for &(i, j) in self.scheme.transitions().keys() {
            let h = tau[i].compose(&self.element(i, j)?)?.compose(&tau[j].invert()?)?;
            transitions.insert((i, j), h.phi().clone());
            u.insert((i, j), h.u().clone());
        }
        Self::new(SchemeCocycle::new(cover, self.order(), transitions)?, u)
    }

    /// For n = 2: the data (D_ij, alpha_ij, beta_ij).
    pub fn h2_data(&self) -> Result<(PairFamily<VectorField>, UnitCocycle, PairFamily<LaurentElement>)> {
        if self.order() != 2 {
            return Err(Error::InvalidOrder(format!("H_2 data of an H_{} cocycle", self.order())));
        }
        let mut d = BTreeMap::new();
        let mut beta = BTreeMap::new();
        for (&(i, j), g) in self.scheme.transitions() {
            d.insert((i, j), g.image_field(1)?);
            beta.insert((i, j), self.u[&(i, j)].coeff(1).clone());
        }
        Ok((d, self.scheme.line_bundle()?, beta))
    }
}

/// A pair family as a map on increasing 1-simplices.
pub fn pair_raw<V: Clone>(f: &PairFamily<V>) -> BTreeMap<Vec<usize>, V> {
    f.iter().map(|(&(i, j), v)| (vec![i, j], v.clone())).collect()
}
