use super::scheme::{homogenize, standard_degree, twisted_witness, PairCocycle, PairFamily, SchemeCocycle, Twistable};
use crate::autgroup::{psi_canonical, triple_defect, GnElement, Phi3};
use crate::cech::{class_is_zero, field_class_is_zero, Cochain, StandardCover, UnitCocycle};
use crate::exactalg::{LaurentElement, VectorField};
use crate::truncated::{ext_lambda, inv_lambda, TruncMatrix};
use crate::{Error, Result};
use std::collections::BTreeMap;

/// A degree-2 obstruction cocycle, kept as the family rho_ijk trivialized on
/// U_i together with the cocycle of its coefficient line bundle.
#[derive(Clone, Debug)]
pub struct ObstructionClass<V: Twistable> {
    raw: BTreeMap<Vec<usize>, V>,
    weight: UnitCocycle,
    provenance: String,
}

impl<V: Twistable> ObstructionClass<V> {
    /// Checks the twisted 2-cocycle relation before accepting the family.
    pub fn new(raw: BTreeMap<Vec<usize>, V>, weight: UnitCocycle, provenance: impl Into<String>) -> Result<Self> {
        let raw: BTreeMap<_, _> = raw.into_iter().filter(|(_, v)| !v.vanishes()).collect();
        if let Some(w) = twisted_witness(weight.cover(), 2, &raw, &weight)? {
            return Err(Error::NotACocycle { witness: w });
        }
        Ok(ObstructionClass { raw, weight, provenance: provenance.into() })
    }

    pub fn cover(&self) -> StandardCover {
        self.weight.cover()
    }

    /// rho_ijk on U_ijk in the trivialization of U_i.
    pub fn raw(&self) -> &BTreeMap<Vec<usize>, V> {
        &self.raw
    }

    pub fn get(&self, s: &[usize]) -> V {
        self.raw.get(s).cloned().unwrap_or_else(|| V::zero_on(self.cover().chart(s), 0))
    }

    pub fn weight(&self) -> &UnitCocycle {
        &self.weight
    }

    /// How the family was built (which lifts were chosen).
    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn is_zero_cochain(&self) -> bool {
        self.raw.is_empty()
    }

    /// The homogeneous cochain, when the coefficient bundle is a standard O(w).
    pub fn cochain(&self) -> Result<Cochain<V>> {
        let w = standard_degree(&self.weight)
            .ok_or_else(|| Error::InvalidInput("coefficient cocycle is not a standard O(k) cocycle".into()))?;
        homogenize(self.cover(), 2, w, &self.raw)
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self> {
        if self.weight != o.weight {
            return Err(Error::InvalidInput("classes with different coefficients".into()));
        }
        let mut raw = self.raw.clone();
        for (s, v) in &o.raw {
            let d = self.get(s).plus(&v.negated())?;
            raw.insert(s.clone(), d);
        }
        Self::new(raw, self.weight.clone(), format!("({}) - ({})", self.provenance, o.provenance))
    }
}

impl ObstructionClass<LaurentElement> {
    pub fn is_zero(&self) -> Result<bool> {
        class_is_zero(&self.cochain()?)
    }
}

impl ObstructionClass<VectorField> {
    pub fn is_zero(&self) -> Result<bool> {
        field_class_is_zero(&self.cochain()?)
    }
}

/// The T_X (x) L^2-valued cocycle obstructing the extension of (X_2, L) to
/// multiplicity 3 with ideal sheaf L:
/// rho_ijk = 1/2 (beta_ij D_jk + (D_jk(alpha_ij) + (alpha_ij/alpha_jk) D_jk(alpha_jk)
///           - (alpha_ij/alpha_jk) beta_jk) D_ij + alpha_ij [D_ij, D_jk]).
pub fn delta2_obstruction(pair: &PairCocycle) -> Result<ObstructionClass<VectorField>> {
    let (d, alpha, beta) = pair.h2_data()?;
    let cover = alpha.cover();
    let mut raw = BTreeMap::new();
    for t in cover.simplices(2) {
        let (i, j, k) = (t[0], t[1], t[2]);
        let rho = triple_defect(
            (&d[&(i, j)], &alpha.get(i, j)?, &beta[&(i, j)]),
            (&d[&(j, k)], &alpha.get(j, k)?, &beta[&(j, k)]),
        )?;
        raw.insert(t.clone(), rho.with_chart(cover.chart(&t))?);
    }
    ObstructionClass::new(raw, alpha.power(2)?, "closed form")
}

/// The same family computed in G_3: with Psi_ij = Psi(D_ij, alpha_ij + beta_ij t)
/// and Psi_ki = Psi_ik^{-1}, the product Psi_ij Psi_jk Psi_ki is Phi_{0,1,rho_ijk}.
pub fn psi_triple_product(pair: &PairCocycle) -> Result<ObstructionClass<VectorField>> {
    let (d, alpha, beta) = pair.h2_data()?;
    let cover = alpha.cover();
    let psi = |i: usize, j: usize| -> Result<GnElement> {
        psi_canonical(&d[&(i, j)], &alpha.get(i, j)?, &beta[&(i, j)])?.to_gn()
    };
    let mut raw = BTreeMap::new();
    for t in cover.simplices(2) {
        let (i, j, k) = (t[0], t[1], t[2]);
        let prod = psi(i, j)?.compose(&psi(j, k)?)?.compose(&psi(i, k)?.invert()?)?;
        let p = Phi3::from_gn(&prod)?;
        if !p.d.is_zero() || !p.mu0.as_constant().is_some_and(|c| c == num::One::one()) || !p.mu1.is_zero() {
            return Err(Error::ArithmeticInconsistency(format!("triple product on {t:?} is not in the kernel of G_3 -> H_2")));
        }
        raw.insert(t.clone(), p.d1.with_chart(cover.chart(&t))?);
    }
    ObstructionClass::new(raw, alpha.power(2)?, "Psi triple product")
}

/// How a line-bundle cocycle on X_n is lifted to order n+1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LiftStrategy {
    /// theta_ij -> (theta_ij)_{ext, delta*_ij} in both directions.
    Canonical,
    /// Zero top coefficient for i < j, and theta_ji = Inv_{delta*_ij}(theta_ij).
    NaivePad,
}

/// A line bundle on X_n: theta_ij (r = 1, order n) on U_ij in the
/// trivialization of U_i, with theta_ik = theta_ij delta*_ij(theta_jk).
#[derive(Clone, Debug)]
pub struct LineBundleCocycle {
    cover: StandardCover,
    n: usize,
    theta: PairFamily<TruncMatrix>,
}

/// delta*(f) modulo t^n, where delta* has order >= n.
fn apply_mod(g: &GnElement, a: &TruncMatrix, n: usize) -> Result<TruncMatrix> {
    if n == 1 {
        return Ok(a.clone());
    }
    let g = g.reduce(n)?;
    a.map_entries(|s| g.apply(s))
}

impl LineBundleCocycle {
    pub fn new(cover: StandardCover, n: usize, theta: PairFamily<TruncMatrix>) -> Result<Self> {
        let m = cover.m();
        for i in 0..=m {
            for j in i + 1..=m {
                let a = theta.get(&(i, j)).ok_or_else(|| Error::InvalidInput(format!("missing theta_{i}{j}")))?;
                if a.size() != 1 {
                    return Err(Error::InvalidInput("line bundles have rank 1".into()));
                }
                if a.order() != n {
                    return Err(Error::OrderMismatch { left: a.order(), right: n });
                }
                let a0 = a.entry(0, 0).coeff(0).clone();
                if !a0.is_unit() {
                    return Err(Error::NotAUnit(a0.to_string()));
                }
            }
        }
        Ok(LineBundleCocycle { cover, n, theta })
    }

    /// The pull-back of a line bundle on X: theta_ij = alpha_ij, constant in t.
    pub fn pullback(alpha: &UnitCocycle, n: usize) -> Result<Self> {
        let theta = alpha
            .values()
            .iter()
            .map(|(&p, a)| Ok((p, TruncMatrix::scalar(&crate::truncated::TruncSeries::constant(a, n)?))))
            .collect::<Result<_>>()?;
        Self::new(alpha.cover(), n, theta)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn cover(&self) -> StandardCover {
        self.cover
    }

    pub fn theta(&self) -> &PairFamily<TruncMatrix> {
        &self.theta
    }

    /// First triple where theta_ij delta*_ij(theta_jk) != theta_ik on X_n.
    pub fn cocycle_witness(&self, s: &SchemeCocycle) -> Result<Option<Vec<usize>>> {
        for t in self.cover.simplices(2) {
            let (i, j, k) = (t[0], t[1], t[2]);
            let moved = apply_mod(&s.get(i, j)?, &self.theta[&(j, k)], self.n)?;
            let lhs = self.theta[&(i, j)].try_mul(&moved)?;
            let chart = lhs.chart();
            if lhs != self.theta[&(i, k)].with_chart(chart)? {
                return Ok(Some(t));
            }
        }
        Ok(None)
    }
}

/// Lifts of theta to order n+1 on every ordered pair, satisfying
/// lift_ji = Inv_{delta*_ij}(lift_ij).
pub fn symmetric_lifts(
    theta: &LineBundleCocycle,
    s: &SchemeCocycle,
    strategy: LiftStrategy,
) -> Result<BTreeMap<(usize, usize), TruncMatrix>> {
    let n = theta.order();
    let mut out = BTreeMap::new();
    for (&(i, j), a) in theta.theta() {
        let g = s.get(i, j)?;
        match strategy {
            LiftStrategy::Canonical => {
                out.insert((i, j), ext_lambda(a, &g)?);
                let back = inv_lambda(a, &g)?.truncate(n)?;
                out.insert((j, i), ext_lambda(&back, &g.invert()?)?);
            }
            LiftStrategy::NaivePad => {
                let lift = a.pad(n + 1);
                out.insert((j, i), inv_lambda(&lift, &g)?);
                out.insert((i, j), lift);
            }
        }
    }
    Ok(out)
}

/// The obstruction to extending a line bundle on X_n to X_{n+1}: with lifts
/// as in `symmetric_lifts`, the product of the lifts of theta_ij, theta_jk,
/// theta_ki read on U_i is 1 + t^n rho_ijk. Values in L^n.
pub fn line_bundle_extension_obstruction(
    theta: &LineBundleCocycle,
    s: &SchemeCocycle,
    strategy: LiftStrategy,
) -> Result<ObstructionClass<LaurentElement>> {
    let n = theta.order();
    if s.order() != n + 1 {
        return Err(Error::OrderMismatch { left: s.order(), right: n + 1 });
    }
    if let Some(w) = s.cocycle_witness()? {
        return Err(Error::NotACocycle { witness: w });
    }
    if let Some(w) = theta.cocycle_witness(s)? {
        return Err(Error::NotACocycle { witness: w });
    }
    let lifts = symmetric_lifts(theta, s, strategy)?;
    let cover = theta.cover();
    let mut raw = BTreeMap::new();
    for t in cover.simplices(2) {
        let (i, j, k) = (t[0], t[1], t[2]);
        let (gij, gik) = (s.get(i, j)?, s.get(i, k)?);
        let jk = lifts[&(j, k)].map_entries(|f| gij.apply(f))?;
        let ki = lifts[&(k, i)].map_entries(|f| gik.apply(f))?;
        let prod = lifts[&(i, j)].try_mul(&jk)?.try_mul(&ki)?;
        let e = prod.entry(0, 0);
        for p in 0..n {
            let expect = if p == 0 { LaurentElement::one(e.chart()) } else { LaurentElement::zero(e.chart(), 0) };
            if *e.coeff(p) != expect {
                return Err(Error::ArithmeticInconsistency(format!("lift product on {t:?} is not 1 mod t^{n}")));
            }
        }
        raw.insert(t.clone(), e.coeff(n).with_chart(cover.chart(&t))?);
    }
    let label = match strategy {
        LiftStrategy::Canonical => "canonical extensions",
        LiftStrategy::NaivePad => "padded lifts",
    };
    ObstructionClass::new(raw, s.line_bundle()?.power(n as i64)?, label)
}
