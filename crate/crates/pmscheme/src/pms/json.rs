use super::obstruction::{line_bundle_extension_obstruction, LiftStrategy, LineBundleCocycle, ObstructionClass};
use super::scheme::{validate_scheme, SchemeCocycle};
use crate::autgroup::GnJson;
use crate::cech::{parse_simplex_key, simplex_key, top_class_coordinates, CochainJson, StandardCover, UnitCocycle};
use crate::exactalg::{rational_text, Chart, LaurentElement};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Scheme description: {m, n, L_cocycle: {"i,j": text}, transitions: {"i,j": G_n element}}.
/// `line_bundle` is the p of the pulled-back O(p) whose extension is tested.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchemeJson {
    pub m: usize,
    pub n: usize,
    #[serde(rename = "L_cocycle")]
    pub l_cocycle: BTreeMap<String, String>,
    pub transitions: BTreeMap<String, GnJson>,
    #[serde(default = "one")]
    pub line_bundle: i64,
}

fn one() -> i64 {
    1
}

fn pair_key(key: &str) -> Result<(usize, usize)> {
    match parse_simplex_key(key)?.as_slice() {
        &[i, j] if i < j => Ok((i, j)),
        _ => Err(Error::Parse(format!("expected an increasing pair, found '{key}'"))),
    }
}

impl SchemeJson {
    pub fn from_scheme(s: &SchemeCocycle, line_bundle: i64) -> Result<Self> {
        let l = s.line_bundle()?;
        Ok(SchemeJson {
            m: s.cover().m(),
            n: s.order(),
            l_cocycle: l.values().iter().map(|(&(i, j), a)| (simplex_key(&[i, j]), a.to_string())).collect(),
            transitions: s.transitions().iter().map(|(&(i, j), g)| (simplex_key(&[i, j]), GnJson::from_element(g))).collect(),
            line_bundle,
        })
    }

    /// Parses the transitions and checks the declared L cocycle against
    /// their constant t-coefficients.
    pub fn to_scheme(&self) -> Result<SchemeCocycle> {
        let cover = StandardCover::new(self.m)?;
        let mut transitions = BTreeMap::new();
        for (key, g) in &self.transitions {
            let (i, j) = pair_key(key)?;
            let e = g.to_element(self.m)?;
            if e.order() != self.n {
                return Err(Error::OrderMismatch { left: e.order(), right: self.n });
            }
            transitions.insert((i, j), e.restrict(cover.chart(&[i, j]))?);
        }
        let s = SchemeCocycle::new(cover, self.n, transitions)?;
        let declared = self.declared_l(cover)?;
        if declared != s.line_bundle()? {
            return Err(Error::InvalidInput("L_cocycle does not match the t-coefficients of the transitions".into()));
        }
        Ok(s)
    }

    fn declared_l(&self, cover: StandardCover) -> Result<UnitCocycle> {
        let mut values = BTreeMap::new();
        for (key, text) in &self.l_cocycle {
            let (i, j) = pair_key(key)?;
            values.insert((i, j), LaurentElement::parse(text, Chart::new(self.m, &[i, j])?, 0)?);
        }
        UnitCocycle::new(cover, values)
    }
}

/// Evidence attached to an obstruction report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    /// Nonzero coordinates of a top class: monomial exponents -> coefficient.
    TopClass(BTreeMap<String, String>),
    /// A triple where the input fails the cocycle relation.
    FailingTriple(Vec<usize>),
    None,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionReport {
    pub class: Option<CochainJson>,
    pub is_zero: bool,
    pub witness: Witness,
}

impl ObstructionReport {
    pub fn from_class(c: &ObstructionClass<LaurentElement>) -> Result<Self> {
        let cochain = c.cochain()?;
        let is_zero = c.is_zero()?;
        let witness = if cochain.cover().m() == 2 && !is_zero {
            let coords = top_class_coordinates(&cochain)?;
            Witness::TopClass(
                coords
                    .iter()
                    .map(|(e, v)| (e.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","), rational_text(v)))
                    .collect(),
            )
        } else {
            Witness::None
        };
        Ok(ObstructionReport { class: Some(CochainJson::from_cochain(&cochain)), is_zero, witness })
    }
}

/// The obstruction to extending the pull-back of O(line_bundle) from X_{n-1}
/// to the scheme X_n described by the JSON. A failing cocycle relation is
/// reported with its triple instead of an error.
pub fn obstruction_report(desc: &SchemeJson) -> Result<ObstructionReport> {
    let cover = StandardCover::new(desc.m)?;
    let mut transitions = BTreeMap::new();
    for (key, g) in &desc.transitions {
        let (i, j) = pair_key(key)?;
        transitions.insert((i, j), g.to_element(desc.m)?.restrict(cover.chart(&[i, j]))?);
    }
    let raw = SchemeCocycle::new(cover, desc.n, transitions)?;
    let report = validate_scheme(&raw)?;
    if let Some(w) = report.witness {
        return Ok(ObstructionReport { class: None, is_zero: false, witness: Witness::FailingTriple(w) });
    }
    let s = desc.to_scheme()?;
    let theta = LineBundleCocycle::pullback(&UnitCocycle::line_bundle(cover, desc.line_bundle), desc.n - 1)?;
    let class = line_bundle_extension_obstruction(&theta, &s, LiftStrategy::Canonical)?;
    ObstructionReport::from_class(&class)
}
