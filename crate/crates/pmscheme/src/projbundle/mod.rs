//! Dimension counts for primitive multiple schemes on a ruled surface P(E)
//! over a curve C of genus g, with L = pi^*(D) (x) O(-k), E of rank 2.
//!
//! Everything is integer or rational arithmetic: Riemann-Roch on C, ranks and
//! degrees of symmetric powers, and the vanishing thresholds for H^2.

use crate::exactalg::{q, qr, Rational};
use crate::{Error, Result};
use num::ToPrimitive;
use serde::{Deserialize, Serialize};

/// Harder-Narasimhan type of E.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BundleCase {
    /// (i) semistable of degree 0.
    SemistableDeg0,
    /// (ii) semistable of degree -1.
    SemistableDegMinus1,
    /// (iii) not semistable, destabilized by L_1 of degree eps1 > deg E.
    Unstable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BundleParams {
    pub g: i64,
    pub deg_e: i64,
    pub case: BundleCase,
    /// deg L_1; only for the unstable case.
    pub eps1: Option<i64>,
    pub k: i64,
    /// deg D
    pub d: i64,
    pub n: i64,
}

impl BundleParams {
    pub fn new(g: i64, deg_e: i64, case: BundleCase, eps1: Option<i64>, k: i64, d: i64, n: i64) -> Result<Self> {
        let p = BundleParams { g, deg_e, case, eps1, k, d, n };
        p.validate()?;
        Ok(p)
    }

    /// A semistable E of degree 0 or -1.
    pub fn semistable(g: i64, deg_e: i64, k: i64, d: i64, n: i64) -> Result<Self> {
        let case = match deg_e {
            0 => BundleCase::SemistableDeg0,
            -1 => BundleCase::SemistableDegMinus1,
            _ => return Err(Error::InvalidInput(format!("deg E = {deg_e}: normalize to 0 or -1"))),
        };
        Self::new(g, deg_e, case, None, k, d, n)
    }

    pub fn validate(&self) -> Result<()> {
        if self.g < 0 {
            return Err(Error::InvalidInput("genus must be >= 0".into()));
        }
        if self.k < 1 || self.n < 1 {
            return Err(Error::InvalidInput("k and n must be positive".into()));
        }
        match (self.case, self.deg_e, self.eps1) {
            (BundleCase::SemistableDeg0, 0, None) | (BundleCase::SemistableDegMinus1, -1, None) => Ok(()),
            (BundleCase::Unstable, 0 | -1, Some(e1)) if e1 > self.deg_e => Ok(()),
            (BundleCase::Unstable, _, _) => {
                Err(Error::InvalidInput("unstable case needs deg E in {0, -1} and eps1 > deg E".into()))
            }
            _ => Err(Error::InvalidInput(format!("case {:?} does not match deg E = {}", self.case, self.deg_e))),
        }
    }

    fn with_n(&self, n: i64) -> Self {
        BundleParams { n, ..self.clone() }
    }
}

/// Rank and degree of a vector bundle on C.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChernData {
    pub rank: i64,
    pub degree: i64,
}

impl ChernData {
    pub fn new(rank: i64, degree: i64) -> Result<Self> {
        if rank < 1 {
            return Err(Error::InvalidInput(format!("rank {rank} must be positive")));
        }
        Ok(ChernData { rank, degree })
    }

    pub fn line(degree: i64) -> Self {
        ChernData { rank: 1, degree }
    }
}

/// Riemann-Roch on a curve of genus g.
pub fn chi(c: ChernData, g: i64) -> i64 {
    c.degree + c.rank * (1 - g)
}

pub fn tensor(a: ChernData, b: ChernData) -> ChernData {
    ChernData { rank: a.rank * b.rank, degree: a.degree * b.rank + b.degree * a.rank }
}

/// S^m of a rank-2 bundle: rank m+1, degree m(m+1)/2 deg E.
pub fn sym(m: i64, e: ChernData) -> Result<ChernData> {
    if e.rank != 2 {
        return Err(Error::InvalidInput("symmetric powers are implemented for rank 2".into()));
    }
    if m < 0 {
        return Err(Error::InvalidInput(format!("S^{m} is undefined")));
    }
    Ok(ChernData { rank: m + 1, degree: m * (m + 1) / 2 * e.degree })
}

/// E and D^n (x) det E.
fn pieces(p: &BundleParams) -> Result<(ChernData, ChernData)> {
    let e = ChernData::new(2, p.deg_e)?;
    Ok((e, tensor(ChernData::line(p.n * p.d), ChernData::line(p.deg_e))))
}

/// h^1(L^n) = chi(D^n (x) S^{kn-2}E (x) det E), computed by Riemann-Roch.
pub fn h1_l_chi(p: &BundleParams) -> Result<i64> {
    let (e, tw) = pieces(p)?;
    Ok(chi(tensor(sym(p.k * p.n - 2, e)?, tw), p.g))
}

/// h^1(T (x) L^n) = chi(D^n E S^{kn-3}E det E) - chi(D^n S^{kn-2}E det E) + chi(D^n w_C^* S^{kn-2}E det E).
pub fn h1_tl_chi(p: &BundleParams) -> Result<i64> {
    let (e, tw) = pieces(p)?;
    let kn = p.k * p.n;
    let a = tensor(tensor(e, sym(kn - 3, e)?), tw);
    let b = tensor(sym(kn - 2, e)?, tw);
    let c = tensor(b, ChernData::line(2 - 2 * p.g));
    Ok(chi(a, p.g) - chi(b, p.g) + chi(c, p.g))
}

/// h^1((Omega_{X_2|P(E)})^* (x) L^n) = h^1(T (x) L^n) + h^1(L^{n-1}), n >= 2.
pub fn family_dim_chi(p: &BundleParams) -> Result<i64> {
    if p.n < 2 {
        return Err(Error::InvalidInput("the family dimension needs n >= 2".into()));
    }
    Ok(h1_tl_chi(p)? + h1_l_chi(&p.with_n(p.n - 1))?)
}

fn integral(x: Rational, what: &str) -> Result<i64> {
    if !x.is_integer() {
        return Err(Error::ArithmeticInconsistency(format!("{what} = {x} is not an integer")));
    }
    x.to_integer().to_i64().ok_or_else(|| Error::ArithmeticInconsistency(format!("{what} overflows")))
}

/// n(kn-2)(2d + k deg E) + 2(1-g)(2kn-3).
pub fn h1_tl_closed(p: &BundleParams) -> Result<i64> {
    let (g, e, k, d, n) = (p.g, p.deg_e, p.k, p.d, p.n);
    Ok(n * (k * n - 2) * (2 * d + k * e) + 2 * (1 - g) * (2 * k * n - 3))
}

/// (kn-1)((kn/2) deg E + nd + 1 - g).
pub fn h1_l_closed(p: &BundleParams) -> Result<i64> {
    let (g, e, k, d, n) = (p.g, p.deg_e, p.k, p.d, p.n);
    let inner = qr(k * n, 2) * q(e) + q(n * d + 1 - g);
    integral(q(k * n - 1) * inner, "h1(L^n)")
}

/// (3kn^2-5n-2kn+k+1)((k/2) deg E + d) + (1-g)(5kn-7-k).
pub fn family_dim_closed(p: &BundleParams) -> Result<i64> {
    if p.n < 2 {
        return Err(Error::InvalidInput("the family dimension needs n >= 2".into()));
    }
    let (g, e, k, d, n) = (p.g, p.deg_e, p.k, p.d, p.n);
    let a = 3 * k * n * n - 5 * n - 2 * k * n + k + 1;
    let x = q(a) * (qr(k, 2) * q(e) + q(d)) + q((1 - g) * (5 * k * n - 7 - k));
    integral(x, "family dimension")
}

/// The P^1 x P^1 case (g = 0, E trivial): d(3kn^2-5n-2kn+k+1)+5kn-7-k.
pub fn family_dim_p1xp1(k: i64, d: i64, n: i64) -> i64 {
    d * (3 * k * n * n - 5 * n - 2 * k * n + k + 1) + 5 * k * n - 7 - k
}

/// A dimension together with whether the H^2 vanishing it relies on is known.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dim {
    pub value: i64,
    pub vanishing_holds: bool,
}

fn checked(p: &BundleParams, chi_val: i64, closed: i64, what: &str) -> Result<Dim> {
    if chi_val != closed {
        return Err(Error::ArithmeticInconsistency(format!("{what}: Riemann-Roch gives {chi_val}, closed form {closed}")));
    }
    let vanishing_holds = vanishing(p, Lemma::Lem10)? && vanishing(p, Lemma::Lem12)?;
    Ok(Dim { value: closed, vanishing_holds })
}

pub fn h1_tl(p: &BundleParams) -> Result<Dim> {
    p.validate()?;
    checked(p, h1_tl_chi(p)?, h1_tl_closed(p)?, "h1(T L^n)")
}

pub fn h1_l(p: &BundleParams) -> Result<Dim> {
    p.validate()?;
    checked(p, h1_l_chi(p)?, h1_l_closed(p)?, "h1(L^n)")
}

pub fn family_dim(p: &BundleParams) -> Result<Dim> {
    p.validate()?;
    checked(p, family_dim_chi(p)?, family_dim_closed(p)?, "family dimension")
}

/// gamma_0 with h^0(S^{kn+p}E (x) F (x) Gamma^n) = 0 when deg Gamma < gamma_0.
/// The variant with an extra factor E is gamma0 at p+1.
pub fn gamma0(case: BundleCase, k: i64, n: i64, p: i64, deg_f: i64, eps1: Option<i64>) -> Result<Rational> {
    if n < 1 {
        return Err(Error::InvalidInput("n must be positive".into()));
    }
    let f = qr(deg_f, n);
    Ok(match case {
        BundleCase::SemistableDeg0 => -f,
        BundleCase::SemistableDegMinus1 => qr(k, 2) - f + qr(p, 2 * n),
        BundleCase::Unstable => {
            let e1 = eps1.ok_or_else(|| Error::InvalidInput("the unstable case needs eps1".into()))?;
            -f - qr(p * e1, n) - q(k * e1)
        }
    })
}

/// H^2 source being killed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Obstruction {
    /// H^2(L^n), and H^2(pi^*E (x) O(1) (x) L^n) under the same bound.
    Line,
    /// H^2(pi^*(w_C^*) (x) L^n).
    Canonical,
}

/// The degree bound delta_0 with vanishing for deg D > delta_0. Here
/// Gamma = D^* (x) det(E)^{-k} and F = det(E) (x) w_C (resp. w_C^2).
pub fn delta0(p: &BundleParams, n: i64, which: Obstruction) -> Result<Rational> {
    let canon = match which {
        Obstruction::Line => 2 * p.g - 2,
        Obstruction::Canonical => 4 * p.g - 4,
    };
    let g0 = gamma0(p.case, p.k, n, -2, p.deg_e + canon, p.eps1)?;
    Ok(q(-p.k * p.deg_e) - g0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Lemma {
    /// H^2(L^n) = 0 for n >= 1 and H^2(T (x) L^n) = 0 for n >= 2.
    Lem10,
    /// H^2(T (x) L) = 0.
    Lem12,
}

/// The case lists of the two vanishing lemmas, copied as stated (strict and
/// non-strict inequalities included).
pub fn vanishing(p: &BundleParams, which: Lemma) -> Result<bool> {
    p.validate()?;
    let d = q(p.d);
    let (g, k, e) = (p.g, p.k, p.deg_e);
    let half_k = qr(k, 2);
    let spread = |e1: i64| q(k * (e1 - e));
    Ok(match (which, p.case) {
        (Lemma::Lem10, BundleCase::SemistableDeg0) => match g {
            0 => d >= q(0),
            1 => d > q(0),
            _ => d > q(2 * g - 2),
        },
        (Lemma::Lem10, BundleCase::SemistableDegMinus1) => match g {
            0 => d >= half_k,
            1 => d > half_k,
            _ => d > half_k + q(2 * g - 2),
        },
        (Lemma::Lem10, BundleCase::Unstable) => {
            let e1 = p.eps1.expect("validated");
            match g {
                0 | 1 => d >= spread(e1),
                _ => d >= spread(e1) + q(2 * g - 2),
            }
        }
        (Lemma::Lem12, BundleCase::SemistableDeg0) => match g {
            0 => d > q(-2),
            1 => d > q(0),
            _ => d > q(4 * g - 4),
        },
        (Lemma::Lem12, BundleCase::SemistableDegMinus1) => match g {
            0 => d > half_k - q(2),
            1 => d > half_k,
            _ => d > half_k + q(4 * g - 4),
        },
        (Lemma::Lem12, BundleCase::Unstable) => {
            let e1 = p.eps1.expect("validated");
            let base = spread(e1) + q(e - 2 * e1);
            match g {
                0 => d > base - q(2),
                1 => d > base,
                _ => d > base + q(4 * g - 4),
            }
        }
    })
}

/// One row of the dimension table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub g: i64,
    pub deg_e: i64,
    pub k: i64,
    pub d: i64,
    pub n: i64,
    pub h1_tl: i64,
    pub h1_l: i64,
    /// Defined for n >= 2.
    pub family_dim: Option<i64>,
    pub lem10: bool,
    pub lem12: bool,
}

/// Bounds of a parameter sweep (inclusive).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Grid {
    pub g: (i64, i64),
    pub deg_e: Vec<i64>,
    pub k: (i64, i64),
    pub d: (i64, i64),
    pub n: (i64, i64),
}

impl Default for Grid {
    fn default() -> Self {
        Grid { g: (0, 3), deg_e: vec![-1, 0], k: (3, 6), d: (0, 10), n: (1, 6) }
    }
}

/// Semistable rows over a grid; each value is checked against Riemann-Roch.
pub fn table(grid: &Grid) -> Result<Vec<TableRow>> {
    let mut rows = Vec::new();
    for g in grid.g.0..=grid.g.1 {
        for &deg_e in &grid.deg_e {
            for k in grid.k.0..=grid.k.1 {
                for d in grid.d.0..=grid.d.1 {
                    for n in grid.n.0..=grid.n.1 {
                        let p = BundleParams::semistable(g, deg_e, k, d, n)?;
                        rows.push(TableRow {
                            g,
                            deg_e,
                            k,
                            d,
                            n,
                            h1_tl: h1_tl(&p)?.value,
                            h1_l: h1_l(&p)?.value,
                            family_dim: if n >= 2 { Some(family_dim(&p)?.value) } else { None },
                            lem10: vanishing(&p, Lemma::Lem10)?,
                            lem12: vanishing(&p, Lemma::Lem12)?,
                        });
                    }
                }
            }
        }
    }
    Ok(rows)
}
