//! The rings R_n = A[t]/(t^n), matrices over them, and the canonical
//! extensions A_ext of invertible matrices.

mod matrix;
mod series;

pub use matrix::TruncMatrix;
pub use series::TruncSeries;

use crate::exactalg::{half, Chart, LMatrix, LaurentElement};
use crate::{Error, Result};

/// An automorphism of R_N inducing the identity modulo t, with
/// lambda(t) = mu t.
pub trait RingAutomorphism: Sized {
    /// N, the truncation order of the ring acted on.
    fn ring_order(&self) -> usize;
    fn chart(&self) -> Chart;
    fn apply_series(&self, f: &TruncSeries) -> Result<TruncSeries>;
    fn inverse(&self) -> Result<Self>;
    /// Constant coefficient of mu.
    fn mu0(&self) -> LaurentElement;
}

/// The automorphism fixing A and sending t to mu t.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffAutomorphism {
    mu: TruncSeries,
}

impl CoeffAutomorphism {
    /// `mu` has order N-1 for an automorphism of R_N; its constant term must
    /// be a unit monomial.
    pub fn new(mu: TruncSeries) -> Result<Self> {
        mu.coeff(0).invert().map_err(|_| Error::NotAUnit(mu.coeff(0).to_string()))?;
        Ok(CoeffAutomorphism { mu })
    }

    pub fn identity(chart: Chart, ring_order: usize) -> Self {
        CoeffAutomorphism { mu: TruncSeries::one(chart, ring_order.max(2) - 1) }
    }

    pub fn mu(&self) -> &TruncSeries {
        &self.mu
    }
}

/// sum_p f_p (mu t)^p, the action of t -> mu t on a series with fixed
/// coefficients. `mu` is padded to the order of `f`.
pub fn substitute_t(f: &TruncSeries, mu: &TruncSeries) -> Result<TruncSeries> {
    let n = f.order();
    let mt = mu.resize(n).mul_t();
    let mut acc = TruncSeries::zero(f.chart().union(&mu.chart())?, n);
    let mut power = TruncSeries::one(acc.chart(), n);
    for p in 0..n {
        if !f.coeff(p).is_zero() {
            acc = acc.try_add(&power.mul_laurent(f.coeff(p))?)?;
        }
        if p + 1 < n {
            power = power.try_mul(&mt)?;
        }
    }
    Ok(acc)
}

impl RingAutomorphism for CoeffAutomorphism {
    fn ring_order(&self) -> usize {
        self.mu.order() + 1
    }

    fn chart(&self) -> Chart {
        self.mu.chart()
    }

    fn apply_series(&self, f: &TruncSeries) -> Result<TruncSeries> {
        substitute_t(f, &self.mu)
    }

    fn inverse(&self) -> Result<Self> {
        // mu' = 1 / lambda'(mu) where lambda'(t) = mu' t; each pass fixes one
        // more coefficient.
        let k = self.mu.order();
        let mut inv = TruncSeries::constant(&self.mu.coeff(0).invert()?, k)?;
        for _ in 0..k {
            inv = substitute_t(&self.mu, &inv)?.inv()?;
        }
        Ok(CoeffAutomorphism { mu: inv })
    }

    fn mu0(&self) -> LaurentElement {
        self.mu.coeff(0).clone()
    }
}

fn apply_matrix<L: RingAutomorphism>(a: &TruncMatrix, lam: &L) -> Result<TruncMatrix> {
    a.map_entries(|s| lam.apply_series(s))
}

fn to_ring_order<L: RingAutomorphism>(a: &TruncMatrix, lam: &L) -> Result<TruncMatrix> {
    let big = lam.ring_order();
    match a.order() {
        k if k == big => Ok(a.clone()),
        k if k + 1 == big => Ok(a.pad(big)),
        k => Err(Error::OrderMismatch { left: k, right: big }),
    }
}

/// Inv_lambda(A) = lambda^{-1}(A^{-1}). A of order N-1 is padded to order N.
pub fn inv_lambda<L: RingAutomorphism>(a: &TruncMatrix, lam: &L) -> Result<TruncMatrix> {
    let a = to_ring_order(a, lam)?;
    apply_matrix(&a.inverse()?, &lam.inverse()?)
}

/// Gamma_lambda(A) = 1/2 (mu_0^n A_0 Inv_lambda(A)_n A_0 - A_n), n = N-1.
pub fn gamma_lambda<L: RingAutomorphism>(a: &TruncMatrix, lam: &L) -> Result<LMatrix> {
    let a = to_ring_order(a, lam)?;
    let n = lam.ring_order() - 1;
    let inv = inv_lambda(&a, lam)?;
    let mu0n = lam.mu0().pow(n as i64)?;
    let a0 = a.coeff(0);
    let first = a0.try_mul(inv.coeff(n))?.try_mul(a0)?.scale(&mu0n)?;
    let h = LaurentElement::constant(first.chart(), half());
    first.try_sub(a.coeff(n))?.scale(&h)
}

/// A_ext = A + Gamma_lambda(A) t^n, of order N = n+1.
pub fn ext_lambda<L: RingAutomorphism>(a: &TruncMatrix, lam: &L) -> Result<TruncMatrix> {
    let g = gamma_lambda(a, lam)?;
    let a = to_ring_order(a, lam)?;
    a.add_term(lam.ring_order() - 1, &g)
}
