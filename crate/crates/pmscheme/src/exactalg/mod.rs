//! Exact rationals and the homogeneous Laurent model of functions, sections,
//! 1-forms and vector fields on the standard charts of projective space.

mod chart;
mod forms;
mod laurent;
mod matrix;

pub use chart::Chart;
pub use forms::{differential, OneForm, VectorField};
pub use laurent::LaurentElement;
pub use matrix::LMatrix;

use num::{BigInt, BigRational, One, Zero};

/// Coefficient field. `BigRational` is always kept reduced with a positive denominator.
pub type Rational = BigRational;

pub fn q(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn qr(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn half() -> Rational {
    qr(1, 2)
}

pub(crate) fn is_zero(c: &Rational) -> bool {
    c.is_zero()
}

/// Text form of a rational: `p` or `p/q`.
pub fn rational_text(c: &Rational) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub fn parse_rational(s: &str) -> crate::Result<Rational> {
    let s = s.trim();
    let bad = || crate::Error::Parse(format!("bad rational '{s}'"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}
