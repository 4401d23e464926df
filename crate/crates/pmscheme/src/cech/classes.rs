use super::cochain::{FieldCochain, FormCochain, LineCochain};
use crate::exactalg::{Chart, LaurentElement, Rational};
use crate::{Error, Result};
use num::{One, Zero};
use std::collections::{BTreeMap, BTreeSet};

/// h^q(P^m, O(k)).
pub fn cohomology_dim(m: usize, k: i64, q: usize) -> Result<u64> {
    if m == 0 {
        return Err(Error::InvalidInput("m must be at least 1".into()));
    }
    if q > m {
        return Err(Error::InvalidInput(format!("q = {q} exceeds m = {m}")));
    }
    let binom = |n: i64, r: i64| -> u64 {
        if n < r || r < 0 {
            0
        } else {
            num::integer::binomial(n as u128, r as u128) as u64
        }
    };
    let m = m as i64;
    Ok(if q == 0 && k >= 0 {
        binom(k + m, m)
    } else if q as i64 == m && -k - m > 0 {
        binom(-k - 1, m)
    } else {
        0
    })
}

/// Solves A x = b over Q; None when inconsistent.
fn solve_linear(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>, ncols: usize) -> Option<Vec<Rational>> {
    let nrows = a.len();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(p) = (row..nrows).find(|&r| !a[r][col].is_zero()) else { continue };
        a.swap(row, p);
        b.swap(row, p);
        let inv = a[row][col].recip();
        for v in a[row][col..].iter_mut() {
            *v = &*v * &inv;
        }
        b[row] = &b[row] * &inv;
        let pivot_row = a[row].clone();
        for r in 0..nrows {
            if r != row && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for (x, y) in a[r][col..].iter_mut().zip(&pivot_row[col..]) {
                    *x -= &f * y;
                }
                let d = &f * &b[row];
                b[r] -= d;
            }
        }
        pivots.push(col);
        row += 1;
        if row == nrows {
            break;
        }
    }
    if b[row..].iter().any(|x| !x.is_zero()) {
        return None;
    }
    let mut x = vec![Rational::zero(); ncols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = b[r].clone();
    }
    Some(x)
}

fn negative_support(a: &[i64]) -> BTreeSet<usize> {
    a.iter().enumerate().filter(|(_, &e)| e < 0).map(|(i, _)| i).collect()
}

/// A (q-1)-cochain tau with delta tau = c, or None when the class of c is
/// nonzero. The equation splits over exponent vectors a: the coefficient of
/// x^a can only live on tuples containing every index where a is negative.
pub fn solve_coboundary(c: &LineCochain) -> Result<Option<LineCochain>> {
    let cover = c.cover();
    let q = c.degree();
    if q == 0 {
        return Ok(if c.is_zero() { Some(LineCochain::zero(cover, 0, c.twist())) } else { None });
    }
    let mut exps: BTreeSet<Vec<i64>> = BTreeSet::new();
    for v in c.values().values() {
        for (a, _) in v.terms() {
            exps.insert(a.clone());
        }
    }
    let faces = cover.simplices(q - 1);
    let tops = cover.simplices(q);
    let mut tau: BTreeMap<Vec<usize>, Vec<(Vec<i64>, Rational)>> = BTreeMap::new();
    for a in exps {
        let neg = negative_support(&a);
        let contains = |s: &[usize]| neg.iter().all(|i| s.contains(i));
        let unknowns: Vec<&Vec<usize>> = faces.iter().filter(|s| contains(s)).collect();
        let index: BTreeMap<&Vec<usize>, usize> = unknowns.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for t in tops.iter().filter(|t| contains(t)) {
            let mut row = vec![Rational::zero(); unknowns.len()];
            for k in 0..t.len() {
                let mut face = t.clone();
                face.remove(k);
                if let Some(&i) = index.get(&face) {
                    row[i] = if k % 2 == 0 { Rational::one() } else { -Rational::one() };
                }
            }
            rows.push(row);
            rhs.push(c.get(t).coefficient(&a));
        }
        let Some(x) = solve_linear(rows, rhs, unknowns.len()) else { return Ok(None) };
        for (s, v) in unknowns.iter().zip(x) {
            if !v.is_zero() {
                tau.entry((*s).clone()).or_default().push((a.clone(), v));
            }
        }
    }
    let mut out = LineCochain::zero(cover, q - 1, c.twist());
    for (s, terms) in tau {
        out.set(&s, LaurentElement::from_terms(cover.chart(&s), c.twist(), terms)?)?;
    }
    Ok(Some(out))
}

/// Whether the class of an O(k)-valued q-cocycle vanishes.
pub fn class_is_zero(c: &LineCochain) -> Result<bool> {
    c.ensure_cocycle()?;
    Ok(solve_coboundary(c)?.is_some())
}

/// Coordinates of the class of an m-cocycle in H^m(O(k)): the coefficients
/// of the all-negative monomials of the top value.
pub fn top_class_coordinates(c: &LineCochain) -> Result<BTreeMap<Vec<i64>, Rational>> {
    let m = c.cover().m();
    if c.degree() != m {
        return Err(Error::InvalidInput(format!("top classes need q = m = {m}")));
    }
    let top: Vec<usize> = (0..=m).collect();
    Ok(c.get(&top).terms().filter(|(a, _)| a.iter().all(|&e| e < 0)).map(|(a, v)| (a.clone(), v.clone())).collect())
}

/// Splits a T(k)-valued cochain into its m+1 component cochains in O(k+1).
fn field_components(c: &FieldCochain) -> Result<Vec<LineCochain>> {
    let m = c.cover().m();
    (0..=m)
        .map(|qi| {
            let mut out = LineCochain::zero(c.cover(), c.degree(), c.twist() + 1);
            for (s, v) in c.values() {
                out.set(s, v.component(qi).clone())?;
            }
            Ok(out)
        })
        .collect()
}

/// For a T(k)-valued q-cocycle with q < m: the O(k)-valued (q+1)-cocycle w
/// with delta(components) = w E. Its class is the image of the class of c
/// under the connecting map of the Euler sequence, which is injective here.
pub fn euler_connecting_class(c: &FieldCochain) -> Result<LineCochain> {
    let cover = c.cover();
    let comps = field_components(c)?;
    let deltas = comps.iter().map(|g| g.coboundary()).collect::<Result<Vec<_>>>()?;
    let mut w = LineCochain::zero(cover, c.degree() + 1, c.twist());
    for t in cover.simplices(c.degree() + 1) {
        let chart = cover.chart(&t);
        let p = chart.pivot();
        let xp = LaurentElement::var(chart, p);
        let val = deltas[p].get(&t).try_mul(&xp.invert()?)?;
        for (qi, d) in deltas.iter().enumerate() {
            if d.get(&t) != val.try_mul(&LaurentElement::var(chart, qi))? {
                return Err(Error::NotACocycle { witness: t });
            }
        }
        w.set(&t, val)?;
    }
    Ok(w)
}

/// Whether the class of a T(k)-valued q-cocycle vanishes (q >= 1).
pub fn field_class_is_zero(c: &FieldCochain) -> Result<bool> {
    c.ensure_cocycle()?;
    let m = c.cover().m();
    let q = c.degree();
    if q == 0 {
        return Ok(c.is_zero());
    }
    if q < m {
        return class_is_zero(&euler_connecting_class(c)?);
    }
    // q = m: H^m(T(k)) is the cokernel of H^m(O(k)) -> H^m(O(k+1))^{m+1}.
    // x^b maps to (x^{b + e_q})_q, where entries with b_q = -1 vanish; the
    // class is zero iff for each b the surviving coordinates agree.
    let comps = field_components(c)?;
    let coords = comps.iter().map(top_class_coordinates).collect::<Result<Vec<_>>>()?;
    let mut targets: BTreeSet<Vec<i64>> = BTreeSet::new();
    for (qi, cq) in coords.iter().enumerate() {
        for a in cq.keys() {
            let mut b = a.clone();
            b[qi] -= 1;
            targets.insert(b);
        }
    }
    for b in &targets {
        let vals: Vec<Rational> = (0..=m)
            .filter(|&qi| b[qi] <= -2)
            .map(|qi| {
                let mut a = b.clone();
                a[qi] += 1;
                coords[qi].get(&a).cloned().unwrap_or_else(Rational::zero)
            })
            .collect();
        if vals.windows(2).any(|w| w[0] != w[1]) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// For an Omega(k)-valued 1-cocycle on P^m, m >= 2: the global section
/// s = sum_q x_q b_q of O(k), where delta b_q is the q-th component.
/// Its image under the connecting map is the class of the cocycle.
pub fn form_class_section(c: &FormCochain) -> Result<LaurentElement> {
    c.ensure_cocycle()?;
    let cover = c.cover();
    let m = cover.m();
    if c.degree() != 1 || m < 2 {
        return Err(Error::InvalidInput("form classes are supported for 1-cocycles on P^m, m >= 2".into()));
    }
    let mut s: Option<LaurentElement> = None;
    let mut b = Vec::with_capacity(m + 1);
    for qi in 0..=m {
        let mut f = LineCochain::zero(cover, 1, c.twist() - 1);
        for (simplex, v) in c.values() {
            f.set(simplex, v.component(qi).clone())?;
        }
        let Some(bq) = solve_coboundary(&f)? else {
            return Err(Error::ArithmeticInconsistency("H^1(O(k-1)) should vanish for m >= 2".into()));
        };
        b.push(bq);
    }
    let top = Chart::from_mask(m, (1u32 << (m + 1)) - 1)?;
    for i in 0..=m {
        let chart = cover.chart(&[i]);
        let mut si = LaurentElement::zero(chart, c.twist());
        for (qi, bq) in b.iter().enumerate() {
            si = si.try_add(&LaurentElement::var(chart, qi).try_mul(&bq.get(&[i]))?)?;
        }
        let si = si.with_chart(top)?;
        match &s {
            None => s = Some(si),
            Some(prev) if *prev != si => return Err(Error::NotACocycle { witness: vec![i] }),
            _ => {}
        }
    }
    Ok(s.expect("m >= 2"))
}

/// Whether the class of an Omega(k)-valued 1-cocycle on P^m (m >= 2) vanishes.
/// H^1(Omega(k)) is zero unless k = 0, where it is spanned by the class with
/// section s = 1.
pub fn form_class_is_zero(c: &FormCochain) -> Result<bool> {
    let s = form_class_section(c)?;
    Ok(c.twist() != 0 || s.is_zero())
}

/// The coordinate of an Omega-valued 1-cocycle in H^1(Omega) = Q: the
/// constant s with the cocycle cohomologous to s times the class of
/// s = 1.
pub fn form_class_coordinate(c: &FormCochain) -> Result<Rational> {
    if c.twist() != 0 {
        return Err(Error::InvalidInput("coordinates are defined for untwisted forms".into()));
    }
    let s = form_class_section(c)?;
    s.as_constant().ok_or_else(|| Error::ArithmeticInconsistency(format!("section {s} is not constant")))
}
