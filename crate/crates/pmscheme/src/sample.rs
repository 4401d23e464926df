//! Seeded random generators for the randomized checks.

use crate::autgroup::{DerivationRn, GnElement, HnElement};
use crate::cech::{StandardCover, UnitCocycle};
use crate::exactalg::{Chart, LMatrix, LaurentElement, Rational, VectorField};
use crate::pms::PairCocycle;
use crate::truncated::{CoeffAutomorphism, TruncMatrix, TruncSeries};
use crate::Result;
use rand::{Rng, SeedableRng};
use std::collections::BTreeMap;
use rand_chacha::ChaCha8Rng;

pub struct Sampler {
    rng: ChaCha8Rng,
    /// Upper bound on the number of terms of a random function.
    pub max_terms: usize,
    /// Upper bound on the number of ratio factors in a random monomial.
    pub max_factors: usize,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed), max_terms: 3, max_factors: 2 }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn small_int(&mut self, bound: i64) -> i64 {
        self.rng.gen_range(-bound..=bound)
    }

    pub fn nonzero_int(&mut self, bound: i64) -> i64 {
        loop {
            let k = self.small_int(bound);
            if k != 0 {
                return k;
            }
        }
    }

    pub fn rational(&mut self) -> Rational {
        Rational::new(self.small_int(3).into(), self.rng.gen_range(1..=2i64).into())
    }

    pub fn nonzero_rational(&mut self) -> Rational {
        Rational::new(self.nonzero_int(3).into(), self.rng.gen_range(1..=2i64).into())
    }

    /// A degree-0 monomial x_a / x_b ... with denominators in the chart.
    pub fn monomial_exponents(&mut self, chart: Chart) -> Vec<i64> {
        let allowed = chart.indices();
        let mut e = vec![0i64; chart.nvars()];
        let k = self.rng.gen_range(0..=self.max_factors);
        for _ in 0..k {
            let a = self.rng.gen_range(0..chart.nvars());
            let b = allowed[self.rng.gen_range(0..allowed.len())];
            e[a] += 1;
            e[b] -= 1;
        }
        e
    }

    pub fn function(&mut self, chart: Chart) -> LaurentElement {
        let k = self.rng.gen_range(0..=self.max_terms);
        let mut f = LaurentElement::zero(chart, 0);
        for _ in 0..k {
            let e = self.monomial_exponents(chart);
            let c = self.nonzero_rational();
            f = f.try_add(&LaurentElement::monomial(chart, &e, c).expect("chart exponents")).expect("same degree");
        }
        f
    }

    /// A unit of the chart ring: constant times a monomial in the allowed variables.
    pub fn unit(&mut self, chart: Chart) -> LaurentElement {
        let allowed = chart.indices();
        let mut e = vec![0i64; chart.nvars()];
        for _ in 0..self.rng.gen_range(0..=self.max_factors) {
            e[allowed[self.rng.gen_range(0..allowed.len())]] += 1;
            e[allowed[self.rng.gen_range(0..allowed.len())]] -= 1;
        }
        LaurentElement::monomial(chart, &e, self.nonzero_rational()).expect("chart exponents")
    }

    /// A twist-0 field: component g_q = x_r f_q with f_q random of degree 0.
    pub fn field(&mut self, chart: Chart) -> VectorField {
        let comps: Vec<LaurentElement> = (0..chart.nvars())
            .map(|_| {
                let r = self.rng.gen_range(0..chart.nvars());
                LaurentElement::var(chart, r).try_mul(&self.function(chart)).expect("chart")
            })
            .collect();
        VectorField::new(0, comps).expect("degree 1 components")
    }

    /// A field of the given twist: components x^e f with |e| = twist + 1.
    pub fn field_with_twist(&mut self, chart: Chart, twist: i64) -> VectorField {
        let comps: Vec<LaurentElement> = (0..chart.nvars())
            .map(|_| {
                let mut e = vec![0i64; chart.nvars()];
                let r = chart.indices()[self.rng.gen_range(0..chart.indices().len())];
                e[self.rng.gen_range(0..chart.nvars())] += 1;
                e[r] += twist;
                let x = LaurentElement::monomial(chart, &e, self.nonzero_rational()).expect("chart");
                x.try_mul(&self.function(chart)).expect("chart")
            })
            .collect();
        VectorField::new(twist, comps).expect("degree")
    }

    pub fn series(&mut self, chart: Chart, n: usize) -> TruncSeries {
        TruncSeries::new((0..n).map(|_| self.function(chart)).collect()).expect("degree 0")
    }

    pub fn unit_series(&mut self, chart: Chart, n: usize) -> TruncSeries {
        let mut s = self.series(chart, n);
        s.set_coeff(0, self.unit(chart)).expect("degree 0");
        s
    }

    pub fn gn(&mut self, chart: Chart, n: usize) -> Result<GnElement> {
        let b = chart.pivot();
        let images = (0..chart.nvars())
            .map(|q| {
                let mut s = self.series(chart, n);
                s.set_coeff(0, LaurentElement::ratio(chart, q, b)?)?;
                Ok(s)
            })
            .collect::<Result<Vec<_>>>()?;
        let mu = self.unit_series(chart, n - 1);
        GnElement::new(chart, n, b, images, mu)
    }

    /// A derivation in Der_0: a_0 = 0 and b_0 = 0.
    pub fn der0(&mut self, chart: Chart, n: usize) -> Result<DerivationRn> {
        let mut a = vec![VectorField::zero(chart, 0)];
        for _ in 1..n {
            a.push(self.field(chart));
        }
        let mut b = self.series(chart, n);
        b.set_coeff(0, LaurentElement::zero(chart, 0))?;
        DerivationRn::new(a, b)
    }

    pub fn matrix(&mut self, chart: Chart, r: usize) -> LMatrix {
        LMatrix::new(r, (0..r * r).map(|_| self.function(chart)).collect()).expect("degree 0")
    }

    /// lower * diagonal * upper with unit diagonal, so invertible over the chart ring.
    pub fn invertible_matrix(&mut self, chart: Chart, r: usize) -> LMatrix {
        let mut lo = LMatrix::identity(chart, r);
        let mut up = LMatrix::identity(chart, r);
        for i in 0..r {
            for j in 0..i {
                lo.set(i, j, self.function(chart)).expect("degree 0");
                up.set(j, i, self.function(chart)).expect("degree 0");
            }
        }
        let d = LMatrix::diagonal(&(0..r).map(|_| self.unit(chart)).collect::<Vec<_>>());
        lo.try_mul(&d).and_then(|x| x.try_mul(&up)).expect("same chart")
    }

    /// An element of GL_r(R_n): invertible A_0, random higher coefficients.
    pub fn trunc_matrix(&mut self, chart: Chart, r: usize, n: usize) -> TruncMatrix {
        let mut c = vec![self.invertible_matrix(chart, r)];
        for _ in 1..n {
            c.push(self.matrix(chart, r));
        }
        TruncMatrix::from_coefficients(c).expect("uniform size")
    }

    /// lambda(t) = mu t on R_N with mu_0 a unit monomial.
    pub fn coeff_automorphism(&mut self, chart: Chart, ring_order: usize) -> CoeffAutomorphism {
        CoeffAutomorphism::new(self.unit_series(chart, ring_order - 1)).expect("unit")
    }

    /// A random H_2 cocycle on P^2: the split one for O(k), conjugated by a
    /// random element of H_2(U_i) on each chart.
    pub fn h2_cocycle(&mut self, k: i64) -> Result<PairCocycle> {
        let cover = StandardCover::new(2)?;
        let l = UnitCocycle::line_bundle(cover, k);
        let base = PairCocycle::from_h2_data(cover, &BTreeMap::new(), &l, &BTreeMap::new())?;
        let tau = (0..3)
            .map(|i| {
                let c = Chart::on(2, &[i]);
                let g = self.gn(c, 2)?;
                let u = TruncSeries::new(vec![g.mu().coeff(0).clone(), self.function(c)])?;
                HnElement::new(g, u)
            })
            .collect::<Result<Vec<_>>>()?;
        base.conjugate(&tau)
    }
}
