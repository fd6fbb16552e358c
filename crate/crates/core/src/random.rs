//! Seeded generators of random exact inputs for property checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::clifford::{Blade, CliffordElement};
use crate::poly::{CliffPoly, Monomial};
use crate::rational::{frac, Rational};
use crate::stem::{BiPoly, StemPoly};

/// Deterministic sampler: the same seed always yields the same stream.
pub struct PolySampler {
    rng: ChaCha8Rng,
}

impl PolySampler {
    pub fn new(seed: u64) -> Self {
        PolySampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// Small nonzero rational n/d with |n| ≤ 6 and 1 ≤ d ≤ 4.
    pub fn rational(&mut self) -> Rational {
        loop {
            let n: i64 = self.rng.gen_range(-6..=6);
            if n != 0 {
                let d: i64 = self.rng.gen_range(1..=4);
                return frac(n, d);
            }
        }
    }

    pub fn clifford(&mut self, m: usize) -> CliffordElement {
        let count = self.rng.gen_range(1..=3);
        let mut c = CliffordElement::zero(m);
        for _ in 0..count {
            let b = Blade::from_bits(self.rng.gen_range(0..(1u32 << m)));
            c = &c + &CliffordElement::from_blade(m, b, self.rational());
        }
        if c.is_zero() {
            CliffordElement::one(m)
        } else {
            c
        }
    }

    fn exponents(&mut self, nvars: usize, degree: usize, first: usize) -> Vec<u32> {
        let mut e = vec![0u32; nvars];
        for _ in 0..degree {
            let i = self.rng.gen_range(first..nvars);
            e[i] += 1;
        }
        e
    }

    /// Random Clifford-valued polynomial of total degree ≤ `max_degree`.
    pub fn poly(&mut self, m: usize, max_degree: usize, terms: usize) -> CliffPoly {
        self.poly_in(m, max_degree, terms, 0)
    }

    /// Random polynomial in x_1..x_m only.
    pub fn vector_poly(&mut self, m: usize, max_degree: usize, terms: usize) -> CliffPoly {
        self.poly_in(m, max_degree, terms, 1)
    }

    fn poly_in(&mut self, m: usize, max_degree: usize, terms: usize, first: usize) -> CliffPoly {
        let mut out = CliffPoly::zero(m);
        for _ in 0..terms {
            let d = self.rng.gen_range(0..=max_degree);
            let e = self.exponents(m + 1, d, first);
            let c = self.clifford(m);
            out = &out + &CliffPoly::from_terms(m, [(Monomial::new(e), c)]);
        }
        out
    }

    /// Random polynomial with scalar coefficients.
    pub fn scalar_poly(&mut self, m: usize, max_degree: usize, terms: usize) -> CliffPoly {
        let mut out = CliffPoly::zero(m);
        for _ in 0..terms {
            let d = self.rng.gen_range(0..=max_degree);
            let e = self.exponents(m + 1, d, 0);
            let c = CliffordElement::scalar(m, self.rational());
            out = &out + &CliffPoly::from_terms(m, [(Monomial::new(e), c)]);
        }
        out
    }

    /// Nonzero rational vector in R^m with small entries.
    pub fn root(&mut self, m: usize) -> Vec<Rational> {
        loop {
            let v: Vec<Rational> = (0..m)
                .map(|_| frac(self.rng.gen_range(-3..=3), self.rng.gen_range(1..=2)))
                .collect();
            if v.iter().any(|c| *c != frac(0, 1)) {
                return v;
            }
        }
    }

    /// Random bivariate polynomial in (x_0, s) of weighted degree
    /// deg_x0 + 2 deg_s ≤ max_degree.
    pub fn bipoly(&mut self, m: usize, max_degree: usize, terms: usize) -> BiPoly {
        let mut out = BiPoly::zero(m);
        for _ in 0..terms {
            let b = self.rng.gen_range(0..=max_degree / 2);
            let a = self.rng.gen_range(0..=max_degree - 2 * b);
            out.add_term(a as u32, b as u32, self.clifford(m));
        }
        out
    }

    /// Random stem with Clifford right-coefficients; the induced polynomial
    /// has degree ≤ `max_degree`.
    pub fn stem(&mut self, m: usize, max_degree: usize, terms: usize) -> StemPoly {
        let a = self.bipoly(m, max_degree, terms);
        let b = self.bipoly(m, max_degree.saturating_sub(1), terms);
        StemPoly::new(a, b)
    }

    /// Random polynomial whose every term has x_m-exponent of the given
    /// parity (`odd = false` gives even polynomials in x_m).
    pub fn parity_poly(&mut self, m: usize, max_degree: usize, terms: usize, odd: bool) -> CliffPoly {
        let p = self.poly(m, max_degree, terms);
        let want = u32::from(odd);
        let q = p.filter_terms(|mono| mono.exp(m) % 2 == want);
        if q.is_zero() {
            let mut e = vec![0u32; m + 1];
            e[m] = want;
            CliffPoly::from_terms(m, [(Monomial::new(e), self.clifford(m))])
        } else {
            q
        }
    }
}
