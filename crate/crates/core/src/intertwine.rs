//! The inverse Dunkl intertwining operator
//! 𝒯 f = Exp(Σ_j x_j T_j^{(y)}) f(x_0 + y̲) |_{y=0}, evaluated as a finite sum.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;


use crate::dunkl::RootSystem;
use crate::error::Result;
use crate::poly::{CliffPoly, Monomial};
use crate::rational::{int, Rational};

/// Polynomial in outer variables x_0..x_m whose coefficients are
/// polynomials in inner variables y_1..y_m (stored in slots 1..=m of an
/// ordinary [`CliffPoly`], slot 0 unused).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiCliffPoly {
    dim: usize,
    terms: BTreeMap<Monomial, CliffPoly>,
}

impl BiCliffPoly {
    pub fn zero(dim: usize) -> Self {
        BiCliffPoly { dim, terms: BTreeMap::new() }
    }

    /// Moves x_1..x_m of p to the inner variables, keeping x_0 outer.
    pub fn lift(p: &CliffPoly) -> Self {
        let m = p.dim();
        let mut out = BiCliffPoly::zero(m);
        for (mono, c) in p.terms() {
            let mut outer = vec![0u32; m + 1];
            outer[0] = mono.exp(0);
            let mut inner = mono.exps().to_vec();
            inner[0] = 0;
            out.add(Monomial::new(outer), &CliffPoly::term(m, inner, c.clone()));
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &CliffPoly)> {
        self.terms.iter()
    }

    fn add(&mut self, outer: Monomial, inner: &CliffPoly) {
        if inner.is_zero() {
            return;
        }
        match self.terms.entry(outer) {
            Entry::Vacant(e) => {
                e.insert(inner.clone());
            }
            Entry::Occupied(mut e) => {
                e.get_mut().add_assign_ref(inner);
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Largest inner degree.
    pub fn inner_degree(&self) -> usize {
        self.terms.values().filter_map(CliffPoly::degree).max().unwrap_or(0)
    }

    /// Σ_j x_j T_j^{(y)}, scaled by `factor`.
    pub fn apply_shift(&self, rs: &RootSystem, factor: &Rational) -> Result<BiCliffPoly> {
        let mut out = BiCliffPoly::zero(self.dim);
        for (outer, inner) in &self.terms {
            for (j, t) in rs.dunkl_all(inner)?.into_iter().enumerate() {
                if t.is_zero() {
                    continue;
                }
                let o = outer.with_exp(j + 1, outer.exp(j + 1) + 1);
                out.add(o, &t.scale(factor));
            }
        }
        Ok(out)
    }

    /// Sets y = 0, giving a polynomial in the outer variables.
    pub fn at_inner_origin(&self) -> CliffPoly {
        let mut out = CliffPoly::zero(self.dim);
        for (outer, inner) in &self.terms {
            let c = inner.constant_term();
            if !c.is_zero() {
                out.add_term(outer.clone(), c);
            }
        }
        out
    }
}

/// 𝒯 p = Σ_{k=0}^{deg_y p} (1/k!) (Σ_j x_j T_j^{(y)})^k p |_{y=0}.
pub fn inverse_intertwine(rs: &RootSystem, p: &CliffPoly) -> Result<CliffPoly> {
    rs.ensure_nonsingular()?;
    let mut cur = BiCliffPoly::lift(p);
    let mut out = cur.at_inner_origin();
    let steps = cur.inner_degree();
    for k in 1..=steps {
        cur = cur.apply_shift(rs, &(crate::rational::frac(1, k as i64)))?;
        if cur.is_zero() {
            break;
        }
        out.add_assign_ref(&cur.at_inner_origin());
    }
    Ok(out)
}

/// ∂_j 𝒯 p = 𝒯 T_j p.
pub fn check_intertwining(rs: &RootSystem, p: &CliffPoly, j: usize) -> Result<bool> {
    let lhs = inverse_intertwine(rs, p)?.diff(j)?;
    let rhs = inverse_intertwine(rs, &rs.dunkl(j, p)?)?;
    Ok(lhs == rhs)
}

/// The x_0-coefficient scalar in ∂̄_x 𝒯(x²) for coordinate systems:
/// 4((1-m)/2 - Σ κ_i).
pub fn intertwined_square_defect(m: usize, kappa_sum: &Rational) -> Rational {
    int(4) * (crate::rational::frac(1 - m as i64, 2) - kappa_sum)
}
