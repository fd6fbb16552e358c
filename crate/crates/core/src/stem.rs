//! Stem functions: slice polynomials encoded as pairs (A, B) of bivariate
//! polynomials in (x_0, s), inducing f = A(x_0, |x̲|²) + x̲ B(x_0, |x̲|²).
//! Clifford values are right coefficients throughout.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::clifford::{Blade, CliffordElement};
use crate::dirac::{self, GammaRoute};
use crate::dunkl::RootSystem;
use crate::error::{Error, Result};
use crate::linalg;
use crate::poly::CliffPoly;
use crate::rational::{format_rational, int, Rational};

/// Sparse polynomial in (x_0, s) with Clifford coefficients, keyed by the
/// exponent pair (deg x_0, deg s).
#[derive(Clone, PartialEq, Eq)]
pub struct BiPoly {
    dim: usize,
    terms: BTreeMap<(u32, u32), CliffordElement>,
}

impl BiPoly {
    pub fn zero(dim: usize) -> Self {
        BiPoly { dim, terms: BTreeMap::new() }
    }

    pub fn constant(c: CliffordElement) -> Self {
        let mut p = BiPoly::zero(c.dim());
        p.add_term(0, 0, c);
        p
    }

    pub fn scalar_term(dim: usize, a: u32, b: u32, c: Rational) -> Self {
        let mut p = BiPoly::zero(dim);
        p.add_term(a, b, CliffordElement::scalar(dim, c));
        p
    }

    pub fn from_terms(dim: usize, terms: impl IntoIterator<Item = ((u32, u32), CliffordElement)>) -> Self {
        let mut p = BiPoly::zero(dim);
        for ((a, b), c) in terms {
            p.add_term(a, b, c);
        }
        p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&(u32, u32), &CliffordElement)> {
        self.terms.iter()
    }

    pub fn coeff(&self, a: u32, b: u32) -> CliffordElement {
        self.terms.get(&(a, b)).cloned().unwrap_or_else(|| CliffordElement::zero(self.dim))
    }

    /// Largest value of deg x_0 + 2 deg s over the terms.
    pub fn weighted_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(a, b)| a + 2 * b).max()
    }

    pub fn add_term(&mut self, a: u32, b: u32, c: CliffordElement) {
        assert_eq!(c.dim(), self.dim, "Clifford dimension mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry((a, b)) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                e.get_mut().add_assign_ref(&c);
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, factor: &Rational) -> BiPoly {
        let mut out = BiPoly::zero(self.dim);
        for (&(a, b), c) in &self.terms {
            out.add_term(a, b, c.scale(factor));
        }
        out
    }

    /// ∂/∂x_0.
    pub fn d_x0(&self) -> BiPoly {
        let mut out = BiPoly::zero(self.dim);
        for (&(a, b), c) in &self.terms {
            if a > 0 {
                out.add_term(a - 1, b, c.scale(&int(a.into())));
            }
        }
        out
    }

    /// ∂/∂s.
    pub fn d_s(&self) -> BiPoly {
        let mut out = BiPoly::zero(self.dim);
        for (&(a, b), c) in &self.terms {
            if b > 0 {
                out.add_term(a, b - 1, c.scale(&int(b.into())));
            }
        }
        out
    }

    pub fn mul_x0(&self) -> BiPoly {
        self.shift(1, 0)
    }

    pub fn mul_s(&self) -> BiPoly {
        self.shift(0, 1)
    }

    fn shift(&self, da: u32, db: u32) -> BiPoly {
        BiPoly {
            dim: self.dim,
            terms: self.terms.iter().map(|(&(a, b), c)| ((a + da, b + db), c.clone())).collect(),
        }
    }

    /// Substitutes s ↦ Σ_{j≥1} x_j², keeping coefficients on the right.
    pub fn to_poly(&self) -> CliffPoly {
        let m = self.dim;
        let s = CliffPoly::vector_norm_squared(m);
        let mut s_powers: Vec<CliffPoly> = vec![CliffPoly::one(m)];
        let mut out = CliffPoly::zero(m);
        for (&(a, b), c) in &self.terms {
            while s_powers.len() <= b as usize {
                let next = s_powers.last().unwrap() * &s;
                s_powers.push(next);
            }
            let mut e = vec![0u32; m + 1];
            e[0] = a;
            let x0a = CliffPoly::term(m, e, CliffordElement::one(m));
            out.add_assign_ref(&(&x0a * &s_powers[b as usize]).right_mul(c));
        }
        out
    }
}

impl std::ops::Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(a, b), c) in &rhs.terms {
            out.add_term(a, b, c.clone());
        }
        out
    }
}

impl std::ops::Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        self + &rhs.scale(&-Rational::one())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(a, b), c) in self.terms.iter().rev() {
            for (blade, r) in c.terms() {
                if !first {
                    write!(f, " + ")?;
                }
                first = false;
                write!(f, "{}", format_rational(r))?;
                if *blade != Blade::SCALAR {
                    write!(f, "*{blade}")?;
                }
                match a {
                    0 => {}
                    1 => write!(f, "*x0")?,
                    _ => write!(f, "*x0^{a}")?,
                }
                match b {
                    0 => {}
                    1 => write!(f, "*s")?,
                    _ => write!(f, "*s^{b}")?,
                }
            }
        }
        Ok(())
    }
}

/// A stem (A, B).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StemPoly {
    pub a: BiPoly,
    pub b: BiPoly,
}

/// The Vekua coupling constant c = 2γ_κ + m - 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VekuaParameter {
    pub c: Rational,
}

impl VekuaParameter {
    pub fn new(c: Rational) -> Self {
        VekuaParameter { c }
    }

    pub fn from_gamma(m: usize, gamma: &Rational) -> Self {
        VekuaParameter { c: int(2) * gamma + int(m as i64 - 1) }
    }

    pub fn for_root_system(rs: &RootSystem) -> Self {
        Self::from_gamma(rs.dim(), &rs.gamma())
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_zero()
    }
}

impl StemPoly {
    pub fn new(a: BiPoly, b: BiPoly) -> Self {
        assert_eq!(a.dim(), b.dim(), "stem components differ in dimension");
        StemPoly { a, b }
    }

    pub fn zero(m: usize) -> Self {
        StemPoly::new(BiPoly::zero(m), BiPoly::zero(m))
    }

    pub fn dim(&self) -> usize {
        self.a.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Stem of the paravector power (x_0 + x̲)^n.
    pub fn power(m: usize, n: u32) -> Self {
        let mut a = BiPoly::constant(CliffordElement::one(m));
        let mut b = BiPoly::zero(m);
        for _ in 0..n {
            let na = &a.mul_x0() - &b.mul_s();
            let nb = &a + &b.mul_x0();
            a = na;
            b = nb;
        }
        StemPoly { a, b }
    }

    /// f = A(x_0, |x̲|²) + x̲ B(x_0, |x̲|²).
    pub fn induce(&self) -> CliffPoly {
        let m = self.dim();
        &self.a.to_poly() + &(&CliffPoly::vector_variable(m) * &self.b.to_poly())
    }

    /// Stem of f°_s, namely (A, 0).
    pub fn spherical_value(&self) -> StemPoly {
        StemPoly::new(self.a.clone(), BiPoly::zero(self.dim()))
    }

    /// Stem of f'_s, namely (B, 0).
    pub fn spherical_derivative(&self) -> StemPoly {
        StemPoly::new(self.b.clone(), BiPoly::zero(self.dim()))
    }

    /// (∂_0 A - B - 2s ∂_s B, ∂_0 B + 2 ∂_s A).
    fn cr_residuals(&self) -> (BiPoly, BiPoly) {
        let first = &(&self.a.d_x0() - &self.b) - &self.b.d_s().mul_s().scale(&int(2));
        let second = &self.b.d_x0() + &self.a.d_s().scale(&int(2));
        (first, second)
    }

    /// Cauchy-Riemann system of the stem.
    pub fn check_cr(&self) -> bool {
        let (r1, r2) = self.cr_residuals();
        r1.is_zero() && r2.is_zero()
    }

    /// Vekua-type system with coupling c.
    pub fn check_vekua(&self, c: &VekuaParameter) -> bool {
        let (r1, r2) = self.cr_residuals();
        (&r1 - &self.b.scale(&c.c)).is_zero() && r2.is_zero()
    }
}

impl fmt::Display for StemPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A = {}; B = {}", self.a, self.b)
    }
}

/// Writes p as A(x_0, |x̲|²) + x̲ B(x_0, |x̲|²) if possible. The coefficients
/// are found one homogeneous degree at a time by exact linear algebra;
/// infeasibility is reported as [`Error::NotSlice`].
pub fn slice_decompose(p: &CliffPoly) -> Result<StemPoly> {
    let m = p.dim();
    let mut stem = StemPoly::zero(m);
    let Some(top) = p.degree() else {
        return Ok(stem);
    };
    let blades: Vec<Blade> = {
        let mut b: Vec<Blade> = (0..(1u32 << m)).map(Blade::from_bits).collect();
        b.sort();
        b
    };
    let xvec = CliffPoly::vector_variable(m);
    for d in 0..=top {
        let part = p.homogeneous_component(d);
        if part.is_zero() {
            continue;
        }
        // (is_b, a, b, blade) for each unknown
        let mut unknowns: Vec<(bool, u32, u32, Blade)> = Vec::new();
        let mut columns: Vec<CliffPoly> = Vec::new();
        let d = d as u32;
        for sb in 0..=d / 2 {
            let radial = BiPoly::scalar_term(m, d - 2 * sb, sb, Rational::one()).to_poly();
            for blade in &blades {
                let e = CliffordElement::from_blade(m, *blade, Rational::one());
                unknowns.push((false, d - 2 * sb, sb, *blade));
                columns.push(radial.right_mul(&e));
            }
        }
        if d >= 1 {
            for sb in 0..=(d - 1) / 2 {
                let radial = BiPoly::scalar_term(m, d - 1 - 2 * sb, sb, Rational::one()).to_poly();
                let vr = &xvec * &radial;
                for blade in &blades {
                    let e = CliffordElement::from_blade(m, *blade, Rational::one());
                    unknowns.push((true, d - 1 - 2 * sb, sb, *blade));
                    columns.push(vr.right_mul(&e));
                }
            }
        }
        let (matrix, project) = dirac::column_matrix(&columns);
        let rhs = project(&part);
        if rhs.is_empty() {
            return Err(Error::NotSlice);
        }
        let sol = linalg::solve(&matrix, &rhs, columns.len()).ok_or(Error::NotSlice)?;
        for ((is_b, a, sb, blade), c) in unknowns.into_iter().zip(sol) {
            if c.is_zero() {
                continue;
            }
            let coeff = CliffordElement::from_blade(m, blade, c);
            if is_b {
                stem.b.add_term(a, sb, coeff);
            } else {
                stem.a.add_term(a, sb, coeff);
            }
        }
    }
    Ok(stem)
}

/// Errors unless γ_κ = (1-m)/2 and κ is nonsingular.
pub fn require_slice_gamma(rs: &RootSystem) -> Result<()> {
    let expected = crate::rational::frac(1 - rs.dim() as i64, 2);
    let found = rs.gamma();
    if found != expected {
        return Err(Error::BadGamma {
            found: format_rational(&found),
            expected: format_rational(&expected),
        });
    }
    rs.ensure_nonsingular()
}

/// Γ̃_ω p = 0, valid when γ_κ = (1-m)/2.
pub fn is_slice(rs: &RootSystem, p: &CliffPoly) -> Result<bool> {
    require_slice_gamma(rs)?;
    Ok(dirac::gamma_tilde(rs, p, GammaRoute::Rho)?.is_zero())
}

/// Γ̃_ω p = 0 and D_h p = 0, valid when γ_κ = (1-m)/2.
pub fn is_slice_regular(rs: &RootSystem, p: &CliffPoly) -> Result<bool> {
    Ok(is_slice(rs, p)? && dirac::cauchy_riemann(rs, p)?.is_zero())
}

/// Recovers the stem of a polynomial known to be slice and checks it
/// against the stem Cauchy-Riemann system.
pub fn slice_regular_stem(p: &CliffPoly) -> Result<StemPoly> {
    let st = slice_decompose(p)?;
    if !st.check_cr() {
        return Err(Error::NotSliceRegular);
    }
    Ok(st)
}
