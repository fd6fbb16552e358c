//! Sparse polynomials in the commuting variables x_0, x_1, ..., x_m with
//! Clifford-valued coefficients.
//!
//! Variables are central: they commute with each other and with every
//! blade, so a term is stored as `x^a · c` with the Clifford coefficient `c`
//! kept on the monomial. Products of coefficients keep their left/right order.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::clifford::{Blade, CliffordElement};
use crate::error::{Error, Result};
use crate::rational::{format_rational, Rational};

/// Exponent vector over x_0..x_m (slot 0 is x_0).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Box<[u32]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars].into_boxed_slice())
    }

    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps.into_boxed_slice())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial::new(e)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    pub(crate) fn with_exp(&self, i: usize, e: u32) -> Monomial {
        let mut v = self.0.clone();
        v[i] = e;
        Monomial(v)
    }
}

impl Ord for Monomial {
    /// Graded lexicographic, x_0 > x_1 > ... > x_m.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// A linear change of variables x ↦ S x on (x_0, ..., x_m).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSubstitution {
    matrix: Vec<Vec<Rational>>,
}

impl LinearSubstitution {
    pub fn new(matrix: Vec<Vec<Rational>>) -> Result<Self> {
        let n = matrix.len();
        if n == 0 {
            return Err(Error::DimensionMismatch { left: 0, right: 1 });
        }
        for row in &matrix {
            if row.len() != n {
                return Err(Error::DimensionMismatch { left: row.len(), right: n });
            }
        }
        Ok(LinearSubstitution { matrix })
    }

    pub fn identity(m: usize) -> Self {
        let n = m + 1;
        let matrix = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                    .collect()
            })
            .collect();
        LinearSubstitution { matrix }
    }

    /// σ_α x = x - 2<α, x>/|α|² α for a root α in the x̲-space (x_0 fixed).
    pub fn reflection(alpha: &[Rational]) -> Result<Self> {
        let m = alpha.len();
        let norm: Rational = alpha.iter().map(|a| a * a).sum();
        if norm.is_zero() {
            return Err(Error::InvalidRootSystem("zero root".into()));
        }
        let mut s = Self::identity(m);
        let two = Rational::from_integer(2.into());
        for i in 0..m {
            for j in 0..m {
                let d = &two * &alpha[i] * &alpha[j] / &norm;
                s.matrix[i + 1][j + 1] -= d;
            }
        }
        Ok(s)
    }

    pub fn nvars(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &[Vec<Rational>] {
        &self.matrix
    }

    pub fn compose(&self, other: &LinearSubstitution) -> LinearSubstitution {
        let n = self.nvars();
        let matrix = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| &self.matrix[i][k] * &other.matrix[k][j]).sum())
                    .collect()
            })
            .collect();
        LinearSubstitution { matrix }
    }

    pub fn is_involution(&self) -> bool {
        self.compose(self) == Self::identity(self.nvars() - 1)
    }

    pub fn apply_vector(&self, v: &[Rational]) -> Vec<Rational> {
        self.matrix
            .iter()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Some((target, factor)) per row when every row has one nonzero entry.
    fn as_monomial_map(&self) -> Option<Vec<(usize, Rational)>> {
        self.matrix
            .iter()
            .map(|row| {
                let mut nz = row.iter().enumerate().filter(|(_, c)| !c.is_zero());
                let first = nz.next()?;
                if nz.next().is_some() {
                    return None;
                }
                Some((first.0, first.1.clone()))
            })
            .collect()
    }
}

/// Polynomial in x_0..x_m with coefficients in R_{0,m}. No zero
/// coefficients are stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CliffPoly {
    dim: usize,
    terms: BTreeMap<Monomial, CliffordElement>,
}

impl CliffPoly {
    pub fn zero(dim: usize) -> Self {
        CliffPoly { dim, terms: BTreeMap::new() }
    }

    pub fn one(dim: usize) -> Self {
        Self::constant(CliffordElement::one(dim))
    }

    pub fn constant(c: CliffordElement) -> Self {
        let dim = c.dim();
        let mut p = Self::zero(dim);
        p.add_term(Monomial::one(dim + 1), c);
        p
    }

    pub fn scalar_constant(dim: usize, c: Rational) -> Self {
        Self::constant(CliffordElement::scalar(dim, c))
    }

    /// c · x^exps.
    pub fn term(dim: usize, exps: Vec<u32>, c: CliffordElement) -> Self {
        assert_eq!(exps.len(), dim + 1, "exponent vector must have m + 1 entries");
        assert_eq!(c.dim(), dim, "coefficient dimension mismatch");
        let mut p = Self::zero(dim);
        p.add_term(Monomial::new(exps), c);
        p
    }

    /// The variable x_i.
    pub fn var(dim: usize, i: usize) -> Self {
        assert!(i <= dim, "variable x_{i} out of range for m = {dim}");
        let mut p = Self::zero(dim);
        p.add_term(Monomial::var(dim + 1, i), CliffordElement::one(dim));
        p
    }

    /// x̲ = Σ_{j≥1} e_j x_j.
    pub fn vector_variable(dim: usize) -> Self {
        let mut p = Self::zero(dim);
        for j in 1..=dim {
            p.add_term(Monomial::var(dim + 1, j), CliffordElement::generator(dim, j));
        }
        p
    }

    /// The paravector x = x_0 + x̲.
    pub fn paravector(dim: usize) -> Self {
        &Self::var(dim, 0) + &Self::vector_variable(dim)
    }

    /// |x̲|² = Σ_{j≥1} x_j².
    pub fn vector_norm_squared(dim: usize) -> Self {
        let mut p = Self::zero(dim);
        for j in 1..=dim {
            let mut e = vec![0; dim + 1];
            e[j] = 2;
            p.add_term(Monomial::new(e), CliffordElement::one(dim));
        }
        p
    }

    /// x̲_α = Σ α_j e_j as a constant polynomial.
    pub fn vector_constant(alpha: &[Rational]) -> Self {
        Self::constant(CliffordElement::vector(alpha))
    }

    pub fn from_terms(dim: usize, terms: impl IntoIterator<Item = (Monomial, CliffordElement)>) -> Self {
        let mut p = Self::zero(dim);
        for (mono, c) in terms {
            assert_eq!(mono.nvars(), dim + 1, "exponent vector must have m + 1 entries");
            assert_eq!(c.dim(), dim, "coefficient dimension mismatch");
            p.add_term(mono, c);
        }
        p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nvars(&self) -> usize {
        self.dim + 1
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &CliffordElement)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mono: &Monomial) -> CliffordElement {
        self.terms.get(mono).cloned().unwrap_or_else(|| CliffordElement::zero(self.dim))
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Highest exponent of x_i.
    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m.exp(i)).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn is_scalar_valued(&self) -> bool {
        self.terms.values().all(CliffordElement::is_scalar)
    }

    pub(crate) fn add_term(&mut self, mono: Monomial, c: CliffordElement) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
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

    pub(crate) fn add_scaled_term(&mut self, mono: Monomial, c: &CliffordElement, factor: &Rational) {
        if factor.is_zero() || c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            Entry::Vacant(e) => {
                e.insert(c.scale(factor));
            }
            Entry::Occupied(mut e) => {
                e.get_mut().add_scaled(c, factor);
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub(crate) fn add_assign_ref(&mut self, other: &CliffPoly) {
        assert_eq!(self.dim, other.dim, "polynomial dimension mismatch");
        for (mono, c) in &other.terms {
            self.add_term(mono.clone(), c.clone());
        }
    }

    pub(crate) fn add_scaled(&mut self, other: &CliffPoly, factor: &Rational) {
        assert_eq!(self.dim, other.dim, "polynomial dimension mismatch");
        for (mono, c) in &other.terms {
            self.add_scaled_term(mono.clone(), c, factor);
        }
    }

    pub fn try_add(&self, other: &CliffPoly) -> Result<CliffPoly> {
        check_dims(self.dim, other.dim)?;
        Ok(self + other)
    }

    pub fn try_mul(&self, other: &CliffPoly) -> Result<CliffPoly> {
        check_dims(self.dim, other.dim)?;
        let mut out = CliffPoly::zero(self.dim);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, factor: &Rational) -> CliffPoly {
        if factor.is_zero() {
            return CliffPoly::zero(self.dim);
        }
        CliffPoly {
            dim: self.dim,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.scale(factor))).collect(),
        }
    }

    /// c · p.
    pub fn left_mul(&self, c: &CliffordElement) -> CliffPoly {
        let mut out = CliffPoly::zero(self.dim);
        for (m, coeff) in &self.terms {
            out.add_term(m.clone(), c * coeff);
        }
        out
    }

    /// p · c.
    pub fn right_mul(&self, c: &CliffordElement) -> CliffPoly {
        let mut out = CliffPoly::zero(self.dim);
        for (m, coeff) in &self.terms {
            out.add_term(m.clone(), coeff * c);
        }
        out
    }

    /// e_A · p.
    pub fn left_mul_blade(&self, blade: Blade) -> CliffPoly {
        CliffPoly {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.left_mul_blade(blade)))
                .collect(),
        }
    }

    /// x_i · p.
    pub fn mul_var(&self, i: usize) -> CliffPoly {
        CliffPoly {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.with_exp(i, m.exp(i) + 1), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> CliffPoly {
        let mut out = CliffPoly::one(self.dim);
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// ∂p/∂x_i, checked.
    pub fn diff(&self, i: usize) -> Result<CliffPoly> {
        if i > self.dim {
            return Err(Error::IndexOutOfRange { index: i, m: self.dim });
        }
        Ok(self.partial(i))
    }

    /// ∂p/∂x_i. Panics when `i > m`.
    pub fn partial(&self, i: usize) -> CliffPoly {
        assert!(i <= self.dim, "variable x_{i} out of range for m = {}", self.dim);
        let mut out = CliffPoly::zero(self.dim);
        for (m, c) in &self.terms {
            let e = m.exp(i);
            if e == 0 {
                continue;
            }
            out.add_term(m.with_exp(i, e - 1), c.scale(&Rational::from_integer(e.into())));
        }
        out
    }

    /// Composes p with a linear change of variables: q(x) = p(S x).
    pub fn substitute_linear(&self, s: &LinearSubstitution) -> Result<CliffPoly> {
        check_dims(self.nvars(), s.nvars())?;
        if let Some(map) = s.as_monomial_map() {
            let mut out = CliffPoly::zero(self.dim);
            for (mono, c) in &self.terms {
                let mut exps = vec![0u32; self.nvars()];
                let mut factor = Rational::one();
                for (i, &e) in mono.exps().iter().enumerate() {
                    if e == 0 {
                        continue;
                    }
                    let (target, ref scale) = map[i];
                    exps[target] += e;
                    factor *= num_traits::pow(scale.clone(), e as usize);
                }
                out.add_scaled_term(Monomial::new(exps), c, &factor);
            }
            return Ok(out);
        }
        // image of each variable as a scalar linear form, powers cached lazily
        let images: Vec<CliffPoly> = s
            .matrix()
            .iter()
            .map(|row| {
                let mut l = CliffPoly::zero(self.dim);
                for (j, a) in row.iter().enumerate() {
                    if !a.is_zero() {
                        l.add_term(Monomial::var(self.nvars(), j), CliffordElement::scalar(self.dim, a.clone()));
                    }
                }
                l
            })
            .collect();
        let mut powers: Vec<Vec<CliffPoly>> = images
            .iter()
            .map(|_| vec![CliffPoly::one(self.dim)])
            .collect();
        let mut out = CliffPoly::zero(self.dim);
        for (mono, c) in &self.terms {
            let mut acc = CliffPoly::constant(c.clone());
            for (i, &e) in mono.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                acc = &acc * &powers[i][e as usize];
            }
            out.add_assign_ref(&acc);
        }
        Ok(out)
    }

    /// Exact quotient of p by the linear form <α, x̲> = Σ α_j x_j.
    ///
    /// Synthetic division in the pivot variable x_k (first j with α_j ≠ 0):
    /// the remainder is the unique part free of x_k and must vanish.
    pub fn divide_by_linear_form(&self, alpha: &[Rational]) -> Result<CliffPoly> {
        check_dims(self.dim, alpha.len())?;
        let pivot = alpha
            .iter()
            .position(|a| !a.is_zero())
            .ok_or_else(|| Error::InvalidRootSystem("zero linear form".into()))?;
        let k = pivot + 1;
        let inv = Rational::one() / &alpha[pivot];
        let rest: Vec<(usize, Rational)> = alpha
            .iter()
            .enumerate()
            .filter(|(j, a)| *j != pivot && !a.is_zero())
            .map(|(j, a)| (j + 1, a.clone()))
            .collect();

        let mut rem = self.terms.clone();
        let mut quotient = CliffPoly::zero(self.dim);
        let top = self.degree_in(k);
        for level in (1..=top).rev() {
            let batch: Vec<(Monomial, CliffordElement)> = rem
                .iter()
                .filter(|(m, _)| m.exp(k) == level)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect();
            for (mono, c) in batch {
                rem.remove(&mono);
                let q_mono = mono.with_exp(k, level - 1);
                let q_coeff = c.scale(&inv);
                for (j, a) in &rest {
                    let t = q_mono.with_exp(*j, q_mono.exp(*j) + 1);
                    let sub = q_coeff.scale(&-a.clone());
                    match rem.entry(t) {
                        Entry::Vacant(e) => {
                            e.insert(sub);
                        }
                        Entry::Occupied(mut e) => {
                            e.get_mut().add_assign_ref(&sub);
                            if e.get().is_zero() {
                                e.remove();
                            }
                        }
                    }
                }
                quotient.add_term(q_mono, q_coeff);
            }
        }
        if rem.is_empty() {
            Ok(quotient)
        } else {
            Err(Error::NonzeroRemainder)
        }
    }

    /// Exact evaluation at a point of R^{m+1}.
    pub fn evaluate(&self, point: &[Rational]) -> Result<CliffordElement> {
        check_dims(self.nvars(), point.len())?;
        let mut out = CliffordElement::zero(self.dim);
        for (mono, c) in &self.terms {
            let mut v = Rational::one();
            for (x, &e) in point.iter().zip(mono.exps()) {
                if e > 0 {
                    v *= num_traits::pow(x.clone(), e as usize);
                }
            }
            out.add_scaled(c, &v);
        }
        Ok(out)
    }

    /// The constant term, p(0).
    pub fn constant_term(&self) -> CliffordElement {
        self.coeff(&Monomial::one(self.nvars()))
    }

    /// The total-degree-k part.
    pub fn homogeneous_component(&self, k: usize) -> CliffPoly {
        CliffPoly {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == k)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Applies `f` to every coefficient, dropping zeros.
    pub fn map_coeffs(&self, f: impl Fn(&CliffordElement) -> CliffordElement) -> CliffPoly {
        let mut out = CliffPoly::zero(self.dim);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    /// Keeps the terms whose monomial satisfies `keep`.
    pub fn filter_terms(&self, keep: impl Fn(&Monomial) -> bool) -> CliffPoly {
        CliffPoly {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Euler operator in the vector variables, E_x̲ = Σ_{j≥1} x_j ∂_j.
    pub fn vector_euler(&self) -> CliffPoly {
        let mut out = CliffPoly::zero(self.dim);
        for (m, c) in &self.terms {
            let d: u32 = m.exps()[1..].iter().sum();
            out.add_scaled_term(m.clone(), c, &Rational::from_integer(d.into()));
        }
        out
    }
}

fn check_dims(a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { left: a, right: b })
    }
}

impl fmt::Debug for CliffPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for CliffPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (mono, c) in self.terms.iter().rev() {
            for (b, r) in c.terms() {
                if !first {
                    write!(f, " + ")?;
                }
                first = false;
                write!(f, "{}", format_rational(r))?;
                if *b != Blade::SCALAR {
                    write!(f, "*{b}")?;
                }
                if mono.degree() > 0 {
                    write!(f, "*{mono}")?;
                }
            }
        }
        Ok(())
    }
}

impl Add for &CliffPoly {
    type Output = CliffPoly;
    fn add(self, rhs: &CliffPoly) -> CliffPoly {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Sub for &CliffPoly {
    type Output = CliffPoly;
    fn sub(self, rhs: &CliffPoly) -> CliffPoly {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Rational::one());
        out
    }
}

impl Neg for &CliffPoly {
    type Output = CliffPoly;
    fn neg(self) -> CliffPoly {
        self.scale(&-Rational::one())
    }
}

/// Ring product. Panics on dimension mismatch; see [`CliffPoly::try_mul`].
impl Mul for &CliffPoly {
    type Output = CliffPoly;
    fn mul(self, rhs: &CliffPoly) -> CliffPoly {
        match self.try_mul(rhs) {
            Ok(p) => p,
            Err(e) => panic!("{e}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::PolySampler;
    use crate::rational::{frac, int};
    use proptest::prelude::*;

    fn x(m: usize, i: usize) -> CliffPoly {
        CliffPoly::var(m, i)
    }

    fn e(m: usize, j: usize) -> CliffordElement {
        CliffordElement::generator(m, j)
    }

    #[test]
    fn variables_commute_with_blades() {
        let m = 2;
        let a = x(m, 0).left_mul(&e(m, 1));
        let b = x(m, 1).left_mul(&e(m, 1));
        let expect = -&(&x(m, 0) * &x(m, 1));
        assert_eq!(&a * &b, expect);
        assert_eq!(&a * &CliffPoly::one(m), a);
    }

    #[test]
    fn degree_is_additive_for_scalar_inputs() {
        let m = 2;
        let p = &x(m, 0).pow(2) + &x(m, 1);
        let q = &x(m, 2).pow(3) - &x(m, 0);
        assert_eq!((&p * &q).degree(), Some(5));
    }

    #[test]
    fn derivative_examples() {
        let m = 2;
        let p = x(m, 1).pow(2).left_mul(&e(m, 1));
        assert_eq!(p.diff(1).unwrap(), x(m, 1).left_mul(&e(m, 1)).scale(&int(2)));
        assert_eq!((&x(m, 0) * &x(m, 1)).diff(0).unwrap(), x(m, 1));
        assert!(CliffPoly::scalar_constant(m, int(7)).diff(2).unwrap().is_zero());
        assert_eq!(p.diff(3), Err(Error::IndexOutOfRange { index: 3, m: 2 }));
    }

    #[test]
    fn substitution_examples() {
        let m = 3;
        let s = LinearSubstitution::reflection(&[int(1), int(0), int(0)]).unwrap();
        assert_eq!(x(m, 1).substitute_linear(&s).unwrap(), -&x(m, 1));
        let s = LinearSubstitution::reflection(&[int(1), int(-1), int(0)]).unwrap();
        assert_eq!(x(m, 1).substitute_linear(&s).unwrap(), x(m, 2));
        let p = &x(m, 0).pow(2) + &x(m, 3).left_mul(&e(m, 2));
        assert_eq!(p.substitute_linear(&LinearSubstitution::identity(m)).unwrap(), p);
        assert!(matches!(
            p.substitute_linear(&LinearSubstitution::identity(2)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn division_examples() {
        let m = 2;
        let l = [int(1), int(-1)];
        let p = &x(m, 1).pow(2) - &x(m, 2).pow(2);
        assert_eq!(p.divide_by_linear_form(&l).unwrap(), &x(m, 1) + &x(m, 2));
        let p = &x(m, 1) - &x(m, 2);
        assert_eq!(p.divide_by_linear_form(&l).unwrap(), CliffPoly::one(m));
        assert_eq!(x(m, 1).pow(2).divide_by_linear_form(&l), Err(Error::NonzeroRemainder));
    }

    #[test]
    fn evaluation_examples() {
        let m = 3;
        let p = &x(m, 0).pow(2) + &x(m, 1).left_mul(&e(m, 1));
        let v = p.evaluate(&[int(2), int(3), int(0), int(0)]).unwrap();
        assert_eq!(v, &CliffordElement::scalar(m, int(4)) + &e(m, 1).scale(&int(3)));
        let zero = [int(0), int(0), int(0), int(0)];
        let q = &p + &CliffPoly::constant(e(m, 2).scale(&frac(1, 2)));
        assert_eq!(q.evaluate(&zero).unwrap(), q.constant_term());
        assert!(CliffPoly::zero(m).evaluate(&zero).unwrap().is_zero());
    }

    #[test]
    fn homogeneous_components() {
        let m = 1;
        let p = &x(m, 0) + &x(m, 0).pow(2);
        assert_eq!(p.homogeneous_component(1), x(m, 0));
        assert!(p.homogeneous_component(3).is_zero());
        let sq = CliffPoly::paravector(3).pow(2);
        assert!(sq.is_homogeneous());
        assert_eq!(sq.homogeneous_component(2), sq);
    }

    #[test]
    fn monomial_order_is_graded_lex() {
        let a = Monomial::new(vec![0, 2, 0]);
        let b = Monomial::new(vec![1, 0, 0]);
        let c = Monomial::new(vec![1, 1, 0]);
        let d = Monomial::new(vec![0, 1, 1]);
        assert!(b < a);
        assert!(d < c);
        assert!(d < a);
    }

    fn pick(seed: u64) -> (CliffPoly, Vec<Rational>) {
        let mut s = PolySampler::new(seed);
        let m = 2 + (seed % 3) as usize;
        let p = s.poly(m, 5, 6);
        let alpha = s.root(m);
        (p, alpha)
    }

    proptest! {
        #[test]
        fn dunkl_difference_quotient_is_exact(seed in any::<u64>()) {
            let (p, alpha) = pick(seed);
            let s = LinearSubstitution::reflection(&alpha).unwrap();
            let diff = &p - &p.substitute_linear(&s).unwrap();
            let q = diff.divide_by_linear_form(&alpha).unwrap();
            let l = CliffPoly::from_terms(p.dim(), alpha.iter().enumerate().map(|(j, a)| {
                (Monomial::var(p.nvars(), j + 1), CliffordElement::scalar(p.dim(), a.clone()))
            }));
            prop_assert_eq!(&q * &l, diff);
        }

        #[test]
        fn reflections_are_involutions(seed in any::<u64>()) {
            let (p, alpha) = pick(seed);
            let s = LinearSubstitution::reflection(&alpha).unwrap();
            prop_assert!(s.is_involution());
            let twice = p.substitute_linear(&s).unwrap().substitute_linear(&s).unwrap();
            prop_assert_eq!(twice, p);
        }

        #[test]
        fn euler_identity(seed in any::<u64>(), k in 0usize..5) {
            let (p, _) = pick(seed);
            let h = p.homogeneous_component(k);
            let mut euler = CliffPoly::zero(h.dim());
            for i in 0..=h.dim() {
                euler = &euler + &h.partial(i).mul_var(i);
            }
            prop_assert_eq!(euler, h.scale(&int(k as i64)));
        }
    }
}
