//! The universal real Clifford algebra R_{0,m}: generators e_1..e_m with
//! e_j e_k = -e_k e_j for j != k and e_j^2 = -1.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{format_rational, Rational};

/// Largest supported number of generators.
pub const MAX_DIM: usize = 31;

/// A basis blade e_A, stored as a bitmask over generator indices
/// (bit `j - 1` set means e_j occurs). The empty set is the scalar unit.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Blade(u32);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    /// The generator e_j (1-based).
    pub fn generator(j: usize) -> Blade {
        assert!((1..=MAX_DIM).contains(&j), "generator index {j} out of range");
        Blade(1 << (j - 1))
    }

    /// Builds a blade from a strictly increasing index list.
    pub fn from_indices(indices: &[usize]) -> Result<Blade> {
        let mut bits = 0u32;
        let mut last = 0usize;
        for &j in indices {
            if j == 0 || j > MAX_DIM {
                return Err(Error::parse("blade", format!("index {j} out of range")));
            }
            if j <= last {
                return Err(Error::parse("blade", "indices must be strictly increasing"));
            }
            last = j;
            bits |= 1 << (j - 1);
        }
        Ok(Blade(bits))
    }

    /// Blade from a raw bitmask (bit `j - 1` for e_j).
    pub fn from_bits(bits: u32) -> Blade {
        assert!(bits >> MAX_DIM == 0, "blade bitmask exceeds {MAX_DIM} generators");
        Blade(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Largest generator index, 0 for the scalar blade.
    pub fn max_index(self) -> usize {
        32 - self.0.leading_zeros() as usize
    }

    pub fn indices(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..32).filter(move |b| bits & (1 << b) != 0).map(|b| b + 1)
    }

    /// e_A e_B = sign * e_{A xor B}.
    pub fn product(self, other: Blade) -> (Blade, bool) {
        // transpositions needed to sort the concatenated index list
        let mut swaps = 0u32;
        for j in other.indices() {
            let higher = self.0 >> j;
            swaps += higher.count_ones();
        }
        // each shared generator contracts with e_j^2 = -1
        let contractions = (self.0 & other.0).count_ones();
        let negative = (swaps + contractions) % 2 == 1;
        (Blade(self.0 ^ other.0), negative)
    }

    /// Sign picked up by the conjugation anti-involution: (-1)^{k(k+1)/2}.
    pub fn conjugation_negates(self) -> bool {
        let k = self.grade();
        (k * (k + 1) / 2) % 2 == 1
    }
}

impl Ord for Blade {
    /// Grade first, then lexicographic on the sorted index list.
    fn cmp(&self, other: &Self) -> Ordering {
        self.grade()
            .cmp(&other.grade())
            .then_with(|| self.indices().cmp(other.indices()))
    }
}

impl PartialOrd for Blade {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return write!(f, "1");
        }
        write!(f, "e")?;
        for j in self.indices() {
            write!(f, "{j}")?;
        }
        Ok(())
    }
}

/// A finitely supported combination of blades with exact rational
/// coefficients. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CliffordElement {
    dim: usize,
    terms: BTreeMap<Blade, Rational>,
}

impl CliffordElement {
    pub fn zero(dim: usize) -> Self {
        assert!(dim <= MAX_DIM, "Clifford dimension {dim} exceeds {MAX_DIM}");
        CliffordElement { dim, terms: BTreeMap::new() }
    }

    pub fn one(dim: usize) -> Self {
        Self::scalar(dim, Rational::one())
    }

    pub fn scalar(dim: usize, value: Rational) -> Self {
        Self::from_blade(dim, Blade::SCALAR, value)
    }

    /// c e_A. Panics if the blade uses a generator beyond `dim`.
    pub fn from_blade(dim: usize, blade: Blade, coeff: Rational) -> Self {
        assert!(
            blade.max_index() <= dim,
            "blade {blade} does not live in R_(0,{dim})"
        );
        let mut out = Self::zero(dim);
        if !coeff.is_zero() {
            out.terms.insert(blade, coeff);
        }
        out
    }

    /// The generator e_j.
    pub fn generator(dim: usize, j: usize) -> Self {
        Self::from_blade(dim, Blade::generator(j), Rational::one())
    }

    /// Σ v_j e_j for a coordinate vector of length `dim`.
    pub fn vector(coords: &[Rational]) -> Self {
        let dim = coords.len();
        let mut out = Self::zero(dim);
        for (j, c) in coords.iter().enumerate() {
            out.add_term(Blade::generator(j + 1), c.clone());
        }
        out
    }

    pub fn from_terms(dim: usize, terms: impl IntoIterator<Item = (Blade, Rational)>) -> Self {
        let mut out = Self::zero(dim);
        for (b, c) in terms {
            assert!(b.max_index() <= dim, "blade {b} does not live in R_(0,{dim})");
            out.add_term(b, c);
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Blade, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, blade: Blade) -> Rational {
        self.terms.get(&blade).cloned().unwrap_or_else(Rational::zero)
    }

    /// The scalar part, the coefficient of the empty blade.
    pub fn scalar_part(&self) -> Rational {
        self.coeff(Blade::SCALAR)
    }

    /// True when the element is a (possibly zero) multiple of the unit.
    pub fn is_scalar(&self) -> bool {
        self.terms.keys().all(|b| *b == Blade::SCALAR)
    }

    pub(crate) fn add_term(&mut self, blade: Blade, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(blade) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub(crate) fn add_assign_ref(&mut self, other: &CliffordElement) {
        assert_same_dim(self.dim, other.dim);
        for (b, c) in &other.terms {
            self.add_term(*b, c.clone());
        }
    }

    pub(crate) fn add_scaled(&mut self, other: &CliffordElement, factor: &Rational) {
        assert_same_dim(self.dim, other.dim);
        if factor.is_zero() {
            return;
        }
        for (b, c) in &other.terms {
            self.add_term(*b, c * factor);
        }
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Self::zero(self.dim);
        }
        CliffordElement {
            dim: self.dim,
            terms: self.terms.iter().map(|(b, c)| (*b, c * factor)).collect(),
        }
    }

    /// Checked geometric product.
    pub fn try_mul(&self, other: &CliffordElement) -> Result<CliffordElement> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { left: self.dim, right: other.dim });
        }
        let mut out = Self::zero(self.dim);
        for (ba, ca) in &self.terms {
            for (bb, cb) in &other.terms {
                let (blade, negative) = ba.product(*bb);
                let c = ca * cb;
                out.add_term(blade, if negative { -c } else { c });
            }
        }
        Ok(out)
    }

    /// e_A · self.
    pub fn left_mul_blade(&self, blade: Blade) -> Self {
        let mut out = Self::zero(self.dim);
        for (b, c) in &self.terms {
            let (r, negative) = blade.product(*b);
            out.add_term(r, if negative { -c.clone() } else { c.clone() });
        }
        out
    }

    /// The conjugation anti-involution: conj(e_j) = -e_j and
    /// conj(uv) = conj(v) conj(u).
    pub fn conjugate(&self) -> Self {
        CliffordElement {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(b, c)| (*b, if b.conjugation_negates() { -c.clone() } else { c.clone() }))
                .collect(),
        }
    }

    /// Keeps exactly the blades of cardinality `k`.
    pub fn grade_project(&self, k: usize) -> Self {
        CliffordElement {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| b.grade() == k)
                .map(|(b, c)| (*b, c.clone()))
                .collect(),
        }
    }

    /// True when every stored blade has grade 1.
    pub fn is_vector(&self) -> bool {
        self.terms.keys().all(|b| b.grade() == 1)
    }

    /// Coordinates of a grade-1 element.
    pub fn vector_coords(&self) -> Result<Vec<Rational>> {
        if !self.is_vector() {
            return Err(Error::NonVector);
        }
        Ok((1..=self.dim).map(|j| self.coeff(Blade::generator(j))).collect())
    }

    /// u ∧ v = (uv - vu)/2 for grade-1 inputs.
    pub fn wedge_vectors(u: &CliffordElement, v: &CliffordElement) -> Result<CliffordElement> {
        if !u.is_vector() || !v.is_vector() {
            return Err(Error::NonVector);
        }
        let uv = u.try_mul(v)?;
        let vu = v.try_mul(u)?;
        Ok((&uv - &vu).scale(&Rational::new(1.into(), 2.into())))
    }
}

fn assert_same_dim(a: usize, b: usize) {
    assert_eq!(a, b, "Clifford dimension mismatch: {a} vs {b}");
}

impl fmt::Debug for CliffordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for CliffordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (b, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if *b == Blade::SCALAR {
                write!(f, "{}", format_rational(c))?;
            } else {
                write!(f, "({}){}", format_rational(c), b)?;
            }
        }
        Ok(())
    }
}

impl Add for &CliffordElement {
    type Output = CliffordElement;
    fn add(self, rhs: &CliffordElement) -> CliffordElement {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Sub for &CliffordElement {
    type Output = CliffordElement;
    fn sub(self, rhs: &CliffordElement) -> CliffordElement {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Rational::one());
        out
    }
}

impl Neg for &CliffordElement {
    type Output = CliffordElement;
    fn neg(self) -> CliffordElement {
        self.scale(&-Rational::one())
    }
}

/// Geometric product. Panics on dimension mismatch; see [`CliffordElement::try_mul`].
impl Mul for &CliffordElement {
    type Output = CliffordElement;
    fn mul(self, rhs: &CliffordElement) -> CliffordElement {
        match self.try_mul(rhs) {
            Ok(p) => p,
            Err(e) => panic!("{e}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};
    use proptest::prelude::*;

    fn e(dim: usize, idx: &[usize]) -> CliffordElement {
        CliffordElement::from_blade(dim, Blade::from_indices(idx).unwrap(), int(1))
    }

    /// Multiplies two index words by bubble-sorting the concatenation and
    /// cancelling equal neighbours with e_j^2 = -1.
    fn brute_word_product(a: &[usize], b: &[usize]) -> (Vec<usize>, i32) {
        let mut word: Vec<usize> = a.iter().chain(b).copied().collect();
        let mut sign = 1;
        loop {
            let mut changed = false;
            let mut i = 0;
            while i + 1 < word.len() {
                if word[i] > word[i + 1] {
                    word.swap(i, i + 1);
                    sign = -sign;
                    changed = true;
                } else if word[i] == word[i + 1] {
                    word.drain(i..i + 2);
                    sign = -sign;
                    changed = true;
                    continue;
                }
                i += 1;
            }
            if !changed {
                break;
            }
        }
        (word, sign)
    }

    #[test]
    fn blade_table_matches_brute_force() {
        for m in 1..=3usize {
            let blades: Vec<u32> = (0..(1u32 << m)).collect();
            for &a in &blades {
                for &b in &blades {
                    let ba = Blade(a);
                    let bb = Blade(b);
                    let ia: Vec<usize> = ba.indices().collect();
                    let ib: Vec<usize> = bb.indices().collect();
                    let (word, sign) = brute_word_product(&ia, &ib);
                    let (r, negative) = ba.product(bb);
                    assert_eq!(r.indices().collect::<Vec<_>>(), word);
                    assert_eq!(if negative { -1 } else { 1 }, sign, "{ba} * {bb}");
                }
            }
        }
    }

    #[test]
    fn generator_relations() {
        let e1 = e(2, &[1]);
        let e2 = e(2, &[2]);
        assert_eq!(&e1 * &e1, CliffordElement::scalar(2, int(-1)));
        assert_eq!(&e1 * &e2, e(2, &[1, 2]));
        assert_eq!(&e2 * &e1, -&e(2, &[1, 2]));
        let one = CliffordElement::one(2);
        assert_eq!(&(&one + &e1) * &(&one - &e1), CliffordElement::scalar(2, int(2)));
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let a = CliffordElement::one(2);
        let b = CliffordElement::one(3);
        assert_eq!(a.try_mul(&b), Err(Error::DimensionMismatch { left: 2, right: 3 }));
    }

    #[test]
    fn conjugation_examples() {
        assert_eq!(CliffordElement::one(3).conjugate(), CliffordElement::one(3));
        assert_eq!(e(3, &[1, 2]).conjugate(), -&e(3, &[1, 2]));
        let x = CliffordElement::from_terms(
            3,
            [
                (Blade::SCALAR, int(2)),
                (Blade::generator(1), int(3)),
                (Blade::generator(2), frac(1, 2)),
                (Blade::generator(3), int(-1)),
            ],
        );
        let expect = CliffordElement::from_terms(
            3,
            [
                (Blade::SCALAR, int(2)),
                (Blade::generator(1), int(-3)),
                (Blade::generator(2), frac(-1, 2)),
                (Blade::generator(3), int(1)),
            ],
        );
        assert_eq!(x.conjugate(), expect);
    }

    #[test]
    fn grade_projection_examples() {
        let x = &CliffordElement::one(2) + &e(2, &[1]);
        assert_eq!(x.grade_project(0), CliffordElement::one(2));
        assert_eq!(e(2, &[1, 2]).grade_project(2), e(2, &[1, 2]));
        assert!(e(2, &[1, 2]).grade_project(0).is_zero());
    }

    #[test]
    fn wedge_examples() {
        let e1 = e(3, &[1]);
        let e2 = e(3, &[2]);
        assert_eq!(CliffordElement::wedge_vectors(&e1, &e2).unwrap(), e(3, &[1, 2]));
        let u = CliffordElement::vector(&[int(1), int(2), frac(-1, 3)]);
        assert!(CliffordElement::wedge_vectors(&u, &u).unwrap().is_zero());
        let s = &CliffordElement::wedge_vectors(&e1, &e2).unwrap()
            + &CliffordElement::wedge_vectors(&e2, &e1).unwrap();
        assert!(s.is_zero());
        assert_eq!(
            CliffordElement::wedge_vectors(&e(3, &[1, 2]), &e1),
            Err(Error::NonVector)
        );
    }

    #[test]
    fn blade_order_is_grade_then_lex() {
        let b = |v: &[usize]| Blade::from_indices(v).unwrap();
        assert!(b(&[]) < b(&[3]));
        assert!(b(&[3]) < b(&[1, 2]));
        assert!(b(&[1, 2]) < b(&[1, 3]));
        assert!(b(&[1, 3]) < b(&[2, 3]));
        assert!(Blade::from_indices(&[2, 1]).is_err());
    }

    fn arb_element(m: usize) -> impl Strategy<Value = CliffordElement> {
        prop::collection::vec((0u32..(1 << m), -5i64..=5, 1i64..=3), 0..6).prop_map(move |ts| {
            CliffordElement::from_terms(m, ts.into_iter().map(|(b, n, d)| (Blade(b), frac(n, d))))
        })
    }

    fn arb_triple() -> impl Strategy<Value = (CliffordElement, CliffordElement, CliffordElement)> {
        (1usize..=5).prop_flat_map(|m| (arb_element(m), arb_element(m), arb_element(m)))
    }

    proptest! {
        #[test]
        fn associativity((a, b, c) in arb_triple()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn conjugation_reverses_products((a, b, _c) in arb_triple()) {
            prop_assert_eq!((&a * &b).conjugate(), &b.conjugate() * &a.conjugate());
        }

        #[test]
        fn vector_square_is_minus_norm(coords in prop::collection::vec((-7i64..=7, 1i64..=4), 1..=5)) {
            let v: Vec<Rational> = coords.iter().map(|(n, d)| frac(*n, *d)).collect();
            let u = CliffordElement::vector(&v);
            let norm: Rational = v.iter().map(|c| c * c).sum();
            prop_assert_eq!(&u * &u, CliffordElement::scalar(v.len(), -norm));
        }

        #[test]
        fn grade_projections_sum_to_element((a, _b, _c) in arb_triple()) {
            let mut sum = CliffordElement::zero(a.dim());
            for k in 0..=a.dim() {
                sum = &sum + &a.grade_project(k);
            }
            prop_assert_eq!(sum, a);
        }
    }
}
