//! Root systems with multiplicity functions, the Dunkl operators
//! T_0 = ∂_0, T_i = ∂_i + Σ_{α∈R+} κ(α) α_i ρ_α, the Dunkl Laplacian and
//! the Fischer pairing.
//!
//! Roots live in the x̲-space R^m, so reflections never touch x_0.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{CliffPoly, LinearSubstitution};
use crate::rational::{format_rational, is_negative_half_integer, Rational};

/// Outcome of checking a candidate root system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<String>,
    /// γ_κ = Σ_{α∈R+} κ(α), when κ is aligned with the roots.
    pub gamma: Option<Rational>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Whether κ avoids the singular set of the Fischer pairing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Singularity {
    NonSingular,
    /// Indices of the positive roots whose κ lies in {-1/2 - n : n ≥ 0}.
    Singular(Vec<usize>),
    /// The root system is not a product of rank-one factors, so the
    /// rank-one criterion does not apply.
    Undecided(String),
}

/// A validated positive subsystem R+ ⊂ R^m with W-invariant κ.
#[derive(Clone, PartialEq, Eq)]
pub struct RootSystem {
    m: usize,
    roots: Vec<Vec<Rational>>,
    kappa: Vec<Rational>,
    reflections: Vec<LinearSubstitution>,
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn proportional(a: &[Rational], b: &[Rational]) -> bool {
    // a and b nonzero: proportional iff all 2x2 minors vanish
    for i in 0..a.len() {
        for j in (i + 1)..a.len() {
            if &a[i] * &b[j] != &a[j] * &b[i] {
                return false;
            }
        }
    }
    true
}

fn reflect(alpha: &[Rational], beta: &[Rational]) -> Vec<Rational> {
    let two = Rational::from_integer(2.into());
    let c = two * dot(alpha, beta) / dot(alpha, alpha);
    beta.iter().zip(alpha).map(|(b, a)| b - &c * a).collect()
}

fn format_vec(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(format_rational).collect();
    format!("({})", parts.join(", "))
}

/// Normalizes roots given either in R^m or in R^{m+1} with a vanishing
/// x_0 component; records a violation for anything else.
fn normalize_roots(m: usize, roots: &[Vec<Rational>], violations: &mut Vec<String>) -> Vec<Vec<Rational>> {
    let mut out = Vec::with_capacity(roots.len());
    for (k, r) in roots.iter().enumerate() {
        if r.len() == m {
            out.push(r.clone());
        } else if r.len() == m + 1 {
            if !r[0].is_zero() {
                violations.push(format!(
                    "root #{k} {} has a nonzero x_0 component",
                    format_vec(r)
                ));
            }
            out.push(r[1..].to_vec());
        } else {
            violations.push(format!("root #{k} has length {}, expected {m}", r.len()));
            out.push(vec![Rational::zero(); m]);
        }
    }
    out
}

/// Checks nonzero roots, no proportional pair, closure σ_α R+ ⊂ R+ ∪ -R+,
/// W-invariance of κ, and that the roots avoid x_0. Never fails; collects
/// all violations.
pub fn validate_root_system(m: usize, roots: &[Vec<Rational>], kappa: &[Rational]) -> ValidationReport {
    let mut violations = Vec::new();
    let roots = normalize_roots(m, roots, &mut violations);
    let gamma = if kappa.len() == roots.len() {
        Some(kappa.iter().sum())
    } else {
        violations.push(format!(
            "{} multiplicities given for {} positive roots",
            kappa.len(),
            roots.len()
        ));
        None
    };
    let nonzero: Vec<bool> = roots.iter().map(|r| r.iter().any(|c| !c.is_zero())).collect();
    for (k, nz) in nonzero.iter().enumerate() {
        if !nz {
            violations.push(format!("root #{k} is zero"));
        }
    }
    for i in 0..roots.len() {
        for j in (i + 1)..roots.len() {
            if nonzero[i] && nonzero[j] && proportional(&roots[i], &roots[j]) {
                violations.push(format!(
                    "roots {} and {} are proportional",
                    format_vec(&roots[i]),
                    format_vec(&roots[j])
                ));
            }
        }
    }
    for (i, alpha) in roots.iter().enumerate() {
        if !nonzero[i] {
            continue;
        }
        for (j, beta) in roots.iter().enumerate() {
            if !nonzero[j] {
                continue;
            }
            let image = reflect(alpha, beta);
            let neg: Vec<Rational> = image.iter().map(|c| -c).collect();
            match roots.iter().position(|r| *r == image || *r == neg) {
                None => violations.push(format!(
                    "reflection in {} maps {} to {}, which is not a root",
                    format_vec(alpha),
                    format_vec(beta),
                    format_vec(&image)
                )),
                Some(k) => {
                    if kappa.len() == roots.len() && kappa[k] != kappa[j] {
                        violations.push(format!(
                            "kappa is not W-invariant: kappa{} = {} but kappa{} = {}",
                            format_vec(beta),
                            format_rational(&kappa[j]),
                            format_vec(&roots[k]),
                            format_rational(&kappa[k])
                        ));
                    }
                }
            }
        }
    }
    ValidationReport { violations, gamma }
}

/// True for each κ_i in the rank-one singular set {-1/2 - n : n ≥ 0}.
pub fn singular_check_rank1(kappa_values: &[Rational]) -> Vec<bool> {
    kappa_values.iter().map(is_negative_half_integer).collect()
}

impl RootSystem {
    pub fn new(m: usize, roots: Vec<Vec<Rational>>, kappa: Vec<Rational>) -> Result<Self> {
        let report = validate_root_system(m, &roots, &kappa);
        if !report.is_valid() {
            return Err(Error::InvalidRootSystem(report.violations.join("; ")));
        }
        let mut ignored = Vec::new();
        let roots = normalize_roots(m, &roots, &mut ignored);
        let reflections = roots
            .iter()
            .map(|r| LinearSubstitution::reflection(r))
            .collect::<Result<Vec<_>>>()?;
        Ok(RootSystem { m, roots, kappa, reflections })
    }

    /// R+ = {e_1, ..., e_m} with κ(e_i) = kappa[i - 1]; m = kappa.len().
    pub fn coordinate(kappa: Vec<Rational>) -> Self {
        let m = kappa.len();
        let roots = (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                    .collect()
            })
            .collect();
        RootSystem::new(m, roots, kappa).expect("coordinate root system is valid")
    }

    /// A single root e_axis in R^m (rank one acting on x_axis).
    pub fn rank_one(m: usize, axis: usize, kappa: Rational) -> Self {
        assert!((1..=m).contains(&axis), "axis {axis} out of range");
        let root = (1..=m)
            .map(|j| if j == axis { Rational::one() } else { Rational::zero() })
            .collect();
        RootSystem::new(m, vec![root], vec![kappa]).expect("rank-one root system is valid")
    }

    /// Type A_{m-1}: roots e_i - e_j (i < j) with one common multiplicity.
    pub fn type_a(m: usize, kappa: Rational) -> Self {
        let mut roots = Vec::new();
        for i in 0..m {
            for j in (i + 1)..m {
                let mut r = vec![Rational::zero(); m];
                r[i] = Rational::one();
                r[j] = -Rational::one();
                roots.push(r);
            }
        }
        let k = vec![kappa; roots.len()];
        RootSystem::new(m, roots, k).expect("type A root system is valid")
    }

    /// No roots: all Dunkl operators are partial derivatives.
    pub fn trivial(m: usize) -> Self {
        RootSystem { m, roots: Vec::new(), kappa: Vec::new(), reflections: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.m
    }

    pub fn roots(&self) -> &[Vec<Rational>] {
        &self.roots
    }

    pub fn kappa(&self) -> &[Rational] {
        &self.kappa
    }

    /// γ_κ = Σ_{α∈R+} κ(α).
    pub fn gamma(&self) -> Rational {
        self.kappa.iter().sum()
    }

    pub fn is_kappa_zero(&self) -> bool {
        self.kappa.iter().all(Zero::is_zero)
    }

    pub fn reflection(&self, k: usize) -> &LinearSubstitution {
        &self.reflections[k]
    }

    /// Pairwise orthogonal roots, i.e. W ≅ Z_2^k.
    pub fn is_rank_one_product(&self) -> bool {
        for i in 0..self.roots.len() {
            for j in (i + 1)..self.roots.len() {
                if !dot(&self.roots[i], &self.roots[j]).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Rank-one singularity test per positive root; only defined for
    /// products of rank-one systems.
    pub fn singular_check(&self) -> Result<Vec<bool>> {
        if !self.is_rank_one_product() {
            return Err(Error::UnsupportedGroup(
                "singular set is only checkable for products of rank-one systems".into(),
            ));
        }
        Ok(singular_check_rank1(&self.kappa))
    }

    pub fn singularity(&self) -> Singularity {
        if self.is_kappa_zero() {
            return Singularity::NonSingular;
        }
        match self.singular_check() {
            Ok(flags) => {
                let bad: Vec<usize> = flags
                    .iter()
                    .enumerate()
                    .filter(|(_, s)| **s)
                    .map(|(k, _)| k)
                    .collect();
                if bad.is_empty() {
                    Singularity::NonSingular
                } else {
                    Singularity::Singular(bad)
                }
            }
            Err(e) => Singularity::Undecided(e.to_string()),
        }
    }

    /// Errors with `SingularKappa` when κ is known to be singular. An
    /// undecidable case passes; callers can inspect [`RootSystem::singularity`].
    pub fn ensure_nonsingular(&self) -> Result<()> {
        match self.singularity() {
            Singularity::Singular(idx) => {
                let items: Vec<String> = idx
                    .iter()
                    .map(|&k| {
                        format!(
                            "kappa{} = {}",
                            format_vec(&self.roots[k]),
                            format_rational(&self.kappa[k])
                        )
                    })
                    .collect();
                Err(Error::SingularKappa(items.join(", ")))
            }
            _ => Ok(()),
        }
    }

    /// The same roots with a new multiplicity function.
    pub fn with_kappa(&self, kappa: Vec<Rational>) -> Result<Self> {
        RootSystem::new(self.m, self.roots.clone(), kappa)
    }

    fn check_dim(&self, p: &CliffPoly) -> Result<()> {
        if p.dim() != self.m {
            return Err(Error::DimensionMismatch { left: self.m, right: p.dim() });
        }
        Ok(())
    }

    /// ρ_α p for the k-th positive root.
    pub fn rho(&self, k: usize, p: &CliffPoly) -> Result<CliffPoly> {
        self.check_dim(p)?;
        let reflected = p.substitute_linear(&self.reflections[k])?;
        (p - &reflected).divide_by_linear_form(&self.roots[k])
    }

    /// Σ_{α∈R+} κ(α) α_i ρ_α p for every i = 1..m, sharing the ρ_α p.
    fn difference_terms(&self, p: &CliffPoly) -> Result<Vec<CliffPoly>> {
        let mut out = vec![CliffPoly::zero(self.m); self.m];
        for (k, alpha) in self.roots.iter().enumerate() {
            if self.kappa[k].is_zero() {
                continue;
            }
            let r = self.rho(k, p)?;
            for i in 0..self.m {
                if !alpha[i].is_zero() {
                    out[i].add_scaled(&r, &(&self.kappa[k] * &alpha[i]));
                }
            }
        }
        Ok(out)
    }

    /// T_i p for i in 0..=m.
    pub fn dunkl(&self, i: usize, p: &CliffPoly) -> Result<CliffPoly> {
        self.check_dim(p)?;
        if i > self.m {
            return Err(Error::IndexOutOfRange { index: i, m: self.m });
        }
        let mut out = p.partial(i);
        if i == 0 {
            return Ok(out);
        }
        for (k, alpha) in self.roots.iter().enumerate() {
            let w = &self.kappa[k] * &alpha[i - 1];
            if w.is_zero() {
                continue;
            }
            out.add_scaled(&self.rho(k, p)?, &w);
        }
        Ok(out)
    }

    /// [T_1 p, ..., T_m p].
    pub fn dunkl_all(&self, p: &CliffPoly) -> Result<Vec<CliffPoly>> {
        self.check_dim(p)?;
        let mut out = self.difference_terms(p)?;
        for (i, t) in out.iter_mut().enumerate() {
            t.add_assign_ref(&p.partial(i + 1));
        }
        Ok(out)
    }

    /// Δ_h = Σ_{j=0}^m T_j².
    pub fn laplacian(&self, p: &CliffPoly) -> Result<CliffPoly> {
        let mut out = p.partial(0).partial(0);
        for (j, t) in self.dunkl_all(p)?.into_iter().enumerate() {
            out.add_assign_ref(&self.dunkl(j + 1, &t)?);
        }
        Ok(out)
    }

    /// [p, q]_κ = (p(T) q)(0) for scalar-valued p, q.
    pub fn fischer_product(&self, p: &CliffPoly, q: &CliffPoly) -> Result<Rational> {
        self.check_dim(p)?;
        self.check_dim(q)?;
        if !p.is_scalar_valued() || !q.is_scalar_valued() {
            return Err(Error::NonScalar);
        }
        let mut total = Rational::zero();
        for (mono, c) in p.terms() {
            let mut r = q.clone();
            for (i, &e) in mono.exps().iter().enumerate() {
                for _ in 0..e {
                    r = self.dunkl(i, &r)?;
                }
            }
            total += c.scalar_part() * r.constant_term().scalar_part();
        }
        Ok(total)
    }
}

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RootSystem(m = {}; ", self.m)?;
        for (r, k) in self.roots.iter().zip(&self.kappa) {
            write!(f, "{}:{} ", format_vec(r), format_rational(k))?;
        }
        write!(f, ")")
    }
}

/// ρ_α p = (p - p∘σ_α) / <α, x̲> for an arbitrary nonzero α ∈ R^m.
pub fn rho(alpha: &[Rational], p: &CliffPoly) -> Result<CliffPoly> {
    if alpha.len() != p.dim() {
        return Err(Error::DimensionMismatch { left: alpha.len(), right: p.dim() });
    }
    let s = LinearSubstitution::reflection(alpha)?;
    (p - &p.substitute_linear(&s)?).divide_by_linear_form(alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::CliffordElement;
    use crate::random::PolySampler;
    use crate::rational::{frac, int};
    use proptest::prelude::*;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    fn x(m: usize, i: usize) -> CliffPoly {
        CliffPoly::var(m, i)
    }

    #[test]
    fn validation_examples() {
        let coord = validate_root_system(3, &[v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[0, 0, 1])], &v(&[0, 0, -1]));
        assert!(coord.is_valid());
        assert_eq!(coord.gamma, Some(int(-1)));

        let prop = validate_root_system(1, &[v(&[1]), v(&[2])], &v(&[0, 0]));
        assert!(!prop.is_valid());

        let a2 = [v(&[1, -1, 0]), v(&[0, 1, -1]), v(&[1, 0, -1])];
        assert!(validate_root_system(3, &a2, &vec![frac(1, 3); 3]).is_valid());
        let uneven = validate_root_system(3, &a2, &[int(1), int(0), int(0)]);
        assert!(!uneven.is_valid());
        let open = validate_root_system(3, &a2[..2], &[int(0), int(0)]);
        assert!(!open.is_valid());
        assert!(!validate_root_system(2, &[v(&[0, 0])], &v(&[1])).is_valid());
        assert!(!validate_root_system(2, &[v(&[1, 0])], &v(&[1, 2])).is_valid());
        // with an explicit zero x_0 slot
        assert!(validate_root_system(2, &[v(&[0, 1, 0])], &v(&[1])).is_valid());
        assert!(!validate_root_system(2, &[v(&[1, 1, 0])], &v(&[1])).is_valid());
    }

    #[test]
    fn rank_one_dunkl() {
        for k in [int(0), frac(1, 3), int(-1), frac(-5, 7)] {
            let rs = RootSystem::rank_one(1, 1, k.clone());
            let expected = CliffPoly::scalar_constant(1, int(1) + int(2) * &k);
            assert_eq!(rs.dunkl(1, &x(1, 1)).unwrap(), expected);
            assert_eq!(rs.dunkl(1, &x(1, 1).pow(2)).unwrap(), x(1, 1).scale(&int(2)));
        }
        let rs = RootSystem::coordinate(v(&[0, 0, -1]));
        assert_eq!(rs.dunkl(3, &x(3, 3)).unwrap(), CliffPoly::scalar_constant(3, int(-1)));
        assert_eq!(rs.dunkl(0, &x(3, 0).pow(2)).unwrap(), x(3, 0).scale(&int(2)));
        assert!(matches!(rs.dunkl(4, &x(3, 0)), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn zero_kappa_gives_partials() {
        let mut s = PolySampler::new(1);
        let rs = RootSystem::type_a(3, int(0));
        for _ in 0..5 {
            let p = s.poly(3, 4, 4);
            for i in 0..=3 {
                assert_eq!(rs.dunkl(i, &p).unwrap(), p.partial(i));
            }
        }
    }

    #[test]
    fn rho_examples() {
        let m = 2;
        let e1 = v(&[1, 0]);
        assert_eq!(rho(&e1, &x(m, 1)).unwrap(), CliffPoly::scalar_constant(m, int(2)));
        assert!(rho(&e1, &CliffPoly::vector_norm_squared(m)).unwrap().is_zero());
        let mut s = PolySampler::new(2);
        for _ in 0..5 {
            let p = s.poly(m, 5, 4);
            let alpha = s.root(m);
            let r = rho(&alpha, &p).unwrap();
            assert!(rho(&alpha, &r).unwrap().is_zero());
            let refl = LinearSubstitution::reflection(&alpha).unwrap();
            assert_eq!(r.substitute_linear(&refl).unwrap(), r);
            assert_eq!(rho(&alpha, &p.substitute_linear(&refl).unwrap()).unwrap(), -&r);
        }
    }

    #[test]
    fn laplacian_examples() {
        let m = 3;
        let x2 = CliffPoly::paravector(m).pow(2);
        let flat = RootSystem::trivial(m);
        assert_eq!(flat.laplacian(&x2).unwrap(), CliffPoly::scalar_constant(m, int(-4)));
        let rs = RootSystem::rank_one(m, 3, int(-1));
        let p = x(m, 0).mul_var(3).left_mul(&CliffordElement::generator(m, 3)).scale(&int(2));
        assert!(rs.laplacian(&p).unwrap().is_zero());
        assert!(rs.laplacian(&CliffPoly::one(m)).unwrap().is_zero());
    }

    #[test]
    fn fischer_examples() {
        let kappa = vec![frac(1, 3), int(-1), frac(2, 5)];
        let rs = RootSystem::coordinate(kappa.clone());
        for i in 1..=3 {
            for j in 1..=3 {
                let expected = if i == j { int(1) + int(2) * &kappa[i - 1] } else { int(0) };
                assert_eq!(rs.fischer_product(&x(3, i), &x(3, j)).unwrap(), expected);
            }
        }
        assert_eq!(rs.fischer_product(&CliffPoly::one(3), &CliffPoly::one(3)).unwrap(), int(1));
        let sing = RootSystem::rank_one(1, 1, frac(-1, 2));
        assert_eq!(sing.fischer_product(&x(1, 1), &x(1, 1)).unwrap(), int(0));
        let vec_valued = CliffPoly::vector_variable(3);
        assert_eq!(rs.fischer_product(&vec_valued, &x(3, 1)), Err(Error::NonScalar));
    }

    #[test]
    fn singular_checks() {
        assert_eq!(singular_check_rank1(&v(&[0, 0, -1])), vec![false; 3]);
        assert_eq!(singular_check_rank1(&[frac(-1, 2)]), vec![true]);
        assert_eq!(singular_check_rank1(&[frac(-3, 2)]), vec![true]);
        assert_eq!(singular_check_rank1(&[frac(1, 2)]), vec![false]);
        let rs = RootSystem::rank_one(1, 1, frac(-1, 2));
        assert_eq!(rs.singularity(), Singularity::Singular(vec![0]));
        assert!(matches!(rs.ensure_nonsingular(), Err(Error::SingularKappa(_))));
        let a = RootSystem::type_a(3, frac(-1, 3));
        assert!(matches!(a.singular_check(), Err(Error::UnsupportedGroup(_))));
        assert!(matches!(a.singularity(), Singularity::Undecided(_)));
        assert!(a.ensure_nonsingular().is_ok());
        assert_eq!(RootSystem::type_a(3, int(0)).singularity(), Singularity::NonSingular);
    }

    fn systems() -> Vec<RootSystem> {
        vec![
            RootSystem::coordinate(vec![frac(1, 3), int(-1), frac(3, 4)]),
            RootSystem::type_a(3, frac(-1, 3)),
            RootSystem::new(
                2,
                vec![v(&[1, 1]), v(&[1, -1])],
                vec![frac(2, 3), frac(-1, 5)],
            )
            .unwrap(),
        ]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(12))]

        #[test]
        fn dunkl_operators_commute(seed in any::<u64>(), which in 0usize..3) {
            let rs = systems().swap_remove(which);
            let m = rs.dim();
            let p = PolySampler::new(seed).poly(m, 6, 4);
            for i in 1..=m {
                for j in (i + 1)..=m {
                    let a = rs.dunkl(i, &rs.dunkl(j, &p).unwrap()).unwrap();
                    let b = rs.dunkl(j, &rs.dunkl(i, &p).unwrap()).unwrap();
                    prop_assert_eq!(a, b);
                }
            }
        }

        #[test]
        fn dunkl_lowers_degree(seed in any::<u64>(), which in 0usize..3) {
            let rs = systems().swap_remove(which);
            let m = rs.dim();
            let p = PolySampler::new(seed).poly(m, 5, 4).homogeneous_component(4);
            for (i, t) in rs.dunkl_all(&p).unwrap().into_iter().enumerate() {
                prop_assert!(t.is_zero() || (t.is_homogeneous() && t.degree() == Some(3)));
                prop_assert_eq!(t, rs.dunkl(i + 1, &p).unwrap());
            }
        }

        #[test]
        fn fischer_symmetric(seed in any::<u64>(), which in 0usize..3) {
            let rs = systems().swap_remove(which);
            let m = rs.dim();
            let mut s = PolySampler::new(seed);
            let p = s.scalar_poly(m, 3, 3);
            let q = s.scalar_poly(m, 3, 3);
            prop_assert_eq!(rs.fischer_product(&p, &q).unwrap(), rs.fischer_product(&q, &p).unwrap());
        }
    }
}
