//! Dirac-type operators built on the Dunkl operators: D̲_h, D_h, the
//! spherical operators Γ_ω, Ψ and Γ̃_ω, the scaled slice operator Θ̄, and
//! an exact solver for homogeneous Dunkl-monogenic polynomials.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::clifford::{Blade, CliffordElement};
use crate::dunkl::{RootSystem, Singularity};
use crate::error::{Error, Result};
use crate::linalg::{self, Echelon};
use crate::poly::{CliffPoly, Monomial};
use crate::rational::{int, Rational};

/// Operators addressable by name from files and the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OperatorTag {
    DiracM,
    CauchyRiemann,
    GammaSph,
    Psi,
    GammaTildeRho,
    GammaTildePsi,
    ThetaScaled,
    Laplacian,
    HyperbolicL,
}

impl OperatorTag {
    pub const ALL: [OperatorTag; 9] = [
        OperatorTag::DiracM,
        OperatorTag::CauchyRiemann,
        OperatorTag::GammaSph,
        OperatorTag::Psi,
        OperatorTag::GammaTildeRho,
        OperatorTag::GammaTildePsi,
        OperatorTag::ThetaScaled,
        OperatorTag::Laplacian,
        OperatorTag::HyperbolicL,
    ];

    pub fn name(self) -> &'static str {
        match self {
            OperatorTag::DiracM => "dirac_m",
            OperatorTag::CauchyRiemann => "cauchy_riemann",
            OperatorTag::GammaSph => "gamma_sph",
            OperatorTag::Psi => "psi",
            OperatorTag::GammaTildeRho => "gamma_tilde_rho",
            OperatorTag::GammaTildePsi => "gamma_tilde_psi",
            OperatorTag::ThetaScaled => "theta_scaled",
            OperatorTag::Laplacian => "laplacian",
            OperatorTag::HyperbolicL => "hyperbolic_L",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|t| t.name() == name)
    }

    /// Whether the operator depends on the root system and κ.
    pub fn needs_root_system(self) -> bool {
        !matches!(
            self,
            OperatorTag::GammaSph | OperatorTag::ThetaScaled | OperatorTag::HyperbolicL
        )
    }

    /// Applies the operator; κ-free operators ignore `rs`.
    pub fn apply(self, rs: &RootSystem, p: &CliffPoly) -> Result<CliffPoly> {
        match self {
            OperatorTag::DiracM => dirac_m(rs, p),
            OperatorTag::CauchyRiemann => cauchy_riemann(rs, p),
            OperatorTag::GammaSph => Ok(gamma_sph(p)),
            OperatorTag::Psi => psi(rs, p),
            OperatorTag::GammaTildeRho => gamma_tilde(rs, p, GammaRoute::Rho),
            OperatorTag::GammaTildePsi => gamma_tilde(rs, p, GammaRoute::Psi),
            OperatorTag::ThetaScaled => Ok(theta_scaled(p)),
            OperatorTag::Laplacian => rs.laplacian(p),
            OperatorTag::HyperbolicL => crate::fueter::hyperbolic_l(p),
        }
    }
}

/// The two algebraic routes to Γ̃_ω.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GammaRoute {
    /// Γ_ω - x̲ Σ κ(α) α ρ_α
    Rho,
    /// γ_κ + Γ_ω + Ψ
    Psi,
}

/// D̲_h p = Σ_{j=1}^m e_j T_j p.
pub fn dirac_m(rs: &RootSystem, p: &CliffPoly) -> Result<CliffPoly> {
    let mut out = CliffPoly::zero(p.dim());
    for (j, t) in rs.dunkl_all(p)?.into_iter().enumerate() {
        out.add_assign_ref(&t.left_mul_blade(Blade::generator(j + 1)));
    }
    Ok(out)
}

/// D_h p = ∂_0 p + D̲_h p.
pub fn cauchy_riemann(rs: &RootSystem, p: &CliffPoly) -> Result<CliffPoly> {
    Ok(&p.partial(0) + &dirac_m(rs, p)?)
}

/// The classical generalized Cauchy-Riemann operator ∂̄_x = ∂_0 + Σ e_j ∂_j.
pub fn classical_cauchy_riemann(p: &CliffPoly) -> CliffPoly {
    let mut out = p.partial(0);
    for j in 1..=p.dim() {
        out.add_assign_ref(&p.partial(j).left_mul_blade(Blade::generator(j)));
    }
    out
}

/// Γ_ω p = -Σ_{i<j} e_i e_j (x_i ∂_j - x_j ∂_i) p.
pub fn gamma_sph(p: &CliffPoly) -> CliffPoly {
    let m = p.dim();
    let mut out = CliffPoly::zero(m);
    for i in 1..=m {
        for j in (i + 1)..=m {
            let ang = &p.partial(j).mul_var(i) - &p.partial(i).mul_var(j);
            let (blade, _) = Blade::generator(i).product(Blade::generator(j));
            out.add_scaled(&ang.left_mul_blade(blade), &-Rational::one());
        }
    }
    out
}

/// x̲ ∧ α as a polynomial: Σ_i x_i (e_i ∧ α).
pub fn wedge_with_root(m: usize, alpha: &[Rational]) -> Result<CliffPoly> {
    let a = CliffordElement::vector(alpha);
    let mut out = CliffPoly::zero(m);
    for i in 1..=m {
        let w = CliffordElement::wedge_vectors(&CliffordElement::generator(m, i), &a)?;
        out.add_assign_ref(&CliffPoly::var(m, i).left_mul(&w));
    }
    Ok(out)
}

/// Ψ p = -Σ κ(α) (x̲ ∧ α) ρ_α p - Σ κ(α) p∘σ_α.
pub fn psi(rs: &RootSystem, p: &CliffPoly) -> Result<CliffPoly> {
    let m = p.dim();
    let mut out = CliffPoly::zero(m);
    for (k, alpha) in rs.roots().iter().enumerate() {
        let kappa = &rs.kappa()[k];
        if kappa.is_zero() {
            continue;
        }
        let wedge = wedge_with_root(m, alpha)?;
        let r = rs.rho(k, p)?;
        out.add_scaled(&(&wedge * &r), &-kappa.clone());
        out.add_scaled(&p.substitute_linear(rs.reflection(k))?, &-kappa.clone());
    }
    Ok(out)
}

/// x̲ Σ κ(α) α ρ_α p.
fn root_correction(rs: &RootSystem, p: &CliffPoly) -> Result<CliffPoly> {
    let m = p.dim();
    let mut inner = CliffPoly::zero(m);
    for (k, alpha) in rs.roots().iter().enumerate() {
        let kappa = &rs.kappa()[k];
        if kappa.is_zero() {
            continue;
        }
        let r = rs.rho(k, p)?;
        let a = CliffordElement::vector(alpha).scale(kappa);
        inner.add_assign_ref(&r.left_mul(&a));
    }
    Ok(&CliffPoly::vector_variable(m) * &inner)
}

/// The Dunkl-spherical Dirac operator Γ̃_ω by either route.
pub fn gamma_tilde(rs: &RootSystem, p: &CliffPoly, route: GammaRoute) -> Result<CliffPoly> {
    match route {
        GammaRoute::Psi => {
            let mut out = p.scale(&rs.gamma());
            out.add_assign_ref(&gamma_sph(p));
            out.add_assign_ref(&psi(rs, p)?);
            Ok(out)
        }
        GammaRoute::Rho => Ok(&gamma_sph(p) - &root_correction(rs, p)?),
    }
}

/// Θ̄ p = |x̲|² ∂_0 p + x̲ Σ_{j≥1} x_j ∂_j p, the |x̲|²-multiple of θ̄.
pub fn theta_scaled(p: &CliffPoly) -> CliffPoly {
    let m = p.dim();
    let s = CliffPoly::vector_norm_squared(m);
    &(&s * &p.partial(0)) + &(&CliffPoly::vector_variable(m) * &p.vector_euler())
}

pub fn is_dunkl_monogenic(rs: &RootSystem, p: &CliffPoly) -> Result<bool> {
    Ok(cauchy_riemann(rs, p)?.is_zero())
}

pub fn is_monogenic(p: &CliffPoly) -> bool {
    classical_cauchy_riemann(p).is_zero()
}

/// Generators (as a right R_{0,m}-module) of the homogeneous degree-k
/// polynomials in x̲ annihilated by D̲_h.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonogenicBasis {
    pub degree: usize,
    pub generators: Vec<CliffPoly>,
    /// Monomial at which generator i has coefficient 1 and every other
    /// generator has coefficient 0.
    pub pivots: Vec<Monomial>,
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// dim of homogeneous degree-k polynomials in m variables.
pub fn homogeneous_dimension(m: usize, k: usize) -> usize {
    if m == 0 {
        return usize::from(k == 0);
    }
    binomial(k + m - 1, m - 1)
}

/// Degree-k monomials in x_1..x_m, highest graded-lex first.
fn vector_monomials(m: usize, k: usize) -> Vec<Monomial> {
    fn rec(m: usize, slot: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if slot == m {
            if left == 0 {
                out.push(Monomial::new(cur.clone()));
            }
            return;
        }
        for e in (0..=left).rev() {
            cur[slot] = e;
            rec(m, slot + 1, left - e, cur, out);
        }
        cur[slot] = 0;
    }
    let mut out = Vec::new();
    let mut cur = vec![0u32; m + 1];
    rec(m + 1, 1, k as u32, &mut cur, &mut out);
    out
}

fn all_blades(m: usize) -> Vec<Blade> {
    let mut b: Vec<Blade> = (0..(1u32 << m)).map(Blade::from_bits).collect();
    b.sort();
    b
}

/// Flattens polynomials into coordinate vectors over (monomial, blade).
struct Coordinates {
    index: BTreeMap<(Monomial, Blade), usize>,
}

impl Coordinates {
    fn new() -> Self {
        Coordinates { index: BTreeMap::new() }
    }

    fn register(&mut self, p: &CliffPoly) {
        for (mono, c) in p.terms() {
            for (b, _) in c.terms() {
                let n = self.index.len();
                self.index.entry((mono.clone(), *b)).or_insert(n);
            }
        }
    }

    fn len(&self) -> usize {
        self.index.len()
    }

    fn vector(&self, p: &CliffPoly) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.len()];
        for (mono, c) in p.terms() {
            for (b, r) in c.terms() {
                v[self.index[&(mono.clone(), *b)]] = r.clone();
            }
        }
        v
    }
}

/// Builds the row matrix [coords(columns[0]); ...] transposed into rows of
/// coordinates, so that `matrix · x` is the combination Σ x_k columns[k].
pub(crate) fn column_matrix(columns: &[CliffPoly]) -> (Vec<Vec<Rational>>, impl Fn(&CliffPoly) -> Vec<Rational>) {
    let mut coords = Coordinates::new();
    for c in columns {
        coords.register(c);
    }
    let vecs: Vec<Vec<Rational>> = columns.iter().map(|c| coords.vector(c)).collect();
    let rows = (0..coords.len())
        .map(|r| vecs.iter().map(|v| v[r].clone()).collect())
        .collect();
    let project = move |p: &CliffPoly| -> Vec<Rational> {
        let mut v = vec![Rational::zero(); coords.len()];
        for (mono, c) in p.terms() {
            for (b, r) in c.terms() {
                match coords.index.get(&(mono.clone(), *b)) {
                    Some(&i) => v[i] = r.clone(),
                    // outside the span of the columns: mark as unreachable
                    None => return Vec::new(),
                }
            }
        }
        v
    };
    (rows, project)
}

/// Homogeneous Dunkl-monogenic generators of degree k, by exact Gaussian
/// elimination on D̲_h : P_k ⊗ R_{0,m} → P_{k-1} ⊗ R_{0,m}.
pub fn monogenic_basis(rs: &RootSystem, k: usize) -> Result<MonogenicBasis> {
    if let Singularity::Singular(_) = rs.singularity() {
        rs.ensure_nonsingular()?;
    }
    let m = rs.dim();
    if k == 0 {
        let one = Monomial::one(m + 1);
        return Ok(MonogenicBasis {
            degree: 0,
            generators: vec![CliffPoly::one(m)],
            pivots: vec![one],
        });
    }
    let monos = vector_monomials(m, k);
    let blades = all_blades(m);
    let nb = blades.len();

    // unknown (μ, C) ↦ D̲_h(x^μ) e_C
    let mut images = Vec::with_capacity(monos.len() * nb);
    for mono in &monos {
        let x_mu = CliffPoly::from_terms(m, [(mono.clone(), CliffordElement::one(m))]);
        let d = dirac_m(rs, &x_mu)?;
        for b in &blades {
            images.push(d.right_mul(&CliffordElement::from_blade(m, *b, Rational::one())));
        }
    }
    let (matrix, _) = column_matrix(&images);
    let kernel = linalg::nullspace(&matrix, images.len());

    let generic = (homogeneous_dimension(m, k) - homogeneous_dimension(m, k - 1)) * nb;
    if kernel.len() != generic {
        return Err(Error::SingularKappa(format!(
            "kernel of the Dunkl-Dirac operator in degree {k} has real dimension {} instead of {generic}",
            kernel.len()
        )));
    }

    // choose pivot monomials whose coefficient map is a bijection onto R_{0,m}^r
    let column_of = |mi: usize, bi: usize| mi * nb + bi;
    let mut chosen: Vec<usize> = Vec::new();
    let mut rank = 0;
    for mi in 0..monos.len() {
        if rank == kernel.len() {
            break;
        }
        let mut trial = chosen.clone();
        trial.push(mi);
        let restricted: Vec<Vec<Rational>> = kernel
            .iter()
            .map(|v| {
                trial
                    .iter()
                    .flat_map(|&t| (0..nb).map(move |bi| (t, bi)))
                    .map(|(t, bi)| v[column_of(t, bi)].clone())
                    .collect()
            })
            .collect();
        let r = Echelon::new(&restricted, trial.len() * nb).rank();
        if r == rank + nb {
            chosen = trial;
            rank = r;
        }
    }
    if rank != kernel.len() {
        return Err(Error::SingularKappa(format!(
            "could not extract a free generating set in degree {k}"
        )));
    }

    // g_i: coefficient 1 at pivot i, 0 at every other pivot coordinate
    let constraint_rows: Vec<Vec<Rational>> = chosen
        .iter()
        .flat_map(|&t| (0..nb).map(move |bi| (t, bi)))
        .map(|(t, bi)| kernel.iter().map(|v| v[column_of(t, bi)].clone()).collect())
        .collect();
    let scalar_index = blades.iter().position(|b| *b == Blade::SCALAR).unwrap();
    let mut generators = Vec::with_capacity(chosen.len());
    for (gi, _) in chosen.iter().enumerate() {
        let rhs: Vec<Rational> = (0..chosen.len() * nb)
            .map(|row| {
                if row == gi * nb + scalar_index {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            })
            .collect();
        let lambda = linalg::solve(&constraint_rows, &rhs, kernel.len())
            .expect("pivot coordinates form a bijection");
        let mut g = CliffPoly::zero(m);
        for (l, v) in lambda.iter().zip(&kernel) {
            if l.is_zero() {
                continue;
            }
            for (mi, mono) in monos.iter().enumerate() {
                for (bi, b) in blades.iter().enumerate() {
                    let c = &v[column_of(mi, bi)];
                    if !c.is_zero() {
                        g.add_term(mono.clone(), CliffordElement::from_blade(m, *b, c * l));
                    }
                }
            }
        }
        debug_assert!(dirac_m(rs, &g)?.is_zero());
        generators.push(g);
    }
    Ok(MonogenicBasis {
        degree: k,
        generators,
        pivots: chosen.iter().map(|&i| monos[i].clone()).collect(),
    })
}

/// -(m + 2γ_κ) as a rational: the scalar D̲_h x̲ for Z_2^m-type systems.
pub fn dirac_of_vector_variable(rs: &RootSystem) -> Rational {
    -(int(rs.dim() as i64) + int(2) * rs.gamma())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::PolySampler;
    use crate::rational::frac;
    use crate::stem::{self, StemPoly};
    use proptest::prelude::*;

    fn e(m: usize, j: usize) -> CliffordElement {
        CliffordElement::generator(m, j)
    }

    fn xv(m: usize) -> CliffPoly {
        CliffPoly::vector_variable(m)
    }

    fn slice_system(m: usize) -> RootSystem {
        RootSystem::coordinate(vec![frac(1 - m as i64, 2 * m as i64); m])
    }

    fn systems() -> Vec<RootSystem> {
        vec![
            RootSystem::coordinate(vec![frac(1, 3), int(-1), frac(3, 4)]),
            RootSystem::type_a(3, frac(-1, 3)),
            RootSystem::new(2, vec![vec![int(1), int(1)], vec![int(1), int(-1)]], vec![frac(2, 3), frac(-1, 5)])
                .unwrap(),
            RootSystem::rank_one(2, 2, frac(-1, 2)),
        ]
    }

    #[test]
    fn dirac_examples() {
        let rs = RootSystem::coordinate(vec![frac(1, 3), int(-1), frac(3, 4)]);
        assert_eq!(
            dirac_m(&rs, &xv(3)).unwrap(),
            CliffPoly::scalar_constant(3, dirac_of_vector_variable(&rs))
        );
        assert_eq!(dirac_of_vector_variable(&rs), -(int(3) + int(2) * rs.gamma()));
        let flat = RootSystem::trivial(2);
        let p = &CliffPoly::var(2, 1).pow(2) - &CliffPoly::var(2, 2).pow(2);
        let expected = &CliffPoly::var(2, 1).left_mul(&e(2, 1)).scale(&int(2))
            - &CliffPoly::var(2, 2).left_mul(&e(2, 2)).scale(&int(2));
        assert_eq!(dirac_m(&flat, &p).unwrap(), expected);
        assert!(dirac_m(&rs, &CliffPoly::one(3)).unwrap().is_zero());
    }

    #[test]
    fn cauchy_riemann_examples() {
        for m in 1..=4 {
            let rs = slice_system(m);
            assert!(cauchy_riemann(&rs, &CliffPoly::paravector(m)).unwrap().is_zero());
            assert_eq!(cauchy_riemann(&rs, &CliffPoly::var(m, 0)).unwrap(), CliffPoly::one(m));
        }
        let mut s = PolySampler::new(4);
        let flat = RootSystem::trivial(3);
        for _ in 0..5 {
            let p = s.poly(3, 4, 4);
            assert_eq!(cauchy_riemann(&flat, &p).unwrap(), classical_cauchy_riemann(&p));
        }
    }

    #[test]
    fn spherical_examples() {
        for m in 1..=4 {
            assert_eq!(gamma_sph(&xv(m)), xv(m).scale(&int(m as i64 - 1)));
            assert!(gamma_sph(&CliffPoly::vector_norm_squared(m)).is_zero());
            assert!(gamma_sph(&CliffPoly::scalar_constant(m, int(7))).is_zero());
        }
    }

    #[test]
    fn psi_examples() {
        let mut s = PolySampler::new(8);
        let p = s.poly(3, 3, 3);
        assert!(psi(&RootSystem::trivial(3), &p).unwrap().is_zero());
        for rs in systems() {
            let m = rs.dim();
            assert_eq!(psi(&rs, &CliffPoly::one(m)).unwrap(), CliffPoly::scalar_constant(m, -rs.gamma()));
            let p = s.poly(m, 4, 4);
            let lhs = &p.scale(&rs.gamma()) + &psi(&rs, &p).unwrap();
            let rhs = -&root_correction(&rs, &p).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn gamma_tilde_examples() {
        for rs in systems() {
            let m = rs.dim();
            let c = int(2) * rs.gamma() + int(m as i64 - 1);
            for route in [GammaRoute::Rho, GammaRoute::Psi] {
                assert_eq!(gamma_tilde(&rs, &xv(m), route).unwrap(), xv(m).scale(&c));
                let radial = StemPoly::new(crate::stem::BiPoly::scalar_term(m, 2, 1, int(3)), crate::stem::BiPoly::zero(m));
                assert!(gamma_tilde(&rs, &radial.induce(), route).unwrap().is_zero());
            }
        }
        for m in 1..=3 {
            let rs = slice_system(m);
            for n in 0..=4 {
                let p = CliffPoly::paravector(m).pow(n);
                assert!(gamma_tilde(&rs, &p, GammaRoute::Rho).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn theta_examples() {
        for m in 1..=3 {
            for n in 0..=5 {
                assert!(theta_scaled(&CliffPoly::paravector(m).pow(n)).is_zero());
            }
            let conj = &CliffPoly::var(m, 0) - &xv(m);
            assert_eq!(theta_scaled(&conj), CliffPoly::vector_norm_squared(m).scale(&int(2)));
        }
    }

    #[test]
    fn monogenic_predicates() {
        let m = 3;
        let mut p = CliffPoly::var(m, 0);
        for (j, sign) in [(1, 1), (2, 1), (3, -1)] {
            p.add_assign_ref(&CliffPoly::var(m, j).left_mul(&e(m, j)).scale(&int(sign)));
        }
        assert!(is_monogenic(&p));
        assert!(!is_monogenic(&CliffPoly::paravector(m)));
        assert!(is_monogenic(&CliffPoly::constant(e(m, 2))));
        let rs = RootSystem::rank_one(3, 3, int(-1));
        assert!(is_dunkl_monogenic(&rs, &CliffPoly::paravector(3)).unwrap());
        assert!(!is_dunkl_monogenic(&RootSystem::trivial(3), &CliffPoly::paravector(3)).unwrap());
    }

    #[test]
    fn basis_ranks() {
        let rs = RootSystem::coordinate(vec![frac(1, 3), frac(2, 7)]);
        for k in 1..=4 {
            let b = monogenic_basis(&rs, k).unwrap();
            assert_eq!(b.generators.len(), 1);
            for g in &b.generators {
                assert!(dirac_m(&rs, g).unwrap().is_zero());
                assert!(g.is_homogeneous() && g.degree() == Some(k));
                assert_eq!(g.degree_in(0), 0);
            }
        }
        let k0 = monogenic_basis(&rs, 0).unwrap();
        assert_eq!(k0.generators, vec![CliffPoly::one(2)]);
        let flat = RootSystem::trivial(3);
        let b = monogenic_basis(&flat, 1).unwrap();
        assert_eq!(b.generators.len(), homogeneous_dimension(3, 1) - homogeneous_dimension(3, 0));
        let sing = RootSystem::rank_one(2, 1, frac(-1, 2));
        assert!(matches!(monogenic_basis(&sing, 1), Err(Error::SingularKappa(_))));
    }

    #[test]
    fn basis_pivots_are_unit_coordinates() {
        let rs = RootSystem::type_a(3, frac(1, 4));
        let b = monogenic_basis(&rs, 2).unwrap();
        assert_eq!(b.generators.len(), 3);
        for (i, g) in b.generators.iter().enumerate() {
            for (j, mu) in b.pivots.iter().enumerate() {
                let expected = if i == j { CliffordElement::one(3) } else { CliffordElement::zero(3) };
                assert_eq!(g.coeff(mu), expected);
            }
        }
        assert_eq!(monogenic_basis(&rs, 2).unwrap(), b);
    }

    #[test]
    fn eigenrelations_on_bases() {
        let cases = [
            RootSystem::coordinate(vec![frac(1, 3), frac(2, 7)]),
            RootSystem::coordinate(vec![frac(1, 3), int(-1), frac(3, 4)]),
            RootSystem::type_a(3, frac(1, 5)),
        ];
        for rs in cases {
            let m = rs.dim();
            for j in 1..=3usize {
                for g in monogenic_basis(&rs, j).unwrap().generators {
                    let gt = gamma_tilde(&rs, &g, GammaRoute::Psi).unwrap();
                    assert_eq!(gt, g.scale(&-int(j as i64)));
                    let xg = &xv(m) * &g;
                    let c = int(2) * rs.gamma() + int((j + m) as i64 - 1);
                    assert_eq!(gamma_tilde(&rs, &xg, GammaRoute::Rho).unwrap(), xg.scale(&c));
                }
            }
        }
    }

    #[test]
    fn kernel_characterization() {
        for m in 2..=3 {
            let rs = slice_system(m);
            let mut s = PolySampler::new(m as u64);
            for _ in 0..4 {
                let st = s.stem(m, 5, 3);
                let p = st.induce();
                assert!(gamma_tilde(&rs, &p, GammaRoute::Rho).unwrap().is_zero());
                let theta = theta_scaled(&p);
                let dh = cauchy_riemann(&rs, &p).unwrap();
                assert_eq!(theta, &CliffPoly::vector_norm_squared(m) * &dh);
                let regular = StemPoly::power(m, 3).induce();
                assert!(cauchy_riemann(&rs, &regular).unwrap().is_zero());
            }
            let witness = CliffPoly::var(m, 1).pow(2);
            assert!(!gamma_tilde(&rs, &witness, GammaRoute::Rho).unwrap().is_zero());
            assert!(!cauchy_riemann(&rs, &witness).unwrap().is_zero());
            assert!(stem::slice_decompose(&witness).is_err());
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(12))]

        #[test]
        fn routes_agree(seed in any::<u64>(), which in 0usize..4) {
            let rs = systems().swap_remove(which);
            let p = PolySampler::new(seed).poly(rs.dim(), 5, 4);
            prop_assert_eq!(
                gamma_tilde(&rs, &p, GammaRoute::Rho).unwrap(),
                gamma_tilde(&rs, &p, GammaRoute::Psi).unwrap()
            );
        }

        #[test]
        fn spherical_factorization(seed in any::<u64>(), which in 0usize..4) {
            let rs = systems().swap_remove(which);
            let m = rs.dim();
            let p = PolySampler::new(seed).poly(m, 5, 4);
            let lhs = &xv(m) * &dirac_m(&rs, &p).unwrap();
            let rhs = -&(&p.vector_euler() + &gamma_tilde(&rs, &p, GammaRoute::Rho).unwrap());
            prop_assert_eq!(lhs, rhs);
        }
    }
}
