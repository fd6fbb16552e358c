//! V_n operators, Laplacian powers, the classical Fueter map, the
//! hyperbolic operator L, the γ_κ-shift report and the local-decomposition
//! formulas.

use num_traits::{One, Zero};

use crate::clifford::Blade;
use crate::dirac;
use crate::dunkl::{RootSystem, Singularity};
use crate::error::{Error, Result};
use crate::poly::CliffPoly;
use crate::rational::{factorial, format_rational, frac, int, Rational};
use crate::stem::{self, StemPoly, VekuaParameter};

/// V_n at stem level: (A, B) ↦ (2ⁿ ∂_sⁿ A, 2ⁿ ∂_sⁿ B).
pub fn v_n(st: &StemPoly, n: u32) -> StemPoly {
    let mut a = st.a.clone();
    let mut b = st.b.clone();
    for _ in 0..n {
        a = a.d_s().scale(&int(2));
        b = b.d_s().scale(&int(2));
    }
    StemPoly::new(a, b)
}

/// Δ_{m+1} = Σ_{i=0}^m ∂_i².
pub fn classical_laplacian(p: &CliffPoly) -> CliffPoly {
    let mut out = CliffPoly::zero(p.dim());
    for i in 0..=p.dim() {
        out.add_assign_ref(&p.partial(i).partial(i));
    }
    out
}

/// n-fold Δ_h, or Δ_{m+1} when `rs` is `None`.
pub fn laplacian_power(rs: Option<&RootSystem>, p: &CliffPoly, n: u32) -> Result<CliffPoly> {
    let mut out = p.clone();
    for _ in 0..n {
        out = match rs {
            Some(rs) => rs.laplacian(&out)?,
            None => classical_laplacian(&out),
        };
    }
    Ok(out)
}

/// Δ_{m+1}^{(m-1)/2} p for a slice regular p and odd m. The output is
/// checked against the classical Cauchy-Riemann operator.
pub fn fueter_map(p: &CliffPoly) -> Result<CliffPoly> {
    let m = p.dim();
    if m % 2 == 0 {
        return Err(Error::OddDimensionRequired(m));
    }
    stem::slice_regular_stem(p)?;
    let out = laplacian_power(None, p, ((m - 1) / 2) as u32)?;
    assert!(dirac::is_monogenic(&out), "Fueter image is not monogenic");
    Ok(out)
}

/// L p = x_m² Δ_{m+1} p - (m-1) x_m ∂_m p.
pub fn hyperbolic_l(p: &CliffPoly) -> Result<CliffPoly> {
    let m = p.dim();
    if m == 0 {
        return Err(Error::DimensionTooSmall(m));
    }
    let lap = classical_laplacian(p).mul_var(m).mul_var(m);
    let radial = p.partial(m).mul_var(m).scale(&int(m as i64 - 1));
    Ok(&lap - &radial)
}

/// Output of the local-decomposition formulas together with their
/// differences from the exact stem split p = A + x̲B.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalDecomposition {
    pub candidate_a: CliffPoly,
    pub candidate_xb: CliffPoly,
    pub discrepancy_a: CliffPoly,
    pub discrepancy_xb: CliffPoly,
}

impl LocalDecomposition {
    pub fn agrees(&self) -> bool {
        self.discrepancy_a.is_zero() && self.discrepancy_xb.is_zero()
    }
}

/// candidate_A = (L + 2(m-1)) p / (2(m-1)) and candidate_xB = -L p / (2(m-1)).
pub fn local_decompose(p: &CliffPoly) -> Result<LocalDecomposition> {
    let m = p.dim();
    if m < 2 {
        return Err(Error::DimensionTooSmall(m));
    }
    let st = stem::slice_decompose(p)?;
    let lp = hyperbolic_l(p)?;
    let k = int(2 * (m as i64 - 1));
    let inv = Rational::one() / &k;
    let candidate_xb = lp.scale(&-inv.clone());
    let candidate_a = &p.clone() + &lp.scale(&inv);
    let exact_a = st.a.to_poly();
    let exact_xb = &CliffPoly::vector_variable(m) * &st.b.to_poly();
    Ok(LocalDecomposition {
        discrepancy_a: &candidate_a - &exact_a,
        discrepancy_xb: &candidate_xb - &exact_xb,
        candidate_a,
        candidate_xb,
    })
}

/// Exp(-x_0 D̲) q = Σ_k (-x_0)^k / k! D̲^k q, with D̲ = Σ e_j ∂_j; the unique
/// monogenic extension of q off the hyperplane x_0 = 0.
pub fn ck_extend(q: &CliffPoly) -> Result<CliffPoly> {
    if q.degree_in(0) > 0 {
        return Err(Error::DependsOnX0);
    }
    let m = q.dim();
    let mut term = q.clone();
    let mut out = q.clone();
    let mut k = 0usize;
    while !term.is_zero() {
        k += 1;
        let mut d = CliffPoly::zero(m);
        for j in 1..=m {
            d.add_assign_ref(&term.partial(j).left_mul_blade(Blade::generator(j)));
        }
        term = d;
        let mut x0k = term.clone();
        for _ in 0..k {
            x0k = x0k.mul_var(0);
        }
        let sign = if k % 2 == 1 { -Rational::one() } else { Rational::one() };
        out.add_scaled(&x0k, &(sign / factorial(k)));
    }
    Ok(out)
}

/// Outcome of the direct D_h check in one shift step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DirectCheck {
    /// D_h annihilated every V_n image for this coordinate κ.
    Passed(Vec<Rational>),
    Failed(Vec<Rational>),
    Skipped(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftStep {
    pub n: u32,
    pub operator: String,
    pub gamma_target: Rational,
    pub vekua_c: Rational,
    pub vekua_pass: bool,
    pub direct: DirectCheck,
}

impl ShiftStep {
    pub fn passed(&self) -> bool {
        self.vekua_pass && !matches!(self.direct, DirectCheck::Failed(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftReport {
    pub m: usize,
    pub steps: Vec<ShiftStep>,
}

impl ShiftReport {
    pub fn passed(&self) -> bool {
        self.steps.iter().all(ShiftStep::passed)
    }
}

/// Nonsingular coordinate multiplicities with Σ κ_i = γ, if one of a few
/// simple candidates works.
pub fn coordinate_kappa_for_gamma(m: usize, gamma: &Rational) -> Option<Vec<Rational>> {
    let mut candidates = vec![vec![gamma / int(m as i64); m]];
    let mut last = vec![Rational::zero(); m];
    last[m - 1] = gamma.clone();
    candidates.push(last);
    if m >= 2 {
        let mut pair = vec![Rational::zero(); m];
        pair[m - 2] = frac(1, 3);
        pair[m - 1] = gamma - frac(1, 3);
        candidates.push(pair);
    }
    candidates
        .into_iter()
        .find(|k| RootSystem::coordinate(k.clone()).singularity() == Singularity::NonSingular)
}

/// Verifies, for n = 0..=n_max, that V_n of each holomorphic stem solves the
/// Vekua system with c = 2n and lies in ker D_h for a coordinate root
/// system with γ_κ = n + (1-m)/2.
pub fn gamma_shift_report(n_max: u32, m: usize, stems: &[StemPoly]) -> Result<ShiftReport> {
    if m == 0 {
        return Err(Error::DimensionTooSmall(m));
    }
    for st in stems {
        if st.dim() != m {
            return Err(Error::DimensionMismatch { left: m, right: st.dim() });
        }
        if !st.check_cr() {
            return Err(Error::NotSliceRegular);
        }
    }
    let mut steps = Vec::new();
    for n in 0..=n_max {
        let gamma_target = int(n.into()) + frac(1 - m as i64, 2);
        let c = VekuaParameter::new(int(2 * i64::from(n)));
        let images: Vec<StemPoly> = stems.iter().map(|st| v_n(st, n)).collect();
        let vekua_pass = images.iter().all(|v| v.check_vekua(&c));
        let direct = match coordinate_kappa_for_gamma(m, &gamma_target) {
            None => DirectCheck::Skipped(format!(
                "no nonsingular coordinate multiplicity with gamma = {}",
                format_rational(&gamma_target)
            )),
            Some(kappa) => {
                let rs = RootSystem::coordinate(kappa.clone());
                debug_assert_eq!(VekuaParameter::for_root_system(&rs), c);
                let mut ok = true;
                for v in &images {
                    if !dirac::cauchy_riemann(&rs, &v.induce())?.is_zero() {
                        ok = false;
                        break;
                    }
                }
                if ok {
                    DirectCheck::Passed(kappa)
                } else {
                    DirectCheck::Failed(kappa)
                }
            }
        };
        steps.push(ShiftStep {
            n,
            operator: format!("V_{n}"),
            gamma_target,
            vekua_c: c.c,
            vekua_pass,
            direct,
        });
    }
    Ok(ShiftReport { m, steps })
}

/// Rational λ with `lhs = λ · rhs`, if one exists.
pub fn proportionality(lhs: &CliffPoly, rhs: &CliffPoly) -> Option<Rational> {
    if lhs.is_zero() && rhs.is_zero() {
        return Some(Rational::zero());
    }
    let (mono, c) = rhs.terms().next_back()?;
    let (blade, r) = c.terms().next()?;
    let lam = lhs.coeff(mono).coeff(*blade) / r;
    (&rhs.scale(&lam) == lhs).then_some(lam)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::CliffordElement;
    use crate::random::PolySampler;
    use crate::stem::BiPoly;

    fn x(m: usize) -> CliffPoly {
        CliffPoly::paravector(m)
    }

    fn sc(m: usize, a: u32, b: u32, c: i64) -> BiPoly {
        BiPoly::scalar_term(m, a, b, int(c))
    }

    #[test]
    fn v_n_examples() {
        let m = 3;
        let s4 = StemPoly::power(m, 4);
        assert_eq!(v_n(&s4, 0), s4);
        let expected = StemPoly::new(&sc(m, 2, 0, -12) + &sc(m, 0, 1, 4), sc(m, 1, 0, -8));
        assert_eq!(v_n(&s4, 1), expected);
        for n in 1..=7 {
            let st = StemPoly::power(m, n);
            let lhs = v_n(&st, 1).induce();
            let rhs = classical_laplacian(&st.induce());
            let lam = proportionality(&lhs, &rhs);
            if rhs.is_zero() {
                assert!(lhs.is_zero());
            } else {
                assert_eq!(lam, Some(frac(1, 2)), "n = {n}");
            }
        }
    }

    #[test]
    fn laplacian_examples() {
        let m = 3;
        let x2 = x(m).pow(2);
        assert_eq!(laplacian_power(None, &x2, 1).unwrap(), CliffPoly::scalar_constant(m, int(-4)));
        assert_eq!(laplacian_power(None, &x2, 0).unwrap(), x2);
        let x4 = x(m).pow(4);
        let v1 = v_n(&StemPoly::power(m, 4), 1).induce();
        let lam = proportionality(&laplacian_power(None, &x4, 1).unwrap(), &v1).unwrap();
        assert!(!lam.is_zero());
        let rs = RootSystem::trivial(m);
        assert_eq!(laplacian_power(Some(&rs), &x4, 2).unwrap(), laplacian_power(None, &x4, 2).unwrap());
    }

    #[test]
    fn fueter_examples() {
        let m = 3;
        assert!(fueter_map(&x(m)).unwrap().is_zero());
        assert_eq!(fueter_map(&x(m).pow(2)).unwrap(), CliffPoly::scalar_constant(m, int(-4)));
        let f4 = fueter_map(&x(m).pow(4)).unwrap();
        assert_eq!(f4.degree(), Some(2));
        assert!(f4.is_homogeneous());
        assert!(dirac::is_monogenic(&f4));
        assert_eq!(fueter_map(&x(2)), Err(Error::OddDimensionRequired(2)));
        assert_eq!(fueter_map(&CliffPoly::var(3, 1).pow(2)), Err(Error::NotSlice));
        let m5 = fueter_map(&x(5).pow(4)).unwrap();
        assert_eq!(m5, CliffPoly::scalar_constant(5, int(64)));
    }

    #[test]
    fn hyperbolic_examples() {
        let m = 3;
        let alpha = &CliffPoly::var(m, 0).pow(2) - &CliffPoly::vector_norm_squared(m);
        assert!(hyperbolic_l(&alpha).unwrap().is_zero());
        let e = |j| CliffordElement::generator(m, j);
        let even = CliffPoly::var(m, 0).mul_var(1).left_mul(&e(1)).scale(&int(2));
        assert!(hyperbolic_l(&even).unwrap().is_zero());
        let odd = CliffPoly::var(m, 0).mul_var(3).left_mul(&e(3)).scale(&int(2));
        assert_eq!(hyperbolic_l(&odd).unwrap(), odd.scale(&int(-2)));
    }

    #[test]
    fn local_decomposition_reports() {
        let m = 3;
        let c = CliffPoly::scalar_constant(m, int(5));
        let ld = local_decompose(&c).unwrap();
        assert_eq!(ld.candidate_a, c);
        assert!(ld.agrees());
        let ld1 = local_decompose(&x(m)).unwrap();
        assert!(!ld1.agrees());
        let ld2 = local_decompose(&x(m).pow(2)).unwrap();
        assert!(!ld2.discrepancy_xb.is_zero());
        assert_eq!(local_decompose(&x(1)), Err(Error::DimensionTooSmall(1)));
    }

    #[test]
    fn ck_examples() {
        let m = 3;
        assert_eq!(ck_extend(&CliffPoly::one(m)).unwrap(), CliffPoly::one(m));
        let x1 = CliffPoly::var(m, 1);
        let ext = ck_extend(&x1).unwrap();
        let expected = &x1 - &CliffPoly::var(m, 0).left_mul(&CliffordElement::generator(m, 1));
        assert_eq!(ext, expected);
        assert_eq!(ck_extend(&CliffPoly::var(m, 0)), Err(Error::DependsOnX0));
        let mut sampler = PolySampler::new(11);
        for _ in 0..10 {
            let q = sampler.vector_poly(m, 6, 4);
            let ext = ck_extend(&q).unwrap();
            assert!(dirac::is_monogenic(&ext));
            assert_eq!(ext.filter_terms(|mono| mono.exp(0) == 0), q);
            let h = q.homogeneous_component(4);
            if !h.is_zero() {
                assert_eq!(ck_extend(&h).unwrap().degree(), Some(4));
                assert!(ck_extend(&h).unwrap().is_homogeneous());
            }
        }
    }

    #[test]
    fn shift_report_examples() {
        let m = 3;
        let stems = [StemPoly::power(m, 4), StemPoly::power(m, 6)];
        let report = gamma_shift_report(2, m, &stems).unwrap();
        assert!(report.passed());
        assert_eq!(report.steps.len(), 3);
        assert_eq!(report.steps[0].vekua_c, int(0));
        assert_eq!(report.steps[1].gamma_target, int(0));
        assert!(matches!(report.steps[2].direct, DirectCheck::Passed(_)));
        let explicit = RootSystem::coordinate(vec![int(0), int(0), int(1)]);
        let v2 = v_n(&StemPoly::power(m, 6), 2).induce();
        assert!(dirac::cauchy_riemann(&explicit, &v2).unwrap().is_zero());
        let bad = StemPoly::new(sc(m, 0, 1, 1), BiPoly::zero(m));
        assert_eq!(gamma_shift_report(1, m, &[bad]), Err(Error::NotSliceRegular));
    }

    #[test]
    fn shift_report_even_dimension() {
        let m = 2;
        let stems: Vec<StemPoly> = (0..=6).map(|n| StemPoly::power(m, n)).collect();
        assert!(gamma_shift_report(3, m, &stems).unwrap().passed());
    }

    #[test]
    fn kappa_for_gamma_avoids_singular_values() {
        let k = coordinate_kappa_for_gamma(1, &frac(-1, 2));
        assert!(k.is_none());
        let k3 = coordinate_kappa_for_gamma(3, &frac(-3, 2)).unwrap();
        assert_eq!(k3.iter().sum::<Rational>(), frac(-3, 2));
    }
}
