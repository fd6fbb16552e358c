//! Verification suites: each runs a fixed list of exact checks in
//! declaration order and collects them into a [`VerificationReport`].

use std::str::FromStr;

use num_traits::{One, Zero};

use crate::clifford::CliffordElement;
use crate::dirac::{self, GammaRoute};
use crate::dunkl::{RootSystem, Singularity};
use crate::error::{Error, Result};
use crate::fueter::{self, DirectCheck};
use crate::intertwine;
use crate::poly::CliffPoly;
use crate::random::PolySampler;
use crate::rational::{format_rational, frac, int, Rational};
use crate::report::{Case, VerificationReport};
use crate::stem::{self, BiPoly, StemPoly, VekuaParameter};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Selector {
    Clifford,
    Dunkl,
    Dirac,
    Slice,
    Fueter,
    Intertwine,
    All,
}

impl Selector {
    pub const EACH: [Selector; 6] = [
        Selector::Clifford,
        Selector::Dunkl,
        Selector::Dirac,
        Selector::Slice,
        Selector::Fueter,
        Selector::Intertwine,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Selector::Clifford => "clifford",
            Selector::Dunkl => "dunkl",
            Selector::Dirac => "dirac",
            Selector::Slice => "slice",
            Selector::Fueter => "fueter",
            Selector::Intertwine => "intertwine",
            Selector::All => "all",
        }
    }
}

impl FromStr for Selector {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::EACH
            .into_iter()
            .chain([Selector::All])
            .find(|sel| sel.name() == s)
            .ok_or_else(|| Error::parse("suite", format!("unknown suite {s:?}")))
    }
}

/// Bounds and inputs shared by all suites.
#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub m: Option<usize>,
    pub root_system: Option<RootSystem>,
    pub seed: u64,
    pub max_degree: usize,
    pub max_power: u32,
    pub samples: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { m: None, root_system: None, seed: 0, max_degree: 4, max_power: 8, samples: 8 }
    }
}

impl SuiteConfig {
    /// The ambient dimension: --m, else the root file, else `fallback`.
    pub fn dim(&self, fallback: usize) -> Result<usize> {
        match (self.m, &self.root_system) {
            (Some(m), Some(rs)) if rs.dim() != m => Err(Error::DimensionMismatch { left: m, right: rs.dim() }),
            (Some(m), _) => Ok(m),
            (None, Some(rs)) => Ok(rs.dim()),
            (None, None) => Ok(fallback),
        }
    }

    fn sampler(&self, salt: u64) -> PolySampler {
        PolySampler::new(self.seed.wrapping_mul(0x9e37_79b9_7f4a_7c15).wrapping_add(salt))
    }
}

pub fn run_suite(selector: Selector, cfg: &SuiteConfig) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(selector.name(), cfg.seed);
    let list: Vec<Selector> = match selector {
        Selector::All => Selector::EACH.to_vec(),
        s => vec![s],
    };
    for s in list {
        let cases = match s {
            Selector::Clifford => clifford_suite(cfg)?,
            Selector::Dunkl => dunkl_suite(cfg)?,
            Selector::Dirac => dirac_suite(cfg)?,
            Selector::Slice => slice_suite(cfg)?,
            Selector::Fueter => fueter_suite(cfg)?,
            Selector::Intertwine => intertwine_suite(cfg)?,
            Selector::All => unreachable!(),
        };
        for mut c in cases {
            if selector == Selector::All {
                c.id = format!("{}/{}", s.name(), c.id);
            }
            report.push(c);
        }
    }
    Ok(report)
}

/// Runs a check; root-system restrictions become skips, any other error a
/// failure witnessed by `input`.
fn guard(id: &str, reference: &str, input: &CliffPoly, f: impl FnOnce() -> Result<Case>) -> Case {
    match f() {
        Ok(c) => c,
        Err(e @ (Error::SingularKappa(_) | Error::UnsupportedGroup(_) | Error::BadGamma { .. })) => {
            Case::skipped(id, reference, e.to_string())
        }
        Err(e) => Case::fail(id, reference, input.clone()).with_note(e.to_string()),
    }
}

/// Pass when lhs = rhs, otherwise fail with lhs - rhs as witness.
fn equal(id: &str, reference: &str, lhs: &CliffPoly, rhs: &CliffPoly) -> Case {
    if lhs == rhs {
        Case::pass(id, reference)
    } else {
        Case::fail(id, reference, lhs - rhs)
    }
}

fn holds(id: &str, reference: &str, ok: bool, witness: &CliffPoly) -> Case {
    if ok {
        Case::pass(id, reference)
    } else {
        Case::fail(id, reference, witness.clone())
    }
}

/// Checks `check` on every sample; the first failing input is the witness.
fn for_samples(
    id: &str,
    reference: &str,
    inputs: impl IntoIterator<Item = CliffPoly>,
    mut check: impl FnMut(&CliffPoly) -> Result<Option<CliffPoly>>,
) -> Case {
    let mut count = 0;
    for p in inputs {
        count += 1;
        match check(&p) {
            Ok(None) => {}
            Ok(Some(w)) => return Case::fail(id, reference, w).with_note(format!("input: {p}")),
            Err(e) => return guard(id, reference, &p, || Err(e)),
        }
    }
    Case::pass(id, reference).with_note(format!("{count} samples"))
}

fn diff_or_none(lhs: CliffPoly, rhs: CliffPoly) -> Option<CliffPoly> {
    if lhs == rhs {
        None
    } else {
        Some(&lhs - &rhs)
    }
}

fn cliff_const(c: CliffordElement) -> CliffPoly {
    CliffPoly::constant(c)
}

fn clifford_suite(cfg: &SuiteConfig) -> Result<Vec<Case>> {
    let m = cfg.dim(3)?;
    let mut s = cfg.sampler(1);
    let mut out = Vec::new();
    let triples: Vec<_> = (0..cfg.samples).map(|_| (s.clifford(m), s.clifford(m), s.clifford(m))).collect();
    let mut fail = None;
    for (a, b, c) in &triples {
        let l = &(a * b) * c;
        let r = a * &(b * c);
        if l != r {
            fail = Some(cliff_const(&l - &r));
            break;
        }
    }
    out.push(match fail {
        None => Case::pass("associativity", "clifford product"),
        Some(w) => Case::fail("associativity", "clifford product", w),
    });

    let mut fail = None;
    for i in 1..=m {
        for j in 1..=m {
            let ei = CliffordElement::generator(m, i);
            let ej = CliffordElement::generator(m, j);
            let anti = &(&ei * &ej) + &(&ej * &ei);
            let expected = if i == j { CliffordElement::scalar(m, int(-2)) } else { CliffordElement::zero(m) };
            if anti != expected {
                fail = Some(cliff_const(&anti - &expected));
            }
        }
    }
    out.push(match fail {
        None => Case::pass("generator-relations", "e_i e_j + e_j e_i = -2 delta_ij"),
        Some(w) => Case::fail("generator-relations", "e_i e_j + e_j e_i = -2 delta_ij", w),
    });

    let mut fail = None;
    for _ in 0..cfg.samples {
        let u = s.root(m);
        let v = CliffordElement::vector(&u);
        let norm: Rational = u.iter().map(|x| x * x).sum();
        let sq = &v * &v;
        if sq != CliffordElement::scalar(m, -norm.clone()) {
            fail = Some(cliff_const(&sq + &CliffordElement::scalar(m, norm)));
            break;
        }
    }
    out.push(match fail {
        None => Case::pass("vector-square", "u^2 = -|u|^2"),
        Some(w) => Case::fail("vector-square", "u^2 = -|u|^2", w),
    });

    let mut fail = None;
    for (a, b, _) in &triples {
        let l = (a * b).conjugate();
        let r = &b.conjugate() * &a.conjugate();
        if l != r {
            fail = Some(cliff_const(&l - &r));
            break;
        }
    }
    out.push(match fail {
        None => Case::pass("conjugation-reverses", "conjugation is an anti-automorphism"),
        Some(w) => Case::fail("conjugation-reverses", "conjugation is an anti-automorphism", w),
    });

    let mut fail = None;
    for (a, _, _) in &triples {
        let mut sum = CliffordElement::zero(m);
        for k in 0..=m {
            sum = &sum + &a.grade_project(k);
        }
        if &sum != a {
            fail = Some(cliff_const(&sum - a));
            break;
        }
    }
    out.push(match fail {
        None => Case::pass("grade-decomposition", "sum of grade projections"),
        Some(w) => Case::fail("grade-decomposition", "sum of grade projections", w),
    });
    Ok(out)
}

fn default_dunkl_system(m: usize) -> RootSystem {
    let mut k = vec![Rational::zero(); m];
    if m > 0 {
        k[m - 1] = int(-1);
    }
    RootSystem::coordinate(k)
}

fn suite_system(cfg: &SuiteConfig, m: usize, fallback: impl FnOnce(usize) -> RootSystem) -> RootSystem {
    cfg.root_system.clone().unwrap_or_else(|| fallback(m))
}

fn dunkl_suite(cfg: &SuiteConfig) -> Result<Vec<Case>> {
    let m = cfg.dim(3)?;
    let rs = suite_system(cfg, m, default_dunkl_system);
    let mut s = cfg.sampler(2);
    let deg = cfg.max_degree;
    let mut out = Vec::new();
    let randoms: Vec<CliffPoly> = (0..cfg.samples).map(|_| s.poly(m, deg, 4)).collect();

    out.push(match rs.singularity() {
        Singularity::NonSingular => Case::pass("singularity", "rank-one singular set"),
        Singularity::Singular(_) => Case::skipped(
            "singularity",
            "rank-one singular set",
            rs.ensure_nonsingular().unwrap_err().to_string(),
        ),
        Singularity::Undecided(msg) => Case::skipped("singularity", "rank-one singular set", msg),
    });

    // T_i x_j = δ_ij + Σ κ(α) α_i · 2α_j / |α|²
    let mut case = Case::pass("dunkl-on-linear", "Dunkl operator on coordinates");
    'outer: for i in 1..=m {
        for j in 1..=m {
            let mut expected = if i == j { Rational::one() } else { Rational::zero() };
            for (alpha, k) in rs.roots().iter().zip(rs.kappa()) {
                let norm: Rational = alpha.iter().map(|x| x * x).sum();
                expected += k * &alpha[i - 1] * int(2) * &alpha[j - 1] / norm;
            }
            let got = rs.dunkl(i, &CliffPoly::var(m, j))?;
            if got != CliffPoly::scalar_constant(m, expected.clone()) {
                case = Case::fail("dunkl-on-linear", "Dunkl operator on coordinates", &got - &CliffPoly::scalar_constant(m, expected));
                break 'outer;
            }
        }
    }
    out.push(case);

    out.push(for_samples("commutativity", "T_i T_j = T_j T_i", randoms.clone(), |p| {
        for i in 1..=m {
            for j in (i + 1)..=m {
                let a = rs.dunkl(i, &rs.dunkl(j, p)?)?;
                let b = rs.dunkl(j, &rs.dunkl(i, p)?)?;
                if a != b {
                    return Ok(Some(&a - &b));
                }
            }
        }
        Ok(None)
    }));

    out.push(for_samples("degree-drop", "T_i lowers homogeneous degree by one", randoms.clone(), |p| {
        let k = p.degree().unwrap_or(0);
        let h = p.homogeneous_component(k);
        for i in 0..=m {
            let t = rs.dunkl(i, &h)?;
            if !t.is_zero() && !(t.is_homogeneous() && t.degree() == Some(k.saturating_sub(1))) {
                return Ok(Some(t));
            }
        }
        Ok(None)
    }));

    out.push(for_samples("rho-squared", "rho_a^2 = 0", randoms.clone(), |p| {
        for k in 0..rs.roots().len() {
            let r2 = rs.rho(k, &rs.rho(k, p)?)?;
            if !r2.is_zero() {
                return Ok(Some(r2));
            }
        }
        Ok(None)
    }));

    out.push(for_samples("rho-invariance", "(rho_a p) o sigma_a = rho_a p", randoms.clone(), |p| {
        for k in 0..rs.roots().len() {
            let r = rs.rho(k, p)?;
            let rr = r.substitute_linear(rs.reflection(k))?;
            if r != rr {
                return Ok(Some(&r - &rr));
            }
        }
        Ok(None)
    }));

    let radial: Vec<CliffPoly> = (0..cfg.samples).map(|_| s.bipoly(m, deg, 3).to_poly()).collect();
    out.push(for_samples("rho-radial", "rho_a kills functions of x_0 and |x|", radial, |p| {
        for k in 0..rs.roots().len() {
            let r = rs.rho(k, p)?;
            if !r.is_zero() {
                return Ok(Some(r));
            }
        }
        Ok(None)
    }));

    let mut case = Case::pass("fischer-symmetry", "[p, q] = [q, p]");
    for _ in 0..cfg.samples {
        let p = s.scalar_poly(m, 3, 3);
        let q = s.scalar_poly(m, 3, 3);
        if rs.fischer_product(&p, &q)? != rs.fischer_product(&q, &p)? {
            case = Case::fail("fischer-symmetry", "[p, q] = [q, p]", p);
            break;
        }
    }
    out.push(case);
    Ok(out)
}

fn generic_system(m: usize) -> RootSystem {
    RootSystem::coordinate((0..m).map(|i| frac(i as i64 + 1, 3)).collect())
}

fn dirac_suite(cfg: &SuiteConfig) -> Result<Vec<Case>> {
    let m = cfg.dim(3)?;
    let rs = suite_system(cfg, m, generic_system);
    let mut s = cfg.sampler(3);
    let gamma = rs.gamma();
    let xv = CliffPoly::vector_variable(m);
    let mut out = Vec::new();
    let randoms: Vec<CliffPoly> = (0..cfg.samples).map(|_| s.poly(m, cfg.max_degree, 4)).collect();

    out.push(equal(
        "dirac-of-x",
        "D_h x = -(m + 2 gamma)",
        &dirac::dirac_m(&rs, &xv)?,
        &CliffPoly::scalar_constant(m, -(int(m as i64) + int(2) * &gamma)),
    ));
    out.push(equal("sph-of-x", "Gamma_w x = (m - 1) x", &dirac::gamma_sph(&xv), &xv.scale(&int(m as i64 - 1))));
    out.push(equal(
        "psi-of-one",
        "Psi 1 = -gamma",
        &dirac::psi(&rs, &CliffPoly::one(m))?,
        &CliffPoly::scalar_constant(m, -gamma.clone()),
    ));
    let c = int(2) * &gamma + int(m as i64 - 1);
    out.push(equal(
        "gamma-tilde-of-x",
        "spherical eigenvalue on x",
        &dirac::gamma_tilde(&rs, &xv, GammaRoute::Psi)?,
        &xv.scale(&c),
    ));
    let radial = s.bipoly(m, cfg.max_degree, 3).to_poly();
    let gr = dirac::gamma_tilde(&rs, &radial, GammaRoute::Rho)?;
    out.push(holds("gamma-tilde-radial", "Gamma-tilde kills radial functions", gr.is_zero(), &gr));

    out.push(for_samples("gamma-tilde-routes", "two expressions of Gamma-tilde", randoms.clone(), |p| {
        Ok(diff_or_none(
            dirac::gamma_tilde(&rs, p, GammaRoute::Rho)?,
            dirac::gamma_tilde(&rs, p, GammaRoute::Psi)?,
        ))
    }));

    out.push(for_samples("spherical-factorization", "x D_h = -(E + Gamma-tilde)", randoms.clone(), |p| {
        let lhs = &xv * &dirac::dirac_m(&rs, p)?;
        let rhs = -&(&p.vector_euler() + &dirac::gamma_tilde(&rs, p, GammaRoute::Rho)?);
        Ok(diff_or_none(lhs, rhs))
    }));

    let mut case = Case::pass("theta-on-powers", "theta-bar kills paravector powers");
    for n in 0..=cfg.max_power {
        let t = dirac::theta_scaled(&CliffPoly::paravector(m).pow(n));
        if !t.is_zero() {
            case = Case::fail("theta-on-powers", "theta-bar kills paravector powers", t);
            break;
        }
    }
    out.push(case);
    let conj = &CliffPoly::var(m, 0) - &xv;
    out.push(equal(
        "theta-on-conjugate",
        "theta-bar of x_0 - x",
        &dirac::theta_scaled(&conj),
        &CliffPoly::vector_norm_squared(m).scale(&int(2)),
    ));

    for j in 0..=cfg.max_degree.min(3) {
        let id = format!("monogenic-basis-{j}");
        let reference = "homogeneous Dunkl-monogenic generators";
        let zero = CliffPoly::zero(m);
        out.push(guard(&id, reference, &zero, || {
            let basis = dirac::monogenic_basis(&rs, j)?;
            let expected = if j == 0 {
                1
            } else {
                dirac::homogeneous_dimension(m, j) - dirac::homogeneous_dimension(m, j - 1)
            };
            if basis.generators.len() != expected {
                return Ok(Case::fail(&id, reference, zero.clone())
                    .with_note(format!("{} generators, expected {expected}", basis.generators.len())));
            }
            for g in &basis.generators {
                let d = dirac::dirac_m(&rs, g)?;
                if !d.is_zero() {
                    return Ok(Case::fail(&id, reference, g.clone()));
                }
                let gt = dirac::gamma_tilde(&rs, g, GammaRoute::Psi)?;
                if gt != g.scale(&-int(j as i64)) {
                    return Ok(Case::fail(&id, reference, g.clone()).with_note("eigenvalue -j fails"));
                }
                let xg = &xv * g;
                let ev = int(2) * &gamma + int((j + m) as i64 - 1);
                if dirac::gamma_tilde(&rs, &xg, GammaRoute::Rho)? != xg.scale(&ev) {
                    return Ok(Case::fail(&id, reference, xg).with_note("eigenvalue on x M_j fails"));
                }
            }
            Ok(Case::pass(&id, reference).with_note(format!("{} generators", expected)))
        }));
    }
    Ok(out)
}

fn slice_gamma_system(m: usize) -> RootSystem {
    RootSystem::coordinate(vec![frac(1 - m as i64, 2 * m as i64); m])
}

fn slice_suite(cfg: &SuiteConfig) -> Result<Vec<Case>> {
    let m = cfg.dim(3)?;
    let rs = suite_system(cfg, m, slice_gamma_system);
    let mut s = cfg.sampler(4);
    let deg = cfg.max_degree;
    let xv = CliffPoly::vector_variable(m);
    let x = CliffPoly::paravector(m);
    let mut out = Vec::new();

    let mut case = Case::pass("stem-powers", "stem of x^n induces x^n");
    for n in 0..=cfg.max_power {
        let st = StemPoly::power(m, n);
        let p = x.pow(n);
        if st.induce() != p || !st.check_cr() {
            case = Case::fail("stem-powers", "stem of x^n induces x^n", &st.induce() - &p);
            break;
        }
    }
    out.push(case);
    let not_holo = StemPoly::new(BiPoly::scalar_term(m, 0, 1, int(1)), BiPoly::zero(m));
    out.push(holds("stem-cr-negative", "stem (s, 0) is not holomorphic", !not_holo.check_cr(), &not_holo.induce()));

    let x2 = x.pow(2);
    out.push(guard("decompose-square", "slice decomposition of x^2", &x2, || {
        let st = stem::slice_decompose(&x2)?;
        Ok(holds("decompose-square", "slice decomposition of x^2", st == StemPoly::power(m, 2), &x2))
    }));
    if m >= 2 {
        let w = CliffPoly::var(m, 1).pow(2);
        let res = stem::slice_decompose(&w);
        out.push(holds("decompose-non-slice", "x_1^2 is not slice", res == Err(Error::NotSlice), &w));
    }

    let stems: Vec<StemPoly> = (0..cfg.samples).map(|_| s.stem(m, deg, 3)).collect();
    let mut case = Case::pass("stem-round-trip", "decompose inverts induce");
    for st in &stems {
        let p = st.induce();
        if stem::slice_decompose(&p).as_ref() != Ok(st) {
            case = Case::fail("stem-round-trip", "decompose inverts induce", p);
            break;
        }
    }
    out.push(case);

    let mixed: Vec<CliffPoly> = (0..cfg.samples)
        .map(|i| if i % 2 == 0 { s.stem(m, deg, 3).induce() } else { s.poly(m, deg, 3) })
        .collect();
    out.push(for_samples("sliceness-equivalence", "slice iff Gamma-tilde f = 0", mixed, |p| {
        let by_solver = stem::slice_decompose(p).is_ok();
        let by_operator = stem::is_slice(&rs, p)?;
        Ok((by_solver != by_operator).then(|| p.clone()))
    }));

    let regular: Vec<StemPoly> = (0..cfg.samples)
        .map(|i| {
            if i % 2 == 0 {
                let c = s.clifford(m);
                let p = StemPoly::power(m, (i as u32) % (cfg.max_power + 1));
                right_scale(&p, &c)
            } else {
                s.stem(m, deg, 3)
            }
        })
        .collect();
    let mut case = Case::pass("regularity-equivalence", "stem CR iff D_h f = 0 iff theta-bar f = 0");
    for st in &regular {
        let f = st.induce();
        let r = guard("regularity-equivalence", "", &f, || {
            let dh = dirac::cauchy_riemann(&rs, &f)?.is_zero();
            let th = dirac::theta_scaled(&f).is_zero();
            let cr = st.check_cr();
            if stem::require_slice_gamma(&rs).is_ok() {
                Ok(holds("", "", dh == cr && th == cr, &f))
            } else {
                Ok(holds("", "", th == cr, &f))
            }
        });
        if r.status != crate::report::Status::Pass {
            case = Case { id: case.id, reference: case.reference, ..r };
            break;
        }
    }
    out.push(case);

    let c = VekuaParameter::for_root_system(&rs);
    let mut case = Case::pass("vekua-equivalence", "D_h f = 0 iff Vekua system with 2 gamma + m - 1");
    for st in regular.iter().chain(&stems) {
        let f = st.induce();
        let dh = dirac::cauchy_riemann(&rs, &f)?.is_zero();
        if dh != st.check_vekua(&c) {
            case = Case::fail("vekua-equivalence", "D_h f = 0 iff Vekua system with 2 gamma + m - 1", f);
            break;
        }
    }
    out.push(case);

    let mut case = Case::pass("rho-on-slice", "|a|^2 rho_a f = 2 a f'_s and a rho_a f = -2 f'_s");
    'stems: for st in &stems {
        let f = st.induce();
        let b = st.spherical_derivative().induce();
        for (k, alpha) in rs.roots().iter().enumerate() {
            let r = rs.rho(k, &f)?;
            let a = CliffordElement::vector(alpha);
            let norm: Rational = alpha.iter().map(|x| x * x).sum();
            if r.scale(&norm) != b.left_mul(&a).scale(&int(2)) || r.left_mul(&a) != b.scale(&int(-2)) {
                case = Case::fail("rho-on-slice", "|a|^2 rho_a f = 2 a f'_s and a rho_a f = -2 f'_s", f);
                break 'stems;
            }
        }
    }
    out.push(case);

    let mut case = Case::pass("representation-formula", "f = f_s + Im(x) f'_s");
    for st in &stems {
        let rebuilt = &st.spherical_value().induce() + &(&xv * &st.spherical_derivative().induce());
        if rebuilt != st.induce() {
            case = Case::fail("representation-formula", "f = f_s + Im(x) f'_s", &rebuilt - &st.induce());
            break;
        }
    }
    out.push(case);

    let slice_inputs: Vec<CliffPoly> = stems.iter().map(StemPoly::induce).collect();
    let gamma_ok = stem::require_slice_gamma(&rs);
    if let Err(e) = &gamma_ok {
        out.push(Case::skipped("theta-equals-s-dh", "theta-bar f = |x|^2 D_h f on slice f", e.to_string()));
    } else {
        out.push(for_samples("theta-equals-s-dh", "theta-bar f = |x|^2 D_h f on slice f", slice_inputs, |p| {
            let lhs = dirac::theta_scaled(p);
            let rhs = &CliffPoly::vector_norm_squared(m) * &dirac::cauchy_riemann(&rs, p)?;
            Ok(diff_or_none(lhs, rhs))
        }));
    }

    let conj = &CliffPoly::var(m, 0) - &xv;
    out.push(guard("conjugate-slice-not-regular", "x_0 - x is slice, not slice regular", &conj, || {
        let ok = stem::is_slice(&rs, &conj)? && !stem::is_slice_regular(&rs, &conj)?;
        Ok(holds("conjugate-slice-not-regular", "x_0 - x is slice, not slice regular", ok, &conj))
    }));
    let p = x.pow(cfg.max_power.min(6));
    out.push(guard("powers-slice-regular", "x^n is slice regular", &p, || {
        for n in 0..=cfg.max_power.min(6) {
            let q = x.pow(n);
            if !stem::is_slice_regular(&rs, &q)? {
                return Ok(Case::fail("powers-slice-regular", "x^n is slice regular", q));
            }
        }
        Ok(Case::pass("powers-slice-regular", "x^n is slice regular"))
    }));
    if m >= 2 {
        let w = CliffPoly::var(m, 1).pow(2);
        out.push(guard("non-slice-witness", "Gamma-tilde x_1^2 != 0", &w, || {
            Ok(holds("non-slice-witness", "Gamma-tilde x_1^2 != 0", !stem::is_slice(&rs, &w)?, &w))
        }));
    }

    let mut case = Case::pass("root-independence", "a rho_a f is the same for every root");
    if rs.roots().len() >= 2 {
        'outer: for st in &stems {
            let f = st.induce();
            let first = rs.rho(0, &f)?.left_mul(&CliffordElement::vector(&rs.roots()[0]));
            for k in 1..rs.roots().len() {
                let other = rs.rho(k, &f)?.left_mul(&CliffordElement::vector(&rs.roots()[k]));
                if other != first {
                    case = Case::fail("root-independence", "a rho_a f is the same for every root", &other - &first);
                    break 'outer;
                }
            }
        }
    } else {
        case = Case::skipped("root-independence", "a rho_a f is the same for every root", "fewer than two roots");
    }
    out.push(case);
    Ok(out)
}

fn right_scale(st: &StemPoly, c: &CliffordElement) -> StemPoly {
    let m = st.dim();
    StemPoly::new(
        BiPoly::from_terms(m, st.a.terms().map(|(k, v)| (*k, v * c))),
        BiPoly::from_terms(m, st.b.terms().map(|(k, v)| (*k, v * c))),
    )
}

fn fueter_suite(cfg: &SuiteConfig) -> Result<Vec<Case>> {
    let m = cfg.dim(3)?;
    let mut s = cfg.sampler(5);
    let x = CliffPoly::paravector(m);
    let mut out = Vec::new();
    let half = (m.saturating_sub(1) / 2) as u32;

    if m % 2 == 1 {
        let mut case = Case::pass("fueter-monogenic", "Delta^{(m-1)/2} x^n is monogenic");
        let mut fit = Case::pass("fueter-stem-agreement", "V_{(m-1)/2} agrees with Delta^{(m-1)/2} up to a constant");
        let mut constants = Vec::new();
        for n in 0..=cfg.max_power {
            let p = x.pow(n);
            let img = fueter::fueter_map(&p)?;
            if !dirac::is_monogenic(&img) {
                case = Case::fail("fueter-monogenic", "Delta^{(m-1)/2} x^n is monogenic", img.clone());
            }
            let v = fueter::v_n(&StemPoly::power(m, n), half).induce();
            match fueter::proportionality(&img, &v) {
                Some(lam) if !lam.is_zero() || (img.is_zero() && v.is_zero()) => {
                    if !lam.is_zero() {
                        constants.push(format!("n={n}: {}", format_rational(&lam)));
                    }
                }
                _ => {
                    fit = Case::fail(
                        "fueter-stem-agreement",
                        "V_{(m-1)/2} agrees with Delta^{(m-1)/2} up to a constant",
                        &img - &v,
                    );
                }
            }
        }
        out.push(case);
        if fit.status == crate::report::Status::Pass {
            fit = fit.with_note(constants.join(", "));
        }
        out.push(fit);
    } else {
        out.push(Case::skipped("fueter-monogenic", "Delta^{(m-1)/2} x^n is monogenic", "m is even"));
        out.push(Case::skipped(
            "fueter-stem-agreement",
            "V_{(m-1)/2} agrees with Delta^{(m-1)/2} up to a constant",
            "m is even",
        ));
    }

    let stems: Vec<StemPoly> = (0..=cfg.max_power).map(|n| StemPoly::power(m, n)).collect();
    let n_max = 4u32;
    let mut case = Case::pass("vekua-shift", "V_j of a holomorphic stem solves the Vekua system with c = 2j");
    'o: for st in &stems {
        for j in 0..=n_max {
            let v = fueter::v_n(st, j);
            if !v.check_vekua(&VekuaParameter::new(int(2 * i64::from(j)))) {
                case = Case::fail("vekua-shift", "V_j of a holomorphic stem solves the Vekua system with c = 2j", v.induce());
                break 'o;
            }
        }
    }
    out.push(case);

    if m >= 1 {
        let report = fueter::gamma_shift_report(n_max, m, &stems)?;
        for step in &report.steps {
            let id = format!("gamma-shift-{}", step.n);
            let reference = "V_n f lies in ker D_h when gamma = n + (1-m)/2";
            let c = match &step.direct {
                DirectCheck::Passed(k) if step.vekua_pass => Case::pass(&id, reference).with_note(format!(
                    "kappa = ({})",
                    k.iter().map(format_rational).collect::<Vec<_>>().join(", ")
                )),
                DirectCheck::Skipped(why) if step.vekua_pass => {
                    Case::pass(&id, reference).with_note(format!("Vekua only; {why}"))
                }
                _ => Case::fail(&id, reference, fueter::v_n(&stems[stems.len() - 1], step.n).induce()),
            };
            out.push(c);
        }
    }

    let mut case = Case::pass("hyperbolic-alpha", "L kills the spherical value of x^n");
    for st in &stems {
        let a = st.spherical_value().induce();
        let l = fueter::hyperbolic_l(&a)?;
        if !l.is_zero() {
            case = Case::fail("hyperbolic-alpha", "L kills the spherical value of x^n", a);
            break;
        }
    }
    out.push(case);

    let rank_one = RootSystem::rank_one(m.max(1), m.max(1), frac(1 - m as i64, 2));
    for odd in [false, true] {
        let id = if odd { "hyperbolic-parity-odd" } else { "hyperbolic-parity-even" };
        let reference = if odd { "x_m^2 Delta_h = L - (1-m) on odd" } else { "x_m^2 Delta_h = L on even" };
        let inputs: Vec<CliffPoly> = (0..cfg.samples).map(|_| s.parity_poly(m, cfg.max_degree, 4, odd)).collect();
        out.push(for_samples(id, reference, inputs, |p| {
            let lhs = rank_one.laplacian(p)?.mul_var(m).mul_var(m);
            let mut rhs = fueter::hyperbolic_l(p)?;
            if odd {
                rhs.add_scaled(p, &-int(1 - m as i64));
            }
            Ok(diff_or_none(lhs, rhs))
        }));
    }

    if m >= 2 {
        let x2 = x.pow(2);
        let st = StemPoly::power(m, 2);
        let xb = &CliffPoly::vector_variable(m) * &st.b.to_poly();
        let claim = &fueter::hyperbolic_l(&xb)? - &xb.scale(&int(2 * (1 - m as i64)));
        let reference = "L(w beta) = 2(1-m) w beta";
        out.push(if claim.is_zero() {
            Case::pass("hyperbolic-beta-claim", reference)
        } else {
            Case::discrepancy("hyperbolic-beta-claim", reference, claim)
                .with_note("eigenvalue is 0 on the x_m-even part and (1-m) on the x_m-odd part")
        });
        for (id, p) in [("local-decomposition-x", x.clone()), ("local-decomposition-x2", x2.clone())] {
            let ld = fueter::local_decompose(&p)?;
            let reference = "local decomposition formulas vs exact stem split";
            out.push(if ld.agrees() {
                Case::pass(id, reference)
            } else {
                let w = if ld.discrepancy_xb.is_zero() { ld.discrepancy_a } else { ld.discrepancy_xb };
                Case::discrepancy(id, reference, w)
            });
        }
        let ld = fueter::local_decompose(&x2)?;
        let reference = "spherical derivative from the local decomposition";
        out.push(if ld.discrepancy_xb.is_zero() {
            Case::pass("local-spherical-derivative", reference)
        } else {
            Case::discrepancy("local-spherical-derivative", reference, ld.discrepancy_xb)
        });
    }

    let ck: Vec<CliffPoly> = (0..cfg.samples).map(|_| s.vector_poly(m, cfg.max_degree.max(1), 4)).collect();
    out.push(for_samples("ck-extension", "Cauchy-Kovalevskaya extension is monogenic", ck, |q| {
        let e = fueter::ck_extend(q)?;
        if !dirac::is_monogenic(&e) {
            return Ok(Some(dirac::classical_cauchy_riemann(&e)));
        }
        Ok(diff_or_none(e.filter_terms(|mono| mono.exp(0) == 0), q.clone()))
    }));
    Ok(out)
}

fn example_intertwine_system(m: usize) -> RootSystem {
    if m == 3 {
        RootSystem::coordinate(vec![int(0), int(0), int(-1)])
    } else {
        slice_gamma_system(m)
    }
}

/// 𝒯(x_0 + x̲) from the constant matrix T_j x_i.
fn expected_linear_image(rs: &RootSystem) -> Result<CliffPoly> {
    let m = rs.dim();
    let mut out = CliffPoly::var(m, 0);
    for i in 1..=m {
        for j in 1..=m {
            let c = rs.dunkl(j, &CliffPoly::var(m, i))?.constant_term().scalar_part();
            if !c.is_zero() {
                let t = CliffPoly::var(m, j).left_mul(&CliffordElement::generator(m, i));
                out.add_scaled(&t, &c);
            }
        }
    }
    Ok(out)
}

/// x_0² - Σ x_i²(1+2κ_i) + 2x_0 Σ e_i x_i (1+2κ_i).
pub fn square_family(kappa: &[Rational]) -> CliffPoly {
    let m = kappa.len();
    let mut out = CliffPoly::var(m, 0).pow(2);
    for i in 1..=m {
        let w = int(1) + int(2) * &kappa[i - 1];
        out.add_scaled(&CliffPoly::var(m, i).pow(2), &-w.clone());
        let cross = CliffPoly::var(m, 0).mul_var(i).left_mul(&CliffordElement::generator(m, i));
        out.add_scaled(&cross, &(int(2) * w));
    }
    out
}

/// 2x_0² - x_1² - x_2² + x_3² - 4x_0(e_1x_1 + e_2x_2 - e_3x_3).
pub fn printed_square_display() -> CliffPoly {
    let m = 3;
    let mut out = CliffPoly::var(m, 0).pow(2).scale(&int(2));
    for (i, sign) in [(1, -1), (2, -1), (3, 1)] {
        out.add_scaled(&CliffPoly::var(m, i).pow(2), &int(sign));
        let cross = CliffPoly::var(m, 0).mul_var(i).left_mul(&CliffordElement::generator(m, i));
        out.add_scaled(&cross, &int(-4 * -sign));
    }
    out
}

fn intertwine_suite(cfg: &SuiteConfig) -> Result<Vec<Case>> {
    let m = cfg.dim(3)?;
    let rs = suite_system(cfg, m, example_intertwine_system);
    let mut s = cfg.sampler(6);
    let x = CliffPoly::paravector(m);
    let mut out = Vec::new();
    let coordinate = rs.is_rank_one_product()
        && rs.roots().len() == m
        && rs.roots().iter().enumerate().all(|(i, r)| {
            r.iter().enumerate().all(|(j, c)| if i == j { c.is_one() } else { c.is_zero() })
        });

    out.push(guard("degree-one", "inverse intertwining of x", &x, || {
        let got = intertwine::inverse_intertwine(&rs, &x)?;
        let expected = expected_linear_image(&rs)?;
        if got != expected {
            return Ok(Case::fail("degree-one", "inverse intertwining of x", &got - &expected));
        }
        let slice = stem::require_slice_gamma(&rs).is_ok();
        Ok(holds("degree-one", "inverse intertwining of x", !slice || dirac::is_monogenic(&got), &got))
    }));

    let x2 = x.pow(2);
    if coordinate {
        out.push(guard("square-family", "inverse intertwining of x^2", &x2, || {
            let got = intertwine::inverse_intertwine(&rs, &x2)?;
            Ok(equal("square-family", "inverse intertwining of x^2", &got, &square_family(rs.kappa())))
        }));
        out.push(guard("square-defect", "dbar T x^2 = 4x_0((1-m)/2 - sum kappa)", &x2, || {
            let got = dirac::classical_cauchy_riemann(&intertwine::inverse_intertwine(&rs, &x2)?);
            let expected = CliffPoly::var(m, 0).scale(&intertwine::intertwined_square_defect(m, &rs.gamma()));
            Ok(equal("square-defect", "dbar T x^2 = 4x_0((1-m)/2 - sum kappa)", &got, &expected))
        }));
    } else {
        out.push(Case::skipped("square-family", "inverse intertwining of x^2", "root system is not coordinate"));
        out.push(Case::skipped("square-defect", "dbar T x^2 = 4x_0((1-m)/2 - sum kappa)", "root system is not coordinate"));
    }

    let target = frac(1 - m as i64, 2);
    let mut constrained = Case::pass("square-constraint", "T x^2 monogenic iff sum kappa = (1-m)/2");
    let mut tried = 0;
    while tried < 2 * cfg.samples.max(10) {
        let mut kappa: Vec<Rational> = (0..m).map(|_| s.rational()).collect();
        let on = tried % 2 == 0;
        if on {
            let rest: Rational = kappa[..m - 1].iter().sum();
            kappa[m - 1] = &target - rest;
        } else if kappa.iter().sum::<Rational>() == target {
            continue;
        }
        let probe = RootSystem::coordinate(kappa.clone());
        if probe.ensure_nonsingular().is_err() {
            continue;
        }
        tried += 1;
        let img = intertwine::inverse_intertwine(&probe, &x2)?;
        if img != square_family(&kappa) || dirac::is_monogenic(&img) != on {
            constrained = Case::fail("square-constraint", "T x^2 monogenic iff sum kappa = (1-m)/2", img);
            break;
        }
    }
    out.push(constrained.with_note(format!("{tried} multiplicities")));

    if m == 3 {
        let display = printed_square_display();
        let reference = "printed first display of T x^2 at kappa = (0,0,-1)";
        let computed = intertwine::inverse_intertwine(&RootSystem::coordinate(vec![int(0), int(0), int(-1)]), &x2)?;
        out.push(if display == computed && dirac::is_monogenic(&display) {
            Case::pass("square-printed-display", reference)
        } else {
            Case::discrepancy("square-printed-display", reference, dirac::classical_cauchy_riemann(&display))
                .with_note(format!("computed: {computed}"))
        });
    }

    let randoms: Vec<CliffPoly> = (0..cfg.samples).map(|_| s.poly(m, cfg.max_degree, 4)).collect();
    out.push(for_samples("intertwining-identity", "d_j T = T T_j", randoms.clone(), |p| {
        for j in 1..=m {
            if !intertwine::check_intertwining(&rs, p, j)? {
                let lhs = intertwine::inverse_intertwine(&rs, p)?.partial(j);
                let rhs = intertwine::inverse_intertwine(&rs, &rs.dunkl(j, p)?)?;
                return Ok(Some(&lhs - &rhs));
            }
        }
        Ok(None)
    }));

    out.push(for_samples("degree-and-linearity", "T preserves degree and is linear", randoms.clone(), |p| {
        let k = p.degree().unwrap_or(0);
        let h = p.homogeneous_component(k);
        let th = intertwine::inverse_intertwine(&rs, &h)?;
        if !th.is_zero() && (!th.is_homogeneous() || th.degree() != Some(k)) {
            return Ok(Some(th));
        }
        let c = int(3);
        let lhs = intertwine::inverse_intertwine(&rs, &(&p.scale(&c) + &h))?;
        let rhs = &intertwine::inverse_intertwine(&rs, p)?.scale(&c) + &th;
        Ok(diff_or_none(lhs, rhs))
    }));

    if let Err(e) = stem::require_slice_gamma(&rs) {
        out.push(Case::skipped("monogenic-images", "T maps slice regular to monogenic", e.to_string()));
    } else {
        let regular: Vec<CliffPoly> = (0..=cfg.max_power.min(6)).map(|n| x.pow(n)).collect();
        out.push(for_samples("monogenic-images", "T maps slice regular to monogenic", regular, |p| {
            let t = intertwine::inverse_intertwine(&rs, p)?;
            Ok((!dirac::is_monogenic(&t)).then(|| dirac::classical_cauchy_riemann(&t)))
        }));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    #[test]
    fn default_suites_pass() {
        let cfg = SuiteConfig { samples: 3, max_power: 5, ..SuiteConfig::default() };
        for sel in Selector::EACH {
            let r = run_suite(sel, &cfg).unwrap();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn discrepancies_are_recorded() {
        let cfg = SuiteConfig { samples: 2, max_power: 4, ..SuiteConfig::default() };
        let f = run_suite(Selector::Fueter, &cfg).unwrap();
        assert!(f.count(Status::DiscrepancyRecorded) >= 3);
        let i = run_suite(Selector::Intertwine, &cfg).unwrap();
        let printed = i.cases.iter().find(|c| c.id == "square-printed-display").unwrap();
        assert_eq!(printed.status, Status::DiscrepancyRecorded);
    }

    #[test]
    fn printed_display_is_not_monogenic() {
        let d = dirac::classical_cauchy_riemann(&printed_square_display());
        let m = 3;
        let mut expected = CliffPoly::var(m, 0).scale(&int(8));
        for (i, sign) in [(1, 1), (2, 1), (3, -1)] {
            let t = CliffPoly::var(m, i).left_mul(&CliffordElement::generator(m, i));
            expected.add_scaled(&t, &int(-6 * sign));
        }
        assert_eq!(d, expected);
    }

    #[test]
    fn singular_config_skips_basis() {
        let cfg = SuiteConfig {
            root_system: Some(RootSystem::rank_one(1, 1, frac(-1, 2))),
            samples: 2,
            ..SuiteConfig::default()
        };
        let r = run_suite(Selector::Dirac, &cfg).unwrap();
        assert!(r.passed());
        let skipped: Vec<_> = r.cases.iter().filter(|c| c.status == Status::Skipped).collect();
        assert!(!skipped.is_empty());
        assert!(skipped.iter().all(|c| c.note.as_deref().unwrap_or("").contains("singular")));
    }

    #[test]
    fn reports_are_deterministic() {
        let cfg = SuiteConfig { seed: 99, samples: 2, max_power: 3, ..SuiteConfig::default() };
        let a = run_suite(Selector::All, &cfg).unwrap().to_json();
        let b = run_suite(Selector::All, &cfg).unwrap().to_json();
        assert_eq!(a, b);
    }

    #[test]
    fn dimension_conflict_is_an_error() {
        let cfg = SuiteConfig { m: Some(2), root_system: Some(RootSystem::trivial(3)), ..SuiteConfig::default() };
        assert!(run_suite(Selector::Dunkl, &cfg).is_err());
    }
}
