//! JSON file formats for polynomials, root systems and stems.
//!
//! All numbers are rational strings ("p" or "p/q"); blades are sorted index
//! arrays. Serialization is canonical: terms appear in ascending graded-lex
//! monomial order, then ascending blade order.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::clifford::{Blade, CliffordElement};
use crate::dirac::MonogenicBasis;
use crate::dunkl::{validate_root_system, RootSystem};
use crate::error::{Error, Result};
use crate::poly::{CliffPoly, Monomial};
use crate::rational::{format_rational, parse_rational};
use crate::stem::{BiPoly, StemPoly};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermRecord {
    pub exp: Vec<u32>,
    pub blade: Vec<usize>,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyFile {
    pub m: usize,
    pub terms: Vec<TermRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RootFile {
    pub m: usize,
    pub positive_roots: Vec<Vec<String>>,
    pub kappa: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StemTermRecord {
    pub x0: u32,
    pub s: u32,
    pub blade: Vec<usize>,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StemFile {
    pub m: usize,
    #[serde(rename = "A")]
    pub a: Vec<StemTermRecord>,
    #[serde(rename = "B")]
    pub b: Vec<StemTermRecord>,
}

fn from_json<T: for<'de> Deserialize<'de>>(text: &str, what: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| {
        Error::parse(format!("{what} line {} column {}", e.line(), e.column()), e.to_string())
    })
}

fn blade_from(ctx: &str, idx: &[usize], m: usize) -> Result<Blade> {
    if let Some(&j) = idx.iter().find(|&&j| j == 0 || j > m) {
        return Err(Error::parse(format!("{ctx}.blade"), format!("index {j} outside 1..={m}")));
    }
    Blade::from_indices(idx).map_err(|_| {
        Error::parse(format!("{ctx}.blade"), "indices must be strictly increasing".to_string())
    })
}

fn rational_from(ctx: &str, text: &str) -> Result<crate::rational::Rational> {
    parse_rational(text).map_err(|e| match e {
        Error::Parse { message, .. } => Error::parse(ctx.to_string(), message),
        other => other,
    })
}

impl PolyFile {
    pub fn from_poly(p: &CliffPoly) -> Self {
        let mut terms = Vec::new();
        for (mono, c) in p.terms() {
            for (b, r) in c.terms() {
                terms.push(TermRecord {
                    exp: mono.exps().to_vec(),
                    blade: b.indices().collect(),
                    coeff: format_rational(r),
                });
            }
        }
        PolyFile { m: p.dim(), terms }
    }

    pub fn to_poly(&self) -> Result<CliffPoly> {
        let m = self.m;
        if m > crate::clifford::MAX_DIM {
            return Err(Error::parse("m", format!("dimension {m} exceeds {}", crate::clifford::MAX_DIM)));
        }
        let mut seen = BTreeSet::new();
        let mut out = CliffPoly::zero(m);
        for (i, t) in self.terms.iter().enumerate() {
            let ctx = format!("terms[{i}]");
            if t.exp.len() != m + 1 {
                return Err(Error::parse(
                    format!("{ctx}.exp"),
                    format!("expected {} exponents, found {}", m + 1, t.exp.len()),
                ));
            }
            let blade = blade_from(&ctx, &t.blade, m)?;
            let mono = Monomial::new(t.exp.clone());
            if !seen.insert((mono.clone(), blade)) {
                return Err(Error::parse(ctx, "duplicate term".to_string()));
            }
            let c = rational_from(&format!("{ctx}.coeff"), &t.coeff)?;
            out.add_term(mono, CliffordElement::from_blade(m, blade, c));
        }
        Ok(out)
    }
}

pub fn parse_poly(text: &str) -> Result<CliffPoly> {
    from_json::<PolyFile>(text, "polynomial file")?.to_poly()
}

pub fn serialize_poly(p: &CliffPoly) -> String {
    serde_json::to_string(&PolyFile::from_poly(p)).expect("serializable")
}

pub fn poly_to_value(p: &CliffPoly) -> Value {
    serde_json::to_value(PolyFile::from_poly(p)).expect("serializable")
}

impl RootFile {
    pub fn from_root_system(rs: &RootSystem) -> Self {
        RootFile {
            m: rs.dim(),
            positive_roots: rs
                .roots()
                .iter()
                .map(|r| r.iter().map(format_rational).collect())
                .collect(),
            kappa: rs.kappa().iter().map(format_rational).collect(),
        }
    }

    pub fn to_root_system(&self) -> Result<RootSystem> {
        let roots = self
            .positive_roots
            .iter()
            .enumerate()
            .map(|(i, r)| {
                r.iter()
                    .enumerate()
                    .map(|(j, c)| rational_from(&format!("positive_roots[{i}][{j}]"), c))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let kappa = self
            .kappa
            .iter()
            .enumerate()
            .map(|(i, c)| rational_from(&format!("kappa[{i}]"), c))
            .collect::<Result<Vec<_>>>()?;
        let report = validate_root_system(self.m, &roots, &kappa);
        if !report.is_valid() {
            return Err(Error::InvalidRootSystem(report.violations.join("; ")));
        }
        RootSystem::new(self.m, roots, kappa)
    }
}

pub fn parse_root_system(text: &str) -> Result<RootSystem> {
    from_json::<RootFile>(text, "root file")?.to_root_system()
}

pub fn serialize_root_system(rs: &RootSystem) -> String {
    serde_json::to_string(&RootFile::from_root_system(rs)).expect("serializable")
}

fn bipoly_records(p: &BiPoly) -> Vec<StemTermRecord> {
    let mut out = Vec::new();
    for (&(a, b), c) in p.terms() {
        for (blade, r) in c.terms() {
            out.push(StemTermRecord {
                x0: a,
                s: b,
                blade: blade.indices().collect(),
                coeff: format_rational(r),
            });
        }
    }
    out
}

fn bipoly_from_records(m: usize, part: &str, recs: &[StemTermRecord]) -> Result<BiPoly> {
    let mut seen = BTreeSet::new();
    let mut out = BiPoly::zero(m);
    for (i, t) in recs.iter().enumerate() {
        let ctx = format!("{part}[{i}]");
        let blade = blade_from(&ctx, &t.blade, m)?;
        if !seen.insert((t.x0, t.s, blade)) {
            return Err(Error::parse(ctx, "duplicate term".to_string()));
        }
        let c = rational_from(&format!("{ctx}.coeff"), &t.coeff)?;
        out.add_term(t.x0, t.s, CliffordElement::from_blade(m, blade, c));
    }
    Ok(out)
}

impl StemFile {
    pub fn from_stem(st: &StemPoly) -> Self {
        StemFile { m: st.dim(), a: bipoly_records(&st.a), b: bipoly_records(&st.b) }
    }

    pub fn to_stem(&self) -> Result<StemPoly> {
        if self.m > crate::clifford::MAX_DIM {
            return Err(Error::parse("m", format!("dimension {} exceeds {}", self.m, crate::clifford::MAX_DIM)));
        }
        Ok(StemPoly::new(
            bipoly_from_records(self.m, "A", &self.a)?,
            bipoly_from_records(self.m, "B", &self.b)?,
        ))
    }
}

pub fn parse_stem(text: &str) -> Result<StemPoly> {
    from_json::<StemFile>(text, "stem file")?.to_stem()
}

pub fn serialize_stem(st: &StemPoly) -> String {
    serde_json::to_string(&StemFile::from_stem(st)).expect("serializable")
}

pub fn stem_to_value(st: &StemPoly) -> Value {
    serde_json::to_value(StemFile::from_stem(st)).expect("serializable")
}

/// {"degree": k, "generators": [poly files...]}
pub fn basis_to_value(b: &MonogenicBasis) -> Value {
    serde_json::json!({
        "degree": b.degree,
        "generators": b.generators.iter().map(poly_to_value).collect::<Vec<_>>(),
    })
}
