//! Name-based operator dispatch shared by the command line and the Python
//! bindings.

use crate::dirac::{GammaRoute, OperatorTag};
use crate::dunkl::RootSystem;
use crate::error::{Error, Result};
use crate::fueter;
use crate::intertwine;
use crate::poly::CliffPoly;
use crate::stem;

/// Every accepted operator name; `dunkl:<i>` and `vn:<n>` are parametrized.
pub fn operator_names() -> Vec<String> {
    let mut out: Vec<String> = OperatorTag::ALL.iter().map(|t| t.name().to_string()).collect();
    for extra in ["gamma_tilde", "dunkl:<i>", "intertwine", "ck", "vn:<n>", "fueter"] {
        out.push(extra.to_string());
    }
    out
}

fn parameter(name: &str, prefix: &str) -> Option<Result<u32>> {
    let rest = name.strip_prefix(prefix)?;
    Some(
        rest.parse::<u32>()
            .map_err(|_| Error::parse("operator", format!("bad parameter in {name:?}"))),
    )
}

pub fn apply_named(name: &str, rs: &RootSystem, p: &CliffPoly) -> Result<CliffPoly> {
    if rs.dim() != p.dim() {
        return Err(Error::DimensionMismatch { left: rs.dim(), right: p.dim() });
    }
    if let Some(tag) = OperatorTag::from_name(name) {
        return tag.apply(rs, p);
    }
    if let Some(i) = parameter(name, "dunkl:") {
        let i = i? as usize;
        if i > p.dim() {
            return Err(Error::IndexOutOfRange { index: i, m: p.dim() });
        }
        return rs.dunkl(i, p);
    }
    if let Some(n) = parameter(name, "vn:") {
        let st = stem::slice_regular_stem(p)?;
        return Ok(fueter::v_n(&st, n?).induce());
    }
    match name {
        "gamma_tilde" => crate::dirac::gamma_tilde(rs, p, GammaRoute::Rho),
        "intertwine" => intertwine::inverse_intertwine(rs, p),
        "ck" => fueter::ck_extend(p),
        "fueter" => fueter::fueter_map(p),
        _ => Err(Error::parse(
            "operator",
            format!("unknown operator {name:?}; expected one of {}", operator_names().join(", ")),
        )),
    }
}
