//! Field-element text syntax for the query interface: `0` and bare
//! integers are element ids, `g^k` is the k-th power of the field's fixed
//! generator, and `w` abbreviates `g^1` in F_4.

use anyhow::{anyhow, bail, Result};
use permlab::gf::{Fe, FieldCtx};

pub fn parse_element(ctx: &FieldCtx, s: &str) -> Result<Fe> {
    let s = s.trim();
    if s == "w" {
        if ctx.size() != 4 {
            bail!(
                "'w' is the F_4 shorthand for g^1; this field has size {}",
                ctx.size()
            );
        }
        return Ok(ctx.exp_gen(1));
    }
    if let Some(exp) = s.strip_prefix("g^") {
        let k: u64 = exp
            .parse()
            .map_err(|_| anyhow!("bad generator exponent '{exp}'"))?;
        return Ok(ctx.exp_gen(k));
    }
    let id: u64 = s
        .parse()
        .map_err(|_| anyhow!("cannot parse field element '{s}'"))?;
    ctx.el(id).map_err(|e| anyhow!("{e}"))
}

/// Parses `v1,v2,...` positionally against `names`, or `name=value` pairs
/// in any order with omitted names defaulting to zero.
pub fn parse_coeffs(ctx: &FieldCtx, s: &str, names: &[&str]) -> Result<Vec<Fe>> {
    let parts: Vec<&str> = s
        .split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .collect();
    if parts.iter().any(|p| p.contains('=')) {
        let mut out = vec![ctx.zero(); names.len()];
        for part in parts {
            let (name, value) = part
                .split_once('=')
                .ok_or_else(|| anyhow!("expected name=value, got '{part}'"))?;
            let pos = names
                .iter()
                .position(|n| *n == name.trim())
                .ok_or_else(|| anyhow!("unknown coefficient '{}'", name.trim()))?;
            out[pos] = parse_element(ctx, value)?;
        }
        Ok(out)
    } else {
        if parts.len() != names.len() {
            bail!(
                "expected {} coefficients ({}), got {}",
                names.len(),
                names.join(","),
                parts.len()
            );
        }
        parts.iter().map(|p| parse_element(ctx, p)).collect()
    }
}
