//! Text formats for ideals, monomials, index sets and partitions.
//!
//! An ideal file starts with a header line `n=4`, followed by one monomial
//! per line, written either as `x1^2*x2` or as an exponent vector
//! `[2,1,0,0]`. Anything after `#` is a comment; blank lines are ignored.

use crate::error::{Error, Result};
use crate::monomials::{Monomial, MonomialIdeal, VarSet, MAX_VARS};
use crate::symmetric::{Partition, SymmetricIdealSpec};

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn parse_u32(s: &str, line: usize) -> Result<u32> {
    s.trim().parse().map_err(|_| perr(line, format!("expected a nonnegative integer, got {s:?}")))
}

fn parse_monomial_at(n: usize, s: &str, line: usize) -> Result<Monomial> {
    let s = s.trim();
    if let Some(inner) = s.strip_prefix('[') {
        let inner = inner.strip_suffix(']').ok_or_else(|| perr(line, "unterminated exponent vector"))?;
        let exps = inner.split(',').map(|t| parse_u32(t, line)).collect::<Result<Vec<_>>>()?;
        if exps.len() != n {
            return Err(perr(line, format!("exponent vector has {} entries, expected {n}", exps.len())));
        }
        return Ok(Monomial::new(exps));
    }
    let mut exps = vec![0u32; n];
    if s == "1" {
        return Ok(Monomial::new(exps));
    }
    for factor in s.split('*') {
        let factor = factor.trim();
        let body = factor.strip_prefix('x').ok_or_else(|| perr(line, format!("bad factor {factor:?}")))?;
        let (idx, e) = match body.split_once('^') {
            Some((i, e)) => (i, parse_u32(e, line)?),
            None => (body, 1),
        };
        let i: usize = idx.parse().map_err(|_| perr(line, format!("bad variable index in {factor:?}")))?;
        if i == 0 || i > n {
            return Err(perr(line, format!("variable x{i} outside x1..x{n}")));
        }
        exps[i - 1] += e;
    }
    Ok(Monomial::new(exps))
}

/// Parses `x1^2*x2`, `1`, or `[2,1,0]` in `n` variables.
pub fn parse_monomial(n: usize, s: &str) -> Result<Monomial> {
    parse_monomial_at(n, s, 1)
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

/// Parses an ideal file.
pub fn parse_ideal(text: &str) -> Result<MonomialIdeal> {
    let mut n = None;
    let mut gens = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let s = strip_comment(raw);
        if s.is_empty() {
            continue;
        }
        match n {
            None => {
                let v = s.strip_prefix("n=").ok_or_else(|| perr(line, "expected header `n=<count>`"))?;
                let v = parse_u32(v, line)? as usize;
                if v == 0 || v > MAX_VARS {
                    return Err(perr(line, format!("variable count must be in 1..={MAX_VARS}")));
                }
                n = Some(v);
            }
            Some(n) => gens.push(parse_monomial_at(n, s, line)?),
        }
    }
    let n = n.ok_or_else(|| perr(1, "missing header `n=<count>`"))?;
    MonomialIdeal::new(n, gens)
}

/// Canonical text form: header plus minimal generators in canonical order.
pub fn format_ideal(ideal: &MonomialIdeal) -> String {
    let mut out = format!("n={}\n", ideal.n());
    for g in ideal.gens() {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}

/// Parses a comma-separated list of 1-based indices such as `1,2`.
pub fn parse_varset(n: usize, s: &str) -> Result<VarSet> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(VarSet::EMPTY);
    }
    let idx = s.split(',').map(|t| parse_u32(t, 1).map(|v| v as usize)).collect::<Result<Vec<_>>>()?;
    VarSet::from_indices(n, idx)
}

/// Parses a comma-separated exponent list such as `1,1,0,1` as a monomial.
pub fn parse_multidegree(n: usize, s: &str) -> Result<Monomial> {
    parse_monomial(n, &format!("[{}]", s.trim()))
}

/// Parses a partition such as `2,1,1,0`.
pub fn parse_partition(s: &str) -> Result<Partition> {
    Partition::new(s.split(',').map(|t| parse_u32(t, 1)).collect::<Result<Vec<_>>>()?)
}

/// Parses partitions separated by `;`, such as `3,0,0,0;2,1,0,0`.
pub fn parse_lambdas(s: &str) -> Result<SymmetricIdealSpec> {
    let lambdas = s.split(';').map(parse_partition).collect::<Result<Vec<_>>>()?;
    let n = lambdas.first().map_or(0, Partition::n);
    SymmetricIdealSpec::new(n, lambdas)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = "# J\nn=4\nx1*x3\n[1,0,0,1]  # vector form\n\nx2*x3\nx2*x4\nx1*x3*x4\n";
        let i = parse_ideal(text).unwrap();
        assert_eq!(i.gens().len(), 4);
        let canon = format_ideal(&i);
        assert_eq!(canon, "n=4\nx1*x3\nx1*x4\nx2*x3\nx2*x4\n");
        assert_eq!(format_ideal(&parse_ideal(&canon).unwrap()), canon);
    }

    #[test]
    fn monomial_forms() {
        assert_eq!(parse_monomial(3, "x1^2*x3").unwrap(), Monomial::new(vec![2, 0, 1]));
        assert_eq!(parse_monomial(3, "1").unwrap(), Monomial::one(3));
        assert_eq!(parse_monomial(3, "[0,4,1]").unwrap(), Monomial::new(vec![0, 4, 1]));
        assert!(parse_monomial(3, "x4").is_err());
        assert!(parse_monomial(3, "[1,2]").is_err());
        assert!(parse_monomial(3, "y1").is_err());
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(
            parse_ideal("n=2\nx1\nx3\n").unwrap_err(),
            Error::Parse { line: 3, msg: "variable x3 outside x1..x2".into() }
        );
        assert!(matches!(parse_ideal("x1\n"), Err(Error::Parse { line: 1, .. })));
        assert!(parse_ideal("# nothing\n").is_err());
    }

    #[test]
    fn lists() {
        assert_eq!(parse_varset(4, "1,2").unwrap().to_vec(), vec![1, 2]);
        assert!(parse_varset(2, "3").is_err());
        let spec = parse_lambdas("3,0,0,0;2,1,0,0").unwrap();
        assert_eq!(spec.n(), 4);
        assert_eq!(spec.lambdas().len(), 2);
        assert!(parse_partition("1,2").is_err());
    }
}
