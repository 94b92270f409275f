//! Compact literals for ad-hoc evaluation from the command line.
//!
//! Half-line: `(a,b,c)(a,b,c)^m...` for factors `(a·x + b + c·i)^m`,
//! optionally followed by `; num=p0,p1,... ; m=weight`.
//!
//! Cube: `k=2; mu=0,0; logw=1,1; j=1` with optional `m=`, `z=`, `e=` and
//! `part=re|im|full`. Complex numbers are written `1+2i`, `-0.5`, `3i`.

use super::{CubeIntegrandSpec, FactorProduct, Geometric, LinearFactor, Part};
use crate::{Error, Result, C64};

fn num_at(s: &str, pos: usize) -> Result<f64> {
    let t = s.trim();
    match t.parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(v),
        _ => Err(Error::parse(pos, format!("expected a number, found `{t}`"))),
    }
}

/// Parses `re`, `re±imi`, `imi`, `±i`.
pub fn parse_complex(src: &str, pos: usize) -> Result<C64> {
    let t = src.trim();
    let lead = src.len() - src.trim_start().len();
    let pos = pos + lead;
    let Some(body) = t.strip_suffix('i') else {
        return Ok(C64::new(num_at(t, pos)?, 0.0));
    };
    // Split at the last sign that is not the leading one or part of an exponent.
    let bytes = body.as_bytes();
    let mut split = None;
    for k in (1..bytes.len()).rev() {
        if (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E') {
            split = Some(k);
            break;
        }
    }
    let im_of = |s: &str, p: usize| -> Result<f64> {
        match s {
            "" | "+" => Ok(1.0),
            "-" => Ok(-1.0),
            other => num_at(other, p),
        }
    };
    match split {
        Some(k) => Ok(C64::new(num_at(&body[..k], pos)?, im_of(&body[k..], pos + k)?)),
        None => Ok(C64::new(0.0, im_of(body, pos)?)),
    }
}

fn list<T>(src: &str, pos: usize, f: impl Fn(&str, usize) -> Result<T>) -> Result<Vec<T>> {
    let mut out = Vec::new();
    let mut off = 0;
    for item in src.split(',') {
        out.push(f(item, pos + off)?);
        off += item.len() + 1;
    }
    Ok(out)
}

/// Parses a half-line literal into a product and an exponential weight.
pub fn parse_halfline(src: &str) -> Result<(FactorProduct, f64)> {
    let (head, tail) = match src.find(';') {
        Some(k) => (&src[..k], Some((k + 1, &src[k + 1..]))),
        None => (src, None),
    };
    let mut factors = Vec::new();
    let b = head.as_bytes();
    let mut i = 0;
    while i < b.len() {
        match b[i] {
            c if c.is_ascii_whitespace() => i += 1,
            b'(' => {
                let close = head[i..]
                    .find(')')
                    .map(|k| k + i)
                    .ok_or_else(|| Error::parse(i, "unterminated factor"))?;
                let parts = list(&head[i + 1..close], i + 1, |s, p| Ok((s.to_string(), p)))?;
                if parts.len() != 3 {
                    return Err(Error::parse(i, "factor needs three entries (a,b,c)"));
                }
                let a = num_at(&parts[0].0, parts[0].1)?;
                let re = num_at(&parts[1].0, parts[1].1)?;
                let im = num_at(&parts[2].0, parts[2].1)?;
                i = close + 1;
                let mut m = 1u32;
                if i < b.len() && b[i] == b'^' {
                    let start = i + 1;
                    let mut end = start;
                    while end < b.len() && b[end].is_ascii_digit() {
                        end += 1;
                    }
                    m = head[start..end]
                        .parse()
                        .map_err(|_| Error::parse(start, "expected a multiplicity after `^`"))?;
                    i = end;
                }
                factors.push(LinearFactor::new(a, C64::new(re, im), m));
            }
            _ => return Err(Error::parse(i, format!("unexpected `{}`", head[i..].chars().next().unwrap_or(' ')))),
        }
    }
    if factors.is_empty() {
        return Err(Error::parse(0, "no factors"));
    }
    let mut numerator = vec![1.0];
    let mut weight = 0.0;
    if let Some((base, rest)) = tail {
        for (k, v, p) in key_values(rest, base)? {
            match k.as_str() {
                "num" => numerator = list(&v, p, num_at)?,
                "m" => weight = num_at(&v, p)?,
                other => return Err(Error::parse(p, format!("unknown key `{other}`"))),
            }
        }
    }
    Ok((FactorProduct::new(factors, numerator), weight))
}

fn key_values(src: &str, base: usize) -> Result<Vec<(String, String, usize)>> {
    let mut out = Vec::new();
    let mut off = base;
    for item in src.split(';') {
        if !item.trim().is_empty() {
            let eq = item.find('=').ok_or_else(|| Error::parse(off, "expected `key=value`"))?;
            let key = item[..eq].trim().to_string();
            out.push((key, item[eq + 1..].to_string(), off + eq + 1));
        }
        off += item.len() + 1;
    }
    Ok(out)
}

/// Parses a cube literal into a spec and the retained part.
pub fn parse_cube(src: &str) -> Result<(CubeIntegrandSpec, Part)> {
    let mut k = None;
    let mut mu = None;
    let mut w = None;
    let mut j = 0u32;
    let mut m = 0.0;
    let mut z = None;
    let mut e = None;
    let mut part = Part::Full;
    for (key, v, p) in key_values(src, 0)? {
        match key.as_str() {
            "k" => k = Some(v.trim().parse::<usize>().map_err(|_| Error::parse(p, "expected a dimension"))?),
            "mu" => mu = Some(list(&v, p, parse_complex)?),
            "logw" => w = Some(list(&v, p, num_at)?),
            "j" => j = v.trim().parse().map_err(|_| Error::parse(p, "expected a log power"))?,
            "m" => m = num_at(&v, p)?,
            "z" => z = Some(parse_complex(&v, p)?),
            "e" => e = Some(list(&v, p, num_at)?),
            "part" => part = Part::from_name(v.trim()).ok_or_else(|| Error::parse(p, "expected re, im or full"))?,
            other => return Err(Error::parse(p, format!("unknown key `{other}`"))),
        }
    }
    let k = k.or(mu.as_ref().map(Vec::len)).ok_or_else(|| Error::parse(0, "missing `k`"))?;
    let exponents = mu.unwrap_or_else(|| vec![C64::new(0.0, 0.0); k]);
    let log_weights = w.unwrap_or_else(|| vec![1.0; k]);
    let mut spec = CubeIntegrandSpec { dim: k, exponents, log_weights, log_power: j, log_shift: m, geometric: None, poly_log: None };
    if let Some(z) = z {
        spec.geometric = Some(Geometric { z, exps: e.unwrap_or_else(|| vec![1.0; k]) });
    }
    Ok((spec, part))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_forms() {
        assert_eq!(parse_complex("1+1i", 0).unwrap(), C64::new(1.0, 1.0));
        assert_eq!(parse_complex("-0.5", 0).unwrap(), C64::new(-0.5, 0.0));
        assert_eq!(parse_complex("3i", 0).unwrap(), C64::new(0.0, 3.0));
        assert_eq!(parse_complex("-i", 0).unwrap(), C64::new(0.0, -1.0));
        assert_eq!(parse_complex("1e-3-2i", 0).unwrap(), C64::new(1e-3, -2.0));
        assert!(parse_complex("x", 0).is_err());
    }

    #[test]
    fn halfline_literal() {
        let (fp, m) = parse_halfline("(1,1,1)(2,1,1)").unwrap();
        assert_eq!(m, 0.0);
        assert_eq!(fp.factors, vec![LinearFactor::simple(1.0, 1.0, 1.0), LinearFactor::simple(2.0, 1.0, 1.0)]);
        let (fp, m) = parse_halfline("(1,1,0)^2; num=0,1; m=1").unwrap();
        assert_eq!(fp.factors[0].multiplicity, 2);
        assert_eq!(fp.numerator, vec![0.0, 1.0]);
        assert_eq!(m, 1.0);
    }

    #[test]
    fn halfline_errors_have_positions() {
        match parse_halfline("(1,1,1)(2,x,1)") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 10),
            other => panic!("{other:?}"),
        }
        assert!(parse_halfline("").is_err());
    }

    #[test]
    fn cube_literal() {
        let (spec, part) = parse_cube("k=2; mu=0,0; logw=1,1; j=1").unwrap();
        assert_eq!(spec, CubeIntegrandSpec::real(&[0.0, 0.0], 1));
        assert_eq!(part, Part::Full);
        let (spec, part) = parse_cube("k=2; mu=1i,1i; j=1; z=1; part=im").unwrap();
        assert_eq!(spec.geometric.unwrap().exps, vec![1.0, 1.0]);
        assert_eq!(part, Part::Im);
    }
}
