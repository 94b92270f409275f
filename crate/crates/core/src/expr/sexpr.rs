//! Line-oriented s-expression format for identity records.
//!
//! One record per line; blank lines and lines starting with `;` are ignored.
//! Numbers are written so that parsing yields the identical `f64` bits.
//! The grammar is documented in `docs/registry-format.md`.

use std::fmt::Write as _;

use super::{
    Accel, ConstExpr, CubeIntegrandSpec, CubeRoute, FactorProduct, Func, Geometric, IdentityRecord,
    LinearFactor, LogMonomial, Part, Plan, SeriesSpec, Symbol, TemplateFactor, TemplateTerm, Trust,
};
use crate::{Error, Result, C64};

#[derive(Debug, Clone, PartialEq)]
enum Sx {
    Atom(String, usize),
    Str(String, usize),
    List(Vec<Sx>, usize),
}

impl Sx {
    fn pos(&self) -> usize {
        match self {
            Sx::Atom(_, p) | Sx::Str(_, p) | Sx::List(_, p) => *p,
        }
    }
}

// ---------------------------------------------------------------- printing

pub(crate) fn fmt_num(v: f64) -> String {
    if v.fract() == 0.0 && v.abs() < 1e15 {
        if v == 0.0 && v.is_sign_negative() {
            "-0".to_string()
        } else {
            format!("{}", v as i64)
        }
    } else {
        format!("{v:?}")
    }
}

fn fmt_c(z: C64) -> String {
    if z.im.to_bits() == 0 {
        fmt_num(z.re)
    } else {
        format!("(c {} {})", fmt_num(z.re), fmt_num(z.im))
    }
}

fn fmt_str(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for ch in s.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn fmt_nums(tag: &str, v: &[f64]) -> String {
    let mut s = format!("({tag}");
    for x in v {
        let _ = write!(s, " {}", fmt_num(*x));
    }
    s.push(')');
    s
}

fn fmt_factor(f: &LinearFactor) -> String {
    format!("(f {} {} {})", fmt_num(f.slope), fmt_c(f.offset), f.multiplicity)
}

fn fmt_spec(s: &CubeIntegrandSpec) -> String {
    let mut out = String::from("(spec (mu");
    for mu in &s.exponents {
        let _ = write!(out, " {}", fmt_c(*mu));
    }
    out.push(')');
    let _ = write!(
        out,
        " {} (j {}) (m {})",
        fmt_nums("w", &s.log_weights),
        s.log_power,
        fmt_num(s.log_shift)
    );
    if let Some(g) = &s.geometric {
        let _ = write!(out, " (geom {}", fmt_c(g.z));
        for e in &g.exps {
            let _ = write!(out, " {}", fmt_num(*e));
        }
        out.push(')');
    }
    if let Some(monos) = &s.poly_log {
        out.push_str(" (polylog");
        for m in monos {
            let _ = write!(out, " (mono {}", fmt_num(m.coef));
            for p in &m.powers {
                let _ = write!(out, " {p}");
            }
            out.push(')');
        }
        out.push(')');
    }
    out.push(')');
    out
}

fn fmt_expr(e: &ConstExpr) -> String {
    match e {
        ConstExpr::Num(v) => fmt_num(*v),
        ConstExpr::Sym(s) => s.name().to_string(),
        ConstExpr::Call(f, args) => {
            let mut s = format!("({}", f.name());
            for a in args {
                let _ = write!(s, " {}", fmt_expr(a));
            }
            s.push(')');
            s
        }
    }
}

fn fmt_series(s: &SeriesSpec) -> String {
    match s {
        SeriesSpec::Lerch { z, s, a } => format!("(lerch {} {} {})", fmt_c(*z), fmt_num(*s), fmt_num(*a)),
        SeriesSpec::HalflineSum { ratio, scale, start, part, template } => {
            let mut out = format!(
                "(halfline-sum (ratio {}) (scale {}) (start {start}) (part {})",
                fmt_c(*ratio),
                fmt_c(*scale),
                part.name()
            );
            for t in template {
                let _ = write!(out, " (tt {} {}", fmt_c(t.coef), fmt_nums("num", &t.numerator));
                for f in &t.factors {
                    let _ = write!(
                        out,
                        " (tf {} {} {} {})",
                        fmt_num(f.slope),
                        fmt_c(f.offset),
                        fmt_num(f.step),
                        f.multiplicity
                    );
                }
                out.push(')');
            }
            out.push(')');
            out
        }
        SeriesSpec::EulerGamma => "(euler-gamma)".to_string(),
        SeriesSpec::AltLogProduct { a, b, c } => {
            format!("(alt-log-product {} {} {})", fmt_num(*a), fmt_num(*b), fmt_num(*c))
        }
        SeriesSpec::PsiSum { q, alternating, den } => {
            format!("(psi-sum (q {}) (alt {alternating}) {})", fmt_num(*q), fmt_nums("den", den))
        }
        SeriesSpec::Custom { start, accel, term } => {
            format!("(custom (start {start}) (accel {}) {})", accel.name(), fmt_expr(term))
        }
    }
}

/// Renders a plan in the registry mini-syntax.
pub fn format_plan(p: &Plan) -> String {
    match p {
        Plan::Halfline { product, weight } => {
            let mut s = format!("(halfline (weight {}) {}", fmt_num(*weight), fmt_nums("num", &product.numerator));
            for f in &product.factors {
                let _ = write!(s, " {}", fmt_factor(f));
            }
            s.push(')');
            s
        }
        Plan::Cube { terms, part, route } => {
            let mut s = format!("(cube (part {}) (route {})", part.name(), route.name());
            for (c, spec) in terms {
                let _ = write!(s, " (term {} {})", fmt_c(*c), fmt_spec(spec));
            }
            s.push(')');
            s
        }
        Plan::Series(spec) => format!("(series {})", fmt_series(spec)),
        Plan::Const(e) => format!("(const {})", fmt_expr(e)),
        Plan::Linear(ts) => {
            let mut s = String::from("(linear");
            for (c, p) in ts {
                let _ = write!(s, " (term {} {})", fmt_c(*c), format_plan(p));
            }
            s.push(')');
            s
        }
        Plan::Part(part, inner) => format!("(part {} {})", part.name(), format_plan(inner)),
        Plan::ShiftedProductTrend { a, k_max } => format!("(shifted-trend {} {k_max})", fmt_num(*a)),
    }
}

/// Renders one record as a single line.
pub fn format_record(r: &IdentityRecord) -> String {
    format!(
        "(identity {} (loc {}) (tol {}) (trust {}) (desc {}) (lhs {}) (rhs {}))",
        fmt_str(&r.id),
        fmt_str(&r.location),
        fmt_num(r.tolerance),
        r.trust.name(),
        fmt_str(&r.description),
        format_plan(&r.lhs),
        format_plan(&r.rhs)
    )
}

/// Renders a whole registry, one record per line.
pub fn format_registry(records: &[IdentityRecord]) -> String {
    let mut out = String::new();
    for r in records {
        out.push_str(&format_record(r));
        out.push('\n');
    }
    out
}

// ----------------------------------------------------------------- lexing

fn lex(src: &str, base: usize) -> Result<Vec<Sx>> {
    let bytes: Vec<(usize, char)> = src.char_indices().collect();
    let mut stack: Vec<(Vec<Sx>, usize)> = vec![(Vec::new(), base)];
    let mut i = 0;
    while i < bytes.len() {
        let (off, ch) = bytes[i];
        let pos = base + off;
        match ch {
            c if c.is_whitespace() => i += 1,
            '(' => {
                stack.push((Vec::new(), pos));
                i += 1;
            }
            ')' => {
                let (items, start) = stack.pop().expect("stack has a root");
                let Some(top) = stack.last_mut() else {
                    return Err(Error::parse(pos, "unbalanced ')'"));
                };
                top.0.push(Sx::List(items, start));
                i += 1;
            }
            '"' => {
                let mut s = String::new();
                i += 1;
                loop {
                    let Some(&(_, c)) = bytes.get(i) else {
                        return Err(Error::parse(pos, "unterminated string"));
                    };
                    i += 1;
                    match c {
                        '"' => break,
                        '\\' => {
                            let Some(&(_, e)) = bytes.get(i) else {
                                return Err(Error::parse(pos, "unterminated escape"));
                            };
                            i += 1;
                            s.push(match e {
                                'n' => '\n',
                                other => other,
                            });
                        }
                        c => s.push(c),
                    }
                }
                stack.last_mut().expect("stack has a root").0.push(Sx::Str(s, pos));
            }
            _ => {
                let start = i;
                while i < bytes.len() {
                    let c = bytes[i].1;
                    if c.is_whitespace() || c == '(' || c == ')' || c == '"' {
                        break;
                    }
                    i += 1;
                }
                let end = bytes.get(i).map_or(src.len(), |b| b.0);
                let tok = src[bytes[start].0..end].to_string();
                stack.last_mut().expect("stack has a root").0.push(Sx::Atom(tok, pos));
            }
        }
    }
    if stack.len() != 1 {
        let (_, start) = stack.last().expect("non-empty");
        return Err(Error::parse(*start, "unbalanced '('"));
    }
    Ok(stack.pop().expect("root").0)
}

// ---------------------------------------------------------------- decoding

struct Cursor<'a> {
    items: &'a [Sx],
    i: usize,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn of(sx: &'a Sx) -> Result<Self> {
        match sx {
            Sx::List(items, pos) => Ok(Cursor { items, i: 0, pos: *pos }),
            other => Err(Error::parse(other.pos(), "expected a list")),
        }
    }

    fn here(&self) -> usize {
        self.items.get(self.i).map_or(self.pos, Sx::pos)
    }

    fn next(&mut self) -> Result<&'a Sx> {
        let s = self.items.get(self.i).ok_or_else(|| Error::parse(self.pos, "unexpected end of list"))?;
        self.i += 1;
        Ok(s)
    }

    fn peek(&self) -> Option<&'a Sx> {
        self.items.get(self.i)
    }

    fn done(&self) -> bool {
        self.i >= self.items.len()
    }

    fn finish(&self) -> Result<()> {
        if self.done() {
            Ok(())
        } else {
            Err(Error::parse(self.here(), "unexpected trailing item"))
        }
    }

    fn atom(&mut self) -> Result<(&'a str, usize)> {
        match self.next()? {
            Sx::Atom(a, p) => Ok((a.as_str(), *p)),
            other => Err(Error::parse(other.pos(), "expected an atom")),
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<()> {
        let (a, p) = self.atom()?;
        if a == kw {
            Ok(())
        } else {
            Err(Error::parse(p, format!("expected `{kw}`, found `{a}`")))
        }
    }

    fn string(&mut self) -> Result<String> {
        match self.next()? {
            Sx::Str(s, _) => Ok(s.clone()),
            other => Err(Error::parse(other.pos(), "expected a string")),
        }
    }

    fn num(&mut self) -> Result<f64> {
        let (a, p) = self.atom()?;
        parse_num(a, p)
    }

    fn uint(&mut self) -> Result<u64> {
        let (a, p) = self.atom()?;
        a.parse::<u64>().map_err(|_| Error::parse(p, format!("expected a non-negative integer, found `{a}`")))
    }

    fn u32(&mut self) -> Result<u32> {
        let p = self.here();
        let v = self.uint()?;
        u32::try_from(v).map_err(|_| Error::parse(p, "integer out of range"))
    }

    fn complex(&mut self) -> Result<C64> {
        let sx = self.next()?;
        parse_complex(sx)
    }

    /// Enters a tagged sub-list `(tag ...)`.
    fn tagged(&mut self, tag: &str) -> Result<Cursor<'a>> {
        let sx = self.next()?;
        let mut c = Cursor::of(sx)?;
        c.keyword(tag)?;
        Ok(c)
    }

    /// Whether the next item is a list whose head is `tag`.
    fn next_is(&self, tag: &str) -> bool {
        matches!(self.peek(), Some(Sx::List(items, _)) if matches!(items.first(), Some(Sx::Atom(a, _)) if a == tag))
    }

    fn rest_nums(&mut self) -> Result<Vec<f64>> {
        let mut v = Vec::new();
        while !self.done() {
            v.push(self.num()?);
        }
        Ok(v)
    }
}

fn parse_num(a: &str, p: usize) -> Result<f64> {
    match a.parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(v),
        Ok(_) => Err(Error::parse(p, format!("non-finite number `{a}`"))),
        Err(_) => Err(Error::parse(p, format!("expected a number, found `{a}`"))),
    }
}

fn parse_complex(sx: &Sx) -> Result<C64> {
    match sx {
        Sx::Atom(a, p) => Ok(C64::new(parse_num(a, *p)?, 0.0)),
        Sx::List(..) => {
            let mut c = Cursor::of(sx)?;
            c.keyword("c")?;
            let re = c.num()?;
            let im = c.num()?;
            c.finish()?;
            Ok(C64::new(re, im))
        }
        Sx::Str(_, p) => Err(Error::parse(*p, "expected a complex number")),
    }
}

fn parse_part(a: &str, p: usize) -> Result<Part> {
    Part::from_name(a).ok_or_else(|| Error::parse(p, format!("unknown part `{a}`")))
}

fn parse_spec(sx: &Sx) -> Result<CubeIntegrandSpec> {
    let mut c = Cursor::of(sx)?;
    c.keyword("spec")?;
    let mut mu_c = c.tagged("mu")?;
    let mut exponents = Vec::new();
    while !mu_c.done() {
        exponents.push(mu_c.complex()?);
    }
    let log_weights = c.tagged("w")?.rest_nums()?;
    let mut jc = c.tagged("j")?;
    let log_power = jc.u32()?;
    jc.finish()?;
    let mut mc = c.tagged("m")?;
    let log_shift = mc.num()?;
    mc.finish()?;
    let mut spec = CubeIntegrandSpec {
        dim: exponents.len(),
        exponents,
        log_weights,
        log_power,
        log_shift,
        geometric: None,
        poly_log: None,
    };
    if c.next_is("geom") {
        let mut g = c.tagged("geom")?;
        let z = g.complex()?;
        let exps = g.rest_nums()?;
        spec.geometric = Some(Geometric { z, exps });
    }
    if c.next_is("polylog") {
        let mut pl = c.tagged("polylog")?;
        let mut monos = Vec::new();
        while !pl.done() {
            let mut m = pl.tagged("mono")?;
            let coef = m.num()?;
            let mut powers = Vec::new();
            while !m.done() {
                powers.push(m.u32()?);
            }
            monos.push(LogMonomial { coef, powers });
        }
        spec.poly_log = Some(monos);
    }
    c.finish()?;
    Ok(spec)
}

fn parse_expr(sx: &Sx) -> Result<ConstExpr> {
    match sx {
        Sx::Atom(a, p) => {
            if let Some(s) = Symbol::from_name(a) {
                return Ok(ConstExpr::Sym(s));
            }
            Ok(ConstExpr::Num(parse_num(a, *p)?))
        }
        Sx::List(..) => {
            let mut c = Cursor::of(sx)?;
            let (name, p) = c.atom()?;
            let f = Func::from_name(name).ok_or_else(|| Error::parse(p, format!("unknown function `{name}`")))?;
            let mut args = Vec::new();
            while let Some(a) = c.peek() {
                args.push(parse_expr(a)?);
                c.i += 1;
            }
            if let Some(k) = f.arity() {
                if args.len() != k {
                    return Err(Error::parse(p, format!("`{name}` takes {k} arguments, got {}", args.len())));
                }
            }
            Ok(ConstExpr::Call(f, args))
        }
        Sx::Str(_, p) => Err(Error::parse(*p, "unexpected string in expression")),
    }
}

fn parse_series(sx: &Sx) -> Result<SeriesSpec> {
    let mut c = Cursor::of(sx)?;
    let (head, p) = c.atom()?;
    let spec = match head {
        "lerch" => {
            let z = c.complex()?;
            let s = c.num()?;
            let a = c.num()?;
            SeriesSpec::Lerch { z, s, a }
        }
        "halfline-sum" => {
            let mut r = c.tagged("ratio")?;
            let ratio = r.complex()?;
            r.finish()?;
            let mut sc = c.tagged("scale")?;
            let scale = sc.complex()?;
            sc.finish()?;
            let mut st = c.tagged("start")?;
            let start = st.uint()?;
            st.finish()?;
            let mut pc = c.tagged("part")?;
            let (pa, pp) = pc.atom()?;
            let part = parse_part(pa, pp)?;
            pc.finish()?;
            let mut template = Vec::new();
            while !c.done() {
                let mut t = c.tagged("tt")?;
                let coef = t.complex()?;
                let numerator = t.tagged("num")?.rest_nums()?;
                let mut factors = Vec::new();
                while !t.done() {
                    let mut f = t.tagged("tf")?;
                    let slope = f.num()?;
                    let offset = f.complex()?;
                    let step = f.num()?;
                    let multiplicity = f.u32()?;
                    f.finish()?;
                    factors.push(TemplateFactor { slope, offset, step, multiplicity });
                }
                template.push(TemplateTerm { coef, numerator, factors });
            }
            SeriesSpec::HalflineSum { ratio, scale, start, part, template }
        }
        "euler-gamma" => SeriesSpec::EulerGamma,
        "alt-log-product" => {
            let a = c.num()?;
            let b = c.num()?;
            let cc = c.num()?;
            SeriesSpec::AltLogProduct { a, b, c: cc }
        }
        "psi-sum" => {
            let mut qc = c.tagged("q")?;
            let q = qc.num()?;
            qc.finish()?;
            let mut ac = c.tagged("alt")?;
            let (av, ap) = ac.atom()?;
            let alternating = match av {
                "true" => true,
                "false" => false,
                _ => return Err(Error::parse(ap, "expected `true` or `false`")),
            };
            ac.finish()?;
            let den = c.tagged("den")?.rest_nums()?;
            SeriesSpec::PsiSum { q, alternating, den }
        }
        "custom" => {
            let mut st = c.tagged("start")?;
            let start = st.uint()?;
            st.finish()?;
            let mut ac = c.tagged("accel")?;
            let (an, ap) = ac.atom()?;
            let accel = Accel::from_name(an).ok_or_else(|| Error::parse(ap, format!("unknown accel `{an}`")))?;
            ac.finish()?;
            let term = parse_expr(c.next()?)?;
            SeriesSpec::Custom { start, accel, term }
        }
        other => return Err(Error::parse(p, format!("unknown series family `{other}`"))),
    };
    c.finish()?;
    Ok(spec)
}

fn parse_plan(sx: &Sx) -> Result<Plan> {
    let mut c = Cursor::of(sx)?;
    let (head, p) = c.atom()?;
    let plan = match head {
        "halfline" => {
            let mut wc = c.tagged("weight")?;
            let weight = wc.num()?;
            wc.finish()?;
            let numerator = c.tagged("num")?.rest_nums()?;
            let mut factors = Vec::new();
            while !c.done() {
                let mut f = c.tagged("f")?;
                let slope = f.num()?;
                let offset = f.complex()?;
                let m = f.u32()?;
                f.finish()?;
                factors.push(LinearFactor::new(slope, offset, m));
            }
            Plan::Halfline { product: FactorProduct::new(factors, numerator), weight }
        }
        "cube" => {
            let mut pc = c.tagged("part")?;
            let (pa, pp) = pc.atom()?;
            let part = parse_part(pa, pp)?;
            pc.finish()?;
            let mut rc = c.tagged("route")?;
            let (ra, rp) = rc.atom()?;
            let route = CubeRoute::from_name(ra).ok_or_else(|| Error::parse(rp, format!("unknown route `{ra}`")))?;
            rc.finish()?;
            let mut terms = Vec::new();
            while !c.done() {
                let mut t = c.tagged("term")?;
                let coef = t.complex()?;
                let spec = parse_spec(t.next()?)?;
                t.finish()?;
                terms.push((coef, spec));
            }
            if terms.is_empty() {
                return Err(Error::parse(p, "cube plan without terms"));
            }
            Plan::Cube { terms, part, route }
        }
        "series" => Plan::Series(parse_series(c.next()?)?),
        "const" => Plan::Const(parse_expr(c.next()?)?),
        "linear" => {
            let mut ts = Vec::new();
            while !c.done() {
                let mut t = c.tagged("term")?;
                let coef = t.complex()?;
                let inner = parse_plan(t.next()?)?;
                t.finish()?;
                ts.push((coef, inner));
            }
            Plan::Linear(ts)
        }
        "part" => {
            let (pa, pp) = c.atom()?;
            let part = parse_part(pa, pp)?;
            Plan::Part(part, Box::new(parse_plan(c.next()?)?))
        }
        "shifted-trend" => {
            let a = c.num()?;
            let k_max = c.u32()?;
            Plan::ShiftedProductTrend { a, k_max }
        }
        other => return Err(Error::parse(p, format!("unknown plan `{other}`"))),
    };
    c.finish()?;
    Ok(plan)
}

fn parse_record_sx(sx: &Sx) -> Result<IdentityRecord> {
    let mut c = Cursor::of(sx)?;
    c.keyword("identity")?;
    let id = c.string()?;
    let mut lc = c.tagged("loc")?;
    let location = lc.string()?;
    lc.finish()?;
    let mut tc = c.tagged("tol")?;
    let tolerance = tc.num()?;
    tc.finish()?;
    let mut trc = c.tagged("trust")?;
    let (ta, tp) = trc.atom()?;
    let trust = Trust::from_name(ta).ok_or_else(|| Error::parse(tp, format!("unknown trust `{ta}`")))?;
    trc.finish()?;
    let mut dc = c.tagged("desc")?;
    let description = dc.string()?;
    dc.finish()?;
    let mut lhs_c = c.tagged("lhs")?;
    let lhs = parse_plan(lhs_c.next()?)?;
    lhs_c.finish()?;
    let mut rhs_c = c.tagged("rhs")?;
    let rhs = parse_plan(rhs_c.next()?)?;
    rhs_c.finish()?;
    c.finish()?;
    Ok(IdentityRecord { id, description, location, tolerance, trust, lhs, rhs })
}

/// Parses a single record. Positions in errors are byte offsets into `line`.
pub fn parse_record(line: &str) -> Result<IdentityRecord> {
    let items = lex(line, 0)?;
    match items.as_slice() {
        [one] => parse_record_sx(one),
        [] => Err(Error::parse(0, "empty record")),
        [_, extra, ..] => Err(Error::parse(extra.pos(), "more than one expression on the line")),
    }
}

/// Parses a plan on its own.
pub fn parse_plan_str(src: &str) -> Result<Plan> {
    let items = lex(src, 0)?;
    match items.as_slice() {
        [one] => parse_plan(one),
        _ => Err(Error::parse(0, "expected exactly one plan")),
    }
}

/// Parses a whole registry file. Positions in errors are byte offsets into
/// `src`.
pub fn parse_registry(src: &str) -> Result<Vec<IdentityRecord>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for line in src.split_inclusive('\n') {
        let trimmed = line.trim();
        if !(trimmed.is_empty() || trimmed.starts_with(';')) {
            let items = lex(line, offset)?;
            match items.as_slice() {
                [one] => out.push(parse_record_sx(one)?),
                [] => {}
                [_, extra, ..] => return Err(Error::parse(extra.pos(), "more than one record on a line")),
            }
        }
        offset += line.len();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn sample() -> IdentityRecord {
        let spec = CubeIntegrandSpec::new(vec![c(0.0, 1.0), c(-0.75, 0.0)], vec![2.0, 1.0], 1)
            .with_shift(0.5)
            .with_geometric(c(-1.0, 0.0), vec![1.0, 1.0])
            .with_poly_log(vec![LogMonomial { coef: 1.5, powers: vec![0, 2] }]);
        IdentityRecord {
            id: "X-1".into(),
            description: "a \"quoted\" \\ description".into(),
            location: "main/two-factor".into(),
            tolerance: 1e-7,
            trust: Trust::SuspectedTypo,
            lhs: Plan::Linear(vec![
                (c(-1.0, 0.0), Plan::Cube { terms: vec![(c(0.1, -0.0), spec)], part: Part::Im, route: CubeRoute::Series }),
                (c(1.0, 0.0), Plan::halfline(FactorProduct::new(
                    vec![LinearFactor::new(1.0 / 3.0, c(1.0, 1e-300), 2)],
                    vec![0.0, 1.0],
                ))),
            ]),
            rhs: Plan::Series(SeriesSpec::HalflineSum {
                ratio: c(0.5, 0.0),
                scale: c(-1.0, 0.0),
                start: 1,
                part: Part::Re,
                template: vec![TemplateTerm {
                    coef: c(1.0, 0.0),
                    numerator: vec![1.0],
                    factors: vec![TemplateFactor { slope: 1.0, offset: c(1.0, 1.0), step: 1.0, multiplicity: 2 }],
                }],
            }),
        }
    }

    #[test]
    fn record_round_trip_is_bit_exact() {
        let r = sample();
        let line = format_record(&r);
        assert!(!line.contains('\n'));
        let back = parse_record(&line).unwrap();
        assert_eq!(back, r);
        assert_eq!(format_record(&back), line);
    }

    #[test]
    fn numbers_round_trip() {
        for v in [0.0, -0.0, 1.0, -3.0, 0.1, 1.0 / 3.0, 1e-300, 5e-324, 1e15, 1.7976931348623157e308, -2.5e-7] {
            let s = fmt_num(v);
            let back = parse_num(&s, 0).unwrap();
            assert_eq!(back.to_bits(), v.to_bits(), "{v} -> {s}");
        }
    }

    #[test]
    fn expressions_round_trip() {
        let p = parse_plan_str("(const (+ (* 0.5 (log 2)) (neg euler) (psi (/ 1 4)) (expint 1 1)))").unwrap();
        let s = format_plan(&p);
        assert_eq!(parse_plan_str(&s).unwrap(), p);
    }

    #[test]
    fn errors_carry_positions() {
        let err = parse_record("(identity \"A\" (loc \"x\") (tol abc))").unwrap_err();
        match err {
            Error::Parse { pos, .. } => assert_eq!(pos, 29),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_record("(identity"), Err(Error::Parse { .. })));
        assert!(matches!(parse_plan_str("(const (frob 1))"), Err(Error::Parse { .. })));
        assert!(matches!(parse_plan_str("(const inf)"), Err(Error::Parse { .. })));
    }

    #[test]
    fn registry_skips_comments_and_blank_lines() {
        let r = sample();
        let text = format!("; header\n\n{}\n", format_record(&r));
        assert_eq!(parse_registry(&text).unwrap(), vec![r]);
    }
}
