//! The built-in identity catalog.
//!
//! Cube specs use the positive convention of [`CubeIntegrandSpec`]: a
//! displayed `1/log(…)` becomes coefficient −1 over `(−log …)`. Closed
//! constants are written in the registry constant syntax.

use super::Registry;
use crate::expr::sexpr::parse_plan_str;
use crate::expr::{
    Accel, CubeIntegrandSpec, CubeRoute, FactorProduct, IdentityRecord, LinearFactor, LogMonomial, Part, Plan,
    SeriesSpec, TemplateFactor, TemplateTerm, Trust,
};
use crate::halfline::{cubic_variant_product, ramanujan_product, ProductFamily};
use crate::{Error, Result, C64};

/// Bumped whenever a record is added, removed or changed.
pub const REGISTRY_VERSION: &str = "2026.10-1";

/// Closed form against closed form.
const TOL_CLOSED: f64 = 1e-9;
/// Any side backed by quadrature (quick profile).
const TOL_QUAD: f64 = 1e-6;
/// Trend and sine-part checks.
const TOL_TREND: f64 = 1e-6;
const TOL_SINE: f64 = 1e-10;

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn r(x: f64) -> C64 {
    C64::new(x, 0.0)
}

/// Constant plan from the registry constant syntax; catalog literals are
/// fixed, so a parse failure is a bug.
fn k(src: &str) -> Plan {
    match parse_plan_str(&format!("(const {src})")) {
        Ok(p) => p,
        Err(e) => panic!("catalog constant `{src}`: {e}"),
    }
}

fn custom(start: u64, accel: Accel, src: &str) -> Plan {
    match k(src) {
        Plan::Const(term) => Plan::Series(SeriesSpec::Custom { start, accel, term }),
        _ => unreachable!("k always yields a constant plan"),
    }
}

fn spec(mu: &[C64], w: &[f64], j: u32) -> CubeIntegrandSpec {
    CubeIntegrandSpec::new(mu.to_vec(), w.to_vec(), j)
}

fn real_spec(mu: &[f64], j: u32) -> CubeIntegrandSpec {
    CubeIntegrandSpec::real(mu, j)
}

fn cube(terms: Vec<(C64, CubeIntegrandSpec)>, part: Part) -> Plan {
    Plan::Cube { terms, part, route: CubeRoute::Auto }
}

fn cube_via(terms: Vec<(C64, CubeIntegrandSpec)>, part: Part, route: CubeRoute) -> Plan {
    Plan::Cube { terms, part, route }
}

fn halfline(factors: &[(f64, f64, f64, u32)], numerator: &[f64], weight: f64) -> Plan {
    let factors = factors.iter().map(|&(a, b, c, m)| LinearFactor::new(a, C64::new(b, c), m)).collect();
    Plan::Halfline { product: FactorProduct::new(factors, numerator.to_vec()), weight }
}

fn rec(id: &str, location: &str, tolerance: f64, trust: Trust, description: &str, lhs: Plan, rhs: Plan) -> IdentityRecord {
    IdentityRecord {
        id: id.to_string(),
        description: description.to_string(),
        location: location.to_string(),
        tolerance,
        trust,
        lhs,
        rhs,
    }
}

use Trust::{Asserted, SuspectedTypo};

fn fact(n: u32) -> f64 {
    (1..=n).map(f64::from).product()
}

fn halfline_examples(out: &mut Vec<IdentityRecord>) {
    let loc = "halfline/examples";
    // e^{−x−y}cos(x+y)/(2x+y): orthant exponents 1+i, cube exponents i.
    let ex1 = spec(&[c(0.0, 1.0), c(0.0, 1.0)], &[1.0, 2.0], 1);
    let ex1_hl = halfline(&[(1.0, 1.0, 1.0, 1), (2.0, 1.0, 1.0, 1)], &[1.0], 0.0);
    out.push(rec(
        "T1-EX1",
        loc,
        TOL_QUAD,
        Asserted,
        "two-dimensional cosine form against the real part of its half-line reduction",
        cube(vec![(r(1.0), ex1.clone())], Part::Re),
        ex1_hl.clone().re(),
    ));
    out.push(rec(
        "T1-EX1-SIN",
        loc,
        TOL_QUAD,
        Asserted,
        "two-dimensional sine form equals log(2)/2",
        cube(vec![(r(-1.0), ex1)], Part::Im),
        k("(/ (log 2) 2)"),
    ));
    out.push(rec(
        "T1-EX1-CF",
        loc,
        TOL_CLOSED,
        Asserted,
        "complex half-line integral (1/2 − i/2)·log 2",
        ex1_hl,
        k("(* (- 0.5 (* 0.5 i)) (log 2))"),
    ));

    let ex2 = spec(&[c(0.0, 1.0), c(0.0, 1.0), c(1.0, 1.0)], &[1.0, 2.0, 1.0], 1);
    out.push(rec(
        "T1-EX2a",
        loc,
        TOL_QUAD,
        SuspectedTypo,
        "three-dimensional cosine form against its printed constant",
        cube(vec![(r(1.0), ex2.clone())], Part::Re),
        k("(/ (+ (- pi (* 2 (atan (/ 4 3)))) (* 4 (atanh (/ 3 253)))) 40)"),
    ));
    out.push(rec(
        "T1-EX2b",
        loc,
        TOL_QUAD,
        SuspectedTypo,
        "three-dimensional sine form against its printed constant",
        cube(vec![(r(-1.0), ex2)], Part::Im),
        k("(neg (/ (- (+ (* 3 pi) (log 25)) (* 6 (+ (log 8) (atan (/ 4 3))))) 40))"),
    ));

    let ex3_hl = halfline(&[(1.0, 4.0, 0.0, 1), (2.0, 3.0, 0.0, 1), (3.0, 2.0, 0.0, 1)], &[1.0], 0.0);
    out.push(rec(
        "T1-EX3",
        loc,
        1e-7,
        Asserted,
        "x³y²z/(−log xy²z³) on the cube against (x+4)(2x+3)(3x+2) on the half-line",
        cube(vec![(r(1.0), spec(&[r(3.0), r(2.0), r(1.0)], &[1.0, 2.0, 3.0], 1))], Part::Full),
        ex3_hl.clone(),
    ));
    out.push(rec(
        "T1-EX3-CONST",
        loc,
        TOL_CLOSED,
        Asserted,
        "(x+4)(2x+3)(3x+2) half-line integral equals log(2187/512)/50",
        ex3_hl,
        k("(/ (log (/ 2187 512)) 50)"),
    ));

    for n in 2..=6u32 {
        let nf = f64::from(n);
        out.push(rec(
            &format!("T1-EX4-{n}"),
            loc,
            TOL_QUAD,
            Asserted,
            &format!("{n}-dimensional cosine form against the closed cosine value"),
            cube(vec![(r(1.0), spec(&vec![c(0.0, 1.0); n as usize], &vec![1.0; n as usize], 1))], Part::Re),
            k(&format!("(/ (* (pow 2 (/ (- 1 {nf}) 2)) (cos (* (/ pi 4) (- {nf} 1)))) (- {nf} 1))")),
        ));
    }
    out.push(rec(
        "T1-EX4-SIN-2015",
        loc,
        TOL_CLOSED,
        Asserted,
        "2015-fold sine form through its half-line closed form only",
        halfline(&[(1.0, 1.0, 1.0, 2015)], &[1.0], 0.0).im().scaled(-1.0),
        k("(neg (/ (pow 2 -1007) 2014))"),
    ));

    for n in 2..=6u32 {
        out.push(rec(
            &format!("T1-EX5-{n}"),
            loc,
            TOL_QUAD,
            Asserted,
            &format!("{n}-dimensional 1/(−log ∏x) equals 1/(n−1)"),
            cube(vec![(r(1.0), real_spec(&vec![0.0; n as usize], 1))], Part::Full),
            k(&format!("(/ 1 {})", n - 1)),
        ));
    }
}

fn log_power_examples(out: &mut Vec<IdentityRecord>) {
    let loc = "log-power/examples";
    for (n, j) in [(3u32, 1u32), (3, 2), (4, 2), (4, 3), (5, 2), (5, 3), (6, 3)] {
        let den: f64 = (1..=j).map(|i| f64::from(n - i)).product();
        out.push(rec(
            &format!("T2-EX1-{n}-{j}"),
            loc,
            TOL_QUAD,
            Asserted,
            &format!("{n}-dimensional 1/(−log ∏x)^{j} equals 1/((n−1)⋯(n−{j}))"),
            cube(vec![(r(1.0), real_spec(&vec![0.0; n as usize], j))], Part::Full),
            k(&format!("(/ 1 {den})")),
        ));
    }
    for n in 3..=6u32 {
        out.push(rec(
            &format!("T2-EX2-{n}"),
            loc,
            TOL_QUAD,
            Asserted,
            &format!("{n}-dimensional 1/(−log ∏x)^(n−1) equals 1/(n−1)!"),
            cube(vec![(r(1.0), real_spec(&vec![0.0; n as usize], n - 1))], Part::Full),
            k(&format!("(/ 1 {})", fact(n - 1))),
        ));
    }
    out.push(rec(
        "T2-EX3",
        loc,
        TOL_CLOSED,
        Asserted,
        "1500-dimensional 1/(−log ∏x)² through the half-line reduction s/(s+1)^1500",
        halfline(&[(1.0, 1.0, 0.0, 1500)], &[0.0, 1.0], 0.0),
        k("(/ 1 2245502)"),
    ));
}

fn shifted_log_examples(out: &mut Vec<IdentityRecord>) {
    let loc = "shifted-log/examples";
    for n in 2..=5u32 {
        let value = k(&format!("(/ (+ -1 (* e (* {n} (expint {} 1)))) {})", n - 1, n - 1));
        out.push(rec(
            &format!("T99-EX1-{n}"),
            loc,
            TOL_QUAD,
            Asserted,
            &format!("e^(−x−y)/(x+y+1)^{n} on the orthant, as a cube integral with shift 1"),
            cube(vec![(r(1.0), real_spec(&[0.0, 0.0], n).with_shift(1.0))], Part::Full),
            value.clone(),
        ));
        out.push(rec(
            &format!("T99-EX1-CF-{n}"),
            loc,
            TOL_CLOSED,
            Asserted,
            &format!("radial reduction s·e^(−s)/(s+1)^{n} in closed form"),
            halfline(&[(1.0, 1.0, 0.0, n)], &[0.0, 1.0], 1.0),
            value.clone(),
        ));
        let mut num = vec![0.0; n as usize];
        num[n as usize - 1] = 1.0 / fact(n - 1);
        out.push(rec(
            &format!("T99-EX1-NFOLD-{n}"),
            loc,
            TOL_CLOSED,
            Asserted,
            &format!("{n}-fold reading e^(−Σx)/(1+Σx)², reduced to s^(n−1)e^(−s)/((n−1)!(s+1)²)"),
            halfline(&[(1.0, 1.0, 0.0, 2)], &num, 1.0),
            value,
        ));
    }

    let loc = "shifted-log/series";
    let sum = custom(1, Accel::TailIntegral, "(- (/ 1 n) (expint-scaled 1 n))");
    let geo = |mu: &[f64], alpha: f64| {
        real_spec(mu, 1).with_shift(1.0).with_geometric(r(1.0), vec![alpha; mu.len()])
    };
    out.push(rec(
        "COR3",
        loc,
        TOL_QUAD,
        Asserted,
        "1/((1−xy)(1−log xy)) against Σ(1/n − eⁿE₁(n))",
        cube(vec![(r(1.0), geo(&[0.0, 0.0], 1.0))], Part::Full),
        sum.clone(),
    ));
    out.push(rec(
        "COR3-1D",
        loc,
        TOL_QUAD,
        Asserted,
        "one-dimensional form −log x/((1−x)(1−log x))",
        cube(
            vec![(r(1.0), geo(&[0.0], 1.0).with_poly_log(vec![LogMonomial { coef: -1.0, powers: vec![1] }]))],
            Part::Full,
        ),
        sum.clone(),
    ));
    out.push(rec(
        "COR3-GAMMA",
        loc,
        TOL_CLOSED,
        Asserted,
        "the same sum rewritten as γ + Σ(log(1+1/n) − eⁿE₁(n))",
        sum,
        Plan::Linear(vec![
            (r(1.0), k("euler")),
            (r(1.0), custom(1, Accel::TailIntegral, "(- (log (+ 1 (/ 1 n))) (expint-scaled 1 n))")),
        ]),
    ));
    out.push(rec(
        "COR3-ALPHA2",
        loc,
        TOL_QUAD,
        Asserted,
        "α = 2: −log(x)·x/((1−x²)(1−log x)) against Σ(1/(2n) − e^(2n)E₁(2n))",
        cube(
            vec![(r(1.0), geo(&[1.0], 2.0).with_poly_log(vec![LogMonomial { coef: -1.0, powers: vec![1] }]))],
            Part::Full,
        ),
        custom(1, Accel::TailIntegral, "(- (/ 1 (* 2 n)) (expint-scaled 1 (* 2 n)))"),
    ));
}

fn tf(slope: f64, offset: C64, step: f64, multiplicity: u32) -> TemplateFactor {
    TemplateFactor { slope, offset, step, multiplicity }
}

fn geometric_examples(out: &mut Vec<IdentityRecord>) {
    let loc = "geometric/two-parameter";
    // a=1, b=1, c=1, d=2, g=1, h=1, r=1/2
    let a_series = Plan::Series(SeriesSpec::HalflineSum {
        ratio: r(0.5),
        scale: r(1.0),
        start: 0,
        part: Part::Full,
        template: vec![TemplateTerm {
            coef: r(1.0),
            numerator: vec![1.0],
            factors: vec![tf(1.0, r(1.0), 1.0, 1), tf(2.0, r(1.0), 1.0, 1)],
        }],
    });
    out.push(rec(
        "COR0-A",
        loc,
        TOL_QUAD,
        Asserted,
        "1/((1 − xy/2)(−log xy²)) against Σ 2⁻ⁿ ∫ dx/((x+1+n)(2x+1+n))",
        cube(
            vec![(r(1.0), spec(&[r(0.0), r(0.0)], &[1.0, 2.0], 1).with_geometric(r(0.5), vec![1.0, 1.0]))],
            Part::Full,
        ),
        a_series.clone(),
    ));
    out.push(rec(
        "COR0-A-SERIES",
        loc,
        TOL_CLOSED,
        Asserted,
        "the printed series Σ rⁿ(log(d/a) − log((hn+g)/(cn+b)))/(bd + cdn − a(hn+g))",
        a_series,
        custom(
            0,
            Accel::None,
            "(* (pow 0.5 n) (/ (- (log 2) (log (/ (+ n 1) (+ n 1)))) (+ (neg (+ n 1)) (+ 2 (* 2 n)))))",
        ),
    ));
    // a=1, b=2, c=3, d=1, e=1, h=2, r=1/2
    let b_series = custom(
        0,
        Accel::None,
        "(* (pow 0.5 n) (/ (log (/ (* (+ 2 (* 3 n)) (+ 2 (* 2 n))) (* (+ 3 (* 3 n)) (+ 1 (* 2 n))))) (+ 1 n)))",
    );
    let b_terms = |mu0: [f64; 2], mu1: [f64; 2], exps: [f64; 2]| {
        let s = |mu: [f64; 2]| {
            spec(&[r(mu[0]), r(mu[1])], &[1.0, 1.0], 1).with_geometric(r(0.5), exps.to_vec())
        };
        vec![(r(1.0), s(mu0)), (r(-1.0), s(mu1))]
    };
    out.push(rec(
        "COR0-B",
        loc,
        TOL_QUAD,
        Asserted,
        "difference form read with y-exponent e−1 and geometric y-power h, against the printed series",
        cube(b_terms([1.0, 0.0], [2.0, 1.0], [3.0, 2.0]), Part::Full),
        b_series.clone(),
    ));
    out.push(rec(
        "COR0-B-PRINTED",
        loc,
        TOL_QUAD,
        SuspectedTypo,
        "difference form exactly as displayed (y-exponent h−1, geometric y-power e)",
        cube(b_terms([1.0, 1.0], [2.0, 2.0], [3.0, 1.0]), Part::Full),
        b_series,
    ));

    let loc = "geometric/coth";
    let coth_series = Plan::Series(SeriesSpec::HalflineSum {
        ratio: r(1.0),
        scale: r(-1.0),
        start: 0,
        part: Part::Im,
        template: vec![TemplateTerm {
            coef: r(1.0),
            numerator: vec![1.0],
            factors: vec![tf(1.0, c(1.0, 1.0), 1.0, 2)],
        }],
    });
    let coth = "(/ (- (* pi (coth pi)) 1) 2)";
    let neg_coth = "(/ (- 1 (* pi (coth pi))) 2)";
    out.push(rec(
        "COR1-COTH",
        loc,
        TOL_CLOSED,
        Asserted,
        "Σ 1/((n+1)²+1) through −Im ∫ dx/(x+n+1+i)²",
        coth_series.clone(),
        k(coth),
    ));
    let sin_log = || {
        spec(&[c(0.0, 1.0), c(0.0, 1.0)], &[1.0, 1.0], 1).with_geometric(r(1.0), vec![1.0, 1.0])
    };
    out.push(rec(
        "COR1-COTH-2D",
        loc,
        TOL_QUAD,
        Asserted,
        "sin(log xy)/((1−xy)(−log xy)) in series mode against the negated series",
        cube_via(vec![(r(1.0), sin_log())], Part::Im, CubeRoute::Series),
        coth_series.scaled(-1.0),
    ));
    out.push(rec(
        "COR1-COTH-2D-PRINTED",
        loc,
        TOL_QUAD,
        SuspectedTypo,
        "the displayed double integral against +(π coth π − 1)/2",
        cube_via(vec![(r(1.0), sin_log())], Part::Im, CubeRoute::Series),
        k(coth),
    ));
    out.push(rec(
        "COR1-SUBST",
        loc,
        TOL_QUAD,
        Asserted,
        "∫₀^∞ sin x/(1−eˣ) dx as ∫₀¹ sin(log u)/(1−u) du",
        cube(
            vec![(r(1.0), spec(&[c(0.0, 1.0)], &[1.0], 0).with_geometric(r(1.0), vec![1.0]))],
            Part::Im,
        ),
        k(neg_coth),
    ));
}

fn alternating_examples(out: &mut Vec<IdentityRecord>) {
    let loc = "alternating/gamma-ratio";
    let product = Plan::Series(SeriesSpec::AltLogProduct { a: 3.0, b: 3.0, c: 1.0 });
    out.push(rec(
        "T4-GAMMA16",
        loc,
        TOL_CLOSED,
        Asserted,
        "log ∏((3n+3)/(3n+1))^((−1)ⁿ) equals log(Γ(1/6)/(√π Γ(2/3)))",
        product.clone(),
        k("(log (/ (gamma (/ 1 6)) (* (sqrt pi) (gamma (/ 2 3)))))"),
    ));
    let s = |mu: f64| real_spec(&[mu], 1).with_geometric(r(-1.0), vec![3.0]);
    out.push(rec(
        "T4-GAMMA16-INT",
        loc,
        TOL_QUAD,
        Asserted,
        "(x²−1)/((1+x³) log x) on [0,1] against the alternating product",
        cube(vec![(r(-1.0), s(2.0)), (r(1.0), s(0.0))], Part::Full),
        product,
    ));
}

/// `∫₀¹ x^p (1 − x^q) / (−D log x) dx = ∫₀^∞ dx/((cx+a+1)(dx+b+1))` with
/// `D = ad − bc − c + d`, `p = (bc+c−d)/d`, `q = D/d`.
///
/// Errors: `Domain` when `D = 0` (the display divides by it) or when a
/// parameter leaves the convergent range.
pub fn frullani_log_record(id: &str, a: f64, b: f64, c: f64, d: f64) -> Result<IdentityRecord> {
    let dd = a * d - b * c - c + d;
    if dd == 0.0 {
        return Err(Error::Domain(format!("ad − bc − c + d = 0 for (a, b, c, d) = ({a}, {b}, {c}, {d})")));
    }
    if !(c > 0.0 && d > 0.0 && a > -1.0 && b > -1.0) {
        return Err(Error::Domain("need c, d > 0 and a, b > −1".into()));
    }
    let p = (b * c + c - d) / d;
    let q = dd / d;
    Ok(rec(
        id,
        "frullani/log",
        TOL_QUAD,
        Asserted,
        &format!("x^p(1 − x^q)/(−D log x) with (a, b, c, d) = ({a}, {b}, {c}, {d})"),
        cube(vec![(r(1.0 / dd), real_spec(&[p], 1)), (r(-1.0 / dd), real_spec(&[p + q], 1))], Part::Full),
        halfline(&[(c, a + 1.0, 0.0, 1), (d, b + 1.0, 0.0, 1)], &[1.0], 0.0),
    ))
}

fn frullani_examples(out: &mut Vec<IdentityRecord>) {
    out.push(rec(
        "T5-DIRICHLET",
        "frullani/dirichlet",
        TOL_CLOSED,
        Asserted,
        "∫₀^∞ sin x/x dx = π/2 as Re ∫ dx/((x−i)(x+i))",
        halfline(&[(1.0, 0.0, -1.0, 1), (1.0, 0.0, 1.0, 1)], &[1.0], 0.0).re(),
        k("(/ pi 2)"),
    ));
    out.push(rec(
        "T5-COS",
        "frullani/cosine",
        TOL_CLOSED,
        SuspectedTypo,
        "(cos 2x − cos x)/(−x) integrates to log 2; displayed as Im ∫ dx/((x+i)(x+2i))",
        k("(log 2)"),
        halfline(&[(1.0, 0.0, 1.0, 1), (1.0, 0.0, 2.0, 1)], &[1.0], 0.0).im(),
    ));
    out.push(frullani_log_record("T5-LOG", 1.0, 2.0, 1.0, 1.0).expect("non-degenerate parameters"));
}

fn number_theory(out: &mut Vec<IdentityRecord>) {
    let loc = "number-theory/lerch";
    for (id, z) in [("NT-PHI-HALF", r(0.5)), ("NT-PHI-ALT", r(-1.0))] {
        out.push(rec(
            id,
            loc,
            TOL_QUAD,
            Asserted,
            &format!("Φ({}, 2, 1) as a three-dimensional geometric cube integral", z.re),
            cube(vec![(r(2.0), real_spec(&[0.0; 3], 1).with_geometric(z, vec![1.0; 3]))], Part::Full),
            Plan::Series(SeriesSpec::Lerch { z, s: 2.0, a: 1.0 }),
        ));
    }
    let loc = "number-theory/zeta";
    for s in [2u32, 3] {
        let kd = s as usize + 1;
        out.push(rec(
            &format!("NT-ZETA-{s}"),
            loc,
            TOL_QUAD,
            Asserted,
            &format!("ζ({s}) as a {kd}-dimensional geometric cube integral"),
            cube(
                vec![(r(f64::from(s)), real_spec(&vec![0.0; kd], 1).with_geometric(r(1.0), vec![1.0; kd]))],
                Part::Full,
            ),
            k(&format!("(zeta {s})")),
        ));
    }
}

fn constants(out: &mut Vec<IdentityRecord>) {
    let loc = "constants/lerch-double";
    out.push(rec(
        "GS-T6-ZETA3",
        loc,
        TOL_QUAD,
        Asserted,
        "ζ(3) = (3/2)∫∫ log²y/((1−xy)(−log xy))",
        cube(
            vec![(
                r(1.0),
                real_spec(&[0.0, 0.0], 1)
                    .with_geometric(r(1.0), vec![1.0, 1.0])
                    .with_poly_log(vec![LogMonomial { coef: 1.5, powers: vec![0, 2] }]),
            )],
            Part::Full,
        ),
        k("(zeta 3)"),
    ));
    out.push(rec(
        "GS-T6-CATALAN",
        loc,
        1e-5,
        Asserted,
        "Catalan's constant as a three-dimensional integral with z = −1, a = 1/2",
        cube(
            vec![(r(0.5), real_spec(&[-0.5; 3], 1).with_geometric(r(-1.0), vec![1.0; 3]))],
            Part::Full,
        ),
        k("catalan"),
    ));
    out.push(rec(
        "GS-T6-CATALAN-2D",
        loc,
        TOL_QUAD,
        Asserted,
        "Catalan's constant as a two-dimensional integral with a log y factor",
        cube(
            vec![(
                r(1.0),
                real_spec(&[-0.5, -0.5], 1)
                    .with_geometric(r(-1.0), vec![1.0, 1.0])
                    .with_poly_log(vec![LogMonomial { coef: -0.5, powers: vec![0, 1] }]),
            )],
            Part::Full,
        ),
        k("catalan"),
    ));
    out.push(rec(
        "GS-T6-PI",
        loc,
        TOL_QUAD,
        Asserted,
        "Φ(−1, 1, 1/4) = (π + 2 arccoth √2)/√2 as a double integral",
        cube(
            vec![(r(1.0), real_spec(&[-0.75, -0.75], 1).with_geometric(r(-1.0), vec![1.0, 1.0]))],
            Part::Full,
        ),
        k("(/ (+ pi (* 2 (acoth (sqrt 2)))) (sqrt 2))"),
    ));
    out.push(rec(
        "T7-ZETA7",
        "constants/zeta7",
        1e-8,
        Asserted,
        "ζ(7) from three log monomials summed through the log-moment kernel",
        cube_via(
            vec![(
                r(7.0 / 3600.0),
                real_spec(&[0.0, 0.0], 1).with_geometric(r(1.0), vec![1.0, 1.0]).with_poly_log(vec![
                    LogMonomial { coef: 12.0, powers: vec![1, 5] },
                    LogMonomial { coef: 30.0, powers: vec![2, 4] },
                    LogMonomial { coef: 20.0, powers: vec![3, 3] },
                ]),
            )],
            Part::Full,
            CubeRoute::Series,
        ),
        k("(zeta 7)"),
    ));

    let loc = "constants/euler";
    let sondow = |mu: [f64; 2]| real_spec(&mu, 1).with_geometric(r(1.0), vec![1.0, 1.0]);
    out.push(rec(
        "GAMMA-SONDOW",
        loc,
        TOL_QUAD,
        Asserted,
        "γ = ∫∫ (1−x)/((1−xy)(−log xy))",
        cube(vec![(r(1.0), sondow([0.0, 0.0])), (r(-1.0), sondow([1.0, 0.0]))], Part::Full),
        k("euler"),
    ));
    out.push(rec(
        "GAMMA-SERIES",
        loc,
        TOL_CLOSED,
        Asserted,
        "γ = Σ(1/(n+1) − log((n+2)/(n+1)))",
        Plan::Series(SeriesSpec::EulerGamma),
        k("euler"),
    ));

    let loc = "constants/digamma-series";
    for (id, a, b, cc, d) in [("T8-A", 2.0, 2.0, 1.0, 0.0), ("T8-B", 4.0, 5.0, 8.0, 10.0)] {
        let s = |mu: [f64; 2]| real_spec(&mu, 1).with_geometric(r(1.0), vec![b, b]);
        let value = format!(
            "(- (/ (log (/ (gamma (/ {} {b})) (gamma (/ {} {b})))) {}) (/ (psi (/ {} {b})) {b}))",
            b + cc,
            a + b,
            cc - a,
            b + d
        );
        out.push(rec(
            id,
            loc,
            TOL_QUAD,
            Asserted,
            &format!("(xy)^b((xy)^(d−1) − x^(a−1)y^(c−1))/((1−(xy)^b)(−log xy)) with (a, b, c, d) = ({a}, {b}, {cc}, {d})"),
            cube(
                vec![(r(1.0), s([b + d - 1.0, b + d - 1.0])), (r(-1.0), s([b + a - 1.0, b + cc - 1.0]))],
                Part::Full,
            ),
            k(&value),
        ));
    }
    out.push(rec(
        "T8-A-PRINTED",
        loc,
        TOL_CLOSED,
        Asserted,
        "Γ/ψ closed form at (2, 2, 1, 0) against γ/2 − log(√π/2)",
        k("(- (/ (log (/ (gamma (/ 3 2)) (gamma 2))) -1) (/ (psi 1) 2))"),
        k("(- (/ euler 2) (log (/ (sqrt pi) 2)))"),
    ));
    out.push(rec(
        "T8-B-PRINTED",
        loc,
        TOL_CLOSED,
        Asserted,
        "Γ/ψ closed form at (4, 5, 8, 10) against −3/10 + γ/5 + log(Γ(13/5)/Γ(9/5))/4",
        k("(- (/ (log (/ (gamma (/ 13 5)) (gamma (/ 9 5)))) 4) (/ (psi 3) 5))"),
        k("(+ (+ -0.3 (/ euler 5)) (/ (log (/ (gamma (/ 13 5)) (gamma (/ 9 5)))) 4))"),
    ));

    let loc = "constants/digamma";
    for (id, s) in [("T9-PSI-HALF", 0.5), ("T9-PSI-1", 1.0), ("T9-PSI-2", 2.0), ("T9-PSI-3", 3.0)] {
        let g = |mu: [f64; 2]| real_spec(&mu, 1).with_geometric(r(1.0), vec![1.0, 1.0]);
        out.push(rec(
            id,
            loc,
            TOL_QUAD,
            Asserted,
            &format!("ψ({s}) = ∫∫ ((xy)^(s−1) − y)/((1−xy) log xy)"),
            cube(vec![(r(-1.0), g([s - 1.0, s - 1.0])), (r(1.0), g([0.0, 1.0]))], Part::Full),
            k(&format!("(psi {s})")),
        ));
    }
}

fn psi_sums(out: &mut Vec<IdentityRecord>) {
    let sums: [(f64, bool, &[f64], &str); 10] = [
        (1.0, false, &[0.0, 1.0], "(- 1 euler)"),
        (2.0, false, &[0.0, 1.0], "(- (- (- 2 euler) (/ (* pi pi) 6)) (* (log 2) (log 2)))"),
        (
            4.0,
            false,
            &[0.0, 1.0],
            "(+ (- (- (- 4 (* 2 catalan)) euler) (/ (* 19 (* pi pi)) 48)) (- (* (/ pi 4) (log 2)) (* (/ 5 4) (* (log 2) (log 2)))))",
        ),
        (1.0, true, &[0.0], "(* (/ (log 2) 2) (+ (* 2 euler) (log 2)))"),
        (2.0, true, &[0.0], "(+ (/ (* pi pi) 12) (* (log 2) (+ euler (log 2))))"),
        (4.0, true, &[0.0], "(+ (+ (/ (* 11 (* pi pi)) 48) (* euler (log 2))) (* (/ 7 4) (* (log 2) (log 2))))"),
        (1.0, false, &[0.0, 0.0], "(- (zeta 3) (/ (* (* pi pi) euler) 6))"),
        (1.0, false, &[0.0, 2.0], "(- (/ 7 8) (* (/ 3 4) euler))"),
        (2.0, false, &[0.0, 2.0], "(- (- (/ 3 4) (* (/ 3 4) euler)) (log 2))"),
        (
            4.0,
            false,
            &[0.0, 2.0],
            "(/ (- (+ (* -36 euler) (* (- 12 (* 11 pi)) pi)) (* 12 (+ -6 (+ (* (log 2) (log 2)) (* 6 (log 2)))))) 48)",
        ),
    ];
    for (i, (q, alternating, den, value)) in sums.iter().enumerate() {
        let sign = if *alternating { "(−1)ⁿ " } else { "" };
        let d: Vec<String> = den.iter().map(|c| if *c == 0.0 { "n".into() } else { format!("(n+{c})") }).collect();
        out.push(rec(
            &format!("T9-SUM-{:02}", i + 1),
            "psi-sums",
            1e-7,
            Asserted,
            &format!("Σ {sign}ψ(n/{q})/({})", d.join("·")),
            Plan::Series(SeriesSpec::PsiSum { q: *q, alternating: *alternating, den: den.to_vec() }),
            k(value),
        ));
    }
}

fn theta(r: f64, k: u32) -> f64 {
    (0..k).map(|j| r.powi((j * (j + 1) / 2) as i32)).sum()
}

fn ramanujan(out: &mut Vec<IdentityRecord>) {
    let loc = "ramanujan/geometric";
    let rs = [("QUARTER", 0.25), ("HALF", 0.5)];
    for kk in 1..=4u32 {
        for (tag, rv) in rs {
            let fp = ramanujan_product(ProductFamily::Geometric { r: rv }, kk).expect("valid family");
            out.push(rec(
                &format!("RAM-1-K{kk}-{tag}"),
                loc,
                TOL_CLOSED,
                SuspectedTypo,
                &format!("{}-fold cosine form with weights r^(n−1), r = {rv}, against the truncated theta sum", 2 * kk),
                Plan::halfline(fp).re(),
                k(&format!("(/ pi (* 2 {}))", theta(rv, kk))),
            ));
        }
    }
    for (tag, rv) in rs {
        out.push(rec(
            &format!("RAM-1-X3-{tag}"),
            loc,
            TOL_CLOSED,
            SuspectedTypo,
            &format!("product with the displayed cubic factor (1 + r⁴x³), r = {rv}"),
            Plan::halfline(cubic_variant_product(rv).expect("valid ratio")).re(),
            k(&format!("(/ pi (* 2 {}))", theta(rv, 3))),
        ));
    }
    for kk in [2u32, 4, 6] {
        let fp = ramanujan_product(ProductFamily::Geometric { r: 0.5 }, kk).expect("valid family");
        out.push(rec(
            &format!("RAM-1-SIN-K{kk}"),
            loc,
            TOL_SINE,
            Asserted,
            &format!("{}-fold sine form vanishes (conjugate-paired factors)", 2 * kk),
            Plan::halfline(fp).im(),
            k("0"),
        ));
    }

    let loc = "ramanujan/shifted";
    for kk in [2u32, 4, 6] {
        let fp = ramanujan_product(ProductFamily::Shifted { a: 1.0 }, kk).expect("valid family");
        out.push(rec(
            &format!("RAM-2-SIN-K{kk}"),
            loc,
            TOL_SINE,
            Asserted,
            &format!("{}-fold sine form with weights 1/(a+n−1), a = 1, vanishes", 2 * kk),
            Plan::halfline(fp).im(),
            k("0"),
        ));
    }
    for (tag, a) in [("A1", 1.0), ("A3-2", 1.5)] {
        out.push(rec(
            &format!("RAM-2-{tag}"),
            loc,
            TOL_TREND,
            Asserted,
            &format!("k → ∞ trend of the shifted products, a = {a}, against ½√π Γ(a+½)/Γ(a)"),
            Plan::ShiftedProductTrend { a, k_max: 24 },
            k(&format!("(/ (* (sqrt pi) (gamma (+ {a} 0.5))) (* 2 (gamma {a})))")),
        ));
    }
}

/// The catalog, in a fixed order.
pub fn builtin_registry() -> Registry {
    let mut out = Vec::new();
    halfline_examples(&mut out);
    log_power_examples(&mut out);
    shifted_log_examples(&mut out);
    geometric_examples(&mut out);
    alternating_examples(&mut out);
    frullani_examples(&mut out);
    number_theory(&mut out);
    constants(&mut out);
    psi_sums(&mut out);
    ramanujan(&mut out);
    match Registry::new(out, REGISTRY_VERSION) {
        Ok(reg) => reg,
        Err(e) => panic!("built-in registry is inconsistent: {e}"),
    }
}
