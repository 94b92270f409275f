use super::{ConstExpr, CubeIntegrandSpec, FactorProduct};
use crate::C64;

/// Component of a complex value retained by a plan.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Part {
    Full,
    Re,
    Im,
}

impl Part {
    pub fn apply(self, z: C64) -> C64 {
        match self {
            Part::Full => z,
            Part::Re => C64::new(z.re, 0.0),
            Part::Im => C64::new(z.im, 0.0),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Part::Full => "full",
            Part::Re => "re",
            Part::Im => "im",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Some(match s {
            "full" => Part::Full,
            "re" => Part::Re,
            "im" => Part::Im,
            _ => return None,
        })
    }
}

/// Whether a record's printed right-hand side is believed correct.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Trust {
    Asserted,
    SuspectedTypo,
}

impl Trust {
    pub fn name(self) -> &'static str {
        match self {
            Trust::Asserted => "asserted",
            Trust::SuspectedTypo => "suspected-typo",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Some(match s {
            "asserted" => Trust::Asserted,
            "suspected-typo" => Trust::SuspectedTypo,
            _ => return None,
        })
    }
}

/// Acceleration hint for custom series.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Accel {
    /// Terms decay geometrically; truncation by a ratio-test tail bound.
    None,
    /// Alternating terms; repeated averaging of partial sums.
    Alternating,
    /// Tail with an asymptotic expansion in powers of 1/N; Richardson
    /// extrapolation of partial sums.
    TailIntegral,
}

impl Accel {
    pub fn name(self) -> &'static str {
        match self {
            Accel::None => "none",
            Accel::Alternating => "alternating",
            Accel::TailIntegral => "tail",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Some(match s {
            "none" => Accel::None,
            "alternating" => Accel::Alternating,
            "tail" => Accel::TailIntegral,
            _ => return None,
        })
    }
}

/// Engine selection for a cube integral.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CubeRoute {
    /// Router decides from dimension and structure.
    Auto,
    /// Radial-simplex quadrature of the exponential-orthant form.
    Orthant,
    /// Nested tanh-sinh directly on the unit cube.
    Direct,
    /// Geometric-series expansion with per-term closed forms.
    Series,
    /// Randomized Sobol points.
    LowDiscrepancy,
}

impl CubeRoute {
    pub fn name(self) -> &'static str {
        match self {
            CubeRoute::Auto => "auto",
            CubeRoute::Orthant => "orthant",
            CubeRoute::Direct => "direct",
            CubeRoute::Series => "series",
            CubeRoute::LowDiscrepancy => "qmc",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Some(match s {
            "auto" => CubeRoute::Auto,
            "orthant" => CubeRoute::Orthant,
            "direct" => CubeRoute::Direct,
            "series" => CubeRoute::Series,
            "qmc" => CubeRoute::LowDiscrepancy,
            _ => return None,
        })
    }
}

/// Factor `(slope·x + offset + step·n)^multiplicity` of a series term.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TemplateFactor {
    pub slope: f64,
    pub offset: C64,
    pub step: f64,
    pub multiplicity: u32,
}

/// `coef · ∫₀^∞ P(x) / ∏ factors(n) dx` for one summation index.
#[derive(Debug, Clone, PartialEq)]
pub struct TemplateTerm {
    pub coef: C64,
    pub numerator: Vec<f64>,
    pub factors: Vec<TemplateFactor>,
}

impl TemplateTerm {
    pub fn instantiate(&self, n: u64) -> FactorProduct {
        let nf = n as f64;
        FactorProduct::new(
            self.factors
                .iter()
                .map(|f| super::LinearFactor::new(f.slope, f.offset + f.step * nf, f.multiplicity))
                .collect(),
            self.numerator.clone(),
        )
    }
}

/// Series families with a dedicated evaluator.
#[derive(Debug, Clone, PartialEq)]
pub enum SeriesSpec {
    /// Φ(z, s, a) = Σ_{k≥0} zᵏ/(k+a)ˢ.
    Lerch { z: C64, s: f64, a: f64 },
    /// `scale · Σ_{n≥start} ratioⁿ · part(Σ_terms coef·∫ term(n))`.
    HalflineSum {
        ratio: C64,
        scale: C64,
        start: u64,
        part: Part,
        template: Vec<TemplateTerm>,
    },
    /// Σ_{n≥0} (1/(n+1) − log((n+2)/(n+1))).
    EulerGamma,
    /// log ∏_{n≥0} ((an+b)/(an+c))^{(−1)ⁿ}.
    AltLogProduct { a: f64, b: f64, c: f64 },
    /// Σ_{n≥1} (±1)ⁿ ψ(n/q) / ∏_c (n + c).
    PsiSum { q: f64, alternating: bool, den: Vec<f64> },
    /// Σ_{n≥start} term(n).
    Custom { start: u64, accel: Accel, term: ConstExpr },
}

/// One side of an identity.
#[derive(Debug, Clone, PartialEq)]
pub enum Plan {
    /// `∫₀^∞ e^{−weight·x} P(x)/∏(aₙx + bₙ + cₙi)^{mₙ} dx`.
    Halfline { product: FactorProduct, weight: f64 },
    /// `part(Σ coef · ∫_{[0,1]^k} spec)`, with `part` applied pointwise.
    Cube {
        terms: Vec<(C64, CubeIntegrandSpec)>,
        part: Part,
        route: CubeRoute,
    },
    Series(SeriesSpec),
    Const(ConstExpr),
    /// Σ coef · plan.
    Linear(Vec<(C64, Plan)>),
    Part(Part, Box<Plan>),
    /// Limit as k → ∞ of `∫₀^∞ dx / ∏_{n=1}^{k} (1 + x²/(a+n−1)²)`,
    /// extrapolated from the last few consecutive k up to k_max.
    ShiftedProductTrend { a: f64, k_max: u32 },
}

impl Plan {
    pub fn halfline(product: FactorProduct) -> Self {
        Plan::Halfline { product, weight: 0.0 }
    }

    pub fn cube(spec: CubeIntegrandSpec) -> Self {
        Plan::Cube { terms: vec![(C64::new(1.0, 0.0), spec)], part: Part::Full, route: CubeRoute::Auto }
    }

    pub fn constant(e: ConstExpr) -> Self {
        Plan::Const(e)
    }

    pub fn re(self) -> Self {
        Plan::Part(Part::Re, Box::new(self))
    }

    pub fn im(self) -> Self {
        Plan::Part(Part::Im, Box::new(self))
    }

    pub fn scaled(self, c: f64) -> Self {
        Plan::Linear(vec![(C64::new(c, 0.0), self)])
    }

    /// Whether any leaf is a numerical quadrature (not a closed form or a
    /// series evaluator).
    pub fn is_quadrature_backed(&self) -> bool {
        match self {
            Plan::Cube { route, .. } => *route != CubeRoute::Series,
            Plan::Linear(ts) => ts.iter().any(|(_, p)| p.is_quadrature_backed()),
            Plan::Part(_, p) => p.is_quadrature_backed(),
            _ => false,
        }
    }

    /// Every factor product reachable from this plan, for registry
    /// self-consistency checks.
    pub fn factor_products(&self) -> Vec<(&FactorProduct, f64)> {
        match self {
            Plan::Halfline { product, weight } => vec![(product, *weight)],
            Plan::Linear(ts) => ts.iter().flat_map(|(_, p)| p.factor_products()).collect(),
            Plan::Part(_, p) => p.factor_products(),
            _ => Vec::new(),
        }
    }

    /// Every cube spec reachable from this plan.
    pub fn cube_specs(&self) -> Vec<&CubeIntegrandSpec> {
        match self {
            Plan::Cube { terms, .. } => terms.iter().map(|(_, s)| s).collect(),
            Plan::Linear(ts) => ts.iter().flat_map(|(_, p)| p.cube_specs()).collect(),
            Plan::Part(_, p) => p.cube_specs(),
            _ => Vec::new(),
        }
    }

    /// Every series spec reachable from this plan.
    pub fn series_specs(&self) -> Vec<&SeriesSpec> {
        match self {
            Plan::Series(s) => vec![s],
            Plan::Linear(ts) => ts.iter().flat_map(|(_, p)| p.series_specs()).collect(),
            Plan::Part(_, p) => p.series_specs(),
            _ => Vec::new(),
        }
    }
}

/// One identity `lhs = rhs` with its acceptance tolerance.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityRecord {
    pub id: String,
    pub description: String,
    pub location: String,
    pub tolerance: f64,
    pub trust: Trust,
    pub lhs: Plan,
    pub rhs: Plan,
}
