use crate::special;
use crate::{Error, Result, C64};

/// Named constants and the series index `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symbol {
    Pi,
    Euler,
    Catalan,
    E,
    I,
    Ln2,
    /// The summation index inside a custom series term.
    N,
}

impl Symbol {
    pub fn name(self) -> &'static str {
        match self {
            Symbol::Pi => "pi",
            Symbol::Euler => "euler",
            Symbol::Catalan => "catalan",
            Symbol::E => "e",
            Symbol::I => "i",
            Symbol::Ln2 => "ln2",
            Symbol::N => "n",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Some(match s {
            "pi" => Symbol::Pi,
            "euler" => Symbol::Euler,
            "catalan" => Symbol::Catalan,
            "e" => Symbol::E,
            "i" => Symbol::I,
            "ln2" => Symbol::Ln2,
            "n" => Symbol::N,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Pow,
    Exp,
    Log,
    Sqrt,
    Sin,
    Cos,
    Atan,
    Atanh,
    Acoth,
    Coth,
    Re,
    Im,
    /// ζ(s), real s > 1.
    Zeta,
    Gamma,
    LnGamma,
    Psi,
    /// Eₙ(x).
    ExpInt,
    /// eˣ·Eₙ(x).
    ExpIntScaled,
    /// Φ(z, s, a).
    Lerch,
}

const FUNCS: &[(Func, &str, Option<usize>)] = &[
    (Func::Add, "+", None),
    (Func::Sub, "-", Some(2)),
    (Func::Mul, "*", None),
    (Func::Div, "/", Some(2)),
    (Func::Neg, "neg", Some(1)),
    (Func::Pow, "pow", Some(2)),
    (Func::Exp, "exp", Some(1)),
    (Func::Log, "log", Some(1)),
    (Func::Sqrt, "sqrt", Some(1)),
    (Func::Sin, "sin", Some(1)),
    (Func::Cos, "cos", Some(1)),
    (Func::Atan, "atan", Some(1)),
    (Func::Atanh, "atanh", Some(1)),
    (Func::Acoth, "acoth", Some(1)),
    (Func::Coth, "coth", Some(1)),
    (Func::Re, "re", Some(1)),
    (Func::Im, "im", Some(1)),
    (Func::Zeta, "zeta", Some(1)),
    (Func::Gamma, "gamma", Some(1)),
    (Func::LnGamma, "lngamma", Some(1)),
    (Func::Psi, "psi", Some(1)),
    (Func::ExpInt, "expint", Some(2)),
    (Func::ExpIntScaled, "expint-scaled", Some(2)),
    (Func::Lerch, "lerch", Some(3)),
];

impl Func {
    pub fn name(self) -> &'static str {
        FUNCS.iter().find(|f| f.0 == self).map(|f| f.1).unwrap_or("?")
    }

    pub fn from_name(s: &str) -> Option<Self> {
        FUNCS.iter().find(|f| f.1 == s).map(|f| f.0)
    }

    /// Fixed arity, `None` for n-ary `+` and `*`.
    pub fn arity(self) -> Option<usize> {
        FUNCS.iter().find(|f| f.0 == self).and_then(|f| f.2)
    }
}

/// Closed-form constant expression over γ, π, G, ζ, Γ, ψ, Eₙ and elementary
/// functions, evaluated in complex arithmetic.
#[derive(Debug, Clone, PartialEq)]
pub enum ConstExpr {
    Num(f64),
    Sym(Symbol),
    Call(Func, Vec<ConstExpr>),
}

// Reference values, 17+ significant digits.
pub(crate) const EULER_GAMMA: f64 = 0.577_215_664_901_532_86;
pub(crate) const CATALAN: f64 = 0.915_965_594_177_219_02;

impl ConstExpr {
    pub fn num(v: f64) -> Self {
        ConstExpr::Num(v)
    }

    pub fn sym(s: Symbol) -> Self {
        ConstExpr::Sym(s)
    }

    pub fn call(f: Func, args: Vec<ConstExpr>) -> Self {
        ConstExpr::Call(f, args)
    }

    /// Whether the expression mentions the index `n`.
    pub fn uses_index(&self) -> bool {
        match self {
            ConstExpr::Num(_) => false,
            ConstExpr::Sym(s) => *s == Symbol::N,
            ConstExpr::Call(_, args) => args.iter().any(|a| a.uses_index()),
        }
    }

    pub fn eval(&self) -> Result<C64> {
        self.eval_at(None)
    }

    /// Evaluates with `n` bound to `index`.
    pub fn eval_at(&self, index: Option<f64>) -> Result<C64> {
        match self {
            ConstExpr::Num(v) => Ok(C64::new(*v, 0.0)),
            ConstExpr::Sym(s) => Ok(match s {
                Symbol::Pi => C64::new(std::f64::consts::PI, 0.0),
                Symbol::Euler => C64::new(EULER_GAMMA, 0.0),
                Symbol::Catalan => C64::new(CATALAN, 0.0),
                Symbol::E => C64::new(std::f64::consts::E, 0.0),
                Symbol::I => C64::new(0.0, 1.0),
                Symbol::Ln2 => C64::new(std::f64::consts::LN_2, 0.0),
                Symbol::N => {
                    let n = index.ok_or_else(|| Error::Domain("index `n` is unbound".into()))?;
                    C64::new(n, 0.0)
                }
            }),
            ConstExpr::Call(f, args) => {
                if let Some(k) = f.arity() {
                    if args.len() != k {
                        return Err(Error::Domain(format!("`{}` takes {k} arguments", f.name())));
                    }
                }
                let v: Vec<C64> = args
                    .iter()
                    .map(|a| a.eval_at(index))
                    .collect::<Result<_>>()?;
                apply(*f, &v)
            }
        }
    }
}

fn real_arg(f: Func, z: C64) -> Result<f64> {
    if z.im != 0.0 {
        return Err(Error::Domain(format!("`{}` needs a real argument, got {z}", f.name())));
    }
    Ok(z.re)
}

fn int_arg(f: Func, z: C64) -> Result<u32> {
    let r = real_arg(f, z)?;
    if r < 0.0 || r.fract() != 0.0 || r > u32::MAX as f64 {
        return Err(Error::Domain(format!("`{}` needs a non-negative integer order", f.name())));
    }
    Ok(r as u32)
}

fn apply(f: Func, v: &[C64]) -> Result<C64> {
    let one = C64::new(1.0, 0.0);
    Ok(match f {
        Func::Add => v.iter().sum(),
        Func::Mul => v.iter().product(),
        Func::Sub => v[0] - v[1],
        Func::Div => v[0] / v[1],
        Func::Neg => -v[0],
        Func::Pow => {
            if v[1].im == 0.0 && v[1].re.fract() == 0.0 && v[1].re.abs() < 2e9 {
                v[0].powi(v[1].re as i32)
            } else {
                v[0].powc(v[1])
            }
        }
        Func::Exp => v[0].exp(),
        Func::Log => v[0].ln(),
        Func::Sqrt => v[0].sqrt(),
        Func::Sin => v[0].sin(),
        Func::Cos => v[0].cos(),
        Func::Atan => v[0].atan(),
        Func::Atanh => v[0].atanh(),
        Func::Acoth => ((v[0] + one) / (v[0] - one)).ln() * 0.5,
        Func::Coth => one / v[0].tanh(),
        Func::Re => C64::new(v[0].re, 0.0),
        Func::Im => C64::new(v[0].im, 0.0),
        Func::Zeta => C64::new(special::zeta(real_arg(f, v[0])?)?, 0.0),
        Func::Gamma => special::log_gamma(v[0])?.exp(),
        Func::LnGamma => special::log_gamma(v[0])?,
        Func::Psi => special::digamma(v[0])?,
        Func::ExpInt => special::exp_integral_e(int_arg(f, v[0])?, v[1])?,
        Func::ExpIntScaled => special::exp_integral_e_scaled(int_arg(f, v[0])?, v[1])?,
        Func::Lerch => {
            let s = real_arg(f, v[1])?;
            let a = real_arg(f, v[2])?;
            special::lerch_phi(v[0], s, a)?.value
        }
    })
}
