//! Registry of degree-sequence bounds on σ and their evaluation.
//!
//! Each entry has a stable id (`B01`..`B20`, plus `B03t` and `B05t` for
//! the variants that reproduce tabulated values). Evaluating an entry on a
//! [`BoundContext`] yields the right-hand side and, when σ is known, a
//! verdict on whether the claimed inequality holds for that σ.

mod context;
mod formulas;
mod table;

pub use context::{
    build_context, BoundContext, ContextEcho, Convention, Overrides, DEFAULT_ETA, DEFAULT_K,
};
pub use table::{table_columns, TableColumns};

use std::fmt;

use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::degseq::SequenceError;
use crate::Rational;
use context::int;

/// Absolute guard for verdicts that involve a square root.
pub const NEAR_TIE_GUARD: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundError {
    #[error("unknown bound id {0:?}")]
    UnknownBoundId(String),
    #[error("{id} needs context field `{field}`")]
    MissingContextField { id: &'static str, field: Field },
    #[error("{id}: division by zero in {what}")]
    DivisionByZero { id: &'static str, what: &'static str },
    #[error("{id}: sequence of length {len} is too short (need {min})")]
    SequenceTooShort { id: &'static str, len: usize, min: usize },
    #[error("degree sum {sum} does not match a tree (expected {expected})")]
    SumMismatch { sum: usize, expected: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Sequence(#[from] SequenceError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Direction {
    /// σ ≤ value
    Upper,
    /// σ ≥ value
    Lower,
    /// lo < value < hi (or ≤), independent of the direction of σ
    Window,
    /// (lo < value < hi) ⇔ √σ > n
    Equiv,
}

/// Optional context inputs an entry may depend on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Field {
    Sigma,
    Harmonic,
    Forgotten,
    Zagreb1,
    K,
    Eta,
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Field::Sigma => "sigma",
            Field::Harmonic => "harmonic",
            Field::Forgotten => "forgotten",
            Field::Zagreb1 => "zagreb1",
            Field::K => "k",
            Field::Eta => "eta",
        })
    }
}

/// Endpoints of a window claim; strictness comes from the entry.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Window {
    pub lo: (i64, i64),
    pub hi: WindowHi,
}

/// Upper window endpoint: a fixed fraction or `c·k`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum WindowHi {
    Fraction(i64, i64),
    TimesK(i64),
}

/// One registry entry.
#[derive(Clone, Debug)]
pub struct BoundSpec {
    pub id: &'static str,
    pub direction: Direction,
    /// Strict inequality (`<` rather than `≤`).
    pub strict: bool,
    pub needs: &'static [Field],
    /// The claimed statement, written out.
    pub statement: &'static str,
    pub window: Option<Window>,
    eval: fn(&BoundContext) -> Result<Value, BoundError>,
}

const fn spec(
    id: &'static str,
    direction: Direction,
    strict: bool,
    needs: &'static [Field],
    statement: &'static str,
    eval: fn(&BoundContext) -> Result<Value, BoundError>,
) -> BoundSpec {
    BoundSpec { id, direction, strict, needs, statement, window: None, eval }
}

use Direction::*;
use Field::*;

/// All entries in registry order.
pub fn registry() -> Vec<BoundSpec> {
    vec![
        BoundSpec {
            window: Some(Window { lo: (1, 3), hi: WindowHi::Fraction(1, 10) }),
            ..spec(
                "B01",
                Window,
                true,
                &[Sigma],
                "1/3 < ⌊(2n²−1)/2⌋ / (σ + d_1³ + (d_1−d_2)³ − (d_{L−1}−d_L)³) < 1/10",
                formulas::b01,
            )
        },
        BoundSpec {
            window: Some(Window { lo: (0, 1), hi: WindowHi::Fraction(3, 1) }),
            ..spec(
                "B02",
                Equiv,
                true,
                &[Sigma],
                "0 < (1/(m−1))((2n³+m²)/(Δ(Δ−1)²) + ⌊3nm/7⌋ − ⌈3nm/7⌉) < 3  ⇔  √σ > n",
                formulas::b02,
            )
        },
        spec(
            "B03",
            Upper,
            false,
            &[Sigma],
            "σ ≤ ⌊3n/5⌋⌈2n/5⌉·2nm/(Δ(Δ−1)²) + δ√(nm/(2Δ(Δ−1))) + (n²+m²)/2 + n(m−Δ)²  (δ ≥ 2)",
            formulas::b03,
        ),
        spec(
            "B03t",
            Upper,
            false,
            &[Sigma],
            "σ ≤ ⌊3n/5⌋⌈2n/5⌉ + 2nm/(Δ(Δ−1)²) + δ√(nm/(2Δ(Δ−1))) + (n²+m²)/2 + n(m−Δ)²",
            formulas::b03t,
        ),
        spec(
            "B04",
            Upper,
            false,
            &[Sigma, Harmonic, Eta],
            "σ ≤ ⌊2n²/(3λ)⌋ + 2^η(m−Δ)²/(5(n−1)³) + (n−1)H",
            formulas::b04,
        ),
        spec(
            "B05",
            Upper,
            false,
            &[Sigma],
            "σ ≤ Σ_{i=1}^{L−1} λ(d_i−d_{i+1})³ + 2(n²+m²) + 3m + n + 2",
            formulas::b05,
        ),
        spec("B05t", Upper, false, &[Sigma], "σ ≤ 2(n²+m²) + 3n", formulas::b05t),
        spec(
            "B06",
            Upper,
            false,
            &[Sigma],
            "σ ≤ Σ d_i³ + 2λ(n²+m²)/(3(n+m))",
            formulas::b06,
        ),
        spec(
            "B07",
            Upper,
            false,
            &[Sigma],
            "σ ≤ Σ λ(d_i−d_{i+1})³ + 2m² + 2m + n",
            formulas::b07,
        ),
        spec("B08", Upper, false, &[Sigma], "σ ≤ Σ λ(d_i−d_{i+1})³ + 2n² + 2", formulas::b08),
        spec("B09", Upper, false, &[Sigma, Forgotten], "σ ≤ 2F + 2n² + 2", formulas::b09),
        spec(
            "B10",
            Lower,
            false,
            &[Sigma, Zagreb1],
            "σ ≥ M1 + ⌊2(n+m)²/5⌋ + 2λ(n²+m²)/(3(n+m))",
            formulas::b10,
        ),
        spec(
            "B11",
            Lower,
            false,
            &[Sigma],
            "σ ≥ Σ λ(d_i−d_{i+1})² + ⌊2(n+m)²/5⌋ + 2λ(n²+m²)/(3(n+m))",
            formulas::b11,
        ),
        BoundSpec {
            window: Some(Window { lo: (0, 1), hi: WindowHi::TimesK(2) }),
            ..spec(
                "B12",
                Window,
                false,
                &[K],
                "0 ≤ 2^k(n+m)²/(2(k+1)Δ(Δ−1)²) ≤ 2k",
                formulas::b12,
            )
        },
        spec(
            "B13",
            Lower,
            false,
            &[Sigma],
            "σ ≥ d_L³ + d_1³ + Σ d_i/d_{i+1} + ⌊n²/2⌋ + 2n + 2",
            formulas::b13,
        ),
        spec(
            "B14",
            Lower,
            false,
            &[Sigma],
            "σ ≥ Σ_{i=1}^{L−1}(d_i−d_{i+1})³ + Σ_{i=2}^{L−2}(d_i−d_{i+1})² + d_1² + d_L² + ⌊2(n+m)²/5⌋",
            formulas::b14,
        ),
        spec(
            "B15",
            Lower,
            false,
            &[Sigma],
            "σ ≥ Σ_{i=1}^{L−1}(d_i−d_{i+1})⁴ + Σ_{i=2}^{L−2}(d_i−d_{i+1})³ + d_1² + d_L² + ⌊2(n+m−2)²/5⌋",
            formulas::b15,
        ),
        spec(
            "B16",
            Lower,
            false,
            &[Sigma],
            "σ ≥ Σ(d_i−d_{i+1})⁴ + Σ_{i=2}^{L−2}(d_i−d_{i+1})³ + Σ d_i² + d_1³ + d_L³ + 2(d_1−d_L) − nΔ",
            formulas::b16,
        ),
        spec(
            "B17",
            Lower,
            false,
            &[Sigma],
            "σ ≥ d_1³ + d_L³ + Σ_{i=2}^{L−1}(d_i−d_{i+1})⁴ + ⌊(2n−1)/2⌋⌈(3n−2)/3⌉ + nΔ/2",
            formulas::b17,
        ),
        spec("B18", Upper, false, &[Sigma, K], "σ ≤ k(n²+m²) + n(km−Δ)", formulas::b18),
        spec(
            "B19",
            Lower,
            false,
            &[Sigma, K],
            "σ ≥ (n²+m²)/k + n(m−Δ)/(m−k) + ⌊2(n+m)²/(5k)⌋",
            formulas::b19,
        ),
        spec(
            "B20",
            Upper,
            true,
            &[Sigma, K],
            "σ < ((k²−1)/k)(n²+m²) + n(km − Δ − (m−Δ)/(m−k)) − ⌊2(n+m)²/(5k)⌋",
            formulas::b20,
        ),
    ]
}

/// Registry entry by id (case-insensitive).
pub fn lookup(id: &str) -> Result<BoundSpec, BoundError> {
    registry()
        .into_iter()
        .find(|s| s.id.eq_ignore_ascii_case(id))
        .ok_or_else(|| BoundError::UnknownBoundId(id.to_string()))
}

/// Right-hand side of an entry: exact, or a real when a square root is involved.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Exact(Rational),
    Real(f64),
}

impl Value {
    pub fn to_f64(&self) -> f64 {
        match self {
            Value::Exact(q) => q.to_f64().unwrap_or(f64::NAN),
            Value::Real(x) => *x,
        }
    }

    pub fn exact(&self) -> Option<&Rational> {
        match self {
            Value::Exact(q) => Some(q),
            Value::Real(_) => None,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Exact(q) => write!(f, "{q}"),
            Value::Real(x) => write!(f, "{x}"),
        }
    }
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_f64(self.to_f64())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Holds,
    Violated,
    Undecidable,
}

/// Signed slack of a claim; negative means violated.
#[derive(Clone, Debug, PartialEq)]
pub enum Margin {
    Exact(Rational),
    Real(f64),
}

impl Margin {
    pub fn to_f64(&self) -> f64 {
        match self {
            Margin::Exact(q) => q.to_f64().unwrap_or(f64::NAN),
            Margin::Real(x) => *x,
        }
    }

    fn is_negative(&self) -> bool {
        match self {
            Margin::Exact(q) => q.is_negative(),
            Margin::Real(x) => *x < 0.0,
        }
    }

    fn is_zero(&self) -> bool {
        match self {
            Margin::Exact(q) => q.is_zero(),
            Margin::Real(x) => *x == 0.0,
        }
    }

    fn satisfies(&self, strict: bool) -> bool {
        !(self.is_negative() || strict && self.is_zero())
    }

    fn near_tie(&self) -> bool {
        matches!(self, Margin::Real(x) if x.abs() < NEAR_TIE_GUARD)
    }
}

impl Serialize for Margin {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_f64(self.to_f64())
    }
}

/// Outcome of evaluating one entry on one context.
#[derive(Clone, Debug, Serialize)]
pub struct BoundResult {
    pub id: &'static str,
    pub direction: Direction,
    /// `None` only when the value itself could not be computed.
    pub value: Option<Value>,
    /// Exact value as a fraction string, when exact.
    pub exact: Option<String>,
    pub verdict: Verdict,
    /// Binding margin: bound − σ (UPPER), σ − bound (LOWER), the smaller
    /// endpoint margin (WINDOW), ±1 for agreement (EQUIV).
    pub margin: Option<Margin>,
    /// Window endpoint margins `(value − lo, hi − value)`.
    pub endpoint_margins: Option<(Margin, Margin)>,
    /// For EQUIV: (window claim holds, √σ > n).
    pub equiv: Option<(bool, Option<bool>)>,
    pub near_tie: bool,
    pub notes: Vec<String>,
    pub context: ContextEcho,
}

impl BoundResult {
    fn undecidable(spec: &BoundSpec, ctx: &BoundContext, note: String) -> Self {
        BoundResult {
            id: spec.id,
            direction: spec.direction,
            value: None,
            exact: None,
            verdict: Verdict::Undecidable,
            margin: None,
            endpoint_margins: None,
            equiv: None,
            near_tie: false,
            notes: vec![note],
            context: ctx.echo(),
        }
    }
}

fn margin_between(a: &Value, b: &Rational) -> Margin {
    match a {
        Value::Exact(q) => Margin::Exact(q - b),
        Value::Real(x) => Margin::Real(x - b.to_f64().unwrap_or(f64::NAN)),
    }
}

fn negate(m: Margin) -> Margin {
    match m {
        Margin::Exact(q) => Margin::Exact(-q),
        Margin::Real(x) => Margin::Real(-x),
    }
}

fn window_margins(w: &Window, value: &Value, k: i64) -> (Margin, Margin) {
    let lo = Rational::new(w.lo.0.into(), w.lo.1.into());
    let hi = match w.hi {
        WindowHi::Fraction(a, b) => Rational::new(a.into(), b.into()),
        WindowHi::TimesK(c) => int(c * k),
    };
    (margin_between(value, &lo), negate(margin_between(value, &hi)))
}

fn smaller(a: &Margin, b: &Margin) -> Margin {
    if a.to_f64() <= b.to_f64() {
        a.clone()
    } else {
        b.clone()
    }
}

/// Evaluates one entry. Errors when the value cannot be computed; a
/// missing σ alone only makes the verdict `UNDECIDABLE`.
pub fn evaluate_bound(spec_id: &str, ctx: &BoundContext) -> Result<BoundResult, BoundError> {
    evaluate_spec(&lookup(spec_id)?, ctx)
}

pub fn evaluate_spec(spec: &BoundSpec, ctx: &BoundContext) -> Result<BoundResult, BoundError> {
    let value = (spec.eval)(ctx)?;
    let mut notes = Vec::new();
    if spec.id == "B03" && ctx.min_degree < 2 {
        notes.push(format!("precondition δ ≥ 2 not met (δ = {})", ctx.min_degree));
    }
    let sigma = ctx.sigma.map(|s| int(s as i64));

    let mut endpoint_margins = None;
    let mut equiv = None;
    let margin = match spec.direction {
        Direction::Upper => sigma.as_ref().map(|s| margin_between(&value, s)),
        Direction::Lower => sigma.as_ref().map(|s| negate(margin_between(&value, s))),
        Direction::Window => {
            let w = spec.window.as_ref().expect("window entries carry endpoints");
            let (lo, hi) = window_margins(w, &value, ctx.k);
            let m = smaller(&lo, &hi);
            endpoint_margins = Some((lo, hi));
            Some(m)
        }
        Direction::Equiv => {
            let w = spec.window.as_ref().expect("equivalence entries carry endpoints");
            let (lo, hi) = window_margins(w, &value, ctx.k);
            let lhs = lo.satisfies(spec.strict) && hi.satisfies(spec.strict);
            endpoint_margins = Some((lo, hi));
            let rhs = ctx.sigma.map(|s| (s as u128) > (ctx.n as u128).pow(2));
            equiv = Some((lhs, rhs));
            rhs.map(|r| int(if r == lhs { 1 } else { -1 })).map(Margin::Exact)
        }
    };

    let holds = match (&margin, &endpoint_margins, spec.direction) {
        (None, _, _) => None,
        (Some(_), Some((lo, hi)), Direction::Window) => {
            Some(lo.satisfies(spec.strict) && hi.satisfies(spec.strict))
        }
        (Some(m), _, Direction::Equiv) => Some(!m.is_negative()),
        (Some(m), _, _) => Some(m.satisfies(spec.strict)),
    };
    let verdict = match holds {
        None => Verdict::Undecidable,
        Some(true) => Verdict::Holds,
        Some(false) => Verdict::Violated,
    };

    let near_tie = margin.as_ref().is_some_and(Margin::near_tie)
        || endpoint_margins.as_ref().is_some_and(|(a, b)| a.near_tie() || b.near_tie());
    if near_tie {
        notes.push(format!("NEAR_TIE: margin within {NEAR_TIE_GUARD:e}"));
    }

    Ok(BoundResult {
        id: spec.id,
        direction: spec.direction,
        exact: value.exact().map(ToString::to_string),
        value: Some(value),
        verdict,
        margin,
        endpoint_margins,
        equiv,
        near_tie,
        notes,
        context: ctx.echo(),
    })
}

/// Every registry entry; failures become `UNDECIDABLE` with a note.
pub fn evaluate_all(ctx: &BoundContext) -> Vec<BoundResult> {
    registry()
        .iter()
        .map(|spec| {
            evaluate_spec(spec, ctx)
                .unwrap_or_else(|e| BoundResult::undecidable(spec, ctx, e.to_string()))
        })
        .collect()
}
