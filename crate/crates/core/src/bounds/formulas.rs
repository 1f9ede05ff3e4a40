//! Right-hand sides of the registry entries.
//!
//! `d(i)` is 1-based. Index sums run over the listed entries; `n`, `m`
//! come from the context's convention. Differences `d_i − d_{i+1}` keep
//! their sign, so odd powers of an ascending step are negative.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::context::{int, BoundContext};
use super::{BoundError, Field, Value};
use crate::Rational;

type Eval = Result<Value, BoundError>;

fn ratio(num: Rational, den: Rational, id: &'static str, what: &'static str) -> Result<Rational, BoundError> {
    if den.is_zero() {
        Err(BoundError::DivisionByZero { id, what })
    } else {
        Ok(num / den)
    }
}

fn need_len(ctx: &BoundContext, id: &'static str, min: usize) -> Result<(), BoundError> {
    if ctx.len() < min {
        Err(BoundError::SequenceTooShort { id, len: ctx.len(), min })
    } else {
        Ok(())
    }
}

fn missing(id: &'static str, field: Field) -> BoundError {
    BoundError::MissingContextField { id, field }
}

fn floor_q(q: Rational) -> Rational {
    q.floor()
}

fn ceil_q(q: Rational) -> Rational {
    q.ceil()
}

fn pow(v: i64, e: u32) -> Rational {
    Rational::from_integer(BigInt::from(v).pow(e))
}

/// Σ_{i=lo}^{hi} (d_i − d_{i+1})^p over 1-based `i`; empty when `hi < lo`.
fn diff_pow_sum(ctx: &BoundContext, lo: usize, hi: isize, p: u32) -> Rational {
    let mut s = Rational::zero();
    let mut i = lo;
    while (i as isize) <= hi {
        s += pow(ctx.d(i) - ctx.d(i + 1), p);
        i += 1;
    }
    s
}

fn last(ctx: &BoundContext) -> isize {
    ctx.len() as isize
}

fn n2_plus_m2(ctx: &BoundContext) -> Rational {
    pow(ctx.n, 2) + pow(ctx.m, 2)
}

/// Δ(Δ − 1)²
fn delta_poly(ctx: &BoundContext) -> Rational {
    let d = ctx.max_degree;
    int(d) * pow(d - 1, 2)
}

/// 2λ(n² + m²) / (3(n + m))
fn lambda_term(ctx: &BoundContext, id: &'static str) -> Result<Rational, BoundError> {
    ratio(
        int(2) * ctx.lambda.clone() * n2_plus_m2(ctx),
        int(3 * (ctx.n + ctx.m)),
        id,
        "3(n+m)",
    )
}

/// ⌊2(n + m + shift)² / (5·div)⌋
fn floor_term(ctx: &BoundContext, shift: i64, div: i64) -> Rational {
    floor_q(int(2) * pow(ctx.n + ctx.m + shift, 2) / int(5 * div))
}

fn sigma_of(ctx: &BoundContext, id: &'static str) -> Result<Rational, BoundError> {
    ctx.sigma.map(|s| int(s as i64)).ok_or_else(|| missing(id, Field::Sigma))
}

pub(super) fn b01(ctx: &BoundContext) -> Eval {
    const ID: &str = "B01";
    need_len(ctx, ID, 2)?;
    let l = ctx.len();
    let sigma = sigma_of(ctx, ID)?;
    let num = floor_q(Rational::new(BigInt::from(2 * ctx.n * ctx.n - 1), BigInt::from(2)));
    let den = sigma + pow(ctx.d(1), 3) + pow(ctx.d(1) - ctx.d(2), 3) - pow(ctx.d(l - 1) - ctx.d(l), 3);
    Ok(Value::Exact(ratio(num, den, ID, "σ + d_1³ + (d_1−d_2)³ − (d_{L−1}−d_L)³")?))
}

pub(super) fn b02(ctx: &BoundContext) -> Eval {
    const ID: &str = "B02";
    let (n, m) = (ctx.n, ctx.m);
    let cubic = ratio(int(2) * pow(n, 3) + pow(m, 2), delta_poly(ctx), ID, "Δ(Δ−1)²")?;
    let t = Rational::new(BigInt::from(3 * n * m), BigInt::from(7));
    let inner = cubic + floor_q(t.clone()) - ceil_q(t);
    Ok(Value::Exact(ratio(inner, int(m - 1), ID, "m−1")?))
}

fn sqrt_term(ctx: &BoundContext, id: &'static str) -> Result<f64, BoundError> {
    let d = ctx.max_degree;
    let q = ratio(int(ctx.n * ctx.m), int(2 * d * (d - 1)), id, "2Δ(Δ−1)")?;
    Ok(ctx.min_degree as f64 * q.to_f64().unwrap_or(f64::NAN).sqrt())
}

fn alpha(n: i64) -> Rational {
    floor_q(Rational::new(BigInt::from(3 * n), BigInt::from(5)))
        * ceil_q(Rational::new(BigInt::from(2 * n), BigInt::from(5)))
}

fn b03_tail(ctx: &BoundContext) -> Rational {
    let half = Rational::new(1.into(), 2.into());
    half * n2_plus_m2(ctx) + int(ctx.n) * pow(ctx.m - ctx.max_degree, 2)
}

pub(super) fn b03(ctx: &BoundContext) -> Eval {
    const ID: &str = "B03";
    let frac = ratio(int(2 * ctx.n * ctx.m), delta_poly(ctx), ID, "Δ(Δ−1)²")?;
    let exact = alpha(ctx.n) * frac + b03_tail(ctx);
    Ok(Value::Real(exact.to_f64().unwrap_or(f64::NAN) + sqrt_term(ctx, ID)?))
}

pub(super) fn b03t(ctx: &BoundContext) -> Eval {
    const ID: &str = "B03t";
    let frac = ratio(int(2 * ctx.n * ctx.m), delta_poly(ctx), ID, "Δ(Δ−1)²")?;
    let exact = alpha(ctx.n) + frac + b03_tail(ctx);
    Ok(Value::Real(exact.to_f64().unwrap_or(f64::NAN) + sqrt_term(ctx, ID)?))
}

pub(super) fn b04(ctx: &BoundContext) -> Eval {
    const ID: &str = "B04";
    let h = ctx.harmonic.clone().ok_or_else(|| missing(ID, Field::Harmonic))?;
    let n = ctx.n;
    let first = floor_q(ratio(int(2) * pow(n, 2), int(3) * ctx.lambda.clone(), ID, "3λ")?);
    let second = ratio(
        Rational::from_integer(BigInt::from(2).pow(ctx.eta)) * pow(ctx.m - ctx.max_degree, 2),
        int(5) * pow(n - 1, 3),
        ID,
        "5(n−1)³",
    )?;
    Ok(Value::Exact(first + second + int(n - 1) * h))
}

fn lambda_cube_sum(ctx: &BoundContext) -> Rational {
    ctx.lambda.clone() * diff_pow_sum(ctx, 1, last(ctx) - 1, 3)
}

pub(super) fn b05(ctx: &BoundContext) -> Eval {
    let (n, m) = (ctx.n, ctx.m);
    Ok(Value::Exact(lambda_cube_sum(ctx) + int(2) * n2_plus_m2(ctx) + int(3 * m + n + 2)))
}

pub(super) fn b05t(ctx: &BoundContext) -> Eval {
    Ok(Value::Exact(int(2) * n2_plus_m2(ctx) + int(3 * ctx.n)))
}

pub(super) fn b06(ctx: &BoundContext) -> Eval {
    let cubes: Rational = ctx.entries.iter().map(|&x| pow(x as i64, 3)).sum();
    Ok(Value::Exact(cubes + lambda_term(ctx, "B06")?))
}

pub(super) fn b07(ctx: &BoundContext) -> Eval {
    let m = ctx.m;
    Ok(Value::Exact(lambda_cube_sum(ctx) + int(2 * m * m + 2 * m + ctx.n)))
}

pub(super) fn b08(ctx: &BoundContext) -> Eval {
    Ok(Value::Exact(lambda_cube_sum(ctx) + int(2 * ctx.n * ctx.n + 2)))
}

pub(super) fn b09(ctx: &BoundContext) -> Eval {
    let f = ctx.forgotten.ok_or_else(|| missing("B09", Field::Forgotten))?;
    Ok(Value::Exact(int(2 * f as i64 + 2 * ctx.n * ctx.n + 2)))
}

pub(super) fn b10(ctx: &BoundContext) -> Eval {
    const ID: &str = "B10";
    let m1 = ctx.zagreb1.ok_or_else(|| missing(ID, Field::Zagreb1))?;
    Ok(Value::Exact(int(m1 as i64) + floor_term(ctx, 0, 1) + lambda_term(ctx, ID)?))
}

pub(super) fn b11(ctx: &BoundContext) -> Eval {
    let sq = ctx.lambda.clone() * diff_pow_sum(ctx, 1, last(ctx) - 1, 2);
    Ok(Value::Exact(sq + floor_term(ctx, 0, 1) + lambda_term(ctx, "B11")?))
}

pub(super) fn b12(ctx: &BoundContext) -> Eval {
    let k = ctx.k;
    let num = Rational::from_integer(BigInt::from(2).pow(k as u32)) * pow(ctx.n + ctx.m, 2);
    let den = int(2 * (k + 1)) * delta_poly(ctx);
    Ok(Value::Exact(ratio(num, den, "B12", "2(k+1)Δ(Δ−1)²")?))
}

pub(super) fn b13(ctx: &BoundContext) -> Eval {
    let l = ctx.len();
    let ratios: Rational = (1..l).map(|i| Rational::new(ctx.d(i).into(), ctx.d(i + 1).into())).sum();
    let n = ctx.n;
    let half_sq = floor_q(Rational::new(BigInt::from(n * n), BigInt::from(2)));
    Ok(Value::Exact(pow(ctx.d(l), 3) + pow(ctx.d(1), 3) + ratios + half_sq + int(2 * n + 2)))
}

pub(super) fn b14(ctx: &BoundContext) -> Eval {
    let l = ctx.len();
    let top = last(ctx);
    Ok(Value::Exact(
        diff_pow_sum(ctx, 1, top - 1, 3)
            + diff_pow_sum(ctx, 2, top - 2, 2)
            + pow(ctx.d(1), 2)
            + pow(ctx.d(l), 2)
            + floor_term(ctx, 0, 1),
    ))
}

pub(super) fn b15(ctx: &BoundContext) -> Eval {
    let l = ctx.len();
    let top = last(ctx);
    Ok(Value::Exact(
        diff_pow_sum(ctx, 1, top - 1, 4)
            + diff_pow_sum(ctx, 2, top - 2, 3)
            + pow(ctx.d(1), 2)
            + pow(ctx.d(l), 2)
            + floor_term(ctx, -2, 1),
    ))
}

pub(super) fn b16(ctx: &BoundContext) -> Eval {
    let l = ctx.len();
    let top = last(ctx);
    let squares: Rational = ctx.entries.iter().map(|&x| pow(x as i64, 2)).sum();
    Ok(Value::Exact(
        diff_pow_sum(ctx, 1, top - 1, 4)
            + diff_pow_sum(ctx, 2, top - 2, 3)
            + squares
            + pow(ctx.d(1), 3)
            + pow(ctx.d(l), 3)
            + int(2 * (ctx.d(1) - ctx.d(l)) - ctx.n * ctx.max_degree),
    ))
}

pub(super) fn b17(ctx: &BoundContext) -> Eval {
    let l = ctx.len();
    let n = ctx.n;
    let product = floor_q(Rational::new(BigInt::from(2 * n - 1), BigInt::from(2)))
        * ceil_q(Rational::new(BigInt::from(3 * n - 2), BigInt::from(3)));
    Ok(Value::Exact(
        pow(ctx.d(1), 3)
            + pow(ctx.d(l), 3)
            + diff_pow_sum(ctx, 2, last(ctx) - 1, 4)
            + product
            + Rational::new(BigInt::from(n * ctx.max_degree), BigInt::from(2)),
    ))
}

pub(super) fn b18(ctx: &BoundContext) -> Eval {
    let k = ctx.k;
    Ok(Value::Exact(int(k) * n2_plus_m2(ctx) + int(ctx.n * (k * ctx.m - ctx.max_degree))))
}

pub(super) fn b19(ctx: &BoundContext) -> Eval {
    const ID: &str = "B19";
    let (n, m, k) = (ctx.n, ctx.m, ctx.k);
    let middle = ratio(int(n * (m - ctx.max_degree)), int(m - k), ID, "m−k")?;
    Ok(Value::Exact(n2_plus_m2(ctx) / int(k) + middle + floor_term(ctx, 0, k)))
}

pub(super) fn b20(ctx: &BoundContext) -> Eval {
    const ID: &str = "B20";
    let (n, m, k, delta) = (ctx.n, ctx.m, ctx.k, ctx.max_degree);
    let frac = ratio(int(m - delta), int(m - k), ID, "m−k")?;
    let lead = Rational::new(BigInt::from(k * k - 1), BigInt::from(k)) * n2_plus_m2(ctx);
    Ok(Value::Exact(lead + int(n) * (int(k * m - delta) - frac) - floor_term(ctx, 0, k)))
}
