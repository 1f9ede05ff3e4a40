use num_bigint::BigInt;
use num_traits::Zero;

use super::context::int;
use super::BoundError;
use crate::degseq;
use crate::Rational;

/// Per-row parameter block of the tabulated sequences (TABLE convention).
#[derive(Clone, Debug, PartialEq)]
pub struct TableColumns {
    pub n: i64,
    /// ⌊3n/5⌋·⌈2n/5⌉
    pub alpha: BigInt,
    /// (n² + m²)/2
    pub beta: Rational,
    /// n(m − Δ)
    pub gamma: BigInt,
    /// (2n³ + m²) / ((m − 1)·Δ(Δ − 1)²), without the ⌊⌋ − ⌈⌉ correction.
    pub lemma32_col: Rational,
    /// 2(n² + m²) + 3n
    pub theorem_col: BigInt,
}

pub fn table_columns(entries: &[usize]) -> Result<TableColumns, BoundError> {
    let raw: Vec<i64> = entries.iter().map(|&x| x as i64).collect();
    let entries = degseq::positive_entries(&raw)?;
    let n: i64 = entries.iter().sum::<usize>() as i64;
    let m = n - 1;
    let delta = entries[0] as i64;
    let big = BigInt::from;

    let alpha = Rational::new(big(3 * n), big(5)).floor() * Rational::new(big(2 * n), big(5)).ceil();
    let n2m2 = big(n).pow(2) + big(m).pow(2);
    let den = int(m - 1) * int(delta) * int(delta - 1) * int(delta - 1);
    if den.is_zero() {
        return Err(BoundError::DivisionByZero { id: "table", what: "(m−1)Δ(Δ−1)²" });
    }
    let lemma32_col = (int(2) * int(n) * int(n) * int(n) + int(m) * int(m)) / den;
    Ok(TableColumns {
        n,
        alpha: alpha.to_integer(),
        beta: Rational::new(n2m2.clone(), big(2)),
        gamma: big(n) * big(m - delta),
        lemma32_col,
        theorem_col: big(2) * n2m2 + big(3 * n),
    })
}
