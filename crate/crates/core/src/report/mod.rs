//! Reproducible tables, statistics and plot data.
//!
//! Everything here produces strings or plain records so the CLI can write
//! each output exactly once.

mod plot;
mod stats;

pub use plot::{cmd_plot, PlotData, PlotKind, Series};
pub use stats::{cmd_correlation, correlation, fit, CorrelationMatrix, FitResult, TABLE2_COLUMNS};

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use thiserror::Error;

use crate::bounds::{self, table_columns, BoundContext, BoundError, Convention, Overrides};
use crate::degseq::{self, SequenceError};
use crate::indices;
use crate::Rational;

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("missing column {0:?}")]
    MissingColumn(String),
    #[error("row {row}, column {column:?}: cannot parse {value:?} as a number")]
    BadNumber { row: usize, column: String, value: String },
    #[error("column {0:?} has zero variance")]
    DegenerateColumn(String),
    #[error("{got} rows given, at least {min} needed")]
    TooFewRows { got: usize, min: usize },
    #[error("design matrix is rank deficient")]
    SingularDesign,
    #[error("unknown plot kind {0:?} (expected fig2 or fig3)")]
    UnknownKind(String),
    #[error("row {row}: {msg}")]
    BadRow { row: usize, msg: String },
    #[error(transparent)]
    Sequence(#[from] SequenceError),
    #[error(transparent)]
    Bound(#[from] BoundError),
}

/// The nine sequences of the parameter table.
pub const TABLE1_SEQUENCES: [[usize; 7]; 9] = [
    [20, 18, 16, 13, 10, 7, 3],
    [23, 22, 20, 16, 12, 10, 5],
    [26, 26, 24, 19, 14, 13, 7],
    [29, 28, 28, 22, 16, 16, 9],
    [32, 30, 29, 25, 18, 17, 11],
    [35, 32, 30, 28, 20, 19, 13],
    [38, 34, 32, 31, 22, 21, 15],
    [41, 36, 34, 33, 24, 23, 17],
    [44, 38, 36, 35, 26, 25, 19],
];

/// The ten caterpillar spines of the σ bound table.
pub const TABLE2_SEQUENCES: [[usize; 7]; 10] = [
    [15, 13, 11, 10, 8, 6, 4],
    [18, 15, 13, 11, 10, 8, 5],
    [21, 17, 15, 12, 12, 10, 7],
    [24, 19, 17, 13, 14, 12, 9],
    [27, 21, 19, 14, 16, 14, 11],
    [30, 23, 21, 15, 18, 16, 13],
    [33, 25, 23, 16, 20, 18, 15],
    [36, 27, 25, 17, 22, 20, 17],
    [39, 29, 27, 18, 24, 22, 19],
    [42, 31, 29, 19, 26, 24, 21],
];

pub fn table1_sequences() -> Vec<Vec<usize>> {
    TABLE1_SEQUENCES.iter().map(|r| r.to_vec()).collect()
}

pub fn table2_sequences() -> Vec<Vec<usize>> {
    TABLE2_SEQUENCES.iter().map(|r| r.to_vec()).collect()
}

/// Reads one sequence per non-blank, non-`#` line.
pub fn parse_sequence_list(text: &str) -> Result<Vec<Vec<usize>>, ReportError> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| Ok(degseq::positive_entries(&degseq::parse_entries(l)?)?))
        .collect()
}

pub fn format_sequence(d: &[usize]) -> String {
    let inner: Vec<String> = d.iter().map(|x| x.to_string()).collect();
    format!("({})", inner.join(","))
}

/// Shortest decimal that round-trips the f64.
fn real(x: f64) -> String {
    format!("{x}")
}

/// Fixed two decimals, rounding half away from zero.
pub fn two_decimals(x: f64) -> String {
    let cents = (x * 100.0).round();
    cents_string(cents < 0.0, (cents.abs() as u128).into())
}

/// Exact two-decimal rendering of a rational, half away from zero.
pub fn two_decimals_exact(q: &Rational) -> String {
    let cents = (q * Rational::from_integer(100.into())).round().to_integer();
    cents_string(cents.is_negative(), cents.abs())
}

fn cents_string(negative: bool, cents: BigInt) -> String {
    let hundred = BigInt::from(100);
    let sign = if negative && cents != BigInt::from(0) { "-" } else { "" };
    format!("{sign}{}.{:02}", &cents / &hundred, (&cents % &hundred).to_u32().unwrap_or(0))
}

/// One row of the parameter table.
#[derive(Clone, Debug, PartialEq)]
pub struct Table1Row {
    pub sequence: Vec<usize>,
    pub theorem: BigInt,
    pub alpha: BigInt,
    /// β as printed: β on the first row and 3β after it, unless consistent.
    pub beta_col: Rational,
    pub gamma: BigInt,
    pub lemma32: Rational,
}

pub fn table1_rows(rows: &[Vec<usize>], consistent: bool) -> Result<Vec<Table1Row>, ReportError> {
    rows.iter()
        .enumerate()
        .map(|(i, d)| {
            let c = table_columns(d)?;
            let scale = if consistent || i == 0 { 1 } else { 3 };
            Ok(Table1Row {
                sequence: d.clone(),
                theorem: c.theorem_col,
                alpha: c.alpha,
                beta_col: c.beta * Rational::from_integer(scale.into()),
                gamma: c.gamma,
                lemma32: c.lemma32_col,
            })
        })
        .collect()
}

pub const TABLE1_HEADER: [&str; 6] = ["sequence", "theorem", "alpha", "beta", "gamma", "lemma32"];

pub fn cmd_table1(rows: &[Vec<usize>], consistent: bool) -> Result<String, ReportError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(TABLE1_HEADER)?;
    for r in table1_rows(rows, consistent)? {
        w.write_record([
            format_sequence(&r.sequence),
            r.theorem.to_string(),
            r.alpha.to_string(),
            real(r.beta_col.to_f64().unwrap_or(f64::NAN)),
            r.gamma.to_string(),
            real(r.lemma32.to_f64().unwrap_or(f64::NAN)),
        ])?;
    }
    finish(w)
}

fn finish(w: csv::Writer<Vec<u8>>) -> Result<String, ReportError> {
    let bytes = w.into_inner().map_err(|e| ReportError::Csv(e.into_error().into()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// One row of the σ bound table.
#[derive(Clone, Debug, PartialEq)]
pub struct Table2Row {
    pub d: Vec<usize>,
    pub n: i64,
    pub sigma: u64,
    pub lb1: Rational,
    pub lb2: Rational,
    pub ub1: f64,
    pub ub2: Rational,
}

impl Table2Row {
    pub fn compute(d: &[usize]) -> Result<Self, ReportError> {
        let sigma = indices::caterpillar_sigma(d)?;
        let ctx = BoundContext::from_entries(d, Convention::Table, Overrides::default())?;
        let exact = |id: &str| -> Result<Rational, ReportError> {
            let v = bounds::evaluate_bound(id, &ctx)?.value.expect("value present");
            Ok(v.exact().cloned().expect("exact bound"))
        };
        let ub1 = bounds::evaluate_bound("B03t", &ctx)?.value.expect("value present").to_f64();
        Ok(Table2Row { d: d.to_vec(), n: ctx.n, sigma, lb1: exact("B14")?, lb2: exact("B16")?, ub1, ub2: exact("B05")? })
    }

    /// (n, σ, LB1, LB2, UB1, UB2) at full precision.
    pub fn columns(&self) -> [f64; 6] {
        let f = |q: &Rational| q.to_f64().unwrap_or(f64::NAN);
        [self.n as f64, self.sigma as f64, f(&self.lb1), f(&self.lb2), self.ub1, f(&self.ub2)]
    }
}

pub fn table2_rows(rows: &[Vec<usize>]) -> Result<Vec<Table2Row>, ReportError> {
    rows.iter().map(|d| Table2Row::compute(d)).collect()
}

pub const TABLE2_HEADER: [&str; 9] =
    ["sequence", "n", "sigma", "lb1", "lb2", "ub1", "ub2", "ub1_full", "ub2_full"];

/// CSV with the printed two-decimal upper bounds plus full-precision copies.
pub fn cmd_table2(rows: &[Vec<usize>]) -> Result<String, ReportError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(TABLE2_HEADER)?;
    for r in table2_rows(rows)? {
        w.write_record([
            format_sequence(&r.d),
            r.n.to_string(),
            r.sigma.to_string(),
            r.lb1.to_string(),
            r.lb2.to_string(),
            two_decimals(r.ub1),
            two_decimals_exact(&r.ub2),
            real(r.ub1),
            real(r.ub2.to_f64().unwrap_or(f64::NAN)),
        ])?;
    }
    finish(w)
}

/// A parsed CSV with a header row.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct CsvTable {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl CsvTable {
    pub fn parse(text: &str) -> Result<Self, ReportError> {
        if text.trim().is_empty() {
            return Ok(CsvTable::default());
        }
        let mut r = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(text.as_bytes());
        let headers = r.headers()?.iter().map(str::to_string).collect();
        let rows = r
            .records()
            .map(|rec| rec.map(|rec| rec.iter().map(str::to_string).collect()))
            .collect::<Result<_, _>>()?;
        Ok(CsvTable { headers, rows })
    }

    pub fn index_of(&self, name: &str) -> Result<usize, ReportError> {
        self.headers
            .iter()
            .position(|h| h == name)
            .ok_or_else(|| ReportError::MissingColumn(name.to_string()))
    }

    pub fn has(&self, name: &str) -> bool {
        self.headers.iter().any(|h| h == name)
    }

    /// A numeric column; fractions `a/b` are accepted.
    pub fn column(&self, name: &str) -> Result<Vec<f64>, ReportError> {
        let at = self.index_of(name)?;
        self.rows
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let cell = row.get(at).map(String::as_str).unwrap_or("");
                parse_number(cell).ok_or_else(|| ReportError::BadNumber {
                    row: i + 1,
                    column: name.to_string(),
                    value: cell.to_string(),
                })
            })
            .collect()
    }
}

fn parse_number(s: &str) -> Option<f64> {
    match s.split_once('/') {
        Some((a, b)) => {
            let q = Rational::new(a.trim().parse().ok()?, b.trim().parse().ok()?);
            q.to_f64()
        }
        None => s.parse().ok(),
    }
}

/// The six correlation columns of a σ bound table CSV, preferring the
/// full-precision upper bounds when present.
pub fn table2_columns_from_csv(table: &CsvTable) -> Result<Vec<(String, Vec<f64>)>, ReportError> {
    let pick = |full: &'static str, short: &'static str| if table.has(full) { full } else { short };
    let names = ["n", "sigma", "lb1", "lb2", pick("ub1_full", "ub1"), pick("ub2_full", "ub2")];
    TABLE2_COLUMNS
        .iter()
        .zip(names)
        .map(|(label, name)| Ok((label.to_string(), table.column(name)?)))
        .collect()
}

/// Correlation matrix as CSV with a label column.
pub fn correlation_csv(m: &CorrelationMatrix) -> String {
    let mut out = String::from("column");
    for l in &m.labels {
        write!(out, ",{l}").unwrap();
    }
    out.push('\n');
    for (l, row) in m.labels.iter().zip(&m.values) {
        out.push_str(l);
        for v in row {
            write!(out, ",{v:.6}").unwrap();
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_decimal_rounding() {
        assert_eq!(two_decimals(179785.4949), "179785.49");
        assert_eq!(two_decimals(0.125), "0.13");
        assert_eq!(two_decimals(-0.125), "-0.13");
        assert_eq!(two_decimals(305555.0), "305555.00");
        assert_eq!(two_decimals(-0.001), "0.00");
        assert_eq!(two_decimals_exact(&Rational::new(1.into(), 8.into())), "0.13");
        assert_eq!(two_decimals_exact(&Rational::new(128446.into(), 7.into())), "18349.43");
        assert_eq!(two_decimals_exact(&Rational::new((-1).into(), 8.into())), "-0.13");
    }

    #[test]
    fn table1_first_rows() {
        let csv = cmd_table1(&table1_sequences()[..2], false).unwrap();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("sequence,theorem,alpha,beta,gamma,lemma32"));
        assert!(lines.next().unwrap().starts_with("\"(20,18,16,13,10,7,3)\",30191,1820,7482.5,5742,2.15806094"));
        assert!(lines.next().unwrap().starts_with("\"(23,22,20,16,12,10,5)\",46550,2816,34669.5,9072,"));
        let consistent = table1_rows(&table1_sequences()[1..2], true).unwrap();
        assert_eq!(consistent[0].beta_col, Rational::new(23113.into(), 2.into()));
    }

    #[test]
    fn table2_first_row() {
        let csv = cmd_table2(&table2_sequences()[..1]).unwrap();
        let row = csv.lines().nth(1).unwrap();
        assert!(row.starts_with("\"(15,13,11,10,8,6,4)\",67,6318,7370,3293,179785.49,18349.43,"), "{row}");
    }

    #[test]
    fn csv_parse_and_columns() {
        let t = CsvTable::parse("a,b\n1,1/4\n2,0.5\n").unwrap();
        assert_eq!(t.column("b").unwrap(), vec![0.25, 0.5]);
        assert!(matches!(t.column("c"), Err(ReportError::MissingColumn(_))));
        let bad = CsvTable::parse("a\nx\n").unwrap();
        assert!(matches!(bad.column("a"), Err(ReportError::BadNumber { row: 1, .. })));
        assert_eq!(CsvTable::parse("").unwrap(), CsvTable::default());
    }

    #[test]
    fn sequence_lists() {
        let v = parse_sequence_list("# rows\n(3,2,1)\n\n4, 4\n").unwrap();
        assert_eq!(v, vec![vec![3, 2, 1], vec![4, 4]]);
        assert!(parse_sequence_list("1,x").is_err());
    }
}
