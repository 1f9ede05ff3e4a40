use nalgebra::{DMatrix, DVector};
use serde::Serialize;

use super::{ReportError, Table2Row};

/// Column order of the bound-table correlation matrix.
pub const TABLE2_COLUMNS: [&str; 6] = ["n", "sigma", "LB1", "LB2", "UB1", "UB2"];

/// Symmetric matrix of Pearson coefficients.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CorrelationMatrix {
    pub labels: Vec<String>,
    pub values: Vec<Vec<f64>>,
}

impl CorrelationMatrix {
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[i][j]
    }
}

fn centered(v: &[f64]) -> Vec<f64> {
    let mean = v.iter().sum::<f64>() / v.len() as f64;
    v.iter().map(|x| x - mean).collect()
}

/// Pearson correlation of every pair of named columns.
pub fn correlation(columns: &[(String, Vec<f64>)]) -> Result<CorrelationMatrix, ReportError> {
    let rows = columns.first().map_or(0, |c| c.1.len());
    if rows < 3 {
        return Err(ReportError::TooFewRows { got: rows, min: 3 });
    }
    if let Some((name, _)) = columns.iter().find(|c| c.1.len() != rows) {
        return Err(ReportError::BadRow { row: rows, msg: format!("column {name:?} has a different length") });
    }
    let mut scaled = Vec::with_capacity(columns.len());
    for (name, v) in columns {
        let c = centered(v);
        let norm = c.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm == 0.0 || !norm.is_finite() {
            return Err(ReportError::DegenerateColumn(name.clone()));
        }
        scaled.push(c.into_iter().map(|x| x / norm).collect::<Vec<_>>());
    }
    let k = scaled.len();
    let mut values = vec![vec![1.0; k]; k];
    for i in 0..k {
        for j in i + 1..k {
            let r: f64 = scaled[i].iter().zip(&scaled[j]).map(|(a, b)| a * b).sum();
            let r = r.clamp(-1.0, 1.0);
            values[i][j] = r;
            values[j][i] = r;
        }
    }
    Ok(CorrelationMatrix { labels: columns.iter().map(|c| c.0.clone()).collect(), values })
}

/// Correlation over (n, σ, LB1, LB2, UB1, UB2) at full precision.
pub fn cmd_correlation(rows: &[Table2Row]) -> Result<CorrelationMatrix, ReportError> {
    let cols = rows.iter().map(Table2Row::columns).collect::<Vec<_>>();
    let named: Vec<(String, Vec<f64>)> = TABLE2_COLUMNS
        .iter()
        .enumerate()
        .map(|(j, l)| (l.to_string(), cols.iter().map(|c| c[j]).collect()))
        .collect();
    correlation(&named)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FitResult {
    pub coefficients: Vec<f64>,
    pub intercept: f64,
    pub r_squared: f64,
}

/// Ordinary least squares with an intercept. Columns are centered before
/// the SVD solve; a constant response gives R² = 0 and zero coefficients.
pub fn fit(y: &[f64], xs: &[Vec<f64>]) -> Result<FitResult, ReportError> {
    let n = y.len();
    let p = xs.len();
    if n < p + 1 || n == 0 {
        return Err(ReportError::TooFewRows { got: n, min: p + 1 });
    }
    if let Some(col) = xs.iter().position(|c| c.len() != n) {
        return Err(ReportError::BadRow { row: n, msg: format!("regressor {col} has a different length") });
    }
    let y_mean = y.iter().sum::<f64>() / n as f64;
    let yc = DVector::from_vec(centered(y));
    let sst = yc.norm_squared();
    let x_means: Vec<f64> = xs.iter().map(|c| c.iter().sum::<f64>() / n as f64).collect();
    if sst == 0.0 {
        return Ok(FitResult { coefficients: vec![0.0; p], intercept: y_mean, r_squared: 0.0 });
    }
    if p == 0 {
        return Ok(FitResult { coefficients: Vec::new(), intercept: y_mean, r_squared: 0.0 });
    }

    // unit-norm columns keep the rank test scale-free
    let mut scales = Vec::with_capacity(p);
    let mut x = DMatrix::zeros(n, p);
    for (j, col) in xs.iter().enumerate() {
        let c = centered(col);
        let norm = c.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm == 0.0 {
            return Err(ReportError::SingularDesign);
        }
        scales.push(norm);
        for (i, v) in c.into_iter().enumerate() {
            x[(i, j)] = v / norm;
        }
    }
    let svd = x.clone().svd(true, true);
    let tol = f64::EPSILON * n.max(p) as f64 * svd.singular_values.max();
    if svd.rank(tol) < p {
        return Err(ReportError::SingularDesign);
    }
    let beta = svd.solve(&yc, tol).map_err(|_| ReportError::SingularDesign)?;
    let sse = (&yc - &x * &beta).norm_squared();
    let coefficients: Vec<f64> = beta.iter().zip(&scales).map(|(b, s)| b / s).collect();
    let intercept = y_mean - coefficients.iter().zip(&x_means).map(|(b, m)| b * m).sum::<f64>();
    Ok(FitResult { coefficients, intercept, r_squared: 1.0 - sse / sst })
}
