use std::fmt::Write as _;
use std::str::FromStr;

use super::{CsvTable, ReportError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlotKind {
    /// Parameter table columns against row index.
    Fig2,
    /// σ bound table columns against row index.
    Fig3,
}

impl FromStr for PlotKind {
    type Err = ReportError;

    fn from_str(s: &str) -> Result<Self, ReportError> {
        match s.to_ascii_lowercase().as_str() {
            "fig2" => Ok(PlotKind::Fig2),
            "fig3" => Ok(PlotKind::Fig3),
            _ => Err(ReportError::UnknownKind(s.to_string())),
        }
    }
}

impl PlotKind {
    /// (series label, source column candidates)
    fn series(self) -> &'static [(&'static str, &'static [&'static str])] {
        match self {
            PlotKind::Fig2 => &[
                ("Theorem", &["theorem"]),
                ("alpha", &["alpha"]),
                ("beta", &["beta"]),
                ("gamma", &["gamma"]),
            ],
            PlotKind::Fig3 => &[
                ("n", &["n"]),
                ("sigma", &["sigma"]),
                ("LB1", &["lb1"]),
                ("LB2", &["lb2"]),
                ("UB1", &["ub1_full", "ub1"]),
                ("UB2", &["ub2_full", "ub2"]),
            ],
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Series {
    pub label: String,
    /// (row index from 1, value)
    pub points: Vec<(usize, f64)>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PlotData {
    pub kind: PlotKind,
    pub series: Vec<Series>,
}

/// Extracts the figure series from a table CSV. A table without data rows
/// yields an empty plot.
pub fn cmd_plot(table: &CsvTable, kind: &str) -> Result<PlotData, ReportError> {
    let kind: PlotKind = kind.parse()?;
    if table.rows.is_empty() {
        return Ok(PlotData { kind, series: Vec::new() });
    }
    let series = kind
        .series()
        .iter()
        .map(|(label, candidates)| {
            let col = candidates.iter().find(|c| table.has(c)).unwrap_or(&candidates[0]);
            let values = table.column(col)?;
            Ok(Series { label: label.to_string(), points: values.into_iter().enumerate().map(|(i, v)| (i + 1, v)).collect() })
        })
        .collect::<Result<_, ReportError>>()?;
    Ok(PlotData { kind, series })
}

const WIDTH: f64 = 720.0;
const HEIGHT: f64 = 440.0;
const MARGIN: f64 = 60.0;
const COLORS: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"];

impl PlotData {
    /// Long-format CSV: `series,x,y`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("series,x,y\n");
        for s in &self.series {
            for (x, y) in &s.points {
                writeln!(out, "{},{x},{y}", s.label).unwrap();
            }
        }
        out
    }

    /// A line chart with linear axes and a legend.
    pub fn to_svg(&self) -> String {
        let mut svg = format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" viewBox=\"0 0 {WIDTH} {HEIGHT}\">\n\
             <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        );
        let points = self.series.iter().flat_map(|s| s.points.iter());
        let (mut x_max, mut y_min, mut y_max) = (1usize, f64::INFINITY, f64::NEG_INFINITY);
        for &(x, y) in points {
            x_max = x_max.max(x);
            y_min = y_min.min(y);
            y_max = y_max.max(y);
        }
        if !y_min.is_finite() {
            (y_min, y_max) = (0.0, 1.0);
        }
        if y_max <= y_min {
            y_max = y_min + 1.0;
        }
        let px = |x: usize| MARGIN + (x as f64 - 1.0) / ((x_max - 1).max(1) as f64) * (WIDTH - 2.0 * MARGIN);
        let py = |y: f64| HEIGHT - MARGIN - (y - y_min) / (y_max - y_min) * (HEIGHT - 2.0 * MARGIN);

        let (left, right, top, bottom) = (MARGIN, WIDTH - MARGIN, MARGIN, HEIGHT - MARGIN);
        writeln!(svg, "<line x1=\"{left}\" y1=\"{bottom}\" x2=\"{right}\" y2=\"{bottom}\" stroke=\"black\"/>").unwrap();
        writeln!(svg, "<line x1=\"{left}\" y1=\"{top}\" x2=\"{left}\" y2=\"{bottom}\" stroke=\"black\"/>").unwrap();
        for x in 1..=x_max {
            writeln!(
                svg,
                "<text x=\"{:.2}\" y=\"{:.2}\" font-size=\"11\" text-anchor=\"middle\">{x}</text>",
                px(x),
                bottom + 16.0
            )
            .unwrap();
        }
        for (y, label) in [(y_min, y_min), (y_max, y_max)] {
            writeln!(
                svg,
                "<text x=\"{:.2}\" y=\"{:.2}\" font-size=\"11\" text-anchor=\"end\">{label}</text>",
                left - 6.0,
                py(y) + 4.0
            )
            .unwrap();
        }
        for (i, s) in self.series.iter().enumerate() {
            let color = COLORS[i % COLORS.len()];
            let coords: Vec<String> = s.points.iter().map(|&(x, y)| format!("{:.2},{:.2}", px(x), py(y))).collect();
            writeln!(
                svg,
                "<polyline fill=\"none\" stroke=\"{color}\" stroke-width=\"2\" points=\"{}\"><title>{}</title></polyline>",
                coords.join(" "),
                s.label
            )
            .unwrap();
            let ly = top + 16.0 * i as f64;
            writeln!(svg, "<rect x=\"{:.2}\" y=\"{:.2}\" width=\"10\" height=\"10\" fill=\"{color}\"/>", right + 6.0, ly - 9.0)
                .unwrap();
            writeln!(svg, "<text x=\"{:.2}\" y=\"{ly:.2}\" font-size=\"11\">{}</text>", right + 20.0, s.label).unwrap();
        }
        svg.push_str("</svg>\n");
        svg
    }
}
