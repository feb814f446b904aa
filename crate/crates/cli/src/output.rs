//! Rendering of results as JSON, CSV or plain text.

use clap::ValueEnum;
use serde_json::{json, Map, Value};

use qtbranch::branching::{BranchTable, Report, TraceSeries};
use qtbranch::json::envelope;
use qtbranch::sym::LaurentSym;
use qtbranch::QQt;

#[derive(Clone, Copy, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

pub struct AlphaRow {
    pub lambda: String,
    pub mu: String,
    pub p: u64,
    pub alpha: u64,
    pub predicted: String,
    pub matches: bool,
}

enum Body {
    Qqt(QQt),
    Laurent(LaurentSym),
    Trace(TraceSeries),
    Count(u64),
    Branch(BranchTable),
    Gt(Vec<(Vec<Vec<String>>, QQt)>),
    Alpha(Vec<AlphaRow>),
    Reports(Vec<Report>),
}

pub struct Rendered {
    meta: Map<String, Value>,
    body: Body,
}

fn exps(e: &[i64]) -> String {
    e.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

fn pattern_string(rows: &[Vec<String>]) -> String {
    rows.iter().map(|r| r.join(" ")).collect::<Vec<_>>().join(" | ")
}

fn csv_text(header: &[&str], rows: Vec<Vec<String>>) -> Result<String, String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).map_err(|e| e.to_string())?;
    for r in rows {
        w.write_record(&r).map_err(|e| e.to_string())?;
    }
    String::from_utf8(w.into_inner().map_err(|e| e.to_string())?).map_err(|e| e.to_string())
}

fn laurent_rows(f: &LaurentSym) -> Vec<Vec<String>> {
    f.graded_terms().into_iter().map(|(e, c)| vec![exps(e), c.to_string()]).collect()
}

impl Rendered {
    fn new(meta: Map<String, Value>, body: Body) -> Self {
        Rendered { meta, body }
    }

    pub fn qqt(meta: Map<String, Value>, c: QQt) -> Self {
        Self::new(meta, Body::Qqt(c))
    }

    pub fn laurent(meta: Map<String, Value>, f: LaurentSym) -> Self {
        Self::new(meta, Body::Laurent(f))
    }

    pub fn trace(meta: Map<String, Value>, t: TraceSeries) -> Self {
        Self::new(meta, Body::Trace(t))
    }

    pub fn count(meta: Map<String, Value>, c: u64) -> Self {
        Self::new(meta, Body::Count(c))
    }

    pub fn branch(meta: Map<String, Value>, t: BranchTable) -> Self {
        Self::new(meta, Body::Branch(t))
    }

    pub fn gt(meta: Map<String, Value>, rows: Vec<(Vec<Vec<String>>, QQt)>) -> Self {
        Self::new(meta, Body::Gt(rows))
    }

    pub fn alpha(meta: Map<String, Value>, rows: Vec<AlphaRow>) -> Self {
        Self::new(meta, Body::Alpha(rows))
    }

    pub fn reports(meta: Map<String, Value>, reports: Vec<Report>) -> Self {
        Self::new(meta, Body::Reports(reports))
    }

    pub fn render(&self, format: Format) -> Result<String, String> {
        match format {
            Format::Json => self.json(),
            Format::Csv => self.csv(),
            Format::Pretty => Ok(self.pretty()),
        }
    }

    fn json(&self) -> Result<String, String> {
        let meta = Value::Object(self.meta.clone());
        let v = match &self.body {
            Body::Qqt(c) => envelope(meta, c),
            Body::Laurent(f) => envelope(meta, f),
            Body::Trace(t) => envelope(meta, t),
            Body::Count(c) => envelope(meta, c),
            Body::Branch(t) => envelope(meta, t),
            Body::Gt(rows) => {
                let rows: Vec<Value> = rows.iter().map(|(p, c)| json!({ "pattern": p, "coeff": c })).collect();
                envelope(meta, &rows)
            }
            Body::Alpha(rows) => {
                let rows: Vec<Value> = rows
                    .iter()
                    .map(|r| {
                        json!({
                            "lambda": r.lambda,
                            "mu": r.mu,
                            "p": r.p,
                            "alpha": r.alpha,
                            "predicted": r.predicted,
                            "match": r.matches,
                        })
                    })
                    .collect();
                envelope(meta, &rows)
            }
            Body::Reports(r) => envelope(meta, r),
        };
        serde_json::to_string(&v).map(|s| s + "\n").map_err(|e| e.to_string())
    }

    fn csv(&self) -> Result<String, String> {
        match &self.body {
            Body::Qqt(c) => csv_text(&["value"], vec![vec![c.to_string()]]),
            Body::Laurent(f) => csv_text(&["exponent", "coeff"], laurent_rows(f)),
            Body::Trace(t) => csv_text(&["exponent", "coeff"], laurent_rows(&t.terms)),
            Body::Count(c) => csv_text(&["count"], vec![vec![c.to_string()]]),
            Body::Branch(t) => csv_text(
                &["lambda", "mu", "rho", "coeff"],
                t.sorted_entries()
                    .into_iter()
                    .map(|(mu, c)| vec![t.lam.to_string(), mu.to_string(), t.rho(mu).to_string(), c.to_string()])
                    .collect(),
            ),
            Body::Gt(rows) => csv_text(
                &["pattern", "coeff"],
                rows.iter().map(|(p, c)| vec![pattern_string(p), c.to_string()]).collect(),
            ),
            Body::Alpha(rows) => csv_text(
                &["lambda", "mu", "p", "alpha", "predicted", "match"],
                rows.iter()
                    .map(|r| {
                        vec![
                            r.lambda.clone(),
                            r.mu.clone(),
                            r.p.to_string(),
                            r.alpha.to_string(),
                            r.predicted.clone(),
                            r.matches.to_string(),
                        ]
                    })
                    .collect(),
            ),
            Body::Reports(reports) => csv_text(
                &["suite", "case", "pass", "detail"],
                reports
                    .iter()
                    .flat_map(|r| {
                        r.cases.iter().map(|c| {
                            vec![
                                r.suite.clone(),
                                c.case.clone(),
                                c.pass.to_string(),
                                c.detail.clone().unwrap_or_default(),
                            ]
                        })
                    })
                    .collect(),
            ),
        }
    }

    fn pretty(&self) -> String {
        match &self.body {
            Body::Qqt(c) => format!("{c}\n"),
            Body::Laurent(f) => format!("{f}\n"),
            Body::Trace(t) => format!("{}\n", t.terms),
            Body::Count(c) => format!("{c}\n"),
            Body::Branch(t) => t
                .sorted_entries()
                .into_iter()
                .map(|(mu, c)| format!("mu=({mu}) rho={}: {c}\n", t.rho(mu)))
                .collect(),
            Body::Gt(rows) => rows.iter().map(|(p, c)| format!("[{}]: {c}\n", pattern_string(p))).collect(),
            Body::Alpha(rows) => rows
                .iter()
                .map(|r| {
                    let mark = if r.matches { "ok" } else { "MISMATCH" };
                    format!("alpha_({})(({}); {}) = {}, predicted {} {mark}\n", r.lambda, r.mu, r.p, r.alpha, r.predicted)
                })
                .collect(),
            Body::Reports(reports) => reports.iter().map(|r| r.to_string()).collect(),
        }
    }
}
