//! One envelope, three renderings.  Every command wraps its result in an
//! `Envelope` and the renderers below turn it into text, JSON, or CSV with
//! fixed field orders, so identical invocations are byte-identical.

use serde::Serialize;

use crate::designer::{CodeDesign, HermitianRow};
use crate::verify::CheckReport;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Meta {
    pub tool: String,
    pub version: String,
    pub m: Option<i64>,
    pub r: Option<i64>,
    pub q: Option<i64>,
}

impl Meta {
    pub fn new(m: Option<i64>, r: Option<i64>, q: Option<i64>) -> Self {
        Meta {
            tool: "kummer-codes".to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            m,
            r,
            q,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyBlock {
    pub label: String,
    pub places: Vec<String>,
    pub tuples: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Payload {
    Gaps {
        place: String,
        gaps: Vec<i64>,
    },
    Gamma {
        flavor: String,
        count: usize,
        pairs: Vec<(i64, i64)>,
    },
    PureCheck {
        places: Vec<String>,
        entries: Vec<i64>,
        mode: String,
        pure_gap: bool,
    },
    PureEnumerate {
        places: Vec<String>,
        bound: i64,
        mode: String,
        tuples: Vec<Vec<i64>>,
    },
    PureFamilies {
        u: i64,
        families: Vec<FamilyBlock>,
    },
    Design {
        #[serde(flatten)]
        design: CodeDesign,
        box_low: Vec<i64>,
        box_high: Vec<i64>,
    },
    HermitianTable {
        q: i64,
        rows: Vec<HermitianRow>,
    },
    Verify {
        max_genus: i64,
        seed: u64,
        passed: bool,
        checks: Vec<CheckReport>,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Envelope {
    pub meta: Meta,
    pub command: String,
    pub payload: Payload,
}

impl Envelope {
    pub fn new(command: &str, meta: Meta, payload: Payload) -> Self {
        Envelope {
            meta,
            command: command.to_string(),
            payload,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

pub fn render(envelope: &Envelope, format: Format) -> String {
    match format {
        Format::Text => render_text(envelope),
        Format::Json => {
            let mut s = serde_json::to_string(envelope).expect("serializable");
            s.push('\n');
            s
        }
        Format::Csv => render_csv(envelope),
    }
}

fn join_i64(v: &[i64], sep: &str) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

fn render_text(envelope: &Envelope) -> String {
    let mut out = String::new();
    match &envelope.payload {
        Payload::Gaps { gaps, .. } => {
            out.push_str(&join_i64(gaps, " "));
            out.push('\n');
        }
        Payload::Gamma { count, pairs, .. } => {
            for &(a, b) in pairs {
                out.push_str(&format!("{a} {b}\n"));
            }
            out.push_str(&format!("count: {count}\n"));
        }
        Payload::PureCheck { pure_gap, .. } => {
            out.push_str(&format!("pure-gap: {pure_gap}\n"));
        }
        Payload::PureEnumerate { tuples, .. } => {
            for t in tuples {
                out.push_str(&join_i64(t, " "));
                out.push('\n');
            }
        }
        Payload::PureFamilies { families, .. } => {
            for f in families {
                out.push_str(&format!("[{}] places={}\n", f.label, f.places.join(",")));
                for t in &f.tuples {
                    out.push_str(&join_i64(t, " "));
                    out.push('\n');
                }
            }
        }
        Payload::Design {
            design,
            box_low,
            box_high,
        } => {
            out.push_str(&format!(
                "n={} deg_g={} k={} d_bound={} delta_bound={} s={} with_infty={}\n",
                design.n,
                design.deg_g,
                design.k,
                design.d_bound,
                design.delta_bound,
                design.s,
                design.with_infty
            ));
            out.push_str(&format!(
                "box: [{}] .. [{}]\n",
                join_i64(box_low, ","),
                join_i64(box_high, ",")
            ));
        }
        Payload::HermitianTable { rows, .. } => {
            out.push_str("q_sq s n k d_bound\n");
            for row in rows {
                out.push_str(&format!(
                    "{} {} {} {} {}\n",
                    row.q_sq, row.s, row.n, row.k, row.d_bound
                ));
            }
        }
        Payload::Verify { passed, checks, .. } => {
            for c in checks {
                if c.passed() {
                    out.push_str(&format!("{}: ok (cases={})\n", c.name, c.cases));
                } else {
                    out.push_str(&format!(
                        "{}: FAILED ({} of {} cases)\n",
                        c.name,
                        c.failures.len(),
                        c.cases
                    ));
                    for w in c.failures.iter().take(10) {
                        out.push_str(&format!("  witness: {w}\n"));
                    }
                    if c.failures.len() > 10 {
                        out.push_str(&format!("  ... and {} more\n", c.failures.len() - 10));
                    }
                }
            }
            if *passed {
                out.push_str("all checks passed\n");
            } else {
                out.push_str("verification failed\n");
            }
        }
    }
    out
}

fn csv_cell(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn render_csv(envelope: &Envelope) -> String {
    let mut out = String::new();
    match &envelope.payload {
        Payload::Gaps { gaps, .. } => {
            out.push_str("gap\n");
            for v in gaps {
                out.push_str(&format!("{v}\n"));
            }
        }
        Payload::Gamma { pairs, .. } => {
            out.push_str("a,b\n");
            for &(a, b) in pairs {
                out.push_str(&format!("{a},{b}\n"));
            }
        }
        Payload::PureCheck {
            places,
            entries,
            pure_gap,
            ..
        } => {
            out.push_str("places,entries,pure_gap\n");
            out.push_str(&format!(
                "{},{},{pure_gap}\n",
                csv_cell(&places.join(" ")),
                csv_cell(&join_i64(entries, " "))
            ));
        }
        Payload::PureEnumerate { tuples, .. } => {
            out.push_str("entries\n");
            for t in tuples {
                out.push_str(&format!("{}\n", csv_cell(&join_i64(t, " "))));
            }
        }
        Payload::PureFamilies { families, .. } => {
            out.push_str("family,places,entries\n");
            for f in families {
                for t in &f.tuples {
                    out.push_str(&format!(
                        "{},{},{}\n",
                        csv_cell(&f.label),
                        csv_cell(&f.places.join(" ")),
                        csv_cell(&join_i64(t, " "))
                    ));
                }
            }
        }
        Payload::Design { design, .. } => {
            out.push_str("n,deg_g,k,d_bound,delta_bound,s,with_infty\n");
            out.push_str(&format!(
                "{},{},{},{},{},{},{}\n",
                design.n,
                design.deg_g,
                design.k,
                design.d_bound,
                design.delta_bound,
                design.s,
                design.with_infty
            ));
        }
        Payload::HermitianTable { rows, .. } => {
            out.push_str("q_sq,s,n,k,d_bound\n");
            for row in rows {
                out.push_str(&format!(
                    "{},{},{},{},{}\n",
                    row.q_sq, row.s, row.n, row.k, row.d_bound
                ));
            }
        }
        Payload::Verify { checks, .. } => {
            out.push_str("check,cases,failures\n");
            for c in checks {
                out.push_str(&format!(
                    "{},{},{}\n",
                    csv_cell(c.name),
                    c.cases,
                    csv_cell(&c.failures.join("; "))
                ));
            }
        }
    }
    out
}
