//! Text, JSON and LaTeX output.

use serde_json::{json, Value};

use qleft_core::{Mode, NcPoly, Report, Rule};

/// Version of the JSON layout; bump on any incompatible change.
pub const SCHEMA: u32 = 1;

#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

fn mode_name(mode: Option<Mode>) -> Value {
    mode.map_or(Value::Null, |m| Value::from(m.name()))
}

pub fn rules(rules: &[&Rule], format: Format) -> String {
    match format {
        Format::Text => rules
            .iter()
            .map(|r| match r.index() {
                Some(i) => format!("I = {i}: {r}\n"),
                None => format!("{r}\n"),
            })
            .collect(),
        Format::Json => {
            let list: Vec<Value> = rules
                .iter()
                .map(|r| {
                    json!({
                        "I": r.index().map(|i| i.entries().to_vec()),
                        "lhs": NcPoly::word(r.lhs().clone()).to_string(),
                        "rhs": r.rhs().to_string(),
                    })
                })
                .collect();
            pretty(&Value::Array(list))
        }
        Format::Latex => {
            let mut out = String::from("\\begin{align*}\n");
            let last = rules.len().saturating_sub(1);
            for (k, r) in rules.iter().enumerate() {
                let end = if k == last { "" } else { " \\\\" };
                out.push_str(&format!("{} &= {}{end}\n", r.lhs().to_latex(), r.rhs().to_latex()));
            }
            out.push_str("\\end{align*}\n");
            out
        }
    }
}

/// A single polynomial result of `reduce` or `eval`.
pub fn poly(p: &NcPoly, input: &str, n: usize, mode: Option<Mode>, format: Format) -> String {
    match format {
        Format::Text => format!("{p}\n"),
        Format::Latex => format!("{}\n", p.to_latex()),
        Format::Json => pretty(&json!({
            "schema": SCHEMA,
            "n": n,
            "mode": mode_name(mode),
            "input": input,
            "result": p.to_string(),
        })),
    }
}

pub fn report_json(r: &Report) -> Value {
    let items: Vec<Value> = r
        .items
        .iter()
        .map(|i| {
            json!({
                "input": i.input,
                "expected": i.expected,
                "got": i.got,
                "passed": i.passed,
            })
        })
        .collect();
    json!({
        "schema": SCHEMA,
        "check": r.check,
        "n": r.n,
        "mode": mode_name(r.mode),
        "status": r.status(),
        "summary": r.summary,
        "items": items,
    })
}

fn latex_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '&' | '%' | '$' | '#' | '_' | '{' | '}' => {
                out.push('\\');
                out.push(c);
            }
            '^' => out.push_str("\\^{}"),
            '~' => out.push_str("\\~{}"),
            '\\' => out.push_str("\\textbackslash{}"),
            c => out.push(c),
        }
    }
    out
}

fn report_latex(r: &Report) -> String {
    let mode = r.mode.map_or("-", Mode::name);
    let mut out = format!(
        "% {} (n = {}, mode = {}): {}\n\\begin{{tabular}}{{llll}}\ninput & expected & got & status \\\\\n\\hline\n",
        r.check,
        r.n,
        mode,
        r.status()
    );
    for i in &r.items {
        out.push_str(&format!(
            "\\texttt{{{}}} & \\texttt{{{}}} & \\texttt{{{}}} & {} \\\\\n",
            latex_escape(&i.input),
            latex_escape(&i.expected),
            latex_escape(&i.got),
            if i.passed { "pass" } else { "fail" }
        ));
    }
    out.push_str("\\end{tabular}\n");
    out
}

/// Renders the reports of one `verify` invocation. `all` is true when the
/// reports came from `verify all`.
pub fn reports(reports: &[Report], all: bool, format: Format) -> String {
    let passed = reports.iter().all(Report::passed);
    let status = if passed { "pass" } else { "fail" };
    match format {
        Format::Json if all => {
            let first = &reports[0];
            pretty(&json!({
                "schema": SCHEMA,
                "check": "all",
                "n": first.n,
                "status": status,
                "reports": reports.iter().map(report_json).collect::<Vec<_>>(),
            }))
        }
        Format::Json => pretty(&report_json(&reports[0])),
        Format::Text => {
            let mut out: String = reports.iter().map(|r| r.to_string()).collect();
            if all {
                out.push_str(&format!("all: {status}\n"));
            }
            out
        }
        Format::Latex => reports.iter().map(report_latex).collect::<Vec<_>>().join("\n"),
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}
