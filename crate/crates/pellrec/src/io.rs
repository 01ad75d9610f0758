//! Input parsing and report rendering.
//!
//! JSON is canonical: keys are sorted (serde_json's default map) and
//! arbitrary-precision integers are decimal strings.

use std::fs;
use std::path::Path;

use pellrec_core::bounds::{AggregateBound, RootCondition, SmithBound, ZeroSum};
use pellrec_core::pell::{FundamentalSolution, SolutionSet};
use pellrec_core::recurrence::{Classification, LinearRecurrence};
use pellrec_core::search::{InfiniteFamily, Match, RemarkReport, SearchResult, SideFilter};
use pellrec_core::BigInt;
use serde_json::{json, Map, Value};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// A rendered command result: JSON value, human text and optionally a table
/// used for CSV.
pub struct Report {
    pub json: Value,
    pub text: String,
    pub table: Option<(Vec<&'static str>, Vec<Vec<String>>)>,
}

impl Report {
    pub fn render(&self, format: Format) -> Result<String, CliError> {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("values serialize");
                s.push('\n');
                Ok(s)
            }
            Format::Text => Ok(self.text.clone()),
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                match &self.table {
                    Some((head, rows)) => {
                        w.write_record(head)?;
                        for r in rows {
                            w.write_record(r)?;
                        }
                    }
                    None => {
                        w.write_record(["key", "value"])?;
                        if let Value::Object(map) = &self.json {
                            for (k, v) in map {
                                let cell = match v {
                                    Value::String(s) => s.clone(),
                                    other => other.to_string(),
                                };
                                w.write_record([k.as_str(), cell.as_str()])?;
                            }
                        }
                    }
                }
                let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
                Ok(String::from_utf8(bytes).expect("csv of utf-8 input"))
            }
        }
    }
}

pub fn big(v: &BigInt) -> Value {
    Value::String(v.to_string())
}

fn bigs(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(big).collect())
}

fn json_int(v: &Value) -> Result<BigInt, CliError> {
    let text = match v {
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.clone(),
        _ => return Err(CliError::Input(format!("expected an integer, got {v}"))),
    };
    text.trim()
        .parse()
        .map_err(|_| CliError::Input(format!("not an integer: {text}")))
}

fn json_ints(v: Option<&Value>, key: &str) -> Result<Vec<BigInt>, CliError> {
    match v {
        Some(Value::Array(items)) => items.iter().map(json_int).collect(),
        _ => Err(CliError::Input(format!("missing array {key:?}"))),
    }
}

/// Textual `order k; coeffs …; init …` (or `k;a..;U..`) or a JSON object
/// with `order`, `coeffs` and `init`. Lines starting with `#` are ignored.
pub fn parse_recurrence(text: &str) -> Result<LinearRecurrence, CliError> {
    let body: String = text
        .lines()
        .filter(|l| !l.trim_start().starts_with('#'))
        .collect::<Vec<_>>()
        .join(" ");
    let body = body.trim();
    if body.starts_with('{') {
        let v: Value = serde_json::from_str(body).map_err(|e| CliError::Input(format!("recurrence JSON: {e}")))?;
        let coeffs = json_ints(v.get("coeffs"), "coeffs")?;
        let init = json_ints(v.get("init"), "init")?;
        if let Some(order) = v.get("order") {
            if order.as_u64() != Some(coeffs.len() as u64) {
                return Err(CliError::Input(format!("order {order} but {} coefficients", coeffs.len())));
            }
        }
        Ok(LinearRecurrence::new(coeffs, init)?)
    } else {
        Ok(body.parse()?)
    }
}

pub fn read_recurrence(path: &Path) -> Result<LinearRecurrence, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::File(path.display().to_string(), e))?;
    parse_recurrence(&text)
}

pub fn recurrence_json(rec: &LinearRecurrence) -> Value {
    json!({
        "order": rec.order(),
        "coeffs": bigs(rec.coeffs()),
        "init": bigs(rec.init()),
    })
}

pub fn fundamental(d: &BigInt, f: &FundamentalSolution) -> Report {
    Report {
        json: json!({ "d": big(d), "x1": big(&f.x1), "y1": big(&f.y1) }),
        text: format!("x² − {d}y² = 1: fundamental solution ({}, {})\n", f.x1, f.y1),
        table: None,
    }
}

pub fn solution_set(set: &SolutionSet, count: usize) -> Report {
    let mut text = format!(
        "x² − {}y² = {}: fundamental ({}, {}), {} class(es)\n",
        set.equation.d(),
        set.equation.t(),
        set.fundamental.x1,
        set.fundamental.y1,
        set.classes.len()
    );
    let mut rows = Vec::new();
    let classes: Vec<Value> = set
        .classes
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let (p, q) = c.recurrence_coeffs();
            let sols = c.generate(count);
            text.push_str(&format!("class {i}: ({}, {})", c.g0, c.h0));
            for (x, y, m) in &sols {
                text.push_str(&format!(" m={m}:({x}, {y})"));
                rows.push(vec![i.to_string(), m.to_string(), x.to_string(), y.to_string()]);
            }
            text.push('\n');
            json!({
                "g0": big(&c.g0),
                "h0": big(&c.h0),
                "g1": big(&c.g1),
                "h1": big(&c.h1),
                "recurrence": [big(&p), big(&q)],
                "solutions": sols.iter().map(|(x, y, m)| json!({"m": m, "x": big(x), "y": big(y)})).collect::<Vec<_>>(),
            })
        })
        .collect();
    Report {
        json: json!({
            "d": big(set.equation.d()),
            "t": big(set.equation.t()),
            "fundamental": {"x1": big(&set.fundamental.x1), "y1": big(&set.fundamental.y1)},
            "search_bound": big(&set.search_bound),
            "classes": classes,
        }),
        text,
        table: Some((vec!["class", "m", "x", "y"], rows)),
    }
}

pub fn classification_json(c: &Classification) -> Value {
    json!({
        "char_poly": c.char_poly.to_string(),
        "simple": c.simple,
        "effective_poly": c.effective_poly.to_string(),
        "effective_order": c.effective_order,
        "roots": c.roots,
        "dropped_roots": c.dropped_roots,
        "degenerate": c.degenerate,
        "degeneracy_order": c.degeneracy_order,
        "roots_of_unity": c.roots_of_unity.iter().map(|(i, n)| json!({"root": i, "order": n})).collect::<Vec<_>>(),
        "has_root_of_unity_root": c.has_root_of_unity_root,
        "independence_bound": c.independence_bound,
        "pairwise_independent": c.pairwise_independent,
        "dependence_witness": c.dependence_witness.map(|(i, j, r, s)| json!({"i": i, "j": j, "r": r, "s": s})),
        "d": big(&c.d),
        "excluded_binary_form": c.excluded_binary_form,
        "quadratic_unit_factor": c.quadratic_unit_factor,
        "theorem_applies": c.theorem_applies,
        "warnings": c.warnings,
    })
}

pub fn classification(rec: &LinearRecurrence, c: &Classification) -> Report {
    let mut text = format!("{rec}\ncharacteristic polynomial {}\n", c.char_poly);
    text.push_str(&format!("roots: {}\n", c.roots.join(", ")));
    let yes = |b: bool| if b { "yes" } else { "no" };
    for (label, v) in [
        ("simple", c.simple),
        ("degenerate", c.degenerate),
        ("root of unity among roots", c.has_root_of_unity_root),
        ("pairwise independent", c.pairwise_independent),
        ("excluded binary form", c.excluded_binary_form),
        ("theorem applies", c.theorem_applies),
    ] {
        text.push_str(&format!("{label}: {}\n", yes(v)));
    }
    for w in &c.warnings {
        text.push_str(&format!("warning: {w}\n"));
    }
    let mut json = classification_json(c);
    json["recurrence"] = recurrence_json(rec);
    Report { json, text, table: None }
}

pub fn terms(rec: &LinearRecurrence, values: &[BigInt]) -> Report {
    let text = values.iter().enumerate().map(|(n, u)| format!("{n} {u}\n")).collect();
    let rows = values.iter().enumerate().map(|(n, u)| vec![n.to_string(), u.to_string()]).collect();
    Report {
        json: json!({ "recurrence": recurrence_json(rec), "terms": bigs(values) }),
        text,
        table: Some((vec!["n", "u"], rows)),
    }
}

fn match_json(m: &Match) -> Value {
    json!({ "n1": m.n1, "n2": m.n2, "v": big(&m.value), "side": m.side.to_string(), "witness": big(&m.witness) })
}

fn family_json(f: &InfiniteFamily) -> Value {
    let mut v = Map::new();
    v.insert("flag".into(), Value::String(f.letter().to_string()));
    v.insert("description".into(), Value::String(f.to_string()));
    match f {
        InfiniteFamily::Periodic { period, example } => {
            v.insert("period".into(), json!(period));
            v.insert("example".into(), match_json(example));
        }
        InfiniteFamily::ZeroPadding { zero_index, side, indices } => {
            v.insert("zero_index".into(), json!(zero_index));
            v.insert("side".into(), json!(side.to_string()));
            v.insert("indices".into(), json!(indices));
        }
        InfiniteFamily::ExcludedBinaryForm { poly } => {
            v.insert("poly".into(), json!(poly.to_string()));
        }
    }
    Value::Object(v)
}

fn census_json(r: &SearchResult) -> Value {
    Value::Object(r.census.iter().map(|(v, n)| (v.to_string(), json!(n))).collect())
}

fn growth_json(r: &SearchResult) -> Value {
    r.growth
        .iter()
        .map(|(b, n)| json!({"bound": b, "matches": n}))
        .collect()
}

fn config_json(r: &SearchResult) -> Value {
    let c = &r.config;
    json!({
        "recurrence": recurrence_json(&c.recurrence),
        "d": big(c.equation.d()),
        "t": big(c.equation.t()),
        "bound": c.bound,
        "sides": match c.sides { SideFilter::X => "X", SideFilter::Y => "Y", SideFilter::Both => "XY" },
        "positive_only": c.positive_only,
        "unordered": c.unordered,
    })
}

pub fn search(r: &SearchResult, flags: &[InfiniteFamily]) -> Report {
    let mut text = format!(
        "{} matches for {} with x² − {}y² = {}, N = {}{}\n",
        r.matches.len(),
        r.config.recurrence,
        r.config.equation.d(),
        r.config.equation.t(),
        r.config.bound,
        if r.config.unordered { " (n₂ ≤ n₁)" } else { " (ordered)" }
    );
    for m in &r.matches {
        let (x, y) = m.solution();
        text.push_str(&format!("U_{} + U_{} = {} ∈ {}  ({x}, {y})\n", m.n1, m.n2, m.value, m.side));
    }
    for (b, n) in &r.growth {
        text.push_str(&format!("growth N′={b}: {n}\n"));
    }
    for f in flags {
        text.push_str(&format!("possible infinite family {f}\n"));
    }
    let rows = r
        .matches
        .iter()
        .map(|m| vec![m.n1.to_string(), m.n2.to_string(), m.value.to_string(), m.side.to_string(), m.witness.to_string()])
        .collect();
    Report {
        json: json!({
            "config": config_json(r),
            "match_count": r.matches.len(),
            "matches": r.matches.iter().map(match_json).collect::<Vec<_>>(),
            "census": census_json(r),
            "growth": growth_json(r),
            "infinite_family": flags.iter().map(family_json).collect::<Vec<_>>(),
        }),
        text,
        table: Some((vec!["n1", "n2", "v", "side", "witness"], rows)),
    }
}

fn smith_json(b: &SmithBound) -> Value {
    json!({
        "A": b.a,
        "s": b.s,
        "D": b.d,
        "log2_bound": b.log2_exact().map_or_else(|| json!(b.log2()), |e| json!(e)),
    })
}

pub fn bound(b: &AggregateBound, classes: Option<usize>) -> Report {
    let per = &b.per_partition;
    let mut json = json!({
        "k": b.k,
        "r": b.r,
        "A": per.a,
        "s": per.s,
        "D": per.d,
        "partition_count": b.partition_count.to_string().parse::<u64>().map_or_else(|_| big(&b.partition_count), |v| json!(v)),
        "log2_per_partition": per.log2_exact().map_or_else(|| json!(per.log2()), |e| json!(e)),
        "log2_bound": b.log2(),
        "per_partition": smith_json(per),
    });
    let mut text = format!(
        "k = {}: {} partitions of {} terms, A = {}, s = {}, D = {}\nper partition 2^{}·{}^{} (log₂ ≈ {:.1})\ntotal log₂ ≈ {:.3}\n",
        b.k,
        b.partition_count,
        b.r,
        per.a,
        per.s,
        per.d,
        per.two_exponent,
        per.d,
        per.d_exponent,
        per.log2(),
        b.log2()
    );
    if let Some(c) = classes {
        let log2 = b.log2() + ((2 * c) as f64).log2();
        json["classes"] = json!(c);
        json["log2_bound_with_classes"] = json!(log2);
        text.push_str(&format!("with {c} class(es) counted on both sides: log₂ ≈ {log2:.3}\n"));
    }
    Report { json, text, table: None }
}

pub fn zero_sums(weights: &[BigInt], last: usize, sums: &[ZeroSum]) -> Report {
    let cond = |z: &ZeroSum| match z.root_condition {
        RootCondition::Holds => "holds",
        RootCondition::Fails => "fails",
    };
    let text = sums
        .iter()
        .map(|z| format!("{:?} root condition {}\n", z.indices, cond(z)))
        .collect();
    let rows = sums
        .iter()
        .map(|z| {
            let idx: Vec<String> = z.indices.iter().map(ToString::to_string).collect();
            vec![idx.join(" "), cond(z).to_string()]
        })
        .collect();
    Report {
        json: json!({
            "weights": bigs(weights),
            "bound": last,
            "count": sums.len(),
            "tuples": sums.iter().map(|z| json!({"indices": z.indices, "root_condition": cond(z)})).collect::<Vec<_>>(),
        }),
        text,
        table: Some((vec!["indices", "root_condition"], rows)),
    }
}

pub fn remark(r: &RemarkReport) -> Report {
    let mut text = format!("scenario {}: PASS\n", r.id);
    for c in &r.checks {
        text.push_str(&format!("  ok  {c}\n"));
    }
    for f in &r.flags {
        text.push_str(&format!("  flag {f}\n"));
    }
    Report {
        json: json!({
            "id": r.id,
            "status": "PASS",
            "checks": r.checks,
            "classification": classification_json(&r.classification),
            "config": config_json(&r.result),
            "match_count": r.result.matches.len(),
            "census": census_json(&r.result),
            "growth": growth_json(&r.result),
            "infinite_family": r.flags.iter().map(family_json).collect::<Vec<_>>(),
        }),
        text,
        table: None,
    }
}
