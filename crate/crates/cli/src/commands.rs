use serde_json::{json, Map, Value};

use nearcentral::characters::character_table;
use nearcentral::genchar::{connection_coefficient, genchar_by, genchar_closed, genchar_strahov_with, Method};
use nearcentral::oracle::verify::verify;
use nearcentral::oracle::{connection_by_product, enumerate_star_factorizations, Guard, Permutation};
use nearcentral::partitions::{enumerate_marked_partitions, enumerate_partitions};
use nearcentral::starcount::{star_count, star_count_by_cycle_count, star_count_class, star_count_closed};
use nearcentral::tableaux::{dimension, enumerate_syt, enumerate_syt_marked, StandardTableau};
use nearcentral::{Error, MarkedPartition, Partition, Result};

use crate::args::{
    Command, ConnectionMethod, CountMethod, Oracle, Starfact, TableFormat, TableauFormat,
};

/// What a command produced.
pub enum Outcome {
    /// Fields of the JSON document (`status` is added by the caller).
    Json(Map<String, Value>),
    /// A JSON document describing a failed check: printed, then exit 1.
    Failed(Map<String, Value>),
    /// Non-JSON text requested explicitly with `--format`.
    Text(String),
}

fn object(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        _ => unreachable!("payloads are objects"),
    }
}

fn same_n(what: &str, p: &Partition, n: usize) -> Result<()> {
    if p.n() != n {
        return Err(Error::InvalidArgument(format!("{what} = ({p}) is not a partition of {n}")));
    }
    Ok(())
}

pub fn run(command: &Command, guard: &Guard) -> Result<Outcome> {
    match command {
        Command::Partitions { n, marked } => Ok(Outcome::Json(partitions(*n, *marked)?)),
        Command::Tableaux { shape, mark, format } => tableaux(shape, *mark, *format),
        Command::Chartable { n, format } => Ok(chartable(*n, *format)),
        Command::Genchar {
            n,
            mu,
            j,
            lambda,
            i,
            method,
        } => {
            same_n("mu", mu, *n)?;
            same_n("lambda", lambda, *n)?;
            let (value, used) = match method {
                Some(m) => (genchar_by(*m, mu, *j, lambda, *i, guard)?, *m),
                None => match genchar_closed(mu, *j, lambda, *i) {
                    Err(Error::UnsupportedPattern(_)) => {
                        (genchar_strahov_with(mu, *j, lambda, *i, guard)?, Method::Strahov)
                    }
                    other => (other?, Method::Table),
                },
            };
            Ok(Outcome::Json(object(json!({
                "n": n,
                "mu": mu.to_string(),
                "j": j,
                "lambda": lambda.to_string(),
                "i": i,
                "value": value.to_string(),
                "method": used.to_string(),
            }))))
        }
        Command::Connection { a, b, target, method } => {
            let value = match method {
                ConnectionMethod::Characters => connection_coefficient(a, b, target)?,
                ConnectionMethod::Oracle => connection_by_product(a, b, target, guard)?,
            };
            let method = match method {
                ConnectionMethod::Characters => "characters",
                ConnectionMethod::Oracle => "oracle",
            };
            Ok(Outcome::Json(object(json!({
                "n": a.n(),
                "a": a.to_string(),
                "b": b.to_string(),
                "target": target.to_string(),
                "coefficient": value.to_string(),
                "method": method,
            }))))
        }
        Command::Starfact { command } => starfact(command, guard).map(Outcome::Json),
        Command::Oracle {
            command: Oracle::Verify { max_n },
        } => oracle_verify(*max_n, guard),
    }
}

fn partitions(n: usize, marked: bool) -> Result<Map<String, Value>> {
    let entries: Vec<Value> = if marked {
        enumerate_marked_partitions(n)
            .iter()
            .map(|m| {
                json!({
                    "marked": m.to_string(),
                    "class_size": m.class_size().to_string(),
                    "content": m.content().to_string(),
                })
            })
            .collect()
    } else {
        enumerate_partitions(n)
            .iter()
            .map(|p| {
                json!({
                    "partition": p.to_string(),
                    "class_size": p.class_size().to_string(),
                    "dimension": dimension(p).to_string(),
                })
            })
            .collect()
    };
    Ok(object(json!({
        "n": n,
        "marked": marked,
        "count": entries.len().to_string(),
        "partitions": entries,
    })))
}

fn tableaux(shape: &Partition, mark: Option<usize>, format: TableauFormat) -> Result<Outcome> {
    let list: Vec<StandardTableau> = match mark {
        Some(i) => enumerate_syt_marked(shape, i)?,
        None => enumerate_syt(shape),
    };
    if format == TableauFormat::Text {
        let blocks: Vec<String> = list.iter().map(|t| t.to_string()).collect();
        return Ok(Outcome::Text(blocks.join("\n\n") + "\n"));
    }
    let entries: Vec<Value> = list
        .iter()
        .map(|t| json!({ "rows": t.rows(), "contents": t.content_vector() }))
        .collect();
    Ok(Outcome::Json(object(json!({
        "shape": shape.to_string(),
        "mark": mark,
        "count": entries.len().to_string(),
        "tableaux": entries,
    }))))
}

fn chartable(n: usize, format: TableFormat) -> Outcome {
    let (labels, rows) = character_table(n);
    let names: Vec<String> = labels.iter().map(|p| p.to_string()).collect();
    match format {
        TableFormat::Csv => {
            let quote = |s: &str| format!("\"{s}\"");
            let mut out = String::from("lambda");
            for name in &names {
                out.push(',');
                out.push_str(&quote(name));
            }
            out.push('\n');
            for (name, row) in names.iter().zip(&rows) {
                out.push_str(&quote(name));
                for v in row {
                    out.push(',');
                    out.push_str(&v.to_string());
                }
                out.push('\n');
            }
            Outcome::Text(out)
        }
        TableFormat::Json => {
            let values: Vec<Vec<String>> = rows
                .iter()
                .map(|row| row.iter().map(|v| v.to_string()).collect())
                .collect();
            Outcome::Json(object(json!({
                "n": n,
                "partitions": names,
                "values": values,
            })))
        }
    }
}

fn starfact(command: &Starfact, guard: &Guard) -> Result<Map<String, Value>> {
    let (count, n, r, method, extra) = match command {
        Starfact::Count { lambda, i, r, method } => {
            let marked = MarkedPartition::new(lambda.clone(), *i)?;
            let (count, name) = match method {
                CountMethod::Characters => (star_count(lambda, *i, *r)?, "characters"),
                CountMethod::Enumerate => {
                    guard.check_n("star factorization enumeration", marked.n())?;
                    let pi = Permutation::representative(&marked);
                    (enumerate_star_factorizations(&pi, *r, guard)?.into(), "enumerate")
                }
            };
            (count, marked.n(), *r, name, json!({ "class": marked.to_string() }))
        }
        Starfact::Class { lambda, r } => (
            star_count_class(lambda, *r)?,
            lambda.n(),
            *r,
            "characters",
            json!({ "lambda": lambda.to_string() }),
        ),
        Starfact::Cycles { n, k, r } => (
            star_count_by_cycle_count(*n, *k, *r)?,
            *n,
            *r,
            "content-polynomial",
            json!({ "k": k }),
        ),
        Starfact::Closed { case, n, r } => (
            star_count_closed(*case, *n, *r)?,
            *n,
            *r,
            "series",
            json!({ "case": case.to_string(), "class": case.marked(*n).to_string() }),
        ),
    };
    let mut out = object(extra);
    out.insert("count".into(), Value::String(count.to_string()));
    out.insert("n".into(), json!(n));
    out.insert("r".into(), json!(r));
    out.insert("method".into(), json!(method));
    Ok(out)
}

fn oracle_verify(max_n: usize, guard: &Guard) -> Result<Outcome> {
    let report = verify(max_n, guard)?;
    let checks: Map<String, Value> = report
        .checks
        .iter()
        .map(|(name, count)| (name.to_string(), Value::String(count.to_string())))
        .collect();
    let mut out = object(json!({
        "max_n": report.max_n,
        "checks": checks,
        "cases": report.total_cases().to_string(),
        "passed": report.passed(),
    }));
    match &report.mismatch {
        None => Ok(Outcome::Json(out)),
        Some(m) => {
            eprintln!("first failing identity: {m}");
            out.insert(
                "mismatch".into(),
                json!({ "identity": m.identity, "lhs": m.lhs, "rhs": m.rhs }),
            );
            Ok(Outcome::Failed(out))
        }
    }
}
