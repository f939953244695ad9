//! Formatting of every subcommand's payload. All output is assembled in
//! memory and emitted once, newline-terminated.

use std::io::{self, Write};
use std::path::Path;

use kjacobsthal::identities::VerificationReport;
use kjacobsthal::sequences::{self, Family};
use kjacobsthal::{classic, Error, KValue, MatrixValue};
use serde_json::json;

use crate::Format;

pub struct Payload(String);

impl Payload {
    pub fn emit(&self, out: Option<&Path>) -> io::Result<()> {
        match out {
            Some(path) => std::fs::write(path, &self.0),
            None => {
                let mut stdout = io::stdout().lock();
                stdout.write_all(self.0.as_bytes())?;
                stdout.flush()
            }
        }
    }
}

fn lines(mut body: String) -> Payload {
    if !body.ends_with('\n') {
        body.push('\n');
    }
    Payload(body)
}

enum Classic {
    Jc,
    Kc,
    Z,
    Y,
}

fn classic_family(family: &str) -> Option<Classic> {
    match family {
        "Jc" => Some(Classic::Jc),
        "Kc" => Some(Classic::Kc),
        "Z" => Some(Classic::Z),
        "Y" => Some(Classic::Y),
        _ => None,
    }
}

fn classic_value(c: &Classic, n: i64) -> Result<String, Error> {
    let nonneg = |n: i64| {
        u64::try_from(n)
            .map_err(|_| Error::Domain(format!("classic sequences need n >= 0, got {n}")))
    };
    Ok(match c {
        Classic::Jc => classic::jac3_classic(nonneg(n)?).to_string(),
        Classic::Kc => classic::modified_lucas_classic(nonneg(n)?).to_string(),
        Classic::Z => classic::z(n).to_string(),
        Classic::Y => classic::y(n).to_string(),
    })
}

/// Rendered value of one term. `k` is only parsed for the k-families.
pub fn term_value(
    family: &str,
    k: impl FnOnce() -> Result<KValue, Error>,
    n: i64,
) -> Result<String, Error> {
    if let Some(c) = classic_family(family) {
        return classic_value(&c, n);
    }
    let fam: Family = family.parse()?;
    Ok(sequences::term(&k()?, fam, n)?.value.to_string())
}

pub fn table_values(
    family: &str,
    k: impl FnOnce() -> Result<KValue, Error>,
    from: i64,
    to: i64,
) -> Result<Vec<(i64, String)>, Error> {
    if let Some(c) = classic_family(family) {
        return (from..=to)
            .map(|n| Ok((n, classic_value(&c, n)?)))
            .collect();
    }
    let fam: Family = family.parse()?;
    Ok(sequences::terms(&k()?, fam, from, to)?
        .into_iter()
        .map(|t| (t.index, t.value.to_string()))
        .collect())
}

pub fn term(family: &str, k: Option<&str>, n: i64, value: &str, format: Format) -> Payload {
    match format {
        Format::Pretty => lines(value.to_string()),
        Format::Json => {
            let k = if classic_family(family).is_some() {
                None
            } else {
                k
            };
            let mut obj = json!({ "family": family, "n": n, "value": value });
            if let Some(k) = k {
                obj["k"] = json!(k);
            }
            lines(obj.to_string())
        }
        Format::Csv => lines(format!("n,value\n{n},{value}")),
    }
}

pub fn matrix(m: &MatrixValue, format: Format) -> Payload {
    match format {
        Format::Pretty => lines(m.pretty_grid()),
        Format::Json => lines(json!(m.rendered()).to_string()),
        Format::Csv => lines(
            m.rendered()
                .iter()
                .map(|row| row.join(","))
                .collect::<Vec<_>>()
                .join("\n"),
        ),
    }
}

pub fn table(rows: &[(i64, String)], format: Format) -> Payload {
    match format {
        Format::Pretty => lines(
            rows.iter()
                .map(|(n, v)| format!("{n}\t{v}"))
                .collect::<Vec<_>>()
                .join("\n"),
        ),
        Format::Json => lines(json!(rows).to_string()),
        Format::Csv => {
            let mut out = String::from("n,value");
            for (n, v) in rows {
                out.push_str(&format!("\n{n},{v}"));
            }
            lines(out)
        }
    }
}

pub fn reports(reports: &[VerificationReport], format: Format) -> Payload {
    match format {
        Format::Pretty => {
            let mut out = Vec::new();
            for r in reports {
                let tag = if r.passed() { "PASS" } else { "FAIL" };
                out.push(format!(
                    "{tag} {} (checks: {})",
                    r.identity, r.checks_performed
                ));
                if let Some(cx) = &r.counterexample {
                    let m = cx.m.map(|m| format!(", m = {m}")).unwrap_or_default();
                    out.push(format!("  at k = {}{m}, n = {}", cx.k, cx.n));
                    out.push(format!("  lhs: {}", cx.lhs));
                    out.push(format!("  rhs: {}", cx.rhs));
                }
            }
            let passed = reports.iter().filter(|r| r.passed()).count();
            out.push(format!("{passed}/{} identities passed", reports.len()));
            lines(out.join("\n"))
        }
        Format::Json => lines(serde_json::to_string(reports).expect("reports serialize")),
        Format::Csv => {
            let mut out = String::from("identity,status,checks");
            for r in reports {
                let status = if r.passed() { "pass" } else { "fail" };
                out.push_str(&format!("\n{},{status},{}", r.identity, r.checks_performed));
            }
            lines(out)
        }
    }
}
