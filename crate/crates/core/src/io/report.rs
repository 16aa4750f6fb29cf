//! Run reports: `key: value` lines, verdict first, optionally followed by a
//! JSON block between `--- json` and `---`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lists::{Colour, Colouring};

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub verdict: String,
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub method: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub cited: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub colouring: Option<Colouring>,
    /// Further `key: value` pairs in emission order.
    #[serde(default)]
    pub fields: Vec<(String, String)>,
    /// Audit items as `(name, outcome)`.
    #[serde(default)]
    pub checks: Vec<(String, String)>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub elapsed_ms: Option<f64>,
}

impl RunReport {
    pub fn new(command: impl Into<String>, verdict: impl Into<String>) -> Self {
        RunReport {
            command: command.into(),
            verdict: verdict.into(),
            ..Default::default()
        }
    }

    pub fn field(&mut self, key: impl Into<String>, value: impl ToString) -> &mut Self {
        self.fields.push((key.into(), value.to_string()));
        self
    }

    pub fn check(&mut self, name: impl Into<String>, outcome: impl Into<String>) -> &mut Self {
        self.checks.push((name.into(), outcome.into()));
        self
    }

    /// The line form. Values never contain newlines.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut line = |k: &str, v: &str| {
            out.push_str(k);
            out.push_str(": ");
            out.push_str(&v.replace('\n', " "));
            out.push('\n');
        };
        line("verdict", &self.verdict);
        line("command", &self.command);
        if let Some(m) = &self.method {
            line("method", m);
        }
        if let Some(c) = &self.cited {
            line("cited", c);
        }
        if let Some(c) = &self.colouring {
            let cs: Vec<String> = c.0.iter().map(|x| x.to_string()).collect();
            line("colouring", &cs.join(" "));
        }
        for (k, v) in &self.fields {
            line(k, v);
        }
        for (k, v) in &self.checks {
            line(&format!("check {k}"), v);
        }
        if let Some(t) = self.elapsed_ms {
            line("elapsed_ms", &format!("{t:.3}"));
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Line form followed by the JSON block.
    pub fn to_text_with_json(&self) -> String {
        format!("{}--- json\n{}\n---\n", self.to_text(), self.to_json())
    }

    /// Reads a report back. The JSON block wins when present; otherwise
    /// the lines are interpreted.
    pub fn parse(text: &str) -> Result<RunReport> {
        if let Some(start) = text.find("--- json\n") {
            let body = &text[start + 9..];
            let end = body.rfind("\n---").unwrap_or(body.len());
            return serde_json::from_str(&body[..end]).map_err(|e| Error::Parse {
                line: text[..start].lines().count() + 1 + e.line(),
                msg: e.to_string(),
            });
        }
        let mut r = RunReport::default();
        let mut seen_verdict = false;
        for (i, raw) in text.lines().enumerate() {
            if raw.trim().is_empty() {
                continue;
            }
            let (k, v) = raw.split_once(": ").ok_or_else(|| Error::Parse {
                line: i + 1,
                msg: format!("expected `key: value`, found {raw:?}"),
            })?;
            match k {
                "verdict" => {
                    r.verdict = v.to_string();
                    seen_verdict = true;
                }
                "command" => r.command = v.to_string(),
                "method" => r.method = Some(v.to_string()),
                "cited" => r.cited = Some(v.to_string()),
                "colouring" => r.colouring = Some(parse_colouring(v).map_err(|e| at(e, i + 1))?),
                "elapsed_ms" => {
                    r.elapsed_ms = Some(v.parse().map_err(|_| Error::Parse {
                        line: i + 1,
                        msg: format!("bad time {v:?}"),
                    })?)
                }
                _ => match k.strip_prefix("check ") {
                    Some(name) => r.checks.push((name.to_string(), v.to_string())),
                    None => r.fields.push((k.to_string(), v.to_string())),
                },
            }
        }
        if !seen_verdict {
            return Err(Error::Parse {
                line: 1,
                msg: "report has no verdict".into(),
            });
        }
        Ok(r)
    }
}

fn at(e: Error, line: usize) -> Error {
    match e {
        Error::Parse { msg, .. } => Error::Parse { line, msg },
        other => other,
    }
}

/// Whitespace-separated colours.
pub fn parse_colouring(text: &str) -> Result<Colouring> {
    text.split_whitespace()
        .map(|t| {
            t.parse::<Colour>().map_err(|_| Error::Parse {
                line: 1,
                msg: format!("bad colour {t:?}"),
            })
        })
        .collect::<Result<Vec<_>>>()
        .map(Colouring)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> RunReport {
        let mut r = RunReport::new("solve", "colourable");
        r.method = Some("exact".into());
        r.colouring = Some(Colouring(vec![1, 2, 1]));
        r.field("nodes", 4).field("n", 3);
        r.check("girth", "pass");
        r
    }

    #[test]
    fn verdict_comes_first() {
        assert!(sample().to_text().starts_with("verdict: colourable\n"));
    }

    #[test]
    fn text_and_json_round_trip() {
        let r = sample();
        assert_eq!(RunReport::parse(&r.to_text()).unwrap(), r);
        assert_eq!(RunReport::parse(&r.to_text_with_json()).unwrap(), r);
    }

    #[test]
    fn missing_verdict_is_rejected() {
        assert!(RunReport::parse("command: solve\n").is_err());
        assert!(RunReport::parse("verdict colourable\n").is_err());
    }
}
