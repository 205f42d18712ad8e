//! Reports and their two renderings.

use std::time::Duration;

/// Verdict of one invocation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    Unknown,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Pass => 0,
            Outcome::Fail => 1,
            Outcome::Unknown => 2,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::Unknown => "unknown",
        }
    }
}

/// Exit code for malformed input or invalid options.
pub const INPUT_ERROR: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Structured,
}

/// Search bounds, printed in every report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub arity: usize,
    pub size: usize,
    pub depth: usize,
    pub model_bound: usize,
    pub word_len: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { arity: 4, size: 3, depth: 5, model_bound: 4, word_len: 8 }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub verb: String,
    pub inputs: Vec<String>,
    pub bounds: Bounds,
    pub seed: u64,
    pub fields: Vec<(String, String)>,
    pub witness: Vec<(String, String)>,
    pub outcome: Outcome,
    /// The exhausted bound behind an `unknown` verdict.
    pub bound: Option<String>,
    /// Wall time; shown in text mode only.
    pub elapsed: Option<Duration>,
}

impl Report {
    pub fn new(verb: &str, inputs: Vec<String>, bounds: Bounds, seed: u64) -> Self {
        Report {
            verb: verb.to_string(),
            inputs,
            bounds,
            seed,
            fields: Vec::new(),
            witness: Vec::new(),
            outcome: Outcome::Pass,
            bound: None,
            elapsed: None,
        }
    }

    pub fn field(&mut self, key: impl Into<String>, value: impl ToString) -> &mut Self {
        self.fields.push((key.into(), value.to_string()));
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.fields.iter().chain(&self.witness).find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    /// Records a failure. The first witness entry is mandatory.
    pub fn fail(&mut self, key: impl Into<String>, value: impl ToString) -> &mut Self {
        self.outcome = Outcome::Fail;
        self.witness.push((key.into(), value.to_string()));
        self
    }

    pub fn witness(&mut self, key: impl Into<String>, value: impl ToString) -> &mut Self {
        self.witness.push((key.into(), value.to_string()));
        self
    }

    pub fn unknown(&mut self, bound: impl Into<String>) -> &mut Self {
        self.outcome = Outcome::Unknown;
        self.bound = Some(bound.into());
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.render_text(),
            Format::Structured => self.render_structured(),
        }
    }

    fn bound_pairs(&self) -> [(&'static str, usize); 5] {
        let b = self.bounds;
        [
            ("arity", b.arity),
            ("size", b.size),
            ("depth", b.depth),
            ("model_bound", b.model_bound),
            ("word_len", b.word_len),
        ]
    }

    /// `key: value` lines in a fixed order, one line per value, ending
    /// with `verdict:`.
    pub fn render_structured(&self) -> String {
        let mut out = String::new();
        let mut line = |k: &str, v: &str| {
            out.push_str(k);
            out.push_str(": ");
            out.push_str(&one_line(v));
            out.push('\n');
        };
        line("verb", &self.verb);
        line("inputs", &self.inputs.join(" "));
        for (k, v) in self.bound_pairs() {
            line(k, &v.to_string());
        }
        line("seed", &self.seed.to_string());
        for (k, v) in &self.fields {
            line(k, v);
        }
        for (k, v) in &self.witness {
            line(k, v);
        }
        if let Some(b) = &self.bound {
            line("bound", b);
        }
        line("verdict", self.outcome.as_str());
        out
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("catcom {}", self.verb);
        for i in &self.inputs {
            out.push(' ');
            out.push_str(i);
        }
        out.push('\n');
        let bounds: Vec<String> = self.bound_pairs().iter().map(|(k, v)| format!("{k}={v}")).collect();
        out.push_str(&format!("bounds: {} seed={}\n", bounds.join(" "), self.seed));
        let width = self.fields.iter().chain(&self.witness).map(|(k, _)| k.len()).max().unwrap_or(0);
        let block = |out: &mut String, entries: &[(String, String)]| {
            for (k, v) in entries {
                let mut lines = v.lines();
                out.push_str(&format!("  {k:width$}  {}\n", lines.next().unwrap_or("")));
                for rest in lines {
                    out.push_str(&format!("  {:width$}  {rest}\n", ""));
                }
            }
        };
        block(&mut out, &self.fields);
        if !self.witness.is_empty() {
            out.push_str("witness:\n");
            block(&mut out, &self.witness);
        }
        if let Some(b) = &self.bound {
            out.push_str(&format!("bound: {b}\n"));
        }
        if let Some(t) = self.elapsed {
            out.push_str(&format!("time: {} ms\n", t.as_millis()));
        }
        out.push_str(&format!("verdict: {}\n", self.outcome.as_str()));
        out
    }
}

/// Joins a multi-line value into one line. The file grammars ignore
/// whitespace, so rendered files stay parseable.
pub fn one_line(v: &str) -> String {
    v.split_whitespace().collect::<Vec<_>>().join(" ")
}

/// Splits a structured report back into its `(key, value)` lines.
pub fn parse_structured(text: &str) -> Vec<(String, String)> {
    text.lines().filter_map(|l| l.split_once(": ").map(|(k, v)| (k.to_string(), v.to_string()))).collect()
}
