use std::fmt::Write;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Structured,
}

/// Outcome of one command. `details` holds verb-specific fields in output order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Report {
    pub ring: String,
    pub input: String,
    pub result: String,
    pub witness: Option<String>,
    pub details: Vec<(String, String)>,
}

impl Report {
    pub fn new(ring: impl Into<String>, input: impl Into<String>, result: impl ToString) -> Self {
        Report {
            ring: ring.into(),
            input: input.into(),
            result: result.to_string(),
            witness: None,
            details: Vec::new(),
        }
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.details.push((key.to_string(), value.to_string()));
        self
    }

    pub fn detail(&self, key: &str) -> Option<&str> {
        self.details
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    /// `field: value` lines; the four leading fields are always present.
    pub fn structured(&self) -> String {
        let mut out = String::new();
        let witness = self.witness.as_deref().unwrap_or("none");
        for (k, v) in [
            ("ring", self.ring.as_str()),
            ("input", self.input.as_str()),
            ("result", self.result.as_str()),
            ("witness", witness),
        ] {
            writeln!(out, "{k}: {v}").expect("write to string");
        }
        for (k, v) in &self.details {
            writeln!(out, "{k}: {v}").expect("write to string");
        }
        out
    }

    pub fn text(&self) -> String {
        let mut out = if self.input.is_empty() {
            format!("[{}] {}\n", self.ring, self.result)
        } else {
            format!("[{}] {} => {}\n", self.ring, self.input, self.result)
        };
        if let Some(w) = &self.witness {
            writeln!(out, "  nonzero at {w}").expect("write to string");
        }
        for (k, v) in &self.details {
            writeln!(out, "  {k}: {v}").expect("write to string");
        }
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text(),
            Format::Structured => self.structured(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn structured_fields_are_stable() {
        let r = Report::new("coxeter", "x1", false).with("canonical", "x1");
        assert_eq!(
            r.structured(),
            "ring: coxeter\ninput: x1\nresult: false\nwitness: none\ncanonical: x1\n"
        );
        assert_eq!(r.detail("canonical"), Some("x1"));
        assert_eq!(r.text(), "[coxeter] x1 => false\n  canonical: x1\n");
    }
}
