//! Rendering of analysis results in the two supported styles: a rounded
//! human-readable listing, and full-precision `key=value` records for
//! machine consumption.

use clap::ValueEnum;

/// Output style selected with `--format`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Rounded values, one `name: value` line per statistic.
    Table,
    /// Full-precision `name=value` lines, one blank-separated record per
    /// analysis. Values survive a parse/re-emit cycle byte-identically.
    Structured,
}

/// One field value; the variant decides how each format prints it.
pub enum Value {
    Float(f64),
    Uint(u64),
    Bool(bool),
    Text(String),
}

impl Value {
    /// Full-precision form. `f64` uses `Display`, which emits the shortest
    /// decimal string that parses back to the identical bits.
    fn structured(&self) -> String {
        match self {
            Value::Float(v) => format!("{v}"),
            Value::Uint(v) => format!("{v}"),
            Value::Bool(v) => format!("{v}"),
            Value::Text(v) => v.clone(),
        }
    }

    /// Rounded form for reading.
    fn table(&self) -> String {
        match self {
            Value::Float(v) => sig5(*v),
            other => other.structured(),
        }
    }
}

/// One analysis result: ordered named fields plus free-form notes that only
/// the human-readable format shows.
pub struct Record {
    fields: Vec<(String, Value)>,
    notes: Vec<String>,
}

impl Record {
    pub fn new() -> Self {
        Record { fields: Vec::new(), notes: Vec::new() }
    }

    pub fn float(mut self, name: &str, value: f64) -> Self {
        self.fields.push((name.to_owned(), Value::Float(value)));
        self
    }

    pub fn uint(mut self, name: &str, value: u64) -> Self {
        self.fields.push((name.to_owned(), Value::Uint(value)));
        self
    }

    pub fn bool(mut self, name: &str, value: bool) -> Self {
        self.fields.push((name.to_owned(), Value::Bool(value)));
        self
    }

    pub fn text(mut self, name: &str, value: impl Into<String>) -> Self {
        self.fields.push((name.to_owned(), Value::Text(value.into())));
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }
}

/// Renders records in the requested format, blank line between records.
pub fn render(records: &[Record], format: Format) -> String {
    let mut out = String::new();
    for (i, record) in records.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        for (name, value) in &record.fields {
            match format {
                Format::Table => {
                    out.push_str(name);
                    out.push_str(": ");
                    out.push_str(&value.table());
                }
                Format::Structured => {
                    out.push_str(name);
                    out.push('=');
                    out.push_str(&value.structured());
                }
            }
            out.push('\n');
        }
        if format == Format::Table {
            for note in &record.notes {
                out.push_str("note: ");
                out.push_str(note);
                out.push('\n');
            }
        }
    }
    out
}

/// Five significant figures: plain decimal inside a readable magnitude
/// window, scientific notation outside it.
pub fn sig5(v: f64) -> String {
    if v == 0.0 {
        return "0.0000".to_owned();
    }
    if !v.is_finite() {
        return format!("{v}");
    }
    let magnitude = v.abs().log10().floor() as i32;
    if !(-4..=8).contains(&magnitude) {
        format!("{v:.4e}")
    } else {
        let decimals = (4 - magnitude).max(0) as usize;
        format!("{v:.decimals$}")
    }
}
