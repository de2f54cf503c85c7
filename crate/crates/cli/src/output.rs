//! Rendering of command results as JSON, CSV or an aligned text table.

use std::io::{self, Write};

use clap::ValueEnum;
use serde::Serialize;
use serde_json::ser::Formatter;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// Compact JSON with every float written to 17 significant digits.
struct Precise;

impl Formatter for Precise {
    fn write_f64<W: ?Sized + Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        write!(writer, "{value:.16e}")
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, Precise);
    value
        .serialize(&mut ser)
        .expect("in-memory JSON serialization");
    String::from_utf8(buf).expect("serde_json writes UTF-8")
}

/// One command result: the canonical JSON value plus a flat table for the
/// CSV and text views.
pub struct Report {
    pub json: Value,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    /// Replaces the table in the text view when set.
    pub text: Option<String>,
}

impl Report {
    pub fn new<T: Serialize>(json: &T, header: &[&str]) -> Self {
        Report {
            json: serde_json::to_value(json).expect("report values serialize"),
            header: header.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
            text: None,
        }
    }

    pub fn row(&mut self, cells: Vec<String>) {
        self.rows.push(cells);
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => to_json(&self.json) + "\n",
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.header).expect("in-memory CSV");
                for r in &self.rows {
                    w.write_record(r).expect("in-memory CSV");
                }
                String::from_utf8(w.into_inner().expect("in-memory CSV")).expect("CSV is UTF-8")
            }
            Format::Text => match &self.text {
                Some(t) => format!("{t}\n"),
                None => table(&self.header, &self.rows),
            },
        }
    }
}

fn table(header: &[String], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: &[String]| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c:<w$}"))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(header);
    for r in rows {
        out += &line(r);
    }
    out
}

/// Float cell at the same precision as the JSON output.
pub fn f17(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        x.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn floats_carry_seventeen_digits() {
        assert_eq!(
            to_json(&json!({"x": 0.1, "n": 3})),
            r#"{"n":3,"x":1.0000000000000001e-1}"#
        );
        assert_eq!(to_json(&f64::NAN), "null");
    }

    #[test]
    fn table_and_csv_views() {
        let mut r = Report::new(&json!(null), &["k", "value"]);
        r.row(vec!["0".into(), "a,b".into()]);
        assert_eq!(r.render(Format::Csv), "k,value\n0,\"a,b\"\n");
        assert_eq!(r.render(Format::Text), "k  value\n0  a,b\n");
    }
}
