use std::io::{self, Write};
use std::str::FromStr;

use clap::ValueEnum;
use num_bigint::BigInt;
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    /// Right-aligned columns.
    Text,
    Csv,
    /// One JSON object per line.
    Jsonl,
}

pub struct Row {
    pub cells: Vec<String>,
    pub json: Value,
}

impl Row {
    pub fn new(cells: Vec<String>, json: Value) -> Self {
        Self { cells, json }
    }
}

pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Row>,
    /// Print the header in text mode even without `--header`.
    pub text_header: bool,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Self {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
            text_header: false,
        }
    }

    pub fn with_header(header: Vec<String>) -> Self {
        Self {
            header,
            rows: Vec::new(),
            text_header: true,
        }
    }

    pub fn push(&mut self, row: Row) {
        self.rows.push(row);
    }

    pub fn write(
        &self,
        format: OutputFormat,
        header: bool,
        out: &mut impl Write,
    ) -> io::Result<()> {
        match format {
            OutputFormat::Text => self.write_text(header || self.text_header, out),
            OutputFormat::Csv => {
                if header {
                    writeln!(out, "{}", self.header.join(","))?;
                }
                for row in &self.rows {
                    writeln!(out, "{}", row.cells.join(","))?;
                }
                Ok(())
            }
            OutputFormat::Jsonl => {
                for row in &self.rows {
                    writeln!(out, "{}", row.json)?;
                }
                Ok(())
            }
        }
    }

    fn write_text(&self, header: bool, out: &mut impl Write) -> io::Result<()> {
        let mut lines: Vec<&[String]> = Vec::new();
        if header {
            lines.push(&self.header);
        }
        lines.extend(self.rows.iter().map(|r| r.cells.as_slice()));
        let cols = lines.iter().map(|l| l.len()).max().unwrap_or(0);
        let mut widths = vec![0; cols];
        for line in &lines {
            for (w, cell) in widths.iter_mut().zip(line.iter()) {
                *w = (*w).max(cell.chars().count());
            }
        }
        for line in lines {
            let mut text = String::new();
            for (i, cell) in line.iter().enumerate() {
                if i > 0 {
                    text.push_str("  ");
                }
                let pad = widths[i] - cell.chars().count();
                text.extend(std::iter::repeat_n(' ', pad));
                text.push_str(cell);
            }
            writeln!(out, "{}", text.trim_end())?;
        }
        Ok(())
    }
}

pub fn json_int(v: &BigInt) -> Value {
    Value::Number(serde_json::Number::from_str(&v.to_string()).expect("decimal integer"))
}

pub fn json_ints<'a>(vs: impl IntoIterator<Item = &'a BigInt>) -> Value {
    Value::Array(vs.into_iter().map(json_int).collect())
}

pub fn object(fields: Vec<(&str, Value)>) -> Value {
    let mut map = Map::new();
    for (k, v) in fields {
        map.insert(k.to_owned(), v);
    }
    Value::Object(map)
}
