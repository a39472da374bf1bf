//! Number rendering and record/CSV/JSON emission.

use std::fs::File;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use num_bigint::{BigInt, Sign};
use num_traits::{One, ToPrimitive, Zero};
use serde_json::{Map, Value};

use crate::error::CliError;

/// `%.12g`: twelve significant digits, trailing zeros dropped, `inf` for
/// infinities.
pub fn fmt_real(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{:.11e}", x);
    let (mant, exp) = sci.split_once('e').unwrap();
    let exp: i32 = exp.parse().unwrap();
    if (-5..12).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        trim_zeros(format!("{:.*}", decimals, x))
    } else {
        let mant = trim_zeros(mant.to_string());
        format!("{mant}e{}{:02}", if exp < 0 { '-' } else { '+' }, exp.abs())
    }
}

fn trim_zeros(s: String) -> String {
    if !s.contains('.') {
        return s;
    }
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}

/// Prime factorization as `2^4*3^3`. Trial division covers primes below
/// 10^6; a leftover cofactor is printed as is.
pub fn factored(n: &BigInt) -> String {
    if n.is_zero() {
        return "0".into();
    }
    let mut m = n.magnitude().clone();
    let mut parts = Vec::new();
    let mut p = 2u32;
    while p < 1_000_000 && !m.is_one() {
        let mut e = 0;
        while (&m % p).is_zero() {
            m /= p;
            e += 1;
        }
        if e == 1 {
            parts.push(p.to_string());
        } else if e > 1 {
            parts.push(format!("{p}^{e}"));
        }
        if m.to_u64().is_some_and(|v| (p as u64) * (p as u64) > v) {
            if !m.is_one() {
                parts.push(m.to_string());
                m = One::one();
            }
            break;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if !m.is_one() {
        parts.push(m.to_string());
    }
    let body = if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    };
    if n.sign() == Sign::Minus {
        format!("-{body}")
    } else {
        body
    }
}

/// A flat, ordered record for `key: value` text or a JSON object.
#[derive(Debug, Default, Clone)]
pub struct Record {
    fields: Vec<(String, Field)>,
}

#[derive(Debug, Clone)]
pub enum Field {
    /// Exact integer, a string in JSON.
    Int(BigInt),
    /// Small count, a number in JSON.
    Count(u64),
    Real(f64),
    Text(String),
    List(Vec<String>),
}

impl Record {
    pub fn new(command: &str) -> Self {
        Record::default().text("command", command)
    }

    pub fn int(mut self, key: &str, v: impl Into<BigInt>) -> Self {
        self.fields.push((key.into(), Field::Int(v.into())));
        self
    }

    pub fn count(mut self, key: &str, v: u64) -> Self {
        self.fields.push((key.into(), Field::Count(v)));
        self
    }

    pub fn real(mut self, key: &str, v: f64) -> Self {
        self.fields.push((key.into(), Field::Real(v)));
        self
    }

    pub fn text(mut self, key: &str, v: impl Into<String>) -> Self {
        self.fields.push((key.into(), Field::Text(v.into())));
        self
    }

    pub fn list(mut self, key: &str, v: Vec<String>) -> Self {
        self.fields.push((key.into(), Field::List(v)));
        self
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.fields {
            let v = match v {
                Field::Int(i) => i.to_string(),
                Field::Count(c) => c.to_string(),
                Field::Real(x) => fmt_real(*x),
                Field::Text(s) => s.clone(),
                Field::List(l) => l.join(" "),
            };
            out.push_str(&format!("{k}: {v}\n"));
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        for (k, v) in &self.fields {
            map.insert(k.clone(), field_json(v));
        }
        Value::Object(map)
    }
}

fn field_json(v: &Field) -> Value {
    match v {
        Field::Int(i) => Value::String(i.to_string()),
        Field::Count(c) => Value::from(*c),
        Field::Real(x) => real_json(*x),
        Field::Text(s) => Value::String(s.clone()),
        Field::List(l) => Value::Array(l.iter().cloned().map(Value::String).collect()),
    }
}

/// Finite reals become JSON numbers rounded to 12 significant digits;
/// infinities and NaN become the strings `inf`, `-inf`, `nan`.
pub fn real_json(x: f64) -> Value {
    let s = fmt_real(x);
    match s
        .parse::<f64>()
        .ok()
        .filter(|v| v.is_finite())
        .and_then(serde_json::Number::from_f64)
    {
        Some(n) => Value::Number(n),
        None => Value::String(s),
    }
}

/// A table of string cells, written as CSV or a JSON array of objects.
#[derive(Debug, Clone)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    /// Columns holding reals, emitted as JSON numbers.
    pub real_columns: Vec<usize>,
    /// Columns holding small integers, emitted as JSON numbers.
    pub count_columns: Vec<usize>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Table {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
            real_columns: Vec::new(),
            count_columns: Vec::new(),
        }
    }

    fn positions(&self, cols: &[&str]) -> Vec<usize> {
        cols.iter()
            .map(|c| {
                self.header
                    .iter()
                    .position(|h| h == c)
                    .expect("unknown column")
            })
            .collect()
    }

    pub fn reals(mut self, cols: &[&str]) -> Self {
        self.real_columns = self.positions(cols);
        self
    }

    pub fn counts(mut self, cols: &[&str]) -> Self {
        self.count_columns = self.positions(cols);
        self
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        w.write_record(&self.header).unwrap();
        for r in &self.rows {
            w.write_record(r).unwrap();
        }
        String::from_utf8(w.into_inner().unwrap()).unwrap()
    }

    pub fn to_json(&self) -> Value {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut map = Map::new();
                for (i, (h, cell)) in self.header.iter().zip(r).enumerate() {
                    let v = if self.real_columns.contains(&i) && !cell.is_empty() {
                        match cell.parse::<f64>() {
                            Ok(x) => real_json(x),
                            Err(_) => Value::String(cell.clone()),
                        }
                    } else if let Some(c) = self
                        .count_columns
                        .contains(&i)
                        .then(|| cell.parse::<u64>().ok())
                        .flatten()
                    {
                        Value::from(c)
                    } else {
                        Value::String(cell.clone())
                    };
                    map.insert(h.clone(), v);
                }
                Value::Object(map)
            })
            .collect();
        Value::Array(rows)
    }
}

/// Where output goes.
pub struct Sink {
    path: Option<PathBuf>,
}

impl Sink {
    pub fn new(path: Option<&Path>) -> Self {
        Sink {
            path: path.map(Path::to_path_buf),
        }
    }

    pub fn write(&self, text: &str) -> Result<(), CliError> {
        match &self.path {
            Some(p) => {
                let io_err = |source| CliError::Io {
                    path: p.clone(),
                    source,
                };
                let mut f = File::create(p).map_err(io_err)?;
                f.write_all(text.as_bytes()).map_err(io_err)
            }
            None => {
                let mut out = io::stdout().lock();
                out.write_all(text.as_bytes())
                    .and_then(|_| out.flush())
                    .map_err(|source| CliError::Io {
                        path: PathBuf::from("<stdout>"),
                        source,
                    })
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_digits() {
        assert_eq!(fmt_real(10.488230217036), "10.488230217");
        assert_eq!(fmt_real(2.0), "2");
        assert_eq!(fmt_real(f64::INFINITY), "inf");
        assert_eq!(fmt_real(1.5e-7), "1.5e-07");
        assert_eq!(fmt_real(-1.23456789012345), "-1.23456789012");
        assert_eq!(fmt_real(123456789012345.0), "1.23456789012e+14");
        assert_eq!(fmt_real(0.000123456789012345), "0.000123456789012");
    }

    #[test]
    fn factorizations() {
        assert_eq!(factored(&BigInt::from(432)), "2^4*3^3");
        assert_eq!(factored(&BigInt::from(1)), "1");
        assert_eq!(factored(&BigInt::from(12)), "2^2*3");
        assert_eq!(factored(&BigInt::from(-2000)), "-2^4*5^3");
        assert_eq!(factored(&BigInt::from(1_000_003u64 * 2)), "2*1000003");
        let big = BigInt::from(2).pow(88) * BigInt::from(5).pow(7);
        assert_eq!(factored(&big), "2^88*5^7");
    }

    #[test]
    fn csv_rows() {
        let mut t = Table::new(&["n", "value"]).reals(&["value"]).counts(&["n"]);
        t.rows.push(vec!["3".into(), "inf".into()]);
        t.rows.push(vec!["4".into(), "1.5".into()]);
        assert_eq!(t.to_csv(), "n,value\n3,inf\n4,1.5\n");
        let j = t.to_json();
        assert_eq!(j[0]["value"], "inf");
        assert_eq!(j[1]["value"], 1.5);
        assert_eq!(j[1]["n"], 4);
    }
}
