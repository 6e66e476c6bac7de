//! Report serialization: JSON with 17 significant digits and CSV plot files.

use std::io::{self, Read, Write};

use serde::Serialize;
use serde_json::ser::{CompactFormatter, Formatter};

use crate::error::{Error, Result};
use crate::grid::{GridFunction, MAX_DIM};

/// Compact JSON formatter printing every float as `d.dddddddddddddddde±x`.
#[derive(Debug, Default, Clone, Copy)]
pub struct Sig17Formatter;

impl Formatter for Sig17Formatter {
    fn write_f64<W: ?Sized + Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        write!(writer, "{value:.16e}")
    }

    fn write_f32<W: ?Sized + Write>(&mut self, writer: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(writer, value as f64)
    }

    fn write_null<W: ?Sized + Write>(&mut self, writer: &mut W) -> io::Result<()> {
        CompactFormatter.write_null(writer)
    }
}

/// Top-level JSON document written by every command.
#[derive(Debug, Serialize)]
pub struct Document<'a, C: Serialize, R: Serialize> {
    pub command: &'a str,
    pub config: &'a C,
    pub reports: &'a [R],
    pub tool_version: &'a str,
    pub seed: u64,
}

pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, Sig17Formatter);
    value
        .serialize(&mut ser)
        .map_err(|e| Error::InvalidArgument(format!("serialization failed: {e}")))?;
    buf.push(b'\n');
    Ok(String::from_utf8(buf).expect("serde_json emits UTF-8"))
}

fn fmt_value(v: f64) -> String {
    if v.is_infinite() {
        "inf".to_string()
    } else {
        v.to_string()
    }
}

fn csv_err(e: csv::Error) -> Error {
    Error::InvalidArgument(format!("csv: {e}"))
}

/// Writes one row per node: coordinates `x1..xd` (just `x` when `d = 1`) then `value`.
pub fn write_grid_csv<W: Write>(f: &GridFunction, out: W) -> Result<()> {
    let grid = f.grid();
    let d = grid.dim();
    let mut w = csv::Writer::from_writer(out);
    let mut header: Vec<String> = if d == 1 {
        vec!["x".into()]
    } else {
        (1..=d).map(|k| format!("x{k}")).collect()
    };
    header.push("value".into());
    w.write_record(&header).map_err(csv_err)?;
    let mut x = [0.0; MAX_DIM];
    for (i, v) in f.samples().iter().enumerate() {
        grid.coordinates(i, &mut x);
        let row: Vec<String> = x[..d]
            .iter()
            .map(|c| c.to_string())
            .chain(std::iter::once(fmt_value(*v)))
            .collect();
        w.write_record(&row).map_err(csv_err)?;
    }
    w.flush().map_err(|e| Error::InvalidArgument(format!("csv: {e}")))?;
    Ok(())
}

/// Rows read back from a plot file: coordinates per node and the value column.
#[derive(Debug, Clone, PartialEq)]
pub struct CsvGrid {
    pub coordinates: Vec<Vec<f64>>,
    pub values: Vec<f64>,
}

pub fn read_grid_csv<R: Read>(input: R) -> Result<CsvGrid> {
    let mut r = csv::Reader::from_reader(input);
    let mut out = CsvGrid { coordinates: Vec::new(), values: Vec::new() };
    for rec in r.records() {
        let rec = rec.map_err(csv_err)?;
        let nums = rec
            .iter()
            .map(|t| t.parse::<f64>().map_err(|_| Error::Parse(format!("bad csv number {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        let (value, coords) = nums
            .split_last()
            .ok_or_else(|| Error::Parse("empty csv row".into()))?;
        out.coordinates.push(coords.to_vec());
        out.values.push(*value);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{sample, FunctionSpec};
    use crate::grid::make_grid;

    #[test]
    fn seventeen_digits() {
        let s = to_json(&serde_json::json!({"a": std::f64::consts::SQRT_2, "b": 2.0})).unwrap();
        assert_eq!(s, "{\"a\":1.4142135623730951e0,\"b\":2.0000000000000000e0}\n");
        let back: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(back["a"].as_f64().unwrap(), std::f64::consts::SQRT_2);
    }

    #[test]
    fn csv_layout_with_infinity() {
        let g = make_grid(1, 6.0, 5).unwrap();
        let f = sample(&FunctionSpec::IndicatorOrigin, &g).unwrap();
        let mut buf = Vec::new();
        write_grid_csv(&f, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text, "x,value\n-6,inf\n-3,inf\n0,0\n3,inf\n6,inf\n");
        let back = read_grid_csv(text.as_bytes()).unwrap();
        assert_eq!(back.values, f.samples());
    }
}
