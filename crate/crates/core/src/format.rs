//! Plain-text file formats: exact point sets, float point sets and curves.
//!
//! One record per line, fields separated by single spaces. Lines starting
//! with '#' and blank lines are ignored.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::geom::HPoint;
use crate::quartic::QuarticCurve;
use crate::rational::{parse_rational, Rational};

/// Non-comment lines with their 1-based line numbers.
fn records(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'))
}

fn fields(line: usize, record: &str, expected: usize) -> Result<Vec<&str>> {
    let parts: Vec<&str> = record.split(' ').collect();
    if parts.len() != expected || parts.iter().any(|p| p.is_empty()) {
        return Err(Error::Parse { line, message: format!("expected {expected} fields separated by single spaces") });
    }
    Ok(parts)
}

fn rational_field(line: usize, field: &str) -> Result<Rational> {
    parse_rational(field)
        .ok_or_else(|| Error::Parse { line, message: format!("`{field}` is not an integer or a reduced fraction a/b") })
}

pub fn parse_points(text: &str) -> Result<Vec<HPoint>> {
    records(text)
        .map(|(line, rec)| {
            let f = fields(line, rec, 4)?;
            let coords: [Rational; 4] = [
                rational_field(line, f[0])?,
                rational_field(line, f[1])?,
                rational_field(line, f[2])?,
                rational_field(line, f[3])?,
            ];
            HPoint::new(coords).map_err(|_| Error::Parse { line, message: "all coordinates are zero".into() })
        })
        .collect()
}

pub fn write_points(points: &[HPoint]) -> String {
    let mut out = String::new();
    for p in points {
        writeln!(out, "{p}").expect("writing to a String");
    }
    out
}

/// Rounds to 12 significant digits and prints the shortest decimal.
pub fn format_float(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let rounded: f64 = format!("{x:.11e}").parse().expect("valid float text");
    let rounded = if rounded == 0.0 { 0.0 } else { rounded };
    rounded.to_string()
}

/// The value printed by `format_float`, as a float.
pub fn round_sig12(x: f64) -> f64 {
    format_float(x).parse().unwrap_or(x)
}

/// Affine float points "x y z".
pub fn parse_float_points(text: &str) -> Result<Vec<[f64; 3]>> {
    records(text)
        .map(|(line, rec)| {
            let f = fields(line, rec, 3)?;
            let mut v = [0.0; 3];
            for (slot, field) in v.iter_mut().zip(f) {
                *slot = field
                    .parse::<f64>()
                    .ok()
                    .filter(|x| x.is_finite())
                    .ok_or_else(|| Error::Parse { line, message: format!("`{field}` is not a finite float") })?;
            }
            Ok(v)
        })
        .collect()
}

pub fn write_float_points(points: &[[f64; 3]]) -> String {
    let mut out = String::new();
    for p in points {
        let [x, y, z] = p.map(format_float);
        writeln!(out, "{x} {y} {z}").expect("writing to a String");
    }
    out
}

/// Point file contents, distinguished by the number of fields per record.
#[derive(Clone, Debug, PartialEq)]
pub enum PointFile {
    Exact(Vec<HPoint>),
    Float(Vec<[f64; 3]>),
}

pub fn parse_point_file(text: &str) -> Result<PointFile> {
    let width = records(text).next().map(|(_, rec)| rec.split(' ').count());
    match width {
        Some(3) => parse_float_points(text).map(PointFile::Float),
        _ => parse_points(text).map(PointFile::Exact),
    }
}

/// A curve file holds the single record "p q r s".
pub fn parse_curve(text: &str) -> Result<QuarticCurve> {
    let mut recs = records(text);
    let (line, rec) = recs.next().ok_or(Error::Parse { line: 1, message: "empty curve file".into() })?;
    if let Some((extra, _)) = recs.next() {
        return Err(Error::Parse { line: extra, message: "curve file holds a single record".into() });
    }
    let f = fields(line, rec, 4)?;
    let [p, q, r, s] = [0, 1, 2, 3].map(|i| rational_field(line, f[i]));
    QuarticCurve::new(p?, q?, r?, s?)
}

pub fn write_curve(curve: &QuarticCurve) -> String {
    format!("{} {} {} {}\n", curve.p(), curve.q(), curve.r(), curve.s())
}
