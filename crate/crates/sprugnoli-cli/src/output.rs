//! Deterministic text renderings: aligned tables, JSON, CSV. Entries are
//! exact rationals printed as plain integers when the denominator is 1.

use num::One;
use serde::Serialize;
use sprugnoli::{ProductionStripes, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Pretty,
    Json,
    Csv,
}

pub fn rational_str(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn string_rows(rows: &[Vec<Rational>]) -> Vec<Vec<String>> {
    rows.iter().map(|r| r.iter().map(rational_str).collect()).collect()
}

fn aligned(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(|r| r.len()).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|j| rows.iter().filter_map(|r| r.get(j)).map(|s| s.len()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in rows {
        let line: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(j, s)| format!("{s:>width$}", width = widths[j]))
            .collect();
        out.push_str(line.join(" ").trim_end());
        out.push('\n');
    }
    out
}

fn csv(rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

#[derive(Serialize)]
struct MatrixDoc<'a> {
    family: &'a str,
    dim: usize,
    entries: Vec<Vec<String>>,
}

pub fn matrix_text(family: &str, dim: usize, rows: &[Vec<Rational>], fmt: Format) -> String {
    let entries = string_rows(rows);
    match fmt {
        Format::Pretty => aligned(&entries),
        Format::Csv => csv(&entries),
        Format::Json => {
            let mut s = serde_json::to_string(&MatrixDoc { family, dim, entries })
                .expect("plain strings always serialize");
            s.push('\n');
            s
        }
    }
}

pub fn sequence_text(family: &str, seq: &[Rational], fmt: Format) -> String {
    let row: Vec<String> = seq.iter().map(rational_str).collect();
    match fmt {
        Format::Pretty => {
            let mut s = row.join(",");
            s.push('\n');
            s
        }
        Format::Csv => csv(&[row]),
        Format::Json => {
            let mut s = serde_json::to_string(&MatrixDoc {
                family,
                dim: seq.len(),
                entries: vec![row],
            })
            .expect("plain strings always serialize");
            s.push('\n');
            s
        }
    }
}

#[derive(Serialize)]
struct StripesDoc<'a> {
    family: &'a str,
    dim: usize,
    z: Vec<String>,
    stripes: Vec<Vec<String>>,
}

pub fn stripes_text(family: &str, dim: usize, s: &ProductionStripes, fmt: Format) -> String {
    let z: Vec<String> = s.z.iter().map(rational_str).collect();
    let stripes: Vec<Vec<String>> = s.stripes.iter().map(|st| st.iter().map(rational_str).collect()).collect();
    match fmt {
        Format::Pretty => {
            let mut out = format!("Z: {}\n", z.join(","));
            for (j, st) in stripes.iter().enumerate() {
                out.push_str(&format!("stripe {}: {}\n", j + 1, st.join(",")));
            }
            out
        }
        Format::Csv => {
            let mut rows = vec![z];
            rows.extend(stripes);
            csv(&rows)
        }
        Format::Json => {
            let mut out = serde_json::to_string(&StripesDoc { family, dim, z, stripes })
                .expect("plain strings always serialize");
            out.push('\n');
            out
        }
    }
}
