//! Plain-text file formats.
//!
//! ```text
//! zonotope3          matrix 3 4             polytope3
//! 1 0 0              1 0 0 1                0 0 0
//! 0 1/2 -3           0 1 0 1                1 0 0
//!                    0 0 1 1                ...
//! ```
//!
//! Lines starting with `#` and blank lines are ignored everywhere. Numbers
//! are rational literals (`-3/7`, `2`). Plücker vectors are written as CSV
//! with 1-based column indices.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::grassmann::{triples, PlueckerVector};
use crate::numeric::{Mat3xM, Rat, Vec3};
use crate::verify::TrialRecord;
use crate::witness::PolytopeV;
use crate::zonotope::Zonotope3;

/// Which body a file describes, judged by its header line.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Body {
    Zonotope(Zonotope3),
    Polytope(PolytopeV),
    Matrix(Mat3xM),
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn format_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Format { line, msg: msg.into() }
}

fn parse_rats(line: usize, s: &str) -> Result<Vec<Rat>> {
    s.split_whitespace()
        .map(|tok| tok.parse::<Rat>().map_err(|e| format_err(line, e.to_string())))
        .collect()
}

fn parse_points(lines: impl Iterator<Item = (usize, impl AsRef<str>)>) -> Result<Vec<Vec3>> {
    lines
        .map(|(n, l)| {
            let v = parse_rats(n, l.as_ref())?;
            match <[Rat; 3]>::try_from(v) {
                Ok([x, y, z]) => Ok(Vec3::new(x, y, z)),
                Err(v) => Err(format_err(n, format!("expected 3 coordinates, got {}", v.len()))),
            }
        })
        .collect()
}

fn expect_header<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    want: &str,
) -> Result<(usize, &'a str)> {
    let (n, h) = lines.next().ok_or_else(|| format_err(0, format!("missing {want:?} header")))?;
    if !h.starts_with(want) {
        return Err(format_err(n, format!("expected {want:?} header, found {h:?}")));
    }
    Ok((n, h))
}

pub fn parse_zonotope(text: &str) -> Result<Zonotope3> {
    let mut lines = content_lines(text);
    let (n, h) = expect_header(&mut lines, "zonotope3")?;
    if h != "zonotope3" {
        return Err(format_err(n, format!("unexpected header {h:?}")));
    }
    Ok(Zonotope3::new(parse_points(lines)?))
}

pub fn render_zonotope(z: &Zonotope3) -> String {
    let mut out = String::from("zonotope3\n");
    for g in z.generators() {
        let _ = writeln!(out, "{} {} {}", g.x, g.y, g.z);
    }
    out
}

pub fn parse_polytope(text: &str) -> Result<PolytopeV> {
    let mut lines = content_lines(text);
    let (n, h) = expect_header(&mut lines, "polytope3")?;
    if h != "polytope3" {
        return Err(format_err(n, format!("unexpected header {h:?}")));
    }
    let pts = parse_points(lines)?;
    PolytopeV::new(pts).map_err(|e| format_err(n, e.to_string()))
}

pub fn render_polytope(p: &PolytopeV) -> String {
    let mut out = String::from("polytope3\n");
    for v in p.vertices() {
        let _ = writeln!(out, "{} {} {}", v.x, v.y, v.z);
    }
    out
}

pub fn parse_matrix(text: &str) -> Result<Mat3xM> {
    let mut lines = content_lines(text);
    let (n, h) = expect_header(&mut lines, "matrix")?;
    let dims: Vec<&str> = h.split_whitespace().collect();
    let cols = match dims.as_slice() {
        ["matrix", "3", c] => c.parse::<usize>().map_err(|_| format_err(n, format!("bad column count {c:?}")))?,
        _ => return Err(format_err(n, format!("expected \"matrix 3 <n>\", found {h:?}"))),
    };
    let mut rows = Vec::with_capacity(3);
    for r in 0..3 {
        let (ln, l) = lines.next().ok_or_else(|| format_err(n, format!("missing row {}", r + 1)))?;
        let row = parse_rats(ln, l)?;
        if row.len() != cols {
            return Err(format_err(ln, format!("expected {cols} entries, got {}", row.len())));
        }
        rows.push(row);
    }
    if let Some((ln, _)) = lines.next() {
        return Err(format_err(ln, "trailing content after 3 rows"));
    }
    Mat3xM::from_rows(&rows[0], &rows[1], &rows[2])
}

pub fn render_matrix(m: &Mat3xM) -> String {
    let mut out = format!("matrix 3 {}\n", m.ncols());
    for r in 0..3 {
        let row: Vec<String> = m.row(r).iter().map(Rat::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Dispatches on the header line.
pub fn parse_body(text: &str) -> Result<Body> {
    let header = content_lines(text).next().map(|(_, h)| h).unwrap_or("");
    if header.starts_with("zonotope3") {
        parse_zonotope(text).map(Body::Zonotope)
    } else if header.starts_with("polytope3") {
        parse_polytope(text).map(Body::Polytope)
    } else if header.starts_with("matrix") {
        parse_matrix(text).map(Body::Matrix)
    } else {
        Err(format_err(0, format!("unknown file header {header:?}")))
    }
}

/// `i,j,k,value` rows (1-based) under a header line, lexicographic order.
pub fn render_pluecker_csv(p: &PlueckerVector) -> String {
    let mut out = String::from("i,j,k,value\n");
    for (t, v) in p.iter() {
        let _ = writeln!(out, "{},{},{},{}", t[0] + 1, t[1] + 1, t[2] + 1, v);
    }
    out
}

pub fn parse_pluecker_csv(text: &str) -> Result<PlueckerVector> {
    let mut entries = Vec::new();
    let mut n = 0;
    for (ln, l) in content_lines(text) {
        if l == "i,j,k,value" {
            continue;
        }
        let fields: Vec<&str> = l.split(',').map(str::trim).collect();
        let [i, j, k, v] = fields.as_slice() else {
            return Err(format_err(ln, "expected 4 fields"));
        };
        let idx = |s: &str| match s.parse::<usize>() {
            Ok(x) if x >= 1 => Ok(x - 1),
            _ => Err(format_err(ln, format!("bad index {s:?}"))),
        };
        let t = [idx(i)?, idx(j)?, idx(k)?];
        let val = v.parse::<Rat>().map_err(|e| format_err(ln, e.to_string()))?;
        n = n.max(t[2] + 1);
        entries.push((t, val));
    }
    // the column count is the smallest n whose layout has this many entries
    let n = (n..=n + 2).find(|&c| triples(c).count() == entries.len()).unwrap_or(n);
    PlueckerVector::from_coords(n, entries)
}

pub const FUZZ_CSV_HEADER: &str = "trial,target,m,slack_num,slack_den,ratio_num,ratio_den";

/// One row per trial; ratio columns are empty when the ratio is undefined.
pub fn render_fuzz_csv(records: &[TrialRecord]) -> String {
    let mut out = String::with_capacity(64 * (records.len() + 1));
    out.push_str(FUZZ_CSV_HEADER);
    out.push('\n');
    for r in records {
        let slack = &r.report.slack;
        let (rn, rd) = match &r.report.ratio {
            Some(q) => (q.numer().to_string(), q.denom().to_string()),
            None => (String::new(), String::new()),
        };
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{}",
            r.trial,
            r.target,
            r.input.m(),
            slack.numer(),
            slack.denom(),
            rn,
            rd
        );
    }
    out
}
