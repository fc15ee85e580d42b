//! Text formats: one- or two-column 1D samples and legacy ASCII VTK
//! structured points.

use std::fmt::Write as _;

use crate::field::{Connectivity, Domain, FieldError, ScalarField};

/// Parses a 1D function.
///
/// Each non-empty line holds the value, or an abscissa followed by the value
/// (abscissae strictly increasing). A trailing non-numeric label column is
/// accepted after two numeric columns. `#` starts a comment.
pub fn load_field_1d(text: &str) -> Result<ScalarField, FieldError> {
    let mut values = Vec::new();
    let mut columns = None;
    let mut last_x: Option<f64> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let err = |message: String| FieldError::Parse {
            line: line_no,
            message,
        };
        let number = |tok: &str| -> Result<f64, FieldError> {
            tok.parse::<f64>()
                .ok()
                .filter(|x| x.is_finite())
                .ok_or_else(|| err(format!("malformed number `{tok}`")))
        };

        let numeric = match tokens.len() {
            1 => 1,
            2 => 2,
            3 if tokens[2].parse::<f64>().is_err() => 2,
            n => return Err(err(format!("expected one or two columns, found {n}"))),
        };
        match columns {
            None => columns = Some(numeric),
            Some(c) if c != numeric => {
                return Err(err(format!(
                    "expected {c} numeric columns, found {numeric}"
                )))
            }
            Some(_) => {}
        }
        if numeric == 2 {
            let x = number(tokens[0])?;
            if let Some(prev) = last_x {
                if x <= prev {
                    return Err(err(format!(
                        "abscissa {x} does not increase (previous {prev})"
                    )));
                }
            }
            last_x = Some(x);
        }
        values.push(number(tokens[numeric - 1])?);
    }
    ScalarField::chain(values)
}

/// Writes `index value` lines that [`load_field_1d`] reads back exactly.
pub fn write_field_1d(field: &ScalarField) -> String {
    let mut out = String::new();
    for (i, v) in field.values().iter().enumerate() {
        let _ = writeln!(out, "{i} {v:?}");
    }
    out
}

struct Tokens<'a> {
    inner: std::iter::Peekable<std::str::SplitWhitespace<'a>>,
}

impl<'a> Tokens<'a> {
    fn next(&mut self, what: &str) -> Result<&'a str, FieldError> {
        self.inner
            .next()
            .ok_or_else(|| FieldError::Format(format!("unexpected end of file, expected {what}")))
    }

    fn keyword(&mut self, kw: &str) -> Result<(), FieldError> {
        let tok = self.next(kw)?;
        if tok.eq_ignore_ascii_case(kw) {
            Ok(())
        } else {
            Err(FieldError::Format(format!(
                "expected `{kw}`, found `{tok}`"
            )))
        }
    }

    fn usize(&mut self, what: &str) -> Result<usize, FieldError> {
        let tok = self.next(what)?;
        tok.parse()
            .map_err(|_| FieldError::Format(format!("bad {what} `{tok}`")))
    }

    fn f64(&mut self, what: &str) -> Result<f64, FieldError> {
        let tok = self.next(what)?;
        tok.parse()
            .map_err(|_| FieldError::Format(format!("bad {what} `{tok}`")))
    }
}

/// Parses a legacy ASCII `STRUCTURED_POINTS` dataset with a single scalar
/// point-data array and a third extent of 1.
pub fn load_grid_vtk(text: &str, connectivity: Connectivity) -> Result<ScalarField, FieldError> {
    let mut lines = text.lines();
    let header = lines.next().unwrap_or("");
    if !header.trim_start().starts_with("# vtk DataFile") {
        return Err(FieldError::Format("missing `# vtk DataFile` header".into()));
    }
    let _title = lines
        .next()
        .ok_or_else(|| FieldError::Format("missing title line".into()))?;
    let encoding = lines
        .next()
        .ok_or_else(|| FieldError::Format("missing encoding line".into()))?
        .trim();
    if encoding.eq_ignore_ascii_case("BINARY") {
        return Err(FieldError::Format(
            "binary encoding is not supported".into(),
        ));
    }
    if !encoding.eq_ignore_ascii_case("ASCII") {
        return Err(FieldError::Format(format!("unknown encoding `{encoding}`")));
    }

    let rest: String = lines.collect::<Vec<_>>().join("\n");
    let mut tok = Tokens {
        inner: rest.split_whitespace().peekable(),
    };
    tok.keyword("DATASET")?;
    tok.keyword("STRUCTURED_POINTS")?;

    let mut dims = None;
    let mut points = None;
    while points.is_none() {
        let kw = tok.next("dataset attribute")?;
        match kw.to_ascii_uppercase().as_str() {
            "DIMENSIONS" => {
                let nx = tok.usize("x extent")?;
                let ny = tok.usize("y extent")?;
                let nz = tok.usize("z extent")?;
                if nz != 1 {
                    return Err(FieldError::Format(format!(
                        "third extent must be 1, found {nz}"
                    )));
                }
                dims = Some((ny, nx));
            }
            "ORIGIN" | "SPACING" | "ASPECT_RATIO" => {
                for _ in 0..3 {
                    tok.f64(kw)?;
                }
            }
            "POINT_DATA" => points = Some(tok.usize("point count")?),
            other => return Err(FieldError::Format(format!("unexpected keyword `{other}`"))),
        }
    }
    let (rows, cols) = dims.ok_or_else(|| FieldError::Format("missing DIMENSIONS".into()))?;
    let n = points.unwrap_or_default();
    if rows * cols != n {
        return Err(FieldError::Format(format!(
            "DIMENSIONS {cols} {rows} 1 imply {} points, POINT_DATA says {n}",
            rows * cols
        )));
    }

    tok.keyword("SCALARS")?;
    let _name = tok.next("scalar name")?;
    let _kind = tok.next("scalar type")?;
    if let Some(&next) = tok.inner.peek() {
        if !next.eq_ignore_ascii_case("LOOKUP_TABLE") {
            let comps = tok.usize("component count")?;
            if comps != 1 {
                return Err(FieldError::Format(format!(
                    "expected 1 component, found {comps}"
                )));
            }
        }
    }
    tok.keyword("LOOKUP_TABLE")?;
    let _table = tok.next("lookup table name")?;

    let mut values = Vec::with_capacity(n);
    for _ in 0..n {
        values.push(tok.f64("scalar value")?);
    }
    if let Some(extra) = tok.inner.next() {
        return Err(FieldError::Format(format!(
            "extent mismatch: data continues after {n} values (`{extra}`)"
        )));
    }
    ScalarField::grid(rows, cols, values, connectivity)
}

/// Serializes a grid field as legacy ASCII VTK; chains are written as a
/// single row.
pub fn write_grid_vtk(field: &ScalarField, name: &str) -> String {
    let (rows, cols) = match field.domain() {
        Domain::Grid { rows, cols, .. } => (rows, cols),
        Domain::Chain => (1, field.len()),
    };
    let mut out = String::new();
    let _ = writeln!(out, "# vtk DataFile Version 3.0");
    let _ = writeln!(out, "{name}");
    let _ = writeln!(out, "ASCII");
    let _ = writeln!(out, "DATASET STRUCTURED_POINTS");
    let _ = writeln!(out, "DIMENSIONS {cols} {rows} 1");
    let _ = writeln!(out, "ORIGIN 0 0 0");
    let _ = writeln!(out, "SPACING 1 1 1");
    let _ = writeln!(out, "POINT_DATA {}", field.len());
    let _ = writeln!(out, "SCALARS {name} double 1");
    let _ = writeln!(out, "LOOKUP_TABLE default");
    for row in field.values().chunks(cols) {
        let line: Vec<String> = row.iter().map(|v| format!("{v:?}")).collect();
        let _ = writeln!(out, "{}", line.join(" "));
    }
    out
}
