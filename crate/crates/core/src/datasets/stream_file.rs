//! Line-oriented stream files.
//!
//! ```text
//! p n
//! y_1 ... y_p      (n rows)
//! ```
//!
//! Values are written in shortest round-trip form, so integral values
//! appear as plain integers.

use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use super::PointStream;
use crate::dominance::Point;
use crate::error::IoError;

pub fn write_stream(stream: &PointStream, path: impl AsRef<Path>) -> Result<(), IoError> {
    let path = path.as_ref();
    let file = fs::File::create(path).map_err(|e| IoError::io(path, e))?;
    let mut w = BufWriter::new(file);
    write_stream_to(stream, &mut w)
        .and_then(|_| w.flush())
        .map_err(|e| IoError::io(path, e))
}

pub fn write_stream_to<W: Write>(stream: &PointStream, w: &mut W) -> io::Result<()> {
    writeln!(w, "{} {}", stream.p, stream.points.len())?;
    let mut line = String::new();
    for y in &stream.points {
        line.clear();
        for (k, v) in y.iter().enumerate() {
            if k > 0 {
                line.push(' ');
            }
            line.push_str(&v.to_string());
        }
        line.push('\n');
        w.write_all(line.as_bytes())?;
    }
    Ok(())
}

pub fn read_stream(path: impl AsRef<Path>) -> Result<PointStream, IoError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| IoError::io(path, e))?;
    parse_stream(&text)
}

/// Parses stream text. Errors name the 1-based line they occur on.
pub fn parse_stream(text: &str) -> Result<PointStream, IoError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (_, header) = lines
        .next()
        .ok_or_else(|| IoError::parse(1, "empty file, expected header `p n`"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let [p, n] = fields[..] else {
        return Err(IoError::parse(
            1,
            format!("expected header `p n`, got `{header}`"),
        ));
    };
    let p: usize = p
        .parse()
        .map_err(|_| IoError::parse(1, format!("bad objective count `{p}`")))?;
    let n: usize = n
        .parse()
        .map_err(|_| IoError::parse(1, format!("bad point count `{n}`")))?;
    if p < 2 {
        return Err(IoError::parse(
            1,
            format!("need at least 2 objectives, got {p}"),
        ));
    }

    let mut points = Vec::with_capacity(n);
    for (line_no, line) in lines {
        if points.len() == n {
            if line.trim().is_empty() {
                continue;
            }
            return Err(IoError::parse(
                line_no,
                format!("more than the {n} rows announced"),
            ));
        }
        let mut coords = Vec::with_capacity(p);
        for token in line.split_whitespace() {
            let v: f64 = token
                .parse()
                .map_err(|_| IoError::parse(line_no, format!("non-numeric value `{token}`")))?;
            coords.push(v);
        }
        if coords.len() != p {
            return Err(IoError::parse(
                line_no,
                format!("expected {p} values, found {}", coords.len()),
            ));
        }
        let y = Point::new(coords).map_err(|e| IoError::parse(line_no, e.to_string()))?;
        points.push(y);
    }
    if points.len() != n {
        return Err(IoError::parse(
            points.len() + 2,
            format!("expected {n} rows, found {}", points.len()),
        ));
    }
    Ok(PointStream::new(p, points))
}
