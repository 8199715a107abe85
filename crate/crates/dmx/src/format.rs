//! The three text formats.
//!
//! `.dm`: an optional `kind: matroid` (or `kind: delta-matroid`) line, one
//! `ground: a b c` line, then `feasible: {a,c}` lines, `{}` for the empty
//! set. Under `kind: matroid` the feasible lines are the bases.
//!
//! `.gf2`: a header `gf2sym n` (symmetric, `n × n`) or `gf2 r c`, then one
//! row of `0`/`1` characters per line.
//!
//! `.rg`: `vertex: h1 h2 h3` lines giving each rotation, and
//! `edge: e h1 h2 +` lines (`-` for a twisted edge).
//!
//! Blank lines and lines starting with `#` are ignored everywhere.

use std::collections::HashSet;
use std::fmt::Write;

use dmx_core::{Gf2Matrix, Gf2SymmetricMatrix, GroundSet, RibbonGraph, SetSystem, Subset};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("{line}:{column}: {message}")]
pub struct ParseError {
    /// 1-based.
    pub line: usize,
    /// 1-based, in characters.
    pub column: usize,
    pub message: String,
}

fn err<T>(line: usize, column: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        column,
        message: message.into(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DmKind {
    DeltaMatroid,
    Matroid,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DmFile {
    pub kind: DmKind,
    pub system: SetSystem,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Dm(DmFile),
    Symmetric(Gf2SymmetricMatrix),
    Matrix(Gf2Matrix),
    Ribbon(RibbonGraph),
}

/// A non-blank, non-comment line: its number, the column where the content
/// starts, and the trimmed content.
struct Line<'a> {
    no: usize,
    col: usize,
    text: &'a str,
}

fn lines(src: &str) -> impl Iterator<Item = Line<'_>> {
    src.lines().enumerate().filter_map(|(i, raw)| {
        let text = raw.trim();
        if text.is_empty() || text.starts_with('#') {
            return None;
        }
        let lead = raw.len() - raw.trim_start().len();
        Some(Line {
            no: i + 1,
            col: raw[..lead].chars().count() + 1,
            text,
        })
    })
}

/// Splits `key: rest` and returns the column at which `rest` starts.
fn keyed<'a>(line: &Line<'a>) -> Option<(&'a str, &'a str, usize)> {
    let (key, rest) = line.text.split_once(':')?;
    let rest_start = key.len() + 1;
    let trimmed = rest.trim_start();
    let offset = rest_start + (rest.len() - trimmed.len());
    Some((
        key.trim(),
        trimmed.trim_end(),
        line.col + line.text[..offset].chars().count(),
    ))
}

/// Whitespace-separated words with their columns.
fn words(text: &str, col: usize) -> Vec<(&str, usize)> {
    let mut out = Vec::new();
    let mut start: Option<(usize, usize)> = None;
    for (chars, (byte, c)) in text.char_indices().enumerate() {
        if c.is_whitespace() {
            if let Some((b, ch)) = start.take() {
                out.push((&text[b..byte], col + ch));
            }
        } else if start.is_none() {
            start = Some((byte, chars));
        }
    }
    if let Some((b, ch)) = start {
        out.push((&text[b..], col + ch));
    }
    out
}

fn check_label(label: &str, line: usize, col: usize) -> Result<(), ParseError> {
    match label
        .chars()
        .position(|c| matches!(c, '{' | '}' | ',' | '#' | ':'))
    {
        Some(i) => err(
            line,
            col + i,
            format!("character not allowed in label `{label}`"),
        ),
        None => Ok(()),
    }
}

/// Which format a document is in, judged by its first meaningful line.
pub fn parse(src: &str) -> Result<Document, ParseError> {
    let Some(first) = lines(src).next() else {
        return err(1, 1, "empty input");
    };
    let head = first.text.split_whitespace().next().unwrap_or("");
    if head == "gf2sym" || head == "gf2" {
        return parse_gf2(src);
    }
    match keyed(&first).map(|k| k.0) {
        Some("vertex") | Some("edge") => parse_rg(src).map(Document::Ribbon),
        _ => parse_dm(src).map(Document::Dm),
    }
}

pub fn parse_dm(src: &str) -> Result<DmFile, ParseError> {
    let mut kind: Option<DmKind> = None;
    let mut ground: Option<GroundSet> = None;
    let mut members = Vec::new();
    let mut seen = HashSet::new();
    for line in lines(src) {
        let Some((key, rest, col)) = keyed(&line) else {
            return err(line.no, line.col, "expected `key: value`");
        };
        match key {
            "kind" => {
                if kind.is_some() || ground.is_some() {
                    return err(line.no, line.col, "`kind` must come first and only once");
                }
                kind = Some(match rest {
                    "matroid" => DmKind::Matroid,
                    "delta-matroid" => DmKind::DeltaMatroid,
                    other => return err(line.no, col, format!("unknown kind `{other}`")),
                });
            }
            "ground" => {
                if ground.is_some() {
                    return err(line.no, line.col, "second `ground` line");
                }
                let mut labels = Vec::new();
                for (w, c) in words(rest, col) {
                    check_label(w, line.no, c)?;
                    if labels.iter().any(|l: &String| l == w) {
                        return err(line.no, c, format!("duplicate label `{w}`"));
                    }
                    labels.push(w.to_string());
                }
                ground =
                    Some(GroundSet::new(labels).or_else(|e| err(line.no, col, e.to_string()))?);
            }
            "feasible" => {
                let Some(g) = &ground else {
                    return err(line.no, line.col, "`feasible` before `ground`");
                };
                let s = parse_set(g, rest, line.no, col)?;
                if seen.insert(s) {
                    members.push(s);
                }
            }
            other => return err(line.no, line.col, format!("unknown key `{other}`")),
        }
    }
    let Some(ground) = ground else {
        return err(1, 1, "missing `ground` line");
    };
    let system = SetSystem::new(ground, members).or_else(|e| err(1, 1, e.to_string()))?;
    Ok(DmFile {
        kind: kind.unwrap_or(DmKind::DeltaMatroid),
        system,
    })
}

/// `{a,b}` resolved against `ground`.
pub fn parse_set(
    ground: &GroundSet,
    text: &str,
    line: usize,
    col: usize,
) -> Result<Subset, ParseError> {
    let Some(inner) = text.strip_prefix('{').and_then(|t| t.strip_suffix('}')) else {
        return err(line, col, "expected a set like `{a,b}`");
    };
    let mut s = Subset::EMPTY;
    if inner.trim().is_empty() {
        return Ok(s);
    }
    let mut offset = 1;
    for item in inner.split(',') {
        let label = item.trim();
        let c = col + offset + (item.len() - item.trim_start().len());
        match ground.index_of(label) {
            Some(i) if s.contains(i) => return err(line, c, format!("`{label}` listed twice")),
            Some(i) => s = s.with(i),
            None if label.is_empty() => return err(line, c, "empty label"),
            None => return err(line, c, format!("unknown label `{label}`")),
        }
        offset += item.chars().count() + 1;
    }
    Ok(s)
}

/// Comma-separated labels as given to `--set`.
pub fn parse_label_list(ground: &GroundSet, text: &str) -> Result<Subset, ParseError> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Subset::EMPTY);
    }
    let braced = format!("{{{text}}}");
    parse_set(ground, &braced, 1, 0)
}

fn parse_gf2(src: &str) -> Result<Document, ParseError> {
    let mut it = lines(src);
    let head = it.next().expect("caller saw a line");
    let hw = words(head.text, head.col);
    let dims: Vec<usize> = hw[1..]
        .iter()
        .map(|(w, c)| {
            w.parse()
                .or_else(|_| err(head.no, *c, format!("expected a number, found `{w}`")))
        })
        .collect::<Result<_, _>>()?;
    let (symmetric, rows, cols) = match (hw[0].0, dims.as_slice()) {
        ("gf2sym", [n]) => (true, *n, *n),
        ("gf2", [r, c]) => (false, *r, *c),
        (h, _) => return err(head.no, head.col, format!("bad `{h}` header")),
    };
    if cols > dmx_core::subset::MAX_GROUND {
        return err(
            head.no,
            head.col,
            format!("at most {} columns", dmx_core::subset::MAX_GROUND),
        );
    }
    let mut data = Vec::with_capacity(rows);
    let mut last = head.no;
    for line in it {
        last = line.no;
        if data.len() == rows {
            return err(line.no, line.col, format!("more than {rows} rows"));
        }
        let mut row = 0u32;
        let mut width = 0;
        for (i, ch) in line.text.chars().enumerate() {
            match ch {
                '0' => {}
                '1' if i < cols => row |= 1 << i,
                '1' => {}
                _ => {
                    return err(
                        line.no,
                        line.col + i,
                        format!("expected 0 or 1, found `{ch}`"),
                    )
                }
            }
            width += 1;
        }
        if width != cols {
            return err(
                line.no,
                line.col,
                format!("row has {width} entries, expected {cols}"),
            );
        }
        data.push(row);
    }
    if data.len() != rows {
        return err(
            last + 1,
            1,
            format!("expected {rows} rows, found {}", data.len()),
        );
    }
    if symmetric {
        Gf2SymmetricMatrix::new(data)
            .map(Document::Symmetric)
            .or_else(|e| err(head.no, head.col, e.to_string()))
    } else {
        Gf2Matrix::new(cols, data)
            .map(Document::Matrix)
            .or_else(|e| err(head.no, head.col, e.to_string()))
    }
}

pub fn parse_rg(src: &str) -> Result<RibbonGraph, ParseError> {
    let mut vertices: Vec<Vec<String>> = Vec::new();
    let mut edges: Vec<(String, String, String, bool)> = Vec::new();
    // half-edge label -> (line, column) where it was placed on a vertex
    let mut halves: Vec<(String, usize, usize)> = Vec::new();
    let mut used: HashSet<String> = HashSet::new();
    for line in lines(src) {
        let Some((key, rest, col)) = keyed(&line) else {
            return err(line.no, line.col, "expected `vertex:` or `edge:`");
        };
        let ws = words(rest, col);
        match key {
            "vertex" => {
                let mut rot = Vec::new();
                for (h, c) in ws {
                    check_label(h, line.no, c)?;
                    if halves.iter().any(|x| x.0 == h) {
                        return err(line.no, c, format!("half-edge `{h}` placed twice"));
                    }
                    halves.push((h.to_string(), line.no, c));
                    rot.push(h.to_string());
                }
                vertices.push(rot);
            }
            "edge" => {
                let [(e, ec), (a, ac), (b, bc), (sign, sc)] = ws[..] else {
                    return err(line.no, col, "expected `edge: NAME HALF HALF +|-`");
                };
                check_label(e, line.no, ec)?;
                if edges.iter().any(|x| x.0 == e) {
                    return err(line.no, ec, format!("duplicate edge `{e}`"));
                }
                for (h, c) in [(a, ac), (b, bc)] {
                    if !halves.iter().any(|x| x.0 == h) {
                        return err(line.no, c, format!("half-edge `{h}` is on no vertex"));
                    }
                    if !used.insert(h.to_string()) {
                        return err(line.no, c, format!("half-edge `{h}` already used"));
                    }
                }
                let twisted = match sign {
                    "+" => false,
                    "-" => true,
                    _ => return err(line.no, sc, "expected `+` or `-`"),
                };
                edges.push((e.into(), a.into(), b.into(), twisted));
            }
            other => return err(line.no, line.col, format!("unknown key `{other}`")),
        }
    }
    if let Some((h, l, c)) = halves.iter().find(|x| !used.contains(&x.0)) {
        return err(*l, *c, format!("half-edge `{h}` belongs to no edge"));
    }
    RibbonGraph::new(vertices, edges).or_else(|e| err(1, 1, e.to_string()))
}

pub fn write_dm(system: &SetSystem, kind: DmKind) -> String {
    let mut out = String::new();
    if kind == DmKind::Matroid {
        out.push_str("kind: matroid\n");
    }
    out.push_str("ground:");
    for l in system.ground().labels() {
        let _ = write!(out, " {l}");
    }
    out.push('\n');
    for s in system.iter() {
        let _ = writeln!(out, "feasible: {}", system.ground().show(s));
    }
    out
}

fn write_rows(out: &mut String, rows: &[u32], cols: usize) {
    for r in rows {
        for j in 0..cols {
            out.push(if r >> j & 1 == 1 { '1' } else { '0' });
        }
        out.push('\n');
    }
}

pub fn write_gf2sym(a: &Gf2SymmetricMatrix) -> String {
    let mut out = format!("gf2sym {}\n", a.order());
    write_rows(&mut out, a.rows(), a.order());
    out
}

pub fn write_gf2(b: &Gf2Matrix) -> String {
    let mut out = format!("gf2 {} {}\n", b.rows(), b.cols());
    write_rows(&mut out, b.data(), b.cols());
    out
}

pub fn write_rg(g: &RibbonGraph) -> String {
    let mut out = String::new();
    for rot in g.vertices() {
        out.push_str("vertex:");
        for &h in rot {
            let _ = write!(out, " {}", g.half_label(h));
        }
        out.push('\n');
    }
    for e in g.edges() {
        let _ = writeln!(
            out,
            "edge: {} {} {} {}",
            e.label,
            g.half_label(e.ends[0]),
            g.half_label(e.ends[1]),
            if e.twisted { '-' } else { '+' }
        );
    }
    out
}
