//! Line-oriented text formats for set systems, matrices and bouquets.
//!
//! Every format is a sequence of `key: values` lines. Blank lines and lines
//! starting with `#` are ignored on input; CRLF endings are accepted. Output
//! is canonical and always LF-terminated.

use std::collections::{BTreeSet, HashMap};

use crate::classify::ClassificationResult;
use crate::error::{ParseError, Result};
use crate::gf2::SymMatrix;
use crate::ribbon::Bouquet;
use crate::setsys::{bit, is_valid_label, SetSystem, MAX_GROUND};

struct Line<'a> {
    number: usize,
    key: &'a str,
    /// Value tokens with their 1-based columns.
    tokens: Vec<(usize, &'a str)>,
    /// Column just past the end of the line.
    end: usize,
}

fn lines(text: &str) -> std::result::Result<Vec<Line<'_>>, ParseError> {
    let mut out = Vec::new();
    for (i, raw) in text.split('\n').enumerate() {
        let number = i + 1;
        let raw = raw.strip_suffix('\r').unwrap_or(raw);
        let trimmed = raw.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let Some(colon) = raw.find(':') else {
            let col = raw.len() - trimmed.len() + 1;
            return Err(ParseError::new(number, col, "expected `key: values`"));
        };
        let key = raw[..colon].trim();
        let mut tokens = Vec::new();
        let rest = &raw[colon + 1..];
        let mut start = None;
        for (off, ch) in rest.char_indices().chain(std::iter::once((rest.len(), ' '))) {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(off),
                (true, Some(s)) => {
                    let col = raw[..colon + 1 + s].chars().count() + 1;
                    tokens.push((col, &rest[s..off]));
                    start = None;
                }
                _ => {}
            }
        }
        out.push(Line {
            number,
            key,
            tokens,
            end: raw.chars().count() + 1,
        });
    }
    Ok(out)
}

fn expect_header<'a>(ls: &'a [Line<'a>], idx: usize, key: &str) -> std::result::Result<&'a Line<'a>, ParseError> {
    match ls.get(idx) {
        Some(l) if l.key == key => Ok(l),
        Some(l) => Err(ParseError::new(
            l.number,
            1,
            format!("expected `{key}:` header, found `{}:`", l.key),
        )),
        None => Err(ParseError::new(1, 1, format!("missing `{key}:` header"))),
    }
}

fn parse_labels(line: &Line<'_>) -> std::result::Result<Vec<String>, ParseError> {
    if line.tokens.len() > MAX_GROUND {
        return Err(ParseError::new(
            line.number,
            line.tokens[MAX_GROUND].0,
            format!("at most {MAX_GROUND} elements are supported"),
        ));
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for &(col, tok) in &line.tokens {
        if !is_valid_label(tok) {
            return Err(ParseError::new(line.number, col, format!("invalid label `{tok}`")));
        }
        if !seen.insert(tok) {
            return Err(ParseError::new(line.number, col, format!("label `{tok}` repeated")));
        }
        out.push(tok.to_string());
    }
    Ok(out)
}

fn lookup(
    index: &HashMap<&str, usize>,
    line: &Line<'_>,
    col: usize,
    tok: &str,
    what: &str,
) -> std::result::Result<usize, ParseError> {
    index
        .get(tok)
        .copied()
        .ok_or_else(|| ParseError::new(line.number, col, format!("unknown {what} `{tok}`")))
}

pub fn parse_set_system(text: &str) -> Result<SetSystem> {
    let ls = lines(text)?;
    let header = expect_header(&ls, 0, "ground")?;
    let ground = parse_labels(header)?;
    let index: HashMap<&str, usize> = ground.iter().enumerate().map(|(i, g)| (g.as_str(), i)).collect();
    let mut fam = BTreeSet::new();
    for line in &ls[1..] {
        if line.key != "feasible" {
            return Err(ParseError::new(line.number, 1, format!("unexpected header `{}:`", line.key)).into());
        }
        let mask = match line.tokens.as_slice() {
            [] => {
                return Err(ParseError::new(line.number, line.end, "empty feasible line; write `-` for the empty set").into())
            }
            [(_, "-")] => 0,
            toks => {
                let mut m = 0;
                for &(col, tok) in toks {
                    if tok == "-" {
                        return Err(ParseError::new(line.number, col, "`-` must stand alone").into());
                    }
                    let b = bit(lookup(&index, line, col, tok, "element")?);
                    if m & b != 0 {
                        return Err(ParseError::new(line.number, col, format!("element `{tok}` repeated")).into());
                    }
                    m |= b;
                }
                m
            }
        };
        if !fam.insert(mask) {
            return Err(ParseError::new(line.number, 1, "duplicate feasible set").into());
        }
    }
    SetSystem::new(ground, fam)
}

pub fn serialize_set_system(d: &SetSystem) -> String {
    let mut out = header_line("ground", d.ground().iter().map(String::as_str));
    for m in d.sorted_masks() {
        if m == 0 {
            out.push_str("feasible: -\n");
        } else {
            out.push_str(&header_line("feasible", d.labels_of(m).into_iter()));
        }
    }
    out
}

fn header_line<'a>(key: &str, vals: impl Iterator<Item = &'a str>) -> String {
    let mut s = format!("{key}:");
    for v in vals {
        s.push(' ');
        s.push_str(v);
    }
    s.push('\n');
    s
}

pub fn parse_matrix(text: &str) -> Result<SymMatrix> {
    let ls = lines(text)?;
    let header = expect_header(&ls, 0, "labels")?;
    let labels = parse_labels(header)?;
    let n = labels.len();
    let mut rows = Vec::with_capacity(n);
    let mut row_lines = Vec::with_capacity(n);
    for line in &ls[1..] {
        if line.key != "row" {
            return Err(ParseError::new(line.number, 1, format!("unexpected header `{}:`", line.key)).into());
        }
        if rows.len() == n {
            return Err(ParseError::new(line.number, 1, format!("more than {n} rows")).into());
        }
        if line.tokens.len() != n {
            let col = line.tokens.get(n).map_or(line.end, |t| t.0);
            return Err(ParseError::new(
                line.number,
                col,
                format!("expected {n} entries, found {}", line.tokens.len()),
            )
            .into());
        }
        let mut r = 0u64;
        for (j, &(col, tok)) in line.tokens.iter().enumerate() {
            match tok {
                "0" => {}
                "1" => r |= bit(j),
                _ => return Err(ParseError::new(line.number, col, format!("entry `{tok}` is not 0 or 1")).into()),
            }
        }
        rows.push(r);
        row_lines.push(line);
    }
    if rows.len() != n {
        let at = ls.last().map_or(1, |l| l.number);
        return Err(ParseError::new(at, 1, format!("expected {n} rows, found {}", rows.len())).into());
    }
    for i in 0..n {
        for j in 0..n {
            if (rows[i] >> j) & 1 != (rows[j] >> i) & 1 {
                let line = row_lines[i];
                return Err(ParseError::new(
                    line.number,
                    line.tokens[j].0,
                    format!(
                        "matrix is not symmetric at ({}, {}): entry ({}, {}) is {} but ({}, {}) is {}",
                        i + 1,
                        j + 1,
                        labels[i],
                        labels[j],
                        (rows[i] >> j) & 1,
                        labels[j],
                        labels[i],
                        (rows[j] >> i) & 1
                    ),
                )
                .into());
            }
        }
    }
    SymMatrix::new(labels, rows)
}

pub fn serialize_matrix(m: &SymMatrix) -> String {
    let mut out = header_line("labels", m.labels().iter().map(String::as_str));
    for i in 0..m.len() {
        out.push_str("row:");
        for j in 0..m.len() {
            out.push_str(if m.get(i, j) { " 1" } else { " 0" });
        }
        out.push('\n');
    }
    out
}

pub fn parse_bouquet(text: &str) -> Result<Bouquet> {
    let ls = lines(text)?;
    let header = expect_header(&ls, 0, "edges")?;
    let edges = parse_labels(header)?;
    let index: HashMap<&str, usize> = edges.iter().enumerate().map(|(i, g)| (g.as_str(), i)).collect();
    let mut twisted: Option<u64> = None;
    let mut rotation: Option<Vec<usize>> = None;
    for line in &ls[1..] {
        match line.key {
            "twisted" => {
                if twisted.is_some() {
                    return Err(ParseError::new(line.number, 1, "repeated `twisted:` line").into());
                }
                let mut m = 0;
                for &(col, tok) in &line.tokens {
                    let b = bit(lookup(&index, line, col, tok, "edge")?);
                    if m & b != 0 {
                        return Err(ParseError::new(line.number, col, format!("edge `{tok}` repeated")).into());
                    }
                    m |= b;
                }
                twisted = Some(m);
            }
            "rotation" => {
                if rotation.is_some() {
                    return Err(ParseError::new(line.number, 1, "repeated `rotation:` line").into());
                }
                let mut count = vec![0usize; edges.len()];
                let mut rot = Vec::with_capacity(line.tokens.len());
                for &(col, tok) in &line.tokens {
                    let e = lookup(&index, line, col, tok, "edge")?;
                    count[e] += 1;
                    if count[e] > 2 {
                        return Err(ParseError::new(
                            line.number,
                            col,
                            format!("edge `{tok}` appears more than twice"),
                        )
                        .into());
                    }
                    rot.push(e);
                }
                if let Some(e) = count.iter().position(|&c| c != 2) {
                    return Err(ParseError::new(
                        line.number,
                        line.end,
                        format!("edge `{}` appears {} times, expected exactly 2", edges[e], count[e]),
                    )
                    .into());
                }
                rotation = Some(rot);
            }
            other => {
                return Err(ParseError::new(line.number, 1, format!("unexpected header `{other}:`")).into())
            }
        }
    }
    let last = ls.last().map_or(1, |l| l.number);
    let rotation = match rotation {
        Some(r) => r,
        None if edges.is_empty() => Vec::new(),
        None => return Err(ParseError::new(last, 1, "missing `rotation:` line").into()),
    };
    Bouquet::new(edges, rotation, twisted.unwrap_or(0))
}

pub fn serialize_bouquet(b: &Bouquet) -> String {
    let edges = b.edges();
    let mut out = header_line("edges", edges.iter().map(String::as_str));
    out.push_str(&header_line(
        "twisted",
        (0..edges.len()).filter(|&e| b.is_twisted(e)).map(|e| edges[e].as_str()),
    ));
    out.push_str(&header_line(
        "rotation",
        b.anchored_rotation().into_iter().map(|e| edges[e].as_str()),
    ));
    out
}

/// Report for a classification of `input`: the signature, each slide, and
/// the ground reordering as `x->y` pairs, position by position.
pub fn serialize_classification(input: &SetSystem, res: &ClassificationResult) -> String {
    let mut out = format!("canonical: {}\n", res.signature);
    for (a, b) in res.slides.iter() {
        out.push_str(&format!("slide: {a} {b}\n"));
    }
    for (x, y) in input.ground().iter().zip(&res.relabeling) {
        out.push_str(&format!("relabel: {x}->{y}\n"));
    }
    out
}
