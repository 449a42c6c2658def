//! Reader and writer for the archive's `.ts` text format.
//!
//! ```text
//! # comment
//! @problemName Toy
//! @timestamps false
//! @missing true
//! @univariate false
//! @dimensions 2
//! @equalLength true
//! @seriesLength 3
//! @targetLabel true
//! @data
//! 1.0,2.0,3.0:4.0,?,6.0:7.5
//! ```
//!
//! Each data line holds one instance: dimensions separated by `:`, values
//! comma-separated, and the last `:` field is the target. `?` marks a missing
//! value. Header keys are case-insensitive; unknown directives produce a
//! warning. Lines starting with `#` or `%` are comments.

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dataset::{is_missing, Split, TimeSeriesDataset, TimeSeriesInstance, MISSING};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}, column {column}: {reason}")]
    Syntax { line: usize, column: usize, reason: String },

    #[error("line {line}: header mismatch: {reason}")]
    HeaderMismatch { line: usize, reason: String },

    #[error("line {line}: '@targetLabel true' is required before @data")]
    MissingTargetLabel { line: usize },

    #[error("i/o error: {0}")]
    Io(String),
}

impl FormatError {
    /// Line and column of the error, when it has one.
    pub fn position(&self) -> Option<(usize, usize)> {
        match self {
            FormatError::Syntax { line, column, .. } => Some((*line, *column)),
            FormatError::HeaderMismatch { line, .. } | FormatError::MissingTargetLabel { line } => Some((*line, 1)),
            FormatError::Io(_) => None,
        }
    }
}

fn syntax(line: usize, column: usize, reason: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        column,
        reason: reason.into(),
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TsHeader {
    pub problem_name: String,
    pub timestamps: bool,
    pub missing: Option<bool>,
    pub univariate: Option<bool>,
    pub dimensions: Option<usize>,
    pub equal_length: Option<bool>,
    pub series_length: Option<usize>,
    pub target_label: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ParsedTs {
    pub header: TsHeader,
    pub dataset: TimeSeriesDataset,
    pub warnings: Vec<String>,
}

/// Parses `.ts` bytes into a dataset tagged as the training split.
pub fn parse_ts(bytes: &[u8]) -> Result<TimeSeriesDataset, FormatError> {
    parse_ts_full(bytes, Split::Train).map(|p| p.dataset)
}

/// Reads a `.ts` file; the split is `Test` when the file stem ends in `_TEST`.
pub fn read_ts_file(path: impl AsRef<Path>) -> Result<TimeSeriesDataset, FormatError> {
    let path = path.as_ref();
    let bytes = std::fs::read(path).map_err(|e| FormatError::Io(format!("{}: {e}", path.display())))?;
    let split = split_from_path(path);
    let parsed = parse_ts_full(&bytes, split)?;
    for w in &parsed.warnings {
        log::warn!("{}: {w}", path.display());
    }
    Ok(parsed.dataset)
}

fn split_from_path(path: &Path) -> Split {
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or_default();
    if stem.to_ascii_uppercase().ends_with("_TEST") {
        Split::Test
    } else {
        Split::Train
    }
}

pub fn parse_ts_full(bytes: &[u8], split: Split) -> Result<ParsedTs, FormatError> {
    let mut header = TsHeader::default();
    let mut warnings = Vec::new();
    let mut instances: Vec<TimeSeriesInstance> = Vec::new();
    let mut instance_lines: Vec<usize> = Vec::new();
    let mut in_data = false;
    let mut n_lines = 0;

    for (idx, raw) in bytes.split(|&b| b == b'\n').enumerate() {
        let line_no = idx + 1;
        n_lines = line_no;
        let raw = raw.strip_suffix(b"\r").unwrap_or(raw);
        let line = std::str::from_utf8(raw).map_err(|e| syntax(line_no, e.valid_up_to() + 1, "invalid UTF-8"))?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') || trimmed.starts_with('%') {
            continue;
        }
        let indent = line.len() - line.trim_start().len();

        if in_data {
            if trimmed.starts_with('@') {
                return Err(syntax(line_no, indent + 1, "directive after @data"));
            }
            instances.push(parse_data_line(line, line_no)?);
            instance_lines.push(line_no);
            continue;
        }

        let Some(directive) = trimmed.strip_prefix('@') else {
            return Err(syntax(line_no, indent + 1, "expected a '@' directive before @data"));
        };
        let key_len = directive.find(char::is_whitespace).unwrap_or(directive.len());
        let key = directive[..key_len].to_ascii_lowercase();
        let value = directive[key_len..].trim();
        let gap = directive[key_len..].len() - directive[key_len..].trim_start().len();
        let value_col = indent + 1 + key_len + gap + 1;

        match key.as_str() {
            "problemname" => header.problem_name = value.to_string(),
            "timestamps" => {
                header.timestamps = parse_bool(value, line_no, value_col)?;
                if header.timestamps {
                    return Err(syntax(line_no, value_col, "timestamped series are not supported"));
                }
            }
            "missing" => header.missing = Some(parse_bool(value, line_no, value_col)?),
            "univariate" => header.univariate = Some(parse_bool(value, line_no, value_col)?),
            "dimension" | "dimensions" => header.dimensions = Some(parse_count(value, line_no, value_col)?),
            "equallength" => header.equal_length = Some(parse_bool(value, line_no, value_col)?),
            "serieslength" => header.series_length = Some(parse_count(value, line_no, value_col)?),
            "targetlabel" => header.target_label = parse_bool(value, line_no, value_col)?,
            "data" => {
                if !value.is_empty() {
                    return Err(syntax(line_no, value_col, "unexpected text after @data"));
                }
                if !header.target_label {
                    return Err(FormatError::MissingTargetLabel { line: line_no });
                }
                in_data = true;
            }
            "" => return Err(syntax(line_no, indent + 2, "empty directive")),
            other => warnings.push(format!("line {line_no}: unknown directive @{other} ignored")),
        }
    }

    if !in_data {
        return Err(syntax(n_lines.max(1), 1, "missing @data section"));
    }

    check_header(&header, &instances, &instance_lines, &mut warnings)?;

    let dataset = TimeSeriesDataset::new(header.problem_name.clone(), split, instances);
    Ok(ParsedTs {
        header,
        dataset,
        warnings,
    })
}

fn parse_bool(value: &str, line: usize, column: usize) -> Result<bool, FormatError> {
    if value.eq_ignore_ascii_case("true") {
        Ok(true)
    } else if value.eq_ignore_ascii_case("false") {
        Ok(false)
    } else {
        Err(syntax(line, column, format!("expected true or false, found {value:?}")))
    }
}

fn parse_count(value: &str, line: usize, column: usize) -> Result<usize, FormatError> {
    match value.parse::<usize>() {
        Ok(n) if n > 0 => Ok(n),
        _ => Err(syntax(
            line,
            column,
            format!("expected a positive integer, found {value:?}"),
        )),
    }
}

fn parse_data_line(line: &str, line_no: usize) -> Result<TimeSeriesInstance, FormatError> {
    let mut fields: Vec<(usize, &str)> = Vec::new();
    let mut start = 0;
    for (i, c) in line.char_indices() {
        if c == ':' {
            fields.push((start, &line[start..i]));
            start = i + 1;
        }
    }
    fields.push((start, &line[start..]));

    if fields.len() < 2 {
        return Err(syntax(line_no, line.trim_end().len() + 1, "expected target field"));
    }
    let (target_off, target_text) = fields.pop().expect("at least two fields");
    let target_tok = target_text.trim();
    let target_col = target_off + target_text.len() - target_text.trim_start().len() + 1;
    if target_tok.is_empty() {
        return Err(syntax(line_no, target_col, "expected target field"));
    }
    let target = parse_value(target_tok, line_no, target_col)?;
    if is_missing(target) {
        return Err(syntax(line_no, target_col, "target may not be missing"));
    }

    let mut dimensions = Vec::with_capacity(fields.len());
    for (off, text) in fields {
        let mut values = Vec::new();
        let mut vstart = 0;
        let bytes = text.as_bytes();
        for i in 0..=bytes.len() {
            if i == bytes.len() || bytes[i] == b',' {
                let tok_raw = &text[vstart..i];
                let tok = tok_raw.trim();
                let col = off + vstart + tok_raw.len() - tok_raw.trim_start().len() + 1;
                if tok.is_empty() {
                    // A single trailing comma is tolerated.
                    if i == bytes.len() && !values.is_empty() {
                        break;
                    }
                    return Err(syntax(line_no, col, "empty value"));
                }
                values.push(parse_value(tok, line_no, col)?);
                vstart = i + 1;
            }
        }
        dimensions.push(values);
    }

    TimeSeriesInstance::new(dimensions, target).map_err(|e| syntax(line_no, 1, e.to_string()))
}

fn parse_value(tok: &str, line: usize, column: usize) -> Result<f64, FormatError> {
    if tok == "?" || tok.eq_ignore_ascii_case("nan") {
        return Ok(MISSING);
    }
    match tok.parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(v),
        Ok(_) => Err(syntax(line, column, format!("non-finite value {tok:?}"))),
        Err(_) => Err(syntax(line, column, format!("invalid number {tok:?}"))),
    }
}

fn check_header(
    header: &TsHeader,
    instances: &[TimeSeriesInstance],
    lines: &[usize],
    warnings: &mut Vec<String>,
) -> Result<(), FormatError> {
    for (inst, &line) in instances.iter().zip(lines) {
        let d = inst.n_dimensions();
        if let Some(declared) = header.dimensions {
            if d != declared {
                return Err(FormatError::HeaderMismatch {
                    line,
                    reason: format!("declared {declared} dimensions, found {d}"),
                });
            }
        }
        if header.univariate == Some(true) && d != 1 {
            return Err(FormatError::HeaderMismatch {
                line,
                reason: format!("declared univariate, found {d} dimensions"),
            });
        }
        if header.equal_length != Some(false) {
            let lens = inst.lengths();
            if let Some(declared) = header.series_length {
                if let Some(&bad) = lens.iter().find(|&&l| l != declared) {
                    return Err(FormatError::HeaderMismatch {
                        line,
                        reason: format!("declared series length {declared}, found {bad}"),
                    });
                }
            }
        }
    }
    if header.equal_length == Some(true) {
        let mut lens = instances
            .iter()
            .zip(lines)
            .flat_map(|(i, &l)| i.lengths().into_iter().map(move |n| (n, l)));
        if let Some((first, _)) = lens.next() {
            if let Some((bad, line)) = lens.find(|&(n, _)| n != first) {
                return Err(FormatError::HeaderMismatch {
                    line,
                    reason: format!("declared equal length, found lengths {first} and {bad}"),
                });
            }
        }
    }
    let any_missing = instances.iter().any(TimeSeriesInstance::has_missing);
    if header.missing == Some(false) && any_missing {
        warnings.push("@missing false but data contains missing values".into());
    }
    Ok(())
}

/// Writes a dataset in `.ts` form. Values use the shortest decimal that
/// parses back to the same `f64`.
pub fn serialize_ts(ds: &TimeSeriesDataset) -> String {
    let mut out = String::new();
    let d = ds.n_dimensions();
    let series_length = ds.series_length();
    let _ = writeln!(out, "@problemName {}", ds.name);
    out.push_str("@timestamps false\n");
    let _ = writeln!(out, "@missing {}", ds.has_missing());
    let _ = writeln!(out, "@univariate {}", d.is_none_or(|d| d == 1));
    if let Some(d) = d {
        let _ = writeln!(out, "@dimensions {d}");
    }
    match series_length {
        Some(len) if !ds.is_empty() => {
            out.push_str("@equalLength true\n");
            let _ = writeln!(out, "@seriesLength {len}");
        }
        _ => out.push_str("@equalLength false\n"),
    }
    out.push_str("@targetLabel true\n@data\n");
    for inst in ds.instances() {
        for dim in inst.dimensions() {
            for (i, &v) in dim.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                write_value(&mut out, v);
            }
            out.push(':');
        }
        write_value(&mut out, inst.target());
        out.push('\n');
    }
    out
}

fn write_value(out: &mut String, v: f64) {
    if is_missing(v) {
        out.push('?');
    } else {
        let _ = write!(out, "{v:?}");
    }
}

pub fn write_ts_file(ds: &TimeSeriesDataset, path: impl AsRef<Path>) -> Result<(), FormatError> {
    let path = path.as_ref();
    std::fs::write(path, serialize_ts(ds)).map_err(|e| FormatError::Io(format!("{}: {e}", path.display())))
}
