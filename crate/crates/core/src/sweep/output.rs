use std::fmt::Write as _;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use super::SweepResult;
use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;

pub const SIGNIFICANT_DIGITS: usize = 12;

/// Plain decimal notation (no exponent) with `digits` significant digits.
/// Zero (of either sign) prints as `0`.
pub fn format_significant(x: f64, digits: usize) -> String {
    assert!(digits >= 1);
    if x == 0.0 {
        return "0".to_string();
    }
    // Let the formatter do the rounding, then move the decimal point.
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("exponent");
    let negative = mantissa.starts_with('-');
    let digit_str: String = mantissa.chars().filter(char::is_ascii_digit).collect();

    let mut out = String::new();
    if negative {
        out.push('-');
    }
    let point = exp + 1;
    if point <= 0 {
        out.push_str("0.");
        out.extend(std::iter::repeat_n('0', (-point) as usize));
        out.push_str(&digit_str);
    } else if point as usize >= digit_str.len() {
        out.push_str(&digit_str);
        out.extend(std::iter::repeat_n('0', point as usize - digit_str.len()));
    } else {
        out.push_str(&digit_str[..point as usize]);
        out.push('.');
        out.push_str(&digit_str[point as usize..]);
    }
    out
}

fn fmt(x: f64) -> String {
    format_significant(x, SIGNIFICANT_DIGITS)
}

/// `levels.csv` -> `levels.events.csv`; other names get `.events.csv` appended.
pub fn events_path(path: &Path) -> PathBuf {
    let name = path
        .file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_default();
    let stem = name.strip_suffix(".csv").unwrap_or(&name);
    path.with_file_name(format!("{stem}.events.csv"))
}

pub fn levels_csv(r: &SweepResult) -> String {
    let n = r.levels.first().map_or(0, Vec::len);
    let mut s = String::from("B");
    for i in 1..=n {
        write!(s, ",E{i}").unwrap();
    }
    s.push('\n');
    for (b, row) in r.field_values.iter().zip(&r.levels) {
        s.push_str(&fmt(*b));
        for e in row {
            s.push(',');
            s.push_str(&fmt(*e));
        }
        s.push('\n');
    }
    s
}

/// Level indices are 1-based here, matching the `E1..En` columns.
pub fn events_csv(r: &SweepResult) -> String {
    let mut s = String::from("kind,level_i,level_j,B,gap\n");
    for ev in &r.events {
        writeln!(
            s,
            "{},{},{},{},{}",
            ev.kind.as_str(),
            ev.level_pair.0 + 1,
            ev.level_pair.1 + 1,
            fmt(ev.field_at_extremum),
            fmt(ev.gap_at_extremum)
        )
        .unwrap();
    }
    s
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    let io_err = |source| Error::Io {
        path: path.to_path_buf(),
        source,
    };
    let mut w = BufWriter::new(File::create(path).map_err(io_err)?);
    w.write_all(contents.as_bytes()).map_err(io_err)?;
    w.flush().map_err(io_err)
}

/// Writes the level table to `path` and the events to its `.events.csv` sibling.
pub fn write_csv(r: &SweepResult, path: &Path) -> Result<()> {
    write_file(path, &levels_csv(r))?;
    write_file(&events_path(path), &events_csv(r))
}

/// One matrix row per line. Entries are real numbers when the matrix is
/// real, `re+imi` otherwise.
pub fn format_matrix(h: &ComplexMatrix) -> String {
    let real = h.is_real();
    let mut s = String::new();
    for row in h.rows() {
        let cells: Vec<String> = row
            .iter()
            .map(|z| {
                if real {
                    fmt(z.re)
                } else {
                    let im = fmt(z.im.abs());
                    let sign = if z.im < 0.0 && im != "0" { '-' } else { '+' };
                    format!("{}{}{}i", fmt(z.re), sign, im)
                }
            })
            .collect();
        s.push_str(&cells.join(" "));
        s.push('\n');
    }
    s
}
