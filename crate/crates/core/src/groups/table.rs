//! Cayley table files.
//!
//! Format: the first significant line is the order `n`; the next `n` lines
//! hold `n` space-separated entries in `0..n`, row `i` column `j` giving the
//! index of `x_i * x_j`. Lines starting with `#` and blank lines are ignored.
//!
//! The loader relabels so that the two-sided identity (when one exists) sits
//! at index 0. It checks syntax only; group axioms are the job of
//! [`validate_group`](super::validate_group), which `build_group` runs on
//! every table it loads.

use std::fs;
use std::path::{Path, PathBuf};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum TableError {
    #[error("cannot read `{path}`: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("`{path}` line {line}: {reason}")]
    Parse {
        path: PathBuf,
        line: usize,
        reason: String,
    },
}

/// Parsed table, canonicalized so any two-sided identity has index 0.
pub(super) struct RawTable {
    pub order: usize,
    /// Row-major `order * order` cells.
    pub cells: Vec<usize>,
}

pub(super) fn parse_table_file(path: &Path) -> Result<RawTable, TableError> {
    let text = fs::read_to_string(path).map_err(|source| TableError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let err = |line: usize, reason: String| TableError::Parse {
        path: path.to_path_buf(),
        line,
        reason,
    };

    let mut rows = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (first_line, first) = rows.next().ok_or_else(|| {
        err(1, "expected the group order on the first significant line".into())
    })?;
    let order: usize = first
        .parse()
        .map_err(|_| err(first_line, format!("`{first}` is not a group order")))?;
    if order == 0 {
        return Err(err(first_line, "group order must be at least 1".into()));
    }

    let mut cells = Vec::with_capacity(order * order);
    for _ in 0..order {
        let (line, row) = rows
            .next()
            .ok_or_else(|| err(0, format!("expected {order} table rows")))?;
        let entries: Vec<usize> = row
            .split_whitespace()
            .map(|w| {
                w.parse()
                    .map_err(|_| err(line, format!("`{w}` is not an element index")))
            })
            .collect::<Result<_, _>>()?;
        if entries.len() != order {
            return Err(err(
                line,
                format!("expected {order} entries, found {}", entries.len()),
            ));
        }
        if let Some(&bad) = entries.iter().find(|&&e| e >= order) {
            return Err(err(line, format!("entry {bad} out of range 0..{order}")));
        }
        cells.extend(entries);
    }
    if let Some((line, _)) = rows.next() {
        return Err(err(line, "trailing data after the table".into()));
    }

    let mut table = RawTable { order, cells };
    if let Some(e) = find_identity(&table) {
        relabel_identity_to_zero(&mut table, e);
    }
    Ok(table)
}

fn find_identity(t: &RawTable) -> Option<usize> {
    (0..t.order).find(|&e| {
        (0..t.order).all(|j| t.cells[e * t.order + j] == j && t.cells[j * t.order + e] == j)
    })
}

// Swap labels 0 and e; the swap is its own inverse.
fn relabel_identity_to_zero(t: &mut RawTable, e: usize) {
    if e == 0 {
        return;
    }
    let swap = |i: usize| match i {
        0 => e,
        i if i == e => 0,
        i => i,
    };
    let n = t.order;
    let old = t.cells.clone();
    for i in 0..n {
        for j in 0..n {
            t.cells[i * n + j] = swap(old[swap(i) * n + swap(j)]);
        }
    }
}
