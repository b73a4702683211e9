//! Exhaustive enumeration of finite shelves, spindles and quandles.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::MagmaTable;
use crate::error::{Error, Result};

pub const SHELF_ORDER_LIMIT: usize = 3;
pub const SPINDLE_ORDER_LIMIT: usize = 4;
pub const QUANDLE_ORDER_LIMIT: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StructureKind {
    Shelf,
    Spindle,
    Quandle,
}

impl StructureKind {
    pub fn order_limit(self) -> usize {
        match self {
            StructureKind::Shelf => SHELF_ORDER_LIMIT,
            StructureKind::Spindle => SPINDLE_ORDER_LIMIT,
            StructureKind::Quandle => QUANDLE_ORDER_LIMIT,
        }
    }

    fn name(self) -> &'static str {
        match self {
            StructureKind::Shelf => "shelf",
            StructureKind::Spindle => "spindle",
            StructureKind::Quandle => "quandle",
        }
    }

    /// Every admissible row `x ▷ −` for element `x`.
    fn candidate_rows(self, n: usize, x: usize) -> Vec<Vec<usize>> {
        let all = (0..n).map(|_| 0..n).multi_cartesian_product();
        match self {
            StructureKind::Shelf => all.collect(),
            StructureKind::Spindle => all.filter(|r| r[x] == x).collect(),
            StructureKind::Quandle => (0..n).permutations(n).filter(|r| r[x] == x).collect(),
        }
    }
}

impl fmt::Display for StructureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StructureKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "shelf" => Ok(StructureKind::Shelf),
            "spindle" => Ok(StructureKind::Spindle),
            "quandle" => Ok(StructureKind::Quandle),
            other => Err(Error::InvalidArgument(format!(
                "unknown structure kind {other:?}"
            ))),
        }
    }
}

/// All tables of the given order and kind, sorted lexicographically. With
/// `up_to_iso`, only the lexicographically least table of each isomorphism
/// class is kept.
pub fn enumerate(order: usize, kind: StructureKind, up_to_iso: bool) -> Result<Vec<MagmaTable>> {
    if order == 0 {
        return Err(Error::InvalidArgument("order must be positive".into()));
    }
    let limit = kind.order_limit();
    if order > limit {
        return Err(Error::OrderTooLarge {
            order,
            limit,
            kind: kind.name(),
        });
    }
    let candidates: Vec<Vec<Vec<usize>>> =
        (0..order).map(|x| kind.candidate_rows(order, x)).collect();

    let mut found: Vec<MagmaTable> = candidates[0]
        .par_iter()
        .flat_map_iter(|first| {
            let mut cells = vec![0; order * order];
            cells[..order].copy_from_slice(first);
            let mut out = Vec::new();
            if rows_consistent(&cells, order, 0) {
                search(&candidates, &mut cells, order, 1, &mut out);
            }
            out
        })
        .collect();

    if up_to_iso {
        let classes: BTreeSet<MagmaTable> = found.par_iter().map(canonical_form).collect();
        found = classes.into_iter().collect();
    } else {
        found.sort();
    }
    Ok(found)
}

fn search(
    candidates: &[Vec<Vec<usize>>],
    cells: &mut [usize],
    n: usize,
    row: usize,
    out: &mut Vec<MagmaTable>,
) {
    if row == n {
        out.push(MagmaTable::from_cells_unchecked(n, cells.to_vec()));
        return;
    }
    for candidate in &candidates[row] {
        cells[row * n..(row + 1) * n].copy_from_slice(candidate);
        if rows_consistent(cells, n, row) {
            search(candidates, cells, n, row + 1, out);
        }
    }
}

/// Self-distributivity on every triple that became decidable once rows
/// `0..=last` are filled: those with `max(x, y, x ▷ y) == last`.
fn rows_consistent(cells: &[usize], n: usize, last: usize) -> bool {
    let op = |a: usize, b: usize| cells[a * n + b];
    for x in 0..=last {
        for y in 0..=last {
            let xy = op(x, y);
            if xy > last || x.max(y).max(xy) != last {
                continue;
            }
            for z in 0..n {
                if op(x, op(y, z)) != op(xy, op(x, z)) {
                    return false;
                }
            }
        }
    }
    true
}

fn relabel(m: &MagmaTable, perm: &[usize]) -> Vec<usize> {
    let n = m.order();
    let mut cells = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            cells[perm[x] * n + perm[y]] = perm[m.op(x, y)];
        }
    }
    cells
}

/// Lexicographically least table among all relabelings of `m`.
pub fn canonical_form(m: &MagmaTable) -> MagmaTable {
    let n = m.order();
    let best = (0..n)
        .permutations(n)
        .map(|perm| relabel(m, &perm))
        .min()
        .expect("at least one permutation");
    MagmaTable::from_cells_unchecked(n, best)
}

/// Number of distinct tables obtained from `m` by relabeling.
pub fn orbit_size(m: &MagmaTable) -> usize {
    let n = m.order();
    (0..n)
        .permutations(n)
        .map(|perm| relabel(m, &perm))
        .collect::<BTreeSet<_>>()
        .len()
}
