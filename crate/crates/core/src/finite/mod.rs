//! Finite shelves, spindles and quandles given by operation tables.
//!
//! Elements are the indices `0..n`. `table[x][y]` is `x ▷ y`.

mod construct;
mod enumerate;
pub mod groups;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use construct::{
    conjugation_quandle, inverse_operation, mutual_distributivity_witness, union_quandle,
    UnionQuandleSpec,
};
pub use enumerate::{
    canonical_form, enumerate, orbit_size, StructureKind, QUANDLE_ORDER_LIMIT, SHELF_ORDER_LIMIT,
    SPINDLE_ORDER_LIMIT,
};
pub use groups::{small_groups, GroupTable};

/// A finite binary operation stored as an order-`n` lookup table.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "TableRepr", into = "TableRepr")]
pub struct MagmaTable {
    order: usize,
    cells: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct TableRepr {
    order: usize,
    table: Vec<Vec<usize>>,
}

impl TryFrom<TableRepr> for MagmaTable {
    type Error = Error;

    fn try_from(repr: TableRepr) -> Result<Self> {
        if repr.table.len() != repr.order {
            return Err(Error::InvalidTable(format!(
                "declared order {} but table has {} rows",
                repr.order,
                repr.table.len()
            )));
        }
        MagmaTable::from_rows(&repr.table)
    }
}

impl From<MagmaTable> for TableRepr {
    fn from(m: MagmaTable) -> Self {
        TableRepr {
            order: m.order,
            table: m.rows(),
        }
    }
}

impl MagmaTable {
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidTable("order must be positive".into()));
        }
        for (x, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidTable(format!(
                    "row {x} has {} entries, expected {n}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&v| v >= n) {
                return Err(Error::InvalidTable(format!(
                    "entry {bad} in row {x} is out of range for order {n}"
                )));
            }
        }
        Ok(MagmaTable {
            order: n,
            cells: rows.concat(),
        })
    }

    /// Builds the table of `op` on `0..order`.
    pub fn from_fn(order: usize, op: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let rows: Vec<Vec<usize>> = (0..order)
            .map(|x| (0..order).map(|y| op(x, y)).collect())
            .collect();
        Self::from_rows(&rows)
    }

    pub(crate) fn from_cells_unchecked(order: usize, cells: Vec<usize>) -> Self {
        debug_assert_eq!(cells.len(), order * order);
        MagmaTable { order, cells }
    }

    /// `x ▷ y = y`.
    pub fn trivial(order: usize) -> Self {
        MagmaTable::from_fn(order, |_, y| y).expect("positive order")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.cells[x * self.order + y]
    }

    pub fn row(&self, x: usize) -> &[usize] {
        &self.cells[x * self.order..(x + 1) * self.order]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.order).map(|x| self.row(x).to_vec()).collect()
    }

    pub fn cells(&self) -> &[usize] {
        &self.cells
    }

    /// First row that is not a permutation, if any.
    pub fn first_non_bijective_row(&self) -> Option<usize> {
        (0..self.order).find(|&x| !is_permutation(self.row(x)))
    }
}

pub(crate) fn is_permutation(row: &[usize]) -> bool {
    let mut seen = vec![false; row.len()];
    row.iter()
        .all(|&v| v < row.len() && !std::mem::replace(&mut seen[v], true))
}

/// Axioms checked by [`classify`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TableAxiom {
    /// `x ▷ (y ▷ z) = (x ▷ y) ▷ (x ▷ z)`; witness `[x, y, z]`.
    SelfDistributivity,
    /// `x ▷ x = x`; witness `[x]`.
    Idempotency,
    /// `x ▷ −` is a bijection; witness `[x]`.
    Bijectivity,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub axiom: TableAxiom,
    pub witness: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureReport {
    pub is_shelf: bool,
    pub is_spindle: bool,
    pub is_quandle: bool,
    /// First lexicographic witness for each violated axiom.
    pub violations: Vec<Violation>,
}

/// First triple violating self-distributivity, in lexicographic order.
pub fn self_distributivity_witness(m: &MagmaTable) -> Option<[usize; 3]> {
    let n = m.order();
    for x in 0..n {
        for y in 0..n {
            let xy = m.op(x, y);
            for z in 0..n {
                if m.op(x, m.op(y, z)) != m.op(xy, m.op(x, z)) {
                    return Some([x, y, z]);
                }
            }
        }
    }
    None
}

/// Exhaustive shelf/spindle/quandle classification.
pub fn classify(m: &MagmaTable) -> StructureReport {
    let mut violations = Vec::new();
    let sd = self_distributivity_witness(m);
    if let Some(w) = sd {
        violations.push(Violation {
            axiom: TableAxiom::SelfDistributivity,
            witness: w.to_vec(),
        });
    }
    let idem = (0..m.order()).find(|&x| m.op(x, x) != x);
    if let Some(x) = idem {
        violations.push(Violation {
            axiom: TableAxiom::Idempotency,
            witness: vec![x],
        });
    }
    let bij = m.first_non_bijective_row();
    if let Some(x) = bij {
        violations.push(Violation {
            axiom: TableAxiom::Bijectivity,
            witness: vec![x],
        });
    }
    let is_shelf = sd.is_none();
    let is_spindle = is_shelf && idem.is_none();
    let is_quandle = is_spindle && bij.is_none();
    StructureReport {
        is_shelf,
        is_spindle,
        is_quandle,
        violations,
    }
}

/// Checks `x ▷ y = y ⟺ y ▷ x = x` for all pairs; returns the first failing
/// pair otherwise.
pub fn prenoether_holds(m: &MagmaTable) -> (bool, Option<(usize, usize)>) {
    let n = m.order();
    for x in 0..n {
        for y in 0..n {
            if (m.op(x, y) == y) != (m.op(y, x) == x) {
                return (false, Some((x, y)));
            }
        }
    }
    (true, None)
}
