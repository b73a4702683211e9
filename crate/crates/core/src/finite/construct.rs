use serde::{Deserialize, Serialize};

use super::{classify, GroupTable, MagmaTable};
use crate::error::{Error, Result};

/// Table of `x ▷₋₁ y`, the inverse of each left translation.
pub fn inverse_operation(m: &MagmaTable) -> Result<MagmaTable> {
    if let Some(row) = m.first_non_bijective_row() {
        return Err(Error::NonBijectiveRow { row });
    }
    let report = classify(m);
    if !report.is_quandle {
        let v = &report.violations[0];
        return Err(Error::NotQuandle(format!(
            "{:?} fails at {:?}",
            v.axiom, v.witness
        )));
    }
    let n = m.order();
    let mut cells = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            cells[x * n + m.op(x, y)] = y;
        }
    }
    Ok(MagmaTable::from_cells_unchecked(n, cells))
}

/// `x ▷ y = x y x⁻¹`.
pub fn conjugation_quandle(g: &GroupTable) -> MagmaTable {
    let n = g.order();
    let cells = (0..n)
        .flat_map(|x| (0..n).map(move |y| g.mul(g.mul(x, y), g.inv(x))))
        .collect();
    MagmaTable::from_cells_unchecked(n, cells)
}

/// A group together with an action on the points `0..set_size`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "UnionRepr", into = "UnionRepr")]
pub struct UnionQuandleSpec {
    group: GroupTable,
    set_size: usize,
    /// `action[g][p]` is `g · p`.
    action: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct UnionRepr {
    group: GroupTable,
    set_size: usize,
    action: Vec<Vec<usize>>,
}

impl TryFrom<UnionRepr> for UnionQuandleSpec {
    type Error = Error;

    fn try_from(r: UnionRepr) -> Result<Self> {
        UnionQuandleSpec::new(r.group, r.set_size, r.action)
    }
}

impl From<UnionQuandleSpec> for UnionRepr {
    fn from(s: UnionQuandleSpec) -> Self {
        UnionRepr {
            group: s.group,
            set_size: s.set_size,
            action: s.action,
        }
    }
}

impl UnionQuandleSpec {
    /// Checks `e · p = p` and `(gh) · p = g · (h · p)` exactly.
    pub fn new(group: GroupTable, set_size: usize, action: Vec<Vec<usize>>) -> Result<Self> {
        let n = group.order();
        if action.len() != n || action.iter().any(|r| r.len() != set_size) {
            return Err(Error::InvalidAction(format!(
                "action must be a {n}×{set_size} table"
            )));
        }
        if action.iter().flatten().any(|&p| p >= set_size) {
            return Err(Error::InvalidAction("action maps outside the set".into()));
        }
        let e = group.identity();
        if let Some(p) = (0..set_size).find(|&p| action[e][p] != p) {
            return Err(Error::InvalidAction(format!("identity moves point {p}")));
        }
        for g in 0..n {
            for h in 0..n {
                for p in 0..set_size {
                    if action[group.mul(g, h)][p] != action[g][action[h][p]] {
                        return Err(Error::InvalidAction(format!(
                            "compatibility fails at g={g}, h={h}, p={p}"
                        )));
                    }
                }
            }
        }
        Ok(UnionQuandleSpec {
            group,
            set_size,
            action,
        })
    }

    /// The action of every group element by the identity.
    pub fn trivial_action(group: GroupTable, set_size: usize) -> Self {
        let action = vec![(0..set_size).collect(); group.order()];
        Self::new(group, set_size, action).expect("trivial action")
    }

    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    pub fn set_size(&self) -> usize {
        self.set_size
    }

    pub fn act(&self, g: usize, p: usize) -> usize {
        self.action[g][p]
    }
}

/// The quandle on `G ⊔ X`: indices `0..n` are group elements and
/// `n..n+m` are points.
pub fn union_quandle(spec: &UnionQuandleSpec) -> MagmaTable {
    let g = &spec.group;
    let n = g.order();
    let total = n + spec.set_size;
    let mut cells = Vec::with_capacity(total * total);
    for x in 0..total {
        for y in 0..total {
            let v = if x >= n {
                y
            } else if y < n {
                g.mul(g.mul(x, y), g.inv(x))
            } else {
                n + spec.act(x, y - n)
            };
            cells.push(v);
        }
    }
    MagmaTable::from_cells_unchecked(total, cells)
}

/// First triple `(x, y, z)` at which `▷` and `inverse` fail to distribute
/// over each other in either direction.
pub fn mutual_distributivity_witness(m: &MagmaTable, inverse: &MagmaTable) -> Option<[usize; 3]> {
    let n = m.order();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let forward = m.op(x, inverse.op(y, z)) == inverse.op(m.op(x, y), m.op(x, z));
                let backward =
                    inverse.op(x, m.op(y, z)) == m.op(inverse.op(x, y), inverse.op(x, z));
                if !(forward && backward) {
                    return Some([x, y, z]);
                }
            }
        }
    }
    None
}
