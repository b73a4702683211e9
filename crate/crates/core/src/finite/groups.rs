//! Finite groups as validated Cayley tables, plus the groups of order at
//! most 8 used as fixtures.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GroupRepr", into = "GroupRepr")]
pub struct GroupTable {
    order: usize,
    cells: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct GroupRepr {
    order: usize,
    table: Vec<Vec<usize>>,
    identity: usize,
}

impl TryFrom<GroupRepr> for GroupTable {
    type Error = Error;

    fn try_from(repr: GroupRepr) -> Result<Self> {
        if repr.table.len() != repr.order {
            return Err(Error::InvalidGroup(format!(
                "declared order {} but table has {} rows",
                repr.order,
                repr.table.len()
            )));
        }
        GroupTable::new(&repr.table, repr.identity)
    }
}

impl From<GroupTable> for GroupRepr {
    fn from(g: GroupTable) -> Self {
        GroupRepr {
            order: g.order,
            table: (0..g.order)
                .map(|x| (0..g.order).map(|y| g.mul(x, y)).collect())
                .collect(),
            identity: g.identity,
        }
    }
}

impl GroupTable {
    /// Validates the identity, associativity and inverse laws exactly.
    pub fn new(rows: &[Vec<usize>], identity: usize) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidGroup("order must be positive".into()));
        }
        if rows
            .iter()
            .any(|r| r.len() != n || r.iter().any(|&v| v >= n))
        {
            return Err(Error::InvalidGroup(
                "table is not an n×n table over 0..n".into(),
            ));
        }
        if identity >= n {
            return Err(Error::InvalidGroup(format!(
                "identity {identity} out of range"
            )));
        }
        let cells = rows.concat();
        let mul = |a: usize, b: usize| cells[a * n + b];

        if let Some(x) = (0..n).find(|&x| mul(identity, x) != x || mul(x, identity) != x) {
            return Err(Error::InvalidGroup(format!(
                "{identity} is not a two-sided identity (fails at {x})"
            )));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                        return Err(Error::InvalidGroup(format!(
                            "associativity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        let inverse = (0..n)
            .map(|a| {
                (0..n)
                    .find(|&b| mul(a, b) == identity && mul(b, a) == identity)
                    .ok_or_else(|| Error::InvalidGroup(format!("{a} has no inverse")))
            })
            .collect::<Result<Vec<_>>>()?;

        Ok(GroupTable {
            order: n,
            cells,
            identity,
            inverse,
        })
    }

    /// Indexes `elements` in the given order; `elements` must be closed under
    /// `mul` and the first element must be the identity.
    pub fn from_elements<T: PartialEq>(elements: &[T], mul: impl Fn(&T, &T) -> T) -> Result<Self> {
        let index = |v: &T| {
            elements
                .iter()
                .position(|e| e == v)
                .ok_or_else(|| Error::InvalidGroup("element set is not closed".into()))
        };
        let rows = elements
            .iter()
            .map(|a| elements.iter().map(|b| index(&mul(a, b))).collect())
            .collect::<Result<Vec<Vec<usize>>>>()?;
        Self::new(&rows, 0)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.cells[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn inverses(&self) -> &[usize] {
        &self.inverse
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn cyclic(n: usize) -> Self {
        let rows: Vec<Vec<usize>> = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        Self::new(&rows, 0).expect("cyclic group")
    }

    /// Pairs `(a, b)` indexed as `a · |H| + b`.
    pub fn direct_product(g: &GroupTable, h: &GroupTable) -> Self {
        let m = h.order;
        let n = g.order * m;
        let rows: Vec<Vec<usize>> = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| g.mul(x / m, y / m) * m + h.mul(x % m, y % m))
                    .collect()
            })
            .collect();
        Self::new(&rows, g.identity * m + h.identity).expect("product of groups")
    }

    /// All permutations of `0..k` under composition `(σ·τ)(i) = σ(τ(i))`,
    /// listed lexicographically (identity first).
    pub fn symmetric(k: usize) -> Self {
        let perms = permutations(k);
        Self::from_elements(&perms, |s, t| compose(s, t)).expect("symmetric group")
    }

    /// Symmetries of the regular `k`-gon acting on its vertices.
    pub fn dihedral(k: usize) -> Self {
        let rotation: Vec<usize> = (0..k).map(|i| (i + 1) % k).collect();
        let reflection: Vec<usize> = (0..k).map(|i| (k - i) % k).collect();
        let elements = closure(&[rotation, reflection], k);
        Self::from_elements(&elements, |s, t| compose(s, t)).expect("dihedral group")
    }

    /// `{±1, ±i, ±j, ±k}`, each element stored as (sign, unit) with unit
    /// 0 = 1, 1 = i, 2 = j, 3 = k.
    pub fn quaternion() -> Self {
        // unit products: (sign, unit) of e_a · e_b
        const UNIT: [[(i8, usize); 4]; 4] = [
            [(1, 0), (1, 1), (1, 2), (1, 3)],
            [(1, 1), (-1, 0), (1, 3), (-1, 2)],
            [(1, 2), (-1, 3), (-1, 0), (1, 1)],
            [(1, 3), (1, 2), (-1, 1), (-1, 0)],
        ];
        let elements: Vec<(i8, usize)> = [1i8, -1]
            .iter()
            .flat_map(|&s| (0..4).map(move |u| (s, u)))
            .collect();
        Self::from_elements(&elements, |&(s, a), &(t, b)| {
            let (sign, unit) = UNIT[a][b];
            (s * t * sign, unit)
        })
        .expect("quaternion group")
    }
}

fn compose(s: &[usize], t: &[usize]) -> Vec<usize> {
    t.iter().map(|&i| s[i]).collect()
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    use itertools::Itertools;
    (0..k).permutations(k).collect()
}

/// Subgroup of `S_k` generated by `generators`, identity first, remaining
/// elements sorted.
fn closure(generators: &[Vec<usize>], k: usize) -> Vec<Vec<usize>> {
    let identity: Vec<usize> = (0..k).collect();
    let mut elements = vec![identity];
    let mut frontier = elements.clone();
    while let Some(e) = frontier.pop() {
        for g in generators {
            let next = compose(g, &e);
            if !elements.contains(&next) {
                elements.push(next.clone());
                frontier.push(next);
            }
        }
    }
    elements[1..].sort();
    elements
}

/// Every group of order at most 8 up to isomorphism, with a short name.
pub fn small_groups() -> Vec<(&'static str, GroupTable)> {
    let z = GroupTable::cyclic;
    vec![
        ("Z1", z(1)),
        ("Z2", z(2)),
        ("Z3", z(3)),
        ("Z4", z(4)),
        ("Z2xZ2", GroupTable::direct_product(&z(2), &z(2))),
        ("Z5", z(5)),
        ("Z6", z(6)),
        ("S3", GroupTable::symmetric(3)),
        ("Z7", z(7)),
        ("Z8", z(8)),
        ("Z2xZ4", GroupTable::direct_product(&z(2), &z(4))),
        (
            "Z2xZ2xZ2",
            GroupTable::direct_product(&GroupTable::direct_product(&z(2), &z(2)), &z(2)),
        ),
        ("D4", GroupTable::dihedral(4)),
        ("Q8", GroupTable::quaternion()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn element_orders(g: &GroupTable) -> Vec<usize> {
        let mut orders: Vec<usize> = (0..g.order())
            .map(|a| {
                let mut k = 1;
                let mut p = a;
                while p != g.identity() {
                    p = g.mul(p, a);
                    k += 1;
                }
                k
            })
            .collect();
        orders.sort();
        orders
    }

    #[test]
    fn fixture_groups_are_pairwise_distinct() {
        let groups = small_groups();
        assert_eq!(groups.len(), 14);
        // Order, abelianness and element-order multiset separate all of them.
        let mut keys: Vec<_> = groups
            .iter()
            .map(|(_, g)| (g.order(), g.is_abelian(), element_orders(g)))
            .collect();
        keys.sort();
        keys.dedup();
        assert_eq!(keys.len(), 14);
    }

    #[test]
    fn nonabelian_fixtures() {
        for (name, g) in small_groups() {
            let expected = matches!(name, "S3" | "D4" | "Q8");
            assert_eq!(!g.is_abelian(), expected, "{name}");
        }
    }

    #[test]
    fn inverses_are_consistent() {
        for (_, g) in small_groups() {
            for a in 0..g.order() {
                assert_eq!(g.mul(a, g.inv(a)), g.identity());
            }
        }
    }

    #[test]
    fn rejects_non_groups() {
        // Not associative: a ∘ b = a − b mod 3.
        let rows: Vec<Vec<usize>> = (0..3)
            .map(|a| (0..3).map(|b| (a + 3 - b) % 3).collect())
            .collect();
        assert!(GroupTable::new(&rows, 0).is_err());
        // Left projection has no two-sided identity.
        assert!(GroupTable::new(&[vec![0, 0], vec![1, 1]], 0).is_err());
        assert!(GroupTable::new(&[vec![0, 1], vec![1, 0]], 2).is_err());
    }

    #[test]
    fn json_round_trip() {
        let g = GroupTable::symmetric(3);
        let json = serde_json::to_string(&g).unwrap();
        assert!(json.starts_with(r#"{"order":6,"table":[[0,1,2,3,4,5]"#));
        assert_eq!(serde_json::from_str::<GroupTable>(&json).unwrap(), g);
    }
}
