//! Finite groups as validated Cayley tables.
//!
//! Elements are dense indices `0..order`; every other subsystem consumes
//! indices only. Group axioms are checked exhaustively at construction for
//! orders up to [`MAX_VALIDATED_ORDER`]; larger tables must be constructed
//! through [`FiniteGroup::from_cayley_table_trusted`].

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest order for which the O(n^3) associativity check runs at
/// construction time.
pub const MAX_VALIDATED_ORDER: usize = 512;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotAGroupReason {
    /// Some row or column of the table is not a bijection.
    NotABijection { row: usize },
    /// No two-sided identity element exists.
    NoIdentity,
    /// Element `x` has no inverse.
    MissingInverse { x: usize },
    /// First failing triple of the associativity check.
    NonAssociative { x: usize, y: usize, z: usize },
}

impl std::fmt::Display for NotAGroupReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NotAGroupReason::NotABijection { row } => write!(f, "row {row} is not a bijection"),
            NotAGroupReason::NoIdentity => write!(f, "no identity element"),
            NotAGroupReason::MissingInverse { x } => write!(f, "element {x} has no inverse"),
            NotAGroupReason::NonAssociative { x, y, z } => {
                write!(f, "associativity fails at ({x}, {y}, {z})")
            }
        }
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("not a group: {0}")]
    NotAGroup(NotAGroupReason),
    #[error("malformed Cayley table: {0}")]
    MalformedTable(String),
    #[error("unsupported parameter: {0}")]
    UnsupportedParameter(String),
    #[error("subset is not closed: product {a} * {b} = {product} is outside the subset")]
    NotClosed { a: usize, b: usize, product: usize },
    #[error("order {order} exceeds the validated bound {MAX_VALIDATED_ORDER}; use the trusted constructor")]
    OrderTooLarge { order: usize },
}

/// A finite group on the element set `0..order` with full Cayley table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    cayley: Vec<usize>, // row-major order x order
    identity: usize,
    inverses: Vec<usize>,
    label: Option<String>,
}

/// Builtin families available through [`builtin_group`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Cyclic,
    Dihedral,
    Symmetric,
    Quaternion,
}

/// Conjugation orbits of a group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyData {
    /// Classes sorted by their minimal element; each class is sorted.
    pub classes: Vec<Vec<usize>>,
    /// Minimal element of each class.
    pub representatives: Vec<usize>,
    /// Element index to class id.
    pub class_of: Vec<usize>,
}

impl ConjugacyData {
    pub fn count(&self) -> usize {
        self.classes.len()
    }
}

/// A subgroup given by its sorted member set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup<'g> {
    pub parent: &'g FiniteGroup,
    pub members: Vec<usize>,
}

/// A subgroup re-indexed as a standalone group, with the member-to-parent
/// index map retained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddedGroup {
    pub group: FiniteGroup,
    /// `to_parent[i]` is the parent index of the standalone element `i`.
    pub to_parent: Vec<usize>,
}

impl FiniteGroup {
    /// Validates a Cayley table and locates identity and inverses.
    pub fn from_cayley_table(table: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        Self::from_table_inner(table, None, false)
    }

    pub fn from_cayley_table_labeled(
        table: Vec<Vec<usize>>,
        label: impl Into<String>,
    ) -> Result<Self, GroupError> {
        Self::from_table_inner(table, Some(label.into()), false)
    }

    /// Skips the exhaustive associativity check; identity/inverse location
    /// and the bijection check still run. Only needed above
    /// [`MAX_VALIDATED_ORDER`].
    pub fn from_cayley_table_trusted(table: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        Self::from_table_inner(table, None, true)
    }

    fn from_table_inner(
        table: Vec<Vec<usize>>,
        label: Option<String>,
        trusted: bool,
    ) -> Result<Self, GroupError> {
        let order = table.len();
        if order == 0 {
            return Err(GroupError::MalformedTable("empty table".into()));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != order {
                return Err(GroupError::MalformedTable(format!(
                    "row {i} has length {} but order is {order}",
                    row.len()
                )));
            }
            if let Some(&v) = row.iter().find(|&&v| v >= order) {
                return Err(GroupError::MalformedTable(format!(
                    "entry {v} in row {i} out of range"
                )));
            }
        }
        if order > MAX_VALIDATED_ORDER && !trusted {
            return Err(GroupError::OrderTooLarge { order });
        }
        let cayley: Vec<usize> = table.iter().flatten().copied().collect();
        let at = |x: usize, y: usize| cayley[x * order + y];

        // each row and column must be a permutation
        for x in 0..order {
            let mut seen_row = vec![false; order];
            let mut seen_col = vec![false; order];
            for y in 0..order {
                let r = at(x, y);
                let c = at(y, x);
                if seen_row[r] || seen_col[c] {
                    return Err(GroupError::NotAGroup(NotAGroupReason::NotABijection {
                        row: x,
                    }));
                }
                seen_row[r] = true;
                seen_col[c] = true;
            }
        }

        let identity = (0..order)
            .find(|&e| (0..order).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or(GroupError::NotAGroup(NotAGroupReason::NoIdentity))?;

        let mut inverses = vec![0usize; order];
        for x in 0..order {
            match (0..order).find(|&y| at(x, y) == identity && at(y, x) == identity) {
                Some(y) => inverses[x] = y,
                None => return Err(GroupError::NotAGroup(NotAGroupReason::MissingInverse { x })),
            }
        }

        if !trusted {
            for x in 0..order {
                for y in 0..order {
                    let xy = at(x, y);
                    for z in 0..order {
                        if at(xy, z) != at(x, at(y, z)) {
                            return Err(GroupError::NotAGroup(NotAGroupReason::NonAssociative {
                                x,
                                y,
                                z,
                            }));
                        }
                    }
                }
            }
        }

        Ok(FiniteGroup {
            order,
            cayley,
            identity,
            inverses,
            label,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.cayley[x * self.order + y]
    }

    #[inline]
    pub fn inv(&self, x: usize) -> usize {
        self.inverses[x]
    }

    /// Product of a slice of elements, left to right; identity when empty.
    pub fn product(&self, xs: &[usize]) -> usize {
        xs.iter().fold(self.identity, |acc, &x| self.mul(acc, x))
    }

    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|x| (0..self.order).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }
}

/// Serde schema of the Cayley-table file format.
#[derive(Debug, Serialize, Deserialize)]
pub struct CayleyFile {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

/// Parses the JSON Cayley-table format. Identity and inverses are inferred,
/// never declared.
pub fn group_from_json(json: &str) -> Result<FiniteGroup, GroupError> {
    let file: CayleyFile =
        serde_json::from_str(json).map_err(|e| GroupError::MalformedTable(e.to_string()))?;
    if file.table.len() != file.order {
        return Err(GroupError::MalformedTable(format!(
            "declared order {} does not match table size {}",
            file.order,
            file.table.len()
        )));
    }
    match file.labels {
        Some(labels) => {
            if labels.len() != file.order {
                return Err(GroupError::MalformedTable(
                    "labels length does not match order".into(),
                ));
            }
            FiniteGroup::from_cayley_table_labeled(file.table, labels.join(","))
        }
        None => FiniteGroup::from_cayley_table(file.table),
    }
}

/// Constructs one of the builtin families with a documented, deterministic
/// element indexing:
///
/// * cyclic n: residues `0..n`, addition mod n;
/// * dihedral n (order 2n, n >= 2): rotations `r^i` at `i`, reflections
///   `r^i s` at `n + i`;
/// * symmetric n (n <= 5): permutations of `0..n` in lexicographic one-line
///   order, composed as `(a * b)(x) = a(b(x))`;
/// * quaternion (order 8): `1, -1, i, -i, j, -j, k, -k` at `0..8`.
pub fn builtin_group(family: Family, n: usize) -> Result<FiniteGroup, GroupError> {
    let (table, label) = match family {
        Family::Cyclic => {
            if n == 0 {
                return Err(GroupError::UnsupportedParameter("cyclic requires n >= 1".into()));
            }
            let t = (0..n)
                .map(|i| (0..n).map(|j| (i + j) % n).collect())
                .collect();
            (t, format!("C{n}"))
        }
        Family::Dihedral => {
            if n < 2 {
                return Err(GroupError::UnsupportedParameter(
                    "dihedral requires n >= 2".into(),
                ));
            }
            let order = 2 * n;
            let mut t = vec![vec![0usize; order]; order];
            for a in 0..order {
                for b in 0..order {
                    let (i, ra) = (a % n, a >= n);
                    let (j, rb) = (b % n, b >= n);
                    // r^i s^e * r^j s^f with s r = r^{-1} s
                    let exp = if ra { (i + n - j) % n } else { (i + j) % n };
                    t[a][b] = if ra != rb { n + exp } else { exp };
                }
            }
            (t, format!("D{n}"))
        }
        Family::Symmetric => {
            if n == 0 || n > 5 {
                return Err(GroupError::UnsupportedParameter(
                    "symmetric requires 1 <= n <= 5".into(),
                ));
            }
            let perms = permutations_lex(n);
            let index: std::collections::BTreeMap<Vec<usize>, usize> = perms
                .iter()
                .enumerate()
                .map(|(i, p)| (p.clone(), i))
                .collect();
            let t = perms
                .iter()
                .map(|a| {
                    perms
                        .iter()
                        .map(|b| {
                            let comp: Vec<usize> = (0..n).map(|x| a[b[x]]).collect();
                            index[&comp]
                        })
                        .collect()
                })
                .collect();
            (t, format!("S{n}"))
        }
        Family::Quaternion => {
            if n != 8 {
                return Err(GroupError::UnsupportedParameter(
                    "quaternion has fixed order 8".into(),
                ));
            }
            (quaternion_table(), "Q8".to_string())
        }
    };
    FiniteGroup::from_cayley_table_labeled(table, label)
}

fn permutations_lex(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    let mut used = vec![false; n];
    fn rec(n: usize, current: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                current.push(v);
                rec(n, current, used, out);
                current.pop();
                used[v] = false;
            }
        }
    }
    rec(n, &mut current, &mut used, &mut out);
    out
}

fn quaternion_table() -> Vec<Vec<usize>> {
    // units as (sign, axis): axis 0 = 1, 1 = i, 2 = j, 3 = k
    // index 2*axis + (0 if +, 1 if -)
    let idx = |sign: i32, axis: usize| -> usize { 2 * axis + usize::from(sign < 0) };
    let mul = |(sa, aa): (i32, usize), (sb, ab): (i32, usize)| -> (i32, usize) {
        let s = sa * sb;
        match (aa, ab) {
            (0, x) => (s, x),
            (x, 0) => (s, x),
            (x, y) if x == y => (-s, 0),
            (1, 2) => (s, 3),
            (2, 1) => (-s, 3),
            (2, 3) => (s, 1),
            (3, 2) => (-s, 1),
            (3, 1) => (s, 2),
            (1, 3) => (-s, 2),
            _ => unreachable!(),
        }
    };
    let units: Vec<(i32, usize)> = (0..8)
        .map(|i| (if i % 2 == 0 { 1 } else { -1 }, i / 2))
        .collect();
    units
        .iter()
        .map(|&a| units.iter().map(|&b| {
            let (s, ax) = mul(a, b);
            idx(s, ax)
        }).collect())
        .collect()
}

/// Orbits of the conjugation action `x -> g x g^{-1}`.
pub fn conjugacy_classes(group: &FiniteGroup) -> ConjugacyData {
    let n = group.order();
    let mut class_of = vec![usize::MAX; n];
    let mut classes = Vec::new();
    let mut representatives = Vec::new();
    for x in 0..n {
        if class_of[x] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let mut orbit: Vec<usize> = (0..n).map(|g| group.conjugate(g, x)).collect();
        orbit.sort_unstable();
        orbit.dedup();
        for &y in &orbit {
            class_of[y] = id;
        }
        representatives.push(orbit[0]);
        classes.push(orbit);
    }
    ConjugacyData {
        classes,
        representatives,
        class_of,
    }
}

/// The centralizer `{x : xg = gx}` of `g`.
pub fn centralizer(group: &FiniteGroup, g: usize) -> Subgroup<'_> {
    assert!(g < group.order(), "element index out of range");
    let members = group
        .elements()
        .filter(|&x| group.mul(x, g) == group.mul(g, x))
        .collect();
    Subgroup {
        parent: group,
        members,
    }
}

/// Re-indexes a subgroup as a standalone group, re-checking closure.
pub fn subgroup_as_group(sub: &Subgroup<'_>) -> Result<EmbeddedGroup, GroupError> {
    let parent = sub.parent;
    let members = &sub.members;
    let index_of: std::collections::BTreeMap<usize, usize> = members
        .iter()
        .enumerate()
        .map(|(i, &m)| (m, i))
        .collect();
    let mut table = vec![vec![0usize; members.len()]; members.len()];
    for (i, &a) in members.iter().enumerate() {
        for (j, &b) in members.iter().enumerate() {
            let p = parent.mul(a, b);
            match index_of.get(&p) {
                Some(&k) => table[i][j] = k,
                None => return Err(GroupError::NotClosed { a, b, product: p }),
            }
        }
    }
    let group = FiniteGroup::from_cayley_table(table)?;
    Ok(EmbeddedGroup {
        group,
        to_parent: members.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c2_from_table() {
        let g = FiniteGroup::from_cayley_table(vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.identity(), 0);
        assert_eq!(g.inv(1), 1);
    }

    #[test]
    fn bad_row_rejected() {
        let err = FiniteGroup::from_cayley_table(vec![vec![0, 1], vec![1, 1]]).unwrap_err();
        assert!(matches!(
            err,
            GroupError::NotAGroup(
                NotAGroupReason::NotABijection { .. }
                    | NotAGroupReason::NoIdentity
                    | NotAGroupReason::MissingInverse { .. }
            )
        ));
    }

    #[test]
    fn klein_four_hand_table() {
        // exhaustive axiom check against a hand-written table
        let t = vec![
            vec![0, 1, 2, 3],
            vec![1, 0, 3, 2],
            vec![2, 3, 0, 1],
            vec![3, 2, 1, 0],
        ];
        let g = FiniteGroup::from_cayley_table(t).unwrap();
        assert_eq!(g.order(), 4);
        assert!(g.is_abelian());
        for x in g.elements() {
            assert_eq!(g.inv(x), x);
        }
    }

    #[test]
    fn non_associative_rejected() {
        // rows/columns are latin but the quasigroup is not associative
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = FiniteGroup::from_cayley_table(t).unwrap_err();
        assert!(matches!(
            err,
            GroupError::NotAGroup(NotAGroupReason::NonAssociative { .. })
        ));
    }

    #[test]
    fn builtin_orders_and_abelianness() {
        assert_eq!(builtin_group(Family::Symmetric, 3).unwrap().order(), 6);
        assert!(!builtin_group(Family::Symmetric, 3).unwrap().is_abelian());
        let c5 = builtin_group(Family::Cyclic, 5).unwrap();
        assert!(c5.is_abelian());
        assert_eq!(conjugacy_classes(&c5).count(), 5);
        assert!(builtin_group(Family::Symmetric, 9).is_err());
        assert!(builtin_group(Family::Dihedral, 1).is_err());
    }

    #[test]
    fn dihedral_4_classes() {
        // brute-force conjugation orbits on the constructed table
        let d4 = builtin_group(Family::Dihedral, 4).unwrap();
        assert_eq!(d4.order(), 8);
        let data = conjugacy_classes(&d4);
        assert_eq!(data.count(), 5);
        let mut sizes: Vec<usize> = data.classes.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 2, 2, 2]);
    }

    #[test]
    fn s3_classes_and_centralizers() {
        let s3 = builtin_group(Family::Symmetric, 3).unwrap();
        let data = conjugacy_classes(&s3);
        let mut sizes: Vec<usize> = data.classes.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);
        // orbit-stabilizer for every element
        for x in s3.elements() {
            let c = centralizer(&s3, x);
            let class_size = data.classes[data.class_of[x]].len();
            assert_eq!(c.members.len() * class_size, s3.order());
        }
        // a 3-cycle has centralizer of order 3
        let three_cycle = s3
            .elements()
            .find(|&x| {
                let x2 = s3.mul(x, x);
                x != s3.identity() && x2 != s3.identity() && s3.mul(x2, x) == s3.identity()
            })
            .unwrap();
        assert_eq!(centralizer(&s3, three_cycle).members.len(), 3);
        assert_eq!(
            centralizer(&s3, s3.identity()).members.len(),
            s3.order()
        );
    }

    #[test]
    fn quaternion_classes() {
        let q8 = builtin_group(Family::Quaternion, 8).unwrap();
        assert_eq!(q8.order(), 8);
        let data = conjugacy_classes(&q8);
        let mut sizes: Vec<usize> = data.classes.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 2, 2, 2]);
    }

    #[test]
    fn subgroup_roundtrip() {
        let s3 = builtin_group(Family::Symmetric, 3).unwrap();
        // cyclic subgroup generated by a 3-cycle
        let g = s3
            .elements()
            .find(|&x| centralizer(&s3, x).members.len() == 3)
            .unwrap();
        let members = vec![s3.identity(), g, s3.mul(g, g)];
        let mut members_sorted = members.clone();
        members_sorted.sort_unstable();
        let sub = Subgroup {
            parent: &s3,
            members: members_sorted,
        };
        let emb = subgroup_as_group(&sub).unwrap();
        assert_eq!(emb.group.order(), 3);
        assert!(emb.group.is_abelian());
        // product compatible with the parent through the index map
        for i in emb.group.elements() {
            for j in emb.group.elements() {
                assert_eq!(
                    emb.to_parent[emb.group.mul(i, j)],
                    s3.mul(emb.to_parent[i], emb.to_parent[j])
                );
            }
        }
    }

    #[test]
    fn trivial_subgroup_and_not_closed() {
        let s3 = builtin_group(Family::Symmetric, 3).unwrap();
        let triv = Subgroup {
            parent: &s3,
            members: vec![s3.identity()],
        };
        assert_eq!(subgroup_as_group(&triv).unwrap().group.order(), 1);

        let transposition = s3
            .elements()
            .find(|&x| x != s3.identity() && s3.mul(x, x) == s3.identity())
            .unwrap();
        let three_cycle = s3
            .elements()
            .find(|&x| centralizer(&s3, x).members.len() == 3)
            .unwrap();
        let mut members = vec![s3.identity(), transposition, three_cycle];
        members.sort_unstable();
        let bad = Subgroup {
            parent: &s3,
            members,
        };
        assert!(matches!(
            subgroup_as_group(&bad),
            Err(GroupError::NotClosed { .. })
        ));
    }

    #[test]
    fn class_sizes_divide_order() {
        for g in [
            builtin_group(Family::Symmetric, 4).unwrap(),
            builtin_group(Family::Dihedral, 6).unwrap(),
            builtin_group(Family::Quaternion, 8).unwrap(),
        ] {
            let data = conjugacy_classes(&g);
            let total: usize = data.classes.iter().map(Vec::len).sum();
            assert_eq!(total, g.order());
            for c in &data.classes {
                assert_eq!(g.order() % c.len(), 0);
            }
        }
    }

    #[test]
    fn json_ingestion() {
        let json = r#"{ "order": 2, "table": [[0,1],[1,0]] }"#;
        let g = group_from_json(json).unwrap();
        assert_eq!(g.order(), 2);
        assert!(group_from_json(r#"{ "order": 3, "table": [[0,1],[1,0]] }"#).is_err());
    }
}
