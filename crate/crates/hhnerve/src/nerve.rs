//! Simplicial chain and cochain complexes of groupoid nerves.
//!
//! Three categories built from a finite group G are supported: the adjoint
//! groupoid (objects are elements, an arrow labeled `g` sends `a` to
//! `g a g^{-1}`), the right-action groupoid (objects are elements, an arrow
//! labeled `g` sends `a` to `a g`), and the one-object category whose nerve
//! is the classifying space of G.
//!
//! A k-simplex is stored as `(a_0; g_1, ..., g_k)`: a base object plus the
//! arrow labels, with the arrow leaving `a_0` labeled `g_k` and the labels
//! read right to left along the chain. The j-th derived object is obtained
//! by acting with `g_{k-j}` on the previous one.
//!
//! The boundary uses the face signs `(-1)^(m-j)`, which differ from the
//! usual alternating sum by the global unit `(-1)^m` in each degree m; the
//! complexes are isomorphic, and this normalization is what makes the
//! cyclic-bar comparison map commute on the nose. The cochain complexes
//! keep the plain alternating signs.

use crate::exactla::SparseMatrix;
use crate::fingroup::FiniteGroup;
use crate::hochschild::{power, tuple_from_index, tuple_index, ChainComplexSlice, Orientation};

/// Which category's nerve to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupoidKind {
    /// Conjugation action on the elements of G.
    Adjoint,
    /// Right translation on the elements of G.
    Right,
    /// One object, arrows G: the classifying space of G.
    OneObject,
}

impl GroupoidKind {
    pub fn object_count(&self, order: usize) -> usize {
        match self {
            GroupoidKind::OneObject => 1,
            _ => order,
        }
    }

    /// Target of the arrow labeled `g` leaving object `a`.
    pub fn act(&self, group: &FiniteGroup, g: usize, a: usize) -> usize {
        match self {
            GroupoidKind::Adjoint => group.conjugate(g, a),
            GroupoidKind::Right => group.mul(a, g),
            GroupoidKind::OneObject => 0,
        }
    }

    /// Label of the composite of an arrow labeled `first` followed by one
    /// labeled `second`.
    pub fn compose(&self, group: &FiniteGroup, first: usize, second: usize) -> usize {
        match self {
            GroupoidKind::Adjoint => group.mul(second, first),
            _ => group.mul(first, second),
        }
    }

    /// Dimension of the degree-k simplex space.
    pub fn simplex_count(&self, order: usize, k: usize) -> usize {
        self.object_count(order)
            .checked_mul(power(order, k))
            .expect("simplex count overflows usize")
    }
}

/// A nerve simplex: base object plus arrow labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Simplex {
    pub base: usize,
    pub labels: Vec<usize>,
}

impl Simplex {
    /// All objects along the simplex, starting at the base.
    pub fn objects(&self, group: &FiniteGroup, kind: GroupoidKind) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.labels.len() + 1);
        let mut a = self.base;
        out.push(a);
        for &g in self.labels.iter().rev() {
            a = kind.act(group, g, a);
            out.push(a);
        }
        out
    }
}

/// Basis index of a simplex: base object most significant, then the labels.
pub fn simplex_index(order: usize, kind: GroupoidKind, s: &Simplex) -> usize {
    let t = tuple_index(order, &s.labels);
    match kind {
        GroupoidKind::OneObject => t,
        _ => s.base * power(order, s.labels.len()) + t,
    }
}

pub fn simplex_from_index(order: usize, kind: GroupoidKind, k: usize, idx: usize) -> Simplex {
    let block = power(order, k);
    let (base, rest) = match kind {
        GroupoidKind::OneObject => (0, idx),
        _ => (idx / block, idx % block),
    };
    Simplex {
        base,
        labels: tuple_from_index(order, k, rest),
    }
}

/// The j-th face of a degree-m simplex, `0 <= j <= m`.
pub fn face(group: &FiniteGroup, kind: GroupoidKind, s: &Simplex, j: usize) -> Simplex {
    let m = s.labels.len();
    debug_assert!(j <= m && m >= 1);
    if j == 0 {
        // drop the base object; the arrow leaving it is labels[m-1]
        Simplex {
            base: kind.act(group, s.labels[m - 1], s.base),
            labels: s.labels[..m - 1].to_vec(),
        }
    } else if j == m {
        // drop the far object and the arrow entering it
        Simplex {
            base: s.base,
            labels: s.labels[1..].to_vec(),
        }
    } else {
        // compose arrows j and j+1 along the chain; the first-applied of
        // the pair carries the label at the higher position
        let p = m - j - 1;
        let mut labels = Vec::with_capacity(m - 1);
        labels.extend_from_slice(&s.labels[..p]);
        labels.push(kind.compose(group, s.labels[p + 1], s.labels[p]));
        labels.extend_from_slice(&s.labels[p + 2..]);
        Simplex {
            base: s.base,
            labels,
        }
    }
}

/// The simplicial chain complex of the nerve up to `max_degree`, with the
/// boundary `∂ = Σ_j (-1)^(m-j) d_j`.
pub fn build_nerve_chains(
    group: &FiniteGroup,
    kind: GroupoidKind,
    max_degree: usize,
) -> ChainComplexSlice {
    let n = group.order();
    let dims: Vec<usize> = (0..=max_degree).map(|k| kind.simplex_count(n, k)).collect();
    let mut maps = Vec::with_capacity(max_degree);
    for m in 1..=max_degree {
        let mut trips = Vec::with_capacity(dims[m] * (m + 1));
        for col in 0..dims[m] {
            let s = simplex_from_index(n, kind, m, col);
            for j in 0..=m {
                let f = face(group, kind, &s, j);
                let sign = if (m - j) % 2 == 0 { 1 } else { -1 };
                trips.push((simplex_index(n, kind, &f), col, sign));
            }
        }
        maps.push(SparseMatrix::from_triplets(dims[m - 1], dims[m], trips));
    }
    ChainComplexSlice::new(Orientation::Homological, dims, maps)
}

/// The simplicial cochain complex of the nerve, the transpose of the plain
/// alternating-sign boundary: `(δf)(σ) = Σ_j (-1)^j f(d_j σ)`.
pub fn build_nerve_cochains(
    group: &FiniteGroup,
    kind: GroupoidKind,
    max_degree: usize,
) -> ChainComplexSlice {
    let n = group.order();
    let dims: Vec<usize> = (0..=max_degree).map(|k| kind.simplex_count(n, k)).collect();
    let mut maps = Vec::with_capacity(max_degree);
    for m in 1..=max_degree {
        let mut trips = Vec::with_capacity(dims[m] * (m + 1));
        for row in 0..dims[m] {
            let s = simplex_from_index(n, kind, m, row);
            for j in 0..=m {
                let f = face(group, kind, &s, j);
                let sign = if j % 2 == 0 { 1 } else { -1 };
                trips.push((row, simplex_index(n, kind, &f), sign));
            }
        }
        maps.push(SparseMatrix::from_triplets(dims[m], dims[m - 1], trips));
    }
    ChainComplexSlice::new(Orientation::Cohomological, dims, maps)
}

/// The (unnormalized) bar complex of G: degree-k chains are spanned by the
/// tuples `[h_1 | ... | h_k]`, with faces dropping an end or multiplying
/// neighbours. Written independently of the nerve machinery; with the
/// storage order reversed (`t_i = h_{k+1-i}`, `t_1` most significant) and
/// the `(-1)^(k-j)` signs it reproduces the one-object nerve boundary
/// matrix for matrix.
pub fn build_bar_complex(group: &FiniteGroup, max_degree: usize) -> ChainComplexSlice {
    let n = group.order();
    let dims: Vec<usize> = (0..=max_degree).map(|k| power(n, k)).collect();
    let mut maps = Vec::with_capacity(max_degree);
    for k in 1..=max_degree {
        let mut trips = Vec::with_capacity(dims[k] * (k + 1));
        for col in 0..dims[k] {
            let t = tuple_from_index(n, k, col);
            let h: Vec<usize> = t.iter().rev().copied().collect();
            for j in 0..=k {
                let face_h: Vec<usize> = if j == 0 {
                    h[1..].to_vec()
                } else if j == k {
                    h[..k - 1].to_vec()
                } else {
                    let mut v = Vec::with_capacity(k - 1);
                    v.extend_from_slice(&h[..j - 1]);
                    v.push(group.mul(h[j - 1], h[j]));
                    v.extend_from_slice(&h[j + 1..]);
                    v
                };
                let face_t: Vec<usize> = face_h.iter().rev().copied().collect();
                let sign = if (k - j) % 2 == 0 { 1 } else { -1 };
                trips.push((tuple_index(n, &face_t), col, sign));
            }
        }
        maps.push(SparseMatrix::from_triplets(dims[k - 1], dims[k], trips));
    }
    ChainComplexSlice::new(Orientation::Homological, dims, maps)
}

/// A nerve chain complex together with the groupoid it came from and, for
/// the adjoint kind, the component (conjugacy class) of every object.
#[derive(Debug, Clone)]
pub struct NerveComplex {
    pub kind: GroupoidKind,
    pub complex: ChainComplexSlice,
    /// Object index to component id; adjoint kind only.
    pub component_of: Option<Vec<usize>>,
}

pub fn build_adjoint_nerve(group: &FiniteGroup, max_degree: usize) -> NerveComplex {
    NerveComplex {
        kind: GroupoidKind::Adjoint,
        complex: build_nerve_chains(group, GroupoidKind::Adjoint, max_degree),
        component_of: Some(crate::fingroup::conjugacy_classes(group).class_of),
    }
}

pub fn build_right_nerve(group: &FiniteGroup, max_degree: usize) -> NerveComplex {
    NerveComplex {
        kind: GroupoidKind::Right,
        complex: build_nerve_chains(group, GroupoidKind::Right, max_degree),
        component_of: None,
    }
}

pub fn build_one_object_nerve(group: &FiniteGroup, max_degree: usize) -> NerveComplex {
    NerveComplex {
        kind: GroupoidKind::OneObject,
        complex: build_nerve_chains(group, GroupoidKind::OneObject, max_degree),
        component_of: None,
    }
}

/// Combinatorial form of the quotient statement for the right-action
/// groupoid: G acts freely on its nerve simplices by translating the base
/// object, every orbit has size |G|, and the orbit set in degree k is in
/// bijection with the degree-k simplices of the one-object nerve (drop the
/// base object). Returns the per-degree orbit counts.
pub fn verify_right_quotient(group: &FiniteGroup, max_degree: usize) -> Vec<usize> {
    let n = group.order();
    let kind = GroupoidKind::Right;
    let mut orbit_counts = Vec::with_capacity(max_degree + 1);
    for k in 0..=max_degree {
        let mut seen = vec![false; kind.simplex_count(n, k)];
        let mut orbits = 0usize;
        for idx in 0..seen.len() {
            if seen[idx] {
                continue;
            }
            let s = simplex_from_index(n, kind, k, idx);
            let mut size = 0usize;
            for x in group.elements() {
                let moved = Simplex {
                    base: group.mul(x, s.base),
                    labels: s.labels.clone(),
                };
                let j = simplex_index(n, kind, &moved);
                assert!(
                    !seen[j] || j == idx || size > 0,
                    "orbit structure inconsistent"
                );
                if !seen[j] {
                    seen[j] = true;
                    size += 1;
                }
            }
            assert_eq!(size, n, "the translation action is not free");
            orbits += 1;
        }
        assert_eq!(
            orbits,
            GroupoidKind::OneObject.simplex_count(n, k),
            "orbit count differs from the one-object nerve in degree {k}"
        );
        orbit_counts.push(orbits);
    }
    orbit_counts
}

/// Connected components of the groupoid's object set, each sorted, ordered
/// by minimal member.
pub fn components(group: &FiniteGroup, kind: GroupoidKind) -> Vec<Vec<usize>> {
    let n = kind.object_count(group.order());
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for a in 0..n {
        for g in group.elements() {
            let b = kind.act(group, g, a);
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
    }
    let mut buckets: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for a in 0..n {
        let r = find(&mut parent, a);
        buckets.entry(r).or_default().push(a);
    }
    buckets.into_values().collect()
}

/// Restricts a nerve chain complex to the simplices whose base object lies
/// in `members` (a union of components, so the restriction is a subcomplex).
/// Basis order within the restriction follows the order of `members`.
pub fn restrict_to_objects(
    group: &FiniteGroup,
    kind: GroupoidKind,
    slice: &ChainComplexSlice,
    members: &[usize],
) -> ChainComplexSlice {
    assert!(
        !matches!(kind, GroupoidKind::OneObject),
        "the one-object nerve has a single component"
    );
    let n = group.order();
    let mut pos = vec![None; n];
    for (i, &m) in members.iter().enumerate() {
        pos[m] = Some(i);
    }
    let reindex = |k: usize, idx: usize| -> Option<usize> {
        let block = power(n, k);
        pos[idx / block].map(|p| p * block + idx % block)
    };
    let max_degree = slice.max_degree();
    let dims: Vec<usize> = (0..=max_degree)
        .map(|k| members.len() * power(n, k))
        .collect();
    let mut maps = Vec::with_capacity(max_degree);
    for m in 1..=max_degree {
        let old = &slice.maps[m - 1];
        let trips = old.entries().iter().filter_map(|&(r, c, v)| {
            let nc = reindex(m, c)?;
            let nr = reindex(m - 1, r).expect("face left the component");
            Some((nr, nc, v))
        });
        maps.push(SparseMatrix::from_triplets(dims[m - 1], dims[m], trips));
    }
    ChainComplexSlice::new(Orientation::Homological, dims, maps)
}

/// Graphviz rendering of the groupoid's 1-skeleton, one cluster per
/// connected component.
pub fn groupoid_dot(group: &FiniteGroup, kind: GroupoidKind) -> String {
    let mut out = String::from("digraph groupoid {\n");
    let n = kind.object_count(group.order());
    for (i, comp) in components(group, kind).iter().enumerate() {
        out.push_str(&format!("  subgraph cluster_{i} {{\n"));
        for &a in comp {
            out.push_str(&format!("    o{a} [label=\"{a}\"];\n"));
        }
        out.push_str("  }\n");
    }
    for a in 0..n {
        for g in group.elements() {
            let b = kind.act(group, g, a);
            out.push_str(&format!("  o{a} -> o{b} [label=\"g{g}\"];\n"));
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::FieldSpec;
    use crate::fingroup::{builtin_group, centralizer, conjugacy_classes, subgroup_as_group, Family};

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn betti(slice: &ChainComplexSlice, field: &FieldSpec) -> Vec<usize> {
        slice
            .homology_range(field)
            .unwrap()
            .iter()
            .map(|h| h.dimension)
            .collect()
    }

    #[test]
    fn simplex_codec_roundtrip() {
        let s3 = builtin_group(Family::Symmetric, 3).unwrap();
        for kind in [GroupoidKind::Adjoint, GroupoidKind::Right, GroupoidKind::OneObject] {
            for k in 0..3 {
                for idx in 0..kind.simplex_count(6, k) {
                    let s = simplex_from_index(6, kind, k, idx);
                    assert_eq!(simplex_index(6, kind, &s), idx);
                }
            }
        }
        // derived objects follow the action
        let s = Simplex {
            base: 1,
            labels: vec![2, 3],
        };
        let objs = s.objects(&s3, GroupoidKind::Right);
        assert_eq!(objs, vec![1, s3.mul(1, 3), s3.mul(s3.mul(1, 3), 2)]);
        let objs = s.objects(&s3, GroupoidKind::Adjoint);
        assert_eq!(objs[1], s3.conjugate(3, 1));
        assert_eq!(objs[2], s3.conjugate(2, objs[1]));
    }

    #[test]
    fn nerve_dimensions() {
        let s3 = builtin_group(Family::Symmetric, 3).unwrap();
        let adj = build_nerve_chains(&s3, GroupoidKind::Adjoint, 3);
        assert_eq!(adj.dims, vec![6, 36, 216, 1296]);
        let one = build_nerve_chains(&s3, GroupoidKind::OneObject, 3);
        assert_eq!(one.dims, vec![1, 6, 36, 216]);
    }

    #[test]
    fn complexes_square_to_zero() {
        let s3 = builtin_group(Family::Symmetric, 3).unwrap();
        for kind in [GroupoidKind::Adjoint, GroupoidKind::Right, GroupoidKind::OneObject] {
            build_nerve_chains(&s3, kind, 3).verify_square_zero().unwrap();
            build_nerve_cochains(&s3, kind, 3)
                .verify_square_zero()
                .unwrap();
        }
        build_bar_complex(&s3, 3).verify_square_zero().unwrap();
    }

    #[test]
    fn degree_one_boundary_on_vertices() {
        // ∂(a_0; g) = (a_0) - (target) under the (-1)^(m-j) normalization
        let s3 = builtin_group(Family::Symmetric, 3).unwrap();
        for kind in [GroupoidKind::Adjoint, GroupoidKind::Right] {
            let c = build_nerve_chains(&s3, kind, 1);
            let (a0, g) = (2usize, 4usize);
            let col = simplex_index(6, kind, &Simplex { base: a0, labels: vec![g] });
            let mut entries: Vec<(usize, i64)> = c.maps[0]
                .entries()
                .iter()
                .filter(|&&(_, cc, _)| cc == col)
                .map(|&(r, _, v)| (r, v))
                .collect();
            entries.sort_unstable();
            let target = kind.act(&s3, g, a0);
            let mut expected = vec![(a0, 1i64), (target, -1i64)];
            expected.sort_unstable();
            assert_eq!(entries, expected);
        }
    }

    #[test]
    fn adjoint_components_are_conjugacy_classes() {
        for g in [
            builtin_group(Family::Symmetric, 3).unwrap(),
            builtin_group(Family::Dihedral, 4).unwrap(),
            builtin_group(Family::Quaternion, 8).unwrap(),
        ] {
            let comps = components(&g, GroupoidKind::Adjoint);
            assert_eq!(comps, conjugacy_classes(&g).classes);
        }
        let s3 = builtin_group(Family::Symmetric, 3).unwrap();
        assert_eq!(components(&s3, GroupoidKind::Right).len(), 1);
    }

    #[test]
    fn adjoint_nerve_homology_counts_classes_rationally(){
        // over Q each component contributes only in degree zero
        let s3 = builtin_group(Family::Symmetric, 3).unwrap();
        let adj = build_nerve_chains(&s3, GroupoidKind::Adjoint, 3);
        assert_eq!(betti(&adj, &q()), vec![3, 0, 0]);
    }

    #[test]
    fn right_action_nerve_is_contractible() {
        let s3 = builtin_group(Family::Symmetric, 3).unwrap();
        let right = build_nerve_chains(&s3, GroupoidKind::Right, 3);
        assert_eq!(betti(&right, &q()), vec![1, 0, 0]);
        assert_eq!(betti(&right, &FieldSpec::PrimeField(2)), vec![1, 0, 0]);
        assert_eq!(betti(&right, &FieldSpec::PrimeField(3)), vec![1, 0, 0]);
    }

    #[test]
    fn bar_complex_computes_group_homology() {
        // H_*(C2; F2) has dimension one in every degree; over Q only H_0
        let c2 = builtin_group(Family::Cyclic, 2).unwrap();
        let bar = build_bar_complex(&c2, 3);
        assert_eq!(betti(&bar, &FieldSpec::PrimeField(2)), vec![1, 1, 1]);
        assert_eq!(betti(&bar, &q()), vec![1, 0, 0]);
        // H_1(G; Q) = 0 and H_1(C3; F3) = 1
        let c3 = builtin_group(Family::Cyclic, 3).unwrap();
        let bar3 = build_bar_complex(&c3, 3);
        assert_eq!(betti(&bar3, &FieldSpec::PrimeField(3)), vec![1, 1, 1]);
    }

    #[test]
    fn one_object_nerve_equals_bar_complex() {
        for g in [
            builtin_group(Family::Symmetric, 3).unwrap(),
            builtin_group(Family::Quaternion, 8).unwrap(),
        ] {
            let nerve = build_nerve_chains(&g, GroupoidKind::OneObject, 3);
            let bar = build_bar_complex(&g, 3);
            assert_eq!(nerve.dims, bar.dims);
            for (a, b) in nerve.maps.iter().zip(&bar.maps) {
                assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn component_homology_matches_centralizer_bar() {
        let s3 = builtin_group(Family::Symmetric, 3).unwrap();
        let adj = build_nerve_chains(&s3, GroupoidKind::Adjoint, 3);
        for class in conjugacy_classes(&s3).classes {
            let rep = class[0];
            let piece = restrict_to_objects(&s3, GroupoidKind::Adjoint, &adj, &class);
            piece.verify_square_zero().unwrap();
            let cent = subgroup_as_group(&centralizer(&s3, rep)).unwrap();
            let bar = build_bar_complex(&cent.group, 3);
            for field in [q(), FieldSpec::PrimeField(2), FieldSpec::PrimeField(3)] {
                assert_eq!(
                    betti(&piece, &field),
                    betti(&bar, &field),
                    "class of {rep} over {field}"
                );
            }
        }
    }

    #[test]
    fn right_quotient_orbit_counts() {
        let s3 = builtin_group(Family::Symmetric, 3).unwrap();
        assert_eq!(verify_right_quotient(&s3, 3), vec![1, 6, 36, 216]);
        let c2 = builtin_group(Family::Cyclic, 2).unwrap();
        assert_eq!(verify_right_quotient(&c2, 2), vec![1, 2, 4]);
    }

    #[test]
    fn nerve_wrappers_carry_components() {
        let s3 = builtin_group(Family::Symmetric, 3).unwrap();
        let adj = build_adjoint_nerve(&s3, 2);
        let class_of = adj.component_of.unwrap();
        assert_eq!(class_of.len(), 6);
        assert_eq!(class_of[s3.identity()], 0);
        assert!(build_right_nerve(&s3, 2).component_of.is_none());
        assert_eq!(build_one_object_nerve(&s3, 2).complex.dims, vec![1, 6, 36]);
    }

    #[test]
    fn dot_output_shape() {
        let c2 = builtin_group(Family::Cyclic, 2).unwrap();
        let dot = groupoid_dot(&c2, GroupoidKind::Adjoint);
        assert!(dot.starts_with("digraph"));
        assert!(dot.ends_with("}\n"));
        assert_eq!(dot.matches("->").count(), 4);
    }
}
