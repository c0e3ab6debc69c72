//! Hochschild chains and cochains of a finite group algebra k[G].
//!
//! The degree-k chain space has the tensor basis `g_0 ⊗ ... ⊗ g_k`, so its
//! dimension is `|G|^(k+1)`. The cochain space in degree k is spanned by the
//! functionals `e^h_{g_1,...,g_k}` picking the coefficient of `h` in the
//! value at `(g_1,...,g_k)`; it has the same dimension. Both complexes are
//! truncated at a caller-chosen top degree.

use crate::exactla::{
    homology_dims, rank, DegreePair, FieldSpec, HomologySummary, LinAlgError, SparseMatrix,
};
use crate::fingroup::FiniteGroup;
use serde::Serialize;

/// Whether the stored maps lower or raise degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Homological,
    Cohomological,
}

/// A truncated complex: the spaces in degrees `0..=N` and the differentials
/// between them.
#[derive(Debug, Clone)]
pub struct ChainComplexSlice {
    pub orientation: Orientation,
    /// `dims[k]` is the dimension of the degree-k space; the top index is
    /// the truncation degree N.
    pub dims: Vec<usize>,
    /// Homological: `maps[i]` is `d_{i+1} : C_{i+1} -> C_i`.
    /// Cohomological: `maps[i]` is `δ^i : C^i -> C^{i+1}`.
    /// Either way `maps.len() == N`.
    pub maps: Vec<SparseMatrix>,
    /// Zero map terminating the complex at degree 0.
    edge: SparseMatrix,
}

impl ChainComplexSlice {
    pub fn new(orientation: Orientation, dims: Vec<usize>, maps: Vec<SparseMatrix>) -> Self {
        assert_eq!(maps.len() + 1, dims.len());
        for (i, m) in maps.iter().enumerate() {
            let (lo, hi) = (dims[i], dims[i + 1]);
            match orientation {
                Orientation::Homological => assert_eq!((m.rows(), m.cols()), (lo, hi)),
                Orientation::Cohomological => assert_eq!((m.rows(), m.cols()), (hi, lo)),
            }
        }
        let edge = match orientation {
            Orientation::Homological => SparseMatrix::zero(0, dims[0]),
            Orientation::Cohomological => SparseMatrix::zero(dims[0], 0),
        };
        ChainComplexSlice {
            orientation,
            dims,
            maps,
            edge,
        }
    }

    /// Truncation degree N.
    pub fn max_degree(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn dimension(&self, k: usize) -> usize {
        self.dims[k]
    }

    /// The differentials around degree `k`, oriented so that `outgoing`
    /// leaves the degree-k space. `None` when `k` is the truncation degree,
    /// where one of the two maps is missing.
    pub fn degree_pair(&self, k: usize) -> Option<DegreePair<'_>> {
        if k >= self.maps.len() {
            return None;
        }
        let prev = if k == 0 { &self.edge } else { &self.maps[k - 1] };
        Some(match self.orientation {
            Orientation::Homological => DegreePair {
                outgoing: prev,
                incoming: &self.maps[k],
            },
            Orientation::Cohomological => DegreePair {
                outgoing: &self.maps[k],
                incoming: prev,
            },
        })
    }

    /// (Co)homology dimension at degree `k`; degrees `0..N` are available.
    pub fn homology_at(&self, k: usize, field: &FieldSpec) -> Result<HomologySummary, LinAlgError> {
        let pair = self.degree_pair(k).ok_or_else(|| {
            LinAlgError::DimensionMismatch(format!(
                "degree {k} is not below the truncation degree {}",
                self.max_degree()
            ))
        })?;
        homology_dims(k, pair.outgoing, pair.incoming, field)
    }

    /// (Co)homology in every reliable degree, `0..N`.
    pub fn homology_range(&self, field: &FieldSpec) -> Result<Vec<HomologySummary>, LinAlgError> {
        (0..self.max_degree())
            .map(|k| self.homology_at(k, field))
            .collect()
    }

    /// Checks `d ∘ d = 0` across the whole slice; returns the degree and
    /// witness column of the first failure.
    pub fn verify_square_zero(&self) -> Result<(), LinAlgError> {
        for i in 1..self.maps.len() {
            let composite = match self.orientation {
                Orientation::Homological => self.maps[i - 1].matmul(&self.maps[i]),
                Orientation::Cohomological => self.maps[i].matmul(&self.maps[i - 1]),
            };
            if let Some(col) = composite.first_nonzero_col() {
                return Err(LinAlgError::NotAComplex { witness_col: col });
            }
        }
        Ok(())
    }
}

/// `order^exp` with overflow detection.
pub fn power(order: usize, exp: usize) -> usize {
    order
        .checked_pow(u32::try_from(exp).expect("degree out of range"))
        .expect("basis dimension overflows usize")
}

/// Index of a tuple in the mixed-radix order with `t[0]` most significant.
pub fn tuple_index(order: usize, t: &[usize]) -> usize {
    t.iter().fold(0, |acc, &x| {
        debug_assert!(x < order);
        acc * order + x
    })
}

/// Inverse of [`tuple_index`] for tuples of length `len`.
pub fn tuple_from_index(order: usize, len: usize, mut idx: usize) -> Vec<usize> {
    let mut t = vec![0usize; len];
    for slot in t.iter_mut().rev() {
        *slot = idx % order;
        idx /= order;
    }
    debug_assert_eq!(idx, 0, "index out of range for tuple length {len}");
    t
}

/// The Hochschild chain complex of k[G] up to degree `max_degree`.
///
/// The boundary is the cyclic bar differential
/// `d(g_0 ⊗ ... ⊗ g_k) = Σ_{i<k} (-1)^i (... g_i g_{i+1} ...)
///  + (-1)^k (g_k g_0 ⊗ g_1 ⊗ ... ⊗ g_{k-1})`.
pub fn build_hochschild_chains(group: &FiniteGroup, max_degree: usize) -> ChainComplexSlice {
    let n = group.order();
    let dims: Vec<usize> = (0..=max_degree).map(|k| power(n, k + 1)).collect();
    let mut maps = Vec::with_capacity(max_degree);
    for k in 1..=max_degree {
        let mut trips = Vec::with_capacity(dims[k] * (k + 1));
        for col in 0..dims[k] {
            let t = tuple_from_index(n, k + 1, col);
            for i in 0..k {
                let mut s = Vec::with_capacity(k);
                s.extend_from_slice(&t[..i]);
                s.push(group.mul(t[i], t[i + 1]));
                s.extend_from_slice(&t[i + 2..]);
                trips.push((tuple_index(n, &s), col, if i % 2 == 0 { 1 } else { -1 }));
            }
            let mut s = Vec::with_capacity(k);
            s.push(group.mul(t[k], t[0]));
            s.extend_from_slice(&t[1..k]);
            trips.push((tuple_index(n, &s), col, if k % 2 == 0 { 1 } else { -1 }));
        }
        maps.push(SparseMatrix::from_triplets(dims[k - 1], dims[k], trips));
    }
    ChainComplexSlice::new(Orientation::Homological, dims, maps)
}

/// The Hochschild cochain complex of k[G] up to degree `max_degree`.
///
/// In the coefficient basis `e^h_{g_1,...,g_k}` the coboundary reads
/// `(δf)^h_{g_1..g_{k+1}} = f^{g_1^{-1} h}_{g_2..g_{k+1}}
///  + Σ_{1<=j<=k} (-1)^j f^h_{..g_j g_{j+1}..}
///  + (-1)^{k+1} f^{h g_{k+1}^{-1}}_{g_1..g_k}`.
pub fn build_hochschild_cochains(group: &FiniteGroup, max_degree: usize) -> ChainComplexSlice {
    let n = group.order();
    let dims: Vec<usize> = (0..=max_degree).map(|k| power(n, k + 1)).collect();
    let mut maps = Vec::with_capacity(max_degree);
    for k in 0..max_degree {
        let mut trips = Vec::with_capacity(dims[k + 1] * (k + 2));
        for row in 0..dims[k + 1] {
            // decode (h, g_1, ..., g_{k+1})
            let t = tuple_from_index(n, k + 2, row);
            let h = t[0];
            let g = &t[1..];

            let mut s = Vec::with_capacity(k + 1);
            s.push(group.mul(group.inv(g[0]), h));
            s.extend_from_slice(&g[1..]);
            trips.push((row, tuple_index(n, &s), 1));

            for j in 1..=k {
                let mut s = Vec::with_capacity(k + 1);
                s.push(h);
                s.extend_from_slice(&g[..j - 1]);
                s.push(group.mul(g[j - 1], g[j]));
                s.extend_from_slice(&g[j + 1..]);
                trips.push((row, tuple_index(n, &s), if j % 2 == 0 { 1 } else { -1 }));
            }

            let mut s = Vec::with_capacity(k + 1);
            s.push(group.mul(h, group.inv(g[k])));
            s.extend_from_slice(&g[..k]);
            trips.push((row, tuple_index(n, &s), if (k + 1) % 2 == 0 { 1 } else { -1 }));
        }
        maps.push(SparseMatrix::from_triplets(dims[k + 1], dims[k], trips));
    }
    ChainComplexSlice::new(Orientation::Cohomological, dims, maps)
}

/// Hochschild homology dimensions in degrees `0..max_degree`.
pub fn hochschild_homology(
    group: &FiniteGroup,
    field: &FieldSpec,
    max_degree: usize,
) -> Result<Vec<HomologySummary>, LinAlgError> {
    build_hochschild_chains(group, max_degree).homology_range(field)
}

/// Hochschild cohomology dimensions in degrees `0..max_degree`.
pub fn hochschild_cohomology(
    group: &FiniteGroup,
    field: &FieldSpec,
    max_degree: usize,
) -> Result<Vec<HomologySummary>, LinAlgError> {
    build_hochschild_cochains(group, max_degree).homology_range(field)
}

/// Derivation-space dimensions of k[G], with HH^1 recomputed independently
/// from the cochain complex as a consistency check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DerivationsReport {
    pub group: String,
    pub field: String,
    /// Dimension of the space of k-linear maps satisfying the Leibniz rule.
    pub dim_derivations: usize,
    /// Dimension of the span of the commutator maps `ad_x = [x, -]`.
    pub dim_inner: usize,
    pub dim_outer: usize,
    /// `dim HH^1` from the cochain complex; must equal `dim_outer`.
    pub hh1: usize,
}

/// Solves the Leibniz system `f(gh) = f(g)h + g f(h)` for linear maps
/// `f : k[G] -> k[G]` written as coefficient matrices `f^w_g`, and compares
/// the resulting outer-derivation dimension with HH^1.
pub fn derivations_report(
    group: &FiniteGroup,
    field: &FieldSpec,
) -> Result<DerivationsReport, LinAlgError> {
    let n = group.order();
    let unknowns = n * n; // f^w_g at index g*n + w

    // One row per (g, h, w): coefficient of w in f(gh) - f(g)h - g f(h).
    let mut trips = Vec::with_capacity(n * n * n * 3);
    let mut row = 0;
    for g in 0..n {
        for h in 0..n {
            for w in 0..n {
                trips.push((row, group.mul(g, h) * n + w, 1));
                trips.push((row, g * n + group.mul(w, group.inv(h)), -1));
                trips.push((row, h * n + group.mul(group.inv(g), w), -1));
                row += 1;
            }
        }
    }
    let leibniz = SparseMatrix::from_triplets(row, unknowns, trips);
    let dim_derivations = unknowns - rank(&leibniz, field)?;

    // Inner derivations: the column for x is ad_x, with ad_x(g) = xg - gx.
    let mut trips = Vec::with_capacity(2 * n * n);
    for x in 0..n {
        for g in 0..n {
            trips.push((g * n + group.mul(x, g), x, 1));
            trips.push((g * n + group.mul(g, x), x, -1));
        }
    }
    let ad = SparseMatrix::from_triplets(unknowns, n, trips);
    debug_assert!(leibniz.matmul(&ad).is_zero_matrix());
    let dim_inner = rank(&ad, field)?;

    let dim_outer = dim_derivations
        .checked_sub(dim_inner)
        .expect("inner derivations exceed all derivations");
    let hh1 = build_hochschild_cochains(group, 2)
        .homology_at(1, field)?
        .dimension;
    Ok(DerivationsReport {
        group: group.label().unwrap_or("?").to_string(),
        field: field.to_string(),
        dim_derivations,
        dim_inner,
        dim_outer,
        hh1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingroup::{builtin_group, conjugacy_classes, Family};

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn dims(summaries: &[HomologySummary]) -> Vec<usize> {
        summaries.iter().map(|h| h.dimension).collect()
    }

    #[test]
    fn tuple_codec_roundtrip() {
        for idx in 0..6usize.pow(3) {
            let t = tuple_from_index(6, 3, idx);
            assert_eq!(tuple_index(6, &t), idx);
        }
        assert_eq!(tuple_index(6, &[1, 2, 3]), 36 + 12 + 3);
    }

    #[test]
    fn trivial_group_homology() {
        let g = builtin_group(Family::Cyclic, 1).unwrap();
        let hh = hochschild_homology(&g, &q(), 3).unwrap();
        assert_eq!(dims(&hh), vec![1, 0, 0]);
        let hc = hochschild_cohomology(&g, &q(), 3).unwrap();
        assert_eq!(dims(&hc), vec![1, 0, 0]);
    }

    #[test]
    fn abelian_degree_one_boundary_vanishes() {
        // d_1(g0 ⊗ g1) = g0 g1 - g1 g0 = 0 in the commutative case
        for g in [
            builtin_group(Family::Cyclic, 4).unwrap(),
            builtin_group(Family::Cyclic, 5).unwrap(),
        ] {
            let c = build_hochschild_chains(&g, 2);
            assert!(c.maps[0].is_zero_matrix());
        }
    }

    #[test]
    fn s3_degree_one_boundary_column() {
        // spot-check one column of d_1 directly against the Cayley table
        let s3 = builtin_group(Family::Symmetric, 3).unwrap();
        let c = build_hochschild_chains(&s3, 1);
        let d1 = &c.maps[0];
        // pick a non-commuting pair
        let (g0, g1) = (1usize, 2usize);
        assert_ne!(s3.mul(g0, g1), s3.mul(g1, g0));
        let col = tuple_index(s3.order(), &[g0, g1]);
        let entries: Vec<(usize, i64)> = d1
            .entries()
            .iter()
            .filter(|&&(_, c, _)| c == col)
            .map(|&(r, _, v)| (r, v))
            .collect();
        let mut expected = vec![(s3.mul(g0, g1), 1i64), (s3.mul(g1, g0), -1i64)];
        expected.sort_unstable();
        assert_eq!(entries, expected);
    }

    #[test]
    fn complexes_square_to_zero() {
        let s3 = builtin_group(Family::Symmetric, 3).unwrap();
        build_hochschild_chains(&s3, 3).verify_square_zero().unwrap();
        build_hochschild_cochains(&s3, 3)
            .verify_square_zero()
            .unwrap();
        let q8 = builtin_group(Family::Quaternion, 8).unwrap();
        build_hochschild_chains(&q8, 3).verify_square_zero().unwrap();
        build_hochschild_cochains(&q8, 3)
            .verify_square_zero()
            .unwrap();
    }

    #[test]
    fn degree_zero_counts_conjugacy_classes() {
        // HH_0(k[G]) = k[G]/[k[G],k[G]] has the class sums as a basis, so
        // the conjugacy-class count is an independent oracle.
        for g in [
            builtin_group(Family::Cyclic, 4).unwrap(),
            builtin_group(Family::Dihedral, 4).unwrap(),
            builtin_group(Family::Symmetric, 3).unwrap(),
            builtin_group(Family::Quaternion, 8).unwrap(),
        ] {
            let classes = conjugacy_classes(&g).count();
            let hh0 = hochschild_homology(&g, &q(), 1).unwrap()[0].dimension;
            assert_eq!(hh0, classes, "group {:?}", g.label());
            // HH^0 is the center, same dimension
            let hc0 = hochschild_cohomology(&g, &q(), 1).unwrap()[0].dimension;
            assert_eq!(hc0, classes, "group {:?}", g.label());
        }
    }

    #[test]
    fn rational_s3_is_homologically_trivial_above_zero() {
        // Q[S3] is semisimple (Maschke), so higher Hochschild groups vanish
        let s3 = builtin_group(Family::Symmetric, 3).unwrap();
        assert_eq!(dims(&hochschild_homology(&s3, &q(), 3).unwrap()), vec![3, 0, 0]);
        assert_eq!(
            dims(&hochschild_cohomology(&s3, &q(), 3).unwrap()),
            vec![3, 0, 0]
        );
    }

    #[test]
    fn modular_c2_homology() {
        // F2[C2] = F2[x]/(x^2) has Hochschild (co)homology of dimension 2
        // in every degree
        let c2 = builtin_group(Family::Cyclic, 2).unwrap();
        let f2 = FieldSpec::PrimeField(2);
        assert_eq!(dims(&hochschild_homology(&c2, &f2, 3).unwrap()), vec![2, 2, 2]);
        assert_eq!(
            dims(&hochschild_cohomology(&c2, &f2, 3).unwrap()),
            vec![2, 2, 2]
        );
        // same algebra over Q is semisimple instead
        assert_eq!(dims(&hochschild_homology(&c2, &q(), 3).unwrap()), vec![2, 0, 0]);
    }

    #[test]
    fn derivations_match_hh1() {
        // semisimple case: derivations are all inner, HH^1 = 0
        let s3 = builtin_group(Family::Symmetric, 3).unwrap();
        let r = derivations_report(&s3, &q()).unwrap();
        assert_eq!(r.dim_inner, s3.order() - conjugacy_classes(&s3).count());
        assert_eq!(r.dim_derivations, r.dim_inner);
        assert_eq!(r.dim_outer, 0);
        assert_eq!(r.hh1, 0);

        // modular case: F2[C2] has a 2-dimensional outer derivation space
        let c2 = builtin_group(Family::Cyclic, 2).unwrap();
        let r = derivations_report(&c2, &FieldSpec::PrimeField(2)).unwrap();
        assert_eq!(r.dim_inner, 0);
        assert_eq!(r.dim_derivations, 2);
        assert_eq!(r.dim_outer, 2);
        assert_eq!(r.hh1, 2);
    }

    #[test]
    fn derivation_dimensions_agree_with_hh1_across_fields() {
        for g in [
            builtin_group(Family::Cyclic, 3).unwrap(),
            builtin_group(Family::Dihedral, 2).unwrap(),
            builtin_group(Family::Quaternion, 8).unwrap(),
        ] {
            for field in [q(), FieldSpec::PrimeField(2), FieldSpec::PrimeField(3)] {
                let r = derivations_report(&g, &field).unwrap();
                assert_eq!(r.dim_outer, r.hh1, "group {:?} over {field}", g.label());
            }
        }
    }
}
