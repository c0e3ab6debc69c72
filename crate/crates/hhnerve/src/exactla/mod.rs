//! Exact sparse linear algebra.
//!
//! Ranks and kernels over the rationals and prime fields, Smith normal form
//! over the integers, homology dimensions, and induced maps on homology.
//! Everything is deterministic: the pivot rule is "smallest row fill, ties by
//! lowest index", and no floating point appears anywhere.

mod elim;
mod snf;

pub use elim::{column_space_pivots, kernel_basis, rank_fraction_free, rank_generic, solve_many, ColVec};
pub use snf::smith_normal_form_rows;

use crate::scalar::{Fp, Scalar};
use crate::{Int, Rational};
use num_traits::One;
use serde::Serialize;
use std::collections::BTreeMap;
use thiserror::Error;

/// Coefficient ring selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u64),
    Integers,
}

impl FieldSpec {
    /// Prime-field constructor with a primality check.
    pub fn prime_field(p: u64) -> Result<Self, LinAlgError> {
        if p < 2 || !is_prime(p) {
            return Err(LinAlgError::NotPrime(p));
        }
        Ok(FieldSpec::PrimeField(p))
    }

    /// Parses `Q`, `Z`, or `F<p>` (case-insensitive).
    pub fn parse(text: &str) -> Result<Self, LinAlgError> {
        let t = text.trim();
        match t.to_ascii_uppercase().as_str() {
            "Q" => Ok(FieldSpec::Rationals),
            "Z" => Ok(FieldSpec::Integers),
            s if s.starts_with('F') => {
                let p: u64 = s[1..]
                    .parse()
                    .map_err(|_| LinAlgError::BadFieldSpec(text.to_string()))?;
                FieldSpec::prime_field(p)
            }
            _ => Err(LinAlgError::BadFieldSpec(text.to_string())),
        }
    }

    pub fn is_field(&self) -> bool {
        !matches!(self, FieldSpec::Integers)
    }
}

impl std::fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField(p) => write!(f, "F{p}"),
            FieldSpec::Integers => write!(f, "Z"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum LinAlgError {
    #[error("unsupported ring for this operation; use smith_normal_form for integer matrices")]
    UnsupportedRing,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("cannot parse field spec {0:?}")]
    BadFieldSpec(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("not a complex: composite differential is nonzero on basis column {witness_col}")]
    NotAComplex { witness_col: usize },
    #[error("not a chain map at degree {degree}: witness basis element {witness}")]
    NotAChainMap { degree: usize, witness: usize },
}

/// An exact sparse matrix with integer entries.
///
/// Entries are kept sorted by `(row, col)`, with duplicates accumulated and
/// zeros dropped, so equal matrices have equal representations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<(usize, usize, i64)>,
}

impl SparseMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            entries: Vec::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix {
            rows: n,
            cols: n,
            entries: (0..n).map(|i| (i, i, 1)).collect(),
        }
    }

    /// Accumulates triplets, dropping entries that cancel to zero.
    pub fn from_triplets(
        rows: usize,
        cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, i64)>,
    ) -> Self {
        let mut acc: BTreeMap<(usize, usize), i64> = BTreeMap::new();
        for (r, c, v) in triplets {
            assert!(r < rows && c < cols, "entry ({r}, {c}) out of bounds");
            *acc.entry((r, c)).or_insert(0) += v;
        }
        SparseMatrix {
            rows,
            cols,
            entries: acc
                .into_iter()
                .filter(|&(_, v)| v != 0)
                .map(|((r, c), v)| (r, c, v))
                .collect(),
        }
    }

    pub fn from_dense(data: &[Vec<i64>]) -> Self {
        let rows = data.len();
        let cols = data.first().map_or(0, Vec::len);
        SparseMatrix::from_triplets(
            rows,
            cols,
            data.iter()
                .enumerate()
                .flat_map(|(r, row)| row.iter().enumerate().map(move |(c, &v)| (r, c, v))),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[(usize, usize, i64)] {
        &self.entries
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn transpose(&self) -> SparseMatrix {
        SparseMatrix::from_triplets(
            self.cols,
            self.rows,
            self.entries.iter().map(|&(r, c, v)| (c, r, v)),
        )
    }

    pub fn scaled(&self, factor: i64) -> SparseMatrix {
        SparseMatrix::from_triplets(
            self.rows,
            self.cols,
            self.entries.iter().map(|&(r, c, v)| (r, c, v * factor)),
        )
    }

    /// Matrix product `self * other` in exact integer arithmetic.
    pub fn matmul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(
            self.cols, other.rows,
            "matmul shape mismatch {}x{} * {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        // index other by row
        let mut other_rows: Vec<Vec<(usize, i64)>> = vec![Vec::new(); other.rows];
        for &(r, c, v) in &other.entries {
            other_rows[r].push((c, v));
        }
        let mut acc: BTreeMap<(usize, usize), i64> = BTreeMap::new();
        for &(r, k, v) in &self.entries {
            for &(c, w) in &other_rows[k] {
                *acc.entry((r, c)).or_insert(0) += v * w;
            }
        }
        SparseMatrix {
            rows: self.rows,
            cols: other.cols,
            entries: acc
                .into_iter()
                .filter(|&(_, v)| v != 0)
                .map(|((r, c), v)| (r, c, v))
                .collect(),
        }
    }

    pub fn sub(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        SparseMatrix::from_triplets(
            self.rows,
            self.cols,
            self.entries
                .iter()
                .copied()
                .chain(other.entries.iter().map(|&(r, c, v)| (r, c, -v))),
        )
    }

    /// Submatrix keeping the listed columns, reindexed in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> SparseMatrix {
        let mut pos = BTreeMap::new();
        for (i, &c) in cols.iter().enumerate() {
            assert!(c < self.cols, "column {c} out of bounds");
            pos.insert(c, i);
        }
        SparseMatrix::from_triplets(
            self.rows,
            cols.len(),
            self.entries
                .iter()
                .filter_map(|&(r, c, v)| pos.get(&c).map(|&i| (r, i, v))),
        )
    }

    /// Lowest column index that holds a nonzero entry, if any.
    pub fn first_nonzero_col(&self) -> Option<usize> {
        self.entries.iter().map(|&(_, c, _)| c).min()
    }

    /// Copy with the sign of the `idx`-th stored entry flipped. Used by the
    /// negative controls in the verification suite.
    pub fn with_flipped_entry(&self, idx: usize) -> SparseMatrix {
        let mut entries = self.entries.clone();
        entries[idx].2 = -entries[idx].2;
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    /// Rows as maps over an arbitrary scalar type.
    pub fn rows_as<T: Scalar>(&self, inject: impl Fn(i64) -> T) -> Vec<BTreeMap<usize, T>> {
        let mut rows: Vec<BTreeMap<usize, T>> = vec![BTreeMap::new(); self.rows];
        for &(r, c, v) in &self.entries {
            let x = inject(v);
            // an entry can vanish under the injection (e.g. 2 in F_2)
            if !x.is_zero() {
                rows[r].insert(c, x);
            }
        }
        rows
    }

    /// Columns as sparse vectors over an arbitrary scalar type.
    pub fn cols_as<T: Scalar>(&self, inject: impl Fn(i64) -> T) -> Vec<ColVec<T>> {
        let mut cols: Vec<ColVec<T>> = vec![BTreeMap::new(); self.cols];
        for &(r, c, v) in &self.entries {
            let x = inject(v);
            if !x.is_zero() {
                cols[c].insert(r, x);
            }
        }
        cols
    }

    /// Coordinate text interchange format: `rows cols nnz` header, then one
    /// `i j value` line per entry, 0-based, sorted by `(row, col)`.
    pub fn to_coordinate_text(&self) -> String {
        let mut out = format!("{} {} {}\n", self.rows, self.cols, self.entries.len());
        for &(r, c, v) in &self.entries {
            out.push_str(&format!("{r} {c} {v}\n"));
        }
        out
    }
}

/// Invariant factors of an integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult {
    /// Positive invariant factors `d_1 | d_2 | ... | d_r`.
    pub invariant_factors: Vec<Int>,
    pub rank: usize,
}

/// Homology at a single degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologySummary {
    pub degree: usize,
    pub dimension: usize,
    /// Invariant factors > 1 of the incoming differential (integer
    /// coefficients only; empty over a field).
    pub torsion: Vec<String>,
}

/// Exact rank over the rationals or a prime field.
///
/// Over the rationals the elimination is fraction-free (integer rows with
/// content removal); over a prime field it is ordinary Gaussian elimination.
/// Integer coefficients are rejected: use [`smith_normal_form`].
pub fn rank(m: &SparseMatrix, field: &FieldSpec) -> Result<usize, LinAlgError> {
    match field {
        FieldSpec::Rationals => Ok(rank_fraction_free(m.rows_as(Int::from))),
        FieldSpec::PrimeField(p) => {
            let p = *p;
            Ok(rank_generic(m.rows_as(|v| Fp::new(v, p))))
        }
        FieldSpec::Integers => Err(LinAlgError::UnsupportedRing),
    }
}

/// Smith normal form of an integer matrix.
pub fn smith_normal_form(m: &SparseMatrix) -> SnfResult {
    let factors = smith_normal_form_rows(m.rows_as(Int::from));
    let rank = factors.len();
    SnfResult {
        invariant_factors: factors,
        rank,
    }
}

/// Homology dimension at one degree of a complex slice.
///
/// `outgoing` is the differential leaving the degree (columns index its
/// basis) and `incoming` the differential entering it. The composite must be
/// exactly zero; otherwise the first offending basis column of `incoming` is
/// reported. Over the integers the free rank is computed rationally and the
/// torsion comes from the Smith normal form of `incoming`.
pub fn homology_dims(
    degree: usize,
    outgoing: &SparseMatrix,
    incoming: &SparseMatrix,
    field: &FieldSpec,
) -> Result<HomologySummary, LinAlgError> {
    if outgoing.cols() != incoming.rows() {
        return Err(LinAlgError::DimensionMismatch(format!(
            "outgoing has {} columns but incoming has {} rows",
            outgoing.cols(),
            incoming.rows()
        )));
    }
    let composite = outgoing.matmul(incoming);
    if let Some(col) = composite.first_nonzero_col() {
        return Err(LinAlgError::NotAComplex { witness_col: col });
    }
    let (rank_out, rank_in, torsion) = match field {
        FieldSpec::Integers => {
            let r_out = rank(outgoing, &FieldSpec::Rationals)?;
            let snf_in = smith_normal_form(incoming);
            let torsion = snf_in
                .invariant_factors
                .iter()
                .filter(|d| !d.is_one())
                .map(|d| d.to_string())
                .collect();
            (r_out, snf_in.rank, torsion)
        }
        f => (rank(outgoing, f)?, rank(incoming, f)?, Vec::new()),
    };
    let dimension = outgoing
        .cols()
        .checked_sub(rank_out + rank_in)
        .expect("rank bound violated");
    Ok(HomologySummary {
        degree,
        dimension,
        torsion,
    })
}

/// The matrix a chain map induces on homology at one degree, with explicit
/// homology-class bases on both sides.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InducedHomologyMap {
    pub source_dim: usize,
    pub target_dim: usize,
    /// Entries of the induced matrix, rendered exactly, row-major.
    pub matrix: Vec<Vec<String>>,
    pub is_isomorphism: bool,
}

/// Complex data around one degree: the outgoing and incoming differentials.
pub struct DegreePair<'a> {
    pub outgoing: &'a SparseMatrix,
    pub incoming: &'a SparseMatrix,
}

/// Computes the map induced on degree-k homology by `f` between two
/// complexes, selecting homology bases by extending an image basis to a
/// kernel basis on each side.
///
/// The map must send cycles to cycles and boundaries to boundaries; a
/// failure is reported as [`LinAlgError::NotAChainMap`] with the index of a
/// witness basis vector.
pub fn induced_homology_map(
    f: &SparseMatrix,
    source: DegreePair<'_>,
    target: DegreePair<'_>,
    field: &FieldSpec,
    degree: usize,
) -> Result<InducedHomologyMap, LinAlgError> {
    match field {
        FieldSpec::Rationals => {
            induced_generic::<Rational>(f, source, target, degree, |v| Rational::from(Int::from(v)))
        }
        FieldSpec::PrimeField(p) => {
            let p = *p;
            induced_generic::<Fp>(f, source, target, degree, move |v| Fp::new(v, p))
        }
        FieldSpec::Integers => Err(LinAlgError::UnsupportedRing),
    }
}

fn induced_generic<T: Scalar>(
    f: &SparseMatrix,
    source: DegreePair<'_>,
    target: DegreePair<'_>,
    degree: usize,
    inject: impl Fn(i64) -> T + Copy,
) -> Result<InducedHomologyMap, LinAlgError> {
    if f.cols() != source.outgoing.cols() || f.rows() != target.outgoing.cols() {
        return Err(LinAlgError::DimensionMismatch(format!(
            "chain map is {}x{}, source degree has dimension {}, target degree {}",
            f.rows(),
            f.cols(),
            source.outgoing.cols(),
            target.outgoing.cols()
        )));
    }
    let (src_boundaries, src_classes) = homology_basis::<T>(&source, inject);
    let (tgt_boundaries, tgt_classes) = homology_basis::<T>(&target, inject);

    // apply f to each source homology representative
    let f_cols = f.cols_as(inject);
    let mut images: Vec<ColVec<T>> = Vec::with_capacity(src_classes.len());
    for h in &src_classes {
        images.push(apply_cols(&f_cols, h, f.rows()));
    }

    // images must be cycles of the target
    let tgt_out_cols = target.outgoing.cols_as(inject);
    for (i, img) in images.iter().enumerate() {
        let v = apply_cols(&tgt_out_cols, img, target.outgoing.rows());
        if !v.is_empty() {
            return Err(LinAlgError::NotAChainMap {
                degree,
                witness: i,
            });
        }
    }
    // and boundaries must go to boundaries
    for (i, b) in src_boundaries.iter().enumerate() {
        let img = apply_cols(&f_cols, b, f.rows());
        if solve_many(&tgt_boundaries, std::slice::from_ref(&img))[0].is_none() {
            return Err(LinAlgError::NotAChainMap {
                degree,
                witness: i,
            });
        }
    }

    // coordinates of each image in the basis [boundaries | classes]
    let mut span: Vec<ColVec<T>> = tgt_boundaries.clone();
    span.extend(tgt_classes.iter().cloned());
    let solutions = solve_many(&span, &images);
    let n_b = tgt_boundaries.len();
    let n_h = tgt_classes.len();
    let mut matrix_t: Vec<Vec<T>> = Vec::with_capacity(images.len());
    for (i, sol) in solutions.into_iter().enumerate() {
        let coords = sol.ok_or(LinAlgError::NotAChainMap {
            degree,
            witness: i,
        })?;
        matrix_t.push(coords[n_b..].to_vec());
    }
    // matrix_t[j] holds the target coordinates of source class j; transpose
    let mut rendered = vec![vec![String::new(); src_classes.len()]; n_h];
    let mut rank_rows: Vec<BTreeMap<usize, T>> = vec![BTreeMap::new(); n_h];
    for (j, coords) in matrix_t.iter().enumerate() {
        for (i, v) in coords.iter().enumerate() {
            rendered[i][j] = v.to_string();
            if !v.is_zero() {
                rank_rows[i].insert(j, v.clone());
            }
        }
    }
    let induced_rank = rank_generic(rank_rows);
    Ok(InducedHomologyMap {
        source_dim: src_classes.len(),
        target_dim: n_h,
        matrix: rendered,
        is_isomorphism: src_classes.len() == n_h && induced_rank == n_h,
    })
}

/// Boundary columns (an image basis) and homology representatives (kernel
/// vectors extending them to a cycle basis) at one degree.
fn homology_basis<T: Scalar>(
    pair: &DegreePair<'_>,
    inject: impl Fn(i64) -> T + Copy,
) -> (Vec<ColVec<T>>, Vec<ColVec<T>>) {
    let kernel = kernel_basis(pair.outgoing.rows_as(inject), pair.outgoing.cols());
    let in_cols = pair.incoming.cols_as(inject);
    let pivot_cols = column_space_pivots(&in_cols, pair.incoming.rows());
    let boundaries: Vec<ColVec<T>> = pivot_cols.iter().map(|&c| in_cols[c].clone()).collect();

    // greedily extend the boundary basis to a basis of the cycle space
    let mut span = elim::IncrementalBasis::new();
    for b in &boundaries {
        let grew = span.insert(b.clone());
        debug_assert!(grew, "image columns were chosen independent");
    }
    let mut classes = Vec::new();
    for v in kernel {
        if span.insert(v.clone()) {
            classes.push(v);
        }
    }
    (boundaries, classes)
}

fn apply_cols<T: Scalar>(cols: &[ColVec<T>], v: &ColVec<T>, _rows: usize) -> ColVec<T> {
    let mut out: BTreeMap<usize, T> = BTreeMap::new();
    for (c, coef) in v {
        for (r, w) in &cols[*c] {
            let add = coef.clone() * w.clone();
            let entry = out.remove(r).map_or(add.clone(), |old| old + add);
            if entry.is_zero() {
                out.remove(r);
            } else {
                out.insert(*r, entry);
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}
