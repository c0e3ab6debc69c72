//! Serializable report structures assembled by the command-line front end.
//!
//! Reports are deterministic: the same configuration always serializes to
//! the same bytes. Timing therefore never appears here; the CLI prints it
//! to standard error instead.

use crate::compare::{BensonCheck, BurgheleaReport, CompareFailure};
use crate::exactla::{HomologySummary, InducedHomologyMap};
use crate::fingroup::{conjugacy_classes, FiniteGroup};
use crate::hochschild::DerivationsReport;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupSummary {
    pub label: String,
    pub order: usize,
    pub abelian: bool,
    pub conjugacy_class_count: usize,
    pub class_representatives: Vec<usize>,
    pub class_sizes: Vec<usize>,
}

pub fn group_summary(group: &FiniteGroup) -> GroupSummary {
    let classes = conjugacy_classes(group);
    GroupSummary {
        label: group.label().unwrap_or("(from file)").to_string(),
        order: group.order(),
        abelian: group.is_abelian(),
        conjugacy_class_count: classes.count(),
        class_sizes: classes.classes.iter().map(Vec::len).collect(),
        class_representatives: classes.representatives,
    }
}

/// (Co)homology dimensions of one complex, with torsion over the integers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BettiReport {
    pub complex: String,
    pub field: String,
    pub degrees: Vec<usize>,
    pub dimensions: Vec<usize>,
    pub torsion: Vec<Vec<String>>,
}

impl BettiReport {
    pub fn from_summaries(complex: &str, field: &str, rows: &[HomologySummary]) -> Self {
        BettiReport {
            complex: complex.to_string(),
            field: field.to_string(),
            degrees: rows.iter().map(|h| h.degree).collect(),
            dimensions: rows.iter().map(|h| h.dimension).collect(),
            torsion: rows.iter().map(|h| h.torsion.clone()).collect(),
        }
    }

    /// `complex,field,degree,dimension,torsion` lines without a header.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for i in 0..self.degrees.len() {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                self.complex,
                self.field,
                self.degrees[i],
                self.dimensions[i],
                self.torsion[i].join(";")
            ));
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} over {}:\n", self.complex, self.field);
        for i in 0..self.degrees.len() {
            out.push_str(&format!(
                "  degree {}: dim {}{}\n",
                self.degrees[i],
                self.dimensions[i],
                if self.torsion[i].is_empty() {
                    String::new()
                } else {
                    format!(", torsion [{}]", self.torsion[i].join(", "))
                }
            ));
        }
        out
    }
}

/// One commutation law, the signs it was checked with, and the witness on
/// failure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawVerification {
    pub law: String,
    pub degrees: Vec<usize>,
    /// Expected commutation sign per checked degree.
    pub signs: Vec<i64>,
    pub exhaustive: bool,
    pub holds: bool,
    pub witness: Option<CompareFailure>,
}

impl LawVerification {
    pub fn passed(law: &str, degrees: Vec<usize>, signs: Vec<i64>, exhaustive: bool) -> Self {
        LawVerification {
            law: law.to_string(),
            degrees,
            signs,
            exhaustive,
            holds: true,
            witness: None,
        }
    }

    pub fn failed(
        degrees: Vec<usize>,
        signs: Vec<i64>,
        exhaustive: bool,
        failure: CompareFailure,
    ) -> Self {
        LawVerification {
            law: failure.law.clone(),
            degrees,
            signs,
            exhaustive,
            holds: false,
            witness: Some(failure),
        }
    }
}

/// Shape and verdict of one induced map on (co)homology.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InducedSummary {
    pub degree: usize,
    pub source_dim: usize,
    pub target_dim: usize,
    pub is_isomorphism: bool,
}

pub fn induced_summaries(maps: &[InducedHomologyMap]) -> Vec<InducedSummary> {
    maps.iter()
        .enumerate()
        .map(|(degree, m)| InducedSummary {
            degree,
            source_dim: m.source_dim,
            target_dim: m.target_dim,
            is_isomorphism: m.is_isomorphism,
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub chain_law: LawVerification,
    pub cochain_law: LawVerification,
    /// Induced maps of S on homology, one per reliable degree.
    pub induced_homology: Vec<InducedSummary>,
    /// Induced maps of the ε-rescaled T on cohomology.
    pub induced_cohomology: Vec<InducedSummary>,
    pub all_passed: bool,
}

impl VerificationReport {
    pub fn compute_verdict(&mut self) {
        self.all_passed = self.chain_law.holds
            && self.cochain_law.holds
            && self.induced_homology.iter().all(|m| m.is_isomorphism)
            && self.induced_cohomology.iter().all(|m| m.is_isomorphism);
    }
}

/// Everything the `full-report` command emits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FullReport {
    pub group: GroupSummary,
    pub field: String,
    pub max_degree: usize,
    /// Basis dimensions `|G|^(k+1)` of the Hochschild and adjoint-nerve
    /// complexes, degrees `0..=N`.
    pub chain_dims: Vec<usize>,
    pub hochschild_homology: BettiReport,
    pub hochschild_cohomology: BettiReport,
    pub adjoint_nerve_homology: BettiReport,
    pub right_nerve_homology: BettiReport,
    pub bar_homology: BettiReport,
    /// Nerve cochains carry a finite-support condition that is vacuous for
    /// a finite group; recorded for the record.
    pub finite_support: bool,
    pub derivations: DerivationsReport,
    pub burghelea: BurgheleaReport,
    pub benson: BensonCheck,
    pub verification: VerificationReport,
}
