//! Matrix representations given by generator images.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::BitMat;
use crate::symgrp::{alternating_labels, coxeter_labels, Perm};

/// Which group the generators belong to, and how they were chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "n", rename_all = "lowercase")]
pub enum GroupKind {
    /// Generators are the Coxeter transpositions `s_1..s_{n-1}`.
    Symmetric(usize),
    /// Generators are `s_1 s_i` for `2 <= i < n`.
    Alternating(usize),
    /// Generators with no permutation interpretation.
    Abstract,
}

impl GroupKind {
    /// Standard labels for the generators of this group.
    #[must_use]
    pub fn standard_labels(self) -> Option<Vec<String>> {
        match self {
            GroupKind::Symmetric(n) => Some(coxeter_labels(n)),
            GroupKind::Alternating(n) => Some(alternating_labels(n)),
            GroupKind::Abstract => None,
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupKind::Symmetric(n) => write!(f, "S{n}"),
            GroupKind::Alternating(n) => write!(f, "A{n}"),
            GroupKind::Abstract => f.write_str("abstract"),
        }
    }
}

/// A representation `ρ` acting on column vectors of length `degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupRep {
    degree: usize,
    kind: GroupKind,
    labels: Vec<String>,
    gens: Vec<BitMat>,
}

impl GroupRep {
    /// Checks that every generator is an invertible `degree × degree` matrix.
    pub fn new(
        degree: usize,
        kind: GroupKind,
        labels: Vec<String>,
        gens: Vec<BitMat>,
    ) -> Result<Self> {
        if labels.len() != gens.len() {
            return Err(Error::LabelMismatch(format!(
                "{} labels for {} generators",
                labels.len(),
                gens.len()
            )));
        }
        for (label, g) in labels.iter().zip(&gens) {
            if g.n_rows() != degree || g.n_cols() != degree {
                return Err(Error::DimensionMismatch(format!(
                    "generator {label} is {}x{}, expected {degree}x{degree}",
                    g.n_rows(),
                    g.n_cols()
                )));
            }
            if !g.is_invertible() {
                return Err(Error::InvalidArgument(format!(
                    "generator {label} is not invertible"
                )));
            }
        }
        Ok(Self {
            degree,
            kind,
            labels,
            gens,
        })
    }

    /// A representation of a symmetric or alternating group with its
    /// standard generator labels.
    pub fn with_standard_labels(degree: usize, kind: GroupKind, gens: Vec<BitMat>) -> Result<Self> {
        let labels = kind.standard_labels().ok_or_else(|| {
            Error::InvalidArgument("abstract groups have no standard labels".into())
        })?;
        Self::new(degree, kind, labels, gens)
    }

    #[must_use]
    pub fn degree(&self) -> usize {
        self.degree
    }

    #[must_use]
    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    #[must_use]
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    #[must_use]
    pub fn generators(&self) -> &[BitMat] {
        &self.gens
    }

    #[must_use]
    pub fn generator(&self, i: usize) -> &BitMat {
        &self.gens[i]
    }

    #[must_use]
    pub fn n_generators(&self) -> usize {
        self.gens.len()
    }

    /// The product `ρ(g_{w_0}) ρ(g_{w_1}) ⋯`.
    pub fn eval_word(&self, word: &[usize]) -> Result<BitMat> {
        let mut m = BitMat::identity(self.degree);
        for &k in word {
            let g = self.gens.get(k).ok_or_else(|| {
                Error::InvalidArgument(format!("generator index {k} out of range"))
            })?;
            m = m.mul(g)?;
        }
        Ok(m)
    }

    /// `ρ(p)` for a permutation in the underlying symmetric or alternating
    /// group.
    pub fn perm_matrix(&self, p: &Perm) -> Result<BitMat> {
        match self.kind {
            GroupKind::Symmetric(n) if p.degree() == n => self.eval_word(&p.coxeter_word()),
            GroupKind::Alternating(n) if p.degree() == n => self.eval_word(&p.alternating_word()?),
            GroupKind::Abstract => Err(Error::InvalidArgument(
                "cannot evaluate a permutation in an abstract representation".into(),
            )),
            kind => Err(Error::DimensionMismatch(format!(
                "permutation of degree {} in a representation of {kind}",
                p.degree()
            ))),
        }
    }

    /// Same group and labels, new matrices (e.g. after a change of basis).
    pub(crate) fn with_generators(&self, degree: usize, gens: Vec<BitMat>) -> Result<Self> {
        Self::new(degree, self.kind, self.labels.clone(), gens)
    }
}
