//! JSON schemas for representations, spreads and certificates. Bit strings
//! list coordinate 0 first.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forms::QuadForm;
use crate::gf2::{BitMat, Subspace};
use crate::rep::{GroupKind, GroupRep};
use crate::spreads::{Provenance, Spread, SpreadReport};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorJson {
    pub label: String,
    pub rows: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupRepJson {
    pub degree: usize,
    pub group: GroupKind,
    pub generators: Vec<GeneratorJson>,
}

impl From<&GroupRep> for GroupRepJson {
    fn from(rep: &GroupRep) -> Self {
        GroupRepJson {
            degree: rep.degree(),
            group: rep.kind(),
            generators: rep
                .labels()
                .iter()
                .zip(rep.generators())
                .map(|(label, g)| GeneratorJson {
                    label: label.clone(),
                    rows: g.row_strings(),
                })
                .collect(),
        }
    }
}

impl TryFrom<GroupRepJson> for GroupRep {
    type Error = Error;

    fn try_from(j: GroupRepJson) -> Result<Self> {
        let mut labels = Vec::with_capacity(j.generators.len());
        let mut gens = Vec::with_capacity(j.generators.len());
        for g in j.generators {
            if g.rows.len() != j.degree {
                return Err(Error::Parse(format!(
                    "generator {} has {} rows, expected {}",
                    g.label,
                    g.rows.len(),
                    j.degree
                )));
            }
            gens.push(BitMat::from_row_strings(j.degree, &g.rows)?);
            labels.push(g.label);
        }
        GroupRep::new(j.degree, j.group, labels, gens)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpreadJson {
    pub ambient_dim: usize,
    pub form: QuadForm,
    pub members: Vec<Vec<String>>,
    pub provenance: Provenance,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<SpreadReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rep: Option<GroupRepJson>,
}

impl SpreadJson {
    #[must_use]
    pub fn new(spread: &Spread, report: Option<&SpreadReport>) -> Self {
        SpreadJson {
            ambient_dim: spread.ambient_dim(),
            form: spread.form.clone(),
            members: spread.members.iter().map(Subspace::row_strings).collect(),
            provenance: spread.provenance.clone(),
            report: report.cloned(),
            rep: spread.rep.as_ref().map(GroupRepJson::from),
        }
    }
}

impl TryFrom<SpreadJson> for Spread {
    type Error = Error;

    /// Member bases are re-canonicalized; the stored report is discarded.
    fn try_from(j: SpreadJson) -> Result<Self> {
        if j.form.dim() != j.ambient_dim {
            return Err(Error::Parse(format!(
                "form dimension {} differs from ambient dimension {}",
                j.form.dim(),
                j.ambient_dim
            )));
        }
        let members = j
            .members
            .iter()
            .map(|rows| {
                Ok(Subspace::row_space(&BitMat::from_row_strings(
                    j.ambient_dim,
                    rows,
                )?))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Spread {
            members,
            form: j.form,
            provenance: j.provenance,
            rep: j.rep.map(GroupRep::try_from).transpose()?,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub details: String,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool, details: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            pass,
            details: details.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub command: String,
    pub inputs: serde_json::Value,
    pub outputs: serde_json::Value,
    pub checks: Vec<Check>,
    pub tool_version: String,
    pub seed: u64,
}

impl Certificate {
    #[must_use]
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    fs::write(path, s)?;
    Ok(())
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    Ok(serde_json::from_str(&fs::read_to_string(path)?)?)
}

pub fn read_spread(path: &Path) -> Result<Spread> {
    read_json::<SpreadJson>(path)?.try_into()
}
