//! JSON file formats for groups, automorphisms and matrices.
//!
//! ```text
//! {"name": "Z4", "format": "table", "table": [[0,1,2,3], ...]}
//! {"name": "S3", "format": "permutations", "degree": 3, "generators": [[1,2,0], [1,0,2]]}
//! {"images": [0, 3, 2, 1]}
//! {"generator_images": [3]}
//! {"n": 2, "entries": [[2, 1], [1, 1]]}
//! ```

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::group::{Automorphism, FiniteGroup, GroupError};
use crate::lattice::{IntMatrix, LatticeError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IoError {
    #[error("MalformedJson: {0}")]
    Json(String),
    #[error("DegreeMismatch: generator {index} has length {len}, declared degree is {degree}")]
    DegreeMismatch { index: usize, len: usize, degree: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

impl From<serde_json::Error> for IoError {
    fn from(e: serde_json::Error) -> Self {
        IoError::Json(e.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(flatten)]
    pub body: GroupBody,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "format", rename_all = "lowercase")]
pub enum GroupBody {
    Table { table: Vec<Vec<usize>> },
    Permutations { degree: usize, generators: Vec<Vec<usize>> },
}

impl GroupFile {
    pub fn from_group(group: &FiniteGroup) -> Self {
        GroupFile {
            name: group.name().map(str::to_owned),
            body: GroupBody::Table { table: group.table_rows() },
        }
    }

    pub fn build(&self, order_cap: usize) -> Result<FiniteGroup, IoError> {
        let group = match &self.body {
            GroupBody::Table { table } => FiniteGroup::from_table_with_cap(table, order_cap)?,
            GroupBody::Permutations { degree, generators } => {
                if let Some((index, g)) = generators.iter().enumerate().find(|(_, g)| g.len() != *degree) {
                    return Err(IoError::DegreeMismatch { index, len: g.len(), degree: *degree });
                }
                if generators.is_empty() {
                    FiniteGroup::from_permutations_with_cap(&[(0..*degree).collect()], order_cap)?
                } else {
                    FiniteGroup::from_permutations_with_cap(generators, order_cap)?
                }
            }
        };
        Ok(match &self.name {
            Some(name) => group.with_name(name.clone()),
            None => group,
        })
    }
}

pub fn parse_group(text: &str, order_cap: usize) -> Result<FiniteGroup, IoError> {
    serde_json::from_str::<GroupFile>(text)?.build(order_cap)
}

/// Either the full image list or the images of [`FiniteGroup::generating_set`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AutomorphismFile {
    Images { images: Vec<usize> },
    GeneratorImages { generator_images: Vec<usize> },
}

impl AutomorphismFile {
    pub fn build(&self, group: &FiniteGroup) -> Result<Automorphism, IoError> {
        Ok(match self {
            AutomorphismFile::Images { images } => Automorphism::new(group, images.clone())?,
            AutomorphismFile::GeneratorImages { generator_images } => {
                group.automorphism_from_generator_images(generator_images)?
            }
        })
    }
}

pub fn parse_automorphism(text: &str, group: &FiniteGroup) -> Result<Automorphism, IoError> {
    serde_json::from_str::<AutomorphismFile>(text)?.build(group)
}

pub fn parse_matrix(text: &str) -> Result<IntMatrix, IoError> {
    Ok(serde_json::from_str(text)?)
}
