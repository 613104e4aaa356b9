//! JSON pair descriptors: the ambient `g` as a list of simple factors and the
//! subalgebra `h` as a named constructor, explicit matrices, or the fixed
//! points of an involution.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use areg_core::subalgebra::{embed, Embedding, Param};
use areg_core::{LieAlgebra, Rational, RationalMatrix, SimpleFactor};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::CliError;

/// A rational entry, written as an integer or a `"p/q"` string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry(pub Rational);

impl Serialize for Entry {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for Entry {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct EntryVisitor;

        impl Visitor<'_> for EntryVisitor {
            type Value = Entry;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer or a rational string such as \"-3/4\"")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Entry, E> {
                Ok(Entry(Rational::from_integer(v.into())))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Entry, E> {
                Ok(Entry(Rational::from_integer(v.into())))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Entry, E> {
                Rational::from_str(v.trim())
                    .map(Entry)
                    .map_err(|_| E::invalid_value(de::Unexpected::Str(v), &self))
            }
        }

        d.deserialize_any(EntryVisitor)
    }
}

pub type Matrix = Vec<Vec<Entry>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubalgebraSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub constructor: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<Vec<Param>>,
    /// Basis elements, each a list of one matrix per simple factor of `g`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub custom: Option<Vec<Vec<Matrix>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairDescriptorFile {
    pub g: Vec<SimpleFactor>,
    /// Accepted only to reject it with a clear message.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub center: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<SubalgebraSpec>,
    /// Coordinate matrix of an involution of `g` whose fixed points are `h`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub involution: Option<Matrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_verdict: Option<bool>,
}

fn field(field: impl Into<String>, source: areg_core::Error) -> CliError {
    CliError::Field {
        field: field.into(),
        message: source.to_string(),
    }
}

fn matrix(m: &Matrix, name: &str) -> Result<RationalMatrix, CliError> {
    let cols = m.first().map_or(0, Vec::len);
    let rows = m.iter().map(|r| r.iter().map(|e| e.0.clone()).collect()).collect();
    RationalMatrix::from_rows(cols, rows).map_err(|e| field(name, e))
}

impl PairDescriptorFile {
    /// Parses descriptor text; errors name the JSON path of the bad field.
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let de = &mut serde_json::Deserializer::from_str(text);
        serde_path_to_error::deserialize(de).map_err(|e| {
            let path = e.path().to_string();
            CliError::Field {
                field: if path == "." { "<root>".into() } else { path },
                message: e.into_inner().to_string(),
            }
        })
    }

    pub fn ambient(&self) -> Result<Arc<LieAlgebra>, CliError> {
        if self.center.is_some_and(|c| c > 0) {
            return Err(CliError::Field {
                field: "center".into(),
                message: "the ambient algebra must be semisimple".into(),
            });
        }
        if self.g.is_empty() {
            return Err(CliError::Field {
                field: "g".into(),
                message: "at least one simple factor is required".into(),
            });
        }
        for (i, f) in self.g.iter().enumerate() {
            SimpleFactor::new(f.family, f.rank).map_err(|e| field(format!("g[{i}]"), e))?;
        }
        Ok(Arc::new(LieAlgebra::new(&self.g, 0).map_err(|e| field("g", e))?))
    }

    pub fn embedding(&self) -> Result<Embedding, CliError> {
        let ambient = self.ambient()?;
        let theta = self
            .involution
            .as_ref()
            .map(|m| matrix(m, "involution"))
            .transpose()?;
        let Some(h) = &self.h else {
            let theta = theta.ok_or_else(|| CliError::Field {
                field: "h".into(),
                message: "either h or involution is required".into(),
            })?;
            return Embedding::from_involution(ambient, theta).map_err(|e| field("involution", e));
        };
        match (&h.constructor, &h.custom) {
            (Some(name), None) => {
                if theta.is_some() {
                    return Err(CliError::Field {
                        field: "involution".into(),
                        message: "named constructors carry their own involution; give h.custom instead".into(),
                    });
                }
                let params = h.params.clone().unwrap_or_default();
                embed(&ambient, name, &params).map_err(|e| field("h", e))
            }
            (None, Some(elements)) => {
                if h.params.is_some() {
                    return Err(CliError::Field {
                        field: "h.params".into(),
                        message: "params only apply to a named constructor".into(),
                    });
                }
                let vectors = elements
                    .iter()
                    .enumerate()
                    .map(|(i, ms)| {
                        let name = format!("h.custom[{i}]");
                        let ms: Vec<RationalMatrix> = ms
                            .iter()
                            .enumerate()
                            .map(|(k, m)| matrix(m, &format!("{name}[{k}]")))
                            .collect::<Result<_, _>>()?;
                        ambient
                            .from_matrices(&ms)
                            .map(|e| e.into_coords())
                            .map_err(|e| field(name, e))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Embedding::new(ambient, &vectors, theta).map_err(|e| field("h.custom", e))
            }
            _ => Err(CliError::Field {
                field: "h".into(),
                message: "give exactly one of `constructor` or `custom`".into(),
            }),
        }
    }
}
