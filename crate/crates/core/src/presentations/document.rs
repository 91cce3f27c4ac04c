use serde::{Deserialize, Serialize};

use super::{Generator, Polarity, Presentation};
use crate::error::{Error, Result};
use crate::geometry::Polytope;
use crate::laurent::LaurentPoly;

const FORMAT: &str = "minkring-presentation";
const VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct Document {
    format: String,
    version: u32,
    id: String,
    unit: String,
    #[serde(default)]
    generators: Vec<GeneratorEntry>,
    #[serde(default)]
    declared: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct GeneratorEntry {
    name: String,
    polytope: String,
    invertible: bool,
}

impl Presentation {
    /// Serializes to a versioned TOML document.
    pub fn to_document(&self) -> String {
        let doc = Document {
            format: FORMAT.into(),
            version: VERSION,
            id: self.id.clone(),
            unit: self.unit.to_string(),
            generators: self
                .generators
                .iter()
                .map(|g| GeneratorEntry {
                    name: g.name.clone(),
                    polytope: g.polytope.to_string(),
                    invertible: g.polarity == Polarity::Invertible,
                })
                .collect(),
            declared: self.declared.iter().map(ToString::to_string).collect(),
        };
        toml::to_string(&doc).expect("document serializes")
    }

    /// Reads a document written by [`Presentation::to_document`], re-verifying
    /// every declared generator.
    pub fn from_document(text: &str) -> Result<Presentation> {
        let doc: Document = toml::from_str(text).map_err(|e| Error::Document(e.to_string()))?;
        if doc.format != FORMAT {
            return Err(Error::Document(format!(
                "unexpected format `{}`",
                doc.format
            )));
        }
        if doc.version != VERSION {
            return Err(Error::Document(format!(
                "unsupported version {}",
                doc.version
            )));
        }
        let generators = doc
            .generators
            .iter()
            .map(|g| {
                let polarity = if g.invertible {
                    Polarity::Invertible
                } else {
                    Polarity::Plain
                };
                Ok(Generator::new(
                    g.name.clone(),
                    g.polytope.parse::<Polytope>()?,
                    polarity,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        let unit: Polytope = doc.unit.parse()?;
        let skeleton = Presentation::new(doc.id, generators, unit, Vec::new())?;
        let declared = doc
            .declared
            .iter()
            .map(|d| skeleton.parse(d))
            .collect::<Result<Vec<LaurentPoly>>>()?;
        skeleton.with_declared(declared)
    }
}
