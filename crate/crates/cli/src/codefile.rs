//! The JSON code file: a field block and a generator of element tokens.
//!
//! ```json
//! {"field": {"p": 7, "e": 2, "modulus": [3, 6, 1]},
//!  "generator": [["w^28", "w", "w^39"], ["w^10", "w^13", "2"]],
//!  "metadata": {"name": "example"}}
//! ```

use std::path::Path;
use std::sync::Arc;

use insdel_core::gf::Field;
use insdel_core::LinearCode;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldSpec {
    pub p: u32,
    pub e: u32,
    /// Monic modulus, coefficients in ascending degree.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
}

impl FieldSpec {
    pub fn build(&self) -> Result<Field> {
        Ok(Field::new(self.p, self.e, self.modulus.as_deref())?)
    }

    pub fn of(field: &Field) -> FieldSpec {
        FieldSpec {
            p: field.characteristic(),
            e: field.degree(),
            modulus: (field.degree() > 1).then(|| field.modulus().to_vec()),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metadata {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeFile {
    pub field: FieldSpec,
    pub generator: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<Metadata>,
}

impl CodeFile {
    pub fn parse(text: &str) -> Result<CodeFile> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn read(path: &Path) -> Result<(CodeFile, Vec<u8>)> {
        let bytes = std::fs::read(path).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?;
        let text = std::str::from_utf8(&bytes).map_err(|e| CliError::Input(format!("code file is not UTF-8: {e}")))?;
        Ok((CodeFile::parse(text)?, bytes))
    }

    /// Parses every token and validates the rank.
    pub fn to_code(&self) -> Result<LinearCode> {
        let field = Arc::new(self.field.build()?);
        let n = self.generator.first().map_or(0, Vec::len);
        let mut rows = Vec::with_capacity(self.generator.len());
        for (r, row) in self.generator.iter().enumerate() {
            if row.len() != n {
                return Err(CliError::Input(format!(
                    "generator row {} has {} entries, expected {n}",
                    r + 1,
                    row.len()
                )));
            }
            let parsed = row
                .iter()
                .map(|t| field.parse(t))
                .collect::<insdel_core::Result<Vec<_>>>()?;
            rows.push(parsed);
        }
        Ok(LinearCode::from_rows(&field, &rows)?)
    }

    pub fn from_code(code: &LinearCode, metadata: Option<Metadata>) -> CodeFile {
        let f = code.field();
        CodeFile {
            field: FieldSpec::of(f),
            generator: code.generator().to_rows().iter().map(|r| f.format_word(r)).collect(),
            metadata,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("code files serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_ragged_rows() {
        let cf = CodeFile::parse(r#"{"field":{"p":2,"e":1},"generator":[["1","0"],["1"]]}"#).unwrap();
        assert!(matches!(cf.to_code(), Err(CliError::Input(_))));
    }

    #[test]
    fn rejects_unknown_keys_and_bad_tokens() {
        assert!(CodeFile::parse(r#"{"field":{"p":2,"e":1},"generator":[["1"]],"extra":1}"#).is_err());
        let cf = CodeFile::parse(r#"{"field":{"p":3,"e":1},"generator":[["w^x"]]}"#).unwrap();
        assert!(cf.to_code().is_err());
    }

    #[test]
    fn round_trip() {
        let cf = CodeFile::parse(r#"{"field":{"p":7,"e":2},"generator":[["w^28","w","2"],["0","1","w^47"]]}"#).unwrap();
        let code = cf.to_code().unwrap();
        let back = CodeFile::from_code(&code, None);
        assert_eq!(back.field.modulus, Some(vec![3, 6, 1]));
        assert!(back.to_code().unwrap().same_code(&code));
    }
}
