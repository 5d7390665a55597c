//! JSON code files and 0/1 matrix export.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::code::{Code, Codeword};
use crate::error::{Error, Result};
use crate::group::{GridGroup, GroupElement};

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metadata {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub construction: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub regularity: Option<(u32, u32)>,
}

/// On-disk form of a code. Nothing in `metadata` is trusted on load.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeFile {
    pub m: u32,
    pub n: u32,
    pub lambda_a: u32,
    pub lambda_c: u32,
    pub codewords: Vec<[[u32; 2]; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<Metadata>,
}

impl CodeFile {
    pub fn from_code(code: &Code, metadata: Option<Metadata>) -> Self {
        let g = code.group();
        CodeFile {
            m: g.m(),
            n: g.n(),
            lambda_a: code.lambda_a(),
            lambda_c: code.lambda_c(),
            codewords: code
                .codewords()
                .iter()
                .map(|c| c.elements().map(|a| [a.x, a.y]))
                .collect(),
            metadata,
        }
    }

    /// Rebuild the code. Elements must already be reduced into the group.
    pub fn to_code(&self) -> Result<Code> {
        let g = GridGroup::new(self.m, self.n)?;
        let words = self
            .codewords
            .iter()
            .enumerate()
            .map(|(i, c)| {
                Codeword::new(&g, c.map(|[x, y]| GroupElement { x, y }))
                    .map_err(|e| Error::Format(format!("codeword #{i}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Code::new(g, self.lambda_a, self.lambda_c, words)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("code files always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|source| Error::Io { path: path.to_owned(), source })?;
        Self::from_json(&text)
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        fs::write(path, self.to_json() + "\n").map_err(|source| Error::Io { path: path.to_owned(), source })
    }
}

/// Each codeword as an `m x n` 0/1 matrix, one row per line, with a blank
/// line between codewords.
pub fn matrix_export(code: &Code) -> String {
    let g = code.group();
    let mut out = String::new();
    for (k, c) in code.codewords().iter().enumerate() {
        if k > 0 {
            out.push('\n');
        }
        for x in 0..g.m() {
            let line: String = (0..g.n())
                .map(|y| if c.contains(GroupElement { x, y }) { '1' } else { '0' })
                .collect();
            out.push_str(&line);
            out.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let g = GridGroup::new(2, 6).unwrap();
        let words = vec![
            Codeword::from_pairs(&g, [(0, 0), (0, 1), (1, 2)]).unwrap(),
            Codeword::from_pairs(&g, [(1, 0), (0, 0), (0, 3)]).unwrap(),
        ];
        let code = Code::new(g, 2, 1, words).unwrap();
        let meta = Metadata { construction: Some("listing".into()), regularity: Some((1, 3)) };
        let file = CodeFile::from_code(&code, Some(meta));
        let back = CodeFile::from_json(&file.to_json()).unwrap();
        assert_eq!(back, file);
        assert_eq!(back.to_code().unwrap(), code);
    }

    #[test]
    fn bad_files_rejected() {
        assert!(CodeFile::from_json("{").is_err());
        let f = CodeFile { m: 2, n: 2, lambda_a: 2, lambda_c: 1, codewords: vec![[[0, 0], [0, 0], [1, 1]]], metadata: None };
        assert!(f.to_code().is_err());
        let f = CodeFile { m: 2, n: 2, lambda_a: 2, lambda_c: 1, codewords: vec![[[0, 0], [0, 5], [1, 1]]], metadata: None };
        assert!(f.to_code().is_err());
    }

    #[test]
    fn matrix_layout() {
        let g = GridGroup::new(2, 2).unwrap();
        let code = Code::new(g, 2, 1, vec![Codeword::from_pairs(&g, [(0, 0), (1, 0), (0, 1)]).unwrap()]).unwrap();
        assert_eq!(matrix_export(&code), "11\n10\n");
    }
}
