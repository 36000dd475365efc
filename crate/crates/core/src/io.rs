//! JSON file formats shared by the CLI and the FFI layer.

use std::fs;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::complex::{is_k_reducible, BHypergraph, Reducibility, ReflectionComplex, Step};
use crate::error::{Error, Result};
use crate::graph::{Hypergraph, TargetGraph};
use crate::setfun::Vertex;

/// A complex on disk: either a trace replayed from the trivial complex, or an
/// explicit b-hypergraph (checked for reducibility before use).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ComplexFile {
    Trace {
        arity: usize,
        trace: Vec<Step>,
    },
    Explicit {
        arity: usize,
        vertices: Vec<Vertex>,
        edges: Vec<Vec<Vertex>>,
        #[serde(default)]
        relation: Vec<(Vec<Vertex>, Vec<Vertex>)>,
    },
}

impl ComplexFile {
    pub fn from_complex(m: &ReflectionComplex) -> Self {
        ComplexFile::Trace { arity: m.arity(), trace: m.trace().to_vec() }
    }

    pub fn arity(&self) -> usize {
        match self {
            ComplexFile::Trace { arity, .. } | ComplexFile::Explicit { arity, .. } => *arity,
        }
    }

    /// The b-hypergraph this file describes, rejecting explicit ones that are
    /// not reducible.
    pub fn load(&self) -> Result<Loaded> {
        match self {
            ComplexFile::Trace { arity, trace } => Ok(Loaded::Traced(ReflectionComplex::from_trace(*arity, trace)?)),
            ComplexFile::Explicit { arity, vertices, edges, relation } => {
                if *arity < 2 {
                    return Err(Error::Arity(format!("arity must be at least 2, got {arity}")));
                }
                let base = BHypergraph::from_labels(vertices, edges, relation)?;
                match is_k_reducible(&base, *arity) {
                    Reducibility::Reducible(_) => Ok(Loaded::Explicit { arity: *arity, base }),
                    Reducibility::Irreducible { witness, full_set_missing: true } => {
                        Err(Error::Precondition(format!("not {arity}-reducible: the full vertex set {witness:?} is not an edge")))
                    }
                    Reducibility::Irreducible { witness, .. } => {
                        Err(Error::Precondition(format!("not {arity}-reducible: edge {witness:?} has no related split")))
                    }
                }
            }
        }
    }
}

/// A loaded complex. Only traced complexes support the constructive routes
/// and coupling measures.
#[derive(Clone, Debug)]
pub enum Loaded {
    Traced(ReflectionComplex),
    Explicit { arity: usize, base: BHypergraph },
}

impl Loaded {
    pub fn arity(&self) -> usize {
        match self {
            Loaded::Traced(m) => m.arity(),
            Loaded::Explicit { arity, .. } => *arity,
        }
    }

    pub fn base(&self) -> &BHypergraph {
        match self {
            Loaded::Traced(m) => m.base(),
            Loaded::Explicit { base, .. } => base,
        }
    }

    pub fn traced(&self) -> Result<&ReflectionComplex> {
        match self {
            Loaded::Traced(m) => Ok(m),
            Loaded::Explicit { .. } => Err(Error::Precondition("this operation needs a complex given by a trace".into())),
        }
    }
}

pub fn from_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    Ok(serde_json::from_str(text)?)
}

pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    fs::write(path, to_json(value)?).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

pub fn read_graph(path: &Path) -> Result<Hypergraph> {
    read_json(path)
}

pub fn read_target(path: &Path) -> Result<TargetGraph> {
    TargetGraph::new(read_graph(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_file_forms() {
        let t: ComplexFile = from_json(r#"{"arity": 2, "trace": [{"L": [1, 2], "X": [1]}]}"#).unwrap();
        let m = t.load().unwrap();
        assert_eq!(m.traced().unwrap().vertex_count(), 3);
        assert_eq!(from_json::<ComplexFile>(&to_json(&t).unwrap()).unwrap(), t);

        let e: ComplexFile =
            from_json(r#"{"arity": 2, "vertices": [1, 2, 3], "edges": [[1, 2, 3], [1, 2], [2, 3]]}"#).unwrap();
        assert!(matches!(e.load(), Err(Error::Precondition(_))));
        let ok: ComplexFile = from_json(
            r#"{"arity": 2, "vertices": [1, 2, 3], "edges": [[1, 2, 3], [1, 2], [2, 3]], "relation": [[[1, 2], [2, 3]]]}"#,
        )
        .unwrap();
        assert!(ok.load().unwrap().traced().is_err());
    }
}
