//! Pinned JSON document shapes.
//!
//! - word: `{"system":"A2","letters":[1,2,1,2,1]}`
//! - spec: `{"system":"A2","word":[1,2,1,2,1],"rho_word":[1,2,1]}`
//! - complex: `{"vertices":[…],"facets":[[…],…]}`, where `"facets":[[]]`
//!   encodes the EMPTY complex and `"facets":[]` the VOID complex
//! - move sequence: `{"start":{word},"moves":[{"op":…,"pos":…},…]}`
//! - transform script: `{"start":{spec},"steps":[{"op":…,"pos":…},…]}`
//!
//! [`to_canonical_json`] renders any serializable value with sorted object
//! keys and canonically ordered arrays, so identical inputs produce
//! byte-identical documents.

use serde::{Deserialize, Serialize};

use crate::coxeter::CoxeterSystem;
use crate::simplicial::SimplicialComplex;
use crate::subword::SubwordSpec;
use crate::transforms::TransformScript;
use crate::words::{Move, MoveSequence, Word};
use crate::Result;

/// A word tied to its system descriptor.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct WordDoc {
    pub system: String,
    pub letters: Vec<usize>,
}

impl WordDoc {
    pub fn new(sys: &CoxeterSystem, word: &Word) -> Self {
        WordDoc {
            system: sys.descriptor(),
            letters: word.letters().to_vec(),
        }
    }

    /// Re-creates the system and the (validated) word.
    pub fn load(&self) -> Result<(CoxeterSystem, Word)> {
        let sys = CoxeterSystem::parse(&self.system)?;
        let word = Word::new(self.letters.clone());
        word.validate(&sys)?;
        Ok((sys, word))
    }
}

/// A subword-complex spec; `rho` is carried as a word and canonicalized on
/// load.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SpecDoc {
    pub system: String,
    pub word: Vec<usize>,
    pub rho_word: Vec<usize>,
}

impl SpecDoc {
    pub fn new(sys: &CoxeterSystem, spec: &SubwordSpec) -> Self {
        SpecDoc {
            system: sys.descriptor(),
            word: spec.word.letters().to_vec(),
            rho_word: crate::words::reduced_word(sys, &spec.rho).letters().to_vec(),
        }
    }

    pub fn load(&self) -> Result<(CoxeterSystem, SubwordSpec)> {
        let sys = CoxeterSystem::parse(&self.system)?;
        let spec = SubwordSpec::from_rho_word(
            &sys,
            Word::new(self.word.clone()),
            &Word::new(self.rho_word.clone()),
        )?;
        Ok((sys, spec))
    }
}

/// A complex by sorted vertices and facets.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ComplexDoc {
    pub vertices: Vec<String>,
    pub facets: Vec<Vec<String>>,
}

impl ComplexDoc {
    pub fn new(complex: &SimplicialComplex) -> Self {
        ComplexDoc {
            vertices: complex.vertices().into_iter().collect(),
            facets: complex
                .facets()
                .map(|f| f.iter().cloned().collect())
                .collect(),
        }
    }

    pub fn load(&self) -> SimplicialComplex {
        if self.facets.is_empty() {
            return SimplicialComplex::void();
        }
        SimplicialComplex::from_facets(self.facets.clone())
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct MoveSequenceDoc {
    pub start: WordDoc,
    pub moves: Vec<Move>,
}

impl MoveSequenceDoc {
    pub fn new(sys: &CoxeterSystem, seq: &MoveSequence) -> Self {
        MoveSequenceDoc {
            start: WordDoc::new(sys, &seq.start),
            moves: seq.moves.clone(),
        }
    }

    pub fn load(&self) -> Result<(CoxeterSystem, MoveSequence)> {
        let (sys, start) = self.start.load()?;
        Ok((
            sys,
            MoveSequence {
                start,
                moves: self.moves.clone(),
            },
        ))
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ScriptDoc {
    pub start: SpecDoc,
    pub steps: Vec<Move>,
}

impl ScriptDoc {
    pub fn new(sys: &CoxeterSystem, script: &TransformScript) -> Self {
        ScriptDoc {
            start: SpecDoc::new(sys, &script.start),
            steps: script.steps.clone(),
        }
    }

    pub fn load(&self) -> Result<(CoxeterSystem, TransformScript)> {
        let (sys, start) = self.start.load()?;
        let script = TransformScript {
            start,
            steps: self.steps.clone(),
        };
        script.validate(&sys)?;
        Ok((sys, script))
    }
}

/// Serializes with alphabetically sorted object keys (via the value
/// representation) and a trailing newline.
pub fn to_canonical_json<T: Serialize>(value: &T) -> Result<String> {
    let value = serde_json::to_value(value)?;
    Ok(format!("{}\n", serde_json::to_string_pretty(&value)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subword::subword_complex;

    #[test]
    fn word_doc_roundtrip() {
        let json = r#"{"system":"A2","letters":[1,2,1,2,1]}"#;
        let doc: WordDoc = serde_json::from_str(json).unwrap();
        let (sys, word) = doc.load().unwrap();
        assert_eq!(sys.descriptor(), "A2");
        assert_eq!(word, Word::new(vec![1, 2, 1, 2, 1]));
        assert_eq!(WordDoc::new(&sys, &word), doc);
    }

    #[test]
    fn complex_doc_encodes_void_and_empty() {
        let void_doc = ComplexDoc::new(&SimplicialComplex::void());
        assert!(void_doc.facets.is_empty());
        assert_eq!(void_doc.load(), SimplicialComplex::void());

        let empty_doc = ComplexDoc::new(&SimplicialComplex::empty());
        assert_eq!(empty_doc.facets, vec![Vec::<String>::new()]);
        assert_eq!(empty_doc.load(), SimplicialComplex::empty());
    }

    #[test]
    fn spec_doc_roundtrip_through_complex() {
        let json = r#"{"system":"A2","word":[1,2,1,2,1],"rho_word":[2,1,2]}"#;
        let doc: SpecDoc = serde_json::from_str(json).unwrap();
        let (sys, spec) = doc.load().unwrap();
        assert_eq!(spec.rho, sys.longest_element());
        let complex = subword_complex(&sys, &spec).unwrap();
        let complex_doc = ComplexDoc::new(&complex);
        assert_eq!(complex_doc.load(), complex);
    }

    #[test]
    fn move_sequence_doc_roundtrip() {
        let sys = CoxeterSystem::parse("A2").unwrap();
        let q = Word::new(vec![1, 1, 2, 1, 2, 1]);
        let seq =
            crate::words::hecke_reduce(&sys, &q, &crate::words::HeckeReduceOptions::default())
                .unwrap();
        let doc = MoveSequenceDoc::new(&sys, &seq);
        let json = serde_json::to_string(&doc).unwrap();
        let parsed: MoveSequenceDoc = serde_json::from_str(&json).unwrap();
        let (sys2, seq2) = parsed.load().unwrap();
        assert_eq!(seq2, seq);
        assert_eq!(seq2.terminal(&sys2).unwrap(), seq.terminal(&sys).unwrap());
    }

    #[test]
    fn canonical_json_sorts_keys() {
        let doc: SpecDoc = serde_json::from_str(
            r#"{"system":"A2","word":[1],"rho_word":[1]}"#,
        )
        .unwrap();
        let text = to_canonical_json(&doc).unwrap();
        let rho_at = text.find("\"rho_word\"").unwrap();
        let system_at = text.find("\"system\"").unwrap();
        let word_at = text.find("\"word\"").unwrap();
        assert!(rho_at < system_at && system_at < word_at);
        assert!(text.ends_with('\n'));
    }
}
