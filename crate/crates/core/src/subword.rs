//! Subword complexes `Δ(Q; ρ)` and the named families.
//!
//! Vertices are labeled by positions of `Q` as `"p1".."pm"`, so complexes
//! built from different words are comparable only through an explicit
//! isomorphism, never by accidental label equality. Positions appearing in
//! no facet (letters used by every embedded reduced expression) are not
//! vertices.

use std::collections::BTreeMap;

use crate::coxeter::{CoxeterSystem, GroupElement};
use crate::simplicial::{Face, Label, SimplicialComplex};
use crate::words::{
    c_sorting_word, check_coxeter_word, demazure_product, enumerate_embeddings, Word,
};
use crate::{Error, Result};

/// A word together with the target element. Positions of the word label the
/// prospective vertices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SubwordSpec {
    pub word: Word,
    pub rho: GroupElement,
}

impl SubwordSpec {
    pub fn new(sys: &CoxeterSystem, word: Word, rho: GroupElement) -> Result<Self> {
        word.validate(sys)?;
        Ok(SubwordSpec { word, rho })
    }

    /// Builds the spec with `ρ` given by a word (any word; canonicalized
    /// through the group).
    pub fn from_rho_word(sys: &CoxeterSystem, word: Word, rho_word: &Word) -> Result<Self> {
        let rho = sys.element_of_word(rho_word.letters())?;
        SubwordSpec::new(sys, word, rho)
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn position_labels(&self) -> Vec<Label> {
        (1..=self.word.len()).map(position_label).collect()
    }
}

/// Label of a 1-based position.
pub fn position_label(p: usize) -> Label {
    format!("p{p}")
}

/// Inverse of [`position_label`].
pub fn label_position(label: &str) -> Option<usize> {
    label.strip_prefix('p')?.parse().ok()
}

/// The subword complex: facets are the complements, in position labels, of
/// the embedded reduced expressions of `ρ` in `Q`. VOID iff `Q` contains no
/// reduced expression of `ρ`; EMPTY iff `Q` itself is one.
pub fn subword_complex(sys: &CoxeterSystem, spec: &SubwordSpec) -> Result<SimplicialComplex> {
    let embeddings = enumerate_embeddings(sys, &spec.word, &spec.rho)?;
    if embeddings.is_empty() {
        return Ok(SimplicialComplex::void());
    }
    let m = spec.word.len();
    let facets = embeddings.into_iter().map(|emb| {
        let chosen: Vec<bool> = {
            let mut mask = vec![false; m + 1];
            for p in emb {
                mask[p] = true;
            }
            mask
        };
        (1..=m)
            .filter(|&p| !chosen[p])
            .map(position_label)
            .collect::<Vec<_>>()
    });
    Ok(SimplicialComplex::from_facets(facets))
}

/// The sphericity criterion: `Δ(Q;ρ)` is a sphere iff `δ(Q) = ρ`.
pub fn is_spherical(sys: &CoxeterSystem, spec: &SubwordSpec) -> Result<bool> {
    Ok(demazure_product(sys, &spec.word)? == spec.rho)
}

/// Deletes the positions named by a face of `Δ(Q;ρ)`; the subword complex
/// of the result realizes the link of that face. Also returns the map from
/// retained old position labels to their new ones.
pub fn link_spec(
    sys: &CoxeterSystem,
    spec: &SubwordSpec,
    face: &Face,
) -> Result<(SubwordSpec, BTreeMap<Label, Label>)> {
    let complex = subword_complex(sys, spec)?;
    if !complex.is_face(face) {
        return Err(Error::NotAFace(
            face.iter().cloned().collect::<Vec<_>>().join(","),
        ));
    }
    let mut drop = vec![false; spec.word.len() + 1];
    for label in face {
        let p = label_position(label)
            .filter(|&p| p >= 1 && p <= spec.word.len())
            .ok_or_else(|| Error::Parse(format!("not a position label: {label}")))?;
        drop[p] = true;
    }
    let mut letters = Vec::new();
    let mut map = BTreeMap::new();
    for (idx, &letter) in spec.word.letters().iter().enumerate() {
        let p = idx + 1;
        if !drop[p] {
            letters.push(letter);
            map.insert(position_label(p), position_label(letters.len()));
        }
    }
    Ok((
        SubwordSpec {
            word: Word::new(letters),
            rho: spec.rho.clone(),
        },
        map,
    ))
}

/// The cluster-complex spec `Δ(c·w_o(c); w_o)` for a Coxeter-element word
/// `c`.
pub fn cluster_spec(sys: &CoxeterSystem, c: &Word) -> Result<SubwordSpec> {
    multicluster_spec(sys, c, 1)
}

/// The k-cluster spec `Δ(c^k·w_o(c); w_o)`, `k ≥ 1`.
pub fn multicluster_spec(sys: &CoxeterSystem, c: &Word, k: usize) -> Result<SubwordSpec> {
    check_coxeter_word(sys, c)?;
    if k < 1 {
        return Err(Error::Parse("multicluster parameter k must be ≥ 1".into()));
    }
    let wo = sys.longest_element();
    let sorting = c_sorting_word(sys, c, &wo)?;
    Ok(SubwordSpec {
        word: c.repeat(k).concat(&sorting),
        rho: wo,
    })
}
