//! Transformations of subword complexes induced by letter doubling, and the
//! replayable pipeline from the 0-Hecke normal form of a word back up to
//! the word itself.
//!
//! Doubling the letter at position `p` of `Q` sends `Δ(Q;ρ)` to `Δ(Q';ρ)`
//! facet by facet: writing `q⁰` for the doubled position and `q¹`, `q²` for
//! the two copies in `Q'`, a facet avoiding `q⁰` contributes once with `q¹`
//! appended and once with `q²` appended, while a facet containing `q⁰`
//! contributes once with `q⁰` replaced by the pair `{q¹, q²}`. The result
//! either equals the suspension of `Δ(Q;ρ)` (when `q⁰` is not a vertex) or
//! collapses onto it by an edge subdivision at `{q¹, q²}`; either way the
//! links of `q¹` and `q²` recover `Δ(Q;ρ)`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::coxeter::{CoxeterSystem, GroupElement};
use crate::simplicial::{face, FVector, Label, SimplicialComplex};
use crate::subword::{label_position, position_label, subword_complex, SubwordSpec};
use crate::words::{apply_move, hecke_reduce, HeckeReduceOptions, Move, Word};
use crate::{Error, Result};

/// Which of the two cases of the doubling dichotomy holds.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum NilCase {
    Suspension,
    InverseEdgeSubdivision,
}

/// Outcome of verifying one doubling instance.
#[derive(Clone, Debug, Serialize)]
pub struct NilCaseReport {
    pub doubled_position: usize,
    pub case: NilCase,
    /// Position label of the first copy in the doubled word.
    pub q1: Label,
    /// Position label of the second copy in the doubled word.
    pub q2: Label,
    /// Fresh label standing in for the eliminated vertex in the
    /// inverse-edge-subdivision check; absent in the suspension case.
    pub q0: Option<Label>,
    /// Facet-level transform equals the direct construction of `Δ(Q';ρ)`.
    pub transform_matches_direct: bool,
    /// Suspension case: the doubled complex equals the suspension.
    /// Subdivision case: subdividing the doubled complex at `{q1,q2}`
    /// recovers the suspension.
    pub case_check: bool,
    /// Links of `q1` and `q2` in the doubled complex both recover `Δ(Q;ρ)`.
    pub link_check_q1: bool,
    pub link_check_q2: bool,
    /// Vertex bijection witnessing the case check (identity on the shared
    /// canonical labels when the check holds by equality).
    pub suspension_witness: Option<BTreeMap<Label, Label>>,
}

impl NilCaseReport {
    pub fn ok(&self) -> bool {
        self.transform_matches_direct
            && self.case_check
            && self.link_check_q1
            && self.link_check_q2
    }
}

fn shift_label(label: &Label, p: usize) -> Result<Label> {
    let j = label_position(label)
        .ok_or_else(|| Error::Parse(format!("not a position label: {label}")))?;
    Ok(if j > p { position_label(j + 1) } else { label.clone() })
}

/// Transforms `Δ(Q;ρ)` into `Δ(Q';ρ)` for `Q'` the doubling of position `p`
/// of `Q`, entirely at the facet level; vertex labels are relabeled to
/// positions of `Q'`.
pub fn nil_double_transform(
    complex: &SimplicialComplex,
    p: usize,
    word_len: usize,
) -> Result<SimplicialComplex> {
    if p < 1 || p > word_len {
        return Err(Error::PositionOutOfRange {
            pos: p,
            len: word_len,
        });
    }
    let q0 = position_label(p);
    let q1 = position_label(p);
    let q2 = position_label(p + 1);
    let mut facets: Vec<Vec<Label>> = Vec::new();
    for f in complex.facets() {
        let mut shifted: Vec<Label> = Vec::with_capacity(f.len() + 1);
        let mut has_q0 = false;
        for v in f {
            if *v == q0 {
                has_q0 = true;
            } else {
                shifted.push(shift_label(v, p)?);
            }
        }
        if has_q0 {
            let mut both = shifted.clone();
            both.push(q1.clone());
            both.push(q2.clone());
            facets.push(both);
        } else {
            let mut with_q1 = shifted.clone();
            with_q1.push(q1.clone());
            facets.push(with_q1);
            let mut with_q2 = shifted;
            with_q2.push(q2.clone());
            facets.push(with_q2);
        }
    }
    Ok(SimplicialComplex::from_facets(facets))
}

/// Canonical relabeling of `Q`-positions into `Q'`-positions, with the
/// doubled position `p` sent to `image_of_p`.
fn doubling_map(word_len: usize, p: usize, image_of_p: &str) -> BTreeMap<Label, Label> {
    let mut map = BTreeMap::new();
    for j in 1..=word_len {
        let target = if j < p {
            position_label(j)
        } else if j == p {
            image_of_p.to_string()
        } else {
            position_label(j + 1)
        };
        map.insert(position_label(j), target);
    }
    map
}

fn identity_witness(complex: &SimplicialComplex) -> BTreeMap<Label, Label> {
    complex
        .vertices()
        .into_iter()
        .map(|v| (v.clone(), v))
        .collect()
}

/// Verifies all three claims of the doubling theorem for one instance
/// `(Q, ρ, p)`. Failed assertions come back as `false` flags in the report,
/// not as errors.
pub fn verify_nil_theorem(
    sys: &CoxeterSystem,
    q: &Word,
    rho: &GroupElement,
    p: usize,
) -> Result<NilCaseReport> {
    if p < 1 || p > q.len() {
        return Err(Error::PositionOutOfRange { pos: p, len: q.len() });
    }
    let spec = SubwordSpec::new(sys, q.clone(), rho.clone())?;
    let base = subword_complex(sys, &spec)?;

    let doubled_word = apply_move(sys, q, Move::Double { pos: p })?;
    let doubled_spec = SubwordSpec::new(sys, doubled_word, rho.clone())?;
    let direct = subword_complex(sys, &doubled_spec)?;
    let transformed = nil_double_transform(&base, p, q.len())?;
    let transform_matches_direct = transformed == direct;

    let q0_label = position_label(p);
    let q1 = position_label(p);
    let q2 = position_label(p + 1);
    let q0_is_vertex = base.has_vertex(&q0_label);
    let case = if q0_is_vertex {
        NilCase::InverseEdgeSubdivision
    } else {
        NilCase::Suspension
    };

    let (case_check, q0, witness) = match case {
        NilCase::Suspension => {
            // q⁰ is not a vertex: the doubled complex IS the suspension
            // (of VOID this is again VOID).
            let relabeled = base.relabel(&doubling_map(q.len(), p, &q0_label))?;
            let expected = relabeled.suspension(q1.clone(), q2.clone())?;
            let ok = transformed == expected;
            let witness = ok.then(|| identity_witness(&transformed));
            (ok, None, witness)
        }
        NilCase::InverseEdgeSubdivision => {
            // Subdividing {q¹,q²} with a fresh vertex must rebuild the
            // suspension, with the fresh vertex playing q⁰.
            let fresh = "q0".to_string();
            let relabeled = base.relabel(&doubling_map(q.len(), p, &fresh))?;
            let expected = relabeled.suspension(q1.clone(), q2.clone())?;
            let ok = match transformed.edge_subdivision(&q1, &q2, fresh.clone()) {
                Ok(subdivided) => subdivided == expected,
                Err(_) => false,
            };
            let witness = ok.then(|| identity_witness(&expected));
            (ok, Some(fresh), witness)
        }
    };

    // Links of both copies recover Δ(Q;ρ) under the canonical position maps.
    let link_matches = |copy: &Label, image_of_p: &Label| -> bool {
        let expected = match base.relabel(&doubling_map(q.len(), p, image_of_p)) {
            Ok(c) => c,
            Err(_) => return false,
        };
        if transformed.is_face(&face([copy.clone()])) {
            transformed.link(&face([copy.clone()])).map(|lk| lk == expected).unwrap_or(false)
        } else {
            // the doubled complex has no facets at all only when the base is VOID
            expected.is_void() && transformed.is_void()
        }
    };
    let link_check_q1 = link_matches(&q1, &q2);
    let link_check_q2 = link_matches(&q2, &q1);

    Ok(NilCaseReport {
        doubled_position: p,
        case,
        q1,
        q2,
        q0,
        transform_matches_direct,
        case_check,
        link_check_q1,
        link_check_q2,
        suspension_witness: witness,
    })
}

/// A replayable construction of `Δ(Q;ρ)` from the complex of a reduced word
/// of `δ(Q)`: the recorded steps double letters and braid runs until the
/// start word becomes `Q`.
#[derive(Clone, Debug)]
pub struct TransformScript {
    pub start: SubwordSpec,
    pub steps: Vec<Move>,
}

impl TransformScript {
    pub fn validate(&self, sys: &CoxeterSystem) -> Result<()> {
        if let Some(mv) = self
            .steps
            .iter()
            .find(|mv| matches!(mv, Move::HeckeNil { .. }))
        {
            return Err(Error::InvalidScript(format!(
                "hecke_nil step at position {} is not a complex transformation",
                mv.pos()
            )));
        }
        let mut word = self.start.word.clone();
        for &mv in &self.steps {
            word = apply_move(sys, &word, mv)?;
        }
        Ok(())
    }

    pub fn final_word(&self, sys: &CoxeterSystem) -> Result<Word> {
        let mut word = self.start.word.clone();
        for &mv in &self.steps {
            word = apply_move(sys, &word, mv)?;
        }
        Ok(word)
    }
}

/// Builds the script for `(Q, ρ)`: rewrite `Q` down to a reduced word of
/// `δ(Q)`, then invert the move sequence.
pub fn build_pipeline(
    sys: &CoxeterSystem,
    q: &Word,
    rho: &GroupElement,
    opts: &HeckeReduceOptions,
) -> Result<TransformScript> {
    let reduction = hecke_reduce(sys, q, opts)?;
    let inverse = reduction.invert(sys)?;
    let start = SubwordSpec::new(sys, inverse.start, rho.clone())?;
    Ok(TransformScript {
        start,
        steps: inverse.moves,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PipelineMode {
    Fast,
    Verified,
}

/// What happened at one pipeline step.
#[derive(Clone, Debug, Serialize)]
pub struct StepReport {
    pub index: usize,
    pub step: Move,
    pub word_after: String,
    /// `None` in fast mode; in verified mode, whether the complex after the
    /// step equals the direct construction for the word after the step.
    pub verified: Option<bool>,
    pub f_before: FVector,
    pub f_after: FVector,
}

#[derive(Clone, Debug)]
pub struct PipelineRun {
    pub final_complex: SimplicialComplex,
    pub final_word: Word,
    pub steps: Vec<StepReport>,
    pub ok: bool,
}

/// Replays a script from `Δ(start)` (the EMPTY complex whenever
/// `δ(Q) = ρ`). `Double` steps transform the complex facet-wise; `Braid`
/// steps recompute the subword complex of the braided word directly. In
/// verified mode every intermediate complex is checked against the direct
/// construction; a failure stops the run and is reported on its step.
pub fn run_pipeline(
    sys: &CoxeterSystem,
    script: &TransformScript,
    mode: PipelineMode,
) -> Result<PipelineRun> {
    script.validate(sys)?;
    let mut word = script.start.word.clone();
    let mut complex = subword_complex(
        sys,
        &SubwordSpec::new(sys, word.clone(), script.start.rho.clone())?,
    )?;
    let mut reports = Vec::with_capacity(script.steps.len());
    let mut ok = true;
    for (index, &step) in script.steps.iter().enumerate() {
        let f_before = complex.f_vector();
        let next_word = apply_move(sys, &word, step)?;
        let next_complex = match step {
            Move::Double { pos } => nil_double_transform(&complex, pos, word.len())?,
            Move::Braid { .. } => subword_complex(
                sys,
                &SubwordSpec::new(sys, next_word.clone(), script.start.rho.clone())?,
            )?,
            Move::HeckeNil { .. } => unreachable!("rejected by validate"),
        };
        let verified = match mode {
            PipelineMode::Fast => None,
            PipelineMode::Verified => {
                let direct = subword_complex(
                    sys,
                    &SubwordSpec::new(sys, next_word.clone(), script.start.rho.clone())?,
                )?;
                Some(next_complex == direct)
            }
        };
        reports.push(StepReport {
            index,
            step,
            word_after: next_word.to_string(),
            verified,
            f_before,
            f_after: next_complex.f_vector(),
        });
        word = next_word;
        complex = next_complex;
        if verified == Some(false) {
            ok = false;
            break;
        }
    }
    Ok(PipelineRun {
        final_complex: complex,
        final_word: word,
        steps: reports,
        ok,
    })
}

/// Dual reading of the doubling dichotomy at the nerve-complex level.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum DualCase {
    /// The doubled dual polytope is the prism over the base dual.
    Prism,
    /// The doubled dual polytope is an inverse 2-truncation of the prism.
    InverseTwoTruncation,
}

/// Report for the polytopal bullet, verified combinatorially through nerve
/// duality: prisms correspond to suspensions and 2-truncations to edge
/// subdivisions, so the complex-level checks carry the dual statement.
#[derive(Clone, Debug, Serialize)]
pub struct DualReport {
    pub nil: NilCaseReport,
    pub dual_case: DualCase,
    /// Vertex of the doubled complex whose link is `Δ(Q;ρ)`; dually, the
    /// facet of the doubled polytope that is the base polytope.
    pub facet_vertex: Label,
    /// f-vector of `Δ(Q';ρ)`; read in reverse it lists the dual polytope's
    /// face counts from facets down to vertices.
    pub doubled_f: FVector,
    pub base_f: FVector,
    /// Computed direction of the truncation relation: true when the prism
    /// over the base dual is the 2-truncation of the doubled dual (so the
    /// doubled dual arises from the prism by an inverse 2-truncation).
    pub prism_is_truncation_of_doubled: bool,
}

impl DualReport {
    pub fn ok(&self) -> bool {
        self.nil.ok()
    }
}

/// Runs [`verify_nil_theorem`] and reports the dual-polytope reading.
/// Requires a spherical input, where the dual polytope language applies.
pub fn dual_statement_check(
    sys: &CoxeterSystem,
    q: &Word,
    rho: &GroupElement,
    p: usize,
) -> Result<DualReport> {
    let spec = SubwordSpec::new(sys, q.clone(), rho.clone())?;
    if !crate::subword::is_spherical(sys, &spec)? {
        return Err(Error::NotSpherical);
    }
    let nil = verify_nil_theorem(sys, q, rho, p)?;
    let base = subword_complex(sys, &spec)?;
    let doubled_word = apply_move(sys, q, Move::Double { pos: p })?;
    let doubled = subword_complex(sys, &SubwordSpec::new(sys, doubled_word, rho.clone())?)?;
    let dual_case = match nil.case {
        NilCase::Suspension => DualCase::Prism,
        NilCase::InverseEdgeSubdivision => DualCase::InverseTwoTruncation,
    };
    Ok(DualReport {
        facet_vertex: nil.q1.clone(),
        prism_is_truncation_of_doubled: nil.case == NilCase::InverseEdgeSubdivision
            && nil.case_check,
        nil,
        dual_case,
        doubled_f: doubled.f_vector(),
        base_f: base.f_vector(),
    })
}
