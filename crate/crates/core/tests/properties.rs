//! Property tests for the rewriting and complex layers.

use proptest::prelude::*;

use subword_core::coxeter::CoxeterSystem;
use subword_core::io::{ComplexDoc, SpecDoc};
use subword_core::simplicial::SimplicialComplex;
use subword_core::subword::{subword_complex, SubwordSpec};
use subword_core::words::{apply_move, braid_moves, demazure_product, Move, Word};

fn word_strategy(rank: usize, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(1..=rank, 0..=max_len).prop_map(Word::new)
}

/// All moves applicable to a word (for a given system).
fn applicable_moves(sys: &CoxeterSystem, word: &Word) -> Vec<Move> {
    let mut out = braid_moves(sys, word);
    for p in 1..word.len() {
        if word.letters()[p - 1] == word.letters()[p] {
            out.push(Move::HeckeNil { pos: p });
        }
    }
    for p in 1..=word.len() {
        out.push(Move::Double { pos: p });
    }
    out
}

proptest! {
    /// The Demazure product never changes under any applicable move.
    #[test]
    fn demazure_invariant_under_moves(
        word in prop::collection::vec(1..=3usize, 1..=9).prop_map(Word::new),
        pick in any::<prop::sample::Index>(),
    ) {
        let sys = CoxeterSystem::parse("A3").unwrap();
        // a non-empty word always admits at least a doubling
        let moves = applicable_moves(&sys, &word);
        prop_assert!(!moves.is_empty());
        let mv = moves[pick.index(moves.len())];
        let moved = apply_move(&sys, &word, mv).unwrap();
        prop_assert_eq!(
            demazure_product(&sys, &moved).unwrap(),
            demazure_product(&sys, &word).unwrap()
        );
    }

    /// Braid and nil moves never change the expressed group element either
    /// (doubling obviously does not preserve it).
    #[test]
    fn braid_moves_preserve_element(
        word in word_strategy(3, 9),
        pick in any::<prop::sample::Index>(),
    ) {
        let sys = CoxeterSystem::parse("B3").unwrap();
        let moves = braid_moves(&sys, &word);
        prop_assume!(!moves.is_empty());
        let mv = moves[pick.index(moves.len())];
        let moved = apply_move(&sys, &word, mv).unwrap();
        prop_assert_eq!(
            sys.element_of_word(word.letters()).unwrap(),
            sys.element_of_word(moved.letters()).unwrap()
        );
    }

    /// Subword complexes are pure of dimension |Q| − l(ρ) − 1 whenever
    /// non-void, and join facet counts multiply.
    #[test]
    fn subword_complex_is_pure(word in word_strategy(2, 7), rho_word in word_strategy(2, 5)) {
        let sys = CoxeterSystem::parse("B2").unwrap();
        let rho = sys.element_of_word(rho_word.letters()).unwrap();
        let spec = SubwordSpec::new(&sys, word.clone(), rho.clone()).unwrap();
        let complex = subword_complex(&sys, &spec).unwrap();
        if !complex.is_void() {
            prop_assert!(complex.is_pure());
            prop_assert_eq!(
                complex.dim().unwrap(),
                word.len() as i64 - rho.length() as i64 - 1
            );
        }
    }

    /// Complex JSON documents round-trip.
    #[test]
    fn complex_doc_roundtrip(word in word_strategy(2, 6), rho_word in word_strategy(2, 4)) {
        let sys = CoxeterSystem::parse("A2").unwrap();
        let spec = SubwordSpec::from_rho_word(&sys, word, &rho_word).unwrap();
        let complex = subword_complex(&sys, &spec).unwrap();
        let doc = ComplexDoc::new(&complex);
        let json = serde_json::to_string(&doc).unwrap();
        let parsed: ComplexDoc = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(parsed.load(), complex);

        let spec_doc = SpecDoc::new(&sys, &spec);
        let json = serde_json::to_string(&spec_doc).unwrap();
        let parsed: SpecDoc = serde_json::from_str(&json).unwrap();
        let (_, reloaded) = parsed.load().unwrap();
        prop_assert_eq!(reloaded, spec);
    }

    /// Edge subdivision keeps the Euler characteristic and, on pure
    /// complexes, the closed-pseudomanifold property.
    ///
    /// Words of length ≥ 5 with ρ = δ(Q) always give a complex of dimension
    /// ≥ 1 in A2 (the Demazure product has length at most 3), so every
    /// generated case carries an edge to subdivide.
    #[test]
    fn subdivision_preserves_topology(word in prop::collection::vec(1..=2usize, 5..=9).prop_map(Word::new)) {
        let sys = CoxeterSystem::parse("A2").unwrap();
        let rho = demazure_product(&sys, &word).unwrap();
        let spec = SubwordSpec::new(&sys, word, rho).unwrap();
        let complex = subword_complex(&sys, &spec).unwrap();
        prop_assert!(complex.dim().unwrap_or(-1) >= 1);
        let edge = complex
            .faces()
            .into_iter()
            .find(|f| f.len() == 2)
            .unwrap();
        let mut it = edge.iter();
        let (s, t) = (it.next().unwrap().clone(), it.next().unwrap().clone());
        let sub = complex.edge_subdivision(&s, &t, "fresh").unwrap();
        prop_assert_eq!(sub.euler_characteristic(), complex.euler_characteristic());
        prop_assert_eq!(
            sub.is_closed_pseudomanifold().unwrap(),
            complex.is_closed_pseudomanifold().unwrap()
        );
        // and the checked inverse restores the complex exactly
        let back = sub.inverse_edge_subdivision_at("fresh", &s, &t).unwrap().unwrap();
        prop_assert_eq!(back, complex);
    }

    /// Suspension negates the reduced Euler characteristic and multiplies
    /// facet counts by two.
    #[test]
    fn suspension_properties(word in word_strategy(2, 6), rho_word in word_strategy(2, 4)) {
        let sys = CoxeterSystem::parse("A2").unwrap();
        let spec = SubwordSpec::from_rho_word(&sys, word, &rho_word).unwrap();
        let complex = subword_complex(&sys, &spec).unwrap();
        let sus = complex.suspension("apex_a", "apex_b").unwrap();
        prop_assert_eq!(
            sus.reduced_euler_characteristic(),
            -complex.reduced_euler_characteristic()
        );
        prop_assert_eq!(sus.facet_count(), 2 * complex.facet_count());
        if complex.is_void() {
            prop_assert!(sus.is_void());
        }
    }
}

#[test]
fn join_facet_counts_multiply() {
    let pentagon = SimplicialComplex::from_facets([
        ["a1", "a2"],
        ["a2", "a3"],
        ["a3", "a4"],
        ["a4", "a5"],
        ["a1", "a5"],
    ]);
    let s0 = SimplicialComplex::from_facets([["b1"], ["b2"]]);
    let join = pentagon.join(&s0).unwrap();
    assert_eq!(
        join.facet_count(),
        pentagon.facet_count() * s0.facet_count()
    );
}
