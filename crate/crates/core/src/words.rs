//! Words over the generator alphabet and their elementary moves.
//!
//! Three moves act on words: `HeckeNil` deletes one letter of an adjacent
//! equal pair (the idempotent rewriting `x² → x`), `Double` inserts a copy
//! of a letter right after it, and `Braid` swaps an alternating run of
//! length `m(i,j)`. Positions are 1-based everywhere, matching the external
//! formats.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::coxeter::{CoxeterSystem, GroupElement, Side};
use crate::{Error, Result};

/// A word in the generator alphabet; letters are 1-based generator indices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn new(letters: impl Into<Vec<usize>>) -> Self {
        Word(letters.into())
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    /// Letter at 1-based position `p`.
    pub fn letter(&self, p: usize) -> Option<usize> {
        self.0.get(p - 1).copied()
    }

    pub fn validate(&self, sys: &CoxeterSystem) -> Result<()> {
        for &i in &self.0 {
            if i < 1 || i > sys.rank() {
                return Err(Error::GeneratorOutOfRange {
                    index: i,
                    rank: sys.rank(),
                });
            }
        }
        Ok(())
    }

    /// Parses `"1,2,1"`; the empty string is the empty word.
    pub fn parse(s: &str) -> Result<Word> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Word::empty());
        }
        let letters = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad letter {tok:?} in word {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Word(letters))
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn repeat(&self, k: usize) -> Word {
        let mut letters = Vec::with_capacity(self.len() * k);
        for _ in 0..k {
            letters.extend_from_slice(&self.0);
        }
        Word(letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.0.iter().map(|i| i.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

/// An elementary move on a word. Positions are 1-based.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum Move {
    /// Deletes the letter at `pos + 1` of the equal pair `(pos, pos+1)`.
    HeckeNil { pos: usize },
    /// Inserts a copy of the letter at `pos` immediately after it.
    Double { pos: usize },
    /// Replaces the alternating run `i j i …` of length `m(i,j)` starting at
    /// `pos` by the swapped alternation.
    Braid { pos: usize, pair: (usize, usize) },
}

impl Move {
    pub fn pos(&self) -> usize {
        match self {
            Move::HeckeNil { pos } | Move::Double { pos } | Move::Braid { pos, .. } => *pos,
        }
    }
}

/// Applies a move, checking applicability.
pub fn apply_move(sys: &CoxeterSystem, word: &Word, mv: Move) -> Result<Word> {
    word.validate(sys)?;
    let n = word.len();
    let fail = |pos: usize, reason: &str| Error::InapplicableMove {
        pos,
        reason: reason.to_string(),
    };
    match mv {
        Move::HeckeNil { pos } => {
            if pos < 1 || pos + 1 > n {
                return Err(fail(pos, "no adjacent pair at this position"));
            }
            if word.0[pos - 1] != word.0[pos] {
                return Err(fail(pos, "letters at pos, pos+1 differ"));
            }
            let mut letters = word.0.clone();
            letters.remove(pos);
            Ok(Word(letters))
        }
        Move::Double { pos } => {
            if pos < 1 || pos > n {
                return Err(fail(pos, "position out of range"));
            }
            let mut letters = word.0.clone();
            letters.insert(pos, letters[pos - 1]);
            Ok(Word(letters))
        }
        Move::Braid { pos, pair: (i, j) } => {
            if i == j {
                return Err(fail(pos, "braid pair must be distinct"));
            }
            if i < 1 || i > sys.rank() || j < 1 || j > sys.rank() {
                return Err(fail(pos, "braid pair out of range"));
            }
            let m = sys.matrix().entry(i, j);
            if pos < 1 || pos + m - 1 > n {
                return Err(fail(pos, "alternating run does not fit"));
            }
            for k in 0..m {
                let expected = if k % 2 == 0 { i } else { j };
                if word.0[pos - 1 + k] != expected {
                    return Err(fail(pos, "letters do not alternate as required"));
                }
            }
            let mut letters = word.0.clone();
            for k in 0..m {
                letters[pos - 1 + k] = if k % 2 == 0 { j } else { i };
            }
            Ok(Word(letters))
        }
    }
}

/// All applicable braid moves, in ascending position order.
pub fn braid_moves(sys: &CoxeterSystem, word: &Word) -> Vec<Move> {
    let n = word.len();
    let mut out = Vec::new();
    for pos in 1..=n {
        if pos + 1 > n {
            break;
        }
        let i = word.0[pos - 1];
        let j = word.0[pos];
        if i == j {
            continue;
        }
        let m = sys.matrix().entry(i, j);
        if pos + m - 1 > n {
            continue;
        }
        let mut ok = true;
        for k in 0..m {
            let expected = if k % 2 == 0 { i } else { j };
            if word.0[pos - 1 + k] != expected {
                ok = false;
                break;
            }
        }
        if ok {
            out.push(Move::Braid { pos, pair: (i, j) });
        }
    }
    out
}

/// An ordered move sequence with its starting word.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MoveSequence {
    pub start: Word,
    pub moves: Vec<Move>,
}

impl MoveSequence {
    /// Replays the sequence; returns every intermediate word, starting with
    /// `start` (so the result has `moves.len() + 1` entries).
    pub fn replay(&self, sys: &CoxeterSystem) -> Result<Vec<Word>> {
        let mut words = vec![self.start.clone()];
        for &mv in &self.moves {
            let next = apply_move(sys, words.last().unwrap(), mv)?;
            words.push(next);
        }
        Ok(words)
    }

    pub fn terminal(&self, sys: &CoxeterSystem) -> Result<Word> {
        Ok(self.replay(sys)?.pop().unwrap())
    }

    /// The inverse sequence: reversed, with `HeckeNil(p) ↦ Double(p)`,
    /// `Double(p) ↦ HeckeNil(p)` and each braid swapped. Starts at the
    /// terminal word of `self` and replays back to `self.start`.
    pub fn invert(&self, sys: &CoxeterSystem) -> Result<MoveSequence> {
        let start = self.terminal(sys)?;
        let moves = self
            .moves
            .iter()
            .rev()
            .map(|mv| match *mv {
                Move::HeckeNil { pos } => Move::Double { pos },
                Move::Double { pos } => Move::HeckeNil { pos },
                Move::Braid { pos, pair: (i, j) } => Move::Braid { pos, pair: (j, i) },
            })
            .collect();
        Ok(MoveSequence { start, moves })
    }
}

/// True iff the letter count equals the length of the expressed element.
pub fn is_reduced(sys: &CoxeterSystem, word: &Word) -> Result<bool> {
    Ok(sys.element_of_word(word.letters())?.length() == word.len())
}

/// The Demazure (0-Hecke) product: a left fold that multiplies a letter in
/// only when this increases the length.
pub fn demazure_product(sys: &CoxeterSystem, word: &Word) -> Result<GroupElement> {
    word.validate(sys)?;
    let mut acc = sys.identity();
    for &i in word.letters() {
        let next = sys.multiply_gen(&acc, i, Side::Right)?;
        if next.length() > acc.length() {
            acc = next;
        }
    }
    Ok(acc)
}

/// The lexicographically smallest reduced word for `w`, by greedy left
/// descents.
pub fn reduced_word(sys: &CoxeterSystem, w: &GroupElement) -> Word {
    let mut r = w.clone();
    let mut out = Vec::with_capacity(w.length());
    while !r.is_identity() {
        for i in 1..=sys.rank() {
            if sys.is_left_descent(&r, i).unwrap() {
                out.push(i);
                r = sys.multiply_gen(&r, i, Side::Left).unwrap();
                break;
            }
        }
    }
    Word(out)
}

/// True iff some embedded subword of `q` is a reduced word for `rho`.
pub fn contains_reduced_expression(
    sys: &CoxeterSystem,
    q: &Word,
    rho: &GroupElement,
) -> Result<bool> {
    q.validate(sys)?;
    // State: remaining element r = u⁻¹ρ for the prefix-product u of chosen
    // letters. Taking letter s is allowed iff s is a left descent of r.
    let mut memo: HashMap<(usize, GroupElement), bool> = HashMap::new();
    fn go(
        sys: &CoxeterSystem,
        q: &Word,
        idx: usize,
        r: &GroupElement,
        memo: &mut HashMap<(usize, GroupElement), bool>,
    ) -> bool {
        if r.is_identity() {
            return true;
        }
        if q.len() + 1 - idx < r.length() {
            return false;
        }
        if let Some(&cached) = memo.get(&(idx, r.clone())) {
            return cached;
        }
        let s = q.0[idx - 1];
        let mut found = false;
        if sys.is_left_descent(r, s).unwrap() {
            let r2 = sys.multiply_gen(r, s, Side::Left).unwrap();
            found = go(sys, q, idx + 1, &r2, memo);
        }
        if !found {
            found = go(sys, q, idx + 1, r, memo);
        }
        memo.insert((idx, r.clone()), found);
        found
    }
    Ok(go(sys, q, 1, rho, &mut memo))
}

/// All position subsets of `q` whose letters form a reduced word for `rho`,
/// each sorted ascending, the list in lexicographic order.
pub fn enumerate_embeddings(
    sys: &CoxeterSystem,
    q: &Word,
    rho: &GroupElement,
) -> Result<Vec<Vec<usize>>> {
    q.validate(sys)?;
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    fn dfs(
        sys: &CoxeterSystem,
        q: &Word,
        idx: usize,
        r: &GroupElement,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if r.is_identity() {
            out.push(chosen.clone());
            return;
        }
        if q.len() + 1 - idx < r.length() {
            return;
        }
        let s = q.0[idx - 1];
        if sys.is_left_descent(r, s).unwrap() {
            let r2 = sys.multiply_gen(r, s, Side::Left).unwrap();
            chosen.push(idx);
            dfs(sys, q, idx + 1, &r2, chosen, out);
            chosen.pop();
        }
        dfs(sys, q, idx + 1, r, chosen, out);
    }
    dfs(sys, q, 1, rho, &mut chosen, &mut out);
    out.sort();
    Ok(out)
}

/// Options for [`hecke_reduce`]: a visited-word budget for the braid-class
/// search and an optional seed that shuffles tie-breaking.
#[derive(Clone, Copy, Debug)]
pub struct HeckeReduceOptions {
    pub budget: usize,
    pub seed: Option<u64>,
}

impl Default for HeckeReduceOptions {
    fn default() -> Self {
        HeckeReduceOptions {
            budget: 1_000_000,
            seed: None,
        }
    }
}

fn first_adjacent_equal(word: &Word) -> Option<usize> {
    (1..word.len()).find(|&p| word.0[p - 1] == word.0[p])
}

/// Rewrites `q` to a reduced word of its Demazure product by Hecke nil and
/// braid moves.
///
/// Strategy: while the current word is not reduced, search its braid class
/// breadth-first until some word exposes an adjacent equal pair, splice in
/// that braid path and one `HeckeNil`, repeat. The resulting sequence is not
/// required to be shortest.
pub fn hecke_reduce(
    sys: &CoxeterSystem,
    q: &Word,
    opts: &HeckeReduceOptions,
) -> Result<MoveSequence> {
    q.validate(sys)?;
    let mut rng = opts.seed.map(ChaCha8Rng::seed_from_u64);
    let mut moves: Vec<Move> = Vec::new();
    let mut cur = q.clone();
    let mut visited_total = 0usize;
    while !is_reduced(sys, &cur)? {
        // BFS over the braid class of `cur`.
        let mut parent: HashMap<Word, (Word, Move)> = HashMap::new();
        let mut seen: HashSet<Word> = HashSet::new();
        let mut queue: VecDeque<Word> = VecDeque::new();
        seen.insert(cur.clone());
        queue.push_back(cur.clone());
        let mut found: Option<(Word, usize)> = None;
        while let Some(w) = queue.pop_front() {
            visited_total += 1;
            if visited_total > opts.budget {
                return Err(Error::BudgetExhausted {
                    budget: opts.budget,
                });
            }
            if let Some(p) = first_adjacent_equal(&w) {
                found = Some((w, p));
                break;
            }
            let mut nbrs = braid_moves(sys, &w);
            if let Some(rng) = rng.as_mut() {
                nbrs.shuffle(rng);
            }
            for mv in nbrs {
                let w2 = apply_move(sys, &w, mv)?;
                if seen.insert(w2.clone()) {
                    parent.insert(w2.clone(), (w.clone(), mv));
                    queue.push_back(w2);
                }
            }
        }
        // The Word Property guarantees a non-reduced word's braid class
        // exposes an adjacent equal pair.
        let (target, nil_pos) =
            found.expect("braid class of a non-reduced word must contain an adjacent equal pair");
        let mut path = Vec::new();
        let mut node = target.clone();
        while node != cur {
            let (prev, mv) = parent[&node].clone();
            path.push(mv);
            node = prev;
        }
        path.reverse();
        moves.extend(path);
        let nil = Move::HeckeNil { pos: nil_pos };
        cur = apply_move(sys, &target, nil)?;
        moves.push(nil);
    }
    Ok(MoveSequence {
        start: q.clone(),
        moves,
    })
}

/// All words over generators `1..=rank` of length `0..=max_len`, in
/// length-then-lexicographic order. Intended for exhaustive desk-scale
/// sweeps.
pub fn all_words(rank: usize, max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for word in &layer {
            for i in 1..=rank {
                let mut letters = word.0.clone();
                letters.push(i);
                next.push(Word(letters));
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Checks that `c` is a reduced word for a Coxeter element: each generator
/// appears exactly once.
pub fn check_coxeter_word(sys: &CoxeterSystem, c: &Word) -> Result<()> {
    c.validate(sys)?;
    let mut seen = vec![false; sys.rank() + 1];
    for &i in c.letters() {
        if seen[i] {
            return Err(Error::NotCoxeterWord(format!("generator {i} repeats")));
        }
        seen[i] = true;
    }
    if let Some(i) = (1..=sys.rank()).find(|&i| !seen[i]) {
        return Err(Error::NotCoxeterWord(format!("generator {i} missing")));
    }
    Ok(())
}

/// The c-sorting word of `w`: the lexicographically first (by positions)
/// reduced subword of `c c c …` expressing `w`, computed by a greedy scan.
pub fn c_sorting_word(sys: &CoxeterSystem, c: &Word, w: &GroupElement) -> Result<Word> {
    check_coxeter_word(sys, c)?;
    let mut r = w.clone();
    let mut out = Vec::with_capacity(w.length());
    while !r.is_identity() {
        for &s in c.letters() {
            if sys.is_left_descent(&r, s)? {
                out.push(s);
                r = sys.multiply_gen(&r, s, Side::Left)?;
            }
        }
    }
    Ok(Word(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::CoxeterSystem;

    fn a2() -> CoxeterSystem {
        CoxeterSystem::parse("A2").unwrap()
    }

    fn w(letters: &[usize]) -> Word {
        Word::new(letters.to_vec())
    }

    #[test]
    fn apply_move_examples() {
        let sys = a2();
        assert_eq!(
            apply_move(&sys, &w(&[1, 1, 2]), Move::HeckeNil { pos: 1 }).unwrap(),
            w(&[1, 2])
        );
        assert_eq!(
            apply_move(&sys, &w(&[1, 2, 1]), Move::Braid { pos: 1, pair: (1, 2) }).unwrap(),
            w(&[2, 1, 2])
        );
        assert_eq!(
            apply_move(&sys, &w(&[1, 2]), Move::Double { pos: 2 }).unwrap(),
            w(&[1, 2, 2])
        );
        assert!(matches!(
            apply_move(&sys, &w(&[1, 2]), Move::HeckeNil { pos: 1 }),
            Err(Error::InapplicableMove { pos: 1, .. })
        ));
        assert!(apply_move(&sys, &w(&[1, 2, 2]), Move::Braid { pos: 1, pair: (1, 2) }).is_err());
    }

    #[test]
    fn moves_preserve_demazure_product() {
        let sys = a2();
        let word = w(&[1, 1, 2, 1, 2]);
        let delta = demazure_product(&sys, &word).unwrap();
        for mv in [
            Move::HeckeNil { pos: 1 },
            Move::Double { pos: 3 },
            Move::Braid { pos: 3, pair: (2, 1) },
        ] {
            let moved = apply_move(&sys, &word, mv).unwrap();
            assert_eq!(demazure_product(&sys, &moved).unwrap(), delta, "{mv:?}");
        }
    }

    /// Braid moves and Coxeter nil-moves (deleting both letters of an
    /// adjacent equal pair) leave the expressed group element unchanged.
    #[test]
    fn element_invariant_under_braid_and_coxeter_nil() {
        let sys = a2();
        for word in all_words(2, 5) {
            let elem = sys.element_of_word(word.letters()).unwrap();
            for mv in braid_moves(&sys, &word) {
                let moved = apply_move(&sys, &word, mv).unwrap();
                assert_eq!(sys.element_of_word(moved.letters()).unwrap(), elem);
            }
            for p in 1..word.len() {
                if word.0[p - 1] == word.0[p] {
                    let mut letters = word.0.clone();
                    letters.remove(p);
                    letters.remove(p - 1);
                    assert_eq!(sys.element_of_word(&letters).unwrap(), elem);
                }
            }
        }
    }

    #[test]
    fn demazure_examples() {
        let sys = a2();
        let s1 = sys.generator(1).unwrap();
        assert_eq!(demazure_product(&sys, &w(&[1, 1])).unwrap(), s1);
        let wo = sys.longest_element();
        assert_eq!(demazure_product(&sys, &w(&[1, 2, 1, 2, 1])).unwrap(), wo);
        // any reduced word evaluates to its own element
        let word = w(&[2, 1]);
        assert!(is_reduced(&sys, &word).unwrap());
        assert_eq!(
            demazure_product(&sys, &word).unwrap(),
            sys.element_of_word(word.letters()).unwrap()
        );
    }

    #[test]
    fn is_reduced_examples() {
        let sys = a2();
        assert!(is_reduced(&sys, &w(&[1, 2, 1])).unwrap());
        assert!(!is_reduced(&sys, &w(&[1, 1])).unwrap());
        assert!(is_reduced(&sys, &Word::empty()).unwrap());
    }

    #[test]
    fn contains_reduced_expression_examples() {
        let sys = a2();
        let wo = sys.longest_element();
        assert!(contains_reduced_expression(&sys, &w(&[1, 2, 1, 2, 1]), &wo).unwrap());
        assert!(contains_reduced_expression(&sys, &Word::empty(), &sys.identity()).unwrap());
        let s2 = sys.generator(2).unwrap();
        assert!(!contains_reduced_expression(&sys, &w(&[1, 1]), &s2).unwrap());
    }

    #[test]
    fn pentagon_embeddings_match_brute_force() {
        let sys = a2();
        let q = w(&[1, 2, 1, 2, 1]);
        let wo = sys.longest_element();
        let got = enumerate_embeddings(&sys, &q, &wo).unwrap();
        // Independent oracle: test every 3-subset of positions directly.
        let mut expected = Vec::new();
        for a in 1..=5 {
            for b in a + 1..=5 {
                for c in b + 1..=5 {
                    let sub = w(&[q.0[a - 1], q.0[b - 1], q.0[c - 1]]);
                    let elem = sys.element_of_word(sub.letters()).unwrap();
                    if elem == wo && elem.length() == 3 {
                        expected.push(vec![a, b, c]);
                    }
                }
            }
        }
        expected.sort();
        assert_eq!(got, expected);
        assert_eq!(
            got,
            vec![
                vec![1, 2, 3],
                vec![1, 2, 5],
                vec![1, 4, 5],
                vec![2, 3, 4],
                vec![3, 4, 5]
            ]
        );
    }

    #[test]
    fn embeddings_degenerate_cases() {
        let sys = a2();
        assert_eq!(
            enumerate_embeddings(&sys, &w(&[1, 2, 1]), &sys.identity()).unwrap(),
            vec![Vec::<usize>::new()]
        );
        let wo = sys.longest_element();
        assert!(enumerate_embeddings(&sys, &w(&[1, 1]), &wo).unwrap().is_empty());
    }

    #[test]
    fn hecke_reduce_examples() {
        let sys = a2();
        let opts = HeckeReduceOptions::default();

        let seq = hecke_reduce(&sys, &w(&[1, 1, 2, 1, 2, 1]), &opts).unwrap();
        let nils = seq
            .moves
            .iter()
            .filter(|m| matches!(m, Move::HeckeNil { .. }))
            .count();
        assert_eq!(nils, 3); // 6 letters − l(w_o) = 3
        let terminal = seq.terminal(&sys).unwrap();
        assert!(is_reduced(&sys, &terminal).unwrap());
        assert_eq!(
            sys.element_of_word(terminal.letters()).unwrap(),
            sys.longest_element()
        );

        let reduced_input = w(&[1, 2, 1]);
        let seq = hecke_reduce(&sys, &reduced_input, &opts).unwrap();
        assert!(seq.moves.is_empty());

        let seq = hecke_reduce(&sys, &w(&[1, 2, 1, 2, 1]), &opts).unwrap();
        assert!(matches!(seq.moves[0], Move::Braid { .. }));
    }

    #[test]
    fn invert_sequence_examples() {
        let sys = a2();
        let empty = MoveSequence {
            start: w(&[1, 2]),
            moves: vec![],
        };
        assert_eq!(empty.invert(&sys).unwrap().moves, vec![]);

        let seq = MoveSequence {
            start: w(&[1, 1]),
            moves: vec![Move::HeckeNil { pos: 1 }],
        };
        let inv = seq.invert(&sys).unwrap();
        assert_eq!(inv.start, w(&[1]));
        assert_eq!(inv.moves, vec![Move::Double { pos: 1 }]);
        assert_eq!(inv.terminal(&sys).unwrap(), w(&[1, 1]));

        let q = w(&[1, 1, 2, 1, 2, 1]);
        let seq = hecke_reduce(&sys, &q, &HeckeReduceOptions::default()).unwrap();
        let inv = seq.invert(&sys).unwrap();
        assert_eq!(inv.terminal(&sys).unwrap(), q);
    }

    #[test]
    fn c_sorting_examples() {
        let sys = a2();
        let c = w(&[1, 2]);
        let wo = sys.longest_element();
        assert_eq!(c_sorting_word(&sys, &c, &wo).unwrap(), w(&[1, 2, 1]));
        assert_eq!(c_sorting_word(&sys, &c, &sys.identity()).unwrap(), Word::empty());

        let a3 = CoxeterSystem::parse("A3").unwrap();
        let c3 = w(&[1, 2, 3]);
        let wo3 = a3.longest_element();
        let sorted = c_sorting_word(&a3, &c3, &wo3).unwrap();
        assert_eq!(sorted.len(), 6);
        assert_eq!(sorted, w(&[1, 2, 3, 1, 2, 1]));
        assert!(is_reduced(&a3, &sorted).unwrap());
        assert_eq!(a3.element_of_word(sorted.letters()).unwrap(), wo3);

        assert!(matches!(
            c_sorting_word(&sys, &w(&[1, 1]), &wo),
            Err(Error::NotCoxeterWord(_))
        ));
    }

    /// The greedy c-sorting word must be the lexicographically first
    /// embedding of `w` into `c^∞`, checked by brute force.
    #[test]
    fn c_sorting_is_lex_first_embedding() {
        for desc in ["A2", "B2", "A3"] {
            let sys = CoxeterSystem::parse(desc).unwrap();
            let c = Word::new((1..=sys.rank()).collect::<Vec<_>>());
            for elem in sys.all_elements() {
                let sorted = c_sorting_word(&sys, &c, &elem).unwrap();
                // A window strictly wider than the greedy scan can need, so
                // a lexicographically earlier embedding could not hide
                // beyond it.
                let copies = 2 * elem.length() + 1;
                let host = c.repeat(copies);
                let embeddings = enumerate_embeddings(&sys, &host, &elem).unwrap();
                let first = embeddings.first().expect("element embeds into c^∞");
                let word_of_first: Vec<usize> =
                    first.iter().map(|&p| host.0[p - 1]).collect();
                assert_eq!(sorted.0, word_of_first, "{desc}: {elem:?}");
            }
        }
    }

    #[test]
    fn contains_matches_demazure_criterion_exhaustively() {
        // Q contains a reduced expression of ρ iff a reduced word of δ(Q) does.
        let sys = a2();
        let elements = sys.all_elements();
        for word in &all_words(2, 5) {
            let delta = demazure_product(&sys, word).unwrap();
            let delta_word = reduced_word(&sys, &delta);
            for rho in &elements {
                let direct = contains_reduced_expression(&sys, word, rho).unwrap();
                let via_delta = contains_reduced_expression(&sys, &delta_word, rho).unwrap();
                assert_eq!(direct, via_delta, "word {word}, rho {rho:?}");
            }
        }
    }

    #[test]
    fn move_json_format() {
        let mv = Move::Braid { pos: 1, pair: (1, 2) };
        let json = serde_json::to_string(&mv).unwrap();
        assert_eq!(json, r#"{"op":"braid","pos":1,"pair":[1,2]}"#);
        let nil: Move = serde_json::from_str(r#"{"op":"hecke_nil","pos":4}"#).unwrap();
        assert_eq!(nil, Move::HeckeNil { pos: 4 });
        let dbl: Move = serde_json::from_str(r#"{"op":"double","pos":2}"#).unwrap();
        assert_eq!(dbl, Move::Double { pos: 2 });
    }
}
