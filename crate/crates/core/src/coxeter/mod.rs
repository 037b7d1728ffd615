//! Finite Coxeter systems with exact element arithmetic.
//!
//! Elements of the crystallographic families and of `H3`/`H4` are modeled as
//! permutations of the full root set (coordinates in the simple-root basis,
//! integer or Z[φ]-exact). Type `I2(m)` uses a direct dihedral model. Both
//! models give exact equality, lengths and descents with no floating point.
//!
//! Generator indices are 1-based throughout, matching the external formats.
//! Labeling conventions for the branched and non-simply-laced diagrams:
//! `A_n` is the path `1-2-…-n`; `B_n` is the path with the order-4 bond on
//! the last edge `(n-1, n)`; `D_n` attaches both `n-1` and `n` to `n-2`;
//! `E6/E7/E8` attach node 2 to node 4 of the path `1-3-4-5-…`; `F4` has the
//! order-4 bond on `(2,3)`; `H3/H4` carry the order-5 bond on `(1,2)`.

mod dihedral;
mod golden;
mod roots;

use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::{Error, Result};
use dihedral::{DihedralElem, DihedralEngine};
use roots::RootEngine;

pub use golden::Golden;

/// Which side to multiply a generator on.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Left,
    Right,
}

/// A finite Coxeter type.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum CoxeterType {
    A(usize),
    B(usize),
    D(usize),
    E6,
    E7,
    E8,
    F4,
    H3,
    H4,
    /// Dihedral type with off-diagonal Coxeter entry `m ≥ 3`.
    I2(usize),
}

impl CoxeterType {
    pub fn rank(self) -> usize {
        match self {
            CoxeterType::A(n) | CoxeterType::B(n) | CoxeterType::D(n) => n,
            CoxeterType::E6 => 6,
            CoxeterType::E7 => 7,
            CoxeterType::E8 => 8,
            CoxeterType::F4 => 4,
            CoxeterType::H3 => 3,
            CoxeterType::H4 => 4,
            CoxeterType::I2(_) => 2,
        }
    }

    fn validate(self) -> Result<()> {
        let ok = match self {
            CoxeterType::A(n) => n >= 1,
            CoxeterType::B(n) => n >= 2,
            CoxeterType::D(n) => n >= 3,
            CoxeterType::I2(m) => m >= 3,
            _ => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidType(format!("{self}")))
        }
    }

    /// Known group order for the type.
    fn known_order(self) -> Result<u128> {
        fn factorial(n: usize) -> Result<u128> {
            let mut acc: u128 = 1;
            for k in 2..=n as u128 {
                acc = acc
                    .checked_mul(k)
                    .ok_or_else(|| Error::InvalidType("rank too large".into()))?;
            }
            Ok(acc)
        }
        Ok(match self {
            CoxeterType::A(n) => factorial(n + 1)?,
            CoxeterType::B(n) => {
                (1u128 << n)
                    .checked_mul(factorial(n)?)
                    .ok_or_else(|| Error::InvalidType("rank too large".into()))?
            }
            CoxeterType::D(n) => {
                (1u128 << (n - 1))
                    .checked_mul(factorial(n)?)
                    .ok_or_else(|| Error::InvalidType("rank too large".into()))?
            }
            CoxeterType::E6 => 51_840,
            CoxeterType::E7 => 2_903_040,
            CoxeterType::E8 => 696_729_600,
            CoxeterType::F4 => 1_152,
            CoxeterType::H3 => 120,
            CoxeterType::H4 => 14_400,
            CoxeterType::I2(m) => 2 * m as u128,
        })
    }

    /// Known positive-root count (equals `l(w_o)`).
    fn known_positive_roots(self) -> usize {
        match self {
            CoxeterType::A(n) => n * (n + 1) / 2,
            CoxeterType::B(n) => n * n,
            CoxeterType::D(n) => n * (n - 1),
            CoxeterType::E6 => 36,
            CoxeterType::E7 => 63,
            CoxeterType::E8 => 120,
            CoxeterType::F4 => 24,
            CoxeterType::H3 => 15,
            CoxeterType::H4 => 60,
            CoxeterType::I2(m) => m,
        }
    }

    /// Parses descriptors like `"A2"`, `"B3"`, `"H4"`, `"I2(7)"`.
    pub fn parse(s: &str) -> Result<CoxeterType> {
        let s = s.trim();
        let bad = || Error::InvalidType(s.to_string());
        if let Some(rest) = s.strip_prefix("I2(").or_else(|| s.strip_prefix("i2(")) {
            let m: usize = rest.strip_suffix(')').ok_or_else(bad)?.parse().map_err(|_| bad())?;
            let t = CoxeterType::I2(m);
            t.validate()?;
            return Ok(t);
        }
        let (family, rank) = s.split_at(1);
        let n: usize = rank.parse().map_err(|_| bad())?;
        let t = match (family, n) {
            ("A" | "a", n) => CoxeterType::A(n),
            ("B" | "b", n) => CoxeterType::B(n),
            ("D" | "d", n) => CoxeterType::D(n),
            ("E" | "e", 6) => CoxeterType::E6,
            ("E" | "e", 7) => CoxeterType::E7,
            ("E" | "e", 8) => CoxeterType::E8,
            ("F" | "f", 4) => CoxeterType::F4,
            ("H" | "h", 3) => CoxeterType::H3,
            ("H" | "h", 4) => CoxeterType::H4,
            _ => return Err(bad()),
        };
        t.validate()?;
        Ok(t)
    }

    fn coxeter_matrix(self) -> CoxeterMatrix {
        let n = self.rank();
        let mut m = vec![vec![2usize; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        let mut bond = |i: usize, j: usize, order: usize| {
            m[i - 1][j - 1] = order;
            m[j - 1][i - 1] = order;
        };
        match self {
            CoxeterType::A(n) => {
                for i in 1..n {
                    bond(i, i + 1, 3);
                }
            }
            CoxeterType::B(n) => {
                for i in 1..n - 1 {
                    bond(i, i + 1, 3);
                }
                bond(n - 1, n, 4);
            }
            CoxeterType::D(n) => {
                // path 1-…-(n-1) with n attached to n-2 (fork at the end)
                for i in 1..n - 1 {
                    bond(i, i + 1, 3);
                }
                bond(n - 2, n, 3);
            }
            CoxeterType::E6 | CoxeterType::E7 | CoxeterType::E8 => {
                bond(1, 3, 3);
                bond(2, 4, 3);
                for i in 3..n {
                    bond(i, i + 1, 3);
                }
            }
            CoxeterType::F4 => {
                bond(1, 2, 3);
                bond(2, 3, 4);
                bond(3, 4, 3);
            }
            CoxeterType::H3 | CoxeterType::H4 => {
                bond(1, 2, 5);
                for i in 2..n {
                    bond(i, i + 1, 3);
                }
            }
            CoxeterType::I2(order) => {
                bond(1, 2, order);
            }
        }
        CoxeterMatrix { entries: m }
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterType::A(n) => write!(f, "A{n}"),
            CoxeterType::B(n) => write!(f, "B{n}"),
            CoxeterType::D(n) => write!(f, "D{n}"),
            CoxeterType::E6 => write!(f, "E6"),
            CoxeterType::E7 => write!(f, "E7"),
            CoxeterType::E8 => write!(f, "E8"),
            CoxeterType::F4 => write!(f, "F4"),
            CoxeterType::H3 => write!(f, "H3"),
            CoxeterType::H4 => write!(f, "H4"),
            CoxeterType::I2(m) => write!(f, "I2({m})"),
        }
    }
}

/// The symmetric matrix of bond orders, `m(i,i) = 1`, `m(i,j) ≥ 2`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoxeterMatrix {
    entries: Vec<Vec<usize>>,
}

impl CoxeterMatrix {
    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    /// Bond order `m(i,j)` with 1-based indices.
    pub fn entry(&self, i: usize, j: usize) -> usize {
        self.entries[i - 1][j - 1]
    }

    pub fn is_simply_laced(&self) -> bool {
        let n = self.rank();
        (1..=n).all(|i| (1..=n).all(|j| i == j || matches!(self.entry(i, j), 2 | 3)))
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.entries
    }
}

#[derive(Debug)]
enum Engine {
    Roots(RootEngine),
    Dihedral(DihedralEngine),
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
enum ElemRepr {
    Perm(Box<[u32]>),
    Dihedral(DihedralElem),
}

/// An exact group element, owned logically by the [`CoxeterSystem`] that
/// created it. Equality and hashing are exact; the length is cached.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct GroupElement {
    repr: ElemRepr,
    length: u32,
}

impl GroupElement {
    pub fn length(&self) -> usize {
        self.length as usize
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }
}

/// A finite Coxeter system with a verified root/dihedral model behind it.
#[derive(Debug)]
pub struct CoxeterSystem {
    ctype: CoxeterType,
    matrix: CoxeterMatrix,
    engine: Engine,
    group_order: u128,
}

impl CoxeterSystem {
    pub fn new(ctype: CoxeterType) -> Result<Self> {
        ctype.validate()?;
        let matrix = ctype.coxeter_matrix();
        let group_order = ctype.known_order()?;
        let engine = match ctype {
            CoxeterType::I2(m) => Engine::Dihedral(DihedralEngine::new(m)),
            _ => Engine::Roots(RootEngine::new(&matrix, ctype.known_positive_roots())?),
        };
        Ok(CoxeterSystem {
            ctype,
            matrix,
            engine,
            group_order,
        })
    }

    /// Builds a system from a descriptor string like `"A2"` or `"I2(7)"`.
    pub fn parse(descriptor: &str) -> Result<Self> {
        CoxeterSystem::new(CoxeterType::parse(descriptor)?)
    }

    pub fn coxeter_type(&self) -> CoxeterType {
        self.ctype
    }

    pub fn descriptor(&self) -> String {
        self.ctype.to_string()
    }

    pub fn rank(&self) -> usize {
        self.ctype.rank()
    }

    pub fn matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    pub fn is_simply_laced(&self) -> bool {
        self.matrix.is_simply_laced()
    }

    pub fn group_order(&self) -> u128 {
        self.group_order
    }

    fn check_gen(&self, i: usize) -> Result<()> {
        if i >= 1 && i <= self.rank() {
            Ok(())
        } else {
            Err(Error::GeneratorOutOfRange {
                index: i,
                rank: self.rank(),
            })
        }
    }

    pub fn identity(&self) -> GroupElement {
        match &self.engine {
            Engine::Roots(eng) => GroupElement {
                repr: ElemRepr::Perm(eng.identity_perm()),
                length: 0,
            },
            Engine::Dihedral(eng) => GroupElement {
                repr: ElemRepr::Dihedral(eng.identity()),
                length: 0,
            },
        }
    }

    pub fn generator(&self, i: usize) -> Result<GroupElement> {
        self.check_gen(i)?;
        Ok(self.multiply_gen(&self.identity(), i, Side::Right).unwrap())
    }

    /// Multiplies by the generator `s_i` on the given side.
    pub fn multiply_gen(&self, w: &GroupElement, i: usize, side: Side) -> Result<GroupElement> {
        self.check_gen(i)?;
        Ok(match (&self.engine, &w.repr) {
            (Engine::Roots(eng), ElemRepr::Perm(p)) => {
                let perm = match side {
                    Side::Left => eng.mul_gen_left(i, p),
                    Side::Right => eng.mul_gen_right(p, i),
                };
                let length = eng.length_of(&perm);
                GroupElement {
                    repr: ElemRepr::Perm(perm),
                    length,
                }
            }
            (Engine::Dihedral(eng), ElemRepr::Dihedral(d)) => {
                let elem = match side {
                    Side::Left => eng.mul_gen_left(i, *d),
                    Side::Right => eng.mul_gen_right(*d, i),
                };
                GroupElement {
                    repr: ElemRepr::Dihedral(elem),
                    length: eng.length_of(elem),
                }
            }
            _ => return Err(Error::SystemMismatch),
        })
    }

    pub fn multiply(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        Ok(match (&self.engine, &a.repr, &b.repr) {
            (Engine::Roots(eng), ElemRepr::Perm(pa), ElemRepr::Perm(pb)) => {
                let perm = eng.compose(pa, pb);
                let length = eng.length_of(&perm);
                GroupElement {
                    repr: ElemRepr::Perm(perm),
                    length,
                }
            }
            (Engine::Dihedral(eng), ElemRepr::Dihedral(da), ElemRepr::Dihedral(db)) => {
                let elem = eng.compose(*da, *db);
                GroupElement {
                    repr: ElemRepr::Dihedral(elem),
                    length: eng.length_of(elem),
                }
            }
            _ => return Err(Error::SystemMismatch),
        })
    }

    pub fn inverse(&self, w: &GroupElement) -> Result<GroupElement> {
        Ok(match (&self.engine, &w.repr) {
            (Engine::Roots(eng), ElemRepr::Perm(p)) => GroupElement {
                repr: ElemRepr::Perm(eng.invert(p)),
                length: w.length,
            },
            (Engine::Dihedral(eng), ElemRepr::Dihedral(d)) => GroupElement {
                repr: ElemRepr::Dihedral(eng.invert(*d)),
                length: w.length,
            },
            _ => return Err(Error::SystemMismatch),
        })
    }

    /// Left-to-right product of the generators named by `letters`.
    pub fn element_of_word(&self, letters: &[usize]) -> Result<GroupElement> {
        let mut acc = self.identity();
        for &i in letters {
            acc = self.multiply_gen(&acc, i, Side::Right)?;
        }
        Ok(acc)
    }

    pub fn is_left_descent(&self, w: &GroupElement, i: usize) -> Result<bool> {
        self.check_gen(i)?;
        Ok(match (&self.engine, &w.repr) {
            (Engine::Roots(eng), ElemRepr::Perm(p)) => eng.is_left_descent(p, i),
            (Engine::Dihedral(_), ElemRepr::Dihedral(_)) => {
                self.multiply_gen(w, i, Side::Left)?.length < w.length
            }
            _ => return Err(Error::SystemMismatch),
        })
    }

    pub fn is_right_descent(&self, w: &GroupElement, i: usize) -> Result<bool> {
        self.check_gen(i)?;
        Ok(match (&self.engine, &w.repr) {
            (Engine::Roots(eng), ElemRepr::Perm(p)) => eng.is_right_descent(p, i),
            (Engine::Dihedral(_), ElemRepr::Dihedral(_)) => {
                self.multiply_gen(w, i, Side::Right)?.length < w.length
            }
            _ => return Err(Error::SystemMismatch),
        })
    }

    /// The unique maximal-length element, reached by greedy ascent.
    pub fn longest_element(&self) -> GroupElement {
        let mut w = self.identity();
        'outer: loop {
            for i in 1..=self.rank() {
                let next = self.multiply_gen(&w, i, Side::Right).unwrap();
                if next.length > w.length {
                    w = next;
                    continue 'outer;
                }
            }
            return w;
        }
    }

    /// All group elements in canonical order (length, then representation).
    ///
    /// Intended for desk-scale sweeps; materializes the whole group.
    pub fn all_elements(&self) -> Vec<GroupElement> {
        let mut seen: HashSet<GroupElement> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(self.identity());
        queue.push_back(self.identity());
        while let Some(w) = queue.pop_front() {
            for i in 1..=self.rank() {
                let next = self.multiply_gen(&w, i, Side::Right).unwrap();
                if !seen.contains(&next) {
                    seen.insert(next.clone());
                    queue.push_back(next);
                }
            }
        }
        let mut out: Vec<GroupElement> = seen.into_iter().collect();
        out.sort_by(|a, b| (a.length, &a.repr).cmp(&(b.length, &b.repr)));
        out
    }
}
