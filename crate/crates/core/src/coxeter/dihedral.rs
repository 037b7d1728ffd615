use std::collections::VecDeque;

/// Direct model of the dihedral group of order 2m for type `I2(m)`.
///
/// Elements are rotations `rot(k)` and reflections `refl(k)`, `k ∈ 0..m`,
/// with `s_1 = refl(0)` and `s_2 = refl(1)`, so `s_1·s_2 = rot(m-1)` has
/// order m. Word lengths are tabulated by breadth-first search once at
/// construction.
#[derive(Debug)]
pub struct DihedralEngine {
    m: u32,
    /// Length table indexed by `code`: rotations at `k`, reflections at `m + k`.
    lengths: Vec<u32>,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct DihedralElem {
    pub rot: u32,
    pub refl: bool,
}

impl DihedralEngine {
    pub fn new(m: usize) -> Self {
        let m = m as u32;
        let mut engine = DihedralEngine {
            m,
            lengths: vec![u32::MAX; 2 * m as usize],
        };
        let mut queue = VecDeque::new();
        let e = DihedralElem { rot: 0, refl: false };
        let start = engine.code(e);
        engine.lengths[start] = 0;
        queue.push_back(e);
        while let Some(w) = queue.pop_front() {
            let lw = engine.lengths[engine.code(w)];
            for i in 1..=2 {
                let next = engine.mul_gen_right(w, i);
                let slot = engine.code(next);
                if engine.lengths[slot] == u32::MAX {
                    engine.lengths[slot] = lw + 1;
                    queue.push_back(next);
                }
            }
        }
        engine
    }

    fn code(&self, w: DihedralElem) -> usize {
        (if w.refl { self.m + w.rot } else { w.rot }) as usize
    }

    pub fn identity(&self) -> DihedralElem {
        DihedralElem { rot: 0, refl: false }
    }

    pub fn generator(&self, i: usize) -> DihedralElem {
        DihedralElem {
            rot: (i - 1) as u32,
            refl: true,
        }
    }

    pub fn length_of(&self, w: DihedralElem) -> u32 {
        self.lengths[self.code(w)]
    }

    pub fn compose(&self, a: DihedralElem, b: DihedralElem) -> DihedralElem {
        let m = self.m;
        match (a.refl, b.refl) {
            (false, false) => DihedralElem { rot: (a.rot + b.rot) % m, refl: false },
            (false, true) => DihedralElem { rot: (a.rot + b.rot) % m, refl: true },
            (true, false) => DihedralElem { rot: (a.rot + m - b.rot % m) % m, refl: true },
            (true, true) => DihedralElem { rot: (a.rot + m - b.rot % m) % m, refl: false },
        }
    }

    pub fn invert(&self, w: DihedralElem) -> DihedralElem {
        if w.refl {
            w
        } else {
            DihedralElem { rot: (self.m - w.rot % self.m) % self.m, refl: false }
        }
    }

    pub fn mul_gen_right(&self, w: DihedralElem, i: usize) -> DihedralElem {
        self.compose(w, self.generator(i))
    }

    pub fn mul_gen_left(&self, i: usize, w: DihedralElem) -> DihedralElem {
        self.compose(self.generator(i), w)
    }
}
