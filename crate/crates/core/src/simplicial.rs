//! Facet-based simplicial complexes.
//!
//! A complex is stored by its inclusion-maximal faces; all other faces are
//! materialized on demand. Two degenerate values are distinct and both
//! representable: the VOID complex (no facets at all) and the EMPTY complex
//! (a single empty facet, the sphere of dimension −1).

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::{Error, Result};

pub type Label = String;
pub type Face = BTreeSet<Label>;

/// Builds a [`Face`] from anything yielding label-like values.
pub fn face<I, S>(labels: I) -> Face
where
    I: IntoIterator<Item = S>,
    S: Into<Label>,
{
    labels.into_iter().map(Into::into).collect()
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct SimplicialComplex {
    facets: BTreeSet<Face>,
}

impl SimplicialComplex {
    /// The complex with no faces at all.
    pub fn void() -> Self {
        SimplicialComplex {
            facets: BTreeSet::new(),
        }
    }

    /// The complex whose only facet is the empty set: the (−1)-sphere.
    pub fn empty() -> Self {
        let mut facets = BTreeSet::new();
        facets.insert(Face::new());
        SimplicialComplex { facets }
    }

    /// Builds a complex from generating faces, dropping duplicates and
    /// non-maximal sets.
    pub fn from_facets<I, J, S>(gens: I) -> Self
    where
        I: IntoIterator<Item = J>,
        J: IntoIterator<Item = S>,
        S: Into<Label>,
    {
        let candidates: BTreeSet<Face> = gens.into_iter().map(face).collect();
        let facets: BTreeSet<Face> = candidates
            .iter()
            .filter(|f| {
                !candidates
                    .iter()
                    .any(|other| *f != other && f.is_subset(other))
            })
            .cloned()
            .collect();
        SimplicialComplex { facets }
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// True for the single-empty-facet complex (the (−1)-sphere).
    pub fn is_empty_complex(&self) -> bool {
        self.facets.len() == 1 && self.facets.iter().next().unwrap().is_empty()
    }

    pub fn facets(&self) -> impl Iterator<Item = &Face> {
        self.facets.iter()
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    pub fn facet_set(&self) -> &BTreeSet<Face> {
        &self.facets
    }

    pub fn vertices(&self) -> Face {
        let mut out = Face::new();
        for f in &self.facets {
            out.extend(f.iter().cloned());
        }
        out
    }

    pub fn has_vertex(&self, v: &str) -> bool {
        self.facets.iter().any(|f| f.contains(v))
    }

    /// Dimension: `None` for VOID, otherwise max facet size − 1 (so the
    /// EMPTY complex has dimension −1).
    pub fn dim(&self) -> Option<i64> {
        self.facets
            .iter()
            .map(|f| f.len() as i64 - 1)
            .max()
    }

    pub fn is_pure(&self) -> bool {
        let mut sizes = self.facets.iter().map(|f| f.len());
        match sizes.next() {
            None => true,
            Some(first) => sizes.all(|s| s == first),
        }
    }

    pub fn is_face(&self, sigma: &Face) -> bool {
        self.facets.iter().any(|f| sigma.is_subset(f))
    }

    /// Every face, the empty set included (absent only for VOID).
    pub fn faces(&self) -> BTreeSet<Face> {
        let mut out: BTreeSet<Face> = BTreeSet::new();
        for f in &self.facets {
            let items: Vec<&Label> = f.iter().collect();
            let n = items.len();
            for mask in 0..(1usize << n) {
                let sub: Face = (0..n)
                    .filter(|k| mask & (1 << k) != 0)
                    .map(|k| items[k].clone())
                    .collect();
                out.insert(sub);
            }
        }
        out
    }

    fn require_face(&self, sigma: &Face) -> Result<()> {
        if self.is_face(sigma) {
            Ok(())
        } else {
            Err(Error::NotAFace(labels_string(sigma)))
        }
    }

    /// `Lk(σ) = {ρ | σ∪ρ ∈ X, σ∩ρ = ∅}`; facets are `F∖σ` over facets
    /// `F ⊇ σ`.
    pub fn link(&self, sigma: &Face) -> Result<SimplicialComplex> {
        self.require_face(sigma)?;
        let facets: BTreeSet<Face> = self
            .facets
            .iter()
            .filter(|f| sigma.is_subset(f))
            .map(|f| f.difference(sigma).cloned().collect())
            .collect();
        Ok(SimplicialComplex { facets })
    }

    /// `St(σ) = {ρ | σ∪ρ ∈ X}`; the subcomplex generated by facets
    /// containing σ.
    pub fn star(&self, sigma: &Face) -> Result<SimplicialComplex> {
        self.require_face(sigma)?;
        let facets: BTreeSet<Face> = self
            .facets
            .iter()
            .filter(|f| sigma.is_subset(f))
            .cloned()
            .collect();
        Ok(SimplicialComplex { facets })
    }

    /// Join on disjoint vertex sets; facets are pairwise unions.
    pub fn join(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        let mine = self.vertices();
        if let Some(shared) = other.vertices().intersection(&mine).next() {
            return Err(Error::LabelCollision(shared.clone()));
        }
        let mut facets = BTreeSet::new();
        for f1 in &self.facets {
            for f2 in &other.facets {
                facets.insert(f1.union(f2).cloned().collect());
            }
        }
        Ok(SimplicialComplex { facets })
    }

    /// Join with two fresh apex points.
    pub fn suspension(&self, a: impl Into<Label>, b: impl Into<Label>) -> Result<SimplicialComplex> {
        let a = a.into();
        let b = b.into();
        if a == b {
            return Err(Error::LabelCollision(a));
        }
        let poles = SimplicialComplex::from_facets([[a], [b]]);
        self.join(&poles)
    }

    /// Bisects every facet containing the edge `{s, t}` through a fresh
    /// vertex `r`: each such facet `F` splits into `(F∖{s})∪{r}` and
    /// `(F∖{t})∪{r}`.
    pub fn edge_subdivision(
        &self,
        s: &str,
        t: &str,
        r: impl Into<Label>,
    ) -> Result<SimplicialComplex> {
        let r = r.into();
        let edge: Face = face([s, t]);
        if s == t || !self.is_face(&edge) {
            return Err(Error::NotAnEdge(labels_string(&edge)));
        }
        if self.vertices().contains(&r) {
            return Err(Error::LabelCollision(r));
        }
        let mut facets = BTreeSet::new();
        for f in &self.facets {
            if edge.is_subset(f) {
                for drop in [s, t] {
                    let mut split: Face = f.iter().filter(|v| *v != drop).cloned().collect();
                    split.insert(r.clone());
                    facets.insert(split);
                }
            } else {
                facets.insert(f.clone());
            }
        }
        Ok(SimplicialComplex { facets })
    }

    /// Searches for a complex `Y` and edge `η` with
    /// `edge_subdivision(Y, η, r) == self`. Candidate endpoints are drawn
    /// from the neighbors of `r` in lexicographic pair order; each candidate
    /// is verified by reconstruction. Returns `Ok(None)` when no preimage
    /// exists.
    pub fn inverse_edge_subdivision(
        &self,
        r: &str,
    ) -> Result<Option<(SimplicialComplex, (Label, Label))>> {
        if !self.has_vertex(r) {
            return Err(Error::NoSuchVertex(r.to_string()));
        }
        let neighbors: Vec<Label> = self
            .vertices()
            .into_iter()
            .filter(|v| v != r && self.is_face(&face([v.clone(), r.to_string()])))
            .collect();
        for (ai, a) in neighbors.iter().enumerate() {
            for b in neighbors.iter().skip(ai + 1) {
                if let Some(y) = self.try_unsubdivide(r, a, b) {
                    return Ok(Some((y, (a.clone(), b.clone()))));
                }
            }
        }
        Ok(None)
    }

    /// Checked variant of [`inverse_edge_subdivision`] for callers that know
    /// the intended edge.
    pub fn inverse_edge_subdivision_at(
        &self,
        r: &str,
        s: &str,
        t: &str,
    ) -> Result<Option<SimplicialComplex>> {
        if !self.has_vertex(r) {
            return Err(Error::NoSuchVertex(r.to_string()));
        }
        Ok(self.try_unsubdivide(r, s, t))
    }

    fn try_unsubdivide(&self, r: &str, s: &str, t: &str) -> Option<SimplicialComplex> {
        let mut gens: Vec<Face> = Vec::new();
        for f in &self.facets {
            if f.contains(r) {
                let mut merged: Face = f.iter().filter(|v| *v != r).cloned().collect();
                merged.insert(s.to_string());
                merged.insert(t.to_string());
                gens.push(merged);
            } else {
                gens.push(f.clone());
            }
        }
        let candidate = SimplicialComplex::from_facets(gens);
        match candidate.edge_subdivision(s, t, r) {
            Ok(redone) if redone == *self => Some(candidate),
            _ => None,
        }
    }

    pub fn f_vector(&self) -> FVector {
        let faces = self.faces();
        let top = faces.iter().map(|f| f.len()).max();
        let mut counts = match top {
            None => Vec::new(),
            Some(top) => vec![0u64; top + 1],
        };
        for f in &faces {
            counts[f.len()] += 1;
        }
        FVector { counts }
    }

    /// `χ = Σ_{i≥0} (−1)^i f_i`.
    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector().euler_characteristic()
    }

    /// `χ̃ = χ − f_{−1}`: 0 for VOID, −1 for EMPTY.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.f_vector().reduced_euler_characteristic()
    }

    /// True iff the complex is pure and every codimension-1 face lies in
    /// exactly two facets. VOID is rejected by convention; EMPTY counts as
    /// a closed pseudomanifold (it has no ridges).
    pub fn is_closed_pseudomanifold(&self) -> Result<bool> {
        if !self.is_pure() {
            return Err(Error::NotPure);
        }
        if self.is_void() {
            return Ok(false);
        }
        let mut ridge_counts: HashMap<Face, usize> = HashMap::new();
        for f in &self.facets {
            for v in f {
                let ridge: Face = f.iter().filter(|u| *u != v).cloned().collect();
                *ridge_counts.entry(ridge).or_insert(0) += 1;
            }
        }
        Ok(ridge_counts.values().all(|&c| c == 2))
    }

    /// Renames vertices through `map`; labels missing from the map stay.
    /// Fails if the renaming collapses vertices.
    pub fn relabel(&self, map: &BTreeMap<Label, Label>) -> Result<SimplicialComplex> {
        let apply = |v: &Label| -> Label { map.get(v).cloned().unwrap_or_else(|| v.clone()) };
        let before = self.vertices().len();
        let facets: BTreeSet<Face> = self
            .facets
            .iter()
            .map(|f| f.iter().map(apply).collect::<Face>())
            .collect();
        let out = SimplicialComplex { facets };
        if out.vertices().len() != before {
            return Err(Error::LabelCollision(
                "relabeling collapses vertices".to_string(),
            ));
        }
        Ok(out)
    }

    /// Searches for a vertex bijection carrying facets onto facets.
    /// Backtracking with facet-size-signature pruning; fine at desk scale.
    pub fn are_isomorphic(&self, other: &SimplicialComplex) -> Option<BTreeMap<Label, Label>> {
        if self.facet_count() != other.facet_count() || self.f_vector() != other.f_vector() {
            return None;
        }
        let mine: Vec<Label> = self.vertices().into_iter().collect();
        let theirs: Vec<Label> = other.vertices().into_iter().collect();
        if mine.len() != theirs.len() {
            return None;
        }
        if mine.is_empty() {
            // VOID↔VOID or EMPTY↔EMPTY at this point
            return Some(BTreeMap::new());
        }

        let signature = |complex: &SimplicialComplex, v: &Label| -> Vec<usize> {
            let mut sizes: Vec<usize> = complex
                .facets
                .iter()
                .filter(|f| f.contains(v))
                .map(|f| f.len())
                .collect();
            sizes.sort_unstable();
            sizes
        };
        let my_sigs: HashMap<&Label, Vec<usize>> =
            mine.iter().map(|v| (v, signature(self, v))).collect();
        let their_sigs: HashMap<&Label, Vec<usize>> =
            theirs.iter().map(|v| (v, signature(other, v))).collect();
        {
            let mut a: Vec<_> = my_sigs.values().collect();
            let mut b: Vec<_> = their_sigs.values().collect();
            a.sort();
            b.sort();
            if a != b {
                return None;
            }
        }

        // Assign rarest-signature vertices first.
        let mut order = mine.clone();
        let mut sig_freq: HashMap<&Vec<usize>, usize> = HashMap::new();
        for sig in my_sigs.values() {
            *sig_freq.entry(sig).or_insert(0) += 1;
        }
        order.sort_by_key(|v| (sig_freq[&my_sigs[v]], v.clone()));

        let mut assignment: BTreeMap<Label, Label> = BTreeMap::new();
        let mut used: BTreeSet<Label> = BTreeSet::new();
        if self.try_assign(other, &order, 0, &my_sigs, &their_sigs, &mut assignment, &mut used) {
            Some(assignment)
        } else {
            None
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn try_assign(
        &self,
        other: &SimplicialComplex,
        order: &[Label],
        idx: usize,
        my_sigs: &HashMap<&Label, Vec<usize>>,
        their_sigs: &HashMap<&Label, Vec<usize>>,
        assignment: &mut BTreeMap<Label, Label>,
        used: &mut BTreeSet<Label>,
    ) -> bool {
        if idx == order.len() {
            let image: BTreeSet<Face> = self
                .facets
                .iter()
                .map(|f| f.iter().map(|v| assignment[v].clone()).collect())
                .collect();
            return image == other.facets;
        }
        let v = &order[idx];
        let mut candidates: Vec<Label> = their_sigs
            .iter()
            .filter(|(w, sig)| !used.contains(**w) && *sig == &my_sigs[v])
            .map(|(w, _)| (*w).clone())
            .collect();
        candidates.sort();
        for w in candidates {
            assignment.insert(v.clone(), w.clone());
            used.insert(w.clone());
            if self.partial_ok(other, assignment)
                && self.try_assign(other, order, idx + 1, my_sigs, their_sigs, assignment, used)
            {
                return true;
            }
            assignment.remove(v);
            used.remove(&w);
        }
        false
    }

    /// Every facet's assigned part must still fit inside some facet of the
    /// target (and fully assigned facets must map exactly onto facets).
    fn partial_ok(&self, other: &SimplicialComplex, assignment: &BTreeMap<Label, Label>) -> bool {
        for f in &self.facets {
            let mapped: Face = f
                .iter()
                .filter_map(|v| assignment.get(v).cloned())
                .collect();
            let fully = mapped.len() == f.len();
            if fully {
                if !other.facets.contains(&mapped) {
                    return false;
                }
            } else if !other.facets.iter().any(|g| mapped.is_subset(g)) {
                return false;
            }
        }
        true
    }
}

fn labels_string(f: &Face) -> String {
    f.iter().cloned().collect::<Vec<_>>().join(",")
}

/// Face counts `f_{-1}, f_0, …, f_d`. VOID has no counts at all.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FVector {
    /// `counts[k]` is the number of faces of cardinality `k` (dimension
    /// `k − 1`).
    counts: Vec<u64>,
}

impl FVector {
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// `f_d` (dimension-indexed); zero outside range.
    pub fn count(&self, dim: i64) -> u64 {
        let k = dim + 1;
        if k < 0 {
            return 0;
        }
        self.counts.get(k as usize).copied().unwrap_or(0)
    }

    /// Counts from `f_0` upward, the usual display form.
    pub fn from_dim_zero(&self) -> Vec<u64> {
        self.counts.iter().skip(1).copied().collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.counts
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| if k % 2 == 1 { c as i64 } else { -(c as i64) })
            .sum()
    }

    pub fn reduced_euler_characteristic(&self) -> i64 {
        let f_minus_one = self.counts.first().copied().unwrap_or(0) as i64;
        self.euler_characteristic() - f_minus_one
    }
}

impl serde::Serialize for FVector {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        // External form: counts from f_0 upward; f_{-1} is implied by the
        // complex encoding (VOID vs EMPTY).
        self.from_dim_zero().serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pentagon() -> SimplicialComplex {
        SimplicialComplex::from_facets([
            ["1", "2"],
            ["2", "3"],
            ["3", "4"],
            ["4", "5"],
            ["1", "5"],
        ])
    }

    #[test]
    fn void_vs_empty() {
        let void = SimplicialComplex::void();
        let empty = SimplicialComplex::empty();
        assert!(void.is_void());
        assert!(!empty.is_void());
        assert!(empty.is_empty_complex());
        assert_ne!(void, empty);
        assert_eq!(void.dim(), None);
        assert_eq!(empty.dim(), Some(-1));
        assert_eq!(void.reduced_euler_characteristic(), 0);
        assert_eq!(empty.reduced_euler_characteristic(), -1);
    }

    #[test]
    fn from_facets_drops_dominated() {
        let x = SimplicialComplex::from_facets([vec!["a", "b"], vec!["a"], vec!["a", "b"]]);
        assert_eq!(x.facet_count(), 1);
        assert!(x.is_face(&face(["a"])));
    }

    #[test]
    fn link_examples() {
        let p = pentagon();
        let lk = p.link(&face(["1"])).unwrap();
        assert_eq!(lk, SimplicialComplex::from_facets([["2"], ["5"]]));
        assert_eq!(p.link(&Face::new()).unwrap(), p);
        let tri = SimplicialComplex::from_facets([["1", "2", "3"]]);
        let lk = tri.link(&face(["1", "2"])).unwrap();
        assert_eq!(lk, SimplicialComplex::from_facets([["3"]]));
        assert!(tri.link(&face(["1", "4"])).is_err());
    }

    #[test]
    fn star_examples() {
        let p = pentagon();
        let st = p.star(&face(["1"])).unwrap();
        assert_eq!(st, SimplicialComplex::from_facets([["1", "2"], ["1", "5"]]));
        assert_eq!(p.star(&Face::new()).unwrap(), p);
        let point = SimplicialComplex::from_facets([["v"]]);
        assert_eq!(point.star(&face(["v"])).unwrap(), point);
    }

    #[test]
    fn join_examples() {
        let a = SimplicialComplex::from_facets([["a"]]);
        let b = SimplicialComplex::from_facets([["b"]]);
        let edge = a.join(&b).unwrap();
        assert_eq!(edge, SimplicialComplex::from_facets([["a", "b"]]));

        let x = pentagon();
        assert_eq!(x.join(&SimplicialComplex::empty()).unwrap(), x);

        let s0 = SimplicialComplex::from_facets([["x"], ["y"]]);
        let s0b = SimplicialComplex::from_facets([["u"], ["v"]]);
        let four_cycle = s0.join(&s0b).unwrap();
        assert_eq!(four_cycle.facet_count(), 4);
        assert_eq!(four_cycle.f_vector().from_dim_zero(), vec![4, 4]);

        assert!(x.join(&SimplicialComplex::from_facets([["1"]])).is_err());
        // facet counts multiply
        assert_eq!(
            pentagon().join(&s0).unwrap().facet_count(),
            pentagon().facet_count() * s0.facet_count()
        );
    }

    #[test]
    fn suspension_examples() {
        let s0 = SimplicialComplex::from_facets([["x"], ["y"]]);
        let sus = s0.suspension("a", "b").unwrap();
        assert_eq!(sus.facet_count(), 4);

        let sus_empty = SimplicialComplex::empty().suspension("a", "b").unwrap();
        assert_eq!(sus_empty, SimplicialComplex::from_facets([["a"], ["b"]]));

        let sp = pentagon().suspension("a", "b").unwrap();
        let fv = sp.f_vector();
        assert_eq!(fv.count(0), 7);
        assert_eq!(fv.count(2), 10);
        assert_eq!(sp.euler_characteristic(), 2);
        // suspension negates the reduced Euler characteristic
        assert_eq!(
            sp.reduced_euler_characteristic(),
            -pentagon().reduced_euler_characteristic()
        );
        assert!(pentagon().suspension("1", "b").is_err());
    }

    #[test]
    fn edge_subdivision_examples() {
        let four = SimplicialComplex::from_facets([["a", "b"], ["b", "c"], ["c", "d"], ["a", "d"]]);
        let five = four.edge_subdivision("a", "b", "r").unwrap();
        assert_eq!(five.facet_count(), 5);
        assert!(five.are_isomorphic(&pentagon()).is_some());

        let single = SimplicialComplex::from_facets([["s", "t"]]);
        let path = single.edge_subdivision("s", "t", "r").unwrap();
        assert_eq!(
            path,
            SimplicialComplex::from_facets([["s", "r"], ["r", "t"]])
        );

        let sp = pentagon().suspension("a", "b").unwrap();
        assert!(matches!(
            sp.edge_subdivision("a", "b", "r"),
            Err(Error::NotAnEdge(_))
        ));
    }

    /// The facet-level subdivision must agree with both displayed face-level
    /// forms: `{σ | η⊄σ} ∪ {σ∪{r}, σ∪{r,s}, σ∪{r,t} | σ ∈ Lk(η)}` and
    /// `{σ | η⊄σ} ∪ {σ∪{r} | σ ∈ St(η), η⊄σ}`.
    #[test]
    fn edge_subdivision_matches_face_level_formulas() {
        let complexes = [
            pentagon().suspension("a", "b").unwrap(),
            SimplicialComplex::from_facets([["s", "t", "u"]]),
            SimplicialComplex::from_facets([["s", "t"], ["t", "u"], ["s", "u"]]),
        ];
        for x in complexes {
            let verts: Vec<Label> = x.vertices().into_iter().collect();
            for (i, s) in verts.iter().enumerate() {
                for t in verts.iter().skip(i + 1) {
                    let eta = face([s.clone(), t.clone()]);
                    if !x.is_face(&eta) {
                        continue;
                    }
                    let sub = x.edge_subdivision(s, t, "r").unwrap();
                    let got = sub.faces();

                    let mut expected: BTreeSet<Face> = x
                        .faces()
                        .into_iter()
                        .filter(|f| !eta.is_subset(f))
                        .collect();
                    let lk = x.link(&eta).unwrap();
                    for sigma in lk.faces() {
                        for extra in [vec!["r"], vec!["r", s], vec!["r", t]] {
                            let mut f = sigma.clone();
                            f.extend(extra.into_iter().map(str::to_string));
                            expected.insert(f);
                        }
                    }
                    assert_eq!(got, expected, "first displayed form");

                    let mut expected2: BTreeSet<Face> = x
                        .faces()
                        .into_iter()
                        .filter(|f| !eta.is_subset(f))
                        .collect();
                    let st = x.star(&eta).unwrap();
                    for sigma in st.faces() {
                        if eta.is_subset(&sigma) {
                            continue;
                        }
                        let mut f = sigma.clone();
                        f.insert("r".to_string());
                        expected2.insert(f);
                    }
                    assert_eq!(got, expected2, "second displayed form");
                }
            }
        }
    }

    #[test]
    fn inverse_edge_subdivision_examples() {
        // 5-cycle contracts back to the 4-cycle
        let four = SimplicialComplex::from_facets([["a", "b"], ["b", "c"], ["c", "d"], ["a", "d"]]);
        let five = four.edge_subdivision("a", "b", "r").unwrap();
        let (y, eta) = five.inverse_edge_subdivision("r").unwrap().unwrap();
        assert_eq!(y, four);
        assert_eq!(eta, ("a".to_string(), "b".to_string()));

        // tetrahedron boundary: no vertex admits a preimage (a 2-sphere
        // needs more than 3 vertices)
        let tetra = SimplicialComplex::from_facets([
            ["1", "2", "3"],
            ["1", "2", "4"],
            ["1", "3", "4"],
            ["2", "3", "4"],
        ]);
        for v in tetra.vertices() {
            assert!(tetra.inverse_edge_subdivision(&v).unwrap().is_none());
        }

        // octahedron: every vertex contracts onto its pair of opposite
        // neighbors, giving two tetrahedra glued along that edge
        let oct = SimplicialComplex::from_facets([
            ["1", "2", "3"],
            ["1", "3", "4"],
            ["1", "4", "5"],
            ["1", "5", "2"],
            ["6", "2", "3"],
            ["6", "3", "4"],
            ["6", "4", "5"],
            ["6", "5", "2"],
        ]);
        let (y, (s, t)) = oct.inverse_edge_subdivision("1").unwrap().unwrap();
        assert_eq!((s.as_str(), t.as_str()), ("2", "4"));
        assert_eq!(y.edge_subdivision(&s, &t, "1").unwrap(), oct);

        // suspension round-trip
        let sp = pentagon().suspension("a", "b").unwrap();
        let sub = sp.edge_subdivision("1", "2", "r").unwrap();
        let (y, eta) = sub.inverse_edge_subdivision("r").unwrap().unwrap();
        assert_eq!(y, sp);
        assert_eq!(eta, ("1".to_string(), "2".to_string()));

        assert!(sp.inverse_edge_subdivision("zz").is_err());
    }

    #[test]
    fn f_vector_and_euler() {
        let p = pentagon();
        let fv = p.f_vector();
        assert_eq!(fv.from_dim_zero(), vec![5, 5]);
        assert_eq!(p.euler_characteristic(), 0);

        let tetra = SimplicialComplex::from_facets([
            ["1", "2", "3"],
            ["1", "2", "4"],
            ["1", "3", "4"],
            ["2", "3", "4"],
        ]);
        assert_eq!(tetra.euler_characteristic(), 2);

        let empty = SimplicialComplex::empty();
        assert_eq!(empty.f_vector().counts(), &[1]);
        assert_eq!(empty.reduced_euler_characteristic(), -1);
    }

    #[test]
    fn pseudomanifold_examples() {
        assert!(pentagon().is_closed_pseudomanifold().unwrap());
        let path = SimplicialComplex::from_facets([["a", "b"], ["b", "c"]]);
        assert!(!path.is_closed_pseudomanifold().unwrap());
        assert!(SimplicialComplex::empty().is_closed_pseudomanifold().unwrap());
        assert!(!SimplicialComplex::void().is_closed_pseudomanifold().unwrap());
        let s0 = SimplicialComplex::from_facets([["a"], ["b"]]);
        assert!(s0.is_closed_pseudomanifold().unwrap());
        let point = SimplicialComplex::from_facets([["a"]]);
        assert!(!point.is_closed_pseudomanifold().unwrap());
        let impure = SimplicialComplex::from_facets([vec!["a", "b"], vec!["c"]]);
        assert!(matches!(
            impure.is_closed_pseudomanifold(),
            Err(Error::NotPure)
        ));
    }

    #[test]
    fn subdivision_preserves_pseudomanifold_and_euler() {
        let sp = pentagon().suspension("a", "b").unwrap();
        let sub = sp.edge_subdivision("1", "2", "r").unwrap();
        assert_eq!(sub.euler_characteristic(), sp.euler_characteristic());
        assert_eq!(
            sub.is_closed_pseudomanifold().unwrap(),
            sp.is_closed_pseudomanifold().unwrap()
        );
    }

    #[test]
    fn isomorphism_examples() {
        let p = pentagon();
        let relabeled = SimplicialComplex::from_facets([
            ["x", "y"],
            ["y", "z"],
            ["z", "w"],
            ["w", "v"],
            ["x", "v"],
        ]);
        let iso = p.are_isomorphic(&relabeled).unwrap();
        // verify the witness maps facets onto facets
        let image: BTreeSet<Face> = p
            .facet_set()
            .iter()
            .map(|f| f.iter().map(|v| iso[v].clone()).collect())
            .collect();
        assert_eq!(&image, relabeled.facet_set());

        let four = SimplicialComplex::from_facets([["a", "b"], ["b", "c"], ["c", "d"], ["a", "d"]]);
        assert!(p.are_isomorphic(&four).is_none());
        assert!(SimplicialComplex::void()
            .are_isomorphic(&SimplicialComplex::void())
            .is_some());
        assert!(SimplicialComplex::empty()
            .are_isomorphic(&SimplicialComplex::empty())
            .is_some());
        assert!(SimplicialComplex::void()
            .are_isomorphic(&SimplicialComplex::empty())
            .is_none());
    }

    #[test]
    fn relabel_checks_injectivity() {
        let p = pentagon();
        let mut map = BTreeMap::new();
        map.insert("1".to_string(), "2".to_string());
        assert!(p.relabel(&map).is_err());
        map.insert("1".to_string(), "9".to_string());
        let q = p.relabel(&map).unwrap();
        assert!(q.has_vertex("9"));
        assert!(!q.has_vertex("1"));
    }
}
