use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::word::{codegeneracy, coface, subsets, DegeneracyWord};
use crate::{Error, Report, Result};

/// Position of a generator: its dimension and its index within that
/// dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GenId {
    pub dim: usize,
    pub index: usize,
}

impl GenId {
    pub fn new(dim: usize, index: usize) -> Self {
        Self { dim, index }
    }
}

/// A simplex in Eilenberg–Zilber normal form: a degeneracy word applied to
/// a nondegenerate generator.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimplexRef {
    pub gen: GenId,
    pub word: DegeneracyWord,
}

impl SimplexRef {
    pub fn generator(gen: GenId) -> Self {
        Self {
            gen,
            word: DegeneracyWord::identity(),
        }
    }

    pub fn dim(&self) -> usize {
        self.gen.dim + self.word.len()
    }

    pub fn is_degenerate(&self) -> bool {
        !self.word.is_empty()
    }
}

/// A nondegenerate simplex with its faces. Vertices have no faces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub faces: Vec<SimplexRef>,
    pub marked: bool,
}

/// A marked simplicial set generated in dimensions `0..=bound`.
///
/// Only nondegenerate simplices are stored. Every degenerate simplex is
/// marked; among generators only those of positive dimension may be.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedSSet {
    bound: usize,
    gens: Vec<Vec<Generator>>,
}

impl MarkedSSet {
    pub fn new(bound: usize) -> Self {
        Self {
            bound,
            gens: vec![Vec::new(); bound + 1],
        }
    }

    /// Adds a generator after checking that its faces exist and have the
    /// right dimension. Simplicial identities are left to
    /// [`validate_msset`].
    pub fn add_generator(
        &mut self,
        name: impl Into<String>,
        dim: usize,
        faces: Vec<SimplexRef>,
        marked: bool,
    ) -> Result<GenId> {
        if dim > self.bound {
            return Err(Error::Bound {
                requested: dim,
                reason: "generator above the dimension bound",
            });
        }
        let expected = if dim == 0 { 0 } else { dim + 1 };
        if faces.len() != expected {
            return Err(Error::invalid(format!("a {dim}-generator needs {expected} faces")));
        }
        if dim == 0 && marked {
            return Err(Error::invalid("vertices cannot be marked"));
        }
        for f in &faces {
            if f.dim() + 1 != dim || !self.contains(f) {
                return Err(Error::invalid("face refers to an unknown or misdimensioned simplex"));
            }
        }
        self.gens[dim].push(Generator {
            name: name.into(),
            faces,
            marked,
        });
        Ok(GenId::new(dim, self.gens[dim].len() - 1))
    }

    pub(crate) fn from_parts(bound: usize, gens: Vec<Vec<Generator>>) -> Self {
        debug_assert_eq!(gens.len(), bound + 1);
        Self { bound, gens }
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    /// Generators of dimension `n`; empty above the bound.
    pub fn gens(&self, n: usize) -> &[Generator] {
        self.gens.get(n).map_or(&[], Vec::as_slice)
    }

    pub fn generator(&self, g: GenId) -> &Generator {
        &self.gens[g.dim][g.index]
    }

    pub fn set_marked(&mut self, g: GenId, marked: bool) {
        self.gens[g.dim][g.index].marked = marked && g.dim > 0;
    }

    pub fn gen_ids(&self, n: usize) -> impl Iterator<Item = GenId> {
        (0..self.gens(n).len()).map(move |i| GenId::new(n, i))
    }

    pub fn all_gen_ids(&self) -> impl Iterator<Item = GenId> + '_ {
        (0..=self.bound).flat_map(move |n| self.gen_ids(n))
    }

    /// Number of nondegenerate simplices per dimension.
    pub fn counts(&self) -> Vec<usize> {
        self.gens.iter().map(Vec::len).collect()
    }

    /// Number of marked nondegenerate simplices per dimension.
    pub fn marked_counts(&self) -> Vec<usize> {
        self.gens.iter().map(|g| g.iter().filter(|x| x.marked).count()).collect()
    }

    /// Largest dimension holding a generator.
    pub fn top_dim(&self) -> Option<usize> {
        (0..=self.bound).rev().find(|&n| !self.gens[n].is_empty())
    }

    pub fn is_empty(&self) -> bool {
        self.gens[0].is_empty()
    }

    pub fn contains(&self, s: &SimplexRef) -> bool {
        s.gen.dim <= self.bound
            && s.gen.index < self.gens[s.gen.dim].len()
            && s.word.indices().first().is_none_or(|&i| i < s.dim())
    }

    pub fn is_marked(&self, s: &SimplexRef) -> bool {
        s.is_degenerate() || self.generator(s.gen).marked
    }

    pub fn simplex_name(&self, s: &SimplexRef) -> String {
        let name = &self.generator(s.gen).name;
        if s.word.is_empty() {
            name.clone()
        } else {
            format!("{}({name})", s.word)
        }
    }

    /// The simplex `s · α` for a monotone `α : [m] -> [dim s]`.
    pub fn apply(&self, s: &SimplexRef, alpha: &[usize]) -> SimplexRef {
        let eta = s.word.surjection(s.dim());
        let mut beta: Vec<usize> = alpha.iter().map(|&i| eta[i]).collect();
        let mut gen = s.gen;
        let mut hit = Vec::new();
        loop {
            hit.clear();
            hit.resize(gen.dim + 1, false);
            for &b in &beta {
                hit[b] = true;
            }
            let Some(v) = hit.iter().rposition(|h| !h) else {
                return SimplexRef {
                    gen,
                    word: DegeneracyWord::from_surjection(&beta),
                };
            };
            // β misses v, so β factors through δᵛ and s·β = (d_v s)·β'
            let face = &self.gens[gen.dim][gen.index].faces[v];
            let face_eta = face.word.surjection(gen.dim - 1);
            for b in &mut beta {
                *b = face_eta[*b - usize::from(*b > v)];
            }
            gen = face.gen;
        }
    }

    /// `d_i s`.
    pub fn face(&self, s: &SimplexRef, i: usize) -> SimplexRef {
        if s.word.is_empty() {
            return self.generator(s.gen).faces[i].clone();
        }
        self.apply(s, &coface(s.dim(), i))
    }

    /// `s_j s`.
    pub fn degeneracy(&self, s: &SimplexRef, j: usize) -> SimplexRef {
        self.apply(s, &codegeneracy(s.dim(), j))
    }

    /// Degenerates `s` along a word (the word's surjection is applied last).
    pub fn degenerate(&self, s: &SimplexRef, word: &DegeneracyWord) -> SimplexRef {
        if word.is_empty() {
            return s.clone();
        }
        SimplexRef {
            gen: s.gen,
            word: word.after(&s.word, s.dim() + word.len()),
        }
    }

    /// Vertices of a simplex, as vertex generator indices.
    pub fn vertices(&self, s: &SimplexRef) -> Vec<usize> {
        (0..=s.dim()).map(|i| self.apply(s, &[i]).gen.index).collect()
    }

    /// Every simplex of dimension `n`, nondegenerate ones first.
    pub fn simplices(&self, n: usize) -> Vec<SimplexRef> {
        let mut out = Vec::new();
        for k in (0..=n.min(self.bound)).rev() {
            let words = subsets(n, n - k);
            for g in self.gen_ids(k) {
                for w in &words {
                    out.push(SimplexRef {
                        gen: g,
                        word: DegeneracyWord::from_positions(w.clone()),
                    });
                }
            }
        }
        out
    }

    /// The same generators restricted to dimensions `≤ bound`.
    pub fn truncate(&self, bound: usize) -> MarkedSSet {
        let mut gens = self.gens.clone();
        gens.resize(bound + 1, Vec::new());
        Self { bound, gens }
    }

    /// Copy with every positive-dimensional generator marked.
    pub fn sharp(&self) -> MarkedSSet {
        let mut out = self.clone();
        for n in 1..=self.bound {
            for g in &mut out.gens[n] {
                g.marked = true;
            }
        }
        out
    }

    /// Copy with no generator marked.
    pub fn flat(&self) -> MarkedSSet {
        let mut out = self.clone();
        for g in out.gens.iter_mut().flatten() {
            g.marked = false;
        }
        out
    }
}

/// All simplices up to some dimension with dense ids and a face index, used
/// to look simplices up by their boundary.
#[derive(Debug, Clone)]
pub struct SimplexTable {
    simplices: Vec<Vec<SimplexRef>>,
    ids: Vec<BTreeMap<SimplexRef, u32>>,
    by_faces: Vec<BTreeMap<Vec<u32>, Vec<u32>>>,
    marked: Vec<Vec<bool>>,
}

impl SimplexTable {
    pub fn new(x: &MarkedSSet, top: usize) -> Self {
        let mut t = Self {
            simplices: Vec::new(),
            ids: Vec::new(),
            by_faces: Vec::new(),
            marked: Vec::new(),
        };
        for n in 0..=top {
            let simplices = x.simplices(n);
            let ids: BTreeMap<SimplexRef, u32> =
                simplices.iter().enumerate().map(|(i, s)| (s.clone(), i as u32)).collect();
            let mut by_faces: BTreeMap<Vec<u32>, Vec<u32>> = BTreeMap::new();
            for (i, s) in simplices.iter().enumerate() {
                let key = if n == 0 {
                    Vec::new()
                } else {
                    (0..=n).map(|j| t.ids[n - 1][&x.face(s, j)]).collect()
                };
                by_faces.entry(key).or_default().push(i as u32);
            }
            t.marked.push(simplices.iter().map(|s| n > 0 && x.is_marked(s)).collect());
            t.simplices.push(simplices);
            t.ids.push(ids);
            t.by_faces.push(by_faces);
        }
        t
    }

    pub fn id(&self, s: &SimplexRef) -> Option<u32> {
        self.ids.get(s.dim())?.get(s).copied()
    }

    pub fn simplex(&self, n: usize, id: u32) -> &SimplexRef {
        &self.simplices[n][id as usize]
    }

    pub fn len(&self, n: usize) -> usize {
        self.simplices.get(n).map_or(0, Vec::len)
    }

    pub fn is_marked(&self, n: usize, id: u32) -> bool {
        self.marked[n][id as usize]
    }

    /// Simplices of dimension `faces.len() - 1` with exactly these faces
    /// (vertices when `faces` is empty).
    pub fn with_faces(&self, n: usize, faces: &[u32]) -> &[u32] {
        self.by_faces
            .get(n)
            .and_then(|m| m.get(faces))
            .map_or(&[], Vec::as_slice)
    }
}

/// Exhaustive structural check: face references, marking of vertices and
/// the simplicial identities `d_i d_j = d_{j-1} d_i` for `i < j`.
pub fn validate_msset(x: &MarkedSSet) -> Report {
    let mut report = Report::new();
    for n in 0..=x.bound {
        for g in &x.gens[n] {
            let expected = if n == 0 { 0 } else { n + 1 };
            if g.faces.len() != expected {
                report.push("face-count", g.name.clone());
                continue;
            }
            if n == 0 && g.marked {
                report.push("marked-vertex", g.name.clone());
            }
            if g.faces.iter().any(|f| f.dim() + 1 != n || f.gen.dim >= n || !x.contains(f)) {
                report.push("face-reference", g.name.clone());
            }
        }
    }
    if !report.passed() {
        return report;
    }
    for n in 2..=x.bound {
        for g in x.gen_ids(n) {
            let s = SimplexRef::generator(g);
            for j in 1..=n {
                let dj = x.face(&s, j);
                for i in 0..j {
                    if x.face(&dj, i) != x.face(&x.face(&s, i), j - 1) {
                        report.push(
                            "simplicial-identity",
                            format!("{} (i={i}, j={j})", x.generator(g).name),
                        );
                    }
                }
            }
        }
    }
    report
}
