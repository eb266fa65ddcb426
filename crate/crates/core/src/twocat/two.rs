use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::category::{check_unique, FinCategory, Morphism};
use super::table::Table2;
use crate::{Error, Result};

/// A 1-cell `src -> tgt` between objects.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Cell1 {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
}

/// A 2-cell `src => tgt` between parallel 1-cells.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Cell2 {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
}

/// Optional generating cells, used to keep functor enumeration small.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Generators {
    pub cells1: Vec<usize>,
    pub cells2: Vec<usize>,
}

/// A finite strict 2-category stored as flat cell lists plus composition
/// tables.
///
/// All compositions are diagrammatic: `hcomp1(f, g)` is `f` followed by `g`
/// (the composite usually written `g ∘ f`), `vcomp(a, b)` is `a` followed by
/// `b`, and `hcomp2(a, b)` is the horizontal composite with `a` on the
/// left. The hom-category `hom(x, y)` has the 1-cells `x -> y` as objects and
/// the 2-cells between them as morphisms.
#[derive(Debug, Clone)]
pub struct Fin2Category {
    objects: Vec<String>,
    cells1: Vec<Cell1>,
    cells2: Vec<Cell2>,
    id1: Vec<usize>,
    id2: Vec<usize>,
    hcomp1: Vec<(usize, usize, usize)>,
    vcomp: Vec<(usize, usize, usize)>,
    hcomp2: Vec<(usize, usize, usize)>,
    generators: Option<Generators>,
    hcomp1_tab: Table2,
    vcomp_tab: Table2,
    hcomp2_tab: Table2,
    cells1_between: Vec<Vec<usize>>,
    cells2_between: BTreeMap<(usize, usize), Vec<usize>>,
}

impl PartialEq for Fin2Category {
    fn eq(&self, other: &Self) -> bool {
        self.objects == other.objects
            && self.cells1 == other.cells1
            && self.cells2 == other.cells2
            && self.id1 == other.id1
            && self.id2 == other.id2
            && self.hcomp1 == other.hcomp1
            && self.vcomp == other.vcomp
            && self.hcomp2 == other.hcomp2
            && self.generators == other.generators
    }
}

impl Eq for Fin2Category {}

/// Raw tables of a [`Fin2Category`], used for construction and
/// serialization.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Fin2Tables {
    pub objects: Vec<String>,
    pub cells1: Vec<Cell1>,
    pub cells2: Vec<Cell2>,
    pub id1: Vec<usize>,
    pub id2: Vec<usize>,
    pub hcomp1: Vec<(usize, usize, usize)>,
    pub vcomp: Vec<(usize, usize, usize)>,
    pub hcomp2: Vec<(usize, usize, usize)>,
    pub generators: Option<Generators>,
}

/// Cap on the number of 2-cells, keeping the dense tables bounded.
pub const MAX_CELLS2: usize = 20_000;

impl Fin2Category {
    /// Checks referential integrity only; use [`validate_2cat`] for the laws.
    pub fn from_tables(t: Fin2Tables) -> Result<Self> {
        let (n0, n1, n2) = (t.objects.len(), t.cells1.len(), t.cells2.len());
        if n2 > MAX_CELLS2 || n1 > MAX_CELLS2 {
            return Err(Error::ResourceLimit(format!(
                "2-category with {n1} 1-cells and {n2} 2-cells exceeds the table cap"
            )));
        }
        if t.id1.len() != n0 || t.id2.len() != n1 {
            return Err(Error::invalid("identity tables have the wrong length"));
        }
        if t.cells1.iter().any(|c| c.src >= n0 || c.tgt >= n0) {
            return Err(Error::invalid("1-cell with dangling endpoint"));
        }
        if t.cells2.iter().any(|c| c.src >= n1 || c.tgt >= n1) {
            return Err(Error::invalid("2-cell with dangling boundary"));
        }
        if t.id1.iter().any(|&c| c >= n1) || t.id2.iter().any(|&c| c >= n2) {
            return Err(Error::invalid("identity refers to an unknown cell"));
        }
        for (tab, n, what) in [(&t.hcomp1, n1, "hcomp1"), (&t.vcomp, n2, "vcomp"), (&t.hcomp2, n2, "hcomp2")] {
            if tab.iter().any(|&(a, b, r)| a >= n || b >= n || r >= n) {
                return Err(Error::invalid(format!("{what} refers to an unknown cell")));
            }
        }
        if let Some(g) = &t.generators {
            if g.cells1.iter().any(|&c| c >= n1) || g.cells2.iter().any(|&c| c >= n2) {
                return Err(Error::invalid("generator refers to an unknown cell"));
            }
        }
        check_unique(t.objects.iter().map(String::as_str), "object")?;
        check_unique(t.cells1.iter().map(|c| c.name.as_str()), "1-cell")?;
        check_unique(t.cells2.iter().map(|c| c.name.as_str()), "2-cell")?;
        let mut hcomp1 = t.hcomp1;
        let mut vcomp = t.vcomp;
        let mut hcomp2 = t.hcomp2;
        for tab in [&mut hcomp1, &mut vcomp, &mut hcomp2] {
            tab.sort_unstable();
            if tab.windows(2).any(|w| (w[0].0, w[0].1) == (w[1].0, w[1].1)) {
                return Err(Error::invalid("composition table lists a pair twice"));
            }
        }
        let mut cells1_between = vec![Vec::new(); n0 * n0];
        for (i, c) in t.cells1.iter().enumerate() {
            cells1_between[c.src * n0 + c.tgt].push(i);
        }
        let mut cells2_between: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for (i, c) in t.cells2.iter().enumerate() {
            cells2_between.entry((c.src, c.tgt)).or_default().push(i);
        }
        Ok(Self {
            hcomp1_tab: Table2::from_triples(n1, &hcomp1),
            vcomp_tab: Table2::from_triples(n2, &vcomp),
            hcomp2_tab: Table2::from_triples(n2, &hcomp2),
            objects: t.objects,
            cells1: t.cells1,
            cells2: t.cells2,
            id1: t.id1,
            id2: t.id2,
            hcomp1,
            vcomp,
            hcomp2,
            generators: t.generators,
            cells1_between,
            cells2_between,
        })
    }

    pub fn to_tables(&self) -> Fin2Tables {
        Fin2Tables {
            objects: self.objects.clone(),
            cells1: self.cells1.clone(),
            cells2: self.cells2.clone(),
            id1: self.id1.clone(),
            id2: self.id2.clone(),
            hcomp1: self.hcomp1.clone(),
            vcomp: self.vcomp.clone(),
            hcomp2: self.hcomp2.clone(),
            generators: self.generators.clone(),
        }
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn cells1(&self) -> &[Cell1] {
        &self.cells1
    }

    pub fn cells2(&self) -> &[Cell2] {
        &self.cells2
    }

    pub fn generators(&self) -> Option<&Generators> {
        self.generators.as_ref()
    }

    pub fn with_generators(mut self, generators: Option<Generators>) -> Self {
        self.generators = generators;
        self
    }

    pub fn id1(&self, x: usize) -> usize {
        self.id1[x]
    }

    pub fn id2(&self, f: usize) -> usize {
        self.id2[f]
    }

    pub fn hcomp1(&self, f: usize, g: usize) -> Option<usize> {
        self.hcomp1_tab.get(f, g)
    }

    pub fn vcomp(&self, a: usize, b: usize) -> Option<usize> {
        self.vcomp_tab.get(a, b)
    }

    pub fn hcomp2(&self, a: usize, b: usize) -> Option<usize> {
        self.hcomp2_tab.get(a, b)
    }

    pub fn hcomp1_triples(&self) -> &[(usize, usize, usize)] {
        &self.hcomp1
    }

    pub fn vcomp_triples(&self) -> &[(usize, usize, usize)] {
        &self.vcomp
    }

    pub fn hcomp2_triples(&self) -> &[(usize, usize, usize)] {
        &self.hcomp2
    }

    pub fn identities1(&self) -> &[usize] {
        &self.id1
    }

    pub fn identities2(&self) -> &[usize] {
        &self.id2
    }

    /// 1-cells `x -> y`.
    pub fn cells1_between(&self, x: usize, y: usize) -> &[usize] {
        &self.cells1_between[x * self.objects.len() + y]
    }

    /// 2-cells `f => g`.
    pub fn cells2_between(&self, f: usize, g: usize) -> &[usize] {
        self.cells2_between.get(&(f, g)).map_or(&[], Vec::as_slice)
    }

    pub fn is_identity2(&self, a: usize) -> bool {
        self.id2[self.cells2[a].src] == a
    }

    /// Whether `a` is invertible for vertical composition.
    pub fn is_invertible2(&self, a: usize) -> bool {
        let c = &self.cells2[a];
        self.cells2_between(c.tgt, c.src).iter().any(|&b| {
            self.vcomp(a, b) == Some(self.id2[c.src]) && self.vcomp(b, a) == Some(self.id2[c.tgt])
        })
    }

    pub fn object_index(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn cell1_index(&self, name: &str) -> Option<usize> {
        self.cells1.iter().position(|c| c.name == name)
    }

    pub fn cell2_index(&self, name: &str) -> Option<usize> {
        self.cells2.iter().position(|c| c.name == name)
    }

    /// Source object of a 2-cell.
    pub fn cell2_src_object(&self, a: usize) -> usize {
        self.cells1[self.cells2[a].src].src
    }

    pub fn cell2_tgt_object(&self, a: usize) -> usize {
        self.cells1[self.cells2[a].src].tgt
    }

    /// The hom-category `hom(x, y)` as a standalone [`FinCategory`].
    pub fn hom(&self, x: usize, y: usize) -> FinCategory {
        let ones = self.cells1_between(x, y).to_vec();
        let local1 = |c: usize| ones.iter().position(|&o| o == c);
        let twos: Vec<usize> = (0..self.cells2.len())
            .filter(|&a| local1(self.cells2[a].src).is_some())
            .collect();
        let local2 = |a: usize| twos.iter().position(|&t| t == a).unwrap();
        let objects = ones.iter().map(|&c| self.cells1[c].name.clone()).collect();
        let morphisms = twos
            .iter()
            .map(|&a| Morphism {
                name: self.cells2[a].name.clone(),
                src: local1(self.cells2[a].src).unwrap(),
                tgt: local1(self.cells2[a].tgt).unwrap(),
            })
            .collect();
        let identity = ones.iter().map(|&c| local2(self.id2[c])).collect();
        let compose = self
            .vcomp
            .iter()
            .filter(|(a, b, r)| [a, b, r].iter().all(|c| twos.binary_search(c).is_ok()))
            .map(|&(a, b, r)| (local2(a), local2(b), local2(r)))
            .collect();
        FinCategory::new(objects, morphisms, identity, compose).expect("hom tables are consistent")
    }

    /// The disjoint union of all hom-categories.
    pub fn underlying_hom_union(&self) -> Vec<FinCategory> {
        let n = self.objects.len();
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                out.push(self.hom(x, y));
            }
        }
        out
    }

    /// A 1-category viewed as a locally discrete 2-category: 1-cells are its
    /// morphisms and every 2-cell is an identity.
    pub fn from_category(c: &FinCategory) -> Self {
        let mut b = Fin2Builder::new();
        for o in c.objects() {
            b.object(o.clone());
        }
        for m in c.morphisms() {
            b.cell1(m.name.clone(), m.src, m.tgt);
        }
        for (x, &i) in c.identities().iter().enumerate() {
            b.set_id1(x, i);
        }
        for &(f, g, r) in c.composition_triples() {
            b.set_hcomp1(f, g, r);
        }
        b.auto_identities2();
        b.fill_units();
        b.fill_identity_hcomp2();
        b.build().expect("locally discrete 2-category")
    }
}

/// Incremental construction of a [`Fin2Category`].
#[derive(Debug, Default, Clone)]
pub struct Fin2Builder {
    objects: Vec<String>,
    cells1: Vec<Cell1>,
    cells2: Vec<Cell2>,
    id1: Vec<Option<usize>>,
    id2: Vec<Option<usize>>,
    hcomp1: BTreeMap<(usize, usize), usize>,
    vcomp: BTreeMap<(usize, usize), usize>,
    hcomp2: BTreeMap<(usize, usize), usize>,
    generators: Option<Generators>,
}

impl Fin2Builder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn object(&mut self, name: impl Into<String>) -> usize {
        self.objects.push(name.into());
        self.id1.push(None);
        self.objects.len() - 1
    }

    pub fn cell1(&mut self, name: impl Into<String>, src: usize, tgt: usize) -> usize {
        self.cells1.push(Cell1 {
            name: name.into(),
            src,
            tgt,
        });
        self.id2.push(None);
        self.cells1.len() - 1
    }

    pub fn cell2(&mut self, name: impl Into<String>, src: usize, tgt: usize) -> usize {
        self.cells2.push(Cell2 {
            name: name.into(),
            src,
            tgt,
        });
        self.cells2.len() - 1
    }

    pub fn set_id1(&mut self, x: usize, f: usize) {
        self.id1[x] = Some(f);
    }

    pub fn set_id2(&mut self, f: usize, a: usize) {
        self.id2[f] = Some(a);
    }

    pub fn set_hcomp1(&mut self, f: usize, g: usize, r: usize) {
        self.hcomp1.insert((f, g), r);
    }

    pub fn set_vcomp(&mut self, a: usize, b: usize, r: usize) {
        self.vcomp.insert((a, b), r);
    }

    pub fn set_hcomp2(&mut self, a: usize, b: usize, r: usize) {
        self.hcomp2.insert((a, b), r);
    }

    pub fn generators(&mut self, g: Generators) {
        self.generators = Some(g);
    }

    /// Adds an identity 1-cell `id(x)` for every object that lacks one.
    pub fn auto_identities1(&mut self) {
        for x in 0..self.objects.len() {
            if self.id1[x].is_none() {
                let name = format!("id({})", self.objects[x]);
                let f = self.cell1(name, x, x);
                self.id1[x] = Some(f);
            }
        }
    }

    /// Adds an identity 2-cell `id(f)` for every 1-cell that lacks one.
    pub fn auto_identities2(&mut self) {
        for f in 0..self.cells1.len() {
            if self.id2[f].is_none() {
                let name = format!("id({})", self.cells1[f].name);
                let a = self.cell2(name, f, f);
                self.id2[f] = Some(a);
            }
        }
    }

    /// Fills in every composition with an identity cell.
    pub fn fill_units(&mut self) {
        for f in 0..self.cells1.len() {
            let c = self.cells1[f].clone();
            if let (Some(is), Some(it)) = (self.id1[c.src], self.id1[c.tgt]) {
                self.hcomp1.insert((is, f), f);
                self.hcomp1.insert((f, it), f);
            }
        }
        for a in 0..self.cells2.len() {
            let c = self.cells2[a].clone();
            if let (Some(is), Some(it)) = (self.id2[c.src], self.id2[c.tgt]) {
                self.vcomp.insert((is, a), a);
                self.vcomp.insert((a, it), a);
            }
            let (x, y) = (self.cells1[c.src].src, self.cells1[c.src].tgt);
            if let Some(ix) = self.id1[x].and_then(|i| self.id2[i]) {
                self.hcomp2.insert((ix, a), a);
            }
            if let Some(iy) = self.id1[y].and_then(|i| self.id2[i]) {
                self.hcomp2.insert((a, iy), a);
            }
        }
    }

    /// Sets `hcomp2(id f, id g) = id (hcomp1 f g)` wherever `hcomp1` is known.
    pub fn fill_identity_hcomp2(&mut self) {
        let entries: Vec<_> = self.hcomp1.iter().map(|(&k, &v)| (k, v)).collect();
        for ((f, g), r) in entries {
            if let (Some(a), Some(b), Some(c)) = (self.id2[f], self.id2[g], self.id2[r]) {
                self.hcomp2.insert((a, b), c);
            }
        }
    }

    pub fn build(self) -> Result<Fin2Category> {
        let id1 = self
            .id1
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::invalid("object without identity 1-cell"))?;
        let id2 = self
            .id2
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::invalid("1-cell without identity 2-cell"))?;
        let flat = |m: BTreeMap<(usize, usize), usize>| m.into_iter().map(|((a, b), r)| (a, b, r)).collect();
        Fin2Category::from_tables(Fin2Tables {
            objects: self.objects,
            cells1: self.cells1,
            cells2: self.cells2,
            id1,
            id2,
            hcomp1: flat(self.hcomp1),
            vcomp: flat(self.vcomp),
            hcomp2: flat(self.hcomp2),
            generators: self.generators,
        })
    }
}
