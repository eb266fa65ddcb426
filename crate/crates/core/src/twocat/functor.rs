use alloc::format;
use alloc::vec::Vec;

use super::category::FinCategory;
use super::shapes::{suspension_cell1, suspension_cell2, SUSPENSION_BOT, SUSPENSION_TOP};
use super::two::Fin2Category;
use crate::Report;

/// A functor between finite 1-categories, stored as index tables.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Functor {
    pub objects: Vec<usize>,
    pub morphisms: Vec<usize>,
}

impl Functor {
    pub fn identity(c: &FinCategory) -> Self {
        Self {
            objects: (0..c.objects().len()).collect(),
            morphisms: (0..c.morphisms().len()).collect(),
        }
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Functor) -> Functor {
        Functor {
            objects: self.objects.iter().map(|&x| other.objects[x]).collect(),
            morphisms: self.morphisms.iter().map(|&f| other.morphisms[f]).collect(),
        }
    }
}

pub fn validate_functor(f: &Functor, c: &FinCategory, d: &FinCategory) -> Report {
    let mut report = Report::new();
    if f.objects.len() != c.objects().len()
        || f.morphisms.len() != c.morphisms().len()
        || f.objects.iter().any(|&x| x >= d.objects().len())
        || f.morphisms.iter().any(|&m| m >= d.morphisms().len())
    {
        report.push("functor-arity", "table lengths or ranges");
        return report;
    }
    for (i, m) in c.morphisms().iter().enumerate() {
        let fm = &d.morphisms()[f.morphisms[i]];
        if fm.src != f.objects[m.src] || fm.tgt != f.objects[m.tgt] {
            report.push("functor-endpoints", m.name.clone());
        }
    }
    for (x, &i) in c.identities().iter().enumerate() {
        if f.morphisms[i] != d.identity(f.objects[x]) {
            report.push("functor-identity", c.objects()[x].clone());
        }
    }
    for &(a, b, r) in c.composition_triples() {
        if d.compose(f.morphisms[a], f.morphisms[b]) != Some(f.morphisms[r]) {
            let names = (&c.morphisms()[a].name, &c.morphisms()[b].name);
            report.push("functor-composition", format!("{names:?}"));
        }
    }
    report
}

/// A strict 2-functor stored as index tables on objects, 1-cells and 2-cells.
///
/// The derived order is the canonical order used when listing functors.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TwoFunctor {
    pub objects: Vec<usize>,
    pub cells1: Vec<usize>,
    pub cells2: Vec<usize>,
}

impl TwoFunctor {
    pub fn identity(d: &Fin2Category) -> Self {
        Self {
            objects: (0..d.objects().len()).collect(),
            cells1: (0..d.cells1().len()).collect(),
            cells2: (0..d.cells2().len()).collect(),
        }
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &TwoFunctor) -> TwoFunctor {
        TwoFunctor {
            objects: self.objects.iter().map(|&x| other.objects[x]).collect(),
            cells1: self.cells1.iter().map(|&f| other.cells1[f]).collect(),
            cells2: self.cells2.iter().map(|&a| other.cells2[a]).collect(),
        }
    }

    /// Bijective on objects, 1-cells and 2-cells.
    pub fn is_bijective(&self, e: &Fin2Category) -> bool {
        fn bij(v: &[usize], n: usize) -> bool {
            let mut seen = alloc::vec![false; n];
            v.len() == n && v.iter().all(|&x| x < n && !core::mem::replace(&mut seen[x], true))
        }
        bij(&self.objects, e.objects().len())
            && bij(&self.cells1, e.cells1().len())
            && bij(&self.cells2, e.cells2().len())
    }

    /// Inverse of a bijective functor.
    pub fn inverse(&self) -> TwoFunctor {
        fn inv(v: &[usize]) -> Vec<usize> {
            let mut out = alloc::vec![0; v.len()];
            for (i, &x) in v.iter().enumerate() {
                out[x] = i;
            }
            out
        }
        TwoFunctor {
            objects: inv(&self.objects),
            cells1: inv(&self.cells1),
            cells2: inv(&self.cells2),
        }
    }
}

/// Checks that `f` is a strict 2-functor `d -> e`.
pub fn validate_two_functor(f: &TwoFunctor, d: &Fin2Category, e: &Fin2Category) -> Report {
    let mut report = Report::new();
    if f.objects.len() != d.objects().len()
        || f.cells1.len() != d.cells1().len()
        || f.cells2.len() != d.cells2().len()
        || f.objects.iter().any(|&x| x >= e.objects().len())
        || f.cells1.iter().any(|&x| x >= e.cells1().len())
        || f.cells2.iter().any(|&x| x >= e.cells2().len())
    {
        report.push("functor-arity", "table lengths or ranges");
        return report;
    }
    for (i, c) in d.cells1().iter().enumerate() {
        let fc = &e.cells1()[f.cells1[i]];
        if fc.src != f.objects[c.src] || fc.tgt != f.objects[c.tgt] {
            report.push("cell1-endpoints", c.name.clone());
        }
    }
    for (i, c) in d.cells2().iter().enumerate() {
        let fc = &e.cells2()[f.cells2[i]];
        if fc.src != f.cells1[c.src] || fc.tgt != f.cells1[c.tgt] {
            report.push("cell2-boundary", c.name.clone());
        }
    }
    for (x, &i) in d.identities1().iter().enumerate() {
        if f.cells1[i] != e.id1(f.objects[x]) {
            report.push("identity1", d.objects()[x].clone());
        }
    }
    for (g, &i) in d.identities2().iter().enumerate() {
        if f.cells2[i] != e.id2(f.cells1[g]) {
            report.push("identity2", d.cells1()[g].name.clone());
        }
    }
    for &(a, b, r) in d.hcomp1_triples() {
        if e.hcomp1(f.cells1[a], f.cells1[b]) != Some(f.cells1[r]) {
            report.push("hcomp1", format!("({}, {})", d.cells1()[a].name, d.cells1()[b].name));
        }
    }
    for (law, tab, get) in [
        ("vcomp", d.vcomp_triples(), Fin2Category::vcomp as fn(&Fin2Category, usize, usize) -> Option<usize>),
        ("hcomp2", d.hcomp2_triples(), Fin2Category::hcomp2),
    ] {
        for &(a, b, r) in tab {
            if get(e, f.cells2[a], f.cells2[b]) != Some(f.cells2[r]) {
                report.push(law, format!("({}, {})", d.cells2()[a].name, d.cells2()[b].name));
            }
        }
    }
    report
}

/// `ΣF : ΣC -> ΣD` for a functor `F : C -> D`.
pub fn suspend_functor(f: &Functor) -> TwoFunctor {
    let mut cells1 = alloc::vec![0, 1];
    cells1.extend(f.objects.iter().map(|&x| suspension_cell1(x)));
    let mut cells2 = alloc::vec![0, 1];
    cells2.extend(f.morphisms.iter().map(|&m| suspension_cell2(m)));
    TwoFunctor {
        objects: alloc::vec![SUSPENSION_BOT, SUSPENSION_TOP],
        cells1,
        cells2,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::twocat::{ordinal, suspend_category};

    #[test]
    fn suspended_functor_is_a_two_functor() {
        let c = ordinal(1).unwrap();
        let d = ordinal(2).unwrap();
        // the face [1] -> [2] skipping 1
        let o = |i, j| d.morphism_index(&alloc::format!("{i}->{j}")).unwrap();
        let f = Functor {
            objects: alloc::vec![0, 2],
            morphisms: c
                .morphisms()
                .iter()
                .map(|m| o([0, 2][m.src], [0, 2][m.tgt]))
                .collect(),
        };
        assert!(validate_functor(&f, &c, &d).passed());
        let sf = suspend_functor(&f);
        assert!(validate_two_functor(&sf, &suspend_category(&c), &suspend_category(&d)).passed());
        let mut broken = sf.clone();
        broken.cells2.swap(2, 3);
        assert!(!validate_two_functor(&broken, &suspend_category(&c), &suspend_category(&d)).passed());
    }
}
