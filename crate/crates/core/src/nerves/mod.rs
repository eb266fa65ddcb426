//! The Duskin nerve of a finite 2-category with its Roberts–Street and
//! scaled markings.

mod simplex;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

pub use simplex::NerveSimplex;
use simplex::relation_holds;

use crate::msset::{standard_simplex, visit_maps, DegeneracyWord, GenId, Generator, MSSetMap, MarkedSSet, SimplexRef, SimplexTable, SimplexVariant};
use crate::twocat::{validate_two_functor, Fin2Category, SearchLimits, TwoFunctor};
use crate::{Error, Report, Result};

/// Which simplices of the Duskin nerve are marked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Marking {
    /// No nondegenerate simplex marked.
    Duskin,
    /// Roberts–Street: no nondegenerate edge, a triangle iff its 2-cell is
    /// an identity, everything of dimension ≥ 3.
    RobertsStreet,
    /// Triangles whose 2-cell is invertible, nothing else.
    Scaled,
}

/// Cap on the number of simplices enumerated per nerve.
pub const MAX_NERVE_SIMPLICES: usize = 1_000_000;

/// A nerve together with the simplex data behind each generator.
#[derive(Debug, Clone)]
pub struct Nerve {
    pub set: MarkedSSet,
    category: Fin2Category,
    simplices: Vec<Vec<NerveSimplex>>,
    index: Vec<BTreeMap<NerveSimplex, usize>>,
}

struct Extender<'a> {
    d: &'a Fin2Category,
    prev: &'a NerveSimplex,
    n: usize,
    x: usize,
    f: Vec<usize>,
    t: Vec<usize>,
    pairs: Vec<(usize, usize)>,
}

impl Extender<'_> {
    fn edges(&mut self, i: usize, out: &mut Vec<NerveSimplex>) {
        if i == 0 {
            self.triangles(0, out);
            return;
        }
        let src = self.prev.objects[i - 1];
        for &c in self.d.cells1_between(src, self.x) {
            self.f[i - 1] = c;
            self.edges(i - 1, out);
        }
    }

    fn triangles(&mut self, p: usize, out: &mut Vec<NerveSimplex>) {
        let n = self.n;
        let Some(&(i, j)) = self.pairs.get(p) else {
            let (prev, f, t, x) = (self.prev, &self.f, &self.t, self.x);
            out.push(NerveSimplex::from_fn(
                n,
                |a| if a == n { x } else { prev.objects[a] },
                |a, b| if b == n { f[a] } else { prev.edge(a, b) },
                |a, b, c| if c == n { t[a * n + b] } else { prev.triangle(a, b, c) },
            ));
            return;
        };
        let Some(comp) = self.d.hcomp1(self.prev.edge(i, j), self.f[j]) else {
            return;
        };
        for &phi in self.d.cells2_between(self.f[i], comp) {
            self.t[i * n + j] = phi;
            // every quadruple (i, b, j, n) is now complete
            let ok = (i + 1..j).all(|b| {
                relation_holds(
                    self.d,
                    self.prev.edge(i, b),
                    self.f[j],
                    self.prev.triangle(i, b, j),
                    self.t[i * n + b],
                    self.t[i * n + j],
                    self.t[b * n + j],
                )
            });
            if ok {
                self.triangles(p + 1, out);
            }
        }
    }
}

fn extend(d: &Fin2Category, prev: &NerveSimplex, out: &mut Vec<NerveSimplex>) {
    let n = prev.dim() + 1;
    let mut pairs = Vec::new();
    for j in 0..n {
        for i in (0..j).rev() {
            pairs.push((i, j));
        }
    }
    let mut e = Extender {
        d,
        prev,
        n,
        x: 0,
        f: vec![0; n],
        t: vec![0; n * n],
        pairs,
    };
    for x in 0..d.objects().len() {
        e.x = x;
        e.edges(n, out);
    }
}

impl Nerve {
    /// Enumerates every simplex up to `bound` by adding one vertex at a time;
    /// above dimension 3 this is the coskeletal filling.
    pub fn new(d: &Fin2Category, marking: Marking, bound: usize) -> Result<Self> {
        if bound < 3 {
            return Err(Error::Bound {
                requested: bound,
                reason: "nerves are 3-coskeletal and need a bound of at least 3",
            });
        }
        let mut all: Vec<NerveSimplex> = (0..d.objects().len()).map(NerveSimplex::vertex).collect();
        let mut simplices = Vec::with_capacity(bound + 1);
        let mut index = Vec::with_capacity(bound + 1);
        let mut gens: Vec<Vec<Generator>> = Vec::with_capacity(bound + 1);
        let mut total = all.len();
        let mut previous = 0;
        for n in 0..=bound {
            if n > 0 {
                // simplex counts of a nerve grow at least geometrically, so the
                // last ratio projects a lower estimate for the next dimension
                let projected = all.len().saturating_mul(all.len()) / previous.max(1);
                if n > 1 && total.saturating_add(projected) > MAX_NERVE_SIMPLICES {
                    return Err(Error::ResourceLimit(format!(
                        "nerve would have about {projected} simplices in dimension {n}, over the limit of {MAX_NERVE_SIMPLICES}"
                    )));
                }
                previous = all.len();
                let mut next = Vec::new();
                for s in &all {
                    extend(d, s, &mut next);
                    if total + next.len() > MAX_NERVE_SIMPLICES {
                        return Err(Error::ResourceLimit(format!(
                            "nerve has more than {MAX_NERVE_SIMPLICES} simplices up to dimension {n}"
                        )));
                    }
                }
                total += next.len();
                all = next;
            }
            let nondeg: Vec<NerveSimplex> = all
                .iter()
                .filter(|s| (0..n).all(|j| !s.is_degenerate_at(j, d)))
                .cloned()
                .collect();
            let idx: BTreeMap<NerveSimplex, usize> =
                nondeg.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
            simplices.push(nondeg);
            index.push(idx);
            let mut row = Vec::new();
            for (i, s) in simplices[n].iter().enumerate() {
                let faces = if n == 0 {
                    Vec::new()
                } else {
                    (0..=n)
                        .map(|k| {
                            let alpha: Vec<usize> = (0..=n).filter(|&v| v != k).collect();
                            normalize_in(d, &index, &s.restrict(&alpha, d))
                        })
                        .collect()
                };
                let name = match n {
                    0 => d.objects()[s.objects[0]].clone(),
                    1 => d.cells1()[s.edges[0]].name.clone(),
                    _ => format!("d{n}.{i}"),
                };
                let marked = match (marking, n) {
                    (_, 0) | (Marking::Duskin, _) | (Marking::RobertsStreet, 1) | (Marking::Scaled, 1) => false,
                    (Marking::RobertsStreet, 2) => d.is_identity2(s.triangles[0]),
                    (Marking::Scaled, 2) => d.is_invertible2(s.triangles[0]),
                    (Marking::RobertsStreet, _) => true,
                    (Marking::Scaled, _) => false,
                };
                row.push(Generator { name, faces, marked });
            }
            gens.push(row);
        }
        Ok(Self {
            set: MarkedSSet::from_parts(bound, gens),
            category: d.clone(),
            simplices,
            index,
        })
    }

    pub fn category(&self) -> &Fin2Category {
        &self.category
    }

    /// The simplex data of a generator.
    pub fn simplex(&self, g: GenId) -> &NerveSimplex {
        &self.simplices[g.dim][g.index]
    }

    /// Normal form of any simplex of dimension `≤ bound`.
    pub fn normalize(&self, s: &NerveSimplex) -> Option<SimplexRef> {
        if s.dim() > self.set.bound() || !s.is_valid(&self.category) {
            return None;
        }
        Some(normalize_in(&self.category, &self.index, s))
    }
}

fn normalize_in(d: &Fin2Category, index: &[BTreeMap<NerveSimplex, usize>], s: &NerveSimplex) -> SimplexRef {
    let n = s.dim();
    let repeats: Vec<usize> = (0..n).filter(|&j| s.is_degenerate_at(j, d)).collect();
    let keep: Vec<usize> = (0..=n).filter(|&v| v == 0 || !repeats.contains(&(v - 1))).collect();
    let core = if repeats.is_empty() { s.clone() } else { s.restrict(&keep, d) };
    let k = core.dim();
    SimplexRef {
        gen: GenId::new(k, index[k][&core]),
        word: DegeneracyWord::from_positions(repeats),
    }
}

pub fn duskin_nerve(d: &Fin2Category, bound: usize) -> Result<MarkedSSet> {
    Ok(Nerve::new(d, Marking::Duskin, bound)?.set)
}

pub fn rs_nerve(d: &Fin2Category, bound: usize) -> Result<MarkedSSet> {
    Ok(Nerve::new(d, Marking::RobertsStreet, bound)?.set)
}

pub fn scaled_nerve(d: &Fin2Category, bound: usize) -> Result<MarkedSSet> {
    Ok(Nerve::new(d, Marking::Scaled, bound)?.set)
}

/// The map of nerves induced by a 2-functor `src.category() -> tgt.category()`.
pub fn nerve_map(f: &TwoFunctor, src: &Nerve, tgt: &Nerve) -> Result<MSSetMap> {
    let report = validate_two_functor(f, &src.category, &tgt.category);
    if !report.passed() {
        return Err(Error::invalid(format!("not a 2-functor: {report}")));
    }
    if src.set.bound() > tgt.set.bound() {
        return Err(Error::Bound {
            requested: src.set.bound(),
            reason: "source nerve exceeds the target bound",
        });
    }
    let images = src
        .simplices
        .iter()
        .map(|row| {
            row.iter()
                .map(|s| {
                    let image = NerveSimplex {
                        objects: s.objects.iter().map(|&x| f.objects[x]).collect(),
                        edges: s.edges.iter().map(|&c| f.cells1[c]).collect(),
                        triangles: s.triangles.iter().map(|&a| f.cells2[a]).collect(),
                    };
                    normalize_in(&tgt.category, &tgt.index, &image)
                })
                .collect()
        })
        .collect();
    Ok(MSSetMap { images })
}

/// Checks that every map `∂Δ[n] -> x` extends to exactly one `n`-simplex.
pub fn check_coskeletal(x: &MarkedSSet, n: usize, limits: SearchLimits) -> Result<Report> {
    if n == 0 || n > x.bound() {
        return Err(Error::Bound {
            requested: n,
            reason: "filler check needs 1 ≤ n ≤ bound",
        });
    }
    let boundary = standard_simplex(n, SimplexVariant::Boundary, n)?;
    let table = SimplexTable::new(x, n);
    let mut report = Report::new();
    let mut boundaries = 0usize;
    visit_maps(&boundary, x, limits, |m| {
        boundaries += 1;
        // the (n-1)-generators of ∂Δ[n] are listed lexicographically, so
        // the face opposite vertex j sits at index n - j
        let key: Vec<u32> = (0..=n)
            .map(|j| table.id(&m.images[n - 1][n - j]).expect("image in table"))
            .collect();
        let fillers = table.with_faces(n, &key).len();
        if fillers != 1 {
            report.push(
                if fillers == 0 { "filler-missing" } else { "filler-not-unique" },
                format!("boundary #{} in dimension {n}", boundaries - 1),
            );
        }
        ControlFlow::Continue(())
    })?;
    if boundaries != table.len(n) && report.passed() {
        report.push("filler-count", format!("{boundaries} boundaries vs {} simplices", table.len(n)));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::msset::{find_iso, validate_map, validate_msset};
    use crate::twocat::{cell, free_iso, ordinal, suspend_category, theta2_object, Theta2Shape};

    fn shape(s: &str) -> Fin2Category {
        theta2_object(&s.parse::<Theta2Shape>().unwrap()).unwrap()
    }

    #[test]
    fn free_two_cell() {
        let c2 = cell(2).unwrap();
        let n = rs_nerve(&c2, 4).unwrap();
        assert_eq!(&n.counts()[..3], &[2, 2, 2]);
        assert_eq!(n.marked_counts()[2], 0);
        assert!(validate_msset(&n).passed());
        let sc = scaled_nerve(&c2, 4).unwrap();
        assert_eq!(sc.marked_counts()[2], 0);
    }

    #[test]
    fn pasting_of_two_arrows_is_a_triangle() {
        let n = duskin_nerve(&shape("[2|0,0]"), 4).unwrap();
        let d = crate::msset::standard_simplex(2, SimplexVariant::Flat, 4).unwrap();
        assert!(find_iso(&n, &d).is_some());
    }

    #[test]
    fn low_bound_rejected() {
        assert!(matches!(rs_nerve(&cell(1).unwrap(), 2), Err(Error::Bound { .. })));
    }

    #[test]
    fn scaled_marks_isomorphisms() {
        let s = suspend_category(&free_iso());
        let n = Nerve::new(&s, Marking::Scaled, 3).unwrap();
        for g in n.set.gen_ids(2) {
            let phi = n.simplex(g).triangles[0];
            assert!(n.set.generator(g).marked);
            assert!(s.is_invertible2(phi));
        }
        let ord = Fin2Category::from_category(&ordinal(2).unwrap());
        assert!(scaled_nerve(&ord, 3).unwrap().gens(2).iter().all(|g| g.marked));
    }

    #[test]
    fn collapse_sends_triangles_to_degenerate_ones() {
        let src = Nerve::new(&cell(2).unwrap(), Marking::RobertsStreet, 4).unwrap();
        let tgt = Nerve::new(&cell(1).unwrap(), Marking::RobertsStreet, 4).unwrap();
        // the unique 2-functor fixing both objects
        let all = crate::twocat::enumerate_two_functors(src.category(), tgt.category(), SearchLimits::default()).unwrap();
        let f = all.iter().find(|f| f.objects == vec![0, 1]).unwrap();
        let m = nerve_map(f, &src, &tgt).unwrap();
        assert!(validate_map(&m, &src.set, &tgt.set).passed());
        assert!(m.images[2].iter().all(SimplexRef::is_degenerate));
    }

    #[test]
    fn coskeletal_in_dimension_four() {
        let n = rs_nerve(&shape("[1|1]"), 4).unwrap();
        assert!(check_coskeletal(&n, 4, SearchLimits::default()).unwrap().passed());
    }
}
