use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use super::maps::MSSetMap;
use super::sset::{GenId, Generator, MarkedSSet, SimplexRef};
use super::word::{subsets, DegeneracyWord};

/// The product `X × Y` together with the pair of simplices behind every
/// generator.
///
/// A nondegenerate `n`-simplex of the product is a pair of `n`-simplices
/// whose degeneracy words share no index. It is marked iff both components
/// are marked.
#[derive(Debug, Clone)]
pub struct Product {
    pub set: MarkedSSet,
    pairs: Vec<Vec<(SimplexRef, SimplexRef)>>,
    index: BTreeMap<(SimplexRef, SimplexRef), GenId>,
}

/// Writes `s` as `s_common(core)` and returns `core`, assuming every index
/// of `common` is a repeat of `s`.
fn strip(x: &MarkedSSet, s: &SimplexRef, common: &[usize]) -> SimplexRef {
    if common.is_empty() {
        return s.clone();
    }
    // a section of the surjection collapsing `common`
    let section: Vec<usize> = (0..=s.dim()).filter(|&j| j == 0 || !common.contains(&(j - 1))).collect();
    x.apply(s, &section)
}

impl Product {
    pub fn new(x: &MarkedSSet, y: &MarkedSSet) -> Self {
        let bound = x.bound().min(y.bound());
        let mut gens: Vec<Vec<Generator>> = Vec::with_capacity(bound + 1);
        let mut pairs: Vec<Vec<(SimplexRef, SimplexRef)>> = Vec::with_capacity(bound + 1);
        let mut index = BTreeMap::new();
        for n in 0..=bound {
            let mut row = Vec::new();
            let mut prow = Vec::new();
            for p in 0..=n {
                let words_x = subsets(n, n - p);
                for q in 0..=n {
                    if (n - p) + (n - q) > n {
                        continue;
                    }
                    let words_y = subsets(n, n - q);
                    for gx in x.gen_ids(p) {
                        for wx in &words_x {
                            for gy in y.gen_ids(q) {
                                for wy in &words_y {
                                    if wx.iter().any(|j| wy.contains(j)) {
                                        continue;
                                    }
                                    let a = SimplexRef {
                                        gen: gx,
                                        word: DegeneracyWord::from_positions(wx.clone()),
                                    };
                                    let b = SimplexRef {
                                        gen: gy,
                                        word: DegeneracyWord::from_positions(wy.clone()),
                                    };
                                    prow.push((a, b));
                                }
                            }
                        }
                    }
                }
            }
            prow.sort();
            for (i, (a, b)) in prow.iter().enumerate() {
                let id = GenId::new(n, i);
                let faces = if n == 0 {
                    Vec::new()
                } else {
                    (0..=n)
                        .map(|j| Self::normalize(x, y, &index, &x.face(a, j), &y.face(b, j)))
                        .collect()
                };
                row.push(Generator {
                    name: format!("({},{})", x.simplex_name(a), y.simplex_name(b)),
                    faces,
                    marked: n > 0 && x.is_marked(a) && y.is_marked(b),
                });
                index.insert((a.clone(), b.clone()), id);
            }
            gens.push(row);
            pairs.push(prow);
        }
        Self {
            set: MarkedSSet::from_parts(bound, gens),
            pairs,
            index,
        }
    }

    fn normalize(
        x: &MarkedSSet,
        y: &MarkedSSet,
        index: &BTreeMap<(SimplexRef, SimplexRef), GenId>,
        a: &SimplexRef,
        b: &SimplexRef,
    ) -> SimplexRef {
        let common: Vec<usize> = a.word.indices().iter().copied().filter(|&j| b.word.contains(j)).collect();
        let key = (strip(x, a, &common), strip(y, b, &common));
        SimplexRef {
            gen: index[&key],
            word: DegeneracyWord::from_positions(common),
        }
    }

    /// The simplex of the product with components `a` and `b`.
    pub fn pair(&self, x: &MarkedSSet, y: &MarkedSSet, a: &SimplexRef, b: &SimplexRef) -> SimplexRef {
        Self::normalize(x, y, &self.index, a, b)
    }

    /// Components of a generator.
    pub fn components(&self, g: GenId) -> &(SimplexRef, SimplexRef) {
        &self.pairs[g.dim][g.index]
    }

    pub fn pr1(&self) -> MSSetMap {
        MSSetMap {
            images: self.pairs.iter().map(|r| r.iter().map(|p| p.0.clone()).collect()).collect(),
        }
    }

    pub fn pr2(&self) -> MSSetMap {
        MSSetMap {
            images: self.pairs.iter().map(|r| r.iter().map(|p| p.1.clone()).collect()).collect(),
        }
    }
}

/// `X × Y` truncated at the smaller bound.
pub fn product(x: &MarkedSSet, y: &MarkedSSet) -> MarkedSSet {
    Product::new(x, y).set
}

/// `f × g : X × Y -> X' × Y'`.
pub fn product_map(
    f: &MSSetMap,
    g: &MSSetMap,
    src: &Product,
    tgt: &Product,
    x2: &MarkedSSet,
    y2: &MarkedSSet,
) -> MSSetMap {
    MSSetMap {
        images: src
            .pairs
            .iter()
            .map(|row| {
                row.iter()
                    .map(|(a, b)| tgt.pair(x2, y2, &f.apply(x2, a), &g.apply(y2, b)))
                    .collect()
            })
            .collect(),
    }
}
