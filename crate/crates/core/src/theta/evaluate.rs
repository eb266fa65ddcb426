use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::{compose_cell_maps, CellMap, Theta2Presentation};
use crate::twocat::{enumerate_two_functors, theta2_object, SearchLimits, Theta2Shape};
use crate::unionfind::UnionFind;
use crate::Result;

/// The set `W_{θ,[ℓ]}` as classes of pairs `(node, cell map)`.
#[derive(Debug, Clone)]
pub struct Evaluation {
    index: BTreeMap<(usize, CellMap), usize>,
    class: Vec<usize>,
    classes: usize,
}

impl Evaluation {
    /// Number of elements.
    pub fn len(&self) -> usize {
        self.classes
    }

    pub fn is_empty(&self) -> bool {
        self.classes == 0
    }

    /// The class of the element `(node, map)`, numbered by first appearance.
    pub fn class_of(&self, node: usize, map: &CellMap) -> Option<usize> {
        self.index.get(&(node, map.clone())).map(|&i| self.class[i])
    }
}

/// Monotone maps `[m] -> [n]` in lexicographic order.
pub(crate) fn monotone_maps(m: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(m + 1);
    fn go(m: usize, n: usize, lo: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m + 1 {
            out.push(cur.clone());
            return;
        }
        for v in lo..=n {
            cur.push(v);
            go(m, n, v, cur, out);
            cur.pop();
        }
    }
    go(m, n, 0, &mut cur, &mut out);
    out
}

/// Evaluates a presentation at `(θ, [ℓ])`: the disjoint union of
/// `Hom(θ, θᵢ) × Hom([ℓ], [ℓᵢ])` over the cells, modulo the relation
/// generated by the arrows.
pub fn evaluate(w: &Theta2Presentation, theta: &Theta2Shape, level: usize) -> Result<Evaluation> {
    let source = theta2_object(theta)?;
    let mut elements: Vec<(usize, CellMap)> = Vec::new();
    for (i, c) in w.cells.iter().enumerate() {
        let functors = enumerate_two_functors(&source, &theta2_object(&c.shape)?, SearchLimits::default())?;
        let monos = monotone_maps(level, c.level);
        for f in &functors {
            for m in &monos {
                elements.push((
                    i,
                    CellMap {
                        functor: f.clone(),
                        monotone: m.clone(),
                    },
                ));
            }
        }
    }
    let index: BTreeMap<(usize, CellMap), usize> =
        elements.iter().cloned().enumerate().map(|(k, e)| (e, k)).collect();
    let mut uf = UnionFind::new(elements.len());
    for a in &w.arrows {
        for (k, (i, m)) in elements.iter().enumerate() {
            if *i == a.src {
                let image = compose_cell_maps(m, &a.map);
                let target = index
                    .get(&(a.tgt, image))
                    .ok_or_else(|| crate::Error::invalid("arrow does not map into its target cell"))?;
                uf.union(k, *target);
            }
        }
    }
    let mut class = Vec::with_capacity(elements.len());
    let mut numbering: BTreeMap<usize, usize> = BTreeMap::new();
    for k in 0..elements.len() {
        let r = uf.find(k);
        let next = numbering.len();
        class.push(*numbering.entry(r).or_insert(next));
    }
    Ok(Evaluation {
        index,
        class,
        classes: numbering.len(),
    })
}
