use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::maps::{validate_map, MSSetMap};
use super::sset::{GenId, Generator, MarkedSSet, SimplexRef};
use crate::unionfind::UnionFind;
use crate::{Error, Result};

/// An arrow `nodes[src] -> nodes[tgt]` of a finite diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub src: usize,
    pub tgt: usize,
    pub map: MSSetMap,
}

/// A finite diagram of marked simplicial sets.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Diagram {
    pub nodes: Vec<MarkedSSet>,
    pub arrows: Vec<Arrow>,
}

impl Diagram {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn node(&mut self, x: MarkedSSet) -> usize {
        self.nodes.push(x);
        self.nodes.len() - 1
    }

    pub fn arrow(&mut self, src: usize, tgt: usize, map: MSSetMap) {
        self.arrows.push(Arrow { src, tgt, map });
    }

    /// The span `b <-f- a -g-> c`.
    pub fn span(a: MarkedSSet, b: MarkedSSet, c: MarkedSSet, f: MSSetMap, g: MSSetMap) -> Self {
        let mut d = Self::new();
        let (a, b, c) = (d.node(a), d.node(b), d.node(c));
        d.arrow(a, b, f);
        d.arrow(a, c, g);
        d
    }
}

/// A colimit with its cocone.
///
/// Generators are ordered by their first preimage (node order, then
/// dimension, then generator order), and `reps` records that preimage.
#[derive(Debug, Clone)]
pub struct Colimit {
    pub set: MarkedSSet,
    pub legs: Vec<MSSetMap>,
    pub reps: Vec<Vec<(usize, GenId)>>,
}

/// Computes the colimit dimensionwise as a quotient of the disjoint union of
/// all simplices, then re-detects degeneracies: a class is degenerate iff it
/// contains a degenerate simplex. A nondegenerate class is marked iff one of
/// its members is. Nodes are truncated to the smallest bound first.
pub fn colimit(diagram: &Diagram) -> Result<Colimit> {
    let bound = diagram.nodes.iter().map(MarkedSSet::bound).min().unwrap_or(0);
    let nodes: Vec<MarkedSSet> = diagram.nodes.iter().map(|x| x.truncate(bound)).collect();
    for (k, a) in diagram.arrows.iter().enumerate() {
        if a.src >= nodes.len() || a.tgt >= nodes.len() {
            return Err(Error::invalid(format!("arrow {k} has a dangling endpoint")));
        }
        let report = validate_map(&a.map.truncate(bound), &nodes[a.src], &nodes[a.tgt]);
        if !report.passed() {
            return Err(Error::invalid(format!("arrow {k} is not a map: {report}")));
        }
    }

    // global ids per dimension: node offsets into one flat range
    let mut simplices: Vec<Vec<Vec<SimplexRef>>> = Vec::new();
    let mut local: Vec<Vec<BTreeMap<SimplexRef, usize>>> = Vec::new();
    let mut offsets: Vec<Vec<usize>> = vec![Vec::new(); bound + 1];
    let mut totals = vec![0usize; bound + 1];
    for x in &nodes {
        let mut sx = Vec::new();
        let mut lx = Vec::new();
        for n in 0..=bound {
            let s = x.simplices(n);
            offsets[n].push(totals[n]);
            totals[n] += s.len();
            lx.push(s.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect());
            sx.push(s);
        }
        simplices.push(sx);
        local.push(lx);
    }
    let gid = |a: usize, s: &SimplexRef| offsets[s.dim()][a] + local[a][s.dim()][s];

    let mut uf: Vec<UnionFind> = totals.iter().map(|&t| UnionFind::new(t)).collect();
    for arrow in &diagram.arrows {
        let y = &nodes[arrow.tgt];
        for n in 0..=bound {
            for s in &simplices[arrow.src][n] {
                let img = arrow.map.apply(y, s);
                uf[n].union(gid(arrow.src, s), gid(arrow.tgt, &img));
            }
        }
    }

    let mut gens: Vec<Vec<Generator>> = Vec::with_capacity(bound + 1);
    let mut reps: Vec<Vec<(usize, GenId)>> = Vec::with_capacity(bound + 1);
    // normal form of each class, indexed by its root
    let mut nf: Vec<BTreeMap<usize, SimplexRef>> = Vec::with_capacity(bound + 1);
    for n in 0..=bound {
        let mut members: BTreeMap<usize, Vec<(usize, &SimplexRef)>> = BTreeMap::new();
        for (a, sx) in simplices.iter().enumerate() {
            for s in &sx[n] {
                let r = uf[n].find(gid(a, s));
                members.entry(r).or_default().push((a, s));
            }
        }
        // classes in order of their first member
        let mut order: Vec<(usize, usize)> = members
            .iter()
            .map(|(&r, m)| (gid(m[0].0, m[0].1), r))
            .collect();
        order.sort_unstable();
        let mut row = Vec::new();
        let mut rrow = Vec::new();
        let mut nrow = BTreeMap::new();
        for &(_, r) in &order {
            let m = &members[&r];
            if let Some(&(a, s)) = m.iter().find(|(_, s)| s.is_degenerate()) {
                let core = SimplexRef::generator(s.gen);
                let base = &nf[s.gen.dim][&uf[s.gen.dim].find(gid(a, &core))];
                nrow.insert(r, SimplexRef {
                    gen: base.gen,
                    word: s.word.after(&base.word, n),
                });
                continue;
            }
            let (a, s) = m[0];
            let x = &nodes[a];
            let gen = x.generator(s.gen);
            let faces = gen
                .faces
                .iter()
                .map(|f| nf[n - 1][&uf[n - 1].find(gid(a, f))].clone())
                .collect();
            let marked = m.iter().any(|&(b, t)| nodes[b].generator(t.gen).marked);
            let id = GenId::new(n, row.len());
            row.push(Generator {
                name: gen.name.clone(),
                faces,
                marked,
            });
            rrow.push((a, s.gen));
            nrow.insert(r, SimplexRef::generator(id));
        }
        gens.push(row);
        reps.push(rrow);
        nf.push(nrow);
    }

    let legs = nodes
        .iter()
        .enumerate()
        .map(|(a, x)| MSSetMap {
            images: (0..=bound)
                .map(|n| {
                    x.gen_ids(n)
                        .map(|g| {
                            let s = SimplexRef::generator(g);
                            nf[n][&uf[n].find(gid(a, &s))].clone()
                        })
                        .collect()
                })
                .collect(),
        })
        .collect();
    Ok(Colimit {
        set: MarkedSSet::from_parts(bound, gens),
        legs,
        reps,
    })
}
