use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use super::sset::{GenId, MarkedSSet, SimplexRef, SimplexTable};
use crate::twocat::SearchLimits;
use crate::{Error, Report, Result};

/// A map of marked simplicial sets, given by the image of every generator.
///
/// Maps do not own their endpoints; operations take source and target
/// explicitly.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MSSetMap {
    pub images: Vec<Vec<SimplexRef>>,
}

impl MSSetMap {
    pub fn identity(x: &MarkedSSet) -> Self {
        Self {
            images: (0..=x.bound())
                .map(|n| x.gen_ids(n).map(SimplexRef::generator).collect())
                .collect(),
        }
    }

    pub fn image(&self, g: GenId) -> &SimplexRef {
        &self.images[g.dim][g.index]
    }

    /// Image of an arbitrary simplex; `y` is the target.
    pub fn apply(&self, y: &MarkedSSet, s: &SimplexRef) -> SimplexRef {
        y.degenerate(self.image(s.gen), &s.word)
    }

    /// `self` followed by `g : Y -> Z`.
    pub fn then(&self, g: &MSSetMap, z: &MarkedSSet) -> MSSetMap {
        MSSetMap {
            images: self
                .images
                .iter()
                .map(|row| row.iter().map(|s| g.apply(z, s)).collect())
                .collect(),
        }
    }

    /// Restriction to the generators of dimension `≤ bound`.
    pub fn truncate(&self, bound: usize) -> MSSetMap {
        let mut images = self.images.clone();
        images.resize(bound + 1, Vec::new());
        MSSetMap { images }
    }
}

/// Checks that `f` is a marking-preserving simplicial map `x -> y`.
pub fn validate_map(f: &MSSetMap, x: &MarkedSSet, y: &MarkedSSet) -> Report {
    let mut report = Report::new();
    if f.images.len() < x.bound() + 1 || (0..=x.bound()).any(|n| f.images[n].len() != x.gens(n).len()) {
        report.push("map-arity", "image table does not match the source generators");
        return report;
    }
    for g in x.all_gen_ids() {
        let img = f.image(g);
        if img.dim() != g.dim || !y.contains(img) {
            report.push("map-dimension", x.generator(g).name.clone());
        }
    }
    if !report.passed() {
        return report;
    }
    for g in x.all_gen_ids() {
        let gen = x.generator(g);
        let img = f.image(g);
        for (i, face) in gen.faces.iter().enumerate() {
            if y.face(img, i) != f.apply(y, face) {
                report.push("map-face", format!("{} (i={i})", gen.name));
            }
        }
        if gen.marked && !y.is_marked(img) {
            report.push("map-marking", gen.name.clone());
        }
    }
    report
}

/// Injective on every simplex up to the bound. A map is injective exactly
/// when it sends generators injectively to generators.
pub fn is_mono(f: &MSSetMap, x: &MarkedSSet) -> bool {
    let mut seen = alloc::collections::BTreeSet::new();
    x.all_gen_ids().all(|g| {
        let img = f.image(g);
        !img.is_degenerate() && seen.insert(img.gen)
    })
}

/// Bijective on simplices up to the bound and reflecting markings.
pub fn is_iso(f: &MSSetMap, x: &MarkedSSet, y: &MarkedSSet) -> bool {
    let bound = x.bound().max(y.bound());
    is_mono(f, x)
        && (0..=bound).all(|n| x.gens(n).len() == y.gens(n).len())
        && x.all_gen_ids().all(|g| x.generator(g).marked == y.generator(f.image(g).gen).marked)
}

/// Inverse of an isomorphism.
pub fn inverse(f: &MSSetMap, x: &MarkedSSet, y: &MarkedSSet) -> MSSetMap {
    let mut images: Vec<Vec<SimplexRef>> = (0..=y.bound())
        .map(|n| vec![SimplexRef::generator(GenId::new(n, 0)); y.gens(n).len()])
        .collect();
    for g in x.all_gen_ids() {
        images[g.dim][f.image(g).gen.index] = SimplexRef::generator(g);
    }
    MSSetMap { images }
}

/// Joint color refinement of the generators of `x` and `y`. Colors depend
/// only on isomorphism-invariant data, so an isomorphism preserves them.
fn refine_colors(x: &MarkedSSet, y: &MarkedSSet) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let bound = x.bound().max(y.bound());
    let init = |s: &MarkedSSet| -> Vec<Vec<usize>> {
        (0..=bound)
            .map(|n| s.gens(n).iter().map(|g| usize::from(g.marked)).collect())
            .collect()
    };
    let (mut cx, mut cy) = (init(x), init(y));
    let mut classes = 0;
    loop {
        let mut palette: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        let sigs = |s: &MarkedSSet, c: &Vec<Vec<usize>>| -> Vec<Vec<Vec<usize>>> {
            let mut cofaces: Vec<Vec<Vec<usize>>> =
                (0..=bound).map(|n| vec![Vec::new(); s.gens(n).len()]).collect();
            for g in s.all_gen_ids() {
                for (i, f) in s.generator(g).faces.iter().enumerate() {
                    let mut tag = vec![c[g.dim][g.index], i];
                    tag.extend_from_slice(f.word.indices());
                    cofaces[f.gen.dim][f.gen.index].push(tag.len());
                    cofaces[f.gen.dim][f.gen.index].extend(tag);
                }
            }
            (0..=bound)
                .map(|n| {
                    s.gen_ids(n)
                        .map(|g| {
                            let mut sig = vec![n, c[n][g.index]];
                            for f in &s.generator(g).faces {
                                sig.push(c[f.gen.dim][f.gen.index]);
                                sig.push(f.word.len());
                                sig.extend_from_slice(f.word.indices());
                            }
                            // cofaces as a sorted multiset of length-prefixed tags
                            let raw = &cofaces[n][g.index];
                            let mut tags = Vec::new();
                            let mut i = 0;
                            while i < raw.len() {
                                tags.push(&raw[i + 1..i + 1 + raw[i]]);
                                i += 1 + raw[i];
                            }
                            tags.sort();
                            sig.push(usize::MAX);
                            for t in tags {
                                sig.push(t.len());
                                sig.extend_from_slice(t);
                            }
                            sig
                        })
                        .collect()
                })
                .collect()
        };
        let (sx, sy) = (sigs(x, &cx), sigs(y, &cy));
        for sig in sx.iter().chain(&sy).flatten() {
            let next = palette.len();
            palette.entry(sig.clone()).or_insert(next);
        }
        cx = sx.iter().map(|row| row.iter().map(|s| palette[s]).collect()).collect();
        cy = sy.iter().map(|row| row.iter().map(|s| palette[s]).collect()).collect();
        if palette.len() == classes {
            return (cx, cy);
        }
        classes = palette.len();
    }
}

/// An isomorphism `x -> y` of marked simplicial sets, if one exists.
pub fn find_iso(x: &MarkedSSet, y: &MarkedSSet) -> Option<MSSetMap> {
    let bound = x.bound().max(y.bound());
    if (0..=bound).any(|n| x.gens(n).len() != y.gens(n).len()) {
        return None;
    }
    let (cx, cy) = refine_colors(x, y);
    for n in 0..=bound {
        let (mut a, mut b) = (cx[n].clone(), cy[n].clone());
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return None;
        }
    }
    let order: Vec<GenId> = x.all_gen_ids().collect();
    let mut images: Vec<Vec<usize>> = (0..=bound).map(|n| vec![usize::MAX; x.gens(n).len()]).collect();
    let mut used: Vec<Vec<bool>> = (0..=bound).map(|n| vec![false; y.gens(n).len()]).collect();

    // explicit backtracking stack: next candidate to try for each placed generator
    let fits = |g: GenId, c: usize, images: &Vec<Vec<usize>>, used: &Vec<Vec<bool>>| {
        let gen = x.generator(g);
        let target = &y.gens(g.dim)[c];
        !used[g.dim][c]
            && cy[g.dim][c] == cx[g.dim][g.index]
            && gen.marked == target.marked
            && gen.faces.iter().zip(&target.faces).all(|(f, t)| {
                f.word == t.word && f.gen.dim == t.gen.dim && images[f.gen.dim][f.gen.index] == t.gen.index
            })
    };
    let mut next: Vec<usize> = vec![0; order.len() + 1];
    let mut k = 0;
    while k < order.len() {
        let g = order[k];
        let found = (next[k]..y.gens(g.dim).len()).find(|&c| fits(g, c, &images, &used));
        match found {
            Some(c) => {
                images[g.dim][g.index] = c;
                used[g.dim][c] = true;
                next[k] = c + 1;
                k += 1;
                next[k] = 0;
            }
            None => {
                if k == 0 {
                    return None;
                }
                k -= 1;
                let h = order[k];
                used[h.dim][images[h.dim][h.index]] = false;
                images[h.dim][h.index] = usize::MAX;
            }
        }
    }
    Some(MSSetMap {
        images: images
            .iter()
            .enumerate()
            .map(|(n, row)| row.iter().map(|&i| SimplexRef::generator(GenId::new(n, i))).collect())
            .collect(),
    })
}

/// Places each generator as soon as all of its faces are placed, highest
/// dimension first, and otherwise the next vertex. Boundary constraints then
/// bite as early as possible.
fn search_order(x: &MarkedSSet) -> Vec<GenId> {
    let all: Vec<GenId> = x.all_gen_ids().collect();
    let mut placed: Vec<Vec<bool>> = (0..=x.bound()).map(|n| vec![false; x.gens(n).len()]).collect();
    let mut order = Vec::with_capacity(all.len());
    let mut next_vertex = 0;
    while order.len() < all.len() {
        let ready = all.iter().rev().find(|g| {
            g.dim > 0
                && !placed[g.dim][g.index]
                && x.generator(**g).faces.iter().all(|f| placed[f.gen.dim][f.gen.index])
        });
        let g = match ready {
            Some(&g) => g,
            None => {
                next_vertex += 1;
                GenId::new(0, next_vertex - 1)
            }
        };
        placed[g.dim][g.index] = true;
        order.push(g);
    }
    order
}

/// Calls `visit` on each marking-preserving map `x -> y`, in search order.
pub fn visit_maps(
    x: &MarkedSSet,
    y: &MarkedSSet,
    limits: SearchLimits,
    mut visit: impl FnMut(&MSSetMap) -> ControlFlow<()>,
) -> Result<()> {
    let top = x.top_dim().unwrap_or(0);
    if top > y.bound() {
        return Err(Error::Bound {
            requested: top,
            reason: "source has generators above the target bound",
        });
    }
    let table = SimplexTable::new(y, top);
    let order = search_order(x);
    let mut ids: Vec<Vec<u32>> = (0..=x.bound()).map(|n| vec![0; x.gens(n).len()]).collect();
    let mut nodes = 0u64;

    // candidates of each placed generator, with the position tried next;
    // an explicit stack because the depth is the number of generators of x
    let mut stack: Vec<(Vec<u32>, usize)> = Vec::with_capacity(order.len());
    let candidates = |k: usize, ids: &Vec<Vec<u32>>| -> Vec<u32> {
        let g = order[k];
        let gen = x.generator(g);
        if g.dim == 0 {
            return (0..table.len(0) as u32).collect();
        }
        let key: Vec<u32> = gen
            .faces
            .iter()
            .map(|f| {
                let img = table.simplex(f.gen.dim, ids[f.gen.dim][f.gen.index]);
                table.id(&y.degenerate(img, &f.word)).expect("faces lie in the table")
            })
            .collect();
        table
            .with_faces(g.dim, &key)
            .iter()
            .copied()
            .filter(|&c| !gen.marked || table.is_marked(g.dim, c))
            .collect()
    };
    if order.is_empty() {
        let _ = visit(&MSSetMap {
            images: ids.iter().map(|_| Vec::new()).collect(),
        });
        return Ok(());
    }
    stack.push((candidates(0, &ids), 0));
    while !stack.is_empty() {
        let k = stack.len() - 1;
        let (cands, pos) = &mut stack[k];
        if *pos == cands.len() {
            stack.pop();
            continue;
        }
        let c = cands[*pos];
        *pos += 1;
        nodes += 1;
        if nodes > limits.max_nodes {
            return Err(Error::ResourceLimit(format!("map search exceeded {} nodes", limits.max_nodes)));
        }
        let g = order[k];
        ids[g.dim][g.index] = c;
        if k + 1 == order.len() {
            let map = MSSetMap {
                images: ids
                    .iter()
                    .enumerate()
                    .map(|(n, row)| row.iter().map(|&i| table.simplex(n, i).clone()).collect())
                    .collect(),
            };
            if visit(&map).is_break() {
                return Ok(());
            }
        } else {
            let next = candidates(k + 1, &ids);
            stack.push((next, 0));
        }
    }
    Ok(())
}

/// All marking-preserving maps `x -> y`, sorted.
pub fn enumerate_maps(x: &MarkedSSet, y: &MarkedSSet, limits: SearchLimits) -> Result<Vec<MSSetMap>> {
    let mut out = Vec::new();
    let mut overflow = false;
    visit_maps(x, y, limits, |m| {
        if out.len() == limits.max_results {
            overflow = true;
            return ControlFlow::Break(());
        }
        out.push(m.clone());
        ControlFlow::Continue(())
    })?;
    if overflow {
        return Err(Error::ResourceLimit(format!("more than {} maps", limits.max_results)));
    }
    out.sort_unstable();
    Ok(out)
}
