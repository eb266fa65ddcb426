use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::maps::MSSetMap;
use super::sset::{GenId, MarkedSSet, SimplexRef};
use super::word::{epi_mono, is_monotone, subsets, DegeneracyWord};
use crate::{Error, Result};

/// Which subcomplex of `Δ[ℓ]` and which marking.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SimplexVariant {
    /// `Δ[ℓ]♭`: only degenerate simplices marked.
    Flat,
    /// `Δ[ℓ]♯`: every positive-dimensional simplex marked.
    Sharp,
    /// `∂Δ[ℓ]`, flat.
    Boundary,
    /// `Λᵏ[ℓ]`, flat: every face except the top one and the one opposite `k`.
    Horn(usize),
    /// `Δ[1]_t`: the nondegenerate edge marked.
    EdgeMarked,
    /// `Δ[3]_eq`: edges `02`, `13` and everything of dimension ≥ 2 marked.
    Eq3,
}

fn vertex_name(v: &[usize], ell: usize) -> String {
    if ell < 10 {
        v.iter().map(|i| i.to_string()).collect()
    } else {
        let parts: Vec<String> = v.iter().map(|i| i.to_string()).collect();
        parts.join(",")
    }
}

/// `Δ[ℓ]` or one of its named subcomplexes, generated up to `bound`.
/// Generators are the vertex subsets, in lexicographic order per dimension,
/// named by their vertices.
pub fn standard_simplex(ell: usize, variant: SimplexVariant, bound: usize) -> Result<MarkedSSet> {
    match variant {
        SimplexVariant::Horn(k) if k > ell => {
            return Err(Error::invalid(format!("horn Λ^{k}[{ell}] needs k ≤ ℓ")))
        }
        SimplexVariant::EdgeMarked if ell != 1 => {
            return Err(Error::invalid("the marked-edge variant exists only for ℓ = 1"))
        }
        SimplexVariant::Eq3 if ell != 3 => return Err(Error::invalid("the eq3 variant exists only for ℓ = 3")),
        _ => {}
    }
    let keep = |v: &[usize]| match variant {
        SimplexVariant::Boundary => v.len() <= ell,
        SimplexVariant::Horn(k) => v.len() <= ell && !(v.len() == ell && !v.contains(&k)),
        _ => true,
    };
    let marked = |v: &[usize]| match variant {
        SimplexVariant::Sharp => v.len() >= 2,
        SimplexVariant::EdgeMarked => v.len() == 2,
        SimplexVariant::Eq3 => v.len() >= 3 || v == [0, 2] || v == [1, 3],
        _ => false,
    };
    let mut x = MarkedSSet::new(bound);
    let mut index: BTreeMap<Vec<usize>, GenId> = BTreeMap::new();
    for d in 0..=ell.min(bound) {
        for v in subsets(ell + 1, d + 1) {
            if !keep(&v) {
                continue;
            }
            let faces = if d == 0 {
                Vec::new()
            } else {
                (0..=d)
                    .map(|i| {
                        let mut w = v.clone();
                        w.remove(i);
                        SimplexRef::generator(index[&w])
                    })
                    .collect()
            };
            let id = x.add_generator(vertex_name(&v, ell), d, faces, marked(&v))?;
            index.insert(v, id);
        }
    }
    Ok(x)
}

/// Vertex-set index of a subcomplex of a standard simplex.
fn vertex_index(x: &MarkedSSet) -> BTreeMap<Vec<usize>, GenId> {
    x.all_gen_ids()
        .map(|g| (x.vertices(&SimplexRef::generator(g)), g))
        .collect()
}

/// The simplex of a subcomplex of `Δ[n]` with the given monotone vertex
/// list, if present.
pub fn simplex_with_vertices(x: &MarkedSSet, vertices: &[usize]) -> Option<SimplexRef> {
    let (surj, image) = epi_mono(vertices);
    let gen = x
        .all_gen_ids()
        .find(|&g| x.vertices(&SimplexRef::generator(g)) == image)?;
    Some(SimplexRef {
        gen,
        word: DegeneracyWord::from_surjection(&surj),
    })
}

/// The map of subcomplexes of standard simplices induced by a monotone
/// `α : [m] -> [n]`.
pub fn delta_map(alpha: &[usize], src: &MarkedSSet, tgt: &MarkedSSet) -> Result<MSSetMap> {
    let n = tgt.gens(0).len().saturating_sub(1);
    if !is_monotone(alpha, n) || alpha.len() != src.gens(0).len() {
        return Err(Error::invalid("α is not a monotone map between the vertex sets"));
    }
    let index = vertex_index(tgt);
    let mut images = Vec::new();
    for d in 0..=src.bound() {
        let mut row = Vec::new();
        for g in src.gen_ids(d) {
            let v: Vec<usize> = src.vertices(&SimplexRef::generator(g)).iter().map(|&i| alpha[i]).collect();
            let (surj, image) = epi_mono(&v);
            let gen = *index
                .get(&image)
                .ok_or_else(|| Error::invalid("image simplex is missing from the target"))?;
            row.push(SimplexRef {
                gen,
                word: DegeneracyWord::from_surjection(&surj),
            });
        }
        images.push(row);
    }
    Ok(MSSetMap { images })
}

/// The map out of a subcomplex of `Δ[n]` classifying the `n`-simplex `s`
/// of `y`.
pub fn simplex_map(src: &MarkedSSet, y: &MarkedSSet, s: &SimplexRef) -> MSSetMap {
    MSSetMap {
        images: (0..=src.bound())
            .map(|d| {
                src.gen_ids(d)
                    .map(|g| y.apply(s, &src.vertices(&SimplexRef::generator(g))))
                    .collect()
            })
            .collect(),
    }
}

/// The discrete marked simplicial set on `n` points named `0..n`.
pub fn discrete(n: usize, bound: usize) -> MarkedSSet {
    let mut x = MarkedSSet::new(bound);
    for i in 0..n {
        x.add_generator(i.to_string(), 0, Vec::new(), false).expect("vertex");
    }
    x
}
