//! Marked suspension and the comparison map `ΣN^RS C -> N^RS ΣC`.
//!
//! `ΣX` is the join `X ⋆ Δ[0]` with `X` collapsed to a point. The collapsed
//! copy of `X` is the vertex `bot` (index 0) and the cone point is `top`
//! (index 1), which comes last in every simplex. An `(m-1)`-generator `σ`
//! of `X` gives the `m`-generator `Sσ` with vertices `bot, …, bot, top` and
//!
//! * for `m = 1`: `d₀ Sσ = top`, `d₁ Sσ = bot`;
//! * for `m ≥ 2`: `d_i Sσ = S(d_i σ)` for `i < m` (degeneracy words carry
//!   over unchanged) and `d_m Sσ = s₀^{m-1} bot`.
//!
//! `Sσ` is marked iff `σ` is.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::msset::{validate_map, DegeneracyWord, GenId, Generator, MSSetMap, MarkedSSet, SimplexRef};
use crate::nerves::{Marking, Nerve, NerveSimplex};
use crate::twocat::{
    suspend_category, suspend_functor, suspension_cell1, suspension_cell2, FinCategory, Fin2Category, Functor,
    SUSPENSION_BOT, SUSPENSION_TOP,
};
use crate::{Error, Result};

pub const BOT: GenId = GenId { dim: 0, index: 0 };
pub const TOP: GenId = GenId { dim: 0, index: 1 };

fn shift(s: &SimplexRef) -> SimplexRef {
    SimplexRef {
        gen: GenId::new(s.gen.dim + 1, s.gen.index),
        word: s.word.clone(),
    }
}

/// The `(m-1)`-fold degeneracy of `bot`.
fn bot_in(dim: usize) -> SimplexRef {
    SimplexRef {
        gen: BOT,
        word: DegeneracyWord::from_positions((0..dim).collect()),
    }
}

/// `ΣX` up to `bound`, which may exceed the bound of `X` by at most one.
pub fn suspend_marked(x: &MarkedSSet, bound: usize) -> Result<MarkedSSet> {
    if bound > x.bound() + 1 {
        return Err(Error::Bound {
            requested: bound,
            reason: "suspension can raise the bound by at most one",
        });
    }
    let mut gens: Vec<Vec<Generator>> = Vec::with_capacity(bound + 1);
    gens.push(vec![
        Generator {
            name: "bot".into(),
            faces: Vec::new(),
            marked: false,
        },
        Generator {
            name: "top".into(),
            faces: Vec::new(),
            marked: false,
        },
    ]);
    for m in 1..=bound {
        let row = x
            .gens(m - 1)
            .iter()
            .map(|g| {
                let faces = if m == 1 {
                    vec![SimplexRef::generator(TOP), SimplexRef::generator(BOT)]
                } else {
                    let mut f: Vec<SimplexRef> = g.faces.iter().map(shift).collect();
                    f.push(bot_in(m - 1));
                    f
                };
                Generator {
                    name: format!("S({})", g.name),
                    faces,
                    marked: g.marked,
                }
            })
            .collect();
        gens.push(row);
    }
    Ok(MarkedSSet::from_parts(bound, gens))
}

/// `Σf : ΣX -> ΣY` for a map `f : X -> Y`, fixing `bot` and `top`.
pub fn suspend_map(f: &MSSetMap, x: &MarkedSSet, y: &MarkedSSet, bound: usize) -> Result<MSSetMap> {
    let report = validate_map(f, x, y);
    if !report.passed() {
        return Err(Error::invalid(format!("not a map: {report}")));
    }
    if bound > x.bound() + 1 {
        return Err(Error::Bound {
            requested: bound,
            reason: "suspension can raise the bound by at most one",
        });
    }
    let mut images = vec![vec![SimplexRef::generator(BOT), SimplexRef::generator(TOP)]];
    for m in 1..=bound {
        images.push(f.images[m - 1].iter().map(shift).collect());
    }
    Ok(MSSetMap { images })
}

/// The comparison map with its endpoints.
#[derive(Debug, Clone)]
pub struct Comparison {
    /// `ΣN^RS C`.
    pub source: MarkedSSet,
    /// `N^RS ΣC`.
    pub target: Nerve,
    pub map: MSSetMap,
}

/// The canonical map `ΣN^RS C -> N^RS ΣC`.
///
/// The shifted `(m-1)`-simplex `c₀ -> ⋯ -> c_{m-1}` goes to the `m`-simplex
/// with vertices `bot, …, bot, top`, edges `f_im = c_i` and `f_ij = id(bot)`
/// for `j < m`, and 2-cells `φ_ijm = (c_i -> c_j)` and identities elsewhere.
/// Needs `bound ≥ 4` so that `N^RS C` exists at `bound - 1`.
pub fn suspension_comparison(c: &FinCategory, bound: usize) -> Result<Comparison> {
    if bound < 4 {
        return Err(Error::Bound {
            requested: bound,
            reason: "the comparison map needs a bound of at least 4",
        });
    }
    let base = Nerve::new(&Fin2Category::from_category(c), Marking::RobertsStreet, bound - 1)?;
    let source = suspend_marked(&base.set, bound)?;
    let target = Nerve::new(&suspend_category(c), Marking::RobertsStreet, bound)?;
    let mut images = vec![vec![
        SimplexRef::generator(GenId::new(0, SUSPENSION_BOT)),
        SimplexRef::generator(GenId::new(0, SUSPENSION_TOP)),
    ]];
    for m in 1..=bound {
        let row = base
            .set
            .gen_ids(m - 1)
            .map(|g| {
                let s = base.simplex(g);
                let image = NerveSimplex::from_fn(
                    m,
                    |i| if i == m { SUSPENSION_TOP } else { SUSPENSION_BOT },
                    |i, j| if j == m { suspension_cell1(s.objects[i]) } else { 0 },
                    |i, j, k| if k == m { suspension_cell2(s.edge(i, j)) } else { 0 },
                );
                target.normalize(&image).expect("comparison image is a simplex")
            })
            .collect();
        images.push(row);
    }
    Ok(Comparison {
        source,
        target,
        map: MSSetMap { images },
    })
}

/// Whether `ΣN(F) ; comparison(D) = comparison(C) ; N(ΣF)`.
pub fn comparison_natural(f: &Functor, c: &FinCategory, d: &FinCategory, bound: usize) -> Result<bool> {
    let cc = suspension_comparison(c, bound)?;
    let cd = suspension_comparison(d, bound)?;
    let nc = Nerve::new(&Fin2Category::from_category(c), Marking::RobertsStreet, bound - 1)?;
    let nd = Nerve::new(&Fin2Category::from_category(d), Marking::RobertsStreet, bound - 1)?;
    let nf = crate::nerves::nerve_map(&functor_as_two(f, d), &nc, &nd)?;
    let left = suspend_map(&nf, &nc.set, &nd.set, bound)?.then(&cd.map, &cd.target.set);
    let right = cc
        .map
        .then(&crate::nerves::nerve_map(&suspend_functor(f), &cc.target, &cd.target)?, &cd.target.set);
    Ok(left == right)
}

/// A functor of 1-categories as a 2-functor of the locally discrete
/// 2-categories.
pub fn functor_as_two(f: &Functor, d: &FinCategory) -> crate::twocat::TwoFunctor {
    let dd = Fin2Category::from_category(d);
    crate::twocat::TwoFunctor {
        objects: f.objects.clone(),
        cells1: f.morphisms.clone(),
        cells2: f.morphisms.iter().map(|&m| dd.id2(m)).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::msset::{discrete, find_iso, is_mono, standard_simplex, validate_msset, SimplexVariant::*};
    use crate::twocat::{free_iso, ordinal};

    #[test]
    fn small_suspensions() {
        let pt = standard_simplex(0, Flat, 3).unwrap();
        let s = suspend_marked(&pt, 4).unwrap();
        assert!(find_iso(&s, &standard_simplex(1, Flat, 4).unwrap()).is_some());

        let t = suspend_marked(&standard_simplex(1, EdgeMarked, 3).unwrap(), 4).unwrap();
        assert_eq!(t.counts(), vec![2, 2, 1, 0, 0]);
        assert_eq!(t.marked_counts(), vec![0, 0, 1, 0, 0]);
        assert!(validate_msset(&t).passed());

        let b = suspend_marked(&standard_simplex(1, Boundary, 3).unwrap(), 4).unwrap();
        assert_eq!(b.counts(), vec![2, 2, 0, 0, 0]);
        assert!(suspend_marked(&pt, 5).is_err());
    }

    #[test]
    fn suspension_satisfies_simplicial_identities() {
        for v in [Flat, Sharp, Boundary, Horn(1)] {
            let x = standard_simplex(3, v, 4).unwrap();
            assert!(validate_msset(&suspend_marked(&x, 5).unwrap()).passed());
        }
    }

    #[test]
    fn fold_collapses_edges() {
        let two = discrete(2, 3);
        let pt = standard_simplex(0, Flat, 3).unwrap();
        let fold = MSSetMap {
            images: vec![vec![SimplexRef::generator(GenId::new(0, 0)); 2], vec![], vec![], vec![]],
        };
        let sf = suspend_map(&fold, &two, &pt, 4).unwrap();
        assert_eq!(sf.images[1][0], sf.images[1][1]);
        let (s2, sp) = (suspend_marked(&two, 4).unwrap(), suspend_marked(&pt, 4).unwrap());
        assert!(validate_map(&sf, &s2, &sp).passed());
        assert!(!is_mono(&sf, &s2));
    }

    #[test]
    fn comparison_for_small_categories() {
        let c0 = suspension_comparison(&ordinal(0).unwrap(), 4).unwrap();
        assert!(crate::msset::is_iso(&c0.map, &c0.source, &c0.target.set));

        let c1 = suspension_comparison(&ordinal(1).unwrap(), 4).unwrap();
        assert!(validate_map(&c1.map, &c1.source, &c1.target.set).passed());
        let hit: Vec<_> = c1.map.images[2].iter().filter(|s| !s.is_degenerate()).collect();
        assert_eq!(hit.len(), 1);

        let ci = suspension_comparison(&free_iso(), 4).unwrap();
        assert!(validate_map(&ci.map, &ci.source, &ci.target.set).passed());
        assert!(suspension_comparison(&ordinal(1).unwrap(), 3).is_err());
    }

    #[test]
    fn comparison_is_natural_for_the_collapse() {
        let c = ordinal(1).unwrap();
        let d = ordinal(0).unwrap();
        let f = Functor {
            objects: vec![0, 0],
            morphisms: vec![0; c.morphisms().len()],
        };
        assert!(comparison_natural(&f, &c, &d, 4).unwrap());
    }
}
