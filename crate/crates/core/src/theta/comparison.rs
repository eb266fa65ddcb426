use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use super::{PresentationMap, Theta2Presentation};
use crate::msset::{
    colimit, delta_map, enumerate_maps, product_map, standard_simplex, Colimit, Diagram, MSSetMap, MarkedSSet, Product,
    SimplexVariant,
};
use crate::nerves::{nerve_map, Marking, Nerve};
use crate::twocat::{count_two_functors, theta2_object, SearchLimits, Theta2Shape};
use crate::{Error, Result};

/// `L(W)`: the colimit of `N^RS θᵢ × Δ[ℓᵢ]♯` over the cells of `W`, together
/// with the pieces needed to map out of it.
#[derive(Debug, Clone)]
pub struct LImage {
    pub colimit: Colimit,
    /// `N^RS θᵢ × Δ[ℓᵢ]♯` for every cell `i`.
    pub products: Vec<Product>,
    nerves: Vec<Nerve>,
    simplices: Vec<MarkedSSet>,
    /// cell `i` uses `nerves[cell_nerve[i]]` and `simplices[cell_simplex[i]]`
    cell_nerve: Vec<usize>,
    cell_simplex: Vec<usize>,
}

impl LImage {
    pub fn set(&self) -> &MarkedSSet {
        &self.colimit.set
    }

    pub fn nerve(&self, cell: usize) -> &Nerve {
        &self.nerves[self.cell_nerve[cell]]
    }

    pub fn simplex(&self, cell: usize) -> &MarkedSSet {
        &self.simplices[self.cell_simplex[cell]]
    }

    /// The map `L(cell i) -> L(cell j)` of a cell map, before the colimit.
    fn cell_map(&self, i: usize, other: &LImage, j: usize, map: &super::CellMap) -> Result<MSSetMap> {
        let f = nerve_map(&map.functor, self.nerve(i), other.nerve(j))?;
        let g = delta_map(&map.monotone, self.simplex(i), other.simplex(j))?;
        Ok(product_map(&f, &g, &self.products[i], &other.products[j], &other.nerve(j).set, other.simplex(j)))
    }
}

/// Builds the products for every cell, sharing nerves between equal shapes.
fn cells(w: &Theta2Presentation, bound: usize) -> Result<LImage> {
    let mut nerves = Vec::new();
    let mut simplices = Vec::new();
    let mut by_shape: BTreeMap<&Theta2Shape, usize> = BTreeMap::new();
    let mut by_level: BTreeMap<usize, usize> = BTreeMap::new();
    let mut cell_nerve = Vec::new();
    let mut cell_simplex = Vec::new();
    let mut products = Vec::new();
    for c in &w.cells {
        let n = match by_shape.get(&c.shape) {
            Some(&n) => n,
            None => {
                // nerves are built at least up to dimension 3 and cut down by the product
                nerves.push(Nerve::new(&theta2_object(&c.shape)?, Marking::RobertsStreet, bound.max(3))?);
                by_shape.insert(&c.shape, nerves.len() - 1);
                nerves.len() - 1
            }
        };
        let s = match by_level.get(&c.level) {
            Some(&s) => s,
            None => {
                simplices.push(standard_simplex(c.level, SimplexVariant::Sharp, bound)?);
                by_level.insert(c.level, simplices.len() - 1);
                simplices.len() - 1
            }
        };
        products.push(Product::new(&nerves[n].set, &simplices[s]));
        cell_nerve.push(n);
        cell_simplex.push(s);
    }
    Ok(LImage {
        colimit: Colimit {
            set: MarkedSSet::new(bound),
            legs: Vec::new(),
            reps: Vec::new(),
        },
        products,
        nerves,
        simplices,
        cell_nerve,
        cell_simplex,
    })
}

/// The left Kan extension of `Θ₂[θ] ⊠ Δ[ℓ] ↦ N^RS θ × Δ[ℓ]♯` applied to a
/// presentation, truncated at `bound`.
pub fn apply_l(w: &Theta2Presentation, bound: usize) -> Result<LImage> {
    let report = super::validate_presentation(w);
    if !report.passed() {
        return Err(Error::invalid(format!("invalid presentation: {report}")));
    }
    let mut image = cells(w, bound)?;
    let mut diagram = Diagram::new();
    for p in &image.products {
        diagram.node(p.set.clone());
    }
    for a in &w.arrows {
        let map = image.cell_map(a.src, &image, a.tgt, &a.map)?;
        diagram.arrow(a.src, a.tgt, map);
    }
    image.colimit = colimit(&diagram)?;
    Ok(image)
}

/// `L(f)` together with its endpoints.
#[derive(Debug, Clone)]
pub struct LMap {
    pub source: LImage,
    pub target: LImage,
    pub map: MSSetMap,
}

/// The map of colimits induced by a presentation map. Fails when the legs
/// do not agree on the identifications made in the source.
pub fn apply_l_map(f: &PresentationMap, bound: usize) -> Result<LMap> {
    let source = apply_l(&f.source, bound)?;
    let target = apply_l(&f.target, bound)?;
    if f.legs.len() != f.source.cells.len() {
        return Err(Error::invalid("one leg per source cell is required"));
    }
    let composites = f
        .legs
        .iter()
        .enumerate()
        .map(|(i, (j, m))| Ok(source.cell_map(i, &target, *j, m)?.then(&target.colimit.legs[*j], target.set())))
        .collect::<Result<Vec<MSSetMap>>>()?;
    let map = MSSetMap {
        images: source
            .colimit
            .reps
            .iter()
            .map(|row| row.iter().map(|&(node, g)| composites[node].image(g).clone()).collect())
            .collect(),
    };
    for (i, composite) in composites.iter().enumerate() {
        if source.colimit.legs[i].then(&map, target.set()) != *composite {
            return Err(Error::invalid(format!("leg {i} is incompatible with the source colimit")));
        }
    }
    Ok(LMap { source, target, map })
}

/// `R(X)` at `(θ, [ℓ])`: all maps `N^RS θ × Δ[ℓ]♯ -> X`, with the product
/// truncated at the bound of `X`.
pub fn apply_r_at(x: &MarkedSSet, theta: &Theta2Shape, level: usize) -> Result<Vec<MSSetMap>> {
    let cell = apply_l(&Theta2Presentation::representable(theta.clone(), level), x.bound())?;
    enumerate_maps(&cell.products[0].set, x, SearchLimits::default())
}

/// `|Hom([i|j,…,j], θ)|` twice: by 2-functor enumeration, and as the fiber
/// product `Σ_{a₀≤…≤aᵢ} Π_t N_j Hom_θ(a_{t-1}, a_t)` over chains of objects.
pub fn d_restriction(theta: &Theta2Shape, i: usize, j: usize) -> Result<(u64, u64)> {
    let e = theta2_object(theta)?;
    let d = theta2_object(&Theta2Shape::diagonal(i, j))?;
    let enumerated = count_two_functors(&d, &e, SearchLimits::default())?;

    let n = e.objects().len();
    // b[a][c] = N_j of the hom category from a to c
    let b: Vec<Vec<u64>> = (0..n)
        .map(|a| (0..n).map(|c| e.hom(a, c).nerve_count(j)).collect())
        .collect();
    let mut paths = alloc::vec![1u64; n];
    for _ in 0..i {
        paths = (0..n)
            .map(|c| (0..n).map(|a| paths[a].saturating_mul(b[a][c])).fold(0u64, u64::saturating_add))
            .collect();
    }
    Ok((enumerated, paths.into_iter().fold(0, u64::saturating_add)))
}
