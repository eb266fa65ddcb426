use theta2kit_core::msset::{colimit, delta_map, find_iso, is_mono, standard_simplex, validate_map, Diagram, MSSetMap, MarkedSSet, SimplexVariant};
use theta2kit_core::nerves::{nerve_map, rs_nerve, Marking, Nerve};
use theta2kit_core::theta::{
    apply_l, apply_l_map, d_restriction, elementary_cofibration, validate_presentation_map, CofibrationKind,
    Theta2Presentation,
};
use theta2kit_core::twocat::{
    ordinal, suspend_category, suspend_functor, theta2_object, FinCategory, Functor, Theta2Shape,
};

use super::{Check, SuiteOptions};
use crate::Result;

/// Bound used for every comparison of marked simplicial sets here; nerves
/// are 3-coskeletal, so dimension 4 already sees all of their structure
/// plus one layer of fillers.
const BOUND: usize = 4;

/// For `i = 1` the count must be `N_j` of the disjoint union of the homs.
fn column_count(theta: &Theta2Shape, j: usize) -> Result<u64> {
    let d = theta2_object(theta)?;
    Ok(d.underlying_hom_union().iter().map(|h| h.nerve_count(j)).sum())
}

pub(super) fn hom_bijection(opts: &SuiteOptions) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for theta in Theta2Shape::grid(opts.max_m, opts.max_k) {
        let mut failures = Vec::new();
        for i in 0..=opts.max_i {
            for j in 0..=opts.max_j {
                let (enumerated, fibered) = d_restriction(&theta, i, j)?;
                if enumerated != fibered {
                    failures.push(format!("i={i} j={j}: enumeration {enumerated}, fiber product {fibered}"));
                }
                if i == 1 {
                    let column = column_count(&theta, j)?;
                    if enumerated != column {
                        failures.push(format!("i=1 j={j}: enumeration {enumerated}, N_j of homs {column}"));
                    }
                }
            }
        }
        checks.push(Check::new(format!("Hom(d[i,j], {theta})"), failures.is_empty(), || failures.join("; ")));
    }
    Ok(checks)
}

pub(super) fn l_representables(_: &SuiteOptions) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for theta in Theta2Shape::grid(2, 2) {
        let l = apply_l(&Theta2Presentation::representable(theta.clone(), 0), BOUND)?;
        let n = rs_nerve(&theta2_object(&theta)?, BOUND)?;
        let iso = find_iso(l.set(), &n);
        checks.push(Check::new(format!("L(Θ₂{theta}) ≅ N^RS{theta}"), iso.is_some(), || {
            format!("counts {:?} vs {:?}", l.set().counts(), n.counts())
        }));
    }
    Ok(checks)
}

/// The kinds covered by the cofibration suite.
pub fn cofibration_grid() -> Vec<CofibrationKind> {
    let mut kinds: Vec<CofibrationKind> = (0..=3).map(CofibrationKind::VerticalSegal).collect();
    for m in 0..=3usize {
        for bits in 0..(1u32 << m) {
            kinds.push(CofibrationKind::HorizontalSegal((0..m).map(|i| ((bits >> i) & 1) as usize).collect()));
        }
    }
    kinds.push(CofibrationKind::HorizontalCompleteness);
    kinds.push(CofibrationKind::VerticalCompleteness);
    kinds
}

fn functor_of(objects: &[usize], c: &FinCategory, d: &FinCategory) -> Functor {
    Functor {
        objects: objects.to_vec(),
        morphisms: c
            .morphisms()
            .iter()
            .map(|m| {
                d.morphism_index(&format!("{}->{}", objects[m.src], objects[m.tgt]))
                    .expect("monotone maps of ordinals")
            })
            .collect(),
    }
}

/// `end ⊔_glue middle ⊔_glue end` along `left` and `right`.
fn double_pushout(end: &MarkedSSet, glue: &MarkedSSet, middle: &MarkedSSet, collapse: &MSSetMap, left: MSSetMap, right: MSSetMap) -> Result<MarkedSSet> {
    let mut d = Diagram::new();
    let a = d.node(end.clone());
    let b1 = d.node(glue.clone());
    let c = d.node(middle.clone());
    let b2 = d.node(glue.clone());
    let e = d.node(end.clone());
    d.arrow(b1, a, collapse.clone());
    d.arrow(b1, c, left);
    d.arrow(b2, c, right);
    d.arrow(b2, e, collapse.clone());
    Ok(colimit(&d)?.set)
}

/// `Δ[0] ⊔_{Δ[1]} N^RS[3] ⊔_{Δ[1]} Δ[0]` along `02` and `13`, built from
/// standard simplices.
pub fn horizontal_quotient(bound: usize) -> Result<MarkedSSet> {
    let point = standard_simplex(0, SimplexVariant::Flat, bound)?;
    let edge = standard_simplex(1, SimplexVariant::Flat, bound)?;
    let mut three = standard_simplex(3, SimplexVariant::Flat, bound)?;
    let thin: Vec<_> = three.all_gen_ids().filter(|g| g.dim >= 2).collect();
    for g in thin {
        three.set_marked(g, true);
    }
    double_pushout(
        &point,
        &edge,
        &three,
        &delta_map(&[0, 0], &edge, &point)?,
        delta_map(&[0, 2], &edge, &three)?,
        delta_map(&[1, 3], &edge, &three)?,
    )
}

/// `N^RS Σ[0] ⊔_{N^RS Σ[1]} N^RS Σ[3] ⊔_{N^RS Σ[1]} N^RS Σ[0]`, with the
/// suspended 2-categories and functors built from ordinals.
pub fn vertical_quotient(bound: usize) -> Result<MarkedSSet> {
    let ords: Vec<FinCategory> = [0, 1, 3].iter().map(|&k| ordinal(k)).collect::<Result<_, _>>()?;
    let nerves: Vec<Nerve> = ords
        .iter()
        .map(|c| Nerve::new(&suspend_category(c), Marking::RobertsStreet, bound))
        .collect::<Result<_, _>>()?;
    let sigma = |objects: &[usize], a: usize, b: usize| {
        let g = suspend_functor(&functor_of(objects, &ords[a], &ords[b]));
        nerve_map(&g, &nerves[a], &nerves[b])
    };
    double_pushout(
        &nerves[0].set,
        &nerves[1].set,
        &nerves[2].set,
        &sigma(&[0, 0], 1, 0)?,
        sigma(&[0, 2], 1, 2)?,
        sigma(&[1, 3], 1, 2)?,
    )
}

fn expected_codomain(kind: &CofibrationKind) -> Result<MarkedSSet> {
    Ok(match kind {
        CofibrationKind::VerticalSegal(k) => rs_nerve(&theta2_object(&Theta2Shape::from_ks(vec![*k]))?, BOUND)?,
        CofibrationKind::HorizontalSegal(ks) => rs_nerve(&theta2_object(&Theta2Shape::from_ks(ks.clone()))?, BOUND)?,
        CofibrationKind::HorizontalCompleteness => horizontal_quotient(BOUND)?,
        CofibrationKind::VerticalCompleteness => vertical_quotient(BOUND)?,
    })
}

pub(super) fn cofibrations(_: &SuiteOptions) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for kind in cofibration_grid() {
        let f = elementary_cofibration(&kind)?;
        let report = validate_presentation_map(&f)?;
        checks.push(Check::new(format!("{kind:?} is a presentation map"), report.passed(), || report.to_string()));
        let l = apply_l_map(&f, BOUND)?;
        let valid = validate_map(&l.map, l.source.set(), l.target.set());
        let mono = valid.passed() && is_mono(&l.map, l.source.set());
        checks.push(Check::new(format!("L({kind:?}) is a monomorphism"), mono, || valid.to_string()));
        let expected = expected_codomain(&kind)?;
        let iso = find_iso(l.target.set(), &expected).is_some();
        checks.push(Check::new(format!("L({kind:?}) has the stated codomain"), iso, || {
            format!("counts {:?} vs {:?}", l.target.set().counts(), expected.counts())
        }));
    }
    Ok(checks)
}
