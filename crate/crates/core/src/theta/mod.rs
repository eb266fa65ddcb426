//! Finitely presented `Θ₂`-spaces: colimits of box cells `Θ₂[θ] ⊠ Δ[ℓ]`,
//! their pointwise evaluation, the elementary acyclic cofibrations, and the
//! comparison functor `L` with its pointwise right adjoint.

mod cofibrations;
mod comparison;
mod evaluate;

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

pub use cofibrations::{elementary_cofibration, functor_by_names, CofibrationKind};
pub use comparison::{apply_l, apply_l_map, apply_r_at, d_restriction, LImage, LMap};
pub use evaluate::{evaluate, Evaluation};

use crate::msset::is_monotone;
use crate::twocat::{theta2_object, validate_two_functor, Theta2Shape, TwoFunctor};
use crate::Report;

/// The box cell `Θ₂[θ] ⊠ Δ[ℓ]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BoxCell {
    pub shape: Theta2Shape,
    pub level: usize,
}

impl BoxCell {
    pub fn new(shape: Theta2Shape, level: usize) -> Self {
        Self { shape, level }
    }
}

/// A map of box cells: a 2-functor between the shapes and a monotone map
/// between the levels.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CellMap {
    pub functor: TwoFunctor,
    pub monotone: Vec<usize>,
}

/// An arrow `cells[src] -> cells[tgt]` of a presentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresentationArrow {
    pub src: usize,
    pub tgt: usize,
    pub map: CellMap,
}

/// A `Θ₂`-space given as the colimit of a finite diagram of box cells.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Theta2Presentation {
    pub cells: Vec<BoxCell>,
    pub arrows: Vec<PresentationArrow>,
}

impl Theta2Presentation {
    /// The representable `Θ₂[θ] ⊠ Δ[ℓ]`.
    pub fn representable(shape: Theta2Shape, level: usize) -> Self {
        Self {
            cells: alloc::vec![BoxCell::new(shape, level)],
            arrows: Vec::new(),
        }
    }

    pub fn cell(&mut self, c: BoxCell) -> usize {
        self.cells.push(c);
        self.cells.len() - 1
    }

    pub fn arrow(&mut self, src: usize, tgt: usize, map: CellMap) {
        self.arrows.push(PresentationArrow { src, tgt, map });
    }
}

/// Checks one cell map against its endpoint cells.
fn check_cell_map(report: &mut Report, what: &str, map: &CellMap, src: &BoxCell, tgt: &BoxCell) {
    match (theta2_object(&src.shape), theta2_object(&tgt.shape)) {
        (Ok(d), Ok(e)) => {
            let r = validate_two_functor(&map.functor, &d, &e);
            if !r.passed() {
                report.push("cell-functor", format!("{what}: {}", r.violations[0].law));
            }
        }
        _ => report.push("cell-shape", what.to_string()),
    }
    if map.monotone.len() != src.level + 1 || !is_monotone(&map.monotone, tgt.level) {
        report.push("cell-monotone", what.to_string());
    }
}

/// Checks every arrow of a presentation.
pub fn validate_presentation(w: &Theta2Presentation) -> Report {
    let mut report = Report::new();
    for (k, a) in w.arrows.iter().enumerate() {
        if a.src >= w.cells.len() || a.tgt >= w.cells.len() {
            report.push("arrow-endpoint", format!("arrow {k}"));
            continue;
        }
        check_cell_map(&mut report, &format!("arrow {k}"), &a.map, &w.cells[a.src], &w.cells[a.tgt]);
    }
    report
}

/// A map of presentations: every source cell goes to a target cell along a
/// cell map. Compatibility with the source arrows is checked in the target
/// colimit by [`validate_presentation_map`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresentationMap {
    pub source: Theta2Presentation,
    pub target: Theta2Presentation,
    pub legs: Vec<(usize, CellMap)>,
}

/// Checks both presentations, every leg, and that for every source arrow
/// `a : i -> i'` the composite `a ; leg(i')` and `leg(i)` name the same
/// element of the target evaluated at the cell `i`.
pub fn validate_presentation_map(f: &PresentationMap) -> crate::Result<Report> {
    let mut report = validate_presentation(&f.source);
    report.extend(validate_presentation(&f.target));
    if f.legs.len() != f.source.cells.len() {
        report.push("leg-count", format!("{} legs for {} cells", f.legs.len(), f.source.cells.len()));
    }
    for (i, (j, m)) in f.legs.iter().enumerate() {
        match (f.source.cells.get(i), f.target.cells.get(*j)) {
            (Some(s), Some(t)) => check_cell_map(&mut report, &format!("leg {i}"), m, s, t),
            _ => report.push("leg-endpoint", format!("leg {i}")),
        }
    }
    if !report.passed() {
        return Ok(report);
    }
    for (k, a) in f.source.arrows.iter().enumerate() {
        let cell = &f.source.cells[a.src];
        let eval = evaluate(&f.target, &cell.shape, cell.level)?;
        let (j1, m1) = &f.legs[a.src];
        let (j2, m2) = &f.legs[a.tgt];
        let direct = eval.class_of(*j1, m1);
        let via = eval.class_of(*j2, &compose_cell_maps(&a.map, m2));
        if direct.is_none() || direct != via {
            report.push("leg-compatibility", format!("source arrow {k}"));
        }
    }
    Ok(report)
}

/// `f` followed by `g`.
pub fn compose_cell_maps(f: &CellMap, g: &CellMap) -> CellMap {
    CellMap {
        functor: f.functor.then(&g.functor),
        monotone: f.monotone.iter().map(|&i| g.monotone[i]).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::msset::{find_iso, is_mono, standard_simplex, validate_map, MarkedSSet, SimplexVariant};
    use crate::nerves::rs_nerve;

    fn shape(ks: &[usize]) -> Theta2Shape {
        Theta2Shape::from_ks(ks.to_vec())
    }

    #[test]
    fn evaluation_of_representables() {
        let w = Theta2Presentation::representable(shape(&[1]), 0);
        assert_eq!(evaluate(&w, &shape(&[1]), 0).unwrap().len(), 5);
        let point = Theta2Presentation::representable(shape(&[]), 0);
        assert_eq!(evaluate(&point, &shape(&[0, 0]), 0).unwrap().len(), 1);
        // two levels: Hom([1],[2]) has six monotone maps
        let w = Theta2Presentation::representable(shape(&[]), 2);
        assert_eq!(evaluate(&w, &shape(&[]), 1).unwrap().len(), 6);
    }

    #[test]
    fn glued_copies_share_the_middle_edge() {
        let f = elementary_cofibration(&CofibrationKind::VerticalSegal(2)).unwrap();
        // three 1-cells per copy of [1|1], one of them shared
        assert_eq!(evaluate(&f.source, &shape(&[0]), 0).unwrap().len(), 5);
        assert_eq!(evaluate(&f.target, &shape(&[0]), 0).unwrap().len(), 5);
        assert_eq!(evaluate(&f.source, &shape(&[1]), 0).unwrap().len(), 7);
        assert_eq!(evaluate(&f.target, &shape(&[1]), 0).unwrap().len(), 8);
    }

    #[test]
    fn cofibrations_are_well_formed() {
        let kinds = [
            CofibrationKind::VerticalSegal(0),
            CofibrationKind::VerticalSegal(1),
            CofibrationKind::VerticalSegal(3),
            CofibrationKind::HorizontalSegal(alloc::vec![]),
            CofibrationKind::HorizontalSegal(alloc::vec![0, 1, 0]),
            CofibrationKind::HorizontalCompleteness,
            CofibrationKind::VerticalCompleteness,
        ];
        for k in &kinds {
            let f = elementary_cofibration(k).unwrap();
            assert!(validate_presentation_map(&f).unwrap().passed(), "{k:?}");
        }
        let one = elementary_cofibration(&CofibrationKind::VerticalSegal(1)).unwrap();
        assert_eq!(one.source, one.target);
    }

    #[test]
    fn l_of_a_representable_is_its_nerve() {
        let l = apply_l(&Theta2Presentation::representable(shape(&[1]), 0), 4).unwrap();
        let n = rs_nerve(&theta2_object(&shape(&[1])).unwrap(), 4).unwrap();
        assert!(find_iso(l.set(), &n).is_some());
    }

    #[test]
    fn l_of_vertical_segality_is_a_mono_into_the_nerve() {
        let f = elementary_cofibration(&CofibrationKind::VerticalSegal(2)).unwrap();
        let l = apply_l_map(&f, 4).unwrap();
        assert!(validate_map(&l.map, l.source.set(), l.target.set()).passed());
        assert!(is_mono(&l.map, l.source.set()));
        let n = rs_nerve(&theta2_object(&shape(&[2])).unwrap(), 4).unwrap();
        assert!(find_iso(l.target.set(), &n).is_some());
        assert!(find_iso(l.source.set(), &n).is_none());
    }

    #[test]
    fn pointwise_right_adjoint() {
        let point = standard_simplex(0, SimplexVariant::Flat, 4).unwrap();
        let edge = standard_simplex(1, SimplexVariant::Flat, 4).unwrap();
        assert_eq!(apply_r_at(&point, &shape(&[1, 2]), 1).unwrap().len(), 1);
        assert_eq!(apply_r_at(&edge, &shape(&[]), 0).unwrap().len(), 2);
        // a 2-cell must land in a marked triangle or collapse onto an edge
        assert_eq!(apply_r_at(&edge, &shape(&[0]), 0).unwrap().len(), 3);
        let empty = MarkedSSet::new(4);
        assert!(apply_r_at(&empty, &shape(&[]), 0).unwrap().is_empty());
    }

    #[test]
    fn diagonal_homs_by_two_routes() {
        assert_eq!(d_restriction(&shape(&[1]), 1, 1).unwrap(), (5, 5));
        assert_eq!(d_restriction(&shape(&[2, 1]), 0, 3).unwrap(), (3, 3));
        let (a, b) = d_restriction(&shape(&[0, 0]), 2, 0).unwrap();
        assert_eq!(a, b);
    }
}
