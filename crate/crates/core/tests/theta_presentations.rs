use theta2kit_core::msset::*;
use theta2kit_core::nerves::{nerve_map, Marking, Nerve};
use theta2kit_core::theta::*;
use theta2kit_core::twocat::*;

const BOUND: usize = 4;

fn shape(s: &str) -> Theta2Shape {
    s.parse().unwrap()
}

/// The same presentation with cell `c` doubled: a fresh copy of the cell
/// maps onto the original by the identity, and every arrow into `c` now
/// lands in the copy followed by that identity.
fn split(w: &Theta2Presentation, c: usize) -> Theta2Presentation {
    let mut out = w.clone();
    let copy = out.cell(w.cells[c].clone());
    let d = theta2_object(&w.cells[c].shape).unwrap();
    let identity = CellMap {
        functor: TwoFunctor::identity(&d),
        monotone: (0..=w.cells[c].level).collect(),
    };
    for a in &mut out.arrows {
        if a.tgt == c {
            a.tgt = copy;
        }
    }
    out.arrow(copy, c, identity);
    out
}

fn targets() -> Vec<Theta2Presentation> {
    [
        CofibrationKind::VerticalSegal(2),
        CofibrationKind::HorizontalSegal(vec![1, 0]),
        CofibrationKind::HorizontalCompleteness,
        CofibrationKind::VerticalCompleteness,
    ]
    .iter()
    .flat_map(|k| {
        let f = elementary_cofibration(k).unwrap();
        [f.source, f.target]
    })
    .chain([Theta2Presentation::representable(shape("[1|1]"), 1)])
    .collect()
}

#[test]
fn evaluation_is_stable_under_splitting_a_cell() {
    for w in targets() {
        for c in 0..w.cells.len() {
            let v = split(&w, c);
            assert!(validate_presentation(&v).passed());
            for theta in ["[0]", "[1|0]", "[1|1]", "[2|0,0]"] {
                for level in 0..=1 {
                    let a = evaluate(&w, &shape(theta), level).unwrap().len();
                    let b = evaluate(&v, &shape(theta), level).unwrap().len();
                    assert_eq!(a, b, "{theta} at level {level}");
                }
            }
        }
    }
}

#[test]
fn l_is_stable_under_splitting_a_cell() {
    for w in targets() {
        let v = split(&w, 0);
        let a = apply_l(&w, BOUND).unwrap();
        let b = apply_l(&v, BOUND).unwrap();
        assert!(find_iso(a.set(), b.set()).is_some());
    }
}

fn corpus() -> Vec<MarkedSSet> {
    let edge = standard_simplex(1, SimplexVariant::Flat, BOUND).unwrap();
    let point = standard_simplex(0, SimplexVariant::Flat, BOUND).unwrap();
    let triangle = standard_simplex(2, SimplexVariant::Sharp, BOUND).unwrap();
    // the edge with its endpoints identified
    let ends = discrete(2, BOUND);
    let loop_ = colimit(&Diagram::span(
        ends.clone(),
        point.clone(),
        edge.clone(),
        delta_map(&[0, 0], &ends, &point).unwrap(),
        delta_map(&[0, 1], &ends, &edge).unwrap(),
    ))
    .unwrap()
    .set;
    assert_eq!(loop_.counts()[..2], [1, 1]);
    vec![point, edge.clone(), edge.sharp(), triangle, loop_]
}

#[test]
fn right_adjoint_counts_match_maps_out_of_l() {
    for x in corpus() {
        for theta in ["[0]", "[1|0]", "[1|1]", "[2|0,1]"] {
            for level in 0..=1 {
                let r = apply_r_at(&x, &shape(theta), level).unwrap().len();
                // maps out of L of a split presentation of the same box cell
                let w = split(&Theta2Presentation::representable(shape(theta), level), 0);
                let l = apply_l(&w, x.bound()).unwrap();
                let maps = enumerate_maps(l.set(), &x, SearchLimits::default()).unwrap().len();
                assert_eq!(r, maps, "{theta} at level {level}");
            }
        }
    }
}

#[test]
fn maps_out_of_a_point_cell_are_the_vertices() {
    for x in corpus() {
        let r = apply_r_at(&x, &Theta2Shape::point(), 0).unwrap().len();
        assert_eq!(r, x.counts()[0]);
    }
}

/// `N^RS[3]` as `Δ[3]` with everything of dimension ≥ 2 marked.
fn rs_three() -> MarkedSSet {
    let mut x = standard_simplex(3, SimplexVariant::Flat, BOUND).unwrap();
    let ids: Vec<GenId> = x.all_gen_ids().filter(|g| g.dim >= 2).collect();
    for g in ids {
        x.set_marked(g, true);
    }
    x
}

fn double_pushout(end: MarkedSSet, glue: MarkedSSet, middle: MarkedSSet, to_end: &MSSetMap, left: MSSetMap, right: MSSetMap) -> MarkedSSet {
    let mut d = Diagram::new();
    let a = d.node(end.clone());
    let b1 = d.node(glue.clone());
    let c = d.node(middle);
    let b2 = d.node(glue);
    let e = d.node(end);
    d.arrow(b1, a, to_end.clone());
    d.arrow(b1, c, left);
    d.arrow(b2, c, right);
    d.arrow(b2, e, to_end.clone());
    colimit(&d).unwrap().set
}

#[test]
fn horizontal_completeness_lands_in_the_quotient_of_the_three_simplex() {
    let f = elementary_cofibration(&CofibrationKind::HorizontalCompleteness).unwrap();
    let l = apply_l_map(&f, BOUND).unwrap();
    assert!(is_mono(&l.map, l.source.set()));
    let point = standard_simplex(0, SimplexVariant::Flat, BOUND).unwrap();
    let edge = standard_simplex(1, SimplexVariant::Flat, BOUND).unwrap();
    let three = rs_three();
    let expected = double_pushout(
        point.clone(),
        edge.clone(),
        three.clone(),
        &delta_map(&[0, 0], &edge, &point).unwrap(),
        delta_map(&[0, 2], &edge, &three).unwrap(),
        delta_map(&[1, 3], &edge, &three).unwrap(),
    );
    assert_eq!(expected.counts(), vec![2, 4, 4, 1, 0]);
    assert!(find_iso(l.target.set(), &expected).is_some());
}

fn ordinal_functor(objects: &[usize], c: &FinCategory, d: &FinCategory) -> Functor {
    Functor {
        objects: objects.to_vec(),
        morphisms: c
            .morphisms()
            .iter()
            .map(|m| d.morphism_index(&format!("{}->{}", objects[m.src], objects[m.tgt])).unwrap())
            .collect(),
    }
}

#[test]
fn vertical_completeness_lands_in_the_suspended_quotient() {
    let f = elementary_cofibration(&CofibrationKind::VerticalCompleteness).unwrap();
    let l = apply_l_map(&f, BOUND).unwrap();
    assert!(is_mono(&l.map, l.source.set()));

    let ords: Vec<FinCategory> = [0, 1, 3].iter().map(|&k| ordinal(k).unwrap()).collect();
    let nerves: Vec<Nerve> = ords
        .iter()
        .map(|c| Nerve::new(&suspend_category(c), Marking::RobertsStreet, BOUND).unwrap())
        .collect();
    let sigma = |objects: &[usize], a: usize, b: usize| {
        let g = suspend_functor(&ordinal_functor(objects, &ords[a], &ords[b]));
        nerve_map(&g, &nerves[a], &nerves[b]).unwrap()
    };
    let expected = double_pushout(
        nerves[0].set.clone(),
        nerves[1].set.clone(),
        nerves[2].set.clone(),
        &sigma(&[0, 0], 1, 0),
        sigma(&[0, 2], 1, 2),
        sigma(&[1, 3], 1, 2),
    );
    assert!(find_iso(l.target.set(), &expected).is_some());
}
