use theta2kit_core::msset::*;
use theta2kit_core::nerves::rs_nerve;
use theta2kit_core::suspension::*;
use theta2kit_core::twocat::*;

const BOUND: usize = 4;

fn corpus() -> Vec<(String, MarkedSSet)> {
    let mut out = Vec::new();
    for ell in 0..=3 {
        let mut variants = vec![SimplexVariant::Flat, SimplexVariant::Sharp, SimplexVariant::Boundary];
        variants.extend((0..=ell).map(SimplexVariant::Horn));
        if ell == 1 {
            variants.push(SimplexVariant::EdgeMarked);
        }
        if ell == 3 {
            variants.push(SimplexVariant::Eq3);
        }
        for v in variants {
            out.push((format!("Δ[{ell}] {v:?}"), standard_simplex(ell, v, BOUND).unwrap()));
        }
    }
    for k in 0..=3 {
        let d = Fin2Category::from_category(&ordinal(k).unwrap());
        out.push((format!("N[{k}]"), rs_nerve(&d, BOUND).unwrap()));
    }
    out
}

#[test]
fn suspension_shifts_generators_up_one_dimension() {
    for (name, x) in corpus() {
        let s = suspend_marked(&x, BOUND).unwrap();
        assert!(validate_msset(&s).passed(), "{name}");
        let (cx, cs) = (x.counts(), s.counts());
        let (mx, ms) = (x.marked_counts(), s.marked_counts());
        assert_eq!(cs[0], 2, "{name}");
        for m in 1..=BOUND {
            assert_eq!(cs[m], cx[m - 1], "{name} dim {m}");
            assert_eq!(ms[m], mx[m - 1], "{name} dim {m}");
        }
    }
}

fn suspend_diagram(d: &Diagram) -> Diagram {
    let mut out = Diagram::new();
    for x in &d.nodes {
        out.node(suspend_marked(x, BOUND).unwrap());
    }
    for a in &d.arrows {
        let map = suspend_map(&a.map, &d.nodes[a.src], &d.nodes[a.tgt], BOUND).unwrap();
        out.arrow(a.src, a.tgt, map);
    }
    out
}

fn samples() -> Vec<Diagram> {
    let point = standard_simplex(0, SimplexVariant::Flat, BOUND).unwrap();
    let edge = standard_simplex(1, SimplexVariant::Flat, BOUND).unwrap();
    let triangle = standard_simplex(2, SimplexVariant::Flat, BOUND).unwrap();
    let eq = standard_simplex(3, SimplexVariant::Sharp, BOUND).unwrap();
    let marked = standard_simplex(1, SimplexVariant::EdgeMarked, BOUND).unwrap();

    // two triangles sharing an edge
    let square = Diagram::span(
        edge.clone(),
        triangle.clone(),
        triangle.clone(),
        delta_map(&[1, 2], &edge, &triangle).unwrap(),
        delta_map(&[0, 1], &edge, &triangle).unwrap(),
    );
    // a triangle with an edge collapsed
    let long_edge = delta_map(&[0, 2], &edge, &triangle).unwrap();
    let collapse = Diagram::span(
        edge.clone(),
        point.clone(),
        triangle,
        delta_map(&[0, 0], &edge, &point).unwrap(),
        long_edge,
    );
    // marked edges glued into a sharp 3-simplex along 02 and 13
    let mut eq3 = Diagram::new();
    let a = eq3.node(edge.clone());
    let b = eq3.node(edge.clone());
    let t1 = eq3.node(marked.clone());
    let t2 = eq3.node(marked);
    let c = eq3.node(eq.clone());
    eq3.arrow(a, t1, MSSetMap::identity(&edge));
    eq3.arrow(b, t2, MSSetMap::identity(&edge));
    eq3.arrow(a, c, delta_map(&[0, 2], &edge, &eq).unwrap());
    eq3.arrow(b, c, delta_map(&[1, 3], &edge, &eq).unwrap());
    vec![square, collapse, eq3]
}

#[test]
fn suspension_commutes_with_connected_pushouts() {
    for (i, d) in samples().iter().enumerate() {
        let lhs = suspend_marked(&colimit(d).unwrap().set, BOUND).unwrap();
        let rhs = colimit(&suspend_diagram(d)).unwrap().set;
        assert!(find_iso(&lhs, &rhs).is_some(), "sample {i}");
    }
}

#[test]
fn suspension_of_a_coproduct_is_not_a_coproduct() {
    // Σ preserves connected colimits only: Σ(pt ⊔ pt) has two edges but
    // ΣΔ[0] ⊔ ΣΔ[0] has four vertices
    let two = discrete(2, BOUND);
    let s = suspend_marked(&two, BOUND).unwrap();
    assert_eq!(s.counts()[..2], [2, 2]);
    let point = suspend_marked(&discrete(1, BOUND), BOUND).unwrap();
    let mut d = Diagram::new();
    d.node(point.clone());
    d.node(point);
    assert_eq!(colimit(&d).unwrap().set.counts()[..2], [4, 2]);
}

fn monotone_maps(m: usize, n: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return (0..=n).map(|v| vec![v]).collect();
    }
    monotone_maps(m - 1, n)
        .into_iter()
        .flat_map(|a| {
            let last = *a.last().unwrap();
            (last..=n).map(move |v| {
                let mut b = a.clone();
                b.push(v);
                b
            })
        })
        .collect()
}

fn functor(objects: &[usize], c: &FinCategory, d: &FinCategory) -> Functor {
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
fn comparison_is_injective_in_low_dimensions() {
    let mut cats: Vec<FinCategory> = (0..=3).map(|k| ordinal(k).unwrap()).collect();
    cats.push(free_iso());
    for c in &cats {
        let cmp = suspension_comparison(c, BOUND).unwrap();
        assert!(validate_map(&cmp.map, &cmp.source, &cmp.target.set).passed());
        for n in 0..=2 {
            let images: Vec<&SimplexRef> = cmp.source.gen_ids(n).map(|g| cmp.map.image(g)).collect();
            assert!(images.iter().all(|s| !s.is_degenerate()), "dim {n}");
            let mut seen: Vec<&GenId> = images.iter().map(|s| &s.gen).collect();
            seen.sort();
            seen.dedup();
            assert_eq!(seen.len(), images.len(), "dim {n}");
        }
    }
}

#[test]
fn comparison_is_natural_on_small_ordinals() {
    for m in 0..=2usize {
        for n in 0..=2usize {
            let (c, d) = (ordinal(m as isize).unwrap(), ordinal(n as isize).unwrap());
            for objects in monotone_maps(m, n) {
                let f = functor(&objects, &c, &d);
                assert!(validate_functor(&f, &c, &d).passed());
                assert!(comparison_natural(&f, &c, &d, BOUND).unwrap(), "{objects:?}");
            }
        }
    }
}
