use std::collections::BTreeMap;

use theta2kit_core::msset::{
    colimit, delta_map, find_iso, simplex_map, simplex_with_vertices, standard_simplex, validate_map, validate_msset,
    DegeneracyWord, Diagram, GenId, MarkedSSet, SimplexRef, SimplexVariant,
};
use theta2kit_core::nerves::{check_coskeletal, duskin_nerve, rs_nerve};
use theta2kit_core::suspension::{comparison_natural, suspend_map, suspend_marked, suspension_comparison};
use theta2kit_core::twocat::{
    cell, free_iso, ordinal, theta2_object, Fin2Category, FinCategory, Functor, SearchLimits, Theta2Shape,
};

use super::{Check, SuiteOptions};
use crate::Result;

const BOUND: usize = 4;

pub(super) fn eq3_pushout(_: &SuiteOptions) -> Result<Vec<Check>> {
    let nerve = rs_nerve(&Fin2Category::from_category(&ordinal(3)?), BOUND)?;
    let edge = standard_simplex(1, SimplexVariant::Flat, BOUND)?;
    let thin = standard_simplex(1, SimplexVariant::EdgeMarked, BOUND)?;
    let along = |v: [usize; 2]| {
        let s = simplex_with_vertices(&nerve, &v).expect("edges of N[3] are determined by their vertices");
        simplex_map(&edge, &nerve, &s)
    };
    let mut d = Diagram::new();
    let a = d.node(edge.clone());
    let b = d.node(edge.clone());
    let t1 = d.node(thin.clone());
    let t2 = d.node(thin);
    let n = d.node(nerve.clone());
    let id = theta2kit_core::msset::MSSetMap::identity(&edge);
    d.arrow(a, t1, id.clone());
    d.arrow(b, t2, id);
    d.arrow(a, n, along([0, 2]));
    d.arrow(b, n, along([1, 3]));
    let c = colimit(&d)?.set;
    let eq = standard_simplex(3, SimplexVariant::Eq3, BOUND)?;

    let mut checks = vec![
        Check::new("colimit has counts (4, 6, 4, 1)", c.counts()[..4] == [4, 6, 4, 1], || format!("{:?}", c.counts())),
        Check::new("colimit has marked counts (0, 2, 4, 1)", c.marked_counts()[..4] == [0, 2, 4, 1], || {
            format!("{:?}", c.marked_counts())
        }),
    ];
    match find_iso(&c, &eq) {
        Some(iso) => {
            let pairs: Vec<String> = c
                .all_gen_ids()
                .filter(|g| g.dim <= 1)
                .map(|g| format!("{}↦{}", c.generator(g).name, eq.simplex_name(iso.image(g))))
                .collect();
            checks.push(Check::with_evidence("colimit ≅ Δ[3]_eq", pairs.join(" ")));
        }
        None => checks.push(Check::new("colimit ≅ Δ[3]_eq", false, || "no isomorphism".into())),
    }
    Ok(checks)
}

fn suspension_corpus() -> Result<Vec<(String, MarkedSSet)>> {
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
            out.push((format!("Δ[{ell}] {v:?}"), standard_simplex(ell, v, BOUND)?));
        }
    }
    for k in 0..=3 {
        out.push((format!("N^RS[{k}]"), rs_nerve(&Fin2Category::from_category(&ordinal(k)?), BOUND)?));
    }
    Ok(out)
}

fn pushout_samples() -> Result<Vec<(&'static str, Diagram)>> {
    let point = standard_simplex(0, SimplexVariant::Flat, BOUND)?;
    let edge = standard_simplex(1, SimplexVariant::Flat, BOUND)?;
    let triangle = standard_simplex(2, SimplexVariant::Flat, BOUND)?;
    let mut three = standard_simplex(3, SimplexVariant::Flat, BOUND)?;
    let thin: Vec<GenId> = three.all_gen_ids().filter(|g| g.dim >= 2).collect();
    for g in thin {
        three.set_marked(g, true);
    }

    let square = Diagram::span(
        edge.clone(),
        triangle.clone(),
        triangle.clone(),
        delta_map(&[1, 2], &edge, &triangle)?,
        delta_map(&[0, 1], &edge, &triangle)?,
    );
    let collapse = Diagram::span(
        edge.clone(),
        point.clone(),
        triangle.clone(),
        delta_map(&[0, 0], &edge, &point)?,
        delta_map(&[0, 2], &edge, &triangle)?,
    );
    let mut quotient = Diagram::new();
    let a = quotient.node(point.clone());
    let b1 = quotient.node(edge.clone());
    let c = quotient.node(three.clone());
    let b2 = quotient.node(edge.clone());
    let e = quotient.node(point.clone());
    let to_point = delta_map(&[0, 0], &edge, &point)?;
    quotient.arrow(b1, a, to_point.clone());
    quotient.arrow(b1, c, delta_map(&[0, 2], &edge, &three)?);
    quotient.arrow(b2, c, delta_map(&[1, 3], &edge, &three)?);
    quotient.arrow(b2, e, to_point);
    Ok(vec![
        ("two triangles along an edge", square),
        ("triangle with its long edge collapsed", collapse),
        ("Δ[0] ⊔ N^RS[3] ⊔ Δ[0] along 02 and 13", quotient),
    ])
}

pub(super) fn suspension_laws(_: &SuiteOptions) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for (name, x) in suspension_corpus()? {
        let s = suspend_marked(&x, BOUND)?;
        let valid = validate_msset(&s);
        let (cx, cs, mx, ms) = (x.counts(), s.counts(), x.marked_counts(), s.marked_counts());
        let shifted = cs[0] == 2 && (1..=BOUND).all(|m| cs[m] == cx[m - 1] && ms[m] == mx[m - 1]);
        checks.push(Check::new(format!("Σ({name}) shifts generators and markings"), valid.passed() && shifted, || {
            format!("{valid}; counts {cx:?} -> {cs:?}, marked {mx:?} -> {ms:?}")
        }));
    }
    for (name, d) in pushout_samples()? {
        let lhs = suspend_marked(&colimit(&d)?.set, BOUND)?;
        let mut sd = Diagram::new();
        for x in &d.nodes {
            sd.node(suspend_marked(x, BOUND)?);
        }
        for a in &d.arrows {
            sd.arrow(a.src, a.tgt, suspend_map(&a.map, &d.nodes[a.src], &d.nodes[a.tgt], BOUND)?);
        }
        let rhs = colimit(&sd)?.set;
        checks.push(Check::new(format!("Σ commutes with the pushout: {name}"), find_iso(&lhs, &rhs).is_some(), || {
            format!("counts {:?} vs {:?}", lhs.counts(), rhs.counts())
        }));
    }
    Ok(checks)
}

/// Monotone maps `[m] -> [n]`, as value lists.
fn monotone_maps(m: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0..=n).map(|v| vec![v]).collect();
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|a| {
                let last = *a.last().expect("nonempty");
                (last..=n).map(move |v| {
                    let mut b = a.clone();
                    b.push(v);
                    b
                })
            })
            .collect();
    }
    out
}

pub(super) fn comparison(_: &SuiteOptions) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let mut cats: Vec<(String, FinCategory)> = (0..=3).map(|k| Ok((format!("[{k}]"), ordinal(k)?))).collect::<Result<_>>()?;
    cats.push(("𝕀".into(), free_iso()));
    for (name, c) in &cats {
        let cmp = suspension_comparison(c, BOUND)?;
        let valid = validate_map(&cmp.map, &cmp.source, &cmp.target.set);
        checks.push(Check::new(format!("ΣN^RS{name} -> N^RSΣ{name} is a map"), valid.passed(), || valid.to_string()));
        let mut clash = None;
        for n in 0..=2 {
            let mut seen = BTreeMap::new();
            for g in cmp.source.gen_ids(n) {
                let img = cmp.map.image(g);
                if img.is_degenerate() || seen.insert(img.gen, g).is_some() {
                    clash = Some(format!("dimension {n}, generator {}", cmp.source.generator(g).name));
                    break;
                }
            }
        }
        checks.push(Check::new(format!("comparison for {name} is injective up to dimension 2"), clash.is_none(), || {
            clash.clone().unwrap_or_default()
        }));
    }
    for m in 0..=2usize {
        for n in 0..=2usize {
            let (c, d) = (ordinal(m as isize)?, ordinal(n as isize)?);
            let mut failures = Vec::new();
            for objects in monotone_maps(m, n) {
                let f = Functor {
                    objects: objects.clone(),
                    morphisms: c
                        .morphisms()
                        .iter()
                        .map(|a| {
                            d.morphism_index(&format!("{}->{}", objects[a.src], objects[a.tgt]))
                                .expect("monotone")
                        })
                        .collect(),
                };
                if !comparison_natural(&f, &c, &d, BOUND)? {
                    failures.push(format!("{objects:?}"));
                }
            }
            checks.push(Check::new(format!("naturality for functors [{m}] -> [{n}]"), failures.is_empty(), || {
                failures.join(", ")
            }));
        }
    }
    Ok(checks)
}

/// The classical nerve of a 1-category: `n`-generators are strings of `n`
/// composable non-identity morphisms, inner faces compose, and a face
/// containing an identity is the corresponding degeneracy. Generators of
/// dimension `≥ thin_from` are marked.
pub fn classical_nerve(c: &FinCategory, bound: usize, thin_from: usize) -> Result<MarkedSSet> {
    let mut x = MarkedSSet::new(bound);
    for name in c.objects() {
        x.add_generator(name.clone(), 0, Vec::new(), false)?;
    }
    let mut index: Vec<BTreeMap<Vec<usize>, usize>> = vec![BTreeMap::new(); bound + 1];
    // a string possibly containing identities, or a bare object
    let normalize = |index: &Vec<BTreeMap<Vec<usize>, usize>>, object: usize, s: &[usize]| -> SimplexRef {
        let positions: Vec<usize> = (0..s.len()).filter(|&p| c.is_identity(s[p])).collect();
        let core: Vec<usize> = s.iter().copied().filter(|&f| !c.is_identity(f)).collect();
        let gen = if core.is_empty() {
            GenId::new(0, object)
        } else {
            GenId::new(core.len(), index[core.len()][&core])
        };
        SimplexRef {
            gen,
            word: DegeneracyWord::from_positions(positions),
        }
    };
    let arrows: Vec<usize> = (0..c.morphisms().len()).filter(|&f| !c.is_identity(f)).collect();
    let mut strings: Vec<Vec<usize>> = vec![Vec::new()];
    for n in 1..=bound {
        let next: Vec<Vec<usize>> = if n == 1 {
            arrows.iter().map(|&f| vec![f]).collect()
        } else {
            strings
                .iter()
                .flat_map(|s| {
                    let end = c.morphisms()[*s.last().expect("nonempty")].tgt;
                    arrows.iter().filter(move |&&f| c.morphisms()[f].src == end).map(move |&f| {
                        let mut t = s.clone();
                        t.push(f);
                        t
                    })
                })
                .collect()
        };
        for s in &next {
            let src = c.morphisms()[s[0]].src;
            let faces: Vec<SimplexRef> = (0..=n)
                .map(|i| {
                    if n == 1 {
                        let m = &c.morphisms()[s[0]];
                        return SimplexRef::generator(GenId::new(0, if i == 0 { m.tgt } else { m.src }));
                    }
                    let face: Vec<usize> = if i == 0 {
                        s[1..].to_vec()
                    } else if i == n {
                        s[..n - 1].to_vec()
                    } else {
                        let mut t = s[..i - 1].to_vec();
                        t.push(c.compose(s[i - 1], s[i]).expect("composable"));
                        t.extend_from_slice(&s[i + 1..]);
                        t
                    };
                    let object = if i == 0 { c.morphisms()[s[0]].tgt } else { src };
                    normalize(&index, object, &face)
                })
                .collect();
            let id = x.add_generator(format!("{s:?}"), n, faces, n >= thin_from)?;
            index[n].insert(s.clone(), id.index);
        }
        strings = next;
    }
    Ok(x)
}

pub(super) fn nerve_structure(_: &SuiteOptions) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for k in 0..=3 {
        let c = ordinal(k)?;
        let n = rs_nerve(&Fin2Category::from_category(&c), BOUND)?;
        let classical = classical_nerve(&c, BOUND, 2)?;
        checks.push(Check::new(
            format!("N^RS[{k}] is the classical nerve with dimension ≥ 2 marked"),
            find_iso(&n, &classical).is_some(),
            || format!("counts {:?} vs {:?}", n.counts(), classical.counts()),
        ));
    }
    for theta in Theta2Shape::grid(2, 2) {
        let n = duskin_nerve(&theta2_object(&theta)?, 5)?;
        for dim in 4..=5 {
            let report = check_coskeletal(&n, dim, SearchLimits::default())?;
            checks.push(Check::new(
                format!("N{theta} has unique {dim}-fillers"),
                report.passed(),
                || report.to_string(),
            ));
        }
    }
    let c2 = rs_nerve(&cell(2)?, BOUND)?;
    let free = c2.gens(2).iter().filter(|g| !g.marked).count();
    checks.push(Check::new(
        "N^RS(C₂) has exactly 2 unmarked 2-generators",
        c2.counts()[2] == 2 && free == 2,
        || format!("{} generators, {free} unmarked", c2.counts()[2]),
    ));
    Ok(checks)
}
