use alloc::format;
use alloc::vec::Vec;

use super::two::Fin2Category;
use crate::Report;

/// Exhaustive check of the strict 2-category axioms. Each violated law is
/// reported with the tuple of cell names that witnesses it.
pub fn validate_2cat(d: &Fin2Category) -> Report {
    let mut report = Report::new();
    let c1 = d.cells1();
    let c2 = d.cells2();
    let n1 = |f: usize| &c1[f].name;
    let n2 = |a: usize| &c2[a].name;

    for x in 0..d.objects().len() {
        let i = d.id1(x);
        if c1[i].src != x || c1[i].tgt != x {
            report.push("identity1-endpoints", d.objects()[x].clone());
        }
    }
    for f in 0..c1.len() {
        let a = d.id2(f);
        if c2[a].src != f || c2[a].tgt != f {
            report.push("identity2-boundary", n1(f).clone());
        }
    }
    for f in 0..c1.len() {
        for g in 0..c1.len() {
            match (c1[f].tgt == c1[g].src, d.hcomp1(f, g)) {
                (true, None) => report.push("hcomp1-total", format!("({}, {})", n1(f), n1(g))),
                (false, Some(_)) => report.push("hcomp1-domain", format!("({}, {})", n1(f), n1(g))),
                (true, Some(r)) if c1[r].src != c1[f].src || c1[r].tgt != c1[g].tgt => {
                    report.push("hcomp1-endpoints", format!("({}, {})", n1(f), n1(g)))
                }
                _ => {}
            }
        }
    }
    for a in 0..c2.len() {
        for b in 0..c2.len() {
            match (c2[a].tgt == c2[b].src, d.vcomp(a, b)) {
                (true, None) => report.push("vcomp-total", format!("({}, {})", n2(a), n2(b))),
                (false, Some(_)) => report.push("vcomp-domain", format!("({}, {})", n2(a), n2(b))),
                (true, Some(r)) if c2[r].src != c2[a].src || c2[r].tgt != c2[b].tgt => {
                    report.push("vcomp-boundary", format!("({}, {})", n2(a), n2(b)))
                }
                _ => {}
            }
            let composable = d.cell2_tgt_object(a) == d.cell2_src_object(b);
            match (composable, d.hcomp2(a, b)) {
                (true, None) => report.push("hcomp2-total", format!("({}, {})", n2(a), n2(b))),
                (false, Some(_)) => report.push("hcomp2-domain", format!("({}, {})", n2(a), n2(b))),
                (true, Some(r)) => {
                    let src = d.hcomp1(c2[a].src, c2[b].src);
                    let tgt = d.hcomp1(c2[a].tgt, c2[b].tgt);
                    if src != Some(c2[r].src) || tgt != Some(c2[r].tgt) {
                        report.push("hcomp2-boundary", format!("({}, {})", n2(a), n2(b)));
                    }
                }
                _ => {}
            }
        }
    }
    if !report.passed() {
        return report;
    }

    // 1-cells: unit and associativity of horizontal composition.
    for f in 0..c1.len() {
        let (is, it) = (d.id1(c1[f].src), d.id1(c1[f].tgt));
        if d.hcomp1(is, f) != Some(f) || d.hcomp1(f, it) != Some(f) {
            report.push("hcomp1-unit", n1(f).clone());
        }
    }
    let from1 = group_by(c1.len(), d.objects().len(), |f| c1[f].src);
    for f in 0..c1.len() {
        for &g in &from1[c1[f].tgt] {
            let fg = d.hcomp1(f, g).unwrap();
            for &h in &from1[c1[g].tgt] {
                if d.hcomp1(fg, h) != d.hcomp1(f, d.hcomp1(g, h).unwrap()) {
                    report.push("hcomp1-associativity", format!("({}, {}, {})", n1(f), n1(g), n1(h)));
                }
            }
        }
    }

    // 2-cells: vertical unit and associativity.
    let from2 = group_by(c2.len(), c1.len(), |a| c2[a].src);
    for a in 0..c2.len() {
        let (is, it) = (d.id2(c2[a].src), d.id2(c2[a].tgt));
        if d.vcomp(is, a) != Some(a) || d.vcomp(a, it) != Some(a) {
            report.push("vcomp-unit", n2(a).clone());
        }
        for &b in &from2[c2[a].tgt] {
            let ab = d.vcomp(a, b).unwrap();
            for &c in &from2[c2[b].tgt] {
                if d.vcomp(ab, c) != d.vcomp(a, d.vcomp(b, c).unwrap()) {
                    report.push("vcomp-associativity", format!("({}, {}, {})", n2(a), n2(b), n2(c)));
                }
            }
        }
    }

    // Horizontal composition of 2-cells: identities, units, associativity.
    for &(f, g, r) in d.hcomp1_triples() {
        if d.hcomp2(d.id2(f), d.id2(g)) != Some(d.id2(r)) {
            report.push("hcomp2-identities", format!("({}, {})", n1(f), n1(g)));
        }
    }
    let from_obj2 = group_by(c2.len(), d.objects().len(), |a| d.cell2_src_object(a));
    for a in 0..c2.len() {
        let ix = d.id2(d.id1(d.cell2_src_object(a)));
        let iy = d.id2(d.id1(d.cell2_tgt_object(a)));
        if d.hcomp2(ix, a) != Some(a) || d.hcomp2(a, iy) != Some(a) {
            report.push("hcomp2-unit", n2(a).clone());
        }
        for &b in &from_obj2[d.cell2_tgt_object(a)] {
            let ab = d.hcomp2(a, b).unwrap();
            for &c in &from_obj2[d.cell2_tgt_object(b)] {
                if d.hcomp2(ab, c) != d.hcomp2(a, d.hcomp2(b, c).unwrap()) {
                    report.push("hcomp2-associativity", format!("({}, {}, {})", n2(a), n2(b), n2(c)));
                }
            }
        }
    }

    // Interchange: (a ; b) * (c ; d) = (a * c) ; (b * d).
    let vtriples_by_obj = {
        let mut by: Vec<Vec<(usize, usize, usize)>> = alloc::vec![Vec::new(); d.objects().len()];
        for &t in d.vcomp_triples() {
            by[d.cell2_src_object(t.0)].push(t);
        }
        by
    };
    for &(a, b, ab) in d.vcomp_triples() {
        for &(c, e, ce) in &vtriples_by_obj[d.cell2_tgt_object(a)] {
            let lhs = d.hcomp2(ab, ce);
            let rhs = match (d.hcomp2(a, c), d.hcomp2(b, e)) {
                (Some(l), Some(r)) => d.vcomp(l, r),
                _ => None,
            };
            if lhs != rhs {
                report.push(
                    "interchange",
                    format!("({}, {}, {}, {})", n2(a), n2(b), n2(c), n2(e)),
                );
            }
        }
    }
    report
}

fn group_by(n: usize, buckets: usize, key: impl Fn(usize) -> usize) -> Vec<Vec<usize>> {
    let mut out = alloc::vec![Vec::new(); buckets];
    for i in 0..n {
        out[key(i)].push(i);
    }
    out
}
