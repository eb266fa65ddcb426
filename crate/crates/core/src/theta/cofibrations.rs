use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{BoxCell, CellMap, PresentationMap, Theta2Presentation};
use crate::twocat::{enumerate_two_functors, theta2_object, Fin2Category, SearchLimits, Theta2Shape, TwoFunctor};
use crate::{Error, Result};

/// The four families of elementary acyclic cofibrations.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CofibrationKind {
    /// `Θ₂[1|1] ⊔_{Θ₂[1|0]} ⋯ ⊔_{Θ₂[1|0]} Θ₂[1|1] -> Θ₂[1|k]` (`k` copies).
    VerticalSegal(usize),
    /// `Θ₂[1|k₁] ⊔_{Θ₂[0]} ⋯ ⊔_{Θ₂[0]} Θ₂[1|k_m] -> Θ₂[m|k₁,…,k_m]`.
    HorizontalSegal(Vec<usize>),
    /// `Θ₂[0] -> Θ₂[0] ⊔_{Θ₂[1|0]} Θ₂[3|0,0,0] ⊔_{Θ₂[1|0]} Θ₂[0]` along `02`
    /// and `13`.
    HorizontalCompleteness,
    /// `Θ₂[1|0] -> Θ₂[1|0] ⊔_{Θ₂[1|1]} Θ₂[1|3] ⊔_{Θ₂[1|1]} Θ₂[1|0]` along `02`
    /// and `13`.
    VerticalCompleteness,
}

fn lookup(d: &Fin2Category, name: &str) -> Option<(u8, usize)> {
    d.object_index(name)
        .map(|i| (0, i))
        .or_else(|| d.cell1_index(name).map(|i| (1, i)))
        .or_else(|| d.cell2_index(name).map(|i| (2, i)))
}

/// The unique 2-functor `d -> e` sending each named cell of `d` to the
/// named cell of `e`.
pub fn functor_by_names(d: &Fin2Category, e: &Fin2Category, pairs: &[(String, String)]) -> Result<TwoFunctor> {
    let mut constraints = Vec::new();
    for (a, b) in pairs {
        match (lookup(d, a), lookup(e, b)) {
            (Some((la, ia)), Some((lb, ib))) if la == lb => constraints.push((la, ia, ib)),
            _ => return Err(Error::invalid(format!("cannot send {a} to {b}"))),
        }
    }
    let matching: Vec<TwoFunctor> = enumerate_two_functors(d, e, SearchLimits::default())?
        .into_iter()
        .filter(|f| {
            constraints.iter().all(|&(level, a, b)| match level {
                0 => f.objects[a] == b,
                1 => f.cells1[a] == b,
                _ => f.cells2[a] == b,
            })
        })
        .collect();
    match matching.len() {
        1 => Ok(matching.into_iter().next().unwrap()),
        0 => Err(Error::invalid("no 2-functor matches the prescribed cells")),
        n => Err(Error::invalid(format!("{n} 2-functors match the prescribed cells"))),
    }
}

fn shape(ks: &[usize]) -> Theta2Shape {
    Theta2Shape::from_ks(ks.to_vec())
}

/// A level-0 cell map between shapes given by name pairs.
fn named(src: &[usize], tgt: &[usize], pairs: &[(String, String)]) -> Result<CellMap> {
    let d = theta2_object(&shape(src))?;
    let e = theta2_object(&shape(tgt))?;
    Ok(CellMap {
        functor: functor_by_names(&d, &e, pairs)?,
        monotone: vec![0],
    })
}

fn pairs<const N: usize>(items: [(&str, String); N]) -> Vec<(String, String)> {
    items.into_iter().map(|(a, b)| (a.into(), b)).collect()
}

fn identity_on(ks: &[usize]) -> Result<PresentationMap> {
    let w = Theta2Presentation::representable(shape(ks), 0);
    let d = theta2_object(&shape(ks))?;
    Ok(PresentationMap {
        source: w.clone(),
        target: w,
        legs: vec![(
            0,
            CellMap {
                functor: TwoFunctor::identity(&d),
                monotone: vec![0],
            },
        )],
    })
}

fn cell(ks: &[usize]) -> BoxCell {
    BoxCell::new(shape(ks), 0)
}

/// Source, target and canonical map of an elementary acyclic cofibration.
pub fn elementary_cofibration(kind: &CofibrationKind) -> Result<PresentationMap> {
    match kind {
        CofibrationKind::VerticalSegal(0) => identity_on(&[0]),
        CofibrationKind::VerticalSegal(k) => {
            let k = *k;
            let mut src = Theta2Presentation::default();
            let copies: Vec<usize> = (0..k).map(|_| src.cell(cell(&[1]))).collect();
            let mut legs: Vec<(usize, CellMap)> = Vec::new();
            for j in 0..k {
                legs.push((
                    0,
                    named(
                        &[1],
                        &[k],
                        &pairs([
                            ("0", "0".into()),
                            ("1", "1".into()),
                            ("0->1:0", format!("0->1:{j}")),
                            ("0->1:1", format!("0->1:{}", j + 1)),
                        ]),
                    )?,
                ));
            }
            let end = |p: usize| named(&[0], &[1], &pairs([("0", "0".into()), ("1", "1".into()), ("0->1:0", format!("0->1:{p}"))]));
            for j in 0..k.saturating_sub(1) {
                let g = src.cell(cell(&[0]));
                src.arrow(g, copies[j], end(1)?);
                src.arrow(g, copies[j + 1], end(0)?);
                legs.push((
                    0,
                    named(
                        &[0],
                        &[k],
                        &pairs([("0", "0".into()), ("1", "1".into()), ("0->1:0", format!("0->1:{}", j + 1))]),
                    )?,
                ));
            }
            Ok(PresentationMap {
                source: src,
                target: Theta2Presentation::representable(shape(&[k]), 0),
                legs,
            })
        }
        CofibrationKind::HorizontalSegal(ks) if ks.is_empty() => identity_on(&[]),
        CofibrationKind::HorizontalSegal(ks) => {
            let m = ks.len();
            let mut src = Theta2Presentation::default();
            let copies: Vec<usize> = ks.iter().map(|&k| src.cell(cell(&[k]))).collect();
            let mut legs = Vec::new();
            for (i, &k) in ks.iter().enumerate() {
                let mut p = vec![("0".into(), format!("{i}")), ("1".into(), format!("{}", i + 1))];
                for v in 0..=k {
                    p.push((format!("0->1:{v}"), format!("{i}->{}:{v}", i + 1)));
                }
                legs.push((0, named(&[k], ks, &p)?));
            }
            for i in 0..m - 1 {
                let g = src.cell(cell(&[]));
                src.arrow(g, copies[i], named(&[], &[ks[i]], &pairs([("0", "1".into())]))?);
                src.arrow(g, copies[i + 1], named(&[], &[ks[i + 1]], &pairs([("0", "0".into())]))?);
                legs.push((0, named(&[], ks, &pairs([("0", format!("{}", i + 1))]))?));
            }
            Ok(PresentationMap {
                source: src,
                target: Theta2Presentation::representable(shape(ks), 0),
                legs,
            })
        }
        CofibrationKind::HorizontalCompleteness => {
            let mut tgt = Theta2Presentation::default();
            let a = tgt.cell(cell(&[]));
            let b1 = tgt.cell(cell(&[0]));
            let c = tgt.cell(cell(&[0, 0, 0]));
            let b2 = tgt.cell(cell(&[0]));
            let d = tgt.cell(cell(&[]));
            let collapse = named(&[0], &[], &[])?;
            tgt.arrow(b1, a, collapse.clone());
            tgt.arrow(b1, c, named(&[0], &[0, 0, 0], &pairs([("0", "0".into()), ("1", "2".into())]))?);
            tgt.arrow(b2, c, named(&[0], &[0, 0, 0], &pairs([("0", "1".into()), ("1", "3".into())]))?);
            tgt.arrow(b2, d, collapse);
            Ok(PresentationMap {
                source: Theta2Presentation::representable(shape(&[]), 0),
                target: tgt,
                legs: vec![(a, named(&[], &[], &[])?)],
            })
        }
        CofibrationKind::VerticalCompleteness => {
            let mut tgt = Theta2Presentation::default();
            let a = tgt.cell(cell(&[0]));
            let b1 = tgt.cell(cell(&[1]));
            let c = tgt.cell(cell(&[3]));
            let b2 = tgt.cell(cell(&[1]));
            let d = tgt.cell(cell(&[0]));
            let collapse = named(&[1], &[0], &pairs([("0", "0".into()), ("1", "1".into())]))?;
            let glue = |p: usize, q: usize| {
                named(
                    &[1],
                    &[3],
                    &pairs([
                        ("0", "0".into()),
                        ("1", "1".into()),
                        ("0->1:0", format!("0->1:{p}")),
                        ("0->1:1", format!("0->1:{q}")),
                    ]),
                )
            };
            tgt.arrow(b1, a, collapse.clone());
            tgt.arrow(b1, c, glue(0, 2)?);
            tgt.arrow(b2, c, glue(1, 3)?);
            tgt.arrow(b2, d, collapse);
            Ok(PresentationMap {
                source: Theta2Presentation::representable(shape(&[0]), 0),
                target: tgt,
                legs: vec![(a, named(&[0], &[0], &pairs([("0", "0".into()), ("1", "1".into())]))?)],
            })
        }
    }
}
