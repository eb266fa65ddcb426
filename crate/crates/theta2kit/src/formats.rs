//! JSON documents: `twocat/1`, `msset/1`, `theta/1` and `msset-map/1`.
//!
//! Every document carries a `schema` tag. Serialization is canonical (fixed
//! field order, compact), so the SHA-256 of the serialized bytes identifies a
//! document; map files pin their endpoints by that hash.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use theta2kit_core::msset::{DegeneracyWord, GenId, MSSetMap, MarkedSSet, SimplexRef};
use theta2kit_core::theta::{BoxCell, CellMap, PresentationArrow, Theta2Presentation};
use theta2kit_core::twocat::{Cell1, Cell2, Fin2Category, Fin2Tables, Generators, Theta2Shape, TwoFunctor};

use crate::{Error, Result};

pub const TWOCAT: &str = "twocat/1";
pub const MSSET: &str = "msset/1";
pub const THETA: &str = "theta/1";
pub const MAP: &str = "msset-map/1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NamedCell {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorsDoc {
    pub cells1: Vec<usize>,
    pub cells2: Vec<usize>,
}

/// A finite 2-category as its raw tables. Compositions are listed as
/// `[a, b, a;b]` triples in diagrammatic order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwoCatDoc {
    pub schema: String,
    pub objects: Vec<String>,
    pub cells1: Vec<NamedCell>,
    pub cells2: Vec<NamedCell>,
    pub id1: Vec<usize>,
    pub id2: Vec<usize>,
    pub hcomp1: Vec<[usize; 3]>,
    pub vcomp: Vec<[usize; 3]>,
    pub hcomp2: Vec<[usize; 3]>,
    pub generators: Option<GeneratorsDoc>,
}

/// A simplex as a generator `[dim, index]` plus a strictly decreasing
/// degeneracy word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SimplexDoc {
    pub gen: [usize; 2],
    pub word: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorDoc {
    pub name: String,
    pub faces: Vec<SimplexDoc>,
    pub marked: bool,
}

/// A marked simplicial set: generators per dimension up to `bound`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MSSetDoc {
    pub schema: String,
    pub bound: usize,
    pub generators: Vec<Vec<GeneratorDoc>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorDoc {
    pub objects: Vec<usize>,
    pub cells1: Vec<usize>,
    pub cells2: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoxCellDoc {
    pub shape: String,
    pub level: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowDoc {
    pub src: usize,
    pub tgt: usize,
    pub functor: FunctorDoc,
    pub monotone: Vec<usize>,
}

/// A presentation: box cells `[m|k,…]` at a level, and arrows between them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ThetaDoc {
    pub schema: String,
    pub cells: Vec<BoxCellDoc>,
    pub arrows: Vec<ArrowDoc>,
}

/// A map of marked simplicial sets; `source` and `target` are content
/// hashes of `msset/1` documents.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapDoc {
    pub schema: String,
    pub source: String,
    pub target: String,
    pub images: Vec<Vec<SimplexDoc>>,
}

fn check_schema(found: &str, expected: &str) -> Result<()> {
    if found == expected {
        Ok(())
    } else {
        Err(Error::Schema(format!("expected schema {expected:?}, found {found:?}")))
    }
}

fn triples(v: &[(usize, usize, usize)]) -> Vec<[usize; 3]> {
    v.iter().map(|&(a, b, c)| [a, b, c]).collect()
}

impl TwoCatDoc {
    pub fn from_category(d: &Fin2Category) -> Self {
        let t = d.to_tables();
        let named = |name: &String, src, tgt| NamedCell {
            name: name.clone(),
            src,
            tgt,
        };
        Self {
            schema: TWOCAT.into(),
            objects: t.objects,
            cells1: t.cells1.iter().map(|c| named(&c.name, c.src, c.tgt)).collect(),
            cells2: t.cells2.iter().map(|c| named(&c.name, c.src, c.tgt)).collect(),
            id1: t.id1,
            id2: t.id2,
            hcomp1: triples(&t.hcomp1),
            vcomp: triples(&t.vcomp),
            hcomp2: triples(&t.hcomp2),
            generators: t.generators.map(|g| GeneratorsDoc {
                cells1: g.cells1,
                cells2: g.cells2,
            }),
        }
    }

    /// Rebuilds the category, checking referential integrity only.
    pub fn to_category(&self) -> Result<Fin2Category> {
        check_schema(&self.schema, TWOCAT)?;
        let untriple = |v: &[[usize; 3]]| v.iter().map(|t| (t[0], t[1], t[2])).collect();
        Ok(Fin2Category::from_tables(Fin2Tables {
            objects: self.objects.clone(),
            cells1: self
                .cells1
                .iter()
                .map(|c| Cell1 {
                    name: c.name.clone(),
                    src: c.src,
                    tgt: c.tgt,
                })
                .collect(),
            cells2: self
                .cells2
                .iter()
                .map(|c| Cell2 {
                    name: c.name.clone(),
                    src: c.src,
                    tgt: c.tgt,
                })
                .collect(),
            id1: self.id1.clone(),
            id2: self.id2.clone(),
            hcomp1: untriple(&self.hcomp1),
            vcomp: untriple(&self.vcomp),
            hcomp2: untriple(&self.hcomp2),
            generators: self.generators.as_ref().map(|g| Generators {
                cells1: g.cells1.clone(),
                cells2: g.cells2.clone(),
            }),
        })?)
    }
}

impl SimplexDoc {
    pub fn from_simplex(s: &SimplexRef) -> Self {
        Self {
            gen: [s.gen.dim, s.gen.index],
            word: s.word.indices().to_vec(),
        }
    }

    /// The simplex, with its word validated against the generator dimension.
    pub fn to_simplex(&self) -> Result<SimplexRef> {
        Ok(SimplexRef {
            gen: GenId::new(self.gen[0], self.gen[1]),
            word: DegeneracyWord::new(self.word.clone(), self.gen[0])?,
        })
    }
}

impl MSSetDoc {
    pub fn from_set(x: &MarkedSSet) -> Self {
        Self {
            schema: MSSET.into(),
            bound: x.bound(),
            generators: (0..=x.bound())
                .map(|n| {
                    x.gens(n)
                        .iter()
                        .map(|g| GeneratorDoc {
                            name: g.name.clone(),
                            faces: g.faces.iter().map(SimplexDoc::from_simplex).collect(),
                            marked: g.marked,
                        })
                        .collect()
                })
                .collect(),
        }
    }

    /// Rebuilds the set generator by generator; faces must refer to earlier
    /// generators of the right dimension. Simplicial identities are not
    /// enforced here.
    pub fn to_set(&self) -> Result<MarkedSSet> {
        check_schema(&self.schema, MSSET)?;
        if self.generators.len() != self.bound + 1 {
            return Err(Error::Schema(format!(
                "bound {} needs {} generator rows, found {}",
                self.bound,
                self.bound + 1,
                self.generators.len()
            )));
        }
        let mut x = MarkedSSet::new(self.bound);
        for (n, row) in self.generators.iter().enumerate() {
            for g in row {
                let faces = g.faces.iter().map(SimplexDoc::to_simplex).collect::<Result<Vec<_>>>()?;
                x.add_generator(g.name.clone(), n, faces, g.marked)?;
            }
        }
        Ok(x)
    }
}

impl ThetaDoc {
    pub fn from_presentation(w: &Theta2Presentation) -> Self {
        Self {
            schema: THETA.into(),
            cells: w
                .cells
                .iter()
                .map(|c| BoxCellDoc {
                    shape: c.shape.to_string(),
                    level: c.level,
                })
                .collect(),
            arrows: w
                .arrows
                .iter()
                .map(|a| ArrowDoc {
                    src: a.src,
                    tgt: a.tgt,
                    functor: FunctorDoc {
                        objects: a.map.functor.objects.clone(),
                        cells1: a.map.functor.cells1.clone(),
                        cells2: a.map.functor.cells2.clone(),
                    },
                    monotone: a.map.monotone.clone(),
                })
                .collect(),
        }
    }

    /// Parses shapes; arrows are checked by `validate_presentation`, not here.
    pub fn to_presentation(&self) -> Result<Theta2Presentation> {
        check_schema(&self.schema, THETA)?;
        let cells = self
            .cells
            .iter()
            .map(|c| Ok(BoxCell::new(c.shape.parse::<Theta2Shape>()?, c.level)))
            .collect::<Result<Vec<_>>>()?;
        let arrows = self
            .arrows
            .iter()
            .map(|a| PresentationArrow {
                src: a.src,
                tgt: a.tgt,
                map: CellMap {
                    functor: TwoFunctor {
                        objects: a.functor.objects.clone(),
                        cells1: a.functor.cells1.clone(),
                        cells2: a.functor.cells2.clone(),
                    },
                    monotone: a.monotone.clone(),
                },
            })
            .collect();
        Ok(Theta2Presentation { cells, arrows })
    }
}

impl MapDoc {
    pub fn from_map(f: &MSSetMap, source: &MSSetDoc, target: &MSSetDoc) -> Self {
        Self {
            schema: MAP.into(),
            source: content_hash(source),
            target: content_hash(target),
            images: f
                .images
                .iter()
                .map(|row| row.iter().map(SimplexDoc::from_simplex).collect())
                .collect(),
        }
    }

    /// The map, after checking that its endpoints are the given documents.
    pub fn to_map(&self, source: &MSSetDoc, target: &MSSetDoc) -> Result<MSSetMap> {
        check_schema(&self.schema, MAP)?;
        for (which, pinned, doc) in [("source", &self.source, source), ("target", &self.target, target)] {
            let found = content_hash(doc);
            if *pinned != found {
                return Err(Error::HashMismatch {
                    which,
                    expected: pinned.clone(),
                    found,
                });
            }
        }
        let images = self
            .images
            .iter()
            .map(|row| row.iter().map(SimplexDoc::to_simplex).collect())
            .collect::<Result<Vec<_>>>()?;
        Ok(MSSetMap { images })
    }
}

/// Canonical compact serialization.
pub fn to_canonical<T: Serialize>(doc: &T) -> Vec<u8> {
    serde_json::to_vec(doc).expect("documents are plain data")
}

/// Hex SHA-256 of the canonical serialization.
pub fn content_hash<T: Serialize>(doc: &T) -> String {
    hex::encode(Sha256::digest(to_canonical(doc)))
}

/// Any of the four documents, dispatched on the `schema` tag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    TwoCat(TwoCatDoc),
    MSSet(MSSetDoc),
    Theta(ThetaDoc),
    Map(MapDoc),
}

impl Document {
    pub fn parse(text: &str) -> Result<Self> {
        let value: serde_json::Value = serde_json::from_str(text)?;
        let schema = value.get("schema").and_then(|s| s.as_str()).unwrap_or_default().to_owned();
        Ok(match schema.as_str() {
            TWOCAT => Document::TwoCat(serde_json::from_value(value)?),
            MSSET => Document::MSSet(serde_json::from_value(value)?),
            THETA => Document::Theta(serde_json::from_value(value)?),
            MAP => {
                let doc: MapDoc = serde_json::from_value(value)?;
                for hash in [&doc.source, &doc.target] {
                    if hash.len() != 64 || !hash.bytes().all(|b| b.is_ascii_digit() || (b'a'..=b'f').contains(&b)) {
                        return Err(Error::Schema(format!("{hash:?} is not a lowercase hex SHA-256")));
                    }
                }
                Document::Map(doc)
            }
            other => return Err(Error::Schema(format!("unknown schema {other:?}"))),
        })
    }

    /// Pretty JSON with a trailing newline, as written to files.
    pub fn to_pretty(&self) -> String {
        let mut s = match self {
            Document::TwoCat(d) => serde_json::to_string_pretty(d),
            Document::MSSet(d) => serde_json::to_string_pretty(d),
            Document::Theta(d) => serde_json::to_string_pretty(d),
            Document::Map(d) => serde_json::to_string_pretty(d),
        }
        .expect("documents are plain data");
        s.push('\n');
        s
    }

    /// Checks that the document decodes into a core value and that
    /// re-encoding that value reproduces the document.
    pub fn round_trip(&self) -> Result<bool> {
        Ok(match self {
            Document::TwoCat(d) => TwoCatDoc::from_category(&d.to_category()?) == *d,
            Document::MSSet(d) => MSSetDoc::from_set(&d.to_set()?) == *d,
            Document::Theta(d) => ThetaDoc::from_presentation(&d.to_presentation()?) == *d,
            Document::Map(d) => {
                let images = d
                    .images
                    .iter()
                    .map(|row| row.iter().map(SimplexDoc::to_simplex).collect())
                    .collect::<Result<Vec<Vec<_>>>>()?;
                let again: Vec<Vec<SimplexDoc>> =
                    images.iter().map(|row| row.iter().map(SimplexDoc::from_simplex).collect()).collect();
                again == d.images
            }
        })
    }
}
