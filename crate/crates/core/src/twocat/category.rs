use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use super::table::Table2;
use crate::{Error, Report, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Morphism {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
}

/// A finite 1-category given by explicit tables.
///
/// Composition is written in diagrammatic order: `compose(f, g)` is "`f`
/// then `g`", i.e. `g ∘ f`, and is defined exactly when `tgt(f) == src(g)`.
#[derive(Debug, Clone)]
pub struct FinCategory {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identity: Vec<usize>,
    compose: Vec<(usize, usize, usize)>,
    table: Table2,
}

impl PartialEq for FinCategory {
    fn eq(&self, other: &Self) -> bool {
        self.objects == other.objects
            && self.morphisms == other.morphisms
            && self.identity == other.identity
            && self.compose == other.compose
    }
}

impl Eq for FinCategory {}

impl FinCategory {
    /// Assembles a category from raw tables. Only referential integrity is
    /// checked here; the category laws are checked by [`validate_category`].
    pub fn new(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identity: Vec<usize>,
        mut compose: Vec<(usize, usize, usize)>,
    ) -> Result<Self> {
        let n = morphisms.len();
        if identity.len() != objects.len() {
            return Err(Error::invalid("identity table must list one morphism per object"));
        }
        for m in &morphisms {
            if m.src >= objects.len() || m.tgt >= objects.len() {
                return Err(Error::invalid(format!("morphism {} has a dangling endpoint", m.name)));
            }
        }
        if identity.iter().any(|&i| i >= n) {
            return Err(Error::invalid("identity refers to an unknown morphism"));
        }
        if compose.iter().any(|&(a, b, r)| a >= n || b >= n || r >= n) {
            return Err(Error::invalid("composition refers to an unknown morphism"));
        }
        check_unique(objects.iter().map(String::as_str), "object")?;
        check_unique(morphisms.iter().map(|m| m.name.as_str()), "morphism")?;
        compose.sort_unstable();
        if compose.windows(2).any(|w| (w[0].0, w[0].1) == (w[1].0, w[1].1)) {
            return Err(Error::invalid("composition table lists a pair twice"));
        }
        let table = Table2::from_triples(n, &compose);
        Ok(Self {
            objects,
            morphisms,
            identity,
            compose,
            table,
        })
    }

    pub fn empty() -> Self {
        Self::new(Vec::new(), Vec::new(), Vec::new(), Vec::new()).expect("empty category")
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn morphisms(&self) -> &[Morphism] {
        &self.morphisms
    }

    pub fn identity(&self, x: usize) -> usize {
        self.identity[x]
    }

    pub fn identities(&self) -> &[usize] {
        &self.identity
    }

    /// `f` then `g`.
    pub fn compose(&self, f: usize, g: usize) -> Option<usize> {
        self.table.get(f, g)
    }

    pub fn composition_triples(&self) -> &[(usize, usize, usize)] {
        &self.compose
    }

    pub fn is_identity(&self, f: usize) -> bool {
        self.identity[self.morphisms[f].src] == f
    }

    pub fn hom(&self, x: usize, y: usize) -> impl Iterator<Item = usize> + '_ {
        self.morphisms
            .iter()
            .enumerate()
            .filter(move |(_, m)| m.src == x && m.tgt == y)
            .map(|(i, _)| i)
    }

    pub fn object_index(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn morphism_index(&self, name: &str) -> Option<usize> {
        self.morphisms.iter().position(|m| m.name == name)
    }

    /// Whether `f` has a two-sided inverse.
    pub fn is_invertible(&self, f: usize) -> bool {
        let m = &self.morphisms[f];
        self.hom(m.tgt, m.src).any(|g| {
            self.compose(f, g) == Some(self.identity[m.src])
                && self.compose(g, f) == Some(self.identity[m.tgt])
        })
    }

    /// Number of `j`-simplices of the classical nerve, i.e. of composable
    /// strings of `j` morphisms, counted by a path sum over hom-set sizes.
    pub fn nerve_count(&self, j: usize) -> u64 {
        let n = self.objects.len();
        let mut hom_sizes = vec![0u64; n * n];
        for m in &self.morphisms {
            hom_sizes[m.src * n + m.tgt] += 1;
        }
        let mut paths = vec![1u64; n];
        for _ in 0..j {
            let mut next = vec![0u64; n];
            for x in 0..n {
                for y in 0..n {
                    next[y] += paths[x] * hom_sizes[x * n + y];
                }
            }
            paths = next;
        }
        paths.iter().sum()
    }
}

pub(crate) fn check_unique<'a>(names: impl Iterator<Item = &'a str>, what: &str) -> Result<()> {
    let mut seen = alloc::collections::BTreeSet::new();
    for name in names {
        if !seen.insert(name) {
            return Err(Error::invalid(format!("duplicate {what} id {name:?}")));
        }
    }
    Ok(())
}

/// The finite ordinal `[m]` with `m + 1` objects; `m = -1` is empty.
pub fn ordinal(m: isize) -> Result<FinCategory> {
    if m < -1 {
        return Err(Error::invalid(format!("ordinal [{m}] needs m >= -1")));
    }
    let n = (m + 1) as usize;
    let objects: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let mut morphisms = Vec::new();
    let mut index = vec![vec![usize::MAX; n]; n];
    for i in 0..n {
        for j in i..n {
            index[i][j] = morphisms.len();
            morphisms.push(Morphism {
                name: format!("{i}->{j}"),
                src: i,
                tgt: j,
            });
        }
    }
    let identity = (0..n).map(|i| index[i][i]).collect();
    let mut compose = Vec::new();
    for i in 0..n {
        for j in i..n {
            for k in j..n {
                compose.push((index[i][j], index[j][k], index[i][k]));
            }
        }
    }
    FinCategory::new(objects, morphisms, identity, compose)
}

/// The free-living isomorphism `𝕀`: two objects and mutually inverse arrows.
pub fn free_iso() -> FinCategory {
    let objects = vec!["0".to_string(), "1".to_string()];
    let mk = |name: &str, src, tgt| Morphism {
        name: name.to_string(),
        src,
        tgt,
    };
    let morphisms = vec![mk("0->0", 0, 0), mk("1->1", 1, 1), mk("0->1", 0, 1), mk("1->0", 1, 0)];
    let (id0, id1, f, g) = (0, 1, 2, 3);
    let compose = vec![
        (id0, id0, id0),
        (id1, id1, id1),
        (id0, f, f),
        (f, id1, f),
        (id1, g, g),
        (g, id0, g),
        (f, g, id0),
        (g, f, id1),
    ];
    FinCategory::new(objects, morphisms, vec![id0, id1], compose).expect("free iso tables")
}

/// Exhaustive check of the category axioms.
pub fn validate_category(c: &FinCategory) -> Report {
    let mut report = Report::new();
    let mors = c.morphisms();
    for (x, &i) in c.identities().iter().enumerate() {
        if mors[i].src != x || mors[i].tgt != x {
            report.push("identity-endpoints", format!("object {}", c.objects[x]));
        }
    }
    for (f, mf) in mors.iter().enumerate() {
        for (g, mg) in mors.iter().enumerate() {
            match (mf.tgt == mg.src, c.compose(f, g)) {
                (true, None) => report.push("compose-total", format!("({}, {})", mf.name, mg.name)),
                (false, Some(_)) => {
                    report.push("compose-domain", format!("({}, {})", mf.name, mg.name))
                }
                (true, Some(r)) => {
                    if mors[r].src != mf.src || mors[r].tgt != mg.tgt {
                        report.push("compose-endpoints", format!("({}, {})", mf.name, mg.name));
                    }
                }
                (false, None) => {}
            }
        }
    }
    if !report.passed() {
        return report;
    }
    for (f, mf) in mors.iter().enumerate() {
        let (ids, idt) = (c.identity(mf.src), c.identity(mf.tgt));
        if c.compose(ids, f) != Some(f) || c.compose(f, idt) != Some(f) {
            report.push("unit", mf.name.clone());
        }
    }
    for (f, mf) in mors.iter().enumerate() {
        for g in c.hom_from(mf.tgt) {
            let fg = c.compose(f, g).unwrap();
            for h in c.hom_from(mors[g].tgt) {
                let gh = c.compose(g, h).unwrap();
                if c.compose(fg, h) != c.compose(f, gh) {
                    report.push(
                        "associativity",
                        format!("({}, {}, {})", mf.name, mors[g].name, mors[h].name),
                    );
                }
            }
        }
    }
    report
}

impl FinCategory {
    fn hom_from(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        self.morphisms
            .iter()
            .enumerate()
            .filter(move |(_, m)| m.src == x)
            .map(|(i, _)| i)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordinal_counts() {
        let empty = ordinal(-1).unwrap();
        assert_eq!((empty.objects().len(), empty.morphisms().len()), (0, 0));
        let point = ordinal(0).unwrap();
        assert_eq!((point.objects().len(), point.morphisms().len()), (1, 1));
        let three = ordinal(3).unwrap();
        let pairs = (0..4).flat_map(|i| (0..4).map(move |j| (i, j))).filter(|(i, j)| i <= j).count();
        assert_eq!(three.objects().len(), 4);
        assert_eq!(three.morphisms().len(), pairs);
        assert_eq!(pairs, 10);
        assert!(ordinal(-2).is_err());
    }

    #[test]
    fn ordinals_and_iso_validate() {
        for m in -1..5 {
            assert!(validate_category(&ordinal(m).unwrap()).passed());
        }
        let iso = free_iso();
        assert_eq!((iso.objects().len(), iso.morphisms().len()), (2, 4));
        assert!(validate_category(&iso).passed());
        assert!(iso.is_invertible(2) && iso.is_invertible(3));
    }

    #[test]
    fn nerve_count_matches_chains() {
        // [1]: chains of length j are monotone sequences of length j+1 in {0,1}.
        let one = ordinal(1).unwrap();
        for j in 0..5 {
            assert_eq!(one.nerve_count(j), j as u64 + 2);
        }
        // 𝕀 has 2 * 2^j strings of j composable arrows.
        let iso = free_iso();
        assert_eq!(iso.nerve_count(3), 16);
    }

    #[test]
    fn broken_associativity_is_reported() {
        let c = ordinal(2).unwrap();
        let mut triples = c.composition_triples().to_vec();
        // send (0->1) ; (1->2) to the wrong endpoint morphism
        for t in &mut triples {
            if c.morphisms()[t.0].name == "0->1" && c.morphisms()[t.1].name == "1->2" {
                t.2 = c.morphism_index("0->1").unwrap();
            }
        }
        let bad = FinCategory::new(
            c.objects().to_vec(),
            c.morphisms().to_vec(),
            c.identities().to_vec(),
            triples,
        )
        .unwrap();
        let report = validate_category(&bad);
        assert!(report.mentions("compose-endpoints"));
    }
}
