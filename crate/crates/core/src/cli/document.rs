//! On-disk JSON documents for 2-categories, 2-functors and lifting squares,
//! and the resolver that turns a command-line reference into a value.

use std::collections::{BTreeMap, HashMap};
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernel::{catalog, Fin2Category, RawCell, RawTables, TwoFunctor};

pub const FORMAT_VERSION: u32 = 1;

/// The 1-cells `source → target` and the 2-cells between them, with their
/// vertical composition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomBlock {
    pub source: String,
    pub target: String,
    pub one_cells: Vec<String>,
    pub two_cells: Vec<RawCell>,
    /// `(σ, τ, σ;τ)`
    pub vcomp: Vec<(String, String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoCatDocument {
    pub format: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub objects: Vec<String>,
    pub homs: Vec<HomBlock>,
    /// `(object, identity 1-cell)`
    pub identities1: Vec<(String, String)>,
    /// `(1-cell, identity 2-cell)`
    pub identities2: Vec<(String, String)>,
    /// `(f, g, f;g)`
    pub comp1: Vec<(String, String, String)>,
    /// `(σ, τ, σ*τ)`
    pub hcomp: Vec<(String, String, String)>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub generators: Vec<String>,
}

impl TwoCatDocument {
    /// Canonical ordering: objects, then hom blocks by (source, target),
    /// cells inside a block by index, tables lexicographically by index.
    pub fn from_category(c: &Fin2Category, name: Option<&str>) -> Self {
        let raw = c.to_raw();
        let n0 = c.num_objects();
        let mut homs = Vec::new();
        for x in 0..n0 {
            for y in 0..n0 {
                let ones = c.hom1(x, y);
                if ones.is_empty() {
                    continue;
                }
                let mut two_cells = Vec::new();
                let mut vcomp = Vec::new();
                for &f in ones {
                    for &g in ones {
                        for &s in c.hom2(f, g) {
                            two_cells.push(raw.two_cells[s].clone());
                        }
                    }
                }
                let mut pairs: Vec<(usize, usize, usize)> = c
                    .vcomp_table()
                    .iter()
                    .filter(|(&(s, _), _)| c.src0(s) == x && c.tgt0(s) == y)
                    .map(|(&(s, t), &st)| (s, t, st))
                    .collect();
                pairs.sort_unstable();
                for (s, t, st) in pairs {
                    let n = |i: usize| c.two_cell_name(i).to_string();
                    vcomp.push((n(s), n(t), n(st)));
                }
                homs.push(HomBlock {
                    source: c.object_name(x).to_string(),
                    target: c.object_name(y).to_string(),
                    one_cells: ones.iter().map(|&f| c.one_cell_name(f).to_string()).collect(),
                    two_cells,
                    vcomp,
                });
            }
        }
        TwoCatDocument {
            format: FORMAT_VERSION,
            name: name.map(str::to_string),
            objects: raw.objects,
            homs,
            identities1: raw.identities1,
            identities2: raw.identities2,
            comp1: raw.comp1,
            hcomp: raw.hcomp,
            generators: Vec::new(),
        }
    }

    pub fn to_raw(&self) -> Result<RawTables> {
        if self.format != FORMAT_VERSION {
            return Err(Error::malformed(format!("unsupported format version {}", self.format)));
        }
        let mut one_cells = Vec::new();
        let mut two_cells = Vec::new();
        let mut vcomp = Vec::new();
        for h in &self.homs {
            for f in &h.one_cells {
                one_cells.push(RawCell {
                    name: f.clone(),
                    source: h.source.clone(),
                    target: h.target.clone(),
                });
            }
            let local: std::collections::HashSet<&String> = h.one_cells.iter().collect();
            for s in &h.two_cells {
                if !local.contains(&s.source) || !local.contains(&s.target) {
                    return Err(Error::malformed(format!(
                        "2-cell {} does not lie in the hom block {} → {}",
                        s.name, h.source, h.target
                    )));
                }
                two_cells.push(s.clone());
            }
            vcomp.extend(h.vcomp.iter().cloned());
        }
        Ok(RawTables {
            objects: self.objects.clone(),
            one_cells,
            two_cells,
            identities1: self.identities1.clone(),
            identities2: self.identities2.clone(),
            comp1: self.comp1.clone(),
            vcomp,
            hcomp: self.hcomp.clone(),
        })
    }

    pub fn load(&self) -> Result<Fin2Category> {
        Fin2Category::from_raw(&self.to_raw()?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialise")
    }
}

/// A category given by reference (catalog name or path) or inline.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CatRef {
    Name(String),
    Inline(Box<TwoCatDocument>),
}

/// A 2-functor by cell names.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctorDocument {
    pub format: u32,
    pub domain: CatRef,
    pub codomain: CatRef,
    pub objects: BTreeMap<String, String>,
    pub one_cells: BTreeMap<String, String>,
    #[serde(default)]
    pub two_cells: BTreeMap<String, String>,
}

impl FunctorDocument {
    pub fn from_functor(f: &TwoFunctor, domain: CatRef, codomain: CatRef) -> Self {
        let (d, c) = (&f.domain, &f.codomain);
        FunctorDocument {
            format: FORMAT_VERSION,
            domain,
            codomain,
            objects: (0..d.num_objects())
                .map(|x| (d.object_name(x).to_string(), c.object_name(f.objects[x]).to_string()))
                .collect(),
            one_cells: (0..d.num_one_cells())
                .map(|h| (d.one_cell_name(h).to_string(), c.one_cell_name(f.one_cells[h]).to_string()))
                .collect(),
            two_cells: (0..d.num_two_cells())
                .map(|s| (d.two_cell_name(s).to_string(), c.two_cell_name(f.two_cells[s]).to_string()))
                .collect(),
        }
    }

    /// Identity 2-cells may be omitted; they follow from the 1-cell map.
    pub fn load(&self, r: &mut Resolver) -> Result<TwoFunctor> {
        if self.format != FORMAT_VERSION {
            return Err(Error::malformed(format!("unsupported format version {}", self.format)));
        }
        let d = r.resolve_ref(&self.domain)?;
        let c = r.resolve_ref(&self.codomain)?;
        let objects = (0..d.num_objects())
            .map(|x| {
                let img = look(&self.objects, d.object_name(x), "object")?;
                c.find_object(img)
                    .ok_or_else(|| Error::malformed(format!("unknown object {img}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let one_cells = (0..d.num_one_cells())
            .map(|h| {
                if let Some(x) = d.underlying().identity_of(h) {
                    if !self.one_cells.contains_key(d.one_cell_name(h)) {
                        return Ok(c.id1(objects[x]));
                    }
                }
                let img = look(&self.one_cells, d.one_cell_name(h), "1-cell")?;
                c.find_one_cell(img)
                    .ok_or_else(|| Error::malformed(format!("unknown 1-cell {img}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let two_cells = (0..d.num_two_cells())
            .map(|s| match self.two_cells.get(d.two_cell_name(s)) {
                Some(img) => c
                    .find_two_cell(img)
                    .ok_or_else(|| Error::malformed(format!("unknown 2-cell {img}"))),
                None if d.is_identity2(s) => Ok(c.id2(one_cells[d.src2(s)])),
                None => Err(Error::malformed(format!("no image given for 2-cell {}", d.two_cell_name(s)))),
            })
            .collect::<Result<Vec<_>>>()?;
        TwoFunctor::new(d, c, objects, one_cells, two_cells)
    }
}

fn look<'m>(map: &'m BTreeMap<String, String>, key: &str, kind: &str) -> Result<&'m String> {
    map.get(key)
        .ok_or_else(|| Error::malformed(format!("no image given for {kind} {key}")))
}

/// `e: A → B`, `m: C → D`, `top: A → C`, `bottom: B → D`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquareDocument {
    pub format: u32,
    pub e: FunctorDocument,
    pub m: FunctorDocument,
    pub top: FunctorDocument,
    pub bottom: FunctorDocument,
}

/// Resolves references: an existing file path, then `NAME.json` in the
/// directory named by `GRAY2CAT_CATALOG`, then the built-in catalog.
/// Resolved values are shared, so one name always yields one value.
pub struct Resolver {
    dir: Option<PathBuf>,
    seen: HashMap<String, Arc<Fin2Category>>,
}

pub const CATALOG_ENV: &str = "GRAY2CAT_CATALOG";

impl Resolver {
    pub fn new(dir: Option<PathBuf>) -> Self {
        Resolver {
            dir,
            seen: HashMap::new(),
        }
    }

    pub fn from_env() -> Self {
        Resolver::new(std::env::var_os(CATALOG_ENV).map(PathBuf::from))
    }

    pub fn resolve(&mut self, name: &str) -> Result<Arc<Fin2Category>> {
        if let Some(c) = self.seen.get(name) {
            return Ok(c.clone());
        }
        let c = Arc::new(self.load_uncached(name)?);
        self.seen.insert(name.to_string(), c.clone());
        Ok(c)
    }

    pub fn resolve_ref(&mut self, r: &CatRef) -> Result<Arc<Fin2Category>> {
        match r {
            CatRef::Name(n) => self.resolve(n),
            CatRef::Inline(doc) => Ok(Arc::new(doc.load()?)),
        }
    }

    fn load_uncached(&self, name: &str) -> Result<Fin2Category> {
        let path = Path::new(name);
        if path.is_file() {
            return read_document(path)?.load();
        }
        if let Some(dir) = &self.dir {
            let p = dir.join(format!("{name}.json"));
            if p.is_file() {
                return read_document(&p)?.load();
            }
        }
        catalog::get(name).ok_or_else(|| Error::malformed(format!("no file or catalog entry named {name}")))
    }

    /// Names in the external catalog directory, sorted.
    pub fn directory_entries(&self) -> Vec<String> {
        let Some(dir) = &self.dir else { return Vec::new() };
        let Ok(rd) = std::fs::read_dir(dir) else { return Vec::new() };
        let mut out: Vec<String> = rd
            .filter_map(|e| e.ok())
            .filter_map(|e| {
                let p = e.path();
                (p.extension()? == "json").then(|| p.file_stem()?.to_str().map(str::to_string))?
            })
            .collect();
        out.sort();
        out
    }
}

pub fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::malformed(format!("{}: {e}", path.display())))
}

pub fn read_document(path: &Path) -> Result<TwoCatDocument> {
    parse_json(&read_text(path)?)
}

pub fn parse_json<T: serde::de::DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::malformed(format!("invalid document: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_documents_round_trip() {
        for name in catalog::NAMES {
            let c = catalog::get(name).unwrap();
            let doc = TwoCatDocument::from_category(&c, Some(name));
            let loaded = doc.load().unwrap();
            let again = TwoCatDocument::from_category(&loaded, Some(name));
            let reloaded = again.load().unwrap();
            assert_eq!(loaded, reloaded, "{name}");
            assert_eq!(again.to_json(), TwoCatDocument::from_category(&reloaded, Some(name)).to_json());
            let parsed: TwoCatDocument = parse_json(&again.to_json()).unwrap();
            assert_eq!(parsed, again);
        }
    }

    #[test]
    fn functor_documents_round_trip() {
        let mut r = Resolver::new(None);
        for (name, f) in catalog::maps() {
            let d = catalog::NAMES
                .iter()
                .find(|n| catalog::get(n).as_ref() == Some(&*f.domain))
                .unwrap();
            let c = catalog::NAMES
                .iter()
                .find(|n| catalog::get(n).as_ref() == Some(&*f.codomain))
                .unwrap();
            let doc = FunctorDocument::from_functor(&f, CatRef::Name(d.to_string()), CatRef::Name(c.to_string()));
            let g = doc.load(&mut r).unwrap();
            assert_eq!(g.objects, f.objects, "{name}");
            assert_eq!(g.one_cells, f.one_cells);
            assert_eq!(g.two_cells, f.two_cells);
        }
    }

    #[test]
    fn bad_documents_are_malformed() {
        let mut doc = TwoCatDocument::from_category(&catalog::get("S1").unwrap(), None);
        doc.comp1.clear();
        // a partial composition table parses but is not a 2-category
        assert_eq!(doc.load().unwrap_err().exit_code(), 1);
        doc.format = 7;
        assert_eq!(doc.load().unwrap_err().exit_code(), 3);
        assert_eq!(parse_json::<TwoCatDocument>("{").unwrap_err().exit_code(), 3);
    }
}
