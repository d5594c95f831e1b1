//! Finite categories as explicit composition tables.
//!
//! Composition is stored in diagrammatic order: `compose(f, g)` is "first `f`,
//! then `g`", defined exactly when `target(f) == source(g)`.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A finite category with objects and arrows addressed by index.
#[derive(Clone, Debug)]
pub struct FinCategory {
    objects: Vec<String>,
    arrows: Vec<Arrow>,
    identities: Vec<usize>,
    comp: HashMap<(usize, usize), usize>,
    identity_of: Vec<Option<usize>>,
    hom: HashMap<(usize, usize), Vec<usize>>,
    outgoing: Vec<Vec<usize>>,
    incoming: Vec<Vec<usize>>,
    fingerprint: u64,
}

impl PartialEq for FinCategory {
    fn eq(&self, other: &Self) -> bool {
        self.fingerprint == other.fingerprint
            && self.objects == other.objects
            && self.arrows == other.arrows
            && self.identities == other.identities
            && self.comp == other.comp
    }
}

impl Eq for FinCategory {}

impl FinCategory {
    /// Builds and validates a category from its tables.
    pub fn new(
        objects: Vec<String>,
        arrows: Vec<Arrow>,
        identities: Vec<usize>,
        comp: HashMap<(usize, usize), usize>,
    ) -> Result<Self> {
        let c = Self::from_parts(objects, arrows, identities, comp)?;
        c.validate()?;
        Ok(c)
    }

    /// Assembles the derived indices without checking the category laws.
    /// Boundary indices are still range-checked.
    pub(crate) fn from_parts(
        objects: Vec<String>,
        arrows: Vec<Arrow>,
        identities: Vec<usize>,
        comp: HashMap<(usize, usize), usize>,
    ) -> Result<Self> {
        let n0 = objects.len();
        if identities.len() != n0 {
            return Err(Error::malformed(format!(
                "{} identities for {} objects",
                identities.len(),
                n0
            )));
        }
        let mut identity_of = vec![None; arrows.len()];
        for (x, &i) in identities.iter().enumerate() {
            if i >= arrows.len() {
                return Err(Error::malformed(format!("identity of object {x} out of range")));
            }
            identity_of[i] = Some(x);
        }
        let mut hom: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        let mut outgoing = vec![Vec::new(); n0];
        let mut incoming = vec![Vec::new(); n0];
        for (i, a) in arrows.iter().enumerate() {
            if a.source >= n0 || a.target >= n0 {
                return Err(Error::malformed(format!("arrow {} has an endpoint out of range", a.name)));
            }
            hom.entry((a.source, a.target)).or_default().push(i);
            outgoing[a.source].push(i);
            incoming[a.target].push(i);
        }
        let fingerprint = fingerprint_tables(&objects, &arrows, &identities, &comp);
        Ok(FinCategory {
            objects,
            arrows,
            identities,
            comp,
            identity_of,
            hom,
            outgoing,
            incoming,
            fingerprint,
        })
    }

    /// Exhaustively checks typing, totality, unit and associativity laws.
    pub fn validate(&self) -> Result<()> {
        for (x, &i) in self.identities.iter().enumerate() {
            let a = &self.arrows[i];
            if a.source != x || a.target != x {
                return Err(Error::axiom("identity typing", format!("1_{}", self.objects[x])));
            }
        }
        let mut expected = 0usize;
        for f in 0..self.arrows.len() {
            for &g in &self.outgoing[self.arrows[f].target] {
                expected += 1;
                let Some(&h) = self.comp.get(&(f, g)) else {
                    return Err(Error::axiom(
                        "composition total",
                        format!("({}, {})", self.arrows[f].name, self.arrows[g].name),
                    ));
                };
                if h >= self.arrows.len()
                    || self.arrows[h].source != self.arrows[f].source
                    || self.arrows[h].target != self.arrows[g].target
                {
                    return Err(Error::axiom(
                        "composite typing",
                        format!("({}, {})", self.arrows[f].name, self.arrows[g].name),
                    ));
                }
            }
        }
        if expected != self.comp.len() {
            return Err(Error::axiom(
                "composition defined only on composable pairs",
                format!("{} entries for {} composable pairs", self.comp.len(), expected),
            ));
        }
        for (f, a) in self.arrows.iter().enumerate() {
            if self.comp[&(self.identities[a.source], f)] != f || self.comp[&(f, self.identities[a.target])] != f {
                return Err(Error::axiom("unit law", a.name.clone()));
            }
        }
        for f in 0..self.arrows.len() {
            for &g in &self.outgoing[self.arrows[f].target] {
                let fg = self.comp[&(f, g)];
                for &h in &self.outgoing[self.arrows[g].target] {
                    let gh = self.comp[&(g, h)];
                    if self.comp[&(fg, h)] != self.comp[&(f, gh)] {
                        return Err(Error::axiom(
                            "associativity",
                            format!(
                                "({}, {}, {})",
                                self.arrows[f].name, self.arrows[g].name, self.arrows[h].name
                            ),
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn object_names(&self) -> &[String] {
        &self.objects
    }

    pub fn object_name(&self, x: usize) -> &str {
        &self.objects[x]
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, f: usize) -> &Arrow {
        &self.arrows[f]
    }

    pub fn source(&self, f: usize) -> usize {
        self.arrows[f].source
    }

    pub fn target(&self, f: usize) -> usize {
        self.arrows[f].target
    }

    pub fn identity(&self, x: usize) -> usize {
        self.identities[x]
    }

    pub fn identities(&self) -> &[usize] {
        &self.identities
    }

    pub fn is_identity(&self, f: usize) -> bool {
        self.identity_of[f].is_some()
    }

    pub fn identity_of(&self, f: usize) -> Option<usize> {
        self.identity_of[f]
    }

    /// First `f`, then `g`.
    pub fn compose(&self, f: usize, g: usize) -> Option<usize> {
        self.comp.get(&(f, g)).copied()
    }

    pub fn composition_table(&self) -> &HashMap<(usize, usize), usize> {
        &self.comp
    }

    pub fn hom(&self, x: usize, y: usize) -> &[usize] {
        self.hom.get(&(x, y)).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn outgoing(&self, x: usize) -> &[usize] {
        &self.outgoing[x]
    }

    pub fn incoming(&self, x: usize) -> &[usize] {
        &self.incoming[x]
    }

    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn find_object(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn find_arrow(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// Inverse of `f`, if it has one.
    pub fn inverse(&self, f: usize) -> Option<usize> {
        let a = &self.arrows[f];
        self.hom(a.target, a.source).iter().copied().find(|&g| {
            self.comp[&(f, g)] == self.identities[a.source] && self.comp[&(g, f)] == self.identities[a.target]
        })
    }

    /// Composite of a path of arrows; `None` on an empty or broken path.
    pub fn compose_path(&self, path: &[usize]) -> Option<usize> {
        let (&first, rest) = path.split_first()?;
        rest.iter().try_fold(first, |acc, &g| self.compose(acc, g))
    }
}

fn fingerprint_tables(
    objects: &[String],
    arrows: &[Arrow],
    identities: &[usize],
    comp: &HashMap<(usize, usize), usize>,
) -> u64 {
    let mut h = DefaultHasher::new();
    objects.hash(&mut h);
    arrows.hash(&mut h);
    identities.hash(&mut h);
    let mut entries: Vec<_> = comp.iter().map(|(&(a, b), &c)| (a, b, c)).collect();
    entries.sort_unstable();
    entries.hash(&mut h);
    h.finish()
}

/// A functor between finite categories, given by its object and arrow maps.
#[derive(Clone, Debug)]
pub struct Functor {
    pub domain: Arc<FinCategory>,
    pub codomain: Arc<FinCategory>,
    pub objects: Vec<usize>,
    pub arrows: Vec<usize>,
}

impl PartialEq for Functor {
    fn eq(&self, other: &Self) -> bool {
        self.objects == other.objects
            && self.arrows == other.arrows
            && (Arc::ptr_eq(&self.domain, &other.domain) || self.domain == other.domain)
            && (Arc::ptr_eq(&self.codomain, &other.codomain) || self.codomain == other.codomain)
    }
}

impl Functor {
    pub fn new(
        domain: Arc<FinCategory>,
        codomain: Arc<FinCategory>,
        objects: Vec<usize>,
        arrows: Vec<usize>,
    ) -> Result<Self> {
        let f = Functor {
            domain,
            codomain,
            objects,
            arrows,
        };
        f.validate()?;
        Ok(f)
    }

    pub fn identity(c: Arc<FinCategory>) -> Self {
        Functor {
            objects: (0..c.num_objects()).collect(),
            arrows: (0..c.num_arrows()).collect(),
            domain: c.clone(),
            codomain: c,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let (d, c) = (&self.domain, &self.codomain);
        if self.objects.len() != d.num_objects() || self.arrows.len() != d.num_arrows() {
            return Err(Error::malformed("functor tables do not cover the domain"));
        }
        if self.objects.iter().any(|&x| x >= c.num_objects()) || self.arrows.iter().any(|&f| f >= c.num_arrows()) {
            return Err(Error::malformed("functor image out of range"));
        }
        for (f, a) in d.arrows().iter().enumerate() {
            let img = c.arrow(self.arrows[f]);
            if img.source != self.objects[a.source] || img.target != self.objects[a.target] {
                return Err(Error::axiom("functor preserves boundaries", a.name.clone()));
            }
        }
        for x in 0..d.num_objects() {
            if self.arrows[d.identity(x)] != c.identity(self.objects[x]) {
                return Err(Error::axiom("functor preserves identities", d.object_name(x).to_string()));
            }
        }
        for (&(f, g), &h) in d.composition_table() {
            if c.compose(self.arrows[f], self.arrows[g]) != Some(self.arrows[h]) {
                return Err(Error::axiom(
                    "functor preserves composition",
                    format!("({}, {})", d.arrow(f).name, d.arrow(g).name),
                ));
            }
        }
        Ok(())
    }

    /// First `self`, then `other`.
    pub fn then(&self, other: &Functor) -> Result<Functor> {
        if !(Arc::ptr_eq(&self.codomain, &other.domain) || self.codomain == other.domain) {
            return Err(Error::malformed("functors are not composable"));
        }
        Ok(Functor {
            domain: self.domain.clone(),
            codomain: other.codomain.clone(),
            objects: self.objects.iter().map(|&x| other.objects[x]).collect(),
            arrows: self.arrows.iter().map(|&f| other.arrows[f]).collect(),
        })
    }

    pub fn is_bijective_on_objects(&self) -> bool {
        is_bijection(&self.objects, self.codomain.num_objects())
    }

    pub fn is_bijective_on_arrows(&self) -> bool {
        is_bijection(&self.arrows, self.codomain.num_arrows())
    }

    /// Full and faithful: bijective on each hom-set.
    pub fn is_fully_faithful(&self) -> bool {
        let d = &self.domain;
        for x in 0..d.num_objects() {
            for y in 0..d.num_objects() {
                let target = self.codomain.hom(self.objects[x], self.objects[y]);
                let mut seen = vec![false; target.len()];
                for &f in d.hom(x, y) {
                    let Some(pos) = target.iter().position(|&g| g == self.arrows[f]) else {
                        return false;
                    };
                    if seen[pos] {
                        return false;
                    }
                    seen[pos] = true;
                }
                if seen.iter().any(|s| !s) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_bijective_on_objects() && self.is_bijective_on_arrows()
    }
}

pub(crate) fn is_bijection(map: &[usize], codomain_size: usize) -> bool {
    if map.len() != codomain_size {
        return false;
    }
    let mut seen = vec![false; codomain_size];
    for &v in map {
        if v >= codomain_size || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}

/// Inverse of a bijective index map.
pub(crate) fn invert_bijection(map: &[usize]) -> Vec<usize> {
    let mut inv = vec![usize::MAX; map.len()];
    for (i, &v) in map.iter().enumerate() {
        inv[v] = i;
    }
    inv
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arrow(name: &str, source: usize, target: usize) -> Arrow {
        Arrow {
            name: name.into(),
            source,
            target,
        }
    }

    /// The walking arrow 0 -> 1.
    fn walking_arrow() -> FinCategory {
        let arrows = vec![arrow("1_0", 0, 0), arrow("1_1", 1, 1), arrow("u", 0, 1)];
        let comp = HashMap::from([((0, 0), 0), ((1, 1), 1), ((0, 2), 2), ((2, 1), 2)]);
        FinCategory::new(vec!["0".into(), "1".into()], arrows, vec![0, 1], comp).unwrap()
    }

    #[test]
    fn walking_arrow_is_valid() {
        let c = walking_arrow();
        assert_eq!(c.hom(0, 1), &[2]);
        assert!(c.is_identity(0));
        assert!(!c.is_identity(2));
        assert_eq!(c.compose(2, 1), Some(2));
        assert_eq!(c.compose(1, 2), None);
    }

    #[test]
    fn missing_composite_is_rejected() {
        let arrows = vec![arrow("1_0", 0, 0), arrow("1_1", 1, 1), arrow("u", 0, 1)];
        let comp = HashMap::from([((0, 0), 0), ((1, 1), 1), ((0, 2), 2)]);
        let err = FinCategory::new(vec!["0".into(), "1".into()], arrows, vec![0, 1], comp).unwrap_err();
        assert!(matches!(err, Error::AxiomViolation { ref axiom, .. } if axiom == "composition total"));
    }

    #[test]
    fn non_associative_table_is_rejected() {
        // one object, arrows {1, a, b}; a;a = b, a;b = a, b;a = b, b;b = b breaks associativity
        let arrows = vec![arrow("1", 0, 0), arrow("a", 0, 0), arrow("b", 0, 0)];
        let mut comp = HashMap::new();
        for f in 0..3 {
            comp.insert((0, f), f);
            comp.insert((f, 0), f);
        }
        comp.insert((1, 1), 2);
        comp.insert((1, 2), 1);
        comp.insert((2, 1), 2);
        comp.insert((2, 2), 2);
        let err = FinCategory::new(vec!["*".into()], arrows, vec![0], comp).unwrap_err();
        assert!(matches!(err, Error::AxiomViolation { ref axiom, .. } if axiom == "associativity"));
    }

    #[test]
    fn identity_functor_is_iso_and_ff() {
        let c = Arc::new(walking_arrow());
        let id = Functor::identity(c);
        id.validate().unwrap();
        assert!(id.is_isomorphism());
        assert!(id.is_fully_faithful());
        assert_eq!(id.then(&id).unwrap(), id);
    }
}
