//! Finite strict 2-categories as explicit tables.
//!
//! Objects and 1-cells form an underlying [`FinCategory`]. Each 2-cell has a
//! source and target 1-cell. Vertical composition `vcomp(σ, τ)` is "first σ,
//! then τ" (so `target(σ) == source(τ)`); horizontal composition
//! `hcomp(σ, τ)` places σ: x → y before τ: y → z and has boundary
//! `compose(src σ, src τ) ⇒ compose(tgt σ, tgt τ)`.

use std::collections::hash_map::DefaultHasher;
use std::collections::{HashMap, HashSet};
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::category::{Arrow, FinCategory};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cell {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug)]
pub struct Fin2Category {
    base: Arc<FinCategory>,
    cells: Vec<Cell>,
    id2: Vec<usize>,
    vcomp: HashMap<(usize, usize), usize>,
    hcomp: HashMap<(usize, usize), usize>,
    identity2_of: Vec<Option<usize>>,
    hom2: HashMap<(usize, usize), Vec<usize>>,
    from1: Vec<Vec<usize>>,
    cells_between: HashMap<(usize, usize), Vec<usize>>,
    fingerprint: u64,
}

impl PartialEq for Fin2Category {
    fn eq(&self, other: &Self) -> bool {
        self.fingerprint == other.fingerprint
            && self.base == other.base
            && self.cells == other.cells
            && self.id2 == other.id2
            && self.vcomp == other.vcomp
            && self.hcomp == other.hcomp
    }
}

impl Eq for Fin2Category {}

/// Name-addressed tables, the input format of [`Fin2Category::from_raw`].
///
/// All identity cells are listed explicitly; composition tables list every
/// composable pair.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawTables {
    pub objects: Vec<String>,
    pub one_cells: Vec<RawCell>,
    pub two_cells: Vec<RawCell>,
    /// `(object, identity 1-cell)`
    pub identities1: Vec<(String, String)>,
    /// `(1-cell, identity 2-cell)`
    pub identities2: Vec<(String, String)>,
    /// `(f, g, f;g)`
    pub comp1: Vec<(String, String, String)>,
    /// `(σ, τ, σ;τ)` vertically
    pub vcomp: Vec<(String, String, String)>,
    /// `(σ, τ, σ*τ)` horizontally
    pub hcomp: Vec<(String, String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawCell {
    pub name: String,
    pub source: String,
    pub target: String,
}

impl Fin2Category {
    /// Validating constructor from name-addressed tables.
    pub fn from_raw(raw: &RawTables) -> Result<Self> {
        let obj_ix = index_names("object", raw.objects.iter())?;
        let one_ix = index_names("1-cell", raw.one_cells.iter().map(|c| &c.name))?;
        let two_ix = index_names("2-cell", raw.two_cells.iter().map(|c| &c.name))?;
        let look = |ix: &HashMap<String, usize>, kind: &str, n: &str| {
            ix.get(n)
                .copied()
                .ok_or_else(|| Error::malformed(format!("unknown {kind} `{n}`")))
        };
        let arrows = raw
            .one_cells
            .iter()
            .map(|c| {
                Ok(Arrow {
                    name: c.name.clone(),
                    source: look(&obj_ix, "object", &c.source)?,
                    target: look(&obj_ix, "object", &c.target)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let cells = raw
            .two_cells
            .iter()
            .map(|c| {
                Ok(Cell {
                    name: c.name.clone(),
                    source: look(&one_ix, "1-cell", &c.source)?,
                    target: look(&one_ix, "1-cell", &c.target)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let mut identities = vec![usize::MAX; raw.objects.len()];
        for (o, i) in &raw.identities1 {
            identities[look(&obj_ix, "object", o)?] = look(&one_ix, "1-cell", i)?;
        }
        if let Some(x) = identities.iter().position(|&i| i == usize::MAX) {
            return Err(Error::malformed(format!("object `{}` has no identity", raw.objects[x])));
        }
        let mut id2 = vec![usize::MAX; arrows.len()];
        for (f, i) in &raw.identities2 {
            id2[look(&one_ix, "1-cell", f)?] = look(&two_ix, "2-cell", i)?;
        }
        if let Some(f) = id2.iter().position(|&i| i == usize::MAX) {
            return Err(Error::malformed(format!("1-cell `{}` has no identity 2-cell", arrows[f].name)));
        }
        let table = |entries: &[(String, String, String)], ix: &HashMap<String, usize>, kind: &str| {
            let mut t = HashMap::new();
            for (a, b, c) in entries {
                let key = (look(ix, kind, a)?, look(ix, kind, b)?);
                if t.insert(key, look(ix, kind, c)?).is_some() {
                    return Err(Error::malformed(format!("duplicate composition entry ({a}, {b})")));
                }
            }
            Ok(t)
        };
        let comp1 = table(&raw.comp1, &one_ix, "1-cell")?;
        let vcomp = table(&raw.vcomp, &two_ix, "2-cell")?;
        let hcomp = table(&raw.hcomp, &two_ix, "2-cell")?;
        let base = FinCategory::from_parts(raw.objects.clone(), arrows, identities, comp1)?;
        let c = Self::from_parts(Arc::new(base), cells, id2, vcomp, hcomp)?;
        c.validate()?;
        Ok(c)
    }

    /// Assembles indices without checking the 2-category laws.
    pub(crate) fn from_parts(
        base: Arc<FinCategory>,
        cells: Vec<Cell>,
        id2: Vec<usize>,
        vcomp: HashMap<(usize, usize), usize>,
        hcomp: HashMap<(usize, usize), usize>,
    ) -> Result<Self> {
        let n1 = base.num_arrows();
        if id2.len() != n1 {
            return Err(Error::malformed("identity 2-cell table does not cover the 1-cells"));
        }
        let mut identity2_of = vec![None; cells.len()];
        for (f, &i) in id2.iter().enumerate() {
            if i >= cells.len() {
                return Err(Error::malformed(format!("identity 2-cell of 1-cell {f} out of range")));
            }
            identity2_of[i] = Some(f);
        }
        let mut hom2: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        let mut from1 = vec![Vec::new(); n1];
        let mut cells_between: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        for (i, c) in cells.iter().enumerate() {
            if c.source >= n1 || c.target >= n1 {
                return Err(Error::malformed(format!("2-cell {} has a boundary out of range", c.name)));
            }
            hom2.entry((c.source, c.target)).or_default().push(i);
            from1[c.source].push(i);
            let a = base.arrow(c.source);
            cells_between.entry((a.source, a.target)).or_default().push(i);
        }
        let fingerprint = {
            let mut h = DefaultHasher::new();
            base.fingerprint().hash(&mut h);
            cells.hash(&mut h);
            id2.hash(&mut h);
            for t in [&vcomp, &hcomp] {
                let mut e: Vec<_> = t.iter().map(|(&(a, b), &c)| (a, b, c)).collect();
                e.sort_unstable();
                e.hash(&mut h);
            }
            h.finish()
        };
        Ok(Fin2Category {
            base,
            cells,
            id2,
            vcomp,
            hcomp,
            identity2_of,
            hom2,
            from1,
            cells_between,
            fingerprint,
        })
    }

    /// Exhaustive check of every 2-category law.
    pub fn validate(&self) -> Result<()> {
        self.base.validate()?;
        self.check_names()?;
        let n1 = self.base.num_arrows();
        for (i, c) in self.cells.iter().enumerate() {
            let (s, t) = (self.base.arrow(c.source), self.base.arrow(c.target));
            if s.source != t.source || s.target != t.target {
                return Err(Error::axiom("2-cell boundaries parallel", self.cells[i].name.clone()));
            }
        }
        for f in 0..n1 {
            let c = &self.cells[self.id2[f]];
            if c.source != f || c.target != f {
                return Err(Error::axiom("identity 2-cell typing", self.base.arrow(f).name.clone()));
            }
        }
        // vertical composition: exactly the composable pairs, typed, unital, associative
        let mut expected = 0;
        for s in 0..self.cells.len() {
            for &t in &self.from1[self.cells[s].target] {
                expected += 1;
                let Some(&r) = self.vcomp.get(&(s, t)) else {
                    return Err(Error::axiom("vertical composition total", self.pair_name(s, t)));
                };
                if r >= self.cells.len()
                    || self.cells[r].source != self.cells[s].source
                    || self.cells[r].target != self.cells[t].target
                {
                    return Err(Error::axiom("vertical composite typing", self.pair_name(s, t)));
                }
            }
        }
        if expected != self.vcomp.len() {
            return Err(Error::axiom(
                "vertical composition defined only on composable pairs",
                format!("{} entries for {} pairs", self.vcomp.len(), expected),
            ));
        }
        for (s, c) in self.cells.iter().enumerate() {
            if self.vcomp[&(self.id2[c.source], s)] != s || self.vcomp[&(s, self.id2[c.target])] != s {
                return Err(Error::axiom("vertical unit law", c.name.clone()));
            }
        }
        for s in 0..self.cells.len() {
            for &t in &self.from1[self.cells[s].target] {
                let st = self.vcomp[&(s, t)];
                for &u in &self.from1[self.cells[t].target] {
                    if self.vcomp[&(st, u)] != self.vcomp[&(s, self.vcomp[&(t, u)])] {
                        return Err(Error::axiom(
                            "vertical associativity",
                            format!("({}, {}, {})", self.cells[s].name, self.cells[t].name, self.cells[u].name),
                        ));
                    }
                }
            }
        }
        // horizontal composition
        let n0 = self.base.num_objects();
        let at = |x: usize, y: usize| self.cells_between.get(&(x, y)).map(Vec::as_slice).unwrap_or(&[]);
        let mut expected = 0;
        for x in 0..n0 {
            for y in 0..n0 {
                for &s in at(x, y) {
                    for z in 0..n0 {
                        for &t in at(y, z) {
                            expected += 1;
                            let Some(&r) = self.hcomp.get(&(s, t)) else {
                                return Err(Error::axiom("horizontal composition total", self.pair_name(s, t)));
                            };
                            let src = self.base.compose(self.cells[s].source, self.cells[t].source);
                            let tgt = self.base.compose(self.cells[s].target, self.cells[t].target);
                            if r >= self.cells.len()
                                || Some(self.cells[r].source) != src
                                || Some(self.cells[r].target) != tgt
                            {
                                return Err(Error::axiom("horizontal composite typing", self.pair_name(s, t)));
                            }
                        }
                    }
                }
            }
        }
        if expected != self.hcomp.len() {
            return Err(Error::axiom(
                "horizontal composition defined only on composable pairs",
                format!("{} entries for {} pairs", self.hcomp.len(), expected),
            ));
        }
        for x in 0..n0 {
            let unit = self.id2[self.base.identity(x)];
            for y in 0..n0 {
                for &s in at(x, y) {
                    if self.hcomp[&(unit, s)] != s {
                        return Err(Error::axiom("horizontal unit law", self.cells[s].name.clone()));
                    }
                }
                for &s in at(y, x) {
                    if self.hcomp[&(s, unit)] != s {
                        return Err(Error::axiom("horizontal unit law", self.cells[s].name.clone()));
                    }
                }
            }
        }
        for (&(f, g), &h) in self.base.composition_table() {
            if self.hcomp[&(self.id2[f], self.id2[g])] != self.id2[h] {
                return Err(Error::axiom(
                    "horizontal composition preserves identities",
                    format!("({}, {})", self.base.arrow(f).name, self.base.arrow(g).name),
                ));
            }
        }
        for x in 0..n0 {
            for y in 0..n0 {
                for &s in at(x, y) {
                    for z in 0..n0 {
                        for &t in at(y, z) {
                            let st = self.hcomp[&(s, t)];
                            for w in 0..n0 {
                                for &u in at(z, w) {
                                    if self.hcomp[&(st, u)] != self.hcomp[&(s, self.hcomp[&(t, u)])] {
                                        return Err(Error::axiom(
                                            "horizontal associativity",
                                            format!(
                                                "({}, {}, {})",
                                                self.cells[s].name, self.cells[t].name, self.cells[u].name
                                            ),
                                        ));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        // interchange: (s;s') * (t;t') = (s*t);(s'*t')
        for x in 0..n0 {
            for y in 0..n0 {
                let left = at(x, y);
                for &s in left {
                    for &s2 in &self.from1[self.cells[s].target] {
                        let ss = self.vcomp[&(s, s2)];
                        for z in 0..n0 {
                            for &t in at(y, z) {
                                let st = self.hcomp[&(s, t)];
                                for &t2 in &self.from1[self.cells[t].target] {
                                    let lhs = self.hcomp[&(ss, self.vcomp[&(t, t2)])];
                                    let rhs = self.vcomp[&(st, self.hcomp[&(s2, t2)])];
                                    if lhs != rhs {
                                        return Err(Error::axiom(
                                            "interchange",
                                            format!(
                                                "({}, {}; {}, {})",
                                                self.cells[s].name,
                                                self.cells[s2].name,
                                                self.cells[t].name,
                                                self.cells[t2].name
                                            ),
                                        ));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn check_names(&self) -> Result<()> {
        index_names("object", self.base.object_names().iter())?;
        index_names("1-cell", self.base.arrows().iter().map(|a| &a.name))?;
        index_names("2-cell", self.cells.iter().map(|c| &c.name))?;
        Ok(())
    }

    fn pair_name(&self, s: usize, t: usize) -> String {
        format!("({}, {})", self.cells[s].name, self.cells[t].name)
    }

    pub fn underlying(&self) -> &Arc<FinCategory> {
        &self.base
    }

    pub fn num_objects(&self) -> usize {
        self.base.num_objects()
    }

    pub fn num_one_cells(&self) -> usize {
        self.base.num_arrows()
    }

    pub fn num_two_cells(&self) -> usize {
        self.cells.len()
    }

    /// `(objects, 1-cells, 2-cells)`
    pub fn counts(&self) -> (usize, usize, usize) {
        (self.num_objects(), self.num_one_cells(), self.num_two_cells())
    }

    pub fn object_name(&self, x: usize) -> &str {
        self.base.object_name(x)
    }

    pub fn one_cell(&self, f: usize) -> &Arrow {
        self.base.arrow(f)
    }

    pub fn one_cell_name(&self, f: usize) -> &str {
        &self.base.arrow(f).name
    }

    pub fn two_cell(&self, s: usize) -> &Cell {
        &self.cells[s]
    }

    pub fn two_cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn two_cell_name(&self, s: usize) -> &str {
        &self.cells[s].name
    }

    pub fn id1(&self, x: usize) -> usize {
        self.base.identity(x)
    }

    pub fn id2(&self, f: usize) -> usize {
        self.id2[f]
    }

    pub fn is_identity1(&self, f: usize) -> bool {
        self.base.is_identity(f)
    }

    pub fn is_identity2(&self, s: usize) -> bool {
        self.identity2_of[s].is_some()
    }

    pub fn src1(&self, f: usize) -> usize {
        self.base.source(f)
    }

    pub fn tgt1(&self, f: usize) -> usize {
        self.base.target(f)
    }

    pub fn src2(&self, s: usize) -> usize {
        self.cells[s].source
    }

    pub fn tgt2(&self, s: usize) -> usize {
        self.cells[s].target
    }

    /// Source object of a 2-cell.
    pub fn src0(&self, s: usize) -> usize {
        self.base.source(self.cells[s].source)
    }

    /// Target object of a 2-cell.
    pub fn tgt0(&self, s: usize) -> usize {
        self.base.target(self.cells[s].source)
    }

    pub fn comp1(&self, f: usize, g: usize) -> Option<usize> {
        self.base.compose(f, g)
    }

    pub fn vcomp(&self, s: usize, t: usize) -> Option<usize> {
        self.vcomp.get(&(s, t)).copied()
    }

    pub fn hcomp(&self, s: usize, t: usize) -> Option<usize> {
        self.hcomp.get(&(s, t)).copied()
    }

    pub fn vcomp_table(&self) -> &HashMap<(usize, usize), usize> {
        &self.vcomp
    }

    pub fn hcomp_table(&self) -> &HashMap<(usize, usize), usize> {
        &self.hcomp
    }

    pub fn hom1(&self, x: usize, y: usize) -> &[usize] {
        self.base.hom(x, y)
    }

    pub fn hom2(&self, f: usize, g: usize) -> &[usize] {
        self.hom2.get(&(f, g)).map(Vec::as_slice).unwrap_or(&[])
    }

    /// 2-cells whose source 1-cell is `f`.
    pub fn cells_from(&self, f: usize) -> &[usize] {
        &self.from1[f]
    }

    /// All 2-cells between 1-cells `x → y`.
    pub fn cells_between(&self, x: usize, y: usize) -> &[usize] {
        self.cells_between.get(&(x, y)).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn find_object(&self, name: &str) -> Option<usize> {
        self.base.find_object(name)
    }

    pub fn find_one_cell(&self, name: &str) -> Option<usize> {
        self.base.find_arrow(name)
    }

    pub fn find_two_cell(&self, name: &str) -> Option<usize> {
        self.cells.iter().position(|c| c.name == name)
    }

    /// Left whiskering `f * s`: the 2-cell `f;src(s) ⇒ f;tgt(s)`.
    pub fn whisker_left(&self, f: usize, s: usize) -> Option<usize> {
        self.hcomp(self.id2[f], s)
    }

    /// Right whiskering `s * g`.
    pub fn whisker_right(&self, s: usize, g: usize) -> Option<usize> {
        self.hcomp(s, self.id2[g])
    }

    /// Vertical inverse of a 2-cell, if it exists.
    pub fn inverse2(&self, s: usize) -> Option<usize> {
        let c = &self.cells[s];
        self.hom2(c.target, c.source).iter().copied().find(|&t| {
            self.vcomp[&(s, t)] == self.id2[c.source] && self.vcomp[&(t, s)] == self.id2[c.target]
        })
    }

    pub fn is_invertible2(&self, s: usize) -> bool {
        self.inverse2(s).is_some()
    }

    /// Every 2-cell is an identity.
    pub fn is_locally_discrete(&self) -> bool {
        self.identity2_of.iter().all(Option::is_some)
    }

    /// Exactly one 2-cell between every pair of parallel 1-cells.
    pub fn is_locally_contractible(&self) -> bool {
        let n0 = self.num_objects();
        for x in 0..n0 {
            for y in 0..n0 {
                for &f in self.hom1(x, y) {
                    for &g in self.hom1(x, y) {
                        if self.hom2(f, g).len() != 1 {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// The locally discrete 2-category on a category.
    pub fn locally_discrete(base: Arc<FinCategory>) -> Self {
        let cells: Vec<Cell> = base
            .arrows()
            .iter()
            .enumerate()
            .map(|(f, a)| Cell {
                name: format!("1_{}", a.name),
                source: f,
                target: f,
            })
            .collect();
        let id2: Vec<usize> = (0..base.num_arrows()).collect();
        let vcomp = (0..base.num_arrows()).map(|f| ((f, f), f)).collect();
        let hcomp = base.composition_table().clone();
        Self::from_parts(base, uniquify(cells, |c| &mut c.name), id2, vcomp, hcomp)
            .expect("locally discrete assembly is well-formed")
    }

    /// The discrete 2-category on the objects, with its inclusion.
    pub fn objects_only(self: &Arc<Self>) -> (Arc<Fin2Category>, super::TwoFunctor) {
        let n0 = self.num_objects();
        let arrows = (0..n0)
            .map(|x| Arrow {
                name: self.one_cell_name(self.id1(x)).to_string(),
                source: x,
                target: x,
            })
            .collect();
        let comp = (0..n0).map(|x| ((x, x), x)).collect();
        let objects = (0..n0).map(|x| self.object_name(x).to_string()).collect();
        let base = FinCategory::from_parts(objects, arrows, (0..n0).collect(), comp)
            .expect("discrete category assembly is well-formed");
        let cells = (0..n0)
            .map(|x| Cell {
                name: self.two_cell_name(self.id2(self.id1(x))).to_string(),
                source: x,
                target: x,
            })
            .collect();
        let disc = Arc::new(
            Self::from_parts(
                Arc::new(base),
                cells,
                (0..n0).collect(),
                (0..n0).map(|x| ((x, x), x)).collect(),
                (0..n0).map(|x| ((x, x), x)).collect(),
            )
            .expect("discrete 2-category assembly is well-formed"),
        );
        let inc = super::TwoFunctor {
            domain: disc.clone(),
            codomain: self.clone(),
            objects: (0..n0).collect(),
            one_cells: (0..n0).map(|x| self.id1(x)).collect(),
            two_cells: (0..n0).map(|x| self.id2(self.id1(x))).collect(),
        };
        (disc, inc)
    }

    /// Name-addressed tables, in index order.
    pub fn to_raw(&self) -> RawTables {
        let oname = |x: usize| self.object_name(x).to_string();
        let fname = |f: usize| self.one_cell_name(f).to_string();
        let sname = |s: usize| self.two_cell_name(s).to_string();
        let mut comp1: Vec<_> = self.base.composition_table().iter().map(|(&(a, b), &c)| (a, b, c)).collect();
        comp1.sort_unstable();
        let mut vcomp: Vec<_> = self.vcomp.iter().map(|(&(a, b), &c)| (a, b, c)).collect();
        vcomp.sort_unstable();
        let mut hcomp: Vec<_> = self.hcomp.iter().map(|(&(a, b), &c)| (a, b, c)).collect();
        hcomp.sort_unstable();
        RawTables {
            objects: (0..self.num_objects()).map(oname).collect(),
            one_cells: self
                .base
                .arrows()
                .iter()
                .map(|a| RawCell {
                    name: a.name.clone(),
                    source: oname(a.source),
                    target: oname(a.target),
                })
                .collect(),
            two_cells: self
                .cells
                .iter()
                .map(|c| RawCell {
                    name: c.name.clone(),
                    source: fname(c.source),
                    target: fname(c.target),
                })
                .collect(),
            identities1: (0..self.num_objects()).map(|x| (oname(x), fname(self.id1(x)))).collect(),
            identities2: (0..self.num_one_cells()).map(|f| (fname(f), sname(self.id2[f]))).collect(),
            comp1: comp1.into_iter().map(|(a, b, c)| (fname(a), fname(b), fname(c))).collect(),
            vcomp: vcomp.into_iter().map(|(a, b, c)| (sname(a), sname(b), sname(c))).collect(),
            hcomp: hcomp.into_iter().map(|(a, b, c)| (sname(a), sname(b), sname(c))).collect(),
        }
    }

    /// Same tables up to cell names.
    pub fn same_shape(&self, other: &Fin2Category) -> bool {
        let b = (&self.base, &other.base);
        b.0.num_objects() == b.1.num_objects()
            && b.0.identities() == b.1.identities()
            && b.0.arrows().len() == b.1.arrows().len()
            && b.0
                .arrows()
                .iter()
                .zip(b.1.arrows())
                .all(|(x, y)| x.source == y.source && x.target == y.target)
            && b.0.composition_table() == b.1.composition_table()
            && self.cells.len() == other.cells.len()
            && self
                .cells
                .iter()
                .zip(&other.cells)
                .all(|(x, y)| x.source == y.source && x.target == y.target)
            && self.id2 == other.id2
            && self.vcomp == other.vcomp
            && self.hcomp == other.hcomp
    }
}

/// Validating constructor from raw tables.
pub fn build_fin_2category(raw: &RawTables) -> Result<Fin2Category> {
    Fin2Category::from_raw(raw)
}

fn index_names<'a>(kind: &str, names: impl Iterator<Item = &'a String>) -> Result<HashMap<String, usize>> {
    let mut ix = HashMap::new();
    for (i, n) in names.enumerate() {
        if ix.insert(n.clone(), i).is_some() {
            return Err(Error::malformed(format!("duplicate {kind} name `{n}`")));
        }
    }
    Ok(ix)
}

/// Makes names unique by suffixing `#k` to repeats, keeping the first occurrence.
pub(crate) fn uniquify<T>(mut items: Vec<T>, mut name: impl FnMut(&mut T) -> &mut String) -> Vec<T> {
    let mut seen: HashSet<String> = HashSet::with_capacity(items.len());
    for item in items.iter_mut() {
        let n = name(item);
        if !seen.insert(n.clone()) {
            let mut k = 2;
            loop {
                let candidate = format!("{n}#{k}");
                if seen.insert(candidate.clone()) {
                    *n = candidate;
                    break;
                }
                k += 1;
            }
        }
    }
    items
}

/// Builds locally thin 2-categories: between two parallel 1-cells there is at
/// most one 2-cell, so the 2-cells are the pairs of a preorder on each hom.
///
/// The preorder is the closure of the generating 2-cells under identities,
/// vertical composition and whiskering. Identity 1-cells and their
/// composites are added automatically.
#[derive(Clone, Debug, Default)]
pub struct ThinBuilder {
    objects: Vec<String>,
    one_cells: Vec<(String, String, String)>,
    composites: Vec<(String, String, String)>,
    generators: Vec<(String, String, String)>,
}

impl ThinBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn object(mut self, name: &str) -> Self {
        self.objects.push(name.to_string());
        self
    }

    pub fn objects(mut self, names: &[&str]) -> Self {
        self.objects.extend(names.iter().map(|s| s.to_string()));
        self
    }

    /// A non-identity 1-cell.
    pub fn arrow(mut self, name: &str, source: &str, target: &str) -> Self {
        self.one_cells.push((name.into(), source.into(), target.into()));
        self
    }

    /// `f;g = h` for non-identity `f`, `g`. `h` may name an identity `1_x`.
    pub fn composite(mut self, f: &str, g: &str, h: &str) -> Self {
        self.composites.push((f.into(), g.into(), h.into()));
        self
    }

    /// A generating 2-cell `name: source ⇒ target`.
    pub fn cell(mut self, name: &str, source: &str, target: &str) -> Self {
        self.generators.push((name.into(), source.into(), target.into()));
        self
    }

    pub fn build(self) -> Result<Fin2Category> {
        let n0 = self.objects.len();
        let obj = |n: &str| {
            self.objects
                .iter()
                .position(|o| o == n)
                .ok_or_else(|| Error::malformed(format!("unknown object `{n}`")))
        };
        let mut arrows: Vec<Arrow> = self
            .objects
            .iter()
            .enumerate()
            .map(|(x, o)| Arrow {
                name: format!("1_{o}"),
                source: x,
                target: x,
            })
            .collect();
        for (n, s, t) in &self.one_cells {
            arrows.push(Arrow {
                name: n.clone(),
                source: obj(s)?,
                target: obj(t)?,
            });
        }
        let arr = |n: &str| {
            arrows
                .iter()
                .position(|a| a.name == n)
                .ok_or_else(|| Error::malformed(format!("unknown 1-cell `{n}`")))
        };
        let mut comp = HashMap::new();
        for (f, a) in arrows.iter().enumerate() {
            comp.insert((a.source, f), f);
            comp.insert((f, a.target), f);
        }
        for (f, g, h) in &self.composites {
            let (f, g, h) = (arr(f)?, arr(g)?, arr(h)?);
            if arrows[f].target != arrows[g].source {
                return Err(Error::malformed(format!(
                    "composite of non-composable `{}` and `{}`",
                    arrows[f].name, arrows[g].name
                )));
            }
            comp.insert((f, g), h);
        }
        for f in n0..arrows.len() {
            for g in n0..arrows.len() {
                if arrows[f].target == arrows[g].source && !comp.contains_key(&(f, g)) {
                    return Err(Error::malformed(format!(
                        "missing composite of `{}` and `{}`",
                        arrows[f].name, arrows[g].name
                    )));
                }
            }
        }
        let base = Arc::new(FinCategory::new(self.objects.clone(), arrows, (0..n0).collect(), comp)?);
        let n1 = base.num_arrows();
        // closure of the preorder
        let mut rel: HashSet<(usize, usize)> = (0..n1).map(|f| (f, f)).collect();
        let mut names: HashMap<(usize, usize), String> = HashMap::new();
        for (n, s, t) in &self.generators {
            let key = (base.find_arrow(s).ok_or_else(|| Error::malformed(format!("unknown 1-cell `{s}`")))?,
                       base.find_arrow(t).ok_or_else(|| Error::malformed(format!("unknown 1-cell `{t}`")))?);
            if names.insert(key, n.clone()).is_some() || key.0 == key.1 {
                return Err(Error::malformed(format!("generator `{n}` duplicates an existing 2-cell")));
            }
            rel.insert(key);
        }
        loop {
            let mut added = Vec::new();
            for &(f, g) in &rel {
                for &(g2, h) in &rel {
                    if g2 == g && !rel.contains(&(f, h)) {
                        added.push((f, h));
                    }
                }
                let (x, y) = (base.source(f), base.target(f));
                for &w in base.incoming(x) {
                    let p = (base.compose(w, f).unwrap(), base.compose(w, g).unwrap());
                    if !rel.contains(&p) {
                        added.push(p);
                    }
                }
                for &w in base.outgoing(y) {
                    let p = (base.compose(f, w).unwrap(), base.compose(g, w).unwrap());
                    if !rel.contains(&p) {
                        added.push(p);
                    }
                }
            }
            if added.is_empty() {
                break;
            }
            rel.extend(added);
        }
        let mut pairs: Vec<(usize, usize)> = rel.into_iter().collect();
        pairs.sort_unstable_by_key(|&(f, g)| (f != g, f, g));
        let index: HashMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        let cells: Vec<Cell> = pairs
            .iter()
            .map(|&(f, g)| Cell {
                name: if f == g {
                    format!("1_{}", base.arrow(f).name)
                } else {
                    names
                        .get(&(f, g))
                        .cloned()
                        .unwrap_or_else(|| format!("[{}=>{}]", base.arrow(f).name, base.arrow(g).name))
                },
                source: f,
                target: g,
            })
            .collect();
        let id2: Vec<usize> = (0..n1).map(|f| index[&(f, f)]).collect();
        let mut vcomp = HashMap::new();
        let mut hcomp = HashMap::new();
        for (i, &(f, g)) in pairs.iter().enumerate() {
            for (j, &(g2, h)) in pairs.iter().enumerate() {
                if g2 == g {
                    vcomp.insert((i, j), index[&(f, h)]);
                }
                if base.target(f) == base.source(g2) {
                    let key = (base.compose(f, g2).unwrap(), base.compose(g, h).unwrap());
                    let Some(&r) = index.get(&key) else {
                        return Err(Error::malformed("thin closure is not closed under horizontal composition"));
                    };
                    hcomp.insert((i, j), r);
                }
            }
        }
        let c = Fin2Category::from_parts(base, cells, id2, vcomp, hcomp)?;
        c.validate()?;
        Ok(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s2() -> Fin2Category {
        ThinBuilder::new()
            .objects(&["0", "1"])
            .arrow("f", "0", "1")
            .arrow("g", "0", "1")
            .cell("alpha", "f", "g")
            .build()
            .unwrap()
    }

    #[test]
    fn thin_builder_counts() {
        let c = s2();
        assert_eq!(c.counts(), (2, 4, 5));
        assert!(!c.is_locally_contractible());
        assert!(!c.is_locally_discrete());
    }

    #[test]
    fn raw_round_trip_preserves_tables() {
        let c = s2();
        let again = Fin2Category::from_raw(&c.to_raw()).unwrap();
        assert_eq!(c, again);
    }

    #[test]
    fn broken_interchange_is_detected() {
        // two objects, nonidentity parallel f, g with a 2-cell alpha in both directions
        // forming a non-commuting square in a one-object hom is hard to break with the
        // builder, so corrupt a whiskering entry of a valid table instead.
        let c = ThinBuilder::new()
            .objects(&["0", "1", "2"])
            .arrow("f", "0", "1")
            .arrow("g", "0", "1")
            .arrow("h", "1", "2")
            .arrow("hf", "0", "2")
            .arrow("hg", "0", "2")
            .composite("f", "h", "hf")
            .composite("g", "h", "hg")
            .cell("alpha", "f", "g")
            .build()
            .unwrap();
        let mut raw = c.to_raw();
        // alpha * 1_h should be [hf=>hg]; send it to the identity of hf instead
        let idx = raw
            .hcomp
            .iter()
            .position(|(a, b, _)| a == "alpha" && b == "1_h")
            .unwrap();
        raw.hcomp[idx].2 = "1_hf".into();
        let err = Fin2Category::from_raw(&raw).unwrap_err();
        assert!(matches!(err, Error::AxiomViolation { .. }), "{err:?}");
    }

    #[test]
    fn duplicate_names_are_malformed() {
        let mut raw = s2().to_raw();
        raw.two_cells[1].name = raw.two_cells[0].name.clone();
        assert!(matches!(Fin2Category::from_raw(&raw), Err(Error::MalformedSpec(_))));
    }

    #[test]
    fn locally_discrete_underlying_round_trip() {
        let c = s2();
        let ld = Fin2Category::locally_discrete(c.underlying().clone());
        ld.validate().unwrap();
        assert_eq!(**ld.underlying(), **c.underlying());
        assert!(ld.is_locally_discrete());
    }

    #[test]
    fn inverse_of_invertible_cell() {
        let c = ThinBuilder::new()
            .objects(&["0", "1"])
            .arrow("f", "0", "1")
            .arrow("g", "0", "1")
            .cell("phi", "f", "g")
            .cell("psi", "g", "f")
            .build()
            .unwrap();
        let phi = c.find_two_cell("phi").unwrap();
        let psi = c.find_two_cell("psi").unwrap();
        assert_eq!(c.inverse2(phi), Some(psi));
        assert!(c.is_locally_contractible());
    }
}
