//! Orthogonal factorisation systems: (bo, ff) on finite categories and
//! (boba, lff) on finite 2-categories, with the unique-filler solver.

use std::collections::HashMap;
use std::ops::ControlFlow;
use std::sync::Arc;

use serde::Serialize;

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::kernel::{
    for_each_2functor, invert_bijection, is_bijection, same, uniquify, Arrow, Cell, Fin2Category, FinCategory,
    Functor, TwoFunctor,
};

/// Bijective on objects and on 1-cells.
pub fn is_boba(f: &TwoFunctor) -> bool {
    is_bijection(&f.objects, f.codomain.num_objects()) && is_bijection(&f.one_cells, f.codomain.num_one_cells())
}

/// Each hom functor is fully faithful: between every pair of parallel
/// 1-cells the 2-cell map is a bijection.
pub fn is_lff(f: &TwoFunctor) -> bool {
    let (d, c) = (&f.domain, &f.codomain);
    for x in 0..d.num_objects() {
        for y in 0..d.num_objects() {
            for &g in d.hom1(x, y) {
                for &h in d.hom1(x, y) {
                    let target = c.hom2(f.one_cells[g], f.one_cells[h]);
                    let source = d.hom2(g, h);
                    if source.len() != target.len() {
                        return false;
                    }
                    let mut seen = vec![false; target.len()];
                    for &s in source {
                        match target.iter().position(|&t| t == f.two_cells[s]) {
                            Some(p) if !seen[p] => seen[p] = true,
                            _ => return false,
                        }
                    }
                }
            }
        }
    }
    true
}

pub fn is_bo(f: &Functor) -> bool {
    f.is_bijective_on_objects()
}

pub fn is_ff(f: &Functor) -> bool {
    f.is_fully_faithful()
}

/// The (bo, ff) factorisation of a functor `F: C → D`: the middle has the
/// objects of `C` and hom-sets `D(Fx, Fy)`.
pub fn factor_functor(f: &Functor) -> (Functor, Arc<FinCategory>, Functor) {
    let (c, d) = (&f.domain, &f.codomain);
    let n0 = c.num_objects();
    let mut arrows = Vec::new();
    let mut index = HashMap::new();
    for x in 0..n0 {
        for y in 0..n0 {
            for &h in d.hom(f.objects[x], f.objects[y]) {
                index.insert((x, y, h), arrows.len());
                arrows.push((
                    Arrow {
                        name: d.arrow(h).name.clone(),
                        source: x,
                        target: y,
                    },
                    h,
                ));
            }
        }
    }
    let mut comp = HashMap::new();
    for (i, (a, h)) in arrows.iter().enumerate() {
        for z in 0..n0 {
            for &k in d.hom(f.objects[a.target], f.objects[z]) {
                comp.insert((i, index[&(a.target, z, k)]), index[&(a.source, z, d.compose(*h, k).unwrap())]);
            }
        }
    }
    let identities = (0..n0).map(|x| index[&(x, x, d.identity(f.objects[x]))]).collect();
    let images: Vec<usize> = arrows.iter().map(|(_, h)| *h).collect();
    let named = uniquify(arrows.into_iter().map(|(a, _)| a).collect(), |a| &mut a.name);
    let middle = Arc::new(
        FinCategory::from_parts(c.object_names().to_vec(), named, identities, comp)
            .expect("factorisation middle is well-formed"),
    );
    let e = Functor {
        domain: c.clone(),
        codomain: middle.clone(),
        objects: (0..n0).collect(),
        arrows: (0..c.num_arrows())
            .map(|g| index[&(c.source(g), c.target(g), f.arrows[g])])
            .collect(),
    };
    let m = Functor {
        domain: middle.clone(),
        codomain: d.clone(),
        objects: f.objects.clone(),
        arrows: images,
    };
    (e, middle, m)
}

/// The lff half of the factorisation of a 2-functor whose domain is known
/// only through its underlying category.
///
/// The middle has the objects and 1-cells of `base`, and between parallel
/// `g, h` the 2-cells `D(Fg, Fh)`, named `g=>h:σ`. The second component maps
/// `(g, h, σ)` to its cell index.
pub fn factor_underlying(
    f: &Functor,
    d: &Arc<Fin2Category>,
    limits: &Limits,
) -> Result<(Arc<Fin2Category>, TwoFunctor, HashMap<(usize, usize, usize), usize>)> {
    let base = &f.domain;
    let n0 = base.num_objects();
    let mut cells = Vec::new();
    let mut data = Vec::new();
    let mut index = HashMap::new();
    let mut between: Vec<Vec<usize>> = vec![Vec::new(); n0 * n0];
    let mut from: Vec<Vec<usize>> = vec![Vec::new(); base.num_arrows()];
    for g in 0..base.num_arrows() {
        let (x, y) = (base.source(g), base.target(g));
        for &h in base.hom(x, y) {
            for &s in d.hom2(f.arrows[g], f.arrows[h]) {
                let i = cells.len();
                index.insert((g, h, s), i);
                between[x * n0 + y].push(i);
                from[g].push(i);
                cells.push(Cell {
                    name: format!("{}=>{}:{}", base.arrow(g).name, base.arrow(h).name, d.two_cell_name(s)),
                    source: g,
                    target: h,
                });
                data.push(s);
            }
        }
        limits.check_cells("factorisation 2-cells", cells.len())?;
    }
    let id2 = (0..base.num_arrows()).map(|g| index[&(g, g, d.id2(f.arrows[g]))]).collect();
    let mut vcomp = HashMap::new();
    for (i, c) in cells.iter().enumerate() {
        for &j in &from[c.target] {
            let r = index[&(c.source, cells[j].target, d.vcomp(data[i], data[j]).unwrap())];
            vcomp.insert((i, j), r);
        }
    }
    let mut hcomp = HashMap::new();
    for x in 0..n0 {
        for y in 0..n0 {
            for &i in &between[x * n0 + y] {
                for z in 0..n0 {
                    for &j in &between[y * n0 + z] {
                        let g = base.compose(cells[i].source, cells[j].source).unwrap();
                        let h = base.compose(cells[i].target, cells[j].target).unwrap();
                        let s = d.hcomp(data[i], data[j]).unwrap();
                        hcomp.insert((i, j), index[&(g, h, s)]);
                    }
                }
            }
        }
    }
    let cells = uniquify(cells, |c| &mut c.name);
    let middle = Arc::new(Fin2Category::from_parts(base.clone(), cells, id2, vcomp, hcomp)?);
    let m = TwoFunctor {
        domain: middle.clone(),
        codomain: d.clone(),
        objects: f.objects.clone(),
        one_cells: f.arrows.clone(),
        two_cells: data,
    };
    Ok((middle, m, index))
}

/// The (boba, lff) factorisation `F = m ∘ e`.
#[derive(Clone, Debug)]
pub struct Factorisation {
    pub e: TwoFunctor,
    pub middle: Arc<Fin2Category>,
    pub m: TwoFunctor,
}

pub fn factor_2functor(f: &TwoFunctor, limits: &Limits) -> Result<Factorisation> {
    let (middle, m, index) = factor_underlying(&f.underlying(), &f.codomain, limits)?;
    let a = &f.domain;
    let e = TwoFunctor {
        domain: a.clone(),
        codomain: middle.clone(),
        objects: (0..a.num_objects()).collect(),
        one_cells: (0..a.num_one_cells()).collect(),
        two_cells: (0..a.num_two_cells())
            .map(|s| index[&(a.src2(s), a.tgt2(s), f.two_cells[s])])
            .collect(),
    };
    Ok(Factorisation { e, middle, m })
}

/// A left leg of a lifting square: either a full 2-functor, or just its
/// action on underlying categories (objects and 1-cells).
#[derive(Clone, Debug)]
pub enum LeftLegData {
    Full(TwoFunctor),
    UnderlyingOnly {
        functor: Functor,
        codomain: Arc<Fin2Category>,
    },
}

impl LeftLegData {
    pub fn underlying(&self) -> Functor {
        match self {
            LeftLegData::Full(f) => f.underlying(),
            LeftLegData::UnderlyingOnly { functor, .. } => functor.clone(),
        }
    }

    pub fn codomain(&self) -> &Arc<Fin2Category> {
        match self {
            LeftLegData::Full(f) => &f.codomain,
            LeftLegData::UnderlyingOnly { codomain, .. } => codomain,
        }
    }

    pub fn full(&self) -> Option<&TwoFunctor> {
        match self {
            LeftLegData::Full(f) => Some(f),
            LeftLegData::UnderlyingOnly { .. } => None,
        }
    }
}

/// ```text
///   A --top--> C
///   |          |
///   e          m
///   v          v
///   B -bottom> D
/// ```
#[derive(Clone, Debug)]
pub struct LiftingSquare {
    pub e: LeftLegData,
    pub m: TwoFunctor,
    pub top: LeftLegData,
    pub bottom: TwoFunctor,
}

impl LiftingSquare {
    /// `m ∘ top = bottom ∘ e`, on every cell both legs know about.
    pub fn check_commutes(&self) -> Result<()> {
        let (e, top) = (self.e.underlying(), self.top.underlying());
        if e.domain != top.domain {
            return Err(Error::NonCommuting("e and top have different domains".into()));
        }
        if !same(self.e.codomain(), &self.bottom.domain) || !same(self.top.codomain(), &self.m.domain) {
            return Err(Error::NonCommuting("square legs do not match up".into()));
        }
        for x in 0..e.domain.num_objects() {
            if self.m.objects[top.objects[x]] != self.bottom.objects[e.objects[x]] {
                return Err(Error::NonCommuting(format!("object {}", e.domain.object_name(x))));
            }
        }
        for f in 0..e.domain.num_arrows() {
            if self.m.one_cells[top.arrows[f]] != self.bottom.one_cells[e.arrows[f]] {
                return Err(Error::NonCommuting(format!("1-cell {}", e.domain.arrow(f).name)));
            }
        }
        if let (Some(e), Some(top)) = (self.e.full(), self.top.full()) {
            for s in 0..e.domain.num_two_cells() {
                if self.m.two_cells[top.two_cells[s]] != self.bottom.two_cells[e.two_cells[s]] {
                    return Err(Error::NonCommuting(format!("2-cell {}", e.domain.two_cell_name(s))));
                }
            }
        }
        Ok(())
    }
}

/// The unique diagonal filler `d: B → C` with `d ∘ e = top` and `m ∘ d = bottom`.
pub fn solve_lifting(sq: &LiftingSquare) -> Result<TwoFunctor> {
    sq.check_commutes()?;
    let e = sq.e.underlying();
    let top = sq.top.underlying();
    let b = sq.e.codomain().clone();
    let c = sq.m.domain.clone();
    if !is_bijection(&e.objects, b.num_objects()) || !is_bijection(&e.arrows, b.num_one_cells()) {
        return Err(Error::NotOrthogonal("left leg is not bijective on objects and 1-cells".into()));
    }
    let (inv0, inv1) = (invert_bijection(&e.objects), invert_bijection(&e.arrows));
    let objects: Vec<usize> = inv0.iter().map(|&x| top.objects[x]).collect();
    let one_cells: Vec<usize> = inv1.iter().map(|&f| top.arrows[f]).collect();
    let mut two_cells = Vec::with_capacity(b.num_two_cells());
    for s in 0..b.num_two_cells() {
        let (g, h) = (one_cells[b.src2(s)], one_cells[b.tgt2(s)]);
        let want = sq.bottom.two_cells[s];
        let mut pre = c.hom2(g, h).iter().filter(|&&t| sq.m.two_cells[t] == want);
        let (Some(&t), None) = (pre.next(), pre.next()) else {
            return Err(Error::NotOrthogonal(format!(
                "2-cell {} has no unique preimage under the right leg",
                b.two_cell_name(s)
            )));
        };
        two_cells.push(t);
    }
    let d = TwoFunctor {
        domain: b,
        codomain: c,
        objects,
        one_cells,
        two_cells,
    };
    d.validate()
        .map_err(|err| Error::NotOrthogonal(format!("filler is not a 2-functor: {err}")))?;
    if let (Some(e), Some(top)) = (sq.e.full(), sq.top.full()) {
        if !e.then(&d)?.same_action(top) {
            return Err(Error::NotOrthogonal("upper triangle fails on 2-cells".into()));
        }
    }
    if !d.then(&sq.m)?.same_action(&sq.bottom) {
        return Err(Error::NotOrthogonal("lower triangle fails".into()));
    }
    Ok(d)
}

/// The unique filler of a (bo, ff) square of functors: `e: A → B` bijective
/// on objects, `m: C → D` fully faithful, `top: A → C`, `bottom: B → D`.
pub fn solve_lifting_bo_ff(e: &Functor, m: &Functor, top: &Functor, bottom: &Functor) -> Result<Functor> {
    if e.domain != top.domain || e.codomain != bottom.domain || top.codomain != m.domain || m.codomain != bottom.codomain
    {
        return Err(Error::NonCommuting("square legs do not match up".into()));
    }
    if e.then(bottom)? != top.then(m)? {
        return Err(Error::NonCommuting("m ∘ top differs from bottom ∘ e".into()));
    }
    if !is_bijection(&e.objects, e.codomain.num_objects()) {
        return Err(Error::NotOrthogonal("left leg is not bijective on objects".into()));
    }
    let b = &e.codomain;
    let c = &m.domain;
    let inv0 = invert_bijection(&e.objects);
    let objects: Vec<usize> = inv0.iter().map(|&x| top.objects[x]).collect();
    let mut arrows = Vec::with_capacity(b.num_arrows());
    for f in 0..b.num_arrows() {
        let want = bottom.arrows[f];
        let mut pre = c
            .hom(objects[b.source(f)], objects[b.target(f)])
            .iter()
            .filter(|&&g| m.arrows[g] == want);
        let (Some(&g), None) = (pre.next(), pre.next()) else {
            return Err(Error::NotOrthogonal(format!(
                "arrow {} has no unique preimage under the right leg",
                b.arrow(f).name
            )));
        };
        arrows.push(g);
    }
    let d = Functor {
        domain: b.clone(),
        codomain: c.clone(),
        objects,
        arrows,
    };
    d.validate()
        .map_err(|err| Error::NotOrthogonal(format!("filler is not a functor: {err}")))?;
    if e.then(&d)? != *top {
        return Err(Error::NotOrthogonal("upper triangle fails".into()));
    }
    Ok(d)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrthogonalityReport {
    pub probes: usize,
    /// Number of fillers found by exhaustive search, per probe square.
    pub fillers: Vec<usize>,
    /// The solver's filler agreed with the search on every probe that has one.
    pub solver_agrees: bool,
}

impl OrthogonalityReport {
    pub fn passed(&self) -> bool {
        self.solver_agrees && self.fillers.iter().all(|&n| n == 1)
    }
}

/// All commuting squares with the given full legs, up to `max` of them.
pub fn probe_squares(e: &TwoFunctor, m: &TwoFunctor, limits: &Limits, max: usize) -> Result<Vec<LiftingSquare>> {
    let mut tops = Vec::new();
    for_each_2functor(&e.domain, &m.domain, limits, |o, f, s| {
        tops.push(TwoFunctor {
            domain: e.domain.clone(),
            codomain: m.domain.clone(),
            objects: o.to_vec(),
            one_cells: f.to_vec(),
            two_cells: s.to_vec(),
        });
        ControlFlow::Continue(())
    })?;
    let mut out = Vec::new();
    for_each_2functor(&e.codomain, &m.codomain, limits, |o, f, s| {
        let bottom = TwoFunctor {
            domain: e.codomain.clone(),
            codomain: m.codomain.clone(),
            objects: o.to_vec(),
            one_cells: f.to_vec(),
            two_cells: s.to_vec(),
        };
        let be = e.then(&bottom).expect("composable by construction");
        for top in &tops {
            if out.len() >= max {
                return ControlFlow::Break(());
            }
            if top.then(m).expect("composable by construction").same_action(&be) {
                out.push(LiftingSquare {
                    e: LeftLegData::Full(e.clone()),
                    m: m.clone(),
                    top: LeftLegData::Full(top.clone()),
                    bottom: bottom.clone(),
                });
            }
        }
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// Counts fillers of each square by exhaustive search over all 2-functors
/// `B → C`, and compares with [`solve_lifting`].
pub fn check_orthogonality(squares: &[LiftingSquare], limits: &Limits) -> Result<OrthogonalityReport> {
    let mut fillers = Vec::with_capacity(squares.len());
    let mut solver_agrees = true;
    for sq in squares {
        let (Some(e), Some(top)) = (sq.e.full(), sq.top.full()) else {
            return Err(Error::UnsupportedInput("exhaustive filler search needs full legs".into()));
        };
        let mut found: Vec<TwoFunctor> = Vec::new();
        for_each_2functor(&e.codomain, &sq.m.domain, limits, |o, f, s| {
            let d = TwoFunctor {
                domain: e.codomain.clone(),
                codomain: sq.m.domain.clone(),
                objects: o.to_vec(),
                one_cells: f.to_vec(),
                two_cells: s.to_vec(),
            };
            let upper = e.then(&d).map(|x| x.same_action(top)).unwrap_or(false);
            let lower = d.then(&sq.m).map(|x| x.same_action(&sq.bottom)).unwrap_or(false);
            if upper && lower {
                found.push(d);
            }
            ControlFlow::Continue(())
        })?;
        match (solve_lifting(sq), found.as_slice()) {
            (Ok(d), [only]) => solver_agrees &= d.same_action(only),
            (Ok(_), _) => solver_agrees = false,
            (Err(_), [_]) => solver_agrees = false,
            (Err(_), _) => {}
        }
        fillers.push(found.len());
    }
    Ok(OrthogonalityReport {
        probes: squares.len(),
        fillers,
        solver_agrees,
    })
}
