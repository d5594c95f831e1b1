//! Ambient categories for the lifting engine: objects, morphisms, and an
//! orthogonal factorisation system with a filler solver.

use std::fmt::Debug;
use std::sync::Arc;

use crate::config::Limits;
use crate::error::Result;
use crate::kernel::{Fin2Category, FinCategory, Functor, TwoFunctor};
use crate::ofs::{
    factor_2functor, factor_functor, is_bo, is_boba, is_ff, is_lff, solve_lifting, solve_lifting_bo_ff,
    LeftLegData, LiftingSquare,
};

pub trait Ambient {
    type Obj: Clone + Debug;
    type Mor: Clone + Debug;

    fn name(&self) -> &'static str;
    /// A cheap key; equal objects have equal keys.
    fn key(&self, x: &Self::Obj) -> u64;
    fn obj_eq(&self, x: &Self::Obj, y: &Self::Obj) -> bool;
    fn describe(&self, x: &Self::Obj) -> String;

    fn dom(&self, f: &Self::Mor) -> Self::Obj;
    fn cod(&self, f: &Self::Mor) -> Self::Obj;
    fn identity(&self, x: &Self::Obj) -> Self::Mor;
    /// `f` then `g`.
    fn compose(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor>;
    fn mor_eq(&self, f: &Self::Mor, g: &Self::Mor) -> bool;
    /// The first cell on which two parallel morphisms differ.
    fn difference(&self, f: &Self::Mor, g: &Self::Mor) -> String;
    fn is_iso(&self, f: &Self::Mor) -> bool;

    /// `f = e;m` with `e` in the left class and `m` in the right class.
    fn factor(&self, f: &Self::Mor) -> Result<(Self::Mor, Self::Obj, Self::Mor)>;
    fn is_left(&self, f: &Self::Mor) -> bool;
    fn is_right(&self, f: &Self::Mor) -> bool;
    /// The unique `d` with `left;d = top` and `d;right = bottom`.
    fn fill(&self, left: &Self::Mor, right: &Self::Mor, top: &Self::Mor, bottom: &Self::Mor) -> Result<Self::Mor>;
}

/// Finite 2-categories and 2-functors with (boba, lff).
#[derive(Clone, Debug, Default)]
pub struct TwoCat {
    pub limits: Limits,
}

impl Ambient for TwoCat {
    type Obj = Arc<Fin2Category>;
    type Mor = TwoFunctor;

    fn name(&self) -> &'static str {
        "2-Cat with (boba, lff)"
    }

    fn key(&self, x: &Self::Obj) -> u64 {
        x.fingerprint()
    }

    fn obj_eq(&self, x: &Self::Obj, y: &Self::Obj) -> bool {
        Arc::ptr_eq(x, y) || x == y
    }

    fn describe(&self, x: &Self::Obj) -> String {
        let (a, b, c) = x.counts();
        format!("{a}/{b}/{c}")
    }

    fn dom(&self, f: &TwoFunctor) -> Self::Obj {
        f.domain.clone()
    }

    fn cod(&self, f: &TwoFunctor) -> Self::Obj {
        f.codomain.clone()
    }

    fn identity(&self, x: &Self::Obj) -> TwoFunctor {
        TwoFunctor::identity(x.clone())
    }

    fn compose(&self, f: &TwoFunctor, g: &TwoFunctor) -> Result<TwoFunctor> {
        f.then(g)
    }

    fn mor_eq(&self, f: &TwoFunctor, g: &TwoFunctor) -> bool {
        f == g
    }

    fn difference(&self, f: &TwoFunctor, g: &TwoFunctor) -> String {
        if !self.obj_eq(&f.domain, &g.domain) || !self.obj_eq(&f.codomain, &g.codomain) {
            return "different boundaries".into();
        }
        let d = &f.domain;
        if let Some(x) = (0..d.num_objects()).find(|&x| f.objects[x] != g.objects[x]) {
            return format!("object {}", d.object_name(x));
        }
        if let Some(h) = (0..d.num_one_cells()).find(|&h| f.one_cells[h] != g.one_cells[h]) {
            return format!("1-cell {}", d.one_cell_name(h));
        }
        match (0..d.num_two_cells()).find(|&s| f.two_cells[s] != g.two_cells[s]) {
            Some(s) => format!("2-cell {}", d.two_cell_name(s)),
            None => "none".into(),
        }
    }

    fn is_iso(&self, f: &TwoFunctor) -> bool {
        f.is_isomorphism()
    }

    fn factor(&self, f: &TwoFunctor) -> Result<(TwoFunctor, Self::Obj, TwoFunctor)> {
        let fac = factor_2functor(f, &self.limits)?;
        Ok((fac.e, fac.middle, fac.m))
    }

    fn is_left(&self, f: &TwoFunctor) -> bool {
        is_boba(f)
    }

    fn is_right(&self, f: &TwoFunctor) -> bool {
        is_lff(f)
    }

    fn fill(&self, left: &TwoFunctor, right: &TwoFunctor, top: &TwoFunctor, bottom: &TwoFunctor) -> Result<TwoFunctor> {
        solve_lifting(&LiftingSquare {
            e: LeftLegData::Full(left.clone()),
            m: right.clone(),
            top: LeftLegData::Full(top.clone()),
            bottom: bottom.clone(),
        })
    }
}

/// Finite categories and functors with (bo, ff).
#[derive(Clone, Copy, Debug, Default)]
pub struct FinCat;

impl Ambient for FinCat {
    type Obj = Arc<FinCategory>;
    type Mor = Functor;

    fn name(&self) -> &'static str {
        "Cat with (bo, ff)"
    }

    fn key(&self, x: &Self::Obj) -> u64 {
        x.fingerprint()
    }

    fn obj_eq(&self, x: &Self::Obj, y: &Self::Obj) -> bool {
        Arc::ptr_eq(x, y) || x == y
    }

    fn describe(&self, x: &Self::Obj) -> String {
        format!("{}/{}", x.num_objects(), x.num_arrows())
    }

    fn dom(&self, f: &Functor) -> Self::Obj {
        f.domain.clone()
    }

    fn cod(&self, f: &Functor) -> Self::Obj {
        f.codomain.clone()
    }

    fn identity(&self, x: &Self::Obj) -> Functor {
        Functor::identity(x.clone())
    }

    fn compose(&self, f: &Functor, g: &Functor) -> Result<Functor> {
        f.then(g)
    }

    fn mor_eq(&self, f: &Functor, g: &Functor) -> bool {
        f == g
    }

    fn difference(&self, f: &Functor, g: &Functor) -> String {
        if !self.obj_eq(&f.domain, &g.domain) || !self.obj_eq(&f.codomain, &g.codomain) {
            return "different boundaries".into();
        }
        let d = &f.domain;
        if let Some(x) = (0..d.num_objects()).find(|&x| f.objects[x] != g.objects[x]) {
            return format!("object {}", d.object_name(x));
        }
        match (0..d.num_arrows()).find(|&a| f.arrows[a] != g.arrows[a]) {
            Some(a) => format!("arrow {}", d.arrow(a).name),
            None => "none".into(),
        }
    }

    fn is_iso(&self, f: &Functor) -> bool {
        f.is_isomorphism()
    }

    fn factor(&self, f: &Functor) -> Result<(Functor, Self::Obj, Functor)> {
        Ok(factor_functor(f))
    }

    fn is_left(&self, f: &Functor) -> bool {
        is_bo(f)
    }

    fn is_right(&self, f: &Functor) -> bool {
        is_ff(f)
    }

    fn fill(&self, left: &Functor, right: &Functor, top: &Functor, bottom: &Functor) -> Result<Functor> {
        solve_lifting_bo_ff(left, right, top, bottom)
    }
}
