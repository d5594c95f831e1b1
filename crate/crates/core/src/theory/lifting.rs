//! Factoring an oplax map `k: X → Y` componentwise through the
//! factorisation system gives an algebra `Z` with oplax maps `e: X → Z`
//! (left class) and `m: Z → Y` (right class). The operations of `Z` on
//! morphisms and its generating 2-cells are the unique diagonal fillers.

use std::cell::RefCell;
use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};
use std::rc::Rc;

use super::algebra::{eval_term, oplax_extend, Algebra, Generator, OplaxMap};
use super::ambient::Ambient;
use super::term::{Signature, Term};
use crate::error::{Error, Result};

/// `k(f)_{A⃗} = e ; m` through `middle = Z(f)(A⃗)`.
#[derive(Clone, Debug)]
pub struct OpFactor<A: Ambient> {
    pub e: A::Mor,
    pub middle: A::Obj,
    pub m: A::Mor,
}

type Table<A, V> = RefCell<HashMap<(String, u64), Vec<(Vec<<A as Ambient>::Obj>, V)>>>;

/// The algebra `Z` obtained by factoring `k`.
pub struct Factored<'a, A: Ambient> {
    pub ambient: &'a A,
    pub k: &'a dyn OplaxMap<A>,
    name: String,
    ops: Table<A, Rc<OpFactor<A>>>,
    cells: Table<A, A::Mor>,
}

/// Factors every component of `k` on demand.
pub fn factor_operations<'a, A: Ambient>(ambient: &'a A, k: &'a dyn OplaxMap<A>) -> Factored<'a, A> {
    Factored {
        ambient,
        k,
        name: format!("factored({} → {})", k.source().name(), k.target().name()),
        ops: RefCell::new(HashMap::new()),
        cells: RefCell::new(HashMap::new()),
    }
}

impl<'a, A: Ambient> Factored<'a, A> {
    fn key(&self, f: &str, args: &[A::Obj]) -> (String, u64) {
        let mut h = DefaultHasher::new();
        for a in args {
            self.ambient.key(a).hash(&mut h);
        }
        (f.to_string(), h.finish())
    }

    fn lookup<V: Clone>(&self, table: &Table<A, V>, key: &(String, u64), args: &[A::Obj]) -> Option<V> {
        table.borrow().get(key).and_then(|list| {
            list.iter()
                .find(|(xs, _)| xs.len() == args.len() && xs.iter().zip(args).all(|(x, y)| self.ambient.obj_eq(x, y)))
                .map(|(_, v)| v.clone())
        })
    }

    /// The factorisation of `k(f)` at `args`.
    pub fn factor_op(&self, f: &str, args: &[A::Obj]) -> Result<Rc<OpFactor<A>>> {
        let key = self.key(f, args);
        if let Some(v) = self.lookup(&self.ops, &key, args) {
            return Ok(v);
        }
        let comp = self.k.component(f, args)?;
        let (e, middle, m) = self.ambient.factor(&comp)?;
        let v = Rc::new(OpFactor { e, middle, m });
        self.ops.borrow_mut().entry(key).or_default().push((args.to_vec(), v.clone()));
        Ok(v)
    }

    pub fn left_map(&self) -> LeftMap<'_, 'a, A> {
        LeftMap { z: self }
    }

    pub fn right_map(&self) -> RightMap<'_, 'a, A> {
        RightMap { z: self }
    }

    /// `e(t)` at a tuple: from `X(t)(A⃗)` to `Z(t)(A⃗)`.
    pub fn e_at(&self, t: &Term, tuple: &[A::Obj]) -> Result<A::Mor> {
        oplax_extend(self.ambient, &self.left_map(), t, tuple)
    }

    /// `m(t)` at a tuple: from `Z(t)(A⃗)` to `Y(t)(A⃗)`.
    pub fn m_at(&self, t: &Term, tuple: &[A::Obj]) -> Result<A::Mor> {
        oplax_extend(self.ambient, &self.right_map(), t, tuple)
    }

    /// `Zθ` at a tuple: the filler of
    ///
    /// ```text
    ///   X(s) --Xθ;e(t)--> Z(t)
    ///    |e(s)             |m(t)
    ///   Z(s) --m(s);Yθ--> Y(t)
    /// ```
    pub fn lift_theory_cell(&self, g: &Generator, tuple: &[A::Obj]) -> Result<A::Mor> {
        let key = self.key(&g.name, tuple);
        if let Some(v) = self.lookup(&self.cells, &key, tuple) {
            return Ok(v);
        }
        let amb = self.ambient;
        let left = self.e_at(&g.source, tuple)?;
        if !amb.is_left(&left) {
            return Err(Error::HypothesisViolation(format!(
                "e({}) is not in the left class",
                g.source
            )));
        }
        let right = self.m_at(&g.target, tuple)?;
        if !amb.is_right(&right) {
            return Err(Error::HypothesisViolation(format!(
                "m({}) is not in the right class",
                g.target
            )));
        }
        let top = amb.compose(&self.k.source().cell(g, tuple)?, &self.e_at(&g.target, tuple)?)?;
        let bottom = amb.compose(&self.m_at(&g.source, tuple)?, &self.k.target().cell(g, tuple)?)?;
        let d = amb.fill(&left, &right, &top, &bottom)?;
        self.cells.borrow_mut().entry(key).or_default().push((tuple.to_vec(), d.clone()));
        Ok(d)
    }

    /// `Z(t)(A⃗)`.
    pub fn carrier(&self, t: &Term, tuple: &[A::Obj]) -> Result<A::Obj> {
        eval_term(self, t, tuple)
    }
}

impl<'a, A: Ambient> Algebra<A> for Factored<'a, A> {
    fn name(&self) -> String {
        self.name.clone()
    }

    fn signature(&self) -> &Signature {
        self.k.source().signature()
    }

    fn op(&self, f: &str, args: &[A::Obj]) -> Result<A::Obj> {
        Ok(self.factor_op(f, args)?.middle.clone())
    }

    fn op_mor(&self, f: &str, args: &[A::Mor]) -> Result<A::Mor> {
        let amb = self.ambient;
        let doms = args.iter().map(|x| amb.dom(x)).collect::<Vec<_>>();
        let cods = args.iter().map(|x| amb.cod(x)).collect::<Vec<_>>();
        let at_a = self.factor_op(f, &doms)?;
        let at_b = self.factor_op(f, &cods)?;
        let top = amb.compose(&self.k.source().op_mor(f, args)?, &at_b.e)?;
        let bottom = amb.compose(&at_a.m, &self.k.target().op_mor(f, args)?)?;
        amb.fill(&at_a.e, &at_b.m, &top, &bottom)
    }

    fn cell(&self, g: &Generator, args: &[A::Obj]) -> Result<A::Mor> {
        self.lift_theory_cell(g, args)
    }
}

/// `e: X → Z`.
pub struct LeftMap<'z, 'a, A: Ambient> {
    z: &'z Factored<'a, A>,
}

impl<'z, 'a, A: Ambient> OplaxMap<A> for LeftMap<'z, 'a, A> {
    fn source(&self) -> &dyn Algebra<A> {
        self.z.k.source()
    }

    fn target(&self) -> &dyn Algebra<A> {
        self.z
    }

    fn component(&self, f: &str, args: &[A::Obj]) -> Result<A::Mor> {
        Ok(self.z.factor_op(f, args)?.e.clone())
    }
}

/// `m: Z → Y`.
pub struct RightMap<'z, 'a, A: Ambient> {
    z: &'z Factored<'a, A>,
}

impl<'z, 'a, A: Ambient> OplaxMap<A> for RightMap<'z, 'a, A> {
    fn source(&self) -> &dyn Algebra<A> {
        self.z
    }

    fn target(&self) -> &dyn Algebra<A> {
        self.z.k.target()
    }

    fn component(&self, f: &str, args: &[A::Obj]) -> Result<A::Mor> {
        Ok(self.z.factor_op(f, args)?.m.clone())
    }
}
