//! The theory of monoidal objects (pointed magmas with associator, unitors
//! and symmetry), its funny and cartesian algebras in 2-Cat, the oplax map
//! `(1, K)` between them, and their locally discrete shadows in Cat.

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;
use std::sync::Arc;

use super::algebra::{Algebra, Generator, OplaxMap};
use super::ambient::{FinCat, TwoCat};
use super::term::{Signature, Term};
use crate::config::Limits;
use crate::error::{Error, Result};
use crate::kernel::{catalog, Fin2Category, FinCategory, Functor, TwoFunctor};
use crate::tensor::{funny_full, product, FunnyFull, Product};

fn m(a: Term, b: Term) -> Term {
    Term::apply("m", vec![a, b]).unwrap()
}

/// `a`, `l`, `r`, `b` (the symmetry) and the inverses `a_inv`, `l_inv`, `r_inv`.
pub fn monoidal_generators() -> Vec<Generator> {
    let x3 = Term::vars(3);
    let x2 = Term::vars(2);
    let x1 = Term::var(1, 0);
    let e1 = Term::constant("e", 1);
    let assoc_s = m(m(x3[0].clone(), x3[1].clone()), x3[2].clone());
    let assoc_t = m(x3[0].clone(), m(x3[1].clone(), x3[2].clone()));
    let l_s = m(e1.clone(), x1.clone());
    let r_s = m(x1.clone(), e1);
    let g = |name: &str, source: &Term, target: &Term| Generator {
        name: name.to_string(),
        source: source.clone(),
        target: target.clone(),
    };
    vec![
        g("a", &assoc_s, &assoc_t),
        g("a_inv", &assoc_t, &assoc_s),
        g("l", &l_s, &x1),
        g("l_inv", &x1, &l_s),
        g("r", &r_s, &x1),
        g("r_inv", &x1, &r_s),
        g("b", &m(x2[0].clone(), x2[1].clone()), &m(x2[1].clone(), x2[0].clone())),
    ]
}

pub fn generator(name: &str) -> Result<Generator> {
    monoidal_generators()
        .into_iter()
        .find(|g| g.name == name)
        .ok_or_else(|| Error::malformed(format!("unknown generator {name}")))
}

fn unknown_op(f: &str) -> Error {
    Error::malformed(format!("operation {f} is not in the signature"))
}

fn arity(args: usize, want: usize) -> Result<()> {
    if args == want {
        Ok(())
    } else {
        Err(Error::ArityMismatch {
            expected: want,
            found: args,
        })
    }
}

/// Binary-keyed cache with structural equality on collision.
struct Cache<V> {
    map: HashMap<(u64, u64), Vec<(Arc<Fin2Category>, Arc<Fin2Category>, V)>>,
}

impl<V: Clone> Cache<V> {
    fn new() -> Self {
        Cache { map: HashMap::new() }
    }

    fn get(&self, a: &Arc<Fin2Category>, b: &Arc<Fin2Category>) -> Option<V> {
        let same = |x: &Arc<Fin2Category>, y: &Arc<Fin2Category>| Arc::ptr_eq(x, y) || x == y;
        self.map
            .get(&(a.fingerprint(), b.fingerprint()))?
            .iter()
            .find(|(x, y, _)| same(x, a) && same(y, b))
            .map(|(_, _, v)| v.clone())
    }

    fn put(&mut self, a: &Arc<Fin2Category>, b: &Arc<Fin2Category>, v: V) {
        self.map
            .entry((a.fingerprint(), b.fingerprint()))
            .or_default()
            .push((a.clone(), b.clone(), v));
    }
}

fn constant_at(unit: &Arc<Fin2Category>, c: &Arc<Fin2Category>, x: usize) -> TwoFunctor {
    TwoFunctor {
        domain: unit.clone(),
        codomain: c.clone(),
        objects: vec![x; unit.num_objects()],
        one_cells: vec![c.id1(x); unit.num_one_cells()],
        two_cells: vec![c.id2(c.id1(x)); unit.num_two_cells()],
    }
}

fn to_unit(c: &Arc<Fin2Category>, unit: &Arc<Fin2Category>) -> TwoFunctor {
    TwoFunctor {
        domain: c.clone(),
        codomain: unit.clone(),
        objects: vec![0; c.num_objects()],
        one_cells: vec![unit.id1(0); c.num_one_cells()],
        two_cells: vec![unit.id2(unit.id1(0)); c.num_two_cells()],
    }
}

/// `(A, B) ↦ A ⋆ B`, unit the terminal 2-category.
pub struct FunnyAlgebra {
    pub limits: Limits,
    pub unit: Arc<Fin2Category>,
    sig: Signature,
    cache: RefCell<Cache<Arc<FunnyFull>>>,
}

impl FunnyAlgebra {
    pub fn new(unit: Arc<Fin2Category>, limits: Limits) -> Self {
        FunnyAlgebra {
            limits,
            unit,
            sig: Signature::pointed_magma(),
            cache: RefCell::new(Cache::new()),
        }
    }

    pub fn funny(&self, a: &Arc<Fin2Category>, b: &Arc<Fin2Category>) -> Result<Arc<FunnyFull>> {
        if let Some(f) = self.cache.borrow().get(a, b) {
            return Ok(f);
        }
        let f = Arc::new(funny_full(a, b, &self.limits)?);
        self.cache.borrow_mut().put(a, b, f.clone());
        Ok(f)
    }
}

impl Algebra<TwoCat> for FunnyAlgebra {
    fn name(&self) -> String {
        "funny".into()
    }

    fn signature(&self) -> &Signature {
        &self.sig
    }

    fn op(&self, f: &str, args: &[Arc<Fin2Category>]) -> Result<Arc<Fin2Category>> {
        match f {
            "e" => arity(args.len(), 0).map(|_| self.unit.clone()),
            "m" => {
                arity(args.len(), 2)?;
                Ok(self.funny(&args[0], &args[1])?.cat.clone())
            }
            _ => Err(unknown_op(f)),
        }
    }

    fn op_mor(&self, f: &str, args: &[TwoFunctor]) -> Result<TwoFunctor> {
        match f {
            "e" => arity(args.len(), 0).map(|_| TwoFunctor::identity(self.unit.clone())),
            "m" => {
                arity(args.len(), 2)?;
                let (x, y) = (&args[0], &args[1]);
                let src = self.funny(&x.domain, &y.domain)?;
                let tgt = self.funny(&x.codomain, &y.codomain)?;
                src.map(x, y, &tgt)
            }
            _ => Err(unknown_op(f)),
        }
    }

    fn cell(&self, g: &Generator, args: &[Arc<Fin2Category>]) -> Result<TwoFunctor> {
        arity(args.len(), g.arity())?;
        match g.name.as_str() {
            "a" => {
                let (a, b, c) = (&args[0], &args[1], &args[2]);
                let ab = self.funny(a, b)?;
                let bc = self.funny(b, c)?;
                let src = self.funny(&ab.cat, c)?;
                let tgt = self.funny(a, &bc.cat)?;
                let left = (0..c.num_objects())
                    .map(|z| {
                        let l = (0..b.num_objects())
                            .map(|y| tgt.include_left(bc.funny.obj(y, z)))
                            .collect::<Vec<_>>();
                        let r = (0..a.num_objects())
                            .map(|x| bc.include_left(z).then(&tgt.include_right(x)))
                            .collect::<Result<Vec<_>>>()?;
                        ab.copair(&l, &r, &tgt.cat)
                    })
                    .collect::<Result<Vec<_>>>()?;
                let right = (0..ab.cat.num_objects())
                    .map(|p| {
                        let (x, y) = ab.funny.split_obj(p);
                        bc.include_right(y).then(&tgt.include_right(x))
                    })
                    .collect::<Result<Vec<_>>>()?;
                src.copair(&left, &right, &tgt.cat)
            }
            "a_inv" => {
                let (a, b, c) = (&args[0], &args[1], &args[2]);
                let ab = self.funny(a, b)?;
                let bc = self.funny(b, c)?;
                let src = self.funny(a, &bc.cat)?;
                let tgt = self.funny(&ab.cat, c)?;
                let left = (0..bc.cat.num_objects())
                    .map(|q| {
                        let (y, z) = bc.funny.split_obj(q);
                        ab.include_left(y).then(&tgt.include_left(z))
                    })
                    .collect::<Result<Vec<_>>>()?;
                let right = (0..a.num_objects())
                    .map(|x| {
                        let l = (0..c.num_objects())
                            .map(|z| ab.include_right(x).then(&tgt.include_left(z)))
                            .collect::<Result<Vec<_>>>()?;
                        let r = (0..b.num_objects())
                            .map(|y| tgt.include_right(ab.funny.obj(x, y)))
                            .collect::<Vec<_>>();
                        bc.copair(&l, &r, &tgt.cat)
                    })
                    .collect::<Result<Vec<_>>>()?;
                src.copair(&left, &right, &tgt.cat)
            }
            "l" => {
                let a = &args[0];
                let u = self.funny(&self.unit, a)?;
                let left = (0..a.num_objects()).map(|x| constant_at(&self.unit, a, x)).collect::<Vec<_>>();
                u.copair(&left, &[TwoFunctor::identity(a.clone())], a)
            }
            "l_inv" => Ok(self.funny(&self.unit, &args[0])?.include_right(0)),
            "r" => {
                let a = &args[0];
                let u = self.funny(a, &self.unit)?;
                let right = (0..a.num_objects()).map(|x| constant_at(&self.unit, a, x)).collect::<Vec<_>>();
                u.copair(&[TwoFunctor::identity(a.clone())], &right, a)
            }
            "r_inv" => Ok(self.funny(&args[0], &self.unit)?.include_left(0)),
            "b" => {
                let (a, b) = (&args[0], &args[1]);
                let src = self.funny(a, b)?;
                let tgt = self.funny(b, a)?;
                let left = (0..b.num_objects()).map(|y| tgt.include_right(y)).collect::<Vec<_>>();
                let right = (0..a.num_objects()).map(|x| tgt.include_left(x)).collect::<Vec<_>>();
                src.copair(&left, &right, &tgt.cat)
            }
            other => Err(Error::malformed(format!("unknown generator {other}"))),
        }
    }
}

/// `(A, B) ↦ A × B`, unit the terminal 2-category.
pub struct CartesianAlgebra {
    pub limits: Limits,
    pub unit: Arc<Fin2Category>,
    sig: Signature,
    cache: RefCell<Cache<Arc<Product>>>,
}

impl CartesianAlgebra {
    pub fn new(unit: Arc<Fin2Category>, limits: Limits) -> Self {
        CartesianAlgebra {
            limits,
            unit,
            sig: Signature::pointed_magma(),
            cache: RefCell::new(Cache::new()),
        }
    }

    pub fn product(&self, a: &Arc<Fin2Category>, b: &Arc<Fin2Category>) -> Result<Arc<Product>> {
        if let Some(p) = self.cache.borrow().get(a, b) {
            return Ok(p);
        }
        let p = Arc::new(product(a, b, &self.limits)?);
        self.cache.borrow_mut().put(a, b, p.clone());
        Ok(p)
    }
}

/// Re-bracketing between `(A × B) × C` and `A × (B × C)`.
fn rebracket(src: &Product, tgt: &Product, to_right: bool, ab: &Product, bc: &Product) -> TwoFunctor {
    let go = |split: &dyn Fn(&Product, usize) -> (usize, usize), join: &dyn Fn(&Product, usize, usize) -> usize, n: usize| {
        (0..n)
            .map(|i| {
                let (p, q) = split(src, i);
                if to_right {
                    let (x, y) = split(ab, p);
                    join(tgt, x, join(bc, y, q))
                } else {
                    let (y, z) = split(bc, q);
                    join(tgt, join(ab, p, y), z)
                }
            })
            .collect::<Vec<_>>()
    };
    TwoFunctor {
        domain: src.cat.clone(),
        codomain: tgt.cat.clone(),
        objects: go(&|p, i| p.split_obj(i), &|p, a, b| p.obj(a, b), src.cat.num_objects()),
        one_cells: go(&|p, i| p.split_one(i), &|p, a, b| p.one(a, b), src.cat.num_one_cells()),
        two_cells: go(&|p, i| p.split_two(i), &|p, a, b| p.two(a, b), src.cat.num_two_cells()),
    }
}

impl Algebra<TwoCat> for CartesianAlgebra {
    fn name(&self) -> String {
        "cartesian".into()
    }

    fn signature(&self) -> &Signature {
        &self.sig
    }

    fn op(&self, f: &str, args: &[Arc<Fin2Category>]) -> Result<Arc<Fin2Category>> {
        match f {
            "e" => arity(args.len(), 0).map(|_| self.unit.clone()),
            "m" => {
                arity(args.len(), 2)?;
                Ok(self.product(&args[0], &args[1])?.cat.clone())
            }
            _ => Err(unknown_op(f)),
        }
    }

    fn op_mor(&self, f: &str, args: &[TwoFunctor]) -> Result<TwoFunctor> {
        match f {
            "e" => arity(args.len(), 0).map(|_| TwoFunctor::identity(self.unit.clone())),
            "m" => {
                arity(args.len(), 2)?;
                let (x, y) = (&args[0], &args[1]);
                let src = self.product(&x.domain, &y.domain)?;
                let tgt = self.product(&x.codomain, &y.codomain)?;
                Ok(src.map(x, y, &tgt))
            }
            _ => Err(unknown_op(f)),
        }
    }

    fn cell(&self, g: &Generator, args: &[Arc<Fin2Category>]) -> Result<TwoFunctor> {
        arity(args.len(), g.arity())?;
        match g.name.as_str() {
            "a" | "a_inv" => {
                let (a, b, c) = (&args[0], &args[1], &args[2]);
                let ab = self.product(a, b)?;
                let bc = self.product(b, c)?;
                let left = self.product(&ab.cat, c)?;
                let right = self.product(a, &bc.cat)?;
                Ok(if g.name == "a" {
                    rebracket(&left, &right, true, &ab, &bc)
                } else {
                    rebracket(&right, &left, false, &ab, &bc)
                })
            }
            "l" => Ok(self.product(&self.unit, &args[0])?.projection_right()),
            "l_inv" => {
                let a = &args[0];
                self.product(&self.unit, a)?
                    .pairing(&to_unit(a, &self.unit), &TwoFunctor::identity(a.clone()))
            }
            "r" => Ok(self.product(&args[0], &self.unit)?.projection_left()),
            "r_inv" => {
                let a = &args[0];
                self.product(a, &self.unit)?
                    .pairing(&TwoFunctor::identity(a.clone()), &to_unit(a, &self.unit))
            }
            "b" => {
                let (a, b) = (&args[0], &args[1]);
                let src = self.product(a, b)?;
                self.product(b, a)?
                    .pairing(&src.projection_right(), &src.projection_left())
            }
            other => Err(Error::malformed(format!("unknown generator {other}"))),
        }
    }
}

/// `(1, K)`: the identity on carriers with `K: A ⋆ B → A × B`.
pub struct ComparisonK<'a> {
    pub x: &'a FunnyAlgebra,
    pub y: &'a CartesianAlgebra,
}

impl OplaxMap<TwoCat> for ComparisonK<'_> {
    fn source(&self) -> &dyn Algebra<TwoCat> {
        self.x
    }

    fn target(&self) -> &dyn Algebra<TwoCat> {
        self.y
    }

    fn component(&self, f: &str, args: &[Arc<Fin2Category>]) -> Result<TwoFunctor> {
        match f {
            "e" => arity(args.len(), 0).map(|_| TwoFunctor::identity(self.x.unit.clone())),
            "m" => {
                arity(args.len(), 2)?;
                let fu = self.x.funny(&args[0], &args[1])?;
                let pr = self.y.product(&args[0], &args[1])?;
                Ok(fu.comparison_k(&pr))
            }
            _ => Err(unknown_op(f)),
        }
    }
}

/// The funny and cartesian algebras in 2-Cat sharing one unit.
pub struct MonoidalSetup {
    pub ambient: TwoCat,
    pub x: FunnyAlgebra,
    pub y: CartesianAlgebra,
}

impl MonoidalSetup {
    pub fn new(limits: Limits) -> Self {
        let unit = catalog::get_arc("S0").expect("S0 is in the catalog");
        MonoidalSetup {
            ambient: TwoCat { limits },
            x: FunnyAlgebra::new(unit.clone(), limits),
            y: CartesianAlgebra::new(unit, limits),
        }
    }

    pub fn k(&self) -> ComparisonK<'_> {
        ComparisonK { x: &self.x, y: &self.y }
    }
}

/// An algebra in 2-Cat whose values on locally discrete inputs are locally
/// discrete, read as an algebra in Cat.
pub struct Discrete<'a> {
    pub inner: &'a dyn Algebra<TwoCat>,
    registry: Rc<Registry>,
}

type Registry = RefCell<HashMap<u64, Vec<(Arc<FinCategory>, Arc<Fin2Category>)>>>;

impl<'a> Discrete<'a> {
    pub fn new(inner: &'a dyn Algebra<TwoCat>) -> Self {
        Discrete {
            inner,
            registry: Rc::new(RefCell::new(HashMap::new())),
        }
    }

    /// Shares the category ↔ 2-category registry with `other`, so that both
    /// read a category as the same locally discrete 2-category.
    pub fn sharing(inner: &'a dyn Algebra<TwoCat>, other: &Discrete<'_>) -> Self {
        Discrete {
            inner,
            registry: other.registry.clone(),
        }
    }

    /// The locally discrete 2-category on `c`, reusing one already seen.
    pub fn wrap(&self, c: &Arc<FinCategory>) -> Arc<Fin2Category> {
        let key = c.fingerprint();
        if let Some(list) = self.registry.borrow().get(&key) {
            if let Some((_, x)) = list.iter().find(|(u, _)| Arc::ptr_eq(u, c) || u == c) {
                return x.clone();
            }
        }
        let x = Arc::new(Fin2Category::locally_discrete(c.clone()));
        self.remember(&x);
        x
    }

    fn remember(&self, x: &Arc<Fin2Category>) -> Arc<FinCategory> {
        let u = x.underlying().clone();
        let mut reg = self.registry.borrow_mut();
        let list = reg.entry(u.fingerprint()).or_default();
        if !list.iter().any(|(v, _)| Arc::ptr_eq(v, &u)) {
            list.push((u.clone(), x.clone()));
        }
        u
    }

    pub fn lift(&self, f: &Functor) -> TwoFunctor {
        let (d, c) = (self.wrap(&f.domain), self.wrap(&f.codomain));
        TwoFunctor {
            two_cells: (0..d.num_two_cells()).map(|s| c.id2(f.arrows[d.src2(s)])).collect(),
            domain: d,
            codomain: c,
            objects: f.objects.clone(),
            one_cells: f.arrows.clone(),
        }
    }

    pub fn lower(&self, f: &TwoFunctor) -> Result<Functor> {
        for x in [&f.domain, &f.codomain] {
            if !x.is_locally_discrete() {
                return Err(Error::UnsupportedInput("value is not locally discrete".into()));
            }
            self.remember(x);
        }
        Ok(f.underlying())
    }
}

impl Algebra<FinCat> for Discrete<'_> {
    fn name(&self) -> String {
        format!("{} (categories)", self.inner.name())
    }

    fn signature(&self) -> &Signature {
        self.inner.signature()
    }

    fn op(&self, f: &str, args: &[Arc<FinCategory>]) -> Result<Arc<FinCategory>> {
        let wrapped = args.iter().map(|a| self.wrap(a)).collect::<Vec<_>>();
        let x = self.inner.op(f, &wrapped)?;
        if !x.is_locally_discrete() {
            return Err(Error::UnsupportedInput("value is not locally discrete".into()));
        }
        Ok(self.remember(&x))
    }

    fn op_mor(&self, f: &str, args: &[Functor]) -> Result<Functor> {
        let lifted = args.iter().map(|a| self.lift(a)).collect::<Vec<_>>();
        self.lower(&self.inner.op_mor(f, &lifted)?)
    }

    fn cell(&self, g: &Generator, args: &[Arc<FinCategory>]) -> Result<Functor> {
        let wrapped = args.iter().map(|a| self.wrap(a)).collect::<Vec<_>>();
        self.lower(&self.inner.cell(g, &wrapped)?)
    }
}

/// An oplax map in 2-Cat read between [`Discrete`] algebras.
pub struct DiscreteMap<'a> {
    pub inner: &'a dyn OplaxMap<TwoCat>,
    pub source: &'a Discrete<'a>,
    pub target: &'a Discrete<'a>,
}

impl OplaxMap<FinCat> for DiscreteMap<'_> {
    fn source(&self) -> &dyn Algebra<FinCat> {
        self.source
    }

    fn target(&self) -> &dyn Algebra<FinCat> {
        self.target
    }

    fn component(&self, f: &str, args: &[Arc<FinCategory>]) -> Result<Functor> {
        let wrapped = args.iter().map(|a| self.source.wrap(a)).collect::<Vec<_>>();
        self.source.lower(&self.inner.component(f, &wrapped)?)
    }
}
