//! Algebras for a theory in an ambient, oplax maps between them, and formal
//! pasting expressions of theory 2-cells.

use std::fmt;

use super::ambient::Ambient;
use super::term::{substitute, Node, Signature, Term};
use crate::error::{Error, Result};

/// A generating 2-cell `source ⇒ target` of a 2-theory.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub source: Term,
    pub target: Term,
}

impl Generator {
    pub fn arity(&self) -> usize {
        self.source.arity
    }
}

/// A pasting expression of theory 2-cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CellExpr {
    Gen(Generator),
    Id(Term),
    /// First, then second.
    Vert(Box<CellExpr>, Box<CellExpr>),
    /// `op(θ₁, …, θₙ)`; variables of the arguments are concatenated in blocks.
    Whisker(String, Vec<CellExpr>),
    /// `θ(t₁, …, tₙ)`.
    Subst(Box<CellExpr>, Vec<Term>),
}

impl CellExpr {
    pub fn gen(g: &Generator) -> CellExpr {
        CellExpr::Gen(g.clone())
    }

    pub fn then(self, other: CellExpr) -> CellExpr {
        CellExpr::Vert(Box::new(self), Box::new(other))
    }

    pub fn at(self, args: Vec<Term>) -> CellExpr {
        CellExpr::Subst(Box::new(self), args)
    }

    pub fn whisker(op: &str, parts: Vec<CellExpr>) -> CellExpr {
        CellExpr::Whisker(op.to_string(), parts)
    }

    pub fn id_var() -> CellExpr {
        CellExpr::Id(Term::var(1, 0))
    }

    pub fn arity(&self) -> Result<usize> {
        Ok(self.boundary()?.0.arity)
    }

    /// Source and target terms, checking that every composite is well typed.
    pub fn boundary(&self) -> Result<(Term, Term)> {
        match self {
            CellExpr::Gen(g) => Ok((g.source.clone(), g.target.clone())),
            CellExpr::Id(t) => Ok((t.clone(), t.clone())),
            CellExpr::Vert(a, b) => {
                let (s, t) = a.boundary()?;
                let (s2, t2) = b.boundary()?;
                if t != s2 {
                    return Err(Error::malformed(format!("cannot compose: {t} is not {s2}")));
                }
                Ok((s, t2))
            }
            CellExpr::Whisker(op, parts) => {
                let bs = parts.iter().map(|p| p.boundary()).collect::<Result<Vec<_>>>()?;
                let total: usize = bs.iter().map(|(s, _)| s.arity).sum();
                let mut shift = 0;
                let (mut ss, mut ts) = (Vec::new(), Vec::new());
                for (s, t) in bs {
                    let n = s.arity;
                    ss.push(s.shifted(shift, total).node);
                    ts.push(t.shifted(shift, total).node);
                    shift += n;
                }
                let mk = |xs: Vec<Node>| Term {
                    arity: total,
                    node: Node::Op(op.clone(), xs),
                };
                Ok((mk(ss), mk(ts)))
            }
            CellExpr::Subst(e, args) => {
                let (s, t) = e.boundary()?;
                Ok((substitute(&s, args)?, substitute(&t, args)?))
            }
        }
    }
}

impl fmt::Display for CellExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CellExpr::Gen(g) => write!(f, "{}", g.name),
            CellExpr::Id(t) => write!(f, "1[{t}]"),
            CellExpr::Vert(a, b) => write!(f, "({a} ; {b})"),
            CellExpr::Whisker(op, parts) => {
                write!(f, "{op}(")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{p}")?;
                }
                write!(f, ")")
            }
            CellExpr::Subst(e, args) => {
                write!(f, "{e}[")?;
                for (i, t) in args.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{t}")?;
                }
                write!(f, "]")
            }
        }
    }
}

/// An algebra: each operation acts on tuples of objects and of morphisms,
/// and each generating 2-cell has a component at every tuple of objects.
pub trait Algebra<A: Ambient> {
    fn name(&self) -> String;
    fn signature(&self) -> &Signature;
    fn op(&self, f: &str, args: &[A::Obj]) -> Result<A::Obj>;
    fn op_mor(&self, f: &str, args: &[A::Mor]) -> Result<A::Mor>;
    fn cell(&self, g: &Generator, args: &[A::Obj]) -> Result<A::Mor>;
}

/// An oplax map over the identity: a component `k(f): S(f)(x⃗) → T(f)(x⃗)`
/// per operation and tuple.
pub trait OplaxMap<A: Ambient> {
    fn source(&self) -> &dyn Algebra<A>;
    fn target(&self) -> &dyn Algebra<A>;
    fn component(&self, f: &str, args: &[A::Obj]) -> Result<A::Mor>;
}

fn check_tuple<T>(t: &Term, tuple: &[T]) -> Result<()> {
    if t.arity != tuple.len() {
        return Err(Error::ArityMismatch {
            expected: t.arity,
            found: tuple.len(),
        });
    }
    Ok(())
}

/// Variables are projections; an operation node applies the operation to
/// the evaluated children.
pub fn eval_term<A: Ambient>(alg: &dyn Algebra<A>, t: &Term, tuple: &[A::Obj]) -> Result<A::Obj> {
    check_tuple(t, tuple)?;
    fn go<A: Ambient>(alg: &dyn Algebra<A>, n: &Node, tuple: &[A::Obj]) -> Result<A::Obj> {
        match n {
            Node::Var(i) => Ok(tuple[*i].clone()),
            Node::Op(f, xs) => {
                let args = xs.iter().map(|x| go(alg, x, tuple)).collect::<Result<Vec<_>>>()?;
                alg.op(f, &args)
            }
        }
    }
    go(alg, &t.node, tuple)
}

/// The action of a term on a tuple of morphisms.
pub fn eval_term_mor<A: Ambient>(alg: &dyn Algebra<A>, t: &Term, tuple: &[A::Mor]) -> Result<A::Mor> {
    check_tuple(t, tuple)?;
    fn go<A: Ambient>(alg: &dyn Algebra<A>, n: &Node, tuple: &[A::Mor]) -> Result<A::Mor> {
        match n {
            Node::Var(i) => Ok(tuple[*i].clone()),
            Node::Op(f, xs) => {
                let args = xs.iter().map(|x| go(alg, x, tuple)).collect::<Result<Vec<_>>>()?;
                alg.op_mor(f, &args)
            }
        }
    }
    go(alg, &t.node, tuple)
}

/// `k(t)` at a tuple: identity on variables, and at `f(t⃗)` the composite
/// `S(f)(k(t⃗)) ; k(f)` at `T(t⃗)`.
pub fn oplax_extend<A: Ambient>(amb: &A, k: &dyn OplaxMap<A>, t: &Term, tuple: &[A::Obj]) -> Result<A::Mor> {
    check_tuple(t, tuple)?;
    fn go<A: Ambient>(amb: &A, k: &dyn OplaxMap<A>, n: &Node, tuple: &[A::Obj]) -> Result<(A::Mor, A::Obj)> {
        match n {
            Node::Var(i) => Ok((amb.identity(&tuple[*i]), tuple[*i].clone())),
            Node::Op(f, xs) => {
                let mut mors = Vec::with_capacity(xs.len());
                let mut objs = Vec::with_capacity(xs.len());
                for x in xs {
                    let (m, o) = go(amb, k, x, tuple)?;
                    mors.push(m);
                    objs.push(o);
                }
                let first = k.source().op_mor(f, &mors)?;
                let second = k.component(f, &objs)?;
                let tgt = amb.cod(&second);
                Ok((amb.compose(&first, &second)?, tgt))
            }
        }
    }
    Ok(go(amb, k, &t.node, tuple)?.0)
}

/// The component of a pasting expression at a tuple of objects.
pub fn evaluate_cell_expr<A: Ambient>(
    amb: &A,
    alg: &dyn Algebra<A>,
    expr: &CellExpr,
    tuple: &[A::Obj],
) -> Result<A::Mor> {
    match expr {
        CellExpr::Gen(g) => {
            if g.arity() != tuple.len() {
                return Err(Error::ArityMismatch {
                    expected: g.arity(),
                    found: tuple.len(),
                });
            }
            alg.cell(g, tuple)
        }
        CellExpr::Id(t) => Ok(amb.identity(&eval_term(alg, t, tuple)?)),
        CellExpr::Vert(a, b) => {
            let x = evaluate_cell_expr(amb, alg, a, tuple)?;
            let y = evaluate_cell_expr(amb, alg, b, tuple)?;
            amb.compose(&x, &y)
        }
        CellExpr::Whisker(op, parts) => {
            let mut at = 0;
            let mut mors = Vec::with_capacity(parts.len());
            for p in parts {
                let n = p.arity()?;
                if at + n > tuple.len() {
                    return Err(Error::ArityMismatch {
                        expected: at + n,
                        found: tuple.len(),
                    });
                }
                mors.push(evaluate_cell_expr(amb, alg, p, &tuple[at..at + n])?);
                at += n;
            }
            if at != tuple.len() {
                return Err(Error::ArityMismatch {
                    expected: at,
                    found: tuple.len(),
                });
            }
            alg.op_mor(op, &mors)
        }
        CellExpr::Subst(e, args) => {
            let inner = args
                .iter()
                .map(|t| eval_term(alg, t, tuple))
                .collect::<Result<Vec<_>>>()?;
            evaluate_cell_expr(amb, alg, e, &inner)
        }
    }
}
