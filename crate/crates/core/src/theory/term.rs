//! Signatures and Ω-terms; composition in the free theory is substitution.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};

/// Operation names graded by arity.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Signature {
    by_arity: BTreeMap<usize, BTreeSet<String>>,
    arity: BTreeMap<String, usize>,
}

impl Signature {
    pub fn new(ops: &[(&str, usize)]) -> Result<Self> {
        let mut s = Signature::default();
        for &(name, n) in ops {
            if s.arity.insert(name.to_string(), n).is_some() {
                return Err(Error::malformed(format!("operation {name} declared twice")));
            }
            s.by_arity.entry(n).or_default().insert(name.to_string());
        }
        Ok(s)
    }

    /// One constant `e` and one binary `m`: pointed magmas.
    pub fn pointed_magma() -> Self {
        Signature::new(&[("e", 0), ("m", 2)]).unwrap()
    }

    pub fn arity(&self, op: &str) -> Option<usize> {
        self.arity.get(op).copied()
    }

    pub fn ops(&self) -> impl Iterator<Item = (&str, usize)> {
        self.arity.iter().map(|(k, &v)| (k.as_str(), v))
    }

    pub fn ops_of_arity(&self, n: usize) -> impl Iterator<Item = &str> {
        self.by_arity.get(&n).into_iter().flatten().map(String::as_str)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Node {
    /// Zero-based; displayed as `x1, x2, …`.
    Var(usize),
    Op(String, Vec<Node>),
}

/// A term in `arity` variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Term {
    pub arity: usize,
    pub node: Node,
}

impl Term {
    pub fn var(arity: usize, i: usize) -> Term {
        assert!(i < arity, "variable out of range");
        Term {
            arity,
            node: Node::Var(i),
        }
    }

    /// The variables `x1, …, xn` in order.
    pub fn vars(n: usize) -> Vec<Term> {
        (0..n).map(|i| Term::var(n, i)).collect()
    }

    pub fn constant(op: &str, arity: usize) -> Term {
        Term {
            arity,
            node: Node::Op(op.to_string(), Vec::new()),
        }
    }

    /// `op(args)`; all arguments must live in the same number of variables.
    pub fn apply(op: &str, args: Vec<Term>) -> Result<Term> {
        let arity = args.first().map(|t| t.arity).unwrap_or(0);
        if let Some(t) = args.iter().find(|t| t.arity != arity) {
            return Err(Error::ArityMismatch {
                expected: arity,
                found: t.arity,
            });
        }
        Ok(Term {
            arity,
            node: Node::Op(op.to_string(), args.into_iter().map(|t| t.node).collect()),
        })
    }

    /// Checks variable bounds and operation arities.
    pub fn check(&self, sig: &Signature) -> Result<()> {
        fn go(n: &Node, arity: usize, sig: &Signature) -> Result<()> {
            match n {
                Node::Var(i) if *i < arity => Ok(()),
                Node::Var(i) => Err(Error::ArityMismatch {
                    expected: arity,
                    found: i + 1,
                }),
                Node::Op(f, xs) => {
                    let k = sig.arity(f).ok_or_else(|| Error::malformed(format!("unknown operation {f}")))?;
                    if k != xs.len() {
                        return Err(Error::ArityMismatch {
                            expected: k,
                            found: xs.len(),
                        });
                    }
                    xs.iter().try_for_each(|x| go(x, arity, sig))
                }
            }
        }
        go(&self.node, self.arity, sig)
    }

    pub fn depth(&self) -> usize {
        fn go(n: &Node) -> usize {
            match n {
                Node::Var(_) => 0,
                Node::Op(_, xs) => 1 + xs.iter().map(go).max().unwrap_or(0),
            }
        }
        go(&self.node)
    }

    /// The same term read in `arity + shift` variables, with indices moved up.
    pub fn shifted(&self, shift: usize, arity: usize) -> Term {
        fn go(n: &Node, s: usize) -> Node {
            match n {
                Node::Var(i) => Node::Var(i + s),
                Node::Op(f, xs) => Node::Op(f.clone(), xs.iter().map(|x| go(x, s)).collect()),
            }
        }
        Term {
            arity,
            node: go(&self.node, shift),
        }
    }

    /// Variables in order of occurrence.
    pub fn occurrences(&self) -> Vec<usize> {
        fn go(n: &Node, out: &mut Vec<usize>) {
            match n {
                Node::Var(i) => out.push(*i),
                Node::Op(_, xs) => xs.iter().for_each(|x| go(x, out)),
            }
        }
        let mut out = Vec::new();
        go(&self.node, &mut out);
        out
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn go(n: &Node, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            match n {
                Node::Var(i) => write!(f, "x{}", i + 1),
                Node::Op(op, xs) if xs.is_empty() => write!(f, "{op}"),
                Node::Op(op, xs) => {
                    write!(f, "{op}(")?;
                    for (k, x) in xs.iter().enumerate() {
                        if k > 0 {
                            write!(f, ",")?;
                        }
                        go(x, f)?;
                    }
                    write!(f, ")")
                }
            }
        }
        go(&self.node, f)
    }
}

/// `t(args)`: each variable `xi` of `t` is replaced by `args[i]`.
pub fn substitute(t: &Term, args: &[Term]) -> Result<Term> {
    if args.len() != t.arity {
        return Err(Error::ArityMismatch {
            expected: t.arity,
            found: args.len(),
        });
    }
    let arity = match args.first() {
        Some(a) => a.arity,
        None => 0,
    };
    if let Some(a) = args.iter().find(|a| a.arity != arity) {
        return Err(Error::ArityMismatch {
            expected: arity,
            found: a.arity,
        });
    }
    fn go(n: &Node, args: &[Term]) -> Node {
        match n {
            Node::Var(i) => args[*i].node.clone(),
            Node::Op(f, xs) => Node::Op(f.clone(), xs.iter().map(|x| go(x, args)).collect()),
        }
    }
    Ok(Term {
        arity,
        node: go(&t.node, args),
    })
}

/// Every term in `arity` variables of depth at most `depth`.
pub fn terms_up_to(sig: &Signature, arity: usize, depth: usize) -> Vec<Term> {
    let mut level: Vec<Node> = (0..arity).map(Node::Var).collect();
    for _ in 0..depth {
        let mut next: BTreeSet<Node> = level.iter().cloned().collect();
        for (op, n) in sig.ops() {
            let mut tuples: Vec<Vec<Node>> = vec![Vec::new()];
            for _ in 0..n {
                tuples = tuples
                    .into_iter()
                    .flat_map(|t| {
                        level.iter().map(move |x| {
                            let mut t2 = t.clone();
                            t2.push(x.clone());
                            t2
                        })
                    })
                    .collect();
            }
            for t in tuples {
                next.insert(Node::Op(op.to_string(), t));
            }
        }
        level = next.into_iter().collect();
    }
    level.into_iter().map(|node| Term { arity, node }).collect()
}
