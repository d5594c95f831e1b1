//! Coherence axioms of a symmetric monoidal structure as pairs of pasting
//! expressions, checked by exact equality of their evaluated components.

use std::fmt;

use super::algebra::{evaluate_cell_expr, oplax_extend, Algebra, CellExpr, Generator, OplaxMap};
use super::ambient::Ambient;
use super::monoidal::generator;
use super::term::Term;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axiom {
    Pentagon,
    Triangle,
    Symmetry,
    Hexagon,
    /// `a`, `l`, `r` composed with their inverses, both ways; `l` and `r`
    /// are read at the first variable.
    Inverses,
}

impl Axiom {
    pub const ALL: [Axiom; 5] = [
        Axiom::Pentagon,
        Axiom::Triangle,
        Axiom::Symmetry,
        Axiom::Hexagon,
        Axiom::Inverses,
    ];

    pub fn parse(s: &str) -> Result<Axiom> {
        Ok(match s {
            "pentagon" => Axiom::Pentagon,
            "triangle" => Axiom::Triangle,
            "symmetry" => Axiom::Symmetry,
            "hexagon" => Axiom::Hexagon,
            "inverses" => Axiom::Inverses,
            other => return Err(Error::malformed(format!("unknown axiom {other}"))),
        })
    }

    pub fn arity(self) -> usize {
        match self {
            Axiom::Pentagon => 4,
            Axiom::Triangle | Axiom::Symmetry => 2,
            Axiom::Hexagon | Axiom::Inverses => 3,
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::Pentagon => "pentagon",
            Axiom::Triangle => "triangle",
            Axiom::Symmetry => "symmetry",
            Axiom::Hexagon => "hexagon",
            Axiom::Inverses => "inverses",
        };
        f.write_str(s)
    }
}

fn g(name: &str) -> CellExpr {
    CellExpr::gen(&generator(name).expect("monoidal generator"))
}

fn one() -> CellExpr {
    CellExpr::id_var()
}

fn m2(x: CellExpr, y: CellExpr) -> CellExpr {
    CellExpr::whisker("m", vec![x, y])
}

fn mt(a: &Term, b: &Term) -> Term {
    Term::apply("m", vec![a.clone(), b.clone()]).unwrap()
}

/// One equation `lhs == rhs` between parallel pasting expressions.
#[derive(Clone, Debug)]
pub struct Equation {
    pub name: String,
    pub lhs: CellExpr,
    pub rhs: CellExpr,
}

/// The equations making up an axiom, each type-checked.
pub fn equations(axiom: Axiom) -> Vec<Equation> {
    let eq = |name: &str, lhs: CellExpr, rhs: CellExpr| Equation {
        name: name.to_string(),
        lhs,
        rhs,
    };
    let out = match axiom {
        Axiom::Pentagon => {
            let x = Term::vars(4);
            let lhs = g("a")
                .at(vec![mt(&x[0], &x[1]), x[2].clone(), x[3].clone()])
                .then(g("a").at(vec![x[0].clone(), x[1].clone(), mt(&x[2], &x[3])]));
            let rhs = m2(g("a"), one())
                .then(g("a").at(vec![x[0].clone(), mt(&x[1], &x[2]), x[3].clone()]))
                .then(m2(one(), g("a")));
            vec![eq("pentagon", lhs, rhs)]
        }
        Axiom::Triangle => {
            let x = Term::vars(2);
            let lhs = g("a")
                .at(vec![x[0].clone(), Term::constant("e", 2), x[1].clone()])
                .then(m2(one(), g("l")));
            vec![eq("triangle", lhs, m2(g("r"), one()))]
        }
        Axiom::Symmetry => {
            let x = Term::vars(2);
            let lhs = g("b").then(g("b").at(vec![x[1].clone(), x[0].clone()]));
            vec![eq("symmetry", lhs, CellExpr::Id(mt(&x[0], &x[1])))]
        }
        Axiom::Hexagon => {
            let x = Term::vars(3);
            let (x1, x2, x3) = (x[0].clone(), x[1].clone(), x[2].clone());
            let lhs1 = g("a")
                .then(g("b").at(vec![x1.clone(), mt(&x2, &x3)]))
                .then(g("a").at(vec![x2.clone(), x3.clone(), x1.clone()]));
            let rhs1 = m2(g("b"), one())
                .then(g("a").at(vec![x2.clone(), x1.clone(), x3.clone()]))
                .then(m2(one(), g("b")).at(vec![x2.clone(), x1.clone(), x3.clone()]));
            let lhs2 = g("a_inv")
                .then(g("b").at(vec![mt(&x1, &x2), x3.clone()]))
                .then(g("a_inv").at(vec![x3.clone(), x1.clone(), x2.clone()]));
            let rhs2 = m2(one(), g("b"))
                .then(g("a_inv").at(vec![x1.clone(), x3.clone(), x2.clone()]))
                .then(m2(g("b"), one()).at(vec![x1, x3, x2]));
            vec![eq("hexagon", lhs1, rhs1), eq("inverse hexagon", lhs2, rhs2)]
        }
        Axiom::Inverses => {
            let x = Term::vars(3);
            let at = |name: &str| {
                let args = if name.starts_with('a') { x.clone() } else { vec![x[0].clone()] };
                g(name).at(args)
            };
            let mut v = Vec::new();
            for (f, b) in [("a", "a_inv"), ("l", "l_inv"), ("r", "r_inv")] {
                let (gf, gb) = (at(f), at(b));
                let (s, t) = gf.boundary().unwrap();
                v.push(eq(&format!("{f};{b}"), gf.clone().then(gb.clone()), CellExpr::Id(s)));
                v.push(eq(&format!("{b};{f}"), gb.then(gf), CellExpr::Id(t)));
            }
            v
        }
    };
    for e in &out {
        let l = e.lhs.boundary().expect("well-typed axiom");
        let r = e.rhs.boundary().expect("well-typed axiom");
        assert_eq!(l, r, "{} is not parallel", e.name);
    }
    out
}

/// What was checked, on which probes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoherenceReport {
    pub axiom: String,
    pub algebra: String,
    pub probes: Vec<String>,
    pub equations_checked: usize,
}

fn describe_tuple<A: Ambient>(amb: &A, tuple: &[A::Obj]) -> String {
    let parts = tuple.iter().map(|x| amb.describe(x)).collect::<Vec<_>>();
    format!("({})", parts.join(", "))
}

/// Evaluates both sides of every equation of `axiom` at each probe tuple
/// and demands exact equality.
pub fn coherence_check<A: Ambient>(
    amb: &A,
    alg: &dyn Algebra<A>,
    axiom: Axiom,
    probes: &[Vec<A::Obj>],
) -> Result<CoherenceReport> {
    let eqs = equations(axiom);
    let mut checked = 0;
    for tuple in probes {
        if tuple.len() != axiom.arity() {
            return Err(Error::ArityMismatch {
                expected: axiom.arity(),
                found: tuple.len(),
            });
        }
        for e in &eqs {
            let l = evaluate_cell_expr(amb, alg, &e.lhs, tuple)?;
            let r = evaluate_cell_expr(amb, alg, &e.rhs, tuple)?;
            if !amb.mor_eq(&l, &r) {
                return Err(Error::axiom(
                    &e.name,
                    format!("at {}: sides differ on {}", describe_tuple(amb, tuple), amb.difference(&l, &r)),
                ));
            }
            checked += 1;
        }
    }
    Ok(CoherenceReport {
        axiom: axiom.to_string(),
        algebra: alg.name(),
        probes: probes.iter().map(|t| describe_tuple(amb, t)).collect(),
        equations_checked: checked,
    })
}

/// Naturality of `θ` on probe morphism tuples:
/// `S(θ)(F⃗) ; θ_B⃗ = θ_A⃗ ; T(θ)(F⃗)`.
pub fn check_naturality<A: Ambient>(
    amb: &A,
    alg: &dyn Algebra<A>,
    gen: &Generator,
    probes: &[Vec<A::Mor>],
) -> Result<usize> {
    use super::algebra::eval_term_mor;
    for fs in probes {
        let a = fs.iter().map(|f| amb.dom(f)).collect::<Vec<_>>();
        let b = fs.iter().map(|f| amb.cod(f)).collect::<Vec<_>>();
        let l = amb.compose(&eval_term_mor(alg, &gen.source, fs)?, &alg.cell(gen, &b)?)?;
        let r = amb.compose(&alg.cell(gen, &a)?, &eval_term_mor(alg, &gen.target, fs)?)?;
        if !amb.mor_eq(&l, &r) {
            return Err(Error::axiom(
                format!("naturality of {}", gen.name),
                format!("from {}: {}", describe_tuple(amb, &a), amb.difference(&l, &r)),
            ));
        }
    }
    Ok(probes.len())
}

/// Result of checking that an oplax map over the identity is an oplax
/// (symmetric) monoidal structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OplaxReport {
    pub generators: Vec<String>,
    pub object_probes: usize,
    pub naturality_probes: usize,
}

/// For each generator `θ: s ⇒ t` and probe tuple: `Xθ ; k(t) = k(s) ; Yθ`,
/// which for `a`, `l`, `r`, `b` are the associativity, unit and symmetry
/// axioms; plus naturality of `k(m)` on probe morphism pairs.
pub fn check_oplax_monoidal<A: Ambient>(
    amb: &A,
    k: &dyn OplaxMap<A>,
    generators: &[Generator],
    probes: &[Vec<A::Obj>],
    morphism_probes: &[Vec<A::Mor>],
) -> Result<OplaxReport> {
    let (x, y) = (k.source(), k.target());
    let mut objs = 0;
    for gen in generators {
        for tuple in probes.iter().filter(|t| t.len() == gen.arity()) {
            let l = amb.compose(&x.cell(gen, tuple)?, &oplax_extend(amb, k, &gen.target, tuple)?)?;
            let r = amb.compose(&oplax_extend(amb, k, &gen.source, tuple)?, &y.cell(gen, tuple)?)?;
            if !amb.mor_eq(&l, &r) {
                return Err(Error::axiom(
                    format!("oplax compatibility with {}", gen.name),
                    format!("at {}: {}", describe_tuple(amb, tuple), amb.difference(&l, &r)),
                ));
            }
            objs += 1;
        }
    }
    let mut nat = 0;
    for fs in morphism_probes {
        let a = fs.iter().map(|f| amb.dom(f)).collect::<Vec<_>>();
        let b = fs.iter().map(|f| amb.cod(f)).collect::<Vec<_>>();
        let l = amb.compose(&x.op_mor("m", fs)?, &k.component("m", &b)?)?;
        let r = amb.compose(&k.component("m", &a)?, &y.op_mor("m", fs)?)?;
        if !amb.mor_eq(&l, &r) {
            return Err(Error::axiom(
                "naturality of the comparison",
                format!("from {}: {}", describe_tuple(amb, &a), amb.difference(&l, &r)),
            ));
        }
        nat += 1;
    }
    Ok(OplaxReport {
        generators: generators.iter().map(|g| g.name.clone()).collect(),
        object_probes: objs,
        naturality_probes: nat,
    })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::kernel::{catalog, Fin2Category};
    use crate::theory::lifting::factor_operations;
    use crate::theory::monoidal::{monoidal_generators, MonoidalSetup};
    use crate::Limits;

    fn c(name: &str) -> Arc<Fin2Category> {
        catalog::get_arc(name).unwrap()
    }

    #[test]
    fn gray_structure_is_coherent() {
        let setup = MonoidalSetup::new(Limits::default());
        let k = setup.k();
        let z = factor_operations(&setup.ambient, &k);
        let amb = &setup.ambient;
        for g in monoidal_generators() {
            let probe = vec![c("S1"); g.arity()];
            let cell = z.cell(&g, &probe).unwrap();
            assert!(cell.is_isomorphism(), "{}", g.name);
        }
        for ax in [Axiom::Triangle, Axiom::Symmetry, Axiom::Inverses, Axiom::Hexagon] {
            let probes: Vec<Vec<_>> = match ax.arity() {
                2 => vec![vec![c("S1"), c("S2")], vec![c("S2"), c("S1")]],
                _ => vec![vec![c("S1"), c("S1"), c("S2")]],
            };
            coherence_check(amb, &z, ax, &probes).unwrap();
        }
        coherence_check(amb, &z, Axiom::Pentagon, &[vec![c("S1"); 4]]).unwrap();
    }
}
