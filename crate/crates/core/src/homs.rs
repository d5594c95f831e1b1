//! The hom-2-categories `[A, B]`, `[A, B]_f` and `Ps(A, B)` by exhaustive
//! enumeration, with the inclusions `J₁`, `J₂` and `J`.
//!
//! Conventions for a transformation `η: F ⇒ G`: components `η_a: Fa → Ga`,
//! and for each 1-cell `f: a → b` a 2-cell `η_f: Ff;η_b ⇒ η_a;Gf`.
//! A modification `Γ: η ⇛ μ` has components `Γ_a: η_a ⇒ μ_a` subject to
//! `(Ff * Γ_b);μ_f = η_f;(Γ_a * Gf)`.

use std::collections::HashMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::kernel::{enumerate_2functors, Arrow, Cell, Fin2Category, FinCategory, TwoFunctor};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HomKind {
    /// 2-natural transformations and modifications.
    Strict,
    /// Bare families of 1-cells and arbitrary families of 2-cells.
    Funny,
    /// Pseudonatural transformations and modifications.
    Pseudo,
}

impl std::str::FromStr for HomKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "strict" => Ok(HomKind::Strict),
            "funny" => Ok(HomKind::Funny),
            "ps" | "pseudo" => Ok(HomKind::Pseudo),
            _ => Err(Error::malformed(format!("unknown hom kind `{s}`"))),
        }
    }
}

/// A transformation between two of the hom's objects. `cells` is indexed by
/// the 1-cells of the domain and is empty for bare transformations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Transformation {
    pub source: usize,
    pub target: usize,
    pub components: Vec<usize>,
    pub cells: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Modification {
    pub source: usize,
    pub target: usize,
    pub components: Vec<usize>,
}

/// A hom-2-category with the data behind each of its cells: object `i` is
/// `functors[i]`, 1-cell `j` is `transformations[j]`, 2-cell `k` is
/// `modifications[k]`.
#[derive(Clone, Debug)]
pub struct Hom {
    pub kind: HomKind,
    pub domain: Arc<Fin2Category>,
    pub codomain: Arc<Fin2Category>,
    pub functors: Vec<TwoFunctor>,
    pub transformations: Vec<Transformation>,
    pub modifications: Vec<Modification>,
    pub cat: Arc<Fin2Category>,
    one_index: HashMap<Transformation, usize>,
    two_index: HashMap<Modification, usize>,
}

impl Hom {
    pub fn find_transformation(&self, t: &Transformation) -> Option<usize> {
        self.one_index.get(t).copied()
    }

    pub fn find_modification(&self, m: &Modification) -> Option<usize> {
        self.two_index.get(m).copied()
    }
}

/// Enumerates component choices `η_a ∈ B(Fa, Ga)`.
fn component_choices(a: &Fin2Category, b: &Fin2Category, f: &TwoFunctor, g: &TwoFunctor) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for x in 0..a.num_objects() {
        let hom = b.hom1(f.objects[x], g.objects[x]);
        out = out
            .into_iter()
            .flat_map(|c| {
                hom.iter().map(move |&h| {
                    let mut c2 = c.clone();
                    c2.push(h);
                    c2
                })
            })
            .collect();
    }
    out
}

/// The 2-cell `(Ff * Γ_b);μ_f` compared with `η_f;(Γ_a * Gf)`.
fn modification_axiom(
    b: &Fin2Category,
    f: &TwoFunctor,
    g: &TwoFunctor,
    eta_f: usize,
    mu_f: usize,
    gamma_a: usize,
    gamma_b: usize,
    h: usize,
) -> bool {
    let lhs = b
        .hcomp(b.id2(f.one_cells[h]), gamma_b)
        .and_then(|w| b.vcomp(w, mu_f));
    let rhs = b
        .hcomp(gamma_a, b.id2(g.one_cells[h]))
        .and_then(|w| b.vcomp(eta_f, w));
    lhs.is_some() && lhs == rhs
}

/// All pseudonatural transformations `F ⇒ G` (or only the 2-natural ones).
pub fn pseudonatural_transformations(
    f: &TwoFunctor,
    g: &TwoFunctor,
    strict_only: bool,
) -> Vec<(Vec<usize>, Vec<usize>)> {
    let (a, b) = (&*f.domain, &*f.codomain);
    let n1 = a.num_one_cells();
    // constraints by the last 1-cell they mention (in index order)
    let mut comp_at: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); n1];
    for (&(x, y), &xy) in a.underlying().composition_table() {
        comp_at[x.max(y).max(xy)].push((x, y, xy));
    }
    let mut nat_at: Vec<Vec<usize>> = vec![Vec::new(); n1];
    for s in 0..a.num_two_cells() {
        nat_at[a.src2(s).max(a.tgt2(s))].push(s);
    }
    let mut out = Vec::new();
    for comps in component_choices(a, b, f, g) {
        // candidates per 1-cell
        let mut cands: Vec<Vec<usize>> = Vec::with_capacity(n1);
        let mut feasible = true;
        for h in 0..n1 {
            let (x, y) = (a.src1(h), a.tgt1(h));
            let src = b.comp1(f.one_cells[h], comps[y]).unwrap();
            let tgt = b.comp1(comps[x], g.one_cells[h]).unwrap();
            let c: Vec<usize> = if a.is_identity1(h) {
                vec![b.id2(comps[x])]
            } else if strict_only {
                if src == tgt {
                    vec![b.id2(src)]
                } else {
                    vec![]
                }
            } else {
                b.hom2(src, tgt).iter().copied().filter(|&s| b.is_invertible2(s)).collect()
            };
            if c.is_empty() {
                feasible = false;
                break;
            }
            cands.push(c);
        }
        if !feasible {
            continue;
        }
        let mut cells = vec![usize::MAX; n1];
        let check = |h: usize, cells: &[usize]| -> bool {
            for &(x, y, xy) in &comp_at[h] {
                // η_{x;y} = (Fx * η_y);(η_x * Gy)
                let lhs = cells[xy];
                let rhs = b
                    .hcomp(b.id2(f.one_cells[x]), cells[y])
                    .zip(b.hcomp(cells[x], b.id2(g.one_cells[y])))
                    .and_then(|(u, v)| b.vcomp(u, v));
                if Some(lhs) != rhs {
                    return false;
                }
            }
            for &s in &nat_at[h] {
                let (x, y) = (a.src0(s), a.tgt0(s));
                let lhs = b
                    .hcomp(f.two_cells[s], b.id2(comps[y]))
                    .and_then(|w| b.vcomp(w, cells[a.tgt2(s)]));
                let rhs = b
                    .hcomp(b.id2(comps[x]), g.two_cells[s])
                    .and_then(|w| b.vcomp(cells[a.src2(s)], w));
                if lhs.is_none() || lhs != rhs {
                    return false;
                }
            }
            true
        };
        fn go(
            h: usize,
            cands: &[Vec<usize>],
            cells: &mut Vec<usize>,
            check: &dyn Fn(usize, &[usize]) -> bool,
            found: &mut Vec<Vec<usize>>,
        ) {
            if h == cands.len() {
                found.push(cells.clone());
                return;
            }
            for &c in &cands[h] {
                cells[h] = c;
                if check(h, cells) {
                    go(h + 1, cands, cells, check, found);
                }
            }
            cells[h] = usize::MAX;
        }
        let mut found = Vec::new();
        go(0, &cands, &mut cells, &check, &mut found);
        for c in found {
            out.push((comps.clone(), c));
        }
    }
    out
}

/// All modifications `η ⇛ μ` between transformations `F ⇒ G`. With empty
/// `cells` (bare transformations) every family of 2-cells qualifies.
pub fn modifications(
    f: &TwoFunctor,
    g: &TwoFunctor,
    eta: (&[usize], &[usize]),
    mu: (&[usize], &[usize]),
) -> Vec<Vec<usize>> {
    let (a, b) = (&*f.domain, &*f.codomain);
    let n0 = a.num_objects();
    let with_axiom = !eta.1.is_empty();
    let mut out = Vec::new();
    let mut comps = vec![usize::MAX; n0];
    fn go(
        x: usize,
        a: &Fin2Category,
        b: &Fin2Category,
        ctx: &dyn Fn(&[usize], usize) -> bool,
        eta: &[usize],
        mu: &[usize],
        comps: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if x == a.num_objects() {
            out.push(comps.clone());
            return;
        }
        for &s in b.hom2(eta[x], mu[x]) {
            comps[x] = s;
            if ctx(comps, x) {
                go(x + 1, a, b, ctx, eta, mu, comps, out);
            }
        }
        comps[x] = usize::MAX;
    }
    let ctx = |comps: &[usize], x: usize| -> bool {
        if !with_axiom {
            return true;
        }
        for h in 0..a.num_one_cells() {
            let (p, q) = (a.src1(h), a.tgt1(h));
            if p.max(q) != x {
                continue;
            }
            if !modification_axiom(b, f, g, eta.1[h], mu.1[h], comps[p], comps[q], h) {
                return false;
            }
        }
        true
    };
    go(0, a, b, &ctx, eta.0, mu.0, &mut comps, &mut out);
    out
}

pub fn build_hom(a: &Arc<Fin2Category>, b: &Arc<Fin2Category>, kind: HomKind, limits: &Limits) -> Result<Hom> {
    let functors = enumerate_2functors(a, b, limits)?;
    build_hom_on(a, b, kind, functors, limits)
}

/// The hom-2-category with a given list of objects.
pub fn build_hom_on(
    a: &Arc<Fin2Category>,
    b: &Arc<Fin2Category>,
    kind: HomKind,
    functors: Vec<TwoFunctor>,
    limits: &Limits,
) -> Result<Hom> {
    let nf = functors.len();
    limits.check_cells("hom objects", nf)?;
    let mut transformations = Vec::new();
    for i in 0..nf {
        for j in 0..nf {
            let (f, g) = (&functors[i], &functors[j]);
            match kind {
                HomKind::Funny => {
                    for comps in component_choices(a, b, f, g) {
                        transformations.push(Transformation {
                            source: i,
                            target: j,
                            components: comps,
                            cells: Vec::new(),
                        });
                    }
                }
                HomKind::Strict | HomKind::Pseudo => {
                    for (comps, cells) in pseudonatural_transformations(f, g, kind == HomKind::Strict) {
                        transformations.push(Transformation {
                            source: i,
                            target: j,
                            components: comps,
                            cells,
                        });
                    }
                }
            }
            limits.check_cells("hom 1-cells", transformations.len())?;
        }
    }
    let one_index: HashMap<Transformation, usize> =
        transformations.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
    let mut modifications_out = Vec::new();
    let mut by_pair: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for (i, t) in transformations.iter().enumerate() {
        by_pair.entry((t.source, t.target)).or_default().push(i);
    }
    let mut keys: Vec<_> = by_pair.keys().copied().collect();
    keys.sort_unstable();
    for key in &keys {
        let list = &by_pair[key];
        let (f, g) = (&functors[key.0], &functors[key.1]);
        for &p in list {
            for &q in list {
                let (t, u) = (&transformations[p], &transformations[q]);
                for comps in modifications(f, g, (&t.components, &t.cells), (&u.components, &u.cells)) {
                    modifications_out.push(Modification {
                        source: p,
                        target: q,
                        components: comps,
                    });
                }
            }
        }
        limits.check_cells("hom 2-cells", modifications_out.len())?;
    }
    // order 2-cells by source 1-cell for readability
    modifications_out.sort_by_key(|m| (m.source, m.target));
    let two_index: HashMap<Modification, usize> =
        modifications_out.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();

    let bb = &**b;
    let identity_transformation = |i: usize| -> Transformation {
        let f = &functors[i];
        Transformation {
            source: i,
            target: i,
            components: f.objects.iter().map(|&x| bb.id1(x)).collect(),
            cells: match kind {
                HomKind::Funny => Vec::new(),
                _ => f.one_cells.iter().map(|&h| bb.id2(h)).collect(),
            },
        }
    };
    let identities: Vec<usize> = (0..nf)
        .map(|i| {
            one_index
                .get(&identity_transformation(i))
                .copied()
                .ok_or_else(|| Error::axiom("identity transformation enumerated", format!("F{i}")))
        })
        .collect::<Result<_>>()?;
    let compose_t = |t: &Transformation, u: &Transformation| -> Transformation {
        let components = t
            .components
            .iter()
            .zip(&u.components)
            .map(|(&x, &y)| bb.comp1(x, y).unwrap())
            .collect();
        let cells = if t.cells.is_empty() {
            Vec::new()
        } else {
            (0..a.num_one_cells())
                .map(|k| {
                    let (p, q) = (a.src1(k), a.tgt1(k));
                    let first = bb.hcomp(t.cells[k], bb.id2(u.components[q])).unwrap();
                    let second = bb.hcomp(bb.id2(t.components[p]), u.cells[k]).unwrap();
                    bb.vcomp(first, second).unwrap()
                })
                .collect()
        };
        Transformation {
            source: t.source,
            target: u.target,
            components,
            cells,
        }
    };
    let mut comp = HashMap::new();
    let mut from_obj: Vec<Vec<usize>> = vec![Vec::new(); nf];
    for (i, t) in transformations.iter().enumerate() {
        from_obj[t.source].push(i);
    }
    for (i, t) in transformations.iter().enumerate() {
        for &j in &from_obj[t.target] {
            let r = compose_t(t, &transformations[j]);
            let k = one_index
                .get(&r)
                .copied()
                .ok_or_else(|| Error::axiom("transformations closed under composition", format!("t{i};t{j}")))?;
            comp.insert((i, j), k);
        }
    }
    let objects: Vec<String> = (0..nf).map(|i| format!("F{i}")).collect();
    let arrows: Vec<Arrow> = transformations
        .iter()
        .enumerate()
        .map(|(i, t)| Arrow {
            name: if identities[t.source] == i {
                format!("1_F{}", t.source)
            } else {
                format!("t{i}")
            },
            source: t.source,
            target: t.target,
        })
        .collect();
    let base = FinCategory::from_parts(objects, arrows, identities, comp.clone())?;
    let id2: Vec<usize> = transformations
        .iter()
        .enumerate()
        .map(|(i, t)| {
            two_index[&Modification {
                source: i,
                target: i,
                components: t.components.iter().map(|&x| bb.id2(x)).collect(),
            }]
        })
        .collect();
    let cells: Vec<Cell> = modifications_out
        .iter()
        .enumerate()
        .map(|(k, m)| Cell {
            name: if id2[m.source] == k {
                format!("1_{}", base.arrow(m.source).name)
            } else {
                format!("m{k}")
            },
            source: m.source,
            target: m.target,
        })
        .collect();
    let mut from_one: Vec<Vec<usize>> = vec![Vec::new(); transformations.len()];
    for (k, m) in modifications_out.iter().enumerate() {
        from_one[m.source].push(k);
    }
    let mut vcomp = HashMap::new();
    for (k, m) in modifications_out.iter().enumerate() {
        for &l in &from_one[m.target] {
            let n = &modifications_out[l];
            let r = Modification {
                source: m.source,
                target: n.target,
                components: m
                    .components
                    .iter()
                    .zip(&n.components)
                    .map(|(&x, &y)| bb.vcomp(x, y).unwrap())
                    .collect(),
            };
            vcomp.insert((k, l), two_index[&r]);
        }
    }
    let mut hcomp = HashMap::new();
    for (k, m) in modifications_out.iter().enumerate() {
        let mid = transformations[m.source].target;
        for &j in &from_obj[mid] {
            for &l in &from_one[j] {
                let n = &modifications_out[l];
                let r = Modification {
                    source: comp[&(m.source, n.source)],
                    target: comp[&(m.target, n.target)],
                    components: m
                        .components
                        .iter()
                        .zip(&n.components)
                        .map(|(&x, &y)| bb.hcomp(x, y).unwrap())
                        .collect(),
                };
                let idx = two_index
                    .get(&r)
                    .copied()
                    .ok_or_else(|| Error::axiom("modifications closed under horizontal composition", format!("m{k}*m{l}")))?;
                hcomp.insert((k, l), idx);
            }
        }
    }
    let cat = Fin2Category::from_parts(Arc::new(base), cells, id2, vcomp, hcomp)?;
    Ok(Hom {
        kind,
        domain: a.clone(),
        codomain: b.clone(),
        functors,
        transformations,
        modifications: modifications_out,
        cat: Arc::new(cat),
        one_index,
        two_index,
    })
}

/// `J₁: [A,B] → Ps(A,B)`, `J₂: Ps(A,B) → [A,B]_f` and `J: [A,B] → [A,B]_f`.
#[derive(Clone, Debug)]
pub struct Inclusions {
    pub j1: TwoFunctor,
    pub j2: TwoFunctor,
    pub j: TwoFunctor,
}

fn include(from: &Hom, to: &Hom) -> Result<TwoFunctor> {
    let forget = to.kind == HomKind::Funny;
    let one_cells = from
        .transformations
        .iter()
        .map(|t| {
            let key = Transformation {
                cells: if forget { Vec::new() } else { t.cells.clone() },
                ..t.clone()
            };
            to.find_transformation(&key)
                .ok_or_else(|| Error::axiom("inclusion of transformations", format!("{t:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    let two_cells = from
        .modifications
        .iter()
        .map(|m| {
            let key = Modification {
                source: one_cells[m.source],
                target: one_cells[m.target],
                components: m.components.clone(),
            };
            to.find_modification(&key)
                .ok_or_else(|| Error::axiom("inclusion of modifications", format!("{m:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TwoFunctor {
        domain: from.cat.clone(),
        codomain: to.cat.clone(),
        objects: (0..from.functors.len()).collect(),
        one_cells,
        two_cells,
    })
}

pub fn inclusions(strict: &Hom, pseudo: &Hom, funny: &Hom) -> Result<Inclusions> {
    if strict.kind != HomKind::Strict || pseudo.kind != HomKind::Pseudo || funny.kind != HomKind::Funny {
        return Err(Error::malformed("inclusions need the strict, pseudo and funny homs in that order"));
    }
    let j1 = include(strict, pseudo)?;
    let j2 = include(pseudo, funny)?;
    let j = include(strict, funny)?;
    for f in [&j1, &j2, &j] {
        f.validate()?;
    }
    Ok(Inclusions { j1, j2, j })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{catalog, count_2functors, iso_2categories};

    fn arc(n: &str) -> Arc<Fin2Category> {
        catalog::get_arc(n).unwrap()
    }

    #[test]
    fn pseudo_hom_s1_s1() {
        let l = Limits::default();
        let h = build_hom(&arc("S1"), &arc("S1"), HomKind::Pseudo, &l).unwrap();
        h.cat.validate().unwrap();
        assert_eq!(h.cat.num_objects(), 3);
        let id = h.functors.iter().position(|f| *f == TwoFunctor::identity(arc("S1"))).unwrap();
        assert_eq!(h.cat.hom1(id, id).len(), 1);
    }

    #[test]
    fn funny_hom_between_constants() {
        let l = Limits::default();
        let h = build_hom(&arc("S1"), &arc("S1"), HomKind::Funny, &l).unwrap();
        h.cat.validate().unwrap();
        let c0 = h.functors.iter().position(|f| f.objects == [0, 0]).unwrap();
        let c1 = h.functors.iter().position(|f| f.objects == [1, 1]).unwrap();
        // B(0,1) x B(0,1) with B(0,1) = {u}
        assert_eq!(h.cat.hom1(c0, c1).len(), 1);
    }

    #[test]
    fn unary_homs_are_the_codomain() {
        let l = Limits::default();
        for n in ["S1", "S2", "walking-iso"] {
            for kind in [HomKind::Strict, HomKind::Funny, HomKind::Pseudo] {
                let h = build_hom(&arc("S0"), &arc(n), kind, &l).unwrap();
                assert!(iso_2categories(&h.cat, &arc(n), &l).unwrap().is_some(), "{n} {kind:?}");
            }
        }
    }

    #[test]
    fn inclusion_triangle_commutes() {
        let l = Limits::default();
        for (x, y) in [("S1", "S1"), ("S2", "S1"), ("S1", "walking-iso"), ("S1", "S2")] {
            let (a, b) = (arc(x), arc(y));
            let s = build_hom(&a, &b, HomKind::Strict, &l).unwrap();
            let p = build_hom(&a, &b, HomKind::Pseudo, &l).unwrap();
            let f = build_hom(&a, &b, HomKind::Funny, &l).unwrap();
            for h in [&s, &p, &f] {
                h.cat.validate().unwrap();
            }
            let inc = inclusions(&s, &p, &f).unwrap();
            assert!(inc.j1.then(&inc.j2).unwrap().same_action(&inc.j));
        }
    }

    #[test]
    fn pseudo_components_are_invertible() {
        let l = Limits::default();
        let p = build_hom(&arc("S1"), &arc("walking-iso"), HomKind::Pseudo, &l).unwrap();
        let b = arc("walking-iso");
        for t in &p.transformations {
            assert!(t.cells.iter().all(|&c| b.is_invertible2(c)));
        }
    }

    #[test]
    fn ps_adjunction_counts() {
        // |2-Cat(A, Ps(B,C))| = |2-Cat(B, Ps(A,C))|
        let l = Limits::default();
        for (x, y, z) in [("S1", "S1", "S1"), ("S1", "S2", "walking-iso"), ("S2", "S1", "S2")] {
            let (a, b, c) = (arc(x), arc(y), arc(z));
            let pbc = build_hom(&b, &c, HomKind::Pseudo, &l).unwrap();
            let pac = build_hom(&a, &c, HomKind::Pseudo, &l).unwrap();
            assert_eq!(
                count_2functors(&a, &pbc.cat, &l).unwrap(),
                count_2functors(&b, &pac.cat, &l).unwrap(),
                "{x} {y} {z}"
            );
        }
    }
}
