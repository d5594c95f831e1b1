//! The acceptance criteria, one line of output each.

mod common;

use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use common::{arc, reduce_anywhere, walk};
use gray2cat::homs::{build_hom, inclusions, Hom, HomKind, Modification, Transformation};
use gray2cat::icon::cubical::{cub_bijection_backward, cub_bijection_forward, enumerate_cubical, ev_cubical, is_cubical, universal_r};
use gray2cat::icon::compose_pseudo;
use gray2cat::icon::pseudolimit::{icon_equivalence_q, pseudolimit_of_arrow};
use gray2cat::kernel::{catalog, count_2functors, enumerate_2functors, iso_2categories, Fin2Category, PseudoFunctor, TwoFunctor};
use gray2cat::ofs::{factor_2functor, is_boba, is_lff, solve_lifting, LeftLegData, LiftingSquare};
use gray2cat::tensor::{funny_underlying, gray_tensor, word_reduce, Factors, Gray, GrayCell, Letter};
use gray2cat::theory::*;
use gray2cat::{Error, Limits};
use rand::rngs::StdRng;
use rand::{RngExt, SeedableRng};

const SMALL: &[&str] = &["S0", "S1", "S2", "walking-iso"];

fn gray(a: &str, b: &str) -> Gray {
    gray_tensor(&arc(a), &arc(b), &Limits::generous()).unwrap()
}

/// Members with a nonidentity 1-cell from an object back to itself.
const CYCLIC: &[&str] = &["iso1", "loop"];

/// Catalog pairs with a finite funny tensor: at most one factor has cycles.
fn finite_pairs() -> Vec<(&'static str, &'static str)> {
    let n = catalog::NAMES;
    n.iter()
        .flat_map(|x| n.iter().map(move |y| (*x, *y)))
        .filter(|(x, y)| !(CYCLIC.contains(x) && CYCLIC.contains(y)))
        .collect()
}

fn finite_members() -> Vec<&'static str> {
    catalog::NAMES.iter().copied().filter(|n| *n != "loop").collect()
}

/// Cell counts of `A ⊗ B` by direct enumeration: every reduced alternating
/// word, and over each parallel pair of words the 2-cells of `A × B`
/// between their images.
fn counts_by_fibers(a: &Fin2Category, b: &Fin2Category) -> (usize, usize, usize) {
    // (source, target, left image, right image)
    let mut words: Vec<((usize, usize), (usize, usize), usize, usize)> = Vec::new();
    fn extend(
        a: &Fin2Category,
        b: &Fin2Category,
        src: (usize, usize),
        at: (usize, usize),
        img: (usize, usize),
        last: Option<bool>,
        depth: usize,
        out: &mut Vec<((usize, usize), (usize, usize), usize, usize)>,
    ) {
        assert!(depth < 32, "unbounded words");
        out.push((src, at, img.0, img.1));
        if last != Some(true) {
            for f in (0..a.num_one_cells()).filter(|&f| a.src1(f) == at.0 && !a.is_identity1(f)) {
                let next = (a.tgt1(f), at.1);
                extend(a, b, src, next, (a.comp1(img.0, f).unwrap(), img.1), Some(true), depth + 1, out);
            }
        }
        if last != Some(false) {
            for g in (0..b.num_one_cells()).filter(|&g| b.src1(g) == at.1 && !b.is_identity1(g)) {
                let next = (at.0, b.tgt1(g));
                extend(a, b, src, next, (img.0, b.comp1(img.1, g).unwrap()), Some(false), depth + 1, out);
            }
        }
    }
    for x in 0..a.num_objects() {
        for y in 0..b.num_objects() {
            extend(a, b, (x, y), (x, y), (a.id1(x), b.id1(y)), None, 0, &mut words);
        }
    }
    let mut two = 0;
    for v in &words {
        for w in words.iter().filter(|w| w.0 == v.0 && w.1 == v.1) {
            two += a.hom2(v.2, w.2).len() * b.hom2(v.3, w.3).len();
        }
    }
    (a.num_objects() * b.num_objects(), words.len(), two)
}

fn criterion_1() {
    let g = gray("S1", "S1");
    g.cat.validate().unwrap();
    assert_eq!(counts_by_fibers(&arc("S1"), &arc("S1")), (4, 10, 12));
    assert_eq!(g.cat.counts(), (4, 10, 12));
    let fixture = arc("pseudo-square");
    assert_eq!(fixture.counts(), (4, 10, 12));
    let iso = iso_2categories(&g.cat, &fixture, &Limits::default()).unwrap().expect("isomorphic");
    assert!(iso.is_isomorphism());
}

fn criterion_2() {
    let g = gray("S2", "S1");
    g.cat.validate().unwrap();
    let want = counts_by_fibers(&arc("S2"), &arc("S1"));
    assert_eq!(want, (4, 14, 24));
    assert_eq!(g.cat.counts(), want);
    let fixture = arc("gray-s2-s1");
    assert!(iso_2categories(&g.cat, &fixture, &Limits::default()).unwrap().is_some());

    // in the tensor: (α at 0 ▹ u) ; θ(g,u) = θ(f,u) ; (u ◃ α at 1)
    let (s2, s1) = (arc("S2"), arc("S1"));
    let (f, gg, alpha) = (s2.find_one_cell("f").unwrap(), s2.find_one_cell("g").unwrap(), s2.find_two_cell("alpha").unwrap());
    let u = s1.find_one_cell("u").unwrap();
    let c = &*g.cat;
    let alpha_at = |b: usize| {
        g.find_cell(GrayCell {
            source: g.funny.left_letter(f, b),
            target: g.funny.left_letter(gg, b),
            pair: g.product.two(alpha, s1.id2(s1.id1(b))),
        })
        .unwrap()
    };
    let (theta, theta2) = (g.interchanger(f, u), g.interchanger(gg, u));
    let lhs = c.vcomp(c.whisker_right(alpha_at(0), g.funny.right_letter(1, u)).unwrap(), theta2).unwrap();
    let rhs = c.vcomp(theta, c.whisker_left(g.funny.right_letter(0, u), alpha_at(1)).unwrap()).unwrap();
    assert_eq!(lhs, rhs);
    assert!(!c.is_identity2(lhs));

    // in the fixture: (alpha ▹ s) ; theta' = theta ; (r ◃ beta)
    let x = &*fixture;
    let cell = |n: &str| x.find_two_cell(n).unwrap();
    let one = |n: &str| x.find_one_cell(n).unwrap();
    let lhs = x.vcomp(x.whisker_right(cell("alpha"), one("s")).unwrap(), cell("theta'")).unwrap();
    let rhs = x.vcomp(cell("theta"), x.whisker_left(one("r"), cell("beta")).unwrap()).unwrap();
    assert_eq!(lhs, rhs);
}

fn criterion_3() {
    let limits = Limits::generous();
    let pairs = finite_pairs();
    let mut compared = 0;
    for &(x, y) in &pairs {
        {
            let g = gray(x, y);
            assert!(is_lff(&g.q), "{x} {y}");
            let p = g.p.underlying();
            assert!(p.is_bijective_on_objects() && p.is_bijective_on_arrows(), "{x} {y}");
            assert_eq!(p.then(&g.q.underlying()).unwrap(), g.k);
            let Some(ff) = &g.funny_full else { continue };
            let p = g.p.full().unwrap();
            assert!(is_boba(p));
            let k = ff.comparison_k(&g.product);
            assert!(p.then(&g.q).unwrap().same_action(&k), "{x} {y}");
            // the comparison between the two factorisations of K
            let fac = factor_2functor(&k, &limits).unwrap();
            let d = solve_lifting(&LiftingSquare {
                e: LeftLegData::Full(fac.e.clone()),
                m: g.q.clone(),
                top: LeftLegData::Full(p.clone()),
                bottom: fac.m.clone(),
            })
            .unwrap();
            let back = solve_lifting(&LiftingSquare {
                e: LeftLegData::Full(p.clone()),
                m: fac.m.clone(),
                top: LeftLegData::Full(fac.e.clone()),
                bottom: g.q.clone(),
            })
            .unwrap();
            assert!(d.is_isomorphism(), "{x} {y}");
            assert!(d.then(&back).unwrap().same_action(&TwoFunctor::identity(fac.middle.clone())));
            assert!(back.then(&d).unwrap().same_action(&TwoFunctor::identity(g.cat.clone())));
            compared += 1;
        }
    }
    assert_eq!(compared, pairs.len());
}

/// `Ps(B, C)` indices: functor, transformation and modification lookups.
fn functor_index(hom: &Hom, f: &TwoFunctor) -> usize {
    hom.functors.iter().position(|g| g.same_action(f)).expect("a 2-functor of the hom")
}

/// The transpose `2-Cat(A ⊗ B, C) → 2-Cat(A, Ps(B, C))`, built from the
/// tensor's letters and interchangers.
fn transpose(g: &Gray, gf: &TwoFunctor, hom: &Hom) -> TwoFunctor {
    let (a, b) = (g.left(), g.right());
    let c = &*gf.codomain;
    let fx = g.funny.factors();
    let word = |src: (usize, usize), l: Letter| g.funny.find(&word_reduce(&fx, src, &[l]).unwrap()).unwrap();
    let at = |x: usize| {
        let one_cells = (0..b.num_one_cells()).map(|h| gf.one_cells[word((x, b.src1(h)), Letter::right(h, x))]).collect();
        let two_cells = (0..b.num_two_cells())
            .map(|s| {
                let cell = GrayCell {
                    source: word((x, b.src1(b.src2(s))), Letter::right(b.src2(s), x)),
                    target: word((x, b.src1(b.tgt2(s))), Letter::right(b.tgt2(s), x)),
                    pair: g.product.two(a.id2(a.id1(x)), s),
                };
                gf.two_cells[g.find_cell(cell).unwrap()]
            })
            .collect();
        let objects = (0..b.num_objects()).map(|y| gf.objects[g.funny.obj(x, y)]).collect();
        functor_index(hom, &TwoFunctor::new(b.clone(), gf.codomain.clone(), objects, one_cells, two_cells).unwrap())
    };
    let objects: Vec<usize> = (0..a.num_objects()).map(at).collect();
    let one_cells: Vec<usize> = (0..a.num_one_cells())
        .map(|f| {
            let components = (0..b.num_objects()).map(|y| gf.one_cells[word((a.src1(f), y), Letter::left(f, y))]).collect();
            let cells = (0..b.num_one_cells())
                .map(|h| c.inverse2(gf.two_cells[g.interchanger(f, h)]).unwrap())
                .collect();
            let t = Transformation {
                source: objects[a.src1(f)],
                target: objects[a.tgt1(f)],
                components,
                cells,
            };
            hom.find_transformation(&t).expect("a pseudonatural transformation")
        })
        .collect();
    let two_cells = (0..a.num_two_cells())
        .map(|s| {
            let components = (0..b.num_objects())
                .map(|y| {
                    let cell = GrayCell {
                        source: word((a.src0(s), y), Letter::left(a.src2(s), y)),
                        target: word((a.src0(s), y), Letter::left(a.tgt2(s), y)),
                        pair: g.product.two(s, b.id2(b.id1(y))),
                    };
                    gf.two_cells[g.find_cell(cell).unwrap()]
                })
                .collect();
            let m = Modification {
                source: one_cells[a.src2(s)],
                target: one_cells[a.tgt2(s)],
                components,
            };
            hom.find_modification(&m).expect("a modification")
        })
        .collect();
    TwoFunctor::new(a.clone(), hom.cat.clone(), objects, one_cells, two_cells).unwrap()
}

/// `Ps(B, h): Ps(B, C) → Ps(B, C′)`.
fn postcompose(h: &TwoFunctor, from: &Hom, to: &Hom) -> TwoFunctor {
    let objects: Vec<usize> = from.functors.iter().map(|f| functor_index(to, &f.then(h).unwrap())).collect();
    let one_cells: Vec<usize> = from
        .transformations
        .iter()
        .map(|t| {
            to.find_transformation(&Transformation {
                source: objects[t.source],
                target: objects[t.target],
                components: t.components.iter().map(|&x| h.one_cells[x]).collect(),
                cells: t.cells.iter().map(|&x| h.two_cells[x]).collect(),
            })
            .unwrap()
        })
        .collect();
    let two_cells = from
        .modifications
        .iter()
        .map(|m| {
            to.find_modification(&Modification {
                source: one_cells[m.source],
                target: one_cells[m.target],
                components: m.components.iter().map(|&x| h.two_cells[x]).collect(),
            })
            .unwrap()
        })
        .collect();
    TwoFunctor::new(from.cat.clone(), to.cat.clone(), objects, one_cells, two_cells).unwrap()
}

fn criterion_4() {
    let limits = Limits::generous();
    for x in SMALL {
        for y in SMALL {
            let g = gray(x, y);
            for z in SMALL {
                let ps = build_hom(&arc(y), &arc(z), HomKind::Pseudo, &limits).unwrap();
                assert_eq!(
                    count_2functors(&g.cat, &arc(z), &limits).unwrap(),
                    count_2functors(&arc(x), &ps.cat, &limits).unwrap(),
                    "{x} {y} {z}"
                );
            }
        }
    }
    // the transpose is a bijection, natural in the codomain
    let maps = catalog::maps();
    assert_eq!(maps.len(), 5);
    for (x, y) in [("S1", "S1"), ("S2", "S1"), ("S1", "S2")] {
        let g = gray(x, y);
        for (name, h) in &maps {
            let from = build_hom(&arc(y), &h.domain, HomKind::Pseudo, &limits).unwrap();
            let to = build_hom(&arc(y), &h.codomain, HomKind::Pseudo, &limits).unwrap();
            let ph = postcompose(h, &from, &to);
            let maps_out = enumerate_2functors(&g.cat, &h.domain, &limits).unwrap();
            let mut images: Vec<TwoFunctor> = Vec::new();
            for gf in &maps_out {
                let t = transpose(&g, gf, &from);
                let moved = gf.then(h).unwrap();
                let t2 = transpose(&g, &moved, &to);
                assert!(t.then(&ph).unwrap().same_action(&t2), "{x} {y} {name}");
                assert!(!images.iter().any(|i| i.same_action(&t)));
                images.push(t);
            }
            assert_eq!(images.len(), count_2functors(&arc(x), &from.cat, &limits).unwrap());
        }
    }
}

fn criterion_5() {
    let limits = Limits::generous();
    let contractible = catalog::locally_contractible();
    assert!(contractible.len() >= 3);
    for c in &contractible {
        for b in catalog::NAMES {
            let (bb, cc) = (arc(b), arc(c));
            let s = build_hom(&bb, &cc, HomKind::Strict, &limits).unwrap();
            let p = build_hom(&bb, &cc, HomKind::Pseudo, &limits).unwrap();
            let f = build_hom(&bb, &cc, HomKind::Funny, &limits).unwrap();
            let inc = inclusions(&s, &p, &f).unwrap();
            assert!(inc.j2.is_isomorphism(), "{b} {c}");
        }
    }
    for x in SMALL {
        for y in SMALL {
            let g = gray(x, y);
            let p = g.p.full().unwrap();
            for c in contractible.iter().filter(|c| arc(c).num_one_cells() <= 10) {
                let cc = arc(c);
                let out: Vec<TwoFunctor> = enumerate_2functors(&g.cat, &cc, &limits)
                    .unwrap()
                    .iter()
                    .map(|gf| p.then(gf).unwrap())
                    .collect();
                for (i, f) in out.iter().enumerate() {
                    assert!(!out[..i].iter().any(|e| e.same_action(f)), "{x} {y} {c}");
                }
                assert_eq!(out.len(), count_2functors(&p.domain, &cc, &limits).unwrap(), "{x} {y} {c}");
            }
        }
    }
}

fn criterion_6() {
    let limits = Limits::generous();
    for (x, y) in finite_pairs() {
        {
            let g = gray(x, y);
            let r = universal_r(&g);
            r.validate().unwrap();
            assert!(is_cubical(&r, &g.product), "{x} {y}");
            let rq = compose_pseudo(&r, &PseudoFunctor::from_strict(&g.q)).unwrap();
            assert_eq!(rq, PseudoFunctor::from_strict(&TwoFunctor::identity(g.product.cat.clone())), "{x} {y}");
        }
    }
    for (y, z) in [("S1", "walking-iso"), ("S2", "S1"), ("S1", "pseudo-square")] {
        let hom = build_hom(&arc(y), &arc(z), HomKind::Pseudo, &limits).unwrap();
        let (prod, ev) = ev_cubical(&hom, &limits).unwrap();
        assert!(is_cubical(&ev, &prod));
    }
    for (x, y) in [("S1", "S1"), ("S2", "S1"), ("S1", "walking-iso")] {
        let g = gray(x, y);
        for target in ["S1", "S2", "walking-iso", "pseudo-square"] {
            let c = arc(target);
            let maps = enumerate_2functors(&g.cat, &c, &limits).unwrap();
            let cubs = enumerate_cubical(&g.product, &c, &limits).unwrap();
            assert_eq!(maps.len(), cubs.len());
            for m in &maps {
                let f = cub_bijection_forward(&g, m).unwrap();
                assert_eq!(&cub_bijection_backward(&g, &f).unwrap(), m);
            }
            for f in &cubs {
                let m = cub_bijection_backward(&g, f).unwrap();
                assert_eq!(&cub_bijection_forward(&g, &m).unwrap(), f);
            }
        }
    }
}

fn criterion_7() {
    let limits = Limits::generous();
    for (x, y) in finite_pairs() {
        {
            let g = gray(x, y);
            let eq = icon_equivalence_q(&g, &limits).unwrap();
            assert!(eq.certified(), "{x} {y}: {eq:?}");
            eq.unit.validate().unwrap();
            eq.unit_inverse.validate().unwrap();
        }
    }
    let pseudo = catalog::pseudo_maps();
    assert_eq!(pseudo.len(), 3);
    for (name, f) in pseudo {
        let cone = pseudolimit_of_arrow(&f, &limits).unwrap();
        let rep = cone.check_universal_property(&["S0", "S1", "S2"], &limits).unwrap();
        assert!(rep.passed() && rep.cones > 0 && rep.map_pairs > 0, "{name}: {rep:?}");
    }
}

fn criterion_8() {
    let setup = MonoidalSetup::new(Limits::default());
    let k = setup.k();
    let z = factor_operations(&setup.ambient, &k);
    let amb = &setup.ambient;
    for x in SMALL {
        for y in SMALL {
            let zm = z.op("m", &[arc(x), arc(y)]).unwrap();
            assert_eq!(*zm, *gray(x, y).cat, "{x} {y}");
        }
    }
    for (name, args) in [
        ("a", vec![arc("S1"), arc("S2"), arc("S1")]),
        ("l", vec![arc("S2")]),
        ("r", vec![arc("S2")]),
        ("b", vec![arc("S1"), arc("S2")]),
    ] {
        assert!(z.lift_theory_cell(&generator(name).unwrap(), &args).unwrap().is_isomorphism(), "{name}");
    }
    let r = coherence_check(amb, &z, Axiom::Pentagon, &[vec![arc("S1"); 4], vec![arc("S1"), arc("S2"), arc("S1"), arc("S1")]])
        .unwrap();
    assert_eq!(r.equations_checked, 2);
    let members = finite_members();
    let pairs: Vec<Vec<_>> = members
        .iter()
        .filter(|x| arc(x).num_one_cells() <= 10)
        .flat_map(|x| SMALL.iter().flat_map(move |y| [vec![arc(x), arc(y)], vec![arc(y), arc(x)]]))
        .collect();
    assert!(pairs.len() >= 40);
    coherence_check(amb, &z, Axiom::Triangle, &pairs).unwrap();
    coherence_check(amb, &z, Axiom::Symmetry, &pairs).unwrap();
    let r = coherence_check(amb, &z, Axiom::Hexagon, &[vec![arc("S1"), arc("S1"), arc("S2")]]).unwrap();
    assert_eq!(r.equations_checked, 2);
    let objects: Vec<Vec<_>> = SMALL
        .iter()
        .flat_map(|x| [vec![arc(x)], vec![arc(x), arc("S1")], vec![arc("S2"), arc(x)]])
        .chain([vec![arc("S1"), arc("S2"), arc("S1")]])
        .collect();
    let morphisms = morphism_probes();
    let gens = monoidal_generators();
    check_oplax_monoidal(amb, &z.left_map(), &gens, &objects, &morphisms).unwrap();
    check_oplax_monoidal(amb, &z.right_map(), &gens, &objects, &morphisms).unwrap();
}

fn morphism_probes() -> Vec<Vec<TwoFunctor>> {
    let id = TwoFunctor::identity(arc("S1"));
    catalog::maps()
        .into_iter()
        .flat_map(|(_, f)| [vec![f.clone(), id.clone()], vec![id.clone(), f]])
        .collect()
}

fn criterion_9() {
    let setup = MonoidalSetup::new(Limits::default());
    let x = Discrete::new(&setup.x);
    let y = Discrete::sharing(&setup.y, &x);
    let k = setup.k();
    let dk = DiscreteMap {
        inner: &k,
        source: &x,
        target: &y,
    };
    let amb = FinCat;
    let z = factor_operations(&amb, &dk);
    let s1 = arc("S1").underlying().clone();
    let p2 = arc("path2").underlying().clone();
    let s0 = arc("S0").underlying().clone();
    coherence_check(&amb, &z, Axiom::Pentagon, &[vec![s1.clone(); 4], vec![s1.clone(), p2.clone(), s1.clone(), s0.clone()]])
        .unwrap();
    coherence_check(&amb, &z, Axiom::Triangle, &[vec![s1.clone(), p2.clone()], vec![p2.clone(), s0.clone()]]).unwrap();
    coherence_check(&amb, &z, Axiom::Symmetry, &[vec![s1.clone(), p2.clone()]]).unwrap();
    coherence_check(&amb, &z, Axiom::Hexagon, &[vec![s1.clone(), s1.clone(), p2.clone()]]).unwrap();
    coherence_check(&amb, &z, Axiom::Inverses, &[vec![s1.clone(), p2.clone(), s0.clone()]]).unwrap();
    // m(S1, S1) in categories is the commutative square
    let sq = z.op("m", &[s1.clone(), s1.clone()]).unwrap();
    assert_eq!((sq.num_objects(), sq.num_arrows()), (4, 9));
}

fn criterion_10() {
    // confluence on fuzzed words
    let mut rng = StdRng::seed_from_u64(7);
    let pairs = [("S1", "S1"), ("iso1", "iso1"), ("S2", "path2"), ("loop", "iso1"), ("walking-iso", "loop")];
    for i in 0..1000 {
        let (x, y) = pairs[i % pairs.len()];
        let (a, b) = (arc(x), arc(y));
        let fx = Factors { left: &a, right: &b };
        let start = (rng.random_range(0..a.num_objects()), rng.random_range(0..b.num_objects()));
        let seeds: Vec<u16> = (0..rng.random_range(0..16)).map(|_| rng.random()).collect();
        let choices: Vec<u16> = (0..40).map(|_| rng.random()).collect();
        let letters = walk(&fx, start, &seeds);
        let w = word_reduce(&fx, start, &letters).unwrap();
        assert_eq!(w.letters, reduce_anywhere(&fx, letters, &choices));
    }
    // fillers of (boba, lff) squares
    let squares = common::exhaustive_filler_squares();
    assert!(squares >= 200, "{squares}");
    // (1, K) is oplax symmetric monoidal
    let setup = MonoidalSetup::new(Limits::default());
    let objects: Vec<Vec<_>> = finite_members()
        .iter()
        .filter(|x| arc(x).num_one_cells() <= 10)
        .flat_map(|x| [vec![arc(x)], vec![arc(x), arc("S1")], vec![arc("S1"), arc(x)]])
        .chain([vec![arc("S1"), arc("S2"), arc("walking-iso")], vec![arc("S0"), arc("S1"), arc("S2")]])
        .collect();
    let rep = check_oplax_monoidal(&setup.ambient, &setup.k(), &monoidal_generators(), &objects, &morphism_probes()).unwrap();
    assert_eq!(rep.naturality_probes, 10);
    // the endo-loop, and exactly the pairs of cyclic members, explode
    let lp = arc("loop");
    assert!(matches!(funny_underlying(&lp, &lp, &Limits::default()), Err(Error::WordExplosion { .. })));
    for x in CYCLIC {
        for y in CYCLIC {
            let r = gray_tensor(&arc(x), &arc(y), &Limits::generous());
            assert!(matches!(r, Err(Error::WordExplosion { .. })), "{x} {y}");
        }
    }
    assert_eq!(finite_pairs().len() + CYCLIC.len() * CYCLIC.len(), catalog::NAMES.len().pow(2));
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn()); 10] = [
        ("gray S1 S1 is the pseudo-commutative square (4, 10, 12)", criterion_1),
        ("gray S2 S1 matches its fixture, with the pasting equation", criterion_2),
        ("P is boba, Q is lff, Q∘P = K, and factoring K recovers the tensor", criterion_3),
        ("maps out of the tensor correspond to maps into pseudo-homs, naturally", criterion_4),
        ("J₂ invertible into locally contractible targets; precomposition with P bijects", criterion_5),
        ("R cubical, evaluation cubical, Q∘R = 1, cubical bijection round trips", criterion_6),
        ("Q is an icon equivalence; pseudolimits of three pseudofunctors", criterion_7),
        ("lifting engine in 2-categories gives the Gray monoidal structure", criterion_8),
        ("lifting engine in categories gives a coherent monoidal structure", criterion_9),
        ("property suites: confluence, fillers, (1, K) oplax, word explosion", criterion_10),
    ];
    let mut failed = Vec::new();
    let mut out = std::io::stdout().lock();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check));
        let secs = start.elapsed().as_secs_f64();
        let status = if outcome.is_ok() { "PASS" } else { "FAIL" };
        writeln!(out, "{status} [{:>2}] {name} ({secs:.1}s)", i + 1).unwrap();
        if outcome.is_err() {
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
