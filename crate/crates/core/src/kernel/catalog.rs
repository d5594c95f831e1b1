//! Named fixtures.
//!
//! | name           | shape                                                        |
//! |----------------|--------------------------------------------------------------|
//! | `S0`           | the terminal 2-category                                      |
//! | `S1`           | the free 1-cell `u: 0 → 1`                                   |
//! | `S2`           | the free 2-cell `alpha: f ⇒ g` between `f, g: 0 → 1`         |
//! | `walking-iso`  | an invertible 2-cell `phi: f ≅ g`                            |
//! | `iso1`         | an invertible 1-cell `u: 0 ≅ 1` with inverse `v`             |
//! | `path2`        | the composable pair `u: 0 → 1`, `v: 1 → 2`                   |
//! | `loop`         | one object with an idempotent `u;u = u`                      |
//! | `pseudo-square`| a square of 1-cells commuting up to `theta: rs ≅ fg`         |
//! | `gray-s2-s1`   | two such squares sharing `alpha` and `beta` whiskers          |

use std::sync::Arc;

use super::functor::TwoFunctor;
use super::pseudo::PseudoFunctor;
use super::two_category::{Fin2Category, ThinBuilder};

pub const NAMES: &[&str] = &[
    "S0",
    "S1",
    "S2",
    "walking-iso",
    "iso1",
    "path2",
    "loop",
    "pseudo-square",
    "gray-s2-s1",
];

pub fn describe(name: &str) -> Option<&'static str> {
    Some(match name {
        "S0" => "terminal 2-category: one object, identities only",
        "S1" => "free 1-cell u: 0 -> 1",
        "S2" => "free 2-cell alpha: f => g between parallel f, g: 0 -> 1",
        "walking-iso" => "invertible 2-cell phi: f => g with inverse phi'",
        "iso1" => "invertible 1-cell u: 0 -> 1 with inverse v",
        "path2" => "composable 1-cells u: 0 -> 1, v: 1 -> 2 and their composite",
        "loop" => "one object with an idempotent endo-1-cell u;u = u",
        "pseudo-square" => "square r;s, f;g commuting up to an invertible theta",
        "gray-s2-s1" => "two pseudo-commutative squares related by alpha and beta",
        _ => return None,
    })
}

/// The free `i`-cell, `i ∈ {0, 1, 2}`.
pub fn standard_cell(i: usize) -> Fin2Category {
    let b = ThinBuilder::new();
    let b = match i {
        0 => b.object("0"),
        1 => b.objects(&["0", "1"]).arrow("u", "0", "1"),
        2 => b
            .objects(&["0", "1"])
            .arrow("f", "0", "1")
            .arrow("g", "0", "1")
            .cell("alpha", "f", "g"),
        _ => panic!("standard cells exist in dimensions 0, 1 and 2"),
    };
    b.build().expect("standard cells are valid")
}

pub fn get(name: &str) -> Option<Fin2Category> {
    let b = ThinBuilder::new();
    let b = match name {
        "S0" => return Some(standard_cell(0)),
        "S1" => return Some(standard_cell(1)),
        "S2" => return Some(standard_cell(2)),
        "walking-iso" => b
            .objects(&["0", "1"])
            .arrow("f", "0", "1")
            .arrow("g", "0", "1")
            .cell("phi", "f", "g")
            .cell("phi'", "g", "f"),
        "iso1" => b
            .objects(&["0", "1"])
            .arrow("u", "0", "1")
            .arrow("v", "1", "0")
            .composite("u", "v", "1_0")
            .composite("v", "u", "1_1"),
        "path2" => b
            .objects(&["0", "1", "2"])
            .arrow("u", "0", "1")
            .arrow("v", "1", "2")
            .arrow("uv", "0", "2")
            .composite("u", "v", "uv"),
        "loop" => b.object("0").arrow("u", "0", "0").composite("u", "u", "u"),
        "pseudo-square" => b
            .objects(&["a", "b", "c", "d"])
            .arrow("r", "a", "b")
            .arrow("s", "b", "d")
            .arrow("f", "a", "c")
            .arrow("g", "c", "d")
            .arrow("rs", "a", "d")
            .arrow("fg", "a", "d")
            .composite("r", "s", "rs")
            .composite("f", "g", "fg")
            .cell("theta", "rs", "fg")
            .cell("theta'", "fg", "rs"),
        "gray-s2-s1" => b
            .objects(&["a", "b", "c", "d"])
            .arrow("r", "a", "b")
            .arrow("f", "a", "c")
            .arrow("f'", "a", "c")
            .arrow("g", "b", "d")
            .arrow("g'", "b", "d")
            .arrow("s", "c", "d")
            .arrow("sf", "a", "d")
            .arrow("sf'", "a", "d")
            .arrow("gr", "a", "d")
            .arrow("g'r", "a", "d")
            .composite("f", "s", "sf")
            .composite("f'", "s", "sf'")
            .composite("r", "g", "gr")
            .composite("r", "g'", "g'r")
            .cell("alpha", "f", "f'")
            .cell("beta", "g", "g'")
            .cell("theta", "sf", "gr")
            .cell("theta^-1", "gr", "sf")
            .cell("theta'", "sf'", "g'r")
            .cell("theta'^-1", "g'r", "sf'"),
        _ => return None,
    };
    Some(b.build().expect("catalog fixtures are valid"))
}

pub fn get_arc(name: &str) -> Option<Arc<Fin2Category>> {
    get(name).map(Arc::new)
}

/// The catalog members with exactly one 2-cell between parallel 1-cells.
pub fn locally_contractible() -> Vec<&'static str> {
    NAMES
        .iter()
        .copied()
        .filter(|n| get(n).unwrap().is_locally_contractible())
        .collect()
}

fn by_name(c: &Fin2Category, names: &[(&str, &str)], twos: &[(&str, &str)], d: &Fin2Category) -> (Vec<usize>, Vec<usize>) {
    let one = (0..c.num_one_cells())
        .map(|f| {
            let n = c.one_cell_name(f);
            let img = names.iter().find(|(a, _)| *a == n).map(|(_, b)| *b);
            match img {
                Some(b) => d.find_one_cell(b).unwrap(),
                None => panic!("no image for 1-cell {n}"),
            }
        })
        .collect::<Vec<_>>();
    let two = (0..c.num_two_cells())
        .map(|s| {
            let n = c.two_cell_name(s);
            match twos.iter().find(|(a, _)| *a == n) {
                Some((_, b)) => d.find_two_cell(b).unwrap(),
                None => d.id2(one[c.src2(s)]),
            }
        })
        .collect();
    (one, two)
}

/// A few named 2-functors between catalog members, used for naturality
/// spot checks: `(name, map)`.
pub fn maps() -> Vec<(&'static str, TwoFunctor)> {
    let s0 = get_arc("S0").unwrap();
    let s1 = get_arc("S1").unwrap();
    let s2 = get_arc("S2").unwrap();
    let wi = get_arc("walking-iso").unwrap();
    let mk = |name: &'static str, c: &Arc<Fin2Category>, d: &Arc<Fin2Category>, objs: Vec<usize>, ones: &[(&str, &str)], twos: &[(&str, &str)]| {
        let (one, two) = by_name(c, ones, twos, d);
        let f = TwoFunctor::new(c.clone(), d.clone(), objs, one, two).expect("catalog maps are 2-functors");
        (name, f)
    };
    vec![
        mk("S1->S0", &s1, &s0, vec![0, 0], &[("1_0", "1_0"), ("1_1", "1_0"), ("u", "1_0")], &[]),
        mk(
            "S2->S1 collapse",
            &s2,
            &s1,
            vec![0, 1],
            &[("1_0", "1_0"), ("1_1", "1_1"), ("f", "u"), ("g", "u")],
            &[],
        ),
        mk("S1->S2 source", &s1, &s2, vec![0, 1], &[("1_0", "1_0"), ("1_1", "1_1"), ("u", "f")], &[]),
        mk(
            "walking-iso->S1 collapse",
            &wi,
            &s1,
            vec![0, 1],
            &[("1_0", "1_0"), ("1_1", "1_1"), ("f", "u"), ("g", "u")],
            &[],
        ),
        mk(
            "S2->walking-iso",
            &s2,
            &wi,
            vec![0, 1],
            &[("1_0", "1_0"), ("1_1", "1_1"), ("f", "f"), ("g", "g")],
            &[("alpha", "phi")],
        ),
    ]
}

/// Pseudofunctors used as probes for pseudolimits of arrows.
pub fn pseudo_maps() -> Vec<(&'static str, PseudoFunctor)> {
    let s1 = get_arc("S1").unwrap();
    let mut out = vec![("identity on S1", PseudoFunctor::from_strict(&TwoFunctor::identity(s1.clone())))];
    for (name, f) in maps() {
        if name == "S1->S0" {
            out.push(("S1->S0", PseudoFunctor::from_strict(&f)));
        }
    }
    out.push(("path2 ~> pseudo-square", path_into_square()));
    out
}

/// `u ↦ r`, `v ↦ s`, but `uv ↦ fg`, with comparison `theta': fg ⇒ rs`.
fn path_into_square() -> PseudoFunctor {
    let p = get_arc("path2").unwrap();
    let q = get_arc("pseudo-square").unwrap();
    let ob = |n: &str| q.find_object(n).unwrap();
    let one = |n: &str| q.find_one_cell(n).unwrap();
    let objects = vec![ob("a"), ob("b"), ob("d")];
    let one_cells: Vec<usize> = (0..p.num_one_cells())
        .map(|h| match p.one_cell_name(h) {
            "u" => one("r"),
            "v" => one("s"),
            "uv" => one("fg"),
            _ => q.id1(objects[p.src1(h)]),
        })
        .collect();
    let two_cells = (0..p.num_two_cells()).map(|s| q.id2(one_cells[p.src2(s)])).collect();
    let unit = objects.iter().map(|&x| q.id2(q.id1(x))).collect();
    let (u, v) = (p.find_one_cell("u").unwrap(), p.find_one_cell("v").unwrap());
    let comp = p
        .underlying()
        .composition_table()
        .iter()
        .map(|(&(f, g), &fg)| {
            let cell = if (f, g) == (u, v) {
                q.find_two_cell("theta'").unwrap()
            } else {
                q.id2(one_cells[fg])
            };
            ((f, g), cell)
        })
        .collect();
    let f = PseudoFunctor {
        domain: p,
        codomain: q,
        objects,
        one_cells,
        two_cells,
        unit,
        comp,
    };
    f.validate().expect("catalog pseudofunctors are valid");
    f
}
