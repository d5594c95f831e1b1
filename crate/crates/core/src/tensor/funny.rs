//! The funny tensor product `A ⋆ B` in the word model.

use std::collections::HashMap;
use std::sync::Arc;

use super::product::Product;
use super::words::{concat, AlternatingWord, Factors, Letter, Side};
use crate::config::Limits;
use crate::error::{Error, Result};
use crate::kernel::{uniquify, Arrow, Cell, Fin2Category, FinCategory, Functor, TwoFunctor};

/// The underlying category of `A ⋆ B`: objects are pairs `(a, b)` indexed
/// `a * |B₀| + b`, arrows are reduced alternating words, composition is
/// concatenation followed by reduction. Arrow `x` is the empty word at
/// object `x`.
#[derive(Clone, Debug)]
pub struct Funny {
    pub left: Arc<Fin2Category>,
    pub right: Arc<Fin2Category>,
    pub cat: Arc<FinCategory>,
    words: Vec<AlternatingWord>,
    index: HashMap<AlternatingWord, usize>,
}

impl Funny {
    pub fn factors(&self) -> Factors<'_> {
        Factors {
            left: &self.left,
            right: &self.right,
        }
    }

    pub fn obj(&self, a: usize, b: usize) -> usize {
        a * self.right.num_objects() + b
    }

    pub fn split_obj(&self, x: usize) -> (usize, usize) {
        (x / self.right.num_objects(), x % self.right.num_objects())
    }

    pub fn words(&self) -> &[AlternatingWord] {
        &self.words
    }

    pub fn word(&self, i: usize) -> &AlternatingWord {
        &self.words[i]
    }

    pub fn find(&self, w: &AlternatingWord) -> Option<usize> {
        self.index.get(w).copied()
    }

    /// The arrow of a raw letter sequence, after reduction.
    pub fn arrow_of(&self, source: (usize, usize), letters: &[Letter]) -> Result<usize> {
        let w = super::words::word_reduce(&self.factors(), source, letters)?;
        Ok(self.index[&w])
    }

    /// The one-letter word of a left 1-cell at a frozen right object.
    pub fn left_letter(&self, f: usize, b: usize) -> usize {
        self.arrow_of((self.left.src1(f), b), &[Letter::left(f, b)]).unwrap()
    }

    pub fn right_letter(&self, a: usize, g: usize) -> usize {
        self.arrow_of((a, self.right.src1(g)), &[Letter::right(g, a)]).unwrap()
    }
}

/// Breadth-first closure of reduced words.
///
/// Fails with `WordExplosion` when words of length `max_word_len` can still
/// be extended: the funny tensor is then larger than the bound allows, and
/// in the presence of composable endo-cycles it is infinite.
pub fn funny_underlying(a: &Arc<Fin2Category>, b: &Arc<Fin2Category>, limits: &Limits) -> Result<Funny> {
    let fx = Factors { left: a, right: b };
    let (na, nb) = (a.num_objects(), b.num_objects());
    let mut words: Vec<AlternatingWord> = (0..na)
        .flat_map(|x| (0..nb).map(move |y| AlternatingWord::empty((x, y))))
        .collect();
    let mut level: Vec<AlternatingWord> = Vec::new();
    for f in 0..a.num_one_cells() {
        if !a.is_identity1(f) {
            for y in 0..nb {
                level.push(AlternatingWord {
                    source: (a.src1(f), y),
                    target: (a.tgt1(f), y),
                    letters: vec![Letter::left(f, y)],
                });
            }
        }
    }
    for g in 0..b.num_one_cells() {
        if !b.is_identity1(g) {
            for x in 0..na {
                level.push(AlternatingWord {
                    source: (x, b.src1(g)),
                    target: (x, b.tgt1(g)),
                    letters: vec![Letter::right(g, x)],
                });
            }
        }
    }
    let mut len = 1;
    while !level.is_empty() {
        level.sort();
        words.extend(level.iter().cloned());
        limits.check_cells("funny tensor 1-cells", words.len())?;
        let mut next = Vec::new();
        for w in &level {
            let last = *w.letters.last().unwrap();
            let (x, y) = w.target;
            let side = last.side.other();
            let (factor, from, frozen) = match side {
                Side::Left => (a, x, y),
                Side::Right => (b, y, x),
            };
            for &h in factor.underlying().outgoing(from) {
                if factor.is_identity1(h) {
                    continue;
                }
                let l = Letter {
                    side,
                    cell: h,
                    frozen,
                };
                let mut letters = w.letters.clone();
                letters.push(l);
                next.push(AlternatingWord {
                    source: w.source,
                    target: fx.letter_target(l),
                    letters,
                });
            }
        }
        if !next.is_empty() && len >= limits.max_word_len {
            return Err(Error::WordExplosion {
                bound: limits.max_word_len,
            });
        }
        level = next;
        len += 1;
    }
    let index: HashMap<AlternatingWord, usize> = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let obj = |p: (usize, usize)| p.0 * nb + p.1;
    let mut outgoing: Vec<Vec<usize>> = vec![Vec::new(); na * nb];
    for (i, w) in words.iter().enumerate() {
        outgoing[obj(w.source)].push(i);
    }
    let mut comp = HashMap::new();
    for (i, w) in words.iter().enumerate() {
        for &j in &outgoing[obj(w.target)] {
            let r = concat(&fx, w, &words[j]);
            comp.insert((i, j), index[&r]);
        }
    }
    let objects = uniquify(
        (0..na)
            .flat_map(|x| (0..nb).map(move |y| (x, y)))
            .map(|(x, y)| format!("({},{})", a.object_name(x), b.object_name(y)))
            .collect(),
        |s| s,
    );
    let arrows = uniquify(
        words
            .iter()
            .map(|w| Arrow {
                name: w.name(&fx),
                source: obj(w.source),
                target: obj(w.target),
            })
            .collect(),
        |x| &mut x.name,
    );
    let cat = FinCategory::from_parts(objects, arrows, (0..na * nb).collect(), comp)?;
    Ok(Funny {
        left: a.clone(),
        right: b.clone(),
        cat: Arc::new(cat),
        words,
        index,
    })
}

/// `K` on underlying categories: each letter goes to `(f, 1_b)` or
/// `(1_a, g)`, and words to the composite of their letters.
pub fn comparison_k_underlying(funny: &Funny, product: &Product) -> Functor {
    let (a, b) = (&funny.left, &funny.right);
    let pc = &product.cat;
    let arrows = funny
        .words
        .iter()
        .map(|w| {
            let mut acc = pc.id1(product.obj(w.source.0, w.source.1));
            for l in &w.letters {
                let img = match l.side {
                    Side::Left => product.one(l.cell, b.id1(l.frozen)),
                    Side::Right => product.one(a.id1(l.frozen), l.cell),
                };
                acc = pc.comp1(acc, img).expect("letters chain");
            }
            acc
        })
        .collect();
    Functor {
        domain: funny.cat.clone(),
        codomain: pc.underlying().clone(),
        objects: (0..funny.cat.num_objects()).collect(),
        arrows,
    }
}

/// `A ⋆ B` as a 2-category, with 2-cells generated letterwise.
///
/// Between words of the same shape (same coordinates and frozen objects),
/// a 2-cell is a tuple of 2-cells of the factors, one per letter. This is
/// the hom-category of the pushout exactly when every 2-cell touching an
/// identity 1-cell is itself an identity; otherwise the construction
/// refuses with `UnsupportedInput`.
#[derive(Clone, Debug)]
pub struct FunnyFull {
    pub funny: Arc<Funny>,
    pub cat: Arc<Fin2Category>,
    /// Per 2-cell, the letterwise factor 2-cells (a [`Letter`] whose `cell`
    /// is a 2-cell index).
    cell_letters: Vec<Vec<Letter>>,
    index: HashMap<(usize, Vec<Letter>), usize>,
}

fn identities_are_rigid(c: &Fin2Category) -> bool {
    (0..c.num_two_cells())
        .all(|s| !(c.is_identity1(c.src2(s)) || c.is_identity1(c.tgt2(s))) || c.is_identity2(s))
}

/// Reduction of letterwise 2-cells: adjacent same-side letters fuse by
/// horizontal composition; letters on identity 1-cells (necessarily
/// identity 2-cells) disappear.
fn push_reduced2(fx: &Factors, out: &mut Vec<Letter>, l: Letter) {
    let c = fx.factor(l.side);
    if c.is_identity1(c.src2(l.cell)) {
        return;
    }
    match out.last() {
        Some(&last) if last.side == l.side => {
            out.pop();
            let fused = Letter {
                side: l.side,
                cell: c.hcomp(last.cell, l.cell).expect("adjacent 2-cells compose"),
                frozen: l.frozen,
            };
            push_reduced2(fx, out, fused);
        }
        _ => out.push(l),
    }
}

impl FunnyFull {
    pub fn cell_letters(&self, s: usize) -> &[Letter] {
        &self.cell_letters[s]
    }

    /// The 2-cell of a raw letterwise sequence starting at `source`, after reduction.
    pub fn cell_of(&self, source: usize, letters: &[Letter]) -> Option<usize> {
        let fx = self.funny.factors();
        let mut out = Vec::with_capacity(letters.len());
        for &l in letters {
            push_reduced2(&fx, &mut out, l);
        }
        self.index.get(&(source, out)).copied()
    }

    /// `K` as a 2-functor into the product.
    pub fn comparison_k(&self, product: &Product) -> TwoFunctor {
        let under = comparison_k_underlying(&self.funny, product);
        let (a, b) = (&self.funny.left, &self.funny.right);
        let pc = &product.cat;
        let two_cells = (0..self.cat.num_two_cells())
            .map(|s| {
                let mut acc = pc.id2(pc.id1(under.objects[self.cat.src0(s)]));
                for l in &self.cell_letters[s] {
                    let img = match l.side {
                        Side::Left => product.two(l.cell, b.id2(b.id1(l.frozen))),
                        Side::Right => product.two(a.id2(a.id1(l.frozen)), l.cell),
                    };
                    acc = pc.hcomp(acc, img).expect("letters chain");
                }
                acc
            })
            .collect();
        TwoFunctor {
            domain: self.cat.clone(),
            codomain: pc.clone(),
            objects: under.objects,
            one_cells: under.arrows,
            two_cells,
        }
    }

    /// The 2-functor out of `A ⋆ B` determined by its restrictions
    /// `left[b]: A → C` and `right[a]: B → C`, which must agree on objects.
    pub fn copair(&self, left: &[TwoFunctor], right: &[TwoFunctor], codomain: &Arc<Fin2Category>) -> Result<TwoFunctor> {
        let funny = &self.funny;
        let (na, nb) = (funny.left.num_objects(), funny.right.num_objects());
        if left.len() != nb || right.len() != na {
            return Err(Error::malformed("copair needs one restriction per object of the other factor"));
        }
        let mut objects = Vec::with_capacity(na * nb);
        for x in 0..na {
            for y in 0..nb {
                let o = left[y].objects[x];
                if right[x].objects[y] != o {
                    return Err(Error::axiom(
                        "copair restrictions agree on objects",
                        format!("({},{})", funny.left.object_name(x), funny.right.object_name(y)),
                    ));
                }
                objects.push(o);
            }
        }
        let one_cells = funny
            .words
            .iter()
            .map(|w| {
                let mut acc = codomain.id1(objects[funny.obj(w.source.0, w.source.1)]);
                for l in &w.letters {
                    let img = match l.side {
                        Side::Left => left[l.frozen].one_cells[l.cell],
                        Side::Right => right[l.frozen].one_cells[l.cell],
                    };
                    acc = codomain.comp1(acc, img).expect("images chain");
                }
                acc
            })
            .collect::<Vec<_>>();
        let two_cells = (0..self.cat.num_two_cells())
            .map(|s| {
                let mut acc = codomain.id2(codomain.id1(objects[self.cat.src0(s)]));
                for l in &self.cell_letters[s] {
                    let img = match l.side {
                        Side::Left => left[l.frozen].two_cells[l.cell],
                        Side::Right => right[l.frozen].two_cells[l.cell],
                    };
                    acc = codomain.hcomp(acc, img).expect("images chain");
                }
                acc
            })
            .collect();
        Ok(TwoFunctor {
            domain: self.cat.clone(),
            codomain: codomain.clone(),
            objects,
            one_cells,
            two_cells,
        })
    }

    /// The inclusion `A → A ⋆ B` at a frozen object `b`.
    pub fn include_left(&self, b: usize) -> TwoFunctor {
        let funny = &self.funny;
        let a = &funny.left;
        TwoFunctor {
            domain: a.clone(),
            codomain: self.cat.clone(),
            objects: (0..a.num_objects()).map(|x| funny.obj(x, b)).collect(),
            one_cells: (0..a.num_one_cells()).map(|f| funny.left_letter(f, b)).collect(),
            two_cells: (0..a.num_two_cells())
                .map(|s| self.cell_of(funny.obj(a.src0(s), b), &[Letter::left(s, b)]).unwrap())
                .collect(),
        }
    }

    /// The inclusion `B → A ⋆ B` at a frozen object `a`.
    pub fn include_right(&self, a: usize) -> TwoFunctor {
        let funny = &self.funny;
        let b = &funny.right;
        TwoFunctor {
            domain: b.clone(),
            codomain: self.cat.clone(),
            objects: (0..b.num_objects()).map(|y| funny.obj(a, y)).collect(),
            one_cells: (0..b.num_one_cells()).map(|g| funny.right_letter(a, g)).collect(),
            two_cells: (0..b.num_two_cells())
                .map(|s| self.cell_of(funny.obj(a, b.src0(s)), &[Letter::right(s, a)]).unwrap())
                .collect(),
        }
    }

    /// `F ⋆ G` into a given target funny tensor.
    pub fn map(&self, f: &TwoFunctor, g: &TwoFunctor, target: &FunnyFull) -> Result<TwoFunctor> {
        let left = (0..self.funny.right.num_objects())
            .map(|y| f.then(&target.include_left(g.objects[y])))
            .collect::<Result<Vec<_>>>()?;
        let right = (0..self.funny.left.num_objects())
            .map(|x| g.then(&target.include_right(f.objects[x])))
            .collect::<Result<Vec<_>>>()?;
        self.copair(&left, &right, &target.cat)
    }
}

pub fn funny_full(a: &Arc<Fin2Category>, b: &Arc<Fin2Category>, limits: &Limits) -> Result<FunnyFull> {
    let funny = Arc::new(funny_underlying(a, b, limits)?);
    funny_full_from(funny, limits)
}

pub fn funny_full_from(funny: Arc<Funny>, limits: &Limits) -> Result<FunnyFull> {
    let (a, b) = (&funny.left, &funny.right);
    for (c, side) in [(a, "left"), (b, "right")] {
        if !identities_are_rigid(c) {
            return Err(Error::UnsupportedInput(format!(
                "the {side} factor has a non-identity 2-cell touching an identity 1-cell; \
                 letterwise 2-cells are not certified for it"
            )));
        }
    }
    let fx = funny.factors();
    let base = &funny.cat;
    let mut cells: Vec<Cell> = Vec::new();
    let mut cell_letters: Vec<Vec<Letter>> = Vec::new();
    let mut index: HashMap<(usize, Vec<Letter>), usize> = HashMap::new();
    let mut from: Vec<Vec<usize>> = vec![Vec::new(); base.num_arrows()];
    let n0 = base.num_objects();
    let mut between: Vec<Vec<usize>> = vec![Vec::new(); n0 * n0];
    for (i, w) in funny.words.iter().enumerate() {
        // all letterwise tuples of 2-cells with source letters w
        let mut tuples: Vec<Vec<Letter>> = vec![Vec::new()];
        for l in &w.letters {
            let c = fx.factor(l.side);
            let mut next = Vec::new();
            for t in &tuples {
                for &s in c.cells_from(l.cell) {
                    let mut t2 = t.clone();
                    t2.push(Letter {
                        side: l.side,
                        cell: s,
                        frozen: l.frozen,
                    });
                    next.push(t2);
                }
            }
            tuples = next;
        }
        for t in tuples {
            let tw = AlternatingWord {
                source: w.source,
                target: w.target,
                letters: t
                    .iter()
                    .map(|l| Letter {
                        cell: fx.factor(l.side).tgt2(l.cell),
                        ..*l
                    })
                    .collect(),
            };
            let j = funny.index[&tw];
            let k = cells.len();
            let name = if t.iter().all(|l| fx.factor(l.side).is_identity2(l.cell)) {
                format!("1_{}", base.arrow(i).name)
            } else {
                t.iter()
                    .map(|l| match l.side {
                        Side::Left => format!("({},{})", a.two_cell_name(l.cell), b.object_name(l.frozen)),
                        Side::Right => format!("({},{})", a.object_name(l.frozen), b.two_cell_name(l.cell)),
                    })
                    .collect::<Vec<_>>()
                    .join(";")
            };
            cells.push(Cell {
                name,
                source: i,
                target: j,
            });
            from[i].push(k);
            between[base.source(i) * n0 + base.target(i)].push(k);
            index.insert((base.source(i), t.clone()), k);
            cell_letters.push(t);
        }
        limits.check_cells("funny tensor 2-cells", cells.len())?;
    }
    let id2: Vec<usize> = funny
        .words
        .iter()
        .enumerate()
        .map(|(i, w)| {
            let t: Vec<Letter> = w
                .letters
                .iter()
                .map(|l| Letter {
                    cell: fx.factor(l.side).id2(l.cell),
                    ..*l
                })
                .collect();
            index[&(base.source(i), t)]
        })
        .collect();
    let mut vcomp = HashMap::new();
    for (s, c) in cells.iter().enumerate() {
        for &t in &from[c.target] {
            let letters: Vec<Letter> = cell_letters[s]
                .iter()
                .zip(&cell_letters[t])
                .map(|(x, y)| Letter {
                    cell: fx.factor(x.side).vcomp(x.cell, y.cell).unwrap(),
                    ..*x
                })
                .collect();
            vcomp.insert((s, t), index[&(base.source(c.source), letters)]);
        }
    }
    let mut hcomp = HashMap::new();
    for x in 0..n0 {
        for y in 0..n0 {
            for &s in &between[x * n0 + y] {
                for z in 0..n0 {
                    for &t in &between[y * n0 + z] {
                        let mut out = cell_letters[s].clone();
                        for &l in &cell_letters[t] {
                            push_reduced2(&fx, &mut out, l);
                        }
                        let Some(&r) = index.get(&(x, out)) else {
                            return Err(Error::UnsupportedInput("letterwise 2-cells are not closed under whiskering".into()));
                        };
                        hcomp.insert((s, t), r);
                    }
                }
            }
        }
    }
    let cells = uniquify(cells, |c| &mut c.name);
    let cat = Fin2Category::from_parts(funny.cat.clone(), cells, id2, vcomp, hcomp)?;
    Ok(FunnyFull {
        funny,
        cat: Arc::new(cat),
        cell_letters,
        index,
    })
}
