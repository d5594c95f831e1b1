//! Exhaustive backtracking search for 2-functors.
//!
//! Variables are the objects, 1-cells and 2-cells of the domain, branched on
//! in that order. Every assignment propagates what it forces: boundaries,
//! identities, and composites whose operands are both known.

use std::ops::ControlFlow;
use std::sync::Arc;

use super::functor::TwoFunctor;
use super::two_category::Fin2Category;
use crate::config::Limits;
use crate::error::Result;

const UNSET: usize = usize::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Obj,
    One,
    Two,
}

struct Search<'a> {
    a: &'a Fin2Category,
    b: &'a Fin2Category,
    injective: bool,
    val: [Vec<usize>; 3],
    used: [Vec<bool>; 3],
    trail: Vec<(Kind, usize)>,
    queue: Vec<(Kind, usize)>,
    comp1_at: Vec<Vec<(usize, usize, usize)>>,
    vcomp_at: Vec<Vec<(usize, usize, usize)>>,
    hcomp_at: Vec<Vec<(usize, usize, usize)>>,
    sig: Option<[Vec<u64>; 3]>,
    sig_b: Option<[Vec<u64>; 3]>,
}

fn k(kind: Kind) -> usize {
    match kind {
        Kind::Obj => 0,
        Kind::One => 1,
        Kind::Two => 2,
    }
}

fn signatures(c: &Fin2Category) -> [Vec<u64>; 3] {
    let base = c.underlying();
    let obj = (0..c.num_objects())
        .map(|x| {
            let loops = base.hom(x, x).len() as u64;
            (base.outgoing(x).len() as u64) << 40 | (base.incoming(x).len() as u64) << 20 | loops
        })
        .collect();
    let mut into = vec![0u64; c.num_one_cells()];
    for s in 0..c.num_two_cells() {
        into[c.tgt2(s)] += 1;
    }
    let one = (0..c.num_one_cells())
        .map(|f| {
            let hom = base.hom(c.src1(f), c.tgt1(f)).len() as u64;
            (c.is_identity1(f) as u64) << 60 | (c.cells_from(f).len() as u64) << 40 | into[f] << 20 | hom
        })
        .collect();
    let two = (0..c.num_two_cells())
        .map(|s| (c.is_identity2(s) as u64) << 1 | c.is_invertible2(s) as u64)
        .collect();
    [obj, one, two]
}

impl<'a> Search<'a> {
    fn new(a: &'a Fin2Category, b: &'a Fin2Category, injective: bool) -> Self {
        let mut comp1_at = vec![Vec::new(); a.num_one_cells()];
        for (&(f, g), &h) in a.underlying().composition_table() {
            let e = (f, g, h);
            comp1_at[f].push(e);
            if g != f {
                comp1_at[g].push(e);
            }
            if h != f && h != g {
                comp1_at[h].push(e);
            }
        }
        let index = |table: &std::collections::HashMap<(usize, usize), usize>| {
            let mut at = vec![Vec::new(); a.num_two_cells()];
            let mut entries: Vec<_> = table.iter().map(|(&(s, t), &r)| (s, t, r)).collect();
            entries.sort_unstable();
            for e in entries {
                at[e.0].push(e);
                if e.1 != e.0 {
                    at[e.1].push(e);
                }
                if e.2 != e.0 && e.2 != e.1 {
                    at[e.2].push(e);
                }
            }
            at
        };
        for v in comp1_at.iter_mut() {
            v.sort_unstable();
        }
        let (sig, sig_b) = if injective {
            (Some(signatures(a)), Some(signatures(b)))
        } else {
            (None, None)
        };
        Search {
            a,
            b,
            injective,
            val: [
                vec![UNSET; a.num_objects()],
                vec![UNSET; a.num_one_cells()],
                vec![UNSET; a.num_two_cells()],
            ],
            used: [
                vec![false; b.num_objects()],
                vec![false; b.num_one_cells()],
                vec![false; b.num_two_cells()],
            ],
            trail: Vec::new(),
            queue: Vec::new(),
            comp1_at,
            vcomp_at: index(a.vcomp_table()),
            hcomp_at: index(a.hcomp_table()),
            sig,
            sig_b,
        }
    }

    /// Assigns `kind[i] := v`, or checks consistency if already assigned.
    fn assign(&mut self, kind: Kind, i: usize, v: usize) -> bool {
        let cur = self.val[k(kind)][i];
        if cur != UNSET {
            return cur == v;
        }
        if self.injective {
            if self.used[k(kind)][v] {
                return false;
            }
            if let (Some(sa), Some(sb)) = (&self.sig, &self.sig_b) {
                if sa[k(kind)][i] != sb[k(kind)][v] {
                    return false;
                }
            }
            self.used[k(kind)][v] = true;
        }
        self.val[k(kind)][i] = v;
        self.trail.push((kind, i));
        self.queue.push((kind, i));
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let (kind, i) = self.trail.pop().unwrap();
            let v = self.val[k(kind)][i];
            if self.injective {
                self.used[k(kind)][v] = false;
            }
            self.val[k(kind)][i] = UNSET;
        }
        self.queue.clear();
    }

    fn propagate(&mut self) -> bool {
        while let Some((kind, i)) = self.queue.pop() {
            let v = self.val[k(kind)][i];
            let ok = match kind {
                Kind::Obj => self.assign(Kind::One, self.a.id1(i), self.b.id1(v)),
                Kind::One => {
                    self.assign(Kind::Obj, self.a.src1(i), self.b.src1(v))
                        && self.assign(Kind::Obj, self.a.tgt1(i), self.b.tgt1(v))
                        && self.assign(Kind::Two, self.a.id2(i), self.b.id2(v))
                        && self.entries(Kind::One, i)
                }
                Kind::Two => {
                    self.assign(Kind::One, self.a.src2(i), self.b.src2(v))
                        && self.assign(Kind::One, self.a.tgt2(i), self.b.tgt2(v))
                        && self.entries(Kind::Two, i)
                }
            };
            if !ok {
                return false;
            }
        }
        true
    }

    fn entries(&mut self, kind: Kind, i: usize) -> bool {
        let lists: Vec<(bool, Vec<(usize, usize, usize)>)> = match kind {
            Kind::One => vec![(false, self.comp1_at[i].clone())],
            Kind::Two => vec![(true, self.vcomp_at[i].clone()), (false, self.hcomp_at[i].clone())],
            Kind::Obj => Vec::new(),
        };
        for (vertical, list) in lists {
            for (s, t, r) in list {
                let (vs, vt) = (self.val[k(kind)][s], self.val[k(kind)][t]);
                if vs == UNSET || vt == UNSET {
                    continue;
                }
                let img = match (kind, vertical) {
                    (Kind::One, _) => self.b.comp1(vs, vt),
                    (_, true) => self.b.vcomp(vs, vt),
                    (_, false) => self.b.hcomp(vs, vt),
                };
                let Some(img) = img else { return false };
                if !self.assign(kind, r, img) {
                    return false;
                }
            }
        }
        true
    }

    fn next_var(&self) -> Option<(Kind, usize)> {
        for kind in [Kind::Obj, Kind::One, Kind::Two] {
            if let Some(i) = self.val[k(kind)].iter().position(|&v| v == UNSET) {
                return Some((kind, i));
            }
        }
        None
    }

    fn candidates(&self, kind: Kind, i: usize) -> Vec<usize> {
        match kind {
            Kind::Obj => (0..self.b.num_objects()).collect(),
            Kind::One => {
                let (x, y) = (self.val[0][self.a.src1(i)], self.val[0][self.a.tgt1(i)]);
                self.b.hom1(x, y).to_vec()
            }
            Kind::Two => {
                let (f, g) = (self.val[1][self.a.src2(i)], self.val[1][self.a.tgt2(i)]);
                self.b.hom2(f, g).to_vec()
            }
        }
    }

    fn run(&mut self, visit: &mut dyn FnMut(&[usize], &[usize], &[usize]) -> ControlFlow<()>) -> ControlFlow<()> {
        let Some((kind, i)) = self.next_var() else {
            return visit(&self.val[0], &self.val[1], &self.val[2]);
        };
        for v in self.candidates(kind, i) {
            let mark = self.trail.len();
            if self.assign(kind, i, v) && self.propagate() {
                self.run(visit)?;
            }
            self.undo(mark);
        }
        ControlFlow::Continue(())
    }
}

/// Calls `visit` with the object, 1-cell and 2-cell tables of every
/// 2-functor `a → b`, in canonical order.
pub fn for_each_2functor(
    a: &Fin2Category,
    b: &Fin2Category,
    limits: &Limits,
    mut visit: impl FnMut(&[usize], &[usize], &[usize]) -> ControlFlow<()>,
) -> Result<()> {
    limits.check_operand("domain", a)?;
    limits.check_operand("codomain", b)?;
    let _ = Search::new(a, b, false).run(&mut visit);
    Ok(())
}

/// All 2-functors `a → b`, each validated.
pub fn enumerate_2functors(a: &Arc<Fin2Category>, b: &Arc<Fin2Category>, limits: &Limits) -> Result<Vec<TwoFunctor>> {
    let mut out = Vec::new();
    for_each_2functor(a, b, limits, |o, f, s| {
        out.push(TwoFunctor {
            domain: a.clone(),
            codomain: b.clone(),
            objects: o.to_vec(),
            one_cells: f.to_vec(),
            two_cells: s.to_vec(),
        });
        ControlFlow::Continue(())
    })?;
    for f in &out {
        f.validate()?;
    }
    Ok(out)
}

pub fn count_2functors(a: &Fin2Category, b: &Fin2Category, limits: &Limits) -> Result<usize> {
    let mut n = 0;
    for_each_2functor(a, b, limits, |_, _, _| {
        n += 1;
        ControlFlow::Continue(())
    })?;
    Ok(n)
}

/// An isomorphism `c → d`, if one exists.
pub fn iso_2categories(c: &Arc<Fin2Category>, d: &Arc<Fin2Category>, limits: &Limits) -> Result<Option<TwoFunctor>> {
    limits.check_operand("domain", c)?;
    limits.check_operand("codomain", d)?;
    if c.counts() != d.counts() {
        return Ok(None);
    }
    let mut found = None;
    let _ = Search::new(c, d, true).run(&mut |o, f, s| {
        found = Some(TwoFunctor {
            domain: c.clone(),
            codomain: d.clone(),
            objects: o.to_vec(),
            one_cells: f.to_vec(),
            two_cells: s.to_vec(),
        });
        ControlFlow::Break(())
    });
    if let Some(f) = &found {
        f.validate()?;
        debug_assert!(f.is_isomorphism());
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::catalog;

    fn cell(i: usize) -> Arc<Fin2Category> {
        Arc::new(catalog::standard_cell(i))
    }

    #[test]
    fn counts_out_of_small_cells() {
        let l = Limits::default();
        assert_eq!(count_2functors(&cell(1), &cell(1), &l).unwrap(), 3);
        assert_eq!(count_2functors(&cell(1), &cell(0), &l).unwrap(), 1);
        assert_eq!(count_2functors(&cell(0), &cell(2), &l).unwrap(), 2);
        // S2 -> S2: constants (2), identity-like on objects with f,g images and alpha
        // images: (f,f,1),(g,g,1),(f,g,alpha) -> 3, total 5
        assert_eq!(count_2functors(&cell(2), &cell(2), &l).unwrap(), 5);
    }

    #[test]
    fn isomorphisms() {
        let l = Limits::default();
        let s1 = cell(1);
        assert_eq!(iso_2categories(&s1, &s1, &l).unwrap().unwrap(), TwoFunctor::identity(s1.clone()));
        assert!(iso_2categories(&s1, &cell(2), &l).unwrap().is_none());
    }
}
