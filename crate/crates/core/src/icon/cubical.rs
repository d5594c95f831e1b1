//! Cubical functors out of `A × B` and their correspondence with 2-functors
//! out of `A ⊗ B`.
//!
//! A pseudofunctor `F: A × B ⇝ C` is cubical when it is normal and the
//! comparison at `((f₁, g₁), (f₂, g₂))` is an identity whenever `f₁` or `g₂`
//! is an identity. With `R(f, g)` the word "`g` then `f`", the universal
//! cubical functor `R: A × B ⇝ A ⊗ B` has comparisons carried by identity
//! pair cells, and `G ↦ R;G` is a bijection onto cubical functors.

use std::collections::HashMap;
use std::sync::Arc;

use super::compose_pseudo;
use crate::config::Limits;
use crate::error::{Error, Result};
use crate::homs::Hom;
use crate::kernel::{same, Fin2Category, PseudoFunctor, TwoFunctor};
use crate::tensor::words::Side;
use crate::tensor::{product, Gray, GrayCell, Product};

/// Whether the comparison at `(p, q)` must be an identity.
fn degenerate(prod: &Product, p: usize, q: usize) -> bool {
    let (f1, _) = prod.split_one(p);
    let (_, g2) = prod.split_one(q);
    prod.left.is_identity1(f1) || prod.right.is_identity1(g2)
}

pub fn is_cubical(f: &PseudoFunctor, prod: &Product) -> bool {
    if !same(&f.domain, &prod.cat) || !f.is_normal() {
        return false;
    }
    let c = &f.codomain;
    f.comp
        .iter()
        .all(|(&(p, q), &phi)| !degenerate(prod, p, q) || c.is_identity2(phi))
}

/// `R: A × B ⇝ A ⊗ B`.
pub fn universal_r(gray: &Gray) -> PseudoFunctor {
    let prod = &gray.product;
    let (pc, g) = (&*prod.cat, &*gray.cat);
    let one_cells: Vec<usize> = (0..pc.num_one_cells())
        .map(|p| {
            let (f, h) = prod.split_one(p);
            gray.r_word(f, h)
        })
        .collect();
    let two_cells = (0..pc.num_two_cells())
        .map(|s| {
            gray.find_cell(GrayCell {
                source: one_cells[pc.src2(s)],
                target: one_cells[pc.tgt2(s)],
                pair: s,
            })
            .expect("R-words lie over their pair")
        })
        .collect();
    let comp = pc
        .underlying()
        .composition_table()
        .iter()
        .map(|(&(p, q), &pq)| {
            let cell = gray
                .find_cell(GrayCell {
                    source: one_cells[pq],
                    target: g.comp1(one_cells[p], one_cells[q]).unwrap(),
                    pair: pc.id2(pq),
                })
                .expect("both words lie over the composite pair");
            ((p, q), cell)
        })
        .collect();
    PseudoFunctor {
        domain: prod.cat.clone(),
        codomain: gray.cat.clone(),
        objects: (0..pc.num_objects()).collect(),
        unit: (0..pc.num_objects()).map(|x| g.id2(g.id1(x))).collect(),
        one_cells,
        two_cells,
        comp,
    }
}

/// `G ↦ R;G`.
pub fn cub_bijection_forward(gray: &Gray, g: &TwoFunctor) -> Result<PseudoFunctor> {
    if !same(&g.domain, &gray.cat) {
        return Err(Error::malformed("2-functor does not start at the Gray tensor"));
    }
    compose_pseudo(&universal_r(gray), &PseudoFunctor::from_strict(g))
}

/// The unique 2-functor `L: A ⊗ B → C` with `R;L = F`. A left letter
/// `(f, b)` goes to `F(f, 1_b)`, a right letter `(a, g)` to `F(1_a, g)`, and
/// a cell over `π` to `F π` conjugated by the iterated comparisons.
pub fn cub_bijection_backward(gray: &Gray, f: &PseudoFunctor) -> Result<TwoFunctor> {
    let prod = &gray.product;
    if !is_cubical(f, prod) {
        return Err(Error::HypothesisViolation("pseudofunctor is not cubical".into()));
    }
    let (a, b) = (gray.left(), gray.right());
    let (pc, c) = (&*prod.cat, &*f.codomain);
    let g = &*gray.cat;
    let mut images = Vec::with_capacity(g.num_one_cells());
    // c_w: F(Kw) ⇒ L(w)
    let mut conj = Vec::with_capacity(g.num_one_cells());
    for w in gray.words() {
        let x = prod.obj(w.source.0, w.source.1);
        let mut kw = pc.id1(x);
        let mut cw = f.unit[x];
        let mut lw = c.tgt2(cw);
        for l in &w.letters {
            let p = match l.side {
                Side::Left => prod.one(l.cell, b.id1(l.frozen)),
                Side::Right => prod.one(a.id1(l.frozen), l.cell),
            };
            let phi = f.comp[&(kw, p)];
            cw = c
                .hcomp(cw, c.id2(f.one_cells[p]))
                .and_then(|h| c.vcomp(phi, h))
                .ok_or_else(|| Error::axiom("comparison chain", "word image"))?;
            kw = pc.comp1(kw, p).unwrap();
            lw = c.comp1(lw, f.one_cells[p]).unwrap();
        }
        images.push(lw);
        conj.push(cw);
    }
    let two_cells = (0..g.num_two_cells())
        .map(|s| {
            let cell = gray.cell(s);
            let inv = c.inverse2(conj[cell.source]).expect("comparisons are invertible");
            c.vcomp(inv, f.two_cells[cell.pair])
                .and_then(|t| c.vcomp(t, conj[cell.target]))
                .ok_or_else(|| Error::axiom("conjugated cell", g.two_cell_name(s)))
        })
        .collect::<Result<Vec<_>>>()?;
    let out = TwoFunctor {
        domain: gray.cat.clone(),
        codomain: f.codomain.clone(),
        objects: f.objects.clone(),
        one_cells: images,
        two_cells,
    };
    out.validate()?;
    Ok(out)
}

/// The evaluation pseudofunctor `Ps(B, C) × B ⇝ C`: `(F, b) ↦ Fb`,
/// `(η, α) ↦ Fα;η_{b′}`, `(Γ, σ) ↦ Fσ * Γ_{b′}`. It is cubical.
pub fn ev_cubical(hom: &Hom, limits: &Limits) -> Result<(Product, PseudoFunctor)> {
    let prod = product(&hom.cat, &hom.domain, limits)?;
    let (b, c) = (&*hom.domain, &*hom.codomain);
    let pc = &*prod.cat;
    let objects = (0..pc.num_objects())
        .map(|x| {
            let (fi, y) = prod.split_obj(x);
            hom.functors[fi].objects[y]
        })
        .collect::<Vec<_>>();
    let one_cells = (0..pc.num_one_cells())
        .map(|p| {
            let (t, alpha) = prod.split_one(p);
            let eta = &hom.transformations[t];
            let ff = &hom.functors[eta.source];
            c.comp1(ff.one_cells[alpha], eta.components[b.tgt1(alpha)]).unwrap()
        })
        .collect::<Vec<_>>();
    let two_cells = (0..pc.num_two_cells())
        .map(|s| {
            let (m, sigma) = prod.split_two(s);
            let gamma = &hom.modifications[m];
            let ff = &hom.functors[hom.transformations[gamma.source].source];
            c.hcomp(ff.two_cells[sigma], gamma.components[b.tgt0(sigma)]).unwrap()
        })
        .collect::<Vec<_>>();
    let comp = pc
        .underlying()
        .composition_table()
        .keys()
        .map(|&(p, q)| {
            let (t1, alpha) = prod.split_one(p);
            let (t2, beta) = prod.split_one(q);
            let eta = &hom.transformations[t1];
            let mu = &hom.transformations[t2];
            let ff = &hom.functors[eta.source];
            let cell = c
                .hcomp(c.id2(ff.one_cells[alpha]), eta.cells[beta])
                .and_then(|x| c.hcomp(x, c.id2(mu.components[b.tgt1(beta)])))
                .unwrap();
            ((p, q), cell)
        })
        .collect();
    let unit = objects.iter().map(|&y| c.id2(c.id1(y))).collect();
    let ev = PseudoFunctor {
        domain: prod.cat.clone(),
        codomain: hom.codomain.clone(),
        objects,
        one_cells,
        two_cells,
        unit,
        comp,
    };
    ev.validate()?;
    Ok((prod, ev))
}

/// Every cubical functor `A × B ⇝ C`, found directly: object and 1-cell
/// maps respecting units and degenerate composites, invertible comparisons
/// at the remaining pairs, then 2-cell maps, each candidate validated.
pub fn enumerate_cubical(prod: &Product, c: &Arc<Fin2Category>, limits: &Limits) -> Result<Vec<PseudoFunctor>> {
    limits.check_operand("product", &prod.cat)?;
    limits.check_operand("target", c)?;
    let pc = &*prod.cat;
    let (n0, n1) = (pc.num_objects(), pc.num_one_cells());
    let pairs: Vec<((usize, usize), usize)> = {
        let mut v: Vec<_> = pc.underlying().composition_table().iter().map(|(&k, &v)| (k, v)).collect();
        v.sort_unstable();
        v
    };
    let mut out = Vec::new();
    let mut objects = vec![0; n0];
    loop {
        // 1-cells, in index order
        let mut ones = vec![usize::MAX; n1];
        let mut stack: Vec<(usize, usize)> = vec![(0, 0)];
        while let Some((p, k)) = stack.pop() {
            if p == n1 {
                cells_and_comparisons(prod, c, &objects, &ones, &pairs, &mut out, limits)?;
                continue;
            }
            let cands: Vec<usize> = if pc.is_identity1(p) {
                vec![c.id1(objects[pc.src1(p)])]
            } else {
                c.hom1(objects[pc.src1(p)], objects[pc.tgt1(p)]).to_vec()
            };
            if k >= cands.len() {
                ones[p] = usize::MAX;
                continue;
            }
            stack.push((p, k + 1));
            ones[p] = cands[k];
            let ok = pairs.iter().all(|&((x, y), xy)| {
                let m = x.max(y).max(xy);
                m != p || !degenerate(prod, x, y) || c.comp1(ones[x], ones[y]) == Some(ones[xy])
            });
            if ok {
                stack.push((p + 1, 0));
            }
        }
        // next object map
        let mut i = 0;
        while i < n0 {
            objects[i] += 1;
            if objects[i] < c.num_objects() {
                break;
            }
            objects[i] = 0;
            i += 1;
        }
        if i == n0 || c.num_objects() == 0 {
            break;
        }
    }
    Ok(out)
}

fn cells_and_comparisons(
    prod: &Product,
    c: &Arc<Fin2Category>,
    objects: &[usize],
    ones: &[usize],
    pairs: &[((usize, usize), usize)],
    out: &mut Vec<PseudoFunctor>,
    limits: &Limits,
) -> Result<()> {
    let pc = &*prod.cat;
    let comp_cands: Vec<Vec<usize>> = pairs
        .iter()
        .map(|&((p, q), pq)| {
            let tgt = c.comp1(ones[p], ones[q]).unwrap();
            if degenerate(prod, p, q) {
                if tgt == ones[pq] {
                    vec![c.id2(tgt)]
                } else {
                    Vec::new()
                }
            } else {
                c.hom2(ones[pq], tgt).iter().copied().filter(|&s| c.is_invertible2(s)).collect()
            }
        })
        .collect();
    let cell_cands: Vec<Vec<usize>> = (0..pc.num_two_cells())
        .map(|s| {
            if pc.is_identity2(s) {
                vec![c.id2(ones[pc.src2(s)])]
            } else {
                c.hom2(ones[pc.src2(s)], ones[pc.tgt2(s)]).to_vec()
            }
        })
        .collect();
    let mut choice = vec![0usize; comp_cands.len() + cell_cands.len()];
    let all: Vec<&Vec<usize>> = comp_cands.iter().chain(cell_cands.iter()).collect();
    if all.iter().any(|v| v.is_empty()) {
        return Ok(());
    }
    loop {
        let comp: HashMap<(usize, usize), usize> = pairs
            .iter()
            .enumerate()
            .map(|(i, &(k, _))| (k, comp_cands[i][choice[i]]))
            .collect();
        let two_cells = (0..cell_cands.len())
            .map(|s| cell_cands[s][choice[comp_cands.len() + s]])
            .collect();
        let cand = PseudoFunctor {
            domain: prod.cat.clone(),
            codomain: c.clone(),
            objects: objects.to_vec(),
            one_cells: ones.to_vec(),
            two_cells,
            unit: objects.iter().map(|&y| c.id2(c.id1(y))).collect(),
            comp,
        };
        if cand.validate().is_ok() {
            out.push(cand);
            limits.check_cells("cubical functors", out.len())?;
        }
        let mut i = 0;
        while i < choice.len() {
            choice[i] += 1;
            if choice[i] < all[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
        if i == choice.len() {
            return Ok(());
        }
    }
}
