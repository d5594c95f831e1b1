//! The Gray tensor product as the middle of the (boba, lff) factorisation
//! of `K: A ⋆ B → A × B`.

use std::collections::HashMap;
use std::sync::Arc;

use super::funny::{comparison_k_underlying, funny_full_from, funny_underlying, Funny, FunnyFull};
use super::product::{product, Product};
use super::words::{word_reduce, AlternatingWord, Letter};
use crate::config::Limits;
use crate::error::{Error, Result};
use crate::kernel::{Fin2Category, Functor, TwoFunctor};
use crate::ofs::{factor_underlying, LeftLegData};

/// A 2-cell of `A ⊗ B`: two parallel words and a 2-cell of `A × B` between
/// their images under `K`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GrayCell {
    pub source: usize,
    pub target: usize,
    pub pair: usize,
}

#[derive(Clone, Debug)]
pub struct Gray {
    pub funny: Arc<Funny>,
    pub funny_full: Option<Arc<FunnyFull>>,
    pub product: Product,
    pub cat: Arc<Fin2Category>,
    /// `K` on underlying categories.
    pub k: Functor,
    /// `P: A ⋆ B → A ⊗ B`, the identity on objects and words.
    pub p: LeftLegData,
    /// `Q: A ⊗ B → A × B`.
    pub q: TwoFunctor,
    index: HashMap<(usize, usize, usize), usize>,
}

impl Gray {
    pub fn left(&self) -> &Arc<Fin2Category> {
        &self.funny.left
    }

    pub fn right(&self) -> &Arc<Fin2Category> {
        &self.funny.right
    }

    pub fn cell(&self, s: usize) -> GrayCell {
        GrayCell {
            source: self.cat.src2(s),
            target: self.cat.tgt2(s),
            pair: self.q.two_cells[s],
        }
    }

    pub fn find_cell(&self, c: GrayCell) -> Option<usize> {
        self.index.get(&(c.source, c.target, c.pair)).copied()
    }

    fn word(&self, source: (usize, usize), letters: &[Letter]) -> usize {
        let w = word_reduce(&self.funny.factors(), source, letters).expect("letters chain");
        self.funny.find(&w).expect("reduced words are enumerated")
    }

    /// `R(f, g)`: the right letter `g` first, then the left letter `f`.
    pub fn r_word(&self, f: usize, g: usize) -> usize {
        let (a, b) = (self.left(), self.right());
        self.word((a.src1(f), b.src1(g)), &[Letter::right(g, a.src1(f)), Letter::left(f, b.tgt1(g))])
    }

    /// The left letter `f` first, then the right letter `g`.
    pub fn l_word(&self, f: usize, g: usize) -> usize {
        let (a, b) = (self.left(), self.right());
        self.word((a.src1(f), b.src1(g)), &[Letter::left(f, b.src1(g)), Letter::right(g, a.tgt1(f))])
    }

    /// The invertible cell from "`f` then `g`" to "`g` then `f`", carried by
    /// the identity 2-cell on `(f, g)`.
    pub fn interchanger(&self, f: usize, g: usize) -> usize {
        let pair = self.product.cat.id2(self.product.one(f, g));
        self.find_cell(GrayCell {
            source: self.l_word(f, g),
            target: self.r_word(f, g),
            pair,
        })
        .expect("both words lie over (f, g)")
    }

    pub fn words(&self) -> &[AlternatingWord] {
        self.funny.words()
    }
}

pub fn gray_tensor(a: &Arc<Fin2Category>, b: &Arc<Fin2Category>, limits: &Limits) -> Result<Gray> {
    let funny = Arc::new(funny_underlying(a, b, limits)?);
    let prod = product(a, b, limits)?;
    gray_from(funny, prod, limits, true)
}

/// Like [`gray_tensor`], but never materialises the 2-cells of the funny
/// tensor; `P` is then known on underlying data only.
pub fn gray_tensor_underlying(a: &Arc<Fin2Category>, b: &Arc<Fin2Category>, limits: &Limits) -> Result<Gray> {
    let funny = Arc::new(funny_underlying(a, b, limits)?);
    let prod = product(a, b, limits)?;
    gray_from(funny, prod, limits, false)
}

fn gray_from(funny: Arc<Funny>, prod: Product, limits: &Limits, want_full: bool) -> Result<Gray> {
    let k = comparison_k_underlying(&funny, &prod);
    let (cat, q, index) = factor_underlying(&k, &prod.cat, limits)?;
    let full = if want_full {
        match funny_full_from(funny.clone(), limits) {
            Ok(f) => Some(Arc::new(f)),
            Err(Error::UnsupportedInput(_)) | Err(Error::SizeLimit { .. }) => None,
            Err(e) => return Err(e),
        }
    } else {
        None
    };
    let p = match &full {
        Some(ff) => {
            let kfull = ff.comparison_k(&prod);
            LeftLegData::Full(TwoFunctor {
                domain: ff.cat.clone(),
                codomain: cat.clone(),
                objects: (0..cat.num_objects()).collect(),
                one_cells: (0..cat.num_one_cells()).collect(),
                two_cells: (0..ff.cat.num_two_cells())
                    .map(|s| index[&(ff.cat.src2(s), ff.cat.tgt2(s), kfull.two_cells[s])])
                    .collect(),
            })
        }
        None => LeftLegData::UnderlyingOnly {
            functor: Functor::identity(funny.cat.clone()),
            codomain: cat.clone(),
        },
    };
    Ok(Gray {
        funny,
        funny_full: full,
        product: prod,
        cat,
        k,
        p,
        q,
        index,
    })
}

/// `F ⊗ G: A ⊗ B → A′ ⊗ B′`, letterwise on words and `F × G` on pair cells.
pub fn gray_map(f: &TwoFunctor, g: &TwoFunctor, source: &Gray, target: &Gray) -> Result<TwoFunctor> {
    if !crate::kernel::same(&f.domain, source.left())
        || !crate::kernel::same(&g.domain, source.right())
        || !crate::kernel::same(&f.codomain, target.left())
        || !crate::kernel::same(&g.codomain, target.right())
    {
        return Err(Error::malformed("gray_map: maps do not match the tensors"));
    }
    let pmap = source.product.map(f, g, &target.product);
    let objects = (0..source.cat.num_objects())
        .map(|x| {
            let (a, b) = source.funny.split_obj(x);
            target.funny.obj(f.objects[a], g.objects[b])
        })
        .collect::<Vec<_>>();
    let one_cells = source
        .words()
        .iter()
        .map(|w| {
            let letters: Vec<Letter> = w
                .letters
                .iter()
                .map(|l| match l.side {
                    super::words::Side::Left => Letter::left(f.one_cells[l.cell], g.objects[l.frozen]),
                    super::words::Side::Right => Letter::right(g.one_cells[l.cell], f.objects[l.frozen]),
                })
                .collect();
            target.word((f.objects[w.source.0], g.objects[w.source.1]), &letters)
        })
        .collect::<Vec<_>>();
    let two_cells = (0..source.cat.num_two_cells())
        .map(|s| {
            let c = source.cell(s);
            target
                .find_cell(GrayCell {
                    source: one_cells[c.source],
                    target: one_cells[c.target],
                    pair: pmap.two_cells[c.pair],
                })
                .expect("images of parallel words are parallel over the image pair cell")
        })
        .collect();
    Ok(TwoFunctor {
        domain: source.cat.clone(),
        codomain: target.cat.clone(),
        objects,
        one_cells,
        two_cells,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{catalog, iso_2categories};
    use crate::ofs::{is_boba, is_lff};

    fn arc(n: &str) -> Arc<Fin2Category> {
        catalog::get_arc(n).unwrap()
    }

    #[test]
    fn gray_s1_s1_counts_and_interchanger() {
        let l = Limits::default();
        let s1 = arc("S1");
        let g = gray_tensor(&s1, &s1, &l).unwrap();
        g.cat.validate().unwrap();
        assert_eq!(g.cat.counts(), (4, 10, 12));
        assert!(is_lff(&g.q));
        let u = s1.find_one_cell("u").unwrap();
        let theta = g.interchanger(u, u);
        assert!(!g.cat.is_identity2(theta));
        let inv = g.cat.inverse2(theta).unwrap();
        assert_eq!(g.cat.vcomp(theta, inv), Some(g.cat.id2(g.l_word(u, u))));
        // degenerate interchangers are identities
        assert!(g.cat.is_identity2(g.interchanger(s1.id1(0), u)));
        assert!(g.cat.is_identity2(g.interchanger(u, s1.id1(1))));
        let p = g.p.full().unwrap();
        p.validate().unwrap();
        assert!(is_boba(p));
        assert!(p.then(&g.q).unwrap().same_action(&g.funny_full.as_ref().unwrap().comparison_k(&g.product)));
        assert!(iso_2categories(&g.cat, &arc("pseudo-square"), &l).unwrap().is_some());
    }

    #[test]
    fn gray_s2_s1_matches_figure() {
        let l = Limits::default();
        let g = gray_tensor(&arc("S2"), &arc("S1"), &l).unwrap();
        g.cat.validate().unwrap();
        assert_eq!(g.cat.counts(), (4, 14, 24));
        assert!(iso_2categories(&g.cat, &arc("gray-s2-s1"), &l).unwrap().is_some());
    }

    #[test]
    fn gray_map_functoriality() {
        let l = Limits::default();
        let maps = catalog::maps();
        let col = &maps.iter().find(|(n, _)| *n == "S2->S1 collapse").unwrap().1;
        let s1 = arc("S1");
        let id1 = TwoFunctor::identity(s1.clone());
        let g21 = gray_tensor(&col.domain, &s1, &l).unwrap();
        let g11 = gray_tensor(&s1, &s1, &l).unwrap();
        let m = gray_map(col, &id1, &g21, &g11).unwrap();
        m.validate().unwrap();
        let id = gray_map(&id1, &id1, &g11, &g11).unwrap();
        assert_eq!(id, TwoFunctor::identity(g11.cat.clone()));
    }
}
