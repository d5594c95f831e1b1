use std::collections::HashMap;
use std::sync::Arc;

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::kernel::{uniquify, Arrow, Cell, Fin2Category, FinCategory, TwoFunctor};

/// The cartesian product `A × B` with its projections.
///
/// Cells are indexed lexicographically: object `(a, b)` is `a * |B₀| + b`, and
/// likewise for 1-cells and 2-cells.
#[derive(Clone, Debug)]
pub struct Product {
    pub cat: Arc<Fin2Category>,
    pub left: Arc<Fin2Category>,
    pub right: Arc<Fin2Category>,
}

impl Product {
    pub fn obj(&self, a: usize, b: usize) -> usize {
        a * self.right.num_objects() + b
    }

    pub fn one(&self, f: usize, g: usize) -> usize {
        f * self.right.num_one_cells() + g
    }

    pub fn two(&self, s: usize, t: usize) -> usize {
        s * self.right.num_two_cells() + t
    }

    pub fn split_obj(&self, x: usize) -> (usize, usize) {
        let n = self.right.num_objects();
        (x / n, x % n)
    }

    pub fn split_one(&self, f: usize) -> (usize, usize) {
        let n = self.right.num_one_cells();
        (f / n, f % n)
    }

    pub fn split_two(&self, s: usize) -> (usize, usize) {
        let n = self.right.num_two_cells();
        (s / n, s % n)
    }

    pub fn projection_left(&self) -> TwoFunctor {
        let c = &self.cat;
        TwoFunctor {
            domain: c.clone(),
            codomain: self.left.clone(),
            objects: (0..c.num_objects()).map(|x| self.split_obj(x).0).collect(),
            one_cells: (0..c.num_one_cells()).map(|f| self.split_one(f).0).collect(),
            two_cells: (0..c.num_two_cells()).map(|s| self.split_two(s).0).collect(),
        }
    }

    pub fn projection_right(&self) -> TwoFunctor {
        let c = &self.cat;
        TwoFunctor {
            domain: c.clone(),
            codomain: self.right.clone(),
            objects: (0..c.num_objects()).map(|x| self.split_obj(x).1).collect(),
            one_cells: (0..c.num_one_cells()).map(|f| self.split_one(f).1).collect(),
            two_cells: (0..c.num_two_cells()).map(|s| self.split_two(s).1).collect(),
        }
    }

    /// The pairing `⟨F, G⟩: C → A × B`.
    pub fn pairing(&self, f: &TwoFunctor, g: &TwoFunctor) -> Result<TwoFunctor> {
        if !crate::kernel::same(&f.domain, &g.domain)
            || !crate::kernel::same(&f.codomain, &self.left)
            || !crate::kernel::same(&g.codomain, &self.right)
        {
            return Err(Error::malformed("pairing needs a common domain and the product's factors as codomains"));
        }
        Ok(TwoFunctor {
            domain: f.domain.clone(),
            codomain: self.cat.clone(),
            objects: f.objects.iter().zip(&g.objects).map(|(&a, &b)| self.obj(a, b)).collect(),
            one_cells: f.one_cells.iter().zip(&g.one_cells).map(|(&a, &b)| self.one(a, b)).collect(),
            two_cells: f.two_cells.iter().zip(&g.two_cells).map(|(&a, &b)| self.two(a, b)).collect(),
        })
    }

    /// `F × G: A × B → A′ × B′` into a given target product.
    pub fn map(&self, f: &TwoFunctor, g: &TwoFunctor, target: &Product) -> TwoFunctor {
        let c = &self.cat;
        TwoFunctor {
            domain: c.clone(),
            codomain: target.cat.clone(),
            objects: (0..c.num_objects())
                .map(|x| {
                    let (a, b) = self.split_obj(x);
                    target.obj(f.objects[a], g.objects[b])
                })
                .collect(),
            one_cells: (0..c.num_one_cells())
                .map(|x| {
                    let (a, b) = self.split_one(x);
                    target.one(f.one_cells[a], g.one_cells[b])
                })
                .collect(),
            two_cells: (0..c.num_two_cells())
                .map(|x| {
                    let (a, b) = self.split_two(x);
                    target.two(f.two_cells[a], g.two_cells[b])
                })
                .collect(),
        }
    }
}

/// The cartesian product of two finite 2-categories.
pub fn product(a: &Arc<Fin2Category>, b: &Arc<Fin2Category>, limits: &Limits) -> Result<Product> {
    let (n0, n1, n2) = (b.num_objects(), b.num_one_cells(), b.num_two_cells());
    limits.check_cells("product 1-cells", a.num_one_cells() * n1)?;
    limits.check_cells("product 2-cells", a.num_two_cells() * n2)?;
    let objects = (0..a.num_objects())
        .flat_map(|x| (0..n0).map(move |y| (x, y)))
        .map(|(x, y)| format!("({},{})", a.object_name(x), b.object_name(y)))
        .collect::<Vec<_>>();
    let objects = uniquify(objects, |s| s);
    let arrows = (0..a.num_one_cells())
        .flat_map(|f| (0..n1).map(move |g| (f, g)))
        .map(|(f, g)| Arrow {
            name: format!("({},{})", a.one_cell_name(f), b.one_cell_name(g)),
            source: a.src1(f) * n0 + b.src1(g),
            target: a.tgt1(f) * n0 + b.tgt1(g),
        })
        .collect();
    let arrows = uniquify(arrows, |x| &mut x.name);
    let identities = (0..a.num_objects())
        .flat_map(|x| (0..n0).map(move |y| a.id1(x) * n1 + b.id1(y)))
        .collect();
    let mut comp = HashMap::new();
    for (&(f, g), &h) in a.underlying().composition_table() {
        for (&(f2, g2), &h2) in b.underlying().composition_table() {
            comp.insert((f * n1 + f2, g * n1 + g2), h * n1 + h2);
        }
    }
    let base = FinCategory::from_parts(objects, arrows, identities, comp)?;
    let cells = (0..a.num_two_cells())
        .flat_map(|s| (0..n2).map(move |t| (s, t)))
        .map(|(s, t)| Cell {
            name: format!("({},{})", a.two_cell_name(s), b.two_cell_name(t)),
            source: a.src2(s) * n1 + b.src2(t),
            target: a.tgt2(s) * n1 + b.tgt2(t),
        })
        .collect();
    let cells = uniquify(cells, |x| &mut x.name);
    let id2 = (0..a.num_one_cells())
        .flat_map(|f| (0..n1).map(move |g| a.id2(f) * n2 + b.id2(g)))
        .collect();
    let pair_table = |ta: &HashMap<(usize, usize), usize>, tb: &HashMap<(usize, usize), usize>| {
        let mut t = HashMap::with_capacity(ta.len() * tb.len());
        for (&(s, u), &r) in ta {
            for (&(s2, u2), &r2) in tb {
                t.insert((s * n2 + s2, u * n2 + u2), r * n2 + r2);
            }
        }
        t
    };
    let vcomp = pair_table(a.vcomp_table(), b.vcomp_table());
    let hcomp = pair_table(a.hcomp_table(), b.hcomp_table());
    let cat = Fin2Category::from_parts(Arc::new(base), cells, id2, vcomp, hcomp)?;
    Ok(Product {
        cat: Arc::new(cat),
        left: a.clone(),
        right: b.clone(),
    })
}
