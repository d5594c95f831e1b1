use std::sync::Arc;

use super::category::{is_bijection, Functor};
use super::two_category::Fin2Category;
use crate::error::{Error, Result};

/// A strict 2-functor, given by its actions on objects, 1-cells and 2-cells.
#[derive(Clone, Debug)]
pub struct TwoFunctor {
    pub domain: Arc<Fin2Category>,
    pub codomain: Arc<Fin2Category>,
    pub objects: Vec<usize>,
    pub one_cells: Vec<usize>,
    pub two_cells: Vec<usize>,
}

impl PartialEq for TwoFunctor {
    fn eq(&self, other: &Self) -> bool {
        self.objects == other.objects
            && self.one_cells == other.one_cells
            && self.two_cells == other.two_cells
            && same(&self.domain, &other.domain)
            && same(&self.codomain, &other.codomain)
    }
}

impl Eq for TwoFunctor {}

pub(crate) fn same(a: &Arc<Fin2Category>, b: &Arc<Fin2Category>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl TwoFunctor {
    pub fn new(
        domain: Arc<Fin2Category>,
        codomain: Arc<Fin2Category>,
        objects: Vec<usize>,
        one_cells: Vec<usize>,
        two_cells: Vec<usize>,
    ) -> Result<Self> {
        let f = TwoFunctor {
            domain,
            codomain,
            objects,
            one_cells,
            two_cells,
        };
        f.validate()?;
        Ok(f)
    }

    pub fn identity(c: Arc<Fin2Category>) -> Self {
        TwoFunctor {
            objects: (0..c.num_objects()).collect(),
            one_cells: (0..c.num_one_cells()).collect(),
            two_cells: (0..c.num_two_cells()).collect(),
            domain: c.clone(),
            codomain: c,
        }
    }

    /// Checks that every table entry of the domain is preserved.
    pub fn validate(&self) -> Result<()> {
        let (d, c) = (&*self.domain, &*self.codomain);
        if self.objects.len() != d.num_objects()
            || self.one_cells.len() != d.num_one_cells()
            || self.two_cells.len() != d.num_two_cells()
        {
            return Err(Error::malformed("2-functor tables do not cover the domain"));
        }
        if self.objects.iter().any(|&x| x >= c.num_objects())
            || self.one_cells.iter().any(|&f| f >= c.num_one_cells())
            || self.two_cells.iter().any(|&s| s >= c.num_two_cells())
        {
            return Err(Error::malformed("2-functor image out of range"));
        }
        self.underlying().validate()?;
        for s in 0..d.num_two_cells() {
            let img = self.two_cells[s];
            if c.src2(img) != self.one_cells[d.src2(s)] || c.tgt2(img) != self.one_cells[d.tgt2(s)] {
                return Err(Error::axiom("2-functor preserves 2-cell boundaries", d.two_cell_name(s)));
            }
        }
        for f in 0..d.num_one_cells() {
            if self.two_cells[d.id2(f)] != c.id2(self.one_cells[f]) {
                return Err(Error::axiom("2-functor preserves identity 2-cells", d.one_cell_name(f)));
            }
        }
        for vertical in [true, false] {
            let (table, axiom) = if vertical {
                (d.vcomp_table(), "2-functor preserves vertical composition")
            } else {
                (d.hcomp_table(), "2-functor preserves horizontal composition")
            };
            for (&(s, t), &r) in table {
                let (fs, ft) = (self.two_cells[s], self.two_cells[t]);
                let img = if vertical { c.vcomp(fs, ft) } else { c.hcomp(fs, ft) };
                if img != Some(self.two_cells[r]) {
                    return Err(Error::axiom(
                        axiom,
                        format!("({}, {})", d.two_cell_name(s), d.two_cell_name(t)),
                    ));
                }
            }
        }
        Ok(())
    }

    /// The functor on underlying categories.
    pub fn underlying(&self) -> Functor {
        Functor {
            domain: self.domain.underlying().clone(),
            codomain: self.codomain.underlying().clone(),
            objects: self.objects.clone(),
            arrows: self.one_cells.clone(),
        }
    }

    /// First `self`, then `other`.
    pub fn then(&self, other: &TwoFunctor) -> Result<TwoFunctor> {
        if !same(&self.codomain, &other.domain) {
            return Err(Error::malformed("2-functors are not composable"));
        }
        Ok(TwoFunctor {
            domain: self.domain.clone(),
            codomain: other.codomain.clone(),
            objects: self.objects.iter().map(|&x| other.objects[x]).collect(),
            one_cells: self.one_cells.iter().map(|&f| other.one_cells[f]).collect(),
            two_cells: self.two_cells.iter().map(|&s| other.two_cells[s]).collect(),
        })
    }

    pub fn is_isomorphism(&self) -> bool {
        is_bijection(&self.objects, self.codomain.num_objects())
            && is_bijection(&self.one_cells, self.codomain.num_one_cells())
            && is_bijection(&self.two_cells, self.codomain.num_two_cells())
    }

    /// Inverse of an isomorphism.
    pub fn inverse(&self) -> Option<TwoFunctor> {
        if !self.is_isomorphism() {
            return None;
        }
        use super::category::invert_bijection;
        Some(TwoFunctor {
            domain: self.codomain.clone(),
            codomain: self.domain.clone(),
            objects: invert_bijection(&self.objects),
            one_cells: invert_bijection(&self.one_cells),
            two_cells: invert_bijection(&self.two_cells),
        })
    }

    /// Same underlying tables, ignoring whether the endpoint values are shared.
    pub fn same_action(&self, other: &TwoFunctor) -> bool {
        self.objects == other.objects && self.one_cells == other.one_cells && self.two_cells == other.two_cells
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::catalog;

    #[test]
    fn identity_is_valid_isomorphism() {
        let c = Arc::new(catalog::standard_cell(2));
        let id = TwoFunctor::identity(c.clone());
        id.validate().unwrap();
        assert!(id.is_isomorphism());
        assert_eq!(id.then(&id).unwrap(), id);
        assert_eq!(id.inverse().unwrap(), id);
    }

    #[test]
    fn collapse_is_valid_and_wrong_boundary_is_not() {
        let s2 = Arc::new(catalog::standard_cell(2));
        let s1 = Arc::new(catalog::standard_cell(1));
        let u = s1.find_one_cell("u").unwrap();
        let f = TwoFunctor {
            domain: s2.clone(),
            codomain: s1.clone(),
            objects: vec![0, 1],
            one_cells: (0..s2.num_one_cells())
                .map(|f| if s2.is_identity1(f) { s1.id1(s2.src1(f)) } else { u })
                .collect(),
            two_cells: (0..s2.num_two_cells()).map(|_| s1.id2(u)).collect(),
        };
        // identities of objects must go to identities
        let mut g = f.clone();
        for x in 0..2 {
            g.two_cells[s2.id2(s2.id1(x))] = s1.id2(s1.id1(x));
        }
        g.validate().unwrap();
        assert!(f.validate().is_err());
    }
}
