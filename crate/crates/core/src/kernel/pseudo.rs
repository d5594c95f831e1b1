use std::collections::HashMap;
use std::sync::Arc;

use super::functor::{same, TwoFunctor};
use super::two_category::Fin2Category;
use crate::error::{Error, Result};

/// A pseudofunctor between finite 2-categories.
///
/// `unit[x]: F(1_x) ⇒ 1_{Fx}` and `comp[(f, g)]: F(f;g) ⇒ Ff;Fg` are
/// invertible comparison cells.
#[derive(Clone, Debug)]
pub struct PseudoFunctor {
    pub domain: Arc<Fin2Category>,
    pub codomain: Arc<Fin2Category>,
    pub objects: Vec<usize>,
    pub one_cells: Vec<usize>,
    pub two_cells: Vec<usize>,
    pub unit: Vec<usize>,
    pub comp: HashMap<(usize, usize), usize>,
}

impl PartialEq for PseudoFunctor {
    fn eq(&self, other: &Self) -> bool {
        self.objects == other.objects
            && self.one_cells == other.one_cells
            && self.two_cells == other.two_cells
            && self.unit == other.unit
            && self.comp == other.comp
            && same(&self.domain, &other.domain)
            && same(&self.codomain, &other.codomain)
    }
}

impl Eq for PseudoFunctor {}

impl PseudoFunctor {
    /// A strict 2-functor with identity comparisons.
    pub fn from_strict(f: &TwoFunctor) -> Self {
        let (d, c) = (&f.domain, &f.codomain);
        let unit = (0..d.num_objects()).map(|x| c.id2(c.id1(f.objects[x]))).collect();
        let comp = d
            .underlying()
            .composition_table()
            .iter()
            .map(|(&(g, h), &gh)| ((g, h), c.id2(f.one_cells[gh])))
            .collect();
        PseudoFunctor {
            domain: d.clone(),
            codomain: c.clone(),
            objects: f.objects.clone(),
            one_cells: f.one_cells.clone(),
            two_cells: f.two_cells.clone(),
            unit,
            comp,
        }
    }

    /// The strict 2-functor, when all comparisons are identities.
    pub fn as_strict(&self) -> Option<TwoFunctor> {
        let c = &self.codomain;
        if self.unit.iter().chain(self.comp.values()).all(|&s| c.is_identity2(s)) {
            Some(TwoFunctor {
                domain: self.domain.clone(),
                codomain: self.codomain.clone(),
                objects: self.objects.clone(),
                one_cells: self.one_cells.clone(),
                two_cells: self.two_cells.clone(),
            })
        } else {
            None
        }
    }

    /// Normal: units are preserved strictly.
    pub fn is_normal(&self) -> bool {
        let (d, c) = (&self.domain, &self.codomain);
        (0..d.num_objects()).all(|x| {
            self.one_cells[d.id1(x)] == c.id1(self.objects[x]) && c.is_identity2(self.unit[x])
        })
    }

    pub fn validate(&self) -> Result<()> {
        let (d, c) = (&*self.domain, &*self.codomain);
        if self.objects.len() != d.num_objects()
            || self.one_cells.len() != d.num_one_cells()
            || self.two_cells.len() != d.num_two_cells()
            || self.unit.len() != d.num_objects()
        {
            return Err(Error::malformed("pseudofunctor tables do not cover the domain"));
        }
        let ax = |a: &str, w: String| Err(Error::axiom(a, w));
        for f in 0..d.num_one_cells() {
            let img = c.one_cell(self.one_cells[f]);
            if img.source != self.objects[d.src1(f)] || img.target != self.objects[d.tgt1(f)] {
                return ax("pseudofunctor preserves 1-cell boundaries", d.one_cell_name(f).into());
            }
            if self.two_cells[d.id2(f)] != c.id2(self.one_cells[f]) {
                return ax("pseudofunctor preserves identity 2-cells", d.one_cell_name(f).into());
            }
        }
        for s in 0..d.num_two_cells() {
            let img = self.two_cells[s];
            if c.src2(img) != self.one_cells[d.src2(s)] || c.tgt2(img) != self.one_cells[d.tgt2(s)] {
                return ax("pseudofunctor preserves 2-cell boundaries", d.two_cell_name(s).into());
            }
        }
        for (&(s, t), &r) in d.vcomp_table() {
            if c.vcomp(self.two_cells[s], self.two_cells[t]) != Some(self.two_cells[r]) {
                return ax(
                    "pseudofunctor preserves vertical composition",
                    format!("({}, {})", d.two_cell_name(s), d.two_cell_name(t)),
                );
            }
        }
        for x in 0..d.num_objects() {
            let u = self.unit[x];
            if c.src2(u) != self.one_cells[d.id1(x)] || c.tgt2(u) != c.id1(self.objects[x]) || !c.is_invertible2(u) {
                return ax("unit comparison typing and invertibility", d.object_name(x).into());
            }
        }
        let comp_cell = |f: usize, g: usize| -> Result<usize> {
            self.comp.get(&(f, g)).copied().ok_or_else(|| {
                Error::malformed(format!(
                    "missing comparison at ({}, {})",
                    d.one_cell_name(f),
                    d.one_cell_name(g)
                ))
            })
        };
        if self.comp.len() != d.underlying().composition_table().len() {
            return Err(Error::malformed("comparison table does not match the composable pairs"));
        }
        for (&(f, g), &fg) in d.underlying().composition_table() {
            let phi = comp_cell(f, g)?;
            let expect_tgt = c.comp1(self.one_cells[f], self.one_cells[g]);
            if c.src2(phi) != self.one_cells[fg] || Some(c.tgt2(phi)) != expect_tgt || !c.is_invertible2(phi) {
                return ax(
                    "composition comparison typing and invertibility",
                    format!("({}, {})", d.one_cell_name(f), d.one_cell_name(g)),
                );
            }
        }
        // naturality: F(σ*τ);φ' = φ;(Fσ*Fτ)
        for (&(s, t), &st) in d.hcomp_table() {
            let phi = comp_cell(d.src2(s), d.src2(t))?;
            let phi2 = comp_cell(d.tgt2(s), d.tgt2(t))?;
            let lhs = c.vcomp(self.two_cells[st], phi2);
            let rhs = c.hcomp(self.two_cells[s], self.two_cells[t]).and_then(|h| c.vcomp(phi, h));
            if lhs.is_none() || lhs != rhs {
                return ax(
                    "naturality of composition comparison",
                    format!("({}, {})", d.two_cell_name(s), d.two_cell_name(t)),
                );
            }
        }
        // associativity: φ_{fg,h};(φ_{f,g}*1) = φ_{f,gh};(1*φ_{g,h})
        for (&(f, g), &fg) in d.underlying().composition_table() {
            for &h in d.underlying().outgoing(d.tgt1(g)) {
                let gh = d.comp1(g, h).unwrap();
                let lhs = c
                    .hcomp(comp_cell(f, g)?, c.id2(self.one_cells[h]))
                    .and_then(|w| c.vcomp(comp_cell(fg, h).ok()?, w));
                let rhs = c
                    .hcomp(c.id2(self.one_cells[f]), comp_cell(g, h)?)
                    .and_then(|w| c.vcomp(comp_cell(f, gh).ok()?, w));
                if lhs.is_none() || lhs != rhs {
                    return ax(
                        "associativity of composition comparison",
                        format!("({}, {}, {})", d.one_cell_name(f), d.one_cell_name(g), d.one_cell_name(h)),
                    );
                }
            }
        }
        // unit coherence: φ_{1,f};(ι*1) = 1 and φ_{f,1};(1*ι) = 1
        for f in 0..d.num_one_cells() {
            let (x, y) = (d.src1(f), d.tgt1(f));
            let ff = c.id2(self.one_cells[f]);
            let left = c
                .hcomp(self.unit[x], ff)
                .and_then(|w| c.vcomp(comp_cell(d.id1(x), f).ok()?, w));
            let right = c
                .hcomp(ff, self.unit[y])
                .and_then(|w| c.vcomp(comp_cell(f, d.id1(y)).ok()?, w));
            if left != Some(ff) || right != Some(ff) {
                return ax("unit coherence of comparisons", d.one_cell_name(f).into());
            }
        }
        Ok(())
    }
}
