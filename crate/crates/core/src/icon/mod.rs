//! Icons, cubical functors and the universal cubical functor `R`, and the
//! pseudolimit of an arrow, used to show that `Q` is an equivalence in the
//! 2-category of icons.
//!
//! An icon `α: F ⇒ G` between pseudofunctors with the same object map has a
//! component `α_f: Ff ⇒ Gf` for every 1-cell `f`, subject to
//!
//! * `Fσ;α_g = α_f;Gσ` for `σ: f ⇒ g`,
//! * `φᶠ_{f,g};(α_f * α_g) = α_{f;g};φᴳ_{f,g}`,
//! * `ιᶠ_x = α_{1_x};ιᴳ_x`.

pub mod cubical;
pub mod pseudolimit;


use crate::error::{Error, Result};
use crate::kernel::{same, Fin2Category, PseudoFunctor, TwoFunctor};

pub use cubical::{
    cub_bijection_backward, cub_bijection_forward, enumerate_cubical, ev_cubical, is_cubical, universal_r,
};
pub use pseudolimit::{
    icon_equivalence_q, pseudolimit_of_arrow, IconEquivalence, PseudolimitCone, PseudolimitReport,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Icon {
    pub source: PseudoFunctor,
    pub target: PseudoFunctor,
    pub components: Vec<usize>,
}

impl Icon {
    pub fn validate(&self) -> Result<()> {
        let (f, g) = (&self.source, &self.target);
        if !same(&f.domain, &g.domain) || !same(&f.codomain, &g.codomain) || f.objects != g.objects {
            return Err(Error::malformed("icon endpoints must share domain, codomain and object map"));
        }
        let a = &*f.domain;
        if self.components.len() != a.num_one_cells() {
            return Err(Error::malformed("icon needs one component per 1-cell"));
        }
        for h in 0..a.num_one_cells() {
            if !check_at(self, h, &self.components) {
                return Err(Error::axiom("icon axioms", a.one_cell_name(h)));
            }
        }

        Ok(())
    }

    pub fn identity(f: &PseudoFunctor) -> Icon {
        let b = &f.codomain;
        Icon {
            source: f.clone(),
            target: f.clone(),
            components: f.one_cells.iter().map(|&h| b.id2(h)).collect(),
        }
    }

    /// `self` then `other`, componentwise.
    pub fn vcomp(&self, other: &Icon) -> Result<Icon> {
        if self.target != other.source {
            return Err(Error::malformed("icons are not vertically composable"));
        }
        let b = &self.source.codomain;
        Ok(Icon {
            source: self.source.clone(),
            target: other.target.clone(),
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(&x, &y)| b.vcomp(x, y).unwrap())
                .collect(),
        })
    }

    /// For `self: F ⇒ G` on `A ⇝ B` and `other: H ⇒ K` on `B ⇝ C`, the icon
    /// `HF ⇒ KG` with components `H(α_f);β_{Gf}`.
    pub fn hcomp(&self, other: &Icon) -> Result<Icon> {
        let c = &other.source.codomain;
        Ok(Icon {
            source: compose_pseudo(&self.source, &other.source)?,
            target: compose_pseudo(&self.target, &other.target)?,
            components: (0..self.components.len())
                .map(|h| {
                    let first = other.source.two_cells[self.components[h]];
                    let second = other.components[self.target.one_cells[h]];
                    c.vcomp(first, second).unwrap()
                })
                .collect(),
        })
    }
}

/// Checks every icon axiom whose cells are all among `0..=h`.
fn check_at(icon: &Icon, h: usize, comps: &[usize]) -> bool {
    let (f, g) = (&icon.source, &icon.target);
    let (a, b) = (&*f.domain, &*f.codomain);
    let c = comps[h];
    if b.src2(c) != f.one_cells[h] || b.tgt2(c) != g.one_cells[h] {
        return false;
    }
    for s in 0..a.num_two_cells() {
        let (p, q) = (a.src2(s), a.tgt2(s));
        if p.max(q) != h {
            continue;
        }
        if b.vcomp(f.two_cells[s], comps[q]) != b.vcomp(comps[p], g.two_cells[s]) {
            return false;
        }
    }
    for (&(p, q), &pq) in a.underlying().composition_table() {
        if p.max(q).max(pq) != h {
            continue;
        }
        let lhs = b.hcomp(comps[p], comps[q]).and_then(|w| b.vcomp(f.comp[&(p, q)], w));
        let rhs = b.vcomp(comps[pq], g.comp[&(p, q)]);
        if lhs.is_none() || lhs != rhs {
            return false;
        }
    }
    if let Some(x) = a.underlying().identity_of(h) {
        if Some(f.unit[x]) != b.vcomp(comps[h], g.unit[x]) {
            return false;
        }
    }
    true
}

/// First `f`, then `g`.
pub fn compose_pseudo(f: &PseudoFunctor, g: &PseudoFunctor) -> Result<PseudoFunctor> {
    if !same(&f.codomain, &g.domain) {
        return Err(Error::malformed("pseudofunctors are not composable"));
    }
    let c = &g.codomain;
    let unit = (0..f.domain.num_objects())
        .map(|x| c.vcomp(g.two_cells[f.unit[x]], g.unit[f.objects[x]]).unwrap())
        .collect();
    let comp = f
        .comp
        .iter()
        .map(|(&(p, q), &phi)| {
            let cell = c
                .vcomp(g.two_cells[phi], g.comp[&(f.one_cells[p], f.one_cells[q])])
                .unwrap();
            ((p, q), cell)
        })
        .collect();
    Ok(PseudoFunctor {
        domain: f.domain.clone(),
        codomain: c.clone(),
        objects: f.objects.iter().map(|&x| g.objects[x]).collect(),
        one_cells: f.one_cells.iter().map(|&h| g.one_cells[h]).collect(),
        two_cells: f.two_cells.iter().map(|&s| g.two_cells[s]).collect(),
        unit,
        comp,
    })
}

/// All icons `F ⇒ G`.
pub fn enumerate_icons(f: &PseudoFunctor, g: &PseudoFunctor) -> Vec<Icon> {
    if f.objects != g.objects {
        return Vec::new();
    }
    let (a, b) = (&*f.domain, &*f.codomain);
    let n1 = a.num_one_cells();
    let mut out = Vec::new();
    let proto = Icon {
        source: f.clone(),
        target: g.clone(),
        components: Vec::new(),
    };
    let mut comps = vec![usize::MAX; n1];
    fn go(h: usize, proto: &Icon, b: &Fin2Category, comps: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if h == comps.len() {
            out.push(comps.clone());
            return;
        }
        let (fh, gh) = (proto.source.one_cells[h], proto.target.one_cells[h]);
        for &c in b.hom2(fh, gh) {
            comps[h] = c;
            if check_at(proto, h, comps) {
                go(h + 1, proto, b, comps, out);
            }
        }
        comps[h] = usize::MAX;
    }
    let mut found = Vec::new();
    go(0, &proto, b, &mut comps, &mut found);
    for components in found {
        out.push(Icon {
            source: f.clone(),
            target: g.clone(),
            components,
        });
    }
    out
}

/// Whiskers a strict 2-functor `k: X → A` in front of an icon on `A`.
pub fn whisker_icon(k: &TwoFunctor, icon: &Icon) -> Result<Icon> {
    let kp = PseudoFunctor::from_strict(k);
    Icon::identity(&kp).hcomp(icon)
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::catalog;

    fn strict(f: &TwoFunctor) -> PseudoFunctor {
        PseudoFunctor::from_strict(f)
    }

    #[test]
    fn icons_form_a_strict_2_category() {
        // icons between endo-2-functors of S2 and walking-iso, composed every way
        let maps = catalog::maps();
        let s2_wi = &maps.iter().find(|(n, _)| *n == "S2->walking-iso").unwrap().1;
        let wi = s2_wi.codomain.clone();
        let s2 = s2_wi.domain.clone();
        let ends: Vec<PseudoFunctor> = crate::kernel::enumerate_2functors(&s2, &wi, &Default::default())
            .unwrap()
            .iter()
            .map(strict)
            .collect();
        let mut n = 0;
        for f in &ends {
            for g in &ends {
                for a in enumerate_icons(f, g) {
                    a.validate().unwrap();
                    let id_f = Icon::identity(f);
                    assert_eq!(id_f.vcomp(&a).unwrap(), a);
                    assert_eq!(a.vcomp(&Icon::identity(g)).unwrap(), a);
                    for h in &ends {
                        for b in enumerate_icons(g, h) {
                            let ab = a.vcomp(&b).unwrap();
                            ab.validate().unwrap();
                            for k in &ends {
                                for c in enumerate_icons(h, k) {
                                    n += 1;
                                    assert_eq!(
                                        ab.vcomp(&c).unwrap(),
                                        a.vcomp(&b.vcomp(&c).unwrap()).unwrap()
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
        assert!(n > 0);
        // horizontal composition and interchange against endo-icons of walking-iso
        let endo: Vec<PseudoFunctor> = crate::kernel::enumerate_2functors(&wi, &wi, &Default::default())
            .unwrap()
            .iter()
            .map(strict)
            .collect();
        let mut m = 0;
        for f in &ends {
            for g in &ends {
                for a in enumerate_icons(f, g) {
                    for h in &endo {
                        for k in &endo {
                            for b in enumerate_icons(h, k) {
                                let ab = a.hcomp(&b).unwrap();
                                ab.validate().unwrap();
                                // interchange with identities: (a*1);(1*b) = a*b
                                let left = a.hcomp(&Icon::identity(h)).unwrap();
                                let right = Icon::identity(g).hcomp(&b).unwrap();
                                assert_eq!(left.vcomp(&right).unwrap(), ab);
                                m += 1;
                            }
                        }
                    }
                }
            }
        }
        assert!(m > 0);
    }
}
