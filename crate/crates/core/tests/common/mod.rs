//! Oracles shared by the property and acceptance suites.
#![allow(dead_code)]

use std::sync::Arc;

use gray2cat::kernel::{catalog, enumerate_2functors, Fin2Category, TwoFunctor};
use gray2cat::ofs::{factor_2functor, is_boba, is_lff, solve_lifting, LeftLegData, LiftingSquare};
use gray2cat::tensor::{Factors, Letter};
use gray2cat::Limits;

pub fn arc(name: &str) -> Arc<Fin2Category> {
    catalog::get_arc(name).unwrap()
}

/// A path of letters from `start`, one choice per seed; identities included.
pub fn walk(fx: &Factors, start: (usize, usize), seeds: &[u16]) -> Vec<Letter> {
    let mut at = start;
    let mut out = Vec::new();
    for &s in seeds {
        let mut options = Vec::new();
        for f in 0..fx.left.num_one_cells() {
            if fx.left.src1(f) == at.0 {
                options.push(Letter::left(f, at.1));
            }
        }
        for g in 0..fx.right.num_one_cells() {
            if fx.right.src1(g) == at.1 {
                options.push(Letter::right(g, at.0));
            }
        }
        let l = options[s as usize % options.len()];
        at = fx.letter_target(l);
        out.push(l);
    }
    out
}

/// Reduction by rewriting at an arbitrary redex each step.
pub fn reduce_anywhere(fx: &Factors, mut w: Vec<Letter>, choices: &[u16]) -> Vec<Letter> {
    let mut k = 0;
    loop {
        let mut redexes = Vec::new();
        for i in 0..w.len() {
            if fx.is_identity(w[i]) {
                redexes.push((i, false));
            }
            if i + 1 < w.len() && w[i].side == w[i + 1].side {
                redexes.push((i, true));
            }
        }
        if redexes.is_empty() {
            return w;
        }
        let (i, fuse) = redexes[choices.get(k).copied().unwrap_or(0) as usize % redexes.len()];
        k += 1;
        if fuse {
            let c = fx.factor(w[i].side).comp1(w[i].cell, w[i + 1].cell).unwrap();
            w[i] = Letter { cell: c, ..w[i + 1] };
            w.remove(i + 1);
        } else {
            w.remove(i);
        }
    }
}

/// Both legs of the factorisation of every 2-functor between small members.
fn legs() -> (Vec<TwoFunctor>, Vec<TwoFunctor>) {
    let limits = Limits::default();
    let names = ["S0", "S1", "S2", "walking-iso", "iso1"];
    let (mut lefts, mut rights) = (Vec::new(), Vec::new());
    for a in names {
        for b in names {
            for f in enumerate_2functors(&arc(a), &arc(b), &limits).unwrap() {
                let fac = factor_2functor(&f, &limits).unwrap();
                lefts.push(fac.e);
                rights.push(fac.m);
            }
        }
    }
    (lefts, rights)
}

/// Builds commuting squares with a boba left leg and an lff right leg, and
/// for each one counts diagonal fillers by trying every 2-functor. Returns
/// the number of squares; panics unless each has exactly one filler and
/// the solver finds it.
pub fn exhaustive_filler_squares() -> usize {
    let limits = Limits::default();
    let (lefts, rights) = legs();
    // small members only, so the exhaustive search stays quick
    let small = |c: &Arc<Fin2Category>| c.num_two_cells() <= 8;
    let lefts: Vec<_> = lefts.into_iter().filter(|e| small(&e.codomain)).collect();
    let rights: Vec<_> = rights.into_iter().filter(|m| small(&m.domain)).collect();
    assert!(lefts.iter().all(is_boba) && rights.iter().all(is_lff));
    let mut squares = 0;
    for (i, e) in lefts.iter().enumerate().step_by(3) {
        for m in rights.iter().skip(i % 5).step_by(7) {
            let tops = enumerate_2functors(&e.domain, &m.domain, &limits).unwrap();
            let bottoms = enumerate_2functors(&e.codomain, &m.codomain, &limits).unwrap();
            let fillers = enumerate_2functors(&e.codomain, &m.domain, &limits).unwrap();
            for bottom in &bottoms {
                let be = e.then(bottom).unwrap();
                for top in tops.iter().filter(|t| t.then(m).unwrap().same_action(&be)) {
                    let found: Vec<&TwoFunctor> = fillers
                        .iter()
                        .filter(|d| e.then(d).unwrap().same_action(top) && d.then(m).unwrap().same_action(bottom))
                        .collect();
                    assert_eq!(found.len(), 1);
                    let sq = LiftingSquare {
                        e: LeftLegData::Full(e.clone()),
                        m: m.clone(),
                        top: LeftLegData::Full(top.clone()),
                        bottom: bottom.clone(),
                    };
                    assert!(solve_lifting(&sq).unwrap().same_action(found[0]));
                    squares += 1;
                }
            }
        }
    }
    squares
}
