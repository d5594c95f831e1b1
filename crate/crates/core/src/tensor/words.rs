//! Alternating words: the 1-cells of the funny tensor product.
//!
//! A letter moves in one coordinate along a 1-cell of that factor while the
//! other coordinate stays at a frozen object. A word is reduced when it has
//! no identity letters and no two adjacent letters move in the same
//! coordinate.

use crate::error::{Error, Result};
use crate::kernel::Fin2Category;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// `cell` is a 1-cell of the factor on `side`; `frozen` an object of the other.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub side: Side,
    pub cell: usize,
    pub frozen: usize,
}

impl Letter {
    pub fn left(cell: usize, frozen: usize) -> Self {
        Letter {
            side: Side::Left,
            cell,
            frozen,
        }
    }

    pub fn right(cell: usize, frozen: usize) -> Self {
        Letter {
            side: Side::Right,
            cell,
            frozen,
        }
    }
}

/// The two factors of a binary tensor.
#[derive(Clone, Copy)]
pub struct Factors<'a> {
    pub left: &'a Fin2Category,
    pub right: &'a Fin2Category,
}

impl<'a> Factors<'a> {
    pub fn factor(&self, side: Side) -> &'a Fin2Category {
        match side {
            Side::Left => self.left,
            Side::Right => self.right,
        }
    }

    /// Source object pair `(a, b)` of a letter.
    pub fn letter_source(&self, l: Letter) -> (usize, usize) {
        let s = self.factor(l.side).src1(l.cell);
        match l.side {
            Side::Left => (s, l.frozen),
            Side::Right => (l.frozen, s),
        }
    }

    pub fn letter_target(&self, l: Letter) -> (usize, usize) {
        let t = self.factor(l.side).tgt1(l.cell);
        match l.side {
            Side::Left => (t, l.frozen),
            Side::Right => (l.frozen, t),
        }
    }

    pub fn is_identity(&self, l: Letter) -> bool {
        self.factor(l.side).is_identity1(l.cell)
    }

    pub fn letter_name(&self, l: Letter) -> String {
        match l.side {
            Side::Left => format!("({},{})", self.left.one_cell_name(l.cell), self.right.object_name(l.frozen)),
            Side::Right => format!("({},{})", self.left.object_name(l.frozen), self.right.one_cell_name(l.cell)),
        }
    }

    /// Checks that consecutive letters chain up, starting at `source`.
    pub fn check_path(&self, source: (usize, usize), letters: &[Letter]) -> Result<(usize, usize)> {
        let mut at = source;
        for (i, &l) in letters.iter().enumerate() {
            let (fa, fb) = (self.left.num_objects(), self.right.num_objects());
            let ok_frozen = match l.side {
                Side::Left => l.frozen < fb && l.cell < self.left.num_one_cells(),
                Side::Right => l.frozen < fa && l.cell < self.right.num_one_cells(),
            };
            if !ok_frozen || self.letter_source(l) != at {
                return Err(Error::malformed(format!("letter {i} does not continue the word")));
            }
            at = self.letter_target(l);
        }
        Ok(at)
    }
}

/// A reduced alternating word with explicit endpoints (needed for the empty word).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlternatingWord {
    pub source: (usize, usize),
    pub target: (usize, usize),
    pub letters: Vec<Letter>,
}

impl AlternatingWord {
    pub fn empty(at: (usize, usize)) -> Self {
        AlternatingWord {
            source: at,
            target: at,
            letters: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_reduced(&self, fx: &Factors) -> bool {
        self.letters.iter().all(|&l| !fx.is_identity(l))
            && self.letters.windows(2).all(|w| w[0].side != w[1].side)
    }

    pub fn name(&self, fx: &Factors) -> String {
        if self.letters.is_empty() {
            format!("1_({},{})", fx.left.object_name(self.source.0), fx.right.object_name(self.source.1))
        } else {
            self.letters.iter().map(|&l| fx.letter_name(l)).collect::<Vec<_>>().join(";")
        }
    }
}

/// Normal form: repeatedly drop identity letters and fuse adjacent letters
/// in the same coordinate by composing in that factor.
pub fn word_reduce(fx: &Factors, source: (usize, usize), letters: &[Letter]) -> Result<AlternatingWord> {
    let target = fx.check_path(source, letters)?;
    let mut out: Vec<Letter> = Vec::with_capacity(letters.len());
    for &l in letters {
        push_reduced(fx, &mut out, l);
    }
    Ok(AlternatingWord {
        source,
        target,
        letters: out,
    })
}

/// Appends a letter to a reduced word, keeping it reduced. The stack
/// discipline performs the same rewrites as the fixpoint description: an
/// identity produced by a fusion disappears and may expose a new fusion.
pub(crate) fn push_reduced(fx: &Factors, out: &mut Vec<Letter>, l: Letter) {
    if fx.is_identity(l) {
        return;
    }
    match out.last() {
        Some(&last) if last.side == l.side => {
            out.pop();
            let fused = Letter {
                side: l.side,
                cell: fx.factor(l.side).comp1(last.cell, l.cell).expect("adjacent letters compose"),
                frozen: l.frozen,
            };
            push_reduced(fx, out, fused);
        }
        _ => out.push(l),
    }
}

/// Concatenation followed by reduction.
pub fn concat(fx: &Factors, w1: &AlternatingWord, w2: &AlternatingWord) -> AlternatingWord {
    assert_eq!(w1.target, w2.source, "words are not composable");
    let mut out = w1.letters.clone();
    for &l in &w2.letters {
        push_reduced(fx, &mut out, l);
    }
    AlternatingWord {
        source: w1.source,
        target: w2.target,
        letters: out,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::catalog;

    #[test]
    fn reduction_examples() {
        let s1 = catalog::get("S1").unwrap();
        let fx = Factors { left: &s1, right: &s1 };
        let u = s1.find_one_cell("u").unwrap();
        let id1 = s1.id1(1);
        let w = word_reduce(&fx, (0, 0), &[Letter::left(u, 0), Letter::left(id1, 0)]).unwrap();
        assert_eq!(w.letters, vec![Letter::left(u, 0)]);
        let w = word_reduce(&fx, (0, 0), &[Letter::left(u, 0), Letter::right(u, 1)]).unwrap();
        assert_eq!(w.letters.len(), 2);
        assert!(w.is_reduced(&fx));
        assert_eq!(w.target, (1, 1));
    }

    #[test]
    fn inverse_letters_cancel() {
        let iso = catalog::get("iso1").unwrap();
        let s1 = catalog::get("S1").unwrap();
        let fx = Factors { left: &iso, right: &s1 };
        let (u, v) = (iso.find_one_cell("u").unwrap(), iso.find_one_cell("v").unwrap());
        let w = word_reduce(&fx, (0, 0), &[Letter::left(u, 0), Letter::left(v, 0)]).unwrap();
        assert!(w.is_empty());
        assert_eq!(w.target, (0, 0));
        // a fusion to an identity exposes a further fusion
        let su = s1.find_one_cell("u").unwrap();
        let w = word_reduce(
            &fx,
            (0, 0),
            &[Letter::right(su, 0), Letter::left(u, 1), Letter::left(v, 1), Letter::right(s1.id1(1), 0)],
        )
        .unwrap();
        assert_eq!(w.letters, vec![Letter::right(su, 0)]);
    }

    #[test]
    fn broken_path_is_malformed() {
        let s1 = catalog::get("S1").unwrap();
        let fx = Factors { left: &s1, right: &s1 };
        let u = s1.find_one_cell("u").unwrap();
        assert!(word_reduce(&fx, (0, 0), &[Letter::left(u, 0), Letter::left(u, 0)]).is_err());
    }
}
