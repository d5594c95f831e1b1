//! The (bijective on objects and 1-cells, locally fully faithful)
//! factorisation of a 2-functor, and a diagonal filler.

use gray2cat::kernel::{catalog, TwoFunctor};
use gray2cat::ofs::{factor_2functor, is_boba, is_lff, solve_lifting, LeftLegData, LiftingSquare};
use gray2cat::Limits;

fn main() -> gray2cat::Result<()> {
    let limits = Limits::default();
    let collapse = catalog::maps().into_iter().find(|(n, _)| *n == "S2->S1 collapse").unwrap().1;

    let fac = factor_2functor(&collapse, &limits)?;
    println!("middle {:?}, e boba {}, m lff {}", fac.middle.counts(), is_boba(&fac.e), is_lff(&fac.m));
    println!("m ∘ e = F: {}", fac.e.then(&fac.m)?.same_action(&collapse));

    //   S2 --F--> S1
    //   |e        |1
    //   M  --m--> S1
    let id = TwoFunctor::identity(collapse.codomain.clone());
    let d = solve_lifting(&LiftingSquare {
        e: LeftLegData::Full(fac.e.clone()),
        m: id,
        top: LeftLegData::Full(collapse.clone()),
        bottom: fac.m.clone(),
    })?;
    println!("filler is m: {}", d.same_action(&fac.m));
    Ok(())
}
