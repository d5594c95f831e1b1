//! The same lifting engine over finite categories with (bijective on
//! objects, fully faithful).

use gray2cat::kernel::catalog;
use gray2cat::theory::{coherence_check, factor_operations, Algebra, Axiom, Discrete, DiscreteMap, FinCat, MonoidalSetup};
use gray2cat::Limits;

fn main() -> gray2cat::Result<()> {
    let setup = MonoidalSetup::new(Limits::default());
    let x = Discrete::new(&setup.x);
    let y = Discrete::sharing(&setup.y, &x);
    let k = setup.k();
    let dk = DiscreteMap { inner: &k, source: &x, target: &y };
    let z = factor_operations(&FinCat, &dk);

    let s1 = catalog::get_arc("S1").unwrap().underlying().clone();
    let p2 = catalog::get_arc("path2").unwrap().underlying().clone();
    let sq = z.op("m", &[s1.clone(), s1.clone()])?;
    println!("m(S1, S1): {} objects, {} arrows", sq.num_objects(), sq.num_arrows());

    coherence_check(&FinCat, &z, Axiom::Pentagon, &[vec![s1.clone(); 4]])?;
    coherence_check(&FinCat, &z, Axiom::Triangle, &[vec![s1.clone(), p2.clone()]])?;
    coherence_check(&FinCat, &z, Axiom::Hexagon, &[vec![s1.clone(), s1, p2]])?;
    println!("pentagon, triangle and hexagon hold");
    Ok(())
}
