//! Lift the symmetric monoidal structure of the cartesian product along
//! (1, K) and check its coherence on the nose.

use gray2cat::kernel::catalog;
use gray2cat::tensor::gray_tensor;
use gray2cat::theory::{coherence_check, factor_operations, generator, Algebra, Axiom, MonoidalSetup};
use gray2cat::Limits;

fn main() -> gray2cat::Result<()> {
    let setup = MonoidalSetup::new(Limits::default());
    let k = setup.k();
    let z = factor_operations(&setup.ambient, &k);
    let s1 = catalog::get_arc("S1").unwrap();
    let s2 = catalog::get_arc("S2").unwrap();

    let zm = z.op("m", &[s1.clone(), s1.clone()])?;
    println!("Z(m)(S1, S1) is the Gray tensor: {}", *zm == *gray_tensor(&s1, &s1, &Limits::default())?.cat);

    let a = z.cell(&generator("a")?, &[s1.clone(), s2.clone(), s1.clone()])?;
    println!("associator at (S1, S2, S1): {:?} -> {:?}, iso {}", a.domain.counts(), a.codomain.counts(), a.is_isomorphism());

    for (axiom, probe) in [
        (Axiom::Pentagon, vec![s1.clone(); 4]),
        (Axiom::Triangle, vec![s1.clone(), s2.clone()]),
        (Axiom::Symmetry, vec![s2.clone(), s1.clone()]),
        (Axiom::Hexagon, vec![s1.clone(), s1.clone(), s2.clone()]),
    ] {
        let r = coherence_check(&setup.ambient, &z, axiom, &[probe])?;
        println!("{axiom}: {} equations hold", r.equations_checked);
    }
    Ok(())
}
