//! Strict, funny and pseudo hom-2-categories, and the count behind the
//! Gray tensor's universal property.

use gray2cat::homs::{build_hom, inclusions, HomKind};
use gray2cat::kernel::{catalog, count_2functors};
use gray2cat::tensor::gray_tensor;
use gray2cat::Limits;

fn main() -> gray2cat::Result<()> {
    let limits = Limits::default();
    let (a, b, c) = (catalog::get_arc("S1").unwrap(), catalog::get_arc("S1").unwrap(), catalog::get_arc("walking-iso").unwrap());

    let strict = build_hom(&b, &c, HomKind::Strict, &limits)?;
    let pseudo = build_hom(&b, &c, HomKind::Pseudo, &limits)?;
    let funny = build_hom(&b, &c, HomKind::Funny, &limits)?;
    for h in [&strict, &pseudo, &funny] {
        println!("{:?}: {:?}", h.kind, h.cat.counts());
    }
    let inc = inclusions(&strict, &pseudo, &funny)?;
    println!("J2 invertible: {}", inc.j2.is_isomorphism());

    let g = gray_tensor(&a, &b, &limits)?;
    println!(
        "|2-Cat(S1 ⊗ S1, C)| = {}, |2-Cat(S1, Ps(S1, C))| = {}",
        count_2functors(&g.cat, &c, &limits)?,
        count_2functors(&a, &pseudo.cat, &limits)?
    );
    Ok(())
}
