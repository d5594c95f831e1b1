//! Cubical functors out of the product, the universal one into the Gray
//! tensor, and Q as an equivalence in icons.

use gray2cat::icon::cubical::{cub_bijection_backward, cub_bijection_forward, enumerate_cubical, is_cubical, universal_r};
use gray2cat::icon::pseudolimit::{icon_equivalence_q, pseudolimit_of_arrow};
use gray2cat::kernel::{catalog, enumerate_2functors};
use gray2cat::tensor::gray_tensor;
use gray2cat::Limits;

fn main() -> gray2cat::Result<()> {
    let limits = Limits::default();
    let (s2, s1) = (catalog::get_arc("S2").unwrap(), catalog::get_arc("S1").unwrap());
    let g = gray_tensor(&s2, &s1, &limits)?;

    let r = universal_r(&g);
    println!("R cubical: {}", is_cubical(&r, &g.product));

    let c = catalog::get_arc("walking-iso").unwrap();
    let maps = enumerate_2functors(&g.cat, &c, &limits)?;
    let cubs = enumerate_cubical(&g.product, &c, &limits)?;
    let round_trips = maps
        .iter()
        .all(|m| cub_bijection_backward(&g, &cub_bijection_forward(&g, m).unwrap()).unwrap() == *m);
    println!("{} 2-functors, {} cubical functors, round trips {round_trips}", maps.len(), cubs.len());

    let eq = icon_equivalence_q(&g, &limits)?;
    println!("Q certified as an icon equivalence: {}", eq.certified());

    for (name, f) in catalog::pseudo_maps() {
        let cone = pseudolimit_of_arrow(&f, &limits)?;
        let rep = cone.check_universal_property(&["S0", "S1", "S2"], &limits)?;
        println!("pseudolimit of {name}: apex {:?}, {} cones, passed {}", cone.apex.counts(), rep.cones, rep.passed());
    }
    Ok(())
}
