//! The cartesian, funny and Gray tensor products of two free 1-cells.

use gray2cat::kernel::{catalog, iso_2categories};
use gray2cat::tensor::{funny_full, gray_tensor, product};
use gray2cat::Limits;

fn main() -> gray2cat::Result<()> {
    let limits = Limits::default();
    let s1 = catalog::get_arc("S1").unwrap();

    let p = product(&s1, &s1, &limits)?;
    let f = funny_full(&s1, &s1, &limits)?;
    let g = gray_tensor(&s1, &s1, &limits)?;
    println!("product {:?}", p.cat.counts());
    println!("funny   {:?}", f.cat.counts());
    println!("gray    {:?}", g.cat.counts());

    for w in 0..g.cat.num_one_cells() {
        println!("  word {w}: {}", g.cat.one_cell_name(w));
    }

    let u = s1.find_one_cell("u").unwrap();
    let theta = g.interchanger(u, u);
    println!("interchanger {} invertible: {}", g.cat.two_cell_name(theta), g.cat.is_invertible2(theta));

    let square = catalog::get_arc("pseudo-square").unwrap();
    println!("iso to the pseudo-commutative square: {}", iso_2categories(&g.cat, &square, &limits)?.is_some());
    Ok(())
}
