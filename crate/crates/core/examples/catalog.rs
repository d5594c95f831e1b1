//! Build a small 2-category by hand and look through the built-in catalog.

use gray2cat::kernel::{catalog, iso_2categories, ThinBuilder};
use gray2cat::Limits;

fn main() -> gray2cat::Result<()> {
    for name in catalog::NAMES {
        let c = catalog::get(name).unwrap();
        let (o, m, s) = c.counts();
        println!("{name:<14} {o:>2} objects {m:>3} 1-cells {s:>3} 2-cells  {}", catalog::describe(name).unwrap());
    }

    // a free 2-cell, written out again
    let mine = ThinBuilder::new()
        .objects(&["x", "y"])
        .arrow("p", "x", "y")
        .arrow("q", "x", "y")
        .cell("sigma", "p", "q")
        .build()?;
    mine.validate()?;
    let s2 = catalog::get_arc("S2").unwrap();
    let iso = iso_2categories(&std::sync::Arc::new(mine), &s2, &Limits::default())?;
    println!("hand-built cell is S2: {}", iso.is_some());
    Ok(())
}
