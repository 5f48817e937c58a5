//! Solving catalytic functional equations order by order, and kernel roots.

use invseq::gentree::{count_class, ClassId};
use invseq::series::{iterate_catalytic_system, kernel_for};

fn main() -> invseq::Result<()> {
    for c in [ClassId::C1176, ClassId::C1253, ClassId::C1016, ClassId::C663A, ClassId::C1420] {
        let s = iterate_catalytic_system(c, 40)?;
        println!("{c}: iteration = gentree through z^40: {}", s.to_counts()? == count_class(c, 40));
    }
    let k = kernel_for(ClassId::C1420, 10)?;
    let x = k.kernel_root()?;
    println!("kernel root for 1420: {x}");
    println!("residual vanishes: {}", k.eval(&x).is_zero());
    Ok(())
}
