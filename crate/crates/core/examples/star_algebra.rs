//! The universal generators U, V, Y, R and their Casimirs.

use sheun::kernel::rat;
use sheun::structure::universal_set;
use sheun::verify::eval_expr;
use sheun::verify::relations::universal_env;

fn main() -> sheun::Result<()> {
    let e1 = rat(7, 3);
    let set = universal_set(&e1);
    println!("U = {}\nV = {}\nY = {}\nR = {}\n", set.u, set.v, set.y, set.r);

    let env = universal_env(&e1);
    for text in ["[V,Y] + {U,Y}", "[U,Y] + {Y,Y}", "[R,Y] - {U,U} + {U,V} - {V,Y}"] {
        println!("{text} = {}", eval_expr(text, &env)?);
    }
    Ok(())
}
