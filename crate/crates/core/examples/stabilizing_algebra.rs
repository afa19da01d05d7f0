//! Brackets of L, M1, M2 and the Casimir of the stabilizing algebra.

use sheun::kernel::int;
use sheun::ops::{combine, sheun_basis};

fn main() {
    let b = sheun_basis();
    let l2 = b.l.compose(&b.l);
    println!("[L,M1]   = {}", b.l.commutator(&b.m1));
    println!("2L^2     = {}", l2.scale(&int(2)));
    println!("[L,M2]   = {}", b.l.commutator(&b.m2));
    println!("[M1,M2]  = {}", b.m1.commutator(&b.m2));

    let casimir = combine([
        (int(1), &b.m1.compose(&b.m1)),
        (int(-1), &b.m2.anticommutator(&b.l)),
        (int(3), &l2),
    ]);
    println!("M1^2 - {{M2,L}} + 3L^2 = {casimir}");

    let printed = combine([
        (int(1), &b.m1.compose(&b.m1)),
        (int(-1), &b.m1.anticommutator(&b.m2)),
        (int(3), &l2),
    ]);
    println!("M1^2 - {{M1,M2}} + 3L^2 = {printed}");
}
