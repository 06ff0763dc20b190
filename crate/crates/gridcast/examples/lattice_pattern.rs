//! The mod-13 plane pattern truncated to finite grids: reference class 8 on
//! the 13x13 grid (cost 35), the best class per grid, and the formula that
//! bounds every construction.

use gridcast::bounds::lattice_formula;
use gridcast::constructions::{best_lattice_ell, lattice_broadcast, lattice_phi, LatticeClass};

fn main() {
    // phi(col,row) = 3*col + 2*row mod 13; one residue class broadcasting at
    // strength 2 covers the whole plane with no overlaps.
    assert_eq!(lattice_phi(2, 1).value(), 8);

    let reference = lattice_broadcast(13, 13, LatticeClass::new(8).unwrap()).unwrap();
    println!(
        "13x13, class 8: cost {} (strength-2 interior points + strength-1 border movers)",
        reference.cost()
    );
    print!("{}", reference.ascii_grid());

    println!("\ngrid      best-class  corner  cost  formula");
    for (m, n) in [(13u64, 13u64), (14, 14), (13, 19), (17, 23), (26, 26)] {
        let (class, corner) = best_lattice_ell(m, n).unwrap();
        let b = lattice_broadcast(m, n, class).unwrap();
        assert!(b.is_dominating().dominating);
        let f = lattice_formula(m, n);
        assert!(f.is_integer());
        println!("{m:>2}x{n:<6} {class:>10} {corner:>7} {:>5}  {f}", b.cost());
    }
}
