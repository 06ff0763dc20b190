//! Exact fractional LP values on tori: for every C_m x C_n a uniform
//! multipacking and a uniform fractional broadcast with equal cost pin
//! mp_f2 = gamma_fb2 exactly, and the ceiling is a certified lower bound
//! for gamma_b2.

use gridcast::bounds::cxc_lp_value;
use gridcast::constructions::cxc_multipacking_pair;
use gridcast::multipack::format_rational;

fn main() {
    println!("torus      mp value   lower bound");
    for (m, n) in [
        (3u64, 3u64),
        (3, 4),
        (4, 4),
        (3, 9),
        (4, 8),
        (5, 5),
        (7, 11),
        (13, 13),
    ] {
        let pair = cxc_multipacking_pair(m, n).unwrap();
        let primal = pair.multipacking.mp_cost();
        let dual = pair.fractional_broadcast.mp_cost();
        assert_eq!(primal, dual, "pair costs must pin the LP value");
        assert_eq!(primal, cxc_lp_value(m, n));
        assert!(
            pair.multipacking
                .is_feasible_multipacking()
                .unwrap()
                .feasible
        );
        assert!(
            pair.fractional_broadcast
                .is_feasible_fractional_broadcast()
                .unwrap()
                .feasible
        );
        println!(
            "C_{m} x C_{n:<4} {:>9} {:>7}",
            format_rational(&primal),
            pair.multipacking.lower_bound_from_multipacking().unwrap()
        );
    }
    println!("\nboth sides feasible with equal cost on every row: LP optimum certified");
}
