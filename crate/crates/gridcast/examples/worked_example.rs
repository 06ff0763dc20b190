//! The 4x6 grid end to end: a cost-6 dominating broadcast from tiles, a
//! 16/3 multipacking certifying the matching lower bound, and the exact
//! solver confirming gamma_b2 = 6.

use gridcast::bounds::bound_report;
use gridcast::constructions::{boundary_thirds_multipacking, p4_tiling};
use gridcast::exact::{exact_bnb, SearchLimits};
use gridcast::multipack::format_rational;
use gridcast::{Family, GridGraph};

fn main() {
    let g = GridGraph::new(Family::PxP, 4, 6).unwrap();

    // Upper bound: two 3-column tiles assemble into a dominating broadcast.
    let tiling = p4_tiling(6).unwrap();
    assert!(tiling.is_dominating().dominating);
    println!("tiling broadcast on {g}, cost {}:", tiling.cost());
    print!("{}", tiling.ascii_grid());

    // Lower bound: weight 1/3 on the 16 boundary vertices is a feasible
    // multipacking of value 16/3, and gamma_b2 is an integer, so >= 6.
    let packing = boundary_thirds_multipacking(&g).unwrap();
    println!(
        "boundary packing value {} -> lower bound {}",
        format_rational(&packing.mp_cost()),
        packing.lower_bound_from_multipacking().unwrap()
    );

    // Exact search agrees.
    let exact = exact_bnb(&g, &SearchLimits::default()).unwrap();
    assert!(exact.proved_optimal);
    println!("branch and bound: gamma_b2({g}) = {}", exact.value);

    // The report ties it together with certificates attached.
    let report = bound_report(&g, true, &SearchLimits::default()).unwrap();
    println!("report: {}", report.summary());
    println!("certificates attached: {}", report.certificates.len());
}
