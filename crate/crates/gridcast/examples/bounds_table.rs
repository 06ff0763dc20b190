//! Side-by-side sandwich tables: lower bound, optional exact value, upper
//! bound, and the gap, per graph.

use gridcast::bounds::bound_report;
use gridcast::exact::SearchLimits;
use gridcast::{Family, GridGraph};

fn main() {
    let limits = SearchLimits::default();

    println!("| graph | lower | exact | upper | gap |");
    println!("|---|---|---|---|---|");
    for (family, m, ns) in [
        (Family::CxC, 13u32, vec![13u32, 26, 39]),
        (Family::CxC, 4, vec![6, 8, 10, 12]),
        (Family::PxP, 2, vec![4, 7, 10]),
        (Family::PxP, 4, vec![6, 9, 14]),
        (Family::PxC, 3, vec![6, 9, 12]),
    ] {
        for n in ns {
            let g = GridGraph::new(family, m, n).unwrap();
            let r = bound_report(&g, true, &limits).unwrap();
            let exact = r
                .exact
                .as_ref()
                .map(|b| b.value.to_string())
                .unwrap_or_else(|| "?".into());
            println!(
                "| {g} | {} | {exact} | {} | {} |",
                r.lower.value,
                r.upper.value,
                r.upper.value - r.lower.value
            );
        }
    }

    // Larger ranges go through the same evaluators without search.
    println!("\ntight torus diagonal (multiples of 13):");
    for k in 1..=4u32 {
        let g = GridGraph::new(Family::CxC, 13 * k, 13 * k).unwrap();
        let r = bound_report(&g, false, &limits).unwrap();
        assert_eq!(r.lower.value, r.upper.value);
        println!("  {g}: gamma_b2 = {}", r.lower.value);
    }
}
