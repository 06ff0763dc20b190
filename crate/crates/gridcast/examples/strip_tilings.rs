//! Tile assemblies on 4-row strips: the sequence chosen for each column
//! count, its cost against the closed form 8*floor(n/10) + tail(n mod 10),
//! and a domination check over a long sweep.

use gridcast::bounds::tables::tables;
use gridcast::constructions::{p4_sequence, p4_tiling};

fn main() {
    let t = tables();
    println!("n   sequence                                cost  formula");
    for n in [4u64, 6, 10, 13, 14, 23, 47, 104] {
        let seq = p4_sequence(n).unwrap();
        let desc: Vec<String> = seq
            .0
            .iter()
            .map(|p| {
                let mut s = format!("{:?}", p.kind);
                if p.flip_h {
                    s.push('h');
                }
                if p.flip_v {
                    s.push('v');
                }
                s
            })
            .collect();
        let formula = 8 * (n / 10) + t.p4_strip_tail(n);
        println!(
            "{n:<3} {:<40} {:<5} {formula}",
            desc.join(" "),
            seq.total_cost()
        );
        assert_eq!(seq.total_cost(), formula);
    }

    let mut checked = 0;
    for n in 4..=104u64 {
        let b = p4_tiling(n).unwrap();
        assert!(b.is_dominating().dominating, "n={n}");
        assert_eq!(b.cost(), 8 * (n / 10) + t.p4_strip_tail(n));
        checked += 1;
    }
    println!("\nall {checked} strip tilings (4 <= n <= 104) dominate at formula cost");
}
