//! Certificate wire format: build a construction, serialize it, verify it
//! from the JSON alone, then tamper with it and watch the verifier refuse.

use gridcast::cert::{verify_certificate, Certificate};
use gridcast::constructions::{cxc_multipacking_pair, p4_tiling};

fn main() {
    // An upper-bound certificate: the broadcast itself plus its claim.
    let tiling = p4_tiling(10).unwrap();
    let upper = Certificate::for_broadcast(&tiling, "strip tiling".into());
    let json = upper.to_json();
    println!("--- upper certificate (strip tiling, 4x10) ---");
    println!("{json}");
    let parsed = Certificate::from_json(&json).unwrap();
    println!("verify: {}", verify_certificate(&parsed).unwrap());

    // A lower-bound certificate: a uniform packing compresses to a single
    // default weight.
    let pair = cxc_multipacking_pair(5, 5).unwrap();
    let lower = Certificate::for_multipacking(&pair.multipacking, "uniform torus packing".into());
    println!("\n--- lower certificate (uniform 2/13 packing, C_5 x C_5) ---");
    println!("{}", lower.to_json());
    println!("verify: {}", verify_certificate(&lower).unwrap());

    // Verification recomputes everything; a tampered weight is refuted with
    // a witness, no matter what the claim says.
    let tampered_json = lower.to_json().replace("2/13", "6/13");
    let tampered = Certificate::from_json(&tampered_json).unwrap();
    println!("\n--- tampered copy ---");
    match verify_certificate(&tampered) {
        Ok(_) => unreachable!("tampered certificate must fail"),
        Err(e) => println!("refused: {e}"),
    }
}
