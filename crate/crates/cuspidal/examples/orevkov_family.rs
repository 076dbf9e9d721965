//! The built-in family of unicuspidal curves: resolution data, degrees
//! and the star-product recursion connecting consecutive members.

use cuspidal::{LinearChain, OrevkovCurve, Variant};

fn main() {
    for m in 1..=4 {
        for variant in [Variant::Plain, Variant::Star] {
            let curve = OrevkovCurve::new(m, variant).unwrap();
            let summary = curve.verify().unwrap();
            println!(
                "m={m} {variant}: degree {}, cusp multiplicity {}, genus defect {}",
                summary.profile.degree,
                summary.profile.multiplicities[0],
                summary.profile.genus_defect
            );
            for (i, (a, b)) in summary
                .graph
                .a_chains
                .iter()
                .zip(&summary.graph.b_chains)
                .enumerate()
            {
                println!("  A{} = {a}, B{} = {b}", i + 1, i + 1);
            }
            println!(
                "  extra curve attaches to {} and {}, closing one cycle",
                summary.e0_attachments.0, summary.e0_attachments.1
            );
            assert_eq!(summary.cycle_rank_with_e0, 1);
        }
    }

    // consecutive long chains differ by one star factor of TW6
    let tw6 = LinearChain::twos(6);
    for m in 3..=6 {
        let prev = OrevkovCurve::new(m - 1, Variant::Plain).unwrap();
        let next = OrevkovCurve::new(m, Variant::Plain).unwrap();
        assert_eq!(next.graph.a_chains[0], tw6.star(&prev.graph.a_chains[0]));
    }
    println!("recursion A1(m) = TW6 star A1(m-1) holds for m = 3..=6");

    // degrees double from plain to star at every index
    for m in 1..=6 {
        let plain = OrevkovCurve::new(m, Variant::Plain).unwrap().verify().unwrap();
        let star = OrevkovCurve::new(m, Variant::Star).unwrap().verify().unwrap();
        assert_eq!(star.profile.degree, 2 * plain.profile.degree);
    }
    println!("star members have exactly twice the plain degree for m = 1..=6");
}
