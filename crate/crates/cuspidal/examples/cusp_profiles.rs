//! From comb-shaped resolution data to the numerical data of the plane
//! curve: multiplicity sequence, degree and genus defect.

use cuspidal::{LinearChain, ResolutionGraph};

fn show(name: &str, graph: &ResolutionGraph) {
    let o = graph.validate().unwrap();
    let profile = graph.cusp_profile().unwrap();
    let counts = graph.sprouting_counts().unwrap();
    println!("{name}:");
    for (i, (a, b)) in graph.a_chains.iter().zip(&graph.b_chains).enumerate() {
        println!("  A{} = {a}, B{} = {b}", i + 1, i + 1);
    }
    println!("  o = {o:?}");
    println!("  degree {}", profile.degree);
    println!("  multiplicities {:?}", profile.multiplicities);
    println!("  genus defect {}", profile.genus_defect);
    for (i, c) in counts.iter().enumerate() {
        println!(
            "  level {}: {} sprouting and {} subdivisional blowups",
            i + 1,
            c.sprouting,
            c.subdivisional
        );
    }
}

fn main() {
    // one level: the degree 8 curve with a single cusp of multiplicity 3
    let one_level = ResolutionGraph::new(
        vec![LinearChain::new(vec![2, 2, 2, 2, 2, 2, 4])],
        vec![LinearChain::new(vec![2, 2])],
        -2,
    )
    .unwrap();
    show("one-level comb", &one_level);

    // two levels stack a second cascade of blowups on the first
    let two_level = ResolutionGraph::new(
        vec![
            LinearChain::new(vec![2, 2, 2, 2, 2, 3, 2, 2, 2, 2, 2]),
            LinearChain::new(vec![4]),
        ],
        vec![
            LinearChain::new(vec![7]),
            LinearChain::new(vec![2, 2]),
        ],
        -2,
    )
    .unwrap();
    show("two-level comb", &two_level);

    // round trip: assembling the divisor and decomposing it again finds
    // the same comb
    let (config, _) = two_level.assemble().unwrap();
    let back = ResolutionGraph::decompose(&config).unwrap();
    assert_eq!(back, two_level);
    println!("assemble/decompose round trip: ok");

    // the smallest data the machinery accepts: a conic through a smooth
    // point, with a negative genus defect exposing the non-cuspidal input
    let degenerate = ResolutionGraph::new(
        vec![LinearChain::new(vec![3])],
        vec![LinearChain::new(vec![2])],
        -2,
    )
    .unwrap();
    show("degenerate comb", &degenerate);
}
