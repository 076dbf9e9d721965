//! Exact geometry on the nodal cubic x^3 + y^3 = xyz over Q(w), where
//! w^2 + w + 1 = 0: parametrization, flexes, six-fold contact conics and
//! the symmetries permuting them.

use cuspidal::cubic::{
    apply_to_point, cubic_value, flex_involutions, flexes, group_law_samples, node,
    phi_param, sextactic_conic, sextactic_points, CycRational, SextacticConic,
};

fn main() {
    // the parametrization t -> (t, -t^2, t^3 - 1) lies on the cubic
    let t = CycRational::from_ints(5, 3);
    let p = phi_param(&t);
    assert!(cubic_value(&p).is_zero());
    println!("phi({t}) = {p} lies on the cubic");
    println!("node at {}", node());

    println!("flexes:");
    for f in flexes() {
        println!("  {f}");
    }
    println!("six-fold contact points:");
    for s in sextactic_points() {
        println!("  {s}");
    }

    // the conic family member at alpha touches the cubic at phi(alpha);
    // contact order six happens exactly at the sixth roots of unity
    let w = CycRational::omega();
    for alpha in [-&CycRational::one(), -&w, -&w.pow(2)] {
        match sextactic_conic(&alpha) {
            SextacticConic::Irreducible(conic) => {
                assert!(conic.evaluate(&phi_param(&alpha)).is_zero());
                println!(
                    "alpha = {alpha}: irreducible conic ({}, {}, {}, {}, {}, {})",
                    conic.coeffs[0],
                    conic.coeffs[1],
                    conic.coeffs[2],
                    conic.coeffs[3],
                    conic.coeffs[4],
                    conic.coeffs[5]
                );
            }
            SextacticConic::DoubleTangentLine { .. } => unreachable!(),
        }
    }
    // at the cube roots of unity the member degenerates to a double line
    match sextactic_conic(&CycRational::one()) {
        SextacticConic::DoubleTangentLine { line, .. } => println!(
            "alpha = 1 degenerates to the double line ({} : {} : {})",
            line[0], line[1], line[2]
        ),
        SextacticConic::Irreducible(_) => unreachable!(),
    }

    // three involutions fix the node and permute everything else
    for (i, inv) in flex_involutions().iter().enumerate() {
        assert_eq!(apply_to_point(inv, &node()).unwrap(), node());
        let images: Vec<usize> = flexes()
            .iter()
            .map(|f| {
                let im = apply_to_point(inv, f).unwrap();
                flexes().iter().position(|g| *g == im).unwrap()
            })
            .collect();
        println!("involution {} permutes the flexes as {images:?}", i + 1);
    }

    // sampled collinearity: phi(t1), phi(t2), phi(t3) are collinear
    // exactly when t1 t2 t3 = 1, cross-checked against determinants
    let report = group_law_samples(50, 2024).unwrap();
    println!(
        "{} samples, {} collinear, {} determinant cross-checks, no disagreements",
        report.samples, report.collinear, report.cross_checked
    );
}
