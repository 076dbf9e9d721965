//! Blowing down (-1)-components of a normal crossing configuration, one
//! step at a time, and watching what the push-forward does to everything
//! else.

use cuspidal::{BlowupSite, CompKind, IntersectionConfig, StepKind};

fn main() {
    // a chain of three divisor components with a marked curve on one end:
    //   C -- X1(-1) -- X2(-2) -- X3(-2)
    let mut cfg = IntersectionConfig::new();
    cfg.add_component("C", -2, CompKind::MarkedCurve).unwrap();
    cfg.add_component("X1", -1, CompKind::Divisor).unwrap();
    cfg.add_component("X2", -2, CompKind::Divisor).unwrap();
    cfg.add_component("X3", -2, CompKind::Divisor).unwrap();
    cfg.add_pair("C", "X1", 1).unwrap();
    cfg.add_pair("X1", "X2", 1).unwrap();
    cfg.add_pair("X2", "X3", 1).unwrap();

    let det_before = cfg.form_determinant();
    println!("determinant of the full form: {det_before}");

    // each contraction creates the next (-1), so the chain eats itself
    let mut steps = 0;
    while let Some(id) = cfg.minus_one_divisors().first().cloned() {
        let step = cfg.blow_down(&id).unwrap();
        steps += 1;
        println!(
            "step {steps}: contracted {} ({:?}), curve multiplicity {}, met {}",
            step.contracted,
            step.kind,
            step.curve_multiplicity,
            step.pairings
                .iter()
                .map(|(n, m)| format!("{n} x{m}"))
                .collect::<Vec<_>>()
                .join(", ")
        );
    }
    println!("remaining components: {}", cfg.len());
    println!("curve self-intersection now: {}", cfg.self_int("C").unwrap());

    // determinants alternate sign, one factor of -1 per contraction
    let det_after = cfg.form_determinant();
    println!("determinant after {steps} contractions: {det_after}");
    let expected = if steps % 2 == 0 {
        det_after.clone()
    } else {
        -det_after.clone()
    };
    assert_eq!(det_before, expected);

    // blowing up the intersection point of two divisors and contracting
    // the new exceptional is a round trip; the new component subdivides
    // the edge, so its later contraction is a subdivisional step
    let mut cfg = IntersectionConfig::new();
    cfg.add_component("D1", -3, CompKind::Divisor).unwrap();
    cfg.add_component("D2", -2, CompKind::Divisor).unwrap();
    cfg.add_pair("D1", "D2", 1).unwrap();
    let before = cfg.clone();
    cfg.blow_up(BlowupSite::Edge("D1".into(), "D2".into()), "E")
        .unwrap();
    println!(
        "after blowing up D1.D2: D1^2 = {}, D2^2 = {}, E^2 = {}",
        cfg.self_int("D1").unwrap(),
        cfg.self_int("D2").unwrap(),
        cfg.self_int("E").unwrap()
    );
    let step = cfg.blow_down("E").unwrap();
    assert_eq!(step.kind, StepKind::Subdivisional);
    assert_eq!(cfg, before);
    println!("contracting E restored the configuration exactly");
}
