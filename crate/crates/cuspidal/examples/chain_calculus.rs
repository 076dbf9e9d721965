//! Bracket arithmetic on weighted chains: discriminants, inductance,
//! adjoints and star products.

use cuspidal::LinearChain;

fn main() {
    let a = LinearChain::new(vec![2, 2, 2, 2, 2, 2, 4]);
    println!("A = {a}");
    println!("discriminant d(A) = {}", a.discriminant());

    // the inductance determines an admissible chain uniquely
    let e = a.inductance().unwrap();
    println!("inductance e(A) = {e}");
    let back = LinearChain::from_inductance(&e).unwrap();
    assert_eq!(back, a);
    println!("from_inductance({e}) = {back}");

    // adjoints are involutive and preserve the discriminant
    let adj = a.adjoint();
    println!("adjoint A* = {adj}");
    assert_eq!(adj.adjoint(), a);
    assert_eq!(adj.discriminant(), a.discriminant());

    // a chain of n twos is dual to the single entry n + 1
    let tw6 = LinearChain::twos(6);
    println!("TW6 = {tw6}, TW6* = {}", tw6.adjoint());

    // star products glue chains along their end entries
    let p2 = tw6.star_power(2);
    println!("TW6 star TW6 = {p2}");
    assert_eq!(p2.len(), 2 * tw6.len() - 1);

    // the adjoint of [7, 7, ..., 7] (m entries) is the m-th star power
    for m in 1..=4 {
        let sevens = LinearChain::new(vec![7; m]);
        assert_eq!(sevens.adjoint(), tw6.star_power(m));
        println!("{sevens}* = {}", sevens.adjoint());
    }

    // complementary inductances sum to 1
    let dual = a.transposed().adjoint();
    let sum = a.inductance().unwrap() + dual.inductance().unwrap();
    assert!(sum == num::BigRational::from_integer(1.into()));
    println!("e(A) + e((A^t)*) = 1 holds for A = {a}");
}
