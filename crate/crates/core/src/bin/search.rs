use legfront::front::{Event::{L, R, X}, FrontDiagram};
use legfront::cable::*;
use std::collections::BTreeSet;

fn main() {
    let trefoil = FrontDiagram::new(vec![L(1), L(1), X(2), X(2), X(2), R(1), R(1)]);
    let ruling: BTreeSet<usize> = [2usize].into_iter().collect();
    match cable_front(&trefoil, &ruling, 2, 5, false) {
        Ok(_) => println!("built ok"),
        Err(e) => println!("error: {e}"),
    }
}
