//! The standard battery of small groups used by the verification suites.

use std::sync::Arc;

use crate::group::FiniteGroup;
use crate::perm::Perm;

fn from_cycles(domain: usize, gens: &[&str]) -> Arc<FiniteGroup> {
    let perms: Vec<Perm> = gens
        .iter()
        .map(|g| Perm::from_cycles(g, domain).expect("battery generator"))
        .collect();
    FiniteGroup::from_generators(domain, perms).expect("battery group")
}

/// Named groups of order up to `max_order` (at most 12). Ordered by group
/// order, then name.
pub fn standard_groups(max_order: usize) -> Vec<(String, Arc<FiniteGroup>)> {
    let all: Vec<(&str, Arc<FiniteGroup>)> = vec![
        ("1", FiniteGroup::trivial()),
        ("C2", from_cycles(2, &["(0 1)"])),
        ("C3", from_cycles(3, &["(0 1 2)"])),
        ("C4", from_cycles(4, &["(0 1 2 3)"])),
        ("V4", from_cycles(4, &["(0 1)(2 3)", "(0 2)(1 3)"])),
        ("C5", from_cycles(5, &["(0 1 2 3 4)"])),
        ("C6", from_cycles(6, &["(0 1 2 3 4 5)"])),
        ("S3", from_cycles(3, &["(0 1)", "(0 1 2)"])),
        ("C7", from_cycles(7, &["(0 1 2 3 4 5 6)"])),
        ("C8", from_cycles(8, &["(0 1 2 3 4 5 6 7)"])),
        ("C4xC2", from_cycles(6, &["(0 1 2 3)", "(4 5)"])),
        ("C2^3", from_cycles(6, &["(0 1)", "(2 3)", "(4 5)"])),
        ("D4", from_cycles(4, &["(0 1 2 3)", "(0 2)"])),
        (
            "Q8",
            FiniteGroup::from_generators(
                8,
                vec![
                    // right multiplication by i and j in the regular
                    // representation on {1,-1,i,-i,j,-j,k,-k}
                    Perm::from_images(vec![2, 3, 1, 0, 7, 6, 4, 5]).unwrap(),
                    Perm::from_images(vec![4, 5, 6, 7, 1, 0, 3, 2]).unwrap(),
                ],
            )
            .expect("Q8"),
        ),
        ("C9", from_cycles(9, &["(0 1 2 3 4 5 6 7 8)"])),
        ("C3^2", from_cycles(6, &["(0 1 2)", "(3 4 5)"])),
        ("C10", from_cycles(10, &["(0 1 2 3 4 5 6 7 8 9)"])),
        ("D5", from_cycles(5, &["(0 1 2 3 4)", "(1 4)(2 3)"])),
        ("C11", from_cycles(11, &["(0 1 2 3 4 5 6 7 8 9 10)"])),
        ("C12", from_cycles(7, &["(0 1 2 3)", "(4 5 6)"])),
        ("C6xC2", from_cycles(8, &["(0 1 2 3 4 5)", "(6 7)"])),
        ("D6", from_cycles(6, &["(0 1 2 3 4 5)", "(1 5)(2 4)"])),
        ("A4", from_cycles(4, &["(0 1 2)", "(1 2 3)"])),
    ];
    all.into_iter()
        .filter(|(_, g)| g.order() <= max_order)
        .map(|(n, g)| (n.to_string(), g))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_are_right() {
        let want = [
            ("1", 1),
            ("C2", 2),
            ("V4", 4),
            ("S3", 6),
            ("C4xC2", 8),
            ("C2^3", 8),
            ("D4", 8),
            ("Q8", 8),
            ("C3^2", 9),
            ("D5", 10),
            ("C12", 12),
            ("C6xC2", 12),
            ("D6", 12),
            ("A4", 12),
        ];
        let groups = standard_groups(12);
        for (name, order) in want {
            let g = groups.iter().find(|(n, _)| n == name).unwrap();
            assert_eq!(g.1.order(), order, "{name}");
        }
        // Q8 has a unique element of order 2
        let q8 = &groups.iter().find(|(n, _)| n == "Q8").unwrap().1;
        let twos = (0..8).filter(|&x| q8.element_order(x) == 2).count();
        assert_eq!(twos, 1);
    }
}
