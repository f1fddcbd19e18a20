use affschub::{FiniteWeylGroup, RootSystem};

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

#[test]
fn weyl_group_orders_and_root_counts() {
    let cases: Vec<(&str, usize, usize, usize)> = vec![
        ("A", 1, 2, 1),
        ("A", 3, factorial(4), 6),
        ("A", 4, factorial(5), 10),
        ("B", 3, 8 * factorial(3), 9),
        ("C", 3, 8 * factorial(3), 9),
        ("D", 4, 8 * factorial(4), 12),
        ("G", 2, 12, 6),
        ("F", 4, 1152, 24),
    ];
    for (letter, rank, order, positive) in cases {
        let rs = if letter == "F" {
            RootSystem::from_cartan(vec![vec![2, -1, 0, 0], vec![-1, 2, -2, 0], vec![0, -1, 2, -1], vec![0, 0, -1, 2]]).unwrap()
        } else {
            RootSystem::of_type(letter, rank).unwrap()
        };
        let w = FiniteWeylGroup::new(&rs).unwrap();
        assert_eq!(w.size(), order, "{letter}{rank}");
        assert_eq!(rs.positive_roots().len(), positive);
        assert_eq!(w.length(w.longest()), positive);
        // the highest root dominates every root
        let theta = rs.highest_root();
        assert!(theta.is_positive());
        assert!(rs.positive_roots().iter().all(|r| r.height() <= theta.height()));
        assert!(rs.comarks().iter().all(|&c| c > 0));
        // each element's inverse has the same length
        for v in w.elements() {
            assert_eq!(w.length(v), w.length(w.inverse(v)));
            assert_eq!(w.from_word(w.word(v)).unwrap(), v);
        }
    }
}

#[test]
fn bad_cartan_input_is_rejected() {
    assert!(RootSystem::of_type("Q", 2).is_err());
    assert!(RootSystem::of_type("G", 3).is_err());
    assert!(RootSystem::from_cartan(vec![vec![2, -1], vec![-1, 3]]).is_err());
    // affine, not finite type
    assert!(RootSystem::from_cartan(vec![vec![2, -2], vec![-2, 2]]).is_err());
}
