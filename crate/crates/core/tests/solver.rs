use brandt::{count_solutions, Brandt, Element, Equation};
use proptest::prelude::*;

#[test]
fn symbolic_count_matches_brute_force_on_every_equation() {
    for (n, want) in [(1, 49), (2, 961), (3, 12_321)] {
        let b = Brandt::new(n).unwrap();
        let all = b.canonical_terms();
        let mut seen = 0;
        for &l in &all {
            for &r in &all {
                let eq = Equation::new(l, r);
                assert_eq!(
                    count_solutions(n, &eq),
                    b.solve(&eq).len() as u64,
                    "n = {n}: {eq}"
                );
                seen += 1;
            }
        }
        assert_eq!(seen, want);
    }
}

#[test]
fn solution_sets_are_ordered_subsets() {
    let b = Brandt::new(2).unwrap();
    let all = b.canonical_terms();
    for &l in &all {
        for &r in &all {
            let s = b.solve(&Equation::new(l, r));
            assert!(s.members().windows(2).all(|w| w[0] < w[1]));
            assert!(s.members().iter().all(|&e| b.check(e).is_ok()));
            assert_eq!(s.is_empty(), s.members().is_empty());
        }
    }
}

fn equation(n: u32) -> impl Strategy<Value = Equation> {
    let b = Brandt::new(n).unwrap();
    let all = b.canonical_terms();
    let k = all.len();
    (0..k, 0..k).prop_map(move |(i, j)| Equation::new(all[i], all[j]))
}

proptest! {
    #[test]
    fn symbolic_count_matches_brute_force_at_larger_n(
        (n, eq) in (4u32..=7).prop_flat_map(|n| (Just(n), equation(n)))
    ) {
        let b = Brandt::new(n).unwrap();
        prop_assert_eq!(count_solutions(n, &eq), b.solve(&eq).len() as u64);
        prop_assert_eq!(count_solutions(n, &eq), count_solutions(n, &eq.swapped()));
    }

    #[test]
    fn zero_solves_equations_that_agree_at_zero(
        (n, eq) in (1u32..=5).prop_flat_map(|n| (Just(n), equation(n)))
    ) {
        let b = Brandt::new(n).unwrap();
        let agree = eq.lhs.apply(Element::Zero) == eq.rhs.apply(Element::Zero);
        prop_assert_eq!(b.solve(&eq).contains(Element::Zero), agree);
    }
}
