use std::collections::{HashMap, HashSet};

use brandt::{Brandt, CanonicalTerm, Element, Factor, Term};
use proptest::prelude::*;

/// Reference normalizer: look the term's value table up among the value
/// tables of all canonical terms, each computed by multiplying out the word.
struct Oracle {
    b: Brandt,
    by_table: HashMap<Vec<Element>, CanonicalTerm>,
}

impl Oracle {
    fn new(n: u32) -> Self {
        let b = Brandt::new(n).unwrap();
        let by_table = b
            .canonical_terms()
            .into_iter()
            .map(|c| (table(&b, &c.to_term()), c))
            .collect();
        Oracle { b, by_table }
    }

    fn normalize(&self, t: &Term) -> Option<CanonicalTerm> {
        self.by_table.get(&table(&self.b, t)).copied()
    }
}

fn table(b: &Brandt, t: &Term) -> Vec<Element> {
    b.elements().map(|x| t.eval(x)).collect()
}

fn alphabet(b: &Brandt) -> Vec<Factor> {
    b.elements()
        .map(Factor::Const)
        .chain([Factor::Var])
        .collect()
}

fn words(alphabet: &[Factor], max_len: usize) -> Vec<Vec<Factor>> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<Factor>> = vec![vec![]];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| {
                alphabet.iter().map(move |&f| {
                    let mut w = w.clone();
                    w.push(f);
                    w
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

#[test]
fn exhaustive_short_terms_normalize_soundly() {
    for n in 1..=2 {
        let oracle = Oracle::new(n);
        let all = words(&alphabet(&oracle.b), 4);
        for w in all {
            let t = Term::from_factors(w).unwrap();
            let c = t.normalize();
            for x in oracle.b.elements() {
                assert_eq!(t.eval(x), c.apply(x), "n = {n}, term {t}, x = {x}");
            }
            if n >= 2 {
                assert_eq!(oracle.normalize(&t), Some(c), "n = {n}, term {t}");
            }
        }
    }
}

#[test]
fn canonical_tables_are_pairwise_distinct() {
    for n in 2..=3 {
        let b = Brandt::new(n).unwrap();
        let all = b.canonical_terms();
        let tables: HashSet<Vec<Element>> = all.iter().map(|c| table(&b, &c.to_term())).collect();
        assert_eq!(tables.len(), all.len());
    }
}

/// B_1 = {0, (1,1)}: x, x², (1,1)x, x(1,1) and (1,1)x(1,1) all coincide with
/// the identity, so only three of the seven canonical terms are distinct.
#[test]
fn dimension_one_collapses_to_three_functions() {
    let b = Brandt::new(1).unwrap();
    let tables: HashSet<Vec<Element>> = b
        .canonical_terms()
        .iter()
        .map(|c| table(&b, &c.to_term()))
        .collect();
    assert_eq!(b.canonical_terms().len(), 7);
    assert_eq!(tables.len(), 3);
}

#[test]
fn value_table_uses_element_order() {
    let b = Brandt::new(3).unwrap();
    for c in b.canonical_terms() {
        assert_eq!(b.value_table(c), table(&b, &c.to_term()));
    }
}

fn factor(n: u32) -> impl Strategy<Value = Factor> {
    prop_oneof![
        1 => Just(Factor::Const(Element::Zero)),
        4 => (1..=n, 1..=n).prop_map(|(i, j)| Factor::Const(Element::pair(i, j))),
        4 => Just(Factor::Var),
    ]
}

fn term(n: u32) -> impl Strategy<Value = Term> {
    prop::collection::vec(factor(n), 1..12).prop_map(|f| Term::from_factors(f).unwrap())
}

fn sized_term() -> impl Strategy<Value = (u32, Term)> {
    (1u32..=4).prop_flat_map(|n| (Just(n), term(n)))
}

proptest! {
    #[test]
    fn random_terms_match_the_oracle((n, t) in sized_term()) {
        let oracle = Oracle::new(n);
        let c = t.normalize();
        prop_assert_eq!(table(&oracle.b, &t), table(&oracle.b, &c.to_term()));
        if n >= 2 {
            prop_assert_eq!(oracle.normalize(&t), Some(c));
        }
    }

    #[test]
    fn normalization_is_idempotent((_n, t) in sized_term()) {
        let c = t.normalize();
        prop_assert_eq!(c.to_term().normalize(), c);
    }

    #[test]
    fn printed_terms_parse_back((n, t) in sized_term()) {
        let b = Brandt::new(n).unwrap();
        prop_assert_eq!(b.parse_term(&t.to_string()).unwrap(), t.clone());
        let c = t.normalize();
        prop_assert_eq!(b.parse_term(&c.to_string()).unwrap().normalize(), c);
    }
}
