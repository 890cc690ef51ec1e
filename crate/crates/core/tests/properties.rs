use christoffel::{
    arrange, check_balance, concat, mechanical_word, rotation_equivalent, smith_to_mechanical,
    weight, BinaryWord, Letter, PeriodicWord, Slope,
};
use proptest::prelude::*;

fn word() -> impl Strategy<Value = BinaryWord> {
    prop::collection::vec(prop::bool::ANY, 0..24).prop_map(|bits| {
        bits.into_iter()
            .map(|b| if b { Letter::A } else { Letter::B })
            .collect::<Vec<_>>()
            .into()
    })
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 { a } else { gcd(b, a % b) }
}

#[test]
fn monoid_laws_on_all_short_words() {
    let words: Vec<BinaryWord> = (0..=4usize)
        .flat_map(|len| {
            (0..1u32 << len).map(move |bits| {
                (0..len)
                    .map(|i| Letter::from_value((bits >> i & 1) as u8).unwrap())
                    .collect::<Vec<_>>()
                    .into()
            })
        })
        .collect();
    let e = BinaryWord::empty();
    for x in &words {
        assert_eq!(&concat(x, &e), x);
        assert_eq!(&concat(&e, x), x);
        for y in &words {
            for z in &words {
                assert_eq!(concat(&concat(x, y), z), concat(x, &concat(y, z)));
            }
        }
    }
}

proptest! {
    #[test]
    fn weight_is_additive(x in word(), y in word()) {
        prop_assert_eq!(weight(&concat(&x, &y)), weight(&x) + weight(&y));
    }

    #[test]
    fn mechanical_words_are_balanced(n in 1usize..2000, k_seed in 0usize..2000, m_seed in 0usize..4000) {
        let k = 1 + k_seed % n;
        let m = 1 + m_seed % (2 * n);
        let w = mechanical_word(Slope::new(k, n).unwrap());
        prop_assert_eq!((w.len(), w.weight()), (n, k));
        let report = check_balance(&PeriodicWord::new(w).unwrap(), m).unwrap();
        prop_assert!(report.passed(), "{:?}", report);
    }

    #[test]
    fn large_coprime_pairs_agree(n in 3usize..5000, k_seed in 0usize..5000) {
        let k = 1 + k_seed % (n - 1);
        prop_assume!(gcd(n, k) == 1);
        let mech = mechanical_word(Slope::new(k, n).unwrap());
        prop_assert_eq!(&smith_to_mechanical(n, k).unwrap(), &mech);
        prop_assert!(rotation_equivalent(arrange(n, k).unwrap().spots(), &mech));
    }
}
