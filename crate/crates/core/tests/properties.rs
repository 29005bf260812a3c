use kn_plactic::alphabet::{format_letters, parse_word};
use kn_plactic::column::{split_column, unsplit};
use kn_plactic::crystal::{word_e, word_f, word_weight, GenLetter};
use kn_plactic::enumerate::{admissible_columns, gen_alphabet};
use kn_plactic::generalized::{format_gen_word, generalized_p_symbol, parse_gen_word};
use kn_plactic::plactic::{congruent, p_symbol};
use kn_plactic::schensted::{psi, psi_inverse};
use kn_plactic::tableau::{shape_of, Epsilon, TableauJson};
use kn_plactic::{LieKind, Letter};
use proptest::prelude::*;

fn kind_strategy(max_rank: usize) -> impl Strategy<Value = LieKind> {
    (any::<bool>(), 2..=max_rank).prop_map(|(b, n)| if b { LieKind::b(n) } else { LieKind::d(n) })
}

fn word_strategy(max_rank: usize, max_len: usize) -> impl Strategy<Value = (LieKind, Vec<Letter>)> {
    kind_strategy(max_rank).prop_flat_map(move |kind| {
        let alpha = kind.alphabet();
        (Just(kind), prop::collection::vec(prop::sample::select(alpha), 0..=max_len))
    })
}

fn gen_word_strategy(max_rank: usize, max_len: usize) -> impl Strategy<Value = (LieKind, Vec<GenLetter>)> {
    kind_strategy(max_rank).prop_flat_map(move |kind| {
        (Just(kind), prop::collection::vec(prop::sample::select(gen_alphabet(kind)), 0..=max_len))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn word_text_round_trips((kind, w) in word_strategy(6, 10)) {
        prop_assert_eq!(parse_word(kind, &format_letters(&w)).unwrap().letters, w);
    }

    #[test]
    fn gen_word_text_round_trips((kind, w) in gen_word_strategy(5, 6)) {
        prop_assert_eq!(parse_gen_word(kind, &format_gen_word(&w)).unwrap(), w);
    }

    #[test]
    fn operators_are_partial_inverses((kind, w) in word_strategy(5, 8), i in 1usize..=5) {
        let i = 1 + (i - 1) % kind.rank();
        if let Some(v) = word_f(kind, i, &w) {
            prop_assert_eq!(word_e(kind, i, &v), Some(w.clone()));
        }
        if let Some(v) = word_e(kind, i, &w) {
            prop_assert_eq!(word_f(kind, i, &v), Some(w));
        }
    }

    #[test]
    fn p_symbol_is_an_orthogonal_normal_form((kind, w) in word_strategy(4, 8)) {
        let p = p_symbol(kind, &w).unwrap();
        prop_assert!(p.is_orthogonal());
        prop_assert_eq!(word_weight(kind, &p.reading()), word_weight(kind, &w));
        prop_assert_eq!(p_symbol(kind, &p.reading()).unwrap(), p.clone());
        prop_assert!(congruent(kind, &w, &p.reading()).unwrap());
    }

    #[test]
    fn schensted_is_a_bijection((kind, w) in word_strategy(4, 7)) {
        let (p, q) = psi(kind, &w).unwrap();
        prop_assert_eq!(q.len(), w.len());
        prop_assert_eq!(psi_inverse(&p, &q).unwrap(), w);
    }

    #[test]
    fn split_round_trips(kind in kind_strategy(5), h in 1usize..=5, pick in any::<prop::sample::Index>()) {
        let h = 1 + (h - 1) % kind.rank();
        let cols = admissible_columns(kind, h);
        let c = pick.get(&cols);
        let pair = split_column(c).unwrap();
        prop_assert_eq!(pair.l.height(), h);
        prop_assert!(!pair.l.has_pair() && !pair.r.has_pair());
        prop_assert_eq!(&unsplit(&pair).unwrap(), c);
    }

    #[test]
    fn tableau_json_round_trips((kind, w) in word_strategy(4, 8)) {
        let p = p_symbol(kind, &w).unwrap();
        let eps = if p.is_empty() { None } else { Some(shape_of(&p).unwrap().epsilon).filter(|&e| e != Epsilon::Zero) };
        let text = p.to_json(eps).to_string_pretty();
        prop_assert_eq!(TableauJson::from_str(&text).unwrap().tabloid().unwrap(), p);
    }

    #[test]
    fn generalized_p_symbol_is_idempotent((kind, w) in gen_word_strategy(3, 4)) {
        let p = generalized_p_symbol(kind, &w).unwrap();
        prop_assert_eq!(word_weight(kind, &p.reading()), word_weight(kind, &w));
        prop_assert_eq!(generalized_p_symbol(kind, &p.reading()).unwrap(), p);
    }
}
