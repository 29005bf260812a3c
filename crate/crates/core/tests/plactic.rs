use std::collections::HashMap;

use kn_plactic::crystal::place_key;
use kn_plactic::enumerate::words_up_to;
use kn_plactic::plactic::{match_relations, p_symbol};
use kn_plactic::LieKind;

fn p_symbol_matches_crystal_position(kind: LieKind, max_len: usize) {
    let mut by_p = HashMap::new();
    let mut by_key = HashMap::new();
    for w in words_up_to(kind, max_len) {
        let p = p_symbol(kind, &w).unwrap();
        assert!(p.is_orthogonal(), "{kind} {w:?} -> {p:?}");
        let key = place_key(kind, &w);
        assert_eq!(by_p.entry(p.clone()).or_insert_with(|| key.clone()), &key, "{w:?}");
        assert_eq!(by_key.entry(key).or_insert(p.clone()), &p, "{w:?}");
    }
}

#[test]
fn insertion_agrees_with_crystal_small() {
    p_symbol_matches_crystal_position(LieKind::b(2), 4);
    p_symbol_matches_crystal_position(LieKind::d(2), 4);
    p_symbol_matches_crystal_position(LieKind::d(3), 3);
    p_symbol_matches_crystal_position(LieKind::b(3), 3);
}

#[test]
fn relation_instances_preserve_crystal_position() {
    for kind in [LieKind::b(2), LieKind::d(2), LieKind::b(3), LieKind::d(3)] {
        for w in words_up_to(kind, 3) {
            for r in match_relations(kind, &w) {
                let v = r.apply(&w).unwrap();
                assert_eq!(place_key(kind, &w), place_key(kind, &v), "{kind} {r}");
            }
        }
    }
}
