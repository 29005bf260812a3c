//! Exhaustive enumeration of small words and columns.

use crate::alphabet::{LieKind, Letter};
use crate::column::{may_follow, Column};
use crate::crystal::GenLetter;
use crate::spin::SpinColumn;

/// All words of length `len`, in lexicographic order of alphabet positions.
pub fn words(kind: LieKind, len: usize) -> Vec<Vec<Letter>> {
    let alpha = kind.alphabet();
    let mut out: Vec<Vec<Letter>> = vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::with_capacity(out.len() * alpha.len());
        for w in &out {
            for &x in &alpha {
                let mut v = w.clone();
                v.push(x);
                next.push(v);
            }
        }
        out = next;
    }
    out
}

pub fn words_up_to(kind: LieKind, max_len: usize) -> Vec<Vec<Letter>> {
    (0..=max_len).flat_map(|l| words(kind, l)).collect()
}

/// Letters and spin columns.
pub fn gen_alphabet(kind: LieKind) -> Vec<GenLetter> {
    let mut out: Vec<GenLetter> = kind.alphabet().into_iter().map(GenLetter::Letter).collect();
    out.extend(SpinColumn::all(kind.rank()).map(GenLetter::Spin));
    out
}

pub fn gen_words(kind: LieKind, len: usize) -> Vec<Vec<GenLetter>> {
    let alpha = gen_alphabet(kind);
    let mut out: Vec<Vec<GenLetter>> = vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::with_capacity(out.len() * alpha.len());
        for w in &out {
            for &x in &alpha {
                let mut v = w.clone();
                v.push(x);
                next.push(v);
            }
        }
        out = next;
    }
    out
}

/// Every column (admissible or not) of height `h`.
pub fn columns(kind: LieKind, h: usize) -> Vec<Column> {
    let alpha = kind.alphabet();
    let mut out = Vec::new();
    let mut cur: Vec<Letter> = Vec::with_capacity(h);
    fn rec(kind: LieKind, alpha: &[Letter], h: usize, cur: &mut Vec<Letter>, out: &mut Vec<Column>) {
        if cur.len() == h {
            out.push(Column { kind, cells: cur.clone() });
            return;
        }
        for &x in alpha {
            if cur.last().map_or(true, |&a| may_follow(kind, a, x)) {
                cur.push(x);
                rec(kind, alpha, h, cur, out);
                cur.pop();
            }
        }
    }
    rec(kind, &alpha, h, &mut cur, &mut out);
    out
}

pub fn admissible_columns(kind: LieKind, h: usize) -> Vec<Column> {
    columns(kind, h).into_iter().filter(|c| c.is_admissible()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(words(LieKind::b(2), 3).len(), 125);
        assert_eq!(words_up_to(LieKind::d(2), 2).len(), 1 + 4 + 16);
        // B(ω_1), B(ω_2) of so_5 have dimensions 5 and 10
        assert_eq!(admissible_columns(LieKind::b(2), 1).len(), 5);
        assert_eq!(admissible_columns(LieKind::b(2), 2).len(), 10);
        // so_6: ∧²V has dimension 15, ∧³V splits 10 + 10
        assert_eq!(admissible_columns(LieKind::d(3), 2).len(), 15);
        assert_eq!(admissible_columns(LieKind::d(3), 3).len(), 20);
        assert_eq!(gen_alphabet(LieKind::b(2)).len(), 9);
    }
}
