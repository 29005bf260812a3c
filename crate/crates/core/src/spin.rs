//! Spin columns and their crystals.

use std::fmt;

use crate::alphabet::{LieKind, Letter, Weight};
use crate::crystal::Element;
use crate::error::{Error, Result};

/// A spin column of height `n`: for every `i` exactly one of `i`, `ī`.
/// Bit `i−1` of `barred` is set when `ī` is present.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpinColumn {
    rank: u8,
    barred: u32,
}

impl SpinColumn {
    pub fn from_mask(rank: usize, barred: u32) -> SpinColumn {
        debug_assert!(rank <= 32);
        let mask = if rank == 32 { u32::MAX } else { (1u32 << rank) - 1 };
        SpinColumn { rank: rank as u8, barred: barred & mask }
    }

    /// `𝔠_p`: unbarred `1..p`, barred above.
    pub fn standard(rank: usize, p: usize) -> SpinColumn {
        let all = if rank == 32 { u32::MAX } else { (1u32 << rank) - 1 };
        let low = if p == 32 { u32::MAX } else { (1u32 << p) - 1 };
        SpinColumn::from_mask(rank, all & !low)
    }

    /// Highest weight vertex of `B(Λ_{n−1})` in type D: `1⋯(n−1)n̄`.
    pub fn standard_odd(rank: usize) -> SpinColumn {
        SpinColumn::from_mask(rank, 1 << (rank - 1))
    }

    pub fn new(kind: LieKind, letters: &[Letter]) -> Result<SpinColumn> {
        let n = kind.rank();
        if letters.len() != n {
            return Err(Error::Parse(format!("a spin column has {n} letters")));
        }
        let mut barred = 0u32;
        let mut seen = 0u32;
        for &x in letters {
            if x.is_zero() || x.index() > n {
                return Err(Error::Parse(format!("letter {x} cannot occur in a spin column")));
            }
            let bit = 1u32 << (x.index() - 1);
            if seen & bit != 0 {
                return Err(Error::Parse("spin column repeats an index".into()));
            }
            seen |= bit;
            if x.is_barred() {
                barred |= bit;
            }
        }
        let c = SpinColumn::from_mask(n, barred);
        if c.letters() != letters {
            return Err(Error::Parse("spin column letters must increase".into()));
        }
        Ok(c)
    }

    /// Build from an unordered set of letters containing one of `i`, `ī` for each `i`.
    pub fn from_set(rank: usize, letters: &[Letter]) -> Result<SpinColumn> {
        let mut barred = 0u32;
        let mut seen = 0u32;
        for &x in letters {
            if x.is_zero() || x.index() > rank {
                return Err(Error::Internal(format!("{x} cannot occur in a spin column")));
            }
            let bit = 1u32 << (x.index() - 1);
            if seen & bit != 0 {
                return Err(Error::Internal("spin column repeats an index".into()));
            }
            seen |= bit;
            if x.is_barred() {
                barred |= bit;
            }
        }
        if seen.count_ones() as usize != rank {
            return Err(Error::Internal("spin column misses an index".into()));
        }
        Ok(SpinColumn::from_mask(rank, barred))
    }

    pub fn rank(self) -> usize {
        self.rank as usize
    }

    pub fn mask(self) -> u32 {
        self.barred
    }

    pub fn is_barred_at(self, i: usize) -> bool {
        self.barred >> (i - 1) & 1 == 1
    }

    pub fn letter_at(self, i: usize) -> Letter {
        if self.is_barred_at(i) {
            Letter::barred(i)
        } else {
            Letter::unbarred(i)
        }
    }

    pub fn contains(self, x: Letter) -> bool {
        !x.is_zero() && x.index() <= self.rank() && self.letter_at(x.index()) == x
    }

    pub fn barred_count(self) -> usize {
        self.barred.count_ones() as usize
    }

    /// Type D: `true` for `B(Λ_n)`, `false` for `B(Λ_{n−1})`.
    pub fn is_even(self) -> bool {
        self.barred_count() % 2 == 0
    }

    /// Increasing order: unbarred letters upwards, then barred ones downwards.
    pub fn letters(self) -> Vec<Letter> {
        let n = self.rank();
        let mut out: Vec<Letter> = (1..=n).filter(|&i| !self.is_barred_at(i)).map(Letter::unbarred).collect();
        out.extend((1..=n).rev().filter(|&i| self.is_barred_at(i)).map(Letter::barred));
        out
    }

    pub fn greatest(self) -> Letter {
        *self.letters().last().expect("rank is positive")
    }

    pub fn from_weight(rank: usize, wt: &Weight) -> Option<SpinColumn> {
        let mut barred = 0u32;
        for (k, &c) in wt.0.iter().enumerate() {
            match c {
                1 => {}
                -1 => barred |= 1 << k,
                _ => return None,
            }
        }
        Some(SpinColumn::from_mask(rank, barred))
    }

    pub fn parse(kind: LieKind, text: &str) -> Result<SpinColumn> {
        let inner = text
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("spin column `{text}` must be bracketed")))?;
        let letters = inner
            .split_whitespace()
            .map(Letter::parse)
            .collect::<Result<Vec<_>>>()?;
        SpinColumn::new(kind, &letters)
    }

    /// All `2^n` spin columns, by mask.
    pub fn all(rank: usize) -> impl Iterator<Item = SpinColumn> {
        (0..1u64 << rank).map(move |m| SpinColumn::from_mask(rank, m as u32))
    }
}

impl fmt::Display for SpinColumn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.letters().iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", inner.join(" "))
    }
}

impl fmt::Debug for SpinColumn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Element for SpinColumn {
    fn f(self, kind: LieKind, i: usize) -> Option<Self> {
        let n = kind.rank();
        let b = self.barred;
        if i < n {
            let (lo, hi) = (1u32 << (i - 1), 1u32 << i);
            (b & lo == 0 && b & hi != 0).then(|| SpinColumn { barred: b ^ lo ^ hi, ..self })
        } else if kind.is_b() {
            let top = 1u32 << (n - 1);
            (b & top == 0).then(|| SpinColumn { barred: b | top, ..self })
        } else {
            let two = (1u32 << (n - 1)) | (1u32 << (n - 2));
            (b & two == 0).then(|| SpinColumn { barred: b | two, ..self })
        }
    }

    fn e(self, kind: LieKind, i: usize) -> Option<Self> {
        let n = kind.rank();
        let b = self.barred;
        if i < n {
            let (lo, hi) = (1u32 << (i - 1), 1u32 << i);
            (b & lo != 0 && b & hi == 0).then(|| SpinColumn { barred: b ^ lo ^ hi, ..self })
        } else if kind.is_b() {
            let top = 1u32 << (n - 1);
            (b & top != 0).then(|| SpinColumn { barred: b & !top, ..self })
        } else {
            let two = (1u32 << (n - 1)) | (1u32 << (n - 2));
            (b & two == two).then(|| SpinColumn { barred: b & !two, ..self })
        }
    }

    fn eps(self, kind: LieKind, i: usize) -> u32 {
        self.e(kind, i).is_some() as u32
    }

    fn phi(self, kind: LieKind, i: usize) -> u32 {
        self.f(kind, i).is_some() as u32
    }

    fn weight(self, _kind: LieKind) -> Weight {
        Weight((1..=self.rank()).map(|i| if self.is_barred_at(i) { -1 } else { 1 }).collect())
    }

    fn token(self) -> String {
        self.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::{explore_component, GenLetter};

    #[test]
    fn parse_and_order() {
        let d = LieKind::d(3);
        let c = SpinColumn::parse(d, "[1 2 3]").unwrap();
        let f = c.f(d, 3).unwrap();
        assert_eq!(f.to_string(), "[1 -3 -2]");
        assert!(SpinColumn::parse(d, "[1 -1 2]").is_err());
        assert!(SpinColumn::parse(d, "[2 1 3]").is_err());
        assert_eq!(SpinColumn::parse(d, "[1 -3 -2]").unwrap(), f);
    }

    #[test]
    fn sizes() {
        for n in 2..=4 {
            let b = LieKind::b(n);
            let top = [GenLetter::Spin(SpinColumn::standard(n, n))];
            assert_eq!(explore_component(b, &top).unwrap().len(), 1 << n);
            let d = LieKind::d(n);
            assert_eq!(explore_component(d, &top).unwrap().len(), 1 << (n - 1));
            let odd = [GenLetter::Spin(SpinColumn::standard_odd(n))];
            assert_eq!(explore_component(d, &odd).unwrap().len(), 1 << (n - 1));
        }
    }
}
