//! Letters of the vector representations of `so(2n+1)` and `so(2n)`, their
//! orders, words, and weights.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MIN_RANK: usize = 2;
pub const MAX_RANK: usize = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Kind {
    B,
    D,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kind::B => f.write_str("B"),
            Kind::D => f.write_str("D"),
        }
    }
}

impl std::str::FromStr for Kind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "B" | "b" => Ok(Kind::B),
            "D" | "d" => Ok(Kind::D),
            _ => Err(Error::Parse(format!("unknown type `{s}`"))),
        }
    }
}

/// A Lie type together with its rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LieKind {
    kind: Kind,
    rank: u8,
}

impl LieKind {
    pub fn new(kind: Kind, rank: usize) -> Result<Self> {
        if !(MIN_RANK..=MAX_RANK).contains(&rank) {
            return Err(Error::RankOutOfRange(rank));
        }
        Ok(LieKind { kind, rank: rank as u8 })
    }

    /// Panics on an out of range rank.
    pub fn b(rank: usize) -> Self {
        Self::new(Kind::B, rank).expect("rank out of range")
    }

    /// Panics on an out of range rank.
    pub fn d(rank: usize) -> Self {
        Self::new(Kind::D, rank).expect("rank out of range")
    }

    pub fn kind(self) -> Kind {
        self.kind
    }

    pub fn rank(self) -> usize {
        self.rank as usize
    }

    pub fn is_b(self) -> bool {
        self.kind == Kind::B
    }

    pub fn is_d(self) -> bool {
        self.kind == Kind::D
    }

    pub fn contains(self, x: Letter) -> bool {
        let k = x.index();
        if x.is_zero() {
            self.is_b()
        } else {
            k <= self.rank()
        }
    }

    pub fn check(self, x: Letter) -> Result<Letter> {
        if self.contains(x) {
            Ok(x)
        } else {
            Err(Error::IllegalLetter { letter: x.to_string(), kind: self })
        }
    }

    /// The letters in increasing order (type D lists `n` before `n̄`).
    pub fn alphabet(self) -> Vec<Letter> {
        let n = self.rank();
        let mut out: Vec<Letter> = (1..=n).map(Letter::unbarred).collect();
        if self.is_b() {
            out.push(Letter::ZERO);
        }
        out.extend((1..=n).rev().map(Letter::barred));
        out
    }

    fn level(self, x: Letter) -> i32 {
        let n = self.rank() as i32;
        let v = x.value() as i32;
        match self.kind {
            Kind::B => {
                if v > 0 {
                    v
                } else if v == 0 {
                    n + 1
                } else {
                    2 * n + 2 + v
                }
            }
            Kind::D => {
                if v > 0 {
                    v
                } else if v == -n {
                    n
                } else {
                    2 * n + v
                }
            }
        }
    }

    /// Partial order on letters; `None` for the incomparable pair `n`, `n̄` in type D.
    pub fn cmp_letters(self, x: Letter, y: Letter) -> Option<Ordering> {
        if x == y {
            return Some(Ordering::Equal);
        }
        let (a, b) = (self.level(x), self.level(y));
        if a == b {
            None
        } else {
            Some(a.cmp(&b))
        }
    }

    /// `x ⪯ y`
    pub fn le(self, x: Letter, y: Letter) -> bool {
        matches!(self.cmp_letters(x, y), Some(Ordering::Less | Ordering::Equal))
    }

    /// `x ≺ y`
    pub fn lt(self, x: Letter, y: Letter) -> bool {
        self.cmp_letters(x, y) == Some(Ordering::Less)
    }

    /// Sort key refining the partial order into a total one.
    pub fn sort_key(self, x: Letter) -> (i32, i8) {
        (self.level(x), -x.value())
    }
}

impl fmt::Display for LieKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind, self.rank)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LetterOrder {
    Less,
    Equal,
    Greater,
    Incomparable,
}

pub fn compare_letters(kind: LieKind, x: Letter, y: Letter) -> Result<LetterOrder> {
    kind.check(x)?;
    kind.check(y)?;
    Ok(match kind.cmp_letters(x, y) {
        Some(Ordering::Less) => LetterOrder::Less,
        Some(Ordering::Equal) => LetterOrder::Equal,
        Some(Ordering::Greater) => LetterOrder::Greater,
        None => LetterOrder::Incomparable,
    })
}

/// A letter: `k` unbarred, `-k` barred, `0` the middle letter of type B.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(i8);

impl Letter {
    pub const ZERO: Letter = Letter(0);

    pub fn unbarred(k: usize) -> Letter {
        debug_assert!(k >= 1 && k <= MAX_RANK);
        Letter(k as i8)
    }

    pub fn barred(k: usize) -> Letter {
        debug_assert!(k >= 1 && k <= MAX_RANK);
        Letter(-(k as i8))
    }

    pub fn from_value(v: i8) -> Letter {
        Letter(v)
    }

    pub fn value(self) -> i8 {
        self.0
    }

    /// `|x|`, zero for the letter `0`.
    pub fn index(self) -> usize {
        self.0.unsigned_abs() as usize
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn is_barred(self) -> bool {
        self.0 < 0
    }

    pub fn is_unbarred(self) -> bool {
        self.0 > 0
    }

    pub fn bar(self) -> Letter {
        Letter(-self.0)
    }

    pub fn parse(token: &str) -> Result<Letter> {
        let v: i32 = token
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad letter token `{token}`")))?;
        if v.unsigned_abs() as usize > MAX_RANK {
            return Err(Error::Parse(format!("letter `{token}` exceeds the maximal rank")));
        }
        Ok(Letter(v as i8))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Weights are stored doubled so that spin weights stay integral.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight(pub Vec<i32>);

impl Weight {
    pub fn zero(rank: usize) -> Weight {
        Weight(vec![0; rank])
    }

    pub fn add_assign(&mut self, other: &Weight) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a += b;
        }
    }

    pub fn sub_assign(&mut self, other: &Weight) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a -= b;
        }
    }

    pub fn of_letter(rank: usize, x: Letter) -> Weight {
        let mut w = Weight::zero(rank);
        if x.is_unbarred() {
            w.0[x.index() - 1] = 2;
        } else if x.is_barred() {
            w.0[x.index() - 1] = -2;
        }
        w
    }

    /// Coordinates in the basis of fundamental weights, see [`OmegaCoords`].
    pub fn omega_coords(&self, kind: LieKind) -> OmegaCoords {
        let d = &self.0;
        let n = d.len();
        let mut doubled = vec![0; n];
        let barred = kind.is_d() && d[n - 1] < 0;
        for i in 0..n - 1 {
            doubled[i] = d[i] - d[i + 1];
        }
        if barred {
            doubled[n - 2] = d[n - 2] + d[n - 1];
            doubled[n - 1] = -d[n - 1];
        } else {
            doubled[n - 1] = d[n - 1];
        }
        OmegaCoords { doubled, barred }
    }
}

/// Twice the coefficients on `ω_1, …, ω_n`. In type D with `barred` the last
/// entry is on `ω̄_n` instead of `ω_n`. Only the last entry can be odd (spin weights).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OmegaCoords {
    pub doubled: Vec<i32>,
    pub barred: bool,
}

impl OmegaCoords {
    pub fn is_dominant(&self) -> bool {
        self.doubled.iter().all(|&c| c >= 0)
    }

    /// Integral coefficients, `None` when a spin part is present.
    pub fn integral(&self) -> Option<Vec<i32>> {
        if self.doubled.iter().any(|c| c % 2 != 0) {
            None
        } else {
            Some(self.doubled.iter().map(|c| c / 2).collect())
        }
    }
}

impl fmt::Display for OmegaCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.doubled.len();
        let mut parts = Vec::new();
        for (i, c) in self.doubled.iter().enumerate() {
            if *c == 0 {
                continue;
            }
            let name = if i + 1 == n && self.barred { format!("wbar{}", n) } else { format!("w{}", i + 1) };
            let coeff = if c % 2 == 0 { (c / 2).to_string() } else { format!("{c}/2") };
            parts.push(if coeff == "1" { name } else { format!("{coeff}*{name}") });
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// A word over the letters of one alphabet.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    pub kind: LieKind,
    pub letters: Vec<Letter>,
}

impl Word {
    pub fn new(kind: LieKind, letters: Vec<Letter>) -> Result<Word> {
        for &x in &letters {
            kind.check(x)?;
        }
        Ok(Word { kind, letters })
    }

    pub fn empty(kind: LieKind) -> Word {
        Word { kind, letters: Vec::new() }
    }

    pub fn parse(kind: LieKind, text: &str) -> Result<Word> {
        let letters = text
            .split_whitespace()
            .map(Letter::parse)
            .collect::<Result<Vec<_>>>()?;
        Word::new(kind, letters)
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `d_i` = number of `i` minus number of `ī`.
    pub fn d_vector(&self) -> Vec<i32> {
        d_vector(self.kind.rank(), &self.letters)
    }

    pub fn weight(&self) -> Weight {
        Weight(self.d_vector().into_iter().map(|d| 2 * d).collect())
    }

    pub fn omega_coordinates(&self) -> OmegaCoords {
        self.weight().omega_coords(self.kind)
    }
}

pub fn d_vector(rank: usize, letters: &[Letter]) -> Vec<i32> {
    let mut d = vec![0; rank];
    for x in letters {
        if x.is_unbarred() {
            d[x.index() - 1] += 1;
        } else if x.is_barred() {
            d[x.index() - 1] -= 1;
        }
    }
    d
}

pub fn format_letters(letters: &[Letter]) -> String {
    letters.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_letters(&self.letters))
    }
}

pub fn parse_word(kind: LieKind, text: &str) -> Result<Word> {
    Word::parse(kind, text)
}

pub fn format_word(w: &Word) -> String {
    w.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        let b = LieKind::b(3);
        let d = LieKind::d(3);
        let l = |v: i8| Letter::from_value(v);
        assert!(b.lt(l(3), l(0)) && b.lt(l(0), l(-3)) && b.lt(l(-2), l(-1)));
        assert_eq!(d.cmp_letters(l(3), l(-3)), None);
        assert!(d.lt(l(2), l(3)) && d.lt(l(2), l(-3)) && d.lt(l(-3), l(-2)));
        assert_eq!(b.alphabet().len(), 7);
        assert_eq!(d.alphabet().len(), 6);
        assert!(!d.contains(Letter::ZERO));
    }

    #[test]
    fn weights() {
        let d = LieKind::d(3);
        let w = Word::parse(d, "1 2 -3").unwrap();
        assert_eq!(w.d_vector(), vec![1, 1, -1]);
        let o = w.omega_coordinates();
        assert_eq!(o, OmegaCoords { doubled: vec![0, 0, 2], barred: true });
        let b = LieKind::b(2);
        let w = Word::parse(b, "1 2 1").unwrap();
        assert_eq!(w.omega_coordinates().integral(), Some(vec![1, 1]));
        assert_eq!(w.to_string(), "1 2 1");
    }

    #[test]
    fn rejects() {
        assert!(LieKind::new(Kind::B, 1).is_err());
        assert!(Word::parse(LieKind::d(2), "0").is_err());
        assert!(Word::parse(LieKind::b(2), "3").is_err());
        assert!(Word::parse(LieKind::b(2), "x").is_err());
    }
}
