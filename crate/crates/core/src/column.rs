//! Columns, admissibility, and the splitting `C ↦ (lC, rC)`.

use std::fmt;

use crate::alphabet::{format_letters, LieKind, Letter};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Column {
    pub kind: LieKind,
    pub cells: Vec<Letter>,
}

impl fmt::Debug for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", format_letters(&self.cells))
    }
}

impl fmt::Display for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_letters(&self.cells))
    }
}

/// Can `b` sit directly below `a`?
pub fn may_follow(kind: LieKind, a: Letter, b: Letter) -> bool {
    if kind.is_b() {
        kind.lt(a, b) || (a.is_zero() && b.is_zero())
    } else {
        !kind.le(b, a)
    }
}

pub fn is_column_word(kind: LieKind, w: &[Letter]) -> bool {
    w.iter().all(|&x| kind.contains(x)) && w.windows(2).all(|p| may_follow(kind, p[0], p[1]))
}

impl Column {
    pub fn new(kind: LieKind, cells: Vec<Letter>) -> Result<Column> {
        for &x in &cells {
            kind.check(x)?;
        }
        if !is_column_word(kind, &cells) {
            return Err(Error::MalformedColumn(format_letters(&cells)));
        }
        Ok(Column { kind, cells })
    }

    pub fn parse(kind: LieKind, text: &str) -> Result<Column> {
        let cells = text
            .split_whitespace()
            .map(Letter::parse)
            .collect::<Result<Vec<_>>>()?;
        Column::new(kind, cells)
    }

    /// `1⋯k`, or `1⋯(n−1)n̄` when `bar` (type D, `k = n`).
    pub fn generator(kind: LieKind, k: usize, bar: bool) -> Column {
        let mut cells: Vec<Letter> = (1..=k).map(Letter::unbarred).collect();
        if bar {
            cells[k - 1] = Letter::barred(k);
        }
        Column { kind, cells }
    }

    pub fn height(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, x: Letter) -> bool {
        self.cells.contains(&x)
    }

    pub fn reading(&self) -> &[Letter] {
        &self.cells
    }

    /// Unbarred `z` such that both `z` and `z̄` occur.
    pub fn pairs(&self) -> Vec<Letter> {
        let mut out: Vec<Letter> = self
            .cells
            .iter()
            .copied()
            .filter(|x| x.is_unbarred() && self.contains(x.bar()))
            .collect();
        out.dedup();
        out
    }

    pub fn has_pair(&self) -> bool {
        !self.pairs().is_empty()
    }

    /// `N(z)`: letters `x` with `x ⪯ z` or `x ⪰ z̄`.
    pub fn n_count(&self, z: Letter) -> usize {
        let k = self.kind;
        self.cells.iter().filter(|&&x| k.le(x, z) || k.le(z.bar(), x)).count()
    }

    pub fn is_admissible(&self) -> bool {
        let n = self.kind.rank();
        if self.height() > n {
            return false;
        }
        self.pairs().into_iter().all(|z| self.n_count(z) <= z.index())
    }

    /// Admissibility through the positional form `|q − p| ≥ h − z + 1`.
    pub fn is_admissible_by_positions(&self) -> bool {
        let n = self.kind.rank();
        let h = self.height() as i64;
        if h as usize > n {
            return false;
        }
        for (p, &x) in self.cells.iter().enumerate() {
            if !x.is_unbarred() {
                continue;
            }
            for (q, &y) in self.cells.iter().enumerate() {
                if y == x.bar() && ((q as i64 - p as i64).abs()) < h - x.index() as i64 + 1 {
                    return false;
                }
            }
        }
        true
    }

    /// Type D: turn each factor `n̄ n` into `0 0`. The result is a type B column.
    pub fn hat(&self) -> Result<Column> {
        if !self.kind.is_d() {
            return Err(Error::KindMismatch);
        }
        let n = self.kind.rank();
        let (top, bot) = (Letter::unbarred(n), Letter::barred(n));
        let mut cells = Vec::with_capacity(self.height());
        let mut i = 0;
        while i < self.cells.len() {
            if self.cells[i] == bot && self.cells.get(i + 1) == Some(&top) {
                cells.push(Letter::ZERO);
                cells.push(Letter::ZERO);
                i += 2;
            } else {
                cells.push(self.cells[i]);
                i += 1;
            }
        }
        Ok(Column { kind: LieKind::b(n), cells })
    }

    pub fn split(&self) -> Result<SplitPair> {
        split_column(self)
    }

    /// Type D, height `n`: is the reading in `B(v_{ω_n})` (`false`) or `B(v_{ω̄_n})` (`true`)?
    pub fn is_barred_spin_class(&self) -> Result<bool> {
        let n = self.kind.rank();
        if !self.kind.is_d() || self.height() != n {
            return Err(Error::MalformedColumn("membership needs a type D column of height n".into()));
        }
        let mut verdict = None;
        for (k0, &x) in self.cells.iter().enumerate() {
            if x.index() != n {
                continue;
            }
            let k = k0 + 1;
            let even = (n - k) % 2 == 0;
            // ω_n: n at even distance from the bottom, n̄ at odd distance
            let bar = if x.is_unbarred() { !even } else { even };
            match verdict {
                None => verdict = Some(bar),
                Some(v) if v != bar => {
                    return Err(Error::MalformedColumn(format!("mixed parity evidence in {self}")))
                }
                _ => {}
            }
        }
        verdict.ok_or_else(|| Error::MalformedColumn(format!("{self} has no letter n or n̄")))
    }
}

/// Which of the two height `n` classes of type D a column belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpinClass {
    Omega,
    OmegaBar,
}

pub fn column_membership(c: &Column) -> Result<SpinClass> {
    Ok(if c.is_barred_spin_class()? { SpinClass::OmegaBar } else { SpinClass::Omega })
}

pub fn n_count(c: &Column, z: Letter) -> usize {
    c.n_count(z)
}

pub fn is_admissible(c: &Column) -> bool {
    c.is_admissible()
}

pub fn hat(c: &Column) -> Result<Column> {
    c.hat()
}

/// The pair `(lC, rC)`; tensor readings emit `w(rC)` first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SplitPair {
    pub l: Column,
    pub r: Column,
}

impl SplitPair {
    /// `w(rC) ⊗ w(lC)` as a word.
    pub fn tensor_reading(&self) -> Vec<Letter> {
        let mut w = self.r.cells.clone();
        w.extend_from_slice(&self.l.cells);
        w
    }
}

fn sort_column(kind: LieKind, cells: &mut [Letter]) {
    cells.sort_by_key(|&x| kind.sort_key(x));
}

pub fn split_column(c: &Column) -> Result<SplitPair> {
    let kind = c.kind;
    let n = kind.rank();
    let work = if kind.is_d() { c.hat()? } else { c.clone() };
    let zeros = work.cells.iter().filter(|x| x.is_zero()).count();
    let mut targets: Vec<Letter> = vec![Letter::ZERO; zeros];
    let mut pairs = work.pairs();
    pairs.sort_by(|a, b| b.index().cmp(&a.index()));
    targets.extend(pairs);

    let mut used = vec![false; n + 1];
    for x in &work.cells {
        used[x.index()] = true;
    }
    let mut ts = Vec::with_capacity(targets.len());
    let mut bound = n + 1;
    for z in &targets {
        let limit = if z.is_zero() { n + 1 } else { z.index() };
        let below = bound.min(limit);
        let t = (1..below).rev().find(|&t| !used[t]).ok_or_else(|| {
            Error::CannotSplit(format!("no free letter below {} in {}", z, c))
        })?;
        ts.push(t);
        bound = t;
    }

    let mut l = work.cells.clone();
    let mut r = work.cells.clone();
    let mut zero_seen = 0;
    for (k, z) in targets.iter().enumerate() {
        let t = ts[k];
        if z.is_zero() {
            let pos: Vec<usize> = work.cells.iter().enumerate().filter(|(_, x)| x.is_zero()).map(|(p, _)| p).collect();
            let p = pos[zero_seen];
            zero_seen += 1;
            l[p] = Letter::unbarred(t);
            r[p] = Letter::barred(t);
        } else {
            let p = work.cells.iter().position(|x| x == z).expect("pair letter present");
            let q = work.cells.iter().position(|&x| x == z.bar()).expect("pair letter present");
            l[p] = Letter::unbarred(t);
            r[q] = Letter::barred(t);
        }
    }
    sort_column(kind, &mut l);
    sort_column(kind, &mut r);
    let pair = SplitPair { l: Column { kind, cells: l }, r: Column { kind, cells: r } };
    debug_assert!(!pair.l.has_pair() && !pair.r.has_pair());
    debug_assert!(pair.l.cells.iter().zip(&pair.r.cells).all(|(&a, &b)| kind.le(a, b)));
    Ok(pair)
}

/// Recover `C` from `(lC, rC)`.
pub fn unsplit(pair: &SplitPair) -> Result<Column> {
    let kind = pair.l.kind;
    let n = kind.rank();
    let (l, r) = (&pair.l.cells, &pair.r.cells);
    if l.len() != r.len() {
        return Err(Error::MalformedColumn("split halves differ in height".into()));
    }
    let mut cells: Vec<Letter> = l.iter().copied().filter(|x| r.contains(x)).collect();
    let l_only: Vec<Letter> = l.iter().copied().filter(|x| !r.contains(x)).collect();
    let r_only: Vec<Letter> = r.iter().copied().filter(|x| !l.contains(x)).collect();
    cells.extend(r_only.iter().filter(|x| x.is_unbarred()));
    cells.extend(l_only.iter().filter(|x| x.is_barred()));
    let lu = l_only.iter().filter(|x| x.is_unbarred()).count();
    let ru = r_only.iter().filter(|x| x.is_unbarred()).count();
    if lu < ru {
        return Err(Error::MalformedColumn("not a split pair".into()));
    }
    let zeros = lu - ru;
    let column = if kind.is_b() {
        cells.extend(std::iter::repeat(Letter::ZERO).take(zeros));
        sort_column(kind, &mut cells);
        Column { kind, cells }
    } else {
        if zeros % 2 != 0 {
            return Err(Error::MalformedColumn("odd number of hidden n̄ n factors".into()));
        }
        let (top, bot) = (Letter::unbarred(n), Letter::barred(n));
        let has_top = cells.contains(&top);
        let has_bot = cells.contains(&bot);
        let mut rest: Vec<Letter> = cells.into_iter().filter(|x| x.index() != n).collect();
        sort_column(kind, &mut rest);
        let split_at = rest.iter().position(|x| x.is_barred()).unwrap_or(rest.len());
        let mut mid = Vec::new();
        if has_top {
            mid.push(top);
        }
        for _ in 0..zeros / 2 {
            mid.push(bot);
            mid.push(top);
        }
        if has_bot {
            mid.push(bot);
        }
        let mut out = rest[..split_at].to_vec();
        out.extend(mid);
        out.extend_from_slice(&rest[split_at..]);
        Column { kind, cells: out }
    };
    match split_column(&column) {
        Ok(ref p) if p == pair => Ok(column),
        _ => Err(Error::MalformedColumn(format!(
            "({}) ({}) is not the split of an admissible column",
            format_letters(l),
            format_letters(r)
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn col(kind: LieKind, s: &str) -> Column {
        Column::parse(kind, s).unwrap()
    }

    #[test]
    fn counts_and_admissibility() {
        let b2 = LieKind::b(2);
        assert_eq!(col(b2, "1 2 -2").n_count(Letter::unbarred(2)), 3);
        assert!(!col(b2, "1 2 -2").is_admissible());
        let b4 = LieKind::b(4);
        assert_eq!(col(b4, "4 0 -4 -2").n_count(Letter::unbarred(4)), 3);
        assert!(col(b4, "4 0 -4 -2").is_admissible());
        assert!(col(LieKind::d(4), "3 -4 4 -3").is_admissible());
        assert!(Column::parse(b2, "2 1").is_err());
        assert!(Column::parse(LieKind::d(2), "2 2").is_err());
        assert!(Column::parse(LieKind::d(2), "2 -2 2").is_ok());
    }

    #[test]
    fn hats() {
        let d8 = LieKind::d(8);
        assert_eq!(col(d8, "5 6 -8 8 -8 -6 -5 -2").hat().unwrap().to_string(), "5 6 0 0 -8 -6 -5 -2");
        assert_eq!(col(LieKind::d(2), "-2 2").hat().unwrap().to_string(), "0 0");
    }

    #[test]
    fn worked_splits() {
        let p = col(LieKind::b(9), "4 5 8 9 0 0 -8 -5 -4").split().unwrap();
        assert_eq!(p.l.to_string(), "1 2 3 6 7 9 -8 -5 -4");
        assert_eq!(p.r.to_string(), "4 5 8 9 -7 -6 -3 -2 -1");
        let c = col(LieKind::d(8), "5 6 -8 8 -8 -6 -5 -2");
        let p = c.split().unwrap();
        assert_eq!(p.l.to_string(), "1 3 4 7 -8 -6 -5 -2");
        assert_eq!(p.r.to_string(), "5 6 -8 -7 -4 -3 -2 -1");
        assert_eq!(unsplit(&p).unwrap(), c);
    }

    #[test]
    fn membership() {
        let d3 = LieKind::d(3);
        assert_eq!(column_membership(&col(d3, "1 2 3")).unwrap(), SpinClass::Omega);
        assert_eq!(column_membership(&col(d3, "1 2 -3")).unwrap(), SpinClass::OmegaBar);
        let d2 = LieKind::d(2);
        assert_eq!(column_membership(&col(d2, "-2 2")).unwrap(), SpinClass::Omega);
        assert_eq!(column_membership(&col(d2, "2 -2")).unwrap(), SpinClass::OmegaBar);
    }
}
