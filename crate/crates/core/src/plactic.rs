//! The plactic relations, column and tableau insertion, and the P-symbol.

use std::fmt;

use crate::alphabet::{format_letters, Kind, LieKind, Letter};
use crate::column::{is_column_word, Column};
use crate::error::{Error, Result};
use crate::tableau::Tabloid;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Forward,
    Backward,
}

/// A relation `R1`–`R5` of one type; `variant` distinguishes the displayed forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RelationId {
    pub number: u8,
    pub variant: char,
    pub kind: Kind,
    pub direction: Direction,
}

impl fmt::Display for RelationId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arrow = match self.direction {
            Direction::Forward => "->",
            Direction::Backward => "<-",
        };
        write!(f, "R{}{}^{} {}", self.number, self.variant, self.kind, arrow)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rewrite {
    pub relation: RelationId,
    pub position: usize,
    pub before: Vec<Letter>,
    pub after: Vec<Letter>,
}

impl Rewrite {
    pub fn apply(&self, w: &[Letter]) -> Result<Vec<Letter>> {
        let end = self.position + self.before.len();
        if end > w.len() || w[self.position..end] != self.before[..] {
            return Err(Error::Internal(format!("rewrite {} does not fit the word", self.relation)));
        }
        let mut out = w[..self.position].to_vec();
        out.extend_from_slice(&self.after);
        out.extend_from_slice(&w[end..]);
        Ok(out)
    }
}

impl fmt::Display for Rewrite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} at {}: {} => {}",
            self.relation,
            self.position,
            format_letters(&self.before),
            format_letters(&self.after)
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Slot {
    X,
    Y,
    Z,
    XBar,
    XMinus1,
    XMinus1Bar,
    Zero,
    N,
    NBar,
    NMinus1,
    NMinus1Bar,
}

type Cond = fn(LieKind, Letter, Letter, Letter) -> bool;

struct Template {
    number: u8,
    variant: char,
    lhs: [Slot; 3],
    rhs: [Slot; 3],
    cond: Cond,
}

#[derive(Default)]
struct Binding {
    x: Option<Letter>,
    y: Option<Letter>,
    z: Option<Letter>,
}

fn bind_var(v: &mut Option<Letter>, a: Letter) -> bool {
    match v {
        Some(b) => *b == a,
        None => {
            *v = Some(a);
            true
        }
    }
}

fn bind(kind: LieKind, slots: &[Slot; 3], w: &[Letter]) -> Option<Binding> {
    let n = kind.rank();
    let mut b = Binding::default();
    for (&s, &a) in slots.iter().zip(w) {
        let ok = match s {
            Slot::X => bind_var(&mut b.x, a),
            Slot::Y => bind_var(&mut b.y, a),
            Slot::Z => bind_var(&mut b.z, a),
            Slot::XBar => bind_var(&mut b.x, a.bar()),
            Slot::XMinus1 => a.is_unbarred() && a.index() < n && bind_var(&mut b.x, Letter::unbarred(a.index() + 1)),
            Slot::XMinus1Bar => a.is_barred() && a.index() < n && bind_var(&mut b.x, Letter::unbarred(a.index() + 1)),
            _ => true,
        };
        if !ok {
            return None;
        }
    }
    (instantiate(kind, slots, &b)? == w).then_some(b)
}

fn instantiate(kind: LieKind, slots: &[Slot; 3], b: &Binding) -> Option<Vec<Letter>> {
    let n = kind.rank();
    slots
        .iter()
        .map(|s| {
            Some(match s {
                Slot::X => b.x?,
                Slot::Y => b.y?,
                Slot::Z => b.z?,
                Slot::XBar => b.x?.bar(),
                Slot::XMinus1 | Slot::XMinus1Bar => {
                    let x = b.x?;
                    if !x.is_unbarred() || x.index() < 2 {
                        return None;
                    }
                    let m = Letter::unbarred(x.index() - 1);
                    if *s == Slot::XMinus1 {
                        m
                    } else {
                        m.bar()
                    }
                }
                Slot::Zero => Letter::ZERO,
                Slot::N => Letter::unbarred(n),
                Slot::NBar => Letter::barred(n),
                Slot::NMinus1 => Letter::unbarred(n - 1),
                Slot::NMinus1Bar => Letter::barred(n - 1),
            })
        })
        .collect()
}

fn unbarred_at_most(x: Letter, m: usize) -> bool {
    x.is_unbarred() && x.index() <= m
}

fn templates(kind: Kind) -> Vec<Template> {
    use Slot::*;
    let t = |number, variant, lhs, rhs, cond: Cond| Template { number, variant, lhs, rhs, cond };
    match kind {
        Kind::B => vec![
            t(1, 'a', [Y, Z, X], [Y, X, Z], |k, x, y, z| x != z.bar() && k.lt(x, y) && k.lt(y, z)),
            t(1, 'b', [X, Z, Y], [Z, X, Y], |k, x, y, z| x != z.bar() && k.lt(x, y) && k.lt(y, z)),
            t(2, 'a', [X, Y, X], [X, X, Y], |k, x, y, _| x != y.bar() && k.lt(x, y) && !x.is_zero()),
            t(2, 'b', [X, Y, Y], [Y, X, Y], |k, x, y, _| x != y.bar() && k.lt(x, y) && !y.is_zero()),
            t(3, 'a', [Y, XMinus1Bar, XMinus1], [Y, X, XBar], |k, x, y, _| {
                x.index() >= 2 && unbarred_at_most(x, k.rank()) && k.le(x, y) && k.le(y, x.bar())
            }),
            t(3, 'b', [X, XBar, Y], [XMinus1Bar, XMinus1, Y], |k, x, y, _| {
                x.index() >= 2 && unbarred_at_most(x, k.rank()) && k.le(x, y) && k.le(y, x.bar())
            }),
            t(3, 'c', [Zero, NBar, N], [NBar, N, Zero], |_, _, _, _| true),
            t(4, 'a', [Zero, Zero, X], [Zero, X, Zero], |k, x, _, _| unbarred_at_most(x, k.rank())),
            t(4, 'b', [Zero, XBar, Zero], [XBar, Zero, Zero], |k, x, _, _| unbarred_at_most(x, k.rank())),
        ],
        Kind::D => vec![
            t(1, 'a', [Y, Z, X], [Y, X, Z], |k, x, y, z| x != z.bar() && k.le(x, y) && k.lt(y, z)),
            t(1, 'b', [X, Z, Y], [Z, X, Y], |k, x, y, z| x != z.bar() && k.lt(x, y) && k.le(y, z)),
            t(2, 'a', [Y, XMinus1Bar, XMinus1], [Y, X, XBar], |k, x, y, _| {
                x.index() >= 2 && unbarred_at_most(x, k.rank() - 1) && k.le(x, y) && k.le(y, x.bar())
            }),
            t(2, 'b', [X, XBar, Y], [XMinus1Bar, XMinus1, Y], |k, x, y, _| {
                x.index() >= 2 && unbarred_at_most(x, k.rank() - 1) && k.le(x, y) && k.le(y, x.bar())
            }),
            t(3, 'a', [NBar, XBar, N], [XBar, NBar, N], |k, x, _, _| unbarred_at_most(x, k.rank() - 1)),
            t(3, 'b', [N, XBar, NBar], [XBar, N, NBar], |k, x, _, _| unbarred_at_most(x, k.rank() - 1)),
            t(3, 'c', [NBar, N, X], [NBar, X, N], |k, x, _, _| unbarred_at_most(x, k.rank() - 1)),
            t(3, 'd', [N, NBar, X], [N, X, NBar], |k, x, _, _| unbarred_at_most(x, k.rank() - 1)),
            t(4, 'a', [N, NBar, NBar], [NMinus1Bar, NMinus1, NBar], |_, _, _, _| true),
            t(4, 'b', [NBar, N, N], [NMinus1Bar, NMinus1, N], |_, _, _, _| true),
            t(4, 'c', [NBar, NMinus1Bar, NMinus1], [NBar, NBar, N], |_, _, _, _| true),
            t(4, 'd', [N, NMinus1Bar, NMinus1], [N, N, NBar], |_, _, _, _| true),
        ],
    }
}

/// Instances of `R1`–`R4` rewriting the three letters `w`.
fn local_rewrites(kind: LieKind, w: &[Letter], forward_only: bool) -> Vec<(RelationId, Vec<Letter>)> {
    let mut out = Vec::new();
    for t in templates(kind.kind()) {
        let dirs: &[(Direction, &[Slot; 3], &[Slot; 3])] = if forward_only {
            &[(Direction::Forward, &t.lhs, &t.rhs)]
        } else {
            &[(Direction::Forward, &t.lhs, &t.rhs), (Direction::Backward, &t.rhs, &t.lhs)]
        };
        for &(direction, from, to) in dirs {
            let Some(b) = bind(kind, from, w) else { continue };
            let (x, y, z) = (
                b.x.unwrap_or(Letter::ZERO),
                b.y.unwrap_or(Letter::ZERO),
                b.z.unwrap_or(Letter::ZERO),
            );
            if !(t.cond)(kind, x, y, z) {
                continue;
            }
            let Some(after) = instantiate(kind, to, &b) else { continue };
            if after.iter().all(|&a| kind.contains(a)) {
                let id = RelationId { number: t.number, variant: t.variant, kind: kind.kind(), direction };
                out.push((id, after));
            }
        }
    }
    out
}

fn contraction_id(kind: LieKind, direction: Direction) -> RelationId {
    RelationId { number: 5, variant: ' ', kind: kind.kind(), direction }
}

/// Column words to which the contraction relation applies.
pub fn is_contractible(kind: LieKind, w: &[Letter]) -> bool {
    if w.is_empty() || !is_column_word(kind, w) || column_admissible(kind, w) {
        return false;
    }
    (0..w.len()).all(|i| (i + 1..=w.len()).all(|j| j - i == w.len() || column_admissible(kind, &w[i..j])))
}

fn column_admissible(kind: LieKind, w: &[Letter]) -> bool {
    Column { kind, cells: w.to_vec() }.is_admissible()
}

/// Erase the pair, the letter `0`, or a consecutive `(n, n̄)` singled out by the contraction relation.
pub fn contract_column(kind: LieKind, w: &[Letter]) -> Result<Vec<Letter>> {
    if !is_contractible(kind, w) {
        return Err(Error::NotContractible(format_letters(w)));
    }
    let n = kind.rank();
    let c = Column { kind, cells: w.to_vec() };
    let z = c.pairs().into_iter().filter(|&z| c.n_count(z) > z.index()).min_by_key(|z| z.index());
    let mut out = w.to_vec();
    match (kind.kind(), z) {
        (Kind::B, Some(z)) => out.retain(|&a| a != z && a != z.bar()),
        (Kind::D, Some(z)) if z.index() < n => {
            out.retain(|&a| a != z && a != z.bar());
        }
        (Kind::B, None) => {
            let p = out.iter().position(|a| a.is_zero()).ok_or_else(|| Error::NotContractible(format_letters(w)))?;
            out.remove(p);
        }
        (Kind::D, Some(_)) => {
            let p = out
                .windows(2)
                .position(|p| p[0].index() == n && p[1] == p[0].bar())
                .ok_or_else(|| Error::NotContractible(format_letters(w)))?;
            out.drain(p..p + 2);
        }
        (Kind::D, None) => return Err(Error::NotContractible(format_letters(w))),
    }
    if !is_column_word(kind, &out) || !column_admissible(kind, &out) {
        return Err(Error::Internal(format!("contraction of {} is not admissible", format_letters(w))));
    }
    Ok(out)
}

/// Non-admissible column words contracting to the admissible column word `u`.
pub fn contraction_preimages(kind: LieKind, u: &[Letter]) -> Vec<Vec<Letter>> {
    let n = kind.rank();
    if !is_column_word(kind, u) || !column_admissible(kind, u) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let h = u.len();
    let mut consider = |w: Vec<Letter>| {
        if !out.contains(&w) && is_contractible(kind, &w) && contract_column(kind, &w).ok().as_deref() == Some(u) {
            out.push(w);
        }
    };
    if kind.is_b() && h == n {
        for p in 0..=h {
            let mut w = u.to_vec();
            w.insert(p, Letter::ZERO);
            consider(w);
        }
    }
    for z in 1..=n {
        let (a, b) = (Letter::unbarred(z), Letter::barred(z));
        for p in 0..=h {
            for q in p..=h {
                for (first, second) in [(a, b), (b, a)] {
                    let mut w = u.to_vec();
                    w.insert(q, second);
                    w.insert(p, first);
                    consider(w);
                }
            }
        }
    }
    out
}

/// Every instance of every relation in `w`, both directions.
pub fn match_relations(kind: LieKind, w: &[Letter]) -> Vec<Rewrite> {
    let mut out = Vec::new();
    for p in 0..w.len().saturating_sub(2) {
        for (relation, after) in local_rewrites(kind, &w[p..p + 3], false) {
            out.push(Rewrite { relation, position: p, before: w[p..p + 3].to_vec(), after });
        }
    }
    for i in 0..w.len() {
        for j in i + 1..=w.len() {
            if is_contractible(kind, &w[i..j]) {
                if let Ok(after) = contract_column(kind, &w[i..j]) {
                    out.push(Rewrite {
                        relation: contraction_id(kind, Direction::Forward),
                        position: i,
                        before: w[i..j].to_vec(),
                        after,
                    });
                }
            }
        }
    }
    for i in 0..=w.len() {
        for j in i..=w.len() {
            for before in contraction_preimages(kind, &w[i..j]) {
                out.push(Rewrite {
                    relation: contraction_id(kind, Direction::Backward),
                    position: i,
                    before: w[i..j].to_vec(),
                    after: before,
                });
            }
        }
    }
    out
}

/// Check that `r` is a genuine relation instance in `w` and apply it.
pub fn check_rewrite(kind: LieKind, w: &[Letter], r: &Rewrite) -> Result<Vec<Letter>> {
    let ok = if r.relation.number == 5 {
        match r.relation.direction {
            Direction::Forward => contract_column(kind, &r.before).ok().as_deref() == Some(&r.after[..]),
            Direction::Backward => contract_column(kind, &r.after).ok().as_deref() == Some(&r.before[..]),
        }
    } else {
        r.before.len() == 3
            && local_rewrites(kind, &r.before, false)
                .iter()
                .any(|(id, after)| *id == r.relation && *after == r.after)
    };
    if !ok || r.relation.kind != kind.kind() {
        return Err(Error::Internal(format!("not a relation instance: {r}")));
    }
    r.apply(w)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColumnInsertion {
    Column(Column),
    Bumped { column: Column, letter: Letter },
}

pub fn insert_into_column(x: Letter, c: &Column) -> Result<ColumnInsertion> {
    insert_column_logged(x, c, 0, &mut None)
}

fn insert_column_logged(
    x: Letter,
    c: &Column,
    offset: usize,
    log: &mut Option<&mut Vec<Rewrite>>,
) -> Result<ColumnInsertion> {
    let kind = c.kind;
    kind.check(x)?;
    let mut w = c.cells.clone();
    w.push(x);
    if is_column_word(kind, &w) {
        if column_admissible(kind, &w) {
            return Ok(ColumnInsertion::Column(Column { kind, cells: w }));
        }
        let after = contract_column(kind, &w)?;
        if let Some(log) = log {
            log.push(Rewrite { relation: contraction_id(kind, Direction::Forward), position: offset, before: w, after: after.clone() });
        }
        return Ok(ColumnInsertion::Column(Column { kind, cells: after }));
    }
    let h = c.height();
    for step in 0..h.saturating_sub(1) {
        let start = h - 2 - step;
        let window = &w[start..start + 3];
        let mut found = local_rewrites(kind, window, true);
        found.dedup_by(|a, b| a.1 == b.1);
        match found.len() {
            0 => {
                return Err(Error::InsertionStuck(format!(
                    "no relation applies to {} in {}",
                    format_letters(window),
                    format_letters(&w)
                )))
            }
            1 => {}
            _ => {
                let names: Vec<String> = found.iter().map(|(id, _)| id.to_string()).collect();
                return Err(Error::InsertionAmbiguity(format!(
                    "{} admits {}",
                    format_letters(window),
                    names.join(", ")
                )));
            }
        }
        let (relation, after) = found.pop().expect("one rewrite");
        if let Some(log) = log {
            log.push(Rewrite { relation, position: offset + start, before: window.to_vec(), after: after.clone() });
        }
        w.splice(start..start + 3, after);
    }
    let column = Column { kind, cells: w[1..].to_vec() };
    if !is_column_word(kind, &column.cells) || !column.is_admissible() {
        return Err(Error::Internal(format!("bumping left {} which is not an admissible column", column)));
    }
    Ok(ColumnInsertion::Bumped { column, letter: w[0] })
}

pub fn insert_into_tableau(x: Letter, t: &Tabloid) -> Result<Tabloid> {
    insert_logged(x, t, false, &mut None)
}

fn insert_logged(x: Letter, t: &Tabloid, reinserting: bool, log: &mut Option<&mut Vec<Rewrite>>) -> Result<Tabloid> {
    let kind = t.kind;
    kind.check(x)?;
    let Some(c1) = t.columns.first() else {
        return Ok(Tabloid { kind, columns: vec![Column { kind, cells: vec![x] }] });
    };
    let rest = Tabloid { kind, columns: t.columns[1..].to_vec() };
    let offset = rest.boxes();
    let mut w = c1.cells.clone();
    w.push(x);
    if is_column_word(kind, &w) {
        if column_admissible(kind, &w) {
            let mut columns = t.columns.clone();
            columns[0] = Column { kind, cells: w };
            return Ok(Tabloid { kind, columns });
        }
        if reinserting {
            return Err(Error::Internal("reinsertion caused a new contraction".into()));
        }
        let contracted = contract_column(kind, &w)?;
        if let Some(log) = log {
            log.push(Rewrite {
                relation: contraction_id(kind, Direction::Forward),
                position: offset,
                before: w,
                after: contracted.clone(),
            });
        }
        let mut cur = rest;
        for &y in &contracted {
            cur = insert_logged(y, &cur, true, log)?;
        }
        return Ok(cur);
    }
    match insert_column_logged(x, c1, offset, log)? {
        ColumnInsertion::Bumped { column, letter } => {
            let tail = insert_logged(letter, &rest, reinserting, log)?;
            let mut columns = vec![column];
            columns.extend(tail.columns);
            Ok(Tabloid { kind, columns })
        }
        ColumnInsertion::Column(_) => Err(Error::Internal("bumping produced a single column".into())),
    }
}

pub fn p_symbol(kind: LieKind, w: &[Letter]) -> Result<Tabloid> {
    let mut t = Tabloid::empty(kind);
    for &x in w {
        t = insert_into_tableau(x, &t)?;
    }
    Ok(t)
}

/// A chain of relation instances from a word to the reading of its P-symbol.
#[derive(Clone, Debug)]
pub struct Derivation {
    pub start: Vec<Letter>,
    pub steps: Vec<Rewrite>,
}

impl Derivation {
    /// Replay every step through `check_rewrite` and return the final word.
    pub fn replay(&self, kind: LieKind) -> Result<Vec<Letter>> {
        let mut w = self.start.clone();
        for r in &self.steps {
            w = check_rewrite(kind, &w, r)?;
        }
        Ok(w)
    }
}

pub fn p_symbol_with_derivation(kind: LieKind, w: &[Letter]) -> Result<(Tabloid, Derivation)> {
    let mut t = Tabloid::empty(kind);
    let mut steps = Vec::new();
    for &x in w {
        t = insert_logged(x, &t, false, &mut Some(&mut steps))?;
    }
    Ok((t, Derivation { start: w.to_vec(), steps }))
}

pub fn congruent(kind: LieKind, w1: &[Letter], w2: &[Letter]) -> Result<bool> {
    Ok(p_symbol(kind, w1)? == p_symbol(kind, w2)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::parse_word;

    fn word(kind: LieKind, s: &str) -> Vec<Letter> {
        parse_word(kind, s).unwrap().letters
    }

    #[test]
    fn relation_examples() {
        let b3 = LieKind::b(3);
        let r = match_relations(b3, &word(b3, "2 3 1"));
        assert!(r.iter().any(|r| r.relation.number == 1 && r.after == word(b3, "2 1 3")));
        let b2 = LieKind::b(2);
        let r = match_relations(b2, &word(b2, "1 2 -2"));
        assert!(r.iter().any(|r| r.relation.number == 5 && r.after == word(b2, "1")));
        assert!(match_relations(b2, &word(b2, "1 1")).iter().all(|r| r.relation.direction == Direction::Backward));
        let r = match_relations(b2, &word(b2, "0 -2 2"));
        assert!(r.iter().any(|r| r.after == word(b2, "-2 2 0")));
    }

    #[test]
    fn contractions() {
        let b2 = LieKind::b(2);
        assert_eq!(contract_column(b2, &word(b2, "1 2 -2")).unwrap(), word(b2, "1"));
        assert_eq!(contract_column(b2, &word(b2, "1 2 0")).unwrap(), word(b2, "1 2"));
        let d2 = LieKind::d(2);
        assert_eq!(contract_column(d2, &word(d2, "1 2 -2")).unwrap(), word(d2, "1"));
        assert!(contract_column(b2, &word(b2, "1 2")).is_err());
        assert!(contraction_preimages(b2, &[]).contains(&word(b2, "1 -1")));
    }

    #[test]
    fn column_insertion_chains() {
        let b7 = LieKind::b(7);
        let c = Column::parse(b7, "6 7 0 0 -7 -6").unwrap();
        let mut log = Vec::new();
        let r = insert_column_logged(Letter::unbarred(6), &c, 0, &mut Some(&mut log)).unwrap();
        assert_eq!(
            r,
            ColumnInsertion::Bumped { column: Column::parse(b7, "5 6 7 0 0 -7").unwrap(), letter: Letter::barred(5) }
        );
        let chain: Vec<usize> = log.iter().map(|r| r.position).collect();
        assert_eq!(chain, vec![4, 3, 2, 1, 0]);
        let b3 = LieKind::b(3);
        let r = insert_into_column(Letter::unbarred(2), &Column::parse(b3, "1").unwrap()).unwrap();
        assert_eq!(r, ColumnInsertion::Column(Column::parse(b3, "1 2").unwrap()));
    }

    #[test]
    fn p_symbols() {
        let b2 = LieKind::b(2);
        let p = p_symbol(b2, &word(b2, "1 2 -2")).unwrap();
        assert_eq!(p, Tabloid::parse(b2, &["1"]).unwrap());
        let b7 = LieKind::b(7);
        let t = Tabloid::parse(b7, &["6 7 0 0 -7 -6"]).unwrap();
        let p = insert_into_tableau(Letter::unbarred(6), &t).unwrap();
        assert_eq!(p, Tabloid::parse(b7, &["5 6 7 0 0 -7", "-5"]).unwrap());
        assert!(p_symbol(b2, &[]).unwrap().is_empty());
    }

    #[test]
    fn derivations_replay() {
        for kind in [LieKind::b(2), LieKind::d(2), LieKind::d(3)] {
            for w in crate::enumerate::words(kind, 4) {
                let (p, d) = p_symbol_with_derivation(kind, &w).unwrap();
                assert!(p.is_orthogonal(), "{p:?}");
                assert_eq!(d.replay(kind).unwrap(), p.reading());
            }
        }
    }
}
