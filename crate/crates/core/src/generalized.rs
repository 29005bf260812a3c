//! Generalized words mixing letters and spin columns: the maps `S`, the
//! relations `R6`–`R8`, spin tableaux and the generalized P- and Q-symbols.

use std::fmt;

use crate::alphabet::{Kind, LieKind, Letter, Weight};
use crate::column::{split_column, Column};
use crate::crystal::{follow_path, highest_weight_path, word_weight, Element, GenLetter};
use crate::error::{Error, Result};
use crate::plactic::{check_rewrite, p_symbol_with_derivation, Rewrite};
use crate::spin::SpinColumn;
use crate::tableau::{
    find_a_configurations, highest_weight_tableau, orthogonality_defect, shape_of, Epsilon, Shape, SpinHalf,
    TableauJson, Token, Tabloid,
};

/// `x △ 𝔠`: `x ⋠ z` for `z` the greatest letter of `𝔠`.
pub fn triangle(kind: LieKind, x: Letter, c: SpinColumn) -> bool {
    !kind.le(x, c.greatest())
}

/// Which of `S^B`, `S_n^D`, `S_{n−1}^D`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SpinMap {
    B,
    EvenD,
    OddD,
}

impl SpinMap {
    /// The map whose image contains the pairs with first factor `c`.
    pub fn for_first(kind: LieKind, c: SpinColumn) -> SpinMap {
        match (kind.kind(), c.is_even()) {
            (Kind::B, _) => SpinMap::B,
            (Kind::D, true) => SpinMap::EvenD,
            (Kind::D, false) => SpinMap::OddD,
        }
    }

    /// Highest weight spin column of the first factor.
    pub fn top(self, rank: usize) -> SpinColumn {
        match self {
            SpinMap::OddD => SpinColumn::standard_odd(rank),
            _ => SpinColumn::standard(rank, rank),
        }
    }

    fn check(self, kind: LieKind) -> Result<()> {
        match (self, kind.kind()) {
            (SpinMap::B, Kind::B) | (SpinMap::EvenD | SpinMap::OddD, Kind::D) => Ok(()),
            _ => Err(Error::KindMismatch),
        }
    }
}

impl fmt::Display for SpinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpinMap::B => "S^B",
            SpinMap::EvenD => "S_n^D",
            SpinMap::OddD => "S_n-1^D",
        })
    }
}

/// `r𝔠 ⊗ l𝔠`, read `r𝔠` first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SpinPair {
    pub right: SpinColumn,
    pub left: SpinColumn,
}

impl SpinPair {
    pub fn word(self) -> [GenLetter; 2] {
        [GenLetter::Spin(self.right), GenLetter::Spin(self.left)]
    }
}

impl fmt::Display for SpinPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.right, self.left)
    }
}

fn support(c: &Column) -> u64 {
    c.cells.iter().fold(0u64, |m, x| m | 1 << x.index())
}

fn completed(rank: usize, base: &[Letter], extra: impl Iterator<Item = Letter>) -> Result<SpinColumn> {
    let mut all = base.to_vec();
    all.extend(extra);
    SpinColumn::from_set(rank, &all)
}

/// The image of `w(C)` under `map`, by the closed formulas.
pub fn spin_split(c: &Column, map: SpinMap) -> Result<SpinPair> {
    let kind = c.kind;
    map.check(kind)?;
    let n = kind.rank();
    if !c.is_admissible() {
        return Err(Error::CannotSplit(format!("{c} is not admissible")));
    }
    let halves = split_column(c)?;
    let used = support(&halves.l);
    let free = |skip: u64| (1..=n).filter(move |&i| (used | skip) >> i & 1 == 0);
    let left = completed(n, &halves.l.cells, free(0).map(Letter::barred))?;
    let right = completed(n, &halves.r.cells, free(0).map(Letter::unbarred))?;
    if map == SpinMap::B || right.is_even() == (map == SpinMap::EvenD) {
        return Ok(SpinPair { right, left });
    }
    let t = free(0)
        .last()
        .ok_or_else(|| Error::CannotSplit(format!("{c} lies outside the domain of {map}")))?;
    let skip = 1u64 << t;
    let left = completed(n, &halves.l.cells, std::iter::once(Letter::unbarred(t)).chain(free(skip).map(Letter::barred)))?;
    let right = completed(n, &halves.r.cells, std::iter::once(Letter::barred(t)).chain(free(skip).map(Letter::unbarred)))?;
    Ok(SpinPair { right, left })
}

/// Highest weight column word of doubled weight `wt`, if `wt` is that of a column.
fn column_highest_weight(kind: LieKind, wt: &Weight) -> Option<Vec<Letter>> {
    let n = kind.rank();
    let d = &wt.0;
    let p = d.iter().take_while(|&&x| x == 2).count();
    if d[p..].iter().all(|&x| x == 0) {
        return Some((1..=p).map(Letter::unbarred).collect());
    }
    if kind.is_d() && p == n - 1 && d[n - 1] == -2 {
        let mut w: Vec<Letter> = (1..n).map(Letter::unbarred).collect();
        w.push(Letter::barred(n));
        return Some(w);
    }
    None
}

/// The column `C` with `S(w(C))` equal to the pair, found by transporting the
/// highest weight path of the pair onto a column word.
pub fn spin_unsplit(kind: LieKind, pair: SpinPair) -> Result<(Column, SpinMap)> {
    let map = SpinMap::for_first(kind, pair.right);
    let (hw, colors) = highest_weight_path(kind, &pair.word());
    let source = column_highest_weight(kind, &word_weight(kind, &hw))
        .ok_or_else(|| Error::SpinRelation(format!("{pair} has no column counterpart")))?;
    let w = follow_path(kind, &source, &colors)
        .ok_or_else(|| Error::SpinRelation(format!("path of {pair} leaves the column crystal")))?;
    let c = Column::new(kind, w)?;
    if spin_split(&c, map)? != pair {
        return Err(Error::SpinRelation(format!("{map}({c}) differs from {pair}")));
    }
    Ok((c, map))
}

/// `R6`: `𝔠x ≡ 𝔠′` when `x △ 𝔠`.
pub fn apply_r6(kind: LieKind, c: SpinColumn, x: Letter) -> Result<SpinColumn> {
    if !triangle(kind, x, c) {
        return Err(Error::SpinRelation(format!("R6 needs {x} △ {c}")));
    }
    let mut wt = c.weight(kind);
    wt.add_assign(&x.weight(kind));
    SpinColumn::from_weight(kind.rank(), &wt).ok_or_else(|| Error::SpinRelation(format!("no spin column of weight {c}{x}")))
}

/// `R7`: `𝔠x ≡ x′𝔠′` when not `x △ 𝔠`.
pub fn apply_r7(kind: LieKind, c: SpinColumn, x: Letter) -> Result<(Letter, SpinColumn)> {
    if triangle(kind, x, c) {
        return Err(Error::SpinRelation(format!("R7 needs {x} not △ {c}")));
    }
    let mut candidates: Vec<Letter> = c.letters().into_iter().filter(|&t| kind.le(x, t)).collect();
    if kind.is_b() && x.is_unbarred() {
        candidates.push(Letter::ZERO);
    }
    let x2 = candidates
        .into_iter()
        .min_by_key(|&t| kind.sort_key(t))
        .ok_or_else(|| Error::Internal(format!("no letter of {c} above {x}")))?;
    let mut wt = c.weight(kind);
    wt.add_assign(&x.weight(kind));
    wt.sub_assign(&x2.weight(kind));
    let c2 = SpinColumn::from_weight(kind.rank(), &wt)
        .ok_or_else(|| Error::SpinRelation(format!("no spin column for {c}{x} -> {x2}")))?;
    Ok((x2, c2))
}

/// Parse a generalized word: letters and bracketed spin columns.
pub fn parse_gen_word(kind: LieKind, text: &str) -> Result<Vec<GenLetter>> {
    let mut out = Vec::new();
    let mut rest = text.trim_start();
    while !rest.is_empty() {
        if rest.starts_with('[') {
            let end = rest.find(']').ok_or_else(|| Error::Parse("unclosed spin column".into()))?;
            out.push(GenLetter::Spin(SpinColumn::parse(kind, &rest[..=end])?));
            rest = &rest[end + 1..];
        } else {
            let end = rest.find(|ch: char| ch.is_whitespace() || ch == '[' || ch == ',').unwrap_or(rest.len());
            if end == 0 {
                rest = &rest[1..];
                continue;
            }
            out.push(GenLetter::Letter(kind.check(Letter::parse(&rest[..end])?)?));
            rest = &rest[end..];
        }
        rest = rest.trim_start_matches(|ch: char| ch.is_whitespace() || ch == ',');
    }
    Ok(out)
}

pub fn format_gen_word(w: &[GenLetter]) -> String {
    w.iter().map(|x| x.token()).collect::<Vec<_>>().join(" ")
}

/// `[𝔠, T]`, read `w(T)𝔠`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpinTableau {
    pub spin: SpinColumn,
    pub body: Tabloid,
}

impl SpinTableau {
    pub fn reading(&self) -> Vec<GenLetter> {
        let mut w: Vec<GenLetter> = self.body.reading().into_iter().map(GenLetter::Letter).collect();
        w.push(GenLetter::Spin(self.spin));
        w
    }

    pub fn half(&self) -> SpinHalf {
        if self.body.kind.is_b() || self.spin.is_even() {
            SpinHalf::Even
        } else {
            SpinHalf::Odd
        }
    }

    pub fn shape(&self) -> Result<Shape> {
        let mut s = if self.body.is_empty() { Shape::empty() } else { shape_of(&self.body)? };
        s.spin = Some(self.half());
        Ok(s)
    }

    pub fn is_spin_tableau(&self) -> bool {
        spin_tableau_defect(self).is_none()
    }
}

impl fmt::Display for SpinTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "spin {}", self.spin)?;
        fmt::Display::fmt(&self.body, f)
    }
}

/// Why `[𝔠, T]` fails the row and configuration conditions, if it does.
pub fn spin_tableau_defect(st: &SpinTableau) -> Option<String> {
    let kind = st.body.kind;
    if st.spin.rank() != kind.rank() {
        return Some("spin column rank differs from the body".into());
    }
    if st.body.is_empty() {
        return None;
    }
    if let Some(d) = orthogonality_defect(&st.body) {
        return Some(d);
    }
    let l = match split_column(&st.body.columns[0]) {
        Ok(p) => p.l,
        Err(e) => return Some(e.to_string()),
    };
    let spin = st.spin.letters();
    if let Some(k) = (0..l.height()).find(|&k| !kind.le(spin[k], l.cells[k])) {
        return Some(format!("row {} of the spin column and the first column decreases", k + 1));
    }
    if kind.is_d() {
        let n = kind.rank();
        if find_a_configurations(kind, &spin, &l.cells).iter().any(|c| c.mu == n - c.a) {
            return Some("the spin column and the first column contain a forbidden configuration".into());
        }
        match (st.spin.is_even(), shape_of(&st.body).map(|s| s.epsilon)) {
            (true, Ok(Epsilon::Minus)) | (false, Ok(Epsilon::Plus)) => {
                return Some("the body sign disagrees with the spin column".into())
            }
            _ => {}
        }
    }
    None
}

/// A generalized tableau: orthogonal or spin orthogonal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GenTableau {
    Plain(Tabloid),
    Spin(SpinTableau),
}

impl GenTableau {
    pub fn reading(&self) -> Vec<GenLetter> {
        match self {
            GenTableau::Plain(t) => t.reading().into_iter().map(GenLetter::Letter).collect(),
            GenTableau::Spin(st) => st.reading(),
        }
    }

    pub fn shape(&self) -> Result<Shape> {
        match self {
            GenTableau::Plain(t) if t.is_empty() => Ok(Shape::empty()),
            GenTableau::Plain(t) => shape_of(t),
            GenTableau::Spin(st) => st.shape(),
        }
    }

    pub fn to_json(&self) -> Result<TableauJson> {
        let (body, spin) = match self {
            GenTableau::Plain(t) => (t, None),
            GenTableau::Spin(st) => (&st.body, Some(st.spin)),
        };
        let epsilon = if body.is_empty() { None } else { Some(shape_of(body)?.epsilon).filter(|&e| e != Epsilon::Zero) };
        let mut j = body.to_json(epsilon);
        j.spin = spin.map(|c| c.letters().iter().map(|x| Token::Text(x.to_string())).collect());
        Ok(j)
    }

    pub fn from_json(j: &TableauJson) -> Result<GenTableau> {
        let body = j.tabloid()?;
        Ok(match j.spin_column()? {
            None => GenTableau::Plain(body),
            Some(spin) => GenTableau::Spin(SpinTableau { spin, body }),
        })
    }
}

impl fmt::Display for GenTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenTableau::Plain(t) => fmt::Display::fmt(t, f),
            GenTableau::Spin(st) => fmt::Display::fmt(st, f),
        }
    }
}

/// Membership of `w(T)𝔠` in the crystal of its shape, decided on the crystal graph.
pub fn is_spin_tableau_by_crystal(st: &SpinTableau) -> bool {
    let kind = st.body.kind;
    let w = st.reading();
    let (hw, _) = highest_weight_path(kind, &w);
    let Ok(shape) = Shape::from_highest_weight(kind, &word_weight(kind, &hw)) else {
        return false;
    };
    if shape.column_heights != st.body.heights() {
        return false;
    }
    let Ok(t) = highest_weight_tableau(kind, &Shape { spin: None, ..shape.clone() }) else {
        return false;
    };
    let top = if shape.spin == Some(SpinHalf::Odd) { SpinMap::OddD } else { SpinMap::EvenD }.top(kind.rank());
    hw == (SpinTableau { spin: top, body: t }).reading()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GenRule {
    Plactic(crate::plactic::RelationId),
    R6,
    R7,
    /// `S(w(C)) ≡ w(C)`; `to_column` when read from the spin pair to `w(C)`.
    R8 { map: SpinMap, to_column: bool },
}

impl fmt::Display for GenRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenRule::Plactic(r) => write!(f, "{r}"),
            GenRule::R6 => f.write_str("R6"),
            GenRule::R7 => f.write_str("R7"),
            GenRule::R8 { map, to_column: true } => write!(f, "R8 {map} ->"),
            GenRule::R8 { map, to_column: false } => write!(f, "R8 {map} <-"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenStep {
    pub rule: GenRule,
    pub position: usize,
    pub before: Vec<GenLetter>,
    pub after: Vec<GenLetter>,
}

impl fmt::Display for GenStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {}: {} => {}", self.rule, self.position, format_gen_word(&self.before), format_gen_word(&self.after))
    }
}

fn letters_of(w: &[GenLetter]) -> Option<Vec<Letter>> {
    w.iter().map(|x| x.as_letter()).collect()
}

fn spin_side(map: SpinMap, column_side: &[GenLetter], spin_side: &[GenLetter], kind: LieKind) -> Result<()> {
    let cells = letters_of(column_side).ok_or_else(|| Error::SpinRelation("R8 column side holds a spin column".into()))?;
    let c = Column::new(kind, cells)?;
    let pair = spin_split(&c, map)?;
    if spin_side != pair.word() {
        return Err(Error::SpinRelation(format!("{map}({c}) is {pair}")));
    }
    Ok(())
}

/// Check that `step` is an instance of its relation and apply it.
pub fn check_gen_step(kind: LieKind, w: &[GenLetter], step: &GenStep) -> Result<Vec<GenLetter>> {
    let end = step.position + step.before.len();
    if end > w.len() || w[step.position..end] != step.before[..] {
        return Err(Error::SpinRelation(format!("step {step} does not fit the word")));
    }
    match step.rule {
        GenRule::Plactic(relation) => {
            let (b, a) = letters_of(&step.before)
                .zip(letters_of(&step.after))
                .ok_or_else(|| Error::SpinRelation("plactic step on a spin column".into()))?;
            let r = Rewrite { relation, position: 0, before: b.clone(), after: a };
            check_rewrite(kind, &b, &r)?;
        }
        GenRule::R6 => match (step.before.as_slice(), step.after.as_slice()) {
            ([GenLetter::Spin(c), GenLetter::Letter(x)], [GenLetter::Spin(c2)]) if apply_r6(kind, *c, *x)? == *c2 => {}
            _ => return Err(Error::SpinRelation(format!("{step} is not an R6 instance"))),
        },
        GenRule::R7 => match (step.before.as_slice(), step.after.as_slice()) {
            ([GenLetter::Spin(c), GenLetter::Letter(x)], [GenLetter::Letter(x2), GenLetter::Spin(c2)])
                if apply_r7(kind, *c, *x)? == (*x2, *c2) => {}
            _ => return Err(Error::SpinRelation(format!("{step} is not an R7 instance"))),
        },
        GenRule::R8 { map, to_column } => {
            if to_column {
                spin_side(map, &step.after, &step.before, kind)?;
            } else {
                spin_side(map, &step.before, &step.after, kind)?;
            }
        }
    }
    let mut out = w[..step.position].to_vec();
    out.extend_from_slice(&step.after);
    out.extend_from_slice(&w[end..]);
    Ok(out)
}

/// A chain of relation instances from a generalized word to the reading of its P-symbol.
#[derive(Clone, Debug)]
pub struct GenDerivation {
    pub start: Vec<GenLetter>,
    pub steps: Vec<GenStep>,
}

impl GenDerivation {
    pub fn replay(&self, kind: LieKind) -> Result<Vec<GenLetter>> {
        let mut w = self.start.clone();
        for s in &self.steps {
            w = check_gen_step(kind, &w, s)?;
        }
        Ok(w)
    }
}

struct Normalizer {
    kind: LieKind,
    word: Vec<GenLetter>,
    steps: Vec<GenStep>,
}

impl Normalizer {
    fn rewrite(&mut self, rule: GenRule, position: usize, len: usize, after: Vec<GenLetter>) {
        let before: Vec<GenLetter> = self.word.splice(position..position + len, after.iter().copied()).collect();
        self.steps.push(GenStep { rule, position, before, after });
    }

    /// Move letters left past spin columns until none follows a spin column.
    fn migrate(&mut self) -> Result<()> {
        let kind = self.kind;
        while let Some(i) = self
            .word
            .windows(2)
            .position(|p| matches!(p, [GenLetter::Spin(_), GenLetter::Letter(_)]))
        {
            let (GenLetter::Spin(c), GenLetter::Letter(x)) = (self.word[i], self.word[i + 1]) else {
                unreachable!()
            };
            if triangle(kind, x, c) {
                let c2 = apply_r6(kind, c, x)?;
                self.rewrite(GenRule::R6, i, 2, vec![GenLetter::Spin(c2)]);
            } else {
                let (x2, c2) = apply_r7(kind, c, x)?;
                self.rewrite(GenRule::R7, i, 2, vec![GenLetter::Letter(x2), GenLetter::Spin(c2)]);
            }
        }
        Ok(())
    }

    /// Replace the spin pair at `i` by a column word.
    fn collapse(&mut self, i: usize) -> Result<()> {
        let (Some(right), Some(left)) = (self.word[i].as_spin(), self.word[i + 1].as_spin()) else {
            return Err(Error::Internal("collapse outside a spin pair".into()));
        };
        let (c, map) = spin_unsplit(self.kind, SpinPair { right, left })?;
        let after = c.cells.iter().copied().map(GenLetter::Letter).collect();
        self.rewrite(GenRule::R8 { map, to_column: true }, i, 2, after);
        Ok(())
    }

    /// Insert the letter prefix of length `len`.
    fn insert_prefix(&mut self, len: usize) -> Result<Tabloid> {
        let u = letters_of(&self.word[..len]).ok_or_else(|| Error::Internal("prefix holds a spin column".into()))?;
        let (t, d) = p_symbol_with_derivation(self.kind, &u)?;
        for r in d.steps {
            let as_gen = |w: &[Letter]| w.iter().copied().map(GenLetter::Letter).collect::<Vec<_>>();
            self.rewrite(GenRule::Plactic(r.relation), r.position, r.before.len(), as_gen(&r.after));
        }
        Ok(t)
    }

    fn spins(&self) -> usize {
        self.word.iter().filter(|x| x.as_spin().is_some()).count()
    }
}

/// `𝔓(w)` together with a derivation `w ≡ w(𝔓(w))`.
pub fn generalized_p_symbol_with_derivation(kind: LieKind, w: &[GenLetter]) -> Result<(GenTableau, GenDerivation)> {
    for x in w {
        match x {
            GenLetter::Letter(x) => {
                kind.check(*x)?;
            }
            GenLetter::Spin(c) if c.rank() != kind.rank() => {
                return Err(Error::KindMismatch);
            }
            GenLetter::Spin(_) => {}
        }
    }
    let mut nz = Normalizer { kind, word: w.to_vec(), steps: Vec::new() };
    nz.migrate()?;
    while nz.spins() >= 2 {
        let i = nz.word.len() - 2;
        nz.collapse(i)?;
        nz.migrate()?;
    }
    let tableau = if nz.spins() == 0 {
        GenTableau::Plain(nz.insert_prefix(nz.word.len())?)
    } else {
        let len = nz.word.len() - 1;
        let t = nz.insert_prefix(len)?;
        GenTableau::Spin(spin_tableau_of(&mut nz, t)?)
    };
    debug_assert_eq!(nz.word, tableau.reading());
    Ok((tableau, GenDerivation { start: w.to_vec(), steps: nz.steps }))
}

/// Turn `w(T)𝔠` into the reading of a spin tableau: split the first column of
/// `T`, pair its left half with `𝔠`, and push the resulting letters back into `T`.
fn spin_tableau_of(nz: &mut Normalizer, t: Tabloid) -> Result<SpinTableau> {
    let kind = nz.kind;
    let spin = nz.word.last().and_then(|x| x.as_spin()).ok_or_else(|| Error::Internal("missing spin column".into()))?;
    if t.is_empty() {
        return Ok(SpinTableau { spin, body: t });
    }
    let first = t.columns[0].clone();
    let rest = Tabloid { kind, columns: t.columns[1..].to_vec() };
    let map = match kind.kind() {
        Kind::B => SpinMap::B,
        Kind::D if shape_of(&t)?.epsilon == Epsilon::Minus => SpinMap::OddD,
        Kind::D => SpinMap::EvenD,
    };
    let at = rest.boxes();
    let pair = spin_split(&first, map)?;
    nz.rewrite(GenRule::R8 { map, to_column: false }, at, first.height(), pair.word().to_vec());
    nz.collapse(at + 1)?;
    nz.migrate()?;
    let len = nz.word.len() - 1;
    let body = nz.insert_prefix(len)?;
    let spin = nz.word[len].as_spin().ok_or_else(|| Error::Internal("missing spin column".into()))?;
    let st = SpinTableau { spin, body };
    if let Some(d) = spin_tableau_defect(&st) {
        return Err(Error::NotSpinTableau(format!("normal form is not a spin tableau: {d}")));
    }
    Ok(st)
}

pub fn generalized_p_symbol(kind: LieKind, w: &[GenLetter]) -> Result<GenTableau> {
    Ok(generalized_p_symbol_with_derivation(kind, w)?.0)
}

/// Shapes of the P-symbols of the prefixes of `w`.
pub fn generalized_q_symbol(kind: LieKind, w: &[GenLetter]) -> Result<Vec<Shape>> {
    let mut cur: Vec<GenLetter> = Vec::new();
    let mut out = Vec::with_capacity(w.len());
    for &x in w {
        cur.push(x);
        let p = generalized_p_symbol(kind, &cur)?;
        out.push(p.shape()?);
        cur = p.reading();
    }
    Ok(out)
}

pub fn generalized_congruent(kind: LieKind, w1: &[GenLetter], w2: &[GenLetter]) -> Result<bool> {
    Ok(generalized_p_symbol(kind, w1)? == generalized_p_symbol(kind, w2)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::same_place_equivalent;
    use crate::enumerate::gen_words;

    fn col(kind: LieKind, s: &str) -> Column {
        Column::parse(kind, s).unwrap()
    }

    fn spin(kind: LieKind, s: &str) -> SpinColumn {
        SpinColumn::parse(kind, s).unwrap()
    }

    #[test]
    fn triangle_examples() {
        let b2 = LieKind::b(2);
        assert!(triangle(b2, Letter::barred(1), spin(b2, "[1 -2]")));
        assert!(!triangle(b2, Letter::unbarred(1), spin(b2, "[1 -2]")));
        let d2 = LieKind::d(2);
        assert!(triangle(d2, Letter::barred(2), spin(d2, "[1 2]")));
    }

    #[test]
    fn rank_seven_example() {
        let d7 = LieKind::d(7);
        let c = col(d7, "6 7 -7 7 -6");
        let even = spin_split(&c, SpinMap::EvenD).unwrap();
        assert_eq!(even.right, spin(d7, "[1 6 7 -5 -4 -3 -2]"));
        assert_eq!(even.left, spin(d7, "[2 3 4 5 7 -6 -1]"));
        let odd = spin_split(&c, SpinMap::OddD).unwrap();
        assert_eq!(odd.right, spin(d7, "[1 2 6 7 -5 -4 -3]"));
        assert_eq!(odd.left, spin(d7, "[3 4 5 7 -6 -2 -1]"));
    }

    #[test]
    fn standard_columns() {
        for kind in [LieKind::b(3), LieKind::d(3)] {
            let map = if kind.is_b() { SpinMap::B } else { SpinMap::EvenD };
            for p in 1..=3 {
                let c = Column::generator(kind, p, false);
                let pair = spin_split(&c, map).unwrap();
                assert_eq!(pair, SpinPair { right: SpinColumn::standard(3, 3), left: SpinColumn::standard(3, p) });
                assert_eq!(spin_unsplit(kind, pair).unwrap().0, c);
            }
        }
    }

    #[test]
    fn r6_r7_examples() {
        let b2 = LieKind::b(2);
        assert_eq!(apply_r6(b2, spin(b2, "[1 -2]"), Letter::barred(1)).unwrap(), spin(b2, "[-2 -1]"));
        let c = spin(b2, "[1 -2]");
        assert_eq!(apply_r7(b2, c, Letter::unbarred(1)).unwrap(), (Letter::unbarred(1), c));
    }

    #[test]
    fn exhaustive_rank_two() {
        for kind in [LieKind::b(2), LieKind::d(2)] {
            for l in 0..=3 {
                for w in gen_words(kind, l) {
                    let (p, d) = generalized_p_symbol_with_derivation(kind, &w).unwrap();
                    assert_eq!(d.replay(kind).unwrap(), p.reading(), "{}", format_gen_word(&w));
                    assert!(same_place_equivalent(kind, &w, &p.reading()), "{}", format_gen_word(&w));
                    if let GenTableau::Spin(st) = &p {
                        assert!(is_spin_tableau_by_crystal(st), "{st}");
                    }
                }
            }
        }
    }
}
