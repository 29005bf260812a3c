//! Skew orthogonal tableaux of type B and jeu de taquin on their split forms.
//!
//! Split forms live on the alphabet `1 ≺ ⋯ ≺ n ≺ n̄ ≺ ⋯ ≺ 1̄`, where slides follow the
//! symplectic rules: a horizontal move that would leave a non-admissible column
//! either shifts the offending pair `(z, z̄)` up to the next free `(t, t̄)` or
//! contracts it. Every horizontal move is checked to keep the reading at the same
//! place of the type C crystal.

use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::alphabet::{LieKind, Letter, Weight};
use crate::column::{split_column, unsplit, Column, SplitPair};
use crate::crystal::{letter_e, letter_f, place_key, Element};
use crate::enumerate::admissible_columns;
use crate::error::{Error, Result};
use crate::plactic::p_symbol;
use crate::tableau::{Tabloid, Token};

/// A letter of the type C crystal of rank `n`, with `f̃_n : n ↦ n̄`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct CLetter(Letter);

impl Element for CLetter {
    fn f(self, kind: LieKind, i: usize) -> Option<Self> {
        let n = kind.rank();
        if i < n {
            letter_f(kind, i, self.0).map(CLetter)
        } else {
            (self.0 == Letter::unbarred(n)).then(|| CLetter(Letter::barred(n)))
        }
    }

    fn e(self, kind: LieKind, i: usize) -> Option<Self> {
        let n = kind.rank();
        if i < n {
            letter_e(kind, i, self.0).map(CLetter)
        } else {
            (self.0 == Letter::barred(n)).then(|| CLetter(Letter::unbarred(n)))
        }
    }

    fn eps(self, kind: LieKind, i: usize) -> u32 {
        self.e(kind, i).is_some() as u32
    }

    fn phi(self, kind: LieKind, i: usize) -> u32 {
        self.f(kind, i).is_some() as u32
    }

    fn weight(self, kind: LieKind) -> Weight {
        Weight::of_letter(kind.rank(), self.0)
    }

    fn token(self) -> String {
        self.0.to_string()
    }
}

fn c_key(kind: LieKind, w: &[Letter]) -> (Vec<usize>, Weight) {
    let cw: Vec<CLetter> = w.iter().map(|&x| CLetter(x)).collect();
    place_key(kind, &cw)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewColumn {
    /// Number of inner cells above the first letter.
    pub offset: usize,
    pub cells: Vec<Letter>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewTableau {
    pub kind: LieKind,
    pub columns: Vec<SkewColumn>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkewJson {
    #[serde(rename = "type")]
    pub kind: String,
    pub rank: usize,
    pub columns: Vec<Vec<Token>>,
    pub inner: Vec<usize>,
}

impl SkewTableau {
    pub fn new(kind: LieKind, columns: Vec<SkewColumn>) -> Result<SkewTableau> {
        if !kind.is_b() {
            return Err(Error::InvalidSkew("jeu de taquin is defined for type B".into()));
        }
        for c in &columns {
            if c.cells.is_empty() {
                return Err(Error::InvalidSkew("empty column".into()));
            }
            for &x in &c.cells {
                kind.check(x)?;
            }
        }
        for p in columns.windows(2) {
            if p[0].offset < p[1].offset || p[0].offset + p[0].cells.len() < p[1].offset + p[1].cells.len() {
                return Err(Error::InvalidSkew("not a skew shape".into()));
            }
        }
        Ok(SkewTableau { kind, columns })
    }

    /// Columns as `(offset, text)`, left to right.
    pub fn parse(kind: LieKind, columns: &[(usize, &str)]) -> Result<SkewTableau> {
        let cols = columns
            .iter()
            .map(|&(offset, text)| Ok(SkewColumn { offset, cells: Column::parse(kind, text)?.cells }))
            .collect::<Result<Vec<_>>>()?;
        SkewTableau::new(kind, cols)
    }

    pub fn from_tabloid(t: &Tabloid) -> Result<SkewTableau> {
        SkewTableau::new(t.kind, t.columns.iter().map(|c| SkewColumn { offset: 0, cells: c.cells.clone() }).collect())
    }

    pub fn from_json(j: &SkewJson) -> Result<SkewTableau> {
        let kind = LieKind::new(j.kind.parse()?, j.rank)?;
        if j.inner.len() != j.columns.len() {
            return Err(Error::InvalidSkew("one inner offset per column".into()));
        }
        let cols = j
            .columns
            .iter()
            .zip(&j.inner)
            .map(|(c, &offset)| {
                let cells = c.iter().map(|t| match t {
                    Token::Text(s) => Letter::parse(s),
                    Token::Int(v) => Letter::parse(&v.to_string()),
                });
                Ok(SkewColumn { offset, cells: cells.collect::<Result<Vec<_>>>()? })
            })
            .collect::<Result<Vec<_>>>()?;
        SkewTableau::new(kind, cols)
    }

    pub fn to_json(&self) -> SkewJson {
        SkewJson {
            kind: self.kind.kind().to_string(),
            rank: self.kind.rank(),
            columns: self
                .columns
                .iter()
                .map(|c| c.cells.iter().map(|x| Token::Text(x.to_string())).collect())
                .collect(),
            inner: self.columns.iter().map(|c| c.offset).collect(),
        }
    }

    pub fn boxes(&self) -> usize {
        self.columns.iter().map(|c| c.cells.len()).sum()
    }

    /// Columns from right to left, each read top to bottom.
    pub fn reading(&self) -> Vec<Letter> {
        self.columns.iter().rev().flat_map(|c| c.cells.iter().copied()).collect()
    }

    pub fn is_skew_orthogonal(&self) -> bool {
        self.split_grid().map(|g| g.is_valid()).unwrap_or(false)
    }

    /// The split form as a grid, `lC` then `rC` for each column.
    pub fn split_grid(&self) -> Result<Grid> {
        let mut cols = Vec::with_capacity(2 * self.columns.len());
        for c in &self.columns {
            let col = Column { kind: self.kind, cells: c.cells.clone() };
            if !col.is_admissible() {
                return Err(Error::InvalidSkew(format!("column {col} is not admissible")));
            }
            let SplitPair { l, r } = split_column(&col)?;
            for half in [l, r] {
                cols.push(GridColumn { offset: c.offset, cells: half.cells.into_iter().map(Cell::Letter).collect() });
            }
        }
        Ok(Grid { kind: self.kind, cols })
    }

    /// Inner corners as column indices, topmost first, then leftmost.
    pub fn inner_corners(&self) -> Vec<usize> {
        inner_corners_of(&self.columns.iter().map(|c| c.offset).collect::<Vec<_>>())
    }
}

fn inner_corners_of(offsets: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = (0..offsets.len())
        .filter(|&j| offsets[j] > 0 && (j + 1 == offsets.len() || offsets[j + 1] < offsets[j]))
        .collect();
    out.sort_by_key(|&j| (offsets[j], j));
    out
}

impl fmt::Display for SkewTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols: Vec<(usize, Vec<Letter>)> = self.columns.iter().map(|c| (c.offset, c.cells.clone())).collect();
        f.write_str(&crate::tableau::render_grid(&cols))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Cell {
    Letter(Letter),
    /// The moving puncture.
    Hole,
    /// A puncture that has reached the outer boundary.
    Spent,
}

impl Cell {
    fn letter(self) -> Option<Letter> {
        match self {
            Cell::Letter(x) => Some(x),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GridColumn {
    pub offset: usize,
    pub cells: Vec<Cell>,
}

impl GridColumn {
    fn get(&self, row: usize) -> Option<Cell> {
        row.checked_sub(self.offset).and_then(|k| self.cells.get(k).copied())
    }

    fn set(&mut self, row: usize, cell: Cell) {
        let k = row - self.offset;
        self.cells[k] = cell;
    }

    fn letters(&self) -> Vec<Letter> {
        self.cells.iter().filter_map(|c| c.letter()).collect()
    }
}

/// A punctured split form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Grid {
    pub kind: LieKind,
    pub cols: Vec<GridColumn>,
}

impl Grid {
    pub fn reading(&self) -> Vec<Letter> {
        self.cols.iter().rev().flat_map(|c| c.letters()).collect()
    }

    fn cell(&self, row: usize, col: usize) -> Option<Cell> {
        self.cols.get(col).and_then(|c| c.get(row))
    }

    /// Rows of text, `*` for punctures and `.` for inner cells.
    pub fn render(&self) -> Vec<String> {
        let depth = self.cols.iter().map(|c| c.offset + c.cells.len()).max().unwrap_or(0);
        let text = |c: Option<Cell>, row: usize, col: usize| -> String {
            match c {
                Some(Cell::Letter(x)) => x.to_string(),
                Some(_) => "*".into(),
                None if row < self.cols[col].offset => ".".into(),
                None => String::new(),
            }
        };
        let width = self
            .cols
            .iter()
            .flat_map(|c| c.cells.iter().map(|x| x.letter().map_or(1, |l| l.to_string().len())))
            .max()
            .unwrap_or(1);
        (0..depth)
            .map(|row| {
                let cells: Vec<String> = (0..self.cols.len())
                    .map(|col| format!("{:>width$}", text(self.cell(row, col), row, col)))
                    .collect();
                cells.join(" ").trim_end().to_string()
            })
            .collect()
    }
}

impl fmt::Display for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in self.render() {
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

fn c_admissible(kind: LieKind, letters: &[Letter]) -> bool {
    !letters.iter().any(|x| x.is_zero())
        && letters.windows(2).all(|p| kind.lt(p[0], p[1]))
        && Column { kind, cells: letters.to_vec() }.is_admissible()
}

fn sorted(kind: LieKind, mut v: Vec<Letter>) -> Vec<Letter> {
    v.sort_by_key(|&x| kind.sort_key(x));
    v
}

/// Lowest `z` with `(z, z̄)` in the column and `N(z) > z`.
fn offending_pair(kind: LieKind, letters: &[Letter]) -> Option<Letter> {
    let c = Column { kind, cells: letters.to_vec() };
    c.pairs().into_iter().filter(|&z| c.n_count(z) > z.index()).min_by_key(|z| z.index())
}

fn pair_shift(kind: LieKind, letters: &[Letter]) -> Option<Vec<Letter>> {
    let z = offending_pair(kind, letters)?;
    let t = (z.index() + 1..=kind.rank())
        .map(Letter::unbarred)
        .find(|&t| !letters.contains(&t) && !letters.contains(&t.bar()))?;
    let mut v: Vec<Letter> = letters.iter().copied().filter(|&a| a != z && a != z.bar()).collect();
    v.push(t);
    v.push(t.bar());
    let v = sorted(kind, v);
    c_admissible(kind, &v).then_some(v)
}

fn contraction(kind: LieKind, letters: &[Letter]) -> Option<Vec<Letter>> {
    let z = offending_pair(kind, letters)?;
    let v: Vec<Letter> = letters.iter().copied().filter(|&a| a != z && a != z.bar()).collect();
    c_admissible(kind, &v).then_some(v)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MoveKind {
    Vertical,
    Horizontal,
    PairShift,
    Contraction,
    /// Found by searching all fillings of the two columns involved.
    Search,
}

/// Move counts of one rectification.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SlideStats {
    pub vertical: usize,
    pub horizontal: usize,
    pub pair_shift: usize,
    pub contraction: usize,
    pub search: usize,
    /// Searches that found more than one admissible outcome.
    pub ambiguous: usize,
}

impl SlideStats {
    fn record(&mut self, mv: MoveKind) {
        match mv {
            MoveKind::Vertical => self.vertical += 1,
            MoveKind::Horizontal => self.horizontal += 1,
            MoveKind::PairShift => self.pair_shift += 1,
            MoveKind::Contraction => self.contraction += 1,
            MoveKind::Search => self.search += 1,
        }
    }

    fn merge(&mut self, o: &SlideStats) {
        self.vertical += o.vertical;
        self.horizontal += o.horizontal;
        self.pair_shift += o.pair_shift;
        self.contraction += o.contraction;
        self.search += o.search;
        self.ambiguous += o.ambiguous;
    }

    pub fn non_classical(&self) -> usize {
        self.pair_shift + self.contraction + self.search
    }
}

impl Grid {
    fn letter_rows(&self, col: usize) -> Vec<(usize, Letter)> {
        let c = &self.cols[col];
        c.cells.iter().enumerate().filter_map(|(k, x)| x.letter().map(|l| (c.offset + k, l))).collect()
    }

    /// Columns `from..=to` are type C admissible and the rows of their split forms
    /// weakly increase.
    fn locally_valid(&self, from: usize, to: usize) -> bool {
        let kind = self.kind;
        if self.cols.is_empty() {
            return true;
        }
        let to = to.min(self.cols.len() - 1);
        let mut halves: Vec<(Vec<(usize, Letter)>, Vec<(usize, Letter)>)> = Vec::new();
        for k in from..=to {
            let rows = self.letter_rows(k);
            let letters: Vec<Letter> = rows.iter().map(|r| r.1).collect();
            if !c_admissible(kind, &letters) {
                return false;
            }
            let Ok(SplitPair { l, r }) = split_column(&Column { kind, cells: letters }) else {
                return false;
            };
            let at = |half: Vec<Letter>| rows.iter().map(|r| r.0).zip(half).collect::<Vec<_>>();
            halves.push((at(l.cells), at(r.cells)));
        }
        halves.windows(2).all(|w| {
            w[0].1.iter().all(|&(row, x)| w[1].0.iter().find(|p| p.0 == row).map_or(true, |&(_, y)| kind.le(x, y)))
        })
    }

    /// The grid is a skew tableau of type C.
    pub fn is_valid(&self) -> bool {
        self.locally_valid(0, self.cols.len().saturating_sub(1))
    }

    fn two_column_key(&self, col: usize) -> (Vec<usize>, Weight) {
        let mut w: Vec<Letter> = Vec::new();
        if col + 1 < self.cols.len() {
            w.extend(self.cols[col + 1].letters());
        }
        w.extend(self.cols[col].letters());
        c_key(self.kind, &w)
    }

    fn pair_structured(&self) -> bool {
        self.cols.len() % 2 == 0
            && self.cols.chunks(2).all(|p| p[0].offset == p[1].offset && p[0].cells.len() == p[1].cells.len())
    }
}

type Outcome = (MoveKind, Grid, (usize, usize), Vec<(usize, usize)>);

/// Upper bound on the fillings tried by one search.
const SEARCH_LIMIT: usize = 1_000_000;

struct Slider<'a> {
    grid: Grid,
    trace: Option<&'a mut Vec<Grid>>,
    stats: SlideStats,
    catalog: Vec<Option<Vec<(Vec<Letter>, Weight)>>>,
}

impl<'a> Slider<'a> {
    fn new(grid: Grid, trace: Option<&'a mut Vec<Grid>>) -> Self {
        let n = grid.kind.rank();
        Slider { grid, trace, stats: SlideStats::default(), catalog: vec![None; n + 1] }
    }

    fn emit(&mut self) {
        if let Some(t) = self.trace.as_deref_mut() {
            t.push(self.grid.clone());
        }
    }

    /// Slide the hole at `(row, col)` to the outer boundary, then any holes left
    /// behind by contractions on the way.
    fn slide(&mut self, row: usize, col: usize) -> Result<()> {
        let mut pending = vec![(row, col)];
        while let Some((row, col)) = pending.pop() {
            let mut extra = self.slide_one(row, col)?;
            extra.reverse();
            pending.extend(extra);
        }
        Ok(())
    }

    fn slide_one(&mut self, mut row: usize, mut col: usize) -> Result<Vec<(usize, usize)>> {
        let mut left_behind = Vec::new();
        loop {
            let below = self.grid.cell(row + 1, col).and_then(Cell::letter);
            let right = self.grid.cell(row, col + 1).and_then(Cell::letter);
            if below.is_none() && right.is_none() {
                self.grid.cols[col].set(row, Cell::Spent);
                return Ok(left_behind);
            }
            let (mv, g, next, extra) = self.step(row, col, below, right)?;
            self.grid = g;
            self.stats.record(mv);
            left_behind.extend(extra);
            let horizontal = next.1 != col;
            (row, col) = next;
            if horizontal {
                self.emit();
            }
        }
    }

    fn step(&mut self, row: usize, col: usize, below: Option<Letter>, right: Option<Letter>) -> Result<Outcome> {
        let kind = self.grid.kind;
        let before = self.grid.two_column_key(col);
        let accept = |g: &Grid| g.locally_valid(col.saturating_sub(1), col + 2) && g.two_column_key(col) == before;

        let vertical = |a: Letter| -> Outcome {
            let mut g = self.grid.clone();
            g.cols[col].set(row, Cell::Letter(a));
            g.cols[col].set(row + 1, Cell::Hole);
            (MoveKind::Vertical, g, (row + 1, col), Vec::new())
        };
        let mut candidates: Vec<Outcome> = Vec::new();
        if let Some(a) = below {
            if right.map_or(true, |b| kind.le(a, b)) {
                candidates.push(vertical(a));
            }
        }
        if let Some(b) = right {
            candidates.extend(self.horizontal_candidates(row, col, b));
            if let Some(a) = below.filter(|&a| kind.lt(b, a)) {
                candidates.push(vertical(a));
            }
        }
        if let Some(found) = candidates.into_iter().find(|c| accept(&c.1)) {
            return Ok(found);
        }
        self.search(row, col, below.is_some(), right.is_some(), &before)
    }

    fn horizontal_candidates(&self, row: usize, col: usize, b: Letter) -> Vec<Outcome> {
        let kind = self.grid.kind;
        let next = (row, col + 1);
        let left = &self.grid.cols[col];
        let mut merged: Vec<Letter> = left.letters();
        merged.push(b);
        let merged = sorted(kind, merged);
        let filled_rows: Vec<usize> = (0..left.cells.len())
            .filter(|&k| left.cells[k] != Cell::Spent && (left.cells[k] != Cell::Hole || left.offset + k == row))
            .map(|k| left.offset + k)
            .collect();

        let mut base = self.grid.clone();
        base.cols[col + 1].set(row, Cell::Hole);
        let fill = |v: &[Letter], holes: &[usize]| -> Grid {
            let mut g = base.clone();
            let mut letters = v.iter();
            for (k, &r) in filled_rows.iter().enumerate() {
                if holes.contains(&k) {
                    g.cols[col].set(r, Cell::Hole);
                } else if let Some(&x) = letters.next() {
                    g.cols[col].set(r, Cell::Letter(x));
                }
            }
            g
        };

        let mut out: Vec<Outcome> = Vec::new();
        let mut classical = base.clone();
        classical.cols[col].set(row, Cell::Letter(b));
        out.push((MoveKind::Horizontal, classical, next, Vec::new()));
        if let Some(v) = pair_shift(kind, &merged) {
            out.push((MoveKind::PairShift, fill(&v, &[]), next, Vec::new()));
        }
        if let Some(v) = contraction(kind, &merged) {
            let h = filled_rows.len();
            let at = filled_rows.iter().position(|&x| x == row).expect("hole row is filled");
            let mut placements: Vec<(usize, usize)> = Vec::new();
            if at + 1 < h {
                placements.push((at, h - 1));
            }
            for b2 in (1..h).rev() {
                for a2 in (0..b2).rev() {
                    if !placements.contains(&(a2, b2)) {
                        placements.push((a2, b2));
                    }
                }
            }
            for (a2, b2) in placements {
                let holes = vec![(filled_rows[b2], col), (filled_rows[a2], col)];
                out.push((MoveKind::Contraction, fill(&v, &[a2, b2]), next, holes));
            }
        }
        out
    }

    fn columns_of_height(&mut self, h: usize) -> Result<&[(Vec<Letter>, Weight)]> {
        let kind = self.grid.kind;
        if h >= self.catalog.len() {
            return Ok(&[]);
        }
        if self.catalog[h].is_none() {
            let n = kind.rank();
            if binomial(2 * n, h) > SEARCH_LIMIT {
                return Err(Error::SlideDivergence(format!("no local rule applies and rank {n} is too large to search")));
            }
            let cols = admissible_columns(kind, h)
                .into_iter()
                .filter(|c| c_admissible(kind, &c.cells))
                .map(|c| {
                    let mut wt = Weight::zero(n);
                    for &x in &c.cells {
                        wt.add_assign(&Weight::of_letter(n, x));
                    }
                    (c.cells, wt)
                })
                .collect();
            self.catalog[h] = Some(cols);
        }
        Ok(self.catalog[h].as_deref().unwrap_or(&[]))
    }

    /// Try every filling of the two columns with the hole moved down or right.
    fn search(&mut self, row: usize, col: usize, down: bool, across: bool, before: &(Vec<usize>, Weight)) -> Result<Outcome> {
        let kind = self.grid.kind;
        let n = kind.rank();
        let a_rows: Vec<usize> = self.grid.letter_rows(col).iter().map(|r| r.0).chain([row]).collect();
        let b_rows: Vec<usize> = if col + 1 < self.grid.cols.len() {
            self.grid.letter_rows(col + 1).iter().map(|r| r.0).collect()
        } else {
            Vec::new()
        };
        let mut total = Weight::zero(n);
        for x in self.grid.cols[col].letters().into_iter().chain(self.grid.cols.get(col + 1).map(|c| c.letters()).unwrap_or_default()) {
            total.add_assign(&Weight::of_letter(n, x));
        }
        let mut shapes: Vec<(Vec<usize>, Vec<usize>, (usize, usize))> = Vec::new();
        if down {
            let a: Vec<usize> = a_rows.iter().copied().filter(|&r| r != row + 1).collect();
            shapes.push((a, b_rows.clone(), (row + 1, col)));
        }
        if across {
            let b: Vec<usize> = b_rows.iter().copied().filter(|&r| r != row).collect();
            shapes.push((a_rows.clone(), b, (row, col + 1)));
        }
        let mut found: Vec<Outcome> = Vec::new();
        for (a_fill, b_fill, next) in shapes {
            let mut a_sorted = a_fill.clone();
            a_sorted.sort_unstable();
            let mut b_sorted = b_fill.clone();
            b_sorted.sort_unstable();
            let a_cols = self.columns_of_height(a_sorted.len())?.to_vec();
            let b_cols = self.columns_of_height(b_sorted.len())?.to_vec();
            for (ac, aw) in &a_cols {
                for (bc, bw) in &b_cols {
                    let mut wt = aw.clone();
                    wt.add_assign(bw);
                    if wt != total {
                        continue;
                    }
                    let mut g = self.grid.clone();
                    for (&r, &x) in a_sorted.iter().zip(ac) {
                        g.cols[col].set(r, Cell::Letter(x));
                    }
                    g.cols[next.1].set(next.0, Cell::Hole);
                    for (&r, &x) in b_sorted.iter().zip(bc) {
                        g.cols[col + 1].set(r, Cell::Letter(x));
                    }
                    if g.locally_valid(col.saturating_sub(1), col + 2) && &g.two_column_key(col) == before {
                        found.push((MoveKind::Search, g, next, Vec::new()));
                    }
                }
            }
        }
        if found.len() > 1 {
            self.stats.ambiguous += 1;
        }
        found.into_iter().next().ok_or_else(|| {
            Error::SlideDivergence(format!("no admissible move of the hole at row {}, column {}\n{}", row + 1, col + 1, self.grid))
        })
    }
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k.min(n)).fold(1usize, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// Drop spent cells and trailing empty columns.
fn normalize(grid: &mut Grid) -> Result<()> {
    for c in &mut grid.cols {
        while c.cells.last() == Some(&Cell::Spent) {
            c.cells.pop();
        }
        if c.cells.iter().any(|x| x.letter().is_none()) {
            return Err(Error::SlideDivergence(format!("a puncture was left inside\n{grid}")));
        }
    }
    while grid.cols.last().is_some_and(|c| c.cells.is_empty()) {
        grid.cols.pop();
    }
    Ok(())
}

/// An inner corner: a pair of duplicated columns or, once the grid no longer
/// pairs up, a single column.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Corner {
    Pair(usize),
    Single(usize),
}

fn corners(grid: &Grid) -> Vec<Corner> {
    if grid.pair_structured() {
        let offsets: Vec<usize> = grid.cols.chunks(2).map(|p| p[0].offset).collect();
        inner_corners_of(&offsets).into_iter().map(Corner::Pair).collect()
    } else {
        let offsets: Vec<usize> = grid.cols.iter().map(|c| c.offset).collect();
        inner_corners_of(&offsets).into_iter().map(Corner::Single).collect()
    }
}

fn open(grid: &mut Grid, col: usize) -> usize {
    let c = &mut grid.cols[col];
    c.offset -= 1;
    c.cells.insert(0, Cell::Hole);
    c.offset
}

/// Open an inner corner and slide its punctures out, the right one first.
fn slide_corner(grid: Grid, corner: Corner, trace: Option<&mut Vec<Grid>>, stats: &mut SlideStats) -> Result<Grid> {
    let mut grid = grid;
    let (row, cols) = match corner {
        Corner::Pair(j) => {
            let row = open(&mut grid, 2 * j);
            open(&mut grid, 2 * j + 1);
            (row, vec![2 * j + 1, 2 * j])
        }
        Corner::Single(k) => (open(&mut grid, k), vec![k]),
    };
    let mut s = Slider::new(grid, trace);
    s.emit();
    for c in cols {
        s.slide(row, c)?;
    }
    stats.merge(&s.stats);
    let mut grid = s.grid;
    normalize(&mut grid)?;
    if !grid.is_valid() {
        return Err(Error::SlideDivergence(format!("slide left an invalid grid\n{grid}")));
    }
    Ok(grid)
}

fn grid_to_tabloid(grid: &Grid) -> Result<Tabloid> {
    let kind = grid.kind;
    if grid.cols.iter().any(|c| c.offset != 0) || !grid.pair_structured() {
        return Err(Error::SlideDivergence(format!("final grid is not a split form\n{grid}")));
    }
    let mut cols = Vec::new();
    for p in grid.cols.chunks(2) {
        let pair = SplitPair { l: Column { kind, cells: p[0].letters() }, r: Column { kind, cells: p[1].letters() } };
        let c = unsplit(&pair).map_err(|e| Error::SlideDivergence(format!("final grid is not a split form: {e}\n{grid}")))?;
        if split_column(&c).ok().as_ref() != Some(&pair) {
            return Err(Error::SlideDivergence(format!("final grid is not a split form\n{grid}")));
        }
        cols.push(c);
    }
    Tabloid::new(kind, cols)
}

#[derive(Clone, Debug)]
pub struct Rectification {
    pub tableau: Tabloid,
    /// One grid per corner opening and per horizontal move.
    pub trace: Vec<Grid>,
    pub stats: SlideStats,
}

/// Rectify, always opening the topmost (then leftmost) inner corner.
pub fn rectify(t: &SkewTableau) -> Result<Tabloid> {
    Ok(rectify_with(t, &mut |c: &[Corner]| c[0], false)?.tableau)
}

pub fn rectify_traced(t: &SkewTableau) -> Result<Rectification> {
    rectify_with(t, &mut |c: &[Corner]| c[0], true)
}

/// Rectify with a caller-chosen inner corner at each stage.
pub fn rectify_with(t: &SkewTableau, choose: &mut dyn FnMut(&[Corner]) -> Corner, traced: bool) -> Result<Rectification> {
    if !t.is_skew_orthogonal() {
        return Err(Error::InvalidSkew("not a skew orthogonal tableau".into()));
    }
    let mut grid = t.split_grid()?;
    let mut trace = Vec::new();
    let mut stats = SlideStats::default();
    loop {
        let cs = corners(&grid);
        if cs.is_empty() {
            break;
        }
        let c = choose(&cs);
        if !cs.contains(&c) {
            return Err(Error::InvalidSkew(format!("{c:?} is not an inner corner")));
        }
        grid = slide_corner(grid, c, traced.then_some(&mut trace), &mut stats)?;
    }
    let tableau = grid_to_tabloid(&grid)?;
    let expected = p_symbol(t.kind, &t.reading())?;
    if tableau != expected {
        return Err(Error::SlideDivergence(format!("rectified to\n{tableau}\nbut insertion gives\n{expected}")));
    }
    Ok(Rectification { tableau, trace, stats })
}

/// The rectification reached by every sequence of corner choices.
pub fn rectify_all_orders(t: &SkewTableau) -> Result<Vec<Tabloid>> {
    fn rec(grid: Grid, out: &mut Vec<Tabloid>) -> Result<()> {
        let cs = corners(&grid);
        if cs.is_empty() {
            out.push(grid_to_tabloid(&grid)?);
            return Ok(());
        }
        for c in cs {
            let mut stats = SlideStats::default();
            rec(slide_corner(grid.clone(), c, None, &mut stats)?, out)?;
        }
        Ok(())
    }
    if !t.is_skew_orthogonal() {
        return Err(Error::InvalidSkew("not a skew orthogonal tableau".into()));
    }
    let mut out = Vec::new();
    rec(t.split_grid()?, &mut out)?;
    Ok(out)
}

/// A uniformly filled skew orthogonal tableau with at most `max_boxes` boxes and
/// at most `max_columns` columns, found by rejection.
pub fn random_skew_tableau<R: Rng>(kind: LieKind, max_boxes: usize, max_columns: usize, rng: &mut R) -> SkewTableau {
    let n = kind.rank();
    let by_height: Vec<Vec<Column>> = (0..=n).map(|h| admissible_columns(kind, h)).collect();
    loop {
        let ncols = rng.gen_range(1..=max_columns);
        let mut cols = Vec::with_capacity(ncols);
        let (mut top, mut bottom) = (usize::MAX, usize::MAX);
        let mut boxes = 0;
        for _ in 0..ncols {
            let offset = rng.gen_range(0..=top.min(2));
            let len = rng.gen_range(1..=n);
            if offset + len > bottom || boxes + len > max_boxes {
                break;
            }
            let fill = &by_height[len][rng.gen_range(0..by_height[len].len())];
            cols.push(SkewColumn { offset, cells: fill.cells.clone() });
            top = offset;
            bottom = offset + len;
            boxes += len;
        }
        if cols.is_empty() {
            continue;
        }
        if let Ok(t) = SkewTableau::new(kind, cols) {
            if t.is_skew_orthogonal() {
                return t;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_skew_example() {
        let b3 = LieKind::b(3);
        let t = SkewTableau::parse(b3, &[(2, "0 0"), (1, "3 -3"), (0, "2 0 -1")]).unwrap();
        assert!(t.is_skew_orthogonal());
        let g = t.split_grid().unwrap();
        assert_eq!(
            g.render(),
            vec![" .  .  .  .  2  2", " .  .  2  3  3 -3", " 2 -3 -3 -2 -1 -1", " 3 -2"]
                .iter()
                .map(|s| s.to_string())
                .collect::<Vec<_>>()
        );
        let bad = SkewTableau::parse(b3, &[(2, "0 0"), (1, "3 -3"), (0, "1 0 -1")]).unwrap();
        assert!(!bad.is_skew_orthogonal());
    }

    #[test]
    fn contraction_empties() {
        let b2 = LieKind::b(2);
        let t = SkewTableau::parse(b2, &[(1, "-1"), (0, "1")]).unwrap();
        assert!(t.is_skew_orthogonal());
        assert!(rectify(&t).unwrap().is_empty());
        assert!(p_symbol(b2, &t.reading()).unwrap().is_empty());
    }
}
