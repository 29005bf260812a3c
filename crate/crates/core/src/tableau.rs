//! Shapes, tabloids, split forms, the orders `⪯` and `⊴`, a-configurations and
//! the orthogonality criterion.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::alphabet::{format_letters, Kind, LieKind, Letter, Weight};
use crate::column::{split_column, Column, SplitPair};
use crate::error::{Error, Result};
use crate::spin::SpinColumn;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Epsilon {
    #[serde(rename = "-")]
    Minus,
    #[serde(rename = "0")]
    Zero,
    #[serde(rename = "+")]
    Plus,
}

impl Epsilon {
    pub fn symbol(self) -> &'static str {
        match self {
            Epsilon::Minus => "-",
            Epsilon::Zero => "0",
            Epsilon::Plus => "+",
        }
    }

    pub fn parse(s: &str) -> Result<Epsilon> {
        match s {
            "-" => Ok(Epsilon::Minus),
            "0" => Ok(Epsilon::Zero),
            "+" => Ok(Epsilon::Plus),
            _ => Err(Error::Parse(format!("bad epsilon `{s}`"))),
        }
    }
}

/// The half-width spin column of a spin shape: `Λ_n` or (type D) `Λ_{n−1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpinHalf {
    Even,
    Odd,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Shape {
    /// Weakly decreasing, each in `1..=n`.
    pub column_heights: Vec<usize>,
    pub epsilon: Epsilon,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spin: Option<SpinHalf>,
}

impl Shape {
    pub fn empty() -> Shape {
        Shape { column_heights: Vec::new(), epsilon: Epsilon::Zero, spin: None }
    }

    pub fn new(kind: LieKind, column_heights: Vec<usize>, epsilon: Epsilon) -> Result<Shape> {
        let s = Shape { column_heights, epsilon, spin: None };
        s.validate(kind)?;
        Ok(s)
    }

    pub fn validate(&self, kind: LieKind) -> Result<()> {
        let n = kind.rank();
        if self.column_heights.iter().any(|&h| h == 0 || h > n) {
            return Err(Error::InvalidShape("column heights must lie in 1..=n".into()));
        }
        if self.column_heights.windows(2).any(|p| p[0] < p[1]) {
            return Err(Error::InvalidShape("column heights must weakly decrease".into()));
        }
        let full = self.column_heights.first() == Some(&n);
        match kind.kind() {
            Kind::B => {
                if self.epsilon != Epsilon::Zero {
                    return Err(Error::InvalidShape("type B shapes carry no sign".into()));
                }
                if self.spin == Some(SpinHalf::Odd) {
                    return Err(Error::InvalidShape("type B has a single spin column class".into()));
                }
            }
            Kind::D => {
                if full != (self.epsilon != Epsilon::Zero) {
                    return Err(Error::InvalidShape("sign must be nonzero exactly with a height n column".into()));
                }
                match (self.spin, self.epsilon) {
                    (Some(SpinHalf::Even), Epsilon::Minus) | (Some(SpinHalf::Odd), Epsilon::Plus) => {
                        return Err(Error::InvalidShape("spin half and sign disagree".into()))
                    }
                    _ => {}
                }
            }
        }
        Ok(())
    }

    pub fn boxes(&self) -> usize {
        self.column_heights.iter().sum()
    }

    /// `λ_i` = number of columns of height `i`.
    pub fn counts(&self, rank: usize) -> Vec<usize> {
        let mut out = vec![0; rank + 1];
        for &h in &self.column_heights {
            out[h] += 1;
        }
        out
    }

    pub fn from_counts(counts: &[usize], epsilon: Epsilon) -> Shape {
        let mut heights = Vec::new();
        for h in (1..counts.len()).rev() {
            heights.extend(std::iter::repeat(h).take(counts[h]));
        }
        Shape { column_heights: heights, epsilon, spin: None }
    }

    /// Shape `Y(λ)` of a dominant highest weight (doubled coordinates).
    pub fn from_highest_weight(kind: LieKind, wt: &Weight) -> Result<Shape> {
        let n = kind.rank();
        let d = &wt.0;
        let odd = d.iter().any(|x| x % 2 != 0);
        let mut d2: Vec<i32> = d.clone();
        let mut spin = None;
        if odd {
            if d.iter().any(|x| x % 2 == 0) {
                return Err(Error::InvalidShape("mixed integral and half-integral weight".into()));
            }
            let sub_odd = kind.is_d() && d[n - 1] < 0;
            for x in d2.iter_mut().take(n - 1) {
                *x -= 1;
            }
            if sub_odd {
                d2[n - 1] += 1;
                spin = Some(SpinHalf::Odd);
            } else {
                d2[n - 1] -= 1;
                spin = Some(SpinHalf::Even);
            }
        }
        let coords = Weight(d2).omega_coords(kind);
        let c = coords
            .integral()
            .filter(|c| c.iter().all(|&x| x >= 0))
            .ok_or_else(|| Error::InvalidShape("weight is not dominant".into()))?;
        let mut counts = vec![0usize; n + 1];
        for (i, &x) in c.iter().enumerate() {
            counts[i + 1] = x as usize;
        }
        let epsilon = if kind.is_d() && counts[n] > 0 {
            if coords.barred {
                Epsilon::Minus
            } else {
                Epsilon::Plus
            }
        } else {
            Epsilon::Zero
        };
        let mut s = Shape::from_counts(&counts, epsilon);
        s.spin = spin;
        Ok(s)
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let hs: Vec<String> = self.column_heights.iter().map(|h| h.to_string()).collect();
        write!(f, "({})", hs.join(","))?;
        if self.epsilon != Epsilon::Zero {
            write!(f, "{}", self.epsilon.symbol())?;
        }
        match self.spin {
            Some(SpinHalf::Even) => write!(f, "+spin"),
            Some(SpinHalf::Odd) => write!(f, "+spin'"),
            None => Ok(()),
        }
    }
}

/// Columns left to right.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tabloid {
    pub kind: LieKind,
    pub columns: Vec<Column>,
}

impl fmt::Debug for Tabloid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols: Vec<String> = self.columns.iter().map(|c| format!("{c:?}")).collect();
        write!(f, "[{}]", cols.join(" "))
    }
}

impl fmt::Display for Tabloid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_grid(&self.columns.iter().map(|c| (0, c.cells.clone())).collect::<Vec<_>>()))
    }
}

/// Render columns given as (top offset, cells); `.` marks skipped cells.
pub fn render_grid(cols: &[(usize, Vec<Letter>)]) -> String {
    let depth = cols.iter().map(|(o, c)| o + c.len()).max().unwrap_or(0);
    let width = cols
        .iter()
        .flat_map(|(_, c)| c.iter().map(|x| x.to_string().len()))
        .max()
        .unwrap_or(1)
        .max(1);
    let mut out = String::new();
    for row in 0..depth {
        let mut line = Vec::new();
        for (o, c) in cols {
            let cell = if row < *o {
                ".".to_string()
            } else if row - o < c.len() {
                c[row - o].to_string()
            } else {
                String::new()
            };
            line.push(format!("{cell:>width$}"));
        }
        out.push_str(line.join(" ").trim_end());
        out.push('\n');
    }
    out
}

impl Tabloid {
    pub fn new(kind: LieKind, columns: Vec<Column>) -> Result<Tabloid> {
        if columns.iter().any(|c| c.kind != kind) {
            return Err(Error::KindMismatch);
        }
        Ok(Tabloid { kind, columns })
    }

    pub fn empty(kind: LieKind) -> Tabloid {
        Tabloid { kind, columns: Vec::new() }
    }

    /// Columns given as texts, left to right.
    pub fn parse(kind: LieKind, columns: &[&str]) -> Result<Tabloid> {
        let cols = columns.iter().map(|c| Column::parse(kind, c)).collect::<Result<Vec<_>>>()?;
        Tabloid::new(kind, cols)
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn boxes(&self) -> usize {
        self.columns.iter().map(|c| c.height()).sum()
    }

    pub fn heights(&self) -> Vec<usize> {
        self.columns.iter().map(|c| c.height()).collect()
    }

    /// `w(C_r)⋯w(C_1)`.
    pub fn reading(&self) -> Vec<Letter> {
        let mut w = Vec::with_capacity(self.boxes());
        for c in self.columns.iter().rev() {
            w.extend_from_slice(&c.cells);
        }
        w
    }

    pub fn split_pairs(&self) -> Result<Vec<SplitPair>> {
        self.columns
            .iter()
            .enumerate()
            .map(|(k, c)| {
                split_column(c).map_err(|e| Error::CannotSplit(format!("column {}: {e}", k + 1)))
            })
            .collect()
    }

    /// `spl(T) = (lC_1 rC_1)(lC_2 rC_2)⋯`
    pub fn split_form(&self) -> Result<Tabloid> {
        let mut cols = Vec::with_capacity(2 * self.columns.len());
        for p in self.split_pairs()? {
            cols.push(p.l);
            cols.push(p.r);
        }
        Ok(Tabloid { kind: self.kind, columns: cols })
    }

    pub fn is_orthogonal(&self) -> bool {
        is_orthogonal_tableau(self)
    }

    pub fn shape(&self) -> Result<Shape> {
        shape_of(self)
    }

    pub fn to_json(&self, epsilon: Option<Epsilon>) -> TableauJson {
        TableauJson {
            kind: self.kind.kind().to_string(),
            rank: self.kind.rank(),
            columns: self
                .columns
                .iter()
                .map(|c| c.cells.iter().map(|x| Token::Text(x.to_string())).collect())
                .collect(),
            epsilon: epsilon.map(|e| e.symbol().to_string()),
            spin: None,
        }
    }
}

/// Rows of `C1 C2` weakly increase and `h(C1) ≥ h(C2)`.
pub fn column_le(c1: &Column, c2: &Column) -> bool {
    let k = c1.kind;
    c1.height() >= c2.height() && c1.cells.iter().zip(&c2.cells).all(|(&a, &b)| k.le(a, b))
}

/// `C1 ⊴ C2` when `rC1 ⪯ lC2`.
pub fn box_le(c1: &Column, c2: &Column) -> Result<bool> {
    let (p1, p2) = (split_column(c1)?, split_column(c2)?);
    Ok(column_le(&p1.r, &p2.l))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

/// Positions are 1-based, each column indexed from its top.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AConfiguration {
    pub a: usize,
    pub parity: Parity,
    pub p: usize,
    pub q: usize,
    pub r: usize,
    pub s: usize,
    pub mu: usize,
}

/// All a-configurations in the two-column tableau `X Y`.
pub fn find_a_configurations(kind: LieKind, x: &[Letter], y: &[Letter]) -> Vec<AConfiguration> {
    let n = kind.rank();
    let mut out = Vec::new();
    for (p0, &xa) in x.iter().enumerate() {
        if !xa.is_unbarred() || xa.index() >= n {
            continue;
        }
        let a = xa.index();
        for (s0, &ys) in y.iter().enumerate() {
            if ys != xa.bar() {
                continue;
            }
            for (q0, &yq) in y.iter().enumerate() {
                if yq.index() != n || q0 < p0 || q0 >= s0 {
                    continue;
                }
                for (r0, &xr) in x.iter().enumerate() {
                    if xr.index() != n || r0 <= q0 || r0 > s0 {
                        continue;
                    }
                    let odd_len = (r0 - q0 + 1) % 2 == 1;
                    let same = xr == yq;
                    let parity = match (same, odd_len) {
                        (false, true) => Parity::Odd,
                        (true, false) => Parity::Even,
                        _ => continue,
                    };
                    out.push(AConfiguration { a, parity, p: p0 + 1, q: q0 + 1, r: r0 + 1, s: s0 + 1, mu: s0 - p0 });
                }
            }
        }
    }
    out
}

/// An a-configuration with `μ(a) = n − a`.
pub fn has_forbidden_configuration(kind: LieKind, x: &[Letter], y: &[Letter]) -> bool {
    let n = kind.rank();
    find_a_configurations(kind, x, y).iter().any(|c| c.mu == n - c.a)
}

pub fn is_orthogonal_tableau(t: &Tabloid) -> bool {
    orthogonality_defect(t).is_none()
}

/// Why `t` fails the criterion, if it does.
pub fn orthogonality_defect(t: &Tabloid) -> Option<String> {
    let kind = t.kind;
    for (k, c) in t.columns.iter().enumerate() {
        if c.kind != kind || !crate::column::is_column_word(kind, &c.cells) || c.is_empty() {
            return Some(format!("column {} is malformed", k + 1));
        }
        if !c.is_admissible() {
            return Some(format!("column {} is not admissible", k + 1));
        }
    }
    let pairs = match t.split_pairs() {
        Ok(p) => p,
        Err(e) => return Some(e.to_string()),
    };
    for k in 1..pairs.len() {
        if !column_le(&pairs[k - 1].r, &pairs[k].l) {
            return Some(format!("columns {} and {} violate the split order", k, k + 1));
        }
        if kind.is_d() && has_forbidden_configuration(kind, &pairs[k - 1].r.cells, &pairs[k].l.cells) {
            return Some(format!("columns {} and {} contain a forbidden configuration", k, k + 1));
        }
    }
    None
}

pub fn highest_weight_tableau(kind: LieKind, shape: &Shape) -> Result<Tabloid> {
    shape.validate(kind)?;
    let n = kind.rank();
    let cols = shape
        .column_heights
        .iter()
        .map(|&h| Column::generator(kind, h, kind.is_d() && h == n && shape.epsilon == Epsilon::Minus))
        .collect();
    Ok(Tabloid { kind, columns: cols })
}

pub fn shape_of(t: &Tabloid) -> Result<Shape> {
    let kind = t.kind;
    let heights = t.heights();
    let mut epsilon = Epsilon::Zero;
    if kind.is_d() && heights.first() == Some(&kind.rank()) {
        epsilon = if t.columns[0].is_barred_spin_class()? { Epsilon::Minus } else { Epsilon::Plus };
    }
    let s = Shape { column_heights: heights, epsilon, spin: None };
    s.validate(kind)?;
    Ok(s)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Token {
    Text(String),
    Int(i64),
}

impl Token {
    fn letter(&self) -> Result<Letter> {
        match self {
            Token::Text(s) => Letter::parse(s),
            Token::Int(v) => Letter::parse(&v.to_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauJson {
    #[serde(rename = "type")]
    pub kind: String,
    pub rank: usize,
    pub columns: Vec<Vec<Token>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<String>,
    /// Letters of a leading spin column.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spin: Option<Vec<Token>>,
}

impl TableauJson {
    pub fn lie_kind(&self) -> Result<LieKind> {
        LieKind::new(self.kind.parse()?, self.rank)
    }

    pub fn tabloid(&self) -> Result<Tabloid> {
        let kind = self.lie_kind()?;
        let cols = self
            .columns
            .iter()
            .map(|c| Column::new(kind, c.iter().map(Token::letter).collect::<Result<Vec<_>>>()?))
            .collect::<Result<Vec<_>>>()?;
        Tabloid::new(kind, cols)
    }

    pub fn spin_column(&self) -> Result<Option<SpinColumn>> {
        let kind = self.lie_kind()?;
        match &self.spin {
            None => Ok(None),
            Some(toks) => {
                let letters = toks.iter().map(Token::letter).collect::<Result<Vec<_>>>()?;
                Ok(Some(SpinColumn::new(kind, &letters)?))
            }
        }
    }

    pub fn epsilon(&self) -> Result<Option<Epsilon>> {
        self.epsilon.as_deref().map(Epsilon::parse).transpose()
    }

    pub fn from_str(text: &str) -> Result<TableauJson> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_string_pretty(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }
}

pub fn format_columns(cols: &[Column]) -> String {
    cols.iter().map(|c| format!("({})", format_letters(&c.cells))).collect::<Vec<_>>().join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn worked_b4() -> Tabloid {
        Tabloid::parse(LieKind::b(4), &["3 4 0 0", "3 0 -2", "4 -4"]).unwrap()
    }

    #[test]
    fn reading_and_split() {
        let t = worked_b4();
        assert_eq!(format_letters(&t.reading()), "4 -4 3 0 -2 3 4 0 0");
        let s = t.split_form().unwrap();
        assert_eq!(
            format_columns(&s.columns),
            "(1 2 3 4) (3 4 -2 -1) (3 4 -2) (3 -4 -2) (3 -4) (4 -3)"
        );
        assert!(t.is_orthogonal());
        assert!(box_le(&t.columns[0], &t.columns[1]).unwrap());
    }

    #[test]
    fn configurations() {
        let d4 = LieKind::d(4);
        let t = Tabloid::parse(d4, &["3 -4", "-4 -3"]).unwrap();
        assert!(box_le(&t.columns[0], &t.columns[1]).unwrap());
        let cf = find_a_configurations(d4, &t.columns[0].cells, &t.columns[1].cells);
        assert_eq!(cf.len(), 1);
        assert_eq!((cf[0].a, cf[0].parity, cf[0].mu), (3, Parity::Even, 1));
        assert!(!t.is_orthogonal());
        let d3 = LieKind::d(3);
        let c = Column::parse(d3, "1 2 3").unwrap();
        assert!(find_a_configurations(d3, &c.cells, &c.cells).is_empty());
    }

    #[test]
    fn shapes() {
        let d3 = LieKind::d(3);
        let t = Tabloid::parse(d3, &["1 2 3"]).unwrap();
        assert_eq!(t.shape().unwrap().epsilon, Epsilon::Plus);
        let t = Tabloid::parse(d3, &["1 2 -3"]).unwrap();
        assert_eq!(t.shape().unwrap().epsilon, Epsilon::Minus);
        let s = Shape::new(d3, vec![3, 1], Epsilon::Minus).unwrap();
        let h = highest_weight_tableau(d3, &s).unwrap();
        assert_eq!(format_columns(&h.columns), "(1 2 -3) (1)");
        assert!(highest_weight_tableau(d3, &Shape::empty()).unwrap().is_empty());
        let w = crate::alphabet::Word::new(d3, h.reading()).unwrap().weight();
        assert_eq!(Shape::from_highest_weight(d3, &w).unwrap(), s);
    }

    #[test]
    fn json_roundtrip() {
        let t = worked_b4();
        let j = t.to_json(None).to_string_pretty();
        let back = TableauJson::from_str(&j).unwrap().tabloid().unwrap();
        assert_eq!(back, t);
        let j = r#"{"type":"D","rank":3,"columns":[[1,2,-3]],"epsilon":"-"}"#;
        let t = TableauJson::from_str(j).unwrap();
        assert_eq!(t.epsilon().unwrap(), Some(Epsilon::Minus));
        assert_eq!(t.tabloid().unwrap().columns[0].to_string(), "1 2 -3");
    }
}
