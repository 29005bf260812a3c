//! Oscillating tableaux, the Q-symbol and the bijection `w ↦ (P(w), Q(w))`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::alphabet::{Kind, LieKind, Letter};
use crate::crystal::{follow_path, highest_weight_path, is_highest_weight};
use crate::error::{Error, Result};
use crate::plactic::insert_into_tableau;
use crate::tableau::{highest_weight_tableau, shape_of, Epsilon, Shape, Tabloid};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OscillatingTableau {
    pub steps: Vec<Shape>,
}

/// Row lengths `r_1 ≥ r_2 ≥ ⋯ ≥ r_n` of a shape.
fn rows(shape: &Shape, n: usize) -> Vec<usize> {
    (1..=n).map(|k| shape.column_heights.iter().filter(|&&h| h >= k).count()).collect()
}

fn from_rows(r: &[usize], epsilon: Epsilon) -> Shape {
    let cols = r.first().copied().unwrap_or(0);
    let heights = (0..cols).map(|c| r.iter().filter(|&&len| len > c).count()).collect();
    Shape { column_heights: heights, epsilon, spin: None }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Step {
    Add(usize),
    Remove(usize),
    Equal,
}

/// How `b` arises from `a`, ignoring signs.
pub fn classify_step(kind: LieKind, a: &Shape, b: &Shape) -> Option<Step> {
    let n = kind.rank();
    let (ra, rb) = (rows(a, n), rows(b, n));
    let diff: Vec<(usize, i64)> = ra
        .iter()
        .zip(&rb)
        .enumerate()
        .filter(|(_, (x, y))| x != y)
        .map(|(k, (&x, &y))| (k + 1, y as i64 - x as i64))
        .collect();
    match diff.as_slice() {
        [] => Some(Step::Equal),
        [(k, 1)] => Some(Step::Add(*k)),
        [(k, -1)] => Some(Step::Remove(*k)),
        _ => None,
    }
}

impl OscillatingTableau {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn last(&self) -> Option<&Shape> {
        self.steps.last()
    }

    /// The defining conditions on consecutive shapes and signs.
    pub fn validate(&self, kind: LieKind) -> Result<()> {
        for s in &self.steps {
            s.validate(kind).map_err(|e| Error::InvalidOscillating(e.to_string()))?;
        }
        for (k, p) in self.steps.windows(2).enumerate() {
            let step = classify_step(kind, &p[0], &p[1])
                .ok_or_else(|| Error::InvalidOscillating(format!("steps {} and {} differ by more than a box", k + 1, k + 2)))?;
            if kind.is_d() {
                if step == Step::Equal {
                    return Err(Error::InvalidOscillating(format!("steps {} and {} are equal", k + 1, k + 2)));
                }
                let (e0, e1) = (p[0].epsilon, p[1].epsilon);
                if e0 != Epsilon::Zero && e1 != Epsilon::Zero && e0 != e1 {
                    return Err(Error::InvalidOscillating(format!("sign flips between steps {} and {}", k + 1, k + 2)));
                }
            }
        }
        Ok(())
    }

    /// `validate` plus the conditions met by every Q-symbol: the first shape is
    /// one box and, in type B, equal steps only occur on shapes with a column of height `n`.
    pub fn validate_reachable(&self, kind: LieKind) -> Result<()> {
        self.validate(kind)?;
        let n = kind.rank();
        match self.steps.first() {
            Some(s) if s.column_heights == [1] => {}
            Some(_) => return Err(Error::InvalidOscillating("the first shape must be a single box".into())),
            None => return Ok(()),
        }
        for (k, p) in self.steps.windows(2).enumerate() {
            if classify_step(kind, &p[0], &p[1]) == Some(Step::Equal) && p[0].column_heights.first() != Some(&n) {
                return Err(Error::InvalidOscillating(format!(
                    "equal step {} on a shape without a column of height {n}",
                    k + 2
                )));
            }
        }
        Ok(())
    }

    /// The highest weight word `x_1⋯x_l` whose Q-symbol is `self`.
    pub fn highest_weight_word(&self, kind: LieKind) -> Result<Vec<Letter>> {
        self.validate_reachable(kind)?;
        let n = kind.rank();
        let mut w = Vec::with_capacity(self.len());
        let empty = Shape::empty();
        let mut prev = &empty;
        for s in &self.steps {
            let step = classify_step(kind, prev, s).ok_or_else(|| Error::InvalidOscillating("bad step".into()))?;
            let x = match step {
                Step::Equal => Letter::ZERO,
                Step::Add(k) if k < n || kind.is_b() => Letter::unbarred(k),
                Step::Remove(k) if k < n || kind.is_b() => Letter::barred(k),
                Step::Add(_) => {
                    if s.epsilon == Epsilon::Minus {
                        Letter::barred(n)
                    } else {
                        Letter::unbarred(n)
                    }
                }
                Step::Remove(_) => {
                    if prev.epsilon == Epsilon::Minus {
                        Letter::unbarred(n)
                    } else {
                        Letter::barred(n)
                    }
                }
            };
            w.push(x);
            prev = s;
        }
        if !is_highest_weight(kind, &w) {
            return Err(Error::InvalidOscillating("the associated word is not of highest weight".into()));
        }
        Ok(w)
    }
}

/// Successor shapes of an oscillating tableau.
pub fn next_shapes(kind: LieKind, s: &Shape) -> Vec<Shape> {
    let n = kind.rank();
    let r = rows(s, n);
    let mut out = Vec::new();
    let mut push = |r2: Vec<usize>| {
        let full = r2[n - 1] > 0;
        match kind.kind() {
            Kind::B => out.push(from_rows(&r2, Epsilon::Zero)),
            Kind::D if !full => out.push(from_rows(&r2, Epsilon::Zero)),
            Kind::D if s.epsilon != Epsilon::Zero => out.push(from_rows(&r2, s.epsilon)),
            Kind::D => {
                out.push(from_rows(&r2, Epsilon::Plus));
                out.push(from_rows(&r2, Epsilon::Minus));
            }
        }
    };
    for k in 0..n {
        if k == 0 || r[k] < r[k - 1] {
            let mut r2 = r.clone();
            r2[k] += 1;
            push(r2);
        }
        if r[k] > 0 && (k + 1 == n || r[k] > r[k + 1]) {
            let mut r2 = r.clone();
            r2[k] -= 1;
            push(r2);
        }
    }
    if kind.is_b() && r[n - 1] > 0 {
        out.push(s.clone());
    }
    out
}

/// All reachable oscillating tableaux of length `l`.
pub fn oscillating_tableaux(kind: LieKind, l: usize) -> Vec<OscillatingTableau> {
    let mut cur = vec![Vec::<Shape>::new()];
    for _ in 0..l {
        let mut next = Vec::new();
        for steps in &cur {
            let last = steps.last().cloned().unwrap_or_else(Shape::empty);
            for s in next_shapes(kind, &last) {
                let mut v = steps.clone();
                v.push(s);
                next.push(v);
            }
        }
        cur = next;
    }
    cur.into_iter().map(|steps| OscillatingTableau { steps }).collect()
}

/// Number of reachable oscillating tableaux of length `l`, by final shape.
pub fn count_oscillating_by_shape(kind: LieKind, l: usize) -> BTreeMap<Shape, u128> {
    let mut cur: BTreeMap<Shape, u128> = BTreeMap::new();
    cur.insert(Shape::empty(), 1);
    for _ in 0..l {
        let mut next = BTreeMap::new();
        for (s, c) in &cur {
            for t in next_shapes(kind, s) {
                *next.entry(t).or_insert(0) += c;
            }
        }
        cur = next;
    }
    cur
}

/// `P(w)` together with the shapes of the prefix P-symbols.
pub fn psi(kind: LieKind, w: &[Letter]) -> Result<(Tabloid, OscillatingTableau)> {
    let mut t = Tabloid::empty(kind);
    let mut steps = Vec::with_capacity(w.len());
    for &x in w {
        t = insert_into_tableau(x, &t)?;
        steps.push(shape_of(&t)?);
    }
    let q = OscillatingTableau { steps };
    q.validate_reachable(kind).map_err(|e| Error::Internal(format!("Q-symbol invalid: {e}")))?;
    Ok((t, q))
}

pub fn q_symbol(kind: LieKind, w: &[Letter]) -> Result<OscillatingTableau> {
    Ok(psi(kind, w)?.1)
}

/// The unique word `w` with `psi(w) = (p, q)`.
pub fn psi_inverse(p: &Tabloid, q: &OscillatingTableau) -> Result<Vec<Letter>> {
    let kind = p.kind;
    if let Some(d) = crate::tableau::orthogonality_defect(p) {
        return Err(Error::NotOrthogonal(d));
    }
    let shape = shape_of(p)?;
    let last = q.last().cloned().unwrap_or_else(Shape::empty);
    if shape != last {
        return Err(Error::ShapeMismatch(format!("P has shape {shape}, Q ends at {last}")));
    }
    let w_q = q.highest_weight_word(kind)?;
    let (hw, colors) = highest_weight_path(kind, &p.reading());
    let expected = highest_weight_tableau(kind, &shape)?;
    if hw != expected.reading() {
        return Err(Error::Internal("P does not lie in the component of its shape".into()));
    }
    follow_path(kind, &w_q, &colors).ok_or_else(|| Error::Internal("path transport left the component".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::parse_word;
    use crate::enumerate::words;

    #[test]
    fn small_q_symbols() {
        let b2 = LieKind::b(2);
        let q = q_symbol(b2, &parse_word(b2, "1 2 -2").unwrap().letters).unwrap();
        let hs: Vec<Vec<usize>> = q.steps.iter().map(|s| s.column_heights.clone()).collect();
        assert_eq!(hs, vec![vec![1], vec![2], vec![1]]);
        let q = q_symbol(b2, &parse_word(b2, "1 2 0").unwrap().letters).unwrap();
        assert_eq!(classify_step(b2, &q.steps[1], &q.steps[2]), Some(Step::Equal));
        let q = q_symbol(b2, &parse_word(b2, "1 0").unwrap().letters).unwrap();
        assert_eq!(q.steps[1].column_heights, vec![2]);
    }

    #[test]
    fn counts_and_round_trip() {
        for kind in [LieKind::b(2), LieKind::d(2)] {
            for l in 1..=3 {
                let all = words(kind, l);
                assert_eq!(oscillating_tableaux(kind, l).len() as u128, count_oscillating_by_shape(kind, l).values().sum::<u128>());
                for w in &all {
                    let (p, q) = psi(kind, w).unwrap();
                    assert_eq!(&psi_inverse(&p, &q).unwrap(), w);
                }
            }
        }
    }

    #[test]
    fn type_d_sign_letter() {
        let d2 = LieKind::d(2);
        let q = OscillatingTableau {
            steps: vec![
                Shape { column_heights: vec![1], epsilon: Epsilon::Zero, spin: None },
                Shape { column_heights: vec![2], epsilon: Epsilon::Minus, spin: None },
            ],
        };
        assert_eq!(q.highest_weight_word(d2).unwrap(), parse_word(d2, "1 -2").unwrap().letters);
        assert_eq!(q_symbol(d2, &parse_word(d2, "1 -2").unwrap().letters).unwrap(), q);
    }
}
