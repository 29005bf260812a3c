//! Kashiwara operators on letters, spin columns and tensor words, highest
//! weight detection, component exploration and the `∼` / `↔` relations.

use std::collections::{HashMap, HashSet};
use std::fmt::Debug;
use std::hash::Hash;

use crate::alphabet::{LieKind, Letter, Weight};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::spin::SpinColumn;

pub const DEFAULT_COMPONENT_CAP: usize = 10_000_000;

/// Something the operators `ẽ_i`, `f̃_i` act on as a single tensor factor.
pub trait Element: Copy + Eq + Hash + Ord + Debug + Send + Sync {
    fn f(self, kind: LieKind, i: usize) -> Option<Self>;
    fn e(self, kind: LieKind, i: usize) -> Option<Self>;
    fn eps(self, kind: LieKind, i: usize) -> u32;
    fn phi(self, kind: LieKind, i: usize) -> u32;
    fn weight(self, kind: LieKind) -> Weight;
    fn token(self) -> String;
}

impl Element for Letter {
    fn f(self, kind: LieKind, i: usize) -> Option<Letter> {
        letter_f(kind, i, self)
    }

    fn e(self, kind: LieKind, i: usize) -> Option<Letter> {
        letter_e(kind, i, self)
    }

    fn eps(self, kind: LieKind, i: usize) -> u32 {
        let n = kind.rank();
        let v = self.value() as i32;
        let i = i as i32;
        if (i as usize) < n {
            (v == i + 1 || v == -i) as u32
        } else if kind.is_b() {
            match v {
                0 => 1,
                x if x == -i => 2,
                _ => 0,
            }
        } else {
            (v == -i || v == -(i - 1)) as u32
        }
    }

    fn phi(self, kind: LieKind, i: usize) -> u32 {
        let n = kind.rank();
        let v = self.value() as i32;
        let i = i as i32;
        if (i as usize) < n {
            (v == i || v == -(i + 1)) as u32
        } else if kind.is_b() {
            match v {
                0 => 1,
                x if x == i => 2,
                _ => 0,
            }
        } else {
            (v == i || v == i - 1) as u32
        }
    }

    fn weight(self, kind: LieKind) -> Weight {
        Weight::of_letter(kind.rank(), self)
    }

    fn token(self) -> String {
        self.to_string()
    }
}

pub fn letter_f(kind: LieKind, i: usize, x: Letter) -> Option<Letter> {
    let n = kind.rank();
    let v = x.value() as i32;
    let c = i as i32;
    if i < n {
        if v == c {
            Some(Letter::unbarred(i + 1))
        } else if v == -(c + 1) {
            Some(Letter::barred(i))
        } else {
            None
        }
    } else if kind.is_b() {
        match v {
            0 => Some(Letter::barred(n)),
            x if x == c => Some(Letter::ZERO),
            _ => None,
        }
    } else if v == c - 1 {
        Some(Letter::barred(n))
    } else if v == c {
        Some(Letter::barred(n - 1))
    } else {
        None
    }
}

pub fn letter_e(kind: LieKind, i: usize, x: Letter) -> Option<Letter> {
    let n = kind.rank();
    let v = x.value() as i32;
    let c = i as i32;
    if i < n {
        if v == c + 1 {
            Some(Letter::unbarred(i))
        } else if v == -c {
            Some(Letter::barred(i + 1))
        } else {
            None
        }
    } else if kind.is_b() {
        match v {
            0 => Some(Letter::unbarred(n)),
            x if x == -c => Some(Letter::ZERO),
            _ => None,
        }
    } else if v == -c {
        Some(Letter::unbarred(n - 1))
    } else if v == -(c - 1) {
        Some(Letter::unbarred(n))
    } else {
        None
    }
}

/// A letter or a spin column; the alphabet of generalized words.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GenLetter {
    Letter(Letter),
    Spin(SpinColumn),
}

impl GenLetter {
    pub fn as_letter(self) -> Option<Letter> {
        match self {
            GenLetter::Letter(x) => Some(x),
            GenLetter::Spin(_) => None,
        }
    }

    pub fn as_spin(self) -> Option<SpinColumn> {
        match self {
            GenLetter::Spin(c) => Some(c),
            GenLetter::Letter(_) => None,
        }
    }
}

impl Element for GenLetter {
    fn f(self, kind: LieKind, i: usize) -> Option<Self> {
        match self {
            GenLetter::Letter(x) => x.f(kind, i).map(GenLetter::Letter),
            GenLetter::Spin(c) => c.f(kind, i).map(GenLetter::Spin),
        }
    }

    fn e(self, kind: LieKind, i: usize) -> Option<Self> {
        match self {
            GenLetter::Letter(x) => x.e(kind, i).map(GenLetter::Letter),
            GenLetter::Spin(c) => c.e(kind, i).map(GenLetter::Spin),
        }
    }

    fn eps(self, kind: LieKind, i: usize) -> u32 {
        match self {
            GenLetter::Letter(x) => x.eps(kind, i),
            GenLetter::Spin(c) => c.eps(kind, i),
        }
    }

    fn phi(self, kind: LieKind, i: usize) -> u32 {
        match self {
            GenLetter::Letter(x) => x.phi(kind, i),
            GenLetter::Spin(c) => c.phi(kind, i),
        }
    }

    fn weight(self, kind: LieKind) -> Weight {
        match self {
            GenLetter::Letter(x) => x.weight(kind),
            GenLetter::Spin(c) => c.weight(kind),
        }
    }

    fn token(self) -> String {
        match self {
            GenLetter::Letter(x) => x.token(),
            GenLetter::Spin(c) => c.token(),
        }
    }
}

/// Reduced signature of a word for one color.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Signature {
    pub eps: u32,
    pub phi: u32,
    /// Position acted on by `f̃_i` (leftmost uncancelled `+`).
    pub f_pos: Option<usize>,
    /// Position acted on by `ẽ_i` (rightmost uncancelled `−`).
    pub e_pos: Option<usize>,
}

/// Each factor contributes `−^ε +^φ`; adjacent `+ −` pairs cancel.
pub fn signature<T: Element>(kind: LieKind, i: usize, w: &[T]) -> Signature {
    let mut plus: Vec<(usize, u32)> = Vec::new();
    let mut eps = 0;
    let mut e_pos = None;
    for (p, x) in w.iter().enumerate() {
        let mut m = x.eps(kind, i);
        while m > 0 {
            match plus.last_mut() {
                Some(top) => {
                    let k = top.1.min(m);
                    top.1 -= k;
                    m -= k;
                    if top.1 == 0 {
                        plus.pop();
                    }
                }
                None => {
                    eps += m;
                    e_pos = Some(p);
                    m = 0;
                }
            }
        }
        let q = x.phi(kind, i);
        if q > 0 {
            plus.push((p, q));
        }
    }
    let phi = plus.iter().map(|t| t.1).sum();
    Signature { eps, phi, f_pos: plus.first().map(|t| t.0), e_pos }
}

pub fn eps<T: Element>(kind: LieKind, i: usize, w: &[T]) -> u32 {
    signature(kind, i, w).eps
}

pub fn phi<T: Element>(kind: LieKind, i: usize, w: &[T]) -> u32 {
    signature(kind, i, w).phi
}

pub fn word_f<T: Element>(kind: LieKind, i: usize, w: &[T]) -> Option<Vec<T>> {
    let p = signature(kind, i, w).f_pos?;
    let mut out = w.to_vec();
    out[p] = w[p].f(kind, i)?;
    Some(out)
}

pub fn word_e<T: Element>(kind: LieKind, i: usize, w: &[T]) -> Option<Vec<T>> {
    let p = signature(kind, i, w).e_pos?;
    let mut out = w.to_vec();
    out[p] = w[p].e(kind, i)?;
    Some(out)
}

pub fn word_f_pow<T: Element>(kind: LieKind, i: usize, w: &[T], k: u32) -> Option<Vec<T>> {
    let mut cur = w.to_vec();
    for _ in 0..k {
        cur = word_f(kind, i, &cur)?;
    }
    Some(cur)
}

pub fn word_e_pow<T: Element>(kind: LieKind, i: usize, w: &[T], k: u32) -> Option<Vec<T>> {
    let mut cur = w.to_vec();
    for _ in 0..k {
        cur = word_e(kind, i, &cur)?;
    }
    Some(cur)
}

pub fn word_weight<T: Element>(kind: LieKind, w: &[T]) -> Weight {
    let mut acc = Weight::zero(kind.rank());
    for x in w {
        acc.add_assign(&x.weight(kind));
    }
    acc
}

pub fn format_elements<T: Element>(w: &[T]) -> String {
    w.iter().map(|x| x.token()).collect::<Vec<_>>().join(" ")
}

pub fn is_highest_weight<T: Element>(kind: LieKind, w: &[T]) -> bool {
    (1..=kind.rank()).all(|i| signature(kind, i, w).e_pos.is_none())
}

/// Highest weight vertex of `B(w)` and the colors `(i_1, …, i_r)` with
/// `w = f̃_{i_1} ⋯ f̃_{i_r}(hw)`; the last color is applied first.
pub fn highest_weight_path<T: Element>(kind: LieKind, w: &[T]) -> (Vec<T>, Vec<usize>) {
    let mut cur = w.to_vec();
    let mut colors = Vec::new();
    'outer: loop {
        for i in 1..=kind.rank() {
            if let Some(next) = word_e(kind, i, &cur) {
                cur = next;
                colors.push(i);
                continue 'outer;
            }
        }
        break;
    }
    (cur, colors)
}

/// Apply `f̃_{i_1} ⋯ f̃_{i_r}` as returned by [`highest_weight_path`].
pub fn follow_path<T: Element>(kind: LieKind, start: &[T], colors: &[usize]) -> Option<Vec<T>> {
    let mut cur = start.to_vec();
    for &i in colors.iter().rev() {
        cur = word_f(kind, i, &cur)?;
    }
    Some(cur)
}

/// Canonical invariant for `∼`: the lowering path and the highest weight.
pub fn place_key<T: Element>(kind: LieKind, w: &[T]) -> (Vec<usize>, Weight) {
    let (hw, path) = highest_weight_path(kind, w);
    (path, word_weight(kind, &hw))
}

/// `w1 ∼ w2`: same place in isomorphic components.
pub fn same_place_equivalent<T: Element>(kind: LieKind, w1: &[T], w2: &[T]) -> bool {
    place_key(kind, w1) == place_key(kind, w2)
}

/// `w1 ↔ w2`: same connected component.
pub fn coplactic_equivalent<T: Element>(kind: LieKind, w1: &[T], w2: &[T]) -> bool {
    highest_weight_path(kind, w1).0 == highest_weight_path(kind, w2).0
}

/// `s_i(u) = f̃_i^{φ−ε}(u)` or `ẽ_i^{ε−φ}(u)`.
pub fn weyl_action<T: Element>(kind: LieKind, i: usize, w: &[T]) -> Vec<T> {
    let s = signature(kind, i, w);
    let out = if s.phi >= s.eps {
        word_f_pow(kind, i, w, s.phi - s.eps)
    } else {
        word_e_pow(kind, i, w, s.eps - s.phi)
    };
    out.expect("string lengths are given by the signature")
}

/// Simple reflection on a doubled weight.
pub fn reflect_weight(kind: LieKind, i: usize, wt: &Weight) -> Weight {
    let n = kind.rank();
    let mut v = wt.0.clone();
    if i < n {
        v.swap(i - 1, i);
    } else if kind.is_b() {
        v[n - 1] = -v[n - 1];
    } else {
        let (a, b) = (v[n - 2], v[n - 1]);
        v[n - 2] = -b;
        v[n - 1] = -a;
    }
    Weight(v)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component<T> {
    pub kind: LieKind,
    pub highest_weight_vertex: Vec<T>,
    /// Sorted by formatted word.
    pub vertices: Vec<Vec<T>>,
    /// `(from, color, to)` as vertex indices.
    pub edges: Vec<(usize, usize, usize)>,
}

impl<T: Element> Component<T> {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn index_of(&self, v: &[T]) -> Option<usize> {
        self.vertices.iter().position(|x| x.as_slice() == v)
    }

    pub fn contains(&self, v: &[T]) -> bool {
        self.index_of(v).is_some()
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph crystal {\n");
        for (k, v) in self.vertices.iter().enumerate() {
            s.push_str(&format!("  n{} [label=\"{}\"];\n", k, format_elements(v)));
        }
        for (a, i, b) in &self.edges {
            s.push_str(&format!("  n{a} -> n{b} [label=\"{i}\"];\n"));
        }
        s.push_str("}\n");
        s
    }
}

pub fn explore_component<T: Element>(kind: LieKind, hw: &[T]) -> Result<Component<T>> {
    explore_component_with(kind, hw, DEFAULT_COMPONENT_CAP, Exec::default())
}

pub fn explore_component_with<T: Element>(
    kind: LieKind,
    hw: &[T],
    cap: usize,
    exec: Exec,
) -> Result<Component<T>> {
    if !is_highest_weight(kind, hw) {
        return Err(Error::NotHighestWeight);
    }
    let n = kind.rank();
    let mut seen: HashSet<Vec<T>> = HashSet::new();
    seen.insert(hw.to_vec());
    let mut frontier = vec![hw.to_vec()];
    let mut raw_edges: Vec<(Vec<T>, usize, Vec<T>)> = Vec::new();
    while !frontier.is_empty() {
        let step = |v: &Vec<T>| -> Vec<(Vec<T>, usize, Vec<T>)> {
            (1..=n)
                .filter_map(|i| word_f(kind, i, v).map(|w| (v.clone(), i, w)))
                .collect()
        };
        let produced: Vec<(Vec<T>, usize, Vec<T>)> = exec.flat_map(&frontier, step);
        let mut next = Vec::new();
        for (a, i, b) in produced {
            if seen.insert(b.clone()) {
                if seen.len() > cap {
                    return Err(Error::ComponentTooLarge { cap });
                }
                next.push(b.clone());
            }
            raw_edges.push((a, i, b));
        }
        frontier = next;
    }
    let mut vertices: Vec<Vec<T>> = seen.into_iter().collect();
    vertices.sort_by_cached_key(|v| format_elements(v));
    let index: HashMap<&Vec<T>, usize> = vertices.iter().enumerate().map(|(k, v)| (v, k)).collect();
    let mut edges: Vec<(usize, usize, usize)> = raw_edges
        .iter()
        .map(|(a, i, b)| (index[a], *i, index[b]))
        .collect();
    edges.sort_unstable();
    Ok(Component { kind, highest_weight_vertex: hw.to_vec(), vertices, edges })
}

/// Split a highest weight vertex into standard generators `1⋯k`, `1⋯(n−1)n̄`,
/// or highest weight spin columns.
fn generator_factors(kind: LieKind, hw: &[GenLetter]) -> Result<Vec<(usize, usize)>> {
    let n = kind.rank();
    let mut out = Vec::new();
    let mut p = 0;
    while p < hw.len() {
        match hw[p] {
            GenLetter::Spin(c) => {
                if !is_highest_weight(kind, &[c]) {
                    return Err(Error::NotStretchable);
                }
                out.push((p, p + 1));
                p += 1;
            }
            GenLetter::Letter(x) => {
                if x != Letter::unbarred(1) {
                    return Err(Error::NotStretchable);
                }
                let mut k = 1;
                let mut q = p + 1;
                while q < hw.len() {
                    let next = match hw[q] {
                        GenLetter::Letter(y) => y,
                        GenLetter::Spin(_) => break,
                    };
                    let plain = k < n && next == Letter::unbarred(k + 1);
                    let bar_end = kind.is_d() && k + 1 == n && next == Letter::barred(n);
                    if plain || bar_end {
                        k += 1;
                        q += 1;
                        if bar_end {
                            break;
                        }
                    } else {
                        break;
                    }
                }
                out.push((p, q));
                p = q;
            }
        }
    }
    Ok(out)
}

/// The embedding `S_m` of a component into its `m`-fold stretch, by path following.
pub fn s_m_embed(kind: LieKind, v: &[GenLetter], m: usize) -> Result<Vec<GenLetter>> {
    if m == 0 {
        return Err(Error::Internal("stretch factor must be positive".into()));
    }
    let (hw, colors) = highest_weight_path(kind, v);
    let factors = generator_factors(kind, &hw)?;
    let mut stretched = Vec::with_capacity(hw.len() * m);
    for (a, b) in factors {
        for _ in 0..m {
            stretched.extend_from_slice(&hw[a..b]);
        }
    }
    let mut cur = stretched;
    for &i in colors.iter().rev() {
        cur = word_f_pow(kind, i, &cur, m as u32)
            .ok_or_else(|| Error::Internal("stretched path left the component".into()))?;
    }
    Ok(cur)
}

/// Letter-word convenience wrapper around [`s_m_embed`].
pub fn s_m_embed_letters(kind: LieKind, v: &[Letter], m: usize) -> Result<Vec<Letter>> {
    let g: Vec<GenLetter> = v.iter().map(|&x| GenLetter::Letter(x)).collect();
    Ok(s_m_embed(kind, &g, m)?
        .into_iter()
        .map(|x| x.as_letter().expect("letters stay letters"))
        .collect())
}

/// Check that two components are isomorphic as colored graphs by walking both
/// from their highest weight vertices in lockstep.
pub fn isomorphic_components<T: Element, U: Element>(kind: LieKind, a: &[T], b: &[U]) -> bool {
    let n = kind.rank();
    let mut map: HashMap<Vec<T>, Vec<U>> = HashMap::new();
    let mut back: HashSet<Vec<U>> = HashSet::new();
    let mut stack = vec![(a.to_vec(), b.to_vec())];
    map.insert(a.to_vec(), b.to_vec());
    back.insert(b.to_vec());
    while let Some((x, y)) = stack.pop() {
        for i in 1..=n {
            let (sx, sy) = (signature(kind, i, &x), signature(kind, i, &y));
            if sx.eps != sy.eps || sx.phi != sy.phi {
                return false;
            }
            match (word_f(kind, i, &x), word_f(kind, i, &y)) {
                (None, None) => {}
                (Some(fx), Some(fy)) => match map.get(&fx) {
                    Some(img) => {
                        if *img != fy {
                            return false;
                        }
                    }
                    None => {
                        if !back.insert(fy.clone()) {
                            return false;
                        }
                        map.insert(fx.clone(), fy.clone());
                        stack.push((fx, fy));
                    }
                },
                _ => return false,
            }
        }
    }
    true
}
