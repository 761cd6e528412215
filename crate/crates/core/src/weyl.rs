//! Weyl group elements, minimal coset representatives and Bruhat covers.
//!
//! An element is identified by its integer action matrix on the weight
//! lattice (fundamental-weight basis). Words are certificates: every element
//! carries its lexicographically smallest reduced word, 1-based.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::root_system::{ParabolicData, RootSystem, Weight};

/// Hard cap on `|W|`; larger groups are rejected rather than enumerated.
pub const MAX_GROUP_ORDER: usize = 46_080;

/// Square integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IMat {
    n: usize,
    d: Vec<i32>,
}

impl IMat {
    pub fn identity(n: usize) -> Self {
        let mut d = vec![0; n * n];
        for i in 0..n {
            d[i * n + i] = 1;
        }
        IMat { n, d }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i32 {
        self.d[i * self.n + j]
    }

    pub fn mul(&self, o: &IMat) -> IMat {
        let n = self.n;
        let mut d = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.d[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    d[i * n + j] += a * o.d[k * n + j];
                }
            }
        }
        IMat { n, d }
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.d[i * self.n + j] as i64 * v[j]).sum())
            .collect()
    }

    pub fn rows(&self) -> Vec<Vec<i32>> {
        self.d.chunks(self.n.max(1)).map(|r| r.to_vec()).collect()
    }
}

/// Matrix of `s_i` on fundamental-weight coordinates: `λ ↦ λ − λ_i α_i`.
fn simple_weight_matrix(rs: &RootSystem, i: usize) -> IMat {
    let n = rs.rank();
    let mut m = IMat::identity(n);
    for r in 0..n {
        m.d[r * n + (i - 1)] -= rs.cartan()[r][i - 1] as i32;
    }
    m
}

/// Matrix of `s_i` on simple-root coordinates: `c ↦ c − ⟨c, α_i^∨⟩ e_i`.
fn simple_root_matrix(rs: &RootSystem, i: usize) -> IMat {
    let n = rs.rank();
    let mut m = IMat::identity(n);
    for j in 0..n {
        m.d[(i - 1) * n + j] -= rs.cartan()[i - 1][j] as i32;
    }
    m
}

fn is_negative_root(v: &[i64]) -> bool {
    v.iter().any(|&c| c < 0)
}

/// A Weyl group element.
#[derive(Clone, Debug)]
pub struct WeylElement {
    action: IMat,
    root_action: IMat,
    length: usize,
    word: Vec<usize>,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.action == other.action
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.action.hash(state);
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            write!(f, "e")
        } else {
            write!(f, "{}", format_word(&self.word))
        }
    }
}

/// `[1,3,2]` ↦ `"1,3,2"`.
pub fn format_word(word: &[usize]) -> String {
    word.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
}

/// Parses `"1,3,2"`; the empty string and `"e"` give the empty word.
pub fn parse_word(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() || s == "e" {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad word '{s}' (expected e.g. 1,3,2)")))
        })
        .collect()
}

impl WeylElement {
    pub fn identity(rs: &RootSystem) -> Self {
        WeylElement {
            action: IMat::identity(rs.rank()),
            root_action: IMat::identity(rs.rank()),
            length: 0,
            word: Vec::new(),
        }
    }

    pub fn simple(rs: &RootSystem, i: usize) -> Result<Self> {
        Self::from_word(rs, &[i])
    }

    /// Product of simple reflections; the word need not be reduced.
    pub fn from_word(rs: &RootSystem, word: &[usize]) -> Result<Self> {
        if let Some(&bad) = word.iter().find(|&&i| i == 0 || i > rs.rank()) {
            return Err(Error::Invalid(format!(
                "word letter {bad} out of range 1..={}",
                rs.rank()
            )));
        }
        let mut action = IMat::identity(rs.rank());
        let mut root_action = IMat::identity(rs.rank());
        for &i in word {
            action = action.mul(&simple_weight_matrix(rs, i));
            root_action = root_action.mul(&simple_root_matrix(rs, i));
        }
        Ok(Self::from_matrices(rs, action, root_action))
    }

    fn from_matrices(rs: &RootSystem, action: IMat, root_action: IMat) -> Self {
        let mut el = WeylElement {
            action,
            root_action,
            length: 0,
            word: Vec::new(),
        };
        el.length = el.inversion_set(rs).len();
        el.word = el.lex_reduced_word(rs);
        el
    }

    /// Greedy smallest left descent, which yields the lexicographically
    /// smallest reduced word.
    fn lex_reduced_word(&self, rs: &RootSystem) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length);
        let mut cur = self.root_action.clone();
        loop {
            let images: Vec<Vec<i64>> = rs.positive_roots().iter().map(|b| cur.apply(b)).collect();
            let desc = (1..=rs.rank()).find(|&i| {
                images.iter().any(|im| {
                    im.iter()
                        .enumerate()
                        .all(|(k, &c)| c == if k + 1 == i { -1 } else { 0 })
                })
            });
            match desc {
                Some(i) => {
                    word.push(i);
                    cur = simple_root_matrix(rs, i).mul(&cur);
                }
                None => break,
            }
        }
        word
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// The reduced word as `"1,3,2"`, or `"e"` for the identity.
    pub fn word_string(&self) -> String {
        if self.word.is_empty() {
            return "e".into();
        }
        format_word(&self.word)
    }

    pub fn action(&self) -> &IMat {
        &self.action
    }

    pub fn root_action(&self) -> &IMat {
        &self.root_action
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    /// Composition `self ∘ other`.
    pub fn compose(&self, rs: &RootSystem, other: &WeylElement) -> WeylElement {
        Self::from_matrices(
            rs,
            self.action.mul(&other.action),
            self.root_action.mul(&other.root_action),
        )
    }

    pub fn inverse(&self, rs: &RootSystem) -> WeylElement {
        let rev: Vec<usize> = self.word.iter().rev().copied().collect();
        Self::from_word(rs, &rev).expect("valid word")
    }

    pub fn apply_weight(&self, w: &Weight) -> Weight {
        let n = self.action.n;
        Weight(
            (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| w.0[j] * crate::root_system::Rat::from_integer(self.action.get(i, j) as i64))
                        .sum()
                })
                .collect(),
        )
    }

    /// Image of a root (or any root-lattice vector) in simple-root coordinates.
    pub fn apply_root(&self, v: &[i64]) -> Vec<i64> {
        self.root_action.apply(v)
    }

    /// Indices of the positive roots `β` with `wβ < 0`, i.e. `R⁺ ∩ w⁻¹R⁻`.
    pub fn inversion_set(&self, rs: &RootSystem) -> Vec<usize> {
        rs.positive_roots()
            .iter()
            .enumerate()
            .filter(|(_, b)| is_negative_root(&self.root_action.apply(b)))
            .map(|(k, _)| k)
            .collect()
    }

    /// Whether `ℓ(w s_i) < ℓ(w)`, i.e. `w(α_i) < 0`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        let n = self.root_action.n;
        (0..n).any(|r| self.root_action.get(r, i - 1) < 0)
    }

    /// The reflection `s_β` for a positive root given by index.
    pub fn reflection(rs: &RootSystem, root_idx: usize) -> WeylElement {
        let beta = &rs.positive_roots()[root_idx];
        let n = rs.rank();
        let beta_w = rs.root_to_weight(beta);
        let hn = rs.root_half_norm(beta);
        // ⟨λ, β^∨⟩ = Σ_i β_i d_i λ_i / d_β
        let coroot: Vec<i32> = (0..n)
            .map(|i| {
                let c = crate::root_system::Rat::from_integer(beta[i]) * rs.half_norm(i + 1) / hn;
                debug_assert!(c.is_integer());
                c.to_integer() as i32
            })
            .collect();
        let mut action = IMat::identity(n);
        for r in 0..n {
            let br = beta_w.0[r].to_integer() as i32;
            for c in 0..n {
                action.d[r * n + c] -= br * coroot[c];
            }
        }
        // In root coordinates: c ↦ c − ⟨c, β^∨⟩ β with ⟨α_j, β^∨⟩ = Σ_i β^∨_i a_ij.
        let mut root_action = IMat::identity(n);
        for r in 0..n {
            for c in 0..n {
                let pair: i32 = (0..n).map(|i| coroot[i] * rs.cartan()[i][c] as i32).sum();
                root_action.d[r * n + c] -= beta[r] as i32 * pair;
            }
        }
        Self::from_matrices(rs, action, root_action)
    }
}

/// The longest element of the parabolic subgroup generated by `simple`.
pub fn longest_in(rs: &RootSystem, simple: &[usize]) -> WeylElement {
    let mut cur = WeylElement::identity(rs);
    while let Some(&i) = simple.iter().find(|&&i| !cur.has_right_descent(i)) {
        cur = cur.compose(rs, &WeylElement::simple(rs, i).expect("valid index"));
    }
    cur
}

/// The whole Weyl group, enumerated once, sorted by (length, word), with
/// left and right multiplication tables by simple reflections.
#[derive(Debug)]
pub struct WeylGroup {
    elements: Vec<WeylElement>,
    index: HashMap<IMat, usize>,
    /// `left[i-1][k]` is the index of `s_i w_k`.
    left: Vec<Vec<usize>>,
    /// `right[i-1][k]` is the index of `w_k s_i`.
    right: Vec<Vec<usize>>,
    longest: usize,
}

impl WeylGroup {
    pub fn new(rs: &RootSystem) -> Result<Self> {
        let n = rs.rank();
        let sw: Vec<IMat> = (1..=n).map(|i| simple_weight_matrix(rs, i)).collect();
        let sr: Vec<IMat> = (1..=n).map(|i| simple_root_matrix(rs, i)).collect();

        // BFS by left multiplication, layer by layer.
        let mut mats: Vec<(IMat, IMat)> = vec![(IMat::identity(n), IMat::identity(n))];
        let mut lengths = vec![0usize];
        let mut index: HashMap<IMat, usize> = HashMap::new();
        index.insert(IMat::identity(n), 0);
        let mut left_desc: Vec<Vec<usize>> = vec![Vec::new()];
        let mut layer = vec![0usize];
        let mut len = 0;
        while !layer.is_empty() {
            let mut next = Vec::new();
            for &u in &layer {
                for i in 0..n {
                    let a = sw[i].mul(&mats[u].0);
                    match index.get(&a) {
                        Some(&v) => {
                            if lengths[v] == len + 1 && !left_desc[v].contains(&(i + 1)) {
                                left_desc[v].push(i + 1);
                            }
                        }
                        None => {
                            let r = sr[i].mul(&mats[u].1);
                            let v = mats.len();
                            if v >= MAX_GROUP_ORDER {
                                return Err(Error::Cap(format!(
                                    "Weyl group of {} exceeds {MAX_GROUP_ORDER} elements",
                                    rs.label()
                                )));
                            }
                            index.insert(a.clone(), v);
                            mats.push((a, r));
                            lengths.push(len + 1);
                            left_desc.push(vec![i + 1]);
                            next.push(v);
                        }
                    }
                }
            }
            layer = next;
            len += 1;
        }

        // Lex-smallest reduced words: word(w) = i_min · word(s_{i_min} w).
        let total = mats.len();
        let mut words: Vec<Vec<usize>> = vec![Vec::new(); total];
        for k in 1..total {
            let i = *left_desc[k].iter().min().expect("non-identity has a left descent");
            let parent = index[&sw[i - 1].mul(&mats[k].0)];
            let mut w = vec![i];
            w.extend_from_slice(&words[parent]);
            words[k] = w;
        }

        let mut order: Vec<usize> = (0..total).collect();
        order.sort_by(|&a, &b| lengths[a].cmp(&lengths[b]).then_with(|| words[a].cmp(&words[b])));
        let mut elements = Vec::with_capacity(total);
        let mut index = HashMap::with_capacity(total);
        for (new_k, &old) in order.iter().enumerate() {
            let (a, r) = mats[old].clone();
            index.insert(a.clone(), new_k);
            elements.push(WeylElement {
                action: a,
                root_action: r,
                length: lengths[old],
                word: words[old].clone(),
            });
        }
        let mut left = vec![vec![0; total]; n];
        let mut right = vec![vec![0; total]; n];
        for (k, el) in elements.iter().enumerate() {
            for i in 0..n {
                left[i][k] = index[&sw[i].mul(&el.action)];
                right[i][k] = index[&el.action.mul(&sw[i])];
            }
        }
        Ok(WeylGroup {
            longest: total - 1,
            elements,
            index,
            left,
            right,
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn get(&self, k: usize) -> &WeylElement {
        &self.elements[k]
    }

    pub fn index_of(&self, w: &WeylElement) -> Option<usize> {
        self.index.get(&w.action).copied()
    }

    pub fn longest(&self) -> usize {
        self.longest
    }

    /// Index of `s_i w_k` (1-based `i`).
    pub fn left_mul(&self, i: usize, k: usize) -> usize {
        self.left[i - 1][k]
    }

    /// Index of `w_k s_i` (1-based `i`).
    pub fn right_mul(&self, i: usize, k: usize) -> usize {
        self.right[i - 1][k]
    }

    pub fn compose(&self, a: usize, b: usize) -> usize {
        let mut cur = a;
        for &i in self.elements[b].word() {
            cur = self.right_mul(i, cur);
        }
        cur
    }
}

/// A Bruhat cover `v →β w` inside `W^P`: `w = s_β v`, `ℓ(w) = ℓ(v) + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cover {
    pub v: usize,
    pub w: usize,
    /// Index of `β` in the positive-root list.
    pub beta: usize,
}

/// `W^P` sorted by (length, word), with its Bruhat covers.
#[derive(Debug, Clone)]
pub struct CosetTable {
    elements: Vec<WeylElement>,
    group_index: Vec<usize>,
    lookup: HashMap<IMat, usize>,
    covers: Vec<Cover>,
    longest_levi: WeylElement,
    longest_levi_index: usize,
}

impl CosetTable {
    pub fn new(rs: &RootSystem, group: &WeylGroup, p: &ParabolicData) -> Self {
        let mut elements = Vec::new();
        let mut group_index = Vec::new();
        for (k, el) in group.elements().iter().enumerate() {
            if p.levi_simple.iter().all(|&i| !el.has_right_descent(i)) {
                elements.push(el.clone());
                group_index.push(k);
            }
        }
        let lookup: HashMap<IMat, usize> = elements
            .iter()
            .enumerate()
            .map(|(k, e)| (e.action.clone(), k))
            .collect();
        let reflections: Vec<WeylElement> = (0..rs.num_positive_roots())
            .map(|b| WeylElement::reflection(rs, b))
            .collect();
        let mut covers = Vec::new();
        for (vi, v) in elements.iter().enumerate() {
            for (b, sb) in reflections.iter().enumerate() {
                let a = sb.action.mul(&v.action);
                if let Some(&wi) = lookup.get(&a) {
                    if elements[wi].length == v.length + 1 {
                        covers.push(Cover { v: vi, w: wi, beta: b });
                    }
                }
            }
        }
        let longest_levi = longest_in(rs, &p.levi_simple);
        let longest_levi_index = group.index_of(&longest_levi).expect("element of W");
        CosetTable {
            elements,
            group_index,
            lookup,
            covers,
            longest_levi,
            longest_levi_index,
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn get(&self, k: usize) -> &WeylElement {
        &self.elements[k]
    }

    pub fn group_index(&self, k: usize) -> usize {
        self.group_index[k]
    }

    pub fn covers(&self) -> &[Cover] {
        &self.covers
    }

    pub fn index_of(&self, w: &WeylElement) -> Option<usize> {
        self.lookup.get(&w.action).copied()
    }

    /// Position of a `W`-index in the table, if it lies in `W^P`.
    pub fn position_of_group_index(&self, g: usize) -> Option<usize> {
        self.group_index.binary_search(&g).ok()
    }

    /// `w_o^P`, the longest element of `W_P`.
    pub fn longest_levi(&self) -> &WeylElement {
        &self.longest_levi
    }

    pub fn longest_levi_group_index(&self) -> usize {
        self.longest_levi_index
    }

    /// The identity coset (always position 0).
    pub fn identity(&self) -> usize {
        0
    }

    /// The longest element of `W^P` (always last).
    pub fn top(&self) -> usize {
        self.elements.len() - 1
    }

    /// Looks up a word (any word for the element) in `W^P`.
    pub fn find_word(&self, rs: &RootSystem, word: &[usize]) -> Result<usize> {
        let el = WeylElement::from_word(rs, word)?;
        self.index_of(&el)
            .ok_or_else(|| Error::NotInWP(format!("word '{}'", format_word(word))))
    }

    /// `w ↦ w_0 w w_0^P`, the Poincaré-duality involution on `W^P`.
    pub fn dual_rep(&self, group: &WeylGroup, k: usize) -> usize {
        let g = group.compose(group.longest(), self.group_index[k]);
        let g = group.compose(g, self.longest_levi_index);
        self.position_of_group_index(g)
            .expect("w0 w w0^P is a minimal coset representative")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::TypeLetter;

    fn setup(l: TypeLetter, n: usize) -> (RootSystem, WeylGroup) {
        let rs = RootSystem::build(l, n).unwrap();
        let g = WeylGroup::new(&rs).unwrap();
        (rs, g)
    }

    #[test]
    fn from_word_examples() {
        let rs = RootSystem::build(TypeLetter::C, 3).unwrap();
        let e = WeylElement::from_word(&rs, &[]).unwrap();
        assert_eq!(e.length(), 0);
        let e2 = WeylElement::from_word(&rs, &[1, 1]).unwrap();
        assert_eq!(e, e2);
        assert!(e2.is_identity());
        let w = WeylElement::from_word(&rs, &[1, 3, 2, 1, 3, 2]).unwrap();
        assert_eq!(w.length(), 6);
        assert!(WeylElement::from_word(&rs, &[4]).is_err());
    }

    #[test]
    fn group_orders() {
        let cases = [
            (TypeLetter::A, 1, 2),
            (TypeLetter::A, 2, 6),
            (TypeLetter::A, 3, 24),
            (TypeLetter::B, 2, 8),
            (TypeLetter::B, 3, 48),
            (TypeLetter::C, 3, 48),
            (TypeLetter::D, 4, 192),
            (TypeLetter::G, 2, 12),
        ];
        for (l, n, ord) in cases {
            let (_, g) = setup(l, n);
            assert_eq!(g.order(), ord, "{l}{n}");
        }
    }

    #[test]
    fn inversion_sets() {
        let (rs, g) = setup(TypeLetter::B, 3);
        assert!(g.get(0).inversion_set(&rs).is_empty());
        let s1 = WeylElement::simple(&rs, 1).unwrap();
        assert_eq!(s1.inversion_set(&rs), vec![0]);
        let w0 = g.get(g.longest());
        assert_eq!(w0.inversion_set(&rs).len(), rs.num_positive_roots());
        // Σ over R⁺ ∩ w⁻¹R⁻ equals ρ − w⁻¹ρ
        for w in g.elements() {
            let inv = w.inversion_set(&rs);
            assert_eq!(inv.len(), w.length());
            let mut sum = vec![0i64; rs.rank()];
            for &k in &inv {
                for (s, c) in sum.iter_mut().zip(&rs.positive_roots()[k]) {
                    *s += c;
                }
            }
            let winv = w.inverse(&rs);
            let expect = rs.rho() - &winv.apply_weight(rs.rho());
            assert_eq!(rs.root_to_weight(&sum), expect);
        }
    }

    #[test]
    fn words_reproduce_elements() {
        let (rs, g) = setup(TypeLetter::G, 2);
        for w in g.elements() {
            let again = WeylElement::from_word(&rs, w.word()).unwrap();
            assert_eq!(&again, w);
            assert_eq!(again.word(), w.word());
            assert_eq!(again.length(), w.word().len());
        }
    }

    #[test]
    fn longest_elements() {
        let rs = RootSystem::build(TypeLetter::A, 1).unwrap();
        assert_eq!(longest_in(&rs, &[1]).word(), &[1]);
        let rs = RootSystem::build(TypeLetter::A, 2).unwrap();
        let w0 = longest_in(&rs, &[1, 2]);
        assert_eq!(w0.length(), 3);
        assert_eq!(w0, WeylElement::from_word(&rs, &[1, 2, 1]).unwrap());
        let rs = RootSystem::build(TypeLetter::C, 3).unwrap();
        let wp = longest_in(&rs, &[1, 3]);
        assert_eq!(wp.word(), &[1, 3]);
        // involution
        assert!(wp.compose(&rs, &wp).is_identity());
    }

    #[test]
    fn coset_tables() {
        let (rs, g) = setup(TypeLetter::A, 1);
        let p = ParabolicData::new(&rs, &[]).unwrap();
        assert_eq!(CosetTable::new(&rs, &g, &p).len(), 2);

        let (rs, g) = setup(TypeLetter::C, 3);
        let p = ParabolicData::from_crossed(&rs, &[3]).unwrap();
        let t = CosetTable::new(&rs, &g, &p);
        assert_eq!(t.len(), 8);
        for cov in t.covers() {
            let (v, w) = (t.get(cov.v), t.get(cov.w));
            assert_eq!(w.length(), v.length() + 1);
            let sb = WeylElement::reflection(&rs, cov.beta);
            assert_eq!(&sb.compose(&rs, v), w);
        }
        for k in 0..t.len() {
            let d = t.dual_rep(&g, k);
            assert_eq!(t.dual_rep(&g, d), k);
            assert_eq!(t.get(d).length(), p.dim_gp - t.get(k).length());
        }
        assert_eq!(t.dual_rep(&g, t.identity()), t.top());
    }
}
