//! Cartan data, positive roots and exact weight arithmetic.
//!
//! Simple roots are numbered as in Bourbaki's plates:
//!
//! | type | diagram                         | notes                         |
//! |------|---------------------------------|-------------------------------|
//! | A_l  | 1 - 2 - ... - l                 |                               |
//! | B_l  | 1 - 2 - ... - (l-1) => l        | `alpha_l` short               |
//! | C_l  | 1 - 2 - ... - (l-1) <= l        | `alpha_l` long                |
//! | D_l  | 1 - ... - (l-2) < (l-1), l      | branch at `l-2`               |
//! | G_2  | 1 <= 2 (triple bond)            | `alpha_1` short, θ = 3α1+2α2  |
//!
//! Roots are integer vectors in the simple-root basis. Weights are rational
//! vectors in the fundamental-weight basis, so `⟨λ, α_i^∨⟩` is coordinate `i`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Rat = Rational64;

/// Root-system family supported by [`RootSystem::build`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TypeLetter {
    A,
    B,
    C,
    D,
    G,
}

impl TypeLetter {
    pub fn parse(c: char) -> Result<Self> {
        match c.to_ascii_uppercase() {
            'A' => Ok(TypeLetter::A),
            'B' => Ok(TypeLetter::B),
            'C' => Ok(TypeLetter::C),
            'D' => Ok(TypeLetter::D),
            'G' => Ok(TypeLetter::G),
            other => Err(Error::Unsupported(format!("root system type '{other}'"))),
        }
    }

    fn rank_range(self) -> (usize, usize) {
        match self {
            TypeLetter::A => (1, 7),
            TypeLetter::B | TypeLetter::C => (2, 5),
            TypeLetter::D => (4, 5),
            TypeLetter::G => (2, 2),
        }
    }
}

impl fmt::Display for TypeLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            TypeLetter::A => 'A',
            TypeLetter::B => 'B',
            TypeLetter::C => 'C',
            TypeLetter::D => 'D',
            TypeLetter::G => 'G',
        };
        write!(f, "{c}")
    }
}

/// A (type, rank) pair such as `C3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupType {
    pub letter: TypeLetter,
    pub rank: usize,
}

impl GroupType {
    pub fn new(letter: TypeLetter, rank: usize) -> Self {
        GroupType { letter, rank }
    }

    /// Parses strings like `"C3"` or `"g2"`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars
            .next()
            .ok_or_else(|| Error::Parse("empty group name".into()))?;
        let letter = TypeLetter::parse(letter)?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Parse(format!("bad group name '{s}' (expected e.g. C3)")))?;
        Ok(GroupType { letter, rank })
    }
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter, self.rank)
    }
}

/// A weight in the fundamental-weight basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<Rat>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![Rat::zero(); rank])
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Weight(coords.iter().map(|&c| Rat::from_integer(c)).collect())
    }

    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = Weight::zero(rank);
        w.0[i - 1] = Rat::one();
        w
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// `⟨λ, α_i^∨⟩` for the 1-based simple root index `i`.
    pub fn coord(&self, i: usize) -> Rat {
        self.0[i - 1]
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|c| !c.is_negative())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    /// Integer coordinates, if the weight is integral.
    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.0
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    pub fn scale(&self, k: Rat) -> Weight {
        Weight(self.0.iter().map(|c| *c * k).collect())
    }

    /// Restriction to the coordinates listed in `simple` (1-based).
    pub fn restrict(&self, simple: &[usize]) -> Weight {
        Weight(simple.iter().map(|&i| self.coord(i)).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

impl Mul<&Weight> for Rat {
    type Output = Weight;
    fn mul(self, rhs: &Weight) -> Weight {
        rhs.scale(self)
    }
}

/// Cartan data and positive roots of a (possibly reducible) root system.
#[derive(Clone, Debug)]
pub struct RootSystem {
    kind: Option<GroupType>,
    rank: usize,
    /// `cartan[i][j] = ⟨α_j, α_i^∨⟩`, 0-based.
    cartan: Vec<Vec<i64>>,
    cartan_inv: Vec<Vec<Rat>>,
    /// `(α_i, α_i) / 2`, normalized so the first node of each component is 1.
    half_norms: Vec<Rat>,
    positive_roots: Vec<Vec<i64>>,
    root_index: HashMap<Vec<i64>, usize>,
    rho: Weight,
}

impl RootSystem {
    /// Standard Cartan data for a supported simple type.
    pub fn build(letter: TypeLetter, rank: usize) -> Result<Self> {
        let (lo, hi) = letter.rank_range();
        if rank < lo || rank > hi {
            return Err(Error::Unsupported(format!(
                "{letter}{rank}: supported ranks for type {letter} are {lo}..={hi}"
            )));
        }
        let mut a = vec![vec![0i64; rank]; rank];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let chain = |a: &mut Vec<Vec<i64>>, upto: usize| {
            for i in 0..upto.saturating_sub(1) {
                a[i][i + 1] = -1;
                a[i + 1][i] = -1;
            }
        };
        match letter {
            TypeLetter::A => chain(&mut a, rank),
            TypeLetter::B => {
                chain(&mut a, rank);
                // alpha_l short: <alpha_{l-1}, alpha_l^vee> = -2
                a[rank - 1][rank - 2] = -2;
            }
            TypeLetter::C => {
                chain(&mut a, rank);
                a[rank - 2][rank - 1] = -2;
            }
            TypeLetter::D => {
                chain(&mut a, rank - 1);
                a[rank - 2][rank - 1] = 0;
                a[rank - 1][rank - 2] = 0;
                a[rank - 3][rank - 1] = -1;
                a[rank - 1][rank - 3] = -1;
            }
            TypeLetter::G => {
                a[0][1] = -3;
                a[1][0] = -1;
            }
        }
        let mut rs = Self::from_cartan(a)?;
        rs.kind = Some(GroupType::new(letter, rank));
        Ok(rs)
    }

    pub fn from_type(g: GroupType) -> Result<Self> {
        Self::build(g.letter, g.rank)
    }

    /// Builds the root system of an arbitrary (finite-type) Cartan matrix.
    /// Rank 0 is allowed and yields the empty system.
    pub fn from_cartan(cartan: Vec<Vec<i64>>) -> Result<Self> {
        let rank = cartan.len();
        for (i, row) in cartan.iter().enumerate() {
            if row.len() != rank {
                return Err(Error::Invalid("Cartan matrix is not square".into()));
            }
            for (j, &v) in row.iter().enumerate() {
                if (i == j && v != 2) || (i != j && v > 0) {
                    return Err(Error::Invalid(format!("bad Cartan entry a[{i}][{j}] = {v}")));
                }
                if i != j && (v == 0) != (cartan[j][i] == 0) {
                    return Err(Error::Invalid("Cartan matrix zero pattern is not symmetric".into()));
                }
            }
        }
        let cartan_inv = invert(&cartan)
            .ok_or_else(|| Error::Invalid("Cartan matrix is singular".into()))?;
        let half_norms = symmetrizer(&cartan)?;
        let positive_roots = generate_positive_roots(&cartan)?;
        let root_index = positive_roots
            .iter()
            .enumerate()
            .map(|(k, r)| (r.clone(), k))
            .collect();
        let mut rs = RootSystem {
            kind: None,
            rank,
            cartan,
            cartan_inv,
            half_norms,
            positive_roots,
            root_index,
            rho: Weight::zero(rank),
        };
        rs.rho = Weight(vec![Rat::one(); rank]);
        Ok(rs)
    }

    pub fn kind(&self) -> Option<GroupType> {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// `⟨α_j, α_i^∨⟩` with 1-based indices.
    pub fn cartan_entry(&self, i: usize, j: usize) -> i64 {
        self.cartan[i - 1][j - 1]
    }

    pub fn inverse_cartan(&self) -> &[Vec<Rat>] {
        &self.cartan_inv
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    /// Index of a positive root given in simple-root coordinates.
    pub fn root_index(&self, root: &[i64]) -> Option<usize> {
        self.root_index.get(root).copied()
    }

    /// Index of the simple root `α_i` (1-based `i`) in the positive-root list.
    pub fn simple_root_index(&self, i: usize) -> usize {
        i - 1
    }

    pub fn is_simple_root(&self, root: &[i64]) -> bool {
        root.iter().filter(|&&c| c != 0).count() == 1 && root.iter().sum::<i64>() == 1
    }

    /// The unique highest root of an irreducible system.
    pub fn highest_root(&self) -> Option<&[i64]> {
        let max_h = self.positive_roots.iter().map(|r| height(r)).max()?;
        let mut top = self.positive_roots.iter().filter(|r| height(r) == max_h);
        let first = top.next()?;
        top.next().is_none().then_some(first.as_slice())
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    /// `(α_i, α_i)/2` for the invariant form used by [`Self::inner`].
    pub fn half_norm(&self, i: usize) -> Rat {
        self.half_norms[i - 1]
    }

    /// The weight of a root given in simple-root coordinates.
    pub fn root_to_weight(&self, root: &[i64]) -> Weight {
        Weight(
            (0..self.rank)
                .map(|i| {
                    Rat::from_integer((0..self.rank).map(|j| self.cartan[i][j] * root[j]).sum())
                })
                .collect(),
        )
    }

    pub fn simple_root_weight(&self, i: usize) -> Weight {
        let mut e = vec![0; self.rank];
        e[i - 1] = 1;
        self.root_to_weight(&e)
    }

    /// Simple-root coordinates of a weight.
    pub fn weight_to_root_coords(&self, w: &Weight) -> Vec<Rat> {
        (0..self.rank)
            .map(|j| {
                (0..self.rank)
                    .map(|i| self.cartan_inv[j][i] * w.0[i])
                    .sum()
            })
            .collect()
    }

    pub fn root_coords_to_weight(&self, c: &[Rat]) -> Weight {
        Weight(
            (0..self.rank)
                .map(|i| {
                    (0..self.rank)
                        .map(|j| Rat::from_integer(self.cartan[i][j]) * c[j])
                        .sum()
                })
                .collect(),
        )
    }

    /// `λ(x_j)`: the coefficient of `α_j` when `λ` is expanded in simple roots.
    pub fn eval_at_x(&self, w: &Weight, j: usize) -> Result<Rat> {
        if j == 0 || j > self.rank {
            return Err(Error::Invalid(format!("simple root index {j} out of range 1..={}", self.rank)));
        }
        Ok((0..self.rank).map(|i| self.cartan_inv[j - 1][i] * w.0[i]).sum())
    }

    /// `λ(x_P)`: sum of `λ(x_j)` over the simple roots outside `Δ(P)`.
    pub fn eval_at_xp(&self, w: &Weight, p: &ParabolicData) -> Rat {
        let c = self.weight_to_root_coords(w);
        p.crossed.iter().map(|&j| c[j - 1]).sum()
    }

    /// `β(x_P)` for a root in simple-root coordinates.
    pub fn root_at_xp(root: &[i64], p: &ParabolicData) -> i64 {
        p.crossed.iter().map(|&j| root[j - 1]).sum()
    }

    /// W-invariant form `(λ, μ)`.
    pub fn inner(&self, a: &Weight, b: &Weight) -> Rat {
        let cb = self.weight_to_root_coords(b);
        (0..self.rank)
            .map(|j| a.0[j] * self.half_norms[j] * cb[j])
            .sum()
    }

    /// `⟨λ, β^∨⟩` for a root `β` in simple-root coordinates.
    pub fn pair_coroot(&self, w: &Weight, root: &[i64]) -> Rat {
        let num: Rat = (0..self.rank)
            .map(|i| Rat::from_integer(root[i]) * self.half_norms[i] * w.0[i])
            .sum();
        num / self.root_half_norm(root)
    }

    /// `(β, β)/2`.
    pub fn root_half_norm(&self, root: &[i64]) -> Rat {
        let w = self.root_to_weight(root);
        self.inner(&w, &w) / Rat::from_integer(2)
    }

    /// `s_i λ` for a 1-based simple index.
    pub fn reflect_weight(&self, w: &Weight, i: usize) -> Weight {
        let k = w.0[i - 1];
        Weight(
            (0..self.rank)
                .map(|m| w.0[m] - k * Rat::from_integer(self.cartan[m][i - 1]))
                .collect(),
        )
    }

    /// Reflects into the closed dominant chamber; returns the image and the
    /// number of simple reflections used (its parity is the sign).
    pub fn to_dominant(&self, w: &Weight) -> (Weight, usize) {
        let mut cur = w.clone();
        let mut steps = 0;
        while let Some(i) = cur.0.iter().position(|c| c.is_negative()) {
            cur = self.reflect_weight(&cur, i + 1);
            steps += 1;
        }
        (cur, steps)
    }

    /// `½ Σ` of the positive roots supported on `levi_simple` (1-based).
    pub fn rho_levi(&self, levi_simple: &[usize]) -> Weight {
        let mut sum = vec![0i64; self.rank];
        for r in &self.positive_roots {
            if supported_on(r, levi_simple) {
                for (s, c) in sum.iter_mut().zip(r) {
                    *s += c;
                }
            }
        }
        self.root_to_weight(&sum).scale(Rat::new(1, 2))
    }

    /// The connected components of the Dynkin diagram restricted to `nodes`.
    pub fn components(&self, nodes: &[usize]) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.rank + 1];
        let mut out = Vec::new();
        for &start in nodes {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut k = 0;
            while k < comp.len() {
                let i = comp[k];
                for &j in nodes {
                    if !seen[j] && self.cartan[i - 1][j - 1] != 0 {
                        seen[j] = true;
                        comp.push(j);
                    }
                }
                k += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The root system with Cartan matrix restricted to `nodes` (1-based).
    pub fn sub_system(&self, nodes: &[usize]) -> Result<RootSystem> {
        let a = nodes
            .iter()
            .map(|&i| nodes.iter().map(|&j| self.cartan[i - 1][j - 1]).collect())
            .collect();
        RootSystem::from_cartan(a)
    }

    pub fn label(&self) -> String {
        match self.kind {
            Some(k) => k.to_string(),
            None => format!("rank{}", self.rank),
        }
    }
}

pub fn height(root: &[i64]) -> i64 {
    root.iter().sum()
}

/// True when `root` has no support outside `simple` (1-based indices).
pub fn supported_on(root: &[i64], simple: &[usize]) -> bool {
    root.iter()
        .enumerate()
        .all(|(k, &c)| c == 0 || simple.contains(&(k + 1)))
}

fn invert(a: &[Vec<i64>]) -> Option<Vec<Vec<Rat>>> {
    let n = a.len();
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Rat> = row.iter().map(|&v| Rat::from_integer(v)).collect();
            r.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        let p = m[col][col];
        for v in m[col].iter_mut() {
            *v /= p;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col];
                let pivot_row = m[col].clone();
                for (v, pv) in m[r].iter_mut().zip(pivot_row) {
                    *v -= f * pv;
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

fn symmetrizer(a: &[Vec<i64>]) -> Result<Vec<Rat>> {
    let n = a.len();
    let mut d: Vec<Option<Rat>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(Rat::one());
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            let di = d[i].unwrap();
            for j in 0..n {
                if i == j || a[i][j] == 0 {
                    continue;
                }
                // d_i a_ij = d_j a_ji
                let dj = di * Rat::new(a[i][j], a[j][i]);
                match d[j] {
                    None => {
                        d[j] = Some(dj);
                        stack.push(j);
                    }
                    Some(existing) if existing != dj => {
                        return Err(Error::Invalid("Cartan matrix is not symmetrizable".into()));
                    }
                    _ => {}
                }
            }
        }
    }
    Ok(d.into_iter().map(Option::unwrap).collect())
}

/// Positive roots by height, using α-strings: for a positive root β ≠ α_i,
/// β + α_i is a root iff p − ⟨β, α_i^∨⟩ > 0, where p is the length of the
/// downward α_i-string through β.
fn generate_positive_roots(a: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    let n = a.len();
    let mut roots: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = 1;
            e
        })
        .collect();
    let mut known: std::collections::HashSet<Vec<i64>> = roots.iter().cloned().collect();
    let mut layer: Vec<Vec<i64>> = roots.clone();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..n {
                let pairing: i64 = (0..n).map(|j| a[i][j] * beta[j]).sum();
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if known.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        roots.extend(next.iter().cloned());
        layer = next;
        if roots.len() > 10_000 {
            return Err(Error::Invalid("Cartan matrix is not of finite type".into()));
        }
    }
    roots.sort_by(|x, y| height(x).cmp(&height(y)).then_with(|| y.cmp(x)));
    Ok(roots)
}

/// A standard parabolic, given by its Levi simple roots `Δ(P)`.
#[derive(Clone, Debug)]
pub struct ParabolicData {
    /// `Δ(P)`, 1-based and sorted.
    pub levi_simple: Vec<usize>,
    /// `Δ ∖ Δ(P)`, the crossed nodes.
    pub crossed: Vec<usize>,
    /// Indices (into the positive-root list) of `R_𝔩⁺`.
    pub levi_positive_roots: Vec<usize>,
    pub rho_levi: Weight,
    pub dim_gp: usize,
    /// `θ(x_P)`; zero when `P = G`.
    pub m_o: i64,
}

impl ParabolicData {
    pub fn new(rs: &RootSystem, levi_simple: &[usize]) -> Result<Self> {
        let mut levi: Vec<usize> = levi_simple.to_vec();
        levi.sort_unstable();
        levi.dedup();
        if let Some(&bad) = levi.iter().find(|&&i| i == 0 || i > rs.rank()) {
            return Err(Error::Invalid(format!("simple root index {bad} out of range 1..={}", rs.rank())));
        }
        let crossed: Vec<usize> = (1..=rs.rank()).filter(|i| !levi.contains(i)).collect();
        let levi_positive_roots: Vec<usize> = rs
            .positive_roots()
            .iter()
            .enumerate()
            .filter(|(_, r)| supported_on(r, &levi))
            .map(|(k, _)| k)
            .collect();
        let rho_levi = rs.rho_levi(&levi);
        let dim_gp = rs.num_positive_roots() - levi_positive_roots.len();
        let mut p = ParabolicData {
            levi_simple: levi,
            crossed,
            levi_positive_roots,
            rho_levi,
            dim_gp,
            m_o: 0,
        };
        // For reducible systems take the max over components' top roots.
        p.m_o = rs
            .positive_roots()
            .iter()
            .map(|r| RootSystem::root_at_xp(r, &p))
            .max()
            .unwrap_or(0);
        Ok(p)
    }

    /// Parabolic given by its crossed nodes `Δ ∖ Δ(P)`.
    pub fn from_crossed(rs: &RootSystem, crossed: &[usize]) -> Result<Self> {
        if let Some(&bad) = crossed.iter().find(|&&i| i == 0 || i > rs.rank()) {
            return Err(Error::Invalid(format!("simple root index {bad} out of range 1..={}", rs.rank())));
        }
        let levi: Vec<usize> = (1..=rs.rank()).filter(|i| !crossed.contains(i)).collect();
        Self::new(rs, &levi)
    }

    pub fn is_levi_root(&self, idx: usize) -> bool {
        self.levi_positive_roots.binary_search(&idx).is_ok()
    }

    pub fn is_maximal(&self) -> bool {
        self.crossed.len() == 1
    }
}
