//! Littlewood–Richardson coefficients by tableau enumeration, the partition
//! labels of Grassmannian and Lagrangian Grassmannian cells, and a
//! saturation-style check of LR coefficients equal to one.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::flag::FlagVariety;

/// A partition; trailing zeros are dropped.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: &[u32]) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid(format!("{parts:?} is not weakly decreasing")));
        }
        let mut p = parts.to_vec();
        while p.last() == Some(&0) {
            p.pop();
        }
        Ok(Partition { parts: p })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// Parses `"3,1"`; the empty string is the empty partition.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|x| x.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad part '{x}' in '{s}'"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(&parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// `λ_i` (1-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let m = self.part(1);
        let parts = (1..=m).map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32).collect();
        Partition { parts }
    }

    pub fn contains(&self, other: &Partition) -> bool {
        (1..=other.len()).all(|i| self.part(i) >= other.part(i))
    }

    /// Whether the diagram fits in an `r × k` box.
    pub fn fits(&self, r: usize, k: u32) -> bool {
        self.len() <= r && self.part(1) <= k
    }

    pub fn scale(&self, n: u32) -> Partition {
        Partition {
            parts: self.parts.iter().map(|p| p * n).collect(),
        }
    }

    /// `(λ_1 − λ_2, …, λ_{r−1} − λ_r)`: the `SL(r)` highest weight.
    pub fn sl_weight(&self, r: usize) -> Vec<i64> {
        (1..r).map(|i| self.part(i) as i64 - self.part(i + 1) as i64).collect()
    }

    /// All partitions in the `r × k` box, by size then lexicographically.
    pub fn in_box(r: usize, k: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(r: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            out.push(Partition::new(cur).expect("decreasing"));
            if cur.len() == r {
                return;
            }
            for p in 1..=max {
                cur.push(p);
                rec(r, p, cur, out);
                cur.pop();
            }
        }
        rec(r, k, &mut cur, &mut out);
        out.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| b.parts.cmp(&a.parts)));
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join_parts(&self.parts))
    }
}

fn join_parts(parts: &[u32]) -> String {
    parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
}

/// Serialized as the part list `"3,1"`.
impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&join_parts(&self.parts))
    }
}

/// Serialized as `{"parts": "3,1", "strict": true}`.
impl Serialize for StrictPartition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("StrictPartition", 2)?;
        st.serialize_field("parts", &join_parts(&self.parts))?;
        st.serialize_field("strict", &true)?;
        st.end()
    }
}

/// A strict partition with parts at most `ℓ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct StrictPartition {
    parts: Vec<u32>,
}

impl StrictPartition {
    pub fn new(parts: &[u32]) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] <= w[1]) || parts.contains(&0) {
            return Err(Error::Invalid(format!("{parts:?} is not a strict partition")));
        }
        Ok(StrictPartition { parts: parts.to_vec() })
    }

    pub fn parse(s: &str) -> Result<Self> {
        let p = Partition::parse(s)?;
        Self::new(p.parts())
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// All strict partitions with parts ≤ `l`.
    pub fn all(l: u32) -> Vec<StrictPartition> {
        let mut out = Vec::new();
        for mask in 0u32..(1 << l) {
            let parts: Vec<u32> = (1..=l).rev().filter(|i| mask & (1 << (i - 1)) != 0).collect();
            out.push(StrictPartition { parts });
        }
        out.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| b.parts.cmp(&a.parts)));
        out
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join_parts(&self.parts))
    }
}

/// `c^ν_{λ,μ}`: LR tableaux of shape `ν/λ` and content `μ`.
pub fn lr_coefficient(lam: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if nu.size() != lam.size() + mu.size() || !nu.contains(lam) {
        return 0;
    }
    // cells in reading order: rows top to bottom, right to left
    let rows = nu.len();
    let mut cells: Vec<(usize, u32)> = Vec::new();
    for i in 1..=rows {
        for j in (lam.part(i) + 1..=nu.part(i)).rev() {
            cells.push((i, j));
        }
    }
    let content: Vec<u32> = mu.parts().to_vec();
    let mut filling = vec![vec![0u32; nu.part(1) as usize + 1]; rows + 1];
    let mut counts = vec![0u32; content.len() + 2];
    let mut total = 0u64;
    lr_fill(&cells, 0, lam, &content, &mut filling, &mut counts, &mut total);
    total
}

fn lr_fill(
    cells: &[(usize, u32)],
    idx: usize,
    lam: &Partition,
    content: &[u32],
    filling: &mut Vec<Vec<u32>>,
    counts: &mut Vec<u32>,
    total: &mut u64,
) {
    if idx == cells.len() {
        *total += 1;
        return;
    }
    let (i, j) = cells[idx];
    let ju = j as usize;
    // weakly increasing along the row: ≤ the entry to the right
    let right = if ju + 1 < filling[i].len() && filling[i][ju + 1] != 0 {
        filling[i][ju + 1]
    } else {
        u32::MAX
    };
    // strictly increasing down columns
    let above = if i > 1 && j > lam.part(i - 1) { filling[i - 1][ju] } else { 0 };
    let hi = right.min(content.len() as u32);
    for v in (above + 1)..=hi {
        let vi = v as usize;
        if counts[vi] >= content[vi - 1] {
            continue;
        }
        if v > 1 && counts[vi] + 1 > counts[vi - 1] {
            continue;
        }
        counts[vi] += 1;
        filling[i][ju] = v;
        lr_fill(cells, idx + 1, lam, content, filling, counts, total);
        filling[i][ju] = 0;
        counts[vi] -= 1;
    }
}

/// `dim V_{GL(r)}(λ)` by the hook-content formula.
pub fn hook_content_dim(lam: &Partition, r: usize) -> BigInt {
    if lam.len() > r {
        return BigInt::from(0);
    }
    let conj = lam.conjugate();
    let mut out = BigRational::one();
    for i in 1..=lam.len() {
        for j in 1..=lam.part(i) {
            let content = r as i64 + j as i64 - i as i64;
            let hook = (lam.part(i) - j) as i64 + (conj.part(j as usize) as i64 - i as i64) + 1;
            out *= BigRational::new(BigInt::from(content), BigInt::from(hook));
        }
    }
    out.to_integer()
}

/// Finds the `W^P` element whose inversion set is exactly `roots`, and returns
/// the homological label of its class, `w₀ u w₀^P`.
fn class_with_inversions(fv: &FlagVariety, roots: &[Vec<i64>]) -> Result<usize> {
    let rs = fv.root_system();
    let mut want: Vec<usize> = roots
        .iter()
        .map(|r| rs.root_index(r).ok_or_else(|| Error::Internal(format!("{r:?} is not a root"))))
        .collect::<Result<_>>()?;
    want.sort_unstable();
    for u in 0..fv.len() {
        let el = fv.element(u);
        if el.length() != want.len() {
            continue;
        }
        let mut inv = el.inversion_set(rs);
        inv.sort_unstable();
        if inv == want {
            return Ok(fv.schubert().dual(u));
        }
    }
    Err(Error::Internal("diagram does not match an inversion set".into()))
}

fn eps_diff(n: usize, i: usize, j: usize) -> Vec<i64> {
    // ε_i − ε_j = α_i + ⋯ + α_{j−1}
    let mut v = vec![0; n];
    for x in v.iter_mut().take(j - 1).skip(i - 1) {
        *x = 1;
    }
    v
}

fn check_flag(fv: &FlagVariety, letter: char, rank: usize, crossed: usize) -> Result<()> {
    let g = fv.group_type();
    if g.letter.to_string() != letter.to_string() || g.rank != rank || fv.parabolic().crossed != vec![crossed] {
        return Err(Error::Invalid(format!(
            "expected {letter}{rank} with crossed node {crossed}, got {fv:?}"
        )));
    }
    Ok(())
}

/// The Schubert class `σ_λ` of `Gr(r, r+k)` (type `A_{r+k−1}`, crossed node
/// `r`), as a homological label `[X_w]` with `codim = |λ|`.
pub fn grassmannian_bijection(fv: &FlagVariety, lam: &Partition, r: usize, k: usize) -> Result<usize> {
    check_flag(fv, 'A', r + k - 1, r)?;
    if !lam.fits(r, k as u32) {
        return Err(Error::Invalid(format!("{lam} does not fit in a {r}×{k} box")));
    }
    let n = r + k - 1;
    let mut roots = Vec::new();
    for a in 1..=lam.len() {
        for b in 1..=lam.part(a) as usize {
            roots.push(eps_diff(n, r + 1 - a, r + b));
        }
    }
    class_with_inversions(fv, &roots)
}

/// The Schubert class of `LG(ℓ, 2ℓ)` (type `C_ℓ`, crossed node `ℓ`) labelled
/// by a strict partition, with `codim = |a|`.
pub fn lagrangian_bijection(fv: &FlagVariety, a: &StrictPartition) -> Result<usize> {
    let l = fv.group_type().rank;
    check_flag(fv, 'C', l, l)?;
    if a.parts().first().is_some_and(|&p| p as usize > l) {
        return Err(Error::Invalid(format!("{a} has a part larger than {l}")));
    }
    let mut roots = Vec::new();
    for (row0, &len) in a.parts().iter().enumerate() {
        let i = row0 + 1;
        for j in i..i + len as usize {
            // ε_p + ε_q with p = ℓ+1−j ≤ q = ℓ+1−i
            let (p, q) = (l + 1 - j, l + 1 - i);
            let mut v = eps_diff(l, p, q);
            for x in v.iter_mut().take(l - 1).skip(q - 1) {
                *x += 2;
            }
            v[l - 1] += 1;
            roots.push(v);
        }
    }
    class_with_inversions(fv, &roots)
}

/// Outcome of checking `c^{nν}_{nλ,nμ} = 1` for `n ≤ n_max`.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct FultonReport {
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
    pub c: u64,
    /// `(n, c^{nν}_{nλ,nμ})`, only when `c = 1`.
    pub scaled: Vec<(u32, u64)>,
    pub violations: Vec<u32>,
}

pub fn fulton_check(lam: &Partition, mu: &Partition, nu: &Partition, r: usize, n_max: u32) -> Result<FultonReport> {
    for p in [lam, mu, nu] {
        if p.len() > r {
            return Err(Error::Invalid(format!("{p} has more than {r} parts")));
        }
    }
    let c = lr_coefficient(lam, mu, nu);
    let mut scaled = Vec::new();
    let mut violations = Vec::new();
    if c == 1 {
        for n in 2..=n_max {
            let cn = lr_coefficient(&lam.scale(n), &mu.scale(n), &nu.scale(n));
            if cn != 1 {
                violations.push(n);
            }
            scaled.push((n, cn));
        }
    }
    Ok(FultonReport {
        lambda: lam.clone(),
        mu: mu.clone(),
        nu: nu.clone(),
        c,
        scaled,
        violations,
    })
}

/// `fulton_check` on every triple of `𝔓_k(r)³` with `c^ν_{λ,μ} = 1`.
pub fn fulton_sweep(r: usize, k: u32, n_max: u32) -> Result<Vec<FultonReport>> {
    let boxed = Partition::in_box(r, k);
    let mut out = Vec::new();
    for lam in &boxed {
        for mu in &boxed {
            for nu in boxed.iter().filter(|nu| nu.size() == lam.size() + mu.size()) {
                if lr_coefficient(lam, mu, nu) == 1 {
                    out.push(fulton_check(lam, mu, nu, r, n_max)?);
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }

    #[test]
    fn pieri_and_unit() {
        assert_eq!(lr_coefficient(&p("1"), &p("1"), &p("2")), 1);
        assert_eq!(lr_coefficient(&p("1"), &p("1"), &p("1,1")), 1);
        assert_eq!(lr_coefficient(&p("2,1"), &p(""), &p("2,1")), 1);
        assert_eq!(lr_coefficient(&p("2,1"), &p(""), &p("3")), 0);
        assert_eq!(lr_coefficient(&p("2,1"), &p("2,1"), &p("3,2,1")), 2);
        assert_eq!(lr_coefficient(&p("2,1"), &p("2,1"), &p("4,2")), 1);
    }

    #[test]
    fn hook_content_small() {
        assert_eq!(hook_content_dim(&p("1"), 3), BigInt::from(3));
        assert_eq!(hook_content_dim(&p("2,1"), 3), BigInt::from(8));
        assert_eq!(hook_content_dim(&p("2"), 2), BigInt::from(3));
        assert_eq!(hook_content_dim(&p("1,1,1,1"), 3), BigInt::from(0));
    }

    #[test]
    fn box_counts() {
        assert_eq!(Partition::in_box(2, 2).len(), 6);
        assert_eq!(Partition::in_box(3, 4).len(), 35);
        assert_eq!(StrictPartition::all(3).len(), 8);
    }

    #[test]
    fn fulton_examples() {
        let r = fulton_check(&p("1"), &p("1"), &p("2"), 1, 4).unwrap();
        assert_eq!(r.c, 1);
        assert!(r.violations.is_empty());
        assert_eq!(r.scaled.len(), 3);
        let r = fulton_check(&p("2,1"), &p("2,1"), &p("3,2,1"), 3, 3).unwrap();
        assert_eq!(r.c, 2);
        assert!(r.scaled.is_empty());
    }

    #[test]
    fn lg36_example_intersection() {
        let fv = FlagVariety::new("C3", &[3]).unwrap();
        let ws: Vec<usize> = ["1", "2,1", "2"]
            .iter()
            .map(|s| lagrangian_bijection(&fv, &StrictPartition::parse(s).unwrap()).unwrap())
            .collect();
        assert_eq!(fv.schubert().intersection_number(&ws).unwrap(), BigInt::from(2));
        let empty = lagrangian_bijection(&fv, &StrictPartition::default()).unwrap();
        assert_eq!(empty, fv.cosets().top());
    }

    #[test]
    fn gr24_transport() {
        let fv = FlagVariety::new("A3", &[2]).unwrap();
        let shapes = Partition::in_box(2, 2);
        let labels: Vec<usize> = shapes.iter().map(|l| grassmannian_bijection(&fv, l, 2, 2).unwrap()).collect();
        assert_eq!(labels[0], fv.cosets().top());
        assert_eq!(*labels.last().unwrap(), 0);
        for (a, la) in shapes.iter().zip(&labels) {
            for (b, lb) in shapes.iter().zip(&labels) {
                let prod = fv.schubert().product_basis(*la, *lb).unwrap();
                for (c, lc) in shapes.iter().zip(&labels) {
                    assert_eq!(prod.coefficient(*lc), BigInt::from(lr_coefficient(a, b, c)), "{a} {b} {c}");
                }
            }
        }
    }

    fn part_strategy() -> impl Strategy<Value = Partition> {
        prop::collection::vec(0u32..4, 0..4).prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            Partition::new(&v).unwrap()
        })
    }

    proptest! {
        #[test]
        fn lr_symmetries(l in part_strategy(), m in part_strategy()) {
            for nu in Partition::in_box(6, 7) {
                if nu.size() != l.size() + m.size() {
                    continue;
                }
                let c = lr_coefficient(&l, &m, &nu);
                prop_assert_eq!(c, lr_coefficient(&m, &l, &nu));
                prop_assert_eq!(c, lr_coefficient(&l.conjugate(), &m.conjugate(), &nu.conjugate()));
            }
        }

        #[test]
        fn lr_dimension_count(l in part_strategy(), m in part_strategy()) {
            let r = 3;
            prop_assume!(l.len() <= r && m.len() <= r);
            let mut sum = BigInt::from(0);
            for nu in Partition::in_box(r, 8) {
                let c = lr_coefficient(&l, &m, &nu);
                sum += BigInt::from(c) * hook_content_dim(&nu, r);
            }
            prop_assert_eq!(sum, hook_content_dim(&l, r) * hook_content_dim(&m, r));
        }
    }
}
