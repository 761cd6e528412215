//! Representations of the Levi semisimple part: weight multiplicities,
//! tensor product decompositions and invariant dimensions.
//!
//! Each simple factor gets a [`RepEngine`]. Weights inside an engine are
//! integer vectors in that factor's fundamental-weight basis.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rustc_hash::{FxHashMap, FxHashSet};

use crate::error::{Error, Result};
use crate::flag::FlagVariety;
use crate::root_system::{ParabolicData, Rat, RootSystem, Weight};

/// Multiplicities of irreducibles, keyed by highest weight.
pub type DecompMap = BTreeMap<Vec<i64>, BigInt>;

/// Weight multiplicities of one irreducible module.
#[derive(Debug)]
pub struct Character {
    pub highest: Vec<i64>,
    /// Multiplicities of the dominant weights.
    pub dominant: FxHashMap<Vec<i64>, BigInt>,
    /// Every weight with its multiplicity.
    pub weights: Vec<(Vec<i64>, BigInt)>,
}

impl Character {
    pub fn dimension(&self) -> BigInt {
        self.weights.iter().map(|(_, m)| m).sum()
    }
}

/// Representation-theoretic computations for one (usually simple) root system.
pub struct RepEngine {
    rs: RootSystem,
    n: usize,
    /// `α_j` in fundamental coordinates.
    roots_fund: Vec<Vec<i64>>,
    /// Integer coroot coefficients: `⟨λ, β^∨⟩ = Σ_i c_i λ_i`.
    coroots: Vec<Vec<i64>>,
    /// `D·(λ, μ) = λᵀ B μ` with integer `B`.
    form: Vec<Vec<i64>>,
    chars: Mutex<FxHashMap<Vec<i64>, Arc<Character>>>,
    kpf: Mutex<FxHashMap<(Vec<i64>, usize), BigInt>>,
}

impl std::fmt::Debug for RepEngine {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "RepEngine({})", self.rs.label())
    }
}

impl RepEngine {
    pub fn new(rs: RootSystem) -> Self {
        let n = rs.rank();
        let roots_fund: Vec<Vec<i64>> = rs
            .positive_roots()
            .iter()
            .map(|b| to_ints(&rs.root_to_weight(b)))
            .collect();
        let coroots: Vec<Vec<i64>> = rs
            .positive_roots()
            .iter()
            .map(|b| {
                let hn = rs.root_half_norm(b);
                (0..n)
                    .map(|i| {
                        let c = Rat::from_integer(b[i]) * rs.half_norm(i + 1) / hn;
                        debug_assert!(c.is_integer());
                        c.to_integer()
                    })
                    .collect()
            })
            .collect();
        let inv = rs.inverse_cartan();
        let m: Vec<Vec<Rat>> = (0..n)
            .map(|j| (0..n).map(|k| rs.half_norm(j + 1) * inv[j][k]).collect())
            .collect();
        let den = m.iter().flatten().fold(1i64, |l, r| l.lcm(r.denom()));
        let form = m
            .iter()
            .map(|row| row.iter().map(|r| (r * Rat::from_integer(den)).to_integer()).collect())
            .collect();
        RepEngine {
            rs,
            n,
            roots_fund,
            coroots,
            form,
            chars: Mutex::new(FxHashMap::default()),
            kpf: Mutex::new(FxHashMap::default()),
        }
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    fn check_dominant(&self, l: &[i64]) -> Result<()> {
        if l.len() != self.n {
            return Err(Error::Invalid(format!(
                "weight has {} coordinates, {} expects {}",
                l.len(),
                self.rs.label(),
                self.n
            )));
        }
        if l.iter().any(|&c| c < 0) {
            return Err(Error::Invalid(format!("weight {l:?} is not dominant")));
        }
        Ok(())
    }

    fn b(&self, x: &[i64], y: &[i64]) -> i64 {
        let mut s = 0;
        for j in 0..self.n {
            if x[j] == 0 {
                continue;
            }
            let row: i64 = (0..self.n).map(|k| self.form[j][k] * y[k]).sum();
            s += x[j] * row;
        }
        s
    }

    fn reflect(&self, v: &mut [i64], i: usize) {
        let k = v[i];
        if k == 0 {
            return;
        }
        for m in 0..self.n {
            v[m] -= k * self.rs.cartan_entry(m + 1, i + 1);
        }
    }

    /// Dominant conjugate and the parity of the reflections used.
    fn dominant_conjugate(&self, v: &[i64]) -> (Vec<i64>, bool) {
        let mut cur = v.to_vec();
        let mut odd = false;
        while let Some(i) = cur.iter().position(|&c| c < 0) {
            self.reflect(&mut cur, i);
            odd = !odd;
        }
        (cur, odd)
    }

    /// `−w₀ λ`, the highest weight of the dual module.
    pub fn dual_weight(&self, l: &[i64]) -> Vec<i64> {
        let neg: Vec<i64> = l.iter().map(|c| -c).collect();
        self.dominant_conjugate(&neg).0
    }

    /// Simple-root coordinates of a weight.
    fn root_coords(&self, l: &[i64]) -> Vec<Rat> {
        let inv = self.rs.inverse_cartan();
        (0..self.n)
            .map(|j| (0..self.n).map(|i| inv[j][i] * Rat::from_integer(l[i])).sum())
            .collect()
    }

    /// Weyl's dimension formula.
    pub fn weyl_dim(&self, l: &[i64]) -> Result<BigInt> {
        self.check_dominant(l)?;
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for c in &self.coroots {
            let a: i64 = c.iter().zip(l).map(|(x, y)| x * (y + 1)).sum();
            let b: i64 = c.iter().sum();
            num *= a;
            den *= b;
        }
        let (q, r) = num.div_rem(&den);
        if !r.is_zero() {
            return Err(Error::Internal("non-integral Weyl dimension".into()));
        }
        Ok(q)
    }

    /// The W-orbit of a dominant weight.
    pub fn orbit(&self, mu: &[i64]) -> Vec<Vec<i64>> {
        let mut seen: FxHashSet<Vec<i64>> = FxHashSet::default();
        seen.insert(mu.to_vec());
        let mut stack = vec![mu.to_vec()];
        let mut out = Vec::new();
        while let Some(v) = stack.pop() {
            for i in 0..self.n {
                if v[i] > 0 {
                    let mut w = v.clone();
                    self.reflect(&mut w, i);
                    if seen.insert(w.clone()) {
                        stack.push(w);
                    }
                }
            }
            out.push(v);
        }
        out
    }

    /// Dominant weights `μ ≤ λ`, ordered by the height of `λ − μ`.
    fn dominant_below(&self, l: &[i64]) -> Vec<Vec<i64>> {
        let c = self.root_coords(l);
        let bounds: Vec<i64> = c.iter().map(|x| x.floor().to_integer()).collect();
        let mut out: Vec<(i64, Vec<i64>)> = Vec::new();
        let mut k = vec![0i64; self.n];
        loop {
            let mut mu = l.to_vec();
            for (j, &kj) in k.iter().enumerate() {
                for m in 0..self.n {
                    mu[m] -= kj * self.rs.cartan_entry(m + 1, j + 1);
                }
            }
            if mu.iter().all(|&x| x >= 0) {
                out.push((k.iter().sum(), mu));
            }
            let mut pos = 0;
            loop {
                if pos == self.n {
                    out.sort();
                    return out.into_iter().map(|(_, m)| m).collect();
                }
                if k[pos] < bounds[pos] {
                    k[pos] += 1;
                    break;
                }
                k[pos] = 0;
                pos += 1;
            }
        }
    }

    /// Freudenthal's multiplicity formula, memoized per highest weight.
    pub fn character(&self, l: &[i64]) -> Result<Arc<Character>> {
        self.check_dominant(l)?;
        if let Some(c) = self.chars.lock().expect("character cache").get(l) {
            return Ok(c.clone());
        }
        let rho = vec![1i64; self.n];
        let lr: Vec<i64> = l.iter().map(|x| x + 1).collect();
        let top = self.b(&lr, &lr);
        let mut dominant: FxHashMap<Vec<i64>, BigInt> = FxHashMap::default();
        for mu in self.dominant_below(l) {
            if mu.as_slice() == l {
                dominant.insert(mu, BigInt::one());
                continue;
            }
            let mr: Vec<i64> = mu.iter().zip(&rho).map(|(a, b)| a + b).collect();
            let den = top - self.b(&mr, &mr);
            let mut sum = BigInt::zero();
            for beta in &self.roots_fund {
                let mut v = mu.clone();
                loop {
                    for (x, y) in v.iter_mut().zip(beta) {
                        *x += y;
                    }
                    let (d, _) = self.dominant_conjugate(&v);
                    match dominant.get(&d) {
                        Some(m) => sum += m * BigInt::from(self.b(&v, beta)),
                        None => break,
                    }
                }
            }
            sum *= 2;
            let (q, r) = sum.div_rem(&BigInt::from(den));
            if !r.is_zero() || q.is_negative() {
                return Err(Error::Internal(format!("Freudenthal recursion failed at {mu:?}")));
            }
            if !q.is_zero() {
                dominant.insert(mu, q);
            }
        }
        let mut weights = Vec::new();
        let mut keys: Vec<&Vec<i64>> = dominant.keys().collect();
        keys.sort();
        for mu in keys {
            let m = &dominant[mu];
            for v in self.orbit(mu) {
                weights.push((v, m.clone()));
            }
        }
        let ch = Arc::new(Character {
            highest: l.to_vec(),
            dominant,
            weights,
        });
        self.chars
            .lock()
            .expect("character cache")
            .entry(l.to_vec())
            .or_insert_with(|| ch.clone());
        Ok(ch)
    }

    /// Multiplicity of the weight `μ` in `V(λ)`.
    pub fn weight_multiplicity(&self, l: &[i64], mu: &[i64]) -> Result<BigInt> {
        let ch = self.character(l)?;
        let (d, _) = self.dominant_conjugate(mu);
        Ok(ch.dominant.get(&d).cloned().unwrap_or_default())
    }

    /// `V(λ) ⊗ V(μ)` by Klimyk's formula.
    pub fn tensor_decompose(&self, l: &[i64], mu: &[i64]) -> Result<DecompMap> {
        self.check_dominant(l)?;
        self.check_dominant(mu)?;
        let (small, big) = if self.weyl_dim(l)? <= self.weyl_dim(mu)? { (l, mu) } else { (mu, l) };
        let ch = self.character(small)?;
        let mut acc: FxHashMap<Vec<i64>, BigInt> = FxHashMap::default();
        for (nu, m) in &ch.weights {
            let v: Vec<i64> = (0..self.n).map(|i| nu[i] + big[i] + 1).collect();
            let (d, odd) = self.dominant_conjugate(&v);
            if d.iter().any(|&x| x == 0) {
                continue;
            }
            let hw: Vec<i64> = d.iter().map(|x| x - 1).collect();
            let e = acc.entry(hw).or_insert_with(BigInt::zero);
            if odd {
                *e -= m;
            } else {
                *e += m;
            }
        }
        let mut out = DecompMap::new();
        for (k, v) in acc {
            if v.is_negative() {
                return Err(Error::Internal(format!("negative Klimyk multiplicity at {k:?}")));
            }
            if !v.is_zero() {
                out.insert(k, v);
            }
        }
        Ok(out)
    }

    /// Multiplicity of `V(ν)` in `V(λ) ⊗ V(μ)`.
    pub fn tensor_multiplicity(&self, l: &[i64], mu: &[i64], nu: &[i64]) -> Result<BigInt> {
        self.check_dominant(nu)?;
        Ok(self.tensor_decompose(l, mu)?.get(nu).cloned().unwrap_or_default())
    }

    /// Kostant's partition function on a vector in simple-root coordinates.
    pub fn kostant_partition(&self, v: &[i64]) -> BigInt {
        if v.iter().any(|&c| c < 0) {
            return BigInt::zero();
        }
        let mut memo = self.kpf.lock().expect("kpf cache");
        kpf_rec(self.rs.positive_roots(), v.to_vec(), 0, &mut memo)
    }

    /// Steinberg's formula `Σ_{u,v} sgn(uv) P(u(λ+ρ) + v(μ+ρ) − ν − 2ρ)`.
    pub fn tensor_multiplicity_steinberg(&self, l: &[i64], mu: &[i64], nu: &[i64]) -> Result<BigInt> {
        self.check_dominant(l)?;
        self.check_dominant(mu)?;
        self.check_dominant(nu)?;
        let lr: Vec<i64> = l.iter().map(|x| x + 1).collect();
        let mr: Vec<i64> = mu.iter().map(|x| x + 1).collect();
        let ol = self.signed_orbit(&lr);
        let om = self.signed_orbit(&mr);
        let mut total = BigInt::zero();
        for (a, sa) in &ol {
            for (b, sb) in &om {
                let v: Vec<i64> = (0..self.n).map(|i| a[i] + b[i] - nu[i] - 2).collect();
                let c = self.root_coords(&v);
                if c.iter().any(|x| !x.is_integer() || x.is_negative()) {
                    continue;
                }
                let ci: Vec<i64> = c.iter().map(|x| x.to_integer()).collect();
                let p = self.kostant_partition(&ci);
                if sa == sb {
                    total += p;
                } else {
                    total -= p;
                }
            }
        }
        Ok(total)
    }

    /// The orbit of a regular dominant weight with the sign of the element
    /// reaching each point.
    fn signed_orbit(&self, v: &[i64]) -> Vec<(Vec<i64>, bool)> {
        self.orbit(v)
            .into_iter()
            .map(|w| {
                let (_, odd) = self.dominant_conjugate(&w);
                (w, odd)
            })
            .collect()
    }

    /// Dimension of the invariants in `V(λ_1) ⊗ ⋯ ⊗ V(λ_s)`.
    pub fn invariant_dimension(&self, weights: &[Vec<i64>]) -> Result<BigInt> {
        for w in weights {
            self.check_dominant(w)?;
        }
        match weights.len() {
            0 => return Ok(BigInt::one()),
            1 => {
                return Ok(if weights[0].iter().all(|&c| c == 0) { BigInt::one() } else { BigInt::zero() })
            }
            _ => {}
        }
        let s = weights.len();
        let target = self.dual_weight(&weights[s - 1]);
        let mut cur: DecompMap = DecompMap::new();
        cur.insert(weights[0].clone(), BigInt::one());
        for i in 1..s - 1 {
            let rest: Vec<i64> = (0..self.n)
                .map(|k| weights[i + 1..].iter().map(|w| w[k]).sum())
                .collect();
            let mut next = DecompMap::new();
            for (kappa, m) in &cur {
                for (nu, c) in self.tensor_decompose(kappa, &weights[i])? {
                    if !self.reachable(&nu, &rest) {
                        continue;
                    }
                    *next.entry(nu).or_insert_with(BigInt::zero) += m * c;
                }
            }
            cur = next;
        }
        Ok(cur.get(&target).cloned().unwrap_or_default())
    }

    /// Whether `ν*` can occur in a tensor product with highest weights
    /// summing to `rest`, i.e. `rest − ν* ∈ Q⁺`.
    fn reachable(&self, nu: &[i64], rest: &[i64]) -> bool {
        let star = self.dual_weight(nu);
        let d: Vec<i64> = rest.iter().zip(&star).map(|(a, b)| a - b).collect();
        self.root_coords(&d).iter().all(|x| x.is_integer() && !x.is_negative())
    }
}

fn to_ints(w: &Weight) -> Vec<i64> {
    w.to_ints().expect("integral weight")
}

fn kpf_rec(
    roots: &[Vec<i64>],
    v: Vec<i64>,
    k: usize,
    memo: &mut FxHashMap<(Vec<i64>, usize), BigInt>,
) -> BigInt {
    if v.iter().all(|&c| c == 0) {
        return BigInt::one();
    }
    if k == roots.len() {
        return BigInt::zero();
    }
    let key = (v, k);
    if let Some(r) = memo.get(&key) {
        return r.clone();
    }
    let (v, _) = &key;
    let beta = &roots[k];
    let mut total = BigInt::zero();
    let mut cur = v.clone();
    loop {
        total += kpf_rec(roots, cur.clone(), k + 1, memo);
        for (x, b) in cur.iter_mut().zip(beta) {
            *x -= b;
        }
        if cur.iter().any(|&c| c < 0) {
            break;
        }
    }
    memo.insert(key, total.clone());
    total
}

/// The Levi semisimple part, as a product of simple factors.
#[derive(Debug)]
pub struct LeviSystem {
    /// Ambient 1-based node lists, one per simple factor.
    pub components: Vec<Vec<usize>>,
    pub engines: Vec<RepEngine>,
}

impl LeviSystem {
    pub fn new(rs: &RootSystem, levi_simple: &[usize]) -> Result<Self> {
        let components = rs.components(levi_simple);
        let engines = components
            .iter()
            .map(|c| Ok(RepEngine::new(rs.sub_system(c)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(LeviSystem { components, engines })
    }

    pub fn from_parabolic(rs: &RootSystem, p: &ParabolicData) -> Result<Self> {
        Self::new(rs, &p.levi_simple)
    }

    /// Restriction of an ambient weight to each factor: `⟨λ, α_i^∨⟩`.
    pub fn restrict(&self, w: &Weight) -> Result<Vec<Vec<i64>>> {
        self.components
            .iter()
            .map(|c| {
                c.iter()
                    .map(|&i| {
                        let x = w.coord(i);
                        if x.is_integer() {
                            Ok(x.to_integer())
                        } else {
                            Err(Error::Invalid(format!("weight {w} is not integral")))
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// `dim [V_L(nλ_1) ⊗ ⋯ ⊗ V_L(nλ_s)]^{L^{ss}}`, as a product over factors.
    pub fn invariant_dimension(&self, weights: &[Weight], n: u32) -> Result<BigInt> {
        let restricted: Vec<Vec<Vec<i64>>> =
            weights.iter().map(|w| self.restrict(w)).collect::<Result<_>>()?;
        let mut total = BigInt::one();
        for (f, eng) in self.engines.iter().enumerate() {
            let ws: Vec<Vec<i64>> = restricted
                .iter()
                .map(|r| r[f].iter().map(|x| x * n as i64).collect())
                .collect();
            total *= eng.invariant_dimension(&ws)?;
            if total.is_zero() {
                break;
            }
        }
        Ok(total)
    }
}

/// `dim [V_L(nλ_1) ⊗ ⋯ ⊗ V_L(nλ_s)]^{L^{ss}}` for ambient weights.
pub fn invariant_dimension(rs: &RootSystem, p: &ParabolicData, weights: &[Weight], n: u32) -> Result<BigInt> {
    LeviSystem::from_parabolic(rs, p)?.invariant_dimension(weights, n)
}

/// `dim Hom_L(V_L(nχ_e), V_L(nχ_{w_1}) ⊗ ⋯ ⊗ V_L(nχ_{w_s}))`: the `L^{ss}`
/// invariant dimension when the central characters match, else 0.
pub fn hom_dimension(fv: &FlagVariety, levi: &LeviSystem, ws: &[usize], n: u32) -> Result<BigInt> {
    if !crate::deformed::hom_central_condition(fv, ws)? {
        return Ok(BigInt::zero());
    }
    let chis: Vec<Weight> = ws.iter().map(|&w| fv.chi(w).cloned()).collect::<Result<_>>()?;
    levi.invariant_dimension(&chis, n)
}

/// `Σ_ν mult(ν) dim V(ν)`.
pub fn decomposition_dimension(eng: &RepEngine, d: &DecompMap) -> Result<BigInt> {
    let mut total = BigInt::zero();
    for (nu, m) in d {
        total += m * eng.weyl_dim(nu)?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::TypeLetter;

    fn eng(l: TypeLetter, n: usize) -> RepEngine {
        RepEngine::new(RootSystem::build(l, n).unwrap())
    }

    #[test]
    fn dimensions() {
        let a1 = eng(TypeLetter::A, 1);
        for k in 0..6 {
            assert_eq!(a1.weyl_dim(&[k]).unwrap(), BigInt::from(k + 1));
        }
        let g2 = eng(TypeLetter::G, 2);
        assert_eq!(g2.weyl_dim(&[0, 0]).unwrap(), BigInt::one());
        // α1 short: ω1 is the 7-dimensional, ω2 the adjoint
        assert_eq!(g2.weyl_dim(&[1, 0]).unwrap(), BigInt::from(7));
        assert_eq!(g2.weyl_dim(&[0, 1]).unwrap(), BigInt::from(14));
        assert_eq!(g2.character(&[1, 0]).unwrap().dimension(), BigInt::from(7));
        assert_eq!(g2.character(&[0, 1]).unwrap().dimension(), BigInt::from(14));
        let b3 = eng(TypeLetter::B, 3);
        assert_eq!(b3.weyl_dim(&[0, 0, 1]).unwrap(), BigInt::from(8));
        assert_eq!(b3.character(&[1, 1, 1]).unwrap().dimension(), b3.weyl_dim(&[1, 1, 1]).unwrap());
    }

    #[test]
    fn clebsch_gordan() {
        let a1 = eng(TypeLetter::A, 1);
        let d = a1.tensor_decompose(&[1], &[1]).unwrap();
        assert_eq!(d.get(&vec![0]), Some(&BigInt::one()));
        assert_eq!(d.get(&vec![2]), Some(&BigInt::one()));
        assert_eq!(d.len(), 2);
        let a2 = eng(TypeLetter::A, 2);
        let d = a2.tensor_decompose(&[0, 0], &[2, 1]).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d.get(&vec![2, 1]), Some(&BigInt::one()));
    }

    #[test]
    fn kostant_partition_small() {
        let a2 = eng(TypeLetter::A, 2);
        assert_eq!(a2.kostant_partition(&[0, 0]), BigInt::one());
        assert_eq!(a2.kostant_partition(&[1, 1]), BigInt::from(2));
        assert_eq!(a2.kostant_partition(&[1, -1]), BigInt::zero());
    }

    #[test]
    fn g2_kpf_brute_force() {
        let g2 = eng(TypeLetter::G, 2);
        let roots = g2.root_system().positive_roots().to_vec();
        for a in 0..5i64 {
            for b in 0..4i64 {
                // nested loops over multiplicities of the six roots
                let mut count = 0u64;
                let bound = 6;
                let mut m = [0i64; 6];
                loop {
                    let s0: i64 = (0..6).map(|k| m[k] * roots[k][0]).sum();
                    let s1: i64 = (0..6).map(|k| m[k] * roots[k][1]).sum();
                    if s0 == a && s1 == b {
                        count += 1;
                    }
                    let mut p = 0;
                    loop {
                        if p == 6 {
                            break;
                        }
                        m[p] += 1;
                        if m[p] <= bound {
                            break;
                        }
                        m[p] = 0;
                        p += 1;
                    }
                    if p == 6 {
                        break;
                    }
                }
                assert_eq!(g2.kostant_partition(&[a, b]), BigInt::from(count), "({a},{b})");
            }
        }
    }

    #[test]
    fn g2_example_invariants() {
        let g2 = eng(TypeLetter::G, 2);
        let inv = |ws: &[[i64; 2]]| {
            g2.invariant_dimension(&ws.iter().map(|w| w.to_vec()).collect::<Vec<_>>())
                .unwrap()
        };
        assert_eq!(inv(&[[6, 0], [0, 6], [0, 7]]), BigInt::from(1));
        assert_eq!(inv(&[[12, 0], [0, 12], [0, 14]]), BigInt::from(2));
        assert_eq!(inv(&[[6, 0], [0, 6], [10, 1]]), BigInt::from(1));
        assert_eq!(inv(&[[12, 0], [0, 12], [20, 2]]), BigInt::from(3));
    }

    #[test]
    fn steinberg_matches_klimyk_small() {
        let b2 = eng(TypeLetter::B, 2);
        for l in [[1, 0], [0, 1], [2, 1]] {
            for m in [[1, 1], [0, 2]] {
                let d = b2.tensor_decompose(&l, &m).unwrap();
                assert_eq!(
                    decomposition_dimension(&b2, &d).unwrap(),
                    b2.weyl_dim(&l).unwrap() * b2.weyl_dim(&m).unwrap()
                );
                for (nu, c) in &d {
                    assert_eq!(&b2.tensor_multiplicity_steinberg(&l, &m, nu).unwrap(), c);
                }
            }
        }
    }

    #[test]
    fn reducible_levi_factors() {
        let rs = RootSystem::build(TypeLetter::C, 3).unwrap();
        let p = ParabolicData::from_crossed(&rs, &[2]).unwrap();
        let levi = LeviSystem::from_parabolic(&rs, &p).unwrap();
        assert_eq!(levi.components, vec![vec![1], vec![3]]);
        let ws = [Weight::from_ints(&[1, 5, 0]), Weight::from_ints(&[1, 0, 0])];
        assert_eq!(levi.invariant_dimension(&ws, 1).unwrap(), BigInt::one());
        let empty = LeviSystem::new(&rs, &[]).unwrap();
        assert_eq!(empty.invariant_dimension(&ws, 3).unwrap(), BigInt::one());
    }
}
