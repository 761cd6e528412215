//! Cup products in `H*(G/P, ℤ)` through Bernstein–Gelfand–Gelfand
//! representatives and divided differences.
//!
//! Internally classes are indexed by codimension: `σ_a` (for `a ∈ W^P`) is
//! the class represented by the polynomial `P_a = ∂_{a⁻¹w₀} P_{w₀}`, of degree
//! `ℓ(a)`. The public indexing is homological: `[X_w] = σ_{w₀ w w₀^P}`, so the
//! unit is `[X_top]` and the point class is `[X_e]`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, Mutex, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::poly::MultiPoly;
use crate::root_system::RootSystem;
use crate::weyl::{CosetTable, WeylGroup};

/// BGG representatives `P_w` for one root system, computed lazily.
pub struct BggEngine {
    rs: Arc<RootSystem>,
    group: Arc<WeylGroup>,
    reps: Mutex<FxHashMap<usize, Arc<MultiPoly>>>,
}

impl fmt::Debug for BggEngine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BggEngine({})", self.rs.label())
    }
}

impl BggEngine {
    pub fn new(rs: Arc<RootSystem>, group: Arc<WeylGroup>) -> Self {
        BggEngine {
            rs,
            group,
            reps: Mutex::new(FxHashMap::default()),
        }
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn group(&self) -> &WeylGroup {
        &self.group
    }

    /// `P_{w₀} = Π_{β>0} β / |W|`.
    pub fn top_representative(&self) -> MultiPoly {
        let n = self.rs.rank();
        let mut p = MultiPoly::one(n);
        for beta in self.rs.positive_roots() {
            p = p.mul(&MultiPoly::linear(beta));
        }
        let order = BigInt::from(self.group.order());
        p.scale_by(&BigRational::new(BigInt::one(), order))
    }

    /// `P_w` for the group element with index `g`.
    pub fn representative(&self, g: usize) -> Result<Arc<MultiPoly>> {
        if let Some(p) = self.reps.lock().expect("rep cache").get(&g) {
            return Ok(p.clone());
        }
        let group = &self.group;
        let top = group.longest();
        // Climb by right ascents until a cached element (or w₀) is reached.
        let mut chain: Vec<(usize, usize)> = Vec::new();
        let mut cur = g;
        let mut start: Option<Arc<MultiPoly>> = None;
        loop {
            if let Some(p) = self.reps.lock().expect("rep cache").get(&cur) {
                start = Some(p.clone());
                break;
            }
            if cur == top {
                break;
            }
            let len = group.get(cur).length();
            let i = (1..=self.rs.rank())
                .find(|&i| group.get(group.right_mul(i, cur)).length() > len)
                .expect("non-longest element has a right ascent");
            chain.push((cur, i));
            cur = group.right_mul(i, cur);
        }
        let mut poly = match start {
            Some(p) => p,
            None => {
                let p = Arc::new(self.top_representative());
                self.reps.lock().expect("rep cache").insert(top, p.clone());
                p
            }
        };
        let cartan = self.rs.cartan();
        for &(el, i) in chain.iter().rev() {
            poly = Arc::new(poly.divided_difference(cartan, i - 1)?);
            self.reps.lock().expect("rep cache").insert(el, poly.clone());
        }
        Ok(poly)
    }

    /// Number of cached representatives.
    pub fn cached(&self) -> usize {
        self.reps.lock().expect("rep cache").len()
    }

    /// `(∂_w f)(0)`, the coefficient of `P_w` in `f` when `deg f = ℓ(w)`.
    pub fn extract(&self, f: &MultiPoly, g: usize) -> Result<BigRational> {
        let word = self.group.get(g).word();
        Ok(f.divided_difference_word(self.rs.cartan(), word)?.constant_term())
    }
}

/// An element of `H*(G/P)` in the Schubert basis, keyed by `W^P` positions
/// in the homological indexing (`[X_w]`).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CohomClass {
    pub coeffs: BTreeMap<usize, BigInt>,
}

impl CohomClass {
    pub fn zero() -> Self {
        CohomClass::default()
    }

    pub fn basis(w: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(w, BigInt::one());
        CohomClass { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, w: usize) -> BigInt {
        self.coeffs.get(&w).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, w: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(w).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&w);
        }
    }

    pub fn add(&self, other: &CohomClass) -> CohomClass {
        let mut out = self.clone();
        for (&w, c) in &other.coeffs {
            out.add_term(w, c);
        }
        out
    }

    pub fn scale(&self, k: &BigInt) -> CohomClass {
        let mut out = CohomClass::zero();
        for (&w, c) in &self.coeffs {
            out.add_term(w, &(c * k));
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.coeffs.iter().map(|(&w, c)| (w, c))
    }
}

/// Products keyed by an unordered pair of codimension indices.
type ProductTable = RwLock<FxHashMap<(usize, usize), Arc<Vec<(usize, BigInt)>>>>;

/// Ordinary Schubert calculus on one `G/P`.
pub struct SchubertCalc {
    engine: Arc<BggEngine>,
    cosets: Arc<CosetTable>,
    /// `dual[k]` is the position of `w₀ w_k w₀^P`.
    dual: Vec<usize>,
    /// Positions of `W^P` grouped by length.
    by_length: Vec<Vec<usize>>,
    /// Parent of each `W^P` element in the extraction tree: `(s_i w, i)`.
    parent: Vec<Option<(usize, usize)>>,
    products: ProductTable,
}

impl fmt::Debug for SchubertCalc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SchubertCalc({:?}, |W^P| = {})", self.engine, self.cosets.len())
    }
}

impl SchubertCalc {
    pub fn new(engine: Arc<BggEngine>, cosets: Arc<CosetTable>) -> Self {
        let group = engine.group();
        let dual: Vec<usize> = (0..cosets.len()).map(|k| cosets.dual_rep(group, k)).collect();
        let max_len = cosets.get(cosets.top()).length();
        let mut by_length = vec![Vec::new(); max_len + 1];
        let mut parent = vec![None; cosets.len()];
        for k in 0..cosets.len() {
            let el = cosets.get(k);
            by_length[el.length()].push(k);
            if let Some(&i) = el.word().first() {
                // s_i w is again a minimal coset representative
                let g = group.left_mul(i, cosets.group_index(k));
                let pk = cosets
                    .position_of_group_index(g)
                    .expect("left factor of a minimal representative is minimal");
                parent[k] = Some((pk, i));
            }
        }
        SchubertCalc {
            engine,
            cosets,
            dual,
            by_length,
            parent,
            products: RwLock::new(FxHashMap::default()),
        }
    }

    pub fn cosets(&self) -> &CosetTable {
        &self.cosets
    }

    pub fn engine(&self) -> &BggEngine {
        &self.engine
    }

    /// `dim G/P`.
    pub fn dimension(&self) -> usize {
        self.by_length.len() - 1
    }

    /// `w ↦ w₀ w w₀^P` on `W^P` positions.
    pub fn dual(&self, w: usize) -> usize {
        self.dual[w]
    }

    /// Cohomological degree / 2 of `[X_w]`.
    pub fn codim(&self, w: usize) -> usize {
        self.dimension() - self.cosets.get(w).length()
    }

    fn check(&self, w: usize) -> Result<()> {
        if w < self.cosets.len() {
            Ok(())
        } else {
            Err(Error::NotInWP(format!("index {w} outside W^P (size {})", self.cosets.len())))
        }
    }

    /// `P_a` for a codimension-indexed position `a`.
    pub fn codim_representative(&self, a: usize) -> Result<Arc<MultiPoly>> {
        self.engine.representative(self.cosets.group_index(a))
    }

    /// Expands a homogeneous polynomial of degree `k` in the `σ` basis, via
    /// the tree `∂_w f = ∂_i ∂_{s_i w} f` over `W^P` elements of length ≤ k.
    pub fn expand_codim(&self, f: &MultiPoly, k: usize) -> Result<Vec<(usize, BigInt)>> {
        if k >= self.by_length.len() {
            return Ok(Vec::new());
        }
        let cartan = self.engine.root_system().cartan();
        let mut level: FxHashMap<usize, MultiPoly> = FxHashMap::default();
        level.insert(0, f.clone());
        for len in 1..=k {
            let mut next: FxHashMap<usize, MultiPoly> = FxHashMap::default();
            for &w in &self.by_length[len] {
                let (p, i) = self.parent[w].expect("non-identity has a parent");
                if let Some(g) = level.get(&p) {
                    let d = g.divided_difference(cartan, i - 1)?;
                    if !d.is_zero() {
                        next.insert(w, d);
                    }
                }
            }
            level = next;
        }
        let mut out = Vec::new();
        for (w, g) in level {
            let c = g.constant_term();
            if !c.is_integer() {
                return Err(Error::Internal(format!("non-integral structure constant {c}")));
            }
            if !c.is_zero() {
                out.push((w, c.to_integer()));
            }
        }
        out.sort_by_key(|t| t.0);
        Ok(out)
    }

    /// `σ_a · σ_b` in codimension indexing.
    fn codim_product(&self, a: usize, b: usize) -> Result<Arc<Vec<(usize, BigInt)>>> {
        let key = if a <= b { (a, b) } else { (b, a) };
        if let Some(v) = self.products.read().expect("product cache").get(&key) {
            return Ok(v.clone());
        }
        let la = self.cosets.get(a).length();
        let lb = self.cosets.get(b).length();
        let res = if la + lb > self.dimension() {
            Vec::new()
        } else if la == 0 {
            vec![(b, BigInt::one())]
        } else if lb == 0 {
            vec![(a, BigInt::one())]
        } else {
            let f = self.codim_representative(a)?.mul(&*self.codim_representative(b)?);
            self.expand_codim(&f, la + lb)?
        };
        let res = Arc::new(res);
        self.products
            .write()
            .expect("product cache")
            .entry(key)
            .or_insert_with(|| res.clone());
        Ok(res)
    }

    /// Seeds the product cache (e.g. from disk).
    pub fn insert_structure_constants(&self, u: usize, v: usize, terms: Vec<(usize, BigInt)>) {
        let (a, b) = (self.dual[u], self.dual[v]);
        let key = if a <= b { (a, b) } else { (b, a) };
        let terms = terms.into_iter().map(|(w, c)| (self.dual[w], c)).collect();
        self.products
            .write()
            .expect("product cache")
            .entry(key)
            .or_insert_with(|| Arc::new(terms));
    }

    /// All cached products, as `(u, v, [(w, c)])` in homological indexing.
    pub fn cached_products(&self) -> Vec<(usize, usize, Vec<(usize, BigInt)>)> {
        let table = self.products.read().expect("product cache");
        let mut out: Vec<_> = table
            .iter()
            .map(|(&(a, b), terms)| {
                let (u, v) = (self.dual[a], self.dual[b]);
                let (u, v) = if u <= v { (u, v) } else { (v, u) };
                let mut t: Vec<(usize, BigInt)> =
                    terms.iter().map(|(w, c)| (self.dual[*w], c.clone())).collect();
                t.sort_by_key(|x| x.0);
                (u, v, t)
            })
            .collect();
        out.sort_by_key(|x| (x.0, x.1));
        out
    }

    /// `[X_u]·[X_v] = Σ_w c^w_{u,v} [X_w]`.
    pub fn product_basis(&self, u: usize, v: usize) -> Result<CohomClass> {
        self.check(u)?;
        self.check(v)?;
        let terms = self.codim_product(self.dual[u], self.dual[v])?;
        let mut out = CohomClass::zero();
        for (w, c) in terms.iter() {
            out.add_term(self.dual[*w], c);
        }
        Ok(out)
    }

    /// `c^w_{u,v}`.
    pub fn structure_constant(&self, u: usize, v: usize, w: usize) -> Result<BigInt> {
        self.check(w)?;
        if self.codim(u) + self.codim(v) != self.codim(w) {
            self.check(u)?;
            self.check(v)?;
            return Ok(BigInt::zero());
        }
        Ok(self.product_basis(u, v)?.coefficient(w))
    }

    pub fn cup_product(&self, a: &CohomClass, b: &CohomClass) -> Result<CohomClass> {
        let mut out = CohomClass::zero();
        for (u, cu) in a.terms() {
            for (v, cv) in b.terms() {
                let prod = self.product_basis(u, v)?;
                out = out.add(&prod.scale(&(cu * cv)));
            }
        }
        Ok(out)
    }

    /// The unit class `[X_top]`.
    pub fn unit(&self) -> CohomClass {
        CohomClass::basis(self.cosets.top())
    }

    /// Coefficient of `[X_e]` in `[X_{w_1}]⋯[X_{w_s}]`.
    pub fn intersection_number(&self, ws: &[usize]) -> Result<BigInt> {
        for &w in ws {
            self.check(w)?;
        }
        if ws.len() < 2 {
            return Err(Error::Invalid("an intersection number needs at least two classes".into()));
        }
        let total: usize = ws.iter().map(|&w| self.cosets.get(w).length()).sum();
        if total != (ws.len() - 1) * self.dimension() {
            return Ok(BigInt::zero());
        }
        let mut acc = CohomClass::basis(ws[0]);
        for &w in &ws[1..] {
            acc = self.cup_product(&acc, &CohomClass::basis(w))?;
        }
        Ok(acc.coefficient(self.cosets.identity()))
    }

    /// Renders a class as `2·[e] + 1·[1,2]`, or `0`.
    pub fn format_class(&self, c: &CohomClass) -> String {
        if c.is_zero() {
            return "0".into();
        }
        c.terms()
            .map(|(w, k)| {
                let word = self.cosets.get(w).word_string();
                let sign = if k.is_negative() { "-" } else { "" };
                format!("{sign}{}·[{word}]", k.abs())
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}
