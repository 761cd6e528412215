//! The characters `χ_w`, the deformed product `⊙₀`, Levi-movability, the
//! stabilizers `Q_w` and the tangent level statistics `d_j`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::flag::FlagVariety;
use crate::root_system::{RootSystem, Weight};
use crate::schubert::CohomClass;
use crate::weyl::Cover;

/// `χ_w = Σ_{β ∈ (R⁺∖R_𝔩⁺) ∩ w⁻¹R⁺} β`, checked against `ρ − 2ρ^L + w⁻¹ρ`.
pub fn chi(fv: &FlagVariety, w: usize) -> Result<Weight> {
    let rs = fv.root_system();
    let p = fv.parabolic();
    let el = fv.element(w);
    let n = rs.rank();
    let mut sum = vec![0i64; n];
    for (k, beta) in rs.positive_roots().iter().enumerate() {
        if p.is_levi_root(k) {
            continue;
        }
        if el.apply_root(beta).iter().all(|&c| c >= 0) {
            for (s, c) in sum.iter_mut().zip(beta) {
                *s += c;
            }
        }
    }
    let by_roots = rs.root_to_weight(&sum);
    let inv = el.inverse(rs);
    let two = crate::Rat::from_integer(2);
    let by_rho = &(rs.rho() - &(two * &p.rho_levi)) + &inv.apply_weight(rs.rho());
    if by_roots != by_rho {
        return Err(Error::Internal(format!(
            "χ mismatch at {}: root sum {by_roots} vs ρ-formula {by_rho}",
            el.word_string()
        )));
    }
    Ok(by_roots)
}

/// `χ_w` restricted to the Levi semisimple part: `⟨χ_w, α_i^∨⟩` for `i ∈ Δ(P)`.
pub fn chi_levi(fv: &FlagVariety, w: usize) -> Result<Weight> {
    Ok(fv.chi(w)?.restrict(&fv.parabolic().levi_simple))
}

/// Whether `(χ_w − χ_u − χ_v)(x_k) = 0` for every crossed node `k`.
pub fn central_condition(fv: &FlagVariety, u: usize, v: usize, w: usize) -> Result<bool> {
    let d = &(fv.chi(w)? - fv.chi(u)?) - fv.chi(v)?;
    Ok(fv.central_values(&d).iter().all(|c| c.is_zero()))
}

/// `c̃^w_{u,v}`: the ordinary constant when the central condition holds, else 0.
pub fn deformed_structure_constant(fv: &FlagVariety, u: usize, v: usize, w: usize) -> Result<BigInt> {
    let c = fv.schubert().structure_constant(u, v, w)?;
    if c.is_zero() || !central_condition(fv, u, v, w)? {
        return Ok(BigInt::zero());
    }
    Ok(c)
}

/// `[X_u] ⊙₀ [X_v]`.
pub fn deformed_product_basis(fv: &FlagVariety, u: usize, v: usize) -> Result<CohomClass> {
    let full = fv.schubert().product_basis(u, v)?;
    let mut out = CohomClass::zero();
    for (w, c) in full.terms() {
        if central_condition(fv, u, v, w)? {
            out.add_term(w, c);
        }
    }
    Ok(out)
}

pub fn deformed_cup_product(fv: &FlagVariety, a: &CohomClass, b: &CohomClass) -> Result<CohomClass> {
    let mut out = CohomClass::zero();
    for (u, cu) in a.terms() {
        for (v, cv) in b.terms() {
            out = out.add(&deformed_product_basis(fv, u, v)?.scale(&(cu * cv)));
        }
    }
    Ok(out)
}

fn dimension_condition(fv: &FlagVariety, ws: &[usize]) -> bool {
    let total: usize = ws.iter().map(|&w| fv.length(w)).sum();
    ws.len() >= 2 && total == (ws.len() - 1) * fv.dimension()
}

/// Coefficient of `[X_e]` in `[X_{w_1}] ⊙₀ ⋯ ⊙₀ [X_{w_s}]`.
pub fn deformed_top_coefficient(fv: &FlagVariety, ws: &[usize]) -> Result<BigInt> {
    if ws.len() < 2 {
        return Err(Error::Invalid("a product needs at least two classes".into()));
    }
    for &w in ws {
        if w >= fv.len() {
            return Err(Error::NotInWP(format!("index {w} outside W^P")));
        }
    }
    if !dimension_condition(fv, ws) {
        return Ok(BigInt::zero());
    }
    let mut acc = CohomClass::basis(ws[0]);
    for &w in &ws[1..] {
        acc = deformed_cup_product(fv, &acc, &CohomClass::basis(w))?;
        if acc.is_zero() {
            break;
        }
    }
    Ok(acc.coefficient(fv.cosets().identity()))
}

/// Numeric Levi-movability: the dimension condition and a nonzero deformed
/// top coefficient.
pub fn is_levi_movable(fv: &FlagVariety, ws: &[usize]) -> Result<bool> {
    Ok(dimension_condition(fv, ws) && deformed_top_coefficient(fv, ws)? > BigInt::zero())
}

/// `Δ(Q_w)`, the simple roots of the stabilizer of `X_w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizerData {
    /// 1-based simple root indices.
    pub delta_qw: Vec<usize>,
}

/// `Δ ∩ ŵR⁻` with `ŵ = w w₀^P`, checked against `Δ ∩ w(R_𝔩⁺ ⊔ R⁻)`.
pub fn stabilizer_simple_roots(fv: &FlagVariety, w: usize) -> Result<StabilizerData> {
    let rs = fv.root_system();
    let el = fv.element(w);
    let hat = el.compose(rs, fv.cosets().longest_levi());
    let hat_inv = hat.inverse(rs);
    let w_inv = el.inverse(rs);
    let levi = &fv.parabolic().levi_simple;
    let n = rs.rank();
    let mut delta_qw = Vec::new();
    for i in 1..=n {
        let mut e = vec![0i64; n];
        e[i - 1] = 1;
        let a = hat_inv.apply_root(&e);
        let in_hat = a.iter().any(|&c| c < 0);
        let b = w_inv.apply_root(&e);
        let in_delta_w =
            b.iter().any(|&c| c < 0) || crate::root_system::supported_on(&b, levi);
        if in_hat != in_delta_w {
            return Err(Error::Internal(format!(
                "Δ(Q_w) mismatch at {} for α_{i}",
                el.word_string()
            )));
        }
        if in_hat {
            delta_qw.push(i);
        }
    }
    Ok(StabilizerData { delta_qw })
}

fn find_cover(fv: &FlagVariety, v: usize, beta: usize, w: usize) -> Result<Cover> {
    fv.cosets()
        .covers()
        .iter()
        .find(|c| c.v == v && c.w == w && c.beta == beta)
        .copied()
        .ok_or_else(|| {
            Error::Invalid(format!(
                "({}, root #{beta}, {}) is not a cover in W^P",
                fv.word(v),
                fv.word(w)
            ))
        })
}

/// Whether the codimension-one cell `C_v ⊂ X_w` lies in the `Q_w`-orbit of
/// `ẇ`, i.e. whether `β ∈ Δ_w`.
pub fn codim_one_cell_in_qw_orbit(fv: &FlagVariety, v: usize, beta: usize, w: usize) -> Result<bool> {
    find_cover(fv, v, beta, w)?;
    let rs = fv.root_system();
    let root = &rs.positive_roots()[beta];
    if !rs.is_simple_root(root) {
        return Ok(false);
    }
    let i = root.iter().position(|&c| c == 1).expect("simple root") + 1;
    Ok(stabilizer_simple_roots(fv, w)?.delta_qw.contains(&i))
}

/// Dimensions `d_1..d_{m_o}` of the `x_P`-eigenlevels of a tangent space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DjProfile {
    /// `d[j-1] = d_j`.
    pub d: Vec<u64>,
}

impl DjProfile {
    pub fn get(&self, j: usize) -> u64 {
        self.d.get(j - 1).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.d.iter().sum()
    }

    pub fn weighted_total(&self) -> u64 {
        self.d.iter().enumerate().map(|(j, d)| (j as u64 + 1) * d).sum()
    }
}

fn level(fv: &FlagVariety, root: &[i64]) -> usize {
    RootSystem::root_at_xp(root, fv.parabolic()) as usize
}

/// Levels of `T_ė(w⁻¹X_w)`, whose weights are `R⁻ ∩ w⁻¹R⁺`.
pub fn dj_profile(fv: &FlagVariety, w: usize) -> DjProfile {
    let rs = fv.root_system();
    let mut d = vec![0u64; fv.parabolic().m_o.max(0) as usize];
    for k in fv.element(w).inversion_set(rs) {
        let j = level(fv, &rs.positive_roots()[k]);
        if j >= 1 && j <= d.len() {
            d[j - 1] += 1;
        }
    }
    DjProfile { d }
}

/// Levels of `T_ė(v⁻¹X_w)` for a cover `v →β w`: the profile of `v` plus one
/// at level `α(x_P)`, `α = v⁻¹β`.
pub fn dj_profile_at_cover(fv: &FlagVariety, v: usize, beta: usize, w: usize) -> Result<DjProfile> {
    find_cover(fv, v, beta, w)?;
    let rs = fv.root_system();
    let alpha = fv.element(v).inverse(rs).apply_root(&rs.positive_roots()[beta]);
    let j = level(fv, &alpha);
    let mut prof = dj_profile(fv, v);
    if j == 0 || j > prof.d.len() {
        return Err(Error::Internal(format!("α(x_P) = {j} out of range at a cover")));
    }
    prof.d[j - 1] += 1;
    Ok(prof)
}

/// `α(x_P)` and `⟨ρ, β^∨⟩` for a cover `v →β w`, with `α = v⁻¹β`.
pub fn cover_levels(fv: &FlagVariety, cover: &Cover) -> (i64, i64) {
    let rs = fv.root_system();
    let beta = &rs.positive_roots()[cover.beta];
    let alpha = fv.element(cover.v).inverse(rs).apply_root(beta);
    let pairing = rs.pair_coroot(rs.rho(), beta);
    (
        RootSystem::root_at_xp(&alpha, fv.parabolic()),
        pairing.to_integer(),
    )
}

/// Whether every element of a class has nonnegative coefficients.
pub fn is_nonnegative(c: &CohomClass) -> bool {
    c.terms().all(|(_, k)| *k >= BigInt::zero())
}

/// Sum of the `χ` central values for a tuple minus `χ_e`; zero means the
/// `L`-Hom space can be nonzero.
pub fn hom_central_condition(fv: &FlagVariety, ws: &[usize]) -> Result<bool> {
    let rank = fv.root_system().rank();
    let mut total = Weight::zero(rank);
    for &w in ws {
        total = &total + fv.chi(w)?;
    }
    let diff = &total - fv.chi(fv.cosets().identity())?;
    Ok(fv.central_values(&diff).iter().all(|c| c.is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flag::GroupData;

    #[test]
    fn chi_boundary_values() {
        let fv = FlagVariety::new("C3", &[2]).unwrap();
        let rs = fv.root_system();
        let e = fv.cosets().identity();
        let expect = (crate::Rat::from_integer(2)) * &(rs.rho() - &fv.parabolic().rho_levi);
        assert_eq!(fv.chi(e).unwrap(), &expect);
        assert!(fv.chi(fv.cosets().top()).unwrap().is_zero());
    }

    #[test]
    fn sp6_chi_restrictions() {
        let fv = FlagVariety::new("C3", &[2]).unwrap();
        let w1 = fv.find("1,3,2,1,3,2").unwrap();
        let w3 = fv.find("3,2").unwrap();
        // Levi simple roots are {1, 3}: coordinates (⟨χ,α1^∨⟩, ⟨χ,α3^∨⟩)
        assert_eq!(chi_levi(&fv, w1).unwrap(), Weight::from_ints(&[1, 1]));
        assert_eq!(chi_levi(&fv, w3).unwrap(), Weight::from_ints(&[3, 1]));
        assert_eq!(deformed_top_coefficient(&fv, &[w1, w1, w3]).unwrap(), BigInt::zero());
        assert!(!is_levi_movable(&fv, &[w1, w1, w3]).unwrap());
        assert!(!hom_central_condition(&fv, &[w1, w1, w3]).unwrap());
    }

    #[test]
    fn stabilizer_boundaries() {
        let g = GroupData::parse("B3").unwrap();
        for cr in [vec![1], vec![2], vec![3], vec![1, 3]] {
            let fv = g.flag_variety(&cr).unwrap();
            let top = stabilizer_simple_roots(&fv, fv.cosets().top()).unwrap();
            assert_eq!(top.delta_qw, vec![1, 2, 3]);
            let e = stabilizer_simple_roots(&fv, 0).unwrap();
            assert_eq!(e.delta_qw, fv.parabolic().levi_simple);
        }
    }

    #[test]
    fn unit_is_deformed_unit() {
        let fv = FlagVariety::new("B3", &[2]).unwrap();
        let top = fv.cosets().top();
        for u in 0..fv.len() {
            assert_eq!(deformed_product_basis(&fv, u, top).unwrap(), CohomClass::basis(u));
        }
    }

    #[test]
    fn dj_profiles_of_identity_and_sums() {
        let fv = FlagVariety::new("C3", &[2]).unwrap();
        assert_eq!(fv.parabolic().m_o, 2);
        assert!(dj_profile(&fv, 0).d.iter().all(|&d| d == 0));
        for w in 0..fv.len() {
            let p = dj_profile(&fv, w);
            assert_eq!(p.total() as usize, fv.length(w));
        }
    }
}
