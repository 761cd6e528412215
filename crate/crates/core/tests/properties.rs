use std::collections::{BTreeSet, HashSet};

use flagcalc::deformed;
use flagcalc::levi_rep::RepEngine;
use flagcalc::lr_oracle::{lr_coefficient, Partition};
use flagcalc::{FlagVariety, GroupData, GroupType, ParabolicData, Rat, RootSystem, TypeLetter, Weight, WeylElement, WeylGroup};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn supported() -> Vec<(TypeLetter, usize)> {
    let mut v = Vec::new();
    v.extend((1..=7).map(|r| (TypeLetter::A, r)));
    v.extend((2..=5).map(|r| (TypeLetter::B, r)));
    v.extend((2..=5).map(|r| (TypeLetter::C, r)));
    v.extend((4..=5).map(|r| (TypeLetter::D, r)));
    v.push((TypeLetter::G, 2));
    v
}

#[test]
fn positive_roots_sum_to_two_rho() {
    for (t, r) in supported() {
        let rs = RootSystem::build(t, r).unwrap();
        let mut sum = vec![0i64; r];
        for b in rs.positive_roots() {
            for (s, c) in sum.iter_mut().zip(b) {
                *s += c;
            }
        }
        let two_rho = Rat::from_integer(2) * rs.rho();
        assert_eq!(rs.root_to_weight(&sum), two_rho, "{t:?}{r}");
    }
}

#[test]
fn parabolic_dimension_endpoints() {
    for (t, r) in supported() {
        let rs = RootSystem::build(t, r).unwrap();
        let all: Vec<usize> = (1..=r).collect();
        assert_eq!(ParabolicData::new(&rs, &all).unwrap().dim_gp, 0);
        assert_eq!(ParabolicData::new(&rs, &[]).unwrap().dim_gp, rs.num_positive_roots());
    }
}

proptest! {
    #[test]
    fn eval_at_x_is_linear(
        a in (-20i64..20, 1i64..7),
        b in (-20i64..20, 1i64..7),
        l in prop::collection::vec(-6i64..7, 3),
        m in prop::collection::vec(-6i64..7, 3),
        j in 1usize..=3,
        kind in 0usize..3,
    ) {
        let letter = [TypeLetter::A, TypeLetter::B, TypeLetter::C][kind];
        let rs = RootSystem::build(letter, 3).unwrap();
        let (a, b) = (Rat::new(a.0, a.1), Rat::new(b.0, b.1));
        let (l, m) = (Weight::from_ints(&l), Weight::from_ints(&m));
        let combo = &(a * &l) + &(b * &m);
        let lhs = rs.eval_at_x(&combo, j).unwrap();
        let rhs = a * rs.eval_at_x(&l, j).unwrap() + b * rs.eval_at_x(&m, j).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

fn small_groups() -> Vec<&'static str> {
    vec!["A2", "A3", "B2", "B3", "C3", "G2"]
}

#[test]
fn lengths_count_negative_images() {
    for g in small_groups() {
        let rs = RootSystem::from_type(GroupType::parse(g).unwrap()).unwrap();
        let w = WeylGroup::new(&rs).unwrap();
        for el in w.elements() {
            let negatives = rs
                .positive_roots()
                .iter()
                .filter(|b| el.apply_root(b).iter().any(|&c| c < 0))
                .count();
            assert_eq!(negatives, el.length(), "{g} {}", el.word_string());
        }
    }
}

#[test]
fn inversion_set_of_longest_times_w_is_complement() {
    for g in small_groups() {
        let rs = RootSystem::from_type(GroupType::parse(g).unwrap()).unwrap();
        let w = WeylGroup::new(&rs).unwrap();
        let w0 = w.get(w.longest());
        for el in w.elements() {
            let inv: BTreeSet<usize> = el.inversion_set(&rs).into_iter().collect();
            let comp: BTreeSet<usize> = w0.compose(&rs, el).inversion_set(&rs).into_iter().collect();
            let all: BTreeSet<usize> = (0..rs.num_positive_roots()).collect();
            assert_eq!(comp, all.difference(&inv).copied().collect::<BTreeSet<_>>());
        }
    }
}

/// Bruhat order by the subword property of a reduced word of `w`.
fn bruhat_le(rs: &RootSystem, v: &WeylElement, w: &WeylElement) -> bool {
    let word = w.word();
    let n = word.len();
    let mut seen = HashSet::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != v.length() {
            continue;
        }
        let sub: Vec<usize> = (0..n).filter(|k| mask >> k & 1 == 1).map(|k| word[k]).collect();
        if !seen.insert(sub.clone()) {
            continue;
        }
        if WeylElement::from_word(rs, &sub).unwrap() == *v {
            return true;
        }
    }
    false
}

#[test]
fn cosets_are_minimal_and_covers_match_bruhat() {
    let gd: Vec<(&str, Vec<usize>)> = vec![
        ("A3", vec![2]),
        ("A3", vec![1, 3]),
        ("B3", vec![1]),
        ("C3", vec![2]),
        ("G2", vec![1]),
        ("G2", vec![2]),
        ("B2", vec![1, 2]),
    ];
    for (g, cross) in gd {
        let fv = FlagVariety::new(g, &cross).unwrap();
        let rs = fv.root_system();
        for k in 0..fv.len() {
            let el = fv.element(k);
            for &i in &fv.parabolic().levi_simple {
                let img = el.apply_root(&rs.positive_roots()[rs.simple_root_index(i)]);
                assert!(img.iter().all(|&c| c >= 0), "{g} {}", el.word_string());
            }
        }
        let mut expected = 0;
        for v in 0..fv.len() {
            for w in 0..fv.len() {
                if fv.length(w) == fv.length(v) + 1 && bruhat_le(rs, fv.element(v), fv.element(w)) {
                    expected += 1;
                }
            }
        }
        assert_eq!(fv.cosets().covers().len(), expected, "{g} {cross:?}");
    }
}

fn variety_zoo() -> Vec<FlagVariety> {
    let mut out = Vec::new();
    for (g, crosses) in [
        ("A2", vec![vec![1], vec![1, 2]]),
        ("A3", vec![vec![2], vec![1, 3]]),
        ("B2", vec![vec![1], vec![2], vec![1, 2]]),
        ("C3", vec![vec![1], vec![2], vec![3]]),
        ("B3", vec![vec![3]]),
        ("G2", vec![vec![1], vec![2], vec![1, 2]]),
    ] {
        let gd = GroupData::parse(g).unwrap();
        for c in crosses {
            out.push(gd.flag_variety(&c).unwrap());
        }
    }
    out
}

#[test]
fn structure_constants_nonnegative_graded_and_dual() {
    for fv in variety_zoo() {
        let sc = fv.schubert();
        let dim = fv.dimension();
        for u in 0..fv.len() {
            for v in 0..fv.len() {
                let prod = sc.product_basis(u, v).unwrap();
                for (w, c) in prod.terms() {
                    assert!(*c > BigInt::zero(), "{fv:?}");
                    // codim w = codim u + codim v
                    assert_eq!(dim - fv.length(w), (dim - fv.length(u)) + (dim - fv.length(v)));
                }
                let point = sc.structure_constant(u, v, fv.cosets().identity()).unwrap();
                let expect = if v == sc.dual(u) { BigInt::one() } else { BigInt::zero() };
                assert_eq!(point, expect, "{fv:?} {u} {v}");
            }
        }
    }
}

#[test]
fn deformed_bounds_and_cominuscule_collapse() {
    for fv in variety_zoo() {
        let collapse = fv.parabolic().is_maximal() && fv.parabolic().m_o == 1;
        for u in 0..fv.len() {
            for v in 0..fv.len() {
                for w in 0..fv.len() {
                    let c = fv.schubert().structure_constant(u, v, w).unwrap();
                    let d = deformed::deformed_structure_constant(&fv, u, v, w).unwrap();
                    assert!(d >= BigInt::zero() && d <= c);
                    if collapse {
                        assert_eq!(c, d, "{fv:?}");
                    }
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn both_products_associative_and_commutative(pick in 0usize..15, a in 0usize..1000, b in 0usize..1000, c in 0usize..1000) {
        let zoo = variety_zoo();
        let fv = &zoo[pick % zoo.len()];
        let n = fv.len();
        let (a, b, c) = (a % n, b % n, c % n);
        let sc = fv.schubert();
        let basis = flagcalc::schubert::CohomClass::basis;
        let ab = sc.cup_product(&basis(a), &basis(b)).unwrap();
        prop_assert_eq!(&ab, &sc.cup_product(&basis(b), &basis(a)).unwrap());
        let left = sc.cup_product(&ab, &basis(c)).unwrap();
        let right = sc.cup_product(&basis(a), &sc.cup_product(&basis(b), &basis(c)).unwrap()).unwrap();
        prop_assert_eq!(left, right);

        let dab = deformed::deformed_cup_product(fv, &basis(a), &basis(b)).unwrap();
        prop_assert_eq!(&dab, &deformed::deformed_cup_product(fv, &basis(b), &basis(a)).unwrap());
        let dl = deformed::deformed_cup_product(fv, &dab, &basis(c)).unwrap();
        let dbc = deformed::deformed_cup_product(fv, &basis(b), &basis(c)).unwrap();
        let dr = deformed::deformed_cup_product(fv, &basis(a), &dbc).unwrap();
        prop_assert_eq!(dl, dr);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn freudenthal_sums_to_weyl_dimension(kind in 0usize..4, l in prop::collection::vec(0i64..7, 3)) {
        let (letter, rank) = [(TypeLetter::A, 3), (TypeLetter::B, 3), (TypeLetter::C, 3), (TypeLetter::G, 2)][kind];
        let eng = RepEngine::new(RootSystem::build(letter, rank).unwrap());
        let l = &l[..rank];
        let total: BigInt = eng.character(l).unwrap().weights.iter().map(|(_, m)| m.clone()).sum();
        prop_assert_eq!(total, eng.weyl_dim(l).unwrap());
    }

    #[test]
    fn klimyk_conserves_dimension(kind in 0usize..3, l in prop::collection::vec(0i64..5, 2), m in prop::collection::vec(0i64..5, 2)) {
        let letter = [TypeLetter::A, TypeLetter::B, TypeLetter::G][kind];
        let eng = RepEngine::new(RootSystem::build(letter, 2).unwrap());
        let d = eng.tensor_decompose(&l, &m).unwrap();
        let mut total = BigInt::zero();
        for (nu, mult) in &d {
            total += eng.weyl_dim(nu).unwrap() * mult;
        }
        prop_assert_eq!(total, eng.weyl_dim(&l).unwrap() * eng.weyl_dim(&m).unwrap());
    }

    #[test]
    fn invariants_ignore_order(
        kind in 0usize..3,
        ws in prop::collection::vec(prop::collection::vec(0i64..4, 2), 3),
        perm in 0usize..6,
    ) {
        let letter = [TypeLetter::A, TypeLetter::B, TypeLetter::G][kind];
        let eng = RepEngine::new(RootSystem::build(letter, 2).unwrap());
        let orders = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let permuted: Vec<Vec<i64>> = orders[perm].iter().map(|&k| ws[k].clone()).collect();
        prop_assert_eq!(eng.invariant_dimension(&ws).unwrap(), eng.invariant_dimension(&permuted).unwrap());
    }
}

/// `SL(r)` invariants of `V_λ ⊗ V_μ ⊗ V_ν` as the LR coefficient `c^{ν^c}_{λμ}`,
/// `ν^c` the complement of `ν` in an `r × m` rectangle.
fn sl_invariants_by_lr(parts: &[Vec<u32>], r: usize) -> u64 {
    let total: u32 = parts.iter().flatten().sum();
    if total as usize % r != 0 {
        return 0;
    }
    let m = total / r as u32;
    let nu = &parts[2];
    if nu.first().copied().unwrap_or(0) > m {
        return 0;
    }
    let comp: Vec<u32> = (0..r).rev().map(|i| m - nu.get(i).copied().unwrap_or(0)).collect();
    lr_coefficient(
        &Partition::new(&parts[0]).unwrap(),
        &Partition::new(&parts[1]).unwrap(),
        &Partition::new(&comp).unwrap(),
    )
}

#[test]
fn type_a_invariants_agree_with_lr() {
    let cases: Vec<(usize, [Vec<u32>; 3])> = vec![
        (3, [vec![2, 0, 0], vec![3, 3, 0], vec![3, 1, 0]]),
        (5, [vec![4, 3, 1, 0, 0], vec![4, 4, 2, 0, 0], vec![5, 4, 2, 1, 0]]),
        (3, [vec![4, 0, 0], vec![6, 6, 0], vec![6, 2, 0]]),
        (3, [vec![6, 0, 0], vec![9, 9, 0], vec![9, 3, 0]]),
        (3, [vec![2, 1, 0], vec![2, 1, 0], vec![2, 1, 0]]),
    ];
    for (r, parts) in cases {
        let eng = RepEngine::new(RootSystem::build(TypeLetter::A, r - 1).unwrap());
        let weights: Vec<Vec<i64>> = parts
            .iter()
            .map(|p| Partition::new(p).unwrap().sl_weight(r))
            .collect();
        let klimyk = eng.invariant_dimension(&weights).unwrap();
        assert_eq!(klimyk, BigInt::from(sl_invariants_by_lr(&parts, r)), "{parts:?}");
    }
}
