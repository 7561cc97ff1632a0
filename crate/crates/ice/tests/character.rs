use std::collections::BTreeMap;

use bent_ice::asm::interleave_chain;
use bent_ice::character::*;
use bent_ice::{
    build_model, enumerate_states, partition_function, state_weight, Caps, Config, Family, LaurentPoly,
    StrictPartition, Var, WeightScheme,
};

type P = LaurentPoly;

fn lam(s: &str) -> StrictPartition {
    s.parse().unwrap()
}

fn x(j: u8, half_units: i32) -> P {
    P::var_raw(Var::X(j), half_units)
}

fn strict_with_largest(n: u8, max: u32) -> Vec<StrictPartition> {
    StrictPartition::all(n, max)
}

#[test]
fn group_orders_and_identity() {
    assert_eq!(weyl_group(GroupType::BC, 2).len(), 8);
    assert_eq!(weyl_group(GroupType::D, 2).len(), 4);
    assert_eq!(weyl_group(GroupType::BC, 3).len(), 48);
    assert_eq!(weyl_group(GroupType::D, 3).len(), 24);
    assert_eq!(SignedPermutation::identity(3).length(GroupType::BC), 0);
    assert_eq!(SignedPermutation::identity(3).length(GroupType::D), 0);
}

#[test]
fn root_count_length_equals_word_length() {
    for group in [GroupType::BC, GroupType::D] {
        for n in 1..=3 {
            let words = word_lengths(group, n);
            let elements = weyl_group(group, n);
            assert_eq!(words.len(), elements.len(), "{group:?} {n}");
            for w in elements {
                assert_eq!(w.length(group), words[&w], "{group:?} {w}");
            }
        }
    }
}

#[test]
fn group_law_is_composition_of_actions() {
    let g = weyl_group(GroupType::BC, 3);
    let v = [5i64, -3, 2];
    for a in &g {
        for b in g.iter().step_by(5) {
            assert_eq!(a.compose(b).act(&v), a.act(&b.act(&v)));
        }
    }
    // longest element of B_2 has length 4
    let w0 = SignedPermutation { sigma: vec![1, 2], v: vec![-1, -1] };
    assert_eq!(w0.length(GroupType::BC), 4);
    assert_eq!(w0.length(GroupType::D), 2);
}

#[test]
fn rank_one_alternants_and_characters() {
    assert_eq!(alternant(Cartan::B, 1, &[]), &x(1, 1) - &x(1, -1));
    assert_eq!(alternant(Cartan::C, 1, &[]), &x(1, 2) - &x(1, -2));
    assert!(alternant(Cartan::D, 1, &[]).is_one());
    assert!(weyl_character(Cartan::B, 2, &[0, 0]).unwrap().is_one());
    assert_eq!(weyl_character(Cartan::C, 1, &[1]).unwrap(), &x(1, 2) + &x(1, -2));
    assert_eq!(weyl_character(Cartan::B, 1, &[1]).unwrap(), &(&x(1, 2) + &P::one()) + &x(1, -2));
}

#[test]
fn character_dimensions() {
    let ones: BTreeMap<_, _> =
        (1..=3).map(|j| (Var::X(j), bent_poly::to_rational(&bent_poly::gi(1, 0)))).collect();
    let dim = |c: Cartan, n: usize, mu: &[u32]| weyl_character(c, n, mu).unwrap().evaluate(&ones).unwrap();
    let int = |k: i64| bent_poly::to_rational(&bent_poly::gi(k, 0));
    assert_eq!(dim(Cartan::C, 2, &[1, 0]), int(4));
    assert_eq!(dim(Cartan::B, 2, &[1, 0]), int(5));
    assert_eq!(dim(Cartan::C, 2, &[1, 1]), int(5));
    assert_eq!(dim(Cartan::B, 3, &[1, 0, 0]), int(7));
    assert_eq!(dim(Cartan::D, 3, &[1, 0, 0]), int(6));
    assert_eq!(dim(Cartan::C, 3, &[2, 0, 0]), int(21));
}

#[test]
fn simple_reflections_negate_alternants() {
    for (cartan, n) in [(Cartan::B, 2), (Cartan::C, 3), (Cartan::D, 3)] {
        let a = alternant(cartan, n, &[2, 1]);
        let n8 = n as u8;
        let mut actions: Vec<BTreeMap<Var, P>> =
            (1..n8).map(|i| BTreeMap::from([(Var::X(i), x(i + 1, 1)), (Var::X(i + 1), x(i, 1))])).collect();
        actions.push(match cartan {
            Cartan::D => BTreeMap::from([(Var::X(n8 - 1), x(n8, -1)), (Var::X(n8), x(n8 - 1, -1))]),
            _ => BTreeMap::from([(Var::X(n8), x(n8, -1))]),
        });
        for s in actions {
            assert_eq!(a.substitute(&s).unwrap(), -&a, "{cartan:?}");
        }
    }
}

#[test]
fn identity_element_state() {
    for fam in [Family::B, Family::Bstar, Family::C, Family::Cstar] {
        let l = lam("3,1");
        let spec = build_model(fam, &l);
        let scheme = WeightScheme::character(fam, 2);
        let mut found = 0;
        for s in enumerate_states(&spec, &Caps::default()).unwrap() {
            if state_weight(&spec.lattice, &s, &scheme).unwrap().is_zero() {
                continue;
            }
            let w = state_to_weyl(&spec, &s).unwrap();
            if w == SignedPermutation::identity(2) {
                found += 1;
                assert_eq!(s.count(Config::D), 2, "{fam}");
                assert_eq!(s.count(Config::U), 0, "{fam}");
            }
        }
        assert_eq!(found, 1, "{fam}");
    }
}

#[test]
fn identity_state_chain() {
    for n in 1..=3u8 {
        let rho = StrictPartition::rho(n);
        let spec = build_model(Family::B, &rho);
        let scheme = WeightScheme::character(Family::B, n);
        let s = enumerate_states(&spec, &Caps::default())
            .unwrap()
            .into_iter()
            .find(|s| {
                !state_weight(&spec.lattice, s, &scheme).unwrap().is_zero()
                    && state_to_weyl(&spec, s).unwrap() == SignedPermutation::identity(n as usize)
            })
            .unwrap();
        let chain = interleave_chain(&spec, &s).unwrap().chain;
        let parts = rho.parts().to_vec();
        let mut expected = vec![parts.clone(); n as usize + 1];
        for k in (0..n as usize).rev() {
            expected.push(parts[..k].to_vec());
        }
        assert_eq!(chain, expected);
    }
}

#[test]
fn single_row_pair_bend_up() {
    let spec = build_model(Family::B, &lam("1"));
    let states = enumerate_states(&spec, &Caps::default()).unwrap();
    let up = states.iter().find(|s| s.count(Config::U) == 1).unwrap();
    let w = state_to_weyl(&spec, up).unwrap();
    assert_eq!((w.sigma.clone(), w.v.clone()), (vec![1], vec![-1]));
    let down = states.iter().find(|s| s.count(Config::D) == 1).unwrap();
    assert_eq!(state_to_weyl(&spec, down).unwrap(), SignedPermutation::identity(1));
}

#[test]
fn identity_weight_at_rho() {
    for n in 1..=3u8 {
        let w =
            weyl_state_weight(&SignedPermutation::identity(n as usize), Family::B, &StrictPartition::rho(n))
                .unwrap();
        let rho: P = (1..=n).map(|j| x(j, 2 * (n - j) as i32 + 1)).fold(P::one(), |a, b| &a * &b);
        let sign = if n % 2 == 0 { 1 } else { -1 };
        assert_eq!(w, &P::int(sign) * &(&rho * &rho));
    }
}

#[test]
fn nonzero_states_match_group_elements() {
    let caps = Caps::default();
    for fam in [Family::B, Family::Bstar, Family::C, Family::Cstar, Family::D, Family::BC] {
        for n in 1..=3u8 {
            let max = if n == 3 { 4 } else { 5 };
            for l in strict_with_largest(n, max) {
                if fam == Family::D && !l.contains(1) {
                    continue;
                }
                let r = weyl_bijection_check(fam, &l, &caps).unwrap();
                assert!(r.bijective, "{fam}^{l}: {} vs {}", r.nonzero_states, r.group_order);
                assert!(r.weights_match, "{fam}^{l}: {:?}", r.witness);
                assert!(r.phi_parity, "{fam}^{l}: {:?}", r.witness);
                let order = if matches!(fam, Family::D | Family::BC) { 1 << (n - 1) } else { 1 << n };
                let fact: usize = (1..=n as usize).product();
                assert_eq!(r.group_order, order * fact);
            }
        }
    }
}

#[test]
fn character_theorem_small_ranks() {
    let caps = Caps::default();
    for fam in [Family::B, Family::Bstar, Family::C, Family::Cstar, Family::D, Family::BC] {
        for l in ["2,1", "3,1", "3,2", "4,1"] {
            let l = lam(l);
            if fam == Family::D && !l.contains(1) {
                continue;
            }
            let v = character_theorem_check(fam, &l, &caps).unwrap();
            assert!(v.pass, "{fam}^{l}: {}", v.difference);
        }
    }
    assert!(character_theorem_check(Family::B, &lam("4,2,1"), &caps).unwrap().pass);
    assert!(character_theorem_check(Family::D, &lam("4,2,1"), &caps).unwrap().pass);
}

#[test]
fn d_family_needs_a_part_equal_to_one() {
    // with λ_n > 1 every signed permutation carries a nonzero state
    let caps = Caps::default();
    let l = lam("3,2");
    let r = weyl_bijection_check(Family::D, &l, &caps).unwrap();
    assert_eq!((r.nonzero_states, r.group_order), (8, 4));
    assert!(!character_theorem_check(Family::D, &l, &caps).unwrap().pass);
    let z = partition_function(&build_model(Family::D, &l), &WeightScheme::character(Family::D, 2), &caps)
        .unwrap();
    let zr = partition_function(
        &build_model(Family::D, &lam("2,1")),
        &WeightScheme::character(Family::D, 2),
        &caps,
    )
    .unwrap();
    let q = &(&P::one() - &x(1, 4)) * &(&P::one() - &x(2, 4));
    assert_eq!(z, &zr * &q);
}

#[test]
fn zero_weight_states_are_rejected() {
    let spec = build_model(Family::B, &lam("2,1"));
    let s = enumerate_states(&spec, &Caps::default())
        .unwrap()
        .into_iter()
        .find(|s| s.count(Config::C1) > 0)
        .unwrap();
    assert!(state_to_weyl(&spec, &s).is_err());
}

#[test]
fn deformed_denominator_identity() {
    let caps = Caps::default();
    for n in 1..=3u8 {
        for l in StrictPartition::all(n, 5) {
            let v = tokuyama_check(&l, &caps).unwrap();
            assert!(v.pass && v.pass_at_minus_one, "{l}");
        }
    }
    let z =
        partition_function(&build_model(Family::A, &lam("1")), &WeightScheme::tokuyama(1), &caps).unwrap();
    assert_eq!(z, P::var(Var::X(1)));
}

#[test]
fn minus_one_gives_weyl_denominator() {
    let caps = Caps::default();
    let z =
        partition_function(&build_model(Family::A, &lam("2,1")), &WeightScheme::tokuyama(2), &caps).unwrap();
    let at = BTreeMap::from([(Var::Tau, P::i())]);
    let expected = &(&x(1, 4) * &x(2, 2)) * &(&P::one() - &(&x(2, 2) * &x(1, -2)));
    assert_eq!(z.substitute(&at).unwrap(), expected);
}
