use std::collections::HashSet;

use bent_ice::asm::{
    bijection_check, interleave_chain, okada_matrix_weight, okada_stats, state_to_matrix, SignMatrix,
    Symmetry,
};
use bent_ice::tikz::read_state;
use bent_ice::{
    build_model, enumerate_states, Caps, Config, Family, LaurentPoly, StrictPartition, Var, WeightScheme,
};

fn lam(s: &str) -> StrictPartition {
    s.parse().unwrap()
}

fn fixture(name: &str) -> String {
    std::fs::read_to_string(format!("{}/tests/fixtures/{name}.tikz", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

/// Every N×N ASM, built row by row from column partial sums.
fn all_asms(size: usize) -> Vec<Vec<Vec<i8>>> {
    fn rows_from(sums: &[i8], size: usize) -> Vec<Vec<i8>> {
        let mut out = Vec::new();
        let mut row = vec![0i8; size];
        fn go(j: usize, run: i8, sums: &[i8], row: &mut Vec<i8>, out: &mut Vec<Vec<i8>>) {
            if j == row.len() {
                if run == 1 {
                    out.push(row.clone());
                }
                return;
            }
            for x in [-1i8, 0, 1] {
                let (r, c) = (run + x, sums[j] + x);
                if (0..=1).contains(&r) && (0..=1).contains(&c) {
                    row[j] = x;
                    go(j + 1, r, sums, row, out);
                }
            }
            row[j] = 0;
        }
        go(0, 0, sums, &mut row, &mut out);
        let _ = size;
        out
    }
    let mut done = Vec::new();
    let mut frontier = vec![(Vec::<Vec<i8>>::new(), vec![0i8; size])];
    while let Some((m, sums)) = frontier.pop() {
        if m.len() == size {
            if sums.iter().all(|&s| s == 1) {
                done.push(m);
            }
            continue;
        }
        for r in rows_from(&sums, size) {
            let s: Vec<i8> = sums.iter().zip(&r).map(|(a, b)| a + b).collect();
            let mut m2 = m.clone();
            m2.push(r);
            frontier.push((m2, s));
        }
    }
    done
}

fn half_turn(m: &[Vec<i8>]) -> bool {
    let n = m.len();
    (0..n).all(|i| (0..n).all(|j| m[i][j] == m[n - 1 - i][n - 1 - j]))
}

#[test]
fn oracle_counts_asms() {
    let c: Vec<usize> = (1..=5).map(|k| all_asms(k).len()).collect();
    assert_eq!(c, vec![1, 2, 7, 42, 429]);
}

#[test]
fn rho_states_biject_with_half_turn_symmetric_asms() {
    for (fam, size) in [(Family::B, 0usize), (Family::C, 1)] {
        for n in 1..=3u8 {
            let spec = build_model(fam, &StrictPartition::rho(n));
            let states = enumerate_states(&spec, &Caps::default()).unwrap();
            let images: HashSet<Vec<Vec<i8>>> = states
                .iter()
                .map(|s| {
                    let m = state_to_matrix(&spec, s).unwrap();
                    assert!(m.is_asm() && m.is_half_turn_symmetric(), "{fam} n={n}");
                    m.entries
                })
                .collect();
            assert_eq!(images.len(), states.len(), "{fam} n={n} not injective");
            let oracle: HashSet<Vec<Vec<i8>>> =
                all_asms(2 * n as usize + size).into_iter().filter(|m| half_turn(m)).collect();
            assert_eq!(images, oracle, "{fam} n={n}");
        }
    }
}

#[test]
fn injective_on_general_shapes() {
    for fam in [Family::A, Family::B, Family::Bstar, Family::C, Family::Cstar, Family::D] {
        let spec = build_model(fam, &lam("3,1"));
        let states = enumerate_states(&spec, &Caps::default()).unwrap();
        let images: HashSet<_> = states.iter().map(|s| state_to_matrix(&spec, s).unwrap()).collect();
        assert_eq!(images.len(), states.len(), "{fam}");
    }
    let spec = build_model(Family::BC, &lam("3,1"));
    let s = &enumerate_states(&spec, &Caps::default()).unwrap()[0];
    assert!(state_to_matrix(&spec, s).is_err());
}

#[test]
fn drawn_states_give_printed_matrices() {
    let spec = build_model(Family::Bstar, &lam("4,2"));
    let m = state_to_matrix(&spec, &read_state(&spec, &fixture("Bstar_4_2")).unwrap()).unwrap();
    assert_eq!(
        m.entries,
        vec![
            vec![1, -1, 0, 0, 1, 0, 0, 0],
            vec![0, 1, 0, 0, 0, 0, 0, 0],
            vec![0, 0, 1, -1, -1, 1, 0, 0],
            vec![0, 0, 0, 0, 0, 0, 1, 0],
            vec![0, 0, 0, 1, 0, 0, -1, 1],
        ]
    );
    let spec = build_model(Family::Cstar, &lam("3,2"));
    let m = state_to_matrix(&spec, &read_state(&spec, &fixture("Cstar_3_2")).unwrap()).unwrap();
    assert_eq!(
        m.entries,
        vec![
            vec![1, 0, -1, 1, 0, 0, 0],
            vec![0, 1, 0, -1, 1, 0, 0],
            vec![0, 0, 1, -1, 0, 1, 0],
            vec![0, 0, 0, 1, -1, 0, 1],
        ]
    );
}

#[test]
fn single_vertex_matrix() {
    let spec = build_model(Family::A, &lam("1"));
    let s = &enumerate_states(&spec, &Caps::default()).unwrap()[0];
    assert_eq!(state_to_matrix(&spec, s).unwrap().entries, vec![vec![1]]);
}

#[test]
fn stats_of_identity_and_anti_identity() {
    for n in 1..=3 {
        let st = okada_stats(&SignMatrix::identity(2 * n)).unwrap();
        assert_eq!((st.inv, st.minus_count), (0, 0));
        assert!(st.x_exponent.iter().all(|&e| e == 0));
        assert!(okada_matrix_weight(&SignMatrix::identity(2 * n)).unwrap().is_one());
        let st = okada_stats(&SignMatrix::anti_identity(2 * n)).unwrap();
        assert_eq!(st.minus_count, 0);
        let d: Vec<i64> = (0..n as i64).map(|k| 2 * (2 * (n as i64 - k) - 1)).collect();
        assert_eq!(st.x_exponent, d);
    }
    let bad = SignMatrix::new(vec![vec![1, 1], vec![0, 0]], Symmetry::None);
    assert!(okada_stats(&bad).is_err());
}

#[test]
fn single_inversion_weight() {
    // inv 1 from one swapped pair in the top-right quartile corner
    let m = SignMatrix::new(
        vec![vec![0, 1, 0, 0], vec![1, 0, 0, 0], vec![0, 0, 0, 1], vec![0, 0, 1, 0]],
        Symmetry::HalfTurn,
    );
    let st = okada_stats(&m).unwrap();
    assert_eq!((st.inv, st.minus_count, st.i1_plus, st.i2), (2, 0, 0, 2));
    let m = SignMatrix::new(
        vec![vec![1, 0, 0, 0], vec![0, 0, 1, 0], vec![0, 1, 0, 0], vec![0, 0, 0, 1]],
        Symmetry::HalfTurn,
    );
    let st = okada_stats(&m).unwrap();
    assert_eq!((st.inv, st.minus_count, st.i1_plus, st.i2), (1, 0, 1, 0));
    let t = LaurentPoly::var(Var::Tau);
    let x = &LaurentPoly::var(Var::X(2));
    assert_eq!(okada_matrix_weight(&m).unwrap(), &(&LaurentPoly::int(-1) * &t) * x);
}

#[test]
fn counting_lemmas_per_state() {
    for n in 1..=3u8 {
        let spec = build_model(Family::B, &StrictPartition::rho(n));
        for s in enumerate_states(&spec, &Caps::default()).unwrap() {
            let st = okada_stats(&state_to_matrix(&spec, &s).unwrap()).unwrap();
            let c1 = s.count(Config::C1) as i64;
            let b = (s.count(Config::B1) + s.count(Config::B2)) as i64;
            let d = s.count(Config::D) as i64;
            assert_eq!(st.minus_count, 2 * c1);
            assert_eq!(st.inv - st.minus_count, b);
            assert_eq!(st.i1_plus - st.i1_minus, d);
        }
    }
}

#[test]
fn matrix_weight_matches_lattice_weight() {
    for n in 1..=3u8 {
        let r = bijection_check(n, &WeightScheme::okada(Family::B, n), &Caps::default()).unwrap();
        assert!(r.pass && r.lemmas, "n={n}: {:?}", r.witness);
        assert_eq!(r.matrices, r.states);
    }
    let mut bad = WeightScheme::okada(Family::B, 2);
    bad.bend_up.insert(bent_ice::RowLabel::plain(1), LaurentPoly::int(2));
    let r = bijection_check(2, &bad, &Caps::default()).unwrap();
    assert!(!r.pass && r.witness.is_some());
}

#[test]
fn drawn_chain() {
    let spec = build_model(Family::B, &lam("2,1"));
    let s = read_state(&spec, &fixture("B_2_1")).unwrap();
    let ch = interleave_chain(&spec, &s).unwrap();
    assert_eq!(ch.chain, vec![vec![2, 1], vec![2], vec![1], vec![], vec![]]);
}

#[test]
fn chains_reproduce_matrices() {
    for l in ["1", "2,1", "3,1", "4,2", "3,2,1"] {
        let lambda = lam(l);
        let spec = build_model(Family::B, &lambda);
        for s in enumerate_states(&spec, &Caps::default()).unwrap() {
            let ch = interleave_chain(&spec, &s).unwrap();
            assert_eq!(ch.chain[0], lambda.parts().to_vec());
            assert!(ch.chain.last().unwrap().is_empty());
            let m = state_to_matrix(&spec, &s).unwrap();
            let left: Vec<Vec<i8>> =
                m.entries.iter().map(|r| r[..lambda.largest() as usize].to_vec()).collect();
            assert_eq!(ch.c_matrix(lambda.largest()), left);
        }
    }
}
