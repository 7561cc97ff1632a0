use bent_ice::lattice::Config;
use bent_ice::*;

type P = LaurentPoly;

fn lam(s: &str) -> StrictPartition {
    s.parse().unwrap()
}

fn caps() -> Caps {
    Caps::default()
}

/// Every orientation of the free edges, filtered by the vertex rule.
fn brute_force(spec: &ModelSpec) -> Vec<Vec<bool>> {
    let lat = &spec.lattice;
    let free: Vec<usize> = (0..lat.edges.len()).filter(|&e| lat.edges[e].fixed.is_none()).collect();
    assert!(free.len() <= 22, "oracle too large: {} free edges", free.len());
    let mut out = Vec::new();
    for mask in 0u32..(1 << free.len()) {
        let bits: Vec<bool> = (0..lat.edges.len())
            .map(|e| match lat.edges[e].fixed {
                Some(b) => b,
                None => mask >> free.iter().position(|&f| f == e).unwrap() & 1 == 1,
            })
            .collect();
        if lat.is_admissible(&bits) {
            out.push(bits);
        }
    }
    out.sort();
    out
}

#[test]
fn enumeration_matches_brute_force() {
    let cases = [
        (Family::A, "1"),
        (Family::A, "2,1"),
        (Family::A, "3,1"),
        (Family::A, "3,2,1"),
        (Family::B, "1"),
        (Family::B, "2,1"),
        (Family::B, "3,1"),
        (Family::Bstar, "2,1"),
        (Family::C, "1"),
        (Family::Cstar, "1"),
        (Family::Cstar, "2,1"),
        (Family::D, "2,1"),
        (Family::D, "3,2"),
        (Family::BC, "2,1"),
        (Family::BC, "3,1"),
    ];
    for (f, l) in cases {
        let spec = build_model(f, &lam(l));
        let mut got: Vec<Vec<bool>> =
            enumerate_states(&spec, &caps()).unwrap().into_iter().map(|s| s.bits).collect();
        let n = got.len();
        got.sort();
        got.dedup();
        assert_eq!(got.len(), n, "{f}^{l} has duplicates");
        assert_eq!(got, brute_force(&spec), "{f}^{l}");
    }
}

#[test]
fn small_counts() {
    assert_eq!(enumerate_states(&build_model(Family::A, &lam("1")), &caps()).unwrap().len(), 1);
    assert_eq!(enumerate_states(&build_model(Family::A, &lam("2,1")), &caps()).unwrap().len(), 2);
}

#[test]
fn enumeration_is_stable() {
    let spec = build_model(Family::C, &lam("3,1"));
    let a = enumerate_states(&spec, &caps()).unwrap();
    let b = enumerate_states(&build_model(Family::C, &lam("3,1")), &caps()).unwrap();
    assert_eq!(a, b);
}

#[test]
fn caps_are_enforced() {
    let spec = build_model(Family::B, &lam("9,1"));
    assert!(matches!(enumerate_states(&spec, &caps()), Err(IceError::CapExceeded(_))));
    let spec = build_model(Family::A, &lam("5,4,3,2,1"));
    assert!(matches!(enumerate_states(&spec, &caps()), Err(IceError::CapExceeded(_))));
    let wide = Caps { max_n: 5, max_cols: 9 };
    assert!(enumerate_states(&build_model(Family::A, &lam("5,4,3,2,1")), &wide).is_ok());
}

#[test]
fn small_weights() {
    let spec = build_model(Family::A, &lam("1"));
    let states = enumerate_states(&spec, &caps()).unwrap();
    assert_eq!(states[0].configs, vec![Config::C2]);
    let w = state_weight(&spec.lattice, &states[0], &WeightScheme::generic(Family::A, 1)).unwrap();
    assert!(w.is_one());
    let z = partition_function(&spec, &WeightScheme::tokuyama(1), &caps()).unwrap();
    assert_eq!(z, P::var(Var::X(1)));

    let spec = build_model(Family::B, &lam("1"));
    let d = WeightScheme::deformation(Family::B, 1);
    let states = enumerate_states(&spec, &caps()).unwrap();
    let down = states.iter().find(|s| s.count(Config::D) == 1).unwrap();
    let t1x1 = &P::var(Var::T(1)) * &P::var(Var::X(1));
    assert_eq!(state_weight(&spec.lattice, down, &d).unwrap(), &P::int(-1) * &t1x1);
    assert_eq!(partition_function(&spec, &d, &caps()).unwrap(), &P::one() - &t1x1);
}

#[test]
fn all_ones_counts_states() {
    for f in Family::ALL {
        for l in ["1", "2,1", "3,1"] {
            let spec = build_model(f, &lam(l));
            let n = enumerate_states(&spec, &caps()).unwrap().len();
            let z = partition_function(&spec, &WeightScheme::all_ones(f, spec.n()), &caps()).unwrap();
            assert_eq!(z, P::int(n as i64), "{f}^{l}");
        }
    }
}

#[test]
fn missing_weight_is_an_error() {
    let spec = build_model(Family::B, &lam("2,1"));
    let mut s = WeightScheme::generic(Family::B, 2);
    s.rows.remove(&RowLabel::bar(2));
    let states = enumerate_states(&spec, &caps()).unwrap();
    let e = state_weight(&spec.lattice, &states[0], &s).unwrap_err();
    assert!(matches!(e, IceError::MissingWeight(ref m) if m.contains("2b")), "{e}");
}

#[test]
fn degree_law() {
    for l in ["1", "2,1", "3,1", "3,2", "3,2,1", "4,2,1"] {
        let spec = build_model(Family::B, &lam(l));
        let g = WeightScheme::generic(Family::B, spec.n());
        let want = (spec.vertex_count() - spec.n() as usize) as i64;
        for s in enumerate_states(&spec, &caps()).unwrap() {
            let w = state_weight(&spec.lattice, &s, &g).unwrap();
            assert!(w.terms().all(|(m, _)| m.raw_degree() == want), "B^{l}: {w}");
        }
    }
}

#[test]
fn c2_excess_is_n() {
    for f in Family::BENT {
        for l in ["1", "2,1", "3,1", "3,2,1", "4,3,1"] {
            let spec = build_model(f, &lam(l));
            for s in enumerate_states(&spec, &caps()).unwrap() {
                let excess = s.count(Config::C2) as i64 - s.count(Config::C1) as i64;
                // an L corner stands in for one c1
                let want = spec.n() as i64 + s.count(Config::L) as i64;
                assert_eq!(excess, want, "{f}^{l}");
            }
        }
    }
}
