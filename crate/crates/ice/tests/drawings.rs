use bent_ice::tikz::{emit, parse_orientations, read_state};
use bent_ice::{build_model, enumerate_states, Caps, Family, StrictPartition};

fn fixture(name: &str) -> String {
    let path = format!("{}/tests/fixtures/{name}.tikz", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(path).unwrap()
}

fn lam(s: &str) -> StrictPartition {
    s.parse().unwrap()
}

#[test]
fn drawn_states_are_admissible_and_unique() {
    for (name, fam, l) in [
        ("A_5_4_2", Family::A, "5,4,2"),
        ("B_4_2", Family::B, "4,2"),
        ("Bstar_4_2", Family::Bstar, "4,2"),
        ("C_3_1", Family::C, "3,1"),
        ("Cstar_3_2", Family::Cstar, "3,2"),
        ("D_5_1", Family::D, "5,1"),
        ("BC_5_4_1", Family::BC, "5,4,1"),
        ("B_2_1", Family::B, "2,1"),
    ] {
        let spec = build_model(fam, &lam(l));
        let r = read_state(&spec, &fixture(name));
        assert!(r.is_ok(), "{name}: {r:?}");
    }
}

#[test]
fn emitted_states_read_back() {
    for fam in Family::ALL {
        let spec = build_model(fam, &lam("3,1"));
        for s in enumerate_states(&spec, &Caps::default()).unwrap() {
            let tips = parse_orientations(&emit(&spec, &s)).unwrap();
            assert_eq!(tips.len(), spec.lattice.edges.len());
            assert_eq!(read_state(&spec, &emit(&spec, &s)).unwrap(), s);
        }
    }
}
