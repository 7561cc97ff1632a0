use bent_ice::model::EdgeGeom;
use bent_ice::*;

fn lam(s: &str) -> StrictPartition {
    s.parse().unwrap()
}

fn count(f: Family, l: &str) -> usize {
    build_model(f, &lam(l)).lattice.count_states()
}

#[test]
fn type_a_top_boundary() {
    let m = build_model(Family::A, &lam("5,4,2"));
    assert_eq!(m.rows.len(), 3);
    assert_eq!(m.columns.len(), 5);
    let outward: Vec<u32> = m
        .columns
        .iter()
        .enumerate()
        .filter(|&(c, _)| {
            let e = m.edge_at(EdgeGeom::V { col: c, slot: 0 }).unwrap();
            m.lattice.edges[e].fixed == Some(false)
        })
        .map(|(_, col)| col.value())
        .collect();
    assert_eq!(outward, vec![5, 4, 2]);
}

#[test]
fn shapes() {
    let b = build_model(Family::B, &lam("1"));
    assert_eq!(b.rows, vec![RowLabel::plain(1), RowLabel::bar(1)]);
    assert_eq!(b.columns.len(), 1);
    assert_eq!(b.bends.len(), 1);
    let bc = build_model(Family::BC, &lam("5,4,1"));
    let rows: Vec<String> = bc.rows.iter().map(|r| r.to_string()).collect();
    assert_eq!(rows, ["1", "2", "3", "2b", "1b"]);
    assert_eq!(bc.central, Some(2));
    assert_eq!(bc.bends.len(), 2);
}

#[test]
fn vertex_counts() {
    assert_eq!(build_model(Family::B, &StrictPartition::rho(2)).vertex_count(), 8);
    assert_eq!(build_model(Family::A, &lam("1")).vertex_count(), 1);
    assert_eq!(build_model(Family::C, &lam("2,1")).vertex_count(), 2 * 5 + 2);
}

#[test]
fn outward_top_arrows_count_n() {
    for f in Family::ALL {
        for l in StrictPartition::all(2, 4) {
            let m = build_model(f, &l);
            let out = m
                .lattice
                .edges
                .iter()
                .zip(&m.geom)
                .filter(|(e, g)| matches!(g, EdgeGeom::V { .. }) && e.a.is_none() && e.fixed == Some(false))
                .count();
            assert_eq!(out, 2, "{f} {l}");
        }
    }
}

#[test]
fn state_counts() {
    assert_eq!(count(Family::A, "1"), 1);
    assert_eq!(count(Family::A, "2,1"), 2);
    assert_eq!(count(Family::B, "2,1"), 10);
}

#[test]
fn deterministic_build() {
    let a = build_model(Family::C, &lam("3,1"));
    let b = build_model(Family::C, &lam("3,1"));
    assert_eq!(a.boundary_json(), b.boundary_json());
    assert_eq!(a.lattice.enumerate(), b.lattice.enumerate());
}
