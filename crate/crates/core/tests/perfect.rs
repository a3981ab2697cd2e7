use tensorsq::group::make_named_group;
use tensorsq::tensor::TensorOptions;
use tensorsq::theorems::{verify_perfect_normal_sequences, Status};

#[test]
fn a5_is_its_own_perfect_normal_subgroup() {
    let g = make_named_group("A5").unwrap();
    let n = g.derived_subgroup();
    assert_eq!(n.order(), 60);
    let options = TensorOptions { order_cap: 60, max_cells: 110_000_000, ..Default::default() };
    let r = verify_perfect_normal_sequences(&g, &n, &options).unwrap();
    assert_eq!(r.status, Status::Pass, "{r:?}");
    assert_eq!(r.sequences.len(), 3);
    for s in &r.sequences {
        assert!(s.checks.all_pass(), "{}: {:?}", s.level, s.checks.failures());
        assert_eq!(s.cokernel, tensorsq::abelian::AbelianInvariants::trivial());
    }
}
