//! Constructor contracts: cyclic-flat round-trips, nested matroids versus
//! Gale enumeration, transversal independence versus brute matching,
//! truncation, the extension operations, and the connection identities.

mod common;

use common::*;
use positroids::bonding::bond;
use positroids::construct::{
    cyclic_flats_presentation, free_extension, from_cyclic_flats, nested, parallel_connection,
    principal_extension, relax, series_connection, series_extension, transversal, truncate,
    uniform, whirl, TransversalPresentation,
};
use positroids::corpus::{random_matroid, random_order, Rng};
use positroids::mask::{bit, bits, full, subsets, Mask};
use positroids::order::{BoundOrder, LinearOrder};

#[test]
fn cyclic_flats_round_trip() {
    let mut rng = Rng::new(0x2b01);
    for _ in 0..60 {
        let m = random_matroid(&mut rng, 8);
        let p = cyclic_flats_presentation(&m);
        let rebuilt = from_cyclic_flats(&p).expect("own cyclic flats satisfy the axioms");
        assert!(rebuilt.equal(&m));
    }
}

#[test]
fn nested_bases_match_gale_enumeration() {
    let mut rng = Rng::new(0x2b02);
    for _ in 0..40 {
        let n = rng.range(2, 7);
        let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let mut seq = labels.clone();
        rng.shuffle(&mut seq);
        let ord = LinearOrder::new(seq).unwrap();
        let r = rng.range(1, n);
        let mut pool: Vec<usize> = (0..n).collect();
        rng.shuffle(&mut pool);
        let picked: Vec<&str> = pool[..r].iter().map(|&i| labels[i].as_str()).collect();

        let m = nested(&picked, &ord).unwrap();
        let bound = BoundOrder::bind(&m, &ord).unwrap();
        let i_mask = m.mask_of(&picked).unwrap();
        let mut want = oracle_gale_bases(&bound, i_mask);
        let mut got = m.bases().to_vec();
        want.sort_unstable();
        got.sort_unstable();
        assert_eq!(got, want);
        // the Gale basis is the defining set
        assert_eq!(positroids::order::gale_basis(&m, &bound), i_mask);
    }
}

#[test]
fn transversal_independence_matches_brute_matching() {
    let mut rng = Rng::new(0x2b03);
    for _ in 0..30 {
        let n = rng.range(2, 8);
        let ground: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let refs: Vec<&str> = ground.iter().map(|s| s.as_str()).collect();
        let sets: Vec<Mask> = (0..rng.range(1, 4)).map(|_| rng.submask(full(n))).collect();
        let set_labels: Vec<Vec<&str>> = sets
            .iter()
            .map(|&s| bits(s).map(|i| refs[i]).collect())
            .collect();
        let slices: Vec<&[&str]> = set_labels.iter().map(|v| v.as_slice()).collect();
        let p = TransversalPresentation::from_labels(&refs, &slices).unwrap();
        let m = transversal(&p);
        for x in subsets(full(n)) {
            assert_eq!(m.is_independent(x), oracle_partial_transversal(&sets, x));
        }
    }
}

#[test]
fn whirl_matches_interval_presentation() {
    // {1,2,3}, {3,4,5}, {5,6,1} presents the 3-whirl by cyclic intervals
    let p = TransversalPresentation::from_labels(
        &["1", "2", "3", "4", "5", "6"],
        &[&["1", "2", "3"], &["3", "4", "5"], &["5", "6", "1"]],
    )
    .unwrap();
    let presented = transversal(&p);
    assert!(presented.isomorphic(&whirl(3).unwrap()));
}

#[test]
fn truncation_properties() {
    let mut rng = Rng::new(0x2b04);
    for _ in 0..30 {
        let m = random_matroid(&mut rng, 7);
        if m.rank() == 0 {
            continue;
        }
        let k = rng.range(0, m.rank());
        let j = rng.range(0, m.rank());
        let a = truncate(&truncate(&m, k).unwrap(), j.min(k)).unwrap();
        let b = truncate(&m, j.min(k)).unwrap();
        assert!(a.equal(&b));
    }
    // the running example truncates to the catalogued excluded minor
    let t = truncate(&example_parallel_connection(), 4).unwrap();
    assert!(t.equal(&truncated_example()));
}

#[test]
fn principal_extension_rules() {
    let mut rng = Rng::new(0x2b05);
    for _ in 0..30 {
        let m = random_matroid(&mut rng, 6);
        let x = rng.submask(m.ground());
        let ext = principal_extension(&m, x, "e*").unwrap();
        let e = ext.n() - 1;
        assert_eq!(ext.rank(), m.rank());
        // rank rule on every old subset
        for y in subsets(m.ground()) {
            let with_e = ext.r(y | bit(e));
            let expect = if x & !m.cl(y) == 0 {
                m.r(y)
            } else {
                m.r(y) + 1
            };
            assert_eq!(with_e, expect);
        }
        // closure rule: e in cl(Y) iff e in Y or X inside cl_M(Y)
        for y in subsets(m.ground()) {
            let closed = ext.cl(y);
            assert_eq!(closed & bit(e) != 0, x & !m.cl(y) == 0);
        }
        // extending to X and to cl(X) agree
        let ext2 = principal_extension(&m, m.cl(x), "e*").unwrap();
        assert!(ext.equal(&ext2));
    }
}

#[test]
fn principal_extensions_commute() {
    let mut rng = Rng::new(0x2b06);
    for _ in 0..25 {
        let m = random_matroid(&mut rng, 6);
        let x = rng.submask(m.ground());
        let y = rng.submask(m.ground());
        let a = principal_extension(&principal_extension(&m, x, "e*").unwrap(), y, "f*").unwrap();
        let b = principal_extension(&principal_extension(&m, y, "f*").unwrap(), x, "e*").unwrap();
        assert!(a.equal(&b));
    }
}

#[test]
fn series_extension_circuits() {
    let mut rng = Rng::new(0x2b07);
    for _ in 0..25 {
        let m = random_matroid(&mut rng, 6);
        let non_coloops = m.ground() & !m.coloops();
        if non_coloops == 0 {
            continue;
        }
        let f = bits(non_coloops).next().unwrap();
        let f_label = m.labels()[f].clone();
        let ext = series_extension(&m, &f_label, "e*").unwrap();
        assert_eq!(ext.rank(), m.rank() + 1);
        let e = ext.n() - 1;
        // circuits: those avoiding f unchanged; those through f augmented by e
        let mut want: Vec<Mask> = m
            .circuits()
            .iter()
            .map(|&c| if c & bit(f) != 0 { c | bit(e) } else { c })
            .collect();
        let mut got = ext.circuits().to_vec();
        want.sort_unstable();
        got.sort_unstable();
        assert_eq!(got, want);
    }
}

#[test]
fn relaxation_adds_exactly_one_basis() {
    // the wheel's rim is a circuit-hyperplane; relaxing it adds that basis
    let k4 = mk4();
    // {2,5,6} is one of its 3-point lines (a circuit-hyperplane)
    let x = k4.mask_of(&["2", "5", "6"]).unwrap();
    let relaxed = relax(&k4, x).unwrap();
    assert_eq!(relaxed.bases().len(), k4.bases().len() + 1);
    assert!(relaxed.is_basis(x));
    let mut cf: Vec<Mask> = relaxed.cyclic_flats().iter().map(|&(f, _)| f).collect();
    cf.sort_unstable();
    let mut want: Vec<Mask> = k4
        .cyclic_flats()
        .iter()
        .map(|&(f, _)| f)
        .filter(|&f| f != x)
        .collect();
    want.sort_unstable();
    assert_eq!(cf, want);
}

#[test]
fn parallel_connection_is_bonding_at_a_point() {
    let mut rng = Rng::new(0x2b08);
    let mut checked = 0;
    while checked < 20 {
        let a = random_matroid(&mut rng, 6);
        let b = random_matroid(&mut rng, 6);
        // shared point p, everything else disjoint
        let rename_a: std::collections::HashMap<String, String> = a
            .labels()
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), if i == 0 { "p".into() } else { format!("a{i}") }))
            .collect();
        let rename_b: std::collections::HashMap<String, String> = b
            .labels()
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), if i == 0 { "p".into() } else { format!("b{i}") }))
            .collect();
        let a = positroids::construct::relabel(&a, &rename_a).unwrap();
        let b = positroids::construct::relabel(&b, &rename_b).unwrap();
        let pa = a.index_of("p").unwrap();
        let pb = b.index_of("p").unwrap();
        if a.loops() & bit(pa) != 0 || b.loops() & bit(pb) != 0 {
            continue; // loop cases reduce to direct sums by definition
        }
        if a.n() + b.n() + 1 > 16 {
            continue;
        }
        let pc = parallel_connection(&a, &b, "p").unwrap();
        let bd = bond(&a, &b).unwrap();
        assert!(pc.equal(&bd));
        checked += 1;
    }
}

#[test]
fn series_connection_via_duals() {
    let a = u23_on(["p", "a1", "a2"]);
    let b = u23_on(["p", "b1", "b2"]);
    let s = series_connection(&a, &b, "p").unwrap();
    let p = parallel_connection(&a.dual(), &b.dual(), "p").unwrap();
    assert!(s.equal(&p.dual()));
    assert_eq!(s.rank(), a.rank() + b.rank()); // series connection adds ranks
}

#[test]
fn parallel_connection_loop_cases() {
    // p a loop of A only: P(A, B) = A + (B/p)
    let a = positroids::construct::from_bases(&["p", "a"], &[&["a"]]).unwrap(); // p loop
    let b = u23_on(["p", "b1", "b2"]);
    let pc = parallel_connection(&a, &b, "p").unwrap();
    let direct = a
        .direct_sum(&b.contract(b.mask_of(&["p"]).unwrap()))
        .unwrap();
    assert!(pc.equal(&direct));
}

#[test]
fn free_and_parallel_extension_examples() {
    let u23 = uniform(2, 3).unwrap();
    assert!(free_extension(&u23, "e")
        .unwrap()
        .isomorphic(&uniform(2, 4).unwrap()));
    let one = positroids::construct::from_bases(&["f"], &[&["f"]]).unwrap();
    let pe = positroids::construct::parallel_extension(&one, "f", "e").unwrap();
    assert!(pe.isomorphic(&uniform(1, 2).unwrap()));
}

#[test]
fn example_51_rank_table_row_round_trips() {
    // a generalized-M(K_4) instance with non-unit blocks
    let m = positroids::exmin::gen_k4_family(&[1, 1, 1, 2, 1, 2]).unwrap();
    let p = cyclic_flats_presentation(&m);
    assert!(from_cyclic_flats(&p).unwrap().equal(&m));
    assert_eq!(m.cyclic_flats().len(), 6);
    // x3 too large breaks "x1 + x2 + x3 <= r"
    assert!(positroids::exmin::gen_k4_family(&[1, 1, 2, 1, 1, 1]).is_err());
}

#[test]
fn random_orders_round_trip_shifts() {
    let mut rng = Rng::new(0x2b09);
    for _ in 0..20 {
        let m = random_matroid(&mut rng, 6);
        if m.n() == 0 {
            continue;
        }
        let ord = random_order(&mut rng, &m);
        let n = m.n();
        let composed = ord.shift(2.min(n)).unwrap().shift(n).unwrap();
        // shifting by (i-1)+(j-1) total positions
        let direct = ord.shift(((2.min(n) - 1 + n - 1) % n) + 1).unwrap();
        assert_eq!(composed, direct);
    }
}
