//! Shared fixtures (the catalogued worked examples) and independent
//! test-side oracles.

#![allow(dead_code)]

use positroids::construct::{
    from_cyclic_flats, parallel_connection, truncate, uniform, CyclicFlatsPresentation,
};
use positroids::mask::{bits, count, full, ksubsets, subsets, Mask};
use positroids::matroid::{Matroid, Partition};
use positroids::order::{BoundOrder, LinearOrder};

pub fn u23_on(labels: [&str; 3]) -> Matroid {
    let u = uniform(2, 3).unwrap();
    let rename: std::collections::HashMap<String, String> = u
        .labels()
        .iter()
        .cloned()
        .zip(labels.iter().map(|s| s.to_string()))
        .collect();
    positroids::construct::relabel(&u, &rename).unwrap()
}

/// The running example: the parallel connection of four copies of U_{2,3}
/// on {3,6,9}, {1,2,3}, {4,5,6}, {7,8,9}; a rank-5 positroid on 9
/// elements.
pub fn example_parallel_connection() -> Matroid {
    let l0 = u23_on(["3", "6", "9"]);
    let l1 = u23_on(["1", "2", "3"]);
    let l2 = u23_on(["4", "5", "6"]);
    let l3 = u23_on(["7", "8", "9"]);
    let m = parallel_connection(&l0, &l1, "3").unwrap();
    let m = parallel_connection(&m, &l2, "6").unwrap();
    parallel_connection(&m, &l3, "9").unwrap()
}

/// Its rank-4 truncation: an excluded minor drawn with the four 3-point
/// lines {1,2,3}, {4,5,6}, {7,8,9}, {3,6,9}.
pub fn truncated_example() -> Matroid {
    truncate(&example_parallel_connection(), 4).unwrap()
}

pub fn natural_order(n: usize) -> LinearOrder {
    LinearOrder::new((1..=n).map(|i| i.to_string()).collect()).unwrap()
}

fn lines_matroid(ground: &[&str], lines: &[&[&str]], rank: usize) -> Matroid {
    let mut flats: Vec<(&[&str], usize)> = vec![(&[], 0)];
    for l in lines {
        flats.push((l, 2));
    }
    flats.push((ground, rank));
    let p = CyclicFlatsPresentation::from_labels(ground, &flats).unwrap();
    from_cyclic_flats(&p).unwrap()
}

/// Left side of a pair of rank-3 triangle configurations glued along an independent clone pair; this side has, a 4-point line
/// {1,2,3,7} and 3-point lines {3,4,5}, {5,6,7}; T = {1,2} is an
/// independent pair of clones.
pub fn glued_triangles_m() -> Matroid {
    lines_matroid(
        &["1", "2", "3", "4", "5", "6", "7"],
        &[&["1", "2", "3", "7"], &["3", "4", "5"], &["5", "6", "7"]],
        3,
    )
}

/// Right side: rank 3 on {1,2,8,...,12} with lines {1,2,8,12}, {8,9,10},
/// {10,11,12}.
pub fn glued_triangles_n() -> Matroid {
    lines_matroid(
        &["1", "2", "8", "9", "10", "11", "12"],
        &[
            &["1", "2", "8", "12"],
            &["8", "9", "10"],
            &["10", "11", "12"],
        ],
        3,
    )
}

/// Two connected rank-3 matroids whose bonding at the circuit T = {1,2}
/// falls apart: the parallel pair {1,2} on two lines {1,2,a,b} and
/// {1,2,c,d} (and the partner with e,f,g,h).
fn circuit_bond_side(p: [&str; 4]) -> Matroid {
    let ground = ["1", "2", p[0], p[1], p[2], p[3]];
    let line1 = ["1", "2", p[0], p[1]];
    let line2 = ["1", "2", p[2], p[3]];
    let flats: Vec<(&[&str], usize)> = vec![
        (&[], 0),
        (&["1", "2"], 1),
        (&line1, 2),
        (&line2, 2),
        (&ground, 3),
    ];
    let pres = CyclicFlatsPresentation::from_labels(&ground, &flats).unwrap();
    from_cyclic_flats(&pres).unwrap()
}

pub fn circuit_bond_m() -> Matroid {
    circuit_bond_side(["a", "b", "c", "d"])
}

pub fn circuit_bond_n() -> Matroid {
    circuit_bond_side(["e", "f", "g", "h"])
}

/// Split-clone instance, first side: rank 3 on {1,2,3,4,5,10} with
/// lines {1,2,3}, {3,4,5}, {1,5,10}; T = {5,10}, P = {5}.
pub fn split_clone_m() -> Matroid {
    lines_matroid(
        &["1", "2", "3", "4", "5", "10"],
        &[&["1", "2", "3"], &["3", "4", "5"], &["1", "5", "10"]],
        3,
    )
}

/// Right: rank 3 on {5,...,10} with lines {5,9,10}, {5,6,7}, {7,8,9}.
pub fn split_clone_n() -> Matroid {
    lines_matroid(
        &["5", "6", "7", "8", "9", "10"],
        &[&["5", "9", "10"], &["5", "6", "7"], &["7", "8", "9"]],
        3,
    )
}

/// The five-line amalgam counterexample, first side: rank 3 on {a..f} with
/// lines {a,b,c}, {c,d,e}, {a,e,f}.
pub fn five_line_amalgam_m() -> Matroid {
    lines_matroid(
        &["a", "b", "c", "d", "e", "f"],
        &[&["a", "b", "c"], &["c", "d", "e"], &["a", "e", "f"]],
        3,
    )
}

/// Right: rank 3 on {a,e,g,h,i} with lines {e,g,h}, {a,h,i}.
pub fn five_line_amalgam_n() -> Matroid {
    lines_matroid(
        &["a", "e", "g", "h", "i"],
        &[&["e", "g", "h"], &["a", "h", "i"]],
        3,
    )
}

/// M(K_4) labelled by its 3-point lines: 3-point lines {1,2,3},
/// {1,4,5}, {2,5,6}, {3,4,6}.
pub fn mk4() -> Matroid {
    positroids::exmin::gen_k4_family(&[1; 6]).unwrap()
}

// ---------------------------------------------------------------------------
// independent oracles
// ---------------------------------------------------------------------------

/// Definitional non-crossing test: for every pair of blocks some subset A
/// separates them with A or its complement an interval.
pub fn oracle_noncrossing(bound: &BoundOrder, p: &Partition) -> bool {
    let n = bound.n();
    let ground = full(n);
    let blocks = p.blocks();
    for i in 0..blocks.len() {
        for j in i + 1..blocks.len() {
            let mut separated = false;
            for a in subsets(ground) {
                if blocks[i] & !a == 0
                    && blocks[j] & a == 0
                    && (bound.is_interval(a) || bound.is_interval(ground & !a))
                {
                    separated = true;
                    break;
                }
            }
            if !separated {
                return false;
            }
        }
    }
    true
}

/// Gale-order enumeration of the nested matroid's bases.
pub fn oracle_gale_bases(bound: &BoundOrder, i_mask: Mask) -> Vec<Mask> {
    let n = bound.n();
    let r = count(i_mask);
    ksubsets(full(n), r)
        .filter(|&j| bound.gale_leq(i_mask, j).unwrap())
        .collect()
}

/// Brute-force partial-transversal test: tries every injection from the
/// set into the presentation.
pub fn oracle_partial_transversal(sets: &[Mask], x: Mask) -> bool {
    fn go(sets: &[Mask], elems: &[usize], used: &mut Vec<bool>) -> bool {
        let Some((&e, rest)) = elems.split_first() else {
            return true;
        };
        for (i, &s) in sets.iter().enumerate() {
            if !used[i] && s & (1 << e) != 0 {
                used[i] = true;
                if go(sets, rest, used) {
                    used[i] = false;
                    return true;
                }
                used[i] = false;
            }
        }
        false
    }
    let elems: Vec<usize> = bits(x).collect();
    go(sets, &elems, &mut vec![false; sets.len()])
}

/// Exhaustive scan for a forbidden four-element minor (2-circuit plus
/// 2-cocircuit with the circuit crossing it in the induced order);
/// feasible for small n.
pub fn oracle_forbidden_minor_exists(m: &Matroid, bound: &BoundOrder) -> bool {
    let ground = m.ground();
    for w in ksubsets(ground, 4) {
        let rest = ground & !w;
        for c in subsets(rest) {
            let rc = m.r(c);
            let rk = |x: Mask| m.r(x | c) - rc;
            if rk(w) != 2 {
                continue;
            }
            let elems: Vec<usize> = bits(w).collect();
            // try each split of w into circuit {a,b} and cocircuit {e,f}
            for (ai, bi) in [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)] {
                let (a, b) = (elems[ai], elems[bi]);
                let others: Vec<usize> = elems
                    .iter()
                    .copied()
                    .filter(|&x| x != a && x != b)
                    .collect();
                let (e, f) = (others[0], others[1]);
                let (ba, bb, be, bf) = (1 << a, 1 << b, 1 << e, 1 << f);
                if rk(ba) == 1
                    && rk(bb) == 1
                    && rk(ba | bb) == 1
                    && rk(ba | bb | be) == 2
                    && rk(ba | bb | bf) == 2
                {
                    // is {a,b} a cyclic interval in the induced 4-order?
                    let mut positions: Vec<(usize, bool)> = elems
                        .iter()
                        .map(|&x| (bound.pos(x), x == a || x == b))
                        .collect();
                    positions.sort();
                    let circuit_tags: Vec<bool> = positions.iter().map(|&(_, t)| t).collect();
                    let adjacent = matches!(
                        circuit_tags.as_slice(),
                        [true, true, false, false]
                            | [false, true, true, false]
                            | [false, false, true, true]
                            | [true, false, false, true]
                    );
                    if !adjacent {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// All linear orders of the matroid's elements up to cyclic shift and
/// reversal: element of index 0 pinned first, second element smaller than
/// the last.
pub fn orders_up_to_symmetry(m: &Matroid) -> Vec<LinearOrder> {
    let n = m.n();
    if n <= 1 {
        return vec![LinearOrder::new(m.labels().to_vec()).unwrap()];
    }
    let mut out = Vec::new();
    let mut rest: Vec<usize> = (1..n).collect();
    permute(&mut rest, 0, &mut |perm| {
        if n > 2 && perm[0] > perm[n - 2] {
            return;
        }
        let mut seq = vec![m.labels()[0].clone()];
        seq.extend(perm.iter().map(|&e| m.labels()[e].clone()));
        out.push(LinearOrder::new(seq).unwrap());
    });
    out
}

fn permute(xs: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == xs.len() {
        f(xs);
        return;
    }
    for i in k..xs.len() {
        xs.swap(k, i);
        permute(xs, k + 1, f);
        xs.swap(k, i);
    }
}
