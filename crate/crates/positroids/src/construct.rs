//! Constructors: basis families, cyclic-flat presentations, uniform and
//! graphic matroids, transversal and nested matroids, whirls, generalized
//! relaxation, truncation, and the four extension/connection operations.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::mask::{self, bit, bits, count, full, ksubsets, Mask, MAX_ELEMENTS};
use crate::matroid::Matroid;
use crate::order::LinearOrder;

/// Builds a validated matroid from labelled bases.
pub fn from_bases(labels: &[&str], bases: &[&[&str]]) -> Result<Matroid> {
    let owned: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
    let mut masks = Vec::with_capacity(bases.len());
    for b in bases {
        let mut m: Mask = 0;
        for l in *b {
            let i = owned
                .iter()
                .position(|x| x == l)
                .ok_or_else(|| Error::Input(format!("basis uses unknown label '{l}'")))?;
            m |= bit(i);
        }
        masks.push(m);
    }
    Matroid::new(owned, masks)
}

/// A list of (subset, rank) pairs intended as the lattice of cyclic flats.
#[derive(Debug, Clone)]
pub struct CyclicFlatsPresentation {
    ground: Vec<String>,
    flats: Vec<(Mask, usize)>,
}

impl CyclicFlatsPresentation {
    pub fn new(ground: Vec<String>, mut flats: Vec<(Mask, usize)>) -> Result<Self> {
        if ground.len() > MAX_ELEMENTS {
            return Err(Error::Capacity(format!(
                "ground set has {} elements; at most {MAX_ELEMENTS} supported",
                ground.len()
            )));
        }
        {
            let mut sorted = ground.clone();
            sorted.sort();
            sorted.dedup();
            if sorted.len() != ground.len() {
                return Err(Error::Input(
                    "ground-set labels are not pairwise distinct".into(),
                ));
            }
        }
        let g = full(ground.len());
        flats.sort_by_key(|&(m, _)| (count(m), m));
        for w in flats.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::Input("presentation repeats a subset".into()));
            }
        }
        if flats.iter().any(|&(m, _)| m & !g != 0) {
            return Err(Error::Input(
                "presented flat contains an out-of-range index".into(),
            ));
        }
        Ok(CyclicFlatsPresentation { ground, flats })
    }

    pub fn from_labels(ground: &[&str], flats: &[(&[&str], usize)]) -> Result<Self> {
        let owned: Vec<String> = ground.iter().map(|s| s.to_string()).collect();
        let mut masks = Vec::with_capacity(flats.len());
        for (set, rank) in flats {
            let mut m: Mask = 0;
            for l in *set {
                let i = owned
                    .iter()
                    .position(|x| x == l)
                    .ok_or_else(|| Error::Input(format!("flat uses unknown label '{l}'")))?;
                m |= bit(i);
            }
            masks.push((m, *rank));
        }
        CyclicFlatsPresentation::new(owned, masks)
    }

    pub fn ground(&self) -> &[String] {
        &self.ground
    }

    pub fn flats(&self) -> &[(Mask, usize)] {
        &self.flats
    }

    fn describe(&self, m: Mask) -> String {
        let ls: Vec<&str> = bits(m).map(|i| self.ground[i].as_str()).collect();
        format!("{{{}}}", ls.join(","))
    }
}

/// Reconstructs the matroid whose lattice of cyclic flats is the presented
/// family: a set is independent exactly when it meets every presented flat
/// in at most that flat's rank. Elements outside the greatest presented
/// flat are coloops, so the matroid rank is r(top) + |E - top|.
///
/// The axioms (Z0)-(Z3) are checked first; each failure names the
/// offending sets.
pub fn from_cyclic_flats(p: &CyclicFlatsPresentation) -> Result<Matroid> {
    let flats = p.flats();
    if flats.is_empty() {
        return Err(Error::CyclicFlatAxiom {
            axiom: "Z0",
            detail: "the family is empty; it must contain at least the least cyclic flat".into(),
        });
    }

    // (Z0): each pair has a unique minimal upper bound and a unique maximal
    // lower bound inside the family.
    for (i, &(x, _)) in flats.iter().enumerate() {
        for &(y, _) in &flats[i + 1..] {
            join_of(flats, x, y).map_err(|_| Error::CyclicFlatAxiom {
                axiom: "Z0",
                detail: format!(
                    "{} and {} have no unique join",
                    p.describe(x),
                    p.describe(y)
                ),
            })?;
            meet_of(flats, x, y).map_err(|_| Error::CyclicFlatAxiom {
                axiom: "Z0",
                detail: format!(
                    "{} and {} have no unique meet",
                    p.describe(x),
                    p.describe(y)
                ),
            })?;
        }
    }
    // the bottom is the unique minimal member (exists once pairwise meets do)
    let bottom = flats
        .iter()
        .map(|&(m, _)| m)
        .filter(|&m| flats.iter().all(|&(o, _)| o & !m != 0 || o == m))
        .collect::<Vec<_>>();
    let (bottom, bottom_rank) = match bottom.as_slice() {
        [b] => (*b, flats.iter().find(|&&(m, _)| m == *b).unwrap().1),
        _ => {
            return Err(Error::CyclicFlatAxiom {
                axiom: "Z0",
                detail: "the family has no unique least set".into(),
            })
        }
    };
    let top = flats.iter().map(|&(m, _)| m).fold(0, |a, b| a | b);
    if !flats.iter().any(|&(m, _)| m == top) {
        return Err(Error::CyclicFlatAxiom {
            axiom: "Z0",
            detail: "the family has no greatest set".into(),
        });
    }

    // (Z1)
    if bottom_rank != 0 {
        return Err(Error::CyclicFlatAxiom {
            axiom: "Z1",
            detail: format!(
                "least set {} has rank {bottom_rank}, not 0",
                p.describe(bottom)
            ),
        });
    }

    // (Z2)
    for &(x, rx) in flats {
        for &(y, ry) in flats {
            if x != y && x & !y == 0 {
                let diff = count(y & !x);
                if !(ry > rx && ry - rx < diff) {
                    return Err(Error::CyclicFlatAxiom {
                        axiom: "Z2",
                        detail: format!(
                            "0 < r({Y}) - r({X}) < |{Y} - {X}| fails ({ry} - {rx} vs {diff})",
                            X = p.describe(x),
                            Y = p.describe(y)
                        ),
                    });
                }
            }
        }
    }

    // (Z3)
    for (i, &(x, rx)) in flats.iter().enumerate() {
        for &(y, ry) in &flats[i + 1..] {
            let (join, rj) = join_of(flats, x, y).unwrap();
            let (meet, rm) = meet_of(flats, x, y).unwrap();
            let carry = count((x & y) & !meet);
            let _ = join;
            if rj + rm + carry > rx + ry {
                return Err(Error::CyclicFlatAxiom {
                    axiom: "Z3",
                    detail: format!(
                        "submodularity with carry fails for {} and {} ({rj} + {rm} + {carry} > {rx} + {ry})",
                        p.describe(x),
                        p.describe(y)
                    ),
                });
            }
        }
    }

    // reconstruction
    let n = p.ground().len();
    let g = full(n);
    let top_rank = flats.iter().find(|&&(m, _)| m == top).unwrap().1;
    let rank = top_rank + count(g & !top);
    let indep = |x: Mask| flats.iter().all(|&(f, rf)| count(x & f) <= rf);
    let bases: Vec<Mask> = ksubsets(g, rank).filter(|&b| indep(b)).collect();
    if bases.is_empty() {
        return Err(Error::Internal(
            "cyclic-flat reconstruction produced no bases despite valid axioms".into(),
        ));
    }
    Ok(Matroid::from_parts_unchecked(
        p.ground().to_vec(),
        rank,
        bases,
    ))
}

fn join_of(flats: &[(Mask, usize)], x: Mask, y: Mask) -> std::result::Result<(Mask, usize), ()> {
    let uppers: Vec<(Mask, usize)> = flats
        .iter()
        .copied()
        .filter(|&(m, _)| (x | y) & !m == 0)
        .collect();
    let minimal: Vec<(Mask, usize)> = uppers
        .iter()
        .copied()
        .filter(|&(m, _)| uppers.iter().all(|&(o, _)| o == m || o & !m != 0))
        .collect();
    match minimal.as_slice() {
        [one] => Ok(*one),
        _ => Err(()),
    }
}

fn meet_of(flats: &[(Mask, usize)], x: Mask, y: Mask) -> std::result::Result<(Mask, usize), ()> {
    let lowers: Vec<(Mask, usize)> = flats
        .iter()
        .copied()
        .filter(|&(m, _)| m & !(x & y) == 0)
        .collect();
    let maximal: Vec<(Mask, usize)> = lowers
        .iter()
        .copied()
        .filter(|&(m, _)| lowers.iter().all(|&(o, _)| o == m || m & !o != 0))
        .collect();
    match maximal.as_slice() {
        [one] => Ok(*one),
        _ => Err(()),
    }
}

/// The presentation of a matroid by its own cyclic flats; round-trips
/// through `from_cyclic_flats`.
pub fn cyclic_flats_presentation(m: &Matroid) -> CyclicFlatsPresentation {
    CyclicFlatsPresentation::new(m.labels().to_vec(), m.cyclic_flats().to_vec())
        .expect("a matroid's own cyclic flats are well-formed")
}

/// U_{r,n} with labels "1".."n".
pub fn uniform(r: usize, n: usize) -> Result<Matroid> {
    if n > MAX_ELEMENTS {
        return Err(Error::Capacity(format!("n = {n} exceeds {MAX_ELEMENTS}")));
    }
    if r > n {
        return Err(Error::Parameter(format!(
            "uniform matroid needs r <= n, got r = {r}, n = {n}"
        )));
    }
    let labels = (1..=n).map(|i| i.to_string()).collect();
    let bases = ksubsets(full(n), r).collect();
    Ok(Matroid::from_parts_unchecked(labels, r, bases))
}

/// Cycle matroid of an explicit edge list (loops and parallel edges
/// allowed); bases are the spanning forests.
pub fn cycle_matroid(edges: &[(usize, usize)], labels: &[&str]) -> Result<Matroid> {
    if edges.len() > MAX_ELEMENTS {
        return Err(Error::Capacity(format!(
            "{} edges exceed {MAX_ELEMENTS}",
            edges.len()
        )));
    }
    if labels.len() != edges.len() {
        return Err(Error::Input("one label per edge required".into()));
    }
    let mut vertices: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
    vertices.sort_unstable();
    vertices.dedup();
    let vid: HashMap<usize, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let nv = vertices.len();

    let is_forest = |m: Mask| -> bool {
        let mut parent: Vec<usize> = (0..nv).collect();
        fn find(parent: &mut Vec<usize>, i: usize) -> usize {
            if parent[i] != i {
                let r = find(parent, parent[i]);
                parent[i] = r;
            }
            parent[i]
        }
        for e in bits(m) {
            let (u, v) = edges[e];
            let (a, b) = (find(&mut parent, vid[&u]), find(&mut parent, vid[&v]));
            if a == b {
                return false;
            }
            parent[a] = b;
        }
        true
    };

    let g = full(edges.len());
    // greedy forest gives the rank
    let mut acc: Mask = 0;
    for e in 0..edges.len() {
        if is_forest(acc | bit(e)) {
            acc |= bit(e);
        }
    }
    let rank = count(acc);
    let owned: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
    {
        let mut sorted = owned.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != owned.len() {
            return Err(Error::Input("edge labels are not pairwise distinct".into()));
        }
    }
    let bases: Vec<Mask> = ksubsets(g, rank).filter(|&m| is_forest(m)).collect();
    Ok(Matroid::from_parts_unchecked(owned, rank, bases))
}

/// An indexed family of subsets of a labelled ground set.
#[derive(Debug, Clone)]
pub struct TransversalPresentation {
    ground: Vec<String>,
    sets: Vec<Mask>,
}

impl TransversalPresentation {
    pub fn new(ground: Vec<String>, sets: Vec<Mask>) -> Result<Self> {
        if ground.len() > MAX_ELEMENTS {
            return Err(Error::Capacity(format!(
                "ground set has {} elements; at most {MAX_ELEMENTS} supported",
                ground.len()
            )));
        }
        let g = full(ground.len());
        if sets.iter().any(|&s| s & !g != 0) {
            return Err(Error::Input(
                "presentation set contains an out-of-range index".into(),
            ));
        }
        Ok(TransversalPresentation { ground, sets })
    }

    pub fn from_labels(ground: &[&str], sets: &[&[&str]]) -> Result<Self> {
        let owned: Vec<String> = ground.iter().map(|s| s.to_string()).collect();
        let mut masks = Vec::with_capacity(sets.len());
        for set in sets {
            let mut m: Mask = 0;
            for l in *set {
                let i = owned.iter().position(|x| x == l).ok_or_else(|| {
                    Error::Input(format!("presentation uses unknown label '{l}'"))
                })?;
                m |= bit(i);
            }
            masks.push(m);
        }
        TransversalPresentation::new(owned, masks)
    }

    pub fn sets(&self) -> &[Mask] {
        &self.sets
    }
}

/// Size of a maximum matching from the elements of `x` into the sets, by
/// augmenting paths.
fn matching_size(sets: &[Mask], x: Mask) -> usize {
    let mut matched: Vec<Option<usize>> = vec![None; sets.len()];
    let mut total = 0;
    for e in bits(x) {
        let mut visited = vec![false; sets.len()];
        if augment(sets, e, &mut visited, &mut matched) {
            total += 1;
        }
    }
    total
}

fn augment(sets: &[Mask], e: usize, visited: &mut [bool], matched: &mut [Option<usize>]) -> bool {
    for (i, &s) in sets.iter().enumerate() {
        if !mask::contains(s, e) || visited[i] {
            continue;
        }
        visited[i] = true;
        match matched[i] {
            None => {
                matched[i] = Some(e);
                return true;
            }
            Some(prev) => {
                if augment(sets, prev, visited, matched) {
                    matched[i] = Some(e);
                    return true;
                }
            }
        }
    }
    false
}

/// Transversal matroid of a set family: independence is having a partial
/// transversal.
pub fn transversal(p: &TransversalPresentation) -> Matroid {
    let n = p.ground.len();
    let g = full(n);
    let rank = matching_size(&p.sets, g);
    let bases: Vec<Mask> = ksubsets(g, rank)
        .filter(|&x| matching_size(&p.sets, x) == rank)
        .collect();
    Matroid::from_parts_unchecked(p.ground.clone(), rank, bases)
}

/// The nested matroid N(I, <=): the transversal matroid of the filters
/// above each element of I. Its bases are exactly the sets J with
/// I <=_G J, and I is its Gale basis.
pub fn nested(i_set: &[&str], ord: &LinearOrder) -> Result<Matroid> {
    let ground: Vec<String> = ord.seq().to_vec();
    let mut sets = Vec::with_capacity(i_set.len());
    for l in i_set {
        let pos = ord.position(l).ok_or_else(|| {
            Error::Input(format!("nested-matroid element '{l}' not in the order"))
        })?;
        let filter: Mask = (pos..ord.n()).fold(0, |acc, p| acc | bit(p));
        sets.push(filter);
    }
    // indices here follow the order's sequence
    let p = TransversalPresentation::new(ground, sets)?;
    Ok(transversal(&p))
}

/// The rank-n whirl on 2n elements, labelled so that for each i the triple
/// {2i-1, 2i, 2i+1} (indices mod 2n) is a 3-circuit: odd labels are the
/// wheel's spokes, even labels its rim. Built by relaxing the rim
/// circuit-hyperplane of the wheel's cycle matroid.
pub fn whirl(n: usize) -> Result<Matroid> {
    if n < 3 {
        return Err(Error::Parameter(format!("whirl needs n >= 3, got {n}")));
    }
    if 2 * n > MAX_ELEMENTS {
        return Err(Error::Capacity(format!(
            "whirl on {} elements exceeds {MAX_ELEMENTS}",
            2 * n
        )));
    }
    let mut edges = Vec::with_capacity(2 * n);
    let mut labels = Vec::with_capacity(2 * n);
    for i in 1..=n {
        edges.push((0, i)); // spoke i, label 2i-1
        labels.push((2 * i - 1).to_string());
        edges.push((i, i % n + 1)); // rim edge i, label 2i
        labels.push((2 * i).to_string());
    }
    let label_refs: Vec<&str> = labels.iter().map(|s| s.as_str()).collect();
    let wheel = cycle_matroid(&edges, &label_refs)?;
    let rim: Mask = (1..=n).fold(0, |acc, i| acc | bit(2 * i - 1)); // odd storage indices
    relax(&wheel, rim)
}

/// Generalized relaxation: removes one cyclic flat X from the lattice,
/// provided M is loopless and coloopless and no other proper nonempty
/// cyclic flat is comparable with X. When X is a circuit-hyperplane this
/// adds X as a new basis.
pub fn relax(m: &Matroid, x: Mask) -> Result<Matroid> {
    if m.loops() != 0 {
        return Err(Error::Precondition(
            "relaxation requires a loopless matroid".into(),
        ));
    }
    if m.coloops() != 0 {
        return Err(Error::Precondition(
            "relaxation requires a coloopless matroid".into(),
        ));
    }
    if x == 0 || x == m.ground() {
        return Err(Error::Precondition(
            "relaxation needs a proper nonempty cyclic flat".into(),
        ));
    }
    let z = m.cyclic_flats();
    if !z.iter().any(|&(f, _)| f == x) {
        return Err(Error::Precondition(format!(
            "{{{}}} is not a cyclic flat",
            m.label_list(x).join(",")
        )));
    }
    for &(f, _) in z {
        if f == 0 || f == m.ground() || f == x {
            continue;
        }
        if f & !x == 0 || x & !f == 0 {
            return Err(Error::Precondition(format!(
                "cyclic flat {{{}}} is comparable with {{{}}}",
                m.label_list(f).join(","),
                m.label_list(x).join(",")
            )));
        }
    }
    let reduced: Vec<(Mask, usize)> = z.iter().copied().filter(|&(f, _)| f != x).collect();
    let p = CyclicFlatsPresentation::new(m.labels().to_vec(), reduced)?;
    from_cyclic_flats(&p)
}

/// Truncation to rank k: bases are the independent k-sets.
pub fn truncate(m: &Matroid, k: usize) -> Result<Matroid> {
    if k > m.rank() {
        return Err(Error::Parameter(format!(
            "cannot truncate to rank {k}: matroid has rank {}",
            m.rank()
        )));
    }
    if k == m.rank() {
        return Ok(m.clone());
    }
    let bases: Vec<Mask> = ksubsets(m.ground(), k)
        .filter(|&b| m.is_independent(b))
        .collect();
    Ok(Matroid::from_parts_unchecked(m.labels().to_vec(), k, bases))
}

/// Principal extension M +_X e: adds e freely to the flat spanned by X.
/// The new element's rank rule: r(Y u e) = r(Y) when X lies in cl(Y), and
/// r(Y) + 1 otherwise.
pub fn principal_extension(m: &Matroid, x: Mask, e_label: &str) -> Result<Matroid> {
    if m.index_of(e_label).is_some() {
        return Err(Error::Input(format!(
            "label '{e_label}' already in the ground set"
        )));
    }
    if m.n() + 1 > MAX_ELEMENTS {
        return Err(Error::Capacity(format!(
            "extension would exceed {MAX_ELEMENTS} elements"
        )));
    }
    if x & !m.ground() != 0 {
        return Err(Error::Input(
            "extension flat contains an out-of-range index".into(),
        ));
    }
    let r = m.rank();
    let e = m.n();
    let mut bases: Vec<Mask> = m.bases().to_vec();
    if r >= 1 {
        for y in ksubsets(m.ground(), r - 1) {
            if m.is_independent(y) && x & !m.cl(y) != 0 {
                bases.push(y | bit(e));
            }
        }
    }
    let mut labels = m.labels().to_vec();
    labels.push(e_label.to_string());
    Ok(Matroid::from_parts_unchecked(labels, r, bases))
}

/// Free extension M + e: e added freely to the whole ground set.
pub fn free_extension(m: &Matroid, e_label: &str) -> Result<Matroid> {
    principal_extension(m, m.ground(), e_label)
}

/// Parallel extension: e added freely to the single element f.
pub fn parallel_extension(m: &Matroid, f_label: &str, e_label: &str) -> Result<Matroid> {
    let f = m
        .index_of(f_label)
        .ok_or_else(|| Error::Input(format!("unknown element label '{f_label}'")))?;
    principal_extension(m, bit(f), e_label)
}

/// Series extension M x_f e, the dual of parallel extension; the circuits
/// through f are augmented by e and the rank grows by one. Requires f not
/// to be a coloop.
pub fn series_extension(m: &Matroid, f_label: &str, e_label: &str) -> Result<Matroid> {
    let f = m
        .index_of(f_label)
        .ok_or_else(|| Error::Input(format!("unknown element label '{f_label}'")))?;
    if mask::contains(m.coloops(), f) {
        return Err(Error::Precondition(format!(
            "series extension at '{f_label}' needs a non-coloop"
        )));
    }
    Ok(parallel_extension(&m.dual(), f_label, e_label)?.dual())
}

/// Renames elements; the mapping may cover any subset of the labels.
pub fn relabel(m: &Matroid, rename: &HashMap<String, String>) -> Result<Matroid> {
    let labels: Vec<String> = m
        .labels()
        .iter()
        .map(|l| rename.get(l).cloned().unwrap_or_else(|| l.clone()))
        .collect();
    let mut sorted = labels.clone();
    sorted.sort();
    sorted.dedup();
    if sorted.len() != labels.len() {
        return Err(Error::Input("relabelling collides two labels".into()));
    }
    Ok(Matroid::from_parts_unchecked(
        labels,
        m.rank(),
        m.bases().to_vec(),
    ))
}

/// Parallel connection P(M, N) at the unique shared element p.
///
/// When p is a loop of neither side this is the bonding at {p}; the loop
/// cases reduce to direct sums with p contracted from one side.
pub fn parallel_connection(m: &Matroid, n: &Matroid, p_label: &str) -> Result<Matroid> {
    let shared: Vec<&String> = m
        .labels()
        .iter()
        .filter(|l| n.index_of(l).is_some())
        .collect();
    if shared.len() != 1 || shared[0] != p_label {
        return Err(Error::Input(format!(
            "parallel connection requires the ground sets to share exactly {{{p_label}}}"
        )));
    }
    let pm = m.index_of(p_label).unwrap();
    let pn = n.index_of(p_label).unwrap();
    let loop_m = mask::contains(m.loops(), pm);
    let loop_n = mask::contains(n.loops(), pn);
    if loop_m {
        // covers p a loop of both: then N/p = N\p and p stays a loop in M
        return m.direct_sum(&n.contract(bit(pn)));
    }
    if loop_n {
        return m.contract(bit(pm)).direct_sum(n);
    }
    crate::bonding::bond(m, n)
}

/// Series connection, dual to parallel connection.
pub fn series_connection(m: &Matroid, n: &Matroid, p_label: &str) -> Result<Matroid> {
    Ok(parallel_connection(&m.dual(), &n.dual(), p_label)?.dual())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::{gale_basis, BoundOrder};

    #[test]
    fn from_bases_u23_and_failures() {
        let m = from_bases(&["1", "2", "3"], &[&["1", "2"], &["1", "3"], &["2", "3"]]).unwrap();
        assert!(m.equal(&uniform(2, 3).unwrap().reindexed_like(&m).unwrap()));
        assert!(from_bases(&["1", "2", "3", "4"], &[&["1", "2"], &["3", "4"]]).is_err());
        let single = from_bases(&["1"], &[&["1"]]).unwrap();
        assert_eq!(single.rank(), 1);
    }

    #[test]
    fn cyclic_flats_reconstruction_uniform() {
        let p = CyclicFlatsPresentation::from_labels(
            &["1", "2", "3", "4"],
            &[(&[], 0), (&["1", "2", "3", "4"], 2)],
        )
        .unwrap();
        let m = from_cyclic_flats(&p).unwrap();
        assert!(m.equal(&uniform(2, 4).unwrap()));
    }

    #[test]
    fn cyclic_flats_axiom_failures_are_named() {
        // Z1: least set with nonzero rank
        let p = CyclicFlatsPresentation::from_labels(&["1", "2"], &[(&[], 1)]).unwrap();
        match from_cyclic_flats(&p) {
            Err(Error::CyclicFlatAxiom { axiom: "Z1", .. }) => {}
            other => panic!("expected Z1 failure, got {other:?}"),
        }
        // Z2: rank jump too large
        let p = CyclicFlatsPresentation::from_labels(
            &["1", "2", "3"],
            &[(&[], 0), (&["1", "2", "3"], 3)],
        )
        .unwrap();
        match from_cyclic_flats(&p) {
            Err(Error::CyclicFlatAxiom { axiom: "Z2", .. }) => {}
            other => panic!("expected Z2 failure, got {other:?}"),
        }
    }

    #[test]
    fn uniform_and_cycle_matroid() {
        assert_eq!(uniform(2, 4).unwrap().bases().len(), 6);
        assert!(uniform(3, 2).is_err());
        // triangle
        let tri = cycle_matroid(&[(0, 1), (1, 2), (2, 0)], &["1", "2", "3"]).unwrap();
        assert!(tri.equal(&uniform(2, 3).unwrap()));
        // K_4 has 16 spanning trees
        let k4 = cycle_matroid(
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
            &["a", "b", "c", "d", "e", "f"],
        )
        .unwrap();
        assert_eq!(k4.rank(), 3);
        assert_eq!(k4.bases().len(), 16);
    }

    #[test]
    fn transversal_examples() {
        let p = TransversalPresentation::from_labels(&["1", "2"], &[&["1", "2"]]).unwrap();
        let m = transversal(&p);
        assert!(m.equal(&from_bases(&["1", "2"], &[&["1"], &["2"]]).unwrap()));
        // two copies of {1} on a single element still give rank 1
        let p = TransversalPresentation::from_labels(&["1"], &[&["1"], &["1"]]).unwrap();
        assert_eq!(transversal(&p).rank(), 1);
    }

    #[test]
    fn nested_gale_examples() {
        let ord = LinearOrder::from_labels(&["1", "2", "3", "4", "5"]).unwrap();
        let m = nested(&["2", "4"], &ord).unwrap();
        let bound = BoundOrder::bind(&m, &ord).unwrap();
        let i_mask = m.mask_of(&["2", "4"]).unwrap();
        assert_eq!(gale_basis(&m, &bound), i_mask);
        let expected: Vec<Mask> = [["2", "4"], ["2", "5"], ["3", "4"], ["3", "5"], ["4", "5"]]
            .iter()
            .map(|ls| m.mask_of(ls).unwrap())
            .collect();
        let mut got = m.bases().to_vec();
        let mut want = expected.clone();
        got.sort_unstable();
        want.sort_unstable();
        assert_eq!(got, want);

        // top r elements: a single basis; bottom r: uniform
        let top = nested(&["4", "5"], &ord).unwrap();
        assert_eq!(top.bases().len(), 1);
        let bottom = nested(&["1", "2"], &ord).unwrap();
        assert!(bottom.equal(&uniform(2, 5).unwrap()));
    }

    #[test]
    fn whirl_basics() {
        let w3 = whirl(3).unwrap();
        assert_eq!(w3.rank(), 3);
        assert_eq!(w3.n(), 6);
        assert_eq!(w3.bases().len(), 17); // one more than M(K_4)
        let w4 = whirl(4).unwrap();
        assert_eq!((w4.rank(), w4.n()), (4, 8));
        assert!(whirl(2).is_err());
        // the advertised 3-circuits
        for i in 1..=3usize {
            let tri = [2 * i - 1, 2 * i, if 2 * i + 1 > 6 { 1 } else { 2 * i + 1 }];
            let labels: Vec<String> = tri.iter().map(|x| x.to_string()).collect();
            let refs: Vec<&str> = labels.iter().map(|s| s.as_str()).collect();
            let mask = w3.mask_of(&refs).unwrap();
            assert_eq!(w3.r(mask), 2);
            assert!(w3.circuits().contains(&mask));
        }
    }

    #[test]
    fn relax_preconditions() {
        let u = uniform(2, 4).unwrap();
        assert!(relax(&u, u.mask_of(&["1", "2"]).unwrap()).is_err());
    }

    #[test]
    fn truncate_examples() {
        let u35 = uniform(3, 5).unwrap();
        assert!(truncate(&u35, 2).unwrap().equal(&uniform(2, 5).unwrap()));
        assert!(truncate(&u35, 3).unwrap().equal(&u35));
        assert!(truncate(&u35, 4).is_err());
        // truncations compose through the minimum
        let t = truncate(&truncate(&u35, 2).unwrap(), 1).unwrap();
        assert!(t.equal(&truncate(&u35, 1).unwrap()));
    }

    #[test]
    fn extension_examples() {
        let u11 = from_bases(&["f"], &[&["f"]]).unwrap();
        let p = parallel_extension(&u11, "f", "e").unwrap();
        assert!(p.isomorphic(&uniform(1, 2).unwrap()));

        let u23 = uniform(2, 3).unwrap();
        let f = free_extension(&u23, "e").unwrap();
        assert!(f.isomorphic(&uniform(2, 4).unwrap()));

        let u12 = uniform(1, 2).unwrap();
        let s = series_extension(&u12, "1", "e").unwrap();
        assert!(s.isomorphic(&uniform(2, 3).unwrap()));
        assert_eq!(s.rank(), u12.rank() + 1);

        // coloop refusal
        let coloop = from_bases(&["c"], &[&["c"]]).unwrap();
        assert!(series_extension(&coloop, "c", "e").is_err());
    }

    #[test]
    fn parallel_connection_point() {
        let a = from_bases(&["p", "a"], &[&["p"], &["a"]]).unwrap(); // U_{1,2}
        let b = from_bases(&["p", "b"], &[&["p"], &["b"]]).unwrap();
        let pc = parallel_connection(&a, &b, "p").unwrap();
        assert!(pc.isomorphic(&uniform(1, 3).unwrap()));
        assert!(parallel_connection(&a, &a, "p").is_err());
    }
}
