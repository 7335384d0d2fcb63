//! Positroid-order tests.
//!
//! Each characterization of positroid orders lives behind the
//! [`OrderCheck`] trait and is registered by name, so callers (notably the
//! CLI) select one at runtime and the agreement properties between them
//! can be stated uniformly. The necklace machinery that two of the checks
//! share is also here.

use crate::error::{Error, Result};
use crate::mask::{self, bit, bits, count, full, Mask};
use crate::matroid::Matroid;
use crate::order::{gale_basis, maximal_cyclic_runs, BoundOrder, LinearOrder};
use crate::report::{Certificate, CheckReport, Verdict};

/// The tuple of Gale bases over all cyclic shifts of an order, written as
/// label sets and satisfying the one-step exchange rule.
#[derive(Debug, Clone, PartialEq)]
pub struct GrassmannNecklace {
    entries: Vec<Vec<String>>,
}

impl GrassmannNecklace {
    pub fn new(entries: Vec<Vec<String>>) -> GrassmannNecklace {
        GrassmannNecklace { entries }
    }

    pub fn entries(&self) -> &[Vec<String>] {
        &self.entries
    }

    /// Checks the necklace exchange rule against the given order: when the
    /// i-th least element lies in I_i, the next entry swaps it for one
    /// element (possibly itself); otherwise the entry is unchanged.
    pub fn validate_exchange(&self, ord: &LinearOrder) -> Result<()> {
        let n = ord.n();
        if self.entries.len() != n {
            return Err(Error::Input(format!(
                "necklace has {} entries but the order has {n} elements",
                self.entries.len()
            )));
        }
        let masks = self.entry_masks(ord)?;
        let r = count(masks[0]);
        for (i, &m) in masks.iter().enumerate() {
            if count(m) != r {
                return Err(Error::Input(
                    "necklace entries are not all the same size".into(),
                ));
            }
            let next = masks[(i + 1) % n];
            let e_i = bit(i); // the i-th least label, as a position bit
            if m & e_i != 0 {
                // I_{i+1} must contain I_i - e_i; the one remaining slot is
                // the exchanged element (possibly e_i itself)
                if (m & !e_i) & !next != 0 {
                    return Err(Error::Input(format!(
                        "necklace exchange rule fails between entries {} and {}",
                        i + 1,
                        (i + 1) % n + 1
                    )));
                }
            } else if next != m {
                return Err(Error::Input(format!(
                    "necklace entry {} should repeat entry {} (its pivot is absent)",
                    (i + 1) % n + 1,
                    i + 1
                )));
            }
        }
        Ok(())
    }

    /// Entries as masks over the order's positions (bit p = p-th least).
    fn entry_masks(&self, ord: &LinearOrder) -> Result<Vec<Mask>> {
        self.entries
            .iter()
            .map(|entry| {
                let mut m: Mask = 0;
                for l in entry {
                    let p = ord.position(l).ok_or_else(|| {
                        Error::Input(format!("necklace label '{l}' not in the order"))
                    })?;
                    m |= bit(p);
                }
                Ok(m)
            })
            .collect()
    }
}

/// The Grassmann necklace of a matroid along an order: entry i is the Gale
/// basis in the i-shift.
pub fn grassmann_necklace(m: &Matroid, ord: &LinearOrder) -> Result<GrassmannNecklace> {
    let bound = BoundOrder::bind(m, ord)?;
    let mut entries = Vec::with_capacity(m.n());
    for i in 1..=m.n() {
        let shifted = bound.shift(i)?;
        let basis = gale_basis(m, &shifted);
        entries.push(m.label_list(basis));
    }
    Ok(GrassmannNecklace { entries })
}

/// Basis masks of the nested matroid N(I, <=) over position indexing:
/// exactly the r-subsets J with I <=_G J, computed from the filter
/// presentation by bipartite matching.
fn nested_bases_positions(n: usize, shift: usize, entry: Mask) -> Vec<Mask> {
    // positions relative to the shifted order: position p holds original
    // position (shift + p) mod n
    let r = count(entry);
    let filters: Vec<Mask> = bits(entry)
        .map(|orig| {
            // the filter of elements >= orig in the shifted order
            let rank_in_shift = (orig + n - shift) % n;
            let mut f: Mask = 0;
            for p in rank_in_shift..n {
                f |= bit((shift + p) % n);
            }
            f
        })
        .collect();
    let mut out = Vec::new();
    for cand in mask::ksubsets(full(n), r) {
        if matching_covers(&filters, cand) {
            out.push(cand);
        }
    }
    out
}

fn matching_covers(sets: &[Mask], x: Mask) -> bool {
    let mut matched: Vec<Option<usize>> = vec![None; sets.len()];
    for e in bits(x) {
        let mut visited = vec![false; sets.len()];
        if !augment(sets, e, &mut visited, &mut matched) {
            return false;
        }
    }
    true
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

/// Intersects the nested matroids of a valid necklace into the positroid
/// it defines. The entries are validated against the exchange rule first;
/// an empty intersection afterwards is an internal error, since the
/// intersection of a valid necklace is never empty.
pub fn necklace_matroid(neck: &GrassmannNecklace, ord: &LinearOrder) -> Result<Matroid> {
    neck.validate_exchange(ord)?;
    let n = ord.n();
    let masks = neck.entry_masks(ord)?;
    let r = count(masks[0]);
    let mut inter: Option<Vec<Mask>> = None;
    for (i, &entry) in masks.iter().enumerate() {
        let bases = nested_bases_positions(n, i, entry);
        inter = Some(match inter {
            None => bases,
            Some(prev) => {
                let keep: std::collections::HashSet<Mask> = bases.into_iter().collect();
                prev.into_iter().filter(|b| keep.contains(b)).collect()
            }
        });
    }
    let bases = inter.unwrap_or_default();
    if bases.is_empty() {
        return Err(Error::Internal(
            "necklace intersection is empty; the necklace invariant must have been violated".into(),
        ));
    }
    Ok(Matroid::from_parts_unchecked(ord.seq().to_vec(), r, bases))
}

/// Maximal cyclic intervals disjoint from `f`: the circular gaps between
/// consecutive positions of `f`. Returned as element masks.
fn gaps_around(bound: &BoundOrder, f: Mask) -> Vec<Mask> {
    maximal_cyclic_runs(bound, full(bound.n()) & !f)
}

// ---------------------------------------------------------------------------
// the seven checks
// ---------------------------------------------------------------------------

/// Necklace route: the order is a positroid order iff the matroid equals
/// the intersection of the nested matroids of its own Grassmann necklace.
pub fn is_positroid_order_necklace(m: &Matroid, ord: &LinearOrder) -> Result<CheckReport> {
    let neck = grassmann_necklace(m, ord)?;
    let nm = necklace_matroid(&neck, ord)?;
    let aligned = nm.reindexed_like(m)?;
    if aligned.bases() == m.bases() {
        return Ok(CheckReport::yes());
    }
    // smallest witness in the symmetric difference
    let in_m = m.bases().iter().find(|b| !aligned.is_basis(**b));
    let (set, of_matroid) = match in_m {
        Some(&b) => (b, true),
        None => {
            let b = aligned
                .bases()
                .iter()
                .find(|b| !m.is_basis(**b))
                .copied()
                .expect("families differ");
            (b, false)
        }
    };
    Ok(CheckReport::no(Certificate::NecklaceMismatch {
        set: m.label_list(set),
        basis_of_matroid: of_matroid,
    }))
}

/// Base-sorting route: every merged basis pair splits by position parity
/// into two bases.
pub fn is_positroid_order_sorting(m: &Matroid, ord: &LinearOrder) -> Result<CheckReport> {
    let bound = BoundOrder::bind(m, ord)?;
    let bases = m.bases();
    for (i, &b1) in bases.iter().enumerate() {
        for &b2 in &bases[i..] {
            let (odd, even) = bound.sort_pair(b1, b2)?;
            if !m.is_basis(odd) || !m.is_basis(even) {
                return Ok(CheckReport::no(Certificate::SortingFailure {
                    b1: m.label_list(b1),
                    b2: m.label_list(b2),
                    odd: m.label_list(odd),
                    even: m.label_list(even),
                }));
            }
        }
    }
    Ok(CheckReport::yes())
}

/// Cyclic-interval-property route: for each proper connected flat F with
/// at least two elements, every component of M/F with at least two
/// elements fits inside a cyclic interval disjoint from F.
pub fn is_positroid_order_cip(m: &Matroid, ord: &LinearOrder) -> Result<CheckReport> {
    if m.loops() != 0 {
        return Err(Error::Precondition(
            "the cyclic-interval test requires a loopless matroid; strip loops first".into(),
        ));
    }
    let bound = BoundOrder::bind(m, ord)?;
    for (flat, comps) in m.connected_flat_contractions() {
        let gaps = gaps_around(&bound, *flat);
        for &k in comps {
            if count(k) < 2 {
                continue;
            }
            if !gaps.iter().any(|&g| k & !g == 0) {
                return Ok(CheckReport::no(Certificate::FlatComponent {
                    flat: m.label_list(*flat),
                    component: m.label_list(k),
                }));
            }
        }
    }
    Ok(CheckReport::yes())
}

/// Dual route: for every cyclic set A with connected contraction, the
/// restriction to A decomposes along the maximal cyclic intervals inside
/// A. Requires a coloop-free matroid.
pub fn is_positroid_order_dual_cyclic(m: &Matroid, ord: &LinearOrder) -> Result<CheckReport> {
    if m.coloops() != 0 {
        return Err(Error::Precondition(
            "the dual cyclic-interval test requires a coloop-free matroid".into(),
        ));
    }
    let bound = BoundOrder::bind(m, ord)?;
    let n = m.n();
    for a in 0..(1u32 << n) {
        let size = count(a);
        if size < 2 || size > n - 2 || !m.is_cyclic(a) {
            continue;
        }
        if m.contraction_components(a).len() != 1 {
            continue;
        }
        let runs = maximal_cyclic_runs(&bound, a);
        let split_rank: usize = runs.iter().map(|&v| m.r(v)).sum();
        if split_rank != m.r(a) {
            return Ok(CheckReport::no(Certificate::CyclicSetSplit {
                cyclic_set: m.label_list(a),
                intervals: runs.iter().map(|&v| m.label_list(v)).collect(),
            }));
        }
    }
    Ok(CheckReport::yes())
}

/// Forbidden-configuration route: no four-element minor consisting of a
/// 2-circuit and a 2-cocircuit has the circuit crossing the cocircuit in
/// the induced order. Loops are irrelevant to the quantifier and are
/// stripped internally.
pub fn is_positroid_order_rank2(m: &Matroid, ord: &LinearOrder) -> Result<CheckReport> {
    let loops = m.loops();
    if loops != 0 {
        let stripped = m.delete(loops);
        let induced = ord.induced(stripped.labels());
        let mut rep = is_positroid_order_rank2(&stripped, &induced)?;
        rep.certificate = Certificate::LoopsStripped {
            loops: m.label_list(loops),
            inner: Box::new(rep.certificate),
        };
        return Ok(rep);
    }
    let bound = BoundOrder::bind(m, ord)?;
    let n = m.n();
    for (flat, comps) in m.connected_flat_contractions() {
        let f_positions = bound.position_mask(*flat);
        for &k in comps {
            if count(k) < 2 {
                continue;
            }
            let elems: Vec<usize> = bits(k).collect();
            for (i, &e) in elems.iter().enumerate() {
                for &f_el in &elems[i + 1..] {
                    // the two circular arcs strictly between e and f
                    let (pe, pf) = (bound.pos(e), bound.pos(f_el));
                    let (lo, hi) = if pe < pf { (pe, pf) } else { (pf, pe) };
                    let arc1 = crate::order::circular_arc(n, lo + 1, hi - lo - 1);
                    let arc2 = crate::order::circular_arc(n, hi + 1, n - (hi - lo) - 1);
                    if arc1 & f_positions != 0 && arc2 & f_positions != 0 {
                        let a = bound.perm()[(arc1 & f_positions).trailing_zeros() as usize];
                        let b = bound.perm()[(arc2 & f_positions).trailing_zeros() as usize];
                        let cert = forbidden_minor_certificate(m, *flat, a, b, e, f_el)?;
                        return Ok(CheckReport::no(cert));
                    }
                }
            }
        }
    }
    Ok(CheckReport::yes())
}

/// Builds the witness minor for a rank2 failure: a set W = {a,b,e,f} and a
/// contraction set C such that M\(E-W-C)/C is a 2-circuit {a,b} plus a
/// 2-cocircuit {e,f}. The proof of the equivalence guarantees one exists;
/// the contraction set is found by scanning upward in size.
fn forbidden_minor_certificate(
    m: &Matroid,
    _flat: Mask,
    a: usize,
    b: usize,
    e: usize,
    f: usize,
) -> Result<Certificate> {
    let w = bit(a) | bit(b) | bit(e) | bit(f);
    let rest = m.ground() & !w;
    let mut candidates: Vec<Mask> = mask::subsets(rest).collect();
    candidates.sort_by_key(|&c| count(c));
    for c in candidates {
        // ranks in the minor M\(rest - c)/c restricted to w
        let rc = m.r(c);
        let rk = |x: Mask| m.r(x | c) - rc;
        if rk(w) != 2 {
            continue;
        }
        let (ba, bb, be, bf) = (bit(a), bit(b), bit(e), bit(f));
        let circuit_ok = rk(ba) == 1 && rk(bb) == 1 && rk(ba | bb) == 1;
        let cocircuit_ok = rk(ba | bb | be) == 2 && rk(ba | bb | bf) == 2;
        if circuit_ok && cocircuit_ok {
            return Ok(Certificate::ForbiddenMinor {
                deleted: m.label_list(rest & !c),
                contracted: m.label_list(c),
                circuit: m.label_list(ba | bb),
                cocircuit: m.label_list(be | bf),
            });
        }
    }
    Err(Error::Internal(
        "no forbidden four-element minor found despite a cyclic-interval violation".into(),
    ))
}

/// Connected-matroid characterization over single flats: for every flat F
/// with M|F and M/F connected, F or its complement is an interval.
pub fn check_connected_flat_order(m: &Matroid, ord: &LinearOrder) -> Result<CheckReport> {
    if !m.is_connected() {
        return Err(Error::Precondition(
            "this test requires a connected matroid".into(),
        ));
    }
    if m.rank() < 2 {
        return Err(Error::Precondition(
            "this test requires rank at least 2".into(),
        ));
    }
    let bound = BoundOrder::bind(m, ord)?;
    let n = m.n();
    for (flat, comps) in m.connected_flat_contractions() {
        if count(*flat) > n - 2 || comps.len() != 1 {
            continue;
        }
        if !bound.is_interval(*flat) && !bound.is_interval(m.ground() & !flat) {
            return Ok(CheckReport::no(Certificate::FlatNotInterval {
                flat: m.label_list(*flat),
            }));
        }
    }
    Ok(CheckReport::yes())
}

/// Flag characterization: every length-k flag of flats with connected
/// successive quotients induces a non-crossing partition.
pub fn check_flag_partitions(m: &Matroid, ord: &LinearOrder, k: usize) -> Result<CheckReport> {
    if !m.is_connected() {
        return Err(Error::Precondition(
            "this test requires a connected matroid".into(),
        ));
    }
    if k <= 1 || k > m.rank() {
        return Err(Error::Precondition(format!(
            "flag length must satisfy 1 < k <= rank, got k = {k} with rank {}",
            m.rank()
        )));
    }
    let bound = BoundOrder::bind(m, ord)?;
    let flats = m.flats();
    // connected-quotient test for a flat pair lower < upper
    let conn_quotient = |lower: Mask, upper: Mask| -> bool {
        let restricted = m.restrict(upper);
        let c = crate::matroid::compress(lower, upper);
        restricted.contraction_components(c).len() == 1
    };
    let mut chain: Vec<Mask> = vec![0];
    fn dfs(
        m: &Matroid,
        bound: &BoundOrder,
        flats: &[Mask],
        conn_quotient: &dyn Fn(Mask, Mask) -> bool,
        chain: &mut Vec<Mask>,
        k: usize,
    ) -> Option<Vec<Mask>> {
        let depth = chain.len() - 1;
        let last = *chain.last().unwrap();
        if depth == k - 1 {
            let top = m.ground();
            if last != top && last & !top == 0 && conn_quotient(last, top) {
                chain.push(top);
                let blocks: Vec<Mask> = chain.windows(2).map(|w| w[1] & !w[0]).collect();
                let part =
                    crate::matroid::Partition::new(blocks).expect("flag blocks are disjoint");
                let crossing = !bound
                    .is_noncrossing(&part)
                    .expect("partition covers the ground");
                let result = if crossing { Some(chain.clone()) } else { None };
                chain.pop();
                return result;
            }
            return None;
        }
        for &f in flats {
            // need last < f < ground, strictly
            if f == m.ground() || f == last || last & !f != 0 {
                continue;
            }
            if !conn_quotient(last, f) {
                continue;
            }
            chain.push(f);
            if let Some(witness) = dfs(m, bound, flats, conn_quotient, chain, k) {
                chain.pop();
                return Some(witness);
            }
            chain.pop();
        }
        None
    }
    if let Some(witness) = dfs(m, &bound, &flats, &conn_quotient, &mut chain, k) {
        return Ok(CheckReport::no(Certificate::CrossingFlag {
            flats: witness.iter().map(|&f| m.label_list(f)).collect(),
        }));
    }
    Ok(CheckReport::yes())
}

// ---------------------------------------------------------------------------
// strategy registry
// ---------------------------------------------------------------------------

/// A positroid-order test selectable by name.
pub trait OrderCheck: Sync {
    fn name(&self) -> &'static str;
    fn summary(&self) -> &'static str;
    fn check(&self, m: &Matroid, ord: &LinearOrder) -> Result<CheckReport>;
}

struct Necklace;
struct Sorting;
struct Cip;
struct DualCip;
struct Rank2;
struct Arw2;
struct Flags;

impl OrderCheck for Necklace {
    fn name(&self) -> &'static str {
        "necklace"
    }
    fn summary(&self) -> &'static str {
        "matroid equals the intersection of the nested matroids of its Grassmann necklace"
    }
    fn check(&self, m: &Matroid, ord: &LinearOrder) -> Result<CheckReport> {
        is_positroid_order_necklace(m, ord)
    }
}

impl OrderCheck for Sorting {
    fn name(&self) -> &'static str {
        "sorting"
    }
    fn summary(&self) -> &'static str {
        "every merged basis pair splits by position parity into two bases"
    }
    fn check(&self, m: &Matroid, ord: &LinearOrder) -> Result<CheckReport> {
        is_positroid_order_sorting(m, ord)
    }
}

impl OrderCheck for Cip {
    fn name(&self) -> &'static str {
        "cip"
    }
    fn summary(&self) -> &'static str {
        "components of contractions by connected flats fit in disjoint cyclic intervals"
    }
    fn check(&self, m: &Matroid, ord: &LinearOrder) -> Result<CheckReport> {
        is_positroid_order_cip(m, ord)
    }
}

impl OrderCheck for DualCip {
    fn name(&self) -> &'static str {
        "dual-cip"
    }
    fn summary(&self) -> &'static str {
        "restrictions to cyclic sets with connected contraction split along cyclic intervals"
    }
    fn check(&self, m: &Matroid, ord: &LinearOrder) -> Result<CheckReport> {
        is_positroid_order_dual_cyclic(m, ord)
    }
}

impl OrderCheck for Rank2 {
    fn name(&self) -> &'static str {
        "rank2"
    }
    fn summary(&self) -> &'static str {
        "no 2-circuit-plus-2-cocircuit minor has its circuit crossing the cocircuit"
    }
    fn check(&self, m: &Matroid, ord: &LinearOrder) -> Result<CheckReport> {
        is_positroid_order_rank2(m, ord)
    }
}

impl OrderCheck for Arw2 {
    fn name(&self) -> &'static str {
        "arw2"
    }
    fn summary(&self) -> &'static str {
        "for connected matroids: flats with connected restriction and contraction are intervals or co-intervals"
    }
    fn check(&self, m: &Matroid, ord: &LinearOrder) -> Result<CheckReport> {
        check_connected_flat_order(m, ord)
    }
}

impl OrderCheck for Flags {
    fn name(&self) -> &'static str {
        "flags"
    }
    fn summary(&self) -> &'static str {
        "for connected matroids: flags of flats with connected quotients induce non-crossing partitions (k = 2)"
    }
    fn check(&self, m: &Matroid, ord: &LinearOrder) -> Result<CheckReport> {
        check_flag_partitions(m, ord, 2)
    }
}

static CHECKS: [&dyn OrderCheck; 7] = [&Necklace, &Sorting, &Cip, &DualCip, &Rank2, &Arw2, &Flags];

/// All registered order tests, in registration order.
pub fn order_checks() -> &'static [&'static dyn OrderCheck] {
    &CHECKS
}

/// Looks up a registered test by name.
pub fn order_check(name: &str) -> Option<&'static dyn OrderCheck> {
    CHECKS.iter().copied().find(|c| c.name() == name)
}

/// Runs a check through the loop-stripping driver: loops never affect the
/// verdict, so they are deleted first and recorded in the certificate.
pub fn run_order_check(
    check: &dyn OrderCheck,
    m: &Matroid,
    ord: &LinearOrder,
) -> Result<CheckReport> {
    let loops = m.loops();
    if loops == 0 {
        return check.check(m, ord);
    }
    let stripped = m.delete(loops);
    let induced = ord.induced(stripped.labels());
    let mut rep = check.check(&stripped, &induced)?;
    rep.certificate = Certificate::LoopsStripped {
        loops: m.label_list(loops),
        inner: Box::new(rep.certificate),
    };
    Ok(rep)
}

/// Runs every applicable registered test and asserts agreement; tests
/// whose preconditions reject the input are skipped. Returns the shared
/// report together with the list of (name, report) pairs that ran.
pub fn run_all_order_checks(
    m: &Matroid,
    ord: &LinearOrder,
) -> Result<(CheckReport, Vec<(&'static str, CheckReport)>)> {
    let mut ran: Vec<(&'static str, CheckReport)> = Vec::new();
    for check in order_checks() {
        match run_order_check(*check, m, ord) {
            Ok(rep) => ran.push((check.name(), rep)),
            Err(Error::Precondition(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    let mut verdicts: Vec<Verdict> = ran.iter().map(|(_, r)| r.verdict).collect();
    verdicts.dedup();
    if verdicts.len() != 1 {
        let detail: Vec<String> = ran
            .iter()
            .map(|(n, r)| format!("{n}={}", r.verdict))
            .collect();
        return Err(Error::Internal(format!(
            "order tests disagree: {} (theory violation)",
            detail.join(", ")
        )));
    }
    let shared = ran[0].1.clone();
    Ok((shared, ran))
}
