//! Positroid-order search: depth-first position assignment over each
//! connected component, pruned by the flats that any positroid order must
//! make cyclic intervals, symmetry-reduced by pinning the first element
//! and quotienting by reversal, and guarded by a node budget.

use crate::check::is_positroid_order_cip;
use crate::error::{Error, Result};
use crate::mask::{self, bit, count, Mask};
use crate::matroid::Matroid;
use crate::order::{circular_arc, BoundOrder, LinearOrder};
use crate::report::{Certificate, CheckReport};

/// Default node budget per component search.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Result of a positroid-order search.
#[derive(Debug, Clone)]
pub struct SearchResult {
    /// A positroid order for the whole ground set (loops last) when one
    /// exists and the budget sufficed.
    pub order: Option<LinearOrder>,
    pub report: CheckReport,
}

/// Flats every positroid order must make cyclic intervals: connected
/// restriction and connected contraction, 2 <= |F| <= n-2.
pub fn interval_constraint_flats(m: &Matroid) -> Vec<Mask> {
    let n = m.n();
    m.connected_flat_contractions()
        .iter()
        .filter(|(f, comps)| count(*f) <= n.saturating_sub(2) && comps.len() == 1)
        .map(|(f, _)| *f)
        .collect()
}

struct ComponentSearch<'a> {
    m: &'a Matroid,
    constraints: Vec<Mask>,
    budget: &'a mut u64,
}

pub(crate) enum Search {
    Found(Vec<usize>),
    Exhausted,
    OutOfBudget,
}

impl<'a> ComponentSearch<'a> {
    fn new(m: &'a Matroid, budget: &'a mut u64) -> ComponentSearch<'a> {
        ComponentSearch {
            m,
            constraints: interval_constraint_flats(m),
            budget,
        }
    }

    /// Enumerates candidate orders (element 0 first, reversal-reduced) that
    /// satisfy the cyclic-interval constraints, invoking the callback on
    /// each completed assignment. The callback returns true to stop.
    fn run(&mut self, visit: &mut dyn FnMut(&[usize]) -> bool) -> Search {
        let n = self.m.n();
        if n == 0 {
            return Search::Exhausted;
        }
        let mut perm: Vec<usize> = vec![usize::MAX; n];
        perm[0] = 0;
        let mut used: Mask = bit(0);
        self.extend(&mut perm, &mut used, 1, visit)
    }

    fn extend(
        &mut self,
        perm: &mut Vec<usize>,
        used: &mut Mask,
        depth: usize,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> Search {
        let n = self.m.n();
        if depth == n {
            // reversal quotient: keep the lexicographically smaller of the
            // assignment and its reversal rotated back to start at 0
            if n > 2 && !reversal_representative(perm) {
                return Search::Exhausted;
            }
            if visit(perm) {
                return Search::Found(perm.clone());
            }
            return Search::Exhausted;
        }
        for cand in 0..n {
            if mask::contains(*used, cand) {
                continue;
            }
            if *self.budget == 0 {
                return Search::OutOfBudget;
            }
            *self.budget -= 1;
            perm[depth] = cand;
            *used |= bit(cand);
            if self.feasible(perm, depth + 1) {
                match self.extend(perm, used, depth + 1, visit) {
                    Search::Exhausted => {}
                    other => return other,
                }
            }
            *used &= !bit(cand);
            perm[depth] = usize::MAX;
        }
        Search::Exhausted
    }

    /// Every constraint flat must still be completable to a circular arc
    /// given the positions filled so far.
    fn feasible(&self, perm: &[usize], filled: usize) -> bool {
        let n = self.m.n();
        let prefix_positions = mask::full(filled);
        'flats: for &f in &self.constraints {
            let len = count(f);
            let mut occupied: Mask = 0;
            for (p, &e) in perm[..filled].iter().enumerate() {
                if mask::contains(f, e) {
                    occupied |= bit(p);
                }
            }
            if occupied == 0 {
                continue;
            }
            for start in 0..n {
                let arc = circular_arc(n, start, len);
                if arc & prefix_positions == occupied {
                    continue 'flats;
                }
            }
            return false;
        }
        true
    }
}

/// True when `perm` (with perm[0] = 0) is lexicographically no larger than
/// its reversal rotated to start at 0.
fn reversal_representative(perm: &[usize]) -> bool {
    let n = perm.len();
    for i in 1..n {
        let rev = perm[n - i];
        if perm[i] != rev {
            return perm[i] < rev;
        }
    }
    true
}

/// Searches one connected loopless matroid for its lexicographically least
/// positroid order (element of index 0 first, reversal-reduced).
fn search_component(m: &Matroid, budget: &mut u64) -> Result<Search> {
    if m.n() == 1 {
        return Ok(Search::Found(vec![0]));
    }
    let mut search = ComponentSearch::new(m, budget);
    let mut error: Option<Error> = None;
    let outcome = search.run(&mut |perm| {
        let ord = BoundOrder::from_perm(perm.to_vec()).to_linear_order(m);
        match is_positroid_order_cip(m, &ord) {
            Ok(rep) => rep.holds(),
            Err(e) => {
                error = Some(e);
                true
            }
        }
    });
    if let Some(e) = error {
        return Err(e);
    }
    Ok(outcome)
}

/// Enumerates every positroid order of a connected loopless matroid up to
/// shift and reversal, invoking the callback on each, until the callback
/// returns true or the budget runs out. Returns whether the enumeration
/// completed (Exhausted), stopped early (Found), or ran out (OutOfBudget).
pub(crate) fn for_each_positroid_order(
    m: &Matroid,
    budget: &mut u64,
    mut f: impl FnMut(&BoundOrder) -> bool,
) -> Result<Search> {
    if m.n() == 1 {
        let bo = BoundOrder::from_perm(vec![0]);
        return Ok(if f(&bo) {
            Search::Found(vec![0])
        } else {
            Search::Exhausted
        });
    }
    let mut search = ComponentSearch::new(m, budget);
    let mut error: Option<Error> = None;
    let outcome = search.run(&mut |perm| {
        let bo = BoundOrder::from_perm(perm.to_vec());
        let ord = bo.to_linear_order(m);
        match is_positroid_order_cip(m, &ord) {
            Ok(rep) => rep.holds() && f(&bo),
            Err(e) => {
                error = Some(e);
                true
            }
        }
    });
    if let Some(e) = error {
        return Err(e);
    }
    Ok(outcome)
}

/// Finds a positroid order for an arbitrary matroid: strips loops, splits
/// into connected components, searches each (lexicographically least
/// branch first), validates with the cyclic-interval test, and
/// concatenates the component orders, appending loops last.
pub fn find_positroid_order(m: &Matroid, budget: u64) -> Result<SearchResult> {
    let loops = m.loops();
    let loop_labels = m.label_list(loops);
    let work = if loops == 0 {
        m.clone()
    } else {
        m.delete(loops)
    };

    let mut seq: Vec<String> = Vec::with_capacity(m.n());
    let mut remaining = budget;
    for &block in work.components().blocks() {
        let comp = work.restrict(block);
        match search_component(&comp, &mut remaining)? {
            Search::Found(perm) => {
                seq.extend(perm.iter().map(|&e| comp.labels()[e].clone()));
            }
            Search::Exhausted => {
                let constraints = interval_constraint_flats(&comp)
                    .iter()
                    .map(|&f| comp.label_list(f))
                    .collect();
                let cert = wrap_loops(&loop_labels, Certificate::Unsatisfiable { constraints });
                return Ok(SearchResult {
                    order: None,
                    report: CheckReport::no(cert),
                });
            }
            Search::OutOfBudget => {
                return Ok(SearchResult {
                    order: None,
                    report: CheckReport::undetermined(budget),
                });
            }
        }
    }
    seq.extend(loop_labels.iter().cloned());
    let order = LinearOrder::new(seq)?;

    // Theorem-level sanity: the assembled order must pass the full test.
    if work.n() > 0 {
        let induced = order.induced(work.labels());
        let rep = is_positroid_order_cip(&work, &induced)?;
        if !rep.holds() {
            return Err(Error::Internal(
                "assembled component order failed validation; component search is unsound".into(),
            ));
        }
    }
    let cert = wrap_loops(
        &loop_labels,
        Certificate::Order {
            order: order.seq().to_vec(),
        },
    );
    Ok(SearchResult {
        order: Some(order),
        report: CheckReport::yes_with(cert),
    })
}

fn wrap_loops(loops: &[String], inner: Certificate) -> Certificate {
    if loops.is_empty() {
        inner
    } else {
        Certificate::LoopsStripped {
            loops: loops.to_vec(),
            inner: Box::new(inner),
        }
    }
}

/// Whether the matroid is a positroid: some positroid order exists. Loops
/// never affect the verdict.
pub fn is_positroid(m: &Matroid, budget: u64) -> Result<CheckReport> {
    Ok(find_positroid_order(m, budget)?.report)
}

/// Concatenates per-component positroid orders into a positroid order for
/// the whole matroid. Each supplied order must cover exactly one component
/// and be a positroid order for it.
pub fn assemble_component_order(m: &Matroid, parts: &[LinearOrder]) -> Result<LinearOrder> {
    let components = m.components();
    if parts.len() != components.len() {
        return Err(Error::Input(format!(
            "{} orders supplied for {} components",
            parts.len(),
            components.len()
        )));
    }
    let mut covered: Vec<bool> = vec![false; components.len()];
    let mut seq: Vec<String> = Vec::with_capacity(m.n());
    for part in parts {
        let block_mask = m.mask_of(&part.seq().iter().map(|s| s.as_str()).collect::<Vec<_>>())?;
        let idx = components
            .blocks()
            .iter()
            .position(|&b| b == block_mask)
            .ok_or_else(|| Error::Input("order does not cover exactly one component".into()))?;
        if covered[idx] {
            return Err(Error::Input("two orders cover the same component".into()));
        }
        covered[idx] = true;
        validate_part(m, block_mask, part)?;
        seq.extend(part.seq().iter().cloned());
    }
    LinearOrder::new(seq)
}

fn validate_part(m: &Matroid, block: Mask, part: &LinearOrder) -> Result<()> {
    if count(block) == 1 {
        return Ok(()); // single loop or coloop: any order works
    }
    let comp = m.restrict(block);
    let rep = is_positroid_order_cip(&comp, part)?;
    if !rep.holds() {
        return Err(Error::Precondition(format!(
            "supplied order [{}] is not a positroid order for its component",
            part.seq().join(",")
        )));
    }
    Ok(())
}

/// Companion validator: an arbitrary order on the whole ground set is a
/// positroid order iff the component partition is non-crossing in it and
/// every induced component order is a positroid order.
pub fn validate_component_order(m: &Matroid, ord: &LinearOrder) -> Result<CheckReport> {
    let bound = BoundOrder::bind(m, ord)?;
    let components = m.components();
    if !bound.is_noncrossing(components)? {
        let blocks = components.blocks();
        for i in 0..blocks.len() {
            for j in i + 1..blocks.len() {
                if blocks_alternate(&bound, blocks[i], blocks[j]) {
                    return Ok(CheckReport::no(Certificate::CrossingBlocks {
                        block1: m.label_list(blocks[i]),
                        block2: m.label_list(blocks[j]),
                    }));
                }
            }
        }
        return Err(Error::Internal(
            "crossing detected but no witnessing pair found".into(),
        ));
    }
    for &block in components.blocks() {
        if count(block) == 1 {
            continue;
        }
        let comp = m.restrict(block);
        let induced = ord.induced(comp.labels());
        let rep = is_positroid_order_cip(&comp, &induced)?;
        if !rep.holds() {
            return Ok(CheckReport::no(rep.certificate));
        }
    }
    Ok(CheckReport::yes())
}

fn blocks_alternate(bound: &BoundOrder, a: Mask, b: Mask) -> bool {
    let mut runs = 0;
    let mut last = 2u8;
    for &e in bound.perm() {
        let tag = if mask::contains(a, e) {
            0
        } else if mask::contains(b, e) {
            1
        } else {
            continue;
        };
        if tag != last {
            runs += 1;
            last = tag;
        }
    }
    runs >= 4
}

/// Pulls each given clone set together into a cyclic interval, preserving
/// positroid-orderhood, with the first two sets ending up adjacent. This
/// follows the pull-to-front transformation: stable-partitioning a clone
/// set to the front of a positroid order yields a positroid order.
pub fn clone_interval_order(
    m: &Matroid,
    ord: &LinearOrder,
    classes: &[Mask],
) -> Result<LinearOrder> {
    let rep = is_positroid_order_cip(m, ord)?;
    if !rep.holds() {
        return Err(Error::Precondition(
            "the supplied order is not a positroid order".into(),
        ));
    }
    let mut seen: Mask = 0;
    for (i, &x) in classes.iter().enumerate() {
        if x == 0 {
            return Err(Error::Precondition(format!(
                "clone set #{} is empty",
                i + 1
            )));
        }
        if x & seen != 0 {
            return Err(Error::Precondition(format!(
                "clone set {{{}}} overlaps an earlier one",
                m.label_list(x).join(",")
            )));
        }
        seen |= x;
        if !m.is_clone_set(x) {
            return Err(Error::Precondition(format!(
                "{{{}}} is not a set of clones",
                m.label_list(x).join(",")
            )));
        }
    }
    if classes.is_empty() {
        return Ok(ord.clone());
    }

    let bound = BoundOrder::bind(m, ord)?;
    let n = m.n();
    let mut perm: Vec<usize> = bound.perm().to_vec();

    if classes.len() >= 2 {
        let (x1, x2) = (classes[0], classes[1]);
        // find cyclically consecutive x in X1, y in X2 and normalize the
        // order (shift, possibly reverse) so x is first and y last
        let mut normalized = false;
        for p in 0..n {
            let here = perm[p];
            let next = perm[(p + 1) % n];
            if mask::contains(x2, here) && mask::contains(x1, next) {
                perm.rotate_left((p + 1) % n);
                normalized = true;
                break;
            }
            if mask::contains(x1, here) && mask::contains(x2, next) {
                perm.reverse();
                let pos_x = perm.iter().position(|&e| e == here).unwrap();
                perm.rotate_left(pos_x);
                normalized = true;
                break;
            }
        }
        if !normalized {
            return Err(Error::Precondition(format!(
                "no element of {{{}}} is cyclically consecutive with one of {{{}}}",
                m.label_list(x1).join(","),
                m.label_list(x2).join(",")
            )));
        }
        perm = stable_pull_front(&perm, x1);
        perm.reverse();
        perm = stable_pull_front(&perm, x2);
        // rotate so the X1 block (currently the tail) leads
        let t1 = count(x1);
        perm.rotate_left(n - t1);
        for &x in &classes[2..] {
            perm = stable_pull_front(&perm, x);
        }
    } else {
        perm = stable_pull_front(&perm, classes[0]);
    }

    let result = BoundOrder::from_perm(perm).to_linear_order(m);
    let check = is_positroid_order_cip(m, &result)?;
    if !check.holds() {
        return Err(Error::Internal(
            "clone pull-together produced a non-positroid order; transformation is unsound".into(),
        ));
    }
    Ok(result)
}

fn stable_pull_front(perm: &[usize], x: Mask) -> Vec<usize> {
    let mut front: Vec<usize> = Vec::new();
    let mut back: Vec<usize> = Vec::new();
    for &e in perm {
        if mask::contains(x, e) {
            front.push(e);
        } else {
            back.push(e);
        }
    }
    front.extend(back);
    front
}
