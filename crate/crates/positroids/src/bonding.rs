//! Bonding: gluing two matroids along their common elements T via an
//! auxiliary matroid H, then taking a minor. H is the direct sum of M and
//! a relabelled copy of N, extended by one point q_t added freely to the
//! flat spanned by each shared element t and its copy; the bonding is
//! H/Q\S. When T is independent in both matroids this is their free
//! amalgam.

use std::collections::HashMap;

use crate::construct::{principal_extension, relabel};
use crate::error::{Error, Result};
use crate::mask::{bit, Mask, MAX_ELEMENTS};
use crate::matroid::Matroid;
use crate::order::BoundOrder;
use crate::report::{CheckReport, Verdict};
use crate::search::{self, is_positroid};
use serde::{Deserialize, Serialize};

/// Suffixes for the auxiliary copies of shared labels. The '#' separator
/// is reserved: the document format forbids it in user labels.
const COPY_SUFFIX: &str = "#s";
const GLUE_SUFFIX: &str = "#q";

/// A fully materialized bonding: both sides, the shared labels, the
/// intermediate matroid H, and the bonded result.
#[derive(Debug, Clone)]
pub struct BondingInstance {
    pub m: Matroid,
    pub n: Matroid,
    /// T in M's storage order.
    pub shared: Vec<String>,
    pub h: Matroid,
    pub bond: Matroid,
}

/// Shared labels of two matroids, in the first one's storage order.
pub fn shared_labels(m: &Matroid, n: &Matroid) -> Vec<String> {
    m.labels()
        .iter()
        .filter(|l| n.index_of(l).is_some())
        .cloned()
        .collect()
}

/// Builds the bonding of M and N at T = E(M) n E(N), materializing H.
pub fn bonding(m: &Matroid, n: &Matroid) -> Result<BondingInstance> {
    let shared = shared_labels(m, n);
    if shared.is_empty() {
        return Err(Error::Input(
            "bonding requires a nonempty intersection of ground sets".into(),
        ));
    }
    let k = shared.len();
    let union_size = m.n() + n.n() - k;
    if union_size + 2 * k > MAX_ELEMENTS {
        return Err(Error::Capacity(format!(
            "bonding needs {} elements ({} in the union plus {} auxiliary)",
            union_size + 2 * k,
            union_size,
            2 * k
        )));
    }
    let mut rename = HashMap::new();
    for t in &shared {
        let s = format!("{t}{COPY_SUFFIX}");
        let q = format!("{t}{GLUE_SUFFIX}");
        for fresh in [&s, &q] {
            if m.index_of(fresh).is_some() || n.index_of(fresh).is_some() {
                return Err(Error::Input(format!(
                    "label '{fresh}' collides with a reserved auxiliary label"
                )));
            }
        }
        rename.insert(t.clone(), s);
    }
    let n_copy = relabel(n, &rename)?;
    let mut h = m.direct_sum(&n_copy)?;
    for t in &shared {
        let ti = h.index_of(t).expect("shared label in H");
        let si = h
            .index_of(&format!("{t}{COPY_SUFFIX}"))
            .expect("copied label in H");
        h = principal_extension(&h, bit(ti) | bit(si), &format!("{t}{GLUE_SUFFIX}"))?;
    }
    let q_mask: Mask = shared
        .iter()
        .map(|t| bit(h.index_of(&format!("{t}{GLUE_SUFFIX}")).unwrap()))
        .fold(0, |a, b| a | b);
    let contracted = h.contract(q_mask);
    let s_mask: Mask = shared
        .iter()
        .map(|t| bit(contracted.index_of(&format!("{t}{COPY_SUFFIX}")).unwrap()))
        .fold(0, |a, b| a | b);
    let bond = contracted.delete(s_mask);
    Ok(BondingInstance {
        m: m.clone(),
        n: n.clone(),
        shared,
        h,
        bond,
    })
}

/// The bonded matroid B_T(M, N) on E(M) u E(N).
pub fn bond(m: &Matroid, n: &Matroid) -> Result<Matroid> {
    Ok(bonding(m, n)?.bond)
}

/// The free amalgam: the bonding under the precondition that T is
/// independent on both sides.
pub fn free_amalgam(m: &Matroid, n: &Matroid) -> Result<Matroid> {
    let shared = shared_labels(m, n);
    if shared.is_empty() {
        return Err(Error::Input(
            "free amalgam requires a nonempty intersection".into(),
        ));
    }
    let refs: Vec<&str> = shared.iter().map(|s| s.as_str()).collect();
    let tm = m.mask_of(&refs)?;
    let tn = n.mask_of(&refs)?;
    if !m.is_independent(tm) {
        return Err(Error::Precondition(
            "shared set is dependent in the first matroid".into(),
        ));
    }
    if !n.is_independent(tn) {
        return Err(Error::Precondition(
            "shared set is dependent in the second matroid".into(),
        ));
    }
    bond(m, n)
}

/// One verified hypothesis line in a theorem check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Hypothesis {
    pub name: String,
    pub verdict: Verdict,
    pub detail: String,
}

/// Evidence trail for the amalgam theorems: hypothesis verdicts, the
/// conclusion check on the bonded matroid, and the overall verdict (true
/// only when hypotheses and conclusion all hold).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub hypotheses: Vec<Hypothesis>,
    pub conclusion: Option<CheckReport>,
    pub verdict: Verdict,
}

impl TheoremReport {
    fn conclude(hypotheses: Vec<Hypothesis>, conclusion: Option<CheckReport>) -> TheoremReport {
        let mut verdict = Verdict::True;
        for h in &hypotheses {
            match h.verdict {
                Verdict::False => verdict = Verdict::False,
                Verdict::Undetermined if verdict == Verdict::True => {
                    verdict = Verdict::Undetermined
                }
                _ => {}
            }
        }
        if verdict == Verdict::True {
            match &conclusion {
                Some(rep) => verdict = rep.verdict,
                None => verdict = Verdict::Undetermined,
            }
        }
        TheoremReport {
            hypotheses,
            conclusion,
            verdict,
        }
    }

    pub fn holds(&self) -> bool {
        self.verdict == Verdict::True
    }
}

fn hyp(name: &str, ok: bool, detail: String) -> Hypothesis {
    Hypothesis {
        name: name.to_string(),
        verdict: if ok { Verdict::True } else { Verdict::False },
        detail,
    }
}

/// Clone-amalgam theorem: if M and N are loopless positroids and T is
/// nonempty, independent, and a set of clones in both, then the free
/// amalgam is a positroid. Verifies every hypothesis, builds the bonding,
/// and checks the conclusion, reporting the full evidence trail.
pub fn bond_theorem_check_1(m: &Matroid, n: &Matroid, budget: u64) -> Result<TheoremReport> {
    let shared = shared_labels(m, n);
    if shared.is_empty() {
        return Err(Error::Input(
            "the theorem needs a nonempty intersection".into(),
        ));
    }
    let refs: Vec<&str> = shared.iter().map(|s| s.as_str()).collect();
    let tm = m.mask_of(&refs)?;
    let tn = n.mask_of(&refs)?;
    let t_text = shared.join(",");

    let mut hypotheses = vec![
        hyp(
            "loopless",
            m.loops() == 0 && n.loops() == 0,
            "both matroids are loopless".into(),
        ),
        hyp(
            "independent",
            m.is_independent(tm) && n.is_independent(tn),
            format!("{{{t_text}}} is independent in both"),
        ),
        hyp(
            "clones",
            m.is_clone_set(tm) && n.is_clone_set(tn),
            format!("{{{t_text}}} is a set of clones in both"),
        ),
    ];
    let pm = is_positroid(m, budget)?;
    hypotheses.push(Hypothesis {
        name: "positroid(M)".into(),
        verdict: pm.verdict,
        detail: "first matroid is a positroid".into(),
    });
    let pn = is_positroid(n, budget)?;
    hypotheses.push(Hypothesis {
        name: "positroid(N)".into(),
        verdict: pn.verdict,
        detail: "second matroid is a positroid".into(),
    });

    let conclusion = match bonding(m, n) {
        Ok(inst) => Some(is_positroid(&inst.bond, budget)?),
        Err(Error::Capacity(msg)) => {
            hypotheses.push(hyp("capacity", false, msg));
            None
        }
        Err(e) => return Err(e),
    };
    Ok(TheoremReport::conclude(hypotheses, conclusion))
}

/// Split-clone amalgam theorem: T independent on both sides, the closures
/// of T connected, and a nonempty proper subset P of T that is a set of
/// clones on both sides while every non-singleton connected flat meeting
/// T - P contains all of T; additionally some positroid order on each
/// side makes an element of P and an element of T - P cyclically
/// consecutive. Under these hypotheses the free amalgam is a positroid.
///
/// The cyclically-consecutive hypothesis is existential over positroid
/// orders and is decided by enumerating them within the budget; running
/// out of budget reports an undetermined hypothesis, never a false one.
pub fn bond_theorem_check_2(
    m: &Matroid,
    n: &Matroid,
    p_labels: &[&str],
    budget: u64,
) -> Result<TheoremReport> {
    let shared = shared_labels(m, n);
    if shared.is_empty() {
        return Err(Error::Input(
            "the theorem needs a nonempty intersection".into(),
        ));
    }
    let refs: Vec<&str> = shared.iter().map(|s| s.as_str()).collect();
    let tm = m.mask_of(&refs)?;
    let tn = n.mask_of(&refs)?;
    let pm = m.mask_of(p_labels)?;
    let pn = n.mask_of(p_labels)?;
    if pm == 0 {
        return Err(Error::Precondition("P must be nonempty".into()));
    }
    if pm & !tm != 0 || pm == tm {
        return Err(Error::Precondition(
            "P must be a proper subset of the shared set".into(),
        ));
    }
    let t_text = shared.join(",");
    let p_text = p_labels.join(",");

    let mut hypotheses = vec![
        hyp(
            "loopless",
            m.loops() == 0 && n.loops() == 0,
            "both matroids are loopless".into(),
        ),
        hyp(
            "independent",
            m.is_independent(tm) && n.is_independent(tn),
            format!("{{{t_text}}} is independent in both"),
        ),
        hyp(
            "closure-connected",
            m.is_connected_set(m.cl(tm)) && n.is_connected_set(n.cl(tn)),
            "the closure of the shared set is connected on both sides".into(),
        ),
        hyp(
            "P-clones",
            m.is_clone_set(pm) && n.is_clone_set(pn),
            format!("{{{p_text}}} is a set of clones in both"),
        ),
        hyp(
            "flats-through-T-minus-P",
            flats_meeting_rest_contain_t(m, tm, pm) && flats_meeting_rest_contain_t(n, tn, pn),
            "every non-singleton connected flat meeting T - P contains T".into(),
        ),
    ];
    hypotheses.push(consecutive_order_hypothesis(m, tm, pm, budget, "M")?);
    hypotheses.push(consecutive_order_hypothesis(n, tn, pn, budget, "N")?);
    let p_side = is_positroid(m, budget)?;
    hypotheses.push(Hypothesis {
        name: "positroid(M)".into(),
        verdict: p_side.verdict,
        detail: "first matroid is a positroid".into(),
    });
    let p_side = is_positroid(n, budget)?;
    hypotheses.push(Hypothesis {
        name: "positroid(N)".into(),
        verdict: p_side.verdict,
        detail: "second matroid is a positroid".into(),
    });

    let conclusion = match bonding(m, n) {
        Ok(inst) => Some(is_positroid(&inst.bond, budget)?),
        Err(Error::Capacity(msg)) => {
            hypotheses.push(hyp("capacity", false, msg));
            None
        }
        Err(e) => return Err(e),
    };
    Ok(TheoremReport::conclude(hypotheses, conclusion))
}

fn flats_meeting_rest_contain_t(m: &Matroid, t: Mask, p: Mask) -> bool {
    let rest = t & !p;
    for (flat, _) in m.connected_flat_contractions() {
        // connected flats with at least two elements
        if flat & rest != 0 && t & !flat != 0 {
            return false;
        }
    }
    true
}

/// Searches the positroid orders of the component containing T for one in
/// which some element of P and some element of T - P are cyclically
/// consecutive. Adjacency survives both restriction to the component and
/// re-embedding into a full order, so the component search decides the
/// hypothesis.
fn consecutive_order_hypothesis(
    m: &Matroid,
    t: Mask,
    p: Mask,
    budget: u64,
    side: &str,
) -> Result<Hypothesis> {
    let name = format!("consecutive-order({side})");
    let rest = t & !p;
    let block = match m.components().blocks().iter().find(|&&b| t & !b == 0) {
        Some(&b) => b,
        None => {
            return Ok(Hypothesis {
                name,
                verdict: Verdict::False,
                detail: "the shared set straddles two components".into(),
            })
        }
    };
    let comp = m.restrict(block);
    let refs_p: Vec<String> = m.label_list(p);
    let refs_r: Vec<String> = m.label_list(rest);
    let pc = comp.mask_of(&refs_p.iter().map(|s| s.as_str()).collect::<Vec<_>>())?;
    let rc = comp.mask_of(&refs_r.iter().map(|s| s.as_str()).collect::<Vec<_>>())?;
    let mut remaining = budget;
    let outcome = search::for_each_positroid_order(&comp, &mut remaining, |bound: &BoundOrder| {
        has_adjacent_pair(bound, pc, rc)
    })?;
    Ok(match outcome {
        search::Search::Found(_) => Hypothesis {
            name,
            verdict: Verdict::True,
            detail: "a positroid order with the required adjacency exists".into(),
        },
        search::Search::Exhausted => Hypothesis {
            name,
            verdict: Verdict::False,
            detail:
                "no positroid order has an element of P cyclically consecutive with one of T - P"
                    .into(),
        },
        search::Search::OutOfBudget => Hypothesis {
            name,
            verdict: Verdict::Undetermined,
            detail: "undetermined hypothesis: order enumeration budget exhausted".into(),
        },
    })
}

fn has_adjacent_pair(bound: &BoundOrder, a: Mask, b: Mask) -> bool {
    let n = bound.n();
    let perm = bound.perm();
    (0..n).any(|i| {
        let (x, y) = (perm[i], perm[(i + 1) % n]);
        (a & bit(x) != 0 && b & bit(y) != 0) || (b & bit(x) != 0 && a & bit(y) != 0)
    })
}
