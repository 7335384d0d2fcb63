//! Certificate replay: re-run the check a report records and, where the
//! certificate carries a concrete witness, validate the witness itself.

use positroids::check::{order_check, run_all_order_checks, run_order_check};
use positroids::error::{Error, Result};
use positroids::matroid::Matroid;
use positroids::order::LinearOrder;
use positroids::report::{Certificate, Verdict};
use positroids::search::find_positroid_order;

use crate::docs::ReportDocument;

/// Re-executes the recorded check and returns the reproduced verdict.
/// Witness-carrying certificates are additionally validated against the
/// embedded matroid; a witness that does not replay is an input error.
pub fn replay(report: &ReportDocument, budget: u64) -> Result<Verdict> {
    let doc = report
        .matroid
        .as_ref()
        .ok_or_else(|| Error::Input("report has no embedded matroid; cannot replay".into()))?;
    let m = doc.build()?;
    validate_witness(&m, &report.certificate)?;

    let command = report.command.split_whitespace().next().unwrap_or("");
    match command {
        "check-order" => {
            let seq = report
                .order
                .clone()
                .ok_or_else(|| Error::Input("check-order report lacks an order".into()))?;
            let ord = LinearOrder::new(seq)?;
            let method = report.method.as_deref().unwrap_or("cip");
            if method == "all" {
                let (rep, _) = run_all_order_checks(&m, &ord)?;
                Ok(rep.verdict)
            } else {
                let check = order_check(method)
                    .ok_or_else(|| Error::Input(format!("unknown method '{method}'")))?;
                Ok(run_order_check(check, &m, &ord)?.verdict)
            }
        }
        "find-order" => {
            let res = find_positroid_order(&m, budget)?;
            // a recorded order must itself validate
            if let Some(seq) = &report.order {
                let ord = LinearOrder::new(seq.clone())?;
                let check = order_check("cip").expect("registered");
                if !run_order_check(check, &m, &ord)?.holds() {
                    return Err(Error::Input(
                        "recorded order is not a positroid order".into(),
                    ));
                }
            }
            Ok(res.report.verdict)
        }
        "exmin" => {
            let rep = positroids::exmin::Verifier::new(budget).verify_excluded_minor(&m)?;
            Ok(rep.verdict)
        }
        "info" | "necklace" => Ok(Verdict::True),
        other => Err(Error::Input(format!("cannot replay command '{other}'"))),
    }
}

/// Checks that an explicit witness says what it claims about the matroid.
fn validate_witness(m: &Matroid, certificate: &Certificate) -> Result<()> {
    match certificate {
        Certificate::LoopsStripped { loops, inner } => {
            let refs: Vec<&str> = loops.iter().map(|s| s.as_str()).collect();
            let mask = m.mask_of(&refs)?;
            if mask != m.loops() {
                return Err(Error::Input(
                    "recorded loops do not match the matroid".into(),
                ));
            }
            let stripped = m.delete(mask);
            validate_witness(&stripped, inner)
        }
        Certificate::Order { order } => {
            let ord = LinearOrder::new(order.clone())?;
            let check = order_check("cip").expect("registered");
            if !run_order_check(check, m, &ord)?.holds() {
                return Err(Error::Input(
                    "exhibited order is not a positroid order".into(),
                ));
            }
            Ok(())
        }
        Certificate::SortingFailure { b1, b2, odd, even } => {
            let to_mask = |ls: &Vec<String>| {
                let refs: Vec<&str> = ls.iter().map(|s| s.as_str()).collect();
                m.mask_of(&refs)
            };
            let (b1, b2, odd, even) = (to_mask(b1)?, to_mask(b2)?, to_mask(odd)?, to_mask(even)?);
            if !m.is_basis(b1) || !m.is_basis(b2) {
                return Err(Error::Input("sorting witness pair are not bases".into()));
            }
            if m.is_basis(odd) && m.is_basis(even) {
                return Err(Error::Input("sorting witness halves are both bases".into()));
            }
            Ok(())
        }
        Certificate::FlatComponent { flat, component } => {
            let refs: Vec<&str> = flat.iter().map(|s| s.as_str()).collect();
            let f = m.mask_of(&refs)?;
            if !m.is_flat(f) || !m.is_connected_set(f) {
                return Err(Error::Input("witness flat is not a connected flat".into()));
            }
            let comp_refs: Vec<&str> = component.iter().map(|s| s.as_str()).collect();
            let k = m.mask_of(&comp_refs)?;
            if !m.contraction_components(f).contains(&k) {
                return Err(Error::Input(
                    "witness component is not a contraction component".into(),
                ));
            }
            Ok(())
        }
        Certificate::ForbiddenMinor {
            deleted,
            contracted,
            circuit,
            cocircuit,
        } => {
            let to_mask = |ls: &Vec<String>| {
                let refs: Vec<&str> = ls.iter().map(|s| s.as_str()).collect();
                m.mask_of(&refs)
            };
            let (d, c) = (to_mask(deleted)?, to_mask(contracted)?);
            let minor = m.minor(d, c)?;
            let circ_refs: Vec<&str> = circuit.iter().map(|s| s.as_str()).collect();
            let circ = minor.mask_of(&circ_refs)?;
            let cocirc_refs: Vec<&str> = cocircuit.iter().map(|s| s.as_str()).collect();
            let cocirc = minor.mask_of(&cocirc_refs)?;
            let ok = minor.rank() == 2
                && minor.r(circ) == 1
                && minor.circuits().contains(&circ)
                && minor.cocircuits().contains(&cocirc);
            if !ok {
                return Err(Error::Input(
                    "forbidden-minor witness is not a 2-circuit plus 2-cocircuit".into(),
                ));
            }
            Ok(())
        }
        Certificate::NecklaceMismatch {
            set,
            basis_of_matroid,
        } => {
            let refs: Vec<&str> = set.iter().map(|s| s.as_str()).collect();
            let mask = m.mask_of(&refs)?;
            if m.is_basis(mask) != *basis_of_matroid {
                return Err(Error::Input(
                    "necklace witness set recorded on the wrong side".into(),
                ));
            }
            Ok(())
        }
        Certificate::FlatNotInterval { flat } => {
            let refs: Vec<&str> = flat.iter().map(|s| s.as_str()).collect();
            let f = m.mask_of(&refs)?;
            if !m.is_flat(f) {
                return Err(Error::Input("witness is not a flat".into()));
            }
            Ok(())
        }
        Certificate::CrossingBlocks { block1, block2 } => {
            let r1: Vec<&str> = block1.iter().map(|s| s.as_str()).collect();
            let r2: Vec<&str> = block2.iter().map(|s| s.as_str()).collect();
            let (b1, b2) = (m.mask_of(&r1)?, m.mask_of(&r2)?);
            let blocks = m.components();
            if !blocks.blocks().contains(&b1) || !blocks.blocks().contains(&b2) {
                return Err(Error::Input(
                    "crossing witness blocks are not components".into(),
                ));
            }
            Ok(())
        }
        Certificate::Unsatisfiable { constraints } => {
            for flat in constraints {
                let refs: Vec<&str> = flat.iter().map(|s| s.as_str()).collect();
                // constraints live inside one component of the matroid;
                // resolve and check they are connected flats with connected
                // contraction there
                let mask = m.mask_of(&refs)?;
                let block = m
                    .components()
                    .blocks()
                    .iter()
                    .copied()
                    .find(|&b| mask & !b == 0)
                    .ok_or_else(|| Error::Input("constraint straddles components".into()))?;
                let comp = m.restrict(block);
                let comp_refs: Vec<&str> = refs.clone();
                let f = comp.mask_of(&comp_refs)?;
                if !comp.is_flat(f)
                    || !comp.is_connected_set(f)
                    || comp.contraction_components(f).len() != 1
                {
                    return Err(Error::Input(
                        "unsatisfiability constraint is not a connected flat with connected contraction".into(),
                    ));
                }
            }
            Ok(())
        }
        Certificate::CyclicSetSplit { cyclic_set, .. } => {
            let refs: Vec<&str> = cyclic_set.iter().map(|s| s.as_str()).collect();
            let a = m.mask_of(&refs)?;
            if !m.is_cyclic(a) {
                return Err(Error::Input("witness set is not cyclic".into()));
            }
            Ok(())
        }
        Certificate::CrossingFlag { flats } => {
            for flat in flats {
                let refs: Vec<&str> = flat.iter().map(|s| s.as_str()).collect();
                let f = m.mask_of(&refs)?;
                if f != m.ground() && !m.is_flat(f) {
                    return Err(Error::Input("flag member is not a flat".into()));
                }
            }
            Ok(())
        }
        Certificate::None | Certificate::BudgetExhausted { .. } => Ok(()),
    }
}
