//! Generators for the excluded-minor families and a generic
//! excluded-minor verifier.
//!
//! Each family realizes its blocks X_1, X_2, ... as consecutive integer
//! label ranges in the listed order, so generated matroids and their
//! reports are reproducible. The verifier memoizes positroid verdicts by
//! the label-free basis encoding because single-element minors repeat
//! heavily across a sweep.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::construct::{
    free_extension, from_cyclic_flats, parallel_connection, principal_extension, series_extension,
    truncate, uniform, whirl, CyclicFlatsPresentation,
};
use crate::error::{Error, Result};
use crate::mask::{count, Mask, MAX_ELEMENTS};
use crate::matroid::Matroid;
use crate::report::{CheckReport, Verdict};
use crate::search::{find_positroid_order, DEFAULT_BUDGET};

/// Consecutive integer labels "1", "2", ... split into blocks of the given
/// sizes; returns the labels and one mask per block.
fn blocks(sizes: &[usize]) -> (Vec<String>, Vec<Mask>) {
    let total: usize = sizes.iter().sum();
    let labels: Vec<String> = (1..=total).map(|i| i.to_string()).collect();
    let mut masks = Vec::with_capacity(sizes.len());
    let mut next = 0usize;
    for &s in sizes {
        let mut m: Mask = 0;
        for i in next..next + s {
            m |= 1 << i;
        }
        masks.push(m);
        next += s;
    }
    (labels, masks)
}

fn capacity_check(total: usize) -> Result<()> {
    if total > MAX_ELEMENTS {
        return Err(Error::Capacity(format!(
            "family instance needs {total} elements; at most {MAX_ELEMENTS} supported"
        )));
    }
    Ok(())
}

/// Generalized-M(K_4) family: four pairwise-overlapping cyclic flats
/// patterned on the 3-point lines of M(K_4), realized from a cyclic-flat
/// table. All x_i = 1 gives M(K_4) itself.
pub fn gen_k4_family(x: &[usize; 6]) -> Result<Matroid> {
    if x.contains(&0) {
        return Err(Error::Parameter(
            "all block sizes x_i must be at least 1".into(),
        ));
    }
    let [x1, x2, x3, x4, x5, x6] = *x;
    if x1 + x4 != x2 + x6 {
        return Err(Error::Parameter(format!(
            "x1 + x4 = x2 + x6 violated: {} + {} != {} + {}",
            x1, x4, x2, x6
        )));
    }
    if x1 + x2 > x4 + x6 {
        return Err(Error::Parameter(format!(
            "x1 + x2 <= x4 + x6 violated: {} + {} > {} + {}",
            x1, x2, x4, x6
        )));
    }
    let r = x1 + x4 + x5;
    if x1 + x2 + x3 > r {
        return Err(Error::Parameter(format!(
            "x1 + x2 + x3 <= r violated: {} > {r}",
            x1 + x2 + x3
        )));
    }
    if r > x4 + x6 + x3 {
        return Err(Error::Parameter(format!(
            "r <= x4 + x6 + x3 violated: {r} > {}",
            x4 + x6 + x3
        )));
    }
    let total: usize = x.iter().sum();
    capacity_check(total)?;
    let (labels, bm) = blocks(x);
    let e: Mask = bm.iter().fold(0, |a, &b| a | b);
    let flats = vec![
        (0, 0),
        (bm[0] | bm[1] | bm[2], x1 + x2 + x3 - 1),
        (bm[0] | bm[3] | bm[4], r - 1),
        (bm[1] | bm[4] | bm[5], r - 1),
        (bm[2] | bm[3] | bm[5], r - 1),
        (e, r),
    ];
    from_cyclic_flats(&CyclicFlatsPresentation::new(labels, flats)?)
}

/// Variant with one cyclic flat that is neither a circuit nor a
/// hyperplane: rank table (r-1, r-1, r-1, s, r).
pub fn gen_k4_var1(a: usize, b: usize, c: usize, s: usize, r: usize) -> Result<Matroid> {
    if a == 0 || b == 0 || c == 0 {
        return Err(Error::Parameter("a, b, c must be at least 1".into()));
    }
    if !(a.max(b).max(c) < s && s < a + b + c) {
        return Err(Error::Parameter(format!(
            "condition (i) max(a,b,c) < s < a+b+c violated for s = {s}"
        )));
    }
    if !(r + a + b + c).is_multiple_of(2) {
        return Err(Error::Parameter(format!(
            "condition (ii) violated: r = {r} must have the parity of a+b+c = {}",
            a + b + c
        )));
    }
    let lower = [
        s as i64,
        a as i64 + b as i64 - c as i64,
        a as i64 + c as i64 - b as i64,
        b as i64 + c as i64 - a as i64,
    ];
    if lower.iter().any(|&v| v >= r as i64) {
        return Err(Error::Parameter(format!(
            "condition (iii) max(s, a+b-c, a+c-b, b+c-a) < r violated for r = {r}"
        )));
    }
    let x1 = (r + b - a - c) / 2;
    let x2 = (r + a - b - c) / 2;
    let x5 = (r + c - a - b) / 2;
    let sizes = [x1, x2, c, a, x5, b];
    let total: usize = sizes.iter().sum();
    capacity_check(total)?;
    let (labels, bm) = blocks(&sizes);
    let e: Mask = bm.iter().fold(0, |acc, &m| acc | m);
    let flats = vec![
        (0, 0),
        (bm[0] | bm[1] | bm[2], r - 1),
        (bm[0] | bm[3] | bm[4], r - 1),
        (bm[1] | bm[4] | bm[5], r - 1),
        (bm[2] | bm[3] | bm[5], s),
        (e, r),
    ];
    from_cyclic_flats(&CyclicFlatsPresentation::new(labels, flats)?)
}

/// Paving family: three circuit-hyperplanes through an extra point p plus
/// one dependent hyperplane of nullity 2k.
pub fn gen_paving_k(a: usize, b: usize, c: usize, k: usize) -> Result<Matroid> {
    if a == 0 || b == 0 || c == 0 || k == 0 {
        return Err(Error::Parameter("a, b, c, k must be at least 1".into()));
    }
    let sizes = [a, b + k, c, b, c + k, a + k, 1]; // X1..X6, p
    let total: usize = sizes.iter().sum();
    capacity_check(total)?;
    let r = a + b + c + k + 1;
    let (labels, bm) = blocks(&sizes);
    let p = bm[6];
    let e: Mask = bm.iter().fold(0, |acc, &m| acc | m);
    let hyperplanes = [
        bm[0] | bm[1] | bm[2] | p,
        bm[0] | bm[3] | bm[4] | p,
        bm[2] | bm[3] | bm[5] | p,
        bm[1] | bm[4] | bm[5],
    ];
    for (i, &h1) in hyperplanes.iter().enumerate() {
        for &h2 in &hyperplanes[i + 1..] {
            if count(h1 & h2) > r - 2 {
                return Err(Error::Parameter(
                    "dependent hyperplanes intersect in more than rank - 2 elements".into(),
                ));
            }
        }
    }
    let mut flats = vec![(0, 0)];
    flats.extend(hyperplanes.iter().map(|&h| (h, r - 1)));
    flats.push((e, r));
    from_cyclic_flats(&CyclicFlatsPresentation::new(labels, flats)?)
}

/// Sparse paving family with two extra points p, q and rank a+b+c+2.
pub fn gen_sparse_pq(a: usize, b: usize, c: usize) -> Result<Matroid> {
    if a == 0 || b == 0 || c == 0 {
        return Err(Error::Parameter("a, b, c must be at least 1".into()));
    }
    let sizes = [a, b + 1, c, b, c, a, 1, 1]; // X1..X6, p, q
    let total: usize = sizes.iter().sum();
    capacity_check(total)?;
    let r = a + b + c + 2;
    let (labels, bm) = blocks(&sizes);
    let (p, q) = (bm[6], bm[7]);
    let e: Mask = bm.iter().fold(0, |acc, &m| acc | m);
    let chs = [
        bm[0] | bm[1] | bm[2] | p,
        bm[0] | bm[3] | bm[4] | p | q,
        bm[2] | bm[3] | bm[5] | p | q,
        bm[1] | bm[4] | bm[5] | q,
    ];
    debug_assert!(chs.iter().all(|&h| count(h) == r));
    let mut flats = vec![(0, 0)];
    flats.extend(chs.iter().map(|&h| (h, r - 1)));
    flats.push((e, r));
    from_cyclic_flats(&CyclicFlatsPresentation::new(labels, flats)?)
}

/// Sparse paving family with four extra points p, q, s, t and rank
/// a+b+c+3.
pub fn gen_sparse_pqst(a: usize, b: usize, c: usize) -> Result<Matroid> {
    if a == 0 || b == 0 || c == 0 {
        return Err(Error::Parameter("a, b, c must be at least 1".into()));
    }
    let sizes = [a, b, c, b, c, a, 1, 1, 1, 1]; // X1..X6, p, q, s, t
    let total: usize = sizes.iter().sum();
    capacity_check(total)?;
    let r = a + b + c + 3;
    let (labels, bm) = blocks(&sizes);
    let (p, q, s, t) = (bm[6], bm[7], bm[8], bm[9]);
    let e: Mask = bm.iter().fold(0, |acc, &m| acc | m);
    let chs = [
        bm[0] | bm[1] | bm[2] | q | s | t,
        bm[0] | bm[3] | bm[4] | p | s | t,
        bm[2] | bm[3] | bm[5] | p | q | t,
        bm[1] | bm[4] | bm[5] | p | q | s,
    ];
    debug_assert!(chs.iter().all(|&h| count(h) == r));
    let mut flats = vec![(0, 0)];
    flats.extend(chs.iter().map(|&h| (h, r - 1)));
    flats.push((e, r));
    from_cyclic_flats(&CyclicFlatsPresentation::new(labels, flats)?)
}

/// Series-extended whirl, freely extended and truncated: the n-whirl's
/// elements e_1..e_2n are series-extended into classes of sizes x_i, a
/// free point f is added, and the result is truncated to rank r. The
/// parameter conditions ((i)-(iv) below) make the triangles' circuits the
/// only proper connected flats of the truncation.
pub fn gen_whirl_freeext(r: usize, n: usize, m_sizes: &[usize], x: &[usize]) -> Result<Matroid> {
    if n < 3 {
        return Err(Error::Parameter("n must be at least 3".into()));
    }
    if r < 3 {
        return Err(Error::Parameter("r must be at least 3".into()));
    }
    if m_sizes.len() != n || x.len() != 2 * n {
        return Err(Error::Parameter(format!(
            "expected {n} circuit sizes and {} class sizes",
            2 * n
        )));
    }
    if x.contains(&0) {
        return Err(Error::Parameter("all x_i must be at least 1".into()));
    }
    // (i)
    for (i, &mi) in m_sizes.iter().enumerate() {
        if mi < 3 || mi > r {
            return Err(Error::Parameter(format!(
                "condition (i) violated at i = {}: need 3 <= m_i <= r, got {mi}",
                i + 1
            )));
        }
    }
    // (ii)
    if n == 3 {
        if m_sizes.iter().any(|&mi| mi != r) {
            return Err(Error::Parameter(
                "condition (ii) violated: for n = 3 all m_i must equal r".into(),
            ));
        }
    } else {
        let at_r: Vec<usize> = (0..n).filter(|&i| m_sizes[i] == r).collect();
        let ok = at_r.iter().any(|&i| {
            at_r.iter()
                .any(|&j| i != j && (i + 1) % n != j && (j + 1) % n != i)
        });
        if !ok {
            return Err(Error::Parameter(
                "condition (ii) violated: need two non-cyclically-consecutive i, j with m_i = m_j = r".into(),
            ));
        }
    }
    // (iii)
    for i in 0..n {
        let sum = x[2 * i] + x[(2 * i + 1) % (2 * n)] + x[(2 * i + 2) % (2 * n)];
        if sum != m_sizes[i] {
            return Err(Error::Parameter(format!(
                "condition (iii) violated at i = {}: x_{} + x_{} + x_{} = {sum} != m_i = {}",
                i + 1,
                2 * i + 1,
                2 * i + 2,
                (2 * i + 2) % (2 * n) + 1,
                m_sizes[i]
            )));
        }
    }
    // (iv)
    for i in 0..n {
        let xo = x[(2 * i + 2) % (2 * n)]; // x_{2i+1} in 1-based terms
        let bound = m_sizes[i] + m_sizes[(i + 1) % n];
        if bound < r + 2 || xo > bound - r - 2 {
            return Err(Error::Parameter(format!(
                "condition (iv) violated at i = {}: x_{} = {xo} > m_i + m_(i+1) - r - 2",
                i + 1,
                (2 * i + 2) % (2 * n) + 1
            )));
        }
    }
    let total: usize = x.iter().sum::<usize>() + 1;
    capacity_check(total)?;

    let mut matroid = whirl(n)?;
    for (i, &xi) in x.iter().enumerate() {
        let base = (i + 1).to_string(); // e_i carries label "i"
        for copy in 0..xi.saturating_sub(1) {
            let fresh = format!("{base}{}", (b'a' + copy as u8) as char);
            matroid = series_extension(&matroid, &base, &fresh)?;
        }
    }
    if matroid.rank() < r {
        return Err(Error::Parameter(format!(
            "the series-extended whirl has rank {} < r = {r}",
            matroid.rank()
        )));
    }
    let extended = free_extension(&matroid, "f")?;
    truncate(&extended, r)
}

/// Whirl-like variant: two r-circuits glued at a point, truncated, with
/// two extra points placed on cross lines.
pub fn gen_whirl_variant(r: usize) -> Result<Matroid> {
    if r < 3 {
        return Err(Error::Parameter("r must be at least 3".into()));
    }
    capacity_check(2 * (r - 1) + 3)?;
    let circuit = |prefix: &str| -> Result<Matroid> {
        // an r-circuit: U_{r-1, r} on e, prefix1..prefix(r-1)
        let labels: Vec<String> = std::iter::once("e".to_string())
            .chain((1..r).map(|i| format!("{prefix}{i}")))
            .collect();
        let refs: Vec<&str> = labels.iter().map(|s| s.as_str()).collect();
        let u = uniform(r - 1, r)?;
        let rename: HashMap<String, String> = u
            .labels()
            .iter()
            .cloned()
            .zip(refs.iter().map(|s| s.to_string()))
            .collect();
        crate::construct::relabel(&u, &rename)
    };
    let a = circuit("a")?;
    let b = circuit("b")?;
    let joined = parallel_connection(&a, &b, "e")?;
    let truncated = truncate(&joined, r)?;
    let line1 = truncated.mask_of(&["a1", "b1"])?;
    let with_p1 = principal_extension(&truncated, line1, "p1")?;
    let line2 = with_p1.mask_of(&["a2", "b2"])?;
    principal_extension(&with_p1, line2, "p2")
}

/// The two closing families: parallel connections of circuits at a common
/// base point (variant 1) or onto a 3-point line at distinct base points
/// (variant 2), truncated to rank n.
pub fn gen_closing_family(n: usize, k: usize, variant: u8) -> Result<Matroid> {
    if k < 3 || n < k {
        return Err(Error::Parameter(format!(
            "need n >= k >= 3, got n = {n}, k = {k}"
        )));
    }
    let circuit = |size: usize, prefix: &str, base: &str| -> Result<Matroid> {
        let labels: Vec<String> = std::iter::once(base.to_string())
            .chain((1..size).map(|i| format!("{prefix}{i}")))
            .collect();
        let u = uniform(size - 1, size)?;
        let rename: HashMap<String, String> = u.labels().iter().cloned().zip(labels).collect();
        crate::construct::relabel(&u, &rename)
    };
    match variant {
        1 => {
            capacity_check(2 * n + k - 2)?;
            let c1 = circuit(n, "a", "p")?;
            let c2 = circuit(n, "b", "p")?;
            let c3 = circuit(k, "c", "p")?;
            let joined = parallel_connection(&parallel_connection(&c1, &c2, "p")?, &c3, "p")?;
            truncate(&joined, n)
        }
        2 => {
            capacity_check(2 * n + k)?;
            let line = crate::construct::from_bases(
                &["p1", "p2", "p3"],
                &[&["p1", "p2"], &["p1", "p3"], &["p2", "p3"]],
            )?;
            let c1 = circuit(n, "a", "p1")?;
            let c2 = circuit(n, "b", "p2")?;
            let c3 = circuit(k, "c", "p3")?;
            let step1 = parallel_connection(&line, &c1, "p1")?;
            let step2 = parallel_connection(&step1, &c2, "p2")?;
            let step3 = parallel_connection(&step2, &c3, "p3")?;
            truncate(&step3, n)
        }
        v => Err(Error::Parameter(format!("unknown variant {v}; use 1 or 2"))),
    }
}

/// Every valid generalized-M(K_4) parameter vector with total size at most
/// `max_total`, in lexicographic order.
pub fn k4_parameter_grid(max_total: usize) -> Vec<[usize; 6]> {
    let mut out = Vec::new();
    let cap = max_total.saturating_sub(5);
    for x1 in 1..=cap {
        for x2 in 1..=cap {
            for x3 in 1..=cap {
                for x4 in 1..=cap {
                    for x5 in 1..=cap {
                        for x6 in 1..=cap {
                            let x = [x1, x2, x3, x4, x5, x6];
                            if x.iter().sum::<usize>() > max_total {
                                continue;
                            }
                            let r = x1 + x4 + x5;
                            if x1 + x4 == x2 + x6
                                && x1 + x2 <= x4 + x6
                                && x1 + x2 + x3 <= r
                                && r <= x4 + x6 + x3
                            {
                                out.push(x);
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// The lexicographically least valid parameter tuple for the var1 family.
pub fn k4_var1_minimal() -> (usize, usize, usize, usize, usize) {
    for a in 1..=3 {
        for b in 1..=3 {
            for c in 1..=3 {
                for s in 1..=6 {
                    for r in 1..=8 {
                        if gen_k4_var1(a, b, c, s, r).is_ok() {
                            return (a, b, c, s, r);
                        }
                    }
                }
            }
        }
    }
    unreachable!("small parameters always contain a feasible tuple")
}

/// One single-element minor check within an excluded-minor report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MinorCheck {
    pub element: String,
    pub operation: String, // "delete" or "contract"
    pub verdict: Verdict,
    pub order: Option<Vec<String>>,
}

/// Excluded-minor verdict: the matroid is not a positroid while every
/// single-element deletion and contraction is one (which suffices, the
/// class being minor-closed).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExminReport {
    pub verdict: Verdict,
    pub base: CheckReport,
    pub minors: Vec<MinorCheck>,
}

/// Memo key: (n, rank, sorted basis masks) - independent of labels.
type BasisKey = (usize, usize, Vec<Mask>);
/// Memo value: verdict plus the found order as an index permutation.
type CachedSearch = (Verdict, Option<Vec<usize>>);

/// Positroid verdicts memoized by the label-free basis encoding; the
/// cached search result is re-labelled per query.
pub struct Verifier {
    budget: u64,
    memo: HashMap<BasisKey, CachedSearch>,
}

impl Default for Verifier {
    fn default() -> Self {
        Verifier::new(DEFAULT_BUDGET)
    }
}

impl Verifier {
    pub fn new(budget: u64) -> Verifier {
        Verifier {
            budget,
            memo: HashMap::new(),
        }
    }

    /// Memoized positroid verdict with the found order as an index
    /// permutation (positions of element indices).
    fn positroid_verdict(&mut self, m: &Matroid) -> Result<CachedSearch> {
        let key = (m.n(), m.rank(), m.bases().to_vec());
        if let Some(hit) = self.memo.get(&key) {
            return Ok(hit.clone());
        }
        let res = find_positroid_order(m, self.budget)?;
        let perm = res.order.as_ref().map(|ord| {
            ord.seq()
                .iter()
                .map(|l| m.index_of(l).expect("order label"))
                .collect::<Vec<usize>>()
        });
        let value = (res.report.verdict, perm);
        self.memo.insert(key, value.clone());
        Ok(value)
    }

    pub fn is_positroid(&mut self, m: &Matroid) -> Result<Verdict> {
        Ok(self.positroid_verdict(m)?.0)
    }

    /// Full excluded-minor check with per-element evidence.
    pub fn verify_excluded_minor(&mut self, m: &Matroid) -> Result<ExminReport> {
        let base = find_positroid_order(m, self.budget)?.report;
        let mut minors = Vec::with_capacity(2 * m.n());
        let mut verdict = match base.verdict {
            Verdict::True => Verdict::False, // it IS a positroid: not an excluded minor
            Verdict::False => Verdict::True, // provisional
            Verdict::Undetermined => Verdict::Undetermined,
        };
        for e in 0..m.n() {
            let label = m.labels()[e].to_string();
            for (op, minor) in [
                ("delete", m.delete(1 << e)),
                ("contract", m.contract(1 << e)),
            ] {
                let (v, perm) = self.positroid_verdict(&minor)?;
                let order = perm.map(|p| p.iter().map(|&i| minor.labels()[i].clone()).collect());
                match v {
                    Verdict::True => {}
                    Verdict::False => verdict = Verdict::False,
                    Verdict::Undetermined => {
                        if verdict == Verdict::True {
                            verdict = Verdict::Undetermined;
                        }
                    }
                }
                minors.push(MinorCheck {
                    element: label.clone(),
                    operation: op.to_string(),
                    verdict: v,
                    order,
                });
            }
        }
        Ok(ExminReport {
            verdict,
            base,
            minors,
        })
    }
}

/// Convenience wrapper running a one-off excluded-minor verification.
pub fn verify_excluded_minor(m: &Matroid) -> Result<ExminReport> {
    Verifier::default().verify_excluded_minor(m)
}

/// Pretty name -> generator dispatch used by the CLI and the sweeps.
pub fn generate_family(id: &str, params: &[usize]) -> Result<Matroid> {
    match id {
        "genK4" => {
            let x: [usize; 6] = params
                .try_into()
                .map_err(|_| Error::Parameter("genK4 takes six parameters x1..x6".into()))?;
            gen_k4_family(&x)
        }
        "genK4var1" => match params {
            [a, b, c, s, r] => gen_k4_var1(*a, *b, *c, *s, *r),
            _ => Err(Error::Parameter(
                "genK4var1 takes five parameters a,b,c,s,r".into(),
            )),
        },
        "paving" => match params {
            [a, b, c, k] => gen_paving_k(*a, *b, *c, *k),
            _ => Err(Error::Parameter(
                "paving takes four parameters a,b,c,k".into(),
            )),
        },
        "sparse-pq" => match params {
            [a, b, c] => gen_sparse_pq(*a, *b, *c),
            _ => Err(Error::Parameter(
                "sparse-pq takes three parameters a,b,c".into(),
            )),
        },
        "sparse-pqst" => match params {
            [a, b, c] => gen_sparse_pqst(*a, *b, *c),
            _ => Err(Error::Parameter(
                "sparse-pqst takes three parameters a,b,c".into(),
            )),
        },
        "whirl-freeext" => {
            if params.len() < 2 {
                return Err(Error::Parameter(
                    "whirl-freeext takes r, n, m_1..m_n, x_1..x_2n".into(),
                ));
            }
            let (r, n) = (params[0], params[1]);
            if params.len() != 2 + n + 2 * n {
                return Err(Error::Parameter(format!(
                    "whirl-freeext with n = {n} takes {} parameters",
                    2 + 3 * n
                )));
            }
            gen_whirl_freeext(r, n, &params[2..2 + n], &params[2 + n..])
        }
        "whirl-variant" => match params {
            [r] => gen_whirl_variant(*r),
            _ => Err(Error::Parameter(
                "whirl-variant takes one parameter r".into(),
            )),
        },
        "closing1" => match params {
            [n, k] => gen_closing_family(*n, *k, 1),
            _ => Err(Error::Parameter("closing1 takes two parameters n,k".into())),
        },
        "closing2" => match params {
            [n, k] => gen_closing_family(*n, *k, 2),
            _ => Err(Error::Parameter("closing2 takes two parameters n,k".into())),
        },
        other => Err(Error::Parameter(format!("unknown family '{other}'"))),
    }
}

/// Parameter points for a bounded sweep of a family: every valid vector
/// whose generated ground set has at most `max_total` elements.
pub fn sweep_parameters(id: &str, max_total: usize) -> Result<Vec<Vec<usize>>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    match id {
        "genK4" => {
            for x in k4_parameter_grid(max_total) {
                out.push(x.to_vec());
            }
        }
        "genK4var1" => {
            for a in 1..=max_total {
                for b in 1..=max_total {
                    for c in 1..=max_total {
                        for s in 1..=max_total {
                            for r in 1..=max_total {
                                if let Ok(m) = gen_k4_var1(a, b, c, s, r) {
                                    if m.n() <= max_total {
                                        out.push(vec![a, b, c, s, r]);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        "paving" => {
            for a in 1..=max_total {
                for b in 1..=max_total {
                    for c in 1..=max_total {
                        for k in 1..=max_total {
                            if 2 * (a + b + c) + 3 * k < max_total {
                                out.push(vec![a, b, c, k]);
                            }
                        }
                    }
                }
            }
        }
        "sparse-pq" => {
            for a in 1..=max_total {
                for b in 1..=max_total {
                    for c in 1..=max_total {
                        if 2 * (a + b + c) + 3 <= max_total {
                            out.push(vec![a, b, c]);
                        }
                    }
                }
            }
        }
        "sparse-pqst" => {
            for a in 1..=max_total {
                for b in 1..=max_total {
                    for c in 1..=max_total {
                        if 2 * (a + b + c) + 4 <= max_total {
                            out.push(vec![a, b, c]);
                        }
                    }
                }
            }
        }
        "whirl-variant" => {
            for r in 3..=max_total {
                if 2 * (r - 1) + 3 <= max_total {
                    out.push(vec![r]);
                }
            }
        }
        "whirl-freeext" => {
            // minimal instances: all classes singletons, all m_i = r
            for n in 3..=4usize {
                let r = 3;
                if 2 * n < max_total {
                    let mut p = vec![r, n];
                    p.extend(std::iter::repeat_n(r, n));
                    p.extend(std::iter::repeat_n(1, 2 * n));
                    if gen_whirl_freeext(r, n, &p[2..2 + n], &p[2 + n..]).is_ok() {
                        out.push(p);
                    }
                }
            }
        }
        "closing1" | "closing2" => {
            let overhead = if id == "closing1" { 0 } else { 2 };
            for n in 3..=max_total {
                for k in 3..=n {
                    if 2 * n + k - 2 + overhead <= max_total {
                        out.push(vec![n, k]);
                    }
                }
            }
        }
        other => return Err(Error::Parameter(format!("unknown family '{other}'"))),
    }
    Ok(out)
}

/// The family identifiers `generate_family` understands.
pub fn family_names() -> &'static [&'static str] {
    &[
        "genK4",
        "genK4var1",
        "paving",
        "sparse-pq",
        "sparse-pqst",
        "whirl-freeext",
        "whirl-variant",
        "closing1",
        "closing2",
    ]
}

/// Dedupe a batch of matroids up to isomorphism, keeping first
/// occurrences; used by sweep drivers.
pub fn dedupe_isomorphic(batch: Vec<Matroid>) -> Vec<Matroid> {
    let mut kept: Vec<Matroid> = Vec::new();
    for m in batch {
        if !kept.iter().any(|k| k.isomorphic(&m)) {
            kept.push(m);
        }
    }
    kept
}
