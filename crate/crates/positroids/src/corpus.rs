//! Deterministic random matroids, orders, and bonding instances for
//! property batches. A splitmix64 generator keeps frozen seeds
//! reproducible everywhere; the matroid sampler mixes catalogued
//! constructions with rejection-sampled cyclic-flat lattices and random
//! construction pipelines (duals, minors, truncations, extensions,
//! connections).

use crate::construct::{
    free_extension, from_cyclic_flats, nested, parallel_connection, parallel_extension,
    principal_extension, series_extension, transversal, truncate, uniform, whirl,
    CyclicFlatsPresentation, TransversalPresentation,
};
use crate::mask::{bit, bits, count, full, Mask};
use crate::matroid::Matroid;
use crate::order::LinearOrder;

/// splitmix64: deterministic, seedable, platform-independent.
#[derive(Debug, Clone)]
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Rng {
        Rng(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in 0..n (n > 0).
    pub fn below(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }

    pub fn range(&mut self, lo: usize, hi_inclusive: usize) -> usize {
        lo + self.below(hi_inclusive - lo + 1)
    }

    pub fn chance(&mut self, num: u32, den: u32) -> bool {
        (self.next_u64() % den as u64) < num as u64
    }

    /// A random nonempty submask of `m`.
    pub fn submask(&mut self, m: Mask) -> Mask {
        let elems: Vec<usize> = bits(m).collect();
        if elems.is_empty() {
            return 0;
        }
        loop {
            let mut out = 0;
            for &e in &elems {
                if self.chance(1, 2) {
                    out |= bit(e);
                }
            }
            if out != 0 {
                return out;
            }
        }
    }

    pub fn shuffle<T>(&mut self, xs: &mut [T]) {
        for i in (1..xs.len()).rev() {
            let j = self.below(i + 1);
            xs.swap(i, j);
        }
    }
}

/// A uniformly random linear order on the matroid's ground set.
pub fn random_order(rng: &mut Rng, m: &Matroid) -> LinearOrder {
    let mut seq: Vec<String> = m.labels().to_vec();
    rng.shuffle(&mut seq);
    LinearOrder::new(seq).expect("labels are distinct")
}

fn fresh_label(m: &Matroid, rng: &mut Rng) -> String {
    loop {
        let cand = format!("x{}", rng.below(1000));
        if m.index_of(&cand).is_none() {
            return cand;
        }
    }
}

/// A random matroid from a rejection-sampled cyclic-flat lattice: a few
/// random proper flats with random admissible ranks, retried until the
/// axioms hold. Falls back to a uniform matroid when sampling keeps
/// failing.
pub fn random_cyclic_flats_matroid(rng: &mut Rng, n: usize) -> Matroid {
    let n = n.max(2);
    let ground = full(n);
    'attempt: for _ in 0..200 {
        let full_rank = rng.range(1, n - 1);
        let proper = rng.below(4);
        let mut flats: Vec<(Mask, usize)> = vec![(0, 0), (ground, full_rank)];
        for _ in 0..proper {
            let size = rng.range(2, n - 1);
            let mut f: Mask = 0;
            while count(f) < size {
                f |= bit(rng.below(n));
            }
            if flats.iter().any(|&(g, _)| g == f) {
                continue;
            }
            if size <= full_rank {
                // (Z2) against the top needs r(F) < full_rank + something;
                // a dependent flat needs rank below its size
                if size < 2 {
                    continue;
                }
            }
            let max_rank = (size - 1).min(full_rank - 1);
            if max_rank < 1 {
                continue;
            }
            let r = rng.range(1, max_rank);
            flats.push((f, r));
        }
        let Ok(p) = CyclicFlatsPresentation::new((1..=n).map(|i| i.to_string()).collect(), flats)
        else {
            continue 'attempt;
        };
        if let Ok(m) = from_cyclic_flats(&p) {
            return m;
        }
    }
    uniform(rng.range(1, n - 1), n).expect("fallback uniform")
}

/// A random transversal matroid: a handful of random subsets as the
/// presentation.
pub fn random_transversal(rng: &mut Rng, n: usize) -> Matroid {
    let n = n.max(1);
    let ground: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let sets: Vec<Mask> = (0..rng.range(1, n.min(5)))
        .map(|_| rng.submask(full(n)))
        .collect();
    let refs: Vec<&str> = ground.iter().map(|s| s.as_str()).collect();
    let p = TransversalPresentation::from_labels(
        &refs,
        &sets
            .iter()
            .map(|&s| bits(s).map(|i| refs[i]).collect::<Vec<&str>>())
            .collect::<Vec<Vec<&str>>>()
            .iter()
            .map(|v| v.as_slice())
            .collect::<Vec<&[&str]>>(),
    )
    .expect("well-formed presentation");
    transversal(&p)
}

/// A random nested matroid on a shuffled order.
pub fn random_nested(rng: &mut Rng, n: usize) -> Matroid {
    let n = n.max(2);
    let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let mut seq = labels.clone();
    rng.shuffle(&mut seq);
    let ord = LinearOrder::new(seq).unwrap();
    let r = rng.range(1, n - 1);
    let mut picked: Vec<&str> = Vec::new();
    let mut pool: Vec<usize> = (0..n).collect();
    rng.shuffle(&mut pool);
    for &i in pool.iter().take(r) {
        picked.push(&labels[i]);
    }
    nested(&picked, &ord).expect("nested on its own order")
}

/// A random matroid built by composing catalogued constructions and
/// random operations, with at most `n_max` elements (n_max >= 4).
pub fn random_matroid(rng: &mut Rng, n_max: usize) -> Matroid {
    let n_max = n_max.max(4);
    let base_n = rng.range(3, n_max.min(8));
    let mut m = match rng.below(5) {
        0 => uniform(rng.range(1, base_n - 1), base_n).unwrap(),
        1 => random_transversal(rng, base_n),
        2 => random_nested(rng, base_n),
        3 => random_cyclic_flats_matroid(rng, base_n),
        _ => {
            if base_n >= 6 && rng.chance(1, 2) {
                whirl(3).unwrap()
            } else {
                random_cyclic_flats_matroid(rng, base_n)
            }
        }
    };
    for _ in 0..rng.below(3) {
        m = mutate(rng, m, n_max);
    }
    if m.n() > n_max {
        let excess = m.n() - n_max;
        let mut d: Mask = 0;
        for _ in 0..excess {
            loop {
                let e = rng.below(m.n());
                if d & bit(e) == 0 {
                    d |= bit(e);
                    break;
                }
            }
        }
        m = m.delete(d);
    }
    m
}

fn mutate(rng: &mut Rng, m: Matroid, n_max: usize) -> Matroid {
    match rng.below(8) {
        0 => m.dual(),
        1 if m.rank() > 1 => truncate(&m, rng.range(1, m.rank())).unwrap(),
        2 if m.n() > 2 => {
            let e = rng.below(m.n());
            if rng.chance(1, 2) {
                m.delete(bit(e))
            } else {
                m.contract(bit(e))
            }
        }
        3 if m.n() < n_max => {
            let x = rng.submask(m.ground());
            let label = fresh_label(&m, rng);
            principal_extension(&m, x, &label).unwrap_or(m)
        }
        4 if m.n() < n_max => {
            let label = fresh_label(&m, rng);
            free_extension(&m, &label).unwrap_or(m)
        }
        5 if m.n() < n_max => {
            let f = m.labels()[rng.below(m.n())].clone();
            let label = fresh_label(&m, rng);
            if rng.chance(1, 2) {
                parallel_extension(&m, &f, &label).unwrap_or(m)
            } else {
                series_extension(&m, &f, &label).unwrap_or(m)
            }
        }
        6 if m.n() + 2 < n_max => {
            // parallel-connect a small circuit at a random element
            let p = m.labels()[rng.below(m.n())].clone();
            let extra = rng.range(2, 3.min(n_max - m.n()));
            let labels: Vec<String> = std::iter::once(p.clone())
                .chain((0..extra).map(|i| format!("{p}c{i}")))
                .collect();
            if labels.iter().skip(1).any(|l| m.index_of(l).is_some()) {
                return m;
            }
            let u = uniform(extra, extra + 1).unwrap();
            let rename: std::collections::HashMap<String, String> =
                u.labels().iter().cloned().zip(labels).collect();
            let c = crate::construct::relabel(&u, &rename).unwrap();
            parallel_connection(&m, &c, &p).unwrap_or(m)
        }
        _ => m,
    }
}

/// A random loopless matroid (loops stripped after sampling; resamples if
/// everything was a loop).
pub fn random_loopless_matroid(rng: &mut Rng, n_max: usize) -> Matroid {
    loop {
        let m = random_matroid(rng, n_max);
        let loops = m.loops();
        let stripped = if loops == 0 { m } else { m.delete(loops) };
        if stripped.n() >= 2 {
            return stripped;
        }
    }
}

/// The catalogued small matroids used by the exhaustive agreement sweeps.
pub fn catalog(n_max: usize) -> Vec<Matroid> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        for r in 0..=n {
            out.push(uniform(r, n).unwrap());
        }
    }
    if n_max >= 6 {
        out.push(whirl(3).unwrap());
        out.push(crate::exmin::gen_k4_family(&[1; 6]).unwrap());
    }
    // a couple of fixed nested/transversal shapes
    if n_max >= 5 {
        let ord = LinearOrder::from_labels(&["1", "2", "3", "4", "5"]).unwrap();
        out.push(nested(&["2", "4"], &ord).unwrap());
    }
    if n_max >= 4 {
        let p = TransversalPresentation::from_labels(
            &["1", "2", "3", "4"],
            &[&["1", "2"], &["2", "3", "4"]],
        )
        .unwrap();
        out.push(transversal(&p));
    }
    out
}

/// A bonding test instance: two matroids overlapping in T, sized to fit
/// the auxiliary construction.
pub struct BondingSample {
    pub m: Matroid,
    pub n: Matroid,
    pub t_size: usize,
}

/// Random overlapping pair with per-side size at most `side_max` and
/// |T| <= t_max, respecting the 16-element bound of the auxiliary
/// matroid. No structural hypotheses are imposed.
pub fn random_bonding_pair(rng: &mut Rng, side_max: usize, t_max: usize) -> BondingSample {
    loop {
        let k = rng.range(1, t_max);
        // union + 2k <= 16 and sides <= side_max
        let side_cap = side_max.min(16 - 2 * k); // each side at most the union bound
        if side_cap < k + 1 {
            continue;
        }
        let m_n = rng.range(k + 1, side_cap);
        let n_n = rng.range(k + 1, side_cap);
        if m_n + n_n - k + 2 * k > 16 {
            continue;
        }
        let m0 = random_matroid(rng, m_n);
        let m = resize(rng, m0, m_n);
        let n0 = random_matroid(rng, n_n);
        let n = resize(rng, n0, n_n);
        // shared labels t1..tk; the rest disjoint
        let m = with_labels(&m, "a", k);
        let n = with_labels(&n, "b", k);
        return BondingSample { m, n, t_size: k };
    }
}

fn resize(rng: &mut Rng, mut m: Matroid, n_target: usize) -> Matroid {
    while m.n() > n_target {
        let e = rng.below(m.n());
        m = m.delete(bit(e));
    }
    while m.n() < n_target {
        let label = fresh_label(&m, rng);
        let x = rng.submask(m.ground());
        m = match principal_extension(&m, x, &label) {
            Ok(ext) => ext,
            Err(_) => break,
        };
    }
    m
}

/// Renames the first k labels to the shared names t1..tk and the rest to
/// prefixed fresh names.
fn with_labels(m: &Matroid, prefix: &str, k: usize) -> Matroid {
    let mut rename = std::collections::HashMap::new();
    for (i, l) in m.labels().iter().enumerate() {
        let new = if i < k {
            format!("t{}", i + 1)
        } else {
            format!("{prefix}{}", i + 1 - k)
        };
        rename.insert(l.clone(), new);
    }
    crate::construct::relabel(m, &rename).expect("fresh names are distinct")
}
