//! Immutable matroids over small ground sets, stored by their basis family.
//!
//! Every query is computed from the bases. Subsets are bitmasks over the
//! internal element indices; the index order is the storage order and
//! carries no mathematical meaning. A lazily built table of ranks of all
//! 2^n subsets backs the rank, closure, and flat machinery.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::mask::{self, bit, bits, count, full, Mask, MAX_ELEMENTS};

/// A single ground-set element: an opaque label plus its storage index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Element {
    pub label: String,
    pub index: usize,
}

/// Pairwise-disjoint nonempty blocks covering a stated ground mask.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    blocks: Vec<Mask>,
}

impl Partition {
    pub fn new(mut blocks: Vec<Mask>) -> Result<Partition> {
        let mut seen: Mask = 0;
        for &b in &blocks {
            if b == 0 {
                return Err(Error::Input("partition block is empty".into()));
            }
            if seen & b != 0 {
                return Err(Error::Input("partition blocks overlap".into()));
            }
            seen |= b;
        }
        blocks.sort_by_key(|b| b.trailing_zeros());
        Ok(Partition { blocks })
    }

    pub fn blocks(&self) -> &[Mask] {
        &self.blocks
    }

    pub fn ground(&self) -> Mask {
        self.blocks.iter().fold(0, |a, b| a | b)
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn block_of(&self, i: usize) -> Option<usize> {
        self.blocks.iter().position(|b| mask::contains(*b, i))
    }

    /// True when `self` refines `coarser`: every block of `self` lies inside
    /// a block of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        self.blocks
            .iter()
            .all(|&b| coarser.blocks.iter().any(|&c| b & !c == 0))
    }
}

#[derive(Debug)]
struct Caches {
    rank: OnceLock<Vec<u8>>,
    circuits: OnceLock<Vec<Mask>>,
    cyclic_flats: OnceLock<Vec<(Mask, usize)>>,
    components: OnceLock<Partition>,
    // (flat F, components of M/F including singletons) for proper flats F
    // with |F| >= 2 and M|F connected
    flat_contractions: OnceLock<Vec<(Mask, Vec<Mask>)>>,
}

impl Caches {
    fn new() -> Self {
        Caches {
            rank: OnceLock::new(),
            circuits: OnceLock::new(),
            cyclic_flats: OnceLock::new(),
            components: OnceLock::new(),
            flat_contractions: OnceLock::new(),
        }
    }
}

impl Clone for Caches {
    fn clone(&self) -> Self {
        // caches are recomputable; cloning starts fresh
        Caches::new()
    }
}

/// An immutable matroid given by ground-set labels and its basis family.
#[derive(Clone)]
pub struct Matroid {
    labels: Vec<String>,
    rank: usize,
    bases: Vec<Mask>, // sorted ascending, deduplicated
    caches: Caches,
}

impl std::fmt::Debug for Matroid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Matroid(n={}, r={}, labels=[{}], {} bases)",
            self.n(),
            self.rank,
            self.labels.join(","),
            self.bases.len()
        )
    }
}

impl Matroid {
    /// Validated constructor: checks label distinctness, the ground-set size
    /// bound, equicardinality, and that the family really is a matroid
    /// basis family; validation failures name a violating basis pair and
    /// exchange element.
    pub fn new(labels: Vec<String>, mut bases: Vec<Mask>) -> Result<Matroid> {
        let n = labels.len();
        if n > MAX_ELEMENTS {
            return Err(Error::Capacity(format!(
                "ground set has {n} elements; at most {MAX_ELEMENTS} supported"
            )));
        }
        {
            let mut sorted = labels.clone();
            sorted.sort();
            sorted.dedup();
            if sorted.len() != n {
                return Err(Error::Input(
                    "ground-set labels are not pairwise distinct".into(),
                ));
            }
        }
        if bases.is_empty() {
            return Err(Error::Input("basis family is empty".into()));
        }
        let ground = full(n);
        for &b in &bases {
            if b & !ground != 0 {
                return Err(Error::Input("basis contains an out-of-range index".into()));
            }
        }
        let rank = count(bases[0]);
        if bases.iter().any(|&b| count(b) != rank) {
            return Err(Error::Input("bases do not all have the same size".into()));
        }
        bases.sort_unstable();
        bases.dedup();

        let m = Matroid {
            labels,
            rank,
            bases,
            caches: Caches::new(),
        };
        m.validate()?;
        Ok(m)
    }

    /// The family is a matroid basis family exactly when the derived rank
    /// function r(X) = max |B n X| is submodular, which the local
    /// exchange-of-two-elements condition captures in O(2^n n^2). Only on
    /// failure is the quadratic pairwise scan run, to name a witnessing
    /// basis pair.
    fn validate(&self) -> Result<()> {
        let table = self.rank_table();
        let n = self.n();
        for x in 0..(1u32 << n) {
            let rest = full(n) & !x;
            for a in bits(rest) {
                for b in bits(rest) {
                    if b <= a {
                        continue;
                    }
                    let rx = table[x as usize] as usize;
                    let ra = table[(x | bit(a)) as usize] as usize;
                    let rb = table[(x | bit(b)) as usize] as usize;
                    let rab = table[(x | bit(a) | bit(b)) as usize] as usize;
                    if ra + rb < rab + rx {
                        return Err(self.find_exchange_witness());
                    }
                }
            }
        }
        Ok(())
    }

    fn find_exchange_witness(&self) -> Error {
        match self.check_exchange() {
            Err(e) => e,
            Ok(()) => Error::Internal(
                "rank function is not submodular yet no exchange witness was found".into(),
            ),
        }
    }

    /// Constructor for basis families already known to satisfy the exchange
    /// axiom (duals, minors, direct sums, validated reconstructions).
    pub(crate) fn from_parts_unchecked(
        labels: Vec<String>,
        rank: usize,
        mut bases: Vec<Mask>,
    ) -> Matroid {
        bases.sort_unstable();
        bases.dedup();
        debug_assert!(!bases.is_empty());
        debug_assert!(bases.iter().all(|&b| count(b) == rank));
        Matroid {
            labels,
            rank,
            bases,
            caches: Caches::new(),
        }
    }

    fn check_exchange(&self) -> Result<()> {
        for &b1 in &self.bases {
            for &b2 in &self.bases {
                if b1 == b2 {
                    continue;
                }
                for a in bits(b1 & !b2) {
                    let stripped = b1 & !bit(a);
                    let found = bits(b2 & !b1)
                        .any(|b| self.bases.binary_search(&(stripped | bit(b))).is_ok());
                    if !found {
                        return Err(Error::ExchangeViolation {
                            b1: self.label_list(b1).join(","),
                            b2: self.label_list(b2).join(","),
                            a: self.labels[a].clone(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ground(&self) -> Mask {
        full(self.n())
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn bases(&self) -> &[Mask] {
        &self.bases
    }

    pub fn is_basis(&self, b: Mask) -> bool {
        self.bases.binary_search(&b).is_ok()
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        self.labels
            .iter()
            .enumerate()
            .map(|(index, label)| Element {
                label: label.clone(),
                index,
            })
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Resolves a list of labels to a mask; unknown labels are input errors.
    pub fn mask_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<Mask> {
        let mut m = 0;
        for l in labels {
            let i = self
                .index_of(l.as_ref())
                .ok_or_else(|| Error::Input(format!("unknown element label '{}'", l.as_ref())))?;
            m |= bit(i);
        }
        Ok(m)
    }

    /// The labels of a mask, in storage order.
    pub fn label_list(&self, m: Mask) -> Vec<String> {
        bits(m).map(|i| self.labels[i].clone()).collect()
    }

    fn rank_table(&self) -> &[u8] {
        self.caches.rank.get_or_init(|| {
            let n = self.n();
            let size = 1usize << n;
            // mark independent sets by walking down from the bases
            let mut independent = vec![false; size];
            let mut stack: Vec<Mask> = Vec::new();
            for &b in &self.bases {
                if !independent[b as usize] {
                    independent[b as usize] = true;
                    stack.push(b);
                }
            }
            while let Some(m) = stack.pop() {
                for e in bits(m) {
                    let child = m & !bit(e);
                    if !independent[child as usize] {
                        independent[child as usize] = true;
                        stack.push(child);
                    }
                }
            }
            let mut rank = vec![0u8; size];
            for m in 1..size {
                rank[m] = if independent[m] {
                    count(m as Mask) as u8
                } else {
                    bits(m as Mask)
                        .map(|e| rank[m & !(bit(e) as usize)])
                        .max()
                        .unwrap()
                };
            }
            rank
        })
    }

    /// Rank of a subset; the mask must lie inside the ground set.
    #[inline]
    pub fn r(&self, x: Mask) -> usize {
        debug_assert_eq!(x & !self.ground(), 0);
        self.rank_table()[x as usize] as usize
    }

    /// Checked rank, surfacing out-of-range input as an error.
    pub fn rank_of(&self, x: Mask) -> Result<usize> {
        if x & !self.ground() != 0 {
            return Err(Error::Input("subset contains an out-of-range index".into()));
        }
        Ok(self.r(x))
    }

    #[inline]
    pub fn is_independent(&self, x: Mask) -> bool {
        self.r(x) == count(x)
    }

    /// Checked independence test.
    pub fn independent(&self, x: Mask) -> Result<bool> {
        if x & !self.ground() != 0 {
            return Err(Error::Input("subset contains an out-of-range index".into()));
        }
        Ok(self.is_independent(x))
    }

    /// cl(X) = X together with every element whose addition keeps the rank.
    pub fn cl(&self, x: Mask) -> Mask {
        debug_assert_eq!(x & !self.ground(), 0);
        let rx = self.r(x);
        let mut out = x;
        for e in bits(self.ground() & !x) {
            if self.r(x | bit(e)) == rx {
                out |= bit(e);
            }
        }
        out
    }

    /// Checked closure.
    pub fn closure(&self, x: Mask) -> Result<Mask> {
        if x & !self.ground() != 0 {
            return Err(Error::Input("subset contains an out-of-range index".into()));
        }
        Ok(self.cl(x))
    }

    pub fn is_flat(&self, x: Mask) -> bool {
        self.cl(x) == x
    }

    /// A set is cyclic when its restriction has no coloops.
    pub fn is_cyclic(&self, x: Mask) -> bool {
        let rx = self.r(x);
        bits(x).all(|e| self.r(x & !bit(e)) == rx)
    }

    pub fn loops(&self) -> Mask {
        let mut m = 0;
        for e in 0..self.n() {
            if self.r(bit(e)) == 0 {
                m |= bit(e);
            }
        }
        m
    }

    /// Elements lying in every basis.
    pub fn coloops(&self) -> Mask {
        self.bases.iter().fold(self.ground(), |a, &b| a & b)
    }

    /// Dual matroid: bases are the complements of bases.
    pub fn dual(&self) -> Matroid {
        let g = self.ground();
        let bases = self.bases.iter().map(|&b| g & !b).collect();
        Matroid::from_parts_unchecked(self.labels.clone(), self.n() - self.rank, bases)
    }

    /// Deletion M\D. Indices are compressed to the surviving elements.
    pub fn delete(&self, d: Mask) -> Matroid {
        debug_assert_eq!(d & !self.ground(), 0);
        let keep = self.ground() & !d;
        let r_del = self.r(keep);
        let bases = self
            .bases
            .iter()
            .map(|&b| b & keep)
            .filter(|&b| count(b) == r_del)
            .map(|b| compress(b, keep))
            .collect();
        let labels = bits(keep).map(|i| self.labels[i].clone()).collect();
        Matroid::from_parts_unchecked(labels, r_del, bases)
    }

    /// Contraction M/C.
    pub fn contract(&self, c: Mask) -> Matroid {
        debug_assert_eq!(c & !self.ground(), 0);
        let keep = self.ground() & !c;
        let rc = self.r(c);
        let bases: Vec<Mask> = self
            .bases
            .iter()
            .filter(|&&b| count(b & c) == rc)
            .map(|&b| compress(b & keep, keep))
            .collect();
        let labels = bits(keep).map(|i| self.labels[i].clone()).collect();
        Matroid::from_parts_unchecked(labels, self.rank - rc, bases)
    }

    /// Minor M\D/C with D and C disjoint.
    pub fn minor(&self, d: Mask, c: Mask) -> Result<Matroid> {
        if (d | c) & !self.ground() != 0 {
            return Err(Error::Input(
                "minor sets contain an out-of-range index".into(),
            ));
        }
        if d & c != 0 {
            return Err(Error::Input("deletion and contraction sets overlap".into()));
        }
        let deleted = self.delete(d);
        Ok(deleted.contract(compress(c, self.ground() & !d)))
    }

    /// Restriction M|X, i.e. deletion of the complement.
    pub fn restrict(&self, x: Mask) -> Matroid {
        self.delete(self.ground() & !x)
    }

    /// Direct sum; label sets must be disjoint.
    pub fn direct_sum(&self, other: &Matroid) -> Result<Matroid> {
        if self.n() + other.n() > MAX_ELEMENTS {
            return Err(Error::Capacity(format!(
                "direct sum would have {} elements",
                self.n() + other.n()
            )));
        }
        for l in other.labels() {
            if self.index_of(l).is_some() {
                return Err(Error::Input(format!(
                    "label '{l}' appears in both summands"
                )));
            }
        }
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        let shift = self.n();
        let mut bases = Vec::with_capacity(self.bases.len() * other.bases.len());
        for &b1 in &self.bases {
            for &b2 in &other.bases {
                bases.push(b1 | (b2 << shift));
            }
        }
        Ok(Matroid::from_parts_unchecked(
            labels,
            self.rank + other.rank,
            bases,
        ))
    }

    /// All circuits (minimal dependent sets), sorted by (size, mask).
    pub fn circuits(&self) -> &[Mask] {
        self.caches.circuits.get_or_init(|| {
            let mut out = Vec::new();
            for m in 0..(1u32 << self.n()) {
                if !self.is_independent(m) && bits(m).all(|e| self.is_independent(m & !bit(e))) {
                    out.push(m);
                }
            }
            out.sort_by_key(|&m| (count(m), m));
            out
        })
    }

    pub fn cocircuits(&self) -> Vec<Mask> {
        self.dual().circuits().to_vec()
    }

    /// All cyclic flats with their ranks, sorted by (size, mask).
    pub fn cyclic_flats(&self) -> &[(Mask, usize)] {
        self.caches.cyclic_flats.get_or_init(|| {
            let mut out = Vec::new();
            for m in 0..(1u32 << self.n()) {
                if self.is_flat(m) && self.is_cyclic(m) {
                    out.push((m, self.r(m)));
                }
            }
            out.sort_by_key(|&(m, _)| (count(m), m));
            out
        })
    }

    /// All flats, sorted by (size, mask).
    pub fn flats(&self) -> Vec<Mask> {
        let mut out: Vec<Mask> = (0..(1u32 << self.n()))
            .filter(|&m| self.is_flat(m))
            .collect();
        out.sort_by_key(|&m| (count(m), m));
        out
    }

    /// Flats whose restriction is connected, sorted by (size, mask).
    /// Callers interested in the non-degenerate ones filter by size.
    pub fn connected_flats(&self) -> Vec<Mask> {
        self.flats()
            .into_iter()
            .filter(|&f| f != 0 && self.is_connected_set(f))
            .collect()
    }

    /// Connected components: the transitive closure of the same-circuit
    /// relation. Loops and coloops each form their own block; the empty
    /// matroid has no blocks.
    pub fn components(&self) -> &Partition {
        self.caches.components.get_or_init(|| {
            let n = self.n();
            let mut parent: Vec<usize> = (0..n).collect();
            fn find(parent: &mut Vec<usize>, i: usize) -> usize {
                if parent[i] != i {
                    let root = find(parent, parent[i]);
                    parent[i] = root;
                }
                parent[i]
            }
            for &c in self.circuits() {
                let mut it = bits(c);
                if let Some(first) = it.next() {
                    for e in it {
                        let (a, b) = (find(&mut parent, first), find(&mut parent, e));
                        if a != b {
                            parent[a] = b;
                        }
                    }
                }
            }
            let mut blocks: HashMap<usize, Mask> = HashMap::new();
            for i in 0..n {
                let root = find(&mut parent, i);
                *blocks.entry(root).or_insert(0) |= bit(i);
            }
            Partition::new(blocks.into_values().collect()).expect("components are disjoint")
        })
    }

    pub fn is_connected(&self) -> bool {
        self.n() >= 1 && self.components().len() == 1
    }

    /// Whether the restriction M|X is connected.
    pub fn is_connected_set(&self, x: Mask) -> bool {
        x != 0 && self.restriction_components(x).len() == 1
    }

    /// Components of the restriction M|X, as masks in this matroid's
    /// indexing. Circuits of M|X are the circuits of M inside X.
    pub fn restriction_components(&self, x: Mask) -> Vec<Mask> {
        let idx: Vec<usize> = bits(x).collect();
        let mut parent: Vec<usize> = (0..idx.len()).collect();
        fn find(parent: &mut Vec<usize>, i: usize) -> usize {
            if parent[i] != i {
                let root = find(parent, parent[i]);
                parent[i] = root;
            }
            parent[i]
        }
        let pos: HashMap<usize, usize> = idx.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        for &c in self.circuits() {
            if c & !x != 0 {
                continue;
            }
            let mut it = bits(c);
            if let Some(first) = it.next() {
                for e in it {
                    let (a, b) = (find(&mut parent, pos[&first]), find(&mut parent, pos[&e]));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        let mut blocks: HashMap<usize, Mask> = HashMap::new();
        for (k, &i) in idx.iter().enumerate() {
            let root = find(&mut parent, k);
            *blocks.entry(root).or_insert(0) |= bit(i);
        }
        let mut out: Vec<Mask> = blocks.into_values().collect();
        out.sort_by_key(|b| b.trailing_zeros());
        out
    }

    /// Components of the contraction M/C, as masks in this matroid's
    /// indexing.
    pub fn contraction_components(&self, c: Mask) -> Vec<Mask> {
        let keep = self.ground() & !c;
        let minor = self.contract(c);
        minor
            .components()
            .blocks()
            .iter()
            .map(|&b| decompress(b, keep))
            .collect()
    }

    /// Proper flats F with |F| >= 2 and M|F connected, each paired with the
    /// full component list of M/F. This is the order-independent data behind
    /// the cyclic-interval machinery, cached because order tests sweep many
    /// linear orders over one matroid.
    pub fn connected_flat_contractions(&self) -> &[(Mask, Vec<Mask>)] {
        self.caches.flat_contractions.get_or_init(|| {
            let mut out = Vec::new();
            for f in self.flats() {
                if count(f) < 2 || f == self.ground() {
                    continue;
                }
                if !self.is_connected_set(f) {
                    continue;
                }
                out.push((f, self.contraction_components(f)));
            }
            out
        })
    }

    /// Clonal classes: elements grouped by the set of cyclic flats
    /// containing them.
    pub fn clonal_classes(&self) -> Partition {
        let flats = self.cyclic_flats();
        let mut groups: HashMap<Vec<usize>, Mask> = HashMap::new();
        for e in 0..self.n() {
            let signature: Vec<usize> = flats
                .iter()
                .enumerate()
                .filter(|(_, (f, _))| mask::contains(*f, e))
                .map(|(i, _)| i)
                .collect();
            *groups.entry(signature).or_insert(0) |= bit(e);
        }
        Partition::new(groups.into_values().collect()).expect("classes are disjoint")
    }

    /// Whether X is a set of clones (all elements pairwise in the same
    /// cyclic flats). Singleton and empty sets qualify trivially.
    pub fn is_clone_set(&self, x: Mask) -> bool {
        self.clonal_classes().blocks().iter().any(|&b| x & !b == 0)
    }

    /// Reorders the elements to match `other`'s label storage order.
    pub fn reindexed_like(&self, other: &Matroid) -> Result<Matroid> {
        if self.n() != other.n() {
            return Err(Error::Input("ground sets differ in size".into()));
        }
        let mut map = vec![0usize; self.n()]; // self index -> other index
        for (i, l) in self.labels.iter().enumerate() {
            map[i] = other.index_of(l).ok_or_else(|| {
                Error::Input(format!("label '{l}' missing from other ground set"))
            })?;
        }
        let bases = self
            .bases
            .iter()
            .map(|&b| bits(b).fold(0, |acc, i| acc | bit(map[i])))
            .collect();
        Ok(Matroid::from_parts_unchecked(
            other.labels.clone(),
            self.rank,
            bases,
        ))
    }

    /// Label-aligned equality: same ground set (as a set of labels) and the
    /// same basis family once indices are aligned by label.
    pub fn equal(&self, other: &Matroid) -> bool {
        match self.reindexed_like(other) {
            Ok(m) => m.bases == other.bases,
            Err(_) => false,
        }
    }

    /// Whether some label bijection carries the bases of `self` onto those
    /// of `other`. Fingerprint pruning keeps the backtracking shallow.
    pub fn isomorphic(&self, other: &Matroid) -> bool {
        if self.n() != other.n() || self.rank != other.rank || self.bases.len() != other.bases.len()
        {
            return false;
        }
        let n = self.n();
        if n == 0 {
            return true;
        }

        let fingerprint = |m: &Matroid| -> Vec<Vec<(usize, usize, usize)>> {
            (0..m.n())
                .map(|e| {
                    let deg = m.bases.iter().filter(|&&b| mask::contains(b, e)).count();
                    let mut cyc: Vec<(usize, usize, usize)> = m
                        .cyclic_flats()
                        .iter()
                        .filter(|(f, _)| mask::contains(*f, e))
                        .map(|&(f, r)| (count(f), r, deg))
                        .collect();
                    cyc.sort();
                    cyc.push((deg, 0, 0));
                    cyc
                })
                .collect()
        };
        let fp_a = fingerprint(self);
        let fp_b = fingerprint(other);
        {
            let mut sa = fp_a.clone();
            let mut sb = fp_b.clone();
            sa.sort();
            sb.sort();
            if sa != sb {
                return false;
            }
        }

        // pair degrees: number of bases containing both elements
        let pair_deg = |m: &Matroid| -> Vec<Vec<usize>> {
            let mut d = vec![vec![0; m.n()]; m.n()];
            for &b in &m.bases {
                let elems: Vec<usize> = bits(b).collect();
                for (i, &x) in elems.iter().enumerate() {
                    for &y in &elems[i + 1..] {
                        d[x][y] += 1;
                        d[y][x] += 1;
                    }
                }
            }
            d
        };
        let pd_a = pair_deg(self);
        let pd_b = pair_deg(other);

        struct Iso<'a> {
            a: &'a Matroid,
            b: &'a Matroid,
            fp_a: Vec<Vec<(usize, usize, usize)>>,
            fp_b: Vec<Vec<(usize, usize, usize)>>,
            pd_a: Vec<Vec<usize>>,
            pd_b: Vec<Vec<usize>>,
            assign: Vec<usize>,
            used: Mask,
        }
        impl Iso<'_> {
            fn backtrack(&mut self, depth: usize) -> bool {
                let n = self.a.n();
                if depth == n {
                    return self.a.bases.iter().all(|&bs| {
                        let mapped = bits(bs).fold(0, |acc, i| acc | bit(self.assign[i]));
                        self.b.is_basis(mapped)
                    });
                }
                for cand in 0..n {
                    if mask::contains(self.used, cand) || self.fp_a[depth] != self.fp_b[cand] {
                        continue;
                    }
                    if (0..depth)
                        .any(|prev| self.pd_a[depth][prev] != self.pd_b[cand][self.assign[prev]])
                    {
                        continue;
                    }
                    self.assign[depth] = cand;
                    self.used |= bit(cand);
                    if self.backtrack(depth + 1) {
                        return true;
                    }
                    self.used &= !bit(cand);
                    self.assign[depth] = usize::MAX;
                }
                false
            }
        }
        let mut iso = Iso {
            a: self,
            b: other,
            fp_a,
            fp_b,
            pd_a,
            pd_b,
            assign: vec![usize::MAX; n],
            used: 0,
        };
        iso.backtrack(0)
    }

    /// Whether `self` is a quotient of `l` (same ground set): every flat of
    /// `self` is a flat of `l`.
    pub fn is_quotient_of(&self, l: &Matroid) -> Result<bool> {
        let aligned = self.reindexed_like(l)?;
        Ok(aligned.flats().into_iter().all(|f| l.is_flat(f)))
    }
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.equal(other)
    }
}

impl Eq for Matroid {}

/// Re-packs `m`'s bits (a submask of `keep`) into the compact indexing of
/// `keep`'s elements.
pub fn compress(m: Mask, keep: Mask) -> Mask {
    debug_assert_eq!(m & !keep, 0);
    let mut out = 0;
    for (pos, i) in bits(keep).enumerate() {
        if mask::contains(m, i) {
            out |= bit(pos);
        }
    }
    out
}

/// Inverse of `compress`: scatters compact indices back through `keep`.
pub fn decompress(m: Mask, keep: Mask) -> Mask {
    let mut out = 0;
    for (pos, i) in bits(keep).enumerate() {
        if mask::contains(m, pos) {
            out |= bit(i);
        }
    }
    out
}

/// Convenience constructor used through the crate: labels as string slices,
/// one mask per basis, validated.
pub fn matroid_from_masks(labels: &[&str], bases: &[Mask]) -> Result<Matroid> {
    Matroid::new(
        labels.iter().map(|s| s.to_string()).collect(),
        bases.to_vec(),
    )
}
