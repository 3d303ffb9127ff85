use std::collections::BTreeSet;

use serde::Serialize;

use super::ScaleSeries;

/// A finite element set `0..len` with an arbitrary binary relation.
///
/// Nothing is assumed at construction; [`verify_causal_set`] checks the
/// partial-order axioms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CausalSet {
    len: usize,
    relation: BTreeSet<(usize, usize)>,
}

impl CausalSet {
    /// Pairs naming elements `>= len` are dropped.
    pub fn new(len: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        Self {
            len,
            relation: pairs
                .into_iter()
                .filter(|&(x, y)| x < len && y < len)
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn relation(&self) -> &BTreeSet<(usize, usize)> {
        &self.relation
    }

    pub fn precedes(&self, x: usize, y: usize) -> bool {
        self.relation.contains(&(x, y))
    }
}

/// Elements are sample indices; `i < j` is related when `a_j >= a_i`.
///
/// A contraction leaves the pair across it unrelated, which the ordering-gap
/// check of [`verify_causal_set`] reports.
pub fn series_to_causet(s: &ScaleSeries) -> CausalSet {
    let a = s.a_values();
    let n = a.len();
    let mut relation = BTreeSet::new();
    for i in 0..n {
        for j in i + 1..n {
            if a[j] >= a[i] {
                relation.insert((i, j));
            }
        }
    }
    CausalSet { len: n, relation }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CausalReport {
    /// `None` when transitive; otherwise `(x, y, z)` with `x < y < z` related
    /// pairwise but `x, z` unrelated.
    pub transitivity_witness: Option<(usize, usize, usize)>,
    /// `None` when antisymmetric; otherwise distinct `(x, y)` related both ways.
    pub antisymmetry_witness: Option<(usize, usize)>,
    /// Largest interval `{y | x < y < z}` over related pairs. Always finite
    /// here; reported for completeness.
    pub max_interval: usize,
    /// First label-ordered pair `i < j` left unrelated, i.e. a break in the
    /// time ordering of a stepped series.
    pub ordering_gap: Option<(usize, usize)>,
}

impl CausalReport {
    pub fn transitive(&self) -> bool {
        self.transitivity_witness.is_none()
    }

    pub fn antisymmetric(&self) -> bool {
        self.antisymmetry_witness.is_none()
    }

    pub fn locally_finite(&self) -> bool {
        true
    }

    /// Transitive and antisymmetric (local finiteness is automatic).
    pub fn is_partial_order(&self) -> bool {
        self.transitive() && self.antisymmetric()
    }

    /// A partial order that also relates every label-ordered pair.
    pub fn is_time_ordered_chain(&self) -> bool {
        self.is_partial_order() && self.ordering_gap.is_none()
    }
}

struct BitRows {
    words: usize,
    bits: Vec<u64>,
}

impl BitRows {
    fn new(n: usize) -> Self {
        let words = n.div_ceil(64);
        Self {
            words,
            bits: vec![0; words * n],
        }
    }

    fn set(&mut self, r: usize, c: usize) {
        self.bits[r * self.words + c / 64] |= 1 << (c % 64);
    }

    fn get(&self, r: usize, c: usize) -> bool {
        self.bits[r * self.words + c / 64] & (1 << (c % 64)) != 0
    }

    fn row(&self, r: usize) -> &[u64] {
        &self.bits[r * self.words..(r + 1) * self.words]
    }
}

fn first_bit(words: impl Iterator<Item = u64>) -> Option<usize> {
    for (i, w) in words.enumerate() {
        if w != 0 {
            return Some(i * 64 + w.trailing_zeros() as usize);
        }
    }
    None
}

/// Checks the three axioms (transitivity, antisymmetry, local finiteness) and
/// the label-ordering completeness used for stepped series.
pub fn verify_causal_set(c: &CausalSet) -> CausalReport {
    let n = c.len;
    let mut succ = BitRows::new(n);
    let mut pred = BitRows::new(n);
    for &(x, y) in &c.relation {
        succ.set(x, y);
        pred.set(y, x);
    }

    let mut transitivity_witness = None;
    let mut antisymmetry_witness = None;
    let mut max_interval = 0;
    for &(x, y) in &c.relation {
        if x != y && antisymmetry_witness.is_none() && succ.get(y, x) {
            antisymmetry_witness = Some((x.min(y), x.max(y)));
        }
        if transitivity_witness.is_none() {
            // z with y < z but not x < z
            let missing = succ.row(y).iter().zip(succ.row(x)).map(|(a, b)| a & !b);
            if let Some(z) = first_bit(missing) {
                transitivity_witness = Some((x, y, z));
            }
        }
        let between: usize = succ
            .row(x)
            .iter()
            .zip(pred.row(y))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum();
        max_interval = max_interval.max(between);
    }

    let mut ordering_gap = None;
    'outer: for i in 0..n {
        for j in i + 1..n {
            if !succ.get(i, j) {
                ordering_gap = Some((i, j));
                break 'outer;
            }
        }
    }

    CausalReport {
        transitivity_witness,
        antisymmetry_witness,
        max_interval,
        ordering_gap,
    }
}
