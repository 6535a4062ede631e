//! Finite labelled carriers and bitset subsets.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::Error;

#[derive(Debug)]
struct CarrierInner {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

/// A finite ordered set of distinct element labels. Cheap to clone; the
/// label ordering fixes row/column indices of every relation over it.
#[derive(Clone, Debug)]
pub struct Carrier {
    inner: Arc<CarrierInner>,
}

impl Carrier {
    pub fn new<I, S>(labels: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(Carrier { inner: Arc::new(CarrierInner { labels, index }) })
    }

    /// The empty carrier (allowed: needed for `sup ∅` / `inf ∅` edge cases).
    pub fn empty() -> Self {
        Carrier::new(Vec::<String>::new()).unwrap()
    }

    pub fn len(&self) -> usize {
        self.inner.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inner.labels.is_empty()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.inner.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.inner.labels
    }

    pub fn index_of(&self, label: &str) -> Result<usize, Error> {
        self.inner
            .index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> {
        0..self.len()
    }

    /// All subsets, the empty set first.
    pub fn powerset(&self) -> impl Iterator<Item = Subset> {
        debug_assert!(self.len() <= Subset::MAX_BITS);
        (0u64..(1u64 << self.len())).map(Subset::from_bits)
    }

    pub fn full_subset(&self) -> Subset {
        Subset::full(self.len())
    }
}

impl PartialEq for Carrier {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.labels == other.inner.labels
    }
}

impl Eq for Carrier {}

impl fmt::Display for Carrier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.inner.labels.join(", "))
    }
}

/// A subset of a carrier, stored as a bitmask over the label ordering.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset {
    bits: u64,
}

impl Subset {
    pub const MAX_BITS: usize = 60;

    pub fn empty() -> Self {
        Subset { bits: 0 }
    }

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= Self::MAX_BITS);
        if n == 0 {
            Subset::empty()
        } else {
            Subset { bits: (1u64 << n) - 1 }
        }
    }

    pub fn from_bits(bits: u64) -> Self {
        Subset { bits }
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn singleton(i: usize) -> Self {
        Subset { bits: 1u64 << i }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        let mut bits = 0u64;
        for i in indices {
            bits |= 1u64 << i;
        }
        Subset { bits }
    }

    pub fn from_labels(carrier: &Carrier, labels: &[String]) -> Result<Self, Error> {
        let mut s = Subset::empty();
        for l in labels {
            s = s.with(carrier.index_of(l)?);
        }
        Ok(s)
    }

    pub fn contains(&self, i: usize) -> bool {
        self.bits & (1u64 << i) != 0
    }

    pub fn with(&self, i: usize) -> Self {
        Subset { bits: self.bits | (1u64 << i) }
    }

    pub fn without(&self, i: usize) -> Self {
        Subset { bits: self.bits & !(1u64 << i) }
    }

    pub fn union(&self, other: &Subset) -> Self {
        Subset { bits: self.bits | other.bits }
    }

    pub fn intersection(&self, other: &Subset) -> Self {
        Subset { bits: self.bits & other.bits }
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let bits = self.bits;
        (0..Self::MAX_BITS).filter(move |i| bits & (1u64 << i) != 0)
    }

    /// All subsets of `self` (including `∅` and `self`).
    pub fn subsets(&self) -> impl Iterator<Item = Subset> {
        let mask = self.bits;
        let mut current: Option<u64> = Some(0);
        std::iter::from_fn(move || {
            let out = current?;
            current = if out == mask { None } else { Some((out.wrapping_sub(mask)) & mask) };
            Some(Subset::from_bits(out))
        })
    }

    pub fn labels(&self, carrier: &Carrier) -> Vec<String> {
        self.iter().map(|i| carrier.label(i).to_string()).collect()
    }

    pub fn display(&self, carrier: &Carrier) -> String {
        format!("{{{}}}", self.labels(carrier).join(","))
    }
}

/// A deduplicated list of subsets of one carrier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetFamily {
    pub carrier: Carrier,
    pub members: Vec<Subset>,
}

impl SubsetFamily {
    pub fn new(carrier: Carrier, mut members: Vec<Subset>) -> Self {
        members.sort();
        members.dedup();
        SubsetFamily { carrier, members }
    }

    pub fn contains(&self, s: &Subset) -> bool {
        self.members.binary_search(s).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}
