use std::collections::BTreeMap;
use std::ops::Bound;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::rational::Rational;

/// Finite multiset of rationals in `[0, 2]`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SpectrumMultiset {
    entries: BTreeMap<Rational, u64>,
}

impl SpectrumMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `mult` copies of `x`. Zero multiplicities are ignored.
    ///
    /// Panics if `x` lies outside `[0, 2]`.
    pub fn insert(&mut self, x: Rational, mult: u64) {
        assert!(
            !x.is_negative() && x <= Rational::from_integer(2),
            "spectrum value {x} outside [0, 2]"
        );
        if mult > 0 {
            *self.entries.entry(x).or_insert(0) += mult;
        }
    }

    pub fn multiplicity(&self, x: &Rational) -> u64 {
        self.entries.get(x).copied().unwrap_or(0)
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.entries.contains_key(x)
    }

    /// Number of elements counted with multiplicity.
    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    /// Number of distinct values.
    pub fn distinct(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Rational, u64)> + '_ {
        self.entries.iter().map(|(x, &m)| (x, m))
    }

    pub fn values(&self) -> impl Iterator<Item = &Rational> + '_ {
        self.entries.keys()
    }

    /// `#(S ∩ (lo, hi))`, with multiplicity.
    pub fn count_open(&self, lo: &Rational, hi: &Rational) -> u64 {
        if lo >= hi {
            return 0;
        }
        self.entries
            .range((Bound::Excluded(lo), Bound::Excluded(hi)))
            .map(|(_, &m)| m)
            .sum()
    }

    /// The sub-multiset on the open interval `(lo, hi)`.
    pub fn restrict_open(&self, lo: &Rational, hi: &Rational) -> SpectrumMultiset {
        if lo >= hi {
            return SpectrumMultiset::new();
        }
        let entries = self
            .entries
            .range((Bound::Excluded(lo), Bound::Excluded(hi)))
            .map(|(x, &m)| (x.clone(), m))
            .collect();
        SpectrumMultiset { entries }
    }

    /// `mult(x) = mult(2 - x)` for every `x` in `(0, 1) ∪ (1, 2)`.
    pub fn is_symmetric(&self) -> bool {
        let two = Rational::from_integer(2);
        let one = Rational::one();
        self.entries.iter().all(|(x, &m)| {
            x.is_zero() || *x == one || *x == two || self.multiplicity(&(&two - x)) == m
        })
    }

    /// Sorted, deduplicated values with prefix counts, for repeated interval
    /// queries.
    pub fn cumulative(&self) -> CumulativeCounts {
        let mut values = Vec::with_capacity(self.entries.len());
        let mut prefix = Vec::with_capacity(self.entries.len() + 1);
        prefix.push(0);
        let mut acc = 0;
        for (x, &m) in &self.entries {
            values.push(x.clone());
            acc += m;
            prefix.push(acc);
        }
        CumulativeCounts { values, prefix }
    }

    /// Sum of two multisets.
    pub fn union(&self, other: &SpectrumMultiset) -> SpectrumMultiset {
        let mut out = self.clone();
        for (x, m) in other.iter() {
            out.insert(x.clone(), m);
        }
        out
    }
}

impl FromIterator<Rational> for SpectrumMultiset {
    fn from_iter<I: IntoIterator<Item = Rational>>(iter: I) -> Self {
        let mut s = SpectrumMultiset::new();
        for x in iter {
            s.insert(x, 1);
        }
        s
    }
}

impl Serialize for SpectrumMultiset {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            value: &'a Rational,
            multiplicity: u64,
        }
        let mut seq = serializer.serialize_seq(Some(self.entries.len()))?;
        for (value, &multiplicity) in &self.entries {
            seq.serialize_element(&Entry { value, multiplicity })?;
        }
        seq.end()
    }
}

/// Prefix counts over a sorted spectrum.
#[derive(Debug, Clone)]
pub struct CumulativeCounts {
    values: Vec<Rational>,
    prefix: Vec<u64>,
}

impl CumulativeCounts {
    /// Elements `<= x`.
    pub fn count_le(&self, x: &Rational) -> u64 {
        self.prefix[self.values.partition_point(|v| v <= x)]
    }

    /// Elements `< x`.
    pub fn count_lt(&self, x: &Rational) -> u64 {
        self.prefix[self.values.partition_point(|v| v < x)]
    }

    pub fn count_open(&self, lo: &Rational, hi: &Rational) -> u64 {
        self.count_lt(hi).saturating_sub(self.count_le(lo))
    }

    pub fn total(&self) -> u64 {
        *self.prefix.last().unwrap_or(&0)
    }
}
