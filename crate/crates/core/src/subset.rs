//! Ground sets and bitmask subsets.
//!
//! Elements are dense indices `0..size`; labels only matter at the edges
//! (parsing and printing). A [`Subset`] is a `u32` bitmask, which caps the
//! ground set at [`MAX_GROUND`] elements.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::Error;

/// Largest ground set any family may live on.
pub const MAX_GROUND: usize = 24;

/// A subset of a ground set, one bit per element.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Subset(pub u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    /// The full set `{0, .., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Subset {
        debug_assert!(n <= 32);
        if n == 32 {
            Subset(u32::MAX)
        } else {
            Subset((1u32 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(e: usize) -> Subset {
        Subset(1 << e)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Subset {
        it.into_iter().fold(Subset::EMPTY, |s, e| s.with(e))
    }

    #[inline]
    pub fn bits(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, e: usize) -> bool {
        self.0 >> e & 1 == 1
    }

    #[inline]
    pub fn with(self, e: usize) -> Subset {
        Subset(self.0 | 1 << e)
    }

    #[inline]
    pub fn without(self, e: usize) -> Subset {
        Subset(self.0 & !(1 << e))
    }

    #[inline]
    pub fn toggle(self, e: usize) -> Subset {
        Subset(self.0 ^ 1 << e)
    }

    #[inline]
    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    #[inline]
    pub fn symmetric_difference(self, other: Subset) -> Subset {
        Subset(self.0 ^ other.0)
    }

    #[inline]
    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_disjoint(self, other: Subset) -> bool {
        self.0 & other.0 == 0
    }

    /// Complement inside a ground set of `n` elements.
    #[inline]
    pub fn complement(self, n: usize) -> Subset {
        Subset(!self.0 & Subset::full(n).0)
    }

    /// Lowest element, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Elements in increasing order.
    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    /// Packs the elements of `keep` into consecutive low bits, dropping the rest
    /// (a software `pext`). Used when a minor removes elements from the ground set.
    pub fn compress(self, keep: Subset) -> Subset {
        let mut out = 0u32;
        for (i, e) in keep.iter().enumerate() {
            if self.contains(e) {
                out |= 1 << i;
            }
        }
        Subset(out)
    }

    /// Inverse of [`Subset::compress`]: spreads low bits onto the elements of `keep`.
    pub fn expand(self, keep: Subset) -> Subset {
        let mut out = 0u32;
        for (i, e) in keep.iter().enumerate() {
            if self.contains(i) {
                out |= 1 << e;
            }
        }
        Subset(out)
    }

    /// Canonical order: by cardinality, then lexicographically on the sorted
    /// index lists. Among equal-size sets, the one holding the lowest
    /// differing element comes first.
    pub fn canonical_cmp(self, other: Subset) -> Ordering {
        match self.len().cmp(&other.len()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let low = diff & diff.wrapping_neg();
        if self.0 & low != 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }

    /// Every subset of `self`, including the empty set and `self`.
    pub fn subsets(self) -> Subsets {
        Subsets {
            of: self.0,
            next: Some(0),
        }
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Elements(u32);

impl Iterator for Elements {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

/// Submask enumeration in increasing numeric order.
pub struct Subsets {
    of: u32,
    next: Option<u32>,
}

impl Iterator for Subsets {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        let cur = self.next?;
        self.next = if cur == self.of {
            None
        } else {
            Some((cur.wrapping_sub(self.of)) & self.of)
        };
        Some(Subset(cur))
    }
}

/// A finite ground set with one external label per element.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroundSet {
    labels: Vec<String>,
}

impl GroundSet {
    pub fn new(labels: Vec<String>) -> Result<GroundSet, Error> {
        if labels.len() > MAX_GROUND {
            return Err(Error::GroundTooLarge {
                size: labels.len(),
                max: MAX_GROUND,
            });
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(GroundSet { labels })
    }

    /// Ground set labelled `1..=n`.
    pub fn numbered(n: usize) -> Result<GroundSet, Error> {
        GroundSet::new((1..=n).map(|i| i.to_string()).collect())
    }

    pub fn empty() -> GroundSet {
        GroundSet { labels: Vec::new() }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, e: usize) -> &str {
        &self.labels[e]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    #[inline]
    pub fn full(&self) -> Subset {
        Subset::full(self.len())
    }

    /// Keeps only the labels of `keep`, renumbering densely.
    pub fn restrict(&self, keep: Subset) -> GroundSet {
        GroundSet {
            labels: keep.iter().map(|e| self.labels[e].clone()).collect(),
        }
    }

    /// Resolves labels to a subset; unknown labels are reported.
    pub fn subset_of_labels<'a, I>(&self, labels: I) -> Result<Subset, Error>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let mut s = Subset::EMPTY;
        for l in labels {
            let e = self
                .index_of(l)
                .ok_or_else(|| Error::UnknownLabel(l.to_string()))?;
            s = s.with(e);
        }
        Ok(s)
    }

    /// Writes `{a,c}` using labels.
    pub fn fmt_subset(&self, s: Subset, f: &mut dyn fmt::Write) -> fmt::Result {
        f.write_char('{')?;
        for (i, e) in s.iter().enumerate() {
            if i > 0 {
                f.write_char(',')?;
            }
            f.write_str(&self.labels[e])?;
        }
        f.write_char('}')
    }

    pub fn show(&self, s: Subset) -> String {
        let mut out = String::new();
        let _ = self.fmt_subset(s, &mut out);
        out
    }

    /// Concatenation, rejecting label clashes.
    pub fn disjoint_union(&self, other: &GroundSet) -> Result<GroundSet, Error> {
        for l in &other.labels {
            if self.labels.contains(l) {
                return Err(Error::LabelClash(l.clone()));
            }
        }
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        GroundSet::new(labels)
    }
}

impl fmt::Debug for GroundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.labels.iter()).finish()
    }
}
