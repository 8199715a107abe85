//! Set systems: a ground set plus a duplicate-free family of subsets.
//!
//! The family is always kept in canonical order (cardinality, then
//! lexicographic on element indices), so structural equality is equality of
//! the member vectors. Ground sets of up to [`DENSE_LIMIT`] elements also
//! carry a characteristic vector over the powerset for O(1) membership.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::hash::{Hash, Hasher};

use crate::error::Error;
use crate::subset::{GroundSet, Subset};

pub const DENSE_LIMIT: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_even(self) -> bool {
        self == Parity::Even
    }
}

#[derive(Clone)]
pub struct SetSystem {
    ground: GroundSet,
    members: Vec<Subset>,
    dense: Option<Vec<u64>>,
}

impl SetSystem {
    /// Builds a set system; duplicates are dropped and members outside the
    /// ground set rejected.
    pub fn new<I>(ground: GroundSet, members: I) -> Result<SetSystem, Error>
    where
        I: IntoIterator<Item = Subset>,
    {
        let full = ground.full();
        let mut v = Vec::new();
        for s in members {
            if !s.is_subset_of(full) {
                return Err(Error::SubsetOutOfRange(s));
            }
            v.push(s);
        }
        Ok(SetSystem::from_unsorted(ground, v))
    }

    /// Set system on `1..=n` from index lists; handy in tests and examples.
    pub fn numbered(n: usize, members: &[&[usize]]) -> Result<SetSystem, Error> {
        let ground = GroundSet::numbered(n)?;
        let mut v = Vec::with_capacity(members.len());
        for m in members {
            let mut s = Subset::EMPTY;
            for &label in m.iter() {
                if label == 0 || label > n {
                    return Err(Error::ElementOutOfRange {
                        element: label,
                        size: n,
                    });
                }
                s = s.with(label - 1);
            }
            v.push(s);
        }
        SetSystem::new(ground, v)
    }

    /// Caller guarantees every member lies inside the ground set.
    pub(crate) fn from_unsorted(ground: GroundSet, mut members: Vec<Subset>) -> SetSystem {
        members.sort_unstable_by(|a, b| a.canonical_cmp(*b));
        members.dedup();
        let dense = (ground.len() <= DENSE_LIMIT).then(|| {
            let mut bits = vec![0u64; (1usize << ground.len()).div_ceil(64)];
            for s in &members {
                let i = s.0 as usize;
                bits[i / 64] |= 1 << (i % 64);
            }
            bits
        });
        SetSystem {
            ground,
            members,
            dense,
        }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    /// Number of ground elements.
    pub fn size(&self) -> usize {
        self.ground.len()
    }

    pub fn members(&self) -> &[Subset] {
        &self.members
    }

    pub fn iter(&self) -> impl Iterator<Item = Subset> + '_ {
        self.members.iter().copied()
    }

    /// Number of members of the family.
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_proper(&self) -> bool {
        !self.members.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.ground.is_empty()
    }

    #[inline]
    pub fn contains(&self, s: Subset) -> bool {
        match &self.dense {
            Some(bits) => {
                let i = s.0 as usize;
                i < 1 << self.ground.len() && bits[i / 64] >> (i % 64) & 1 == 1
            }
            None => self
                .members
                .binary_search_by(|m| m.canonical_cmp(s))
                .is_ok(),
        }
    }

    /// `None` for an improper system.
    pub fn parity(&self) -> Option<Parity> {
        let first = self.members.first()?.len() % 2;
        if self.members.iter().all(|m| m.len() % 2 == first) {
            Some(Parity::Even)
        } else {
            Some(Parity::Odd)
        }
    }

    pub fn min_cardinality(&self) -> Option<usize> {
        self.members.first().map(|m| m.len())
    }

    pub fn max_cardinality(&self) -> Option<usize> {
        self.members.last().map(|m| m.len())
    }

    /// Members of minimum cardinality.
    pub fn minimum_members(&self) -> SetSystem {
        let k = self.min_cardinality().unwrap_or(0);
        self.filter(|m| m.len() == k)
    }

    /// Members of maximum cardinality.
    pub fn maximum_members(&self) -> SetSystem {
        let k = self.max_cardinality().unwrap_or(0);
        self.filter(|m| m.len() == k)
    }

    pub fn filter<P: FnMut(&Subset) -> bool>(&self, mut keep: P) -> SetSystem {
        let members = self.members.iter().copied().filter(|m| keep(m)).collect();
        SetSystem::from_unsorted(self.ground.clone(), members)
    }

    /// `e` lies in no member.
    pub fn is_loop(&self, e: usize) -> bool {
        self.members.iter().all(|m| !m.contains(e))
    }

    /// `e` lies in every member.
    pub fn is_coloop(&self, e: usize) -> bool {
        self.members.iter().all(|m| m.contains(e))
    }

    pub(crate) fn check_element(&self, e: usize) -> Result<(), Error> {
        if e < self.size() {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange {
                element: e,
                size: self.size(),
            })
        }
    }

    pub(crate) fn check_subset(&self, s: Subset) -> Result<(), Error> {
        if s.is_subset_of(self.ground.full()) {
            Ok(())
        } else {
            Err(Error::SubsetOutOfRange(s))
        }
    }

    /// `{A Δ X : X ∈ F}`.
    pub fn twist(&self, a: Subset) -> Result<SetSystem, Error> {
        self.check_subset(a)?;
        let members = self
            .members
            .iter()
            .map(|m| m.symmetric_difference(a))
            .collect();
        Ok(SetSystem::from_unsorted(self.ground.clone(), members))
    }

    /// Loop complementation, one element at a time:
    /// `F ↦ F Δ {X ∪ e : X ∈ F, e ∉ X}`.
    pub fn loop_complement(&self, a: Subset) -> Result<SetSystem, Error> {
        self.check_subset(a)?;
        let mut members: Vec<Subset> = self.members.clone();
        for e in a.iter() {
            members = loop_complement_once(self.size(), &members, e);
        }
        Ok(SetSystem::from_unsorted(self.ground.clone(), members))
    }

    /// Deletes `delete` and contracts `contract`, with the loop/coloop
    /// conventions: deleting a coloop contracts it, contracting a loop
    /// deletes it. The resulting ground set keeps the remaining labels in
    /// their original order.
    pub fn minor(&self, delete: Subset, contract: Subset) -> Result<SetSystem, Error> {
        self.check_subset(delete)?;
        self.check_subset(contract)?;
        let overlap = delete.intersection(contract);
        if !overlap.is_empty() {
            return Err(Error::OverlappingMinor(overlap));
        }
        let mut members = self.members.clone();
        let gone = delete.union(contract);
        for e in gone.iter() {
            members = if delete.contains(e) {
                delete_once(&members, e)
            } else {
                contract_once(&members, e)
            };
        }
        let keep = gone.complement(self.size());
        let members = members.into_iter().map(|m| m.compress(keep)).collect();
        Ok(SetSystem::from_unsorted(
            self.ground.restrict(keep),
            members,
        ))
    }

    /// Applies single-element deletions and contractions in the given order.
    /// Each step re-indexes the ground set, so `steps` carries labels.
    pub fn minor_sequence(&self, steps: &[(MinorStep, &str)]) -> Result<SetSystem, Error> {
        let mut cur = self.clone();
        for (step, label) in steps {
            let e = cur
                .ground
                .index_of(label)
                .ok_or_else(|| Error::UnknownLabel((*label).into()))?;
            let s = Subset::singleton(e);
            cur = match step {
                MinorStep::Delete => cur.minor(s, Subset::EMPTY)?,
                MinorStep::Contract => cur.minor(Subset::EMPTY, s)?,
            };
        }
        Ok(cur)
    }

    /// `D|_A = D \ (E - A)`.
    pub fn restrict(&self, a: Subset) -> Result<SetSystem, Error> {
        self.check_subset(a)?;
        self.minor(a.complement(self.size()), Subset::EMPTY)
    }

    /// `{F1 ∪ F2}` over the concatenated ground set.
    pub fn direct_sum(&self, other: &SetSystem) -> Result<SetSystem, Error> {
        let ground = self.ground.disjoint_union(&other.ground)?;
        let shift = self.size();
        let mut members = Vec::with_capacity(self.len() * other.len());
        for a in &self.members {
            for b in &other.members {
                members.push(Subset(a.0 | b.0 << shift));
            }
        }
        Ok(SetSystem::from_unsorted(ground, members))
    }

    /// Same family with new labels.
    pub fn relabel(&self, ground: GroundSet) -> Result<SetSystem, Error> {
        if ground.len() != self.size() {
            return Err(Error::DimensionMismatch {
                expected: self.size(),
                found: ground.len(),
            });
        }
        Ok(SetSystem::from_unsorted(ground, self.members.clone()))
    }

    /// Image of the family under the element map `e ↦ perm[e]`.
    pub fn permute(&self, perm: &[usize]) -> SetSystem {
        let members = self
            .members
            .iter()
            .map(|m| Subset::from_indices(m.iter().map(|e| perm[e])))
            .collect();
        SetSystem::from_unsorted(self.ground.clone(), members)
    }

    /// Same family, ignoring labels.
    pub fn same_family(&self, other: &SetSystem) -> bool {
        self.size() == other.size() && self.members == other.members
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinorStep {
    Delete,
    Contract,
}

pub(crate) fn loop_complement_once(n: usize, members: &[Subset], e: usize) -> Vec<Subset> {
    if n <= DENSE_LIMIT {
        let mut bits = vec![false; 1 << n];
        for m in members {
            bits[m.0 as usize] = true;
        }
        for m in members {
            if !m.contains(e) {
                let t = m.with(e).0 as usize;
                bits[t] = !bits[t];
            }
        }
        (0..bits.len())
            .filter(|&i| bits[i])
            .map(|i| Subset(i as u32))
            .collect()
    } else {
        let mut set: alloc::collections::BTreeSet<u32> = members.iter().map(|m| m.0).collect();
        for m in members {
            if !m.contains(e) {
                let t = m.with(e).0;
                if !set.remove(&t) {
                    set.insert(t);
                }
            }
        }
        set.into_iter().map(Subset).collect()
    }
}

fn delete_once(members: &[Subset], e: usize) -> Vec<Subset> {
    if members.iter().all(|m| m.contains(e)) {
        members.iter().map(|m| m.without(e)).collect()
    } else {
        members.iter().copied().filter(|m| !m.contains(e)).collect()
    }
}

fn contract_once(members: &[Subset], e: usize) -> Vec<Subset> {
    if members.iter().all(|m| !m.contains(e)) {
        members.to_vec()
    } else {
        members
            .iter()
            .filter(|m| m.contains(e))
            .map(|m| m.without(e))
            .collect()
    }
}

impl PartialEq for SetSystem {
    fn eq(&self, other: &Self) -> bool {
        self.ground == other.ground && self.members == other.members
    }
}

impl Eq for SetSystem {}

impl Hash for SetSystem {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ground.hash(state);
        self.members.hash(state);
    }
}

impl PartialOrd for SetSystem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Ground size, then family size, then members in canonical order, then labels.
impl Ord for SetSystem {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then(self.members.len().cmp(&other.members.len()))
            .then_with(|| {
                for (a, b) in self.members.iter().zip(&other.members) {
                    match a.canonical_cmp(*b) {
                        Ordering::Equal => {}
                        ord => return ord,
                    }
                }
                Ordering::Equal
            })
            .then_with(|| self.ground.cmp(&other.ground))
    }
}

/// `({1,2}, {{}, {1,2}})`
impl fmt::Display for SetSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("({")?;
        for (i, l) in self.ground.labels().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(l)?;
        }
        f.write_str("}, {")?;
        for (i, m) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            self.ground.fmt_subset(*m, f)?;
        }
        f.write_str("})")
    }
}

impl fmt::Debug for SetSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
