//! Delta-matroids and their operation calculus.

use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::iso;
use crate::subset::{GroundSet, Subset};
use crate::system::{Parity, SetSystem};

/// A proper set system satisfying the symmetric exchange axiom.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DeltaMatroid {
    system: SetSystem,
}

/// Searches for a symmetric exchange violation by brute force over all
/// ordered pairs of members and all `u ∈ X Δ Y`. `u = v` is allowed.
/// Pairs and elements are scanned in canonical order, so the reported
/// witness is deterministic.
pub fn exchange_violation(s: &SetSystem) -> Option<(Subset, Subset, usize)> {
    for &x in s.members() {
        for &y in s.members() {
            let d = x.symmetric_difference(y);
            for u in d.iter() {
                let xu = x.toggle(u);
                if s.contains(xu) {
                    continue;
                }
                if !d.without(u).iter().any(|v| s.contains(xu.toggle(v))) {
                    return Some((x, y, u));
                }
            }
        }
    }
    None
}

impl DeltaMatroid {
    /// Validates `system` against the axioms.
    pub fn new(system: SetSystem) -> Result<DeltaMatroid, Error> {
        if !system.is_proper() {
            return Err(Error::Improper);
        }
        if let Some((x, y, u)) = exchange_violation(&system) {
            return Err(Error::ExchangeViolation { x, y, u });
        }
        Ok(DeltaMatroid { system })
    }

    /// Wraps a system already known to be a delta-matroid (for instance, the
    /// image of one under twist or minor).
    pub(crate) fn new_unchecked(system: SetSystem) -> DeltaMatroid {
        debug_assert!(system.is_proper());
        DeltaMatroid { system }
    }

    /// Delta-matroid on `1..=n` from index lists.
    pub fn numbered(n: usize, members: &[&[usize]]) -> Result<DeltaMatroid, Error> {
        DeltaMatroid::new(SetSystem::numbered(n, members)?)
    }

    pub fn system(&self) -> &SetSystem {
        &self.system
    }

    pub fn into_system(self) -> SetSystem {
        self.system
    }

    pub fn ground(&self) -> &GroundSet {
        self.system.ground()
    }

    pub fn size(&self) -> usize {
        self.system.size()
    }

    pub fn feasible(&self) -> &[Subset] {
        self.system.members()
    }

    pub fn is_feasible(&self, s: Subset) -> bool {
        self.system.contains(s)
    }

    pub fn parity(&self) -> Parity {
        self.system.parity().expect("delta-matroids are proper")
    }

    pub fn is_even(&self) -> bool {
        self.parity().is_even()
    }

    /// `∅` is feasible.
    pub fn is_normal(&self) -> bool {
        self.system.contains(Subset::EMPTY)
    }

    /// All feasible sets share one cardinality.
    pub fn is_matroid(&self) -> bool {
        self.system.min_cardinality() == self.system.max_cardinality()
    }

    pub fn is_loop(&self, e: usize) -> bool {
        self.system.is_loop(e)
    }

    pub fn is_coloop(&self, e: usize) -> bool {
        self.system.is_coloop(e)
    }

    pub fn twist(&self, a: Subset) -> Result<DeltaMatroid, Error> {
        Ok(DeltaMatroid::new_unchecked(self.system.twist(a)?))
    }

    pub fn dual(&self) -> DeltaMatroid {
        DeltaMatroid::new_unchecked(
            self.system
                .twist(self.ground().full())
                .expect("full set is in range"),
        )
    }

    /// `D + A`. The image need not satisfy the exchange axiom, so the raw
    /// system comes back together with its validation outcome.
    pub fn loop_complement(&self, a: Subset) -> Result<LoopComplement, Error> {
        let system = self.system.loop_complement(a)?;
        if !system.is_proper() {
            return Err(Error::Improper);
        }
        let violation = exchange_violation(&system);
        Ok(LoopComplement { system, violation })
    }

    pub fn delete(&self, e: usize) -> Result<DeltaMatroid, Error> {
        self.system.check_element(e)?;
        self.minor(Subset::singleton(e), Subset::EMPTY)
    }

    pub fn contract(&self, e: usize) -> Result<DeltaMatroid, Error> {
        self.system.check_element(e)?;
        self.minor(Subset::EMPTY, Subset::singleton(e))
    }

    /// `D \ X / Y`.
    pub fn minor(&self, delete: Subset, contract: Subset) -> Result<DeltaMatroid, Error> {
        Ok(DeltaMatroid::new_unchecked(
            self.system.minor(delete, contract)?,
        ))
    }

    pub fn delete_set(&self, x: Subset) -> Result<DeltaMatroid, Error> {
        self.minor(x, Subset::EMPTY)
    }

    pub fn contract_set(&self, y: Subset) -> Result<DeltaMatroid, Error> {
        self.minor(Subset::EMPTY, y)
    }

    /// `D|_A`.
    pub fn restrict(&self, a: Subset) -> Result<DeltaMatroid, Error> {
        Ok(DeltaMatroid::new_unchecked(self.system.restrict(a)?))
    }

    pub fn direct_sum(&self, other: &DeltaMatroid) -> Result<DeltaMatroid, Error> {
        Ok(DeltaMatroid::new_unchecked(
            self.system.direct_sum(&other.system)?,
        ))
    }

    /// A bijection `perm` with `perm[e]` the image in `other` of element `e`,
    /// carrying this family onto the other one.
    pub fn isomorphism(&self, other: &DeltaMatroid) -> Result<Option<Vec<usize>>, Error> {
        iso::find_isomorphism(&self.system, &other.system)
    }

    /// Feasible sets of minimum cardinality.
    pub fn minimum_feasible(&self) -> SetSystem {
        self.system.minimum_members()
    }

    /// Feasible sets of maximum cardinality.
    pub fn maximum_feasible(&self) -> SetSystem {
        self.system.maximum_members()
    }
}

impl fmt::Display for DeltaMatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.system, f)
    }
}

impl fmt::Debug for DeltaMatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.system, f)
    }
}

/// Result of a loop complementation together with its validity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoopComplement {
    pub system: SetSystem,
    /// First exchange violation, if the image is not a delta-matroid.
    pub violation: Option<(Subset, Subset, usize)>,
}

impl LoopComplement {
    pub fn is_delta_matroid(&self) -> bool {
        self.violation.is_none()
    }

    pub fn parity(&self) -> Parity {
        self.system.parity().expect("checked proper")
    }

    pub fn into_delta_matroid(self) -> Result<DeltaMatroid, Error> {
        match self.violation {
            None => Ok(DeltaMatroid::new_unchecked(self.system)),
            Some((x, y, u)) => Err(Error::ExchangeViolation { x, y, u }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dm(n: usize, f: &[&[usize]]) -> DeltaMatroid {
        DeltaMatroid::numbered(n, f).unwrap()
    }

    #[test]
    fn validation_examples() {
        assert!(DeltaMatroid::numbered(2, &[&[], &[1, 2]]).is_ok());
        assert!(DeltaMatroid::numbered(1, &[&[], &[1]]).is_ok());
        let err = DeltaMatroid::numbered(3, &[&[], &[1, 2, 3]]).unwrap_err();
        assert_eq!(
            err,
            Error::ExchangeViolation {
                x: Subset::EMPTY,
                y: Subset(0b111),
                u: 0
            }
        );
        assert_eq!(DeltaMatroid::numbered(2, &[]).unwrap_err(), Error::Improper);
    }

    #[test]
    fn parity_examples() {
        assert_eq!(dm(2, &[&[], &[1, 2]]).parity(), Parity::Even);
        assert_eq!(dm(1, &[&[], &[1]]).parity(), Parity::Odd);
        let nb = dm(3, &[&[], &[1, 2], &[2, 3], &[1, 3], &[1, 2, 3]]);
        assert_eq!(nb.parity(), Parity::Odd);
    }

    #[test]
    fn twist_examples() {
        let m = dm(2, &[&[1], &[2]]);
        assert_eq!(m.twist(Subset(0b01)).unwrap(), dm(2, &[&[], &[1, 2]]));
        assert_eq!(m.twist(Subset::EMPTY).unwrap(), m);
        let u13 = dm(3, &[&[1], &[2], &[3]]);
        assert_eq!(
            u13.twist(Subset(0b111)).unwrap(),
            dm(3, &[&[2, 3], &[1, 3], &[1, 2]])
        );
    }

    #[test]
    fn dual_examples() {
        let d = dm(2, &[&[], &[1, 2]]);
        assert_eq!(d.dual(), d);
        assert_eq!(d.dual().dual(), d);
        assert_eq!(dm(1, &[&[1]]).dual(), dm(1, &[&[]]));
    }

    #[test]
    fn loop_complement_examples() {
        let lc = dm(1, &[&[]]).loop_complement(Subset(1)).unwrap();
        assert!(lc.is_delta_matroid());
        assert_eq!(lc.system, SetSystem::numbered(1, &[&[], &[1]]).unwrap());
        let d = dm(3, &[&[1], &[2], &[3]]);
        for e in 0..3 {
            let once = d.loop_complement(Subset::singleton(e)).unwrap();
            let twice = once.system.loop_complement(Subset::singleton(e)).unwrap();
            assert_eq!(&twice, d.system());
        }
    }

    #[test]
    fn delete_examples() {
        let d = dm(2, &[&[], &[1, 2]]);
        let out = d.delete(0).unwrap();
        assert_eq!(out.ground().labels(), ["2"]);
        assert_eq!(out.feasible(), [Subset::EMPTY]);
        let coloop = dm(1, &[&[1]]).delete(0).unwrap();
        assert!(coloop.ground().is_empty());
        assert_eq!(coloop.feasible(), [Subset::EMPTY]);
        let nb = dm(3, &[&[], &[1, 2], &[2, 3], &[1, 3], &[1, 2, 3]]);
        let out = nb.delete(0).unwrap();
        assert_eq!(out.ground().labels(), ["2", "3"]);
        assert_eq!(out.feasible(), [Subset::EMPTY, Subset(0b11)]);
    }

    #[test]
    fn contract_examples() {
        let d = dm(2, &[&[], &[1, 2]]);
        let out = d.contract(0).unwrap();
        assert_eq!(out.ground().labels(), ["2"]);
        assert_eq!(out.feasible(), [Subset(1)]);
        let lp = dm(1, &[&[]]).contract(0).unwrap();
        assert!(lp.ground().is_empty());
        assert_eq!(lp.feasible(), [Subset::EMPTY]);
        assert!(d.contract(2).is_err());
    }

    #[test]
    fn minor_examples() {
        let d = dm(3, &[&[], &[1, 2], &[2, 3], &[1, 3], &[1, 2, 3]]);
        assert_eq!(d.minor(Subset::EMPTY, Subset::EMPTY).unwrap(), d);
        assert_eq!(
            d.restrict(Subset(0b011)).unwrap(),
            d.delete_set(Subset(0b100)).unwrap()
        );
        assert!(d.minor(Subset(0b1), Subset(0b11)).is_err());
    }

    #[test]
    fn direct_sum_examples() {
        let a = dm(1, &[&[], &[1]]);
        let b = DeltaMatroid::new(
            SetSystem::new(GroundSet::new(["2".into()].into()).unwrap(), [Subset(1)]).unwrap(),
        )
        .unwrap();
        let s = a.direct_sum(&b).unwrap();
        assert_eq!(s, dm(2, &[&[2], &[1, 2]]));
        let trivial = DeltaMatroid::new(SetSystem::numbered(0, &[&[]]).unwrap()).unwrap();
        assert_eq!(a.direct_sum(&trivial).unwrap(), a);
        assert_eq!(a.direct_sum(&a).unwrap_err(), Error::LabelClash("1".into()));
    }

    #[test]
    fn loop_and_coloop_examples() {
        assert!(dm(1, &[&[]]).is_loop(0));
        assert!(dm(1, &[&[1]]).is_coloop(0));
        let d = dm(2, &[&[], &[1, 2]]);
        assert!(!d.is_loop(0) && !d.is_coloop(0));
    }
}
