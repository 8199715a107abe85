//! Matroids given by their bases, and the Eulerian / bipartite
//! classification of matroids and (through the lower matroid) of
//! delta-matroids.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::delta::DeltaMatroid;
use crate::error::Error;
use crate::subset::{GroundSet, Subset};
use crate::system::SetSystem;

/// A matroid: an equicardinal delta-matroid, its feasible sets read as bases.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matroid {
    delta: DeltaMatroid,
}

impl Matroid {
    /// Validates `bases`: nonempty, equicardinal, and closed under base exchange.
    pub fn from_bases(bases: SetSystem) -> Result<Matroid, Error> {
        let first = *bases.members().first().ok_or(Error::Improper)?;
        if let Some(&b) = bases.members().iter().find(|b| b.len() != first.len()) {
            return Err(Error::NotEquicardinal { a: first, b });
        }
        for &b1 in bases.members() {
            for &b2 in bases.members() {
                for x in b1.difference(b2).iter() {
                    let rest = b1.without(x);
                    if !b2
                        .difference(b1)
                        .iter()
                        .any(|y| bases.contains(rest.with(y)))
                    {
                        return Err(Error::BaseExchangeViolation { b1, b2, x });
                    }
                }
            }
        }
        Ok(Matroid {
            delta: DeltaMatroid::new_unchecked(bases),
        })
    }

    /// Matroid on `1..=n` from index lists of bases.
    pub fn numbered(n: usize, bases: &[&[usize]]) -> Result<Matroid, Error> {
        Matroid::from_bases(SetSystem::numbered(n, bases)?)
    }

    /// Reads an equicardinal delta-matroid as a matroid.
    pub fn from_delta(d: DeltaMatroid) -> Result<Matroid, Error> {
        if !d.is_matroid() {
            let f = d.feasible();
            return Err(Error::NotEquicardinal {
                a: f[0],
                b: f[f.len() - 1],
            });
        }
        Ok(Matroid { delta: d })
    }

    /// Uniform matroid `U_{r,n}` on `1..=n`.
    pub fn uniform(r: usize, n: usize) -> Result<Matroid, Error> {
        let ground = GroundSet::numbered(n)?;
        let bases = ground.full().subsets().filter(|s| s.len() == r);
        Matroid::from_bases(SetSystem::new(ground, bases)?)
    }

    /// The matroid whose only base is the whole ground set.
    pub fn free(ground: GroundSet) -> Matroid {
        let full = ground.full();
        Matroid {
            delta: DeltaMatroid::new_unchecked(SetSystem::from_unsorted(ground, vec![full])),
        }
    }

    /// The rank-0 matroid: every element a loop.
    pub fn rank_zero(ground: GroundSet) -> Matroid {
        Matroid {
            delta: DeltaMatroid::new_unchecked(SetSystem::from_unsorted(
                ground,
                vec![Subset::EMPTY],
            )),
        }
    }

    pub fn as_delta(&self) -> &DeltaMatroid {
        &self.delta
    }

    pub fn into_delta(self) -> DeltaMatroid {
        self.delta
    }

    pub fn bases(&self) -> &SetSystem {
        self.delta.system()
    }

    pub fn ground(&self) -> &GroundSet {
        self.delta.ground()
    }

    pub fn size(&self) -> usize {
        self.delta.size()
    }

    pub fn rank(&self) -> usize {
        self.delta.feasible()[0].len()
    }

    pub fn is_independent(&self, x: Subset) -> bool {
        self.delta.feasible().iter().any(|b| x.is_subset_of(*b))
    }

    pub fn rank_of(&self, x: Subset) -> usize {
        self.delta
            .feasible()
            .iter()
            .map(|b| b.intersection(x).len())
            .max()
            .unwrap_or(0)
    }

    /// Independence indicator over the whole powerset, indexed by bitmask.
    pub fn independence_table(&self) -> Vec<bool> {
        let n = self.size();
        let mut table = vec![false; 1 << n];
        for b in self.delta.feasible() {
            table[b.0 as usize] = true;
        }
        for x in (0..1usize << n).rev() {
            if table[x] {
                continue;
            }
            table[x] = (0..n).any(|e| x >> e & 1 == 0 && table[x | 1 << e]);
        }
        table
    }

    pub fn count_independent_sets(&self) -> u64 {
        self.independence_table().iter().filter(|&&i| i).count() as u64
    }

    /// Inclusion-minimal dependent sets, by a scan of the powerset.
    pub fn circuits(&self) -> CircuitFamily {
        let n = self.size();
        let table = self.independence_table();
        let mut circuits: Vec<Subset> = (1..1usize << n)
            .filter(|&x| !table[x] && (0..n).all(|e| x >> e & 1 == 0 || table[x & !(1 << e)]))
            .map(|x| Subset(x as u32))
            .collect();
        circuits.sort_unstable_by(|a, b| a.canonical_cmp(*b));
        CircuitFamily { circuits }
    }

    pub fn dual(&self) -> Matroid {
        Matroid {
            delta: self.delta.dual(),
        }
    }

    /// Circuits of the dual.
    pub fn cocircuits(&self) -> CircuitFamily {
        self.dual().circuits()
    }

    pub fn minor(&self, delete: Subset, contract: Subset) -> Result<Matroid, Error> {
        Ok(Matroid {
            delta: self.delta.minor(delete, contract)?,
        })
    }

    pub fn delete_set(&self, x: Subset) -> Result<Matroid, Error> {
        self.minor(x, Subset::EMPTY)
    }

    pub fn contract_set(&self, y: Subset) -> Result<Matroid, Error> {
        self.minor(Subset::EMPTY, y)
    }

    pub fn restrict(&self, a: Subset) -> Result<Matroid, Error> {
        self.delete_set(a.complement(self.size()))
    }

    pub fn direct_sum(&self, other: &Matroid) -> Result<Matroid, Error> {
        Ok(Matroid {
            delta: self.delta.direct_sum(&other.delta)?,
        })
    }

    /// First odd circuit in canonical order, if any.
    pub fn odd_circuit(&self) -> Option<Subset> {
        self.circuits().iter().find(|c| c.len() % 2 == 1)
    }

    pub fn is_bipartite(&self) -> bool {
        self.odd_circuit().is_none()
    }

    /// A partition of the ground set into circuits, if one exists.
    pub fn eulerian_partition(&self) -> Option<Vec<Subset>> {
        self.circuits().exact_cover(self.ground().full())
    }

    pub fn is_eulerian(&self) -> bool {
        self.eulerian_partition().is_some()
    }

    pub fn classify(&self) -> ClassificationReport {
        let circuits = self.circuits();
        let odd_circuit_witness = circuits.iter().find(|c| c.len() % 2 == 1);
        let eulerian_partition = circuits.exact_cover(self.ground().full());
        ClassificationReport {
            bipartite: odd_circuit_witness.is_none(),
            eulerian: eulerian_partition.is_some(),
            eulerian_partition,
            odd_circuit_witness,
        }
    }
}

impl fmt::Display for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.delta, f)
    }
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matroid{}", self.delta)
    }
}

/// Circuits of a matroid in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircuitFamily {
    circuits: Vec<Subset>,
}

impl CircuitFamily {
    pub fn as_slice(&self) -> &[Subset] {
        &self.circuits
    }

    pub fn iter(&self) -> impl Iterator<Item = Subset> + '_ {
        self.circuits.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.circuits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.circuits.is_empty()
    }

    pub fn contains(&self, c: Subset) -> bool {
        self.circuits.contains(&c)
    }

    /// Disjoint circuits whose union is `target`, found by backtracking on
    /// the lowest uncovered element. Candidates are tried in canonical
    /// order, so the answer is reproducible. `target = ∅` is covered by
    /// the empty list.
    pub fn exact_cover(&self, target: Subset) -> Option<Vec<Subset>> {
        let usable: Vec<Subset> = self
            .circuits
            .iter()
            .copied()
            .filter(|c| c.is_subset_of(target))
            .collect();
        let mut chosen = Vec::new();
        cover(&usable, target, Subset::EMPTY, &mut chosen).then_some(chosen)
    }
}

fn cover(circuits: &[Subset], target: Subset, covered: Subset, chosen: &mut Vec<Subset>) -> bool {
    let Some(e) = target.difference(covered).first() else {
        return true;
    };
    for &c in circuits {
        if c.contains(e) && c.is_disjoint(covered) {
            chosen.push(c);
            if cover(circuits, target, covered.union(c), chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub bipartite: bool,
    pub eulerian: bool,
    pub eulerian_partition: Option<Vec<Subset>>,
    pub odd_circuit_witness: Option<Subset>,
}

impl DeltaMatroid {
    /// `D_min`: bases are the minimum-cardinality feasible sets.
    pub fn lower_matroid(&self) -> Matroid {
        Matroid {
            delta: DeltaMatroid::new_unchecked(self.minimum_feasible()),
        }
    }

    /// `D_max`: bases are the maximum-cardinality feasible sets.
    pub fn upper_matroid(&self) -> Matroid {
        Matroid {
            delta: DeltaMatroid::new_unchecked(self.maximum_feasible()),
        }
    }

    /// Classification of the lower matroid.
    pub fn classify(&self) -> ClassificationReport {
        self.lower_matroid().classify()
    }

    pub fn is_bipartite(&self) -> bool {
        self.lower_matroid().is_bipartite()
    }

    pub fn is_eulerian(&self) -> bool {
        self.lower_matroid().is_eulerian()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[usize]) -> Subset {
        Subset::from_indices(v.iter().map(|i| i - 1))
    }

    #[test]
    fn from_bases_examples() {
        let u12 = Matroid::numbered(2, &[&[1], &[2]]).unwrap();
        assert_eq!(u12.rank(), 1);
        assert!(matches!(
            Matroid::numbered(2, &[&[1], &[1, 2]]),
            Err(Error::NotEquicardinal { .. })
        ));
        let u23 = Matroid::numbered(3, &[&[1, 2], &[1, 3], &[2, 3]]).unwrap();
        assert_eq!(u23, Matroid::uniform(2, 3).unwrap());
        assert!(matches!(
            Matroid::numbered(4, &[&[1, 2], &[3, 4]]),
            Err(Error::BaseExchangeViolation { .. })
        ));
        assert_eq!(Matroid::numbered(2, &[]).unwrap_err(), Error::Improper);
    }

    #[test]
    fn circuit_examples() {
        let u12 = Matroid::uniform(1, 2).unwrap();
        assert_eq!(u12.circuits().as_slice(), [s(&[1, 2])]);
        let free = Matroid::free(GroundSet::numbered(3).unwrap());
        assert!(free.circuits().is_empty());
        let zero = Matroid::rank_zero(GroundSet::numbered(2).unwrap());
        assert_eq!(zero.circuits().as_slice(), [s(&[1]), s(&[2])]);
    }

    #[test]
    fn dual_examples() {
        let u12 = Matroid::uniform(1, 2).unwrap();
        assert_eq!(u12.dual(), u12);
        let free = Matroid::free(GroundSet::numbered(2).unwrap());
        assert_eq!(
            free.dual(),
            Matroid::rank_zero(GroundSet::numbered(2).unwrap())
        );
        let u24 = Matroid::uniform(2, 4).unwrap();
        assert_eq!(u24.dual().dual(), u24);
        assert_eq!(
            Matroid::uniform(1, 3).unwrap().dual(),
            Matroid::uniform(2, 3).unwrap()
        );
    }

    #[test]
    fn bipartite_examples() {
        assert_eq!(
            Matroid::uniform(2, 3).unwrap().odd_circuit(),
            Some(s(&[1, 2, 3]))
        );
        assert!(Matroid::uniform(3, 4).unwrap().is_bipartite());
        assert!(Matroid::free(GroundSet::numbered(2).unwrap()).is_bipartite());
    }

    #[test]
    fn eulerian_examples() {
        assert_eq!(
            Matroid::uniform(1, 2).unwrap().eulerian_partition(),
            Some(vec![s(&[1, 2])])
        );
        assert_eq!(
            Matroid::uniform(2, 3).unwrap().eulerian_partition(),
            Some(vec![s(&[1, 2, 3])])
        );
        // element 3 is a coloop
        let with_coloop = Matroid::numbered(3, &[&[1, 3], &[2, 3]]).unwrap();
        assert!(!with_coloop.is_eulerian());
        assert!(Matroid::free(GroundSet::empty()).is_eulerian());
    }

    #[test]
    fn independent_set_counts() {
        assert_eq!(Matroid::uniform(1, 2).unwrap().count_independent_sets(), 3);
        assert_eq!(
            Matroid::free(GroundSet::numbered(1).unwrap()).count_independent_sets(),
            2
        );
        assert_eq!(Matroid::uniform(2, 3).unwrap().count_independent_sets(), 7);
    }

    #[test]
    fn lower_and_upper_matroids() {
        let d = DeltaMatroid::numbered(2, &[&[], &[1], &[1, 2]]).unwrap();
        assert_eq!(
            d.lower_matroid(),
            Matroid::rank_zero(GroundSet::numbered(2).unwrap())
        );
        assert_eq!(
            d.upper_matroid(),
            Matroid::free(GroundSet::numbered(2).unwrap())
        );
        let w = DeltaMatroid::numbered(2, &[&[], &[1, 2]]).unwrap();
        assert_eq!(w.lower_matroid().bases().members(), [Subset::EMPTY]);
        assert!(!w.is_bipartite());
        assert!(w.dual().is_eulerian());
        let free = Matroid::free(GroundSet::numbered(2).unwrap()).into_delta();
        assert!(free.is_bipartite() && !free.is_eulerian());
    }

    #[test]
    fn direct_sum_circuits_are_disjoint_pairs() {
        let a = Matroid::uniform(1, 2).unwrap();
        let b = Matroid::from_bases(
            SetSystem::new(
                GroundSet::new(["3".into(), "4".into()].into()).unwrap(),
                [Subset(0b01), Subset(0b10)],
            )
            .unwrap(),
        )
        .unwrap();
        let sum = a.direct_sum(&b).unwrap();
        assert_eq!(sum.circuits().as_slice(), [Subset(0b0011), Subset(0b1100)]);
    }
}
