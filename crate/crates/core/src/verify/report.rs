use alloc::string::String;
use alloc::vec::Vec;
use core::time::Duration;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CheckKind {
    /// Passes when no instance violates the statement.
    Universal,
    /// Passes when a documented counterexample is found, showing that a
    /// statement fails in the direction (or class) the theory excludes.
    ExpectedWitness,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    /// Position of the instance in the check's corpus.
    pub ordinal: u64,
    pub instance: String,
    pub details: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub name: String,
    pub kind: CheckKind,
    /// Instances the statement applied to.
    pub tested: u64,
    /// Sorted by ordinal.
    pub counterexamples: Vec<Counterexample>,
    /// Instances exhibiting the expected failure (expected-witness checks).
    pub witness_hits: u64,
    /// Ordinals and descriptions of the documented witnesses that were found.
    pub witnesses: Vec<Counterexample>,
    /// Summed over shards.
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn empty(name: &str, kind: CheckKind) -> VerificationReport {
        VerificationReport {
            name: name.into(),
            kind,
            tested: 0,
            counterexamples: Vec::new(),
            witness_hits: 0,
            witnesses: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn passed(&self) -> bool {
        match self.kind {
            CheckKind::Universal => self.counterexamples.is_empty(),
            CheckKind::ExpectedWitness => {
                self.counterexamples.is_empty() && !self.witnesses.is_empty()
            }
        }
    }

    /// Combines two partial reports of the same check. Associative and
    /// commutative: counts add up and example lists are kept in ordinal order.
    pub fn merge(mut self, other: VerificationReport) -> VerificationReport {
        assert_eq!(self.name, other.name, "merging reports of different checks");
        self.tested += other.tested;
        self.witness_hits += other.witness_hits;
        self.elapsed += other.elapsed;
        self.counterexamples.extend(other.counterexamples);
        self.counterexamples.sort_by_key(|c| c.ordinal);
        self.witnesses.extend(other.witnesses);
        self.witnesses.sort_by_key(|c| c.ordinal);
        self
    }
}
