use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use super::corpus::{all_delta_matroids, random_delta_matroids_of_size, ALL_DELTA_LIMIT};
use crate::delta::DeltaMatroid;
use crate::error::Error;
use crate::gf2::is_binary_delta;
use crate::iso::canonical_form;

/// Largest size served by seeded sampling.
pub const SAMPLED_LIMIT: usize = 6;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Catalogue {
    pub n: usize,
    /// `None` for an exhaustive catalogue.
    pub seed: Option<u64>,
    pub total: u64,
    pub rejections: u64,
    pub even: u64,
    pub odd: u64,
    pub normal: u64,
    pub matroids: u64,
    pub binary: u64,
    pub bipartite: u64,
    pub eulerian: u64,
    /// Exhaustive catalogues only.
    pub iso_classes: Option<u64>,
}

impl Catalogue {
    fn add(&mut self, d: &DeltaMatroid) -> Result<(), Error> {
        self.total += 1;
        if d.is_even() {
            self.even += 1;
        } else {
            self.odd += 1;
        }
        self.normal += u64::from(d.is_normal());
        self.matroids += u64::from(d.is_matroid());
        self.binary += u64::from(is_binary_delta(d)?.verdict);
        self.bipartite += u64::from(d.is_bipartite());
        self.eulerian += u64::from(d.is_eulerian());
        Ok(())
    }
}

/// Counts of delta-matroids on `1..=n` by property. Exhaustive for
/// `n ≤ 4`; for `n = 5, 6` it tallies `samples` seeded random draws.
pub fn enumerate_delta_matroids(n: usize, seed: u64, samples: usize) -> Result<Catalogue, Error> {
    let mut cat = Catalogue {
        n,
        ..Catalogue::default()
    };
    if n <= ALL_DELTA_LIMIT {
        let all = all_delta_matroids(n)?;
        let mut classes = BTreeSet::new();
        for d in &all {
            cat.add(d)?;
            classes.insert(
                canonical_form(d.system())?
                    .iter()
                    .map(|s| s.0)
                    .collect::<Vec<u32>>(),
            );
        }
        cat.iso_classes = Some(classes.len() as u64);
    } else if n <= SAMPLED_LIMIT {
        let batch = random_delta_matroids_of_size(n, seed, samples)?;
        for (d, _) in &batch.instances {
            cat.add(d)?;
        }
        cat.seed = Some(seed);
        cat.rejections = batch.rejections;
    } else {
        return Err(Error::GroundTooLarge {
            size: n,
            max: SAMPLED_LIMIT,
        });
    }
    Ok(cat)
}

impl fmt::Display for Catalogue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n: {}", self.n)?;
        match self.seed {
            None => writeln!(f, "mode: exhaustive")?,
            Some(s) => {
                writeln!(f, "mode: sampled")?;
                writeln!(f, "seed: {s}")?;
                writeln!(f, "rejections: {}", self.rejections)?;
            }
        }
        let rows: [(&str, u64); 8] = [
            ("delta-matroids", self.total),
            ("even", self.even),
            ("odd", self.odd),
            ("normal", self.normal),
            ("matroids", self.matroids),
            ("binary", self.binary),
            ("bipartite", self.bipartite),
            ("eulerian", self.eulerian),
        ];
        for (k, v) in rows {
            writeln!(f, "{k}: {v}")?;
        }
        if let Some(c) = self.iso_classes {
            writeln!(f, "isomorphism-classes: {c}")?;
        }
        Ok(())
    }
}

/// The per-instance flags a catalogue counts, for listing small cases.
pub fn flags(d: &DeltaMatroid) -> Result<Vec<(&'static str, bool)>, Error> {
    Ok(alloc::vec![
        ("even", d.is_even()),
        ("binary", is_binary_delta(d)?.verdict),
        ("bipartite", d.is_bipartite()),
        ("eulerian", d.is_eulerian()),
    ])
}
