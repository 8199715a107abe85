//! Linear algebra over GF(2) on row bitmasks: delta-matroids `D(A)` of
//! symmetric matrices, column matroids, and recognition of binary
//! delta-matroids and binary matroids.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::delta::DeltaMatroid;
use crate::error::Error;
use crate::matroid::Matroid;
use crate::subset::{GroundSet, Subset, MAX_GROUND};
use crate::system::SetSystem;

/// Order limit for building `D(A)` (one elimination per subset).
pub const SYMMETRIC_LIMIT: usize = 16;
/// Ground-size limit of [`is_binary_delta`].
pub const BINARY_TEST_LIMIT: usize = 12;
/// Ground-size limit of [`is_binary_delta_exhaustive`].
pub const EXHAUSTIVE_LIMIT: usize = 6;
/// Ground-size limit of [`find_binary_representation`].
pub const REPRESENTATION_LIMIT: usize = 8;

/// Rank of a list of bit vectors; eliminates on the lowest set bit first.
pub fn rank(rows: &[u32]) -> usize {
    let mut rows: Vec<u32> = rows.to_vec();
    let mut r = 0;
    for i in 0..rows.len() {
        let Some(pivot) = rows[i..]
            .iter()
            .copied()
            .filter(|&x| x != 0)
            .min_by_key(|x| x.trailing_zeros())
        else {
            break;
        };
        let bit = pivot & pivot.wrapping_neg();
        let at = i + rows[i..]
            .iter()
            .position(|&x| x & bit != 0)
            .expect("pivot row");
        rows.swap(i, at);
        let p = rows[i];
        for row in rows.iter_mut().skip(i + 1) {
            if *row & bit != 0 {
                *row ^= p;
            }
        }
        r += 1;
    }
    r
}

/// A symmetric matrix over GF(2); `rows[i]` holds row `i` as a bitmask.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2SymmetricMatrix {
    rows: Vec<u32>,
}

impl Gf2SymmetricMatrix {
    pub fn new(rows: Vec<u32>) -> Result<Gf2SymmetricMatrix, Error> {
        let n = rows.len();
        if n > MAX_GROUND {
            return Err(Error::GroundTooLarge {
                size: n,
                max: MAX_GROUND,
            });
        }
        for (i, &row) in rows.iter().enumerate() {
            if row >> n != 0 && n < 32 {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: 32 - row.leading_zeros() as usize,
                });
            }
            for (j, other) in rows.iter().enumerate() {
                if (row >> j & 1) != (other >> i & 1) {
                    return Err(Error::NotSymmetric { row: i, col: j });
                }
            }
        }
        Ok(Gf2SymmetricMatrix { rows })
    }

    pub fn from_fn<F: Fn(usize, usize) -> bool>(n: usize, entry: F) -> Result<Self, Error> {
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .filter(|&j| entry(i, j))
                    .fold(0u32, |r, j| r | 1 << j)
            })
            .collect();
        Gf2SymmetricMatrix::new(rows)
    }

    pub fn zero(n: usize) -> Gf2SymmetricMatrix {
        Gf2SymmetricMatrix { rows: vec![0; n] }
    }

    pub fn identity(n: usize) -> Gf2SymmetricMatrix {
        Gf2SymmetricMatrix {
            rows: (0..n).map(|i| 1 << i).collect(),
        }
    }

    /// Matrix number `code` among all `2^(n(n+1)/2)` symmetric matrices of
    /// order `n`, reading the upper triangle row by row.
    pub fn from_code(n: usize, code: u64) -> Gf2SymmetricMatrix {
        let mut rows = vec![0u32; n];
        let mut bit = 0;
        for i in 0..n {
            for j in i..n {
                if code >> bit & 1 == 1 {
                    rows[i] |= 1 << j;
                    rows[j] |= 1 << i;
                }
                bit += 1;
            }
        }
        Gf2SymmetricMatrix { rows }
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i] >> j & 1 == 1
    }

    /// `A[X]` is nonsingular; `A[∅]` counts as nonsingular.
    pub fn principal_nonsingular(&self, x: Subset) -> bool {
        let sub: Vec<u32> = x
            .iter()
            .map(|i| Subset(self.rows[i]).compress(x).0)
            .collect();
        rank(&sub) == x.len()
    }

    /// `D(A)` on the given labels.
    pub fn delta_matroid_on(&self, ground: GroundSet) -> Result<DeltaMatroid, Error> {
        let n = self.order();
        if ground.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: ground.len(),
            });
        }
        if n > SYMMETRIC_LIMIT {
            return Err(Error::GroundTooLarge {
                size: n,
                max: SYMMETRIC_LIMIT,
            });
        }
        let feasible = ground
            .full()
            .subsets()
            .filter(|&x| self.principal_nonsingular(x))
            .collect();
        Ok(DeltaMatroid::new_unchecked(SetSystem::from_unsorted(
            ground, feasible,
        )))
    }

    /// `D(A)` on `1..=n`.
    pub fn delta_matroid(&self) -> Result<DeltaMatroid, Error> {
        self.delta_matroid_on(GroundSet::numbered(self.order())?)
    }
}

impl fmt::Debug for Gf2SymmetricMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rows(f, &self.rows, self.order())
    }
}

fn write_rows(f: &mut fmt::Formatter<'_>, rows: &[u32], cols: usize) -> fmt::Result {
    f.write_str("[")?;
    for (i, r) in rows.iter().enumerate() {
        if i > 0 {
            f.write_str(" ")?;
        }
        for j in 0..cols {
            f.write_str(if r >> j & 1 == 1 { "1" } else { "0" })?;
        }
    }
    f.write_str("]")
}

/// A general matrix over GF(2); `data[i]` holds row `i` as a column bitmask.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Matrix {
    cols: usize,
    data: Vec<u32>,
}

impl Gf2Matrix {
    pub fn new(cols: usize, data: Vec<u32>) -> Result<Gf2Matrix, Error> {
        if cols > MAX_GROUND {
            return Err(Error::GroundTooLarge {
                size: cols,
                max: MAX_GROUND,
            });
        }
        if data.len() > 32 {
            return Err(Error::DimensionMismatch {
                expected: 32,
                found: data.len(),
            });
        }
        if let Some(r) = data.iter().find(|r| **r >> cols != 0) {
            return Err(Error::DimensionMismatch {
                expected: cols,
                found: 32 - r.leading_zeros() as usize,
            });
        }
        Ok(Gf2Matrix { cols, data })
    }

    pub fn identity(k: usize) -> Gf2Matrix {
        Gf2Matrix {
            cols: k,
            data: (0..k).map(|i| 1 << i).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.data.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[u32] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i] >> j & 1 == 1
    }

    /// Column `j` as a bitmask over rows.
    pub fn column(&self, j: usize) -> u32 {
        self.data
            .iter()
            .enumerate()
            .filter(|(_, r)| *r >> j & 1 == 1)
            .fold(0, |c, (i, _)| c | 1 << i)
    }

    /// The vector matroid of the columns, on `1..=cols`.
    pub fn column_matroid(&self) -> Result<Matroid, Error> {
        self.column_matroid_on(GroundSet::numbered(self.cols)?)
    }

    pub fn column_matroid_on(&self, ground: GroundSet) -> Result<Matroid, Error> {
        if ground.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: ground.len(),
            });
        }
        if self.cols > SYMMETRIC_LIMIT {
            return Err(Error::GroundTooLarge {
                size: self.cols,
                max: SYMMETRIC_LIMIT,
            });
        }
        let columns: Vec<u32> = (0..self.cols).map(|j| self.column(j)).collect();
        let r = rank(&columns);
        let bases = ground
            .full()
            .subsets()
            .filter(|x| x.len() == r)
            .filter(|x| {
                let picked: Vec<u32> = x.iter().map(|j| columns[j]).collect();
                rank(&picked) == r
            })
            .collect();
        Matroid::from_delta(DeltaMatroid::new_unchecked(SetSystem::from_unsorted(
            ground, bases,
        )))
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rows(f, &self.data, self.cols)
    }
}

/// The unique symmetric matrix agreeing with a normal delta-matroid on all
/// subsets of size at most two: `A_vv = [{v} feasible]`, and
/// `A_vw = [{v,w} feasible] + A_vv·A_ww` (a 2×2 principal minor is
/// `A_vv·A_ww + A_vw`).
pub fn reconstruct_candidate(d: &DeltaMatroid) -> Result<Gf2SymmetricMatrix, Error> {
    if !d.is_normal() {
        return Err(Error::NotNormal);
    }
    let n = d.size();
    let diag: Vec<bool> = (0..n)
        .map(|v| d.is_feasible(Subset::singleton(v)))
        .collect();
    let mut rows = vec![0u32; n];
    for v in 0..n {
        if diag[v] {
            rows[v] |= 1 << v;
        }
        for w in v + 1..n {
            let pair = d.is_feasible(Subset::singleton(v).with(w));
            if pair ^ (diag[v] && diag[w]) {
                rows[v] |= 1 << w;
                rows[w] |= 1 << v;
            }
        }
    }
    Ok(Gf2SymmetricMatrix { rows })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryCertificate {
    pub verdict: bool,
    /// Feasible set the delta-matroid was twisted by to make it normal.
    pub twist_set: Subset,
    /// Representation of the twisted delta-matroid, present iff `verdict`.
    pub matrix: Option<Gf2SymmetricMatrix>,
    /// First subset (canonical order) where `D(candidate)` and the twist disagree.
    pub failure_witness: Option<Subset>,
}

/// Decides whether `d` is binary.
///
/// Twisting by a feasible set `F` gives a normal delta-matroid. If `d` is
/// binary then some twist of it equals `D(A)` up to relabeling, which is
/// normal; twisting that one by a feasible set reaches `d * F`, and normal
/// twists of a strongly representable delta-matroid are strongly
/// representable over the same field. So `d * F` is `D(A')` for a single
/// symmetric `A'`, and `A'` is pinned down by the subsets of size at most
/// two. Testing the canonical `F` with the identity labeling is therefore
/// complete; [`is_binary_delta_exhaustive`] cross-checks this on small inputs.
pub fn is_binary_delta(d: &DeltaMatroid) -> Result<BinaryCertificate, Error> {
    if d.size() > BINARY_TEST_LIMIT {
        return Err(Error::GroundTooLarge {
            size: d.size(),
            max: BINARY_TEST_LIMIT,
        });
    }
    let twist_set = d.feasible()[0];
    let normal = d.twist(twist_set)?;
    let candidate = reconstruct_candidate(&normal)?;
    let mut subsets: Vec<Subset> = d.ground().full().subsets().collect();
    subsets.sort_unstable_by(|a, b| a.canonical_cmp(*b));
    let failure_witness = subsets
        .into_iter()
        .find(|&x| candidate.principal_nonsingular(x) != normal.is_feasible(x));
    Ok(BinaryCertificate {
        verdict: failure_witness.is_none(),
        twist_set,
        matrix: failure_witness.is_none().then_some(candidate),
        failure_witness,
    })
}

/// Binary test straight from the definition: some twist of `d` is
/// isomorphic to `D(A)` for some symmetric `A`. Tries every feasible twist
/// set against every symmetric matrix of the right order.
pub fn is_binary_delta_exhaustive(d: &DeltaMatroid) -> Result<bool, Error> {
    let n = d.size();
    if n > EXHAUSTIVE_LIMIT {
        return Err(Error::GroundTooLarge {
            size: n,
            max: EXHAUSTIVE_LIMIT,
        });
    }
    let mut twists: Vec<SetSystem> = d
        .feasible()
        .iter()
        .map(|&f| d.system().twist(f))
        .collect::<Result<_, _>>()?;
    twists.sort();
    twists.dedup();
    let ground = d.ground().clone();
    for code in 0..1u64 << (n * (n + 1) / 2) {
        let rep = Gf2SymmetricMatrix::from_code(n, code).delta_matroid_on(ground.clone())?;
        for t in &twists {
            if t.len() == rep.system().len()
                && crate::iso::find_isomorphism(t, rep.system())?.is_some()
            {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Searches for a GF(2) column representation of `m`.
///
/// Any binary representation can be row-reduced to `r = rank(m)` rows
/// that are the identity on a chosen base `B`; the other columns are then
/// free `r`-bit vectors. All `2^(r(n-r))` such matrices are tried against
/// the first base in canonical order.
pub fn find_binary_representation(m: &Matroid) -> Result<Option<Gf2Matrix>, Error> {
    let n = m.size();
    if n > REPRESENTATION_LIMIT {
        return Err(Error::GroundTooLarge {
            size: n,
            max: REPRESENTATION_LIMIT,
        });
    }
    let r = m.rank();
    let base = m.bases().members()[0];
    let base_cols: Vec<usize> = base.iter().collect();
    let free_cols: Vec<usize> = base.complement(n).iter().collect();
    let free_bits = r * free_cols.len();
    for code in 0..1u64 << free_bits {
        let mut data = vec![0u32; r];
        for (i, &c) in base_cols.iter().enumerate() {
            data[i] |= 1 << c;
        }
        for (k, &c) in free_cols.iter().enumerate() {
            for (i, row) in data.iter_mut().enumerate() {
                if code >> (k * r + i) & 1 == 1 {
                    *row |= 1 << c;
                }
            }
        }
        let matrix = Gf2Matrix { cols: n, data };
        let candidate = matrix.column_matroid_on(m.ground().clone())?;
        if candidate.bases() == m.bases() {
            return Ok(Some(matrix));
        }
    }
    Ok(None)
}

pub fn is_binary_matroid(m: &Matroid) -> Result<bool, Error> {
    Ok(find_binary_representation(m)?.is_some())
}
