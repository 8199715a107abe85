//! Isomorphism of set systems by exhaustive search over ground bijections.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::subset::Subset;
use crate::system::SetSystem;

/// Exhaustive search is only attempted up to this many elements.
pub const ISO_LIMIT: usize = 8;

/// Per-element invariant: how many members of each cardinality contain it.
fn signatures(s: &SetSystem) -> Vec<Vec<u32>> {
    let n = s.size();
    let mut sig = vec![vec![0u32; n + 1]; n];
    for m in s.members() {
        for e in m.iter() {
            sig[e][m.len()] += 1;
        }
    }
    sig
}

fn cardinality_profile(s: &SetSystem) -> Vec<u32> {
    let mut p = vec![0u32; s.size() + 1];
    for m in s.members() {
        p[m.len()] += 1;
    }
    p
}

/// Returns `perm` with `a.permute(perm)` equal to `b` as families, if any.
pub fn find_isomorphism(a: &SetSystem, b: &SetSystem) -> Result<Option<Vec<usize>>, Error> {
    let n = a.size();
    for s in [a, b] {
        if s.size() > ISO_LIMIT {
            return Err(Error::GroundTooLarge {
                size: s.size(),
                max: ISO_LIMIT,
            });
        }
    }
    if b.size() != n || a.len() != b.len() || cardinality_profile(a) != cardinality_profile(b) {
        return Ok(None);
    }
    let sa = signatures(a);
    let sb = signatures(b);
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    Ok(extend(a, b, &sa, &sb, 0, &mut perm, &mut used).then_some(perm))
}

fn extend(
    a: &SetSystem,
    b: &SetSystem,
    sa: &[Vec<u32>],
    sb: &[Vec<u32>],
    i: usize,
    perm: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    let n = perm.len();
    if i == n {
        return a.permute(perm).members() == b.members();
    }
    for j in 0..n {
        if used[j] || sa[i] != sb[j] {
            continue;
        }
        perm[i] = j;
        used[j] = true;
        if extend(a, b, sa, sb, i + 1, perm, used) {
            return true;
        }
        used[j] = false;
    }
    perm[i] = usize::MAX;
    false
}

/// Lexicographically least member list over all relabelings; two systems
/// are isomorphic iff their canonical forms agree.
pub fn canonical_form(s: &SetSystem) -> Result<Vec<Subset>, Error> {
    let n = s.size();
    if n > ISO_LIMIT {
        return Err(Error::GroundTooLarge {
            size: n,
            max: ISO_LIMIT,
        });
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<u32>> = None;
    let mut visit = |perm: &[usize]| {
        let mut image: Vec<u32> = s
            .members()
            .iter()
            .map(|m| Subset::from_indices(m.iter().map(|e| perm[e])).0)
            .collect();
        image.sort_unstable();
        if best.as_ref().is_none_or(|b| image < *b) {
            best = Some(image);
        }
    };
    // Heap's algorithm
    let mut c = vec![0usize; n];
    visit(&perm);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            visit(&perm);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(best.unwrap_or_default().into_iter().map(Subset).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn swap_isomorphism() {
        let a = SetSystem::numbered(2, &[&[1]]).unwrap();
        let b = SetSystem::numbered(2, &[&[2]]).unwrap();
        assert_eq!(find_isomorphism(&a, &b).unwrap(), Some(vec![1, 0]));
    }

    #[test]
    fn self_isomorphism_is_found() {
        let a = SetSystem::numbered(3, &[&[], &[1, 2], &[2, 3], &[1, 3], &[1, 2, 3]]).unwrap();
        let p = find_isomorphism(&a, &a).unwrap().unwrap();
        assert!(a.permute(&p).same_family(&a));
    }

    #[test]
    fn different_cardinalities_are_not_isomorphic() {
        let a = SetSystem::numbered(2, &[&[], &[1, 2]]).unwrap();
        let b = SetSystem::numbered(2, &[&[1], &[2]]).unwrap();
        assert_eq!(find_isomorphism(&a, &b).unwrap(), None);
    }

    #[test]
    fn oversize_rejected() {
        let a = SetSystem::numbered(9, &[&[]]).unwrap();
        assert!(find_isomorphism(&a, &a).is_err());
        assert!(canonical_form(&a).is_err());
    }

    #[test]
    fn canonical_form_agrees_with_search() {
        let fams: [&[&[usize]]; 4] = [
            &[&[1], &[2, 3]],
            &[&[3], &[1, 2]],
            &[&[2], &[1, 3]],
            &[&[1, 2], &[3], &[]],
        ];
        for x in fams {
            for y in fams {
                let a = SetSystem::numbered(3, x).unwrap();
                let b = SetSystem::numbered(3, y).unwrap();
                assert_eq!(
                    canonical_form(&a).unwrap() == canonical_form(&b).unwrap(),
                    find_isomorphism(&a, &b).unwrap().is_some()
                );
            }
        }
    }
}
