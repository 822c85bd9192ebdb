//! Sequences of face indices: canonical forms, smallness, the finite index
//! set of small sequences, and evaluation of composite `f` maps.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::factorability::apply_f;
use crate::foundation::FactorableMonoid;

/// Entries in written order `(i_s, ..., i_1)`; the rightmost entry acts
/// first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSequence(pub Vec<usize>);

impl IndexSequence {
    pub fn new(v: Vec<usize>) -> Self {
        Self(v)
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_entry(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// `self . other` in written order.
    pub fn dot(&self, other: &IndexSequence) -> IndexSequence {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        IndexSequence(v)
    }

    /// `i_t` with 1-based `t` counted from the right.
    pub fn at(&self, t: usize) -> usize {
        self.0[self.0.len() - t]
    }
}

impl fmt::Display for IndexSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

fn commute(a: usize, b: usize) -> bool {
    a.abs_diff(b) >= 2
}

/// Commuting neighbours have the larger entry on the left.
pub fn is_leftmost(s: &IndexSequence) -> bool {
    s.0.windows(2).all(|w| !commute(w[0], w[1]) || w[0] > w[1])
}

/// Commuting neighbours have the smaller entry on the left.
pub fn is_rightmost(s: &IndexSequence) -> bool {
    s.0.windows(2).all(|w| !commute(w[0], w[1]) || w[0] < w[1])
}

pub fn is_reduced(s: &IndexSequence) -> bool {
    s.0.windows(2).all(|w| w[0] != w[1])
}

fn canonical(s: &IndexSequence, left_larger: bool) -> IndexSequence {
    let mut v = s.0.clone();
    loop {
        let mut changed = false;
        let mut i = 0;
        while i + 1 < v.len() {
            if v[i] == v[i + 1] {
                v.remove(i + 1);
                changed = true;
            } else if commute(v[i], v[i + 1]) && ((v[i] < v[i + 1]) == left_larger) {
                v.swap(i, i + 1);
                changed = true;
                i += 1;
            } else {
                i += 1;
            }
        }
        if !changed {
            return IndexSequence(v);
        }
    }
}

pub fn leftmost_reduced(s: &IndexSequence) -> IndexSequence {
    canonical(s, true)
}

pub fn rightmost_reduced(s: &IndexSequence) -> IndexSequence {
    canonical(s, false)
}

/// The descending run `(b, b-1, ..., a)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct JBlock {
    pub a: usize,
    pub b: usize,
}

/// Splits a right-most reduced sequence into maximal runs that descend by
/// exactly one, left to right.
pub fn j_blocks(s: &IndexSequence) -> Result<Vec<JBlock>> {
    if !is_rightmost(s) || !is_reduced(s) {
        return Err(Error::NotRightmostReduced(s.to_string()));
    }
    let mut out: Vec<JBlock> = Vec::new();
    for &e in &s.0 {
        match out.last_mut() {
            Some(bl) if bl.a == e + 1 => bl.a = e,
            _ => out.push(JBlock { a: e, b: e }),
        }
    }
    Ok(out)
}

/// Block maxima strictly increase from left to right in the right-most
/// reduced form.
pub fn is_small(s: &IndexSequence) -> bool {
    let blocks = j_blocks(&rightmost_reduced(s)).expect("canonical form is right-most reduced");
    blocks.windows(2).all(|w| w[0].b < w[1].b)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleVerdict {
    Small,
    NotSmall,
    Undecided,
}

fn has_forbidden_factor(v: &[usize]) -> bool {
    v.windows(3).any(|w| w[0] == w[2] && w[1] + 1 == w[0])
}

/// Searches the graph of commutations, square contractions and at most
/// `depth` square expansions for a factor `(k+1, k, k+1)`.
pub fn is_small_oracle(s: &IndexSequence, depth: usize, budget: usize) -> OracleVerdict {
    let start = (s.0.clone(), 0usize);
    let mut seen: HashSet<(Vec<usize>, usize)> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some((v, used)) = queue.pop_front() {
        if has_forbidden_factor(&v) {
            return OracleVerdict::NotSmall;
        }
        let mut next: Vec<(Vec<usize>, usize)> = Vec::new();
        for i in 0..v.len() {
            if i + 1 < v.len() && commute(v[i], v[i + 1]) {
                let mut u = v.clone();
                u.swap(i, i + 1);
                next.push((u, used));
            }
            if i + 1 < v.len() && v[i] == v[i + 1] {
                let mut u = v.clone();
                u.remove(i);
                next.push((u, used));
            }
            if used < depth {
                let mut u = v.clone();
                u.insert(i, v[i]);
                next.push((u, used + 1));
            }
        }
        for n in next {
            if seen.insert(n.clone()) {
                if seen.len() > budget {
                    return OracleVerdict::Undecided;
                }
                queue.push_back(n);
            }
        }
    }
    OracleVerdict::Small
}

/// All right-most, reduced, small sequences with entries in `1..=n`,
/// ordered by length and then entries.
pub fn enumerate_small(n: usize, include_empty: bool) -> Vec<IndexSequence> {
    let mut out = Vec::new();
    // Subsets of maxima, increasing left to right.
    for mask in 0u64..(1u64 << n) {
        let maxima: Vec<usize> = (1..=n).filter(|b| mask & (1 << (b - 1)) != 0).collect();
        let mut partial: Vec<Vec<usize>> = vec![vec![]];
        for &b in &maxima {
            let mut grown = Vec::new();
            for p in &partial {
                for a in 1..=b {
                    let mut q = p.clone();
                    q.extend((a..=b).rev());
                    grown.push(q);
                }
            }
            partial = grown;
        }
        out.extend(partial.into_iter().map(IndexSequence));
    }
    if !include_empty {
        out.retain(|s| !s.is_empty());
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.0.cmp(&b.0)));
    out
}

/// `(a, a+1, ..., b)`.
pub fn segment_i(a: usize, b: usize) -> Result<IndexSequence> {
    if a > b || a == 0 {
        return Err(Error::InvalidArgument(format!("segment needs 1 <= a <= b, got a={a} b={b}")));
    }
    Ok(IndexSequence((a..=b).collect()))
}

/// `(b, b-1, ..., a)`.
pub fn segment_j(a: usize, b: usize) -> Result<IndexSequence> {
    let mut s = segment_i(a, b)?;
    s.0.reverse();
    Ok(s)
}

/// `(k) . (k-1, k) . ... . (1, ..., k)`.
pub fn d_sequence(k: usize) -> Result<IndexSequence> {
    if k == 0 {
        return Err(Error::InvalidArgument("D_k needs k >= 1".into()));
    }
    let mut v = Vec::new();
    for a in (1..=k).rev() {
        v.extend(a..=k);
    }
    Ok(IndexSequence(v))
}

/// Applies `f_{i_s} ... f_{i_1}` to a tuple stored with position 1 at
/// index 0.
pub fn evaluate_f<M: FactorableMonoid>(h: &M, s: &IndexSequence, tuple: &[M::Elem]) -> Result<Vec<M::Elem>> {
    let max = tuple.len().saturating_sub(1);
    let mut t = tuple.to_vec();
    for &i in s.0.iter().rev() {
        if i < 1 || i > max {
            return Err(Error::IndexOutOfRange { index: i, min: 1, max });
        }
        apply_f(h, &mut t, i);
    }
    Ok(t)
}

/// Checks that `D_n` absorbs every `extra` sequence on both sides and that
/// `(1, ..., n)^n` acts like `D_n`, on each sampled `(n+1)`-tuple.
pub fn check_absorption_d<M: FactorableMonoid>(
    h: &M,
    n: usize,
    samples: &[Vec<M::Elem>],
    extras: &[IndexSequence],
) -> Result<Vec<String>> {
    let d = d_sequence(n)?;
    let i1n = segment_i(1, n)?;
    let mut pow = IndexSequence::default();
    for _ in 0..n {
        pow = pow.dot(&i1n);
    }
    let mut failures = Vec::new();
    for t in samples {
        let base = evaluate_f(h, &d, t)?;
        if evaluate_f(h, &pow, t)? != base {
            failures.push(format!("{pow} on {:?}", t));
        }
        for e in extras {
            if evaluate_f(h, &d.dot(e), t)? != base || evaluate_f(h, &e.dot(&d), t)? != base {
                failures.push(format!("{e} on {:?}", t));
            }
        }
    }
    Ok(failures)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum XiOutcome {
    Mapped(IndexSequence),
    /// No position satisfies the case analysis.
    Unresolved,
}

/// The pairing on non-coherent small sequences, driven by a predicate
/// `stable_at(t)` meaning: after applying `f_{i_t} ... f_{i_1}`, the pair
/// at positions `(i_t, i_t - 1)` is stable. Positions `t` with `i_t = 1`
/// are never considered.
pub fn xi_with(s: &IndexSequence, stable_at: impl Fn(usize) -> bool) -> XiOutcome {
    let len = s.len();
    let mut t = match (1..=len).find(|&t| s.at(t) >= 2 && stable_at(t)) {
        Some(t) => t,
        None => return XiOutcome::Unresolved,
    };
    loop {
        let c = s.at(t) - 1;
        // Case 1: an entry c further left that can commute to just left of
        // position t is deleted.
        if let Some(k) = (t + 1..=len).find(|&k| s.at(k) == c) {
            if (t + 1..k).all(|r| commute(s.at(r), c)) {
                let mut v = s.0.clone();
                v.remove(len - k);
                return XiOutcome::Mapped(IndexSequence(v));
            }
        }
        // Case 2: inserting c keeps the sequence small.
        let mut v = s.0.clone();
        v.insert(len - t, c);
        let inserted = IndexSequence(v);
        if is_small(&inserted) {
            let l = rightmost_reduced(&inserted);
            return if l.len() == len + 1 { XiOutcome::Mapped(l) } else { XiOutcome::Unresolved };
        }
        // Case 3: advance to the next stable position.
        match (t + 1..=len).find(|&u| s.at(u) >= 2 && stable_at(u)) {
            Some(u) => t = u,
            None => return XiOutcome::Unresolved,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(v: &[usize]) -> IndexSequence {
        IndexSequence(v.to_vec())
    }

    #[test]
    fn leftmost_examples() {
        assert!(is_leftmost(&seq(&[4, 2, 1, 2, 3])));
        assert!(!is_leftmost(&seq(&[2, 4, 1, 2, 3])));
        assert!(is_leftmost(&seq(&[])) && is_rightmost(&seq(&[])));
        assert_eq!(leftmost_reduced(&seq(&[2, 4, 1, 2, 3])), seq(&[4, 2, 1, 2, 3]));
        assert_eq!(leftmost_reduced(&seq(&[1, 1])), seq(&[1]));
    }

    #[test]
    fn rightmost_examples() {
        assert_eq!(rightmost_reduced(&seq(&[3, 1, 2])), seq(&[1, 3, 2]));
        assert_eq!(rightmost_reduced(&seq(&[2, 2])), seq(&[2]));
        assert_eq!(rightmost_reduced(&seq(&[1, 2, 1])), seq(&[1, 2, 1]));
        assert_eq!(rightmost_reduced(&seq(&[1, 3, 1])), seq(&[1, 3]));
    }

    #[test]
    fn blocks() {
        let b = |v: &[usize]| j_blocks(&seq(v)).unwrap().iter().map(|x| (x.a, x.b)).collect::<Vec<_>>();
        assert_eq!(b(&[3, 2, 1]), vec![(1, 3)]);
        assert_eq!(b(&[2, 3, 2, 1]), vec![(2, 2), (1, 3)]);
        assert_eq!(b(&[1, 2, 1]), vec![(1, 1), (1, 2)]);
        assert!(j_blocks(&seq(&[3, 1])).is_err());
    }

    #[test]
    fn smallness() {
        assert!(is_small(&seq(&[3, 2, 1])));
        assert!(!is_small(&seq(&[2, 1, 2])));
        assert!(!is_small(&seq(&[2, 1, 2, 3, 2, 1])));
        assert_eq!(is_small_oracle(&seq(&[3, 2, 1]), 1, 100_000), OracleVerdict::Small);
        assert_eq!(is_small_oracle(&seq(&[2, 1, 2]), 0, 100_000), OracleVerdict::NotSmall);
        assert_eq!(is_small_oracle(&seq(&[1, 2, 1, 3, 2, 1]), 1, 1_000_000), OracleVerdict::Small);
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_small(1, true), vec![seq(&[]), seq(&[1])]);
        let two: Vec<_> = enumerate_small(2, true);
        assert_eq!(two, vec![seq(&[]), seq(&[1]), seq(&[2]), seq(&[1, 2]), seq(&[2, 1]), seq(&[1, 2, 1])]);
        assert_eq!(enumerate_small(3, true).len(), 24);
        assert_eq!(enumerate_small(4, true).len(), 120);
        assert_eq!(enumerate_small(2, false).len(), 5);
    }

    #[test]
    fn segments() {
        assert_eq!(segment_i(1, 3).unwrap(), seq(&[1, 2, 3]));
        assert_eq!(segment_j(1, 3).unwrap(), seq(&[3, 2, 1]));
        assert_eq!(d_sequence(2).unwrap(), seq(&[2, 1, 2]));
        assert_eq!(d_sequence(1).unwrap(), seq(&[1]));
        assert!(segment_i(3, 1).is_err());
    }

    fn example_xi(s: &IndexSequence) -> XiOutcome {
        xi_with(s, |t| t >= 3 && s.at(t) >= 2)
    }

    #[test]
    fn xi_on_example_family() {
        let pairs = [
            (seq(&[3, 2, 1]), seq(&[2, 3, 2, 1])),
            (seq(&[1, 3, 2, 1]), seq(&[1, 2, 3, 2, 1])),
            (seq(&[2, 1, 3, 2, 1]), seq(&[1, 2, 1, 3, 2, 1])),
        ];
        for (a, b) in pairs {
            assert_eq!(example_xi(&a), XiOutcome::Mapped(b.clone()), "{a}");
            assert_eq!(example_xi(&b), XiOutcome::Mapped(a.clone()), "{b}");
        }
    }
}
