//! Coxeter matrices and finite Coxeter groups enumerated by reduced words.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};

/// Default enumeration bound on the group order.
pub const DEFAULT_GROUP_BOUND: usize = 1000;

/// Symmetric matrix of `m(s, t)`; `None` means infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterMatrix {
    names: Vec<String>,
    m: Vec<Vec<Option<u32>>>,
}

impl CoxeterMatrix {
    /// Pairs not listed get `m = infinity`.
    pub fn new(names: Vec<String>, pairs: &[(usize, usize, u32)]) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::InvalidArgument("a Coxeter matrix needs generators".into()));
        }
        let mut seen = HashSet::new();
        for (i, a) in names.iter().enumerate() {
            if a.is_empty() || a == "1" || a.contains(char::is_whitespace) || a.contains('^') || a.contains('.') {
                return Err(Error::InvalidAlphabet(format!("bad generator name {a:?}")));
            }
            if !seen.insert(a) {
                return Err(Error::InvalidAlphabet(format!("duplicate generator `{}`", names[i])));
            }
        }
        let mut m = vec![vec![None; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = Some(1);
        }
        for &(s, t, v) in pairs {
            if s >= n || t >= n || s == t {
                return Err(Error::InvalidArgument(format!("bad pair ({s}, {t})")));
            }
            if v < 2 {
                return Err(Error::InvalidArgument(format!("m({}, {}) must be at least 2", names[s], names[t])));
            }
            if m[s][t].is_some_and(|old| old != v) {
                return Err(Error::InvalidArgument(format!("conflicting m({}, {})", names[s], names[t])));
            }
            m[s][t] = Some(v);
            m[t][s] = Some(v);
        }
        Ok(Self { names, m })
    }

    pub fn from_names(names: &[&str], pairs: &[(&str, &str, u32)]) -> Result<Self> {
        let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let idx = |x: &str| {
            names.iter().position(|n| n == x).ok_or_else(|| Error::UnknownLetter(x.to_string()))
        };
        let mut p = Vec::new();
        for (a, b, v) in pairs {
            p.push((idx(a)?, idx(b)?, *v));
        }
        Self::new(names.clone(), &p)
    }

    /// Type `A_n`: a path with `m = 3` on neighbours and 2 elsewhere.
    pub fn type_a(n: usize) -> Self {
        let names: Vec<String> = (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                pairs.push((i, j, if j == i + 1 { 3 } else { 2 }));
            }
        }
        Self::new(names, &pairs).expect("valid type A matrix")
    }

    /// Two generators with `m(a, b) = m`.
    pub fn dihedral(m: u32) -> Result<Self> {
        Self::new(vec!["a".into(), "b".into()], &[(0, 1, m)])
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn m(&self, s: usize, t: usize) -> Option<u32> {
        self.m[s][t]
    }

    /// Unordered pairs `(s, t, m)` with finite `m`, `s < t`.
    pub fn finite_pairs(&self) -> Vec<(usize, usize, u32)> {
        let mut out = Vec::new();
        for s in 0..self.rank() {
            for t in s + 1..self.rank() {
                if let Some(v) = self.m[s][t] {
                    out.push((s, t, v));
                }
            }
        }
        out
    }
}

/// A finite Coxeter group. Elements are indices; each element is keyed by
/// its lexicographically least reduced word.
#[derive(Clone, Debug)]
pub struct CoxeterGroup {
    pub matrix: CoxeterMatrix,
    words: Vec<Vec<usize>>,
    right_mul: Vec<Vec<usize>>,
    left_mul: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    longest: usize,
}

impl CoxeterGroup {
    pub fn new(matrix: CoxeterMatrix, bound: usize) -> Result<Self> {
        let rank = matrix.rank();
        if (0..rank).any(|s| (0..rank).any(|t| matrix.m(s, t).is_none())) {
            return Err(Error::GroupTooLarge(bound));
        }
        let mut words: Vec<Vec<usize>> = vec![vec![]];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(vec![], 0)]);
        let mut right_mul: Vec<Vec<usize>> = Vec::new();
        let mut queue = VecDeque::from([0usize]);
        while let Some(e) = queue.pop_front() {
            let mut row = Vec::with_capacity(rank);
            for s in 0..rank {
                let mut w = words[e].clone();
                w.push(s);
                let c = reduce_word(&matrix, w);
                let id = match index.get(&c) {
                    Some(&id) => id,
                    None => {
                        let id = words.len();
                        if id >= bound {
                            return Err(Error::GroupTooLarge(bound));
                        }
                        index.insert(c.clone(), id);
                        words.push(c);
                        queue.push_back(id);
                        id
                    }
                };
                row.push(id);
            }
            if right_mul.len() <= e {
                right_mul.resize(e + 1, vec![]);
            }
            right_mul[e] = row;
        }
        let n = words.len();
        let eval = |w: &[usize]| w.iter().fold(0usize, |acc, &s| right_mul[acc][s]);
        let inverse: Vec<usize> = (0..n)
            .map(|e| {
                let mut w = words[e].clone();
                w.reverse();
                eval(&w)
            })
            .collect();
        let left_mul: Vec<Vec<usize>> =
            (0..n).map(|e| (0..rank).map(|s| inverse[right_mul[inverse[e]][s]]).collect()).collect();
        let longest = (0..n).max_by_key(|&e| words[e].len()).unwrap();
        Ok(Self { matrix, words, right_mul, left_mul, inverse, longest })
    }

    pub fn order(&self) -> usize {
        self.words.len()
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn generator(&self, s: usize) -> usize {
        self.right_mul[0][s]
    }

    /// Lexicographically least reduced word.
    pub fn word(&self, e: usize) -> &[usize] {
        &self.words[e]
    }

    pub fn length(&self, e: usize) -> usize {
        self.words[e].len()
    }

    pub fn longest(&self) -> usize {
        self.longest
    }

    pub fn inverse(&self, e: usize) -> usize {
        self.inverse[e]
    }

    pub fn mul_gen(&self, e: usize, s: usize) -> usize {
        self.right_mul[e][s]
    }

    pub fn gen_mul(&self, s: usize, e: usize) -> usize {
        self.left_mul[e][s]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.words[b].iter().fold(a, |acc, &s| self.right_mul[acc][s])
    }

    /// Generators `s` with `l(es) < l(e)`.
    pub fn right_descents(&self, e: usize) -> Vec<usize> {
        (0..self.rank()).filter(|&s| self.length(self.right_mul[e][s]) < self.length(e)).collect()
    }

    /// Generators `s` with `l(se) < l(e)`.
    pub fn left_descents(&self, e: usize) -> Vec<usize> {
        (0..self.rank()).filter(|&s| self.length(self.left_mul[e][s]) < self.length(e)).collect()
    }

    /// Name of an element: generator names concatenated when they are all
    /// single characters, otherwise joined with `.`.
    pub fn name(&self, e: usize) -> String {
        let names = self.matrix.names();
        let parts: Vec<&str> = self.words[e].iter().map(|&s| names[s].as_str()).collect();
        if parts.is_empty() {
            "1".into()
        } else if names.iter().all(|n| n.chars().count() == 1) {
            parts.concat()
        } else {
            parts.join(".")
        }
    }
}

fn alternating(s: usize, t: usize, m: usize) -> impl Iterator<Item = usize> {
    (0..m).map(move |k| if k % 2 == 0 { s } else { t })
}

/// Lexicographically least reduced word for the element a word represents:
/// closes under braid moves and cancels the first square that appears.
fn reduce_word(matrix: &CoxeterMatrix, start: Vec<usize>) -> Vec<usize> {
    let mut w = start;
    'outer: loop {
        let mut seen: HashSet<Vec<usize>> = HashSet::from([w.clone()]);
        let mut queue = vec![w.clone()];
        let mut qi = 0;
        while qi < queue.len() {
            let u = queue[qi].clone();
            qi += 1;
            if let Some(i) = (0..u.len().saturating_sub(1)).find(|&i| u[i] == u[i + 1]) {
                let mut v = u;
                v.drain(i..i + 2);
                w = v;
                continue 'outer;
            }
            for i in 0..u.len() {
                let s = u[i];
                for t in 0..matrix.rank() {
                    let Some(m) = matrix.m(s, t) else { continue };
                    let m = m as usize;
                    if t == s || i + m > u.len() || !alternating(s, t, m).zip(&u[i..i + m]).all(|(a, &b)| a == b) {
                        continue;
                    }
                    let mut v = u.clone();
                    for (k, x) in alternating(t, s, m).enumerate() {
                        v[i + k] = x;
                    }
                    if seen.insert(v.clone()) {
                        queue.push(v);
                    }
                }
            }
        }
        return seen.into_iter().min().unwrap();
    }
}
