//! Alphabets, words, the monoid-handle interface and word-length balls.

use std::collections::{HashMap, VecDeque};
use std::fmt::Debug;
use std::hash::Hash;

use crate::error::{Error, Result};

pub type Letter = u32;

/// A letter or the unit; `None` is the unit.
pub type Pointed = Option<Letter>;

/// Finite ordered list of generator names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
    index: HashMap<String, Letter>,
}

impl Alphabet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut index = HashMap::new();
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || n.chars().any(char::is_whitespace) {
                return Err(Error::InvalidAlphabet(format!("bad generator name {n:?}")));
            }
            if n == "1" {
                return Err(Error::InvalidAlphabet("`1` is reserved for the unit".into()));
            }
            if index.insert(n.clone(), i as Letter).is_some() {
                return Err(Error::InvalidAlphabet(format!("duplicate generator `{n}`")));
            }
        }
        Ok(Self { names, index })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> {
        0..self.names.len() as Letter
    }

    pub fn name(&self, l: Letter) -> &str {
        &self.names[l as usize]
    }

    pub fn letter(&self, name: &str) -> Result<Letter> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownLetter(name.to_string()))
    }

    /// Parses `"1"` as the unit and any other token as a letter.
    pub fn pointed(&self, name: &str) -> Result<Pointed> {
        if name == "1" {
            Ok(None)
        } else {
            self.letter(name).map(Some)
        }
    }

    pub fn render_pointed(&self, p: Pointed) -> String {
        p.map_or_else(|| "1".to_string(), |l| self.name(l).to_string())
    }

    /// Parses whitespace-separated names, leftmost first. `"1"` tokens are
    /// dropped, so `"1"` and `""` both give the empty word.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let mut reading = Vec::new();
        for tok in text.split_whitespace() {
            if let Some(l) = self.pointed(tok)? {
                reading.push(l);
            }
        }
        Ok(Word::from_reading(&reading))
    }

    pub fn render(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        w.reading()
            .iter()
            .map(|&l| self.name(l))
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn contains(&self, w: &Word) -> bool {
        w.positions().iter().all(|&l| (l as usize) < self.len())
    }

    pub fn concat(&self, u: &Word, v: &Word) -> Result<Word> {
        if !self.contains(u) || !self.contains(v) {
            return Err(Error::AlphabetMismatch);
        }
        Ok(u.concat(v))
    }
}

/// A word in the free monoid. Letters are stored by position: index 0 holds
/// position 1, the rightmost letter as written.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn letter(l: Letter) -> Self {
        Self(vec![l])
    }

    pub fn from_positions(v: Vec<Letter>) -> Self {
        Self(v)
    }

    /// Builds a word from letters in written (left-to-right) order.
    pub fn from_reading(r: &[Letter]) -> Self {
        Self(r.iter().rev().copied().collect())
    }

    pub fn reading(&self) -> Vec<Letter> {
        self.0.iter().rev().copied().collect()
    }

    pub fn positions(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Letter at 1-based position `pos`, counted from the right.
    pub fn at(&self, pos: usize) -> Option<Letter> {
        pos.checked_sub(1).and_then(|i| self.0.get(i).copied())
    }

    /// `u.concat(v)` is `uv` as written: `v` occupies the low positions.
    pub fn concat(&self, v: &Word) -> Word {
        let mut out = Vec::with_capacity(self.len() + v.len());
        out.extend_from_slice(&v.0);
        out.extend_from_slice(&self.0);
        Word(out)
    }

    /// Drops position 1.
    pub fn without_first(&self) -> Word {
        Word(self.0.get(1..).unwrap_or(&[]).to_vec())
    }
}

/// Handle to a monoid with a chosen generating set and factorization map.
///
/// `eta(x)` returns `(remainder, last generator)`; for `x = 1` it must be
/// `(1, 1)`.
pub trait FactorableMonoid {
    type Elem: Clone + Eq + Hash + Ord + Debug;

    fn one(&self) -> Self::Elem;
    fn generators(&self) -> Vec<Self::Elem>;
    fn is_generator(&self, x: &Self::Elem) -> bool;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn norm(&self, x: &Self::Elem) -> usize;
    fn eta(&self, x: &Self::Elem) -> (Self::Elem, Self::Elem);
    fn render(&self, x: &Self::Elem) -> String;

    fn is_one(&self, x: &Self::Elem) -> bool {
        *x == self.one()
    }

    /// `(a, b)` is stable when `eta(ab) = (a, b)`.
    fn is_stable(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        let (x, y) = self.eta(&self.mul(a, b));
        x == *a && y == *b
    }

    /// All elements, for finite monoids.
    fn elements(&self) -> Option<Vec<Self::Elem>> {
        None
    }
}

/// Elements of word length at most `radius`, with their word lengths.
/// Insertion order is BFS order, which is deterministic given the generator
/// order.
#[derive(Clone, Debug)]
pub struct Ball<E> {
    pub radius: usize,
    pub elements: Vec<E>,
    pub dist: HashMap<E, usize>,
}

impl<E: Clone + Eq + Hash> Ball<E> {
    pub fn new<M: FactorableMonoid<Elem = E>>(h: &M, radius: usize) -> Self {
        let gens = h.generators();
        let one = h.one();
        let mut dist = HashMap::from([(one.clone(), 0)]);
        let mut elements = vec![one.clone()];
        let mut queue = VecDeque::from([one]);
        while let Some(x) = queue.pop_front() {
            let d = dist[&x];
            if d == radius {
                continue;
            }
            for g in &gens {
                let y = h.mul(&x, g);
                if !dist.contains_key(&y) {
                    dist.insert(y.clone(), d + 1);
                    elements.push(y.clone());
                    queue.push_back(y);
                }
            }
        }
        Self { radius, elements, dist }
    }

    pub fn norm(&self, x: &E) -> Option<usize> {
        self.dist.get(x).copied()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Elements of exactly the given word length.
    pub fn sphere(&self, n: usize) -> impl Iterator<Item = &E> {
        self.elements.iter().filter(move |x| self.dist[*x] == n)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BfsNorm {
    Exact(usize),
    BeyondRadius,
}

/// Word length by breadth-first search, independent of `h.norm`.
pub fn word_norm_bfs<M: FactorableMonoid>(h: &M, x: &M::Elem, radius: usize) -> BfsNorm {
    match Ball::new(h, radius).norm(x) {
        Some(n) => BfsNorm::Exact(n),
        None => BfsNorm::BeyondRadius,
    }
}

/// Failures of the factorization-map axioms on a ball.
#[derive(Clone, Debug, Default)]
pub struct HandleReport {
    pub checked: usize,
    /// `(axiom, witness)` pairs; axiom is `F1`, `F2`, `F3` or `norm`.
    pub violations: Vec<(String, String)>,
}

impl HandleReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks, for every element of word length at most `radius`: the product
/// of the two factors returns the element (F1); their word lengths add up
/// (F2); the right factor is a generator unless the element is the unit
/// (F3); and `h.norm` agrees with breadth-first word length.
pub fn validate_handle<M: FactorableMonoid>(h: &M, radius: usize) -> HandleReport {
    let ball = Ball::new(h, radius);
    let mut rep = HandleReport::default();
    for x in &ball.elements {
        rep.checked += 1;
        let n = ball.dist[x];
        let (a, b) = h.eta(x);
        if h.mul(&a, &b) != *x {
            rep.violations.push(("F1".into(), h.render(x)));
        }
        match (ball.norm(&a), ball.norm(&b)) {
            (Some(na), Some(nb)) if na + nb == n => {}
            _ => rep.violations.push(("F2".into(), h.render(x))),
        }
        if !h.is_one(x) && !h.is_generator(&b) {
            rep.violations.push(("F3".into(), h.render(x)));
        }
        if h.norm(x) != n {
            rep.violations.push(("norm".into(), h.render(x)));
        }
    }
    rep
}

/// A monoid given by its multiplication table. Elements are indices.
#[derive(Clone, Debug)]
pub struct FiniteTable {
    pub names: Vec<String>,
    pub table: Vec<Vec<usize>>,
    pub unit: usize,
    pub generators: Vec<usize>,
    is_gen: Vec<bool>,
    norms: Vec<usize>,
}

impl FiniteTable {
    pub fn new(
        names: Vec<String>,
        table: Vec<Vec<usize>>,
        unit: usize,
        generators: Vec<usize>,
    ) -> Result<Self> {
        let n = names.len();
        if n == 0 || table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidTable("table must be square and match the element list".into()));
        }
        if unit >= n || table.iter().flatten().any(|&v| v >= n) {
            return Err(Error::InvalidTable("entry out of range".into()));
        }
        for x in 0..n {
            if table[unit][x] != x || table[x][unit] != x {
                return Err(Error::InvalidTable(format!("`{}` is not a unit", names[unit])));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidTable(format!(
                            "not associative at ({}, {}, {})",
                            names[a], names[b], names[c]
                        )));
                    }
                }
            }
        }
        let mut is_gen = vec![false; n];
        for &g in &generators {
            if g >= n || g == unit {
                return Err(Error::InvalidTable("bad generator".into()));
            }
            if std::mem::replace(&mut is_gen[g], true) {
                return Err(Error::InvalidTable("duplicate generator".into()));
            }
        }
        let mut norms = vec![usize::MAX; n];
        norms[unit] = 0;
        let mut queue = VecDeque::from([unit]);
        while let Some(x) = queue.pop_front() {
            for &g in &generators {
                let y = table[x][g];
                if norms[y] == usize::MAX {
                    norms[y] = norms[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        if let Some(x) = norms.iter().position(|&d| d == usize::MAX) {
            return Err(Error::InvalidTable(format!("`{}` is not generated", names[x])));
        }
        Ok(Self { names, table, unit, generators, is_gen, norms })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn norm(&self, x: usize) -> usize {
        self.norms[x]
    }

    pub fn is_generator(&self, x: usize) -> bool {
        self.is_gen[x]
    }

    pub fn index(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownLetter(name.to_string()))
    }
}

/// A finite monoid together with a factorization map `eta[x] = (rest, last)`.
#[derive(Clone, Debug)]
pub struct FiniteMonoid {
    pub table: FiniteTable,
    pub eta: Vec<(usize, usize)>,
}

impl FiniteMonoid {
    pub fn new(table: FiniteTable, eta: Vec<(usize, usize)>) -> Result<Self> {
        if eta.len() != table.len() || eta.iter().any(|&(a, b)| a >= table.len() || b >= table.len()) {
            return Err(Error::InvalidTable("factorization map must cover every element".into()));
        }
        Ok(Self { table, eta })
    }

    /// Parses a word of element names (left to right) into its product.
    pub fn parse(&self, text: &str) -> Result<usize> {
        let mut acc = self.table.unit;
        for tok in text.split_whitespace() {
            let x = if tok == "1" { self.table.unit } else { self.table.index(tok)? };
            acc = self.table.mul(acc, x);
        }
        Ok(acc)
    }
}

impl FactorableMonoid for FiniteMonoid {
    type Elem = usize;

    fn one(&self) -> usize {
        self.table.unit
    }

    fn generators(&self) -> Vec<usize> {
        self.table.generators.clone()
    }

    fn is_generator(&self, x: &usize) -> bool {
        self.table.is_generator(*x)
    }

    fn mul(&self, a: &usize, b: &usize) -> usize {
        self.table.mul(*a, *b)
    }

    fn norm(&self, x: &usize) -> usize {
        self.table.norm(*x)
    }

    fn eta(&self, x: &usize) -> (usize, usize) {
        self.eta[*x]
    }

    fn render(&self, x: &usize) -> String {
        self.table.names[*x].clone()
    }

    fn elements(&self) -> Option<Vec<usize>> {
        Some((0..self.table.len()).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2(eta_one: (usize, usize)) -> FiniteMonoid {
        let t = FiniteTable::new(
            vec!["1".into(), "t".into()],
            vec![vec![0, 1], vec![1, 0]],
            0,
            vec![1],
        )
        .unwrap();
        FiniteMonoid::new(t, vec![eta_one, (0, 1)]).unwrap()
    }

    #[test]
    fn word_positions_and_concat() {
        let a = Alphabet::new(["a", "b", "c"]).unwrap();
        let w = a.parse_word("a b c").unwrap();
        assert_eq!(w.at(1), Some(2));
        assert_eq!(w.at(3), Some(0));
        assert_eq!(w.at(4), None);
        let u = a.parse_word("a").unwrap();
        let v = a.parse_word("b").unwrap();
        assert_eq!(a.render(&a.concat(&u, &v).unwrap()), "a b");
        assert_eq!(a.parse_word("1").unwrap(), Word::empty());
        assert_eq!(a.render(&Word::empty()), "1");
    }

    #[test]
    fn foreign_letters_rejected() {
        let a = Alphabet::new(["a"]).unwrap();
        assert!(a.parse_word("a x").is_err());
        assert!(matches!(
            a.concat(&Word::letter(0), &Word::letter(5)),
            Err(Error::AlphabetMismatch)
        ));
        assert!(Alphabet::new(["a", "a"]).is_err());
        assert!(Alphabet::new(["1"]).is_err());
    }

    #[test]
    fn z2_handle_valid() {
        let m = z2((0, 0));
        let rep = validate_handle(&m, 4);
        assert!(rep.passed(), "{:?}", rep.violations);
        assert_eq!(word_norm_bfs(&m, &1, 4), BfsNorm::Exact(1));
    }

    #[test]
    fn broken_unit_factorization_detected() {
        let m = z2((1, 1));
        let rep = validate_handle(&m, 4);
        assert!(rep.violations.iter().any(|(ax, w)| ax == "F2" && w == "1"));
    }

    #[test]
    fn non_associative_table_rejected() {
        let r = FiniteTable::new(
            vec!["1".into(), "x".into(), "y".into()],
            vec![vec![0, 1, 2], vec![1, 2, 1], vec![2, 2, 2]],
            0,
            vec![1],
        );
        assert!(r.is_err());
    }
}
