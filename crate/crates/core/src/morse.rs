//! Reduced bar complex cells, the matching induced by a factorization map,
//! redundant chains, three independent descriptions of the Morse
//! differential, and integral homology.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::factorability::apply_f;
use crate::foundation::FactorableMonoid;
use crate::indexseq::{enumerate_small, is_reduced, is_rightmost, is_small, xi_with, IndexSequence, XiOutcome};

/// A bar cell `[m_n | ... | m_1]` stored with `m_1` at index 0.
pub type Cell<E> = Vec<E>;

/// Finite formal sum with no zero coefficients stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain<K: Ord>(BTreeMap<K, i64>);

impl<K: Ord> Default for Chain<K> {
    fn default() -> Self {
        Self(BTreeMap::new())
    }
}

impl<K: Ord + Clone> Chain<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, k: K, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.0.entry(k.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.0.remove(&k);
        }
    }

    pub fn add_chain(&mut self, other: &Chain<K>, scale: i64) {
        for (k, c) in &other.0 {
            self.add(k.clone(), c * scale);
        }
    }

    pub fn coefficient(&self, k: &K) -> i64 {
        self.0.get(k).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &i64)> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// `d_i`: `None` when the result would contain the unit.
pub fn face<M: FactorableMonoid>(h: &M, cell: &[M::Elem], i: usize) -> Result<Option<Cell<M::Elem>>> {
    let n = cell.len();
    if i > n {
        return Err(Error::IndexOutOfRange { index: i, min: 0, max: n });
    }
    Ok(face_unchecked(h, cell, i))
}

fn face_unchecked<M: FactorableMonoid>(h: &M, cell: &[M::Elem], i: usize) -> Option<Cell<M::Elem>> {
    let n = cell.len();
    if i == 0 {
        return Some(cell[1..].to_vec());
    }
    if i == n {
        return Some(cell[..n - 1].to_vec());
    }
    let p = h.mul(&cell[i], &cell[i - 1]);
    if h.is_one(&p) {
        return None;
    }
    let mut out = Vec::with_capacity(n - 1);
    out.extend_from_slice(&cell[..i - 1]);
    out.push(p);
    out.extend_from_slice(&cell[i + 1..]);
    Some(out)
}

fn sign(k: usize) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Alternating sum of faces.
pub fn bar_boundary<M: FactorableMonoid>(h: &M, cell: &[M::Elem]) -> Chain<Cell<M::Elem>> {
    let mut out = Chain::new();
    if cell.is_empty() {
        return out;
    }
    for i in 0..=cell.len() {
        if let Some(f) = face_unchecked(h, cell, i) {
            out.add(f, sign(i));
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CellStatus {
    Essential,
    /// Height `h`: the entries at indices `h` and `h-1` form a stable pair.
    Collapsible(usize),
    /// Height `h`: the entry at index `h` is not a generator.
    Redundant(usize),
}

/// Length of the longest essential right part of the cell.
pub fn height<M: FactorableMonoid>(h: &M, cell: &[M::Elem]) -> usize {
    let mut k = 0;
    while k < cell.len() && h.is_generator(&cell[k]) && (k == 0 || !h.is_stable(&cell[k], &cell[k - 1])) {
        k += 1;
    }
    k
}

pub fn classify<M: FactorableMonoid>(h: &M, cell: &[M::Elem]) -> CellStatus {
    let k = height(h, cell);
    if k == cell.len() {
        CellStatus::Essential
    } else if k >= 1 && h.is_stable(&cell[k], &cell[k - 1]) {
        CellStatus::Collapsible(k)
    } else {
        CellStatus::Redundant(k)
    }
}

pub fn is_essential<M: FactorableMonoid>(h: &M, cell: &[M::Elem]) -> bool {
    classify(h, cell) == CellStatus::Essential
}

pub fn matching_mu<M: FactorableMonoid>(h: &M, cell: &[M::Elem]) -> Result<Cell<M::Elem>> {
    match classify(h, cell) {
        CellStatus::Essential => Err(Error::EssentialCell),
        CellStatus::Collapsible(k) => Ok(face_unchecked(h, cell, k).expect("stable pairs multiply to a non-unit")),
        CellStatus::Redundant(k) => {
            let (bar, last) = h.eta(&cell[k]);
            let mut out = Vec::with_capacity(cell.len() + 1);
            out.extend_from_slice(&cell[..k]);
            out.push(last);
            out.push(bar);
            out.extend_from_slice(&cell[k + 1..]);
            Ok(out)
        }
    }
}

/// `f_i` on a cell; `None` if a unit entry appears.
pub fn apply_f_cell<M: FactorableMonoid>(h: &M, cell: &[M::Elem], i: usize) -> Option<Cell<M::Elem>> {
    let mut t = cell.to_vec();
    apply_f(h, &mut t, i);
    if h.is_one(&t[i]) || h.is_one(&t[i - 1]) {
        None
    } else {
        Some(t)
    }
}

/// `f_I` on a cell, rightmost entry first; zero propagates.
pub fn f_sequence_cell<M: FactorableMonoid>(h: &M, s: &IndexSequence, cell: &[M::Elem]) -> Option<Cell<M::Elem>> {
    let mut t = cell.to_vec();
    for &i in s.entries().iter().rev() {
        t = apply_f_cell(h, &t, i)?;
    }
    Some(t)
}

/// Essential cells of a degree: generator tuples whose neighbouring pairs
/// are all unstable. Sorted by written order.
pub fn visy_basis<M: FactorableMonoid>(h: &M, degree: usize) -> Vec<Cell<M::Elem>> {
    let gens = h.generators();
    let mut cells: Vec<Cell<M::Elem>> = vec![vec![]];
    for k in 0..degree {
        let mut next = Vec::new();
        for c in &cells {
            for g in &gens {
                if k == 0 || !h.is_stable(g, &c[k - 1]) {
                    let mut d = c.clone();
                    d.push(g.clone());
                    next.push(d);
                }
            }
        }
        cells = next;
    }
    cells.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
    cells
}

/// Projection of `d` applied to the signed sum of `f_I(x)` over `lambda`.
/// Sequences with entries above `degree - 1` are ignored.
pub fn visy_differential_lambda<M: FactorableMonoid>(
    h: &M,
    cell: &[M::Elem],
    lambda: &[IndexSequence],
) -> Chain<Cell<M::Elem>> {
    let n = cell.len();
    let mut out = Chain::new();
    if n == 0 {
        return out;
    }
    for s in lambda {
        if s.max_entry() > n - 1 {
            continue;
        }
        let Some(y) = f_sequence_cell(h, s, cell) else { continue };
        let sg = sign(s.len());
        for j in 0..=n {
            if let Some(z) = face_unchecked(h, &y, j) {
                if is_essential(h, &z) {
                    out.add(z, sg * sign(j));
                }
            }
        }
    }
    out
}

/// Sum over reduced `(j, i_r, ..., i_1)` such that every intermediate face
/// `d_{i_k} f_{i_{k-1}} ... f_{i_1}(x)` is redundant and the final face
/// `d_j f_{i_r} ... f_{i_1}(x)` is essential, with sign `(-1)^(j+r)`.
pub fn visy_differential_coherent<M: FactorableMonoid>(h: &M, cell: &[M::Elem]) -> Result<Chain<Cell<M::Elem>>> {
    let n = cell.len();
    let mut out = Chain::new();
    if n == 0 {
        return Ok(out);
    }
    let limit = 1usize << n;
    coherent_walk(h, cell, None, 0, limit, &mut out)?;
    Ok(out)
}

fn coherent_walk<M: FactorableMonoid>(
    h: &M,
    y: &[M::Elem],
    last: Option<usize>,
    r: usize,
    limit: usize,
    out: &mut Chain<Cell<M::Elem>>,
) -> Result<()> {
    if r > limit {
        return Err(Error::BudgetExhausted(limit));
    }
    let n = y.len();
    for j in 0..=n {
        if Some(j) == last {
            continue;
        }
        let Some(z) = face_unchecked(h, y, j) else { continue };
        match classify(h, &z) {
            CellStatus::Essential => out.add(z, sign(j + r)),
            CellStatus::Redundant(_) if j > 0 && j < n => {
                if let Some(next) = apply_f_cell(h, y, j) {
                    coherent_walk(h, &next, Some(j), r + 1, limit, out)?;
                }
            }
            _ => {}
        }
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Essential,
    Collapsible,
    Redundant,
}

/// A based complex with an acyclic matching.
pub trait MatchedComplex {
    type Cell: Clone + Ord + Hash + fmt::Debug;
    fn boundary(&self, c: &Self::Cell) -> Chain<Self::Cell>;
    fn status(&self, c: &Self::Cell) -> Status;
    /// Matched partner of a non-essential cell.
    fn partner(&self, c: &Self::Cell) -> Self::Cell;
}

/// The bar complex of a factorable monoid with its matching.
pub struct BarMatching<'a, M>(pub &'a M);

impl<M: FactorableMonoid> MatchedComplex for BarMatching<'_, M> {
    type Cell = Cell<M::Elem>;

    fn boundary(&self, c: &Self::Cell) -> Chain<Self::Cell> {
        bar_boundary(self.0, c)
    }

    fn status(&self, c: &Self::Cell) -> Status {
        match classify(self.0, c) {
            CellStatus::Essential => Status::Essential,
            CellStatus::Collapsible(_) => Status::Collapsible,
            CellStatus::Redundant(_) => Status::Redundant,
        }
    }

    fn partner(&self, c: &Self::Cell) -> Self::Cell {
        matching_mu(self.0, c).expect("non-essential cell")
    }
}

/// Morse differential by summing over all zigzag paths from the boundary of
/// `x` through redundant cells to essential cells.
pub fn morse_differential_generic<C: MatchedComplex>(cx: &C, x: &C::Cell) -> Result<Chain<C::Cell>> {
    let mut memo: HashMap<C::Cell, Chain<C::Cell>> = HashMap::new();
    let mut active: HashSet<C::Cell> = HashSet::new();
    let mut out = Chain::new();
    for (z, a) in cx.boundary(x).iter() {
        match cx.status(z) {
            Status::Essential => out.add(z.clone(), *a),
            Status::Redundant => {
                let v = flow_from(cx, z, &mut memo, &mut active)?;
                out.add_chain(&v, *a);
            }
            Status::Collapsible => {}
        }
    }
    Ok(out)
}

/// Essential chain reached from a redundant cell with unit weight.
fn flow_from<C: MatchedComplex>(
    cx: &C,
    z: &C::Cell,
    memo: &mut HashMap<C::Cell, Chain<C::Cell>>,
    active: &mut HashSet<C::Cell>,
) -> Result<Chain<C::Cell>> {
    if let Some(v) = memo.get(z) {
        return Ok(v.clone());
    }
    if !active.insert(z.clone()) {
        return Err(Error::NotZCompatible(format!("cycle of redundant cells through {z:?}")));
    }
    let p = cx.partner(z);
    let b = cx.boundary(&p);
    let eps = b.coefficient(z);
    if eps.abs() != 1 {
        return Err(Error::NotZCompatible(format!("{z:?} has incidence {eps}")));
    }
    let base = -eps;
    let mut out = Chain::new();
    for (w, c) in b.iter() {
        if w == z {
            continue;
        }
        match cx.status(w) {
            Status::Essential => out.add(w.clone(), base * c),
            Status::Redundant => {
                let v = flow_from(cx, w, memo, active)?;
                out.add_chain(&v, base * c);
            }
            Status::Collapsible => {}
        }
    }
    active.remove(z);
    memo.insert(z.clone(), out.clone());
    Ok(out)
}

/// Applies `x -> x - eps * d(mu(x))` to redundant terms, drops collapsible
/// terms, and repeats until only essential cells remain.
pub fn theta_reduce<C: MatchedComplex>(cx: &C, chain: &Chain<C::Cell>, budget: usize) -> Result<Chain<C::Cell>> {
    let mut cur = chain.clone();
    for _ in 0..budget {
        if cur.iter().all(|(c, _)| cx.status(c) == Status::Essential) {
            return Ok(cur);
        }
        let mut next = Chain::new();
        for (c, a) in cur.iter() {
            match cx.status(c) {
                Status::Essential => next.add(c.clone(), *a),
                Status::Collapsible => {}
                Status::Redundant => {
                    let b = cx.boundary(&cx.partner(c));
                    let eps = b.coefficient(c);
                    if eps.abs() != 1 {
                        return Err(Error::NotZCompatible(format!("{c:?}")));
                    }
                    next.add(c.clone(), *a);
                    next.add_chain(&b, -eps * a);
                }
            }
        }
        cur = next;
    }
    Err(Error::BudgetExhausted(budget))
}

/// Is every intermediate face along `s` redundant?
pub fn is_coherent<M: FactorableMonoid>(h: &M, cell: &[M::Elem], s: &IndexSequence) -> bool {
    let mut y = cell.to_vec();
    for &i in s.entries().iter().rev() {
        match face_unchecked(h, &y, i) {
            Some(z) if matches!(classify(h, &z), CellStatus::Redundant(_)) => {}
            _ => return false,
        }
        match apply_f_cell(h, &y, i) {
            Some(n) => y = n,
            None => return false,
        }
    }
    true
}

/// Signed sum of `f_I(x)` over the non-coherent sequences of `lambda`.
pub fn prp_sum<M: FactorableMonoid>(h: &M, cell: &[M::Elem], lambda: &[IndexSequence]) -> Chain<Cell<M::Elem>> {
    let n = cell.len();
    let mut out = Chain::new();
    for s in lambda {
        if n == 0 || s.max_entry() > n - 1 || is_coherent(h, cell, s) {
            continue;
        }
        if let Some(y) = f_sequence_cell(h, s, cell) {
            out.add(y, sign(s.len()));
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum XiCellOutcome {
    /// `f_I(x)` is zero.
    Fixed,
    Mapped(IndexSequence),
    Unresolved,
}

/// The cancelling pairing on non-coherent sequences for the cell `x`.
pub fn xi_cell<M: FactorableMonoid>(h: &M, cell: &[M::Elem], s: &IndexSequence) -> XiCellOutcome {
    if f_sequence_cell(h, s, cell).is_none() {
        return XiCellOutcome::Fixed;
    }
    let stable_at = |t: usize| {
        let i = s.at(t);
        if i < 2 {
            return false;
        }
        let prefix = IndexSequence::new(s.entries()[s.len() - t..].to_vec());
        match f_sequence_cell(h, &prefix, cell) {
            Some(y) => h.is_stable(&y[i - 1], &y[i - 2]),
            None => false,
        }
    };
    match xi_with(s, stable_at) {
        XiOutcome::Mapped(t) => XiCellOutcome::Mapped(t),
        XiOutcome::Unresolved => XiCellOutcome::Unresolved,
    }
}

#[derive(Clone, Debug, Default)]
pub struct RedundantChainReport {
    /// Distinct redundant interior faces of generator tuples.
    pub launches: usize,
    /// Distinct redundant cells reached.
    pub cells: usize,
    pub longest_chain: usize,
    /// Height-plus-one sequences of norm-preserving chains.
    pub sequences: BTreeSet<IndexSequence>,
    pub violations: Vec<String>,
}

impl RedundantChainReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Follows every chain of redundant cells `z -> w` (with `w` a redundant
/// face of the partner of `z`) starting at redundant interior faces of
/// generator tuples of degree `2..=max_degree`. Certifies that no chain
/// cycles or exceeds `max_len`, and that the heights along norm-preserving
/// chains form right-most, reduced, small sequences.
pub fn redundant_chains<M: FactorableMonoid>(h: &M, max_degree: usize, max_len: usize) -> RedundantChainReport
where
    M::Elem: Hash,
{
    let gens = h.generators();
    let mut rep = RedundantChainReport::default();
    let mut launches: BTreeSet<Cell<M::Elem>> = BTreeSet::new();
    for n in 2..=max_degree {
        let mut idx = vec![0usize; n];
        loop {
            let t: Vec<M::Elem> = idx.iter().map(|&k| gens[k].clone()).collect();
            for i in 1..n {
                if let Some(z) = face_unchecked(h, &t, i) {
                    if matches!(classify(h, &z), CellStatus::Redundant(_)) {
                        launches.insert(z);
                    }
                }
            }
            let mut k = 0;
            while k < n {
                idx[k] += 1;
                if idx[k] < gens.len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == n {
                break;
            }
        }
    }
    rep.launches = launches.len();

    let mut depth_memo: HashMap<Cell<M::Elem>, usize> = HashMap::new();
    let mut seq_memo: HashMap<Cell<M::Elem>, BTreeSet<Vec<usize>>> = HashMap::new();
    for z in &launches {
        let mut active = HashSet::new();
        match chain_depth(h, z, &mut depth_memo, &mut active, max_len) {
            Ok(d) => rep.longest_chain = rep.longest_chain.max(d),
            Err(e) => {
                rep.violations.push(format!("from {z:?}: {e}"));
                continue;
            }
        }
        let seqs = np_sequences(h, z, &mut seq_memo);
        for s in seqs {
            let mut w = s.clone();
            w.reverse();
            rep.sequences.insert(IndexSequence::new(w));
        }
    }
    rep.cells = depth_memo.len();
    for s in &rep.sequences {
        if !(is_rightmost(s) && is_reduced(s) && is_small(s)) {
            rep.violations.push(format!("height sequence {s} is not right-most, reduced and small"));
        }
    }
    rep
}

fn redundant_successors<M: FactorableMonoid>(h: &M, z: &Cell<M::Elem>) -> Vec<(usize, Cell<M::Elem>)> {
    let p = matching_mu(h, z).expect("redundant cell");
    let mut out = Vec::new();
    for i in 0..=p.len() {
        if let Some(w) = face_unchecked(h, &p, i) {
            if w != *z && matches!(classify(h, &w), CellStatus::Redundant(_)) {
                out.push((i, w));
            }
        }
    }
    out
}

fn chain_depth<M: FactorableMonoid>(
    h: &M,
    z: &Cell<M::Elem>,
    memo: &mut HashMap<Cell<M::Elem>, usize>,
    active: &mut HashSet<Cell<M::Elem>>,
    max_len: usize,
) -> Result<usize>
where
    M::Elem: Hash,
{
    if let Some(&d) = memo.get(z) {
        return Ok(d);
    }
    if active.len() > max_len {
        return Err(Error::BudgetExhausted(max_len));
    }
    if !active.insert(z.clone()) {
        return Err(Error::NotZCompatible("cycle of redundant cells".into()));
    }
    let mut best = 1;
    for (_, w) in redundant_successors(h, z) {
        best = best.max(1 + chain_depth(h, &w, memo, active, max_len)?);
    }
    active.remove(z);
    memo.insert(z.clone(), best);
    Ok(best)
}

/// Height-plus-one lists (in chain order, excluding `z`) of every
/// norm-preserving chain starting at `z`, including the empty one.
fn np_sequences<M: FactorableMonoid>(
    h: &M,
    z: &Cell<M::Elem>,
    memo: &mut HashMap<Cell<M::Elem>, BTreeSet<Vec<usize>>>,
) -> BTreeSet<Vec<usize>>
where
    M::Elem: Hash,
{
    if let Some(s) = memo.get(z) {
        return s.clone();
    }
    let total: usize = z.iter().map(|x| h.norm(x)).sum();
    let mut out = BTreeSet::from([vec![]]);
    for (_, w) in redundant_successors(h, z) {
        if w.iter().map(|x| h.norm(x)).sum::<usize>() != total {
            continue;
        }
        let hw = height(h, &w) + 1;
        for rest in np_sequences(h, &w, memo) {
            let mut v = vec![hw];
            v.extend(rest);
            out.insert(v);
        }
    }
    memo.insert(z.clone(), out.clone());
    out
}

/// Sparse integer matrix stored by columns.
#[derive(Clone, Debug, Default)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: usize,
    pub columns: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    fn dense(&self) -> Vec<Vec<BigInt>> {
        let mut a = vec![vec![BigInt::zero(); self.cols]; self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, v) in col {
                a[i][j] += BigInt::from(v);
            }
        }
        a
    }
}

/// Free chain complex through degree `ranks.len() - 1`.
#[derive(Clone, Debug)]
pub struct IntegerChainComplex {
    pub labels: Vec<Vec<String>>,
    /// `differentials[k]` maps degree `k` to degree `k - 1`; index 0 is the
    /// zero map.
    pub differentials: Vec<SparseMatrix>,
}

impl IntegerChainComplex {
    pub fn ranks(&self) -> Vec<usize> {
        self.labels.iter().map(Vec::len).collect()
    }

    pub fn top_degree(&self) -> usize {
        self.labels.len() - 1
    }

    /// Builds matrices from bases and a differential that must stay inside
    /// the next basis.
    pub fn build<K, F>(bases: Vec<Vec<K>>, render: impl Fn(&K) -> String, diff: F) -> Result<Self>
    where
        K: Ord + Clone + Hash + fmt::Debug,
        F: Fn(&K) -> Result<Chain<K>>,
    {
        let mut differentials = vec![SparseMatrix { rows: 0, cols: bases[0].len(), columns: vec![vec![]; bases[0].len()] }];
        for k in 1..bases.len() {
            let index: HashMap<&K, usize> = bases[k - 1].iter().enumerate().map(|(i, c)| (c, i)).collect();
            let mut columns = Vec::with_capacity(bases[k].len());
            for c in &bases[k] {
                let mut col = Vec::new();
                for (z, v) in diff(c)?.iter() {
                    let i = index
                        .get(z)
                        .ok_or_else(|| Error::NotAComplex(format!("{z:?} is not a basis cell")))?;
                    col.push((*i, *v));
                }
                col.sort_unstable();
                columns.push(col);
            }
            differentials.push(SparseMatrix { rows: bases[k - 1].len(), cols: bases[k].len(), columns });
        }
        let labels = bases.iter().map(|b| b.iter().map(&render).collect()).collect();
        Ok(Self { labels, differentials })
    }

    /// Verifies that consecutive differentials compose to zero.
    pub fn check_d_squared(&self) -> Result<()> {
        for k in 2..self.differentials.len() {
            let (upper, lower) = (&self.differentials[k], &self.differentials[k - 1]);
            for (j, col) in upper.columns.iter().enumerate() {
                let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
                for &(m, v) in col {
                    for &(i, w) in &lower.columns[m] {
                        *acc.entry(i).or_insert(0) += v * w;
                    }
                }
                if let Some((i, _)) = acc.iter().find(|(_, v)| **v != 0) {
                    return Err(Error::NotAComplex(format!(
                        "d∘d ≠ 0 from degree {k}: {} -> {}",
                        self.labels[k][j],
                        self.labels[k - 2][*i]
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Rank and invariant factors (absolute values, divisibility chain) of an
/// integer matrix.
pub fn smith_invariants(m: &SparseMatrix) -> (usize, Vec<BigInt>) {
    let mut a = m.dense();
    let (r, c) = (m.rows, m.cols);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < r && t < c {
        let Some((pi, pj)) = min_nonzero(&a, t, r, c) else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut dirty = false;
            for i in t + 1..r {
                if !a[i][t].is_zero() {
                    let q = &a[i][t] / &a[t][t];
                    for k in t..c {
                        let d = &q * &a[t][k];
                        a[i][k] -= d;
                    }
                    dirty |= !a[i][t].is_zero();
                }
            }
            for j in t + 1..c {
                if !a[t][j].is_zero() {
                    let q = &a[t][j] / &a[t][t];
                    for row in a.iter_mut().take(r).skip(t) {
                        let d = &q * &row[t];
                        row[j] -= d;
                    }
                    dirty |= !a[t][j].is_zero();
                }
            }
            if dirty {
                // Move the smallest remaining entry of row/column t to the pivot.
                let mut best: Option<(usize, usize)> = None;
                let mut best_v = a[t][t].abs();
                for i in t + 1..r {
                    if !a[i][t].is_zero() && a[i][t].abs() < best_v {
                        best_v = a[i][t].abs();
                        best = Some((i, t));
                    }
                }
                for j in t + 1..c {
                    if !a[t][j].is_zero() && a[t][j].abs() < best_v {
                        best_v = a[t][j].abs();
                        best = Some((t, j));
                    }
                }
                match best {
                    Some((i, j)) if j == t => a.swap(t, i),
                    Some((_, j)) => {
                        for row in a.iter_mut() {
                            row.swap(t, j);
                        }
                    }
                    None => {}
                }
                continue;
            }
            // Row and column clear: enforce divisibility of the rest.
            let p = a[t][t].clone();
            let bad = (t + 1..r).find(|&i| (t + 1..c).any(|j| !(&a[i][j] % &p).is_zero()));
            match bad {
                Some(i) => {
                    for k in t..c {
                        let v = a[i][k].clone();
                        a[t][k] += v;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    (diag.len(), diag)
}

fn min_nonzero(a: &[Vec<BigInt>], t: usize, r: usize, c: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for (i, row) in a.iter().enumerate().take(r).skip(t) {
        for (j, v) in row.iter().enumerate().take(c).skip(t) {
            if !v.is_zero() {
                let av = v.abs();
                if best.as_ref().is_none_or(|b| av < b.2) {
                    let unit = av.is_one();
                    best = Some((i, j, av));
                    if unit {
                        return best.map(|(i, j, _)| (i, j));
                    }
                }
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyGroup {
    pub degree: usize,
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            parts.push("0".into());
        }
        write!(f, "H_{} = {}", self.degree, parts.join(" (+) "))
    }
}

/// `H_k` for `k < min(max_degree, top degree)`; the top degree of the
/// complex lacks the incoming differential and is not reported.
pub fn homology(cx: &IntegerChainComplex, max_degree: usize) -> Result<Vec<HomologyGroup>> {
    cx.check_d_squared()?;
    let upto = max_degree.min(cx.top_degree());
    let snf: Vec<(usize, Vec<BigInt>)> = cx.differentials.iter().take(upto + 1).map(smith_invariants).collect();
    let ranks = cx.ranks();
    Ok((0..upto)
        .map(|k| {
            let free_rank = ranks[k] - snf[k].0 - snf[k + 1].0;
            let torsion = snf[k + 1].1.iter().filter(|d| !d.is_one()).cloned().collect();
            HomologyGroup { degree: k, free_rank, torsion }
        })
        .collect())
}

/// Morse complex through `max_degree`, using the index-set formula.
pub fn visy_complex<M: FactorableMonoid>(h: &M, max_degree: usize) -> Result<IntegerChainComplex>
where
    M::Elem: Hash,
{
    let lambda = enumerate_small(max_degree.saturating_sub(1), true);
    let bases: Vec<Vec<Cell<M::Elem>>> = (0..=max_degree).map(|k| visy_basis(h, k)).collect();
    IntegerChainComplex::build(bases, |c| render_cell(h, c), |c| Ok(visy_differential_lambda(h, c, &lambda)))
}

/// The full reduced bar complex of a finite monoid through `max_degree`.
pub fn bar_complex_truncated<M: FactorableMonoid>(h: &M, max_degree: usize) -> Result<IntegerChainComplex>
where
    M::Elem: Hash,
{
    let elems: Vec<M::Elem> = h.elements().ok_or(Error::NotFinite)?.into_iter().filter(|x| !h.is_one(x)).collect();
    let mut bases: Vec<Vec<Cell<M::Elem>>> = vec![vec![vec![]]];
    for _ in 0..max_degree {
        let prev = bases.last().unwrap();
        let mut next = Vec::with_capacity(prev.len() * elems.len());
        for c in prev {
            for e in &elems {
                let mut d = c.clone();
                d.push(e.clone());
                next.push(d);
            }
        }
        bases.push(next);
    }
    IntegerChainComplex::build(bases, |c| render_cell(h, c), |c| Ok(bar_boundary(h, c)))
}

/// `[m_n|...|m_1]`.
pub fn render_cell<M: FactorableMonoid>(h: &M, c: &[M::Elem]) -> String {
    let parts: Vec<String> = c.iter().rev().map(|x| h.render(x)).collect();
    format!("[{}]", parts.join("|"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foundation::{FiniteMonoid, FiniteTable};

    fn z2() -> FiniteMonoid {
        let t = FiniteTable::new(vec!["1".into(), "t".into()], vec![vec![0, 1], vec![1, 0]], 0, vec![1]).unwrap();
        FiniteMonoid::new(t, vec![(0, 0), (0, 1)]).unwrap()
    }

    fn trivial() -> FiniteMonoid {
        let t = FiniteTable::new(vec!["1".into()], vec![vec![0]], 0, vec![]).unwrap();
        FiniteMonoid::new(t, vec![(0, 0)]).unwrap()
    }

    #[test]
    fn z2_faces() {
        let m = z2();
        assert_eq!(face(&m, &[1, 1], 1).unwrap(), None);
        assert_eq!(face(&m, &[1, 1], 0).unwrap(), Some(vec![1]));
        assert!(face(&m, &[1, 1], 3).is_err());
        assert_eq!(classify(&m, &[1, 1]), CellStatus::Essential);
    }

    #[test]
    fn z2_differentials() {
        let m = z2();
        let lambda = enumerate_small(3, true);
        assert!(visy_differential_lambda(&m, &[1], &lambda).is_zero());
        let d2 = visy_differential_lambda(&m, &[1, 1], &lambda);
        assert_eq!(d2.coefficient(&vec![1]).abs(), 2);
        assert_eq!(visy_differential_coherent(&m, &[1, 1]).unwrap(), d2);
        assert_eq!(morse_differential_generic(&BarMatching(&m), &vec![1, 1]).unwrap(), d2);
    }

    #[test]
    fn z2_homology() {
        let m = z2();
        let h: Vec<String> = homology(&visy_complex(&m, 6).unwrap(), 6).unwrap().iter().map(|g| g.to_string()).collect();
        assert_eq!(h, ["H_0 = Z", "H_1 = Z/2", "H_2 = 0", "H_3 = Z/2", "H_4 = 0", "H_5 = Z/2"]);
        let bar = bar_complex_truncated(&m, 4).unwrap();
        assert_eq!(bar.ranks(), vec![1, 1, 1, 1, 1]);
    }

    #[test]
    fn trivial_monoid_bar_ranks() {
        assert_eq!(bar_complex_truncated(&trivial(), 3).unwrap().ranks(), vec![1, 0, 0, 0]);
    }

    #[test]
    fn zero_differentials_give_free_homology() {
        let cx = IntegerChainComplex::build(
            vec![vec![0u8], vec![1u8]],
            |k| k.to_string(),
            |_| Ok(Chain::new()),
        )
        .unwrap();
        let mut cx2 = cx.clone();
        cx2.labels.push(vec![]);
        cx2.differentials.push(SparseMatrix { rows: 1, cols: 0, columns: vec![] });
        let h = homology(&cx2, 2).unwrap();
        assert_eq!(h[0].to_string(), "H_0 = Z");
        assert_eq!(h[1].to_string(), "H_1 = Z");
    }

    #[test]
    fn smith_small_cases() {
        let m = SparseMatrix { rows: 2, cols: 2, columns: vec![vec![(0, 2), (1, 4)], vec![(0, 6), (1, 8)]] };
        let (r, d) = smith_invariants(&m);
        assert_eq!(r, 2);
        assert_eq!(d, vec![BigInt::from(2), BigInt::from(4)]);
        let m = SparseMatrix { rows: 2, cols: 2, columns: vec![vec![(0, 2)], vec![(1, 3)]] };
        assert_eq!(smith_invariants(&m).1, vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn non_complex_rejected() {
        let cx = IntegerChainComplex {
            labels: vec![vec!["a".into()], vec!["b".into()], vec!["c".into()]],
            differentials: vec![
                SparseMatrix { rows: 0, cols: 1, columns: vec![vec![]] },
                SparseMatrix { rows: 1, cols: 1, columns: vec![vec![(0, 1)]] },
                SparseMatrix { rows: 1, cols: 1, columns: vec![vec![(0, 1)]] },
            ],
        };
        assert!(homology(&cx, 2).is_err());
    }
}
