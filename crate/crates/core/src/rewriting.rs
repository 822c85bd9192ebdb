//! String rewriting: systems, strategies, cycle detection, critical pairs.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::foundation::{Alphabet, Letter, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteRule {
    pub lhs: Word,
    pub rhs: Word,
}

#[derive(Clone, Debug)]
pub struct RewriteSystem {
    alphabet: Alphabet,
    rules: Vec<RewriteRule>,
}

/// One possible rewrite: `rule` applied with its match ending at position
/// `pos` (the rightmost letter of the match sits at `pos`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rewrite {
    pub rule: usize,
    pub pos: usize,
    pub result: Word,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Strategy {
    RightmostFirst,
    LeftmostFirst,
    /// Scheduled match positions, repeated cyclically. A step whose
    /// scheduled position admits no rewrite falls back to rightmost-first.
    FollowPositions(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub rule: usize,
    pub pos: usize,
    pub word: Word,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteTrace {
    pub start: Word,
    pub steps: Vec<Step>,
}

impl RewriteTrace {
    pub fn end(&self) -> &Word {
        self.steps.last().map_or(&self.start, |s| &s.word)
    }

    /// Re-applies every step and checks the recorded words.
    pub fn replay(&self, sys: &RewriteSystem) -> Result<Word> {
        let mut w = self.start.clone();
        for s in &self.steps {
            w = sys
                .apply(&w, s.rule, s.pos)
                .filter(|r| *r == s.word)
                .ok_or_else(|| Error::InvalidArgument(format!("step at pos {} does not replay", s.pos)))?;
        }
        Ok(w)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TerminationReport {
    Irreducible { trace: RewriteTrace },
    /// `cycle` starts at the repeated word and returns to it.
    CycleFound { prefix: RewriteTrace, cycle: RewriteTrace },
    BudgetExhausted { trace: RewriteTrace },
}

impl RewriteSystem {
    pub fn new(alphabet: Alphabet, rules: Vec<RewriteRule>) -> Result<Self> {
        for (i, r) in rules.iter().enumerate() {
            if r.lhs.is_empty() {
                return Err(Error::InvalidRule(format!("rule {i} has an empty left side")));
            }
            if r.lhs == r.rhs {
                return Err(Error::InvalidRule(format!("rule {i} is trivial")));
            }
            if !alphabet.contains(&r.lhs) || !alphabet.contains(&r.rhs) {
                return Err(Error::AlphabetMismatch);
            }
        }
        Ok(Self { alphabet, rules })
    }

    /// Parses rules written `"lhs -> rhs"`.
    pub fn parse(alphabet: Alphabet, rules: &[&str]) -> Result<Self> {
        let mut out = Vec::new();
        for r in rules {
            let (l, rr) = r
                .split_once("->")
                .ok_or_else(|| Error::InvalidRule(format!("missing `->` in {r:?}")))?;
            out.push(RewriteRule { lhs: alphabet.parse_word(l)?, rhs: alphabet.parse_word(rr)? });
        }
        Self::new(alphabet, out)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    pub fn render_rule(&self, i: usize) -> String {
        let r = &self.rules[i];
        format!("({}→{})", self.alphabet.render(&r.lhs), self.alphabet.render(&r.rhs))
    }

    fn matches_at(&self, w: &Word, rule: usize, pos: usize) -> bool {
        let lhs = self.rules[rule].lhs.positions();
        pos >= 1
            && pos - 1 + lhs.len() <= w.len()
            && &w.positions()[pos - 1..pos - 1 + lhs.len()] == lhs
    }

    /// Applies `rule` at `pos` if it matches there.
    pub fn apply(&self, w: &Word, rule: usize, pos: usize) -> Option<Word> {
        if rule >= self.rules.len() || !self.matches_at(w, rule, pos) {
            return None;
        }
        let r = &self.rules[rule];
        let p = w.positions();
        let mut out = Vec::with_capacity(p.len() + r.rhs.len());
        out.extend_from_slice(&p[..pos - 1]);
        out.extend_from_slice(r.rhs.positions());
        out.extend_from_slice(&p[pos - 1 + r.lhs.len()..]);
        Some(Word::from_positions(out))
    }

    /// All one-step rewrites, by position ascending from the right, then by
    /// rule index.
    pub fn rewrite_positions(&self, w: &Word) -> Vec<Rewrite> {
        let mut out = Vec::new();
        for pos in 1..=w.len() {
            for rule in 0..self.rules.len() {
                if let Some(result) = self.apply(w, rule, pos) {
                    out.push(Rewrite { rule, pos, result });
                }
            }
        }
        out
    }

    pub fn is_irreducible(&self, w: &Word) -> bool {
        (1..=w.len()).all(|pos| (0..self.rules.len()).all(|r| !self.matches_at(w, r, pos)))
    }

    fn choose(&self, w: &Word, strategy: &Strategy, step: usize) -> Option<Rewrite> {
        let mut cands = self.rewrite_positions(w);
        if cands.is_empty() {
            return None;
        }
        match strategy {
            Strategy::RightmostFirst => Some(cands.swap_remove(0)),
            Strategy::LeftmostFirst => {
                let top = cands.iter().map(|c| c.pos).max().unwrap();
                cands.into_iter().find(|c| c.pos == top)
            }
            Strategy::FollowPositions(sched) => {
                let want = if sched.is_empty() { None } else { Some(sched[step % sched.len()]) };
                match cands.iter().position(|c| Some(c.pos) == want) {
                    Some(i) => Some(cands.swap_remove(i)),
                    None => Some(cands.swap_remove(0)),
                }
            }
        }
    }

    /// Rewrites `w` for at most `budget` steps, stopping at an irreducible
    /// word or at the first repeated word.
    pub fn reduce(&self, w: &Word, budget: usize, strategy: &Strategy) -> TerminationReport {
        let mut steps: Vec<Step> = Vec::new();
        let mut seen: Vec<Word> = vec![w.clone()];
        let mut seen_set: HashSet<Word> = HashSet::from([w.clone()]);
        let mut cur = w.clone();
        for i in 0..budget {
            let Some(rw) = self.choose(&cur, strategy, i) else {
                return TerminationReport::Irreducible { trace: RewriteTrace { start: w.clone(), steps } };
            };
            cur = rw.result.clone();
            steps.push(Step { rule: rw.rule, pos: rw.pos, word: rw.result });
            if !seen_set.insert(cur.clone()) {
                let at = seen.iter().position(|x| *x == cur).unwrap();
                let prefix = RewriteTrace { start: w.clone(), steps: steps[..at].to_vec() };
                let cycle = RewriteTrace { start: cur.clone(), steps: steps[at..].to_vec() };
                return TerminationReport::CycleFound { prefix, cycle };
            }
            seen.push(cur.clone());
        }
        if self.is_irreducible(&cur) {
            return TerminationReport::Irreducible { trace: RewriteTrace { start: w.clone(), steps } };
        }
        TerminationReport::BudgetExhausted { trace: RewriteTrace { start: w.clone(), steps } }
    }

    pub fn minimality(&self) -> MinimalityReport {
        let mut rep = MinimalityReport::default();
        for (i, r) in self.rules.iter().enumerate() {
            if !self.is_irreducible(&r.rhs) {
                rep.reducible_rhs.push(i);
            }
            let lhs = r.lhs.positions();
            let reducible = self.rules.iter().enumerate().any(|(j, o)| {
                j != i && lhs.windows(o.lhs.len()).any(|win| win == o.lhs.positions())
            });
            if reducible {
                rep.reducible_lhs.push(i);
            }
        }
        for l in self.alphabet.letters() {
            if !self.is_irreducible(&Word::letter(l)) {
                rep.reducible_letters.push(l);
            }
        }
        rep
    }

    pub fn critical_pairs(&self) -> Vec<CriticalPeak> {
        let mut out = Vec::new();
        for (i, ri) in self.rules.iter().enumerate() {
            let li = ri.lhs.reading();
            for (j, rj) in self.rules.iter().enumerate() {
                let lj = rj.lhs.reading();
                // Overlap: a proper suffix of lhs_i is a proper prefix of lhs_j.
                for k in 1..li.len().min(lj.len()) {
                    if li[li.len() - k..] == lj[..k] {
                        let mut peak = li.clone();
                        peak.extend_from_slice(&lj[k..]);
                        let mut left = ri.rhs.reading();
                        left.extend_from_slice(&lj[k..]);
                        let mut right = li[..li.len() - k].to_vec();
                        right.extend(rj.rhs.reading());
                        out.push(CriticalPeak::new(peak, left, right, (i, j)));
                    }
                }
                // Containment: lhs_j occurs inside lhs_i.
                if i != j && lj.len() <= li.len() && !(li == lj && i > j) {
                    for off in 0..=li.len() - lj.len() {
                        if li[off..off + lj.len()] == lj[..] {
                            let mut right = li[..off].to_vec();
                            right.extend(rj.rhs.reading());
                            right.extend_from_slice(&li[off + lj.len()..]);
                            out.push(CriticalPeak::new(li.clone(), ri.rhs.reading(), right, (i, j)));
                        }
                    }
                }
            }
        }
        out
    }

    /// All descendants of `w` (including `w`), or `None` if more than
    /// `budget` are found.
    pub fn descendants(&self, w: &Word, budget: usize) -> (BTreeSet<Word>, bool) {
        let mut seen = BTreeSet::from([w.clone()]);
        let mut queue = VecDeque::from([w.clone()]);
        while let Some(x) = queue.pop_front() {
            for rw in self.rewrite_positions(&x) {
                if seen.insert(rw.result.clone()) {
                    if seen.len() > budget {
                        return (seen, false);
                    }
                    queue.push_back(rw.result);
                }
            }
        }
        (seen, true)
    }

    pub fn check_confluence_on_peaks(&self, budget: usize) -> ConfluenceReport {
        let peaks = self
            .critical_pairs()
            .into_iter()
            .map(|p| {
                let (ls, lc) = self.descendants(&p.left, budget);
                let (rs, rc) = self.descendants(&p.right, budget);
                let verdict = if let Some(c) = ls.intersection(&rs).next() {
                    PeakVerdict::Joinable { common: c.clone() }
                } else if lc && rc {
                    let nf = |s: &BTreeSet<Word>| s.iter().find(|x| self.is_irreducible(x)).cloned();
                    PeakVerdict::NonJoinable { left: nf(&ls), right: nf(&rs) }
                } else {
                    PeakVerdict::Undecided
                };
                (p, verdict)
            })
            .collect();
        ConfluenceReport { peaks }
    }
}

#[derive(Clone, Debug, Default)]
pub struct MinimalityReport {
    /// Rules whose right side is reducible.
    pub reducible_rhs: Vec<usize>,
    /// Rules whose left side is reducible by another rule.
    pub reducible_lhs: Vec<usize>,
    /// Letters that are themselves left sides.
    pub reducible_letters: Vec<Letter>,
}

impl MinimalityReport {
    pub fn is_minimal(&self) -> bool {
        self.reducible_rhs.is_empty() && self.reducible_lhs.is_empty()
    }

    pub fn is_strongly_minimal(&self) -> bool {
        self.is_minimal() && self.reducible_letters.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalPeak {
    pub peak: Word,
    pub left: Word,
    pub right: Word,
    pub rules: (usize, usize),
}

impl CriticalPeak {
    fn new(peak: Vec<Letter>, left: Vec<Letter>, right: Vec<Letter>, rules: (usize, usize)) -> Self {
        Self {
            peak: Word::from_reading(&peak),
            left: Word::from_reading(&left),
            right: Word::from_reading(&right),
            rules,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PeakVerdict {
    Joinable { common: Word },
    /// Both descendant sets are finite and disjoint; irreducible witnesses.
    NonJoinable { left: Option<Word>, right: Option<Word> },
    Undecided,
}

#[derive(Clone, Debug)]
pub struct ConfluenceReport {
    pub peaks: Vec<(CriticalPeak, PeakVerdict)>,
}

impl ConfluenceReport {
    pub fn all_joinable(&self) -> bool {
        self.peaks.iter().all(|(_, v)| matches!(v, PeakVerdict::Joinable { .. }))
    }
}

/// Upper bound on effective sequence lengths: 1, 4, then
/// `c(n) = 3 c(n-1) + c(n-2) + 3`.
pub fn effective_sequence_bound(n: usize) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidArgument("bound is defined for n >= 1".into()));
    }
    let (mut a, mut b) = (1u64, 4u64);
    if n == 1 {
        return Ok(a);
    }
    for _ in 2..n {
        let c = 3u64
            .checked_mul(b)
            .and_then(|x| x.checked_add(a))
            .and_then(|x| x.checked_add(3))
            .ok_or_else(|| Error::InvalidArgument("bound overflows u64".into()))?;
        a = b;
        b = c;
    }
    Ok(b)
}
