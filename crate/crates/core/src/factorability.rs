//! Local factorization tables, their normal forms, and the checks that a
//! handle really is factorable.

use crate::error::{Error, Result};
use crate::foundation::{Alphabet, Ball, FactorableMonoid, FiniteMonoid, FiniteTable, Letter, Pointed, Word};
use crate::rewriting::{RewriteRule, RewriteSystem};

/// One table entry: `phi(a, b) = (c, d)`.
pub type PhiRule = ((Pointed, Pointed), (Pointed, Pointed));

/// A map on pairs of pointed letters. Pairs without an entry are fixed,
/// except `(a, 1)` which maps to `(1, a)`.
#[derive(Clone, Debug)]
pub struct PhiTable {
    alphabet: Alphabet,
    /// Dense `(k+1)^2` table indexed by `slot(a) * (k+1) + slot(b)`.
    map: Vec<(Pointed, Pointed)>,
    /// Explicit entries as supplied, for export.
    entries: Vec<PhiRule>,
}

fn slot(p: Pointed) -> usize {
    p.map_or(0, |l| l as usize + 1)
}

impl PhiTable {
    pub fn new<I>(alphabet: Alphabet, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = PhiRule>,
    {
        let k = alphabet.len() + 1;
        let mut map = Vec::with_capacity(k * k);
        for a in 0..k {
            for b in 0..k {
                let pa = a.checked_sub(1).map(|x| x as Letter);
                let pb = b.checked_sub(1).map(|x| x as Letter);
                map.push(if pb.is_none() { (None, pa) } else { (pa, pb) });
            }
        }
        let mut seen = Vec::new();
        for (from, to) in entries {
            for p in [from.0, from.1, to.0, to.1].into_iter().flatten() {
                if p as usize >= alphabet.len() {
                    return Err(Error::InvalidTable(format!("letter index {p} out of range")));
                }
            }
            if seen.iter().any(|(f, _)| *f == from) {
                return Err(Error::InvalidTable(format!(
                    "duplicate entry for ({}, {})",
                    alphabet.render_pointed(from.0),
                    alphabet.render_pointed(from.1)
                )));
            }
            map[slot(from.0) * k + slot(from.1)] = to;
            seen.push((from, to));
        }
        Ok(Self { alphabet, map, entries: seen })
    }

    /// Parses entries given as `("x y", "u v")` name pairs.
    pub fn parse(alphabet: Alphabet, entries: &[(&str, &str)]) -> Result<Self> {
        let pair = |s: &str| -> Result<(Pointed, Pointed)> {
            let toks: Vec<&str> = s.split_whitespace().collect();
            if toks.len() != 2 {
                return Err(Error::InvalidTable(format!("expected a pair, got {s:?}")));
            }
            Ok((alphabet.pointed(toks[0])?, alphabet.pointed(toks[1])?))
        };
        let mut parsed = Vec::new();
        for (f, t) in entries {
            parsed.push((pair(f)?, pair(t)?));
        }
        Self::new(alphabet.clone(), parsed)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn entries(&self) -> &[PhiRule] {
        &self.entries
    }

    pub fn phi(&self, a: Pointed, b: Pointed) -> (Pointed, Pointed) {
        self.map[slot(a) * (self.alphabet.len() + 1) + slot(b)]
    }

    pub fn is_stable(&self, a: Letter, b: Letter) -> bool {
        self.phi(Some(a), Some(b)) == (Some(a), Some(b))
    }

    /// Unstable pairs of letters in lexicographic order.
    pub fn unstable_pairs(&self) -> Vec<(Letter, Letter)> {
        let mut out = Vec::new();
        for a in self.alphabet.letters() {
            for b in self.alphabet.letters() {
                if !self.is_stable(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Applies the table at positions `(i+1, i)` of a tuple stored with
    /// position 1 at index 0.
    pub fn phi_i(&self, tuple: &[Pointed], i: usize) -> Result<Vec<Pointed>> {
        if i < 1 || i + 1 > tuple.len() {
            return Err(Error::IndexOutOfRange { index: i, min: 1, max: tuple.len().saturating_sub(1) });
        }
        let mut t = tuple.to_vec();
        self.phi_in_place(&mut t, i);
        Ok(t)
    }

    fn phi_in_place(&self, t: &mut [Pointed], i: usize) {
        let (x, y) = self.phi(t[i], t[i - 1]);
        t[i] = x;
        t[i - 1] = y;
    }

    /// Normal form of a word. Each recursive call works on a strictly
    /// shorter word, so the procedure always terminates.
    pub fn normal_form(&self, w: &Word) -> Word {
        self.nf_extend(Word::empty(), &w.reading())
    }

    /// Normal form of a tuple that may contain units.
    pub fn normal_form_pointed(&self, t: &[Pointed]) -> Word {
        let letters: Vec<Letter> = t.iter().flatten().copied().collect();
        self.normal_form(&Word::from_positions(letters))
    }

    /// Extends a normal form `acc` by `letters` (written order).
    fn nf_extend(&self, mut acc: Word, letters: &[Letter]) -> Word {
        for (k, &a) in letters.iter().enumerate() {
            let mut t: Vec<Pointed> = Vec::with_capacity(acc.len() + 1);
            t.push(Some(a));
            t.extend(acc.positions().iter().map(|&l| Some(l)));
            for i in 1..t.len() {
                self.phi_in_place(&mut t, i);
            }
            if t.iter().all(Option::is_some) {
                acc = Word::from_positions(t.into_iter().flatten().collect());
            } else {
                // A unit appeared: renormalise the shortened word, then
                // carry on with the remaining letters.
                let short = Word::from_positions(t.into_iter().flatten().collect());
                acc = self.normal_form(&short);
                return self.nf_extend(acc, &letters[k + 1..]);
            }
        }
        acc
    }

    pub fn is_totally_stable(&self, t: &[Pointed]) -> bool {
        (1..t.len()).all(|i| self.phi(t[i], t[i - 1]) == (t[i], t[i - 1]))
    }

    /// One rule `xy -> phi(x, y)` (units dropped) per unstable pair.
    pub fn induced_rewriting_system(&self) -> RewriteSystem {
        let rules = self
            .unstable_pairs()
            .into_iter()
            .map(|(a, b)| {
                let (x, y) = self.phi(Some(a), Some(b));
                let rhs: Vec<Letter> = [x, y].into_iter().flatten().collect();
                RewriteRule { lhs: Word::from_reading(&[a, b]), rhs: Word::from_reading(&rhs) }
            })
            .collect();
        RewriteSystem::new(self.alphabet.clone(), rules).expect("induced rules are well-formed")
    }

    pub fn check_local_factorability(&self) -> AxiomReport {
        let al = &self.alphabet;
        let rp = |p: Pointed| al.render_pointed(p);
        let pointed: Vec<Pointed> = std::iter::once(None).chain(al.letters().map(Some)).collect();

        // Presentation: entries must preserve length up to units and stay
        // inside the alphabet; both hold by construction.
        let presentation = AxiomResult {
            name: "presentation".into(),
            checked: self.entries.len(),
            witnesses: vec![],
        };

        let mut idem = AxiomResult::new("idempotency");
        for &a in &pointed {
            for &b in &pointed {
                idem.checked += 1;
                let p = self.phi(a, b);
                if self.phi(p.0, p.1) != p {
                    idem.witnesses.push(format!("({}, {})", rp(a), rp(b)));
                }
            }
        }

        let mut unit = AxiomResult::new("unit");
        for a in al.letters() {
            unit.checked += 1;
            if self.phi(Some(a), None) != (None, Some(a)) {
                unit.witnesses.push(format!("({}, 1)", rp(Some(a))));
            }
        }

        let mut triples = AxiomResult::new("triple stability");
        let mut nfc = AxiomResult::new("normal form condition");
        let mut nf_triples = Vec::new();
        for a in al.letters() {
            for b in al.letters() {
                for c in al.letters() {
                    triples.checked += 1;
                    let mut t = vec![Some(c), Some(b), Some(a)];
                    self.phi_in_place(&mut t, 2);
                    self.phi_in_place(&mut t, 1);
                    self.phi_in_place(&mut t, 2);
                    if !t.contains(&None) && !self.is_totally_stable(&t) {
                        triples.witnesses.push(format!("({}, {}, {})", rp(Some(a)), rp(Some(b)), rp(Some(c))));
                    }
                    // Only totally unstable triples need checking.
                    if self.is_stable(a, b) || self.is_stable(b, c) {
                        continue;
                    }
                    nfc.checked += 1;
                    nf_triples.push([a, b, c]);
                    let lhs = self.normal_form(&Word::from_reading(&[a, b, c]));
                    let mut u = vec![Some(c), Some(b), Some(a)];
                    self.phi_in_place(&mut u, 1);
                    if self.normal_form_pointed(&u) != lhs {
                        nfc.witnesses.push(format!("({}, {}, {})", rp(Some(a)), rp(Some(b)), rp(Some(c))));
                    }
                }
            }
        }
        AxiomReport { axioms: vec![presentation, idem, unit, triples, nfc], normal_form_triples: nf_triples }
    }
}

#[derive(Clone, Debug)]
pub struct AxiomResult {
    pub name: String,
    pub checked: usize,
    pub witnesses: Vec<String>,
}

impl AxiomResult {
    fn new(name: &str) -> Self {
        Self { name: name.into(), checked: 0, witnesses: vec![] }
    }

    pub fn passed(&self) -> bool {
        self.witnesses.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct AxiomReport {
    pub axioms: Vec<AxiomResult>,
    /// Triples on which the normal form condition was evaluated, as
    /// written (leftmost first).
    pub normal_form_triples: Vec<[Letter; 3]>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.axioms.iter().all(AxiomResult::passed)
    }
}

/// The monoid presented by a local factorization table. Elements are
/// normal-form words.
#[derive(Clone, Debug)]
pub struct PhiMonoid {
    pub table: PhiTable,
}

impl PhiMonoid {
    pub fn new(table: PhiTable) -> Self {
        Self { table }
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.table.alphabet()
    }

    pub fn parse(&self, text: &str) -> Result<Word> {
        Ok(self.table.normal_form(&self.alphabet().parse_word(text)?))
    }

    /// Totally stable words of length at most `radius`, by length then
    /// lexicographically in written order.
    pub fn nf_ball(&self, radius: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        let mut layer = vec![Word::empty()];
        for _ in 0..radius {
            let mut next = Vec::new();
            for w in &layer {
                for a in self.alphabet().letters() {
                    // Prepend on the left (new highest position).
                    let stable = w.at(w.len()).is_none_or(|top| self.table.is_stable(a, top));
                    if stable {
                        next.push(Word::letter(a).concat(w));
                    }
                }
            }
            next.sort_by_key(Word::reading);
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }
}

impl FactorableMonoid for PhiMonoid {
    type Elem = Word;

    fn one(&self) -> Word {
        Word::empty()
    }

    fn generators(&self) -> Vec<Word> {
        self.alphabet().letters().map(Word::letter).collect()
    }

    fn is_generator(&self, x: &Word) -> bool {
        x.len() == 1
    }

    fn mul(&self, a: &Word, b: &Word) -> Word {
        self.table.nf_extend(a.clone(), &b.reading())
    }

    fn norm(&self, x: &Word) -> usize {
        x.len()
    }

    fn eta(&self, x: &Word) -> (Word, Word) {
        match x.at(1) {
            Some(l) => (x.without_first(), Word::letter(l)),
            None => (Word::empty(), Word::empty()),
        }
    }

    fn render(&self, x: &Word) -> String {
        self.alphabet().render(x)
    }
}

/// Applies `f_i` at positions `(i+1, i)` of a tuple stored with position 1
/// at index 0.
pub fn apply_f<M: FactorableMonoid>(h: &M, t: &mut [M::Elem], i: usize) {
    let p = h.mul(&t[i], &t[i - 1]);
    let (a, b) = h.eta(&p);
    t[i] = a;
    t[i - 1] = b;
}

#[derive(Clone, Debug, Default)]
pub struct CheckReport {
    pub checked: usize,
    pub violations: Vec<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// `(m, a)` is stable iff `(eta'(m), a)` is, for all `m` of word length at
/// most `radius` and generators `a`.
pub fn check_recognition_principle<M: FactorableMonoid>(h: &M, radius: usize) -> CheckReport {
    let ball = Ball::new(h, radius);
    let gens = h.generators();
    let mut rep = CheckReport::default();
    for m in &ball.elements {
        let last = h.eta(m).1;
        for a in &gens {
            rep.checked += 1;
            if h.is_stable(m, a) != h.is_stable(&last, a) {
                rep.violations.push(format!("m={} a={}", h.render(m), h.render(a)));
            }
        }
    }
    rep
}

/// The three composites `f1 f2 f1 f2`, `f2 f1 f2`, `f2 f1 f2 f1` agree in
/// the graded sense on every triple with norm sum at most `radius`.
pub fn check_graded_equality<M: FactorableMonoid>(h: &M, radius: usize) -> CheckReport {
    let ball = Ball::new(h, radius);
    let elems: Vec<(&M::Elem, usize)> = ball.elements.iter().map(|x| (x, h.norm(x))).collect();
    let mut rep = CheckReport::default();
    for &(x3, n3) in &elems {
        for &(x2, n2) in &elems {
            if n3 + n2 > radius {
                continue;
            }
            for &(x1, n1) in &elems {
                if n3 + n2 + n1 > radius {
                    continue;
                }
                rep.checked += 1;
                let t = [x1.clone(), x2.clone(), x3.clone()];
                if !graded_equal_triple(h, &t, n1 + n2 + n3) {
                    rep.violations.push(format!("({}, {}, {})", h.render(x3), h.render(x2), h.render(x1)));
                }
            }
        }
    }
    rep
}

fn graded_equal_triple<M: FactorableMonoid>(h: &M, t: &[M::Elem; 3], total: usize) -> bool {
    let run = |seq: &[usize]| {
        let mut u = t.clone();
        for &i in seq {
            apply_f(h, &mut u, i);
        }
        let n: usize = u.iter().map(|x| h.norm(x)).sum();
        if n < total {
            None
        } else {
            Some(u)
        }
    };
    // Written f1 f2 f1 f2 means f2 acts first.
    let a = run(&[2, 1, 2, 1]);
    let b = run(&[2, 1, 2]);
    let c = run(&[1, 2, 1, 2]);
    a == b && b == c
}

/// `(xs)' = (x's)'` and `bar(xs) = bar(x) * bar(x's)` for `x` in the ball
/// and generators `s`.
pub fn check_strong_conditions<M: FactorableMonoid>(h: &M, radius: usize) -> CheckReport {
    let ball = Ball::new(h, radius);
    let gens = h.generators();
    let mut rep = CheckReport::default();
    for x in &ball.elements {
        let (xbar, xlast) = h.eta(x);
        for s in &gens {
            rep.checked += 1;
            let (l_bar, l_last) = h.eta(&h.mul(x, s));
            let (r_bar, r_last) = h.eta(&h.mul(&xlast, s));
            if l_last != r_last || l_bar != h.mul(&xbar, &r_bar) {
                rep.violations.push(format!("x={} s={}", h.render(x), h.render(s)));
            }
        }
    }
    rep
}

/// Searches for `x != y` in the ball and a generator `z` with `xz = yz`.
pub fn right_cancellativity_probe<M: FactorableMonoid>(h: &M, radius: usize) -> Option<(M::Elem, M::Elem, M::Elem)> {
    let ball = Ball::new(h, radius);
    for z in h.generators() {
        let mut seen: std::collections::HashMap<M::Elem, &M::Elem> = std::collections::HashMap::new();
        for x in &ball.elements {
            let p = h.mul(x, &z);
            if let Some(y) = seen.insert(p, x) {
                return Some((y.clone(), x.clone(), z));
            }
        }
    }
    None
}

/// Finds the first factorization map (in a fixed enumeration order) on a
/// finite monoid that satisfies the three factorization axioms and graded
/// equality on all triples. Candidates for `x` are `(rest, g)` with `g` a
/// generator, `rest * g = x` and `rest` one shorter, ordered by `g` then
/// `rest`.
pub fn search_factorization(table: &FiniteTable, max_candidates: u64) -> Result<Option<FiniteMonoid>> {
    let n = table.len();
    let mut eta: Vec<(usize, usize)> = vec![(table.unit, table.unit); n];
    let mut choices: Vec<(usize, Vec<(usize, usize)>)> = Vec::new();
    for x in 0..n {
        if x == table.unit {
            continue;
        }
        let mut opts = Vec::new();
        for &g in &table.generators {
            for r in 0..n {
                if table.mul(r, g) == x && table.norm(r) + 1 == table.norm(x) {
                    opts.push((r, g));
                }
            }
        }
        if table.norm(x) == 1 {
            opts.retain(|&(r, g)| r == table.unit && g == x);
        }
        if opts.len() == 1 {
            eta[x] = opts[0];
        } else {
            choices.push((x, opts));
        }
    }
    let total: u64 = choices.iter().map(|(_, o)| o.len() as u64).try_fold(1u64, u64::checked_mul).unwrap_or(u64::MAX);
    if total > max_candidates {
        return Err(Error::InvalidArgument(format!(
            "{total} candidate factorization maps exceed the limit of {max_candidates}"
        )));
    }
    let mut idx = vec![0usize; choices.len()];
    loop {
        for (k, (x, opts)) in choices.iter().enumerate() {
            eta[*x] = opts[idx[k]];
        }
        let m = FiniteMonoid::new(table.clone(), eta.clone())?;
        let max_norm = (0..n).map(|x| table.norm(x)).max().unwrap_or(0);
        if check_graded_equality(&m, 3 * max_norm).passed() {
            return Ok(Some(m));
        }
        // Odometer, last choice fastest.
        let mut k = choices.len();
        loop {
            if k == 0 {
                return Ok(None);
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < choices[k].1.len() {
                break;
            }
            idx[k] = 0;
        }
    }
}
