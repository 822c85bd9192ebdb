//! Artin monoids of finite type over their simple elements, the Garside
//! structure given by the fundamental element, and the Garside group with
//! its normal form and factorization map.

pub mod coxeter;

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

pub use coxeter::{CoxeterGroup, CoxeterMatrix, DEFAULT_GROUP_BOUND};

use crate::error::{Error, Result};
use crate::factorability::{CheckReport, PhiMonoid, PhiTable};
use crate::foundation::{Alphabet, Ball, FactorableMonoid, Letter, Pointed, Word};

/// Normal forms of a ball with their Artin lengths.
type SharedBall = Arc<Vec<(Word, usize)>>;

/// The positive Artin monoid of a finite Coxeter group, generated by the
/// non-trivial simple elements. Elements are right-greedy normal forms.
pub struct ArtinMonoid {
    pub group: CoxeterGroup,
    /// Letter to Coxeter group element.
    simples: Vec<usize>,
    /// Coxeter group element to letter; the identity has none.
    letter_of: Vec<Option<Letter>>,
    pub monoid: PhiMonoid,
    balls: Mutex<HashMap<usize, SharedBall>>,
}

impl Clone for ArtinMonoid {
    fn clone(&self) -> Self {
        Self {
            group: self.group.clone(),
            simples: self.simples.clone(),
            letter_of: self.letter_of.clone(),
            monoid: self.monoid.clone(),
            balls: Mutex::new(HashMap::new()),
        }
    }
}

impl fmt::Debug for ArtinMonoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ArtinMonoid").field("simples", &self.monoid.alphabet().names()).finish()
    }
}

impl ArtinMonoid {
    pub fn new(matrix: CoxeterMatrix) -> Result<Self> {
        Self::with_bound(matrix, DEFAULT_GROUP_BOUND)
    }

    pub fn with_bound(matrix: CoxeterMatrix, bound: usize) -> Result<Self> {
        let group = CoxeterGroup::new(matrix, bound)?;
        let mut simples: Vec<usize> = (1..group.order()).collect();
        simples.sort_by(|&a, &b| (group.length(a), group.word(a)).cmp(&(group.length(b), group.word(b))));
        let mut letter_of = vec![None; group.order()];
        for (l, &e) in simples.iter().enumerate() {
            letter_of[e] = Some(l as Letter);
        }
        let alphabet = Alphabet::new(simples.iter().map(|&e| group.name(e)))?;
        let mut entries = Vec::new();
        for (a, &x0) in simples.iter().enumerate() {
            for (b, &y0) in simples.iter().enumerate() {
                let (x, y) = push_right(&group, x0, y0);
                if (x, y) != (x0, y0) {
                    entries.push(((Some(a as Letter), Some(b as Letter)), (letter_of[x], letter_of[y])));
                }
            }
        }
        let table = PhiTable::new(alphabet, entries)?;
        Ok(Self { group, simples, letter_of, monoid: PhiMonoid::new(table), balls: Mutex::new(HashMap::new()) })
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.monoid.alphabet()
    }

    pub fn simple(&self, l: Letter) -> usize {
        self.simples[l as usize]
    }

    pub fn letter_of(&self, e: usize) -> Pointed {
        self.letter_of[e]
    }

    /// Letter of the Coxeter generator `s`.
    pub fn atom(&self, s: usize) -> Letter {
        self.letter_of[self.group.generator(s)].expect("generators are simple")
    }

    /// Letter of the longest element.
    pub fn fundamental(&self) -> Letter {
        self.letter_of[self.group.longest()].expect("longest element is simple")
    }

    /// Number of atoms in any positive word for `x`.
    pub fn artin_length(&self, x: &Word) -> usize {
        x.positions().iter().map(|&l| self.group.length(self.simple(l))).sum()
    }

    /// Parses a positive word. Tokens are simple names; when every
    /// generator name is one character, a token may also be any string of
    /// generator names, read as a product of atoms.
    pub fn parse_positive(&self, text: &str) -> Result<Word> {
        let mut reading = Vec::new();
        for tok in text.split_whitespace() {
            reading.extend(self.parse_token(tok)?);
        }
        Ok(self.monoid.table.normal_form(&Word::from_reading(&reading)))
    }

    fn parse_token(&self, tok: &str) -> Result<Vec<Letter>> {
        if tok == "1" {
            return Ok(vec![]);
        }
        if let Ok(l) = self.alphabet().letter(tok) {
            return Ok(vec![l]);
        }
        let names = self.group.matrix.names();
        if names.iter().all(|n| n.chars().count() == 1) {
            let mut out = Vec::new();
            for c in tok.chars() {
                let s = names
                    .iter()
                    .position(|n| n.starts_with(c))
                    .ok_or_else(|| Error::UnknownLetter(tok.to_string()))?;
                out.push(self.atom(s));
            }
            return Ok(out);
        }
        Err(Error::UnknownLetter(tok.to_string()))
    }

    /// Right-greedy normal form of a positive word, leftmost factor first.
    pub fn greedy_nf(&self, text: &str) -> Result<Vec<String>> {
        let w = self.parse_positive(text)?;
        Ok(w.reading().iter().map(|&l| self.alphabet().name(l).to_string()).collect())
    }

    pub fn mul(&self, a: &Word, b: &Word) -> Word {
        self.monoid.mul(a, b)
    }

    /// Normal forms of norm at most `radius` with their Artin lengths.
    fn ball(&self, radius: usize) -> Arc<Vec<(Word, usize)>> {
        let mut cache = self.balls.lock().unwrap();
        cache
            .entry(radius)
            .or_insert_with(|| {
                Arc::new(self.monoid.nf_ball(radius).into_iter().map(|w| {
                    let n = self.artin_length(&w);
                    (w, n)
                }).collect())
            })
            .clone()
    }

    /// `w` with `x w = z`, if any.
    pub fn left_quotient(&self, x: &Word, z: &Word) -> Option<Word> {
        let target = self.artin_length(z).checked_sub(self.artin_length(x))?;
        self.ball(z.len())
            .iter()
            .find(|(w, n)| *n == target && self.mul(x, w) == *z)
            .map(|(w, _)| w.clone())
    }

    /// `w` with `w x = z`, if any.
    pub fn right_quotient(&self, z: &Word, x: &Word) -> Option<Word> {
        let target = self.artin_length(z).checked_sub(self.artin_length(x))?;
        self.ball(z.len())
            .iter()
            .find(|(w, n)| *n == target && self.mul(w, x) == *z)
            .map(|(w, _)| w.clone())
    }

    /// `x` is a left divisor of `z`.
    pub fn left_divides(&self, x: &Word, z: &Word) -> bool {
        self.left_quotient(x, z).is_some()
    }

    /// `x` is a right divisor of `z`.
    pub fn right_divides(&self, x: &Word, z: &Word) -> bool {
        self.right_quotient(z, x).is_some()
    }

    /// Least common right multiple (both are left divisors of it).
    pub fn right_lcm(&self, x: &Word, y: &Word) -> Result<Word> {
        self.extremal(x.len().max(y.len()), true, |c| self.left_divides(x, c) && self.left_divides(y, c))
    }

    /// Least common left multiple (both are right divisors of it).
    pub fn left_lcm(&self, x: &Word, y: &Word) -> Result<Word> {
        self.extremal(x.len().max(y.len()), true, |c| self.right_divides(x, c) && self.right_divides(y, c))
    }

    /// Greatest common right divisor.
    pub fn right_gcd(&self, x: &Word, y: &Word) -> Result<Word> {
        self.extremal(x.len().min(y.len()), false, |d| self.right_divides(d, x) && self.right_divides(d, y))
    }

    /// Greatest common left divisor.
    pub fn left_gcd(&self, x: &Word, y: &Word) -> Result<Word> {
        self.extremal(x.len().min(y.len()), false, |d| self.left_divides(d, x) && self.left_divides(d, y))
    }

    fn extremal(&self, radius: usize, least: bool, pred: impl Fn(&Word) -> bool) -> Result<Word> {
        let ball = self.ball(radius);
        let mut best: Option<&(Word, usize)> = None;
        for cand in ball.iter() {
            let better = match best {
                None => true,
                Some((_, n)) => (least && cand.1 < *n) || (!least && cand.1 > *n),
            };
            if better && pred(&cand.0) {
                best = Some(cand);
            }
        }
        best.map(|(w, _)| w.clone())
            .ok_or_else(|| Error::Unsupported(format!("no extremal element within norm {radius}")))
    }

    /// `x \ y`, defined by `right_lcm(x, y) = x (x \ y)`.
    pub fn right_complement(&self, x: &Word, y: &Word) -> Result<Word> {
        let l = self.right_lcm(x, y)?;
        Ok(self.left_quotient(x, &l).expect("x divides its lcm"))
    }

    /// `x / y`, defined by `left_lcm(x, y) = (x / y) y`.
    pub fn left_complement(&self, x: &Word, y: &Word) -> Result<Word> {
        let l = self.left_lcm(x, y)?;
        Ok(self.right_quotient(&l, y).expect("y divides its lcm"))
    }
}

/// Moves atoms from the right descent set of `x` into `y` until every right
/// descent of `x` is a left descent of `y`.
fn push_right(g: &CoxeterGroup, mut x: usize, mut y: usize) -> (usize, usize) {
    loop {
        let ld = g.left_descents(y);
        match g.right_descents(x).into_iter().find(|s| !ld.contains(s)) {
            Some(s) => {
                x = g.mul_gen(x, s);
                y = g.gen_mul(s, y);
            }
            None => return (x, y),
        }
    }
}

/// Square-free elements (the non-trivial simples) and whether they are
/// closed under left lcm and left complement.
#[derive(Clone, Debug)]
pub struct QfReport {
    pub elements: Vec<String>,
    pub closed: bool,
}

pub fn square_free_elements(artin: &ArtinMonoid) -> Result<QfReport> {
    let letters: Vec<Word> = artin.alphabet().letters().map(Word::letter).collect();
    let mut closed = true;
    for x in &letters {
        for y in &letters {
            let l = artin.left_lcm(x, y)?;
            let c = artin.left_complement(x, y)?;
            closed &= l.len() <= 1 && c.len() <= 1;
        }
    }
    Ok(QfReport { elements: artin.alphabet().names().to_vec(), closed })
}

/// Cancellativity and existence of lcms and gcds on the norm ball.
pub fn validate_gaussian_hypotheses(artin: &ArtinMonoid, radius: usize) -> Result<CheckReport> {
    let ball = artin.monoid.nf_ball(radius);
    let atoms: Vec<Word> = (0..artin.group.rank()).map(|s| Word::letter(artin.atom(s))).collect();
    let render = |w: &Word| artin.alphabet().render(w);
    let mut rep = CheckReport::default();
    for z in &atoms {
        let mut right: HashMap<Word, &Word> = HashMap::new();
        let mut left: HashMap<Word, &Word> = HashMap::new();
        for x in &ball {
            rep.checked += 1;
            if let Some(y) = right.insert(artin.mul(x, z), x) {
                rep.violations.push(format!("right cancellation: {} {}", render(y), render(x)));
            }
            if let Some(y) = left.insert(artin.mul(z, x), x) {
                rep.violations.push(format!("left cancellation: {} {}", render(y), render(x)));
            }
        }
    }
    let simples: Vec<Word> = std::iter::once(Word::empty()).chain(artin.alphabet().letters().map(Word::letter)).collect();
    for x in &simples {
        for y in &simples {
            rep.checked += 1;
            for r in [artin.left_lcm(x, y), artin.right_lcm(x, y), artin.left_gcd(x, y), artin.right_gcd(x, y)] {
                if let Err(e) = r {
                    rep.violations.push(format!("({}, {}): {e}", render(x), render(y)));
                }
            }
        }
    }
    Ok(rep)
}

/// An Artin monoid together with its fundamental element and the maps it
/// induces on simples.
#[derive(Clone, Debug)]
pub struct GarsideStructure {
    pub artin: ArtinMonoid,
    pub delta: Letter,
    star: Vec<Pointed>,
    prestar: Vec<Pointed>,
    phi: Vec<Letter>,
    delta_inv: Vec<Letter>,
    phi_order: usize,
}

impl GarsideStructure {
    /// Uses the fundamental element.
    pub fn new(artin: ArtinMonoid) -> Self {
        let d = Word::letter(artin.fundamental());
        Self::with_delta(artin, &d).expect("the fundamental element is Garside")
    }

    /// Validates a candidate `delta`: its left and right divisors must
    /// coincide, and only the fundamental element is supported.
    pub fn with_delta(artin: ArtinMonoid, delta: &Word) -> Result<Self> {
        let render = artin.alphabet().render(delta);
        if delta.is_empty() {
            return Err(Error::NotGarside("the unit".into()));
        }
        let ball = artin.ball(delta.len());
        let ld: BTreeSet<&Word> = ball.iter().map(|(w, _)| w).filter(|w| artin.left_divides(w, delta)).collect();
        let rd: BTreeSet<&Word> = ball.iter().map(|(w, _)| w).filter(|w| artin.right_divides(w, delta)).collect();
        if ld != rd {
            return Err(Error::NotGarside(format!("left and right divisors of {render} differ")));
        }
        let fund = artin.fundamental();
        if *delta != Word::letter(fund) {
            return Err(Error::Unsupported(format!("{render} is balanced but not the fundamental element")));
        }
        let g = &artin.group;
        let w0 = g.longest();
        let k = artin.alphabet().len();
        let mut star = Vec::with_capacity(k);
        let mut prestar = Vec::with_capacity(k);
        let mut phi = Vec::with_capacity(k);
        for l in 0..k as Letter {
            let t = artin.simple(l);
            star.push(artin.letter_of(g.mul(g.inverse(t), w0)));
            prestar.push(artin.letter_of(g.mul(w0, g.inverse(t))));
            phi.push(artin.letter_of(g.mul(g.inverse(w0), g.mul(t, w0))).expect("conjugate of a simple"));
        }
        let mut delta_inv = vec![0; k];
        for (l, &p) in phi.iter().enumerate() {
            delta_inv[p as usize] = l as Letter;
        }
        let mut phi_order = 1;
        let mut cur = phi.clone();
        while cur.iter().enumerate().any(|(i, &x)| x as usize != i) {
            cur = cur.iter().map(|&x| phi[x as usize]).collect();
            phi_order += 1;
        }
        Ok(Self { artin, delta: fund, star, prestar, phi, delta_inv, phi_order })
    }

    pub fn delta_word(&self) -> Word {
        Word::letter(self.delta)
    }

    /// `t* = t \ Delta`, extended by `1* = Delta`.
    pub fn star(&self, t: Pointed) -> Pointed {
        t.map_or(Some(self.delta), |l| self.star[l as usize])
    }

    /// `*t = Delta / t`, extended by `*1 = Delta`.
    pub fn alpha(&self, t: Pointed) -> Pointed {
        t.map_or(Some(self.delta), |l| self.prestar[l as usize])
    }

    /// Conjugation `Delta^-1 t Delta`.
    pub fn phi(&self, t: Pointed) -> Pointed {
        t.map(|l| self.phi[l as usize])
    }

    pub fn delta_map(&self, t: Pointed) -> Pointed {
        t.map(|l| self.delta_inv[l as usize])
    }

    /// `phi^k` applied letterwise; negative `k` uses the inverse.
    pub fn phi_pow(&self, w: &Word, k: i64) -> Word {
        let k = k.rem_euclid(self.phi_order as i64) as usize;
        let mut out = w.positions().to_vec();
        for _ in 0..k {
            for l in out.iter_mut() {
                *l = self.phi[*l as usize];
            }
        }
        Word::from_positions(out)
    }

    fn pointed_word(p: Pointed) -> Word {
        p.map_or_else(Word::empty, Word::letter)
    }

    fn word_to_pointed(w: &Word) -> Option<Pointed> {
        match w.len() {
            0 => Some(None),
            1 => Some(w.at(1)),
            _ => None,
        }
    }

    /// Checks the complement rules on all pairs and triples from the simples
    /// including the unit, and the rgcd product rule on pairs.
    pub fn computation_rules_check(&self) -> Result<Vec<CheckReport>> {
        let a = &self.artin;
        let s: Vec<Pointed> = std::iter::once(None).chain(a.alphabet().letters().map(Some)).collect();
        let w = Self::pointed_word;
        let r = |x: &Word| a.alphabet().render(x);
        let rp = |p: Pointed| a.alphabet().render_pointed(p);
        let dw = self.delta_word();
        let mut reps = vec![CheckReport::default(); 5];
        for &x in &s {
            for &y in &s {
                let (xw, yw) = (w(x), w(y));
                let xy = a.mul(&xw, &yw);
                for &z in &s {
                    let zw = w(z);
                    // (xy)\z = y\(x\z)
                    reps[0].checked += 1;
                    let lhs = a.right_complement(&xy, &zw)?;
                    let rhs = a.right_complement(&yw, &a.right_complement(&xw, &zw)?)?;
                    if lhs != rhs {
                        reps[0].violations.push(format!("x={} y={} z={}: {} vs {}", rp(x), rp(y), rp(z), r(&lhs), r(&rhs)));
                    }
                    // z\(xy) = (z\x)((x\z)\y)
                    reps[1].checked += 1;
                    let lhs = a.right_complement(&zw, &xy)?;
                    let zx = a.right_complement(&zw, &xw)?;
                    let xz = a.right_complement(&xw, &zw)?;
                    let rhs = a.mul(&zx, &a.right_complement(&xz, &yw)?);
                    if lhs != rhs {
                        reps[1].violations.push(format!("x={} y={} z={}: {} vs {}", rp(x), rp(y), rp(z), r(&lhs), r(&rhs)));
                    }
                }
                // Pairs (s, t) = (x, y).
                let dt = w(self.delta_map(y));
                let als = w(self.alpha(x));
                let c1 = a.right_complement(&dt, &als)?;
                let c1s = Self::word_to_pointed(&c1).map(|p| w(self.star(p)));
                let c2 = a.right_complement(&als, &dt)?;
                reps[2].checked += 1;
                let g = a.right_gcd(&xy, &dw)?;
                if c1s.as_ref() != Some(&g) {
                    reps[2].violations.push(format!("s={} t={}", rp(x), rp(y)));
                }
                reps[3].checked += 1;
                if c1s.map(|c| a.mul(&c2, &c)) != Some(xy.clone()) {
                    reps[3].violations.push(format!("s={} t={}", rp(x), rp(y)));
                }
                reps[4].checked += 1;
                let inner = a.mul(&a.right_gcd(&xw, &dw)?, &yw);
                if a.right_gcd(&inner, &dw)? != g {
                    reps[4].violations.push(format!("x={} y={}", rp(x), rp(y)));
                }
            }
        }
        Ok(reps)
    }

    /// For `x` in the norm ball and simple `a`: the last normal-form letter
    /// of `xa` equals that of `x_1 a`, and the norm grows by at most one.
    pub fn incremental_prefix_check(&self, radius: usize) -> CheckReport {
        let a = &self.artin;
        let mut rep = CheckReport::default();
        for x in a.monoid.nf_ball(radius) {
            let x1 = x.at(1).map_or_else(Word::empty, Word::letter);
            for l in a.alphabet().letters() {
                rep.checked += 1;
                let t = Word::letter(l);
                let y = a.mul(&x, &t);
                let local = a.mul(&x1, &t);
                let q_ok = y.len() == x.len() || y.len() == x.len() + 1 || (x.is_empty() && y.len() == 1);
                if y.at(1) != local.at(1) || !q_ok {
                    rep.violations.push(format!("x={} a={}", a.alphabet().render(&x), a.alphabet().name(l)));
                }
            }
        }
        rep
    }
}

/// `w * Delta^-m` with `w` in normal form; when `m > 0`, `Delta` does not
/// divide `w`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    pub w: Word,
    pub m: u32,
}

/// The group of fractions of an Artin monoid of finite type, generated by
/// the simples and their inverses.
#[derive(Clone, Debug)]
pub struct GarsideGroup {
    pub structure: GarsideStructure,
}

impl GarsideGroup {
    pub fn new(structure: GarsideStructure) -> Self {
        Self { structure }
    }

    fn artin(&self) -> &ArtinMonoid {
        &self.structure.artin
    }

    fn normalize(&self, mut w: Word, mut m: u32) -> GroupElement {
        let d = self.structure.delta;
        while m > 0 && w.at(1) == Some(d) {
            w = w.without_first();
            m -= 1;
        }
        GroupElement { w, m }
    }

    pub fn positive(&self, w: &Word) -> GroupElement {
        GroupElement { w: w.clone(), m: 0 }
    }

    pub fn delta_power(&self, m: u32) -> GroupElement {
        GroupElement { w: Word::empty(), m }
    }

    /// `t^-1 = t* Delta^-1` for a simple `t`.
    pub fn inverse_simple(&self, t: Letter) -> GroupElement {
        let s = self.structure.star(Some(t));
        self.normalize(GarsideStructure::pointed_word(s), 1)
    }

    pub fn inverse(&self, x: &GroupElement) -> GroupElement {
        // (w Delta^-m)^-1 = Delta^m x_1^-1 ... x_p^-1
        let mut acc = GroupElement { w: Word::from_positions(vec![self.structure.delta; x.m as usize]), m: 0 };
        for &l in x.w.positions() {
            acc = self.mul(&acc, &self.inverse_simple(l));
        }
        acc
    }

    /// Normal form `x_p .. x_1 y_1^-1 .. y_q^-1` as (positive factors in
    /// written order, inverted factors `y_1 .. y_q`).
    pub fn xy_form(&self, x: &GroupElement) -> (Vec<Letter>, Vec<Letter>) {
        let r = x.w.len();
        let q = x.m as usize;
        let mut ys = Vec::with_capacity(q);
        for i in 1..=q {
            let pos = q + 1 - i;
            let y = if pos <= r {
                let mut t = x.w.at(pos);
                for _ in 1..i {
                    t = self.structure.delta_map(t);
                }
                self.structure.alpha(t).expect("alpha of a proper divisor is simple")
            } else {
                self.structure.delta
            };
            ys.push(y);
        }
        let xs: Vec<Letter> = (q + 1..=r).rev().map(|p| x.w.at(p).unwrap()).collect();
        (xs, ys)
    }

    /// Parses tokens `t` or `t^-1`, with `t` a simple name or (for
    /// one-character generator names) a string of atoms.
    pub fn parse(&self, text: &str) -> Result<GroupElement> {
        let mut acc = self.one();
        for tok in text.split_whitespace() {
            let (base, inv) = match tok.strip_suffix("^-1") {
                Some(b) => (b, true),
                None => (tok, false),
            };
            let letters = self.artin().parse_token(base)?;
            let mut factor = self.positive(&self.artin().monoid.table.normal_form(&Word::from_reading(&letters)));
            if inv {
                factor = self.inverse(&factor);
            }
            acc = self.mul(&acc, &factor);
        }
        Ok(acc)
    }
}

impl FactorableMonoid for GarsideGroup {
    type Elem = GroupElement;

    fn one(&self) -> GroupElement {
        GroupElement { w: Word::empty(), m: 0 }
    }

    fn generators(&self) -> Vec<GroupElement> {
        let letters: Vec<Letter> = self.artin().alphabet().letters().collect();
        let pos = letters.iter().map(|&l| self.positive(&Word::letter(l)));
        let neg = letters.iter().map(|&l| self.inverse_simple(l));
        pos.chain(neg).collect()
    }

    fn is_generator(&self, x: &GroupElement) -> bool {
        self.norm(x) == 1
    }

    fn mul(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        let shifted = self.structure.phi_pow(&b.w, a.m as i64);
        let w = self.artin().mul(&a.w, &shifted);
        self.normalize(w, a.m + b.m)
    }

    fn norm(&self, x: &GroupElement) -> usize {
        (x.w.len()).max(x.m as usize)
    }

    fn eta(&self, x: &GroupElement) -> (GroupElement, GroupElement) {
        if x.m == 0 {
            return match x.w.at(1) {
                Some(l) => (self.positive(&x.w.without_first()), self.positive(&Word::letter(l))),
                None => (self.one(), self.one()),
            };
        }
        let last = match x.w.at(1) {
            Some(l) => {
                let t = self.structure.phi_pow(&Word::letter(l), 1 - x.m as i64);
                self.normalize(t, 1)
            }
            None => self.delta_power(1),
        };
        let rest = self.mul(x, &self.inverse(&last));
        (rest, last)
    }

    fn render(&self, x: &GroupElement) -> String {
        let (xs, ys) = self.xy_form(x);
        let al = self.artin().alphabet();
        let mut parts: Vec<String> = xs.iter().map(|&l| al.name(l).to_string()).collect();
        parts.extend(ys.iter().map(|&l| format!("{}^-1", al.name(l))));
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(" ")
        }
    }
}

/// Samples `(a, n)` with `a` positive and `n > 0`: the norm of `a Delta^-n`
/// is at most `max(k, n)` for `k` the normal-form length of `a`, with
/// equality exactly when `Delta` does not divide `a`. Norms come from
/// breadth-first search over the group ball of radius `radius`.
pub fn norm_explicit_check(group: &GarsideGroup, samples: &[(Word, u32)], radius: usize) -> CheckReport {
    let ball = Ball::new(group, radius);
    let a = &group.structure.artin;
    let dw = group.structure.delta_word();
    let mut rep = CheckReport::default();
    for (w, n) in samples {
        rep.checked += 1;
        let k = w.len();
        let bound = k.max(*n as usize);
        let x = group.mul(&group.positive(w), &group.delta_power(*n));
        let divisible = a.left_divides(&dw, w);
        let ok = match ball.norm(&x) {
            Some(nn) => nn <= bound && ((nn == bound) == !divisible),
            None => false,
        };
        if !ok {
            rep.violations.push(format!("a={} n={n}", a.alphabet().render(w)));
        }
    }
    rep
}
