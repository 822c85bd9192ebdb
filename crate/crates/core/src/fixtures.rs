//! Canonical example monoids. Every constructor validates what it builds.

use std::sync::OnceLock;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::factorability::{
    check_graded_equality, check_recognition_principle, search_factorization, CheckReport, PhiMonoid, PhiTable,
};
use crate::foundation::{validate_handle, Alphabet, FiniteMonoid, FiniteTable, Letter, Pointed};
use crate::garside::{ArtinMonoid, CoxeterMatrix, GarsideGroup, GarsideStructure};
use crate::spec_file::{Loaded, MonoidSpec};

/// The 27-generator table whose induced rewriting system has a cycle.
pub const APPENDIX_JSON: &str = include_str!("../data/appendix.json");
pub const APPENDIX_SHA256: &str = "768dc582557f0f800a27d5f5be1ceeedd42f1819f373131f0cf73555474745b5";

/// Registry names, in listing order.
pub const FIXTURE_NAMES: &[&str] =
    &["appendix", "z2", "cyclic-3", "free-abelian-2", "braid-3-positive", "braid-3-group", "s3-transpositions"];

pub fn appendix_spec() -> MonoidSpec {
    let digest = Sha256::digest(APPENDIX_JSON.as_bytes());
    let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
    assert_eq!(hex, APPENDIX_SHA256, "embedded appendix table is corrupted");
    MonoidSpec::parse(APPENDIX_JSON).expect("embedded appendix table parses")
}

pub fn appendix_table() -> PhiTable {
    match appendix_spec().load().expect("embedded appendix table loads") {
        Loaded::Phi(m) => m.table,
        _ => unreachable!("appendix is a phi-table"),
    }
}

pub fn appendix_monoid() -> PhiMonoid {
    let t = appendix_table();
    assert!(t.check_local_factorability().passed(), "appendix table must be locally factorable");
    PhiMonoid::new(t)
}

/// The generator permutation of the appendix monoid swapping the two halves
/// of the cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaInvolution {
    perm: Vec<Letter>,
}

impl GammaInvolution {
    pub fn appendix(alphabet: &Alphabet) -> Self {
        let swaps = [
            ("a1", "a2"),
            ("b1", "b4"),
            ("b2", "b5"),
            ("b3", "b6"),
            ("c1", "c4"),
            ("c2", "c5"),
            ("c3", "c6"),
            ("d1", "d2"),
            ("e2", "e3"),
            ("f2", "f3"),
            ("g2", "g3"),
            ("h2", "h3"),
        ];
        let mut perm: Vec<Letter> = alphabet.letters().collect();
        for (x, y) in swaps {
            let (a, b) = (alphabet.letter(x).unwrap(), alphabet.letter(y).unwrap());
            perm[a as usize] = b;
            perm[b as usize] = a;
        }
        Self { perm }
    }

    pub fn apply(&self, p: Pointed) -> Pointed {
        p.map(|l| self.perm[l as usize])
    }

    pub fn is_involution(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &j)| self.perm[j as usize] as usize == i)
    }

    /// `phi(g a, g b) = (g x g)(phi(a, b))` on all pairs of pointed letters.
    pub fn check_compatibility(&self, t: &PhiTable) -> CheckReport {
        let al = t.alphabet();
        let pointed: Vec<Pointed> = std::iter::once(None).chain(al.letters().map(Some)).collect();
        let mut rep = CheckReport::default();
        for &a in &pointed {
            for &b in &pointed {
                rep.checked += 1;
                let (x, y) = t.phi(a, b);
                if t.phi(self.apply(a), self.apply(b)) != (self.apply(x), self.apply(y)) {
                    rep.violations.push(format!("({}, {})", al.render_pointed(a), al.render_pointed(b)));
                }
            }
        }
        rep
    }
}

fn checked_finite(m: FiniteMonoid) -> FiniteMonoid {
    let r = (0..m.table.len()).map(|x| m.table.norm(x)).max().unwrap_or(0);
    assert!(validate_handle(&m, r).passed(), "finite fixture must satisfy the factorization axioms");
    assert!(check_graded_equality(&m, 3 * r).passed(), "finite fixture must satisfy graded equality");
    assert!(check_recognition_principle(&m, r).passed(), "finite fixture must satisfy the recognition principle");
    m
}

/// Cyclic group of order `m` generated by all its nontrivial elements, with
/// `eta(g) = (1, g)`. With the single generator `t` the only candidate map
/// `eta(t^k) = (t^(k-1), t)` breaks the recognition principle at
/// `(t^(m-1), t)` once `m > 2`.
pub fn cyclic(m: usize) -> Result<FiniteMonoid> {
    if m < 2 {
        return Err(Error::InvalidArgument("cyclic order must be at least 2".into()));
    }
    let name = |k: usize| match k {
        0 => "1".to_string(),
        1 => "t".to_string(),
        _ => format!("t^{k}"),
    };
    let names = (0..m).map(name).collect();
    let table = (0..m).map(|a| (0..m).map(|b| (a + b) % m).collect()).collect();
    let t = FiniteTable::new(names, table, 0, (1..m).collect())?;
    let eta = (0..m).map(|k| (0, k)).collect();
    Ok(checked_finite(FiniteMonoid::new(t, eta)?))
}

pub fn z2() -> FiniteMonoid {
    cyclic(2).expect("order 2 is valid")
}

/// Free abelian monoid on `n` generators: `x_i x_j -> x_j x_i` for `i < j`.
pub fn free_abelian(n: usize) -> Result<PhiMonoid> {
    if n == 0 {
        return Err(Error::InvalidArgument("need at least one generator".into()));
    }
    let names: Vec<String> = (0..n).map(|i| ((b'a' + (i % 26) as u8) as char).to_string() + &"'".repeat(i / 26)).collect();
    let al = Alphabet::new(names)?;
    let mut entries = Vec::new();
    for i in 0..n as Letter {
        for j in i + 1..n as Letter {
            entries.push(((Some(i), Some(j)), (Some(j), Some(i))));
        }
    }
    let t = PhiTable::new(al, entries)?;
    assert!(t.check_local_factorability().passed());
    Ok(PhiMonoid::new(t))
}

pub fn artin(matrix: CoxeterMatrix) -> Result<ArtinMonoid> {
    let a = ArtinMonoid::new(matrix)?;
    assert!(a.monoid.table.check_local_factorability().passed(), "Artin table must be locally factorable");
    Ok(a)
}

/// Positive braid monoid on `n` strands over its simple elements.
pub fn braid_positive(n: usize) -> Result<ArtinMonoid> {
    if n < 2 {
        return Err(Error::InvalidArgument("need at least two strands".into()));
    }
    artin(CoxeterMatrix::type_a(n - 1))
}

pub fn braid_group(n: usize) -> Result<GarsideGroup> {
    Ok(GarsideGroup::new(GarsideStructure::new(braid_positive(n)?)))
}

/// Multiplication table of the symmetric group on three letters with the
/// three transpositions as generators. Permutations compose right to left.
pub fn s3_table() -> FiniteTable {
    let perms: [[usize; 3]; 6] = [[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];
    let names = ["1", "a", "b", "c", "ab", "ba"];
    let compose = |p: &[usize; 3], q: &[usize; 3]| [p[q[0]], p[q[1]], p[q[2]]];
    let index = |p: [usize; 3]| perms.iter().position(|x| *x == p).unwrap();
    let table: Vec<Vec<usize>> = perms.iter().map(|p| perms.iter().map(|q| index(compose(p, q))).collect()).collect();
    debug_assert_eq!(table[1][2], 4);
    debug_assert_eq!(table[2][1], 5);
    FiniteTable::new(names.iter().map(|s| s.to_string()).collect(), table, 0, vec![1, 2, 3]).expect("valid group table")
}

/// The first factorization map found for `s3_table`, cached.
pub fn s3_transpositions() -> FiniteMonoid {
    static CACHE: OnceLock<FiniteMonoid> = OnceLock::new();
    CACHE
        .get_or_init(|| {
            let m = search_factorization(&s3_table(), 1_000_000)
                .expect("search space is small")
                .expect("a factorization map exists");
            checked_finite(m)
        })
        .clone()
}

/// Monoid-spec document for a registry name.
pub fn fixture_spec(name: &str) -> Result<MonoidSpec> {
    let n = Some(name.to_string());
    Ok(match name {
        "appendix" => appendix_spec(),
        "z2" => MonoidSpec::from_finite(n, &z2()),
        "cyclic-3" => MonoidSpec::from_finite(n, &cyclic(3)?),
        "free-abelian-2" => MonoidSpec::from_phi_table(n, &free_abelian(2)?.table),
        "braid-3-positive" => MonoidSpec::from_coxeter(n, &CoxeterMatrix::type_a(2), None),
        "braid-3-group" => MonoidSpec::from_coxeter(n, &CoxeterMatrix::type_a(2), Some("aba".into())),
        "s3-transpositions" => MonoidSpec::from_finite(n, &s3_transpositions()),
        _ => return Err(Error::InvalidArgument(format!("unknown fixture `{name}`"))),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foundation::FactorableMonoid;

    #[test]
    fn appendix_data_round_trips() {
        let spec = appendix_spec();
        assert_eq!(spec.to_json(), APPENDIX_JSON);
        let t = appendix_table();
        assert_eq!(t.alphabet().len(), 27);
        assert_eq!(t.entries().len(), 18);
        assert_eq!(MonoidSpec::from_phi_table(Some("appendix".into()), &t), spec);
    }

    #[test]
    fn appendix_entries() {
        let t = appendix_table();
        let al = t.alphabet();
        let p = |s: &str| al.pointed(s).unwrap();
        assert_eq!(t.phi(p("c2"), p("d1")), (p("c3"), p("d2")));
        assert_eq!(t.phi(p("g2"), p("d1")), (p("h2"), p("i")));
        assert_eq!(t.phi(p("k"), None), (None, p("k")));
    }

    #[test]
    fn gamma_is_a_compatible_involution() {
        let t = appendix_table();
        let g = GammaInvolution::appendix(t.alphabet());
        let al = t.alphabet();
        assert_eq!(g.apply(al.pointed("e2").unwrap()), al.pointed("e3").unwrap());
        assert_eq!(g.apply(al.pointed("i").unwrap()), al.pointed("i").unwrap());
        assert!(g.is_involution());
        let rep = g.check_compatibility(&t);
        assert_eq!(rep.checked, 28 * 28);
        assert!(rep.passed());
    }

    #[test]
    fn registry_specs_load() {
        for name in FIXTURE_NAMES {
            let spec = fixture_spec(name).unwrap();
            assert_eq!(spec.name(), Some(*name));
            spec.load().unwrap();
        }
        assert!(fixture_spec("nope").is_err());
    }

    #[test]
    fn single_generator_cyclic_breaks_recognition() {
        let names = ["1", "t", "t^2"].iter().map(|s| s.to_string()).collect();
        let table = (0..3).map(|a| (0..3).map(|b| (a + b) % 3).collect()).collect();
        let t = FiniteTable::new(names, table, 0, vec![1]).unwrap();
        let m = FiniteMonoid::new(t, vec![(0, 0), (0, 1), (1, 1)]).unwrap();
        assert!(validate_handle(&m, 2).passed());
        let rep = check_recognition_principle(&m, 2);
        assert_eq!(rep.violations, ["m=t^2 a=t"]);
        assert!(cyclic(3).is_ok());
    }

    #[test]
    fn s3_is_factorable_and_cached() {
        let m = s3_transpositions();
        assert_eq!(m.table.len(), 6);
        assert_eq!(m.elements().unwrap().len(), 6);
        assert_eq!(s3_transpositions().eta, m.eta);
    }
}
