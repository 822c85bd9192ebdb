//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};
use std::hash::Hash;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use factorable::factorability::{
    check_graded_equality, check_recognition_principle, check_strong_conditions, right_cancellativity_probe,
};
use factorable::fixtures::{
    appendix_monoid, braid_group, braid_positive, cyclic, fixture_spec, free_abelian, s3_table, s3_transpositions, z2,
    GammaInvolution, FIXTURE_NAMES,
};
use factorable::foundation::{validate_handle, Ball};
use factorable::garside::{norm_explicit_check, ArtinMonoid};
use factorable::indexseq::{
    enumerate_small, is_reduced, is_rightmost, is_small, is_small_oracle, xi_with, OracleVerdict, XiOutcome,
};
use factorable::morse::{
    bar_complex_truncated, homology, morse_differential_generic, prp_sum, redundant_chains, visy_basis, visy_complex,
    visy_differential_coherent, visy_differential_lambda, BarMatching, HomologyGroup,
};
use factorable::rewriting::{effective_sequence_bound, TerminationReport};
use factorable::{FactorableMonoid, IndexSequence, Pointed, Strategy, Word};

// Runtime limits per criterion.
const LIMIT_1: Duration = Duration::from_secs(1);
const LIMIT_2: Duration = Duration::from_secs(10);
const LIMIT_3: Duration = Duration::from_secs(60);
const LIMIT_4: Duration = Duration::from_secs(5);
const LIMIT_5: Duration = Duration::from_secs(5);
const LIMIT_6: Duration = Duration::from_secs(600);
const LIMIT_7: Duration = Duration::from_secs(120);
const LIMIT_8: Duration = Duration::from_secs(300);
const LIMIT_9: Duration = Duration::from_secs(120);

const SEED: u64 = 0x5EED;
const ORACLE_BUDGET: usize = 200_000;
const REWRITE_BUDGET: usize = 10_000;

type Verdict = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn criterion_1() -> Verdict {
    let m = appendix_monoid();
    let rep = m.table.check_local_factorability();
    for a in &rep.axioms {
        ensure(a.passed(), format!("axiom `{}` fails: {:?}", a.name, a.witnesses))?;
    }
    let sys = m.table.induced_rewriting_system();
    let start = m.alphabet().parse_word("a1 b1 c1 d1").unwrap();
    let sched = Strategy::FollowPositions(vec![3, 2, 1, 2, 3, 2, 1, 2]);
    match sys.reduce(&start, REWRITE_BUDGET, &sched) {
        TerminationReport::CycleFound { prefix, cycle } => {
            ensure(prefix.steps.is_empty() && cycle.start == start, "cycle does not start at the start word")?;
            ensure(cycle.steps.len() == 8, format!("cycle length {}", cycle.steps.len()))?;
            ensure(cycle.replay(&sys).ok() == Some(start.clone()), "cycle does not replay")?;
            Ok("5 axioms pass; cycle of length 8".into())
        }
        other => Err(format!("expected a cycle, got {other:?}")),
    }
}

fn criterion_2() -> Verdict {
    let m = appendix_monoid();
    if let Some((x, y, z)) = right_cancellativity_probe(&m, 3) {
        return Err(format!("{} * {} = {} * {}", m.render(&x), m.render(&z), m.render(&y), m.render(&z)));
    }
    let g = GammaInvolution::appendix(m.alphabet());
    ensure(g.is_involution(), "gamma is not an involution")?;
    let rep = g.check_compatibility(&m.table);
    ensure(rep.checked == 28 * 28, format!("checked {} pairs", rep.checked))?;
    ensure(rep.passed(), format!("gamma incompatible at {:?}", rep.violations))?;
    let ball = m.nf_ball(3).len();
    Ok(format!("no counterexample on {ball} normal forms; 784 pairs compatible"))
}

fn criterion_3() -> Verdict {
    let m = appendix_monoid();
    let rep = redundant_chains(&m, 4, 10_000);
    ensure(rep.passed(), format!("{:?}", rep.violations))?;
    ensure(rep.launches > 0, "no chains launched")?;
    Ok(format!(
        "{} launches, {} redundant cells, longest chain {}, {} height sequences",
        rep.launches,
        rep.cells,
        rep.longest_chain,
        rep.sequences.len()
    ))
}

/// All sequences over `1..=n` of length at most `len`.
fn all_sequences(n: usize, len: usize) -> Vec<IndexSequence> {
    let mut out = vec![vec![]];
    let mut layer: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..len {
        let mut next = Vec::new();
        for s in &layer {
            for e in 1..=n {
                let mut t = s.clone();
                t.push(e);
                next.push(t);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out.into_iter().map(IndexSequence::new).collect()
}

fn criterion_4() -> Verdict {
    let l1 = enumerate_small(1, true);
    let l2 = enumerate_small(2, true);
    ensure(l1.len() == 2 && l2.len() == 6, format!("|L1| = {}, |L2| = {}", l1.len(), l2.len()))?;
    let l3: BTreeSet<IndexSequence> = enumerate_small(3, true).into_iter().collect();
    let mut oracle_small = BTreeSet::new();
    let mut compared = 0;
    for s in all_sequences(3, 6) {
        compared += 1;
        let verdict = is_small_oracle(&s, 1, ORACLE_BUDGET);
        ensure(verdict != OracleVerdict::Undecided, format!("oracle undecided on {s}"))?;
        let small = verdict == OracleVerdict::Small;
        ensure(small == is_small(&s), format!("oracle and block test disagree on {s}"))?;
        if small && is_rightmost(&s) && is_reduced(&s) {
            oracle_small.insert(s);
        }
    }
    ensure(oracle_small == l3, "enumerated set differs from oracle set")?;
    let seq = |v: &[usize]| IndexSequence::new(v.to_vec());
    let xi_set = [
        seq(&[3, 2, 1]),
        seq(&[1, 3, 2, 1]),
        seq(&[2, 1, 3, 2, 1]),
        seq(&[1, 2, 1, 3, 2, 1]),
        seq(&[2, 3, 2, 1]),
        seq(&[1, 2, 3, 2, 1]),
    ];
    let ending: BTreeSet<&IndexSequence> = l3.iter().filter(|s| s.entries().ends_with(&[3, 2, 1])).collect();
    ensure(ending == xi_set.iter().collect(), "sequences ending in (3,2,1) differ from the expected six")?;
    for (a, b) in [(0, 4), (1, 5), (2, 3)] {
        let s = &xi_set[a];
        let got = xi_with(s, |t| t >= 3 && s.at(t) >= 2);
        ensure(got == XiOutcome::Mapped(xi_set[b].clone()), format!("xi{} = {got:?}", xi_set[a]))?;
    }
    Ok(format!("|L3| = {}; {compared} sequences cross-checked", l3.len()))
}

fn render_homology(h: &[HomologyGroup]) -> Vec<String> {
    h.iter().map(ToString::to_string).collect()
}

fn criterion_5() -> Verdict {
    let m = z2();
    let visy = render_homology(&homology(&visy_complex(&m, 6).map_err(|e| e.to_string())?, 6).map_err(|e| e.to_string())?);
    let bar = render_homology(
        &homology(&bar_complex_truncated(&m, 6).map_err(|e| e.to_string())?, 6).map_err(|e| e.to_string())?,
    );
    let expected = ["H_0 = Z", "H_1 = Z/2", "H_2 = 0", "H_3 = Z/2", "H_4 = 0", "H_5 = Z/2"];
    ensure(bar == expected, format!("bar oracle gives {bar:?}"))?;
    ensure(visy == bar, format!("small complex gives {visy:?}"))?;
    Ok(visy.join(", "))
}

fn criterion_6() -> Verdict {
    let m = s3_transpositions();
    let rep = validate_handle(&m, 3);
    ensure(rep.passed(), format!("found map fails {:?}", rep.violations))?;
    let visy = render_homology(&homology(&visy_complex(&m, 4).map_err(|e| e.to_string())?, 4).map_err(|e| e.to_string())?);
    let bar_cx = bar_complex_truncated(&m, 4).map_err(|e| e.to_string())?;
    ensure(bar_cx.ranks()[4] == 625, format!("top stratum has {} cells", bar_cx.ranks()[4]))?;
    let bar = render_homology(&homology(&bar_cx, 4).map_err(|e| e.to_string())?);
    ensure(bar[1..] == ["H_1 = Z/2", "H_2 = 0", "H_3 = Z/6"], format!("bar oracle gives {bar:?}"))?;
    ensure(visy == bar, format!("small complex gives {visy:?}"))?;
    let _ = s3_table();
    Ok(visy.join(", "))
}

/// Braid-move closure of a word over Coxeter generators.
fn braid_class(a: &ArtinMonoid, w: &[usize]) -> BTreeSet<Vec<usize>> {
    let matrix = &a.group.matrix;
    let mut seen = BTreeSet::from([w.to_vec()]);
    let mut queue = vec![w.to_vec()];
    while let Some(u) = queue.pop() {
        for i in 0..u.len() {
            for t in 0..matrix.rank() {
                let s = u[i];
                let Some(m) = matrix.m(s, t) else { continue };
                let m = m as usize;
                if s == t || i + m > u.len() {
                    continue;
                }
                if (0..m).all(|k| u[i + k] == if k % 2 == 0 { s } else { t }) {
                    let mut v = u.clone();
                    for k in 0..m {
                        v[i + k] = if k % 2 == 0 { t } else { s };
                    }
                    if seen.insert(v.clone()) {
                        queue.push(v);
                    }
                }
            }
        }
    }
    seen
}

/// Right-greedy factorization by exhaustive search: repeatedly split off
/// the longest simple element (given by its set of reduced words) that
/// ends some word equivalent to the input.
fn greedy_by_search(a: &ArtinMonoid, simples: &[(String, BTreeSet<Vec<usize>>)], w: &[usize]) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = w.to_vec();
    while !cur.is_empty() {
        let class = braid_class(a, &cur);
        let mut best: Option<(usize, &String, Vec<usize>)> = None;
        for (name, reduced) in simples {
            let len = reduced.iter().next().unwrap().len();
            if best.as_ref().is_some_and(|b| b.0 >= len) {
                continue;
            }
            if let Some(v) = class.iter().find(|v| v.len() >= len && reduced.contains(&v[v.len() - len..])) {
                best = Some((len, name, v[..v.len() - len].to_vec()));
            }
        }
        let (_, name, rest) = best.expect("some atom divides a non-empty word");
        out.push(name.clone());
        cur = rest;
    }
    out.reverse();
    out
}

fn atoms_of(a: &ArtinMonoid, w: &Word) -> Vec<usize> {
    w.reading().iter().flat_map(|&l| a.group.word(a.simple(l)).to_vec()).collect()
}

/// Longest chain of tuple-changing `f_i` applications from `t`.
fn longest_effective(
    table: &factorable::PhiTable,
    t: Vec<Pointed>,
    memo: &mut HashMap<Vec<Pointed>, usize>,
    active: &mut HashSet<Vec<Pointed>>,
) -> Result<usize, String> {
    if let Some(&d) = memo.get(&t) {
        return Ok(d);
    }
    if !active.insert(t.clone()) {
        return Err("cycle of effective rewritings".into());
    }
    let mut best = 0;
    for i in 1..t.len() {
        let u = table.phi_i(&t, i).unwrap();
        if u != t {
            best = best.max(1 + longest_effective(table, u, memo, active)?);
        }
    }
    active.remove(&t);
    memo.insert(t, best);
    Ok(best)
}

fn criterion_7() -> Verdict {
    let a = braid_positive(3).map_err(|e| e.to_string())?;
    let m = &a.monoid;
    let simples: Vec<(String, BTreeSet<Vec<usize>>)> = a
        .alphabet()
        .letters()
        .map(|l| (a.alphabet().name(l).to_string(), braid_class(&a, a.group.word(a.simple(l)))))
        .collect();
    let ball = m.nf_ball(3);
    for w in &ball {
        let expected = greedy_by_search(&a, &simples, &atoms_of(&a, w));
        let got: Vec<String> = w.reading().iter().map(|&l| a.alphabet().name(l).to_string()).collect();
        ensure(got == expected, format!("greedy form {got:?} vs search {expected:?}"))?;
    }
    let strong = check_strong_conditions(m, 3);
    ensure(strong.passed(), format!("strong conditions fail: {:?}", strong.violations))?;
    let sys = m.table.induced_rewriting_system();
    ensure(sys.minimality().is_strongly_minimal(), "rewriting system is not strongly minimal")?;
    let conf = sys.check_confluence_on_peaks(REWRITE_BUDGET);
    ensure(conf.all_joinable(), "a critical peak is not joinable")?;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let k = a.alphabet().len() as u32;
    for _ in 0..1000 {
        let len = rng.gen_range(1..=8);
        let reading: Vec<u32> = (0..len).map(|_| rng.gen_range(0..k)).collect();
        let w = Word::from_reading(&reading);
        for strat in [Strategy::RightmostFirst, Strategy::LeftmostFirst] {
            match sys.reduce(&w, REWRITE_BUDGET, &strat) {
                TerminationReport::Irreducible { trace } => {
                    ensure(*trace.end() == m.table.normal_form(&w), "irreducible word is not the normal form")?;
                }
                other => return Err(format!("no termination on {}: {other:?}", a.alphabet().render(&w))),
            }
        }
    }
    let mut worst = Vec::new();
    for n in 1..=3usize {
        let bound = effective_sequence_bound(n).map_err(|e| e.to_string())? as usize;
        let mut memo = HashMap::new();
        let mut longest = 0;
        let mut idx = vec![0u32; n + 1];
        loop {
            let t: Vec<Pointed> = idx.iter().map(|&l| Some(l)).collect();
            longest = longest.max(longest_effective(&m.table, t, &mut memo, &mut HashSet::new())?);
            let mut j = 0;
            while j <= n {
                idx[j] += 1;
                if idx[j] < k {
                    break;
                }
                idx[j] = 0;
                j += 1;
            }
            if j > n {
                break;
            }
        }
        ensure(longest <= bound, format!("effective sequence of length {longest} on {}-tuples exceeds {bound}", n + 1))?;
        worst.push(format!("{longest}<={bound}"));
    }
    Ok(format!("{} normal forms match search; effective lengths {}", ball.len(), worst.join(", ")))
}

fn all_fixture_checks<M>(name: &str, h: &M, lambda: &[Vec<IndexSequence>]) -> Result<usize, String>
where
    M: FactorableMonoid,
    M::Elem: Hash,
{
    let mut cells = 0;
    for n in 1..=4usize {
        for x in visy_basis(h, n) {
            if n <= 3 {
                cells += 1;
                let a = visy_differential_lambda(h, &x, &lambda[n - 1]);
                let b = visy_differential_coherent(h, &x).map_err(|e| format!("{name}: {e}"))?;
                let c = morse_differential_generic(&BarMatching(h), &x).map_err(|e| format!("{name}: {e}"))?;
                ensure(a == b && b == c, format!("{name}: differentials disagree on {x:?}"))?;
            }
            ensure(prp_sum(h, &x, &lambda[n - 1]).is_zero(), format!("{name}: cancellation fails on {x:?}"))?;
        }
    }
    visy_complex(h, 5).and_then(|cx| cx.check_d_squared()).map_err(|e| format!("{name}: {e}"))?;
    Ok(cells)
}

fn criterion_8() -> Verdict {
    let lambda: Vec<Vec<IndexSequence>> = (0..=4).map(|n| enumerate_small(n, true)).collect();
    let mut counts = vec![("appendix", all_fixture_checks("appendix", &appendix_monoid(), &lambda)?)];
    counts.push(("z2", all_fixture_checks("z2", &z2(), &lambda)?));
    counts.push(("cyclic-3", all_fixture_checks("cyclic-3", &cyclic(3).unwrap(), &lambda)?));
    counts.push(("free-abelian-2", all_fixture_checks("free-abelian-2", &free_abelian(2).unwrap(), &lambda)?));
    let b3 = braid_positive(3).unwrap();
    counts.push(("braid-3-positive", all_fixture_checks("braid-3-positive", &b3.monoid, &lambda)?));
    counts.push(("braid-3-group", all_fixture_checks("braid-3-group", &braid_group(3).unwrap(), &lambda)?));
    counts.push(("s3-transpositions", all_fixture_checks("s3-transpositions", &s3_transpositions(), &lambda)?));
    let total: usize = counts.iter().map(|c| c.1).sum();
    Ok(format!("{total} essential cells of degree <= 3 agree across {} fixtures", counts.len()))
}

/// Laurent polynomials in `t` with integer coefficients.
type Laurent = BTreeMap<i32, i64>;
type Mat = [[Laurent; 2]; 2];

fn lp(terms: &[(i32, i64)]) -> Laurent {
    terms.iter().copied().filter(|&(_, c)| c != 0).collect()
}

fn lp_mul(a: &Laurent, b: &Laurent) -> Laurent {
    let mut out = Laurent::new();
    for (&i, &x) in a {
        for (&j, &y) in b {
            *out.entry(i + j).or_insert(0) += x * y;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn lp_add(a: &Laurent, b: &Laurent) -> Laurent {
    let mut out = a.clone();
    for (&j, &y) in b {
        *out.entry(j).or_insert(0) += y;
    }
    out.retain(|_, c| *c != 0);
    out
}

fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let e = |i: usize, j: usize| lp_add(&lp_mul(&a[i][0], &b[0][j]), &lp_mul(&a[i][1], &b[1][j]));
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

fn mat_id() -> Mat {
    [[lp(&[(0, 1)]), lp(&[])], [lp(&[]), lp(&[(0, 1)])]]
}

/// Reduced Burau images of the two atoms and their inverses; faithful on
/// three-strand braids.
fn burau_atoms() -> [Mat; 4] {
    [
        [[lp(&[(1, -1)]), lp(&[(0, 1)])], [lp(&[]), lp(&[(0, 1)])]],
        [[lp(&[(0, 1)]), lp(&[])], [lp(&[(1, 1)]), lp(&[(1, -1)])]],
        [[lp(&[(-1, -1)]), lp(&[(-1, 1)])], [lp(&[]), lp(&[(0, 1)])]],
        [[lp(&[(0, 1)]), lp(&[])], [lp(&[(0, 1)]), lp(&[(-1, -1)])]],
    ]
}

fn criterion_9() -> Verdict {
    let g = braid_group(3).map_err(|e| e.to_string())?;
    let s = &g.structure;
    let a = &s.artin;
    let atoms = burau_atoms();
    let ensure_id = |m: &Mat| *m == mat_id();
    ensure(ensure_id(&mat_mul(&atoms[0], &atoms[2])) && ensure_id(&mat_mul(&atoms[1], &atoms[3])), "bad inverses")?;
    let word_mat = |w: &[usize], inv: bool| {
        let mut m = mat_id();
        if inv {
            for &x in w.iter().rev() {
                m = mat_mul(&m, &atoms[x + 2]);
            }
        } else {
            for &x in w {
                m = mat_mul(&m, &atoms[x]);
            }
        }
        m
    };
    // Independent Cayley-graph BFS over matrices.
    let mut gens: Vec<Mat> = Vec::new();
    for l in a.alphabet().letters() {
        gens.push(word_mat(a.group.word(a.simple(l)), false));
    }
    for l in a.alphabet().letters() {
        gens.push(word_mat(a.group.word(a.simple(l)), true));
    }
    let mut dist: HashMap<Mat, usize> = HashMap::from([(mat_id(), 0)]);
    let mut queue = VecDeque::from([mat_id()]);
    while let Some(m) = queue.pop_front() {
        let d = dist[&m];
        if d == 3 {
            continue;
        }
        for x in &gens {
            let y = mat_mul(&m, x);
            if !dist.contains_key(&y) {
                dist.insert(y.clone(), d + 1);
                queue.push_back(y);
            }
        }
    }
    let delta_inv = word_mat(a.group.word(a.group.longest()), true);
    let image = |x: &factorable::GroupElement| {
        let mut m = word_mat(&atoms_of(a, &x.w), false);
        for _ in 0..x.m {
            m = mat_mul(&m, &delta_inv);
        }
        m
    };
    let ball = Ball::new(&g, 3);
    ensure(ball.len() == dist.len(), format!("ball sizes {} vs {}", ball.len(), dist.len()))?;
    for x in &ball.elements {
        let d = dist.get(&image(x)).copied();
        ensure(d == Some(g.norm(x)), format!("norm of {} is {} but BFS gives {d:?}", g.render(x), g.norm(x)))?;
        let (xs, ys) = g.xy_form(x);
        ensure(xs.len() + ys.len() == g.norm(x), format!("normal form of {} is not geodesic", g.render(x)))?;
    }

    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let positives = a.monoid.nf_ball(3);
    let samples: Vec<(Word, u32)> =
        (0..200).map(|_| (positives[rng.gen_range(0..positives.len())].clone(), rng.gen_range(1..=3))).collect();
    let ne = norm_explicit_check(&g, &samples, 3);
    ensure(ne.passed(), format!("norm formula fails: {:?}", ne.violations))?;

    for (i, rep) in s.computation_rules_check().map_err(|e| e.to_string())?.iter().enumerate() {
        ensure(rep.passed(), format!("identity {} fails: {:?}", i + 1, rep.violations))?;
    }
    let h = validate_handle(&g, 3);
    ensure(h.passed(), format!("factorization map fails: {:?}", h.violations))?;
    let ge = check_graded_equality(&g, 3);
    ensure(ge.passed(), format!("graded equality fails: {:?}", ge.violations))?;
    let rp = check_recognition_principle(&g, 3);
    ensure(rp.passed(), format!("recognition fails: {:?}", rp.violations))?;
    Ok(format!("{} group elements geodesic; {} norm samples; identities hold", ball.len(), ne.checked))
}

fn run_cli(bin: &Path, args: &[&str]) -> (Vec<u8>, Option<i32>) {
    let out = Command::new(bin).args(args).output().expect("binary runs");
    (out.stdout, out.status.code())
}

fn criterion_10() -> Verdict {
    let bin = PathBuf::from(env!("CARGO_BIN_EXE_factorable"));
    let dir = std::env::temp_dir().join(format!("factorable-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let mut invocations: Vec<Vec<String>> = vec![
        vec!["fixtures".into(), "list".into()],
        vec!["lambda".into(), "3".into()],
    ];
    for name in FIXTURE_NAMES {
        let path = dir.join(format!("{name}.json"));
        std::fs::write(&path, fixture_spec(name).map_err(|e| e.to_string())?.to_json()).map_err(|e| e.to_string())?;
        let p = path.to_string_lossy().to_string();
        invocations.push(vec!["fixtures".into(), "export".into(), name.to_string()]);
        invocations.push(vec!["check".into(), p.clone()]);
        invocations.push(vec!["homology".into(), p.clone(), "--max-degree".into(), "3".into()]);
        let word = match *name {
            "appendix" => "a1 b1 c1 d1",
            "z2" => "t t t",
            "cyclic-3" => "t t^2 t",
            "free-abelian-2" => "a b a b",
            "braid-3-positive" => "a b ab ba",
            "braid-3-group" => "a b^-1 ab aba^-1",
            _ => "a b c a",
        };
        invocations.push(vec!["nf".into(), p.clone(), word.into()]);
        if matches!(*name, "appendix" | "free-abelian-2" | "braid-3-positive") {
            invocations.push(vec!["rewrite".into(), p.clone(), word.into(), "--trace".into()]);
        }
        if name.starts_with("braid") {
            for sub in ["structure", "qf"] {
                invocations.push(vec!["garside".into(), sub.into(), p.clone()]);
            }
            invocations.push(vec!["garside".into(), "nf".into(), p.clone(), "abab".into()]);
            invocations.push(vec!["garside".into(), "group-nf".into(), p.clone(), "a aba^-1 b".into()]);
        }
    }
    for args in &invocations {
        let a: Vec<&str> = args.iter().map(String::as_str).collect();
        let first = run_cli(&bin, &a);
        let second = run_cli(&bin, &a);
        ensure(first == second, format!("output differs for {args:?}"))?;
    }
    let _ = std::fs::remove_dir_all(&dir);
    Ok(format!("{} invocations byte-identical", invocations.len()))
}

type Criterion = (&'static str, fn() -> Verdict, Option<Duration>);

fn main() {
    let criteria: [Criterion; 10] = [
        ("appendix axioms and rewriting cycle", criterion_1, Some(LIMIT_1)),
        ("appendix right-cancellativity and gamma", criterion_2, Some(LIMIT_2)),
        ("appendix redundant chains terminate", criterion_3, Some(LIMIT_3)),
        ("small index sequences", criterion_4, Some(LIMIT_4)),
        ("Z/2 homology through degree 6", criterion_5, Some(LIMIT_5)),
        ("S_3 with transpositions", criterion_6, Some(LIMIT_6)),
        ("positive braids on three strands", criterion_7, Some(LIMIT_7)),
        ("three differentials agree", criterion_8, Some(LIMIT_8)),
        ("braid group on three strands", criterion_9, Some(LIMIT_9)),
        ("CLI determinism", criterion_10, None),
    ];
    let mut failed = 0;
    for (i, (name, f, limit)) in criteria.iter().enumerate() {
        let t0 = Instant::now();
        let verdict = f();
        let took = t0.elapsed();
        let verdict = match (verdict, limit) {
            (Ok(_), Some(l)) if took > *l => Err(format!("took {took:.2?}, limit {l:?}")),
            (v, _) => v,
        };
        match verdict {
            Ok(msg) => println!("PASS {:>2} {name}: {msg} [{took:.2?}]", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {msg} [{took:.2?}]", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
