use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use factorable::factorability::{check_graded_equality, check_recognition_principle, CheckReport};
use factorable::fixtures::{fixture_spec, FIXTURE_NAMES};
use factorable::foundation::{validate_handle, HandleReport};
use factorable::garside::{square_free_elements, validate_gaussian_hypotheses, GarsideStructure};
use factorable::indexseq::enumerate_small;
use factorable::morse::{homology, visy_complex};
use factorable::rewriting::{RewriteSystem, RewriteTrace, TerminationReport};
use factorable::{Error, FactorableMonoid, GarsideGroup, Loaded, MonoidSpec, Strategy};

#[derive(Parser, Debug)]
#[command(name = "factorable", version, about = "Factorable monoids: normal forms, rewriting, homology, Garside structures")]
struct Cli {
    /// Ball radius used by exhaustive checks.
    #[arg(long, global = true, default_value_t = 3)]
    radius: usize,
    /// Step budget for rewriting.
    #[arg(long, global = true, default_value_t = 10_000)]
    budget: usize,
    /// Top degree of the chain complex to build.
    #[arg(long = "max-degree", global = true, default_value_t = 4)]
    max_degree: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate a monoid spec against the axioms for its kind.
    Check { spec: PathBuf },
    /// Normal form of a word.
    Nf { spec: PathBuf, word: String },
    /// Rewrite a word with the induced rewriting system.
    Rewrite {
        spec: PathBuf,
        word: String,
        /// rightmost, leftmost or follow:P1,P2,...
        #[arg(long, default_value = "rightmost", value_parser = parse_strategy)]
        strategy: Strategy,
        /// Print every step.
        #[arg(long)]
        trace: bool,
    },
    /// Integral homology of the small (Morse) complex.
    Homology { spec: PathBuf },
    /// Right-most, reduced, small index sequences with entries up to n.
    Lambda { n: usize },
    /// Garside normal forms, group elements and structure maps.
    #[command(subcommand)]
    Garside(GarsideCommand),
    /// List or export the built-in example monoids.
    #[command(subcommand)]
    Fixtures(FixturesCommand),
}

#[derive(Subcommand, Debug)]
enum GarsideCommand {
    /// Greedy normal form of a positive word.
    Nf { spec: PathBuf, word: String },
    /// Normal form of a word with inverses (`x^-1`).
    GroupNf { spec: PathBuf, word: String },
    /// The fundamental element and the maps it induces on simples.
    Structure { spec: PathBuf },
    /// Square-free elements and their closure.
    Qf { spec: PathBuf },
}

#[derive(Subcommand, Debug)]
enum FixturesCommand {
    /// Names of the built-in fixtures.
    List,
    /// Print a fixture as a JSON monoid spec.
    Export { name: String },
}

fn parse_strategy(s: &str) -> Result<Strategy, String> {
    match s {
        "rightmost" => Ok(Strategy::RightmostFirst),
        "leftmost" => Ok(Strategy::LeftmostFirst),
        _ => {
            let list = s.strip_prefix("follow:").ok_or_else(|| format!("unknown strategy `{s}`"))?;
            list.split(',')
                .map(|p| p.trim().parse::<usize>().map_err(|e| format!("bad position `{p}`: {e}")))
                .collect::<Result<Vec<_>, _>>()
                .map(Strategy::FollowPositions)
        }
    }
}

/// Command failure with its exit status.
enum Failure {
    Usage(String),
    Semantic(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Json(_)
            | Error::Spec(_)
            | Error::UnknownLetter(_)
            | Error::InvalidAlphabet(_)
            | Error::InvalidTable(_)
            | Error::InvalidRule(_)
            | Error::AlphabetMismatch => Failure::Usage(e.to_string()),
            _ => Failure::Semantic(e.to_string()),
        }
    }
}

type Outcome = Result<(String, bool), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, ok)) => {
            print!("{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Semantic(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn load(path: &PathBuf) -> Result<Loaded, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    Ok(MonoidSpec::parse(&text)?.load()?)
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Check { spec } => check(cli, &load(spec)?),
        Command::Nf { spec, word } => nf(&load(spec)?, word),
        Command::Rewrite { spec, word, strategy, trace } => rewrite(cli, &load(spec)?, word, strategy, *trace),
        Command::Homology { spec } => homology_cmd(cli, &load(spec)?),
        Command::Lambda { n } => {
            let mut out = String::new();
            for s in enumerate_small(*n, true) {
                writeln!(out, "{s}").unwrap();
            }
            Ok((out, true))
        }
        Command::Garside(g) => garside(cli, g),
        Command::Fixtures(FixturesCommand::List) => {
            Ok((FIXTURE_NAMES.iter().map(|n| format!("{n}\n")).collect(), true))
        }
        Command::Fixtures(FixturesCommand::Export { name }) => {
            let spec = fixture_spec(name).map_err(|e| Failure::Usage(e.to_string()))?;
            Ok((spec.to_json(), true))
        }
    }
}

fn report_line(out: &mut String, name: &str, checked: usize, witnesses: &[String]) -> bool {
    if witnesses.is_empty() {
        writeln!(out, "{name}: ok ({checked} checked)").unwrap();
        true
    } else {
        let shown: Vec<&str> = witnesses.iter().take(5).map(String::as_str).collect();
        writeln!(out, "{name}: FAILED ({} of {checked}) e.g. {}", witnesses.len(), shown.join("; ")).unwrap();
        false
    }
}

fn handle_checks<M: FactorableMonoid>(out: &mut String, h: &M, radius: usize) -> bool {
    let HandleReport { checked, violations } = validate_handle(h, radius);
    let v: Vec<String> = violations.iter().map(|(a, w)| format!("{a} at {w}")).collect();
    let mut ok = report_line(out, "factorization map", checked, &v);
    let CheckReport { checked, violations } = check_graded_equality(h, radius);
    ok &= report_line(out, "graded equality", checked, &violations);
    let CheckReport { checked, violations } = check_recognition_principle(h, radius);
    ok &= report_line(out, "recognition", checked, &violations);
    ok
}

fn check(cli: &Cli, m: &Loaded) -> Outcome {
    let mut out = String::new();
    let ok = match m {
        Loaded::Phi(p) => {
            let rep = p.table.check_local_factorability();
            let mut ok = true;
            for a in &rep.axioms {
                ok &= report_line(&mut out, &a.name, a.checked, &a.witnesses);
            }
            ok
        }
        Loaded::Finite(f) => {
            let r = (0..f.table.len()).map(|x| f.table.norm(x)).max().unwrap_or(0);
            handle_checks(&mut out, f, cli.radius.max(r))
        }
        Loaded::Artin(a) => {
            let rep = a.monoid.table.check_local_factorability();
            let mut ok = true;
            for ax in &rep.axioms {
                ok &= report_line(&mut out, &ax.name, ax.checked, &ax.witnesses);
            }
            let g = validate_gaussian_hypotheses(a, cli.radius)?;
            ok &= report_line(&mut out, "gaussian hypotheses", g.checked, &g.violations);
            ok
        }
        Loaded::Garside(g) => handle_checks(&mut out, g, cli.radius),
    };
    Ok((out, ok))
}

fn nf(m: &Loaded, word: &str) -> Outcome {
    let line = match m {
        Loaded::Phi(p) => {
            let w = p.parse(word)?;
            p.render(&w)
        }
        Loaded::Finite(f) => {
            let x = f.parse(word)?;
            f.render(&x)
        }
        Loaded::Artin(a) => {
            let w = a.parse_positive(word)?;
            a.monoid.render(&w)
        }
        Loaded::Garside(g) => {
            let x = g.parse(word)?;
            g.render(&x)
        }
    };
    Ok((format!("{line}\n"), true))
}

fn render_trace(out: &mut String, sys: &RewriteSystem, t: &RewriteTrace) {
    for s in &t.steps {
        writeln!(out, "pos={} rule={} word={}", s.pos, sys.render_rule(s.rule), sys.alphabet().render(&s.word)).unwrap();
    }
}

fn rewrite(cli: &Cli, m: &Loaded, word: &str, strategy: &Strategy, trace: bool) -> Outcome {
    let table = match m {
        Loaded::Phi(p) => &p.table,
        Loaded::Artin(a) => &a.monoid.table,
        _ => return Err(Failure::Semantic("rewrite needs a phi-table or coxeter spec".into())),
    };
    let sys = table.induced_rewriting_system();
    let w = table.alphabet().parse_word(word)?;
    let al = sys.alphabet();
    let mut out = String::new();
    let ok = match sys.reduce(&w, cli.budget, strategy) {
        TerminationReport::Irreducible { trace: t } => {
            if trace {
                render_trace(&mut out, &sys, &t);
            }
            writeln!(out, "irreducible after {} steps: {}", t.steps.len(), al.render(t.end())).unwrap();
            true
        }
        TerminationReport::CycleFound { prefix, cycle } => {
            if trace {
                render_trace(&mut out, &sys, &prefix);
                render_trace(&mut out, &sys, &cycle);
            }
            writeln!(
                out,
                "cycle of length {} after {} steps at: {}",
                cycle.steps.len(),
                prefix.steps.len(),
                al.render(&cycle.start)
            )
            .unwrap();
            true
        }
        TerminationReport::BudgetExhausted { trace: t } => {
            if trace {
                render_trace(&mut out, &sys, &t);
            }
            writeln!(out, "budget of {} steps exhausted at: {}", cli.budget, al.render(t.end())).unwrap();
            false
        }
    };
    Ok((out, ok))
}

fn homology_lines<M: FactorableMonoid>(h: &M, max_degree: usize) -> Result<String, Failure>
where
    M::Elem: std::hash::Hash,
{
    let cx = visy_complex(h, max_degree)?;
    let mut out = String::new();
    for g in homology(&cx, max_degree)? {
        writeln!(out, "{g}").unwrap();
    }
    Ok(out)
}

fn homology_cmd(cli: &Cli, m: &Loaded) -> Outcome {
    let d = cli.max_degree;
    let out = match m {
        Loaded::Phi(p) => homology_lines(p, d)?,
        Loaded::Finite(f) => homology_lines(f, d)?,
        Loaded::Artin(a) => homology_lines(&a.monoid, d)?,
        Loaded::Garside(g) => homology_lines(g, d)?,
    };
    Ok((out, true))
}

fn structure_of(m: Loaded) -> Result<GarsideStructure, Failure> {
    match m {
        Loaded::Artin(a) => Ok(GarsideStructure::new(a)),
        Loaded::Garside(g) => Ok(g.structure),
        _ => Err(Failure::Semantic("garside commands need a coxeter or garside spec".into())),
    }
}

fn garside(cli: &Cli, cmd: &GarsideCommand) -> Outcome {
    match cmd {
        GarsideCommand::Nf { spec, word } => {
            let s = structure_of(load(spec)?)?;
            let w = s.artin.parse_positive(word)?;
            Ok((format!("{}\n", s.artin.monoid.render(&w)), true))
        }
        GarsideCommand::GroupNf { spec, word } => {
            let g = GarsideGroup::new(structure_of(load(spec)?)?);
            let x = g.parse(word)?;
            let al = g.structure.artin.alphabet();
            let out = format!(
                "{}\nw = {}, m = {}, norm = {}\n",
                g.render(&x),
                al.render(&x.w),
                x.m,
                g.norm(&x)
            );
            Ok((out, true))
        }
        GarsideCommand::Structure { spec } => {
            let s = structure_of(load(spec)?)?;
            let al = s.artin.alphabet().clone();
            let mut out = String::new();
            writeln!(out, "delta = {}", al.name(s.delta)).unwrap();
            writeln!(out, "simples = {}", al.names().join(" ")).unwrap();
            for l in al.letters() {
                let p = Some(l);
                writeln!(
                    out,
                    "{}: star = {}, alpha = {}, phi = {}",
                    al.name(l),
                    al.render_pointed(s.star(p)),
                    al.render_pointed(s.alpha(p)),
                    al.render_pointed(s.phi(p))
                )
                .unwrap();
            }
            let names = ["complement of a product", "complement into a product", "rgcd with delta", "product split", "rgcd product"];
            let mut ok = true;
            for (name, rep) in names.iter().zip(s.computation_rules_check()?) {
                ok &= report_line(&mut out, name, rep.checked, &rep.violations);
            }
            let rep = s.incremental_prefix_check(cli.radius);
            ok &= report_line(&mut out, "incremental prefix", rep.checked, &rep.violations);
            Ok((out, ok))
        }
        GarsideCommand::Qf { spec } => {
            let s = structure_of(load(spec)?)?;
            let q = square_free_elements(&s.artin)?;
            let mut out = String::new();
            writeln!(out, "{} square-free elements: {}", q.elements.len(), q.elements.join(" ")).unwrap();
            writeln!(out, "closed under left lcm and complement: {}", if q.closed { "yes" } else { "no" }).unwrap();
            Ok((out, q.closed))
        }
    }
}
